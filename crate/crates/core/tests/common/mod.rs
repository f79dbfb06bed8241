#![allow(dead_code)]

use std::path::PathBuf;

use heegaard_rc::criteria::CriteriaGraph;
use heegaard_rc::twistgen::base::disks_and_aux;
use heegaard_rc::twistgen::{dehn_twist, gamma_sequence, MulticurveMap, TwistSpec};
use heegaard_rc::{Diagram, Sign};
use rand::seq::SliceRandom;
use rand::Rng;

/// Compares `content` with the stored file; `UPDATE_GOLDEN=1` rewrites it.
pub fn golden(name: &str, content: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, content).unwrap();
        return;
    }
    let stored = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(stored, content, "golden mismatch for {name}");
}

/// A random twisted diagram that validates, or `None` for a rejected draw.
/// Half the draws use arbitrary crossing sequences, half relabel the standard one.
pub fn random_twisted(rng: &mut impl Rng) -> Option<Diagram> {
    let g = rng.gen_range(2..=4);
    let seq: Vec<(usize, Sign)> = if rng.gen() {
        let len = rng.gen_range(2 * g..=4 * g);
        (0..len)
            .map(|_| (rng.gen_range(0..g), if rng.gen() { Sign::Pos } else { Sign::Neg }))
            .collect()
    } else {
        let mut perm: Vec<usize> = (0..g).collect();
        perm.shuffle(rng);
        let mut s: Vec<(usize, Sign)> = gamma_sequence(g).into_iter().map(|(i, s)| (perm[i], s)).collect();
        let r = rng.gen_range(0..s.len());
        s.rotate_left(r);
        s
    };
    let base = disks_and_aux(g, &seq).ok()?;
    if base.genus() != g {
        return None;
    }
    let l = *[2i64, 3, -2, -3].choose(rng).unwrap();
    let d = dehn_twist(&MulticurveMap::new(base).ok()?, TwistSpec::new(l).ok()?).ok()?;
    d.validate_disk_systems().passes().then_some(d)
}

/// Connected after deleting `removed`, by depth-first search from scratch.
pub fn connected_without(n: usize, edges: &[(usize, usize)], removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !removed.contains(&y) && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// Brute force: connected, and connected after deleting any single vertex.
pub fn brute_two_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    connected_without(n, edges, &[]) && (0..n).all(|v| connected_without(n, edges, &[v]))
}

/// Brute force: connected after deleting one vertex from each block.
pub fn brute_doubly(n: usize, edges: &[(usize, usize)], minus: &[bool]) -> bool {
    (0..n).filter(|&u| minus[u]).all(|u| {
        (0..n)
            .filter(|&w| !minus[w])
            .all(|w| connected_without(n, edges, &[u, w]))
    })
}

pub fn random_graph(rng: &mut impl Rng) -> (usize, Vec<(usize, usize)>, Vec<bool>) {
    let n = rng.gen_range(2..=12);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    let minus = (0..n).map(|_| rng.gen()).collect();
    (n, edges, minus)
}

pub fn to_criteria_graph(n: usize, edges: &[(usize, usize)]) -> CriteriaGraph<usize> {
    let mut g = CriteriaGraph::new(0..n);
    for (u, w) in edges {
        g.add_edge(u, w);
    }
    g
}
