//! Named reference configurations used by tests, examples and the CLI.

use std::collections::{HashMap, HashSet};

use crate::criteria::CriteriaGraph;
use crate::diagram::{CurveWord, Diagram, Family, Sign};
use crate::twistgen::build_twisted;

/// The six-vertex graph that is doubly 2-connected for the partition
/// `({1,2,4,5},{3,6})` but not for `({1,2,3},{4,5,6})`: deleting 2 and 5
/// isolates 1.
pub fn bipartition_graph() -> CriteriaGraph<usize> {
    let mut g = CriteriaGraph::new(1..=6);
    for (u, w) in [(1, 2), (1, 5), (2, 3), (2, 6), (3, 4), (4, 5), (4, 6)] {
        g.add_edge(&u, &w);
    }
    g
}

/// Genus-3 diagram with three family-A curves in which one cut component is
/// touched by `D3` on both sides: its boundary sides are
/// `{(1,-),(2,+),(3,-),(3,+)}`; the other component is a twice-holed torus.
///
/// Obtained from the maximal genus-3, power-2 configuration by keeping the
/// family-A curves `D5, D2, D3` (renamed `D1, D2, D3`) and restricting every
/// family-B curve to the surviving crossings.
pub fn two_sided_diagram() -> Diagram {
    let d = build_twisted(3, 2, true).expect("maximal genus-3 configuration");
    let a = d.words(Family::A);
    let kept: Vec<CurveWord> = ["D5", "D2", "D3"]
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let w = a.iter().find(|w| w.name == *n).expect("curve present");
            CurveWord::new(format!("D{}", i + 1), w.word.clone())
        })
        .collect();
    let live: HashSet<&String> = kept.iter().flat_map(|w| &w.word).collect();
    let b = d
        .words(Family::B)
        .into_iter()
        .map(|w| CurveWord::new(w.name, w.word.into_iter().filter(|x| live.contains(x))))
        .filter(|w| !w.word.is_empty())
        .collect();
    let signs: HashMap<String, Sign> = d
        .sign_map()
        .into_iter()
        .filter(|(x, _)| live.contains(x))
        .collect();
    Diagram::from_words(kept.clone(), b, &signs)
        .expect("restriction is a diagram")
        .renumbered()
}

/// Every diagram fixture, by name. The generated ones are the twisted
/// configurations at small genus and power.
pub fn diagrams() -> Vec<(String, Diagram)> {
    let mut out = Vec::new();
    let sign = |s: Sign| [("x1".to_string(), s)].into_iter().collect::<HashMap<_, _>>();
    out.push((
        "torus".to_string(),
        Diagram::from_words(
            vec![CurveWord::new("a", ["x1"])],
            vec![CurveWord::new("b", ["x1"])],
            &sign(Sign::Pos),
        )
        .expect("torus"),
    ));
    for (g, l, maximal) in [(2, 2, false), (3, 2, false), (3, -2, false), (3, 3, false), (3, 2, true)] {
        let name = format!("twisted-g{g}-l{l}{}", if maximal { "-maximal" } else { "" });
        out.push((name, build_twisted(g, l, maximal).expect("generator parameters")));
    }
    out.push(("two-sided".to_string(), two_sided_diagram()));
    out
}
