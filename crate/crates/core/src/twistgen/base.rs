//! The untwisted configuration: disk curves of a handlebody and the auxiliary
//! curve `gamma`, as a diagram with the disks as family A and `gamma` as family B.
//!
//! Cutting the surface along `D_1..D_g` leaves a sphere with `2g` holes; hole
//! `(i,-)` is the side of `D_i` facing its minus side. `gamma` is recorded by its
//! crossing sequence: a `+` crossing passes from the minus side of the disk to its
//! plus side.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::diagram::{CurveWord, Diagram, DiagramError, Family, Side, SideRef, Sign};

pub const AUX_NAME: &str = "gamma";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaseError {
    #[error("hole set {0} does not span a tree of auxiliary arcs")]
    NotATree(String),
    #[error("curves {0} and {1} are neither nested nor disjoint")]
    Overlapping(String, String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Crossing sequence of `gamma` on the genus-`g` surface: for each handle `i` in
/// turn it crosses `D_i` forwards, `D_{i+1}` backwards and `D_i` backwards (indices
/// mod `g`, 0-based). Each disk curve meets `gamma` three times, in the order of
/// their appearance along `gamma`.
pub fn gamma_sequence(g: usize) -> Vec<(usize, Sign)> {
    (0..g)
        .flat_map(|i| [(i, Sign::Pos), ((i + 1) % g, Sign::Neg), (i, Sign::Neg)])
        .collect()
}

/// Disk curves `D1..Dg` and `gamma` crossing in the given sequence; each disk
/// curve visits its crossings in the order they occur along `gamma`.
pub fn disks_and_aux(g: usize, sequence: &[(usize, Sign)]) -> Result<Diagram, DiagramError> {
    let name = |t: usize| format!("x{}", t + 1);
    let mut words = vec![Vec::new(); g];
    for (t, &(d, _)) in sequence.iter().enumerate() {
        words[d].push(name(t));
    }
    let a = words
        .into_iter()
        .enumerate()
        .map(|(i, w)| CurveWord::new(disk_name(i), w))
        .collect();
    let b = vec![CurveWord::new(AUX_NAME, (0..sequence.len()).map(name))];
    let signs = sequence
        .iter()
        .enumerate()
        .map(|(t, &(_, s))| (name(t), s))
        .collect();
    Diagram::from_words(a, b, &signs)
}

pub fn disk_name(i: usize) -> String {
    format!("D{}", i + 1)
}

/// An arc of `gamma` between consecutive crossings with family A, from position
/// `t` of the auxiliary word to position `t + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Arc {
    from: SideRef,
    to: SideRef,
}

/// Reads the holes and arcs off a diagram with a single family-B curve.
struct CutSphere<'a> {
    d: &'a Diagram,
    /// For each crossing: its position along the aux curve.
    pos: Vec<usize>,
    arcs: Vec<Arc>,
}

impl<'a> CutSphere<'a> {
    fn new(d: &'a Diagram) -> Self {
        let aux = &d.curves(Family::B)[0].word;
        let mut pos = vec![0; d.crossing_count()];
        for (t, &x) in aux.iter().enumerate() {
            pos[x] = t;
        }
        let mut disk = vec![0; d.crossing_count()];
        for (i, c) in d.curves(Family::A).iter().enumerate() {
            for &x in &c.word {
                disk[x] = i;
            }
        }
        let exit = |x: usize| {
            let side = match d.crossings()[x].sign {
                Sign::Pos => Side::Plus,
                Sign::Neg => Side::Minus,
            };
            SideRef::new(disk[x], side)
        };
        let arcs = (0..aux.len())
            .map(|t| {
                let x = aux[t];
                let y = aux[(t + 1) % aux.len()];
                Arc {
                    from: exit(x),
                    to: SideRef::new(disk[y], exit(y).side.flip()),
                }
            })
            .collect();
        CutSphere { d, pos, arcs }
    }

    fn exit_side(&self, x: usize) -> Side {
        match self.d.crossings()[x].sign {
            Sign::Pos => Side::Plus,
            Sign::Neg => Side::Minus,
        }
    }

    /// Whether the arc touching hole `h` at crossing `x` leaves `x` (rather than
    /// arriving there).
    fn leaves(&self, h: SideRef, x: usize) -> bool {
        self.exit_side(x) == h.side
    }

    /// Index of the arc touching hole `h` at crossing `x`.
    fn arc_at(&self, h: SideRef, x: usize) -> usize {
        let n = self.arcs.len();
        if self.leaves(h, x) {
            self.pos[x]
        } else {
            (self.pos[x] + n - 1) % n
        }
    }

    /// Crossings on the boundary of hole `h`, in the order a curve running
    /// alongside with the hole on its left meets them.
    fn hole_boundary(&self, h: SideRef) -> Vec<usize> {
        let mut w = self.d.curves(Family::A)[h.curve].word.clone();
        if h.side == Side::Plus {
            w.reverse();
        }
        w
    }
}

/// A crossing of a new curve with the aux curve, placed next to an existing
/// crossing with a disk curve.
#[derive(Clone, Copy, Debug)]
struct Pass {
    /// Aux crossing the pass sits next to.
    near: usize,
    /// Whether the aux curve meets the pass right after `near`.
    after: bool,
    /// Nesting depth: smaller sits closer to `near`.
    depth: usize,
    sign: Sign,
}

/// Adds to a disks-and-aux diagram the boundary curve of a regular neighbourhood
/// of each given tree in the cut sphere. A tree is a set of holes together with
/// every aux arc joining two of them; these arcs must form a tree. The new curve
/// keeps its tree on its plus side. Trees must be nested or disjoint.
pub fn with_tree_curves(
    d: &Diagram,
    trees: &[(String, Vec<SideRef>)],
) -> Result<Diagram, BaseError> {
    let cut = CutSphere::new(d);
    let sets: Vec<BTreeSet<SideRef>> = trees.iter().map(|(_, h)| h.iter().copied().collect()).collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (s, t) = (&sets[i], &sets[j]);
            if !(s.is_subset(t) || t.is_subset(s) || s.is_disjoint(t)) {
                return Err(BaseError::Overlapping(trees[i].0.clone(), trees[j].0.clone()));
            }
        }
    }

    let mut passes: Vec<Vec<Pass>> = Vec::new();
    for (k, ((name, _), holes)) in trees.iter().zip(&sets).enumerate() {
        let inner: Vec<usize> = (0..cut.arcs.len())
            .filter(|&t| holes.contains(&cut.arcs[t].from) && holes.contains(&cut.arcs[t].to))
            .collect();
        if holes.is_empty() || inner.len() + 1 != holes.len() {
            return Err(BaseError::NotATree(name.clone()));
        }
        // nesting depth: number of other trees inside this one
        let depth = (0..sets.len())
            .filter(|&j| j != k && sets[j].is_subset(holes) && sets[j] != *holes)
            .count();
        let mut out = Vec::new();
        let start = *holes.iter().next().expect("nonempty");
        let mut visited_corners = BTreeSet::new();
        let mut hole = start;
        let mut boundary = cut.hole_boundary(hole);
        let mut idx = 0;
        loop {
            let x = boundary[idx];
            if !visited_corners.insert((hole, x)) {
                break;
            }
            let t = cut.arc_at(hole, x);
            if inner.contains(&t) {
                // walk along the arc to its other end and continue past it
                let arc = cut.arcs[t];
                let aux = &cut.d.curves(Family::B)[0].word;
                let (other, y) = if cut.leaves(hole, x) {
                    (arc.to, aux[(t + 1) % aux.len()])
                } else {
                    (arc.from, aux[t])
                };
                hole = other;
                boundary = cut.hole_boundary(hole);
                idx = boundary.iter().position(|&z| z == y).expect("arc end on hole");
                idx = (idx + 1) % boundary.len();
                continue;
            }
            let leaving = cut.leaves(hole, x);
            out.push(Pass {
                near: x,
                after: leaving,
                depth,
                sign: if leaving { Sign::Neg } else { Sign::Pos },
            });
            idx = (idx + 1) % boundary.len();
        }
        let toured: BTreeSet<SideRef> = visited_corners.iter().map(|&(h, _)| h).collect();
        if toured != *holes {
            return Err(BaseError::NotATree(name.clone()));
        }
        passes.push(out);
    }
    rebuild(d, trees, &passes)
}

fn rebuild(d: &Diagram, trees: &[(String, Vec<SideRef>)], passes: &[Vec<Pass>]) -> Result<Diagram, BaseError> {
    let old_name = |x: usize| d.crossings()[x].name.clone();
    let new_name = |k: usize, j: usize| format!("{}.{}", trees[k].0, j + 1);
    // aux word with passes spliced in next to their anchor crossings
    let mut before: BTreeMap<usize, Vec<(usize, String)>> = BTreeMap::new();
    let mut after: BTreeMap<usize, Vec<(usize, String)>> = BTreeMap::new();
    let mut signs: std::collections::HashMap<String, Sign> = d.sign_map();
    for (k, ps) in passes.iter().enumerate() {
        for (j, p) in ps.iter().enumerate() {
            let entry = if p.after { &mut after } else { &mut before };
            entry.entry(p.near).or_default().push((p.depth, new_name(k, j)));
            signs.insert(new_name(k, j), p.sign);
        }
    }
    let mut aux = Vec::new();
    for &x in &d.curves(Family::B)[0].word {
        if let Some(v) = before.get_mut(&x) {
            // deeper curves lie farther from the anchor
            v.sort_by(|a, b| b.0.cmp(&a.0));
            aux.extend(v.iter().map(|(_, n)| n.clone()));
        }
        aux.push(old_name(x));
        if let Some(v) = after.get_mut(&x) {
            v.sort_by(|a, b| a.0.cmp(&b.0));
            aux.extend(v.iter().map(|(_, n)| n.clone()));
        }
    }
    let mut a = d.words(Family::A);
    for (k, ps) in passes.iter().enumerate() {
        a.push(CurveWord::new(
            trees[k].0.clone(),
            (0..ps.len()).map(|j| new_name(k, j)),
        ));
    }
    let b = vec![CurveWord::new(d.curves(Family::B)[0].name.clone(), aux)];
    Ok(Diagram::from_words(a, b, &signs)?.renumbered())
}
