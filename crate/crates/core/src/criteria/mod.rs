//! Rectangle condition and double rectangle condition.
//!
//! For a diagram with families A (disks `D_1..D_n`) and B (disks `D*_1..D*_n*`):
//!
//! * `G(k, l, u, w)` has vertex set `A*_l`; two vertices are adjacent when a
//!   rectangle face has A-sides `{u, w}` and those two B-sides.
//! * `G_k` has vertex set `A_k`; `u, w` are adjacent when `G(k, l, u, w)` is
//!   2-connected for every `l`.
//! * `H(l, d, e-, e+)` has vertex set `A*_l`; two vertices are adjacent when a
//!   composed rectangle with axis `D_d`, ends `e-`, `e+` has those two B-sides.
//! * `H_d` has vertex set `{-} x Lambda(d,-)  U  {+} x Lambda(d,+)`; same-tag vertices
//!   are joined as in `G_k`, opposite-tag vertices when `H(l, d, e-, e+)` is
//!   2-connected for every `l`.
//!
//! The rectangle condition asks every `G_k` to be 2-connected. The double
//! rectangle condition asks every `H_d` to be doubly 2-connected with respect to
//! its tag partition, for the diagram and for the diagram with families swapped.

pub mod graph;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::diagram::{CutComponent, Diagram, Family, Side, SideRef, ValidationReport};
use crate::rectangles::{composed_rectangles, rectangle_faces, SidePair};
pub use graph::{CriteriaGraph, GraphError};

pub const STRONGLY_IRREDUCIBLE_NOTE: &str =
    "rectangle condition holds: the Heegaard splitting is strongly irreducible";
pub const GOERITZ_FINITE_NOTE: &str =
    "double rectangle condition holds: the Goeritz group is finite";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("invalid diagram: {}", .0.issues.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(ValidationReport),
    #[error("component index {index} out of range 1..={count}")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("disk index {index} out of range 1..={count}")]
    DiskOutOfRange { index: usize, count: usize },
    #[error("{side} is not a boundary side of the required component")]
    NotInComponent { side: SideRef },
}

/// Vertex of an `H_d` graph: a side tagged with the side of `D_d` it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedSide {
    pub kappa: Side,
    pub side: SideRef,
}

impl fmt::Display for TaggedSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.kappa, self.side.curve + 1, self.side.side)
    }
}

/// Which way round the families were read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Family A plays the role of `H`.
    Original,
    /// Families exchanged: family B plays the role of `H`.
    Swapped,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Original => write!(f, "original"),
            Direction::Swapped => write!(f, "swapped"),
        }
    }
}

/// A rectangle or composed-rectangle type that would have supplied a missing edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MissingType {
    /// `G(k, l, u, w)` is not 2-connected at component `l`.
    Rectangle { a_sides: SidePair, l: usize },
    /// `H(l, d, e-, e+)` is not 2-connected at component `l`.
    Composed { end_minus: SideRef, axis: usize, end_plus: SideRef, l: usize },
}

impl fmt::Display for MissingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MissingType::Rectangle { a_sides, l } => {
                write!(f, "rectangles of type ({};*) fail at l={l}", a_sides)
            }
            MissingType::Composed { end_minus, axis, end_plus, l } => write!(
                f,
                "composed rectangles of type ({},{},{};*) fail at l={l}",
                end_minus,
                axis + 1,
                end_plus
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `G_k` is not 2-connected.
    Rectangle {
        direction: Direction,
        k: usize,
        /// `None` when `G_k` is already disconnected.
        cut_vertex: Option<SideRef>,
        missing: Vec<MissingType>,
    },
    /// `H_d` loses connectivity after deleting one vertex from each block.
    DoubleRectangle {
        direction: Direction,
        d: usize,
        removed: (TaggedSide, TaggedSide),
        missing: Vec<MissingType>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Rectangle { direction, k, cut_vertex, missing } => {
                match cut_vertex {
                    Some(v) => write!(f, "[{direction}] G_{k} is disconnected by deleting {v}")?,
                    None => write!(f, "[{direction}] G_{k} is disconnected")?,
                }
                for m in missing {
                    write!(f, "; {m}")?;
                }
                Ok(())
            }
            Witness::DoubleRectangle { direction, d, removed, missing } => {
                write!(
                    f,
                    "[{direction}] H_{d} is disconnected by deleting {} and {}",
                    removed.0, removed.1
                )?;
                for m in missing {
                    write!(f, "; {m}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn from_witnesses(witnesses: Vec<Witness>, notes: Vec<String>) -> Self {
        Verdict {
            holds: witnesses.is_empty(),
            witnesses,
            notes,
        }
    }
}

/// Precomputed cut components and rectangle tables for one reading direction.
#[derive(Clone, Debug)]
pub struct Analysis {
    a_components: Vec<CutComponent>,
    b_components: Vec<CutComponent>,
    rectangles: BTreeMap<SidePair, BTreeSet<SidePair>>,
    composed: BTreeMap<(usize, SideRef, SideRef), BTreeSet<SidePair>>,
    n: usize,
}

impl Analysis {
    pub fn new(d: &Diagram) -> Self {
        let mut rectangles: BTreeMap<SidePair, BTreeSet<SidePair>> = BTreeMap::new();
        for (_, ty) in rectangle_faces(d) {
            rectangles.entry(ty.a_sides).or_default().insert(ty.b_sides);
        }
        let mut composed: BTreeMap<(usize, SideRef, SideRef), BTreeSet<SidePair>> = BTreeMap::new();
        for c in composed_rectangles(d, Family::A) {
            composed
                .entry((c.ty.axis, c.ty.end_minus, c.ty.end_plus))
                .or_default()
                .insert(c.ty.b_sides);
        }
        Analysis {
            a_components: d.cut_components(Family::A),
            b_components: d.cut_components(Family::B),
            rectangles,
            composed,
            n: d.curve_count(Family::A),
        }
    }

    pub fn a_components(&self) -> &[CutComponent] {
        &self.a_components
    }

    pub fn b_components(&self) -> &[CutComponent] {
        &self.b_components
    }

    fn a_component(&self, k: usize) -> Result<&CutComponent, CriteriaError> {
        k.checked_sub(1)
            .and_then(|i| self.a_components.get(i))
            .ok_or(CriteriaError::ComponentOutOfRange {
                index: k,
                count: self.a_components.len(),
            })
    }

    fn b_component(&self, l: usize) -> Result<&CutComponent, CriteriaError> {
        l.checked_sub(1)
            .and_then(|i| self.b_components.get(i))
            .ok_or(CriteriaError::ComponentOutOfRange {
                index: l,
                count: self.b_components.len(),
            })
    }

    fn component_of(&self, s: SideRef) -> &CutComponent {
        self.a_components
            .iter()
            .find(|c| c.contains(s))
            .expect("every side lies in one component")
    }

    /// `k_{d,kappa}` and `Lambda_{d,kappa}`; `d` is 1-based.
    pub fn lambda(&self, d: usize, kappa: Side) -> Result<(usize, BTreeSet<SideRef>), CriteriaError> {
        if d == 0 || d > self.n {
            return Err(CriteriaError::DiskOutOfRange { index: d, count: self.n });
        }
        let s = SideRef::new(d - 1, kappa);
        let c = self.component_of(s);
        let mut rest = c.sides.clone();
        rest.remove(&s);
        Ok((c.index, rest))
    }

    fn graph_on(&self, l: usize, pairs: Option<&BTreeSet<SidePair>>) -> CriteriaGraph<SideRef> {
        let comp = &self.b_components[l - 1];
        let mut g = CriteriaGraph::new(comp.sides.iter().copied());
        for p in pairs.into_iter().flatten() {
            if !p.is_degenerate() {
                g.add_edge(&p.0, &p.1);
            }
        }
        g
    }

    /// `G(k, l, u, w)`.
    pub fn graph_g(
        &self,
        k: usize,
        l: usize,
        u: SideRef,
        w: SideRef,
    ) -> Result<CriteriaGraph<SideRef>, CriteriaError> {
        let comp = self.a_component(k)?;
        self.b_component(l)?;
        for s in [u, w] {
            if !comp.contains(s) {
                return Err(CriteriaError::NotInComponent { side: s });
            }
        }
        Ok(self.graph_on(l, self.rectangles.get(&SidePair::new(u, w))))
    }

    /// Smallest `l` at which `G(k, l, u, w)` is not 2-connected.
    fn first_failing_g(&self, u: SideRef, w: SideRef) -> Option<usize> {
        let pairs = self.rectangles.get(&SidePair::new(u, w));
        (1..=self.b_components.len()).find(|&l| !self.graph_on(l, pairs).is_two_connected())
    }

    /// `H(l, d, e-, e+)`; `d` is 1-based.
    pub fn graph_h(
        &self,
        l: usize,
        d: usize,
        end_minus: SideRef,
        end_plus: SideRef,
    ) -> Result<CriteriaGraph<SideRef>, CriteriaError> {
        self.b_component(l)?;
        let (_, lm) = self.lambda(d, Side::Minus)?;
        let (_, lp) = self.lambda(d, Side::Plus)?;
        if !lm.contains(&end_minus) {
            return Err(CriteriaError::NotInComponent { side: end_minus });
        }
        if !lp.contains(&end_plus) {
            return Err(CriteriaError::NotInComponent { side: end_plus });
        }
        Ok(self.graph_on(l, self.composed.get(&(d - 1, end_minus, end_plus))))
    }

    fn first_failing_h(&self, d: usize, end_minus: SideRef, end_plus: SideRef) -> Option<usize> {
        let pairs = self.composed.get(&(d - 1, end_minus, end_plus));
        (1..=self.b_components.len()).find(|&l| !self.graph_on(l, pairs).is_two_connected())
    }

    /// `G_k`.
    pub fn graph_gk(&self, k: usize) -> Result<CriteriaGraph<SideRef>, CriteriaError> {
        let comp = self.a_component(k)?;
        let sides: Vec<SideRef> = comp.sides.iter().copied().collect();
        let mut g = CriteriaGraph::new(sides.iter().copied());
        for (i, &u) in sides.iter().enumerate() {
            for &w in &sides[i + 1..] {
                if self.first_failing_g(u, w).is_none() {
                    g.add_edge(&u, &w);
                }
            }
        }
        Ok(g)
    }

    /// `H_d` with its tag partition; `d` is 1-based.
    pub fn graph_hd(&self, d: usize) -> Result<CriteriaGraph<TaggedSide>, CriteriaError> {
        let (_, lm) = self.lambda(d, Side::Minus)?;
        let (_, lp) = self.lambda(d, Side::Plus)?;
        let tag = |kappa: Side, set: &BTreeSet<SideRef>| -> Vec<TaggedSide> {
            set.iter().map(|&side| TaggedSide { kappa, side }).collect()
        };
        let minus = tag(Side::Minus, &lm);
        let plus = tag(Side::Plus, &lp);
        let mut g = CriteriaGraph::new(minus.iter().chain(plus.iter()).copied());
        for block in [&minus, &plus] {
            for (i, u) in block.iter().enumerate() {
                for w in &block[i + 1..] {
                    if self.first_failing_g(u.side, w.side).is_none() {
                        g.add_edge(u, w);
                    }
                }
            }
        }
        for u in &minus {
            for w in &plus {
                if self.first_failing_h(d, u.side, w.side).is_none() {
                    g.add_edge(u, w);
                }
            }
        }
        let minus_set: BTreeSet<TaggedSide> = minus.into_iter().collect();
        Ok(g.with_partition(&minus_set))
    }

    fn rectangle_witnesses(&self, direction: Direction) -> Vec<Witness> {
        let mut out = Vec::new();
        for comp in &self.a_components {
            let g = self.graph_gk(comp.index).expect("valid component index");
            let cut_vertex = match g.cut_vertex() {
                Ok(None) => continue,
                Ok(Some(v)) => Some(*v),
                Err(()) => None,
            };
            let removed: Vec<&SideRef> = cut_vertex.iter().collect();
            let missing = self.missing_g_edges(&g, &removed);
            out.push(Witness::Rectangle {
                direction,
                k: comp.index,
                cut_vertex,
                missing,
            });
        }
        out
    }

    /// For a split graph, the absent edges between the piece holding the first
    /// surviving vertex and the rest, each with the first failing `l`.
    fn missing_g_edges(&self, g: &CriteriaGraph<SideRef>, removed: &[&SideRef]) -> Vec<MissingType> {
        let Some(start) = g.vertices().iter().find(|v| !removed.contains(v)) else {
            return Vec::new();
        };
        let piece = g.reachable_without(start, removed);
        let mut out = Vec::new();
        for u in &piece {
            for w in g.vertices() {
                if piece.contains(w) || removed.contains(&w) {
                    continue;
                }
                if let Some(l) = self.first_failing_g(*u, *w) {
                    out.push(MissingType::Rectangle {
                        a_sides: SidePair::new(*u, *w),
                        l,
                    });
                }
            }
        }
        out
    }

    fn double_witnesses(&self, direction: Direction) -> (Vec<Witness>, Vec<String>) {
        let mut out = Vec::new();
        let mut notes = Vec::new();
        for d in 1..=self.n {
            let g = self.graph_hd(d).expect("valid disk index");
            let pair = g.disconnecting_pair().expect("partitioned");
            let Some((a, b)) = pair else {
                if !g.is_two_connected() {
                    notes.push(format!(
                        "[{direction}] H_{d} is doubly 2-connected but not 2-connected"
                    ));
                }
                continue;
            };
            let (a, b) = (*a, *b);
            let removed = [&a, &b];
            let mut missing = Vec::new();
            if let Some(start) = g.vertices().iter().find(|v| !removed.contains(v)) {
                let piece = g.reachable_without(start, &removed);
                for u in &piece {
                    for w in g.vertices() {
                        if piece.contains(w) || removed.contains(&w) {
                            continue;
                        }
                        let (x, y) = if u.kappa <= w.kappa { (u, w) } else { (w, u) };
                        if x.kappa == y.kappa {
                            if let Some(l) = self.first_failing_g(x.side, y.side) {
                                missing.push(MissingType::Rectangle {
                                    a_sides: SidePair::new(x.side, y.side),
                                    l,
                                });
                            }
                        } else if let Some(l) = self.first_failing_h(d, x.side, y.side) {
                            missing.push(MissingType::Composed {
                                end_minus: x.side,
                                axis: d - 1,
                                end_plus: y.side,
                                l,
                            });
                        }
                    }
                }
            }
            out.push(Witness::DoubleRectangle {
                direction,
                d,
                removed: (a, b),
                missing,
            });
        }
        (out, notes)
    }
}

fn require_valid(d: &Diagram) -> Result<(), CriteriaError> {
    let report = d.validate_disk_systems();
    if report.passes() {
        Ok(())
    } else {
        Err(CriteriaError::Invalid(report))
    }
}

/// `G(k, l, u, w)` for family A as `H`.
pub fn graph_g(
    d: &Diagram,
    k: usize,
    l: usize,
    u: SideRef,
    w: SideRef,
) -> Result<CriteriaGraph<SideRef>, CriteriaError> {
    Analysis::new(d).graph_g(k, l, u, w)
}

pub fn graph_gk(d: &Diagram, k: usize) -> Result<CriteriaGraph<SideRef>, CriteriaError> {
    Analysis::new(d).graph_gk(k)
}

pub fn graph_h(
    d: &Diagram,
    l: usize,
    disk: usize,
    end_minus: SideRef,
    end_plus: SideRef,
) -> Result<CriteriaGraph<SideRef>, CriteriaError> {
    Analysis::new(d).graph_h(l, disk, end_minus, end_plus)
}

pub fn graph_hd(d: &Diagram, disk: usize) -> Result<CriteriaGraph<TaggedSide>, CriteriaError> {
    Analysis::new(d).graph_hd(disk)
}

/// Rectangle condition with family A as `H`. The diagram must pass validation.
pub fn rectangle_condition(d: &Diagram) -> Result<Verdict, CriteriaError> {
    require_valid(d)?;
    Ok(rectangle_condition_unchecked(d, Direction::Original))
}

pub(crate) fn rectangle_condition_unchecked(d: &Diagram, direction: Direction) -> Verdict {
    let witnesses = Analysis::new(d).rectangle_witnesses(direction);
    let notes = if witnesses.is_empty() {
        vec![STRONGLY_IRREDUCIBLE_NOTE.to_string()]
    } else {
        Vec::new()
    };
    Verdict::from_witnesses(witnesses, notes)
}

/// Rectangle condition with family B as `H`. Reported separately; nothing is
/// assumed about its relation to the original direction.
pub fn rectangle_condition_swapped(d: &Diagram) -> Result<Verdict, CriteriaError> {
    require_valid(d)?;
    Ok(rectangle_condition_unchecked(&d.swap_roles(), Direction::Swapped))
}

/// Double rectangle condition, checked in both directions.
pub fn double_rectangle_condition(d: &Diagram) -> Result<Verdict, CriteriaError> {
    require_valid(d)?;
    let (mut witnesses, mut notes) = Analysis::new(d).double_witnesses(Direction::Original);
    let (w, n) = Analysis::new(&d.swap_roles()).double_witnesses(Direction::Swapped);
    witnesses.extend(w);
    notes.extend(n);
    if witnesses.is_empty() {
        notes.push(GOERITZ_FINITE_NOTE.to_string());
    }
    Ok(Verdict::from_witnesses(witnesses, notes))
}
