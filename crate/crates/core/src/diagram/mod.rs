//! Combinatorial maps of two transverse curve families on a closed oriented surface.
//!
//! A diagram is stored as a signed Gauss code. Every curve is a cyclic word of
//! crossings (its traversal order is its orientation) and every crossing carries
//! a sign that fixes the local rotation:
//!
//! * at a `+` crossing the counterclockwise dart order is (A-out, B-out, A-in, B-in),
//! * at a `-` crossing it is (A-out, B-in, A-in, B-out).
//!
//! The surface is whatever surface this rotation system spans; its genus is
//! derived, never supplied. The plus side of a curve is its left side.

mod cut;
mod reduce;
mod validate;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cut::CutComponent;
pub use validate::{ValidationIssue, ValidationReport};

/// One of the two sides of an oriented curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Minus,
    Plus,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Minus, Side::Plus];

    pub fn flip(self) -> Side {
        match self {
            Side::Minus => Side::Plus,
            Side::Plus => Side::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Side::Minus => '-',
            Side::Plus => '+',
        }
    }
}

impl std::ops::Neg for Side {
    type Output = Side;

    fn neg(self) -> Side {
        self.flip()
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Which of the two curve families a curve belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::A => Family::B,
            Family::B => Family::A,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
        }
    }
}

/// Crossing sign; see the module docs for the rotation it encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// A side of a curve of one family, by 0-based curve index.
///
/// Displayed 1-based, e.g. `(3,-)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideRef {
    pub curve: usize,
    pub side: Side,
}

impl SideRef {
    pub fn new(curve: usize, side: Side) -> Self {
        SideRef { curve, side }
    }
}

impl fmt::Display for SideRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.curve + 1, self.side)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("family {0} has no curves")]
    EmptyFamily(Family),
    #[error("curve name `{0}` used more than once")]
    DuplicateCurve(String),
    #[error("crossing `{crossing}` occurs more than once in family {family}")]
    DuplicateOccurrence { crossing: String, family: Family },
    #[error("crossing `{crossing}` never occurs in family {family}")]
    MissingOccurrence { crossing: String, family: Family },
    #[error("crossing `{0}` has no sign")]
    MissingSign(String),
    #[error("curve `{0}` meets no curve of the other family (disconnected diagram unsupported)")]
    IsolatedCurve(String),
    #[error("disconnected diagram unsupported")]
    Disconnected,
    #[error("curve `{0}` eliminated by bigon reduction (non-essential configuration)")]
    CurveEliminated(String),
    #[error("bigon reduction leaves a complementary region that is not a disk (genus {before} -> {after})")]
    NotFilling { before: usize, after: usize },
    #[error("disk index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
}

/// A named curve together with its cyclic word of crossing names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveWord {
    pub name: String,
    pub word: Vec<String>,
}

impl CurveWord {
    pub fn new(name: impl Into<String>, word: impl IntoIterator<Item = impl Into<String>>) -> Self {
        CurveWord {
            name: name.into(),
            word: word.into_iter().map(Into::into).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    /// Crossing indices in traversal order.
    pub word: Vec<usize>,
}

/// Position of a crossing occurrence: curve index and offset in its word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub curve: usize,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub name: String,
    pub sign: Sign,
    pub a: Slot,
    pub b: Slot,
}

pub(crate) const A_OUT: usize = 0;
pub(crate) const B_OUT: usize = 1;
pub(crate) const A_IN: usize = 2;
pub(crate) const B_IN: usize = 3;

/// Half-edge at a crossing, encoded as `4 * crossing + kind`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn crossing(self) -> usize {
        self.0 / 4
    }

    fn kind(self) -> usize {
        self.0 % 4
    }

    pub fn family(self) -> Family {
        if self.kind() % 2 == 0 {
            Family::A
        } else {
            Family::B
        }
    }

    pub fn is_outgoing(self) -> bool {
        self.kind() < 2
    }
}

/// An edge of the map: the arc of a curve from `word[pos]` to `word[pos + 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub family: Family,
    pub curve: usize,
    pub pos: usize,
}

/// A complementary region, traced as an orbit of the face permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    /// For each dart, the curve side on which the face interior lies.
    pub sides: Vec<(Family, SideRef)>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    pub fn sides_of(&self, family: Family) -> impl Iterator<Item = SideRef> + '_ {
        self.sides
            .iter()
            .filter(move |(f, _)| *f == family)
            .map(|(_, s)| *s)
    }
}

#[derive(Clone, Debug)]
pub struct Diagram {
    a: Vec<Curve>,
    b: Vec<Curve>,
    crossings: Vec<Crossing>,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
    genus: usize,
}

pub(crate) fn natural_cmp(x: &str, y: &str) -> Ordering {
    natord::compare(x, y).then_with(|| x.cmp(y))
}

impl Diagram {
    /// Build a diagram from named words. `signs` maps every crossing name to its sign.
    ///
    /// Curves of each family are reordered by natural order of their names; that order
    /// defines the 1-based disk indices used throughout the crate.
    pub fn from_words(
        a: Vec<CurveWord>,
        b: Vec<CurveWord>,
        signs: &HashMap<String, Sign>,
    ) -> Result<Diagram, DiagramError> {
        let mut a = a;
        let mut b = b;
        a.sort_by(|x, y| natural_cmp(&x.name, &y.name));
        b.sort_by(|x, y| natural_cmp(&x.name, &y.name));

        let mut seen_names = HashMap::new();
        for c in a.iter().chain(b.iter()) {
            if seen_names.insert(c.name.clone(), ()).is_some() {
                return Err(DiagramError::DuplicateCurve(c.name.clone()));
            }
        }

        let mut index: HashMap<String, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut a_seen: Vec<bool> = Vec::new();
        for c in &a {
            for x in &c.word {
                match index.get(x) {
                    Some(_) => {
                        return Err(DiagramError::DuplicateOccurrence {
                            crossing: x.clone(),
                            family: Family::A,
                        })
                    }
                    None => {
                        index.insert(x.clone(), names.len());
                        names.push(x.clone());
                        a_seen.push(true);
                    }
                }
            }
        }
        let mut b_seen = vec![false; names.len()];
        for c in &b {
            for x in &c.word {
                match index.get(x) {
                    None => {
                        return Err(DiagramError::MissingOccurrence {
                            crossing: x.clone(),
                            family: Family::A,
                        })
                    }
                    Some(&i) if b_seen[i] => {
                        return Err(DiagramError::DuplicateOccurrence {
                            crossing: x.clone(),
                            family: Family::B,
                        })
                    }
                    Some(&i) => b_seen[i] = true,
                }
            }
        }
        if let Some(i) = b_seen.iter().position(|s| !s) {
            return Err(DiagramError::MissingOccurrence {
                crossing: names[i].clone(),
                family: Family::B,
            });
        }
        let mut sign_list = Vec::with_capacity(names.len());
        for x in &names {
            match signs.get(x) {
                Some(&s) => sign_list.push(s),
                None => return Err(DiagramError::MissingSign(x.clone())),
            }
        }

        let to_curves = |ws: Vec<CurveWord>| -> Vec<Curve> {
            ws.into_iter()
                .map(|c| Curve {
                    word: c.word.iter().map(|x| index[x]).collect(),
                    name: c.name,
                })
                .collect()
        };
        let a = to_curves(a);
        let b = to_curves(b);
        Diagram::from_parts(a, b, names, sign_list)
    }

    /// Build from indexed words. Every crossing index in `0..names.len()` must occur
    /// exactly once per family. Curve order is taken as given.
    pub(crate) fn from_parts(
        a: Vec<Curve>,
        b: Vec<Curve>,
        names: Vec<String>,
        signs: Vec<Sign>,
    ) -> Result<Diagram, DiagramError> {
        if a.is_empty() {
            return Err(DiagramError::EmptyFamily(Family::A));
        }
        if b.is_empty() {
            return Err(DiagramError::EmptyFamily(Family::B));
        }
        for c in a.iter().chain(b.iter()) {
            if c.word.is_empty() {
                return Err(DiagramError::IsolatedCurve(c.name.clone()));
            }
        }
        let n = names.len();
        let mut a_slot: Vec<Option<Slot>> = vec![None; n];
        let mut b_slot: Vec<Option<Slot>> = vec![None; n];
        for (family, curves, slots) in [
            (Family::A, &a, &mut a_slot),
            (Family::B, &b, &mut b_slot),
        ] {
            for (ci, c) in curves.iter().enumerate() {
                for (pos, &x) in c.word.iter().enumerate() {
                    if slots[x].is_some() {
                        return Err(DiagramError::DuplicateOccurrence {
                            crossing: names[x].clone(),
                            family,
                        });
                    }
                    slots[x] = Some(Slot { curve: ci, pos });
                }
            }
        }
        let mut crossings = Vec::with_capacity(n);
        for (x, name) in names.into_iter().enumerate() {
            let a = a_slot[x].ok_or_else(|| DiagramError::MissingOccurrence {
                crossing: name.clone(),
                family: Family::A,
            })?;
            let b = b_slot[x].ok_or_else(|| DiagramError::MissingOccurrence {
                crossing: name.clone(),
                family: Family::B,
            })?;
            crossings.push(Crossing {
                name,
                sign: signs[x],
                a,
                b,
            });
        }

        let mut uf = UnionFind::<usize>::new(n);
        for c in a.iter().chain(b.iter()) {
            for w in c.word.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        if (1..n).any(|x| !uf.equiv(0, x)) {
            return Err(DiagramError::Disconnected);
        }

        let mut d = Diagram {
            a,
            b,
            crossings,
            faces: Vec::new(),
            dart_face: Vec::new(),
            genus: 0,
        };
        d.trace_faces();
        let euler = d.faces.len() as i64 - n as i64;
        assert!(
            euler <= 2 && euler % 2 == 0,
            "corrupted map: Euler characteristic {euler}"
        );
        d.genus = ((2 - euler) / 2) as usize;
        Ok(d)
    }

    fn trace_faces(&mut self) {
        let darts = 4 * self.crossings.len();
        let mut dart_face = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Face {
                darts: Vec::new(),
                sides: Vec::new(),
            };
            let mut d = Dart(start);
            loop {
                dart_face[d.0] = id;
                face.darts.push(d);
                face.sides.push(self.dart_side(d));
                d = self.rotate(self.opposite(d));
                if d.0 == start {
                    break;
                }
            }
            faces.push(face);
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    pub fn curves(&self, family: Family) -> &[Curve] {
        match family {
            Family::A => &self.a,
            Family::B => &self.b,
        }
    }

    /// Number of curves in a family (`n` for A, `n*` for B).
    pub fn curve_count(&self, family: Family) -> usize {
        self.curves(family).len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.dart_face[d.0]
    }

    pub fn curve_index(&self, name: &str) -> Option<(Family, usize)> {
        for family in [Family::A, Family::B] {
            if let Some(i) = self.curves(family).iter().position(|c| c.name == name) {
                return Some((family, i));
            }
        }
        None
    }

    pub(crate) fn slot(&self, x: usize, family: Family) -> Slot {
        match family {
            Family::A => self.crossings[x].a,
            Family::B => self.crossings[x].b,
        }
    }

    /// Rotation permutation: next dart counterclockwise around the crossing.
    pub fn rotate(&self, d: Dart) -> Dart {
        let x = d.crossing();
        let k = match self.crossings[x].sign {
            Sign::Pos => (d.kind() + 1) % 4,
            Sign::Neg => (d.kind() + 3) % 4,
        };
        Dart(4 * x + k)
    }

    /// Edge involution: the dart at the other end of the same edge.
    pub fn opposite(&self, d: Dart) -> Dart {
        let family = d.family();
        let slot = self.slot(d.crossing(), family);
        let word = &self.curves(family)[slot.curve].word;
        let len = word.len();
        let (pos, kind) = match d.kind() {
            A_OUT => ((slot.pos + 1) % len, A_IN),
            A_IN => ((slot.pos + len - 1) % len, A_OUT),
            B_OUT => ((slot.pos + 1) % len, B_IN),
            _ => ((slot.pos + len - 1) % len, B_OUT),
        };
        Dart(4 * word[pos] + kind)
    }

    /// Face permutation (rotation after the edge involution).
    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.rotate(self.opposite(d))
    }

    /// Faces lie to the right of the traversed edge, so an outgoing dart sees the
    /// minus side and an incoming dart the plus side.
    fn dart_side(&self, d: Dart) -> (Family, SideRef) {
        let family = d.family();
        let slot = self.slot(d.crossing(), family);
        let side = if d.is_outgoing() { Side::Minus } else { Side::Plus };
        (family, SideRef::new(slot.curve, side))
    }

    pub fn dart_edge(&self, d: Dart) -> Edge {
        let family = d.family();
        let slot = self.slot(d.crossing(), family);
        let len = self.curves(family)[slot.curve].word.len();
        let pos = if d.is_outgoing() {
            slot.pos
        } else {
            (slot.pos + len - 1) % len
        };
        Edge {
            family,
            curve: slot.curve,
            pos,
        }
    }

    /// Faces on the (minus, plus) sides of an edge.
    pub fn edge_faces(&self, e: Edge) -> (usize, usize) {
        let word = &self.curves(e.family)[e.curve].word;
        let from = word[e.pos];
        let to = word[(e.pos + 1) % word.len()];
        let (out, inc) = match e.family {
            Family::A => (A_OUT, A_IN),
            Family::B => (B_OUT, B_IN),
        };
        (
            self.face_of(Dart(4 * from + out)),
            self.face_of(Dart(4 * to + inc)),
        )
    }

    pub fn edges(&self, family: Family) -> impl Iterator<Item = Edge> + '_ {
        self.curves(family)
            .iter()
            .enumerate()
            .flat_map(move |(curve, c)| {
                (0..c.word.len()).map(move |pos| Edge {
                    family,
                    curve,
                    pos,
                })
            })
    }

    /// Number of crossings shared by two named curves.
    pub fn intersection_number(&self, c1: &str, c2: &str) -> Result<usize, DiagramError> {
        let (f1, i1) = self
            .curve_index(c1)
            .ok_or_else(|| DiagramError::UnknownCurve(c1.to_string()))?;
        let (f2, i2) = self
            .curve_index(c2)
            .ok_or_else(|| DiagramError::UnknownCurve(c2.to_string()))?;
        if f1 == f2 {
            return Ok(0);
        }
        let (ia, ib) = if f1 == Family::A { (i1, i2) } else { (i2, i1) };
        Ok(self
            .crossings
            .iter()
            .filter(|x| x.a.curve == ia && x.b.curve == ib)
            .count())
    }

    /// Matrix of crossing counts, rows indexed by family A, columns by family B.
    pub fn intersection_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.b.len()]; self.a.len()];
        for x in &self.crossings {
            m[x.a.curve][x.b.curve] += 1;
        }
        m
    }

    fn names(&self) -> Vec<String> {
        self.crossings.iter().map(|x| x.name.clone()).collect()
    }

    fn signs(&self) -> Vec<Sign> {
        self.crossings.iter().map(|x| x.sign).collect()
    }

    /// Exchange the two families. Every crossing sign flips, since the dart
    /// order read from the new A-out is the opposite convention.
    pub fn swap_roles(&self) -> Diagram {
        let signs = self.signs().into_iter().map(Sign::flip).collect();
        Diagram::from_parts(self.b.clone(), self.a.clone(), self.names(), signs)
            .expect("swapping families preserves well-formedness")
    }

    /// Reverse the orientation of one curve. Its crossings flip sign and its
    /// side labels exchange; the underlying map is unchanged.
    pub fn reverse_curve(&self, family: Family, curve: usize) -> Diagram {
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        let target = match family {
            Family::A => &mut a[curve],
            Family::B => &mut b[curve],
        };
        target.word.reverse();
        let mut signs = self.signs();
        for &x in &target.word {
            signs[x] = signs[x].flip();
        }
        Diagram::from_parts(a, b, self.names(), signs)
            .expect("reversing a curve preserves well-formedness")
    }

    /// Rename crossings to `x1, x2, ...` in order of first appearance along the
    /// family-A curves.
    pub fn renumbered(&self) -> Diagram {
        let mut order = vec![usize::MAX; self.crossings.len()];
        let mut next = 0;
        for c in &self.a {
            for &x in &c.word {
                order[x] = next;
                next += 1;
            }
        }
        let remap = |cs: &[Curve]| -> Vec<Curve> {
            cs.iter()
                .map(|c| Curve {
                    name: c.name.clone(),
                    word: c.word.iter().map(|&x| order[x]).collect(),
                })
                .collect()
        };
        let mut signs = vec![Sign::Pos; self.crossings.len()];
        for (x, c) in self.crossings.iter().enumerate() {
            signs[order[x]] = c.sign;
        }
        let names = (1..=self.crossings.len()).map(|i| format!("x{i}")).collect();
        Diagram::from_parts(remap(&self.a), remap(&self.b), names, signs)
            .expect("renumbering preserves well-formedness")
    }

    /// Named words of one family, as stored.
    pub fn words(&self, family: Family) -> Vec<CurveWord> {
        self.curves(family)
            .iter()
            .map(|c| CurveWord {
                name: c.name.clone(),
                word: c
                    .word
                    .iter()
                    .map(|&x| self.crossings[x].name.clone())
                    .collect(),
            })
            .collect()
    }

    pub fn sign_map(&self) -> HashMap<String, Sign> {
        self.crossings
            .iter()
            .map(|x| (x.name.clone(), x.sign))
            .collect()
    }

    /// A labeling-independent form: two diagrams with the same curve names are
    /// isomorphic (same curves, same map) iff their canonical forms are equal.
    pub fn canonical_form(&self) -> CanonicalForm {
        let curves: Vec<(Family, usize)> = (0..self.a.len())
            .map(|i| (Family::A, i))
            .chain((0..self.b.len()).map(|i| (Family::B, i)))
            .collect();
        let first = &self.a[0].word;
        let mut best: Option<CanonicalForm> = None;
        for start in 0..first.len() {
            let mut label = vec![usize::MAX; self.crossings.len()];
            let mut next = 0usize;
            let mut done = vec![false; curves.len()];
            let mut out: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); curves.len()];
            let emit = |ci: usize, rot: usize, label: &mut Vec<usize>, next: &mut usize| {
                let (family, i) = curves[ci];
                let word = &self.curves(family)[i].word;
                let len = word.len();
                let mut seq = Vec::with_capacity(len);
                for k in 0..len {
                    let x = word[(rot + k) % len];
                    if label[x] == usize::MAX {
                        label[x] = *next;
                        *next += 1;
                    }
                    seq.push((label[x], self.crossings[x].sign));
                }
                seq
            };
            out[0] = emit(0, start, &mut label, &mut next);
            done[0] = true;
            while done.iter().any(|d| !d) {
                // next curve: smallest index containing an already labeled crossing
                let mut pick = None;
                for (ci, &(family, i)) in curves.iter().enumerate() {
                    if done[ci] {
                        continue;
                    }
                    let word = &self.curves(family)[i].word;
                    if let Some((rot, _)) = word
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| label[x] != usize::MAX)
                        .min_by_key(|(_, &x)| label[x])
                    {
                        pick = Some((ci, rot));
                        break;
                    }
                }
                let (ci, rot) = pick.expect("connected diagram");
                out[ci] = emit(ci, rot, &mut label, &mut next);
                done[ci] = true;
            }
            let form = CanonicalForm {
                curves: curves
                    .iter()
                    .zip(out)
                    .map(|(&(family, i), seq)| (family, self.curves(family)[i].name.clone(), seq))
                    .collect(),
            };
            if best.as_ref().is_none_or(|b| form < *b) {
                best = Some(form);
            }
        }
        best.expect("family A is nonempty")
    }

    /// Number of faces of each degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in &self.faces {
            *h.entry(f.degree()).or_insert(0) += 1;
        }
        h
    }
}

/// See [`Diagram::canonical_form`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub curves: Vec<(Family, String, Vec<(usize, Sign)>)>,
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn single_crossing_torus() {
        let d = torus();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.faces().len(), 1);
        assert_eq!(d.faces()[0].degree(), 4);
        assert_eq!(d.genus(), 1);
        let f = &d.faces()[0];
        let mut a: Vec<_> = f.sides_of(Family::A).collect();
        a.sort();
        assert_eq!(a, vec![SideRef::new(0, Side::Minus), SideRef::new(0, Side::Plus)]);
    }

    #[test]
    fn two_crossings_without_bigon() {
        let d = torus_two();
        assert_eq!(d.genus(), 1);
        let degrees: Vec<_> = d.faces().iter().map(Face::degree).collect();
        assert_eq!(degrees, vec![4, 4]);
    }

    #[test]
    fn opposite_signs_make_bigons() {
        let d = bigon_pair();
        assert_eq!(d.genus(), 0);
        assert!(d.faces().iter().all(|f| f.degree() == 2));
    }

    #[test]
    fn duplicate_occurrence_rejected() {
        let err = try_build(
            &[("a", &["x1", "x1"])],
            &[("b", &["x1"])],
            &[("x1", Sign::Pos)],
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::DuplicateOccurrence { family: Family::A, .. }));
    }

    #[test]
    fn missing_and_isolated() {
        let err = try_build(
            &[("a", &["x1", "x2"])],
            &[("b", &["x1"])],
            &[("x1", Sign::Pos), ("x2", Sign::Pos)],
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::MissingOccurrence { family: Family::B, .. }));
        let err = try_build(
            &[("a", &["x1"]), ("c", &[])],
            &[("b", &["x1"])],
            &[("x1", Sign::Pos)],
        )
        .unwrap_err();
        assert_eq!(err, DiagramError::IsolatedCurve("c".into()));
        let err = try_build(&[("a", &["x1"])], &[], &[("x1", Sign::Pos)]).unwrap_err();
        assert!(matches!(err, DiagramError::MissingOccurrence { .. }));
    }

    #[test]
    fn disconnected_rejected() {
        let err = try_build(
            &[("a", &["x1"]), ("c", &["x2"])],
            &[("b", &["x1"]), ("d", &["x2"])],
            &[("x1", Sign::Pos), ("x2", Sign::Pos)],
        )
        .unwrap_err();
        assert_eq!(err, DiagramError::Disconnected);
    }

    #[test]
    fn swap_is_involution() {
        let d = torus_two();
        let s = d.swap_roles();
        assert_eq!(s.curves(Family::A)[0].name, "b");
        assert_eq!(s.genus(), d.genus());
        assert_eq!(s.swap_roles().canonical_form(), d.canonical_form());
    }

    #[test]
    fn reversal_keeps_map() {
        let d = torus_two();
        let r = d.reverse_curve(Family::A, 0);
        assert_eq!(r.genus(), 1);
        assert_eq!(r.degree_histogram(), d.degree_histogram());
        assert!(r.crossings().iter().all(|x| x.sign == Sign::Neg));
    }

    #[test]
    fn natural_curve_order() {
        let d = build(
            &[("D10", &["x1"]), ("D2", &["x2"])],
            &[("E", &["x1", "x2"])],
            &[("x1", Sign::Pos), ("x2", Sign::Pos)],
        );
        assert_eq!(d.curves(Family::A)[0].name, "D2");
    }
}
