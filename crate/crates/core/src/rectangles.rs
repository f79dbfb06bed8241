//! Typed rectangles and composed rectangles among the faces of a diagram.

use std::fmt;

use crate::diagram::{Diagram, Family, SideRef};

/// Unordered pair of curve sides, stored sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SidePair(pub SideRef, pub SideRef);

impl SidePair {
    pub fn new(x: SideRef, y: SideRef) -> Self {
        if x <= y {
            SidePair(x, y)
        } else {
            SidePair(y, x)
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.0 == self.1
    }
}

impl fmt::Display for SidePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.0, self.1)
    }
}

/// Type of a rectangle face: its two sides on family-A curves and its two sides on
/// family-B curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RectangleType {
    pub a_sides: SidePair,
    pub b_sides: SidePair,
}

impl fmt::Display for RectangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.a_sides, self.b_sides)
    }
}

/// Type of two rectangles glued along an arc of an axis curve, the first on the
/// minus side of the axis and the second on its plus side.
///
/// When the axis family is B the roles of the families are transposed: `axis`,
/// `end_minus` and `end_plus` refer to family B and `b_sides` to family A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComposedRectangleType {
    pub axis: usize,
    pub end_minus: SideRef,
    pub end_plus: SideRef,
    pub b_sides: SidePair,
}

impl fmt::Display for ComposedRectangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{};{})",
            self.end_minus,
            self.axis + 1,
            self.end_plus,
            self.b_sides
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComposedRectangle {
    pub minus_face: usize,
    pub plus_face: usize,
    pub ty: ComposedRectangleType,
}

fn face_type(d: &Diagram, face: usize, axis: Family) -> Option<(SidePair, SidePair)> {
    let f = &d.faces()[face];
    if f.degree() != 4 {
        return None;
    }
    let a: Vec<SideRef> = f.sides_of(axis).collect();
    let b: Vec<SideRef> = f.sides_of(axis.other()).collect();
    Some((SidePair::new(a[0], a[1]), SidePair::new(b[0], b[1])))
}

/// Every face of degree four with its type, in face order.
pub fn rectangle_faces(d: &Diagram) -> Vec<(usize, RectangleType)> {
    (0..d.faces().len())
        .filter_map(|i| {
            face_type(d, i, Family::A).map(|(a_sides, b_sides)| (i, RectangleType { a_sides, b_sides }))
        })
        .collect()
}

/// Every pair of distinct rectangle faces sharing an edge of an `axis` curve.
pub fn composed_rectangles(d: &Diagram, axis: Family) -> Vec<ComposedRectangle> {
    let mut out = Vec::new();
    for e in d.edges(axis) {
        let (minus_face, plus_face) = d.edge_faces(e);
        if minus_face == plus_face {
            continue;
        }
        let (Some(outer_minus), Some(outer_plus)) = (
            outer_side(d, minus_face, e),
            outer_side(d, plus_face, e),
        ) else {
            continue;
        };
        let (_, b_sides) = face_type(d, minus_face, axis).expect("rectangle");
        debug_assert_eq!(
            Some(b_sides),
            face_type(d, plus_face, axis).map(|(_, b)| b),
            "glued rectangles share their transverse sides"
        );
        out.push(ComposedRectangle {
            minus_face,
            plus_face,
            ty: ComposedRectangleType {
                axis: e.curve,
                end_minus: outer_minus,
                end_plus: outer_plus,
                b_sides,
            },
        });
    }
    out
}

/// For a rectangle face bordering edge `e`, the side of its other axis-family edge.
fn outer_side(d: &Diagram, face: usize, e: crate::diagram::Edge) -> Option<SideRef> {
    let f = &d.faces()[face];
    if f.degree() != 4 {
        return None;
    }
    let mut outer = None;
    let mut seen = false;
    for (dart, (family, side)) in f.darts.iter().zip(&f.sides) {
        if *family != e.family {
            continue;
        }
        if !seen && d.dart_edge(*dart) == e {
            seen = true;
        } else {
            outer = Some(*side);
        }
    }
    debug_assert!(seen);
    outer
}
