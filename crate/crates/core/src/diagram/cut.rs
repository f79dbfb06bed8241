use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;

use super::{Diagram, DiagramError, Family, Side, SideRef};

/// A component of the surface cut along the curves of one family.
///
/// Faces are glued across edges of the other family; the component's boundary
/// circles are the sides of the cutting curves that it touches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutComponent {
    /// 1-based, in order of the smallest boundary side.
    pub index: usize,
    pub family: Family,
    pub faces: Vec<usize>,
    /// Boundary sides; each side of a cutting curve is one boundary circle.
    pub sides: BTreeSet<SideRef>,
    pub euler: i64,
    pub planar: bool,
}

impl CutComponent {
    pub fn boundary_circles(&self) -> usize {
        self.sides.len()
    }

    pub fn genus(&self) -> i64 {
        (2 - self.euler - self.boundary_circles() as i64) / 2
    }

    pub fn contains(&self, s: SideRef) -> bool {
        self.sides.contains(&s)
    }
}

impl Diagram {
    /// Components of the surface cut along the curves of `family`.
    ///
    /// After cutting, every crossing splits into one vertex per side of the cutting
    /// strand and every cutting edge into one edge per side, so those counts cancel
    /// and a component's Euler characteristic is its face count minus the number of
    /// other-family edges inside it.
    pub fn cut_components(&self, family: Family) -> Vec<CutComponent> {
        let other = family.other();
        let mut uf = UnionFind::<usize>::new(self.faces().len());
        for e in self.edges(other) {
            let (l, r) = self.edge_faces(e);
            uf.union(l, r);
        }
        let labels = uf.into_labeling();
        let mut roots: Vec<usize> = labels.clone();
        roots.sort_unstable();
        roots.dedup();

        let mut comps: Vec<CutComponent> = roots
            .iter()
            .map(|_| CutComponent {
                index: 0,
                family,
                faces: Vec::new(),
                sides: BTreeSet::new(),
                euler: 0,
                planar: false,
            })
            .collect();
        let slot = |root: usize| roots.binary_search(&root).expect("root present");
        for (fi, face) in self.faces().iter().enumerate() {
            let c = &mut comps[slot(labels[fi])];
            c.faces.push(fi);
            c.euler += 1;
            c.sides.extend(face.sides_of(family));
        }
        for e in self.edges(other) {
            let (l, _) = self.edge_faces(e);
            comps[slot(labels[l])].euler -= 1;
        }
        for c in &mut comps {
            c.planar = c.euler == 2 - c.sides.len() as i64;
        }
        comps.sort_by(|x, y| x.sides.first().cmp(&y.sides.first()));
        for (i, c) in comps.iter_mut().enumerate() {
            c.index = i + 1;
        }
        comps
    }

    /// The component index `k` containing `(disk, side)` and the set of its other
    /// boundary sides. `disk` is 1-based.
    pub fn lambda_set(
        &self,
        family: Family,
        disk: usize,
        side: Side,
    ) -> Result<(usize, BTreeSet<SideRef>), DiagramError> {
        let n = self.curve_count(family);
        if disk == 0 || disk > n {
            return Err(DiagramError::IndexOutOfRange { index: disk, n });
        }
        let target = SideRef::new(disk - 1, side);
        let comp = self
            .cut_components(family)
            .into_iter()
            .find(|c| c.contains(target))
            .expect("every side lies in exactly one component");
        let mut rest = comp.sides;
        rest.remove(&target);
        Ok((comp.index, rest))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn torus_cut_is_annulus() {
        let d = torus();
        let comps = d.cut_components(Family::A);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].sides.len(), 2);
        assert_eq!(comps[0].euler, 0);
        assert!(comps[0].planar);
    }

    #[test]
    fn euler_sums_to_surface() {
        for d in [torus(), torus_two(), bigon_pair()] {
            for family in [Family::A, Family::B] {
                let total: i64 = d.cut_components(family).iter().map(|c| c.euler).sum();
                assert_eq!(total, 2 - 2 * d.genus() as i64);
            }
        }
    }

    #[test]
    fn lambda_out_of_range() {
        let d = torus();
        assert!(d.lambda_set(Family::A, 99, Side::Minus).is_err());
        assert!(d.lambda_set(Family::A, 0, Side::Minus).is_err());
        let (k, rest) = d.lambda_set(Family::A, 1, Side::Minus).unwrap();
        assert_eq!(k, 1);
        assert_eq!(rest.into_iter().collect::<Vec<_>>(), vec![SideRef::new(0, Side::Plus)]);
    }
}
