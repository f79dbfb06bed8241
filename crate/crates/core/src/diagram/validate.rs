use std::fmt;

use super::{Diagram, Family, SideRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    GenusTooSmall { genus: usize },
    BigonFace { face: usize },
    NonPlanarComponent { family: Family, component: usize, euler: i64, circles: usize },
    DiskComponent { family: Family, component: usize, side: SideRef },
    ParallelCurves { family: Family, component: usize, first: SideRef, second: SideRef },
    CurveCount { family: Family, count: usize, genus: usize },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::GenusTooSmall { genus } => write!(f, "genus < 2 (genus {genus})"),
            ValidationIssue::BigonFace { face } => write!(f, "bigon face {face}"),
            ValidationIssue::NonPlanarComponent { family, component, euler, circles } => write!(
                f,
                "cut component {component} of family {family} is not planar (euler {euler}, {circles} boundary circles)"
            ),
            ValidationIssue::DiskComponent { family, component, side } => write!(
                f,
                "cut component {component} of family {family} is a disk bounded by {side}: curve is inessential"
            ),
            ValidationIssue::ParallelCurves { family, component, first, second } => write!(
                f,
                "cut component {component} of family {family} is an annulus between {first} and {second}: curves are parallel"
            ),
            ValidationIssue::CurveCount { family, count, genus } => write!(
                f,
                "family {family} has {count} curves, outside {genus}..={}",
                3 * genus - 3
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.issues.is_empty()
    }
}

impl Diagram {
    /// Check that both families are disk systems meeting essentially.
    pub fn validate_disk_systems(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let genus = self.genus();
        if genus < 2 {
            issues.push(ValidationIssue::GenusTooSmall { genus });
        }
        issues.extend(self.bigon_faces().map(|face| ValidationIssue::BigonFace { face }));
        for family in [Family::A, Family::B] {
            for c in self.cut_components(family) {
                let sides: Vec<SideRef> = c.sides.iter().copied().collect();
                if !c.planar {
                    issues.push(ValidationIssue::NonPlanarComponent {
                        family,
                        component: c.index,
                        euler: c.euler,
                        circles: sides.len(),
                    });
                } else if sides.len() == 1 {
                    issues.push(ValidationIssue::DiskComponent {
                        family,
                        component: c.index,
                        side: sides[0],
                    });
                } else if sides.len() == 2 && sides[0].curve != sides[1].curve {
                    issues.push(ValidationIssue::ParallelCurves {
                        family,
                        component: c.index,
                        first: sides[0],
                        second: sides[1],
                    });
                }
            }
            let count = self.curve_count(family);
            if genus >= 2 && (count < genus || count > 3 * genus - 3) {
                issues.push(ValidationIssue::CurveCount { family, count, genus });
            }
        }
        ValidationReport { issues }
    }
}
