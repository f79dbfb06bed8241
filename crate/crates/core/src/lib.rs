pub mod criteria;
pub mod diagram;
pub mod fixtures;
pub mod rectangles;
pub mod io;
pub mod twistgen;

pub use diagram::{
    CurveWord, CutComponent, Diagram, DiagramError, Family, Side, SideRef, Sign,
    ValidationIssue, ValidationReport,
};
