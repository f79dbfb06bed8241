//! Verdict reports in structured (JSON) and human-readable form.

use std::fmt::Write as _;

use serde::Serialize;

use crate::criteria::{
    double_rectangle_condition, rectangle_condition, rectangle_condition_swapped, Analysis,
    MissingType, Verdict, Witness,
};
use crate::diagram::{CutComponent, Diagram, Family, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    Rc,
    Drc,
    Both,
}

impl Condition {
    fn rc(self) -> bool {
        matches!(self, Condition::Rc | Condition::Both)
    }

    fn drc(self) -> bool {
        matches!(self, Condition::Drc | Condition::Both)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub condition: Condition,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InputSummary {
    pub genus: usize,
    pub n: usize,
    pub n_star: usize,
    pub m: usize,
    pub m_star: usize,
    pub crossings: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValidationSection {
    pub passes: bool,
    pub issues: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComponentEntry {
    pub index: usize,
    pub sides: Vec<String>,
    pub euler: i64,
    pub planar: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Components {
    pub a: Vec<ComponentEntry>,
    pub b: Vec<ComponentEntry>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MissingEntry {
    pub kind: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub l: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessEntry {
    pub kind: &'static str,
    pub direction: String,
    pub graph: String,
    pub deleted: Vec<String>,
    pub missing: Vec<MissingEntry>,
    pub text: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictSection {
    pub holds: bool,
    pub witnesses: Vec<WitnessEntry>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub format_version: u32,
    pub input: InputSummary,
    pub validation: ValidationSection,
    pub components: Components,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rc: Option<VerdictSection>,
    /// Rectangle condition read with the families exchanged; informational.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rc_swapped: Option<VerdictSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drc: Option<VerdictSection>,
    pub notes: Vec<String>,
}

fn components(cs: &[CutComponent]) -> Vec<ComponentEntry> {
    cs.iter()
        .map(|c| ComponentEntry {
            index: c.index,
            sides: c.sides.iter().map(|s| s.to_string()).collect(),
            euler: c.euler,
            planar: c.planar,
        })
        .collect()
}

fn missing_entry(m: &MissingType) -> MissingEntry {
    match m {
        MissingType::Rectangle { a_sides, l } => MissingEntry {
            kind: "rectangle",
            ty: format!("({};*)", a_sides),
            l: *l,
        },
        MissingType::Composed { end_minus, axis, end_plus, l } => MissingEntry {
            kind: "composed_rectangle",
            ty: format!("({},{},{};*)", end_minus, axis + 1, end_plus),
            l: *l,
        },
    }
}

fn witness_entry(w: &Witness) -> WitnessEntry {
    match w {
        Witness::Rectangle { direction, k, cut_vertex, missing } => WitnessEntry {
            kind: "rectangle",
            direction: direction.to_string(),
            graph: format!("G_{k}"),
            deleted: cut_vertex.iter().map(|v| v.to_string()).collect(),
            missing: missing.iter().map(missing_entry).collect(),
            text: w.to_string(),
        },
        Witness::DoubleRectangle { direction, d, removed, missing } => WitnessEntry {
            kind: "double_rectangle",
            direction: direction.to_string(),
            graph: format!("H_{d}"),
            deleted: vec![removed.0.to_string(), removed.1.to_string()],
            missing: missing.iter().map(missing_entry).collect(),
            text: w.to_string(),
        },
    }
}

fn section(v: &Verdict) -> VerdictSection {
    VerdictSection {
        holds: v.holds,
        witnesses: v.witnesses.iter().map(witness_entry).collect(),
    }
}

/// Runs validation and the requested conditions. Criteria are skipped when
/// validation fails.
pub fn check_report(d: &Diagram, options: CheckOptions) -> Report {
    let a = d.cut_components(Family::A);
    let b = d.cut_components(Family::B);
    let validation = d.validate_disk_systems();
    let mut report = Report {
        format_version: super::FORMAT_VERSION,
        input: InputSummary {
            genus: d.genus(),
            n: d.curve_count(Family::A),
            n_star: d.curve_count(Family::B),
            m: a.len(),
            m_star: b.len(),
            crossings: d.crossing_count(),
        },
        validation: ValidationSection {
            passes: validation.passes(),
            issues: validation.issues.iter().map(|i| i.to_string()).collect(),
        },
        components: Components {
            a: components(&a),
            b: components(&b),
        },
        rc: None,
        rc_swapped: None,
        drc: None,
        notes: Vec::new(),
    };
    if !validation.passes() {
        return report;
    }
    if options.condition.rc() {
        let v = rectangle_condition(d).expect("validated");
        report.notes.extend(v.notes.iter().cloned());
        report.rc = Some(section(&v));
        let s = rectangle_condition_swapped(d).expect("validated");
        report.rc_swapped = Some(section(&s));
    }
    if options.condition.drc() {
        let v = double_rectangle_condition(d).expect("validated");
        report.notes.extend(v.notes.iter().cloned());
        report.drc = Some(section(&v));
    }
    report
}

impl Report {
    /// 0 when every requested condition holds, 1 when one fails, 2 when the
    /// diagram is not a valid pair of disk systems.
    pub fn exit_code(&self) -> i32 {
        if !self.validation.passes {
            return 2;
        }
        let failed = [&self.rc, &self.drc]
            .into_iter()
            .flatten()
            .any(|s| !s.holds);
        i32::from(failed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Plain-text rendering in the vocabulary of the criteria: `A_k`, `A*_l`,
    /// `Lambda_{d,kappa}`, `G_k`, `H_d`.
    pub fn human(&self, d: &Diagram, color: bool) -> String {
        let paint = |ok: bool, text: &str| {
            if !color {
                text.to_string()
            } else if ok {
                format!("\x1b[32m{text}\x1b[0m")
            } else {
                format!("\x1b[31m{text}\x1b[0m")
            }
        };
        let i = &self.input;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "diagram: genus {}, n = {}, n* = {}, m = {}, m* = {}, {} crossings",
            i.genus, i.n, i.n_star, i.m, i.m_star, i.crossings
        );
        if self.validation.passes {
            let _ = writeln!(out, "validation: {}", paint(true, "passes"));
        } else {
            let _ = writeln!(out, "validation: {}", paint(false, "FAILS"));
            for issue in &self.validation.issues {
                let _ = writeln!(out, "  - {issue}");
            }
        }
        for c in &self.components.a {
            let _ = writeln!(out, "A_{} = {{{}}}", c.index, c.sides.join(","));
        }
        for c in &self.components.b {
            let _ = writeln!(out, "A*_{} = {{{}}}", c.index, c.sides.join(","));
        }
        if self.validation.passes {
            let analysis = Analysis::new(d);
            for disk in 1..=i.n {
                for kappa in Side::BOTH {
                    if let Ok((k, set)) = analysis.lambda(disk, kappa) {
                        let set: Vec<String> = set.iter().map(|s| s.to_string()).collect();
                        let _ = writeln!(
                            out,
                            "Lambda_{{{disk},{kappa}}} = {{{}}} (k = {k})",
                            set.join(",")
                        );
                    }
                }
            }
        }
        let mut verdict = |name: &str, s: &Option<VerdictSection>| {
            let Some(s) = s else { return };
            let status = if s.holds { paint(true, "HOLDS") } else { paint(false, "FAILS") };
            let _ = writeln!(out, "{name}: {status}");
            for w in &s.witnesses {
                let _ = writeln!(out, "  witness: {}", w.text);
            }
        };
        verdict("rectangle condition", &self.rc);
        verdict("rectangle condition (families swapped, informational)", &self.rc_swapped);
        verdict("double rectangle condition", &self.drc);
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}
