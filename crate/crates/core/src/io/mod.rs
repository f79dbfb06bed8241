//! Interchange format for diagrams, verdict reports and graph export.
//!
//! A diagram file is a JSON document:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "d_curves": { "D1": ["x1+", "x2-"] },
//!   "dstar_curves": { "D1*": ["x2", "x1"] }
//! }
//! ```
//!
//! Family-A words carry the crossing signs; family-B words list bare tokens. A file
//! describing disks and an auxiliary curve replaces `dstar_curves` by `aux_curve`.

mod dot;
mod report;

use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{natural_cmp, CurveWord, Diagram, DiagramError, Family, Sign};
use crate::twistgen::{MulticurveMap, TwistError};

pub use dot::{to_dot, GraphSelector, SelectorError};
pub use report::{check_report, CheckOptions, Condition, Report};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("token {token:?} in curve {curve} lacks a trailing + or - sign")]
    MissingSign { curve: String, token: String },
    #[error("token {token:?} in curve {curve} must not carry a sign")]
    UnexpectedSign { curve: String, token: String },
    #[error("file has both dstar_curves and aux_curve")]
    BothSecondFamilies,
    #[error("file has neither dstar_curves nor aux_curve")]
    NoSecondFamily,
    #[error("expected exactly one auxiliary curve, found {0}")]
    AuxCount(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub format_version: u32,
    pub d_curves: IndexMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dstar_curves: Option<IndexMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aux_curve: Option<IndexMap<String, Vec<String>>>,
}

fn split_sign(curve: &str, token: &str) -> Result<(String, Sign), FileError> {
    let sign = match token.chars().last() {
        Some('+') => Sign::Pos,
        Some('-') => Sign::Neg,
        _ => {
            return Err(FileError::MissingSign {
                curve: curve.to_string(),
                token: token.to_string(),
            })
        }
    };
    Ok((token[..token.len() - 1].to_string(), sign))
}

fn unsigned(curve: &str, token: &str) -> Result<String, FileError> {
    if token.ends_with(['+', '-']) {
        return Err(FileError::UnexpectedSign {
            curve: curve.to_string(),
            token: token.to_string(),
        });
    }
    Ok(token.to_string())
}

type Words = (Vec<CurveWord>, Vec<CurveWord>, HashMap<String, Sign>);

impl DiagramFile {
    pub fn from_json(text: &str) -> Result<Self, FileError> {
        let f: DiagramFile = serde_json::from_str(text)?;
        if f.format_version != FORMAT_VERSION {
            return Err(FileError::Version(f.format_version));
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    fn words(&self, second: &IndexMap<String, Vec<String>>) -> Result<Words, FileError> {
        let mut signs = HashMap::new();
        let mut a = Vec::new();
        for (name, tokens) in &self.d_curves {
            let mut word = Vec::new();
            for t in tokens {
                let (x, s) = split_sign(name, t)?;
                if signs.insert(x.clone(), s).is_some() {
                    return Err(DiagramError::DuplicateOccurrence {
                        crossing: x,
                        family: Family::A,
                    }
                    .into());
                }
                word.push(x);
            }
            a.push(CurveWord::new(name.clone(), word));
        }
        let mut b = Vec::new();
        for (name, tokens) in second {
            let word = tokens
                .iter()
                .map(|t| unsigned(name, t))
                .collect::<Result<Vec<_>, _>>()?;
            b.push(CurveWord::new(name.clone(), word));
        }
        Ok((a, b, signs))
    }

    /// The two-family diagram described by the file.
    pub fn diagram(&self) -> Result<Diagram, FileError> {
        let second = match (&self.dstar_curves, &self.aux_curve) {
            (Some(_), Some(_)) => return Err(FileError::BothSecondFamilies),
            (Some(b), None) => b,
            (None, Some(_)) => return Err(FileError::NoSecondFamily),
            (None, None) => return Err(FileError::NoSecondFamily),
        };
        let (a, b, signs) = self.words(second)?;
        Ok(Diagram::from_words(a, b, &signs)?)
    }

    /// Disks and auxiliary curve described by a file with an `aux_curve` entry.
    pub fn multicurve(&self) -> Result<MulticurveMap, FileError> {
        let aux = match (&self.dstar_curves, &self.aux_curve) {
            (None, Some(aux)) => aux,
            (Some(_), Some(_)) => return Err(FileError::BothSecondFamilies),
            _ => return Err(FileError::NoSecondFamily),
        };
        if aux.len() != 1 {
            return Err(FileError::AuxCount(aux.len()));
        }
        let (a, mut b, signs) = self.words(aux)?;
        Ok(MulticurveMap::from_words(a, b.remove(0), &signs)?)
    }

    /// Canonical file for a diagram: curves in natural order of their names, each
    /// word rotated to start at its smallest crossing token (natural order).
    pub fn from_diagram(d: &Diagram) -> Self {
        let (a, b) = canonical_words(d);
        DiagramFile {
            format_version: FORMAT_VERSION,
            d_curves: a,
            dstar_curves: Some(b),
            aux_curve: None,
        }
    }

    pub fn from_multicurve(m: &MulticurveMap) -> Self {
        let (a, b) = canonical_words(m.diagram());
        DiagramFile {
            format_version: FORMAT_VERSION,
            d_curves: a,
            dstar_curves: None,
            aux_curve: Some(b),
        }
    }
}

fn canonical_words(
    d: &Diagram,
) -> (IndexMap<String, Vec<String>>, IndexMap<String, Vec<String>>) {
    let signs = d.sign_map();
    let family = |f: Family, signed: bool| {
        let mut words = d.words(f);
        words.sort_by(|x, y| natural_cmp(&x.name, &y.name));
        words
            .into_iter()
            .map(|w| {
                let start = (0..w.word.len())
                    .min_by(|&i, &j| natural_cmp(&w.word[i], &w.word[j]))
                    .unwrap_or(0);
                let tokens = (0..w.word.len())
                    .map(|k| {
                        let x = &w.word[(start + k) % w.word.len()];
                        if signed {
                            format!("{x}{}", signs[x].symbol())
                        } else {
                            x.clone()
                        }
                    })
                    .collect();
                (w.name, tokens)
            })
            .collect()
    };
    (family(Family::A, true), family(Family::B, false))
}

pub fn parse_diagram(text: &str) -> Result<Diagram, FileError> {
    DiagramFile::from_json(text)?.diagram()
}

pub fn serialize_diagram(d: &Diagram) -> String {
    DiagramFile::from_diagram(d).to_json()
}
