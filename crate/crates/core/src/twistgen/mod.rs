//! Diagrams obtained by Dehn twisting a disk system along an auxiliary curve.

pub mod base;
mod splice;

use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, Family, Side, SideRef};
pub use base::{gamma_sequence, BaseError, AUX_NAME};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("twist power must be nonzero")]
    ZeroPower,
    #[error("twist power {0} is below the supported minimum |l| >= {1}")]
    PowerTooSmall(i64, i64),
    #[error("genus must be at least 2 (got {0})")]
    GenusTooSmall(usize),
    #[error("the maximal disk system is only available for genus 3 (got {0})")]
    MaximalUnsupported(usize),
    #[error("expected exactly one auxiliary curve, found {0}")]
    AuxCount(usize),
    #[error("auxiliary curve is disjoint from {0}: the twisted diagram would be disconnected")]
    Disjoint(String),
    #[error("twisting changed the genus from {before} to {after}")]
    GenusChanged { before: usize, after: usize },
    #[error(transparent)]
    Base(#[from] BaseError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Disk curves (family A) together with a single auxiliary curve (family B) that
/// meets each of them.
#[derive(Clone, Debug)]
pub struct MulticurveMap {
    diagram: Diagram,
}

impl MulticurveMap {
    pub fn new(diagram: Diagram) -> Result<Self, TwistError> {
        let aux = diagram.curve_count(Family::B);
        if aux != 1 {
            return Err(TwistError::AuxCount(aux));
        }
        Ok(MulticurveMap { diagram })
    }

    /// Builds the map from words; a disk curve missing the auxiliary curve is
    /// reported as such rather than as a disconnected diagram.
    pub fn from_words(
        disks: Vec<crate::CurveWord>,
        aux: crate::CurveWord,
        signs: &std::collections::HashMap<String, crate::Sign>,
    ) -> Result<Self, TwistError> {
        if let Some(c) = disks.iter().find(|c| c.word.is_empty()) {
            return Err(TwistError::Disjoint(c.name.clone()));
        }
        match Diagram::from_words(disks, vec![aux], signs) {
            Ok(d) => Self::new(d),
            Err(DiagramError::IsolatedCurve(name)) => Err(TwistError::Disjoint(name)),
            Err(e) => Err(e.into()),
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn genus(&self) -> usize {
        self.diagram.genus()
    }
}

/// Twist power `l`; the twisted family is `tau^l` of the disk family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistSpec {
    power: i64,
}

impl TwistSpec {
    /// Requires `|l| >= 2`.
    pub fn new(power: i64) -> Result<Self, TwistError> {
        Self::with_minimum(power, 2)
    }

    /// Accepts `|l| >= minimum` (at least 1), warning when `|l| < 2`.
    pub fn with_minimum(power: i64, minimum: i64) -> Result<Self, TwistError> {
        if power == 0 {
            return Err(TwistError::ZeroPower);
        }
        let minimum = minimum.max(1);
        if power.abs() < minimum {
            return Err(TwistError::PowerTooSmall(power, minimum));
        }
        if power.abs() < 2 {
            log::warn!("twist power {power}: a single twist need not give a strongly irreducible splitting");
        }
        Ok(TwistSpec { power })
    }

    pub fn power(&self) -> i64 {
        self.power
    }
}

/// The disk curves of `base` and their images under the `l`-th power of the Dehn
/// twist along the auxiliary curve, bigon-free. Twisted curves are named after
/// their preimages with a `*` appended.
pub fn dehn_twist(base: &MulticurveMap, spec: TwistSpec) -> Result<Diagram, TwistError> {
    let raw = splice::splice(base.diagram(), spec.power(), false);
    finish(base, raw)
}

/// As [`dehn_twist`], but laying the strands around the annulus one full turn at a
/// time. Used to cross-check the bulk construction.
pub fn dehn_twist_stepwise(base: &MulticurveMap, spec: TwistSpec) -> Result<Diagram, TwistError> {
    let raw = splice::splice(base.diagram(), spec.power(), true);
    finish(base, raw)
}

fn finish(base: &MulticurveMap, raw: Diagram) -> Result<Diagram, TwistError> {
    let reduced = raw.reduce_bigons()?;
    if reduced.genus() != base.genus() {
        return Err(TwistError::GenusChanged {
            before: base.genus(),
            after: reduced.genus(),
        });
    }
    Ok(reduced)
}

/// Holes of the extra disks `D4, D5, D6` of the maximal system in genus 3: `D4`
/// encloses the feet `(1,+)` and `(2,-)`, `D6` encloses `(2,+)` and `(3,-)`, and
/// `D5` encloses `(1,-)` together with `D4`.
fn maximal_trees() -> Vec<(String, Vec<SideRef>)> {
    let s = |i: usize, side: Side| SideRef::new(i - 1, side);
    vec![
        ("D4".into(), vec![s(1, Side::Plus), s(2, Side::Minus)]),
        ("D5".into(), vec![s(1, Side::Minus), s(1, Side::Plus), s(2, Side::Minus)]),
        ("D6".into(), vec![s(2, Side::Plus), s(3, Side::Minus)]),
    ]
}

/// The untwisted configuration: `D1..Dg` and `gamma` (plus `D4..D6` when maximal).
pub fn twisted_base(g: usize, maximal: bool) -> Result<MulticurveMap, TwistError> {
    if g < 2 {
        return Err(TwistError::GenusTooSmall(g));
    }
    if maximal && g != 3 {
        return Err(TwistError::MaximalUnsupported(g));
    }
    let mut d = base::disks_and_aux(g, &gamma_sequence(g))?;
    if maximal {
        d = base::with_tree_curves(&d, &maximal_trees())?;
    }
    MulticurveMap::new(d)
}

/// The twisted diagram of genus `g` and power `l`, with the maximal disk systems
/// when `maximal` is set.
pub fn build_twisted(g: usize, l: i64, maximal: bool) -> Result<Diagram, TwistError> {
    let spec = TwistSpec::new(l)?;
    let base = twisted_base(g, maximal)?;
    dehn_twist(&base, spec)
}
