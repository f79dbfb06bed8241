//! Dehn twisting by splicing inside an annulus around the auxiliary curve.
//!
//! Annulus coordinates: `x` runs along the auxiliary curve (period `L`), `y` runs
//! across it from its right edge (`y = 0`) to its left edge (`y = 1`). A family-A
//! curve crosses the annulus as the vertical segment at its crossing. Its twisted
//! image is a parallel copy pushed to the curve's plus side, which inside the
//! annulus becomes a segment sheared by `power * L` in `x`. All family-A/B crossings
//! of the result lie in the annulus, so they can be listed exactly with integer
//! arithmetic: crossing positions sit at `x = 4t`, offsets are `+-1`, `L = 4r`.

use crate::diagram::{Curve, Diagram, Family, Sign};

/// Crossing of the strand starting at auxiliary crossing `strand` with the vertical
/// segment at auxiliary crossing `vertical`, at height proportional to `height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct StrandCrossing {
    pub strand: usize,
    pub vertical: usize,
    pub height: i64,
    pub band: i64,
}

/// Geometry of one auxiliary crossing: whether the family-A curve goes up
/// (towards the auxiliary curve's left) there.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Passage {
    pub up: bool,
}

impl Passage {
    pub fn from_sign(sign: Sign) -> Self {
        // at a `+` crossing A-out precedes aux-out counterclockwise, so A heads to
        // the aux curve's right
        Passage { up: sign == Sign::Neg }
    }
}

/// All strand/vertical crossings for a twist of the given power, in bulk.
///
/// `band` numbers the full turn in which the crossing occurs, counted from the
/// strand's start.
pub(crate) fn strand_crossings(passages: &[Passage], power: i64) -> Vec<StrandCrossing> {
    let r = passages.len() as i64;
    let period = 4 * r;
    let mut out = Vec::new();
    for (t, p) in passages.iter().enumerate() {
        let offset = if p.up { -1 } else { 1 };
        let x0 = 4 * t as i64 + offset;
        let x1 = x0 + power * period;
        let (lo, hi) = (x0.min(x1), x0.max(x1));
        for s in 0..r {
            let base = 4 * s;
            // smallest k with base + k*period > lo
            let mut k = (lo - base).div_euclid(period);
            while base + k * period <= lo {
                k += 1;
            }
            while base + k * period < hi {
                let x = base + k * period;
                let height = (x - x0).abs();
                out.push(StrandCrossing {
                    strand: t,
                    vertical: s as usize,
                    height,
                    band: height / period,
                });
                k += 1;
            }
        }
    }
    out
}

/// The same crossings as [`strand_crossings`], found by walking each strand one
/// vertical at a time for `|power|` full turns.
pub(crate) fn strand_crossings_stepwise(passages: &[Passage], power: i64) -> Vec<StrandCrossing> {
    let r = passages.len();
    let period = 4 * r as i64;
    let step = power.signum();
    let mut out = Vec::new();
    for (t, p) in passages.iter().enumerate() {
        let x0 = 4 * t as i64 + if p.up { -1 } else { 1 };
        // first vertical met when leaving x0 in the shear direction
        let mut x = if step > 0 {
            (x0.div_euclid(4) + 1) * 4
        } else {
            x0.div_euclid(4) * 4
        };
        for _turn in 0..power.abs() {
            for _ in 0..r {
                let vertical = (x.div_euclid(4)).rem_euclid(r as i64) as usize;
                let height = (x - x0).abs();
                out.push(StrandCrossing {
                    strand: t,
                    vertical,
                    height,
                    band: height / period,
                });
                x += 4 * step;
            }
        }
    }
    out
}

/// Sign of a crossing between the vertical at a passage and a strand leaving
/// another passage, under a twist of the given power.
pub(crate) fn crossing_sign(vertical: Passage, strand: Passage, power: i64) -> Sign {
    let u = if vertical.up { 1 } else { -1 };
    let v = if strand.up { 1 } else { -1 };
    // cross((0,u), v*(power*L, 1)) = -u*v*power*L
    if -u * v * power > 0 {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Splice the twisted family into a raw (possibly bigon-carrying) diagram.
///
/// `base` has the disk curves as family A and the auxiliary curve as its single
/// family-B curve. Crossings along each vertical and each strand are ordered by
/// height, from the annulus's right edge to its left edge.
pub(crate) fn splice(
    base: &Diagram,
    power: i64,
    stepwise: bool,
) -> Diagram {
    let aux = &base.curves(Family::B)[0];
    let passages: Vec<Passage> = aux
        .word
        .iter()
        .map(|&x| Passage::from_sign(base.crossings()[x].sign))
        .collect();
    // position of each base crossing along the aux curve
    let mut along = vec![usize::MAX; base.crossing_count()];
    for (t, &x) in aux.word.iter().enumerate() {
        along[x] = t;
    }
    let crossings = if stepwise {
        strand_crossings_stepwise(&passages, power)
    } else {
        strand_crossings(&passages, power)
    };
    let r = passages.len();
    let mut by_vertical: Vec<Vec<usize>> = vec![Vec::new(); r];
    let mut by_strand: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (i, c) in crossings.iter().enumerate() {
        by_vertical[c.vertical].push(i);
        by_strand[c.strand].push(i);
    }
    for lists in [&mut by_vertical, &mut by_strand] {
        for (t, list) in lists.iter_mut().enumerate() {
            list.sort_by_key(|&i| crossings[i].height);
            if !passages[t].up {
                list.reverse();
            }
        }
    }
    let signs: Vec<Sign> = crossings
        .iter()
        .map(|c| crossing_sign(passages[c.vertical], passages[c.strand], power))
        .collect();

    let mut a = Vec::new();
    let mut b = Vec::new();
    for c in base.curves(Family::A) {
        let mut word_a = Vec::new();
        let mut word_b = Vec::new();
        for &x in &c.word {
            let t = along[x];
            word_a.extend(&by_vertical[t]);
            word_b.extend(&by_strand[t]);
        }
        a.push(Curve {
            name: c.name.clone(),
            word: word_a,
        });
        b.push(Curve {
            name: format!("{}*", c.name),
            word: word_b,
        });
    }
    let names = (1..=crossings.len()).map(|i| format!("x{i}")).collect();
    Diagram::from_parts(a, b, names, signs)
        .expect("spliced curves form a connected well-formed map")
        .renumbered()
}
