mod common;

use common::random_twisted;
use heegaard_rc::criteria::{double_rectangle_condition, rectangle_condition};
use heegaard_rc::fixtures::diagrams;
use heegaard_rc::{Diagram, Family};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn verdicts(d: &Diagram) -> (bool, bool) {
    (
        rectangle_condition(d).unwrap().holds,
        double_rectangle_condition(d).unwrap().holds,
    )
}

fn valid_fixtures() -> Vec<(String, Diagram)> {
    diagrams()
        .into_iter()
        .filter(|(_, d)| d.validate_disk_systems().passes())
        .collect()
}

#[test]
fn euler_identity_and_alternation() {
    for (name, d) in diagrams() {
        let v = d.crossing_count() as i64;
        let e: i64 = [Family::A, Family::B]
            .iter()
            .flat_map(|&f| d.curves(f))
            .map(|c| c.word.len() as i64)
            .sum();
        let f = d.faces().len() as i64;
        assert_eq!(e, 2 * v, "{name}");
        assert_eq!(f - v, 2 - 2 * d.genus() as i64, "{name}");
        for face in d.faces() {
            let n = face.sides.len();
            for i in 0..n {
                assert_ne!(face.sides[i].0, face.sides[(i + 1) % n].0, "{name}: face families alternate");
            }
        }
    }
}

#[test]
fn reduction_leaves_no_bigons() {
    for (name, d) in diagrams() {
        let r = d.reduce_bigons().unwrap();
        assert_eq!(r.bigon_faces().count(), 0, "{name}");
    }
}

#[test]
fn swap_roles_is_an_involution() {
    for (name, d) in diagrams() {
        assert_eq!(d.swap_roles().swap_roles().canonical_form(), d.canonical_form(), "{name}");
    }
}

#[test]
fn drc_invariant_under_swap() {
    for (name, d) in valid_fixtures() {
        assert_eq!(verdicts(&d).1, verdicts(&d.swap_roles()).1, "{name}");
    }
}

#[test]
fn reversing_any_curve_keeps_verdicts() {
    for (name, d) in valid_fixtures() {
        let base = verdicts(&d);
        for family in [Family::A, Family::B] {
            for i in 0..d.curve_count(family) {
                assert_eq!(verdicts(&d.reverse_curve(family, i)), base, "{name}: {family} curve {i}");
            }
        }
    }
}

#[test]
fn drc_never_without_rc_on_fixtures() {
    for (name, d) in valid_fixtures() {
        let (rc, drc) = verdicts(&d);
        assert!(rc || !drc, "{name}");
    }
}

#[test]
fn maximal_system_cuts_into_pants() {
    let (_, d) = diagrams().into_iter().find(|(n, _)| n.ends_with("maximal")).unwrap();
    for family in [Family::A, Family::B] {
        let cs = d.cut_components(family);
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.sides.len() == 3 && c.planar));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_twisted_orientation_and_swap(seed in any::<u64>(), family_b in any::<bool>(), pick in any::<usize>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let d = loop {
            if let Some(d) = random_twisted(&mut rng) {
                break d;
            }
        };
        let family = if family_b { Family::B } else { Family::A };
        let i = pick % d.curve_count(family);
        let (rc, drc) = verdicts(&d);
        prop_assert_eq!(verdicts(&d.reverse_curve(family, i)), (rc, drc));
        prop_assert_eq!(verdicts(&d.swap_roles()).1, drc);
        prop_assert!(rc || !drc);
        prop_assert_eq!(d.swap_roles().swap_roles().canonical_form(), d.canonical_form());
    }
}
