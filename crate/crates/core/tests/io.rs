mod common;

use common::golden;
use heegaard_rc::fixtures::diagrams;
use heegaard_rc::io::{check_report, parse_diagram, serialize_diagram, CheckOptions, Condition, DiagramFile, GraphSelector};
use heegaard_rc::twistgen::{build_twisted, twisted_base};
use heegaard_rc::Family;

#[test]
fn round_trip_every_fixture() {
    for (name, d) in diagrams() {
        let text = serialize_diagram(&d);
        let back = parse_diagram(&text).unwrap();
        assert_eq!(back.renumbered().canonical_form(), d.renumbered().canonical_form(), "{name}");
        assert_eq!(serialize_diagram(&back), text, "{name}");
    }
}

#[test]
fn multicurve_files_round_trip() {
    let m = twisted_base(3, true).unwrap();
    let f = DiagramFile::from_multicurve(&m);
    assert!(f.dstar_curves.is_none());
    let back = DiagramFile::from_json(&f.to_json()).unwrap().multicurve().unwrap();
    assert_eq!(back.diagram().canonical_form(), m.diagram().canonical_form());
    assert!(f.diagram().is_err());
}

#[test]
fn structured_reports_are_golden() {
    for (name, d) in diagrams() {
        let r = check_report(&d, CheckOptions { condition: Condition::Both });
        let json = r.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["rc", "drc"] {
            if let Some(section) = v.get(key) {
                assert_eq!(
                    section["holds"].as_bool().unwrap(),
                    section["witnesses"].as_array().unwrap().is_empty(),
                    "{name} {key}"
                );
            }
        }
        golden(&format!("report-{name}.json"), &json);
    }
}

#[test]
fn exit_codes() {
    let ok = check_report(&build_twisted(3, 2, false).unwrap(), CheckOptions { condition: Condition::Both });
    assert_eq!(ok.exit_code(), 0);
    let bad = check_report(&build_twisted(3, 2, true).unwrap(), CheckOptions { condition: Condition::Drc });
    assert_eq!(bad.exit_code(), 1);
    assert!(bad.rc.is_none());
    let (_, torus) = diagrams().into_iter().find(|(n, _)| n == "torus").unwrap();
    assert_eq!(check_report(&torus, CheckOptions { condition: Condition::Rc }).exit_code(), 2);
}

#[test]
fn exported_graph_sizes() {
    let d = build_twisted(3, 2, false).unwrap();
    let count = |dot: &str| dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--") && !l.contains("label")).count();
    let hd = "Hd:1".parse::<GraphSelector>().unwrap().export(&d).unwrap();
    assert_eq!(count(&hd), 10);
    assert!(hd.contains("cluster_minus"));
    let gk = "Gk:1".parse::<GraphSelector>().unwrap().export(&d).unwrap();
    assert_eq!(count(&gk), 6);
    assert!("Gk:99".parse::<GraphSelector>().unwrap().export(&d).is_err());
    let detail = "Gdetail:1,1,1,-,2,+".parse::<GraphSelector>().unwrap().export(&d).unwrap();
    assert_eq!(count(&detail), 2 * d.curve_count(Family::B));
}
