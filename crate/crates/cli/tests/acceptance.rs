//! One PASS/FAIL line per acceptance criterion.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use heegaard_rc::criteria::{double_rectangle_condition, rectangle_condition};
use heegaard_rc::fixtures::{bipartition_graph, diagrams, two_sided_diagram};
use heegaard_rc::twistgen::build_twisted;
use heegaard_rc::{Diagram, Family};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::Value;

const SWEEP: [(usize, i64); 9] = [(2, 2), (2, 3), (2, -2), (3, 2), (3, 3), (3, -2), (4, 2), (4, 3), (4, -2)];

fn hrc(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hrc")).args(args).env("NO_COLOR", "1").output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn generate(dir: &Path, g: usize, l: i64, maximal: bool) -> Result<String, String> {
    let file = dir.join(format!("g{g}-l{l}{}.json", if maximal { "-max" } else { "" }));
    let path = file.to_str().unwrap().to_string();
    let (g, l) = (g.to_string(), l.to_string());
    let mut args = vec!["generate", "--genus", &g, "--power", &l, "-o", &path];
    if maximal {
        args.push("--maximal");
    }
    match hrc(&args) {
        (0, _) => Ok(path),
        (c, _) => Err(format!("generate exited {c}")),
    }
}

fn check(path: &str, condition: &str) -> Result<(i32, Value), String> {
    let (code, out) = hrc(&["check", path, "--condition", condition, "--structured"]);
    let v = serde_json::from_str(&out).map_err(|e| format!("report: {e}"))?;
    Ok((code, v))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, format!("took {:?}, limit {limit:?}", start.elapsed()))
}

fn verdicts(d: &Diagram) -> (bool, bool) {
    (rectangle_condition(d).unwrap().holds, double_rectangle_condition(d).unwrap().holds)
}

fn valid_fixtures() -> Vec<(String, Diagram)> {
    diagrams().into_iter().filter(|(_, d)| d.validate_disk_systems().passes()).collect()
}

fn c1(dir: &Path) -> Result<(), String> {
    let t = Instant::now();
    let f = generate(dir, 3, 2, false)?;
    let (code, r) = check(&f, "both")?;
    ensure(code == 0, format!("exit {code}"))?;
    ensure(r["rc"]["holds"] == true && r["drc"]["holds"] == true, "report does not state both hold")?;
    within(t, Duration::from_secs(10))
}

fn c2(dir: &Path) -> Result<(), String> {
    let t = Instant::now();
    let f = generate(dir, 3, 2, true)?;
    let (code, r) = check(&f, "drc")?;
    ensure(code == 1, format!("exit {code}"))?;
    let composed = r["drc"]["witnesses"]
        .as_array()
        .into_iter()
        .flatten()
        .flat_map(|w| w["missing"].as_array().cloned().unwrap_or_default())
        .any(|m| m["kind"] == "composed_rectangle");
    ensure(composed, "no witness names a composed-rectangle type")?;
    within(t, Duration::from_secs(30))
}

fn c3(dir: &Path) -> Result<(), String> {
    let t = Instant::now();
    let stored = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden/drc_sweep.txt"))
        .map_err(|e| e.to_string())?;
    let mut drc = String::new();
    for (g, l) in SWEEP {
        let f = generate(dir, g, l, false)?;
        ensure(hrc(&["validate", &f]).0 == 0, format!("g={g} l={l} does not validate"))?;
        let (_, r) = check(&f, "both")?;
        let i = &r["input"];
        ensure(
            i["genus"] == g && i["n"] == g && i["n_star"] == g && r["validation"]["passes"] == true,
            format!("g={g} l={l}: bad summary {i}"),
        )?;
        ensure(r["rc"]["holds"] == true, format!("g={g} l={l}: RC fails"))?;
        drc.push_str(&format!("g={g} l={l} drc={}\n", r["drc"]["holds"]));
    }
    ensure(drc == stored, format!("DRC verdicts differ from golden:\n{drc}"))?;
    within(t, Duration::from_secs(300))
}

fn c4() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x1e55);
    let mut cases: Vec<Diagram> = valid_fixtures().into_iter().map(|(_, d)| d).collect();
    let mut random = 0;
    while random < 120 {
        if let Some(d) = random_twisted(&mut rng) {
            cases.push(d);
            random += 1;
        }
    }
    let bad = cases.iter().filter(|d| matches!(verdicts(d), (false, true))).count();
    ensure(bad == 0, format!("{bad} diagrams with DRC true and RC false"))
}

fn c5() -> Result<(), String> {
    let g = bipartition_graph();
    let first = g.clone().with_partition(&[1, 2, 3].into_iter().collect());
    let second = g.with_partition(&[1, 2, 4, 5].into_iter().collect());
    ensure(!first.is_doubly_two_connected().unwrap(), "({1,2,3},{4,5,6}) reported doubly 2-connected")?;
    ensure(first.reachable_without(&1, &[&2, &5]).len() == 1, "deleting 2 and 5 does not isolate 1")?;
    ensure(second.is_doubly_two_connected().unwrap(), "({1,2,4,5},{3,6}) reported not doubly 2-connected")
}

fn c6() -> Result<(), String> {
    let d = two_sided_diagram();
    let want: BTreeSet<String> = ["(1,-)", "(2,+)", "(3,-)", "(3,+)"].into_iter().map(String::from).collect();
    let found = d
        .cut_components(Family::A)
        .iter()
        .any(|c| c.sides.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>() == want);
    ensure(found, "no component with A = {(1,-),(2,+),(3,-),(3,+)}")
}

fn c7() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0xc0);
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let (n, edges, minus) = random_graph(&mut rng);
        let g = to_criteria_graph(n, &edges);
        mismatches += usize::from(g.is_two_connected() != brute_two_connected(n, &edges));
        let blocks: BTreeSet<usize> = (0..n).filter(|&v| minus[v]).collect();
        let doubly = g.with_partition(&blocks).is_doubly_two_connected().unwrap();
        mismatches += usize::from(doubly != brute_doubly(n, &edges, &minus));
    }
    ensure(mismatches == 0, format!("{mismatches} mismatches"))
}

fn c8() -> Result<(), String> {
    for (name, d) in valid_fixtures() {
        let base = verdicts(&d);
        for family in [Family::A, Family::B] {
            for i in 0..d.curve_count(family) {
                ensure(verdicts(&d.reverse_curve(family, i)) == base, format!("{name}: reversing {family} curve {i}"))?;
            }
        }
    }
    Ok(())
}

fn c9() -> Result<(), String> {
    for (name, d) in diagrams() {
        let v = d.crossing_count() as i64;
        let e: i64 = [Family::A, Family::B].iter().flat_map(|&f| d.curves(f)).map(|c| c.word.len() as i64).sum();
        ensure(e == 2 * v, format!("{name}: E != 2V"))?;
        ensure(d.faces().len() as i64 - v == 2 - 2 * d.genus() as i64, format!("{name}: F - V != 2 - 2g"))?;
        for f in d.faces() {
            let n = f.sides.len();
            ensure((0..n).all(|i| f.sides[i].0 != f.sides[(i + 1) % n].0), format!("{name}: face families do not alternate"))?;
        }
        let r = d.reduce_bigons().map_err(|e| format!("{name}: {e}"))?;
        ensure(r.bigon_faces().count() == 0, format!("{name}: bigons after reduction"))?;
        ensure(d.swap_roles().swap_roles().canonical_form() == d.canonical_form(), format!("{name}: swap not an involution"))?;
        if d.validate_disk_systems().passes() {
            ensure(verdicts(&d).1 == verdicts(&d.swap_roles()).1, format!("{name}: DRC changes under swap"))?;
        }
    }
    Ok(())
}

fn c10() -> Result<(), String> {
    let stored: BTreeMap<String, Vec<Vec<usize>>> = serde_json::from_str(
        &std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden/intersection_tables.json"))
            .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    for (key, table) in &stored {
        let parts: Vec<&str> = key.split(' ').collect();
        let g: usize = parts[0][1..].parse().unwrap();
        let l: i64 = parts[1][1..].parse().unwrap();
        let d = build_twisted(g, l, parts.len() == 3).map_err(|e| e.to_string())?;
        let names: Vec<String> = d.words(Family::A).into_iter().map(|w| w.name).collect();
        for (i, x) in names.iter().enumerate() {
            for (j, y) in names.iter().enumerate() {
                let got = d.intersection_number(x, &format!("{y}*")).unwrap();
                ensure(got == table[i][j], format!("{key}: i({x}, {y}*) = {got}, oracle {}", table[i][j]))?;
            }
        }
    }
    Ok(())
}

fn main() {
    let dir: PathBuf = std::env::temp_dir().join(format!("hrc-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<(), String>>)> = vec![
        ("1 positive verdict at genus 3, power 2", Box::new(|| c1(&dir))),
        ("2 maximal systems fail DRC with composed-rectangle witness", Box::new(|| c2(&dir))),
        ("3 family sweep validates, RC holds, DRC golden", Box::new(|| c3(&dir))),
        ("4 no DRC without RC (fixtures + 120 random twists)", Box::new(c4)),
        ("5 bipartition calibration graph", Box::new(c5)),
        ("6 component touched on both sides by one curve", Box::new(c6)),
        ("7 connectivity oracle on 10^4 random graphs", Box::new(c7)),
        ("8 orientation invariance", Box::new(c8)),
        ("9 structural invariants", Box::new(c9)),
        ("10 intersection-number oracle", Box::new(c10)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        let t = Instant::now();
        match f() {
            Ok(()) => println!("PASS criterion {name} ({:.2?})", t.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
