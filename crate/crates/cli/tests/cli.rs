use std::path::PathBuf;
use std::process::Command;

use cremona_cli::hexads::hexads;
use cremona_cli::iterate::iterate;
use cremona_cli::lattice::{verify_lattice, verify_lattice_with};
use cremona_cli::poly::{placement, run, PolyOptions, Suite};
use cremona_cli::{Report, Status};
use cremona_core::isometry::{eta_matrix, keum_matrix, Hexad};
use cremona_core::rational::q;
use cremona_poly::expr::Mode;
use cremona_poly::{Fixture, PointConfig};

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn fixture(name: &str) -> PointConfig {
    PointConfig::from_json(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

fn cremona(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cremona")).args(args).output().unwrap()
}

#[test]
fn fixture_files_are_the_default_placements() {
    for f in Fixture::ALL {
        let cfg = fixture(f.name());
        assert_eq!(cfg, f.default_config(), "fixture {}", f.name());
        assert_eq!(placement(&cfg), Some(f));
        cfg.check_general_position().unwrap();
    }
    let (a, b, c) = fixture("A").abc().unwrap();
    assert_eq!((a, b, c), (q(2), q(3), q(4)));
}

#[test]
fn lattice_suite_passes() {
    let rep = verify_lattice(false);
    assert!(rep.passed(), "{:?}", rep.failures());
    assert_eq!(rep.checks.len(), 13);
    assert!(rep.timing.is_none());
}

#[test]
fn corrupted_eta_fails_intertwining() {
    let mut eta = eta_matrix();
    eta.matrix[(0, 0)] += q(1);
    let rep = verify_lattice_with(&eta, &keum_matrix(Hexad::H), false);
    assert_eq!(rep.get("isometry.intertwine").unwrap().status, Status::Fail);
    assert_eq!(rep.get("lattice.rel4").unwrap().status, Status::Pass);
    assert!(!rep.passed());
}

#[test]
fn corrupted_kappa_fails_gram() {
    let mut kappa = keum_matrix(Hexad::H);
    kappa.matrix[(1, 1)] += q(1);
    let rep = verify_lattice_with(&eta_matrix(), &kappa, false);
    assert_eq!(rep.get("isometry.kappa_gram").unwrap().status, Status::Fail);
}

#[test]
fn report_json_round_trips() {
    let rep = verify_lattice(false);
    let text = rep.to_json();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["suite", "seed", "checks", "timing"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for c in v["checks"].as_array().unwrap() {
        assert!(c["id"].is_string() && c["source"].is_string() && c["witness"].is_object());
        assert!(["pass", "fail", "skip"].contains(&c["status"].as_str().unwrap()));
    }
    let ids: std::collections::BTreeSet<_> = rep.checks.iter().map(|c| &c.id).collect();
    assert_eq!(ids.len(), rep.checks.len(), "check ids are unique");
}

#[test]
fn hexad_counts() {
    let rep = hexads(false);
    assert!(rep.passed());
    let count = |id: &str| rep.get(id).unwrap().witness["count"].as_u64().unwrap();
    assert_eq!(count("hexads.weber"), 192);
    assert_eq!(count("hexads.hyperplanes"), 30);
    assert_eq!(count("hexads.planes"), 140);
}

#[test]
fn iterate_table_starts_with_e15() {
    let (rep, table) = iterate(5, false).unwrap();
    assert!(rep.passed());
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 6);
    let header: Vec<&str> = lines[0].split('\t').collect();
    let row: Vec<&str> = lines[1].split('\t').collect();
    assert_eq!(&row[..2], ["1", "0"]);
    for (name, v) in header.iter().zip(&row).skip(2) {
        assert_eq!(*v, if *name == "E15" { "1" } else { "0" }, "{name}");
    }
    assert!(iterate(0, false).is_err());
}

#[test]
fn quartics_on_b() {
    let rep = run(Suite::Quartics, &fixture("B"), PolyOptions::default()).unwrap();
    let verified = rep.checks.iter().filter(|c| c.id.starts_with("poly.quartics.Q_") && c.status == Status::Pass).count();
    assert_eq!(verified, 9);
    assert_eq!(rep.get("poly.quartics.display_f0").unwrap().status, Status::Pass);
    assert_eq!(rep.get("poly.quartics.display_f12").unwrap().status, Status::Skip);
    assert!(rep.passed());
}

#[test]
fn jacobian_expand_on_b() {
    let opts = PolyOptions { mode: Mode::Expand, ..PolyOptions::default() };
    let rep = run(Suite::Jacobian, &fixture("B"), opts).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures());
    assert_eq!(rep.get("poly.jacobian").unwrap().witness["mode"], "expand");
}

#[test]
fn dual_emits_the_matrix() {
    let rep = run(Suite::Dual, &fixture("D"), PolyOptions::default()).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures());
    let m = &rep.get("poly.dual.equivalence").unwrap().witness["m"];
    assert_eq!(m.as_array().unwrap().len(), 4);
    assert!(m.as_array().unwrap().iter().all(|r| r.as_array().unwrap().len() == 4));
}

#[test]
fn suites_reject_the_wrong_placement() {
    assert!(run(Suite::E4, &fixture("B"), PolyOptions::default()).is_err());
    let mut cfg = fixture("B");
    cfg.points[5] = cfg.points[4].clone();
    let err = run(Suite::Quartics, &cfg, PolyOptions::default()).unwrap_err();
    assert!(err.to_string().contains("p4 = p5"), "{err}");
}

#[test]
fn binary_exit_codes() {
    assert_eq!(cremona(&["verify-lattice"]).status.code(), Some(0));
    assert_eq!(cremona(&["iterate", "--k-max", "0"]).status.code(), Some(2));
    let b = fixture_path("B");
    assert_eq!(cremona(&["poly", "e4", "--config", b.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(cremona(&["poly", "quartics", "--config", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn binary_reports_are_reproducible() {
    let d = fixture_path("D");
    let args = ["poly", "dual", "--config", d.to_str().unwrap(), "--seed", "7"];
    let a = cremona(&args);
    let b = cremona(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let x = cremona(&["hexads", "--format", "tsv"]);
    let y = cremona(&["hexads", "--format", "tsv"]);
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn binary_iterate_tsv() {
    let out = cremona(&["iterate", "--k-max", "3", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("1\t0\t"));
}

#[test]
fn binary_writes_report_and_side_table() {
    let dir = std::env::temp_dir().join(format!("cremona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("iterate.json");
    let res = cremona(&["iterate", "--k-max", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(0));
    let rep: Report = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(rep.passed());
    let table = std::fs::read_to_string(dir.join("iterate.tsv")).unwrap();
    assert_eq!(table.lines().count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}
