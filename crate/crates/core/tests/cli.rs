//! Golden runs of the `sympgeo` binary. Set `UPDATE_GOLDEN=1` to rewrite the
//! expected files after an intended output change.

use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str], env: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sympgeo"));
    cmd.current_dir(crate_dir()).args(args).env_remove("SYMPGEO_REGISTRY");
    if let Some(e) = env {
        cmd.env("SYMPGEO_REGISTRY", e);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn render(code: i32, out: &str, err: &str) -> String {
    format!("exit: {code}\n--- stdout\n{out}--- stderr\n{err}")
}

/// (golden name, args, expected exit code)
const CASES: &[(&str, &[&str], i32)] = &[
    ("blocks_all", &["blocks"], 0),
    ("blocks_t2", &["blocks", "T2"], 0),
    ("blocks_zzz", &["blocks", "zzz"], 0),
    ("blocks_json", &["--json", "blocks", "E1"], 0),
    ("eval_w1", &["eval", "tests/data/w1.json"], 0),
    ("eval_w1_json", &["--json", "eval", "tests/data/w1.json"], 0),
    ("eval_malformed", &["eval", "tests/data/malformed.json"], 2),
    ("eval_dimension", &["eval", "tests/data/dim_error.json"], 3),
    ("eval_surface_group", &["eval", "tests/data/surface_group.json"], 0),
    ("realize_zero", &["realize", "--c13", "0", "--c1c2", "0", "--c3", "0", "--group", ""], 0),
    ("realize_odd", &["realize", "--c13", "1", "--c1c2", "0", "--c3", "0"], 4),
    ("realize_bad_c1c2", &["realize", "--c13", "0", "--c1c2", "12", "--c3", "0"], 4),
    ("realize_w2", &["realize", "--c13", "-228", "--c1c2", "-120", "--c3", "-44", "--group", ""], 0),
    ("realize_w0_group", &["realize", "--c13", "300", "--c1c2", "240", "--c3", "60", "--group", "a | a a"], 0),
    ("realize_exhausted", &["realize", "--c13", "2", "--c1c2", "24", "--c3", "2", "--group", "a | a a"], 5),
    ("realize_json", &["--json", "realize", "--c13", "172", "--c1c2", "96", "--c3", "38"], 0),
    ("geography_nonspin", &["geography", "--dim", "4", "--chi-window", "2..2", "--nonspin", "--g", "0", "--r", "0"], 0),
    ("geography_spin", &["geography", "--chi-window", "2..4", "--spin"], 0),
    ("geography_inverted", &["geography", "--chi-window", "3..2", "--nonspin"], 0),
    ("geography_group_json", &["--json", "geography", "--chi-window", "3..3", "--g", "1", "--r", "0"], 0),
    (
        "check_surface",
        &["check-pi1", "tests/data/surface_group.json", "--expect", "a,b,c,d | a b a' b' c d c' d'"],
        0,
    ),
    ("check_free3", &["check-pi1", "tests/data/free3.json", "--expect", "a,b,c |"], 0),
    ("check_mismatch", &["check-pi1", "tests/data/w1.json", "--expect", "a |"], 6),
    ("check_opaque", &["check-pi1", "tests/data/opaque.json", "--expect", ""], 7),
    ("check_json", &["--json", "check-pi1", "tests/data/w1.json", "--expect", "a | a a"], 6),
    ("usage_error", &["frobnicate"], 2),
];

#[test]
fn golden_runs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let dir = crate_dir().join("tests/golden");
    let mut failures = Vec::new();
    for (name, args, want) in CASES {
        let (code, out, err) = run(args, None);
        let text = render(code, &out, &err);
        let path = dir.join(format!("{name}.txt"));
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &text).unwrap();
        }
        if code != *want {
            failures.push(format!("{name}: exit {code}, wanted {want}\n{err}"));
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(g) if g == text => {}
            Ok(_) => failures.push(format!("{name}: output differs from {}", path.display())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for (_, args, _) in CASES {
        assert_eq!(run(args, None), run(args, None), "{args:?}");
    }
}

#[test]
fn written_files() {
    let dir = tempfile::tempdir().unwrap();
    let emit = dir.path().join("r.json");
    let dot = dir.path().join("r.dot");
    let csv = dir.path().join("g.csv");
    let (code, _, _) = run(
        &[
            "realize",
            "--c13",
            "-1000",
            "--c1c2",
            "480",
            "--c3",
            "1000",
            "--group",
            "a,b | a b a' b'",
            "--emit",
            emit.to_str().unwrap(),
            "--dot",
            dot.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code, 0);
    let (code, out, _) = run(&["eval", emit.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(out.contains("chern (c1^3, c1c2, c3): (-1000, 480, 1000)"), "{out}");
    let d = std::fs::read_to_string(&dot).unwrap();
    assert!(d.starts_with("digraph recipe {") && d.trim_end().ends_with('}'));

    let (code, _, _) = run(&["geography", "--chi-window", "2..2", "--csv", csv.to_str().unwrap()], None);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_path(&csv).unwrap();
    assert_eq!(rdr.headers().unwrap(), vec!["c1sq", "chi_h", "e", "sigma", "family"]);
    let c: Vec<i64> = rdr.records().map(|r| r.unwrap()[0].parse().unwrap()).collect();
    assert_eq!(c, (0..16).collect::<Vec<_>>());

    let (code, _, _) = run(&["geography", "--chi-window", "9..1", "--csv", csv.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap(), "c1sq,chi_h,e,sigma,family\n");
}

#[test]
fn registry_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let reg = dir.path().join("mini.reg");
    std::fs::write(&reg, "# one block\n[MINI]\ne = 3\nsigma = 1\n").unwrap();
    let (code, out, _) = run(&["blocks"], reg.to_str());
    assert_eq!(code, 0);
    assert!(out.contains("MINI") && !out.contains("X_3_4"));
    // the flag wins over the environment
    let bundled = crate_dir().join("data/blocks.reg");
    let (code, out, _) = run(&["--registry", bundled.to_str().unwrap(), "blocks"], reg.to_str());
    assert_eq!(code, 0);
    assert!(out.contains("X_3_4") && !out.contains("MINI"));
    let (code, _, err) = run(&["blocks"], Some(Path::new("/nonexistent/x.reg").to_str().unwrap()));
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/x.reg"));
}
