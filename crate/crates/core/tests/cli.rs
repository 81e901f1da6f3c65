use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use swanson::cli::commands::{CONTINUUM_COLUMNS, SCATTER_COLUMNS, SPECTRUM_COLUMNS};
use swanson::cli::RunConfig;

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(name)
}

fn swanson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swanson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(cmd: &str, cfg: &str, extra: &[&str]) -> Output {
    let path = config(cfg);
    let mut args = vec![cmd, "--config", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    swanson(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json_records(o: &Output, columns: &[&str]) -> (Value, Vec<Value>) {
    assert_eq!(o.status.code(), Some(0), "{}", stderr(o));
    let v: Value = serde_json::from_str(&stdout(o)).expect("valid JSON");
    let want: BTreeSet<&str> = columns.iter().copied().collect();
    let records = v["records"].as_array().expect("records array").clone();
    for r in &records {
        let keys: BTreeSet<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, want);
        for c in columns {
            assert!(r[c].is_number() || r[c].is_null(), "{c} = {}", r[c]);
        }
    }
    (v["meta"].clone(), records)
}

fn num(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

struct Csv {
    meta: Vec<(String, String)>,
    rows: Vec<Vec<Option<f64>>>,
}

fn parse_csv(text: &str, columns: &[&str]) -> Csv {
    let mut meta = Vec::new();
    let mut lines = text.lines();
    let header = loop {
        let line = lines.next().expect("header row");
        match line.strip_prefix("# ") {
            Some(m) => {
                let (k, v) = m.split_once(": ").expect("key: value comment");
                meta.push((k.to_owned(), v.to_owned()));
            }
            None => break line,
        }
    };
    assert_eq!(header.split(',').collect::<Vec<_>>(), columns);
    let rows = lines
        .map(|l| {
            let cells: Vec<Option<f64>> = l
                .split(',')
                .map(|c| (!c.is_empty()).then(|| c.parse::<f64>().expect("float cell")))
                .collect();
            assert_eq!(cells.len(), columns.len());
            cells
        })
        .collect();
    Csv { meta, rows }
}

fn meta<'a>(csv: &'a Csv, key: &str) -> &'a str {
    &csv.meta.iter().find(|(k, _)| k == key).expect(key).1
}

#[test]
fn check_reports_derived_parameters() {
    let o = run("check", "progressive.ini", &[]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in ["mu = 1.0", "constraints: PASS", "zeta = 12.0", "lambda1 = 3.0"] {
        assert!(s.contains(line), "missing `{line}` in\n{s}");
    }
    let s = stdout(&run("check", "damped.ini", &[]));
    assert!(s.contains("mu = -0.2"));
    assert!(s.contains("zeta = 64.0"));
    assert!(s.contains("lambda1 = 7.51560977"));
    assert!(s.lines().any(|l| l.starts_with("NOTE zeta")));
    let s = stdout(&run("check", "morse.ini", &[]));
    assert!(s.contains("a1 = 5.863961"));
    assert!(s.contains("bound_states = 6"));
}

#[test]
fn exit_codes() {
    let o = run("check", "invalid.ini", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL alpha+beta>=1"));
    assert_eq!(run("spectrum", "invalid.ini", &[]).status.code(), Some(2));
    assert_eq!(run("check", "does-not-exist.ini", &[]).status.code(), Some(2));
    assert_eq!(swanson(&["spectrum"]).status.code(), Some(2));
    assert_eq!(run("check", "progressive.ini", &["--format", "xml"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ini");
    std::fs::write(&bad, "[model]\nkind = morse\na2 = 2\n[swanson]\nalpha = 0.5\nbeta = 0.25\n").unwrap();
    assert_eq!(swanson(&["check", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
    // continuum without k
    assert_eq!(run("continuum", "pt-half-integer.ini", &[]).status.code(), Some(2));
}

#[test]
fn spectrum_schema_and_oracle() {
    let (m, recs) = json_records(&run("spectrum", "progressive.ini", &[]), SPECTRUM_COLUMNS);
    assert_eq!(m["model"], "poschl-teller");
    let eps: Vec<f64> = recs.iter().map(|r| num(&r["epsilon_n"])).collect();
    assert_eq!(eps, [-9.0, -4.0, -1.0]);
    for r in &recs {
        assert!(num(&r["abs_rel_err"]) < 1e-3);
        let e = num(&r["E_n"]) - num(&m["v_infinity"]);
        assert!((e - num(&r["epsilon_n"])).abs() < 1e-12);
    }

    let (_, recs) = json_records(&run("spectrum", "morse.ini", &[]), SPECTRUM_COLUMNS);
    assert_eq!(recs.len(), 6);
    assert!(recs.iter().all(|r| num(&r["abs_rel_err"]) < 1e-3));

    let (_, recs) = json_records(&run("spectrum", "progressive.ini", &["--no-oracle"]), SPECTRUM_COLUMNS);
    assert!(recs.iter().all(|r| r["oracle_epsilon_n"].is_null() && r["abs_rel_err"].is_null()));

    let (m, recs) = json_records(&run("spectrum", "morse-empty.ini", &[]), SPECTRUM_COLUMNS);
    assert!(recs.is_empty());
    assert_eq!(m["bound_states"], 0);

    let o = run("spectrum", "progressive.ini", &["--format", "csv"]);
    let csv = parse_csv(&stdout(&o), SPECTRUM_COLUMNS);
    assert_eq!(csv.rows.len(), 3);
}

#[test]
fn continuum_csv_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    for (cfg, kind, rate) in [("damped.ini", "Damped", -1.0), ("progressive.ini", "Progressive", 1.0)] {
        let out = dir.path().join(cfg.replace(".ini", ".csv"));
        let o = run("continuum", cfg, &["--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let csv = parse_csv(&std::fs::read_to_string(&out).unwrap(), CONTINUUM_COLUMNS);
        assert_eq!(meta(&csv, "classification"), kind);
        assert_eq!(meta(&csv, "rate").parse::<f64>().unwrap(), rate);
        assert_eq!(csv.rows.len(), meta(&csv, "n_points").parse::<usize>().unwrap());

        let j: Vec<f64> = csv.rows.iter().filter_map(|r| r[6]).collect();
        assert_eq!(j.len(), csv.rows.len() - 4);
        let (lo, hi) = j.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        let mean = j.iter().sum::<f64>() / j.len() as f64;
        assert!((hi - lo) / mean.abs() < 1e-6);
        for r in &csv.rows {
            let tau = r[3].unwrap().powi(2) + r[4].unwrap().powi(2);
            assert_eq!(r[7].unwrap(), tau);
        }

        let manifest: Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join(format!("{}.manifest.json", out.file_name().unwrap().to_str().unwrap()))).unwrap())
                .unwrap();
        assert_eq!(manifest["command"], "continuum");
        assert_eq!(manifest["version"], env!("CARGO_PKG_VERSION"));
        assert!(manifest["wall_clock_seconds"].as_f64().unwrap() >= 0.0);
        let echoed = RunConfig::parse(manifest["config_ini"].as_str().unwrap()).unwrap();
        assert_eq!(echoed, RunConfig::load(&config(cfg)).unwrap());
    }
}

#[test]
fn reruns_are_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    for (cmd, cfg) in [("continuum", "morse.ini"), ("spectrum", "damped.ini"), ("scatter", "pt-half-integer.ini")] {
        let a = dir.path().join(format!("{cmd}-a"));
        let b = dir.path().join(format!("{cmd}-b"));
        for p in [&a, &b] {
            assert_eq!(run(cmd, cfg, &["--out", p.to_str().unwrap()]).status.code(), Some(0));
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "{cmd}");
        assert!(dir.path().join(format!("{cmd}-a.manifest.json")).exists());
    }
}

#[test]
fn continuum_overflow_suggests_a_window() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("wide.ini");
    std::fs::write(
        &cfg,
        "[model]\nkind = morse\na2 = 2\nb2 = 1\n[swanson]\nalpha = 0.5\nbeta = 0.25\n\
         [grid]\nx_min = -8\nx_max = 12\nn_points = 2001\n[continuum]\nk = 1\n",
    )
    .unwrap();
    let o = swanson(&["continuum", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("smaller window"), "{err}");
    let x_min: f64 = err
        .split("x_min = ")
        .nth(1)
        .and_then(|s| s.split(',').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!(x_min > -8.0 && x_min < -4.0);
}

#[test]
fn scatter_schema_and_physics() {
    let (_, recs) = json_records(&run("scatter", "progressive.ini", &[]), SCATTER_COLUMNS);
    assert_eq!(recs.len(), 4);
    for r in &recs {
        assert!((num(&r["flux"]) - 1.0).abs() < 1e-9);
        assert!(num(&r["abs_R2"]).sqrt() < 1e-6);
        assert!(num(&r["dev_R"]) < 1e-3 && num(&r["dev_T"]) < 1e-3);
        assert!(r["phase_even"].is_number() && r["phase_odd"].is_number());
    }

    let (_, recs) = json_records(&run("scatter", "morse.ini", &[]), SCATTER_COLUMNS);
    for r in &recs {
        assert!((num(&r["abs_R2"]).sqrt() - 1.0).abs() < 1e-9);
        assert_eq!(num(&r["re_T"]), 0.0);
        assert_eq!(num(&r["im_T"]), 0.0);
        assert!(r["phase_even"].is_null());
        assert!(num(&r["dev_R"]) < 1e-3);
    }

    let (m, recs) = json_records(&run("scatter", "pt-half-integer.ini", &[]), SCATTER_COLUMNS);
    assert_eq!(num(&m["lambda1"]), 2.5);
    for r in &recs {
        let mag = num(&r["abs_R2"]).sqrt();
        assert!(mag > 0.0 && mag < 1.0);
        assert!((num(&r["flux"]) - 1.0).abs() < 1e-9);
    }
}

#[test]
fn verify_battery() {
    for cfg in ["damped.ini", "progressive.ini", "morse.ini", "pt-half-integer.ini", "morse-empty.ini"] {
        let o = run("verify", cfg, &[]);
        assert_eq!(o.status.code(), Some(0), "{cfg}\n{}", stdout(&o));
        assert!(stdout(&o).contains("verify: all invariants PASS"));
    }
    let o = run("verify", "hermitian.ini", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NOTE mu = 0"));

    let o = run("verify", "progressive.ini", &["--corrupt-mu"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("first failing invariant: intertwining"), "{s}");
    assert!(s.lines().any(|l| l.starts_with("intertwining") && l.contains("FAIL")));
}

#[test]
fn shipped_configs_round_trip() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let cfg = RunConfig::load(&path).unwrap();
        assert_eq!(RunConfig::parse(&cfg.to_ini()).unwrap(), cfg, "{}", path.display());
        count += 1;
    }
    assert!(count >= 6);
}
