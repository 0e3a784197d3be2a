use std::process::{Command, Output};

use serde_json::Value;

fn sointegra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sointegra"))
        .args(args)
        .env_remove("SOINTEGRA_THREADS")
        .output()
        .expect("spawn sointegra")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn checks(v: &Value) -> &Vec<Value> {
    v["checks"].as_array().expect("checks array")
}

#[test]
fn catalog_passes_with_enough_checks() {
    let out = sointegra(&["verify", "catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["overall"], "pass");
    assert_eq!(v["schema_version"], 1);
    assert!(checks(&v).len() >= 40);
    for c in checks(&v) {
        assert!(!c["paper_anchor"].as_str().unwrap().is_empty(), "{c}");
    }
}

#[test]
fn report_keys_are_sorted() {
    let out = sointegra(&["algebra", "--family", "six"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn algebra_tables() {
    for (family, n) in [("six", 36), ("nine", 81)] {
        let out = sointegra(&["algebra", "--family", family]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let v = json(&out);
        assert_eq!(checks(&v).len(), n);
    }
}

#[test]
fn pseudoscalar_integral_passes() {
    let out = sointegra(&[
        "verify",
        "integral",
        "--hamiltonian",
        "-(1/2)*laplacian + mu/r + (1/2)*{1/(2*r^2), sigma.L}",
        "--integral",
        "sigma.x / r",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["overall"], "pass");
}

#[test]
fn failing_integral_exits_two() {
    let out = sointegra(&[
        "verify",
        "integral",
        "--hamiltonian",
        "-(1/2)*laplacian + mu/r",
        "--integral",
        "sigma.x / r",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["overall"], "fail");
}

#[test]
fn integral_read_from_file() {
    let dir = std::env::temp_dir().join(format!("sointegra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let h = dir.join("h.txt");
    std::fs::write(&h, "-(1/2)*laplacian + mu/r\n").unwrap();
    let out = sointegra(&["verify", "integral", "--hamiltonian", h.to_str().unwrap(), "--integral", "L3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn spectrum_ground_state_from_both_solvers() {
    let out = sointegra(&["spectrum", "--mu", "-1", "--nmax", "2", "--jmax", "3/2", "--solver", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rd = csv::Reader::from_reader(out.stdout.as_slice());
    let head = rd.headers().unwrap().clone();
    let col = |name: &str| head.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 6);
    let ground = rows.iter().find(|r| &r[col("n")] == "0" && &r[col("j")] == "1/2").unwrap();
    assert_eq!(&ground[col("energy_exact")], "-1/2");
    for c in ["energy_formula", "energy_shooting"] {
        let e: f64 = ground[col(c)].parse().unwrap();
        assert!((e + 0.5).abs() < 1e-9, "{c}: {e}");
    }
}

#[test]
fn deteq_on_gauge_potential() {
    let out = sointegra(&["deteq", "--v1", "1/r^2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rank = checks(&v).iter().find(|c| c["name"] == "deteq.rank").unwrap();
    assert_eq!(rank["residual"]["rank"], 0);
}

#[test]
fn wavefunction_to_file() {
    let path = std::env::temp_dir().join(format!("sointegra-psi-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = sointegra(&[
        "--out", p, "wavefunction", "--n", "1", "--j", "3/2", "--m", "-1/2", "--eps", "-1", "--mu", "-1",
        "--nr", "5", "--ntheta", "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,theta,phi,re_psi1,im_psi1,re_psi2,im_psi2"));
    assert_eq!(lines.count(), 15);
}

#[test]
fn usage_errors_exit_64() {
    let bad: [&[&str]; 5] = [
        &["frobnicate"],
        &["deteq", "--v1", "1/r^"],
        &["spectrum", "--mu", "1", "--nmax", "1", "--jmax", "1/2"],
        &["spectrum", "--mu", "-1", "--nmax", "1", "--jmax", "1"],
        &["verify", "integral", "--hamiltonian", "laplacian", "--integral", "sigma.q"],
    ];
    for args in bad {
        let out = sointegra(args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn parse_errors_are_located() {
    let out = sointegra(&["deteq", "--v1", "1/r^"]);
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("1:5"), "{msg}");
}

#[test]
fn thread_cap_is_validated() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_sointegra"))
            .args(["algebra", "--family", "six"])
            .env("SOINTEGRA_THREADS", v)
            .output()
            .unwrap()
    };
    assert_eq!(run("0").status.code(), Some(64));
    assert_eq!(run("many").status.code(), Some(64));
    let one = run("1");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, sointegra(&["algebra", "--family", "six"]).stdout);
}

#[test]
fn help_exits_zero() {
    assert_eq!(sointegra(&["--help"]).status.code(), Some(0));
}
