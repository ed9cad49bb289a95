//! End-to-end tests of the binary: generation, checking, simulation,
//! summarization, determinism, and the exit-status contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_entroq"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

#[test]
fn random_state_checks_clean_through_subadditivity() {
    let file = tmp("state.json");
    let out = run(bin()
        .args(["random", "--kind", "state", "--dim", "4", "--count", "1", "--seed", "7"])
        .arg("--out")
        .arg(&file));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let reports = tmp("state_reports.jsonl");
    let out = run(bin()
        .args(["check", "--inequality", "subadditivity", "--factors", "2,2"])
        .arg("--input")
        .arg(&file)
        .arg("--out")
        .arg(&reports));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let text = std::fs::read_to_string(&reports).unwrap();
    let report: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(report["name"], "subadditivity");
    assert_eq!(report["pass"], true);
    assert!(report["margin"].as_f64().unwrap() >= -1e-10);
}

#[test]
fn same_seed_gives_byte_identical_files() {
    let a = tmp("det_a.json");
    let b = tmp("det_b.json");
    for file in [&a, &b] {
        let out = run(bin()
            .args(["random", "--kind", "hermitian", "--dim", "3", "--count", "5", "--seed", "99"])
            .arg("--out")
            .arg(file));
        assert!(out.status.success());
        // Hermitian batches report their spectral floor for choosing shifts.
        assert!(String::from_utf8_lossy(&out.stderr).contains("spectral floor"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn batch_all_produces_reports_for_every_applicable_inequality() {
    let states = tmp("batch_states.json");
    run(bin()
        .args(["random", "--kind", "state", "--dim", "4", "--count", "10", "--seed", "3"])
        .arg("--out")
        .arg(&states));
    let observable = tmp("batch_obs.json");
    run(bin()
        .args(["random", "--kind", "hermitian", "--dim", "4", "--count", "1", "--seed", "4"])
        .arg("--out")
        .arg(&observable));

    let reports = tmp("batch_reports.jsonl");
    let out = run(bin()
        .args(["check", "--inequality", "all", "--factors", "2,2", "--seed", "3"])
        .arg("--input")
        .arg(&states)
        .arg("--observable")
        .arg(&observable)
        .arg("--out")
        .arg(&reports));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    // Six applicable inequalities per state: subadditivity, Araki-Lieb,
    // mutual information, observable and tomographic relative entropies,
    // and the energy-entropy bound.
    let text = std::fs::read_to_string(&reports).unwrap();
    assert_eq!(text.lines().count(), 60);
    for line in text.lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["pass"], true, "failing report: {line}");
        assert_eq!(r["parameters"]["seed"], "3");
    }

    let out = run(bin().arg("report-summary").arg("--input").arg(&reports));
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("energy-entropy-bound"));
    assert!(stdout.contains("tomographic-relative-entropy"));
}

#[test]
fn qutrit_check_accepts_explicit_zero_shift_for_states() {
    let file = tmp("qutrit.json");
    run(bin()
        .args(["random", "--kind", "state", "--dim", "3", "--count", "1", "--seed", "11"])
        .arg("--out")
        .arg(&file));
    let out = run(bin()
        .args(["check", "--inequality", "qutrit-mutual-information", "--x", "0"])
        .arg("--input")
        .arg(&file));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("qutrit-mutual-information"));
}

#[test]
fn observable_vector_checks_clean() {
    let file = tmp("observable.json");
    run(bin()
        .args(["random", "--kind", "observable", "--dim", "4", "--count", "20", "--seed", "5"])
        .arg("--out")
        .arg(&file));
    let out = run(bin()
        .args(["check", "--inequality", "observable-subadditivity", "--factors", "2,2"])
        .arg("--input")
        .arg(&file));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 20);
}

#[test]
fn strict_tolerance_flips_the_exit_status() {
    let file = tmp("strict_state.json");
    run(bin()
        .args(["random", "--kind", "state", "--dim", "4", "--count", "1", "--seed", "21"])
        .arg("--out")
        .arg(&file));
    // A negative tolerance demands strictly positive margins, so the tight
    // cases fail and the exit status must say so.
    let out = run(bin()
        .args(["check", "--inequality", "araki-lieb", "--factors", "2,2", "--tol=-10"])
        .arg("--input")
        .arg(&file));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_input_exits_with_usage_error() {
    let file = tmp("garbage.json");
    std::fs::write(&file, "{\"nope\": 1}").unwrap();
    let out = run(bin()
        .args(["check", "--inequality", "subadditivity"])
        .arg("--input")
        .arg(&file));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_emits_curves_and_clean_reports() {
    let dir = tmp("sim_out");
    let out = run(bin()
        .args([
            "simulate",
            "--profile",
            "modulated:0.1,2.0",
            "--t-max",
            "4",
            "--state",
            "fock:1",
            "--theta-points",
            "4",
            "--sr-checks",
            "20",
        ])
        .arg("--out-dir")
        .arg(&dir));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let dispersions = std::fs::read_to_string(dir.join("dispersions.csv")).unwrap();
    assert!(dispersions.starts_with("t,sigma_xx,sigma_pp,sigma_xp,r"));
    assert!(dispersions.lines().count() > 500);

    let tomogram = std::fs::read_to_string(dir.join("tomogram.csv")).unwrap();
    assert!(tomogram.starts_with("x,w"));

    let entropy = std::fs::read_to_string(dir.join("entropy_sum.csv")).unwrap();
    assert!(entropy.starts_with("theta,entropy_theta,entropy_conjugate,sum,bound,margin"));
    assert_eq!(entropy.lines().count(), 5);

    let reports = std::fs::read_to_string(dir.join("reports.jsonl")).unwrap();
    assert_eq!(reports.lines().count(), 24);
    for line in reports.lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["pass"], true, "failing report: {line}");
    }
}

#[test]
fn constant_profile_ground_state_has_flat_half_dispersions() {
    let dir = tmp("sim_flat");
    let out = run(bin()
        .args(["simulate", "--profile", "constant", "--t-max", "2", "--sr-checks", "5", "--theta-points", "2"])
        .arg("--out-dir")
        .arg(&dir));
    assert_eq!(out.status.code(), Some(0));
    let dispersions = std::fs::read_to_string(dir.join("dispersions.csv")).unwrap();
    for line in dispersions.lines().skip(1) {
        let sigma_xx: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!((sigma_xx - 0.5).abs() < 1e-8, "line {line}");
    }
}

#[test]
fn sampled_frequency_table_profile_is_accepted() {
    let table = tmp("freq_table.csv");
    std::fs::write(&table, "t,omega_sq\n0.0,1.0\n1.0,1.05\n2.0,0.95\n").unwrap();
    let dir = tmp("sim_table");
    let out = run(bin()
        .args(["simulate", "--t-max", "2", "--sr-checks", "5", "--theta-points", "2"])
        .arg("--profile")
        .arg(&table)
        .arg("--out-dir")
        .arg(&dir));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn matrix_files_reload_bit_exactly() {
    let file = tmp("roundtrip.json");
    run(bin()
        .args(["random", "--kind", "state", "--dim", "4", "--count", "1", "--seed", "17"])
        .arg("--out")
        .arg(&file));
    let first = std::fs::read_to_string(&file).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
    let rewritten = serde_json::to_string(&parsed).unwrap() + "\n";
    // Shortest-decimal serialization round-trips bit-exactly.
    assert_eq!(first, rewritten);
}
