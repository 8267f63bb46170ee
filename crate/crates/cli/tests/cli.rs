use std::path::Path;
use std::process::{Command, Output};

fn covosc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covosc"))
        .args(args)
        .env("SOURCE_DATE_EPOCH", "0")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn scans_match_golden_files() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for scan in ["scan-temperature", "scan-observables"] {
        let out = covosc(&[scan, "--eta-min", "0", "--eta-max", "3", "--steps", "61"]);
        assert!(out.status.success());
        let expected = std::fs::read_to_string(golden.join(format!("{scan}.csv"))).unwrap();
        assert_eq!(stdout(&out), expected, "{scan}");
    }
}

#[test]
fn bodies_are_deterministic_without_pinned_time() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_covosc"))
            .args(["scan-observables", "--steps", "11", "--n", "2"])
            .env_remove("SOURCE_DATE_EPOCH")
            .output()
            .unwrap();
        stdout(&out)
            .lines()
            .filter(|l| !l.starts_with("# timestamp"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(run(), run());
}

#[test]
fn rest_rows_are_anchored() {
    let out = covosc(&["scan-temperature", "--eta-min", "0.5", "--eta-max", "1", "--steps", "3"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("0.0000000000000000e0,"));
}

#[test]
fn phase_transition_scan_starts_at_zero_temperature() {
    let out = covosc(&["scan-phase-transition", "--eta-max", "1.6", "--steps", "41"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rows = text.lines().filter(|l| !l.starts_with('#')).skip(1);
    assert_eq!(rows.next().unwrap(), "0.0000000000000000e0,0.0000000000000000e0");
}

#[test]
fn json_output_parses() {
    let out = covosc(&["scan-temperature", "--steps", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["metadata"]["timestamp"], "1970-01-01T00:00:00Z");
}

#[test]
fn plot_script_is_written_next_to_the_data() {
    let dir = std::env::temp_dir().join(format!("covosc-plot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let data = dir.join("obs.csv");
    let out = covosc(&[
        "scan-observables",
        "--steps",
        "5",
        "--emit-plot",
        "--out",
        data.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let script = std::fs::read_to_string(dir.join("obs.gp")).unwrap();
    let header = std::fs::read_to_string(&data).unwrap();
    let columns: Vec<&str> = header
        .lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .split(',')
        .collect();
    assert!(script.contains("'obs.csv'"));
    for used in script.split("using \"").skip(1) {
        for name in used.split('"').take(3).step_by(2) {
            assert!(columns.contains(&name), "{name}");
        }
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["scan-temperature", "--eta-min", "2", "--eta-max", "1"][..],
        &["scan-observables", "--eta-max", "9"],
        &["scan-observables", "--eta-min", "-1"],
        &["scan-temperature", "--steps", "1"],
        &["scan-temperature", "--emit-plot"],
        &["scan-temperature", "--format", "xml"],
        &["verify", "--tolerance", "0"],
    ] {
        let out = covosc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = covosc(&["scan-observables", "--eta-max", "9"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("eta-max"));
}

#[test]
fn verify_passes_and_lists_resolutions() {
    let out = covosc(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(!text.contains("[FAIL]"));
    let resolutions = text.lines().filter(|l| l.starts_with("  - ")).count();
    assert!(resolutions >= 4);
}

#[test]
fn injected_fault_fails_the_fourier_suite() {
    let out = covosc(&["verify", "--quiet", "--inject-fault", "swapped-momentum-exponents"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let line = text
        .lines()
        .find(|l| l.starts_with("[FAIL] fourier"))
        .expect("fourier failure listed");
    let err: f64 = line
        .split("max_err=")
        .nth(1)
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(err > 1e3 * 1e-7, "{line}");
}
