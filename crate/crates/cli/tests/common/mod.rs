//! Golden cases shared by the `golden` and `acceptance` targets.
//!
//! Set `QUATMOTION_BLESS=1` to rewrite the expected files from the current
//! binary.

#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
}

pub const CASES: &[Case] = &[
    Case {
        name: "convert_quat_dcm",
        args: &["convert", "--from", "quat", "--to", "dcm"],
        stdin: r#"{"w": 0.7071067811865476, "x": 0, "y": 0, "z": 0.7071067811865476}"#,
    },
    Case {
        name: "convert_dcm_euler",
        args: &["convert", "--from", "dcm", "--to", "euler"],
        stdin: "[[0, 0, 1], [1, 0, 0], [0, 1, 0]]",
    },
    Case {
        name: "convert_euler_su2",
        args: &["convert", "--from", "euler", "--to", "su2"],
        stdin: r#"{"roll": 0.1, "pitch": -0.2, "yaw": 0.3}"#,
    },
    Case {
        name: "convert_dualquat_screw",
        args: &["convert", "--from", "dualquat", "--to", "screw"],
        stdin: r#"{"real": {"w": 1, "x": 0, "y": 0, "z": 0}, "dual": {"w": 0, "x": 0, "y": 0, "z": 1}}"#,
    },
    Case {
        name: "convert_homog_dualquat",
        args: &["convert", "--from", "homog", "--to", "dualquat"],
        stdin: "[[1, 0, 0, 0], [1, 1, 0, 0], [2, 0, 0, -1], [3, 0, 1, 0]]",
    },
    Case {
        name: "convert_sl2c_lorentz4",
        args: &["convert", "--from", "sl2c", "--to", "lorentz4"],
        stdin: "[[[0.6065306597126334, 0], [0, 0]], [[0, 0], [1.6487212707001282, 0]]]",
    },
    Case {
        name: "chasles_motion",
        args: &["chasles"],
        stdin: r#"{"a": [1, -2, 0.5], "R": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]}"#,
    },
    Case {
        name: "propagate_real",
        args: &["propagate", "--regime", "real", "--rates", "tests/data/constant_z.csv", "--step", "0.125"],
        stdin: "",
    },
    Case {
        name: "propagate_dual",
        args: &["propagate", "--regime", "dual", "--rates", "tests/data/screw.csv", "--step", "0.0625"],
        stdin: "",
    },
    Case {
        name: "lines_skew",
        args: &["lines", "--l1", r#"{"u": [1, 0, 0], "m": [0, 0, 0]}"#, "--l2", r#"{"u": [0, 1, 0], "m": [-2, 0, 0]}"#],
        stdin: "",
    },
    Case {
        name: "lines_parallel",
        args: &["lines", "--l1", r#"{"u": [0, 0, 1], "m": [0, 0, 0]}"#, "--l2", r#"{"u": [0, 0, 1], "m": [3, -1, 0]}"#],
        stdin: "",
    },
    Case {
        name: "bench_seeded",
        args: &["bench", "--steps", "2000", "--step", "0.001", "--seed", "42", "--deterministic"],
        stdin: "",
    },
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the binary from the crate directory with `QUATMOTION_TOL` unset.
pub fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quatmotion"))
        .args(args)
        .current_dir(crate_dir())
        .env_remove("QUATMOTION_TOL")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary runs")
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.json"))
}

/// Runs `case` twice and compares both outputs with its golden file.
pub fn check_case(case: &Case) -> Result<(), String> {
    let first = run(case.args, case.stdin);
    if !first.status.success() {
        return Err(format!("{}: exit {:?}: {}", case.name, first.status.code(), String::from_utf8_lossy(&first.stderr)));
    }
    let second = run(case.args, case.stdin);
    if first.stdout != second.stdout {
        return Err(format!("{}: output differs between runs", case.name));
    }
    let path = golden_path(case.name);
    if std::env::var_os("QUATMOTION_BLESS").is_some() {
        std::fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
    }
    let expected = std::fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != first.stdout {
        return Err(format!("{}: output differs from {}", case.name, path.display()));
    }
    Ok(())
}
