//! Process-level checks of the binary: exit codes, determinism, and the
//! shape of the exports.

use std::collections::BTreeSet;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ddcat"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = bin().args(args).output().expect("spawn ddcat");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn hom_examples_and_exit_codes() {
    let (out, _, code) = run(&[
        "hom", "--params", "2,3,1", "--from", "X:0:0:2", "--to", "X:0:0:2", "--graded",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("\"graded\":{\"-1\":1,\"0\":1}"), "{out}");

    let (out, _, code) = run(&[
        "hom", "--params", "1,2,1", "--from", "X:0:0:0", "--to", "X:0:0:1", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");

    let (out, _, code) = run(&[
        "hom", "--params", "2,3,1", "--from", "X:0:0:0", "--to", "Y:0:1:0", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");

    let (out, _, code) = run(&[
        "hom", "--params", "2,3,1", "--from", "X:0:0:2", "--to", "X:0:0:2", "--degree", "-1",
        "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");

    // Usage failures exit 2.
    let (_, _, code) = run(&["hom", "--params", "2,2,1", "--from", "X:0:0:0", "--to", "X:0:0:0"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["hom", "--params", "2,3,1", "--from", "X:5:0:0", "--to", "X:0:0:0"]);
    assert_eq!(code, 2);
}

#[test]
fn outputs_are_deterministic() {
    let args = ["silting", "--params", "2,3,1", "--z", "Z:0:0:0", "--box", "-1..1", "--check"];
    let (a, _, code_a) = run(&args);
    let (b, _, code_b) = run(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(a, b, "byte-identical reruns");
    assert!(a.contains("\"families\""));
}

#[test]
fn table_matches_golden() {
    let (out, _, code) = run(&["table231"]);
    assert_eq!(code, 0);
    assert_eq!(out, ddcat_cli::TABLE231_GOLDEN);
    // Twelve family records in the table.
    assert_eq!(out.matches("\"base\":").count(), 12);
    // Six tilting objects.
    let tilt = out.split("\"tilting\":").nth(1).unwrap();
    assert_eq!(tilt.matches("[\"").count(), 6, "{tilt}");
}

#[test]
fn tilting_command_lists_six() {
    let (out, _, code) = run(&["tilting", "--params", "2,3,1", "--z", "Z:0:0:0", "--window", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("Z:0:0:0").count(), 6 + 1, "{out}");
}

#[test]
fn export_dot_shape() {
    let (out, _, code) = run(&[
        "export-ar", "--params", "2,3,1", "--window", "2", "--format", "dot",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph ar {"));
    assert!(out.trim_end().ends_with('}'));
    // All 3r components appear.
    let comps: BTreeSet<&str> = out
        .lines()
        .filter_map(|l| l.split("comp=\"").nth(1))
        .filter_map(|l| l.split('"').next())
        .collect();
    assert_eq!(comps.len(), 6, "{comps:?}");

    // Empty window: empty graph, success.
    let (out, _, code) = run(&[
        "export-ar", "--params", "2,3,1", "--window", "0", "--format", "dot",
    ]);
    assert_eq!(code, 0);
    assert!(!out.contains("->"));
}

#[test]
fn export_shading_matches_the_hammock() {
    let (out, _, code) = run(&[
        "export-ar", "--params", "2,3,1", "--window", "2", "--format", "dot",
        "--shade-from", "X:0:0:0",
    ]);
    assert_eq!(code, 0);
    let p = ddcat_core::Params::new(2, 3, 1).unwrap();
    let src = ddcat_core::ObjCoord::x(0, 0, 0);
    for line in out.lines() {
        let Some(rest) = line.trim().strip_prefix('"') else { continue };
        let Some((name, attrs)) = rest.split_once('"') else { continue };
        if !attrs.contains("label=") {
            continue;
        }
        let obj = ddcat_core::ObjCoord::parse_for(&p, name).unwrap();
        let shaded = attrs.contains("filled");
        let expected = ddcat_core::hammock::hom_dim(&p, src, obj) > 0;
        assert_eq!(shaded, expected, "{name}");
    }
}

#[test]
fn oracle_check_perturbation_is_detected() {
    let (_, _, code) = run(&[
        "oracle-check", "--params", "2,3,1", "--window", "3", "--samples", "40", "--seed", "7",
    ]);
    assert_eq!(code, 0);
    let (_, err, code) = run(&[
        "oracle-check", "--params", "2,3,1", "--window", "3", "--samples", "40", "--seed", "7",
        "--perturb",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("hom_mismatches\":1"), "{err}");
}

#[test]
fn second_prime_recheck_runs() {
    let out = bin()
        .args(["oracle-check", "--params", "2,3,1", "--window", "3", "--samples", "25", "--seed", "3"])
        .env("DDCAT_SECOND_PRIME", "1")
        .output()
        .expect("spawn");
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"prime\":32003"));
    assert!(stdout.contains("\"prime\":65537"), "{stdout}");
}
