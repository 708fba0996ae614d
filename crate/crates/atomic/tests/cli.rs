use std::collections::BTreeMap;

use atomic::cli::{run, Outcome, EXIT_CAP, EXIT_USAGE};
use atomic::report::{AffineJson, CapErrorJson, CoresJson, ImageJson, ShiJson, VerifyJson, W0Json};
use proptest::prelude::*;
use serde::de::DeserializeOwned;

fn atomic(args: &[&str]) -> Outcome {
    run(std::iter::once("atomic").chain(args.iter().copied()))
}

fn json<T: DeserializeOwned>(args: &[&str]) -> T {
    let out = atomic(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout))
}

#[test]
fn image_text_and_json() {
    let out = atomic(&["image", "--type", "A2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("values 0 1 3 4"), "{}", out.stdout);
    assert!(out.stdout.contains("missing 2"));

    let g2: ImageJson = json(&["image", "--type", "G2", "--json"]);
    assert_eq!(g2.values, vec![0, 1, 3, 5, 8, 11, 13, 15, 16]);
    assert_eq!(g2.max, 16);
    assert_eq!(g2.orbit_size, 12);
    assert_eq!(g2, g2.recomputed());
}

#[test]
fn format_json_equals_json_flag() {
    let a = atomic(&["image", "--type", "B2", "--json"]);
    let b = atomic(&["--format", "json", "image", "--type", "B2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_count_does_not_change_output() {
    let one = atomic(&["image", "--type", "E6", "--json", "--threads", "1"]);
    let four = atomic(&["image", "--type", "E6", "--json", "--threads", "4"]);
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn w0_values() {
    assert_eq!(atomic(&["w0", "--type", "E8"]).stdout.trim(), "1240");
    let f4: W0Json = json(&["w0", "--type", "F4", "--json"]);
    assert_eq!((f4.value, f4.via_w0), (110, 110));
}

#[test]
fn susanfe_special_reflection() {
    let out = atomic(&["susanfe", "--type", "B4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["special"]["k"], 28);
    assert_eq!(v["parabolic"], serde_json::json!([2, 3, 4]));
}

#[test]
fn shi_pyramid_and_rows() {
    let out = atomic(&["shi", "--type", "A4"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().skip(1).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0].trim(), "-1");
    assert_eq!(lines[3].split_whitespace().collect::<Vec<_>>(), ["-1", "0", "0", "-1"]);

    let shi: ShiJson = json(&["shi", "--type", "A4", "--json"]);
    let rows: Vec<Vec<i64>> = shi.rows.iter().map(|r| r.iter().map(|e| e.value).collect()).collect();
    assert_eq!(rows, vec![vec![-1, 0, 0, -1], vec![-1, 0, -1], vec![-1, -1], vec![-1]]);
    assert!(shi.admissible);
}

#[test]
fn shi_affine_needs_a_word() {
    assert_eq!(atomic(&["shi", "--type", "A2~"]).code, EXIT_USAGE);
    assert_eq!(atomic(&["shi", "--type", "A2~", "--word", "0,1"]).code, 0);
}

#[test]
fn affine_probe_and_single_element() {
    let a2: AffineJson = json(&["affine", "--type", "A2~", "--radius", "6", "--json"]);
    assert_eq!(a2.values, vec![0, 1, 2, 4, 5, 6]);
    assert_eq!(a2.missing, vec![3]);
    assert_eq!(a2.lattice_agrees, Some(true));
    assert_eq!(a2, a2.recomputed());

    let out = atomic(&["affine", "--type", "A2~", "--word", "0,2,1,0"]);
    assert!(out.stdout.contains("L = 6"), "{}", out.stdout);
}

#[test]
fn cores_counts_and_csv() {
    let c: CoresJson = json(&["cores", "--n", "2", "--max", "5", "--json"]);
    assert_eq!(c.sizes, BTreeMap::from([(0, 1), (1, 1), (2, 2), (4, 2), (5, 1)]));
    assert_eq!(c.missing, vec![3]);
    assert_eq!(c, c.recomputed());
    let cores = c.cores.expect("partitions listed");
    assert_eq!(cores[&2], vec!["(1,1)", "(2)"]);

    let counts: CoresJson = json(&["cores", "--n", "2", "--max", "5", "--count-only", "--json"]);
    assert!(counts.cores.is_none());

    let csv = atomic(&["cores", "--n", "2", "--max", "5", "--format", "csv"]).stdout;
    assert_eq!(csv, "size,count\n0,1\n1,1\n2,2\n4,2\n5,1\n");
}

#[test]
fn entropy_stats_csv() {
    let out = atomic(&["entropy", "--n", "3", "--stats", "--format", "csv"]);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("one_line,length,invsum,ninvsum,entropy,cosine"));
    assert_eq!(lines.next(), Some("123,0,0,4,0,14"));
    assert_eq!(lines.last(), Some("321,3,4,0,8,10"));
    assert_eq!(out.stdout.lines().count(), 7);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(atomic(&["image", "--type", "Q3"]).code, EXIT_USAGE);
    assert_eq!(atomic(&["image"]).code, EXIT_USAGE);
    assert_eq!(atomic(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(atomic(&["image", "--type", "A2", "--weight", "1,-1"]).code, EXIT_USAGE);
    assert_eq!(atomic(&["image", "--type", "A2", "--threads", "0"]).code, EXIT_USAGE);
    assert!(!atomic(&["image", "--type", "Q3"]).stderr.is_empty());
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(atomic(&["--help"]).code, 0);
    assert_eq!(atomic(&["--version"]).code, 0);
}

#[test]
fn caps_exit_three_with_structured_error() {
    for args in [
        &["image", "--type", "E8"][..],
        &["image", "--type", "E7", "--max-states", "1000"],
        &["entropy", "--n", "13"],
    ] {
        let out = atomic(args);
        assert_eq!(out.code, EXIT_CAP, "{args:?}");
        assert!(out.stdout.is_empty());
        let err: CapErrorJson = serde_json::from_str(&out.stderr).unwrap();
        assert_eq!(err.error, "cap_exceeded");
        assert!(err.hint.contains("--stress"));
    }
    let err: CapErrorJson = serde_json::from_str(&atomic(&["image", "--type", "E8"]).stderr).unwrap();
    assert_eq!(err.kind, "orbit_too_large");
}

#[test]
fn verify_passes() {
    let out = atomic(&["verify", "--json"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v: VerifyJson = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v.failed, 0);
    assert_eq!(v.passed, v.checks.len());
}

fn finite_label() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn image_json_is_self_consistent(label in finite_label(), m in prop::collection::vec(0i64..3, 4)) {
        let rank = label[1..].parse::<usize>().unwrap();
        let weight = m[..rank].iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let r: ImageJson = json(&["image", "--type", label, "--weight", &weight, "--json"]);
        prop_assert_eq!(&r, &r.recomputed());
        prop_assert_eq!(r.values.first().copied(), Some(0));
        prop_assert_eq!(r.values.last().copied(), Some(r.max));
        let back: ImageJson = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn cores_json_is_self_consistent(n in 1usize..5, max in 0usize..40) {
        let c: CoresJson = json(&["cores", "--n", &n.to_string(), "--max", &max.to_string(), "--json"]);
        prop_assert_eq!(&c, &c.recomputed());
        let listed = c.cores.as_ref().unwrap();
        for (size, count) in &c.sizes {
            prop_assert_eq!(listed[size].len() as u64, *count);
        }
    }
}
