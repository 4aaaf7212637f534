use confspace::cli::run;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["confspace"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn invoke_json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let (code, out, err) = invoke(&argv);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).expect("one JSON document"))
}

#[test]
fn partition_counts_and_mobius() {
    let (code, out, _) = invoke(&["partitions", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("52 partitions"));
    assert!(out.contains("mobius(bottom, top) = 24"));
}

#[test]
fn homology_text_reports_top_rank() {
    let (code, out, _) = invoke(&["homology", "--pi", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("degree 2: rank 24, torsion none"), "{out}");
    let (_, out) = invoke(&["homology", "--pi", "4", "--coeff", "F3"]).into_ok();
    assert!(out.contains("degree 1: rank 6"));
}

trait IntoOk {
    fn into_ok(self) -> (i32, String);
}

impl IntoOk for (i32, String, String) {
    fn into_ok(self) -> (i32, String) {
        assert_eq!(self.0, 0, "{}", self.2);
        (self.0, self.1)
    }
}

#[test]
fn json_envelope() {
    let (code, doc) = invoke_json(&["pi-module", "--p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "pi-module");
    assert_eq!(doc["params"]["p"], 3);
    assert_eq!(doc["result"]["k_multiplicity"], 1);
    assert_eq!(doc["result"]["free_rank"], 0);
}

#[test]
fn gm_plain_and_equivariant() {
    let (_, doc) = invoke_json(&["gm", "--n", "5", "--d", "3"]);
    assert_eq!(doc["result"]["agree"], true);
    let (_, out) = invoke(&["gm", "--p", "3", "--d", "2"]).into_ok();
    assert!(out.contains("first positive degree with a fully stabilized orbit: 2"), "{out}");
    let (code, _, err) = invoke(&["gm", "--p", "2", "--k", "2", "--n", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("p^k"));
}

#[test]
fn whitney_modes() {
    let (_, doc) = invoke_json(&["whitney", "--n", "4", "--p", "3"]);
    assert_eq!(doc["result"]["agrees"], true);
    let (_, doc) = invoke_json(&["whitney", "--n", "4", "--p", "3", "--strict"]);
    assert_eq!(doc["result"]["boundary_squares_to_zero"], true);
}

#[test]
fn index_and_zeta() {
    let (_, out) = invoke(&["index", "--p", "5", "--d", "3"]).into_ok();
    assert!(out.contains("H^(>= 9)"), "{out}");
    assert!(out.contains("no Z/5-map"));
    let (_, doc) = invoke_json(&["index", "--p", "2", "--k", "3", "--d", "2", "--scan"]);
    assert_eq!(doc["result"]["n"], 4);
    assert_eq!(doc["result"]["scanned_n"], 4);
    let (_, doc) = invoke_json(&["zeta", "--p", "3", "--k", "2", "--h", "1,0", "--d", "2"]);
    assert_eq!(doc["result"]["divides"], true);
    assert_eq!(doc["result"]["zeta_h_power_degree"], 12);
}

#[test]
fn dual_sw_and_bounds() {
    let (_, out) = invoke(&["dual-sw", "--d", "2", "--k", "4"]).into_ok();
    assert!(out.contains("R^2 -> R^6"), "{out}");
    let (code, _, err) = invoke(&["dual-sw", "--d", "6", "--k", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("power of 2"));
}

#[test]
fn obstruction_exit_codes() {
    let (code, doc) = invoke_json(&["obstruction", "--builtin", "n4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["verdict"]["variables"], 18);
    assert_eq!(doc["result"]["alternate"]["verdict"]["variables"], 7);
    let (code, out, _) = invoke(&["obstruction", "--n", "7"]);
    assert_eq!(code, 1);
    assert!(out.contains("does not exist"));
    let (code, _, _) = invoke(&["obstruction", "--n", "12"]);
    assert_eq!(code, 0);
    let (code, _, _) = invoke(&["obstruction", "--n", "8", "--group", "symmetric"]);
    assert_eq!(code, 1);
}

#[test]
fn obstruction_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sys.txt");
    std::fs::write(&path, "# tiny\n2 x_[12|3] + 4 x_[13|2] = 3\n").unwrap();
    let (code, out, _) = invoke(&["obstruction", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("unsolvable"));
    std::fs::write(&path, "2 x_[12|3] +\n 3 x_[13|2] = 1\n").unwrap();
    let (code, _, _) = invoke(&["obstruction", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    std::fs::write(&path, "2 x_[12|3] + = 1\n").unwrap();
    let (code, _, err) = invoke(&["obstruction", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn stab_degree_matches_formula() {
    let (_, doc) = invoke_json(&["stab-degree", "--p", "2", "--k", "3", "--d", "3"]);
    assert_eq!(doc["result"]["degree"], 8);
    assert_eq!(doc["result"]["formula"], 8);
}

#[test]
fn cached_output_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = invoke(&["--json", "--cache-dir", d, "whitney", "--n", "4"]);
    let warm = invoke(&["--json", "--cache-dir", d, "whitney", "--n", "4"]);
    assert_eq!(cold, warm);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{ not json").unwrap();
    }
    let again = invoke(&["--json", "--cache-dir", d, "whitney", "--n", "4"]);
    assert_eq!(cold, again);
    let text_cold = invoke(&["--cache-dir", d, "whitney", "--n", "4"]);
    let text_warm = invoke(&["--cache-dir", d, "whitney", "--n", "4"]);
    assert_eq!(text_cold, text_warm);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(invoke(&["nonsense"]).0, 2);
    assert_eq!(invoke(&["partitions"]).0, 2);
    assert_eq!(invoke(&["homology", "--pi", "4", "--coeff", "F4"]).0, 2);
    assert_eq!(invoke(&["--help"]).0, 0);
    assert_eq!(invoke(&["--version"]).0, 0);
    let (code, _, err) = invoke(&["--max-bell", "100", "partitions", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}
