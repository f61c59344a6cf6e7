use std::path::{Path, PathBuf};

use hopfforge_cli::{execute, Outcome};

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name).to_string_lossy().into_owned()
}

fn machine(args: &[&str]) -> Outcome {
    machine_env(args, None)
}

fn machine_env(args: &[&str], env: Option<&str>) -> Outcome {
    let argv = ["hopfforge", "--format", "machine"].iter().chain(args).map(|s| s.to_string());
    execute(argv.collect::<Vec<_>>(), env)
}

const C5: &str = "field: Q\ngenerators: t\nrelations:\n  t*t*t*t*t - 1\ndelta:\n  t -> t (#) t\ncounit:\n  t -> 1\n";

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn validate_sweedler() {
    let out = machine(&["validate", &corpus("sweedler.hopf")]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "CHECK relations PASS\nCHECK coassociativity PASS\nCHECK counit PASS\nCHECK coideal PASS\n\
         CHECK hopf-ideal PASS\nCHECK antipode PASS\nverified: exact\n"
    );
    assert_eq!(out.stderr, "");
}

#[test]
fn failed_check_is_named() {
    let out = machine(&["validate", &corpus("broken-counit.hopf")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("CHECK counit FAIL generator x"), "{}", out.stdout);
    assert_eq!(out.stderr, "FAILED: counit\n");
}

#[test]
fn coequalizer_then_basis() {
    let quotient = temp_file("z3.hopf", "");
    let out = machine(&["coequalizer", &corpus("z_times4.map"), "-o", quotient.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "");
    let out = machine(&["basis", quotient.to_str().unwrap(), "-d", "4"]);
    assert_eq!(out.stdout, "COUNT 3\nWORD 1\nWORD t\nWORD t_inv\nverified: exact\n");
    let out = machine(&["validate", quotient.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn coequalizer_reports_ideal_checks() {
    let out = machine(&["coequalizer", &corpus("z_times4.map")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("#   -t + t*t*t*t: counit PASS, coideal PASS, antipode PASS\n"), "{}", out.stdout);
}

#[test]
fn idempotent_table_has_no_antipode() {
    let out = machine(&["antipode", &corpus("idempotent.table")]);
    assert_eq!((out.code, out.stdout.as_str()), (1, "INFEASIBLE: no antipode\n"));
    assert_eq!(out.stderr, "FAILED: antipode\n");
    let out = machine(&["probe", &corpus("idempotent.table")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "FOUND dim 1\nindices: 0\nbasis: 1\nantipode:\n  0 = 1\n");
}

#[test]
fn h4_table_antipode() {
    let out = machine(&["antipode", &corpus("h4.table")]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "antipode:\n  0 = 1 0 0 0\n  1 = 0 1 0 0\n  2 = 0 0 0 -1\n  3 = 0 0 1 0\nCHECK stored-antipode PASS\n"
    );
}

#[test]
fn compile_matches_corpus_table() {
    let out = machine(&["compile", &corpus("sweedler.hopf"), "-d", "3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, std::fs::read_to_string(corpus("h4.table")).unwrap());
    let out = machine(&["compile", &corpus("primitive-x.hopf"), "-d", "3"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stderr, "FAILED: finite-dimensional\n");
}

#[test]
fn coproduct_output_parses_back() {
    let out = machine(&["coproduct", &corpus("z2.hopf"), &corpus("sweedler.hopf")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("generators: g@1 g_inv@1 g@2 x@2\n"));
    assert!(out.stdout.ends_with("labeling:\n  q_1: g -> g@1, g_inv -> g_inv@1\n  q_2: g -> g@2, x -> x@2\n"));
    let path = temp_file("coproduct.hopf", &out.stdout);
    let out = machine(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn induced_maps() {
    let out = machine(&["induce", "coeq", &corpus("z_times4.map"), &corpus("z_to_z3.map")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "CHECK factorization PASS\nCHECK hopf-map PASS\nh':\n  t -> g\n  t_inv -> g_inv\n");
    let out = machine(&["induce", "coeq", &corpus("z_times4.map"), &corpus("z_to_z5.map")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("CHECK factorization FAIL "), "{}", out.stdout);
    let out = machine(&["induce", "cocone", &corpus("z_to_z3.map"), &corpus("z3_to_z3.map")]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("u:\n  t -> g\n  t_inv -> g_inv\n  g -> g\n  g_inv -> g_inv\n"), "{}", out.stdout);
}

#[test]
fn check_map_names_the_failing_section() {
    let out = machine(&["check-map", &corpus("z2_to_z3.map")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("CHECK hopf-map h FAIL relation -1 + g*g"), "{}", out.stdout);
    let out = machine(&["check-map", &corpus("z_times4.map")]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "CHECK hopf-map f PASS\nCHECK hopf-map g PASS\n"));
}

#[test]
fn normal_forms_and_field_override() {
    let out = machine(&["nf", &corpus("sweedler.hopf"), "x*g*x + g*g*g"]);
    assert_eq!(out.stdout, "g\n");
    let out = machine(&["--field", "F5", "nf", &corpus("sweedler.hopf"), "7*x"]);
    assert_eq!(out.stdout, "2*x\n");
}

#[test]
fn degree_bound_precedence() {
    let path = temp_file("c5.hopf", C5);
    let path = path.to_str().unwrap();
    let last = |o: &Outcome| o.stdout.lines().last().unwrap().to_string();
    assert_eq!(last(&machine(&["basis", path, "-d", "3"])), "verified: exact");
    assert_eq!(last(&machine_env(&["basis", path, "-d", "3"], Some("5"))), "verified: up to degree 5");
    assert_eq!(last(&machine_env(&["--degree-bound", "20", "basis", path, "-d", "3"], Some("5"))), "verified: exact");
    // A value in the file wins over the environment.
    let sweedler = corpus("sweedler.hopf");
    assert_eq!(machine_env(&["validate", &sweedler], Some("1")).code, 0);
}

#[test]
fn input_errors_exit_2() {
    let path = temp_file("c5.hopf", C5);
    let out = machine_env(&["basis", path.to_str().unwrap(), "-d", "3"], Some("3"));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("degree 5 is required"), "{}", out.stderr);
    assert_eq!(machine_env(&["validate", &corpus("z3.hopf")], Some("x")).code, 2);
    let out = machine(&["nf", &corpus("sweedler.hopf"), "x*("]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("1:4"), "{}", out.stderr);
    assert_eq!(machine(&["validate", &corpus("missing.hopf")]).code, 2);
    assert_eq!(machine(&["coproduct", &corpus("z2.hopf")]).code, 2);
    assert_eq!(machine(&["example", "nope"]).code, 2);
    let bad = temp_file("bad.hopf", &C5.replace("  t -> t (#) t\n", "  t -> t (#)\n"));
    let out = machine(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("6:"), "{}", out.stderr);
}

#[test]
fn human_report() {
    let argv = ["hopfforge", "validate", "example:h4"];
    let out = execute(argv, None);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("relations        PASS\n"), "{}", out.stdout);
    assert!(out.stdout.ends_with("example:h4: Hopf algebra, exact\n"), "{}", out.stdout);
}
