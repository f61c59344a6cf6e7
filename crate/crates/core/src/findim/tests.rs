use super::*;
use crate::stdlib::example;

fn table(name: &str, field: Field, d: usize) -> StructureTable {
    compile(&example(name, field).unwrap(), d).unwrap()
}

fn f3() -> Field {
    Field::prime(3).unwrap()
}

const DUAL_NUMBERS: &str = "\
dim: 2
basis: 1 x
mul:
  0 0 0 = 1
  0 1 1 = 1
  1 0 1 = 1
unit:
  1 0
delta:
  0 0 0 = 1
  1 1 0 = 1
  1 0 1 = 1
counit:
  1 0
";

/// Every 2x2 matrix over F3 satisfying the antipode equations, evaluated
/// straight from the structure constants.
fn brute_force_antipodes(t: &StructureTable) -> Vec<Matrix> {
    let f = t.field();
    let n = t.dim();
    assert_eq!(n, 2);
    let mut out = Vec::new();
    for code in 0..81u32 {
        let digits: Vec<Scalar> = (0..4).map(|p| f.from_i64(((code / 3u32.pow(p)) % 3) as i64)).collect();
        let s = Matrix::from_rows(f, vec![digits[0..2].to_vec(), digits[2..4].to_vec()]);
        let ok = (0..n).all(|i| {
            (0..n).all(|c| {
                let mut right = f.zero();
                let mut left = f.zero();
                for j in 0..n {
                    for k in 0..n {
                        for a in 0..n {
                            let d = t.delta(i, j, k);
                            right = right.add(&d.mul(s.get(a, k)).mul(t.mul(j, a, c)));
                            left = left.add(&d.mul(s.get(a, j)).mul(t.mul(a, k, c)));
                        }
                    }
                }
                let expected = t.counit()[i].mul(&t.unit()[c]);
                right == expected && left == expected
            })
        });
        if ok {
            out.push(s);
        }
    }
    out
}

#[test]
fn group_algebra_table() {
    let z2 = table("z2", Field::Rational, 2);
    assert_eq!(z2.labels(), ["1", "g"]);
    assert!(z2.check_bialgebra_axioms().passed());
    assert_eq!(solve_antipode(&z2).unwrap(), AntipodeSolution::Antipode(Matrix::identity(2, Field::Rational)));
}

#[test]
fn sweedler_table_matches_presentation() {
    let h4 = table("h4", Field::Rational, 3);
    assert_eq!(h4.labels(), ["1", "g", "x", "g*x"]);
    let report = h4.check_bialgebra_axioms();
    assert!(report.passed() && report.get("antipode") == Some(&CheckOutcome::Pass), "{report}");
    let AntipodeSolution::Antipode(s) = solve_antipode(&h4).unwrap() else { panic!("H4 has an antipode") };
    assert_eq!(Some(&s), h4.antipode());
    assert_eq!(s.column(2), ["0", "0", "0", "-1"].map(|c| Field::Rational.from_i64(c.parse().unwrap())));
    assert!(!s.pow(2).is_identity());
    assert!(s.pow(4).is_identity());
    assert!(h4.is_anti_multiplicative(&s));
}

#[test]
fn cyclic_table_dimension() {
    let z3 = table("z3", Field::Rational, 4);
    assert_eq!(z3.labels(), ["1", "g", "g_inv"]);
    assert!(z3.check_bialgebra_axioms().passed());
}

#[test]
fn infinite_dimensional_presentations_do_not_compile() {
    let p = example("primitive-x", Field::Rational).unwrap();
    for d in 0..5 {
        assert_eq!(compile(&p, d), Err(Error::NotFiniteDimensional(d)));
    }
    let z = example("z", Field::Rational).unwrap();
    assert_eq!(compile(&z, 3), Err(Error::NotFiniteDimensional(3)));
}

#[test]
fn idempotent_bialgebra_has_no_antipode() {
    let t = table("idempotent", Field::Rational, 2);
    assert_eq!(t.labels(), ["1", "e"]);
    assert!(t.check_bialgebra_axioms().passed());
    assert_eq!(solve_antipode(&t).unwrap(), AntipodeSolution::Infeasible);
    match coreflection_probe(&t, PROBE_MAX_DIM).unwrap() {
        ProbeResult::Found { subset, antipode } => {
            assert_eq!(subset, [0]);
            assert!(antipode.is_identity());
        }
        ProbeResult::NotFound => panic!("the unit span is always Hopf"),
    }
}

#[test]
fn probe_keeps_hopf_tables_whole() {
    for (name, d) in [("h4", 3), ("z2", 2), ("z3", 4)] {
        let t = table(name, Field::Rational, d);
        let ProbeResult::Found { subset, .. } = coreflection_probe(&t, PROBE_MAX_DIM).unwrap() else { panic!() };
        assert_eq!(subset, (0..t.dim()).collect::<Vec<_>>(), "{name}");
    }
    let h4 = table("h4", Field::Rational, 3);
    assert_eq!(coreflection_probe(&h4, 3), Err(Error::TooLarge { dim: 4, limit: 3 }));
}

#[test]
fn probe_finds_grouplike_part() {
    // k[Z/2] ⊗ idempotent: basis 1, g, e, ge. The Hopf coordinate part is k[Z/2].
    let t = table("z2", Field::Rational, 2);
    let i = table("idempotent", Field::Rational, 2);
    let n = 4;
    let pair = |a: usize| (a / 2, a % 2);
    let mut mul = Vec::new();
    let mut delta = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ((a1, a2), (b1, b2), (c1, c2)) = (pair(a), pair(b), pair(c));
                mul.push(t.mul(a1, b1, c1).mul(i.mul(a2, b2, c2)));
                delta.push(t.delta(a1, b1, c1).mul(i.delta(a2, b2, c2)));
            }
        }
    }
    let unit = (0..n).map(|a| t.unit()[a / 2].mul(&i.unit()[a % 2])).collect();
    let counit = (0..n).map(|a| t.counit()[a / 2].mul(&i.counit()[a % 2])).collect();
    let labels = ["1", "e", "g", "g*e"].map(String::from).to_vec();
    let product = StructureTable::new(Field::Rational, labels, mul, unit, delta, counit, None).unwrap();
    assert!(product.check_bialgebra_axioms().passed());
    assert_eq!(solve_antipode(&product).unwrap(), AntipodeSolution::Infeasible);
    let ProbeResult::Found { subset, .. } = coreflection_probe(&product, PROBE_MAX_DIM).unwrap() else { panic!() };
    assert_eq!(subset, [0, 2]);
}

#[test]
fn non_multiplicative_coproduct_is_reported() {
    let t = parse_table(DUAL_NUMBERS).unwrap();
    let report = t.check_bialgebra_axioms();
    for name in ["associativity", "unit", "coassociativity", "counit", "counit-multiplicative"] {
        assert_eq!(report.get(name), Some(&CheckOutcome::Pass), "{name}");
    }
    assert_eq!(
        report.get("compatibility"),
        Some(&CheckOutcome::Fail("Delta(x*x) != Delta(x)*Delta(x) at (x, x)".into()))
    );
}

#[test]
fn solver_agrees_with_brute_force_over_f3() {
    for name in ["z2", "idempotent"] {
        let t = table(name, f3(), 2);
        let brute = brute_force_antipodes(&t);
        match solve_antipode(&t).unwrap() {
            AntipodeSolution::Antipode(s) => assert_eq!(brute, [s], "{name}"),
            AntipodeSolution::Infeasible => assert!(brute.is_empty(), "{name}"),
        }
    }
    assert_eq!(brute_force_antipodes(&table("z2", f3(), 2)).len(), 1);
    assert!(brute_force_antipodes(&table("idempotent", f3(), 2)).is_empty());
}

#[test]
fn table_files_round_trip() {
    for (name, d) in [("h4", 3), ("z3", 4), ("idempotent", 2)] {
        let t = table(name, Field::Rational, d);
        let text = print_table(&t);
        let back = parse_table(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(print_table(&back), text);
    }
    let z2 = table("z2", Field::Rational, 2);
    assert_eq!(
        print_table(&z2),
        "dim: 2\nfield: Q\nbasis: 1 g\nmul:\n  0 0 0 = 1\n  0 1 1 = 1\n  1 0 1 = 1\n  1 1 0 = 1\nunit:\n  1 0\n\
         delta:\n  0 0 0 = 1\n  1 1 1 = 1\ncounit:\n  1 1\nantipode:\n  0 = 1 0\n  1 = 0 1\n"
    );
}

#[test]
fn table_parse_errors() {
    let bad_index = DUAL_NUMBERS.replace("1 0 1 = 1\nunit", "1 0 2 = 1\nunit");
    match parse_table(&bad_index) {
        Err(Error::Parse(e)) => assert_eq!((e.line, e.column), (6, 7)),
        other => panic!("unexpected {other:?}"),
    }
    let bad_scalar = DUAL_NUMBERS.replace("counit:\n  1 0", "counit:\n  1 z");
    match parse_table(&bad_scalar) {
        Err(Error::Parse(e)) => assert_eq!((e.line, e.column), (14, 5)),
        other => panic!("unexpected {other:?}"),
    }
    let no_unit = DUAL_NUMBERS.replacen("unit:\n  1 0\n", "", 1);
    assert!(matches!(parse_table(&no_unit), Err(Error::IncompleteTable(_))));
}

#[test]
fn combinations_are_lexicographic() {
    let all: Vec<Vec<usize>> = combinations(4, 2).collect();
    assert_eq!(all, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    assert_eq!(combinations(3, 0).collect::<Vec<_>>(), [Vec::<usize>::new()]);
    assert_eq!(combinations(2, 3).count(), 0);
}
