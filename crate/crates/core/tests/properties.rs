use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use hopfforge::findim::{compile, solve_antipode, AntipodeSolution};
use hopfforge::stdlib::example;
use hopfforge::{coproduct, Field, FreePoly, HopfPresentation, TensorPoly, Word};

const HOPF: &[&str] = &["h4", "z2", "z3", "z", "trivial", "primitive-x"];
const ALL: &[&str] = &["h4", "z2", "z3", "z", "trivial", "primitive-x", "grouplike-x", "idempotent", "nxn"];

fn bundled() -> &'static Vec<(&'static str, HopfPresentation)> {
    static CELL: OnceLock<Vec<(&'static str, HopfPresentation)>> = OnceLock::new();
    CELL.get_or_init(|| ALL.iter().map(|&n| (n, example(n, Field::Rational).unwrap())).collect())
}

fn get(name: &str) -> &'static HopfPresentation {
    &bundled().iter().find(|(n, _)| *n == name).unwrap().1
}

type RawPoly = Vec<(Vec<u32>, i64)>;

fn raw_poly(max_len: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0u32..8, 0..=max_len), -3i64..=3), 0..4)
}

fn build(p: &HopfPresentation, raw: &RawPoly) -> FreePoly {
    let sig = p.signature();
    let mut out = FreePoly::zero(sig);
    if sig.is_empty() {
        for (_, c) in raw {
            out.add_term(Word::unit(), &sig.field().from_i64(*c));
        }
        return out;
    }
    let n = sig.len() as u32;
    for (letters, c) in raw {
        out.add_term(Word::from_letters(letters.iter().map(|g| g % n).collect::<Vec<_>>()), &sig.field().from_i64(*c));
    }
    out
}

fn tensor_mul(p: &HopfPresentation, a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    p.tensor_normal_form(&a.try_mul(b).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_multiplicative(idx in 0..ALL.len(), a in raw_poly(3), b in raw_poly(3)) {
        let p = get(ALL[idx]);
        let (a, b) = (build(p, &a), build(p, &b));
        let na = p.normal_form(&a).unwrap();
        let nb = p.normal_form(&b).unwrap();
        prop_assert_eq!(p.normal_form(&na).unwrap(), na.clone());
        prop_assert_eq!(p.mul(&na, &nb).unwrap(), p.normal_form(&(&a * &b)).unwrap());
        prop_assert_eq!(p.normal_form(&(&a + &b)).unwrap(), &na + &nb);
    }

    #[test]
    fn structure_maps_are_multiplicative(idx in 0..ALL.len(), a in raw_poly(2), b in raw_poly(2)) {
        let p = get(ALL[idx]);
        let (a, b) = (build(p, &a), build(p, &b));
        let ab = &a * &b;
        prop_assert_eq!(p.delta_of(&ab).unwrap(), tensor_mul(p, &p.delta_of(&a).unwrap(), &p.delta_of(&b).unwrap()));
        prop_assert_eq!(p.eps_of(&ab).unwrap(), p.eps_of(&a).unwrap().mul(&p.eps_of(&b).unwrap()));
        prop_assert!(p.is_coassociative_on(&ab).unwrap());
    }

    #[test]
    fn antipode_is_anti_multiplicative(idx in 0..HOPF.len(), a in raw_poly(2), b in raw_poly(2)) {
        let p = get(HOPF[idx]);
        let (a, b) = (build(p, &a), build(p, &b));
        let lhs = p.s_of(&(&a * &b)).unwrap();
        let rhs = p.mul(&p.s_of(&b).unwrap(), &p.s_of(&a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_suffice_for_the_antipode(idx in 0..HOPF.len(), a in raw_poly(4)) {
        let p = get(HOPF[idx]);
        let a = p.normal_form(&build(p, &a)).unwrap();
        prop_assert!(p.antipode_axiom_check(&a).unwrap());
    }

    #[test]
    fn ideal_membership_matches_normal_form(idx in 0..ALL.len(), a in raw_poly(3)) {
        let p = get(ALL[idx]);
        let a = build(p, &a);
        let diff = a.try_sub(&p.normal_form(&a).unwrap()).unwrap();
        prop_assert_eq!(p.rewrite_system().ideal_contains(&diff).unwrap(), hopfforge::Membership::Yes);
    }
}

#[test]
fn coproduct_is_associative_up_to_renaming() {
    let h = |n: &str| Arc::new(get(n).clone());
    for triple in [["z2", "z3", "h4"], ["z", "z2", "z2"], ["h4", "primitive-x", "z3"]] {
        let [a, b, c] = triple.map(h);
        let (ab, _) = coproduct(&[a.clone(), b.clone()], None).unwrap();
        let (left, _) = coproduct(&[ab, c.clone()], None).unwrap();
        let (bc, _) = coproduct(&[b, c], None).unwrap();
        let (right, _) = coproduct(&[a, bc], None).unwrap();
        for d in 0..=4 {
            assert_eq!(
                left.basis_up_to_degree(d).unwrap().len(),
                right.basis_up_to_degree(d).unwrap().len(),
                "{triple:?} degree {d}"
            );
        }
        let (l, r) = (left.validate().unwrap(), right.validate().unwrap());
        assert_eq!(l.checks, r.checks, "{triple:?}");
        assert!(l.is_hopf());
    }
}

#[test]
fn compiled_antipodes_agree_with_presentations() {
    for (name, d) in [("h4", 3), ("z2", 2), ("z3", 4), ("trivial", 1)] {
        let table = compile(get(name), d).unwrap();
        assert!(table.check_bialgebra_axioms().passed(), "{name}");
        let AntipodeSolution::Antipode(s) = solve_antipode(&table).unwrap() else { panic!("{name}") };
        assert_eq!(Some(&s), table.antipode(), "{name}");
        assert!(table.is_anti_multiplicative(&s), "{name}");
        assert_eq!(table.antipode_defect(&s), None, "{name}");
    }
}

#[test]
fn bundled_examples_round_trip() {
    for (name, p) in bundled() {
        let text = p.to_text();
        let back = HopfPresentation::parse(&text).unwrap();
        assert_eq!(&back, p, "{name}");
        assert_eq!(back.to_text(), text, "{name}");
    }
}
