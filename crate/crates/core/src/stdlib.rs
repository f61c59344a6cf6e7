//! Standard examples: group algebras of finitely presented groups, monoid
//! bialgebras, and Sweedler's four-dimensional Hopf algebra.

use std::sync::Arc;

use crate::algebra::{FreePoly, Signature, TensorPoly, Word};
use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::presentation::HopfPresentation;
use crate::scalar::Field;

/// A generator or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A finitely presented group `⟨generators | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Vec<Letter>>,
}

fn free_reduce(word: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for l in word {
        match out.last() {
            Some(prev) if prev.generator == l.generator && prev.inverse != l.inverse => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

impl GroupPresentation {
    /// Relators are written as products of `g`, `g^k` (k may be negative),
    /// separated by spaces or `*`.
    pub fn new(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let mut parsed = Vec::new();
        for text in relators {
            let mut word = Vec::new();
            for token in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
                let (name, exp) = match token.split_once('^') {
                    Some((n, e)) => {
                        let e: i64 = e.parse().map_err(|_| Error::Invalid(format!("bad exponent in `{token}`")))?;
                        (n, e)
                    }
                    None => (token, 1),
                };
                let generator = generators
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| Error::Invalid(format!("unknown group generator `{name}`")))?;
                let letter = Letter { generator, inverse: exp < 0 };
                word.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
            }
            let word = free_reduce(word);
            if word.is_empty() {
                return Err(Error::Invalid(format!("relator `{text}` is trivial")));
            }
            parsed.push(word);
        }
        Ok(GroupPresentation { generators, relators: parsed })
    }

    /// `Z/n = ⟨g | g^n⟩`
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        Self::new(&["g"], &[format!("g^{n}").as_str()]).expect("well-formed relator")
    }

    /// `Z = ⟨t | ⟩`
    pub fn integers() -> Self {
        Self::new(&["t"], &[]).expect("no relators")
    }

    pub fn trivial() -> Self {
        GroupPresentation { generators: Vec::new(), relators: Vec::new() }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }
}

/// Name of the formal inverse generator of `g`.
pub fn inverse_name(g: &str) -> String {
    format!("{g}_inv")
}

/// The group algebra `k[G]`: generators `g` and `g_inv` with two-sided
/// inverse relations, grouplike comultiplication, `ε = 1` and `S(g) = g_inv`.
pub fn group_algebra(group: &GroupPresentation, field: Field) -> Result<HopfPresentation> {
    let mut names = Vec::new();
    for g in &group.generators {
        names.push(g.clone());
        names.push(inverse_name(g));
    }
    let sig = Signature::new(names, field)?;
    let letter = |l: &Letter| (2 * l.generator + usize::from(l.inverse)) as u32;
    let one = FreePoly::one(&sig);
    let mut relations = Vec::new();
    for i in 0..group.generators.len() as u32 {
        let (g, h) = (2 * i, 2 * i + 1);
        relations.push(&FreePoly::word(&sig, Word::from_letters(vec![g, h])) - &one);
        relations.push(&FreePoly::word(&sig, Word::from_letters(vec![h, g])) - &one);
    }
    for r in &group.relators {
        let w = Word::from_letters(r.iter().map(letter).collect::<Vec<_>>());
        relations.push(&FreePoly::word(&sig, w) - &one);
    }
    let delta = (0..sig.len() as u32)
        .map(|g| {
            let x = FreePoly::generator(&sig, g);
            TensorPoly::product(&x, &x)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let counit = vec![sig.one(); sig.len()];
    let antipode = (0..sig.len() as u32).map(|g| FreePoly::generator(&sig, g ^ 1)).collect();
    HopfPresentation::new(&sig, relations, delta, counit, Some(antipode), None)
}

/// The monoid bialgebra on `generators` modulo word equations `lhs = rhs`:
/// every generator grouplike with counit 1, no antipode.
pub fn monoid_bialgebra(generators: &[&str], equations: &[(&str, &str)], field: Field) -> Result<HopfPresentation> {
    let sig = Signature::new(generators.iter().copied(), field)?;
    let relations = equations
        .iter()
        .map(|(l, r)| Ok(&parse_poly(&sig, l)? - &parse_poly(&sig, r)?))
        .collect::<Result<Vec<_>>>()?;
    grouplike_bialgebra(&sig, relations)
}

fn grouplike_bialgebra(sig: &Arc<Signature>, relations: Vec<FreePoly>) -> Result<HopfPresentation> {
    let delta = (0..sig.len() as u32)
        .map(|g| {
            let x = FreePoly::generator(sig, g);
            TensorPoly::product(&x, &x)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    HopfPresentation::new(sig, relations, delta, vec![sig.one(); sig.len()], None, None)
}

/// Sweedler's Hopf algebra `H4 = ⟨g, x | g² = 1, x² = 0, xg = -gx⟩` with
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(g) = g`, `S(x) = -gx`.
pub fn sweedler_h4(field: Field) -> Result<HopfPresentation> {
    if field.characteristic() == 2 {
        return Err(Error::Invalid("Sweedler's algebra needs characteristic other than 2".into()));
    }
    let sig = Signature::new(["g", "x"], field)?;
    let p = |s: &str| parse_poly(&sig, s).expect("fixed text parses");
    let g = p("g");
    let x = p("x");
    let one = p("1");
    let relations = vec![p("g*g - 1"), p("x*x"), p("x*g + g*x")];
    let delta = vec![
        TensorPoly::product(&g, &g)?,
        TensorPoly::product(&x, &one)?.try_add(&TensorPoly::product(&g, &x)?)?,
    ];
    let counit = vec![sig.one(), sig.zero()];
    let antipode = vec![g.clone(), p("-g*x")];
    HopfPresentation::new(&sig, relations, delta, counit, Some(antipode), None)
}

/// The tensor algebra on one primitive generator: `Δx = x⊗1 + 1⊗x`,
/// `ε(x) = 0`, `S(x) = -x`. Infinite-dimensional.
pub fn primitive_line(field: Field) -> Result<HopfPresentation> {
    let sig = Signature::new(["x"], field)?;
    let x = FreePoly::generator(&sig, 0);
    let one = FreePoly::one(&sig);
    let delta = vec![TensorPoly::product(&x, &one)?.try_add(&TensorPoly::product(&one, &x)?)?];
    HopfPresentation::new(&sig, Vec::new(), delta, vec![sig.zero()], Some(vec![x.neg()]), None)
}

/// Names accepted by [`example`].
pub const EXAMPLE_NAMES: &[&str] =
    &["h4", "z<n>", "z", "trivial", "grouplike-x", "idempotent", "nxn", "primitive-x"];

/// Looks up a bundled example by name.
pub fn example(name: &str, field: Field) -> Result<HopfPresentation> {
    match name {
        "h4" | "sweedler" => sweedler_h4(field),
        "z" => group_algebra(&GroupPresentation::integers(), field),
        "trivial" => group_algebra(&GroupPresentation::trivial(), field),
        "grouplike-x" => monoid_bialgebra(&["x"], &[], field),
        "idempotent" => monoid_bialgebra(&["e"], &[("e*e", "e")], field),
        "nxn" => monoid_bialgebra(&["x", "y"], &[("y*x", "x*y")], field),
        "primitive-x" => primitive_line(field),
        _ => match name.strip_prefix('z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => group_algebra(&GroupPresentation::cyclic(n), field),
            _ => Err(Error::Invalid(format!(
                "unknown example `{name}` (known: {})",
                EXAMPLE_NAMES.join(", ")
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relators_are_freely_reduced() {
        let g = GroupPresentation::new(&["a", "b"], &["a b b^-1 a"]).unwrap();
        assert_eq!(g.relators()[0].len(), 2);
        assert!(GroupPresentation::new(&["a"], &["a a^-1"]).is_err());
        assert!(GroupPresentation::new(&["a"], &["c"]).is_err());
    }

    #[test]
    fn z2_inverse_collapses_onto_generator() {
        let z2 = group_algebra(&GroupPresentation::cyclic(2), Field::Rational).unwrap();
        let basis: Vec<String> =
            z2.basis_up_to_degree(3).unwrap().iter().map(|w| w.render(z2.signature())).collect();
        assert_eq!(basis, ["1", "g"]);
    }

    #[test]
    fn trivial_group_is_the_base_field() {
        let k = example("trivial", Field::Rational).unwrap();
        assert_eq!(k.basis_up_to_degree(3).unwrap(), vec![Word::unit()]);
        assert!(k.validate().unwrap().is_hopf());
    }

    #[test]
    fn sweedler_rejects_characteristic_two() {
        assert!(sweedler_h4(Field::prime(2).unwrap()).is_err());
        assert!(sweedler_h4(Field::prime(3).unwrap()).unwrap().validate().unwrap().is_hopf());
    }

    #[test]
    fn unknown_example() {
        assert!(example("z0", Field::Rational).is_err());
        assert!(example("nope", Field::Rational).is_err());
        assert!(example("z5", Field::Rational).is_ok());
    }
}
