//! Coproducts and coequalizers of presented Hopf algebras, with the maps
//! their universal properties induce.
//!
//! The coproduct of `H_1, …, H_n` is presented on the disjoint union of the
//! factor alphabets with the union of the factor relations; the tables are the
//! factor tables, renamed. All factors share the empty word as unit, so no
//! unit identifications are needed. The coequalizer of `f, g: B → A` is `A`
//! modulo the differences `f(b) - g(b)` for generators `b` of `B`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{FreePoly, Signature};
use crate::error::{Error, Result};
use crate::presentation::{HopfMap, HopfPresentation};

/// Renamings of the factor alphabets into a coproduct, with the structure
/// maps `q_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductLabeling {
    coproduct: Arc<HopfPresentation>,
    renamings: Vec<Vec<u32>>,
    injections: Vec<HopfMap>,
}

impl CoproductLabeling {
    pub fn coproduct(&self) -> &Arc<HopfPresentation> {
        &self.coproduct
    }

    pub fn len(&self) -> usize {
        self.renamings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.renamings.is_empty()
    }

    /// Coproduct generator index of each generator of factor `l` (0-based).
    pub fn renaming(&self, l: usize) -> &[u32] {
        &self.renamings[l]
    }

    /// `q_l` for the 0-based factor index `l`.
    pub fn injection(&self, l: usize) -> &HopfMap {
        &self.injections[l]
    }

    pub fn injections(&self) -> &[HopfMap] {
        &self.injections
    }

    pub fn factor(&self, l: usize) -> &Arc<HopfPresentation> {
        self.injections[l].source()
    }

    /// Factor index and factor generator of a coproduct generator.
    pub fn origin(&self, generator: u32) -> (usize, u32) {
        for (l, r) in self.renamings.iter().enumerate() {
            if let Some(g) = r.iter().position(|&c| c == generator) {
                return (l, g as u32);
            }
        }
        panic!("generator {generator} is not covered by the labeling")
    }
}

/// One line per factor: `q_1: x -> x@1, y -> y@1`.
impl fmt::Display for CoproductLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = self.coproduct.signature();
        for (l, q) in self.injections.iter().enumerate() {
            let source = q.source().signature();
            let parts: Vec<String> = self.renamings[l]
                .iter()
                .enumerate()
                .map(|(g, &c)| format!("{} -> {}", source.name(g as u32), target.name(c)))
                .collect();
            writeln!(f, "q_{}: {}", l + 1, parts.join(", "))?;
        }
        Ok(())
    }
}

fn same_presentation(a: &Arc<HopfPresentation>, b: &Arc<HopfPresentation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_fields(ps: &[&Arc<HopfPresentation>]) -> Result<()> {
    let first = ps[0].signature().field();
    for p in &ps[1..] {
        let field = p.signature().field();
        if field != first {
            return Err(Error::FieldMismatch(first.to_string(), field.to_string()));
        }
    }
    Ok(())
}

/// The coproduct of a nonempty family. The antipode table is present when
/// every factor has one. The degree bound defaults to the largest factor
/// bound plus two.
pub fn coproduct(
    factors: &[Arc<HopfPresentation>],
    degree_bound: Option<usize>,
) -> Result<(Arc<HopfPresentation>, CoproductLabeling)> {
    if factors.is_empty() {
        return Err(Error::Invalid("coproduct of an empty family".into()));
    }
    check_fields(&factors.iter().collect::<Vec<_>>())?;
    let field = factors[0].signature().field();

    let mut seen = BTreeSet::new();
    let disjoint = factors
        .iter()
        .flat_map(|p| p.signature().names())
        .all(|n| seen.insert(n.as_str()));
    let mut names = Vec::new();
    let mut renamings = Vec::new();
    for (l, p) in factors.iter().enumerate() {
        let mut r = Vec::new();
        for n in p.signature().names() {
            r.push(names.len() as u32);
            names.push(if disjoint { n.clone() } else { format!("{n}@{}", l + 1) });
        }
        renamings.push(r);
    }
    let sig = Signature::new(names, field)?;

    let mut relations = Vec::new();
    let mut delta = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = factors.iter().all(|p| p.is_hopf()).then(Vec::new);
    for (p, r) in factors.iter().zip(&renamings) {
        relations.extend(p.relations().iter().map(|x| x.rename(&sig, r)));
        delta.extend(p.delta_table().iter().map(|t| t.rename(&sig, r)));
        counit.extend(p.counit_table().iter().cloned());
        if let (Some(out), Some(s)) = (antipode.as_mut(), p.antipode_table()) {
            out.extend(s.iter().map(|x| x.rename(&sig, r)));
        }
    }
    let bound = degree_bound.unwrap_or_else(|| factors.iter().map(|p| p.degree_bound()).max().unwrap_or(0) + 2);
    let coproduct = Arc::new(HopfPresentation::new(&sig, relations, delta, counit, antipode, Some(bound))?);

    let injections = factors
        .iter()
        .zip(&renamings)
        .map(|(p, r)| HopfMap::new(p, &coproduct, r.iter().map(|&c| FreePoly::generator(&sig, c)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let labeling = CoproductLabeling { coproduct: coproduct.clone(), renamings, injections };
    Ok((coproduct, labeling))
}

/// The Hopf-ideal conditions for one added coequalizer relation, evaluated
/// in the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealCheck {
    pub relation: FreePoly,
    /// `ε(r) = 0`
    pub counit: bool,
    /// `Δ(r)` reduces to 0 in the tensor square of the quotient.
    pub coideal: bool,
    /// `S(r)` reduces to 0; `None` without an antipode.
    pub antipode: Option<bool>,
}

impl IdealCheck {
    pub fn passed(&self) -> bool {
        self.counit && self.coideal && self.antipode != Some(false)
    }
}

/// The coequalizer `A/I` of `f, g: B → A` with its projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coequalizer {
    f: HopfMap,
    g: HopfMap,
    quotient: Arc<HopfPresentation>,
    projection: HopfMap,
    added: Vec<FreePoly>,
}

impl Coequalizer {
    pub fn quotient(&self) -> &Arc<HopfPresentation> {
        &self.quotient
    }

    /// `π: A → A/I`, the identity on generators.
    pub fn projection(&self) -> &HopfMap {
        &self.projection
    }

    pub fn maps(&self) -> (&HopfMap, &HopfMap) {
        (&self.f, &self.g)
    }

    /// The relations `nf(f(b)) - nf(g(b))` added to `A`; differences that
    /// already vanish in `A` are omitted.
    pub fn added_relations(&self) -> &[FreePoly] {
        &self.added
    }

    /// Counit, coideal and antipode conditions for every added relation.
    pub fn ideal_checks(&self) -> Result<Vec<IdealCheck>> {
        let q = &self.quotient;
        self.added
            .iter()
            .map(|r| {
                let antipode = if q.is_hopf() { Some(q.s_of(r)?.is_zero()) } else { None };
                Ok(IdealCheck {
                    relation: r.clone(),
                    counit: q.eps_of(r)?.is_zero(),
                    coideal: q.delta_of(r)?.is_zero(),
                    antipode,
                })
            })
            .collect()
    }
}

/// Quotients `A` by the ideal generated by `f(b) - g(b)` over generators `b`.
///
/// Generator differences suffice: `f(xy) - g(xy) = f(x)(f(y) - g(y)) +
/// (f(x) - g(x))g(y)`. Both maps must be bialgebra maps with the same source
/// and target. The degree bound defaults to the larger input bound plus two,
/// raised if needed to twice the largest relation degree.
pub fn coequalizer(f: &HopfMap, g: &HopfMap, degree_bound: Option<usize>) -> Result<Coequalizer> {
    if !same_presentation(f.source(), g.source()) {
        return Err(Error::MapMismatch("the two maps have different sources".into()));
    }
    if !same_presentation(f.target(), g.target()) {
        return Err(Error::MapMismatch("the two maps have different targets".into()));
    }
    for (name, m) in [("f", f), ("g", g)] {
        if let Some(defect) = m.defects()?.into_iter().next() {
            return Err(Error::NotHopfMap(format!("{name}: {defect}")));
        }
    }
    let a = f.target();
    let b = f.source();
    let sig = a.signature();
    let mut added = Vec::new();
    for x in 0..b.signature().len() as u32 {
        let generator = b.generator(x);
        let d = f.apply(&generator)?.try_sub(&g.apply(&generator)?)?;
        if !d.is_zero() && !added.contains(&d) {
            added.push(d);
        }
    }
    let mut relations = a.relations().to_vec();
    relations.extend(added.iter().cloned());
    let bound = degree_bound.unwrap_or_else(|| {
        let inputs = a.degree_bound().max(b.degree_bound()) + 2;
        let needed = 2 * relations.iter().filter_map(FreePoly::degree).max().unwrap_or(0);
        inputs.max(needed)
    });
    let quotient = Arc::new(HopfPresentation::new(
        sig,
        relations,
        a.delta_table().to_vec(),
        a.counit_table().to_vec(),
        a.antipode_table().map(<[FreePoly]>::to_vec),
        Some(bound),
    )?);
    let projection = HopfMap::new(a, &quotient, (0..sig.len() as u32).map(|x| quotient.generator(x)).collect())?;
    Ok(Coequalizer { f: f.clone(), g: g.clone(), quotient, projection, added })
}

/// The map `h': A/I → K` with `h'∘π = h`, for `h: A → K` with `h∘f = h∘g`.
pub fn induced_from_coeq(h: &HopfMap, coeq: &Coequalizer) -> Result<HopfMap> {
    let (f, g) = coeq.maps();
    if !same_presentation(h.source(), f.target()) {
        return Err(Error::MapMismatch("h is not defined on the target of the coequalized maps".into()));
    }
    let b = f.source();
    for x in 0..b.signature().len() as u32 {
        let generator = b.generator(x);
        let hf = h.apply(&f.apply(&generator)?)?;
        let hg = h.apply(&g.apply(&generator)?)?;
        if hf != hg {
            return Err(Error::DoesNotFactor {
                generator: b.signature().name(x).to_string(),
                detail: format!("h(f(b)) = {hf}, h(g(b)) = {hg}"),
            });
        }
    }
    HopfMap::new(coeq.quotient(), h.target(), h.gen_map().images().to_vec())
}

/// The map `u: ∐ H_l → K` with `u∘q_l = h_l` for a cocone `h_l: H_l → K`.
pub fn induced_from_cocone(maps: &[HopfMap], labeling: &CoproductLabeling) -> Result<HopfMap> {
    if maps.len() != labeling.len() {
        return Err(Error::MapMismatch(format!(
            "{} maps for a coproduct of {} factors",
            maps.len(),
            labeling.len()
        )));
    }
    let Some(first) = maps.first() else {
        return Err(Error::Invalid("empty cocone".into()));
    };
    let target = first.target();
    for (l, h) in maps.iter().enumerate() {
        if !same_presentation(h.source(), labeling.factor(l)) {
            return Err(Error::MapMismatch(format!("h_{} does not start at factor {}", l + 1, l + 1)));
        }
        if !same_presentation(h.target(), target) {
            return Err(Error::MapMismatch(format!("h_{} has a different target than h_1", l + 1)));
        }
        if let Some(defect) = h.defects()?.into_iter().next() {
            return Err(Error::NotHopfMap(format!("h_{}: {defect}", l + 1)));
        }
    }
    let coproduct = labeling.coproduct();
    let images = (0..coproduct.signature().len() as u32)
        .map(|c| {
            let (l, g) = labeling.origin(c);
            maps[l].image(g).clone()
        })
        .collect();
    HopfMap::new(coproduct, target, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;
    use crate::parse::parse_poly;
    use crate::rewrite::Membership;
    use crate::scalar::Field;
    use crate::stdlib::example;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ex(name: &str) -> Arc<HopfPresentation> {
        Arc::new(example(name, Field::Rational).unwrap())
    }

    fn map(src: &Arc<HopfPresentation>, tgt: &Arc<HopfPresentation>, images: &[&str]) -> HopfMap {
        let images = images.iter().map(|s| parse_poly(tgt.signature(), s).unwrap()).collect();
        HopfMap::new(src, tgt, images).unwrap()
    }

    fn z_times4() -> Coequalizer {
        let z = ex("z");
        let f = map(&z, &z, &["t^4", "t_inv^4"]);
        let id = HopfMap::identity(&z);
        coequalizer(&f, &id, None).unwrap()
    }

    #[test]
    fn single_factor_keeps_the_presentation() {
        let h4 = ex("h4");
        let (c, labeling) = coproduct(std::slice::from_ref(&h4), None).unwrap();
        assert_eq!(c.signature().names(), h4.signature().names());
        assert_eq!(c.relations(), h4.relations());
        assert_eq!(c.delta_table(), h4.delta_table());
        assert_eq!(c.antipode_table(), h4.antipode_table());
        assert_eq!(c.degree_bound(), h4.degree_bound() + 2);
        assert_eq!(labeling.to_string(), "q_1: g -> g, x -> x\n");
    }

    #[test]
    fn colliding_alphabets_are_tagged() {
        let z2 = ex("z2");
        let (c, labeling) = coproduct(&[z2.clone(), z2.clone()], None).unwrap();
        assert_eq!(c.signature().names(), ["g@1", "g_inv@1", "g@2", "g_inv@2"]);
        assert_eq!(labeling.to_string(), "q_1: g -> g@1, g_inv -> g_inv@1\nq_2: g -> g@2, g_inv -> g_inv@2\n");
        assert_eq!(labeling.origin(2), (1, 0));
        assert!(c.validate().unwrap().is_hopf());
        for q in labeling.injections() {
            assert!(q.check_hopf_map().unwrap());
        }
        assert_eq!(c.grouplikes(3).unwrap().len(), 7);
    }

    #[test]
    fn sweedler_free_product() {
        let (c, _) = coproduct(&[ex("h4"), ex("z2")], None).unwrap();
        assert!(c.validate().unwrap().is_hopf());
        assert_eq!(c.signature().names(), ["g@1", "x@1", "g@2", "g_inv@2"]);
        let x = parse_poly(c.signature(), "x@1").unwrap();
        assert_eq!(c.s_of(&x).unwrap(), parse_poly(c.signature(), "-g@1*x@1").unwrap());
        for g in 0..4 {
            assert!(c.antipode_axiom_check(&c.generator(g)).unwrap());
        }
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f3 = Arc::new(example("z2", Field::prime(3).unwrap()).unwrap());
        assert!(matches!(coproduct(&[ex("z2"), f3], None), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn bialgebra_factor_drops_the_antipode() {
        let (c, _) = coproduct(&[ex("z2"), ex("idempotent")], None).unwrap();
        assert!(!c.is_hopf());
        assert!(c.validate().unwrap().passed());
    }

    #[test]
    fn coequalizer_of_multiplication_by_four() {
        let coeq = z_times4();
        let q = coeq.quotient();
        let rules = q.rewrite_system().to_string();
        assert_eq!(rules, "t*t => t_inv\nt*t_inv => 1\nt_inv*t => 1\nt_inv*t_inv => t\nconfluent: full\n");
        for d in 2..6 {
            assert_eq!(q.basis_up_to_degree(d).unwrap().len(), 3);
        }
        assert!(q.validate().unwrap().is_hopf());
        let checks = coeq.ideal_checks().unwrap();
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(IdealCheck::passed));
        assert!(coeq.projection().check_hopf_map().unwrap());
    }

    #[test]
    fn coequalizer_of_equal_maps_adds_nothing() {
        let h4 = ex("h4");
        let id = HopfMap::identity(&h4);
        let coeq = coequalizer(&id, &id, None).unwrap();
        assert!(coeq.added_relations().is_empty());
        assert_eq!(coeq.quotient().basis_up_to_degree(4).unwrap(), h4.basis_up_to_degree(4).unwrap());
    }

    #[test]
    fn coequalizer_with_the_counit_map_is_trivial() {
        let z2 = ex("z2");
        let trivial = map(&z2, &z2, &["1", "1"]);
        let coeq = coequalizer(&HopfMap::identity(&z2), &trivial, None).unwrap();
        assert_eq!(coeq.quotient().basis_up_to_degree(3).unwrap(), vec![Word::unit()]);
        assert!(coeq.ideal_checks().unwrap().iter().all(IdealCheck::passed));
    }

    #[test]
    fn coequalizer_rejects_non_maps() {
        let z2 = ex("z2");
        let z3 = ex("z3");
        let bad = map(&z2, &z3, &["g", "g_inv"]);
        let good = map(&z2, &z3, &["1", "1"]);
        assert!(matches!(coequalizer(&bad, &good, None), Err(Error::NotHopfMap(_))));
        let other = map(&z3, &z3, &["1", "1"]);
        assert!(matches!(coequalizer(&good, &other, None), Err(Error::MapMismatch(_))));
    }

    #[test]
    fn generator_differences_generate_all_differences() {
        let z = ex("z");
        let f = map(&z, &z, &["t^4", "t_inv^4"]);
        let g = HopfMap::identity(&z);
        let coeq = coequalizer(&f, &g, None).unwrap();
        let ideal = coeq.quotient().rewrite_system();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let len = rng.gen_range(0..5);
            let w = Word::from_letters((0..len).map(|_| rng.gen_range(0..2)).collect::<Vec<u32>>());
            let p = FreePoly::word(z.signature(), w);
            let diff = f.apply(&p).unwrap().try_sub(&g.apply(&p).unwrap()).unwrap();
            assert_eq!(ideal.ideal_contains(&diff).unwrap(), Membership::Yes);
        }
    }

    #[test]
    fn factorization_through_the_coequalizer() {
        let coeq = z_times4();
        let z = coeq.maps().0.target().clone();
        let z3 = ex("z3");
        let h = map(&z, &z3, &["g", "g_inv"]);
        let induced = induced_from_coeq(&h, &coeq).unwrap();
        assert!(induced.check_hopf_map().unwrap());
        assert!(induced.compose(coeq.projection()).unwrap().agrees_with(&h));

        let pi = coeq.projection().clone();
        let identity = induced_from_coeq(&pi, &coeq).unwrap();
        assert_eq!(identity, HopfMap::identity(coeq.quotient()));

        let z5 = ex("z5");
        let bad = map(&z, &z5, &["g", "g_inv"]);
        match induced_from_coeq(&bad, &coeq) {
            Err(Error::DoesNotFactor { generator, .. }) => assert_eq!(generator, "t"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn factorization_through_the_coproduct() {
        let z2 = ex("z2");
        let (c, labeling) = coproduct(&[z2.clone(), z2.clone()], None).unwrap();
        let u = induced_from_cocone(labeling.injections(), &labeling).unwrap();
        assert_eq!(u, HopfMap::identity(&c));

        let id = HopfMap::identity(&z2);
        let codiagonal = induced_from_cocone(&[id.clone(), id.clone()], &labeling).unwrap();
        assert!(codiagonal.check_hopf_map().unwrap());
        let images: Vec<String> = codiagonal.gen_map().images().iter().map(|p| p.to_string()).collect();
        assert_eq!(images, ["g", "g_inv", "g", "g_inv"]);
        for l in 0..2 {
            assert!(codiagonal.compose(labeling.injection(l)).unwrap().agrees_with(&id));
        }

        let z3 = ex("z3");
        let bad = map(&z2, &z3, &["g", "g_inv"]);
        let trivial = map(&z2, &z3, &["1", "1"]);
        assert!(matches!(induced_from_cocone(&[trivial, bad], &labeling), Err(Error::NotHopfMap(m)) if m.starts_with("h_2")));
    }
}
