//! Finite-dimensional bialgebras as structure-constant tables.
//!
//! A [`StructureTable`] over the basis `e_0, …, e_{n-1}` stores
//! `e_i·e_j = Σ_k m[i][j][k] e_k`, the unit `Σ u_k e_k`,
//! `Δ(e_i) = Σ_{j,k} Δ[i][j][k] e_j⊗e_k` and `ε(e_i)`. An antipode is a
//! matrix `S` whose column `b` holds the coordinates of `S(e_b)`.
//!
//! The antipode equations `m(id⊗S)Δ = ηε = m(S⊗id)Δ` are linear in `S`, so
//! [`solve_antipode`] decides existence with one exact linear solve.

mod format;
pub mod linear;

use std::collections::BTreeMap;
use std::fmt;

pub use format::{parse_table, parse_table_in, print_table};
pub use linear::{Matrix, Solution};

use crate::algebra::{FreePoly, TensorPoly, Word};
use crate::error::{Error, Result};
use crate::presentation::{Check, CheckOutcome, HopfPresentation};
use crate::rewrite::Confluence;
use crate::scalar::{Field, Scalar};

/// Structure constants of a finite-dimensional bialgebra candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    field: Field,
    labels: Vec<String>,
    mul: Vec<Scalar>,
    unit: Vec<Scalar>,
    delta: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Option<Matrix>,
}

fn cube(n: usize) -> usize {
    n * n * n
}

impl StructureTable {
    /// `mul` and `delta` are flattened `n×n×n` arrays indexed `[i][j][k]`.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mul: Vec<Scalar>,
        unit: Vec<Scalar>,
        delta: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let n = labels.len();
        for (name, len, want) in [
            ("mul", mul.len(), cube(n)),
            ("unit", unit.len(), n),
            ("delta", delta.len(), cube(n)),
            ("counit", counit.len(), n),
        ] {
            if len != want {
                return Err(Error::Dimension(format!("{name} has {len} entries, expected {want} for dimension {n}")));
            }
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n {
                return Err(Error::Dimension(format!("antipode is {}x{}, expected {n}x{n}", s.rows(), s.cols())));
            }
        }
        let foreign = mul.iter().chain(&unit).chain(&delta).chain(&counit).any(|c| c.field() != field)
            || antipode.as_ref().is_some_and(|s| s.field() != field);
        if foreign {
            return Err(Error::FieldMismatch(field.to_string(), "table entries".into()));
        }
        Ok(StructureTable { field, labels, mul, unit, delta, counit, antipode })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.mul[(i * n + j) * n + k]
    }

    pub fn delta(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.delta[(i * n + j) * n + k]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn with_antipode(&self, s: Option<Matrix>) -> Result<Self> {
        Self::new(
            self.field,
            self.labels.clone(),
            self.mul.clone(),
            self.unit.clone(),
            self.delta.clone(),
            self.counit.clone(),
            s,
        )
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Product of two coordinate vectors.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.mul(b);
                for (k, o) in out.iter_mut().enumerate() {
                    let m = self.mul(i, j, k);
                    if !m.is_zero() {
                        *o = o.add(&ab.mul(m));
                    }
                }
            }
        }
        out
    }

    /// `Δ(x)` as an `n×n` coefficient array, row-major.
    pub fn coproduct(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n * n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (jk, o) in out.iter_mut().enumerate() {
                let d = &self.delta[i * n * n + jk];
                if !d.is_zero() {
                    *o = o.add(&a.mul(d));
                }
            }
        }
        out
    }

    fn tensor_product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        // (a⊗b)(c⊗d) = ac⊗bd on n×n coefficient arrays.
        let n = self.dim();
        let mut out = vec![self.field.zero(); n * n];
        for (ab, s) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (cd, t) in y.iter().enumerate().filter(|(_, t)| !t.is_zero()) {
                let left = self.product(&self.basis(ab / n), &self.basis(cd / n));
                let right = self.product(&self.basis(ab % n), &self.basis(cd % n));
                let st = s.mul(t);
                for (p, l) in left.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                    for (q, r) in right.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                        out[p * n + q] = out[p * n + q].add(&st.mul(&l.mul(r)));
                    }
                }
            }
        }
        out
    }

    fn counit_of(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.counit).fold(self.field.zero(), |acc, (a, e)| acc.add(&a.mul(e)))
    }

    fn apply(&self, s: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim())
            .map(|a| x.iter().enumerate().fold(self.field.zero(), |acc, (b, c)| acc.add(&s.get(a, b).mul(c))))
            .collect()
    }

    /// `(m(id⊗S)Δ(e_i), m(S⊗id)Δ(e_i))`
    pub fn convolutions(&self, s: &Matrix, i: usize) -> (Vec<Scalar>, Vec<Scalar>) {
        let n = self.dim();
        let mut right = vec![self.field.zero(); n];
        let mut left = vec![self.field.zero(); n];
        for j in 0..n {
            for k in 0..n {
                let d = self.delta(i, j, k);
                if d.is_zero() {
                    continue;
                }
                let r = self.product(&self.basis(j), &s.column(k));
                let l = self.product(&s.column(j), &self.basis(k));
                for c in 0..n {
                    right[c] = right[c].add(&d.mul(&r[c]));
                    left[c] = left[c].add(&d.mul(&l[c]));
                }
            }
        }
        (right, left)
    }

    /// First basis index where `S` violates the antipode equations.
    pub fn antipode_defect(&self, s: &Matrix) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let expected: Vec<Scalar> = self.unit.iter().map(|u| u.mul(&self.counit[i])).collect();
            let (right, left) = self.convolutions(s, i);
            right != expected || left != expected
        })
    }

    /// `S(e_i e_j) = S(e_j) S(e_i)` for all `i, j`.
    pub fn is_anti_multiplicative(&self, s: &Matrix) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let lhs = self.apply(s, &self.product(&self.basis(i), &self.basis(j)));
                lhs == self.product(&s.column(j), &s.column(i))
            })
        })
    }

    /// Associativity, unit, coassociativity, counit, compatibility of `Δ`
    /// and `ε` with the product, and the antipode equations when a matrix is
    /// stored.
    pub fn check_bialgebra_axioms(&self) -> TableReport {
        let n = self.dim();
        let label = |i: usize| self.labels[i].as_str();
        let mut checks = Vec::new();
        let mut push = |name: &'static str, failure: Option<String>| {
            checks.push(Check { name, outcome: failure.map_or(CheckOutcome::Pass, CheckOutcome::Fail) });
        };

        let assoc = triples(n).find(|&(i, j, k)| {
            let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
            self.product(&self.product(&ei, &ej), &ek) != self.product(&ei, &self.product(&ej, &ek))
        });
        push("associativity", assoc.map(|(i, j, k)| format!("({}*{})*{} != {}*({}*{})", label(i), label(j), label(k), label(i), label(j), label(k))));

        let unit = (0..n).find(|&i| {
            let ei = self.basis(i);
            self.product(&self.unit, &ei) != ei || self.product(&ei, &self.unit) != ei
        });
        push("unit", unit.map(|i| format!("1*{0} or {0}*1 differs from {0}", label(i))));

        let coassoc = (0..n).find(|&i| {
            let d = self.coproduct(&self.basis(i));
            let mut left = vec![self.field.zero(); cube(n)];
            let mut right = vec![self.field.zero(); cube(n)];
            for (jk, c) in d.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (j, k) = (jk / n, jk % n);
                let dj = self.coproduct(&self.basis(j));
                let dk = self.coproduct(&self.basis(k));
                for ab in 0..n * n {
                    left[ab * n + k] = left[ab * n + k].add(&c.mul(&dj[ab]));
                    right[j * n * n + ab] = right[j * n * n + ab].add(&c.mul(&dk[ab]));
                }
            }
            left != right
        });
        push("coassociativity", coassoc.map(|i| format!("(Delta (x) id)Delta({0}) != (id (x) Delta)Delta({0})", label(i))));

        let counit = (0..n).find(|&i| {
            let d = self.coproduct(&self.basis(i));
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for (jk, c) in d.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (j, k) = (jk / n, jk % n);
                left[k] = left[k].add(&c.mul(&self.counit[j]));
                right[j] = right[j].add(&c.mul(&self.counit[k]));
            }
            let ei = self.basis(i);
            left != ei || right != ei
        });
        push("counit", counit.map(|i| format!("counit fails on {}", label(i))));

        let mut unit_square = vec![self.field.zero(); n * n];
        for (a, x) in self.unit.iter().enumerate() {
            for (b, y) in self.unit.iter().enumerate() {
                unit_square[a * n + b] = x.mul(y);
            }
        }
        let compat = if self.coproduct(&self.unit) != unit_square {
            Some("Delta(1) != 1 (x) 1".to_string())
        } else {
            pairs(n)
                .find(|&(i, j)| {
                    let lhs = self.coproduct(&self.product(&self.basis(i), &self.basis(j)));
                    lhs != self.tensor_product(&self.coproduct(&self.basis(i)), &self.coproduct(&self.basis(j)))
                })
                .map(|(i, j)| format!("Delta({0}*{1}) != Delta({0})*Delta({1}) at ({0}, {1})", label(i), label(j)))
        };
        push("compatibility", compat);

        let eps = if !self.counit_of(&self.unit).is_one() {
            Some("eps(1) != 1".to_string())
        } else {
            pairs(n)
                .find(|&(i, j)| {
                    self.counit_of(&self.product(&self.basis(i), &self.basis(j))) != self.counit[i].mul(&self.counit[j])
                })
                .map(|(i, j)| format!("eps({0}*{1}) != eps({0})eps({1}) at ({0}, {1})", label(i), label(j)))
        };
        push("counit-multiplicative", eps);

        match &self.antipode {
            Some(s) => push("antipode", self.antipode_defect(s).map(|i| format!("antipode equations fail on {}", label(i)))),
            None => checks.push(Check { name: "antipode", outcome: CheckOutcome::Skipped("no antipode".into()) }),
        }
        TableReport { checks }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    pairs(n).flat_map(move |(i, j)| (0..n).map(move |k| (i, j, k)))
}

/// Per-axiom outcomes of [`StructureTable::check_bialgebra_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub checks: Vec<Check>,
}

impl TableReport {
    /// No check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, CheckOutcome::Fail(_)))
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Result of [`solve_antipode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntipodeSolution {
    Antipode(Matrix),
    Infeasible,
}

/// Solves `m(id⊗S)Δ = ηε = m(S⊗id)Δ` for `S`: `2n²` equations in the `n²`
/// unknowns `S[a][k]`. The table must satisfy the bialgebra axioms, in which
/// case a solution is unique when it exists.
pub fn solve_antipode(t: &StructureTable) -> Result<AntipodeSolution> {
    let n = t.dim();
    let field = t.field;
    let unknown = |a: usize, k: usize| a * n + k;
    let mut a = Matrix::zero(2 * n * n, n * n, field);
    let mut b = vec![field.zero(); 2 * n * n];
    for i in 0..n {
        for c in 0..n {
            let (r1, r2) = (i * n + c, n * n + i * n + c);
            b[r1] = t.counit[i].mul(&t.unit[c]);
            b[r2] = b[r1].clone();
            for j in 0..n {
                for k in 0..n {
                    let d = t.delta(i, j, k);
                    if d.is_zero() {
                        continue;
                    }
                    for x in 0..n {
                        // Σ Δ[i][j][k] m[j][x][c] S[x][k]
                        let m1 = t.mul(j, x, c);
                        if !m1.is_zero() {
                            let v = a.get(r1, unknown(x, k)).add(&d.mul(m1));
                            a.set(r1, unknown(x, k), v);
                        }
                        // Σ Δ[i][j][k] S[x][j] m[x][k][c]
                        let m2 = t.mul(x, k, c);
                        if !m2.is_zero() {
                            let v = a.get(r2, unknown(x, j)).add(&d.mul(m2));
                            a.set(r2, unknown(x, j), v);
                        }
                    }
                }
            }
        }
    }
    match linear::solve(&a, &b) {
        Solution::Unique(x) => {
            let rows = (0..n).map(|r| x[r * n..(r + 1) * n].to_vec()).collect();
            Ok(AntipodeSolution::Antipode(Matrix::from_rows(field, rows)))
        }
        Solution::Infeasible => Ok(AntipodeSolution::Infeasible),
        Solution::Underdetermined { rank, .. } => Err(Error::Invalid(format!(
            "antipode equations have rank {rank} < {}; the table is not a bialgebra",
            n * n
        ))),
    }
}

/// Tables over the normal words of length at most `d`.
///
/// Fails with `NotFiniteDimensional(d)` unless no normal word of length
/// `d + 1` exists and all products and coproducts of basis words reduce into
/// the span. A truncated rewriting system must reach degree `max(d + 1, 2d)`.
pub fn compile(p: &HopfPresentation, d: usize) -> Result<StructureTable> {
    if let Confluence::UpToDegree(bound) = p.status() {
        let required = (d + 1).max(2 * d);
        if required > bound {
            return Err(Error::DegreeOverflow { bound, required });
        }
    }
    let basis = p.basis_up_to_degree(d)?;
    if p.basis_up_to_degree(d + 1)?.len() != basis.len() {
        return Err(Error::NotFiniteDimensional(d));
    }
    let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let sig = p.signature();
    let field = sig.field();
    let n = basis.len();
    let coords = |q: &FreePoly| -> Result<Vec<Scalar>> {
        let mut v = vec![field.zero(); n];
        for (w, c) in q.terms() {
            v[*index.get(w).ok_or(Error::NotFiniteDimensional(d))?] = c.clone();
        }
        Ok(v)
    };
    let tensor_coords = |t: &TensorPoly| -> Result<Vec<Scalar>> {
        let mut v = vec![field.zero(); n * n];
        for (u, w, c) in t.terms() {
            let i = *index.get(u).ok_or(Error::NotFiniteDimensional(d))?;
            let j = *index.get(w).ok_or(Error::NotFiniteDimensional(d))?;
            v[i * n + j] = c.clone();
        }
        Ok(v)
    };
    let words: Vec<FreePoly> = basis.iter().map(|w| FreePoly::word(sig, w.clone())).collect();
    let mut mul = Vec::with_capacity(cube(n));
    for x in &words {
        for y in &words {
            mul.extend(coords(&p.mul(x, y)?)?);
        }
    }
    let mut delta = Vec::with_capacity(cube(n));
    let mut counit = Vec::with_capacity(n);
    for x in &words {
        delta.extend(tensor_coords(&p.delta_of(x)?)?);
        counit.push(p.eps_of(x)?);
    }
    let antipode = if p.is_hopf() {
        let columns = words.iter().map(|x| coords(&p.s_of(x)?)).collect::<Result<Vec<_>>>()?;
        let rows = (0..n).map(|a| columns.iter().map(|col| col[a].clone()).collect()).collect();
        Some(Matrix::from_rows(field, rows))
    } else {
        None
    };
    let unit = coords(&FreePoly::one(sig))?;
    let labels = basis.iter().map(|w| w.render(sig)).collect();
    StructureTable::new(field, labels, mul, unit, delta, counit, antipode)
}

/// Default exhaustive limit for [`coreflection_probe`].
pub const PROBE_MAX_DIM: usize = 12;

/// Outcome of [`coreflection_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeResult {
    /// Basis indices of the chosen subspace and its antipode.
    Found { subset: Vec<usize>, antipode: Matrix },
    NotFound,
}

/// The table restricted to the coordinate subspace spanned by `subset`, or
/// `None` when that span is not a subbialgebra.
pub fn restrict(t: &StructureTable, subset: &[usize]) -> Option<StructureTable> {
    let n = t.dim();
    let inside = |i: usize| subset.contains(&i);
    if (0..n).any(|k| !inside(k) && !t.unit[k].is_zero()) {
        return None;
    }
    for &i in subset {
        for j in 0..n {
            for k in 0..n {
                if (!inside(j) || !inside(k)) && !t.delta(i, j, k).is_zero() {
                    return None;
                }
            }
        }
        for &j in subset {
            if (0..n).any(|k| !inside(k) && !t.mul(i, j, k).is_zero()) {
                return None;
            }
        }
    }
    let mut mul = Vec::new();
    let mut delta = Vec::new();
    for &i in subset {
        for &j in subset {
            for &k in subset {
                mul.push(t.mul(i, j, k).clone());
                delta.push(t.delta(i, j, k).clone());
            }
        }
    }
    let labels = subset.iter().map(|&i| t.labels[i].clone()).collect();
    let unit = subset.iter().map(|&i| t.unit[i].clone()).collect();
    let counit = subset.iter().map(|&i| t.counit[i].clone()).collect();
    StructureTable::new(t.field, labels, mul, unit, delta, counit, None).ok()
}

/// Searches coordinate subspaces containing the unit for a largest one that
/// is a subbialgebra with an antipode. Ties go to the lexicographically
/// smallest index set.
pub fn coreflection_probe(t: &StructureTable, max_dim: usize) -> Result<ProbeResult> {
    let n = t.dim();
    if n > max_dim {
        return Err(Error::TooLarge { dim: n, limit: max_dim });
    }
    let required: Vec<usize> = (0..n).filter(|&k| !t.unit[k].is_zero()).collect();
    let optional: Vec<usize> = (0..n).filter(|k| !required.contains(k)).collect();
    for size in (0..=optional.len()).rev() {
        for pick in combinations(optional.len(), size) {
            let mut subset: Vec<usize> = required.iter().copied().chain(pick.iter().map(|&i| optional[i])).collect();
            subset.sort_unstable();
            let Some(sub) = restrict(t, &subset) else { continue };
            if let AntipodeSolution::Antipode(antipode) = solve_antipode(&sub)? {
                return Ok(ProbeResult::Found { subset, antipode });
            }
        }
    }
    Ok(ProbeResult::NotFound)
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (k <= n).then(|| (0..k).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut c = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                next = Some(c);
                break;
            }
        }
        Some(current)
    })
}

#[cfg(test)]
mod tests;
