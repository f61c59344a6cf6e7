//! Table files.
//!
//! ```text
//! dim: 2
//! field: Q
//! basis: 1 g
//! mul:
//!   0 0 0 = 1
//!   0 1 1 = 1
//!   1 0 1 = 1
//!   1 1 0 = 1
//! unit:
//!   1 0
//! delta:
//!   0 0 0 = 1
//!   1 1 1 = 1
//! counit:
//!   1 1
//! antipode:
//!   0 = 1 0
//!   1 = 0 1
//! ```
//!
//! `mul` and `delta` list the nonzero entries `i j k = c` (0-based);
//! `antipode` gives `S(e_b)` as a full coordinate row `b = c_0 … c_{n-1}`.
//! `field` defaults to `Q`, `basis` to `e0 e1 …`, and `antipode` is optional.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{Matrix, StructureTable};
use crate::error::{Error, ParseError, Result};
use crate::scalar::{Field, Scalar};

const KEYS: &[&str] = &["dim", "field", "basis", "mul", "unit", "delta", "counit", "antipode"];

fn parse_scalar(field: Field, token: &str, line: usize, col: usize) -> Result<Scalar> {
    let err = || ParseError::new(line, col, format!("`{token}` is not a scalar")).expecting(&["integer", "fraction"]);
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    field.from_fraction(&num, &den).map_err(|e| ParseError::new(line, col, e.to_string()).into())
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str, start_col: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in text.split_whitespace() {
        let at = text[offset..].find(tok).expect("token comes from the same text") + offset;
        out.push((tok, start_col + at));
        offset = at + tok.len();
    }
    out
}

struct Entry<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

/// Reads a table file.
pub fn parse_table(text: &str) -> Result<StructureTable> {
    parse_table_in(text, None)
}

/// Reads a table file, reading scalars in `field` instead of the file's
/// `field:` line when given.
pub fn parse_table_in(text: &str, field_override: Option<Field>) -> Result<StructureTable> {
    let mut dim: Option<usize> = None;
    let mut field = Field::Rational;
    let mut basis: Option<(Vec<String>, usize)> = None;
    let mut sections: Vec<(&str, Vec<Entry<'_>>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let col = raw.len() - trimmed.len() + 1;
        let trimmed = trimmed.trim_end();
        let header = trimmed.split_once(':').filter(|(k, _)| KEYS.contains(&k.trim()));
        if let Some((key, rest)) = header {
            let value = rest.trim();
            let value_col = col + trimmed.len() - rest.trim_start().len();
            match key.trim() {
                "dim" => {
                    let n = value.parse().map_err(|_| {
                        ParseError::new(number, value_col, "dimension must be a nonnegative integer").expecting(&["integer"])
                    })?;
                    dim = Some(n);
                }
                "field" => {
                    field = value.parse().map_err(|e: crate::error::AlgebraError| ParseError::new(number, value_col, e.to_string()))?;
                }
                "basis" => basis = Some((value.split_whitespace().map(str::to_string).collect(), number)),
                key => {
                    if !value.is_empty() {
                        return Err(ParseError::new(number, value_col, format!("`{key}:` starts a section; put entries on the following lines")).into());
                    }
                    if sections.iter().any(|(k, _)| *k == key) {
                        return Err(ParseError::new(number, col, format!("duplicate `{key}:` section")).into());
                    }
                    sections.push((key, Vec::new()));
                }
            }
            continue;
        }
        let Some((_, entries)) = sections.last_mut() else {
            return Err(ParseError::new(number, col, "line outside of any section").expecting(KEYS).into());
        };
        entries.push(Entry { line: number, col, text: trimmed });
    }

    let field = field_override.unwrap_or(field);
    let n = dim.ok_or_else(|| ParseError::new(1, 1, "missing `dim:` line").expecting(&["dim:"]))?;
    let labels = match basis {
        Some((labels, line)) if labels.len() != n => {
            return Err(ParseError::new(line, 1, format!("{} basis labels for dimension {n}", labels.len())).into())
        }
        Some((labels, _)) => labels,
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let section = |name: &str| sections.iter().find(|(k, _)| *k == name).map(|(_, e)| e.as_slice());
    let required = |name: &str| section(name).ok_or_else(|| Error::IncompleteTable(format!("missing `{name}:` section")));

    let mul = sparse(field, n, required("mul")?)?;
    let delta = sparse(field, n, required("delta")?)?;
    let unit = vector(field, n, "unit", required("unit")?)?;
    let counit = vector(field, n, "counit", required("counit")?)?;
    let antipode = section("antipode").map(|e| antipode_rows(field, n, e)).transpose()?;
    StructureTable::new(field, labels, mul, unit, delta, counit, antipode)
}

fn index(token: &str, n: usize, line: usize, col: usize) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(i) if i < n => Ok(i),
        _ => Err(ParseError::new(line, col, format!("`{token}` is not a basis index below {n}")).expecting(&["index"]).into()),
    }
}

fn sparse(field: Field, n: usize, entries: &[Entry<'_>]) -> Result<Vec<Scalar>> {
    let mut out = vec![field.zero(); n * n * n];
    let mut seen = vec![false; n * n * n];
    for e in entries {
        let toks = tokens(e.text, e.col);
        let [(i, ci), (j, cj), (k, ck), ("=", _), (c, cc)] = toks.as_slice() else {
            return Err(ParseError::new(e.line, e.col, "expected `i j k = c`").expecting(&["i j k = c"]).into());
        };
        let at = (index(i, n, e.line, *ci)? * n + index(j, n, e.line, *cj)?) * n + index(k, n, e.line, *ck)?;
        if seen[at] {
            return Err(ParseError::new(e.line, e.col, "duplicate entry").into());
        }
        seen[at] = true;
        out[at] = parse_scalar(field, c, e.line, *cc)?;
    }
    Ok(out)
}

fn vector(field: Field, n: usize, name: &str, entries: &[Entry<'_>]) -> Result<Vec<Scalar>> {
    let toks: Vec<(&str, usize, usize)> =
        entries.iter().flat_map(|e| tokens(e.text, e.col).into_iter().map(move |(t, c)| (t, e.line, c))).collect();
    if toks.len() != n {
        let line = entries.first().map_or(1, |e| e.line);
        return Err(ParseError::new(line, 1, format!("`{name}` needs {n} values, found {}", toks.len())).into());
    }
    toks.into_iter().map(|(t, line, col)| parse_scalar(field, t, line, col)).collect()
}

fn antipode_rows(field: Field, n: usize, entries: &[Entry<'_>]) -> Result<Matrix> {
    let mut columns: Vec<Option<Vec<Scalar>>> = vec![None; n];
    for e in entries {
        let toks = tokens(e.text, e.col);
        let Some(((b, cb), rest)) = toks.split_first() else { unreachable!("entries are nonblank") };
        let b = index(b, n, e.line, *cb)?;
        let values = match rest.split_first() {
            Some((("=", _), values)) if values.len() == n => values,
            _ => {
                return Err(ParseError::new(e.line, e.col, format!("expected `b = ` followed by {n} values"))
                    .expecting(&["b = c_0 ... c_n-1"])
                    .into())
            }
        };
        if columns[b].is_some() {
            return Err(ParseError::new(e.line, e.col, format!("duplicate antipode entry for {b}")).into());
        }
        columns[b] = Some(values.iter().map(|(t, c)| parse_scalar(field, t, e.line, *c)).collect::<Result<_>>()?);
    }
    let columns = columns
        .into_iter()
        .enumerate()
        .map(|(b, c)| c.ok_or_else(|| Error::IncompleteTable(format!("antipode: no entry for basis index {b}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, (0..n).map(|a| columns.iter().map(|c| c[a].clone()).collect()).collect()))
}

/// Canonical text form; [`parse_table`] reads it back to an equal table.
pub fn print_table(t: &StructureTable) -> String {
    let n = t.dim();
    let mut out = String::new();
    let _ = writeln!(out, "dim: {n}");
    let _ = writeln!(out, "field: {}", t.field());
    let _ = writeln!(out, "basis: {}", t.labels().join(" "));
    let join = |v: &[Scalar]| v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(" ");
    for (name, get) in [("mul", StructureTable::mul as fn(&StructureTable, usize, usize, usize) -> &Scalar), ("delta", StructureTable::delta)] {
        let _ = writeln!(out, "{name}:");
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = get(t, i, j, k);
                    if !c.is_zero() {
                        let _ = writeln!(out, "  {i} {j} {k} = {c}");
                    }
                }
            }
        }
        if name == "mul" {
            let _ = writeln!(out, "unit:\n  {}", join(t.unit()));
        }
    }
    let _ = writeln!(out, "counit:\n  {}", join(t.counit()));
    if let Some(s) = t.antipode() {
        out.push_str("antipode:\n");
        for b in 0..n {
            let _ = writeln!(out, "  {b} = {}", join(&s.column(b)));
        }
    }
    out
}
