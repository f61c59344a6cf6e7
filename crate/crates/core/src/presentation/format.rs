//! Line-oriented presentation and map files.
//!
//! ```text
//! field: Q
//! generators: g x
//! degree_bound: 8
//! relations:
//!   g*g - 1
//! delta:
//!   g -> g (#) g
//! counit:
//!   g -> 1
//! antipode:
//!   g -> g
//! ```
//!
//! Lines starting with `#` are comments. `field` defaults to `Q` and
//! `degree_bound` to `2·(max relation degree) + 4`; the `antipode` section is
//! optional. A trailing `labeling:` section (written by the coproduct
//! command) is accepted and ignored.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{default_degree_bound, HopfMap, HopfPresentation};
use crate::algebra::{FreePoly, Signature};
use crate::error::{Error, ParseError, Result};
use crate::parse::{parse_poly, parse_tensor};
use crate::scalar::Field;

/// Overrides applied while reading a presentation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Replaces the file's `field:` line; scalars are read in this field.
    pub field: Option<Field>,
    /// Replaces the file's `degree_bound:` line.
    pub degree_bound: Option<usize>,
    /// Used when the file has no `degree_bound:` line.
    pub fallback_degree_bound: Option<usize>,
}

/// A non-blank, non-comment line with its 1-based number.
#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    /// Column (1-based) where `text` starts.
    column: usize,
    text: &'a str,
}

fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        Some(Line { number: i + 1, column: raw.len() - trimmed.len() + 1, text: trimmed.trim_end() })
    })
}

/// Splits `key: value` when `key` is one of `keys`.
fn header<'a>(line: &Line<'a>, keys: &[&str]) -> Option<(&'a str, &'a str, usize)> {
    let (key, rest) = line.text.split_once(':')?;
    let key = key.trim();
    if !keys.contains(&key) {
        return None;
    }
    let value = rest.trim();
    let value_col = line.column + line.text.len() - rest.trim_start().len();
    Some((key, value, value_col))
}

/// `name -> expr`, returning the name and the expression with its column.
fn arrow_entry<'a>(line: &Line<'a>) -> std::result::Result<(&'a str, &'a str, usize), ParseError> {
    let Some((name, rest)) = line.text.split_once("->") else {
        return Err(ParseError::new(line.number, line.column, "expected `generator -> value`").expecting(&["->"]));
    };
    let expr_col = line.column + line.text.len() - rest.trim_start().len();
    Ok((name.trim(), rest.trim(), expr_col))
}

/// Moves a fragment-relative error onto line `line`, fragment starting at `col`.
fn at(line: usize, col: usize) -> impl Fn(ParseError) -> ParseError {
    move |e| e.at_line(line, col - 1)
}

const PRESENTATION_KEYS: &[&str] =
    &["field", "generators", "degree_bound", "relations", "delta", "counit", "antipode", "labeling"];

#[derive(Default)]
struct RawPresentation<'a> {
    field: Option<(Field, usize)>,
    generators: Option<(Vec<&'a str>, usize, usize)>,
    degree_bound: Option<usize>,
    relations: Vec<Line<'a>>,
    delta: Vec<Line<'a>>,
    counit: Vec<Line<'a>>,
    antipode: Option<Vec<Line<'a>>>,
}

/// Reads a presentation file and completes its rewriting system.
pub fn parse_presentation(text: &str, options: ParseOptions) -> Result<HopfPresentation> {
    let raw = scan_presentation(text)?;
    let field = options.field.or(raw.field.map(|f| f.0)).unwrap_or(Field::Rational);
    let Some((names, gen_line, gen_col)) = raw.generators else {
        return Err(ParseError::new(1, 1, "missing `generators:` line").expecting(&["generators:"]).into());
    };
    let sig = Signature::new(names.iter().copied(), field)
        .map_err(|e| ParseError::new(gen_line, gen_col, e.to_string()))?;

    let relations = raw
        .relations
        .iter()
        .map(|l| parse_poly(&sig, l.text).map_err(at(l.number, l.column)))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let delta = table(&sig, "delta", &raw.delta, |text| parse_tensor(&sig, text))?;
    let counit = table(&sig, "counit", &raw.counit, |text| {
        let p = parse_poly(&sig, text)?;
        match p.degree() {
            None => Ok(sig.zero()),
            Some(0) => Ok(p.coefficient(&crate::algebra::Word::unit())),
            Some(_) => Err(ParseError::new(1, 1, "counit values must be scalars").expecting(&["scalar"])),
        }
    })?;
    let antipode = raw
        .antipode
        .as_ref()
        .map(|lines| table(&sig, "antipode", lines, |text| parse_poly(&sig, text)))
        .transpose()?;

    let bound = options
        .degree_bound
        .or(raw.degree_bound)
        .or(options.fallback_degree_bound)
        .unwrap_or_else(|| default_degree_bound(&relations));
    HopfPresentation::new(&sig, relations, delta, counit, antipode, Some(bound))
}

fn table<T>(
    sig: &Arc<Signature>,
    section: &str,
    lines: &[Line<'_>],
    parse: impl Fn(&str) -> std::result::Result<T, ParseError>,
) -> Result<Vec<T>> {
    let mut slots: Vec<Option<T>> = (0..sig.len()).map(|_| None).collect();
    for line in lines {
        let (name, expr, col) = arrow_entry(line)?;
        let Some(g) = sig.index_of(name) else {
            let names: Vec<&str> = sig.names().iter().map(String::as_str).collect();
            return Err(ParseError::new(line.number, line.column, format!("unknown generator `{name}`"))
                .expecting(&names)
                .into());
        };
        if slots[g as usize].is_some() {
            return Err(ParseError::new(line.number, line.column, format!("duplicate {section} entry for `{name}`"))
                .into());
        }
        slots[g as usize] = Some(parse(expr).map_err(at(line.number, col))?);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(g, v)| {
            v.ok_or_else(|| {
                Error::IncompleteTable(format!("{section}: no entry for generator `{}`", sig.name(g as u32)))
            })
        })
        .collect()
}

fn scan_presentation(text: &str) -> Result<RawPresentation<'_>> {
    let mut raw = RawPresentation::default();
    let mut section: Option<&str> = None;
    for line in content_lines(text) {
        if let Some((key, value, col)) = header(&line, PRESENTATION_KEYS) {
            section = None;
            match key {
                "field" => {
                    let f = value.parse::<Field>().map_err(|e| ParseError::new(line.number, col, e.to_string()))?;
                    raw.field = Some((f, line.number));
                }
                "generators" => {
                    raw.generators = Some((value.split_whitespace().collect(), line.number, col));
                }
                "degree_bound" => {
                    let d = value.parse::<usize>().map_err(|_| {
                        ParseError::new(line.number, col, "degree bound must be a nonnegative integer")
                            .expecting(&["integer"])
                    })?;
                    raw.degree_bound = Some(d);
                }
                _ => {
                    if !value.is_empty() {
                        return Err(ParseError::new(line.number, col, format!("`{key}:` starts a section; put entries on the following lines")).into());
                    }
                    if key == "antipode" {
                        raw.antipode.get_or_insert_with(Vec::new);
                    }
                    section = Some(key);
                }
            }
            continue;
        }
        match section {
            Some("relations") => raw.relations.push(line),
            Some("delta") => raw.delta.push(line),
            Some("counit") => raw.counit.push(line),
            Some("antipode") => raw.antipode.get_or_insert_with(Vec::new).push(line),
            Some("labeling") => {}
            _ => {
                return Err(ParseError::new(line.number, line.column, "line outside of any section")
                    .expecting(PRESENTATION_KEYS)
                    .into())
            }
        }
    }
    Ok(raw)
}

/// Canonical text form; [`parse_presentation`] reads it back to an equal value.
pub fn print_presentation(p: &HopfPresentation) -> String {
    let sig = p.signature();
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", sig.field());
    let _ = writeln!(out, "generators: {}", sig.names().join(" "));
    let _ = writeln!(out, "degree_bound: {}", p.degree_bound());
    out.push_str("relations:\n");
    for r in p.relations() {
        let _ = writeln!(out, "  {r}");
    }
    out.push_str("delta:\n");
    for (g, t) in p.delta_table().iter().enumerate() {
        let _ = writeln!(out, "  {} -> {t}", sig.name(g as u32));
    }
    out.push_str("counit:\n");
    for (g, c) in p.counit_table().iter().enumerate() {
        let _ = writeln!(out, "  {} -> {c}", sig.name(g as u32));
    }
    if let Some(s) = p.antipode_table() {
        out.push_str("antipode:\n");
        for (g, x) in s.iter().enumerate() {
            let _ = writeln!(out, "  {} -> {x}", sig.name(g as u32));
        }
    }
    out
}

impl HopfPresentation {
    pub fn parse(text: &str) -> Result<Self> {
        parse_presentation(text, ParseOptions::default())
    }

    pub fn to_text(&self) -> String {
        print_presentation(self)
    }
}

/// A map file: source and target references plus named generator-image
/// sections.
///
/// ```text
/// source: z.hopf
/// target: z.hopf
/// f:
///   t -> t^4
///   t_inv -> t_inv^4
/// g:
///   t -> t
///   t_inv -> t_inv
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub source: String,
    pub target: String,
    sections: Vec<MapSection>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MapSection {
    name: String,
    line: usize,
    /// `(generator, expression, line, column)`
    entries: Vec<(String, String, usize, usize)>,
}

impl MapFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut source = None;
        let mut target = None;
        let mut sections: Vec<MapSection> = Vec::new();
        for line in content_lines(text) {
            if let Some((key, value, col)) = header(&line, &["source", "target"]) {
                if value.is_empty() {
                    return Err(ParseError::new(line.number, col, format!("`{key}:` needs a file reference")).into());
                }
                if key == "source" {
                    source = Some(value.to_string());
                } else {
                    target = Some(value.to_string());
                }
                continue;
            }
            if let Some(name) = line.text.strip_suffix(':') {
                if crate::algebra::is_identifier(name.trim()) && !line.text.contains("->") {
                    sections.push(MapSection { name: name.trim().to_string(), line: line.number, entries: Vec::new() });
                    continue;
                }
            }
            let Some(section) = sections.last_mut() else {
                return Err(ParseError::new(line.number, line.column, "entry outside of a map section")
                    .expecting(&["source:", "target:", "<name>:"])
                    .into());
            };
            let (gen, expr, col) = arrow_entry(&line)?;
            section.entries.push((gen.to_string(), expr.to_string(), line.number, col));
        }
        let source = source.ok_or_else(|| ParseError::new(1, 1, "missing `source:` line"))?;
        let target = target.ok_or_else(|| ParseError::new(1, 1, "missing `target:` line"))?;
        Ok(MapFile { source, target, sections })
    }

    pub fn section_names(&self) -> impl Iterator<Item = &str> {
        self.sections.iter().map(|s| s.name.as_str())
    }

    /// Builds the named map between already loaded presentations.
    pub fn resolve(
        &self,
        name: &str,
        source: &Arc<HopfPresentation>,
        target: &Arc<HopfPresentation>,
    ) -> Result<HopfMap> {
        let section = self
            .sections
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::Invalid(format!("map file has no section `{name}`")))?;
        let ssig = source.signature();
        let tsig = target.signature();
        let mut images: Vec<Option<FreePoly>> = vec![None; ssig.len()];
        for (gen, expr, line, col) in &section.entries {
            let g = ssig.index_of(gen).ok_or_else(|| {
                ParseError::new(*line, *col, format!("`{gen}` is not a generator of the source"))
            })?;
            if images[g as usize].is_some() {
                return Err(ParseError::new(*line, 1, format!("duplicate image for `{gen}`")).into());
            }
            images[g as usize] = Some(parse_poly(tsig, expr).map_err(at(*line, *col))?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, p)| {
                p.ok_or_else(|| {
                    Error::IncompleteTable(format!(
                        "map `{name}` (line {}): no image for generator `{}`",
                        section.line,
                        ssig.name(g as u32)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        HopfMap::new(source, target, images)
    }
}

/// Writes a map as a map-file section.
pub fn print_map_section(name: &str, map: &HopfMap) -> String {
    let mut out = format!("{name}:\n");
    let sig = map.source().signature();
    for g in 0..sig.len() as u32 {
        let _ = writeln!(out, "  {} -> {}", sig.name(g), map.image(g));
    }
    out
}
