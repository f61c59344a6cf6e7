//! Command-line front end for `hopfforge`.
//!
//! [`run`] parses arguments, dispatches one subcommand and returns the exit
//! code: 0 on success, 1 when a mathematical check fails (the failing check
//! is named on stderr), 2 on input errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfforge::constructions::{coequalizer, coproduct, induced_from_cocone, induced_from_coeq, CoproductLabeling};
use hopfforge::findim::{
    compile, coreflection_probe, parse_table_in, print_table, solve_antipode, AntipodeSolution, ProbeResult,
    StructureTable, PROBE_MAX_DIM,
};
use hopfforge::parse::parse_poly;
use hopfforge::presentation::{parse_presentation, print_map_section, CheckOutcome, MapFile, ParseOptions};
use hopfforge::rewrite::Confluence;
use hopfforge::stdlib;
use hopfforge::{Error, Field, HopfMap, HopfPresentation, Matrix, Word};

/// Environment variable supplying the degree bound for files without a
/// `degree_bound:` line.
pub const DEGREE_BOUND_ENV: &str = "HOPFFORGE_DEGREE_BOUND";

#[derive(Debug, Parser)]
#[command(name = "hopfforge", version, about = "Finitely presented Hopf algebras: validation, colimits and finite-dimensional checks")]
pub struct Cli {
    /// Degree bound for every presentation read, overriding file values.
    #[arg(long, global = true, value_name = "D")]
    pub degree_bound: Option<usize>,
    /// Field for every file read: Q or F<p> for a prime p.
    #[arg(long, global = true, value_name = "FIELD")]
    pub field: Option<Field>,
    /// Write the main result to this file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Report style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check relations, coassociativity, counit, coideal, Hopf ideal and antipode on generators.
    Validate { file: String },
    /// Normal form of a polynomial.
    Nf { file: String, poly: String },
    /// Normal words of length at most D.
    Basis {
        file: String,
        #[arg(short = 'd', long = "degree")]
        d: usize,
    },
    /// Monomial grouplikes of length at most D.
    Grouplikes {
        file: String,
        #[arg(short = 'd', long = "degree")]
        d: usize,
    },
    /// Coproduct of two or more presentations, with its labeling.
    Coproduct {
        #[arg(required = true, num_args = 2..)]
        files: Vec<String>,
        #[command(flatten)]
        result: ResultBound,
    },
    /// Coequalizer of two maps from a map file.
    Coequalizer {
        mapfile: PathBuf,
        #[command(flatten)]
        pair: MapPair,
        #[command(flatten)]
        result: ResultBound,
    },
    /// Maps induced by universal properties.
    #[command(subcommand)]
    Induce(Induce),
    /// Check that each section of a map file is a bialgebra (Hopf) map.
    CheckMap {
        mapfile: PathBuf,
        /// Only this section.
        #[arg(long)]
        map: Option<String>,
    },
    /// Structure-constant table over the normal words of length at most D.
    Compile {
        file: String,
        #[arg(short = 'd', long = "degree")]
        d: usize,
    },
    /// Bialgebra axioms of a table.
    Axioms { table: PathBuf },
    /// Solve for the antipode of a table.
    Antipode { table: PathBuf },
    /// Largest coordinate subbialgebra of a table with an antipode.
    Probe {
        table: PathBuf,
        #[arg(long, default_value_t = PROBE_MAX_DIM)]
        max_dim: usize,
    },
    /// Print a bundled example presentation.
    Example { name: String },
}

#[derive(Debug, Subcommand)]
pub enum Induce {
    /// h': A/I -> K from h: A -> K with h f = h g.
    Coeq {
        /// Map file with the coequalized pair.
        mapfile: PathBuf,
        /// Map file with h, whose source is the pair's target.
        hfile: PathBuf,
        #[command(flatten)]
        pair: MapPair,
        /// Section of HFILE holding h.
        #[arg(long, default_value = "h")]
        h: String,
        #[command(flatten)]
        result: ResultBound,
    },
    /// u from the coproduct of the sources of h_1, ..., h_n into their common target.
    Cocone {
        /// One map file per factor; all targets must agree.
        #[arg(required = true, num_args = 1..)]
        hfiles: Vec<PathBuf>,
        /// Section of each file holding h_l.
        #[arg(long, default_value = "h")]
        h: String,
        #[command(flatten)]
        result: ResultBound,
    },
}

#[derive(Debug, Args)]
pub struct MapPair {
    /// Section holding f.
    #[arg(long, default_value = "f")]
    pub f: String,
    /// Section holding g.
    #[arg(long, default_value = "g")]
    pub g: String,
}

#[derive(Debug, Args)]
pub struct ResultBound {
    /// Degree bound of the constructed presentation.
    #[arg(long, value_name = "D")]
    pub result_bound: Option<usize>,
}

/// Exit code and streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation and writes its streams; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(DEGREE_BOUND_ENV).ok();
    let outcome = execute(args, env.as_deref());
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stderr.write_all(outcome.stderr.as_bytes());
    outcome.code
}

/// Runs one invocation with an explicit value for the environment fallback.
pub fn execute<I, T>(args: I, env_degree_bound: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let fallback = match env_degree_bound.map(str::parse::<usize>).transpose() {
        Ok(v) => v,
        Err(_) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {DEGREE_BOUND_ENV} must be a nonnegative integer\n"),
            }
        }
    };
    let mut ctx = Context { cli: &cli, fallback, cache: BTreeMap::new() };
    let report = match ctx.dispatch() {
        Ok(r) => r,
        Err(CliError::Failed { check, message }) => Report { text: format!("CHECK {check} FAIL {message}\n"), failed: Some(check.into()) },
        Err(e) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &report.text) {
                return Outcome { code: 2, stdout, stderr: format!("error: cannot write {}: {e}\n", path.display()) };
            }
        }
        None => stdout = report.text,
    }
    let code = match report.failed {
        Some(name) => {
            let _ = writeln!(stderr, "FAILED: {name}");
            1
        }
        None => 0,
    };
    Outcome { code, stdout, stderr }
}

/// The main text of a command and the name of the failed check, if any.
struct Report {
    text: String,
    failed: Option<String>,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, failed: None }
    }
}

/// Input errors carry the offending file; a failed precondition of a
/// construction is a mathematical failure instead.
#[derive(Debug)]
enum CliError {
    Input(String),
    Failed { check: &'static str, message: String },
}

#[allow(non_snake_case)]
fn CliError(message: String) -> CliError {
    CliError::Input(message)
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Failed { message: m, .. } => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let check = match &e {
            Error::DoesNotFactor { .. } => "factorization",
            Error::NotHopfMap(_) => "hopf-map",
            _ => return CliError::Input(e.to_string()),
        };
        CliError::Failed { check, message: e.to_string() }
    }
}

fn in_file(what: &str) -> impl Fn(Error) -> CliError + '_ {
    move |e| CliError(format!("{what}: {e}"))
}

struct Context<'a> {
    cli: &'a Cli,
    fallback: Option<usize>,
    cache: BTreeMap<String, Arc<HopfPresentation>>,
}

impl Context<'_> {
    fn options(&self) -> ParseOptions {
        ParseOptions { field: self.cli.field, degree_bound: self.cli.degree_bound, fallback_degree_bound: self.fallback }
    }

    fn machine(&self) -> bool {
        self.cli.format == Format::Machine
    }

    /// Loads `example:NAME` or a file path relative to `base`.
    fn load(&mut self, reference: &str, base: Option<&Path>) -> Result<Arc<HopfPresentation>, CliError> {
        let key = match (reference.strip_prefix("example:"), base) {
            (Some(_), _) | (None, None) => reference.to_string(),
            (None, Some(dir)) => dir.join(reference).to_string_lossy().into_owned(),
        };
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let p = match reference.strip_prefix("example:") {
            Some(name) => {
                let p = stdlib::example(name, self.cli.field.unwrap_or(Field::Rational)).map_err(in_file(reference))?;
                let bound = self.cli.degree_bound.or(self.fallback);
                match bound {
                    Some(d) => p.with_degree_bound(d).map_err(in_file(reference))?,
                    None => p,
                }
            }
            None => {
                let text = std::fs::read_to_string(&key).map_err(|e| CliError(format!("cannot read {key}: {e}")))?;
                parse_presentation(&text, self.options()).map_err(in_file(&key))?
            }
        };
        let p = Arc::new(p);
        self.cache.insert(key, p.clone());
        Ok(p)
    }

    fn load_table(&self, path: &Path) -> Result<StructureTable, CliError> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError(format!("cannot read {name}: {e}")))?;
        parse_table_in(&text, self.cli.field).map_err(in_file(&name))
    }

    /// The map file with its source and target loaded.
    fn load_maps(
        &mut self,
        path: &Path,
    ) -> Result<(MapFile, Arc<HopfPresentation>, Arc<HopfPresentation>), CliError> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError(format!("cannot read {name}: {e}")))?;
        let file = MapFile::parse(&text).map_err(in_file(&name))?;
        let base = path.parent().unwrap_or(Path::new(""));
        let source = self.load(&file.source, Some(base))?;
        let target = self.load(&file.target, Some(base))?;
        Ok((file, source, target))
    }

    fn resolve(&mut self, path: &Path, section: &str) -> Result<HopfMap, CliError> {
        let (file, source, target) = self.load_maps(path)?;
        file.resolve(section, &source, &target).map_err(in_file(&path.display().to_string()))
    }

    fn dispatch(&mut self) -> Result<Report, CliError> {
        match &self.cli.command {
            Command::Validate { file } => self.validate(file),
            Command::Nf { file, poly } => {
                let p = self.load(file, None)?;
                let x = parse_poly(p.signature(), poly)
                    .map_err(|e| CliError(format!("polynomial argument: parse error at {e}")))?;
                Ok(Report::ok(format!("{}\n", p.normal_form(&x)?)))
            }
            Command::Basis { file, d } => {
                let p = self.load(file, None)?;
                let words = p.basis_up_to_degree(*d)?;
                Ok(Report::ok(self.word_list("basis", &p, &words, *d)))
            }
            Command::Grouplikes { file, d } => {
                let p = self.load(file, None)?;
                let words = p.grouplikes(*d)?;
                Ok(Report::ok(self.word_list("grouplike", &p, &words, *d)))
            }
            Command::Coproduct { files, result } => self.coproduct(files, result.result_bound),
            Command::Coequalizer { mapfile, pair, result } => self.coequalizer(mapfile, pair, result.result_bound),
            Command::Induce(Induce::Coeq { mapfile, hfile, pair, h, result }) => {
                self.induce_coeq(mapfile, hfile, pair, h, result.result_bound)
            }
            Command::Induce(Induce::Cocone { hfiles, h, result }) => self.induce_cocone(hfiles, h, result.result_bound),
            Command::CheckMap { mapfile, map } => self.check_map(mapfile, map.as_deref()),
            Command::Compile { file, d } => {
                let p = self.load(file, None)?;
                match compile(&p, *d) {
                    Ok(t) => Ok(Report::ok(print_table(&t))),
                    Err(Error::NotFiniteDimensional(d)) => Ok(Report {
                        text: format!("NOT FINITE-DIMENSIONAL: basis does not stabilize at degree {d}\n"),
                        failed: Some("finite-dimensional".into()),
                    }),
                    Err(e) => Err(e.into()),
                }
            }
            Command::Axioms { table } => {
                let t = self.load_table(table)?;
                let report = t.check_bialgebra_axioms();
                let failed = report.checks.iter().find(|c| matches!(c.outcome, CheckOutcome::Fail(_)));
                Ok(Report { text: report.to_string(), failed: failed.map(|c| c.name.to_string()) })
            }
            Command::Antipode { table } => self.antipode(table),
            Command::Probe { table, max_dim } => {
                let t = self.load_table(table)?;
                if let Some(failed) = axiom_failure(&t) {
                    return Ok(failed);
                }
                match coreflection_probe(&t, *max_dim)? {
                    ProbeResult::Found { subset, antipode } => {
                        let labels: Vec<&str> = subset.iter().map(|&i| t.labels()[i].as_str()).collect();
                        let indices: Vec<String> = subset.iter().map(usize::to_string).collect();
                        let mut text = format!("FOUND dim {}\n", subset.len());
                        let _ = writeln!(text, "indices: {}", indices.join(" "));
                        let _ = writeln!(text, "basis: {}", labels.join(" "));
                        text.push_str(&antipode_section(&antipode));
                        Ok(Report::ok(text))
                    }
                    ProbeResult::NotFound => {
                        Ok(Report { text: "NOT FOUND\n".into(), failed: Some("coreflection".into()) })
                    }
                }
            }
            Command::Example { name } => {
                let p = self.load(&format!("example:{name}"), None)?;
                Ok(Report::ok(p.to_text()))
            }
        }
    }

    fn validate(&mut self, file: &str) -> Result<Report, CliError> {
        let p = self.load(file, None)?;
        let report = p.validate().map_err(in_file(file))?;
        let failed = report.failures().next().map(|c| c.name.to_string());
        let text = if self.machine() {
            report.to_string()
        } else {
            let mut text = String::new();
            for c in &report.checks {
                let (status, detail) = match &c.outcome {
                    CheckOutcome::Pass => ("PASS", String::new()),
                    CheckOutcome::Fail(d) => ("FAIL", format!("  {d}")),
                    CheckOutcome::Skipped(d) => ("SKIP", format!("  {d}")),
                };
                let _ = writeln!(text, "{:<16} {status}{detail}", c.name);
            }
            let kind = if report.is_hopf() {
                "Hopf algebra"
            } else if report.passed() {
                "bialgebra"
            } else {
                "not a bialgebra"
            };
            let _ = writeln!(text, "{file}: {kind}, {}", status_phrase(report.status));
            text
        };
        Ok(Report { text, failed })
    }

    fn word_list(&self, what: &str, p: &HopfPresentation, words: &[Word], d: usize) -> String {
        let sig = p.signature();
        let mut text = String::new();
        if self.machine() {
            let _ = writeln!(text, "COUNT {}", words.len());
            for w in words {
                let _ = writeln!(text, "WORD {}", w.render(sig));
            }
            let _ = writeln!(text, "{}", status_line(p.status()));
        } else {
            let _ = writeln!(text, "{} {what} words of length <= {d} ({}):", words.len(), status_phrase(p.status()));
            for w in words {
                let _ = writeln!(text, "  {}", w.render(sig));
            }
        }
        text
    }

    fn coproduct(&mut self, files: &[String], bound: Option<usize>) -> Result<Report, CliError> {
        let mut factors = Vec::new();
        for f in files {
            let p = self.load(f, None)?;
            let report = p.validate().map_err(in_file(f))?;
            if let Some(c) = report.failures().next() {
                return Ok(Report { text: report.to_string(), failed: Some(format!("{f}: {}", c.name)) });
            }
            factors.push(p);
        }
        let (c, labeling) = coproduct(&factors, bound)?;
        Ok(Report::ok(format!("{}{}", c.to_text(), labeling_section(&labeling))))
    }

    fn coequalizer(&mut self, mapfile: &Path, pair: &MapPair, bound: Option<usize>) -> Result<Report, CliError> {
        let f = self.resolve(mapfile, &pair.f)?;
        let g = self.resolve(mapfile, &pair.g)?;
        let coeq = coequalizer(&f, &g, bound)?;
        let mut text = coeq.quotient().to_text();
        let mut failed = None;
        text.push_str("# added relations and their Hopf-ideal checks:\n");
        for check in coeq.ideal_checks()? {
            let word = |ok: bool| if ok { "PASS" } else { "FAIL" };
            let antipode = check.antipode.map_or("SKIP", word);
            let _ = writeln!(
                text,
                "#   {}: counit {}, coideal {}, antipode {}",
                check.relation,
                word(check.counit),
                word(check.coideal),
                antipode
            );
            if !check.passed() && failed.is_none() {
                failed = Some(format!("hopf-ideal ({})", check.relation));
            }
        }
        Ok(Report { text, failed })
    }

    fn induce_coeq(
        &mut self,
        mapfile: &Path,
        hfile: &Path,
        pair: &MapPair,
        h: &str,
        bound: Option<usize>,
    ) -> Result<Report, CliError> {
        let f = self.resolve(mapfile, &pair.f)?;
        let g = self.resolve(mapfile, &pair.g)?;
        let h = self.resolve(hfile, h)?;
        let coeq = coequalizer(&f, &g, bound)?;
        let induced = induced_from_coeq(&h, &coeq)?;
        let factors = induced.compose(coeq.projection())?.agrees_with(&h);
        let defects = induced.defects()?;
        let mut text = String::new();
        let _ = writeln!(text, "CHECK factorization {}", if factors { "PASS" } else { "FAIL" });
        push_map_check(&mut text, &defects);
        text.push_str(&print_map_section("h'", &induced));
        let failed = if !factors {
            Some("factorization".to_string())
        } else if !defects.is_empty() {
            Some("hopf-map".to_string())
        } else {
            None
        };
        Ok(Report { text, failed })
    }

    fn induce_cocone(&mut self, hfiles: &[PathBuf], h: &str, bound: Option<usize>) -> Result<Report, CliError> {
        let maps = hfiles.iter().map(|p| self.resolve(p, h)).collect::<Result<Vec<_>, _>>()?;
        let sources: Vec<_> = maps.iter().map(|m| m.source().clone()).collect();
        let (_, labeling) = coproduct(&sources, bound)?;
        let u = induced_from_cocone(&maps, &labeling)?;
        let mut text = String::new();
        let mut failed = None;
        for (l, m) in maps.iter().enumerate() {
            let ok = u.compose(labeling.injection(l))?.agrees_with(m);
            let _ = writeln!(text, "CHECK factorization-{} {}", l + 1, if ok { "PASS" } else { "FAIL" });
            if !ok && failed.is_none() {
                failed = Some(format!("factorization-{}", l + 1));
            }
        }
        let defects = u.defects()?;
        push_map_check(&mut text, &defects);
        if !defects.is_empty() && failed.is_none() {
            failed = Some("hopf-map".into());
        }
        text.push_str(&labeling_section(&labeling));
        text.push_str(&print_map_section("u", &u));
        Ok(Report { text, failed })
    }

    fn check_map(&mut self, mapfile: &Path, only: Option<&str>) -> Result<Report, CliError> {
        let (file, source, target) = self.load_maps(mapfile)?;
        let names: Vec<String> = match only {
            Some(n) => vec![n.to_string()],
            None => file.section_names().map(str::to_string).collect(),
        };
        let mut text = String::new();
        let mut failed = None;
        for name in names {
            let m = file.resolve(&name, &source, &target).map_err(in_file(&mapfile.display().to_string()))?;
            let defects = m.defects()?;
            match defects.first() {
                None => {
                    let _ = writeln!(text, "CHECK hopf-map {name} PASS");
                }
                Some(first) => {
                    let _ = writeln!(text, "CHECK hopf-map {name} FAIL {first}");
                    for d in &defects[1..] {
                        let _ = writeln!(text, "  {d}");
                    }
                    failed.get_or_insert(format!("hopf-map {name}"));
                }
            }
        }
        Ok(Report { text, failed })
    }

    fn antipode(&self, path: &Path) -> Result<Report, CliError> {
        let t = self.load_table(path)?;
        if let Some(failed) = axiom_failure(&t) {
            return Ok(failed);
        }
        match solve_antipode(&t)? {
            AntipodeSolution::Antipode(s) => {
                let mut text = antipode_section(&s);
                let mut failed = None;
                if let Some(stored) = t.antipode() {
                    let agrees = *stored == s;
                    let _ = writeln!(text, "CHECK stored-antipode {}", if agrees { "PASS" } else { "FAIL" });
                    if !agrees {
                        failed = Some("stored-antipode".into());
                    }
                }
                Ok(Report { text, failed })
            }
            AntipodeSolution::Infeasible => {
                Ok(Report { text: "INFEASIBLE: no antipode\n".into(), failed: Some("antipode".into()) })
            }
        }
    }
}

fn axiom_failure(t: &StructureTable) -> Option<Report> {
    let report = t.check_bialgebra_axioms();
    let failed = report.checks.iter().find(|c| matches!(c.outcome, CheckOutcome::Fail(_)))?;
    Some(Report { text: report.to_string(), failed: Some(failed.name.to_string()) })
}

fn antipode_section(s: &Matrix) -> String {
    let mut text = "antipode:\n".to_string();
    for b in 0..s.cols() {
        let col: Vec<String> = s.column(b).iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "  {b} = {}", col.join(" "));
    }
    text
}

fn push_map_check(text: &mut String, defects: &[String]) {
    match defects.first() {
        None => text.push_str("CHECK hopf-map PASS\n"),
        Some(d) => {
            let _ = writeln!(text, "CHECK hopf-map FAIL {d}");
        }
    }
}

fn labeling_section(labeling: &CoproductLabeling) -> String {
    let mut text = "labeling:\n".to_string();
    for line in labeling.to_string().lines() {
        let _ = writeln!(text, "  {line}");
    }
    text
}

fn status_line(status: Confluence) -> String {
    match status {
        Confluence::Full => "verified: exact".into(),
        Confluence::UpToDegree(d) => format!("verified: up to degree {d}"),
    }
}

fn status_phrase(status: Confluence) -> String {
    match status {
        Confluence::Full => "exact".into(),
        Confluence::UpToDegree(d) => format!("verified up to degree {d}"),
    }
}
