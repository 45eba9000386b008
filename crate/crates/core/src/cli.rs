//! Command-line front end. [`run_command`] does all the work and returns the exit code and output.

use clap::{Parser, Subcommand, ValueEnum};

use crate::action::skew_group_algebra;
use crate::document::{parse_document, Document, Label, Object};
use crate::error::{Error, Result};
use crate::fixtures::{self, Bounds, Payload};
use crate::group::FiniteGroup;
use crate::linalg::{Field, LinearMap, DEFAULT_PRIME};
use crate::morita::{linking_algebra, AbstractContext};
use crate::report::VerificationReport;
use crate::smash::{dual_action, duality_iso, fmat, partial_smash, smash, SmashAlgebra};
use crate::{suite, theorems};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportMode {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Smash,
    Fmat,
    PartialSmash,
    Skew,
    DualAction,
    Linking,
    Duality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Duality,
    Geq,
    Globalization,
    Sg,
    Partialrep,
    Invsgeq,
    EqStrongGr,
    Moritaglob,
}

#[derive(Debug, Parser)]
#[command(name = "graded-morita", version, about = "Exact checks of graded Morita equivalences and partial actions")]
pub struct Cli {
    /// Ground field: `q` or `fp:<p>`. Overrides the field written in input documents.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub report: ReportMode,
    /// Seed for generated fixtures.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a document and validate every object in it.
    Validate { file: String },
    /// Build an object from a document and write it as a new document.
    Construct {
        #[arg(value_enum)]
        what: Construction,
        file: String,
        #[arg(short = 'o', long = "out")]
        out: Option<String>,
        #[arg(long)]
        object: Option<String>,
    },
    /// Run a theorem verification on an object of a document.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        file: String,
        #[arg(long)]
        object: Option<String>,
    },
    /// List or emit the registered fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCommand,
    },
    /// Verify every fixture and `seeds` generated inputs.
    Suite {
        #[arg(long, default_value_t = 10)]
        seeds: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    List,
    /// Emit a fixture document; `gen-algebra`, `gen-action` and `gen-context` use `--seed`.
    Emit {
        id: String,
        #[arg(short = 'o', long = "out")]
        out: Option<String>,
    },
}

/// Exit code and captured standard output / standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// `1` for failed verifications, `2` for usage, input and precondition problems.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_)
        | Error::ParseError { .. }
        | Error::ValidationError { .. }
        | Error::PreconditionFailed(_)
        | Error::UnknownFixture(_)
        | Error::NotMinimal
        | Error::NotIdempotentIdeal
        | Error::CommutationHypothesisFailed(_)
        | Error::NoIdentity
        | Error::NotPrime(_)
        | Error::FieldMismatch(..) => 2,
        _ => 1,
    }
}

/// Failures first, then passes, each in recorded order.
fn ordered(r: &VerificationReport) -> VerificationReport {
    let mut out = r.clone();
    out.checks = r.failures().cloned().chain(r.checks.iter().filter(|c| c.pass).cloned()).collect();
    out
}

pub fn emit_report(r: &VerificationReport, mode: ReportMode) -> String {
    let r = ordered(r);
    match mode {
        ReportMode::Machine => {
            let mut s = serde_json::to_string(&r).expect("serializable");
            s.push('\n');
            s
        }
        ReportMode::Text => {
            let failed = r.failures().count();
            let mut s = format!(
                "{} {}: {} ({} checks, {} failed)\n",
                r.theorem,
                if r.fixture.is_empty() { "-" } else { &r.fixture },
                if r.pass { "pass" } else { "FAIL" },
                r.checks.len(),
                failed
            );
            for c in &r.checks {
                s.push_str(&format!(
                    "  {:<4}  expected {:>4}  computed {:>4}  {}\n",
                    if c.pass { "pass" } else { "FAIL" },
                    c.expected,
                    c.computed,
                    c.name
                ));
            }
            s
        }
    }
}

fn emit_reports(rs: &[VerificationReport], mode: ReportMode) -> String {
    match mode {
        ReportMode::Machine => {
            let ordered: Vec<VerificationReport> = rs.iter().map(ordered).collect();
            let mut s = serde_json::to_string_pretty(&ordered).expect("serializable");
            s.push('\n');
            s
        }
        ReportMode::Text => {
            let mut s: String = rs.iter().map(|r| emit_report(r, mode)).collect();
            let failed = rs.iter().filter(|r| !r.pass).count();
            s.push_str(&format!("suite: {} reports, {failed} failed\n", rs.len()));
            s
        }
    }
}

fn read(file: &str) -> Result<String> {
    std::fs::read_to_string(file).map_err(|e| Error::Usage(format!("cannot read `{file}`: {e}")))
}

fn write_or_print(out: &Option<String>, text: String) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::Usage(format!("cannot write `{path}`: {e}")))?;
            Ok(format!("wrote {path}\n"))
        }
        None => Ok(text),
    }
}

fn algebra_of<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a str, &'a crate::algebra::GradedAlgebra)> {
    doc.select(name, "graded algebra", |o| match o {
        Object::Algebra { algebra, .. } => Some(algebra),
        _ => None,
    })
}

fn context_of<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a str, &'a AbstractContext)> {
    doc.select(name, "context", |o| match o {
        Object::Context(c) => Some(c),
        _ => None,
    })
}

fn partial_of<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a str, &'a crate::action::PartialAction)> {
    doc.select(name, "partial action", |o| match o {
        Object::PartialAction(p) => Some(p),
        Object::Restriction(r) => Some(&r.alpha),
        _ => None,
    })
}

fn restriction_of<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a str, &'a crate::action::Restriction)> {
    doc.select(name, "global action with an ideal", |o| match o {
        Object::Restriction(r) => Some(r),
        _ => None,
    })
}

fn smash_labels(sm: &SmashAlgebra) -> Vec<Label> {
    let fm = fmat(&sm.base);
    sm.basis_in_fmat
        .iter()
        .map(|v| {
            let (entry, row, col) = fm.label(v.leading().expect("nonzero basis vector").0);
            Label { entry, row, col }
        })
        .collect()
}

fn construct(what: Construction, doc: &Document, name: Option<&str>) -> Result<Document> {
    let out = Document::new(doc.field, doc.group.clone());
    Ok(match what {
        Construction::Smash | Construction::PartialSmash => {
            let (n, b) = algebra_of(doc, name)?;
            let sm = if what == Construction::Smash { smash(b) } else { partial_smash(b)? };
            let labels = Some(smash_labels(&sm));
            let tag = if what == Construction::Smash { "smash" } else { "partial_smash" };
            out.with(format!("{n}_{tag}"), Object::Algebra { algebra: sm.carrier, labels })
        }
        Construction::Fmat => {
            let (n, b) = algebra_of(doc, name)?;
            let fm = fmat(b);
            let labels = (0..fm.algebra.dim())
                .map(|k| {
                    let (entry, row, col) = fm.label(k);
                    Label { entry, row, col }
                })
                .collect();
            out.with(format!("{n}_fmat"), Object::Algebra { algebra: fm.algebra, labels: Some(labels) })
        }
        Construction::Skew => {
            let (n, pa) = partial_of(doc, name)?;
            let s = skew_group_algebra(pa)?;
            out.with(format!("{n}_skew"), Object::Algebra { algebra: s.algebra, labels: None })
        }
        Construction::DualAction => {
            let (n, b) = algebra_of(doc, name)?;
            out.with(format!("{n}_dual_action"), Object::GlobalAction(dual_action(b).on_smash))
        }
        Construction::Linking => {
            let (n, c) = context_of(doc, name)?;
            let l = linking_algebra(c)?;
            out.with(format!("{n}_linking"), Object::Algebra { algebra: l.algebra().clone(), labels: None })
        }
        Construction::Duality => {
            let (n, b) = algebra_of(doc, name)?;
            let iso = duality_iso(b)?;
            iso.report.clone().into_result()?;
            let (src, dst) = (format!("{n}_smash_skew"), format!("{n}_fmat"));
            let map = LinearMap::from_columns(iso.fmat.algebra.dim(), doc.field, iso.images.clone())?;
            out.with(src.clone(), Object::Algebra { algebra: iso.skew.algebra.clone(), labels: None })
                .with(dst.clone(), Object::Algebra { algebra: iso.fmat.algebra.clone(), labels: None })
                .with(format!("{n}_psi"), Object::Map { source: src, target: dst, map })
        }
    })
}

fn verify(theorem: Theorem, doc: &Document, name: Option<&str>) -> Result<VerificationReport> {
    let (n, mut r) = match theorem {
        Theorem::Duality => {
            let (n, b) = algebra_of(doc, name)?;
            (n, theorems::verify_duality(b, None)?)
        }
        Theorem::Geq => {
            let (n, b) = algebra_of(doc, name)?;
            (n, theorems::verify_geq_smash(b)?.report)
        }
        Theorem::Sg => {
            let (n, b) = algebra_of(doc, name)?;
            (n, theorems::verify_sg(b)?.report)
        }
        Theorem::Partialrep => {
            let (n, b) = algebra_of(doc, name)?;
            (n, theorems::verify_partialrep(b)?.report)
        }
        Theorem::Globalization => {
            let (n, res) = restriction_of(doc, name)?;
            (n, theorems::verify_globalization_geq(res)?.report)
        }
        Theorem::Invsgeq => {
            let (n, c) = context_of(doc, name)?;
            (n, theorems::verify_invsgeq(&c.embedded())?)
        }
        Theorem::EqStrongGr => {
            let (n, c) = context_of(doc, name)?;
            (n, theorems::verify_eq_strong_gr(c)?.1)
        }
        Theorem::Moritaglob => {
            let (n, pa) = partial_of(doc, name)?;
            (n, theorems::verify_moritaglob_consequences(pa)?)
        }
    };
    r.fixture = n.to_string();
    Ok(r)
}

fn payload_object(p: Payload) -> (FiniteGroup, Object) {
    match p {
        Payload::Algebra(a) => (a.group().clone(), Object::Algebra { algebra: a, labels: None }),
        Payload::Restriction(r) => (r.beta.group().clone(), Object::Restriction(r)),
        Payload::Context(c) => (c.group().clone(), Object::Context(c)),
    }
}

fn emit_fixture(id: &str, field: Field, seed: u64) -> Result<Document> {
    let g = suite::seed_group(seed);
    let (group, object) = match id {
        "gen-algebra" => payload_object(Payload::Algebra(fixtures::random_graded_algebra(seed, &g, Bounds::default(), field))),
        "gen-action" => {
            payload_object(Payload::Restriction(fixtures::random_product_partial_action(seed, &g, Bounds::default(), field).0))
        }
        "gen-context" => payload_object(Payload::Context(fixtures::random_context(seed, &g, Bounds::default(), field))),
        _ => payload_object(fixtures::fixture(id, field)?.payload),
    };
    Ok(Document::new(field, group).with(id, object))
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let field: Option<Field> = cli.field.as_deref().map(str::parse).transpose()?;
    let default_field = field.unwrap_or(Field::prime(u64::from(DEFAULT_PRIME))?);
    match &cli.command {
        Command::Validate { file } => {
            let doc = parse_document(&read(file)?, field)?;
            let mut s = format!("valid: {} object(s) over {}\n", doc.objects.len(), doc.field);
            for (n, o) in &doc.objects {
                s.push_str(&format!("  {n}: {}\n", o.kind()));
            }
            Ok((0, s))
        }
        Command::Construct { what, file, out, object } => {
            let doc = parse_document(&read(file)?, field)?;
            let built = construct(*what, &doc, object.as_deref())?;
            Ok((0, write_or_print(out, built.to_json())?))
        }
        Command::Verify { theorem, file, object } => {
            let doc = parse_document(&read(file)?, field)?;
            let r = verify(*theorem, &doc, object.as_deref())?;
            Ok((if r.pass { 0 } else { 1 }, emit_report(&r, cli.report)))
        }
        Command::Fixtures { action: FixturesCommand::List } => {
            let mut s: String = fixtures::list().iter().map(|(id, d)| format!("{id:<6} {d}\n")).collect();
            s.push_str("gen-algebra  generated graded algebra for --seed\n");
            s.push_str("gen-action   generated product partial action for --seed\n");
            s.push_str("gen-context  generated graded equivalence for --seed\n");
            Ok((0, s))
        }
        Command::Fixtures { action: FixturesCommand::Emit { id, out } } => {
            let doc = emit_fixture(id, default_field, cli.seed)?;
            Ok((0, write_or_print(out, doc.to_json())?))
        }
        Command::Suite { seeds } => {
            let rs = suite::run(*seeds, default_field);
            let code = if rs.iter().all(|r| r.pass) { 0 } else { 1 };
            Ok((code, emit_reports(&rs, cli.report)))
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Check;

    #[test]
    fn failures_are_listed_first() {
        let mut r = VerificationReport::new("t", "f");
        r.holds("a", true);
        r.holds("b", false);
        let text = emit_report(&r, ReportMode::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].contains("1 failed"));
        assert!(lines[1].contains("FAIL") && lines[1].ends_with('b'));
        assert!(lines[2].contains("pass"));
    }

    #[test]
    fn machine_reports_round_trip() {
        let mut r = VerificationReport::new("t", "f");
        r.push(Check { name: "x".into(), expected: 2, computed: 2, pass: true });
        let back: VerificationReport = serde_json::from_str(&emit_report(&r, ReportMode::Machine)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_command(["graded-morita", "frobnicate"]).code, 2);
        assert_eq!(run_command(["graded-morita", "--field", "fp:4", "fixtures", "list"]).code, 2);
        assert_eq!(run_command(["graded-morita", "fixtures", "emit", "F9"]).code, 2);
        assert_eq!(run_command(["graded-morita", "fixtures", "list"]).code, 0);
    }
}
