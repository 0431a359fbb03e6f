//! The `weld` command line.
//!
//! Exit codes: 0 success / not distinguished / path found, 3 distinguished
//! or no path found, 2 usage, parse or validation error, 1 a failed
//! reproduction in `thm8-demo`.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::codec::{CodecError, GaussCode, Symmetry};
use crate::corpus::{corpus, trefoil, verify};
use crate::invariants::{battery, InvariantBattery, Level, Palette, PALETTE_VERSION};
use crate::moves::{search, SearchBudget, SearchOutcome};
use crate::spun::{spun_compare, tube_non_injectivity, welded_compare, Outcome, Verdict};

pub const REPORT_SCHEMA: &str = "weld-report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISTINGUISHED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "weld", version, about = "Invariants and move search for welded knots given as signed Gauss codes")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PaletteArgs {
    /// Comma-separated group names (Z<n>, D3..D6, S3, S4, A4).
    #[arg(long, value_delimiter = ',')]
    groups: Option<Vec<String>>,
    /// Comma-separated quandle names (R3..R9).
    #[arg(long, value_delimiter = ',')]
    quandles: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a Gauss code.
    Validate { code: String },
    /// Apply a diagram symmetry.
    Symmetry {
        code: String,
        #[arg(long)]
        op: Symmetry,
    },
    /// Compute the invariant battery at a level.
    Invariants {
        code: String,
        #[arg(long, default_value = "welded")]
        level: Level,
        #[command(flatten)]
        palette: PaletteArgs,
    },
    /// Compare two diagrams at a level.
    Compare {
        c1: String,
        c2: String,
        #[arg(long, default_value = "welded")]
        level: Level,
        /// Both diagrams are of classical origin.
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        palette: PaletteArgs,
    },
    /// Breadth-first search for a welded move sequence.
    Search {
        c1: String,
        c2: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
    },
    /// Built-in corpus commands.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Show that Tube identifies the trefoil with its reversed vertical reflection.
    #[command(name = "thm8-demo")]
    Thm8Demo,
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    /// Recompute every entry's Alexander polynomial against its frozen value.
    Verify,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub inputs: Vec<String>,
    pub palette_version: &'static str,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

struct Outputs {
    code: i32,
    inputs: Vec<String>,
    results: Value,
    text: String,
}

enum Failure {
    Codec(CodecError),
    Usage(String),
}

impl From<CodecError> for Failure {
    fn from(e: CodecError) -> Self {
        Failure::Codec(e)
    }
}

fn parse(text: &str) -> Result<GaussCode, Failure> {
    Ok(GaussCode::parse(text)?)
}

fn palette(args: &PaletteArgs) -> Result<Palette, Failure> {
    let default = Palette::default().descriptor();
    let groups = args.groups.clone().unwrap_or(default.groups);
    let quandles = args.quandles.clone().unwrap_or(default.quandles);
    Palette::from_names(&groups, &quandles).map_err(|e| Failure::Usage(e.to_string()))
}

/// Runs `weld` on `argv` (including the program name) and returns the exit
/// code and the text to print on standard output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let started = Instant::now();
    let name = command_name(&cli.command);
    let (code, inputs, results, text) = match execute(&cli.command) {
        Ok(o) => (o.code, o.inputs, o.results, o.text),
        Err(Failure::Codec(e)) => {
            let kind = match e {
                CodecError::Syntax { .. } => "SyntaxError",
                CodecError::Structure(_) => "StructureError",
            };
            (EXIT_USAGE, vec![], json!({ "error": { "kind": kind, "message": e.to_string() } }), format!("{kind}: {e}\n"))
        }
        Err(Failure::Usage(msg)) => {
            (EXIT_USAGE, vec![], json!({ "error": { "kind": "UsageError", "message": msg } }), format!("UsageError: {msg}\n"))
        }
    };
    let timing_ms = cli.timing.then(|| started.elapsed().as_millis() as u64);
    if cli.json {
        let report =
            Report { schema: REPORT_SCHEMA, command: name.to_string(), inputs, palette_version: PALETTE_VERSION, results, timing_ms };
        let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
        out.push('\n');
        (code, out)
    } else {
        let mut text = text;
        if let Some(ms) = timing_ms {
            let _ = writeln!(text, "time: {ms} ms");
        }
        (code, text)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Symmetry { .. } => "symmetry",
        Command::Invariants { .. } => "invariants",
        Command::Compare { .. } => "compare",
        Command::Search { .. } => "search",
        Command::Corpus { .. } => "corpus verify",
        Command::Thm8Demo => "thm8-demo",
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn execute(command: &Command) -> Result<Outputs, Failure> {
    match command {
        Command::Validate { code } => {
            let c = parse(code)?;
            let text = format!("valid: {} crossings, writhe {}\ncanonical: {}\n", c.crossing_count(), c.writhe(), c.canonical());
            Ok(Outputs {
                code: EXIT_OK,
                inputs: vec![c.to_string()],
                results: json!({
                    "valid": true,
                    "crossings": c.crossing_count(),
                    "writhe": c.writhe(),
                    "canonical": c.canonical().to_string(),
                }),
                text,
            })
        }
        Command::Symmetry { code, op } => {
            let c = parse(code)?;
            let out = c.apply_symmetry(*op);
            Ok(Outputs {
                code: EXIT_OK,
                inputs: vec![c.to_string()],
                results: json!({ "op": op.to_string(), "code": out.to_string() }),
                text: format!("{out}\n"),
            })
        }
        Command::Invariants { code, level, palette: p } => {
            let c = parse(code)?;
            let b = battery(&c, *level, &palette(p)?);
            Ok(Outputs { code: EXIT_OK, inputs: vec![c.to_string()], results: to_value(&b), text: battery_text(&b) })
        }
        Command::Compare { c1, c2, level, classical, palette: p } => {
            let (a, b) = (parse(c1)?, parse(c2)?);
            let pal = palette(p)?;
            let verdict = match level {
                Level::Tube => spun_compare(&a, &b, &pal),
                Level::Welded => welded_compare(&a, &b, (*classical, *classical), &pal),
                Level::Virtual => {
                    let (x, y) = (battery(&a, Level::Virtual, &pal), battery(&b, Level::Virtual, &pal));
                    match x.first_difference(&y) {
                        Some(w) => Verdict { outcome: Outcome::Distinguished, witness: Some(w), notes: vec![] },
                        None => Verdict { outcome: Outcome::NotDistinguished, witness: None, notes: vec![] },
                    }
                }
            };
            let code = if verdict.outcome.is_distinguished() { EXIT_DISTINGUISHED } else { EXIT_OK };
            Ok(Outputs {
                code,
                inputs: vec![a.to_string(), b.to_string()],
                results: json!({ "level": level, "verdict": verdict }),
                text: verdict_text(&verdict),
            })
        }
        Command::Search { c1, c2, depth, max_states } => {
            let (a, b) = (parse(c1)?, parse(c2)?);
            let outcome = search(&a, &b, SearchBudget { max_depth: *depth, max_states: *max_states });
            let stats = outcome.stats();
            let mut text = String::new();
            let code = match &outcome {
                SearchOutcome::Found { path, .. } => {
                    let _ = writeln!(text, "found path of length {}", path.len());
                    for step in &path.steps {
                        let _ = writeln!(text, "  {step}");
                    }
                    EXIT_OK
                }
                SearchOutcome::NotFound { .. } => {
                    let _ = writeln!(text, "not found");
                    EXIT_DISTINGUISHED
                }
            };
            let _ = writeln!(
                text,
                "states visited {}, frontier {}, depth reached {}{}",
                stats.states_visited,
                stats.frontier_size,
                stats.depth_reached,
                if stats.state_cap_hit { " (state cap hit)" } else { "" }
            );
            Ok(Outputs { code, inputs: vec![a.to_string(), b.to_string()], results: to_value(&outcome), text })
        }
        Command::Corpus { action: CorpusAction::Verify } => {
            let checks = verify(&corpus());
            let all_ok = checks.iter().all(|c| c.ok);
            let mut text = String::new();
            for c in &checks {
                let _ = writeln!(text, "{:<16} {:<4} {}", c.name, if c.ok { "ok" } else { "FAIL" }, c.computed);
            }
            Ok(Outputs {
                code: if all_ok { EXIT_OK } else { EXIT_USAGE },
                inputs: vec![],
                results: json!({ "all_ok": all_ok, "entries": checks }),
                text,
            })
        }
        Command::Thm8Demo => {
            let t = trefoil();
            let ev = tube_non_injectivity(&t, &Palette::default());
            let mut text = String::new();
            let mark = |b: bool| if b { "yes" } else { "NO" };
            let _ = writeln!(text, "K      = {}", ev.knot);
            let _ = writeln!(text, "-K^    = {}", ev.partner);
            let _ = writeln!(text, "1. Tube certificates equal:             {}", mark(ev.tube_certificates_equal));
            let _ = writeln!(text, "2. f(K)  = {}", ev.f_knot.to_string_in("A"));
            let _ = writeln!(text, "   f(-K^) = {}", ev.f_partner.to_string_in("A"));
            let _ = writeln!(text, "   f-polynomials differ:                {}", mark(ev.f_polynomials_differ));
            let _ = writeln!(text, "   f(-K^)(A) = f(K)(A^-1):              {}", mark(ev.f_related_by_inversion));
            let _ = writeln!(text, "3. {}", crate::spun::NOTE_CLASSICAL_EMBEDS);
            let _ = writeln!(text, "verdict: {:?}; Tube is not injective: {}", ev.verdict.outcome, mark(ev.holds()));
            Ok(Outputs {
                code: if ev.holds() { EXIT_OK } else { EXIT_FAILED },
                inputs: vec![t.to_string()],
                results: json!({ "holds": ev.holds(), "evidence": ev }),
                text,
            })
        }
    }
}

fn battery_text(b: &InvariantBattery) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "level: {}  palette v{}", b.level, b.palette.version);
    let _ = writeln!(s, "alexander: {}", b.entries.alexander);
    for (name, n) in &b.entries.hom_counts {
        let ms = &b.entries.peripheral_multisets[name];
        let _ = writeln!(s, "homs to {name}: {n} ({} peripheral classes)", ms.0.len());
    }
    for (name, n) in &b.entries.quandle_counts {
        let _ = writeln!(s, "colorings by {name}: {n}");
    }
    if let Some(f) = &b.entries.f_polynomial {
        let _ = writeln!(s, "f-polynomial: {}", f.to_string_in("A"));
    }
    s
}

fn verdict_text(v: &Verdict) -> String {
    let mut s = format!("{:?}", v.outcome);
    if let Some(w) = &v.witness {
        let _ = write!(s, " (witness: {w})");
    }
    s.push('\n');
    for n in &v.notes {
        let _ = writeln!(s, "  - {n}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        run(std::iter::once("weld").chain(args.iter().copied()))
    }

    #[test]
    fn validate_rejects_unpaired() {
        let (code, out) = run_args(&["validate", "O1+U2+"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.starts_with("StructureError"), "{out}");
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn symmetry_text() {
        let (code, out) = run_args(&["symmetry", "O1+U1+", "--op", "reverse"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "U1+O1+\n");
    }
}
