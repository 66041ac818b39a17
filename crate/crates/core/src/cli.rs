//! Command-line front end. [`run`] parses arguments, writes the result to
//! stdout and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{format_rational, Point, PointSampler};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_states, render_state, GridDims, Model, Signature};
use crate::partition::{normalized_at, normalized_symbolic, partition_at, partition_symbolic, Engine};
use crate::schur::{
    calibrate_schur_specialization, dwbc_product_candidate, dwbc_product_candidate_factors, factor_dwbc, factorial_schur_alternant, PartitionShape,
    SignConvention,
};
use crate::switchop::{reduce_to_base_at, reduce_to_base_symbolic, word_for_signatures, WordForm};
use crate::verify::{run_suite, Suite, VerifyOptions};
use crate::weights::{
    cross_factor_candidates, generic_guards, scheme_by_name, solve_cross_point, solve_cross_symbolic, Orientation,
    Wiring,
};

#[derive(Parser, Debug)]
#[command(name = "vertexkit", version, about = "Exact six-vertex model computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count (and optionally draw) the admissible states of a model
    Enumerate {
        #[command(flatten)]
        model: ModelArgs,
        /// Include a text drawing of every state
        #[arg(long)]
        render: bool,
    },
    /// Partition function, symbolically or at points
    Partition {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value = "ff")]
        scheme: String,
        #[command(flatten)]
        mode: ModeArgs,
        /// Divide by the product of a1 over all sites
        #[arg(long)]
        normalized: bool,
        #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross weights solving the Yang-Baxter equation
    Ybe {
        #[command(subcommand)]
        action: YbeAction,
    },
    /// Compute Z through switch operators applied to the base case
    Reduce {
        /// Grid size as rows,cols
        #[arg(long, value_parser = parse_pair)]
        model_size: (usize, usize),
        #[arg(long, value_parser = parse_signature)]
        alpha: Signature,
        #[arg(long, value_parser = parse_signature)]
        beta: Signature,
        #[command(flatten)]
        mode: ModeArgs,
        /// Print the operator word
        #[arg(long)]
        emit_word: bool,
        /// Print the word expanded from the product formulas instead
        #[arg(long, requires = "emit_word")]
        literal: bool,
        #[arg(long, default_value = "ff")]
        scheme: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
        engine: EngineArg,
    },
    /// Run a verification suite and print a JSON report
    Verify {
        /// One of: admissibility, ybe, train, exchange, inverse, switch, theorem,
        /// proposition, symmetry, schur-calibration, engines, factorization
        suite: String,
        #[arg(long)]
        seed: u64,
        /// Points (or configurations) per case
        #[arg(long)]
        points: Option<usize>,
        /// Rows, or the largest square size for sweeps
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Largest number of paths in the theorem sweep
        #[arg(long)]
        max_d: Option<usize>,
        #[arg(long, value_enum, default_value_t = EngineArg::Dp)]
        engine: EngineArg,
    },
    /// Factorial Schur polynomials and the DWBC factorization
    Schur {
        #[command(subcommand)]
        action: SchurAction,
    },
}

#[derive(Subcommand, Debug)]
enum YbeAction {
    /// Solve for the cross weights of a label pair
    Solve {
        #[arg(long, value_parser = parse_orientation)]
        orientation: Orientation,
        #[arg(long, value_parser = parse_pair32)]
        pair: (u32, u32),
        #[arg(long, default_value = "ff")]
        scheme: String,
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long, value_enum, default_value_t = WiringArg::Transport)]
        wiring: WiringArg,
    },
    /// Check solvability and vanishing residuals on every adjacent pair
    Check {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum SchurAction {
    /// Factorial Schur polynomial as a ratio of alternants
    Alternant {
        /// Parts, comma separated
        #[arg(long, value_parser = parse_shape)]
        lambda: PartitionShape,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
    },
    /// Search for the dictionary between specialized Z and factorial Schur polynomials
    Calibrate,
    /// Factor the DWBC partition function into binomials
    FactorDwbc {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ModelArgs {
    /// Domain wall boundary conditions of this size
    #[arg(long)]
    dwbc: Option<usize>,
    /// Model JSON file
    #[arg(long)]
    model: Option<String>,
}

#[derive(Args, Debug)]
struct ModeArgs {
    /// Exact polynomial result (the default)
    #[arg(long, conflicts_with_all = ["point", "points"])]
    symbolic: bool,
    /// Evaluate at this point: inline JSON or a file
    #[arg(long, conflicts_with = "points")]
    point: Option<String>,
    /// Evaluate at this many sampled points
    #[arg(long)]
    points: Option<usize>,
    /// Seed for sampled points
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Brute,
    Dp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WiringArg {
    Transport,
    Positional,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Brute => Engine::Brute,
            EngineArg::Dp => Engine::Dp,
        }
    }
}

fn parse_parts(s: &str) -> std::result::Result<Vec<u32>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}"))).collect()
}

fn parse_shape(s: &str) -> std::result::Result<PartitionShape, String> {
    PartitionShape::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_signature(s: &str) -> std::result::Result<Signature, String> {
    Signature::new(parse_parts(s)?).map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    match parse_parts(s)?.as_slice() {
        [a, b] => Ok((*a as usize, *b as usize)),
        _ => Err(format!("expected two comma-separated numbers, got {s:?}")),
    }
}

fn parse_pair32(s: &str) -> std::result::Result<(u32, u32), String> {
    parse_pair(s).map(|(a, b)| (a as u32, b as u32))
}

fn parse_orientation(s: &str) -> std::result::Result<Orientation, String> {
    Orientation::parse(s).map_err(|e| e.to_string())
}

/// JSON with a space after every colon and comma, on one line.
struct Spaced;

impl serde_json::ser::Formatter for Spaced {
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }
}

/// Serializes to the one-line spaced form used by every command.
pub fn to_json_line(value: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Spaced);
    value.serialize(&mut ser).expect("values serialize");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<String, Failure>;

fn load_model(args: &ModelArgs) -> Result<Model> {
    match (&args.dwbc, &args.model) {
        (Some(n), _) => Model::dwbc(*n),
        (None, Some(path)) => Model::from_json(&serde_json::from_str(&std::fs::read_to_string(path)?)?),
        (None, None) => Err(Error::Invalid("give --dwbc or --model".into())),
    }
}

fn load_point(src: &str) -> Result<Point> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        std::fs::read_to_string(src)?
    };
    Point::from_json(&serde_json::from_str(&text)?)
}

enum Mode {
    Symbolic,
    At(Vec<Point>),
}

fn resolve_mode(mode: &ModeArgs, rows: usize, cols: usize, guards: &[crate::algebra::Polynomial]) -> Result<Mode> {
    if let Some(src) = &mode.point {
        return Ok(Mode::At(vec![load_point(src)?]));
    }
    if let Some(k) = mode.points {
        let seed = mode
            .seed
            .ok_or_else(|| Error::Invalid("--points needs --seed so that runs are reproducible".into()))?;
        let mut sampler = PointSampler::new(seed);
        return Ok(Mode::At((0..k).map(|_| sampler.sample(rows as u32, cols as u32, guards)).collect()));
    }
    Ok(Mode::Symbolic)
}

fn rat(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

fn enumerate(model: &ModelArgs, render: bool) -> CmdResult {
    let model = load_model(model)?;
    let states: Vec<_> = enumerate_states(&model).collect();
    let mut out = json!({"states": states.len()});
    if render {
        out["renders"] = states.iter().map(|s| Value::String(render_state(s))).collect();
    }
    Ok(to_json_line(&out))
}

fn partition(
    model: &ModelArgs,
    scheme: &str,
    mode: &ModeArgs,
    normalized: bool,
    engine: Engine,
    format: Format,
) -> CmdResult {
    let model = load_model(model)?;
    let scheme = scheme_by_name(scheme)?;
    let (n, m) = (model.dims.rows, model.dims.cols);
    let guards = generic_guards(scheme.as_ref(), n as u32, m as u32);
    match resolve_mode(mode, n, m, &guards)? {
        Mode::Symbolic => {
            let (text, states) = if normalized {
                (normalized_symbolic(&model, scheme.as_ref(), engine)?.to_string(), None)
            } else {
                let r = partition_symbolic(&model, scheme.as_ref(), engine)?;
                (r.value.to_string(), Some(r.state_count))
            };
            Ok(match format {
                Format::Text => text,
                Format::Json => to_json_line(&json!({
                    "schema": 1, "scheme": scheme.name(), "normalized": normalized,
                    "value": text, "states": states.map(|s| s.to_string()),
                })),
            })
        }
        Mode::At(points) => {
            let mut rows = Vec::new();
            for p in &points {
                let v = if normalized {
                    normalized_at(&model, scheme.as_ref(), p, engine)?
                } else {
                    partition_at(&model, scheme.as_ref(), p, engine)?.value
                };
                rows.push((p, v));
            }
            Ok(match format {
                Format::Text => rows.iter().map(|(_, v)| format_rational(v)).collect::<Vec<_>>().join("\n"),
                Format::Json => to_json_line(&json!({
                    "schema": 1, "scheme": scheme.name(), "normalized": normalized,
                    "values": rows.iter().map(|(p, v)| json!({"point": p.to_json(), "value": rat(v)})).collect::<Vec<_>>(),
                })),
            })
        }
    }
}

fn ybe_solve(orientation: Orientation, pair: (u32, u32), scheme: &str, mode: &ModeArgs, wiring: Wiring) -> CmdResult {
    let scheme = scheme_by_name(scheme)?;
    let lines = pair.0.max(pair.1) as usize;
    let guards = cross_factor_candidates(orientation, pair);
    let kinds = crate::lattice::VertexKind::ALL;
    match resolve_mode(mode, lines, lines, &guards)? {
        Mode::Symbolic => {
            let cross = solve_cross_symbolic(scheme.as_ref(), pair, orientation, 1, wiring)?;
            let weights: serde_json::Map<String, Value> =
                kinds.iter().map(|k| (k.name().to_string(), Value::String(cross.get(*k).to_string()))).collect();
            Ok(to_json_line(&json!({
                "schema": 1, "orientation": orientation.letter().to_string(), "pair": [pair.0, pair.1], "weights": weights,
            })))
        }
        Mode::At(points) => {
            let mut out = Vec::new();
            for p in &points {
                let cross = solve_cross_point(scheme.as_ref(), pair, orientation, 1, p, wiring)?;
                let weights: serde_json::Map<String, Value> =
                    kinds.iter().map(|k| (k.name().to_string(), rat(cross.get(*k)))).collect();
                out.push(json!({"point": p.to_json(), "weights": weights}));
            }
            Ok(to_json_line(&json!({
                "schema": 1, "orientation": orientation.letter().to_string(), "pair": [pair.0, pair.1], "solutions": out,
            })))
        }
    }
}

fn report_result(report: crate::verify::SuiteReport) -> CmdResult {
    let text = to_json_line(&report.to_json());
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

#[allow(clippy::too_many_arguments)]
fn reduce(
    (n, m): (usize, usize),
    alpha: &Signature,
    beta: &Signature,
    mode: &ModeArgs,
    emit_word: bool,
    literal: bool,
    scheme: &str,
    engine: Engine,
) -> CmdResult {
    let dims = GridDims::new(n, m)?;
    let scheme = scheme_by_name(scheme)?;
    let form = if literal { WordForm::Literal } else { WordForm::Transport };
    let word = word_for_signatures(alpha, beta, dims, form)?;
    let model = Model::from_signatures(dims, alpha, beta)?;
    let mut out = json!({"schema": 1, "alpha": alpha.to_string(), "beta": beta.to_string()});
    if emit_word {
        out["word"] = Value::String(word.to_string());
        out["reaches"] = {
            let (a0, b0) = crate::switchop::base_signatures(alpha.len(), m);
            let (a, b) = word.transport(&a0, &b0);
            json!([a.to_string(), b.to_string()])
        };
    }
    let guards = generic_guards(scheme.as_ref(), n as u32, m as u32);
    let all_equal = match resolve_mode(mode, n, m, &guards)? {
        Mode::Symbolic => {
            let reduced = reduce_to_base_symbolic(alpha, beta, dims, scheme.as_ref(), engine)?;
            let direct = partition_symbolic(&model, scheme.as_ref(), engine)?.value;
            out["value"] = Value::String(reduced.to_string());
            out["equals_direct"] = Value::Bool(reduced == direct);
            reduced == direct
        }
        Mode::At(points) => {
            let mut rows = Vec::new();
            let mut ok = true;
            for p in &points {
                let reduced = reduce_to_base_at(alpha, beta, dims, scheme.as_ref(), p, engine)?;
                let direct = partition_at(&model, scheme.as_ref(), p, engine)?.value;
                ok &= reduced == direct;
                rows.push(json!({"point": p.to_json(), "reduced": rat(&reduced), "direct": rat(&direct), "equal": reduced == direct}));
            }
            out["values"] = Value::Array(rows);
            ok
        }
    };
    out["pass"] = Value::Bool(all_equal);
    let text = to_json_line(&out);
    if all_equal {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn schur(action: &SchurAction) -> CmdResult {
    match action {
        SchurAction::Alternant { lambda, n, sign } => {
            let sign = match sign {
                SignArg::Plus => SignConvention::Plus,
                SignArg::Minus => SignConvention::Minus,
            };
            Ok(factorial_schur_alternant(lambda, *n, sign)?.to_string())
        }
        SchurAction::Calibrate => {
            let mut v = calibrate_schur_specialization()?.to_json();
            v["schema"] = json!(1);
            Ok(to_json_line(&v))
        }
        SchurAction::FactorDwbc { n } => {
            let scheme = crate::weights::ff_scheme();
            let (z, report) = factor_dwbc(*n, &scheme, Engine::Dp)?;
            let mut v = report.to_json();
            v["schema"] = json!(1);
            v["n"] = json!(n);
            v["terms"] = json!(z.num_terms());
            v["printed_candidate"] = dwbc_product_candidate_factors(*n).iter().map(|f| Value::String(f.to_string())).collect();
            v["equals_printed"] = Value::Bool(z == dwbc_product_candidate(*n));
            Ok(to_json_line(&v))
        }
    }
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Enumerate { model, render } => enumerate(&model, render),
        Command::Partition {
            model,
            scheme,
            mode,
            normalized,
            engine,
            format,
        } => partition(&model, &scheme, &mode, normalized, engine.into(), format),
        Command::Ybe { action } => match action {
            YbeAction::Solve {
                orientation,
                pair,
                scheme,
                mode,
                wiring,
            } => {
                let wiring = match wiring {
                    WiringArg::Transport => Wiring::Transport,
                    WiringArg::Positional => Wiring::Positional,
                };
                ybe_solve(orientation, pair, &scheme, &mode, wiring)
            }
            YbeAction::Check { n, m, points, seed } => {
                let opts = VerifyOptions {
                    seed,
                    points: Some(points),
                    rows: Some(n),
                    cols: Some(m),
                    ..Default::default()
                };
                report_result(run_suite(Suite::Ybe, &opts)?)
            }
        },
        Command::Reduce {
            model_size,
            alpha,
            beta,
            mode,
            emit_word,
            literal,
            scheme,
            engine,
        } => reduce(model_size, &alpha, &beta, &mode, emit_word, literal, &scheme, engine.into()),
        Command::Verify {
            suite,
            seed,
            points,
            n,
            m,
            max_d,
            engine,
        } => {
            let suite = Suite::parse(&suite)?;
            let opts = VerifyOptions {
                seed,
                points,
                rows: n,
                cols: m,
                max_paths: max_d,
                engine: engine.into(),
            };
            report_result(run_suite(suite, &opts)?)
        }
        Command::Schur { action } => schur(&action),
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Verification(text)) => {
            let _ = writeln!(out, "{text}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}
