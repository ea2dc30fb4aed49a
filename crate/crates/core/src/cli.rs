//! Command-line front end. Exit codes: 0 success, 1 domain error (message on
//! stderr), 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::arith::{fmt_rat, parse_int, parse_rat, BigInt, BigRat};
use crate::claims::{baseline_json, builtin_claims, check_all, render_report, Outcome, ReportFormat};
use crate::curve::{point_to_json, CurvePoint, CurveWire, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::families::{enumerate_family, FamilyId, ParamBox};
use crate::pipeline::{run_pipeline, PipelineConfig, PipelineId, SeedSource};
use crate::search::{brute_search, SearchSpec};
use crate::solution::{verify_int, EqKind, Solution};

#[derive(Parser, Debug)]
#[command(name = "dio", version, about = "Integer solutions of X^6 - Y^6 = W^n - Z^n (n = 2, 3, 4)")]
struct Cli {
    /// JSON output (all numbers as strings).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a parametric family at one point, or over ranges.
    Family(FamilyArgs),
    /// Run an elliptic-curve pipeline.
    Pipeline(PipelineArgs),
    /// Check a quadruple exactly.
    Verify(VerifyArgs),
    /// Check the registry of published numbers.
    Claims(ClaimsArgs),
    /// Exhaustive search in a box.
    Search(SearchArgs),
    /// Invariants of y^2 = x^3 + a2 x^2 + a4 x + a6, optionally with a point.
    CurveInfo(CurveArgs),
}

fn big(s: &str) -> std::result::Result<BigInt, String> {
    parse_int(s).map_err(|e| e.to_string())
}

fn rational(s: &str) -> std::result::Result<BigRat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn family_id(s: &str) -> std::result::Result<FamilyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn pipeline_id(s: &str) -> std::result::Result<PipelineId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn seed(s: &str) -> std::result::Result<SeedSource, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `lo:hi`, inclusive.
fn range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("range {s:?}: expected lo:hi"))?;
    let p = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("range {s:?}: {e}"));
    Ok(p(lo)?..=p(hi)?)
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// n2-case1..4, n2-split-<mask>, n2-m2 or n3-m1.
    #[arg(long, value_parser = family_id)]
    id: FamilyId,
    #[arg(long, value_parser = big, allow_hyphen_values = true, conflicts_with = "a_range")]
    a: Option<BigInt>,
    #[arg(long, value_parser = big, allow_hyphen_values = true, conflicts_with = "b_range")]
    b: Option<BigInt>,
    /// Third parameter: t for the splits, p for n2-m2.
    #[arg(long, visible_alias = "p", value_parser = big, allow_hyphen_values = true)]
    t: Option<BigInt>,
    #[arg(long, value_parser = range, allow_hyphen_values = true)]
    a_range: Option<RangeInclusive<i64>>,
    #[arg(long, value_parser = range, allow_hyphen_values = true)]
    b_range: Option<RangeInclusive<i64>>,
    #[arg(long, visible_alias = "p-range", value_parser = range, allow_hyphen_values = true)]
    t_range: Option<RangeInclusive<i64>>,
    /// Normal form (canonical, weighted-primitive) and deduplicate.
    #[arg(long)]
    reduce: bool,
}

#[derive(Args, Debug)]
struct PipelineArgs {
    /// n2-m3, n3-m2, n4-m1 or n4-m2.
    #[arg(long, value_parser = pipeline_id)]
    id: PipelineId,
    /// Comma-separated integers; defaults to the published parameters.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// registry, lead-square, scan, or a point x,v.
    #[arg(long, value_parser = seed, allow_hyphen_values = true)]
    seed: Option<SeedSource>,
    #[arg(long, default_value_t = 1)]
    multiples: usize,
    /// Also emit the x -> -x branch (even quartics).
    #[arg(long, conflicts_with = "no_mirror")]
    mirror: bool,
    #[arg(long)]
    no_mirror: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
    n: u32,
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    x: BigInt,
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    y: BigInt,
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    w: BigInt,
    #[arg(long, value_parser = big, allow_hyphen_values = true)]
    z: BigInt,
}

#[derive(Args, Debug)]
struct ClaimsArgs {
    /// Print the registry as the baseline file instead of checking it.
    #[arg(long)]
    baseline: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
    n: u32,
    /// 0 <= Y <= X <= xy.
    #[arg(long)]
    xy: u64,
    /// Bound on |W| and |Z|.
    #[arg(long)]
    wz: u64,
    #[arg(long)]
    include_trivial: bool,
    #[arg(long)]
    primitive_only: bool,
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a2: BigRat,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a4: BigRat,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a6: BigRat,
    /// A point x,y to test and multiply.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Number of multiples of the point to list.
    #[arg(long, default_value_t = 0)]
    multiples: usize,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        // The reader went away (e.g. `| head`); nothing left to report.
        Err(Error::Output { kind: std::io::ErrorKind::BrokenPipe, .. }) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Output { kind: e.kind(), message: e.to_string() })
}

fn solution_line(s: &Solution, as_json: bool) -> String {
    if as_json {
        serde_json::to_string(s).expect("solution serializes") + "\n"
    } else {
        format!("{s}\n")
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let as_json = cli.json;
    match &cli.command {
        Command::Family(args) => family(args, as_json, out),
        Command::Pipeline(args) => pipeline(args, as_json, out),
        Command::Verify(args) => {
            let kind = EqKind::new(args.n)?;
            let valid = verify_int(kind, &args.x, &args.y, &args.w, &args.z);
            if as_json {
                emit(out, &format!("{}\n", json!({"n": args.n, "valid": valid})))?;
            } else {
                emit(out, if valid { "valid\n" } else { "invalid\n" })?;
            }
            Ok(if valid { 0 } else { 1 })
        }
        Command::Claims(args) => {
            let claims = builtin_claims();
            if args.baseline {
                emit(out, &baseline_json(&claims))?;
                return Ok(0);
            }
            let verdicts = check_all(&claims);
            let format = if as_json { ReportFormat::Json } else { ReportFormat::Text };
            emit(out, &render_report(&claims, &verdicts, format))?;
            let broken = verdicts.iter().any(|v| {
                v.outcome == Outcome::Fail
                    && claims.iter().any(|c| c.id == v.id && c.expected == Outcome::Pass && !c.informative)
            });
            Ok(if broken { 1 } else { 0 })
        }
        Command::Search(args) => {
            let spec = SearchSpec::new(EqKind::new(args.n)?, args.xy, args.wz)
                .with_trivial(args.include_trivial)
                .with_primitive_only(args.primitive_only);
            for s in brute_search(&spec)? {
                emit(out, &solution_line(&s, as_json))?;
            }
            Ok(0)
        }
        Command::CurveInfo(args) => curve_info(args, as_json, out),
    }
}

fn family(args: &FamilyArgs, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let ranged = args.a_range.is_some() || args.b_range.is_some() || args.t_range.is_some();
    if !ranged {
        let need = |v: &Option<BigInt>, name: &str| {
            v.clone().ok_or_else(|| Error::InvalidParameter(format!("family {} needs --{name}", args.id)))
        };
        let (a, b) = (need(&args.a, "a")?, need(&args.b, "b")?);
        let s = args.id.eval(&a, &b, args.t.as_ref())?;
        emit(out, &solution_line(&s, as_json))?;
        return Ok(0);
    }
    let fixed = |v: &Option<BigInt>, r: &Option<RangeInclusive<i64>>, name: &str| -> Result<RangeInclusive<i64>> {
        match (v, r) {
            (_, Some(r)) => Ok(r.clone()),
            (Some(v), None) => {
                let v = i64::try_from(v).map_err(|_| Error::InvalidParameter(format!("--{name} is out of range")))?;
                Ok(v..=v)
            }
            (None, None) => {
                Err(Error::InvalidParameter(format!("family {} needs --{name} or --{name}-range", args.id)))
            }
        }
    };
    let third = match args.id.third_param() {
        Some(name) => Some(fixed(&args.t, &args.t_range, name)?),
        None => None,
    };
    let params = ParamBox::new(fixed(&args.a, &args.a_range, "a")?, fixed(&args.b, &args.b_range, "b")?, third);
    for s in enumerate_family(args.id, &params, args.reduce)? {
        emit(out, &solution_line(&s, as_json))?;
    }
    Ok(0)
}

fn pipeline(args: &PipelineArgs, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let mut cfg = match &args.params {
        None => PipelineConfig::published(args.id),
        Some(p) => PipelineConfig::new(args.id, PipelineConfig::parse_params(p)?)?,
    };
    if let Some(seed) = &args.seed {
        cfg = cfg.with_seed(seed.clone());
    }
    if args.mirror {
        cfg = cfg.with_mirror(true);
    }
    if args.no_mirror {
        cfg = cfg.with_mirror(false);
    }
    let report = run_pipeline(&cfg.with_multiples(args.multiples))?;
    if as_json {
        emit(out, &(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"))?;
        return Ok(0);
    }
    let mut text = format!(
        "pipeline {} ({}) seed {} multiples {}\n",
        report.config.id,
        report.config.params.join(","),
        report.config.seed,
        report.config.multiples
    );
    for e in &report.emitted {
        text += &format!(
            "m={} {}: point ({}, {}) lambda {}\n  {}\n",
            e.m, e.branch, e.point[0], e.point[1], e.lambda, e.solution
        );
    }
    for s in &report.skipped {
        text += &format!("m={} {}: skipped, {}\n", s.m, s.branch, s.reason);
    }
    emit(out, &text)?;
    Ok(0)
}

fn curve_info(args: &CurveArgs, as_json: bool, out: &mut dyn Write) -> Result<i32> {
    let e = WeierstrassCurve::new(args.a2.clone(), args.a4.clone(), args.a6.clone())?;
    let inv = e.invariants();
    let mut doc = json!({
        "curve": CurveWire::from(&e),
        "discriminant": fmt_rat(&inv.discriminant),
        "c4": fmt_rat(&inv.c4),
        "c6": fmt_rat(&inv.c6),
        "j": fmt_rat(&inv.j),
    });
    let mut text = format!("{e}\ndiscriminant {}\nc4 {}\nc6 {}\nj {}\n", inv.discriminant, inv.c4, inv.c6, inv.j);
    if let Some(p) = &args.point {
        let (x, y) = p.split_once(',').ok_or_else(|| Error::Parse(format!("point {p:?}: expected x,y")))?;
        let (x, y) = (parse_rat(x.trim())?, parse_rat(y.trim())?);
        let on = e.on_curve(&CurvePoint::affine(x.clone(), y.clone()));
        doc["point"] =
            json!({"x": fmt_rat(&x), "y": fmt_rat(&y), "on_curve": on, "residual": fmt_rat(&e.residual(&x, &y))});
        text += &format!("point ({x}, {y}) on curve: {on}\n");
        if !on {
            text += &format!("  y^2 - rhs(x) = {}\n", e.residual(&x, &y));
        }
        if args.multiples > 0 {
            let pt = e.point(x, y)?;
            let ms = e.multiples(&pt, args.multiples)?;
            doc["multiples"] = ms.iter().map(point_to_json).collect();
            for (i, m) in ms.iter().enumerate() {
                text += &format!("  {}P = {m}\n", i + 1);
            }
        }
    }
    if as_json {
        emit(out, &(serde_json::to_string_pretty(&doc).expect("json") + "\n"))?;
    } else {
        emit(out, &text)?;
    }
    Ok(0)
}
