//! Command-line front end.
//!
//! Exit codes: `0` success (for `verify`: no forbidden tuple), `1` `verify`
//! found a forbidden tuple, `2` parse or parameter error, `3` an enumeration
//! cap was exceeded.

use crate::bitfam::{parse_family_text, FamilyFile};
use crate::bounds::{bounds_table, count_bound, BoundReport, BoundsGrid};
use crate::construct::{
    count_matrices, random_with_alterations, reed_solomon_family, rs_degree, CountMode, Field,
    RsOptions, MATRIX_ENUM_CAP,
};
use crate::detect::{find_focal_in_par, find_near_sunflower_par, Side, WitnessJson};
use crate::search::{brute_force_count, exact_g, exact_g_uniform, SearchResult, SearchResultJson};
use crate::{Error, Kind, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable naming the directory of the search cache.
pub const CACHE_ENV: &str = "SUNFORGE_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "sunforge",
    version,
    about = "Near-sunflowers and focal families: verify, construct, bound, search, count"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a family file for a forbidden tuple.
    Verify(VerifyArgs),
    /// Build a family: Reed-Solomon (`rs`) or random with alterations (`random`).
    Construct(ConstructArgs),
    /// Tabulate the closed-form bounds over a parameter grid.
    Bounds(BoundsArgs),
    /// Exact extremal value for a tiny length.
    Search(SearchArgs),
    /// Column-condition matrix counts and forbidden-tuple counts.
    Count(CountArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Family file.
    input: PathBuf,
    /// ns, ff, bff0, bff1, or bff together with --b.
    #[arg(long, default_value = "ff")]
    kind: String,
    #[arg(long)]
    b: Option<u8>,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Largest number of candidate tuples to search.
    #[arg(long, default_value_t = 1e10)]
    cap: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Construction {
    Rs,
    Random,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    construction: Construction,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Field order for `rs`.
    #[arg(long)]
    q: Option<u32>,
    /// ns or ff for `random`.
    #[arg(long, default_value = "ns")]
    kind: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Inclusion probability for `random`; defaults to the optimal one.
    #[arg(long)]
    p: Option<f64>,
    /// Largest Reed-Solomon family emitted in full.
    #[arg(long, default_value_t = 4096)]
    cap: u64,
    /// Sample this many Reed-Solomon codewords when the full family is above the cap.
    #[arg(long)]
    sample: Option<usize>,
    /// Family file to write; the trace goes to `<out>.json`. Without it the
    /// family goes to stdout and the trace to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    r: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    q: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    k: Vec<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value = "ff")]
    kind: String,
    #[arg(long)]
    b: Option<u8>,
    /// Restrict to weight-k vectors.
    #[arg(long)]
    k: Option<usize>,
    /// Write the extremal family here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value = "ns")]
    kind: String,
}

fn resolve_kind(kind: &str, b: Option<u8>) -> Result<Kind> {
    match (kind, b) {
        ("bff", Some(0)) => Ok(Kind::Bff0),
        ("bff", Some(1)) => Ok(Kind::Bff1),
        ("bff", other) => Err(Error::InvalidParams(format!(
            "kind bff needs --b 0 or 1, got {other:?}"
        ))),
        (k, None) => k.parse(),
        (k, Some(_)) => Err(Error::InvalidParams(format!(
            "--b only applies to kind bff, not {k}"
        ))),
    }
}

fn side_of(kind: Kind) -> Side {
    match kind {
        Kind::Bff0 => Side::Zero,
        Kind::Bff1 => Side::One,
        _ => Side::Both,
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded(_) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Construct(a) => cmd_construct(&a, out, err),
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Search(a) => cmd_search(&a, out),
        Command::Count(a) => cmd_count(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn tuple_estimate(m: usize, r: usize, focal: bool) -> f64 {
    // C(m, r), or m * C(m-1, r-1) with a distinguished focus.
    let choose =
        |m: usize, r: usize| (0..r).fold(1.0f64, |acc, i| acc * (m - i) as f64 / (i + 1) as f64);
    if m < r {
        0.0
    } else if focal {
        m as f64 * choose(m - 1, r - 1)
    } else {
        choose(m, r)
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let kind = resolve_kind(&a.kind, a.b)?;
    crate::detect::check_r(a.r)?;
    let text = std::fs::read_to_string(&a.input)?;
    let file = parse_family_text(&text)?;
    let estimate = tuple_estimate(file.len(), a.r, kind != Kind::Ns);
    if estimate > a.cap {
        return Err(Error::CapExceeded(format!(
            "about {estimate:.3e} candidate tuples above cap {}",
            a.cap
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    let witness: Option<WitnessJson> = pool.install(|| -> Result<_> {
        Ok(match (&file, kind) {
            (FamilyFile::Binary(f), Kind::Ns) => {
                find_near_sunflower_par(f, a.r)?.as_ref().map(Into::into)
            }
            (FamilyFile::Binary(f), k) => find_focal_in_par(f, a.r, side_of(k))?
                .as_ref()
                .map(Into::into),
            (FamilyFile::Qary(f), Kind::Ff) => find_focal_in_par(f, a.r, Side::Both)?
                .as_ref()
                .map(Into::into),
            (FamilyFile::Qary(_), k) => {
                return Err(Error::InvalidParams(format!(
                    "kind {k} is only defined for binary families"
                )))
            }
        })
    })?;
    let report = json!({
        "config": {
            "subcommand": "verify",
            "input": a.input,
            "kind": kind,
            "r": a.r,
            "workers": a.workers,
            "cap": a.cap,
        },
        "members": file.len(),
        "violation": witness,
    });
    match a.format {
        Format::Json => emit_json(out, &report)?,
        Format::Text => match &witness {
            None => writeln!(
                out,
                "no {kind} tuple of size {} among {} members",
                a.r,
                file.len()
            )?,
            Some(w) => writeln!(out, "violation: {} at members {:?}", w.kind, w.indices)?,
        },
    }
    Ok(if witness.is_some() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

fn write_outputs(
    family_text: &str,
    trace: &Value,
    target: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let trace_text = serde_json::to_string_pretty(trace)?;
    match target {
        Some(path) => {
            std::fs::write(path, family_text)?;
            let mut trace_path = path.as_os_str().to_owned();
            trace_path.push(".json");
            std::fs::write(PathBuf::from(trace_path), trace_text + "\n")?;
        }
        None => {
            out.write_all(family_text.as_bytes())?;
            writeln!(err, "{trace_text}")?;
        }
    }
    Ok(())
}

fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match a.construction {
        Construction::Rs => {
            let q =
                a.q.ok_or_else(|| Error::InvalidParams("rs construction needs --q".into()))?;
            let field = Field::for_order(q)?;
            let opts = RsOptions {
                cap: a.cap,
                sample: a.sample.map(|count| (a.seed, count)),
            };
            let family = reed_solomon_family(&field, a.n, a.r, opts)?;
            let d = rs_degree(a.n, a.r);
            // Distinct members must agree on fewer than d coordinates.
            let members = family.members();
            for (i, x) in members.iter().enumerate() {
                if let Some(y) = members[i + 1..].iter().find(|y| x.agreements(y) >= d) {
                    return Err(Error::Precondition(format!(
                        "members {x} and {y} agree on {d} coordinates"
                    )));
                }
            }
            let trace = json!({
                "config": {
                    "subcommand": "construct",
                    "construction": "rs",
                    "q": q,
                    "n": a.n,
                    "r": a.r,
                    "cap": a.cap,
                    "sample": a.sample,
                    "seed": a.seed,
                    "out": a.out,
                },
                "field": {
                    "characteristic": field.spec().characteristic(),
                    "degree": field.spec().degree(),
                    "modulus": field.spec().modulus(),
                },
                "degree_bound": d,
                "size": family.len(),
                "verified": "pairwise agreement below degree bound",
            });
            write_outputs(&family.to_text(), &trace, a.out.as_deref(), out, err)?;
        }
        Construction::Random => {
            let kind: Kind = a.kind.parse()?;
            let (family, trace) = random_with_alterations(a.n, a.r, kind, a.seed, a.p)?;
            let clean = match kind {
                Kind::Ns => crate::detect::find_near_sunflower(&family, a.r)?.is_none(),
                k => crate::detect::find_focal_in(&family, a.r, side_of(k))?.is_none(),
            };
            if !clean {
                return Err(Error::Precondition(
                    "altered family still has a forbidden tuple".into(),
                ));
            }
            let trace = json!({
                "config": {
                    "subcommand": "construct",
                    "construction": "random",
                    "n": a.n,
                    "r": a.r,
                    "kind": kind,
                    "seed": a.seed,
                    "p": a.p,
                    "out": a.out,
                },
                "trace": trace,
                "verified": "no forbidden tuple",
            });
            write_outputs(&family.to_text(), &trace, a.out.as_deref(), out, err)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<i32> {
    let grid = BoundsGrid {
        n: a.n.clone(),
        r: a.r.clone(),
        q: a.q.clone(),
        k: a.k.clone(),
    };
    let rows = bounds_table(&grid)?;
    match a.format {
        Format::Json => emit_json(
            out,
            &json!({
                "config": {
                    "subcommand": "bounds",
                    "n": a.n,
                    "r": a.r,
                    "q": a.q,
                    "k": a.k,
                },
                "rows": rows,
            }),
        )?,
        Format::Text => write_table(&rows, out)?,
    }
    Ok(EXIT_OK)
}

fn write_table(rows: &[BoundReport], out: &mut dyn Write) -> Result<()> {
    for row in rows {
        let rate = row
            .rate
            .map_or_else(|| "-".to_string(), |r| format!("{r:.9}"));
        writeln!(
            out,
            "{:<24} {:<18} {:>24} {:>14}  {}",
            row.name, row.params, row.value, rate, row.provenance
        )?;
    }
    Ok(())
}

fn cache_key(n: usize, r: usize, kind: Kind, k: Option<usize>) -> String {
    match k {
        Some(k) => format!("n={n} r={r} kind={kind} k={k}"),
        None => format!("n={n} r={r} kind={kind}"),
    }
}

fn load_cache(dir: &Path) -> BTreeMap<String, SearchResultJson> {
    std::fs::read_to_string(dir.join("search-cache.json"))
        .ok()
        .and_then(|s| serde_json::from_str(&s).ok())
        .unwrap_or_default()
}

fn cmd_search(a: &SearchArgs, out: &mut dyn Write) -> Result<i32> {
    let kind = resolve_kind(&a.kind, a.b)?;
    let cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let key = cache_key(a.n, a.r, kind, a.k);
    let cached = cache_dir
        .as_deref()
        .and_then(|d| load_cache(d).remove(&key));
    let (result, from_cache) = match cached {
        Some(json) => (SearchResult::from_json(&json)?, true),
        None => {
            let res = match a.k {
                Some(k) => exact_g_uniform(a.n, k, a.r, kind)?,
                None => exact_g(a.n, a.r, kind)?,
            };
            if let Some(dir) = &cache_dir {
                std::fs::create_dir_all(dir)?;
                let mut cache = load_cache(dir);
                cache.insert(key, res.to_json());
                std::fs::write(
                    dir.join("search-cache.json"),
                    serde_json::to_string_pretty(&cache)?,
                )?;
            }
            (res, false)
        }
    };
    if let Some(path) = &a.out {
        std::fs::write(path, result.witness.to_text())?;
    }
    emit_json(
        out,
        &json!({
            "config": {
                "subcommand": "search",
                "n": a.n,
                "r": a.r,
                "kind": kind,
                "k": a.k,
                "out": a.out,
            },
            "cached": from_cache,
            "result": result.to_json(),
        }),
    )?;
    Ok(EXIT_OK)
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> Result<i32> {
    let kind: Kind = a.kind.parse()?;
    let closed = count_matrices(a.n, a.r, kind, CountMode::ClosedForm)?;
    let enumerated = if a.r * a.n <= MATRIX_ENUM_CAP {
        Some(count_matrices(a.n, a.r, kind, CountMode::Enumerate)?.to_string())
    } else {
        None
    };
    let brute = match brute_force_count(a.n, a.r, kind) {
        Ok(c) => Some(c),
        Err(Error::CapExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    emit_json(
        out,
        &json!({
            "config": {
                "subcommand": "count",
                "n": a.n,
                "r": a.r,
                "kind": kind,
            },
            "matrices_closed_form": closed.to_string(),
            "matrices_enumerated": enumerated,
            "tuples_brute_force": brute,
            "tuple_count_bound": count_bound(a.n, a.r, kind)?.to_string(),
        }),
    )?;
    Ok(EXIT_OK)
}

/// Entry point used by the `sunforge` binary.
pub fn main() -> ! {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code)
}
