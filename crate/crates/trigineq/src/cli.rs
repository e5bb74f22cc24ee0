//! Command-line front end.
//!
//! Subcommands: `certify` (Sturm certificates), `scan` (forced grid path),
//! `lemmas`, `sharpness`, `series`, `all`. Reports are deterministic: the
//! same configuration and tool version produce byte-identical output
//! regardless of `--jobs`.

use crate::rat::{rat, rat_from_decimal, rint, Rat};
use crate::report::{
    am_entry, case_partition_entry, certificate_entry, lemma_entry, sharpness_entry,
    superadditivity_entry, ReportEnvelope, ResultEntry,
};
use crate::series::{check_absolute_monotonicity, check_superadditive, WParams};
use crate::sums::{binom, FamilyId, FamilyTag};
use crate::verify::{
    certify_positive, run_lemma_checks, check_sharpness, theorem5_case_partition, CertOptions,
    SharpnessClaim,
};
use crate::cheb::Angle;
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;

pub const ENV_PRECISION: &str = "TRIGINEQ_PRECISION_BITS";

#[derive(Debug, Parser)]
#[command(name = "trigineq", version, about = "Exact positivity certificates for trigonometric sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Working precision in bits (>= 64); overrides TRIGINEQ_PRECISION_BITS.
    #[arg(long, global = true)]
    pub precision_bits: Option<usize>,
    /// Grid points for scan fallbacks and lemma grids (>= 16).
    #[arg(long, global = true, default_value_t = 2048)]
    pub grid_points: usize,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; 0 uses the rayon default. Output bytes do not depend
    /// on this value.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positivity/bound certificates over (m, n) sweeps.
    Certify {
        #[arg(long)]
        family: String,
        /// m range, e.g. `2` or `1..10` (inclusive).
        #[arg(long, default_value = "1")]
        m: String,
        /// n range, e.g. `6` or `1..100` (inclusive).
        #[arg(long, default_value = "1..10")]
        n: String,
        /// Interval as rational multiples of pi, e.g. `0..pi`, `0..2pi/3`.
        #[arg(long)]
        interval: Option<String>,
        /// Lower bound (rational like `-1/4` or decimal like `2.5`);
        /// defaults to the family's theorem bound.
        #[arg(long)]
        bound: Option<String>,
    },
    /// Same sweep forced through the refining grid scan (numeric only).
    Scan {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "1")]
        m: String,
        #[arg(long, default_value = "1..10")]
        n: String,
        #[arg(long)]
        interval: Option<String>,
        #[arg(long)]
        bound: Option<String>,
    },
    /// Lemma 1-7 machinery at each n in the range.
    Lemmas {
        #[arg(long, default_value = "24")]
        n: String,
    },
    /// Sharpness-constant probes; all claims when none is named.
    Sharpness {
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, default_value_t = 8)]
        depth: u32,
    },
    /// Absolute monotonicity and superadditivity of the W family.
    Series {
        #[arg(long, default_value = "1..3")]
        m: String,
        /// Comma-separated rational omegas; default is -1..1 in steps of 1/4.
        #[arg(long)]
        omega: Option<String>,
        #[arg(long, default_value_t = 256)]
        order: usize,
        /// Superadditivity sample count; 0 skips the sampling check.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// A representative bundle of all check types.
    All,
}

/// Usage-level failure: printed to stderr, process exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn parse_range(s: &str, what: &str) -> Result<(u32, u32), UsageError> {
    let parse_one = |p: &str| {
        p.trim()
            .parse::<u32>()
            .map_err(|_| UsageError(format!("malformed {what} range: {s:?}")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse_one(a)?, parse_one(b)?),
        None => {
            let v = parse_one(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(UsageError(format!("empty {what} range: {s:?}")));
    }
    Ok((lo, hi))
}

/// Parse one endpoint: `0`, `pi`, `2pi`, `pi/2`, `2pi/3`, generally
/// `[k]pi[/d]`.
fn parse_angle(s: &str) -> Result<Angle, UsageError> {
    let s = s.trim();
    if s == "0" {
        return Ok(Angle::zero());
    }
    let bad = || UsageError(format!("malformed angle: {s:?} (expected e.g. 0, pi, 2pi/3)"));
    let idx = s.find("pi").ok_or_else(bad)?;
    let (num_str, rest) = (&s[..idx], &s[idx + 2..]);
    let num: i64 = if num_str.is_empty() {
        1
    } else {
        num_str.parse().map_err(|_| bad())?
    };
    let den: i64 = if rest.is_empty() {
        1
    } else {
        let d = rest.strip_prefix('/').ok_or_else(bad)?;
        d.parse().map_err(|_| bad())?
    };
    if den == 0 {
        return Err(bad());
    }
    Ok(Angle::pi_times(rat(num, den)))
}

fn parse_interval(s: &str) -> Result<(Angle, Angle), UsageError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| UsageError(format!("malformed interval: {s:?} (expected a..b)")))?;
    let (a, b) = (parse_angle(a)?, parse_angle(b)?);
    if a.pi_mult() >= b.pi_mult() {
        return Err(UsageError(format!("empty interval: {s:?}")));
    }
    Ok((a, b))
}

fn parse_rat(s: &str) -> Result<Rat, UsageError> {
    rat_from_decimal(s).map_err(|_| UsageError(format!("malformed rational: {s:?}")))
}

fn parse_family(s: &str) -> Result<FamilyTag, UsageError> {
    FamilyTag::parse(s).ok_or_else(|| UsageError(format!("unknown family tag: {s:?}")))
}

/// The theorem-level default bound for a family instance.
pub fn default_bound(f: &FamilyId) -> Rat {
    match f.tag {
        FamilyTag::B12 => rint(f.m as i64),
        FamilyTag::U14 if f.m == 1 => rat(-1, 4),
        FamilyTag::T31 => {
            rint(f.m as i64)
                - Rat::from_integer(binom(f.n as u64 + f.m as u64, f.m as u64)) * rat(1, 2)
        }
        _ => Rat::zero(),
    }
}

/// The theorem-level default interval for a family.
pub fn default_interval(tag: FamilyTag) -> (Angle, Angle) {
    match tag {
        FamilyTag::PDiff | FamilyTag::ThetaDiff => (Angle::zero(), Angle::two_pi_thirds()),
        FamilyTag::V15 | FamilyTag::A11 => (Angle::zero(), Angle::pi()),
        _ => (Angle::zero(), Angle::pi()),
    }
}

fn resolve_precision(cli_flag: Option<usize>) -> Result<usize, UsageError> {
    let p = match cli_flag {
        Some(p) => p,
        None => match std::env::var(ENV_PRECISION) {
            Ok(v) => v
                .parse()
                .map_err(|_| UsageError(format!("malformed {ENV_PRECISION}: {v:?}")))?,
            Err(_) => crate::hp::DEFAULT_PRECISION_BITS,
        },
    };
    if p < 64 {
        return Err(UsageError(format!("precision_bits must be >= 64, got {p}")));
    }
    Ok(p)
}

fn certify_sweep(
    family: &str,
    m: &str,
    n: &str,
    interval: &Option<String>,
    bound: &Option<String>,
    opts: &CertOptions,
) -> Result<(serde_json::Value, Vec<ResultEntry>), UsageError> {
    let tag = parse_family(family)?;
    let (m_lo, m_hi) = parse_range(m, "m")?;
    let (n_lo, n_hi) = parse_range(n, "n")?;
    let iv = match interval {
        Some(s) => parse_interval(s)?,
        None => default_interval(tag),
    };
    let bound_override = bound.as_deref().map(parse_rat).transpose()?;
    let config = json!({
        "command": "certify",
        "family": tag.to_string(),
        "m": format!("{m_lo}..{m_hi}"),
        "n": format!("{n_lo}..{n_hi}"),
        "interval": format!("{}..{}", iv.0, iv.1),
        "bound": bound.clone(),
        "precision_bits": opts.precision_bits,
        "grid_points": opts.grid_points,
        "forced_grid": opts.force_grid,
    });
    let ids: Vec<FamilyId> = (m_lo..=m_hi)
        .flat_map(|mm| (n_lo..=n_hi).map(move |nn| FamilyId::new(tag, mm, nn)))
        .collect();
    let entries: Result<Vec<ResultEntry>, UsageError> = ids
        .par_iter()
        .map(|id| {
            let b = bound_override.clone().unwrap_or_else(|| default_bound(id));
            certify_positive(id, &b, (&iv.0, &iv.1), opts)
                .map(|c| certificate_entry(&c))
                .map_err(|e| UsageError(e.to_string()))
        })
        .collect();
    Ok((config, entries?))
}

fn series_sweep(
    m: &str,
    omega: &Option<String>,
    order: usize,
    samples: usize,
    precision: usize,
) -> Result<(serde_json::Value, Vec<ResultEntry>), UsageError> {
    let (m_lo, m_hi) = parse_range(m, "m")?;
    let omegas: Vec<Rat> = match omega {
        Some(s) => s
            .split(',')
            .map(|p| parse_rat(p.trim()))
            .collect::<Result<_, _>>()?,
        None => (-4..=4i64).map(|k| rat(k, 4)).collect(),
    };
    if let Some(bad) = omegas.iter().find(|o| {
        use num_traits::Signed;
        o.abs() > Rat::from_integer(1.into())
    }) {
        return Err(UsageError(format!("omega must lie in [-1, 1], got {bad}")));
    }
    if m_lo < 1 {
        return Err(UsageError("m must be >= 1".into()));
    }
    if order < 8 {
        return Err(UsageError(format!("order must be >= 8, got {order}")));
    }
    if samples > 0 && samples < 100 {
        return Err(UsageError(format!("samples must be 0 or >= 100, got {samples}")));
    }
    let config = json!({
        "command": "series",
        "m": format!("{m_lo}..{m_hi}"),
        "omega": omegas.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "order": order,
        "samples": samples,
        "precision_bits": precision,
    });
    let params: Vec<WParams> = (m_lo..=m_hi)
        .flat_map(|mm| {
            omegas
                .iter()
                .map(move |o| WParams::new(mm, o.clone()).expect("validated omega"))
        })
        .collect();
    let entries: Vec<ResultEntry> = params
        .par_iter()
        .flat_map(|p| {
            let mut out = vec![am_entry(p, &check_absolute_monotonicity(p, order))];
            if samples > 0 {
                out.push(superadditivity_entry(
                    p,
                    &check_superadditive(p, samples, precision),
                ));
            }
            out
        })
        .collect();
    Ok((config, entries))
}

/// Execute a parsed invocation; the envelope and suggested exit code.
pub fn run(cli: &Cli) -> Result<(ReportEnvelope, i32), UsageError> {
    let start = Instant::now();
    let precision = resolve_precision(cli.precision_bits)?;
    if cli.grid_points < 16 {
        return Err(UsageError(format!(
            "grid_points must be >= 16, got {}",
            cli.grid_points
        )));
    }
    let opts = CertOptions {
        grid_points: cli.grid_points,
        precision_bits: precision,
        force_grid: false,
        require_sturm: false,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| UsageError(format!("thread pool: {e}")))?;

    let (config, entries) = pool.install(|| -> Result<_, UsageError> {
        match &cli.command {
            Command::Certify {
                family,
                m,
                n,
                interval,
                bound,
            } => certify_sweep(family, m, n, interval, bound, &opts),
            Command::Scan {
                family,
                m,
                n,
                interval,
                bound,
            } => {
                let mut opts = opts.clone();
                opts.force_grid = true;
                let (mut config, entries) = certify_sweep(family, m, n, interval, bound, &opts)?;
                config["command"] = json!("scan");
                Ok((config, entries))
            }
            Command::Lemmas { n } => {
                let (n_lo, n_hi) = parse_range(n, "n")?;
                let grid = cli.grid_points.min(256);
                let config = json!({
                    "command": "lemmas",
                    "n": format!("{n_lo}..{n_hi}"),
                    "precision_bits": precision,
                    "grid_points": grid,
                });
                let ns: Vec<u32> = (n_lo..=n_hi).collect();
                let entries: Vec<ResultEntry> = ns
                    .par_iter()
                    .flat_map(|&nn| {
                        run_lemma_checks(nn, precision, grid)
                            .iter()
                            .map(lemma_entry)
                            .collect::<Vec<_>>()
                    })
                    .collect();
                Ok((config, entries))
            }
            Command::Sharpness { claim, depth } => {
                let claims: Vec<SharpnessClaim> = match claim {
                    Some(c) => vec![SharpnessClaim::parse(c)
                        .ok_or_else(|| UsageError(format!("unknown sharpness claim: {c:?}")))?],
                    None => vec![
                        SharpnessClaim::Th1M,
                        SharpnessClaim::Th2NegQuarter,
                        SharpnessClaim::Th2Zero,
                        SharpnessClaim::Th3Zero,
                        SharpnessClaim::Th4Zero,
                        SharpnessClaim::Th5TwoNinths,
                        SharpnessClaim::CorTwo27ths,
                    ],
                };
                let config = json!({
                    "command": "sharpness",
                    "claims": claims.iter().map(|c| c.name()).collect::<Vec<_>>(),
                    "depth": depth,
                    "precision_bits": precision,
                });
                let entries: Vec<ResultEntry> = claims
                    .par_iter()
                    .map(|&c| sharpness_entry(&check_sharpness(c, *depth, precision)))
                    .collect();
                Ok((config, entries))
            }
            Command::Series {
                m,
                omega,
                order,
                samples,
            } => series_sweep(m, omega, *order, *samples, precision),
            Command::All => {
                let config = json!({
                    "command": "all",
                    "precision_bits": precision,
                    "grid_points": cli.grid_points,
                });
                let mut entries = Vec::new();
                let (_, e) = certify_sweep(
                    "P_DIFF",
                    "1",
                    "1..40",
                    &None,
                    &None,
                    &opts,
                )?;
                entries.extend(e);
                for fam in ["B12", "U14", "V15", "C16", "D17"] {
                    let (_, e) = certify_sweep(fam, "1..3", "1..10", &None, &None, &opts)?;
                    entries.extend(e);
                }
                for nn in [21u32, 22, 23, 24] {
                    entries.push(case_partition_entry(&theorem5_case_partition(
                        nn, precision, 64,
                    )));
                }
                for r in run_lemma_checks(24, precision, 64) {
                    entries.push(lemma_entry(&r));
                }
                for claim in [
                    SharpnessClaim::Th1M,
                    SharpnessClaim::Th2NegQuarter,
                    SharpnessClaim::Th2Zero,
                    SharpnessClaim::Th3Zero,
                    SharpnessClaim::Th4Zero,
                    SharpnessClaim::Th5TwoNinths,
                    SharpnessClaim::CorTwo27ths,
                ] {
                    entries.push(sharpness_entry(&check_sharpness(claim, 8, precision)));
                }
                let (_, e) = series_sweep("1..3", &Some("-1,0,1".into()), 128, 0, precision)?;
                entries.extend(e);
                Ok((config, entries))
            }
        }
    })?;

    let envelope = ReportEnvelope::new(config, entries, start.elapsed().as_millis());
    let exit = if envelope.all_pass() { 0 } else { 1 };
    Ok((envelope, exit))
}

/// Serialize and deliver the report; distinct exit code 2 on unwritable path.
pub fn emit(cli: &Cli, envelope: &ReportEnvelope) -> Result<(), UsageError> {
    let bytes = match cli.format {
        Format::Json => envelope.to_json_bytes(),
        Format::Csv => envelope.to_csv_bytes(),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, &bytes)
            .map_err(|e| UsageError(format!("unwritable output path {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| UsageError(format!("stdout: {e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("5", "n").unwrap(), (5, 5));
        assert_eq!(parse_range("1..100", "n").unwrap(), (1, 100));
        assert!(parse_range("7..3", "n").is_err());
        assert!(parse_range("x..3", "n").is_err());
    }

    #[test]
    fn angle_parsing() {
        assert_eq!(parse_angle("0").unwrap(), Angle::zero());
        assert_eq!(parse_angle("pi").unwrap(), Angle::pi());
        assert_eq!(parse_angle("2pi").unwrap(), Angle::two_pi());
        assert_eq!(parse_angle("2pi/3").unwrap(), Angle::two_pi_thirds());
        assert_eq!(parse_angle("pi/2").unwrap(), Angle::pi_times(rat(1, 2)));
        assert!(parse_angle("tau").is_err());
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_interval("pi..0").is_err());
    }

    #[test]
    fn default_bounds_follow_theorems() {
        assert_eq!(default_bound(&FamilyId::new(FamilyTag::B12, 4, 9)), rint(4));
        assert_eq!(default_bound(&FamilyId::new(FamilyTag::U14, 1, 9)), rat(-1, 4));
        assert_eq!(default_bound(&FamilyId::new(FamilyTag::U14, 2, 9)), rint(0));
        // T bound: m - C(n+m, m)/2 = 2 - C(5,2)/2 = 2 - 5 = -3
        assert_eq!(default_bound(&FamilyId::new(FamilyTag::T31, 2, 3)), rint(-3));
        assert_eq!(
            default_bound(&FamilyId::no_m(FamilyTag::PDiff, 7)),
            Rat::zero()
        );
    }

    #[test]
    fn run_certify_small_sweep() {
        let cli = Cli::try_parse_from([
            "trigineq", "certify", "--family", "P_DIFF", "--n", "1..6",
        ])
        .unwrap();
        let (envelope, exit) = run(&cli).unwrap();
        assert_eq!(exit, 0);
        assert_eq!(envelope.summary.total, 6);
        assert_eq!(envelope.summary.failed, 0);
        // n=6 is divisible by 3: closed-endpoint root at t = -1/2 recorded
        let n6 = &envelope.results[5];
        assert_eq!(n6["n"], 6);
        assert_eq!(n6["root_count_closed"], 1);
        assert_eq!(n6["endpoint_zeros"][0], "t=-1/2");
    }

    #[test]
    fn invalid_family_is_usage_error() {
        let cli = Cli::try_parse_from([
            "trigineq", "certify", "--family", "NOPE", "--n", "1..3",
        ])
        .unwrap();
        assert!(run(&cli).is_err());
        let cli = Cli::try_parse_from([
            "trigineq", "certify", "--family", "A11", "--m", "0", "--n", "3",
        ])
        .unwrap();
        let err = run(&cli).unwrap_err();
        assert!(err.0.contains("m must be >= 1"), "{}", err.0);
    }

    #[test]
    fn jobs_do_not_change_bytes() {
        let mk = |jobs: &str| {
            let cli = Cli::try_parse_from([
                "trigineq", "certify", "--family", "B12", "--m", "1..2", "--n", "1..6",
                "--jobs", jobs,
            ])
            .unwrap();
            run(&cli).unwrap().0.to_json_bytes()
        };
        assert_eq!(mk("1"), mk("4"));
    }
}
