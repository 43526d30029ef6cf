use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use negacode::bounds::BoundReport;
use negacode::codes::build_code;
use negacode::cosets::odd_leaders_desc;
use negacode::distance::{
    min_distance, DistanceOptions, Strategy, DEFAULT_BZ_BUDGET, DEFAULT_EXHAUSTIVE_BUDGET,
    DEFAULT_SUPPORT_BUDGET,
};
use negacode::report::CodeReport;
use negacode::verify::{self, VerificationReport, VerifyOptions};

/// Negacyclic BCH codes: construction, bounds, exact distances and claim
/// verification.
#[derive(Parser, Debug)]
#[command(name = "negacode", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomised information sets.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Work budget of the support search and Brouwer-Zimmermann engines.
    #[arg(long, global = true, env = "NEGACODE_BUDGET")]
    budget: Option<u64>,
    /// Record runtimes in verification output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    delta: u64,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    b: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build C_(q,n,delta,b) and report its generator, dimension and bounds.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Minimum distance of C_(q,n,delta,b).
    Distance {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Largest q^k enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
        exhaustive_budget: u64,
        /// Supports scanned by the support search (overrides --budget).
        #[arg(long)]
        support_budget: Option<u64>,
    },
    /// Upper bounds on the distance of an [n, k] code, or a check of [n, k, d].
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Largest odd q-cyclotomic coset leaders modulo N.
    CosetLeaders {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value_t = 3)]
        top: usize,
    },
    /// Check registered claims over their parameter grids.
    Verify {
        /// Claim id; repeatable.
        #[arg(long, required_unless_present_any = ["all", "list"])]
        claim: Vec<String>,
        #[arg(long, conflicts_with = "claim")]
        all: bool,
        /// Larger grids.
        #[arg(long)]
        extended: bool,
        /// Print the registered claim ids.
        #[arg(long, conflicts_with_all = ["claim", "all"])]
        list: bool,
    },
    /// Rebuild the worked example codes and compare [n, k, d].
    Examples,
}

/// Error to report with exit status 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e.0);
            ExitCode::from(2)
        }
    }
}

fn distance_options(g: &Global) -> DistanceOptions {
    DistanceOptions {
        support_budget: g.budget.unwrap_or(DEFAULT_SUPPORT_BUDGET),
        bz_budget: g.budget.unwrap_or(DEFAULT_BZ_BUDGET),
        seed: g.seed,
        ..DistanceOptions::default()
    }
}

/// `Ok(false)` when a verification failed.
fn run(cli: &Cli) -> Result<bool, InputError> {
    let g = &cli.global;
    let input = |e: anyhow::Error| InputError(e);
    match &cli.command {
        Command::Construct { code } => {
            let c = build_code(code.q, code.n, code.delta, code.b)
                .context("construct")
                .map_err(input)?;
            let report = CodeReport::new(&c, None).context("bounds").map_err(input)?;
            emit(g, &report, |w| code_row(w, &report))?;
        }
        Command::Distance {
            code,
            strategy,
            exhaustive_budget,
            support_budget,
        } => {
            let c = build_code(code.q, code.n, code.delta, code.b)
                .context("construct")
                .map_err(input)?;
            let mut opts = distance_options(g);
            opts.strategy = *strategy;
            opts.exhaustive_budget = *exhaustive_budget;
            if let Some(s) = support_budget {
                opts.support_budget = *s;
            }
            let d = min_distance(&c, &opts).context("distance").map_err(input)?;
            let report = CodeReport::new(&c, Some(&d))
                .context("bounds")
                .map_err(input)?;
            emit(g, &report, |w| code_row(w, &report))?;
        }
        Command::Bounds { q, n, k, d } => {
            let report = BoundReport::for_parameters(*q, *n, *k, *d)
                .context("bounds")
                .map_err(input)?;
            emit(g, &report, |w| {
                w.write_record([
                    "q",
                    "n",
                    "k",
                    "singleton",
                    "sphere_packing",
                    "rouayheb",
                    "upper",
                ])?;
                w.write_record([
                    q.to_string(),
                    n.to_string(),
                    k.to_string(),
                    opt(report.singleton),
                    opt(report.sphere_packing),
                    opt(report.rouayheb),
                    opt(report.upper.map(|b| b.value)),
                ])
            })?;
        }
        Command::CosetLeaders { q, modulus, top } => {
            let leaders = odd_leaders_desc(*q, *modulus, *top)
                .context("coset leaders")
                .map_err(input)?;
            let out = LeaderList {
                q: *q,
                modulus: *modulus,
                leaders: leaders
                    .iter()
                    .map(|&(leader, size)| Leader { leader, size })
                    .collect(),
            };
            emit(g, &out, |w| {
                w.write_record(["leader", "size"])?;
                out.leaders
                    .iter()
                    .try_for_each(|l| w.write_record([l.leader.to_string(), l.size.to_string()]))
            })?;
        }
        Command::Verify {
            claim,
            all,
            extended,
            list,
        } => {
            if *list {
                let ids = verify::claim_ids();
                emit(g, &ids, |w| {
                    w.write_record(["claim"])?;
                    ids.iter().try_for_each(|id| w.write_record([id]))
                })?;
                return Ok(true);
            }
            let opts = VerifyOptions {
                extended: *extended,
                distance: distance_options(g),
                timing: g.timing,
            };
            let reports = if *all {
                verify::verify_all(&opts)
            } else {
                claim
                    .iter()
                    .map(|id| verify::verify(id, &opts))
                    .collect::<Result<_, _>>()
                    .map_err(|e| input(e.into()))?
            };
            for r in &reports {
                eprintln!(
                    "{}: {} passed, {} failed, {} skipped",
                    r.claim, r.passed, r.failed, r.skipped
                );
            }
            let ok = reports.iter().all(VerificationReport::ok);
            emit(g, &reports, |w| report_rows(w, &reports))?;
            return Ok(ok);
        }
        Command::Examples => {
            let opts = VerifyOptions {
                extended: false,
                distance: distance_options(g),
                timing: g.timing,
            };
            let report = verify::reproduce_examples(&opts);
            eprintln!(
                "examples: {} passed, {} failed, {} skipped",
                report.passed, report.failed, report.skipped
            );
            let reports = [report];
            emit(g, &reports[0], |w| report_rows(w, &reports))?;
            return Ok(reports[0].ok());
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct Leader {
    leader: u64,
    size: usize,
}

#[derive(Serialize)]
struct LeaderList {
    q: u64,
    modulus: u64,
    leaders: Vec<Leader>,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Write `value` as pretty JSON, or as CSV through `rows`.
fn emit<T, F>(g: &Global, value: &T, rows: F) -> Result<(), InputError>
where
    T: Serialize,
    F: FnOnce(&mut csv::Writer<io::StdoutLock<'static>>) -> csv::Result<()>,
{
    let io_err = |e: anyhow::Error| InputError(e.context("writing output"));
    if g.csv {
        let mut w = csv::Writer::from_writer(io::stdout().lock());
        rows(&mut w).map_err(|e| io_err(e.into()))?;
        w.flush().map_err(|e| io_err(e.into()))?;
    } else {
        let mut out = io::stdout().lock();
        serde_json::to_writer_pretty(&mut out, value).map_err(|e| io_err(e.into()))?;
        writeln!(out).map_err(|e| io_err(e.into()))?;
    }
    Ok(())
}

fn code_row<W: Write>(w: &mut csv::Writer<W>, r: &CodeReport) -> csv::Result<()> {
    w.write_record([
        "q",
        "n",
        "delta",
        "b",
        "m",
        "length_kind",
        "dimension",
        "lcd",
        "bch",
        "pang",
        "sphere_packing",
        "d_lower",
        "d_upper",
        "exact",
        "method",
    ])?;
    let d = r.distance.as_ref();
    w.write_record([
        r.q.to_string(),
        r.n.to_string(),
        opt(r.delta),
        opt(r.b),
        opt(r.m),
        opt(r.length_kind),
        r.dimension.to_string(),
        r.lcd.to_string(),
        opt(r.bounds.bch),
        opt(r.bounds.pang),
        opt(r.bounds.sphere_packing),
        opt(d.map(|d| d.lower.value)),
        opt(d.map(|d| d.upper.value)),
        opt(d.map(|d| d.exact)),
        opt(d.map(|d| d.method)),
    ])
}

fn report_rows<W: Write>(
    w: &mut csv::Writer<W>,
    reports: &[VerificationReport],
) -> csv::Result<()> {
    w.write_record([
        "claim",
        "q",
        "m",
        "n",
        "delta",
        "kind",
        "expected",
        "observed",
        "status",
        "note",
        "runtime_ms",
    ])?;
    for r in reports {
        for i in &r.instances {
            w.write_record([
                r.claim.clone(),
                i.q.to_string(),
                opt(i.m),
                opt(i.n),
                opt(i.delta),
                opt(i.kind),
                i.expected.clone(),
                i.observed.clone(),
                i.status.to_string(),
                i.note.clone().unwrap_or_default(),
                opt(i.runtime_ms),
            ])?;
        }
    }
    Ok(())
}
