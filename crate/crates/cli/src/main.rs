use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tfp_core::oracles::{in_neighbors_alive_after, repair_to_nice_counted};
use tfp_core::{
    decide, gen_planted_yes, gen_random, niceness, simulate, Algo, Decision, GenSpec, IndegConfig,
    Seeding, Tournament,
};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "tfp",
    version,
    about = "Decide and construct winning knockout brackets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print YES or NO for a tournament file.
    Decide(SolveArgs),
    /// Print a winning bracket and its round-by-round trace.
    Solve(SolveArgs),
    /// Write a random or planted tournament file.
    Gen(GenArgs),
    /// Replay a seeding and report the champion.
    VerifySeeding(SeedingArgs),
    /// Report niceness of a seeding and repair it when it wins.
    CheckStructure(SeedingArgs),
    /// Time a solver on generated instances.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Auto,
    Exact,
    Brute,
    Indeg,
    Outdeg,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Auto => Algo::Auto,
            AlgoArg::Exact => Algo::Exact,
            AlgoArg::Brute => Algo::Brute,
            AlgoArg::Indeg => Algo::Indeg,
            AlgoArg::Outdeg => Algo::Outdeg,
        }
    }
}

#[derive(Args)]
struct SolverOpts {
    #[arg(long, value_enum, default_value = "auto")]
    algo: AlgoArg,
    /// Seed for the color-coding iterations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Scales the color-coding iteration budget.
    #[arg(long, default_value_t = 1.0)]
    iter_multiplier: f64,
    /// Replaces the color-coding iteration budget outright.
    #[arg(long)]
    max_iterations: Option<u64>,
}

impl SolverOpts {
    fn config(&self) -> anyhow::Result<IndegConfig> {
        let cfg = IndegConfig {
            rng_seed: self.seed,
            iteration_multiplier: self.iter_multiplier,
            max_iterations_override: self.max_iterations,
        };
        cfg.check()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    #[command(flatten)]
    solver: SolverOpts,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    /// Number of players beating the favorite.
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Build the instance around a hidden winning bracket.
    #[arg(long)]
    planted: bool,
    /// Output file; planted instances also get `<file>.witness`.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SeedingArgs {
    file: PathBuf,
    /// Leaf order, space or comma separated.
    #[arg(long)]
    seeding: String,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Number of generated instances.
    #[arg(long, default_value_t = 10)]
    count: u64,
    /// Generate planted yes-instances instead of uniform ones.
    #[arg(long)]
    planted: bool,
    #[command(flatten)]
    solver: SolverOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_ERROR);
    }
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("TFP_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .with_context(|| format!("TFP_THREADS={raw:?} is not a thread count"))?;
    if threads == 0 {
        bail!("TFP_THREADS must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()?;
    Ok(())
}

fn read_tournament(path: &Path) -> anyhow::Result<Tournament> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Tournament::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cmd: Command) -> anyhow::Result<(String, u8)> {
    match cmd {
        Command::Decide(a) => {
            let t = read_tournament(&a.file)?;
            let d = decide(&t, a.solver.algo.into(), &a.solver.config()?)?;
            Ok((verdict(&d), exit_for(d.is_yes())))
        }
        Command::Solve(a) => {
            let t = read_tournament(&a.file)?;
            let d = decide(&t, a.solver.algo.into(), &a.solver.config()?)?;
            let mut out = verdict(&d);
            if let Some(s) = &d.seeding {
                let trace = simulate(&t, s);
                if trace.champion() != t.vstar() {
                    bail!("internal error: bracket {s} does not crown the favorite");
                }
                writeln!(out, "seeding: {s}")?;
                write!(out, "{trace}")?;
            }
            Ok((out, exit_for(d.is_yes())))
        }
        Command::Gen(a) => gen(a),
        Command::VerifySeeding(a) => {
            let t = read_tournament(&a.file)?;
            let s: Seeding = a.seeding.parse()?;
            check_len(&t, &s)?;
            let trace = simulate(&t, &s);
            let wins = trace.champion() == t.vstar();
            let mut out = trace.to_string();
            writeln!(out, "{}", if wins { "WINNING" } else { "LOSING" })?;
            Ok((out, exit_for(wins)))
        }
        Command::CheckStructure(a) => check_structure(a),
        Command::Bench(a) => bench(a),
    }
}

fn exit_for(yes: bool) -> u8 {
    if yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn verdict(d: &Decision) -> String {
    format!(
        "{}\nalgorithm: {} ({})\n",
        if d.is_yes() { "YES" } else { "NO" },
        d.algo,
        d.route
    )
}

fn check_len(t: &Tournament, s: &Seeding) -> anyhow::Result<()> {
    if s.len() != t.n() {
        bail!("seeding has {} players, tournament has {}", s.len(), t.n());
    }
    Ok(())
}

fn gen(a: GenArgs) -> anyhow::Result<(String, u8)> {
    let (t, witness) = if a.planted {
        let p = gen_planted_yes(&GenSpec::planted(a.n, a.k, a.seed))?;
        (p.tournament, Some(p.witness))
    } else {
        (gen_random(&GenSpec::random(a.n, a.k, a.seed))?, None)
    };
    let text = t.to_tfp_string();
    let Some(path) = a.output else {
        return Ok((text, EXIT_YES));
    };
    std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
    let mut out = format!("wrote {}\n", path.display());
    if let Some(w) = witness {
        let mut wpath = path.into_os_string();
        wpath.push(".witness");
        let wpath = PathBuf::from(wpath);
        std::fs::write(&wpath, format!("{w}\n"))
            .with_context(|| format!("writing {}", wpath.display()))?;
        writeln!(out, "wrote {}", wpath.display())?;
    }
    Ok((out, EXIT_YES))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn players(ps: &[usize]) -> String {
    if ps.is_empty() {
        return "none".into();
    }
    ps.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_structure(a: SeedingArgs) -> anyhow::Result<(String, u8)> {
    let t = read_tournament(&a.file)?;
    let s: Seeding = a.seeding.parse()?;
    check_len(&t, &s)?;
    let trace = simulate(&t, &s);
    let wins = trace.champion() == t.vstar();
    let mut out = String::new();
    writeln!(out, "champion: {}", trace.champion())?;
    writeln!(out, "winning: {}", yes_no(wins))?;
    report_niceness(&mut out, &t, &trace)?;
    if !wins {
        writeln!(out, "repair: skipped (seeding does not crown the favorite)")?;
        return Ok((out, EXIT_NO));
    }
    let (fixed, steps) = repair_to_nice_counted(&t, &s)?;
    let fixed_trace = simulate(&t, &fixed);
    writeln!(out, "repaired: {fixed}")?;
    writeln!(out, "repair steps: {steps}")?;
    report_niceness(&mut out, &t, &fixed_trace)?;
    writeln!(
        out,
        "repaired winning: {}",
        yes_no(fixed_trace.champion() == t.vstar())
    )?;
    Ok((out, EXIT_YES))
}

fn report_niceness(
    out: &mut String,
    t: &Tournament,
    trace: &tfp_core::KnockoutTrace,
) -> anyhow::Result<()> {
    let report = niceness(t, trace);
    for (i, nice) in report.per_round.iter().enumerate() {
        writeln!(
            out,
            "round {}: {}",
            i + 1,
            if *nice { "nice" } else { "not nice" }
        )?;
    }
    writeln!(out, "all nice: {}", yes_no(report.all_nice))?;
    let alive = in_neighbors_alive_after(t, trace, t.k());
    writeln!(
        out,
        "in-neighbors alive after round {}: {}",
        t.k(),
        players(&alive)
    )?;
    Ok(())
}

fn bench(a: BenchArgs) -> anyhow::Result<(String, u8)> {
    let cfg = a.solver.config()?;
    let algo: Algo = a.solver.algo.into();
    let mut out = String::new();
    let (mut yes, mut total_ms) = (0, 0.0);
    for i in 0..a.count {
        let seed = a.solver.seed.wrapping_add(i);
        let t = if a.planted {
            gen_planted_yes(&GenSpec::planted(a.n, a.k, seed))?.tournament
        } else {
            gen_random(&GenSpec::random(a.n, a.k, seed))?
        };
        let start = Instant::now();
        let d = decide(&t, algo, &cfg)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        total_ms += ms;
        yes += usize::from(d.is_yes());
        writeln!(
            out,
            "instance {i} seed {seed}: {} via {} in {ms:.2} ms",
            if d.is_yes() { "YES" } else { "NO" },
            d.route
        )?;
    }
    writeln!(
        out,
        "total: {} instances, {yes} yes, {total_ms:.2} ms",
        a.count
    )?;
    Ok((out, EXIT_YES))
}
