use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::json;

use asymqec::bounds::{self, BoundKind};
use asymqec::designer::{self, SearchConfig};
use asymqec::perf::{self, ChannelParams};
use asymqec::stabilizer::{parse_code, serialize_code};
use asymqec::verifier::{self, ExtensionPolicy};
use asymqec::{catalog, rng, Error, ErrorProfile, Result, StabilizerCode};

#[derive(Parser)]
#[command(
    name = "asymqec",
    version,
    about = "Short stabilizer codes for asymmetric Pauli channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum code lengths from the quantum Hamming bounds.
    Bound(BoundArgs),
    /// Randomized code construction by syndrome assignment.
    Search(SearchArgs),
    /// Certify that a code corrects every pattern of a profile.
    Verify(VerifyArgs),
    /// Analytic codeword error probability as CSV.
    Cwep(CwepArgs),
    /// Monte Carlo estimate of the codeword error probability.
    Simulate(SimulateArgs),
    /// Two-error extension of the single-error lookup table.
    AnalyzeExtended(AnalyzeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct BoundArgs {
    /// Print a fixed grid: 1 (lengths for k = 1..3, t = 1..4) or 5 (construction bound, t~ = 1..6).
    #[arg(long, value_parser = ["1", "5"], conflicts_with_all = ["k", "t", "eg", "ez"])]
    paper_table: Option<String>,
    #[arg(long, required_unless_present = "paper_table")]
    k: Option<usize>,
    /// Generic errors for the symmetric bound.
    #[arg(long, conflicts_with_all = ["eg", "ez"])]
    t: Option<usize>,
    #[arg(long, requires = "ez")]
    eg: Option<usize>,
    #[arg(long, requires = "eg")]
    ez: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CodeSource {
    /// Code in `.stab` format.
    #[arg(long, group = "source")]
    code: Option<PathBuf>,
    /// Built-in code: asym_9_1, asym_13_1, five_qubit, shor_9.
    #[arg(long, group = "source")]
    builtin: Option<String>,
}

impl CodeSource {
    fn load(&self) -> Result<StabilizerCode> {
        match (&self.code, &self.builtin) {
            (Some(path), _) => parse_code(&fs::read_to_string(path)?),
            (None, Some(name)) => {
                catalog::by_name(name).ok_or_else(|| Error::Config(format!("unknown built-in code {name:?}")))
            }
            (None, None) => Err(Error::Config("one of --code or --builtin is required".into())),
        }
    }
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    eg: usize,
    #[arg(long)]
    ez: usize,
    #[arg(long, env = "ASYMQEC_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    max_restarts: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the code here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: CodeSource,
    #[arg(long)]
    eg: usize,
    #[arg(long)]
    ez: usize,
    /// Also report the two-error extension of the single-error table.
    #[arg(long)]
    extended: bool,
    /// Write colliding pattern pairs as JSON lines to this file.
    #[arg(long)]
    dump_collisions: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    Sym,
    Asym,
    Css15,
    PatternSet,
}

#[derive(Args)]
struct CwepArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    eg: Option<usize>,
    #[arg(long)]
    ez: Option<usize>,
    /// Asymmetry pz/px.
    #[arg(long = "A", default_value_t = 1.0)]
    asymmetry: f64,
    /// Single noise level; may be repeated.
    #[arg(long, conflicts_with = "rho_grid")]
    rho: Vec<f64>,
    /// Log-spaced grid `start:stop:count`.
    #[arg(long)]
    rho_grid: Option<String>,
    /// Pattern-set formula: code whose table defines the set.
    #[command(flatten)]
    source: CodeSource,
    /// Pattern-set formula: use the two-error extended table.
    #[arg(long)]
    extended: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    source: CodeSource,
    #[arg(long, default_value_t = 1)]
    eg: usize,
    #[arg(long, default_value_t = 0)]
    ez: usize,
    /// Decode with the two-error extended table.
    #[arg(long)]
    extended: bool,
    #[arg(long)]
    rho: f64,
    #[arg(long = "A", default_value_t = 1.0)]
    asymmetry: f64,
    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,
    #[arg(long, env = "ASYMQEC_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: CodeSource,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn main() -> ExitCode {
    let version: &'static str = format!("{} (rng {})", env!("CARGO_PKG_VERSION"), rng::RNG_ALGORITHM).leak();
    let matches = Cli::command().version(version).get_matches();
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    let result = match cli.command {
        Command::Bound(a) => bound(a),
        Command::Search(a) => search(a),
        Command::Verify(a) => verify(a),
        Command::Cwep(a) => cwep(a),
        Command::Simulate(a) => simulate(a),
        Command::AnalyzeExtended(a) => analyze_extended(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Io(_) => 3,
                Error::Config(_) => 2,
                _ => 1,
            })
        }
    }
}

fn bound(a: BoundArgs) -> Result<ExitCode> {
    match a.paper_table.as_deref() {
        Some("1") => {
            let cells = bounds::length_grid(&[1, 2, 3], &[1, 2, 3, 4])?;
            print!(
                "{}",
                match a.format {
                    Format::Text => bounds::render_length_grid(&cells),
                    Format::Csv => bounds::render_length_grid_csv(&cells),
                    Format::Json => json_line(&cells),
                }
            );
        }
        Some(_) => {
            let cells = bounds::construction_grid(&[1, 2, 3, 4, 5, 6])?;
            print!(
                "{}",
                match a.format {
                    Format::Text => bounds::render_construction_grid(&cells),
                    Format::Csv => bounds::render_construction_grid_csv(&cells),
                    Format::Json => json_line(&cells),
                }
            );
        }
        None => {
            let k = a.k.expect("clap requires --k");
            let (profile, kind) = match (a.t, a.eg, a.ez) {
                (Some(t), _, _) => (ErrorProfile::symmetric(t), BoundKind::Qhb),
                (None, Some(eg), Some(ez)) => (ErrorProfile::new(eg, ez), BoundKind::Gqhb),
                _ => return Err(Error::Config("give --t or both --eg and --ez".into())),
            };
            let n = bounds::min_n(k, profile, kind)?;
            match a.format {
                Format::Text => println!("n_min={n}"),
                Format::Csv => println!("k,eg,ez,bound,n_min\n{k},{},{},{kind:?},{n}", profile.eg, profile.ez),
                Format::Json => print!(
                    "{}",
                    json_line(&json!({"k": k, "profile": profile, "bound": kind, "n_min": n}))
                ),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn search(a: SearchArgs) -> Result<ExitCode> {
    let mut config = SearchConfig::new(a.n, ErrorProfile::new(a.eg, a.ez), a.seed);
    config.max_restarts = a.max_restarts;
    config.jobs = a.jobs;
    let outcome = match designer::search(config) {
        Ok(o) => o,
        Err(Error::SearchFailed(stats)) => {
            eprintln!(
                "no code found; restarts={} elapsed_ms={}",
                stats.restarts, stats.elapsed_ms
            );
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e),
    };
    let text = serialize_code(&outcome.code);
    match &a.output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    eprintln!(
        "restarts={} elapsed_ms={}",
        outcome.stats.restarts, outcome.stats.elapsed_ms
    );
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let code = a.source.load()?;
    let profile = ErrorProfile::new(a.eg, a.ez);
    let validation = code.validate();
    let report = verifier::verify_capability(&code, profile);

    if let Some(path) = &a.dump_collisions {
        let mut out = std::io::BufWriter::new(fs::File::create(path)?);
        for (first, second) in verifier::collisions(&code, profile) {
            let s = code.syndrome(&first)?;
            writeln!(
                out,
                "{}",
                json!({"first": first.to_string(), "second": second.to_string(), "syndrome": s.to_string()})
            )?;
        }
        out.flush()?;
    }
    let extended = if a.extended {
        Some(verifier::analyze_extended(&code)?)
    } else {
        None
    };
    let certified = validation.is_valid() && report.distinct;

    match a.format {
        Format::Json => {
            let classes = extended.as_ref().map(|x| &x.classes);
            print!(
                "{}",
                json_line(&json!({
                    "code": code.label(),
                    "profile": profile,
                    "non_commuting": validation.non_commuting,
                    "rank": validation.rank,
                    "expected_rank": validation.expected_rank,
                    "pattern_count": report.pattern_count,
                    "distinct": report.distinct,
                    "first_collision": report.first_collision.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
                    "extended": classes,
                    "certified": certified,
                }))
            );
        }
        _ => {
            println!("{} {profile}", code.label());
            for (i, j) in &validation.non_commuting {
                println!("generators {} and {} anticommute", i + 1, j + 1);
            }
            if validation.rank_deficiency() > 0 {
                println!("generator rank {} < {}", validation.rank, validation.expected_rank);
            }
            match &report.first_collision {
                None => println!("{} patterns, all syndromes distinct", report.pattern_count),
                Some((p, q)) => println!("{} patterns, syndrome collision: {p} and {q}", report.pattern_count),
            }
            if let Some(x) = &extended {
                print_classes(x);
            }
        }
    }
    Ok(if certified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cwep(a: CwepArgs) -> Result<ExitCode> {
    let rhos = match &a.rho_grid {
        Some(spec) => perf::parse_log_grid(spec)?,
        None if !a.rho.is_empty() => a.rho.clone(),
        None => return Err(Error::Config("give --rho or --rho-grid".into())),
    };
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::Config(format!("--formula needs --{flag}")));
    let channel = |rho: f64| ChannelParams::from_rho_asymmetry(rho, a.asymmetry);

    let mut eval: Box<dyn FnMut(f64) -> Result<f64>> = match a.formula {
        Formula::Sym => {
            let (n, t) = (need(a.n, "n")?, need(a.t, "t")?);
            Box::new(move |rho| {
                channel(rho)?;
                Ok(perf::cwep_symmetric(n, t, rho))
            })
        }
        Formula::Asym => {
            let n = need(a.n, "n")?;
            let profile = ErrorProfile::new(need(a.eg, "eg")?, need(a.ez, "ez")?);
            if profile.t_tilde() > n {
                return Err(Error::Config(format!("profile {profile} exceeds n = {n}")));
            }
            Box::new(move |rho| Ok(perf::cwep_asymmetric(n, profile, &channel(rho)?)))
        }
        Formula::Css15 => Box::new(move |rho| Ok(perf::cwep_css_15(&channel(rho)?))),
        Formula::PatternSet => {
            let code = a.source.load()?;
            let set = if a.extended {
                verifier::analyze_extended(&code)?.pattern_set()
            } else {
                let profile = ErrorProfile::new(need(a.eg, "eg")?, need(a.ez, "ez")?);
                verifier::build_decode_table(&code, profile, ExtensionPolicy::None)?;
                bounds::enumerate_correctable(code.n(), profile).collect()
            };
            let n = code.n();
            Box::new(move |rho| perf::cwep_from_pattern_set(n, &set, &channel(rho)?))
        }
    };

    let mut out = String::from("rho,pe\n");
    for rho in rhos {
        out.push_str(&format!("{rho},{}\n", perf::format_probability(eval(rho)?)));
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn simulate(a: SimulateArgs) -> Result<ExitCode> {
    let code = a.source.load()?;
    let policy = if a.extended {
        ExtensionPolicy::TwoError
    } else {
        ExtensionPolicy::None
    };
    let table = verifier::build_decode_table(&code, ErrorProfile::new(a.eg, a.ez), policy)?;
    let channel = ChannelParams::from_rho_asymmetry(a.rho, a.asymmetry)?;
    let r = perf::simulate_with_jobs(&code, &table, &channel, a.trials, a.seed, a.jobs)?;
    println!("rho,pe_hat,ci_lo,ci_hi,trials,seed");
    println!(
        "{},{},{},{},{},{}",
        a.rho,
        perf::format_probability(r.pe_hat),
        perf::format_probability(r.ci_lo),
        perf::format_probability(r.ci_hi),
        r.trials,
        r.seed
    );
    Ok(ExitCode::SUCCESS)
}

fn analyze_extended(a: AnalyzeArgs) -> Result<ExitCode> {
    let code = a.source.load()?;
    let x = verifier::analyze_extended(&code)?;
    match a.format {
        Format::Json => print!(
            "{}",
            json_line(&json!({
                "code": code.label(),
                "classes": x.classes,
                "correctable_patterns": x.pattern_set().len(),
            }))
        ),
        _ => {
            println!("{}", code.label());
            print_classes(&x);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_classes(x: &verifier::ExtendedAnalysis) {
    for c in &x.classes {
        println!("{}: {}/{} (exact {})", c.class.label(), c.correctable, c.total, c.raw);
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}
