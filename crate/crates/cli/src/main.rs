//! `ramsey`: compute and decide Ramsey numbers of small trees, emit and
//! verify extremal-coloring certificates, print closed-form bound tables,
//! and audit saturation claims.
//!
//! Exit codes: 0 proven, 1 counterexample found, 2 inconclusive,
//! 3 and up for errors.

mod cache;

use anyhow::{anyhow, bail, Context, Result};
use cache::CachedClass;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use ramsey_core::bounds::{bistar_bounds, caterpillar_bounds};
use ramsey_core::certificate::{verify, Certificate, VerifyOutcome};
use ramsey_core::graph::Color;
use ramsey_core::pattern::PatternSpec;
use ramsey_core::saturation::{verify_bistar_unsaturated, verify_star_saturated, Verdict};
use ramsey_core::search::{
    compute_ramsey, decide_arrow, witness_at, RamseyComputation, SearchConfig, SearchOutcome,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

const EXIT_PROVEN: u8 = 0;
const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Exact Ramsey numbers of stars, bistars and caterpillars by exhaustive search",
    after_help = "Pattern grammar: `star n` | `bistar m n` | `caterpillar n1 n2 ...` | `path k` \
                  | `<base> +e <class>` with class one of ll, ll-same, ll-same-large, ll-diff, \
                  leaf-far-center, leaf-far-center-large."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Search node budget (one node per edge-color assignment)
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,

    /// Wall-clock budget in seconds
    #[arg(long, global = true)]
    budget_secs: Option<u64>,

    /// Worker threads for the search
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Disable all pruning rules (exhaustive leaves only)
    #[arg(long, global = true)]
    no_prune: bool,

    /// Disable color-swap symmetry breaking
    #[arg(long, global = true)]
    no_symmetry: bool,

    /// Append-only result cache; reused facts change latency, never output
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Write the resulting certificate to this file
    #[arg(long, global = true, value_name = "PATH")]
    cert_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print closed-form bounds on r(pattern) with source tags
    Bounds {
        /// Print the bistar bound table for 1 <= m <= M, m <= n <= N
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        table: Option<Vec<usize>>,
        /// Pattern expression, e.g. `bistar 3 5`
        #[arg(trailing_var_arg = true)]
        pattern: Vec<String>,
    },
    /// Compute r(pattern) exactly by exhaustive search
    Compute {
        #[arg(required = true, trailing_var_arg = true)]
        pattern: Vec<String>,
    },
    /// Decide whether every 2-coloring of K_N contains the pattern
    Decide {
        /// Pattern expression followed by the order N, e.g. `star 3 5`
        #[arg(required = true, trailing_var_arg = true)]
        args: Vec<String>,
    },
    /// Emit an extremal coloring avoiding the pattern, as a certificate
    Witness {
        /// Pattern expression, optionally followed by the order
        #[arg(required = true, trailing_var_arg = true)]
        args: Vec<String>,
    },
    /// Audit a saturation claim for a star or bistar
    Saturate {
        #[arg(required = true, trailing_var_arg = true)]
        pattern: Vec<String>,
    },
    /// Re-check a certificate file independently of the search engine
    Verify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PROVEN,
                _ => EXIT_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn search_config(cli: &Cli) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(n) = cli.budget_nodes {
        cfg.node_budget = n;
    }
    if let Some(s) = cli.budget_secs {
        cfg.wall_budget = Duration::from_secs(s);
    }
    if let Some(t) = cli.threads {
        cfg.worker_count = t.max(1);
    }
    if cli.no_prune {
        cfg.prune_containment = false;
        cfg.prune_degree = false;
        cfg.prune_maxdeg_lemma = false;
    }
    if cli.no_symmetry {
        cfg.symmetry_color_swap = false;
    }
    cfg
}

fn parse_pattern(tokens: &[String]) -> Result<PatternSpec> {
    let refs: Vec<&str> = tokens.iter().map(String::as_str).collect();
    PatternSpec::parse_tokens(&refs).map_err(|e| {
        anyhow!(
            "{e}; the grammar is `star n`, `bistar m n`, `caterpillar n1 n2 ...`, `path k`, \
             or `<base> +e <class>`"
        )
    })
}

fn write_certificate(path: &Path, cert: &Certificate) -> Result<()> {
    std::fs::write(path, cert.emit())
        .with_context(|| format!("writing certificate to {}", path.display()))?;
    eprintln!("certificate written to {}", path.display());
    Ok(())
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Bounds { table, pattern } => cmd_bounds(table.as_deref(), pattern),
        Cmd::Compute { pattern } => cmd_compute(cli, pattern),
        Cmd::Decide { args } => cmd_decide(cli, args),
        Cmd::Witness { args } => cmd_witness(cli, args),
        Cmd::Saturate { pattern } => cmd_saturate(cli, pattern),
        Cmd::Verify { file } => cmd_verify(file),
    }
}

fn cmd_bounds(table: Option<&[usize]>, pattern: &[String]) -> Result<u8> {
    if let Some(&[m_max, n_max]) = table {
        if m_max == 0 || n_max < m_max {
            bail!("--table expects 1 <= M <= N");
        }
        for m in 1..=m_max {
            for n in m..=n_max {
                println!("B({m},{n}): {}", bistar_bounds(m, n));
            }
        }
        return Ok(EXIT_PROVEN);
    }
    if pattern.is_empty() {
        bail!("expected a pattern expression or --table M N");
    }
    let p = parse_pattern(pattern)?;
    let interval = caterpillar_bounds(&p)
        .map_err(|e| anyhow!("{e}; augmented patterns have no closed-form bounds"))?;
    println!("{interval}");
    Ok(EXIT_PROVEN)
}

fn cmd_compute(cli: &Cli, pattern: &[String]) -> Result<u8> {
    let p = parse_pattern(pattern)?;
    let key = p.to_string();

    // a cache hit can only skip work when no certificate file is wanted
    if cli.cert_out.is_none() {
        if let Some(path) = &cli.cache {
            if let Some(r) = lookup_exact(path, &key) {
                eprintln!("cache: r({key}) = {r} already proven");
                println!("r = {r}");
                return Ok(EXIT_PROVEN);
            }
        }
    }

    let cfg = search_config(cli);
    match compute_ramsey(&p, &cfg) {
        RamseyComputation::Exact {
            value,
            lower_certificate,
            nodes_explored,
        } => {
            println!("r = {value}");
            eprintln!(
                "proof: K_{} admits an avoiding coloring, every coloring of K_{value} contains \
                 a monochromatic copy ({nodes_explored} nodes)",
                value - 1
            );
            if let Some(path) = &cli.cache {
                cache::append(path, &key, value, CachedClass::Exact, nodes_explored);
                cache::append(path, &key, value, CachedClass::Arrow, nodes_explored);
                cache::append(path, &key, value - 1, CachedClass::NoArrow, nodes_explored);
            }
            if let Some(path) = &cli.cert_out {
                write_certificate(path, &Certificate::no_mono(p, lower_certificate))?;
            }
            Ok(EXIT_PROVEN)
        }
        RamseyComputation::BoundedOnly {
            interval,
            nodes_explored,
        } => {
            println!("INCONCLUSIVE: {interval} ({nodes_explored} nodes)");
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn lookup_exact(path: &Path, key: &str) -> Option<usize> {
    // exact records are keyed by the value they prove; scan small orders
    (2..=64).find(|&r| cache::lookup(path, key, r, CachedClass::Exact))
}

fn cmd_decide(cli: &Cli, args: &[String]) -> Result<u8> {
    if args.len() < 2 {
        bail!("expected a pattern expression followed by the order N");
    }
    let (pattern_tokens, order_token) = args.split_at(args.len() - 1);
    let order: usize = order_token[0]
        .parse()
        .map_err(|_| anyhow!("bad order `{}`", order_token[0]))?;
    if !(2..=64).contains(&order) {
        bail!("order must be between 2 and 64");
    }
    let p = parse_pattern(pattern_tokens)?;
    let key = p.to_string();

    if let Some(path) = &cli.cache {
        if cache::lookup(path, &key, order, CachedClass::Arrow) {
            eprintln!("cache: arrow fact already proven");
            println!("PROVEN: every 2-coloring of K_{order} contains a monochromatic `{key}`");
            return Ok(EXIT_PROVEN);
        }
    }

    let cfg = search_config(cli);
    match decide_arrow(&p, order, &cfg) {
        SearchOutcome::AllColoringsContain { nodes_explored } => {
            println!("PROVEN: every 2-coloring of K_{order} contains a monochromatic `{key}`");
            eprintln!("{nodes_explored} nodes explored");
            if let Some(path) = &cli.cache {
                cache::append(path, &key, order, CachedClass::Arrow, nodes_explored);
            }
            Ok(EXIT_PROVEN)
        }
        SearchOutcome::Counterexample {
            coloring,
            nodes_explored,
        } => {
            println!("COUNTEREXAMPLE: K_{order} admits a coloring with no monochromatic `{key}`");
            println!(
                "blue {}",
                coloring
                    .edges_of(Color::Blue)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("(all other edges red)");
            if let Some(path) = &cli.cache {
                cache::append(path, &key, order, CachedClass::NoArrow, nodes_explored);
            }
            if let Some(path) = &cli.cert_out {
                write_certificate(path, &Certificate::no_mono(p, coloring))?;
            }
            Ok(EXIT_COUNTEREXAMPLE)
        }
        SearchOutcome::BudgetExhausted { nodes_explored } => {
            println!("INCONCLUSIVE: budget exhausted after {nodes_explored} nodes");
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn cmd_witness(cli: &Cli, args: &[String]) -> Result<u8> {
    // either the whole argument list is a pattern, or the last token is
    // an explicit order
    let (p, order) = match parse_pattern(args) {
        Ok(p) => {
            let interval = caterpillar_bounds(&p).map_err(|_| {
                anyhow!("augmented patterns need an explicit order: `witness <pattern> <N>`")
            })?;
            (p, interval.lo - 1)
        }
        Err(first_err) => {
            if args.len() < 2 {
                return Err(first_err);
            }
            let (pattern_tokens, order_token) = args.split_at(args.len() - 1);
            let order: usize = order_token[0].parse().map_err(|_| first_err)?;
            (parse_pattern(pattern_tokens)?, order)
        }
    };
    if order == 0 || order > 64 {
        bail!("witness order must be between 1 and 64");
    }
    let Some(coloring) = witness_at(&p, order) else {
        println!("INCONCLUSIVE: no known construction avoids `{p}` on K_{order}");
        return Ok(EXIT_INCONCLUSIVE);
    };
    let cert = Certificate::no_mono(p, coloring);
    match &cli.cert_out {
        Some(path) => write_certificate(path, &cert)?,
        None => print!("{}", cert.emit()),
    }
    Ok(EXIT_PROVEN)
}

fn cmd_saturate(cli: &Cli, pattern: &[String]) -> Result<u8> {
    let p = parse_pattern(pattern)?;
    let verdict = match &p {
        PatternSpec::Star(n) => {
            if *n < 2 {
                bail!("saturation is audited for stars with n >= 2");
            }
            let report = verify_star_saturated(*n)?;
            println!("{report}");
            report.verdict
        }
        PatternSpec::Bistar(m, n) => {
            let cfg = search_config(cli);
            let report = verify_bistar_unsaturated(*m, *n, &cfg)?;
            println!("{report}");
            report.verdict
        }
        other => bail!("saturation audits cover stars and bistars, not `{other}`"),
    };
    Ok(match verdict {
        Verdict::Confirms => EXIT_PROVEN,
        Verdict::Contradicts => EXIT_COUNTEREXAMPLE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn cmd_verify(file: &Path) -> Result<u8> {
    let text =
        std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let cert = Certificate::parse(&text).map_err(|e| anyhow!("{e}"))?;
    match verify(&cert) {
        VerifyOutcome::Valid => {
            println!("valid");
            Ok(EXIT_PROVEN)
        }
        VerifyOutcome::Invalid(reason) => {
            println!("invalid: {reason}");
            Ok(EXIT_COUNTEREXAMPLE)
        }
        VerifyOutcome::MachineAssisted => {
            println!("machine-assisted: arrow claims are not independently re-verifiable");
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}
