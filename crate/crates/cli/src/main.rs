use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};

use tensorcc::bench::{bench_json, render_table, run_bench, BenchConfig};
use tensorcc::closed_forms::{srg_cc, srg_cc_exact, srg_detect, Mode, ProductCcReport};
use tensorcc::generators::Family;
use tensorcc::io::{read_edge_list_file, write_edge_list, GraphSource, Labels};
use tensorcc::product::Budget;
use tensorcc::report::{
    cc_json, product_cc_json, srg_json, verify_json, write_report, ReportOptions,
};
use tensorcc::triangles::{global_cc_exact, CcReport};
use tensorcc::verify::verify;

/// Clustering coefficients of graphs and of their tensor products.
#[derive(Debug, Parser)]
#[command(name = "tensorcc", version)]
struct Cli {
    /// Worker threads for parallel kernels (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Sources {
    /// Edge-list files.
    files: Vec<PathBuf>,

    /// Generator spec: complete:n, cycle:n, path:n, bipartite:a,b, petersen,
    /// paley:q, er:n,p[,seed]. Interchangeable with a file argument.
    #[arg(long = "gen", value_name = "SPEC")]
    gens: Vec<String>,

    /// Seed for `er:n,p` specs without an explicit seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Renumber sparse labels in header-less edge lists.
    #[arg(long)]
    compact: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Triangle counts and clustering coefficients of one graph.
    Cc {
        #[command(flatten)]
        sources: Sources,
        /// Add exact "num/den" values.
        #[arg(long)]
        exact: bool,
        /// Add per-vertex degrees, triangle counts and local coefficients.
        #[arg(long)]
        per_vertex: bool,
    },
    /// Global clustering coefficient of G x H, with bounds.
    ProductCc {
        #[command(flatten)]
        sources: Sources,
        #[arg(long, default_value = "implicit", value_parser = ["implicit", "explicit", "both"])]
        mode: String,
        #[arg(long)]
        exact: bool,
        /// Edge budget for the materialized product.
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_EDGES)]
        budget: u128,
    },
    /// Check every closed form for G x H against the materialized product.
    Verify {
        #[command(flatten)]
        sources: Sources,
        #[arg(long, default_value_t = Budget::DEFAULT_MAX_EDGES)]
        budget: u128,
        /// Print the JSON report instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// Strongly regular parameters of one graph.
    Srg {
        #[command(flatten)]
        sources: Sources,
        #[arg(long)]
        exact: bool,
    },
    /// Time implicit vs explicit product evaluation.
    Bench {
        /// Factor sizes.
        #[arg(long, value_delimiter = ',', default_values_t = [50usize, 100, 200, 400])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated graph as an edge list.
    Generate {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Resolves file and `--gen` arguments in command-line order.
fn resolve(sources: &Sources, matches: &ArgMatches) -> Result<Vec<GraphSource>> {
    let labels = if sources.compact {
        Labels::Compact
    } else {
        Labels::Dense
    };
    let indices = |id: &str| -> Vec<usize> {
        matches
            .indices_of(id)
            .map(|i| i.collect())
            .unwrap_or_default()
    };
    let mut ordered: Vec<(usize, Result<GraphSource>)> = Vec::new();
    for (idx, path) in indices("files").into_iter().zip(&sources.files) {
        let loaded = read_edge_list_file(path, labels)
            .with_context(|| format!("reading {}", path.display()))
            .and_then(|r| r.with_context(|| format!("parsing {}", path.display())));
        ordered.push((idx, loaded));
    }
    for (idx, spec) in indices("gens").into_iter().zip(&sources.gens) {
        let built = spec
            .parse::<Family>()
            .and_then(|f| GraphSource::generated(f, sources.seed))
            .with_context(|| format!("generating {spec}"));
        ordered.push((idx, built));
    }
    ordered.sort_by_key(|(i, _)| *i);
    ordered.into_iter().map(|(_, s)| s).collect()
}

fn one(sources: &Sources, matches: &ArgMatches) -> Result<GraphSource> {
    let mut all = resolve(sources, matches)?;
    if all.len() != 1 {
        bail!(
            "expected exactly one graph (file or --gen), got {}",
            all.len()
        );
    }
    Ok(all.remove(0))
}

fn two(sources: &Sources, matches: &ArgMatches) -> Result<(GraphSource, GraphSource)> {
    let mut all = resolve(sources, matches)?;
    if all.len() != 2 {
        bail!(
            "expected exactly two graphs (files or --gen), got {}",
            all.len()
        );
    }
    let h = all.pop().unwrap();
    Ok((all.pop().unwrap(), h))
}

fn run(cli: Cli, matches: &ArgMatches) -> Result<bool> {
    let sub = matches
        .subcommand()
        .map(|(_, m)| m)
        .ok_or_else(|| anyhow!("missing command"))?;
    match cli.command {
        Command::Cc {
            sources,
            exact,
            per_vertex,
        } => {
            let s = one(&sources, sub)?;
            let report = CcReport::compute(&s.graph)?;
            let x = if exact {
                Some(global_cc_exact(&s.graph)?)
            } else {
                None
            };
            let opts = ReportOptions { exact, per_vertex };
            println!("{}", write_report(&cc_json(&s, &report, x.as_ref(), opts)));
        }
        Command::ProductCc {
            sources,
            mode,
            exact,
            budget,
        } => {
            let (g, h) = two(&sources, sub)?;
            let mode: Mode = mode.parse()?;
            let r =
                ProductCcReport::compute(&g.graph, &h.graph, mode, Budget::edges(budget), exact)?;
            println!("{}", write_report(&product_cc_json(&g, &h, mode, &r)));
        }
        Command::Verify {
            sources,
            budget,
            json,
        } => {
            let (g, h) = two(&sources, sub)?;
            let outcome = verify(&g.graph, &h.graph, Budget::edges(budget))?;
            if json {
                println!("{}", write_report(&verify_json(&g, &h, &outcome)));
            } else {
                println!("{outcome}");
            }
            return Ok(outcome.passed());
        }
        Command::Srg { sources, exact } => {
            let s = one(&sources, sub)?;
            let params = srg_detect(&s.graph)?;
            let cc = match &params {
                Some(p) if p.d >= 2 => Some((srg_cc(p)?, srg_cc_exact(p)?)),
                _ => None,
            };
            println!(
                "{}",
                write_report(&srg_json(&s, params.as_ref(), cc, exact))
            );
        }
        Command::Bench {
            sizes,
            repetitions,
            seed,
            json,
        } => {
            let cfg = BenchConfig {
                sizes,
                repetitions,
                seed,
                ..Default::default()
            };
            let rows = run_bench(&cfg)?;
            if json {
                println!("{}", write_report(&bench_json(&cfg, &rows)));
            } else {
                print!("{}", render_table(&rows));
            }
        }
        Command::Generate { spec, seed } => {
            let family: Family = spec.parse()?;
            println!("{}", write_edge_list(&family.build(seed)?));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli, &matches) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
