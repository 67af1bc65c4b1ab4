//! `cliqueline`: build graphs, compute homology, run collapses and verification suites.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use cliqueline::collapse::{greedy_collapse, wheelfree_collapse};
use cliqueline::complex::line_clique_complex;
use cliqueline::graph::{parse_edge_list, write_edge_list};
use cliqueline::homology::reduced_homology;
use cliqueline::verify::{load_config, parse_graph_name, run_suite, SuiteConfig};
use cliqueline::{Complex, Error};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "cliqueline",
    version,
    about = "Clique complexes of line graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph as an edge list, e.g. `complete:5`, `multipartite:3,3,2`, `circulant:8:1,2`.
    Build {
        name: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Reduced integer homology of a complex (`.json`) or of the clique
    /// complex of the line graph of an edge list.
    Homology { input: PathBuf },
    /// Collapse the clique complex of the line graph of an edge list and print the trace.
    Collapse {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Wheelfree)]
        strategy: Strategy,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and write a JSON report array.
    Verify {
        /// TOML or JSON suite; the built-in default suite when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Run only this check.
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Part sizes for the multipartite check, replacing its sweeps.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        /// `family:N` runs N random instances of that family only.
        #[arg(long)]
        fuzz: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Wheelfree,
    Greedy,
}

fn write_output(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<cliqueline::Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_complex(path: &Path) -> anyhow::Result<Complex> {
    if path.extension().is_some_and(|e| e == "json") {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Complex::from_json(&text).with_context(|| format!("parsing {}", path.display()));
    }
    Ok(line_clique_complex(&read_graph(path)?))
}

fn verify_config(
    config: Option<PathBuf>,
    check: Option<String>,
    seed: Option<u64>,
    parts: Option<Vec<usize>>,
    fuzz: Vec<String>,
) -> Result<SuiteConfig, Error> {
    let mut suite = match config {
        Some(path) => load_config(&path)?,
        None => SuiteConfig::default(),
    };
    if let Some(seed) = seed {
        suite.seed = seed;
    }
    if let Some(parts) = parts {
        let entry = suite.entry_mut("multipartite")?;
        entry.parts = vec![parts];
        entry.sweeps.clear();
    }
    let mut families = Vec::new();
    for spec in &fuzz {
        let (family, count) = spec
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("--fuzz expects family:N, got {spec:?}")))?;
        let count: usize = count
            .parse()
            .map_err(|e| Error::Config(format!("--fuzz count {count:?}: {e}")))?;
        let entry = suite.entry_mut(family)?;
        entry.fuzz = count;
        entry.graphs.clear();
        entry.k_trees = 0;
        entry.subcubic = 0;
        families.push(family.to_string());
    }
    if let Some(name) = &check {
        families.push(name.clone());
    }
    if !families.is_empty() {
        let names: Vec<&str> = families.iter().map(String::as_str).collect();
        suite.restrict_to(&names)?;
    }
    for entry in &mut suite.checks {
        entry.enabled = entry.enabled || check.as_deref() == Some(&entry.name);
    }
    Ok(suite)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Build { name, out } => {
            let g = parse_graph_name(&name)?;
            write_output(out.as_deref(), &write_edge_list(&g))?;
        }
        Command::Homology { input } => {
            let k = read_complex(&input)?;
            let profile = reduced_homology(&k);
            let summary = json!({
                "vertices": k.vertex_count(),
                "facets": k.facets().len(),
                "dimension": k.dim(),
                "euler_characteristic": k.euler_characteristic(),
                "homology": profile,
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
        }
        Command::Collapse {
            input,
            strategy,
            out,
        } => {
            let g = read_graph(&input)?;
            let trace = match strategy {
                Strategy::Wheelfree => wheelfree_collapse(&g)?,
                Strategy::Greedy => greedy_collapse(&line_clique_complex(&g), None),
            };
            trace.validate()?;
            eprintln!(
                "{} steps, end dimension {}, end homology {:?}",
                trace.len(),
                trace.end.dim(),
                reduced_homology(&trace.end).betti_numbers()
            );
            write_output(out.as_deref(), &(trace.to_json() + "\n"))?;
        }
        Command::Verify {
            config,
            check,
            seed,
            out,
            parts,
            fuzz,
        } => {
            let suite = match verify_config(config, check, seed, parts, fuzz) {
                Ok(suite) => suite,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let reports = match run_suite(&suite) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let failed = reports.iter().filter(|r| !r.pass).count();
            for r in reports.iter().filter(|r| !r.pass) {
                eprintln!(
                    "FAIL {} {}",
                    r.spec.name,
                    r.spec
                        .params
                        .get("instance")
                        .map(|v| v.to_string())
                        .unwrap_or_default()
                );
            }
            eprintln!(
                "{} checks, {} passed, {failed} failed",
                reports.len(),
                reports.len() - failed
            );
            let text = serde_json::to_string_pretty(&reports)? + "\n";
            write_output(out.as_deref(), &text)?;
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Error>()
                .is_some_and(|e| matches!(e, Error::Config(_)))
            {
                return ExitCode::from(2);
            }
            ExitCode::from(1)
        }
    }
}
