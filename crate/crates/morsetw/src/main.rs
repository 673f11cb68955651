use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use morsetw::experiment::{self, ExperimentOptions, DEFAULT_CLASS_LIMIT};
use morsetw::formats;
use morsetw_core::acfm::{self, AcfmError, SolveOptions};
use morsetw_core::morse::{erasability_via_acfm_with, optimal_morse_3manifold_with, validate_morse_matching, MorseError};
use morsetw_core::reductions::{self, DEFAULT_GADGET_BUDGET};
use morsetw_core::treewidth::{exact_treewidth, make_nice, BagKind, DEFAULT_EXACT_LIMIT};
use morsetw_core::{Graph, SimplicialComplex};

#[derive(Parser)]
#[command(name = "morsetw", version, about = "Erasability, optimal Morse matchings and treewidth of simplicial complexes")]
struct Cli {
    /// Randomise heuristic tie-breaking with this seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest graph that gets an exact decomposition.
    #[arg(long, global = true, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    /// Give up when a dynamic-programming class table exceeds this size.
    #[arg(long, global = true)]
    class_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Erasability number of a 2-complex, with critical triangles.
    Er { file: PathBuf },
    /// Optimal Morse matching of a closed 3-manifold.
    Morse { file: PathBuf },
    /// Maximum alternating cycle-free matching of a PACE graph.
    Acfm {
        graph: PathBuf,
        /// PACE tree decomposition to run on.
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Tree decomposition of a PACE graph, in PACE format.
    Treewidth {
        graph: PathBuf,
        /// Require an exact decomposition.
        #[arg(long)]
        exact: bool,
    },
    /// Nice form of a PACE tree decomposition.
    Niceify { td: PathBuf },
    /// Spine of a complex as a PACE graph.
    Spine { file: PathBuf },
    /// Dual graph of a 3-complex as a PACE graph.
    Dualgraph { file: PathBuf },
    /// Axiom-set instance whose optimum is the erasability of a 2-complex.
    ReduceMas { file: PathBuf },
    /// 2-complex whose erasability is the optimum of an axiom-set instance.
    Gadget { file: PathBuf },
    /// CSV of treewidth statistics for every complex file in a directory.
    Experiment {
        dir: PathBuf,
        /// Also compute er and c(M).
        #[arg(long)]
        invariants: bool,
        /// Worker threads (default: MORSETW_THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Write the CSV here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Exit code 1 for bad input, 2 when a result fails its own check.
enum Failure {
    Input(anyhow::Error),
    Verification(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

fn verification(msg: impl Into<String>) -> Failure {
    Failure::Verification(anyhow!(msg.into()))
}

fn classify_acfm(e: AcfmError) -> Failure {
    match e {
        AcfmError::WitnessVerificationFailed | AcfmError::ParityViolation { .. } => Failure::Verification(e.into()),
        e => Failure::Input(e.into()),
    }
}

fn classify_morse(e: MorseError) -> Failure {
    match e {
        MorseError::Acfm(a) => classify_acfm(a),
        MorseError::CompletionInvalid | MorseError::CertificateInvalid | MorseError::DisconnectedGamma(_) => {
            Failure::Verification(e.into())
        }
        e => Failure::Input(e.into()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    Ok(fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    Ok(formats::parse_complex(&read(path)?).with_context(|| format!("parsing {}", path.display()))?)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(formats::parse_graph_pace(&read(path)?).with_context(|| format!("parsing {}", path.display()))?)
}

fn labelled_graph(graph: &Graph) -> String {
    let mut out = String::new();
    if let Some(labels) = graph.labels() {
        for (i, s) in labels.iter().enumerate() {
            writeln!(out, "c node {} {s}", i + 1).unwrap();
        }
    }
    out + &formats::write_graph_pace(graph)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let solve = SolveOptions { exact_limit: cli.exact_limit, class_limit: cli.class_limit };
    let mut out = String::new();
    match cli.command {
        Command::Er { file } => {
            let k = read_complex(&file)?;
            let e = erasability_via_acfm_with(&k, &solve).map_err(classify_morse)?;
            let rest: Vec<Vec<u32>> =
                k.triangles().iter().filter(|t| !e.critical.contains(t)).map(|t| t.vertices().to_vec()).collect();
            let erasable = rest.is_empty()
                || SimplicialComplex::new(rest).ok().and_then(|r| r.erase_greedy().ok()).is_some_and(|g| g.erasable);
            if e.critical.len() != e.er || !erasable {
                return Err(verification("critical triangles do not certify the erasability number"));
            }
            writeln!(out, "er = {}", e.er).unwrap();
            for t in &e.critical {
                writeln!(out, "critical {t}").unwrap();
            }
        }
        Command::Morse { file } => {
            let k = read_complex(&file)?;
            let r = optimal_morse_3manifold_with(&k, &solve).map_err(classify_morse)?;
            let check = validate_morse_matching(&k, r.matching.pairs()).map_err(classify_morse)?;
            if !check.is_valid() || check.critical != r.matching.critical() {
                return Err(verification("Morse matching failed validation"));
            }
            let c: Vec<String> = check.critical.iter().map(usize::to_string).collect();
            writeln!(out, "c = {} (total {})", c.join(" "), r.total_critical()).unwrap();
            for (tau, sigma) in r.matching.pairs() {
                writeln!(out, "pair {sigma} {tau}").unwrap();
            }
        }
        Command::Acfm { graph, td } => {
            let g = read_graph(&graph)?;
            let sol = match td {
                Some(path) => {
                    let td = formats::parse_td_pace(&read(&path)?)?;
                    let nice = make_nice(&td.decomposition)?;
                    acfm::max_acfm_bounded(&g, &nice, solve.class_limit).map_err(classify_acfm)?
                }
                None => {
                    let (td, _) = morsetw::decompose(&g, cli.exact_limit, cli.seed);
                    let nice = make_nice(&td).map_err(|e| Failure::Verification(e.into()))?;
                    acfm::max_acfm_bounded(&g, &nice, solve.class_limit).map_err(classify_acfm)?
                }
            };
            if !acfm::is_alternating_cycle_free(&g, &sol.witness).unwrap_or(false) {
                return Err(verification("matching has an alternating cycle"));
            }
            match sol.unmatched_side_one {
                Some(u) => writeln!(out, "size = {}, unmatched N1 = {u}", sol.size).unwrap(),
                None => writeln!(out, "size = {}", sol.size).unwrap(),
            }
            for (u, v) in &sol.witness {
                writeln!(out, "match {} {}", u + 1, v + 1).unwrap();
            }
        }
        Command::Treewidth { graph, exact } => {
            let g = read_graph(&graph)?;
            let (td, is_exact) = if exact {
                // The solver applies its own hard cap.
                (exact_treewidth(&g, usize::MAX)?.1, true)
            } else {
                morsetw::decompose(&g, cli.exact_limit, cli.seed)
            };
            if !td.validate(&g).is_valid() {
                return Err(verification("decomposition failed validation"));
            }
            let kind = if is_exact { "exact" } else { "upper bound" };
            writeln!(out, "c width {} ({kind})", td.width()).unwrap();
            out += &formats::write_td_pace(&td, g.node_count());
        }
        Command::Niceify { td } => {
            let td = formats::parse_td_pace(&read(&td)?)?;
            let nice = make_nice(&td.decomposition)?;
            nice.check(td.node_count).map_err(|e| verification(e.to_string()))?;
            for (i, kind) in nice.kinds().iter().enumerate() {
                let k = match kind {
                    BagKind::Leaf => "leaf".to_string(),
                    BagKind::Introduce(x) => format!("introduce {}", x + 1),
                    BagKind::Forget(x) => format!("forget {}", x + 1),
                    BagKind::Join => "join".to_string(),
                };
                writeln!(out, "c bag {} {k}", i + 1).unwrap();
            }
            writeln!(out, "c root {}", nice.root() + 1).unwrap();
            out += &formats::write_td_pace(&nice.to_decomposition(), td.node_count);
        }
        Command::Spine { file } => out = labelled_graph(&read_complex(&file)?.spine()),
        Command::Dualgraph { file } => out = labelled_graph(&read_complex(&file)?.dual_graph()?),
        Command::ReduceMas { file } => {
            out = formats::write_mas(&reductions::erasability_to_mas(&read_complex(&file)?)?);
        }
        Command::Gadget { file } => {
            let inst = formats::parse_mas(&read(&file)?)?;
            let g = reductions::mas_to_erasability_gadget(&inst, DEFAULT_GADGET_BUDGET)?;
            if !g.complex.external_triangles()?.is_empty() {
                return Err(verification("gadget has external triangles"));
            }
            out = formats::write_complex(&g.complex);
        }
        Command::Experiment { dir, invariants, threads, output } => {
            let paths = experiment::list_dir(&dir).with_context(|| format!("listing {}", dir.display()))?;
            let options = ExperimentOptions {
                exact_limit: cli.exact_limit,
                invariants,
                class_limit: cli.class_limit.or(Some(DEFAULT_CLASS_LIMIT)),
                seed: cli.seed,
                threads,
            };
            let records = experiment::run_experiment(&paths, &options);
            match output {
                Some(path) => {
                    let f = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    experiment::write_csv(&records, f)?;
                }
                None => {
                    let mut buf = Vec::new();
                    experiment::write_csv(&records, &mut buf)?;
                    out = String::from_utf8(buf).expect("csv output is UTF-8");
                }
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(e)) => {
            eprintln!("verification failed: {e:#}");
            ExitCode::from(2)
        }
    }
}
