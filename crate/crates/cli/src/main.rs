use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use precolor_core::coloring_flow::Coloring;
use precolor_core::criticality::{
    check_k_minus_2, check_quadrangulation, classify_8cycle, is_c_critical,
    nonextendable_colorings, seven_cycle_configurations,
};
use precolor_core::crosscheck::{run_corpus, Summary};
use precolor_core::extension_solver::decide_extension;
use precolor_core::generator::{for_each_filling, GenSpec};
use precolor_core::plane_graph::{parse_plane_graph, PlaneGraph};

#[derive(Parser)]
#[command(
    name = "precolor",
    version,
    about = "3-coloring extension on triangle-free plane graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print internal face lengths and the long-face multiset.
    Faces {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether a precoloring of the outer cycle extends.
    Extend(ColoringArgs),
    /// Print only the extending coloring, if any.
    Witness(ColoringArgs),
    /// Decide criticality by edge deletion.
    Critical {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classify a graph with an outer cycle of length 6, 7 or 8.
    Classify {
        file: PathBuf,
        /// Restrict a 7-cycle classification to this precoloring.
        #[arg(long)]
        coloring: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream every filling of a k-cycle, separated by `---` lines.
    Enumerate(CorpusArgs),
    /// Check the solver against the oracle and the classifiers against
    /// brute-force criticality over a corpus.
    Crosscheck(CorpusArgs),
}

#[derive(Args)]
struct ColoringArgs {
    file: PathBuf,
    /// Outer colors in cycle order (`1,2,3,...`) or a file of `color v c` lines.
    #[arg(long)]
    coloring: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CorpusArgs {
    /// Outer cycle lengths; all of 4..=8 when omitted.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(4..=8))]
    k: Vec<u8>,
    /// Maximum number of internal vertices.
    #[arg(long, default_value_t = 2)]
    budget: usize,
    /// Minimum girth, 4 or 5.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(4..=5))]
    girth: u8,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl CorpusArgs {
    fn specs(&self) -> Result<Vec<GenSpec>> {
        let ks: Vec<usize> = if self.k.is_empty() {
            (4..=8).collect()
        } else {
            self.k.iter().map(|&k| k as usize).collect()
        };
        ks.into_iter()
            .map(|k| Ok(GenSpec::new(k, self.budget, self.girth as usize)?))
            .collect()
    }
}

fn read_graph(path: &Path) -> Result<PlaneGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_plane_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_coloring(g: &PlaneGraph, arg: &str) -> Result<Coloring> {
    let psi = if Path::new(arg).is_file() {
        let text = fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        let psi = Coloring::parse_text(&text, g.vertex_count())?;
        psi.check_precoloring(g)?;
        psi
    } else {
        let colors = arg
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .with_context(|| format!("bad color `{t}`"))
            })
            .collect::<Result<Vec<_>>>()?;
        Coloring::from_outer(g, &colors)?
    };
    Ok(psi)
}

fn faces_report(g: &PlaneGraph) -> String {
    let mut out = String::new();
    for f in g.internal_faces() {
        let vs: Vec<String> = g
            .face_vertices(f)
            .iter()
            .map(|v| (v + 1).to_string())
            .collect();
        out.push_str(&format!(
            "face {f} length {} vertices {}\n",
            g.face_len(f),
            vs.join(" ")
        ));
    }
    let s: Vec<String> = g
        .face_length_multiset()
        .iter()
        .map(usize::to_string)
        .collect();
    out.push_str(&format!("S {{{}}}\n", s.join(",")));
    out
}

fn classify_report(g: &PlaneGraph, coloring: Option<&str>) -> Result<String> {
    let k = g.outer_cycle().len();
    let mut out = String::new();
    match k {
        8 => out.push_str(&classify_8cycle(g)?.report(g)),
        7 => {
            let crit = is_c_critical(g).is_critical;
            let configs = seven_cycle_configurations(g);
            let psis = match coloring {
                Some(c) => vec![read_coloring(g, c)?],
                None => nonextendable_colorings(g),
            };
            out.push_str(&format!(
                "class {}\n",
                if crit { "CRITICAL" } else { "NOT_CRITICAL" }
            ));
            for psi in psis {
                let case = configs
                    .iter()
                    .filter(|m| m.colors_match(&psi))
                    .min_by_key(|m| m.case)
                    .filter(|_| crit && !decide_extension(g, &psi).extends());
                let outer: Vec<String> = psi.outer_colors(g).iter().map(u8::to_string).collect();
                match case {
                    Some(m) => {
                        let labels: Vec<String> =
                            m.labeling.c.iter().map(|v| (v + 1).to_string()).collect();
                        out.push_str(&format!(
                            "coloring {} case {} labeling {}\n",
                            outer.join(","),
                            m.case,
                            labels.join(" ")
                        ));
                    }
                    None => out.push_str(&format!("coloring {} case none\n", outer.join(","))),
                }
            }
            if let Ok(km2) = check_k_minus_2(g) {
                out.push_str(&format!("long-face a={} b={} c={}\n", km2.a, km2.b, km2.c));
            }
        }
        6 => {
            let crit = check_quadrangulation(g).unwrap_or(false);
            out.push_str(&format!(
                "class {}\n",
                if crit { "CRITICAL" } else { "NOT_CRITICAL" }
            ));
            for psi in nonextendable_colorings(g) {
                let outer: Vec<String> = psi.outer_colors(g).iter().map(u8::to_string).collect();
                out.push_str(&format!("nonextendable {}\n", outer.join(",")));
            }
        }
        _ => out.push_str("class NOT_CRITICAL\nreason outer cycle of length at most five\n"),
    }
    Ok(out)
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(f))
}

enum Outcome {
    Ok,
    Mismatch,
}

fn run(cli: Cli) -> Result<Outcome> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Faces {
            file,
            format: Format::Text,
        } => {
            let g = read_graph(&file)?;
            write!(out, "{}", faces_report(&g))?;
        }
        Command::Extend(args) => {
            let g = read_graph(&args.file)?;
            let psi = read_coloring(&g, &args.coloring)?;
            write!(out, "{}", decide_extension(&g, &psi).report(&g))?;
        }
        Command::Witness(args) => {
            let g = read_graph(&args.file)?;
            let psi = read_coloring(&g, &args.coloring)?;
            match decide_extension(&g, &psi).witness() {
                Some(phi) => write!(out, "{}", phi.to_text())?,
                None => writeln!(out, "none")?,
            }
        }
        Command::Critical {
            file,
            format: Format::Text,
        } => {
            let g = read_graph(&file)?;
            write!(out, "{}", is_c_critical(&g).report(&g))?;
        }
        Command::Classify {
            file,
            coloring,
            format: Format::Text,
        } => {
            let g = read_graph(&file)?;
            write!(out, "{}", classify_report(&g, coloring.as_deref())?)?;
        }
        Command::Enumerate(args) => {
            let mut first = true;
            for spec in args.specs()? {
                let mut err = None;
                for_each_filling(&spec, |g| {
                    if err.is_some() {
                        return;
                    }
                    let sep = if first { "" } else { "---\n" };
                    first = false;
                    if let Err(e) = write!(out, "{sep}{}", g.to_text()) {
                        err = Some(e);
                    }
                });
                if let Some(e) = err {
                    bail!(e);
                }
            }
        }
        Command::Crosscheck(args) => {
            let specs = args.specs()?;
            let total = with_jobs(args.jobs, || {
                let mut total = Summary::default();
                for spec in &specs {
                    total.merge(run_corpus(spec));
                }
                total
            })?;
            write!(out, "{}", total.table())?;
            if total.total_failures() > 0 {
                for m in &total.mismatches {
                    write!(out, "---\n{}", m.report())?;
                }
                out.flush()?;
                return Ok(Outcome::Mismatch);
            }
        }
    }
    out.flush()?;
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
