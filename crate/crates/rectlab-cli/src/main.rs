use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rectlab::biject::{gamma_s, gamma_w, quotient_cover_graph};
use rectlab::enumerate::{
    baxter_number, growth_constants, schroder_counts, strong_guillotine_count, weighted_guillotine_series,
};
use rectlab::perm::{classify, PermClass, Permutation};
use rectlab::rect::{Format, Rectangulation};
use rectlab::verify::{verify_with, Bounds, Inputs, SUITES};
use rectlab::walks::{count_o, count_strong_rect, count_u, encode_strong, encode_weak, HistoryQuadrantWalk, Variant};

/// Rectangulations, their permutation codes, quadrant walks and counts.
///
/// Permutations are given in quoted one-line notation, e.g. "2 4 1 3".
/// Rectangulations are read as JSON from a file, or from stdin with `-`.
#[derive(Parser)]
#[command(name = "rectlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Equivalence {
    /// Weak equivalence
    #[arg(long)]
    weak: bool,
    /// Strong equivalence
    #[arg(long)]
    strong: bool,
}

impl Equivalence {
    fn variant(&self) -> Variant {
        if self.weak {
            Variant::Weak
        } else {
            Variant::Strong
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Schroder,
    Baxter,
    Strong,
    U,
    O,
    StrongGuillotine,
    WeightedGuillotine,
}

#[derive(Subcommand)]
enum Command {
    /// Map a permutation to its rectangulation (JSON unless a render flag is given)
    Map {
        #[command(flatten)]
        eq: Equivalence,
        perm: String,
        /// Render as SVG, 40px per grid unit
        #[arg(long, conflicts_with = "ascii")]
        svg: bool,
        /// Render as ASCII art
        #[arg(long)]
        ascii: bool,
    },
    /// List the permutations mapped to a rectangulation
    Fiber {
        #[command(flatten)]
        eq: Equivalence,
        rect: String,
    },
    /// Print membership in each named permutation class
    Classify { perm: String },
    /// Print the n-th term of a counting sequence
    Count {
        family: Family,
        n: usize,
        /// Weight per two-sided segment, for weighted-guillotine
        #[arg(long, default_value = "2")]
        y: String,
    },
    /// Print the leftmost permutation of a rectangulation's class
    Key {
        #[command(flatten)]
        eq: Equivalence,
        rect: String,
    },
    /// Quotient graph of strong classes of size n
    Flipgraph {
        n: usize,
        /// Emit Graphviz DOT instead of a summary
        #[arg(long)]
        dot: bool,
    },
    /// Encode a permutation as a walk, or decode a walk file to JSON
    Walk {
        #[command(subcommand)]
        action: WalkAction,
    },
    /// Run verification sweeps; `all` runs every suite
    Verify {
        suite: String,
        /// Cap on exhaustive sweeps over S_n [default: RECTLAB_MAX_N or 6]
        #[arg(long)]
        max_n: Option<usize>,
        /// Strong guillotine table rows to recompute
        #[arg(long, default_value_t = rectlab::verify::DEFAULT_TABLE_ROWS)]
        table_rows: usize,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the growth constants
    Constants {
        /// Number of table terms in the fixed-point bound
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
}

#[derive(Subcommand)]
enum WalkAction {
    Encode {
        #[command(flatten)]
        eq: Equivalence,
        perm: String,
    },
    Decode {
        #[command(flatten)]
        eq: Equivalence,
        /// Walk file, one `x y color` point per line, or `-` for stdin
        walk: String,
    },
}

/// Invalid arguments that clap cannot see; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn parse_perm(text: &str) -> Result<Permutation> {
    text.parse().map_err(|e| anyhow!("line 1: {e}"))
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_rect(path: &str) -> Result<Rectangulation> {
    Ok(Rectangulation::from_json(&read_input(path)?)?)
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|t| t.to_string() + "\n").collect()
}

/// Output and success flag; a `false` flag exits with status 1.
fn execute(command: Command) -> Result<(String, bool)> {
    let out = match command {
        Command::Map { eq, perm, svg, ascii } => {
            let p = parse_perm(&perm)?;
            let r = if eq.weak { gamma_w(&p) } else { gamma_s(&p) };
            match (svg, ascii) {
                (true, _) => r.render(Format::Svg),
                (_, true) => r.render(Format::Ascii),
                _ => r.to_json() + "\n",
            }
        }
        Command::Fiber { eq, rect } => {
            let r = read_rect(&rect)?;
            lines(if eq.weak { r.fiber_w() } else { r.fiber_s() })
        }
        Command::Classify { perm } => {
            let flags = classify(&parse_perm(&perm)?);
            lines(PermClass::ALL.iter().map(|&c| format!("{c} {}", if flags.has(c) { "yes" } else { "no" })))
        }
        Command::Count { family, n, y } => {
            if n == 0 {
                bail!("n must be at least 1");
            }
            let value = match family {
                Family::Schroder => schroder_counts(n)[n - 1].to_string(),
                Family::Baxter => baxter_number(n).to_string(),
                Family::Strong => count_strong_rect(n).to_string(),
                Family::U => count_u(n).to_string(),
                Family::O => count_o(n).to_string(),
                Family::StrongGuillotine => strong_guillotine_count(n).to_string(),
                Family::WeightedGuillotine => {
                    let y: BigRational = y.parse().map_err(|_| anyhow!("line 1: invalid weight `{y}`"))?;
                    weighted_guillotine_series(&y, n).coeff(n).to_string()
                }
            };
            value + "\n"
        }
        Command::Key { eq, rect } => {
            let r = read_rect(&rect)?;
            format!("{}\n", if eq.weak { r.weak_key() } else { r.strong_key() })
        }
        Command::Flipgraph { n, dot } => {
            let g = quotient_cover_graph(n)?;
            if dot {
                g.to_dot()
            } else {
                format!(
                    "vertices {}\nedges {}\nconnected {}\nlattice {}\n",
                    g.vertices().len(),
                    g.edge_count(),
                    g.is_connected(),
                    g.is_lattice()
                )
            }
        }
        Command::Walk { action: WalkAction::Encode { eq, perm } } => {
            let p = parse_perm(&perm)?;
            let w = if eq.weak { encode_weak(&p) } else { encode_strong(&p) };
            w.to_text()
        }
        Command::Walk { action: WalkAction::Decode { eq, walk } } => {
            let w = HistoryQuadrantWalk::from_text(&read_input(&walk)?, eq.variant())?;
            w.decode()?.to_json() + "\n"
        }
        Command::Verify { suite, max_n, table_rows, json } => {
            let suites: Vec<&str> = if suite == "all" { Vec::new() } else { vec![suite.as_str()] };
            let bounds = Bounds { max_n: max_n.unwrap_or(Bounds::from_env().max_n), table_rows };
            let report = verify_with(&Inputs::default(), &suites, bounds)
                .map_err(|e| Usage(format!("{e}; suites: all, {}", SUITES.join(", "))))?;
            let text = if json { report.to_json() + "\n" } else { report.to_text() };
            return Ok((text, report.passed()));
        }
        Command::Constants { terms } => {
            let c = growth_constants(terms);
            format!(
                "gamma {:.12}\ngamma_prime {:.12}\nrho_zero {}\nx0 {:.12}\nlower_bound {:.12}\nz0_bound_{} {:.12}\n",
                c.gamma, c.gamma_prime, c.rho_zero, c.x0, c.lower_bound, c.z0_terms, c.z0_bound
            )
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok((out, passed)) => {
            let _ = io::stdout().write_all(out.as_bytes());
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}
