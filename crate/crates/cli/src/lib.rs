//! Command-line front end for the `tchordal` library.
//!
//! Exit codes: 0 positive verdict or success, 1 negative verdict, 2 parse or
//! usage error, 3 size cap or search budget exceeded.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use tchordal::amplifier::{amplify, build_hard_sequence, IndependentSetFamily};
use tchordal::chordality::{in_class_with_budget, is_t_chordal_with_budget, Chordality, ClassMembership};
use tchordal::cnf::parse_dimacs_cnf;
use tchordal::dicoloring::dichromatic_number;
use tchordal::digraph::Digraph;
use tchordal::reduction::{build_reduction, verify_reduction};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

pub const DEFAULT_CAP: usize = 100_000;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "tchordal", version, about = "Check and build t-chordal digraphs")]
pub struct Cli {
    /// Search-node budget for induced cycle and path searches.
    #[arg(long, global = true, env = "TCHORDAL_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide t-chordality; prints "t-chordal" or a cycle of length != t.
    Chordal {
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
    /// Dichromatic number and a witness dicoloring.
    Dichi { file: PathBuf },
    /// Clique number of the underlying graph.
    Omega { file: PathBuf },
    /// Membership in the class with no induced cycle shorter than l and no
    /// induced path on l vertices.
    ClassCheck {
        #[arg(long)]
        l: usize,
        file: PathBuf,
    },
    /// Member n of the hard sequence of t-chordal digraphs.
    Construct {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Amplify a digraph along a family of independent sets.
    Amplify {
        #[arg(long)]
        t: usize,
        #[arg(short = 'd', long = "digraph")]
        digraph: PathBuf,
        #[arg(short = 's', long = "sets")]
        sets: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Build the gadget digraph of a CNF formula.
    Reduce {
        #[arg(long)]
        t: usize,
        cnf: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Compare satisfiability with the t-chordality of the gadget digraph.
    VerifyReduction {
        #[arg(long)]
        t: usize,
        cnf: PathBuf,
    },
    /// Check chi <= (l+1)^omega on a member of the class for l.
    BoundCheck {
        #[arg(long)]
        l: usize,
        file: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Limit(String),
}

impl From<tchordal::Error> for Failure {
    fn from(e: tchordal::Error) -> Self {
        if e.is_resource_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph, Failure> {
    Digraph::from_dgf(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Writes the digraph to `output`, or to stdout when no path is given.
fn emit_digraph(d: &Digraph, output: Option<&Path>, out: &mut String) -> Result<(), Failure> {
    match output {
        Some(path) => {
            write_file(path, &d.to_dgf())?;
            writeln!(out, "vertices {} arcs {}", d.vertex_count(), d.arc_count()).unwrap();
        }
        None => out.push_str(&d.to_dgf()),
    }
    Ok(())
}

fn execute(cli: Cli, out: &mut String, err: &mut String) -> Result<i32, Failure> {
    let budget = Some(cli.budget);
    match cli.command {
        Command::Chordal { t, file } => {
            let d = load_digraph(&file)?;
            match is_t_chordal_with_budget(&d, t, budget)? {
                Chordality::Chordal => {
                    writeln!(out, "t-chordal").unwrap();
                    Ok(EXIT_OK)
                }
                Chordality::NotChordal(cycle) => {
                    writeln!(out, "{cycle}").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Dichi { file } => {
            let d = load_digraph(&file)?;
            let (chi, coloring) = dichromatic_number(&d);
            writeln!(out, "{chi}\n{coloring}").unwrap();
            Ok(EXIT_OK)
        }
        Command::Omega { file } => {
            let d = load_digraph(&file)?;
            writeln!(out, "{}", d.underlying_clique_number()).unwrap();
            Ok(EXIT_OK)
        }
        Command::ClassCheck { l, file } => {
            let d = load_digraph(&file)?;
            Ok(report_membership(&in_class_with_budget(&d, l, budget)?, out))
        }
        Command::Construct { t, n, cap, output } => {
            let d = build_hard_sequence(t, n, cap)?;
            emit_digraph(&d, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Amplify {
            t,
            digraph,
            sets,
            cap,
            output,
            map,
        } => {
            let d = load_digraph(&digraph)?;
            let family = IndependentSetFamily::from_sets_text(&read(&sets)?, &d)
                .map_err(|e| Failure::Usage(format!("{}: {e}", sets.display())))?;
            let amplified = amplify(&d, &family, t, cap)?;
            if let Some(path) = &map {
                write_file(path, &amplified.map_text())?;
            }
            emit_digraph(&amplified.result, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Reduce { t, cnf, output, map } => {
            let phi = parse_dimacs_cnf(&read(&cnf)?).map_err(|e| Failure::Usage(format!("{}: {e}", cnf.display())))?;
            let art = build_reduction(&phi, t)?;
            for warning in &art.warnings {
                writeln!(err, "warning: {warning}").unwrap();
            }
            if let Some(path) = &map {
                write_file(path, &art.map.to_text())?;
            }
            emit_digraph(&art.digraph, output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::VerifyReduction { t, cnf } => {
            let phi = parse_dimacs_cnf(&read(&cnf)?).map_err(|e| Failure::Usage(format!("{}: {e}", cnf.display())))?;
            let check = verify_reduction(&phi, t, budget)?;
            writeln!(out, "{check}").unwrap();
            Ok(if check.is_equivalent() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::BoundCheck { l, file } => {
            let d = load_digraph(&file)?;
            let membership = in_class_with_budget(&d, l, budget)?;
            if !membership.is_member() {
                return Ok(report_membership(&membership, out));
            }
            let omega = d.underlying_clique_number();
            let (chi, _) = dichromatic_number(&d);
            let bound = (l as u128 + 1).checked_pow(omega as u32).unwrap_or(u128::MAX);
            let holds = chi as u128 <= bound;
            let verdict = if holds { "holds" } else { "violated" };
            writeln!(out, "bound {verdict}: chi {chi}, omega {omega}, (l+1)^omega {bound}").unwrap();
            Ok(if holds { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn report_membership(membership: &ClassMembership, out: &mut String) -> i32 {
    match membership {
        ClassMembership::Member => {
            writeln!(out, "member").unwrap();
            EXIT_OK
        }
        ClassMembership::ShortCycle(cycle) => {
            writeln!(out, "not a member: {cycle}").unwrap();
            EXIT_NEGATIVE
        }
        ClassMembership::LongPath(path) => {
            writeln!(out, "not a member: {path}").unwrap();
            EXIT_NEGATIVE
        }
    }
}

/// Parses `args` (program name first) and runs the command. Output goes to
/// the two streams in one write each, after the command has finished.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut out = String::new();
    let mut err = String::new();
    let code = match execute(cli, &mut out, &mut err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            writeln!(err, "error: {msg}").unwrap();
            out.clear();
            EXIT_USAGE
        }
        Err(Failure::Limit(msg)) => {
            writeln!(err, "error: {msg}").unwrap();
            out.clear();
            EXIT_LIMIT
        }
    };
    let _ = stdout.write_all(out.as_bytes());
    let _ = stderr.write_all(err.as_bytes());
    let _ = stdout.flush();
    code
}
