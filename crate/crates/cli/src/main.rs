//! `atam`: command-line front end for the tile assembly simulator and
//! verifier.
//!
//! Exit codes: 0 success or Holds, 1 Fails (or diagnostics from `validate`),
//! 2 Unknown, 64 usage error, 65 malformed input document, 66 unreadable
//! input file, 73 unwritable output file.

use std::fmt::Display;
use std::io::{IsTerminal, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use atam_core::dynamics::{enumerate_with_jobs, frontier, random_sequence, replay, Bounds};
use atam_core::io::{
    parse_assembly, parse_shape_points, parse_tileset, parse_trace, render_ascii, render_svg, write_graph, write_trace,
    write_witness, AsciiStyle, LoadError,
};
use atam_core::model::{Assembly, Position, Tas, TileSet};
use atam_core::verify::{Shape, Verdict, Verifier};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_CANTCREAT: u8 = 73;

#[derive(Parser)]
#[command(name = "atam", version, about = "Abstract Tile Assembly Model simulator and verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a tileset document; diagnostics go to standard error.
    Validate { tileset: PathBuf },
    /// Grow one random assembly sequence from the seed and render the result.
    Simulate {
        tileset: PathBuf,
        /// Seed for the ChaCha8 generator that picks each attachment.
        #[arg(long)]
        rng_seed: u64,
        #[arg(long)]
        max_steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        render: Format,
        /// Write the assembly sequence as a replayable trace document.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Explore the producible assemblies and summarize the graph.
    Enumerate {
        tileset: PathBuf,
        #[command(flatten)]
        limits: Limits,
        /// Write the graph as a JSON document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every attachment available to an assembly (the seed by default).
    Frontier {
        tileset: PathBuf,
        #[arg(long)]
        assembly: Option<PathBuf>,
    },
    /// Decide whether the system has exactly one terminal assembly.
    CheckDirected {
        tileset: PathBuf,
        #[command(flatten)]
        limits: Limits,
        /// Directory for witness-1.trace.json and witness-2.trace.json.
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
    /// Decide whether the system assembles a shape.
    VerifyShape {
        tileset: PathBuf,
        shape: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Treat the shape file as exact only on x in 0..W, y in 0..H; the
        /// shape may continue beyond it.
        #[arg(long, value_parser = parse_window)]
        window: Option<(i64, i64)>,
        #[command(flatten)]
        limits: Limits,
        /// Directory for witness.trace.json.
        #[arg(long, default_value = ".")]
        witness_dir: PathBuf,
    },
    /// Render a snapshot, or the result of replaying a trace.
    Render {
        tileset: PathBuf,
        #[arg(long, conflicts_with = "trace", required_unless_present = "trace")]
        assembly: Option<PathBuf>,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Format,
    },
}

#[derive(Args)]
struct Limits {
    /// Do not grow assemblies beyond this many tiles.
    #[arg(long)]
    max_tiles: Option<NonZeroUsize>,
    /// Stop after discovering this many assemblies.
    #[arg(long)]
    max_states: Option<NonZeroUsize>,
    /// Worker threads for exploration; results do not depend on it.
    #[arg(long, default_value = "1")]
    jobs: NonZeroUsize,
}

impl Limits {
    fn bounds(&self) -> Bounds {
        Bounds {
            max_tiles: self.max_tiles.map(NonZeroUsize::get),
            region: None,
            max_states: self.max_states.map(NonZeroUsize::get),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Finite,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (w, h) = s.split_once(['x', 'X']).ok_or("expected WxH, for example 16x2")?;
    let parse = |v: &str| match v.trim().parse::<i64>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("{v:?} is not a positive integer")),
    };
    Ok((parse(w)?, parse(h)?))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Display) -> Self {
        Self { code, message: message.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EX_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("atam: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { tileset } => validate(&tileset),
        Command::Simulate { tileset, rng_seed, max_steps, render, trace } => {
            let tas = load_tas(&tileset)?;
            let seq = random_sequence(&tas, rng_seed, max_steps).map_err(|e| Failure::new(EX_DATAERR, e))?;
            let result = replay(&tas, &seq).map_err(|e| Failure::new(EX_DATAERR, e))?;
            if let Some(path) = trace {
                write_file(&path, &write_trace(&seq, tas.tileset()))?;
            }
            print(&draw(&result, tas.tileset(), render));
            Ok(0)
        }
        Command::Enumerate { tileset, limits, out } => {
            let tas = load_tas(&tileset)?;
            let bounds = require_bounds(&limits)?;
            let g = enumerate_with_jobs(&tas, &bounds, limits.jobs.get()).map_err(|e| Failure::new(EX_DATAERR, e))?;
            if let Some(path) = out {
                write_file(&path, &write_graph(&g, tas.tileset()))?;
            }
            let status = if g.budget_exceeded() { "state-budget-exceeded" } else { "complete" };
            print(&format!(
                "nodes {}\nedges {}\nterminal {}\ntruncated {}\nstatus {status}\n",
                g.len(),
                g.edges().len(),
                g.terminals().count(),
                g.truncated_count()
            ));
            Ok(0)
        }
        Command::Frontier { tileset, assembly } => {
            let tas = load_tas(&tileset)?;
            let a = match assembly {
                Some(path) => load(&path, |b| parse_assembly(b, tas.tileset()))?,
                None => tas.seed().clone(),
            };
            let f = frontier(&tas, &a).map_err(|e| Failure::new(EX_DATAERR, e))?;
            let mut s = String::new();
            for att in f {
                s.push_str(&format!(
                    "{} {} {} {}\n",
                    att.position.x,
                    att.position.y,
                    tas.tileset().name_of(att.tile),
                    att.strength
                ));
            }
            print(&s);
            Ok(0)
        }
        Command::CheckDirected { tileset, limits, witness_dir } => {
            let tas = load_tas(&tileset)?;
            let bounds = require_bounds(&limits)?;
            let v = Verifier::with_jobs(limits.jobs.get())
                .is_directed(&tas, &bounds)
                .map_err(|e| Failure::new(EX_DATAERR, e))?;
            report(&tas, &v, &witness_dir, |i| format!("witness-{}.trace.json", i + 1))
        }
        Command::VerifyShape { tileset, shape, mode, window, limits, witness_dir } => {
            let tas = load_tas(&tileset)?;
            let points = load(&shape, parse_shape_points)?;
            let target = match window {
                None => {
                    Shape::finite(points).map_err(|e| Failure::new(EX_DATAERR, format!("{}: {e}", shape.display())))?
                }
                Some((w, h)) => Shape::windowed(move |p| points.contains(&p), Shape::rectangle(Position::ORIGIN, w, h))
                    .map_err(|e| Failure::new(EX_USAGE, e))?,
            };
            let verifier = Verifier::with_jobs(limits.jobs.get());
            let bounds = limits.bounds();
            let v = match mode {
                Mode::Strict => verifier.self_assembles(&tas, &target, &bounds),
                Mode::Finite => verifier.finitely_self_assembles(&tas, &target, &bounds),
            }
            .map_err(|e| Failure::new(EX_DATAERR, e))?;
            report(&tas, &v, &witness_dir, |_| "witness.trace.json".to_owned())
        }
        Command::Render { tileset, assembly, trace, format } => {
            let tas = load_tas(&tileset)?;
            let a = match (assembly, trace) {
                (Some(path), _) => load(&path, |b| parse_assembly(b, tas.tileset()))?,
                (None, Some(path)) => {
                    let seq = load(&path, |b| parse_trace(b, tas.tileset()))?;
                    replay(&tas, &seq).map_err(|e| Failure::new(EX_DATAERR, format!("{}: {e}", path.display())))?
                }
                (None, None) => unreachable!("clap requires one of --assembly and --trace"),
            };
            print(&draw(&a, tas.tileset(), format));
            Ok(0)
        }
    }
}

fn validate(path: &Path) -> Outcome {
    let bytes = read(path)?;
    match parse_tileset(&bytes) {
        Ok(_) => {
            println!("ok");
            Ok(0)
        }
        Err(e) => {
            for line in e.to_string().lines() {
                eprintln!("{}: {line}", path.display());
            }
            Ok(1)
        }
    }
}

fn require_bounds(limits: &Limits) -> Result<Bounds, Failure> {
    if limits.max_tiles.is_none() && limits.max_states.is_none() {
        return Err(Failure::new(EX_USAGE, "give --max-tiles or --max-states to keep exploration finite"));
    }
    Ok(limits.bounds())
}

/// Prints the verdict and writes one witness file per witness.
fn report(tas: &Tas, v: &Verdict, dir: &Path, name: impl Fn(usize) -> String) -> Outcome {
    let mut s = format!("{}\n", v.status);
    if let Some(note) = &v.note {
        s.push_str(&format!("note: {note}\n"));
    }
    for (i, w) in v.witnesses.iter().enumerate() {
        let path = dir.join(name(i));
        write_file(&path, &write_witness(w, tas.tileset()))?;
        let at = w.position.map(|p| format!(" at {p}")).unwrap_or_default();
        s.push_str(&format!("witness: {} ({}{at})\n", path.display(), w.kind.name()));
    }
    print(&s);
    Ok(v.status.exit_code() as u8)
}

fn draw(a: &Assembly, ts: &TileSet, format: Format) -> String {
    match format {
        Format::Ascii => {
            let color = std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
            render_ascii(a, ts, AsciiStyle { color })
        }
        Format::Svg => render_svg(a, ts),
    }
}

fn print(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    let _ = out.flush();
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::new(EX_NOINPUT, format!("cannot read {}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl FnOnce(&[u8]) -> Result<T, LoadError>) -> Result<T, Failure> {
    let bytes = read(path)?;
    parse(&bytes).map_err(|e| Failure::new(EX_DATAERR, format!("{}: {e}", path.display())))
}

fn load_tas(path: &Path) -> Result<Tas, Failure> {
    load(path, parse_tileset)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::new(EX_CANTCREAT, format!("cannot write {}: {e}", path.display())))
}
