//! `gcdwords`: command-line front end for the σ/τ word calculus.
//!
//! Exit codes: 0 on success, 1 for malformed input, 2 when well-formed input
//! falls outside an operation's domain (non-coprime slopes, caps exceeded).

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gcd_words::billiard::fold_trajectory;
use gcd_words::emit::{
    endpoints_csv, render_endpoints_svg, render_family_svg, render_golden_construction_svg,
    render_trajectory_svg, write_step_grid, FigureStyle, GridFormat,
};
use gcd_words::enumeration::{
    count_words, endpoints_of_length, family_line_points, step_grid, words_of_length,
};
use gcd_words::rational::euclid_trace;
use gcd_words::{encode, fib_power, golden_ratio_error, Error, Slope, Word};
use num_bigint::BigUint;

#[derive(Parser, Debug)]
#[command(name = "gcdwords", version, about = "Sigma/tau words, Euclid traces and square billiards")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical word of a slope q/p.
    Encode { slope: String },
    /// Print the slope a word sends 1/1 to.
    Decode { word: String },
    /// Apply a word to a slope.
    Apply { word: String, slope: String },
    /// Count the divisions of the Euclidean algorithm on (a, b).
    Steps {
        a: String,
        b: String,
        /// Also print every "dividend divisor quotient remainder" step.
        #[arg(long)]
        trace: bool,
    },
    /// Print fib^k(1/1) and the word (st)^k.
    Fib {
        #[arg(long)]
        k: usize,
        /// Add the decimal value and its distance from the golden ratio.
        #[arg(long)]
        float: bool,
    },
    /// List all canonical words of length n.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        count_only: bool,
    },
    /// CSV of the endpoints of all words of length n.
    Endpoints {
        #[arg(long)]
        n: u64,
    },
    /// CSV of the single-sigma family points on the line p - 1 = n1 q.
    Family {
        #[arg(long)]
        n1: u64,
        #[arg(long)]
        pmax: u64,
    },
    /// Fold the billiard path of a slope into the unit square.
    Trajectory {
        slope: String,
        #[arg(long)]
        svg: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Euclid step counts for every pair up to N, as CSV or PGM.
    Gridmap {
        #[arg(long = "N")]
        size: u64,
        #[arg(long)]
        format: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Render one of the SVG figures.
    Figure {
        #[command(subcommand)]
        figure: Figure,
    },
}

#[derive(Subcommand, Debug)]
enum Figure {
    /// Points fib^k(1/1) approaching the line y = phi x.
    Golden {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Single-sigma family lines through (1|0).
    Family {
        #[arg(long, default_value_t = 8)]
        n1_max: u64,
        #[arg(long, default_value_t = 9)]
        pmax: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Endpoints of all words up to length n_max, colored by length.
    Endpoints {
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit(out: &OutArg, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match &out.out {
        Some(path) => write_atomic(path, bytes)?,
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}

fn parse_positive(token: &str, name: &str) -> Result<BigUint, Failure> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Failure::Usage(format!(
            "invalid {name} `{token}`: expected an unsigned decimal integer"
        )));
    }
    let n = BigUint::parse_bytes(token.as_bytes(), 10).expect("decimal digits");
    if n == BigUint::ZERO {
        return Err(Error::NotPositive("steps argument").into());
    }
    Ok(n)
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Encode { slope } => {
            let s: Slope = slope.parse()?;
            writeln!(stdout, "{}", encode(&s)?)?;
        }
        Command::Decode { word } => {
            let w: Word = word.parse()?;
            writeln!(stdout, "{}", w.apply(&Slope::one()))?;
        }
        Command::Apply { word, slope } => {
            let w: Word = word.parse()?;
            let s: Slope = slope.parse()?;
            writeln!(stdout, "{}", w.apply(&s))?;
        }
        Command::Steps { a, b, trace } => {
            let a = parse_positive(&a, "a")?;
            let b = parse_positive(&b, "b")?;
            let t = euclid_trace(&a, &b)?;
            writeln!(stdout, "{}", t.step_count())?;
            if trace {
                for step in t.steps() {
                    writeln!(stdout, "{step}")?;
                }
            }
        }
        Command::Fib { k, float } => {
            let (word, slope) = fib_power(k);
            write!(stdout, "{slope} {word}")?;
            if float {
                if k == 0 {
                    return Err(Error::NotPositive("k (with --float)").into());
                }
                write!(stdout, " {} {:e}", slope.to_f64(), golden_ratio_error(k)?)?;
            }
            writeln!(stdout)?;
        }
        Command::Enumerate { n, count_only } => {
            if count_only {
                writeln!(stdout, "{}", count_words(n))?;
            } else {
                let mut text = String::new();
                for w in words_of_length(n)? {
                    text.push_str(&w.to_string());
                    text.push('\n');
                }
                stdout.write_all(text.as_bytes())?;
            }
        }
        Command::Endpoints { n } => {
            let set = endpoints_of_length(n)?;
            stdout.write_all(endpoints_csv(&set.points).as_bytes())?;
        }
        Command::Family { n1, pmax } => {
            let points = family_line_points(n1, pmax)?;
            stdout.write_all(endpoints_csv(&points).as_bytes())?;
        }
        Command::Trajectory { slope, svg, out } => {
            let s: Slope = slope.parse()?;
            let t = fold_trajectory(&s)?;
            let doc = if svg {
                render_trajectory_svg(&t, &FigureStyle::default())?
            } else {
                t.to_record()
            };
            emit(&out, doc.as_bytes(), stdout)?;
        }
        Command::Gridmap { size, format, out } => {
            let format: GridFormat = format.parse()?;
            let grid = step_grid(size)?;
            emit(&out, &write_step_grid(&grid, format), stdout)?;
        }
        Command::Figure { figure } => {
            let style = FigureStyle::default();
            let (doc, out) = match figure {
                Figure::Golden { k_max, out } => (render_golden_construction_svg(k_max, &style)?, out),
                Figure::Family { n1_max, pmax, out } => (render_family_svg(n1_max, pmax, &style)?, out),
                Figure::Endpoints { n_max, out } => (render_endpoints_svg(n_max, &style)?, out),
            };
            emit(&out, doc.as_bytes(), stdout)?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if informational { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 1 };
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut stdout = io::BufWriter::new(stdout.lock());
    let code = run(std::env::args_os(), &mut stdout, &mut io::stderr());
    if stdout.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
