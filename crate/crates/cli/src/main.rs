//! `interbraid` command-line front end.
//!
//! Every subcommand prints the JSON serialization of the corresponding
//! library result, or a human-readable rendering with `--plain`.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use interbraid::search::{self, SearchConfig};
use interbraid::{
    cabling, garside, interchange, links, BraidError, BraidWord, CableWidths, Sign, StrandSet,
};
use serde::Serialize;

use render::Plain;

#[derive(Parser)]
#[command(
    name = "interbraid",
    version,
    about = "Braid-group experiments on interchange braids"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    /// Print nothing; `equal` and `check` report their verdict in the exit code.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

/// A single braid word, or a file of them (one per line).
#[derive(Args)]
struct WordInput {
    /// Braid word, e.g. "4: 2 1 3 2".
    #[arg(required_unless_present = "file")]
    word: Option<String>,

    /// Read one word per line and emit one result per line.
    #[arg(long, conflicts_with = "word")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Garside normal form.
    Normalize(WordInput),
    /// Whether two words represent the same braid.
    Equal { left: String, right: String },
    /// Permutation of the strands (1-based images).
    Perm(WordInput),
    /// Delete strands, named by initial position.
    Delete {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_delimiter = ',', required = true)]
        strands: Vec<usize>,
    },
    /// Rotate by 180 degrees in the plane.
    Rotate(WordInput),
    /// Replace strands by parallel bundles.
    Cable {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_delimiter = ',', required = true)]
        widths: Vec<usize>,
    },
    /// The derived braids L, R, L', R' and both associativity verdicts.
    Derive(WordInput),
    /// Full interchanging check.
    Check(WordInput),
    /// Locate a braid in the family b_{n±}.
    Classify(WordInput),
    /// Cheap obstruction screens.
    Screens(WordInput),
    /// Hexagon checks for c^k (k odd).
    #[command(allow_negative_numbers = true)]
    Hexagon { k: i64 },
    /// Components and linking numbers of the closure.
    Closure(WordInput),
    /// Non-conjugacy of (σ₁σ₃)^k and (σ₂σ₁σ₃σ₂)^k (k odd).
    #[command(allow_negative_numbers = true)]
    Obstruction { k: i64 },
    /// Exhaustive search over words in B₄.
    Search {
        #[arg(long)]
        max_len: usize,
        #[arg(long, env = "INTERBRAID_WORKERS")]
        workers: Option<usize>,
        /// Run the B₆ checks on every candidate class.
        #[arg(long)]
        no_screens: bool,
        /// Also write the JSON-lines report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample Lb = Rb on (σ₂σ₁σ₃σ₂)^h σ₂ σ₁^a σ₃^c.
    CosetSample {
        #[arg(long, default_value_t = 2)]
        max_h: i64,
        #[arg(long, default_value_t = 2)]
        max_k: i64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The word of b_{n±}.
    Family { n: u32, sign: Sign },
}

enum Failure {
    Domain(String),
    /// A verdict of `false` under `--quiet`.
    Verdict,
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

struct Output {
    plain: bool,
    quiet: bool,
    out: io::StdoutLock<'static>,
}

impl Output {
    fn emit<T: Serialize + Plain>(&mut self, value: &T) -> Result<(), Failure> {
        if self.quiet {
            return Ok(());
        }
        let text = if self.plain {
            value.plain()
        } else {
            serde_json::to_string(value).expect("results serialize")
        };
        writeln!(self.out, "{text}")?;
        Ok(())
    }

    fn emit_raw(&mut self, text: &str) -> Result<(), Failure> {
        if !self.quiet {
            self.out.write_all(text.as_bytes())?;
        }
        Ok(())
    }
}

fn parse_word(text: &str) -> Result<BraidWord, Failure> {
    text.parse().map_err(Failure::from)
}

/// Applies `f` to the word or to every non-blank line of the file; returns
/// whether every verdict was true.
fn each_word<T, F>(input: &WordInput, out: &mut Output, f: F) -> Result<bool, Failure>
where
    T: Serialize + Plain,
    F: Fn(&BraidWord) -> Result<(T, bool), BraidError>,
{
    let run = |text: &str, out: &mut Output| -> Result<bool, Failure> {
        let (value, verdict) = f(&parse_word(text)?)?;
        out.emit(&value)?;
        Ok(verdict)
    };
    match (&input.word, &input.file) {
        (Some(word), _) => run(word, out),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            let mut all = true;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                all &= run(line, out).map_err(|e| match e {
                    Failure::Domain(msg) => {
                        Failure::Domain(format!("{}:{}: {msg}", path.display(), i + 1))
                    }
                    other => other,
                })?;
            }
            Ok(all)
        }
        (None, None) => unreachable!("clap requires a word or a file"),
    }
}

fn plain_value<T>(
    f: impl Fn(&BraidWord) -> Result<T, BraidError>,
) -> impl Fn(&BraidWord) -> Result<(T, bool), BraidError> {
    move |w| f(w).map(|v| (v, true))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = Output {
        plain: cli.plain,
        quiet: cli.quiet,
        out: io::stdout().lock(),
    };
    let verdict = match cli.command {
        Command::Normalize(input) => each_word(
            &input,
            &mut out,
            plain_value(|w| Ok(garside::normal_form(w))),
        )?,
        Command::Equal { left, right } => {
            let equal = garside::equals(&parse_word(&left)?, &parse_word(&right)?)?;
            out.emit(&equal)?;
            equal
        }
        Command::Perm(input) => each_word(&input, &mut out, plain_value(|w| Ok(w.perm())))?,
        Command::Delete { input, strands } => {
            let dead = StrandSet::new(strands);
            each_word(&input, &mut out, plain_value(|w| w.delete_strands(&dead)))?
        }
        Command::Rotate(input) => each_word(&input, &mut out, plain_value(|w| Ok(w.rotate180())))?,
        Command::Cable { input, widths } => {
            let widths = CableWidths::new(widths)?;
            each_word(
                &input,
                &mut out,
                plain_value(|w| cabling::cable(w, &widths)),
            )?
        }
        Command::Derive(input) => each_word(&input, &mut out, plain_value(cabling::derive_all))?,
        Command::Check(input) => each_word(&input, &mut out, |w| {
            interchange::is_interchanging(w).map(|r| {
                let verdict = r.interchanging;
                (r, verdict)
            })
        })?,
        Command::Classify(input) => {
            each_word(&input, &mut out, plain_value(interchange::classify))?
        }
        Command::Screens(input) => each_word(
            &input,
            &mut out,
            plain_value(interchange::obstruction_screens),
        )?,
        Command::Hexagon { k } => {
            out.emit(&interchange::hexagon_report(k)?)?;
            true
        }
        Command::Closure(input) => each_word(
            &input,
            &mut out,
            plain_value(|w| Ok(links::closure_summary(w))),
        )?,
        Command::Obstruction { k } => {
            out.emit(&links::obstruction_report(k)?)?;
            true
        }
        Command::Search {
            max_len,
            workers,
            no_screens,
            output,
        } => {
            let mut cfg = SearchConfig::new(max_len);
            if let Some(workers) = workers {
                cfg.workers = workers;
            }
            cfg.screens_enabled = !no_screens;
            cfg.output_path = output;
            let report = search::run_search(&cfg)?;
            if cli.plain {
                out.emit(&report)?;
            } else {
                out.emit_raw(&report.to_json_lines())?;
            }
            true
        }
        Command::CosetSample {
            max_h,
            max_k,
            output,
        } => {
            let report = search::coset_property_sample(max_h, max_k)?;
            if let Some(path) = output {
                let json = serde_json::to_string(&report).expect("results serialize");
                fs::write(path, json + "\n")?;
            }
            out.emit(&report)?;
            true
        }
        Command::Family { n, sign } => {
            out.emit(&interchange::family(n, sign))?;
            true
        }
    };
    if cli.quiet && !verdict {
        return Err(Failure::Verdict);
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("interbraid: {msg}");
            ExitCode::from(1)
        }
    }
}
