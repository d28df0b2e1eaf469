use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spd_core::diagrams::{canonical_diagram, ladder_closure, m_of_w, transposed_chain, CellList, DiagramSet};
use spd_core::pathmodel::{render_ascii, render_tikz, rsp, trace_pipes};
use spd_core::verify::{self, Profile, Suite};
use spd_core::weyl::apply_word;
use spd_core::{Error, SignedPermutation, SkewPipeDream, Weight, Word};

#[derive(Parser)]
#[command(name = "spd", version, about = "Skew pipe dreams for the symplectic group")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a set of diagrams as JSON.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Window, e.g. "-3,-2,1".
        #[arg(long, allow_hyphen_values = true, conflicts_with = "word")]
        w: Option<String>,
        /// Word, e.g. "2,1,3,2,1".
        #[arg(long)]
        word: Option<String>,
        /// Allow the brute-force scan at rank 5.
        #[arg(long)]
        opt_in: bool,
    },
    /// Trace the pipes of a diagram.
    Trace(DiagramArgs),
    /// Draw the tiled pipe diagram.
    Draw {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run agreement checks and print a report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "fast")]
        profile: ProfileArg,
        /// Restrict the polytope suite to one dominant weight, e.g. "1,1".
        #[arg(long)]
        lambda: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// The canonical diagram D(w).
    Dw,
    /// Ladder closure of D(w).
    Closure,
    /// Transposed mitosis chain along --word, or the M chain of --w.
    Mitosis,
    /// Reduced diagrams by brute force.
    Rsp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Tikz,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Thm1,
    Thm2,
    Lemmas,
    Polytope,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Fast,
    Full,
}

#[derive(clap::Args)]
struct DiagramArgs {
    /// Rank; read with the cells from stdin JSON when both are omitted.
    #[arg(long)]
    n: Option<usize>,
    /// JSON list of boxes, e.g. "[[1,1],[2,2]]".
    #[arg(long)]
    cells: Option<String>,
}

#[derive(Serialize)]
struct TraceSummary {
    n: usize,
    #[serde(rename = "v_D")]
    v: Vec<usize>,
    #[serde(rename = "w_D")]
    w: String,
    /// Self-crossings of the pipe leaving through exit `j`, for `j = 1..=n`.
    signs: Vec<usize>,
    reduced: bool,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("bad JSON: {e}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn element(n: usize, w: Option<&str>, word: Option<&str>) -> Result<SignedPermutation, Failure> {
    let w = match (w, word) {
        (Some(w), _) => w.parse::<SignedPermutation>()?,
        (None, Some(word)) => apply_word(&word.parse::<Word>()?, n)?,
        (None, None) => return Err(Failure::Usage("one of --w or --word is required".into())),
    };
    if w.rank() != n {
        return Err(Error::RankMismatch { left: n, right: w.rank() }.into());
    }
    Ok(w)
}

fn read_diagram(args: &DiagramArgs) -> Result<SkewPipeDream, Failure> {
    let list = match (&args.n, &args.cells) {
        (Some(n), Some(cells)) => CellList {
            n: *n,
            cells: serde_json::from_str(cells)?,
        },
        (Some(n), None) => CellList { n: *n, cells: vec![] },
        (None, Some(_)) => return Err(Failure::Usage("--cells needs --n".into())),
        (None, None) => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            serde_json::from_str(&buf)?
        }
    };
    Ok(SkewPipeDream::try_from(&list)?)
}

fn gen(kind: GenKind, n: usize, w: Option<&str>, word: Option<&str>, opt_in: bool) -> Result<String, Failure> {
    let set: DiagramSet = match kind {
        GenKind::Mitosis if word.is_some() && w.is_none() => {
            let word: Word = word.unwrap_or_default().parse()?;
            transposed_chain(&word, n)?
        }
        _ => {
            let w = element(n, w, word)?;
            match kind {
                GenKind::Dw => DiagramSet::from([canonical_diagram(&w)]),
                GenKind::Closure => ladder_closure(&canonical_diagram(&w)),
                GenKind::Mitosis => m_of_w(&w),
                GenKind::Rsp => rsp(&w, opt_in)?,
            }
        }
    };
    let lists: Vec<CellList> = set.iter().map(|d| d.to_cell_list()).collect();
    Ok(serde_json::to_string(&lists)?)
}

fn trace(d: &SkewPipeDream) -> Result<String, Failure> {
    let p = trace_pipes(d)?;
    let n = d.rank();
    let mut signs = vec![0; n];
    for (crossings, v) in p.signs().into_iter().zip(p.v()) {
        signs[v - 1] = crossings;
    }
    let summary = TraceSummary {
        n,
        v: p.v(),
        w: p.w().to_string(),
        signs,
        reduced: p.is_reduced(),
    };
    Ok(serde_json::to_string(&summary)?)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.cmd {
        Cmd::Gen { kind, n, w, word, opt_in } => gen(kind, n, w.as_deref(), word.as_deref(), opt_in),
        Cmd::Trace(args) => trace(&read_diagram(&args)?),
        Cmd::Draw { diagram, format } => {
            let p = trace_pipes(&read_diagram(&diagram)?)?;
            let text = match format {
                Format::Ascii => render_ascii(&p),
                Format::Tikz => render_tikz(&p),
            };
            Ok(text.trim_end().to_string())
        }
        Cmd::Verify { suite, n, profile, lambda } => {
            let suite = match suite {
                SuiteArg::Thm1 => Suite::Thm1,
                SuiteArg::Thm2 => Suite::Thm2,
                SuiteArg::Lemmas => Suite::Lemmas,
                SuiteArg::Polytope => Suite::Polytope,
                SuiteArg::All => Suite::All,
            };
            let profile = match profile {
                ProfileArg::Fast => Profile::Fast,
                ProfileArg::Full => Profile::Full,
            };
            let lambdas = lambda.map(|l| l.parse::<Weight>().map(|w| vec![w])).transpose()?;
            let start = Instant::now();
            let report = verify::run_with_weights(suite, n, profile, lambdas)?;
            // timings stay off stdout so reports compare byte for byte
            eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
            if report.passed() {
                Ok(report.to_string())
            } else {
                println!("{report}");
                Err(Failure::Verification)
            }
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("SPD_THREADS") else {
        return Ok(());
    };
    let threads: usize = v
        .parse()
        .map_err(|_| Failure::Usage(format!("SPD_THREADS must be a number, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
