//! The `tkh` command line. `run` is the whole program minus process exit,
//! so tests can drive it in-process.

pub mod report;

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use tkh_core::{
    apply_r1, c_graded_ranks, detect, homology, parse_diagram, validate_diagram, Chirality, Error,
    HomologyResult, R1Site, Ring, TorusDiagram, Winding,
};

use report::{
    CGradedDoc, CRankDoc, CommandEcho, DetectionDoc, DiagramDoc, HomologyDoc, Payload,
    ReportDocument, ValidationDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "tkh",
    version,
    about = "Khovanov skein homology of links in the thickened torus"
)]
struct Cli {
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded homology table.
    Compute {
        /// Diagram file, or `-` for stdin.
        file: String,
        #[arg(long, value_enum, default_value_t = Coeff::Z2)]
        coeff: Coeff,
        /// Also print ranks graded by pairing with the class `p,q`.
        #[arg(long, value_name = "P,Q", allow_hyphen_values = true)]
        c: Option<String>,
        /// Split rows by homological degree.
        #[arg(long)]
        hom_degree: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a diagram file; exit 1 if it is not a valid torus diagram.
    Validate {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Support and rank verdicts over Z/2.
    Detect {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Exit 0 if the skein-graded tables agree, 3 otherwise.
    Compare {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Coeff::Z2)]
        coeff: Coeff,
        #[arg(long)]
        json: bool,
    },
    /// Insert a Reidemeister I kink and print the new diagram.
    R1 {
        file: String,
        #[command(flatten)]
        site: SiteArgs,
        #[arg(long, value_enum)]
        chirality: ChiralityArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SiteArgs {
    /// Edge index, in file order after canonicalization.
    #[arg(long)]
    edge: Option<usize>,
    /// Free loop index.
    #[arg(long = "loop")]
    free_loop: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Coeff {
    Z2,
    Z,
}

impl From<Coeff> for Ring {
    fn from(c: Coeff) -> Ring {
        match c {
            Coeff::Z2 => Ring::Z2,
            Coeff::Z => Ring::Z,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChiralityArg {
    Positive,
    Negative,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::DuplicateSlot { .. }
            | Error::SlotOutOfRange { .. }
            | Error::CrossingOutOfRange { .. }
            | Error::InvalidDiagram(_)
            | Error::NonPrimitiveClass { .. }
            | Error::IndexOutOfRange { .. } => EXIT_INPUT,
            Error::TooManyCrossings { .. } | Error::ResourceCap(_) => EXIT_RESOURCE,
            Error::NonParallelCircles(..)
            | Error::CaseAnalysisViolation { .. }
            | Error::InvariantViolation(_)
            | Error::WrongRing => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };

    // Worker threads cannot borrow the caller's reader, so stdin is read up front.
    let mut piped = Vec::new();
    if echo.iter().any(|a| a == "-") {
        if let Err(e) = stdin.read_to_end(&mut piped) {
            let _ = writeln!(err, "error: stdin: {e}");
            return EXIT_INPUT;
        }
    }
    let outcome = pool.install(|| execute(cli.command, echo, &mut piped.as_slice()));
    match outcome {
        Ok((doc, json, code)) => {
            let text = if json {
                serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
            } else {
                report::render_text(&doc)
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_source(path: &str, stdin: &mut &[u8]) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::input(format!("{path}: {e}")))?;
    Ok(text)
}

fn load(path: &str, stdin: &mut &[u8]) -> Result<TorusDiagram, Failure> {
    let text = read_source(path, stdin)?;
    parse_diagram(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

/// Loads a diagram and rejects it unless it validates.
fn load_valid(path: &str, stdin: &mut &[u8]) -> Result<TorusDiagram, Failure> {
    let diag = load(path, stdin)?;
    let report = validate_diagram(&diag);
    if !report.is_valid() {
        let msgs: Vec<String> = report
            .errors
            .iter()
            .map(|f| format!("[{}] {}", f.code, f.message))
            .collect();
        return Err(Failure::input(format!(
            "{path}: invalid diagram: {}",
            msgs.join("; ")
        )));
    }
    Ok(diag)
}

fn parse_class(s: &str) -> Result<Winding, Failure> {
    let bad = || Failure::input(format!("--c expects `p,q`, got `{s}`"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    Ok(Winding::new(p, q))
}

fn document(name: &str, args: Vec<String>, digest: String, payload: Payload) -> ReportDocument {
    ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input_digest: digest,
        command: CommandEcho {
            name: name.to_string(),
            args,
        },
        payload,
    }
}

fn homology_doc(diag: &TorusDiagram, r: &HomologyResult, by_hom: bool) -> HomologyDoc {
    HomologyDoc {
        ring: r.ring.to_string(),
        crossings: diag.crossing_count(),
        rows: report::homology_rows(r, by_hom),
        total_rank: r.total_betti(),
        c_graded: None,
    }
}

type Outcome = Result<(ReportDocument, bool, i32), Failure>;

fn execute(command: Command, echo: Vec<String>, stdin: &mut &[u8]) -> Outcome {
    match command {
        Command::Compute {
            file,
            coeff,
            c,
            hom_degree,
            json,
        } => {
            let c = c.as_deref().map(parse_class).transpose()?;
            let diag = load_valid(&file, stdin)?;
            let r = homology(&diag, coeff.into())?;
            let mut doc = homology_doc(&diag, &r, hom_degree);
            if let Some(c) = c {
                let ranks = c_graded_ranks(&r, c)?;
                doc.c_graded = Some(CGradedDoc {
                    c: [c.a, c.b],
                    ranks: ranks
                        .into_iter()
                        .map(|(grading, rank)| CRankDoc { grading, rank })
                        .collect(),
                });
            }
            let digest = report::digest(&[&diag]);
            Ok((
                document("compute", echo, digest, Payload::Homology(doc)),
                json,
                EXIT_OK,
            ))
        }
        Command::Validate { file, json } => {
            let diag = load(&file, stdin)?;
            let v = ValidationDoc::new(&validate_diagram(&diag));
            let code = if v.valid { EXIT_OK } else { EXIT_INPUT };
            let digest = report::digest(&[&diag]);
            Ok((
                document("validate", echo, digest, Payload::Validation(v)),
                json,
                code,
            ))
        }
        Command::Detect { file, json } => {
            let diag = load_valid(&file, stdin)?;
            let r = homology(&diag, Ring::Z2)?;
            let d = DetectionDoc::new(&detect(&r)?);
            let digest = report::digest(&[&diag]);
            Ok((
                document("detect", echo, digest, Payload::Detection(d)),
                json,
                EXIT_OK,
            ))
        }
        Command::Compare { a, b, coeff, json } => {
            if a == "-" && b == "-" {
                return Err(Failure::input("only one input can come from stdin"));
            }
            let da = load_valid(&a, stdin)?;
            let db = load_valid(&b, stdin)?;
            let ra = homology(&da, coeff.into())?;
            let rb = homology(&db, coeff.into())?;
            let cmp = report::compare(&ra, &rb);
            let code = if cmp.equal { EXIT_OK } else { EXIT_MISMATCH };
            let digest = report::digest(&[&da, &db]);
            Ok((
                document("compare", echo, digest, Payload::Comparison(cmp)),
                json,
                code,
            ))
        }
        Command::R1 {
            file,
            site,
            chirality,
            json,
        } => {
            let diag = load_valid(&file, stdin)?.canonical();
            let site = match (site.edge, site.free_loop) {
                (Some(e), _) => R1Site::Edge(e),
                (None, Some(l)) => R1Site::Loop(l),
                (None, None) => unreachable!("clap requires one site"),
            };
            let chirality = match chirality {
                ChiralityArg::Positive => Chirality::Positive,
                ChiralityArg::Negative => Chirality::Negative,
            };
            let out = apply_r1(&diag, site, chirality)?;
            let digest = report::digest(&[&diag]);
            let d = DiagramDoc {
                crossings: out.crossing_count(),
                text: out.serialize(),
            };
            Ok((
                document("r1", echo, digest, Payload::Diagram(d)),
                json,
                EXIT_OK,
            ))
        }
    }
}

/// Entry point for the binary.
pub fn main_with_stdio() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
