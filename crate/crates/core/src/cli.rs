//! The `knot-shadow` command line.
//!
//! Exit codes: 0 success, 1 domain error (its name on stderr), 2 usage.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumerate::{enumerate_shadows, reduced_connectivity};
use crate::macros::library::MacroLibrary;
use crate::macros::{apply_first, find_embeddings};
use crate::moves::{
    apply_b_all, connected_sum, move_b, move_c, move_c_inverse, reidemeister_applicable, smoothing_components,
    splice_half, splice_half_inverse, trefoil_sites, twisted_splice, MoveError,
};
use crate::pipeline::{
    normalize_tail, reaches_trefoil, simplify_to_trivial, to_trefoil_with, verify_sequence, MoveSequence,
    PipelineOptions,
};
use crate::{canonical_code, emit_gauss, emit_mapcode, export_dot, export_svg, parse_gauss, parse_mapcode, Shadow};

#[derive(Parser, Debug)]
#[command(name = "knot-shadow", version, about = "Knot projections as combinatorial maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Extra crossings allowed while simplifying.
    #[arg(long, global = true, default_value_t = 2)]
    slack: usize,
    /// Extra crossings allowed in fallback searches.
    #[arg(long, global = true, default_value_t = 4)]
    bound: usize,
    /// Directory of `.macro` fixtures replacing the built-in library.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    /// Output format for shadows.
    #[arg(long, global = true, value_enum, default_value_t = Format::Mapcode)]
    format: Format,
    /// Require reduced shadows (verify) or list only reduced ones (enumerate).
    #[arg(long, global = true)]
    reduced: bool,
    /// Largest crossing count for enumerate and connectivity.
    #[arg(long, global = true, default_value_t = 5)]
    max: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a shadow; print its summary.
    Validate { code: String },
    /// List the faces of a shadow.
    Faces { code: String },
    /// Report reducibility and the reducible crossings.
    Reduced { code: String },
    /// Apply one move and print the result.
    ///
    /// Moves: `A d1 d2`, `A- k`, `twist d1 d2 m`, `B k`, `B-all`, `C e`,
    /// `C- i`, `csum <code> e1 e2`, `R1+ d`, `R2+ d1 d2`, `R1- d`, `R2- d`,
    /// `R3 d`, `smooth k`, `macro <name>`.
    Apply {
        code: String,
        #[arg(value_name = "MOVE")]
        mv: String,
        args: Vec<String>,
    },
    /// Reidemeister simplification to the trivial projection.
    Simplify { code: String },
    /// A-move sequence from a reduced shadow to the trefoil, as a seqfile.
    ToTrefoil { code: String },
    /// Replay a seqfile.
    Verify { seqfile: PathBuf },
    /// Shadows per crossing count up to `--max`.
    Enumerate,
    /// Reduced A-move graph up to `--max`, with trefoil routes as witnesses.
    Connectivity,
    /// Print a shadow in `--format`.
    Export { code: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Mapcode,
    Gauss,
    Dot,
    Svg,
}

/// A failure reported with exit code 1.
#[derive(Debug)]
struct DomainError {
    name: String,
    message: String,
}

impl DomainError {
    fn new(name: impl Into<String>, message: impl ToString) -> Self {
        DomainError {
            name: name.into(),
            message: message.to_string(),
        }
    }
}

impl From<MoveError> for DomainError {
    fn from(e: MoveError) -> Self {
        DomainError::new(e.name(), e)
    }
}

impl From<crate::pipeline::PipelineError> for DomainError {
    fn from(e: crate::pipeline::PipelineError) -> Self {
        DomainError::new(e.name(), e)
    }
}

impl From<crate::macros::MacroError> for DomainError {
    fn from(e: crate::macros::MacroError) -> Self {
        DomainError::new(e.name(), e)
    }
}

impl From<crate::CodeError> for DomainError {
    fn from(e: crate::CodeError) -> Self {
        DomainError::new(e.name(), e)
    }
}

fn io_error(path: &Path, e: std::io::Error) -> DomainError {
    DomainError::new("IoError", format!("{}: {e}", path.display()))
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{out}");
            0
        }
        Err(e) => {
            eprintln!("{}: {}", e.name, e.message);
            1
        }
    }
}

/// A shadow from a map code, a Gauss word, or a file holding either.
fn read_shadow(arg: &str) -> Result<Shadow, DomainError> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| io_error(path, e))?
    } else {
        arg.to_string()
    };
    let text = text.trim();
    if text.starts_with("shadow") {
        Ok(parse_mapcode(text)?)
    } else if text.starts_with("<svg") || text.starts_with("<?xml") {
        let code = crate::export::svg_mapcode(text).ok_or_else(|| DomainError::new("SyntaxError", "no map code in svg"))?;
        Ok(parse_mapcode(code)?)
    } else if text.starts_with("//") {
        let code = text.lines().next().unwrap().trim_start_matches('/').trim();
        Ok(parse_mapcode(code)?)
    } else if text.starts_with("gauss:") {
        Ok(parse_gauss(text)?)
    } else {
        Ok(parse_gauss(&format!("gauss: {text}"))?)
    }
}

fn render(s: &Shadow, format: Format) -> String {
    let mut out = match format {
        Format::Mapcode => emit_mapcode(s),
        Format::Gauss => emit_gauss(s),
        Format::Dot => export_dot(s),
        Format::Svg => export_svg(s),
    };
    if !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

fn number(args: &[String], i: usize, what: &str) -> Result<usize, DomainError> {
    let a = args
        .get(i)
        .ok_or_else(|| DomainError::new("SyntaxError", format!("missing argument {what}")))?;
    a.parse()
        .map_err(|_| DomainError::new("SyntaxError", format!("{what} must be a nonnegative integer, got `{a}`")))
}

fn library(cli: &Cli) -> Result<MacroLibrary, DomainError> {
    match &cli.fixtures {
        Some(dir) => Ok(MacroLibrary::load_dir(dir)?),
        None => Ok(MacroLibrary::builtin().clone()),
    }
}

fn execute(cli: &Cli) -> Result<String, DomainError> {
    match &cli.command {
        Command::Validate { code } => {
            let s = read_shadow(code)?;
            Ok(format!(
                "ok crossings={} faces={} reduced={}\ncanonical {}\n{}\n",
                s.crossings(),
                s.faces().len(),
                s.is_reduced(),
                canonical_code(&s),
                emit_mapcode(&s)
            ))
        }
        Command::Faces { code } => {
            let s = read_shadow(code)?;
            let mut out = String::new();
            for f in s.faces() {
                let darts: Vec<String> = f.boundary.iter().map(usize::to_string).collect();
                out.push_str(&format!("face {} degree {}: {}\n", f.id, f.degree(), darts.join(" ")));
            }
            Ok(out)
        }
        Command::Reduced { code } => {
            let s = read_shadow(code)?;
            let r = s.reducible_crossings();
            Ok(if r.is_empty() {
                "reduced\n".to_string()
            } else {
                let ks: Vec<String> = r.iter().map(usize::to_string).collect();
                format!("reducible at {}\n", ks.join(" "))
            })
        }
        Command::Apply { code, mv, args } => apply(cli, &read_shadow(code)?, mv, args),
        Command::Simplify { code } => {
            let s = read_shadow(code)?;
            let t = normalize_tail(&simplify_to_trivial(&s, cli.slack)?);
            let mut out = format!("start {}\n", emit_mapcode(&s));
            for (st, sh) in t.steps.iter().zip(&t.shadows[1..]) {
                out.push_str(&format!("{st} -> {}\n", emit_mapcode(sh)));
            }
            out.push_str(&format!("steps {} peak {}\n", t.steps.len(), t.peak()));
            Ok(out)
        }
        Command::ToTrefoil { code } => {
            let s = read_shadow(code)?;
            let lib = library(cli)?;
            let opts = PipelineOptions {
                slack: cli.slack,
                bound: cli.bound,
                library: &lib,
            };
            let route = to_trefoil_with(&s, &opts)?;
            verify_sequence(&route.sequence, true)?;
            Ok(route.sequence.to_seqfile())
        }
        Command::Verify { seqfile } => {
            let text = std::fs::read_to_string(seqfile).map_err(|e| io_error(seqfile, e))?;
            let seq = MoveSequence::from_seqfile(&text)?;
            let report = verify_sequence(&seq, cli.reduced)?;
            Ok(format!(
                "ok steps={} delta={:+} max_crossings={} end={}\n",
                seq.steps.len(),
                seq.delta(),
                report.max_crossings(),
                canonical_code(&seq.end)
            ))
        }
        Command::Enumerate => {
            let cat = enumerate_shadows(cli.max);
            let mut out = String::new();
            for n in 0..=cli.max {
                let st = cat.stratum(n);
                let reduced = st.values().filter(|e| e.reduced).count();
                out.push_str(&format!("# n={n} shadows={} reduced={reduced}\n", st.len()));
                for e in st.values().filter(|e| !cli.reduced || e.reduced) {
                    out.push_str(&render(&e.rep, cli.format));
                }
            }
            Ok(out)
        }
        Command::Connectivity => {
            let lib = library(cli)?;
            let opts = PipelineOptions {
                slack: cli.slack,
                bound: cli.bound,
                library: &lib,
            };
            let witness = |s: &Shadow| reaches_trefoil(s, &opts);
            Ok(reduced_connectivity(cli.max, Some(&witness)).to_string())
        }
        Command::Export { code } => Ok(render(&read_shadow(code)?, cli.format)),
    }
}

fn apply(cli: &Cli, s: &Shadow, mv: &str, args: &[String]) -> Result<String, DomainError> {
    let result = match mv {
        "A" => splice_half(s, number(args, 0, "d1")?, number(args, 1, "d2")?)?,
        "A-" | "Ainv" => splice_half_inverse(s, number(args, 0, "k")?)?,
        "twist" => twisted_splice(s, number(args, 0, "d1")?, number(args, 1, "d2")?, number(args, 2, "m")?)?,
        "B" => move_b(s, number(args, 0, "k")?)?,
        "B-all" => apply_b_all(s),
        "C" => move_c(s, number(args, 0, "e")?)?,
        "C-" => {
            let i = number(args, 0, "site")?;
            let sites = trefoil_sites(s);
            let site = sites.get(i).ok_or(MoveError::NotApplicable)?;
            move_c_inverse(s, site)?
        }
        "csum" => {
            let q = read_shadow(args.first().map(String::as_str).unwrap_or(""))?;
            connected_sum(s, &q, number(args, 1, "e1")?, number(args, 2, "e2")?)?
        }
        "smooth" => {
            let (a, b) = smoothing_components(s, number(args, 0, "k")?)?;
            return Ok(format!("components {a} {b}\n"));
        }
        "R1+" | "R1-" | "R2+" | "R2-" | "R3" => {
            let d1 = number(args, 0, "d")?;
            let d2 = if mv == "R2+" { number(args, 1, "d2")? } else { d1 };
            let step = reidemeister_applicable(s)
                .into_iter()
                .find(|st| st.to_string().starts_with(&format!("{mv} ")) && st.anchor.0 == d1 && (mv != "R2+" || st.anchor.1 == d2))
                .ok_or(MoveError::NotApplicable)?;
            crate::moves::reidemeister_apply(s, &step)?
        }
        "macro" => {
            let lib = library(cli)?;
            let name = args.first().ok_or_else(|| DomainError::new("SyntaxError", "missing macro name"))?;
            let t = lib
                .get(name)
                .ok_or_else(|| DomainError::new("MacroMissing", format!("no macro named `{name}`")))?;
            let all: Vec<usize> = (0..s.crossings()).collect();
            if find_embeddings(s, t, &all).is_empty() {
                return Err(crate::macros::MacroError::NoOccurrence.into());
            }
            let (_, out, _) = apply_first(s, [t], &all, |_| true)
                .ok_or(crate::macros::MacroError::RegionCollision(0))?;
            out
        }
        other => return Err(DomainError::new("SyntaxError", format!("unknown move `{other}`"))),
    };
    Ok(render(&result, cli.format))
}
