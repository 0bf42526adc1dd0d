use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use fintop::fpp::{has_fpp, Method as FppMethod};
use fintop::homotopy::core;
use fintop::{CSpace, Family};
use fintop_cli::format::{generate, load, serialize_poset, to_json, PosetDocument};
use fintop_cli::{dot, render, verify, Error};

#[derive(Parser)]
#[command(name = "fintop", version, about = "Finite posets as finite T0-spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    U,
    F,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Criterion,
}

#[derive(Subcommand)]
enum Command {
    /// Sizes, extremal elements, beat points and contractibility.
    Info { file: PathBuf },
    /// The U-, F- or C-construction as a region listing or DOT.
    Cconstr {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "c")]
        part: Part,
        #[arg(long)]
        dot: bool,
    },
    /// Decide the fixed point property. Exits 0 if it holds, 1 if not.
    Fpp {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// The core, in the text format.
    Core { file: PathBuf },
    /// Write a catalog space.
    Gen {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// The Grothendieck construction over U(X) and its identity checks.
    Grothendieck { file: PathBuf },
    /// The Hasse diagram in DOT.
    Dot { file: PathBuf },
    /// Run the reproduction suite. Exits 0 iff every check passes.
    VerifyPaper {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

fn open(path: &Path) -> Result<(PosetDocument, Arc<fintop::FinitePoset>), Error> {
    let doc = load(path)?;
    let p = Arc::new(doc.to_poset()?);
    Ok((doc, p))
}

fn write_out(output: Option<&Path>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source })
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Info { file } => {
            let (doc, p) = open(&file)?;
            print!("{}", render::info(&doc.name, &p));
        }
        Command::Cconstr { file, part, dot } => {
            let (doc, p) = open(&file)?;
            let family = match part {
                Part::U => Family::U,
                Part::F => Family::F,
                Part::C => Family::C,
            };
            let c = CSpace::build(&p, family);
            if dot {
                let name = format!("{}({})", render::family_name(family), doc.name);
                print!("{}", dot::cspace_dot(&name, &c));
            } else {
                print!("{}", render::cspace(&c));
            }
        }
        Command::Fpp { file, method } => {
            let (_, p) = open(&file)?;
            let method = match method {
                Method::Auto => FppMethod::Auto,
                Method::Brute => FppMethod::Brute,
                Method::Criterion => FppMethod::Criterion,
            };
            let cert = has_fpp(&p, method)?;
            print!("{}", render::certificate(&cert));
            return Ok(if cert.has_fpp() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Core { file } => {
            let (doc, p) = open(&file)?;
            let name = if doc.name.is_empty() { "core".to_string() } else { format!("core of {}", doc.name) };
            print!("{}", serialize_poset(&PosetDocument::from_poset(&name, &core(&p))));
        }
        Command::Gen { name, params, output, json } => {
            let doc = generate(&name, &params)?;
            let text = if json { to_json(&doc) } else { serialize_poset(&doc) };
            write_out(output.as_deref(), &text)?;
        }
        Command::Grothendieck { file } => {
            let (_, p) = open(&file)?;
            print!("{}", render::grothendieck(&p));
        }
        Command::Dot { file } => {
            let (doc, p) = open(&file)?;
            print!("{}", dot::poset_dot(&doc.name, &p));
        }
        Command::VerifyPaper { seed } => {
            let mut all = true;
            for c in verify::criteria() {
                let outcome = verify::run(&c, seed);
                println!("{}", outcome.line());
                all &= outcome.passed;
            }
            return Ok(if all { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
