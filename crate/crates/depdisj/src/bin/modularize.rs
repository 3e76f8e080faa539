//! Reads a document of dependency groups, splits every group into
//! independent subgroups, and writes the smaller document.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use depdisj::{modularize_document, Document, Error, DEFAULT_MAX_GROUP_SIZE};

#[derive(Parser)]
#[command(
    name = "modularize",
    version,
    about = "Splits groups of dependent disjunctions into independent subgroups",
    after_help = "Exit status:\n  \
        0  success\n  \
        1  syntax or I/O error\n  \
        2  empty or ragged group\n  \
        3  group above the size bound\n  \
        4  verification failure"
)]
struct Args {
    /// Input document; `-` or omitted reads standard input
    input: Option<PathBuf>,

    /// Write the output document here instead of standard output
    #[arg(short, long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Print a per-group report of the search to standard error
    #[arg(long)]
    stats: bool,

    /// Re-enumerate every group's solutions and check the split preserves
    /// them
    #[arg(long)]
    verify: bool,

    /// Refuse groups with more than this many disjunctions
    #[arg(long, value_name = "K", default_value_t = DEFAULT_MAX_GROUP_SIZE)]
    max_group_size: usize,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(context: &str, err: io::Error) -> Failure {
        Failure {
            code: 1,
            message: format!("{context}: {err}"),
        }
    }
}

fn main() -> ExitCode {
    match run(&Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("modularize: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(args: &Args) -> Result<(), Failure> {
    let (source, text) = match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            let shown = path.display().to_string();
            let text = fs::read_to_string(path).map_err(|e| Failure::io(&shown, e))?;
            (shown, text)
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::io("<stdin>", e))?;
            ("<stdin>".to_owned(), text)
        }
    };
    let doc = Document::parse(&text).map_err(|e| Failure {
        code: if e.kind.is_degenerate_group() { 2 } else { 1 },
        message: format!("{source}: {e}"),
    })?;
    let result = modularize_document(&doc, args.max_group_size).map_err(|e| Failure {
        code: match e {
            Error::GroupTooLarge { .. } => 3,
            _ => 1,
        },
        message: e.to_string(),
    })?;
    if args.verify {
        result.verify().map_err(|e| Failure {
            code: 4,
            message: e.to_string(),
        })?;
    }
    if args.stats {
        for report in result.stats() {
            eprintln!("{report}");
        }
    }
    let output = result.document().to_string();
    match &args.output {
        Some(path) => {
            fs::write(path, output).map_err(|e| Failure::io(&path.display().to_string(), e))?
        }
        None => io::stdout()
            .write_all(output.as_bytes())
            .map_err(|e| Failure::io("<stdout>", e))?,
    }
    Ok(())
}
