use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use valsat::cli::{run, Options, Task};
use valsat::DomainSpec;

/// V-saturation and syzygies over V[X] for valuation domains.
#[derive(Debug, Parser)]
#[command(name = "valsat", version)]
struct Args {
    /// Instance file, or `-` for standard input.
    instance: PathBuf,
    /// saturate-free, saturate-vx or syzygy.
    #[arg(long)]
    task: Option<Task>,
    /// zp:<p>, rft0:<q|p> or field:<q|p>.
    #[arg(long)]
    domain: Option<DomainSpec>,
    /// Cross-check the result with the brute-force oracle.
    #[arg(long)]
    verify: bool,
    /// Degree of the slice used by --verify.
    #[arg(long, value_name = "D")]
    degree_bound: Option<usize>,
    #[arg(long, value_name = "N")]
    max_iter: Option<usize>,
    /// Write result.txt, trace.csv, ... into this directory.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Print pivot diagrams of every iteration.
    #[arg(long)]
    diagram: bool,
}

fn read_instance(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_instance(&args.instance) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", args.instance.display());
            return ExitCode::from(1);
        }
    };
    let opts = Options {
        task: args.task,
        domain: args.domain,
        verify: args.verify,
        degree_bound: args.degree_bound,
        max_iter: args.max_iter,
        diagram: args.diagram,
    };
    let report = match run(&text, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match &args.out {
        Some(dir) => {
            if let Err(e) = report.write_dir(dir) {
                eprintln!("error: {}: {e}", dir.display());
                return ExitCode::from(1);
            }
            print!("{}", report.document);
        }
        None => print!("{}", report.stdout_text()),
    }
    if let Some(v) = report.verdict {
        eprintln!("verify: {v}");
    }
    ExitCode::from(report.exit_code() as u8)
}
