use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hfold::suites::h_kind;
use hfold::{exit, Format, Report, RingSel, Selection, Suite, TableKind, DEFAULT_SEED};
use hfold_roots::Kind;

#[derive(Parser)]
#[command(name = "hfold", version, about = "Foldings onto H3 and H4: tables and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a table
    Tables {
        #[arg(value_enum)]
        table: TableKind,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite and write a JSON report
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        common: Common,
        /// Ring for the Steinberg relations: z, z<n>, poly
        #[arg(long, default_value = "poly")]
        ring: RingSel,
    },
}

#[derive(Args)]
struct Common {
    /// H system: h2, h3, h4
    #[arg(long)]
    system: Vec<Kind>,
    /// Source kind: a4, d6, e8 (same as the system it folds onto)
    #[arg(long)]
    kind: Vec<Kind>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Output file (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn systems(&self) -> Result<Vec<Kind>, String> {
        let mut out = Vec::new();
        for &k in self.system.iter().chain(&self.kind) {
            let h = h_kind(k).ok_or_else(|| format!("unsupported selector {}", k.to_string().to_lowercase()))?;
            if !out.contains(&h) {
                out.push(h);
            }
        }
        Ok(out)
    }
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), std::io::Error> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn seed() -> Result<u64, String> {
    match std::env::var("HFOLD_SEED") {
        Ok(s) => s.parse().map_err(|_| format!("HFOLD_SEED must be an unsigned integer, got `{s}`")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Tables { common, .. } | Command::Verify { common, .. } => common,
    };
    if let Some(n) = common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::INVALID_SELECTOR as u8);
        }
    }
    let code = match run(&cli.command, common) {
        Ok(c) => c,
        Err((c, msg)) => {
            eprintln!("error: {msg}");
            c
        }
    };
    ExitCode::from(code as u8)
}

fn run(command: &Command, common: &Common) -> Result<i32, (i32, String)> {
    let invalid = |m: String| (exit::INVALID_SELECTOR, m);
    let systems = common.systems().map_err(invalid)?;
    match command {
        Command::Tables { table, .. } => {
            let h = match systems.as_slice() {
                [h] => *h,
                [] => Kind::H3,
                _ => return Err(invalid("tables take a single system".into())),
            };
            let t = hfold::build(*table, h).map_err(|e| invalid(e.to_string()))?;
            let text = t.render(common.format.unwrap_or_default());
            write_out(&common.out, &text).map_err(|e| (exit::IO, e.to_string()))?;
            Ok(exit::PASS)
        }
        Command::Verify { suite, ring, .. } => {
            if common.format.is_some_and(|f| f != Format::Json) {
                return Err(invalid("reports are written as json".into()));
            }
            let sel = Selection { systems, ring: *ring, seed: seed().map_err(invalid)? };
            sel.validate(*suite).map_err(|e| invalid(e.to_string()))?;
            let start = Instant::now();
            let checks = hfold::run(*suite, &sel).map_err(|e| invalid(e.to_string()))?;
            let report = Report::new(suite.to_string(), checks, start.elapsed());
            for c in &report.checks {
                eprintln!("[{}] {}", c.status, c.id);
            }
            let failed = report.checks.iter().filter(|c| c.status != "pass").count();
            eprintln!("{}: {} checks, {failed} failed, {:.1} s", report.suite, report.checks.len(), report.elapsed);
            write_out(&common.out, &report.to_json()).map_err(|e| (exit::IO, e.to_string()))?;
            Ok(if report.passed() { exit::PASS } else { exit::FAILED_CHECK })
        }
    }
}
