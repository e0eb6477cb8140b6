use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use trisum::output::text_line;
use trisum::verify::Summary;
use trisum::{run_verification, write_records, Format, IdentityId, VerifyOptions};
use trisum_core::identities::{TABLE_1, TABLE_2, THM3_TRIPLES};
use trisum_core::local::alpha2_of;
use trisum_core::reductions::reduce;
use trisum_core::{Constraint, ParityClass, TernaryQuadForm, TriangularTriple};

/// Exact counts for ternary quadratic forms and sums of triangular numbers.
#[derive(Parser)]
#[command(name = "trisum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print r(f, n), optionally restricted to one parity class.
    Count {
        /// Form literal "q11,q22,q33;q23,q13,q12" (literal coefficients).
        #[arg(long)]
        form: String,
        #[arg(long)]
        n: u64,
        /// Parity class such as "1,1,1".
        #[arg(long)]
        parity: Option<String>,
    },
    /// Print t(a,b,c;n).
    Triangular { a: u64, b: u64, c: u64, n: u64 },
    /// Print the reduction of t(a,b,c;n) to representation counts.
    Reduce { a: u64, b: u64, c: u64 },
    /// Check an identity over a range; exit 1 if any instance fails.
    Verify {
        /// lemma21, lemma22, lemma31, lemma32, thm1 .. thm5, siegel or alpha-ratio
        id: IdentityId,
        /// Largest n (or m) scanned; defaults depend on the identity.
        #[arg(long)]
        nmax: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Worker threads (defaults to the available parallelism).
        #[arg(long)]
        workers: Option<usize>,
        /// Also report n outside the identity's claimed domain.
        #[arg(long)]
        force: bool,
    },
    /// Print the 2-adic density of x^2+y^2+6z^2 at an even N.
    Alpha2 {
        #[arg(name = "N")]
        n: u64,
    },
    /// List the triples covered by the identity families.
    Tables,
}

/// A failed precondition or parse: exit code 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Usage(e))
            if e.downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Usage> {
    let mut stdout = io::stdout().lock();
    match command {
        Command::Count { form, n, parity } => {
            let f: TernaryQuadForm = form.parse().context("invalid form literal")?;
            let constraints: Vec<Constraint<3>> = match parity {
                Some(p) => {
                    let p: ParityClass<3> = p.parse().context("invalid parity class")?;
                    vec![p.into()]
                }
                None => vec![],
            };
            writeln!(stdout, "{}", f.count_constrained(n, &constraints)?)?;
        }
        Command::Triangular { a, b, c, n } => {
            let tt = TriangularTriple::new(a, b, c)?;
            writeln!(stdout, "{}", tt.count_direct(n)?)?;
        }
        Command::Reduce { a, b, c } => {
            let tt = TriangularTriple::new(a, b, c)?;
            writeln!(stdout, "{}", reduce(&tt)?)?;
        }
        Command::Alpha2 { n } => {
            writeln!(stdout, "{}", alpha2_of(n)?)?;
        }
        Command::Tables => {
            let rows = [
                ("thm1", &TABLE_1[..]),
                ("thm2", &TABLE_2[..]),
                ("thm3", &THM3_TRIPLES[..]),
            ];
            for (name, triples) in rows {
                for [a, b, c] in triples {
                    writeln!(stdout, "{name} {a},{b},{c}")?;
                }
            }
            writeln!(stdout, "thm4 1,1,27")?;
            writeln!(stdout, "thm5 1,1,6")?;
        }
        Command::Verify {
            id,
            nmax,
            format,
            workers,
            force,
        } => {
            let workers = match workers {
                Some(0) => return Err(anyhow::anyhow!("--workers must be positive").into()),
                Some(w) => w,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let opts = VerifyOptions {
                nmax: nmax.unwrap_or(id.default_nmax()),
                workers,
                force,
            };
            let records = run_verification(id, &opts)?;
            write_records(&mut stdout, &records, format)?;
            let summary = Summary::of(&records);
            eprintln!(
                "{id}: {} checked, {} passed, {} failed{}",
                summary.checked,
                summary.checked - summary.failed,
                summary.failed,
                if force {
                    format!(", {} forced", summary.forced)
                } else {
                    String::new()
                }
            );
            if let Some(first) = &summary.first_failure {
                eprintln!("first failure: {}", text_line(first));
            }
            return Ok(ExitCode::from(summary.exit_code()));
        }
    }
    Ok(ExitCode::SUCCESS)
}
