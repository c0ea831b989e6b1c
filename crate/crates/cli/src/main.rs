use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tribo::abc::{abc_chain, abc_decode, abc_encode, AbcWord};
use tribo::equiv::{convert_back_stages, convert_stages, Stages};
use tribo::oeis::{self, SequenceBinding};
use tribo::sequences::{seq_b_typed, seq_closed, BType};
use tribo::verify::{self, CheckReport};
use tribo::word::{prefix, Letter};
use tribo::zt::{zt_decode, zt_encode_traced, ZtWord};
use tribo::Error;

const EXIT_VALIDATION: u8 = 1;
const EXIT_VERIFICATION: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Environment variable naming the directory of b-files used by `oeis`.
const DATA_DIR_VAR: &str = "TRIBO_DATA_DIR";

#[derive(Parser)]
#[command(
    name = "tribo",
    version,
    about = "Tribonacci word, ZT and ABC representations"
)]
struct Cli {
    /// Reject numeric inputs above this bound.
    #[arg(long, global = true, default_value_t = 1u64 << 62)]
    max_n: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first L symbols of the tribonacci word.
    Word {
        #[arg(long)]
        len: u64,
    },
    /// Print `n value` for n in [from, to].
    Seq {
        #[arg(value_enum, ignore_case = true)]
        name: SeqName,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// ZT word of N >= 1.
    EncodeZt {
        n: u64,
        /// Also print the greedy remainders, floors and digit indices.
        #[arg(long)]
        trace: bool,
    },
    DecodeZt {
        bits: String,
    },
    /// ABC word of N >= 0 (digits 0, 1, 2 for B, A, C).
    EncodeAbc {
        n: u64,
        /// Also print the classification chain.
        #[arg(long)]
        chain: bool,
    },
    DecodeAbc {
        word: String,
    },
    /// Convert between ZT and ABC words without evaluating them.
    Convert {
        #[arg(long, value_enum)]
        from: System,
        word: String,
        /// Print the hat and AB.x intermediates.
        #[arg(long)]
        show_stages: bool,
    },
    /// Print table 1, 2 or 3.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        k: u8,
    },
    /// Run verification checks.
    Verify {
        /// Comma-separated check ids, or "all".
        #[arg(long, default_value = "all", value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
        /// Print the reports as JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Also write the JSON reports to this file.
        #[arg(long)]
        output: Option<PathBuf>,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Compare local sequences against b-files.
    Oeis {
        /// Sequence id; every registered binding when omitted.
        #[arg(long)]
        id: Option<String>,
        /// b-file to read; defaults to the bundled fixture.
        #[arg(long, requires = "id")]
        bfile: Option<PathBuf>,
        /// Number of entries to compare; the whole file when omitted.
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "verbatim")]
enum SeqName {
    A,
    B,
    C,
    B0,
    B1,
    B2,
}

#[derive(Clone, Copy, ValueEnum)]
enum System {
    Zt,
    Abc,
}

enum Failure {
    Validation(String),
    Verification,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCheck(_) | Error::UnknownBinding(_) => Failure::Usage(e.to_string()),
            Error::NoRepresentation(0) => {
                Failure::Validation("0 has no ZT representation; ZT words start at N = 1".into())
            }
            e => Failure::Validation(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = std::io::stdout().lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFICATION),
    }
}

fn guard(max_n: u64, value: u64, what: &str) -> Outcome {
    if value > max_n {
        return Err(Failure::Validation(format!(
            "{what} = {value} exceeds --max-n {max_n}"
        )));
    }
    Ok(())
}

macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| Failure::Validation(e.to_string()))?
    };
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let max_n = cli.max_n;
    match cli.command {
        Command::Word { len } => {
            guard(max_n, len, "len")?;
            emit!(out, "{}", prefix(len)?);
        }
        Command::Seq { name, from, to } => {
            guard(max_n, to, "to")?;
            if from > to {
                return Err(Failure::Usage(format!("--from {from} is past --to {to}")));
            }
            for n in from..=to {
                let v = match name {
                    SeqName::A => seq_closed(Letter::A, n)?,
                    SeqName::B => seq_closed(Letter::B, n)?,
                    SeqName::C => seq_closed(Letter::C, n)?,
                    SeqName::B0 => seq_b_typed(BType::Zero, n)?,
                    SeqName::B1 => seq_b_typed(BType::One, n)?,
                    SeqName::B2 => seq_b_typed(BType::Two, n)?,
                };
                emit!(out, "{n} {v}");
            }
        }
        Command::EncodeZt { n, trace } => {
            guard(max_n, n, "N")?;
            let (word, t) = zt_encode_traced(n)?;
            emit!(out, "{word}");
            if trace {
                emit!(out, "remainders {}", join(&t.remainders));
                emit!(out, "floors {}", join(&t.floors));
                emit!(out, "indices {}", join(&t.indices));
            }
        }
        Command::DecodeZt { bits } => {
            let word: ZtWord = bits.parse()?;
            emit!(out, "{}", zt_decode(&word)?);
        }
        Command::EncodeAbc { n, chain } => {
            guard(max_n, n, "N")?;
            emit!(out, "{}", abc_encode(n)?);
            if chain {
                for c in abc_chain(n)? {
                    emit!(out, "{c}");
                }
            }
        }
        Command::DecodeAbc { word } => {
            let word: AbcWord = word.parse()?;
            emit!(out, "{}", abc_decode(&word)?);
        }
        Command::Convert {
            from,
            word,
            show_stages,
        } => {
            let stages: Stages = match from {
                System::Zt => convert_stages(&word.parse()?)?,
                System::Abc => convert_back_stages(&word.parse()?)?,
            };
            if show_stages {
                let (zt, hat, abdx, abc) = (&stages.zt, &stages.hat, &stages.abdx, &stages.abc);
                match from {
                    System::Zt => {
                        emit!(out, "zt {zt}\nhat {hat}\nabdx {abdx}\nabc {abc}");
                    }
                    System::Abc => {
                        emit!(out, "abc {abc}\nabdx {abdx}\nhat {hat}\nzt {zt}");
                    }
                }
            } else {
                match from {
                    System::Zt => emit!(out, "{}", stages.abc),
                    System::Abc => emit!(out, "{}", stages.zt),
                }
            }
        }
        Command::Table { k } => {
            write!(out, "{}", tribo::tables::table(k)?)
                .map_err(|e| Failure::Validation(e.to_string()))?;
        }
        Command::Verify {
            checks,
            limit,
            json,
            output,
            list,
        } => {
            if list {
                for c in verify::registry() {
                    emit!(out, "{} {}", c.id, c.description);
                }
                return Ok(());
            }
            let reports = verify::run_checks(&checks, limit)?;
            if json {
                emit!(out, "{}", verify::reports_to_json(&reports));
            } else {
                write!(out, "{}", verify::reports_to_text(&reports))
                    .map_err(|e| Failure::Validation(e.to_string()))?;
            }
            if let Some(path) = output {
                std::fs::write(&path, verify::reports_to_json(&reports))
                    .map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))?;
            }
            passed(&reports)?;
        }
        Command::Oeis { id, bfile, limit } => {
            let chosen: Vec<SequenceBinding> = match &id {
                Some(id) => vec![oeis::binding(id)?],
                None => oeis::bindings().to_vec(),
            };
            let dir = std::env::var_os(DATA_DIR_VAR)
                .map(PathBuf::from)
                .unwrap_or_else(oeis::default_data_dir);
            let mut reports = Vec::new();
            for b in chosen {
                let path = bfile
                    .clone()
                    .unwrap_or_else(|| oeis::bfile_path(&dir, b.oeis_id));
                let file = oeis::load_bfile(&path)?;
                let report = oeis::compare(&b, &file, limit.unwrap_or(file.len()))?;
                write!(out, "{}", report.to_text())
                    .map_err(|e| Failure::Validation(e.to_string()))?;
                reports.push(report);
            }
            passed(&reports)?;
        }
    }
    Ok(())
}

fn passed(reports: &[CheckReport]) -> Outcome {
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.check_id.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        eprintln!("failed: {}", failed.join(", "));
        Err(Failure::Verification)
    }
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
