mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::FamilyArgs;
use report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "nullquad", version, about = "Exact checks for contact curves, null curves and planar-end minimal surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ramification divisors R_1..R_n of a curve file.
    Ramify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Dual null curve f_2 of a contact curve in P^3.
    Klein {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Contact curve whose dual is the given null curve in P^4.
    InverseKlein {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Plücker and ramification identities of a contact curve.
    Plucker {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Residues, ends and the end-product test of Weierstrass data.
    VerifyEnds {
        #[arg(default_value = "-")]
        input: String,
    },
    /// The null curve [1, f, <f,f>] completed from Weierstrass data.
    Complete {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Branch-divisor shapes of totally ramified contact curves of degree d.
    Enumerate {
        #[arg(long)]
        d: usize,
    },
    /// Index-coincidence case analysis for branch orders a and b.
    ClassifyPair {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
    },
    /// Runs a built-in non-existence certificate.
    Certify {
        #[arg(long = "case")]
        case: String,
        /// Family parameter of a parametric case.
        #[arg(long, conflicts_with = "d")]
        e: Option<usize>,
        /// Contact-curve degree; selects the family parameter.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Generates a member of a built-in family.
    Family {
        #[arg(long, value_parser = ["fd", "kusner", "peng"])]
        name: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Print only the input-file JSON.
        #[arg(long)]
        emit: bool,
    },
    /// Exact check of the published odd-ended family.
    RefutePeng {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ramify { .. } => "ramify",
            Command::Klein { .. } => "klein",
            Command::InverseKlein { .. } => "inverse-klein",
            Command::Plucker { .. } => "plucker",
            Command::VerifyEnds { .. } => "verify-ends",
            Command::Complete { .. } => "complete",
            Command::Enumerate { .. } => "enumerate",
            Command::ClassifyPair { .. } => "classify-pair",
            Command::Certify { .. } => "certify",
            Command::Family { .. } => "family",
            Command::RefutePeng { .. } => "refute-peng",
        }
    }
}

fn dispatch(cmd: &Command) -> anyhow::Result<Report> {
    match cmd {
        Command::Ramify { input } => commands::ramify(input),
        Command::Klein { input } => commands::klein(input),
        Command::InverseKlein { input } => commands::inverse_klein_cmd(input),
        Command::Plucker { input } => commands::plucker(input),
        Command::VerifyEnds { input } => commands::verify_ends(input),
        Command::Complete { input } => commands::complete(input),
        Command::Enumerate { d } => commands::enumerate(*d),
        Command::ClassifyPair { d, a, b } => commands::classify_pair_cmd(*d, *a, *b),
        Command::Certify { case, e, d } => commands::certify(case, *e, *d),
        Command::Family { name, d, n, m, .. } => {
            commands::family(&FamilyArgs { name: name.clone(), d: *d, n: *n, m: *m })
        }
        Command::RefutePeng { n, m } => commands::refute_peng_cmd(*n, *m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();

    // A family member printed as bare data so it can be piped into the
    // file-reading subcommands.
    if let Command::Family { name: fam, d, n, m, emit } = &cli.command {
        if *emit || cli.format == Format::Text {
            return match commands::family_data(&FamilyArgs { name: fam.clone(), d: *d, n: *n, m: *m }) {
                Ok((data, _)) => {
                    write_stdout(&format!("{}\n", serde_json::to_string_pretty(&data).expect("data serializes")));
                    ExitCode::SUCCESS
                }
                Err(e) => finish(cli.format, Report::error(name, &format!("{e:#}"))),
            };
        }
    }

    let report = dispatch(&cli.command).unwrap_or_else(|e| Report::error(name, &format!("{e:#}")));
    finish(cli.format, report)
}

fn finish(format: Format, report: Report) -> ExitCode {
    if let Some(msg) = report.payload.get("error").and_then(|v| v.as_str()) {
        eprintln!("error: {msg}");
    }
    if let Some(notices) = report.payload.get("notices").and_then(|v| v.as_array()) {
        for n in notices.iter().filter_map(|n| n.as_str()) {
            eprintln!("notice: {n}");
        }
    }
    match format {
        Format::Json => write_stdout(&format!("{}\n", report.to_json())),
        Format::Text => write_stdout(&report.to_text()),
    }
    ExitCode::from(report.verdict.exit_code() as u8)
}

/// Writes to stdout, tolerating a reader that closed the pipe early.
fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}
