//! `segre`: command-line front end for the cohomology engine.

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use segre::Error;

#[derive(Parser, Debug)]
#[command(name = "segre", version, about = "Cohomology of homogeneous bundles and Ulrich bundles on P2xP2 and the flag threefold")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cohomology vector h^0..h^4 on P2xP2.
    Cohom {
        expr: String,
        #[arg(long, num_args = 2, value_names = ["M", "N"], allow_negative_numbers = true)]
        twist: Option<Vec<i64>>,
    },
    /// Cohomology of all twists E(m,n) over a window.
    Table {
        expr: String,
        #[arg(long, num_args = 4, value_names = ["M0", "M1", "N0", "N1"], allow_negative_numbers = true, required = true)]
        window: Vec<i64>,
    },
    /// Euler characteristic and Chern character.
    Chi { expr: String },
    /// Ulrich certificate on P2xP2.
    Ulrich { expr: String },
    /// The invariants a_i, b_i, their identities and the classification branch.
    Profile { expr: String },
    /// Castelnuovo–Mumford style regularity conditions.
    Regularity {
        expr: String,
        #[arg(long, conflicts_with = "hw", required_unless_present = "hw")]
        bm: bool,
        #[arg(long)]
        hw: bool,
    },
    /// Beilinson E1 table of EXPR (taken as A) over a built-in collection.
    Beilinson {
        expr: String,
        #[arg(long, default_value = "col13")]
        collection: String,
    },
    /// Resolution shape from a profile a0..a4,b0..b4,rank.
    Resolve {
        #[arg(long)]
        profile: String,
    },
    /// Orthogonality, exceptionality and dual checks of a built-in collection.
    Orthogonality {
        #[arg(long)]
        collection: String,
    },
    /// A member of one of the families e1..e6.
    Family {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        rank: u64,
    },
    /// One of the extension examples aes, aes2, ab.
    Example {
        #[arg(long)]
        which: String,
    },
    /// Cohomology h^0..h^3 of the restriction to the flag threefold.
    FlagCohom { expr: String },
    /// Ulrich certificate and resolution shape on the flag threefold.
    FlagUlrich { expr: String },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Ok,
    Pass,
    Fail,
    Indeterminate,
}

impl Outcome {
    fn exit_code(self) -> u8 {
        match self {
            Outcome::Ok | Outcome::Pass => 0,
            Outcome::Indeterminate => 3,
            Outcome::Fail => 4,
        }
    }
}

impl From<segre::report::Status> for Outcome {
    fn from(s: segre::report::Status) -> Self {
        use segre::report::Status;
        match s {
            Status::Pass => Outcome::Pass,
            Status::Fail => Outcome::Fail,
            Status::Indeterminate => Outcome::Indeterminate,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Outcome,
    #[serde(skip)]
    pub text: String,
    /// Header first. Empty means key/value rows from `results`.
    #[serde(skip)]
    pub rows: Vec<Vec<String>>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::UnknownIdentifier(_) | Error::MalformedPartition(..) | Error::NonDominant(_) => 2,
        Error::Indeterminate(_) | Error::Unsupported(_) | Error::OutsideFactorSet(_) => 3,
        _ => 4,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(rec: &OutputRecord, format: Format) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Text => {
            write!(out, "{}", rec.text)?;
            if !rec.text.ends_with('\n') {
                writeln!(out)?;
            }
            writeln!(out, "status: {}", scalar(&serde_json::to_value(rec.status)?))?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rec)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let (true, Some(Value::Array(checks))) = (rec.rows.is_empty(), rec.results.get("checks")) {
                let cols = ["check", "inputs", "expected", "got", "status"];
                w.write_record(cols)?;
                for c in checks {
                    w.write_record(cols.map(|k| c.get(k).map(scalar).unwrap_or_default()))?;
                }
            } else if rec.rows.is_empty() {
                w.write_record(["key", "value"])?;
                if let Value::Object(m) = &rec.results {
                    for (k, v) in m {
                        w.write_record([k.as_str(), &scalar(v)])?;
                    }
                }
                w.write_record(["status", &scalar(&serde_json::to_value(rec.status)?)])?;
            } else {
                for r in &rec.rows {
                    w.write_record(r)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(rec) => {
            if let Err(e) = render(&rec, cli.format) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(rec.status.exit_code())
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.format == Format::Json {
                let v = serde_json::json!({ "error": e.to_string(), "exit_code": code });
                println!("{}", serde_json::to_string_pretty(&v).expect("plain json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
