//! Command-line front end. Exit codes: 0 success, 1 verification mismatch,
//! 2 invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use pairmds::census::{self, zero_blocks};
use pairmds::code::{default_cap, LinearCode};
use pairmds::construct::{self, Family};
use pairmds::examples;
use pairmds::search::{SearchOptions, Strategy};
use pairmds::sympair::analyze;
use pairmds::Error;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pairmds", version, about = "Symbol-pair codes from interleaved matrix-product codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member and write it to a code file.
    Construct {
        /// Construction family: 3.1, 3.2, 3.3, 3.4 or 3.5.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        q: u32,
        /// Block length.
        #[arg(long)]
        n: usize,
        /// Field modulus coefficients c0,c1,...,cm (lowest degree first).
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<u32>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute d_H, d_sp and the MDS class of a code file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        /// Also write the full report as JSON.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Rebuild a reference instance and check it against its published values.
    Example {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Verify every block length of a family for one field size.
    Sweep {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        q: u32,
        /// Block-length range a..b (inclusive); defaults to the full range.
        #[arg(long)]
        n: Option<String>,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
    /// Low-weight census of the un-interleaved code (ids 3.1-3.5), or the
    /// zero-block check (id 2.3).
    Lemma {
        #[arg(long)]
        id: String,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap: Option<u128>,
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// auto, message or support.
    #[arg(long, default_value = "auto")]
    pub strategy: Strategy,
    /// Largest message space to enumerate (default: $PAIRMDS_CAP or 2^22).
    #[arg(long)]
    pub cap: Option<u128>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions { strategy: self.strategy, cap: self.cap.unwrap_or_else(default_cap), workers: self.workers.max(1) }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INVALID;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> pairmds::Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

fn parse_range(s: &str) -> pairmds::Result<Vec<usize>> {
    let bad = || Error::InadmissibleParameters(format!("--n expects a..b or a single length, got {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn execute(command: Command, out: &mut dyn Write) -> pairmds::Result<i32> {
    match command {
        Command::Construct { theorem, q, n, modulus, out: path } => {
            let family = Family::from_id(&theorem)?;
            let code = construct::build(family, q, n, modulus.as_deref())?;
            code.save(&path)?;
            writeln!(out, "n={} k={}", code.n(), code.k())?;
            writeln!(out, "provenance {}", code.provenance())?;
            Ok(EXIT_OK)
        }
        Command::Analyze { file, search, json_out } => {
            let code = LinearCode::load(&file)?;
            let report = analyze(&code, &search.options())?;
            writeln!(out, "{}", report.line())?;
            writeln!(out, "witness_H {:?}", report.witness_h)?;
            writeln!(out, "witness_sp {:?}", report.witness_sp)?;
            if let Some(p) = json_out {
                write_json(&p, &report)?;
            }
            Ok(EXIT_OK)
        }
        Command::Example { id, search } => {
            let inst = examples::instance(&id)?;
            let c = construct::construct(inst.family, inst.q, inst.n, inst.modulus)?;
            let report = analyze(&c.code, &search.options())?;
            writeln!(out, "{}", report.line())?;
            let listing = c.permutation.listing();
            let checks = [
                ("length", inst.length.to_string(), report.n.to_string()),
                ("k", inst.k.to_string(), report.k.to_string()),
                ("d_H", inst.d_h.to_string(), report.d_h.to_string()),
                ("d_sp", inst.d_sp.to_string(), report.d_sp.to_string()),
                ("class", inst.class.to_string(), report.class.to_string()),
                ("listing", format!("{:?}", inst.listing), format!("{listing:?}")),
            ];
            let mut all = true;
            for (name, expected, got) in checks {
                if expected == got {
                    writeln!(out, "PASS {name} = {got}")?;
                } else {
                    all = false;
                    writeln!(out, "FAIL {name}: expected {expected}, computed {got}")?;
                }
            }
            Ok(if all { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Sweep { theorem, q, n, search, json_out } => {
            let family = Family::from_id(&theorem)?;
            let lengths = match n {
                Some(s) => parse_range(&s)?,
                None => family.lengths(q).collect(),
            };
            for &len in &lengths {
                family.admissible(q, len)?;
            }
            let rows = construct::sweep(family, q, &lengths, &search.options());
            writeln!(out, "{:>4} {:>6} {:>4} {:>4} {:>5} {:>5}  verdict", "n", "length", "k", "d_H", "d_sp", "class")?;
            let mut first_failure = true;
            for row in &rows {
                let (k, dh, dsp, class) = match &row.report {
                    Some(r) => (r.k.to_string(), r.d_h.to_string(), r.d_sp.to_string(), r.class.to_string()),
                    None => ("-".into(), "-".into(), "-".into(), "-".into()),
                };
                let verdict = if row.pass {
                    "PASS".to_string()
                } else if std::mem::replace(&mut first_failure, false) {
                    format!("FAIL ({}) <== first failure", row.message)
                } else {
                    format!("FAIL ({})", row.message)
                };
                writeln!(out, "{:>4} {:>6} {:>4} {:>4} {:>5} {:>5}  {verdict}", row.n, row.length, k, dh, dsp, class)?;
            }
            if let Some(p) = json_out {
                write_json(&p, &rows)?;
            }
            Ok(if rows.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Lemma { id, q, n, cap, json_out } => {
            let cap = cap.unwrap_or_else(default_cap);
            if id.trim() == "2.3" {
                let mut reports = Vec::new();
                for family in Family::ALL {
                    if family.admissible(q, n).is_err() {
                        continue;
                    }
                    let c = construct::construct(family, q, n, None)?;
                    match zero_blocks(&c, cap) {
                        Ok(r) => {
                            writeln!(out, "{r}")?;
                            reports.push(r);
                        }
                        Err(Error::EnumerationTooLarge { size, cap }) => {
                            writeln!(out, "zero blocks family={family} q={q} n={n}: skipped ({size} codewords > cap {cap})")?;
                        }
                        Err(e) => return Err(e),
                    }
                }
                if reports.is_empty() {
                    return Err(Error::InadmissibleParameters(format!("no enumerable family at q={q}, n={n}")));
                }
                if let Some(p) = json_out {
                    write_json(&p, &reports)?;
                }
                return Ok(if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_MISMATCH });
            }
            let family = Family::from_id(&id)?;
            let c = construct::construct(family, q, n, None)?;
            let report = census::census(&c)?;
            writeln!(out, "{report}")?;
            if let Some(p) = json_out {
                write_json(&p, &json!(report))?;
            }
            Ok(if report.pass || !report.asserted { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}
