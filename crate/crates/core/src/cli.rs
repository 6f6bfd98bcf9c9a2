//! Command-line front end. Report text goes to `out`, diagnostics to `err`,
//! and the exit status is the only machine-readable summary.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{AlgebraValue, Kind};
use crate::constructions::{
    dnl_to_residuated_lattice, roundtrip, to_residuated_lattice, to_semiring,
};
use crate::enumerate::{EnumKind, Guard, Search, Theorem};
use crate::format::{emit, emit_stream, parse_algebra};
use crate::registry::evaluate_law;
use crate::report::{LawEntry, LawReport};
use crate::residuated_laws::{check_mv, check_negation_laws, check_residuated, mv_to_reslat};
use crate::semiring_laws::{check_isotone, check_semiring, check_variety_flags};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub i32);

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus(0);
    pub const USAGE: ExitStatus = ExitStatus(1);
    pub const LAW_FAILURE: ExitStatus = ExitStatus(2);
    pub const RESOURCE_LIMIT: ExitStatus = ExitStatus(3);

    pub fn code(self) -> i32 {
        self.0
    }

    fn of_error(e: &Error) -> Self {
        match e {
            Error::Precondition { .. } => ExitStatus::LAW_FAILURE,
            Error::ResourceLimit { .. } => ExitStatus::RESOURCE_LIMIT,
            _ => ExitStatus::USAGE,
        }
    }
}

impl fmt::Display for ExitStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "reslat",
    version,
    about = "Finite residuated lattices and simple semirings"
)]
struct Cli {
    /// Largest carrier size enumeration may attempt (default: $RESLAT_MAX_SIZE or 6).
    #[arg(long, global = true, value_name = "N")]
    max_size_guard: Option<usize>,
    /// Worker threads for enumeration and sweeps.
    #[arg(long, global = true, value_name = "K")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the base law suite for the file's kind plus any named laws.
    Check {
        file: PathBuf,
        #[arg(long = "law", value_name = "NAME")]
        laws: Vec<String>,
    },
    /// Translate an algebra and print the result as an algebra file.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Check that both translations compose to the identity.
    Roundtrip { file: PathBuf },
    /// List every instance of a class up to isomorphism.
    Enumerate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        size: usize,
        #[arg(long = "filter", value_name = "LAW")]
        filters: Vec<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Verify a claim on every instance up to a size.
    Sweep {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_size: usize,
    },
    /// Find the first enumerated instance violating a law.
    Counterexample {
        #[arg(long)]
        law: String,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        max_size: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Semiring,
    Reslat,
    DnlReslat,
}

/// Runs with the guard taken from `RESLAT_MAX_SIZE`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, Guard::from_env(), out, err)
}

pub fn run_with<I, T>(args: I, guard: Guard, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                ExitStatus::USAGE
            } else {
                let _ = write!(out, "{e}");
                ExitStatus::SUCCESS
            };
            return code;
        }
    };
    let mut search = Search::with_guard(Guard {
        max_size: cli.max_size_guard.unwrap_or(guard.max_size),
    });
    if let Some(k) = cli.workers {
        search = search.workers(k);
    }
    let result = match cli.command {
        Command::Check { file, laws } => check(&file, &laws, out, err),
        Command::Convert { file, to } => convert(&file, to, out),
        Command::Roundtrip { file } => roundtrip_cmd(&file, out),
        Command::Enumerate {
            kind,
            size,
            filters,
            count_only,
        } => enumerate_cmd(&search, &kind, size, &filters, count_only, out),
        Command::Sweep { theorem, max_size } => sweep_cmd(&search, &theorem, max_size, out),
        Command::Counterexample {
            law,
            kind,
            max_size,
        } => counterexample_cmd(&search, &law, &kind, max_size, out),
    };
    let status = match result {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::of_error(&e)
        }
    };
    let _ = out.flush();
    status
}

fn io(e: std::io::Error) -> Error {
    Error::Io(format!("write failed: {e}"))
}

fn load(path: &Path) -> Result<AlgebraValue> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

fn status(ok: bool) -> ExitStatus {
    if ok {
        ExitStatus::SUCCESS
    } else {
        ExitStatus::LAW_FAILURE
    }
}

/// The laws `check` runs without being asked.
pub fn base_suite(alg: &AlgebraValue) -> (LawReport, Option<&'static str>) {
    match alg {
        AlgebraValue::Semiring(s) => {
            let mut r = check_semiring(s);
            r.extend(check_variety_flags(s).report);
            match check_isotone(s) {
                Ok(iso) => {
                    r.extend(iso);
                    (r, None)
                }
                Err(_) => (r, Some("isotone skipped: addition induces no order")),
            }
        }
        AlgebraValue::Reslat(l) => {
            let mut r = check_residuated(l);
            if r.passed() {
                r.extend(check_negation_laws(l));
                (r, None)
            } else {
                (r, Some("negation laws skipped: not a residuated lattice"))
            }
        }
        AlgebraValue::Mv(m) => (check_mv(m), None),
    }
}

fn header(alg: &AlgebraValue) -> String {
    let mut h = format!(
        "ALGEBRA {} kind={} size={}",
        alg.name(),
        alg.kind(),
        alg.size()
    );
    if alg.is_degenerate() {
        h.push_str(" degenerate");
    }
    h
}

fn write_entries(out: &mut dyn Write, entries: &[LawEntry]) -> Result<bool> {
    for e in entries {
        writeln!(out, "{e}").map_err(io)?;
    }
    Ok(entries.iter().all(LawEntry::holds))
}

fn check(
    file: &Path,
    laws: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitStatus> {
    let alg = load(file)?;
    for law in laws {
        if !crate::registry::is_known_law(law) {
            return Err(Error::UnknownLaw(law.clone()));
        }
    }
    writeln!(out, "{}", header(&alg)).map_err(io)?;
    let (base, note) = base_suite(&alg);
    let mut ok = write_entries(out, &base.entries)?;
    if let Some(note) = note {
        writeln!(err, "note: {note}").map_err(io)?;
    }
    for law in laws {
        match evaluate_law(&alg, law) {
            Ok(entries) => ok &= write_entries(out, &entries)?,
            Err(e @ Error::Precondition { .. }) => {
                writeln!(err, "{law}: {e}").map_err(io)?;
                writeln!(out, "LAW {law} FAIL witness=()").map_err(io)?;
                ok = false;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(status(ok))
}

fn convert(file: &Path, to: Target, out: &mut dyn Write) -> Result<ExitStatus> {
    let alg = load(file)?;
    let converted: AlgebraValue = match (to, &alg) {
        (Target::Semiring, AlgebraValue::Reslat(l)) => to_semiring(l)?.into(),
        (Target::Semiring, AlgebraValue::Mv(m)) => to_semiring(&mv_to_reslat(m)?)?.into(),
        (Target::Reslat, AlgebraValue::Semiring(s)) => to_residuated_lattice(s)?.into(),
        (Target::Reslat, AlgebraValue::Mv(m)) => mv_to_reslat(m)?.into(),
        (Target::DnlReslat, AlgebraValue::Semiring(s)) => dnl_to_residuated_lattice(s)?.into(),
        (_, other) => {
            return Err(Error::WrongKind {
                expected: match to {
                    Target::Semiring => Kind::Reslat,
                    _ => Kind::Semiring,
                },
                found: other.kind(),
            })
        }
    };
    write!(out, "{}", emit(&converted)).map_err(io)?;
    Ok(ExitStatus::SUCCESS)
}

fn roundtrip_cmd(file: &Path, out: &mut dyn Write) -> Result<ExitStatus> {
    let alg = load(file)?;
    writeln!(out, "{}", header(&alg)).map_err(io)?;
    let r = roundtrip(&alg);
    write_entries(out, &r.entries)?;
    writeln!(
        out,
        "ROUNDTRIP {}",
        if r.passed() { "PASS" } else { "FAIL" }
    )
    .map_err(io)?;
    Ok(status(r.passed()))
}

fn enumerate_cmd(
    search: &Search,
    kind: &str,
    size: usize,
    filters: &[String],
    count_only: bool,
    out: &mut dyn Write,
) -> Result<ExitStatus> {
    let kind: EnumKind = kind.parse()?;
    let filters: Vec<&str> = filters.iter().map(String::as_str).collect();
    let found = search.enumerate(kind, size, &filters)?;
    if count_only {
        writeln!(out, "COUNT {size} {}", found.len()).map_err(io)?;
    } else {
        write!(out, "{}", emit_stream(&found)).map_err(io)?;
    }
    Ok(ExitStatus::SUCCESS)
}

fn sweep_cmd(
    search: &Search,
    theorem: &str,
    max_size: usize,
    out: &mut dyn Write,
) -> Result<ExitStatus> {
    let theorem: Theorem = theorem.parse()?;
    let report = search.sweep(theorem, max_size)?;
    for line in report.lines() {
        writeln!(out, "{line}").map_err(io)?;
    }
    for f in &report.failures {
        writeln!(out, "FAIL {theorem} {f}").map_err(io)?;
    }
    Ok(status(report.passed()))
}

fn counterexample_cmd(
    search: &Search,
    law: &str,
    kind: &str,
    max_size: usize,
    out: &mut dyn Write,
) -> Result<ExitStatus> {
    let kind: EnumKind = kind.parse()?;
    match search.find_counterexample(law, kind, max_size)? {
        None => {
            writeln!(out, "NONE {law} kind={kind} max-size={max_size}").map_err(io)?;
            Ok(ExitStatus::SUCCESS)
        }
        Some(c) => {
            writeln!(out, "{}", c.entry).map_err(io)?;
            write!(out, "{}", emit(&c.alg)).map_err(io)?;
            Ok(ExitStatus::LAW_FAILURE)
        }
    }
}
