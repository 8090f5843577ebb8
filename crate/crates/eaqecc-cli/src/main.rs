//! Command-line front end: inspect cosets, compute parameter tuples,
//! sweep families, cross-check the entanglement-count routes, and
//! reproduce the shipped reference tables.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when a verification or
//! table reproduction finds a mismatch.

mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use eaqecc::fixtures::table_rows;
use eaqecc::{
    verify_record, CSource, CodeSetting, CosetClass, Family, MatrixOracle, Metric,
    VerificationReport,
};
use output::{OutputFormat, Table};
use rayon::prelude::*;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

const EXIT_USAGE: i32 = 1;
const EXIT_MISMATCH: i32 = 2;

#[derive(Parser)]
#[command(
    name = "eaqecc",
    version,
    about = "Parameters [[n,k,>=d;c]]_q of entanglement-assisted quantum codes \
             built from Reed-Solomon and BCH codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SettingArgs {
    /// Field characteristic (a prime)
    #[arg(long)]
    p: u64,
    /// The classical alphabet is GF(p^r)
    #[arg(long)]
    r: u32,
    /// Extension degree of the evaluation field over the alphabet (1 or 2)
    #[arg(long)]
    degree: u32,
    /// Inner product (euclidean or hermitian)
    #[arg(long, value_parser = Metric::from_str)]
    metric: Metric,
}

impl SettingArgs {
    fn setting(&self, extended: bool) -> Result<CodeSetting, String> {
        CodeSetting::new(self.p, self.r, self.degree, self.metric, extended)
            .map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// Code family (rs-hermitian, bch-euclidean or bch-hermitian)
    #[arg(long, value_parser = Family::from_str)]
    family: Family,
    /// Family parameter: the EAQECC alphabet size (a prime power)
    #[arg(long)]
    q: u64,
}

impl FamilyArgs {
    fn setting(&self, extended: bool) -> Result<CodeSetting, String> {
        CodeSetting::from_family(self.family, self.q, extended).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a setting's cyclotomic cosets with their classifications
    Cosets {
        #[command(flatten)]
        setting: SettingArgs,
    },
    /// Compute one parameter tuple
    Params {
        #[command(flatten)]
        setting: SettingArgs,
        /// Defining-set index (0-based)
        #[arg(long, conflicts_with = "mt")]
        t: Option<usize>,
        /// Largest minimal representative of the defining set
        #[arg(long)]
        mt: Option<u64>,
        /// Evaluate at zero as well: length n+1, one entangled pair less
        #[arg(long)]
        extended: bool,
        /// Route to the entanglement count
        #[arg(long, default_value = "coset", value_parser = CSource::from_str)]
        source: CSource,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Parameter tuples for every defining set of a family
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        /// Evaluate at zero as well
        #[arg(long)]
        extended: bool,
        /// Route to the entanglement count
        #[arg(long, default_value = "coset", value_parser = CSource::from_str)]
        source: CSource,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the table to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check every route to the entanglement count
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also run the exact linear-algebra route (small fields only)
        #[arg(long)]
        matrix: bool,
    },
    /// Reproduce a shipped reference table from a sweep
    Tables {
        /// Alphabet of the table (3, 4, 5 or 7)
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the table to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    if let Ok(threads) = std::env::var("EAQECC_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(EXIT_USAGE);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Cosets { setting } => cmd_cosets(&setting.setting(false)?),
        Command::Params {
            setting,
            t,
            mt,
            extended,
            source,
            format,
        } => cmd_params(&setting.setting(extended)?, t, mt, source, format),
        Command::Sweep {
            family,
            extended,
            source,
            format,
            out,
        } => cmd_sweep(&family.setting(extended)?, source, format, out.as_deref()),
        Command::Verify { family, matrix } => cmd_verify(&family, matrix),
        Command::Tables { q, format, out } => cmd_tables(q, format, out.as_deref()),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn class_label(class: &CosetClass) -> &'static str {
    match class {
        CosetClass::Symmetric => "symmetric",
        CosetClass::FrAsymmetric { .. } => "fr-asymmetric",
        CosetClass::SrAsymmetric { .. } => "sr-asymmetric",
    }
}

fn cmd_cosets(setting: &CodeSetting) -> Result<i32, String> {
    let table = setting.coset_table();
    println!(
        "cosets mod {} with multiplier {} ({} cosets, metric {})",
        setting.n(),
        setting.multiplier(),
        table.z() + 1,
        setting.metric()
    );
    println!("{:>4}  {:>8}  {:>4}  {:>13}  {:>8}  elements", "t", "min_rep", "size", "class", "partner");
    for j in 0..=table.z() {
        let coset = table.coset(j);
        let class = setting.classify(&coset);
        let partner = class
            .partner()
            .map_or("-".to_string(), |p| p.to_string());
        let elements: Vec<String> = coset.elements().iter().map(|e| e.to_string()).collect();
        println!(
            "{:>4}  {:>8}  {:>4}  {:>13}  {:>8}  {}",
            j,
            coset.min_rep(),
            coset.len(),
            class_label(&class),
            partner,
            elements.join(",")
        );
    }
    Ok(0)
}

fn params_columns() -> Vec<&'static str> {
    vec!["t", "m_t", "n", "k", "d_lower", "c", "dim", "catalytic", "valid"]
}

fn params_row(table: &eaqecc::CosetTable, t: usize, row: &eaqecc::EaqeccParams) -> Vec<i64> {
    vec![
        t as i64,
        table.reps()[t] as i64,
        row.n as i64,
        row.k,
        row.d_lower as i64,
        row.c as i64,
        table.dimension_through(t) as i64,
        i64::from(row.catalytic),
        i64::from(row.valid),
    ]
}

fn cmd_params(
    setting: &CodeSetting,
    t: Option<usize>,
    mt: Option<u64>,
    source: CSource,
    format: OutputFormat,
) -> Result<i32, String> {
    let table = setting.coset_table();
    let t = match (t, mt) {
        (Some(t), _) => t,
        (None, Some(m)) => table.index_of_rep(m).ok_or(format!(
            "{m} is not a minimal coset representative mod {}",
            setting.n()
        ))?,
        (None, None) => return Err("provide --t or --mt".to_string()),
    };
    let row = eaqecc::eaqecc_params(setting, t, source).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Text => println!("{row}"),
        other => {
            let out = Table {
                columns: params_columns(),
                rows: vec![params_row(&table, t, &row)],
            };
            print!("{}", out.render(other));
        }
    }
    Ok(0)
}

fn cmd_sweep(
    setting: &CodeSetting,
    source: CSource,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<i32, String> {
    let table = setting.coset_table();
    let rows = eaqecc::sweep(setting, source).map_err(|e| e.to_string())?;
    let rendered = Table {
        columns: params_columns(),
        rows: rows
            .iter()
            .enumerate()
            .map(|(t, row)| params_row(&table, t, row))
            .collect(),
    }
    .render(format);
    emit(&rendered, out)?;
    Ok(0)
}

fn verify_one(setting: &CodeSetting, matrix: bool) -> Result<VerificationReport, String> {
    let table = Arc::new(setting.coset_table());
    let oracle = if matrix {
        Some(MatrixOracle::new(setting).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let records = (0..=table.z())
        .into_par_iter()
        .map(|t| verify_record(setting, &table, oracle.as_ref(), t))
        .collect::<eaqecc::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    Ok(VerificationReport::from_records(*setting, records))
}

fn cmd_verify(family: &FamilyArgs, matrix: bool) -> Result<i32, String> {
    let mut all_passed = true;
    for extended in [false, true] {
        let setting = family.setting(extended)?;
        let report = verify_one(&setting, matrix)?;
        let routes = if matrix {
            "coset, formula, matrix"
        } else {
            "coset, formula"
        };
        if report.passed() {
            println!(
                "{} q={} extended={extended}: OK ({} defining sets; routes: {routes})",
                family.family,
                family.q,
                report.records.len()
            );
        } else {
            all_passed = false;
            println!(
                "{} q={} extended={extended}: {} MISMATCHES",
                family.family,
                family.q,
                report.mismatches.len()
            );
            for m in &report.mismatches {
                println!(
                    "  t={} m_t={} coset={} formula={:?} matrix={:?}",
                    m.t, m.m_t, m.c_coset, m.c_formula, m.c_matrix
                );
            }
        }
    }
    Ok(if all_passed { 0 } else { EXIT_MISMATCH })
}

fn cmd_tables(q: u64, format: OutputFormat, out: Option<&Path>) -> Result<i32, String> {
    let rows = table_rows(q).ok_or(format!("no table for q={q}"))?;
    let setting = CodeSetting::bch_hermitian(q, false).map_err(|e| e.to_string())?;
    let swept = eaqecc::sweep(&setting, CSource::Coset).map_err(|e| e.to_string())?;
    let mut unmatched = Vec::new();
    let mut table = Table {
        columns: vec!["t", "n", "k", "d", "c", "sweep_d_lower", "matched"],
        rows: Vec::with_capacity(rows.len()),
    };
    for row in &rows {
        let sweep_row = swept.get(row.t).ok_or(format!(
            "fixture row {row:?} points past the end of the sweep"
        ))?;
        let matched = row.matched_by(sweep_row);
        if !matched {
            unmatched.push(*row);
        }
        table.rows.push(vec![
            row.t as i64,
            row.n as i64,
            row.k,
            row.d as i64,
            row.c as i64,
            sweep_row.d_lower as i64,
            i64::from(matched),
        ]);
    }
    emit(&table.render(format), out)?;
    if !unmatched.is_empty() {
        eprintln!("{} reference rows not realized by the sweep:", unmatched.len());
        for row in &unmatched {
            eprintln!("  {row:?}");
        }
        return Ok(EXIT_MISMATCH);
    }
    Ok(0)
}
