//! Assembling `[[n, k, d; c]]_q` parameter tuples, sweeping defining sets,
//! and cross-checking the three routes to the entanglement count.

use crate::codes::MatrixOracle;
use crate::cosets::{bch_bound, c_by_cosets, subfield_dimension, CosetTable, DefiningSet};
use crate::formulas::closed_form_c;
use crate::setting::CodeSetting;
use crate::Result;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Which route computes the entanglement count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CSource {
    /// Closed form (errors on settings without one).
    Formula,
    /// Coset-level computation; the normative route.
    Coset,
    /// Exact linear algebra on actual matrices; desk scale only.
    Matrix,
}

impl fmt::Display for CSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CSource::Formula => "formula",
            CSource::Coset => "coset",
            CSource::Matrix => "matrix",
        })
    }
}

impl FromStr for CSource {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "formula" => Ok(CSource::Formula),
            "coset" => Ok(CSource::Coset),
            "matrix" => Ok(CSource::Matrix),
            other => Err(format!(
                "unknown source `{other}` (expected formula, coset or matrix)"
            )),
        }
    }
}

/// Parameters `[[n, k, >= d_lower; c]]_q` of one entanglement-assisted code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EaqeccParams {
    /// Alphabet of the quantum code.
    pub q: u64,
    /// Block length (already includes the extra coordinate when the
    /// classical code evaluates at zero).
    pub n: u64,
    /// Logical dimension n - 2·dim E + c; non-positive values are kept but
    /// flagged invalid.
    pub k: i64,
    /// Designed-distance lower bound for the minimum distance.
    pub d_lower: u64,
    /// Number of maximally entangled pairs consumed.
    pub c: u64,
    /// Whether k > c, i.e. the code makes more qubits than it burns.
    pub catalytic: bool,
    /// Whether the row describes an actual code (k > 0).
    pub valid: bool,
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{},>={};{}]]_{}",
            self.n, self.k, self.d_lower, self.c, self.q
        )
    }
}

fn params_from_defining_set(ds: &DefiningSet, c: u64) -> EaqeccParams {
    let setting = ds.setting();
    let n = setting.code_length();
    let dim = subfield_dimension(ds);
    let k = n as i64 - 2 * dim as i64 + c as i64;
    EaqeccParams {
        q: setting.eaqecc_alphabet(),
        n,
        k,
        d_lower: bch_bound(ds),
        c,
        catalytic: k > c as i64,
        valid: k > 0,
    }
}

fn c_from_source(
    ds: &DefiningSet,
    source: CSource,
    oracle: Option<&MatrixOracle>,
) -> Result<u64> {
    match source {
        CSource::Coset => Ok(c_by_cosets(ds)),
        CSource::Formula => closed_form_c(ds.setting(), ds.m_t()),
        CSource::Matrix => match oracle {
            Some(oracle) => oracle.c(ds.t()),
            None => MatrixOracle::new(ds.setting())?.c(ds.t()),
        },
    }
}

/// The parameter tuple of the code on Δ(t), with `c` from the chosen route.
pub fn eaqecc_params(setting: &CodeSetting, t: usize, source: CSource) -> Result<EaqeccParams> {
    let table = Arc::new(setting.coset_table());
    let ds = DefiningSet::new(setting, &table, t)?;
    let c = c_from_source(&ds, source, None)?;
    Ok(params_from_defining_set(&ds, c))
}

/// Parameter tuples for every defining set of the setting, ordered by t.
/// Rows with k <= 0 are kept and flagged rather than dropped.
pub fn sweep(setting: &CodeSetting, source: CSource) -> Result<Vec<EaqeccParams>> {
    let table = Arc::new(setting.coset_table());
    let oracle = match source {
        CSource::Matrix => Some(MatrixOracle::new(setting)?),
        _ => None,
    };
    let mut rows = Vec::with_capacity(table.z() + 1);
    for t in 0..=table.z() {
        let ds = DefiningSet::new(setting, &table, t)?;
        let c = c_from_source(&ds, source, oracle.as_ref())?;
        rows.push(params_from_defining_set(&ds, c));
    }
    Ok(rows)
}

/// The entanglement counts produced by every available route at one t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CRecord {
    pub t: usize,
    pub m_t: u64,
    pub c_coset: u64,
    pub c_formula: Option<u64>,
    pub c_matrix: Option<u64>,
}

impl CRecord {
    /// All present routes agree.
    pub fn consistent(&self) -> bool {
        self.c_formula.is_none_or(|v| v == self.c_coset)
            && self.c_matrix.is_none_or(|v| v == self.c_coset)
    }
}

/// Compute one verification record. `table` must come from
/// `setting.coset_table()`, and `oracle`, when given, from the same setting.
pub fn verify_record(
    setting: &CodeSetting,
    table: &Arc<CosetTable>,
    oracle: Option<&MatrixOracle>,
    t: usize,
) -> Result<CRecord> {
    let ds = DefiningSet::new(setting, table, t)?;
    let c_coset = c_by_cosets(&ds);
    let c_formula = match setting.family() {
        Some(_) => Some(closed_form_c(setting, ds.m_t())?),
        None => None,
    };
    let c_matrix = match oracle {
        Some(oracle) => Some(oracle.c(t)?),
        None => None,
    };
    Ok(CRecord {
        t,
        m_t: ds.m_t(),
        c_coset,
        c_formula,
        c_matrix,
    })
}

/// Outcome of running every available route at every t of a setting.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub setting: CodeSetting,
    pub records: Vec<CRecord>,
    pub mismatches: Vec<CRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn from_records(setting: CodeSetting, records: Vec<CRecord>) -> Self {
        let mismatches = records.iter().filter(|r| !r.consistent()).copied().collect();
        VerificationReport {
            setting,
            records,
            mismatches,
        }
    }
}

/// Run every c-route at every t. Disagreements are collected, not raised.
pub fn verify_setting(setting: &CodeSetting, use_matrix: bool) -> Result<VerificationReport> {
    let table = Arc::new(setting.coset_table());
    let oracle = if use_matrix {
        Some(MatrixOracle::new(setting)?)
    } else {
        None
    };
    let mut records = Vec::with_capacity(table.z() + 1);
    for t in 0..=table.z() {
        records.push(verify_record(setting, &table, oracle.as_ref(), t)?);
    }
    Ok(VerificationReport::from_records(*setting, records))
}
