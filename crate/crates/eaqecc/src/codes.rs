//! Evaluation codes over GF(p^ℓ) and the brute-force verification path:
//! build the actual generator matrices, restrict to subfield-valued
//! codewords, take duals, and measure the hull by exact rank computations.

use crate::cosets::{dual_defining_set, DefiningSet};
use crate::field::{make_field, FiniteField};
use crate::matrix::{dual_basis, exhaustive_min_distance, intersection_dimension, FieldMatrix};
use crate::setting::CodeSetting;
use crate::{Error, Result};
use std::sync::Arc;

/// Generator matrix of the evaluation code with the given monomial
/// exponents: one row per exponent `i`, evaluating X^i at g^0, ..., g^(n-2),
/// g^(n-1) with n = field size - 1. When `eval_at_zero` is set, a leading
/// column evaluates at 0 (1 for exponent 0, else 0).
pub fn rs_generator_matrix(
    field: &Arc<FiniteField>,
    exponents: &[u64],
    eval_at_zero: bool,
) -> Result<FieldMatrix> {
    let n = field.size() - 1;
    let mut exps: Vec<u64> = exponents.to_vec();
    exps.sort_unstable();
    exps.dedup();
    if let Some(&bad) = exps.iter().find(|&&i| i >= n) {
        return Err(Error::ExponentOutOfRange { i: bad, n });
    }
    let cols = n as usize + usize::from(eval_at_zero);
    let mut data = Vec::with_capacity(exps.len() * cols);
    for &i in &exps {
        if eval_at_zero {
            data.push(if i == 0 { 1 } else { 0 });
        }
        for j in 0..n {
            data.push(field.element_from_log(((i as u128 * j as u128) % n as u128) as u64));
        }
    }
    FieldMatrix::new(Arc::clone(field), exps.len(), cols, data)
}

/// Basis over GF(p^r) of the subfield subcode: all codewords of the
/// rowspace of `m` whose coordinates lie in GF(p^r). Computed by writing
/// a parity check of the big code, expanding each of its entries over a
/// GF(p^r)-basis of the field, and solving the resulting homogeneous
/// system over the subfield.
pub fn subfield_subcode_basis(m: &FieldMatrix, r: u32) -> Result<FieldMatrix> {
    let field = m.field();
    if m.scalar() != field.size() {
        return Err(Error::ScalarMismatch);
    }
    if r == 0 || !field.degree().is_multiple_of(r) {
        return Err(Error::SubfieldDegree {
            r,
            ell: field.degree(),
        });
    }
    let expansion = field.subfield_expansion(r)?;
    let parity = m.nullspace();
    let e = expansion.dim;
    let cols = m.cols();
    let mut data = Vec::with_capacity(parity.rows() * e * cols);
    for i in 0..parity.rows() {
        for coord in 0..e {
            for j in 0..cols {
                data.push(expansion.coord(parity.at(i, j), coord));
            }
        }
    }
    let expanded = FieldMatrix::with_scalar(
        Arc::clone(field),
        expansion.sub_size,
        parity.rows() * e,
        cols,
        data,
    )?;
    Ok(expanded.nullspace())
}

/// Largest evaluation field the brute-force route will touch. Beyond this
/// the dense nullspace computations grow with the square of the length and
/// stop being a sane cross-check.
pub const MATRIX_ORACLE_LIMIT: u64 = 1 << 10;

/// Brute-force route to the entanglement count for one setting: shares the
/// evaluation field and coset table across all values of t.
pub struct MatrixOracle {
    setting: CodeSetting,
    field: Arc<FiniteField>,
    table: Arc<crate::cosets::CosetTable>,
}

impl MatrixOracle {
    pub fn new(setting: &CodeSetting) -> Result<Self> {
        if setting.evaluation_field_size() > MATRIX_ORACLE_LIMIT {
            return Err(Error::FieldTooLarge {
                size: setting.evaluation_field_size() as u128,
                limit: MATRIX_ORACLE_LIMIT,
            });
        }
        let field = make_field(setting.characteristic(), setting.ell())?;
        Ok(MatrixOracle {
            setting: *setting,
            field,
            table: Arc::new(setting.coset_table()),
        })
    }

    pub fn setting(&self) -> &CodeSetting {
        &self.setting
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn defining_set(&self, t: usize) -> Result<DefiningSet> {
        DefiningSet::new(&self.setting, &self.table, t)
    }

    /// Generator matrix of the evaluation code on Δ(t) over GF(p^ℓ).
    pub fn evaluation_matrix(&self, t: usize) -> Result<FieldMatrix> {
        let ds = self.defining_set(t)?;
        rs_generator_matrix(&self.field, ds.exponents(), self.setting.eval_at_zero())
    }

    /// Basis of the classical code E: the subfield subcode of the
    /// evaluation code, over GF(p^r).
    pub fn classical_code(&self, t: usize) -> Result<FieldMatrix> {
        let g = self.evaluation_matrix(t)?;
        subfield_subcode_basis(&g, self.setting.subfield_power())
    }

    /// Basis of C, the dual of E under the setting's inner product.
    pub fn dual_code(&self, t: usize) -> Result<FieldMatrix> {
        dual_basis(&self.classical_code(t)?, self.setting.metric())
    }

    /// c = dim E - dim(E ∩ C), measured on actual matrices.
    pub fn c(&self, t: usize) -> Result<u64> {
        let e = self.classical_code(t)?;
        let c = dual_basis(&e, self.setting.metric())?;
        Ok((e.rank() - intersection_dimension(&e, &c)?) as u64)
    }

    /// Exhaustive minimum distance of the dual code C on Δ(t).
    pub fn dual_min_distance(&self, t: usize, budget: u64) -> Result<u64> {
        exhaustive_min_distance(&self.dual_code(t)?, budget)
    }

    /// The subfield subcode built directly on the dual defining set; spans
    /// the same space as [`Self::dual_code`] for unextended settings.
    pub fn dual_set_code(&self, t: usize) -> Result<FieldMatrix> {
        let ds = self.defining_set(t)?;
        let dual_exps = dual_defining_set(&ds);
        let g = rs_generator_matrix(&self.field, &dual_exps, false)?;
        subfield_subcode_basis(&g, self.setting.subfield_power())
    }
}

/// One-shot form of [`MatrixOracle::c`].
pub fn c_by_matrices(setting: &CodeSetting, t: usize) -> Result<u64> {
    MatrixOracle::new(setting)?.c(t)
}
