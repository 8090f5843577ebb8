//! Parameters of entanglement-assisted quantum error-correcting codes
//! (EAQECCs) built from Reed-Solomon and BCH codes.
//!
//! A classical code `E` over GF(q) (or GF(q²) for the Hermitian inner
//! product) with dual `C` yields an EAQECC `[[n, n - 2 dim E + c, d; c]]_q`
//! where `c = dim E - dim(E ∩ C)` counts the maximally entangled pairs the
//! code consumes. For codes defined by consecutive cyclotomic cosets, `c`
//! is determined entirely by the symmetric / asymmetric structure of those
//! cosets, and for three families it collapses to closed-form expressions
//! in the q-adic digits of the last coset representative:
//!
//! * Reed-Solomon codes over GF(q²), Hermitian duality, length q²-1 or q²;
//! * BCH codes over GF(q) with extension degree 2, Euclidean duality,
//!   length q²-1 or q²;
//! * BCH codes over GF(q²) with extension degree 2, Hermitian duality,
//!   length q⁴-1 or q⁴.
//!
//! The crate keeps three independent routes to `c` and cross-checks them:
//!
//! 1. [`cosets::c_by_cosets`] — the normative coset-level computation,
//! 2. [`formulas`] — the closed forms, validated against (1),
//! 3. [`codes::c_by_matrices`] — exact finite-field linear algebra
//!    (build the code, take subfield subcodes and duals, measure the hull).
//!
//! [`params`] assembles `[[n, k, d; c]]_q` tuples and sweeps whole families;
//! [`fixtures`] ships reference tables of known good codes.

pub mod cosets;
pub mod setting;
pub mod formulas;
pub mod field;
pub mod matrix;
pub mod codes;
pub mod params;
pub mod fixtures;

pub use cosets::{
    bch_bound, c_by_cosets, classify_coset, coset_table, cyclotomic_coset, defining_set,
    dual_defining_set, partition_rl, qadic, subfield_dimension, CosetClass, CosetTable, CycCoset,
    DefiningSet, Metric,
};
pub use codes::{c_by_matrices, rs_generator_matrix, subfield_subcode_basis, MatrixOracle};
pub use field::{make_field, Elem, FiniteField};
pub use formulas::{
    c_bch_euclidean, c_bch_hermitian, c_rs_hermitian, closed_form_c, closed_form_c_checked,
    euclid_pair_counts, euclid_special_counts, interlude_elements, sr_count_interlude,
    FormulaCase, FormulaMode,
};
pub use matrix::{dual_basis, exhaustive_min_distance, intersection_dimension, FieldMatrix};
pub use params::{
    eaqecc_params, sweep, verify_record, verify_setting, CRecord, CSource, EaqeccParams,
    VerificationReport,
};
pub use setting::{CodeSetting, Family};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("element {x} out of range for modulus {n}")]
    ElementOutOfRange { x: u64, n: u64 },
    #[error("coset index {t} out of range (0..={z})")]
    IndexOutOfRange { t: usize, z: usize },
    #[error("base of a q-adic expansion must be at least 2, got {q}")]
    QadicBase { q: u64 },
    #[error("{x} has no {digits}-digit expansion in base {q}")]
    QadicOutOfRange { x: u64, q: u64, digits: usize },
    #[error("digit {d} out of range for base {q}")]
    DigitOutOfRange { d: u64, q: u64 },
    #[error("no interlude follows the digit pair ({a2}, {a3}); it bounds the top of Z_n")]
    NoSuchInterlude { a2: u64, a3: u64 },
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },
    #[error("extension degree must be 1 or 2, got {degree}")]
    BadExtensionDegree { degree: u32 },
    #[error("Hermitian settings need a square classical field, got size {size}")]
    HermitianNonSquare { size: u64 },
    #[error("field of size {size} exceeds the supported limit {limit}")]
    FieldTooLarge { size: u128, limit: u64 },
    #[error("t = {t} out of range (0..={max})")]
    TOutOfRange { t: u64, max: u64 },
    #[error("{x} is not a minimal coset representative mod {n}")]
    NotMinimalRepresentative { x: u64, n: u64 },
    #[error("no closed form covers this setting")]
    NoClosedForm,
    #[error(
        "closed form disagrees with the coset oracle: {family} q={q} m_t={m_t} \
         extended={extended}: formula {formula} vs cosets {coset}"
    )]
    OracleMismatch {
        family: Family,
        q: u64,
        m_t: u64,
        extended: bool,
        formula: u64,
        coset: u64,
    },
    #[error("modulus polynomial must be monic of degree {degree} with digits below {p}")]
    BadModulus { degree: u32, p: u64 },
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("subfield degree {r} does not divide the field degree {ell}")]
    SubfieldDegree { r: u32, ell: u32 },
    #[error("matrix shape mismatch")]
    ShapeMismatch,
    #[error("matrices belong to different fields or scalar subfields")]
    FieldMismatch,
    #[error("operation needs entries over the full field, not a proper subfield")]
    ScalarMismatch,
    #[error("exponent {i} out of range for length {n}")]
    ExponentOutOfRange { i: u64, n: u64 },
    #[error("enumeration of {words} codewords exceeds the budget {budget}")]
    BudgetExceeded { words: u128, budget: u64 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("fixture parse error at line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
