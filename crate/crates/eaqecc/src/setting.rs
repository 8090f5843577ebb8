//! Code settings: which field, which metric, which length.
//!
//! A [`CodeSetting`] fixes everything a construction needs: the classical
//! code lives over GF(p^r), polynomials are evaluated over GF(p^ℓ) with
//! ℓ = r · extension_degree, the length is n = p^ℓ - 1 (n + 1 once the
//! zero point joins the evaluation set), and cyclotomic cosets are taken
//! mod n with respect to p^r.

use crate::cosets::{coset_table, CosetTable, CycCoset, CosetClass, classify_coset, reciprocal_coset};
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Largest evaluation field the crate will work with.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// The three code families with a closed form for the entanglement count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Reed-Solomon over GF(q²), Hermitian duality, length q²-1 / q².
    RsHermitian,
    /// BCH over GF(q), extension degree 2, Euclidean duality, length q²-1 / q².
    BchEuclidean,
    /// BCH over GF(q²), extension degree 2, Hermitian duality, length q⁴-1 / q⁴.
    BchHermitian,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::RsHermitian => "rs-hermitian",
            Family::BchEuclidean => "bch-euclidean",
            Family::BchHermitian => "bch-hermitian",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rs-hermitian" => Ok(Family::RsHermitian),
            "bch-euclidean" => Ok(Family::BchEuclidean),
            "bch-hermitian" => Ok(Family::BchHermitian),
            other => Err(format!(
                "unknown family `{other}` (expected rs-hermitian, bch-euclidean or bch-hermitian)"
            )),
        }
    }
}

/// Trial-division primality check; exact for the sizes this crate accepts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Decompose `q` as `p^s` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            let mut s = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                s += 1;
            }
            return if m == 1 { Some((p, s)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// All prime powers in `lo..=hi`.
pub fn prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&q| prime_power(q).is_some()).collect()
}

/// A fully specified construction: classical alphabet GF(p^r), evaluation
/// field GF(p^ℓ) with ℓ = r · extension_degree, metric, and whether the
/// zero point joins the evaluation set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeSetting {
    p: u64,
    r: u32,
    extension_degree: u32,
    metric: crate::cosets::Metric,
    eval_at_zero: bool,
}

use crate::cosets::Metric;

impl CodeSetting {
    pub fn new(
        p: u64,
        r: u32,
        extension_degree: u32,
        metric: Metric,
        eval_at_zero: bool,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        if r == 0 || !(1..=2).contains(&extension_degree) {
            return Err(Error::BadExtensionDegree {
                degree: extension_degree,
            });
        }
        let ell = r * extension_degree;
        let size = (p as u128).checked_pow(ell).unwrap_or(u128::MAX);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(Error::FieldTooLarge {
                size,
                limit: MAX_FIELD_SIZE,
            });
        }
        if metric == Metric::Hermitian && !r.is_multiple_of(2) {
            return Err(Error::HermitianNonSquare {
                size: p.pow(r),
            });
        }
        Ok(CodeSetting {
            p,
            r,
            extension_degree,
            metric,
            eval_at_zero,
        })
    }

    /// Reed-Solomon codes over GF(q²) with the Hermitian inner product.
    pub fn rs_hermitian(q: u64, eval_at_zero: bool) -> Result<Self> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower { q })?;
        CodeSetting::new(p, 2 * s, 1, Metric::Hermitian, eval_at_zero)
    }

    /// BCH codes over GF(q), extension degree 2, Euclidean inner product.
    pub fn bch_euclidean(q: u64, eval_at_zero: bool) -> Result<Self> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower { q })?;
        CodeSetting::new(p, s, 2, Metric::Euclidean, eval_at_zero)
    }

    /// BCH codes over GF(q²), extension degree 2, Hermitian inner product.
    pub fn bch_hermitian(q: u64, eval_at_zero: bool) -> Result<Self> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower { q })?;
        CodeSetting::new(p, 2 * s, 2, Metric::Hermitian, eval_at_zero)
    }

    /// Build a setting from a family label and the family's q parameter.
    pub fn from_family(family: Family, q: u64, eval_at_zero: bool) -> Result<Self> {
        match family {
            Family::RsHermitian => CodeSetting::rs_hermitian(q, eval_at_zero),
            Family::BchEuclidean => CodeSetting::bch_euclidean(q, eval_at_zero),
            Family::BchHermitian => CodeSetting::bch_hermitian(q, eval_at_zero),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree of the classical alphabet over GF(p): the alphabet is GF(p^r).
    pub fn subfield_power(&self) -> u32 {
        self.r
    }

    pub fn extension_degree(&self) -> u32 {
        self.extension_degree
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn eval_at_zero(&self) -> bool {
        self.eval_at_zero
    }

    /// Same setting with the zero-evaluation flag replaced.
    pub fn with_eval_at_zero(&self, eval_at_zero: bool) -> Self {
        CodeSetting {
            eval_at_zero,
            ..*self
        }
    }

    /// Degree of the evaluation field over GF(p).
    pub fn ell(&self) -> u32 {
        self.r * self.extension_degree
    }

    /// Size of the classical alphabet, p^r.
    pub fn classical_field_size(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// Size of the evaluation field, p^ℓ.
    pub fn evaluation_field_size(&self) -> u64 {
        self.p.pow(self.ell())
    }

    /// Length of the unextended code: n = p^ℓ - 1.
    pub fn n(&self) -> u64 {
        self.evaluation_field_size() - 1
    }

    /// Actual code length: n, or n + 1 when evaluating at zero.
    pub fn code_length(&self) -> u64 {
        self.n() + u64::from(self.eval_at_zero)
    }

    /// Coset multiplier: the classical alphabet size reduced mod n.
    pub fn multiplier(&self) -> u64 {
        self.classical_field_size() % self.n()
    }

    /// Exponent base of the Hermitian inner product: √(p^r).
    pub fn hermitian_base(&self) -> Option<u64> {
        match self.metric {
            Metric::Hermitian => Some(self.p.pow(self.r / 2)),
            Metric::Euclidean => None,
        }
    }

    /// Alphabet of the resulting EAQECC: p^r for Euclidean settings,
    /// √(p^r) for Hermitian ones.
    pub fn eaqecc_alphabet(&self) -> u64 {
        match self.metric {
            Metric::Euclidean => self.classical_field_size(),
            Metric::Hermitian => self.p.pow(self.r / 2),
        }
    }

    /// The closed-form family covering this setting, if any.
    pub fn family(&self) -> Option<Family> {
        match (self.extension_degree, self.metric) {
            (1, Metric::Hermitian) => Some(Family::RsHermitian),
            (2, Metric::Euclidean) => Some(Family::BchEuclidean),
            (2, Metric::Hermitian) => Some(Family::BchHermitian),
            _ => None,
        }
    }

    /// Cyclotomic cosets of this setting: mod n with respect to p^r.
    pub fn coset_table(&self) -> CosetTable {
        coset_table(self.n(), self.multiplier()).expect("n >= 1 for a valid setting")
    }

    /// Reciprocal of a coset under this setting's inner product.
    pub fn reciprocal(&self, c: &CycCoset) -> CycCoset {
        reciprocal_coset(c, self.metric, self.hermitian_base().unwrap_or(1))
    }

    /// Classify a coset under this setting's inner product.
    pub fn classify(&self, c: &CycCoset) -> CosetClass {
        classify_coset(c, self.metric, self.hermitian_base().unwrap_or(1))
    }
}
