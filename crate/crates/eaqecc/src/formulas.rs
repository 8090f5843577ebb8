//! Closed-form expressions for the entanglement count `c`, one per family,
//! in terms of the q-adic digits of the last minimal representative m_t.
//!
//! The coset-level computation ([`crate::cosets::c_by_cosets`]) is the
//! source of truth; these formulas are validated against it exhaustively
//! and a [`FormulaMode::CrossChecked`] mode re-runs that comparison on
//! every call. Each case of the degree-2 Hermitian count is assembled from
//! named blocks (singleton cosets, full interludes, the partial interlude
//! holding m_t) so every block can be tested against direct enumeration
//! on its own.

use crate::cosets::{c_by_cosets, from_qadic, qadic, DefiningSet};
use crate::setting::{prime_power, CodeSetting, Family};
use crate::{Error, Result};
use std::sync::Arc;

/// Whether closed forms re-verify themselves against the coset oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaMode {
    /// Trust the closed form.
    Fast,
    /// Recompute `c` at the coset level and fail on any disagreement.
    CrossChecked,
}

/// One evaluation point of a closed form: family, q, m_t and its digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCase {
    pub family: Family,
    pub q: u64,
    pub m_t: u64,
    pub extended: bool,
    /// Little-endian q-adic digits of m_t: two for the length-q² families,
    /// four for length q⁴.
    pub digits: Vec<u64>,
}

fn orbit_min(x: u64, n: u64, mult: u64) -> u64 {
    let mult = mult % n;
    let mut min = x;
    let mut y = (x as u128 * mult as u128 % n as u128) as u64;
    while y != x {
        min = min.min(y);
        y = (y as u128 * mult as u128 % n as u128) as u64;
    }
    min
}

impl FormulaCase {
    pub fn new(family: Family, q: u64, m_t: u64, extended: bool) -> Result<Self> {
        prime_power(q).ok_or(Error::NotPrimePower { q })?;
        match family {
            Family::RsHermitian => {
                if m_t > q * q - 2 {
                    return Err(Error::TOutOfRange {
                        t: m_t,
                        max: q * q - 2,
                    });
                }
            }
            Family::BchEuclidean => {
                let n = q * q - 1;
                if m_t >= n {
                    return Err(Error::ElementOutOfRange { x: m_t, n });
                }
                if orbit_min(m_t, n, q) != m_t {
                    return Err(Error::NotMinimalRepresentative { x: m_t, n });
                }
            }
            Family::BchHermitian => {
                let n = q * q * q * q - 1;
                if m_t >= n {
                    return Err(Error::ElementOutOfRange { x: m_t, n });
                }
                if orbit_min(m_t, n, q * q) != m_t {
                    return Err(Error::NotMinimalRepresentative { x: m_t, n });
                }
            }
        }
        let width = if family == Family::BchHermitian { 4 } else { 2 };
        let digits = qadic(m_t, q, width)?;
        Ok(FormulaCase {
            family,
            q,
            m_t,
            extended,
            digits,
        })
    }

    /// Evaluate the closed form.
    pub fn c(&self) -> u64 {
        let q = self.q as i64;
        let unextended = match self.family {
            Family::RsHermitian => {
                let (b0, b1) = (self.digits[0] as i64, self.digits[1] as i64);
                if b0 + b1 < q - 1 {
                    1 + b1 * b1
                } else {
                    b1 * b1 + 2 * (b0 + b1 - q) + 4
                }
            }
            Family::BchEuclidean => {
                let (b0, b1) = (self.digits[0], self.digits[1]);
                let (lt, over, eq) = euclid_pair_counts(self.q, b0, b1);
                let (sym1, sr1, sym2) = euclid_special_counts(self.q, self.m_t);
                1 + 4 * (lt as i64 - over as i64 + eq as i64)
                    - 3 * sym1 as i64
                    - 2 * sr1 as i64
                    - 2 * sym2 as i64
            }
            Family::BchHermitian => self.hermitian_deg2_c(),
        };
        let c = unextended - i64::from(self.extended);
        debug_assert!(c >= 0);
        c as u64
    }

    fn hermitian_deg2_c(&self) -> i64 {
        let q = self.q as i64;
        let m_t = self.m_t as i64;
        let n = q * q * q * q - 1;
        let boundary = n / (q + 1);
        if m_t < boundary {
            return 1;
        }
        if m_t < q * q * q + q {
            return 2 + 4 * (m_t - boundary);
        }
        let b: Vec<i64> = self.digits.iter().map(|&d| d as i64).collect();
        let (b0, b1, b2, b3) = (b[0], b[1], b[2], b[3]);

        // SR cosets of the first interlude, plus its symmetric lower bound;
        // the +1 for that singleton cancels against the -1 that excludes it
        // from the singleton block below.
        let lead = 4 * q * (q - 1);

        // singleton cosets above the first interlude: one symmetric and a
        // run of doubly-counted asymmetric ones per digit pair (i, j)
        let singletons = b3 * b3 + max0(2 * (b2 + b3 - q + 2) - 1);

        // complete interludes with high digit pair (i, j), j < b3
        let full: i64 = (1..b3)
            .map(|j| {
                let low_sum = (q - 1 - j) * (q - j) * j;
                let run = (2 * (q - 1) - j) * (j + 1);
                debug_assert_eq!(run % 2, 0);
                let high_sum = (j + 1) * (q * q - q * j - 1) - run / 2;
                low_sum + high_sum
            })
            .sum();

        // interludes with j = b3, including the partial one holding m_t
        let tail = if b2 + b3 < q - 1 {
            b2 * b3 * (q - b3) + b3 * (b1 - b3) + max0(b0 + b3 - q + 1)
        } else {
            let start = from_qadic(
                &[b2 as u64, b3 as u64, b2 as u64, b3 as u64],
                self.q,
            ) as i64;
            let run = (b2 + b3 - q + 1) * (b2 + q - b3 - 2);
            debug_assert_eq!(run % 2, 0);
            (q - 1 - b3) * b3 * (q - b3)
                + (b2 + b3 - q + 1) * (q * q - q * b3 - 1)
                - run / 2
                + (m_t - start)
        };

        1 + lead + singletons + 4 * (full + tail)
    }
}

fn max0(v: i64) -> i64 {
    v.max(0)
}

/// Entanglement count of the Hermitian Reed-Solomon code on {0, ..., t}
/// over GF(q²) (length q² - 1, or q² when `extended`).
pub fn c_rs_hermitian(q: u64, t: u64, extended: bool) -> Result<u64> {
    Ok(FormulaCase::new(Family::RsHermitian, q, t, extended)?.c())
}

/// The three digit-counting quantities of the Euclidean degree-2 count:
/// pairs below the top digit, the overcount among them that fails the
/// minimal-representative condition, and pairs at the top digit.
/// Their combination `lt - over + eq` counts the nonzero minimal
/// representatives `a ≤ m_t` with digit sum at least q - 1.
pub fn euclid_pair_counts(q: u64, b0: u64, b1: u64) -> (u64, u64, u64) {
    debug_assert!(b0 < q && b1 < q);
    let (qi, b0, b1) = (q as i64, b0 as i64, b1 as i64);
    let lt = b1 * (b1 + 1) / 2;
    let over = max0(b1 - (qi + 1) / 2) * (b1 - qi / 2);
    let eq = max0(b0 - (qi - 1 - b1).max(b1) + 1);
    debug_assert!(over >= 0);
    (lt as u64, over as u64, eq as u64)
}

/// Cardinality corrections for the Euclidean degree-2 count: the symmetric
/// singleton (only over odd q, once m_t passes (q²-1)/2), the number of
/// asymmetric singletons with the larger representative, and the number of
/// symmetric two-element cosets reached by m_t.
pub fn euclid_special_counts(q: u64, m_t: u64) -> (u64, u64, u64) {
    debug_assert!(q >= 2 && m_t < q * q - 1);
    let sym1 = u64::from(q % 2 == 1 && m_t >= (q * q - 1) / 2);
    let sr1 = (m_t / (q + 1)).saturating_sub((q - 1) / 2);
    let sym2 = (m_t / (q - 1)).min(q / 2);
    (sym1, sr1, sym2)
}

/// Entanglement count of the Euclidean degree-2 BCH code on Δ(t) over
/// GF(q), where m_t is the largest minimal representative of Δ(t).
pub fn c_bch_euclidean(q: u64, m_t: u64, extended: bool) -> Result<u64> {
    Ok(FormulaCase::new(Family::BchEuclidean, q, m_t, extended)?.c())
}

/// Minimal representatives of two-element cosets strictly between the
/// singleton with digits (a2, a3, a2, a3) and the next singleton, as
/// integers mod q⁴ - 1. The run is a block of consecutive integers.
pub fn interlude_elements(a2: u64, a3: u64, q: u64) -> Result<Vec<u64>> {
    check_interlude_digits(a2, a3, q)?;
    let start = from_qadic(&[a2, a3, a2, a3], q);
    let len = if a2 == q - 1 {
        q * (q - 1 - a3)
    } else {
        q * (q - 1 - a3) + (q - 1 - a2)
    };
    Ok((start + 1..=start + len).collect())
}

/// Number of elements of the (a2, a3) interlude whose coset holds the
/// larger representative of an asymmetric pair.
pub fn sr_count_interlude(a2: u64, a3: u64, q: u64) -> Result<u64> {
    check_interlude_digits(a2, a3, q)?;
    Ok(if a2 + a3 < q - 1 {
        a3 * (q - a3)
    } else {
        q * q - q * a3 - a2 - 1
    })
}

fn check_interlude_digits(a2: u64, a3: u64, q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::QadicBase { q });
    }
    for d in [a2, a3] {
        if d >= q {
            return Err(Error::DigitOutOfRange { d, q });
        }
    }
    if a2 == q - 1 && a3 == q - 1 {
        // the singleton (q-1, q-1, q-1, q-1) is n itself; nothing follows it
        return Err(Error::NoSuchInterlude { a2, a3 });
    }
    Ok(())
}

/// Entanglement count of the Hermitian degree-2 BCH code on Δ(t) over
/// GF(q²) (length q⁴ - 1, or q⁴ when `extended`).
pub fn c_bch_hermitian(q: u64, m_t: u64, extended: bool) -> Result<u64> {
    Ok(FormulaCase::new(Family::BchHermitian, q, m_t, extended)?.c())
}

/// Closed-form `c` for a setting, dispatched on its family.
pub fn closed_form_c(setting: &CodeSetting, m_t: u64) -> Result<u64> {
    closed_form_c_checked(setting, m_t, FormulaMode::Fast)
}

/// Closed-form `c`, optionally re-verified against the coset computation.
pub fn closed_form_c_checked(
    setting: &CodeSetting,
    m_t: u64,
    mode: FormulaMode,
) -> Result<u64> {
    let family = setting.family().ok_or(Error::NoClosedForm)?;
    let case = FormulaCase::new(family, setting.eaqecc_alphabet(), m_t, setting.eval_at_zero())?;
    let c = case.c();
    if mode == FormulaMode::CrossChecked {
        let table = Arc::new(setting.coset_table());
        let t = table
            .index_of_rep(m_t)
            .ok_or(Error::NotMinimalRepresentative {
                x: m_t,
                n: setting.n(),
            })?;
        let coset = c_by_cosets(&DefiningSet::new(setting, &table, t)?);
        if coset != c {
            return Err(Error::OracleMismatch {
                family,
                q: case.q,
                m_t,
                extended: case.extended,
                formula: c,
                coset,
            });
        }
    }
    Ok(c)
}
