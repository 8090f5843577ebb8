//! Cyclotomic cosets, their reciprocal structure, and the coset-level
//! computation of the entanglement count.
//!
//! Everything here is integer arithmetic in Z_n. The minimal cyclotomic
//! coset of `x` with respect to a multiplier `m` is the orbit
//! `{x, xm, xm², ...} mod n`; its minimum is the *minimal representative*.
//! A defining set Δ(t) is the union of the first t+1 cosets ordered by
//! minimal representative, and the entanglement count of the code built
//! on Δ(t) is read off from which cosets are symmetric (self-reciprocal)
//! or pair up asymmetrically.

use crate::setting::CodeSetting;
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Inner product used for duals and reciprocal cosets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// ⟨x, y⟩ = Σ xᵢ yᵢ; the reciprocal of the coset of x is the coset of n - x.
    Euclidean,
    /// ⟨x, y⟩ = Σ xᵢ yᵢ^q; the reciprocal of the coset of x is the coset of n - qx.
    Hermitian,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Euclidean => "euclidean",
            Metric::Hermitian => "hermitian",
        })
    }
}

impl FromStr for Metric {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "euclidean" => Ok(Metric::Euclidean),
            "hermitian" => Ok(Metric::Hermitian),
            other => Err(format!(
                "unknown metric `{other}` (expected euclidean or hermitian)"
            )),
        }
    }
}

/// One minimal cyclotomic coset mod `modulus` with respect to `multiplier`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycCoset {
    modulus: u64,
    multiplier: u64,
    min_rep: u64,
    elements: Vec<u64>,
}

impl CycCoset {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn min_rep(&self) -> u64 {
        self.min_rep
    }

    /// Sorted orbit elements.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false: an orbit contains at least its seed.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// The orbit of `x` under multiplication by `mult` in Z_n: all values of
/// `x · mult^t`. The sequence is eventually periodic for any multiplier,
/// so the orbit is collected until a repeat; with `mult` invertible mod n
/// (every code setting here) it is a plain cycle through `x`.
pub fn cyclotomic_coset(x: u64, n: u64, mult: u64) -> Result<CycCoset> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if x >= n {
        return Err(Error::ElementOutOfRange { x, n });
    }
    let mult = mult % n;
    let mut seen = std::collections::HashSet::new();
    let mut elements = Vec::new();
    let mut y = x;
    while seen.insert(y) {
        elements.push(y);
        y = mul_mod(y, mult, n);
    }
    elements.sort_unstable();
    Ok(CycCoset {
        modulus: n,
        multiplier: mult,
        min_rep: elements[0],
        elements,
    })
}

/// All minimal cyclotomic cosets of Z_n, ordered by minimal representative.
#[derive(Debug, Clone)]
pub struct CosetTable {
    modulus: u64,
    multiplier: u64,
    reps: Vec<u64>,
    sizes: Vec<u64>,
    /// Prefix sums of `sizes`: cumulative[j] = Σ_{i<=j} sizes[i].
    cumulative: Vec<u64>,
    /// element -> index of its coset in `reps`
    coset_index: Vec<u32>,
}

impl CosetTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    /// Minimal representatives m_0 = 0 < m_1 < ... < m_z.
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }

    /// Coset cardinalities, parallel to `reps`.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Index of the last coset, z.
    pub fn z(&self) -> usize {
        self.reps.len() - 1
    }

    /// Index (into `reps`) of the coset containing `x`.
    pub fn coset_index_of(&self, x: u64) -> usize {
        self.coset_index[x as usize] as usize
    }

    /// Reconstruct the j-th coset.
    pub fn coset(&self, j: usize) -> CycCoset {
        cyclotomic_coset(self.reps[j], self.modulus, self.multiplier)
            .expect("reps are in range by construction")
    }

    /// Σ sizes of cosets 0..=t.
    pub fn dimension_through(&self, t: usize) -> u64 {
        self.cumulative[t]
    }

    /// Index of the coset whose minimal representative is `m`, if any.
    pub fn index_of_rep(&self, m: u64) -> Option<usize> {
        self.reps.binary_search(&m).ok()
    }
}

/// Partition Z_n into minimal cyclotomic cosets with respect to `mult`.
/// The partition semantics assume `mult` is invertible mod n, which holds
/// for every code setting (the multiplier is a power of the characteristic
/// and n is one less than a larger power); other multipliers still
/// terminate but orbits then overlap and are assigned first-come.
pub fn coset_table(n: u64, mult: u64) -> Result<CosetTable> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mult = mult % n;
    let mut coset_index = vec![u32::MAX; n as usize];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if coset_index[x as usize] != u32::MAX {
            continue;
        }
        let idx = reps.len() as u32;
        let mut size = 0u64;
        let mut y = x;
        while coset_index[y as usize] == u32::MAX {
            coset_index[y as usize] = idx;
            size += 1;
            y = mul_mod(y, mult, n);
        }
        reps.push(x);
        sizes.push(size);
    }
    let mut cumulative = Vec::with_capacity(sizes.len());
    let mut acc = 0u64;
    for &s in &sizes {
        acc += s;
        cumulative.push(acc);
    }
    debug_assert_eq!(acc, n);
    Ok(CosetTable {
        modulus: n,
        multiplier: mult,
        reps,
        sizes,
        cumulative,
        coset_index,
    })
}

/// How a coset relates to its reciprocal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetClass {
    /// The reciprocal coset is the coset itself.
    Symmetric,
    /// Asymmetric, and this coset holds the smaller minimal representative.
    FrAsymmetric { partner: u64 },
    /// Asymmetric, and this coset holds the larger minimal representative.
    SrAsymmetric { partner: u64 },
}

impl CosetClass {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, CosetClass::Symmetric)
    }

    pub fn is_fr(&self) -> bool {
        matches!(self, CosetClass::FrAsymmetric { .. })
    }

    pub fn is_sr(&self) -> bool {
        matches!(self, CosetClass::SrAsymmetric { .. })
    }

    /// Minimal representative of the reciprocal coset, for asymmetric cosets.
    pub fn partner(&self) -> Option<u64> {
        match self {
            CosetClass::Symmetric => None,
            CosetClass::FrAsymmetric { partner } | CosetClass::SrAsymmetric { partner } => {
                Some(*partner)
            }
        }
    }
}

/// Reciprocal coset: the coset of n - x (Euclidean) or n - qx (Hermitian,
/// with q = `qbase`). Well defined on orbits, so any element of `c` works.
pub fn reciprocal_coset(c: &CycCoset, metric: Metric, qbase: u64) -> CycCoset {
    let n = c.modulus;
    let x = c.min_rep;
    let image = match metric {
        Metric::Euclidean => (n - x) % n,
        Metric::Hermitian => (n - mul_mod(qbase % n, x, n)) % n,
    };
    cyclotomic_coset(image, n, c.multiplier).expect("image is reduced mod n")
}

/// Compare a coset with its reciprocal. For multi-element cosets the
/// reciprocal's minimal representative is the minimum over its whole orbit.
pub fn classify_coset(c: &CycCoset, metric: Metric, qbase: u64) -> CosetClass {
    let recip = reciprocal_coset(c, metric, qbase);
    if recip.min_rep == c.min_rep {
        CosetClass::Symmetric
    } else if recip.min_rep > c.min_rep {
        CosetClass::FrAsymmetric {
            partner: recip.min_rep,
        }
    } else {
        CosetClass::SrAsymmetric {
            partner: recip.min_rep,
        }
    }
}

/// Δ(t): the union of the cosets with the t+1 smallest minimal representatives.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    setting: CodeSetting,
    table: Arc<CosetTable>,
    t: usize,
    exponents: Vec<u64>,
    m_t: u64,
    m_next: u64,
}

impl DefiningSet {
    /// Build Δ(t) on a shared coset table. The table must be the one the
    /// setting produces (`setting.coset_table()`).
    pub fn new(setting: &CodeSetting, table: &Arc<CosetTable>, t: usize) -> Result<Self> {
        debug_assert_eq!(table.modulus(), setting.n());
        debug_assert_eq!(table.multiplier(), setting.multiplier());
        let z = table.z();
        if t > z {
            return Err(Error::IndexOutOfRange { t, z });
        }
        let mut exponents = Vec::with_capacity(table.dimension_through(t) as usize);
        for j in 0..=t {
            exponents.extend_from_slice(table.coset(j).elements());
        }
        exponents.sort_unstable();
        let m_next = if t < z { table.reps()[t + 1] } else { table.modulus() };
        Ok(DefiningSet {
            setting: *setting,
            table: Arc::clone(table),
            t,
            exponents,
            m_t: table.reps()[t],
            m_next,
        })
    }

    pub fn setting(&self) -> &CodeSetting {
        &self.setting
    }

    pub fn table(&self) -> &Arc<CosetTable> {
        &self.table
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Sorted union of the member cosets.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn m_t(&self) -> u64 {
        self.m_t
    }

    /// m_{t+1}, or n once Δ exhausts Z_n.
    pub fn m_next(&self) -> u64 {
        self.m_next
    }
}

/// Build Δ(t) for a setting, computing the coset table on the spot.
pub fn defining_set(setting: &CodeSetting, t: usize) -> Result<DefiningSet> {
    let table = Arc::new(setting.coset_table());
    DefiningSet::new(setting, &table, t)
}

/// Complement in Z_n of the union of the reciprocals of Δ's cosets.
/// This is the defining set of the dual code.
pub fn dual_defining_set(ds: &DefiningSet) -> Vec<u64> {
    let n = ds.table.modulus();
    let mut excluded = vec![false; n as usize];
    for j in 0..=ds.t {
        let recip = ds.setting.reciprocal(&ds.table.coset(j));
        for &e in recip.elements() {
            excluded[e as usize] = true;
        }
    }
    (0..n).filter(|&x| !excluded[x as usize]).collect()
}

/// Split Δ into the hull part and its complement, as exponent sets:
/// the first component collects asymmetric cosets whose reciprocal lies
/// outside Δ, the second everything else (symmetric cosets and asymmetric
/// cosets whose reciprocal also lies in Δ).
///
/// The split ignores the zero-evaluation flag; [`c_by_cosets`] accounts
/// for it.
pub fn partition_rl(ds: &DefiningSet) -> (Vec<u64>, Vec<u64>) {
    let mut i_r = Vec::new();
    let mut i_l = Vec::new();
    for j in 0..=ds.t {
        let coset = ds.table.coset(j);
        let outside = match ds.setting.classify(&coset) {
            CosetClass::Symmetric => false,
            CosetClass::FrAsymmetric { partner } | CosetClass::SrAsymmetric { partner } => {
                ds.table.coset_index_of(partner) > ds.t
            }
        };
        let bucket = if outside { &mut i_r } else { &mut i_l };
        bucket.extend_from_slice(coset.elements());
    }
    i_r.sort_unstable();
    i_l.sort_unstable();
    (i_r, i_l)
}

/// Entanglement count of the code on Δ: the number of exponents of Δ whose
/// coset is symmetric or has its reciprocal inside Δ. Evaluating at zero
/// turns the coset {0} from symmetric into asymmetric-with-reciprocal-
/// outside, which lowers the count by one.
pub fn c_by_cosets(ds: &DefiningSet) -> u64 {
    let mut c = 0u64;
    for j in 0..=ds.t {
        let coset = ds.table.coset(j);
        let in_hull_complement = match ds.setting.classify(&coset) {
            CosetClass::Symmetric => true,
            CosetClass::FrAsymmetric { partner } | CosetClass::SrAsymmetric { partner } => {
                ds.table.coset_index_of(partner) <= ds.t
            }
        };
        if in_hull_complement {
            c += coset.len() as u64;
        }
    }
    if ds.setting.eval_at_zero() {
        c -= 1;
    }
    c
}

/// Dimension of the subfield subcode on Δ: the number of exponents.
pub fn subfield_dimension(ds: &DefiningSet) -> u64 {
    ds.exponents.len() as u64
}

/// Designed distance of the dual code: m_{t+1} + 1 (n + 1 when Δ = Z_n).
pub fn bch_bound(ds: &DefiningSet) -> u64 {
    ds.m_next + 1
}

/// Little-endian base-q digits of `x`, exactly `digits` of them.
pub fn qadic(x: u64, q: u64, digits: usize) -> Result<Vec<u64>> {
    if q < 2 {
        return Err(Error::QadicBase { q });
    }
    let cap = (q as u128).checked_pow(digits as u32).unwrap_or(u128::MAX);
    if (x as u128) >= cap {
        return Err(Error::QadicOutOfRange { x, q, digits });
    }
    let mut out = Vec::with_capacity(digits);
    let mut v = x;
    for _ in 0..digits {
        out.push(v % q);
        v /= q;
    }
    Ok(out)
}

/// Inverse of [`qadic`].
pub fn from_qadic(digits: &[u64], q: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * q + d)
}
