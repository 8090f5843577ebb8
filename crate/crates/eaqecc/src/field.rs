//! Exact arithmetic in GF(p^ℓ).
//!
//! Elements are residues of GF(p)\[X\] modulo a monic irreducible polynomial
//! of degree ℓ, encoded as base-p digit strings packed into a `u32`
//! (coefficient of X^i in digit i). Multiplication goes through discrete
//! logarithm tables with respect to a stored generator of the cyclic
//! multiplicative group, so all operations are table lookups plus digit
//! arithmetic. Everything is immutable after construction.

use crate::setting::is_prime;
use crate::{Error, Result};
use std::sync::Arc;

/// An element of a [`FiniteField`], encoded as packed base-p digits.
pub type Elem = u32;

/// Largest supported field.
pub const MAX_FIELD_ELEMENTS: u64 = 1 << 20;

/// Fields up to this size precompute a full addition table.
const ADD_TABLE_LIMIT: u64 = 1024;

/// Fields up to this size may expand over proper subfields.
const EXPANSION_LIMIT: u64 = 1 << 16;

/// GF(p^ℓ) with a fixed modulus and a fixed generator of the unit group.
pub struct FiniteField {
    p: u64,
    degree: u32,
    size: u64,
    modulus: Vec<u64>,
    generator: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
}

/// Digits of `x` in base p, lowest first.
fn digits(x: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    let mut v = x;
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn encode(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `poly` (mutated in place) under division by the monic
/// divisor `div`, all coefficient vectors little-endian over GF(p).
fn poly_rem(poly: &mut [u64], div: &[u64], p: u64) {
    let deg_div = div.len() - 1;
    for d in (deg_div..poly.len()).rev() {
        let c = poly[d];
        if c == 0 {
            continue;
        }
        poly[d] = 0;
        for (i, &dv) in div[..deg_div].iter().enumerate() {
            let idx = d - deg_div + i;
            poly[idx] = (poly[idx] + c * (p - dv % p)) % p;
        }
    }
}

fn poly_is_irreducible(cand: &[u64], p: u64) -> bool {
    let deg = cand.len() - 1;
    if deg == 0 {
        return false;
    }
    let mut divisor_digits: Vec<u64> = Vec::new();
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for rest in 0..count {
            divisor_digits.clear();
            divisor_digits.extend(digits(rest, p, d));
            divisor_digits.push(1);
            let mut rem = cand.to_vec();
            poly_rem(&mut rem, &divisor_digits, p);
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^degree) with the lexicographically first monic irreducible
    /// modulus (ordering monic polynomials by the packed value of their
    /// lower coefficients).
    pub fn new(p: u64, degree: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let size = (p as u128).pow(degree.max(1));
        if degree == 0 || size > MAX_FIELD_ELEMENTS as u128 {
            return Err(Error::FieldTooLarge {
                size,
                limit: MAX_FIELD_ELEMENTS,
            });
        }
        let count = p.pow(degree);
        for rest in 0..count {
            let mut cand = digits(rest, p, degree as usize);
            cand.push(1);
            if poly_is_irreducible(&cand, p) {
                return FiniteField::with_modulus(p, degree, &cand);
            }
        }
        unreachable!("an irreducible monic polynomial exists for every degree")
    }

    /// GF(p^degree) with an explicit monic irreducible modulus
    /// (little-endian coefficients, length degree + 1).
    pub fn with_modulus(p: u64, degree: u32, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let size = (p as u128).pow(degree.max(1));
        if degree == 0 || size > MAX_FIELD_ELEMENTS as u128 {
            return Err(Error::FieldTooLarge {
                size,
                limit: MAX_FIELD_ELEMENTS,
            });
        }
        if modulus.len() != degree as usize + 1
            || modulus[degree as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(Error::BadModulus { degree, p });
        }
        if !poly_is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus);
        }
        let mut field = FiniteField {
            p,
            degree,
            size: size as u64,
            modulus: modulus.to_vec(),
            generator: 0,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.build_tables();
        Ok(field)
    }

    /// Raw polynomial product mod the modulus; used only while the log
    /// tables are being built.
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let l = self.degree as usize;
        let da = digits(a, self.p, l);
        let db = digits(b, self.p, l);
        let mut prod = vec![0u64; 2 * l];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = (prod[i + j] + x * y) % self.p;
                }
            }
        }
        poly_rem(&mut prod, &self.modulus, self.p);
        encode(&prod[..l], self.p)
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let order = self.size - 1;
        let mut prime_factors = Vec::new();
        let mut m = order;
        let mut d = 2u64;
        while d * d <= m {
            if m.is_multiple_of(d) {
                prime_factors.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            prime_factors.push(m);
        }
        let generator = (1..self.size)
            .find(|&g| prime_factors.iter().all(|&f| self.pow_slow(g, order / f) != 1))
            .expect("the unit group of a finite field is cyclic");
        self.generator = generator as Elem;

        self.exp = vec![0; order as usize];
        self.log = vec![u32::MAX; self.size as usize];
        let mut cur = 1u64;
        for k in 0..order {
            debug_assert!(self.log[cur as usize] == u32::MAX, "generator order too small");
            self.exp[k as usize] = cur as Elem;
            self.log[cur as usize] = k as u32;
            cur = self.mul_slow(cur, generator);
        }
        debug_assert_eq!(cur, 1, "generator order exceeds the group order");

        if self.size <= ADD_TABLE_LIMIT && self.p != 2 {
            let n = self.size as usize;
            let mut table = vec![0 as Elem; n * n];
            for a in 0..n {
                for b in a..n {
                    let s = self.add_digits(a as Elem, b as Elem);
                    table[a * n + b] = s;
                    table[b * n + a] = s;
                }
            }
            self.add_table = Some(table);
        }
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        let mut out = 0u64;
        let mut pow = 1u64;
        let (mut x, mut y) = (a as u64, b as u64);
        for _ in 0..self.degree {
            out += ((x + y) % self.p) * pow;
            pow *= self.p;
            x /= self.p;
            y /= self.p;
        }
        out as Elem
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Modulus coefficients, little-endian, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// A fixed generator of the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            a ^ b
        } else if let Some(table) = &self.add_table {
            table[a as usize * self.size as usize + b as usize]
        } else {
            self.add_digits(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut pow = 1u64;
        let mut x = a as u64;
        for _ in 0..self.degree {
            out += ((self.p - x % self.p) % self.p) * pow;
            pow *= self.p;
            x /= self.p;
        }
        out as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.size - 1;
        let k = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order;
        self.exp[k as usize]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "zero has no inverse");
        let order = self.size - 1;
        self.exp[((order - self.log[a as usize] as u64) % order) as usize]
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let order = self.size - 1;
        let k = (self.log[a as usize] as u128 * e as u128 % order as u128) as u64;
        self.exp[k as usize]
    }

    /// Frobenius automorphism x ↦ x^p.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p)
    }

    /// g^k; `k` is reduced mod the group order.
    pub fn element_from_log(&self, k: u64) -> Elem {
        self.exp[(k % (self.size - 1)) as usize]
    }

    /// Discrete log of a nonzero element with respect to the generator.
    pub fn log_of(&self, a: Elem) -> Option<u64> {
        (a != 0).then(|| self.log[a as usize] as u64)
    }

    /// "0" or "g^k".
    pub fn format_elem(&self, a: Elem) -> String {
        match self.log_of(a) {
            None => "0".to_string(),
            Some(k) => format!("g^{k}"),
        }
    }

    /// The elements of the subfield GF(p^r), sorted by encoding.
    pub fn subfield_elements(&self, r: u32) -> Result<Vec<Elem>> {
        if r == 0 || !self.degree.is_multiple_of(r) {
            return Err(Error::SubfieldDegree {
                r,
                ell: self.degree,
            });
        }
        let sub_order = self.p.pow(r) - 1;
        let step = (self.size - 1) / sub_order;
        let mut elems: Vec<Elem> = (0..sub_order)
            .map(|k| self.exp[(k * step) as usize])
            .collect();
        elems.push(0);
        elems.sort_unstable();
        Ok(elems)
    }

    /// Basis of this field over GF(p^r) together with a full coordinate
    /// lookup, for expanding vectors over the subfield.
    pub(crate) fn subfield_expansion(&self, r: u32) -> Result<SubfieldExpansion> {
        if self.size > EXPANSION_LIMIT {
            return Err(Error::FieldTooLarge {
                size: self.size as u128,
                limit: EXPANSION_LIMIT,
            });
        }
        let sub = self.subfield_elements(r)?;
        let e = (self.degree / r) as usize;
        let mut basis: Vec<Elem> = Vec::with_capacity(e);
        // spans[x] = coordinates of x over the basis chosen so far
        let mut spans: Vec<Option<Vec<Elem>>> = vec![None; self.size as usize];
        spans[0] = Some(Vec::new());
        while basis.len() < e {
            let beta = (0..self.size as usize)
                .find(|&x| spans[x].is_none())
                .expect("a proper subspace misses some element") as Elem;
            basis.push(beta);
            let mut next: Vec<Option<Vec<Elem>>> = vec![None; self.size as usize];
            for (x, co) in spans.iter().enumerate() {
                let Some(co) = co else { continue };
                for &s in &sub {
                    let y = self.add(x as Elem, self.mul(s, beta));
                    if next[y as usize].is_none() {
                        let mut ext = co.clone();
                        ext.push(s);
                        next[y as usize] = Some(ext);
                    }
                }
            }
            spans = next;
        }
        let coords: Vec<Vec<Elem>> = spans
            .into_iter()
            .map(|co| co.expect("the basis spans the whole field"))
            .collect();
        Ok(SubfieldExpansion {
            sub_size: self.p.pow(r),
            dim: e,
            basis,
            coords,
        })
    }
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

/// Coordinates of every field element over a subfield basis.
pub(crate) struct SubfieldExpansion {
    pub sub_size: u64,
    pub dim: usize,
    #[allow(dead_code)]
    pub basis: Vec<Elem>,
    coords: Vec<Vec<Elem>>,
}

impl SubfieldExpansion {
    /// The j-th coordinate of `x` over the basis; a subfield element.
    pub fn coord(&self, x: Elem, j: usize) -> Elem {
        self.coords[x as usize][j]
    }
}

/// Convenience constructor used throughout: GF(p^degree) behind an [`Arc`].
pub fn make_field(p: u64, degree: u32) -> Result<Arc<FiniteField>> {
    Ok(Arc::new(FiniteField::new(p, degree)?))
}
