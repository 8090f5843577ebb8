//! Dense matrices over a finite field, with the handful of exact
//! linear-algebra primitives the brute-force verification needs: row
//! reduction, nullspaces, duals under both inner products, intersection
//! dimensions and exhaustive minimum-distance search.
//!
//! A matrix carries a *scalar* size next to its field: its rows span a
//! code over the subfield GF(scalar) ⊆ GF(field size), and every entry
//! lies in that subfield. Row reduction only ever combines entries with
//! field operations, so it never leaves the subfield; ranks and nullspace
//! dimensions are therefore dimensions over the scalar subfield.

use crate::cosets::Metric;
use crate::field::{Elem, FiniteField};
use crate::{Error, Result};
use std::sync::Arc;

#[derive(Clone)]
pub struct FieldMatrix {
    field: Arc<FiniteField>,
    scalar: u64,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl FieldMatrix {
    /// A matrix over the full field.
    pub fn new(field: Arc<FiniteField>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        let scalar = field.size();
        FieldMatrix::with_scalar(field, scalar, rows, cols, data)
    }

    /// A matrix whose rows span a code over the subfield of `scalar`
    /// elements. All entries must lie in that subfield.
    pub fn with_scalar(
        field: Arc<FiniteField>,
        scalar: u64,
        rows: usize,
        cols: usize,
        data: Vec<Elem>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch);
        }
        if data.iter().any(|&x| x as u64 >= field.size()) {
            return Err(Error::ShapeMismatch);
        }
        Ok(FieldMatrix {
            field,
            scalar,
            rows,
            cols,
            data,
        })
    }

    pub fn zero(field: Arc<FiniteField>, rows: usize, cols: usize) -> Self {
        let scalar = field.size();
        FieldMatrix {
            field,
            scalar,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    /// Size of the scalar subfield the rowspace is taken over.
    pub fn scalar(&self) -> u64 {
        self.scalar
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn same_space(&self, other: &FieldMatrix) -> Result<()> {
        if !Arc::ptr_eq(&self.field, &other.field) && self.field.size() != other.field.size() {
            return Err(Error::FieldMismatch);
        }
        if self.scalar != other.scalar {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// Stack the rows of `self` over the rows of `other`.
    pub fn stacked(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        self.same_space(other)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FieldMatrix {
            field: Arc::clone(&self.field),
            scalar: self.scalar,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form with zero rows dropped; also returns the
    /// pivot columns.
    fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let f = &self.field;
        let cols = self.cols;
        let mut rows: Vec<Vec<Elem>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let Some(pivot_row) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot_row);
            let inv = f.inv(rows[rank][col]);
            if inv != 1 {
                for x in rows[rank].iter_mut() {
                    *x = f.mul(inv, *x);
                }
            }
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == rank || row[col] == 0 {
                    continue;
                }
                let factor = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(factor, pv));
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        let data: Vec<Elem> = rows.into_iter().flatten().collect();
        (
            FieldMatrix {
                field: Arc::clone(f),
                scalar: self.scalar,
                rows: rank,
                cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A row basis of the rowspace, in reduced echelon form.
    pub fn row_basis(&self) -> FieldMatrix {
        self.rref().0
    }

    /// Rows spanning { y : self · yᵀ = 0 } over the scalar subfield.
    pub fn nullspace(&self) -> FieldMatrix {
        let f = &self.field;
        let (rr, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut data = Vec::with_capacity(free.len() * self.cols);
        for &fc in &free {
            let mut v = vec![0 as Elem; self.cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rr.at(i, fc));
            }
            data.extend_from_slice(&v);
        }
        FieldMatrix {
            field: Arc::clone(f),
            scalar: self.scalar,
            rows: free.len(),
            cols: self.cols,
            data,
        }
    }

    /// Whether two matrices span the same rowspace.
    pub fn same_rowspace(&self, other: &FieldMatrix) -> Result<bool> {
        self.same_space(other)?;
        let ra = self.rank();
        let rb = other.rank();
        Ok(ra == rb && self.stacked(other)?.rank() == ra)
    }

    /// Plain-text grid: entries as powers of the field generator, one row
    /// per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self
                .row(i)
                .iter()
                .map(|&x| self.field.format_elem(x))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FieldMatrix({}x{} over GF({}), scalars GF({}))",
            self.rows,
            self.cols,
            self.field.size(),
            self.scalar
        )
    }
}

/// Basis of the dual code of the rowspace of `m`: all vectors orthogonal
/// to every row under the chosen inner product. The Hermitian product
/// conjugates with x ↦ x^√scalar and needs a square scalar field.
pub fn dual_basis(m: &FieldMatrix, metric: Metric) -> Result<FieldMatrix> {
    let null = m.nullspace();
    match metric {
        Metric::Euclidean => Ok(null),
        Metric::Hermitian => {
            let qb = integer_sqrt(m.scalar()).ok_or(Error::HermitianNonSquare {
                size: m.scalar(),
            })?;
            let f = m.field();
            let data = null.data.iter().map(|&x| f.pow(x, qb)).collect();
            FieldMatrix::with_scalar(
                Arc::clone(f),
                null.scalar,
                null.rows,
                null.cols,
                data,
            )
        }
    }
}

fn integer_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r * r == n).then_some(r)
}

/// dim(rowspace(a) ∩ rowspace(b)), by rank(a) + rank(b) - rank(stack).
pub fn intersection_dimension(a: &FieldMatrix, b: &FieldMatrix) -> Result<usize> {
    let stacked = a.stacked(b)?;
    Ok(a.rank() + b.rank() - stacked.rank())
}

/// Exact minimum Hamming weight over all nonzero codewords of the rowspace
/// of `m`, taken over its scalar subfield. Refuses to enumerate more than
/// `budget` codewords.
pub fn exhaustive_min_distance(m: &FieldMatrix, budget: u64) -> Result<u64> {
    let (basis, _) = m.rref();
    let k = basis.rows;
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let words = (m.scalar() as u128).pow(k as u32);
    if words > budget as u128 {
        return Err(Error::BudgetExceeded { words, budget });
    }
    let f = m.field();
    let r = {
        let mut r = 0;
        let mut s = m.scalar();
        while s.is_multiple_of(f.characteristic()) {
            s /= f.characteristic();
            r += 1;
        }
        r
    };
    let scalars = f.subfield_elements(r)?;
    let n = basis.cols;

    // scaled[i][s] = scalars[s] · row i
    let scaled: Vec<Vec<Vec<Elem>>> = (0..k)
        .map(|i| {
            scalars
                .iter()
                .map(|&s| basis.row(i).iter().map(|&x| f.mul(s, x)).collect())
                .collect()
        })
        .collect();

    let mut levels: Vec<Vec<Elem>> = vec![vec![0; n]; k + 1];
    let mut best = n as u64 + 1;

    // depth-first over coefficient vectors; the first nonzero coefficient
    // is pinned to 1 since scaling a codeword preserves its weight
    fn descend(
        f: &FiniteField,
        scaled: &[Vec<Vec<Elem>>],
        levels: &mut [Vec<Elem>],
        level: usize,
        any_nonzero: bool,
        n_scalars: usize,
        best: &mut u64,
    ) {
        let k = scaled.len();
        if level == k {
            if any_nonzero {
                let w = levels[k].iter().filter(|&&x| x != 0).count() as u64;
                if w < *best {
                    *best = w;
                }
            }
            return;
        }
        let upper = if any_nonzero { n_scalars } else { 2 };
        for s in 0..upper {
            if s == 0 {
                let (head, tail) = levels.split_at_mut(level + 1);
                tail[0].copy_from_slice(&head[level]);
            } else {
                let row = &scaled[level][s];
                let (head, tail) = levels.split_at_mut(level + 1);
                for j in 0..row.len() {
                    tail[0][j] = f.add(head[level][j], row[j]);
                }
            }
            descend(
                f,
                scaled,
                levels,
                level + 1,
                any_nonzero || s != 0,
                n_scalars,
                best,
            );
        }
    }

    descend(f, &scaled, &mut levels, 0, false, scalars.len(), &mut best);
    Ok(best)
}
