//! Exact linear algebra over ℚ.
//!
//! Rank and echelon forms go through fraction-free (Bareiss) elimination on
//! integer rows: every row is first scaled by the lcm of its denominators,
//! which changes neither the row space nor the rank. Pivots are chosen in the
//! leftmost column that still has a nonzero entry, taking the smallest row
//! index among the candidates, so every returned basis is deterministic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Mat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors of length `len`.
    pub fn from_cols(len: usize, cols: &[Vec<Rat>]) -> Result<Self> {
        Ok(Mat::from_rows(len, cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| rat::dot(self.row(i), v)).collect())
    }

    /// αA + βB.
    pub fn lin_comb(alpha: &Rat, a: &Mat, beta: &Rat, b: &Mat) -> Result<Mat> {
        if a.rows != b.rows || a.cols != b.cols {
            return Err(Error::DimensionMismatch {
                expected: a.rows * a.cols,
                found: b.rows * b.cols,
            });
        }
        let data = a
            .data
            .iter()
            .zip(&b.data)
            .map(|(x, y)| alpha * x + beta * y)
            .collect();
        Ok(Mat {
            rows: a.rows,
            cols: a.cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = rat::denominator_lcm(row);
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect()
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let mut rows = self.integer_rows();
        bareiss(&mut rows, self.cols).len()
    }

    /// Reduced row echelon form (nonzero rows only) and its pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rat>>, Vec<usize>) {
        let mut rows = self.integer_rows();
        let pivots = bareiss(&mut rows, self.cols);
        let rank = pivots.len();
        let mut out: Vec<Vec<Rat>> = rows
            .into_iter()
            .take(rank)
            .map(|r| r.into_iter().map(Rat::from_integer).collect())
            .collect();
        for i in (0..rank).rev() {
            let pc = pivots[i];
            let lead = out[i][pc].clone();
            for x in out[i].iter_mut() {
                *x /= &lead;
            }
            let pivot_row = out[i].clone();
            for row in out.iter_mut().take(i) {
                let f = row[pc].clone();
                if !f.is_zero() {
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                }
            }
        }
        (out, pivots)
    }

    /// Basis of the right null space in reduced echelon form.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let raw: Vec<Vec<Rat>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (row, &pc) in r.iter().zip(&pivots) {
                    v[pc] = -row[f].clone();
                }
                v
            })
            .collect();
        if raw.is_empty() {
            return raw;
        }
        Mat::from_rows(self.cols, &raw)
            .expect("kernel vectors have matching length")
            .rref()
            .0
    }

    /// Some solution of `self · x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in r.iter().zip(&pivots) {
            x[pc] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Row-pivoted LU factorization `P·A = L·U` with `L` unit lower
    /// triangular and `U` in row echelon form.
    pub fn plu(&self) -> Plu {
        let n = self.rows;
        let mut u = self.clone();
        let mut l = Mat::identity(n);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| !u.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..u.cols {
                    u.data.swap(r * u.cols + j, p * u.cols + j);
                }
                for j in 0..r {
                    l.data.swap(r * n + j, p * n + j);
                }
                perm.swap(r, p);
            }
            let pivot = u.get(r, c).clone();
            for i in r + 1..n {
                let f = u.get(i, c) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in c..u.cols {
                    let v = u.get(i, j) - &f * u.get(r, j);
                    u.set(i, j, v);
                }
                l.set(i, r, f);
            }
            r += 1;
        }
        Plu {
            perm,
            lower: l,
            upper: u,
        }
    }
}

/// Factors of [`Mat::plu`]: row `i` of `P·A` is row `perm[i]` of `A`.
#[derive(Debug, Clone)]
pub struct Plu {
    pub perm: Vec<usize>,
    pub lower: Mat,
    pub upper: Mat,
}

impl Plu {
    pub fn permuted(&self, a: &Mat) -> Mat {
        let rows: Vec<Vec<Rat>> = self.perm.iter().map(|&i| a.row(i).to_vec()).collect();
        Mat::from_rows(a.cols, &rows).expect("same width")
    }
}

/// In-place fraction-free forward elimination. Leaves the first `rank` rows in
/// echelon form and returns the pivot columns.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let n = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                for x in row.iter_mut().skip(c + 1) {
                    *x = &*x * &prow[c];
                    let (q, rem) = x.div_rem(&prev);
                    debug_assert!(rem.is_zero());
                    *x = q;
                }
                continue;
            }
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &prow[c] * &row[j] - &f * &prow[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero());
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = head[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn check_len(vs: &[Vec<Rat>], dim: usize) -> Result<()> {
    for v in vs {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// Dimension of the span of `vs` inside ℚ^dim.
pub fn span_rank(vs: &[Vec<Rat>], dim: usize) -> Result<usize> {
    Ok(Mat::from_rows(dim, vs)?.rank())
}

/// Canonical (reduced echelon) basis of the span of `vs`.
pub fn span_basis(vs: &[Vec<Rat>], dim: usize) -> Result<Vec<Vec<Rat>>> {
    Ok(Mat::from_rows(dim, vs)?.rref().0)
}

pub fn in_span(vs: &[Vec<Rat>], target: &[Rat]) -> Result<bool> {
    let dim = target.len();
    if rat::is_zero_vec(target) {
        check_len(vs, dim)?;
        return Ok(true);
    }
    let r = span_rank(vs, dim)?;
    let mut all = vs.to_vec();
    all.push(target.to_vec());
    Ok(span_rank(&all, dim)? == r)
}

/// Coefficients `c` with `Σ cᵢ vsᵢ = target`, if any.
pub fn coordinates_in(vs: &[Vec<Rat>], target: &[Rat]) -> Result<Option<Vec<Rat>>> {
    let m = Mat::from_cols(target.len(), vs)?;
    m.solve(target)
}

/// `(dim U, dim V, dim (U+V), dim (U∩V))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanDims {
    pub dim_u: usize,
    pub dim_v: usize,
    pub dim_sum: usize,
    pub dim_intersection: usize,
}

pub fn span_dims(u: &[Vec<Rat>], v: &[Vec<Rat>], dim: usize) -> Result<SpanDims> {
    check_len(u, dim)?;
    check_len(v, dim)?;
    let dim_u = span_rank(u, dim)?;
    let dim_v = span_rank(v, dim)?;
    let mut both = u.to_vec();
    both.extend(v.iter().cloned());
    let dim_sum = span_rank(&both, dim)?;
    let dim_intersection = dim_u + dim_v - dim_sum;
    debug_assert_eq!(intersect_spans(u, v, dim)?.len(), dim_intersection);
    Ok(SpanDims {
        dim_u,
        dim_v,
        dim_sum,
        dim_intersection,
    })
}

/// Canonical basis of span(U) ∩ span(V), computed from the kernel of
/// `[U | −V]` applied to the U-side.
pub fn intersect_spans(u: &[Vec<Rat>], v: &[Vec<Rat>], dim: usize) -> Result<Vec<Vec<Rat>>> {
    check_len(u, dim)?;
    check_len(v, dim)?;
    let ub = span_basis(u, dim)?;
    let vb = span_basis(v, dim)?;
    if ub.is_empty() || vb.is_empty() {
        return Ok(Vec::new());
    }
    let mut cols = ub.clone();
    cols.extend(vb.iter().map(|w| w.iter().map(|x| -x.clone()).collect::<Vec<_>>()));
    let system = Mat::from_cols(dim, &cols)?;
    let ker = system.kernel();
    let vecs: Vec<Vec<Rat>> = ker
        .iter()
        .map(|k| {
            let mut acc = vec![Rat::zero(); dim];
            for (coef, b) in k.iter().zip(&ub) {
                if !coef.is_zero() {
                    rat::axpy(coef, b, &mut acc);
                }
            }
            acc
        })
        .collect();
    span_basis(&vecs, dim)
}
