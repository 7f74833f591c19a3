//! Matrices over a chain ring and the Howell normal form of their row modules.
//!
//! Over `Z/p^s` (and any Galois ring) plain row echelon form does not decide
//! span equality: `{(2, 1)}` and `{(2, 1), (0, 2)}` generate the same module
//! over `Z/4`. The Howell form adds the annihilator multiples `p^(s-v) * row`
//! of every pivot row with pivot valuation `v` back into the reduction, which
//! makes the result canonical: two matrices generate the same row module iff
//! their Howell forms are entry-identical.

use crate::error::{GrmError, Result};
use crate::ring_base::CoeffRing;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: Vec<Vec<E>>,
    ncols: usize,
}

impl<E: Clone> Matrix<E> {
    pub fn empty(ncols: usize) -> Self {
        Self { rows: Vec::new(), ncols }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, ncols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(GrmError::LengthMismatch(bad.len(), ncols));
        }
        Ok(Self { rows, ncols })
    }

    pub fn identity<R: CoeffRing<Elem = E>>(ring: &R, n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()).collect();
        Self { rows, ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<Vec<E>> {
        self.rows
    }

    pub fn push_row(&mut self, row: Vec<E>) -> Result<()> {
        if row.len() != self.ncols {
            return Err(GrmError::LengthMismatch(row.len(), self.ncols));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect();
        Self { rows, ncols: self.rows.len() }
    }

    /// Keeps the columns selected by `keep`, in order.
    pub fn select_columns(&self, keep: impl Fn(usize) -> bool) -> Self {
        let cols: Vec<usize> = (0..self.ncols).filter(|&j| keep(j)).collect();
        let rows = self.rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
        Self { rows, ncols: cols.len() }
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: Fn(&E) -> T,
    {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(), ncols: self.ncols }
    }

    /// Stacks the rows of `other` below these rows.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.ncols {
            return Err(GrmError::LengthMismatch(self.ncols, other.ncols));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { rows, ncols: self.ncols })
    }
}

fn check_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(GrmError::LengthMismatch(a, b))
    }
}

/// Coordinatewise product `(u_0 v_0, ..., u_n v_n)`.
pub fn compwise_product<R: CoeffRing>(ring: &R, u: &[R::Elem], v: &[R::Elem]) -> Result<Vec<R::Elem>> {
    check_len(u.len(), v.len())?;
    Ok(u.iter().zip(v).map(|(a, b)| ring.mul(a, b)).collect())
}

/// The plain bilinear form `sum u_i v_i`.
pub fn inner_product<R: CoeffRing>(ring: &R, u: &[R::Elem], v: &[R::Elem]) -> Result<R::Elem> {
    check_len(u.len(), v.len())?;
    Ok(u.iter().zip(v).fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b))))
}

pub fn add_vec<R: CoeffRing>(ring: &R, u: &[R::Elem], v: &[R::Elem]) -> Vec<R::Elem> {
    u.iter().zip(v).map(|(a, b)| ring.add(a, b)).collect()
}

pub fn scale_vec<R: CoeffRing>(ring: &R, c: &R::Elem, u: &[R::Elem]) -> Vec<R::Elem> {
    u.iter().map(|a| ring.mul(c, a)).collect()
}

/// `row -= c * other`
fn sub_scaled<R: CoeffRing>(ring: &R, row: &mut [R::Elem], c: &R::Elem, other: &[R::Elem]) {
    for (a, b) in row.iter_mut().zip(other) {
        if !ring.is_zero(b) {
            *a = ring.sub(a, &ring.mul(c, b));
        }
    }
}

/// `a * b`
pub fn mat_mul<R: CoeffRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    check_len(a.ncols, b.nrows())?;
    let rows = a
        .rows
        .iter()
        .map(|r| {
            (0..b.ncols)
                .map(|j| {
                    r.iter().zip(&b.rows).fold(ring.zero(), |acc, (x, brow)| ring.add(&acc, &ring.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect();
    Ok(Matrix { rows, ncols: b.ncols })
}

/// `x * M` for a row vector `x` of length `nrows(M)`.
pub fn vec_mat<R: CoeffRing>(ring: &R, x: &[R::Elem], m: &Matrix<R::Elem>) -> Result<Vec<R::Elem>> {
    check_len(x.len(), m.nrows())?;
    let mut acc = vec![ring.zero(); m.ncols];
    for (c, row) in x.iter().zip(&m.rows) {
        if ring.is_zero(c) {
            continue;
        }
        for (a, b) in acc.iter_mut().zip(row) {
            *a = ring.add(a, &ring.mul(c, b));
        }
    }
    Ok(acc)
}

/// Howell normal form of a row module.
///
/// Rows are in echelon order; row `i` has its pivot at `pivot_cols[i]`, equal
/// to `p^pivot_valuations[i]`, and every entry above a pivot `p^v` is reduced
/// to its canonical representative modulo `p^v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HowellForm<E> {
    pub matrix: Matrix<E>,
    pub pivot_cols: Vec<usize>,
    pub pivot_valuations: Vec<u32>,
}

impl<E: Clone + PartialEq> HowellForm<E> {
    pub fn rows(&self) -> &[Vec<E>] {
        self.matrix.rows()
    }

    pub fn len(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.matrix.nrows() == 0
    }

    /// Reduces `v` against the form; the result is zero iff `v` is in the span.
    /// Also returns the coefficients used, so `v = coeffs * rows + residual`.
    pub fn reduce<R: CoeffRing<Elem = E>>(&self, ring: &R, v: &[E]) -> Result<(Vec<E>, Vec<E>)> {
        check_len(v.len(), self.matrix.ncols)?;
        let mut w = v.to_vec();
        let mut coeffs = vec![ring.zero(); self.len()];
        for (i, row) in self.matrix.rows.iter().enumerate() {
            let col = self.pivot_cols[i];
            let val = self.pivot_valuations[i];
            match ring.valuation(&w[col]) {
                None => continue,
                Some(ev) if ev < val => break,
                Some(_) => {
                    let c = ring.div_p_pow(&w[col], val);
                    sub_scaled(ring, &mut w, &c, row);
                    coeffs[i] = c;
                }
            }
        }
        Ok((coeffs, w))
    }

    /// `log_p` of the number of vectors in the row module.
    pub fn log_p_size<R: CoeffRing<Elem = E>>(&self, ring: &R) -> u64 {
        let s = ring.nilpotency() as u64;
        let deg = ring.residue_degree() as u64;
        self.pivot_valuations.iter().map(|&v| (s - v as u64) * deg).sum()
    }
}

/// Computes the Howell form. Pivots are chosen column by column, taking the
/// entry of minimal p-valuation (first such row on ties).
pub fn howell<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> HowellForm<R::Elem> {
    let s = ring.nilpotency();
    let ncols = m.ncols;
    let nonzero = |r: &Vec<R::Elem>| r.iter().any(|e| !ring.is_zero(e));
    let mut pool: Vec<Vec<R::Elem>> = m.rows.iter().filter(|r| nonzero(r)).cloned().collect();
    let mut out: Vec<Vec<R::Elem>> = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut pivot_valuations = Vec::new();

    for col in 0..ncols {
        let best = pool.iter().enumerate().filter_map(|(i, r)| ring.valuation(&r[col]).map(|v| (v, i))).min();
        let Some((val, idx)) = best else { continue };
        let mut prow = pool.remove(idx);
        let unit = ring.div_p_pow(&prow[col], val);
        let unit_inv = ring.inv(&unit).expect("pivot cofactor is a unit");
        prow = scale_vec(ring, &unit_inv, &prow);

        for r in pool.iter_mut() {
            if !ring.is_zero(&r[col]) {
                let c = ring.div_p_pow(&r[col], val);
                sub_scaled(ring, r, &c, &prow);
            }
        }
        if val > 0 {
            let ann = prow.iter().map(|e| ring.mul_p_pow(e, s - val)).collect();
            pool.push(ann);
        }
        pool.retain(|r| nonzero(r));
        out.push(prow);
        pivot_cols.push(col);
        pivot_valuations.push(val);
    }

    for k in 0..out.len() {
        let (col, val) = (pivot_cols[k], pivot_valuations[k]);
        let (above, rest) = out.split_at_mut(k);
        let prow = &rest[0];
        for row in above.iter_mut() {
            let e = &row[col];
            let red = ring.rem_p_pow(e, val);
            if *e != red {
                let c = ring.div_p_pow(&ring.sub(e, &red), val);
                sub_scaled(ring, row, &c, prow);
            }
        }
    }

    HowellForm { matrix: Matrix { rows: out, ncols }, pivot_cols, pivot_valuations }
}

/// Whether two matrices generate the same row module.
pub fn same_row_module<R: CoeffRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> bool {
    a.ncols == b.ncols && howell(ring, a) == howell(ring, b)
}

/// Rank of a free row module; `NotFree` otherwise.
///
/// A module over a chain ring decomposes as a sum of cyclic modules
/// `p^j L`; it is free iff `|M| = |p^(s-1) M|^s`, and then its rank is the
/// `F_q`-dimension of `p^(s-1) M`.
pub fn rank_free<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Result<usize> {
    let s = ring.nilpotency();
    let hf = howell(ring, m);
    if hf.is_empty() {
        return Ok(0);
    }
    let socle_gens = m.map(|e| ring.mul_p_pow(e, s - 1));
    let k0 = howell(ring, &socle_gens).len();
    if hf.log_p_size(ring) == (s as u64) * (ring.residue_degree() as u64) * k0 as u64 {
        Ok(k0)
    } else {
        Err(GrmError::NotFree)
    }
}

pub fn span_contains<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>, v: &[R::Elem]) -> Result<bool> {
    check_len(v.len(), m.ncols)?;
    let (_, residual) = howell(ring, m).reduce(ring, v)?;
    Ok(residual.iter().all(|e| ring.is_zero(e)))
}

/// Generators of `{v : M v^T = 0}`.
///
/// Row reduces `[M^T | I]`; by the Howell property the rows whose first
/// `nrows(M)` entries vanish span exactly the vectors of the row module with
/// that prefix zero, i.e. the `(x M^T, x)` with `x M^T = 0`.
pub fn kernel<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let k = m.nrows();
    let n = m.ncols;
    let rows = (0..n)
        .map(|j| {
            let mut row: Vec<R::Elem> = m.rows.iter().map(|r| r[j].clone()).collect();
            row.extend((0..n).map(|i| if i == j { ring.one() } else { ring.zero() }));
            row
        })
        .collect();
    let hf = howell(ring, &Matrix { rows, ncols: k + n });
    let rows =
        hf.matrix.rows.iter().zip(&hf.pivot_cols).filter(|(_, &c)| c >= k).map(|(r, _)| r[k..].to_vec()).collect();
    Matrix { rows, ncols: n }
}

/// The socle `{c in span(M) : p c = 0}`, as a generating matrix.
pub fn socle<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let hf = howell(ring, m);
    if hf.is_empty() {
        return Matrix::empty(m.ncols);
    }
    // x * H with p x H = 0: x in the left kernel of p H.
    let p_h = hf.matrix.map(|e| ring.mul_p_pow(e, 1));
    let left_kernel = kernel(ring, &p_h.transpose());
    let rows = left_kernel.rows.iter().map(|x| vec_mat(ring, x, &hf.matrix).expect("dimensions agree")).collect();
    let gens = Matrix { rows, ncols: m.ncols };
    howell(ring, &gens).matrix
}

pub fn invert<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let n = m.nrows();
    if m.ncols != n {
        return Err(GrmError::LengthMismatch(m.ncols, n));
    }
    let rows = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
            row
        })
        .collect();
    let hf = howell(ring, &Matrix { rows, ncols: 2 * n });
    let ok = hf.len() == n
        && hf.pivot_cols.iter().enumerate().all(|(i, &c)| c == i)
        && hf.pivot_valuations.iter().all(|&v| v == 0);
    if !ok {
        return Err(GrmError::NotInvertible);
    }
    let rows = hf.matrix.rows.iter().map(|r| r[n..].to_vec()).collect();
    Ok(Matrix { rows, ncols: n })
}
