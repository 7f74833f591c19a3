//! Generalized Reed-Muller codes `RM_L(ν, m)`: evaluation of polynomials in
//! `m` variables at the coordinate vectors `b_∞, b_0, ..., b_(n-1)`, and the
//! standard generator matrix built from componentwise products of the rows
//! `v_1, ..., v_m`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cyclic::qweight;
use crate::error::{GrmError, Result};
use crate::galois_ring::{FqElem, GaloisTower, LElem, TeichIndex};
use crate::ring_base::CoeffRing;
use crate::ring_linalg::{compwise_product, rank_free, Matrix};

/// Exponents `(i_1, ..., i_m)` of a monomial of `S`, each at most `q - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentTuple(Vec<u32>);

impl ExponentTuple {
    pub fn new(exps: Vec<u32>, q: u64) -> Result<Self> {
        match exps.iter().find(|&&e| e as u64 >= q) {
            Some(&e) => Err(GrmError::OutOfRange(e as u64)),
            None => Ok(Self(exps)),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| if e == 1 { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, e) })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// All tuples with entries in `[0, q-1]` and total degree at most `nu`, by
/// ascending degree; within a degree, `x_1` ranks before `x_2` and so on
/// (descending lexicographic order on the tuples).
pub fn exponent_tuples(q: u64, m: u32, nu: u32) -> Vec<ExponentTuple> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m as usize];
    loop {
        if cur.iter().sum::<u32>() <= nu {
            out.push(ExponentTuple(cur.clone()));
        }
        let Some(pos) = cur.iter().rposition(|&e| (e as u64) < q - 1) else { break };
        cur[pos] += 1;
        cur[pos + 1..].iter_mut().for_each(|e| *e = 0);
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    out
}

/// A polynomial in `L[x_1, ..., x_m]`. Exponents are unrestricted, so plain
/// products stay representable; `in_s` tests membership in `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultivarPoly {
    m: usize,
    terms: BTreeMap<Vec<u32>, LElem>,
}

impl MultivarPoly {
    pub fn zero(m: usize) -> Self {
        Self { m, terms: BTreeMap::new() }
    }

    pub fn monomial(tower: &GaloisTower, exps: Vec<u32>, coeff: LElem) -> Self {
        let mut p = Self::zero(tower.m() as usize);
        p.add_term(tower, exps, coeff);
        p
    }

    pub fn add_term(&mut self, tower: &GaloisTower, exps: Vec<u32>, coeff: LElem) {
        assert_eq!(exps.len(), self.m, "wrong number of variables");
        let base = tower.base();
        let entry = self.terms.entry(exps).or_insert_with(|| base.zero());
        *entry = base.add(entry, &coeff);
        self.terms.retain(|_, c| !base.is_zero(c));
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &LElem)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn in_s(&self, q: u64) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&i| (i as u64) < q))
    }

    pub fn add(&self, tower: &GaloisTower, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(tower, e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, tower: &GaloisTower, other: &Self) -> Self {
        let mut out = Self::zero(self.m);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(tower, e, tower.base().mul(c1, c2));
            }
        }
        out
    }
}

/// `ev(P) = (P(b_∞), P(b_0), ..., P(b_(n-1)))`.
pub fn evaluate(tower: &GaloisTower, poly: &MultivarPoly) -> Vec<LElem> {
    let base = tower.base();
    tower
        .positions()
        .into_iter()
        .map(|pos| {
            let point = tower.coord_vector(pos);
            poly.terms().fold(base.zero(), |acc, (exps, c)| {
                let mono = exps.iter().zip(&point).fold(c.clone(), |m, (&e, x)| base.mul(&m, &base.pow(x, e as u64)));
                base.add(&acc, &mono)
            })
        })
        .collect()
}

/// Rows `v_1, ..., v_m`: `v_j` holds the `j`-th coordinate of every `b_i`.
pub fn coordinate_rows(tower: &GaloisTower) -> Vec<Vec<LElem>> {
    let points: Vec<Vec<LElem>> = tower.positions().into_iter().map(|p| tower.coord_vector(p)).collect();
    (0..tower.m() as usize).map(|j| points.iter().map(|b| b[j].clone()).collect()).collect()
}

/// A GRM code with its standard generator matrix.
#[derive(Clone, Debug)]
pub struct GrmCode {
    tower: Arc<GaloisTower>,
    nu: u32,
    labels: Vec<ExponentTuple>,
    genmat: Matrix<LElem>,
}

/// Builds `G_ν` with rows `v_1^(i_1) ... v_m^(i_m)` over the tuples of
/// total degree at most `ν`.
pub fn standard_genmat(tower: &Arc<GaloisTower>, nu: u32) -> Result<GrmCode> {
    let max = tower.max_order();
    if nu > max {
        return Err(GrmError::OrderOutOfRange { nu, max });
    }
    let base = tower.base();
    let len = tower.length();
    let v = coordinate_rows(tower);
    let ones = vec![base.one(); len];
    // powers[j][e] = v_(j+1)^e
    let powers: Vec<Vec<Vec<LElem>>> = v
        .iter()
        .map(|vj| {
            let mut pw = vec![ones.clone()];
            for e in 1..tower.q() as usize {
                let next = compwise_product(base, &pw[e - 1], vj).expect("equal lengths");
                pw.push(next);
            }
            pw
        })
        .collect();
    let labels = exponent_tuples(tower.q(), tower.m(), nu);
    let rows = labels
        .iter()
        .map(|t| {
            t.exps().iter().enumerate().fold(ones.clone(), |acc, (j, &e)| {
                compwise_product(base, &acc, &powers[j][e as usize]).expect("equal lengths")
            })
        })
        .collect();
    Ok(GrmCode { tower: Arc::clone(tower), nu, labels, genmat: Matrix::from_rows(rows, len)? })
}

impl GrmCode {
    pub fn tower(&self) -> &Arc<GaloisTower> {
        &self.tower
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// Exponent tuple of each generator row.
    pub fn labels(&self) -> &[ExponentTuple] {
        &self.labels
    }

    pub fn genmat(&self) -> &Matrix<LElem> {
        &self.genmat
    }

    pub fn length(&self) -> usize {
        self.genmat.ncols()
    }

    pub fn column_labels(&self) -> Vec<TeichIndex> {
        self.tower.positions()
    }

    pub fn rank(&self) -> Result<usize> {
        rank_free(self.tower.base(), &self.genmat)
    }

    /// Generator matrix of the code punctured at position `∞`.
    pub fn punctured(&self) -> Matrix<LElem> {
        puncture_first(&self.genmat)
    }

    pub fn projected(&self) -> Matrix<FqElem> {
        project_matrix(&self.tower, &self.genmat)
    }

    /// Whether every generator sums to zero; only meaningful for `rm >= s`
    /// and `ν < m(q-1)`.
    pub fn zero_sum_check(&self) -> Result<bool> {
        let t = &self.tower;
        if !t.rm_at_least_s() {
            return Err(GrmError::PreconditionViolated(format!(
                "zero-sum property needs rm >= s (rm = {}, s = {})",
                t.params().r * t.m(),
                t.params().s
            )));
        }
        if self.nu >= t.max_order() {
            return Err(GrmError::OrderOutOfRange { nu: self.nu, max: t.max_order() - 1 });
        }
        let base = t.base();
        Ok(row_sums(base, &self.genmat).iter().all(|c| base.is_zero(c)))
    }
}

pub fn row_sums<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Vec<R::Elem> {
    m.rows().iter().map(|r| r.iter().fold(ring.zero(), |acc, c| ring.add(&acc, c))).collect()
}

/// Coordinatewise reduction `L -> F_q`.
pub fn project_vector(tower: &GaloisTower, v: &[LElem]) -> Vec<FqElem> {
    v.iter().map(|c| tower.project(c)).collect()
}

pub fn project_matrix(tower: &GaloisTower, m: &Matrix<LElem>) -> Matrix<FqElem> {
    m.map(|c| tower.project(c))
}

/// Drops the first column.
pub fn puncture_first<E: Clone>(m: &Matrix<E>) -> Matrix<E> {
    m.select_columns(|j| j > 0)
}

/// Prepends `-Σ c_i` to every row.
pub fn extend_parity<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let rows = m
        .rows()
        .iter()
        .map(|r| {
            let sum = r.iter().fold(ring.zero(), |acc, c| ring.add(&acc, c));
            std::iter::once(ring.neg(&sum)).chain(r.iter().cloned()).collect()
        })
        .collect();
    Matrix::from_rows(rows, m.ncols() + 1).expect("uniform row length")
}

fn binomial(a: i64, b: i64) -> i128 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1i128, |acc, i| acc * (a - i) as i128 / (i + 1) as i128)
}

/// `Σ_(i=0)^ν Σ_(j=0)^m (-1)^j C(m, j) C(i - jq + m - 1, i - jq)`: the number
/// of tuples in `[0, q-1]^m` with total at most `ν`.
pub fn rank_formula(nu: u32, m: u32, q: u64) -> u64 {
    let (m, q) = (m as i64, q as i64);
    let total: i128 = (0..=nu as i64)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * binomial(m, j) * binomial(i - j * q + m - 1, i - j * q)
                })
                .sum::<i128>()
        })
        .sum();
    total as u64
}

/// `#{j : 0 <= j <= q^m - 2, w_q(j) <= ν}`, for `ν < m(q-1)`.
pub fn qweight_rank_count(nu: u32, m: u32, q: u64) -> Result<u64> {
    let max = m * (q as u32 - 1);
    if nu >= max {
        return Err(GrmError::OrderOutOfRange { nu, max: max.saturating_sub(1) });
    }
    let top = q.pow(m) - 1;
    let mut count = 0;
    for j in 0..top {
        if qweight(j, q, m)? <= nu {
            count += 1;
        }
    }
    Ok(count)
}

/// `μ = m(q-1) - ν - 1`.
pub fn dual_order(nu: u32, m: u32, q: u64) -> Result<u32> {
    let max = m * (q as u32 - 1);
    if nu >= max {
        return Err(GrmError::OrderOutOfRange { nu, max: max.saturating_sub(1) });
    }
    Ok(max - nu - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceParams {
    pub quotient: u32,
    pub remainder: u32,
    /// `(rem + 1) q^Q - 1`
    pub designed: u64,
}

impl DistanceParams {
    /// `(rem + 1) q^Q`, the minimum distance of the extended field code.
    pub fn field_extended(&self) -> u64 {
        self.designed + 1
    }
}

/// Division of `m(q-1) - ν` by `q - 1`, and the resulting designed distance.
pub fn distance_params(nu: u32, m: u32, q: u64) -> Result<DistanceParams> {
    let max = m * (q as u32 - 1);
    if nu >= max {
        return Err(GrmError::OrderOutOfRange { nu, max: max.saturating_sub(1) });
    }
    let d = max - nu;
    let (quotient, remainder) = (d / (q as u32 - 1), d % (q as u32 - 1));
    let designed = (remainder as u64 + 1) * q.pow(quotient) - 1;
    Ok(DistanceParams { quotient, remainder, designed })
}
