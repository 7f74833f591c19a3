//! Brute-force ground truth: minimum weights by enumeration, the field GRM
//! code built directly over `F_q`, duality and codeword-set comparisons.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{GrmError, Result};
use crate::galois_ring::{FqElem, GaloisRing, GaloisTower, LElem};
use crate::grm::project_matrix;
use crate::ring_base::CoeffRing;
use crate::ring_linalg::{howell, inner_product, rank_free, same_row_module, socle, span_contains, vec_mat, Matrix};

pub const DEFAULT_GUARD: u64 = 1 << 24;

/// Rings larger than this are not tabulated for enumeration.
const MAX_TABLE_RING: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMethod {
    /// Every codeword, each exactly once.
    Exhaustive,
    /// Every element of the socle `{c : p c = 0}`. Each nonzero codeword `c`
    /// has a nonzero multiple in the socle whose support lies inside that of
    /// `c`, so the minimum weight is the same.
    Socle,
}

impl fmt::Display for WeightMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightMethod::Exhaustive => "exhaustive",
            WeightMethod::Socle => "socle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport<E> {
    /// `None` for the zero code.
    pub min_weight: Option<usize>,
    /// Weight -> count over all visited words (including zero); complete
    /// only for the exhaustive method.
    pub distribution: BTreeMap<usize, u64>,
    pub enumerated: u64,
    pub method: WeightMethod,
    /// First minimum-weight word in enumeration order.
    pub witness: Option<Vec<E>>,
}

/// Enumerates `Σ c_i g_i` with each `c_i` drawn from its own coefficient list,
/// over integer-encoded ring elements.
struct Enumerator<R: CoeffRing> {
    elems: Vec<R::Elem>,
    add: Vec<u32>,
    ncols: usize,
    // multiples[i][d] = encoded (coeffs[i][d] * g_i)
    multiples: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone)]
struct Partial {
    min: Option<(usize, Vec<u32>, Vec<usize>)>,
    distribution: Vec<u64>,
    visited: u64,
}

impl<R: CoeffRing> Enumerator<R> {
    fn new(ring: &R, gens: &[Vec<R::Elem>], coeffs: &[Vec<R::Elem>], ncols: usize) -> Result<Self> {
        let size = ring
            .size()
            .filter(|&s| s <= MAX_TABLE_RING)
            .ok_or_else(|| GrmError::ParamsTooLarge("coefficient ring too large to tabulate".into()))?;
        let elems = ring.elements();
        let mut add = vec![0u32; (size * size) as usize];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * size as usize + j] = ring.encode(&ring.add(a, b)) as u32;
            }
        }
        let multiples = gens
            .iter()
            .zip(coeffs)
            .map(|(g, cs)| cs.iter().map(|c| g.iter().map(|e| ring.encode(&ring.mul(c, e)) as u32).collect()).collect())
            .collect();
        Ok(Self { elems, add, ncols, multiples })
    }

    fn count(&self) -> Option<u64> {
        self.multiples.iter().try_fold(1u64, |acc, m| acc.checked_mul(m.len() as u64))
    }

    fn sum_into(&self, out: &mut [u32], a: &[u32], b: &[u32]) {
        let size = self.elems.len();
        for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
            *o = self.add[x as usize * size + y as usize];
        }
    }

    /// Runs the odometer with the first coefficient fixed to `first`.
    fn run_slice(&self, first: usize) -> Partial {
        let k = self.multiples.len();
        let n = self.ncols;
        let mut digits = vec![0usize; k];
        digits[0] = first;
        let mut prefix = vec![vec![0u32; n]; k + 1];
        prefix[1] = self.multiples[0][first].clone();
        for j in 1..k {
            let (lo, hi) = prefix.split_at_mut(j + 1);
            self.sum_into(&mut hi[0], &lo[j], &self.multiples[j][0]);
        }
        let mut part = Partial { min: None, distribution: vec![0; n + 1], visited: 0 };
        loop {
            let word = &prefix[k];
            let w = word.iter().filter(|&&c| c != 0).count();
            part.distribution[w] += 1;
            part.visited += 1;
            if w > 0 && part.min.as_ref().is_none_or(|(best, _, _)| w < *best) {
                part.min = Some((w, word.clone(), digits.clone()));
            }
            let mut i = k - 1;
            while i >= 1 && digits[i] + 1 == self.multiples[i].len() {
                digits[i] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            digits[i] += 1;
            for j in i..k {
                let (lo, hi) = prefix.split_at_mut(j + 1);
                self.sum_into(&mut hi[0], &lo[j], &self.multiples[j][digits[j]]);
            }
        }
        part
    }

    /// All slices, in parallel; merged in slice order so results do not
    /// depend on scheduling.
    fn run(&self) -> Partial {
        if self.multiples.is_empty() {
            let mut distribution = vec![0; self.ncols + 1];
            distribution[0] = 1;
            return Partial { min: None, distribution, visited: 1 };
        }
        let parts: Vec<Partial> = (0..self.multiples[0].len()).into_par_iter().map(|f| self.run_slice(f)).collect();
        parts.into_iter().fold(
            Partial { min: None, distribution: vec![0; self.ncols + 1], visited: 0 },
            |mut acc, p| {
                for (a, b) in acc.distribution.iter_mut().zip(&p.distribution) {
                    *a += b;
                }
                acc.visited += p.visited;
                if let Some((w, word, digits)) = p.min {
                    if acc.min.as_ref().is_none_or(|(best, _, _)| w < *best) {
                        acc.min = Some((w, word, digits));
                    }
                }
                acc
            },
        )
    }

    fn decode(&self, word: &[u32]) -> Vec<R::Elem> {
        word.iter().map(|&c| self.elems[c as usize].clone()).collect()
    }

    fn report(&self, part: Partial, method: WeightMethod) -> WeightReport<R::Elem> {
        let distribution = part.distribution.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c)).collect();
        WeightReport {
            min_weight: part.min.as_ref().map(|(w, _, _)| *w),
            witness: part.min.as_ref().map(|(_, word, _)| self.decode(word)),
            distribution,
            enumerated: part.visited,
            method,
        }
    }
}

/// Canonical representatives of `L / p^t L`.
fn transversal<R: CoeffRing>(ring: &R, t: u32) -> Vec<R::Elem> {
    ring.elements().into_iter().filter(|c| ring.rem_p_pow(c, t) == *c).collect()
}

/// Enumerator over the Howell form of `m`: coefficient `i` ranges over
/// `L / p^(s - v_i) L`, so every codeword appears exactly once.
fn span_enumerator<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Result<Enumerator<R>> {
    let hf = howell(ring, m);
    let s = ring.nilpotency();
    let coeffs: Vec<Vec<R::Elem>> = hf.pivot_valuations.iter().map(|&v| transversal(ring, s - v)).collect();
    Enumerator::new(ring, hf.rows(), &coeffs, m.ncols())
}

fn too_large(what: &str, count: Option<u64>, guard: u64) -> GrmError {
    GrmError::EnumerationTooLarge {
        size: count.map_or_else(|| format!("{what} > 2^64"), |c| format!("{what} = {c}")),
        guard,
    }
}

/// Exact minimum Hamming weight of the row module of `m`. Enumerates every
/// codeword when that fits under `guard`, otherwise the socle.
pub fn brute_min_weight<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>, guard: u64) -> Result<WeightReport<R::Elem>> {
    let full = span_enumerator(ring, m)?;
    let count = full.count();
    if count.is_some_and(|c| c <= guard) {
        return Ok(full.report(full.run(), WeightMethod::Exhaustive));
    }
    let soc = socle(ring, m);
    let coeffs = vec![transversal(ring, 1); soc.nrows()];
    let soc_enum = Enumerator::new(ring, soc.rows(), &coeffs, m.ncols())?;
    match soc_enum.count() {
        Some(c) if c <= guard => Ok(soc_enum.report(soc_enum.run(), WeightMethod::Socle)),
        c => Err(too_large("socle size", c, guard)),
    }
}

/// Full weight distribution; always exhaustive.
pub fn weight_distribution<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>, guard: u64) -> Result<WeightReport<R::Elem>> {
    let full = span_enumerator(ring, m)?;
    match full.count() {
        Some(c) if c <= guard => Ok(full.report(full.run(), WeightMethod::Exhaustive)),
        c => Err(too_large("code size", c, guard)),
    }
}

/// Minimum weight via the socle regardless of size.
pub fn socle_min_weight<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>, guard: u64) -> Result<WeightReport<R::Elem>> {
    let soc = socle(ring, m);
    let coeffs = vec![transversal(ring, 1); soc.nrows()];
    let e = Enumerator::new(ring, soc.rows(), &coeffs, m.ncols())?;
    match e.count() {
        Some(c) if c <= guard => Ok(e.report(e.run(), WeightMethod::Socle)),
        c => Err(too_large("socle size", c, guard)),
    }
}

/// Every codeword of the row module, each once, in enumeration order.
pub fn codewords<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>, guard: u64) -> Result<Vec<Vec<R::Elem>>> {
    let e = span_enumerator(ring, m)?;
    let count = e.count().filter(|&c| c <= guard).ok_or_else(|| too_large("code size", e.count(), guard))?;
    let mut out = Vec::with_capacity(count as usize);
    let k = e.multiples.len();
    if k == 0 {
        return Ok(vec![vec![ring.zero(); m.ncols()]]);
    }
    let mut digits = vec![0usize; k];
    loop {
        let mut word = vec![0u32; m.ncols()];
        for (j, &d) in digits.iter().enumerate() {
            let prev = word.clone();
            e.sum_into(&mut word, &prev, &e.multiples[j][d]);
        }
        out.push(e.decode(&word));
        let Some(i) = (0..k).rev().find(|&i| digits[i] + 1 < e.multiples[i].len()) else { break };
        digits[i] += 1;
        digits[i + 1..].iter_mut().for_each(|d| *d = 0);
    }
    Ok(out)
}

/// Row-module equality: by comparing codeword sets when both fit under
/// `guard`, by Howell forms otherwise.
pub fn codeword_set_equal<R: CoeffRing>(
    ring: &R,
    a: &Matrix<R::Elem>,
    b: &Matrix<R::Elem>,
    guard: u64,
) -> Result<bool> {
    if a.ncols() != b.ncols() {
        return Ok(false);
    }
    match (codewords(ring, a, guard), codewords(ring, b, guard)) {
        (Ok(ca), Ok(cb)) => {
            let sa: HashSet<Vec<R::Elem>> = ca.into_iter().collect();
            let sb: HashSet<Vec<R::Elem>> = cb.into_iter().collect();
            Ok(sa == sb)
        }
        (Err(GrmError::EnumerationTooLarge { .. }), _) | (_, Err(GrmError::EnumerationTooLarge { .. })) => {
            Ok(same_row_module(ring, a, b))
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

/// All pairwise inner products vanish and the free ranks add up to the length.
pub fn verify_dual<R: CoeffRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<bool> {
    if a.ncols() != b.ncols() {
        return Err(GrmError::LengthMismatch(a.ncols(), b.ncols()));
    }
    for u in a.rows() {
        for v in b.rows() {
            if !ring.is_zero(&inner_product(ring, u, v)?) {
                return Ok(false);
            }
        }
    }
    match (rank_free(ring, a), rank_free(ring, b)) {
        (Ok(ka), Ok(kb)) => Ok(ka + kb == a.ncols()),
        _ => Ok(false),
    }
}

/// Generator matrix of `RM_(F_q)(ν, m)`, built in `F_q[x]/(ḡ)` without any
/// Galois ring arithmetic: rows are the monomials `x_1^(i_1) ... x_m^(i_m)`
/// (`i_j <= q-1`, total at most `ν`) evaluated at `0` and at the coordinate
/// vectors of `x̄^0, ..., x̄^(n-1)`.
pub fn field_grm(tower: &GaloisTower, nu: u32) -> Result<Matrix<FqElem>> {
    let max = tower.max_order();
    if nu > max {
        return Err(GrmError::OrderOutOfRange { nu, max });
    }
    let fq = tower.residue_field();
    let field = GaloisRing::new(fq.clone(), tower.g0_bar().clone())?;
    let (q, m, n) = (tower.q(), tower.m() as usize, tower.n());
    let mut points = vec![vec![fq.zero(); m]];
    let gen = field.generator();
    let mut acc = field.one();
    for _ in 0..n {
        points.push(acc.coeffs().to_vec());
        acc = field.mul(&acc, &gen);
    }
    let mut rows = Vec::new();
    for code in 0..q.pow(m as u32) {
        let exps: Vec<u64> = (0..m).map(|j| code / q.pow(j as u32) % q).collect();
        if exps.iter().sum::<u64>() > nu as u64 {
            continue;
        }
        rows.push(
            points
                .iter()
                .map(|pt| pt.iter().zip(&exps).fold(fq.one(), |a, (x, &e)| fq.mul(&a, &fq.pow(x, e))))
                .collect(),
        );
    }
    Matrix::from_rows(rows, n + 1)
}

/// A minimum-weight codeword `u` of the projected code lifted back into the
/// code: `p^(s-1) v` with `v` any lift of `u` built from the generators.
#[derive(Clone, Debug)]
pub struct LiftedWitness {
    pub field_word: Vec<FqElem>,
    pub field_weight: usize,
    pub lifted: Vec<LElem>,
    pub lifted_weight: usize,
    pub in_code: bool,
}

pub fn lifted_min_weight_witness(tower: &GaloisTower, genmat: &Matrix<LElem>, guard: u64) -> Result<LiftedWitness> {
    let fq = tower.residue_field();
    let projected = project_matrix(tower, genmat);
    let coeffs = vec![fq.elements(); projected.nrows()];
    let e = Enumerator::new(fq, projected.rows(), &coeffs, projected.ncols())?;
    if e.count().is_none_or(|c| c > guard) {
        return Err(too_large("projected combinations", e.count(), guard));
    }
    let (field_weight, word, digits) =
        e.run().min.ok_or_else(|| GrmError::PreconditionViolated("projected code is zero".into()))?;
    let lifts: Vec<LElem> = digits.iter().map(|&d| tower.lift_residue(&e.elems[d])).collect();
    let base = tower.base();
    let v = vec_mat(base, &lifts, genmat)?;
    let lifted: Vec<LElem> = v.iter().map(|c| base.mul_p_pow(c, tower.params().s - 1)).collect();
    let lifted_weight = lifted.iter().filter(|c| !base.is_zero(c)).count();
    let in_code = span_contains(base, genmat, &lifted)?;
    Ok(LiftedWitness { field_word: e.decode(&word), field_weight, lifted, lifted_weight, in_code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois_ring::build_tower;
    use crate::grm::{distance_params, standard_genmat};
    use crate::ring_base::{RingParams, Zps};
    use crate::ring_linalg::span_contains;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn tower(p: u64, s: u32, r: u32, m: u32) -> Arc<GaloisTower> {
        Arc::new(build_tower(RingParams::new(p, s, r).unwrap(), m).unwrap())
    }

    fn zmat(rows: &[&[u64]]) -> Matrix<u64> {
        Matrix::from_rows(rows.iter().map(|x| x.to_vec()).collect(), rows[0].len()).unwrap()
    }

    /// Minimum weight over every `|R|^k` coefficient combination of the
    /// given rows, written as naively as possible.
    fn naive_min_weight<R: CoeffRing>(ring: &R, m: &Matrix<R::Elem>) -> Option<usize> {
        let elems = ring.elements();
        let k = m.nrows();
        let mut best = None;
        let total = (elems.len() as u64).pow(k as u32);
        for code in 0..total {
            let mut c = code;
            let coeffs: Vec<R::Elem> = (0..k)
                .map(|_| {
                    let e = elems[(c % elems.len() as u64) as usize].clone();
                    c /= elems.len() as u64;
                    e
                })
                .collect();
            let w = vec_mat(ring, &coeffs, m).unwrap().iter().filter(|x| !ring.is_zero(x)).count();
            if w > 0 && best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
        best
    }

    #[test]
    fn repetition_code_weight() {
        let r = Zps::new(2, 2).unwrap();
        let rep = zmat(&[&[1; 8]]);
        let rep = brute_min_weight(&r, &rep, DEFAULT_GUARD).unwrap();
        assert_eq!(rep.min_weight, Some(8));
        assert_eq!(rep.enumerated, 4);
        assert_eq!(rep.distribution, BTreeMap::from([(0, 1), (8, 3)]));
    }

    #[test]
    fn small_grm_weights() {
        let t = tower(2, 2, 1, 2);
        let g1 = standard_genmat(&t, 1).unwrap();
        let full = brute_min_weight(t.base(), g1.genmat(), DEFAULT_GUARD).unwrap();
        assert_eq!(full.min_weight, Some(2));
        assert_eq!(full.enumerated, 64);
        assert_eq!(full.distribution.values().sum::<u64>(), 64);
        let short = brute_min_weight(t.base(), &g1.punctured(), DEFAULT_GUARD).unwrap();
        assert_eq!(short.min_weight, Some(1));
        let w = short.witness.unwrap();
        assert_eq!(w.iter().filter(|c| !t.base().is_zero(c)).count(), 1);
        assert!(span_contains(t.base(), &g1.punctured(), &w).unwrap());
    }

    #[test]
    fn zero_code_has_no_minimum() {
        let r = Zps::new(3, 2).unwrap();
        let z = Matrix::<u64>::empty(4);
        let rep = brute_min_weight(&r, &z, DEFAULT_GUARD).unwrap();
        assert_eq!(rep.min_weight, None);
        assert_eq!(rep.enumerated, 1);
    }

    #[test]
    fn enumeration_matches_naive_and_socle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (p, s) in [(2u64, 2u32), (3, 2), (2, 3)] {
            let r = Zps::new(p, s).unwrap();
            for _ in 0..40 {
                let k = rng.gen_range(1..=4);
                let n = rng.gen_range(2..=6);
                let rows = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..r.modulus())).collect()).collect();
                let m = Matrix::from_rows(rows, n).unwrap();
                let naive = naive_min_weight(&r, &m);
                let full = brute_min_weight(&r, &m, DEFAULT_GUARD).unwrap();
                assert_eq!(full.min_weight, naive);
                assert_eq!(socle_min_weight(&r, &m, DEFAULT_GUARD).unwrap().min_weight, naive);
                let size: u64 = full.distribution.values().sum();
                assert_eq!(size, p.pow(howell(&r, &m).log_p_size(&r) as u32));
                assert_eq!(codewords(&r, &m, DEFAULT_GUARD).unwrap().len() as u64, size);
            }
        }
    }

    #[test]
    fn weight_is_invariant_under_row_and_column_shuffles() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let t = tower(3, 2, 1, 2);
        for nu in 0..4 {
            let g = standard_genmat(&t, nu).unwrap().punctured();
            let base = brute_min_weight(t.base(), &g, DEFAULT_GUARD).unwrap().min_weight;
            let mut rows = g.rows().to_vec();
            rows.shuffle(&mut rng);
            let mut perm: Vec<usize> = (0..g.ncols()).collect();
            perm.shuffle(&mut rng);
            let rows = rows.into_iter().map(|r| perm.iter().map(|&j| r[j].clone()).collect()).collect();
            let shuffled = Matrix::from_rows(rows, g.ncols()).unwrap();
            assert_eq!(brute_min_weight(t.base(), &shuffled, DEFAULT_GUARD).unwrap().min_weight, base);
        }
    }

    #[test]
    fn guard_falls_back_to_socle_then_errors() {
        let t = tower(2, 2, 1, 3);
        let g = standard_genmat(&t, 2).unwrap().punctured();
        let rep = brute_min_weight(t.base(), &g, 1000).unwrap();
        assert_eq!(rep.method, WeightMethod::Socle);
        assert_eq!(rep.min_weight, Some(1));
        assert!(matches!(brute_min_weight(t.base(), &g, 10), Err(GrmError::EnumerationTooLarge { .. })));
    }

    #[test]
    fn field_grm_examples() {
        let t = tower(2, 2, 1, 3);
        let f = field_grm(&t, 0).unwrap();
        assert_eq!(f.nrows(), 1);
        assert!(f.row(0).iter().all(|c| *c == t.residue_field().one()));
        let rm13 = field_grm(&t, 1).unwrap();
        assert_eq!(howell(t.residue_field(), &rm13).len(), 4);
        let rep = brute_min_weight(t.residue_field(), &rm13, DEFAULT_GUARD).unwrap();
        assert_eq!(rep.min_weight, Some(4));
        for t in [tower(3, 2, 1, 2), tower(2, 2, 2, 2)] {
            for nu in 0..=t.max_order() {
                let dim = howell(t.residue_field(), &field_grm(&t, nu).unwrap()).len() as u64;
                assert_eq!(dim, crate::grm::rank_formula(nu, t.m(), t.q()));
            }
        }
    }

    #[test]
    fn dual_examples() {
        let t = tower(2, 2, 1, 3);
        let g1 = standard_genmat(&t, 1).unwrap();
        assert!(verify_dual(t.base(), g1.genmat(), g1.genmat()).unwrap());
        let ones = standard_genmat(&t, 0).unwrap();
        let g2 = standard_genmat(&t, 2).unwrap();
        assert!(verify_dual(t.base(), ones.genmat(), g2.genmat()).unwrap());
        let id = Matrix::identity(t.base(), 8);
        assert!(!verify_dual(t.base(), &id, &id).unwrap());
        assert!(verify_dual(t.base(), &id, &g1.punctured()).is_err());
    }

    #[test]
    fn set_equality_examples() {
        let t = tower(2, 2, 1, 3);
        let g1 = standard_genmat(&t, 1).unwrap();
        let mut rows = g1.genmat().rows().to_vec();
        rows.reverse();
        let permuted = Matrix::from_rows(rows, 8).unwrap();
        assert!(codeword_set_equal(t.base(), g1.genmat(), &permuted, DEFAULT_GUARD).unwrap());
        let g0 = standard_genmat(&t, 0).unwrap();
        assert!(!codeword_set_equal(t.base(), g1.genmat(), g0.genmat(), DEFAULT_GUARD).unwrap());
        assert!(codeword_set_equal(t.base(), g1.genmat(), &permuted, 10).unwrap());
    }

    #[test]
    fn lifted_witness_matches_field_weight() {
        for t in [tower(2, 2, 1, 3), tower(3, 2, 1, 2), tower(2, 3, 1, 2)] {
            for nu in 0..t.max_order() {
                let g = standard_genmat(&t, nu).unwrap();
                let w = lifted_min_weight_witness(&t, g.genmat(), DEFAULT_GUARD).unwrap();
                assert_eq!(w.lifted_weight, w.field_weight);
                assert!(w.in_code);
                let dp = distance_params(nu, t.m(), t.q()).unwrap();
                assert_eq!(w.field_weight as u64, dp.field_extended());
            }
        }
    }
}
