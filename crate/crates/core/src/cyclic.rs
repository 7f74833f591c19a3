//! Cyclic structure of the punctured codes: q-weights, cyclotomic cosets,
//! the generator polynomials `g_ν` and the BCH root run.

use crate::error::{GrmError, Result};
use crate::galois_ring::{BaseRing, GaloisTower, LElem};
use crate::ring_base::{CoeffRing, PolyRing, UPoly};
use crate::ring_linalg::Matrix;

/// Base-`q` digit sum of `k`, for `0 <= k <= q^m - 1`.
pub fn qweight(k: u64, q: u64, m: u32) -> Result<u32> {
    if k > q.pow(m) - 1 {
        return Err(GrmError::OutOfRange(k));
    }
    let mut k = k;
    let mut w = 0;
    while k > 0 {
        w += (k % q) as u32;
        k /= q;
    }
    Ok(w)
}

/// `w_q(q^m - 1 - j) = m(q-1) - w_q(j)`
pub fn complementary_qweight_identity(j: u64, q: u64, m: u32) -> Result<bool> {
    let w = qweight(j, q, m)?;
    let wc = qweight(q.pow(m) - 1 - j, q, m)?;
    Ok(wc == m * (q as u32 - 1) - w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    /// Smallest member.
    pub rep: u64,
    /// `rep, rep q, rep q^2, ...` modulo `n`.
    pub members: Vec<u64>,
}

/// The orbits of `j -> j q mod n` on `[0, n)`, by ascending representative.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Vec<CyclotomicCoset> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for rep in 0..n {
        if seen[rep as usize] {
            continue;
        }
        let mut members = Vec::new();
        let mut j = rep;
        while !seen[j as usize] {
            seen[j as usize] = true;
            members.push(j);
            j = j * q % n;
        }
        out.push(CyclotomicCoset { rep, members });
    }
    out
}

/// A cyclic code of length `n` over `L` with monic generator `gen` dividing
/// `x^n - 1`, and check polynomial `(x^n - 1) / gen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCyclicCode {
    n: usize,
    gen: UPoly<LElem>,
    check: UPoly<LElem>,
}

impl LCyclicCode {
    /// Monicizes `gen` and checks that it divides `x^n - 1`.
    pub fn from_generator(ring: &BaseRing, n: usize, gen: &UPoly<LElem>) -> Result<Self> {
        let pr = PolyRing::new(ring);
        let gen = pr.monicize(gen)?;
        let check = pr
            .div_exact(&pr.x_pow_minus_one(n), &gen)?
            .ok_or_else(|| GrmError::PreconditionViolated(format!("generator does not divide x^{n} - 1")))?;
        Ok(Self { n, gen, check })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gen(&self) -> &UPoly<LElem> {
        &self.gen
    }

    pub fn check(&self) -> &UPoly<LElem> {
        &self.check
    }

    /// Free rank `n - deg(gen)`.
    pub fn rank(&self) -> usize {
        self.n - self.gen.degree().expect("generator is nonzero")
    }

    /// Whether `c(x) * check(x) = 0` modulo `x^n - 1`.
    pub fn contains(&self, ring: &BaseRing, word: &[LElem]) -> Result<bool> {
        if word.len() != self.n {
            return Err(GrmError::LengthMismatch(word.len(), self.n));
        }
        let pr = PolyRing::new(ring);
        let prod = pr.mul(&pr.from_coeffs(word.to_vec()), &self.check);
        Ok(pr.rem(&prod, &pr.x_pow_minus_one(self.n))?.is_zero())
    }
}

/// `(x^n - 1) / gen`, recomputed by division.
pub fn check_poly(ring: &BaseRing, code: &LCyclicCode) -> Result<UPoly<LElem>> {
    let pr = PolyRing::new(ring);
    pr.div_exact(&pr.x_pow_minus_one(code.n), &code.gen)?
        .ok_or_else(|| GrmError::PreconditionViolated("generator does not divide x^n - 1".into()))
}

/// `g_ν = Π (x - ξ^j)` over `1 <= j <= q^m - 2` with `w_q(j) <= m(q-1) - ν - 1`,
/// multiplied coset by coset.
pub fn grm_generator_poly(tower: &GaloisTower, nu: u32) -> Result<LCyclicCode> {
    let max = tower.max_order();
    if nu >= max {
        return Err(GrmError::OrderOutOfRange { nu, max: max - 1 });
    }
    if !tower.rm_at_least_s() {
        return Err(GrmError::PreconditionViolated("cyclic description needs rm >= s".into()));
    }
    let (q, m, n) = (tower.q(), tower.m(), tower.n());
    let bound = max - nu - 1;
    let pr_r = PolyRing::new(tower.ext());
    let pr_l = PolyRing::new(tower.base());
    let mut gen = pr_l.one();
    for coset in cyclotomic_cosets(n as u64, q) {
        if coset.rep == 0 || qweight(coset.rep, q, m)? > bound {
            continue;
        }
        let factors: Vec<_> = coset.members.iter().map(|&j| pr_r.linear(&tower.xi_pow(j as usize))).collect();
        let factor = tower.descend_poly(&pr_r.product(&factors))?;
        gen = pr_l.mul(&gen, &factor);
    }
    LCyclicCode::from_generator(tower.base(), n, &gen)
}

/// Coefficient vector of `f` padded to length `n`.
pub fn poly_to_word(ring: &BaseRing, f: &UPoly<LElem>, n: usize) -> Vec<LElem> {
    let mut w = f.coeffs().to_vec();
    assert!(w.len() <= n, "polynomial longer than the code");
    w.resize(n, ring.zero());
    w
}

/// Rows `g, x g, ..., x^(k-1) g`.
pub fn cyclic_genmat(ring: &BaseRing, code: &LCyclicCode) -> Matrix<LElem> {
    let n = code.n;
    let rows = (0..code.rank())
        .map(|i| {
            let mut w = vec![ring.zero(); i];
            w.extend(code.gen.coeffs().iter().cloned());
            w.resize(n, ring.zero());
            w
        })
        .collect();
    Matrix::from_rows(rows, n).expect("rows have length n")
}

/// `(c_(n-1), c_0, ..., c_(n-2))`, i.e. multiplication by `x` modulo `x^n - 1`.
pub fn cyclic_shift<E: Clone>(v: &[E]) -> Vec<E> {
    let mut w = v.to_vec();
    w.rotate_right(1);
    w
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchRun {
    /// Largest `t` with `ξ^1, ..., ξ^t` all roots of the generator.
    pub run: usize,
    /// `t + 1`.
    pub designed: usize,
}

pub fn bch_root_run(tower: &GaloisTower, code: &LCyclicCode) -> BchRun {
    let pr = PolyRing::new(tower.ext());
    let lifted = tower.lift_poly(code.gen());
    let zero = tower.ext().zero();
    let run = (1..=code.n).take_while(|&j| pr.eval(&lifted, &tower.xi_pow(j)) == zero).count();
    BchRun { run, designed: run + 1 }
}
