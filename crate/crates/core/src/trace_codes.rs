//! Kerdock codes over `L` and trace descriptions of GRM codes.

use std::collections::{BTreeMap, HashSet};

use crate::cyclic::{cyclic_genmat, cyclotomic_cosets, qweight, LCyclicCode};
use crate::error::{GrmError, Result};
use crate::galois_ring::{GaloisTower, LElem, RElem, TeichIndex};
use crate::grm::extend_parity;
use crate::ring_base::{CoeffRing, PolyRing};
use crate::ring_linalg::Matrix;

fn require_rm_at_least_s(tower: &GaloisTower, what: &str) -> Result<()> {
    if tower.rm_at_least_s() {
        Ok(())
    } else {
        Err(GrmError::PreconditionViolated(format!("{what} needs rm >= s")))
    }
}

/// The shortened Kerdock code `K^-` and its parity extension `K`.
#[derive(Clone, Debug)]
pub struct KerdockPair {
    pub shortened: LCyclicCode,
    pub extended: Matrix<LElem>,
}

/// Monic reciprocal of `(x^n - 1) / ((x - 1) h(x))`, `h` the minimal
/// polynomial of `ξ`.
pub fn kerdock_gen_poly(tower: &GaloisTower) -> Result<LCyclicCode> {
    require_rm_at_least_s(tower, "the Kerdock code")?;
    let n = tower.n();
    if n < 2 {
        return Err(GrmError::PreconditionViolated("the Kerdock code needs q^m > 2".into()));
    }
    let pr = PolyRing::new(tower.base());
    let h = tower.minimal_polynomial(&tower.xi())?;
    let divisor = pr.mul(&pr.from_ints(&[-1, 1]), &h);
    let cofactor = pr
        .div_exact(&pr.x_pow_minus_one(n), &divisor)?
        .ok_or_else(|| GrmError::PreconditionViolated("(x - 1) h(x) does not divide x^n - 1".into()))?;
    let gen = pr.monicize(&pr.reciprocal(&cofactor)?)?;
    LCyclicCode::from_generator(tower.base(), n, &gen)
}

pub fn kerdock_code(tower: &GaloisTower) -> Result<KerdockPair> {
    let shortened = kerdock_gen_poly(tower)?;
    let extended = extend_parity(tower.base(), &cyclic_genmat(tower.base(), &shortened));
    Ok(KerdockPair { shortened, extended })
}

/// `(T(λ), T(λ ξ^j), ..., T(λ ξ^((n-1) j)))`, optionally preceded by a `0`
/// at position `∞`.
pub fn trace_word(tower: &GaloisTower, lambda: &RElem, j: usize, with_leading_zero: bool) -> Result<Vec<LElem>> {
    let n = tower.n();
    if j >= n.max(1) {
        return Err(GrmError::OutOfRange(j as u64));
    }
    let ext = tower.ext();
    let mut word = Vec::with_capacity(n + 1);
    if with_leading_zero {
        word.push(tower.base().zero());
    }
    for i in 0..n {
        word.push(tower.trace(&ext.mul(lambda, &tower.xi_pow(i * j % n)))?);
    }
    Ok(word)
}

/// The words `ε 1^n + v^(λ)` for all `ε ∈ L`, `λ ∈ R`.
#[derive(Clone, Debug)]
pub struct KerdockTraceSet {
    pub words: HashSet<Vec<LElem>>,
    /// Number of pairs `(ε, λ)` visited.
    pub pairs: u64,
}

impl KerdockTraceSet {
    /// Whether `(ε, λ) -> ε 1^n + v^(λ)` is injective.
    pub fn injective(&self) -> bool {
        self.words.len() as u64 == self.pairs
    }
}

pub fn kerdock_trace_set(tower: &GaloisTower, guard: u64) -> Result<KerdockTraceSet> {
    require_rm_at_least_s(tower, "the trace description of the Kerdock code")?;
    let (base, ext) = (tower.base(), tower.ext());
    let pairs =
        base.size().zip(ext.size()).and_then(|(a, b)| a.checked_mul(b)).filter(|&c| c <= guard).ok_or_else(|| {
            GrmError::EnumerationTooLarge {
                size: format!("|L| * |R| for {} with m = {}", tower.params(), tower.m()),
                guard,
            }
        })?;
    let epsilons = base.elements();
    let mut words = HashSet::with_capacity(pairs as usize);
    for code in 0..ext.size().expect("checked above") {
        let v = trace_word(tower, &ext.decode(code), 1, false)?;
        for eps in &epsilons {
            words.insert(v.iter().map(|c| base.add(c, eps)).collect());
        }
    }
    Ok(KerdockTraceSet { words, pairs })
}

/// `1^(q^m)` together with the words `(0, T(λ), T(λ ξ^j), ...)` for `λ` in
/// the basis `1, ξ, ..., ξ^(m-1)` and `j` running over the nonzero coset
/// representatives with `w_q(j) <= ν`. At `ν = m(q-1)` the coset `{0}` is
/// included as well.
pub fn grm_trace_genmat(tower: &GaloisTower, nu: u32) -> Result<Matrix<LElem>> {
    require_rm_at_least_s(tower, "the trace description")?;
    let max = tower.max_order();
    if nu == 0 || nu > max {
        return Err(GrmError::OrderOutOfRange { nu, max });
    }
    let (q, m, n) = (tower.q(), tower.m(), tower.n());
    let mut rows = vec![vec![tower.base().one(); tower.length()]];
    for coset in cyclotomic_cosets(n as u64, q) {
        let j = coset.rep;
        if (j == 0 && nu < max) || qweight(j, q, m)? > nu {
            continue;
        }
        for b in 0..m as usize {
            rows.push(trace_word(tower, &tower.xi_pow(b), j as usize, true)?);
        }
    }
    Matrix::from_rows(rows, tower.length())
}

/// One term `T(μ z^t)` of an expanded trace product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTerm {
    /// Exponent in `[1, n]`; `n` rather than `0` so that `z = 0` still maps to `0`.
    pub t: usize,
    pub mu: RElem,
}

/// Expands `Π T(λ_i z)^(e_i)` as `Σ_t T(μ_t z^t)` for `z` in the Teichmüller set.
///
/// With `a = Σ e_i` factors `T(λ_(k_1) z) ... T(λ_(k_a) z)`, each tuple of
/// Frobenius shifts `(0, w_2, ..., w_a)` contributes
/// `μ = λ_(k_1) Π λ_(k_i)^(f^(w_i))` at `t = 1 + Σ q^(w_i)`. Terms are merged by
/// `t` and terms with `μ = 0` dropped.
pub fn trace_product_expand(tower: &GaloisTower, lambdas: &[RElem], exponents: &[u32]) -> Result<Vec<TraceTerm>> {
    if lambdas.len() != exponents.len() {
        return Err(GrmError::LengthMismatch(lambdas.len(), exponents.len()));
    }
    let factors: Vec<&RElem> =
        lambdas.iter().zip(exponents).flat_map(|(l, &e)| std::iter::repeat_n(l, e as usize)).collect();
    let Some((first, rest)) = factors.split_first() else {
        return Err(GrmError::PreconditionViolated("the product needs at least one factor".into()));
    };
    let (m, n, q) = (tower.m() as usize, tower.n(), tower.q() as usize);
    let ext = tower.ext();
    // twists[i][w] = rest[i]^(f^w)
    let twists: Vec<Vec<RElem>> =
        rest.iter().map(|l| (0..m as u32).map(|w| tower.frobenius_pow(l, w)).collect()).collect();
    let qpow: Vec<usize> = (0..m).map(|w| q.pow(w as u32) % n).collect();

    let mut terms: BTreeMap<usize, RElem> = BTreeMap::new();
    let mut shifts = vec![0usize; rest.len()];
    loop {
        let mu = shifts.iter().enumerate().fold((*first).clone(), |acc, (i, &w)| ext.mul(&acc, &twists[i][w]));
        let t = shifts.iter().fold(1 % n, |acc, &w| (acc + qpow[w]) % n);
        let t = if t == 0 { n } else { t };
        let entry = terms.entry(t).or_insert_with(|| ext.zero());
        *entry = ext.add(entry, &mu);

        let Some(pos) = shifts.iter().rposition(|&w| w + 1 < m) else { break };
        shifts[pos] += 1;
        shifts[pos + 1..].iter_mut().for_each(|w| *w = 0);
    }
    Ok(terms.into_iter().filter(|(_, mu)| !ext.is_zero(mu)).map(|(t, mu)| TraceTerm { t, mu }).collect())
}

/// `Π T(λ_i z)^(e_i)` at `z`.
pub fn trace_product_at(tower: &GaloisTower, lambdas: &[RElem], exponents: &[u32], z: &RElem) -> Result<LElem> {
    let base = tower.base();
    let mut acc = base.one();
    for (l, &e) in lambdas.iter().zip(exponents) {
        let tr = tower.trace(&tower.ext().mul(l, z))?;
        acc = base.mul(&acc, &base.pow(&tr, e as u64));
    }
    Ok(acc)
}

/// `Σ T(μ_t z^t)` at `z`.
pub fn trace_expansion_at(tower: &GaloisTower, terms: &[TraceTerm], z: &RElem) -> Result<LElem> {
    let (base, ext) = (tower.base(), tower.ext());
    let mut acc = base.zero();
    for term in terms {
        acc = base.add(&acc, &tower.trace(&ext.mul(&term.mu, &ext.pow(z, term.t as u64)))?);
    }
    Ok(acc)
}

/// The Teichmüller set `{0, 1, ξ, ..., ξ^(n-1)}`.
pub fn teichmuller_set(tower: &GaloisTower) -> Vec<RElem> {
    tower.positions().into_iter().map(|i: TeichIndex| tower.teich_element(i)).collect()
}
