//! Residue arithmetic in `Z/p^s` and dense univariate polynomials over any
//! coefficient ring of the tower.
//!
//! Every ring in the crate is a finite chain ring with maximal ideal `(p)`,
//! so the [`CoeffRing`] trait exposes p-adic valuations and exact division
//! by powers of `p` next to the usual ring operations. Elements are plain
//! values; the ring object is passed alongside them as a context.

use std::fmt;
use std::hash::Hash;

use crate::error::{GrmError, Result};

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut twos = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        twos += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..twos {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The parameters `(p, s, r)` of the coefficient ring `GR(p^s, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingParams {
    pub p: u64,
    pub s: u32,
    pub r: u32,
}

impl RingParams {
    pub fn new(p: u64, s: u32, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(GrmError::InvalidParams(format!("p = {p} is not prime")));
        }
        if s == 0 || r == 0 {
            return Err(GrmError::InvalidParams(format!("s and r must be at least 1 (got s = {s}, r = {r})")));
        }
        if p.checked_pow(s).is_none() {
            return Err(GrmError::ParamsTooLarge(format!("p^s = {p}^{s} exceeds 64 bits")));
        }
        if p.checked_pow(r).is_none() {
            return Err(GrmError::ParamsTooLarge(format!("q = {p}^{r} exceeds 64 bits")));
        }
        Ok(Self { p, s, r })
    }

    /// Size of the residue field `F_q`, `q = p^r`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// Characteristic `p^s`.
    pub fn characteristic(&self) -> u64 {
        self.p.pow(self.s)
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({}^{}, {})", self.p, self.s, self.r)
    }
}

/// A finite chain ring with maximal ideal `(p)` and nilpotency index `s`.
pub trait CoeffRing: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under `Z -> Z/p^s -> self`.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn prime(&self) -> u64;
    /// The `s` with `p^s = 0` and `p^(s-1) != 0`.
    fn nilpotency(&self) -> u32;
    /// Degree of the residue field over `F_p`.
    fn residue_degree(&self) -> u32;

    fn residue_field_size(&self) -> u64 {
        self.prime().pow(self.residue_degree())
    }

    /// Largest `t` with `p^t | a`; `None` for zero.
    fn valuation(&self, a: &Self::Elem) -> Option<u32>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.valuation(a) == Some(0)
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Exact quotient `a / p^t`, canonical representative. Panics if `p^t` does
    /// not divide `a`.
    fn div_p_pow(&self, a: &Self::Elem, t: u32) -> Self::Elem;
    fn mul_p_pow(&self, a: &Self::Elem, t: u32) -> Self::Elem;
    /// Canonical representative of `a` modulo `p^t`.
    fn rem_p_pow(&self, a: &Self::Elem, t: u32) -> Self::Elem;

    /// Number of elements, if it fits in a `u64`.
    fn size(&self) -> Option<u64>;
    /// Bijection `self -> [0, size)` with `encode(0) = 0`.
    fn encode(&self, a: &Self::Elem) -> u64;
    fn decode(&self, code: u64) -> Self::Elem;

    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// All elements in encoding order. Only sensible for small rings.
    fn elements(&self) -> Vec<Self::Elem> {
        let size = self.size().expect("ring too large to enumerate");
        (0..size).map(|c| self.decode(c)).collect()
    }
}

/// The residue ring `Z/p^s`, elements stored as canonical `u64` residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zps {
    p: u64,
    s: u32,
    modulus: u64,
}

impl Zps {
    pub fn new(p: u64, s: u32) -> Result<Self> {
        let params = RingParams::new(p, s, 1)?;
        Ok(Self { p, s, modulus: params.characteristic() })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical residue of an arbitrary integer.
    pub fn reduce(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }
}

impl CoeffRing for Zps {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn from_int(&self, v: i64) -> u64 {
        self.reduce(v as i128)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod_u64(*a, *b, self.modulus)
    }

    fn prime(&self) -> u64 {
        self.p
    }

    fn nilpotency(&self) -> u32 {
        self.s
    }

    fn residue_degree(&self) -> u32 {
        1
    }

    fn valuation(&self, a: &u64) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let mut v = 0;
        let mut x = *a;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        Some(v)
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        if a.is_multiple_of(self.p) {
            return Err(GrmError::NonUnit);
        }
        let (mut old_r, mut r) = (*a as i128, self.modulus as i128);
        let (mut old_x, mut x) = (1i128, 0i128);
        while r != 0 {
            let quo = old_r / r;
            (old_r, r) = (r, old_r - quo * r);
            (old_x, x) = (x, old_x - quo * x);
        }
        debug_assert_eq!(old_r, 1);
        Ok(self.reduce(old_x))
    }

    fn div_p_pow(&self, a: &u64, t: u32) -> u64 {
        let d = self.p.pow(t);
        assert!(a.is_multiple_of(d), "{a} is not divisible by {}^{t}", self.p);
        a / d
    }

    fn mul_p_pow(&self, a: &u64, t: u32) -> u64 {
        if t >= self.s {
            return 0;
        }
        self.mul(a, &self.p.pow(t))
    }

    fn rem_p_pow(&self, a: &u64, t: u32) -> u64 {
        if t >= self.s {
            return *a;
        }
        a % self.p.pow(t)
    }

    fn size(&self) -> Option<u64> {
        Some(self.modulus)
    }

    fn encode(&self, a: &u64) -> u64 {
        *a
    }

    fn decode(&self, code: u64) -> u64 {
        code % self.modulus
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Dense polynomial with ascending coefficients and no trailing zeros.
///
/// The zero polynomial has an empty coefficient list and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPoly<E> {
    coeffs: Vec<E>,
}

impl<E> UPoly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn constant(&self) -> Option<&E> {
        self.coeffs.first()
    }
}

/// Polynomial arithmetic over a coefficient ring.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a, R: CoeffRing> {
    ring: &'a R,
}

impl<'a, R: CoeffRing> PolyRing<'a, R> {
    pub fn new(ring: &'a R) -> Self {
        Self { ring }
    }

    pub fn base(&self) -> &'a R {
        self.ring
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> UPoly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(&self, coeffs: &[i64]) -> UPoly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.ring.from_int(c)).collect())
    }

    pub fn one(&self) -> UPoly<R::Elem> {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, c: R::Elem) -> UPoly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> UPoly<R::Elem> {
        self.monomial(self.ring.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, deg: usize) -> UPoly<R::Elem> {
        let mut coeffs = vec![self.ring.zero(); deg];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    /// `x - a`.
    pub fn linear(&self, a: &R::Elem) -> UPoly<R::Elem> {
        self.from_coeffs(vec![self.ring.neg(a), self.ring.one()])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(&self, n: usize) -> UPoly<R::Elem> {
        let mut coeffs = vec![self.ring.zero(); n + 1];
        coeffs[0] = self.ring.neg(&self.ring.one());
        coeffs[n] = self.ring.add(&coeffs[n], &self.ring.one());
        self.from_coeffs(coeffs)
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, f: &UPoly<R::Elem>, i: usize) -> R::Elem {
        f.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, f: &UPoly<R::Elem>, g: &UPoly<R::Elem>) -> UPoly<R::Elem> {
        let len = f.coeffs.len().max(g.coeffs.len());
        self.from_coeffs((0..len).map(|i| self.ring.add(&self.coeff(f, i), &self.coeff(g, i))).collect())
    }

    pub fn neg(&self, f: &UPoly<R::Elem>) -> UPoly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|c| self.ring.neg(c)).collect())
    }

    pub fn sub(&self, f: &UPoly<R::Elem>, g: &UPoly<R::Elem>) -> UPoly<R::Elem> {
        self.add(f, &self.neg(g))
    }

    pub fn scale(&self, f: &UPoly<R::Elem>, c: &R::Elem) -> UPoly<R::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.ring.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &UPoly<R::Elem>, g: &UPoly<R::Elem>) -> UPoly<R::Elem> {
        if f.is_zero() || g.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![self.ring.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                out[i + j] = self.ring.add(&out[i + j], &self.ring.mul(a, b));
            }
        }
        self.from_coeffs(out)
    }

    pub fn product<'b, I>(&self, factors: I) -> UPoly<R::Elem>
    where
        I: IntoIterator<Item = &'b UPoly<R::Elem>>,
        R::Elem: 'b,
    {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn eval(&self, f: &UPoly<R::Elem>, at: &R::Elem) -> R::Elem {
        f.coeffs.iter().rev().fold(self.ring.zero(), |acc, c| self.ring.add(&self.ring.mul(&acc, at), c))
    }

    /// Division with remainder by a polynomial with unit leading coefficient.
    #[allow(clippy::type_complexity)]
    pub fn divmod(&self, f: &UPoly<R::Elem>, g: &UPoly<R::Elem>) -> Result<(UPoly<R::Elem>, UPoly<R::Elem>)> {
        let lead = g.leading().ok_or(GrmError::NonMonicDivisor)?;
        let lead_inv = self.ring.inv(lead).map_err(|_| GrmError::NonMonicDivisor)?;
        let dg = g.coeffs.len() - 1;
        let mut rem = f.coeffs.clone();
        if rem.len() <= dg {
            return Ok((UPoly::zero(), f.clone()));
        }
        let mut quo = vec![self.ring.zero(); rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            let c = self.ring.mul(&rem[k], &lead_inv);
            if self.ring.is_zero(&c) {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                let idx = k - dg + j;
                rem[idx] = self.ring.sub(&rem[idx], &self.ring.mul(&c, gc));
            }
            quo[k - dg] = c;
        }
        rem.truncate(dg);
        Ok((self.from_coeffs(quo), self.from_coeffs(rem)))
    }

    /// Remainder modulo a monic (unit-leading) polynomial.
    pub fn rem(&self, f: &UPoly<R::Elem>, g: &UPoly<R::Elem>) -> Result<UPoly<R::Elem>> {
        Ok(self.divmod(f, g)?.1)
    }

    /// Exact quotient; `None` if `g` does not divide `f`.
    pub fn div_exact(&self, f: &UPoly<R::Elem>, g: &UPoly<R::Elem>) -> Result<Option<UPoly<R::Elem>>> {
        let (q, r) = self.divmod(f, g)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Coefficients reversed with respect to `deg(f)`: `x^deg f * f(1/x)`.
    pub fn reciprocal(&self, f: &UPoly<R::Elem>) -> Result<UPoly<R::Elem>> {
        if f.is_zero() {
            return Err(GrmError::ZeroPolynomial);
        }
        Ok(self.from_coeffs(f.coeffs.iter().rev().cloned().collect()))
    }

    /// Scale by the inverse of the leading coefficient.
    pub fn monicize(&self, f: &UPoly<R::Elem>) -> Result<UPoly<R::Elem>> {
        let lead = f.leading().ok_or(GrmError::NonUnitLeading)?;
        let inv = self.ring.inv(lead).map_err(|_| GrmError::NonUnitLeading)?;
        Ok(self.scale(f, &inv))
    }

    pub fn is_monic(&self, f: &UPoly<R::Elem>) -> bool {
        f.leading().is_some_and(|c| *c == self.ring.one())
    }

    /// `f^e mod g`.
    pub fn pow_mod(&self, f: &UPoly<R::Elem>, mut e: u64, g: &UPoly<R::Elem>) -> Result<UPoly<R::Elem>> {
        let mut acc = self.rem(&self.one(), g)?;
        let mut base = self.rem(f, g)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), g)?;
            }
            base = self.rem(&self.mul(&base, &base), g)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Extended Euclid over a field: `(d, a, b)` with `a f + b g = d`, `d` monic.
    ///
    /// Only meaningful when every nonzero element of the ring is a unit.
    #[allow(clippy::type_complexity)]
    pub fn ext_gcd(
        &self,
        f: &UPoly<R::Elem>,
        g: &UPoly<R::Elem>,
    ) -> Result<(UPoly<R::Elem>, UPoly<R::Elem>, UPoly<R::Elem>)> {
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut a0, mut a1) = (self.one(), UPoly::zero());
        let (mut b0, mut b1) = (UPoly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1)?;
            let a2 = self.sub(&a0, &self.mul(&q, &a1));
            let b2 = self.sub(&b0, &self.mul(&q, &b1));
            (r0, r1) = (r1, r);
            (a0, a1) = (a1, a2);
            (b0, b1) = (b1, b2);
        }
        let lead = r0.leading().ok_or(GrmError::ZeroPolynomial)?;
        let inv = self.ring.inv(lead)?;
        Ok((self.scale(&r0, &inv), self.scale(&a0, &inv), self.scale(&b0, &inv)))
    }

    pub fn display(&self, f: &UPoly<R::Elem>) -> String {
        display_poly(f.coeffs(), |c| self.ring.is_zero(c), |c| self.ring.fmt_elem(c))
    }
}

/// Renders `c_d x^d + ... + c_0`, omitting zero terms and unit coefficients.
pub(crate) fn display_poly<E>(coeffs: &[E], is_zero: impl Fn(&E) -> bool, fmt: impl Fn(&E) -> String) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let cs = fmt(c);
        let term = match (i, cs.as_str()) {
            (0, _) => cs,
            (1, "1") => "x".to_string(),
            (1, _) => format!("{cs}x"),
            (_, "1") => format!("x^{i}"),
            _ => format!("{cs}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Lifts the monic factor `factor_mod_p` of `target mod p` to the unique monic
/// factor of `target` over `Z/p^s` congruent to it, given that the cofactor is
/// coprime to it modulo `p`.
pub fn hensel_lift_factor(zps: &Zps, target: &UPoly<u64>, factor_mod_p: &UPoly<u64>) -> Result<UPoly<u64>> {
    let p = zps.prime();
    let s = zps.nilpotency();
    let fp = Zps::new(p, 1)?;
    let big = PolyRing::new(zps);
    let small = PolyRing::new(&fp);

    if !big.is_monic(target) || !small.is_monic(factor_mod_p) {
        return Err(GrmError::NonMonicDivisor);
    }
    let reduce = |f: &UPoly<u64>| small.from_coeffs(f.coeffs().iter().map(|c| c % p).collect());
    let target_bar = reduce(target);
    let cofactor_bar = small
        .div_exact(&target_bar, factor_mod_p)?
        .ok_or_else(|| GrmError::PreconditionViolated("factor does not divide target mod p".into()))?;
    let (d, _, t) = small.ext_gcd(factor_mod_p, &cofactor_bar)?;
    if d.degree() != Some(0) {
        return Err(GrmError::PreconditionViolated("factor and cofactor are not coprime mod p".into()));
    }

    let mut h = big.from_coeffs(factor_mod_p.coeffs().to_vec());
    let mut k = big.from_coeffs(cofactor_bar.coeffs().to_vec());
    for j in 1..s {
        let err = big.sub(target, &big.mul(&h, &k));
        if err.is_zero() {
            break;
        }
        let pj = p.pow(j);
        let e_bar = small.from_coeffs(
            err.coeffs()
                .iter()
                .map(|c| {
                    assert!(c % pj == 0, "Hensel step lost precision");
                    (c / pj) % p
                })
                .collect(),
        );
        // t * cofactor = 1 mod factor, so dh * cofactor = e mod factor.
        let dh = small.rem(&small.mul(&t, &e_bar), factor_mod_p)?;
        let dk = small
            .div_exact(&small.sub(&e_bar, &small.mul(&dh, &cofactor_bar)), factor_mod_p)?
            .ok_or_else(|| GrmError::PreconditionViolated("factor and cofactor are not coprime mod p".into()))?;
        let lift = |f: &UPoly<u64>| big.scale(&big.from_coeffs(f.coeffs().to_vec()), &pj);
        h = big.add(&h, &lift(&dh));
        k = big.add(&k, &lift(&dk));
    }
    debug_assert_eq!(big.mul(&h, &k), *target);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: u64, s: u32) -> Zps {
        Zps::new(p, s).unwrap()
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(18446744073709551555));
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(prime_divisors(15), vec![3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn params_validation() {
        assert!(matches!(RingParams::new(4, 2, 1), Err(GrmError::InvalidParams(_))));
        assert!(matches!(RingParams::new(2, 0, 1), Err(GrmError::InvalidParams(_))));
        assert!(matches!(RingParams::new(2, 64, 1), Err(GrmError::ParamsTooLarge(_))));
        let rp = RingParams::new(3, 2, 2).unwrap();
        assert_eq!((rp.q(), rp.characteristic()), (9, 9));
    }

    #[test]
    fn zps_inverse_examples() {
        assert_eq!(z(2, 2).inv(&3), Ok(3));
        assert_eq!(z(3, 2).inv(&1), Ok(1));
        assert_eq!(z(2, 2).inv(&2), Err(GrmError::NonUnit));
        let r = z(5, 3);
        for a in 0..125 {
            match r.inv(&a) {
                Ok(b) => assert_eq!(r.mul(&a, &b), 1),
                Err(_) => assert_eq!(a % 5, 0),
            }
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(z(2, 3).valuation(&4), Some(2));
        assert_eq!(z(2, 3).valuation(&0), None);
        assert_eq!(z(3, 2).valuation(&6), Some(1));
    }

    #[test]
    fn divmod_examples() {
        let r = z(2, 2);
        let pr = PolyRing::new(&r);
        let x3m1 = pr.x_pow_minus_one(3);
        let g = pr.from_ints(&[1, 1, 1]);
        let (q, rem) = pr.divmod(&x3m1, &g).unwrap();
        assert_eq!(q, pr.from_ints(&[3, 1]));
        assert!(rem.is_zero());

        let f = pr.from_ints(&[3, 0, 2, 1]);
        assert_eq!(pr.divmod(&f, &pr.one()).unwrap(), (f.clone(), UPoly::zero()));

        let x7m1 = pr.x_pow_minus_one(7);
        let h = pr.from_ints(&[3, 1, 2, 1]);
        assert!(pr.rem(&x7m1, &h).unwrap().is_zero());

        let not_monic = pr.from_ints(&[1, 2]);
        assert_eq!(pr.divmod(&f, &not_monic), Err(GrmError::NonMonicDivisor));
    }

    #[test]
    fn reciprocal_and_monicize() {
        let r = z(2, 2);
        let pr = PolyRing::new(&r);
        let f = pr.from_ints(&[3, 2, 3, 1]);
        let rec = pr.reciprocal(&f).unwrap();
        assert_eq!(rec, pr.from_ints(&[1, 3, 2, 3]));
        assert_eq!(pr.reciprocal(&pr.from_ints(&[-1, 1])).unwrap(), pr.from_ints(&[1, 3]));
        assert_eq!(pr.reciprocal(&rec).unwrap(), f);
        assert_eq!(pr.reciprocal(&UPoly::zero()), Err(GrmError::ZeroPolynomial));

        assert_eq!(pr.monicize(&rec).unwrap(), pr.from_ints(&[3, 1, 2, 1]));
        assert_eq!(pr.monicize(&f).unwrap(), f);
        assert_eq!(pr.monicize(&pr.from_ints(&[1, 2])), Err(GrmError::NonUnitLeading));

        let r9 = z(3, 2);
        let p9 = PolyRing::new(&r9);
        assert_eq!(p9.monicize(&p9.from_ints(&[1, 2])).unwrap(), p9.from_ints(&[5, 1]));
    }

    #[test]
    fn degree_of_zero_is_absent() {
        let r = z(2, 2);
        let pr = PolyRing::new(&r);
        assert_eq!(pr.from_ints(&[0, 0]).degree(), None);
        assert_eq!(pr.from_ints(&[2, 0]).degree(), Some(0));
        assert_eq!(pr.display(&pr.from_ints(&[3, 1, 2, 1])), "x^3 + 2x^2 + x + 3");
    }

    #[test]
    fn hensel_lift_of_binary_cubic() {
        // x^3 + x + 1 lifts inside x^7 - 1 over Z/4 to x^3 + 2x^2 + x + 3.
        let r = z(2, 2);
        let pr = PolyRing::new(&r);
        let fp = z(2, 1);
        let pf = PolyRing::new(&fp);
        let lifted = hensel_lift_factor(&r, &pr.x_pow_minus_one(7), &pf.from_ints(&[1, 1, 0, 1])).unwrap();
        assert_eq!(lifted, pr.from_ints(&[3, 1, 2, 1]));

        // Over Z/27 the lift still divides x^8 - 1.
        let r27 = z(3, 3);
        let p27 = PolyRing::new(&r27);
        let f3 = z(3, 1);
        let p3 = PolyRing::new(&f3);
        let target = p27.x_pow_minus_one(8);
        let h = hensel_lift_factor(&r27, &target, &p3.from_ints(&[2, 1, 1])).unwrap();
        assert!(p27.rem(&target, &h).unwrap().is_zero());
        assert!(h.coeffs().iter().zip([2u64, 1, 1]).all(|(a, b)| a % 3 == b));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly_strategy(modulus: u64, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
            proptest::collection::vec(0..modulus, 0..max_len)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(500))]

            #[test]
            fn zps_ring_axioms(a in 0u64..27, b in 0u64..27, c in 0u64..27) {
                let r = z(3, 3);
                prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
                prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
                prop_assert_eq!(r.add(&a, &r.neg(&a)), 0);
            }

            #[test]
            fn valuation_is_additive(a in 1u64..32, b in 1u64..32) {
                let r = z(2, 5);
                let (va, vb) = (r.valuation(&a).unwrap(), r.valuation(&b).unwrap());
                if va + vb < 5 {
                    prop_assert_eq!(r.valuation(&r.mul(&a, &b)), Some(va + vb));
                }
            }

            #[test]
            fn divmod_round_trip(f in poly_strategy(9, 12), g in poly_strategy(9, 6), lead in prop::sample::select(vec![1u64, 2, 4, 5, 7, 8])) {
                let r = z(3, 2);
                let pr = PolyRing::new(&r);
                let f = pr.from_coeffs(f);
                let mut gc = g;
                gc.push(lead);
                let g = pr.from_coeffs(gc);
                let (q, rem) = pr.divmod(&f, &g).unwrap();
                prop_assert_eq!(pr.add(&pr.mul(&q, &g), &rem), f);
                prop_assert!(rem.degree() < g.degree());
            }

            #[test]
            fn poly_ring_axioms(f in poly_strategy(4, 6), g in poly_strategy(4, 6), h in poly_strategy(4, 6)) {
                let r = z(2, 2);
                let pr = PolyRing::new(&r);
                let (f, g, h) = (pr.from_coeffs(f), pr.from_coeffs(g), pr.from_coeffs(h));
                prop_assert_eq!(pr.mul(&pr.mul(&f, &g), &h), pr.mul(&f, &pr.mul(&g, &h)));
                prop_assert_eq!(pr.mul(&f, &pr.add(&g, &h)), pr.add(&pr.mul(&f, &g), &pr.mul(&f, &h)));
                prop_assert!(pr.add(&f, &pr.neg(&f)).is_zero());
            }
        }
    }
}
