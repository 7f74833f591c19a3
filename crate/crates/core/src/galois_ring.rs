//! The tower `Z/p^s ⊂ L = GR(p^s, r) ⊂ R = GR(p^s, rm)`.
//!
//! Both extensions are represented as quotients `B[x]/(f)` of a polynomial
//! ring by a monic basic irreducible `f`, with elements stored as coefficient
//! vectors in the power basis of `x̄`. The primitive element `ξ` of `R` is the
//! Teichmüller representative of `x̄`; coordinates relative to the `ξ`-power
//! basis go through a basis-change matrix.

use std::collections::HashMap;
use std::fmt;

use crate::error::{GrmError, Result};
use crate::ring_base::{display_poly, hensel_lift_factor, prime_divisors, CoeffRing, PolyRing, RingParams, UPoly, Zps};
use crate::ring_linalg::{invert, vec_mat, Matrix};

/// Largest residue field of `R` (that is, `q^m`) a tower may have. Several
/// tables are linear in it.
pub const MAX_RESIDUE_FIELD: u64 = 1 << 16;

/// An element of `B[x]/(f)`: exactly `deg f` coefficients over `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrElem<E> {
    coeffs: Vec<E>,
}

impl<E> GrElem<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }
}

/// The Galois extension `B[x]/(f)` of a chain ring `B` by a monic basic
/// irreducible polynomial `f`.
#[derive(Clone, Debug)]
pub struct GaloisRing<B: CoeffRing> {
    base: B,
    modulus: UPoly<B::Elem>,
    degree: usize,
    size: Option<u64>,
}

/// `L = GR(p^s, r)` over `Z/p^s`.
pub type BaseRing = GaloisRing<Zps>;
/// `R = GR(p^s, rm)` over `L`.
pub type ExtRing = GaloisRing<BaseRing>;
/// The residue field `F_q = L/pL`, built like `L` with `s = 1`.
pub type ResidueField = GaloisRing<Zps>;
pub type LElem = GrElem<u64>;
pub type RElem = GrElem<LElem>;
pub type FqElem = GrElem<u64>;

impl<B: CoeffRing> GaloisRing<B> {
    pub fn new(base: B, modulus: UPoly<B::Elem>) -> Result<Self> {
        let degree = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(GrmError::InvalidParams("modulus must have degree at least 1".into())),
        };
        if modulus.leading() != Some(&base.one()) {
            return Err(GrmError::NonMonicDivisor);
        }
        let size = base.size().and_then(|b| b.checked_pow(degree as u32));
        Ok(Self { base, modulus, degree, size })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn modulus(&self) -> &UPoly<B::Elem> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Element with the given coefficients, zero-padded to the degree.
    pub fn from_coeffs(&self, mut coeffs: Vec<B::Elem>) -> GrElem<B::Elem> {
        assert!(coeffs.len() <= self.degree, "too many coefficients");
        coeffs.resize(self.degree, self.base.zero());
        GrElem { coeffs }
    }

    /// The class of `x`.
    pub fn generator(&self) -> GrElem<B::Elem> {
        let pr = PolyRing::new(&self.base);
        let rem = pr.rem(&pr.x(), &self.modulus).expect("monic modulus");
        self.from_coeffs(rem.coeffs().to_vec())
    }

    pub fn embed(&self, b: B::Elem) -> GrElem<B::Elem> {
        self.from_coeffs(vec![b])
    }

    /// `Some(b)` if the element lies in the base ring.
    pub fn base_part(&self, a: &GrElem<B::Elem>) -> Option<B::Elem> {
        a.coeffs[1..].iter().all(|c| self.base.is_zero(c)).then(|| a.coeffs[0].clone())
    }

    fn map(&self, a: &GrElem<B::Elem>, f: impl Fn(&B::Elem) -> B::Elem) -> GrElem<B::Elem> {
        GrElem { coeffs: a.coeffs.iter().map(f).collect() }
    }
}

impl<B: CoeffRing> CoeffRing for GaloisRing<B> {
    type Elem = GrElem<B::Elem>;

    fn zero(&self) -> Self::Elem {
        GrElem { coeffs: vec![self.base.zero(); self.degree] }
    }

    fn one(&self) -> Self::Elem {
        self.embed(self.base.one())
    }

    fn from_int(&self, v: i64) -> Self::Elem {
        self.embed(self.base.from_int(v))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        GrElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.add(x, y)).collect() }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.map(a, |c| self.base.neg(c))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        GrElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.sub(x, y)).collect() }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = self.degree;
        let mut prod = vec![self.base.zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] = self.base.add(&prod[i + j], &self.base.mul(x, y));
            }
        }
        let modc = self.modulus.coeffs();
        for k in (d..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[k], self.base.zero());
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, mc) in modc[..d].iter().enumerate() {
                let idx = k - d + j;
                prod[idx] = self.base.sub(&prod[idx], &self.base.mul(&c, mc));
            }
        }
        prod.truncate(d);
        GrElem { coeffs: prod }
    }

    fn prime(&self) -> u64 {
        self.base.prime()
    }

    fn nilpotency(&self) -> u32 {
        self.base.nilpotency()
    }

    fn residue_degree(&self) -> u32 {
        self.base.residue_degree() * self.degree as u32
    }

    fn valuation(&self, a: &Self::Elem) -> Option<u32> {
        a.coeffs.iter().filter_map(|c| self.base.valuation(c)).min()
    }

    /// `a^(Q-2)` inverts `a` modulo `p` (`Q` the residue field size); Newton
    /// steps `b <- b (2 - a b)` then double the precision.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if !self.is_unit(a) {
            return Err(GrmError::NonUnit);
        }
        let one = self.one();
        let two = self.from_int(2);
        let mut b = self.pow(a, self.residue_field_size() - 2);
        for _ in 0..=64 {
            let ab = self.mul(a, &b);
            if ab == one {
                return Ok(b);
            }
            b = self.mul(&b, &self.sub(&two, &ab));
        }
        unreachable!("Newton inversion did not converge")
    }

    fn div_p_pow(&self, a: &Self::Elem, t: u32) -> Self::Elem {
        self.map(a, |c| self.base.div_p_pow(c, t))
    }

    fn mul_p_pow(&self, a: &Self::Elem, t: u32) -> Self::Elem {
        self.map(a, |c| self.base.mul_p_pow(c, t))
    }

    fn rem_p_pow(&self, a: &Self::Elem, t: u32) -> Self::Elem {
        self.map(a, |c| self.base.rem_p_pow(c, t))
    }

    fn size(&self) -> Option<u64> {
        self.size
    }

    fn encode(&self, a: &Self::Elem) -> u64 {
        let b = self.base.size().expect("base ring enumerable");
        a.coeffs.iter().rev().fold(0, |acc, c| acc * b + self.base.encode(c))
    }

    fn decode(&self, mut code: u64) -> Self::Elem {
        let b = self.base.size().expect("base ring enumerable");
        let coeffs = (0..self.degree)
            .map(|_| {
                let c = self.base.decode(code % b);
                code /= b;
                c
            })
            .collect();
        GrElem { coeffs }
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.coeffs.iter().map(|c| self.base.fmt_elem(c)).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Lexicographically smallest primitive polynomial of the given degree over a
/// finite field (a chain ring with `s = 1`).
///
/// Candidates are ordered by the encodings of their coefficients with the
/// coefficient of `x^(d-1)` most significant.
pub fn smallest_primitive_poly<F: CoeffRing>(field: &F, degree: usize) -> Result<UPoly<F::Elem>> {
    assert_eq!(field.nilpotency(), 1, "primitive polynomial search needs a field");
    let q = field.size().ok_or_else(|| GrmError::ParamsTooLarge("field too large".into()))?;
    let order = q
        .checked_pow(degree as u32)
        .filter(|&c| c <= MAX_RESIDUE_FIELD)
        .ok_or_else(|| GrmError::ParamsTooLarge(format!("{q}^{degree} exceeds {MAX_RESIDUE_FIELD}")))?
        - 1;
    let cofactors: Vec<u64> = prime_divisors(order).into_iter().map(|l| order / l).collect();
    let pr = PolyRing::new(field);
    let x = pr.x();
    let one = pr.one();
    for idx in 0..=order {
        let mut code = idx;
        let mut coeffs: Vec<F::Elem> = (0..degree)
            .map(|_| {
                let c = field.decode(code % q);
                code /= q;
                c
            })
            .collect();
        if field.is_zero(&coeffs[0]) {
            continue;
        }
        coeffs.push(field.one());
        let g = pr.from_coeffs(coeffs);
        if pr.pow_mod(&x, order, &g)? != one {
            continue;
        }
        if cofactors.iter().all(|&e| pr.pow_mod(&x, e, &g).map(|v| v != one).unwrap_or(false)) {
            return Ok(g);
        }
    }
    Err(GrmError::NoPrimitivePolynomial(degree))
}

/// Index into the Teichmüller set `{0, 1, ξ, ..., ξ^(n-1)}`; `Infinity`
/// stands for `0 = ξ^∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TeichIndex {
    Infinity,
    Power(usize),
}

impl fmt::Display for TeichIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TeichIndex::Infinity => f.write_str("inf"),
            TeichIndex::Power(i) => write!(f, "{i}"),
        }
    }
}

/// The p-adic digits `ξ_0, ..., ξ_(s-1)` of an element of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PAdicDigits {
    pub digits: Vec<TeichIndex>,
}

/// The ambient algebra: `Z/p^s`, `L`, `R`, the primitive element `ξ` of `R`
/// and the tables derived from it.
#[derive(Clone, Debug)]
pub struct GaloisTower {
    params: RingParams,
    m: u32,
    q: u64,
    n: usize,
    zps: Zps,
    base: BaseRing,
    residue: ResidueField,
    ext: ExtRing,
    h_r: UPoly<u64>,
    g0: UPoly<LElem>,
    g0_bar: UPoly<FqElem>,
    xi_powers: Vec<RElem>,
    teich_log: HashMap<RElem, usize>,
    from_xi: Matrix<LElem>,
    to_xi: Matrix<LElem>,
    coords: Vec<Vec<LElem>>,
}

impl GaloisTower {
    /// Deterministic construction:
    ///
    /// 1. `h_r`: smallest primitive polynomial of degree `r` over `F_p`,
    ///    Hensel-lifted inside `x^(p^r - 1) - 1` (`x - 1` when `r = 1`);
    /// 2. `g0`: smallest primitive polynomial of degree `m` over `F_q` with
    ///    every coefficient replaced by its Teichmüller lift in `L`;
    /// 3. `ξ = x̄^(q^(m(s-1)))` in `L[x]/(g0)`, the Teichmüller
    ///    representative of `x̄`, whose order is checked to be `q^m - 1`.
    pub fn build(params: RingParams, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(GrmError::InvalidParams("m must be at least 1".into()));
        }
        let (p, s, r) = (params.p, params.s, params.r);
        let q = params.q();
        let qm = q
            .checked_pow(m)
            .filter(|&v| v <= MAX_RESIDUE_FIELD)
            .ok_or_else(|| GrmError::ParamsTooLarge(format!("q^m = {q}^{m} exceeds {MAX_RESIDUE_FIELD}")))?;
        let n = (qm - 1) as usize;

        let zps = Zps::new(p, s)?;
        let fp = Zps::new(p, 1)?;
        let (h_r, h_bar) = if r == 1 {
            (PolyRing::new(&zps).from_ints(&[-1, 1]), PolyRing::new(&fp).from_ints(&[-1, 1]))
        } else {
            let h_bar = smallest_primitive_poly(&fp, r as usize)?;
            let target = PolyRing::new(&zps).x_pow_minus_one((q - 1) as usize);
            (hensel_lift_factor(&zps, &target, &h_bar)?, h_bar)
        };
        let base = BaseRing::new(zps.clone(), h_r.clone())?;
        let residue = ResidueField::new(fp, h_bar)?;

        let g0_bar = smallest_primitive_poly(&residue, m as usize)?;
        let lift = |c: &FqElem| teichmuller_in(&base, q, &base.from_coeffs(c.coeffs().to_vec()));
        let g0 = PolyRing::new(&base).from_coeffs(g0_bar.coeffs().iter().map(lift).collect());
        let ext = ExtRing::new(base.clone(), g0.clone())?;
        if ext.size().is_none() {
            return Err(GrmError::ParamsTooLarge(format!("|R| = {p}^({s}*{r}*{m}) exceeds 64 bits")));
        }

        let xi = teichmuller_in(&ext, qm, &ext.generator());
        let one = ext.one();
        if ext.pow(&xi, n as u64) != one || prime_divisors(n as u64).iter().any(|l| ext.pow(&xi, n as u64 / l) == one) {
            return Err(GrmError::NoPrimitivePolynomial(m as usize));
        }

        let mut xi_powers = Vec::with_capacity(n);
        let mut acc = one;
        for _ in 0..n {
            let next = ext.mul(&acc, &xi);
            xi_powers.push(acc);
            acc = next;
        }
        let mut teich_log = HashMap::with_capacity(n);
        for (i, t) in xi_powers.iter().enumerate() {
            if teich_log.insert(ext.rem_p_pow(t, 1), i).is_some() {
                return Err(GrmError::NoPrimitivePolynomial(m as usize));
            }
        }

        let from_xi =
            Matrix::from_rows((0..m as usize).map(|j| xi_powers[j % n].coeffs().to_vec()).collect(), m as usize)?;
        let to_xi = invert(&base, &from_xi)?;
        let coords = xi_powers.iter().map(|t| vec_mat(&base, t.coeffs(), &to_xi)).collect::<Result<_>>()?;

        Ok(Self {
            params,
            m,
            q,
            n,
            zps,
            base,
            residue,
            ext,
            h_r,
            g0,
            g0_bar,
            xi_powers,
            teich_log,
            from_xi,
            to_xi,
            coords,
        })
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `n = q^m - 1`, the order of `ξ`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Code length `q^m`.
    pub fn length(&self) -> usize {
        self.n + 1
    }

    /// Maximal GRM order `m(q - 1)`.
    pub fn max_order(&self) -> u32 {
        self.m * (self.q as u32 - 1)
    }

    /// Whether `rm >= s`, the hypothesis of the trace and duality results.
    pub fn rm_at_least_s(&self) -> bool {
        self.params.r * self.m >= self.params.s
    }

    pub fn zps(&self) -> &Zps {
        &self.zps
    }

    /// `L = GR(p^s, r)`.
    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    /// `R = GR(p^s, rm)`.
    pub fn ext(&self) -> &ExtRing {
        &self.ext
    }

    /// `F_q = L / pL`.
    pub fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    pub fn h_r(&self) -> &UPoly<u64> {
        &self.h_r
    }

    /// Working modulus of `R` over `L`.
    pub fn g0(&self) -> &UPoly<LElem> {
        &self.g0
    }

    /// `g0 mod p`, a primitive polynomial over `F_q`.
    pub fn g0_bar(&self) -> &UPoly<FqElem> {
        &self.g0_bar
    }

    pub fn xi(&self) -> RElem {
        self.xi_pow(1)
    }

    /// `ξ^i` with the exponent taken modulo `n`.
    pub fn xi_pow(&self, i: usize) -> RElem {
        self.xi_powers[i % self.n].clone()
    }

    pub fn teich_element(&self, idx: TeichIndex) -> RElem {
        match idx {
            TeichIndex::Infinity => self.ext.zero(),
            TeichIndex::Power(i) => self.xi_pow(i),
        }
    }

    /// Positions `∞, 0, 1, ..., n-1` of a GRM codeword.
    pub fn positions(&self) -> Vec<TeichIndex> {
        std::iter::once(TeichIndex::Infinity).chain((0..self.n).map(TeichIndex::Power)).collect()
    }

    /// Index of the Teichmüller representative of `c`, via the residue log table.
    pub fn teich_index(&self, c: &RElem) -> TeichIndex {
        let res = self.ext.rem_p_pow(c, 1);
        if self.ext.is_zero(&res) {
            TeichIndex::Infinity
        } else {
            TeichIndex::Power(self.teich_log[&res])
        }
    }

    /// The unique `t` in the Teichmüller set with `t ≡ c (mod p)`.
    pub fn teichmuller_lift(&self, c: &RElem) -> RElem {
        self.teich_element(self.teich_index(c))
    }

    pub fn padic_digits(&self, c: &RElem) -> PAdicDigits {
        let s = self.params.s;
        let mut rest = c.clone();
        let mut digits = Vec::with_capacity(s as usize);
        for i in 0..s {
            let d = self.teich_index(&rest);
            if i + 1 < s {
                rest = self.ext.div_p_pow(&self.ext.sub(&rest, &self.teich_element(d)), 1);
            }
            digits.push(d);
        }
        PAdicDigits { digits }
    }

    pub fn from_padic(&self, digits: &PAdicDigits) -> RElem {
        digits.digits.iter().enumerate().fold(self.ext.zero(), |acc, (i, &d)| {
            self.ext.add(&acc, &self.ext.mul_p_pow(&self.teich_element(d), i as u32))
        })
    }

    /// `c^f = Σ p^i ξ_i^q`, applied to every p-adic digit.
    pub fn frobenius(&self, c: &RElem) -> RElem {
        self.frobenius_pow(c, 1)
    }

    pub fn frobenius_pow(&self, c: &RElem, k: u32) -> RElem {
        let k = k % self.m;
        if k == 0 {
            return c.clone();
        }
        let qk = self.q.pow(k) as usize % self.n.max(1);
        let digits = self.padic_digits(c);
        let twisted = PAdicDigits {
            digits: digits
                .digits
                .iter()
                .map(|d| match d {
                    TeichIndex::Infinity => TeichIndex::Infinity,
                    TeichIndex::Power(i) => TeichIndex::Power(i * qk % self.n),
                })
                .collect(),
        };
        self.from_padic(&twisted)
    }

    /// Relative trace `T(c) = c + c^f + ... + c^(f^(m-1))`, an element of `L`.
    pub fn trace(&self, c: &RElem) -> Result<LElem> {
        let sum = (0..self.m).fold(self.ext.zero(), |acc, k| self.ext.add(&acc, &self.frobenius_pow(c, k)));
        self.ext.base_part(&sum).ok_or(GrmError::CoefficientNotInBase)
    }

    /// `b_i`, the coordinates of `ξ^i` in the basis `1, ξ, ..., ξ^(m-1)`.
    pub fn coord_vector(&self, idx: TeichIndex) -> Vec<LElem> {
        match idx {
            TeichIndex::Infinity => vec![self.base.zero(); self.m as usize],
            TeichIndex::Power(i) => self.coords[i % self.n].clone(),
        }
    }

    pub fn to_xi_coords(&self, c: &RElem) -> Vec<LElem> {
        vec_mat(&self.base, c.coeffs(), &self.to_xi).expect("dimensions agree")
    }

    pub fn from_xi_coords(&self, b: &[LElem]) -> RElem {
        self.ext.from_coeffs(vec_mat(&self.base, b, &self.from_xi).expect("dimensions agree"))
    }

    pub fn embed(&self, a: &LElem) -> RElem {
        self.ext.embed(a.clone())
    }

    /// Product of `x - e` over the distinct Frobenius conjugates `e` of `c`.
    pub fn minimal_polynomial(&self, c: &RElem) -> Result<UPoly<LElem>> {
        let mut orbit = vec![c.clone()];
        loop {
            let next = self.frobenius(orbit.last().expect("nonempty"));
            if next == *c {
                break;
            }
            orbit.push(next);
        }
        let pr = PolyRing::new(&self.ext);
        let factors: Vec<_> = orbit.iter().map(|e| pr.linear(e)).collect();
        self.descend_poly(&pr.product(&factors))
    }

    /// Views a polynomial over `R` with coefficients in `L` as one over `L`.
    pub fn descend_poly(&self, f: &UPoly<RElem>) -> Result<UPoly<LElem>> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| self.ext.base_part(c).ok_or(GrmError::CoefficientNotInBase))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyRing::new(&self.base).from_coeffs(coeffs))
    }

    pub fn lift_poly(&self, f: &UPoly<LElem>) -> UPoly<RElem> {
        PolyRing::new(&self.ext).from_coeffs(f.coeffs().iter().map(|c| self.embed(c)).collect())
    }

    /// Reduction `L -> F_q` modulo `p`.
    pub fn project(&self, a: &LElem) -> FqElem {
        self.residue.from_coeffs(a.coeffs().iter().map(|c| c % self.params.p).collect())
    }

    /// The canonical lift `F_q -> L` (coordinates taken as integers in `[0, p)`).
    pub fn lift_residue(&self, a: &FqElem) -> LElem {
        self.base.from_coeffs(a.coeffs().to_vec())
    }

    /// Short form of an element of `L`: a bare integer when it lies in `Z/p^s`.
    pub fn fmt_base_short(&self, a: &LElem) -> String {
        match self.base.base_part(a) {
            Some(v) => v.to_string(),
            None => self.base.fmt_elem(a),
        }
    }

    pub fn fmt_poly(&self, f: &UPoly<LElem>) -> String {
        display_poly(f.coeffs(), |c| self.base.is_zero(c), |c| self.fmt_base_short(c))
    }
}

/// `c^(Q^(s-1))`, the Teichmüller representative of `c` in a ring whose
/// residue field has `Q` elements.
fn teichmuller_in<B: CoeffRing>(ring: &GaloisRing<B>, residue_size: u64, c: &GrElem<B::Elem>) -> GrElem<B::Elem> {
    (1..ring.nilpotency()).fold(c.clone(), |acc, _| ring.pow(&acc, residue_size))
}

/// Builds the tower for `(p, s, r)` and extension degree `m`.
pub fn build_tower(params: RingParams, m: u32) -> Result<GaloisTower> {
    GaloisTower::build(params, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tower(p: u64, s: u32, r: u32, m: u32) -> GaloisTower {
        build_tower(RingParams::new(p, s, r).unwrap(), m).unwrap()
    }

    fn l(t: &GaloisTower, v: &[u64]) -> LElem {
        t.base().from_coeffs(v.to_vec())
    }

    fn random_r(t: &GaloisTower, rng: &mut ChaCha8Rng) -> RElem {
        t.ext().decode(rng.gen_range(0..t.ext().size().unwrap()))
    }

    /// Every `(p, s, r, m)` used in the property checks below.
    fn test_towers() -> Vec<GaloisTower> {
        vec![
            tower(2, 2, 1, 2),
            tower(2, 2, 1, 3),
            tower(3, 2, 1, 2),
            tower(2, 2, 2, 2),
            tower(2, 3, 1, 2),
            tower(2, 1, 2, 2),
            tower(5, 2, 1, 1),
        ]
    }

    #[test]
    fn build_examples() {
        let t = tower(2, 2, 1, 2);
        let pl = PolyRing::new(t.base());
        assert_eq!(t.g0(), &pl.from_coeffs(vec![l(&t, &[1]), l(&t, &[1]), l(&t, &[1])]));
        assert_eq!(t.xi(), t.ext().generator());
        assert_eq!(t.n(), 3);

        let t = tower(2, 2, 1, 1);
        assert_eq!(t.n(), 1);
        assert_eq!(t.xi(), t.ext().one());

        let t = tower(2, 2, 1, 3);
        assert_eq!(t.n(), 7);
        let h = t.minimal_polynomial(&t.xi()).unwrap();
        assert_eq!(t.fmt_poly(&h), "x^3 + 2x^2 + x + 3");

        assert!(matches!(build_tower(RingParams::new(2, 2, 1).unwrap(), 17), Err(GrmError::ParamsTooLarge(_))));
        assert!(matches!(build_tower(RingParams::new(2, 2, 1).unwrap(), 0), Err(GrmError::InvalidParams(_))));
    }

    #[test]
    fn construction_is_deterministic() {
        let a = tower(2, 2, 2, 2);
        let b = tower(2, 2, 2, 2);
        assert_eq!(a.g0(), b.g0());
        assert_eq!(a.xi(), b.xi());
        assert_eq!(a.h_r(), b.h_r());
        assert_eq!(a.coords, b.coords);
    }

    #[test]
    fn tower_invariants() {
        for t in test_towers() {
            let zp = PolyRing::new(t.zps());
            let q = t.q() as usize;
            assert!(zp.rem(&zp.x_pow_minus_one(q - 1), t.h_r()).unwrap().is_zero());
            let ext = t.ext();
            let xi = t.xi();
            assert_eq!(ext.pow(&xi, t.q().pow(t.m())), xi);
            assert_eq!(ext.pow(&xi, t.n() as u64), ext.one());
            for l in prime_divisors(t.n() as u64) {
                assert_ne!(ext.pow(&xi, t.n() as u64 / l), ext.one());
            }
            let prod = crate::ring_linalg::mat_mul(t.base(), &t.from_xi, &t.to_xi).unwrap();
            assert_eq!(prod, Matrix::identity(t.base(), t.m() as usize));
        }
    }

    #[test]
    fn h_r_matches_teichmuller_minimal_polynomial() {
        // Hensel lift of h_r against the product of conjugates of the
        // Teichmüller lift of x̄ in Z/p^s[x]/(h_r).
        for t in [tower(2, 2, 2, 1), tower(2, 3, 3, 1), tower(3, 2, 2, 1)] {
            let base = t.base();
            let theta = teichmuller_in(base, t.q(), &base.generator());
            assert_eq!(theta, base.generator(), "x̄ is already Teichmüller");
            let pr = PolyRing::new(base);
            let factors: Vec<_> =
                (0..t.params().r).map(|i| pr.linear(&base.pow(&theta, t.params().p.pow(i)))).collect();
            let prod = pr.product(&factors);
            let expected: Vec<LElem> = t.h_r().coeffs().iter().map(|&c| base.embed(c)).collect();
            assert_eq!(prod.coeffs(), expected.as_slice());
        }
    }

    #[test]
    fn teichmuller_examples() {
        let t = tower(2, 2, 1, 2);
        let ext = t.ext();
        assert_eq!(t.teichmuller_lift(&ext.zero()), ext.zero());
        assert_eq!(t.teichmuller_lift(&ext.one()), ext.one());
        let c = ext.add(&ext.generator(), &ext.from_int(2));
        assert_eq!(t.teichmuller_lift(&c), t.xi());
        // Power route: c^(q^(m(s-1))).
        assert_eq!(teichmuller_in(ext, 4, &c), t.xi());
    }

    #[test]
    fn teichmuller_lift_is_idempotent_and_agrees_with_power_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for t in test_towers() {
            let ext = t.ext();
            let qm = t.q().pow(t.m());
            for i in 0..t.n() {
                assert_eq!(t.teichmuller_lift(&t.xi_pow(i)), t.xi_pow(i));
            }
            for _ in 0..50 {
                let c = random_r(&t, &mut rng);
                let lifted = t.teichmuller_lift(&c);
                assert_eq!(lifted, teichmuller_in(ext, qm, &c));
                assert_eq!(ext.pow(&lifted, qm), lifted);
                assert_eq!(ext.rem_p_pow(&lifted, 1), ext.rem_p_pow(&c, 1));
            }
        }
    }

    #[test]
    fn padic_examples() {
        let t = tower(2, 2, 1, 2);
        let ext = t.ext();
        let inf = TeichIndex::Infinity;
        assert_eq!(t.padic_digits(&ext.zero()).digits, vec![inf, inf]);
        assert_eq!(t.padic_digits(&ext.from_int(2)).digits, vec![inf, TeichIndex::Power(0)]);
        let c = ext.add(&ext.one(), &ext.mul(&ext.from_int(2), &t.xi()));
        assert_eq!(t.padic_digits(&c).digits, vec![TeichIndex::Power(0), TeichIndex::Power(1)]);
    }

    #[test]
    fn padic_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for t in test_towers() {
            let size = t.ext().size().unwrap();
            if size <= 1 << 16 {
                for c in t.ext().elements() {
                    assert_eq!(t.from_padic(&t.padic_digits(&c)), c);
                }
            } else {
                for _ in 0..500 {
                    let c = random_r(&t, &mut rng);
                    assert_eq!(t.from_padic(&t.padic_digits(&c)), c);
                }
            }
        }
    }

    /// Independent route: `f` fixes `L` and sends `ξ` to `ξ^q`, so it acts on
    /// `ξ`-coordinates by `Σ b_j ξ^j -> Σ b_j ξ^(jq)`.
    fn frobenius_via_basis(t: &GaloisTower, c: &RElem) -> RElem {
        let ext = t.ext();
        t.to_xi_coords(c)
            .iter()
            .enumerate()
            .fold(ext.zero(), |acc, (j, b)| ext.add(&acc, &ext.mul(&t.embed(b), &t.xi_pow(j * t.q() as usize))))
    }

    #[test]
    fn frobenius_examples() {
        let t = tower(2, 2, 1, 2);
        assert_eq!(t.frobenius(&t.xi()), t.xi_pow(2));
        for a in t.base().elements() {
            assert_eq!(t.frobenius(&t.embed(&a)), t.embed(&a));
        }
    }

    #[test]
    fn frobenius_is_an_automorphism_of_order_m() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in test_towers() {
            let ext = t.ext();
            for _ in 0..500 {
                let (a, b) = (random_r(&t, &mut rng), random_r(&t, &mut rng));
                assert_eq!(t.frobenius(&ext.add(&a, &b)), ext.add(&t.frobenius(&a), &t.frobenius(&b)));
                assert_eq!(t.frobenius(&ext.mul(&a, &b)), ext.mul(&t.frobenius(&a), &t.frobenius(&b)));
                assert_eq!(t.frobenius(&a), frobenius_via_basis(&t, &a));
            }
            for _ in 0..100 {
                let a = random_r(&t, &mut rng);
                let mut x = a.clone();
                for _ in 0..t.m() {
                    x = t.frobenius(&x);
                }
                assert_eq!(x, a);
            }
        }
    }

    #[test]
    fn frobenius_fixed_set_is_l() {
        for t in test_towers() {
            let ext = t.ext();
            if ext.size().unwrap() > 1 << 16 {
                continue;
            }
            let fixed = ext.elements().into_iter().filter(|c| t.frobenius(c) == *c).count() as u64;
            assert_eq!(fixed, t.base().size().unwrap());
        }
    }

    #[test]
    fn trace_examples() {
        let t = tower(2, 2, 1, 2);
        assert_eq!(t.trace(&t.ext().zero()).unwrap(), l(&t, &[0]));
        assert_eq!(t.trace(&t.xi()).unwrap(), l(&t, &[3]));
        assert_eq!(t.trace(&t.ext().one()).unwrap(), l(&t, &[2]));
    }

    #[test]
    fn trace_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for t in test_towers() {
            let (base, ext) = (t.base(), t.ext());
            for _ in 0..200 {
                let (a, b) = (random_r(&t, &mut rng), random_r(&t, &mut rng));
                let lam = base.decode(rng.gen_range(0..base.size().unwrap()));
                assert_eq!(t.trace(&t.frobenius(&a)).unwrap(), t.trace(&a).unwrap());
                let lhs = t.trace(&ext.add(&a, &ext.mul(&t.embed(&lam), &b))).unwrap();
                let rhs = base.add(&t.trace(&a).unwrap(), &base.mul(&lam, &t.trace(&b).unwrap()));
                assert_eq!(lhs, rhs);
            }
            if ext.size().unwrap() <= 1 << 12 {
                let image: std::collections::HashSet<_> = ext.elements().iter().map(|c| t.trace(c).unwrap()).collect();
                assert_eq!(image.len() as u64, base.size().unwrap());
            }
        }
    }

    #[test]
    fn powers_of_xi_sum_to_zero() {
        for t in test_towers() {
            if t.n() > 1 {
                let sum = (0..t.n()).fold(t.ext().zero(), |acc, i| t.ext().add(&acc, &t.xi_pow(i)));
                assert_eq!(sum, t.ext().zero());
            }
        }
    }

    #[test]
    fn coord_examples_and_reconstruction() {
        let t = tower(2, 2, 1, 2);
        assert_eq!(t.coord_vector(TeichIndex::Infinity), vec![l(&t, &[0]); 2]);
        assert_eq!(t.coord_vector(TeichIndex::Power(0)), vec![l(&t, &[1]), l(&t, &[0])]);
        assert_eq!(t.coord_vector(TeichIndex::Power(2)), vec![l(&t, &[3]), l(&t, &[3])]);
        for t in test_towers() {
            for i in 0..t.n() {
                let b = t.coord_vector(TeichIndex::Power(i));
                let rebuilt = b
                    .iter()
                    .enumerate()
                    .fold(t.ext().zero(), |acc, (j, c)| t.ext().add(&acc, &t.ext().mul(&t.embed(c), &t.xi_pow(j))));
                assert_eq!(rebuilt, t.xi_pow(i));
            }
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        let t = tower(2, 2, 1, 2);
        assert_eq!(t.fmt_poly(&t.minimal_polynomial(&t.xi()).unwrap()), "x^2 + x + 1");
        let a = t.embed(&l(&t, &[3]));
        let pl = PolyRing::new(t.base());
        assert_eq!(t.minimal_polynomial(&a).unwrap(), pl.linear(&l(&t, &[3])));

        let t = tower(2, 2, 1, 3);
        let h = t.minimal_polynomial(&t.xi()).unwrap();
        let pl = PolyRing::new(t.base());
        assert!(pl.rem(&pl.x_pow_minus_one(7), &h).unwrap().is_zero());
    }

    #[test]
    fn minimal_polynomial_of_xi_has_xi_as_root() {
        for t in test_towers() {
            let h = t.minimal_polynomial(&t.xi()).unwrap();
            assert_eq!(h.degree(), Some(t.m() as usize));
            let pr = PolyRing::new(t.ext());
            assert_eq!(pr.eval(&t.lift_poly(&h), &t.xi()), t.ext().zero());
        }
    }

    #[test]
    fn element_formatting() {
        let t = tower(2, 2, 2, 2);
        let a = l(&t, &[1, 2]);
        assert_eq!(t.base().fmt_elem(&a), "[1,2]");
        assert_eq!(t.fmt_base_short(&a), "[1,2]");
        assert_eq!(t.fmt_base_short(&l(&t, &[3, 0])), "3");
    }

    #[test]
    fn inverse_in_extension() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for t in test_towers() {
            let ext = t.ext();
            for _ in 0..100 {
                let a = random_r(&t, &mut rng);
                match ext.inv(&a) {
                    Ok(b) => assert_eq!(ext.mul(&a, &b), ext.one()),
                    Err(e) => {
                        assert_eq!(e, GrmError::NonUnit);
                        assert!(!ext.is_unit(&a));
                    }
                }
            }
        }
    }
}
