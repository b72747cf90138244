//! Exact arithmetic in GF(p^α).
//!
//! Elements are polynomials over GF(p) of degree < α, stored low-degree-first.
//! The canonical enumeration order reads the coefficients as base-p digits
//! (constant term least significant), so element `k` of GF(p) is the residue `k`
//! and the element `x` of an extension field has index `p`.

use std::fmt;

use thiserror::Error;

/// Largest field order accepted by [`FieldSpec::new`].
pub const MAX_ORDER: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {p}^{alpha} exceeds 2^31")]
    Overflow { p: u64, alpha: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {t} in GF({q}): {t} does not divide {q} - 1")]
    OrderUnavailable { q: u64, t: u64 },
}

/// Arithmetic context for GF(q), q = p^alpha.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    alpha: u32,
    /// Monic irreducible modulus, `alpha + 1` coefficients low-degree-first.
    /// Empty for prime fields.
    modulus: Vec<u64>,
    q: u64,
}

/// An element of GF(p^α) in polynomial representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (deg, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (d, 1) => format!("x^{d}"),
                (d, c) => format!("{c}x^{d}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, alpha)` with `q = p^alpha`, `p` prime.
pub fn prime_power_decomposition(q: u64) -> Result<(u64, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut alpha = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        alpha += 1;
    }
    if rest != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    Ok((p, alpha))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Polynomials over GF(p) as coefficient vectors, low-degree-first, possibly
// with trailing zeros.

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // p prime, a != 0: a^(p-2)
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo `b` (b nonzero after trimming).
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] * lead_inv % p;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * bc % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    let mut quot = vec![0u64; r.len().saturating_sub(db).max(1)];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] * lead_inv % p;
        let shift = dr - db;
        quot[shift] = factor;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * bc % p) % p;
        }
        poly_trim(&mut r);
    }
    (quot, r)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect()
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = std::mem::replace(&mut y, r);
    }
    x
}

/// `base^exp mod modulus` over GF(p).
fn poly_powmod(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), modulus, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// Rabin's test: a monic `f` of degree `n` is irreducible iff
/// `x^(p^n) ≡ x (mod f)` and `gcd(x^(p^(n/r)) − x, f) = 1` for every prime `r | n`.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    let x = vec![0u64, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![poly_rem(&x, poly, p)];
    for k in 1..=deg {
        let next = poly_powmod(&frob[k - 1], p, poly, p);
        frob.push(next);
    }
    let mut last = poly_sub(&frob[deg], &x, p);
    poly_trim(&mut last);
    if !last.is_empty() {
        return false;
    }
    prime_factors(deg as u64).into_iter().all(|r| {
        let diff = poly_sub(&frob[deg / r as usize], &x, p);
        poly_gcd(poly, &diff, p).len() == 1
    })
}

/// Base-p digits of `value`, least significant first, padded to `len`.
fn digits(mut value: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in out.iter_mut() {
        *slot = value % p;
        value /= p;
    }
    out
}

impl FieldSpec {
    /// Builds GF(p^alpha) with the lexicographically smallest monic irreducible
    /// modulus (coefficients compared constant term first).
    pub fn new(p: u64, alpha: u32) -> Result<Self, FieldError> {
        if alpha == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = p.checked_pow(alpha).filter(|&q| q <= MAX_ORDER).ok_or(FieldError::Overflow { p, alpha })?;
        if alpha == 1 {
            return Ok(Self { p, alpha, modulus: Vec::new(), q });
        }
        let a = alpha as usize;
        // Lexicographic order with c_0 most significant: enumerate the tuple
        // (c_0, ..., c_{a-1}) as a base-p number whose leading digit is c_0.
        // c_0 = 0 means x divides the candidate, so start at c_0 = 1.
        let modulus = (q / p..q)
            .map(|m| {
                let mut c = digits(m, p, a);
                c.reverse();
                c.push(1);
                c
            })
            .find(|c| is_irreducible(c, p))
            .expect("an irreducible polynomial of every degree exists");
        Ok(Self { p, alpha, modulus, q })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        let (p, alpha) = prime_power_decomposition(q)?;
        Self::new(p, alpha)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.alpha as usize] }
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element with canonical index `index` (base-p digits of the index).
    pub fn element(&self, index: u64) -> FieldElement {
        assert!(index < self.q, "element index {index} out of range for GF({})", self.q);
        FieldElement { coeffs: digits(index, self.p, self.alpha as usize) }
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| self.element(i))
    }

    /// Builds an element from coefficients, reducing each modulo p.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % self.p).collect();
        if self.alpha == 1 {
            c.truncate(1);
        }
        if c.len() > self.alpha as usize {
            let mut r = poly_rem(&c, &self.modulus, self.p);
            r.resize(self.alpha as usize, 0);
            return FieldElement { coeffs: r };
        }
        c.resize(self.alpha as usize, 0);
        FieldElement { coeffs: c }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + y) % p).collect() }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement { coeffs: a.coeffs.iter().map(|&x| (p - x) % p).collect() }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| (x + p - y) % p).collect() }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.alpha == 1 {
            return FieldElement { coeffs: vec![a.coeffs[0] * b.coeffs[0] % self.p] };
        }
        let prod = poly_mul(&a.coeffs, &b.coeffs, self.p);
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.alpha as usize, 0);
        FieldElement { coeffs: r }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.alpha == 1 {
            return Ok(FieldElement { coeffs: vec![ext_euclid_inverse(a.coeffs[0], self.p)] });
        }
        let p = self.p;
        // Invariant: s_i * a ≡ r_i (mod modulus).
        let (mut r0, mut r1) = (self.modulus.clone(), a.coeffs.clone());
        poly_trim(&mut r1);
        let (mut s0, mut s1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1, p);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible.
        poly_trim(&mut r0);
        debug_assert_eq!(r0.len(), 1);
        let scale = inv_mod_p(r0[0], p);
        let scaled: Vec<u64> = s0.iter().map(|&c| c * scale % p).collect();
        Ok(self.from_coeffs(&scaled))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
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

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u64, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let mut order = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while order.is_multiple_of(r) && self.pow(a, order / r) == self.one() {
                order /= r;
            }
        }
        Ok(order)
    }

    /// First nonzero element (canonical order) of multiplicative order exactly `t`.
    pub fn element_of_order(&self, t: u64) -> Result<FieldElement, FieldError> {
        if t == 0 || !(self.q - 1).is_multiple_of(t) {
            return Err(FieldError::OrderUnavailable { q: self.q, t });
        }
        let one = self.one();
        let factors = prime_factors(t);
        (1..self.q)
            .map(|i| self.element(i))
            .find(|a| self.pow(a, t) == one && factors.iter().all(|&r| self.pow(a, t / r) != one))
            .ok_or(FieldError::OrderUnavailable { q: self.q, t })
    }

    /// The cyclic subgroup `{1, h, ..., h^(t-1)}` of order `t`, with its generator.
    pub fn subgroup_of_order(&self, t: u64) -> Result<(FieldElement, Vec<FieldElement>), FieldError> {
        let h = self.element_of_order(t)?;
        let mut elems = Vec::with_capacity(t as usize);
        let mut cur = self.one();
        for _ in 0..t {
            elems.push(cur.clone());
            cur = self.mul(&cur, &h);
        }
        Ok((h, elems))
    }
}

fn ext_euclid_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    old_s.rem_euclid(p as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_no_modulus() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert!(f.modulus().is_empty());
    }

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        // Monic quadratics over GF(2), low-degree-first: x^2, x^2+x, x^2+1, x^2+x+1.
        // Only the last has no root in {0, 1}.
        let brute: Vec<Vec<u64>> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .filter(|c| (0..2u64).all(|x| (c[0] + c[1] * x + x * x) % 2 != 0))
            .map(|c| vec![c[0], c[1], 1])
            .collect();
        assert_eq!(brute, vec![vec![1, 1, 1]]);
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn composite_and_overflow_rejected() {
        assert_eq!(FieldSpec::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldSpec::new(2, 32), Err(FieldError::Overflow { p: 2, alpha: 32 }));
        assert!(FieldSpec::new(2, 31).is_ok());
        assert_eq!(FieldSpec::new(3, 0), Err(FieldError::ZeroDegree));
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power_decomposition(49), Ok((7, 2)));
        assert_eq!(prime_power_decomposition(13), Ok((13, 1)));
        assert_eq!(prime_power_decomposition(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(prime_power_decomposition(1), Err(FieldError::NotPrimePower(1)));
    }

    #[test]
    fn small_arithmetic_examples() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.inv(&f5.element(2)).unwrap(), f5.element(3));
        assert_eq!(f5.inv(&f5.zero()), Err(FieldError::DivisionByZero));

        let f4 = FieldSpec::new(2, 2).unwrap();
        let x = f4.element(2);
        assert_eq!(f4.mul(&x, &x), f4.from_coeffs(&[1, 1]));

        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f7.pow(&f7.element(3), 6), f7.one());
    }

    #[test]
    fn element_of_order_in_gf5() {
        let f = FieldSpec::new(5, 1).unwrap();
        let orders: Vec<u64> = (1..5).map(|i| f.multiplicative_order(&f.element(i)).unwrap()).collect();
        assert_eq!(orders, vec![1, 4, 4, 2]);
        assert_eq!(f.element_of_order(2).unwrap(), f.element(4));
        assert_eq!(f.element_of_order(1).unwrap(), f.one());
        assert_eq!(f.element_of_order(3), Err(FieldError::OrderUnavailable { q: 5, t: 3 }));
    }

    #[test]
    fn inverse_and_fermat_exhaustive() {
        for &(p, a) in &[(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (7, 2), (2, 5), (3, 3), (13, 1)] {
            let f = FieldSpec::new(p, a).unwrap();
            let q = f.order();
            for i in 1..q {
                let x = f.element(i);
                let xi = f.inv(&x).unwrap();
                assert_eq!(f.mul(&x, &xi), f.one(), "GF({q}) inverse of {x}");
                assert_eq!(f.pow(&x, q - 1), f.one(), "GF({q}) Fermat for {x}");
            }
        }
    }

    #[test]
    fn index_round_trip_and_display() {
        let f = FieldSpec::new(3, 2).unwrap();
        for i in 0..9 {
            assert_eq!(f.index_of(&f.element(i)), i);
        }
        assert_eq!(f.element(3).to_string(), "x");
        assert_eq!(f.element(7).to_string(), "2x+1");
        assert_eq!(f.zero().to_string(), "0");
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    fn irreducible_by_trial_division(poly: &[u64], p: u64) -> bool {
        let deg = poly.len() - 1;
        (1..=deg / 2).all(|d| {
            (0..p.pow(d as u32)).all(|idx| {
                let mut divisor = digits(idx, p, d);
                divisor.push(1);
                !poly_rem(poly, &divisor, p).is_empty()
            })
        })
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for &(p, deg) in &[(2u64, 2usize), (2, 3), (2, 4), (2, 6), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3)] {
            for idx in 0..p.pow(deg as u32) {
                let mut poly = digits(idx, p, deg);
                poly.push(1);
                assert_eq!(is_irreducible(&poly, p), irreducible_by_trial_division(&poly, p), "{poly:?} over GF({p})");
            }
        }
    }

    #[test]
    fn creation_is_deterministic() {
        for &(p, a) in &[(2, 4), (3, 3), (5, 2), (2, 8)] {
            assert_eq!(FieldSpec::new(p, a).unwrap(), FieldSpec::new(p, a).unwrap());
        }
    }
}
