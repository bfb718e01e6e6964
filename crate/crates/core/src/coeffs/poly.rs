//! Sparse multivariate polynomials over the integers.
//!
//! Monomials are packed into a single `u64`: the top byte holds the total
//! degree and the following seven bytes hold the exponents of `h1..h7`.
//! Comparing the packed words as integers is then exactly the graded
//! lexicographic order with `h1 > h2 > ... > h7`, and multiplying monomials is
//! integer addition as long as the total degree stays below 256.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Largest number of variables a polynomial can mention.
pub const MAX_VARS: usize = 7;

const DEG_SHIFT: u32 = 56;

#[inline]
fn var_shift(v: usize) -> u32 {
    48 - 8 * v as u32
}

/// A monomial `h1^e1 * ... * h7^e7` in packed graded-lex form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// The monomial `h_{v+1}` (variables are zero-based here).
    pub fn var(v: usize) -> Self {
        assert!(v < MAX_VARS, "variable index {v} exceeds the supported rank");
        Monomial((1u64 << DEG_SHIFT) | (1u64 << var_shift(v)))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial::ONE;
        for (v, &e) in exps.iter().enumerate() {
            m = m.mul(Monomial::var(v).pow(e));
        }
        m
    }

    #[inline]
    pub fn exponent(self, v: usize) -> u32 {
        ((self.0 >> var_shift(v)) & 0xff) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        assert!(
            self.degree() + other.degree() < 256,
            "monomial degree overflow"
        );
        Monomial(self.0 + other.0)
    }

    pub fn pow(self, e: u32) -> Monomial {
        assert!(self.degree() * e < 256, "monomial degree overflow");
        Monomial(self.0 * e as u64)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..MAX_VARS).all(|v| self.exponent(v) <= other.exponent(v))
    }

    /// `other / self`; the caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    /// Bit mask of the variables that occur.
    pub fn var_mask(self) -> u8 {
        let mut mask = 0u8;
        for v in 0..MAX_VARS {
            if self.exponent(v) > 0 {
                mask |= 1 << v;
            }
        }
        mask
    }

    /// Drops `h_v` entirely, returning the exponent it had.
    fn split_var(self, v: usize) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0 - e as u64 * Monomial::var(v).0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<u32> = (0..MAX_VARS).map(|v| self.exponent(v)).collect();
        write!(f, "Monomial{exps:?}")
    }
}

/// A polynomial with integer coefficients, terms sorted by decreasing monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(v: usize) -> Self {
        Poly {
            terms: vec![(Monomial::var(v), BigInt::one())],
        }
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from terms in any order, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if out.last().is_some_and(|l| l.1.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|l| l.1.is_zero()) {
            out.pop();
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.0.degree())
    }

    pub fn var_mask(&self) -> u8 {
        self.terms.iter().fold(0, |m, t| m | t.0.var_mask())
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut prod = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                prod.push((ma.mul(*mb), ca * cb));
            }
        }
        Poly::from_terms(prod)
    }

    /// Multiplication by a single term keeps the order, so no re-sort.
    pub fn mul_term(&self, m: Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(Monomial::ONE, c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Gcd of the integer coefficients (non-negative).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_integer_exact(&self, d: &BigInt) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / d)).collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.constant_value() {
            if self.terms.iter().all(|(_, a)| a.is_multiple_of(&c)) {
                return Some(Poly {
                    terms: self.terms.iter().map(|(m, a)| (*m, a / &c)).collect(),
                });
            }
            return None;
        }
        if d.total_degree() > self.total_degree() {
            return None;
        }
        let (lm, lc) = d.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(m) {
                return None;
            }
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = lm.quotient_of(m);
            rem = rem.sub(&d.mul_term(qm, &qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `h_v`: entry `k` multiplies `h_v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            out[e as usize].terms.push((rest, c.clone()));
        }
        out
    }

    fn leading_coeff_in(&self, v: usize) -> Poly {
        let d = self.degree_in(v);
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            if e == d {
                terms.push((rest, c.clone()));
            }
        }
        Poly { terms }
    }

    /// Gcd of the coefficients in `h_v` (includes the integer content).
    pub fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v).iter().rev() {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize) -> Poly {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides its polynomial")
    }

    /// Pseudo-remainder of `self` by `q` with respect to `h_v`.
    fn pseudo_rem(&self, q: &Poly, v: usize) -> Poly {
        let dq = q.degree_in(v);
        let lc = q.leading_coeff_in(v);
        let mut r = self.clone();
        loop {
            if r.is_zero() {
                return r;
            }
            let dr = r.degree_in(v);
            if dr < dq {
                return r;
            }
            let lr = r.leading_coeff_in(v);
            let shifted = q.mul(&lr).mul_term(Monomial::var(v).pow(dr - dq), &BigInt::one());
            r = r.mul(&lc).sub(&shifted);
        }
    }

    /// Sign-normalized copy: leading coefficient positive.
    pub fn normalize_sign(&self) -> Poly {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn leading_is_negative(&self) -> bool {
        self.terms.first().is_some_and(|(_, c)| c.is_negative())
    }

    /// Substitutes `h_v -> h_v + alpha[v]` for every variable.
    pub fn shift(&self, alpha: &[i32]) -> Poly {
        let mut cur = self.clone();
        for (v, &a) in alpha.iter().enumerate() {
            if a == 0 || cur.degree_in(v) == 0 {
                continue;
            }
            cur = cur.shift_var(v, a);
        }
        cur
    }

    fn shift_var(&self, v: usize, a: i32) -> Poly {
        let a = BigInt::from(a);
        let maxd = self.degree_in(v) as usize;
        // powers[k] = a^k, binom rows built on the fly
        let mut powers = vec![BigInt::one(); maxd + 1];
        for k in 1..=maxd {
            powers[k] = &powers[k - 1] * &a;
        }
        let mut binom: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for e in 1..=maxd {
            let prev = &binom[e - 1];
            let mut row = vec![BigInt::one(); e + 1];
            for j in 1..e {
                row[j] = &prev[j - 1] + &prev[j];
            }
            binom.push(row);
        }
        let x = Monomial::var(v);
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            let e = e as usize;
            for j in 0..=e {
                let coeff = c * &binom[e][j] * &powers[e - j];
                out.push((rest.mul(x.pow(j as u32)), coeff));
            }
        }
        Poly::from_terms(out)
    }

    /// Renames variables: `h_v -> h_{perm[v]}`.
    pub fn permute(&self, perm: &[usize]) -> Poly {
        let out = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = [0u32; MAX_VARS];
                for v in 0..MAX_VARS {
                    let e = m.exponent(v);
                    if e > 0 {
                        exps[perm.get(v).copied().unwrap_or(v)] += e;
                    }
                }
                (Monomial::from_exponents(&exps), c.clone())
            })
            .collect();
        Poly::from_terms(out)
    }

    /// Substitutes `h_v -> -h_v` for every variable.
    pub fn negate_vars(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.degree() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate().take(MAX_VARS) {
                let e = m.exponent(v);
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }
}

/// Greatest common divisor over `Z[h1..h7]`, with positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.integer_content().gcd(&b.integer_content()));
    }
    if a.terms.len() >= b.terms.len() {
        if a.div_exact(b).is_some() {
            return b.normalize_sign();
        }
    } else if b.div_exact(a).is_some() {
        return a.normalize_sign();
    }
    let (ma, mb) = (a.var_mask(), b.var_mask());
    let common = ma & mb;
    if common == 0 {
        return Poly::constant(a.integer_content().gcd(&b.integer_content()));
    }
    if ma & !common != 0 {
        let v = (ma & !common).trailing_zeros() as usize;
        return gcd(&a.content_in(v), b);
    }
    if mb & !common != 0 {
        let v = (mb & !common).trailing_zeros() as usize;
        return gcd(a, &b.content_in(v));
    }
    let v = (0..MAX_VARS)
        .filter(|v| common & (1 << v) != 0)
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("common variable exists");
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut p, mut q) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = p.pseudo_rem(&q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            q = Poly::one();
            break;
        }
        p = q;
        q = r.primitive_in(v);
    }
    c.mul(&q.primitive_in(v)).normalize_sign()
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Monomial::ONE {
                parts.push(abs.to_string());
            }
            for v in 0..MAX_VARS {
                match m.exponent(v) {
                    0 => {}
                    1 => parts.push(format!("h{}", v + 1)),
                    e => parts.push(format!("h{}^{}", v + 1, e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: usize) -> Poly {
        Poly::var(v)
    }

    fn c(x: i64) -> Poly {
        Poly::constant(x)
    }

    #[test]
    fn monomial_order_is_grlex() {
        let h1 = Monomial::var(0);
        let h2 = Monomial::var(1);
        assert!(h1 > h2);
        assert!(h2.mul(h2) > h1);
        assert!(h1.mul(h2) > h2.mul(h2));
        assert!(h1 > Monomial::ONE);
    }

    #[test]
    fn display_orders_terms() {
        let p = h(0).sub(&h(1)).pow(2).sub(&c(1));
        assert_eq!(p.to_string(), "h1^2-2*h1*h2+h2^2-1");
    }

    #[test]
    fn exact_division() {
        let a = h(0).sub(&h(1)).add(&c(1));
        let b = h(0).add(&c(3));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&h(2)), None);
        assert_eq!(p.add(&c(1)).div_exact(&a), None);
    }

    #[test]
    fn gcd_of_products() {
        let x = h(0).sub(&h(1));
        let y = h(0).sub(&h(2)).add(&c(2));
        let z = h(1).add(&c(-1));
        let a = x.mul(&y).mul(&c(6));
        let b = x.mul(&z).mul(&c(4)).neg();
        assert_eq!(gcd(&a, &b), x.mul(&c(2)));
        assert!(gcd(&y, &z).is_one());
        assert_eq!(gcd(&x.pow(3).mul(&y), &x.pow(2).mul(&z)), x.pow(2));
    }

    #[test]
    fn shift_and_negate() {
        let p = h(0).sub(&h(1));
        assert_eq!(p.shift(&[1, 0]), p.add(&c(1)));
        assert_eq!(p.shift(&[0, 1]), p.sub(&c(1)));
        let q = p.pow(2).add(&h(0));
        assert_eq!(q.negate_vars(), p.pow(2).sub(&h(0)));
        assert_eq!(p.permute(&[1, 0]), p.neg());
    }
}
