use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::poly::{gcd, Poly, MAX_VARS};
use super::weight::WeightVector;
use crate::error::{Error, Result};

/// An exact rational function in the shifted Cartan variables `h1..hn`.
///
/// Always canonical: numerator and denominator are coprime and the
/// denominator's leading coefficient (graded lex) is positive, so structural
/// equality is mathematical equality.
///
/// Denominators that split into linear forms (the only ones the algebras in
/// this crate produce) are also kept factored, which lets sums and products
/// cancel by trial division instead of polynomial gcds.
#[derive(Clone)]
pub struct RationalCoefficient {
    num: Poly,
    den: Poly,
    factors: Option<Arc<Factored>>,
    rank: u8,
}

impl PartialEq for RationalCoefficient {
    fn eq(&self, o: &Self) -> bool {
        self.rank == o.rank && self.num == o.num && self.den == o.den
    }
}

impl Eq for RationalCoefficient {}

impl Hash for RationalCoefficient {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
        self.rank.hash(state);
    }
}

/// `content * prod f^e` with each `f` primitive, linear, leading coefficient
/// positive, sorted and distinct.
#[derive(Clone, Debug, Default)]
struct Factored {
    content: BigInt,
    linear: Vec<(Poly, u32)>,
}

impl Factored {
    fn one() -> Self {
        Factored {
            content: BigInt::one(),
            linear: Vec::new(),
        }
    }

    fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.content.clone());
        for (f, e) in &self.linear {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }

    fn exponent(&self, f: &Poly) -> u32 {
        self.linear
            .binary_search_by(|(g, _)| g.terms().cmp(f.terms()))
            .map_or(0, |i| self.linear[i].1)
    }

    /// Sorts and merges repeated factors.
    fn tidy(mut linear: Vec<(Poly, u32)>, content: BigInt) -> Self {
        linear.sort_by(|a, b| a.0.terms().cmp(b.0.terms()));
        let mut out: Vec<(Poly, u32)> = Vec::with_capacity(linear.len());
        for (f, e) in linear {
            match out.last_mut() {
                Some(last) if last.0 == f => last.1 += e,
                _ => out.push((f, e)),
            }
        }
        out.retain(|(_, e)| *e > 0);
        Factored { content, linear: out }
    }

    /// Least common multiple, with the cofactors `lcm/self` and `lcm/o`.
    fn lcm(&self, o: &Self) -> (Factored, Poly, Poly) {
        let content = self.content.lcm(&o.content);
        let mut linear = Vec::new();
        let mut ca = Poly::constant(&content / &self.content);
        let mut cb = Poly::constant(&content / &o.content);
        let (mut i, mut j) = (0, 0);
        while i < self.linear.len() || j < o.linear.len() {
            let ord = match (self.linear.get(i), o.linear.get(j)) {
                (Some(a), Some(b)) => a.0.terms().cmp(b.0.terms()),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    let (f, e) = &self.linear[i];
                    cb = cb.mul(&f.pow(*e));
                    linear.push((f.clone(), *e));
                    i += 1;
                }
                Ordering::Greater => {
                    let (f, e) = &o.linear[j];
                    ca = ca.mul(&f.pow(*e));
                    linear.push((f.clone(), *e));
                    j += 1;
                }
                Ordering::Equal => {
                    let (f, ea) = &self.linear[i];
                    let eb = o.linear[j].1;
                    if ea > &eb {
                        cb = cb.mul(&f.pow(ea - eb));
                    } else if eb > *ea {
                        ca = ca.mul(&f.pow(eb - ea));
                    }
                    linear.push((f.clone(), (*ea).max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        (Factored { content, linear }, ca, cb)
    }

    /// Applies a variable substitution that maps linear forms to linear forms;
    /// returns the sign picked up by renormalizing the factors.
    fn map(&self, op: impl Fn(&Poly) -> Poly) -> (Factored, bool) {
        let mut content = self.content.clone();
        let mut negative = false;
        let mut linear = Vec::with_capacity(self.linear.len());
        for (f, e) in &self.linear {
            let (c, g) = primitive_part(&op(f));
            if c.is_negative() && e % 2 == 1 {
                negative = !negative;
            }
            content *= num_traits::pow(c.abs(), *e as usize);
            linear.push((g, *e));
        }
        (Factored::tidy(linear, content), negative)
    }
}

/// `p = c * g` with `g` primitive and leading coefficient positive.
fn primitive_part(p: &Poly) -> (BigInt, Poly) {
    let mut c = p.integer_content();
    if p.leading_is_negative() {
        c = -c;
    }
    let g = p.div_integer_exact(&c);
    (c, g)
}

/// Factors a positive-leading polynomial into irreducibles that are each of
/// degree one in some variable; `None` if some piece is not of that kind.
fn factor_linear(den: &Poly) -> Option<Factored> {
    let content = den.integer_content();
    let rest = den.div_integer_exact(&content);
    if rest.is_constant() {
        return Some(Factored {
            content: den.constant_value().expect("constant"),
            linear: Vec::new(),
        });
    }
    let mut linear = Vec::new();
    let unit = split_into(rest, &mut linear)?;
    Some(Factored::tidy(linear, content * unit))
}

/// Appends the irreducible factors of primitive `p`; returns the leftover unit.
fn split_into(mut p: Poly, out: &mut Vec<(Poly, u32)>) -> Option<BigInt> {
    // the common shapes h_a - h_b + k and h_a + k, by trial division
    if p.total_degree() > 1 {
        for cand in linear_candidates(&p) {
            let (_, cand) = primitive_part(&cand);
            while let Some(q) = p.div_exact(&cand) {
                p = q;
                out.push((cand.clone(), 1));
            }
            if p.is_constant() {
                break;
            }
        }
    }
    if p.is_constant() {
        return p.constant_value();
    }
    let v = (0..MAX_VARS)
        .filter(|&v| p.degree_in(v) > 0)
        .min_by_key(|&v| p.degree_in(v))
        .expect("non-constant");
    let c = p.content_in(v);
    if !c.is_constant() {
        let q = p.div_exact(&c).expect("content divides");
        let u1 = split_into(c, out)?;
        let u2 = split_into(q, out)?;
        return Some(u1 * u2);
    }
    // primitive in v: degree one, or no rational root after specializing the
    // other variables (degree kept), means irreducible
    if p.degree_in(v) > 1 && !specialization_irreducible(&p, v) {
        return None;
    }
    let (u, g) = primitive_part(&p);
    out.push((g, 1));
    Some(u)
}

/// Small fixed points for the variables other than `v`.
fn small_point(v: usize, attempt: usize) -> Vec<BigInt> {
    const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    (0..MAX_VARS)
        .map(|u| if u == v { 0 } else { PRIMES[(u * 5 + attempt * 7) % PRIMES.len()] * if (u + attempt) % 2 == 0 { 1 } else { -1 } })
        .map(BigInt::from)
        .collect()
}

/// Some specialization of the other variables keeps the degree of `p` in
/// `v` and is irreducible: modulo a small prime for any degree, or by the
/// rational root test for degree 2 or 3 with small end coefficients.
fn specialization_irreducible(p: &Poly, v: usize) -> bool {
    let d = p.degree_in(v) as usize;
    let cs = p.coeffs_in(v);
    let small = BigInt::from(100_000_000u64);
    (0..6).any(|attempt| {
        let pt = small_point(v, attempt);
        let u: Vec<BigInt> = cs.iter().map(|c| c.eval(&pt)).collect();
        if u[d].is_zero() || u[0].is_zero() {
            return false;
        }
        if modp::PRIMES.iter().any(|&q| modp::irreducible_mod(&u, q)) {
            return true;
        }
        d <= 3 && u[0].abs() < small && u[d].abs() < small && !has_rational_root(&u)
    })
}

/// Rational root test for an integer polynomial with nonzero ends
/// (coefficients lowest first).
fn has_rational_root(u: &[BigInt]) -> bool {
    let divisors = |x: &BigInt| -> Vec<BigInt> {
        let x = x.abs();
        let mut out = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= x {
            if (&x % &k).is_zero() {
                out.push(k.clone());
                out.push(&x / &k);
            }
            k += 1;
        }
        out
    };
    let d = u.len() - 1;
    for p in divisors(&u[0]) {
        for q in divisors(&u[d]) {
            for p in [p.clone(), -p.clone()] {
                // sum u_k p^k q^(d-k)
                let mut acc = BigInt::zero();
                for (k, c) in u.iter().enumerate() {
                    acc += c * num_traits::pow(p.clone(), k) * num_traits::pow(q.clone(), d - k);
                }
                if acc.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Cheap necessary test for `f | p`: after specializing all variables but
/// one, the univariate image of `f` must divide that of `p`. Inconclusive
/// cases answer `true`.
fn may_divide(p: &Poly, f: &Poly) -> bool {
    let Some(v) = (0..MAX_VARS).find(|&v| f.degree_in(v) > 0) else {
        return true;
    };
    let point: Vec<BigInt> = (0..MAX_VARS)
        .map(|u| BigInt::from(1_000_003i64 * (u as i64 + 1) + 7_919 * (u as i64 * u as i64)))
        .collect();
    let fv: Vec<BigInt> = f.coeffs_in(v).iter().map(|c| c.eval(&point)).collect();
    let lf = fv.last().expect("non-empty").clone();
    if lf.is_zero() {
        return true;
    }
    let mut r: Vec<BigInt> = p.coeffs_in(v).iter().map(|c| c.eval(&point)).collect();
    // pseudo-remainder: r <- lf*r - top*x^k*f
    let df = fv.len() - 1;
    while r.len() > df {
        let top = r.pop().expect("non-empty");
        if top.is_zero() {
            continue;
        }
        let k = r.len() - df;
        for c in r.iter_mut() {
            *c *= &lf;
        }
        for (i, c) in fv[..df].iter().enumerate() {
            r[k + i] -= &top * c;
        }
    }
    r.iter().all(|c| c.is_zero())
}

/// Removes from `num / fac` every common factor; `only` limits the linear
/// factors tried (all when `None`).
fn cancel(mut num: Poly, mut fac: Factored, only: Option<&[bool]>) -> (Poly, Factored) {
    let g = num.integer_content().gcd(&fac.content);
    if !g.is_one() && !g.is_zero() {
        num = num.div_integer_exact(&g);
        fac.content /= &g;
    }
    for (k, (f, e)) in fac.linear.iter_mut().enumerate() {
        if only.is_some_and(|o| !o[k]) {
            continue;
        }
        while *e > 0 && may_divide(&num, f) {
            match num.div_exact(f) {
                Some(q) => {
                    num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    fac.linear.retain(|(_, e)| *e > 0);
    (num, fac)
}

impl RationalCoefficient {
    pub fn zero(n: usize) -> Self {
        Self::from_poly(Poly::zero(), n)
    }

    pub fn one(n: usize) -> Self {
        Self::from_poly(Poly::one(), n)
    }

    pub fn integer(n: usize, c: impl Into<BigInt>) -> Self {
        Self::from_poly(Poly::constant(c), n)
    }

    pub fn from_poly(p: Poly, n: usize) -> Self {
        RationalCoefficient {
            num: p,
            den: Poly::one(),
            factors: Some(Arc::new(Factored::one())),
            rank: n as u8,
        }
    }

    /// The variable `h~_i` (one-based).
    pub fn h(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n && n <= MAX_VARS, "variable h{i} outside rank {n}");
        Self::from_poly(Poly::var(i - 1), n)
    }

    /// `h~_ij = h~_i - h~_j`.
    pub fn h_diff(n: usize, i: usize, j: usize) -> Self {
        &Self::h(n, i) - &Self::h(n, j)
    }

    /// The unshifted Cartan generator `h_i = h~_i + i`.
    pub fn h_unshifted(n: usize, i: usize) -> Self {
        &Self::h(n, i) + &Self::integer(n, i as i64)
    }

    /// Builds `num/den` and brings it to canonical form.
    pub fn from_fraction(num: Poly, den: Poly, n: usize) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den, n as u8))
    }

    fn canonical(num: Poly, den: Poly, rank: u8) -> Self {
        if num.is_zero() {
            return Self::zero(rank as usize);
        }
        let (num, den) = if den.leading_is_negative() {
            (num.neg(), den.neg())
        } else {
            (num, den)
        };
        if let Some(fac) = factor_linear(&den) {
            let (num, fac) = cancel(num, fac, None);
            return Self::assemble(num, fac, rank);
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading_is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Self::general(num, den, rank)
    }

    fn assemble(num: Poly, fac: Factored, rank: u8) -> Self {
        if num.is_zero() {
            return Self::zero(rank as usize);
        }
        RationalCoefficient {
            num,
            den: fac.expand(),
            factors: Some(Arc::new(fac)),
            rank,
        }
    }

    /// A reduced fraction whose denominator may not split.
    fn general(num: Poly, den: Poly, rank: u8) -> Self {
        let factors = factor_linear(&den).map(Arc::new);
        RationalCoefficient {
            num,
            den,
            factors,
            rank,
        }
    }

    /// Reattaches the sign after an automorphism that may flip it.
    fn renormalized(num: Poly, den: Poly, rank: u8) -> Self {
        if den.leading_is_negative() {
            Self::general(num.neg(), den.neg(), rank)
        } else {
            Self::general(num, den, rank)
        }
    }

    /// Applies a substitution to numerator and denominator; `linear` must map
    /// linear forms to linear forms.
    fn substituted(&self, op: impl Fn(&Poly) -> Poly) -> Self {
        match &self.factors {
            Some(fac) => {
                let (fac, negative) = fac.map(&op);
                let num = op(&self.num);
                let num = if negative { num.neg() } else { num };
                RationalCoefficient {
                    num,
                    den: fac.expand(),
                    factors: Some(Arc::new(fac)),
                    rank: self.rank,
                }
            }
            None => Self::renormalized(op(&self.num), op(&self.den), self.rank),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn with_rank(mut self, n: usize) -> Self {
        self.rank = n as u8;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn merged_rank(&self, o: &Self) -> u8 {
        self.rank.max(o.rank)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &Self, negate: bool) -> Self {
        let rank = self.merged_rank(o);
        if o.is_zero() {
            return self.clone().with_rank(rank as usize);
        }
        let onum = if negate { o.num.neg() } else { o.num.clone() };
        if self.is_zero() {
            return RationalCoefficient {
                num: onum,
                den: o.den.clone(),
                factors: o.factors.clone(),
                rank,
            };
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.add(&onum), rank as usize);
        }
        if let (Some(fa), Some(fb)) = (&self.factors, &o.factors) {
            let (l, ca, cb) = fa.lcm(fb);
            let num = self.num.mul(&ca).add(&onum.mul(&cb));
            if num.is_zero() {
                return Self::zero(rank as usize);
            }
            // only factors with equal multiplicity on both sides can cancel
            let only: Vec<bool> = l
                .linear
                .iter()
                .map(|(f, _)| fa.exponent(f) == fb.exponent(f))
                .collect();
            let (num, l) = cancel(num, l, Some(&only));
            return Self::assemble(num, l, rank);
        }
        if self.den == o.den {
            return Self::canonical(self.num.add(&onum), self.den.clone(), rank);
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&onum.mul(&self.den));
            let den = self.den.mul(&o.den);
            // coprime denominators: the sum is already reduced
            return Self::renormalized(num, den, rank);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&onum.mul(&b1));
        if t.is_zero() {
            return Self::zero(rank as usize);
        }
        let g2 = gcd(&t, &g);
        let num = t.div_exact(&g2).expect("gcd divides");
        let den = b1.mul(&o.den.div_exact(&g2).expect("gcd divides"));
        Self::renormalized(num, den, rank)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let rank = self.merged_rank(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(rank as usize);
        }
        if self.is_one() {
            return o.clone().with_rank(rank as usize);
        }
        if o.is_one() {
            return self.clone().with_rank(rank as usize);
        }
        if let (Some(fa), Some(fb)) = (&self.factors, &o.factors) {
            // cross-cancel, then the product is reduced
            let (a, fb) = cancel(self.num.clone(), (**fb).clone(), None);
            let (c, fa) = cancel(o.num.clone(), (**fa).clone(), None);
            let mut linear = fa.linear;
            linear.extend(fb.linear);
            let fac = Factored::tidy(linear, fa.content * fb.content);
            return Self::assemble(a.mul(&c), fac, rank);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Self::renormalized(a.mul(&c), b.mul(&d), rank)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::renormalized(
            self.den.clone(),
            self.num.clone(),
            self.rank,
        ))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.rank());
        for _ in 0..e {
            acc = Self::mul(&acc, self);
        }
        acc
    }

    /// The shift automorphism `f -> f[alpha]`: `h~_i -> h~_i + alpha_i`.
    pub fn shift(&self, alpha: &WeightVector) -> Self {
        if alpha.is_zero() || self.is_constant() {
            return self.clone();
        }
        self.substituted(|p| p.shift(alpha.components()))
    }

    /// The shifted Weyl action `h~_k -> h~_{sigma(k)}`; `sigma` is one-based.
    pub fn weyl_permute(&self, sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in sigma {
            if s == 0 || s > n || seen[s - 1] {
                return Err(Error::Invalid(format!(
                    "{sigma:?} is not a permutation of 1..={n}"
                )));
            }
            seen[s - 1] = true;
        }
        let perm: Vec<usize> = sigma.iter().map(|s| s - 1).collect();
        Ok(self.substituted(|p| p.permute(&perm)))
    }

    /// The simple transposition `sigma_i` swapping `h~_i` and `h~_{i+1}`.
    pub fn reflect(&self, i: usize) -> Self {
        let mut perm: Vec<usize> = (0..MAX_VARS).collect();
        perm.swap(i - 1, i);
        self.substituted(|p| p.permute(&perm))
    }

    /// `h~_i -> -h~_i` for every `i`.
    pub fn negate_h(&self) -> Self {
        self.substituted(Poly::negate_vars)
    }

    /// Value at an integer point, as `(numerator, denominator)`; `None` on a pole.
    pub fn eval(&self, point: &[BigInt]) -> Option<(BigInt, BigInt)> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some((self.num.eval(point), d))
        }
    }

    /// Canonical text form; see [`super::parse`] for the grammar.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Debug for RationalCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.terms().len() > 1 {
            write!(f, "({})/", self.num)?;
        } else {
            write!(f, "{}/", self.num)?;
        }
        write!(f, "{}", format_denominator(&self.den))
    }
}

/// Prints a denominator as a product of linear factors `h_a - h_b + k` and
/// `h_a + k` where trial division finds them, plus any leftover cofactor.
fn format_denominator(den: &Poly) -> String {
    let content = den.integer_content();
    let mut rest = den.div_integer_exact(&content);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for cand in linear_candidates(&rest) {
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&cand) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((cand, mult));
        }
        if rest.is_constant() {
            break;
        }
    }
    let mut parts: Vec<String> = Vec::new();
    if !content.is_one() {
        parts.push(content.to_string());
    }
    for (p, m) in &factors {
        let body = if p.terms().len() == 1 {
            p.to_string()
        } else {
            format!("({p})")
        };
        if *m == 1 {
            parts.push(body);
        } else {
            parts.push(format!("{body}^{m}"));
        }
    }
    if !rest.is_one() {
        if rest.terms().len() == 1 && parts.is_empty() {
            parts.push(rest.to_string());
        } else {
            parts.push(format!("({rest})"));
        }
    }
    if parts.len() == 1 && !has_top_level_star(&parts[0]) {
        parts.remove(0)
    } else {
        format!("({})", parts.join("*"))
    }
}

fn has_top_level_star(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

/// Candidate linear factors, filtered by a cheap evaluation test.
fn linear_candidates(p: &Poly) -> Vec<Poly> {
    const K: i64 = 16;
    let mask = p.var_mask();
    let vars: Vec<usize> = (0..MAX_VARS).filter(|v| mask & (1 << v) != 0).collect();
    let base: Vec<BigInt> = (0..MAX_VARS)
        .map(|v| BigInt::from(7919 * (v as i64 + 3) + 104_729 * (v as i64 * v as i64 + 1)))
        .collect();
    let vanishes = |point: &[BigInt]| p.eval(point).is_zero();
    // small offsets first: 0, 1, -1, 2, -2, ...
    let offsets: Vec<i64> = std::iter::once(0)
        .chain((1..=K).flat_map(|k| [k, -k]))
        .collect();
    let mut out = Vec::new();
    for (ai, &a) in vars.iter().enumerate() {
        for &b in &vars[ai + 1..] {
            for &k in &offsets {
                let mut pt = base.clone();
                pt[a] = &pt[b] - k;
                if vanishes(&pt) {
                    out.push(Poly::var(a).sub(&Poly::var(b)).add(&Poly::constant(k)));
                }
            }
        }
    }
    for &a in &vars {
        for &k in &offsets {
            let mut pt = base.clone();
            pt[a] = BigInt::from(-k);
            if vanishes(&pt) {
                out.push(Poly::var(a).add(&Poly::constant(k)));
            }
        }
    }
    out
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&RationalCoefficient> for &RationalCoefficient {
            type Output = RationalCoefficient;
            fn $method(self, o: &RationalCoefficient) -> RationalCoefficient {
                RationalCoefficient::$inner(self, o)
            }
        }
        impl $trait for RationalCoefficient {
            type Output = RationalCoefficient;
            fn $method(self, o: RationalCoefficient) -> RationalCoefficient {
                RationalCoefficient::$inner(&self, &o)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for &RationalCoefficient {
    type Output = RationalCoefficient;
    fn neg(self) -> RationalCoefficient {
        RationalCoefficient {
            num: self.num.neg(),
            den: self.den.clone(),
            factors: self.factors.clone(),
            rank: self.rank,
        }
    }
}

impl Neg for RationalCoefficient {
    type Output = RationalCoefficient;
    fn neg(self) -> RationalCoefficient {
        -&self
    }
}

impl Zero for RationalCoefficient {
    fn zero() -> Self {
        RationalCoefficient::zero(0)
    }
    fn is_zero(&self) -> bool {
        RationalCoefficient::is_zero(self)
    }
}

impl One for RationalCoefficient {
    fn one() -> Self {
        RationalCoefficient::one(0)
    }
}

impl From<i64> for RationalCoefficient {
    fn from(c: i64) -> Self {
        RationalCoefficient::integer(0, c)
    }
}

/// Shorthand used throughout the crate.
pub type Coeff = RationalCoefficient;

#[cfg(test)]
mod tests {
    use super::*;

    fn hd(i: usize, j: usize) -> Coeff {
        Coeff::h_diff(2, i, j)
    }

    fn int(c: i64) -> Coeff {
        Coeff::integer(2, c)
    }

    #[test]
    fn inverse_cancels() {
        let h = hd(1, 2);
        assert!((&h * &h.inv().unwrap()).is_one());
        assert_eq!(int(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_axiom_example() {
        let h = hd(1, 2);
        let a = (&h + &int(1)).checked_div(&h).unwrap();
        assert_eq!(&a - &int(1), h.inv().unwrap());
    }

    #[test]
    fn shifts() {
        let h = hd(1, 2);
        assert_eq!(h.shift(&WeightVector::eps(1)), &h + &int(1));
        assert_eq!(h.shift(&WeightVector::eps(2)), &h - &int(1));
        assert_eq!(h.shift(&WeightVector::ZERO), h);
    }

    #[test]
    fn permute_and_negate() {
        let h = hd(1, 2);
        assert_eq!(h.weyl_permute(&[2, 1]).unwrap(), hd(2, 1));
        assert_eq!(h.reflect(1), -&h);
        assert_eq!((&h + &int(1)).negate_h(), &int(1) - &h);
        assert!(h.weyl_permute(&[1, 1]).is_err());
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = Coeff::from_fraction(Poly::constant(2), Poly::constant(-4), 2).unwrap();
        assert_eq!(a.to_string(), "-1/2");
        let h = hd(1, 2);
        let b = int(1).checked_div(&(&h * &h)).unwrap();
        assert_eq!(b.to_string(), "1/(h1-h2)^2");
        let c = int(1).checked_div(&(&h * &(&h - &int(2)))).unwrap();
        assert_eq!(c.to_string(), "1/((h1-h2)*(h1-h2-2))");
    }
}
