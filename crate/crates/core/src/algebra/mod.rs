//! Generic machinery for algebras over the coefficient field with
//! weight-graded generators: elements, normal ordering by rewriting, linear
//! extraction of rewrite rules, and the reflection-equation contractions.
//!
//! Coefficients sit on the left of words. Moving a coefficient `f` to the left
//! across a word of weight `lambda` turns it into `f[-lambda]`.

mod graded;
mod reflection;
mod rewrite;
mod solve;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use smallvec::SmallVec;

use crate::coeffs::{Coeff, WeightVector};
use crate::expr::ExprValue;

pub use graded::GradedReducer;
pub use reflection::{lin_left, lin_right, outer_r, inner_r, reflection_residual, Matrix};
pub use rewrite::{Measure, MeasureFn, RewriteSystem};
pub use solve::solve_relations;
pub(crate) use solve::expect_pivots;

/// A generator of a weight-graded algebra.
pub trait Generator:
    Copy + Ord + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn weight(&self) -> WeightVector;
}

/// A word in the generators.
pub type Word<G> = SmallVec<[G; 6]>;

pub fn word_weight<G: Generator>(w: &[G]) -> WeightVector {
    w.iter().fold(WeightVector::ZERO, |acc, g| acc + g.weight())
}

/// A finite sum of words with coefficients on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<G: Generator> {
    rank: usize,
    terms: BTreeMap<Word<G>, Coeff>,
}

impl<G: Generator> Element<G> {
    pub fn zero(rank: usize) -> Self {
        Element {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(rank: usize, c: Coeff) -> Self {
        let mut e = Self::zero(rank);
        e.add_term(Word::new(), c);
        e
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, Coeff::one(rank))
    }

    pub fn gen(rank: usize, g: G) -> Self {
        Self::monomial(rank, [g].as_slice(), Coeff::one(rank))
    }

    pub fn monomial(rank: usize, word: &[G], c: Coeff) -> Self {
        let mut e = Self::zero(rank);
        e.add_term(Word::from_slice(word), c);
        e
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Word<G>, Coeff)>) -> Self {
        let mut e = Self::zero(rank);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<G>, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word<G>, Coeff> {
        self.terms
    }

    pub fn coefficient(&self, w: &[G]) -> Coeff {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| Coeff::zero(self.rank))
    }

    /// The coefficient of the empty word.
    pub fn scalar_part(&self) -> Coeff {
        self.coefficient(&[])
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|w| w.is_empty())
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Adds `c * w`, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word<G>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Element {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// `f * self`.
    pub fn scale(&self, f: &Coeff) -> Self {
        Self::from_terms(self.rank, self.terms.iter().map(|(w, c)| (w.clone(), f * c)))
    }

    /// `self * f`: `f` moves left across each word.
    pub fn scale_right(&self, f: &Coeff) -> Self {
        Self::from_terms(
            self.rank,
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c * &f.shift(&-word_weight(w)))),
        )
    }

    /// Free product: concatenates words, shifting the right coefficients.
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.rank.max(o.rank));
        for (wa, ca) in &self.terms {
            let lam = -word_weight(wa);
            for (wb, cb) in &o.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                r.add_term(w, ca * &cb.shift(&lam));
            }
        }
        r
    }

    /// Applies `f` to every generator, keeping coefficients in place.
    pub fn map_generators<H: Generator>(&self, f: impl Fn(G) -> H) -> Element<H> {
        Element::from_terms(
            self.rank,
            self.terms
                .iter()
                .map(|(w, c)| (w.iter().map(|g| f(*g)).collect(), c.clone())),
        )
    }

    /// Substitutes an element for every generator and coefficient twist `tw`.
    pub fn substitute<H: Generator>(
        &self,
        tw: impl Fn(&Coeff) -> Coeff,
        image: impl Fn(G) -> Element<H>,
    ) -> Element<H> {
        let mut r = Element::zero(self.rank);
        for (w, c) in &self.terms {
            let mut t = Element::scalar(self.rank, tw(c));
            for g in w {
                t = t.mul(&image(*g));
            }
            r = r.add(&t);
        }
        r
    }

    /// Every term has weight `w`.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|w| word_weight(w));
        match it.next() {
            None => true,
            Some(first) => it.all(|x| x == first),
        }
    }
}

pub fn sum<G: Generator>(rank: usize, items: impl IntoIterator<Item = Element<G>>) -> Element<G> {
    let mut acc = Element::zero(rank);
    for e in items {
        for (w, c) in e.terms {
            acc.add_term(w, c);
        }
    }
    acc
}

impl<G: Generator> fmt::Debug for Element<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<G: Generator> fmt::Display for Element<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = if c.numerator().leading_is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let gens: Vec<String> = w.iter().map(|g| g.to_string()).collect();
            let coeff = if body.is_one() && !w.is_empty() {
                None
            } else if body.denominator().is_one() && body.numerator().terms().len() > 1 && !w.is_empty() {
                Some(format!("({body})"))
            } else {
                Some(body.to_string())
            };
            let parts: Vec<String> = coeff.into_iter().chain(gens).collect();
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<G: Generator> ExprValue for Element<G> {
    fn from_coeff(c: Coeff) -> Self {
        let n = c.rank();
        Element::scalar(n, c)
    }
    fn add(&self, o: &Self) -> Self {
        Element::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Element::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Element::mul(self, o)
    }
    fn neg(&self) -> Self {
        Element::neg(self)
    }
    fn div(&self, o: &Self) -> std::result::Result<Self, String> {
        if !o.is_scalar() {
            return Err("division by a non-scalar element".into());
        }
        let inv = o.scalar_part().inv().map_err(|e| e.to_string())?;
        Ok(self.scale_right(&inv))
    }
}
