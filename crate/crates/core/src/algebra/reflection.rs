//! Componentwise contractions appearing in the reflection equation
//! `R X1 R Y1 - X1 R Y1 R = R X1 - X1 R`. Every `R` entry is placed literally
//! where it stands in the product, so the dynamical shifts come out of the
//! element multiplication.

use super::{Element, Generator};
use crate::rmatrix::DynTensor4;

/// A square matrix of algebra elements, indexed from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<G: Generator> {
    n: usize,
    entries: Vec<Element<G>>,
}

impl<G: Generator> Matrix<G> {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Element<G>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Element<G> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn map(&self, f: impl Fn(&Element<G>) -> Element<G>) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Matrix::from_fn(self.n, |i, j| self.get(i, j).add(o.get(i, j)))
    }

    /// Ordinary matrix product with the free product of entries.
    pub fn mul(&self, o: &Self, reduce: impl Fn(&Element<G>) -> Element<G>) -> Self {
        let n = self.n;
        Matrix::from_fn(n, |i, j| {
            let terms = (1..=n).map(|a| self.get(i, a).mul(o.get(a, j)));
            reduce(&super::sum(self.get(i, j).rank(), terms))
        })
    }
}

/// `sum R^{i1 i2}_{kl} X^k_m R^{ml}_{pu} Y^p_t`.
pub fn outer_r<G: Generator>(
    r: &DynTensor4,
    x: &Matrix<G>,
    y: &Matrix<G>,
    [i1, i2, t, u]: [usize; 4],
) -> Element<G> {
    let n = r.rank();
    let mut acc = Element::zero(n);
    for (k, l, c1) in r.row(i1, i2) {
        for m in 1..=n {
            for p in 1..=n {
                if let Some(c2) = r.get(m, l, p, u) {
                    let term = x.get(k, m).scale_right(c2).mul(y.get(p, t)).scale(c1);
                    acc = acc.add(&term);
                }
            }
        }
    }
    acc
}

/// `sum X^{i1}_a R^{a i2}_{bc} Y^b_d R^{dc}_{tu}`.
pub fn inner_r<G: Generator>(
    r: &DynTensor4,
    x: &Matrix<G>,
    y: &Matrix<G>,
    [i1, i2, t, u]: [usize; 4],
) -> Element<G> {
    let n = r.rank();
    let mut acc = Element::zero(n);
    for a in 1..=n {
        for (b, c, c1) in r.row(a, i2) {
            for (d, cc, c2) in r.column(t, u) {
                if cc != c {
                    continue;
                }
                let term = x.get(i1, a).scale_right(c1).mul(y.get(b, d)).scale_right(c2);
                acc = acc.add(&term);
            }
        }
    }
    acc
}

/// `sum_k R^{i1 i2}_{ku} X^k_t`.
pub fn lin_left<G: Generator>(r: &DynTensor4, x: &Matrix<G>, [i1, i2, t, u]: [usize; 4]) -> Element<G> {
    let mut acc = Element::zero(r.rank());
    for (k, l, c) in r.row(i1, i2) {
        if l == u {
            acc = acc.add(&x.get(k, t).scale(c));
        }
    }
    acc
}

/// `sum_a X^{i1}_a R^{a i2}_{tu}`.
pub fn lin_right<G: Generator>(r: &DynTensor4, x: &Matrix<G>, [i1, i2, t, u]: [usize; 4]) -> Element<G> {
    let mut acc = Element::zero(r.rank());
    for (a, i, c) in r.column(t, u) {
        if i == i2 {
            acc = acc.add(&x.get(i1, a).scale_right(c));
        }
    }
    acc
}

/// `R X R X - X R X R - R X + X R` at one index tuple, before normal ordering.
pub fn reflection_residual<G: Generator>(r: &DynTensor4, x: &Matrix<G>, idx: [usize; 4]) -> Element<G> {
    outer_r(r, x, x, idx)
        .sub(&inner_r(r, x, x, idx))
        .sub(&lin_left(r, x, idx))
        .add(&lin_right(r, x, idx))
}
