//! The dynamical tensors `R`, `T`, `S`, `Psi`, `Q+`, `Q-`, `H` and the
//! identities relating them.
//!
//! Index convention: a rank-4 entry `(i, k, j, l)` is the component with upper
//! pair `(i, k)` and lower pair `(j, l)`, i.e. `X^{ik}_{jl}`. All indices are
//! one-based. Dynamical shifts are never stored; checkers apply them during
//! contraction.

mod checks;

use std::collections::BTreeMap;

use crate::coeffs::{q_minus, q_plus, Coeff};

pub use checks::{
    check_aux_identities, check_dybe, check_involutive, check_skew_inverse, check_traces,
    run_suite, RMatrixSuite,
};

/// Sparse rank-4 tensor over the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct DynTensor4 {
    n: usize,
    entries: BTreeMap<[u8; 4], Coeff>,
}

/// Diagonal rank-2 tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct DynTensor2 {
    n: usize,
    diag: Vec<Coeff>,
}

impl DynTensor4 {
    fn new(n: usize) -> Self {
        DynTensor4 {
            n,
            entries: BTreeMap::new(),
        }
    }

    fn set(&mut self, i: usize, k: usize, j: usize, l: usize, c: Coeff) {
        debug_assert!(
            (i == j && k == l) || (i == l && k == j),
            "entry outside the sparsity pattern"
        );
        if !c.is_zero() {
            self.entries.insert([i as u8, k as u8, j as u8, l as u8], c);
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `X^{ik}_{jl}`, or `None` when the entry vanishes.
    pub fn get(&self, i: usize, k: usize, j: usize, l: usize) -> Option<&Coeff> {
        self.entries.get(&[i as u8, k as u8, j as u8, l as u8])
    }

    /// `X^{ik}_{jl}` as an owned coefficient (zero when absent).
    pub fn value(&self, i: usize, k: usize, j: usize, l: usize) -> Coeff {
        self.get(i, k, j, l).cloned().unwrap_or_else(|| Coeff::zero(self.n))
    }

    /// Nonzero entries `(j, l, X^{ik}_{jl})` of the row with upper pair `(i, k)`.
    pub fn row(&self, i: usize, k: usize) -> impl Iterator<Item = (usize, usize, &Coeff)> + '_ {
        let second = if i != k { Some((k, i)) } else { None };
        std::iter::once((i, k))
            .chain(second)
            .filter_map(move |(j, l)| self.get(i, k, j, l).map(|c| (j, l, c)))
    }

    /// Nonzero entries `(i, k, X^{ik}_{jl})` of the column with lower pair `(j, l)`.
    pub fn column(&self, j: usize, l: usize) -> impl Iterator<Item = (usize, usize, &Coeff)> + '_ {
        let second = if j != l { Some((l, j)) } else { None };
        std::iter::once((j, l))
            .chain(second)
            .filter_map(move |(i, k)| self.get(i, k, j, l).map(|c| (i, k, c)))
    }

    pub fn entries(&self) -> impl Iterator<Item = ([usize; 4], &Coeff)> {
        self.entries
            .iter()
            .map(|(k, c)| ([k[0] as usize, k[1] as usize, k[2] as usize, k[3] as usize], c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl DynTensor2 {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Diagonal entry `i` (one-based).
    pub fn get(&self, i: usize) -> &Coeff {
        &self.diag[i - 1]
    }

    pub fn trace(&self) -> Coeff {
        self.diag.iter().fold(Coeff::zero(self.n), |a, c| &a + c)
    }
}

/// Names accepted by [`build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorName {
    R,
    T,
    S,
    Psi,
    QPlus,
    QMinus,
    H,
}

/// Result of [`build`].
#[derive(Clone, Debug, PartialEq)]
pub enum Tensor {
    Four(DynTensor4),
    Two(DynTensor2),
}

pub fn build(name: TensorName, n: usize) -> Tensor {
    match name {
        TensorName::R => Tensor::Four(r_matrix(n)),
        TensorName::T => Tensor::Four(t_matrix(n)),
        TensorName::S => Tensor::Four(s_matrix(n)),
        TensorName::Psi => Tensor::Four(psi_matrix(n)),
        TensorName::QPlus => Tensor::Two(q_plus_matrix(n)),
        TensorName::QMinus => Tensor::Two(q_minus_matrix(n)),
        TensorName::H => Tensor::Two(h_matrix(n)),
    }
}

fn hd(n: usize, i: usize, j: usize) -> Coeff {
    Coeff::h_diff(n, i, j)
}

fn int(n: usize, c: i64) -> Coeff {
    Coeff::integer(n, c)
}

fn frac(num: Coeff, den: Coeff) -> Coeff {
    num.checked_div(&den).expect("tensor entries have nonzero denominators")
}

/// `R^{ij}_{ij} = 1/h~_ij` (i != j); `R^{ij}_{ji} = (h~_ij^2 - 1)/h~_ij^2` for
/// `i < j` and `1` for `i >= j`.
pub fn r_matrix(n: usize) -> DynTensor4 {
    let mut t = DynTensor4::new(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                t.set(i, i, i, i, int(n, 1));
                continue;
            }
            let h = hd(n, i, j);
            t.set(i, j, i, j, frac(int(n, 1), h.clone()));
            let swapped = if i < j {
                frac(&(&h * &h) - &int(n, 1), &h * &h)
            } else {
                int(n, 1)
            };
            t.set(i, j, j, i, swapped);
        }
    }
    t
}

/// `T^{ij}_{ij} = -1/(h~_ij - 1)` (i != j); `T^{ji}_{ij} = h(h+2)/(h+1)^2` with
/// `h = h~_ij` for `i < j`, and `T^{ij}_{ji} = 1` for `i < j`.
pub fn t_matrix(n: usize) -> DynTensor4 {
    let mut t = DynTensor4::new(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                t.set(i, i, i, i, int(n, 1));
                continue;
            }
            let h = hd(n, i, j);
            t.set(i, j, i, j, frac(int(n, -1), &h - &int(n, 1)));
            if i < j {
                let p = &h + &int(n, 1);
                t.set(j, i, i, j, frac(&h * &(&h + &int(n, 2)), &p * &p));
                t.set(i, j, j, i, int(n, 1));
            }
        }
    }
    t
}

/// `S^{ij}_{ij} = 1/(h~_ij + 1)`; `S^{ij}_{ji} = 1` for `i > j` and
/// `h(h-2)/(h-1)^2` with `h = h~_ij` for `i < j`.
pub fn s_matrix(n: usize) -> DynTensor4 {
    let mut t = DynTensor4::new(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                t.set(i, i, i, i, int(n, 1));
                continue;
            }
            let h = hd(n, i, j);
            t.set(i, j, i, j, frac(int(n, 1), &h + &int(n, 1)));
            let swapped = if i > j {
                int(n, 1)
            } else {
                let m = &h - &int(n, 1);
                frac(&h * &(&h - &int(n, 2)), &m * &m)
            };
            t.set(i, j, j, i, swapped);
        }
    }
    t
}

/// The skew inverse of `T`: `Psi^{ij}_{ij} = Q+_i Q-_j/(h~_ij + 1)`;
/// `Psi^{ij}_{ji} = 1` for `i < j` and `(h-1)^2/(h(h-2))` for `i > j`.
pub fn psi_matrix(n: usize) -> DynTensor4 {
    let mut t = DynTensor4::new(n);
    for i in 1..=n {
        for j in 1..=n {
            let h = hd(n, i, j);
            let diag = frac(&q_plus(i, n) * &q_minus(j, n), &h + &int(n, 1));
            t.set(i, j, i, j, diag);
            if i < j {
                t.set(i, j, j, i, int(n, 1));
            } else if i > j {
                let m = &h - &int(n, 1);
                t.set(i, j, j, i, frac(&m * &m, &h * &(&h - &int(n, 2))));
            }
        }
    }
    t
}

pub fn q_plus_matrix(n: usize) -> DynTensor2 {
    DynTensor2 {
        n,
        diag: (1..=n).map(|i| q_plus(i, n)).collect(),
    }
}

pub fn q_minus_matrix(n: usize) -> DynTensor2 {
    DynTensor2 {
        n,
        diag: (1..=n).map(|i| q_minus(i, n)).collect(),
    }
}

/// `H^i_j = (h~_j + n) delta^i_j`.
pub fn h_matrix(n: usize) -> DynTensor2 {
    DynTensor2 {
        n,
        diag: (1..=n).map(|j| &Coeff::h(n, j) + &int(n, n as i64)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Coeff {
        Coeff::parse(s, 2).unwrap()
    }

    #[test]
    fn r_entries_rank_two() {
        let r = r_matrix(2);
        assert_eq!(r.value(1, 2, 1, 2), c("1/(h1-h2)"));
        assert_eq!(r.value(1, 2, 2, 1), c("((h1-h2)^2-1)/(h1-h2)^2"));
        assert_eq!(r.value(2, 1, 2, 1), c("-1/(h1-h2)"));
        assert_eq!(r.value(2, 1, 1, 2), c("1"));
        assert_eq!(r.value(1, 1, 1, 1), c("1"));
        assert_eq!(r.value(2, 2, 2, 2), c("1"));
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn t_s_psi_entries_rank_two() {
        assert_eq!(t_matrix(2).value(1, 2, 1, 2), c("-1/(h1-h2-1)"));
        assert_eq!(t_matrix(2).value(2, 1, 1, 2), c("(h1-h2)*(h1-h2+2)/(h1-h2+1)^2"));
        assert_eq!(s_matrix(2).value(2, 1, 1, 2), c("1"));
        assert_eq!(psi_matrix(2).value(1, 2, 2, 1), c("1"));
    }

    #[test]
    fn q_minus_rank_two() {
        let q = q_minus_matrix(2);
        assert_eq!(*q.get(1), c("(h1-h2-1)/(h1-h2)"));
        assert_eq!(*q.get(2), c("(h1-h2+1)/(h1-h2)"));
    }

    #[test]
    fn sparsity_pattern_holds() {
        for n in 1..=4 {
            for t in [r_matrix(n), t_matrix(n), s_matrix(n), psi_matrix(n)] {
                for ([i, k, j, l], _) in t.entries() {
                    assert!((i == j && k == l) || (i == l && k == j));
                }
                assert!(t.len() <= n * n * 2);
            }
        }
    }
}
