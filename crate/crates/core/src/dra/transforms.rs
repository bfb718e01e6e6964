//! The change of generators between `s^i_j` (images of the first tensor
//! factor) and `L^i_j`:
//!
//! ```text
//! L^i_j = s^i_j phi_j                                         (i != j)
//! L^i_i = (s^i_i - sum_{m>i} s^m_m / (h~_im phi_im)) phi_i
//! ```
//!
//! and the same formulas for `s'`, `L'`, where `s + s' = h delta` with
//! `h_i = h~_i + i`. Together they give `L + L' = H`.

use super::{DraElement, DraGenerator};
use crate::algebra::{Element, Matrix};
use crate::coeffs::{phi, special, Coeff, Special};
use crate::report::{CheckReport, Failure};

fn seg_factor(n: usize, i: usize, m: usize) -> Coeff {
    let seg = special(Special::PhiSeg(i, m), n).expect("i < m");
    (&Coeff::h_diff(n, i, m) * &seg).inv().expect("unit")
}

/// Coefficients `T[i][m]` with `L^i_i = sum_m T[i][m] s^m_m` (1-based rows,
/// stored 0-based). Upper triangular with `phi_i` on the diagonal.
pub fn transition_matrix(n: usize) -> Vec<Vec<Coeff>> {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|m| {
                    if m < i {
                        Coeff::zero(n)
                    } else if m == i {
                        phi(i, n)
                    } else {
                        -(&(&seg_factor(n, i, m) * &phi(i, n)))
                    }
                })
                .collect()
        })
        .collect()
}

/// `L` written in the `s` generators.
pub fn l_from_s(n: usize) -> Matrix<DraGenerator> {
    let t = transition_matrix(n);
    Matrix::from_fn(n, |i, j| {
        if i != j {
            Element::gen(n, DraGenerator::s(i, j)).scale_right(&phi(j, n))
        } else {
            let mut e = Element::zero(n);
            for m in i..=n {
                e.add_term(smallvec::smallvec![DraGenerator::s(m, m)], t[i - 1][m - 1].clone());
            }
            e
        }
    })
}

/// `s` written in the `L` generators, by back substitution.
pub fn s_from_l(n: usize) -> Matrix<DraGenerator> {
    let mut diag: Vec<DraElement> = vec![Element::zero(n); n + 1];
    for i in (1..=n).rev() {
        let inv = phi(i, n).inv().expect("unit");
        let mut e = Element::gen(n, DraGenerator::l(i, i)).scale(&inv);
        for m in i + 1..=n {
            e = e.add(&diag[m].scale(&seg_factor(n, i, m)));
        }
        diag[i] = e;
    }
    Matrix::from_fn(n, |i, j| {
        if i != j {
            Element::gen(n, DraGenerator::l(i, j)).scale_right(&phi(j, n).inv().expect("unit"))
        } else {
            diag[i].clone()
        }
    })
}

fn substitute_s(e: &DraElement, s: &Matrix<DraGenerator>) -> DraElement {
    e.substitute(Coeff::clone, |g| s.get(g.i as usize, g.j as usize).clone())
}

/// Triangularity and invertibility of the transition matrix, the round trip
/// `s -> L -> s`, and `L + L' = H`.
pub fn generator_transforms(n: usize) -> Vec<CheckReport> {
    let t = transition_matrix(n);
    let mut tri = CheckReport::new("transition_triangular");
    for i in 0..n {
        for m in 0..i {
            tri.record((!t[i][m].is_zero()).then(|| Failure::new("transition_triangular", vec![i + 1, m + 1], &t[i][m], 0)));
        }
        let ok = t[i][i].inv().is_ok();
        tri.record((!ok).then(|| Failure::new("transition_triangular", vec![i + 1, i + 1], &t[i][i], "unit")));
    }

    // L(s(L)) = L
    let l_of_s = l_from_s(n);
    let s_of_l = s_from_l(n);
    let mut round = CheckReport::new("transition_inverse");
    for i in 1..=n {
        for j in 1..=n {
            let back = substitute_s(l_of_s.get(i, j), &s_of_l);
            let target = Element::gen(n, DraGenerator::l(i, j));
            round.record((back != target).then(|| Failure::new("transition_inverse", vec![i, j], &back, &target)));
        }
    }

    // s' = h delta - s, L' from s' by the same formulas, then L + L' = H
    let s_prime = Matrix::from_fn(n, |i, j| {
        let mut e = s_of_l.get(i, j).neg();
        if i == j {
            e = e.add(&Element::scalar(n, Coeff::h_unshifted(n, i)));
        }
        e
    });
    let mut sum = CheckReport::new("l_plus_l_prime");
    for i in 1..=n {
        for j in 1..=n {
            let lp = substitute_s(l_of_s.get(i, j), &s_prime);
            let total = lp.add(&Element::gen(n, DraGenerator::l(i, j)));
            let h = if i == j {
                Element::scalar(n, &Coeff::h(n, j) + &Coeff::integer(n, n as i64))
            } else {
                Element::zero(n)
            };
            sum.record((total != h).then(|| Failure::new("l_plus_l_prime", vec![i, j], &total, &h)));
        }
    }
    vec![tri, round, sum]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    #[test]
    fn rank_two_diagonal() {
        // L11 = (s11 - s22/h) h/(h-1)
        let l = l_from_s(2);
        let h = Coeff::h_diff(2, 1, 2);
        let f = h.checked_div(&(&h - &Coeff::one(2))).unwrap();
        let mut e = Element::gen(2, DraGenerator::s(1, 1)).scale(&f);
        e = e.sub(&Element::gen(2, DraGenerator::s(2, 2)).scale(&(&h.inv().unwrap() * &f)));
        assert_eq!(*l.get(1, 1), e);
        assert_eq!(*l.get(1, 2), Element::gen(2, DraGenerator::s(1, 2)));
    }

    #[test]
    fn transforms_up_to_four() {
        for n in 1..=4 {
            for r in generator_transforms(n) {
                assert!(r.passed(), "n={n} {}: {:?}", r.identity, r.failures.first());
            }
        }
    }
}
