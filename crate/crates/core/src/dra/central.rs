//! The central elements `Tr(L^N Q-) = sum_i (L^N)^i_i Q-_i` and their
//! counterparts for `L' = H - L`.

use rayon::prelude::*;

use super::{DraAlgebra, DraElement, DraGenerator};
use crate::algebra::{sum, Element, Matrix};
use crate::coeffs::{q_minus, Coeff};
use crate::report::{CheckReport, Failure};

/// `m^power` with normal-ordered entries; `m^0` is the identity.
pub fn matrix_power(alg: &DraAlgebra, m: &Matrix<DraGenerator>, power: u32) -> Matrix<DraGenerator> {
    let n = alg.rank();
    let mut acc = Matrix::from_fn(n, |i, j| {
        if i == j {
            Element::one(n)
        } else {
            Element::zero(n)
        }
    });
    for _ in 0..power {
        acc = acc.mul(m, |e| alg.normal_form(e));
    }
    acc
}

/// `sum_i m^i_i Q-_i`, normal ordered.
pub fn trace_q_minus(alg: &DraAlgebra, m: &Matrix<DraGenerator>) -> DraElement {
    let n = alg.rank();
    let terms = (1..=n).map(|i| m.get(i, i).scale_right(&q_minus(i, n)));
    alg.normal_form(&sum(n, terms))
}

/// `Tr(L^power Q-)` in the first copy.
pub fn central_element(alg: &DraAlgebra, power: u32) -> DraElement {
    trace_q_minus(alg, &matrix_power(alg, &alg.matrix(1), power))
}

/// `L' = H - L` with `H = diag(h~_j + n)`.
pub fn l_prime(alg: &DraAlgebra) -> Matrix<DraGenerator> {
    let n = alg.rank();
    let l = alg.matrix(1);
    Matrix::from_fn(n, |i, j| {
        let mut e = l.get(i, j).neg();
        if i == j {
            e = e.add(&Element::scalar(n, &Coeff::h(n, j) + &Coeff::integer(n, n as i64)));
        }
        e
    })
}

/// `Tr(L'^power Q-)`.
pub fn central_element_prime(alg: &DraAlgebra, power: u32) -> DraElement {
    trace_q_minus(alg, &matrix_power(alg, &l_prime(alg), power))
}

fn commutator_report(alg: &DraAlgebra, identity: &str, c: &DraElement) -> CheckReport {
    let n = alg.rank();
    let gens: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let results: Vec<Option<Failure>> = gens
        .par_iter()
        .map(|&(i, j)| {
            let g = alg.gen(1, i, j);
            let comm = alg.normal_form(&c.mul(&g).sub(&g.mul(c)));
            (!comm.is_zero()).then(|| Failure::residual(identity, vec![i, j], &comm))
        })
        .collect();
    CheckReport::from_results(identity, results)
}

/// `[Tr(L^N Q-), L^i_j] = 0` and `[Tr(L'^N Q-), L^i_j] = 0` for every
/// generator, plus the weight-zero property of the diagonal of `L^N` (which
/// makes the side of `Q-` in the trace irrelevant).
pub fn check_central(alg: &DraAlgebra, power: u32) -> Vec<CheckReport> {
    let n = alg.rank();
    let lp = matrix_power(alg, &alg.matrix(1), power);
    let c = trace_q_minus(alg, &lp);
    let c_prime = central_element_prime(alg, power);
    let mut side = CheckReport::new("trace_side");
    for i in 1..=n {
        let d = lp.get(i, i);
        let left = d.scale(&q_minus(i, n));
        let right = d.scale_right(&q_minus(i, n));
        side.record((left != right).then(|| Failure::new("trace_side", vec![i], &left, &right)));
    }
    vec![
        commutator_report(alg, "central", &c),
        commutator_report(alg, "central_prime", &c_prime),
        side,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_zero_is_trace_of_q_minus() {
        for n in 1..=4 {
            let a = DraAlgebra::single(n).unwrap();
            assert_eq!(central_element(&a, 0), Element::scalar(n, Coeff::integer(n, n as i64)));
        }
    }

    #[test]
    fn rank_two_power_one() {
        let a = DraAlgebra::single(2).unwrap();
        let c = central_element(&a, 1);
        let expect = a.parse("(h1-h2-1)/(h1-h2)*L[1,1] + (h1-h2+1)/(h1-h2)*L[2,2]").unwrap();
        assert_eq!(c, expect);
        for r in check_central(&a, 1) {
            assert!(r.passed(), "{}: {:?}", r.identity, r.failures.first());
        }
    }
}
