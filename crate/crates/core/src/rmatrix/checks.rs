use rayon::prelude::*;

use super::*;
use crate::coeffs::WeightVector;
use crate::report::{CheckReport, Failure};
use crate::util::tuples;

fn eps(i: usize) -> WeightVector {
    WeightVector::eps(i)
}

fn delta(n: usize, cond: bool) -> Coeff {
    Coeff::integer(n, cond as i64)
}

fn compare(identity: &str, idx: &[usize], lhs: Coeff, rhs: Coeff) -> Option<Failure> {
    (lhs != rhs).then(|| Failure::new(identity, idx.to_vec(), lhs, rhs))
}

fn run_tuples<F>(identity: &str, n: usize, k: usize, f: F) -> CheckReport
where
    F: Fn(&[usize]) -> Option<Failure> + Sync,
{
    let results: Vec<Option<Failure>> = tuples(n, k).par_iter().map(|t| f(t)).collect();
    CheckReport::from_results(identity, results)
}

/// `sum_{j,l} R^{ik}_{jl} R^{jl}_{mp} = delta^i_m delta^k_p`.
pub fn check_involutive(n: usize) -> CheckReport {
    involutive_report(&r_matrix(n))
}

fn involutive_report(r: &DynTensor4) -> CheckReport {
    let n = r.rank();
    run_tuples("involutive", n, 4, |t| {
        let (i, k, m, p) = (t[0], t[1], t[2], t[3]);
        let mut lhs = Coeff::zero(n);
        for (j, l, a) in r.row(i, k) {
            if let Some(b) = r.get(j, l, m, p) {
                lhs = &lhs + &(a * b);
            }
        }
        compare("involutive", t, lhs, delta(n, i == m && k == p))
    })
}

/// The dynamical Yang-Baxter equation
/// `R^{ij}_{ab} R^{bk}_{ur}[-eps_a] R^{au}_{mq} = R^{jk}_{ab}[-eps_i] R^{ia}_{mu} R^{ub}_{qr}`.
pub fn check_dybe(n: usize) -> CheckReport {
    dybe_report(&r_matrix(n))
}

fn dybe_report(r: &DynTensor4) -> CheckReport {
    let n = r.rank();
    run_tuples("dybe", n, 6, |t| {
        let (i, j, k, m, q, rr) = (t[0], t[1], t[2], t[3], t[4], t[5]);
        let mut lhs = Coeff::zero(n);
        for (a, b, c1) in r.row(i, j) {
            for (u, c2) in (1..=n).filter_map(|u| r.get(b, k, u, rr).map(|c| (u, c))) {
                if let Some(c3) = r.get(a, u, m, q) {
                    lhs = &lhs + &(&(c1 * &c2.shift(&-eps(a))) * c3);
                }
            }
        }
        let mut rhs = Coeff::zero(n);
        for (a, b, c1) in r.row(j, k) {
            for (u, c2) in (1..=n).filter_map(|u| r.get(i, a, m, u).map(|c| (u, c))) {
                if let Some(c3) = r.get(u, b, q, rr) {
                    rhs = &rhs + &(&(&c1.shift(&-eps(i)) * c2) * &c3.shift(&-eps(m)));
                }
            }
        }
        compare("dybe", t, lhs, rhs)
    })
}

/// The skew inverse `Psi^{ik}_{jl} T^{lm}_{kq} = delta^i_q delta^m_j` and the
/// partial traces `sum_k Psi^{ik}_{jk} = Q+_i delta^i_j`,
/// `sum_a Psi^{am}_{aq} = Q-_q delta^m_q`.
pub fn check_skew_inverse(n: usize) -> Vec<CheckReport> {
    let psi = psi_matrix(n);
    let t = t_matrix(n);
    let skew = run_tuples("skew_inverse", n, 4, |x| {
        let (i, j, m, q) = (x[0], x[1], x[2], x[3]);
        let mut lhs = Coeff::zero(n);
        for k in 1..=n {
            for l in 1..=n {
                if let (Some(a), Some(b)) = (psi.get(i, k, j, l), t.get(l, m, k, q)) {
                    lhs = &lhs + &(a * b);
                }
            }
        }
        compare("skew_inverse", x, lhs, delta(n, i == q && m == j))
    });
    let tr2 = run_tuples("trace2_psi", n, 2, |x| {
        let (i, j) = (x[0], x[1]);
        let lhs = (1..=n).fold(Coeff::zero(n), |acc, k| &acc + &psi.value(i, k, j, k));
        let rhs = if i == j { q_plus(i, n) } else { Coeff::zero(n) };
        compare("trace2_psi", x, lhs, rhs)
    });
    let tr1 = run_tuples("trace1_psi", n, 2, |x| {
        let (m, q) = (x[0], x[1]);
        let lhs = (1..=n).fold(Coeff::zero(n), |acc, a| &acc + &psi.value(a, m, a, q));
        let rhs = if m == q { q_minus(q, n) } else { Coeff::zero(n) };
        compare("trace1_psi", x, lhs, rhs)
    });
    vec![skew, tr2, tr1]
}

/// The auxiliary relations between `R`, `T`, `S`, `Psi` and `Q`.
pub fn check_aux_identities(n: usize) -> Vec<CheckReport> {
    let r = r_matrix(n);
    let t = t_matrix(n);
    let s = s_matrix(n);
    let psi = psi_matrix(n);
    let mut out = Vec::new();

    // T^{ik}_{mp}[-eps_k] = R^{ki}_{pm}
    out.push(run_tuples("t_from_r", n, 4, |x| {
        let (i, k, m, p) = (x[0], x[1], x[2], x[3]);
        compare("t_from_r", x, t.value(i, k, m, p).shift(&-eps(k)), r.value(k, i, p, m))
    }));
    // R^{ki}_{pm} = R^{mp}_{ik} with h~ -> -h~
    out.push(run_tuples("transpose_symmetry", n, 4, |x| {
        let (i, k, m, p) = (x[0], x[1], x[2], x[3]);
        compare(
            "transpose_symmetry",
            x,
            r.value(k, i, p, m),
            r.value(m, p, i, k).negate_h(),
        )
    }));
    // S^{ik}_{mp} = R^{ik}_{mp}[eps_m]
    out.push(run_tuples("s_from_r", n, 4, |x| {
        let (i, k, m, p) = (x[0], x[1], x[2], x[3]);
        compare("s_from_r", x, s.value(i, k, m, p), r.value(i, k, m, p).shift(&eps(m)))
    }));
    // Psi^{ik}_{jl} = Q+_i[eps_k - eps_l] S^{ik}_{jl} / Q+_l[-eps_l]
    out.push(run_tuples("psi_from_s", n, 4, |x| {
        let (i, k, j, l) = (x[0], x[1], x[2], x[3]);
        let rhs = (&q_plus(i, n).shift(&(eps(k) - eps(l))) * &s.value(i, k, j, l))
            .checked_div(&q_plus(l, n).shift(&-eps(l)))
            .expect("Q+ is invertible");
        compare("psi_from_s", x, psi.value(i, k, j, l), rhs)
    }));
    // Q+ compatibility with R
    out.push(run_tuples("q_plus_compatibility", n, 4, |x| {
        let (i, k, m, p) = (x[0], x[1], x[2], x[3]);
        let rv = r.value(i, k, m, p);
        let lhs = &(&q_plus(i, n).shift(&-eps(i)) * &q_plus(k, n).shift(&(-eps(i) - eps(k)))) * &rv;
        let rhs = &rv * &(&q_plus(m, n).shift(&-eps(m)) * &q_plus(p, n).shift(&(-eps(m) - eps(p))));
        compare("q_plus_compatibility", x, lhs, rhs)
    }));
    // Q-_j Q-_i[-eps_j] = Q-_i Q-_j[-eps_i]
    out.push(run_tuples("q_minus_compatibility", n, 2, |x| {
        let (i, j) = (x[0], x[1]);
        compare(
            "q_minus_compatibility",
            x,
            &q_minus(j, n) * &q_minus(i, n).shift(&-eps(j)),
            &q_minus(i, n) * &q_minus(j, n).shift(&-eps(i)),
        )
    }));
    // sum_a Q-_a[-eps_m] R^{ma}_{qa} = delta^m_q
    out.push(run_tuples("trace_q_minus_r", n, 2, |x| {
        let (m, q) = (x[0], x[1]);
        let lhs = (1..=n).fold(Coeff::zero(n), |acc, a| {
            &acc + &(&q_minus(a, n).shift(&-eps(m)) * &r.value(m, a, q, a))
        });
        compare("trace_q_minus_r", x, lhs, delta(n, m == q))
    }));
    // sum_a Q+_a[eps_m] R^{am}_{aq} = delta^m_q
    out.push(run_tuples("trace_q_plus_r", n, 2, |x| {
        let (m, q) = (x[0], x[1]);
        let lhs = (1..=n).fold(Coeff::zero(n), |acc, a| {
            &acc + &(&q_plus(a, n).shift(&eps(m)) * &r.value(a, m, a, q))
        });
        compare("trace_q_plus_r", x, lhs, delta(n, m == q))
    }));
    // Q-_j[eps_j] Q+_j = 1
    out.push(run_tuples("q_shift_inverse", n, 1, |x| {
        let j = x[0];
        compare(
            "q_shift_inverse",
            x,
            &q_minus(j, n).shift(&eps(j)) * &q_plus(j, n),
            Coeff::one(n),
        )
    }));
    out
}

/// `Tr Q+ = Tr Q- = n`.
pub fn check_traces(n: usize) -> CheckReport {
    let mut rep = CheckReport::new("trace_q");
    let target = Coeff::integer(n, n as i64);
    let plus = q_plus_matrix(n).trace();
    let minus = q_minus_matrix(n).trace();
    rep.record(compare("trace_q", &[1], plus, target.clone()));
    rep.record(compare("trace_q", &[2], minus, target));
    rep
}

/// Selectable groups of R-matrix identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMatrixSuite {
    Involutive,
    Dybe,
    Skew,
    Aux,
    Trace,
    All,
}

impl std::str::FromStr for RMatrixSuite {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(match s {
            "involutive" => Self::Involutive,
            "dybe" => Self::Dybe,
            "skew" => Self::Skew,
            "aux" => Self::Aux,
            "trace" => Self::Trace,
            "all" => Self::All,
            _ => return Err(crate::Error::Invalid(format!("unknown rmatrix suite '{s}'"))),
        })
    }
}

pub fn run_suite(n: usize, suite: RMatrixSuite) -> Vec<CheckReport> {
    use RMatrixSuite::*;
    let mut out = Vec::new();
    if matches!(suite, Involutive | All) {
        out.push(check_involutive(n));
    }
    if matches!(suite, Dybe | All) {
        out.push(check_dybe(n));
    }
    if matches!(suite, Skew | All) {
        out.extend(check_skew_inverse(n));
    }
    if matches!(suite, Aux | All) {
        out.extend(check_aux_identities(n));
    }
    if matches!(suite, Trace | All) {
        out.push(check_traces(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    #[test]
    fn rank_one_is_trivial() {
        assert!(all_passed(&run_suite(1, RMatrixSuite::All)));
    }

    #[test]
    fn rank_two_and_three() {
        for n in [2, 3] {
            let reps = run_suite(n, RMatrixSuite::All);
            for r in &reps {
                assert!(r.passed(), "n={n} {}: {:?}", r.identity, r.failures.first());
            }
        }
    }

    #[test]
    fn dybe_counts_all_tuples() {
        assert_eq!(check_dybe(2).checked, 64);
    }

    #[test]
    fn traces_up_to_six() {
        for n in 1..=6 {
            assert!(check_traces(n).passed(), "n={n}");
        }
    }

    #[test]
    fn corrupted_entry_is_caught() {
        for (i, k, j, l) in [(1, 2, 1, 2), (2, 1, 1, 2), (1, 1, 1, 1)] {
            let mut r = r_matrix(2);
            let bumped = &r.value(i, k, j, l) + &Coeff::integer(2, 1);
            r.set(i, k, j, l, bumped);
            assert!(!involutive_report(&r).passed(), "{i}{k}{j}{l}");
            assert!(!dybe_report(&r).passed(), "{i}{k}{j}{l}");
        }
    }

    #[test]
    fn shifted_entry_is_caught() {
        // one entry evaluated at the wrong weight breaks the dynamical YBE
        let mut r = r_matrix(3);
        let (i, k) = (1, 2);
        let swapped = r.value(i, k, k, i).shift(&eps(1));
        r.set(i, k, k, i, swapped);
        assert!(!dybe_report(&r).passed());
    }
}
