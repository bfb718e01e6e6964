//! Named coefficients built from products over index ranges.

use super::rational::Coeff;
use super::weight::WeightVector;
use crate::error::{Error, Result};

/// The named special elements of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Special {
    /// `phi_j = prod_{k>j} h~_jk/(h~_jk - 1)`
    Phi(usize),
    /// `phi'_j = prod_{k<j} h~_jk/(h~_jk - 1)`
    PhiPrime(usize),
    /// `phi_jm = prod_{j<k<m} h~_jk/(h~_jk - 1)`
    PhiSeg(usize, usize),
    /// `alpha_ij = (h~_ij + 1)/h~_ij`
    Alpha(usize, usize),
    /// `beta_ij = (1/(1 - h~_ij)) phi_j[eps_j] / phi_i`
    Beta(usize, usize),
    /// `mu_i = -1/phi_i`
    Mu(usize),
    /// `Q+_i = prod_{k != i} (h~_ik + 1)/h~_ik`
    QPlus(usize),
    /// `Q-_i = prod_{k != i} (h~_ik - 1)/h~_ik`
    QMinus(usize),
}

fn check(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            what: "special element",
            index: i,
            max: n,
        });
    }
    Ok(())
}

fn ratio(n: usize, j: usize, k: usize, offset: i64) -> Coeff {
    // (h~_jk + offset) / h~_jk
    let h = Coeff::h_diff(n, j, k);
    (&h + &Coeff::integer(n, offset))
        .checked_div(&h)
        .expect("h~_jk is nonzero for j != k")
}

fn phi_factor(n: usize, j: usize, k: usize) -> Coeff {
    let h = Coeff::h_diff(n, j, k);
    h.checked_div(&(&h - &Coeff::one(n)))
        .expect("h~_jk - 1 is nonzero")
}

fn product(n: usize, it: impl Iterator<Item = Coeff>) -> Coeff {
    it.fold(Coeff::one(n), |acc, c| &acc * &c)
}

/// Evaluates a special element at rank `n`.
pub fn special(name: Special, n: usize) -> Result<Coeff> {
    use Special::*;
    match name {
        Phi(j) => {
            check(n, j)?;
            Ok(product(n, (j + 1..=n).map(|k| phi_factor(n, j, k))))
        }
        PhiPrime(j) => {
            check(n, j)?;
            Ok(product(n, (1..j).map(|k| phi_factor(n, j, k))))
        }
        PhiSeg(j, m) => {
            check(n, j)?;
            check(n, m)?;
            if j >= m {
                return Err(Error::Invalid(format!("phi segment needs j < m, got ({j},{m})")));
            }
            Ok(product(n, (j + 1..m).map(|k| phi_factor(n, j, k))))
        }
        Alpha(i, j) => {
            check(n, i)?;
            check(n, j)?;
            if i == j {
                return Err(Error::Invalid("alpha_ii is undefined".into()));
            }
            Ok(ratio(n, i, j, 1))
        }
        Beta(i, j) => {
            check(n, i)?;
            check(n, j)?;
            let phi_j = special(Phi(j), n)?.shift(&WeightVector::eps(j));
            let phi_i = special(Phi(i), n)?;
            let pre = (&Coeff::one(n) - &Coeff::h_diff(n, i, j)).inv()?;
            (&pre * &phi_j).checked_div(&phi_i)
        }
        Mu(i) => Ok(-special(Phi(i), n)?.inv()?),
        QPlus(i) => {
            check(n, i)?;
            Ok(product(n, (1..=n).filter(|&k| k != i).map(|k| ratio(n, i, k, 1))))
        }
        QMinus(i) => {
            check(n, i)?;
            Ok(product(n, (1..=n).filter(|&k| k != i).map(|k| ratio(n, i, k, -1))))
        }
    }
}

pub fn phi(j: usize, n: usize) -> Coeff {
    special(Special::Phi(j), n).expect("index in range")
}

pub fn q_plus(i: usize, n: usize) -> Coeff {
    special(Special::QPlus(i), n).expect("index in range")
}

pub fn q_minus(i: usize, n: usize) -> Coeff {
    special(Special::QMinus(i), n).expect("index in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        let h = Coeff::h_diff(2, 1, 2);
        let expect = h.checked_div(&(&h - &Coeff::one(2))).unwrap();
        assert_eq!(special(Special::Phi(1), 2).unwrap(), expect);
        assert!(special(Special::Phi(2), 2).unwrap().is_one());
        assert!(special(Special::PhiPrime(1), 3).unwrap().is_one());
        assert!(special(Special::PhiSeg(1, 2), 3).unwrap().is_one());
    }

    #[test]
    fn mu_times_phi() {
        let p = special(Special::Phi(1), 2).unwrap();
        let m = special(Special::Mu(1), 2).unwrap();
        assert_eq!(&p * &m, Coeff::integer(2, -1));
    }

    #[test]
    fn q_shift_inverse() {
        for n in 1..=4 {
            for j in 1..=n {
                let l = q_minus(j, n).shift(&WeightVector::eps(j));
                assert!((&l * &q_plus(j, n)).is_one(), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn q_minus_negates_to_q_plus() {
        assert_eq!(q_minus(1, 2).negate_h(), q_plus(1, 2));
    }

    #[test]
    fn range_errors() {
        assert!(special(Special::Phi(3), 2).is_err());
        assert!(special(Special::PhiSeg(2, 2), 3).is_err());
        assert!(special(Special::QPlus(0), 2).is_err());
    }
}
