use rayon::prelude::*;

use super::{check_variant_generators, mu_consistency, verify_zhelobenko, CrossConstant, Statistics, WeylAlgebra, WeylConfig, WeylElement, WeylGenerator};
use crate::algebra::{inner_r, outer_r, reflection_residual, Element, Matrix};
use crate::error::{Error, Result};
use crate::report::{CheckReport, Failure};
use crate::rmatrix::r_matrix;
use crate::util::tuples;

fn idx4(t: &[usize]) -> [usize; 4] {
    [t[0], t[1], t[2], t[3]]
}

/// Every component of the reflection equation for `m`, normal ordered.
pub(crate) fn reflection_report(
    alg: &WeylAlgebra,
    identity: &str,
    m: &Matrix<WeylGenerator>,
) -> CheckReport {
    let n = alg.rank();
    let r = r_matrix(n);
    let results: Vec<Option<Failure>> = tuples(n, 4)
        .par_iter()
        .map(|t| {
            let res = alg.normal_form(&reflection_residual(&r, m, idx4(t)));
            (!res.is_zero()).then(|| Failure::residual(identity, t.clone(), &res))
        })
        .collect();
    CheckReport::from_results(identity, results)
}

/// `R Ltilde R Ltilde - Ltilde R Ltilde R = R Ltilde - Ltilde R` componentwise.
pub fn check_reflection(alg: &WeylAlgebra) -> CheckReport {
    reflection_report(alg, "ltilde_reflection", &alg.ltilde())
}

/// `nf(nf(ab) c) = nf(a nf(bc))` for every triple of generators.
pub fn associativity(alg: &WeylAlgebra) -> CheckReport {
    let n = alg.rank();
    let gens = alg.config().generators();
    let mut triples = Vec::new();
    for &a in &gens {
        for &b in &gens {
            for &c in &gens {
                triples.push([a, b, c]);
            }
        }
    }
    let results: Vec<Option<Failure>> = triples
        .par_iter()
        .map(|w| {
            let [a, b, c] = w.map(|g| Element::gen(n, g));
            let left = alg.product(&alg.product(&a, &b), &c);
            let right = alg.product(&a, &alg.product(&b, &c));
            (left != right).then(|| {
                let idx = w.iter().flat_map(|g| [g.kind as usize, g.index(), g.copy()]).collect();
                Failure::new("weyl_associativity", idx, &left, &right)
            })
        })
        .collect();
    CheckReport::from_results("weyl_associativity", results)
}

/// Splits the copies into `1..=nu` and `nu+1..=N`; the partial sums `M`, `Mt`
/// satisfy the reflection equation each and the braided cross relation
/// `R M R Mt = Mt R M R`, and add up to `Ltilde`.
pub fn split_realization(alg: &WeylAlgebra, nu: usize) -> Result<Vec<CheckReport>> {
    let n = alg.rank();
    let copies = alg.config().copies;
    if nu == 0 || nu >= copies {
        return Err(Error::Invalid(format!("split point must satisfy 1 <= nu < N, got nu={nu}, N={copies}")));
    }
    let m = alg.partial_ltilde(1..=nu);
    let mt = alg.partial_ltilde(nu + 1..=copies);
    let r = r_matrix(n);
    let cross: Vec<Option<Failure>> = tuples(n, 4)
        .par_iter()
        .map(|t| {
            let idx = idx4(t);
            let e = outer_r(&r, &m, &mt, idx).sub(&inner_r(&r, &mt, &m, idx));
            let res = alg.normal_form(&e);
            (!res.is_zero()).then(|| Failure::residual("split_cross", t.clone(), &res))
        })
        .collect();
    let mut sum = CheckReport::new("split_sum");
    let l = alg.ltilde();
    for i in 1..=n {
        for j in 1..=n {
            let s: WeylElement = m.get(i, j).add(mt.get(i, j));
            sum.record((&s != l.get(i, j)).then(|| Failure::new("split_sum", vec![i, j], &s, l.get(i, j))));
        }
    }
    Ok(vec![
        reflection_report(alg, "split_first", &m),
        reflection_report(alg, "split_second", &mt),
        CheckReport::from_results("split_cross", cross),
        sum,
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylSuite {
    Reflection,
    Associativity,
    Zhelobenko,
    Variants,
    Split,
    All,
}

impl std::str::FromStr for WeylSuite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "reflection" => Self::Reflection,
            "associativity" => Self::Associativity,
            "zhelobenko" => Self::Zhelobenko,
            "variants" => Self::Variants,
            "split" => Self::Split,
            "all" => Self::All,
            _ => return Err(Error::Invalid(format!("unknown weyl suite '{s}'"))),
        })
    }
}

/// Runs a group of checks for one configuration. Checks that only make sense
/// for one copy (or several) are skipped otherwise.
pub fn run_suite(config: WeylConfig, suite: WeylSuite) -> Result<Vec<CheckReport>> {
    use WeylSuite::*;
    let alg = WeylAlgebra::new(config)?;
    let bosonic_single = config.statistics == Statistics::Bosonic && config.copies == 1;
    let mut out = Vec::new();
    if matches!(suite, Reflection | All) {
        out.push(check_reflection(&alg));
    }
    if matches!(suite, Associativity | All) {
        out.push(associativity(&alg));
    }
    if matches!(suite, Zhelobenko | All) && config.statistics == Statistics::Bosonic {
        out.extend(verify_zhelobenko(&alg));
        if bosonic_single {
            out.push(mu_consistency(config.n)?);
        }
    }
    if matches!(suite, Variants | All) && bosonic_single {
        out.extend(check_variant_generators(config.n)?);
    }
    if matches!(suite, Split | All) && config.copies >= 2 {
        for nu in 1..config.copies {
            out.extend(split_realization(&alg, nu)?);
        }
    }
    if matches!(suite, Reflection | All) && config.copies >= 2 && config.cross_constant == CrossConstant::Kronecker {
        let other = WeylAlgebra::new(config.with_cross_constant(CrossConstant::AllCopies))?;
        let rep = check_reflection(&other);
        let verdict = if rep.passed() { "passes" } else { "fails" };
        out.push(CheckReport::new("cross_constant_all_copies").note(format!(
            "with the constant on every copy pair the reflection equation {verdict} ({} of {} components nonzero)",
            rep.failures.len(),
            rep.checked
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_small() {
        let w = WeylAlgebra::new(WeylConfig::new(2, 1)).unwrap();
        let r = check_reflection(&w);
        assert_eq!(r.checked, 16);
        assert!(r.passed(), "{:?}", r.failures.first());
    }

    #[test]
    fn associativity_small() {
        for cfg in [WeylConfig::new(2, 1), WeylConfig::new(2, 1).fermionic()] {
            let w = WeylAlgebra::new(cfg).unwrap();
            let r = associativity(&w);
            assert_eq!(r.checked, 64);
            assert!(r.passed(), "{:?}", r.failures.first());
        }
    }

    #[test]
    fn split_requires_interior_point() {
        let w = WeylAlgebra::new(WeylConfig::new(2, 2)).unwrap();
        assert!(split_realization(&w, 2).is_err());
        assert!(split_realization(&w, 0).is_err());
    }
}
