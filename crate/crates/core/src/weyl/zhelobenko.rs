//! The Zhelobenko automorphisms `q_i` acting on `Diff_h(n, N)` through their
//! values on generators. Coefficients are twisted by the simple reflection
//! `s_i` (swap `h~_i` and `h~_{i+1}`).

use rayon::prelude::*;

use super::{relations, Kind, WeylAlgebra, WeylElement, WeylGenerator};
use crate::algebra::Element;
use crate::coeffs::Coeff;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Failure};

fn h_pair(n: usize, i: usize) -> Coeff {
    Coeff::h_diff(n, i, i + 1)
}

/// `q_i` on a single generator, in normal form.
fn generator_image(n: usize, i: usize, g: WeylGenerator) -> WeylElement {
    let h = h_pair(n, i);
    let one = Coeff::one(n);
    let k = g.index();
    let coeff = match (g.kind, k) {
        (Kind::X, k) if k == i => -(&(&h + &one).checked_div(&h).expect("h~ is nonzero")),
        (Kind::D, k) if k == i => -(&(&h - &one).checked_div(&h).expect("h~ is nonzero")),
        _ => one,
    };
    let target = if k == i {
        i + 1
    } else if k == i + 1 {
        i
    } else {
        k
    };
    Element::monomial(n, &[g.with_index(target)], coeff)
}

/// `q_i(e)`, normal ordered.
pub fn zhelobenko(alg: &WeylAlgebra, i: usize, e: &WeylElement) -> Result<WeylElement> {
    let n = alg.rank();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            what: "zhelobenko index",
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let image = e.substitute(|c| c.reflect(i), |g| generator_image(n, i, g));
    Ok(alg.normal_form(&image))
}

fn q(alg: &WeylAlgebra, i: usize, e: &WeylElement) -> WeylElement {
    zhelobenko(alg, i, e).expect("index checked by caller")
}

/// Images of every defining relation under every `q_i` vanish, the braid
/// relation holds on generators, and the action on the normal-ordered
/// Cartan-type elements matches the adjoint `sl_2` formulas. The square
/// `q_i^2` on generators is reported as a note.
pub fn verify_zhelobenko(alg: &WeylAlgebra) -> Vec<CheckReport> {
    let n = alg.rank();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let rels = relations(alg.config());
    let jobs: Vec<(usize, usize)> = (1..n).flat_map(|i| (0..rels.len()).map(move |r| (i, r))).collect();
    let results: Vec<Option<Failure>> = jobs
        .par_iter()
        .map(|&(i, r)| {
            let res = q(alg, i, &rels[r]);
            (!res.is_zero()).then(|| Failure::residual("zhelobenko_relation", vec![i, r], &res))
        })
        .collect();
    out.push(CheckReport::from_results("zhelobenko_relation", results));

    let gens = alg.config().generators();
    if n >= 3 {
        let mut braid = CheckReport::new("zhelobenko_braid");
        for i in 1..n - 1 {
            for &g in &gens {
                let e = Element::gen(n, g);
                let lhs = q(alg, i, &q(alg, i + 1, &q(alg, i, &e)));
                let rhs = q(alg, i + 1, &q(alg, i, &q(alg, i + 1, &e)));
                let mut idx = vec![i, g.index(), g.copy()];
                idx.push(matches!(g.kind, Kind::D) as usize);
                braid.record((lhs != rhs).then(|| Failure::new("zhelobenko_braid", idx, &lhs, &rhs)));
            }
        }
        out.push(braid);
    }

    out.push(check_adjoint_images(alg));

    let mut square = CheckReport::new("zhelobenko_square");
    for i in 1..n {
        for &g in &gens {
            if g.index() != i && g.index() != i + 1 {
                continue;
            }
            let e = Element::gen(n, g);
            let sq = q(alg, i, &q(alg, i, &e));
            square.checked += 1;
            square.notes.push(format!("q{i}^2({g}) = {sq}"));
        }
    }
    out.push(square);
    out
}

/// The normal-ordered elements `N_i = :x^i d_i:` (one copy pair `(a, b)`),
/// obtained by inverting the triangular expansion
/// `x^i * d_i = N_i - sum_{m>i} N_m / (h~_im phi_im)` with `d_i = Dbar_i / phi_i`.
pub fn adjoint_cartan(alg: &WeylAlgebra, a: usize, b: usize) -> Vec<WeylElement> {
    let n = alg.rank();
    let mut out: Vec<WeylElement> = vec![Element::zero(n); n + 1];
    for i in (1..=n).rev() {
        let phi_inv = crate::coeffs::phi(i, n).inv().expect("phi is a unit");
        let mut e = alg.product(&alg.x(i, a), &alg.d(i, b).scale_right(&phi_inv));
        for m in i + 1..=n {
            let seg = crate::coeffs::special(crate::coeffs::Special::PhiSeg(i, m), n).expect("i < m");
            let c = (&Coeff::h_diff(n, i, m) * &seg).inv().expect("nonzero");
            e = e.add(&out[m].scale(&c));
        }
        out[i] = e;
    }
    out.remove(0);
    out
}

fn check_adjoint_images(alg: &WeylAlgebra) -> CheckReport {
    let n = alg.rank();
    let mut rep = CheckReport::new("zhelobenko_adjoint");
    let copies = alg.config().copies;
    let one = Coeff::one(n);
    for a in 1..=copies {
        for b in 1..=copies {
            let nn = adjoint_cartan(alg, a, b);
            for i in 1..n {
                let h = h_pair(n, i);
                let hm1 = &h - &one;
                let p = h.checked_div(&hm1).expect("nonzero");
                let m = -(&one.checked_div(&hm1).expect("nonzero"));
                for j in 1..=n {
                    let expect = if j == i {
                        nn[i - 1].scale(&m).add(&nn[i].scale(&p))
                    } else if j == i + 1 {
                        nn[i - 1].scale(&p).add(&nn[i].scale(&m))
                    } else {
                        nn[j - 1].clone()
                    };
                    let got = q(alg, i, &nn[j - 1]);
                    rep.record(
                        (got != expect).then(|| Failure::new("zhelobenko_adjoint", vec![i, j, a, b], &got, &expect)),
                    );
                }
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylConfig;

    #[test]
    fn images_of_generators() {
        let w = WeylAlgebra::new(WeylConfig::new(2, 1)).unwrap();
        let got = zhelobenko(&w, 1, &w.x(1, 1)).unwrap();
        assert_eq!(got, w.parse("-x[2,1]*(h1-h2)/(h1-h2-1)").unwrap());
        let got = zhelobenko(&w, 1, &w.d(1, 1)).unwrap();
        assert_eq!(got, w.parse("-(h1-h2-1)/(h1-h2)*D[2,1]").unwrap());
        let w4 = WeylAlgebra::new(WeylConfig::new(4, 1)).unwrap();
        assert_eq!(zhelobenko(&w4, 1, &w4.x(3, 1)).unwrap(), w4.x(3, 1));
        assert!(zhelobenko(&w, 2, &w.x(1, 1)).is_err());
    }

    #[test]
    fn coefficients_are_twisted() {
        let w = WeylAlgebra::new(WeylConfig::new(2, 1)).unwrap();
        let e = w.parse("h1*x[2,1]").unwrap();
        assert_eq!(zhelobenko(&w, 1, &e).unwrap(), w.parse("h2*x[1,1]").unwrap());
    }

    #[test]
    fn rank_two_suite() {
        let w = WeylAlgebra::new(WeylConfig::new(2, 1)).unwrap();
        for r in verify_zhelobenko(&w) {
            assert!(r.passed(), "{}: {:?}", r.identity, r.failures.first());
        }
    }
}
