use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::central::check_central;
use super::transforms::generator_transforms;
use super::{cross_components, reflection_components, DraAlgebra, DraConfig, DraElement, DraGenerator};
use crate::algebra::{inner_r, lin_left, lin_right, outer_r, reflection_residual, Element, Matrix};
use crate::coeffs::Coeff;
use crate::error::{Error, Result};
use crate::report::{CheckReport, Failure};
use crate::rmatrix::r_matrix;
use crate::util::tuples;
use crate::weyl::{CrossConstant, WeylAlgebra, WeylConfig};

/// Seed for the sampled associativity check.
pub const SAMPLE_SEED: u64 = 0x5eed_d1a6;

fn zero_report(identity: &str, comps: Vec<([usize; 4], DraElement)>, nf: impl Fn(&DraElement) -> DraElement + Sync) -> CheckReport {
    let results: Vec<Option<Failure>> = comps
        .par_iter()
        .map(|(idx, e)| {
            let res = nf(e);
            (!res.is_zero()).then(|| Failure::residual(identity, idx.to_vec(), &res))
        })
        .collect();
    CheckReport::from_results(identity, results)
}

/// Substituting the rules back: every component of every defining matrix
/// relation normal-orders to zero.
pub fn check_reflection(alg: &DraAlgebra) -> Vec<CheckReport> {
    let copies = alg.config().copies;
    let mats: Vec<_> = (1..=copies).map(|c| alg.matrix(c)).collect();
    let nf = |e: &DraElement| alg.normal_form(e);
    let mut out = Vec::new();
    let mut comps = Vec::new();
    for m in &mats {
        comps.extend(reflection_components(m));
    }
    out.push(zero_report("dra_reflection", comps, nf));
    if copies > 1 {
        let mut comps = Vec::new();
        for a in 0..mats.len() {
            for b in a + 1..mats.len() {
                comps.extend(cross_components(&mats[a], &mats[b]));
            }
        }
        out.push(zero_report("dra_cross", comps, nf));
    }
    out
}

/// `nf(nf(ab) c) = nf(a nf(bc))` over generator triples: all of them when
/// `sample` is `None`, otherwise that many drawn with a fixed seed.
pub fn associativity(alg: &DraAlgebra, sample: Option<usize>) -> CheckReport {
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
    if let Some(k) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        triples.shuffle(&mut rng);
        triples.truncate(k);
    }
    let results: Vec<Option<Failure>> = triples
        .par_iter()
        .map(|w| {
            let [a, b, c] = w.map(|g| Element::gen(n, g));
            let left = alg.product(&alg.product(&a, &b), &c);
            let right = alg.product(&a, &alg.product(&b, &c));
            (left != right).then(|| {
                let idx = w.iter().flat_map(|g| [g.copy as usize, g.i as usize, g.j as usize]).collect();
                Failure::new("dra_associativity", idx, &left, &right)
            })
        })
        .collect();
    CheckReport::from_results("dra_associativity", results)
}

fn h_matrix_elements(n: usize) -> Matrix<DraGenerator> {
    Matrix::from_fn(n, |i, j| {
        if i == j {
            Element::scalar(n, &Coeff::h(n, j) + &Coeff::integer(n, n as i64))
        } else {
            Element::zero(n)
        }
    })
}

/// `H = diag(h~_j + n)` satisfies the reflection equation; a pure
/// coefficient identity.
pub fn check_h_realization(n: usize) -> CheckReport {
    let h = h_matrix_elements(n);
    let r = r_matrix(n);
    let comps = tuples(n, 4)
        .into_iter()
        .map(|t| {
            let idx = [t[0], t[1], t[2], t[3]];
            (idx, reflection_residual(&r, &h, idx))
        })
        .collect();
    zero_report("h_reflection", comps, DraElement::clone)
}

/// `R L R H + R H R L - L R H R - H R L R = 2 R L - 2 L R` for a formal
/// matrix of weight-graded symbols, checked in the free algebra.
pub fn check_mixed_identity(n: usize) -> CheckReport {
    let h = h_matrix_elements(n);
    let l = super::generator_matrix(n, 1);
    let r = r_matrix(n);
    let two = Coeff::integer(n, 2);
    let comps = tuples(n, 4)
        .into_iter()
        .map(|t| {
            let idx = [t[0], t[1], t[2], t[3]];
            let e = outer_r(&r, &l, &h, idx)
                .add(&outer_r(&r, &h, &l, idx))
                .sub(&inner_r(&r, &l, &h, idx))
                .sub(&inner_r(&r, &h, &l, idx))
                .sub(&lin_left(&r, &l, idx).scale(&two))
                .add(&lin_right(&r, &l, idx).scale(&two));
            (idx, e)
        })
        .collect();
    zero_report("mixed_identity", comps, DraElement::clone)
}

/// Substitutes generator images given per copy.
fn map_copies(e: &DraElement, image: &dyn Fn(DraGenerator) -> DraElement) -> DraElement {
    e.substitute(Coeff::clone, image)
}

/// The braided coproduct `L -> M + Mt`: its image satisfies the reflection
/// equation in two copies, and the two iterated coproducts into three copies
/// agree on generators and on all quadratic words.
pub fn coproduct_check(n: usize) -> Result<Vec<CheckReport>> {
    let one = DraAlgebra::single(n)?;
    let two = DraAlgebra::new(DraConfig::new(n).with_copies(2))?;
    let three = DraAlgebra::new(DraConfig::new(n).with_copies(3))?;
    let sum = Matrix::from_fn(n, |i, j| two.gen(1, i, j).add(&two.gen(2, i, j)));
    let reflection = zero_report("coproduct_reflection", reflection_components(&sum), |e| two.normal_form(e));

    let delta = |g: DraGenerator| two.gen(1, g.i as usize, g.j as usize).add(&two.gen(2, g.i as usize, g.j as usize));
    let left = |g: DraGenerator| match g.copy {
        1 => three.gen(1, g.i as usize, g.j as usize).add(&three.gen(2, g.i as usize, g.j as usize)),
        _ => three.gen(3, g.i as usize, g.j as usize),
    };
    let right = |g: DraGenerator| match g.copy {
        1 => three.gen(1, g.i as usize, g.j as usize),
        _ => three.gen(2, g.i as usize, g.j as usize).add(&three.gen(3, g.i as usize, g.j as usize)),
    };
    let gens = one.config().generators();
    let mut words: Vec<Vec<DraGenerator>> = gens.iter().map(|&g| vec![g]).collect();
    for &a in &gens {
        for &b in &gens {
            words.push(vec![a, b]);
        }
    }
    let results: Vec<Option<Failure>> = words
        .par_iter()
        .map(|w| {
            let e = Element::monomial(n, w, Coeff::one(n));
            let d = two.normal_form(&map_copies(&e, &delta));
            let l = three.normal_form(&map_copies(&d, &left));
            let r = three.normal_form(&map_copies(&d, &right));
            (l != r).then(|| {
                let idx = w.iter().flat_map(|g| [g.i as usize, g.j as usize]).collect();
                Failure::new("coassociativity", idx, &l, &r)
            })
        })
        .collect();
    let mut coassoc = CheckReport::from_results("coassociativity", results);
    // on generators both iterates are M + Mt + Mtt
    for i in 1..=n {
        for j in 1..=n {
            let e = three.gen(1, i, j).add(&three.gen(2, i, j)).add(&three.gen(3, i, j));
            let d = map_copies(&delta(DraGenerator::l(i, j)), &left);
            coassoc.record((d != e).then(|| Failure::new("coassociativity", vec![i, j], &d, &e)));
        }
    }
    Ok(vec![reflection, coassoc])
}

const H: &str = "(h1-h2)";

fn printed(text: &str) -> String {
    text.replace('h', H).replace("(h1-h2)1", "h1").replace("(h1-h2)2", "h2")
}

/// The six printed ordering relations for `n = 2`, `lhs = rhs` with
/// `h = h~_12`.
pub const ORDERING_RELATIONS: [(&str, &str); 6] = [
    ("L[1,1]*L[1,2]", "(h-3)/(h-2)*L[1,2]*L[1,1] + 1/(h-2)*L[1,2]*L[2,2] + L[1,2]"),
    (
        "L[2,2]*L[1,2]",
        "(h-3)/((h-2)*(h+1))*L[1,2]*L[1,1] + (h-1)^2/((h-2)*(h+1))*L[1,2]*L[2,2] - (h-1)/(h+1)*L[1,2]",
    ),
    (
        "L[1,1]*L[2,1]",
        "(h+1)^2/((h-1)*(h+2))*L[2,1]*L[1,1] - (h+3)/((h-1)*(h+2))*L[2,1]*L[2,2] - (h+1)/(h-1)*L[2,1]",
    ),
    ("L[2,2]*L[2,1]", "-1/(h+2)*L[2,1]*L[1,1] + (h+3)/(h+2)*L[2,1]*L[2,2] + L[2,1]"),
    ("L[1,1]*L[2,2]", "L[2,2]*L[1,1]"),
    ("L[1,2]*L[2,1]", "L[2,1]*L[1,2] - 1/h*(L[1,1]-L[2,2])^2 + L[1,1] - L[2,2]"),
];

/// The printed relations between two copies of `Diff_h(2)`: left side,
/// homogeneous right side, printed constant. Copy 2 is the primed copy.
pub const CROSS_RELATIONS: [(&str, &str, i64); 12] = [
    ("x[1,1]*x[2,2]", "1/h*x[1,2]*x[2,1] + (h^2-1)/h^2*x[2,2]*x[1,1]", 0),
    ("x[2,1]*x[1,2]", "x[1,2]*x[2,1] - 1/h*x[2,2]*x[1,1]", 0),
    ("x[1,1]*x[1,2]", "x[1,2]*x[1,1]", 0),
    ("x[2,1]*x[2,2]", "x[2,2]*x[2,1]", 0),
    ("D[1,1]*D[2,2]", "-1/h*D[1,2]*D[2,1] + (h^2-1)/h^2*D[2,2]*D[1,1]", 0),
    ("D[2,1]*D[1,2]", "D[1,2]*D[2,1] + 1/h*D[2,2]*D[1,1]", 0),
    ("D[1,1]*D[1,2]", "D[1,2]*D[1,1]", 0),
    ("D[2,1]*D[2,2]", "D[2,2]*D[2,1]", 0),
    ("x[1,1]*D[2,2]", "D[2,2]*x[1,1]", 0),
    ("x[2,1]*D[1,2]", "h*(h+2)/(h+1)^2*D[1,2]*x[2,1]", 0),
    ("x[1,1]*D[1,2]", "D[1,2]*x[1,1] + 1/(1-h)*D[2,2]*x[2,1]", -1),
    ("x[2,1]*D[2,2]", "1/(1+h)*D[1,2]*x[1,1] + D[2,2]*x[2,1]", -1),
];

/// Regression against the printed rank-two tables: the six ordering
/// relations, the cross-copy exchange relations of `Diff_h(2, 2)` (homogeneous
/// parts, and the constant under both conventions), and the closed form of
/// the central elements for powers `1..=4`.
pub fn appendix_check() -> Result<Vec<CheckReport>> {
    let n = 2;
    let alg = DraAlgebra::single(n)?;
    let mut ordering = CheckReport::new("appendix_ordering");
    for (k, (lhs, rhs)) in ORDERING_RELATIONS.iter().enumerate() {
        let got = alg.normal_form(&alg.parse(lhs)?);
        let expect = alg.normal_form(&alg.parse(&printed(rhs))?);
        ordering.record((got != expect).then(|| Failure::new("appendix_ordering", vec![k + 1], &got, &expect)));
        // the left side is exactly one rule
        let mut w = alg.parse(lhs)?.into_terms().into_keys();
        let word = w.next().expect("one word");
        let rule = alg.rule(word[0], word[1]);
        ordering.record(
            (rule != Some(&got)).then(|| Failure::new("appendix_ordering", vec![k + 1, 0], lhs, "a rewrite rule")),
        );
    }

    let kron = WeylAlgebra::new(WeylConfig::new(2, 2))?;
    let all = WeylAlgebra::new(WeylConfig::new(2, 2).with_cross_constant(CrossConstant::AllCopies))?;
    let mut homogeneous = CheckReport::new("appendix_cross_homogeneous");
    let mut constant = CheckReport::new("appendix_cross_constant");
    let mut mismatched = 0;
    for (k, (lhs, rhs, c)) in CROSS_RELATIONS.iter().enumerate() {
        for (alg, conv) in [(&kron, 0usize), (&all, 1)] {
            let diff = alg.normal_form(&alg.parse(lhs)?.sub(&alg.parse(&printed(rhs))?));
            // the homogeneous parts agree: only a constant may remain
            homogeneous.record(
                (!diff.is_scalar()).then(|| Failure::residual("appendix_cross_homogeneous", vec![k + 1, conv], &diff)),
            );
            let got = diff.scalar_part();
            if conv == 1 {
                let ok = got == Coeff::integer(n, *c);
                constant.record((!ok).then(|| Failure::new("appendix_cross_constant", vec![k + 1], &got, c)));
            } else if got != Coeff::integer(n, *c) {
                mismatched += 1;
            }
        }
    }
    let refl_kron = crate::weyl::check_reflection(&kron);
    let refl_all = crate::weyl::check_reflection(&all);
    constant.record(
        (!refl_kron.passed()).then(|| Failure::new("appendix_cross_constant", vec![0], "reflection fails", "kronecker convention passes")),
    );
    constant.notes.push(format!(
        "printed constants differ from the kronecker convention in {mismatched} of {} cross relations",
        CROSS_RELATIONS.len()
    ));
    constant.notes.push(format!(
        "kronecker convention: reflection equation for Ltilde {} ({} of {} components nonzero)",
        if refl_kron.passed() { "holds" } else { "fails" },
        refl_kron.failures.len(),
        refl_kron.checked
    ));
    constant.notes.push(format!(
        "constant on every copy pair (printed): reflection equation for Ltilde {} ({} of {} components nonzero)",
        if refl_all.passed() { "holds" } else { "fails" },
        refl_all.failures.len(),
        refl_all.checked
    ));
    constant.notes.push(format!(
        "adopted: {}",
        if refl_kron.passed() && !refl_all.passed() { "kronecker" } else { "undecided" }
    ));

    let mut central = CheckReport::new("appendix_central");
    let l = alg.matrix(1);
    for power in 1..=4u32 {
        let lp = super::matrix_power(&alg, &l, power);
        let a = Coeff::parse(&printed("(h-1)/h"), n)?;
        let b = Coeff::parse(&printed("(h+1)/h"), n)?;
        let expect = alg.normal_form(&lp.get(1, 1).scale(&a).add(&lp.get(2, 2).scale(&b)));
        let got = super::central_element(&alg, power);
        let (gs, es) = (got.to_string(), expect.to_string());
        central.record((gs != es).then(|| Failure::new("appendix_central", vec![power as usize], gs, es)));
    }
    Ok(vec![ordering, homogeneous, constant, central])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DraSuite {
    Reflection,
    Associativity,
    Central,
    Coproduct,
    Appendix,
    Transforms,
    Realization,
    All,
}

impl std::str::FromStr for DraSuite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "reflection" => Self::Reflection,
            "associativity" => Self::Associativity,
            "central" => Self::Central,
            "coproduct" => Self::Coproduct,
            "appendix" => Self::Appendix,
            "transforms" => Self::Transforms,
            "realization" => Self::Realization,
            "all" => Self::All,
            _ => return Err(Error::Invalid(format!("unknown dra suite '{s}'"))),
        })
    }
}

/// Runs a group of checks at rank `n` with `copies` braided copies; central
/// elements are checked for powers `1..=max_power`.
pub fn run_suite(n: usize, copies: usize, suite: DraSuite, max_power: u32) -> Result<Vec<CheckReport>> {
    use DraSuite::*;
    if suite == Appendix && n != 2 {
        return Err(Error::Invalid("the appendix suite is defined for n = 2 only".into()));
    }
    let alg = DraAlgebra::new(DraConfig::new(n).with_copies(copies))?;
    let mut out = Vec::new();
    if matches!(suite, Reflection | All) {
        out.extend(check_reflection(&alg));
    }
    if matches!(suite, Associativity | All) {
        let total = alg.config().generators().len().pow(3);
        let sample = (total > 4096 || n >= 3).then_some(200);
        out.push(associativity(&alg, sample));
    }
    if matches!(suite, Central | All) {
        let single = if copies == 1 { None } else { Some(DraAlgebra::single(n)?) };
        let a = single.as_ref().unwrap_or(&alg);
        for p in 1..=max_power {
            for mut r in check_central(a, p) {
                r.identity = format!("{}_power{p}", r.identity);
                for f in &mut r.failures {
                    f.identity = r.identity.clone();
                }
                out.push(r);
            }
        }
    }
    if matches!(suite, Coproduct | All) {
        out.extend(coproduct_check(n)?);
    }
    if matches!(suite, Transforms | All) {
        out.extend(generator_transforms(n));
    }
    if matches!(suite, Realization | All) {
        out.push(check_h_realization(n));
        out.push(check_mixed_identity(n));
    }
    if suite == Appendix || (suite == All && n == 2) {
        out.extend(appendix_check()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_substitution() {
        assert_eq!(printed("1/(h-2)"), "1/((h1-h2)-2)");
    }

    #[test]
    fn rank_two_round_trip() {
        let a = DraAlgebra::single(2).unwrap();
        for r in check_reflection(&a) {
            assert_eq!(r.checked, 16);
            assert!(r.passed(), "{:?}", r.failures.first());
        }
    }

    #[test]
    fn h_and_mixed_small() {
        for n in 1..=3 {
            assert!(check_h_realization(n).passed());
            assert!(check_mixed_identity(n).passed());
        }
    }

    #[test]
    fn sampled_associativity_is_deterministic() {
        let a = DraAlgebra::single(2).unwrap();
        let r1 = associativity(&a, Some(10));
        let r2 = associativity(&a, Some(10));
        assert_eq!(r1, r2);
        assert_eq!(r1.checked, 10);
    }
}
