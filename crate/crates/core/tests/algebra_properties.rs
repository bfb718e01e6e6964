//! Random elements beyond the exhaustive degree-3 checks: products are
//! associative, normal forms are idempotent and the product respects the
//! weight grading.

use dynred::algebra::{word_weight, Element, Generator};
use dynred::dra::{DraAlgebra, DraConfig};
use dynred::weyl::{WeylAlgebra, WeylConfig, WeylGenerator};
use dynred::Coeff;
use proptest::prelude::*;

/// A short random element: up to three words of length up to `len`, with
/// coefficients `c` or `c/(h~_12 + k)`.
fn element<G: Generator>(gens: Vec<G>, n: usize, len: usize) -> impl Strategy<Value = Element<G>> {
    let term = (
        prop::collection::vec(prop::sample::select(gens), 0..=len),
        -2i64..=2,
        prop::option::of(-2i64..=2),
    );
    prop::collection::vec(term, 1..=3).prop_map(move |terms| {
        let mut e = Element::zero(n);
        for (w, c, pole) in terms {
            let mut f = Coeff::integer(n, c);
            if let Some(k) = pole {
                f = f.checked_div(&(&Coeff::h_diff(n, 1, 2) + &Coeff::integer(n, k))).unwrap();
            }
            e = e.add(&Element::monomial(n, &w, f));
        }
        e
    })
}

fn weyl(n: usize, copies: usize, fermionic: bool) -> WeylAlgebra {
    let mut cfg = WeylConfig::new(n, copies);
    if fermionic {
        cfg = cfg.fermionic();
    }
    WeylAlgebra::new(cfg).unwrap()
}

fn triple<G: Generator>(gens: Vec<G>, n: usize) -> impl Strategy<Value = [Element<G>; 3]> {
    prop::array::uniform3(element(gens, n, 2))
}

fn check_weyl(alg: &WeylAlgebra, [a, b, c]: [Element<WeylGenerator>; 3]) -> Result<(), TestCaseError> {
    let left = alg.product(&alg.product(&a, &b), &c);
    let right = alg.product(&a, &alg.product(&b, &c));
    prop_assert_eq!(&left, &right);
    prop_assert_eq!(alg.normal_form(&left), left);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_product_is_associative(abc in triple(WeylConfig::new(2, 2).generators(), 2)) {
        check_weyl(&weyl(2, 2, false), abc)?;
    }

    #[test]
    fn fermionic_product_is_associative(abc in triple(WeylConfig::new(2, 2).generators(), 2)) {
        check_weyl(&weyl(2, 2, true), abc)?;
    }

    #[test]
    fn weyl_rank_three_is_associative(abc in triple(WeylConfig::new(3, 1).generators(), 3)) {
        check_weyl(&weyl(3, 1, false), abc)?;
    }

    #[test]
    fn dra_product_is_associative(
        [a, b, c] in triple(DraConfig::new(2).with_copies(2).generators(), 2)
    ) {
        let alg = DraAlgebra::new(DraConfig::new(2).with_copies(2)).unwrap();
        let left = alg.product(&alg.product(&a, &b), &c);
        let right = alg.product(&a, &alg.product(&b, &c));
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(alg.normal_form(&left), left);
    }

    #[test]
    fn normal_form_preserves_weight(w in prop::collection::vec(prop::sample::select(DraConfig::new(3).generators()), 0..=3)) {
        let alg = DraAlgebra::single(3).unwrap();
        let weight = word_weight(&w);
        let nf = alg.normal_form(&Element::monomial(3, &w, Coeff::one(3)));
        for (v, _) in nf.terms() {
            prop_assert_eq!(word_weight(v), weight.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // total degree at most 3: some degree-4 normal forms at rank three take
    // minutes, see the limits in the README
    #[test]
    fn dra_rank_three_is_associative(
        a in element(DraConfig::new(3).generators(), 3, 1),
        b in element(DraConfig::new(3).generators(), 3, 1),
        c in element(DraConfig::new(3).generators(), 3, 1),
    ) {
        let alg = DraAlgebra::single(3).unwrap();
        let left = alg.product(&alg.product(&a, &b), &c);
        let right = alg.product(&a, &alg.product(&b, &c));
        prop_assert_eq!(left, right);
    }
}
