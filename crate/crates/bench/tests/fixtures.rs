use dynred::Coeff;
use dynred_bench::{partial_fractions, root_products};
use num_bigint::BigInt;

#[test]
fn fixtures_are_nonzero() {
    assert!(root_products(3, 8).iter().all(|c| !c.is_zero()));
    assert_eq!(partial_fractions(2, 6).len(), 6);
}

#[test]
fn partial_fraction_sum_matches_pointwise_value() {
    // sum_k (k+1)/(x+k) at x = h~_12 = 7, summed as plain fractions
    let terms = partial_fractions(2, 5);
    let sum = terms.iter().fold(Coeff::zero(2), |acc, c| &acc + c);
    let (mut num, mut den) = (BigInt::from(0), BigInt::from(1));
    for k in 0..5i64 {
        num = num * (7 + k) + (k + 1) * &den;
        den *= 7 + k;
    }
    let (p, q) = sum.eval(&[BigInt::from(9), BigInt::from(2)]).unwrap();
    assert_eq!(p * &den, num * q);
}
