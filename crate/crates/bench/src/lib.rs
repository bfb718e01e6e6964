//! Fixtures shared by the benches in `benches/`.

use dynred::Coeff;

/// Products of shifted roots `h~_ij + k` over a small range of `k`, the
/// shape of denominators met in normal ordering.
pub fn root_products(n: usize, count: usize) -> Vec<Coeff> {
    let mut out = Vec::with_capacity(count);
    let mut k = 0i64;
    while out.len() < count {
        let mut c = Coeff::one(n);
        for i in 1..n {
            let root = &Coeff::h_diff(n, i, i + 1) + &Coeff::integer(n, k % 5 - 2);
            c = &c * &root;
        }
        out.push(c);
        k += 1;
    }
    out
}

/// Sums of fractions `1/(h~_12 + k)` with a common denominator to cancel.
pub fn partial_fractions(n: usize, terms: usize) -> Vec<Coeff> {
    (0..terms as i64)
        .map(|k| {
            let d = &Coeff::h_diff(n, 1, 2) + &Coeff::integer(n, k);
            Coeff::integer(n, k + 1).checked_div(&d).expect("nonzero denominator")
        })
        .collect()
}
