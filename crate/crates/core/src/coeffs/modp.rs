//! Univariate polynomials over a small prime field, just enough for Rabin's
//! irreducibility test.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Primes used for irreducibility certificates.
pub(crate) const PRIMES: [u64; 16] = [
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Coefficients lowest first, no trailing zeros.
type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn rem(mut a: Fp, f: &[u64], p: u64) -> Fp {
    let d = f.len() - 1;
    let lead_inv = inv_mod(f[d], p);
    while a.len() > d {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            for (k, fk) in f.iter().enumerate() {
                let idx = top - d + k;
                a[idx] = (a[idx] + p - c * fk % p) % p;
            }
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(trim(out), f, p)
}

fn pow_mod(a: &[u64], mut e: u64, f: &[u64], p: u64) -> Fp {
    let mut acc: Fp = vec![1];
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &base, f, p);
        }
        base = mul_mod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn gcd(mut a: Fp, mut b: Fp, p: u64) -> Fp {
    while !b.is_empty() {
        let r = rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= d {
        if d % q == 0 {
            out.push(q);
            while d % q == 0 {
                d /= q;
            }
        }
        q += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Whether the integer polynomial `u` (lowest first) stays of the same degree
/// and is irreducible modulo `p`; if so it is irreducible over the rationals.
pub(crate) fn irreducible_mod(u: &[BigInt], p: u64) -> bool {
    let pb = BigInt::from(p);
    let f: Fp = u
        .iter()
        .map(|c| {
            let r = ((c % &pb) + &pb) % &pb;
            r.to_u64().expect("reduced below p")
        })
        .collect();
    let d = u.len() - 1;
    if d == 0 || f[d] == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Fp = vec![0, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![rem(x.clone(), &f, p)];
    for k in 1..=d {
        let next = pow_mod(&frob[k - 1], p, &f, p);
        frob.push(next);
    }
    if frob[d] != rem(x.clone(), &f, p) {
        return false;
    }
    prime_factors(d).into_iter().all(|q| {
        let mut h = frob[d / q].clone();
        h.resize(h.len().max(2), 0);
        h[1] = (h[1] + p - 1) % p;
        let g = gcd(f.clone(), trim(h), p);
        g.len() == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn known_polynomials() {
        // x^2 + 1 is irreducible mod 103 (103 = 3 mod 4), reducible mod 101
        assert!(irreducible_mod(&ints(&[1, 0, 1]), 103));
        assert!(!irreducible_mod(&ints(&[1, 0, 1]), 101));
        // (x^2 + 1)^2 never passes
        for p in PRIMES {
            assert!(!irreducible_mod(&ints(&[1, 0, 2, 0, 1]), p));
        }
        // x^4 + 1 is reducible modulo every prime
        for p in PRIMES {
            assert!(!irreducible_mod(&ints(&[1, 0, 0, 0, 1]), p));
        }
        // x^5 - x - 1 is irreducible over Q; some prime certifies it
        assert!(PRIMES.iter().any(|&p| irreducible_mod(&ints(&[-1, -1, 0, 0, 0, 1]), p)));
        // leading coefficient vanishing mod p is rejected
        assert!(!irreducible_mod(&ints(&[1, 1, 101]), 101));
    }

    #[test]
    fn agrees_with_factor_counting_for_small_quadratics() {
        // x^2 + a x + b over F_p is irreducible iff a^2 - 4b is a non-residue
        let p = 103u64;
        for a in 0..10i64 {
            for b in 1..10i64 {
                let disc = ((a * a - 4 * b) % p as i64 + p as i64) as u64 % p;
                let residue = disc == 0 || (1..p).any(|y| y * y % p == disc);
                assert_eq!(irreducible_mod(&ints(&[b, a, 1]), p), !residue, "a={a} b={b}");
            }
        }
    }
}
