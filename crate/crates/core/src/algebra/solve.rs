use std::collections::BTreeMap;

use super::{Element, Generator, Measure, MeasureFn, Word};
use crate::coeffs::Coeff;
use crate::error::{Error, Result};

type Key<G> = (Measure, Word<G>);

/// Row-reduces a list of relations (each `= 0`) with columns ordered by
/// `measure`, largest first. Returns, for every pivot word, the element it
/// equals: `pivot = -(rest of its reduced row)`.
///
/// The reduced echelon form is unique, so the result does not depend on the
/// order of `relations`.
pub fn solve_relations<G: Generator>(
    rank: usize,
    relations: &[Element<G>],
    measure: &MeasureFn<G>,
) -> Result<BTreeMap<Word<G>, Element<G>>> {
    let keyed = |e: &Element<G>| -> BTreeMap<Key<G>, Coeff> {
        e.terms()
            .map(|(w, c)| ((measure(w), w.clone()), c.clone()))
            .collect()
    };
    let mut pivots: BTreeMap<Key<G>, BTreeMap<Key<G>, Coeff>> = BTreeMap::new();
    for rel in relations {
        let mut row = keyed(rel);
        // eliminate known pivots; pivot rows never contain other pivot words
        let present: Vec<Key<G>> = row.keys().filter(|k| pivots.contains_key(*k)).cloned().collect();
        for p in present {
            let Some(f) = row.get(&p).cloned() else { continue };
            axpy(&mut row, &-&f, &pivots[&p]);
        }
        let Some((pkey, pc)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            continue;
        };
        let inv = pc.inv()?;
        let row: BTreeMap<Key<G>, Coeff> = row.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        for other in pivots.values_mut() {
            if let Some(f) = other.get(&pkey).cloned() {
                axpy(other, &-&f, &row);
            }
        }
        pivots.insert(pkey, row);
    }
    let mut out = BTreeMap::new();
    for ((_, pw), row) in pivots {
        let rhs = Element::from_terms(
            rank,
            row.into_iter()
                .filter(|((_, w), _)| *w != pw)
                .map(|((_, w), c)| (w, -c)),
        );
        out.insert(pw, rhs);
    }
    Ok(out)
}

fn axpy<G: Generator>(row: &mut BTreeMap<Key<G>, Coeff>, f: &Coeff, other: &BTreeMap<Key<G>, Coeff>) {
    for (k, c) in other {
        let add = f * c;
        match row.get_mut(k) {
            Some(v) => {
                let s = &*v + &add;
                if s.is_zero() {
                    row.remove(k);
                } else {
                    *v = s;
                }
            }
            None => {
                if !add.is_zero() {
                    row.insert(k.clone(), add);
                }
            }
        }
    }
}

/// Checks that the pivots are exactly `expected`, reporting the first mismatch.
pub(crate) fn expect_pivots<G: Generator>(
    pivots: &BTreeMap<Word<G>, Element<G>>,
    expected: &[Word<G>],
) -> Result<()> {
    for w in expected {
        if !pivots.contains_key(w) {
            return Err(Error::Singular(format!(
                "no relation has leading word {}",
                fmt_word(w)
            )));
        }
    }
    if pivots.len() != expected.len() {
        let extra = pivots
            .keys()
            .find(|w| !expected.contains(w))
            .map(|w| fmt_word(w))
            .unwrap_or_default();
        return Err(Error::Singular(format!(
            "unexpected leading word {extra} ({} pivots, {} expected)",
            pivots.len(),
            expected.len()
        )));
    }
    Ok(())
}

pub(crate) fn fmt_word<G: Generator>(w: &[G]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}
