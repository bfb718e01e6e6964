use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use smallvec::SmallVec;

use super::{word_weight, Element, Generator, Word};
use crate::coeffs::{Coeff, WeightVector};
use crate::error::{Error, Result};

/// Termination measure of a word; larger means "less ordered".
pub type Measure = SmallVec<[i64; 8]>;

pub type MeasureFn<G> = Arc<dyn Fn(&[G]) -> Measure + Send + Sync>;

type Rhs<G> = Arc<Vec<(Word<G>, Coeff)>>;

/// Environment variable bounding the number of cached shifted rule bodies.
pub const CACHE_ENV: &str = "DYNRED_COEFF_CACHE_ENTRIES";
const DEFAULT_CACHE_ENTRIES: usize = 1 << 16;

pub(crate) fn cache_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(CACHE_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_CACHE_ENTRIES)
    })
}

/// Quadratic exchange rules `ab -> sum c w` plus the order they decrease.
pub struct RewriteSystem<G: Generator> {
    rank: usize,
    rules: HashMap<(G, G), Rhs<G>>,
    measure: MeasureFn<G>,
    shifted: RwLock<HashMap<(G, G, WeightVector), Rhs<G>>>,
}

impl<G: Generator> RewriteSystem<G> {
    /// Builds the system, rejecting any rule whose right side is not strictly
    /// smaller than its left side.
    pub fn new(
        rank: usize,
        rules: BTreeMap<(G, G), Element<G>>,
        measure: MeasureFn<G>,
    ) -> Result<Self> {
        let mut map = HashMap::new();
        for ((a, b), rhs) in rules {
            let lhs = [a, b];
            let lkey = (measure(&lhs), Word::from_slice(&lhs));
            for (w, _) in rhs.terms() {
                if (measure(w), w.clone()) >= lkey {
                    return Err(Error::OrderViolation(format!(
                        "{a}*{b} -> ... {}",
                        w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
                    )));
                }
            }
            if !rhs.terms().all(|(w, _)| word_weight(w) == a.weight() + b.weight()) {
                return Err(Error::OrderViolation(format!("rule for {a}*{b} is not homogeneous")));
            }
            map.insert(
                (a, b),
                Arc::new(rhs.terms().map(|(w, c)| (w.clone(), c.clone())).collect()),
            );
        }
        Ok(RewriteSystem {
            rank,
            rules: map,
            measure,
            shifted: RwLock::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rule(&self, a: G, b: G) -> Option<Element<G>> {
        self.rules
            .get(&(a, b))
            .map(|r| Element::from_terms(self.rank, r.iter().cloned()))
    }

    /// All rules, sorted by left side.
    pub fn rules(&self) -> Vec<((G, G), Element<G>)> {
        let mut v: Vec<_> = self
            .rules
            .iter()
            .map(|(k, r)| (*k, Element::from_terms(self.rank, r.iter().cloned())))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn measure(&self, w: &[G]) -> Measure {
        (self.measure)(w)
    }

    pub fn is_reducible(&self, w: &[G]) -> bool {
        w.windows(2).any(|p| self.rules.contains_key(&(p[0], p[1])))
    }

    /// Rule body with coefficients shifted by `lam`, memoized.
    fn body(&self, a: G, b: G, lam: WeightVector) -> Rhs<G> {
        let base = &self.rules[&(a, b)];
        if lam.is_zero() {
            return base.clone();
        }
        let key = (a, b, lam);
        if let Some(r) = self.shifted.read().expect("cache lock").get(&key) {
            return r.clone();
        }
        let r: Rhs<G> = Arc::new(
            base.iter()
                .map(|(w, c)| (w.clone(), c.shift(&lam)))
                .collect(),
        );
        let mut cache = self.shifted.write().expect("cache lock");
        if cache.len() >= cache_limit() {
            cache.clear();
        }
        cache.insert(key, r.clone());
        r
    }

    /// Rewrites to normal form. Words are expanded from the largest measure
    /// down, so every word is rewritten once with all contributions collected.
    pub fn normal_form(&self, e: &Element<G>) -> Element<G> {
        let mut pending: BTreeMap<(Measure, Word<G>), Coeff> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<(Measure, Word<G>), Coeff>, w: Word<G>, c: Coeff| {
            let key = (self.measure(&w), w);
            match pending.entry(key) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let s = o.get() + &c;
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        };
        for (w, c) in e.terms() {
            push(&mut pending, w.clone(), c.clone());
        }
        let mut out = Element::zero(self.rank.max(e.rank()));
        while let Some(((_, w), c)) = pending.pop_last() {
            let pos = w
                .windows(2)
                .position(|p| self.rules.contains_key(&(p[0], p[1])));
            let Some(pos) = pos else {
                out.add_term(w, c);
                continue;
            };
            let lam = -word_weight(&w[..pos]);
            let body = self.body(w[pos], w[pos + 1], lam);
            for (rw, rc) in body.iter() {
                let mut nw: Word<G> = Word::with_capacity(w.len());
                nw.extend_from_slice(&w[..pos]);
                nw.extend_from_slice(rw);
                nw.extend_from_slice(&w[pos + 2..]);
                push(&mut pending, nw, &c * rc);
            }
        }
        out
    }

    /// `normal_form(a * b)`.
    pub fn product(&self, a: &Element<G>, b: &Element<G>) -> Element<G> {
        self.normal_form(&a.mul(b))
    }

    pub fn is_normal(&self, e: &Element<G>) -> bool {
        e.terms().all(|(w, _)| !self.is_reducible(w))
    }
}
