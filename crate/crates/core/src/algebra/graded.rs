use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use smallvec::smallvec;

use super::rewrite::cache_limit;
use super::{solve_relations, word_weight, Element, Generator, Measure, MeasureFn, Word};
use crate::coeffs::Coeff;
use crate::error::{Error, Result};

/// Normal ordering for rule sets that decrease no monomial order.
///
/// Every reducible word is rewritten once, at its leftmost rule pair, which
/// gives one linear equation `w = sum c v + (lower degree)` per word. Words
/// whose expansions never come back to them are resolved by substitution;
/// the strongly connected pieces of the expansion graph are solved as small
/// linear systems. If such a system is singular, all reductions of the
/// words of that degree and weight are used instead. Results are memoized;
/// the memo is dropped once it outgrows `DYNRED_COEFF_CACHE_ENTRIES`.
///
/// This relies only on the rule-free words being a basis; a system that still
/// leaves some word undetermined is reported.
pub struct GradedReducer<G: Generator> {
    rank: usize,
    gens: Vec<G>,
    rules: HashMap<(G, G), Element<G>>,
    memo: RwLock<HashMap<Word<G>, Arc<Element<G>>>>,
}

impl<G: Generator> GradedReducer<G> {
    pub fn new(rank: usize, gens: Vec<G>, rules: BTreeMap<(G, G), Element<G>>) -> Self {
        GradedReducer {
            rank,
            gens,
            rules: rules.into_iter().collect(),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn is_reducible(&self, w: &[G]) -> bool {
        w.windows(2).any(|p| self.rules.contains_key(&(p[0], p[1])))
    }

    fn cached(&self, w: &[G]) -> Option<Arc<Element<G>>> {
        self.memo.read().expect("memo lock").get(w).cloned()
    }

    /// `w` rewritten at position `pos`: same-degree part and lower part.
    fn expand_at(&self, w: &[G], pos: usize) -> (Element<G>, Element<G>) {
        let rule = &self.rules[&(w[pos], w[pos + 1])];
        let lam = -word_weight(&w[..pos]);
        let mut top = Element::zero(self.rank);
        let mut lower = Element::zero(self.rank);
        for (rw, rc) in rule.terms() {
            let mut nw: Word<G> = Word::with_capacity(w.len());
            nw.extend_from_slice(&w[..pos]);
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + 2..]);
            let target = if nw.len() == w.len() { &mut top } else { &mut lower };
            target.add_term(nw, rc.shift(&lam));
        }
        (top, lower)
    }

    fn leftmost(&self, w: &[G]) -> usize {
        (0..w.len() - 1)
            .find(|&p| self.rules.contains_key(&(w[p], w[p + 1])))
            .expect("reducible word")
    }

    /// Memoizes the normal form of `root` and of every word its expansion
    /// reaches (Tarjan's algorithm over the expansion graph).
    fn resolve(&self, root: &Word<G>) -> Result<()> {
        struct Node<G: Generator> {
            top: Element<G>,
            lower: Element<G>,
            succ: Vec<Word<G>>,
            index: usize,
            low: usize,
            on_stack: bool,
        }
        let mut nodes: HashMap<Word<G>, Node<G>> = HashMap::new();
        let mut stack: Vec<Word<G>> = Vec::new();
        let mut counter = 0;
        // explicit DFS: (word, next successor to visit)
        let mut dfs: Vec<(Word<G>, usize)> = Vec::new();

        let open = |w: &Word<G>, nodes: &mut HashMap<Word<G>, Node<G>>, counter: &mut usize, stack: &mut Vec<Word<G>>| -> Result<()> {
            let (top, lower) = self.expand_at(w, self.leftmost(w));
            let lower = self.normal_form(&lower)?;
            let succ = top
                .terms()
                .map(|(v, _)| v.clone())
                .filter(|v| self.is_reducible(v) && self.cached(v).is_none())
                .collect();
            nodes.insert(w.clone(), Node { top, lower, succ, index: *counter, low: *counter, on_stack: true });
            *counter += 1;
            stack.push(w.clone());
            Ok(())
        };

        open(root, &mut nodes, &mut counter, &mut stack)?;
        dfs.push((root.clone(), 0));
        while let Some((w, k)) = dfs.pop() {
            let next = nodes[&w].succ.get(k).cloned();
            if let Some(v) = next {
                dfs.push((w.clone(), k + 1));
                match nodes.get(&v) {
                    None => {
                        open(&v, &mut nodes, &mut counter, &mut stack)?;
                        dfs.push((v, 0));
                    }
                    Some(nv) if nv.on_stack => {
                        let idx = nv.index;
                        let nw = nodes.get_mut(&w).expect("node");
                        nw.low = nw.low.min(idx);
                    }
                    Some(_) => {}
                }
                continue;
            }
            // all successors done
            let (index, low) = (nodes[&w].index, nodes[&w].low);
            if let Some((parent, _)) = dfs.last() {
                let p = nodes.get_mut(parent).expect("node");
                p.low = p.low.min(low);
            }
            if low == index {
                let mut comp = Vec::new();
                loop {
                    let x = stack.pop().expect("tarjan stack");
                    nodes.get_mut(&x).expect("node").on_stack = false;
                    let done = x == w;
                    comp.push(x);
                    if done {
                        break;
                    }
                }
                self.close_component(&comp, &nodes.iter().map(|(k, n)| (k, (&n.top, &n.lower))).collect())?;
            }
        }
        Ok(())
    }

    fn close_component(
        &self,
        comp: &[Word<G>],
        nodes: &HashMap<&Word<G>, (&Element<G>, &Element<G>)>,
    ) -> Result<()> {
        let inside = |v: &Word<G>| comp.contains(v);
        // right side of `w - (inside terms) = rhs` with everything outside resolved
        let mut eqs = Vec::with_capacity(comp.len());
        for w in comp {
            let (top, lower) = nodes[w];
            let mut eq = Element::monomial(self.rank, w, Coeff::one(self.rank)).sub(lower);
            for (v, c) in top.terms() {
                if inside(v) {
                    eq.add_term(v.clone(), -c);
                } else if self.is_reducible(v) {
                    // resolved earlier; recomputed if the memo was trimmed since
                    let nf = match self.cached(v) {
                        Some(nf) => nf,
                        None => self.nf_word(v)?,
                    };
                    for (u, d) in nf.terms() {
                        eq.add_term(u.clone(), -(c * d));
                    }
                } else {
                    eq.add_term(v.clone(), -c);
                }
            }
            eqs.push(eq);
        }
        if comp.len() == 1 && !nodes[&comp[0]].0.terms().any(|(v, _)| *v == comp[0]) {
            let w = &comp[0];
            let nf = Element::monomial(self.rank, w, Coeff::one(self.rank)).sub(&eqs[0]);
            self.memo.write().expect("memo lock").insert(w.clone(), Arc::new(nf));
            return Ok(());
        }
        let members: Vec<Word<G>> = comp.to_vec();
        let measure: MeasureFn<G> = Arc::new(move |w: &[G]| -> Measure {
            smallvec![w.len() as i64, members.iter().any(|m| m.as_slice() == w) as i64]
        });
        let pivots = solve_relations(self.rank, &eqs, &measure)?;
        if comp.iter().all(|w| pivots.contains_key(w)) && pivots.len() == comp.len() {
            let mut memo = self.memo.write().expect("memo lock");
            for (w, nf) in pivots {
                memo.insert(w, Arc::new(nf));
            }
            return Ok(());
        }
        self.solve_sector(comp[0].len(), &comp[0])
    }

    /// Fallback: every reduction of every word with the degree and weight of
    /// `sample`.
    fn solve_sector(&self, degree: usize, sample: &[G]) -> Result<()> {
        let weight = word_weight(sample);
        let mut words = vec![Word::<G>::new()];
        for _ in 0..degree {
            words = words
                .into_iter()
                .flat_map(|w| {
                    self.gens.iter().map(move |g| {
                        let mut v = w.clone();
                        v.push(*g);
                        v
                    })
                })
                .collect();
        }
        words.retain(|w| word_weight(w) == weight);
        let mut eqs = Vec::new();
        for w in &words {
            for pos in 0..degree - 1 {
                if !self.rules.contains_key(&(w[pos], w[pos + 1])) {
                    continue;
                }
                let (top, lower) = self.expand_at(w, pos);
                let eq = Element::monomial(self.rank, w, Coeff::one(self.rank))
                    .sub(&top)
                    .sub(&self.normal_form(&lower)?);
                if !eq.is_zero() {
                    eqs.push(eq);
                }
            }
        }
        let keys: Vec<(G, G)> = self.rules.keys().copied().collect();
        let measure: MeasureFn<G> = Arc::new(move |w: &[G]| -> Measure {
            let red = w.windows(2).any(|p| keys.contains(&(p[0], p[1])));
            smallvec![w.len() as i64, red as i64]
        });
        let pivots = solve_relations(self.rank, &eqs, &measure)?;
        for w in words.iter().filter(|w| self.is_reducible(w)) {
            if !pivots.contains_key(w) {
                return Err(Error::Singular(format!(
                    "word {} is not determined by the reductions of its sector",
                    fmt(w)
                )));
            }
        }
        if let Some(extra) = pivots.keys().find(|w| !self.is_reducible(w)) {
            return Err(Error::Singular(format!("the reductions relate basis words, first {}", fmt(extra))));
        }
        let mut memo = self.memo.write().expect("memo lock");
        for (w, nf) in pivots {
            memo.insert(w, Arc::new(nf));
        }
        Ok(())
    }

    fn nf_word(&self, w: &Word<G>) -> Result<Arc<Element<G>>> {
        if let Some(nf) = self.cached(w) {
            return Ok(nf);
        }
        self.resolve(w)?;
        let nf = self
            .cached(w)
            .ok_or_else(|| Error::Singular(format!("word {} left unresolved", fmt(w))))?;
        let mut memo = self.memo.write().expect("memo lock");
        if memo.len() > cache_limit() {
            memo.clear();
        }
        Ok(nf)
    }

    /// The unique expression of `e` in rule-free words.
    pub fn normal_form(&self, e: &Element<G>) -> Result<Element<G>> {
        let mut out = Element::zero(self.rank.max(e.rank()));
        for (w, c) in e.terms() {
            if !self.is_reducible(w) {
                out.add_term(w.clone(), c.clone());
                continue;
            }
            let nf = self.nf_word(w)?;
            for (nw, nc) in nf.terms() {
                out.add_term(nw.clone(), c * nc);
            }
        }
        Ok(out)
    }
}

fn fmt<G: Generator>(w: &[G]) -> String {
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}
