//! The diagonal reduction algebra `D(gl_n)` presented by the reflection
//! equation
//!
//! ```text
//! R L1 R L1 - L1 R L1 R = R L1 - L1 R
//! ```
//!
//! for the matrix of generators `L^i_j` (weight `eps_i - eps_j`), optionally
//! with several braided copies `M, Mt, Mtt, ...` that satisfy the same
//! equation each plus the cross relations `R M R Mt = Mt R M R`.
//!
//! Rewrite rules are not transcribed: they are obtained by row reducing the
//! components of these matrix equations. Normal words are sorted by copy,
//! then off-diagonal generators before diagonal ones, each group by
//! decreasing `(i, j)`. For `n = 2` this reads `L21 < L12 < L22 < L11`.
//!
//! For `n = 2` the rules decrease a monomial order and plain rewriting
//! terminates. From `n = 3` on no such order exists for this normal form
//! (a rule like `L11 L21 -> ... + L31 L23` feeds back into itself), so longer
//! words are normal ordered by solving each homogeneous sector instead.

mod central;
mod checks;
mod transforms;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::smallvec;

use crate::algebra::{
    expect_pivots, inner_r, outer_r, reflection_residual, solve_relations, Element, Generator, GradedReducer,
    Matrix, Measure, MeasureFn, RewriteSystem, Word,
};
use crate::coeffs::{WeightVector, MAX_VARS};
use crate::error::{Error, Result};
use crate::rmatrix::r_matrix;
use crate::util::tuples;

pub use central::{central_element, central_element_prime, check_central, matrix_power, trace_q_minus};
pub use checks::{
    appendix_check, associativity, check_h_realization, check_mixed_identity, check_reflection, coproduct_check,
    run_suite, DraSuite,
};
pub use transforms::{generator_transforms, l_from_s, s_from_l, transition_matrix};

/// Which generating matrix a generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `L^i_j` (and its braided copies).
    L,
    /// `s^i_j`, related to `L` by a triangular change of variables.
    S,
}

/// `L^i_j` of copy `copy` (1-based), or `s^i_j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DraGenerator {
    pub family: Family,
    pub copy: u8,
    pub i: u8,
    pub j: u8,
}

impl DraGenerator {
    pub fn l(i: usize, j: usize) -> Self {
        Self::copy_of(1, i, j)
    }

    pub fn copy_of(copy: usize, i: usize, j: usize) -> Self {
        DraGenerator {
            family: Family::L,
            copy: copy as u8,
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn s(i: usize, j: usize) -> Self {
        DraGenerator {
            family: Family::S,
            copy: 1,
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    /// Position in the normal order; larger sorts later.
    fn rank(&self) -> i64 {
        let group = self.copy as i64 * 2 + self.is_diagonal() as i64;
        (group * 256 + (255 - self.i as i64)) * 256 + (255 - self.j as i64)
    }
}

impl Generator for DraGenerator {
    fn weight(&self) -> WeightVector {
        WeightVector::root(self.i as usize, self.j as usize)
    }
}

impl fmt::Display for DraGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::L => "L",
            Family::S => "s",
        };
        if self.copy == 1 {
            write!(f, "{name}[{},{}]", self.i, self.j)
        } else {
            write!(f, "{name}[{},{},{}]", self.i, self.j, self.copy)
        }
    }
}

impl fmt::Debug for DraGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type DraElement = Element<DraGenerator>;

/// `(length, copy inversions, off-diagonal letters, ranks...)`. Every rule
/// keeps the multiset of copies in its quadratic terms, so the first three
/// entries are additive over a word and the rank sequence is compared
/// lexicographically.
/// Orders the relation columns so that the pivots are the unsorted pairs.
fn pivot_measure(w: &[DraGenerator]) -> Measure {
    let (mut copy_inv, mut inv) = (0i64, 0i64);
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            copy_inv += (w[p].copy > w[q].copy) as i64;
            inv += (w[p].rank() > w[q].rank()) as i64;
        }
    }
    let mut m: Measure = smallvec![w.len() as i64, copy_inv, inv];
    m.extend(w.iter().map(DraGenerator::rank));
    m
}

/// A monomial order (length, copy inversions, off-diagonal count, then
/// lexicographic by rank); rewriting terminates whenever the rules decrease it.
fn rewrite_measure(w: &[DraGenerator]) -> Measure {
    let mut copy_inv = 0i64;
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            copy_inv += (w[p].copy > w[q].copy) as i64;
        }
    }
    let off = w.iter().filter(|g| !g.is_diagonal()).count() as i64;
    let mut m: Measure = smallvec![w.len() as i64, copy_inv, off];
    m.extend(w.iter().map(DraGenerator::rank));
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DraConfig {
    pub n: usize,
    pub copies: usize,
    pub family: Family,
}

impl DraConfig {
    pub fn new(n: usize) -> Self {
        DraConfig {
            n,
            copies: 1,
            family: Family::L,
        }
    }

    pub fn with_copies(mut self, copies: usize) -> Self {
        self.copies = copies;
        self
    }

    pub fn generators(&self) -> Vec<DraGenerator> {
        let mut out = Vec::new();
        for c in 1..=self.copies {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    out.push(match self.family {
                        Family::L => DraGenerator::copy_of(c, i, j),
                        Family::S => DraGenerator::s(i, j),
                    });
                }
            }
        }
        out
    }
}

/// The generator matrix of one copy.
pub fn generator_matrix(n: usize, copy: usize) -> Matrix<DraGenerator> {
    Matrix::from_fn(n, |i, j| Element::gen(n, DraGenerator::copy_of(copy, i, j)))
}

/// Components of the reflection equation for `m`, one per index tuple
/// `(i1, i2, t, u)`, before normal ordering.
pub fn reflection_components(m: &Matrix<DraGenerator>) -> Vec<([usize; 4], DraElement)> {
    let n = m.size();
    let r = r_matrix(n);
    tuples(n, 4)
        .into_iter()
        .map(|t| {
            let idx = [t[0], t[1], t[2], t[3]];
            (idx, reflection_residual(&r, m, idx))
        })
        .collect()
}

/// Components of `R A R B - B R A R`.
pub fn cross_components(a: &Matrix<DraGenerator>, b: &Matrix<DraGenerator>) -> Vec<([usize; 4], DraElement)> {
    let n = a.size();
    let r = r_matrix(n);
    tuples(n, 4)
        .into_iter()
        .map(|t| {
            let idx = [t[0], t[1], t[2], t[3]];
            (idx, outer_r(&r, a, b, idx).sub(&inner_r(&r, b, a, idx)))
        })
        .collect()
}

fn defining_relations(config: &DraConfig) -> Vec<DraElement> {
    let n = config.n;
    let mut rels = Vec::new();
    match config.family {
        Family::L => {
            let mats: Vec<_> = (1..=config.copies).map(|c| generator_matrix(n, c)).collect();
            for m in &mats {
                rels.extend(reflection_components(m).into_iter().map(|(_, e)| e));
            }
            for a in 0..mats.len() {
                for b in a + 1..mats.len() {
                    rels.extend(cross_components(&mats[a], &mats[b]).into_iter().map(|(_, e)| e));
                }
            }
        }
        Family::S => {
            let m = l_from_s(n);
            rels.extend(reflection_components(&m).into_iter().map(|(_, e)| e));
        }
    }
    rels.retain(|e| !e.is_zero());
    rels
}

/// `D(gl_n)` or its braided power, with rewrite rules extracted from the
/// defining matrix relations.
pub struct DraAlgebra {
    config: DraConfig,
    rules: BTreeMap<(DraGenerator, DraGenerator), DraElement>,
    engine: Engine,
}

enum Engine {
    Rewrite(RewriteSystem<DraGenerator>),
    Graded(GradedReducer<DraGenerator>),
}

impl DraAlgebra {
    pub fn new(config: DraConfig) -> Result<Self> {
        if config.n == 0 || config.n > MAX_VARS {
            return Err(Error::UnsupportedRank(config.n));
        }
        if config.copies == 0 || config.copies > 255 || (config.family == Family::S && config.copies != 1) {
            return Err(Error::Invalid(format!("unsupported number of copies {}", config.copies)));
        }
        let measure: MeasureFn<DraGenerator> = Arc::new(pivot_measure);
        let rels = defining_relations(&config);
        let pivots = solve_relations(config.n, &rels, &measure)?;
        let gens = config.generators();
        let mut expected: Vec<Word<DraGenerator>> = Vec::new();
        for &a in &gens {
            for &b in &gens {
                if a.rank() > b.rank() {
                    expected.push(smallvec![a, b]);
                }
            }
        }
        expect_pivots(&pivots, &expected)?;
        let rules: BTreeMap<_, _> = pivots.into_iter().map(|(w, rhs)| ((w[0], w[1]), rhs)).collect();
        let engine = match RewriteSystem::new(config.n, rules.clone(), Arc::new(rewrite_measure)) {
            Ok(sys) => Engine::Rewrite(sys),
            Err(Error::OrderViolation(_)) => Engine::Graded(GradedReducer::new(config.n, gens, rules.clone())),
            Err(e) => return Err(e),
        };
        Ok(DraAlgebra { config, rules, engine })
    }

    /// One copy of `D(gl_n)` in the `L` generators.
    pub fn single(n: usize) -> Result<Self> {
        Self::new(DraConfig::new(n))
    }

    pub fn config(&self) -> &DraConfig {
        &self.config
    }

    pub fn rank(&self) -> usize {
        self.config.n
    }

    /// Whether normal ordering uses plain rewriting (as opposed to solving
    /// homogeneous sectors).
    pub fn uses_rewriting(&self) -> bool {
        matches!(self.engine, Engine::Rewrite(_))
    }

    /// The rule for the unsorted pair `ab`, if it is one.
    pub fn rule(&self, a: DraGenerator, b: DraGenerator) -> Option<&DraElement> {
        self.rules.get(&(a, b))
    }

    pub fn gen(&self, copy: usize, i: usize, j: usize) -> DraElement {
        let g = match self.config.family {
            Family::L => DraGenerator::copy_of(copy, i, j),
            Family::S => DraGenerator::s(i, j),
        };
        Element::gen(self.config.n, g)
    }

    pub fn matrix(&self, copy: usize) -> Matrix<DraGenerator> {
        Matrix::from_fn(self.config.n, |i, j| self.gen(copy, i, j))
    }

    pub fn try_normal_form(&self, e: &DraElement) -> Result<DraElement> {
        match &self.engine {
            Engine::Rewrite(sys) => Ok(sys.normal_form(e)),
            Engine::Graded(red) => red.normal_form(e),
        }
    }

    /// # Panics
    ///
    /// If some homogeneous sector does not determine the normal form of its
    /// words, which would contradict the sorted words being a basis.
    pub fn normal_form(&self, e: &DraElement) -> DraElement {
        self.try_normal_form(e).unwrap_or_else(|err| panic!("normal ordering failed: {err}"))
    }

    pub fn product(&self, a: &DraElement, b: &DraElement) -> DraElement {
        self.normal_form(&a.mul(b))
    }

    /// The rewrite rules `ab -> ...`, sorted by left side.
    pub fn rules(&self) -> Vec<((DraGenerator, DraGenerator), DraElement)> {
        self.rules.iter().map(|(k, v)| (*k, v.clone())).collect()
    }

    /// Parses `L[i,j]`, `L[i,j,copy]` (or `s[i,j]`) expressions.
    pub fn parse(&self, text: &str) -> Result<DraElement> {
        let ast = crate::expr::parse(text)?;
        let DraConfig { n, copies, family } = self.config;
        crate::expr::eval(&ast, n, &|name: &str, idx: &[usize]| {
            let expected = match family {
                Family::L => "L",
                Family::S => "s",
            };
            if name != expected {
                return Err(format!("unknown generator '{name}', expected {expected}"));
            }
            let (i, j, c) = match idx {
                [i, j] => (*i, *j, 1),
                [i, j, c] if family == Family::L => (*i, *j, *c),
                _ => return Err(format!("{name} takes [i, j] or [i, j, copy]")),
            };
            if i == 0 || i > n || j == 0 || j > n || c == 0 || c > copies {
                return Err(format!("{name}[{i},{j},{c}] out of range for n={n}, copies={copies}"));
            }
            Ok(self.gen(c, i, j))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;

    #[test]
    fn order_rank_two() {
        let g = |i, j| DraGenerator::l(i, j).rank();
        assert!(g(2, 1) < g(1, 2));
        assert!(g(1, 2) < g(2, 2));
        assert!(g(2, 2) < g(1, 1));
        assert!(DraGenerator::copy_of(1, 1, 1).rank() < DraGenerator::copy_of(2, 2, 1).rank());
    }

    #[test]
    fn first_ordering_relation() {
        let a = DraAlgebra::single(2).unwrap();
        let nf = a.normal_form(&a.parse("L[1,1]*L[1,2]").unwrap());
        let expect = a
            .parse("(h1-h2-3)/(h1-h2-2)*L[1,2]*L[1,1] + 1/(h1-h2-2)*L[1,2]*L[2,2] + L[1,2]")
            .unwrap();
        assert_eq!(nf, expect);
    }

    #[test]
    fn ordered_words_are_fixed() {
        let a = DraAlgebra::single(2).unwrap();
        let e = a.parse("L[1,2]*L[1,1]").unwrap();
        assert_eq!(a.normal_form(&e), e);
    }

    #[test]
    fn rank_three_pivots() {
        let a = DraAlgebra::single(3).unwrap();
        assert_eq!(a.rules().len(), 36);
    }

    #[test]
    fn two_copies_cross_rules_are_homogeneous() {
        let a = DraAlgebra::new(DraConfig::new(2).with_copies(2)).unwrap();
        for ((x, y), rhs) in a.rules() {
            if x.copy != y.copy {
                assert!(rhs.terms().all(|(w, _)| w.len() == 2), "{x}*{y} -> {rhs}");
            }
        }
    }

    #[test]
    fn parse_rejects_wrong_family() {
        let a = DraAlgebra::single(2).unwrap();
        assert!(a.parse("s[1,1]").is_err());
        assert!(a.parse("L[1,1,2]").is_err());
    }

    #[test]
    fn graded_reducer_agrees_with_rewriting() {
        let alg = DraAlgebra::single(2).unwrap();
        assert!(alg.uses_rewriting());
        let gens = alg.config().generators();
        let red = GradedReducer::new(2, gens.clone(), alg.rules().into_iter().collect());
        for &a in &gens {
            for &b in &gens {
                for &c in &gens {
                    let e = Element::monomial(2, &[a, b, c], Coeff::one(2));
                    assert_eq!(red.normal_form(&e).unwrap(), alg.normal_form(&e), "{a}*{b}*{c}");
                }
            }
        }
    }
}
