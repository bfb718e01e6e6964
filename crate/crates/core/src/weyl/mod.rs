//! The h-deformed Weyl algebra `Diff_h(n, N)` with generators `x^{i,a}` and
//! `Dbar_{j,a}` (`a` the copy label), and its grassmann counterpart.
//!
//! Defining relations (bosonic, coefficients on the left):
//!
//! ```text
//! x^{ia} x^{jb} = R^{ij}_{kl} x^{kb} x^{la}
//! D_{ia} D_{jb} = R^{lk}_{ji} D_{kb} D_{la}
//! x^{ia} D_{jb} = T^{ik}_{jl} D_{kb} x^{la} - delta^a_b delta^i_j
//! ```
//!
//! The grassmann version negates the quadratic parts and flips the constant.
//! Normal words put every `x` before every `D`, each block ascending in
//! `(index, copy)`.

mod checks;
mod variants;
mod zhelobenko;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::smallvec;

use crate::algebra::{solve_relations, Element, Generator, Matrix, Measure, MeasureFn, RewriteSystem, Word};
use crate::algebra::expect_pivots;
use crate::coeffs::{Coeff, WeightVector, MAX_VARS};
use crate::error::{Error, Result};
use crate::rmatrix::{r_matrix, t_matrix};

pub use checks::{associativity, check_reflection, run_suite, split_realization, WeylSuite};
pub use variants::{check_variant_generators, mu_consistency};
pub use zhelobenko::{verify_zhelobenko, zhelobenko};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    X,
    D,
}

/// `x^{index, copy}` or `Dbar_{index, copy}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylGenerator {
    pub kind: Kind,
    pub index: u8,
    pub copy: u8,
}

impl WeylGenerator {
    pub fn x(i: usize, a: usize) -> Self {
        WeylGenerator {
            kind: Kind::X,
            index: i as u8,
            copy: a as u8,
        }
    }

    pub fn d(j: usize, a: usize) -> Self {
        WeylGenerator {
            kind: Kind::D,
            index: j as u8,
            copy: a as u8,
        }
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn copy(&self) -> usize {
        self.copy as usize
    }

    pub fn with_index(self, i: usize) -> Self {
        WeylGenerator {
            index: i as u8,
            ..self
        }
    }
}

impl Generator for WeylGenerator {
    fn weight(&self) -> WeightVector {
        match self.kind {
            Kind::X => WeightVector::eps(self.index()),
            Kind::D => -WeightVector::eps(self.index()),
        }
    }
}

impl fmt::Display for WeylGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            Kind::X => "x",
            Kind::D => "D",
        };
        write!(f, "{name}[{},{}]", self.index, self.copy)
    }
}

impl fmt::Debug for WeylGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type WeylElement = Element<WeylGenerator>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Bosonic,
    Fermionic,
}

impl std::str::FromStr for Statistics {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bosonic" => Ok(Self::Bosonic),
            "fermionic" => Ok(Self::Fermionic),
            _ => Err(Error::Invalid(format!("unknown statistics '{s}'"))),
        }
    }
}

/// Which copy pairs carry the constant term of the `x D` exchange.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossConstant {
    /// `delta^a_b delta^i_j`: only equal copies (the default).
    Kronecker,
    /// `delta^i_j` for every copy pair, as in the printed rank-two tables.
    AllCopies,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylConfig {
    pub n: usize,
    pub copies: usize,
    pub statistics: Statistics,
    pub cross_constant: CrossConstant,
}

impl WeylConfig {
    pub fn new(n: usize, copies: usize) -> Self {
        WeylConfig {
            n,
            copies,
            statistics: Statistics::Bosonic,
            cross_constant: CrossConstant::Kronecker,
        }
    }

    pub fn fermionic(mut self) -> Self {
        self.statistics = Statistics::Fermionic;
        self
    }

    pub fn with_cross_constant(mut self, c: CrossConstant) -> Self {
        self.cross_constant = c;
        self
    }

    pub fn generators(&self) -> Vec<WeylGenerator> {
        let mut g = Vec::new();
        for i in 1..=self.n {
            for a in 1..=self.copies {
                g.push(WeylGenerator::x(i, a));
            }
        }
        for j in 1..=self.n {
            for a in 1..=self.copies {
                g.push(WeylGenerator::d(j, a));
            }
        }
        g
    }

    fn sign(&self) -> i64 {
        match self.statistics {
            Statistics::Bosonic => 1,
            Statistics::Fermionic => -1,
        }
    }
}

/// Counts of (D before x), (same kind, larger index first) and (same kind,
/// larger `(index, copy)` first) over all position pairs.
fn weyl_measure(w: &[WeylGenerator]) -> Measure {
    let (mut dx, mut idx, mut key) = (0i64, 0i64, 0i64);
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            let (a, b) = (w[p], w[q]);
            if a.kind == Kind::D && b.kind == Kind::X {
                dx += 1;
            } else if a.kind == b.kind {
                if a.index > b.index {
                    idx += 1;
                }
                if (a.index, a.copy) > (b.index, b.copy) {
                    key += 1;
                }
            }
        }
    }
    smallvec![dx, idx, key]
}

/// The defining relations, each written as an element equal to zero.
pub fn relations(config: &WeylConfig) -> Vec<WeylElement> {
    let n = config.n;
    let r = r_matrix(n);
    let t = t_matrix(n);
    let sg = Coeff::integer(n, config.sign());
    let mut out = Vec::new();
    let gx = WeylGenerator::x;
    let gd = WeylGenerator::d;
    for i in 1..=n {
        for j in 1..=n {
            for a in 1..=config.copies {
                for b in 1..=config.copies {
                    let mut xx = Element::monomial(n, &[gx(i, a), gx(j, b)], Coeff::one(n));
                    for (k, l, c) in r.row(i, j) {
                        xx.add_term(smallvec![gx(k, b), gx(l, a)], -(&sg * c));
                    }
                    let mut dd = Element::monomial(n, &[gd(i, a), gd(j, b)], Coeff::one(n));
                    for (l, k, c) in r.column(j, i) {
                        dd.add_term(smallvec![gd(k, b), gd(l, a)], -(&sg * c));
                    }
                    let mut xd = Element::monomial(n, &[gx(i, a), gd(j, b)], Coeff::one(n));
                    for k in 1..=n {
                        for l in 1..=n {
                            if let Some(c) = t.get(i, k, j, l) {
                                xd.add_term(smallvec![gd(k, b), gx(l, a)], -(&sg * c));
                            }
                        }
                    }
                    let constant = i == j
                        && (a == b || config.cross_constant == CrossConstant::AllCopies);
                    if constant {
                        xd.add_term(Word::new(), sg.clone());
                    }
                    for e in [xx, dd, xd] {
                        if !e.is_zero() {
                            out.push(e);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `Diff_h(n, N)` with its exchange rules.
pub struct WeylAlgebra {
    config: WeylConfig,
    system: RewriteSystem<WeylGenerator>,
}

impl WeylAlgebra {
    pub fn new(config: WeylConfig) -> Result<Self> {
        if config.n == 0 || config.n > MAX_VARS {
            return Err(Error::UnsupportedRank(config.n));
        }
        if config.copies == 0 || config.copies > 255 {
            return Err(Error::Invalid(format!("copies must be in 1..=255, got {}", config.copies)));
        }
        let measure: MeasureFn<WeylGenerator> = Arc::new(weyl_measure);
        let rels = relations(&config);
        let pivots = solve_relations(config.n, &rels, &measure)?;
        let gens = config.generators();
        let mut expected: Vec<Word<WeylGenerator>> = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let square = a == b && config.statistics == Statistics::Fermionic;
                if a > b || square {
                    expected.push(smallvec![a, b]);
                }
            }
        }
        expect_pivots(&pivots, &expected)?;
        let rules: BTreeMap<(WeylGenerator, WeylGenerator), WeylElement> = pivots
            .into_iter()
            .map(|(w, rhs)| ((w[0], w[1]), rhs))
            .collect();
        let system = RewriteSystem::new(config.n, rules, measure)?;
        Ok(WeylAlgebra { config, system })
    }

    pub fn config(&self) -> &WeylConfig {
        &self.config
    }

    pub fn rank(&self) -> usize {
        self.config.n
    }

    pub fn system(&self) -> &RewriteSystem<WeylGenerator> {
        &self.system
    }

    pub fn x(&self, i: usize, a: usize) -> WeylElement {
        Element::gen(self.config.n, WeylGenerator::x(i, a))
    }

    pub fn d(&self, j: usize, a: usize) -> WeylElement {
        Element::gen(self.config.n, WeylGenerator::d(j, a))
    }

    pub fn scalar(&self, c: Coeff) -> WeylElement {
        Element::scalar(self.config.n, c)
    }

    pub fn normal_form(&self, e: &WeylElement) -> WeylElement {
        self.system.normal_form(e)
    }

    /// Free concatenation (not normal ordered).
    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        a.mul(b)
    }

    /// `normal_form(a * b)`.
    pub fn product(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.system.product(a, b)
    }

    /// `Ltilde^i_j = sum_a x^{ia} D_{ja}`, already in normal form.
    pub fn ltilde(&self) -> Matrix<WeylGenerator> {
        self.partial_ltilde(1..=self.config.copies)
    }

    /// The same sum restricted to a range of copies.
    pub fn partial_ltilde(&self, copies: std::ops::RangeInclusive<usize>) -> Matrix<WeylGenerator> {
        let n = self.config.n;
        Matrix::from_fn(n, |i, j| {
            let mut e = Element::zero(n);
            for a in copies.clone() {
                e.add_term(
                    smallvec![WeylGenerator::x(i, a), WeylGenerator::d(j, a)],
                    Coeff::one(n),
                );
            }
            e
        })
    }

    /// Parses `x[i,a]`, `D[j,a]` (copy optional when there is one copy) with
    /// coefficient expressions, `*`, `/` by scalars, `+`, `-`, `^`.
    pub fn parse(&self, text: &str) -> Result<WeylElement> {
        let ast = crate::expr::parse(text)?;
        let (n, copies) = (self.config.n, self.config.copies);
        crate::expr::eval(&ast, n, &|name: &str, idx: &[usize]| {
            let kind = match name {
                "x" => Kind::X,
                "D" => Kind::D,
                _ => return Err(format!("unknown generator '{name}'")),
            };
            let (i, a) = match idx {
                [i] if copies == 1 => (*i, 1),
                [i, a] => (*i, *a),
                _ => return Err(format!("{name} takes [index, copy]")),
            };
            if i == 0 || i > n || a == 0 || a > copies {
                return Err(format!("{name}[{i},{a}] out of range for n={n}, N={copies}"));
            }
            let g = match kind {
                Kind::X => WeylGenerator::x(i, a),
                Kind::D => WeylGenerator::d(i, a),
            };
            Ok(Element::gen(n, g))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize, copies: usize) -> WeylAlgebra {
        WeylAlgebra::new(WeylConfig::new(n, copies)).unwrap()
    }

    #[test]
    fn d_before_x_rank_two() {
        let w = alg(2, 1);
        let nf = w.normal_form(&w.parse("D[1,1]*x[1,1]").unwrap());
        let expect = w
            .parse("((h1-h2)^2-1)/(h1-h2)^2*x[1,1]*D[1,1] + (h1-h2+1)/(h1-h2)^2*x[2,1]*D[2,1] + (h1-h2+1)/(h1-h2)")
            .unwrap();
        assert_eq!(nf, expect);
    }

    #[test]
    fn coefficient_crossing_a_generator() {
        let w = alg(2, 1);
        let a = w.d(1, 1);
        let b = w.parse("(h1-h2)*x[1,1]").unwrap();
        assert_eq!(w.multiply(&a, &b), w.parse("(h1-h2+1)*D[1,1]*x[1,1]").unwrap());
    }

    #[test]
    fn same_index_copies_commute() {
        let w = alg(2, 2);
        let nf = w.normal_form(&w.parse("x[1,2]*x[1,1]").unwrap());
        assert_eq!(nf, w.parse("x[1,1]*x[1,2]").unwrap());
        let f = WeylAlgebra::new(WeylConfig::new(2, 2).fermionic()).unwrap();
        let nf = f.normal_form(&f.parse("x[1,2]*x[1,1]").unwrap());
        assert_eq!(nf, f.parse("-x[1,1]*x[1,2]").unwrap());
        assert!(f.normal_form(&f.parse("x[1,1]*x[1,1]").unwrap()).is_zero());
    }

    #[test]
    fn cross_copy_exchange_rank_two() {
        let w = alg(2, 2);
        let lhs = w.normal_form(&w.parse("x[2,1]*D[1,2]").unwrap());
        let rhs = w
            .normal_form(&w.parse("(h1-h2)*(h1-h2+2)/(h1-h2+1)^2*D[1,2]*x[2,1]").unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_idempotent_and_weight_preserving() {
        let w = alg(3, 1);
        let e = w.parse("D[2,1]*D[1,1]*x[1,1]*x[3,1] + h1*D[3,1]*x[2,1]").unwrap();
        let nf = w.normal_form(&e);
        assert_eq!(w.normal_form(&nf), nf);
        let wt = WeylGenerator::d(2, 1).weight() + WeylGenerator::d(1, 1).weight()
            + WeylGenerator::x(1, 1).weight() + WeylGenerator::x(3, 1).weight();
        let src = crate::algebra::word_weight(&[WeylGenerator::d(3, 1), WeylGenerator::x(2, 1)]);
        for (word, _) in nf.terms() {
            let ww = crate::algebra::word_weight(word);
            assert!(ww == wt || ww == src);
        }
    }

    #[test]
    fn ltilde_entries() {
        let w = alg(2, 2);
        let l = w.ltilde();
        assert_eq!(*l.get(1, 2), w.parse("x[1,1]*D[2,1] + x[1,2]*D[2,2]").unwrap());
        for i in 1..=2 {
            for j in 1..=2 {
                assert!(w.system().is_normal(l.get(i, j)));
            }
        }
    }

    #[test]
    fn parse_errors() {
        let w = alg(2, 1);
        assert!(matches!(w.parse("x[3,1]"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(w.parse("x[1,1]/D[1,1]"), Err(Error::Parse { pos: 6, .. })));
        assert!(w.parse("x[1]*D[2]").is_ok());
    }
}
