use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::MAX_VARS;

/// An integer weight `sum c_i eps_i`. Components past the rank are zero, so
/// vectors of different lengths add as if padded.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct WeightVector {
    comps: [i32; MAX_VARS],
}

impl WeightVector {
    pub const ZERO: WeightVector = WeightVector {
        comps: [0; MAX_VARS],
    };

    /// `eps_i` for a one-based index `i`.
    pub fn eps(i: usize) -> Self {
        let mut w = Self::ZERO;
        w.comps[i - 1] = 1;
        w
    }

    pub fn from_slice(c: &[i32]) -> Self {
        let mut w = Self::ZERO;
        w.comps[..c.len()].copy_from_slice(c);
        w
    }

    /// `eps_i - eps_j`.
    pub fn root(i: usize, j: usize) -> Self {
        Self::eps(i) - Self::eps(j)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|&c| c == 0)
    }

    pub fn components(&self) -> &[i32] {
        &self.comps
    }

    /// Component for a one-based index.
    pub fn get(&self, i: usize) -> i32 {
        self.comps[i - 1]
    }

    /// Swaps components `i` and `i+1` (one-based): the simple reflection.
    pub fn reflect(&self, i: usize) -> Self {
        let mut w = *self;
        w.comps.swap(i - 1, i);
        w
    }
}

impl Add for WeightVector {
    type Output = WeightVector;
    fn add(mut self, o: WeightVector) -> WeightVector {
        self += o;
        self
    }
}

impl AddAssign for WeightVector {
    fn add_assign(&mut self, o: WeightVector) {
        for (a, b) in self.comps.iter_mut().zip(o.comps) {
            *a += b;
        }
    }
}

impl Sub for WeightVector {
    type Output = WeightVector;
    fn sub(self, o: WeightVector) -> WeightVector {
        self + (-o)
    }
}

impl Neg for WeightVector {
    type Output = WeightVector;
    fn neg(mut self) -> WeightVector {
        for c in &mut self.comps {
            *c = -*c;
        }
        self
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.comps.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1);
        let parts: Vec<String> = self.comps[..last].iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}
