use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An iterated tensor product `k^{d1} ⊗ … ⊗ k^{dm}`; the empty list is `k` itself.
///
/// Flat basis indices put the first factor most significant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct TensorSpace {
    factors: Vec<usize>,
}

impl TensorSpace {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::DimensionMismatch(format!("zero-dimensional factor in {factors:?}")));
        }
        Ok(TensorSpace { factors })
    }

    /// The unit object `k`.
    pub fn unit() -> Self {
        TensorSpace { factors: Vec::new() }
    }

    pub fn single(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional factor");
        TensorSpace { factors: vec![dim] }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// The unit object `k` has no factors.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> u64 {
        self.factors.iter().map(|&d| d as u64).product()
    }

    pub fn concat(&self, other: &TensorSpace) -> TensorSpace {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        TensorSpace { factors }
    }

    pub fn concat_all<'a>(spaces: impl IntoIterator<Item = &'a TensorSpace>) -> TensorSpace {
        let factors = spaces.into_iter().flat_map(|s| s.factors.iter().copied()).collect();
        TensorSpace { factors }
    }

    /// Mixed-radix digits of a flat index.
    pub fn digits(&self, mut index: u64) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (index % d as u64) as usize;
            index /= d as u64;
        }
        out
    }

    pub fn flat(&self, digits: &[usize]) -> u64 {
        debug_assert_eq!(digits.len(), self.factors.len());
        digits
            .iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&i, &d)| acc * d as u64 + i as u64)
    }
}

impl TryFrom<Vec<usize>> for TensorSpace {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        TensorSpace::new(v)
    }
}

impl From<TensorSpace> for Vec<usize> {
    fn from(s: TensorSpace) -> Vec<usize> {
        s.factors
    }
}

impl fmt::Display for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "k");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("k^{d}")).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_roundtrip() {
        let s = TensorSpace::new(vec![2, 3, 4]).unwrap();
        assert_eq!(s.dim(), 24);
        for i in 0..24 {
            assert_eq!(s.flat(&s.digits(i)), i);
        }
        assert_eq!(s.digits(23), vec![1, 2, 3]);
        assert_eq!(TensorSpace::unit().dim(), 1);
        assert!(TensorSpace::new(vec![2, 0]).is_err());
    }
}
