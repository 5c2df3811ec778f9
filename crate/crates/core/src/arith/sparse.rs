use std::collections::BTreeMap;

use crate::arith::{FieldSpec, Scalar};

/// A vector as sorted `(flat index, nonzero coefficient)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    terms: Vec<(u64, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { terms: Vec::new() }
    }

    pub fn basis(field: FieldSpec, index: u64) -> Self {
        SparseVec { terms: vec![(index, field.one())] }
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, Scalar)>) -> Self {
        let mut acc = Accumulator::default();
        for (i, c) in terms {
            acc.add(i, c);
        }
        acc.finish()
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            terms: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u64, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, field: FieldSpec, len: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, c) in &self.terms {
            out[*i as usize] = c.clone();
        }
        out
    }

    pub fn terms(&self) -> &[(u64, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, index: u64) -> Option<&Scalar> {
        self.terms
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|p| &self.terms[p].1)
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        if s.is_zero() {
            return SparseVec::zero();
        }
        SparseVec { terms: self.terms.iter().map(|(i, c)| (*i, c * s)).collect() }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        SparseVec::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        SparseVec::from_terms(self.terms.iter().cloned().chain(other.terms.iter().map(|(i, c)| (*i, -c))))
    }

    /// Tensor product where `other` lives in a space of dimension `other_dim`.
    pub fn kron(&self, other: &SparseVec, other_dim: u64) -> SparseVec {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                terms.push((i * other_dim + j, a * b));
            }
        }
        SparseVec { terms }
    }
}

/// Sums `(index, coefficient)` contributions in index order.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<u64, Scalar>,
}

impl Accumulator {
    pub fn add(&mut self, index: u64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                *o.get_mut() = s;
            }
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec { terms: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}
