//! Lazily evaluated composites of linear maps.
//!
//! Diagram legs in this crate routinely live in spaces of dimension 4^10 and
//! beyond, while the vectors pushed through them stay small. An [`Arrow`] keeps
//! the expression tree and evaluates it on sparse vectors.

use std::fmt;
use std::sync::Arc;

use crate::arith::linmap::check_permutation;
use crate::arith::{Accumulator, FieldSpec, LinMap, Scalar, SparseVec, TensorSpace};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Arrow {
    field: FieldSpec,
    source: TensorSpace,
    target: TensorSpace,
    node: Arc<Node>,
}

enum Node {
    Identity,
    Matrix(Vec<SparseVec>),
    Permute(Vec<(u64, u64, u64)>),
    Tensor(Vec<Arrow>),
    Chain(Vec<Arrow>),
    Scale(Scalar, Arrow),
    Sum(Arrow, Arrow),
}

/// First basis vector on which two arrows disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub index: u64,
    pub left: SparseVec,
    pub right: SparseVec,
}

impl Arrow {
    pub fn identity(field: FieldSpec, space: TensorSpace) -> Arrow {
        Arrow { field, source: space.clone(), target: space, node: Arc::new(Node::Identity) }
    }

    pub fn matrix(m: &LinMap) -> Arrow {
        let cols = (0..m.cols()).map(|c| SparseVec::from_dense(m.column(c))).collect();
        Arrow {
            field: m.field(),
            source: m.source().clone(),
            target: m.target().clone(),
            node: Arc::new(Node::Matrix(cols)),
        }
    }

    /// A map given by the images of the source basis vectors.
    pub fn from_columns(field: FieldSpec, source: TensorSpace, target: TensorSpace, cols: Vec<SparseVec>) -> Result<Arrow> {
        if cols.len() as u64 != source.dim() {
            return Err(Error::DimensionMismatch(format!("{} columns for source {source}", cols.len())));
        }
        if cols.iter().flat_map(|c| c.terms()).any(|(i, _)| *i >= target.dim()) {
            return Err(Error::DimensionMismatch(format!("column entry outside target {target}")));
        }
        Ok(Arrow { field, source, target, node: Arc::new(Node::Matrix(cols)) })
    }

    /// The map `k → space` picking out `v`.
    pub fn element(field: FieldSpec, space: TensorSpace, v: SparseVec) -> Result<Arrow> {
        Arrow::from_columns(field, TensorSpace::unit(), space, vec![v])
    }

    /// The map `space → k` given by a covector.
    pub fn covector(field: FieldSpec, space: TensorSpace, coeffs: &[Scalar]) -> Result<Arrow> {
        if coeffs.len() as u64 != space.dim() {
            return Err(Error::DimensionMismatch(format!("covector of length {} on {space}", coeffs.len())));
        }
        let cols = coeffs.iter().map(|c| SparseVec::from_terms([(0, c.clone())])).collect();
        Arrow::from_columns(field, space, TensorSpace::unit(), cols)
    }

    /// Target factor `j` is source factor `perm[j]`.
    pub fn permute(field: FieldSpec, space: &TensorSpace, perm: &[usize]) -> Result<Arrow> {
        check_permutation(perm, space.len())?;
        let f = space.factors();
        let target = TensorSpace::new(perm.iter().map(|&p| f[p]).collect())?;
        let mut src_stride = vec![1u64; f.len()];
        for i in (0..f.len().saturating_sub(1)).rev() {
            src_stride[i] = src_stride[i + 1] * f[i + 1] as u64;
        }
        let tf = target.factors();
        let mut tgt_stride = vec![1u64; tf.len()];
        for i in (0..tf.len().saturating_sub(1)).rev() {
            tgt_stride[i] = tgt_stride[i + 1] * tf[i + 1] as u64;
        }
        let moves = perm
            .iter()
            .enumerate()
            .map(|(j, &p)| (src_stride[p], f[p] as u64, tgt_stride[j]))
            .collect();
        if perm.iter().enumerate().all(|(j, &p)| j == p) {
            return Ok(Arrow::identity(field, space.clone()));
        }
        Ok(Arrow { field, source: space.clone(), target, node: Arc::new(Node::Permute(moves)) })
    }

    /// Reorders whole blocks: the target is `blocks[order[0]] ⊗ blocks[order[1]] ⊗ …`.
    pub fn block_permute(field: FieldSpec, blocks: &[&TensorSpace], order: &[usize]) -> Result<Arrow> {
        check_permutation(order, blocks.len())?;
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut acc = 0;
        for b in blocks {
            offsets.push(acc);
            acc += b.len();
        }
        let perm: Vec<usize> = order.iter().flat_map(|&b| offsets[b]..offsets[b] + blocks[b].len()).collect();
        Arrow::permute(field, &TensorSpace::concat_all(blocks.iter().copied()), &perm)
    }

    /// Tensor product of the parts; an empty list gives the identity on `k`.
    pub fn tensor(field: FieldSpec, parts: Vec<Arrow>) -> Arrow {
        let parts: Vec<Arrow> = parts.into_iter().filter(|p| !(p.is_identity() && p.source.is_unit())).collect();
        match parts.len() {
            0 => Arrow::identity(field, TensorSpace::unit()),
            1 => parts.into_iter().next().unwrap(),
            _ => {
                if parts.iter().all(|p| p.is_identity()) {
                    let space = TensorSpace::concat_all(parts.iter().map(|p| &p.source));
                    return Arrow::identity(field, space);
                }
                let source = TensorSpace::concat_all(parts.iter().map(|p| &p.source));
                let target = TensorSpace::concat_all(parts.iter().map(|p| &p.target));
                Arrow { field, source, target, node: Arc::new(Node::Tensor(parts)) }
            }
        }
    }

    /// `self` followed by `next`; the factor lists must match exactly.
    pub fn then(&self, next: &Arrow) -> Result<Arrow> {
        Arrow::chain(self.field, vec![self.clone(), next.clone()])
    }

    /// Composite applying `steps` left to right.
    pub fn chain(field: FieldSpec, steps: Vec<Arrow>) -> Result<Arrow> {
        for w in steps.windows(2) {
            if w[0].target != w[1].source {
                return Err(Error::TypeMismatch(format!(
                    "step ends in {} but the next starts at {}",
                    w[0].target, w[1].source
                )));
            }
        }
        let first = steps.first().map(|s| s.source.clone()).unwrap_or_default();
        let mut flat = Vec::new();
        for s in steps {
            if s.is_identity() {
                continue;
            }
            match &*s.node {
                Node::Chain(inner) => flat.extend(inner.iter().cloned()),
                _ => flat.push(s),
            }
        }
        Ok(match flat.len() {
            0 => Arrow::identity(field, first),
            1 => flat.pop().unwrap(),
            _ => {
                let source = flat[0].source.clone();
                let target = flat[flat.len() - 1].target.clone();
                Arrow { field, source, target, node: Arc::new(Node::Chain(flat)) }
            }
        })
    }

    pub fn scale(&self, s: &Scalar) -> Arrow {
        if s.is_one() {
            return self.clone();
        }
        Arrow {
            field: self.field,
            source: self.source.clone(),
            target: self.target.clone(),
            node: Arc::new(Node::Scale(s.clone(), self.clone())),
        }
    }

    pub fn sum(&self, other: &Arrow) -> Result<Arrow> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::TypeMismatch(format!(
                "cannot add {}→{} and {}→{}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(Arrow {
            field: self.field,
            source: self.source.clone(),
            target: self.target.clone(),
            node: Arc::new(Node::Sum(self.clone(), other.clone())),
        })
    }

    /// Same action on flat indices with new factor bookkeeping.
    pub fn retag(&self, source: TensorSpace, target: TensorSpace) -> Result<Arrow> {
        if source.dim() != self.source.dim() || target.dim() != self.target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot retag {}→{} as {source}→{target}",
                self.source, self.target
            )));
        }
        let cols = (0..self.source.dim()).map(|i| self.apply_basis(i)).collect();
        Arrow::from_columns(self.field, source, target, cols)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn source(&self) -> &TensorSpace {
        &self.source
    }

    pub fn target(&self) -> &TensorSpace {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        matches!(*self.node, Node::Identity)
    }

    /// Image of source basis vector `index`.
    pub fn apply_basis(&self, index: u64) -> SparseVec {
        match &*self.node {
            Node::Identity => SparseVec::basis(self.field, index),
            Node::Matrix(cols) => cols[index as usize].clone(),
            Node::Permute(moves) => {
                let t = moves.iter().map(|&(s, d, t)| ((index / s) % d) * t).sum();
                SparseVec::basis(self.field, t)
            }
            Node::Tensor(parts) => {
                let mut rest = index;
                let mut subs = vec![0u64; parts.len()];
                for (slot, p) in subs.iter_mut().zip(parts).rev() {
                    let d = p.source.dim();
                    *slot = rest % d;
                    rest /= d;
                }
                let mut acc = SparseVec::basis(self.field, 0);
                for (p, sub) in parts.iter().zip(subs) {
                    let img = p.apply_basis(sub);
                    if img.is_zero() {
                        return SparseVec::zero();
                    }
                    acc = acc.kron(&img, p.target.dim());
                }
                acc
            }
            Node::Chain(steps) => {
                let mut v = steps[0].apply_basis(index);
                for s in &steps[1..] {
                    if v.is_zero() {
                        break;
                    }
                    v = s.apply(&v);
                }
                v
            }
            Node::Scale(s, inner) => inner.apply_basis(index).scale(s),
            Node::Sum(a, b) => a.apply_basis(index).add(&b.apply_basis(index)),
        }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        match &*self.node {
            Node::Identity => v.clone(),
            Node::Chain(steps) => steps.iter().fold(v.clone(), |acc, s| s.apply(&acc)),
            Node::Scale(s, inner) => inner.apply(v).scale(s),
            Node::Permute(_) => SparseVec::from_terms(v.terms().iter().map(|(i, c)| {
                let img = self.apply_basis(*i);
                (img.terms()[0].0, c.clone())
            })),
            _ => {
                if let [(i, c)] = v.terms() {
                    return self.apply_basis(*i).scale(c);
                }
                let mut acc = Accumulator::default();
                for (i, c) in v.terms() {
                    for (j, d) in self.apply_basis(*i).terms() {
                        acc.add(*j, c * d);
                    }
                }
                acc.finish()
            }
        }
    }

    /// Dense materialization; only sensible for small spaces.
    pub fn to_linmap(&self) -> Result<LinMap> {
        let t = usize::try_from(self.target.dim()).map_err(|_| Error::DimensionMismatch("target too large".into()))?;
        let cols: Vec<Vec<Scalar>> = (0..self.source.dim()).map(|i| self.apply_basis(i).to_dense(self.field, t)).collect();
        LinMap::from_fn(self.field, self.source.clone(), self.target.clone(), |r, c| cols[c][r].clone())
    }

    /// Exact comparison over every source basis vector, in index order.
    pub fn compare(&self, other: &Arrow) -> Result<Option<Difference>> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::TypeMismatch(format!(
                "comparing {}→{} with {}→{}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(self.compare_on(other, 0..self.source.dim()))
    }

    /// Comparison restricted to the given source basis indices.
    pub fn compare_on(&self, other: &Arrow, indices: impl IntoIterator<Item = u64>) -> Option<Difference> {
        indices.into_iter().find_map(|index| {
            let left = self.apply_basis(index);
            let right = other.apply_basis(index);
            (left != right).then_some(Difference { index, left, right })
        })
    }
}

impl fmt::Debug for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrow({} → {})", self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{compose, leg_permutation, tensor};

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn sp(f: &[usize]) -> TensorSpace {
        TensorSpace::new(f.to_vec()).unwrap()
    }

    fn sample(s: &[usize], t: &[usize], seed: i64) -> LinMap {
        LinMap::from_fn(q(), sp(s), sp(t), |r, c| q().int((r as i64 * 3 + c as i64 * 5 + seed) % 7 - 3)).unwrap()
    }

    #[test]
    fn arrows_agree_with_dense_maps() {
        let f = sample(&[2], &[3], 1);
        let g = sample(&[3], &[2, 2], 2);
        let h = sample(&[2], &[2], 4);
        let dense = tensor(&compose(&g, &f).unwrap(), &h);
        let lazy = Arrow::tensor(q(), vec![Arrow::matrix(&f).then(&Arrow::matrix(&g)).unwrap(), Arrow::matrix(&h)]);
        assert_eq!(lazy.to_linmap().unwrap(), dense);
    }

    #[test]
    fn permute_matches_leg_permutation() {
        let space = sp(&[2, 3, 4, 1]);
        let perm = [2, 0, 3, 1];
        let a = Arrow::permute(q(), &space, &perm).unwrap();
        assert_eq!(a.to_linmap().unwrap(), leg_permutation(q(), &space, &perm).unwrap());
    }

    #[test]
    fn block_permute_moves_blocks() {
        let (x, y, z) = (sp(&[2]), sp(&[3, 1]), sp(&[]));
        let a = Arrow::block_permute(q(), &[&x, &y, &z], &[1, 2, 0]).unwrap();
        assert_eq!(a.target(), &sp(&[3, 1, 2]));
        assert_eq!(a.to_linmap().unwrap(), leg_permutation(q(), &sp(&[2, 3, 1]), &[1, 2, 0]).unwrap());
    }

    #[test]
    fn chain_is_strictly_typed() {
        let a = Arrow::identity(q(), sp(&[2, 3]));
        let b = Arrow::identity(q(), sp(&[3, 2]));
        assert!(matches!(a.then(&b), Err(Error::TypeMismatch(_))));
    }

    #[test]
    fn compare_reports_first_difference() {
        let swap = Arrow::permute(q(), &sp(&[2, 2]), &[1, 0]).unwrap();
        let id = Arrow::identity(q(), sp(&[2, 2]));
        let d = swap.compare(&id).unwrap().unwrap();
        assert_eq!(d.index, 1);
        assert_eq!(d.left, SparseVec::basis(q(), 2));
        assert!(id.compare(&id).unwrap().is_none());
    }
}
