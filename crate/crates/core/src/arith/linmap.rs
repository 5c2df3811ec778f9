use std::fmt;

use crate::arith::{FieldSpec, Scalar, TensorSpace};
use crate::error::{Error, Result};

/// A dense matrix between tensor spaces. Entries are stored column-major:
/// column `j` is the image of source basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: FieldSpec,
    source: TensorSpace,
    target: TensorSpace,
    entries: Vec<Scalar>,
}

/// First source basis vector on which two maps disagree, with both images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseWitness {
    pub index: usize,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

fn dense_dim(space: &TensorSpace) -> Result<usize> {
    usize::try_from(space.dim())
        .ok()
        .filter(|&d| d <= 1 << 24)
        .ok_or_else(|| Error::DimensionMismatch(format!("{space} is too large for a dense matrix")))
}

impl LinMap {
    pub fn new(field: FieldSpec, source: TensorSpace, target: TensorSpace, entries: Vec<Scalar>) -> Result<Self> {
        let (s, t) = (dense_dim(&source)?, dense_dim(&target)?);
        if entries.len() != s * t {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {t}×{s} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !field.contains(e)) {
            return Err(Error::InvalidScalar(format!("{bad} is not in {field}")));
        }
        Ok(LinMap { field, source, target, entries })
    }

    /// Builds a map from `f(row, col)`.
    pub fn from_fn(
        field: FieldSpec,
        source: TensorSpace,
        target: TensorSpace,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self> {
        let (s, t) = (dense_dim(&source)?, dense_dim(&target)?);
        let mut entries = Vec::with_capacity(s * t);
        for col in 0..s {
            for row in 0..t {
                entries.push(f(row, col));
            }
        }
        LinMap::new(field, source, target, entries)
    }

    /// Row-major nested vectors, the way matrices are usually written down.
    pub fn from_rows(field: FieldSpec, source: TensorSpace, target: TensorSpace, rows: &[Vec<Scalar>]) -> Result<Self> {
        let (s, t) = (dense_dim(&source)?, dense_dim(&target)?);
        if rows.len() != t || rows.iter().any(|r| r.len() != s) {
            return Err(Error::DimensionMismatch(format!("expected a {t}×{s} matrix")));
        }
        LinMap::from_fn(field, source, target, |r, c| rows[r][c].clone())
    }

    pub fn zero(field: FieldSpec, source: TensorSpace, target: TensorSpace) -> Result<Self> {
        LinMap::from_fn(field, source, target, |_, _| field.zero())
    }

    pub fn identity(field: FieldSpec, space: TensorSpace) -> Result<Self> {
        LinMap::from_fn(field, space.clone(), space, |r, c| if r == c { field.one() } else { field.zero() })
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

    pub fn rows(&self) -> usize {
        self.target.dim() as usize
    }

    pub fn cols(&self) -> usize {
        self.source.dim() as usize
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[col * self.rows() + row]
    }

    pub fn column(&self, col: usize) -> &[Scalar] {
        let t = self.rows();
        &self.entries[col * t..(col + 1) * t]
    }

    /// Same matrix with new factor bookkeeping of equal total dimension.
    pub fn retag(&self, source: TensorSpace, target: TensorSpace) -> Result<Self> {
        if source.dim() != self.source.dim() || target.dim() != self.target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "cannot retag {}→{} as {source}→{target}",
                self.source, self.target
            )));
        }
        Ok(LinMap { source, target, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap { entries: self.entries.iter().map(|e| e * s).collect(), ..self.clone() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols() {
            return Err(Error::DimensionMismatch(format!("vector of length {} into {}", v.len(), self.source)));
        }
        let mut out = vec![self.field.zero(); self.rows()];
        for (col, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (row, e) in self.column(col).iter().enumerate() {
                if !e.is_zero() {
                    out[row] = &out[row] + &(e * x);
                }
            }
        }
        Ok(out)
    }
}

/// `g ∘ f`. Only total dimensions must agree; factor structure is taken from `f` and `g`.
pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap> {
    if f.target.dim() != g.source.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot compose {}→{} after {}→{}",
            g.source, g.target, f.source, f.target
        )));
    }
    let field = f.field;
    let (n, m, p) = (g.rows(), f.rows(), f.cols());
    let mut entries = vec![field.zero(); n * p];
    for col in 0..p {
        for mid in 0..m {
            let a = f.get(mid, col);
            if a.is_zero() {
                continue;
            }
            for row in 0..n {
                let b = g.get(row, mid);
                if !b.is_zero() {
                    let slot = &mut entries[col * n + row];
                    *slot = &*slot + &(a * b);
                }
            }
        }
    }
    LinMap::new(field, f.source.clone(), g.target.clone(), entries)
}

/// Kronecker product; factor lists concatenate.
pub fn tensor(f: &LinMap, g: &LinMap) -> LinMap {
    let (gr, gc) = (g.rows(), g.cols());
    let source = f.source.concat(&g.source);
    let target = f.target.concat(&g.target);
    LinMap::from_fn(f.field, source, target, |row, col| {
        f.get(row / gr, col / gc) * g.get(row % gr, col % gc)
    })
    .expect("Kronecker product of valid maps is valid")
}

pub fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    let ok = perm.len() == len
        && perm.iter().all(|&p| p < len && !std::mem::replace(&mut seen[p], true));
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation { perm: perm.to_vec(), len })
    }
}

/// Target factor `j` is source factor `perm[j]`.
pub fn leg_permutation(field: FieldSpec, space: &TensorSpace, perm: &[usize]) -> Result<LinMap> {
    check_permutation(perm, space.len())?;
    let target = TensorSpace::new(perm.iter().map(|&p| space.factors()[p]).collect())?;
    let t = target.clone();
    LinMap::from_fn(field, space.clone(), target, |row, col| {
        let src = space.digits(col as u64);
        let img: Vec<usize> = perm.iter().map(|&p| src[p]).collect();
        if t.flat(&img) == row as u64 {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Exact comparison; `Ok(None)` means equal.
pub fn maps_equal(f: &LinMap, g: &LinMap) -> Result<Option<DenseWitness>> {
    if f.source.dim() != g.source.dim() || f.target.dim() != g.target.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}→{} vs {}→{}",
            f.source, f.target, g.source, g.target
        )));
    }
    Ok((0..f.cols()).find(|&c| f.column(c) != g.column(c)).map(|index| DenseWitness {
        index,
        left: f.column(index).to_vec(),
        right: g.column(index).to_vec(),
    }))
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} → {}", self.source, self.target)?;
        for row in 0..self.rows() {
            let cells: Vec<String> = (0..self.cols()).map(|c| self.get(row, c).to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn sp(f: &[usize]) -> TensorSpace {
        TensorSpace::new(f.to_vec()).unwrap()
    }

    fn ints(field: FieldSpec, s: &[usize], t: &[usize], rows: &[&[i64]]) -> LinMap {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        LinMap::from_rows(field, sp(s), sp(t), &rows).unwrap()
    }

    #[test]
    fn swap_is_an_involution() {
        let swap = leg_permutation(q(), &sp(&[2, 2]), &[1, 0]).unwrap();
        let sq = compose(&swap, &swap).unwrap();
        assert_eq!(sq, LinMap::identity(q(), sp(&[2, 2])).unwrap());
    }

    #[test]
    fn identity_is_neutral() {
        let f = ints(q(), &[2], &[3], &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(compose(&LinMap::identity(q(), sp(&[3])).unwrap(), &f).unwrap(), f);
    }

    #[test]
    fn one_by_one_over_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = ints(f5, &[1], &[1], &[&[3]]);
        let b = ints(f5, &[1], &[1], &[&[4]]);
        assert_eq!(compose(&a, &b).unwrap(), ints(f5, &[1], &[1], &[&[2]]));
    }

    #[test]
    fn compose_rejects_bad_dims() {
        let f = ints(q(), &[2], &[3], &[&[1, 2], &[3, 4], &[5, 6]]);
        assert!(matches!(compose(&f, &f), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kronecker_small_cases() {
        let a = ints(q(), &[1], &[1], &[&[2]]);
        let b = ints(q(), &[1], &[1], &[&[3]]);
        assert_eq!(tensor(&a, &b).get(0, 0), &q().int(6));
        let id2 = LinMap::identity(q(), sp(&[2])).unwrap();
        assert_eq!(tensor(&id2, &id2), LinMap::identity(q(), sp(&[2, 2])).unwrap());
    }

    #[test]
    fn kronecker_acts_on_pure_tensors() {
        let f = ints(q(), &[2], &[2], &[&[1, -2], &[3, 5]]);
        let g = ints(q(), &[2], &[2], &[&[0, 7], &[-1, 4]]);
        let fg = tensor(&f, &g);
        for i in 0..2 {
            for j in 0..2 {
                let mut e = vec![q().zero(); 4];
                e[i * 2 + j] = q().one();
                let lhs = fg.apply(&e).unwrap();
                for a in 0..2 {
                    for b in 0..2 {
                        assert_eq!(lhs[a * 2 + b], f.get(a, i) * g.get(b, j));
                    }
                }
            }
        }
    }

    #[test]
    fn swap_on_two_by_three() {
        let s = leg_permutation(q(), &sp(&[2, 3]), &[1, 0]).unwrap();
        assert_eq!(s.target(), &sp(&[3, 2]));
        for e in 0..2 {
            for f in 0..3 {
                let col = s.column(e * 3 + f);
                for (row, v) in col.iter().enumerate() {
                    assert_eq!(v.is_one(), row == f * 2 + e);
                }
            }
        }
    }

    #[test]
    fn permutation_group_laws() {
        let space = sp(&[2, 3, 4]);
        let id = leg_permutation(q(), &space, &[0, 1, 2]).unwrap();
        assert_eq!(id, LinMap::identity(q(), space.clone()).unwrap());
        let p = [2, 0, 1];
        let fwd = leg_permutation(q(), &space, &p).unwrap();
        let mut inv = [0; 3];
        for (j, &pj) in p.iter().enumerate() {
            inv[pj] = j;
        }
        let back = leg_permutation(q(), fwd.target(), &inv).unwrap();
        assert_eq!(compose(&back, &fwd).unwrap(), LinMap::identity(q(), space.clone()).unwrap());
        assert!(matches!(
            leg_permutation(q(), &space, &[0, 0, 1]),
            Err(Error::InvalidPermutation { .. })
        ));
    }

    #[test]
    fn swap_differs_from_identity_at_e1_e2() {
        let swap = leg_permutation(q(), &sp(&[2, 2]), &[1, 0]).unwrap();
        let id = LinMap::identity(q(), sp(&[2, 2])).unwrap();
        let w = maps_equal(&swap, &id).unwrap().unwrap();
        // e₁⊗e₂ in 1-based naming is flat index 1
        assert_eq!(w.index, 1);
        assert!(maps_equal(&id, &id).unwrap().is_none());
    }
}
