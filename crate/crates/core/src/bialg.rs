//! Finite-dimensional bialgebras given by structure constants.
//!
//! Index conventions, fixed throughout:
//! `mul[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`, and
//! `comul[i][j][k]` is the coefficient of `e_j⊗e_k` in `Δ(e_i)`.

use std::sync::Arc;

use crate::arith::{Arrow, FieldSpec, LinMap, Scalar, SparseVec, TensorSpace};
use crate::error::{Error, Result};
use crate::report::{Case, CheckReport, LegNames, Verdict};

pub type Tensor3 = Vec<Vec<Vec<Scalar>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    pub field: FieldSpec,
    pub dim: usize,
    pub unit: Vec<Scalar>,
    pub mul: Tensor3,
    pub comul: Tensor3,
    pub counit: Vec<Scalar>,
    /// Display names for the basis, e.g. `["1", "g", "x", "gx"]`.
    pub basis_names: Option<Vec<String>>,
}

/// An element of `B⊗B`, stored densely with the first leg most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalRElement {
    pub r2: Vec<Scalar>,
}

impl ClassicalRElement {
    pub fn from_terms(b: &BialgebraData, terms: &[(Scalar, usize, usize)]) -> Self {
        let n = b.dim;
        let v = SparseVec::from_terms(terms.iter().map(|(c, i, j)| ((i * n + j) as u64, c.clone())));
        ClassicalRElement { r2: v.to_dense(b.field, n * n) }
    }

    pub fn unit(b: &BialgebraData) -> Self {
        let u = b.unit_vec();
        ClassicalRElement { r2: u.kron(&u, b.dim as u64).to_dense(b.field, b.dim * b.dim) }
    }

    pub fn sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.r2)
    }

    /// `τ(r)`: the two legs exchanged.
    pub fn flip(&self, n: usize) -> Self {
        let mut r2 = self.r2.clone();
        for i in 0..n {
            for j in 0..n {
                r2[j * n + i] = self.r2[i * n + j].clone();
            }
        }
        ClassicalRElement { r2 }
    }
}

fn shape_error(what: &str, expected: usize, found: usize) -> Error {
    Error::MalformedInstance(format!("{what}: expected {expected} entries, found {found}"))
}

impl BialgebraData {
    pub fn check_shapes(&self) -> Result<()> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::MalformedInstance("dimension must be positive".into()));
        }
        let vec_ok = |v: &[Scalar], what: &str| -> Result<()> {
            if v.len() != n {
                return Err(shape_error(what, n, v.len()));
            }
            Ok(())
        };
        vec_ok(&self.unit, "unit")?;
        vec_ok(&self.counit, "counit")?;
        for (name, t) in [("mul", &self.mul), ("comul", &self.comul)] {
            if t.len() != n {
                return Err(shape_error(name, n, t.len()));
            }
            for (i, plane) in t.iter().enumerate() {
                if plane.len() != n {
                    return Err(shape_error(&format!("{name}[{i}]"), n, plane.len()));
                }
                for (j, row) in plane.iter().enumerate() {
                    vec_ok(row, &format!("{name}[{i}][{j}]"))?;
                }
            }
        }
        let all = self
            .unit
            .iter()
            .chain(&self.counit)
            .chain(self.mul.iter().flatten().flatten())
            .chain(self.comul.iter().flatten().flatten());
        if let Some(bad) = all.into_iter().find(|s| !self.field.contains(s)) {
            return Err(Error::MalformedInstance(format!("scalar {bad} is not in {}", self.field)));
        }
        if let Some(names) = &self.basis_names {
            if names.len() != n {
                return Err(shape_error("basis names", n, names.len()));
            }
        }
        Ok(())
    }

    pub fn space(&self) -> TensorSpace {
        TensorSpace::single(self.dim)
    }

    pub fn names(&self) -> Arc<Vec<String>> {
        Arc::new(self.basis_names.clone().unwrap_or_else(|| (0..self.dim).map(|i| format!("e{i}")).collect()))
    }

    pub fn legs(&self, count: usize) -> LegNames {
        let one = LegNames::named(self.names());
        LegNames::concat_all(std::iter::repeat_n(&one, count))
    }

    /// `B^{⊗m}`.
    pub fn power(&self, m: usize) -> TensorSpace {
        TensorSpace::new(vec![self.dim; m]).expect("positive dimension")
    }

    pub fn mul_map(&self) -> LinMap {
        let n = self.dim;
        LinMap::from_fn(self.field, self.power(2), self.power(1), |k, col| self.mul[col / n][col % n][k].clone())
            .expect("shapes checked")
    }

    pub fn unit_map(&self) -> LinMap {
        LinMap::from_fn(self.field, TensorSpace::unit(), self.power(1), |k, _| self.unit[k].clone()).expect("shapes checked")
    }

    pub fn comul_map(&self) -> LinMap {
        let n = self.dim;
        LinMap::from_fn(self.field, self.power(1), self.power(2), |row, i| self.comul[i][row / n][row % n].clone())
            .expect("shapes checked")
    }

    pub fn counit_map(&self) -> LinMap {
        LinMap::from_fn(self.field, self.power(1), TensorSpace::unit(), |_, i| self.counit[i].clone()).expect("shapes checked")
    }

    pub fn unit_vec(&self) -> SparseVec {
        SparseVec::from_dense(&self.unit)
    }

    /// Legwise product in `B^{⊗m}`.
    pub fn product(&self, m: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
        left_multiplication(self, m, a).apply(b)
    }

    /// `Δ(e_i)` as an element of `B⊗B`.
    pub fn coproduct_of(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(self.comul_map().column(i))
    }

    /// Same algebra and coalgebra data, ignoring display names.
    pub fn same_structure(&self, other: &BialgebraData) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.unit == other.unit
            && self.mul == other.mul
            && self.comul == other.comul
            && self.counit == other.counit
    }
}

/// Maps `v ↦ a·v` on `B^{⊗m}`.
pub fn left_multiplication(b: &BialgebraData, m: usize, a: &SparseVec) -> Arrow {
    multiplication(b, m, a, true)
}

/// Maps `v ↦ v·a` on `B^{⊗m}`.
pub fn right_multiplication(b: &BialgebraData, m: usize, a: &SparseVec) -> Arrow {
    multiplication(b, m, a, false)
}

fn multiplication(b: &BialgebraData, m: usize, a: &SparseVec, left: bool) -> Arrow {
    let f = b.field;
    let pm = b.power(m);
    let insert = Arrow::element(f, pm.clone(), a.clone()).expect("element of B^m");
    let id = Arrow::identity(f, pm.clone());
    let first = if left {
        Arrow::tensor(f, vec![insert, id])
    } else {
        Arrow::tensor(f, vec![id, insert])
    };
    let perm: Vec<usize> = (0..m).flat_map(|i| [i, m + i]).collect();
    let mul = Arrow::matrix(&b.mul_map());
    Arrow::chain(
        f,
        vec![
            first,
            Arrow::permute(f, &b.power(2 * m), &perm).expect("interleave"),
            Arrow::tensor(f, vec![mul; m]),
        ],
    )
    .expect("well-typed")
}

/// Inserts the unit at leg `pos` of an element of `B^{⊗m}`.
pub fn insert_unit_leg(b: &BialgebraData, m: usize, v: &SparseVec, pos: usize) -> SparseVec {
    let f = b.field;
    let u = Arrow::matrix(&b.unit_map());
    let parts = vec![
        Arrow::identity(f, b.power(pos)),
        u,
        Arrow::identity(f, b.power(m - pos)),
    ];
    Arrow::tensor(f, parts).apply(v)
}

fn case(at: &str, left: Arrow, right: Arrow, source: LegNames, target: LegNames) -> Case {
    Case { at: at.into(), left, right, source, target }
}

/// The seven bialgebra axioms, each with a basis witness on failure.
pub fn validate_bialgebra(b: &BialgebraData) -> Result<CheckReport> {
    b.check_shapes()?;
    let f = b.field;
    let (mu, eta, delta, eps) = (
        Arrow::matrix(&b.mul_map()),
        Arrow::matrix(&b.unit_map()),
        Arrow::matrix(&b.comul_map()),
        Arrow::matrix(&b.counit_map()),
    );
    let id = Arrow::identity(f, b.space());
    let chain = |steps: Vec<Arrow>| Arrow::chain(f, steps).expect("well-typed");
    let t = |parts: Vec<Arrow>| Arrow::tensor(f, parts);
    let mut rep = CheckReport::new("bialgebra");

    rep.push(Verdict::compare(
        "associativity",
        case(
            "B⊗B⊗B",
            chain(vec![t(vec![mu.clone(), id.clone()]), mu.clone()]),
            chain(vec![t(vec![id.clone(), mu.clone()]), mu.clone()]),
            b.legs(3),
            b.legs(1),
        ),
    ));
    let unit_cases = [
        ("left", chain(vec![t(vec![eta.clone(), id.clone()]), mu.clone()])),
        ("right", chain(vec![t(vec![id.clone(), eta.clone()]), mu.clone()])),
    ];
    rep.push(Verdict::over("unitality", &unit_cases, |(side, l)| {
        Ok(case(side, l.clone(), id.clone(), b.legs(1), b.legs(1)))
    }));
    rep.push(Verdict::compare(
        "coassociativity",
        case(
            "B",
            chain(vec![delta.clone(), t(vec![delta.clone(), id.clone()])]),
            chain(vec![delta.clone(), t(vec![id.clone(), delta.clone()])]),
            b.legs(1),
            b.legs(3),
        ),
    ));
    let counit_cases = [
        ("left", chain(vec![delta.clone(), t(vec![eps.clone(), id.clone()])])),
        ("right", chain(vec![delta.clone(), t(vec![id.clone(), eps.clone()])])),
    ];
    rep.push(Verdict::over("counitality", &counit_cases, |(side, l)| {
        Ok(case(side, l.clone(), id.clone(), b.legs(1), b.legs(1)))
    }));
    let mid = Arrow::permute(f, &b.power(4), &[0, 2, 1, 3])?;
    rep.push(Verdict::compare(
        "comultiplication-multiplicative",
        case(
            "B⊗B",
            chain(vec![mu.clone(), delta.clone()]),
            chain(vec![t(vec![delta.clone(), delta.clone()]), mid, t(vec![mu.clone(), mu.clone()])]),
            b.legs(2),
            b.legs(2),
        ),
    ));
    rep.push(Verdict::compare(
        "counit-multiplicative",
        case(
            "B⊗B",
            chain(vec![mu.clone(), eps.clone()]),
            t(vec![eps.clone(), eps.clone()]),
            b.legs(2),
            LegNames::default(),
        ),
    ));
    rep.push(Verdict::compare(
        "comultiplication-unital",
        case(
            "k",
            chain(vec![eta.clone(), delta.clone()]),
            t(vec![eta.clone(), eta.clone()]),
            LegNames::default(),
            b.legs(2),
        ),
    ));
    rep.push(Verdict::compare(
        "counit-unital",
        case("k", chain(vec![eta, eps]), Arrow::identity(f, TensorSpace::unit()), LegNames::default(), LegNames::default()),
    ));
    Ok(rep)
}

/// Compares the structure constants `comul[i][j][k]` and `comul[i][k][j]` directly.
/// Returns the first basis index where they differ.
pub fn is_cocommutative(b: &BialgebraData) -> (bool, Option<usize>) {
    let n = b.dim;
    let w = (0..n).find(|&i| (0..n).any(|j| (0..n).any(|k| b.comul[i][j][k] != b.comul[i][k][j])));
    (w.is_none(), w)
}

/// The same question answered through `maps_equal(Δ, swap∘Δ)`.
pub fn is_cocommutative_via_maps(b: &BialgebraData) -> (bool, Option<usize>) {
    let delta = b.comul_map();
    let swap = crate::arith::leg_permutation(b.field, &b.power(2), &[1, 0]).expect("swap");
    let swapped = crate::arith::compose(&swap, &delta).expect("composable");
    let w = crate::arith::maps_equal(&delta, &swapped).expect("same shape").map(|w| w.index);
    (w.is_none(), w)
}

/// Classical quasitriangularity:
/// `(Δ⊗id)(r) = r₁₃r₂₃`, `(id⊗Δ)(r) = r₁₃r₁₂`, `r·Δ(b) = Δ^op(b)·r`.
pub fn check_classical_qt(b: &BialgebraData, r: &ClassicalRElement) -> Result<CheckReport> {
    b.check_shapes()?;
    if r.r2.len() != b.dim * b.dim {
        return Err(shape_error("classical R-matrix", b.dim * b.dim, r.r2.len()));
    }
    let f = b.field;
    let rv = r.sparse();
    let delta = Arrow::matrix(&b.comul_map());
    let id = Arrow::identity(f, b.space());
    let r13 = insert_unit_leg(b, 2, &rv, 1);
    let r23 = insert_unit_leg(b, 2, &rv, 0);
    let r12 = insert_unit_leg(b, 2, &rv, 2);
    let elem = |v: SparseVec, m: usize| Arrow::element(f, b.power(m), v).expect("element");
    let mut rep = CheckReport::new("classical-qt");

    let lhs1 = Arrow::tensor(f, vec![delta.clone(), id.clone()]).apply(&rv);
    rep.push(Verdict::compare(
        "qt-coproduct-first-leg",
        case("k", elem(lhs1, 3), elem(b.product(3, &r13, &r23), 3), LegNames::default(), b.legs(3)),
    ));
    let lhs2 = Arrow::tensor(f, vec![id, delta.clone()]).apply(&rv);
    rep.push(Verdict::compare(
        "qt-coproduct-second-leg",
        case("k", elem(lhs2, 3), elem(b.product(3, &r13, &r12), 3), LegNames::default(), b.legs(3)),
    ));
    let swap = Arrow::permute(f, &b.power(2), &[1, 0])?;
    rep.push(Verdict::compare(
        "qt-quasi-cocommutativity",
        case(
            "B",
            delta.then(&right_multiplication(b, 2, &rv))?,
            Arrow::chain(f, vec![delta, swap, left_multiplication(b, 2, &rv)])?,
            b.legs(1),
            b.legs(2),
        ),
    ));
    Ok(rep)
}

/// `R_{x,y}: x⊗y → By⊗Bx`, `m⊗n ↦ r²⊗n ⊗ r¹⊗m`.
pub fn classical_component(b: &BialgebraData, r: &SparseVec, x: &TensorSpace, y: &TensorSpace) -> Arrow {
    let f = b.field;
    let bs = b.space();
    let insert = Arrow::element(f, b.power(2), r.clone()).expect("element of B⊗B");
    Arrow::chain(
        f,
        vec![
            Arrow::tensor(f, vec![insert, Arrow::identity(f, x.clone()), Arrow::identity(f, y.clone())]),
            Arrow::block_permute(f, &[&bs, &bs, x, y], &[1, 3, 0, 2]).expect("blocks"),
        ],
    )
    .expect("well-typed")
}

/// Both convolution composites `R⁻¹ * R` and `R * R⁻¹` equal `η⊗η`.
/// `r_inv` uses the same encoding as `r`: `R⁻¹_{y,x}(n⊗m) = s²⊗m ⊗ s¹⊗n`.
pub fn star_inverse_check(b: &BialgebraData, r: &ClassicalRElement, r_inv: &ClassicalRElement) -> Result<bool> {
    b.check_shapes()?;
    let f = b.field;
    let (rv, sv) = (r.sparse(), r_inv.sparse());
    let bs = b.space();
    let mu = Arrow::matrix(&b.mul_map());
    let eta = Arrow::matrix(&b.unit_map());
    for (x, y) in [
        (TensorSpace::unit(), TensorSpace::unit()),
        (TensorSpace::single(2), TensorSpace::single(3)),
    ] {
        let tx = bs.concat(&x);
        let ty = bs.concat(&y);
        let mu_on = |s: &TensorSpace| Arrow::tensor(f, vec![mu.clone(), Arrow::identity(f, s.clone())]);
        let eta_on = |s: &TensorSpace| Arrow::tensor(f, vec![eta.clone(), Arrow::identity(f, s.clone())]);
        // x⊗y → Ty⊗Tx → TTx⊗TTy → Tx⊗Ty
        let inv_r = Arrow::chain(
            f,
            vec![
                classical_component(b, &rv, &x, &y),
                classical_component(b, &sv, &ty, &tx),
                Arrow::tensor(f, vec![mu_on(&x), mu_on(&y)]),
            ],
        )?;
        let unit_xy = Arrow::tensor(f, vec![eta_on(&x), eta_on(&y)]);
        // y⊗x → Tx⊗Ty → TTy⊗TTx → Ty⊗Tx
        let r_inv_ = Arrow::chain(
            f,
            vec![
                classical_component(b, &sv, &y, &x),
                classical_component(b, &rv, &tx, &ty),
                Arrow::tensor(f, vec![mu_on(&y), mu_on(&x)]),
            ],
        )?;
        let unit_yx = Arrow::tensor(f, vec![eta_on(&y), eta_on(&x)]);
        if inv_r.compare(&unit_xy)?.is_some() || r_inv_.compare(&unit_yx)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn group_algebra_of_c2_is_a_bialgebra() {
        assert!(validate_bialgebra(&corpus::c2(FieldSpec::Rationals)).unwrap().passed);
        assert!(validate_bialgebra(&corpus::c2(FieldSpec::prime(3).unwrap())).unwrap().passed);
    }

    #[test]
    fn sweedler_is_a_bialgebra() {
        let rep = validate_bialgebra(&corpus::sweedler(FieldSpec::Rationals)).unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn corrupted_grouplike_fails_counitality_at_g() {
        let mut h = corpus::sweedler(FieldSpec::Rationals);
        let q = h.field;
        // Δ(g) = g⊗1
        h.comul[1] = vec![vec![q.zero(); 4]; 4];
        h.comul[1][1][0] = q.one();
        let rep = validate_bialgebra(&h).unwrap();
        let v = rep.verdict("counitality").unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().basis, "g");
    }

    #[test]
    fn cocommutativity_routes_agree() {
        for b in [corpus::c2(FieldSpec::Rationals), corpus::sweedler(FieldSpec::Rationals), corpus::c2(FieldSpec::prime(3).unwrap())] {
            assert_eq!(is_cocommutative(&b), is_cocommutative_via_maps(&b));
        }
        assert_eq!(is_cocommutative(&corpus::sweedler(FieldSpec::Rationals)), (false, Some(2)));
        assert!(is_cocommutative(&corpus::c2(FieldSpec::Rationals)).0);
    }

    #[test]
    fn classical_qt_examples() {
        let q = FieldSpec::Rationals;
        let c2 = corpus::c2(q);
        assert!(check_classical_qt(&c2, &ClassicalRElement::unit(&c2)).unwrap().passed);
        let h = corpus::sweedler(q);
        assert!(check_classical_qt(&h, &corpus::sweedler_r0(&h)).unwrap().passed);
        let rep = check_classical_qt(&h, &ClassicalRElement::unit(&h)).unwrap();
        let v = rep.verdict("qt-quasi-cocommutativity").unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().basis, "x");
        assert!(rep.verdict("qt-coproduct-first-leg").unwrap().passed);
    }

    #[test]
    fn star_inverse_examples() {
        let q = FieldSpec::Rationals;
        let c2 = corpus::c2(q);
        let one = ClassicalRElement::unit(&c2);
        assert!(star_inverse_check(&c2, &one, &one).unwrap());
        let h = corpus::sweedler(q);
        let r0 = corpus::sweedler_r0(&h);
        assert!(star_inverse_check(&h, &r0, &r0).unwrap());
        assert!(!star_inverse_check(&h, &r0, &ClassicalRElement::unit(&h)).unwrap());
    }

    #[test]
    fn trivial_r_passes_iff_cocommutative() {
        let q = FieldSpec::Rationals;
        for b in [corpus::c2(q), corpus::sweedler(q), corpus::trivial_bialgebra(q)] {
            let rep = check_classical_qt(&b, &ClassicalRElement::unit(&b)).unwrap();
            assert_eq!(rep.passed, is_cocommutative(&b).0);
        }
    }
}
