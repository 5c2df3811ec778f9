//! Standard small instances.

use crate::arith::{FieldSpec, Scalar};
use crate::bialg::{BialgebraData, ClassicalRElement, Tensor3};
use crate::monad_em::SeparatelyOpmonoidalData;

fn zeros3(f: FieldSpec, n: usize) -> Tensor3 {
    vec![vec![vec![f.zero(); n]; n]; n]
}

/// `k[M]` for a finite monoid given by its table (`table[i][j]` = index of `e_i·e_j`),
/// with grouplike comultiplication and `ε ≡ 1`. Element 0 is the unit.
pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>], names: Option<Vec<String>>) -> BialgebraData {
    let n = table.len();
    let mut mul = zeros3(field, n);
    let mut comul = zeros3(field, n);
    for i in 0..n {
        for j in 0..n {
            mul[i][j][table[i][j]] = field.one();
        }
        comul[i][i][i] = field.one();
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    BialgebraData { field, dim: n, unit, mul, comul, counit: vec![field.one(); n], basis_names: names }
}

/// `k[C₂]` with basis `{e, g}`.
pub fn c2(field: FieldSpec) -> BialgebraData {
    group_algebra(field, &[vec![0, 1], vec![1, 0]], Some(vec!["e".into(), "g".into()]))
}

/// The one-dimensional bialgebra `k`.
pub fn trivial_bialgebra(field: FieldSpec) -> BialgebraData {
    group_algebra(field, &[vec![0]], Some(vec!["1".into()]))
}

/// Sweedler's four-dimensional algebra on `{1, g, x, gx}`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `ε(g) = 1`, `ε(x) = 0`.
pub fn sweedler(field: FieldSpec) -> BialgebraData {
    // basis index ↔ monomial g^a x^b
    const MONO: [(usize, usize); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let index = |a: usize, b: usize| MONO.iter().position(|&m| m == (a % 2, b)).unwrap();
    let mut mul = zeros3(field, 4);
    for (i, &(a1, b1)) in MONO.iter().enumerate() {
        for (j, &(a2, b2)) in MONO.iter().enumerate() {
            if b1 + b2 > 1 {
                continue;
            }
            // x g = −g x
            let sign = if b1 == 1 && a2 == 1 { -1 } else { 1 };
            mul[i][j][index(a1 + a2, b1 + b2)] = field.int(sign);
        }
    }
    let mut comul = zeros3(field, 4);
    let one = field.one();
    comul[0][0][0] = one.clone();
    comul[1][1][1] = one.clone();
    comul[2][2][0] = one.clone();
    comul[2][1][2] = one.clone();
    comul[3][3][1] = one.clone();
    comul[3][0][3] = one.clone();
    BialgebraData {
        field,
        dim: 4,
        unit: vec![one.clone(), field.zero(), field.zero(), field.zero()],
        mul,
        comul,
        counit: vec![one.clone(), one, field.zero(), field.zero()],
        basis_names: Some(["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect()),
    }
}

fn half(f: FieldSpec) -> Scalar {
    f.ratio(1, 2).expect("characteristic is not 2")
}

/// `r₀ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
pub fn sweedler_r0(h: &BialgebraData) -> ClassicalRElement {
    let f = h.field;
    let c = half(f);
    let m = -&c;
    ClassicalRElement::from_terms(h, &[(c.clone(), 0, 0), (c.clone(), 0, 1), (c, 1, 0), (m, 1, 1)])
}

/// The one-parameter family `r_λ = r₀ + (λ/2)(x⊗x − x⊗gx + gx⊗x + gx⊗gx)`.
pub fn sweedler_r_lambda(h: &BialgebraData, lambda: &Scalar) -> ClassicalRElement {
    let f = h.field;
    let l = &half(f) * lambda;
    let mut terms = vec![];
    for (sign, i, j) in [(1, 2, 2), (-1, 2, 3), (1, 3, 2), (1, 3, 3)] {
        terms.push((&l * &f.int(sign), i, j));
    }
    let base = sweedler_r0(h);
    let extra = ClassicalRElement::from_terms(h, &terms);
    ClassicalRElement { r2: base.r2.iter().zip(&extra.r2).map(|(a, b)| a + b).collect() }
}

/// Functions on `C₂` (idempotents `p0`, `p1`) with two bialgebra structures:
/// the dual of `k[C₂]`, and its transport along `p0 ↔ p1`. The counits differ.
pub fn c2_dual_two_counits(field: FieldSpec) -> SeparatelyOpmonoidalData {
    let mut mul = zeros3(field, 2);
    mul[0][0][0] = field.one();
    mul[1][1][1] = field.one();
    let names = Some(vec!["p0".to_string(), "p1".to_string()]);
    let comul_for = |identity: usize| {
        let mut c = zeros3(field, 2);
        #[allow(clippy::needless_range_loop)]
        for a in 0..2 {
            for b in 0..2 {
                // product in the group with neutral element `identity`
                let h = (a + b + identity) % 2;
                c[h][a][b] = field.one();
            }
        }
        c
    };
    let make = |identity: usize| {
        let mut counit = vec![field.zero(); 2];
        counit[identity] = field.one();
        BialgebraData {
            field,
            dim: 2,
            unit: vec![field.one(), field.one()],
            mul: mul.clone(),
            comul: comul_for(identity),
            counit,
            basis_names: names.clone(),
        }
    };
    SeparatelyOpmonoidalData::new(make(0), make(1)).expect("same algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialg::{check_classical_qt, validate_bialgebra};

    #[test]
    fn both_structures_of_the_dual_are_bialgebras() {
        let s = c2_dual_two_counits(FieldSpec::Rationals);
        assert!(validate_bialgebra(s.circ()).unwrap().passed);
        assert!(validate_bialgebra(s.bullet()).unwrap().passed);
        assert_ne!(s.circ().counit, s.bullet().counit);
    }

    #[test]
    fn r_lambda_is_quasitriangular() {
        let q = FieldSpec::Rationals;
        let h = sweedler(q);
        for l in [0, 1, 2, -3] {
            let rep = check_classical_qt(&h, &sweedler_r_lambda(&h, &q.int(l))).unwrap();
            assert!(rep.passed, "λ = {l}: {rep}");
        }
    }
}
