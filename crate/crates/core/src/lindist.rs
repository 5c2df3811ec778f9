//! Linear distributors of a normal duoidal structure (`⊗ = ∘`, `⊙ = •`) and
//! the criteria for lifting them to T-algebras.

use crate::arith::{Arrow, TensorSpace};
use crate::duoidal::{check_double_opmonoidal, check_duoidal_axioms, DuoidalStructure, Interchange};
use crate::error::{Error, Result};
use crate::monad_em::{tuples, Flavor, ModuleObject, Obj, Probes, SeparatelyOpmonoidalData};
use crate::report::{Case, CheckReport, LegNames, Verdict};

pub const NORMAL_TO_LINDIST: &str = "eq:normal-duoidal-to-linear-dist";
pub const B0_CONJUGATE: &str = "eq:normal-B0-conjugate";
pub const LIFT1: &str = "eq:linearly-distributive-monad-1";
pub const LIFT2: &str = "eq:linearly-distributive-monad-2";
pub const LIFT3: &str = "eq:linearly-distributive-monad-3";
pub const LIFT4: &str = "eq:linearly-distributive-monad-4";

/// The four distributors, each `ζ` with a unit inserted (unitors are identities here).
#[derive(Clone, Debug)]
pub struct LinearDistributors {
    d: DuoidalStructure,
    planar: bool,
}

impl LinearDistributors {
    pub fn structure(&self) -> &DuoidalStructure {
        &self.d
    }

    pub fn is_planar(&self) -> bool {
        self.planar
    }

    /// Only `∂ℓℓ` and `∂rr`.
    pub fn non_planar(mut self) -> Self {
        self.planar = false;
        self
    }

    fn require_planar(&self, which: &str) -> Result<()> {
        if self.planar {
            Ok(())
        } else {
            Err(Error::MalformedInstance(format!("{which} is not part of a non-planar structure")))
        }
    }

    /// `∂ℓℓ: a∘(b•c) → (a∘b)•c`, via `ζ_{a,1,b,c}`.
    pub fn ll(&self, a: &TensorSpace, b: &TensorSpace, c: &TensorSpace) -> Result<Arrow> {
        self.d.zeta(a, &TensorSpace::unit(), b, c)
    }

    /// `∂ℓr: a∘(b•c) → b•(a∘c)`, via `ζ_{1,a,b,c}`.
    pub fn lr(&self, a: &TensorSpace, b: &TensorSpace, c: &TensorSpace) -> Result<Arrow> {
        self.require_planar("∂ℓr")?;
        self.d.zeta(&TensorSpace::unit(), a, b, c)
    }

    /// `∂rℓ: (b•c)∘a → (b∘a)•c`, via `ζ_{b,c,a,1}`; arguments in source order `b, c, a`.
    pub fn rl(&self, b: &TensorSpace, c: &TensorSpace, a: &TensorSpace) -> Result<Arrow> {
        self.require_planar("∂rℓ")?;
        self.d.zeta(b, c, a, &TensorSpace::unit())
    }

    /// `∂rr: (b•c)∘a → b•(c∘a)`, via `ζ_{b,c,1,a}`; arguments in source order `b, c, a`.
    pub fn rr(&self, b: &TensorSpace, c: &TensorSpace, a: &TensorSpace) -> Result<Arrow> {
        self.d.zeta(b, c, &TensorSpace::unit(), a)
    }
}

/// Requires the duoidal axioms to hold at `objects`.
pub fn distributors_from_normal(d: &DuoidalStructure, objects: &[Obj], budget: u64) -> Result<LinearDistributors> {
    let rep = check_duoidal_axioms(d, objects, budget);
    if !rep.passed {
        let failed: Vec<&str> = rep.verdicts.iter().filter(|v| !v.passed).map(|v| v.id.as_str()).collect();
        return Err(Error::PrerequisiteFailed(format!("not duoidal: {} fails", failed.join(", "))));
    }
    Ok(LinearDistributors { d: d.clone(), planar: true })
}

/// For the symmetric interchange, compares each distributor with the reindexing
/// obtained from the braiding directly: `∂ℓℓ`, `∂rr` are identities, `∂ℓr` swaps
/// the first two blocks and `∂rℓ` the last two.
pub fn check_distributors(dst: &LinearDistributors, objects: &[Obj], budget: u64) -> Verdict {
    if !matches!(dst.d.interchange, Interchange::Symmetric) {
        return Verdict::pass(NORMAL_TO_LINDIST, 0).with_note("no independent description for a non-symmetric interchange");
    }
    let f = dst.d.field;
    let dims: Vec<u64> = objects.iter().map(|o| o.space.dim()).collect();
    let cases: Vec<(Vec<usize>, usize)> = tuples(&dims, 3, budget)
        .into_iter()
        .flat_map(|t| (0..if dst.planar { 4 } else { 2 }).map(move |w| (t.clone(), w)))
        .collect();
    Verdict::over(NORMAL_TO_LINDIST, &cases, |(t, which)| {
        let [x, y, z] = [0, 1, 2].map(|j| &objects[t[j]]);
        let name = ["∂ℓℓ", "∂rr", "∂ℓr", "∂rℓ"][*which];
        let at = format!("{name} at ({x}, {y}, {z})");
        let (sx, sy, sz) = (&x.space, &y.space, &z.space);
        let build = || -> Result<Case> {
            let (left, order) = match which {
                0 => (dst.ll(sx, sy, sz)?, [0, 1, 2]),
                1 => (dst.rr(sx, sy, sz)?, [0, 1, 2]),
                2 => (dst.lr(sx, sy, sz)?, [1, 0, 2]),
                _ => (dst.rl(sx, sy, sz)?, [0, 2, 1]),
            };
            let right = Arrow::block_permute(f, &[sx, sy, sz], &order)?;
            let names = [&x.names, &y.names, &z.names];
            Ok(Case {
                at: at.clone(),
                left,
                right,
                source: LegNames::concat_all(names),
                target: LegNames::concat_all(order.map(|i| names[i])),
            })
        };
        build().map_err(|e| (at.clone(), e))
    })
}

/// `T₀•` against `T₀∘` conjugated by the (identity) unit isomorphisms, plus the
/// two bimonad triangles `T₀ ∘ η = id`.
pub fn b0_conjugation_verdict(s: &SeparatelyOpmonoidalData) -> Verdict {
    let k = TensorSpace::unit();
    let cases = [0usize, 1, 2];
    Verdict::over(B0_CONJUGATE, &cases, |&which| {
        let at = ["T₀• vs T₀∘ through T(≅)", "T₀•∘η₁ = id", "T₀∘∘η⊥ = id"][which].to_string();
        let build = || -> Result<Case> {
            let (left, right) = match which {
                0 => (s.counit(Flavor::Bullet).clone(), s.counit(Flavor::Circ).clone()),
                1 => (s.chain(vec![s.eta(&k), s.counit(Flavor::Bullet).clone()])?, s.id(&k)),
                _ => (s.chain(vec![s.eta(&k), s.counit(Flavor::Circ).clone()])?, s.id(&k)),
            };
            let source = if which == 0 { s.b().names.clone() } else { LegNames::default() };
            Ok(Case { at: at.clone(), left, right, source, target: LegNames::default() })
        };
        build().map_err(|e| (at.clone(), e))
    })
}

pub fn check_b0_conjugation(s: &SeparatelyOpmonoidalData) -> bool {
    b0_conjugation_verdict(s).passed
}

type Built = std::result::Result<Case, (String, Error)>;

fn triple_label(ms: [&ModuleObject; 3]) -> String {
    format!("({}, {}, {})", ms[0].label(), ms[1].label(), ms[2].label())
}

fn lift_square(
    s: &SeparatelyOpmonoidalData,
    dst: &LinearDistributors,
    modules: &[ModuleObject],
    budget: u64,
    which: usize,
) -> Verdict {
    let id = [LIFT1, LIFT2, LIFT3, LIFT4][which];
    let dims: Vec<u64> = modules.iter().map(|m| m.space().dim()).collect();
    let triples = tuples(&dims, 3, budget);
    let (circ, bullet) = (Flavor::Circ, Flavor::Bullet);
    let bn = &s.b().names;
    Verdict::over(id, &triples, |t| -> Built {
        let ms = [0, 1, 2].map(|j| &modules[t[j]]);
        let at = triple_label(ms);
        let [a, b, c] = ms.map(|m| m.space().clone());
        let [ta, tb, tc] = ms.map(|m| s.t_obj(&m.obj).space);
        let [na, nb, nc] = ms.map(|m| &m.obj.names);
        let tn = |n: &LegNames| bn.concat(n);
        let build = || -> Result<Case> {
            let (top, bottom, source, target) = match which {
                // a∘(b•c) → (a∘b)•c
                0 => (
                    vec![
                        s.t2(circ, &a, &b.concat(&c)),
                        s.tensor(vec![s.id(&ta), s.t2(bullet, &b, &c)]),
                        dst.ll(&ta, &tb, &tc)?,
                    ],
                    vec![
                        s.t_map(&dst.ll(&a, &b, &c)?),
                        s.t2(bullet, &a.concat(&b), &c),
                        s.tensor(vec![s.t2(circ, &a, &b), s.id(&tc)]),
                    ],
                    LegNames::concat_all([bn, na, nb, nc]),
                    LegNames::concat_all([&tn(na), &tn(nb), &tn(nc)]),
                ),
                // (a•b)∘c → a•(b∘c), blocks named b, c, a in the source
                1 => (
                    vec![
                        s.t2(circ, &a.concat(&b), &c),
                        s.tensor(vec![s.t2(bullet, &a, &b), s.id(&tc)]),
                        dst.rr(&ta, &tb, &tc)?,
                    ],
                    vec![
                        s.t_map(&dst.rr(&a, &b, &c)?),
                        s.t2(bullet, &a, &b.concat(&c)),
                        s.tensor(vec![s.id(&ta), s.t2(circ, &b, &c)]),
                    ],
                    LegNames::concat_all([bn, na, nb, nc]),
                    LegNames::concat_all([&tn(na), &tn(nb), &tn(nc)]),
                ),
                // a∘(b•c) → b•(a∘c)
                2 => (
                    vec![
                        s.t2(circ, &a, &b.concat(&c)),
                        s.tensor(vec![s.id(&ta), s.t2(bullet, &b, &c)]),
                        dst.lr(&ta, &tb, &tc)?,
                    ],
                    vec![
                        s.t_map(&dst.lr(&a, &b, &c)?),
                        s.t2(bullet, &b, &a.concat(&c)),
                        s.tensor(vec![s.id(&tb), s.t2(circ, &a, &c)]),
                    ],
                    LegNames::concat_all([bn, na, nb, nc]),
                    LegNames::concat_all([&tn(nb), &tn(na), &tn(nc)]),
                ),
                // (a•b)∘c → a•(c∘b)
                _ => (
                    vec![
                        s.t2(circ, &a.concat(&b), &c),
                        s.tensor(vec![s.t2(bullet, &a, &b), s.id(&tc)]),
                        dst.rl(&ta, &tb, &tc)?,
                    ],
                    vec![
                        s.t_map(&dst.rl(&a, &b, &c)?),
                        s.t2(bullet, &a, &c.concat(&b)),
                        s.tensor(vec![s.id(&ta), s.t2(circ, &c, &b)]),
                    ],
                    LegNames::concat_all([bn, na, nb, nc]),
                    LegNames::concat_all([&tn(na), &tn(nc), &tn(nb)]),
                ),
            };
            Ok(Case { at: at.clone(), left: s.chain(top)?, right: s.chain(bottom)?, source, target })
        };
        build().map_err(|e| (at.clone(), e))
    })
}

/// Squares 1 and 2 (`∂ℓℓ`, `∂rr`) at probe module triples.
pub fn check_lindist_lift_nonplanar(s: &SeparatelyOpmonoidalData, dst: &LinearDistributors, probes: &Probes) -> CheckReport {
    let mut rep = CheckReport::new("lindist-nonplanar");
    rep.push(check_distributors(&dst.clone().non_planar(), &probes.objects, probes.budget));
    rep.push(b0_conjugation_verdict(s));
    for which in [0, 1] {
        rep.push(lift_square(s, dst, &probes.modules, probes.budget, which));
    }
    rep
}

/// All four squares; a non-planar structure fails squares 3 and 4 outright.
pub fn check_lindist_lift_planar(s: &SeparatelyOpmonoidalData, dst: &LinearDistributors, probes: &Probes) -> CheckReport {
    let mut rep = CheckReport::new("lindist-planar");
    rep.push(check_distributors(dst, &probes.objects, probes.budget));
    rep.push(b0_conjugation_verdict(s));
    for which in [0, 1, 2, 3] {
        rep.push(lift_square(s, dst, &probes.modules, probes.budget, which));
    }
    rep
}

/// Double opmonoidal on a normal duoidal base ⇒ all four squares lift.
pub fn check_double_opmonoidal_implies_lindist(
    s: &SeparatelyOpmonoidalData,
    d: &DuoidalStructure,
    probes: &Probes,
) -> Result<CheckReport> {
    let pre = check_double_opmonoidal(s, d, &probes.objects, probes.budget);
    if !pre.passed {
        let failed: Vec<&str> = pre.verdicts.iter().filter(|v| !v.passed).map(|v| v.id.as_str()).collect();
        return Err(Error::PrerequisiteFailed(format!("not double opmonoidal: {} fails", failed.join(", "))));
    }
    let dst = distributors_from_normal(d, &probes.objects, probes.budget)?;
    let mut rep = check_lindist_lift_planar(s, &dst, probes);
    rep.suite = "double-opmonoidal-implies-lindist".into();
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldSpec;
    use crate::corpus;
    use crate::monad_em::default_objects;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn dst() -> LinearDistributors {
        distributors_from_normal(&DuoidalStructure::symmetric(q()), &default_objects(), 64).unwrap()
    }

    #[test]
    fn distributor_examples() {
        let d = dst();
        let (k2, k3) = (TensorSpace::single(2), TensorSpace::single(3));
        let ll = d.ll(&k2, &k2, &k2).unwrap();
        assert!(ll.compare(&Arrow::identity(q(), TensorSpace::new(vec![2, 2, 2]).unwrap())).unwrap().is_none());
        // (b•c)∘a with b = k², c = k³, a = k²: moves a in front of c
        let rl = d.rl(&k2, &k3, &k2).unwrap();
        let expect = Arrow::block_permute(q(), &[&k2, &k3, &k2], &[0, 2, 1]).unwrap();
        assert!(rl.compare(&expect).unwrap().is_none());
        let k = TensorSpace::unit();
        for m in [d.ll(&k, &k, &k), d.lr(&k, &k, &k), d.rl(&k, &k, &k), d.rr(&k, &k, &k)] {
            assert_eq!(m.unwrap().to_linmap().unwrap().get(0, 0), &q().one());
        }
        assert!(d.clone().non_planar().lr(&k, &k, &k).is_err());
        assert!(check_distributors(&d, &default_objects(), 64).passed);
    }

    #[test]
    fn lifts_on_corpus() {
        for (b, planar) in [(corpus::c2(q()), true), (corpus::sweedler(q()), false)] {
            let s = SeparatelyOpmonoidalData::from_bialgebra(b).unwrap();
            let probes = Probes::standard(&s).with_budget(64);
            assert!(check_lindist_lift_nonplanar(&s, &dst(), &probes).passed);
            let rep = check_lindist_lift_planar(&s, &dst(), &probes);
            assert_eq!(rep.passed, planar, "{rep}");
            if !planar {
                let v = rep.verdict(LIFT3).unwrap();
                assert!(!v.passed);
                assert_eq!(v.witness.as_ref().unwrap().basis, "x");
            }
        }
    }

    #[test]
    fn non_coassociative_comultiplication_breaks_nonplanar_lift() {
        let mut b = corpus::c2(q());
        // Δg = g⊗g + e⊗g − g⊗e
        b.comul[1][0][1] = q().one();
        b.comul[1][1][0] = q().int(-1);
        let s = SeparatelyOpmonoidalData::from_bialgebra(b).unwrap();
        let rep = check_lindist_lift_nonplanar(&s, &dst(), &Probes::standard(&s).with_budget(64));
        assert!(!rep.passed);
        assert!(rep.verdict(LIFT1).unwrap().witness.is_some());
    }

    #[test]
    fn b0_conjugation_examples() {
        let qc2 = SeparatelyOpmonoidalData::from_bialgebra(corpus::c2(q())).unwrap();
        assert!(check_b0_conjugation(&qc2));
        assert!(!check_b0_conjugation(&corpus::c2_dual_two_counits(q())));
        let triv = SeparatelyOpmonoidalData::from_bialgebra(corpus::trivial_bialgebra(q())).unwrap();
        assert!(check_b0_conjugation(&triv));
    }

    #[test]
    fn implication_guarded_by_double_opmonoidality() {
        let d = DuoidalStructure::symmetric(q());
        let f5 = FieldSpec::prime(5).unwrap();
        let s = SeparatelyOpmonoidalData::from_bialgebra(corpus::c2(f5)).unwrap();
        let ds = DuoidalStructure::symmetric(f5);
        assert!(check_double_opmonoidal_implies_lindist(&s, &ds, &Probes::standard(&s).with_budget(64)).unwrap().passed);
        let h = SeparatelyOpmonoidalData::from_bialgebra(corpus::sweedler(q())).unwrap();
        assert!(matches!(
            check_double_opmonoidal_implies_lindist(&h, &d, &Probes::standard(&h)),
            Err(Error::PrerequisiteFailed(_))
        ));
    }
}
