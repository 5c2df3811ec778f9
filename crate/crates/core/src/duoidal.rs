//! Normal duoidal structures on the strict Vect skeleton, the axiom checker
//! (shared between plain objects and Eilenberg–Moore probe modules),
//! bimonoids, double opmonoidal monads and the EM lift.

use std::fmt;
use std::sync::Arc;

use crate::arith::{Arrow, FieldSpec, LinMap, Scalar, TensorSpace};
use crate::bialg::BialgebraData;
use crate::error::{Error, Result};
use crate::monad_em::{arity_budget, 
    check_module_morphism, default_objects, tensor_of_modules, trivial_module, tuples, Flavor, ModuleObject, Obj,
    SeparatelyOpmonoidalData,
};
use crate::report::{Case, CheckReport, LegNames, Verdict};

pub const ASSOC1: &str = "eq:middle-interchange-assoc1";
pub const ASSOC2: &str = "eq:middle-interchange-assoc2";
pub const UNITALITY: &str = "eq:duoidal-cat-unitality";
pub const PI_NU: &str = "eq:pi-nu-morphisms-of-algebras";
pub const INTERCHANGE_SQUARE: &str = "eq:cocommutative-duoidal-bimonad";
pub const UNIT_AUTOMATIC: &str = "eq:cocomm-trialg-unit-automatic";

pub type InterchangeFn = dyn Fn(FieldSpec, [&TensorSpace; 4]) -> Result<Arrow> + Send + Sync;

/// How `ζ_{x,y,a,b}: (x•y)∘(a•b) → (x∘a)•(y∘b)` is produced.
#[derive(Clone)]
pub enum Interchange {
    /// `id⊗σ⊗id`.
    Symmetric,
    /// Deliberately wrong: the identity on `x⊗y⊗a⊗b`, no middle swap.
    Unswapped,
    Custom(Arc<InterchangeFn>),
}

impl fmt::Debug for Interchange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interchange::Symmetric => f.write_str("Symmetric"),
            Interchange::Unswapped => f.write_str("Unswapped"),
            Interchange::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// A normal duoidal structure on Vect (`⊥ = 1 = k`, both products `⊗`).
#[derive(Clone, Debug)]
pub struct DuoidalStructure {
    pub field: FieldSpec,
    pub interchange: Interchange,
    /// `ν: ⊥ → ⊥•⊥`
    pub nu: Scalar,
    /// `ϖ: 1∘1 → 1`
    pub varpi: Scalar,
    /// `ι: ⊥ → 1`
    pub iota: Scalar,
}

impl DuoidalStructure {
    pub fn symmetric(field: FieldSpec) -> Self {
        DuoidalStructure { field, interchange: Interchange::Symmetric, nu: field.one(), varpi: field.one(), iota: field.one() }
    }

    pub fn with_scalars(mut self, nu: Scalar, varpi: Scalar, iota: Scalar) -> Self {
        self.nu = nu;
        self.varpi = varpi;
        self.iota = iota;
        self
    }

    pub fn zeta(&self, x: &TensorSpace, y: &TensorSpace, a: &TensorSpace, b: &TensorSpace) -> Result<Arrow> {
        match &self.interchange {
            Interchange::Symmetric => Ok(zeta_symmetric(self.field, x, y, a, b)),
            Interchange::Unswapped => Ok(Arrow::identity(self.field, TensorSpace::concat_all([x, y, a, b]))),
            Interchange::Custom(f) => {
                let z = f(self.field, [x, y, a, b])?;
                let expect = TensorSpace::concat_all([x, a, y, b]);
                if z.source() != &TensorSpace::concat_all([x, y, a, b]) || z.target() != &expect {
                    return Err(Error::TypeMismatch(format!("custom interchange has type {}→{}", z.source(), z.target())));
                }
                Ok(z)
            }
        }
    }
}

/// `x⊗y⊗a⊗b → x⊗a⊗y⊗b`.
pub fn zeta_symmetric(field: FieldSpec, x: &TensorSpace, y: &TensorSpace, a: &TensorSpace, b: &TensorSpace) -> Arrow {
    Arrow::block_permute(field, &[x, y, a, b], &[0, 2, 1, 3]).expect("four blocks")
}

/// What the axiom checker needs from a duoidal category probed at finitely many objects.
pub trait DuoidalModel: Sync {
    type Ob: Clone + Send + Sync;
    fn field(&self) -> FieldSpec;
    fn space<'a>(&self, x: &'a Self::Ob) -> &'a TensorSpace;
    fn names<'a>(&self, x: &'a Self::Ob) -> &'a LegNames;
    fn label(&self, x: &Self::Ob) -> String;
    fn circ_unit(&self) -> Self::Ob;
    fn bullet_unit(&self) -> Self::Ob;
    fn circ(&self, x: &Self::Ob, y: &Self::Ob) -> Self::Ob;
    fn bullet(&self, x: &Self::Ob, y: &Self::Ob) -> Self::Ob;
    fn zeta(&self, x: &Self::Ob, y: &Self::Ob, a: &Self::Ob, b: &Self::Ob) -> Result<Arrow>;
    /// `(ν, ϖ, ι)`
    fn scalars(&self) -> [Scalar; 3];
}

/// Plain Vect objects.
pub struct VectModel<'a>(pub &'a DuoidalStructure);

impl DuoidalModel for VectModel<'_> {
    type Ob = Obj;
    fn field(&self) -> FieldSpec {
        self.0.field
    }
    fn space<'a>(&self, x: &'a Obj) -> &'a TensorSpace {
        &x.space
    }
    fn names<'a>(&self, x: &'a Obj) -> &'a LegNames {
        &x.names
    }
    fn label(&self, x: &Obj) -> String {
        x.label.clone()
    }
    fn circ_unit(&self) -> Obj {
        Obj::unit()
    }
    fn bullet_unit(&self) -> Obj {
        Obj::unit()
    }
    fn circ(&self, x: &Obj, y: &Obj) -> Obj {
        Obj::cat(&[x, y])
    }
    fn bullet(&self, x: &Obj, y: &Obj) -> Obj {
        Obj::cat(&[x, y])
    }
    fn zeta(&self, x: &Obj, y: &Obj, a: &Obj, b: &Obj) -> Result<Arrow> {
        self.0.zeta(&x.space, &y.space, &a.space, &b.space)
    }
    fn scalars(&self) -> [Scalar; 3] {
        [self.0.nu.clone(), self.0.varpi.clone(), self.0.iota.clone()]
    }
}

pub type ModuleInterchangeFn<'a> =
    dyn Fn(&ModuleObject, &ModuleObject, &ModuleObject, &ModuleObject) -> Result<Arrow> + Send + Sync + 'a;

/// T-algebras with the products induced by `T₂∘`, `T₂•` and a given interchange on them.
pub struct EmModel<'a> {
    pub s: &'a SeparatelyOpmonoidalData,
    pub zeta: Box<ModuleInterchangeFn<'a>>,
    pub scalars: [Scalar; 3],
}

impl DuoidalModel for EmModel<'_> {
    type Ob = ModuleObject;
    fn field(&self) -> FieldSpec {
        self.s.field()
    }
    fn space<'a>(&self, x: &'a ModuleObject) -> &'a TensorSpace {
        x.space()
    }
    fn names<'a>(&self, x: &'a ModuleObject) -> &'a LegNames {
        &x.obj.names
    }
    fn label(&self, x: &ModuleObject) -> String {
        x.label().to_string()
    }
    fn circ_unit(&self) -> ModuleObject {
        trivial_module(self.s, Flavor::Circ)
    }
    fn bullet_unit(&self) -> ModuleObject {
        trivial_module(self.s, Flavor::Bullet)
    }
    fn circ(&self, x: &ModuleObject, y: &ModuleObject) -> ModuleObject {
        tensor_of_modules(self.s, Flavor::Circ, x, y)
    }
    fn bullet(&self, x: &ModuleObject, y: &ModuleObject) -> ModuleObject {
        tensor_of_modules(self.s, Flavor::Bullet, x, y)
    }
    fn zeta(&self, x: &ModuleObject, y: &ModuleObject, a: &ModuleObject, b: &ModuleObject) -> Result<Arrow> {
        (self.zeta)(x, y, a, b)
    }
    fn scalars(&self) -> [Scalar; 3] {
        self.scalars.clone()
    }
}

fn label_tuple<M: DuoidalModel>(m: &M, obs: &[&M::Ob]) -> String {
    format!("({})", obs.iter().map(|o| m.label(o)).collect::<Vec<_>>().join(", "))
}

fn dims<M: DuoidalModel>(m: &M, obs: &[M::Ob]) -> Vec<u64> {
    obs.iter().map(|o| m.space(o).dim()).collect()
}

fn names_of<'a, M: DuoidalModel>(m: &M, obs: &[&'a M::Ob]) -> LegNames
where
    M::Ob: 'a,
{
    LegNames::concat_all(obs.iter().map(|o| m.names(o)))
}

fn ids<M: DuoidalModel>(m: &M, obs: &[&M::Ob]) -> Vec<Arrow> {
    obs.iter().map(|o| Arrow::identity(m.field(), m.space(o).clone())).collect()
}

/// The associativity and unitality diagrams plus the scalar monoid/comonoid laws.
pub fn duoidal_axiom_verdicts<M: DuoidalModel>(m: &M, obs: &[M::Ob], budget: u64) -> Vec<Verdict> {
    let f = m.field();
    let six = tuples(&dims(m, obs), 6, arity_budget(budget, 6));
    let mut out = Vec::new();

    out.push(Verdict::over(ASSOC1, &six, |t| {
        let [x, y, a, b, c, d] = [0, 1, 2, 3, 4, 5].map(|i| &obs[t[i]]);
        let at = label_tuple(m, &[x, y, a, b, c, d]);
        let build = || -> Result<Case> {
            let mut lp = vec![m.zeta(x, y, a, b)?];
            lp.extend(ids(m, &[c, d]));
            let left = Arrow::chain(f, vec![Arrow::tensor(f, lp), m.zeta(&m.circ(x, a), &m.circ(y, b), c, d)?])?;
            let mut rp = ids(m, &[x, y]);
            rp.push(m.zeta(a, b, c, d)?);
            let right = Arrow::chain(f, vec![Arrow::tensor(f, rp), m.zeta(x, y, &m.circ(a, c), &m.circ(b, d))?])?;
            Ok(Case {
                at: at.clone(),
                left,
                right,
                source: names_of(m, &[x, y, a, b, c, d]),
                target: names_of(m, &[x, a, c, y, b, d]),
            })
        };
        build().map_err(|e| (at.clone(), e))
    }));

    out.push(Verdict::over(ASSOC2, &six, |t| {
        let [x, y, a, b, c, d] = [0, 1, 2, 3, 4, 5].map(|i| &obs[t[i]]);
        let at = label_tuple(m, &[x, y, a, b, c, d]);
        let build = || -> Result<Case> {
            let mut lp = vec![m.zeta(x, a, y, b)?];
            lp.extend(ids(m, &[c, d]));
            let left = Arrow::chain(f, vec![m.zeta(&m.bullet(x, a), c, &m.bullet(y, b), d)?, Arrow::tensor(f, lp)])?;
            let mut rp = ids(m, &[x, y]);
            rp.push(m.zeta(a, c, b, d)?);
            let right = Arrow::chain(f, vec![m.zeta(x, &m.bullet(a, c), y, &m.bullet(b, d))?, Arrow::tensor(f, rp)])?;
            Ok(Case {
                at: at.clone(),
                left,
                right,
                source: names_of(m, &[x, a, c, y, b, d]),
                target: names_of(m, &[x, y, a, b, c, d]),
            })
        };
        build().map_err(|e| (at.clone(), e))
    }));

    let [n, w, i] = m.scalars();
    let (bot, one) = (m.circ_unit(), m.bullet_unit());
    let pairs: Vec<(usize, usize, usize)> = tuples(&dims(m, obs), 2, budget)
        .into_iter()
        .flat_map(|t| (0..4).map(move |k| (t[0], t[1], k)))
        .collect();
    out.push(Verdict::over(UNITALITY, &pairs, |&(ia, ib, k)| {
        let (a, b) = (&obs[ia], &obs[ib]);
        let at = format!("{} at {}", ["⊥∘(a•b)", "(a•b)∘⊥", "(1•a)∘(1•b)", "(a•1)∘(b•1)"][k], label_tuple(m, &[a, b]));
        let build = || -> Result<Case> {
            let left = match k {
                0 => m.zeta(&bot, &bot, a, b)?.scale(&n),
                1 => m.zeta(a, b, &bot, &bot)?.scale(&n),
                2 => m.zeta(&one, a, &one, b)?.scale(&w),
                _ => m.zeta(a, &one, b, &one)?.scale(&w),
            };
            let id = Arrow::identity(f, m.space(a).concat(m.space(b)));
            let names = names_of(m, &[a, b]);
            Ok(Case { at: at.clone(), left, right: id, source: names.clone(), target: names })
        };
        build().map_err(|e| (at.clone(), e))
    }));

    out.push(scalar_laws(&n, &w, &i));
    out
}

fn scalar_laws(n: &Scalar, w: &Scalar, i: &Scalar) -> Verdict {
    let wi = w * i;
    let ni = n * i;
    let mut bad = vec![];
    if !wi.is_one() {
        bad.push(format!("(1, ϖ, ι) is not a monoid: ϖ·ι = {wi} ≠ 1"));
    }
    if !ni.is_one() {
        bad.push(format!("(⊥, ν, ι) is not a comonoid: ν·ι = {ni} ≠ 1"));
    }
    Verdict::from_bool("duoidal:unit-monoid-comonoid", bad.is_empty(), bad.join("; "))
}

/// Fixed deterministic maps used to probe naturality of `ζ`.
fn probe_map(field: FieldSpec, from: usize, to: usize, seed: i64) -> Arrow {
    let m = LinMap::from_fn(field, TensorSpace::single(from), TensorSpace::single(to), |r, c| {
        field.int((r as i64 * 3 + c as i64 * 5 + seed) % 7 - 2)
    });
    Arrow::matrix(&m.expect("small probe map"))
}

fn naturality_verdict(d: &DuoidalStructure) -> Verdict {
    let f = d.field;
    // (from, to) per block: mixes square, widening and narrowing maps
    let shapes: Vec<[(usize, usize); 4]> = vec![
        [(2, 3), (3, 2), (2, 2), (3, 3)],
        [(3, 2), (2, 2), (2, 3), (2, 3)],
        [(2, 2), (2, 3), (3, 2), (2, 2)],
    ];
    Verdict::over("duoidal:zeta-naturality", &shapes, |shape| {
        let at = format!(
            "maps {}",
            shape.iter().map(|(a, b)| format!("k^{a}→k^{b}")).collect::<Vec<_>>().join(", ")
        );
        let maps: Vec<Arrow> = shape.iter().enumerate().map(|(s, &(a, b))| probe_map(f, a, b, s as i64)).collect();
        let src: Vec<TensorSpace> = shape.iter().map(|&(a, _)| TensorSpace::single(a)).collect();
        let tgt: Vec<TensorSpace> = shape.iter().map(|&(_, b)| TensorSpace::single(b)).collect();
        let build = || -> Result<Case> {
            let left = Arrow::chain(f, vec![Arrow::tensor(f, maps.clone()), d.zeta(&tgt[0], &tgt[1], &tgt[2], &tgt[3])?])?;
            let swapped = vec![maps[0].clone(), maps[2].clone(), maps[1].clone(), maps[3].clone()];
            let right = Arrow::chain(f, vec![d.zeta(&src[0], &src[1], &src[2], &src[3])?, Arrow::tensor(f, swapped)])?;
            Ok(Case { at: at.clone(), left, right, source: LegNames::unnamed(4), target: LegNames::unnamed(4) })
        };
        build().map_err(|e| (at.clone(), e))
    })
}

/// All duoidal axioms at the given plain objects.
pub fn check_duoidal_axioms(d: &DuoidalStructure, objects: &[Obj], budget: u64) -> CheckReport {
    let mut rep = CheckReport::new("duoidal");
    for v in duoidal_axiom_verdicts(&VectModel(d), objects, budget) {
        rep.push(v);
    }
    rep.push(naturality_verdict(d));
    rep
}

/// `ι` recomputed along `⊥ → ⊥∘⊥ → (1•⊥)∘(⊥•1) → (1∘⊥)•(⊥∘1) → 1•1 → 1`;
/// every step but `ζ` is a unitor, so only `ζ_{1,⊥,⊥,1}` contributes.
pub fn derived_iota(d: &DuoidalStructure) -> Result<Scalar> {
    let k = TensorSpace::unit();
    let z = d.zeta(&k, &k, &k, &k)?.to_linmap()?;
    Ok(z.get(0, 0).clone())
}

/// The four bimonoid diagrams for `B` in Vect with the given duoidal structure.
pub fn check_bimonoid(d: &DuoidalStructure, b: &BialgebraData) -> Result<CheckReport> {
    b.check_shapes()?;
    let f = b.field;
    let bs = b.space();
    let names = b.legs(2);
    let (mul, unit) = (Arrow::matrix(&b.mul_map()), Arrow::matrix(&b.unit_map()));
    let (comul, counit) = (Arrow::matrix(&b.comul_map()), Arrow::matrix(&b.counit_map()));
    let mut rep = CheckReport::new("bimonoid");
    let one = |id: &str, left: Result<Arrow>, right: Result<Arrow>, source: LegNames, target: LegNames| match left
        .and_then(|l| Ok((l, right?)))
    {
        Ok((left, right)) => Verdict::compare(id, Case { at: "B".into(), left, right, source, target }),
        Err(e) => Verdict::fail(id, 1, e.to_string()),
    };
    rep.push(one(
        "bimonoid:interchange",
        Arrow::chain(f, vec![mul.clone(), comul.clone()]),
        Arrow::chain(
            f,
            vec![
                Arrow::tensor(f, vec![comul.clone(), comul.clone()]),
                d.zeta(&bs, &bs, &bs, &bs)?,
                Arrow::tensor(f, vec![mul.clone(), mul.clone()]),
            ],
        ),
        names.clone(),
        names.clone(),
    ));
    rep.push(one(
        "bimonoid:counit-multiplicative",
        Arrow::chain(f, vec![mul.clone(), counit.clone()]),
        Ok(Arrow::tensor(f, vec![counit.clone(), counit.clone()]).scale(&d.varpi)),
        names.clone(),
        LegNames::default(),
    ));
    rep.push(one(
        "bimonoid:unit-comultiplicative",
        Arrow::chain(f, vec![unit.clone(), comul.clone()]),
        Ok(Arrow::tensor(f, vec![unit.clone(), unit.clone()]).scale(&d.nu)),
        LegNames::default(),
        names.clone(),
    ));
    rep.push(one(
        "bimonoid:unit-counit",
        Arrow::chain(f, vec![unit, counit]),
        Ok(Arrow::identity(f, TensorSpace::unit()).scale(&d.iota)),
        LegNames::default(),
        LegNames::default(),
    ));
    Ok(rep)
}

/// The unit squares and the interchange square for `T = B⊗−` on `(Vect, ζ)`.
pub fn check_double_opmonoidal(s: &SeparatelyOpmonoidalData, d: &DuoidalStructure, objects: &[Obj], budget: u64) -> CheckReport {
    let f = s.field();
    let mut rep = CheckReport::new("double-opmonoidal");
    let b = s.b();
    let k = TensorSpace::unit();
    let (ec, eb) = (s.counit(Flavor::Circ).clone(), s.counit(Flavor::Bullet).clone());

    // T(1∘1) → 1, T(⊥) → ⊥•⊥, T⊥ → 1
    let squares = [0usize, 1, 2];
    rep.push(Verdict::over(PI_NU, &squares, |&which| {
        let at = ["ϖ square", "ν square", "ι square"][which].to_string();
        let build = || -> Result<Case> {
            let (left, right) = match which {
                0 => (
                    eb.scale(&d.varpi),
                    Arrow::chain(f, vec![s.t2(Flavor::Circ, &k, &k), Arrow::tensor(f, vec![eb.clone(), eb.clone()])])?
                        .scale(&d.varpi),
                ),
                1 => (
                    Arrow::chain(f, vec![s.t2(Flavor::Bullet, &k, &k), Arrow::tensor(f, vec![ec.clone(), ec.clone()])])?
                        .scale(&d.nu),
                    ec.scale(&d.nu),
                ),
                _ => (eb.scale(&d.iota), ec.scale(&d.iota)),
            };
            Ok(Case { at: at.clone(), left, right, source: b.names.clone(), target: LegNames::default() })
        };
        build().map_err(|e| (at.clone(), e))
    }));

    let four = tuples(&objects.iter().map(|o| o.space.dim()).collect::<Vec<_>>(), 4, budget);
    rep.push(Verdict::over(INTERCHANGE_SQUARE, &four, |t| {
        let [a_, b_, c_, d_] = [0, 1, 2, 3].map(|i| &objects[t[i]]);
        let at = format!("({a_}, {b_}, {c_}, {d_})");
        let build = || -> Result<Case> {
            let (sa, sb, sc, sd) = (&a_.space, &b_.space, &c_.space, &d_.space);
            let ab = sa.concat(sb);
            let cd = sc.concat(sd);
            let ac = sa.concat(sc);
            let bd = sb.concat(sd);
            let (ta, tb, tc, td) = (s.t_obj(a_), s.t_obj(b_), s.t_obj(c_), s.t_obj(d_));
            let left = Arrow::chain(
                f,
                vec![
                    s.t2(Flavor::Circ, &ab, &cd),
                    Arrow::tensor(f, vec![s.t2(Flavor::Bullet, sa, sb), s.t2(Flavor::Bullet, sc, sd)]),
                    d.zeta(&ta.space, &tb.space, &tc.space, &td.space)?,
                ],
            )?;
            let right = Arrow::chain(
                f,
                vec![
                    s.t_map(&d.zeta(sa, sb, sc, sd)?),
                    s.t2(Flavor::Bullet, &ac, &bd),
                    Arrow::tensor(f, vec![s.t2(Flavor::Circ, sa, sc), s.t2(Flavor::Circ, sb, sd)]),
                ],
            )?;
            let source = LegNames::concat_all([&b.names, &a_.names, &b_.names, &c_.names, &d_.names]);
            let target = LegNames::concat_all([&ta.names, &tc.names, &tb.names, &td.names]);
            Ok(Case { at: at.clone(), left, right, source, target })
        };
        build().map_err(|e| (at.clone(), e))
    }));

    // T(1∘1) → 1 three ways, with T₀ = T₀•
    let top = eb.scale(&d.varpi);
    let middle = Arrow::chain(
        f,
        vec![s.t2(Flavor::Circ, &k, &k), Arrow::tensor(f, vec![eb.clone(), s.id(&b.space)]), eb.clone()],
    )
    .map(|a| a.scale(&d.varpi));
    let bottom = Arrow::chain(f, vec![s.t2(Flavor::Circ, &k, &k), Arrow::tensor(f, vec![eb.clone(), eb.clone()])])
        .map(|a| a.scale(&d.varpi));
    let paths = [("T₀∘Tϖ vs T₀∘(T₀∘id)∘T₂", 0usize), ("T₀∘(T₀∘id)∘T₂ vs ϖ∘(T₀∘T₀)∘T₂", 1)];
    rep.push(match (middle, bottom) {
        (Ok(middle), Ok(bottom)) => Verdict::over(UNIT_AUTOMATIC, &paths, |&(at, which)| {
            let (left, right) = if which == 0 { (top.clone(), middle.clone()) } else { (middle.clone(), bottom.clone()) };
            Ok(Case { at: at.into(), left, right, source: b.names.clone(), target: LegNames::default() })
        }),
        (Err(e), _) | (_, Err(e)) => Verdict::fail(UNIT_AUTOMATIC, 1, e.to_string()),
    });
    rep
}

/// `f` is a morphism of T-algebras.
fn morphism_case(s: &SeparatelyOpmonoidalData, id: &str, f: &Arrow, m: &ModuleObject, n: &ModuleObject) -> Verdict {
    let mut v = check_module_morphism(s, f, m, n);
    v.id = id.to_string();
    v
}

/// `ζ` (or `ξ`) at every module quadruple and `ν`, `ϖ`, `ι` are T-algebra morphisms.
pub fn structure_morphism_verdicts(model: &EmModel<'_>, modules: &[ModuleObject], budget: u64, zeta_id: &str) -> Vec<Verdict> {
    let s = model.s;
    let four = tuples(&dims(model, modules), 4, budget);
    let mut out = vec![Verdict::over(zeta_id, &four, |t| {
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| &modules[t[i]]);
        let at = label_tuple(model, &[a, b, c, d]);
        let src = model.circ(&model.bullet(a, b), &model.bullet(c, d));
        let tgt = model.bullet(&model.circ(a, c), &model.circ(b, d));
        let build = || -> Result<Case> {
            let z = model.zeta(a, b, c, d)?;
            let left = Arrow::chain(s.field(), vec![src.action.clone(), z.clone()])?;
            let right = Arrow::chain(s.field(), vec![s.t_map(&z), tgt.action.clone()])?;
            Ok(Case {
                at: at.clone(),
                left,
                right,
                source: s.b().names.concat(&src.obj.names),
                target: tgt.obj.names.clone(),
            })
        };
        build().map_err(|e| (at.clone(), e))
    })];
    let [n, w, i] = model.scalars();
    let k = TensorSpace::unit();
    let (bot, one) = (model.circ_unit(), model.bullet_unit());
    let scalar = |c: &Scalar| Arrow::identity(s.field(), k.clone()).scale(c);
    out.push(morphism_case(s, "module-morphism:nu", &scalar(&n), &bot, &model.bullet(&bot, &bot)));
    out.push(morphism_case(s, "module-morphism:varpi", &scalar(&w), &model.circ(&one, &one), &one));
    out.push(morphism_case(s, "module-morphism:iota", &scalar(&i), &bot, &one));
    out
}

/// The lifted structure on T-algebras: `ζ` acting on underlying spaces.
pub fn em_lift_model<'a>(s: &'a SeparatelyOpmonoidalData, d: &'a DuoidalStructure) -> EmModel<'a> {
    EmModel {
        s,
        zeta: Box::new(move |a, b, c, e| d.zeta(a.space(), b.space(), c.space(), e.space())),
        scalars: [d.nu.clone(), d.varpi.clone(), d.iota.clone()],
    }
}

/// Lift check without the prerequisite guard.
pub fn em_duoidal_lift_report(s: &SeparatelyOpmonoidalData, d: &DuoidalStructure, modules: &[ModuleObject], budget: u64) -> CheckReport {
    let model = em_lift_model(s, d);
    let mut rep = CheckReport::new("em-lift");
    for v in structure_morphism_verdicts(&model, modules, budget, "module-morphism:zeta") {
        rep.push(v);
    }
    for v in duoidal_axiom_verdicts(&model, modules, budget) {
        rep.push(v);
    }
    rep
}

/// Requires the double opmonoidal check (at the default objects) to pass first.
pub fn check_em_duoidal_lift(
    s: &SeparatelyOpmonoidalData,
    d: &DuoidalStructure,
    modules: &[ModuleObject],
    budget: u64,
) -> Result<CheckReport> {
    let pre = check_double_opmonoidal(s, d, &default_objects(), budget);
    if !pre.passed {
        let failed: Vec<&str> = pre.verdicts.iter().filter(|v| !v.passed).map(|v| v.id.as_str()).collect();
        return Err(Error::PrerequisiteFailed(format!("not double opmonoidal: {} fails", failed.join(", "))));
    }
    Ok(em_duoidal_lift_report(s, d, modules, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::monad_em::default_modules;
    use crate::monad_em::DEFAULT_BUDGET;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn zeta_examples() {
        let k = TensorSpace::unit();
        let z = zeta_symmetric(q(), &k, &k, &k, &k).to_linmap().unwrap();
        assert!(z.get(0, 0).is_one() && z.rows() == 1);
        let (a, b) = (TensorSpace::single(2), TensorSpace::single(3));
        let z = zeta_symmetric(q(), &a, &b, &a, &b);
        let src = TensorSpace::concat_all([&a, &b, &a, &b]);
        let tgt = TensorSpace::concat_all([&a, &a, &b, &b]);
        for idx in 0..36 {
            let d = src.digits(idx);
            let img = z.apply_basis(idx);
            assert_eq!(img.terms(), &[(tgt.flat(&[d[0], d[2], d[1], d[3]]), q().one())]);
        }
        // undo the middle swap
        let back = Arrow::block_permute(q(), &[&a, &a, &b, &b], &[0, 2, 1, 3]).unwrap();
        let round = Arrow::chain(q(), vec![z, back]).unwrap();
        assert!(round.compare(&Arrow::identity(q(), src)).unwrap().is_none());
    }

    #[test]
    fn symmetric_structure_passes() {
        let d = DuoidalStructure::symmetric(q());
        let rep = check_duoidal_axioms(&d, &default_objects(), u64::MAX);
        assert!(rep.passed, "{rep}");
        assert_eq!(rep.verdict(ASSOC1).unwrap().checked, 729);
        assert!(derived_iota(&d).unwrap().is_one());
    }

    #[test]
    fn unswapped_interchange_fails_assoc1() {
        let d = DuoidalStructure { interchange: Interchange::Unswapped, ..DuoidalStructure::symmetric(q()) };
        let rep = check_duoidal_axioms(&d, &default_objects(), DEFAULT_BUDGET);
        assert!(!rep.verdict(ASSOC1).unwrap().passed);
        assert!(!rep.verdict("duoidal:zeta-naturality").unwrap().passed);
        // at equal dimensions the mutant is indistinguishable from the identity
        let only = [Obj::plain(2)];
        assert!(check_duoidal_axioms(&d, &only, DEFAULT_BUDGET).verdict(ASSOC1).unwrap().passed);
    }

    #[test]
    fn bad_scalars_fail_monoid_law() {
        let d = DuoidalStructure::symmetric(q()).with_scalars(q().one(), q().int(2), q().one());
        let rep = check_duoidal_axioms(&d, &default_objects(), 16);
        assert!(!rep.verdict("duoidal:unit-monoid-comonoid").unwrap().passed);
        assert!(!rep.verdict(UNITALITY).unwrap().passed);
    }

    #[test]
    fn derived_iota_ignores_nu() {
        let d = DuoidalStructure::symmetric(q()).with_scalars(q().int(2), q().one(), q().one());
        assert!(derived_iota(&d).unwrap().is_one());
        let scaled = DuoidalStructure {
            interchange: Interchange::Custom(Arc::new(|f: FieldSpec, [x, y, a, b]: [&TensorSpace; 4]| {
                Ok(zeta_symmetric(f, x, y, a, b).scale(&f.ratio(1, 2)?))
            })),
            ..DuoidalStructure::symmetric(q()).with_scalars(q().int(2), q().int(2), q().ratio(1, 2).unwrap())
        };
        let rep = check_duoidal_axioms(&scaled, &default_objects(), 64);
        assert!(rep.passed, "{rep}");
        assert_eq!(derived_iota(&scaled).unwrap(), scaled.iota);
    }

    #[test]
    fn bimonoid_examples() {
        let d = DuoidalStructure::symmetric(q());
        assert!(check_bimonoid(&d, &corpus::c2(q())).unwrap().passed);
        assert!(check_bimonoid(&d, &corpus::sweedler(q())).unwrap().passed);
        let mut bad = corpus::sweedler(q());
        bad.counit[1] = q().zero();
        let rep = check_bimonoid(&d, &bad).unwrap();
        let v = rep.verdict("bimonoid:counit-multiplicative").unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().basis, "g⊗g");
    }

    #[test]
    fn double_opmonoidal_examples() {
        let d = DuoidalStructure::symmetric(q());
        let qc2 = SeparatelyOpmonoidalData::from_bialgebra(corpus::c2(q())).unwrap();
        assert!(check_double_opmonoidal(&qc2, &d, &default_objects(), DEFAULT_BUDGET).passed);
        let h4 = SeparatelyOpmonoidalData::from_bialgebra(corpus::sweedler(q())).unwrap();
        let rep = check_double_opmonoidal(&h4, &d, &default_objects(), DEFAULT_BUDGET);
        let v = rep.verdict(INTERCHANGE_SQUARE).unwrap();
        assert!(!v.passed);
        assert!(v.witness.as_ref().unwrap().basis.contains('x'), "{rep}");
        assert!(rep.verdict(PI_NU).unwrap().passed);
        assert!(rep.verdict(UNIT_AUTOMATIC).unwrap().passed);
    }

    #[test]
    fn distinct_counits_break_the_unit_squares() {
        let s = corpus::c2_dual_two_counits(q());
        let d = DuoidalStructure::symmetric(q());
        let rep = check_double_opmonoidal(&s, &d, &default_objects(), DEFAULT_BUDGET);
        assert!(!rep.verdict(PI_NU).unwrap().passed);
    }

    #[test]
    fn em_lift_follows_double_opmonoidality() {
        let d = DuoidalStructure::symmetric(q());
        let qc2 = SeparatelyOpmonoidalData::from_bialgebra(corpus::c2(q())).unwrap();
        let rep = check_em_duoidal_lift(&qc2, &d, &default_modules(&qc2), 64).unwrap();
        assert!(rep.passed, "{rep}");
        let h4 = SeparatelyOpmonoidalData::from_bialgebra(corpus::sweedler(q())).unwrap();
        assert!(matches!(
            check_em_duoidal_lift(&h4, &d, &default_modules(&h4), 64),
            Err(Error::PrerequisiteFailed(_))
        ));
        let rep = em_duoidal_lift_report(&h4, &d, &default_modules(&h4), 64);
        assert!(!rep.verdict("module-morphism:zeta").unwrap().passed);
    }
}
