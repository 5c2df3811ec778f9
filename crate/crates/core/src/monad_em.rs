//! The monad `T = B⊗−` on vector spaces, its two opmonoidal structures, and
//! modules (T-algebras).
//!
//! Objects live in the strict skeleton: both products are concatenation of
//! factor lists and both units are `k`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{Arrow, FieldSpec, LinMap, SparseVec, TensorSpace};
use crate::bialg::BialgebraData;
use crate::error::{Error, Result};
use crate::report::{Case, CheckReport, LegNames, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Circ,
    Bullet,
}

impl Flavor {
    pub fn symbol(self) -> &'static str {
        match self {
            Flavor::Circ => "∘",
            Flavor::Bullet => "•",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// An object of the base category: a space plus basis names for witnesses.
#[derive(Clone, Debug)]
pub struct Obj {
    pub label: String,
    pub space: TensorSpace,
    pub names: LegNames,
}

impl Obj {
    pub fn unit() -> Obj {
        Obj { label: "k".into(), space: TensorSpace::unit(), names: LegNames::default() }
    }

    /// `k^d`; `d = 1` is the unit object.
    pub fn plain(dim: usize) -> Obj {
        if dim == 1 {
            return Obj::unit();
        }
        Obj { label: format!("k^{dim}"), space: TensorSpace::single(dim), names: LegNames::unnamed(1) }
    }

    pub fn new(label: impl Into<String>, space: TensorSpace, names: LegNames) -> Obj {
        Obj { label: label.into(), space, names }
    }

    /// The strict product of several objects (either monoidal structure).
    pub fn cat(parts: &[&Obj]) -> Obj {
        Obj {
            label: parts.iter().map(|p| p.label.as_str()).collect::<Vec<_>>().join("⊗"),
            space: TensorSpace::concat_all(parts.iter().map(|p| &p.space)),
            names: LegNames::concat_all(parts.iter().map(|p| &p.names)),
        }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

struct Cached {
    mul: Arrow,
    unit: Arrow,
    comul: [Arrow; 2],
    counit: [Arrow; 2],
    b: Obj,
}

/// One algebra with two compatible coalgebra structures `(Δ∘, ε∘)` and `(Δ•, ε•)`.
#[derive(Clone)]
pub struct SeparatelyOpmonoidalData {
    circ: BialgebraData,
    bullet: BialgebraData,
    cached: Arc<Cached>,
}

impl fmt::Debug for SeparatelyOpmonoidalData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeparatelyOpmonoidalData").field("circ", &self.circ).field("bullet", &self.bullet).finish()
    }
}

impl SeparatelyOpmonoidalData {
    /// Both bialgebras must share field, dimension, unit and multiplication.
    pub fn new(circ: BialgebraData, bullet: BialgebraData) -> Result<Self> {
        circ.check_shapes()?;
        bullet.check_shapes()?;
        if circ.field != bullet.field || circ.dim != bullet.dim || circ.unit != bullet.unit || circ.mul != bullet.mul {
            return Err(Error::MalformedInstance("the two comultiplications must share one algebra".into()));
        }
        let cached = Cached {
            mul: Arrow::matrix(&circ.mul_map()),
            unit: Arrow::matrix(&circ.unit_map()),
            comul: [Arrow::matrix(&circ.comul_map()), Arrow::matrix(&bullet.comul_map())],
            counit: [Arrow::matrix(&circ.counit_map()), Arrow::matrix(&bullet.counit_map())],
            b: Obj::new("B", circ.space(), LegNames::named(circ.names())),
        };
        Ok(SeparatelyOpmonoidalData { circ, bullet, cached: Arc::new(cached) })
    }

    /// `Δ∘ = Δ•`.
    pub fn from_bialgebra(b: BialgebraData) -> Result<Self> {
        SeparatelyOpmonoidalData::new(b.clone(), b)
    }

    pub fn circ(&self) -> &BialgebraData {
        &self.circ
    }

    pub fn bullet(&self) -> &BialgebraData {
        &self.bullet
    }

    pub fn bialgebra(&self, flavor: Flavor) -> &BialgebraData {
        match flavor {
            Flavor::Circ => &self.circ,
            Flavor::Bullet => &self.bullet,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.circ.field
    }

    pub fn dim(&self) -> usize {
        self.circ.dim
    }

    pub fn comultiplications_agree(&self) -> bool {
        self.circ.comul == self.bullet.comul && self.circ.counit == self.bullet.counit
    }

    pub fn counits_agree(&self) -> bool {
        self.circ.counit == self.bullet.counit
    }

    /// The object `B` with named basis.
    pub fn b(&self) -> &Obj {
        &self.cached.b
    }

    pub fn id(&self, space: &TensorSpace) -> Arrow {
        Arrow::identity(self.field(), space.clone())
    }

    pub fn tensor(&self, parts: Vec<Arrow>) -> Arrow {
        Arrow::tensor(self.field(), parts)
    }

    pub fn chain(&self, steps: Vec<Arrow>) -> Result<Arrow> {
        Arrow::chain(self.field(), steps)
    }

    pub fn mul(&self) -> &Arrow {
        &self.cached.mul
    }

    pub fn unit(&self) -> &Arrow {
        &self.cached.unit
    }

    pub fn comul(&self, flavor: Flavor) -> &Arrow {
        &self.cached.comul[flavor.slot()]
    }

    pub fn counit(&self, flavor: Flavor) -> &Arrow {
        &self.cached.counit[flavor.slot()]
    }

    /// `Tx = B⊗x`.
    pub fn t_obj(&self, x: &Obj) -> Obj {
        Obj::new(format!("T{}", x.label), self.b().space.concat(&x.space), self.b().names.concat(&x.names))
    }

    /// `T(f) = id_B ⊗ f`.
    pub fn t_map(&self, f: &Arrow) -> Arrow {
        self.tensor(vec![self.id(&self.b().space), f.clone()])
    }

    /// `μ_x: TTx → Tx`.
    pub fn mu(&self, x: &TensorSpace) -> Arrow {
        self.tensor(vec![self.mul().clone(), self.id(x)])
    }

    /// `η_x: x → Tx`.
    pub fn eta(&self, x: &TensorSpace) -> Arrow {
        self.tensor(vec![self.unit().clone(), self.id(x)])
    }

    /// `T₂_{x,y}: T(x⊗y) → Tx⊗Ty`, `b⊗x⊗y ↦ b₍₁₎⊗x⊗b₍₂₎⊗y`.
    pub fn t2(&self, flavor: Flavor, x: &TensorSpace, y: &TensorSpace) -> Arrow {
        let b = &self.b().space;
        self.chain(vec![
            self.tensor(vec![self.comul(flavor).clone(), self.id(x), self.id(y)]),
            Arrow::block_permute(self.field(), &[b, b, x, y], &[0, 2, 1, 3]).expect("four blocks"),
        ])
        .expect("well-typed")
    }

    /// `T₀ = ε: Tk → k`.
    pub fn t0(&self, flavor: Flavor) -> &Arrow {
        self.counit(flavor)
    }
}

/// `T₂` at `(x, y)` together with `T₀` for one flavor.
#[derive(Clone, Debug)]
pub struct MonadComponents {
    pub t2: Arrow,
    pub t0: Arrow,
}

pub fn monad_components(s: &SeparatelyOpmonoidalData, flavor: Flavor, x: &TensorSpace, y: &TensorSpace) -> MonadComponents {
    MonadComponents { t2: s.t2(flavor, x, y), t0: s.t0(flavor).clone() }
}

/// A T-algebra: a space with an action `B⊗space → space`.
#[derive(Clone, Debug)]
pub struct ModuleObject {
    pub obj: Obj,
    pub action: Arrow,
}

impl ModuleObject {
    pub fn new(obj: Obj, action: Arrow) -> Result<Self> {
        if action.target() != &obj.space || action.source().len() != obj.space.len() + 1 {
            return Err(Error::TypeMismatch(format!(
                "action {}→{} does not act on {}",
                action.source(),
                action.target(),
                obj.space
            )));
        }
        Ok(ModuleObject { obj, action })
    }

    /// Action given by one matrix per basis element of `B`, each `space → space`.
    pub fn from_matrices(s: &SeparatelyOpmonoidalData, obj: Obj, mats: &[LinMap]) -> Result<Self> {
        if mats.len() != s.dim() {
            return Err(Error::DimensionMismatch(format!("{} action matrices for a {}-dimensional B", mats.len(), s.dim())));
        }
        let d = obj.space.dim();
        let mut cols = Vec::with_capacity(s.dim() * d as usize);
        for m in mats {
            if m.source().dim() != d || m.target().dim() != d {
                return Err(Error::DimensionMismatch(format!("action matrix must be square of size {d}")));
            }
            for c in 0..d as usize {
                cols.push(SparseVec::from_dense(m.column(c)));
            }
        }
        let action = Arrow::from_columns(s.field(), s.b().space.concat(&obj.space), obj.space.clone(), cols)?;
        ModuleObject::new(obj, action)
    }

    pub fn label(&self) -> &str {
        &self.obj.label
    }

    pub fn space(&self) -> &TensorSpace {
        &self.obj.space
    }
}

/// `(B, μ)`.
pub fn free_module(s: &SeparatelyOpmonoidalData) -> ModuleObject {
    let obj = Obj::new("free", s.b().space.clone(), s.b().names.clone());
    ModuleObject { obj, action: s.mul().clone() }
}

/// `(k, T₀)` for the chosen flavor: the unit `⊥` for `∘`, the unit `1` for `•`.
pub fn trivial_module(s: &SeparatelyOpmonoidalData, flavor: Flavor) -> ModuleObject {
    let label = if s.counits_agree() { "trivial".to_string() } else { format!("trivial{}", flavor.symbol()) };
    ModuleObject { obj: Obj::new(label, TensorSpace::unit(), LegNames::default()), action: s.t0(flavor).clone() }
}

/// Action `(α_M ⊗ α_N) ∘ T₂_{M,N}` on the concatenated space.
pub fn tensor_of_modules(s: &SeparatelyOpmonoidalData, flavor: Flavor, m: &ModuleObject, n: &ModuleObject) -> ModuleObject {
    let obj = Obj {
        label: format!("{}{}{}", m.label(), flavor.symbol(), n.label()),
        ..Obj::cat(&[&m.obj, &n.obj])
    };
    let action = s
        .chain(vec![s.t2(flavor, m.space(), n.space()), s.tensor(vec![m.action.clone(), n.action.clone()])])
        .expect("well-typed");
    ModuleObject { obj, action }
}

fn case(at: impl Into<String>, left: Arrow, right: Arrow, source: LegNames, target: LegNames) -> Case {
    Case { at: at.into(), left, right, source, target }
}

/// Unit and associativity laws of the action.
pub fn check_module(s: &SeparatelyOpmonoidalData, m: &ModuleObject) -> CheckReport {
    let mut rep = CheckReport::new(format!("module {}", m.label()));
    let x = m.space();
    let b = s.b();
    let unit = s.chain(vec![s.eta(x), m.action.clone()]);
    rep.push(match unit {
        Ok(l) => Verdict::compare("module-unit", case(m.label(), l, s.id(x), m.obj.names.clone(), m.obj.names.clone())),
        Err(e) => Verdict::fail("module-unit", 1, e.to_string()),
    });
    let assoc = s.chain(vec![s.mu(x), m.action.clone()]).and_then(|l| {
        let r = s.chain(vec![s.t_map(&m.action), m.action.clone()])?;
        Ok((l, r))
    });
    let src = LegNames::concat_all([&b.names, &b.names, &m.obj.names]);
    rep.push(match assoc {
        Ok((l, r)) => Verdict::compare("module-associativity", case(m.label(), l, r, src, m.obj.names.clone())),
        Err(e) => Verdict::fail("module-associativity", 1, e.to_string()),
    });
    rep
}

/// `f ∘ α_M = α_N ∘ T(f)`.
pub fn check_module_morphism(s: &SeparatelyOpmonoidalData, f: &Arrow, m: &ModuleObject, n: &ModuleObject) -> Verdict {
    let at = format!("{} → {}", m.label(), n.label());
    let sides = s
        .chain(vec![m.action.clone(), f.clone()])
        .and_then(|l| Ok((l, s.chain(vec![s.t_map(f), n.action.clone()])?)));
    match sides {
        Ok((l, r)) => Verdict::compare(
            "module-morphism",
            case(at, l, r, s.b().names.concat(&m.obj.names), n.obj.names.clone()),
        ),
        Err(e) => Verdict::fail("module-morphism", 1, format!("at {at}: {e}")),
    }
}

/// Opmonoidality of `T`, `μ` and `η` for one flavor at the given objects.
pub fn check_bimonad_laws(s: &SeparatelyOpmonoidalData, flavor: Flavor, objects: &[Obj]) -> CheckReport {
    let sym = flavor.symbol();
    let mut rep = CheckReport::new(format!("bimonad{sym}"));
    let b = s.b();
    let bn = &b.names;
    let pairs: Vec<(&Obj, &Obj)> = objects.iter().flat_map(|x| objects.iter().map(move |y| (x, y))).collect();
    let triples: Vec<(&Obj, &Obj, &Obj)> =
        pairs.iter().flat_map(|&(x, y)| objects.iter().map(move |z| (x, y, z))).collect();
    let k = TensorSpace::unit();

    rep.push(Verdict::over(format!("bimonad{sym}:T2-coassociativity"), &triples, |&(x, y, z)| {
        let at = format!("({x}, {y}, {z})");
        let xy = x.space.concat(&y.space);
        let yz = y.space.concat(&z.space);
        let build = || -> Result<Case> {
            let l = s.chain(vec![
                s.t2(flavor, &xy, &z.space),
                s.tensor(vec![s.t2(flavor, &x.space, &y.space), s.id(&b.space), s.id(&z.space)]),
            ])?;
            let r = s.chain(vec![
                s.t2(flavor, &x.space, &yz),
                s.tensor(vec![s.id(&b.space), s.id(&x.space), s.t2(flavor, &y.space, &z.space)]),
            ])?;
            let src = LegNames::concat_all([bn, &x.names, &y.names, &z.names]);
            let tgt = LegNames::concat_all([bn, &x.names, bn, &y.names, bn, &z.names]);
            Ok(case(at.clone(), l, r, src, tgt))
        };
        build().map_err(|e| (at.clone(), e))
    }));

    let counit_cases: Vec<(&Obj, bool)> = objects.iter().flat_map(|x| [(x, true), (x, false)]).collect();
    rep.push(Verdict::over(format!("bimonad{sym}:T2-counitality"), &counit_cases, |&(x, left)| {
        let at = format!("{} at {x}", if left { "left" } else { "right" });
        let tx = s.t_obj(x);
        let build = || -> Result<Case> {
            let l = if left {
                s.chain(vec![s.t2(flavor, &k, &x.space), s.tensor(vec![s.t0(flavor).clone(), s.id(&tx.space)])])?
            } else {
                s.chain(vec![s.t2(flavor, &x.space, &k), s.tensor(vec![s.id(&tx.space), s.t0(flavor).clone()])])?
            };
            Ok(case(at.clone(), l, s.id(&tx.space), tx.names.clone(), tx.names.clone()))
        };
        build().map_err(|e| (at.clone(), e))
    }));

    rep.push(Verdict::over(format!("bimonad{sym}:mu-opmonoidal"), &pairs, |&(x, y)| {
        let at = format!("({x}, {y})");
        let xy = x.space.concat(&y.space);
        let (tx, ty) = (s.t_obj(x), s.t_obj(y));
        let build = || -> Result<Case> {
            let l = s.chain(vec![s.mu(&xy), s.t2(flavor, &x.space, &y.space)])?;
            let r = s.chain(vec![
                s.t_map(&s.t2(flavor, &x.space, &y.space)),
                s.t2(flavor, &tx.space, &ty.space),
                s.tensor(vec![s.mu(&x.space), s.mu(&y.space)]),
            ])?;
            let src = LegNames::concat_all([bn, bn, &x.names, &y.names]);
            let tgt = LegNames::concat_all([bn, &x.names, bn, &y.names]);
            Ok(case(at.clone(), l, r, src, tgt))
        };
        build().map_err(|e| (at.clone(), e))
    }));

    let mu_counit = s
        .chain(vec![s.mu(&k), s.t0(flavor).clone()])
        .and_then(|l| Ok((l, s.chain(vec![s.t_map(s.t0(flavor)), s.t0(flavor).clone()])?)));
    rep.push(match mu_counit {
        Ok((l, r)) => Verdict::compare(
            format!("bimonad{sym}:mu-counit"),
            case("k", l, r, LegNames::concat_all([bn, bn]), LegNames::default()),
        ),
        Err(e) => Verdict::fail(format!("bimonad{sym}:mu-counit"), 1, e.to_string()),
    });

    rep.push(Verdict::over(format!("bimonad{sym}:eta-opmonoidal"), &pairs, |&(x, y)| {
        let at = format!("({x}, {y})");
        let xy = x.space.concat(&y.space);
        let build = || -> Result<Case> {
            let l = s.chain(vec![s.eta(&xy), s.t2(flavor, &x.space, &y.space)])?;
            let r = s.tensor(vec![s.eta(&x.space), s.eta(&y.space)]);
            let src = x.names.concat(&y.names);
            let tgt = LegNames::concat_all([bn, &x.names, bn, &y.names]);
            Ok(case(at.clone(), l, r, src, tgt))
        };
        build().map_err(|e| (at.clone(), e))
    }));

    let eta_counit = s.chain(vec![s.eta(&k), s.t0(flavor).clone()]);
    rep.push(match eta_counit {
        Ok(l) => Verdict::compare(
            format!("bimonad{sym}:eta-counit"),
            case("k", l, s.id(&k), LegNames::default(), LegNames::default()),
        ),
        Err(e) => Verdict::fail(format!("bimonad{sym}:eta-counit"), 1, e.to_string()),
    });
    rep
}

/// Default plain test objects `{k, k², k³}`.
pub fn default_objects() -> Vec<Obj> {
    vec![Obj::plain(1), Obj::plain(2), Obj::plain(3)]
}

/// Default probe modules `{trivial, free, free∘free}`.
pub fn default_modules(s: &SeparatelyOpmonoidalData) -> Vec<ModuleObject> {
    let free = free_module(s);
    vec![trivial_module(s, Flavor::Circ), free.clone(), tensor_of_modules(s, Flavor::Circ, &free, &free)]
}

/// A finite probe set: plain objects, T-algebras, and a cap on source dimension.
#[derive(Clone, Debug)]
pub struct Probes {
    pub objects: Vec<Obj>,
    pub modules: Vec<ModuleObject>,
    pub budget: u64,
}

impl Probes {
    pub fn standard(s: &SeparatelyOpmonoidalData) -> Self {
        Probes { objects: default_objects(), modules: default_modules(s), budget: DEFAULT_BUDGET }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

/// Default cap on the source dimension of a probed diagram.
pub const DEFAULT_BUDGET: u64 = 256;

/// Budget for diagrams in `arity` variables: six-variable diagrams nest two
/// structure components, so they get a sixteenth of the cap.
pub fn arity_budget(budget: u64, arity: usize) -> u64 {
    if arity > 4 {
        (budget >> 4).max(1)
    } else {
        budget
    }
}

/// Index tuples over `dims` in lexicographic order whose dimension product stays within `budget`.
pub fn tuples(dims: &[u64], arity: usize, budget: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(arity);
    fn rec(dims: &[u64], arity: usize, budget: u64, prod: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == arity {
            out.push(cur.clone());
            return;
        }
        for (i, &d) in dims.iter().enumerate() {
            let p = prod.saturating_mul(d);
            if p <= budget {
                cur.push(i);
                rec(dims, arity, budget, p, cur, out);
                cur.pop();
            }
        }
    }
    rec(dims, arity, budget, 1, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn qc2() -> SeparatelyOpmonoidalData {
        SeparatelyOpmonoidalData::from_bialgebra(corpus::c2(q())).unwrap()
    }

    fn h4() -> SeparatelyOpmonoidalData {
        SeparatelyOpmonoidalData::from_bialgebra(corpus::sweedler(q())).unwrap()
    }

    #[test]
    fn t2_at_units_is_the_comultiplication() {
        let s = qc2();
        let k = TensorSpace::unit();
        let c = monad_components(&s, Flavor::Circ, &k, &k);
        assert_eq!(c.t2.to_linmap().unwrap(), s.circ().comul_map());
    }

    #[test]
    fn t2_on_grouplike_duplicates_g() {
        let s = qc2();
        let k2 = TensorSpace::single(2);
        let t2 = s.t2(Flavor::Bullet, &k2, &k2);
        let src = TensorSpace::new(vec![2, 2, 2]).unwrap();
        let tgt = TensorSpace::new(vec![2, 2, 2, 2]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let img = t2.apply_basis(src.flat(&[1, i, j]));
                assert_eq!(img, SparseVec::basis(q(), tgt.flat(&[1, i, 1, j])));
            }
        }
    }

    #[test]
    fn counit_values_on_sweedler() {
        let s = h4();
        let e = s.t0(Flavor::Circ).to_linmap().unwrap();
        assert!(e.get(0, 2).is_zero());
        assert!(e.get(0, 1).is_one());
    }

    #[test]
    fn bimonad_laws_hold_for_bialgebras() {
        for s in [qc2(), h4()] {
            for fl in [Flavor::Circ, Flavor::Bullet] {
                let rep = check_bimonad_laws(&s, fl, &default_objects());
                assert!(rep.passed, "{rep}");
            }
        }
    }

    #[test]
    fn mismatched_sweedler_fails_bimonad_laws() {
        let mut b = corpus::sweedler(q());
        let grouplike = corpus::group_algebra(q(), &vec![vec![0, 1, 2, 3]; 4], None);
        b.comul = grouplike.comul;
        b.counit = grouplike.counit;
        let s = SeparatelyOpmonoidalData::from_bialgebra(b).unwrap();
        let rep = check_bimonad_laws(&s, Flavor::Circ, &default_objects());
        assert!(!rep.passed);
        assert!(!rep.verdict("bimonad∘:mu-opmonoidal").unwrap().passed);
    }

    #[test]
    fn module_examples() {
        let s = qc2();
        assert!(check_module(&s, &free_module(&s)).passed);
        let h = h4();
        assert!(check_module(&h, &trivial_module(&h, Flavor::Bullet)).passed);
        // g ↦ [[1,1],[0,1]], x ↦ 0 on k²
        let f = q();
        let rows = |r: [[i64; 2]; 2]| r.iter().map(|row| row.iter().map(|&v| f.int(v)).collect()).collect::<Vec<Vec<_>>>();
        let k2 = TensorSpace::single(2);
        let mk = |r| LinMap::from_rows(f, k2.clone(), k2.clone(), &rows(r)).unwrap();
        let mats = [mk([[1, 0], [0, 1]]), mk([[1, 1], [0, 1]]), mk([[0, 0], [0, 0]]), mk([[0, 0], [0, 0]])];
        let m = ModuleObject::from_matrices(&h, Obj::plain(2), &mats).unwrap();
        let rep = check_module(&h, &m);
        assert!(rep.verdict("module-unit").unwrap().passed);
        assert!(!rep.verdict("module-associativity").unwrap().passed);
    }

    #[test]
    fn morphism_examples() {
        let s = qc2();
        let free = free_module(&s);
        let triv = trivial_module(&s, Flavor::Circ);
        assert!(check_module_morphism(&s, s.counit(Flavor::Circ), &free, &triv).passed);
        assert!(check_module_morphism(&s, &s.id(free.space()), &free, &free).passed);
        let ff = tensor_of_modules(&s, Flavor::Circ, &free, &free);
        assert!(check_module(&s, &ff).passed);
    }

    #[test]
    fn adjunction_triangle_on_free_modules() {
        for s in [qc2(), h4()] {
            let free = free_module(&s);
            let l = s.chain(vec![s.eta(free.space()), free.action.clone()]).unwrap();
            assert!(l.compare(&s.id(free.space())).unwrap().is_none());
        }
    }

    #[test]
    fn tuple_budget_and_order() {
        let t = tuples(&[1, 4, 16], 2, 16);
        assert_eq!(t[0], vec![0, 0]);
        assert!(t.contains(&vec![1, 1]) && t.contains(&vec![0, 2]) && !t.contains(&vec![1, 2]));
    }
}
