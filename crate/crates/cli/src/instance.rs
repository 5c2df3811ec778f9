//! The JSON instance format. See `schema/instance.schema.json`.

use std::fmt;
use std::path::Path;

use duoidal_core::arith::{FieldSpec, LinMap, Scalar, SparseVec, TensorSpace};
use duoidal_core::bialg::{BialgebraData, ClassicalRElement, Tensor3};
use duoidal_core::monad_em::{ModuleObject, Obj, SeparatelyOpmonoidalData};
use duoidal_core::rmatrix::{embed_classical, DuoidalRMatrix, LegConvention};
use serde::{Deserialize, Serialize};

/// A scalar as written in a file: an integer, or a string such as `"-3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn of(s: &Scalar) -> Num {
        Num::Text(s.to_string())
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(n) => write!(f, "{n}"),
            Num::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    /// `"Q"` or `"F_p"` for a prime `p`.
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub bialgebra: BialgebraBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul2: Option<ComulBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<RMatrixBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub test_objects: Vec<TestObject>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraBlock {
    pub dim: usize,
    pub unit: Vec<Num>,
    /// `mul[i][j][k]`: coefficient of `e_k` in `e_i·e_j`.
    pub mul: Vec<Vec<Vec<Num>>>,
    /// `comul[i][j][k]`: coefficient of `e_j⊗e_k` in `Δ(e_i)`.
    pub comul: Vec<Vec<Vec<Num>>>,
    pub counit: Vec<Num>,
}

/// Second comultiplication `Δ•` with its counit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComulBlock {
    pub comul: Vec<Vec<Vec<Num>>>,
    pub counit: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixBlock {
    /// 2: a classical element of `B⊗B`, embedded; 4: the element `r4` directly,
    /// legs ordered as the `B` factors of `Ba⊗Bc⊗Bb⊗Bd`.
    pub legs: u8,
    pub terms: Vec<RTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<LegConvention>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RTerm {
    pub coeff: Num,
    pub index: Vec<usize>,
}

/// A plain object `k^dim`, or a module when `action` gives one `dim×dim`
/// matrix (row-major) per basis element of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TestObject {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<Num>>>>,
}

#[derive(Debug)]
pub enum LoadError {
    Io { path: String, message: String },
    Syntax { path: String, line: usize, column: usize, at: String, message: String },
    Shape { at: String, message: String },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io { path, message } => write!(f, "{path}: {message}"),
            LoadError::Syntax { path, line, column, at, message } => {
                write!(f, "{path}:{line}:{column}: at `{at}`: {message}")
            }
            LoadError::Shape { at, message } => write!(f, "at `{at}`: {message}"),
        }
    }
}

impl std::error::Error for LoadError {}

// serde_json appends " at line L column C"; the location is reported separately.
fn strip_location(e: &serde_json::Error) -> String {
    let full = e.to_string();
    let tail = format!(" at line {} column {}", e.line(), e.column());
    full.strip_suffix(&tail).map(str::to_string).unwrap_or(full)
}

fn shape(at: impl Into<String>, message: impl fmt::Display) -> LoadError {
    LoadError::Shape { at: at.into(), message: message.to_string() }
}

pub fn parse_str(text: &str, path: &str) -> Result<InstanceFile, LoadError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        let inner = e.into_inner();
        LoadError::Syntax { path: path.to_string(), line: inner.line(), column: inner.column(), at, message: strip_location(&inner) }
    })
}

pub fn read(path: &Path) -> Result<InstanceFile, LoadError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io { path: shown.clone(), message: e.to_string() })?;
    parse_str(&text, &shown)
}

pub fn parse_field(text: &str) -> Result<FieldSpec, LoadError> {
    let t = text.trim();
    if t == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = t
        .strip_prefix("F_")
        .or_else(|| t.strip_prefix('F'))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| shape("field", format!("expected \"Q\" or \"F_p\", found {text:?}")))?;
    FieldSpec::prime(p).map_err(|e| shape("field", e))
}

fn scalar(f: FieldSpec, n: &Num, at: impl Fn() -> String) -> Result<Scalar, LoadError> {
    match n {
        Num::Int(i) => Ok(f.int(*i)),
        Num::Text(t) => f.parse(t).map_err(|e| shape(at(), e)),
    }
}

fn vector(f: FieldSpec, v: &[Num], n: usize, at: &str) -> Result<Vec<Scalar>, LoadError> {
    if v.len() != n {
        return Err(shape(at, format!("expected {n} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, x)| scalar(f, x, || format!("{at}[{i}]"))).collect()
}

fn tensor3(f: FieldSpec, t: &[Vec<Vec<Num>>], n: usize, at: &str) -> Result<Tensor3, LoadError> {
    if t.len() != n {
        return Err(shape(at, format!("expected {n} slices, found {}", t.len())));
    }
    t.iter()
        .enumerate()
        .map(|(i, m)| {
            if m.len() != n {
                return Err(shape(format!("{at}[{i}]"), format!("expected {n} rows, found {}", m.len())));
            }
            m.iter().enumerate().map(|(j, row)| vector(f, row, n, &format!("{at}[{i}][{j}]"))).collect()
        })
        .collect()
}

/// The source of an R-matrix as given in the file.
#[derive(Clone, Debug)]
pub enum RSource {
    Classical { r: ClassicalRElement, convention: LegConvention },
    Four(Box<DuoidalRMatrix>),
}

/// A parsed, shape-checked instance. Semantic validity is checked by the commands.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub field: FieldSpec,
    pub s: SeparatelyOpmonoidalData,
    pub rmatrix: Option<RSource>,
    pub objects: Vec<Obj>,
    pub modules: Vec<ModuleObject>,
}

impl Instance {
    pub fn bialgebra(&self) -> &BialgebraData {
        self.s.circ()
    }

    /// The R-matrix of the file (embedding a classical one), or `None` if absent.
    /// A classical element failing the classical axioms gives `PrerequisiteFailed`.
    pub fn rmatrix(&self) -> Option<duoidal_core::Result<DuoidalRMatrix>> {
        self.rmatrix.as_ref().map(|r| match r {
            RSource::Four(rm) => Ok((**rm).clone()),
            RSource::Classical { r, convention } => embed_classical(self.bialgebra(), r, *convention),
        })
    }
}

impl InstanceFile {
    pub fn build(&self, fallback_name: &str) -> Result<Instance, LoadError> {
        let f = parse_field(&self.field)?;
        let b = &self.bialgebra;
        let n = b.dim;
        if n == 0 {
            return Err(shape("bialgebra.dim", "must be positive"));
        }
        if let Some(names) = &self.basis {
            if names.len() != n {
                return Err(shape("basis", format!("expected {n} names, found {}", names.len())));
            }
        }
        let circ = BialgebraData {
            field: f,
            dim: n,
            unit: vector(f, &b.unit, n, "bialgebra.unit")?,
            mul: tensor3(f, &b.mul, n, "bialgebra.mul")?,
            comul: tensor3(f, &b.comul, n, "bialgebra.comul")?,
            counit: vector(f, &b.counit, n, "bialgebra.counit")?,
            basis_names: self.basis.clone(),
        };
        let bullet = match &self.comul2 {
            None => circ.clone(),
            Some(c) => BialgebraData {
                comul: tensor3(f, &c.comul, n, "comul2.comul")?,
                counit: vector(f, &c.counit, n, "comul2.counit")?,
                ..circ.clone()
            },
        };
        let s = SeparatelyOpmonoidalData::new(circ, bullet).map_err(|e| shape("bialgebra", e))?;

        let rmatrix = self.rmatrix.as_ref().map(|r| build_rmatrix(f, n, &s, r)).transpose()?;

        let mut objects = Vec::new();
        let mut modules = Vec::new();
        for (k, o) in self.test_objects.iter().enumerate() {
            let at = format!("test_objects[{k}]");
            if o.dim == 0 {
                return Err(shape(format!("{at}.dim"), "must be positive"));
            }
            let label = o.label.clone().unwrap_or_else(|| format!("obj{k}"));
            // k¹ is the unit object
            let obj = Obj { label, ..Obj::plain(o.dim) };
            match &o.action {
                None => objects.push(obj),
                Some(mats) => {
                    if mats.len() != n {
                        return Err(shape(format!("{at}.action"), format!("expected {n} matrices, found {}", mats.len())));
                    }
                    let mut lin = Vec::with_capacity(n);
                    for (i, m) in mats.iter().enumerate() {
                        let mat_at = format!("{at}.action[{i}]");
                        if m.len() != o.dim {
                            return Err(shape(&mat_at, format!("expected {} rows, found {}", o.dim, m.len())));
                        }
                        let rows = m
                            .iter()
                            .enumerate()
                            .map(|(r, row)| vector(f, row, o.dim, &format!("{mat_at}[{r}]")))
                            .collect::<Result<Vec<_>, _>>()?;
                        let sp = TensorSpace::single(o.dim);
                        lin.push(LinMap::from_rows(f, sp.clone(), sp, &rows).map_err(|e| shape(&mat_at, e))?);
                    }
                    modules.push(ModuleObject::from_matrices(&s, obj, &lin).map_err(|e| shape(&at, e))?);
                }
            }
        }
        let name = self.name.clone().unwrap_or_else(|| fallback_name.to_string());
        Ok(Instance { name, field: f, s, rmatrix, objects, modules })
    }
}

fn build_rmatrix(f: FieldSpec, n: usize, s: &SeparatelyOpmonoidalData, r: &RMatrixBlock) -> Result<RSource, LoadError> {
    let legs = r.legs as usize;
    if legs != 2 && legs != 4 {
        return Err(shape("rmatrix.legs", format!("expected 2 or 4, found {legs}")));
    }
    let mut terms = Vec::with_capacity(r.terms.len());
    for (k, t) in r.terms.iter().enumerate() {
        let at = format!("rmatrix.terms[{k}]");
        if t.index.len() != legs {
            return Err(shape(format!("{at}.index"), format!("expected {legs} indices, found {}", t.index.len())));
        }
        if let Some(bad) = t.index.iter().find(|&&i| i >= n) {
            return Err(shape(format!("{at}.index"), format!("basis index {bad} out of range for dimension {n}")));
        }
        let flat = t.index.iter().fold(0u64, |acc, &i| acc * n as u64 + i as u64);
        terms.push((flat, scalar(f, &t.coeff, || format!("{at}.coeff"))?));
    }
    let v = SparseVec::from_terms(terms);
    let get = |x: &Option<Num>, at: &str| x.as_ref().map_or(Ok(f.one()), |x| scalar(f, x, || at.to_string()));
    let [nu, varpi, iota] = [get(&r.n, "rmatrix.n")?, get(&r.w, "rmatrix.w")?, get(&r.i, "rmatrix.i")?];
    if legs == 2 {
        if [&nu, &varpi, &iota].iter().any(|x| !x.is_one()) {
            return Err(shape("rmatrix", "a classical element is embedded with n = w = i = 1"));
        }
        let r2 = v.to_dense(f, n * n);
        return Ok(RSource::Classical { r: ClassicalRElement { r2 }, convention: r.convention.unwrap_or_default() });
    }
    if r.convention.is_some() {
        return Err(shape("rmatrix.convention", "only meaningful for a two-leg element"));
    }
    let rm = DuoidalRMatrix::new(f, s.dim(), v, nu, varpi, iota).map_err(|e| shape("rmatrix", e))?;
    Ok(RSource::Four(Box::new(rm)))
}

/// A four-leg block for `rm`, e.g. the output of `embed-classical`.
pub fn four_leg_block(rm: &DuoidalRMatrix) -> RMatrixBlock {
    let n = rm.dim() as u64;
    let terms = rm
        .r4()
        .terms()
        .iter()
        .map(|(flat, c)| RTerm { coeff: Num::of(c), index: (0..4).rev().map(|k| ((flat / n.pow(k)) % n) as usize).collect() })
        .collect();
    let [nu, varpi, iota] = rm.scalars();
    RMatrixBlock { legs: 4, terms, n: Some(Num::of(&nu)), w: Some(Num::of(&varpi)), i: Some(Num::of(&iota)), convention: None }
}

pub fn load(path: &Path) -> Result<Instance, LoadError> {
    let file = read(path)?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    file.build(&stem)
}
