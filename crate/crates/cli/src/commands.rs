use std::fmt;

use duoidal_core::bialg::{check_classical_qt, validate_bialgebra};
use duoidal_core::duoidal::{check_double_opmonoidal, check_duoidal_axioms, derived_iota, DuoidalStructure};
use duoidal_core::lindist::{
    check_double_opmonoidal_implies_lindist, check_lindist_lift_nonplanar, check_lindist_lift_planar,
    distributors_from_normal,
};
use duoidal_core::monad_em::{
    check_bimonad_laws, check_module, default_modules, default_objects, free_module, tensor_of_modules, trivial_module,
    Flavor, Probes, DEFAULT_BUDGET,
};
use duoidal_core::report::{CheckReport, Verdict};
use duoidal_core::rmatrix::{
    check_induced_em_structure, check_rmatrix_axioms, r_from_xi, roundtrip_xi_verdict, DuoidalRMatrix, XiFromR,
};
use duoidal_core::Error;
use serde::{Deserialize, Serialize};

use crate::instance::{four_leg_block, Instance, RMatrixBlock, RSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duoidal,
    DoubleOpmonoidal,
    Rmatrix,
    LindistNonplanar,
    LindistPlanar,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["duoidal", "double-opmonoidal", "rmatrix", "lindist-nonplanar", "lindist-planar", "all"];

    pub fn parse(s: &str) -> Option<Suite> {
        use Suite::*;
        Some(match s {
            "duoidal" => Duoidal,
            "double-opmonoidal" => DoubleOpmonoidal,
            "rmatrix" => Rmatrix,
            "lindist-nonplanar" => LindistNonplanar,
            "lindist-planar" => LindistPlanar,
            "all" => All,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        Suite::NAMES[self as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Check(Suite),
    Roundtrip,
    EmbedClassical,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Validate => f.write_str("validate"),
            Command::Check(s) => write!(f, "check {}", s.name()),
            Command::Roundtrip => f.write_str("roundtrip"),
            Command::EmbedClassical => f.write_str("embed-classical"),
        }
    }
}

/// Everything a command prints; `--json` emits exactly this.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub command: String,
    pub instance: String,
    pub passed: bool,
    pub reports: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<RMatrixBlock>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.command, self.instance)?;
        for r in &self.reports {
            writeln!(f, "{r}")?;
        }
        if let Some(rm) = &self.rmatrix {
            writeln!(f, "r4 ({} terms, legs on Ba⊗Bc⊗Bb⊗Bd):", rm.terms.len())?;
            for t in &rm.terms {
                writeln!(f, "  {:>6}  {:?}", t.coeff.to_string(), t.index)?;
            }
        }
        write!(f, "result: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Errors that are not check failures (exit status 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses a probe specification: comma-separated tokens among `trivial`,
/// `free`, `free-free`, `instance` (the file's modules) and `budget=N`.
pub fn probes(inst: &Instance, spec: Option<&str>) -> Result<Probes, UsageError> {
    let s = &inst.s;
    let mut objects = default_objects();
    objects.extend(inst.objects.iter().cloned());
    let Some(spec) = spec.filter(|t| !t.trim().is_empty()) else {
        let mut modules = default_modules(s);
        modules.extend(inst.modules.iter().cloned());
        return Ok(Probes { objects, modules, budget: DEFAULT_BUDGET });
    };
    let mut modules = Vec::new();
    let mut budget = DEFAULT_BUDGET;
    for tok in spec.split(',').map(str::trim) {
        match tok {
            "trivial" => modules.push(trivial_module(s, Flavor::Circ)),
            "free" => modules.push(free_module(s)),
            "free-free" => {
                let free = free_module(s);
                modules.push(tensor_of_modules(s, Flavor::Circ, &free, &free));
            }
            "instance" => modules.extend(inst.modules.iter().cloned()),
            _ => {
                budget = tok
                    .strip_prefix("budget=")
                    .and_then(|b| b.parse().ok())
                    .filter(|&b| b > 0)
                    .ok_or_else(|| UsageError(format!("bad probe token {tok:?}")))?;
            }
        }
    }
    // a budget on its own keeps the default modules
    if modules.is_empty() {
        modules = default_modules(s);
        modules.extend(inst.modules.iter().cloned());
    }
    Ok(Probes { objects, modules, budget })
}

fn validation_reports(inst: &Instance) -> Result<Vec<CheckReport>, UsageError> {
    let s = &inst.s;
    let mut out = vec![validate_bialgebra(s.circ())?];
    if !s.comultiplications_agree() || !s.counits_agree() {
        let mut bullet = validate_bialgebra(s.bullet())?;
        bullet.suite = "bialgebra•".into();
        out.push(bullet);
    }
    if !inst.modules.is_empty() {
        let mut rep = CheckReport::new("test-modules");
        for m in &inst.modules {
            for mut v in check_module(s, m).verdicts {
                v.id = format!("{}:{}", v.id, m.label());
                rep.push(v);
            }
        }
        out.push(rep);
    }
    Ok(out)
}

fn duoidal_report(inst: &Instance, p: &Probes) -> Result<CheckReport, UsageError> {
    let d = DuoidalStructure::symmetric(inst.field);
    let mut rep = check_duoidal_axioms(&d, &p.objects, p.budget);
    let iota = derived_iota(&d)?;
    let note = format!("derived ι = {iota}, stored ι = {}", d.iota);
    rep.push(Verdict::from_bool("duoidal:derived-iota", iota == d.iota, "").with_note(note));
    Ok(rep)
}

fn double_opmonoidal_report(inst: &Instance, p: &Probes) -> CheckReport {
    let s = &inst.s;
    let d = DuoidalStructure::symmetric(inst.field);
    let mut rep = check_double_opmonoidal(s, &d, &p.objects, p.budget);
    for fl in [Flavor::Circ, Flavor::Bullet] {
        rep.extend(check_bimonad_laws(s, fl, &p.objects));
    }
    rep
}

/// The file's R-matrix, or the trivial one (`1⊗1⊗1⊗1`) when the file has none.
fn rmatrix_of(inst: &Instance, allow_trivial: bool) -> Result<Result<(DuoidalRMatrix, bool), CheckReport>, UsageError> {
    match inst.rmatrix() {
        None if allow_trivial => Ok(Ok((DuoidalRMatrix::trivial(inst.bialgebra()), true))),
        None => Err(UsageError(format!("{}: no rmatrix block", inst.name))),
        Some(Ok(rm)) => Ok(Ok((rm, false))),
        Some(Err(Error::PrerequisiteFailed(_))) => {
            let Some(RSource::Classical { r, .. }) = &inst.rmatrix else { unreachable!("only embedding checks a prerequisite") };
            Ok(Err(check_classical_qt(inst.bialgebra(), r)?))
        }
        Some(Err(e)) => Err(e.into()),
    }
}

fn rmatrix_report(inst: &Instance, rm: &DuoidalRMatrix, trivial: bool, p: &Probes) -> Result<CheckReport, UsageError> {
    let mut rep = check_rmatrix_axioms(&inst.s, rm, p)?;
    if trivial {
        rep.suite = "rmatrix (trivial R, no rmatrix block)".into();
    }
    Ok(rep)
}

fn roundtrip_report(inst: &Instance, rm: &DuoidalRMatrix, p: &Probes) -> Result<CheckReport, UsageError> {
    let s = &inst.s;
    let mut rep = CheckReport::new("roundtrip");
    let back = r_from_xi(s, &XiFromR(rm))?;
    let same = back.r4() == rm.r4() && back.scalars() == rm.scalars();
    let note = if same {
        format!("r4 reconstructed identically ({} terms)", back.r4().terms().len())
    } else {
        "r4 differs after reconstruction".to_string()
    };
    rep.push(Verdict::from_bool("roundtrip:r4", same, "").with_note(note));
    rep.push(roundtrip_xi_verdict(s, &XiFromR(rm), p)?);
    Ok(rep)
}

fn lindist_reports(inst: &Instance, p: &Probes, planar: bool) -> Result<CheckReport, UsageError> {
    let d = DuoidalStructure::symmetric(inst.field);
    let dst = distributors_from_normal(&d, &p.objects, p.budget)?;
    Ok(if planar {
        check_lindist_lift_planar(&inst.s, &dst, p)
    } else {
        check_lindist_lift_nonplanar(&inst.s, &dst, p)
    })
}

pub fn run(cmd: Command, inst: &Instance, p: &Probes) -> Result<Outcome, UsageError> {
    let mut reports = validation_reports(inst)?;
    let mut rmatrix = None;
    let valid = reports.iter().all(|r| r.passed);
    if valid {
        match cmd {
            Command::Validate => {}
            Command::Check(Suite::Duoidal) => reports.push(duoidal_report(inst, p)?),
            Command::Check(Suite::DoubleOpmonoidal) => reports.push(double_opmonoidal_report(inst, p)),
            Command::Check(Suite::Rmatrix) => match rmatrix_of(inst, false)? {
                Ok((rm, _)) => reports.push(rmatrix_report(inst, &rm, false, p)?),
                Err(qt) => reports.push(qt),
            },
            Command::Check(Suite::LindistNonplanar) => reports.push(lindist_reports(inst, p, false)?),
            Command::Check(Suite::LindistPlanar) => reports.push(lindist_reports(inst, p, true)?),
            Command::Check(Suite::All) => {
                reports.push(duoidal_report(inst, p)?);
                let dop = double_opmonoidal_report(inst, p);
                let dop_passed = dop.passed;
                reports.push(dop);
                match rmatrix_of(inst, true)? {
                    Ok((rm, trivial)) => {
                        let rep = rmatrix_report(inst, &rm, trivial, p)?;
                        let passed = rep.passed;
                        reports.push(rep);
                        if passed {
                            let mut em = check_induced_em_structure(&inst.s, &XiFromR(&rm), p);
                            em.suite = "em-duoidal (ξ from R)".into();
                            reports.push(em);
                            reports.push(roundtrip_report(inst, &rm, p)?);
                        }
                    }
                    Err(qt) => reports.push(qt),
                }
                reports.push(lindist_reports(inst, p, false)?);
                reports.push(lindist_reports(inst, p, true)?);
                if dop_passed {
                    let d = DuoidalStructure::symmetric(inst.field);
                    reports.push(check_double_opmonoidal_implies_lindist(&inst.s, &d, p)?);
                }
            }
            Command::Roundtrip => match rmatrix_of(inst, false)? {
                Ok((rm, _)) => {
                    let rep = rmatrix_report(inst, &rm, false, p)?;
                    let passed = rep.passed;
                    reports.push(rep);
                    if passed {
                        reports.push(roundtrip_report(inst, &rm, p)?);
                    }
                }
                Err(qt) => reports.push(qt),
            },
            Command::EmbedClassical => {
                let Some(RSource::Classical { r, .. }) = &inst.rmatrix else {
                    return Err(UsageError(format!("{}: embed-classical needs a two-leg rmatrix block", inst.name)));
                };
                reports.push(check_classical_qt(inst.bialgebra(), r)?);
                if let Some(Ok(rm)) = inst.rmatrix() {
                    rmatrix = Some(four_leg_block(&rm));
                }
            }
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok(Outcome { command: cmd.to_string(), instance: inst.name.clone(), passed, reports, rmatrix })
}
