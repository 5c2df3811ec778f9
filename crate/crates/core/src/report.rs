//! Verdicts with basis-vector witnesses.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Arrow, SparseVec, TensorSpace};
use crate::error::Error;

/// Optional basis names for each factor of a space; unnamed factors print as `e0, e1, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LegNames(Vec<Option<Arc<Vec<String>>>>);

impl LegNames {
    pub fn unnamed(len: usize) -> Self {
        LegNames(vec![None; len])
    }

    pub fn named(names: Arc<Vec<String>>) -> Self {
        LegNames(vec![Some(names)])
    }

    pub fn concat(&self, other: &LegNames) -> LegNames {
        LegNames(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a LegNames>) -> LegNames {
        LegNames(parts.into_iter().flat_map(|p| p.0.iter().cloned()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Renders a basis vector; one-dimensional factors are omitted.
    pub fn render(&self, space: &TensorSpace, index: u64) -> String {
        let digits = space.digits(index);
        let parts: Vec<String> = digits
            .iter()
            .zip(space.factors())
            .enumerate()
            .filter(|(_, (_, &d))| d > 1)
            .map(|(leg, (&i, _))| match self.0.get(leg).and_then(|n| n.as_ref()) {
                Some(names) if i < names.len() => names[i].clone(),
                _ => format!("e{i}"),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("⊗")
        }
    }

    pub fn terms(&self, space: &TensorSpace, v: &SparseVec) -> Vec<Term> {
        v.terms()
            .iter()
            .map(|(i, c)| Term { index: *i, basis: self.render(space, *i), coeff: c.to_string() })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub index: u64,
    pub basis: String,
    pub coeff: String,
}

/// Where two composites first disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// The object tuple being probed.
    pub at: String,
    pub index: u64,
    pub basis: String,
    pub left: Vec<Term>,
    pub right: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub passed: bool,
    /// Number of object tuples (or cases) examined.
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(id: impl Into<String>, checked: usize) -> Self {
        Verdict { id: id.into(), passed: true, checked, witness: None, note: None }
    }

    pub fn fail(id: impl Into<String>, checked: usize, note: impl Into<String>) -> Self {
        Verdict { id: id.into(), passed: false, checked, witness: None, note: Some(note.into()) }
    }

    pub fn from_bool(id: impl Into<String>, ok: bool, note: impl Into<String>) -> Self {
        if ok {
            Verdict::pass(id, 1)
        } else {
            Verdict::fail(id, 1, note)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A single comparison with a witness on failure.
    pub fn compare(id: impl Into<String>, case: Case) -> Self {
        Verdict::over(id, &[()], |_| Ok(case.clone()))
    }

    /// Runs `build` on every item in parallel; the verdict keeps the first
    /// failure in item order, so output does not depend on scheduling.
    pub fn over<T: Sync>(id: impl Into<String>, items: &[T], build: impl Fn(&T) -> Result<Case, (String, Error)> + Sync) -> Self {
        let id = id.into();
        let failure = items.par_iter().map(|item| run_case(build(item))).find_first(|r| r.is_some()).flatten();
        match failure {
            None => Verdict::pass(id, items.len()),
            Some(Failure::Witness(w)) => Verdict { id, passed: false, checked: items.len(), witness: Some(*w), note: None },
            Some(Failure::Error(at, e)) => Verdict::fail(id, items.len(), format!("at {at}: {e}")),
        }
    }
}

/// One instance of a diagram: two parallel composites plus naming for witnesses.
#[derive(Clone, Debug)]
pub struct Case {
    pub at: String,
    pub left: Arrow,
    pub right: Arrow,
    pub source: LegNames,
    pub target: LegNames,
}

enum Failure {
    Witness(Box<Witness>),
    Error(String, Error),
}

fn run_case(case: Result<Case, (String, Error)>) -> Option<Failure> {
    let case = match case {
        Ok(c) => c,
        Err((at, e)) => return Some(Failure::Error(at, e)),
    };
    match case.left.compare(&case.right) {
        Err(e) => Some(Failure::Error(case.at, e)),
        Ok(None) => None,
        Ok(Some(d)) => {
            let tgt = case.left.target();
            Some(Failure::Witness(Box::new(Witness {
                basis: case.source.render(case.left.source(), d.index),
                index: d.index,
                left: case.target.terms(tgt, &d.left),
                right: case.target.terms(tgt, &d.right),
                at: case.at,
            })))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub verdicts: Vec<Verdict>,
    pub passed: bool,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport { suite: suite.into(), verdicts: Vec::new(), passed: true }
    }

    pub fn push(&mut self, v: Verdict) {
        self.passed &= v.passed;
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, other: CheckReport) {
        for v in other.verdicts {
            self.push(v);
        }
    }

    pub fn verdict(&self, id: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    /// `passed` recomputed from the verdicts.
    pub fn is_consistent(&self) -> bool {
        self.passed == self.verdicts.iter().all(|v| v.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        let width = self.verdicts.iter().map(|v| v.id.chars().count()).max().unwrap_or(0);
        for v in &self.verdicts {
            let status = if v.passed { "PASS" } else { "FAIL" };
            write!(f, "  {status}  {:<width$}  ({} checked)", v.id, v.checked)?;
            if let Some(n) = &v.note {
                write!(f, "  {n}")?;
            }
            writeln!(f)?;
            if let Some(w) = &v.witness {
                writeln!(f, "        at {}: basis {} (index {})", w.at, w.basis, w.index)?;
                writeln!(f, "        left  = {}", render_terms(&w.left))?;
                writeln!(f, "        right = {}", render_terms(&w.right))?;
            }
        }
        write!(f, "  overall: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn render_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|t| format!("({})·{}", t.coeff, t.basis)).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldSpec;

    #[test]
    fn render_skips_trivial_legs() {
        let names = LegNames::named(Arc::new(vec!["1".into(), "g".into(), "x".into(), "gx".into()]));
        let space = TensorSpace::new(vec![4, 1, 2]).unwrap();
        let legs = names.concat(&LegNames::unnamed(2));
        assert_eq!(legs.render(&space, 2 * 2 + 1), "x⊗e1");
        assert_eq!(LegNames::default().render(&TensorSpace::unit(), 0), "1");
    }

    #[test]
    fn first_failure_in_order() {
        let q = FieldSpec::Rationals;
        let s = TensorSpace::new(vec![2, 2]).unwrap();
        let id = Arrow::identity(q, s.clone());
        let swap = Arrow::permute(q, &s, &[1, 0]).unwrap();
        let v = Verdict::over("swap", &[0, 1, 2], |&i| {
            let right = if i == 0 { id.clone() } else { swap.clone() };
            Ok(Case { at: format!("case {i}"), left: id.clone(), right, source: LegNames::unnamed(2), target: LegNames::unnamed(2) })
        });
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().at, "case 1");
        assert_eq!(v.witness.unwrap().basis, "e0⊗e1");
    }
}
