use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use symcenter::algebra::{Algebra, LoewyProfile};
use symcenter::error::Error;
use symcenter::linalg::Subspace;
use symcenter::paperlab::SuiteResult;
use symcenter::substructures::{
    is_basic, j_of_center, jacobson_radical, property_verdicts, reynolds, soc_of_center, socle, Verdict,
};
use symcenter::symform::attached_structure;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Serialize)]
pub struct MachineReport {
    pub schema_version: u32,
    pub name: String,
    pub dims: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub loewy_layers: Option<Vec<usize>>,
    pub verdicts: BTreeMap<String, bool>,
    pub claims: Vec<ClaimLine>,
}

#[derive(Debug, Serialize)]
pub struct ClaimLine {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Everything `analyze` prints about one algebra.
pub struct Analysis {
    name: String,
    field: String,
    subspaces: Vec<(&'static str, Subspace)>,
    loewy: LoewyProfile,
    symmetric: bool,
    basic: bool,
    local: bool,
    verdicts: Vec<(&'static str, &'static str, Verdict)>,
    alg: Algebra,
}

/// Subspaces whose bases are listed in the text report, not just counted.
const LISTED: [&str; 4] = ["soc(A)", "J(Z(A))", "soc(Z(A))", "R(A)"];

pub fn analyze(name: &str, alg: Algebra) -> Result<Analysis, CliError> {
    let j = jacobson_radical(&alg)?;
    let structure = attached_structure(&alg)?;
    let subspaces = vec![
        ("Z(A)", alg.center().clone()),
        ("K(A)", alg.commutator_space().clone()),
        ("J(A)", j.clone()),
        ("soc(A)", socle(&alg)?),
        ("J(Z(A))", j_of_center(&alg)?),
        ("soc(Z(A))", soc_of_center(&alg)?),
        ("R(A)", reynolds(&alg)?),
    ];
    let v = property_verdicts(&alg)?;
    Ok(Analysis {
        name: name.to_string(),
        field: alg.field().to_string(),
        loewy: alg.loewy_series(&j)?,
        symmetric: structure.is_some(),
        basic: is_basic(&alg)?,
        local: j.dim() + 1 == alg.dim(),
        verdicts: vec![("p1", "J(Z(A))", v.p1), ("p2", "soc(Z(A))", v.p2), ("p3", "R(A)", v.p3)],
        subspaces,
        alg,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Analysis {
    pub fn text(&self) -> String {
        let a = &self.alg;
        let mut out = String::new();
        let _ = writeln!(out, "algebra {} over {}", self.name, self.field);
        let _ = writeln!(out, "dim A = {}", a.dim());
        for (label, s) in &self.subspaces {
            let _ = writeln!(out, "dim {label} = {}", s.dim());
        }
        let layers: Vec<String> = self.loewy.layers.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "loewy layers = {} (length {})", layers.join(" "), self.loewy.ell);
        let _ = writeln!(out, "symmetric: {}", yes_no(self.symmetric));
        let _ = writeln!(out, "basic: {}", yes_no(self.basic));
        let _ = writeln!(out, "local: {}", yes_no(self.local));
        for (label, s) in self.subspaces.iter().filter(|(l, _)| LISTED.contains(l)) {
            let _ = writeln!(out, "{label} = span{{{}}}", a.format_subspace(s).join(", "));
        }
        for (id, subject, v) in &self.verdicts {
            let _ = write!(out, "{id}: {subject} is an ideal: {}", v.holds);
            if let Some(w) = &v.witness {
                let _ = write!(
                    out,
                    " (witness {} times commutator {} gives {})",
                    a.format_vector(&w.u),
                    a.format_vector(&w.k),
                    a.format_vector(&w.product)
                );
            }
            out.push('\n');
        }
        out
    }

    pub fn machine(&self) -> MachineReport {
        let mut dims: BTreeMap<String, usize> = self.subspaces.iter().map(|(l, s)| (l.to_string(), s.dim())).collect();
        dims.insert("A".into(), self.alg.dim());
        let mut verdicts: BTreeMap<String, bool> = self
            .verdicts
            .iter()
            .map(|(id, _, v)| (id.to_string(), v.holds))
            .collect();
        verdicts.insert("symmetric".into(), self.symmetric);
        verdicts.insert("basic".into(), self.basic);
        verdicts.insert("local".into(), self.local);
        MachineReport {
            schema_version: SCHEMA_VERSION,
            name: self.name.clone(),
            dims,
            loewy_layers: Some(self.loewy.layers.clone()),
            verdicts,
            claims: self
                .verdicts
                .iter()
                .map(|(id, subject, v)| ClaimLine {
                    id: id.to_string(),
                    pass: v.holds,
                    witness: v.witness.as_ref().map(|w| self.alg.format_vector(&w.u)),
                    detail: format!("{subject} is an ideal"),
                })
                .collect(),
        }
    }
}

pub fn suite_report(results: &[SuiteResult]) -> MachineReport {
    MachineReport {
        schema_version: SCHEMA_VERSION,
        name: "paper-suite".into(),
        dims: BTreeMap::new(),
        loewy_layers: None,
        verdicts: results.iter().map(|r| (r.suite.clone(), r.passed())).collect(),
        claims: results
            .iter()
            .flat_map(|r| &r.claims)
            .map(|c| ClaimLine {
                id: c.id.clone(),
                pass: c.pass,
                witness: c.witness.clone(),
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

pub fn suite_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    let mut failed = 0;
    let mut total = 0;
    for c in results.iter().flat_map(|r| &r.claims) {
        total += 1;
        let status = if c.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!c.pass);
        let _ = write!(out, "{status} {}", c.id);
        if let Some(w) = &c.witness {
            let _ = write!(out, " [witness {w}]");
        }
        if !c.pass && !c.detail.is_empty() {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{} claims, {failed} failed", total);
    out
}

pub fn to_json(report: &MachineReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Errors surfaced while analyzing get a hint on how to recover.
pub fn explain(e: &CliError) -> String {
    match e {
        CliError::Core(Error::RadicalUnavailable(_))
        | CliError::Invalid {
            source: Error::RadicalUnavailable(_),
            ..
        } => {
            format!("{e}\nno radical strategy applies; add radical_hint to the file")
        }
        _ => e.to_string(),
    }
}
