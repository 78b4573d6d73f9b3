//! Jacobson radical (via verified strategies), socle, the radical and socle
//! of the center, the Reynolds ideal and the three ideal verdicts.

use std::fmt;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{is_zero_vec, Matrix, Subspace};

/// Caller-supplied knowledge about the radical, always verified before use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalHint {
    /// The radical has codimension one. With no vectors, it is spanned by the
    /// basis vectors other than the identity (which must itself be a basis vector).
    LocalCodim1 { vectors: Option<Vec<Vec<Elem>>> },
    /// The radical is spanned by these vectors.
    Basis(Vec<Vec<Elem>>),
    /// The algebra is semisimple.
    Semisimple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalStrategy {
    Dickson,
    HintedLocal,
    HintedGeneral,
    SemisimpleTraceform,
    Propagated,
}

impl fmt::Display for RadicalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadicalStrategy::Dickson => "dickson",
            RadicalStrategy::HintedLocal => "hinted_local",
            RadicalStrategy::HintedGeneral => "hinted_general",
            RadicalStrategy::SemisimpleTraceform => "semisimple_traceform",
            RadicalStrategy::Propagated => "propagated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalCertificate {
    pub radical: Subspace,
    pub strategy: RadicalStrategy,
    pub evidence: String,
}

impl RadicalCertificate {
    /// Re-checks the certificate from scratch against `alg`.
    pub fn verify(&self, alg: &Algebra) -> Result<()> {
        let j = &self.radical;
        if !alg.is_ideal(j)? {
            return Err(Error::Internal(format!("{} radical is not an ideal", self.strategy)));
        }
        if !alg.is_nilpotent(j)? {
            return Err(Error::Internal(format!("{} radical is not nilpotent", self.strategy)));
        }
        let codim = alg.dim() - j.dim();
        match self.strategy {
            RadicalStrategy::HintedLocal => {
                if codim != 1 {
                    return Err(Error::Internal("local radical has codimension != 1".into()));
                }
            }
            RadicalStrategy::HintedGeneral | RadicalStrategy::SemisimpleTraceform => {
                if codim > 1 && !quotient_trace_form_nondegenerate(alg, j) {
                    return Err(Error::Internal("quotient trace form is degenerate".into()));
                }
            }
            RadicalStrategy::Dickson => {
                let p = alg.field().characteristic() as usize;
                if p != 0 && p <= alg.dim() {
                    return Err(Error::Internal(
                        "trace-form criterion used in small characteristic".into(),
                    ));
                }
                if j != &trace_form_radical(alg) {
                    return Err(Error::Internal("radical differs from the trace-form radical".into()));
                }
            }
            RadicalStrategy::Propagated => {}
        }
        Ok(())
    }
}

/// The Jacobson radical, computed once per algebra value.
pub fn radical(alg: &Algebra) -> Result<RadicalCertificate> {
    alg.radical_cache().get_or_init(|| compute_radical(alg)).clone()
}

pub fn jacobson_radical(alg: &Algebra) -> Result<Subspace> {
    radical(alg).map(|c| c.radical)
}

fn compute_radical(alg: &Algebra) -> Result<RadicalCertificate> {
    if let Some(p) = alg.propagated_radical() {
        let j = &p.radical;
        if j.ambient() != alg.dim() || !alg.is_ideal(j)? || !alg.is_nilpotent(j)? {
            return Err(Error::Internal(format!(
                "propagated radical fails verification ({})",
                p.evidence
            )));
        }
        return Ok(RadicalCertificate {
            radical: j.clone(),
            strategy: RadicalStrategy::Propagated,
            evidence: p.evidence.clone(),
        });
    }
    if let Some(hint) = alg.radical_hint() {
        return apply_hint(alg, hint);
    }
    let p = alg.field().characteristic() as usize;
    if p == 0 || p > alg.dim() {
        let j = trace_form_radical(alg);
        let cert = RadicalCertificate {
            radical: j,
            strategy: RadicalStrategy::Dickson,
            evidence: format!("trace form radical, characteristic {p} (0 or > dim {})", alg.dim()),
        };
        cert.verify(alg)?;
        return Ok(cert);
    }
    Err(Error::RadicalUnavailable(format!(
        "no radical hint given and the trace-form criterion needs characteristic 0 or > {} (got {p}); \
         supply radical_hint local_codim1, basis or semisimple",
        alg.dim()
    )))
}

fn apply_hint(alg: &Algebra, hint: &RadicalHint) -> Result<RadicalCertificate> {
    let n = alg.dim();
    let reject = |msg: String| Err(Error::HintRejected(msg));
    let (candidate, strategy) = match hint {
        RadicalHint::Semisimple => (alg.zero_space(), RadicalStrategy::SemisimpleTraceform),
        RadicalHint::Basis(vs) => {
            check_vectors(alg, vs)?;
            (alg.span(vs.iter().cloned()), RadicalStrategy::HintedGeneral)
        }
        RadicalHint::LocalCodim1 { vectors: Some(vs) } => {
            check_vectors(alg, vs)?;
            (alg.span(vs.iter().cloned()), RadicalStrategy::HintedLocal)
        }
        RadicalHint::LocalCodim1 { vectors: None } => {
            let Some(k) = alg.one_index() else {
                return reject("local_codim1 without vectors needs the identity to be a basis vector".into());
            };
            let others = (0..n).filter(|&i| i != k).map(|i| alg.basis_vector(i));
            (alg.span(others), RadicalStrategy::HintedLocal)
        }
    };
    let codim = n - candidate.dim();
    if strategy == RadicalStrategy::HintedLocal && codim != 1 {
        return reject(format!("local_codim1 candidate has codimension {codim}"));
    }
    if candidate.member(alg.one()) {
        return reject("candidate contains the identity".into());
    }
    if let Some((a, b)) = alg.ideal_violation(&candidate)? {
        return reject(format!(
            "candidate is not an ideal: {} * {} escapes it",
            alg.format_vector(&a),
            alg.format_vector(&b)
        ));
    }
    if !alg.is_nilpotent(&candidate)? {
        return reject("candidate is not nilpotent".into());
    }
    let evidence = match strategy {
        RadicalStrategy::HintedLocal => "nilpotent ideal of codimension 1".to_string(),
        _ if codim <= 1 => format!("nilpotent ideal of codimension {codim}"),
        _ => {
            if !quotient_trace_form_nondegenerate(alg, &candidate) {
                return reject(format!("trace form on the {codim}-dimensional quotient is degenerate"));
            }
            format!("nilpotent ideal with nondegenerate trace form on the {codim}-dimensional quotient")
        }
    };
    Ok(RadicalCertificate {
        radical: candidate,
        strategy,
        evidence,
    })
}

fn check_vectors(alg: &Algebra, vs: &[Vec<Elem>]) -> Result<()> {
    if vs.iter().any(|v| v.len() != alg.dim()) {
        return Err(Error::HintRejected(format!(
            "hint vectors must have length {}",
            alg.dim()
        )));
    }
    Ok(())
}

/// Trace of left multiplication by each basis vector.
fn basis_traces(alg: &Algebra) -> Vec<Elem> {
    let f = alg.field();
    (0..alg.dim())
        .map(|l| {
            let mut t = f.zero();
            for k in 0..alg.dim() {
                for (m, c) in alg.product_entries(l, k) {
                    if *m == k {
                        t = f.add(&t, c);
                    }
                }
            }
            t
        })
        .collect()
}

/// Gram matrix of `(x, y) -> tr(L_{xy})` on the basis.
pub fn trace_form_gram(alg: &Algebra) -> Matrix {
    let f = alg.field();
    let n = alg.dim();
    let traces = basis_traces(alg);
    let mut g = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = f.zero();
            for (l, c) in alg.product_entries(i, j) {
                acc = f.add(&acc, &f.mul(c, &traces[*l]));
            }
            g.set(i, j, acc);
        }
    }
    g
}

fn trace_form_radical(alg: &Algebra) -> Subspace {
    trace_form_gram(alg).kernel()
}

/// Whether `(x, y) -> tr(L_{xy})` computed on `A/N` is nondegenerate.
fn quotient_trace_form_nondegenerate(alg: &Algebra, n_sub: &Subspace) -> bool {
    let f = alg.field();
    let mut is_pivot = vec![false; alg.dim()];
    for &p in n_sub.pivots() {
        is_pivot[p] = true;
    }
    let comp: Vec<usize> = (0..alg.dim()).filter(|&c| !is_pivot[c]).collect();
    let trace = |w: &[Elem]| {
        let mut t = f.zero();
        for &c in &comp {
            let image = n_sub.reduce(&alg.mul(w, &alg.basis_vector(c)));
            t = f.add(&t, &image[c]);
        }
        t
    };
    let rows: Vec<Vec<Elem>> = comp
        .iter()
        .map(|&a| comp.iter().map(|&b| trace(&alg.basis_product(a, b))).collect())
        .collect();
    let g = Matrix::from_rows(f, comp.len(), rows).expect("square");
    g.rank() == comp.len()
}

pub fn socle(alg: &Algebra) -> Result<Subspace> {
    alg.right_annihilator(&jacobson_radical(alg)?)
}

pub fn j_of_center(alg: &Algebra) -> Result<Subspace> {
    jacobson_radical(alg)?.intersect(alg.center())
}

/// Elements of the center annihilating the radical of the center.
pub fn soc_of_center(alg: &Algebra) -> Result<Subspace> {
    let jz = j_of_center(alg)?;
    alg.center().intersect(&alg.left_annihilator(&jz)?)
}

pub fn reynolds(alg: &Algebra) -> Result<Subspace> {
    socle(alg)?.intersect(alg.center())
}

pub fn is_basic(alg: &Algebra) -> Result<bool> {
    jacobson_radical(alg)?.contains(alg.commutator_space())
}

pub fn is_local(alg: &Algebra) -> Result<bool> {
    Ok(jacobson_radical(alg)?.dim() + 1 == alg.dim())
}

/// A pair `(u, k)` with `u` in the tested subspace, `k` in the commutator
/// space and `uk != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: Vec<Elem>,
    pub k: Vec<Elem>,
    pub product: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdicts {
    pub p1: Verdict,
    pub p2: Verdict,
    pub p3: Verdict,
}

/// Decides whether a subspace of the center is an ideal, both directly and
/// through the vanishing of its product with the commutator space.
pub fn central_ideal_verdict(alg: &Algebra, u: &Subspace, property: &'static str) -> Result<Verdict> {
    let by_ideal = alg.is_ideal(u)?;
    let mut witness = None;
    'scan: for x in u.basis() {
        for k in alg.commutator_space().basis() {
            let product = alg.mul(x, k);
            if !is_zero_vec(alg.field(), &product) {
                witness = Some(Witness {
                    u: x.clone(),
                    k: k.clone(),
                    product,
                });
                break 'scan;
            }
        }
    }
    let by_product = witness.is_none();
    if by_ideal != by_product {
        return Err(Error::CriterionDisagreement {
            property,
            by_ideal,
            by_product,
        });
    }
    Ok(Verdict {
        holds: by_ideal,
        witness,
    })
}

pub fn property_verdicts(alg: &Algebra) -> Result<PropertyVerdicts> {
    Ok(PropertyVerdicts {
        p1: central_ideal_verdict(alg, &j_of_center(alg)?, "p1")?,
        p2: central_ideal_verdict(alg, &soc_of_center(alg)?, "p2")?,
        p3: central_ideal_verdict(alg, &reynolds(alg)?, "p3")?,
    })
}
