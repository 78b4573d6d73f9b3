//! Deterministic families of symmetric local algebras and the dimension sweep.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::constructions::{from_skew_presentation, tensor, trivial_extension, SkewPresentation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::substructures::{j_of_center, property_verdicts};
use crate::symform::symmetric_quotient;

use super::{Claim, Subject, SuiteResult, Workbench, FAMILY_SUITE, MAX_FAMILY_DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyPart {
    /// `T(B)` for a truncated polynomial algebra `B`.
    TrivialExtension,
    /// Symmetric quotient of a trivial extension member.
    TrivialExtensionQuotient,
    /// Symmetric quotient of a symmetric local corpus algebra.
    CorpusQuotient,
    /// Tensor product of two trivial extension members.
    Tensor,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub subject: Subject,
    pub part: FamilyPart,
}

#[derive(Clone, Debug)]
pub struct Family {
    pub members: Vec<FamilyMember>,
    /// The local bases `B` whose trivial extensions were taken.
    pub bases: Vec<Subject>,
    /// Candidates that failed verification, with the reason.
    pub rejected: Vec<String>,
}

impl Family {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn algebras(&self) -> impl Iterator<Item = &Algebra> {
        self.members.iter().map(|m| &m.subject.algebra)
    }

    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for m in &self.members {
            *h.entry(m.subject.dim()).or_insert(0) += 1;
        }
        h
    }
}

/// Nonincreasing tuples of bounds `>= 2` with product at most `limit`; the
/// empty tuple stands for the ground field.
fn bound_tuples(limit: usize) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, max_entry: u32, product: usize, limit: usize, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        for b in (2..=max_entry).rev() {
            if product * b as usize <= limit {
                prefix.push(b);
                extend(prefix, b, product * b as usize, limit, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), limit.max(1) as u32, 1, limit, &mut out);
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

fn field_tag(f: &Field) -> String {
    match f.order() {
        Some(q) => format!("gf{q}"),
        None => "q".into(),
    }
}

fn base_algebra(f: &Field, bounds: &[u32], q: i64) -> Result<(String, Algebra)> {
    let tuple = if bounds.is_empty() {
        "1".to_string()
    } else {
        bounds.iter().map(u32::to_string).collect::<Vec<_>>().join("x")
    };
    let tag = if q == 1 { String::new() } else { format!(":q{q}") };
    let id = format!("{}:{tuple}{tag}", field_tag(f));
    let bounds = if bounds.is_empty() { vec![1] } else { bounds.to_vec() };
    let names = SkewPresentation::default_names(bounds.len());
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let p = SkewPresentation::uniform(f, &names, &bounds, &f.from_i64(q));
    Ok((id, from_skew_presentation(&p, f)?))
}

/// `A/(Az)^⊥` for each basis vector `z` of `J(Z(A))`, keyed by the index.
fn basis_quotients(s: &Subject) -> Result<Vec<(String, Algebra)>> {
    let Some(structure) = &s.structure else {
        return Ok(Vec::new());
    };
    let jz = j_of_center(&s.algebra)?;
    jz.basis()
        .iter()
        .enumerate()
        .map(|(k, z)| {
            let w = symmetric_quotient(&s.algebra, structure, z)?;
            Ok((format!("{}/z{k}", s.id), w.quotient))
        })
        .collect()
}

fn table_key(a: &Algebra) -> String {
    format!("{:?}|{:?}|{:?}", a.field().descriptor(), a.dense_table(), a.one())
}

struct Collector {
    max_dim: usize,
    seen: HashSet<String>,
    members: Vec<FamilyMember>,
    rejected: Vec<String>,
}

impl Collector {
    fn offer(&mut self, id: String, algebra: Algebra, part: FamilyPart) {
        if algebra.dim() > self.max_dim || !self.seen.insert(table_key(&algebra)) {
            return;
        }
        match Subject::new(id.clone(), algebra) {
            Ok(s) if s.structure.is_some() && s.local => self.members.push(FamilyMember { subject: s, part }),
            Ok(s) => self
                .rejected
                .push(format!("{id}: symmetric={}, local={}", s.structure.is_some(), s.local)),
            Err(e) => self.rejected.push(format!("{id}: {e}")),
        }
    }
}

pub fn generate_symmetric_local_family(max_dim: usize) -> Result<Family> {
    generate_with_corpus(max_dim, &super::corpus::all_subjects()?)
}

/// The family over GF(2) and GF(3): trivial extensions of truncated
/// polynomial algebras (plus their anticommuting variants over GF(3)), their
/// symmetric quotients, symmetric quotients of the corpus, and tensor products.
pub(crate) fn generate_with_corpus(max_dim: usize, corpus: &[Subject]) -> Result<Family> {
    if max_dim > MAX_FAMILY_DIM {
        return Err(Error::DimensionBound {
            requested: max_dim,
            limit: MAX_FAMILY_DIM,
        });
    }
    let mut specs = Vec::new();
    for f in [Field::prime(2)?, Field::prime(3)?] {
        for bounds in bound_tuples(max_dim / 2) {
            specs.push((f.clone(), bounds.clone(), 1));
            if f.characteristic() != 2 && bounds.len() >= 2 {
                specs.push((f.clone(), bounds, -1));
            }
        }
    }
    let bases: Vec<Subject> = specs
        .par_iter()
        .map(|(f, b, q)| {
            let (id, a) = base_algebra(f, b, *q)?;
            Subject::new(id, a)
        })
        .collect::<Result<_>>()?;

    let mut c = Collector {
        max_dim,
        seen: HashSet::new(),
        members: Vec::new(),
        rejected: Vec::new(),
    };
    let trivexts: Vec<(String, Algebra)> = bases
        .par_iter()
        .map(|b| Ok((format!("T[{}]", b.id), trivial_extension(&b.algebra)?)))
        .collect::<Result<_>>()?;
    for (id, t) in trivexts {
        c.offer(id, t, FamilyPart::TrivialExtension);
    }
    let firsts: Vec<Subject> = c.members.iter().map(|m| m.subject.clone()).collect();

    let quotients: Vec<Vec<(String, Algebra)>> = firsts.par_iter().map(basis_quotients).collect::<Result<_>>()?;
    for (id, q) in quotients.into_iter().flatten() {
        c.offer(id, q, FamilyPart::TrivialExtensionQuotient);
    }

    let corpus_quotients: Vec<Vec<(String, Algebra)>> = corpus
        .par_iter()
        .filter(|s| s.structure.is_some() && s.local)
        .map(basis_quotients)
        .collect::<Result<_>>()?;
    for (id, q) in corpus_quotients.into_iter().flatten() {
        c.offer(id, q, FamilyPart::CorpusQuotient);
    }

    let mut pairs = Vec::new();
    for (i, a) in firsts.iter().enumerate() {
        for b in &firsts[i..] {
            if a.algebra.field() == b.algebra.field() && a.dim() * b.dim() <= max_dim {
                pairs.push((a, b));
            }
        }
    }
    let tensors: Vec<(String, Algebra)> = pairs
        .par_iter()
        .map(|(a, b)| Ok((format!("{}⊗{}", a.id, b.id), tensor(&a.algebra, &b.algebra)?)))
        .collect::<Result<_>>()?;
    for (id, t) in tensors {
        c.offer(id, t, FamilyPart::Tensor);
    }

    Ok(Family {
        members: c.members,
        bases,
        rejected: c.rejected,
    })
}

/// Counts members of dimension at most `bound` violating the property.
fn violations(
    family: &Family,
    bound: usize,
    pick: fn(&crate::substructures::PropertyVerdicts) -> bool,
) -> Result<(usize, Vec<String>)> {
    let checked: Vec<(String, bool)> = family
        .members
        .par_iter()
        .filter(|m| m.subject.dim() <= bound)
        .map(|m| Ok((m.subject.id.clone(), pick(&property_verdicts(&m.subject.algebra)?))))
        .collect::<Result<_>>()?;
    let bad = checked.iter().filter(|(_, ok)| !ok).map(|(id, _)| id.clone()).collect();
    Ok((checked.len(), bad))
}

fn violation_claim(id: &str, bound: usize, (checked, bad): (usize, Vec<String>)) -> Claim {
    let c = Claim::new(
        id,
        bad.is_empty() && checked > 0,
        format!("{checked} members of dim <= {bound} checked, {} violations", bad.len()),
    );
    match bad.first() {
        Some(w) => c.with_witness(w.clone()),
        None => c,
    }
}

pub(crate) fn sweep(bench: &Workbench) -> SuiteResult {
    SuiteResult::run(FAMILY_SUITE, || {
        let family = bench.family()?;
        let histogram = family
            .histogram()
            .iter()
            .map(|(d, n)| format!("{d}:{n}"))
            .collect::<Vec<_>>()
            .join(" ");
        let p1 = violations(family, 11, |v| v.p1.holds)?;
        let p2 = violations(family, 16, |v| v.p2.holds)?;
        let dim12 = property_verdicts(&bench.corpus_subject("dim12_sharp")?.algebra)?;
        let soc20 = property_verdicts(&bench.corpus_subject("soc20_trivext")?.algebra)?;
        let dual_t = family
            .members
            .iter()
            .find(|m| m.subject.id == "T[gf3:2]")
            .map(|m| (m.subject.dim(), m.subject.algebra.is_commutative()));
        let mut claims = vec![
            Claim::new(
                "family.size",
                family.len() >= 30,
                format!("{} members; dimensions {histogram}", family.len()),
            ),
            Claim::new(
                "family.verified",
                family.rejected.is_empty(),
                if family.rejected.is_empty() {
                    "every candidate is symmetric and local".to_string()
                } else {
                    family.rejected.join("; ")
                },
            ),
            Claim::equal("family.contains_trivext_dual_numbers", Some((4, true)), dual_t),
        ];
        let p1_clean = p1.1.is_empty();
        let p2_clean = p2.1.is_empty();
        claims.push(violation_claim("family.p1_dim_le_11", 11, p1));
        claims.push(violation_claim("family.p2_dim_le_16", 16, p2));
        claims.push(Claim::new(
            "family.sharpness_p1",
            p1_clean && !dim12.p1.holds,
            format!("dim12_sharp p1 = {}", dim12.p1.holds),
        ));
        claims.push(Claim::new(
            "family.sharpness_p2",
            p2_clean && !soc20.p2.holds,
            format!("soc20_trivext p2 = {}", soc20.p2.holds),
        ));
        Ok(claims)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_tuples_up_to_four() {
        assert_eq!(bound_tuples(4), vec![vec![], vec![2], vec![3], vec![4], vec![2, 2]]);
    }

    #[test]
    fn rejects_oversized_bound() {
        assert!(matches!(
            generate_with_corpus(25, &[]),
            Err(Error::DimensionBound { requested: 25, .. })
        ));
    }

    #[test]
    fn small_family_members_are_verified() {
        let fam = generate_with_corpus(8, &[]).unwrap();
        assert!(fam.rejected.is_empty(), "{:?}", fam.rejected);
        assert!(fam.members.iter().all(|m| m.subject.dim() <= 8));
        let ids: Vec<&str> = fam.members.iter().map(|m| m.subject.id.as_str()).collect();
        assert!(ids.contains(&"T[gf2:1]"));
        assert!(ids.contains(&"T[gf3:2x2:q-1]"));
        assert_eq!(fam.histogram().values().sum::<usize>(), fam.len());
    }
}
