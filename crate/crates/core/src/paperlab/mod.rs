//! Curated example algebras, instance checks of structural identities, and
//! the symmetric local family sweep.

pub mod corpus;
pub mod family;
pub mod lemmas;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::symform::{attached_structure, symmetric_quotient, QuotientWitness, SymmetricStructure};

pub use corpus::{corpus, CorpusEntry};
pub use family::{generate_symmetric_local_family, Family};
pub use lemmas::{check_lemma, LEMMA_IDS};

/// Seed for every pseudorandom choice made by the suites.
pub const SEED: u64 = 0x5EED;

/// Largest family dimension accepted by the generator.
pub const MAX_FAMILY_DIM: usize = 24;

/// Dimension bound used by the full run's family sweep.
pub const SWEEP_DIM: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub detail: String,
}

impl Claim {
    pub fn new(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Claim {
        Claim {
            id: id.into(),
            pass,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn equal<T: PartialEq + std::fmt::Debug>(id: impl Into<String>, expected: T, actual: T) -> Claim {
        let pass = expected == actual;
        let detail = if pass {
            format!("{actual:?}")
        } else {
            format!("expected {expected:?}, got {actual:?}")
        };
        Claim::new(id, pass, detail)
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Claim {
        self.witness = Some(witness.into());
        self
    }

    fn from_error(id: impl Into<String>, e: &Error) -> Claim {
        Claim::new(id, false, format!("error: {e}"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub claims: Vec<Claim>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub(crate) fn run(suite: impl Into<String>, body: impl FnOnce() -> Result<Vec<Claim>>) -> SuiteResult {
        let suite = suite.into();
        let start = Instant::now();
        let claims = match body() {
            Ok(c) => c,
            Err(e) => vec![Claim::from_error(format!("{suite}.error"), &e)],
        };
        SuiteResult {
            suite,
            claims,
            elapsed: start.elapsed(),
        }
    }
}

/// Which algebras a lemma checker runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    Corpus,
    Family,
    All,
}

impl Scope {
    fn corpus(self) -> bool {
        matches!(self, Scope::Corpus | Scope::All)
    }

    fn family(self) -> bool {
        matches!(self, Scope::Family | Scope::All)
    }
}

/// A named algebra with its verified symmetric structure (if any).
#[derive(Clone, Debug)]
pub struct Subject {
    pub id: String,
    pub algebra: Algebra,
    pub structure: Option<SymmetricStructure>,
    pub local: bool,
    quotients: OnceLock<std::result::Result<Vec<QuotientSample>, Error>>,
    trivext: OnceLock<std::result::Result<Algebra, Error>>,
}

/// A symmetric quotient `A/(Az)^⊥` drawn for the quotient identities.
#[derive(Clone, Debug)]
pub struct QuotientSample {
    pub label: String,
    /// `z` is a basis vector of `J(Z(A))` rather than a random combination.
    pub from_basis: bool,
    pub witness: QuotientWitness,
}

/// Random combinations of `J(Z)` sampled per symmetric algebra.
const RANDOM_QUOTIENTS: usize = 10;

impl Subject {
    pub fn new(id: impl Into<String>, algebra: Algebra) -> Result<Subject> {
        let structure = attached_structure(&algebra)?;
        let local = crate::substructures::is_local(&algebra)?;
        Ok(Subject {
            id: id.into(),
            algebra,
            structure,
            local,
            quotients: OnceLock::new(),
            trivext: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_symmetric(&self) -> bool {
        self.structure.is_some()
    }

    /// Symmetric quotients by the basis of `J(Z)` and by seeded random
    /// combinations of it; empty for algebras without a form.
    pub fn quotient_samples(&self) -> Result<&[QuotientSample]> {
        self.quotients
            .get_or_init(|| self.draw_quotients())
            .as_deref()
            .map_err(Clone::clone)
    }

    fn draw_quotients(&self) -> Result<Vec<QuotientSample>> {
        let Some(s) = &self.structure else {
            return Ok(Vec::new());
        };
        let a = &self.algebra;
        let jz = crate::substructures::j_of_center(a)?;
        let mut zs: Vec<(String, bool, Vec<Elem>)> = jz
            .basis()
            .iter()
            .enumerate()
            .map(|(k, z)| (format!("z{k}"), true, z.clone()))
            .collect();
        if !jz.is_zero() {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            for k in 0..RANDOM_QUOTIENTS {
                let coeffs: Vec<Elem> = (0..jz.dim()).map(|_| a.field().random(&mut rng)).collect();
                let z = jz.combine(&coeffs);
                if !crate::linalg::is_zero_vec(a.field(), &z) {
                    zs.push((format!("r{k}"), false, z));
                }
            }
        }
        zs.into_par_iter()
            .map(|(label, from_basis, z)| {
                Ok(QuotientSample {
                    label,
                    from_basis,
                    witness: symmetric_quotient(a, s, &z)?,
                })
            })
            .collect()
    }

    pub fn trivial_extension(&self) -> Result<&Algebra> {
        self.trivext
            .get_or_init(|| crate::constructions::trivial_extension(&self.algebra))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Lazily built pools of algebras shared by the suites of one run.
#[derive(Default)]
pub struct Workbench {
    corpus: OnceLock<std::result::Result<Vec<Subject>, Error>>,
    family: OnceLock<std::result::Result<Family, Error>>,
}

impl Workbench {
    pub fn new() -> Workbench {
        Workbench::default()
    }

    /// Corpus algebras followed by the small derived examples.
    pub fn corpus_subjects(&self) -> Result<&[Subject]> {
        self.corpus
            .get_or_init(corpus::all_subjects)
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn family(&self) -> Result<&Family> {
        self.family
            .get_or_init(|| family::generate_with_corpus(SWEEP_DIM, self.corpus_subjects()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn corpus_subject(&self, id: &str) -> Result<&Subject> {
        self.corpus_subjects()?
            .iter()
            .find(|s| s.id == id)
            .ok_or_else(|| Error::UnknownCase(id.to_string()))
    }
}

/// Which part of the full run to execute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    Everything,
    Case(String),
    Lemma(String),
    FamilySweep,
}

pub const FAMILY_SUITE: &str = "family";

/// Resolves a `--case` filter to a selection.
pub fn select(filter: Option<&str>) -> Result<Selection> {
    let Some(id) = filter else {
        return Ok(Selection::Everything);
    };
    if corpus().iter().any(|e| e.id == id) {
        Ok(Selection::Case(id.to_string()))
    } else if LEMMA_IDS.contains(&id) {
        Ok(Selection::Lemma(id.to_string()))
    } else if id == FAMILY_SUITE {
        Ok(Selection::FamilySweep)
    } else {
        Err(Error::UnknownCase(id.to_string()))
    }
}

pub fn run_corpus() -> Vec<SuiteResult> {
    corpus().par_iter().map(CorpusEntry::run).collect()
}

pub fn run_case(id: &str) -> Result<SuiteResult> {
    corpus()
        .into_iter()
        .find(|e| e.id == id)
        .map(|e| e.run())
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

/// Runs the selected suites; results are ordered corpus, lemmas, family.
pub fn run_paper_suite(filter: Option<&str>) -> Result<Vec<SuiteResult>> {
    let bench = Workbench::new();
    Ok(match select(filter)? {
        Selection::Case(id) => vec![run_case(&id)?],
        Selection::Lemma(id) => vec![lemmas::run_lemma(&bench, &id, Scope::All)?],
        Selection::FamilySweep => vec![family::sweep(&bench)],
        Selection::Everything => {
            let mut out = run_corpus();
            let lemma_results: Vec<SuiteResult> = LEMMA_IDS
                .par_iter()
                .map(|id| lemmas::run_lemma(&bench, id, Scope::All))
                .collect::<Result<_>>()?;
            out.extend(lemma_results);
            out.push(family::sweep(&bench));
            out
        }
    })
}
