//! Instance checks of the structural identities, one suite per lemma id.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::constructions::{embed_base, embed_dual, quotient, tensor, tensor_subspace, trivext_criteria};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{is_zero_vec, Subspace};
use crate::substructures::{
    is_basic, j_of_center, jacobson_radical, property_verdicts, radical, reynolds, soc_of_center, socle,
};
use crate::symform::{check_nustar_basics, check_nustar_relations};

use super::family::FamilyPart;
use super::{Claim, Scope, Subject, SuiteResult, Workbench, SEED};

pub const LEMMA_IDS: [&str; 24] = [
    "commutatorsmallestideal",
    "condsocleprod",
    "raidealnecessary",
    "socinj",
    "soctensor",
    "idealtensor",
    "jacobsontensorproduct",
    "propertiesperp",
    "reynoldsbasic",
    "idealsymmetricalternative",
    "remark_ka",
    "quotientalgebrasymmetric",
    "propnustar",
    "nustar_relations",
    "prop_quotientalgebra",
    "aicommutative_instance",
    "subspacest",
    "soctaideal",
    "remark_after_soctaideal",
    "propertiessymmetriclocal",
    "chlz",
    "centerdim3greater",
    "kultheob",
    "dim9_trivext_lemma",
];

/// Random subspaces drawn per symmetric algebra for the orthogonality identities.
pub const PERP_SAMPLES: usize = 50;

/// Largest base dimension whose trivial extension is examined.
const MAX_BASE_DIM: usize = 14;

/// Largest tensor product dimension examined.
const MAX_TENSOR_DIM: usize = 16;

pub fn check_lemma(lemma_id: &str, scope: Scope) -> Result<SuiteResult> {
    run_lemma(&Workbench::new(), lemma_id, scope)
}

pub(crate) fn run_lemma(bench: &Workbench, lemma_id: &str, scope: Scope) -> Result<SuiteResult> {
    let Some(&id) = LEMMA_IDS.iter().find(|&&l| l == lemma_id) else {
        return Err(Error::UnknownLemma(lemma_id.to_string()));
    };
    Ok(SuiteResult::run(format!("lemma.{id}"), || dispatch(bench, id, scope)))
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn holds(name: &str, pass: bool) -> Check {
    check(name, pass, "")
}

type SubjectCheck = fn(&Subject) -> Result<Vec<Check>>;
type PairCheck = fn(&Subject, &Subject, &Algebra) -> Result<Vec<Check>>;

#[derive(Clone, Copy)]
enum Pool {
    /// Corpus subjects, or family members.
    Members,
    /// Corpus subjects of small dimension, or the family's bases.
    Bases,
    /// Corpus subjects, or family bases and members.
    Everything,
}

struct Spec {
    pool: Pool,
    filter: fn(&Subject) -> bool,
    min_corpus: usize,
    run: SubjectCheck,
}

fn any(_: &Subject) -> bool {
    true
}

fn symmetric(s: &Subject) -> bool {
    s.is_symmetric()
}

fn local(s: &Subject) -> bool {
    s.local
}

fn symmetric_local(s: &Subject) -> bool {
    s.is_symmetric() && s.local
}

fn small_base(s: &Subject) -> bool {
    s.dim() <= MAX_BASE_DIM
}

fn small_symmetric_base(s: &Subject) -> bool {
    s.is_symmetric() && small_base(s)
}

fn local_dim9(s: &Subject) -> bool {
    s.local && s.dim() <= 9
}

fn noncommutative_symmetric(s: &Subject) -> bool {
    s.is_symmetric() && !s.algebra.is_commutative()
}

fn dispatch(bench: &Workbench, id: &str, scope: Scope) -> Result<Vec<Claim>> {
    let spec = |pool, filter, min_corpus, run| Spec {
        pool,
        filter,
        min_corpus,
        run,
    };
    let s = match id {
        "soctensor" => return over_pairs(bench, scope, id, soctensor),
        "idealtensor" => return over_pairs(bench, scope, id, idealtensor),
        "jacobsontensorproduct" => return over_pairs(bench, scope, id, jacobsontensorproduct),
        "commutatorsmallestideal" => spec(
            Pool::Members,
            any as fn(&Subject) -> bool,
            1,
            commutatorsmallestideal as SubjectCheck,
        ),
        "condsocleprod" => spec(Pool::Members, any, 1, condsocleprod),
        "raidealnecessary" => spec(Pool::Members, any, 1, raidealnecessary),
        "socinj" => spec(Pool::Members, local, 1, socinj),
        "propertiesperp" => spec(Pool::Members, symmetric, 1, propertiesperp),
        "reynoldsbasic" => spec(Pool::Members, symmetric, 1, reynoldsbasic),
        "idealsymmetricalternative" => spec(Pool::Members, symmetric, 1, idealsymmetricalternative),
        "remark_ka" => spec(Pool::Members, symmetric, 1, remark_ka),
        "quotientalgebrasymmetric" => spec(Pool::Members, symmetric, 1, quotientalgebrasymmetric),
        "propnustar" => spec(Pool::Members, symmetric, 1, propnustar),
        "nustar_relations" => spec(Pool::Members, symmetric, 1, nustar_relations),
        "prop_quotientalgebra" => spec(Pool::Members, symmetric, 1, prop_quotientalgebra),
        "aicommutative_instance" => spec(Pool::Members, symmetric_local, 1, aicommutative_instance),
        "subspacest" => spec(Pool::Bases, small_base, 5, subspacest),
        "soctaideal" => spec(Pool::Bases, small_base, 5, soctaideal),
        "remark_after_soctaideal" => spec(Pool::Bases, small_symmetric_base, 1, remark_after_soctaideal),
        "propertiessymmetriclocal" => spec(Pool::Members, symmetric_local, 1, propertiessymmetriclocal),
        "chlz" => spec(Pool::Members, local, 1, chlz),
        "centerdim3greater" => spec(Pool::Members, noncommutative_symmetric, 1, centerdim3greater),
        "kultheob" => spec(Pool::Members, symmetric_local, 1, kultheob),
        "dim9_trivext_lemma" => spec(Pool::Everything, local_dim9, 1, dim9_trivext_lemma),
        other => return Err(Error::UnknownLemma(other.to_string())),
    };
    over_subjects(bench, scope, id, &s)
}

fn run_checks(s: &Subject, f: SubjectCheck) -> Vec<Check> {
    f(s).unwrap_or_else(|e| vec![check("error", false, e.to_string())])
}

fn over_subjects(bench: &Workbench, scope: Scope, lemma: &str, spec: &Spec) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    if scope.corpus() {
        let subjects: Vec<&Subject> = bench.corpus_subjects()?.iter().filter(|s| (spec.filter)(s)).collect();
        let results: Vec<Vec<Check>> = subjects.par_iter().map(|s| run_checks(s, spec.run)).collect();
        claims.push(coverage(lemma, subjects.len(), spec.min_corpus));
        for (s, checks) in subjects.iter().zip(results) {
            claims.extend(
                checks
                    .into_iter()
                    .map(|c| Claim::new(format!("{lemma}.{}.{}", s.id, c.name), c.pass, c.detail)),
            );
        }
    }
    if scope.family() {
        let family = bench.family()?;
        let members = family.members.iter().map(|m| &m.subject);
        let pool: Vec<&Subject> = match spec.pool {
            Pool::Members => members.collect(),
            Pool::Bases => family.bases.iter().collect(),
            Pool::Everything => family.bases.iter().chain(members).collect(),
        };
        let subjects: Vec<&Subject> = pool.into_iter().filter(|s| (spec.filter)(s)).collect();
        let results: Vec<(String, Vec<Check>)> = subjects
            .par_iter()
            .map(|s| (s.id.clone(), run_checks(s, spec.run)))
            .collect();
        claims.extend(aggregate(lemma, "family", results));
    }
    Ok(claims)
}

fn coverage(lemma: &str, count: usize, min: usize) -> Claim {
    Claim::new(
        format!("{lemma}.coverage"),
        count >= min,
        format!("{count} corpus algebras (need {min})"),
    )
}

/// One claim per check name: passes when every subject passes it.
fn aggregate(lemma: &str, pool: &str, results: Vec<(String, Vec<Check>)>) -> Vec<Claim> {
    let mut names: Vec<String> = Vec::new();
    for (_, checks) in &results {
        for c in checks {
            if !names.contains(&c.name) {
                names.push(c.name.clone());
            }
        }
    }
    if names.is_empty() {
        return vec![Claim::new(format!("{lemma}.{pool}"), true, "no applicable algebras")];
    }
    names
        .iter()
        .map(|name| {
            let mut total = 0;
            let mut first_failure = None;
            for (id, checks) in &results {
                for c in checks.iter().filter(|c| &c.name == name) {
                    total += 1;
                    if !c.pass && first_failure.is_none() {
                        first_failure = Some(format!("{id}: {}", c.detail));
                    }
                }
            }
            let claim = Claim::new(
                format!("{lemma}.{pool}.{name}"),
                first_failure.is_none(),
                format!("{total} algebras"),
            );
            match first_failure {
                Some(w) => claim.with_witness(w),
                None => claim,
            }
        })
        .collect()
}

fn corpus_pairs(subjects: &[Subject]) -> Vec<(&Subject, &Subject)> {
    let mut out = Vec::new();
    for (i, a) in subjects.iter().enumerate() {
        for b in &subjects[i..] {
            if a.algebra.field() == b.algebra.field() && a.dim() * b.dim() <= MAX_TENSOR_DIM {
                out.push((a, b));
            }
        }
    }
    out
}

fn over_pairs(bench: &Workbench, scope: Scope, lemma: &str, f: PairCheck) -> Result<Vec<Claim>> {
    let run = |a: &Subject, b: &Subject| -> Vec<Check> {
        tensor(&a.algebra, &b.algebra)
            .and_then(|t| f(a, b, &t))
            .unwrap_or_else(|e| vec![check("error", false, e.to_string())])
    };
    let mut claims = Vec::new();
    if scope.corpus() {
        let pairs = corpus_pairs(bench.corpus_subjects()?);
        claims.push(Claim::new(
            format!("{lemma}.coverage"),
            pairs.len() >= 10,
            format!("{} tensor pairs (need 10)", pairs.len()),
        ));
        let results: Vec<Vec<Check>> = pairs.par_iter().map(|(a, b)| run(a, b)).collect();
        for ((a, b), checks) in pairs.iter().zip(results) {
            claims.extend(
                checks
                    .into_iter()
                    .map(|c| Claim::new(format!("{lemma}.{}⊗{}.{}", a.id, b.id, c.name), c.pass, c.detail)),
            );
        }
    }
    if scope.family() {
        let firsts: Vec<Subject> = bench
            .family()?
            .members
            .iter()
            .filter(|m| m.part == FamilyPart::TrivialExtension)
            .map(|m| m.subject.clone())
            .collect();
        let pairs = corpus_pairs(&firsts);
        let results: Vec<(String, Vec<Check>)> = pairs
            .par_iter()
            .map(|(a, b)| (format!("{}⊗{}", a.id, b.id), run(a, b)))
            .collect();
        claims.extend(aggregate(lemma, "family", results));
    }
    Ok(claims)
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn random_vector(a: &Algebra, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    (0..a.dim()).map(|_| a.field().random(rng)).collect()
}

fn random_subspace(a: &Algebra, rng: &mut ChaCha8Rng) -> Subspace {
    let k = rng.gen_range(0..=a.dim());
    a.span((0..k).map(|_| random_vector(a, rng)))
}

fn random_subspace_of(s: &Subspace, rng: &mut ChaCha8Rng) -> Subspace {
    let f = s.field();
    let k = rng.gen_range(0..=s.dim());
    Subspace::span(
        f,
        s.ambient(),
        (0..k).map(|_| {
            let coeffs: Vec<Elem> = (0..s.dim()).map(|_| f.random(rng)).collect();
            s.combine(&coeffs)
        }),
    )
}

/// Named ideals used as test inputs: proper, nonzero, verified two-sided.
fn sample_ideals(a: &Algebra) -> Result<Vec<Subspace>> {
    let j = jacobson_radical(a)?;
    let mut candidates = a.powers(&j)?;
    candidates.push(socle(a)?);
    candidates.push(a.subspace_product(&a.full_space(), a.commutator_space())?);
    candidates.push(a.subspace_product(&a.full_space(), &j_of_center(a)?)?);
    let mut out: Vec<Subspace> = Vec::new();
    for c in candidates {
        if !c.is_zero() && !c.is_full() && !out.contains(&c) && a.is_ideal(&c)? {
            out.push(c);
        }
    }
    Ok(out)
}

fn commutatorsmallestideal(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let k = a.commutator_space();
    let ak = a.subspace_product(&a.full_space(), k)?;
    let ka = a.subspace_product(k, &a.full_space())?;
    let commutative_quotient = ak.is_full() || quotient(a, &ak)?.algebra.is_commutative();
    let ideals = sample_ideals(a)?;
    let mut agree = 0;
    for i in &ideals {
        let q = quotient(a, i)?;
        if q.algebra.commutator_space() == &q.map.project_subspace(k) {
            agree += 1;
        }
    }
    Ok(vec![
        holds("ak_equals_ka", ak == ka),
        holds("ak_is_ideal_closure_of_k", ak == a.ideal_closure(k)?),
        holds("quotient_by_ak_commutative", commutative_quotient),
        check(
            "quotient_commutator_space",
            agree == ideals.len(),
            format!("{agree}/{} ideals", ideals.len()),
        ),
    ])
}

fn condsocleprod(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let f = a.field();
    let z = a.center();
    let mut agree = 0;
    for x in z.basis() {
        let az_central = z.contains(&a.left_ideal_of(x))?;
        let kills_k = a
            .commutator_space()
            .basis()
            .iter()
            .all(|k| is_zero_vec(f, &a.mul(k, x)));
        if az_central == kills_k {
            agree += 1;
        }
    }
    // Part (i) holds for every central element, so random ones are fair game.
    let mut rng = rng();
    let mut random_agree = 0;
    const RANDOM: usize = 20;
    for _ in 0..RANDOM {
        let coeffs: Vec<Elem> = (0..z.dim()).map(|_| f.random(&mut rng)).collect();
        let x = z.combine(&coeffs);
        let az_central = z.contains(&a.left_ideal_of(&x))?;
        let kills_k = a
            .commutator_space()
            .basis()
            .iter()
            .all(|k| is_zero_vec(f, &a.mul(k, &x)));
        random_agree += usize::from(az_central == kills_k);
    }
    let verdicts = property_verdicts(a);
    Ok(vec![
        check(
            "central_multiples",
            agree == z.dim(),
            format!("{agree}/{} center basis vectors", z.dim()),
        ),
        check(
            "random_central_multiples",
            random_agree == RANDOM,
            format!("{random_agree}/{RANDOM} random central elements"),
        ),
        check(
            "verdicts_agree",
            verdicts.is_ok(),
            verdicts.err().map(|e| e.to_string()).unwrap_or_default(),
        ),
    ])
}

fn raidealnecessary(s: &Subject) -> Result<Vec<Check>> {
    let v = property_verdicts(&s.algebra)?;
    Ok(vec![check(
        "p2_implies_p3",
        !v.p2.holds || v.p3.holds,
        format!("p2 = {}, p3 = {}", v.p2.holds, v.p3.holds),
    )])
}

fn socinj(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let v = property_verdicts(a)?;
    let mut out = vec![check(
        "p1_implies_p2",
        !v.p1.holds || v.p2.holds,
        format!("p1 = {}, p2 = {}", v.p1.holds, v.p2.holds),
    )];
    if a.dim() >= 2 {
        out.push(holds("soc_z_inside_j_z", j_of_center(a)?.contains(&soc_of_center(a)?)?));
    }
    Ok(out)
}

fn soctensor(a: &Subject, b: &Subject, t: &Algebra) -> Result<Vec<Check>> {
    let (x, y) = (&a.algebra, &b.algebra);
    let j = tensor_subspace(&jacobson_radical(x)?, &y.full_space())
        .sum(&tensor_subspace(&x.full_space(), &jacobson_radical(y)?))?;
    let k = tensor_subspace(x.commutator_space(), &y.full_space())
        .sum(&tensor_subspace(&x.full_space(), y.commutator_space()))?;
    Ok(vec![
        holds("radical_certificate", radical(t)?.verify(t).is_ok()),
        holds("radical", jacobson_radical(t)? == j),
        holds("center", t.center() == &tensor_subspace(x.center(), y.center())),
        holds("commutator_space", t.commutator_space() == &k),
        holds("socle", socle(t)? == tensor_subspace(&socle(x)?, &socle(y)?)),
        holds(
            "reynolds",
            reynolds(t)? == tensor_subspace(&reynolds(x)?, &reynolds(y)?),
        ),
    ])
}

/// Named subspaces of an algebra plus two seeded random ones, all nonzero.
fn test_subspaces(a: &Algebra) -> Result<Vec<Subspace>> {
    let mut rng = rng();
    let mut out = vec![
        a.full_space(),
        a.center().clone(),
        a.commutator_space().clone(),
        jacobson_radical(a)?,
        socle(a)?,
        j_of_center(a)?,
        soc_of_center(a)?,
        reynolds(a)?,
        random_subspace(a, &mut rng),
        random_subspace(a, &mut rng),
    ];
    out.retain(|u| !u.is_zero());
    out.dedup();
    Ok(out)
}

fn idealtensor(a: &Subject, b: &Subject, t: &Algebra) -> Result<Vec<Check>> {
    let us = test_subspaces(&a.algebra)?;
    let vs = test_subspaces(&b.algebra)?;
    let ideal_u: Vec<bool> = us.iter().map(|u| a.algebra.is_ideal(u)).collect::<Result<_>>()?;
    let ideal_v: Vec<bool> = vs.iter().map(|v| b.algebra.is_ideal(v)).collect::<Result<_>>()?;
    let mut agree = 0;
    for (u, iu) in us.iter().zip(&ideal_u) {
        for (v, iv) in vs.iter().zip(&ideal_v) {
            if t.is_ideal(&tensor_subspace(u, v))? == (*iu && *iv) {
                agree += 1;
            }
        }
    }
    let total = us.len() * vs.len();
    Ok(vec![check(
        "ideal_iff_both_factors",
        agree == total,
        format!("{agree}/{total} subspace pairs"),
    )])
}

fn jacobsontensorproduct(a: &Subject, b: &Subject, t: &Algebra) -> Result<Vec<Check>> {
    let v1 = property_verdicts(&a.algebra)?;
    let v2 = property_verdicts(&b.algebra)?;
    let v = property_verdicts(t)?;
    let mut out = vec![holds("p2_is_conjunction", v.p2.holds == (v1.p2.holds && v2.p2.holds))];
    // The reduction to U1 ⊗ U2 needs both Reynolds ideals nonzero; if one
    // vanishes, so does R(A1 ⊗ A2), which is then trivially an ideal.
    if reynolds(&a.algebra)?.is_zero() || reynolds(&b.algebra)?.is_zero() {
        out.push(check(
            "p3_zero_reynolds",
            reynolds(t)?.is_zero() && v.p3.holds,
            format!(
                "factor p3 = ({}, {}), product p3 = {}",
                v1.p3.holds, v2.p3.holds, v.p3.holds
            ),
        ));
    } else {
        out.push(holds("p3_is_conjunction", v.p3.holds == (v1.p3.holds && v2.p3.holds)));
    }
    Ok(out)
}

fn structure(s: &Subject) -> Result<&crate::symform::SymmetricStructure> {
    s.structure
        .as_ref()
        .ok_or_else(|| Error::Internal(format!("{} has no symmetrizing form", s.id)))
}

fn propertiesperp(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let st = structure(s)?;
    let n = a.dim();
    let j = jacobson_radical(a)?;
    let mut rng = rng();
    let mut counts = [0usize; 5];
    for round in 0..PERP_SAMPLES {
        let x = random_subspace(a, &mut rng);
        let y = random_subspace(a, &mut rng);
        let inner = random_subspace_of(&x, &mut rng);
        let xp = st.perp(&x);
        let yp = st.perp(&y);
        counts[0] += usize::from(x.dim() + xp.dim() == n);
        counts[1] += usize::from(st.perp(&xp) == x);
        counts[2] += usize::from(st.perp(&inner).contains(&xp)?);
        let meet = st.perp(&x.intersect(&y)?) == xp.sum(&yp)?;
        let join = st.perp(&x.sum(&y)?) == xp.intersect(&yp)?;
        counts[3] += usize::from(meet && join);
        let generator = if round % 2 == 0 {
            j.combine(&(0..j.dim()).map(|_| a.field().random(&mut rng)).collect::<Vec<_>>())
        } else {
            random_vector(a, &mut rng)
        };
        let ideal = a.ideal_generated_by(&[generator])?;
        let ip = st.perp(&ideal);
        counts[4] +=
            usize::from(ip == a.left_annihilator(&ideal)? && ip == a.right_annihilator(&ideal)? && a.is_ideal(&ip)?);
    }
    let named = [
        "dimension",
        "double_perp",
        "inclusion_reversing",
        "sum_intersection",
        "ideal_perp_is_annihilator",
    ];
    let mut out: Vec<Check> = named
        .iter()
        .zip(counts)
        .map(|(name, c)| check(*name, c == PERP_SAMPLES, format!("{c}/{PERP_SAMPLES} samples")))
        .collect();
    out.push(holds("radical_is_socle_perp", st.perp(&socle(a)?) == j));
    out.push(holds(
        "commutator_perp_is_center",
        &st.perp(a.commutator_space()) == a.center(),
    ));
    Ok(out)
}

fn reynoldsbasic(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let p3 = property_verdicts(a)?.p3.holds;
    let basic = is_basic(a)?;
    let mut out = vec![check(
        "p3_iff_basic",
        p3 == basic,
        format!("p3 = {p3}, basic = {basic}"),
    )];
    if basic {
        out.push(holds("reynolds_is_socle", reynolds(a)? == socle(a)?));
    }
    Ok(out)
}

/// Whether `K(A/I)` is an ideal of `A/I` (vacuously for `I = A`).
fn quotient_commutators_ideal(a: &Algebra, ideal: &Subspace) -> Result<bool> {
    if ideal.is_full() {
        return Ok(true);
    }
    let q = quotient(a, ideal)?;
    q.algebra.is_ideal(q.algebra.commutator_space())
}

fn idealsymmetricalternative(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let v = property_verdicts(a)?;
    let by_socle = quotient_commutators_ideal(a, &socle(a)?)?;
    let ajz = a.subspace_product(&a.full_space(), &j_of_center(a)?)?;
    let by_ajz = quotient_commutators_ideal(a, &ajz)?;
    Ok(vec![
        check(
            "p1_via_socle_quotient",
            v.p1.holds == by_socle,
            format!("p1 = {}", v.p1.holds),
        ),
        check(
            "p2_via_a_jz_quotient",
            v.p2.holds == by_ajz,
            format!("p2 = {}", v.p2.holds),
        ),
    ])
}

fn remark_ka(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    Ok(vec![holds(
        "k_ideal_iff_commutative",
        a.is_ideal(a.commutator_space())? == a.is_commutative(),
    )])
}

fn quotientalgebrasymmetric(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let samples = s.quotient_samples()?;
    let sized = samples
        .iter()
        .filter(|q| q.witness.quotient.dim() == a.left_ideal_of(&q.witness.z).dim())
        .count();
    // Every central element, not only those in J(Z), yields a symmetric quotient.
    let st = structure(s)?;
    let mut central = 0;
    for z in a.center().basis() {
        if crate::symform::symmetric_quotient(a, st, z).is_ok() {
            central += 1;
        }
    }
    Ok(vec![
        check(
            "quotient_dim_is_dim_az",
            sized == samples.len(),
            format!("{sized}/{} quotients", samples.len()),
        ),
        check(
            "center_basis_quotients_symmetric",
            central == a.center().dim(),
            format!("{central}/{} center basis vectors", a.center().dim()),
        ),
    ])
}

fn identity_tally<F>(s: &Subject, mut checks: F) -> Result<Vec<Check>>
where
    F: FnMut(&super::QuotientSample) -> Result<Vec<crate::symform::IdentityCheck>>,
{
    let samples = s.quotient_samples()?;
    let mut names: Vec<&'static str> = Vec::new();
    let mut passes: Vec<usize> = Vec::new();
    for q in samples {
        for c in checks(q)? {
            let idx = match names.iter().position(|n| *n == c.name) {
                Some(i) => i,
                None => {
                    names.push(c.name);
                    passes.push(0);
                    names.len() - 1
                }
            };
            passes[idx] += usize::from(c.holds);
        }
    }
    Ok(names
        .iter()
        .zip(passes)
        .map(|(n, p)| check(*n, p == samples.len(), format!("{p}/{} quotients", samples.len())))
        .collect())
}

fn propnustar(s: &Subject) -> Result<Vec<Check>> {
    let st = structure(s)?;
    identity_tally(s, |q| Ok(check_nustar_basics(&s.algebra, st, &q.witness)))
}

fn nustar_relations(s: &Subject) -> Result<Vec<Check>> {
    let st = structure(s)?;
    identity_tally(s, |q| check_nustar_relations(&s.algebra, st, &q.witness))
}

fn prop_quotientalgebra(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let v = property_verdicts(a)?;
    let jz = j_of_center(a)?;
    let samples = s.quotient_samples()?;
    let mut p1_ok = 0;
    let mut p2_ok = 0;
    for q in samples {
        let qa = &q.witness.quotient;
        let vq = property_verdicts(qa)?;
        if !v.p1.holds || vq.p1.holds {
            p1_ok += 1;
        }
        let image = q.witness.map.project_subspace(&jz);
        let ann = qa.center().intersect(&qa.left_annihilator(&image)?)?;
        if !v.p2.holds || (vq.p2.holds && qa.is_ideal(&ann)?) {
            p2_ok += 1;
        }
    }
    let n = samples.len();
    Ok(vec![
        check(
            "p1_inherited",
            p1_ok == n,
            format!("p1 = {}, {p1_ok}/{n} quotients", v.p1.holds),
        ),
        check(
            "p2_inherited",
            p2_ok == n,
            format!("p2 = {}, {p2_ok}/{n} quotients", v.p2.holds),
        ),
    ])
}

fn aicommutative_instance(s: &Subject) -> Result<Vec<Check>> {
    let p1 = property_verdicts(&s.algebra)?.p1.holds;
    let samples = s.quotient_samples()?;
    let basis_commutative = samples
        .iter()
        .filter(|q| q.from_basis)
        .all(|q| q.witness.quotient.is_commutative());
    let all_commutative = samples.iter().all(|q| q.witness.quotient.is_commutative());
    Ok(vec![
        check(
            "p1_iff_basis_quotients_commutative",
            p1 == basis_commutative,
            format!("p1 = {p1}"),
        ),
        holds("p1_implies_sampled_quotients_commutative", !p1 || all_commutative),
    ])
}

/// `U ⊕ W` inside the trivial extension, with `W` in dual coordinates.
fn direct_sum(a: &Algebra, t: &Algebra, base: &Subspace, dual: &Subspace) -> Subspace {
    let f = a.field();
    t.span(
        base.basis()
            .iter()
            .map(|u| embed_base(f, u))
            .chain(dual.basis().iter().map(|w| embed_dual(f, w))),
    )
}

fn subspacest(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let t = s.trivial_extension()?;
    let zero = a.zero_space();
    let full = a.full_space();
    let k = a.commutator_space();
    let j = jacobson_radical(a)?;
    let crit = trivext_criteria(a)?;
    let ds = |u: &Subspace, w: &Subspace| direct_sum(a, t, u, w);
    Ok(vec![
        holds("center", t.center() == &ds(a.center(), &k.annihilator())),
        holds(
            "commutator_space",
            t.commutator_space() == &ds(k, &a.center().annihilator()),
        ),
        holds("radical", jacobson_radical(t)? == ds(&j, &full)),
        holds(
            "radical_of_center",
            j_of_center(t)? == ds(&j_of_center(a)?, &k.annihilator()),
        ),
        holds("socle", socle(t)? == ds(&zero, &j.annihilator())),
        holds(
            "socle_of_center",
            soc_of_center(t)? == ds(&crit.s, &crit.i.annihilator()),
        ),
        holds("reynolds", reynolds(t)? == ds(&zero, &k.sum(&j)?.annihilator())),
    ])
}

fn soctaideal(s: &Subject) -> Result<Vec<Check>> {
    let crit = trivext_criteria(&s.algebra)?;
    let v = property_verdicts(s.trivial_extension()?)?;
    Ok(vec![
        check(
            "p1_prediction",
            crit.predicted_p1 == v.p1.holds,
            format!("predicted {}, direct {}", crit.predicted_p1, v.p1.holds),
        ),
        check(
            "p2_prediction",
            crit.predicted_p2 == v.p2.holds,
            format!("predicted {}, direct {}", crit.predicted_p2, v.p2.holds),
        ),
    ])
}

fn remark_after_soctaideal(s: &Subject) -> Result<Vec<Check>> {
    let p1 = property_verdicts(s.trivial_extension()?)?.p1.holds;
    let commutative = s.algebra.is_commutative();
    Ok(vec![check(
        "trivext_p1_iff_commutative",
        p1 == commutative,
        format!("p1(T) = {p1}, commutative = {commutative}"),
    )])
}

fn propertiessymmetriclocal(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let soc = socle(a)?;
    let z = a.center();
    let jz = j_of_center(a)?;
    let powers = a.powers(&jacobson_radical(a)?)?;
    // powers = [A, J, ..., J^ell = 0]
    let ell = powers.len() - 1;
    Ok(vec![
        check("socle_dim_one", soc.dim() == 1, format!("dim soc = {}", soc.dim())),
        holds("socle_inside_soc_z", soc_of_center(a)?.contains(&soc)?),
        holds(
            "commutators_meet_socle_trivially",
            a.commutator_space().intersect(&soc)?.is_zero(),
        ),
        holds("center_local", jz.dim() + 1 == z.dim()),
        holds("top_power_is_socle", ell >= 1 && powers[ell - 1] == soc),
    ])
}

fn chlz(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let powers = a.powers(&jacobson_radical(a)?)?;
    let z = a.center();
    let mut layers = 0;
    let mut ok = 0;
    let mut sym_ok = 0;
    for i in 1..powers.len() - 1 {
        if powers[i].dim() - powers[i + 1].dim() != 1 {
            continue;
        }
        layers += 1;
        ok += usize::from(z.contains(&powers[i])?);
        sym_ok += usize::from(z.contains(&powers[i - 1])?);
    }
    let mut out = vec![check(
        "one_dim_layer_central",
        ok == layers,
        format!("{ok}/{layers} one-dimensional layers"),
    )];
    if s.is_symmetric() {
        out.push(check(
            "previous_power_central",
            sym_ok == layers,
            format!("{sym_ok}/{layers} one-dimensional layers"),
        ));
    }
    Ok(out)
}

fn centerdim3greater(s: &Subject) -> Result<Vec<Check>> {
    let (n, z) = (s.dim(), s.algebra.center().dim());
    Ok(vec![check(
        "dim_at_least_center_plus_3",
        n >= z + 3,
        format!("dim A = {n}, dim Z = {z}"),
    )])
}

fn kultheob(s: &Subject) -> Result<Vec<Check>> {
    let a = &s.algebra;
    let z = a.center().dim();
    let commutative = a.is_commutative();
    let layers = a.loewy_series(&jacobson_radical(a)?)?.layers;
    let detail = format!("dim Z = {z}, dim A = {}, layers {layers:?}", a.dim());
    let pass = match z {
        0..=4 => commutative,
        5 => (a.dim() == 5 && commutative) || (a.dim() == 8 && (layers == [1, 3, 3, 1] || layers == [1, 2, 2, 2, 1])),
        _ => true,
    };
    Ok(vec![check("small_center_constraints", pass, detail)])
}

fn dim9_trivext_lemma(s: &Subject) -> Result<Vec<Check>> {
    let crit = trivext_criteria(&s.algebra)?;
    let v = property_verdicts(s.trivial_extension()?)?;
    Ok(vec![
        holds("k_plus_a_jz_ideal", crit.i_is_ideal),
        holds("s_ideal", crit.s_is_ideal),
        holds("trivext_p2", v.p2.holds),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_lemma_is_rejected() {
        assert!(matches!(
            check_lemma("nosuchlemma", Scope::Corpus),
            Err(Error::UnknownLemma(_))
        ));
    }

    #[test]
    fn ids_are_unique() {
        let mut ids = LEMMA_IDS.to_vec();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), LEMMA_IDS.len());
    }

    #[test]
    fn aggregate_reports_first_failure() {
        let results = vec![
            ("a".to_string(), vec![holds("x", true)]),
            ("b".to_string(), vec![check("x", false, "bad")]),
        ];
        let claims = aggregate("l", "family", results);
        assert_eq!(claims.len(), 1);
        assert!(!claims[0].pass);
        assert_eq!(claims[0].witness.as_deref(), Some("b: bad"));
    }
}
