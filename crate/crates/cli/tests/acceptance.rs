//! One line per acceptance criterion; all comparisons are exact.

use std::process::Command;
use std::time::{Duration, Instant};

use symcenter::algebra::Algebra;
use symcenter::constructions::trivext_criteria;
use symcenter::error::Result;
use symcenter::expr::parse_elements;
use symcenter::linalg::{is_zero_vec, unit_vec, Subspace};
use symcenter::paperlab::corpus::{
    counterexample_a, counterexample_b, counterexample_b_as_quotient, dim12_sharp, firstexample_i, mat2_dual_numbers,
    matn, soc20_base, soc20_trivext, truncated,
};
use symcenter::paperlab::{run_case, run_paper_suite, SuiteResult};
use symcenter::substructures::{j_of_center, jacobson_radical, property_verdicts, soc_of_center, socle};
use symcenter::symform::verify_symmetric;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { failures: Vec::new() }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn within(&mut self, elapsed: Duration, budget: Duration) {
        self.check(&format!("runtime {elapsed:?} under {budget:?}"), elapsed < budget);
    }
}

fn report(criterion: u32, title: &str, body: impl FnOnce(&mut Outcome) -> Result<()>) -> bool {
    let mut out = Outcome::new();
    if let Err(e) = body(&mut out) {
        out.failures.push(format!("error: {e}"));
    }
    if out.failures.is_empty() {
        println!("PASS criterion {criterion}: {title}");
        true
    } else {
        println!("FAIL criterion {criterion}: {title}: {}", out.failures.join("; "));
        false
    }
}

fn span(a: &Algebra, exprs: &[&str]) -> Result<Subspace> {
    Ok(a.span(parse_elements(a, exprs)?))
}

fn all_pass(results: &[SuiteResult]) -> Vec<String> {
    results
        .iter()
        .flat_map(|r| &r.claims)
        .filter(|c| !c.pass)
        .map(|c| format!("{} ({})", c.id, c.detail))
        .collect()
}

fn corpus_case(out: &mut Outcome, id: &str) -> Result<()> {
    for failed in all_pass(&[run_case(id)?]) {
        out.check(&failed, false);
    }
    Ok(())
}

fn criterion_1(out: &mut Outcome) -> Result<()> {
    let start = Instant::now();
    let a = firstexample_i()?;
    let v = property_verdicts(&a)?;
    let witness = v.p1.witness.as_ref().map(|w| a.format_vector(&w.u));
    out.check("p1 false", !v.p1.holds);
    out.check("p1 witness x1^2", witness.as_deref() == Some("x1^2"));
    let x1sq = parse_elements(&a, &["x1^2", "x1^2x2"])?;
    let jz = j_of_center(&a)?;
    out.check("x1^2 in J(Z), x1^2x2 not", jz.member(&x1sq[0]) && !jz.member(&x1sq[1]));
    let expected = span(&a, &["x1x2^2x3^2", "x1^2x2x3^2", "x1^2x2^2x3", "x1^2x2^2x3^2"])?;
    out.check("soc(Z) basis", soc_of_center(&a)? == expected);
    out.check("p2 and p3 true", v.p2.holds && v.p3.holds);
    out.within(start.elapsed(), Duration::from_secs(2));
    corpus_case(out, "firstexample_i")
}

fn criterion_2(out: &mut Outcome) -> Result<()> {
    let start = Instant::now();
    let a = counterexample_a()?;
    out.check(
        "Z(A) = span{1, x1^4x2^4x3}",
        a.center() == &span(&a, &["1", "x1^4x2^4x3"])?,
    );
    let va = property_verdicts(&a)?;
    out.check("p1(A) and p2(A)", va.p1.holds && va.p2.holds);
    let b = counterexample_b()?;
    out.check("dim B = 8", b.dim() == 8);
    let jz = j_of_center(&b)?;
    out.check("dim J(Z(B)) = 2", jz.dim() == 2);
    out.check(
        "dim B·J(Z(B)) = 4",
        b.subspace_product(&b.full_space(), &jz)?.dim() == 4,
    );
    out.check("p1(B) false", !property_verdicts(&b)?.p1.holds);
    let q = counterexample_b_as_quotient(&a)?;
    out.check("B is the quotient of A", q.algebra.same_table(&b));
    out.within(start.elapsed(), Duration::from_secs(5));
    corpus_case(out, "counterexample_A")?;
    corpus_case(out, "counterexample_B")
}

fn criterion_3(out: &mut Outcome) -> Result<()> {
    let m = mat2_dual_numbers()?;
    let (left, right) = (matn()?, truncated(m.field(), 2)?);
    let v = property_verdicts(&m)?;
    out.check("dim J(Z(M)) = 1", j_of_center(&m)?.dim() == 1);
    out.check("p1(M) false", !v.p1.holds);
    let (vl, vr) = (property_verdicts(&left)?, property_verdicts(&right)?);
    out.check("factors satisfy p1", vl.p1.holds && vr.p1.holds);
    out.check("p2 is the conjunction", v.p2.holds == (vl.p2.holds && vr.p2.holds));
    out.check("p3 is the conjunction", v.p3.holds == (vl.p3.holds && vr.p3.holds));
    corpus_case(out, "mat2_dual_numbers")
}

fn criterion_4(out: &mut Outcome) -> Result<()> {
    let a = dim12_sharp()?;
    let zero = |e: &str| -> Result<bool> { Ok(is_zero_vec(a.field(), &parse_elements(&a, &[e])?[0])) };
    out.check("M^7 = 0", zero("M^7")?);
    out.check("M^5N = 0", zero("M^5N")?);
    out.check("NM + MN = 0", zero("NM + MN")?);
    out.check("N^2 - M^2 = 0", zero("N^2 - M^2")?);
    let words = [
        "1", "M", "N", "M^2", "MN", "M^3", "M^2N", "M^4", "M^3N", "M^5", "M^4N", "M^6",
    ];
    out.check("closure dim 12", a.dim() == 12);
    out.check("word basis", a.labels().is_some_and(|l| l == words));
    out.check("soc = span{M^6}", socle(&a)? == span(&a, &["M^6"])?);
    out.check(
        "K basis",
        a.commutator_space() == &span(&a, &["MN", "M^2N", "M^3N", "M^4N", "M^3", "M^5"])?,
    );
    out.check(
        "Z basis",
        a.center() == &span(&a, &["1", "M^2", "M^4", "M^5", "M^4N", "M^6"])?,
    );
    out.check(
        "lambda(M^6) = 1 is symmetrizing",
        verify_symmetric(&a, &unit_vec(a.field(), 12, 11)).is_ok(),
    );
    out.check("p1 false", !property_verdicts(&a)?.p1.holds);
    corpus_case(out, "dim12_sharp")
}

fn criterion_5(out: &mut Outcome) -> Result<()> {
    let start = Instant::now();
    let a = soc20_base()?;
    let rel = parse_elements(&a, &["NM", "M^2 + MN + M^3 + M^2N", "M^4N", "M^5"])?;
    out.check("NM = M^2 + MN + M^3 + M^2N", rel[0] == rel[1]);
    out.check("M^4N = M^5", rel[2] == rel[3]);
    out.check("dim 10", a.dim() == 10);
    let layers = a.loewy_series(&jacobson_radical(&a)?)?.layers;
    out.check("loewy layers 1,2,2,2,2,1", layers == [1, 2, 2, 2, 2, 1]);
    let jz = j_of_center(&a)?;
    out.check("J(Z) = span{M^4, M^5}", jz == span(&a, &["M^4", "M^5"])?);
    out.check("J(Z) inside K", a.commutator_space().contains(&jz)?);
    out.check("K not an ideal", !a.is_ideal(a.commutator_space())?);
    out.check("p2(T) predicted false", !trivext_criteria(&a)?.predicted_p2);
    let t = soc20_trivext()?;
    out.check("dim T = 20", t.dim() == 20);
    out.check("soc(Z(T)) not an ideal", !t.is_ideal(&soc_of_center(&t)?)?);
    out.within(start.elapsed(), Duration::from_secs(5));
    corpus_case(out, "soc20_base")?;
    corpus_case(out, "soc20_trivext")
}

const REQUIRED_LEMMAS: [&str; 18] = [
    "propertiesperp",
    "condsocleprod",
    "subspacest",
    "soctaideal",
    "soctensor",
    "idealtensor",
    "jacobsontensorproduct",
    "propnustar",
    "nustar_relations",
    "prop_quotientalgebra",
    "socinj",
    "reynoldsbasic",
    "propertiessymmetriclocal",
    "chlz",
    "centerdim3greater",
    "kultheob",
    "raidealnecessary",
    "remark_after_soctaideal",
];

fn criterion_6(out: &mut Outcome, suite: &[SuiteResult]) -> Result<()> {
    for id in REQUIRED_LEMMAS {
        let name = format!("lemma.{id}");
        match suite.iter().find(|r| r.suite == name) {
            None => out.check(&format!("{name} ran"), false),
            Some(r) => {
                for failed in all_pass(std::slice::from_ref(r)) {
                    out.check(&failed, false);
                }
                out.check(&format!("{name} has claims"), !r.claims.is_empty());
            }
        }
    }
    let coverage = |id: &str| {
        suite
            .iter()
            .flat_map(|r| &r.claims)
            .any(|c| c.id == format!("{id}.coverage") && c.pass)
    };
    for id in [
        "propertiesperp",
        "subspacest",
        "soctensor",
        "idealtensor",
        "jacobsontensorproduct",
    ] {
        out.check(&format!("{id} coverage"), coverage(id));
    }
    Ok(())
}

fn criterion_7(out: &mut Outcome, suite: &[SuiteResult]) -> Result<()> {
    let family = suite.iter().find(|r| r.suite == "family");
    out.check("family sweep ran", family.is_some());
    for r in suite
        .iter()
        .filter(|r| r.suite == "family" || r.suite == "lemma.dim9_trivext_lemma")
    {
        for failed in all_pass(std::slice::from_ref(r)) {
            out.check(&failed, false);
        }
    }
    let passed = |id: &str| family.is_some_and(|r| r.claims.iter().any(|c| c.id == id && c.pass));
    for id in [
        "family.size",
        "family.verified",
        "family.p1_dim_le_11",
        "family.p2_dim_le_16",
    ] {
        out.check(id, passed(id));
    }
    let dim9 = suite
        .iter()
        .flat_map(|r| &r.claims)
        .any(|c| c.id.starts_with("dim9_trivext_lemma.family.") && c.pass);
    out.check("dim-9 lemma over the family", dim9);
    Ok(())
}

fn criterion_8(out: &mut Outcome) -> Result<()> {
    let run = || {
        let start = Instant::now();
        let o = Command::new(env!("CARGO_BIN_EXE_symcenter"))
            .args(["paper-suite", "--format", "machine"])
            .output()
            .expect("binary runs");
        (o, start.elapsed())
    };
    let (first, elapsed) = run();
    out.check("exit code 0", first.status.code() == Some(0));
    out.within(elapsed, Duration::from_secs(60));
    let (second, _) = run();
    out.check(
        "identical machine reports",
        first.stdout == second.stdout && !first.stdout.is_empty(),
    );
    Ok(())
}

#[test]
fn acceptance() {
    let suite = run_paper_suite(None).expect("paper suite runs");
    let results = [
        report(1, "first example: p1 witness and soc(Z)", criterion_1),
        report(2, "skew counterexample over GF(25) and its quotient", criterion_2),
        report(3, "Mat2 over dual numbers breaks tensor heredity of p1", criterion_3),
        report(4, "dimension-12 sharpness example", criterion_4),
        report(
            5,
            "dimension-10 base and its dimension-20 trivial extension",
            criterion_5,
        ),
        report(6, "identity suites", |o| criterion_6(o, &suite)),
        report(7, "symmetric local family sweep", |o| criterion_7(o, &suite)),
        report(8, "paper-suite runtime, exit code and determinism", criterion_8),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
