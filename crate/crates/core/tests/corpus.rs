use symcenter::paperlab::{corpus, run_corpus, run_paper_suite, Workbench};
use symcenter::substructures::{property_verdicts, radical};

#[test]
fn corpus_runs_are_reproducible() {
    let first = run_corpus();
    let second = run_corpus();
    let claims = |runs: &[symcenter::paperlab::SuiteResult]| -> Vec<_> {
        runs.iter().map(|r| (r.suite.clone(), r.claims.clone())).collect()
    };
    assert_eq!(claims(&first), claims(&second));
    assert!(first.iter().all(|r| r.passed()));
}

#[test]
fn every_subject_has_a_verified_radical() {
    let bench = Workbench::new();
    for s in bench.corpus_subjects().unwrap() {
        let cert = radical(&s.algebra).unwrap();
        cert.verify(&s.algebra).unwrap_or_else(|e| panic!("{}: {e}", s.id));
        assert!(s.algebra.center().member(s.algebra.one()), "{}", s.id);
        let v = property_verdicts(&s.algebra).unwrap();
        assert!(!v.p2.holds || v.p3.holds, "{}: p2 without p3", s.id);
    }
}

#[test]
fn case_filter_selects_one_entry() {
    let runs = run_paper_suite(Some("dim12_sharp")).unwrap();
    assert_eq!(runs.len(), 1);
    assert!(runs[0].claims.iter().all(|c| c.id.starts_with("dim12_sharp.")));
    assert!(run_paper_suite(Some("nonexistent")).is_err());
    assert_eq!(corpus().len(), 8);
}
