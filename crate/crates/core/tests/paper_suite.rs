use symcenter::paperlab::run_paper_suite;

#[test]
fn full_paper_suite_passes() {
    let results = run_paper_suite(None).unwrap();
    let mut failures = Vec::new();
    for r in &results {
        eprintln!("{:>8.2?} {} ({} claims)", r.elapsed, r.suite, r.claims.len());
        for c in r.claims.iter().filter(|c| !c.pass) {
            failures.push(format!("{}: {} {:?}", c.id, c.detail, c.witness));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
