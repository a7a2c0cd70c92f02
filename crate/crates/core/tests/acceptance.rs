use biset_core::acceptance::run_acceptance;

#[test]
fn acceptance_criteria() {
    let report = run_acceptance(1);
    for c in &report.criteria {
        println!(
            "criterion {}: {} - {} ({:.2}s)\n    {}",
            c.id,
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.elapsed.as_secs_f64(),
            c.detail
        );
    }
    let failed: Vec<u32> = report.criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
