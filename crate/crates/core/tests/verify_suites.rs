use jortho::verify::{run_suite, Outcome, SuiteConfig, SuiteError, SUITES};

#[test]
fn suites_are_deterministic() {
    for suite in SUITES {
        let cfg = SuiteConfig::new(3, 42);
        let a = run_suite(suite, &cfg).unwrap().to_json();
        let b = run_suite(suite, &cfg).unwrap().to_json();
        assert_eq!(a, b, "{suite}");
    }
}

#[test]
fn seeds_change_instances() {
    let a = run_suite("dim3", &SuiteConfig::new(3, 1)).unwrap();
    let b = run_suite("dim3", &SuiteConfig::new(3, 2)).unwrap();
    assert_ne!(a.to_json(), b.to_json());
}

#[test]
fn every_suite_passes_a_small_campaign() {
    for suite in SUITES {
        let rep = run_suite(suite, &SuiteConfig::new(4, 5)).unwrap();
        assert!(rep.passed, "{suite}: {}", rep.to_json());
        assert!(rep.counterexamples.is_empty());
        assert_eq!(rep.instances_with(Outcome::Fail).count(), 0);
    }
}

#[test]
fn exploratory_dimensions_never_gate() {
    let mut cfg = SuiteConfig::new(2, 3).with_signatures(&[(0, 4)]);
    cfg.dims = vec![5];
    for suite in ["dim4", "duality"] {
        let rep = run_suite(suite, &cfg).unwrap();
        assert!(rep.passed);
        assert!(rep.counts.exploratory >= 2, "{suite}");
        assert!(rep.instances.iter().filter(|i| i.signature == [0, 5]).all(|i| i.outcome == Outcome::Exploratory));
    }
}

#[test]
fn configuration_errors() {
    assert!(matches!(run_suite("bogus", &SuiteConfig::new(1, 0)), Err(SuiteError::UnknownSuite(_))));
    assert!(matches!(run_suite("dim3", &SuiteConfig::new(0, 0)), Err(SuiteError::Config(_))));
    let cfg = SuiteConfig::new(1, 0).with_signatures(&[(0, 4)]);
    assert!(matches!(run_suite("dim3", &cfg), Err(SuiteError::Config(_))));
    let cfg = SuiteConfig::new(1, 0).with_signatures(&[(0, 7)]);
    assert!(matches!(run_suite("duality", &cfg), Err(SuiteError::Config(_))));
}

#[test]
fn dim3_stores_the_known_witness() {
    let rep = run_suite("dim3", &SuiteConfig::new(2, 0)).unwrap();
    let w = rep.instances.iter().find(|i| i.label.contains("witness")).unwrap();
    assert_eq!(w.outcome, Outcome::Pass);
    assert_eq!(w.results["jacobi-orthogonal"], "fails");
    assert_eq!(w.results["constant-sectional-curvature"], "fails");
}
