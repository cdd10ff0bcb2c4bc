use std::collections::HashSet;

use qtensor_core::harness::{
    Harness, HarnessConfig, Item, Status, Suite, VerificationReport, VerificationRun, OUT_OF_SCOPE,
    REGISTRY,
};

fn run() -> VerificationRun {
    Harness::new(HarnessConfig::default()).unwrap().run()
}

#[test]
fn default_run_is_complete_clean_and_reproducible() {
    let first = run();
    assert!(!first.has_failures());
    assert!(!first.has_caps());

    let registered: HashSet<&str> = REGISTRY.iter().map(|s| s.id).collect();
    let seen: HashSet<&str> = first.items().map(|i| i.id.as_str()).collect();
    for id in &seen {
        assert!(registered.contains(id), "unregistered item id {id}");
    }
    for id in &registered {
        assert!(seen.contains(id), "statement {id} has no instance");
    }
    assert!(OUT_OF_SCOPE
        .iter()
        .all(|(name, _)| !registered.contains(name)));

    // single worker must agree with the default pool
    let serial = Harness::new(HarnessConfig {
        jobs: Some(1),
        ..HarnessConfig::default()
    })
    .unwrap()
    .run();
    assert_eq!(first, serial);
    let json = serde_json::to_string(&first).unwrap();
    assert_eq!(json, serde_json::to_string(&run()).unwrap());
    assert!(!json.contains("wall_time_ms"));
    let back: VerificationRun = serde_json::from_str(&json).unwrap();
    assert_eq!(back, first);
}

#[test]
fn failed_items_are_quoted_in_text() {
    let item = Item {
        id: "splitting.beta".into(),
        groups: vec!["C3".into()],
        q: Some(1),
        status: Status::Fail,
        detail: "made up".into(),
        wall_time_ms: None,
    };
    let run = VerificationRun {
        corpus: vec!["C3".into()],
        extended_corpus: vec![],
        qs: vec![1],
        reports: vec![VerificationReport::new(Suite::Theorem, vec![item])],
    };
    assert!(run.has_failures());
    let text = run.render_text();
    assert!(text.contains("statement: \""), "{text}");
    assert!(text.contains("made up"));
}
