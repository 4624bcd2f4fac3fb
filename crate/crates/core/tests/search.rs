use fibindex::bounds::upper_bound;
use fibindex::search::{
    build_extremal_report_with, scan, verify_theorems_with, ReportFile, ScanOptions, Theorem, ENUMERATION_LIMIT,
    VERIFY_LIMIT,
};
use fibindex::{
    canonical_form, counterexample_size_vs_fib, fibonacci_index, lower_bound, verify_theorems, Error, GraphClass,
};

#[test]
fn every_graph_lies_between_the_bounds() {
    for n in 1..=7 {
        for e in scan(n, &ScanOptions::default()).unwrap() {
            assert!(e.fib >= lower_bound(n, e.alpha).unwrap(), "{}", e.form);
            assert!(
                e.fib <= upper_bound(GraphClass::General, n, e.alpha).unwrap(),
                "{}",
                e.form
            );
            if e.connected {
                assert!(
                    e.fib <= upper_bound(GraphClass::Connected, n, e.alpha).unwrap(),
                    "{}",
                    e.form
                );
            }
            assert_eq!(e.fib, fibonacci_index(&e.form.to_graph()));
        }
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    for n in [6, 7] {
        for class in [GraphClass::General, GraphClass::Connected] {
            let serial = build_extremal_report_with(n, class, &ScanOptions { threads: Some(1) }).unwrap();
            let wide = build_extremal_report_with(n, class, &ScanOptions { threads: Some(4) }).unwrap();
            let default = build_extremal_report_with(n, class, &ScanOptions::default()).unwrap();
            let text = serde_json::to_string(&serial).unwrap();
            assert_eq!(text, serde_json::to_string(&wide).unwrap());
            assert_eq!(text, serde_json::to_string(&default).unwrap());
        }
    }
}

#[test]
fn all_characterizations_hold_up_to_seven() {
    for n in 1..=7 {
        let v = verify_theorems(n).unwrap();
        assert!(v.all_pass(), "n = {n}: {:?}", v.verdicts);
        assert_eq!(v.verdicts.len(), 3);
    }
}

#[test]
fn report_files_round_trip() {
    let v = verify_theorems(5).unwrap();
    for class in [GraphClass::General, GraphClass::Connected] {
        let file = v.report_file(class);
        assert_eq!(file.file_name(), format!("report-{class}-n5.json"));
        let json = file.to_json();
        assert!(json.ends_with('\n'));
        let back: ReportFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.verdicts.len(), 2);
    }
    let connected = v.report_file(GraphClass::Connected);
    assert!(connected.verdicts.iter().any(|x| x.theorem == Theorem::ConnectedUpper));
}

#[test]
fn order_limits() {
    assert!(matches!(
        verify_theorems(VERIFY_LIMIT + 1),
        Err(Error::Capability { .. })
    ));
    assert!(verify_theorems_with(ENUMERATION_LIMIT + 1, &ScanOptions::default(), ENUMERATION_LIMIT).is_err());
    assert!(scan(ENUMERATION_LIMIT + 1, &ScanOptions::default()).is_err());
}

#[test]
fn counterexample_scales_with_copies() {
    let r = counterexample_size_vs_fib();
    assert!(r.all_hold());
    assert_eq!((r.sparse.n, r.sparse.alpha, r.sparse.m), (6, 4, 4));
    assert_eq!((r.dense.n, r.dense.alpha, r.dense.m), (6, 4, 5));
    let copies: Vec<usize> = r.scaled.iter().map(|s| s.copies).collect();
    assert_eq!(copies, [2, 3]);
    for s in &r.scaled {
        assert!(s.sparse.m < s.dense.m && s.sparse.fib < s.dense.fib);
        assert_eq!(s.sparse.alpha, s.dense.alpha);
    }
    let g3 = fibindex::search::two_paths();
    let g4 = fibindex::search::spider();
    assert_ne!(canonical_form(&g3).unwrap(), canonical_form(&g4).unwrap());
    assert_eq!(g4.max_degree(), 4);
}
