use alpha_spectra::canon::is_isomorphic;
use alpha_spectra::enumeration::*;
use alpha_spectra::exec::ExecMode;
use alpha_spectra::families::{bstar3, bstar5};
use alpha_spectra::graph6;
use alpha_spectra::poly::{int, rational};

/// Connected unicyclic and bicyclic graphs by order, starting at n = 3 and
/// n = 4 respectively (standard census counts).
const UNICYCLIC: [usize; 8] = [1, 2, 5, 13, 33, 89, 240, 657];
const BICYCLIC: [usize; 7] = [1, 5, 19, 67, 236, 797, 2678];

#[test]
fn generation_orders_agree_up_to_eight() {
    for c in 1..=2 {
        for n in 3..=8 {
            let grown = census(n, c, EnumOptions::default()).unwrap();
            let filtered = census_by_subsets(n, c, ExecMode::default()).unwrap();
            assert_eq!(grown.forms(), filtered.forms(), "n={n}, cyclomatic={c}");
        }
    }
}

#[test]
fn totals_match_known_counts() {
    for (i, &count) in UNICYCLIC.iter().enumerate() {
        assert_eq!(census(i + 3, 1, EnumOptions::default()).unwrap().len(), count);
    }
    for (i, &count) in BICYCLIC.iter().enumerate() {
        assert_eq!(census(i + 4, 2, EnumOptions::default()).unwrap().len(), count);
    }
}

#[test]
fn every_member_has_its_diameter_and_size() {
    for c in 1..=2 {
        for n in 5..=8 {
            let cen = census(n, c, EnumOptions::default()).unwrap();
            for d in 1..=n - 2 {
                for g in enumerate(SearchSpace::new(n, d, c).unwrap()).unwrap() {
                    assert_eq!(g.diameter(), Some(d));
                    assert_eq!(g.size(), n + c - 1);
                }
            }
            let by_d: usize = (1..n).map(|d| cen.with_diameter(d).len()).sum();
            assert_eq!(by_d, cen.len());
        }
    }
}

#[test]
fn census_is_mode_independent() {
    let seq = census(8, 2, EnumOptions { mode: ExecMode::Sequential, ..EnumOptions::default() }).unwrap();
    let par = census(8, 2, EnumOptions { mode: ExecMode::Parallel, ..EnumOptions::default() }).unwrap();
    assert_eq!(seq.forms(), par.forms());
    let space = SearchSpace::new(8, 4, 2).unwrap();
    let a = argmax_in(&seq, space, &int(0), DEFAULT_TIE_TOL, ExecMode::Sequential).unwrap();
    let b = argmax_in(&par, space, &int(0), DEFAULT_TIE_TOL, ExecMode::Parallel).unwrap();
    assert_eq!(a.maximizer_graph6, b.maximizer_graph6);
    assert_eq!(a.radius, b.radius);
}

#[test]
fn documented_spaces() {
    let r = argmax_radius(SearchSpace::new(7, 3, 1).unwrap(), &rational(1, 2), DEFAULT_TIE_TOL).unwrap();
    assert_eq!(identify(r.space, &r.maximizer), ["ustar2"]);
    let space = SearchSpace::new(8, 4, 2).unwrap();
    let r = argmax_radius(space, &int(0), DEFAULT_TIE_TOL).unwrap();
    let b3 = bstar3(8, 4).unwrap();
    let b5 = bstar5(8, 4).unwrap();
    assert!(is_isomorphic(&r.maximizer, &b3) || is_isomorphic(&r.maximizer, &b5));
}

#[test]
fn wide_tie_tolerance_escalates_without_changing_the_answer() {
    let space = SearchSpace::new(8, 5, 2).unwrap();
    let cen = census(8, 2, EnumOptions::default()).unwrap();
    for alpha in [int(0), rational(1, 2)] {
        let tight = argmax_in(&cen, space, &alpha, DEFAULT_TIE_TOL, ExecMode::default()).unwrap();
        let wide = argmax_in(&cen, space, &alpha, 0.05, ExecMode::default()).unwrap();
        assert!(!wide.near_ties.is_empty());
        assert!(wide.exact_ties.is_empty());
        assert_eq!(tight.maximizer_graph6, wide.maximizer_graph6);
        assert_eq!(tight.runner_up_gap, wide.runner_up_gap);
    }
}

#[test]
fn b3_b5_difference_pairs() {
    let (b3, b5) = (bstar3(16, 9).unwrap(), bstar5(16, 9).unwrap());
    let r = compare_pair(&b3, &b5, &int(0)).unwrap();
    assert_eq!(r.verdict, Verdict::Less);
    assert!((r.gap + 0.00353).abs() < 2e-5);
    let r = compare_pair(&b3, &b5, &rational(2, 5)).unwrap();
    assert_eq!(r.verdict, Verdict::Greater);
    assert!((r.gap - 0.00327).abs() < 2e-5);
    assert!(r.bound < 1e-9);
}

#[test]
fn snapshots_and_reports_serialize() {
    let space = SearchSpace::new(7, 3, 2).unwrap();
    let graphs = enumerate(space).unwrap();
    let back = graph6::decode_lines(&snapshot(&graphs)).unwrap();
    assert_eq!(back, graphs);

    let report = argmax_radius(space, &rational(1, 4), DEFAULT_TIE_TOL).unwrap();
    let json: serde_json::Value = serde_json::to_value(&report).unwrap();
    assert_eq!(json["alpha"], "0.25");
    assert_eq!(json["census"], graphs.len());
    assert_eq!(json["space"]["n"], 7);
    assert_eq!(graph6::decode(json["maximizer_graph6"].as_str().unwrap()).unwrap(), report.maximizer);
}

#[test]
fn caps_are_enforced() {
    assert!(matches!(enumerate(SearchSpace::new(12, 5, 2).unwrap()), Err(alpha_spectra::Error::CapExceeded { n: 12, cap: 11 })));
    assert!(census_by_subsets(10, 1, ExecMode::default()).is_err());
}
