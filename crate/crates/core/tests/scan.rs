use hookbias_core::scan::{
    scan_bias, scan_congruence, scan_identities, BiasPair, Source, CONJECTURED_N_T,
};

#[test]
fn genfun_bias_scan_to_2000() {
    for t in [2, 3] {
        let g = scan_bias(BiasPair::OddVsDistinct, t, 2000, Source::Genfun).unwrap();
        let e = scan_bias(BiasPair::OddVsDistinct, t, 60, Source::Enumeration).unwrap();
        let low: Vec<usize> = g.violation_set.iter().copied().filter(|&n| n <= 60).collect();
        assert_eq!(low, e.violation_set);
        assert!(g.violation_set.iter().all(|&n| n <= 7));
        assert_eq!(g.last_violation.unwrap_or(0), CONJECTURED_N_T[t - 2]);
    }
}

#[test]
fn identities_to_50() {
    let scan = scan_identities(50);
    for check in &scan.checks {
        assert!(check.passed(), "{}: {:?}", check.label, check.failures);
    }
    let cor = scan.get("ell1 difference <= b1 - a1").unwrap();
    assert_eq!(cor.checked, 46);
}

#[test]
fn congruence_to_70() {
    let report = scan_congruence(5, 70).unwrap();
    assert!(report.all_zero());
    assert_eq!(report.rows.len(), 5 * 71);
}
