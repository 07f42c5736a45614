use seidel_core::{
    bell_number, check_all, egf_dual, fubini_number, ogf_dual, run_series_checks, BigInt, Error,
    EsMatrix, PowerSeries, SeqKind, Status,
};

#[test]
fn bell_matrix_column_is_shifted_bell() {
    let bells: Vec<BigInt> = SeqKind::BellNumber.numbers(20).unwrap();
    let m = EsMatrix::build(bells).unwrap();
    let shifted: Vec<BigInt> = (1..=20).map(bell_number).collect();
    assert_eq!(m.first_column(), shifted);
}

#[test]
fn duals_agree_with_the_table() {
    let init: Vec<BigInt> = (0..12).map(fubini_number).collect();
    let m = EsMatrix::build(init.clone()).unwrap();
    let column = PowerSeries::from_integers(&m.first_column(), 11);
    let ogf = ogf_dual(&PowerSeries::from_integers(&init, 11));
    assert!(ogf.try_eq(&column).unwrap());

    let egf = egf_dual(&PowerSeries::from_egf(&init, 11));
    assert_eq!(
        egf.egf_coeffs(),
        PowerSeries::from_integers(&m.first_column(), 11)
            .coeffs()
            .to_vec()
    );
}

#[test]
fn everything_passes_at_moderate_sizes() {
    assert!(check_all(25)
        .unwrap()
        .iter()
        .all(|c| c.status == Status::Pass));
    assert!(run_series_checks(12)
        .unwrap()
        .iter()
        .all(|c| c.status.is_pass()));
}

#[test]
fn order_below_minimum_is_an_error() {
    assert!(matches!(
        run_series_checks(3),
        Err(Error::OrderTooSmall { .. })
    ));
}
