use hermite_asymptotics_web::{charlier_limit_curve, hermite_curve, zero_table};

#[test]
fn curve_rows_track_the_exact_values() {
    let rows = hermite_curve(30, -6.0, 6.0, 121, 1.0).unwrap();
    assert_eq!(rows.len(), 4 * 121);
    for row in rows.chunks(4) {
        assert!(row[1].abs() < 1.5 && row[2].abs() < 1.5);
        if row[3] == 6.0 && row[0].abs() < 5.0 {
            assert!((row[1] - row[2]).abs() < 0.05, "{row:?}");
        }
    }
    assert!(hermite_curve(0, -1.0, 1.0, 10, 1.0).is_err());
    assert!(hermite_curve(10, 1.0, -1.0, 10, 1.0).is_err());
}

#[test]
fn zero_rows_are_close_to_true_zeros() {
    let rows = zero_table(12).unwrap();
    assert_eq!(rows.len(), 36);
    for row in rows.chunks(3) {
        assert!((row[1] - row[2]).abs() < 0.02);
    }
    assert!(zero_table(0).is_err());
}

#[test]
fn limit_curve_approaches_hermite() {
    let gap = |a: f64| {
        let rows = charlier_limit_curve(5, a, -2.0, 2.0, 41).unwrap();
        rows.chunks(3).map(|r| (r[1] - r[2]).abs()).fold(0.0, f64::max)
    };
    assert!(gap(1e5) < gap(1e3));
    assert!(charlier_limit_curve(5, -1.0, -2.0, 2.0, 41).is_err());
}
