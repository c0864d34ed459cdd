use greycast::fracops::{cfa, cfd, classical_fago, classical_fdiff};
use greycast::FractionalOrder;
use nalgebra::DMatrix;
use proptest::prelude::*;

fn positive_series() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..1000.0, 5..50)
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Row vector x times A · U^m, with A = diag(i^{−(m−α)}) and U the upper
/// triangular matrix of ones, built entry by entry.
fn cfa_by_matrix(x: &[f64], alpha: f64) -> Vec<f64> {
    let n = x.len();
    let m = alpha.ceil() as u32;
    let shift = f64::from(m) - alpha;
    let a = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            1.0 / ((i + 1) as f64).powf(shift)
        } else {
            0.0
        }
    });
    let u = DMatrix::from_fn(n, n, |i, j| if i <= j { 1.0 } else { 0.0 });
    let mut product = a;
    for _ in 0..m {
        product *= &u;
    }
    let row = DMatrix::from_row_slice(1, n, x);
    (row * product).row(0).iter().copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cfd_inverts_cfa(x in positive_series(), tenth in 1u32..=10) {
        let alpha = FractionalOrder::unit(f64::from(tenth) / 10.0).unwrap();
        let back = cfd(&cfa(&x, alpha).unwrap().values, alpha).unwrap();
        prop_assert!(max_abs_diff(&back, &x) < 1e-9);
    }

    #[test]
    fn classical_fdiff_inverts_fago(x in positive_series(), r in 0.001f64..=2.0) {
        let back = classical_fdiff(&classical_fago(&x, r).unwrap().values, r).unwrap();
        prop_assert!(max_abs_diff(&back, &x) < 1e-9);
    }

    #[test]
    fn order_one_operators_agree(x in positive_series()) {
        let conformable = cfa(&x, FractionalOrder::unit(1.0).unwrap()).unwrap().values;
        let classical = classical_fago(&x, 1.0).unwrap().values;
        prop_assert_eq!(conformable, classical);
    }

    #[test]
    fn cfa_increasing_and_anchored(x in positive_series(), a in 0.01f64..=1.0) {
        let acc = cfa(&x, FractionalOrder::unit(a).unwrap()).unwrap().values;
        prop_assert_eq!(acc[0], x[0]);
        prop_assert!(acc.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn cfa_matches_matrix_form(
        x in prop::collection::vec(0.1f64..10.0, 1..=8),
        alpha in prop::sample::select(vec![0.3, 0.7, 1.0, 1.5, 1.9, 2.0]),
    ) {
        let fast = cfa(&x, FractionalOrder::new(alpha).unwrap()).unwrap().values;
        let slow = cfa_by_matrix(&x, alpha);
        prop_assert!(max_abs_diff(&fast, &slow) < 1e-12);
    }
}

#[test]
fn fago_known_weights() {
    // C(r−1+j, j) for r = 0.5 by the recurrence c_j = c_{j−1}·(j − 1 + r)/j
    let acc = classical_fago(&[1.0, 1.0, 1.0], 0.5).unwrap().values;
    assert_eq!(acc.len(), 3);
    assert!((acc[1] - 1.5).abs() < 1e-13);
    assert!((acc[2] - 1.875).abs() < 1e-13);
}
