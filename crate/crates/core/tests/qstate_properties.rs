mod common;

use common::{random_matrix, rng};
use proptest::prelude::*;
use qmatrix_core::qstate::tensor;
use qmatrix_core::{decode_matrix, encode_matrix, Complex64, QState, RegisterLayout};

#[test]
fn encode_decode_round_trip() {
    let mut r = rng(11);
    for (rows, cols) in [(2, 2), (2, 4), (4, 4), (4, 8)] {
        for _ in 0..5 {
            let m = random_matrix(&mut r, rows, cols);
            let e = encode_matrix(&m, "R", "C").unwrap();
            assert!((e.state.norm() - 1.0).abs() < 1e-10);
            let back = decode_matrix(&e.state, "R", "C").unwrap();
            assert!(
                back.max_abs_diff(&m.scale(1.0 / m.frobenius_norm()))
                    .unwrap()
                    < 1e-12
            );
            assert!((back.frobenius_norm() - 1.0).abs() < 1e-10);
            assert!(e.matrix().unwrap().max_abs_diff(&m).unwrap() < 1e-12);
        }
    }
}

#[test]
fn global_index_is_row_times_cols_plus_col() {
    let layout = RegisterLayout::new(&[("R", 2), ("C", 3)]).unwrap();
    for s in 0..4u64 {
        for t in 0..8u64 {
            assert_eq!(
                layout.index_of(&[("R", s), ("C", t)]).unwrap() as u64,
                s * 8 + t
            );
        }
    }
}

fn small_state(name: &str, width: usize, seed: u64) -> QState {
    use rand::Rng;
    let mut r = rng(seed);
    let layout = RegisterLayout::new(&[(name, width)]).unwrap();
    let amps = (0..layout.dim())
        .map(|_| Complex64::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0)))
        .collect();
    QState::normalized(layout, amps).unwrap()
}

/// Entries `±2^(-w/2)` or `±i 2^(-w/2)` for even `w`: every product is exact.
fn dyadic_state(name: &str, width: usize, seed: u64) -> QState {
    use rand::Rng;
    let mut r = rng(seed);
    let layout = RegisterLayout::new(&[(name, width)]).unwrap();
    let mag = 0.5f64.powi(width as i32 / 2);
    let units = [
        Complex64::new(mag, 0.0),
        Complex64::new(-mag, 0.0),
        Complex64::new(0.0, mag),
        Complex64::new(0.0, -mag),
    ];
    let amps = (0..layout.dim())
        .map(|_| units[r.random_range(0..4)])
        .collect();
    QState::from_amplitudes(layout, amps).unwrap()
}

proptest! {
    #[test]
    fn tensor_is_associative_and_norm_preserving(wa in 1usize..4, wb in 1usize..4, wc in 1usize..4, seed: u64) {
        let a = small_state("a", wa, seed);
        let b = small_state("b", wb, seed ^ 1);
        let c = small_state("c", wc, seed ^ 2);
        let left = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let right = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.layout().registers(), right.layout().registers());
        for (x, y) in left.amplitudes().iter().zip(right.amplitudes()) {
            prop_assert!((x - y).norm() < 1e-15);
        }
        prop_assert!((left.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn tensor_is_exactly_associative_on_dyadic_amplitudes(wa in 1usize..3, wb in 1usize..3, wc in 1usize..3, seed: u64) {
        let a = dyadic_state("a", 2 * wa, seed);
        let b = dyadic_state("b", 2 * wb, seed ^ 1);
        let c = dyadic_state("c", 2 * wc, seed ^ 2);
        let left = tensor(&tensor(&a, &b).unwrap(), &c).unwrap();
        let right = tensor(&a, &tensor(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.amplitudes(), right.amplitudes());
    }
}
