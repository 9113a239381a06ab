//! Property tests for the mean axioms and the bridge invariants.

use proptest::prelude::*;
use std::sync::Arc;

use kyfan_core::{
    list_means, mean_to_seiffert, power_mean, seiffert_to_mean, SeiffertDescriptor, SeiffertOrigin,
};

fn positive_pair() -> impl Strategy<Value = (f64, f64)> {
    (1e-3..10.0f64, 1e-3..10.0f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn mean_axioms((x, y) in positive_pair()) {
        for m in list_means() {
            let v = m.eval(x, y).unwrap();
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            prop_assert!(lo <= v && v <= hi, "{}: {v} outside [{lo}, {hi}]", m.id);
            // bit-level symmetry
            prop_assert_eq!(v.to_bits(), m.eval(y, x).unwrap().to_bits(), "{} symmetry", m.id);
            // homogeneity
            for &lambda in &[1e-6, 1e6] {
                let scaled = m.eval(lambda * x, lambda * y).unwrap();
                prop_assert!(
                    (scaled - lambda * v).abs() <= 1e-12 * lambda * v,
                    "{} homogeneity at lambda={lambda}", m.id
                );
            }
        }
    }

    #[test]
    fn diagonal_identity(x in 1e-3..1e4f64) {
        for m in list_means() {
            prop_assert_eq!(m.eval(x, x).unwrap(), x, "{}", m.id);
        }
    }

    #[test]
    fn roundtrip_pointwise((x, y) in positive_pair()) {
        prop_assume!((x - y).abs() / (x + y) > 1e-6);
        for m in list_means() {
            let back = seiffert_to_mean(&mean_to_seiffert(m));
            let direct = m.eval(x, y).unwrap();
            let via = back.eval(x, y).unwrap();
            prop_assert!((via - direct).abs() <= 1e-12 * direct, "{}", m.id);
        }
    }

    #[test]
    fn power_mean_monotone_in_order((x, y) in positive_pair(), r in -8.0..8.0f64, d in 0.01..4.0f64) {
        let lo = power_mean(r, x, y).unwrap();
        let hi = power_mean(r + d, x, y).unwrap();
        prop_assert!(lo <= hi + 1e-13 * hi);
    }

    #[test]
    fn anti_monotone_correspondence(z_seed in 0.01..0.99f64, (x, y) in positive_pair()) {
        // pointwise-ordered Seiffert functions generate reverse-ordered means
        prop_assume!((x - y).abs() / (x + y) > 1e-6);
        let _ = z_seed;
        let small = SeiffertDescriptor::new(
            "tanh", SeiffertOrigin::Builtin, Arc::new(f64::tanh));
        let large = SeiffertDescriptor::new(
            "sinh", SeiffertOrigin::Builtin, Arc::new(f64::sinh));
        // tanh z <= sinh z on (0,1)
        let m_small = seiffert_to_mean(&small);
        let m_large = seiffert_to_mean(&large);
        let a = m_small.eval(x, y).unwrap();
        let b = m_large.eval(x, y).unwrap();
        prop_assert!(a >= b - 1e-14 * a);
    }

    #[test]
    fn extracted_seiffert_satisfies_sandwich(z in 1e-4..0.9999f64) {
        for m in list_means() {
            let sf = mean_to_seiffert(m);
            let v = sf.eval(z).unwrap();
            prop_assert!(v >= z / (1.0 + z) - 1e-12, "{} lower bound at {z}", m.id);
            prop_assert!(v <= z / (1.0 - z) + 1e-12, "{} upper bound at {z}", m.id);
        }
    }
}

#[test]
fn seiffert_chain_implies_mean_chain_on_samples() {
    // z > arsinh z > sin z > arctan z > tanh z on (0,1) reverses to
    // A < NS < Ssin < T < Stanh pointwise
    let order = ["A", "NS", "Ssin", "T", "Stanh"];
    let means: Vec<_> = order.iter().map(|id| kyfan_core::lookup(id).unwrap()).collect();
    for &(x, y) in &[(0.5, 1.5), (0.1, 0.4), (2.0, 9.0)] {
        let vals: Vec<f64> = means.iter().map(|m| m.eval(x, y).unwrap()).collect();
        for w in vals.windows(2) {
            assert!(w[0] < w[1], "expected strict increase, got {vals:?} at ({x},{y})");
        }
    }
}
