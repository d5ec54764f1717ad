mod common;

use proptest::prelude::*;

#[test]
fn parity_gated_windows() {
    for c1 in common::ODD {
        for c2 in common::ODD {
            common::check_parity(c1, c2).unwrap_or_else(|e| panic!("C1={c1} C2={c2}: {e}"));
        }
    }
}

#[test]
fn ceil_half_windows() {
    common::check_ceil_half().unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn plain_windows(p in -3i64..=3, r in -2i64..=2, s in -2i64..=2, k in -2i64..=2) {
        prop_assume!(p != 0 || s != 0);
        prop_assert_eq!(common::check_plain(p, r, s, k), Ok(()));
    }
}
