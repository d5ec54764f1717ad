use g2_tokuyama::algebra::rat;
use g2_tokuyama::paramsum::{adj_symbolic, adj_symbolic_with, std_symbolic, std_symbolic_with, Expansion, Var};
use g2_tokuyama::patterns::{count, weyl_dimension};
use g2_tokuyama::verify::{d_poly, lhs_adj, lhs_std, lhs_sum, rhs_formula, verify};
use g2_tokuyama::WeightParams;
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn wp(l1: i64, l2: i64) -> WeightParams {
    WeightParams::new(l1, l2).unwrap()
}

#[test]
fn grid_up_to_four() {
    for l1 in 1..=4 {
        for l2 in 1..=4 {
            let r = verify(wp(l1, l2)).unwrap();
            assert!(r.equal, "({l1},{l2}): {}", r.diff);
        }
    }
}

#[test]
fn theta_zero() {
    assert_eq!(lhs_sum(wp(1, 1)), d_poly());
    assert_eq!(rhs_formula(wp(1, 1)).unwrap(), d_poly());
}

#[test]
fn symbolic_matches_enumeration_at_seeded_cells() {
    let (std, adj) = (std_symbolic().unwrap(), adj_symbolic().unwrap());
    let (std_raw, adj_raw) = (std_symbolic_with(Expansion::Raw).unwrap(), adj_symbolic_with(Expansion::Raw).unwrap());
    let mut rng = StdRng::seed_from_u64(0x6275);
    for _ in 0..6 {
        let (l1, l2) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let at = [(Var::L1, l1), (Var::L2, l2)];
        let (s, a) = (lhs_std(wp(l1, l2)), lhs_adj(wp(l1, l2)));
        assert_eq!(std.evaluate(&at).unwrap(), s, "std ({l1},{l2})");
        assert_eq!(adj.evaluate(&at).unwrap(), a, "adj ({l1},{l2})");
        assert_eq!(std_raw.evaluate(&at).unwrap(), s, "raw std ({l1},{l2})");
        assert_eq!(adj_raw.evaluate(&at).unwrap(), a, "raw adj ({l1},{l2})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn rhs_is_a_polynomial_with_unit_constant(l1 in 1i64..=6, l2 in 1i64..=6) {
        let r = rhs_formula(wp(l1, l2)).unwrap();
        prop_assert!(r.terms().all(|(&(a, b), _)| a >= 0 && b >= 0));
        prop_assert!(r.coeff(0, 0).is_one());
        // at t = 0 and x = y = 1 only the dimension of the irreducible of
        // highest weight theta survives
        let (a, b) = (l1, l2);
        let dim = a * b * (a + b) * (a + 2 * b) * (a + 3 * b) * (2 * a + 3 * b) / 120;
        let one = rat(1, 1);
        prop_assert_eq!(r.eval(&one, &one, &rat(0, 1)).unwrap(), rat(dim, 1));
    }

    #[test]
    fn pattern_count_is_the_weyl_dimension(l1 in 1i64..=7, l2 in 1i64..=7) {
        prop_assert_eq!(count(wp(l1, l2)), weyl_dimension(wp(l1, l2)));
    }
}
