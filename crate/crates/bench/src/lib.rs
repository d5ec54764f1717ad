//! Workloads shared by the criterion benches.

use g2_tokuyama::paramsum::{adj_symbolic, collect, std_symbolic, add_tables};
use g2_tokuyama::verify::{d_poly, verify, weyl_denominator, weyl_numerator};
use g2_tokuyama::{LaurentPoly, MultiDegreeTable, Result, WeightParams};

/// Cells swept by the verification benches, smallest first.
pub const CELLS: [(i64, i64); 4] = [(2, 2), (4, 3), (6, 6), (8, 5)];

pub fn weight(l1: i64, l2: i64) -> WeightParams {
    WeightParams::new(l1, l2).expect("positive weight")
}

/// Full brute-force comparison; panics on a mismatch so a broken build
/// cannot post a fast time.
pub fn verify_cell(l1: i64, l2: i64) -> usize {
    let r = verify(weight(l1, l2)).expect("verify");
    assert!(r.equal, "identity fails at ({l1}, {l2})");
    r.lhs.len()
}

/// Both symbolic sums, collected and added in one parity class.
pub fn symbolic_final(eps1: i64, eps2: i64) -> Result<MultiDegreeTable> {
    let std = collect(&std_symbolic()?, eps1, eps2)?;
    let adj = collect(&adj_symbolic()?, eps1, eps2)?;
    Ok(add_tables(&std, &adj))
}

/// `D(x)^k`, a dense product for the multiplication bench.
pub fn d_power(k: u32) -> LaurentPoly {
    d_poly().pow(k)
}

/// Weyl character by exact division.
pub fn character(l1: i64, l2: i64) -> LaurentPoly {
    weyl_numerator(weight(l1, l2)).div_exact(&weyl_denominator()).expect("exact division")
}
