//! Symbolic summation over the pattern polytope with `l1, l2` as parameters.

pub mod affine;
pub mod collect;
pub mod engine;
pub mod format;
pub mod parity;
pub mod report;
pub mod summation;
pub mod tables;
pub mod term;

pub use affine::{AffineForm, Var};
pub use collect::{collect, collect_all, MultiDegree, MultiDegreeTable};
pub use engine::{adj_symbolic, adj_symbolic_with, hat_symbolic, std_symbolic, std_symbolic_with, Expansion};
pub use report::{add_tables, compare_tables, counts, final_table, Counts, ErrataReport};
pub use parity::{ParityCond, ParitySystem};
pub use summation::{sum_ceil_half, sum_entry, EndpointWeights};
pub use tables::{recognize, t1_fn, t2_fn, t3_fn, t_fn, Basis, BasisExpr, BasisTerm, PrintedTable, RowCheck};
pub use term::{SymSum, SymTerm};
