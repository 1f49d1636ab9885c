//! The `≐_n` calculus: coefficient windows, family tails and rate checks.

pub mod checks;
pub mod coeffs;
pub mod expr;
pub mod family;

pub use checks::{
    check_bracket_rate, check_color_stability, check_colored_rate, check_cross_twist, check_diagonal, check_family,
    compare_members, family_tail, RateRule, StepCheck, TailReport, Witness,
};
pub use coeffs::{n_equivalent, stable_prefix, CoeffList};
pub use expr::FamilyExpr;
pub use family::{family_table, member_windows, FamilySpec, Grading, Member, Quantity, TableRow};
