//! Vanishing sums of roots of unity, conductor bounds, and the residue
//! computation that produces period tuples.

mod enumerate;
mod mann;
mod residues;
mod systems;
mod vanishing;

pub use enumerate::{
    enumerate_period_tuples, enumerate_period_tuples_stats, pair_classes,
    relative_period_candidates, PeriodTuple, RootPair, TupleRejection,
};
pub use mann::{mann_conductor_bound, mann_exponent_bound};
pub use residues::{raw_residues, residues_from_roots, ResidueOutcome, ResidueRejection};
pub use systems::{
    check_root_preconditions, equation_system_equivalence_check, period_system_check,
    CoincidentRoots,
};
pub use vanishing::{
    gcd_all, normalized_conductor, normalized_roots_within, order_lcm_of, root_sum_is_zero,
    RelationError, VanishingRelation,
};
