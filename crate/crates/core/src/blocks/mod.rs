//! Block combinatorics: the balanced predicate, block partitions, maximal
//! balanced subpartitions, the hat construction and lattice predictions.

mod balanced;
mod construct;
mod hat;
mod lattice;
mod partition;

pub use balanced::{bias, column_condition, has_pairing, is_balanced, self_paired_content, vertical_pair_contents};
pub use construct::{
    classifier_agrees, hom_target, i_maximal_balanced_sub, i_maximal_skew, is_minimal_exact, is_weight,
    maximal_balanced_skew, maximal_balanced_sub, minimal_weight,
};
pub use hat::{hat, hat_trace, is_minimal, HatStep, HatTrace};
pub use lattice::{lattice_predict, LatticePrediction};
pub use partition::{block_partition, BlockClass, BlockPartition, WeightSet};
