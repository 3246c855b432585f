//! Expressions, certificates, lifts through flips and vertex insertion, and
//! exact clique-width for small graphs.

mod builders;
mod certificate;
mod exact;
mod expr;
mod lift;
mod primes;
mod tree;
mod victor;

pub use builders::{cograph_expression, degree2_expression};
pub use certificate::{
    lift_add_vertex, lift_bipartite_complementation, lift_subgraph_complementation, lift_typed_flip,
    WidthCertificate,
};
pub use exact::{cliquewidth, exact_cliquewidth, MAX_EXACT_N};
pub use expr::{evaluate, to_text, width, KExpression, LabelledGraph};
pub use primes::cw_via_primes;
pub use victor::{
    comp_anti_deletion, find_mixed_partition, matching_comatching_deletion, victor_pipeline, victor_width_bound,
    BlockRelation, Deletion, MixedPartition, VictorOutcome, MAX_PARTITION_N, VICTOR_MAX_DELETIONS,
    VICTOR_WIDTH_BOUND,
};
