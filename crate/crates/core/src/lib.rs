//! Exact simplex-layer stratification of partition graphs.
//!
//! The partition graph `G_n` has the partitions of `n` as vertices and joins
//! two partitions when one unit can be moved between parts of one to give the
//! other. Each vertex carries a local simplex dimension `dim_loc`, computed
//! from its star- and top-capacities; its level sets are the layers
//! `L_r(n)`. This crate enumerates those layers, the edges between them, the
//! first `n` at which each layer appears, and counts restricted to
//! user-chosen vertex subsets. A brute-force clique search in [`oracle`]
//! checks the capacity formula independently.

pub mod boundary;
pub mod capacity;
pub mod error;
pub mod firstocc;
pub mod oracle;
pub mod partition;
pub mod restriction;
pub mod strata;
pub mod transfer;

pub use boundary::{
    boundary_slice, boundary_table, cross_layer_edges, max_edge_jump, BoundaryRow,
    BoundarySlice, BoundaryTable, CrossCount, LayerEdge,
};
pub use capacity::{
    a_max_set, c_max_set, capacity_record, local_dim, star_capacity, top_capacity,
    CapacityRecord,
};
pub use error::{AtlasError, Result};
pub use firstocc::{
    check_staircase_pattern, first_occurrence_scan, representatives_up_to_conjugation,
    FirstOccurrenceRecord, OccurrenceStatus,
};
pub use oracle::{
    omega_loc_bruteforce, verify_dimension_formula, verify_dimension_formula_with, Mismatch,
    OracleReport,
};
pub use partition::{
    addable_corners, conjugate, enumerate_partitions, make_partition, removable_corners,
    staircase, staircase_family, Corner, CornerKind, Partition, Partitions, StaircaseFamily,
};
pub use restriction::{
    builtin_region, builtin_regions, parse_region_file, restricted_boundary_count,
    restricted_layer_counts, RegionPredicate,
};
pub use strata::{
    layer, layer_assignment, profile, profile_sweep, LayerAssignment, LayerProfile,
    Stratification,
};
pub use transfer::{
    admissible_transfers, apply_transfer, are_adjacent, build_graph, neighbors, PartitionGraph,
    Transfer,
};
