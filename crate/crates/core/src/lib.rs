//! Multidimensional shifts of finite type generated by graphs.
//!
//! A shift is described either by a list of forbidden patterns ([`ShiftSpec`])
//! or by one 0/1 adjacency matrix per axis ([`MultiGraph`]). The crate converts
//! between the two (recoding arbitrary forbidden sets to one-step form through
//! higher-block codes), evaluates matrix criteria for non-emptiness,
//! periodicity and finiteness in two dimensions, and cross-checks every
//! criterion against exhaustive torus and rectangle searches.
//!
//! Conventions: axis 0 points right, axis 1 points up, and the origin of a
//! block is its bottom-left cell. Cells are stored with axis 0 varying fastest.

pub mod analysis;
pub mod dynamics;
mod error;
pub mod graph;
pub mod matrix;
pub mod pattern;
pub mod recode;
pub mod report;
pub mod specfile;

pub use analysis::{
    analyze, build_epair_tables, epair_nonempty_test, matrix_predicates, mn_finiteness_test,
    perm_commute_test, products, prune_products, transpose_variant_test, zero_pattern_test,
    Analysis, ComponentAnalysis, EPairTables, MatrixPredicates, ProductReport, Triomino,
    TriominoKind, Verdict, VerdictStatus,
};
pub use dynamics::{
    arbitrary_period_construct, block_growth, bounded_emptiness, cut_repeated_row,
    diagonal_arrangement, horizontal_periodic_exists, permutation_generators_from_orbit,
    propagate_permutation, run_from_periodic_torus, torus_search, vertical_periodic_exists, Growth,
    OracleStatus, OracleVerdict, SearchBudget,
};
pub use error::{Result, ShiftError};
pub use graph::{
    decompose_components, graph_from_one_step, one_step_graph_for_sft, spec_from_graph, trim,
    MultiGraph,
};
pub use matrix::Matrix;
pub use pattern::{
    enumerate_admissible_blocks, is_locally_admissible, occurs_at, period_lattice, translate,
    Alphabet, GeneralPattern, PeriodLattice, RectBlock, ShiftSpec, Symbol, TorusConfig,
};
pub use recode::{
    beta_apply, beta_inverse, higher_block_spec, overlap_progressive, uniformize_forbidden,
    BlockAlphabetCoding,
};
