//! Knockout tournament fixing.
//!
//! Given who beats whom among `n = 2^c` players and a favorite `v*`, decide
//! whether some bracket seeding makes `v*` champion, and produce one.
//!
//! Solvers:
//! - [`solve_exact`]: colorful binomial-tree embedding, `2^n · poly(n)`.
//! - [`solve_outdeg`]: rejects when `v*` beats fewer than `log n` players,
//!   otherwise exact.
//! - [`solve_indeg`]: color coding over winning-witness forests, running in
//!   `(2e)^t · poly(n)` for `t = k·2^k − k` where `k` is the number of
//!   players beating `v*`.
//!
//! [`oracles`] holds brute-force references for all of them.

pub mod arborescence;
pub mod embed;
pub mod error;
pub mod gen;
pub mod indeg;
pub mod oracles;
pub mod outdeg;
pub mod solver;
pub mod tournament;

pub use arborescence::{
    arbitrary_lba, is_lba, lba_to_seeding, merge_lbas, seeding_to_lba, uba_shape, Lba, UbaShape,
};
pub use embed::{
    embed_colorful_tree, solve_exact, ColorfulEmbedder, Coloring, Embedding, HostGraph,
    PatternTree, DEFAULT_MAX_COLORS,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use gen::{gen_planted_yes, gen_random, GenSpec, Planted};
pub use indeg::{
    build_host, build_pattern_forest, complete_wwf, extend_coloring, find_wwf, sample_coloring,
    solve_indeg, IndegConfig, Wwf,
};
pub use oracles::{
    brute_force_decide, brute_force_wwf, enumerate_seedings, extract_local_lba, is_wwf, niceness,
    repair_to_nice, NicenessReport,
};
pub use outdeg::solve_outdeg;
pub use solver::{decide, Algo, Decision, Route};
pub use tournament::{
    canonical_rounds, seeding_from_sequence, simulate, validate_match_sequence, KnockoutTrace,
    Match, MatchSets, Player, Seeding, Tournament,
};
