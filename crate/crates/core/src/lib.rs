//! Digital distances and exact shortest-path counts in the 3D cubic grid
//! under 6-, 18- and 26-connectivity.
//!
//! ```
//! use gridpaths_core::{count_between, GridPoint, Neighborhood};
//!
//! let n = count_between(GridPoint::new(0, 3, 0), GridPoint::ORIGIN, Neighborhood::N18);
//! assert_eq!(n.to_string(), "13");
//! ```

pub mod counting;
pub mod error;
pub mod metrics;
pub mod oracle;
pub mod tables;
pub mod types;
pub mod verify;

pub use counting::{
    binomial, classify_n18, count, count_between, count_n18, count_n18_checked, count_n18_halfcase,
    count_n18_maxcase, count_n26, count_n6, count_n8_2d, multinomial, N18Case,
};
pub use error::{Error, Result};
pub use metrics::{d18, d26, d6, distance, minkowski_distance};
pub use oracle::{bfs_hop_distances, enumerate_shortest_paths, oracle_count, oracle_count_2d, PathList};
pub use tables::{shell_table, slice_table_2d, CountTable, TableEntry, TableKind};
pub use types::{admissible_moves, canonicalize, CanonicalOffset, Count, GridPoint, MoveStep, Neighborhood};
pub use verify::{canonical_points, verify_region, Mismatch, VerifyReport};
