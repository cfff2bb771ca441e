//! Decide whether the neighborhoods induced by a covering of a finite
//! universe form a partition, directly from the covering.
//!
//! The exact decision ([`check_excluded_number`]) uses only block-membership
//! counts. The neighborhood oracle, the approximation-operator identities in
//! [`approx_ops`], and the two sufficient conditions (irreducible reduct is a
//! partition; every block is uniform) are kept alongside it as independent
//! cross-checks.
//!
//! ```
//! use covpart::{build_covering, check_excluded_number};
//!
//! let c = build_covering(
//!     &["1", "2", "3", "4"],
//!     &[vec!["1", "2", "3"], vec!["1", "2"], vec!["3", "4"], vec!["4"]],
//! )
//! .unwrap();
//! assert!(check_excluded_number(&c).is_partition);
//! ```

pub mod approx_ops;
pub mod cli;
pub mod covering;
pub mod covgen;
pub mod degrees;
pub mod error;
pub mod neighborhoods;
pub mod partition_check;
pub mod reduction;
pub mod set;
pub mod verify;

pub use covering::{
    build_covering, build_covering_inferred, canonical_form, is_partition, Block, Covering, Family,
    Universe,
};
pub use degrees::{
    all_uniform, common_block_repeat_degree, degree_table, excluded_number, is_uniform_block,
    membership_repeat_degree, DegreeTable,
};
pub use error::{Error, Result};
pub use neighborhoods::{
    neighborhood, neighborhoods_family, oracle_is_neighborhood_partition, NeighborhoodMap,
};
pub use partition_check::{
    check_excluded_number, check_reduct_sufficient, check_uniform_sufficient, full_report, Method,
    PartitionVerdict, Report, SufficientVerdict,
};
pub use reduction::{is_reducible, reducible_blocks, reduct, reduct_by_single_deletions};
pub use set::ElementSet;
