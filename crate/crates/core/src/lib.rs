//! Exact and sampled computation of the Chebotarev invariant `C(G)` of a
//! finite permutation group: the expected number of uniform random
//! elements needed until they generate `G` invariably.
//!
//! Groups are small enough to hold as explicit element tables. From the
//! subgroup lattice come the maximal-subgroup classes, the sieve system of
//! conjugate unions, and an inclusion–exclusion expansion that yields
//! `C(G)` as an exact rational. The crown data of the complemented abelian
//! chief factors feeds a set of upper bounds on `C(G)` for soluble groups.
//!
//! ```
//! use chebotarev::analysis::Analysis;
//! use chebotarev::decimal::rat;
//! use chebotarev::exact::ExactOptions;
//!
//! let spec = "symmetric 3".parse().unwrap();
//! let a = Analysis::new(&spec, ExactOptions::default()).unwrap();
//! assert_eq!(a.exact().unwrap().exact, rat(19, 5));
//! ```

pub mod analysis;
pub mod bitset;
pub mod bounds;
pub mod catalog;
pub mod chief;
pub mod cli;
pub mod decimal;
pub mod error;
pub mod exact;
pub mod fp;
pub mod group;
pub mod mc;
pub mod perm;
pub mod report;
pub mod spec;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result};
pub use group::{build_group, PermGroup};
pub use perm::Permutation;
pub use spec::{parse_group, GroupSpec};
