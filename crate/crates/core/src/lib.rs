//! Exact enumeration and extremal constructions for simultaneous core
//! partitions with distinct parts, centred on the `(2k+1, 2k+3)` family.

pub mod bijection;
pub mod census;
pub mod error;
pub mod exec;
pub mod extremal;
pub mod lattice_path;
pub mod numbers;
pub mod partition;
pub mod poset;

pub use bijection::{phi, phi_inverse, psi, psi_inverse, MarkedIdeal};
pub use census::{CensusOptions, CensusReport, CensusRow, Guards};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use extremal::{beta_ideal, gamma_ideal, largest_size, max_partition};
pub use lattice_path::{LatticePath, Step};
pub use partition::{brute_force_distinct_cores, BetaSet, Partition};
pub use poset::{GapPoset, OrderIdeal, PosetId};
