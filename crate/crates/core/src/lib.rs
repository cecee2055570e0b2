//! Global and local spatial autocorrelation statistics.
//!
//! Computes global Moran's I and Geary's C together with three formulations
//! of their local counterparts (LISA):
//!
//! * set 1: raw contiguity weights and centralized values,
//! * set 2: row-normalized weights and z-scores,
//! * set 3: globally normalized weights with population z-scores (Moran) or
//!   sample z-scores (Geary).
//!
//! Sets 1 and 3 are proportional unit by unit and their sums reproduce the
//! global statistics; set 2 is not, because row normalization destroys the
//! symmetry of the weights. The [`verification`] module checks every such
//! relation numerically on a given dataset.
//!
//! ```
//! use lisa_kit::analysis::{Analysis, Dataset};
//! use lisa_kit::fixtures::load_bth;
//! use lisa_kit::matrices::Kernel;
//!
//! let bth = load_bth();
//! let ds = Dataset::new("bth2000", bth.distances, bth.pop2000, Kernel::InverseDistance).unwrap();
//! let a = Analysis::run(&ds).unwrap();
//! let sum_mi3: f64 = a.lisa.mi3.iter().sum();
//! assert!((sum_mi3 - a.globals.moran_i).abs() < 1e-12);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod global;
pub mod io;
pub mod lisa;
pub mod matrices;
pub mod numeric;
pub mod output;
pub mod plot;
pub mod variables;
pub mod verification;

pub use analysis::{Analysis, Dataset};
pub use error::{Error, Result};
pub use global::GlobalStats;
pub use lisa::LisaTable;
pub use matrices::{ContiguityMatrix, DistanceMatrix, GlobalWeights, Kernel, RowWeights, WeightMatrix};
pub use variables::{AttributeVector, TransformSet};
pub use verification::VerificationReport;
