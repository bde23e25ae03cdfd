//! Exact localization engine for degree-zero Donaldson–Thomas invariants of
//! Quot schemes of points on toric 3-folds.
//!
//! The crate is organised bottom-up:
//!
//! - [`charalg`]: sparse Laurent polynomials over the integers (torus
//!   characters) and their evaluation at integer parameter points.
//! - [`partitions`]: plane partitions, colored plane partitions, ordinary
//!   partitions and the partition pairs indexing the cobordism basis.
//! - [`vertex`]: virtual tangent characters at torus-fixed quotients and the
//!   inverse equivariant Euler classes that weight them.
//! - [`toric`]: toric 3-folds, split equivariant bundles and the global
//!   localization sums.
//! - [`chern`]: small intersection rings, Chern numbers and the
//!   double-point cobordism calculus in dimension three.
//! - [`series`]: truncated power series over the rationals and the MacMahon
//!   function.

pub mod charalg;
pub mod chern;
mod error;
pub mod partitions;
pub mod series;
pub mod toric;
pub mod vertex;

pub use charalg::{weight_form, EquivParams, Exponent, LaurentPoly};
pub use error::{Error, Result};
pub use partitions::{ColoredPlanePartition, Partition, PartitionPair, PlanePartition};
pub use series::Series;
pub use toric::{SplitBundle, ToricSpace};
pub use vertex::{ChartWeights, SignConvention, VirtualCharacter};
