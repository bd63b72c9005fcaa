//! Nodal sets of Dirichlet eigenfunctions of the square `[0, π]²`.
//!
//! The numerical kernels are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix `f64`, which is what the reports and the CLI use.

pub mod bessel;
pub mod chebyshev;
pub mod critical;
pub mod eigenfunction;
pub mod error;
pub mod render;
pub mod scalar;
pub mod spectrum;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Catalog = chebyshev::ChebyshevCatalog<f64>;
pub type ThetaCatalog = chebyshev::SpecialThetaCatalog<f64>;
pub type Family = eigenfunction::ThetaFamily<f64>;
pub type Form = eigenfunction::SubstitutedForm<f64>;
pub type Zero = critical::CriticalZero<f64>;
pub type Grid = topology::NodalGrid<f64>;
pub type Summary = topology::NodalSummary<f64>;
pub type Sweep = topology::SweepReport<f64>;
pub type ZReport = topology::ZStructureReport<f64>;

pub type Catalog32 = chebyshev::ChebyshevCatalog<f32>;
pub type Family32 = eigenfunction::ThetaFamily<f32>;
