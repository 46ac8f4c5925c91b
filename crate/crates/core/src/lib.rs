//! Small simplicial models of subdivision bifiltrations built from finite
//! metric data.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs; file formats, the command line and thread pools
//! live in the `bifilt` companion crate.
//!
//! The pipeline, bottom to top:
//!
//! * [`metric`]: finite metric spaces from ℓp point clouds or matrices.
//! * [`graph`]: neighborhood graphs and maximal clique enumeration.
//! * [`filtration`]: one-parameter filtrations stored by their maximal
//!   simplices, maximality timelines and the `m_k` counters.
//! * [`subdivision`]: the brute-force subdivision bifiltration (oracle).
//! * [`nerve`]: the nerve semifiltration covering the subdivision
//!   bifiltration by subdivided maximal simplices.
//! * [`cech`]: intrinsic Čech filtrations and the √2-approximation.
//! * [`polytope`]: polytope approximations of ℓp balls and their
//!   intersection-graph filtration.
//! * [`bifiltration`]: semifiltration to 1-critical bifiltration conversion.
//! * [`homology`]: ℤ/2 Betti numbers used by every validation path.
#![no_std]

extern crate alloc;

pub mod bifiltration;
pub mod cech;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod homology;
pub mod metric;
pub mod nerve;
pub mod polytope;
pub mod simplex;
pub mod subdivision;

pub use error::{Error, Result};
pub use filtration::{CriticalFiltration, SimplexTimeline};
pub use graph::{CliqueSet, Graph};
pub use metric::{FiniteMetric, Norm, PointCloudLp};
pub use nerve::{NerveCellGenerator, Semifiltration};
pub use simplex::{Simplex, SimplicialComplex};
