//! Maximum independent set in H-free graphs.
//!
//! The crate bundles an exact oracle ([`graph::alpha_exact`]), constructive
//! Ramsey extraction ([`ramsey`]), kernels ([`kernelize`]), parameterized
//! solvers ([`fpt`]), hardness-instance generators ([`hardness`]) and a
//! classifier for fixed patterns ([`classify`]).

pub mod classify;
pub mod cli;
pub mod error;
pub mod fpt;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod kernelize;
pub mod ramsey;
pub mod sample;

pub use error::{Error, Result};
pub use graph::{alpha_exact, find_induced, Graph, HPattern, VertexSet};
