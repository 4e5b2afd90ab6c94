//! Exact computations in Coxeter groups: classification of components,
//! roots and reduced words, fixed-point subgroups of graph automorphisms,
//! almost central involutions in `W x| G`, and witness tables for the
//! affine and compact hyperbolic types.
//!
//! Most of the machinery is generic over the scalar field; the aliases
//! below fix it to the exact cyclotomic [`TrigScalar`].

pub mod aci;
pub mod classify;
pub mod coxsystem;
pub mod essential;
pub mod exactreal;
pub mod fixedpoint;
pub mod geom;
pub mod linalg;
pub mod scalar;
pub mod witness;
pub mod words;

pub use coxsystem::{CoxeterSystem, GraphAutomorphism, Label};
pub use exactreal::TrigScalar;

pub type Root = geom::Root<TrigScalar>;
pub type GramForm = geom::GramForm<TrigScalar>;
pub type Geometry = geom::Geometry<TrigScalar>;
pub type Element = words::GroupElement<TrigScalar>;
pub type Quad = exactreal::QuadScalar<TrigScalar>;
pub type Semidirect = aci::SemidirectElement<TrigScalar>;
