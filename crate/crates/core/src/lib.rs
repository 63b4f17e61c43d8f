//! Topological invariants of PSL(2,R) representations of punctured-surface
//! groups: relative Euler classes, boundary sign vectors, the non-emptiness
//! census of connected components of the representation spaces, and explicit
//! witness constructions for every non-empty component.

pub mod atlas;
pub mod components;
pub mod cover;
pub mod error;
pub mod io;
pub mod mobius;
pub mod sample;
pub mod scalar;
pub mod surface;
pub mod verify;

pub use components::{BoundaryFilter, ComponentIndex};
pub use cover::{LiftedClass, LiftedElement, LiftRule};
pub use error::{Error, Result};
pub use mobius::{Angle, ElementClass, Mat2, Psl2};
pub use scalar::{Rat, Scalar, EPS};
pub use surface::{BoundaryType, Representation, SignVector, SurfaceSig};
