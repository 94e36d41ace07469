//! Exact constructions and audits for k-planar unit distance drawings.
//!
//! Coordinates live in ℚ(√3), so unit distances, crossings and cell sizes are
//! decided exactly; floating point is only used as a filter and for rendering.

pub mod arrangement;
pub mod error;
pub mod faces;
pub mod geometry;
pub mod model;
pub mod numeric;
pub mod planemap;
pub mod report;
pub mod constructions;
pub mod corpus;
mod spatial;

pub use error::{Error, Result};
pub use geometry::Point;
pub use model::{Drawing, Edge};
pub use numeric::QField;
