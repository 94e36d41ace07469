//! Generators for the drawing families and evaluators for the bounds they are
//! compared against.

mod bounds;
mod grid;
mod lattice;
mod rook;

pub use bounds::{bound_table, theorem3_floor, u0, u0_printed, BoundTable};
pub use grid::{dodecagon_grid, grid_counts, spiral_construction, ConstructionParams};
pub use lattice::{shifted_lattice, shifted_lattice_with, triangular_hexagon};
pub use rook::{dodecagon, rook_block, rook_block_default};

use crate::arrangement::crossing_report;
use crate::error::{Error, Result};
use crate::model::{validate_drawing, Drawing};

pub const META_CONSTRUCTION: &str = "construction";

pub(crate) fn cerr(name: &str, message: impl Into<String>) -> Error {
    Error::Construction { name: name.to_string(), message: message.into() }
}

/// Validity plus k-planarity, or a construction error naming `name`.
pub(crate) fn gate(name: &str, d: &Drawing, k: usize) -> Result<()> {
    let v = validate_drawing(d);
    if !v.is_valid() {
        return Err(cerr(name, format!("invalid drawing: {}", v.summary())));
    }
    let rep = crossing_report(d).map_err(|e| cerr(name, e.to_string()))?;
    if !rep.is_k_plane(k) {
        return Err(cerr(
            name,
            format!("not {k}-plane: an edge has {} crossings", rep.max_crossings_per_edge),
        ));
    }
    Ok(())
}
