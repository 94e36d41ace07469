//! Drawings, their validation, and file/SVG output.

mod augment;
pub mod codec;
pub(crate) mod drawing;
mod svg;
mod validate;

pub use augment::augment_2planar;
pub use drawing::{merge, Drawing, Edge, META_DASHED};
pub use svg::render_svg;
pub use validate::{unit_pairs, validate_drawing, ValidationReport};
