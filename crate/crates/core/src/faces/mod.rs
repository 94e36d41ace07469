//! Plane subgraphs and the discharging argument run on them: faces,
//! halfedges, bad triangles, edge flips and final charges.

mod decompose;
mod discharge;
mod flips;
mod halfedges;
mod split;

pub use decompose::{face_decomposition, gt_bound_check, Face, FaceDecomposition, GtBoundCheck};
pub use discharge::{discharging_audit, ChargeLedger, FaceCharge, Transfer};
pub use flips::flip_repair;
pub use halfedges::{
    bad_triangle_classify, halfedge_extraction, BadTriangle, Halfedge, HalfedgeReport,
};
pub use split::{
    matchstick_reduction, plane_subgraph, plane_subgraph_with_limit, PlaneSplit, SplitMode,
    DEFAULT_EXACT_LIMIT,
};
