//! Crossings, planarization, cells and the audits that run on them.

mod cells;
mod crossings;
mod smallcells;

pub use cells::{
    cell_decomposition, density_check, density_check_with, outer_metrics, outer_metrics_with,
    planarize, planarize_with, Cell, DensityCheck, NodeKind, OuterMetrics, Planarization, PI_LOWER, PI_UPPER,
};
pub use crossings::{crossing_report, oracle_crossings, Crossing, CrossingReport};
pub use smallcells::{
    crossing_incidence_audit, crossing_incidence_with, small_cell_classifier, small_cells_with,
    IncidenceAudit, SmallCellReport, SmallCellType,
};
