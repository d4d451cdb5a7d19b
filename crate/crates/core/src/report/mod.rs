//! Report emission: CSV/JSON tables, SVG figures and the report runner.

pub mod export;
pub mod figure;
mod run;

pub use figure::{render_figure, Bar, FigureData, FigureKind, FigureSpec, Series};
pub use run::{run_report, Analysis, AnalysisSet, ReportOptions, RunManifest, MANIFEST_FILE};
