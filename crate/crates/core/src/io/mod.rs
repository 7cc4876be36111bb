//! Input files, the polynomial grammar, task dispatch and reports.

pub mod parser;
pub mod problem;
pub mod report;
pub mod run;

pub use parser::{parse_polynomial, parse_polynomial_at, Origin};
pub use problem::{IdealSpec, Options, ProblemFile, Settings, TaskKind, TaskSpec};
pub use report::{emit_report, Report, ReportFormat};
pub use run::run_task;
