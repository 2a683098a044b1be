//! Statement registry, scan engine and the acceptance suite.

pub mod criteria;
pub mod registry;
pub mod scan;

pub use criteria::{run, run_criterion, table, CriterionResult, VerifyConfig, ALL, QUICK};
pub use registry::{evaluate, Conclusion, EvalOptions, HypothesisPart, Subject, TheoremId, TheoremVerdict, VerdictStatus};
pub use scan::{persist, scan, Candidate, Counts, Sample, ScanOptions, ScanStatus, SearchRecord, Space};
