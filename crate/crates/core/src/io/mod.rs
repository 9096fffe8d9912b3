//! Group definition files, report rendering and the result cache.

pub mod cache;
pub mod format;
pub mod report;

pub use cache::ResultCache;
pub use format::{parse_document, parse_group, DocumentBody, GroupDocument, LoadedGroup, Word, FORMAT_VERSION};
pub use report::{emit_reports, emit_summary, EmitOptions, ReportFormat};
