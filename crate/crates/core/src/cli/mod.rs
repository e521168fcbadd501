//! Front end: the group-spec grammar, report documents and the golden tables.

mod document;
mod parse;
mod table;

pub use document::{
    report_json, report_markdown, run, CliRequest, Format, RunMode, RunOutput, EXIT_ERROR, EXIT_GRADED, EXIT_OK,
};
pub use parse::{
    max_rank_from_env, parse_group, parse_group_with, render, ParseOptions, DEFAULT_MAX_RANK, MAX_RANK_ENV,
};
pub use table::{table_section7, Table, TableRow};

/// JSON schema of [`report_json`] output.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");
