//! Front end for the seqcm engine: session files in, reports out.

pub mod fixtures;
pub mod parse;
pub mod report;

pub use fixtures::{fixtures, Fixture};
pub use parse::{parse_input, Command, IdealDecl, ParseError, Property, SessionInput};
pub use report::{render_human, run_command, ReportDocument, RunOptions};
