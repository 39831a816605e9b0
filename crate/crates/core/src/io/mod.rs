//! Reading algebra presentations and running commands on them.

pub mod command;
pub mod document;
pub mod report;

pub use command::{run_command, Command, Options, TrivChoice};
pub use document::{parse_input, parse_str, InputDocument, Kind};
pub use report::{CheckResult, RunReport, Status};
