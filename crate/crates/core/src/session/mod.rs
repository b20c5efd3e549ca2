//! Session files, the task runner and JSON reports.

pub mod expr;
pub mod parser;
pub mod run;
pub mod corpus;

pub use expr::{parse_ideal, parse_polynomial, parse_polynomials};
pub use parser::{parse_session, Binding, Family, Session, Task, TaskKind, TaskOptions, SESSION_VERSION};
pub use run::{run_tasks, Report, RunOptions, LOCALIZATION_NOTE, REPORT_SCHEMA, REPORT_SCHEMA_VERSION};
pub use corpus::{corpus, verify_entries, verify_paper_corpus, CorpusEntry, CorpusReport};
