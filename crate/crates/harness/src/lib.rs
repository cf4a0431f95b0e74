pub mod cli;
pub mod corpus;
pub mod files;
pub mod literal;
pub mod report;
pub mod suites;
