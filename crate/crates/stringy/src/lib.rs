//! Command-line front end for `stringy-core`: rendering to text, JSON and
//! CSV, the reproducible tables, and argument dispatch.

pub mod cli;
pub mod render;
pub mod tables;
