//! Parsers, file formats, and golden artifacts for the `inflogic` binary.

pub mod goldens;
pub mod lex;
pub mod parse;
pub mod records;
