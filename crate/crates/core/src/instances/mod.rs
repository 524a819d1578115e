//! Ready-made algebra and space instances, plus the named catalog backing
//! the command-line interface.

pub mod algebras;
pub mod catalog;
pub mod spaces;
