//! Library side of the `tautilt` CLI: table rendering, the persistent count
//! cache, golden tables, and the verification harness.

pub mod cache;
pub mod golden;
pub mod table;
pub mod verify;
