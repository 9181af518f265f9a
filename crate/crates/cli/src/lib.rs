//! Library surface of the `nonsep` binary: instance parsing and canonical
//! serialization, report shapes, and SVG rendering. Kept as a lib target
//! so integration tests can drive the same code paths the binary uses.

pub mod instance;
pub mod render;
pub mod report;
