//! Library surface of the command-line tool: the dump-format helpers shared
//! by the binary and its integration tests.

pub mod dump;
