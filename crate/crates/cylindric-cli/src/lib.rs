//! Pieces of the command-line driver that are useful on their own.

pub mod grid;
