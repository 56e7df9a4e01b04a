//! The size-preserving bijection between normal planar lambda terms and
//! rooted planar maps, with the counting used to check it.

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod io;
pub mod lambda;
pub mod maps;
pub mod strategy;
