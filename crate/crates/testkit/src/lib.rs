//! Test support: literal oracles, worked examples, a structure pool and
//! small exhaustive searches.

pub mod criteria;
pub mod examples;
pub mod fixtures;
pub mod oracle;
pub mod pool;
pub mod search;
