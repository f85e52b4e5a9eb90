//! Standard-library companion to `hookbias-core`: an on-disk cache for
//! exact tables, rayon-parallel drivers, text and JSON reports, and the
//! `hookbias` command line.

pub mod cache;
pub mod cli;
pub mod parallel;
pub mod report;

