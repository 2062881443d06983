//! Verification suites and command plumbing for the `ev` binary.

pub mod commands;
pub mod suites;

pub use suites::{run_all, run_criterion, Check, Config, Tally, CRITERIA};

/// Exit codes of the `ev` binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const BAD_FLAGS: i32 = 2;
    pub const CONTRACT: i32 = 3;
    pub const SIZE_BOUND: i32 = 4;
}
