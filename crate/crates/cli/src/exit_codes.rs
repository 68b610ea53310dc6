//! Process exit codes.
//!
//! An obstruction is a valid mathematical outcome, so it has its own code
//! rather than being reported as an error.

/// Certified, or the command completed.
pub const SUCCESS: i32 = 0;
/// Unreadable, malformed or invalid input.
pub const INPUT_ERROR: i32 = 1;
/// `w_2` does not vanish; a witness was emitted.
pub const OBSTRUCTED: i32 = 2;
/// Certificate and exhaustive oracle disagree, or a self-check failed.
pub const ORACLE_DISAGREEMENT: i32 = 3;
/// A selftest property failed.
pub const SELFTEST_FAILURE: i32 = 4;
