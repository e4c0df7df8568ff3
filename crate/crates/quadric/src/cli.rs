//! Command-line front end.

/// Entry point for the `quadric` binary; returns the process exit code.
pub fn main() -> i32 {
    0
}
