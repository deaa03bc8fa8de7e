//! Acceptance checks for `cmlab` live in `tests/acceptance.rs`; run them with
//! `cargo test -p cmlab-acceptance -- --nocapture` to see one line per
//! criterion.
