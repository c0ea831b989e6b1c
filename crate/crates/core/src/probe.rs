//! Per-thread counter of numeric evaluations.
//!
//! Every entry point that computes with integer values (tribonacci numbers,
//! rank and select, the sequences, the two decoders and encoders) bumps this
//! counter. The string transforms in [`crate::equiv`] never do, which the
//! equivalence tests assert by reading the counter before and after a run.

use std::cell::Cell;

thread_local! {
    static NUMERIC_CALLS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub(crate) fn touch() {
    NUMERIC_CALLS.with(|c| c.set(c.get().wrapping_add(1)));
}

/// Numeric evaluations performed on the current thread so far.
pub fn numeric_calls() -> u64 {
    NUMERIC_CALLS.with(Cell::get)
}
