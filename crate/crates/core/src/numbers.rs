//! Tribonacci numbers with `T(0) = T(1) = 0`, `T(2) = 1`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::probe;

/// Index `l` of the tribonacci number `T(l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriboIndex(pub u32);

/// All tribonacci numbers representable in a `u64`.
fn table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t: Vec<u64> = vec![0, 0, 1];
        loop {
            let n = t.len();
            match t[n - 1]
                .checked_add(t[n - 2])
                .and_then(|s| s.checked_add(t[n - 3]))
            {
                Some(next) => t.push(next),
                None => break,
            }
        }
        t
    })
}

/// Largest index `l` for which `T(l)` fits in a `u64`.
pub fn max_index() -> u32 {
    (table().len() - 1) as u32
}

pub fn tribonacci(l: TriboIndex) -> Result<u64> {
    probe::touch();
    table()
        .get(l.0 as usize)
        .copied()
        .ok_or(Error::Overflow("tribonacci number"))
}

/// Table lookup without the overflow check, for indices already known to be in range.
#[inline]
pub(crate) fn t(l: usize) -> u64 {
    table()[l]
}

/// Index `l ≥ 3` of the largest `T(l) ≤ n`. `n` must be at least 1.
///
/// `T` is strictly increasing from index 3 on, so this is a binary search.
pub(crate) fn floor_index(n: u64) -> usize {
    debug_assert!(n >= 1);
    let t = &table()[3..];
    // partition_point gives the count of entries <= n; at least T(3) = 1 qualifies
    3 + t.partition_point(|&v| v <= n) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_values() {
        let got: Vec<u64> = (0..12)
            .map(|l| tribonacci(TriboIndex(l)).unwrap())
            .collect();
        assert_eq!(got, vec![0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149]);
    }

    #[test]
    fn overflow_is_reported() {
        let top = max_index();
        assert!(tribonacci(TriboIndex(top)).is_ok());
        assert_eq!(
            tribonacci(TriboIndex(top + 1)),
            Err(Error::Overflow("tribonacci number"))
        );
        // T(l) reaches u64 range near l = 75
        assert!((70..80).contains(&top));
    }

    #[test]
    fn floor_index_brackets() {
        for n in 1..2000u64 {
            let l = floor_index(n);
            assert!(t(l) <= n && n < t(l + 1), "n = {n}");
        }
        assert_eq!(floor_index(u64::MAX), max_index() as usize);
    }
}
