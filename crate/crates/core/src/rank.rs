//! Rank and select over the tribonacci word.
//!
//! [`rank`] counts by scanning the cached prefix. [`rank_fast`] splits the
//! prefix of length `n + 1` greedily into blocks `tw(l)`: the prefix of length
//! `T(l+2)` is `tw(l)`, and what follows it inside `tw(l+1) = tw(l) tw(l-1) tw(l-2)`
//! is again a prefix of the word. Each block contributes `T(l+1)` zeros,
//! `T(l)` ones and `T(l-1)` twos, so a query costs `O(log n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{floor_index, t};
use crate::probe;
use crate::word::{self, Letter};

/// Letter counts of `t(0..=position)` and their weighted sum `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankProfile {
    /// `n ≥ -1`; at `-1` the prefix is empty.
    pub position: i64,
    /// `z_A(n)`: number of 1s.
    pub count_a: u64,
    /// `z_B(n)`: number of 0s.
    pub count_b: u64,
    /// `z_C(n)`: number of 2s.
    pub count_c: u64,
    /// `z(n) = z_A(n) + 2 z_C(n)`.
    pub weighted: u64,
}

impl RankProfile {
    /// Builds the profile at `position` from counts of the symbols 0, 1, 2.
    pub(crate) fn from_symbol_counts(position: i64, counts: [u64; 3]) -> Self {
        let [zeros, ones, twos] = counts;
        RankProfile {
            position,
            count_a: ones,
            count_b: zeros,
            count_c: twos,
            weighted: ones + 2 * twos,
        }
    }

    pub fn count(&self, x: Letter) -> u64 {
        match x {
            Letter::A => self.count_a,
            Letter::B => self.count_b,
            Letter::C => self.count_c,
        }
    }
}

fn prefix_len(n: i64) -> Result<u64> {
    if n < -1 {
        return Err(Error::OutOfDomain(format!("rank position {n} < -1")));
    }
    Ok((n + 1) as u64)
}

/// Brute-force rank over the cached prefix.
pub fn rank(n: i64) -> Result<RankProfile> {
    probe::touch();
    let len = prefix_len(n)?;
    Ok(RankProfile::from_symbol_counts(n, word::scan_counts(len)?))
}

/// Counts of symbols 0, 1, 2 among the first `len` symbols, in `O(log len)`.
pub(crate) fn symbol_counts(len: u64) -> [u64; 3] {
    probe::touch();
    let mut counts = [0u64; 3];
    let mut rest = len;
    while rest > 0 {
        // block tw(l) with l = j - 2 >= 1 has length T(j)
        let j = floor_index(rest);
        counts[0] += t(j - 1);
        counts[1] += t(j - 2);
        counts[2] += t(j - 3);
        rest -= t(j);
    }
    counts
}

/// Rank via block decomposition; agrees with [`rank`] everywhere.
pub fn rank_fast(n: i64) -> Result<RankProfile> {
    let len = prefix_len(n)?;
    let counts = symbol_counts(len);
    // z = ones + 2 twos stays below 2 len, which fits for len < 2^63
    Ok(RankProfile::from_symbol_counts(n, counts))
}

/// Letter class of `t(n)` from two rank queries.
pub fn letter_at(n: u64) -> Letter {
    let before = symbol_counts(n);
    let through = symbol_counts(n + 1);
    let s = (0..3)
        .find(|&s| through[s] > before[s])
        .expect("exactly one count grows");
    Letter::from_symbol(s as u8).expect("symbol in range")
}

/// Position of the `k`-th (0-offset) occurrence of class `x`, by binary search over [`rank_fast`].
pub fn select(x: Letter, k: u64) -> Result<u64> {
    probe::touch();
    let s = x.symbol() as usize;
    let target = k.checked_add(1).ok_or(Error::Overflow("select index"))?;
    // gaps between equal letters are at most 7
    let mut hi = target
        .checked_mul(7)
        .filter(|&v| v < i64::MAX as u64)
        .ok_or(Error::Overflow("select position"))?;
    let mut lo = 0u64;
    // smallest prefix length whose count reaches target
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if symbol_counts(mid)[s] >= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo - 1)
}
