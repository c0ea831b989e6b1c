//! Independent reference data for the checks.
//!
//! Built from [`WordStream`] alone, so it shares nothing with the prefix
//! cache, the block decomposition or any closed form under test.

use crate::word::{Letter, WordStream};

pub struct Oracle {
    word: Vec<u8>,
    positions: [Vec<u32>; 3],
}

impl Oracle {
    /// Materializes the first `len` symbols.
    pub fn new(len: u64) -> Self {
        assert!(len <= u32::MAX as u64, "oracle length {len} too large");
        let word: Vec<u8> = WordStream::new().take(len as usize).collect();
        let mut positions: [Vec<u32>; 3] = Default::default();
        for (i, &s) in word.iter().enumerate() {
            positions[s as usize].push(i as u32);
        }
        Oracle { word, positions }
    }

    /// Big enough to look up `X(k)` for every `k ≤ max_k` and every class.
    pub fn covering(max_k: u64) -> Self {
        Oracle::new(7 * (max_k + 2))
    }

    pub fn len(&self) -> u64 {
        self.word.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn t(&self, n: u64) -> u8 {
        self.word[n as usize]
    }

    /// `X(k)`.
    pub fn seq(&self, x: Letter, k: u64) -> u64 {
        let p = &self.positions[x.symbol() as usize];
        assert!((k as usize) < p.len(), "oracle too short for {x}({k})");
        p[k as usize] as u64
    }

    /// Positions of symbol `s`.
    pub fn positions(&self, s: u8) -> &[u32] {
        &self.positions[s as usize]
    }

    /// `z_X(n)` for `n ≥ -1`.
    pub fn count(&self, x: Letter, n: i64) -> u64 {
        assert!(n < self.len() as i64, "oracle too short for position {n}");
        self.positions[x.symbol() as usize].partition_point(|&p| (p as i64) <= n) as u64
    }

    /// `[z_B(n), z_A(n), z_C(n)]`, indexed by symbol.
    pub fn counts(&self, n: i64) -> [u64; 3] {
        [
            self.count(Letter::B, n),
            self.count(Letter::A, n),
            self.count(Letter::C, n),
        ]
    }

    /// `z(n) = Σ_{k ≤ n} t(k)`.
    pub fn z(&self, n: i64) -> u64 {
        self.count(Letter::A, n) + 2 * self.count(Letter::C, n)
    }
}
