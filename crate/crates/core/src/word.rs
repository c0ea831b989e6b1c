//! The tribonacci word: the fixed point of `σ: 0 ↦ 01, 1 ↦ 02, 2 ↦ 0`.
//!
//! Three ways to get at its letters live here:
//!
//! * [`tribo_word`] builds the finite words `tw(l)` by the concatenation
//!   recursion `tw(l) = tw(l-1) tw(l-2) tw(l-3)`;
//! * a process-wide prefix cache, grown on demand by re-applying `σ` to the
//!   current prefix, backs [`t_at`] and [`prefix`] and keeps per-letter
//!   position lists for select-by-scan;
//! * [`WordStream`] is an unbounded iterator that needs only `O(log n)`
//!   memory for `n` emitted symbols.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers;
use crate::probe;
use crate::rank;

/// The three letter classes. `A`, `B`, `C` record the positions of the
/// symbols 1, 0, 2 of the word; the same digits spell ABC words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    /// Symbol of the tribonacci word (and ABC digit) for this class.
    pub const fn symbol(self) -> u8 {
        match self {
            Letter::A => 1,
            Letter::B => 0,
            Letter::C => 2,
        }
    }

    pub const fn from_symbol(s: u8) -> Option<Letter> {
        match s {
            0 => Some(Letter::B),
            1 => Some(Letter::A),
            2 => Some(Letter::C),
            _ => None,
        }
    }

    pub const fn digit(self) -> char {
        (b'0' + self.symbol()) as char
    }

    pub fn from_digit(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::B),
            '1' => Some(Letter::A),
            '2' => Some(Letter::C),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Letter::A => "A",
            Letter::B => "B",
            Letter::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Letter::A),
            "B" | "b" => Ok(Letter::B),
            "C" | "c" => Ok(Letter::C),
            other => Err(Error::OutOfDomain(format!(
                "unknown letter class {other:?}"
            ))),
        }
    }
}

/// A finite word over `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TriboWord(Vec<u8>);

impl TriboWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(position) = symbols.iter().position(|&s| s > 2) {
            return Err(Error::InvalidSymbol {
                position,
                found: char::from_digit(symbols[position] as u32, 36).unwrap_or('?'),
            });
        }
        Ok(TriboWord(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TriboWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", (b'0' + s) as char)?;
        }
        Ok(())
    }
}

impl FromStr for TriboWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0'..='2' => Ok(c as u8 - b'0'),
                found => Err(Error::InvalidSymbol { position, found }),
            })
            .collect::<Result<Vec<_>>>()
            .map(TriboWord)
    }
}

#[inline]
fn image(s: u8) -> &'static [u8] {
    match s {
        0 => &[0, 1],
        1 => &[0, 2],
        _ => &[0],
    }
}

fn apply_slice(w: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &s in w {
        out.extend_from_slice(image(s));
    }
    out
}

/// Applies `σ` letterwise.
pub fn morphism_apply(w: &TriboWord) -> TriboWord {
    TriboWord(apply_slice(&w.0))
}

/// Inverse of `σ`: `01 ↦ 0`, `02 ↦ 1`, then a leftover `0 ↦ 2`.
pub fn morphism_inverse(w: &TriboWord) -> Result<TriboWord> {
    let s = &w.0;
    let mut out = Vec::with_capacity(s.len());
    let mut i = 0;
    while i < s.len() {
        if s[i] != 0 {
            return Err(Error::NotInImage { position: i });
        }
        match s.get(i + 1) {
            Some(1) => {
                out.push(0);
                i += 2;
            }
            Some(2) => {
                out.push(1);
                i += 2;
            }
            _ => {
                out.push(2);
                i += 1;
            }
        }
    }
    Ok(TriboWord(out))
}

/// Longest word [`tribo_word`] and [`prefix`] will build.
pub const CAPACITY: u64 = 1 << 31;

/// `tw(l)`, of length `T(l+2)`.
pub fn tribo_word(l: u32) -> Result<TriboWord> {
    let len = numbers::tribonacci(numbers::TriboIndex(l.saturating_add(2)))?;
    if len > CAPACITY {
        return Err(Error::Capacity {
            requested: len,
            limit: CAPACITY,
        });
    }
    let mut w: [Vec<u8>; 3] = [vec![2], vec![0], vec![0, 1]];
    if l < 3 {
        return Ok(TriboWord(w[l as usize].clone()));
    }
    for _ in 3..=l {
        let mut next = Vec::with_capacity(w[2].len() + w[1].len() + w[0].len());
        next.extend_from_slice(&w[2]);
        next.extend_from_slice(&w[1]);
        next.extend_from_slice(&w[0]);
        w.rotate_left(1);
        w[2] = next;
    }
    let [_, _, top] = w;
    Ok(TriboWord(top))
}

struct PrefixCache {
    word: Vec<u8>,
    /// Positions of each symbol, indexed by symbol value.
    positions: [Vec<u64>; 3],
}

impl PrefixCache {
    fn grow_to(&mut self, len: usize) {
        while self.word.len() < len {
            let next = apply_slice(&self.word);
            for (i, &s) in next.iter().enumerate().skip(self.word.len()) {
                self.positions[s as usize].push(i as u64);
            }
            self.word = next;
        }
    }
}

fn cache() -> &'static RwLock<PrefixCache> {
    static CACHE: OnceLock<RwLock<PrefixCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(PrefixCache {
            word: vec![0],
            positions: [vec![0], Vec::new(), Vec::new()],
        })
    })
}

/// Runs `f` on the cached prefix once it is at least `len` long.
fn with_prefix<R>(len: u64, f: impl FnOnce(&PrefixCache) -> R) -> Result<R> {
    if len > CAPACITY {
        return Err(Error::Capacity {
            requested: len,
            limit: CAPACITY,
        });
    }
    {
        let guard = cache().read().unwrap_or_else(|e| e.into_inner());
        if guard.word.len() as u64 >= len {
            return Ok(f(&guard));
        }
    }
    let mut guard = cache().write().unwrap_or_else(|e| e.into_inner());
    guard.grow_to(len as usize);
    Ok(f(&guard))
}

/// The first `len` symbols of the infinite word.
pub fn prefix(len: u64) -> Result<TriboWord> {
    probe::touch();
    with_prefix(len, |c| TriboWord(c.word[..len as usize].to_vec()))
}

/// `t(n)`, the `n`-th symbol of the infinite word.
///
/// Indices inside the cache capacity are served from the cached prefix;
/// beyond it the symbol is recovered from two rank queries.
pub fn t_at(n: u64) -> u8 {
    probe::touch();
    if n < CAPACITY {
        with_prefix(n + 1, |c| c.word[n as usize]).expect("index checked against capacity")
    } else {
        rank::letter_at(n).symbol()
    }
}

/// Position of the `k`-th occurrence (0-offset) of `letter`, by scanning the cached prefix.
pub(crate) fn scan_position(letter: Letter, k: u64) -> Result<u64> {
    probe::touch();
    let s = letter.symbol() as usize;
    // Every letter recurs with gaps of at most 7, so 7(k+1) symbols are enough.
    let needed = k
        .checked_add(1)
        .and_then(|v| v.checked_mul(7))
        .ok_or(Error::Overflow("letter position"))?;
    with_prefix(needed.min(CAPACITY), |c| {
        c.positions[s].get(k as usize).copied()
    })?
    .ok_or(Error::Capacity {
        requested: needed,
        limit: CAPACITY,
    })
}

/// Counts of symbols 0, 1, 2 among the first `len` symbols of the cached prefix.
pub(crate) fn scan_counts(len: u64) -> Result<[u64; 3]> {
    with_prefix(len, |c| {
        c.positions
            .each_ref()
            .map(|p| p.partition_point(|&i| i < len) as u64)
    })
}

/// Characteristic value `k_X(n)`, 1 exactly when `t(n)` belongs to class `x`.
pub fn char_value(x: Letter, n: u64) -> u8 {
    let t = t_at(n) as i32;
    let k = match x {
        Letter::A => t * (2 - t),
        Letter::B => (t - 1) * (t - 2) / 2,
        Letter::C => t * (t - 1) / 2,
    };
    k as u8
}

#[derive(Debug, Default, Clone)]
struct Level {
    buf: [u8; 2],
    len: u8,
    pos: u8,
    consumed: u64,
}

/// Unbounded iterator over `t(0), t(1), ...`.
///
/// Uses `t = σ(t)`: each level expands the symbols of the level below it,
/// which runs at roughly half speed, so `n` symbols need about
/// `log_1.84(n)` levels of two-symbol buffers.
#[derive(Debug, Default, Clone)]
pub struct WordStream {
    levels: Vec<Level>,
    emitted: u64,
}

impl WordStream {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of symbols yielded so far.
    pub fn position(&self) -> u64 {
        self.emitted
    }

    fn pull(&mut self, depth: usize) -> u8 {
        if depth == self.levels.len() {
            self.levels.push(Level::default());
        }
        let level = &mut self.levels[depth];
        if level.pos < level.len {
            let s = level.buf[level.pos as usize];
            level.pos += 1;
            return s;
        }
        let consumed = level.consumed;
        level.consumed += 1;
        let source = match consumed {
            0 => 0,
            1 => {
                // the level below starts over at t(0); skip it
                self.pull(depth + 1);
                self.pull(depth + 1)
            }
            _ => self.pull(depth + 1),
        };
        let img = image(source);
        let level = &mut self.levels[depth];
        level.buf[..img.len()].copy_from_slice(img);
        level.len = img.len() as u8;
        level.pos = 1;
        img[0]
    }
}

impl Iterator for WordStream {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        self.emitted += 1;
        Some(self.pull(0))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (usize::MAX, None)
    }
}

/// Shorthand for `WordStream::new()`.
pub fn word_stream() -> WordStream {
    WordStream::new()
}
