//! The position sequences `A`, `B`, `C` and their closed forms.
//!
//! `A(n)`, `B(n)` and `C(n)` are the positions of the `n`-th 1, 0 and 2 of the
//! tribonacci word (offset 0). Every closed form below is written in terms of
//! the counting functions `z_A`, `z_B`, `z_C`, `z` of [`crate::rank`] with the
//! convention that counts at position `-1` are zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::probe;
use crate::rank::{self, RankProfile};
use crate::word::{self, Letter};

fn to_u64(v: i128, what: &'static str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow(what))
}

fn position(n: u64) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Overflow("position"))
}

/// Counts `z_X(n - 1)`, i.e. over the first `n` symbols.
fn counts_before(n: u64) -> RankProfile {
    let counts = rank::symbol_counts(n);
    RankProfile::from_symbol_counts(n as i64 - 1, counts)
}

/// `X(n)` by scanning the cached word prefix.
pub fn seq(x: Letter, n: u64) -> Result<u64> {
    word::scan_position(x, n)
}

/// `X(n)` by binary search over `rank_fast`; unbounded by the cache capacity.
pub fn select(x: Letter, n: u64) -> Result<u64> {
    rank::select(x, n)
}

/// `X(n)` from its closed form:
///
/// * `A(n) = 4n + 1 - z(n-1)`
/// * `B(n) = 2n - z_C(n-1)`
/// * `C(n) = 7n + 3 - (z_A(n-1) + 3 z_C(n-1))`
pub fn seq_closed(x: Letter, n: u64) -> Result<u64> {
    probe::touch();
    position(n)?;
    let z = counts_before(n);
    let n = n as i128;
    let (za, zc, zw) = (z.count_a as i128, z.count_c as i128, z.weighted as i128);
    let v = match x {
        Letter::A => 4 * n + 1 - zw,
        Letter::B => 2 * n - zc,
        Letter::C => 7 * n + 3 - (za + 3 * zc),
    };
    to_u64(v, "sequence value")
}

/// The zeros of the word split by their successor: `B0`, `B1`, `B2` list the
/// positions `k` with `t(k) = 0` and `t(k+1) = 0, 1, 2` respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BType {
    Zero,
    One,
    Two,
}

impl BType {
    pub const ALL: [BType; 3] = [BType::Zero, BType::One, BType::Two];

    pub fn from_successor(s: u8) -> Result<Self> {
        match s {
            0 => Ok(BType::Zero),
            1 => Ok(BType::One),
            2 => Ok(BType::Two),
            _ => Err(Error::OutOfDomain(format!("B type {s}"))),
        }
    }

    pub fn successor(self) -> u8 {
        match self {
            BType::Zero => 0,
            BType::One => 1,
            BType::Two => 2,
        }
    }
}

/// `B0(n) = 2C(n) - n`, `B1(n) = A(n) - 1`, `B2(n) = C(n) - 1`.
pub fn seq_b_typed(ty: BType, n: u64) -> Result<u64> {
    let v = match ty {
        BType::Zero => 2 * seq_closed(Letter::C, n)? as i128 - n as i128,
        BType::One => seq_closed(Letter::A, n)? as i128 - 1,
        BType::Two => seq_closed(Letter::C, n)? as i128 - 1,
    };
    to_u64(v, "B-type value")
}

/// The same three sequences written directly in the counting functions:
/// `B0(n) = 13n + 6 - 2(z_A(n-1) + 3 z_C(n-1))`, `B1(n) = 4n - z(n-1)`,
/// `B2(n) = 7n + 2 - (z_A(n-1) + 3 z_C(n-1))`.
pub fn seq_b_typed_counting(ty: BType, n: u64) -> Result<u64> {
    probe::touch();
    position(n)?;
    let z = counts_before(n);
    let n = n as i128;
    let (za, zc, zw) = (z.count_a as i128, z.count_c as i128, z.weighted as i128);
    let v = match ty {
        BType::Zero => 13 * n + 6 - 2 * (za + 3 * zc),
        BType::One => 4 * n - zw,
        BType::Two => 7 * n + 2 - (za + 3 * zc),
    };
    to_u64(v, "B-type value")
}

/// A nonnegative integer `n` written as `X(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub letter: Letter,
    pub index: u64,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.letter, self.index)
    }
}

/// Finds the unique `(X, k)` with `X(k) = n`, in `O(log n)`.
pub fn classify(n: u64) -> Result<Classification> {
    probe::touch();
    let through_len = n.checked_add(1).ok_or(Error::Overflow("position"))?;
    position(through_len)?;
    let before = rank::symbol_counts(n);
    let through = rank::symbol_counts(through_len);
    let s = (0..3)
        .find(|&s| through[s] > before[s])
        .expect("exactly one count grows");
    Ok(Classification {
        letter: Letter::from_symbol(s as u8).expect("symbol in range"),
        index: through[s] - 1,
    })
}

/// Closed form of `X(Y(k) + 1)` (`shifted`) or `X(Y(k))`, in terms of `A(k)`, `B(k)` and `k`.
pub fn compose(x: Letter, y: Letter, k: u64, shifted: bool) -> Result<u64> {
    let a = seq_closed(Letter::A, k)? as i128;
    let b = seq_closed(Letter::B, k)? as i128;
    let k = k as i128;
    use Letter::{A, B, C};
    let (plus_one, drop) = match (x, y) {
        (A, A) => (2 * (a + b) + k + 6, 3),
        (A, B) => (a + b + k + 4, 4),
        (A, C) => (4 * a + 3 * b + 2 * (k + 5), 2),
        (B, A) => (a + b + k + 3, 2),
        (B, B) => (a + 1, 2),
        (B, C) => (2 * (a + b) + k + 5, 1),
        (C, A) => (4 * a + 3 * b + 2 * (k + 6), 6),
        (C, B) => (2 * (a + b) + k + 8, 7),
        (C, C) => (7 * a + 6 * b + 4 * (k + 5), 4),
    };
    let v = if shifted { plus_one } else { plus_one - drop };
    to_u64(v, "composition value")
}

/// Closed form of `z(X(k))`.
pub fn z_of_seq(x: Letter, k: u64) -> Result<u64> {
    let a = seq_closed(Letter::A, k)? as i128;
    let b = seq_closed(Letter::B, k)? as i128;
    let k = k as i128;
    let v = match x {
        Letter::A => 2 * (a - b) - k - 1,
        Letter::B => -a + 3 * b - k + 1,
        Letter::C => b + 2 * k + 3,
    };
    to_u64(v, "weighted count")
}

/// Closed form of `z_X(Y(k))`.
pub fn rank_of_seq(x: Letter, y: Letter, k: u64) -> Result<u64> {
    let a = seq_closed(Letter::A, k)? as i128;
    let b = seq_closed(Letter::B, k)? as i128;
    let k = k as i128;
    use Letter::{A, B, C};
    let v = match (x, y) {
        (A, A) | (B, B) | (C, C) => k + 1,
        (A, B) | (C, A) => a - b - (k + 1),
        (A, C) | (B, A) => b + 1,
        (B, C) => a + 1,
        (C, B) => 2 * b - a + 1,
    };
    to_u64(v, "letter count")
}

/// The counting functions at `n ≥ -1` from `A(n+1)` and `B(n+1)`:
/// `z_A(n) = 2B(n+1) - A(n+1) + 1`, `z_B(n) = A(n+1) - B(n+1) - (n+2)`,
/// `z_C(n) = 2(n+1) - B(n+1)`.
pub fn rank_closed(n: i64) -> Result<RankProfile> {
    if n < -1 {
        return Err(Error::OutOfDomain(format!("rank position {n} < -1")));
    }
    let next = (n + 1) as u64;
    let a = seq_closed(Letter::A, next)? as i128;
    let b = seq_closed(Letter::B, next)? as i128;
    let n1 = n as i128 + 1;
    let za = to_u64(2 * b - a + 1, "letter count")?;
    let zb = to_u64(a - b - (n1 + 1), "letter count")?;
    let zc = to_u64(2 * n1 - b, "letter count")?;
    Ok(RankProfile::from_symbol_counts(n, [zb, za, zc]))
}

/// `C(n) - A(n) - B(n) - n - 2`, which vanishes for every `n`.
///
/// Evaluated with select over the word, not through the closed forms.
pub fn abc_identity_gap(n: u64) -> Result<i128> {
    let a = select(Letter::A, n)? as i128;
    let b = select(Letter::B, n)? as i128;
    let c = select(Letter::C, n)? as i128;
    Ok(c - a - b - n as i128 - 2)
}

/// The offset-1 sequences `a`, `b`, `c` recording the positions of 0, 1, 2
/// in the word read with offset 1 (OEIS A003144, A003145, A003146).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LegacyLetter {
    A,
    B,
    C,
}

impl FromStr for LegacyLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(LegacyLetter::A),
            "b" => Ok(LegacyLetter::B),
            "c" => Ok(LegacyLetter::C),
            other => Err(Error::OutOfDomain(format!(
                "unknown legacy sequence {other:?}"
            ))),
        }
    }
}

/// `a(n) = B(n-1) + 1`, `b(n) = A(n-1) + 1`, `c(n) = C(n-1) + 1` for `n ≥ 1`.
pub fn legacy_abc(which: LegacyLetter, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::OutOfDomain("legacy sequences start at n = 1".into()));
    }
    let letter = match which {
        LegacyLetter::A => Letter::B,
        LegacyLetter::B => Letter::A,
        LegacyLetter::C => Letter::C,
    };
    seq_closed(letter, n - 1)?
        .checked_add(1)
        .ok_or(Error::Overflow("legacy sequence value"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{A, B, C};

    #[test]
    fn seq_examples() {
        assert_eq!(seq(A, 0).unwrap(), 1);
        assert_eq!(seq(B, 3).unwrap(), 6);
        assert_eq!(seq(C, 1).unwrap(), 10);
    }

    #[test]
    fn seq_closed_examples() {
        assert_eq!(seq_closed(A, 1).unwrap(), 5);
        assert_eq!(seq_closed(B, 0).unwrap(), 0);
        assert_eq!(seq_closed(C, 4).unwrap(), 27);
    }

    #[test]
    fn b_typed_examples() {
        assert_eq!(seq_b_typed(BType::Zero, 0).unwrap(), 6);
        assert_eq!(seq_b_typed(BType::One, 0).unwrap(), 0);
        assert_eq!(seq_b_typed(BType::Two, 3).unwrap(), 22);
        for ty in BType::ALL {
            for n in 0..200 {
                assert_eq!(seq_b_typed(ty, n), seq_b_typed_counting(ty, n));
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(38).unwrap(),
            Classification {
                letter: A,
                index: 11
            }
        );
        assert_eq!(
            classify(0).unwrap(),
            Classification {
                letter: B,
                index: 0
            }
        );
        assert_eq!(
            classify(3).unwrap(),
            Classification {
                letter: C,
                index: 0
            }
        );
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(A, A, 0, true).unwrap(), 8);
        assert_eq!(compose(B, B, 0, true).unwrap(), 2);
        assert_eq!(compose(C, C, 0, false).unwrap(), 23);
    }

    #[test]
    fn z_of_seq_examples() {
        assert_eq!(z_of_seq(C, 0).unwrap(), 3);
        assert_eq!(z_of_seq(A, 0).unwrap(), 1);
        assert_eq!(z_of_seq(B, 0).unwrap(), 0);
    }

    #[test]
    fn rank_of_seq_examples() {
        assert_eq!(rank_of_seq(B, C, 0).unwrap(), 2);
        assert_eq!(rank_of_seq(A, A, 5).unwrap(), 6);
        assert_eq!(rank_of_seq(C, B, 1).unwrap(), 0);
    }

    #[test]
    fn identity_gap_examples() {
        assert_eq!(abc_identity_gap(0).unwrap(), 0);
        assert_eq!(abc_identity_gap(19).unwrap(), 0);
        assert_eq!(abc_identity_gap(100_000).unwrap(), 0);
    }

    #[test]
    fn legacy_examples() {
        assert_eq!(legacy_abc(LegacyLetter::A, 1).unwrap(), 1);
        assert_eq!(legacy_abc(LegacyLetter::B, 2).unwrap(), 6);
        assert_eq!(legacy_abc(LegacyLetter::C, 1).unwrap(), 4);
        assert!(matches!(
            legacy_abc(LegacyLetter::A, 0),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn rank_closed_at_minus_one_is_empty() {
        let p = rank_closed(-1).unwrap();
        assert_eq!((p.count_a, p.count_b, p.count_c, p.weighted), (0, 0, 0, 0));
        for n in -1..500i64 {
            assert_eq!(rank_closed(n).unwrap(), rank::rank(n).unwrap());
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            seq_closed(C, u64::MAX / 2),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(seq_closed(A, u64::MAX), Err(Error::Overflow(_))));
    }
}
