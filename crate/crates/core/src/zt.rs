//! ZT words: the unique tribonacci (Zeckendorf-like) representation.
//!
//! `N = Σ f_i T(i+3)` with digits `f_i ∈ {0, 1}`, no three consecutive ones,
//! and a leading one. The word is printed most significant digit first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::numbers::{floor_index, t};
use crate::probe;

/// Ways a digit string can fail to be a ZT word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZtViolation {
    #[error("empty word")]
    Empty,
    #[error("non-binary symbol {found:?} at position {position}")]
    NonBinary { position: usize, found: char },
    #[error("leading zero")]
    LeadingZero,
    #[error("three consecutive ones at position {position}")]
    TripleOnes { position: usize },
}

/// Checks a digit string against the ZT word rules.
pub fn zt_validate(digits: &str) -> std::result::Result<(), ZtViolation> {
    if digits.is_empty() {
        return Err(ZtViolation::Empty);
    }
    if let Some((position, found)) = digits
        .chars()
        .enumerate()
        .find(|(_, c)| !matches!(c, '0' | '1'))
    {
        return Err(ZtViolation::NonBinary { position, found });
    }
    if digits.starts_with('0') {
        return Err(ZtViolation::LeadingZero);
    }
    if let Some(position) = digits.find("111") {
        return Err(ZtViolation::TripleOnes { position });
    }
    Ok(())
}

/// A valid ZT word, most significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZtWord(Vec<u8>);

impl ZtWord {
    /// Wraps digits (each 0 or 1) after validating them.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        let text: String = digits
            .iter()
            .map(|&d| char::from_digit(d as u32, 10).unwrap_or('?'))
            .collect();
        zt_validate(&text)?;
        Ok(ZtWord(digits))
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for ZtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            f.write_str(if d == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ZtWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        zt_validate(s)?;
        Ok(ZtWord(s.bytes().map(|b| b - b'0').collect()))
    }
}

/// The steps of the greedy encoder.
///
/// `remainders` runs from `N` down to 0; `floors[j]` is the largest
/// tribonacci number not exceeding `remainders[j]` and `indices[j]` is the
/// digit position `i` with `floors[j] = T(i+3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub remainders: Vec<u64>,
    pub floors: Vec<u64>,
    pub indices: Vec<u32>,
}

/// Greedy encoding of `n ≥ 1`, together with its trace.
pub fn zt_encode_traced(n: u64) -> Result<(ZtWord, GreedyTrace)> {
    probe::touch();
    if n == 0 {
        return Err(Error::NoRepresentation(0));
    }
    let mut trace = GreedyTrace {
        remainders: vec![n],
        floors: Vec::new(),
        indices: Vec::new(),
    };
    let mut rest = n;
    while rest > 0 {
        let l = floor_index(rest);
        trace.floors.push(t(l));
        trace.indices.push((l - 3) as u32);
        rest -= t(l);
        trace.remainders.push(rest);
    }
    let top = trace.indices[0] as usize;
    let mut digits = vec![0u8; top + 1];
    for &i in &trace.indices {
        digits[top - i as usize] = 1;
    }
    Ok((ZtWord(digits), trace))
}

pub fn zt_encode(n: u64) -> Result<ZtWord> {
    zt_encode_traced(n).map(|(w, _)| w)
}

/// `Σ f_i T(i+3)`.
pub fn zt_decode(w: &ZtWord) -> Result<u64> {
    probe::touch();
    let top = w.0.len() - 1;
    if top + 3 > crate::numbers::max_index() as usize {
        return Err(Error::Overflow("ZT value"));
    }
    w.0.iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .try_fold(0u64, |acc, (pos, _)| acc.checked_add(t(top - pos + 3)))
        .ok_or(Error::Overflow("ZT value"))
}

/// Length of the ZT word of `n ≥ 1`.
pub fn zt_length(n: u64) -> Result<usize> {
    probe::touch();
    if n == 0 {
        return Err(Error::NoRepresentation(0));
    }
    Ok(floor_index(n) - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_examples() {
        assert_eq!(zt_encode(1).unwrap().to_string(), "1");
        assert_eq!(zt_encode(30).unwrap().to_string(), "100110");
        let (w, trace) = zt_encode_traced(263).unwrap();
        assert_eq!(w.to_string(), "110101010");
        assert_eq!(trace.floors, vec![149, 81, 24, 7, 2]);
        assert_eq!(trace.indices, vec![8, 7, 5, 3, 1]);
        assert_eq!(trace.remainders, vec![263, 114, 33, 9, 2, 0]);
    }

    #[test]
    fn zero_has_no_representation() {
        assert_eq!(zt_encode(0), Err(Error::NoRepresentation(0)));
        assert_eq!(zt_length(0), Err(Error::NoRepresentation(0)));
    }

    #[test]
    fn decode_examples() {
        let d = |s: &str| zt_decode(&s.parse().unwrap()).unwrap();
        assert_eq!(d("1010"), 9);
        assert_eq!(d("1"), 1);
        assert_eq!(d("10010110"), 100);
    }

    #[test]
    fn validate_examples() {
        assert_eq!(zt_validate("110110"), Ok(()));
        assert_eq!(
            zt_validate("111"),
            Err(ZtViolation::TripleOnes { position: 0 })
        );
        assert_eq!(zt_validate("010"), Err(ZtViolation::LeadingZero));
        assert_eq!(zt_validate(""), Err(ZtViolation::Empty));
        assert_eq!(
            zt_validate("1021"),
            Err(ZtViolation::NonBinary {
                position: 2,
                found: '2'
            })
        );
        assert!(matches!(
            "0111".parse::<ZtWord>(),
            Err(Error::InvalidZt(ZtViolation::LeadingZero))
        ));
    }

    #[test]
    fn length_examples() {
        assert_eq!(zt_length(1).unwrap(), 1);
        assert_eq!(zt_length(6).unwrap(), 3);
        assert_eq!(zt_length(13).unwrap(), 5);
        assert_eq!(zt_length(100).unwrap(), 8);
    }

    #[test]
    fn decode_overflow() {
        let long = format!("1{}", "0".repeat(80));
        assert_eq!(
            zt_decode(&long.parse().unwrap()),
            Err(Error::Overflow("ZT value"))
        );
    }

    #[test]
    fn largest_value_round_trips() {
        let w = zt_encode(u64::MAX).unwrap();
        assert_eq!(zt_decode(&w).unwrap(), u64::MAX);
    }
}
