//! ABC words: `N` as nested applications of the sequences `A`, `B`, `C` to 0.
//!
//! A word is written with digits `0, 1, 2` for `B, A, C`, leftmost letter
//! applied last, and always ends with the single `B` of `B(0) = 0`. So
//! `"02010"` reads `B(C(B(A(B(0)))))` = 30.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::probe;
use crate::sequences::{self, Classification};
use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbcViolation {
    #[error("empty word")]
    Empty,
    #[error("non-ternary symbol {found:?} at position {position}")]
    NonTernary { position: usize, found: char },
    #[error("word must end in 0 (the terminal B)")]
    BadTerminal,
    #[error("final B-block has exponent greater than 1")]
    DoubleBAtEnd,
}

pub fn abc_validate(letters: &str) -> std::result::Result<(), AbcViolation> {
    if letters.is_empty() {
        return Err(AbcViolation::Empty);
    }
    if let Some((position, found)) = letters
        .chars()
        .enumerate()
        .find(|(_, c)| !matches!(c, '0' | '1' | '2'))
    {
        return Err(AbcViolation::NonTernary { position, found });
    }
    if !letters.ends_with('0') {
        return Err(AbcViolation::BadTerminal);
    }
    if letters.ends_with("00") {
        return Err(AbcViolation::DoubleBAtEnd);
    }
    Ok(())
}

/// A valid ABC word in application order (leftmost applied last).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbcWord(Vec<Letter>);

impl AbcWord {
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        let text: String = letters.iter().map(|l| l.digit()).collect();
        abc_validate(&text)?;
        Ok(AbcWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The word spelled with `A`, `B`, `C`, e.g. `ABBCB`.
    pub fn to_letter_string(&self) -> String {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for AbcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.digit())?;
        }
        Ok(())
    }
}

impl FromStr for AbcWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        abc_validate(s)?;
        Ok(AbcWord(
            s.chars()
                .map(|c| Letter::from_digit(c).expect("validated"))
                .collect(),
        ))
    }
}

/// Classification chain of the encoder: `[X_N, k(N)]`, then the
/// classification of `k(N)`, and so on down to `[B, 0]`.
pub fn abc_chain(n: u64) -> Result<Vec<Classification>> {
    probe::touch();
    let mut chain = Vec::new();
    let mut current = n;
    loop {
        let c = sequences::classify(current)?;
        chain.push(c);
        if c.letter == Letter::B && c.index == 0 {
            return Ok(chain);
        }
        current = c.index;
    }
}

pub fn abc_encode(n: u64) -> Result<AbcWord> {
    Ok(AbcWord(
        abc_chain(n)?.into_iter().map(|c| c.letter).collect(),
    ))
}

/// Evaluates `X_1(X_2(...(B(0))...))` right to left.
pub fn abc_decode(w: &AbcWord) -> Result<u64> {
    probe::touch();
    let (_, applied) = w.0.split_last().expect("valid words are non-empty");
    applied
        .iter()
        .rev()
        .try_fold(0u64, |value, &letter| sequences::seq_closed(letter, value))
}

/// Run-length form of an ABC word without its terminal `B(0)`, plus letter statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockForm {
    /// `(X_j, k_j)` for `j = 1..=J`; adjacent letters differ.
    pub blocks: Vec<(Letter, u32)>,
    pub count_a: usize,
    /// Includes the terminal `B`.
    pub count_b: usize,
    pub count_c: usize,
}

impl BlockForm {
    /// `J(N)`, the number of blocks before the terminal `B`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `Σ k_j + 1`, the word length.
    pub fn total_letters(&self) -> usize {
        self.count_a + self.count_b + self.count_c
    }
}

pub fn abc_blockform(w: &AbcWord) -> BlockForm {
    let (_, applied) = w.0.split_last().expect("valid words are non-empty");
    let mut blocks: Vec<(Letter, u32)> = Vec::new();
    for &l in applied {
        match blocks.last_mut() {
            Some((last, k)) if *last == l => *k += 1,
            _ => blocks.push((l, 1)),
        }
    }
    let count = |x: Letter| w.0.iter().filter(|&&l| l == x).count();
    BlockForm {
        blocks,
        count_a: count(Letter::A),
        count_b: count(Letter::B),
        count_c: count(Letter::C),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{A, B, C};

    fn word(s: &str) -> AbcWord {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        let w = abc_encode(38).unwrap();
        assert_eq!(w.to_string(), "10020");
        assert_eq!(w.to_letter_string(), "ABBCB");
        assert_eq!(abc_encode(0).unwrap().to_string(), "0");
        assert_eq!(abc_encode(100).unwrap().to_string(), "021010");
    }

    #[test]
    fn chain_of_38() {
        let chain: Vec<(Letter, u64)> = abc_chain(38)
            .unwrap()
            .into_iter()
            .map(|c| (c.letter, c.index))
            .collect();
        assert_eq!(chain, vec![(A, 11), (B, 6), (B, 3), (C, 0), (B, 0)]);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(abc_decode(&word("020")).unwrap(), 6);
        assert_eq!(abc_decode(&word("01010")).unwrap(), 15);
        assert_eq!(abc_decode(&word("10020")).unwrap(), 38);
        assert_eq!(abc_decode(&word("0")).unwrap(), 0);
    }

    #[test]
    fn validate_examples() {
        assert_eq!(abc_validate("02010"), Ok(()));
        assert_eq!(abc_validate("0100"), Err(AbcViolation::DoubleBAtEnd));
        assert_eq!(abc_validate("1"), Err(AbcViolation::BadTerminal));
        assert_eq!(abc_validate(""), Err(AbcViolation::Empty));
        assert_eq!(
            abc_validate("0130"),
            Err(AbcViolation::NonTernary {
                position: 2,
                found: '3'
            })
        );
    }

    #[test]
    fn blockform_examples() {
        let f = abc_blockform(&word("02010"));
        assert_eq!(f.blocks, vec![(B, 1), (C, 1), (B, 1), (A, 1)]);
        assert_eq!(f.block_count(), 4);

        let f = abc_blockform(&word("0"));
        assert!(f.blocks.is_empty());
        assert_eq!(f.block_count(), 0);

        let f = abc_blockform(&word("10020"));
        assert_eq!((f.count_b, f.count_a, f.count_c), (3, 1, 1));
        assert_eq!(f.total_letters(), 5);

        let f = abc_blockform(&word("0010"));
        assert_eq!(f.blocks, vec![(B, 2), (A, 1)]);
    }

    #[test]
    fn decode_overflow() {
        let w = word(&format!("{}0", "2".repeat(40)));
        assert!(matches!(abc_decode(&w), Err(Error::Overflow(_))));
    }
}
