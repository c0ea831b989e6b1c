//! String-level conversion between ZT words and ABC words.
//!
//! The conversion never computes the represented number. It passes through
//! two intermediate words:
//!
//! ```text
//!  ZT ──zt_to_hat──▶ hat ──hat_to_abdx──▶ AB.x ──abdx_to_abc──▶ ABC
//!  ZT ◀──hat_to_zt── hat ◀──abdx_to_hat── AB.x ◀──abc_to_abdx── ABC
//! ```
//!
//! The hat word is the reversed ZT word padded with a 0 on each side. The
//! AB.x word is over the letters `A`, `B`, dot and cross, written in text as
//! `A`, `B`, `.` and `x`.
//!
//! This module only depends on the word types of the codecs, never on their
//! encoders, decoders or the sequences.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::abc::AbcWord;
use crate::error::{Error, Result};
use crate::word::Letter;
use crate::zt::ZtWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HatViolation {
    #[error("hat words have at least three digits")]
    TooShort,
    #[error("non-binary symbol {found:?} at position {position}")]
    NonBinary { position: usize, found: char },
    #[error("hat words begin with 0")]
    BadStart,
    #[error("hat words end with 10")]
    BadEnding,
    #[error("three consecutive ones at position {position}")]
    TripleOnes { position: usize },
}

/// `0 · reverse(ZT) · 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HatWord(Vec<u8>);

impl HatWord {
    pub fn from_digits(digits: Vec<u8>) -> std::result::Result<Self, HatViolation> {
        if let Some(position) = digits.iter().position(|&d| d > 1) {
            return Err(HatViolation::NonBinary {
                position,
                found: char::from_digit(digits[position] as u32, 36).unwrap_or('?'),
            });
        }
        if digits.len() < 3 {
            return Err(HatViolation::TooShort);
        }
        if digits[0] != 0 {
            return Err(HatViolation::BadStart);
        }
        if digits[digits.len() - 2..] != [1, 0] {
            return Err(HatViolation::BadEnding);
        }
        if let Some(position) = digits.windows(3).position(|w| w == [1, 1, 1]) {
            return Err(HatViolation::TripleOnes { position });
        }
        Ok(HatWord(digits))
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

impl fmt::Display for HatWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            f.write_str(if d == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for HatWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                found => Err(HatViolation::NonBinary { position, found }),
            })
            .collect::<std::result::Result<Vec<u8>, _>>()?;
        Ok(HatWord::from_digits(digits)?)
    }
}

/// Letters of the intermediate AB.x alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Abdx {
    A,
    B,
    Dot,
    Cross,
}

impl Abdx {
    pub fn as_char(self) -> char {
        match self {
            Abdx::A => 'A',
            Abdx::B => 'B',
            Abdx::Dot => '.',
            Abdx::Cross => 'x',
        }
    }

    pub fn from_char(c: char) -> Option<Abdx> {
        match c {
            'A' => Some(Abdx::A),
            'B' => Some(Abdx::B),
            '.' | '•' => Some(Abdx::Dot),
            'x' | '×' => Some(Abdx::Cross),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbdxViolation {
    #[error("empty word")]
    Empty,
    #[error("symbol {found:?} at position {position} is not one of A, B, '.', 'x'")]
    BadSymbol { position: usize, found: char },
    #[error("word must end in a single B preceded by A or xx")]
    BadEnding,
    #[error("doublet .. at position {position}")]
    DoubleDot { position: usize },
    #[error("x at position {position} is not part of xx. or a final xxB")]
    StrayCross { position: usize },
    #[error(". at position {position} is not preceded by A or xx")]
    StrayDot { position: usize },
    #[error("A at position {position} is followed neither by . nor by the final B")]
    StrayA { position: usize },
}

/// A word over `{A, B, ., x}` satisfying the structural rules of the
/// substitution output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbdxWord(Vec<Abdx>);

impl AbdxWord {
    pub fn from_letters(letters: Vec<Abdx>) -> std::result::Result<Self, AbdxViolation> {
        validate_abdx(&letters)?;
        Ok(AbdxWord(letters))
    }

    pub fn letters(&self) -> &[Abdx] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for AbdxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for AbdxWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(position, c)| {
                Abdx::from_char(c).ok_or(AbdxViolation::BadSymbol { position, found: c })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(AbdxWord::from_letters(letters)?)
    }
}

/// Checks the structural rules:
/// the word ends in a single `B` preceded by `A` or `xx`; there is no `..`;
/// crosses come in pairs followed by `.` or the final `B`; every `.` follows
/// `A` or `xx`; every `A` is followed by `.` or is the penultimate letter.
pub fn validate_abdx(w: &[Abdx]) -> std::result::Result<(), AbdxViolation> {
    use Abdx::*;
    let n = w.len();
    if n == 0 {
        return Err(AbdxViolation::Empty);
    }
    if n < 2 || w[n - 1] != B || !matches!(w[n - 2], A | Cross) {
        return Err(AbdxViolation::BadEnding);
    }
    if let Some(position) = w.windows(2).position(|p| p == [Dot, Dot]) {
        return Err(AbdxViolation::DoubleDot { position });
    }
    let mut i = 0;
    while i < n {
        if w[i] == Cross {
            let run = w[i..].iter().take_while(|&&l| l == Cross).count();
            let after = i + run;
            let closed = after < n && (w[after] == Dot || (w[after] == B && after == n - 1));
            if run != 2 || !closed {
                return Err(AbdxViolation::StrayCross { position: i });
            }
            i = after;
        } else {
            i += 1;
        }
    }
    for (i, &l) in w.iter().enumerate() {
        match l {
            Dot => {
                let after_a = i >= 1 && w[i - 1] == A;
                let after_xx = i >= 2 && w[i - 2..i] == [Cross, Cross];
                if !after_a && !after_xx {
                    return Err(AbdxViolation::StrayDot { position: i });
                }
            }
            A => {
                let dotted = w.get(i + 1) == Some(&Dot);
                let penultimate = i + 2 == n;
                if !dotted && !penultimate {
                    return Err(AbdxViolation::StrayA { position: i });
                }
            }
            _ => {}
        }
    }
    Ok(())
}

/// Step A: `0 · reverse(w) · 0`.
pub fn zt_to_hat(w: &ZtWord) -> HatWord {
    let mut digits = Vec::with_capacity(w.len() + 2);
    digits.push(0);
    digits.extend(w.digits().iter().rev());
    digits.push(0);
    HatWord(digits)
}

/// Step B: the six substitution rules, applied to every digit but the last.
///
/// | digit | followed by       | becomes |
/// |-------|-------------------|---------|
/// | 0     | 0                 | `B`     |
/// | 0     | 11                | `x`     |
/// | 0     | 10                | `A`     |
/// | 1     | 1                 | `x`     |
/// | 1     | 0, then a digit   | `.`     |
/// | 1     | 0, then the end   | `B`     |
pub fn hat_to_abdx(w: &HatWord) -> Result<AbdxWord> {
    let d = &w.0;
    let mut out = Vec::with_capacity(d.len() - 1);
    for i in 0..d.len() - 1 {
        let next = d[i + 1];
        let after = d.get(i + 2).copied();
        let letter = match (d[i], next, after) {
            (0, 0, _) => Abdx::B,
            (0, 1, Some(1)) => Abdx::Cross,
            (0, 1, Some(0)) => Abdx::A,
            (1, 1, _) => Abdx::Cross,
            (1, 0, Some(_)) => Abdx::Dot,
            (1, 0, None) => Abdx::B,
            _ => return Err(Error::NoRuleApplies { position: i }),
        };
        out.push(letter);
    }
    Ok(AbdxWord::from_letters(out)?)
}

/// Step C: `A. → A`, `xx. → C`, `B → B`; at the end `AB → AB(0)` and `xxB → CB(0)`.
pub fn abdx_to_abc(w: &AbdxWord) -> Result<AbcWord> {
    let l = &w.0;
    let n = l.len();
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        match l[i] {
            Abdx::B => {
                out.push(Letter::B);
                i += 1;
            }
            Abdx::A => {
                out.push(Letter::A);
                i += if l.get(i + 1) == Some(&Abdx::Dot) {
                    2
                } else {
                    1
                };
            }
            Abdx::Cross if l.get(i + 1) == Some(&Abdx::Cross) => {
                out.push(Letter::C);
                i += if l.get(i + 2) == Some(&Abdx::Dot) {
                    3
                } else {
                    2
                };
            }
            _ => return Err(Error::NoRuleApplies { position: i }),
        }
    }
    AbcWord::from_letters(out)
}

/// Step C̄: `A → A.`, `C → xx.`, `B → B`, except that the letter right before
/// the terminal `B` drops its dot (`AB(0) → AB`, `CB(0) → xxB`).
///
/// The one-letter word `0` (the number 0) has no image.
pub fn abc_to_abdx(w: &AbcWord) -> Result<AbdxWord> {
    let letters = w.letters();
    let n = letters.len();
    if n < 2 {
        return Err(Error::OutOfDomain(
            "the AB.x form exists only for positive numbers".into(),
        ));
    }
    let mut out = Vec::with_capacity(3 * n);
    for (i, &l) in letters.iter().enumerate() {
        let before_terminal = i + 2 == n;
        match l {
            Letter::B => out.push(Abdx::B),
            Letter::A => {
                out.push(Abdx::A);
                if !before_terminal {
                    out.push(Abdx::Dot);
                }
            }
            Letter::C => {
                out.extend([Abdx::Cross, Abdx::Cross]);
                if !before_terminal {
                    out.push(Abdx::Dot);
                }
            }
        }
    }
    Ok(AbdxWord::from_letters(out)?)
}

/// The two equivalent ways back from AB.x words to hat words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HatVersion {
    /// Token replacement: final `AB → 010`, `A. → 01`, final `xxB → 0110`, `xx. → 011`, `B → 0`.
    Tokens,
    /// Prepend a 0, then `A, x → 1` and `B, . → 0` letterwise.
    Letterwise,
}

/// Step B̄.
pub fn abdx_to_hat(w: &AbdxWord, version: HatVersion) -> Result<HatWord> {
    let l = &w.0;
    let n = l.len();
    let mut digits = Vec::with_capacity(n + 1);
    match version {
        HatVersion::Letterwise => {
            digits.push(0);
            digits.extend(l.iter().map(|&x| matches!(x, Abdx::A | Abdx::Cross) as u8));
        }
        HatVersion::Tokens => {
            let mut i = 0;
            while i < n {
                let rest = &l[i..];
                let (token, used): (&[u8], usize) = match rest {
                    [Abdx::A, Abdx::B] => (&[0, 1, 0], 2),
                    [Abdx::A, Abdx::Dot, ..] => (&[0, 1], 2),
                    [Abdx::Cross, Abdx::Cross, Abdx::B] => (&[0, 1, 1, 0], 3),
                    [Abdx::Cross, Abdx::Cross, Abdx::Dot, ..] => (&[0, 1, 1], 3),
                    [Abdx::B, ..] => (&[0], 1),
                    _ => return Err(Error::NoRuleApplies { position: i }),
                };
                digits.extend_from_slice(token);
                i += used;
            }
        }
    }
    Ok(HatWord::from_digits(digits)?)
}

/// Step Ā: drop the padding zeros and reverse.
pub fn hat_to_zt(w: &HatWord) -> Result<ZtWord> {
    let d = &w.0;
    if d[0] != 0 || d[d.len() - 1] != 0 {
        return Err(HatViolation::BadEnding.into());
    }
    ZtWord::from_digits(d[1..d.len() - 1].iter().rev().copied().collect())
}

/// Every intermediate word of one conversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stages {
    pub zt: ZtWord,
    pub hat: HatWord,
    pub abdx: AbdxWord,
    pub abc: AbcWord,
}

pub fn convert_stages(w: &ZtWord) -> Result<Stages> {
    let hat = zt_to_hat(w);
    let abdx = hat_to_abdx(&hat)?;
    let abc = abdx_to_abc(&abdx)?;
    Ok(Stages {
        zt: w.clone(),
        hat,
        abdx,
        abc,
    })
}

pub fn convert_back_stages(w: &AbcWord) -> Result<Stages> {
    let abdx = abc_to_abdx(w)?;
    let hat = abdx_to_hat(&abdx, HatVersion::Letterwise)?;
    let zt = hat_to_zt(&hat)?;
    Ok(Stages {
        zt,
        hat,
        abdx,
        abc: w.clone(),
    })
}

/// ZT word to ABC word of the same number.
pub fn convert(w: &ZtWord) -> Result<AbcWord> {
    convert_stages(w).map(|s| s.abc)
}

/// ABC word to ZT word of the same number.
pub fn convert_back(w: &AbcWord) -> Result<ZtWord> {
    convert_back_stages(w).map(|s| s.zt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt(s: &str) -> ZtWord {
        s.parse().unwrap()
    }
    fn hat(s: &str) -> HatWord {
        s.parse().unwrap()
    }
    fn abdx(s: &str) -> AbdxWord {
        s.parse().unwrap()
    }
    fn abc(s: &str) -> AbcWord {
        s.parse().unwrap()
    }

    #[test]
    fn zt_to_hat_examples() {
        assert_eq!(zt_to_hat(&zt("1")).to_string(), "010");
        assert_eq!(zt_to_hat(&zt("100110")).to_string(), "00110010");
        assert_eq!(zt_to_hat(&zt("1010")).to_string(), "001010");
    }

    #[test]
    fn hat_to_abdx_examples() {
        assert_eq!(
            hat_to_abdx(&hat("0101010011010")).unwrap().to_string(),
            "A.A.A.Bxx.AB"
        );
        assert_eq!(hat_to_abdx(&hat("010")).unwrap().to_string(), "AB");
        assert_eq!(
            hat_to_abdx(&hat("00110010")).unwrap().to_string(),
            "Bxx.BAB"
        );
    }

    #[test]
    fn abdx_to_abc_examples() {
        assert_eq!(abdx_to_abc(&abdx("BxxB")).unwrap().to_string(), "020");
        assert_eq!(abdx_to_abc(&abdx("BA.AB")).unwrap().to_string(), "0110");
        assert_eq!(abdx_to_abc(&abdx("Bxx.BAB")).unwrap().to_string(), "02010");
    }

    #[test]
    fn abc_to_abdx_examples() {
        // A^3 B C A B(0)
        assert_eq!(
            abc_to_abdx(&abc("1110210")).unwrap().to_string(),
            "A.A.A.Bxx.AB"
        );
        assert_eq!(abc_to_abdx(&abc("10")).unwrap().to_string(), "AB");
        assert_eq!(abc_to_abdx(&abc("020")).unwrap().to_string(), "BxxB");
        assert!(matches!(abc_to_abdx(&abc("0")), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn abdx_to_hat_examples() {
        for v in [HatVersion::Tokens, HatVersion::Letterwise] {
            assert_eq!(
                abdx_to_hat(&abdx("A.A.A.Bxx.AB"), v).unwrap().to_string(),
                "0101010011010"
            );
            assert_eq!(abdx_to_hat(&abdx("AB"), v).unwrap().to_string(), "010");
            assert_eq!(
                abdx_to_hat(&abdx("Bxx.BAB"), v).unwrap().to_string(),
                "00110010"
            );
        }
    }

    #[test]
    fn hat_to_zt_examples() {
        assert_eq!(hat_to_zt(&hat("00110010")).unwrap().to_string(), "100110");
        assert_eq!(hat_to_zt(&hat("010")).unwrap().to_string(), "1");
        assert_eq!(hat_to_zt(&hat("001010")).unwrap().to_string(), "1010");
    }

    #[test]
    fn convert_examples() {
        assert_eq!(convert(&zt("100110")).unwrap().to_string(), "02010");
        assert_eq!(convert(&zt("1")).unwrap().to_string(), "10");
        assert_eq!(convert(&zt("10010110")).unwrap().to_string(), "021010");
        assert_eq!(convert_back(&abc("02010")).unwrap().to_string(), "100110");
        assert_eq!(convert_back(&abc("10")).unwrap().to_string(), "1");
        assert_eq!(
            convert_back(&abc("021010")).unwrap().to_string(),
            "10010110"
        );
    }

    #[test]
    fn hat_validation() {
        assert!(matches!(
            "01".parse::<HatWord>(),
            Err(Error::InvalidHat(HatViolation::TooShort))
        ));
        assert!(matches!(
            "110".parse::<HatWord>(),
            Err(Error::InvalidHat(HatViolation::BadStart))
        ));
        assert!(matches!(
            "0100".parse::<HatWord>(),
            Err(Error::InvalidHat(HatViolation::BadEnding))
        ));
        assert!(matches!(
            "011110".parse::<HatWord>(),
            Err(Error::InvalidHat(HatViolation::TripleOnes { position: 1 }))
        ));
        assert!(matches!(
            "0210".parse::<HatWord>(),
            Err(Error::InvalidHat(HatViolation::NonBinary {
                position: 1,
                ..
            }))
        ));
    }

    #[test]
    fn abdx_validation() {
        let v = |s: &str| match s.parse::<AbdxWord>() {
            Err(Error::InvalidAbdx(v)) => v,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(v(""), AbdxViolation::Empty);
        assert_eq!(
            v("AQ"),
            AbdxViolation::BadSymbol {
                position: 1,
                found: 'Q'
            }
        );
        assert_eq!(v("B"), AbdxViolation::BadEnding);
        assert_eq!(v("BB"), AbdxViolation::BadEnding);
        assert_eq!(v("A..AB"), AbdxViolation::DoubleDot { position: 1 });
        assert_eq!(v("Bxxx.AB"), AbdxViolation::StrayCross { position: 1 });
        assert_eq!(v("BxBAB"), AbdxViolation::StrayCross { position: 1 });
        assert_eq!(v("Bxx.xAB"), AbdxViolation::StrayCross { position: 4 });
        assert_eq!(v("B.AB"), AbdxViolation::StrayDot { position: 1 });
        assert_eq!(v("ABAB"), AbdxViolation::StrayA { position: 0 });
        assert_eq!(abdx("A•A•A•B××•AB").to_string(), "A.A.A.Bxx.AB");
    }
}
