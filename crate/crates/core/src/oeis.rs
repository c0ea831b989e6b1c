//! OEIS b-files and the bindings between them and the local generators.
//!
//! A binding states `local(n) = bfile(n + index_shift) + value_shift`. The
//! comparison walks the b-file from its first index, so `local` is evaluated
//! at `n = i - index_shift` for each b-file index `i`.
//!
//! Ids from the same family that have no local generator (the tree and
//! triangle sequences around A316713) are not registered.

use std::fmt;
use std::io::BufRead;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::abc::{abc_blockform, abc_encode};
use crate::error::{Error, Result};
use crate::numbers::{tribonacci, TriboIndex};
use crate::rank::rank_fast;
use crate::sequences::{seq_b_typed, seq_closed, BType};
use crate::verify::{CheckRange, CheckReport, Sink};
use crate::word::{t_at, Letter};
use crate::zt::{zt_encode, zt_length};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    /// Sequence id from the first `# Annnnnn` comment or the file name.
    pub id: Option<String>,
    pub first: i64,
    pub values: Vec<i128>,
}

impl BFile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<i128> {
        let offset = usize::try_from(index.checked_sub(self.first)?).ok()?;
        self.values.get(offset).copied()
    }
}

fn sequence_id(text: &str) -> Option<String> {
    let token = text.split(|c: char| !c.is_ascii_alphanumeric()).find(|w| {
        w.len() == 7 && w.starts_with('A') && w[1..].bytes().all(|b| b.is_ascii_digit())
    })?;
    Some(token.to_string())
}

/// Parses `index value` lines; `#` comments and blank lines are skipped, CRLF is accepted.
pub fn parse_bfile(source: impl BufRead) -> Result<BFile> {
    let mut bfile = BFile {
        id: None,
        first: 0,
        values: Vec::new(),
    };
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if bfile.id.is_none() {
                bfile.id = sequence_id(comment);
            }
            continue;
        }
        let err = |message: String| Error::BFileParse {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [index, value] = tokens[..] else {
            return Err(err(format!("expected two integers, found {line:?}")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| err(format!("bad index {index:?}")))?;
        let value: i128 = value
            .parse()
            .map_err(|_| err(format!("bad value {value:?}")))?;
        if bfile.values.is_empty() {
            bfile.first = index;
        } else if index != bfile.first + bfile.values.len() as i64 {
            return Err(err(format!(
                "index {index} breaks the run starting at {}",
                bfile.first
            )));
        }
        bfile.values.push(value);
    }
    Ok(bfile)
}

pub fn parse_bfile_str(text: &str) -> Result<BFile> {
    parse_bfile(text.as_bytes())
}

/// Reads a b-file, falling back to the file name (`b278040.txt`) for its id.
pub fn load_bfile(path: &Path) -> Result<BFile> {
    let file =
        std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut bfile = parse_bfile(std::io::BufReader::new(file))?;
    if bfile.id.is_none() {
        bfile.id = path
            .file_stem()
            .and_then(|s| s.to_str())
            .and_then(|s| s.strip_prefix('b'))
            .map(|digits| format!("A{digits}"))
            .and_then(|s| sequence_id(&s));
    }
    Ok(bfile)
}

/// The bundled fixtures shipped with this crate.
pub fn default_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join("bfiles")
}

/// `dir/bNNNNNN.txt` for `ANNNNNN`.
pub fn bfile_path(dir: &Path, oeis_id: &str) -> PathBuf {
    dir.join(format!("b{}.txt", oeis_id.trim_start_matches('A')))
}

/// Local sequences that have OEIS counterparts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `T(n)`.
    Tribonacci,
    /// `t(n)`.
    Word,
    Seq(Letter),
    B0,
    /// `z(n)`.
    Weighted,
    /// `z_X(n)`.
    Count(Letter),
    /// ZT word of `n ≥ 1` read as a decimal number.
    ZtDecimal,
    ZtLength,
    /// ABC word of `n` read as a decimal number (leading zeros vanish).
    AbcDecimal,
    AbcLength,
    AbcLetters(Letter),
}

impl Generator {
    pub fn eval(self, n: i64) -> Result<i128> {
        // only the counting functions live at n = -1
        let index = || u64::try_from(n).map_err(|_| Error::OutOfDomain(format!("index {n}")));
        let v = match self {
            Generator::Weighted => rank_fast(n)?.weighted as i128,
            Generator::Count(x) => rank_fast(n)?.count(x) as i128,
            Generator::Tribonacci => tribonacci(TriboIndex(
                u32::try_from(n).map_err(|_| Error::OutOfDomain(format!("index {n}")))?,
            ))? as i128,
            Generator::Word => t_at(index()?) as i128,
            Generator::Seq(x) => seq_closed(x, index()?)? as i128,
            Generator::B0 => seq_b_typed(BType::Zero, index()?)? as i128,
            Generator::ZtDecimal => parse_decimal(&zt_encode(index()?)?.to_string())?,
            Generator::ZtLength => zt_length(index()?)? as i128,
            Generator::AbcDecimal => parse_decimal(&abc_encode(index()?)?.to_string())?,
            Generator::AbcLength => abc_encode(index()?)?.len() as i128,
            Generator::AbcLetters(x) => {
                let form = abc_blockform(&abc_encode(index()?)?);
                (match x {
                    Letter::A => form.count_a,
                    Letter::B => form.count_b,
                    Letter::C => form.count_c,
                }) as i128
            }
        };
        Ok(v)
    }
}

fn parse_decimal(digits: &str) -> Result<i128> {
    digits
        .parse()
        .map_err(|_| Error::Overflow("decimal reading of a word"))
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Tribonacci => write!(f, "T(n)"),
            Generator::Word => write!(f, "t(n)"),
            Generator::Seq(x) => write!(f, "{x}(n)"),
            Generator::B0 => write!(f, "B0(n)"),
            Generator::Weighted => write!(f, "z(n)"),
            Generator::Count(x) => write!(f, "z_{x}(n)"),
            Generator::ZtDecimal => write!(f, "ZT(n) as decimal"),
            Generator::ZtLength => write!(f, "|ZT(n)|"),
            Generator::AbcDecimal => write!(f, "ABC(n) as decimal"),
            Generator::AbcLength => write!(f, "|ABC(n)|"),
            Generator::AbcLetters(x) => write!(f, "#{x} in ABC(n)"),
        }
    }
}

/// `local(n) = bfile(n + index_shift) + value_shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceBinding {
    pub oeis_id: &'static str,
    pub generator: Generator,
    pub index_shift: i64,
    pub value_shift: i64,
}

impl SequenceBinding {
    const fn new(
        oeis_id: &'static str,
        generator: Generator,
        index_shift: i64,
        value_shift: i64,
    ) -> Self {
        SequenceBinding {
            oeis_id,
            generator,
            index_shift,
            value_shift,
        }
    }

    /// The same binding with its index shift moved by `by`; a deliberately
    /// wrong binding for negative controls.
    pub fn misaligned(self, by: i64) -> Self {
        SequenceBinding {
            index_shift: self.index_shift + by,
            ..self
        }
    }
}

impl fmt::Display for SequenceBinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}(n{:+}){:+}",
            self.generator, self.oeis_id, self.index_shift, self.value_shift
        )
    }
}

use Generator::*;
use Letter::{A, B, C};

static BINDINGS: [SequenceBinding; 20] = [
    SequenceBinding::new("A000073", Tribonacci, 0, 0),
    SequenceBinding::new("A080843", Word, 0, 0),
    SequenceBinding::new("A278040", Seq(A), 0, 0),
    SequenceBinding::new("A278039", Seq(B), 0, 0),
    SequenceBinding::new("A278041", Seq(C), 0, 0),
    // a(n) = B(n-1) + 1, b(n) = A(n-1) + 1, c(n) = C(n-1) + 1
    SequenceBinding::new("A003144", Seq(B), 1, -1),
    SequenceBinding::new("A003145", Seq(A), 1, -1),
    SequenceBinding::new("A003146", Seq(C), 1, -1),
    SequenceBinding::new("A319968", B0, 1, 0),
    SequenceBinding::new("A319198", Weighted, 0, 0),
    SequenceBinding::new("A276797", Count(A), 1, 0),
    SequenceBinding::new("A276796", Count(B), 1, 0),
    SequenceBinding::new("A276798", Count(C), 1, -1),
    SequenceBinding::new("A278038", ZtDecimal, 0, 0),
    SequenceBinding::new("A278044", ZtLength, 0, 0),
    SequenceBinding::new("A319195", AbcDecimal, 0, 0),
    SequenceBinding::new("A316714", AbcLength, 0, 0),
    SequenceBinding::new("A316715", AbcLetters(B), 0, 0),
    SequenceBinding::new("A316716", AbcLetters(A), 0, 0),
    SequenceBinding::new("A316717", AbcLetters(C), 0, 0),
];

pub fn bindings() -> &'static [SequenceBinding] {
    &BINDINGS
}

pub fn binding(oeis_id: &str) -> Result<SequenceBinding> {
    BINDINGS
        .iter()
        .find(|b| b.oeis_id == oeis_id)
        .copied()
        .ok_or_else(|| Error::UnknownBinding(oeis_id.to_string()))
}

/// Compares the first `limit` b-file entries with the shifted local generator.
pub fn compare(binding: &SequenceBinding, bfile: &BFile, limit: usize) -> Result<CheckReport> {
    let started = Instant::now();
    if limit == 0 || bfile.len() < limit {
        return Err(Error::InsufficientCoverage {
            first: bfile.first,
            available: bfile.len(),
            requested: limit,
        });
    }
    let mut sink = Sink::default();
    let last = bfile.first + limit as i64 - 1;
    for (i, &value) in (bfile.first..=last).zip(&bfile.values) {
        let n = i - binding.index_shift;
        let expected = value + binding.value_shift as i128;
        let input = format!("{}({i})", binding.oeis_id);
        match binding.generator.eval(n) {
            Ok(v) => sink.expect(input, expected, v),
            Err(e) => sink.fail(input, expected, e),
        }
    }
    Ok(CheckReport::new(
        &format!("oeis:{}", binding.oeis_id),
        CheckRange::new(bfile.first, last),
        sink,
        started.elapsed().as_secs_f64(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b = parse_bfile_str("0 1\n1 5\n2 8\n").unwrap();
        assert_eq!((b.first, b.values.clone()), (0, vec![1, 5, 8]));
        let b = parse_bfile_str("# comment\n\n0 0\n").unwrap();
        assert_eq!(b.values, vec![0]);
        assert_eq!(
            parse_bfile_str("0 x\n").unwrap_err(),
            Error::BFileParse {
                line: 1,
                message: "bad value \"x\"".into()
            }
        );
    }

    #[test]
    fn crlf_and_id() {
        let b = parse_bfile_str("# A278040 positions of 1\r\n1 5\r\n2 8\r\n").unwrap();
        assert_eq!(b.id.as_deref(), Some("A278040"));
        assert_eq!(b.first, 1);
        assert_eq!(b.get(2), Some(8));
        assert_eq!(b.get(0), None);
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_bfile_str("0 1\n1 2 3\n"),
            Err(Error::BFileParse { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile_str("0 1\n2 2\n"),
            Err(Error::BFileParse { line: 2, .. })
        ));
    }

    #[test]
    fn coverage_is_enforced() {
        let b = parse_bfile_str("0 1\n1 5\n").unwrap();
        let err = compare(&binding("A278040").unwrap(), &b, 3).unwrap_err();
        assert_eq!(
            err,
            Error::InsufficientCoverage {
                first: 0,
                available: 2,
                requested: 3
            }
        );
    }

    #[test]
    fn unknown_binding() {
        assert_eq!(
            binding("A000045").unwrap_err(),
            Error::UnknownBinding("A000045".into())
        );
    }

    #[test]
    fn binding_display() {
        assert_eq!(
            binding("A003144").unwrap().to_string(),
            "B(n) = A003144(n+1)-1"
        );
    }
}
