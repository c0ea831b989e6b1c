//! Tribonacci word, the sequences A, B, C of letter positions, and the two
//! numeration systems built on them: ZT (tribonacci-Zeckendorf) words and
//! ABC words, with a purely string-level conversion between the two.

pub mod abc;
pub mod census;
pub mod equiv;
pub mod error;
pub mod numbers;
pub mod oeis;
pub mod partition;
pub mod probe;
pub mod rank;
pub mod sequences;
pub mod tables;
pub mod verify;
pub mod word;
pub mod zt;

pub use abc::{abc_decode, abc_encode, AbcWord};
pub use equiv::{convert, convert_back, AbdxWord, HatWord};
pub use error::{Error, Result};
pub use numbers::{tribonacci, TriboIndex};
pub use rank::{rank, rank_fast, RankProfile};
pub use sequences::{classify, seq, seq_b_typed, BType, Classification};
pub use word::{prefix, t_at, tribo_word, Letter, TriboWord};
pub use zt::{zt_decode, zt_encode, ZtWord};
