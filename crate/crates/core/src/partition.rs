//! Block partitions of the tribonacci word.
//!
//! Each variant re-spells the word as a concatenation of three blocks chosen
//! by the word itself: block `j` is picked by `t(j)`.
//!
//! | variant | block for 0 | block for 1 | block for 2 |
//! |---------|-------------|-------------|-------------|
//! | 1       | `s_13`      | `s_11`      | `s_7`       |
//! | 2       | `s_7`       | `s_6`       | `s_4`       |
//! | 3       | `s_4`       | `s_3`       | `s_2`       |
//! | 4       | `01`        | `02`        | `0`         |
//!
//! where `s_n` is the length-`n` prefix of the word. Variant 4 is `σ` itself.

use crate::error::{Error, Result};
use crate::word::{self, WordStream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionVariant {
    V1,
    V2,
    V3,
    V4,
}

impl PartitionVariant {
    pub const ALL: [PartitionVariant; 4] = [
        PartitionVariant::V1,
        PartitionVariant::V2,
        PartitionVariant::V3,
        PartitionVariant::V4,
    ];

    pub fn from_number(i: u8) -> Result<Self> {
        match i {
            1 => Ok(PartitionVariant::V1),
            2 => Ok(PartitionVariant::V2),
            3 => Ok(PartitionVariant::V3),
            4 => Ok(PartitionVariant::V4),
            _ => Err(Error::OutOfDomain(format!("partition variant {i}"))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            PartitionVariant::V1 => 1,
            PartitionVariant::V2 => 2,
            PartitionVariant::V3 => 3,
            PartitionVariant::V4 => 4,
        }
    }

    /// The three blocks, indexed by the driving symbol.
    pub fn blocks(self) -> [Vec<u8>; 3] {
        let s = |n: u64| {
            word::prefix(n)
                .expect("short prefix is within capacity")
                .into_symbols()
        };
        match self {
            PartitionVariant::V1 => [s(13), s(11), s(7)],
            PartitionVariant::V2 => [s(7), s(6), s(4)],
            PartitionVariant::V3 => [s(4), s(3), s(2)],
            PartitionVariant::V4 => [vec![0, 1], vec![0, 2], vec![0]],
        }
    }
}

/// Unbounded iterator emitting the block concatenation of one variant.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    blocks: [Vec<u8>; 3],
    driver: WordStream,
    current: usize,
    offset: usize,
}

impl PartitionStream {
    pub fn new(variant: PartitionVariant) -> Self {
        let mut driver = WordStream::new();
        let first = driver.next().expect("word stream is unbounded") as usize;
        PartitionStream {
            blocks: variant.blocks(),
            driver,
            current: first,
            offset: 0,
        }
    }

    /// Yields whole blocks instead of single symbols.
    pub fn blocks(self) -> impl Iterator<Item = Vec<u8>> {
        let blocks = self.blocks;
        WordStream::new().map(move |s| blocks[s as usize].clone())
    }
}

impl Iterator for PartitionStream {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let block = &self.blocks[self.current];
        let s = block[self.offset];
        self.offset += 1;
        if self.offset == block.len() {
            self.current = self.driver.next().expect("word stream is unbounded") as usize;
            self.offset = 0;
        }
        Some(s)
    }
}

pub fn partition_stream(variant: PartitionVariant) -> PartitionStream {
    PartitionStream::new(variant)
}
