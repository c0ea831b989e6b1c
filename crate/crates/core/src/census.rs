//! Census of the length-3 and length-2 factors of AB.x words.
//!
//! Lives apart from [`crate::equiv`] because it has to produce the words from
//! numbers, which the transform module must never do.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::equiv::{hat_to_abdx, zt_to_hat};
use crate::error::{Error, Result};
use crate::zt::zt_encode;

/// The 20 length-3 factors ("tribons") that can occur in an AB.x word.
pub const TRIBONS: [&str; 20] = [
    "A.A", "A.B", "A.x", "BBB", "BBA", "BAB", "BA.", "BBx", "Bxx", ".A.", ".AB", ".BA", ".BB",
    ".Bx", ".xx", "x.A", "x.B", "x.x", "xx.", "xxB",
];

/// The 11 length-2 factors that can occur in an AB.x word.
pub const DOUBLETS: [&str; 11] = [
    "A.", "AB", "BB", "BA", "Bx", ".A", ".B", ".x", "x.", "xx", "xB",
];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub max_n: u64,
    /// Occurrence counts of every observed length-3 factor.
    pub tribons: BTreeMap<String, u64>,
    /// Occurrence counts of every observed length-2 factor.
    pub doublets: BTreeMap<String, u64>,
    /// For each tribon, the five hat digits it was rewritten from.
    pub contexts: BTreeMap<String, BTreeSet<String>>,
}

impl Census {
    /// Observed tribons outside [`TRIBONS`].
    pub fn unexpected_tribons(&self) -> Vec<&str> {
        self.tribons
            .keys()
            .map(String::as_str)
            .filter(|f| !TRIBONS.contains(f))
            .collect()
    }

    /// Entries of [`TRIBONS`] never observed.
    pub fn missing_tribons(&self) -> Vec<&'static str> {
        TRIBONS
            .into_iter()
            .filter(|f| !self.tribons.contains_key(*f))
            .collect()
    }

    pub fn unexpected_doublets(&self) -> Vec<&str> {
        self.doublets
            .keys()
            .map(String::as_str)
            .filter(|f| !DOUBLETS.contains(f))
            .collect()
    }

    pub fn missing_doublets(&self) -> Vec<&'static str> {
        DOUBLETS
            .into_iter()
            .filter(|f| !self.doublets.contains_key(*f))
            .collect()
    }
}

/// Scans the AB.x words of every `N` in `[1, max_n]`.
pub fn tribon_census(max_n: u64) -> Result<Census> {
    if max_n == 0 {
        return Err(Error::OutOfDomain("census needs max_n >= 1".into()));
    }
    let mut census = Census {
        max_n,
        ..Census::default()
    };
    for n in 1..=max_n {
        let hat = zt_to_hat(&zt_encode(n)?);
        let abdx = hat_to_abdx(&hat)?.to_string();
        let hat = hat.to_string();
        for i in 0..abdx.len().saturating_sub(1) {
            *census
                .doublets
                .entry(abdx[i..i + 2].to_string())
                .or_default() += 1;
        }
        for i in 0..abdx.len().saturating_sub(2) {
            let factor = abdx[i..i + 3].to_string();
            // letter j of the AB.x word is read off hat digits j..j+2
            let context = hat[i..(i + 5).min(hat.len())].to_string();
            *census.tribons.entry(factor.clone()).or_default() += 1;
            census.contexts.entry(factor).or_default().insert(context);
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_have_no_duplicates() {
        assert_eq!(TRIBONS.iter().collect::<BTreeSet<_>>().len(), 20);
        assert_eq!(DOUBLETS.iter().collect::<BTreeSet<_>>().len(), 11);
    }

    #[test]
    fn tiny_census() {
        // 1 → AB, 2 → BAB, 3 → xxB
        let c = tribon_census(3).unwrap();
        assert_eq!(c.tribons.keys().collect::<Vec<_>>(), ["BAB", "xxB"]);
        assert_eq!(c.doublets.get("AB"), Some(&2));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(tribon_census(0).is_err());
    }
}
