//! The three reference tables as plain text, one space-separated row per line.
//!
//! * table 1: `n t(n) A(n) B(n) C(n)` for `n = 0..=79`
//! * table 2: `N ZT(N)` for `N = 1..=100`
//! * table 3: `N ABC(N)` for `N = 1..=100`

use std::fmt::Write;

use crate::abc::abc_encode;
use crate::error::{Error, Result};
use crate::sequences::seq_closed;
use crate::word::{t_at, Letter};
use crate::zt::zt_encode;

pub const TABLE1_ROWS: u64 = 80;
pub const TABLE23_ROWS: u64 = 100;

pub fn table1() -> Result<String> {
    let mut out = String::new();
    for n in 0..TABLE1_ROWS {
        let [a, b, c] = [Letter::A, Letter::B, Letter::C].map(|x| seq_closed(x, n));
        writeln!(out, "{n} {} {} {} {}", t_at(n), a?, b?, c?).expect("string write");
    }
    Ok(out)
}

pub fn table2() -> Result<String> {
    let mut out = String::new();
    for n in 1..=TABLE23_ROWS {
        writeln!(out, "{n} {}", zt_encode(n)?).expect("string write");
    }
    Ok(out)
}

pub fn table3() -> Result<String> {
    let mut out = String::new();
    for n in 1..=TABLE23_ROWS {
        writeln!(out, "{n} {}", abc_encode(n)?).expect("string write");
    }
    Ok(out)
}

pub fn table(k: u8) -> Result<String> {
    match k {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        _ => Err(Error::OutOfDomain(format!("there is no table {k}"))),
    }
}
