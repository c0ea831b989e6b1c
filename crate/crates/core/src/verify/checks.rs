use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{scan, CheckInfo, CheckRange, Oracle, Sink};
use crate::abc::{abc_blockform, abc_chain, abc_decode, abc_encode, abc_validate, AbcWord};
use crate::census::tribon_census;
use crate::equiv::{
    abc_to_abdx, abdx_to_abc, abdx_to_hat, convert, convert_back, hat_to_abdx, hat_to_zt,
    validate_abdx, zt_to_hat, HatVersion,
};
use crate::error::Result;
use crate::numbers::t;
use crate::partition::{partition_stream, PartitionVariant};
use crate::probe;
use crate::rank::{rank, rank_fast, RankProfile};
use crate::sequences::{
    abc_identity_gap, classify, compose, rank_closed, rank_of_seq, select, seq, seq_b_typed,
    seq_b_typed_counting, seq_closed, z_of_seq, BType, Classification,
};
use crate::word::{
    char_value, morphism_apply, morphism_inverse, t_at, tribo_word, Letter, TriboWord,
};
use crate::zt::{zt_decode, zt_encode, zt_encode_traced, zt_length, zt_validate, ZtWord};

use Letter::{A, B, C};

const ZT_UNIQUE_MAX_LEN: u64 = 20;
const ABC_UNIQUE_MAX_LEN: u64 = 12;

pub(super) static REGISTRY: &[CheckInfo] = &[
    CheckInfo { id: "prefix", description: "tw(l) and t_at agree with the streamed word; recursion; sigma fixes t", run: prefix },
    CheckInfo { id: "rank", description: "rank and rank_fast agree with streamed counts", run: rank_check },
    CheckInfo { id: "char", description: "exactly one characteristic value is 1, matching t(n)", run: char_check },
    CheckInfo { id: "lemma9", description: "each partition variant reproduces the word", run: lemma9 },
    CheckInfo { id: "complement", description: "A, B, C partition the integers; classify round-trips", run: complement },
    CheckInfo { id: "prop10", description: "A(n) = 4n + 1 - z(n-1)", run: prop10 },
    CheckInfo { id: "prop11", description: "closed forms of B, C, B0, B1, B2", run: prop11 },
    CheckInfo { id: "delta", description: "first differences of A, B, C", run: delta },
    CheckInfo { id: "prop12", description: "z_A, z_B, z_C from A(n+1), B(n+1)", run: prop12 },
    CheckInfo { id: "prop13", description: "z(A(k)), z(B(k)), z(C(k))", run: prop13 },
    CheckInfo { id: "prop14", description: "the 18 compositions X(Y(k)) and X(Y(k)+1)", run: prop14 },
    CheckInfo { id: "prop15", description: "the 9 counts z_X(Y(k))", run: prop15 },
    CheckInfo { id: "zn", description: "z(n) = sum of t = z_A(n) + 2 z_C(n)", run: zn },
    CheckInfo { id: "sumzx", description: "z_A(n) + z_B(n) + z_C(n) = n + 1", run: sumzx },
    CheckInfo { id: "zxx", description: "z_X(X(k)) = k + 1", run: zxx },
    CheckInfo { id: "abcn", description: "C(n) - A(n) - B(n) = n + 2", run: abcn },
    CheckInfo { id: "select", description: "select and scan positions agree with the streamed word", run: select_check },
    CheckInfo { id: "zt-roundtrip", description: "ZT encode/decode round trip, validity, length", run: zt_roundtrip },
    CheckInfo { id: "zt-unique", description: "all ZT words up to a length are distinct and cover an interval (limit = max length, at most 20)", run: zt_unique },
    CheckInfo { id: "zt-order", description: "ZT words grow with N in (length, lexicographic) order", run: zt_order },
    CheckInfo { id: "zt-census", description: "T(n+3) - T(n+2) numbers have ZT length n", run: zt_census },
    CheckInfo { id: "abc-roundtrip", description: "ABC encode/decode round trip, validity, block form", run: abc_roundtrip },
    CheckInfo { id: "abc-unique", description: "all ABC words up to a length decode to distinct N (limit = max length, at most 12)", run: abc_unique },
    CheckInfo { id: "abc-descent", description: "X(k) > k for k >= 1, so encoding terminates", run: abc_descent },
    CheckInfo { id: "equivalence", description: "string conversion matches both codecs and never touches numbers", run: equivalence },
    CheckInfo { id: "inversion", description: "convert and convert_back are mutually inverse", run: inversion },
    CheckInfo { id: "versions", description: "both ways back to hat words agree", run: versions },
    CheckInfo { id: "structure", description: "intermediate words are well formed", run: structure },
    CheckInfo { id: "tribons", description: "observed 3- and 2-factors lie in the 20 tribons and 11 doublets", run: tribons },
    CheckInfo { id: "tribon-attainment", description: "every tribon and doublet occurs", run: tribon_attainment },
];

type Outcome = Result<(CheckRange, Sink)>;

fn text(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| (b'0' + s) as char).collect()
}

fn profile(p: &RankProfile) -> String {
    format!(
        "(zA={},zB={},zC={};z={})",
        p.count_a, p.count_b, p.count_c, p.weighted
    )
}

fn oracle_profile(o: &Oracle, n: i64) -> String {
    let [zb, za, zc] = o.counts(n);
    format!("(zA={za},zB={zb},zC={zc};z={})", za + 2 * zc)
}

fn letter_of(symbol: u8) -> Letter {
    Letter::from_symbol(symbol).expect("oracle symbols are 0, 1, 2")
}

fn range(lo: u64, hi: u64) -> CheckRange {
    CheckRange::new(lo as i64, hi as i64)
}

fn prefix(limit: u64) -> Outcome {
    let o = Oracle::new(limit + 1);
    let w = o.word();
    let mut sink = scan(0, limit as i64, |m, s| {
        s.expect(format!("t({m})"), w[m as usize], t_at(m as u64))
    });
    let mut l = 1u32;
    while t(l as usize + 2) <= limit + 1 {
        let tw = tribo_word(l)?;
        if tw.symbols() != &w[..tw.len()] {
            sink.fail(format!("tw({l})"), text(&w[..tw.len()]), &tw);
        }
        if l >= 3 {
            let mut cat = tribo_word(l - 1)?.into_symbols();
            cat.extend(tribo_word(l - 2)?.symbols());
            cat.extend(tribo_word(l - 3)?.symbols());
            sink.expect(format!("tw({l}) recursion"), text(&cat), tw.to_string());
        }
        l += 1;
    }
    let morph = scan(1, (limit / 2).min(4096) as i64, |m, s| {
        let p = TriboWord::new(w[..m as usize].to_vec()).expect("oracle symbols");
        let img = morphism_apply(&p);
        if img.symbols() != &w[..img.len()] {
            s.fail(format!("sigma(t[..{m}])"), "prefix of t", &img);
        }
        match morphism_inverse(&img) {
            Ok(back) => s.expect(format!("sigma^-1(sigma(t[..{m}]))"), p, back),
            Err(e) => s.fail(format!("sigma^-1(sigma(t[..{m}]))"), p, e),
        }
    });
    sink.absorb(morph);
    Ok((range(0, limit), sink))
}

fn rank_check(limit: u64) -> Outcome {
    let o = Oracle::new(limit + 1);
    let sink = scan(-1, limit as i64, |n, s| match (rank(n), rank_fast(n)) {
        (Ok(r), Ok(f)) => {
            s.expect(format!("rank({n})"), oracle_profile(&o, n), profile(&r));
            s.expect(format!("rank_fast({n})"), profile(&r), profile(&f));
        }
        (r, f) => s.fail(
            format!("rank({n})"),
            "ok",
            format!("{:?} / {:?}", r.err(), f.err()),
        ),
    });
    Ok((CheckRange::new(-1, limit as i64), sink))
}

fn char_check(limit: u64) -> Outcome {
    let o = Oracle::new(limit + 1);
    let sink = scan(0, limit as i64, |n, s| {
        let t = o.t(n as u64);
        let expected = format!("{},{},{}", (t == 1) as u8, (t == 0) as u8, (t == 2) as u8);
        let k = Letter::ALL.map(|x| char_value(x, n as u64));
        s.expect(
            format!("k_ABC({n})"),
            expected,
            format!("{},{},{}", k[0], k[1], k[2]),
        );
    });
    Ok((range(0, limit), sink))
}

fn lemma9(limit: u64) -> Outcome {
    let o = Oracle::new(limit);
    let parts: Vec<Sink> = PartitionVariant::ALL
        .par_iter()
        .map(|&v| {
            let mut s = Sink::default();
            for (i, (got, &want)) in partition_stream(v).zip(o.word()).enumerate() {
                if got != want {
                    s.fail(format!("variant {} symbol {i}", v.number()), want, got);
                }
            }
            s
        })
        .collect();
    let mut sink = Sink::default();
    for p in parts {
        sink.absorb(p);
    }
    Ok((range(0, limit - 1), sink))
}

fn complement(limit: u64) -> Outcome {
    let o = Oracle::new(limit + 1);
    let sink = scan(0, limit as i64, |n, s| {
        let letter = letter_of(o.t(n as u64));
        let expected = Classification {
            letter,
            index: o.count(letter, n) - 1,
        };
        s.expect_ok(format!("classify({n})"), expected, classify(n as u64));
        s.expect_ok(
            format!("{letter}({})", expected.index),
            n as u64,
            seq_closed(letter, expected.index),
        );
        // membership through the library alone: which X(z_X(n) - 1) hit n
        let hits = match rank_fast(n) {
            Ok(r) => Letter::ALL
                .iter()
                .filter(|&&x| {
                    let c = r.count(x);
                    c > 0 && seq_closed(x, c - 1).ok() == Some(n as u64)
                })
                .count(),
            Err(_) => 0,
        };
        s.expect(format!("memberships of {n}"), 1, hits);
    });
    Ok((range(0, limit), sink))
}

fn prop10(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(0, limit as i64, |n, s| {
        let want = o.seq(A, n as u64);
        s.expect_ok(format!("A({n})"), want, seq_closed(A, n as u64));
        let formula = 4 * n + 1 - o.z(n - 1) as i64;
        s.expect(format!("4n+1-z(n-1) at {n}"), want as i64, formula);
    });
    Ok((range(0, limit), sink))
}

fn prop11(limit: u64) -> Outcome {
    let o = Oracle::new(14 * (limit + 2));
    let w = o.word();
    let mut typed: [Vec<u64>; 3] = Default::default();
    for &p in o.positions(0) {
        if let Some(&next) = w.get(p as usize + 1) {
            typed[next as usize].push(p as u64);
        }
    }
    let sink = scan(0, limit as i64, |n, s| {
        let k = n as u64;
        let (b, c) = (o.seq(B, k), o.seq(C, k));
        s.expect_ok(format!("B({n})"), b, seq_closed(B, k));
        s.expect_ok(format!("C({n})"), c, seq_closed(C, k));
        let (za, zc) = (o.count(A, n - 1) as i64, o.count(C, n - 1) as i64);
        s.expect(format!("2n-zC(n-1) at {n}"), b as i64, 2 * n - zc);
        s.expect(
            format!("7n+3-(zA+3zC) at {n}"),
            c as i64,
            7 * n + 3 - (za + 3 * zc),
        );
        for ty in BType::ALL {
            let name = format!("B{}({n})", ty.successor());
            match typed[ty.successor() as usize].get(n as usize) {
                Some(&want) => {
                    s.expect_ok(name.clone(), want, seq_b_typed(ty, k));
                    s.expect_ok(
                        format!("{name} via counts"),
                        want,
                        seq_b_typed_counting(ty, k),
                    );
                }
                None => s.fail(name, "oracle value", "oracle too short"),
            }
        }
    });
    Ok((range(0, limit), sink))
}

fn delta(limit: u64) -> Outcome {
    let o = Oracle::covering(limit + 1);
    let sink = scan(0, limit as i64, |k, s| {
        let k = k as u64;
        let tk = o.t(k) as i64;
        let kc = char_value(C, k) as i64;
        let expected = [4 - tk, 2 - kc, 7 - tk * (tk + 1) / 2];
        for (i, x) in Letter::ALL.into_iter().enumerate() {
            let oracle = o.seq(x, k + 1) as i64 - o.seq(x, k) as i64;
            s.expect(format!("Δ{x}({k})"), expected[i], oracle);
            match (seq_closed(x, k + 1), seq_closed(x, k)) {
                (Ok(hi), Ok(lo)) => s.expect(
                    format!("Δ{x}({k}) closed"),
                    expected[i],
                    hi as i64 - lo as i64,
                ),
                _ => s.fail(format!("Δ{x}({k}) closed"), expected[i], "error"),
            }
        }
    });
    Ok((range(0, limit), sink))
}

fn prop12(limit: u64) -> Outcome {
    let o = Oracle::covering(limit + 1);
    let sink = scan(-1, limit as i64, |n, s| {
        let want = oracle_profile(&o, n);
        match rank_closed(n) {
            Ok(p) => s.expect(format!("rank_closed({n})"), want, profile(&p)),
            Err(e) => s.fail(format!("rank_closed({n})"), want, e),
        }
        let a = o.seq(A, (n + 1) as u64) as i64;
        let b = o.seq(B, (n + 1) as u64) as i64;
        s.expect(format!("zA({n})"), o.count(A, n) as i64, 2 * b - a + 1);
        s.expect(format!("zB({n})"), o.count(B, n) as i64, a - b - (n + 2));
        s.expect(format!("zC({n})"), o.count(C, n) as i64, 2 * (n + 1) - b);
    });
    Ok((CheckRange::new(-1, limit as i64), sink))
}

fn prop13(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(0, limit as i64, |k, s| {
        let k = k as u64;
        for x in Letter::ALL {
            let want = o.z(o.seq(x, k) as i64);
            s.expect_ok(format!("z({x}({k}))"), want, z_of_seq(x, k));
        }
    });
    Ok((range(0, limit), sink))
}

fn prop14(limit: u64) -> Outcome {
    let o = Oracle::new(49 * (limit + 3));
    let sink = scan(0, limit as i64, |k, s| {
        let k = k as u64;
        for x in Letter::ALL {
            for y in Letter::ALL {
                let inner = o.seq(y, k);
                for shift in [0, 1] {
                    let want = o.seq(x, inner + shift);
                    let name = if shift == 1 {
                        format!("{x}({y}({k})+1)")
                    } else {
                        format!("{x}({y}({k}))")
                    };
                    s.expect_ok(name, want, compose(x, y, k, shift == 1));
                }
            }
        }
    });
    Ok((range(0, limit), sink))
}

fn prop15(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(0, limit as i64, |k, s| {
        let k = k as u64;
        for x in Letter::ALL {
            for y in Letter::ALL {
                let want = o.count(x, o.seq(y, k) as i64);
                s.expect_ok(format!("z{x}({y}({k}))"), want, rank_of_seq(x, y, k));
            }
        }
    });
    Ok((range(0, limit), sink))
}

fn zn(limit: u64) -> Outcome {
    let o = Oracle::new(limit + 1);
    let sums: Vec<u64> = o
        .word()
        .iter()
        .scan(0u64, |acc, &s| {
            *acc += s as u64;
            Some(*acc)
        })
        .collect();
    let sink = scan(-1, limit as i64, |n, s| {
        let want = if n < 0 { 0 } else { sums[n as usize] };
        match rank_fast(n) {
            Ok(r) => {
                s.expect(format!("z({n})"), want, r.weighted);
                s.expect(format!("zA+2zC at {n}"), want, r.count_a + 2 * r.count_c);
            }
            Err(e) => s.fail(format!("z({n})"), want, e),
        }
    });
    Ok((CheckRange::new(-1, limit as i64), sink))
}

fn sumzx(limit: u64) -> Outcome {
    let o = Oracle::new(limit + 1);
    let sink = scan(-1, limit as i64, |n, s| {
        let want = (n + 1) as u64;
        s.expect(format!("oracle sum at {n}"), want, o.counts(n).iter().sum());
        match rank_fast(n) {
            Ok(r) => s.expect(
                format!("zA+zB+zC at {n}"),
                want,
                r.count_a + r.count_b + r.count_c,
            ),
            Err(e) => s.fail(format!("zA+zB+zC at {n}"), want, e),
        }
    });
    Ok((CheckRange::new(-1, limit as i64), sink))
}

fn zxx(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(0, limit as i64, |k, s| {
        let k = k as u64;
        for x in Letter::ALL {
            let pos = o.seq(x, k) as i64;
            s.expect(format!("oracle z{x}({x}({k}))"), k + 1, o.count(x, pos));
            match rank_fast(pos) {
                Ok(r) => s.expect(format!("z{x}({x}({k}))"), k + 1, r.count(x)),
                Err(e) => s.fail(format!("z{x}({x}({k}))"), k + 1, e),
            }
        }
    });
    Ok((range(0, limit), sink))
}

fn abcn(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(0, limit as i64, |n, s| {
        let k = n as u64;
        let gap = o.seq(C, k) as i64 - o.seq(A, k) as i64 - o.seq(B, k) as i64;
        s.expect(format!("oracle C-A-B at {n}"), n + 2, gap);
        s.expect_ok(format!("identity gap at {n}"), 0, abc_identity_gap(k));
    });
    Ok((range(0, limit), sink))
}

fn select_check(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(0, limit as i64, |n, s| {
        let k = n as u64;
        for x in Letter::ALL {
            let want = o.seq(x, k);
            s.expect_ok(format!("select({x}, {k})"), want, select(x, k));
            s.expect_ok(format!("seq({x}, {k})"), want, seq(x, k));
        }
    });
    Ok((range(0, limit), sink))
}

fn zt_roundtrip(limit: u64) -> Outcome {
    let sink = scan(1, limit as i64, |n, s| {
        let n = n as u64;
        let (w, trace) = match zt_encode_traced(n) {
            Ok(v) => v,
            Err(e) => return s.fail(format!("zt_encode({n})"), "word", e),
        };
        s.expect_ok(format!("zt_decode(zt_encode({n}))"), n, zt_decode(&w));
        if let Err(v) = zt_validate(&w.to_string()) {
            s.fail(format!("zt_validate({w})"), "ok", v);
        }
        s.expect_ok(format!("zt_length({n})"), w.len(), zt_length(n));
        let descending = trace.remainders.windows(2).all(|p| p[0] > p[1]);
        let sum: u64 = trace.floors.iter().sum();
        if !descending || sum != n || trace.remainders.last() != Some(&0) {
            s.fail(
                format!("trace({n})"),
                "descending remainders summing to N",
                format!("{trace:?}"),
            );
        }
    });
    Ok((range(1, limit), sink))
}

/// Binary strings with a leading one and no run of three ones, by length.
fn zt_strings(max_len: usize) -> Vec<String> {
    fn grow(cur: &mut String, run: usize, max_len: usize, out: &mut Vec<String>) {
        out.push(cur.clone());
        if cur.len() == max_len {
            return;
        }
        cur.push('0');
        grow(cur, 0, max_len, out);
        cur.pop();
        if run < 2 {
            cur.push('1');
            grow(cur, run + 1, max_len, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut "1".to_string(), 1, max_len, &mut out);
    out
}

fn zt_unique(limit: u64) -> Outcome {
    let max_len = limit.min(ZT_UNIQUE_MAX_LEN);
    let words = zt_strings(max_len as usize);
    let values: Vec<Option<u64>> = words
        .par_iter()
        .map(|w| w.parse::<ZtWord>().ok().and_then(|z| zt_decode(&z).ok()))
        .collect();
    let mut sink = scan(0, words.len() as i64 - 1, |i, s| {
        let w = &words[i as usize];
        match values[i as usize] {
            Some(v) => s.expect_ok(
                format!("zt_encode(decode({w}))"),
                w.clone(),
                zt_encode(v).map(|z| z.to_string()),
            ),
            None => s.fail(format!("decode({w})"), "value", "invalid"),
        }
    });
    let distinct: BTreeSet<u64> = values.iter().flatten().copied().collect();
    let top = t(max_len as usize + 3) - 1;
    sink.expect(
        format!("words of length <= {max_len}"),
        top,
        words.len() as u64,
    );
    sink.expect(
        format!("distinct values of length <= {max_len}"),
        top,
        distinct.len() as u64,
    );
    let covers = distinct.first() == Some(&1) && distinct.last() == Some(&top);
    if !covers {
        sink.fail(
            format!("values of length <= {max_len}"),
            format!("[1, {top}]"),
            format!("{:?}..{:?}", distinct.first(), distinct.last()),
        );
    }
    Ok((range(1, max_len), sink))
}

fn zt_order(limit: u64) -> Outcome {
    let sink = scan(1, limit as i64 - 1, |n, s| {
        let n = n as u64;
        match (zt_encode(n), zt_encode(n + 1)) {
            (Ok(a), Ok(b)) => {
                if (a.len(), a.digits()) >= (b.len(), b.digits()) {
                    s.fail(
                        format!("ZT({n}) < ZT({})", n + 1),
                        format!("{a} < {b}"),
                        "not increasing",
                    );
                }
            }
            _ => s.fail(format!("ZT({n})"), "word", "error"),
        }
    });
    Ok((range(1, limit), sink))
}

fn zt_census(limit: u64) -> Outcome {
    let mut sink = Sink::default();
    let mut by_len: Vec<u64> = Vec::new();
    for n in 1..=limit {
        match zt_length(n) {
            Ok(l) => {
                if by_len.len() <= l {
                    by_len.resize(l + 1, 0);
                }
                by_len[l] += 1;
            }
            Err(e) => sink.fail(format!("zt_length({n})"), "length", e),
        }
    }
    const LISTED: [u64; 7] = [1, 2, 3, 6, 11, 20, 37];
    let mut len = 1;
    while t(len + 3) - 1 <= limit {
        let got = by_len.get(len).copied().unwrap_or(0);
        sink.expect(format!("#ZT length {len}"), t(len + 3) - t(len + 2), got);
        if let Some(&listed) = LISTED.get(len - 1) {
            sink.expect(format!("#ZT length {len} (listed)"), listed, got);
        }
        len += 1;
    }
    Ok((range(1, limit), sink))
}

fn abc_roundtrip(limit: u64) -> Outcome {
    let sink = scan(0, limit as i64, |n, s| {
        let n = n as u64;
        let w = match abc_encode(n) {
            Ok(w) => w,
            Err(e) => return s.fail(format!("abc_encode({n})"), "word", e),
        };
        s.expect_ok(format!("abc_decode(abc_encode({n}))"), n, abc_decode(&w));
        if let Err(v) = abc_validate(&w.to_string()) {
            s.fail(format!("abc_validate({w})"), "ok", v);
        }
        let form = abc_blockform(&w);
        if form.blocks.windows(2).any(|p| p[0].0 == p[1].0) {
            s.fail(
                format!("blocks({w})"),
                "adjacent letters differ",
                format!("{:?}", form.blocks),
            );
        }
        let exps: usize = form.blocks.iter().map(|b| b.1 as usize).sum();
        s.expect(format!("Σk+1 for {w}"), w.len(), exps + 1);
        s.expect(
            format!("letter counts of {w}"),
            w.len(),
            form.total_letters(),
        );
        match abc_chain(n) {
            Ok(chain) => {
                let mut args = vec![n];
                args.extend(chain.iter().map(|c| c.index));
                let last = chain.last().map(|c| (c.letter, c.index));
                // the final [B, 0] repeats the 0 reached just before it
                let descending = args[..args.len() - 1].windows(2).all(|p| p[0] > p[1]);
                if !descending || last != Some((B, 0)) || !args.ends_with(&[0, 0]) {
                    s.fail(
                        format!("chain({n})"),
                        "strictly decreasing to [B, 0]",
                        format!("{args:?}"),
                    );
                }
            }
            Err(e) => s.fail(format!("chain({n})"), "chain", e),
        }
    });
    Ok((range(0, limit), sink))
}

fn abc_strings(max_len: usize) -> Vec<String> {
    let mut out = vec!["0".to_string()];
    let mut bodies = vec![String::new()];
    for len in 2..=max_len {
        for body in &bodies {
            for last in ['1', '2'] {
                out.push(format!("{body}{last}0"));
            }
        }
        if len < max_len {
            bodies = bodies
                .iter()
                .flat_map(|b| ['0', '1', '2'].map(|c| format!("{b}{c}")))
                .collect();
        }
    }
    out
}

fn abc_unique(limit: u64) -> Outcome {
    let max_len = limit.min(ABC_UNIQUE_MAX_LEN);
    let words = abc_strings(max_len as usize);
    let values: Vec<Option<u64>> = words
        .par_iter()
        .map(|w| w.parse::<AbcWord>().ok().and_then(|a| abc_decode(&a).ok()))
        .collect();
    let mut sink = scan(0, words.len() as i64 - 1, |i, s| {
        let w = &words[i as usize];
        match values[i as usize] {
            Some(v) => s.expect_ok(
                format!("abc_encode(decode({w}))"),
                w.clone(),
                abc_encode(v).map(|a| a.to_string()),
            ),
            None => s.fail(format!("decode({w})"), "value", "invalid"),
        }
    });
    let distinct: BTreeSet<u64> = values.iter().flatten().copied().collect();
    sink.expect(
        format!("distinct values of length <= {max_len}"),
        words.len(),
        distinct.len(),
    );
    Ok((range(1, max_len), sink))
}

fn abc_descent(limit: u64) -> Outcome {
    let o = Oracle::covering(limit);
    let sink = scan(1, limit as i64, |k, s| {
        let k = k as u64;
        for x in Letter::ALL {
            if o.seq(x, k) <= k {
                s.fail(format!("{x}({k}) > {k}"), "true", o.seq(x, k));
            }
            if !matches!(seq_closed(x, k), Ok(v) if v > k) {
                s.fail(
                    format!("closed {x}({k}) > {k}"),
                    "true",
                    format!("{:?}", seq_closed(x, k)),
                );
            }
        }
    });
    Ok((range(1, limit), sink))
}

fn codec_pair(n: u64) -> Result<(ZtWord, AbcWord)> {
    Ok((zt_encode(n)?, abc_encode(n)?))
}

fn equivalence(limit: u64) -> Outcome {
    let sink = scan(1, limit as i64, |n, s| {
        let (zt, abc) = match codec_pair(n as u64) {
            Ok(p) => p,
            Err(e) => return s.fail(format!("codecs({n})"), "words", e),
        };
        let before = probe::numeric_calls();
        let forward = convert(&zt);
        let backward = convert_back(&abc);
        let touched = probe::numeric_calls() - before;
        s.expect_ok(format!("convert({zt})"), abc.clone(), forward);
        s.expect_ok(format!("convert_back({abc})"), zt, backward);
        s.expect(
            format!("numeric calls during conversion of {n}"),
            0,
            touched,
        );
    });
    Ok((range(1, limit), sink))
}

fn inversion(limit: u64) -> Outcome {
    let sink = scan(1, limit as i64, |n, s| {
        let (zt, abc) = match codec_pair(n as u64) {
            Ok(p) => p,
            Err(e) => return s.fail(format!("codecs({n})"), "words", e),
        };
        s.expect_ok(
            format!("convert_back(convert({zt}))"),
            zt.clone(),
            convert(&zt).and_then(|a| convert_back(&a)),
        );
        s.expect_ok(
            format!("convert(convert_back({abc}))"),
            abc.clone(),
            convert_back(&abc).and_then(|z| convert(&z)),
        );
    });
    Ok((range(1, limit), sink))
}

fn versions(limit: u64) -> Outcome {
    let sink = scan(1, limit as i64, |n, s| {
        let zt = match zt_encode(n as u64) {
            Ok(w) => w,
            Err(e) => return s.fail(format!("zt_encode({n})"), "word", e),
        };
        let hat = zt_to_hat(&zt);
        let abdx = match hat_to_abdx(&hat) {
            Ok(w) => w,
            Err(e) => return s.fail(format!("hat_to_abdx({hat})"), "word", e),
        };
        s.expect_ok(
            format!("tokens({abdx})"),
            hat.clone(),
            abdx_to_hat(&abdx, HatVersion::Tokens),
        );
        s.expect_ok(
            format!("letterwise({abdx})"),
            hat,
            abdx_to_hat(&abdx, HatVersion::Letterwise),
        );
    });
    Ok((range(1, limit), sink))
}

fn structure(limit: u64) -> Outcome {
    let sink = scan(1, limit as i64, |n, s| {
        let (zt, abc) = match codec_pair(n as u64) {
            Ok(p) => p,
            Err(e) => return s.fail(format!("codecs({n})"), "words", e),
        };
        let hat = zt_to_hat(&zt);
        s.expect(format!("|hat({zt})|"), zt.len() + 2, hat.len());
        match hat_to_abdx(&hat) {
            Ok(w) => {
                s.expect(format!("|abdx({hat})|"), hat.len() - 1, w.len());
                if let Err(v) = validate_abdx(w.letters()) {
                    s.fail(format!("validate({w})"), "ok", v);
                }
                s.expect_ok(format!("abdx_to_abc({w})"), abc.clone(), abdx_to_abc(&w));
            }
            Err(e) => s.fail(format!("hat_to_abdx({hat})"), "word", e),
        }
        match abc_to_abdx(&abc) {
            Ok(w) => {
                if let Err(v) = validate_abdx(w.letters()) {
                    s.fail(format!("validate({w})"), "ok", v);
                }
                s.expect_ok(
                    format!("hat_to_zt({w})"),
                    zt.clone(),
                    abdx_to_hat(&w, HatVersion::Letterwise).and_then(|h| hat_to_zt(&h)),
                );
            }
            Err(e) => s.fail(format!("abc_to_abdx({abc})"), "word", e),
        }
    });
    Ok((range(1, limit), sink))
}

fn tribons(limit: u64) -> Outcome {
    let census = tribon_census(limit)?;
    let mut sink = Sink::default();
    for f in census.unexpected_tribons() {
        sink.fail(format!("tribon {f}"), "one of the 20", census.tribons[f]);
    }
    for f in census.unexpected_doublets() {
        sink.fail(format!("doublet {f}"), "one of the 11", census.doublets[f]);
    }
    Ok((range(1, limit), sink))
}

fn tribon_attainment(limit: u64) -> Outcome {
    let census = tribon_census(limit)?;
    let mut sink = Sink::default();
    for f in census.missing_tribons() {
        sink.fail(format!("tribon {f}"), "observed", "never");
    }
    for f in census.missing_doublets() {
        sink.fail(format!("doublet {f}"), "observed", "never");
    }
    Ok((range(1, limit), sink))
}
