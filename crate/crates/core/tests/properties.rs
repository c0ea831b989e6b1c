use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tribo::abc::{abc_decode, abc_encode, AbcWord};
use tribo::equiv::{
    abc_to_abdx, abdx_to_hat, convert, convert_back, hat_to_abdx, zt_to_hat, AbdxWord, HatVersion,
    HatWord,
};
use tribo::oeis::parse_bfile_str;
use tribo::probe::numeric_calls;
use tribo::rank::{letter_at, rank_fast, select};
use tribo::sequences::{abc_identity_gap, classify, compose, rank_of_seq, seq_closed, z_of_seq};
use tribo::word::{morphism_apply, prefix, word_stream, Letter};
use tribo::zt::{zt_decode, zt_encode, ZtWord};

const LETTERS: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

fn letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(LETTERS.to_vec())
}

fn zt_text() -> impl Strategy<Value = String> {
    "1[01]{0,60}".prop_filter("no 111", |s| !s.contains("111"))
}

fn abc_text() -> impl Strategy<Value = String> {
    prop_oneof![Just("0".to_string()), "[012]{0,16}[12]0".prop_map(|s| s),]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn zt_round_trip(n in 1u64..=1 << 62) {
        let w = zt_encode(n).unwrap();
        prop_assert!(!w.to_string().contains("111"));
        prop_assert_eq!(zt_decode(&w).unwrap(), n);
    }

    #[test]
    fn zt_words_decode_and_reencode(s in zt_text()) {
        let w: ZtWord = s.parse().unwrap();
        let n = zt_decode(&w).unwrap();
        prop_assert_eq!(zt_encode(n).unwrap(), w);
    }

    #[test]
    fn abc_round_trip(n in 0u64..=1 << 50) {
        let w = abc_encode(n).unwrap();
        prop_assert_eq!(abc_decode(&w).unwrap(), n);
    }

    #[test]
    fn abc_words_decode_and_reencode(s in abc_text()) {
        let w: AbcWord = s.parse().unwrap();
        let n = abc_decode(&w).unwrap();
        prop_assert_eq!(abc_encode(n).unwrap(), w);
    }

    #[test]
    fn equivalence_far_out(n in 1u64..=1 << 50) {
        let (zt, abc) = (zt_encode(n).unwrap(), abc_encode(n).unwrap());
        prop_assert_eq!(convert(&zt).unwrap(), abc.clone());
        prop_assert_eq!(convert_back(&abc).unwrap(), zt);
    }

    #[test]
    fn conversion_is_an_involution_on_words(s in zt_text()) {
        let w: ZtWord = s.parse().unwrap();
        prop_assert_eq!(convert_back(&convert(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn intermediate_words_reparse(s in zt_text()) {
        let hat = zt_to_hat(&s.parse().unwrap());
        let abdx = hat_to_abdx(&hat).unwrap();
        prop_assert_eq!(hat.to_string().parse::<HatWord>().unwrap(), hat.clone());
        prop_assert_eq!(abdx.to_string().parse::<AbdxWord>().unwrap(), abdx.clone());
        prop_assert_eq!(abdx_to_hat(&abdx, HatVersion::Tokens).unwrap(), hat.clone());
        prop_assert_eq!(abdx_to_hat(&abdx, HatVersion::Letterwise).unwrap(), hat);
        let abc = convert(&s.parse().unwrap()).unwrap();
        prop_assert_eq!(abc_to_abdx(&abc).unwrap(), abdx);
    }

    #[test]
    fn rank_profile_invariants(n in -1i64..=1 << 50) {
        let r = rank_fast(n).unwrap();
        prop_assert_eq!(r.count_a + r.count_b + r.count_c, (n + 1) as u64);
        prop_assert_eq!(r.weighted, r.count_a + 2 * r.count_c);
    }

    #[test]
    fn select_inverts_rank(n in 0u64..=1 << 50) {
        let x = letter_at(n);
        let k = rank_fast(n as i64).unwrap().count(x) - 1;
        prop_assert_eq!(select(x, k).unwrap(), n);
    }

    #[test]
    fn classify_round_trips(n in 0u64..=1 << 50) {
        let c = classify(n).unwrap();
        prop_assert_eq!(seq_closed(c.letter, c.index).unwrap(), n);
        prop_assert_eq!(c.letter, letter_at(n));
    }

    #[test]
    fn compositions_far_out(x in letter(), y in letter(), k in 0u64..=1 << 30, shifted in any::<bool>()) {
        let inner = seq_closed(y, k).unwrap() + shifted as u64;
        prop_assert_eq!(compose(x, y, k, shifted).unwrap(), seq_closed(x, inner).unwrap());
    }

    #[test]
    fn counts_at_sequence_positions(x in letter(), y in letter(), k in 0u64..=1 << 30) {
        let pos = seq_closed(y, k).unwrap() as i64;
        let r = rank_fast(pos).unwrap();
        prop_assert_eq!(rank_of_seq(x, y, k).unwrap(), r.count(x));
        prop_assert_eq!(z_of_seq(y, k).unwrap(), r.weighted);
    }

    #[test]
    fn closed_forms_against_select(x in letter(), n in 0u64..=1 << 40) {
        prop_assert_eq!(seq_closed(x, n).unwrap(), select(x, n).unwrap());
        prop_assert_eq!(abc_identity_gap(n).unwrap(), 0);
    }

    #[test]
    fn bfile_text_round_trip(first in -5i64..100, values in prop::collection::vec(any::<i64>(), 1..50), crlf in any::<bool>()) {
        let eol = if crlf { "\r\n" } else { "\n" };
        let mut text = format!("# A000001 test{eol}{eol}");
        for (i, v) in values.iter().enumerate() {
            text += &format!("{} {v}{eol}", first + i as i64);
        }
        let b = parse_bfile_str(&text).unwrap();
        prop_assert_eq!(b.first, first);
        prop_assert_eq!(b.values, values.iter().map(|&v| v as i128).collect::<Vec<_>>());
        prop_assert_eq!(b.id.as_deref(), Some("A000001"));
    }
}

#[test]
fn morphism_maps_prefixes_to_prefixes() {
    let t = prefix(20_000).unwrap();
    for m in (1..=5000).step_by(7) {
        let img = morphism_apply(&prefix(m).unwrap());
        assert_eq!(img.symbols(), &t.symbols()[..img.len()], "m = {m}");
    }
}

#[test]
fn purity_probe_is_live() {
    let before = numeric_calls();
    zt_decode(&"1010".parse().unwrap()).unwrap();
    abc_decode(&"020".parse().unwrap()).unwrap();
    assert!(numeric_calls() >= before + 2);
    let before = numeric_calls();
    convert(&"1010".parse().unwrap()).unwrap();
    assert_eq!(numeric_calls(), before);
}

fn sigma(w: &[u8]) -> Vec<u8> {
    w.iter()
        .flat_map(|&s| match s {
            0 => &[0u8, 1][..],
            1 => &[0, 2][..],
            _ => &[0][..],
        })
        .copied()
        .collect()
}

/// `rank_fast` at 10^4 random positions in [10^6, 10^9], against counts
/// accumulated while streaming `t = σ^10(t)` block by block.
#[test]
fn rank_fast_at_random_far_positions() {
    let mut rng = StdRng::seed_from_u64(20_260_101);
    let mut queries: Vec<u64> = (0..10_000)
        .map(|_| rng.gen_range(1_000_000..=1_000_000_000))
        .collect();
    queries.sort_unstable();

    let blocks: Vec<Vec<u8>> = (0..3u8)
        .map(|s| (0..10).fold(vec![s], |w, _| sigma(&w)))
        .collect();
    let block_counts: Vec<[u64; 3]> = blocks
        .iter()
        .map(|b| {
            let mut c = [0u64; 3];
            b.iter().for_each(|&s| c[s as usize] += 1);
            c
        })
        .collect();

    let mut counts = [0u64; 3];
    let mut start = 0u64;
    let mut next = queries.iter().peekable();
    for driver in word_stream() {
        let block = &blocks[driver as usize];
        let end = start + block.len() as u64;
        while let Some(&&q) = next.peek().filter(|&&&q| q < end) {
            let mut c = counts;
            block[..=(q - start) as usize]
                .iter()
                .for_each(|&s| c[s as usize] += 1);
            let r = rank_fast(q as i64).unwrap();
            assert_eq!([r.count_b, r.count_a, r.count_c], c, "position {q}");
            next.next();
        }
        if next.peek().is_none() {
            break;
        }
        for s in 0..3 {
            counts[s] += block_counts[driver as usize][s];
        }
        start = end;
    }
}
