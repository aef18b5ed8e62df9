mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{check_dawg_structure, random_runs};
use rlelz::dawg::RleDawg;
use rlelz::online::OnlineFactorizer;
use rlelz::rle::RleString;

#[test]
fn random_small_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 1..=12 {
        for _ in 0..25 {
            let rle = random_runs(&mut rng, n, 3, 3);
            if let Err(e) = check_dawg_structure(&rle) {
                panic!("{}: {e}", rle.to_text().replace('\n', " "));
            }
        }
    }
}

#[test]
fn incremental_matches_batch() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let rle = random_runs(&mut rng, 40, 3, 4);
        let mut d = RleDawg::new();
        for (i, &f) in rle.runs().iter().enumerate() {
            d.extend(f);
            assert_eq!(d.len(), i + 1);
            let s = d.stats();
            assert!(s.live_pairs() <= s.peak_live_pairs);
        }
        d.check_invariants().unwrap();
        assert_eq!(d.canonical_form(), RleDawg::build(rle.runs()).canonical_form());

        let mut fz = OnlineFactorizer::new();
        for &f in rle.runs() {
            fz.push_run(f).unwrap();
        }
        assert_eq!(fz.into_dawg().canonical_form(), d.canonical_form());
    }
}

#[test]
fn incoming_maxima_never_shrink() {
    let rle = RleString::encode(b"aabaaabaabaaaabaaaaabab");
    let mut d = RleDawg::new();
    let mut before: Vec<(usize, usize)> = Vec::new();
    for &f in rle.runs() {
        d.extend(f);
        // node ids are stable across extensions
        for &(node, prev) in &before {
            let id = d.node_ids().nth(node).unwrap();
            assert!(d.incoming_link_max(id, b'a') >= prev);
        }
        before = d.node_ids().map(|v| (v.index(), d.incoming_link_max(v, b'a'))).collect();
    }
}
