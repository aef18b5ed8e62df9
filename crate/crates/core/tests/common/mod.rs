#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rlelz::dawg::RleDawg;
use rlelz::oracle::{naive_endpos_classes, naive_longest_prefix_in, naive_preceding_exponent, run_substrings};
use rlelz::rle::{RlFactor, RleString};
use rlelz::synth::{RunDist, SynthConfig};

pub const SIGMAS: [usize; 4] = [1, 2, 4, 16];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistKind {
    Geometric,
    Uniform,
}

impl DistKind {
    pub const ALL: [DistKind; 2] = [DistKind::Geometric, DistKind::Uniform];

    fn pick<R: Rng>(self, rng: &mut R) -> RunDist {
        match self {
            DistKind::Geometric => RunDist::Geometric { rho: [0.15, 0.35, 0.6, 0.9][rng.random_range(0..4)] },
            DistKind::Uniform => RunDist::Uniform { max: [1, 2, 5, 12][rng.random_range(0..4)] },
        }
    }
}

/// `count` seeded strings with lengths uniform on `1..=max_len`.
pub fn corpus(sigma: usize, kind: DistKind, count: usize, max_len: usize, seed: u64) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (sigma as u64) << 32 ^ kind as u64);
    (0..count)
        .map(|_| {
            let cfg = SynthConfig { len: rng.random_range(1..=max_len), sigma, dist: kind.pick(&mut rng) };
            cfg.generate(&mut rng)
        })
        .collect()
}

/// Random run sequence with exactly `n` runs over `sigma` symbols and
/// exponents in `1..=max_exp`.
pub fn random_runs(rng: &mut ChaCha8Rng, n: usize, sigma: u8, max_exp: usize) -> RleString {
    let mut rle = RleString::new();
    while rle.len() < n {
        let ch = b'a' + rng.random_range(0..sigma);
        if rle.runs().last().is_some_and(|l| l.ch == ch) {
            continue;
        }
        rle.push(RlFactor::new(ch, rng.random_range(1..=max_exp))).unwrap();
    }
    rle
}

/// Compares the automaton of `rle` against exhaustive enumeration.
pub fn check_dawg_structure(rle: &RleString) -> Result<(), String> {
    let runs = rle.runs();
    let n = runs.len();
    let d = RleDawg::build(runs);
    d.check_invariants()?;

    // nodes are exactly the end-position classes
    let classes = naive_endpos_classes(rle).map_err(|e| e.to_string())?;
    if classes.len() != d.node_count() {
        return Err(format!("{} classes but {} nodes", classes.len(), d.node_count()));
    }
    let mut seen = vec![false; d.node_count()];
    for class in &classes {
        let v = d.walk(&class.members[0]).ok_or("class member not accepted")?;
        if std::mem::replace(&mut seen[v.index()], true) {
            return Err(format!("two classes map to {v}"));
        }
        for m in &class.members {
            if d.walk(m) != Some(v) {
                return Err(format!("member of length {} leaves class {v}", m.len()));
            }
        }
        if d.node_len(v) != class.longest().len() {
            return Err(format!("{v}: len {} vs longest {}", d.node_len(v), class.longest().len()));
        }
        if !class.end_positions.contains(&d.sample_end(v)) {
            return Err(format!("{v}: sample end {} not an end position", d.sample_end(v)));
        }
    }

    // accepted paths are exactly the run substrings
    let subs = run_substrings(runs);
    let mut alphabet = runs.to_vec();
    alphabet.sort();
    alphabet.dedup();
    for u in &subs {
        for &c in &alphabet {
            let mut w = u.clone();
            w.push(c);
            if d.walk(&w).is_some() != subs.contains(&w) {
                return Err(format!("language differs at a path of {} runs", w.len()));
            }
        }
    }

    // mpe against its definition, for every edge and character
    let mut chars: Vec<u8> = runs.iter().map(|f| f.ch).collect();
    chars.sort_unstable();
    chars.dedup();
    chars.push(b'z');
    for class in &classes {
        let u = d.walk(class.longest()).unwrap();
        for e in d.edges(u) {
            let mut body = class.longest().to_vec();
            body.push(e.label);
            for &a in &chars {
                let want = naive_preceding_exponent(runs, &body, a);
                if d.mpe(u, e.label, a) != Some(want) {
                    return Err(format!("mpe({u}, {}, {}) != {want}", e.label, a as char));
                }
            }
        }
    }

    if n >= 3 && (d.node_count() > 2 * n || d.edge_count() > 3 * n) {
        return Err(format!("n={n}: {} nodes, {} edges", d.node_count(), d.edge_count()));
    }

    // suffix links climb to the source with strictly shrinking lengths
    for v in d.node_ids() {
        let mut cur = v;
        while let Some((t, _)) = d.suffix_link(cur) {
            if d.node_len(t) >= d.node_len(cur) {
                return Err(format!("link {cur} -> {t} does not shrink"));
            }
            cur = t;
        }
        if cur != d.source() {
            return Err(format!("links from {v} end at {cur}"));
        }
    }

    // matching every substring pattern, plus a few perturbed ones
    let text = rle.decode();
    for u in subs.iter().filter(|u| !u.is_empty()) {
        let mut pats = vec![u.clone()];
        let mut grown = u.clone();
        let last = grown.last_mut().unwrap();
        last.exp += 1;
        pats.push(grown);
        if u[0].exp > 1 {
            let mut shrunk = u.clone();
            shrunk[0].exp -= 1;
            pats.push(shrunk);
        }
        for p in pats {
            let want = naive_longest_prefix_in(&text, &RleString::from_runs(p.clone()).unwrap().decode());
            let got = d.longest_prefix_match(&p);
            if got != want {
                return Err(format!("longest prefix match {got} != {want}"));
            }
        }
    }
    Ok(())
}
