//! Normalized compression distance with the s-factor count as the size
//! function: `(C(ab) - min(C(a), C(b))) / max(C(a), C(b))`.

use crate::offline::factorize_offline;
use crate::rle::RleString;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ncd {
    pub c_a: usize,
    pub c_b: usize,
    pub c_ab: usize,
    pub value: f64,
}

/// Number of s-factors of `text`.
pub fn factor_count(text: &[u8]) -> usize {
    factorize_offline(&RleString::encode(text)).len()
}

/// Distance between `a` and `b`; 0 when both are empty.
pub fn ncd(a: &[u8], b: &[u8]) -> Ncd {
    let c_a = factor_count(a);
    let c_b = factor_count(b);
    let c_ab = factor_count(&[a, b].concat());
    let hi = c_a.max(c_b);
    let value = if hi == 0 { 0.0 } else { (c_ab - c_a.min(c_b)) as f64 / hi as f64 };
    Ncd { c_a, c_b, c_ab, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_s_factorize;

    #[test]
    fn identical_inputs_are_close() {
        let a = b"the quick brown fox jumps over the lazy dog";
        let d = ncd(a, a);
        assert!(d.c_ab < 2 * d.c_a);
        assert!((0.0..=0.5).contains(&d.value), "{d:?}");
    }

    #[test]
    fn disjoint_alphabets_are_far() {
        let a: Vec<u8> = (0..40u8).map(|i| b'a' + i % 13).collect();
        let b: Vec<u8> = (0..40u8).map(|i| b'A' + i % 13).collect();
        let d = ncd(&a, &b);
        assert!(d.value > 0.9, "{d:?}");
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(ncd(b"", b""), Ncd { c_a: 0, c_b: 0, c_ab: 0, value: 0.0 });
        let d = ncd(b"", b"abc");
        assert_eq!((d.c_a, d.c_b, d.c_ab), (0, 3, 3));
        assert_eq!(d.value, 1.0);
    }

    #[test]
    fn count_matches_oracle() {
        for s in [&b"abaabababaaaaabbabab"[..], b"mississippi", b""] {
            assert_eq!(factor_count(s), naive_s_factorize(s).len());
        }
    }
}
