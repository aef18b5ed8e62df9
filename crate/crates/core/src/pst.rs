//! Dynamic set of integer pairs with three-sided range queries.
//!
//! An AVL tree keyed on `x` where every node caches the pair of maximum `y`
//! in its subtree (ties broken towards the smaller `x`). That single
//! augmentation answers all of
//!
//! * `min_x_in_rectangle(L, R, B)`: smallest `x` in `[L, R]` with `y >= B`,
//! * `max_x_in_rectangle(L, R, B)`: largest such `x`,
//! * `max_y_in_range(L, R)`: the pair of largest `y` with `x` in `[L, R]`,
//!
//! in `O(log n)`, and the global maximum `y` in `O(1)` from the root.
//! Keys are unique: inserting an `x` that is already present is a
//! contract violation.

use std::cmp::Ordering;

type Link<X, Y> = Option<Box<Node<X, Y>>>;

#[derive(Clone, Debug)]
struct Node<X, Y> {
    x: X,
    y: Y,
    height: u8,
    best: (X, Y),
    left: Link<X, Y>,
    right: Link<X, Y>,
}

/// Larger `y` wins; equal `y` goes to the smaller `x`.
fn better<X: Ord + Copy, Y: Ord + Copy>(a: (X, Y), b: (X, Y)) -> (X, Y) {
    match a.1.cmp(&b.1) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal if a.0 <= b.0 => a,
        Ordering::Equal => b,
    }
}

fn better_opt<X: Ord + Copy, Y: Ord + Copy>(a: Option<(X, Y)>, b: Option<(X, Y)>) -> Option<(X, Y)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(better(a, b)),
        (a, None) => a,
        (None, b) => b,
    }
}

fn height<X, Y>(link: &Link<X, Y>) -> u8 {
    link.as_ref().map_or(0, |n| n.height)
}

impl<X: Ord + Copy, Y: Ord + Copy> Node<X, Y> {
    fn leaf(x: X, y: Y) -> Box<Self> {
        Box::new(Node { x, y, height: 1, best: (x, y), left: None, right: None })
    }

    fn update(&mut self) {
        self.height = 1 + height(&self.left).max(height(&self.right));
        let mut best = (self.x, self.y);
        if let Some(l) = &self.left {
            best = better(l.best, best);
        }
        if let Some(r) = &self.right {
            best = better(best, r.best);
        }
        self.best = best;
    }

    fn balance_factor(&self) -> i16 {
        height(&self.left) as i16 - height(&self.right) as i16
    }
}

fn rotate_right<X: Ord + Copy, Y: Ord + Copy>(mut node: Box<Node<X, Y>>) -> Box<Node<X, Y>> {
    let mut pivot = node.left.take().expect("rotate_right without left child");
    node.left = pivot.right.take();
    node.update();
    pivot.right = Some(node);
    pivot.update();
    pivot
}

fn rotate_left<X: Ord + Copy, Y: Ord + Copy>(mut node: Box<Node<X, Y>>) -> Box<Node<X, Y>> {
    let mut pivot = node.right.take().expect("rotate_left without right child");
    node.right = pivot.left.take();
    node.update();
    pivot.left = Some(node);
    pivot.update();
    pivot
}

fn rebalance<X: Ord + Copy, Y: Ord + Copy>(mut node: Box<Node<X, Y>>) -> Box<Node<X, Y>> {
    node.update();
    let bf = node.balance_factor();
    if bf > 1 {
        if node.left.as_ref().is_some_and(|l| l.balance_factor() < 0) {
            node.left = node.left.take().map(rotate_left);
        }
        return rotate_right(node);
    }
    if bf < -1 {
        if node.right.as_ref().is_some_and(|r| r.balance_factor() > 0) {
            node.right = node.right.take().map(rotate_right);
        }
        return rotate_left(node);
    }
    node
}

fn insert<X: Ord + Copy, Y: Ord + Copy>(link: Link<X, Y>, x: X, y: Y) -> Box<Node<X, Y>> {
    let Some(mut node) = link else {
        return Node::leaf(x, y);
    };
    match x.cmp(&node.x) {
        Ordering::Less => node.left = Some(insert(node.left.take(), x, y)),
        Ordering::Greater => node.right = Some(insert(node.right.take(), x, y)),
        Ordering::Equal => panic!("PstPairSet::insert: x is already present"),
    }
    rebalance(node)
}

/// Detaches the minimum node of a non-empty subtree.
fn take_min<X: Ord + Copy, Y: Ord + Copy>(mut node: Box<Node<X, Y>>) -> (Link<X, Y>, (X, Y)) {
    match node.left.take() {
        None => (node.right.take(), (node.x, node.y)),
        Some(left) => {
            let (rest, min) = take_min(left);
            node.left = rest;
            (Some(rebalance(node)), min)
        }
    }
}

fn remove<X: Ord + Copy, Y: Ord + Copy>(link: Link<X, Y>, x: X, y: Y) -> Link<X, Y> {
    let mut node = link.expect("PstPairSet::delete: pair is not present");
    match x.cmp(&node.x) {
        Ordering::Less => node.left = remove(node.left.take(), x, y),
        Ordering::Greater => node.right = remove(node.right.take(), x, y),
        Ordering::Equal => {
            assert!(node.y == y, "PstPairSet::delete: pair is not present");
            match (node.left.take(), node.right.take()) {
                (None, None) => return None,
                (Some(l), None) => return Some(l),
                (None, Some(r)) => return Some(r),
                (Some(l), Some(r)) => {
                    let (rest, (sx, sy)) = take_min(r);
                    node.x = sx;
                    node.y = sy;
                    node.left = Some(l);
                    node.right = rest;
                }
            }
        }
    }
    Some(rebalance(node))
}

/// Best pair among keys `>= lo`.
fn best_from<X: Ord + Copy, Y: Ord + Copy>(mut link: &Link<X, Y>, lo: X) -> Option<(X, Y)> {
    let mut acc = None;
    while let Some(node) = link {
        if node.x < lo {
            link = &node.right;
        } else {
            let right = node.right.as_ref().map(|r| r.best);
            acc = better_opt(better_opt(Some((node.x, node.y)), right), acc);
            link = &node.left;
        }
    }
    acc
}

/// Best pair among keys `<= hi`.
fn best_upto<X: Ord + Copy, Y: Ord + Copy>(mut link: &Link<X, Y>, hi: X) -> Option<(X, Y)> {
    let mut acc = None;
    while let Some(node) = link {
        if node.x > hi {
            link = &node.left;
        } else {
            let left = node.left.as_ref().map(|l| l.best);
            acc = better_opt(acc, better_opt(left, Some((node.x, node.y))));
            link = &node.right;
        }
    }
    acc
}

/// Smallest `x` in `[lo, hi]` with `y >= min_y`. The bounds are `None` when
/// an ancestor already guarantees them.
fn leftmost<X: Ord + Copy, Y: Ord + Copy>(link: &Link<X, Y>, lo: Option<X>, hi: Option<X>, min_y: Y) -> Option<(X, Y)> {
    let node = link.as_ref()?;
    if node.best.1 < min_y {
        return None;
    }
    if lo.is_some_and(|lo| node.x < lo) {
        return leftmost(&node.right, lo, hi, min_y);
    }
    if hi.is_some_and(|hi| node.x > hi) {
        return leftmost(&node.left, lo, hi, min_y);
    }
    leftmost(&node.left, lo, None, min_y)
        .or_else(|| (node.y >= min_y).then_some((node.x, node.y)))
        .or_else(|| leftmost(&node.right, None, hi, min_y))
}

fn rightmost<X: Ord + Copy, Y: Ord + Copy>(
    link: &Link<X, Y>,
    lo: Option<X>,
    hi: Option<X>,
    min_y: Y,
) -> Option<(X, Y)> {
    let node = link.as_ref()?;
    if node.best.1 < min_y {
        return None;
    }
    if lo.is_some_and(|lo| node.x < lo) {
        return rightmost(&node.right, lo, hi, min_y);
    }
    if hi.is_some_and(|hi| node.x > hi) {
        return rightmost(&node.left, lo, hi, min_y);
    }
    rightmost(&node.right, None, hi, min_y)
        .or_else(|| (node.y >= min_y).then_some((node.x, node.y)))
        .or_else(|| rightmost(&node.left, lo, None, min_y))
}

/// Dynamic set of `(x, y)` pairs with unique `x`.
#[derive(Clone, Debug)]
pub struct PstPairSet<X = usize, Y = usize> {
    root: Link<X, Y>,
    len: usize,
}

impl<X, Y> Default for PstPairSet<X, Y> {
    fn default() -> Self {
        PstPairSet { root: None, len: 0 }
    }
}

impl<X: Ord + Copy, Y: Ord + Copy> PstPairSet<X, Y> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    ///
    /// Panics if a pair with the same `x` is present.
    pub fn insert(&mut self, x: X, y: Y) {
        self.root = Some(insert(self.root.take(), x, y));
        self.len += 1;
    }

    /// # Panics
    ///
    /// Panics if `(x, y)` is not present.
    pub fn delete(&mut self, x: X, y: Y) {
        self.root = remove(self.root.take(), x, y);
        self.len -= 1;
    }

    /// The `y` stored under `x`, if any.
    pub fn get(&self, x: X) -> Option<Y> {
        let mut link = &self.root;
        while let Some(node) = link {
            match x.cmp(&node.x) {
                Ordering::Less => link = &node.left,
                Ordering::Greater => link = &node.right,
                Ordering::Equal => return Some(node.y),
            }
        }
        None
    }

    pub fn min_x_in_rectangle(&self, lo: X, hi: X, min_y: Y) -> Option<(X, Y)> {
        debug_assert!(lo <= hi);
        leftmost(&self.root, Some(lo), Some(hi), min_y)
    }

    pub fn max_x_in_rectangle(&self, lo: X, hi: X, min_y: Y) -> Option<(X, Y)> {
        debug_assert!(lo <= hi);
        rightmost(&self.root, Some(lo), Some(hi), min_y)
    }

    /// Pair with the largest `y` among `lo <= x <= hi`; equal `y` resolves
    /// to the smallest `x`.
    pub fn max_y_in_range(&self, lo: X, hi: X) -> Option<(X, Y)> {
        debug_assert!(lo <= hi);
        let mut link = &self.root;
        while let Some(node) = link {
            if node.x < lo {
                link = &node.right;
            } else if node.x > hi {
                link = &node.left;
            } else {
                let left = best_from(&node.left, lo);
                let right = best_upto(&node.right, hi);
                return better_opt(better_opt(left, Some((node.x, node.y))), right);
            }
        }
        None
    }

    /// Pair with the largest `y` over the whole set, read off the root.
    pub fn max_y(&self) -> Option<(X, Y)> {
        self.root.as_ref().map(|n| n.best)
    }

    /// All pairs in increasing `x`.
    pub fn to_vec(&self) -> Vec<(X, Y)> {
        fn walk<X: Copy, Y: Copy>(link: &Link<X, Y>, out: &mut Vec<(X, Y)>) {
            if let Some(n) = link {
                walk(&n.left, out);
                out.push((n.x, n.y));
                walk(&n.right, out);
            }
        }
        let mut out = Vec::with_capacity(self.len);
        walk(&self.root, &mut out);
        out
    }

    pub fn height(&self) -> usize {
        height(&self.root) as usize
    }

    /// Verifies search order, AVL balance, cached heights and cached maxima.
    /// Linear time; meant for tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        // (height, size, best pair) of a verified subtree
        type Summary<X, Y> = (u8, usize, Option<(X, Y)>);
        fn check<X: Ord + Copy, Y: Ord + Copy>(
            link: &Link<X, Y>,
            lo: Option<X>,
            hi: Option<X>,
        ) -> Result<Summary<X, Y>, String> {
            let Some(n) = link else {
                return Ok((0, 0, None));
            };
            if lo.is_some_and(|lo| n.x <= lo) || hi.is_some_and(|hi| n.x >= hi) {
                return Err("search order violated".into());
            }
            let (hl, cl, bl) = check(&n.left, lo, Some(n.x))?;
            let (hr, cr, br) = check(&n.right, Some(n.x), hi)?;
            if (hl as i16 - hr as i16).abs() > 1 {
                return Err("AVL balance violated".into());
            }
            let h = 1 + hl.max(hr);
            if h != n.height {
                return Err("stale height".into());
            }
            let best = better_opt(better_opt(bl, Some((n.x, n.y))), br).unwrap();
            if best != n.best {
                return Err("stale subtree maximum".into());
            }
            Ok((h, cl + cr + 1, Some(best)))
        }
        let (_, count, _) = check(&self.root, None, None)?;
        if count != self.len {
            return Err(format!("len is {} but tree holds {}", self.len, count));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::PstReference;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample() -> PstPairSet<i64, i64> {
        let mut d = PstPairSet::new();
        d.insert(1, 5);
        d.insert(3, 2);
        d.insert(4, 7);
        d
    }

    #[test]
    fn insert_examples() {
        let mut d = PstPairSet::new();
        d.insert(3, 7);
        assert_eq!(d.to_vec(), [(3, 7)]);
        d.insert(1, 5);
        d.insert(4, 2);
        assert_eq!(d.to_vec(), [(1, 5), (3, 7), (4, 2)]);
        d.check_invariants().unwrap();
    }

    #[test]
    fn delete_examples() {
        let mut d = PstPairSet::new();
        d.insert(3, 7);
        d.delete(3, 7);
        assert!(d.is_empty());
        d.insert(3, 9);
        assert_eq!(d.to_vec(), [(3, 9)]);
    }

    #[test]
    #[should_panic(expected = "already present")]
    fn duplicate_insert_panics() {
        let mut d = sample();
        d.insert(3, 1);
    }

    #[test]
    #[should_panic(expected = "not present")]
    fn absent_delete_panics() {
        let mut d = sample();
        d.delete(3, 3);
    }

    #[test]
    fn query_examples() {
        let d = sample();
        assert_eq!(d.min_x_in_rectangle(2, 4, 3), Some((4, 7)));
        assert_eq!(d.min_x_in_rectangle(1, 4, 0), Some((1, 5)));
        assert_eq!(d.max_x_in_rectangle(1, 4, 3), Some((4, 7)));
        assert_eq!(d.max_x_in_rectangle(1, 3, 6), None);
        assert_eq!(d.max_y_in_range(1, 3), Some((1, 5)));
        assert_eq!(d.max_y_in_range(1, 4), Some((4, 7)));
        assert_eq!(d.max_y(), Some((4, 7)));

        let e = PstPairSet::<i64, i64>::new();
        assert_eq!(e.min_x_in_rectangle(0, 10, 0), None);
        assert_eq!(e.max_x_in_rectangle(0, 10, 0), None);
        assert_eq!(e.max_y_in_range(0, 10), None);
        assert_eq!(e.max_y(), None);
    }

    #[test]
    fn max_y_ties_prefer_smaller_x() {
        let mut d = PstPairSet::new();
        for x in [9, 2, 7, 4] {
            d.insert(x, 5);
        }
        assert_eq!(d.max_y(), Some((2, 5)));
        assert_eq!(d.max_y_in_range(3, 9), Some((4, 5)));
    }

    #[test]
    fn random_inserts_match_reference() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut d = PstPairSet::new();
        let mut r = PstReference::new();
        while d.len() < 10_000 {
            let x: i64 = rng.random_range(-50_000..50_000);
            if r.contains_x(x) {
                continue;
            }
            let y = rng.random_range(0..1000);
            d.insert(x, y);
            r.insert(x, y);
        }
        d.check_invariants().unwrap();
        assert_eq!(d.to_vec(), r.sorted());
        // AVL height bound 1.44 log2(n + 2)
        assert!(d.height() <= 20);
    }

    #[test]
    fn interleaved_ops_match_reference() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut d = PstPairSet::new();
        let mut r = PstReference::new();
        for step in 0..10_000 {
            if rng.random_bool(0.55) || r.is_empty() {
                let x: i64 = rng.random_range(0..2_000);
                if !r.contains_x(x) {
                    let y = rng.random_range(0..100);
                    d.insert(x, y);
                    r.insert(x, y);
                }
            } else {
                let (x, y) = r.pairs()[rng.random_range(0..r.len())];
                d.delete(x, y);
                r.delete(x, y);
            }
            if step % 1000 == 0 {
                d.check_invariants().unwrap();
            }
        }
        d.check_invariants().unwrap();
        assert_eq!(d.to_vec(), r.sorted());
    }
}
