//! On-line DAWG (suffix automaton) of a run sequence, with the extra
//! bookkeeping needed to find occurrences that are preceded by a wide
//! enough run.
//!
//! The automaton itself is the classical one, built over the alphabet of
//! runs: each node is a class of run substrings with the same set of end
//! positions, `len` is the size in runs of the longest member, and the
//! suffix link of a node points to the class of its longest member with the
//! first run stripped. A suffix link is labelled with the run it strips.
//!
//! On top of that, for an edge `e = (u, b^q, w)` and a character `a`,
//! `mpe(e, a)` is the largest `p` such that `a^p longest(u) b^q` is a run
//! substring (0 if none). It is answered in two ways:
//!
//! * if `e` is *secondary* (`len(w) > len(u) + 1`), `longest(u) b^q` is
//!   always preceded by the same run, which is read off the run sequence at
//!   any known end position of `w`;
//! * if `e` is *primary*, the candidates are exactly the labels of suffix
//!   links entering `w`, whose per-character maximum is kept at `w`.
//!
//! Each node `u` also keeps, for every pair of characters `(a, b)`, a
//! [`PstPairSet`] of `(q, mpe(e, a))` over its out-edges `e` labelled
//! `b^q` with positive `mpe`, so that "largest `q` among `b`-edges whose
//! `mpe` for `a` is at least `t`" is a single rectangle query.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write};

use crate::pst::PstPairSet;
use crate::rle::RlFactor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(usize);

impl NodeId {
    pub const SOURCE: NodeId = NodeId(0);

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
struct Node<T> {
    len: usize,
    link: Option<(NodeId, RlFactor<T>)>,
    edges: BTreeMap<RlFactor<T>, NodeId>,
    /// One end position (1-based run index) of the class, fixed at creation.
    sample_end: usize,
    /// Per character, the widest label among incoming suffix links.
    incoming_link_max: BTreeMap<T, usize>,
    /// Keyed by (preceding character, edge character).
    psts: BTreeMap<(T, T), PstPairSet<usize, usize>>,
    /// Source and label of the unique primary in-edge; `None` for the source.
    primary_parent: Option<(NodeId, RlFactor<T>)>,
}

impl<T> Node<T> {
    fn new(len: usize, sample_end: usize) -> Self {
        Node {
            len,
            link: None,
            edges: BTreeMap::new(),
            sample_end,
            incoming_link_max: BTreeMap::new(),
            psts: BTreeMap::new(),
            primary_parent: None,
        }
    }
}

/// An out-edge as seen from outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge<T> {
    pub source: NodeId,
    pub label: RlFactor<T>,
    pub target: NodeId,
    pub primary: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DawgStats {
    pub edges: usize,
    pub pairs_created: usize,
    pub pairs_deleted: usize,
    pub peak_live_pairs: usize,
}

impl DawgStats {
    pub fn live_pairs(&self) -> usize {
        self.pairs_created - self.pairs_deleted
    }
}

#[derive(Clone, Debug)]
pub struct RleDawg<T> {
    nodes: Vec<Node<T>>,
    runs: Vec<RlFactor<T>>,
    text_len: usize,
    sink: NodeId,
    stats: DawgStats,
}

impl<T: Ord + Copy> Default for RleDawg<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ord + Copy> RleDawg<T> {
    pub fn new() -> Self {
        RleDawg {
            nodes: vec![Node::new(0, 0)],
            runs: Vec::new(),
            text_len: 0,
            sink: NodeId::SOURCE,
            stats: DawgStats::default(),
        }
    }

    pub fn build(runs: &[RlFactor<T>]) -> Self {
        let mut dawg = Self::new();
        for &f in runs {
            dawg.extend(f);
        }
        dawg
    }

    /// Appends one run.
    pub fn extend(&mut self, f: RlFactor<T>) {
        assert!(f.exp >= 1, "run exponent must be positive");
        self.runs.push(f);
        self.text_len += f.exp;
        let end = self.runs.len();
        let last = self.sink;
        let cur = self.add_node(self.node(last).len + 1, end);
        self.nodes[cur.0].primary_parent = Some((last, f));

        let mut walk = Some(last);
        while let Some(u) = walk {
            if self.node(u).edges.contains_key(&f) {
                break;
            }
            self.nodes[u.0].edges.insert(f, cur);
            self.stats.edges += 1;
            if u != last {
                self.insert_secondary_pair(u, f, cur);
            }
            walk = self.node(u).link.map(|(t, _)| t);
        }

        match walk {
            None => self.link_sink(cur, NodeId::SOURCE),
            Some(u) => {
                let v = self.node(u).edges[&f];
                if self.node(u).len + 1 == self.node(v).len {
                    self.link_sink(cur, v);
                } else {
                    let clone = self.split(u, f, v);
                    self.link_sink(cur, clone);
                }
            }
        }
        self.sink = cur;
    }

    /// Splits `v`, the secondary target of `(u, f)`, returning the new node
    /// that takes over the members of length `<= len(u) + 1`.
    fn split(&mut self, u: NodeId, f: RlFactor<T>, v: NodeId) -> NodeId {
        let clone = self.add_node(self.node(u).len + 1, self.node(v).sample_end);
        let edges = self.node(v).edges.clone();
        self.stats.edges += edges.len();
        self.nodes[clone.0].link = self.node(v).link;
        self.nodes[clone.0].primary_parent = Some((u, f));
        // copied edges are all secondary
        for (&label, &target) in &edges {
            self.nodes[clone.0].edges.insert(label, target);
            self.insert_secondary_pair(clone, label, target);
        }
        // (u, f) now enters `clone` as its primary edge; the pair it carried
        // as a secondary edge is exactly the one the new link from `v`
        // accounts for, so the sets are already right.
        let mut walk = Some(u);
        while let Some(x) = walk {
            match self.nodes[x.0].edges.get_mut(&f) {
                Some(t) if *t == v => *t = clone,
                _ => break,
            }
            walk = self.node(x).link.map(|(t, _)| t);
        }
        let label = self.link_label(v, clone);
        self.nodes[v.0].link = Some((clone, label));
        self.raise_incoming(clone, label);
        clone
    }

    /// Sets the suffix link of the new sink and refreshes the pair of the
    /// primary edge entering the link target.
    fn link_sink(&mut self, sink: NodeId, target: NodeId) {
        let label = self.link_label(sink, target);
        self.nodes[sink.0].link = Some((target, label));
        let old = self.raise_incoming(target, label);
        if label.exp <= old {
            return;
        }
        if let Some((parent, via)) = self.node(target).primary_parent {
            let set = self.nodes[parent.0].psts.entry((label.ch, via.ch)).or_default();
            if old > 0 {
                set.delete(via.exp, old);
                self.stats.pairs_deleted += 1;
            }
            set.insert(via.exp, label.exp);
            self.count_insert();
        }
    }

    /// Records an incoming link label at `target`, returning the previous
    /// maximum for its character.
    fn raise_incoming(&mut self, target: NodeId, label: RlFactor<T>) -> usize {
        let slot = self.nodes[target.0].incoming_link_max.entry(label.ch).or_insert(0);
        let old = *slot;
        *slot = old.max(label.exp);
        old
    }

    /// Label of the link from `node` to `target`: the first run of the
    /// shortest member of `node`, located at the node's sample end.
    fn link_label(&self, node: NodeId, target: NodeId) -> RlFactor<T> {
        let end = self.node(node).sample_end;
        self.runs[end - self.node(target).len - 1]
    }

    fn insert_secondary_pair(&mut self, u: NodeId, label: RlFactor<T>, target: NodeId) {
        let pred = self.preceding_run(u, target);
        self.nodes[u.0].psts.entry((pred.ch, label.ch)).or_default().insert(label.exp, pred.exp);
        self.count_insert();
    }

    /// The run preceding `longest(u) b^q` for a secondary edge `(u, b^q, w)`.
    fn preceding_run(&self, u: NodeId, w: NodeId) -> RlFactor<T> {
        let end = self.node(w).sample_end;
        self.runs[end - self.node(u).len - 2]
    }

    fn count_insert(&mut self) {
        self.stats.pairs_created += 1;
        self.stats.peak_live_pairs = self.stats.peak_live_pairs.max(self.stats.live_pairs());
    }

    fn add_node(&mut self, len: usize, sample_end: usize) -> NodeId {
        self.nodes.push(Node::new(len, sample_end));
        NodeId(self.nodes.len() - 1)
    }

    fn node(&self, id: NodeId) -> &Node<T> {
        &self.nodes[id.0]
    }

    pub fn runs(&self) -> &[RlFactor<T>] {
        &self.runs
    }

    /// Number of runs consumed.
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    pub fn source(&self) -> NodeId {
        NodeId::SOURCE
    }

    pub fn sink(&self) -> NodeId {
        self.sink
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.stats.edges
    }

    pub fn stats(&self) -> DawgStats {
        self.stats
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    /// Size in runs of the longest member of the node's class.
    pub fn node_len(&self, id: NodeId) -> usize {
        self.node(id).len
    }

    pub fn sample_end(&self, id: NodeId) -> usize {
        self.node(id).sample_end
    }

    pub fn suffix_link(&self, id: NodeId) -> Option<(NodeId, RlFactor<T>)> {
        self.node(id).link
    }

    pub fn incoming_link_max(&self, id: NodeId, ch: T) -> usize {
        self.node(id).incoming_link_max.get(&ch).copied().unwrap_or(0)
    }

    pub fn pair_set(&self, id: NodeId, preceding: T, edge_char: T) -> Option<&PstPairSet<usize, usize>> {
        self.node(id).psts.get(&(preceding, edge_char))
    }

    pub fn edges(&self, id: NodeId) -> impl Iterator<Item = Edge<T>> + '_ {
        let len = self.node(id).len;
        self.node(id).edges.iter().map(move |(&label, &target)| Edge {
            source: id,
            label,
            target,
            primary: self.node(target).len == len + 1,
        })
    }

    pub fn transition(&self, id: NodeId, label: RlFactor<T>) -> Option<NodeId> {
        self.node(id).edges.get(&label).copied()
    }

    /// Follows `path` from the source.
    pub fn walk(&self, path: &[RlFactor<T>]) -> Option<NodeId> {
        path.iter().try_fold(NodeId::SOURCE, |v, &f| self.transition(v, f))
    }

    /// Largest exponent among the out-edges of `id` on character `ch`, or 0.
    pub fn max_exp_on_char(&self, id: NodeId, ch: T) -> usize {
        self.node(id)
            .edges
            .range(..=RlFactor { ch, exp: usize::MAX })
            .next_back()
            .filter(|(f, _)| f.ch == ch)
            .map_or(0, |(f, _)| f.exp)
    }

    /// `mpe` of the out-edge of `id` labelled `label`, for preceding
    /// character `ch`; `None` if there is no such edge.
    pub fn mpe(&self, id: NodeId, label: RlFactor<T>, ch: T) -> Option<usize> {
        let w = self.transition(id, label)?;
        if self.node(w).len == self.node(id).len + 1 {
            Some(self.incoming_link_max(w, ch))
        } else {
            let pred = self.preceding_run(id, w);
            Some(if pred.ch == ch { pred.exp } else { 0 })
        }
    }

    /// Largest `q` such that `id` has an out-edge `edge_char^q` whose `mpe`
    /// for `preceding` is at least `min_exp`; 0 if none.
    pub fn max_exp_with_mpe(&self, id: NodeId, edge_char: T, preceding: T, min_exp: usize) -> usize {
        if min_exp == 0 {
            return self.max_exp_on_char(id, edge_char);
        }
        self.pair_set(id, preceding, edge_char)
            .and_then(|t| t.max_x_in_rectangle(1, self.text_len.max(1), min_exp))
            .map_or(0, |(x, _)| x)
    }

    /// Starts matching a pattern whose first run is `head`. Returns the
    /// final match length right away when even `head` is not fully found.
    pub fn start_match(&self, head: RlFactor<T>) -> Result<PrefixMatch<T>, usize> {
        let h = self.max_exp_on_char(NodeId::SOURCE, head.ch);
        if h < head.exp {
            return Err(h);
        }
        Ok(PrefixMatch { head, node: NodeId::SOURCE, shortcut: false, depth: 0, matched: head.exp })
    }

    /// Feeds the next pattern run. `None` means the run was matched
    /// entirely and more may follow; `Some(len)` is the final match length.
    pub fn match_step(&self, m: &mut PrefixMatch<T>, run: RlFactor<T>) -> Option<usize> {
        if let Some(w) = self.transition(m.node, run) {
            if m.shortcut || self.mpe(m.node, run, m.head.ch).unwrap_or(0) >= m.head.exp {
                m.node = w;
                m.depth += 1;
                m.matched += run.exp;
                if m.depth != self.node(w).len {
                    m.shortcut = true;
                }
                return None;
            }
        }
        let k = if m.shortcut {
            self.max_exp_on_char(m.node, run.ch)
        } else {
            self.max_exp_with_mpe(m.node, run.ch, m.head.ch, m.head.exp)
        };
        Some(m.matched + run.exp.min(k))
    }

    /// Length in characters of the longest prefix of the decoded `pattern`
    /// that occurs in the decoded text. `pattern` must alternate characters.
    pub fn longest_prefix_match(&self, pattern: &[RlFactor<T>]) -> usize {
        let Some((&head, rest)) = pattern.split_first() else {
            return 0;
        };
        let mut m = match self.start_match(head) {
            Ok(m) => m,
            Err(len) => return len,
        };
        for &run in rest {
            if let Some(len) = self.match_step(&mut m, run) {
                return len;
            }
        }
        m.matched
    }

    /// Checks link lengths, edge bookkeeping and that every pair set holds
    /// exactly the pairs implied by [`RleDawg::mpe`]. Linear in the size of
    /// the automaton; for tests.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut edges = 0;
        let mut pairs = 0;
        for id in self.node_ids() {
            let node = self.node(id);
            match node.link {
                None if id != NodeId::SOURCE => return Err(format!("{id} has no suffix link")),
                Some((t, _)) if self.node(t).len >= node.len => {
                    return Err(format!("{id}: link target is not shorter"));
                }
                _ => {}
            }
            let mut expected: BTreeMap<(T, T), Vec<(usize, usize)>> = BTreeMap::new();
            for e in self.edges(id) {
                edges += 1;
                if e.primary && self.node(e.target).primary_parent != Some((id, e.label)) {
                    return Err(format!("{id}: primary edge to {} not recorded", e.target));
                }
                let chars: Vec<T> = if e.primary {
                    self.node(e.target).incoming_link_max.keys().copied().collect()
                } else {
                    vec![self.preceding_run(id, e.target).ch]
                };
                for a in chars {
                    let m = self.mpe(id, e.label, a).unwrap();
                    if m > 0 {
                        expected.entry((a, e.label.ch)).or_default().push((e.label.exp, m));
                    }
                }
            }
            let actual: BTreeMap<(T, T), Vec<(usize, usize)>> =
                node.psts.iter().filter(|(_, t)| !t.is_empty()).map(|(&k, t)| (k, t.to_vec())).collect();
            if actual != expected {
                return Err(format!("{id}: pair sets disagree with mpe"));
            }
            pairs += actual.values().map(Vec::len).sum::<usize>();
        }
        if edges != self.stats.edges {
            return Err("edge counter is stale".into());
        }
        if pairs != self.stats.live_pairs() {
            return Err("pair counter is stale".into());
        }
        Ok(())
    }

    /// A relabelling-independent description of the automaton: nodes
    /// numbered in breadth-first order from the source, edges in label order.
    pub fn canonical_form(&self) -> Vec<CanonicalNode<T>> {
        let mut order = vec![usize::MAX; self.nodes.len()];
        let mut queue = VecDeque::from([NodeId::SOURCE]);
        let mut seq = Vec::new();
        order[0] = 0;
        while let Some(v) = queue.pop_front() {
            seq.push(v);
            for &t in self.node(v).edges.values() {
                if order[t.0] == usize::MAX {
                    order[t.0] = seq.len() + queue.len();
                    queue.push_back(t);
                }
            }
        }
        seq.iter()
            .map(|&v| {
                let node = self.node(v);
                CanonicalNode {
                    len: node.len,
                    link: node.link.map(|(t, l)| (order[t.0], l)),
                    edges: node.edges.iter().map(|(&l, &t)| (l, order[t.0])).collect(),
                    incoming_link_max: node.incoming_link_max.iter().map(|(&c, &e)| (c, e)).collect(),
                    pairs: node.psts.iter().filter(|(_, t)| !t.is_empty()).map(|(&k, t)| (k, t.to_vec())).collect(),
                }
            })
            .collect()
    }
}

/// State of an in-progress longest-prefix match.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrefixMatch<T> {
    head: RlFactor<T>,
    node: NodeId,
    shortcut: bool,
    depth: usize,
    matched: usize,
}

impl<T: Copy> PrefixMatch<T> {
    /// Pattern runs after the head matched so far.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Characters matched so far, head included.
    pub fn matched(&self) -> usize {
        self.matched
    }

    pub fn node(&self) -> NodeId {
        self.node
    }

    pub fn head(&self) -> RlFactor<T> {
        self.head
    }
}

/// `(preceding char, edge char)` and the `(edge exp, mpe)` pairs stored for it.
pub type PairSetDump<T> = ((T, T), Vec<(usize, usize)>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalNode<T> {
    pub len: usize,
    pub link: Option<(usize, RlFactor<T>)>,
    pub edges: Vec<(RlFactor<T>, usize)>,
    pub incoming_link_max: Vec<(T, usize)>,
    pub pairs: Vec<PairSetDump<T>>,
}

impl RleDawg<u8> {
    /// Graphviz rendering: solid labelled edges (bold when primary), dashed
    /// suffix links.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph rle_dawg {\n  rankdir=LR;\n  node [shape=circle];\n");
        for id in self.node_ids() {
            let n = self.node(id);
            let _ = writeln!(s, "  n{} [label=\"{}\\nlen={} end={}\"];", id.0, id.0, n.len, n.sample_end);
        }
        for id in self.node_ids() {
            for e in self.edges(id) {
                let style = if e.primary { "bold" } else { "solid" };
                let _ = writeln!(s, "  n{} -> n{} [label=\"{}\", style={}];", id.0, e.target.0, e.label, style);
            }
            if let Some((t, l)) = self.node(id).link {
                let _ = writeln!(s, "  n{} -> n{} [label=\"{}\", style=dashed, color=gray];", id.0, t.0, l);
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{naive_endpos_classes, naive_longest_prefix_in, naive_preceding_exponent, run_substrings};
    use crate::rle::RleString;

    fn rle(pairs: &[(u8, usize)]) -> RleString {
        RleString::from_runs(pairs.iter().map(|&(c, e)| RlFactor::new(c, e)).collect()).unwrap()
    }

    fn matching_example() -> RleString {
        rle(&[(b'a', 3), (b'b', 2), (b'a', 5), (b'b', 2), (b'a', 5), (b'c', 4), (b'a', 10)])
    }

    #[test]
    fn single_run() {
        let d = RleDawg::build(&[RlFactor::new(b'a', 4)]);
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.edge_count(), 1);
        assert_eq!(d.suffix_link(d.sink()), Some((NodeId::SOURCE, RlFactor::new(b'a', 4))));
        d.check_invariants().unwrap();
    }

    #[test]
    fn shared_and_distinct_classes() {
        let s = matching_example();
        let d = RleDawg::build(s.runs());
        let a5 = d.walk(&[RlFactor::new(b'a', 5)]).unwrap();
        let b2a5 = d.walk(&[RlFactor::new(b'b', 2), RlFactor::new(b'a', 5)]).unwrap();
        let a3b2a5 = d.walk(&[RlFactor::new(b'a', 3), RlFactor::new(b'b', 2), RlFactor::new(b'a', 5)]).unwrap();
        assert_eq!(a5, b2a5);
        assert_ne!(a5, a3b2a5);
        d.check_invariants().unwrap();
    }

    #[test]
    fn mpe_examples() {
        let d = RleDawg::build(matching_example().runs());
        let b2 = RlFactor::new(b'b', 2);
        let a5 = RlFactor::new(b'a', 5);
        assert_eq!(d.mpe(NodeId::SOURCE, b2, b'a'), Some(5));
        assert_eq!(d.mpe(NodeId::SOURCE, b2, b'c'), Some(0));
        let v = d.walk(&[b2]).unwrap();
        assert_eq!(d.mpe(v, a5, b'a'), Some(5));
        assert_eq!(d.max_exp_with_mpe(v, b'a', b'a', 5), 5);
        assert_eq!(d.max_exp_with_mpe(v, b'a', b'a', 6), 0);
        assert_eq!(d.mpe(v, RlFactor::new(b'a', 7), b'a'), None);
    }

    #[test]
    fn longest_prefix_examples() {
        let s = matching_example();
        let d = RleDawg::build(s.runs());
        let p = rle(&[(b'a', 5), (b'b', 2), (b'a', 7)]);
        assert_eq!(d.longest_prefix_match(p.runs()), 12);
        assert_eq!(d.longest_prefix_match(rle(&[(b'z', 1)]).runs()), 0);
        assert_eq!(d.longest_prefix_match(&[]), 0);
        for pat in [&b"aaabbaaaaab"[..], b"aaaaaaaaaaaa", b"bbaaaaac", b"ccccaaaaaaaaaaaaa", b"caaa"] {
            let p = RleString::encode(pat);
            assert_eq!(
                d.longest_prefix_match(p.runs()),
                naive_longest_prefix_in(&s.decode(), pat),
                "{}",
                String::from_utf8_lossy(pat)
            );
        }
    }

    #[test]
    fn classes_match_brute_force_on_example() {
        let s = matching_example();
        let d = RleDawg::build(s.runs());
        let classes = naive_endpos_classes(&s).unwrap();
        assert_eq!(classes.len(), d.node_count());
        for class in &classes {
            let v = d.walk(&class.members[0]).unwrap();
            for m in &class.members {
                assert_eq!(d.walk(m), Some(v));
            }
            assert_eq!(d.node_len(v), class.longest().len());
            assert!(class.end_positions.contains(&d.sample_end(v)));
        }
    }

    #[test]
    fn mpe_matches_definition_on_example() {
        let s = matching_example();
        let d = RleDawg::build(s.runs());
        let classes = naive_endpos_classes(&s).unwrap();
        for class in &classes {
            let u = d.walk(class.longest()).unwrap();
            for e in d.edges(u) {
                let mut body = class.longest().to_vec();
                body.push(e.label);
                for a in *b"abcz" {
                    assert_eq!(d.mpe(u, e.label, a), Some(naive_preceding_exponent(s.runs(), &body, a)));
                }
            }
        }
    }

    #[test]
    fn language_is_run_substrings() {
        let s = rle(&[(b'a', 1), (b'b', 2), (b'a', 1), (b'b', 2), (b'a', 2), (b'b', 2), (b'a', 1)]);
        let d = RleDawg::build(s.runs());
        let subs = run_substrings(s.runs());
        let alphabet: Vec<RlFactor> = {
            let mut v = s.runs().to_vec();
            v.sort();
            v.dedup();
            v
        };
        for u in &subs {
            assert!(d.walk(u).is_some());
            for &c in &alphabet {
                let mut w = u.clone();
                w.push(c);
                assert_eq!(d.walk(&w).is_some(), subs.contains(&w));
            }
        }
    }

    #[test]
    fn dot_output() {
        let d = RleDawg::build(RleString::encode(b"aabba").runs());
        let dot = d.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("a^2"));
    }
}
