//! Undirected simple graphs stored as per-vertex adjacency bit rows.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rng::Prng;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A set of vertices packed into 64-bit words, sized for a host graph.
///
/// Used by the solvers as a view of "the current subgraph" without relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mask {
    words: Vec<u64>,
}

impl Mask {
    pub(crate) fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; words_for(n)];
        if !n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Self { words }
    }

    #[inline]
    pub(crate) fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of members also present in `row`.
    #[inline]
    pub(crate) fn count_and(&self, row: &[u64]) -> usize {
        self.words
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Removes every member of `row` from the set.
    #[inline]
    pub(crate) fn subtract(&mut self, row: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(row) {
            *a &= !b;
        }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from arbitrary-order indices, rejecting duplicates.
    pub fn new(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Self(members))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// All vertices in `range`.
    pub fn range(range: std::ops::Range<usize>) -> Self {
        Self(range.collect())
    }

    /// Caller guarantees `members` is strictly increasing.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Checks that every member is a vertex of a graph on `n` vertices.
    pub fn check_host(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Parameters of an Erdős–Rényi draw `G(n, p)` with a fixed seed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GraphSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(n: usize, p: f64, seed: u64) -> Self {
        Self { n, p, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidProbability(self.p));
        }
        Ok(())
    }
}

/// Draws below this value produce an edge. `None` means every pair is an edge.
fn edge_threshold(p: f64) -> Option<u64> {
    if p >= 1.0 {
        None
    } else {
        // 2^64 as f64 is exact; the cast saturates and truncates toward zero.
        Some((p * 18_446_744_073_709_551_616.0) as u64)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.link(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle 0-1-...-(n-1)-0. Requires `n >= 3` to be simple.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            let v = (u + 1) % n;
            if u != v && !g.has_edge(u, v) {
                g.link(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.link(u - 1, u);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::new(leaves + 1);
        for v in 1..=leaves {
            g.link(0, v);
        }
        g
    }

    /// Samples `G(n, p)`: pairs `(i, j)`, `i < j`, in lexicographic order, one draw each.
    pub fn generate(spec: &GraphSpec) -> Result<Self> {
        spec.validate()?;
        let mut g = Self::new(spec.n);
        let mut rng = Prng::new(spec.seed);
        let threshold = edge_threshold(spec.p);
        for i in 0..spec.n {
            for j in i + 1..spec.n {
                let draw = rng.next_u64();
                if threshold.is_none_or(|t| draw < t) {
                    g.link(i, j);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1u64 << (u % 64);
    }

    /// Adds edge `{u, v}`. Rejects self-loops and out-of-range endpoints; re-adding is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop on vertex {u}")));
        }
        self.link(u, v);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(0..self.n)
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending original order.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        s.check_host(self.n)?;
        Ok(self.induced_unchecked(s.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, members: &[usize]) -> Graph {
        let mut g = Graph::new(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    pub(crate) fn induced_mask(&self, mask: &Mask) -> (Graph, Vec<usize>) {
        let members: Vec<usize> = mask.iter().collect();
        (self.induced_unchecked(&members), members)
    }

    /// Removes `v` and its neighbors. The returned map sends new indices to old ones.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut keep = Mask::full(self.n);
        keep.subtract(self.row(v));
        keep.remove(v);
        Ok(self.induced_mask(&keep))
    }

    /// Removes the single vertex `v`. The returned map sends new indices to old ones.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let members: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok((self.induced_unchecked(&members), members))
    }

    /// True iff no edge joins two members of `s`. Members must be valid vertices.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let members = s.as_slice();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Serializes to the edge-list text format: header `n m`, then sorted `u v` lines.
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<_> = self.edges().collect();
        let mut out = String::with_capacity(16 + edges.len() * 8);
        let _ = writeln!(out, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(header_line, header, "header")?;

        let mut g = Graph::new(n);
        let mut seen = 0usize;
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body, "edge")?;
            let err = |msg: String| Error::Parse { line, msg };
            if u >= n || v >= n {
                return Err(err(format!("edge ({u}, {v}) has an endpoint >= n = {n}")));
            }
            if u == v {
                return Err(err(format!("self-loop on vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(err(format!("duplicate edge ({u}, {v})")));
            }
            g.link(u, v);
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: header_line,
                msg: format!("header declares {m} edges but {seen} were listed"),
            });
        }
        Ok(g)
    }
}

fn parse_pair(line: usize, body: &str, what: &str) -> Result<(usize, usize)> {
    let err = || Error::Parse {
        line,
        msg: format!("malformed {what} line {body:?}, expected two non-negative integers"),
    };
    let mut it = body.split_whitespace();
    let a = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    let b = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    if it.next().is_some() {
        return Err(err());
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generate_extremes() {
        let g = Graph::generate(&GraphSpec::new(5, 0.0, 9)).unwrap();
        assert_eq!(g, Graph::new(5));
        let g = Graph::generate(&GraphSpec::new(5, 1.0, 9)).unwrap();
        assert_eq!(g, Graph::complete(5));
    }

    #[test]
    fn generate_matches_reference_stream() {
        // Draws for seed 1 compared against 2^63 by an independent SplitMix64 run.
        let g = Graph::generate(&GraphSpec::new(4, 0.5, 1)).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn generate_rejects_bad_probability() {
        for p in [-0.1, 1.5, f64::NAN] {
            assert!(matches!(
                Graph::generate(&GraphSpec::new(3, p, 0)),
                Err(Error::InvalidProbability(_))
            ));
        }
    }

    #[test]
    fn generate_uses_rows_past_one_word() {
        let g = Graph::generate(&GraphSpec::new(130, 1.0, 0)).unwrap();
        assert_eq!(g.degree(129), 129);
        assert_eq!(g.edge_count(), 130 * 129 / 2);
    }

    #[test]
    fn induced_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.induced(&set(&[0, 2])).unwrap(), Graph::complete(2));
        assert_eq!(k4.induced(&VertexSet::empty()).unwrap().n(), 0);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced(&set(&[0, 1, 2])).unwrap(), Graph::path(3));
        assert!(matches!(
            c5.induced(&set(&[1, 5])),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn delete_closed_neighborhood_examples() {
        // The center's closed neighborhood is the whole star; a leaf takes the center with it.
        let (g, map) = Graph::star(3).delete_closed_neighborhood(0).unwrap();
        assert_eq!(g.n(), 0);
        assert!(map.is_empty());
        let (g, map) = Graph::star(3).delete_closed_neighborhood(1).unwrap();
        assert_eq!(g, Graph::new(2));
        assert_eq!(map, vec![2, 3]);
        let (g, map) = Graph::star(3).delete_vertex(0).unwrap();
        assert_eq!(g, Graph::new(3));
        assert_eq!(map, vec![1, 2, 3]);

        let (g, map) = Graph::complete(4).delete_closed_neighborhood(2).unwrap();
        assert_eq!(g.n(), 0);
        assert!(map.is_empty());

        let (g, map) = Graph::new(6).delete_closed_neighborhood(3).unwrap();
        assert_eq!(g, Graph::new(5));
        assert_eq!(map, vec![0, 1, 2, 4, 5]);

        assert!(Graph::new(2).delete_closed_neighborhood(2).is_err());
    }

    #[test]
    fn independence_examples() {
        let k4 = Graph::complete(4);
        assert!(!k4.is_independent(&set(&[1, 3])));
        assert!(k4.is_independent(&VertexSet::empty()));
        assert!(k4.is_independent(&set(&[2])));
        assert!(Graph::cycle(5).is_independent(&set(&[0, 2])));
    }

    #[test]
    fn vertex_set_rejects_duplicates() {
        assert!(matches!(
            VertexSet::new(vec![3, 1, 3]),
            Err(Error::DuplicateVertex(3))
        ));
        assert_eq!(set(&[4, 0, 2]).as_slice(), &[0, 2, 4]);
    }

    #[test]
    fn edge_list_examples() {
        let g = Graph::from_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g, Graph::path(3));
        let g = Graph::from_edge_list("0 0").unwrap();
        assert_eq!(g.n(), 0);
        let g = Graph::from_edge_list("# comment\n3 1\n\n# another\n2 0\n").unwrap();
        assert!(g.has_edge(0, 2));
        assert_eq!(Graph::path(3).to_edge_list(), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let line_of = |text: &str| match Graph::from_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("3\n"), 1);
        assert_eq!(line_of("three 2\n"), 1);
        assert_eq!(line_of("3 2\n0 1\n1 3\n"), 3);
        assert_eq!(line_of("3 1\n# c\n2 2\n"), 3);
        assert_eq!(line_of("3 2\n0 1\n1 0\n"), 3);
        assert_eq!(line_of("3 2\n0 1 2\n"), 2);
        assert_eq!(line_of("3 2\n0 1\n"), 1);
    }

    #[test]
    fn mask_ops() {
        let mut m = Mask::full(70);
        assert_eq!(m.count(), 70);
        m.remove(65);
        assert_eq!(m.count(), 69);
        assert_eq!(
            m.iter().filter(|&v| v >= 64).collect::<Vec<_>>(),
            vec![64, 66, 67, 68, 69]
        );
        assert_eq!(Mask::full(0).count(), 0);
        assert_eq!(Mask::full(64).count(), 64);
    }
}
