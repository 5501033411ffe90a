//! Nomination graphs: loop-free directed graphs on vertices `1..=n`.
//!
//! An edge `u -> v` means agent `u` nominates agent `v`. Vertices are dense
//! 1-based labels in the public API and 0-based indices internally. The edge
//! set is kept sorted and indexed in both directions so that indegree queries
//! restricted to a vertex subset cost `O(indegree)`.

mod enumerate;
mod gadgets;
mod random;
mod text;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use enumerate::{enumerate_graphs, enumerate_graphs_with, graph_count, GraphEnumerator};
pub use gadgets::{gen_gadget, Gadget, GADGET_NAMES};
pub use random::{gen_random, gen_random_functional};
pub use text::{parse_graph, serialize_graph};

use crate::{Error, Result};

/// A 1-based vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(u32);

impl Vertex {
    pub const fn new(label: u32) -> Vertex {
        Vertex(label)
    }

    pub const fn label(self) -> u32 {
        self.0
    }

    /// 0-based position of the vertex. Only meaningful for labels `>= 1`.
    pub const fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) const fn from_index(i: usize) -> Vertex {
        Vertex(i as u32 + 1)
    }
}

impl From<u32> for Vertex {
    fn from(label: u32) -> Self {
        Vertex(label)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Graph families distinguished by outdegree constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    /// Every loop-free graph.
    All,
    /// Every vertex nominates at least one other vertex.
    NoAbstention,
    /// Every vertex nominates exactly one other vertex.
    OutdegreeExactlyOne,
}

impl GraphClass {
    pub const fn name(self) -> &'static str {
        match self {
            GraphClass::All => "all",
            GraphClass::NoAbstention => "no-abstention",
            GraphClass::OutdegreeExactlyOne => "outdegree-one",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(GraphClass::All),
            "no-abstention" | "no_abstention" => Ok(GraphClass::NoAbstention),
            "outdegree-one" | "outdegree_one" | "functional" => Ok(GraphClass::OutdegreeExactlyOne),
            _ => Err(Error::Domain { name: "graph class", value: 0 }),
        }
    }
}

/// A set of vertices of a graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Self {
        VertexSubset { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<Vertex>,
    {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v.into())?;
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: Vertex) -> Result<()> {
        check_vertex(self.n, v)?;
        let i = v.index();
        self.words[i / 64] |= 1 << (i % 64);
        Ok(())
    }

    pub fn remove(&mut self, v: Vertex) {
        if v.0 >= 1 && v.index() < self.n {
            let i = v.index();
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.0 >= 1 && v.index() < self.n && self.contains_index(v.index())
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(|&i| self.contains_index(i)).map(Vertex::from_index)
    }
}

fn check_vertex(n: usize, v: Vertex) -> Result<()> {
    if v.0 == 0 || v.index() >= n {
        Err(Error::VertexOutOfRange { vertex: v.0 as u64, n })
    } else {
        Ok(())
    }
}

/// A loop-free directed graph on vertices `1..=n`.
///
/// Immutable after construction. Equality compares `n` and the edge set.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    /// 0-based `(source, target)` pairs in lexicographic order.
    edges: Vec<(u32, u32)>,
    in_start: Vec<u32>,
    in_adj: Vec<u32>,
    out_start: Vec<u32>,
    out_adj: Vec<u32>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl core::hash::Hash for Graph {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().map(|(u, v)| (u.0, v.0)).collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from 1-based `(source, target)` label pairs.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            check_vertex(n, Vertex(u))?;
            check_vertex(n, Vertex(v))?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u - 1, v - 1));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0 + 1, w[0].1 + 1));
        }
        Ok(Self::from_sorted(n, list))
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Self::new(n, [])
    }

    /// `edges` must be sorted, duplicate-free, loop-free and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(u32, u32)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut out_start = vec![0u32; n + 1];
        let mut in_start = vec![0u32; n + 1];
        for &(u, v) in &edges {
            out_start[u as usize + 1] += 1;
            in_start[v as usize + 1] += 1;
        }
        for i in 0..n {
            out_start[i + 1] += out_start[i];
            in_start[i + 1] += in_start[i];
        }
        // Edges are sorted by source, so both adjacency arrays come out sorted.
        let out_adj = edges.iter().map(|&(_, v)| v).collect();
        let mut fill = in_start.clone();
        let mut in_adj = vec![0u32; edges.len()];
        for &(u, v) in &edges {
            in_adj[fill[v as usize] as usize] = u;
            fill[v as usize] += 1;
        }
        Graph { n, edges, in_start, in_adj, out_start, out_adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 1-based label pairs, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().map(|&(u, v)| (Vertex::from_index(u as usize), Vertex::from_index(v as usize)))
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = Vertex> {
        (0..self.n).map(Vertex::from_index)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if check_vertex(self.n, u).is_err() || check_vertex(self.n, v).is_err() {
            return false;
        }
        self.out_of(u.index()).binary_search(&(v.index() as u32)).is_ok()
    }

    /// Sources of edges into vertex index `i`, ascending.
    pub(crate) fn in_of(&self, i: usize) -> &[u32] {
        &self.in_adj[self.in_start[i] as usize..self.in_start[i + 1] as usize]
    }

    /// Targets of edges out of vertex index `i`, ascending.
    pub(crate) fn out_of(&self, i: usize) -> &[u32] {
        &self.out_adj[self.out_start[i] as usize..self.out_start[i + 1] as usize]
    }

    pub fn in_neighbors(&self, v: Vertex) -> Result<impl Iterator<Item = Vertex> + '_> {
        check_vertex(self.n, v)?;
        Ok(self.in_of(v.index()).iter().map(|&u| Vertex::from_index(u as usize)))
    }

    pub fn out_neighbors(&self, v: Vertex) -> Result<impl Iterator<Item = Vertex> + '_> {
        check_vertex(self.n, v)?;
        Ok(self.out_of(v.index()).iter().map(|&u| Vertex::from_index(u as usize)))
    }

    /// Number of edges into `v` whose source lies in `s`.
    pub fn indegree_from(&self, s: &VertexSubset, v: Vertex) -> Result<usize> {
        check_vertex(self.n, v)?;
        if s.universe() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: s.universe() });
        }
        Ok(self.in_of(v.index()).iter().filter(|&&u| s.contains_index(u as usize)).count())
    }

    pub fn indegree(&self, v: Vertex) -> Result<usize> {
        check_vertex(self.n, v)?;
        Ok(self.in_of(v.index()).len())
    }

    /// Indegrees of all vertices, indexed 0-based.
    pub fn indegrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.in_of(i).len()).collect()
    }

    /// The maximum indegree, `0` for an edgeless graph.
    pub fn max_indegree(&self) -> usize {
        (0..self.n).map(|i| self.in_of(i).len()).max().unwrap_or(0)
    }

    pub fn outdegree(&self, v: Vertex) -> Result<usize> {
        check_vertex(self.n, v)?;
        Ok(self.out_of(v.index()).len())
    }

    pub fn in_class(&self, class: GraphClass) -> bool {
        let out = |i| self.out_of(i).len();
        match class {
            GraphClass::All => true,
            GraphClass::NoAbstention => (0..self.n).all(|i| out(i) >= 1),
            GraphClass::OutdegreeExactlyOne => (0..self.n).all(|i| out(i) == 1),
        }
    }

    /// Bit position of edge `u -> v` (0-based indices) in [`Graph::edge_mask`].
    pub(crate) fn edge_bit(n: usize, u: usize, v: usize) -> usize {
        u * (n - 1) + if v < u { v } else { v - 1 }
    }

    /// The edge set as a bitmask over ordered pairs in lexicographic order, or
    /// `None` when `n(n-1) > 64`. This is the canonical index used by graph
    /// enumeration.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n * (self.n - 1) > 64 {
            return None;
        }
        Some(self.edges.iter().fold(0u64, |m, &(u, v)| m | 1 << Self::edge_bit(self.n, u as usize, v as usize)))
    }

    /// Inverse of [`Graph::edge_mask`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let pairs = n * (n - 1);
        if pairs > 64 || (pairs < 64 && mask >> pairs != 0) {
            return Err(Error::Domain { name: "edge mask", value: mask });
        }
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        for u in 0..n {
            for v in 0..n {
                if u != v && mask >> Self::edge_bit(n, u, v) & 1 == 1 {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Ok(Self::from_sorted(n, edges))
    }

    /// The graph `G_pi` with edges `(pi(u), pi(v))`; `pi` maps 0-based indices.
    pub fn relabel(&self, pi: &[usize]) -> Graph {
        assert_eq!(pi.len(), self.n, "relabeling must cover every vertex");
        let mut edges: Vec<(u32, u32)> =
            self.edges.iter().map(|&(u, v)| (pi[u as usize] as u32, pi[v as usize] as u32)).collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }

    /// Replaces the outgoing edges of `v` by edges to `targets`, keeping every
    /// other vertex's nominations.
    pub fn with_out_edges(&self, v: Vertex, targets: &VertexSubset) -> Result<Graph> {
        check_vertex(self.n, v)?;
        if targets.contains(v) {
            return Err(Error::SelfLoop(v.0));
        }
        let i = v.index() as u32;
        let mut edges: Vec<(u32, u32)> = self.edges.iter().copied().filter(|&(u, _)| u != i).collect();
        edges.extend(targets.iter().map(|t| (i, t.index() as u32)));
        edges.sort_unstable();
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Short human-readable identifier, e.g. `n3:1>2,2>1`.
    pub fn id(&self) -> String {
        let mut s = format!("n{}:", self.n);
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&format!("{u}>{v}"));
        }
        s
    }
}
