//! The 2-partition, k-partition and permutation mechanisms.
//!
//! The k-partition and permutation mechanisms share one inner loop, the
//! candidate scan: blocks of vertices are visited in order, and the vertices
//! of block `j` are scored by their indegree from the union of the earlier
//! blocks (the prefix). A block displaces the current candidate when its best
//! score, computed with the candidate's own nominations removed, is at least
//! the candidate's recorded score. The new candidate is drawn from the argmax
//! of the score with the candidate's nominations counted again, and that full
//! score is recorded. A permutation is the special case of singleton blocks.
//!
//! A vertex's own nominations are only ever read after it has been placed in
//! the prefix, where it can no longer be selected, which is what makes all
//! three rules impartial.
//!
//! Randomness is consumed in a fixed order (see [`crate::rng`]): block
//! assignment first, then the initial candidate from block 1, then one draw
//! per displacement whose tie set has more than one member.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex, VertexSubset};
use crate::rng::Prng;
use crate::{Error, Result};

/// Which mechanism to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MechanismSpec {
    TwoPartition,
    KPartition { k: usize },
    Permutation,
}

impl MechanismSpec {
    pub fn k_partition(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidBlockCount(k));
        }
        Ok(MechanismSpec::KPartition { k })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            MechanismSpec::KPartition { k } if k < 2 => Err(Error::InvalidBlockCount(k)),
            _ => Ok(()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MechanismSpec::TwoPartition => "two-partition",
            MechanismSpec::KPartition { .. } => "k-partition",
            MechanismSpec::Permutation => "permutation",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            MechanismSpec::KPartition { k } => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for MechanismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MechanismSpec::KPartition { k } => write!(f, "k-partition(k={k})"),
            other => f.write_str(other.kind()),
        }
    }
}

/// An assignment of every vertex to one of the blocks `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockAssignment {
    k: usize,
    block_of: Vec<u32>,
}

impl BlockAssignment {
    /// `block_of[i]` is the 1-based block of vertex `i + 1`.
    pub fn new(k: usize, block_of: Vec<u32>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidBlockCount(k));
        }
        if let Some(&b) = block_of.iter().find(|&&b| b == 0 || b as usize > k) {
            return Err(Error::Domain { name: "block label", value: b as u64 });
        }
        Ok(BlockAssignment { k, block_of })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_labels(&self) -> &[u32] {
        &self.block_of
    }

    pub fn block_of(&self, v: Vertex) -> Option<u32> {
        self.block_of.get(v.index()).copied()
    }

    /// Blocks `A_1, ..., A_k` with members in ascending order.
    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut blocks = vec![Vec::new(); self.k];
        for (i, &b) in self.block_of.iter().enumerate() {
            blocks[b as usize - 1].push(Vertex::from_index(i));
        }
        blocks
    }

    /// The union of blocks `1..j`.
    pub fn prefix(&self, j: usize) -> VertexSubset {
        let mut s = VertexSubset::empty(self.n());
        for (i, &b) in self.block_of.iter().enumerate() {
            if (b as usize) < j {
                s.insert(Vertex::from_index(i)).expect("in range");
            }
        }
        s
    }
}

/// The leading vertex of a scan and the prefix indegree it was selected with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateState {
    pub candidate: Option<Vertex>,
    pub score: usize,
}

/// How to choose among equally scored vertices of a block.
pub enum TieBreak<'a> {
    Uniform(&'a mut Prng),
    /// The last tied vertex in block order.
    LastWins,
}

impl TieBreak<'_> {
    fn pick(&mut self, items: &[u32]) -> u32 {
        match self {
            TieBreak::Uniform(rng) => *rng.choose(items).expect("nonempty"),
            TieBreak::LastWins => *items.last().expect("nonempty"),
        }
    }
}

const UNPLACED: u32 = u32::MAX;

/// Scratch buffers for repeated runs on one graph.
///
/// Mechanism runs through a `Runner` allocate nothing after construction,
/// which matters for Monte Carlo loops.
pub struct Runner<'g> {
    g: &'g Graph,
    /// Block (or permutation position) of each vertex index.
    rank: Vec<u32>,
    /// Vertex indices grouped by block.
    order: Vec<u32>,
    /// `order[start[j]..start[j + 1]]` is block `j`.
    start: Vec<u32>,
    ties: Vec<u32>,
    scores: Vec<u32>,
}

impl<'g> Runner<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Runner {
            g,
            rank: vec![UNPLACED; n],
            order: Vec::with_capacity(n),
            start: Vec::with_capacity(n + 1),
            ties: Vec::with_capacity(n),
            scores: Vec::with_capacity(n),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn run(&mut self, spec: MechanismSpec, rng: &mut Prng) -> Result<Vertex> {
        match spec {
            MechanismSpec::TwoPartition => Ok(self.two_partition(rng)),
            MechanismSpec::KPartition { k } => self.k_partition(k, rng),
            MechanismSpec::Permutation => Ok(self.permutation(rng)),
        }
    }

    pub fn two_partition(&mut self, rng: &mut Prng) -> Vertex {
        let n = self.g.n();
        for r in self.rank.iter_mut() {
            *r = rng.below(2) as u32;
        }
        self.ties.clear();
        let mut best = 0u32;
        for i in 0..n {
            if self.rank[i] != 1 {
                continue;
            }
            let score = self.g.in_of(i).iter().filter(|&&u| self.rank[u as usize] == 0).count() as u32;
            if self.ties.is_empty() || score > best {
                best = score;
                self.ties.clear();
            }
            if score == best {
                self.ties.push(i as u32);
            }
        }
        if self.ties.is_empty() {
            return Vertex::from_index(rng.below(n as u64) as usize);
        }
        Vertex::from_index(*rng.choose(&self.ties).expect("nonempty") as usize)
    }

    pub fn k_partition(&mut self, k: usize, rng: &mut Prng) -> Result<Vertex> {
        if k < 2 {
            return Err(Error::InvalidBlockCount(k));
        }
        for r in self.rank.iter_mut() {
            *r = rng.below(k as u64) as u32;
        }
        self.group_by_rank(k);
        let state = self.scan(&mut TieBreak::Uniform(rng));
        Ok(state.candidate.expect("n >= 1"))
    }

    pub fn permutation(&mut self, rng: &mut Prng) -> Vertex {
        let n = self.g.n();
        self.order.clear();
        self.order.extend(0..n as u32);
        rng.shuffle(&mut self.order);
        self.scan_order()
    }

    /// Permutation mechanism for a fixed order of 0-based vertex indices;
    /// returns the winner's index.
    pub(crate) fn permutation_with_order(&mut self, order: &[u32]) -> usize {
        self.order.clear();
        self.order.extend_from_slice(order);
        self.scan_order().index()
    }

    fn scan_order(&mut self) -> Vertex {
        let n = self.g.n();
        self.start.clear();
        self.start.extend(0..=n as u32);
        for (pos, &v) in self.order.iter().enumerate() {
            self.rank[v as usize] = pos as u32;
        }
        self.scan(&mut TieBreak::LastWins).candidate.expect("n >= 1")
    }

    /// Counting sort of vertex indices by `rank`, ascending within a block.
    fn group_by_rank(&mut self, k: usize) {
        self.start.clear();
        self.start.resize(k + 1, 0);
        for &r in &self.rank {
            self.start[r as usize + 1] += 1;
        }
        for j in 0..k {
            self.start[j + 1] += self.start[j];
        }
        self.order.clear();
        self.order.resize(self.rank.len(), 0);
        let mut fill = 0;
        // Blocks are few; filling block by block keeps vertex order stable.
        for j in 0..k as u32 {
            for (i, &r) in self.rank.iter().enumerate() {
                if r == j {
                    self.order[fill] = i as u32;
                    fill += 1;
                }
            }
        }
    }

    /// Runs the candidate scan over the blocks laid out in `order`/`start`.
    fn scan(&mut self, tie: &mut TieBreak<'_>) -> CandidateState {
        let blocks = self.start.len() - 1;
        let mut candidate: Option<u32> = None;
        let mut score = 0u32;
        let first = &self.order[self.start[0] as usize..self.start[1] as usize];
        if !first.is_empty() {
            candidate = Some(tie.pick(first));
        }
        for j in 1..blocks {
            let members = &self.order[self.start[j] as usize..self.start[j + 1] as usize];
            if members.is_empty() {
                continue;
            }
            self.scores.clear();
            let mut best_excl = 0u32;
            let mut best_full = 0u32;
            for &i in members {
                let mut full = 0u32;
                let mut from_candidate = 0u32;
                for &u in self.g.in_of(i as usize) {
                    if self.rank[u as usize] < j as u32 {
                        full += 1;
                        if Some(u) == candidate {
                            from_candidate = 1;
                        }
                    }
                }
                best_excl = best_excl.max(full - from_candidate);
                best_full = best_full.max(full);
                self.scores.push(full);
            }
            if best_excl >= score {
                self.ties.clear();
                self.ties.extend(members.iter().zip(&self.scores).filter(|&(_, &s)| s == best_full).map(|(&i, _)| i));
                candidate = Some(tie.pick(&self.ties));
                score = best_full;
            }
        }
        CandidateState { candidate: candidate.map(|c| Vertex::from_index(c as usize)), score: score as usize }
    }
}

/// Runs the candidate scan over explicit blocks.
///
/// Vertices not listed in any block are ignored. The first block supplies the
/// initial candidate (score 0); an empty first block starts with no candidate.
pub fn candidate_scan(g: &Graph, blocks: &[Vec<Vertex>], mut tie: TieBreak<'_>) -> Result<CandidateState> {
    let mut runner = Runner::new(g);
    runner.start.push(0);
    for (j, block) in blocks.iter().enumerate() {
        for &v in block {
            if v.label() == 0 || v.index() >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v.label() as u64, n: g.n() });
            }
            if runner.rank[v.index()] != UNPLACED {
                return Err(Error::OverlappingBlocks(v.label()));
            }
            runner.rank[v.index()] = j as u32;
            runner.order.push(v.index() as u32);
        }
        runner.start.push(runner.order.len() as u32);
    }
    if blocks.is_empty() {
        return Ok(CandidateState { candidate: None, score: 0 });
    }
    Ok(runner.scan(&mut tie))
}

pub fn run_two_partition(g: &Graph, rng: &mut Prng) -> Vertex {
    Runner::new(g).two_partition(rng)
}

pub fn run_k_partition(g: &Graph, k: usize, rng: &mut Prng) -> Result<Vertex> {
    Runner::new(g).k_partition(k, rng)
}

pub fn run_permutation(g: &Graph, rng: &mut Prng) -> Vertex {
    Runner::new(g).permutation(rng)
}

pub fn run(g: &Graph, spec: MechanismSpec, rng: &mut Prng) -> Result<Vertex> {
    Runner::new(g).run(spec, rng)
}

/// `max over blocks j >= 2 of max over i in block j of indeg(i | blocks < j)`,
/// the score a candidate scan ends with. `0` when no later block is
/// nonempty.
pub fn max_prefix_indegree(g: &Graph, blocks: &[Vec<Vertex>]) -> usize {
    let mut prefix = VertexSubset::empty(g.n());
    let mut best = 0;
    for (j, block) in blocks.iter().enumerate() {
        if j > 0 {
            for &v in block {
                best = best.max(g.indegree_from(&prefix, v).expect("in range"));
            }
        }
        for &v in block {
            prefix.insert(v).expect("in range");
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_gadget;

    fn v(label: u32) -> Vertex {
        Vertex::new(label)
    }

    fn blocks(spec: &[&[u32]]) -> Vec<Vec<Vertex>> {
        spec.iter().map(|b| b.iter().map(|&l| v(l)).collect()).collect()
    }

    #[test]
    fn single_vertex_graphs() {
        let g = Graph::edgeless(1).unwrap();
        for seed in 0..20 {
            let mut r = Prng::new(seed);
            assert_eq!(run_two_partition(&g, &mut r), v(1));
            assert_eq!(run_permutation(&g, &mut r), v(1));
            assert_eq!(run_k_partition(&g, 3, &mut r).unwrap(), v(1));
        }
    }

    #[test]
    fn scan_on_single_edge() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        let s = candidate_scan(&g, &blocks(&[&[1], &[2]]), TieBreak::LastWins).unwrap();
        assert_eq!(s, CandidateState { candidate: Some(v(2)), score: 1 });
        // Vertex 1 has prefix indegree 0 >= 0 and displaces the initial candidate.
        let s = candidate_scan(&g, &blocks(&[&[2], &[1]]), TieBreak::LastWins).unwrap();
        assert_eq!(s, CandidateState { candidate: Some(v(1)), score: 0 });
    }

    #[test]
    fn exclusion_only_applies_to_the_comparison() {
        // 1 -> 2 makes 2 the candidate with score 1. Vertex 3 is nominated by
        // 1 and by the candidate: 1 >= 1 without the candidate's edge, and the
        // recorded score counts it again.
        let g = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        let s = candidate_scan(&g, &blocks(&[&[1], &[2], &[3]]), TieBreak::LastWins).unwrap();
        assert_eq!(s, CandidateState { candidate: Some(v(3)), score: 2 });
    }

    #[test]
    fn candidate_nomination_cannot_displace_it() {
        // Vertex 3 is nominated only by the candidate: 0 < 1, candidate stays.
        let g = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        let s = candidate_scan(&g, &blocks(&[&[1], &[2], &[3]]), TieBreak::LastWins).unwrap();
        assert_eq!(s, CandidateState { candidate: Some(v(2)), score: 1 });
    }

    #[test]
    fn empty_first_block_starts_without_candidate() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        // Vertex 1 is in no block, so 2 scores 0 and still displaces 3 on the tie.
        let s = candidate_scan(&g, &blocks(&[&[], &[3], &[], &[2]]), TieBreak::LastWins).unwrap();
        assert_eq!(s, CandidateState { candidate: Some(v(2)), score: 0 });
        let s = candidate_scan(&g, &blocks(&[&[]]), TieBreak::LastWins).unwrap();
        assert_eq!(s.candidate, None);
    }

    #[test]
    fn scan_validates_blocks() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(candidate_scan(&g, &blocks(&[&[1, 2], &[2]]), TieBreak::LastWins), Err(Error::OverlappingBlocks(2)));
        assert!(matches!(
            candidate_scan(&g, &blocks(&[&[4]]), TieBreak::LastWins),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn forced_two_partition_outcome() {
        // Find a seed with A1 = {1}, A2 = {2}; the unique argmax is 2.
        let g = gen_gadget("single_edge", Some(2)).unwrap();
        let seed = (0..).find(|&s| Prng::new(s).assign_blocks(2, 2).unwrap().block_labels() == [1, 2]).unwrap();
        assert_eq!(run_two_partition(&g, &mut Prng::new(seed)), v(2));
    }

    #[test]
    fn everything_in_first_block_returns_a_member() {
        let g = gen_gadget("perm_up", None).unwrap();
        let seed =
            (0..).find(|&s| Prng::new(s).assign_blocks(4, 3).unwrap().block_labels().iter().all(|&b| b == 1)).unwrap();
        let w = run_k_partition(&g, 3, &mut Prng::new(seed)).unwrap();
        assert!((1..=4).contains(&w.label()));
    }

    #[test]
    fn k_partition_rejects_small_k() {
        let g = Graph::edgeless(2).unwrap();
        assert_eq!(run_k_partition(&g, 1, &mut Prng::new(0)), Err(Error::InvalidBlockCount(1)));
        assert!(MechanismSpec::k_partition(0).is_err());
        assert!(MechanismSpec::KPartition { k: 1 }.validate().is_err());
    }

    #[test]
    fn runs_match_scans_of_the_same_randomness() {
        // A k-partition run equals a uniform-tie scan over the blocks it drew.
        let g = gen_gadget("oneplus5_f", None).unwrap();
        for seed in 0..500 {
            let mut a = Prng::new(seed);
            let run = run_k_partition(&g, 3, &mut a).unwrap();
            let mut b = Prng::new(seed);
            let assignment = b.assign_blocks(5, 3).unwrap();
            let s = candidate_scan(&g, &assignment.blocks(), TieBreak::Uniform(&mut b)).unwrap();
            assert_eq!(Some(run), s.candidate);
            assert_eq!(a, b, "same number of draws");
        }
        // A permutation run equals a last-wins scan over singleton blocks.
        for seed in 0..500 {
            let mut a = Prng::new(seed);
            let run = run_permutation(&g, &mut a);
            let mut order: Vec<u32> = (1..=5).collect();
            Prng::new(seed).shuffle(&mut order);
            let singletons: Vec<Vec<Vertex>> = order.iter().map(|&l| vec![v(l)]).collect();
            let s = candidate_scan(&g, &singletons, TieBreak::LastWins).unwrap();
            assert_eq!(Some(run), s.candidate);
        }
    }

    #[test]
    fn block_assignment_views() {
        let a = BlockAssignment::new(3, vec![2, 1, 2, 3]).unwrap();
        assert_eq!(a.blocks(), blocks(&[&[2], &[1, 3], &[4]]));
        let p = a.prefix(3);
        assert_eq!(p.iter().map(|x| x.label()).collect::<Vec<_>>(), [1, 2, 3]);
        assert!(BlockAssignment::new(3, vec![4]).is_err());
        assert!(BlockAssignment::new(1, vec![1]).is_err());
    }

    #[test]
    fn winners_are_vertices() {
        let g = gen_gadget("cycle_plus", Some(7)).unwrap();
        let mut r = Prng::new(3);
        let mut runner = Runner::new(&g);
        for spec in [MechanismSpec::TwoPartition, MechanismSpec::KPartition { k: 4 }, MechanismSpec::Permutation] {
            for _ in 0..1000 {
                let w = runner.run(spec, &mut r).unwrap();
                assert!((1..=7).contains(&w.label()));
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn scan_score_is_max_prefix_indegree(n in 1usize..7, p in 0.0f64..1.0, seed: u64, k in 2usize..5) {
            let g = crate::graph::gen_random(n, p, seed).unwrap();
            let mut r = Prng::new(seed ^ 0xABCD);
            let a = r.assign_blocks(n, k).unwrap();
            let bl = a.blocks();
            let s = candidate_scan(&g, &bl, TieBreak::Uniform(&mut r)).unwrap();
            proptest::prop_assert_eq!(s.score, max_prefix_indegree(&g, &bl));
            let later_positive = bl.iter().enumerate().skip(1).any(|(j, b)| {
                let prefix = a.prefix(j + 1);
                b.iter().any(|&x| g.indegree_from(&prefix, x).unwrap() > 0)
            });
            if later_positive {
                proptest::prop_assert!(s.score > 0);
            }
        }
    }
}
