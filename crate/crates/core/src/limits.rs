//! Size guards for the exhaustive routines.

/// Work limits for the exhaustive oracles and enumerators.
///
/// Every routine that enumerates randomness or graphs checks its cost
/// against one of these before starting and refuses with
/// [`Error::SizeGuard`](crate::Error::SizeGuard) when it would exceed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of block assignments `k^n` for the partition oracles.
    pub partition_assignments: u64,
    /// Largest `n` for which all `n!` permutations are enumerated.
    pub permutation_n: usize,
    /// Largest `n` for an exhaustive impartiality check.
    pub impartiality_n: usize,
    /// Largest `n` for exact symmetrization over all relabelings.
    pub symmetrize_n: usize,
    /// Largest `n` for enumerating every loop-free graph.
    pub enumerate_all_n: usize,
    /// Largest `n` for enumerating graphs without abstentions.
    pub enumerate_no_abstention_n: usize,
    /// Largest `n` for enumerating graphs with outdegree exactly one.
    pub enumerate_outdegree_one_n: usize,
    /// Maximum number of compositions visited by `alpha_k`.
    pub compositions: u64,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        partition_assignments: 10_000_000,
        permutation_n: 9,
        impartiality_n: 4,
        symmetrize_n: 6,
        enumerate_all_n: 4,
        enumerate_no_abstention_n: 4,
        enumerate_outdegree_one_n: 5,
        compositions: 1_000_000,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
