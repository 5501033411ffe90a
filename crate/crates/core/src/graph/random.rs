use alloc::vec::Vec;

use super::Graph;
use crate::rng::Prng;
use crate::{Error, Result};

/// Erdős–Rényi style digraph: each ordered pair `(u, v)`, `u != v`, visited in
/// lexicographic order, is an edge iff the next 53-bit uniform draw is below
/// `edge_prob`.
pub fn gen_random(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidProbability(edge_prob));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = Prng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if u != v && rng.next_f64() < edge_prob {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted(n, edges))
}

/// Random graph in which every vertex nominates exactly one other vertex,
/// drawn uniformly for vertices in ascending order.
pub fn gen_random_functional(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooFewVertices { what: "a functional graph", n, min: 2 });
    }
    let mut rng = Prng::new(seed);
    let edges = (0..n as u64)
        .map(|u| {
            let t = rng.uniform_below(n as u64 - 1).expect("n >= 2");
            (u as u32, if t >= u { t + 1 } else { t } as u32)
        })
        .collect();
    Ok(Graph::from_sorted(n, edges))
}
