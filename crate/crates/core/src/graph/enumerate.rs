//! Exhaustive enumeration of labeled graphs.
//!
//! Graphs are produced in ascending order of their edge mask (see
//! [`Graph::edge_mask`]). Internally each vertex's outgoing set is one digit of
//! a mixed-radix counter, vertex 1 least significant; because vertex `u`'s
//! edges occupy mask bits `u(n-1) .. (u+1)(n-1)`, counting the digits in
//! ascending order visits the masks in ascending order too.

use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, GraphClass};
use crate::{Error, Limits, Result};

/// Number of graphs on `n` labeled vertices in `class`.
pub fn graph_count(n: usize, class: GraphClass) -> u128 {
    if n == 0 {
        return 0;
    }
    let per_vertex: u128 = match class {
        GraphClass::All => 1u128.checked_shl((n - 1) as u32).unwrap_or(u128::MAX),
        GraphClass::NoAbstention => 1u128.checked_shl((n - 1) as u32).map_or(u128::MAX, |c| c - 1),
        GraphClass::OutdegreeExactlyOne => (n - 1) as u128,
    };
    (0..n).try_fold(1u128, |acc, _| acc.checked_mul(per_vertex)).unwrap_or(u128::MAX)
}

/// Every graph on `n` vertices in `class`, under the default limits.
pub fn enumerate_graphs(n: usize, class: GraphClass) -> Result<GraphEnumerator> {
    enumerate_graphs_with(n, class, &Limits::DEFAULT)
}

pub fn enumerate_graphs_with(n: usize, class: GraphClass, limits: &Limits) -> Result<GraphEnumerator> {
    let max_n = match class {
        GraphClass::All => limits.enumerate_all_n,
        GraphClass::NoAbstention => limits.enumerate_no_abstention_n,
        GraphClass::OutdegreeExactlyOne => limits.enumerate_outdegree_one_n,
    }
    .min(8);
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > max_n {
        return Err(Error::SizeGuard {
            what: "graph enumeration",
            required: graph_count(n, class),
            limit: graph_count(max_n, class),
        });
    }
    let width = n - 1;
    let choices: Vec<u64> = match class {
        GraphClass::All => (0..1u64 << width).collect(),
        GraphClass::NoAbstention => (1..1u64 << width).collect(),
        GraphClass::OutdegreeExactlyOne => (0..width).map(|b| 1u64 << b).collect(),
    };
    let done = choices.is_empty();
    Ok(GraphEnumerator { n, choices, digits: vec![0; n], done, remaining: graph_count(n, class) as u64 })
}

/// Iterator over the graphs of one class; see the module docs for the order.
#[derive(Debug, Clone)]
pub struct GraphEnumerator {
    n: usize,
    choices: Vec<u64>,
    digits: Vec<usize>,
    done: bool,
    remaining: u64,
}

impl GraphEnumerator {
    fn current_mask(&self) -> u64 {
        let width = self.n - 1;
        self.digits.iter().enumerate().fold(0u64, |m, (u, &d)| m | self.choices[d] << (u * width))
    }
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let mask = self.current_mask();
        // advance the counter
        self.done = true;
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < self.choices.len() {
                self.done = false;
                break;
            }
            *d = 0;
        }
        self.remaining -= 1;
        Some(Graph::from_edge_mask(self.n, mask).expect("mask fits"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

impl ExactSizeIterator for GraphEnumerator {}
