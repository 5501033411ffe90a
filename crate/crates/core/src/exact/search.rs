use super::{Oracle, Rational};
use crate::graph::{enumerate_graphs_with, Graph, GraphClass};
use crate::mechanisms::MechanismSpec;
use crate::{Error, Result};

/// Smallest exact ratio over one enumerated graph class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorstCase {
    pub n: usize,
    pub class: GraphClass,
    pub mechanism: MechanismSpec,
    /// `None` when no graph in the class has a positive maximum indegree.
    pub min_ratio: Option<Rational>,
    /// First graph in enumeration order attaining `min_ratio`.
    pub argmin: Option<Graph>,
    /// Position of `argmin` in the enumeration.
    pub argmin_index: Option<u64>,
    pub graphs_examined: u64,
    pub graphs_with_edges: u64,
}

impl WorstCase {
    pub fn empty(n: usize, class: GraphClass, mechanism: MechanismSpec) -> Self {
        WorstCase {
            n,
            class,
            mechanism,
            min_ratio: None,
            argmin: None,
            argmin_index: None,
            graphs_examined: 0,
            graphs_with_edges: 0,
        }
    }

    /// Folds in the ratio of the graph at `index`. Ties keep the earlier index.
    pub fn offer(&mut self, index: u64, g: &Graph, ratio: Option<Rational>) {
        self.graphs_examined += 1;
        let Some(r) = ratio else { return };
        self.graphs_with_edges += 1;
        let better = match (&self.min_ratio, self.argmin_index) {
            (None, _) => true,
            (Some(best), Some(at)) => r < *best || (r == *best && index < at),
            (Some(_), None) => true,
        };
        if better {
            self.min_ratio = Some(r);
            self.argmin = Some(g.clone());
            self.argmin_index = Some(index);
        }
    }

    /// Combines results over disjoint index ranges of the same enumeration.
    pub fn merge(mut self, other: WorstCase) -> WorstCase {
        self.graphs_examined += other.graphs_examined;
        self.graphs_with_edges += other.graphs_with_edges;
        if let (Some(r), Some(g), Some(i)) = (other.min_ratio, other.argmin, other.argmin_index) {
            let examined = self.graphs_examined;
            let with_edges = self.graphs_with_edges;
            self.offer(i, &g, Some(r));
            self.graphs_examined = examined;
            self.graphs_with_edges = with_edges;
        }
        self
    }
}

/// Minimum of `E[indeg(selected)] / Delta` over every graph of the class on
/// `n` vertices with `Delta > 0`.
pub fn worst_case_search(oracle: &Oracle, n: usize, spec: MechanismSpec, class: GraphClass) -> Result<WorstCase> {
    let graphs = enumerate_graphs_with(n, class, &oracle.limits)?;
    // Fail fast on the per-graph guard before walking the class.
    oracle.distribution(&Graph::edgeless(n)?, spec)?;
    let mut best = WorstCase::empty(n, class, spec);
    for (index, g) in graphs.enumerate() {
        let rep = oracle.ratio(&g, spec)?;
        best.offer(index as u64, &g, rep.ratio);
    }
    if best.graphs_examined == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn three_vertex_worst_cases() {
        let o = Oracle::default();
        let w = o.worst_case_search(3, MechanismSpec::Permutation, GraphClass::NoAbstention).unwrap();
        assert_eq!(w.min_ratio, Some(rat(3, 4)));
        assert_eq!(w.graphs_examined, 27);
        let w = o.worst_case_search(3, MechanismSpec::TwoPartition, GraphClass::NoAbstention).unwrap();
        assert_eq!(w.min_ratio, Some(rat(5, 8)));
        let g = w.argmin.unwrap();
        assert_eq!(o.ratio(&g, MechanismSpec::TwoPartition).unwrap().ratio, Some(rat(5, 8)));
    }

    #[test]
    fn merge_keeps_first_minimum() {
        let spec = MechanismSpec::Permutation;
        let g = Graph::edgeless(2).unwrap();
        let mut a = WorstCase::empty(2, GraphClass::All, spec);
        a.offer(3, &g, Some(rat(1, 2)));
        let mut b = WorstCase::empty(2, GraphClass::All, spec);
        b.offer(1, &g, Some(rat(1, 2)));
        b.offer(2, &g, None);
        let m = a.merge(b);
        assert_eq!(m.argmin_index, Some(1));
        assert_eq!(m.graphs_examined, 3);
        assert_eq!(m.graphs_with_edges, 2);
    }
}
