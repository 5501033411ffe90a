//! Rayon drivers for the embarrassingly parallel routines. Results are
//! identical to the sequential versions in `impartial-core`.

use impartial_core::exact::WorstCase;
use impartial_core::graph::enumerate_graphs_with;
use impartial_core::montecarlo::{estimate_range, McEstimate};
use impartial_core::{Error, Graph, GraphClass, MechanismSpec, Oracle};
use rayon::prelude::*;

/// Trials per Monte Carlo work item.
const MC_CHUNK: u64 = 1 << 13;

pub fn par_worst_case_search(
    oracle: &Oracle,
    n: usize,
    spec: MechanismSpec,
    class: GraphClass,
) -> Result<WorstCase, Error> {
    let graphs: Vec<Graph> = enumerate_graphs_with(n, class, &oracle.limits)?.collect();
    oracle.distribution(&Graph::edgeless(n)?, spec)?;
    if graphs.is_empty() {
        return Err(Error::EmptyGraph);
    }
    graphs
        .par_iter()
        .enumerate()
        .try_fold(
            || WorstCase::empty(n, class, spec),
            |mut acc, (i, g)| {
                acc.offer(i as u64, g, oracle.ratio(g, spec)?.ratio);
                Ok(acc)
            },
        )
        .try_reduce(|| WorstCase::empty(n, class, spec), |a, b| Ok(a.merge(b)))
}

pub fn par_estimate(g: &Graph, spec: MechanismSpec, trials: u64, seed: u64) -> Result<McEstimate, Error> {
    if trials == 0 {
        return Err(Error::Domain { name: "trials", value: 0 });
    }
    let chunks = trials.div_ceil(MC_CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| estimate_range(g, spec, c * MC_CHUNK..((c + 1) * MC_CHUNK).min(trials), seed))
        .try_reduce_with(|a, b| a.merge(&b))
        .expect("at least one chunk")
}
