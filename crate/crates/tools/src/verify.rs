//! Invariant suites behind `impartial verify`.

use impartial_core::bounds::{
    alpha2_closed, alpha2_sum, alpha_k, alphak2_pairs, check_monotone, kpartition_guarantee, upper_bound, MonotoneKind,
};
use impartial_core::exact::{conditional_distribution, expected_degree, fixed_partition_bound, Rational};
use impartial_core::graph::{enumerate_graphs_with, gen_random};
use impartial_core::mechanisms::{candidate_scan, max_prefix_indegree};
use impartial_core::{BlockAssignment, Error, Graph, GraphClass, MechanismSpec, Oracle, Prng, TieBreak};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::format::rational_string;

pub const MECHANISMS: [MechanismSpec; 3] =
    [MechanismSpec::TwoPartition, MechanismSpec::KPartition { k: 3 }, MechanismSpec::Permutation];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Impartiality,
    Formulas,
    Lemmas,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: failure.is_none(), detail: failure });
    }
}

pub fn run(suite: Suite, max_n: usize, oracle: &Oracle) -> Result<VerifyReport, Error> {
    let mut report = VerifyReport::default();
    if matches!(suite, Suite::Formulas | Suite::All) {
        formulas(&mut report)?;
    }
    if matches!(suite, Suite::Impartiality | Suite::All) {
        impartiality(&mut report, max_n, oracle)?;
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        lemmas(&mut report, max_n.min(4), oracle)?;
    }
    Ok(report)
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    ok: impl Fn(&T) -> Result<bool, Error>,
    show: impl Fn(&T) -> String,
) -> Result<Option<String>, Error> {
    for item in items {
        if !ok(&item)? {
            return Ok(Some(show(&item)));
        }
    }
    Ok(None)
}

fn formulas(report: &mut VerifyReport) -> Result<(), Error> {
    let f = first_failure(1..=20, |&d| Ok(alpha2_sum(d)? == alpha2_closed(d)?), |d| format!("delta = {d}"))?;
    report.push("alpha2 sum equals closed form, delta 1..=20", f);
    let f = first_failure(1..=12, |&d| Ok(alpha_k(2, d)? == alpha2_sum(d)?), |d| format!("delta = {d}"))?;
    report.push("alpha_k with k = 2 equals alpha2, delta 1..=12", f);
    let f = first_failure(2..=16, |&k| Ok(alpha_k(k, 1)? == kpartition_guarantee(k)?), |k| format!("k = {k}"))?;
    report.push("alpha_k(k, 1) = (k-1)/(2k), k 2..=16", f);
    let f = first_failure(2..=10, |&k| Ok(alpha_k(k, 2)? == alphak2_pairs(k)?), |k| format!("k = {k}"))?;
    report.push("alpha_k(k, 2) equals pair sum, k 2..=10", f);
    let sweeps = [
        (MonotoneKind::Alpha2, 20),
        (MonotoneKind::AlphaK(3), 10),
        (MonotoneKind::AlphaK(4), 10),
        (MonotoneKind::AlphaK(5), 10),
    ];
    for (kind, top) in sweeps {
        let rep = check_monotone(kind, top)?;
        report.push(
            format!("{kind:?} monotone up to delta {top}"),
            rep.first_violation.map(|d| format!("fails at delta = {d}")),
        );
    }
    let three_quarters = Rational::new(BigInt::from(3), BigInt::from(4));
    let f = first_failure(
        4..=64,
        |&n| Ok(upper_bound(n, GraphClass::NoAbstention)? < three_quarters),
        |n| format!("n = {n}"),
    )?;
    report.push("no-abstention upper bound below 3/4 for n >= 4", f);
    Ok(())
}

fn impartiality(report: &mut VerifyReport, max_n: usize, oracle: &Oracle) -> Result<(), Error> {
    for n in 1..=max_n {
        let graphs: Vec<Graph> = enumerate_graphs_with(n, GraphClass::All, &oracle.limits)?.collect();
        for spec in MECHANISMS {
            let failure = graphs
                .par_iter()
                .map(|g| -> Result<Option<String>, Error> {
                    for v in g.vertices() {
                        let rep = oracle.impartiality_check(spec, g, v)?;
                        if let Some(bad) = rep.violation {
                            return Ok(Some(format!(
                                "{} vertex {v}: {} vs {}",
                                g.id(),
                                rational_string(&bad.p_a),
                                rational_string(&bad.p_b)
                            )));
                        }
                    }
                    Ok(None)
                })
                .collect::<Result<Vec<_>, Error>>()?
                .into_iter()
                .flatten()
                .next();
            report.push(format!("impartiality of {spec} on all graphs with n = {n}"), failure);
        }
    }
    Ok(())
}

fn lemmas(report: &mut VerifyReport, max_n: usize, oracle: &Oracle) -> Result<(), Error> {
    // Final scan score is the best prefix indegree of any later block.
    let mut rng = Prng::new(0x1e11a);
    let mut failure = None;
    'outer: for seed in 0..500u64 {
        let n = 1 + (seed % 5) as usize;
        let g = gen_random(n, 0.45, seed)?;
        for _ in 0..200 {
            let k = 2 + rng.uniform_below(3)? as usize;
            let blocks = rng.assign_blocks(n, k)?.blocks();
            let s = candidate_scan(&g, &blocks, TieBreak::Uniform(&mut rng))?;
            if s.score != max_prefix_indegree(&g, &blocks) {
                failure = Some(format!("{} blocks {blocks:?}", g.id()));
                break 'outer;
            }
        }
    }
    report.push("candidate scan score equals max prefix indegree", failure);

    let mut failure = None;
    for n in 2..=max_n {
        for g in enumerate_graphs_with(n, GraphClass::All, &oracle.limits)? {
            if let Some(f) = fixed_assignment_failure(&g)? {
                failure = Some(f);
                break;
            }
        }
    }
    if failure.is_none() {
        for seed in 0..100 {
            if let Some(f) = fixed_assignment_failure(&gen_random(5, 0.35, seed)?)? {
                failure = Some(f);
                break;
            }
        }
    }
    report.push(format!("fixed-assignment lower bound, all graphs n <= {max_n} and 100 sampled at n = 5"), failure);

    let mut failure = None;
    for n in 1..=max_n.min(3) {
        for g in enumerate_graphs_with(n, GraphClass::All, &oracle.limits)? {
            if oracle.distribution(&g, MechanismSpec::TwoPartition)?
                != oracle.distribution(&g, MechanismSpec::KPartition { k: 2 })?
            {
                failure = Some(g.id());
            }
        }
    }
    report.push("k-partition with k = 2 equals 2-partition", failure);
    Ok(())
}

/// Checks every assignment into 2 and 3 blocks.
fn fixed_assignment_failure(g: &Graph) -> Result<Option<String>, Error> {
    let delta = g.max_indegree();
    if delta == 0 {
        return Ok(None);
    }
    let n = g.n() as u32;
    for k in 2..=3u32 {
        for code in 0..k.pow(n) {
            let a = BlockAssignment::new(k as usize, (0..n).map(|i| code / k.pow(i) % k + 1).collect())?;
            let e = expected_degree(&conditional_distribution(g, &a)?, g)?;
            for star in g.vertices().filter(|&v| g.indegree(v) == Ok(delta)) {
                let bound = fixed_partition_bound(g, &a, star)?;
                if e < Rational::from_integer(BigInt::from(bound)) {
                    return Ok(Some(format!("{} blocks {:?} i* = {star}", g.id(), a.block_labels())));
                }
            }
        }
    }
    Ok(None)
}
