//! Cross-checks the exact oracle against a deliberately naive transcription
//! of the three selection rules: explicit vertex sets, every tie-break path
//! followed separately, permutations generated recursively.

use std::collections::BTreeSet;

use impartial_core::exact::{exact_distribution, Rational};
use impartial_core::graph::{enumerate_graphs, gen_random, GraphClass};
use impartial_core::{Graph, MechanismSpec, Vertex};
use num_bigint::BigInt;
use num_traits::Zero;

fn frac(n: usize, d: usize) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn indeg_from(g: &Graph, from: &BTreeSet<u32>, v: u32) -> usize {
    from.iter().filter(|&&u| g.has_edge(Vertex::new(u), Vertex::new(v))).count()
}

fn all_assignments(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|a| (0..k).map(move |b| [a.clone(), vec![b]].concat())).collect();
    }
    out
}

fn two_partition(g: &Graph) -> Vec<Rational> {
    let n = g.n();
    let mut p = vec![Rational::zero(); n];
    let all = all_assignments(n, 2);
    let w = frac(1, all.len());
    for a in &all {
        let a1: BTreeSet<u32> = (1..=n as u32).filter(|&v| a[v as usize - 1] == 0).collect();
        let a2: Vec<u32> = (1..=n as u32).filter(|&v| a[v as usize - 1] == 1).collect();
        let winners: Vec<u32> = if a2.is_empty() {
            (1..=n as u32).collect()
        } else {
            let best = a2.iter().map(|&v| indeg_from(g, &a1, v)).max().unwrap();
            a2.iter().copied().filter(|&v| indeg_from(g, &a1, v) == best).collect()
        };
        for &v in &winners {
            p[v as usize - 1] += &w * frac(1, winners.len());
        }
    }
    p
}

/// Follows every uniform tie-break path of the scan from block `j` onward.
fn scan_paths(
    g: &Graph,
    blocks: &[Vec<u32>],
    j: usize,
    cand: Option<u32>,
    score: usize,
    weight: Rational,
    p: &mut [Rational],
) {
    if j == blocks.len() {
        p[cand.unwrap() as usize - 1] += weight;
        return;
    }
    let block = &blocks[j];
    if block.is_empty() {
        return scan_paths(g, blocks, j + 1, cand, score, weight, p);
    }
    let prefix: BTreeSet<u32> = blocks[..j].iter().flatten().copied().collect();
    let mut without = prefix.clone();
    if let Some(c) = cand {
        without.remove(&c);
    }
    let challenge = block.iter().map(|&v| indeg_from(g, &without, v)).max().unwrap();
    if j > 0 && challenge < score {
        return scan_paths(g, blocks, j + 1, cand, score, weight, p);
    }
    let best = block.iter().map(|&v| indeg_from(g, &prefix, v)).max().unwrap();
    let ties: Vec<u32> = block.iter().copied().filter(|&v| indeg_from(g, &prefix, v) == best).collect();
    let share = weight / frac(ties.len(), 1);
    for t in ties {
        scan_paths(g, blocks, j + 1, Some(t), best, share.clone(), p);
    }
}

fn k_partition(g: &Graph, k: usize) -> Vec<Rational> {
    let n = g.n();
    let mut p = vec![Rational::zero(); n];
    let all = all_assignments(n, k);
    for a in &all {
        let blocks: Vec<Vec<u32>> =
            (0..k).map(|b| (1..=n as u32).filter(|&v| a[v as usize - 1] == b).collect()).collect();
        scan_paths(g, &blocks, 0, None, 0, frac(1, all.len()), &mut p);
    }
    p
}

fn permutations(items: Vec<u32>) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let head = rest.remove(i);
        for mut tail in permutations(rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn permutation(g: &Graph) -> Vec<Rational> {
    let n = g.n();
    let mut p = vec![Rational::zero(); n];
    let all = permutations((1..=n as u32).collect());
    for order in &all {
        let blocks: Vec<Vec<u32>> = order.iter().map(|&v| vec![v]).collect();
        scan_paths(g, &blocks, 0, None, 0, frac(1, all.len()), &mut p);
    }
    p
}

fn check(g: &Graph) {
    let cases = [
        (MechanismSpec::TwoPartition, two_partition(g)),
        (MechanismSpec::KPartition { k: 2 }, k_partition(g, 2)),
        (MechanismSpec::KPartition { k: 3 }, k_partition(g, 3)),
        (MechanismSpec::Permutation, permutation(g)),
    ];
    for (spec, expected) in cases {
        let got = exact_distribution(g, spec).unwrap();
        assert_eq!(got.probs(), &expected[..], "{spec} on {}", g.id());
    }
}

#[test]
fn agrees_on_every_graph_up_to_three_vertices() {
    for n in 1..=3 {
        for g in enumerate_graphs(n, GraphClass::All).unwrap() {
            check(&g);
        }
    }
}

#[test]
fn agrees_on_sampled_four_vertex_graphs() {
    for seed in 0..60 {
        check(&gen_random(4, 0.2 + 0.01 * seed as f64, seed).unwrap());
    }
}

#[test]
fn agrees_on_a_five_vertex_graph() {
    let g = gen_random(5, 0.5, 99).unwrap();
    assert_eq!(exact_distribution(&g, MechanismSpec::KPartition { k: 3 }).unwrap().probs(), &k_partition(&g, 3)[..]);
    assert_eq!(exact_distribution(&g, MechanismSpec::Permutation).unwrap().probs(), &permutation(&g)[..]);
}
