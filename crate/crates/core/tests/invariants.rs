use impartial_core::bounds::{alpha2_sum, alpha_k};
use impartial_core::exact::{
    conditional_distribution, expected_degree, fixed_partition_bound, impartiality_check, ratio, symmetrize, Rational,
};
use impartial_core::graph::{enumerate_graphs, gen_random};
use impartial_core::mechanisms::{candidate_scan, max_prefix_indegree};
use impartial_core::{exact, BlockAssignment, Graph, GraphClass, MechanismSpec, Prng, TieBreak};
use num_bigint::BigInt;

const MECHS: [MechanismSpec; 4] = [
    MechanismSpec::TwoPartition,
    MechanismSpec::KPartition { k: 2 },
    MechanismSpec::KPartition { k: 3 },
    MechanismSpec::Permutation,
];

fn r(n: usize, d: usize) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn impartial_on_all_three_vertex_graphs() {
    for g in enumerate_graphs(3, GraphClass::All).unwrap() {
        for m in MECHS {
            for v in g.vertices() {
                let rep = impartiality_check(m, &g, v).unwrap();
                assert!(rep.passed(), "{m} {} vertex {v}: {:?}", g.id(), rep.violation);
            }
        }
    }
}

#[test]
fn mechanisms_are_symmetric() {
    // Every rule treats labels uniformly, so symmetrizing changes nothing.
    for seed in 0..6 {
        let g = gen_random(4, 0.4, seed).unwrap();
        for m in MECHS {
            assert_eq!(symmetrize(m, &g).unwrap(), exact::exact_distribution(&g, m).unwrap(), "{m}");
        }
    }
}

#[test]
fn per_graph_guarantees_up_to_three_vertices() {
    for n in 2..=3 {
        for g in enumerate_graphs(n, GraphClass::All).unwrap() {
            let delta = g.max_indegree();
            if delta == 0 {
                continue;
            }
            assert!(ratio(&g, MechanismSpec::TwoPartition).unwrap().ratio.unwrap() >= alpha2_sum(delta).unwrap());
            let k3 = ratio(&g, MechanismSpec::KPartition { k: 3 }).unwrap().ratio.unwrap();
            assert!(k3 >= alpha_k(3, delta).unwrap());
            let p = ratio(&g, MechanismSpec::Permutation).unwrap().ratio.unwrap();
            assert!(p >= r(1, 2));
            if g.in_class(GraphClass::NoAbstention) {
                assert!(p >= r(7, 12));
            }
        }
    }
}

fn check_fixed_assignment_bound(g: &Graph, a: &BlockAssignment) {
    let delta = g.max_indegree();
    if delta == 0 {
        return;
    }
    let e = expected_degree(&conditional_distribution(g, a).unwrap(), g).unwrap();
    for star in g.vertices().filter(|&v| g.indegree(v).unwrap() == delta) {
        let bound = fixed_partition_bound(g, a, star).unwrap();
        assert!(e >= r(bound, 1), "{} {:?} i* = {star}", g.id(), a.block_labels());
    }
}

#[test]
fn fixed_assignment_bound_exhaustive_to_four_vertices() {
    for n in 2..=4 {
        for g in enumerate_graphs(n, GraphClass::All).unwrap() {
            for k in 2..=3u32 {
                for code in 0..k.pow(n as u32) {
                    let labels = (0..n as u32).map(|i| code / k.pow(i) % k + 1).collect();
                    check_fixed_assignment_bound(&g, &BlockAssignment::new(k as usize, labels).unwrap());
                }
            }
        }
    }
}

#[test]
fn fixed_assignment_bound_sampled_at_five_vertices() {
    let mut rng = Prng::new(0x5eed);
    for seed in 0..300 {
        let g = gen_random(5, 0.15 + 0.002 * seed as f64, seed).unwrap();
        for k in 2..=3u32 {
            for code in 0..k.pow(5) {
                let labels = (0..5).map(|i| code / k.pow(i) % k + 1).collect();
                check_fixed_assignment_bound(&g, &BlockAssignment::new(k as usize, labels).unwrap());
            }
        }
        let a = rng.assign_blocks(5, 4).unwrap();
        check_fixed_assignment_bound(&g, &a);
    }
}

#[test]
fn scan_score_identity_on_random_blocks() {
    let mut rng = Prng::new(8);
    for seed in 0..200 {
        let g = gen_random(5, 0.4, seed).unwrap();
        for _ in 0..20 {
            let a = rng.assign_blocks(5, 4).unwrap();
            let blocks = a.blocks();
            let s = candidate_scan(&g, &blocks, TieBreak::Uniform(&mut rng)).unwrap();
            assert_eq!(s.score, max_prefix_indegree(&g, &blocks));
        }
    }
}
