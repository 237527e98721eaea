#![allow(dead_code)]

use std::sync::OnceLock;

use clockwise::circuits::DEFAULT_CIRCUIT_CAP;
use clockwise::corpus::{random_assignment, random_connected, seeded_rng, small_multigraphs, DEFAULT_SEED};
use clockwise::graph::{EdgeId, Multigraph, Orientation};
use clockwise::solver::ParityAssignment;
use rand::Rng;

pub const CAP: usize = DEFAULT_CIRCUIT_CAP;

/// Connected multigraphs with loops, up to 5 vertices and 8 edges.
pub fn small() -> &'static [Multigraph] {
    static S: OnceLock<Vec<Multigraph>> = OnceLock::new();
    S.get_or_init(|| small_multigraphs(5, 8, true))
}

/// Connected multigraphs with loops, up to 6 vertices and 9 edges.
pub fn medium() -> &'static [Multigraph] {
    static M: OnceLock<Vec<Multigraph>> = OnceLock::new();
    M.get_or_init(|| small_multigraphs(6, 9, true))
}

pub fn random_graphs() -> &'static [Multigraph] {
    static R: OnceLock<Vec<Multigraph>> = OnceLock::new();
    R.get_or_init(|| random_connected(DEFAULT_SEED, 200, 7..=8, 16))
}

/// AllOdd, AllEven and `k` random explicit assignments.
pub fn assignments(g: &Multigraph, rng: &mut impl Rng, k: usize) -> Vec<ParityAssignment> {
    let mut js = vec![ParityAssignment::AllOdd, ParityAssignment::AllEven];
    for _ in 0..k {
        js.push(random_assignment(g, rng, CAP).unwrap());
    }
    js
}

pub fn rng(salt: u64) -> rand_chacha::ChaCha8Rng {
    seeded_rng(DEFAULT_SEED ^ salt)
}

pub fn random_orientation(g: &Multigraph, rng: &mut impl Rng) -> Orientation {
    let flips: Vec<EdgeId> = g.edge_ids().filter(|_| rng.gen_bool(0.5)).collect();
    Orientation::from_reversals(g, flips).unwrap()
}
