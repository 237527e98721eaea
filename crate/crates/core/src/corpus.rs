//! Test corpora and brute-force oracles: every small connected multigraph up
//! to isomorphism, seeded random graphs and assignments, and exhaustive
//! orientation search.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuits::{even_circuits, Circuit, ClockwiseParity};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Orientation, VertexId};
use crate::solver::ParityAssignment;

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Largest edge count the exhaustive orientation search accepts.
pub const MAX_BRUTE_FORCE_EDGES: usize = 24;

/// Every connected multigraph on 1 to `max_vertices` vertices with at most
/// `max_edges` edges, one per isomorphism class. Loops are included when
/// `loops` is set. Vertices are 1..=n and edge ids follow vertex-pair order.
pub fn small_multigraphs(max_vertices: usize, max_edges: usize, loops: bool) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| loops || i != j)
            .collect();
        let perms = permutations(n);
        // slot index of each (i, j) after relabelling
        let index = |i: usize, j: usize| slots.iter().position(|&s| s == (i.min(j), i.max(j)));
        let images: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| slots.iter().map(|&(i, j)| index(p[i], p[j]).unwrap()).collect())
            .collect();
        let mut mult = vec![0u8; slots.len()];
        let mut reps = Vec::new();
        fill(0, max_edges, &mut mult, &mut |m: &[u8]| {
            if connected(n, &slots, m) && is_canonical(m, &images) {
                reps.push(m.to_vec());
            }
        });
        reps.sort_by_key(|m| (m.iter().map(|&x| x as usize).sum::<usize>(), m.iter().rev().copied().collect::<Vec<_>>()));
        for m in reps {
            let mut pairs = Vec::new();
            for (k, &(i, j)) in slots.iter().enumerate() {
                for _ in 0..m[k] {
                    pairs.push((i as VertexId + 1, j as VertexId + 1));
                }
            }
            let edges = pairs.iter().enumerate().map(|(k, &(a, b))| (k as EdgeId + 1, a, b));
            out.push(Multigraph::new(1..=n as VertexId, edges).expect("generated graph is valid"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn fill(k: usize, left: usize, mult: &mut Vec<u8>, visit: &mut impl FnMut(&[u8])) {
    if k == mult.len() {
        visit(mult);
        return;
    }
    for x in 0..=left {
        mult[k] = x as u8;
        fill(k + 1, left - x, mult, visit);
    }
    mult[k] = 0;
}

fn connected(n: usize, slots: &[(usize, usize)], m: &[u8]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut parts = n;
    for (k, &(i, j)) in slots.iter().enumerate() {
        if m[k] > 0 {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                parts -= 1;
            }
        }
    }
    parts == 1
}

// The representative of each class is its lexicographically largest
// multiplicity vector.
fn is_canonical(m: &[u8], images: &[Vec<usize>]) -> bool {
    let mut permuted = vec![0u8; m.len()];
    for img in images {
        for (k, &t) in img.iter().enumerate() {
            permuted[t] = m[k];
        }
        if permuted.as_slice() > m {
            return false;
        }
    }
    true
}

/// `count` random connected loop-free multigraphs with a vertex count drawn
/// from `vertices` and between n and `max_edges` edges (at least n - 1 when
/// `max_edges` is smaller), built from a random spanning tree plus random
/// extra edges.
pub fn random_connected(
    seed: u64,
    count: usize,
    vertices: std::ops::RangeInclusive<usize>,
    max_edges: usize,
) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(vertices.clone());
            let lo = n.min(max_edges).max(n - 1);
            let m = rng.gen_range(lo..=max_edges.max(lo));
            let mut order: Vec<VertexId> = (1..=n as VertexId).collect();
            order.shuffle(&mut rng);
            let mut pairs = Vec::with_capacity(m);
            for k in 1..n {
                let parent = order[rng.gen_range(0..k)];
                pairs.push((parent, order[k]));
            }
            while pairs.len() < m {
                let a = rng.gen_range(1..=n as VertexId);
                let b = rng.gen_range(1..=n as VertexId);
                if a != b {
                    pairs.push((a, b));
                }
            }
            pairs.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
            Multigraph::from_pairs(&pairs)
        })
        .collect()
}

/// An explicit assignment with an independent fair coin per even circuit.
pub fn random_assignment(g: &Multigraph, rng: &mut impl Rng, cap: usize) -> Result<ParityAssignment> {
    let evens = even_circuits(g, cap)?;
    Ok(ParityAssignment::from_pairs(evens.iter().map(|c| {
        let p = if rng.gen_bool(0.5) { ClockwiseParity::Even } else { ClockwiseParity::Odd };
        (c, p)
    })))
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Even circuits with the bitmasks needed to evaluate clockwise parity
/// under any orientation given as a reversal mask.
pub struct ParityTable {
    pub circuits: Vec<Circuit>,
    // bit i set when edge i is traversed from head to tail under the reference orientation
    against: Vec<u32>,
    support: Vec<u32>,
    edges: usize,
}

impl ParityTable {
    pub fn new(g: &Multigraph, cap: usize) -> Result<Self> {
        if g.edge_count() > MAX_BRUTE_FORCE_EDGES {
            return Err(Error::Capability(format!(
                "exhaustive orientation search supports at most {MAX_BRUTE_FORCE_EDGES} edges"
            )));
        }
        let circuits = even_circuits(g, cap)?;
        let reference = Orientation::reference(g);
        let mut against = Vec::new();
        let mut support = Vec::new();
        for c in &circuits {
            let (mut a, mut s) = (0u32, 0u32);
            for &(v, e) in c.sense() {
                let i = g.edge_index(e).unwrap();
                s |= 1 << i;
                if reference.tail(e) != Some(v) {
                    a |= 1 << i;
                }
            }
            against.push(a);
            support.push(s);
        }
        Ok(ParityTable {
            circuits,
            against,
            support,
            edges: g.edge_count(),
        })
    }

    /// Clockwise parity of circuit `k` when the edges in `reversed` (by
    /// index) are flipped from the reference orientation.
    pub fn parity(&self, k: usize, reversed: u32) -> ClockwiseParity {
        let with_sense = self.support[k] & !(self.against[k] ^ reversed);
        ClockwiseParity::of_count(with_sense.count_ones() as usize)
    }

    /// First reversal mask under which every circuit meets its target.
    pub fn search(&self, targets: &[ClockwiseParity]) -> Option<u32> {
        let total = 1u64 << self.edges;
        (0..total as u32).find(|&mask| (0..self.circuits.len()).all(|k| self.parity(k, mask) == targets[k]))
    }
}

/// Exhaustive search over all 2^|E| orientations for one meeting `j`.
pub fn brute_force_orientation(g: &Multigraph, j: &ParityAssignment, cap: usize) -> Result<Option<Orientation>> {
    let table = ParityTable::new(g, cap)?;
    let targets: Vec<ClockwiseParity> = table
        .circuits
        .iter()
        .map(|c| j.prescribed(c.edges()))
        .collect::<Result<_>>()?;
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    match table.search(&targets) {
        None => Ok(None),
        Some(mask) => Orientation::from_reversals(g, (0..ids.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i])).map(Some),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{clockwise_parity, DEFAULT_CIRCUIT_CAP as CAP};
    use crate::graph::isomorphic;

    #[test]
    fn known_class_counts() {
        // connected simple graphs on 4 vertices: 6 classes
        let simple4: Vec<_> = small_multigraphs(4, 6, false)
            .into_iter()
            .filter(|g| g.vertex_count() == 4 && g.edges().iter().all(|e| g.multiplicity(e.u, e.v) == 1))
            .collect();
        assert_eq!(simple4.len(), 6);
        // two vertices with up to 3 parallel edges: 3 classes; one vertex: just itself
        assert_eq!(small_multigraphs(2, 3, false).len(), 4);
        // with loops, one vertex and up to 2 loops: 3 classes
        assert_eq!(small_multigraphs(1, 2, true).len(), 3);
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic() {
        let gs = small_multigraphs(4, 5, false);
        for (i, a) in gs.iter().enumerate() {
            assert!(a.is_connected());
            for b in &gs[i + 1..] {
                if a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() {
                    assert!(!isomorphic(a, b).unwrap(), "{a:?} ~ {b:?}");
                }
            }
        }
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let a = random_connected(7, 20, 7..=8, 13);
        let b = random_connected(7, 20, 7..=8, 13);
        assert_eq!(a, b);
        for g in &a {
            assert!(g.is_connected());
            assert!((7..=8).contains(&g.vertex_count()));
            assert!(g.edge_count() <= 13);
            assert!(!g.has_loop());
        }
    }

    #[test]
    fn parity_table_matches_direct_computation() {
        let g = Multigraph::from_pairs(&[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let table = ParityTable::new(&g, CAP).unwrap();
        for mask in 0u32..64 {
            let o = Orientation::from_reversals(&g, (0..6).filter(|i| mask >> i & 1 == 1).map(|i| i + 1)).unwrap();
            for (k, c) in table.circuits.iter().enumerate() {
                assert_eq!(table.parity(k, mask), clockwise_parity(&o, c).unwrap());
            }
        }
        assert!(brute_force_orientation(&g, &ParityAssignment::AllOdd, CAP).unwrap().is_none());
        assert!(brute_force_orientation(&g, &ParityAssignment::AllEven, CAP).unwrap().is_some());
    }
}
