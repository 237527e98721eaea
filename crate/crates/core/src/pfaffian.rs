//! Perfect matchings, alternating circuits and Pfaffian orientations: an
//! orientation in which every alternating circuit is clockwise odd turns
//! matching counting into a determinant.

use std::collections::BTreeSet;

use crate::circuits::{Circuit, ClockwiseParity};
use crate::error::{Error, Result};
use crate::graph::{symmetric_difference, EdgeId, Multigraph, Orientation, VertexId};
use crate::solver::{solve_system, system_for_circuits, Verdict};

/// Default cap on the number of perfect matchings enumerated.
pub const DEFAULT_MATCHING_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PerfectMatching {
    pub edge_ids: Vec<EdgeId>,
}

/// All perfect matchings. Each branch covers the smallest uncovered vertex
/// with its incident edges in id order, so the output order is fixed.
pub fn enumerate_perfect_matchings(g: &Multigraph, cap: usize) -> Result<Vec<PerfectMatching>> {
    let mut out = Vec::new();
    if g.vertex_count() % 2 == 1 {
        return Ok(out);
    }
    let mut covered: BTreeSet<VertexId> = BTreeSet::new();
    let mut chosen = Vec::new();
    match_rec(g, &mut covered, &mut chosen, &mut out, cap)?;
    Ok(out)
}

fn match_rec(
    g: &Multigraph,
    covered: &mut BTreeSet<VertexId>,
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<PerfectMatching>,
    cap: usize,
) -> Result<()> {
    let Some(&v) = g.vertices().iter().find(|v| !covered.contains(v)) else {
        if out.len() == cap {
            return Err(Error::Resource(format!("more than {cap} perfect matchings")));
        }
        let mut ids = chosen.clone();
        ids.sort_unstable();
        out.push(PerfectMatching { edge_ids: ids });
        return Ok(());
    };
    covered.insert(v);
    for &(e, w) in g.incident(v) {
        if w == v || covered.contains(&w) {
            continue;
        }
        covered.insert(w);
        chosen.push(e);
        match_rec(g, covered, chosen, out, cap)?;
        chosen.pop();
        covered.remove(&w);
    }
    covered.remove(&v);
    Ok(())
}

/// Circuits that are the symmetric difference of two perfect matchings,
/// sorted by length and then edge ids.
pub fn alternating_circuits(g: &Multigraph, cap: usize) -> Result<Vec<Circuit>> {
    let ms = enumerate_perfect_matchings(g, cap)?;
    let mut found: BTreeSet<(usize, Vec<EdgeId>)> = BTreeSet::new();
    for (i, a) in ms.iter().enumerate() {
        for b in &ms[i + 1..] {
            let diff = symmetric_difference(&a.edge_ids, &b.edge_ids);
            if Circuit::from_edges(g, diff.iter().copied()).is_ok() {
                found.insert((diff.len(), diff));
            }
        }
    }
    found
        .into_iter()
        .map(|(_, ids)| {
            let c = Circuit::from_edges(g, ids)?;
            debug_assert!(c.is_even());
            Ok(c)
        })
        .collect()
}

/// An orientation making every alternating circuit clockwise odd, or an
/// intractable set of alternating circuits showing none exists.
pub fn find_pfaffian_orientation(g: &Multigraph, cap: usize) -> Result<Verdict> {
    let circuits = alternating_circuits(g, cap)?;
    let targets = vec![ClockwiseParity::Odd; circuits.len()];
    let sys = system_for_circuits(&Orientation::reference(g), circuits, targets)?;
    solve_system(g, &sys)
}

/// Entry (u, v) counts edges oriented u to v minus those oriented v to u.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewAdjacency {
    pub vertices: Vec<VertexId>,
    pub matrix: Vec<Vec<i64>>,
}

pub fn skew_adjacency(g: &Multigraph, o: &Orientation) -> Result<SkewAdjacency> {
    if !o.orients(g) {
        return Err(Error::Input("orientation does not match the graph".into()));
    }
    let n = g.vertex_count();
    let mut matrix = vec![vec![0i64; n]; n];
    for (_, t, h) in o.arcs() {
        if t == h {
            continue;
        }
        let (a, b) = (g.vertex_index(t).unwrap(), g.vertex_index(h).unwrap());
        matrix[a][b] += 1;
        matrix[b][a] -= 1;
    }
    Ok(SkewAdjacency {
        vertices: g.vertices().to_vec(),
        matrix,
    })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i128> {
    let n = m.len();
    let overflow = || Error::Resource("determinant overflows 128-bit integers".into());
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|p| a[i][k].checked_mul(a[k][j]).and_then(|q| p.checked_sub(q)))
                    .ok_or_else(overflow)?;
                a[i][j] = x / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
}

fn exact_sqrt(x: i128) -> Option<u128> {
    if x < 0 {
        return None;
    }
    let x = x as u128;
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    (r * r == x).then_some(r)
}

/// Number of perfect matchings from the determinant of the skew adjacency
/// matrix under a Pfaffian orientation. Under any other orientation the
/// result is still a square root but not the matching count.
pub fn kasteleyn_count(g: &Multigraph, o: &Orientation) -> Result<u128> {
    let skew = skew_adjacency(g, o)?;
    let det = determinant(&skew.matrix)?;
    exact_sqrt(det).ok_or_else(|| {
        Error::Contract(format!("determinant {det} is not a perfect square; orientation is not Pfaffian"))
    })
}

/// Rectangular grid graph with `rows * cols` vertices, numbered row by row
/// from 1.
pub fn grid(rows: u32, cols: u32) -> Multigraph {
    let id = |r: u32, c: u32| r * cols + c + 1;
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Multigraph::from_pairs(&pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::clockwise_parity;

    const CAP: usize = DEFAULT_MATCHING_CAP;

    fn square() -> Multigraph {
        Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 1)])
    }

    fn k33() -> Multigraph {
        let mut pairs = Vec::new();
        for a in 1..=3 {
            for b in 4..=6 {
                pairs.push((a, b));
            }
        }
        Multigraph::from_pairs(&pairs)
    }

    #[test]
    fn matchings() {
        assert_eq!(enumerate_perfect_matchings(&square(), CAP).unwrap().len(), 2);
        assert_eq!(enumerate_perfect_matchings(&grid(2, 3), CAP).unwrap().len(), 3);
        let tri = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 1)]);
        assert!(enumerate_perfect_matchings(&tri, CAP).unwrap().is_empty());
        assert!(matches!(enumerate_perfect_matchings(&grid(4, 4), 5), Err(Error::Resource(_))));
    }

    #[test]
    fn alternating() {
        let alt = alternating_circuits(&square(), CAP).unwrap();
        assert_eq!(alt.len(), 1);
        assert_eq!(alt[0].edges(), &[1, 2, 3, 4]);
        let alt = alternating_circuits(&grid(2, 3), CAP).unwrap();
        assert_eq!(alt.iter().map(Circuit::len).collect::<Vec<_>>(), vec![4, 4, 6]);
        let path = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4)]);
        assert!(alternating_circuits(&path, CAP).unwrap().is_empty());
    }

    #[test]
    fn counts_match_enumeration() {
        for g in [square(), grid(2, 3), grid(4, 4)] {
            let Verdict::Compatible(o) = find_pfaffian_orientation(&g, CAP).unwrap() else {
                panic!("planar grid should be Pfaffian");
            };
            let expected = enumerate_perfect_matchings(&g, CAP).unwrap().len() as u128;
            assert_eq!(kasteleyn_count(&g, &o).unwrap(), expected);
        }
    }

    #[test]
    fn k33_has_no_pfaffian_orientation() {
        let g = k33();
        let alt = alternating_circuits(&g, CAP).unwrap();
        // no orientation makes every alternating circuit clockwise odd
        for mask in 0u32..1 << 9 {
            let o = Orientation::from_reversals(&g, (0..9).filter(|i| mask >> i & 1 == 1).map(|i| i + 1)).unwrap();
            assert!(alt.iter().any(|c| clockwise_parity(&o, c).unwrap().is_even()));
        }
        assert!(matches!(find_pfaffian_orientation(&g, CAP).unwrap(), Verdict::Incompatible(_)));
    }

    #[test]
    fn odd_vertex_count_counts_zero() {
        let tri = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 1)]);
        let Verdict::Compatible(o) = find_pfaffian_orientation(&tri, CAP).unwrap() else {
            panic!()
        };
        assert_eq!(kasteleyn_count(&tri, &o).unwrap(), 0);
    }

    #[test]
    fn parallel_edges_add_up() {
        // digon plus square: 1=2 doubled, 2-3-4-1
        let g = Multigraph::from_pairs(&[(1, 2), (1, 2), (2, 3), (3, 4), (4, 1)]);
        let Verdict::Compatible(o) = find_pfaffian_orientation(&g, CAP).unwrap() else {
            panic!()
        };
        assert_eq!(kasteleyn_count(&g, &o).unwrap(), 3);
        assert_eq!(enumerate_perfect_matchings(&g, CAP).unwrap().len(), 3);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 3]]).unwrap(), 5);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]).unwrap(), -1);
        assert_eq!(determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]).unwrap(), -3);
        assert_eq!(determinant(&[]).unwrap(), 1);
        assert_eq!(exact_sqrt(1296), Some(36));
        assert_eq!(exact_sqrt(-4), None);
        assert_eq!(exact_sqrt(5), None);
    }

    #[test]
    fn non_pfaffian_orientation_is_rejected() {
        let g = square();
        let o = Orientation::from_arcs(&g, [(1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 4, 1)]).unwrap();
        // the directed square is clockwise even: the count comes out wrong
        assert_eq!(kasteleyn_count(&g, &o).unwrap(), 0);
        assert_eq!(enumerate_perfect_matchings(&g, CAP).unwrap().len(), 2);
    }
}
