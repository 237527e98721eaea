//! Circuits, clockwise parity, the cycle space and even-circuit-connectivity.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Orientation, VertexId};

/// Default bound on the number of circuits any single enumeration may produce.
pub const DEFAULT_CIRCUIT_CAP: usize = 100_000;

/// A connected 2-regular edge set together with one traversal sense.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    edges: Vec<EdgeId>,
    // (v_i, e_i): edge e_i is traversed from v_i to v_{i+1}, cyclically.
    sense: Vec<(VertexId, EdgeId)>,
}

impl Circuit {
    /// Validates that `ids` span a circuit of `g` and fixes its canonical
    /// sense: start at the smallest vertex, leave along the smaller edge id.
    pub fn from_edges(g: &Multigraph, ids: impl IntoIterator<Item = EdgeId>) -> Result<Circuit> {
        let set: BTreeSet<EdgeId> = ids.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Input("a circuit needs at least one edge".into()));
        }
        let mut at: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
        for &id in &set {
            let e = g.edge_or_err(id)?;
            at.entry(e.u).or_default().push(id);
            at.entry(e.v).or_default().push(id);
        }
        if at.values().any(|es| es.len() != 2) {
            return Err(Error::Input(format!(
                "edge set {:?} is not 2-regular",
                set.iter().collect::<Vec<_>>()
            )));
        }
        let start = *at.keys().next().unwrap();
        let mut sense = Vec::with_capacity(set.len());
        let first = at[&start].iter().copied().min().unwrap();
        let (mut v, mut e) = (start, first);
        loop {
            sense.push((v, e));
            let next_v = g.edge(e).unwrap().other(v);
            let choices = &at[&next_v];
            let next_e = if choices[0] == e { choices[1] } else { choices[0] };
            v = next_v;
            e = next_e;
            if v == start && (sense.len() == set.len() || e == first) {
                break;
            }
            if sense.len() > set.len() {
                break;
            }
        }
        if sense.len() != set.len() {
            return Err(Error::Input(format!(
                "edge set {:?} is not connected",
                set.iter().collect::<Vec<_>>()
            )));
        }
        Ok(Circuit {
            edges: set.into_iter().collect(),
            sense,
        })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// The stored traversal as (vertex, edge leaving it) pairs.
    pub fn sense(&self) -> &[(VertexId, EdgeId)] {
        &self.sense
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.edges.len() % 2 == 0
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.sense.iter().map(|&(v, _)| v).collect();
        vs.sort_unstable();
        vs
    }

    /// The same circuit traversed the other way round.
    pub fn reversed(&self, g: &Multigraph) -> Circuit {
        let n = self.sense.len();
        let mut sense = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let (v, e) = self.sense[i];
            sense.push((g.edge(e).unwrap().other(v), e));
        }
        Circuit {
            edges: self.edges.clone(),
            sense,
        }
    }

    /// The path along the circuit from `from` to `to` that leaves `from`
    /// in the stored sense; returned as (vertices, edges).
    pub fn walk(&self, g: &Multigraph, from: VertexId, to: VertexId) -> Option<(Vec<VertexId>, Vec<EdgeId>)> {
        let start = self.sense.iter().position(|&(v, _)| v == from)?;
        let n = self.sense.len();
        let mut vs = vec![from];
        let mut es = Vec::new();
        let mut i = start;
        let mut v = from;
        while v != to || es.is_empty() {
            let (_, e) = self.sense[i % n];
            v = g.edge(e).unwrap().other(v);
            vs.push(v);
            es.push(e);
            i += 1;
            if es.len() > n {
                return None;
            }
            if v == to {
                break;
            }
        }
        Some((vs, es))
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.edges.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClockwiseParity {
    Odd,
    Even,
}

impl ClockwiseParity {
    pub fn of_count(n: usize) -> Self {
        if n % 2 == 0 {
            ClockwiseParity::Even
        } else {
            ClockwiseParity::Odd
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            ClockwiseParity::Odd => ClockwiseParity::Even,
            ClockwiseParity::Even => ClockwiseParity::Odd,
        }
    }

    pub fn is_even(self) -> bool {
        self == ClockwiseParity::Even
    }

    pub fn name(self) -> &'static str {
        match self {
            ClockwiseParity::Odd => "odd",
            ClockwiseParity::Even => "even",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "odd" => Some(ClockwiseParity::Odd),
            "even" => Some(ClockwiseParity::Even),
            _ => None,
        }
    }
}

impl fmt::Display for ClockwiseParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parity of the number of edges of `c` directed along its stored sense.
/// Only defined for even circuits; odd ones are refused.
pub fn clockwise_parity(o: &Orientation, c: &Circuit) -> Result<ClockwiseParity> {
    if !c.is_even() {
        return Err(Error::Contract(format!(
            "clockwise parity is only defined for even circuits, got {} of length {}",
            c,
            c.len()
        )));
    }
    let mut agreeing = 0;
    for &(v, e) in c.sense() {
        let tail = o
            .tail(e)
            .ok_or_else(|| Error::Input(format!("orientation misses edge {e}")))?;
        if tail == v {
            agreeing += 1;
        }
    }
    Ok(ClockwiseParity::of_count(agreeing))
}

/// All circuits of `g`, each once, sorted by length then by edge ids.
pub fn enumerate_circuits(g: &Multigraph, cap: usize) -> Result<Vec<Circuit>> {
    let sets = circuit_edge_sets(g, cap, false)?;
    sets.into_iter().map(|s| Circuit::from_edges(g, s)).collect()
}

/// The even circuits of `g`, in the same order as [`enumerate_circuits`].
pub fn even_circuits(g: &Multigraph, cap: usize) -> Result<Vec<Circuit>> {
    let sets = circuit_edge_sets(g, cap, true)?;
    sets.into_iter().map(|s| Circuit::from_edges(g, s)).collect()
}

// Backtracking from each start edge s over edges with larger index only, so
// every circuit is produced exactly once (from its smallest edge).
fn circuit_edge_sets(g: &Multigraph, cap: usize, even_only: bool) -> Result<Vec<Vec<EdgeId>>> {
    let edges = g.edges();
    let n = g.vertex_count();
    let index_of = |v: VertexId| g.vertex_index(v).unwrap();
    // adjacency by vertex index: (edge index, neighbour index), non-loops only
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (k, e) in edges.iter().enumerate() {
        if !e.is_loop() {
            adj[index_of(e.u)].push((k, index_of(e.v)));
            adj[index_of(e.v)].push((k, index_of(e.u)));
        }
    }
    let mut found: Vec<Vec<EdgeId>> = Vec::new();
    let mut produced = 0usize;
    let overflow = |cap: usize| {
        Error::Resource(format!("more than {cap} circuits (raise the circuit cap)"))
    };
    for (s, e) in edges.iter().enumerate() {
        if e.is_loop() {
            produced += 1;
            if produced > cap {
                return Err(overflow(cap));
            }
            if !even_only {
                found.push(vec![e.id]);
            }
            continue;
        }
        let target = index_of(e.u);
        let origin = index_of(e.v);
        let mut on_path = vec![false; n];
        on_path[origin] = true;
        on_path[target] = true;
        let mut path: Vec<usize> = vec![s];
        // explicit DFS stack of (vertex, next adjacency slot)
        let mut stack: Vec<(usize, usize)> = vec![(origin, 0)];
        while let Some(top) = stack.last_mut() {
            let (x, slot) = *top;
            if slot >= adj[x].len() {
                stack.pop();
                if !stack.is_empty() {
                    on_path[x] = false;
                    path.pop();
                }
                continue;
            }
            top.1 += 1;
            let (k, y) = adj[x][slot];
            if k <= s {
                continue;
            }
            if y == target {
                produced += 1;
                if produced > cap {
                    return Err(overflow(cap));
                }
                let len = path.len() + 1;
                if !even_only || len % 2 == 0 {
                    let mut ids: Vec<EdgeId> = path.iter().map(|&i| edges[i].id).collect();
                    ids.push(edges[k].id);
                    ids.sort_unstable();
                    found.push(ids);
                }
            } else if !on_path[y] {
                on_path[y] = true;
                path.push(k);
                stack.push((y, 0));
            }
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

/// Fundamental circuits of a BFS spanning tree, one per non-tree edge in
/// ascending id order. Each is a sorted edge set.
pub fn cycle_space_basis(g: &Multigraph) -> Result<Vec<Vec<EdgeId>>> {
    if !g.is_connected() {
        return Err(Error::Input("cycle space basis needs a connected graph".into()));
    }
    let mut basis = Vec::new();
    let Some(&root) = g.vertices().first() else {
        return Ok(basis);
    };
    let mut parent: BTreeMap<VertexId, (VertexId, EdgeId)> = BTreeMap::new();
    let mut depth: BTreeMap<VertexId, usize> = BTreeMap::from([(root, 0)]);
    let mut tree_edges = BTreeSet::new();
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &(e, y) in g.incident(x) {
            if !depth.contains_key(&y) {
                depth.insert(y, depth[&x] + 1);
                parent.insert(y, (x, e));
                tree_edges.insert(e);
                queue.push_back(y);
            }
        }
    }
    for e in g.edges() {
        if tree_edges.contains(&e.id) {
            continue;
        }
        let mut circuit = vec![e.id];
        let (mut a, mut b) = (e.u, e.v);
        while a != b {
            if depth[&a] >= depth[&b] {
                let (p, pe) = parent[&a];
                circuit.push(pe);
                a = p;
            } else {
                let (p, pe) = parent[&b];
                circuit.push(pe);
                b = p;
            }
        }
        circuit.sort_unstable();
        basis.push(circuit);
    }
    Ok(basis)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvenCircuitConnectivity {
    Connected,
    /// A bipartition of the edge set that no even circuit crosses.
    Split { part: Vec<EdgeId>, rest: Vec<EdgeId> },
}

impl EvenCircuitConnectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, EvenCircuitConnectivity::Connected)
    }
}

/// Checks that every bipartition of the edges is crossed by an even circuit.
///
/// Equivalent form used here: every edge lies on an even circuit and the
/// relation "share an even circuit" connects all edges. A graph without
/// any even circuit is never even-circuit-connected.
pub fn even_circuit_connectivity(g: &Multigraph, cap: usize) -> Result<EvenCircuitConnectivity> {
    if g.has_isolated_vertex() {
        return Err(Error::Contract(
            "even-circuit-connectivity is defined for graphs without isolated vertices".into(),
        ));
    }
    let circuits = even_circuits(g, cap)?;
    Ok(connectivity_from_circuits(g, circuits.iter().map(Circuit::edges)))
}

pub(crate) fn connectivity_from_circuits<'a>(
    g: &Multigraph,
    circuits: impl Iterator<Item = &'a [EdgeId]>,
) -> EvenCircuitConnectivity {
    let m = g.edge_count();
    let all: Vec<EdgeId> = g.edge_ids().collect();
    if m == 0 {
        return EvenCircuitConnectivity::Split {
            part: Vec::new(),
            rest: Vec::new(),
        };
    }
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let n = p[c];
            p[c] = r;
            c = n;
        }
        r
    }
    let mut covered = vec![false; m];
    for c in circuits {
        let idx: Vec<usize> = c.iter().map(|&e| g.edge_index(e).unwrap()).collect();
        for &i in &idx {
            covered[i] = true;
        }
        for w in idx.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    if let Some(i) = covered.iter().position(|c| !c) {
        let part = vec![all[i]];
        let rest = all.iter().copied().filter(|&e| e != all[i]).collect();
        return EvenCircuitConnectivity::Split { part, rest };
    }
    let root = find(&mut parent, 0);
    let (mut part, mut rest) = (Vec::new(), Vec::new());
    for i in 0..m {
        if find(&mut parent, i) == root {
            part.push(all[i]);
        } else {
            rest.push(all[i]);
        }
    }
    if rest.is_empty() {
        EvenCircuitConnectivity::Connected
    } else {
        EvenCircuitConnectivity::Split { part, rest }
    }
}

pub fn is_even_circuit_connected(g: &Multigraph, cap: usize) -> Result<bool> {
    Ok(even_circuit_connectivity(g, cap)?.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Multigraph {
        Multigraph::from_pairs(&[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    }

    fn k4() -> Multigraph {
        Multigraph::from_pairs(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    }

    fn e1() -> Multigraph {
        Multigraph::from_pairs(&[(1, 2), (1, 2), (1, 2)])
    }

    fn cycle(n: u32) -> Multigraph {
        Multigraph::from_pairs(&(1..=n).map(|i| (i, i % n + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn circuit_counts() {
        let c = enumerate_circuits(&k23(), DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|c| c.len() == 4));
        let c = enumerate_circuits(&e1(), DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|c| c.len() == 2));
        let c = enumerate_circuits(&k4(), DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(c.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn even_circuit_filter() {
        let c = even_circuits(&k4(), DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(c.len(), 3);
        assert!(even_circuits(&cycle(3), DEFAULT_CIRCUIT_CAP).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate_circuits(&k4(), 5).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn loops_are_circuits_of_length_one() {
        let g = Multigraph::from_pairs(&[(1, 1), (1, 2), (1, 2)]);
        let c = enumerate_circuits(&g, 10).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].len(), 1);
        assert_eq!(c[0].sense(), &[(1, 1)]);
    }

    #[test]
    fn canonical_sense() {
        let g = cycle(4);
        let c = Circuit::from_edges(&g, [1, 2, 3, 4]).unwrap();
        // start at 1, leave along edge 1 (1-2)
        assert_eq!(c.sense(), &[(1, 1), (2, 2), (3, 3), (4, 4)]);
        assert!(Circuit::from_edges(&g, [1, 2]).is_err());
    }

    #[test]
    fn parity_examples() {
        let digon = Multigraph::from_pairs(&[(1, 2), (1, 2)]);
        let c = Circuit::from_edges(&digon, [1, 2]).unwrap();
        let o = Orientation::reference(&digon);
        assert_eq!(clockwise_parity(&o, &c).unwrap(), ClockwiseParity::Odd);

        let g = cycle(4);
        let c = Circuit::from_edges(&g, [1, 2, 3, 4]).unwrap();
        let directed = Orientation::from_arcs(&g, [(1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 4, 1)]).unwrap();
        assert_eq!(clockwise_parity(&directed, &c).unwrap(), ClockwiseParity::Even);
        let mut one_back = directed.clone();
        one_back.reverse(3).unwrap();
        assert_eq!(clockwise_parity(&one_back, &c).unwrap(), ClockwiseParity::Odd);
        assert_eq!(clockwise_parity(&directed, &c.reversed(&g)).unwrap(), ClockwiseParity::Even);

        let t = cycle(3);
        let odd = Circuit::from_edges(&t, [1, 2, 3]).unwrap();
        assert!(matches!(
            clockwise_parity(&Orientation::reference(&t), &odd),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn basis_sizes() {
        let tree = Multigraph::from_pairs(&[(1, 2), (2, 3), (2, 4)]);
        assert!(cycle_space_basis(&tree).unwrap().is_empty());
        assert_eq!(cycle_space_basis(&k23()).unwrap().len(), 2);
        assert_eq!(cycle_space_basis(&k4()).unwrap().len(), 3);
        let split = Multigraph::from_pairs(&[(1, 2), (3, 4)]);
        assert!(cycle_space_basis(&split).is_err());
    }

    #[test]
    fn even_circuit_connectivity_examples() {
        assert!(is_even_circuit_connected(&k23(), DEFAULT_CIRCUIT_CAP).unwrap());
        assert!(!is_even_circuit_connected(&cycle(3), DEFAULT_CIRCUIT_CAP).unwrap());
        let two_digons = Multigraph::from_pairs(&[(1, 2), (1, 2), (2, 3), (2, 3)]);
        assert!(!is_even_circuit_connected(&two_digons, DEFAULT_CIRCUIT_CAP).unwrap());
        assert!(!is_even_circuit_connected(&Multigraph::from_pairs(&[(1, 2)]), 10).unwrap());
        assert!(is_even_circuit_connected(&cycle(4), 10).unwrap());
    }

    #[test]
    fn walk_along_circuit() {
        let g = cycle(6);
        let c = Circuit::from_edges(&g, 1..=6).unwrap();
        let (vs, es) = c.walk(&g, 2, 5).unwrap();
        assert_eq!(vs, vec![2, 3, 4, 5]);
        assert_eq!(es, vec![2, 3, 4]);
    }
}
