//! Multigraphs with stable edge identifiers, orientations, contraction and
//! the small structural predicates every other module leans on.
//!
//! Vertex and edge identifiers are small integers. All iteration is in
//! ascending-id order so that every algorithm built on top is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type EdgeId = u32;

/// Largest vertex count accepted by [`isomorphism`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub id: EdgeId,
    /// Smaller endpoint.
    pub u: VertexId,
    /// Larger endpoint (equal to `u` for a loop).
    pub v: VertexId,
}

impl Edge {
    pub fn new(id: EdgeId, a: VertexId, b: VertexId) -> Self {
        Edge {
            id,
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `x`. For a loop this is `x` itself.
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    // incidence[i] lists (edge, other end) for vertices[i]; loops appear once.
    incidence: Vec<Vec<(EdgeId, VertexId)>>,
}

impl Multigraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut list: Vec<Edge> = edges
            .into_iter()
            .map(|(id, a, b)| Edge::new(id, a, b))
            .collect();
        list.sort_by_key(|e| e.id);
        for w in list.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::Input(format!("duplicate edge id {}", w[0].id)));
            }
        }
        for e in &list {
            if !vertices.contains(&e.u) || !vertices.contains(&e.v) {
                return Err(Error::Input(format!(
                    "edge {} has an endpoint outside the vertex set",
                    e.id
                )));
            }
        }
        Ok(Self::build(vertices.into_iter().collect(), list))
    }

    /// Builds a graph from endpoint pairs; edge ids are assigned 1, 2, ...
    /// and the vertex set is the set of endpoints.
    pub fn from_pairs(pairs: &[(VertexId, VertexId)]) -> Self {
        let vertices: BTreeSet<VertexId> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Edge::new(i as EdgeId + 1, a, b))
            .collect();
        Self::build(vertices.into_iter().collect(), edges)
    }

    // Caller guarantees sorted unique vertices, id-sorted edges, endpoints present.
    fn build(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        let mut incidence = vec![Vec::new(); vertices.len()];
        for e in &edges {
            let iu = vertices.binary_search(&e.u).expect("endpoint present");
            incidence[iu].push((e.id, e.v));
            if !e.is_loop() {
                let iv = vertices.binary_search(&e.v).expect("endpoint present");
                incidence[iv].push((e.id, e.u));
            }
        }
        Multigraph {
            vertices,
            edges,
            incidence,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of an edge in [`Multigraph::edges`]; used for bit indexing.
    pub fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edge_index(id).map(|i| &self.edges[i])
    }

    pub(crate) fn edge_or_err(&self, id: EdgeId) -> Result<&Edge> {
        self.edge(id)
            .ok_or_else(|| Error::Input(format!("unknown edge id {id}")))
    }

    /// Incident edges of `v` with their far endpoints, ascending by edge id.
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        match self.vertex_index(v) {
            Some(i) => &self.incidence[i],
            None => &[],
        }
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v)
            .iter()
            .map(|&(_, w)| if w == v { 2 } else { 1 })
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices.iter().map(|&v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.incidence.iter().any(Vec::is_empty)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![self.vertices[start]];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &(_, w) in &self.incidence[i] {
                    let j = self.vertex_index(w).unwrap();
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(w);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// |E| - |V| + (number of components).
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + self.components().len() - self.vertices.len()
    }

    /// Subgraph spanned by an edge set: exactly those edges and their
    /// endpoints. Edge ids are preserved.
    pub fn subgraph(&self, keep: impl IntoIterator<Item = EdgeId>) -> Result<Multigraph> {
        let mut kept = Vec::new();
        let mut ids = BTreeSet::new();
        for id in keep {
            if ids.insert(id) {
                kept.push(*self.edge_or_err(id)?);
            }
        }
        kept.sort_by_key(|e| e.id);
        let vertices: BTreeSet<VertexId> = kept.iter().flat_map(|e| [e.u, e.v]).collect();
        Ok(Self::build(vertices.into_iter().collect(), kept))
    }

    /// Deletes a vertex with its incident edges; other vertices are kept even
    /// when they become isolated.
    pub fn remove_vertex(&self, x: VertexId) -> Multigraph {
        let vertices = self.vertices.iter().copied().filter(|&v| v != x).collect();
        let edges = self.edges.iter().copied().filter(|e| !e.touches(x)).collect();
        Self::build(vertices, edges)
    }

    /// Identifies the endpoints of every contracted edge. Surviving edges
    /// keep their ids; parallel edges and loops created on the way are kept.
    /// Each merged class is represented by its smallest vertex id.
    pub fn contract_edges(
        &self,
        contracted: impl IntoIterator<Item = EdgeId>,
    ) -> Result<(Multigraph, ContractionMap)> {
        let mut removed = BTreeSet::new();
        let mut parent: BTreeMap<VertexId, VertexId> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<VertexId, VertexId>, x: VertexId) -> VertexId {
            let mut root = x;
            while parent[&root] != root {
                root = parent[&root];
            }
            let mut cur = x;
            while parent[&cur] != root {
                let next = parent[&cur];
                parent.insert(cur, root);
                cur = next;
            }
            root
        }
        for id in contracted {
            let e = *self.edge_or_err(id)?;
            removed.insert(id);
            let a = find(&mut parent, e.u);
            let b = find(&mut parent, e.v);
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent.insert(hi, lo);
            }
        }
        let vertex_image: BTreeMap<VertexId, VertexId> = self
            .vertices
            .iter()
            .map(|&v| (v, find(&mut parent, v)))
            .collect();
        let vertices: BTreeSet<VertexId> = vertex_image.values().copied().collect();
        let mut edges = Vec::new();
        let mut surviving_edges = BTreeMap::new();
        for e in &self.edges {
            if removed.contains(&e.id) {
                continue;
            }
            edges.push(Edge::new(e.id, vertex_image[&e.u], vertex_image[&e.v]));
            surviving_edges.insert(e.id, e.id);
        }
        let graph = Self::build(vertices.into_iter().collect(), edges);
        Ok((
            graph,
            ContractionMap {
                vertex_image,
                surviving_edges,
            },
        ))
    }

    /// Two-colours the graph. When that fails an odd circuit is returned as a
    /// sorted edge set (a loop is an odd circuit of length one).
    pub fn bipartition(&self) -> Bipartiteness {
        if let Some(e) = self.edges.iter().find(|e| e.is_loop()) {
            return Bipartiteness::OddCircuit(vec![e.id]);
        }
        let n = self.vertices.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut parent: Vec<Option<(usize, EdgeId)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                for &(eid, w) in &self.incidence[i] {
                    let j = self.vertex_index(w).unwrap();
                    match colour[j] {
                        None => {
                            colour[j] = Some(!colour[i].unwrap());
                            parent[j] = Some((i, eid));
                            depth[j] = depth[i] + 1;
                            queue.push_back(j);
                        }
                        Some(c) if c == colour[i].unwrap() => {
                            // Walk both tree paths up to their meeting point.
                            let mut circuit = vec![eid];
                            let (mut a, mut b) = (i, j);
                            while a != b {
                                if depth[a] >= depth[b] {
                                    let (p, pe) = parent[a].unwrap();
                                    circuit.push(pe);
                                    a = p;
                                } else {
                                    let (p, pe) = parent[b].unwrap();
                                    circuit.push(pe);
                                    b = p;
                                }
                            }
                            circuit.sort_unstable();
                            return Bipartiteness::OddCircuit(circuit);
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let colours = self
            .vertices
            .iter()
            .zip(colour)
            .map(|(&v, c)| (v, c.unwrap()))
            .collect();
        Bipartiteness::Bipartite(colours)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite(_))
    }

    /// True iff the graph is connected and has no cutvertex. A two-vertex
    /// graph counts only when it has at least two parallel edges.
    pub fn is_two_connected(&self) -> bool {
        let non_loop = self.edges.iter().filter(|e| !e.is_loop()).count();
        match self.vertices.len() {
            0 | 1 => return false,
            2 => return non_loop >= 2 && self.is_connected(),
            _ => {}
        }
        if !self.is_connected() {
            return false;
        }
        self.articulation_points().is_empty()
    }

    /// Cutvertices of a connected graph, by lowpoint search.
    pub fn articulation_points(&self) -> Vec<VertexId> {
        let n = self.vertices.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Iterative DFS: (vertex, parent edge, next incidence slot).
            let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(&mut (i, pe, ref mut slot)) = stack.last_mut() {
                if *slot < self.incidence[i].len() {
                    let (eid, w) = self.incidence[i][*slot];
                    *slot += 1;
                    if Some(eid) == pe || w == self.vertices[i] {
                        continue;
                    }
                    let j = self.vertex_index(w).unwrap();
                    if disc[j] == usize::MAX {
                        disc[j] = timer;
                        low[j] = timer;
                        timer += 1;
                        if i == root {
                            root_children += 1;
                        }
                        stack.push((j, Some(eid), 0));
                    } else {
                        low[i] = low[i].min(disc[j]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[i]);
                        if p != root && low[i] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        self.vertices
            .iter()
            .zip(is_cut)
            .filter_map(|(&v, c)| c.then_some(v))
            .collect()
    }

    /// Number of edges joining `a` and `b` (loops when `a == b`).
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        self.incident(a).iter().filter(|&&(_, w)| w == b).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Colour class of every vertex.
    Bipartite(BTreeMap<VertexId, bool>),
    OddCircuit(Vec<EdgeId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionMap {
    pub vertex_image: BTreeMap<VertexId, VertexId>,
    pub surviving_edges: BTreeMap<EdgeId, EdgeId>,
}

/// Tail and head for every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    arcs: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl Orientation {
    /// Every edge directed from its smaller to its larger endpoint.
    pub fn reference(g: &Multigraph) -> Self {
        Orientation {
            arcs: g.edges().iter().map(|e| (e.id, (e.u, e.v))).collect(),
        }
    }

    /// The reference orientation with the listed edges reversed.
    pub fn from_reversals(g: &Multigraph, reversed: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut o = Self::reference(g);
        for id in reversed {
            o.reverse(id)?;
        }
        Ok(o)
    }

    pub fn from_arcs(
        g: &Multigraph,
        arcs: impl IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (id, tail, head) in arcs {
            let e = g.edge_or_err(id)?;
            if !((tail == e.u && head == e.v) || (tail == e.v && head == e.u)) {
                return Err(Error::Input(format!(
                    "arc {tail}->{head} does not match the endpoints of edge {id}"
                )));
            }
            if map.insert(id, (tail, head)).is_some() {
                return Err(Error::Input(format!("edge {id} oriented twice")));
            }
        }
        if map.len() != g.edge_count() {
            return Err(Error::Input("orientation does not cover every edge".into()));
        }
        Ok(Orientation { arcs: map })
    }

    pub fn reverse(&mut self, id: EdgeId) -> Result<()> {
        let arc = self
            .arcs
            .get_mut(&id)
            .ok_or_else(|| Error::Input(format!("unknown edge id {id}")))?;
        *arc = (arc.1, arc.0);
        Ok(())
    }

    pub fn arc(&self, id: EdgeId) -> Option<(VertexId, VertexId)> {
        self.arcs.get(&id).copied()
    }

    pub fn tail(&self, id: EdgeId) -> Option<VertexId> {
        self.arc(id).map(|a| a.0)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.arcs.iter().map(|(&id, &(t, h))| (id, t, h))
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// True when the domain and every arc match the graph's edges.
    pub fn orients(&self, g: &Multigraph) -> bool {
        self.arcs.len() == g.edge_count()
            && g.edges().iter().all(|e| match self.arcs.get(&e.id) {
                Some(&(t, h)) => (t == e.u && h == e.v) || (t == e.v && h == e.u),
                None => false,
            })
    }
}

/// Searches for a vertex bijection `g1 -> g2` preserving edge multiplicities,
/// loops included. Exhaustive with degree-partition pruning.
pub fn isomorphism(
    g1: &Multigraph,
    g2: &Multigraph,
) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    let n = g1.vertex_count();
    if n > MAX_ISOMORPHISM_VERTICES || g2.vertex_count() > MAX_ISOMORPHISM_VERTICES {
        return Err(Error::Capability(format!(
            "isomorphism test supports at most {MAX_ISOMORPHISM_VERTICES} vertices"
        )));
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let profile = |g: &Multigraph| -> Vec<(usize, usize)> {
        g.vertices()
            .iter()
            .map(|&v| (g.degree(v), g.multiplicity(v, v)))
            .collect()
    };
    let (p1, p2) = (profile(g1), profile(g2));
    let (mut s1, mut s2) = (p1.clone(), p2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return Ok(None);
    }
    let matrix = |g: &Multigraph| -> Vec<u32> {
        let mut m = vec![0u32; n * n];
        for e in g.edges() {
            let (a, b) = (g.vertex_index(e.u).unwrap(), g.vertex_index(e.v).unwrap());
            m[a * n + b] += 1;
            if a != b {
                m[b * n + a] += 1;
            }
        }
        m
    };
    let (m1, m2) = (matrix(g1), matrix(g2));

    // Order g1's vertices so each one after the first has a placed neighbour
    // where possible, high degree first.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let best = (0..n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let links = order.iter().filter(|&&j| m1[i * n + j] > 0).count();
                (links, p1[i].0, std::cmp::Reverse(i))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        n: usize,
        order: &[usize],
        p1: &[(usize, usize)],
        p2: &[(usize, usize)],
        m1: &[u32],
        m2: &[u32],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == n {
            return true;
        }
        let a = order[depth];
        for b in 0..n {
            if used[b] || p1[a] != p2[b] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&x| m1[a * n + x] == m2[b * n + image[x]]);
            if !consistent {
                continue;
            }
            image[a] = b;
            used[b] = true;
            if extend(depth + 1, n, order, p1, p2, m1, m2, image, used) {
                return true;
            }
            used[b] = false;
            image[a] = usize::MAX;
        }
        false
    }
    if extend(0, n, &order, &p1, &p2, &m1, &m2, &mut image, &mut used) {
        let map = (0..n)
            .map(|i| (g1.vertices()[i], g2.vertices()[image[i]]))
            .collect();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

pub fn isomorphic(g1: &Multigraph, g2: &Multigraph) -> Result<bool> {
    Ok(isomorphism(g1, g2)?.is_some())
}

/// Sorted, de-duplicated edge set.
pub fn edge_set(ids: impl IntoIterator<Item = EdgeId>) -> Vec<EdgeId> {
    let set: BTreeSet<EdgeId> = ids.into_iter().collect();
    set.into_iter().collect()
}

/// Symmetric difference of sorted edge sets.
pub fn symmetric_difference(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let (sa, sb): (BTreeSet<_>, BTreeSet<_>) = (a.iter().collect(), b.iter().collect());
    sa.symmetric_difference(&sb).map(|&&x| x).collect()
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

    #[test]
    fn subgraph_of_k23_four_circuit() {
        let g = k23();
        // 1-3-2-4-1
        let h = g.subgraph([1, 4, 2, 5]).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 4);
        assert!(h.vertices().iter().all(|&v| h.degree(v) == 2));
    }

    #[test]
    fn subgraph_of_k4_four_cycle() {
        let g = k4();
        // 12, 23, 34, 14
        let h = g.subgraph([1, 4, 6, 3]).unwrap();
        assert_eq!(h.vertices(), &[1, 2, 3, 4]);
        assert_eq!(h.edge_ids().collect::<Vec<_>>(), vec![1, 3, 4, 6]);
        assert!(h.vertices().iter().all(|&v| h.degree(v) == 2));
        assert!(h.is_connected());
    }

    #[test]
    fn subgraph_drops_isolated_vertices() {
        let g = Multigraph::new([1, 2, 3, 9], [(1, 1, 2), (2, 2, 3)]).unwrap();
        let h = g.subgraph(g.edge_ids().collect::<Vec<_>>()).unwrap();
        assert_eq!(h.vertices(), &[1, 2, 3]);
        assert!(g.subgraph([7]).is_err());
    }

    #[test]
    fn contract_triangle_of_k4_gives_e1() {
        let (h, map) = k4().contract_edges([4, 5, 6]).unwrap();
        assert!(isomorphic(&h, &e1()).unwrap());
        assert!(!h.has_loop());
        assert_eq!(map.surviving_edges.len(), 3);
        assert!(!map.surviving_edges.contains_key(&4));
    }

    #[test]
    fn contract_nothing_is_identity() {
        let g = k23();
        let (h, map) = g.contract_edges([]).unwrap();
        assert_eq!(h, g);
        assert!(map.vertex_image.iter().all(|(a, b)| a == b));
        assert!(g.contract_edges([42]).is_err());
    }

    #[test]
    fn contraction_keeps_loops() {
        // A triangle with one chord doubled: contracting two sides makes the
        // third side a loop.
        let g = Multigraph::from_pairs(&[(1, 2), (2, 3), (1, 3)]);
        let (h, _) = g.contract_edges([1, 2]).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert!(h.has_loop());
        assert_eq!(h.degree(1), 2);
    }

    #[test]
    fn bipartite_cases() {
        assert!(k23().is_bipartite());
        assert!(e1().is_bipartite());
        match k4().bipartition() {
            Bipartiteness::OddCircuit(c) => {
                assert_eq!(c.len(), 3);
                let h = k4().subgraph(c).unwrap();
                assert!(h.vertices().iter().all(|&v| h.degree(v) == 2));
            }
            _ => panic!("K4 is not bipartite"),
        }
    }

    #[test]
    fn odd_circuit_witness_in_longer_cycle() {
        let g = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (6, 2)]);
        match g.bipartition() {
            Bipartiteness::OddCircuit(c) => {
                assert_eq!(c.len() % 2, 1);
                let h = g.subgraph(c).unwrap();
                assert!(h.is_connected());
                assert!(h.vertices().iter().all(|&v| h.degree(v) == 2));
            }
            _ => panic!("contains a 5-circuit"),
        }
    }

    #[test]
    fn two_connectivity() {
        assert!(k23().is_two_connected());
        assert!(e1().is_two_connected());
        let bowtie = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]);
        assert!(!bowtie.is_two_connected());
        assert_eq!(bowtie.articulation_points(), vec![3]);
        let path = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4)]);
        assert!(!path.is_two_connected());
        assert!(!Multigraph::from_pairs(&[(1, 2)]).is_two_connected());
    }

    #[test]
    fn isomorphism_cases() {
        let relabeled = Multigraph::from_pairs(&[(7, 1), (7, 2), (7, 3), (9, 1), (9, 2), (9, 3)]);
        let map = isomorphism(&k23(), &relabeled).unwrap().unwrap();
        assert_eq!(map.len(), 5);
        let path = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4)]);
        assert!(!isomorphic(&e1(), &path).unwrap());
        let big = Multigraph::from_pairs(&(1..=13).map(|i| (i, i + 1)).collect::<Vec<_>>());
        assert!(matches!(isomorphic(&big, &big), Err(Error::Capability(_))));
    }

    #[test]
    fn orientation_reversal() {
        let g = k23();
        let mut o = Orientation::reference(&g);
        assert_eq!(o.arc(1), Some((1, 3)));
        o.reverse(1).unwrap();
        assert_eq!(o.arc(1), Some((3, 1)));
        assert!(o.orients(&g));
        assert!(Orientation::from_arcs(&g, [(1, 2, 3)]).is_err());
    }
}
