//! Arc decompositions of even-circuit-connected graphs: a growing chain of
//! even-circuit-connected subgraphs, starting from an even circuit and
//! adding one or two arcs at a time, with at most one two-arc step placed
//! first.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::circuits::{
    connectivity_from_circuits, even_circuit_connectivity, even_circuits, Circuit, EvenCircuitConnectivity,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// A path given by its vertex sequence and the edges between them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn reversed(&self) -> Path {
        Path {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// The part of the path between two of its vertices, in path order
    /// from `a` to `b`.
    pub fn between(&self, a: VertexId, b: VertexId) -> Option<Path> {
        let (i, j) = (self.position(a)?, self.position(b)?);
        let sub = if i <= j {
            Path {
                vertices: self.vertices[i..=j].to_vec(),
                edges: self.edges[i..j].to_vec(),
            }
        } else {
            self.between(b, a)?.reversed()
        };
        Some(sub)
    }
}

/// Vertex-disjoint paths from `s_set` to `t_set` with no inner vertex in
/// either set, found by unit-capacity max flow on the vertex-split graph.
/// A vertex in both sets gives a path without edges. Returns `None` when
/// fewer than `n` such paths exist.
pub fn disjoint_paths(
    g: &Multigraph,
    s_set: &BTreeSet<VertexId>,
    t_set: &BTreeSet<VertexId>,
    n: usize,
) -> Option<Vec<Path>> {
    let nv = g.vertex_count();
    // node 2i = in(v), 2i+1 = out(v), then source and sink
    let (src, sink) = (2 * nv, 2 * nv + 1);
    let mut net = FlowNet::new(2 * nv + 2);
    for (i, &v) in g.vertices().iter().enumerate() {
        net.add(2 * i, 2 * i + 1, None);
        if s_set.contains(&v) {
            net.add(src, 2 * i, None);
        }
        if t_set.contains(&v) {
            net.add(2 * i + 1, sink, None);
        }
    }
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        let (a, b) = (g.vertex_index(e.u).unwrap(), g.vertex_index(e.v).unwrap());
        for (x, y, xv, yv) in [(a, b, e.u, e.v), (b, a, e.v, e.u)] {
            // paths leave S and enter T but never pass through them
            if t_set.contains(&xv) || s_set.contains(&yv) {
                continue;
            }
            net.add(2 * x + 1, 2 * y, Some(e.id));
        }
    }
    let mut flow = 0;
    while flow < n && net.augment(src, sink) {
        flow += 1;
    }
    if flow < n {
        return None;
    }
    let mut paths = Vec::new();
    for first in net.used_out(src) {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut node = first;
        loop {
            let v = g.vertices()[node / 2];
            vertices.push(v);
            // in -> out
            let out = node + 1;
            let next = net.used_out_arcs(out).into_iter().next().unwrap();
            if next.0 == sink {
                break;
            }
            edges.push(next.1.unwrap());
            node = next.0;
        }
        paths.push(Path { vertices, edges });
    }
    paths.sort();
    Some(paths)
}

struct FlowArc {
    to: usize,
    cap: i32,
    rev: usize,
    edge: Option<EdgeId>,
    forward: bool,
}

struct FlowNet {
    adj: Vec<Vec<FlowArc>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet {
            adj: (0..n).map(|_| Vec::new()).collect(),
        }
    }

    fn add(&mut self, a: usize, b: usize, edge: Option<EdgeId>) {
        let (ra, rb) = (self.adj[b].len(), self.adj[a].len());
        self.adj[a].push(FlowArc { to: b, cap: 1, rev: ra, edge, forward: true });
        self.adj[b].push(FlowArc { to: a, cap: 0, rev: rb, edge, forward: false });
    }

    // One BFS augmentation along a shortest residual path.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
        let mut queue = VecDeque::from([s]);
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for (k, arc) in self.adj[u].iter().enumerate() {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    prev[arc.to] = Some((u, k));
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while let Some((u, k)) = prev[v] {
            self.adj[u][k].cap -= 1;
            let rev = self.adj[u][k].rev;
            self.adj[v][rev].cap += 1;
            v = u;
        }
        true
    }

    fn used_out_arcs(&self, u: usize) -> Vec<(usize, Option<EdgeId>)> {
        self.adj[u]
            .iter()
            .filter(|a| a.forward && a.cap == 0)
            .map(|a| (a.to, a.edge))
            .collect()
    }

    fn used_out(&self, u: usize) -> Vec<usize> {
        self.used_out_arcs(u).into_iter().map(|a| a.0).collect()
    }
}

/// An adjoined even circuit with its arcs relative to the previous stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjunction {
    pub circuit: Circuit,
    pub arcs: Vec<Path>,
}

impl Adjunction {
    pub fn new_edges(&self) -> Vec<EdgeId> {
        let mut e: Vec<EdgeId> = self.arcs.iter().flat_map(|a| a.edges.iter().copied()).collect();
        e.sort_unstable();
        e
    }
}

/// How a decomposition was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Greedy growth; any two-arc step happened first.
    Greedy,
    /// A late two-arc step was moved to the front by rebuilding the first
    /// two stages from its arcs.
    Surgery,
    /// The first two stages were found by searching pairs of even circuits.
    PairSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDecomposition {
    /// Edge sets of the stages, each sorted.
    pub stages: Vec<Vec<EdgeId>>,
    /// `adjunctions[i - 1]` builds stage `i` from stage `i - 1`.
    pub adjunctions: Vec<Adjunction>,
    pub construction: Construction,
}

impl ArcDecomposition {
    pub fn two_arc_stages(&self) -> Vec<usize> {
        self.adjunctions
            .iter()
            .enumerate()
            .filter(|(_, a)| a.arcs.len() == 2)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// The arcs of `c` relative to the edge set `h`: maximal stretches of `c`
/// outside `h`, cut at vertices of `h`. `None` if `c` shares no edge with `h`.
pub fn circuit_arcs(g: &Multigraph, c: &Circuit, h: &BTreeSet<EdgeId>) -> Option<Vec<Path>> {
    let vh: BTreeSet<VertexId> = h
        .iter()
        .filter_map(|&e| g.edge(e))
        .flat_map(|e| [e.u, e.v])
        .collect();
    let sense = c.sense();
    let start = sense.iter().position(|(_, e)| h.contains(e))?;
    let k = sense.len();
    let mut arcs = Vec::new();
    let mut current: Option<Path> = None;
    for step in 1..=k {
        let (v, e) = sense[(start + step) % k];
        // v is the tail of e in traversal order
        if let Some(mut p) = current.take() {
            p.vertices.push(v);
            if vh.contains(&v) {
                arcs.push(p);
            } else {
                current = Some(p);
            }
        }
        if !h.contains(&e) {
            let mut p = current.take().unwrap_or_else(|| Path::trivial(v));
            p.edges.push(e);
            current = Some(p);
        }
    }
    debug_assert!(current.is_none());
    arcs.sort();
    Some(arcs)
}

// Even circuits inside an edge set.
fn circuits_within<'a>(evens: &'a [Circuit], set: &'a BTreeSet<EdgeId>) -> impl Iterator<Item = &'a Circuit> + 'a {
    evens.iter().filter(move |c| c.edges().iter().all(|e| set.contains(e)))
}

fn is_ecc_within(g: &Multigraph, evens: &[Circuit], set: &BTreeSet<EdgeId>) -> Result<bool> {
    let sub = g.subgraph(set.iter().copied())?;
    let conn = connectivity_from_circuits(&sub, circuits_within(evens, set).map(|c| c.edges()));
    Ok(conn.is_connected())
}

// Every even circuit of the grown stage touching the new edges contains all of them.
fn new_edges_inseparable(evens: &[Circuit], grown: &BTreeSet<EdgeId>, new: &BTreeSet<EdgeId>) -> bool {
    circuits_within(evens, grown).all(|c| {
        let hit = c.edges().iter().filter(|e| new.contains(e)).count();
        hit == 0 || hit == new.len()
    })
}

/// An even circuit growing `h` by one or two arcs into a larger
/// even-circuit-connected stage in which the new edges are inseparable.
/// Single-arc candidates are preferred; within each kind the shortest
/// circuit in enumeration order wins. `Ok(None)` if none exists.
pub fn find_adjunction(g: &Multigraph, h: &BTreeSet<EdgeId>, evens: &[Circuit]) -> Result<Option<Adjunction>> {
    if h.is_empty() || h.len() == g.edge_count() || h.iter().any(|&e| g.edge(e).is_none()) {
        return Err(Error::Contract("stage must be a non-empty proper edge subset".into()));
    }
    find_adjunction_with(g, h, evens, 2)
}

fn find_adjunction_with(
    g: &Multigraph,
    h: &BTreeSet<EdgeId>,
    evens: &[Circuit],
    max_arcs: usize,
) -> Result<Option<Adjunction>> {
    let mut two_arc: Option<Adjunction> = None;
    for c in evens {
        if c.edges().iter().all(|e| h.contains(e)) {
            continue;
        }
        let Some(arcs) = circuit_arcs(g, c, h) else {
            continue;
        };
        if arcs.len() > max_arcs || (arcs.len() == 2 && two_arc.is_some()) {
            continue;
        }
        let new: BTreeSet<EdgeId> = c.edges().iter().copied().filter(|e| !h.contains(e)).collect();
        let grown: BTreeSet<EdgeId> = h.union(&new).copied().collect();
        if !is_ecc_within(g, evens, &grown)? || !new_edges_inseparable(evens, &grown, &new) {
            continue;
        }
        let adj = Adjunction { circuit: c.clone(), arcs };
        if adj.arcs.len() == 1 {
            return Ok(Some(adj));
        }
        two_arc = Some(adj);
    }
    Ok(two_arc)
}

fn grow(
    g: &Multigraph,
    evens: &[Circuit],
    mut stages: Vec<BTreeSet<EdgeId>>,
    mut adjunctions: Vec<Adjunction>,
    max_arcs: usize,
) -> Result<Option<(Vec<BTreeSet<EdgeId>>, Vec<Adjunction>)>> {
    loop {
        let h = stages.last().unwrap();
        if h.len() == g.edge_count() {
            return Ok(Some((stages, adjunctions)));
        }
        let allowed = if adjunctions.iter().any(|a| a.arcs.len() == 2) { 1 } else { max_arcs };
        match find_adjunction_with(g, h, evens, allowed)? {
            None => return Ok(None),
            Some(adj) => {
                let mut next = h.clone();
                next.extend(adj.circuit.edges().iter().copied());
                stages.push(next);
                adjunctions.push(adj);
            }
        }
    }
}

fn finish(stages: Vec<BTreeSet<EdgeId>>, adjunctions: Vec<Adjunction>, construction: Construction) -> ArcDecomposition {
    ArcDecomposition {
        stages: stages.into_iter().map(|s| s.into_iter().collect()).collect(),
        adjunctions,
        construction,
    }
}

// First two stages from a pair of even circuits, if `d` is a valid two-arc
// adjunction onto `c`.
fn two_stage_start(
    g: &Multigraph,
    evens: &[Circuit],
    c: &Circuit,
    d: &Circuit,
) -> Result<Option<(Vec<BTreeSet<EdgeId>>, Vec<Adjunction>)>> {
    let g0: BTreeSet<EdgeId> = c.edges().iter().copied().collect();
    let Some(arcs) = circuit_arcs(g, d, &g0) else {
        return Ok(None);
    };
    if arcs.len() != 2 {
        return Ok(None);
    }
    let new: BTreeSet<EdgeId> = d.edges().iter().copied().filter(|e| !g0.contains(e)).collect();
    let g1: BTreeSet<EdgeId> = g0.union(&new).copied().collect();
    let sub = g.subgraph(g1.iter().copied())?;
    if sub.is_bipartite() || !is_ecc_within(g, evens, &g1)? || !new_edges_inseparable(evens, &g1, &new) {
        return Ok(None);
    }
    Ok(Some((vec![g0, g1], vec![Adjunction { circuit: d.clone(), arcs }])))
}

fn as_circuit(g: &Multigraph, edges: impl IntoIterator<Item = EdgeId>) -> Option<Circuit> {
    let c = Circuit::from_edges(g, edges).ok()?;
    c.is_even().then_some(c)
}

fn set_of(p: &Path) -> BTreeSet<VertexId> {
    p.vertices.iter().copied().collect()
}

// Rebuilds the first two stages from a late two-arc adjunction with arcs
// `p`, `q` onto the bipartite stage `h`.
fn surgery(g: &Multigraph, h: &BTreeSet<EdgeId>, p: &Path, q: &Path) -> Result<Option<(Circuit, Circuit)>> {
    let hg = g.subgraph(h.iter().copied())?;
    let (w, x, y, z) = (p.start(), p.end(), q.start(), q.end());
    let distinct: BTreeSet<VertexId> = [w, x, y, z].into_iter().collect();
    if distinct.len() == 4 {
        let Some(rs) = disjoint_paths(&hg, &[w, x].into(), &[y, z].into(), 2) else {
            return Ok(None);
        };
        let r = rs.iter().find(|r| r.start() == w).unwrap().clone();
        let s = rs.iter().find(|r| r.start() == x).unwrap().clone();
        // make R end at y and S at z
        let q = if r.end() == y { q.clone() } else { q.reversed() };
        let y = r.end();
        let Some(tu) = disjoint_paths(&hg, &set_of(&r), &set_of(&s), 2) else {
            return Ok(None);
        };
        let (mut t, mut u) = (tu[0].clone(), tu[1].clone());
        if r.position(u.start()) < r.position(t.start()) {
            std::mem::swap(&mut t, &mut u);
        }
        let (a, b, c, d) = (t.start(), t.end(), u.start(), u.end());
        let c_edges = r.between(c, a).unwrap().edges.into_iter()
            .chain(t.edges.iter().copied())
            .chain(s.between(b, d).unwrap().edges)
            .chain(u.edges.iter().copied());
        let d_edges = p.edges.iter().chain(&r.edges).chain(&q.edges).chain(&s.edges).copied();
        let _ = y;
        return Ok(as_circuit(g, c_edges).zip(as_circuit(g, d_edges)));
    }
    // exactly one shared end: relabel so that P runs w..x and Q runs x..z
    let (p, q) = if x == y {
        (p.clone(), q.clone())
    } else if x == z {
        (p.clone(), q.reversed())
    } else if w == y {
        (p.reversed(), q.clone())
    } else if w == z {
        (p.reversed(), q.reversed())
    } else {
        return Ok(None);
    };
    let (w, x, z) = (p.start(), p.end(), q.end());
    if w == z {
        return Ok(None);
    }
    let edge_to = |t: VertexId| hg.incident(x).iter().find(|&&(_, o)| o == t).map(|&(e, _)| e);
    let mut options: Vec<(Path, Path, Path, Path)> = Vec::new();
    if let (Some(e), Some(f)) = (edge_to(w), edge_to(z)) {
        let r = Path { vertices: vec![w, x], edges: vec![e] };
        let s = Path { vertices: vec![x, z], edges: vec![f] };
        options.push((p.clone(), q.clone(), r, s));
    } else {
        for &(gid, v) in hg.incident(x) {
            if [w, x, z].contains(&v) {
                continue;
            }
            let Some(rs) = disjoint_paths(&hg, &[v, x].into(), &[w, z].into(), 2) else {
                continue;
            };
            let r1 = rs.iter().find(|r| r.start() == v).unwrap();
            let s = rs.iter().find(|r| r.start() == x).unwrap().clone();
            if r1.vertices.contains(&x) {
                continue;
            }
            // R runs from its far end through v to x
            let mut r = r1.reversed();
            r.vertices.push(x);
            r.edges.push(gid);
            // orient the arcs so that R meets P and S meets Q
            let (pp, qq) = if r.start() == w { (p.clone(), q.clone()) } else { (q.reversed(), p.reversed()) };
            options.push((pp, qq, r, s));
            break;
        }
    }
    for (p, q, r, s) in options {
        let (w, z) = (p.start(), q.end());
        let without_x = hg.remove_vertex(x);
        let vr: BTreeSet<VertexId> = r.vertices.iter().copied().filter(|&v| v != x).collect();
        let vs: BTreeSet<VertexId> = s.vertices.iter().copied().filter(|&v| v != x).collect();
        let Some(ts) = disjoint_paths(&without_x, &vr, &vs, 1) else {
            continue;
        };
        let t = &ts[0];
        let (a, b) = (t.start(), t.end());
        let c_edges = r.between(a, x).unwrap().edges.into_iter()
            .chain(s.between(x, b).unwrap().edges)
            .chain(t.edges.iter().copied());
        let d_edges = p.edges.iter().copied()
            .chain(r.between(w, a).unwrap().edges)
            .chain(t.edges.iter().copied())
            .chain(s.between(b, z).unwrap().edges)
            .chain(q.edges.iter().copied());
        if let Some(pair) = as_circuit(g, c_edges).zip(as_circuit(g, d_edges)) {
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

/// Decomposes an even-circuit-connected graph. Bipartite graphs get only
/// single-arc steps; otherwise the one two-arc step is stage 1.
pub fn decompose(g: &Multigraph, cap: usize) -> Result<ArcDecomposition> {
    if let EvenCircuitConnectivity::Split { part, rest } = even_circuit_connectivity(g, cap)? {
        return Err(Error::Input(format!(
            "graph is not even-circuit-connected: no even circuit meets both {part:?} and {rest:?}"
        )));
    }
    let evens = even_circuits(g, cap)?;
    let first = evens[0].clone();
    let g0: BTreeSet<EdgeId> = first.edges().iter().copied().collect();
    let Some((stages, adjunctions)) = grow(g, &evens, vec![g0], Vec::new(), 2)? else {
        return pair_search(g, &evens);
    };
    let late = adjunctions.iter().position(|a| a.arcs.len() == 2).filter(|&i| i > 0);
    let Some(i) = late else {
        return Ok(finish(stages, adjunctions, Construction::Greedy));
    };
    let arcs = &adjunctions[i].arcs;
    if let Some((c, d)) = surgery(g, &stages[i], &arcs[0], &arcs[1])? {
        if let Some((s, a)) = two_stage_start(g, &evens, &c, &d)? {
            if let Some((s, a)) = grow(g, &evens, s, a, 1)? {
                return Ok(finish(s, a, Construction::Surgery));
            }
        }
    }
    pair_search(g, &evens)
}

fn pair_search(g: &Multigraph, evens: &[Circuit]) -> Result<ArcDecomposition> {
    for c in evens {
        for d in evens {
            if c == d {
                continue;
            }
            if let Some((s, a)) = two_stage_start(g, evens, c, d)? {
                if let Some((s, a)) = grow(g, evens, s, a, 1)? {
                    return Ok(finish(s, a, Construction::PairSearch));
                }
            }
        }
    }
    Err(Error::Contract("no arc decomposition found".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("decomposition has no stages")]
    Empty,
    #[error("stage {0} uses edges outside the graph")]
    ForeignEdges(usize),
    #[error("EG0 is not an even circuit")]
    FirstStageNotEvenCircuit,
    #[error("last stage is not the whole graph")]
    Incomplete,
    #[error("stage {0} does not strictly contain the previous stage")]
    NotNested(usize),
    #[error("stage {0} is not even-circuit-connected")]
    NotEvenCircuitConnected(usize),
    #[error("expected {stages} adjunctions, found {adjunctions}")]
    AdjunctionCount { stages: usize, adjunctions: usize },
    #[error("adjoined circuit of stage {0} is not an even circuit of the graph")]
    BadCircuit(usize),
    #[error("adjoined circuit of stage {0} does not account for the new edges")]
    NewEdgesNotCovered(usize),
    #[error("adjoined circuit of stage {0} shares no edge with the previous stage")]
    DisjointFromPrevious(usize),
    #[error("stage {stage} adjoins {arcs} arcs")]
    ArcCount { stage: usize, arcs: usize },
    #[error("recorded arcs of stage {0} differ from the recomputed ones")]
    ArcsMismatch(usize),
    #[error("even circuit {circuit} of stage {stage} meets but does not contain the new edges")]
    PartialContainment { stage: usize, circuit: String },
    #[error("two-arc adjunction at stage {0}; only stage 1 may have two arcs")]
    LateTwoArc(usize),
    #[error("circuit enumeration failed: {0}")]
    Enumeration(String),
}

/// Rechecks every decomposition invariant by enumeration; returns the first
/// violation found.
pub fn validate(g: &Multigraph, d: &ArcDecomposition, cap: usize) -> std::result::Result<(), Violation> {
    let evens = even_circuits(g, cap).map_err(|e| Violation::Enumeration(e.to_string()))?;
    let stages: Vec<BTreeSet<EdgeId>> = d.stages.iter().map(|s| s.iter().copied().collect()).collect();
    let first = stages.first().ok_or(Violation::Empty)?;
    for (i, s) in stages.iter().enumerate() {
        if s.iter().any(|&e| g.edge(e).is_none()) {
            return Err(Violation::ForeignEdges(i));
        }
    }
    match Circuit::from_edges(g, first.iter().copied()) {
        Ok(c) if c.is_even() => {}
        _ => return Err(Violation::FirstStageNotEvenCircuit),
    }
    if stages.last().unwrap().len() != g.edge_count() {
        return Err(Violation::Incomplete);
    }
    if d.adjunctions.len() + 1 != stages.len() {
        return Err(Violation::AdjunctionCount {
            stages: stages.len(),
            adjunctions: d.adjunctions.len(),
        });
    }
    let by_key: BTreeMap<&[EdgeId], &Circuit> = evens.iter().map(|c| (c.edges(), c)).collect();
    for i in 1..stages.len() {
        let (prev, cur) = (&stages[i - 1], &stages[i]);
        if !prev.is_subset(cur) || prev == cur {
            return Err(Violation::NotNested(i));
        }
        let adj = &d.adjunctions[i - 1];
        if !by_key.contains_key(adj.circuit.edges()) {
            return Err(Violation::BadCircuit(i));
        }
        let new: BTreeSet<EdgeId> = cur.difference(prev).copied().collect();
        let outside: BTreeSet<EdgeId> = adj.circuit.edges().iter().copied().filter(|e| !prev.contains(e)).collect();
        if outside != new {
            return Err(Violation::NewEdgesNotCovered(i));
        }
        let Some(arcs) = circuit_arcs(g, &adj.circuit, prev) else {
            return Err(Violation::DisjointFromPrevious(i));
        };
        if !(1..=2).contains(&arcs.len()) {
            return Err(Violation::ArcCount { stage: i, arcs: arcs.len() });
        }
        if arcs != adj.arcs {
            return Err(Violation::ArcsMismatch(i));
        }
        if arcs.len() == 2 && i > 1 {
            return Err(Violation::LateTwoArc(i));
        }
        for c in circuits_within(&evens, cur) {
            let hit = c.edges().iter().filter(|e| new.contains(e)).count();
            if hit != 0 && hit != new.len() {
                return Err(Violation::PartialContainment { stage: i, circuit: c.to_string() });
            }
        }
    }
    for (i, s) in stages.iter().enumerate() {
        match is_ecc_within(g, &evens, s) {
            Ok(true) => {}
            Ok(false) => return Err(Violation::NotEvenCircuitConnected(i)),
            Err(e) => return Err(Violation::Enumeration(e.to_string())),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::DEFAULT_CIRCUIT_CAP as CAP;

    fn k23() -> Multigraph {
        Multigraph::from_pairs(&[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    }

    fn k4() -> Multigraph {
        Multigraph::from_pairs(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    }

    fn set(ids: &[EdgeId]) -> BTreeSet<EdgeId> {
        ids.iter().copied().collect()
    }

    #[test]
    fn disjoint_paths_examples() {
        let paths = disjoint_paths(&k4(), &set(&[1, 2]), &set(&[3, 4]), 2).unwrap();
        assert_eq!(paths.len(), 2);
        let used: BTreeSet<VertexId> = paths.iter().flat_map(|p| p.vertices.clone()).collect();
        assert_eq!(used.len(), 4);

        let path = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4)]);
        assert!(disjoint_paths(&path, &set(&[1, 2]), &set(&[3, 4]), 2).is_none());

        let paths = disjoint_paths(&k23(), &set(&[1, 2]), &set(&[3, 4]), 2).unwrap();
        assert!(paths.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn disjoint_paths_avoid_terminal_sets() {
        // 1-2-3 with 1 and 3 in S: the path from 1 may not run through 2 if 2 is in T
        let g = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let paths = disjoint_paths(&g, &set(&[1]), &set(&[2, 3]), 1).unwrap();
        assert_eq!(paths[0].vertices, vec![1, 2]);
        assert!(disjoint_paths(&g, &set(&[2]), &set(&[2]), 1).unwrap()[0].is_empty());
    }

    #[test]
    fn arcs_of_circuits() {
        let g = k4();
        // square 1-2-3-4: edges 1 (12), 4 (23), 6 (34), 3 (14)
        let sq = set(&[1, 3, 4, 6]);
        // circuit 1-3-2-4-1 uses the diagonals 2 (13) and 5 (24)
        let d = Circuit::from_edges(&g, [2, 4, 5, 3]).unwrap();
        let arcs = circuit_arcs(&g, &d, &sq).unwrap();
        assert_eq!(arcs.len(), 2);
        assert!(arcs.iter().all(|a| a.len() == 1));
        // a circuit with no edge in the stage has no arcs
        let tri = set(&[1]);
        let far = Circuit::from_edges(&g, [2, 6, 3]).unwrap();
        assert!(circuit_arcs(&g, &far, &tri).is_none());
        // a single stretch through a stage vertex splits into two arcs
        let g = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)]);
        let c = Circuit::from_edges(&g, [1, 2, 3, 4, 5, 6]).unwrap();
        let arcs = circuit_arcs(&g, &c, &set(&[7, 1])).unwrap();
        assert_eq!(arcs.len(), 2);
    }

    #[test]
    fn find_adjunction_examples() {
        let g = k23();
        let evens = even_circuits(&g, CAP).unwrap();
        let adj = find_adjunction(&g, &set(evens[0].edges()), &evens).unwrap().unwrap();
        assert_eq!(adj.arcs.len(), 1);
        assert_eq!(adj.arcs[0].len(), 2);

        let g = k4();
        let evens = even_circuits(&g, CAP).unwrap();
        let adj = find_adjunction(&g, &set(&[1, 3, 4, 6]), &evens).unwrap().unwrap();
        assert_eq!(adj.arcs.len(), 2);
        assert_eq!(adj.new_edges(), vec![2, 5]);

        let e1 = Multigraph::from_pairs(&[(1, 2), (1, 2), (1, 2)]);
        let evens = even_circuits(&e1, CAP).unwrap();
        let adj = find_adjunction(&e1, &set(&[1, 2]), &evens).unwrap().unwrap();
        assert_eq!(adj.new_edges(), vec![3]);

        assert!(find_adjunction(&e1, &set(&[1, 2, 3]), &evens).is_err());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&k23(), CAP).unwrap();
        assert_eq!(d.stages.len(), 2);
        assert_eq!(d.adjunctions[0].arcs.len(), 1);
        validate(&k23(), &d, CAP).unwrap();

        let d = decompose(&k4(), CAP).unwrap();
        assert_eq!(d.stages.len(), 2);
        assert_eq!(d.two_arc_stages(), vec![1]);
        validate(&k4(), &d, CAP).unwrap();

        let sq = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let d = decompose(&sq, CAP).unwrap();
        assert_eq!(d.stages.len(), 1);
        assert!(d.adjunctions.is_empty());

        let tree = Multigraph::from_pairs(&[(1, 2), (2, 3)]);
        assert!(matches!(decompose(&tree, CAP), Err(Error::Input(_))));
    }

    #[test]
    fn validate_catches_violations() {
        let g = k4();
        let triangle_start = ArcDecomposition {
            stages: vec![vec![1, 2, 4], vec![1, 2, 3, 4, 5, 6]],
            adjunctions: vec![],
            construction: Construction::Greedy,
        };
        assert_eq!(validate(&g, &triangle_start, CAP), Err(Violation::FirstStageNotEvenCircuit));

        // a two-arc step at stage 3 on a larger non-bipartite graph
        let good = decompose(&g, CAP).unwrap();
        let mut late = good.clone();
        late.stages.insert(1, late.stages[0].clone());
        late.stages.insert(1, late.stages[0].clone());
        let filler = late.adjunctions[0].clone();
        late.adjunctions.insert(0, filler.clone());
        late.adjunctions.insert(0, filler);
        assert!(validate(&g, &late, CAP).is_err());
    }

    #[test]
    fn late_two_arc_is_reported() {
        // K4 with a pendant square on edge 1-2: greedy may grow the square
        // first; whichever order, the result must validate.
        let g = Multigraph::from_pairs(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (5, 6), (6, 2)]);
        let d = decompose(&g, CAP).unwrap();
        validate(&g, &d, CAP).unwrap();
        assert_eq!(d.two_arc_stages(), vec![1]);
    }

    #[test]
    fn bookkeeping_identity() {
        let g = Multigraph::from_pairs(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (5, 6), (6, 2)]);
        let d = decompose(&g, CAP).unwrap();
        let added: usize = d.adjunctions.iter().map(|a| a.new_edges().len()).sum();
        assert_eq!(d.stages[0].len() + added, g.edge_count());
    }
}
