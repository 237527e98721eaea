//! Even vertex splittings (through their inverse, contracting the two edges
//! at a degree-2 vertex), double subdivision, odd-circuit contraction, and
//! the lifting of even circuits and parity assignments across them.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::circuits::{even_circuits, Circuit};
use crate::error::{Error, Result};
use crate::graph::{isomorphic, ContractionMap, EdgeId, Multigraph, VertexId};
use crate::solver::ParityAssignment;

/// Largest graph accepted by the splitting search.
pub const MAX_SPLITTING_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TraceStep {
    /// Both edges at a degree-2 vertex are contracted.
    Degree2Contraction { vertex: VertexId, edges: (EdgeId, EdgeId) },
    /// An odd circuit is contracted to a single vertex.
    OddCircuitContraction { edges: Vec<EdgeId> },
}

/// A chain of contractions from `from_graph` to `to_graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingTrace {
    pub steps: Vec<TraceStep>,
    pub from_graph: Multigraph,
    pub to_graph: Multigraph,
}

impl SplittingTrace {
    pub fn identity(g: &Multigraph) -> Self {
        SplittingTrace {
            steps: Vec::new(),
            from_graph: g.clone(),
            to_graph: g.clone(),
        }
    }

    /// Graphs before each step, followed by the final graph.
    pub fn replay(&self) -> Result<Vec<Multigraph>> {
        let mut graphs = vec![self.from_graph.clone()];
        for step in &self.steps {
            let next = apply_step(graphs.last().unwrap(), step)?.0;
            graphs.push(next);
        }
        Ok(graphs)
    }

    pub fn odd_contractions(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, TraceStep::OddCircuitContraction { .. }))
            .count()
    }

    /// Replays the steps and checks that they end at `to_graph`.
    pub fn check(&self) -> Result<()> {
        let graphs = self.replay()?;
        if graphs.last() != Some(&self.to_graph) {
            return Err(Error::Input("trace does not replay to its recorded end graph".into()));
        }
        Ok(())
    }

    /// Lifts an even circuit of `to_graph` back to `from_graph`.
    pub fn lift(&self, circuit: &[EdgeId]) -> Result<Circuit> {
        let graphs = self.replay()?;
        let mut current = Circuit::from_edges(graphs.last().unwrap(), circuit.iter().copied())?;
        for (k, step) in self.steps.iter().enumerate().rev() {
            current = lift_even_circuit(&graphs[k], step, &graphs[k + 1], current.edges())?;
        }
        Ok(current)
    }
}

pub fn apply_step(g: &Multigraph, step: &TraceStep) -> Result<(Multigraph, ContractionMap)> {
    match step {
        TraceStep::Degree2Contraction { vertex, edges } => {
            let (h, map, actual) = contract_degree2_pair(g, *vertex)?;
            if actual != *edges {
                return Err(Error::Input(format!(
                    "vertex {vertex} is incident to {actual:?}, not {edges:?}"
                )));
            }
            Ok((h, map))
        }
        TraceStep::OddCircuitContraction { edges } => contract_odd_circuit(g, edges),
    }
}

/// Contracts the two edges at a vertex of degree two. Returns the contracted
/// graph, the contraction map and the two contracted edges in id order.
pub fn contract_degree2_pair(
    g: &Multigraph,
    v: VertexId,
) -> Result<(Multigraph, ContractionMap, (EdgeId, EdgeId))> {
    let (e, f) = degree2_edges(g, v)
        .ok_or_else(|| Error::Input(format!("vertex {v} is not a loop-free degree-2 vertex")))?;
    let (h, map) = g.contract_edges([e, f])?;
    Ok((h, map, (e, f)))
}

fn degree2_edges(g: &Multigraph, v: VertexId) -> Option<(EdgeId, EdgeId)> {
    let inc = g.incident(v);
    if inc.len() != 2 || inc.iter().any(|&(_, w)| w == v) {
        return None;
    }
    Some((inc[0].0, inc[1].0))
}

/// Replaces `e = uv` by a path u-a-b-v through two new vertices. The first
/// segment keeps `e`'s id; the other two get fresh ids.
pub fn subdivide_edge_twice(g: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let edge = *g.edge_or_err(e)?;
    let next_v = g.vertices().iter().max().map_or(0, |&m| m + 1);
    let next_e = g.edge_ids().max().map_or(0, |m| m + 1);
    let (a, b) = (next_v, next_v + 1);
    let mut edges: Vec<(EdgeId, VertexId, VertexId)> = g
        .edges()
        .iter()
        .filter(|x| x.id != e)
        .map(|x| (x.id, x.u, x.v))
        .collect();
    edges.push((e, edge.u, a));
    edges.push((next_e, a, b));
    edges.push((next_e + 1, b, edge.v));
    Multigraph::new(g.vertices().iter().copied().chain([a, b]), edges)
}

/// Contracts an odd circuit to a single vertex.
pub fn contract_odd_circuit(g: &Multigraph, edges: &[EdgeId]) -> Result<(Multigraph, ContractionMap)> {
    let c = Circuit::from_edges(g, edges.iter().copied())?;
    if c.is_even() {
        return Err(Error::Input(format!("{c} is not an odd circuit")));
    }
    g.contract_edges(c.edges().iter().copied())
}

/// True when one of the two edges at `v` ends in another degree-2 vertex,
/// the case in which the contraction preserves compatibility both ways.
pub fn contraction_is_reversible(g: &Multigraph, v: VertexId) -> bool {
    let Some((e, f)) = degree2_edges(g, v) else {
        return false;
    };
    [e, f].iter().any(|&id| {
        let w = g.edge(id).unwrap().other(v);
        w != v && degree2_edges(g, w).is_some()
    })
}

// Degrees of an edge set, vertex by vertex.
fn degrees_of(g: &Multigraph, ids: &[EdgeId]) -> Result<BTreeMap<VertexId, usize>> {
    let mut deg = BTreeMap::new();
    for &id in ids {
        let e = g.edge_or_err(id)?;
        *deg.entry(e.u).or_insert(0) += 1;
        *deg.entry(e.v).or_insert(0) += 1;
    }
    Ok(deg)
}

/// The unique even circuit of the pre-contraction graph `g` whose
/// intersection with the surviving edges is `c_h`.
pub fn lift_even_circuit(
    g: &Multigraph,
    step: &TraceStep,
    h: &Multigraph,
    c_h: &[EdgeId],
) -> Result<Circuit> {
    let in_h = Circuit::from_edges(h, c_h.iter().copied())?;
    if !in_h.is_even() {
        return Err(Error::Input(format!("{in_h} is not an even circuit")));
    }
    let odd_ends: Vec<VertexId> = degrees_of(g, in_h.edges())?
        .into_iter()
        .filter(|&(_, d)| d % 2 == 1)
        .map(|(v, _)| v)
        .collect();
    let lifted: Vec<EdgeId> = if odd_ends.is_empty() {
        in_h.edges().to_vec()
    } else {
        if odd_ends.len() != 2 {
            return Err(Error::Input(format!("{in_h} does not lift across {step:?}")));
        }
        let extra = match step {
            TraceStep::Degree2Contraction { edges, .. } => vec![edges.0, edges.1],
            TraceStep::OddCircuitContraction { edges } => {
                let a = Circuit::from_edges(g, edges.iter().copied())?;
                let (_, path) = a
                    .walk(g, odd_ends[0], odd_ends[1])
                    .ok_or_else(|| Error::Input("lift endpoints are not on the contracted circuit".into()))?;
                if path.len() % 2 == 0 {
                    path
                } else {
                    let on_path: BTreeSet<EdgeId> = path.into_iter().collect();
                    a.edges().iter().copied().filter(|e| !on_path.contains(e)).collect()
                }
            }
        };
        in_h.edges().iter().copied().chain(extra).collect()
    };
    let c = Circuit::from_edges(g, lifted)?;
    if !c.is_even() {
        return Err(Error::Input(format!("lift of {in_h} is odd")));
    }
    Ok(c)
}

/// The assignment induced on the contracted graph: each even circuit gets
/// the parity of its lift.
pub fn induce_assignment(
    g: &Multigraph,
    j: &ParityAssignment,
    step: &TraceStep,
    cap: usize,
) -> Result<(Multigraph, ParityAssignment)> {
    let (h, _) = apply_step(g, step)?;
    let induced = match j {
        ParityAssignment::AllOdd | ParityAssignment::AllEven => j.clone(),
        ParityAssignment::Explicit { .. } => {
            let mut map = BTreeMap::new();
            for c in even_circuits(&h, cap)? {
                let lifted = lift_even_circuit(g, step, &h, c.edges())?;
                map.insert(c.edges().to_vec(), j.prescribed(lifted.edges())?);
            }
            ParityAssignment::explicit(map)
        }
    };
    Ok((h, induced))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    /// Any degree-2 contraction (inverse even vertex splitting).
    Splitting,
    /// Only contractions that undo a double subdivision.
    Subdivision,
}

/// Searches for a chain of degree-2 contractions turning `h` into a graph
/// isomorphic to `b`. `Ok(None)` means the search was exhausted.
pub fn is_even_splitting_of(h: &Multigraph, b: &Multigraph) -> Result<Option<SplittingTrace>> {
    splitting_search(h, b, SplitMode::Splitting)
}

/// Like [`is_even_splitting_of`] restricted to undoing double subdivisions.
pub fn is_even_subdivision_of(h: &Multigraph, b: &Multigraph) -> Result<Option<SplittingTrace>> {
    splitting_search(h, b, SplitMode::Subdivision)
}

pub fn splitting_search(h: &Multigraph, b: &Multigraph, mode: SplitMode) -> Result<Option<SplittingTrace>> {
    if h.vertex_count() > MAX_SPLITTING_VERTICES || h.edge_count() > 128 {
        return Err(Error::Capability(format!(
            "splitting search supports at most {MAX_SPLITTING_VERTICES} vertices"
        )));
    }
    let (eh, eb) = (h.edge_count(), b.edge_count());
    if eh < eb || (eh - eb) % 2 == 1 || eh - eb != h.vertex_count().wrapping_sub(b.vertex_count()) {
        return Ok(None);
    }
    if h.cycle_rank() != b.cycle_rank() || h.components().len() != b.components().len() {
        return Ok(None);
    }
    let mut search = Search {
        target: b,
        target_loops: b.edges().iter().filter(|e| e.is_loop()).count(),
        mode,
        failed: HashSet::new(),
        steps: Vec::new(),
        index: h.edge_ids().enumerate().map(|(i, e)| (e, i)).collect(),
    };
    if search.run(h, 0)? {
        let mut g = h.clone();
        for s in &search.steps {
            g = apply_step(&g, s)?.0;
        }
        Ok(Some(SplittingTrace {
            steps: search.steps,
            from_graph: h.clone(),
            to_graph: g,
        }))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    target: &'a Multigraph,
    target_loops: usize,
    mode: SplitMode,
    // contracted-edge sets already known to be dead ends
    failed: HashSet<u128>,
    steps: Vec<TraceStep>,
    index: BTreeMap<EdgeId, usize>,
}

impl Search<'_> {
    fn run(&mut self, g: &Multigraph, removed: u128) -> Result<bool> {
        if g.edge_count() == self.target.edge_count() {
            return isomorphic(g, self.target);
        }
        if self.failed.contains(&removed) {
            return Ok(false);
        }
        let candidates: Vec<VertexId> = g
            .vertices()
            .iter()
            .copied()
            .filter(|&v| {
                // parallel pairs would drop the cycle rank
                let inc = g.incident(v);
                degree2_edges(g, v).is_some() && inc[0].1 != inc[1].1
            })
            .filter(|&v| self.mode == SplitMode::Splitting || contraction_is_reversible(g, v))
            .collect();
        for v in candidates {
            let (next, _, (e, f)) = contract_degree2_pair(g, v)?;
            let loops = next.edges().iter().filter(|x| x.is_loop()).count();
            if loops > self.target_loops {
                continue;
            }
            let mask = removed | 1u128 << self.index[&e] | 1u128 << self.index[&f];
            self.steps.push(TraceStep::Degree2Contraction { vertex: v, edges: (e, f) });
            if self.run(&next, mask)? {
                return Ok(true);
            }
            self.steps.pop();
        }
        self.failed.insert(removed);
        Ok(false)
    }
}
