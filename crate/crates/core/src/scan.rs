//! Search for forbidden substructures: subgraphs that are even splittings of
//! a catalog base graph and carry an incompatible share of the assignment.
//!
//! Candidate subgraphs are connected, loop-free edge subsets in which every
//! touched vertex has degree at least two. They are visited by ascending
//! size, then ascending edge bitmask, so the first witness found is also the
//! smallest in that order.

use std::collections::BTreeSet;

use crate::catalog::{BaseKind, Catalog, CatalogEntry};
use crate::circuits::{enumerate_circuits, even_circuits, Circuit, ClockwiseParity, DEFAULT_CIRCUIT_CAP};
use crate::error::{Error, Result};
use crate::graph::{isomorphic, EdgeId, Multigraph, VertexId};
use crate::solver::{decide, ParityAssignment, Verdict};
use crate::transforms::{
    is_even_splitting_of, is_even_subdivision_of, lift_even_circuit, SplittingTrace, TraceStep,
};

/// Largest edge count the subset enumeration supports.
pub const MAX_SCAN_EDGES: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBudget {
    /// Edge subsets examined before giving up.
    pub max_subsets: u64,
    pub circuit_cap: usize,
}

impl Default for ScanBudget {
    fn default() -> Self {
        ScanBudget {
            max_subsets: 5_000_000,
            circuit_cap: DEFAULT_CIRCUIT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub base_name: &'static str,
    pub subgraph_edges: Vec<EdgeId>,
    /// Odd circuit of the subgraph contracted before the trace starts.
    pub odd_circuit_contracted: Option<Vec<EdgeId>>,
    /// Degree-2 contractions from the (contracted) subgraph to a copy of the base.
    pub splitting_trace: SplittingTrace,
    /// The base's even circuits lifted into the scanned graph.
    pub circuits: Vec<Circuit>,
    pub circuit_parities: Vec<ClockwiseParity>,
}

impl ForbiddenWitness {
    pub fn prescribed_even_count(&self) -> usize {
        self.circuit_parities.iter().filter(|p| p.is_even()).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    Found(ForbiddenWitness),
    NotFound { subsets_examined: u64 },
}

impl ScanOutcome {
    pub fn witness(&self) -> Option<&ForbiddenWitness> {
        match self {
            ScanOutcome::Found(w) => Some(w),
            ScanOutcome::NotFound { .. } => None,
        }
    }
}

/// Loop-free connected edge subsets with minimum degree two and a cycle
/// rank in `ranks`.
struct Candidates<'a> {
    g: &'a Multigraph,
    ids: Vec<EdgeId>,
    ends: Vec<(usize, usize)>,
    incidence: Vec<u64>,
    usable: u64,
    ranks: BTreeSet<usize>,
    examined: u64,
    budget: ScanBudget,
}

impl<'a> Candidates<'a> {
    fn new(g: &'a Multigraph, ranks: &[usize], budget: ScanBudget) -> Result<Self> {
        if g.edge_count() > MAX_SCAN_EDGES || g.vertex_count() > 64 {
            return Err(Error::Capability(format!(
                "scanning supports at most {MAX_SCAN_EDGES} edges and 64 vertices"
            )));
        }
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        let mut incidence = vec![0u64; g.vertex_count()];
        let mut ends = Vec::new();
        let mut usable = 0u64;
        for (i, e) in g.edges().iter().enumerate() {
            let (a, b) = (g.vertex_index(e.u).unwrap(), g.vertex_index(e.v).unwrap());
            ends.push((a, b));
            if !e.is_loop() {
                incidence[a] |= 1 << i;
                incidence[b] |= 1 << i;
                usable |= 1 << i;
            }
        }
        Ok(Candidates {
            g,
            ids,
            ends,
            incidence,
            usable,
            ranks: ranks.iter().copied().collect(),
            examined: 0,
            budget,
        })
    }

    fn accepts(&self, mask: u64) -> bool {
        let mut touched = 0u64;
        for (v, &inc) in self.incidence.iter().enumerate() {
            match (mask & inc).count_ones() {
                0 => {}
                1 => return false,
                _ => touched |= 1 << v,
            }
        }
        let n = touched.count_ones() as usize;
        let k = mask.count_ones() as usize;
        if k + 1 < n || !self.ranks.contains(&(k + 1 - n)) {
            return false;
        }
        // connectivity over the touched vertices
        let start = touched.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let mut edges = mask & self.incidence[v];
            while edges != 0 {
                let i = edges.trailing_zeros() as usize;
                edges &= edges - 1;
                let (a, b) = self.ends[i];
                let w = if a == v { b } else { a };
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == touched
    }

    fn subgraph(&self, mask: u64) -> Result<(Vec<EdgeId>, Multigraph)> {
        let chosen: Vec<EdgeId> = (0..self.ids.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.ids[i])
            .collect();
        let h = self.g.subgraph(chosen.iter().copied())?;
        Ok((chosen, h))
    }

    /// Calls `visit` on each candidate until it returns a value.
    fn search<T>(
        &mut self,
        sizes: impl Iterator<Item = usize>,
        mut visit: impl FnMut(&[EdgeId], &Multigraph) -> Result<Option<T>>,
    ) -> Result<Option<T>> {
        let usable_bits: Vec<usize> = (0..self.ids.len()).filter(|&i| self.usable >> i & 1 == 1).collect();
        let m = usable_bits.len();
        for k in sizes {
            if k == 0 || k > m {
                continue;
            }
            // k-subsets of the usable positions, as increasing bitmasks
            let mut sub: u64 = (1u64 << k) - 1;
            loop {
                self.examined += 1;
                if self.examined > self.budget.max_subsets {
                    return Err(Error::Resource(format!(
                        "scan stopped after {} edge subsets (all subsets of fewer than {k} edges searched, none with a witness)",
                        self.budget.max_subsets
                    )));
                }
                let mut mask = 0u64;
                let mut bits = sub;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    mask |= 1 << usable_bits[i];
                }
                if self.accepts(mask) {
                    let (chosen, h) = self.subgraph(mask)?;
                    if let Some(t) = visit(&chosen, &h)? {
                        return Ok(Some(t));
                    }
                }
                let c = sub & sub.wrapping_neg();
                let r = sub + c;
                sub = (((r ^ sub) >> 2) / c) | r;
                if m < 64 && sub >> m != 0 {
                    break;
                }
            }
        }
        Ok(None)
    }
}

// Builds the witness for a trace from `contracted` (the subgraph after the
// optional odd contraction) to a copy of `base`, if its lifted circuits obey
// the base's parity rule.
fn try_witness(
    base: &CatalogEntry,
    subgraph_edges: &[EdgeId],
    h: &Multigraph,
    odd: Option<(&[EdgeId], &Multigraph)>,
    trace: SplittingTrace,
    j: &ParityAssignment,
    cap: usize,
) -> Result<Option<ForbiddenWitness>> {
    let mut circuits = Vec::new();
    for c in even_circuits(&trace.to_graph, cap)? {
        let mut lifted = trace.lift(c.edges())?;
        if let Some((a, contracted)) = odd {
            let step = TraceStep::OddCircuitContraction { edges: a.to_vec() };
            lifted = lift_even_circuit(h, &step, contracted, lifted.edges())?;
        }
        circuits.push(lifted);
    }
    let parities: Vec<ClockwiseParity> = circuits
        .iter()
        .map(|c| j.prescribed(c.edges()))
        .collect::<Result<_>>()?;
    let evens = parities.iter().filter(|p| p.is_even()).count();
    if !base.rule_says_incompatible(evens) {
        return Ok(None);
    }
    Ok(Some(ForbiddenWitness {
        base_name: base.name,
        subgraph_edges: subgraph_edges.to_vec(),
        odd_circuit_contracted: odd.map(|(a, _)| a.to_vec()),
        splitting_trace: trace,
        circuits,
        circuit_parities: parities,
    }))
}

fn size_compatible(h: &Multigraph, b: &Multigraph) -> bool {
    h.edge_count() >= b.edge_count()
        && (h.edge_count() - b.edge_count()) % 2 == 0
        && h.cycle_rank() == b.cycle_rank()
}

fn odd_circuits(h: &Multigraph, cap: usize) -> Result<Vec<Circuit>> {
    Ok(enumerate_circuits(h, cap)?
        .into_iter()
        .filter(|c| !c.is_even())
        .collect())
}

/// Searches `g` for a subgraph that is an even splitting of one of the nine
/// base graphs with an incompatible share of `j`. Contracting one odd
/// circuit before matching O1 or E1 is tried only after the direct search
/// has failed.
pub fn scan_theorem_main(g: &Multigraph, j: &ParityAssignment, budget: ScanBudget) -> Result<ScanOutcome> {
    let catalog = Catalog::standard();
    let bases: Vec<&CatalogEntry> = catalog.bases().collect();
    let cap = budget.circuit_cap;
    let mut cands = Candidates::new(g, &[2, 3, 4], budget)?;
    let direct = cands.search(3..=g.edge_count(), |ids, h| {
        for base in &bases {
            if !size_compatible(h, &base.graph) {
                continue;
            }
            if let Some(trace) = is_even_splitting_of(h, &base.graph)? {
                if let Some(w) = try_witness(base, ids, h, None, trace, j, cap)? {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    })?;
    if let Some(w) = direct {
        return Ok(ScanOutcome::Found(w));
    }
    let small: Vec<&CatalogEntry> = ["O1", "E1"].iter().map(|n| catalog.get(n).unwrap()).collect();
    let mut cands = Candidates::new(g, &[3], budget)?;
    let fallback = cands.search(4..=g.edge_count(), |ids, h| {
        for a in odd_circuits(h, cap)? {
            let (contracted, _) = h.contract_edges(a.edges().iter().copied())?;
            for base in &small {
                if !size_compatible(&contracted, &base.graph) {
                    continue;
                }
                if let Some(trace) = is_even_splitting_of(&contracted, &base.graph)? {
                    let odd = Some((a.edges(), &contracted));
                    if let Some(w) = try_witness(base, ids, h, odd, trace, j, cap)? {
                        return Ok(Some(w));
                    }
                }
            }
        }
        Ok(None)
    })?;
    Ok(match fallback {
        Some(w) => ScanOutcome::Found(w),
        None => ScanOutcome::NotFound {
            subsets_examined: cands.examined,
        },
    })
}

/// A graph with its degree-2 vertices suppressed: branch vertices joined by
/// paths.
#[derive(Debug, Clone)]
struct Skeleton {
    branch: Vec<VertexId>,
    // (end, end, length)
    paths: Vec<(VertexId, VertexId, usize)>,
}

// Requires a connected loop-free graph with minimum degree two; cycles have
// no skeleton.
fn skeleton(h: &Multigraph) -> Option<Skeleton> {
    if h.has_loop() {
        return None;
    }
    let branch: Vec<VertexId> = h.vertices().iter().copied().filter(|&v| h.degree(v) >= 3).collect();
    if branch.is_empty() {
        return None;
    }
    let mut used: BTreeSet<EdgeId> = BTreeSet::new();
    let mut paths = Vec::new();
    for &b in &branch {
        for &(e0, w0) in h.incident(b) {
            if used.contains(&e0) {
                continue;
            }
            used.insert(e0);
            let (mut prev_edge, mut cur, mut len) = (e0, w0, 1);
            while h.degree(cur) == 2 {
                let &(e, w) = h.incident(cur).iter().find(|&&(e, _)| e != prev_edge)?;
                used.insert(e);
                prev_edge = e;
                cur = w;
                len += 1;
            }
            paths.push((b, cur, len));
        }
    }
    Some(Skeleton { branch, paths })
}

// Two branch vertices joined by three paths, all of length parity `p`
// (`true` for odd).
fn is_parity_theta(h: &Multigraph, odd: bool) -> bool {
    match skeleton(h) {
        Some(s) => {
            s.branch.len() == 2
                && s.paths.len() == 3
                && s.paths.iter().all(|&(a, b, len)| a != b && (len % 2 == 1) == odd)
        }
        None => false,
    }
}

// A subdivided K4 whose two paths of one perfect matching are odd and whose
// other four paths are even.
fn is_e3_pattern(h: &Multigraph) -> bool {
    let Some(s) = skeleton(h) else {
        return false;
    };
    if s.branch.len() != 4 || s.paths.len() != 6 || s.branch.iter().any(|&v| h.degree(v) != 3) {
        return false;
    }
    let pairs: BTreeSet<(VertexId, VertexId)> = s.paths.iter().map(|&(a, b, _)| (a.min(b), a.max(b))).collect();
    if pairs.len() != 6 {
        return false;
    }
    let odd: Vec<(VertexId, VertexId)> = s
        .paths
        .iter()
        .filter(|p| p.2 % 2 == 1)
        .map(|&(a, b, _)| (a, b))
        .collect();
    odd.len() == 2 && {
        let (p, q) = (odd[0], odd[1]);
        p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1
    }
}

fn subdivision_witness(
    base: &CatalogEntry,
    ids: &[EdgeId],
    h: &Multigraph,
    odd: Option<(&[EdgeId], &Multigraph)>,
    j: &ParityAssignment,
    cap: usize,
) -> Result<Option<ForbiddenWitness>> {
    let target = odd.map_or(h, |(_, c)| c);
    let trace = is_even_subdivision_of(target, &base.graph)?.ok_or_else(|| {
        Error::Contract(format!("parity pattern matched {} but no subdivision trace exists", base.name))
    })?;
    try_witness(base, ids, h, odd, trace, j, cap)
}

/// Witness search under the all-odd assignment: a subgraph that is an even
/// subdivision of K_{2,3}, possibly after contracting one odd circuit.
pub fn scan_all_odd(g: &Multigraph, budget: ScanBudget) -> Result<ScanOutcome> {
    let o1 = Catalog::standard().get("O1").unwrap();
    let j = ParityAssignment::AllOdd;
    let cap = budget.circuit_cap;
    let mut cands = Candidates::new(g, &[2, 3], budget)?;
    let found = cands.search(6..=g.edge_count(), |ids, h| {
        if h.cycle_rank() == 2 {
            if is_parity_theta(h, false) {
                return subdivision_witness(o1, ids, h, None, &j, cap);
            }
            return Ok(None);
        }
        for a in odd_circuits(h, cap)? {
            let (c, _) = h.contract_edges(a.edges().iter().copied())?;
            if is_parity_theta(&c, false) {
                return subdivision_witness(o1, ids, h, Some((a.edges(), &c)), &j, cap);
            }
        }
        Ok(None)
    })?;
    Ok(match found {
        Some(w) => ScanOutcome::Found(w),
        None => ScanOutcome::NotFound {
            subsets_examined: cands.examined,
        },
    })
}

/// Witness search under the all-even assignment: a subgraph that is an even
/// subdivision of E1 or E3, possibly after contracting one odd circuit.
pub fn scan_all_even(g: &Multigraph, budget: ScanBudget) -> Result<ScanOutcome> {
    let catalog = Catalog::standard();
    let (e1, e3) = (catalog.get("E1").unwrap(), catalog.get("E3").unwrap());
    let j = ParityAssignment::AllEven;
    let cap = budget.circuit_cap;
    let mut cands = Candidates::new(g, &[2, 3, 4], budget)?;
    let found = cands.search(3..=g.edge_count(), |ids, h| {
        match h.cycle_rank() {
            2 if is_parity_theta(h, true) => return subdivision_witness(e1, ids, h, None, &j, cap),
            3 if is_e3_pattern(h) => return subdivision_witness(e3, ids, h, None, &j, cap),
            _ => {}
        }
        if h.cycle_rank() == 2 {
            return Ok(None);
        }
        for a in odd_circuits(h, cap)? {
            let (c, _) = h.contract_edges(a.edges().iter().copied())?;
            let odd = Some((a.edges(), &c));
            if c.cycle_rank() == 2 && is_parity_theta(&c, true) {
                return subdivision_witness(e1, ids, h, odd, &j, cap);
            }
            if c.cycle_rank() == 3 && is_e3_pattern(&c) {
                return subdivision_witness(e3, ids, h, odd, &j, cap);
            }
        }
        Ok(None)
    })?;
    Ok(match found {
        Some(w) => ScanOutcome::Found(w),
        None => ScanOutcome::NotFound {
            subsets_examined: cands.examined,
        },
    })
}

/// Re-derives a witness from scratch: rebuilds the subgraph and optional
/// contraction, replays the trace, matches the base up to isomorphism,
/// re-lifts the base's even circuits, rechecks the parity rule and asks the
/// solver to confirm the subgraph is incompatible.
pub fn verify_witness(g: &Multigraph, j: &ParityAssignment, w: &ForbiddenWitness, cap: usize) -> Result<()> {
    let fail = |msg: String| Err(Error::Contract(format!("witness on {}: {msg}", w.base_name)));
    let base = match Catalog::standard().get(w.base_name) {
        Some(b) if b.kind != BaseKind::Auxiliary => b,
        _ => return fail("unknown base".into()),
    };
    let h = g.subgraph(w.subgraph_edges.iter().copied())?;
    let contracted = match &w.odd_circuit_contracted {
        None => h.clone(),
        Some(a) => {
            let c = Circuit::from_edges(&h, a.iter().copied())?;
            if c.is_even() {
                return fail("contracted circuit is even".into());
            }
            h.contract_edges(a.iter().copied())?.0
        }
    };
    let t = &w.splitting_trace;
    if t.from_graph != contracted {
        return fail("trace does not start at the subgraph".into());
    }
    if t.steps.iter().any(|s| !matches!(s, TraceStep::Degree2Contraction { .. })) {
        return fail("trace contains a non-splitting step".into());
    }
    t.check()?;
    if !isomorphic(&t.to_graph, &base.graph)? {
        return fail("trace does not end at the base graph".into());
    }
    let ends = even_circuits(&t.to_graph, cap)?;
    if ends.len() != base.even_circuit_count || ends.len() != w.circuits.len() {
        return fail(format!("{} even circuits at the end of the trace", ends.len()));
    }
    for (c, claimed) in ends.iter().zip(&w.circuits) {
        let mut lifted = t.lift(c.edges())?;
        if let Some(a) = &w.odd_circuit_contracted {
            let step = TraceStep::OddCircuitContraction { edges: a.clone() };
            lifted = lift_even_circuit(&h, &step, &contracted, lifted.edges())?;
        }
        if &lifted != claimed {
            return fail(format!("lift of {c} is {lifted}, witness lists {claimed}"));
        }
    }
    let parities: Vec<ClockwiseParity> = w.circuits.iter().map(|c| j.prescribed(c.edges())).collect::<Result<_>>()?;
    if parities != w.circuit_parities {
        return fail("recorded parities differ from the assignment".into());
    }
    if !base.rule_says_incompatible(w.prescribed_even_count()) {
        return fail("parity rule not satisfied".into());
    }
    if let Verdict::Compatible(_) = decide(&h, j, cap)? {
        return fail("solver finds the subgraph compatible".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> Multigraph {
        Catalog::standard().get(name).unwrap().graph.clone()
    }

    fn scan(g: &Multigraph, j: &ParityAssignment) -> ScanOutcome {
        scan_theorem_main(g, j, ScanBudget::default()).unwrap()
    }

    #[test]
    fn k23_all_odd_witness_is_itself() {
        let g = fixture("O1");
        let out = scan(&g, &ParityAssignment::AllOdd);
        let w = out.witness().unwrap();
        assert_eq!(w.base_name, "O1");
        assert!(w.splitting_trace.steps.is_empty());
        assert_eq!(w.subgraph_edges.len(), 6);
        verify_witness(&g, &ParityAssignment::AllOdd, w, DEFAULT_CIRCUIT_CAP).unwrap();
    }

    #[test]
    fn square_has_no_witness() {
        let g = Multigraph::from_pairs(&[(1, 2), (2, 3), (3, 4), (4, 1)]);
        for j in [ParityAssignment::AllOdd, ParityAssignment::AllEven] {
            assert!(scan(&g, &j).witness().is_none());
        }
    }

    #[test]
    fn k4_all_even() {
        let g = fixture("E2");
        let out = scan(&g, &ParityAssignment::AllEven);
        let w = out.witness().unwrap();
        assert!(["E1", "E2"].contains(&w.base_name));
        verify_witness(&g, &ParityAssignment::AllEven, w, DEFAULT_CIRCUIT_CAP).unwrap();
        let fast = scan_all_even(&g, ScanBudget::default()).unwrap();
        let w = fast.witness().unwrap();
        assert_eq!(w.base_name, "E1");
        assert_eq!(w.odd_circuit_contracted.as_ref().unwrap().len(), 3);
        verify_witness(&g, &ParityAssignment::AllEven, w, DEFAULT_CIRCUIT_CAP).unwrap();
    }

    #[test]
    fn k4_all_odd_is_compatible() {
        let g = fixture("E2");
        assert!(scan_all_odd(&g, ScanBudget::default()).unwrap().witness().is_none());
        assert!(decide(&g, &ParityAssignment::AllOdd, DEFAULT_CIRCUIT_CAP).unwrap().is_compatible());
    }

    #[test]
    fn o2_all_odd_uses_contraction() {
        let g = fixture("O2");
        let out = scan_all_odd(&g, ScanBudget::default()).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.base_name, "O1");
        assert_eq!(w.odd_circuit_contracted.as_ref().unwrap().len(), 3);
        verify_witness(&g, &ParityAssignment::AllOdd, w, DEFAULT_CIRCUIT_CAP).unwrap();
        let main = scan(&g, &ParityAssignment::AllOdd);
        assert_eq!(main.witness().unwrap().base_name, "O2");
    }

    #[test]
    fn e1_and_k23_all_even() {
        let e1 = fixture("E1");
        assert!(scan_all_even(&e1, ScanBudget::default()).unwrap().witness().is_some());
        let k23 = fixture("O1");
        assert!(scan_all_even(&k23, ScanBudget::default()).unwrap().witness().is_none());
        assert!(scan(&k23, &ParityAssignment::AllEven).witness().is_none());
    }

    #[test]
    fn deltas_are_witnesses_for_odd_even_counts() {
        for name in ["D1", "D2", "D3", "D4"] {
            let g = fixture(name);
            let evens = even_circuits(&g, DEFAULT_CIRCUIT_CAP).unwrap();
            let j = ParityAssignment::from_pairs(evens.iter().enumerate().map(|(i, c)| {
                (c, if i == 0 { ClockwiseParity::Even } else { ClockwiseParity::Odd })
            }));
            let out = scan(&g, &j);
            let w = out.witness().unwrap_or_else(|| panic!("{name}"));
            assert_eq!(w.base_name, name);
            verify_witness(&g, &j, w, DEFAULT_CIRCUIT_CAP).unwrap();
        }
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let g = fixture("O1");
        let mut w = scan(&g, &ParityAssignment::AllOdd).witness().unwrap().clone();
        w.circuit_parities[0] = ClockwiseParity::Even;
        assert!(verify_witness(&g, &ParityAssignment::AllOdd, &w, DEFAULT_CIRCUIT_CAP).is_err());
        let mut w2 = scan(&g, &ParityAssignment::AllOdd).witness().unwrap().clone();
        w2.base_name = "E1";
        assert!(verify_witness(&g, &ParityAssignment::AllOdd, &w2, DEFAULT_CIRCUIT_CAP).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = fixture("O2");
        let tight = ScanBudget { max_subsets: 10, ..ScanBudget::default() };
        assert!(matches!(scan_theorem_main(&g, &ParityAssignment::AllOdd, tight), Err(Error::Resource(_))));
    }

    #[test]
    fn skeleton_patterns() {
        assert!(is_parity_theta(&fixture("O1"), false));
        assert!(is_parity_theta(&fixture("E1"), true));
        assert!(is_e3_pattern(&fixture("E3")));
        assert!(!is_e3_pattern(&fixture("E2")));
        assert!(!is_e3_pattern(&fixture("O2")));
    }
}
