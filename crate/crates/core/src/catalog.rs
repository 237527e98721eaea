//! The base graphs of the forbidden-substructure theorem and the auxiliary
//! graphs that arise as the first two stages of an arc decomposition.
//!
//! Fixtures are stored as graph files under `fixtures/` and embedded at
//! compile time.

use std::sync::OnceLock;

use crate::circuits::{even_circuits, ClockwiseParity, DEFAULT_CIRCUIT_CAP};
use crate::error::{Error, Result};
use crate::format::parse_graph;
use crate::gf2::{left_nullspace_basis, BitVec, Gf2Matrix};
use crate::graph::{isomorphic, EdgeId, Multigraph, VertexId};
use crate::solver::{decide, ParityAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKind {
    /// Incompatible when an even number of even circuits is prescribed clockwise even.
    O,
    /// Incompatible when an odd number is prescribed clockwise even.
    E,
    /// Four even circuits; incompatible when an odd number is prescribed clockwise even.
    Delta,
    /// Two even circuits; compatible under every assignment.
    Auxiliary,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Multigraph,
    pub kind: BaseKind,
    pub even_circuit_count: usize,
}

impl CatalogEntry {
    /// Parity of the prescribed clockwise-even count that makes this graph
    /// incompatible, or `None` if it never is.
    pub fn incompatible_when(&self) -> Option<ClockwiseParity> {
        match self.kind {
            BaseKind::O => Some(ClockwiseParity::Even),
            BaseKind::E | BaseKind::Delta => Some(ClockwiseParity::Odd),
            BaseKind::Auxiliary => None,
        }
    }

    pub fn rule_says_incompatible(&self, prescribed_even: usize) -> bool {
        self.incompatible_when() == Some(ClockwiseParity::of_count(prescribed_even))
    }
}

const FIXTURES: [(&str, BaseKind, usize, &str); 14] = [
    ("O1", BaseKind::O, 3, include_str!("../fixtures/O1.graph")),
    ("O2", BaseKind::O, 3, include_str!("../fixtures/O2.graph")),
    ("E1", BaseKind::E, 3, include_str!("../fixtures/E1.graph")),
    ("E2", BaseKind::E, 3, include_str!("../fixtures/E2.graph")),
    ("E3", BaseKind::E, 3, include_str!("../fixtures/E3.graph")),
    ("D1", BaseKind::Delta, 4, include_str!("../fixtures/D1.graph")),
    ("D2", BaseKind::Delta, 4, include_str!("../fixtures/D2.graph")),
    ("D3", BaseKind::Delta, 4, include_str!("../fixtures/D3.graph")),
    ("D4", BaseKind::Delta, 4, include_str!("../fixtures/D4.graph")),
    ("A1", BaseKind::Auxiliary, 2, include_str!("../fixtures/A1.graph")),
    ("A2", BaseKind::Auxiliary, 2, include_str!("../fixtures/A2.graph")),
    ("A3", BaseKind::Auxiliary, 2, include_str!("../fixtures/A3.graph")),
    ("A4", BaseKind::Auxiliary, 2, include_str!("../fixtures/A4.graph")),
    ("A5", BaseKind::Auxiliary, 2, include_str!("../fixtures/A5.graph")),
];

/// Names of the nine base graphs, in the order the scanner tries them.
pub const BASE_NAMES: [&str; 9] = ["O1", "O2", "E1", "E2", "E3", "D1", "D2", "D3", "D4"];

/// Graphs that a non-bipartite first stage of an arc decomposition can
/// subdivide, besides O1 and E1.
pub const SECOND_STAGE_NAMES: [&str; 8] = ["O2", "E2", "E3", "A1", "A2", "A3", "A4", "A5"];

/// Raw text of a fixture file.
pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|f| f.0 == name).map(|f| f.3)
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|f| f.0)
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Parses every embedded fixture.
    pub fn load() -> Result<Catalog> {
        let mut entries = Vec::new();
        for &(name, kind, count, text) in &FIXTURES {
            let graph = parse_graph(text).map_err(|e| Error::Fixture {
                name: name.into(),
                detail: e.to_string(),
            })?;
            entries.push(CatalogEntry {
                name,
                graph,
                kind,
                even_circuit_count: count,
            });
        }
        Ok(Catalog { entries })
    }

    /// Shared parsed catalog.
    pub fn standard() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::load().expect("embedded fixtures parse"))
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn bases(&self) -> impl Iterator<Item = &CatalogEntry> {
        BASE_NAMES.iter().map(move |n| self.get(n).unwrap())
    }

    /// O1, E1 and the second-stage graphs.
    pub fn first_stage_targets(&self) -> impl Iterator<Item = &CatalogEntry> {
        ["O1", "E1"]
            .iter()
            .chain(SECOND_STAGE_NAMES.iter())
            .map(move |n| self.get(n).unwrap())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SelfCheckReport {
    pub lines: Vec<String>,
}

fn fixture_err(name: &str, detail: impl Into<String>) -> Error {
    Error::Fixture {
        name: name.into(),
        detail: detail.into(),
    }
}

// Subdivides each listed edge once.
fn subdivide_once(g: &Multigraph, ids: &[EdgeId]) -> Result<Multigraph> {
    let mut next_v = g.vertices().iter().max().map_or(0, |&m| m + 1);
    let mut next_e = g.edge_ids().max().map_or(0, |m| m + 1);
    let mut vertices: Vec<VertexId> = g.vertices().to_vec();
    let mut edges = Vec::new();
    for e in g.edges() {
        if ids.contains(&e.id) {
            vertices.push(next_v);
            edges.push((e.id, e.u, next_v));
            edges.push((next_e, next_v, e.v));
            next_v += 1;
            next_e += 1;
        } else {
            edges.push((e.id, e.u, e.v));
        }
    }
    Multigraph::new(vertices, edges)
}

fn k4() -> Multigraph {
    Multigraph::from_pairs(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
}

fn expected_shape(name: &str) -> Result<Option<Multigraph>> {
    Ok(match name {
        "O1" => Some(Multigraph::from_pairs(&[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])),
        "E1" => Some(Multigraph::from_pairs(&[(1, 2), (1, 2), (1, 2)])),
        "E2" => Some(k4()),
        // edges 1, 2, 3 of K4 are the ones at vertex 1
        "O2" => Some(subdivide_once(&k4(), &[1, 2, 3])?),
        // edges 1, 4, 6, 3 form the circuit 1-2-3-4
        "E3" => Some(subdivide_once(&k4(), &[1, 4, 6, 3])?),
        _ => None,
    })
}

// True if contracting some `k`-subset of `g`'s edges gives a graph
// isomorphic to `target`.
fn contracts_to(g: &Multigraph, target: &Multigraph) -> Result<bool> {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let k = g.edge_count().saturating_sub(target.edge_count());
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<EdgeId> = pick.iter().map(|&i| ids[i]).collect();
        let (h, _) = g.contract_edges(chosen)?;
        if isomorphic(&h, target)? {
            return Ok(true);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(false);
            }
            i -= 1;
            if pick[i] < ids.len() - k + i {
                pick[i] += 1;
                for j in i + 1..k {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Recomputes every catalog property and checks each fixture's
/// incompatibility pattern against the solver over all explicit
/// assignments.
pub fn catalog_selfcheck() -> Result<SelfCheckReport> {
    let catalog = Catalog::load()?;
    let mut report = SelfCheckReport::default();
    for entry in catalog.entries() {
        let name = entry.name;
        let g = &entry.graph;
        let evens = even_circuits(g, DEFAULT_CIRCUIT_CAP)?;
        if evens.len() != entry.even_circuit_count {
            return Err(fixture_err(
                name,
                format!("{} even circuits, expected {}", evens.len(), entry.even_circuit_count),
            ));
        }
        if let Some(shape) = expected_shape(name)? {
            if !isomorphic(g, &shape)? {
                return Err(fixture_err(name, "does not match its construction"));
            }
        }
        if entry.kind == BaseKind::Delta {
            let columns: Vec<EdgeId> = g.edge_ids().collect();
            let rows: Vec<BitVec> = evens
                .iter()
                .map(|c| {
                    BitVec::from_indices(
                        columns.len(),
                        c.edges().iter().map(|e| columns.binary_search(e).unwrap()),
                    )
                })
                .collect();
            let deps = left_nullspace_basis(&Gf2Matrix::new(columns.len(), rows)?);
            if deps.len() != 1 || deps[0].len() != evens.len() {
                return Err(fixture_err(name, format!("dependent sets of even circuits: {deps:?}")));
            }
            if name != "D1" && !contracts_to(&catalog.get("D1").unwrap().graph, g)? {
                return Err(fixture_err(name, "not a contraction of D1"));
            }
        }
        let k = evens.len();
        for mask in 0u32..1 << k {
            let j = ParityAssignment::from_pairs(evens.iter().enumerate().map(|(i, c)| {
                let p = if mask >> i & 1 == 1 { ClockwiseParity::Even } else { ClockwiseParity::Odd };
                (c, p)
            }));
            let compatible = decide(g, &j, DEFAULT_CIRCUIT_CAP)?.is_compatible();
            let expect_incompatible = entry.rule_says_incompatible(mask.count_ones() as usize);
            if compatible == expect_incompatible {
                return Err(fixture_err(
                    name,
                    format!("assignment mask {mask:b}: solver says compatible={compatible}"),
                ));
            }
        }
        report.lines.push(format!(
            "{name}: {} vertices, {} edges, {k} even circuits, {} assignments checked",
            g.vertex_count(),
            g.edge_count(),
            1u32 << k
        ));
    }
    Ok(report)
}
