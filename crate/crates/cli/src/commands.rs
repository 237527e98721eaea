use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::Args;
use clockwise::arcs::{decompose as build_decomposition, validate, ArcDecomposition, Construction};
use clockwise::catalog::{catalog_selfcheck, Catalog};
use clockwise::circuits::{even_circuit_connectivity, Circuit, ClockwiseParity, EvenCircuitConnectivity};
use clockwise::corpus::{
    brute_force_orientation, random_assignment, random_connected, seeded_rng, small_multigraphs, DEFAULT_SEED,
    MAX_BRUTE_FORCE_EDGES,
};
use clockwise::format::{emit_graph, parse_assignment, parse_graph, to_dot};
use clockwise::graph::{EdgeId, Multigraph, Orientation};
use clockwise::pfaffian::{enumerate_perfect_matchings, find_pfaffian_orientation, kasteleyn_count};
use clockwise::scan::{scan_all_even, scan_all_odd, scan_theorem_main, verify_witness, ForbiddenWitness, ScanBudget};
use clockwise::solver::{decide, IntractableCertificate, ParityAssignment, Verdict};
use clockwise::transforms::TraceStep;
use clockwise::{Error, Result};

use crate::Uniform;

pub const DEFAULT_MAX_CIRCUITS: usize = 100_000;
pub const DEFAULT_MAX_SUBSETS: u64 = 5_000_000;
pub const DEFAULT_MAX_MATCHINGS: usize = 100_000;

pub fn load_graph(text: &str) -> Result<Multigraph> {
    parse_graph(text)
}

/// The assignment from a file or a uniform flag; exactly one is required.
pub fn load_assignment(g: &Multigraph, text: Option<&str>, uniform: Uniform) -> Result<ParityAssignment> {
    match (text, uniform.all_odd, uniform.all_even) {
        (Some(t), false, false) => parse_assignment(t, Some(g)),
        (None, true, false) => Ok(ParityAssignment::AllOdd),
        (None, false, true) => Ok(ParityAssignment::AllEven),
        (None, false, false) => Err(Error::Input(
            "an assignment file or one of --all-odd, --all-even is required".into(),
        )),
        _ => Err(Error::Input("give either an assignment file or a uniform flag, not both".into())),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Resource(format!("write failed: {e}"))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(io)
}

fn write_dot(path: Option<&Path>, dot: impl FnOnce() -> String) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, dot()).map_err(|e| Error::Resource(format!("{}: {e}", p.display()))),
        None => Ok(()),
    }
}

fn id_list(s: &mut String, ids: &[EdgeId]) {
    write!(s, "{}", ids.len()).unwrap();
    for id in ids {
        write!(s, " {id}").unwrap();
    }
    s.push('\n');
}

fn circuit_line(s: &mut String, c: &Circuit, p: ClockwiseParity) {
    write!(s, "j {p} ").unwrap();
    id_list(s, c.edges());
}

fn orientation_block(s: &mut String, o: &Orientation) {
    for (id, t, h) in o.arcs() {
        writeln!(s, "a {id} {t} {h}").unwrap();
    }
}

fn certificate_block(s: &mut String, cert: &IntractableCertificate) {
    writeln!(s, "s {}", cert.circuits.len()).unwrap();
    for (c, &p) in cert.circuits.iter().zip(&cert.prescribed) {
        circuit_line(s, c, p);
    }
    writeln!(s, "observed-even {}", cert.observed_even_count).unwrap();
    writeln!(s, "prescribed-even {}", cert.prescribed_even_count).unwrap();
}

fn certificate_edges(cert: &IntractableCertificate) -> BTreeSet<EdgeId> {
    cert.circuits.iter().flat_map(|c| c.edges().iter().copied()).collect()
}

pub fn check(
    g: &Multigraph,
    j: &ParityAssignment,
    cap: usize,
    dot: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8> {
    let mut s = String::new();
    let status = match decide(g, j, cap)? {
        Verdict::Compatible(o) => {
            s.push_str("COMPATIBLE\n");
            orientation_block(&mut s, &o);
            write_dot(dot, || to_dot(g, &BTreeSet::new(), Some(&o)))?;
            0
        }
        Verdict::Incompatible(cert) => {
            s.push_str("INCOMPATIBLE\n");
            certificate_block(&mut s, &cert);
            write_dot(dot, || to_dot(g, &certificate_edges(&cert), None))?;
            1
        }
    };
    emit(out, &s)?;
    Ok(status)
}

fn witness_block(s: &mut String, w: &ForbiddenWitness) {
    writeln!(s, "WITNESS {}", w.base_name).unwrap();
    s.push_str("subgraph ");
    id_list(s, &w.subgraph_edges);
    if let Some(c) = &w.odd_circuit_contracted {
        s.push_str("contracted ");
        id_list(s, c);
    }
    for step in &w.splitting_trace.steps {
        match step {
            TraceStep::Degree2Contraction { vertex, edges } => {
                writeln!(s, "step split {vertex} {} {}", edges.0, edges.1).unwrap();
            }
            TraceStep::OddCircuitContraction { edges } => {
                s.push_str("step odd ");
                id_list(s, edges);
            }
        }
    }
    for (c, &p) in w.circuits.iter().zip(&w.circuit_parities) {
        circuit_line(s, c, p);
    }
}

pub fn scan(
    g: &Multigraph,
    j: &ParityAssignment,
    budget: ScanBudget,
    cross_check: bool,
    dot: Option<&Path>,
    out: &mut dyn Write,
) -> Result<u8> {
    let outcome = match j {
        ParityAssignment::AllOdd => scan_all_odd(g, budget)?,
        ParityAssignment::AllEven => scan_all_even(g, budget)?,
        explicit => scan_theorem_main(g, explicit, budget)?,
    };
    let mut s = String::new();
    let status = match outcome.witness() {
        Some(w) => {
            verify_witness(g, j, w, budget.circuit_cap)?;
            witness_block(&mut s, w);
            let edges: BTreeSet<EdgeId> = w.subgraph_edges.iter().copied().collect();
            write_dot(dot, || to_dot(g, &edges, None))?;
            1
        }
        None => {
            s.push_str("NO-WITNESS\n");
            write_dot(dot, || to_dot(g, &BTreeSet::new(), None))?;
            0
        }
    };
    if cross_check {
        let compatible = decide(g, j, budget.circuit_cap)?.is_compatible();
        if compatible != outcome.witness().is_none() {
            return Err(Error::Contract(format!(
                "scanner and solver disagree: witness {}, solver says {}",
                if compatible { "found" } else { "missing" },
                if compatible { "compatible" } else { "incompatible" },
            )));
        }
        writeln!(s, "cross-check {}", if compatible { "COMPATIBLE" } else { "INCOMPATIBLE" }).unwrap();
    }
    emit(out, &s)?;
    Ok(status)
}

fn decomposition_block(s: &mut String, d: &ArcDecomposition) {
    let how = match d.construction {
        Construction::Greedy => "greedy",
        Construction::Surgery => "surgery",
        Construction::PairSearch => "pair-search",
    };
    writeln!(s, "DECOMPOSITION {} {how}", d.stages.len()).unwrap();
    s.push_str("stage 0 ");
    id_list(s, &d.stages[0]);
    for (i, a) in d.adjunctions.iter().enumerate() {
        write!(s, "stage {} ", i + 1).unwrap();
        id_list(s, &d.stages[i + 1]);
        write!(s, "adjoin {} ", i + 1).unwrap();
        id_list(s, a.circuit.edges());
        for arc in &a.arcs {
            s.push_str("arc");
            for (k, v) in arc.vertices.iter().enumerate() {
                write!(s, " {v}").unwrap();
                if let Some(e) = arc.edges.get(k) {
                    write!(s, " ({e})").unwrap();
                }
            }
            s.push('\n');
        }
    }
}

pub fn decompose(g: &Multigraph, check: bool, cap: usize, out: &mut dyn Write) -> Result<u8> {
    let mut s = String::new();
    if g.has_isolated_vertex() {
        return Err(Error::Input("graph has an isolated vertex".into()));
    }
    if let EvenCircuitConnectivity::Split { part, rest } = even_circuit_connectivity(g, cap)? {
        s.push_str("NOT-EVEN-CIRCUIT-CONNECTED\n");
        s.push_str("part ");
        id_list(&mut s, &part);
        s.push_str("rest ");
        id_list(&mut s, &rest);
        emit(out, &s)?;
        return Ok(1);
    }
    let d = build_decomposition(g, cap)?;
    decomposition_block(&mut s, &d);
    if check {
        validate(g, &d, cap).map_err(|v| Error::Contract(format!("decomposition invalid: {v}")))?;
        s.push_str("valid\n");
    }
    emit(out, &s)?;
    Ok(0)
}

pub fn pfaffian(g: &Multigraph, brute: bool, cap: usize, dot: Option<&Path>, out: &mut dyn Write) -> Result<u8> {
    let mut s = String::new();
    let status = match find_pfaffian_orientation(g, cap)? {
        Verdict::Compatible(o) => {
            let count = kasteleyn_count(g, &o)?;
            s.push_str("PFAFFIAN\n");
            writeln!(s, "count {count}").unwrap();
            orientation_block(&mut s, &o);
            if brute {
                let n = enumerate_perfect_matchings(g, cap)?.len() as u128;
                if n != count {
                    return Err(Error::Contract(format!("determinant gives {count}, enumeration gives {n}")));
                }
                writeln!(s, "brute-count {n}").unwrap();
            }
            write_dot(dot, || to_dot(g, &BTreeSet::new(), Some(&o)))?;
            0
        }
        Verdict::Incompatible(cert) => {
            s.push_str("NOT-PFAFFIAN\n");
            certificate_block(&mut s, &cert);
            if brute {
                writeln!(s, "brute-count {}", enumerate_perfect_matchings(g, cap)?.len()).unwrap();
            }
            write_dot(dot, || to_dot(g, &certificate_edges(&cert), None))?;
            1
        }
    };
    emit(out, &s)?;
    Ok(status)
}

pub fn catalog(name: Option<&str>, selfcheck: bool, out: &mut dyn Write) -> Result<u8> {
    let mut s = String::new();
    if selfcheck {
        let report = catalog_selfcheck()?;
        for line in &report.lines {
            writeln!(s, "{line}").unwrap();
        }
        s.push_str("selfcheck ok\n");
    } else if let Some(name) = name {
        let cat = Catalog::standard();
        let entry = cat
            .get(name)
            .ok_or_else(|| Error::Input(format!("no catalog graph named {name}")))?;
        s.push_str(&emit_graph(&entry.graph));
    } else {
        for e in Catalog::standard().entries() {
            let rule = match e.incompatible_when() {
                Some(p) => format!("incompatible-when-{p}"),
                None => "always-compatible".into(),
            };
            writeln!(
                s,
                "{} {} {} {} {rule}",
                e.name,
                e.graph.vertex_count(),
                e.graph.edge_count(),
                e.even_circuit_count
            )
            .unwrap();
        }
    }
    emit(out, &s)?;
    Ok(0)
}

#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    /// Draw this many random graphs instead of the exhaustive family.
    #[arg(long)]
    pub random: Option<usize>,
    /// Smallest vertex count of random graphs.
    #[arg(long, default_value_t = 7)]
    pub min_vertices: usize,
    /// Largest vertex count (default 5 exhaustive, 8 random).
    #[arg(long)]
    pub max_vertices: Option<usize>,
    /// Largest edge count (default 8 exhaustive, 16 random).
    #[arg(long)]
    pub max_edges: Option<usize>,
    /// Leave loops out of the exhaustive family.
    #[arg(long)]
    pub no_loops: bool,
    /// Random explicit assignments per graph, besides the two uniform ones.
    #[arg(long, default_value_t = 5)]
    pub assignments: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Print the graphs instead of checking them.
    #[arg(long)]
    pub emit: bool,
}

#[derive(Default)]
struct GraphReport {
    assignments: usize,
    incompatible: usize,
    brute_checked: usize,
    decomposed: usize,
    problems: Vec<String>,
}

fn corpus_graphs(args: &CorpusArgs) -> Vec<Multigraph> {
    match args.random {
        Some(count) => {
            let hi = args.max_vertices.unwrap_or(8).max(args.min_vertices.max(1));
            random_connected(args.seed, count, args.min_vertices.max(1)..=hi, args.max_edges.unwrap_or(16))
        }
        None => small_multigraphs(args.max_vertices.unwrap_or(5), args.max_edges.unwrap_or(8), !args.no_loops),
    }
}

fn check_graph(g: &Multigraph, index: usize, args: &CorpusArgs) -> Result<GraphReport> {
    let cap = DEFAULT_MAX_CIRCUITS;
    let budget = ScanBudget::default();
    // one stream per graph so the result does not depend on --jobs
    let mut rng = seeded_rng(args.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut js = vec![ParityAssignment::AllOdd, ParityAssignment::AllEven];
    for _ in 0..args.assignments {
        js.push(random_assignment(g, &mut rng, cap)?);
    }
    let mut r = GraphReport::default();
    for (k, j) in js.iter().enumerate() {
        r.assignments += 1;
        let compatible = decide(g, j, cap)?.is_compatible();
        r.incompatible += !compatible as usize;
        if g.edge_count() <= MAX_BRUTE_FORCE_EDGES {
            r.brute_checked += 1;
            if brute_force_orientation(g, j, cap)?.is_some() != compatible {
                r.problems.push(format!("assignment {k}: solver and exhaustive search disagree"));
            }
        }
        let main = scan_theorem_main(g, j, budget)?;
        if main.witness().is_some() == compatible {
            r.problems.push(format!("assignment {k}: scanner and solver disagree"));
        }
        if let Some(w) = main.witness() {
            if let Err(e) = verify_witness(g, j, w, cap) {
                r.problems.push(format!("assignment {k}: witness fails verification: {e}"));
            }
        }
        let uniform = match j {
            ParityAssignment::AllOdd => Some(scan_all_odd(g, budget)?),
            ParityAssignment::AllEven => Some(scan_all_even(g, budget)?),
            ParityAssignment::Explicit { .. } => None,
        };
        if uniform.is_some_and(|u| u.witness().is_some() == compatible) {
            r.problems.push(format!("assignment {k}: uniform scanner and solver disagree"));
        }
    }
    if !g.has_isolated_vertex() && even_circuit_connectivity(g, cap)?.is_connected() {
        let d = build_decomposition(g, cap)?;
        r.decomposed += 1;
        if let Err(v) = validate(g, &d, cap) {
            r.problems.push(format!("decomposition invalid: {v}"));
        }
    }
    Ok(r)
}

pub fn corpus(args: &CorpusArgs, out: &mut dyn Write) -> Result<u8> {
    let graphs = corpus_graphs(args);
    if args.emit {
        for (i, g) in graphs.iter().enumerate() {
            emit(out, &format!("c graph {i}\n{}", emit_graph(g)))?;
        }
        return Ok(0);
    }
    let slots: Mutex<Vec<Option<Result<GraphReport>>>> = Mutex::new((0..graphs.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..args.jobs.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= graphs.len() {
                    break;
                }
                let report = check_graph(&graphs[i], i, args);
                slots.lock().unwrap()[i] = Some(report);
            });
        }
    });
    let mut s = String::new();
    let mut total = GraphReport::default();
    for (i, slot) in slots.into_inner().unwrap().into_iter().enumerate() {
        let r = slot.expect("every graph is checked")?;
        total.assignments += r.assignments;
        total.incompatible += r.incompatible;
        total.brute_checked += r.brute_checked;
        total.decomposed += r.decomposed;
        for p in r.problems {
            writeln!(s, "mismatch {i} {p}").unwrap();
            total.problems.push(p);
        }
    }
    writeln!(s, "graphs {}", graphs.len()).unwrap();
    writeln!(s, "assignments {}", total.assignments).unwrap();
    writeln!(s, "incompatible {}", total.incompatible).unwrap();
    writeln!(s, "brute-checked {}", total.brute_checked).unwrap();
    writeln!(s, "decomposed {}", total.decomposed).unwrap();
    writeln!(s, "mismatches {}", total.problems.len()).unwrap();
    emit(out, &s)?;
    Ok(if total.problems.is_empty() { 0 } else { 1 })
}
