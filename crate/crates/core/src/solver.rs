//! Deciding whether a graph has an orientation in which every even circuit
//! has a prescribed clockwise parity.
//!
//! Fix the reference orientation. Reversing a set of edges X changes the
//! clockwise parity of an even circuit C exactly when |X ∩ C| is odd, so a
//! compatible orientation is a GF(2) solution of one equation per even
//! circuit: the sum of C's edge variables is 1 iff C's current parity is not
//! the prescribed one. An unsolvable system comes with a set of equations
//! whose left sides cancel and whose right sides sum to 1; the matching
//! circuits have empty symmetric difference and disagree with the
//! prescription in their count of clockwise even members, whatever the
//! orientation.

use std::collections::{BTreeMap, BTreeSet};

use crate::circuits::{clockwise_parity, even_circuits, Circuit, ClockwiseParity};
use crate::error::{Error, Result};
use crate::gf2::{solve, BitVec, Gf2Matrix, Solution};
use crate::graph::{EdgeId, Multigraph, Orientation};

/// Target clockwise parity for each even circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParityAssignment {
    AllOdd,
    AllEven,
    /// Keys are sorted edge sets of even circuits. Circuits missing from
    /// the map take `default` when it is set and are an error otherwise.
    Explicit {
        map: BTreeMap<Vec<EdgeId>, ClockwiseParity>,
        default: Option<ClockwiseParity>,
    },
}

impl ParityAssignment {
    pub fn explicit(map: BTreeMap<Vec<EdgeId>, ClockwiseParity>) -> Self {
        ParityAssignment::Explicit { map, default: None }
    }

    pub fn uniform(p: ClockwiseParity) -> Self {
        match p {
            ClockwiseParity::Odd => ParityAssignment::AllOdd,
            ClockwiseParity::Even => ParityAssignment::AllEven,
        }
    }

    /// The same assignment with unlisted circuits filled by `default`.
    pub fn with_default(self, default: ClockwiseParity) -> Self {
        match self {
            ParityAssignment::Explicit { map, .. } => ParityAssignment::Explicit {
                map,
                default: Some(default),
            },
            other => other,
        }
    }

    /// Builds an explicit assignment from a list of circuits and parities.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a Circuit, ClockwiseParity)>) -> Self {
        ParityAssignment::explicit(
            pairs
                .into_iter()
                .map(|(c, p)| (c.edges().to_vec(), p))
                .collect(),
        )
    }

    pub fn prescribed(&self, circuit: &[EdgeId]) -> Result<ClockwiseParity> {
        match self {
            ParityAssignment::AllOdd => Ok(ClockwiseParity::Odd),
            ParityAssignment::AllEven => Ok(ClockwiseParity::Even),
            ParityAssignment::Explicit { map, default } => {
                map.get(circuit).copied().or(*default).ok_or_else(|| {
                    Error::Input(format!(
                        "assignment has no parity for even circuit {:?}",
                        circuit
                    ))
                })
            }
        }
    }

    /// Checks that every listed key is an even circuit of `g`.
    pub fn check_keys(&self, g: &Multigraph) -> Result<()> {
        if let ParityAssignment::Explicit { map, .. } = self {
            for key in map.keys() {
                let c = Circuit::from_edges(g, key.iter().copied())?;
                if !c.is_even() {
                    return Err(Error::Input(format!(
                        "assignment lists the odd circuit {c}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One GF(2) equation per constrained circuit over the edges those circuits use.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub matrix: Gf2Matrix,
    pub rhs: BitVec,
    /// Row i constrains `circuits[i]`.
    pub circuits: Vec<Circuit>,
    pub targets: Vec<ClockwiseParity>,
    /// Column j is edge `columns[j]`.
    pub columns: Vec<EdgeId>,
    pub base: Orientation,
}

pub fn build_system(
    g: &Multigraph,
    j: &ParityAssignment,
    base: &Orientation,
    cap: usize,
) -> Result<ConstraintSystem> {
    let circuits = even_circuits(g, cap)?;
    let targets = circuits
        .iter()
        .map(|c| j.prescribed(c.edges()))
        .collect::<Result<Vec<_>>>()?;
    system_for_circuits(base, circuits, targets)
}

/// Constraint system for an arbitrary family of even circuits.
pub fn system_for_circuits(
    base: &Orientation,
    circuits: Vec<Circuit>,
    targets: Vec<ClockwiseParity>,
) -> Result<ConstraintSystem> {
    let columns: Vec<EdgeId> = circuits
        .iter()
        .flat_map(|c| c.edges().iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let col_of: BTreeMap<EdgeId, usize> = columns.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut rows = Vec::with_capacity(circuits.len());
    let mut rhs = BitVec::zeros(circuits.len());
    for (i, (c, &t)) in circuits.iter().zip(&targets).enumerate() {
        rows.push(BitVec::from_indices(columns.len(), c.edges().iter().map(|e| col_of[e])));
        if clockwise_parity(base, c)? != t {
            rhs.set(i, true);
        }
    }
    Ok(ConstraintSystem {
        matrix: Gf2Matrix::new(columns.len(), rows)?,
        rhs,
        circuits,
        targets,
        columns,
        base: base.clone(),
    })
}

/// A set of even circuits with empty symmetric difference whose number of
/// clockwise even members has the wrong parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntractableCertificate {
    pub circuits: Vec<Circuit>,
    pub prescribed: Vec<ClockwiseParity>,
    /// Clockwise even members under the reference orientation.
    pub observed_even_count: usize,
    /// Members prescribed to be clockwise even.
    pub prescribed_even_count: usize,
}

impl IntractableCertificate {
    pub fn observed_parity(&self) -> ClockwiseParity {
        ClockwiseParity::of_count(self.observed_even_count)
    }

    pub fn prescribed_parity(&self) -> ClockwiseParity {
        ClockwiseParity::of_count(self.prescribed_even_count)
    }

    /// Clockwise even members under `o`.
    pub fn even_count_under(&self, o: &Orientation) -> Result<usize> {
        let mut n = 0;
        for c in &self.circuits {
            if clockwise_parity(o, c)?.is_even() {
                n += 1;
            }
        }
        Ok(n)
    }

    pub fn symmetric_difference_is_empty(&self) -> bool {
        let mut acc: BTreeSet<EdgeId> = BTreeSet::new();
        for c in &self.circuits {
            for &e in c.edges() {
                if !acc.insert(e) {
                    acc.remove(&e);
                }
            }
        }
        acc.is_empty()
    }

    /// Re-checks both defining conditions with the counts taken under `o`.
    pub fn holds_under(&self, o: &Orientation) -> Result<bool> {
        Ok(self.symmetric_difference_is_empty()
            && self.even_count_under(o)? % 2 != self.prescribed_even_count % 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Compatible(Orientation),
    Incompatible(IntractableCertificate),
}

impl Verdict {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Verdict::Compatible(_))
    }
}

/// Solves a constraint system, producing an orientation or a minimised
/// certificate.
pub fn solve_system(g: &Multigraph, sys: &ConstraintSystem) -> Result<Verdict> {
    match solve(&sys.matrix, &sys.rhs)? {
        Solution::Solved(x) => {
            let mut o = sys.base.clone();
            for j in x.ones() {
                o.reverse(sys.columns[j])?;
            }
            debug_assert!(o.orients(g));
            Ok(Verdict::Compatible(o))
        }
        Solution::Inconsistent(inc) => {
            let rows = minimise(sys, inc.row_combination)?;
            certificate_from_rows(sys, &rows).map(Verdict::Incompatible)
        }
    }
}

// Shrinks a dependency with odd right-hand side to an inclusion-minimal one
// by re-solving with each member left out in turn.
fn minimise(sys: &ConstraintSystem, mut rows: Vec<usize>) -> Result<Vec<usize>> {
    let mut k = 0;
    while k < rows.len() {
        let kept: Vec<usize> = rows.iter().copied().filter(|&r| r != rows[k]).collect();
        let sub = Gf2Matrix::new(
            sys.matrix.width(),
            kept.iter().map(|&r| sys.matrix.rows()[r].clone()).collect(),
        )?;
        let rhs = BitVec::from_bools(&kept.iter().map(|&r| sys.rhs.get(r)).collect::<Vec<_>>());
        match solve(&sub, &rhs)? {
            Solution::Inconsistent(inc) => {
                rows = inc.row_combination.iter().map(|&i| kept[i]).collect();
                k = 0;
            }
            Solution::Solved(_) => k += 1,
        }
    }
    Ok(rows)
}

fn certificate_from_rows(sys: &ConstraintSystem, rows: &[usize]) -> Result<IntractableCertificate> {
    let circuits: Vec<Circuit> = rows.iter().map(|&r| sys.circuits[r].clone()).collect();
    let prescribed: Vec<ClockwiseParity> = rows.iter().map(|&r| sys.targets[r]).collect();
    let mut observed_even_count = 0;
    for c in &circuits {
        if clockwise_parity(&sys.base, c)?.is_even() {
            observed_even_count += 1;
        }
    }
    let cert = IntractableCertificate {
        circuits,
        prescribed_even_count: prescribed.iter().filter(|p| p.is_even()).count(),
        prescribed,
        observed_even_count,
    };
    debug_assert!(cert.holds_under(&sys.base).unwrap());
    Ok(cert)
}

/// Finds a compatible orientation or an intractable set. Edges on no even
/// circuit keep the reference direction.
pub fn decide(g: &Multigraph, j: &ParityAssignment, cap: usize) -> Result<Verdict> {
    let base = Orientation::reference(g);
    let sys = build_system(g, j, &base, cap)?;
    solve_system(g, &sys)
}

/// Returns the first even circuit (in enumeration order) whose clockwise
/// parity under `o` differs from the prescription, if any.
pub fn verify_orientation(
    g: &Multigraph,
    j: &ParityAssignment,
    o: &Orientation,
    cap: usize,
) -> Result<Option<Circuit>> {
    if !o.orients(g) {
        return Err(Error::Input("orientation does not match the graph".into()));
    }
    for c in even_circuits(g, cap)? {
        if clockwise_parity(o, &c)? != j.prescribed(c.edges())? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Checks the intractability conditions for a set of edge sets under the
/// reference orientation.
pub fn is_intractable_set(
    g: &Multigraph,
    j: &ParityAssignment,
    circuits: &[Vec<EdgeId>],
) -> Result<bool> {
    let base = Orientation::reference(g);
    let mut parity_gap = 0usize;
    let mut acc: BTreeSet<EdgeId> = BTreeSet::new();
    for ids in circuits {
        let c = Circuit::from_edges(g, ids.iter().copied())?;
        if !c.is_even() {
            return Err(Error::Input(format!("{c} is not an even circuit")));
        }
        if clockwise_parity(&base, &c)?.is_even() {
            parity_gap += 1;
        }
        if j.prescribed(c.edges())?.is_even() {
            parity_gap += 1;
        }
        for &e in c.edges() {
            if !acc.insert(e) {
                acc.remove(&e);
            }
        }
    }
    Ok(!circuits.is_empty() && acc.is_empty() && parity_gap % 2 == 1)
}
