//! The gadget reduction from CNF satisfiability to non-t-chordality.
//!
//! For a formula over `x_1..x_n` with clauses `C_1..C_m`:
//!
//! * variable `i` gets endpoints `v1`, `v2` joined by two internally
//!   disjoint directed paths `P1`, `P2` of `t` arcs each; `z_j` is the
//!   successor of `v1` on `P_j` and `q_j` the predecessor of `v2`;
//! * clause `i` gets endpoints `u1`, `u2` and, per literal occurrence, a
//!   middle vertex `w` on a path `u1 -> w -> u2`;
//! * the gadgets are chained `v2(i) -> v1(i+1)`, `v2(n) -> u1(1)`,
//!   `u2(i) -> u1(i+1)`, `u2(m) -> v1(1)`;
//! * an occurrence of `x_i` adds the chords `w -> z_2` and `q_2 -> w`
//!   (traversing `P2`, i.e. `x_i = false`, would not be induced), and an
//!   occurrence of `not x_i` adds `w -> z_1` and `q_1 -> w`.
//!
//! Every cycle through a chord has length exactly `t`, and the induced
//! cycles of any other length are exactly the traversals of the chain that
//! pick one path per variable and one true literal per clause. So the
//! digraph is t-chordal iff the formula is unsatisfiable.

use std::fmt;
use std::fmt::Write as _;

use crate::chordality::{is_t_chordal_with_budget, Chordality, InducedCycle};
use crate::cnf::{literal_value, sat_brute_force, Assignment, CnfFormula};
use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

/// Which path the chords of a negated occurrence attach to on the `q` side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegatedChord {
    /// `w -> z_1` and `q_1 -> w`: both chords on `P1`.
    #[default]
    SamePath,
    /// `w -> z_1` and `q_2 -> w`: the chords straddle both paths. This
    /// variant does not give a correct reduction; it is kept so the failure
    /// can be demonstrated.
    Crossed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableGadget {
    pub v1: Vertex,
    pub v2: Vertex,
    /// `v1, z_1, ..., q_1, v2`: `t + 1` vertices.
    pub p1: Vec<Vertex>,
    /// `v1, z_2, ..., q_2, v2`: `t + 1` vertices.
    pub p2: Vec<Vertex>,
}

impl VariableGadget {
    fn path(&self, j: usize) -> &[Vertex] {
        match j {
            1 => &self.p1,
            2 => &self.p2,
            _ => panic!("variable gadgets have paths 1 and 2, not {j}"),
        }
    }

    /// Successor of `v1` on path `j`.
    pub fn z(&self, j: usize) -> Vertex {
        self.path(j)[1]
    }

    /// Predecessor of `v2` on path `j`.
    pub fn q(&self, j: usize) -> Vertex {
        let path = self.path(j);
        path[path.len() - 2]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseGadget {
    pub u1: Vertex,
    pub u2: Vertex,
    /// One middle vertex per literal occurrence, in clause order.
    pub w: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
}

impl GadgetMap {
    /// Lines `var <i> v1=.. v2=.. P1=a,b,.. P2=..` and
    /// `clause <i> u1=.. u2=.. w=a,b,..`.
    pub fn to_text(&self) -> String {
        fn join(seq: &[Vertex]) -> String {
            seq.iter().map(Vertex::to_string).collect::<Vec<_>>().join(",")
        }
        let mut text = String::new();
        for (i, var) in self.variables.iter().enumerate() {
            writeln!(
                text,
                "var {} v1={} v2={} P1={} P2={}",
                i + 1,
                var.v1,
                var.v2,
                join(&var.p1),
                join(&var.p2)
            )
            .unwrap();
        }
        for (i, clause) in self.clauses.iter().enumerate() {
            writeln!(
                text,
                "clause {} u1={} u2={} w={}",
                i + 1,
                clause.u1,
                clause.u2,
                join(&clause.w)
            )
            .unwrap();
        }
        text
    }
}

#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub formula: CnfFormula,
    pub t: usize,
    pub digraph: Digraph,
    pub map: GadgetMap,
    pub negated_chord: NegatedChord,
    /// Notes on clauses with repeated or complementary variables.
    pub warnings: Vec<String>,
}

impl ReductionArtifact {
    /// `2t` per variable plus `2 + |C_i|` per clause.
    pub fn expected_vertex_count(formula: &CnfFormula, t: usize) -> usize {
        formula.variable_count() * 2 * t + formula.clauses().iter().map(|c| 2 + c.len()).sum::<usize>()
    }

    /// Length of the cycle built from a satisfying assignment:
    /// `n(t + 1) + 3m`.
    pub fn long_cycle_length(&self) -> usize {
        self.formula.variable_count() * (self.t + 1) + 3 * self.formula.clause_count()
    }

    /// The path of variable `i` (1-based) that the chords of a literal on
    /// that variable enter at `z`.
    fn chord_entry_path(lit: i32) -> usize {
        if lit > 0 {
            2
        } else {
            1
        }
    }

    /// The cycle `w -> z_j -> ... -> q_j -> w` closed through the chords of
    /// occurrence `position` (0-based) of clause `clause` (0-based), as
    /// `[w, z_j, ..., q_j]`.
    pub fn literal_chord_cycle(&self, clause: usize, position: usize) -> Vec<Vertex> {
        let lit = self.formula.clauses()[clause][position];
        let gadget = &self.map.variables[lit.unsigned_abs() as usize - 1];
        let path = gadget.path(Self::chord_entry_path(lit));
        let mut cycle = vec![self.map.clauses[clause].w[position]];
        cycle.extend_from_slice(&path[1..path.len() - 1]);
        cycle
    }

    /// Every literal-chord cycle, with its clause and position (0-based).
    pub fn literal_chord_cycles(&self) -> Vec<(usize, usize, Vec<Vertex>)> {
        let mut out = Vec::new();
        for (i, clause) in self.formula.clauses().iter().enumerate() {
            for p in 0..clause.len() {
                out.push((i, p, self.literal_chord_cycle(i, p)));
            }
        }
        out
    }
}

/// Builds the reduction digraph with both chords of a negated occurrence on
/// the first path.
pub fn build_reduction(phi: &CnfFormula, t: usize) -> Result<ReductionArtifact> {
    build_reduction_with(phi, t, NegatedChord::SamePath)
}

pub fn build_reduction_with(phi: &CnfFormula, t: usize, negated_chord: NegatedChord) -> Result<ReductionArtifact> {
    if t < 3 {
        return Err(Error::InvalidParameter(format!(
            "t must be at least 3 for the gadget paths to be simple, got {t}"
        )));
    }
    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next
    };

    let mut variables = Vec::with_capacity(phi.variable_count());
    for _ in 0..phi.variable_count() {
        let v1 = fresh();
        let inner1: Vec<Vertex> = (1..t).map(|_| fresh()).collect();
        let inner2: Vec<Vertex> = (1..t).map(|_| fresh()).collect();
        let v2 = fresh();
        let close = |inner: Vec<Vertex>| {
            let mut path = Vec::with_capacity(t + 1);
            path.push(v1);
            path.extend(inner);
            path.push(v2);
            path
        };
        variables.push(VariableGadget {
            v1,
            v2,
            p1: close(inner1),
            p2: close(inner2),
        });
    }
    let mut clauses = Vec::with_capacity(phi.clause_count());
    for clause in phi.clauses() {
        let u1 = fresh();
        let w = clause.iter().map(|_| fresh()).collect();
        let u2 = fresh();
        clauses.push(ClauseGadget { u1, u2, w });
    }
    let vertex_count = next;

    let mut arcs = Vec::new();
    for var in &variables {
        for path in [&var.p1, &var.p2] {
            arcs.extend(path.windows(2).map(|pair| (pair[0], pair[1])));
        }
    }
    for pair in variables.windows(2) {
        arcs.push((pair[0].v2, pair[1].v1));
    }
    for clause in &clauses {
        for &w in &clause.w {
            arcs.push((clause.u1, w));
            arcs.push((w, clause.u2));
        }
    }
    for pair in clauses.windows(2) {
        arcs.push((pair[0].u2, pair[1].u1));
    }
    let (first_var, last_var) = (&variables[0], &variables[variables.len() - 1]);
    let (first_clause, last_clause) = (&clauses[0], &clauses[clauses.len() - 1]);
    arcs.push((last_var.v2, first_clause.u1));
    arcs.push((last_clause.u2, first_var.v1));

    let mut warnings = Vec::new();
    for (i, (clause, gadget)) in phi.clauses().iter().zip(&clauses).enumerate() {
        for (&lit, &w) in clause.iter().zip(&gadget.w) {
            let var = &variables[lit.unsigned_abs() as usize - 1];
            let (entry, exit) = match (lit > 0, negated_chord) {
                (true, _) => (2, 2),
                (false, NegatedChord::SamePath) => (1, 1),
                (false, NegatedChord::Crossed) => (1, 2),
            };
            arcs.push((w, var.z(entry)));
            arcs.push((var.q(exit), w));
        }
        let mut vars: Vec<u32> = clause.iter().map(|lit| lit.unsigned_abs()).collect();
        vars.sort_unstable();
        if vars.windows(2).any(|pair| pair[0] == pair[1]) {
            warnings.push(format!("clause {} mentions a variable more than once", i + 1));
        }
    }

    let digraph = Digraph::new(vertex_count, arcs)?;
    Ok(ReductionArtifact {
        formula: phi.clone(),
        t,
        digraph,
        map: GadgetMap { variables, clauses },
        negated_chord,
        warnings,
    })
}

/// The induced cycle that takes `P1` for true variables and `P2` for false
/// ones, and in each clause the first true literal.
pub fn assignment_to_cycle(art: &ReductionArtifact, assignment: &[bool]) -> Result<InducedCycle> {
    let phi = &art.formula;
    if assignment.len() != phi.variable_count() {
        return Err(Error::InvalidParameter(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            phi.variable_count()
        )));
    }
    if let Some(i) = phi.first_falsified(assignment) {
        return Err(Error::NotSatisfying(i + 1));
    }
    let mut sequence = Vec::with_capacity(art.long_cycle_length());
    for (var, &value) in art.map.variables.iter().zip(assignment) {
        sequence.extend_from_slice(if value { &var.p1 } else { &var.p2 });
    }
    for (clause, gadget) in phi.clauses().iter().zip(&art.map.clauses) {
        let position = clause
            .iter()
            .position(|&lit| literal_value(lit, assignment))
            .expect("satisfied clause has a true literal");
        sequence.extend([gadget.u1, gadget.w[position], gadget.u2]);
    }
    InducedCycle::new(&art.digraph, sequence)
}

/// Reads an assignment off an induced cycle of length other than `t`:
/// `x_i` is true iff the cycle runs through `P1` of variable `i`.
pub fn cycle_to_assignment(art: &ReductionArtifact, cycle: &InducedCycle) -> Result<Assignment> {
    cycle.check(&art.digraph).map_err(Error::InvalidCertificate)?;
    if cycle.len() == art.t {
        return Err(Error::NotALongCycle(format!("cycle has length t = {}", art.t)));
    }
    let mut on_cycle = vec![false; art.digraph.vertex_count()];
    for &v in cycle.vertices() {
        on_cycle[v - 1] = true;
    }
    let mut assignment = Vec::with_capacity(art.map.variables.len());
    for (i, var) in art.map.variables.iter().enumerate() {
        match (on_cycle[var.z(1) - 1], on_cycle[var.z(2) - 1]) {
            (true, false) => assignment.push(true),
            (false, true) => assignment.push(false),
            _ => {
                return Err(Error::NotALongCycle(format!(
                    "cycle does not pass through exactly one path of variable {}",
                    i + 1
                )))
            }
        }
    }
    if let Some(i) = art.formula.first_falsified(&assignment) {
        return Err(Error::NotSatisfying(i + 1));
    }
    Ok(assignment)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    CounterExample,
}

/// Outcome of [`verify_reduction`]: both oracle answers and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    pub verdict: Verdict,
    pub satisfying: Option<Assignment>,
    pub chordality: Chordality,
    /// Why the instance is a counterexample, when it is one.
    pub reason: Option<String>,
}

impl ReductionCheck {
    pub fn is_equivalent(&self) -> bool {
        self.verdict == Verdict::Equivalent
    }
}

impl fmt::Display for ReductionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Equivalent => "Equivalent",
            Verdict::CounterExample => "CounterExample",
        };
        let sat = if self.satisfying.is_some() { "Sat" } else { "Unsat" };
        write!(f, "{verdict}: {sat}, ")?;
        match &self.chordality {
            Chordality::Chordal => write!(f, "Chordal")?,
            Chordality::NotChordal(cycle) => write!(f, "{cycle}")?,
        }
        if let Some(reason) = &self.reason {
            write!(f, " ({reason})")?;
        }
        Ok(())
    }
}

/// Checks the reduction on one formula against the brute-force oracles.
/// `budget` bounds the induced-cycle search in search nodes.
pub fn verify_reduction(phi: &CnfFormula, t: usize, budget: Option<u64>) -> Result<ReductionCheck> {
    verify_reduction_with(phi, t, budget, NegatedChord::SamePath)
}

pub fn verify_reduction_with(
    phi: &CnfFormula,
    t: usize,
    budget: Option<u64>,
    negated_chord: NegatedChord,
) -> Result<ReductionCheck> {
    let satisfying = sat_brute_force(phi)?;
    let art = build_reduction_with(phi, t, negated_chord)?;
    let chordality = is_t_chordal_with_budget(&art.digraph, t, budget)?;

    let reason = match (&satisfying, &chordality) {
        (None, Chordality::Chordal) => None,
        (None, Chordality::NotChordal(cycle)) => Some(format!("unsatisfiable but {cycle} has length != t")),
        (Some(_), Chordality::Chordal) => Some("satisfiable but t-chordal".to_string()),
        (Some(assignment), Chordality::NotChordal(witness)) => round_trip(&art, assignment, witness).err(),
    };
    Ok(ReductionCheck {
        verdict: if reason.is_none() {
            Verdict::Equivalent
        } else {
            Verdict::CounterExample
        },
        satisfying,
        chordality,
        reason,
    })
}

fn round_trip(art: &ReductionArtifact, assignment: &[bool], witness: &InducedCycle) -> std::result::Result<(), String> {
    let cycle = assignment_to_cycle(art, assignment).map_err(|e| format!("assignment to cycle: {e}"))?;
    if cycle.len() != art.long_cycle_length() {
        return Err(format!(
            "cycle from assignment has length {}, expected {}",
            cycle.len(),
            art.long_cycle_length()
        ));
    }
    let back = cycle_to_assignment(art, &cycle).map_err(|e| format!("cycle to assignment: {e}"))?;
    if back != assignment {
        return Err("cycle does not decode to its assignment".into());
    }
    cycle_to_assignment(art, witness).map_err(|e| format!("witness {witness} does not decode: {e}"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::{is_t_chordal, shorten_to_induced};

    fn formula(n: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn vertex_counts() {
        let phi = formula(3, &[&[1, 2, 3]]);
        let art = build_reduction(&phi, 3).unwrap();
        assert_eq!(art.digraph.vertex_count(), 23);
        assert_eq!(ReductionArtifact::expected_vertex_count(&phi, 3), 23);
    }

    #[test]
    fn negated_occurrence_chords() {
        let art = build_reduction(&formula(1, &[&[-1]]), 3).unwrap();
        let var = &art.map.variables[0];
        let w = art.map.clauses[0].w[0];
        assert!(art.digraph.has_arc(w, var.z(1)));
        assert!(art.digraph.has_arc(var.q(1), w));
        assert!(!art.digraph.is_adjacent(w, var.z(2)));
        assert!(!art.digraph.is_adjacent(w, var.q(2)));
    }

    #[test]
    fn crossed_negated_chords() {
        let art = build_reduction_with(&formula(1, &[&[-1]]), 3, NegatedChord::Crossed).unwrap();
        let var = &art.map.variables[0];
        let w = art.map.clauses[0].w[0];
        assert!(art.digraph.has_arc(w, var.z(1)));
        assert!(art.digraph.has_arc(var.q(2), w));
    }

    #[test]
    fn small_t_is_rejected() {
        assert!(matches!(
            build_reduction(&formula(1, &[&[1]]), 2),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn numbering_layout() {
        let art = build_reduction(&formula(1, &[&[1, -1]]), 3).unwrap();
        let var = &art.map.variables[0];
        assert_eq!(var.p1, vec![1, 2, 3, 6]);
        assert_eq!(var.p2, vec![1, 4, 5, 6]);
        assert_eq!(
            art.map.clauses[0],
            ClauseGadget {
                u1: 7,
                u2: 10,
                w: vec![8, 9]
            }
        );
        assert_eq!(
            art.map.to_text(),
            "var 1 v1=1 v2=6 P1=1,2,3,6 P2=1,4,5,6\nclause 1 u1=7 u2=10 w=8,9\n"
        );
        assert_eq!(art.warnings.len(), 1);
    }

    #[test]
    fn assignment_to_cycle_examples() {
        let art = build_reduction(&formula(1, &[&[1]]), 3).unwrap();
        let cycle = assignment_to_cycle(&art, &[true]).unwrap();
        assert_eq!(cycle.len(), 7);
        assert_eq!(cycle_to_assignment(&art, &cycle), Ok(vec![true]));
        assert_eq!(assignment_to_cycle(&art, &[false]), Err(Error::NotSatisfying(1)));

        let art = build_reduction(&formula(2, &[&[1, 2], &[-1, -2]]), 4).unwrap();
        let cycle = assignment_to_cycle(&art, &[false, true]).unwrap();
        assert_eq!(cycle.len(), 16);
        let on = |v| cycle.vertices().contains(&v);
        assert!(on(art.map.variables[0].z(2)) && on(art.map.variables[1].z(1)));
        assert_eq!(cycle_to_assignment(&art, &cycle), Ok(vec![false, true]));
    }

    #[test]
    fn chord_cycle_is_not_long() {
        let art = build_reduction(&formula(1, &[&[1]]), 3).unwrap();
        let chord = InducedCycle::new(&art.digraph, art.literal_chord_cycle(0, 0)).unwrap();
        assert_eq!(chord.len(), 3);
        assert!(matches!(
            cycle_to_assignment(&art, &chord),
            Err(Error::NotALongCycle(_))
        ));
    }

    #[test]
    fn verify_examples() {
        let check = verify_reduction(&formula(1, &[&[1], &[-1]]), 3, None).unwrap();
        assert_eq!(check.to_string(), "Equivalent: Unsat, Chordal");
        let check = verify_reduction(&formula(1, &[&[1]]), 3, None).unwrap();
        assert!(check.is_equivalent());
        match check.chordality {
            Chordality::NotChordal(c) => assert_eq!(c.len(), 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn contradiction_is_chordal() {
        let art = build_reduction(&formula(1, &[&[1], &[-1]]), 3).unwrap();
        assert_eq!(is_t_chordal(&art.digraph, 3), Ok(Chordality::Chordal));
    }

    #[test]
    fn t2_shortcut_agrees_on_reduction_digraph() {
        let art = build_reduction(&formula(1, &[&[1]]), 3).unwrap();
        let cycle = art.digraph.find_cycle().unwrap();
        let induced = shorten_to_induced(&art.digraph, cycle);
        assert!(InducedCycle::new(&art.digraph, induced).is_ok());
    }
}
