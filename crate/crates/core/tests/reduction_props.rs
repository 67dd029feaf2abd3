mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tchordal::chordality::{Chordality, InducedCycle};
use tchordal::cnf::{parse_dimacs_cnf, sat_brute_force, CnfFormula};
use tchordal::reduction::*;

use common::*;

fn random_cnf(rng: &mut impl Rng, max_n: usize, max_m: usize, max_len: usize) -> CnfFormula {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let clauses = (0..m)
        .map(|_| {
            (0..rng.gen_range(1..=max_len))
                .map(|_| {
                    let v = rng.gen_range(1..=n as i32);
                    if rng.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn built_instances_are_well_formed(seed in any::<u64>(), t in 3usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_cnf(&mut rng, 3, 3, 3);
        let art = build_reduction(&phi, t).unwrap();
        prop_assert!(check_simple(&art.digraph).is_ok());
        let expected = 2 * t * phi.variable_count()
            + phi.clauses().iter().map(|c| c.len() + 2).sum::<usize>();
        prop_assert_eq!(art.digraph.vertex_count(), expected);
        for var in &art.map.variables {
            prop_assert_eq!(var.p1.len(), t + 1);
            prop_assert_eq!(var.p2.len(), t + 1);
            prop_assert!(is_induced_path(&art.digraph, &var.p1));
            prop_assert!(is_induced_path(&art.digraph, &var.p2));
        }
        for (_, _, cycle) in art.literal_chord_cycles() {
            prop_assert_eq!(cycle.len(), t);
            prop_assert!(is_induced_cycle(&art.digraph, &cycle));
        }
    }

    #[test]
    fn satisfying_assignments_give_long_induced_cycles(seed in any::<u64>(), t in 3usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_cnf(&mut rng, 3, 3, 3);
        let art = build_reduction(&phi, t).unwrap();
        let n = phi.variable_count();
        for code in 0u32..1 << n {
            let assignment: Vec<bool> = (0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect();
            let cycle = assignment_to_cycle(&art, &assignment);
            if phi.is_satisfied_by(&assignment) {
                let cycle = cycle.unwrap();
                prop_assert_eq!(cycle.len(), n * (t + 1) + 3 * phi.clause_count());
                prop_assert!(is_induced_cycle(&art.digraph, cycle.vertices()));
                prop_assert_eq!(cycle_to_assignment(&art, &cycle).unwrap(), assignment);
            } else {
                prop_assert!(cycle.is_err());
            }
        }
    }

    #[test]
    fn verdict_agrees_with_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_cnf(&mut rng, 3, 3, 3);
        let check = verify_reduction(&phi, 3, None).unwrap();
        prop_assert!(check.is_equivalent(), "{}", check);
        prop_assert_eq!(check.satisfying.is_some(), sat_brute_force(&phi).unwrap().is_some());
        if let Chordality::NotChordal(c) = &check.chordality {
            let art = build_reduction(&phi, 3).unwrap();
            prop_assert!(is_induced_cycle(&art.digraph, c.vertices()));
        }
    }
}

#[test]
fn foreign_cycle_does_not_decode() {
    let phi = parse_dimacs_cnf("p cnf 1 1\n1 0\n").unwrap();
    let art = build_reduction(&phi, 3).unwrap();
    let (_, _, chord) = art.literal_chord_cycles().remove(0);
    let cycle = InducedCycle::new(&art.digraph, chord).unwrap();
    assert!(cycle_to_assignment(&art, &cycle).is_err());
}

/// Reading the negated-occurrence chord as leaving the other path breaks
/// the equivalence: some small formula becomes a counterexample.
#[test]
fn crossed_negated_chords_admit_counterexamples() {
    let mut found = None;
    'outer: for n in 1..=2usize {
        let lits: Vec<i32> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
        let mut clauses: Vec<Vec<i32>> = lits.iter().map(|&l| vec![l]).collect();
        for (i, &a) in lits.iter().enumerate() {
            for &b in &lits[i + 1..] {
                clauses.push(vec![a, b]);
            }
        }
        for c1 in &clauses {
            for c2 in &clauses {
                let phi = CnfFormula::new(n, vec![c1.clone(), c2.clone()]).unwrap();
                let same = verify_reduction_with(&phi, 3, None, NegatedChord::SamePath).unwrap();
                assert!(same.is_equivalent(), "{}: {same}", phi.to_dimacs());
                let crossed = verify_reduction_with(&phi, 3, None, NegatedChord::Crossed).unwrap();
                if !crossed.is_equivalent() {
                    found = Some(phi);
                    break 'outer;
                }
            }
        }
    }
    assert!(found.is_some(), "crossed chords should fail on some small formula");
}

#[test]
fn unsatisfiable_instance_has_only_chord_cycles() {
    let clauses = (0..8)
        .map(|bits: i32| (1..=3).map(|v| if bits >> (v - 1) & 1 == 1 { -v } else { v }).collect())
        .collect();
    let phi = CnfFormula::new(3, clauses).unwrap();
    let art = build_reduction(&phi, 3).unwrap();
    let cycles = tchordal::chordality::enumerate_induced_dicycles(&art.digraph, None, None);
    assert!(cycles.len() >= 24);
    assert!(cycles.iter().all(|c| c.len() == 3));
}
