mod common;

use clockwise::catalog::Catalog;
use clockwise::graph::Multigraph;
use clockwise::scan::{scan_all_even, scan_all_odd, scan_theorem_main, verify_witness, ScanBudget};
use clockwise::solver::{decide, ParityAssignment};
use clockwise::transforms::is_even_splitting_of;
use common::{assignments, medium, random_graphs, rng, CAP};

fn corpus() -> impl Iterator<Item = &'static Multigraph> {
    medium().iter().chain(random_graphs())
}

#[test]
fn witness_exists_exactly_when_incompatible() {
    let mut r = rng(51);
    let mut found = 0;
    for g in corpus() {
        for j in assignments(g, &mut r, 3) {
            let compatible = decide(g, &j, CAP).unwrap().is_compatible();
            let outcome = scan_theorem_main(g, &j, ScanBudget::default()).unwrap();
            assert_eq!(outcome.witness().is_none(), compatible, "{g:?} {j:?}");
            if let Some(w) = outcome.witness() {
                verify_witness(g, &j, w, CAP).unwrap();
                found += 1;
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn uniform_scans_agree_with_the_main_scan() {
    for g in corpus() {
        let odd = scan_all_odd(g, ScanBudget::default()).unwrap();
        let main = scan_theorem_main(g, &ParityAssignment::AllOdd, ScanBudget::default()).unwrap();
        assert_eq!(odd.witness().is_some(), main.witness().is_some(), "{g:?}");
        if let Some(w) = odd.witness() {
            verify_witness(g, &ParityAssignment::AllOdd, w, CAP).unwrap();
        }
        let even = scan_all_even(g, ScanBudget::default()).unwrap();
        let main = scan_theorem_main(g, &ParityAssignment::AllEven, ScanBudget::default()).unwrap();
        assert_eq!(even.witness().is_some(), main.witness().is_some(), "{g:?}");
        if let Some(w) = even.witness() {
            verify_witness(g, &ParityAssignment::AllEven, w, CAP).unwrap();
        }
    }
}

fn theta(lengths: [u32; 3]) -> Multigraph {
    let mut pairs = Vec::new();
    let mut next = 3;
    for len in lengths {
        let mut prev = 1;
        for _ in 1..len {
            pairs.push((prev, next));
            prev = next;
            next += 1;
        }
        pairs.push((prev, 2));
    }
    Multigraph::from_pairs(&pairs)
}

#[test]
fn theta_parity_patterns() {
    let cat = Catalog::standard();
    let (o1, e1) = (&cat.get("O1").unwrap().graph, &cat.get("E1").unwrap().graph);
    for a in 1..=6 {
        for b in a..=6 {
            for c in b..=6 {
                let t = theta([a, b, c]);
                let all_even = [a, b, c].iter().all(|l| l % 2 == 0);
                let all_odd = [a, b, c].iter().all(|l| l % 2 == 1);
                assert_eq!(is_even_splitting_of(&t, o1).unwrap().is_some(), all_even, "{a} {b} {c}");
                assert_eq!(is_even_splitting_of(&t, e1).unwrap().is_some(), all_odd, "{a} {b} {c}");
            }
        }
    }
}
