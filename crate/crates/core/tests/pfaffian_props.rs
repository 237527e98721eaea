mod common;

use clockwise::circuits::ClockwiseParity;
use clockwise::graph::{Multigraph, Orientation};
use clockwise::pfaffian::{
    alternating_circuits, enumerate_perfect_matchings, find_pfaffian_orientation, grid, kasteleyn_count,
    DEFAULT_MATCHING_CAP as MCAP,
};
use clockwise::solver::Verdict;
use common::medium;

fn wheel(rim: u32) -> Multigraph {
    let mut pairs: Vec<(u32, u32)> = (1..=rim).map(|i| (i, i % rim + 1)).collect();
    pairs.extend((1..=rim).map(|i| (i, rim + 1)));
    Multigraph::from_pairs(&pairs)
}

#[test]
fn counts_agree_whenever_an_orientation_is_found() {
    let mut pfaffian = 0;
    let mut not = 0;
    for g in medium() {
        for c in alternating_circuits(g, MCAP).unwrap() {
            assert!(c.is_even());
        }
        match find_pfaffian_orientation(g, MCAP).unwrap() {
            Verdict::Compatible(o) => {
                pfaffian += 1;
                let n = enumerate_perfect_matchings(g, MCAP).unwrap().len() as u128;
                assert_eq!(kasteleyn_count(g, &o).unwrap(), n, "{g:?}");
            }
            Verdict::Incompatible(cert) => {
                not += 1;
                assert!(cert.symmetric_difference_is_empty());
                assert!(cert.prescribed.iter().all(|&p| p == ClockwiseParity::Odd));
                assert_eq!(cert.prescribed_even_count, 0);
                assert!(cert.holds_under(&Orientation::reference(g)).unwrap());
                let alt: Vec<Vec<u32>> = alternating_circuits(g, MCAP).unwrap().iter().map(|c| c.edges().to_vec()).collect();
                assert!(cert.circuits.iter().all(|c| alt.contains(&c.edges().to_vec())));
            }
        }
    }
    assert!(pfaffian > 0 && not > 0);
}

#[test]
fn planar_families_are_pfaffian() {
    let mut graphs: Vec<Multigraph> = Vec::new();
    for r in 1..=4 {
        for c in 1..=4 {
            graphs.push(grid(r, c));
        }
    }
    graphs.extend((3..=9).map(wheel));
    for g in graphs {
        let Verdict::Compatible(o) = find_pfaffian_orientation(&g, MCAP).unwrap() else {
            panic!("{g:?} should be Pfaffian");
        };
        let n = enumerate_perfect_matchings(&g, MCAP).unwrap().len() as u128;
        assert_eq!(kasteleyn_count(&g, &o).unwrap(), n);
    }
}
