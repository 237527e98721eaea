use clockwise::gf2::{left_nullspace_basis, rank, solve, BitVec, Gf2Matrix, Solution};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = (Gf2Matrix, BitVec)> {
    (1usize..12, 1usize..90).prop_flat_map(|(rows, width)| {
        (
            prop::collection::vec(prop::collection::vec(any::<bool>(), width), rows),
            prop::collection::vec(any::<bool>(), rows),
        )
            .prop_map(move |(m, b)| {
                let rows = m.iter().map(|r| BitVec::from_bools(r)).collect();
                (Gf2Matrix::new(width, rows).unwrap(), BitVec::from_bools(&b))
            })
    })
}

proptest! {
    #[test]
    fn solutions_and_certificates_check_bit_by_bit((a, b) in system()) {
        match solve(&a, &b).unwrap() {
            Solution::Solved(x) => {
                for (i, row) in a.rows().iter().enumerate() {
                    let dot = row.ones().filter(|&j| x.get(j)).count() % 2 == 1;
                    prop_assert_eq!(dot, b.get(i));
                }
            }
            Solution::Inconsistent(c) => {
                prop_assert!(!c.row_combination.is_empty());
                for j in 0..a.width() {
                    let ones = c.row_combination.iter().filter(|&&i| a.rows()[i].get(j)).count();
                    prop_assert_eq!(ones % 2, 0);
                }
                let rhs = c.row_combination.iter().filter(|&&i| b.get(i)).count();
                prop_assert_eq!(rhs % 2, 1);
            }
        }
    }

    #[test]
    fn rank_nullity((a, _b) in system()) {
        let null = left_nullspace_basis(&a);
        prop_assert_eq!(rank(&a) + null.len(), a.row_count());
        for combo in &null {
            let mut acc = BitVec::zeros(a.width());
            for &i in combo {
                acc.xor_assign(&a.rows()[i]);
            }
            prop_assert!(acc.is_zero());
        }
    }

    #[test]
    fn elimination_is_deterministic((a, b) in system()) {
        let first = solve(&a, &b).unwrap();
        let again = solve(&a.clone(), &b.clone()).unwrap();
        prop_assert_eq!(first, again);
        prop_assert_eq!(left_nullspace_basis(&a), left_nullspace_basis(&a));
    }
}
