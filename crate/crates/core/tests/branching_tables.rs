use std::collections::HashSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use orbitmult::branching::{
    branch_table, branching_multiplicity, conventions, fock_degree_dimension, tensor_with_sym,
    AlphaSign,
};
use orbitmult::weights::{dominant_in_box, weyl_dimension, DominantWeight};

fn weight() -> impl Strategy<Value = DominantWeight> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-3i64..=3, n).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            DominantWeight::new(v).unwrap()
        })
    })
}

fn sign() -> impl Strategy<Value = AlphaSign> {
    prop_oneof![Just(AlphaSign::Positive), Just(AlphaSign::Negative)]
}

proptest! {
    #[test]
    fn tables_are_multiplicity_free(l in weight(), s in sign(), k_max in 0u64..6) {
        for model in conventions() {
            let t = branch_table(&l, s, *model, k_max);
            prop_assert_eq!(t.rows.len() as u64, k_max + 1);
            let mut seen = HashSet::new();
            for row in &t.rows {
                for nu in &row.constituents {
                    prop_assert!(seen.insert(nu.clone()));
                    let b = branching_multiplicity(&l, nu, s, *model).unwrap();
                    prop_assert_eq!(b.m, 1);
                    prop_assert_eq!(b.k, row.k as i64);
                }
            }
        }
    }

    #[test]
    fn table_dimensions(l in weight(), s in sign(), k in 0u64..6) {
        for model in conventions() {
            let t = branch_table(&l, s, *model, k);
            let dim: BigInt = t.rows[k as usize].constituents.iter().map(weyl_dimension).sum();
            prop_assert_eq!(dim, weyl_dimension(&l) * fock_degree_dimension(l.n(), k));
        }
    }
}

#[test]
fn symmetric_power_dimension_identity() {
    for n in 1..=4 {
        for l in dominant_in_box(n, -3, 3) {
            for k in 0..=6 {
                let dim: BigInt = tensor_with_sym(&l, k).iter().map(weyl_dimension).sum();
                assert_eq!(dim, weyl_dimension(&l) * fock_degree_dimension(n, k));
            }
        }
    }
}

#[test]
fn table_json_and_records() {
    let l = DominantWeight::new(vec![1, 0]).unwrap();
    let t = branch_table(&l, AlphaSign::Positive, conventions()[0], 2);
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([1, 0]));
    assert_eq!(v["alpha_sign"], "+");
    assert_eq!(v["rows"][2]["k"], 2);
    let dims: Vec<String> = t.records().iter().map(|(_, _, d)| d.to_string()).collect();
    assert_eq!(dims, ["2", "3", "1", "4", "2"]);
}
