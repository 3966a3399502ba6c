use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zsl_core::group::{dihedral_group, SubsetMask};
use zsl_core::product::{product_set, product_set_naive};
use zsl_core::residue::{double_set, sumset, ResidueSet};
use zsl_core::scan::k_subsets;

#[test]
fn dp_matches_naive_exhaustive_small_groups() {
    for n in [3u32, 4] {
        let g = dihedral_group(n).unwrap();
        for size in 1..=6 {
            for bits in k_subsets(g.order(), size) {
                let s = SubsetMask(bits);
                let dp = product_set(&g, s).unwrap();
                let naive = product_set_naive(&g, s).unwrap();
                assert_eq!(
                    dp.achieved,
                    naive.achieved,
                    "n={n} s={:?}",
                    g.subset_names(s)
                );
                assert!(dp.verify(&g));
                assert!(naive.verify(&g));
            }
        }
    }
}

#[test]
fn dp_matches_naive_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..500 {
        // D_10 ..= D_16
        let n = rng.random_range(5..=8u32);
        let g = dihedral_group(n).unwrap();
        let size = rng.random_range(1..=6);
        let mut s = SubsetMask::EMPTY;
        while s.len() < size {
            s = s.with(zsl_core::ElementId(rng.random_range(0..g.order()) as u8));
        }
        let dp = product_set(&g, s).unwrap();
        assert_eq!(dp.achieved, product_set_naive(&g, s).unwrap().achieved);
        assert!(dp.verify(&g));
    }
}

#[test]
fn parity_of_reflection_subsets() {
    for n in [4u32, 6] {
        let g = dihedral_group(n).unwrap();
        for bits in 1u64..1 << n {
            let s = SubsetMask(bits << n);
            let r = product_set(&g, s).unwrap();
            let t = s.len();
            let flags: Vec<bool> = r.achieved.iter().map(|e| e.index() >= n as usize).collect();
            assert!(flags.iter().all(|&f| f == (t % 2 == 1)));
            let parities: Vec<usize> = r
                .achieved
                .iter()
                .map(|e| e.index() % n as usize % 2)
                .collect();
            assert!(parities.windows(2).all(|w| w[0] == w[1]));
        }
    }
}

#[test]
fn mixed_subsets_keep_reflection_parity() {
    let g = dihedral_group(5).unwrap();
    for bits in k_subsets(10, 4) {
        let s = SubsetMask(bits);
        let reflections = (bits >> 5).count_ones();
        let r = product_set(&g, s).unwrap();
        assert!(r
            .achieved
            .iter()
            .all(|e| (e.index() >= 5) == (reflections % 2 == 1)));
    }
}

#[test]
fn doubling_exhaustive() {
    for n in 1..=12u32 {
        for bits in 0u64..1 << n {
            let a = ResidueSet::from_bits(n, bits);
            let d = double_set(&a);
            if n % 2 == 0 {
                assert!(d.len() >= a.len().div_ceil(2));
            } else {
                assert_eq!(d.len(), a.len());
            }
        }
    }
}

fn residue_pair() -> impl Strategy<Value = (ResidueSet, ResidueSet)> {
    (1u32..=64).prop_flat_map(|n| {
        (
            proptest::collection::btree_set(0..n, 1..=n as usize),
            proptest::collection::btree_set(0..n, 1..=n as usize),
        )
            .prop_map(move |(a, b)| {
                (
                    ResidueSet::new(n, a.into_iter().map(i64::from)).unwrap(),
                    ResidueSet::new(n, b.into_iter().map(i64::from)).unwrap(),
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sumset_lower_bound_and_covering((a, b) in residue_pair()) {
        let n = a.modulus() as usize;
        let sum = sumset(&a, &b).unwrap();
        prop_assert!(sum.len() >= a.len().min(n));
        if a.len() + b.len() > n {
            prop_assert!(sum.is_full());
        }
    }
}
