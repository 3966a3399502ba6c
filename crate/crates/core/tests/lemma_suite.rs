use zsl_core::lemma::{
    classify_equality, verify_lemma1, verify_lemma2, verify_lemma3, LemmaId, LemmaOptions,
};
use zsl_core::residue::ResidueSet;

fn opts(jobs: usize) -> LemmaOptions {
    LemmaOptions {
        jobs,
        ..Default::default()
    }
}

#[test]
fn lemma2_counts() {
    for (n, s, count) in [(6, 2, 0), (8, 2, 2), (10, 2, 0), (12, 2, 3), (12, 3, 2)] {
        let r = verify_lemma2(n, s, &opts(2)).unwrap();
        assert!(r.passed, "({n},{s}) {r:?}");
        assert_eq!(r.equality_count, count);
        assert_eq!(r.predicted_equality_count, count);
    }
}

#[test]
fn lemma2_n12_s3_cosets() {
    let r = verify_lemma2(12, 3, &opts(1)).unwrap();
    assert_eq!(r.subsets_checked, 924);
    let sets: Vec<_> = r
        .equality_instances
        .iter()
        .map(|e| e.exponents.clone())
        .collect();
    assert_eq!(sets, vec![vec![0, 2, 4, 6, 8, 10], vec![1, 3, 5, 7, 9, 11]]);
}

#[test]
fn lemma3_structured_cases() {
    for (n, s) in [(8u32, 3u32), (12, 2), (16, 3)] {
        let r = verify_lemma3(n, s, &opts(4)).unwrap();
        assert!(r.passed, "({n},{s}) {r:?}");
        assert_eq!(r.equality_count, n as u64);
        for inst in &r.equality_instances {
            let set = ResidueSet::new(n, inst.exponents.iter().map(|&a| a as i64)).unwrap();
            assert_eq!(inst.classification.expand(), set);
            assert!(inst.classification.distinguished_kind.is_some());
        }
    }
}

#[test]
fn lemma3_no_equality_when_order_does_not_divide() {
    let r = verify_lemma3(10, 2, &opts(1)).unwrap();
    assert!(r.passed);
    assert_eq!(r.equality_count, 0);
}

#[test]
fn classification_round_trip() {
    for n in [8u32, 12, 16] {
        for order in [2u32, 4, 6, 8] {
            if n % order != 0 {
                continue;
            }
            let d = n / order;
            for rep in 0..d {
                let coset: Vec<i64> = (0..order).map(|j| (rep + j * d) as i64).collect();
                let c = classify_equality(
                    n,
                    &ResidueSet::new(n, coset.clone()).unwrap(),
                    LemmaId::Lemma2,
                )
                .unwrap();
                assert_eq!(c.expand(), ResidueSet::new(n, coset.clone()).unwrap());
                for skip in 0..order as usize {
                    let mut minus = coset.clone();
                    minus.remove(skip);
                    let set = ResidueSet::new(n, minus).unwrap();
                    let c = classify_equality(n, &set, LemmaId::Lemma3).unwrap();
                    assert_eq!(c.expand(), set);
                    assert_eq!(c.removal_position(), Some(skip as u32));
                }
            }
        }
    }
}

#[test]
fn lemma1_modes() {
    for n in 1..=8 {
        assert!(verify_lemma1(n, 0, 0).unwrap().passed);
    }
    let r = verify_lemma1(64, 1000, 0).unwrap();
    assert!(r.passed);
    assert_eq!(r.subsets_checked, 1000);
}
