use num_bigint::BigInt;
use strpoly::rep::{gt_pattern_count, weyl_dimension};
use strpoly::Weight;

fn lam(s: &str) -> Weight {
    s.parse().unwrap()
}

#[test]
fn known_dimensions() {
    for (l, d) in [
        ("5", 6),
        ("2", 3),
        ("1,1", 8),
        ("2,2", 27),
        ("1,1,1", 64),
        ("2,1,1", 140),
        ("1,2,3", 630),
        ("2,2,2", 729),
    ] {
        assert_eq!(weyl_dimension(&lam(l)), BigInt::from(d), "({l})");
        assert_eq!(gt_pattern_count(&lam(l)), d, "({l})");
    }
}

#[test]
fn fundamental_dimensions_are_binomials() {
    // dim Λ^i C^{n+1}
    for (i, d) in [(1, 6), (2, 15), (3, 20), (4, 15), (5, 6)] {
        assert_eq!(weyl_dimension(&Weight::fundamental(5, i, 1)), BigInt::from(d));
    }
    assert_eq!(weyl_dimension(&lam("0,0,0")), BigInt::from(1));
}

#[test]
fn oracles_agree_on_small_weights() {
    for n in 1..=3usize {
        let mut stack = vec![Vec::<i64>::new()];
        while let Some(v) = stack.pop() {
            if v.len() == n {
                let l = Weight::new(v).unwrap();
                assert_eq!(weyl_dimension(&l), BigInt::from(gt_pattern_count(&l)), "({l})");
                continue;
            }
            let used: i64 = v.iter().sum();
            for x in 0..=6 - used {
                let mut next = v.clone();
                next.push(x);
                stack.push(next);
            }
        }
    }
}
