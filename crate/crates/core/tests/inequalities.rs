use proptest::prelude::*;
use strpoly::inequalities::{lambda_cone, lambda_form, lambda_functional, sigma_of, string_cone, string_polytope};
use strpoly::paths::path_count;
use strpoly::words::{enumerate_reduced_words, sigma_word};
use strpoly::{Error, LinearForm, ReducedWord, Sigma, Weight};

fn w(s: &str) -> ReducedWord {
    s.parse().unwrap()
}

#[test]
fn weights() {
    let l: Weight = "1, 2,3".parse().unwrap();
    assert_eq!(l.coeffs(), [1, 2, 3]);
    assert_eq!(l.to_string(), "1,2,3");
    assert!(l.is_regular());
    assert!(!"1,0".parse::<Weight>().unwrap().is_regular());
    assert!(matches!("1,-1".parse::<Weight>(), Err(Error::MalformedWeight(_))));
    assert!(matches!("1,a".parse::<Weight>(), Err(Error::MalformedWeight(m)) if m.contains('a')));
    assert_eq!(Weight::fundamental(5, 3, 2).coeffs(), [0, 0, 2, 0, 0]);
    assert!(l.check_rank(2).is_err());
}

#[test]
fn form_display() {
    let f = lambda_form(&w("1,2,1,3,2,1"), 0);
    assert_eq!(f.to_string(), "-t1 + t2 - 2t3 + t5 - 2t6 + λ1");
    assert_eq!(LinearForm::zero(2, 1).to_string(), "0");
}

#[test]
fn polytope_is_cone_then_lambda_cone() {
    for word in enumerate_reduced_words(3).unwrap() {
        let h = string_polytope(&word);
        assert_eq!(h.len(), path_count(&word) + word.len());
        assert!(string_cone(&word).linear_forms().all(LinearForm::is_homogeneous));
        assert!(lambda_cone(&word).linear_forms().all(|f| !f.is_homogeneous()));
    }
}

#[test]
fn sigma_round_trip() {
    for n in 1..=5 {
        for sigma in Sigma::all(n) {
            let mut expect = sigma.clone();
            expect.0[0] = strpoly::Bullet::D;
            assert_eq!(sigma_of(&sigma_word(&sigma)).unwrap(), expect);
        }
    }
    assert_eq!(sigma_of(&w("2,1,3,2,3,1")), Err(Error::NotExtensionBuilt));
}

#[test]
fn functional_drops_the_constant() {
    let word = sigma_word(&"D,D,A".parse().unwrap());
    let s = lambda_functional(&word, 2, 2).unwrap();
    assert!(s.is_homogeneous());
    assert_eq!(s.coeffs[2], -1);
    assert!(lambda_functional(&word, 2, 3).is_err());
    assert!(lambda_functional(&word, 4, 1).is_err());
}

/// The point where every λ-inequality is tight.
fn apex(word: &ReducedWord, weight: &Weight) -> Vec<i64> {
    let mut t = vec![0i64; word.len()];
    for j in (0..word.len()).rev() {
        let f = lambda_form(word, j);
        let rest: i64 = (j + 1..word.len()).map(|k| f.coeffs[k] * t[k]).sum();
        t[j] = f.constant_at(weight) + rest;
    }
    t
}

fn word_of_rank(n: usize) -> impl Strategy<Value = ReducedWord> {
    let words = enumerate_reduced_words(n).unwrap();
    (0..words.len()).prop_map(move |i| words[i].clone())
}

fn regular(n: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(1i64..5, n).prop_map(|c| Weight::new(c).unwrap())
}

proptest! {
    #[test]
    fn origin_strictly_inside_lambda_cone(word in word_of_rank(4), lam in regular(4)) {
        for f in lambda_cone(&word).linear_forms() {
            prop_assert!(f.constant_at(&lam) > 0);
        }
    }

    #[test]
    fn apex_strictly_inside_string_cone(word in word_of_rank(4), lam in regular(4)) {
        let t = apex(&word, &lam);
        for f in lambda_cone(&word).linear_forms() {
            let v: i64 = f.coeffs.iter().zip(&t).map(|(a, b)| a * b).sum::<i64>() + f.constant_at(&lam);
            prop_assert_eq!(v, 0);
        }
        for f in string_cone(&word).linear_forms() {
            let v: i64 = f.coeffs.iter().zip(&t).map(|(a, b)| a * b).sum();
            prop_assert!(v > 0, "{} at {:?}", f, t);
        }
    }

    #[test]
    fn form_arithmetic(a in proptest::collection::vec(-5i64..5, 4), b in proptest::collection::vec(-5i64..5, 4)) {
        let fa = LinearForm::homogeneous(a.clone(), 2);
        let fb = LinearForm::homogeneous(b.clone(), 2);
        let sum = fa.clone() + fb.clone();
        prop_assert_eq!(sum.clone() - fb, fa.clone());
        prop_assert_eq!(-(-fa.clone()), fa);
    }
}
