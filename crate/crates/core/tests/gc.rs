use strpoly::gc::{
    block_a, block_d, build_map, check_letter_patterns, classify, gc_map, gc_polytope, string_polyhedron,
    two_move_permutation, verify_gc_map,
};
use strpoly::polyhedra::linalg::{abs, determinant_int, q};
use strpoly::rep::gt_pattern_count;
use strpoly::words::{enumerate_reduced_words, sigma_word};
use strpoly::{Bullet, Error, ReducedWord, Sigma, Weight};

fn w(s: &str) -> ReducedWord {
    s.parse().unwrap()
}

fn weights(n: usize, total: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=total - used).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|c| Weight::new(c).unwrap()).collect()
}

#[test]
fn blocks() {
    assert_eq!(block_a(3), [[1, -1, 0], [0, 1, -1], [0, 0, 1]]);
    assert_eq!(block_d(3), [[0, 0, -1], [0, -1, 1], [-1, 1, 0]]);
}

#[test]
fn lattice_points_of_gc_are_patterns() {
    for n in 1..=3 {
        for lam in weights(n, 6) {
            let count = gc_polytope(n, &lam).unwrap().lattice_point_count(1_000_000).unwrap();
            assert_eq!(count, gt_pattern_count(&lam), "({lam})");
        }
    }
}

#[test]
fn map_is_unimodular_up_to_rank_six() {
    for n in 1..=6 {
        for sigma in Sigma::all(n) {
            let m = build_map(&sigma);
            assert_eq!(abs(&determinant_int(&m.matrix)), q(1), "{sigma}");
        }
    }
}

#[test]
fn maps_of_every_gc_word_are_verified() {
    for word in enumerate_reduced_words(3).unwrap() {
        if word.gc_type().is_none() {
            continue;
        }
        for lam in ["1,1,1", "2,2,2", "1,2,3"] {
            let lam: Weight = lam.parse().unwrap();
            let map = gc_map(&word, &lam).unwrap().unwrap();
            assert!(verify_gc_map(&word, &lam, &map).unwrap(), "{word} ({lam})");
            let gc = gc_polytope(3, &lam).unwrap();
            let verts = string_polyhedron(&word, &lam).unwrap().vertices().unwrap();
            for x in map.image(&verts).vertices {
                assert!(gc.contains(&x), "{word}: image {x:?} leaves GC(λ)");
            }
        }
    }
}

#[test]
fn either_first_letter_works() {
    let lam: Weight = "1,2,1".parse().unwrap();
    for sigma in Sigma::all(3) {
        let word = sigma_word(&sigma);
        let mut other = sigma.clone();
        other.0[0] = other.0[0].other();
        // the first block is (1) either way, so both maps exist
        assert_eq!(sigma_word(&other), word);
        let m = gc_map(&word, &lam).unwrap().unwrap();
        assert!(verify_gc_map(&word, &lam, &m).unwrap());
    }
}

#[test]
fn rank_four_gc_words_verify() {
    let lam: Weight = "1,1,1,1".parse().unwrap();
    for sigma in Sigma::all(4).into_iter().filter(|s| s.0[0] == Bullet::D) {
        let word = sigma_word(&sigma);
        for member in word.class_members().into_iter().take(3) {
            let m = gc_map(&member, &lam).unwrap().unwrap();
            assert!(verify_gc_map(&member, &lam, &m).unwrap(), "{member}");
        }
    }
}

#[test]
fn permutation_follows_the_chain() {
    let from = w("2,1,2,3,2,1");
    let to = w("2,1,3,2,1,3");
    assert_eq!(two_move_permutation(&from, &from).unwrap(), [0, 1, 2, 3, 4, 5]);
    assert_eq!(two_move_permutation(&from, &to), Err(Error::ClassMismatch));
    let a = w("1,3,2,1,3,2");
    let b = w("3,1,2,3,1,2");
    assert_eq!(two_move_permutation(&a, &b).unwrap(), [1, 0, 2, 4, 3, 5]);
}

#[test]
fn non_gc_words_have_no_map() {
    assert!(gc_map(&w("2,1,3,2,3,1"), &"1,1,1".parse().unwrap()).unwrap().is_none());
    assert!(gc_map(&w("1,2,1"), &"1,1,1".parse().unwrap()).is_err());
}

#[test]
fn classification_of_rank_three() {
    let rows = classify(3, &"1,2,1".parse().unwrap()).unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows.iter().filter(|r| r.is_gc_type()).count(), 4);
    assert_eq!(rows.iter().map(|r| r.class_size).sum::<usize>(), 16);
    for r in &rows {
        assert_eq!(r.facets, if r.is_gc_type() { 12 } else { 13 });
    }
}

#[test]
fn classification_of_rank_four() {
    let rows = classify(4, &"1,1,1,1".parse().unwrap()).unwrap();
    assert_eq!(rows.len(), 62);
    assert_eq!(rows.iter().filter(|r| r.is_gc_type()).count(), 8);
}

#[test]
fn classification_needs_regular_weight() {
    assert!(matches!(
        classify(3, &"1,0,1".parse().unwrap()),
        Err(Error::MalformedWeight(_))
    ));
}

#[test]
fn letter_patterns_up_to_rank_five() {
    for n in 1..=5 {
        for sigma in Sigma::all(n) {
            check_letter_patterns(&sigma).unwrap();
        }
    }
}
