use proptest::prelude::*;
use strpoly::inequalities::{lambda_cone, string_cone};
use strpoly::words::enumerate_reduced_words;
use strpoly::{Bullet, ReducedWord, Side, WiringDiagram};

fn w(s: &str) -> ReducedWord {
    s.parse().unwrap()
}

#[test]
fn dump_format() {
    let d = WiringDiagram::new(&w("1,2,1"));
    assert_eq!(d.to_string(), "1 1 {1,2}\n2 2 {1,3}\n3 1 {2,3}\n");
}

#[test]
fn every_pair_crosses_once() {
    for word in enumerate_reduced_words(4).unwrap() {
        let d = WiringDiagram::new(&word);
        for a in 1..=5 {
            for b in a + 1..=5 {
                assert!(d.crossing(a, b).is_some(), "{word}: ℓ{a} and ℓ{b}");
            }
        }
        let reversed: Vec<usize> = (1..=5).rev().collect();
        assert_eq!(d.top_order(), reversed.as_slice());
    }
}

#[test]
fn itineraries_run_bottom_up() {
    let d = WiringDiagram::new(&w("2,1,3,2,3,1"));
    for m in 1..=4 {
        let it = d.itinerary(m);
        assert_eq!(it.len(), 3);
        assert!(it.windows(2).all(|p| p[0] > p[1]), "ℓ{m}: {it:?}");
    }
}

#[test]
fn boundary_wire_counts() {
    let d = WiringDiagram::new(&w("4,3,2,1,4,2,3,2,4,3"));
    assert_eq!(d.nodes_below_wire(5).unwrap(), 6);
    assert_eq!(d.nodes_below_wire(1).unwrap(), 2);
    assert!(d.nodes_below_wire(3).is_err());
    let on = d.sides(Bullet::D).iter().filter(|s| **s == Side::On).count();
    assert_eq!(on, 4);
}

#[test]
fn chamber_forms_of_the_example() {
    let word = w("2,1,3,2,3,1");
    let basis = strpoly::wiring::ChamberBasis::new(&word);
    assert_eq!(basis.to_chamber(&[1, 0, 0, 0, 0, 0]), [1, 1, 1, 1, 0, 0]);
    assert_eq!(basis.to_chamber(&[0, 0, -1, 1, -2, 0]), [0, 0, -1, 0, -1, 0]);
}

fn any_word() -> impl Strategy<Value = ReducedWord> {
    let mut words = enumerate_reduced_words(3).unwrap();
    words.extend(enumerate_reduced_words(4).unwrap());
    (0..words.len()).prop_map(move |i| words[i].clone())
}

proptest! {
    #[test]
    fn chamber_basis_is_inverse(word in any_word()) {
        let b = strpoly::wiring::ChamberBasis::new(&word);
        let len = word.len();
        for r in 0..len {
            for c in 0..len {
                let x: i64 = (0..len).map(|k| b.forward[r][k] * b.inverse[k][c]).sum();
                prop_assert_eq!(x, i64::from(r == c));
            }
            prop_assert_eq!(b.forward[r][r], 1);
            prop_assert!(b.forward[r][..r].iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn chamber_coefficients_are_zero_or_one(word in any_word()) {
        let b = strpoly::wiring::ChamberBasis::new(&word);
        for f in string_cone(&word).linear_forms() {
            prop_assert!(b.to_chamber(&f.coeffs).iter().all(|&c| c == 0 || c == 1), "{}", f);
        }
        for f in lambda_cone(&word).linear_forms() {
            prop_assert!(b.to_chamber(&f.coeffs).iter().all(|&c| c == 0 || c == -1), "{}", f);
        }
    }
}
