//! Lattice points of string polytopes against string parametrizations of a
//! crystal built independently from tableau words.

use std::collections::{BTreeSet, HashSet};

use strpoly::gc::string_polyhedron;
use strpoly::rep::weyl_dimension;
use strpoly::words::enumerate_reduced_words;
use strpoly::{ReducedWord, Weight};

type Element = Vec<u8>;

/// Unmatched i+1 positions and unmatched i positions, pairing each i with a
/// later i+1.
fn signature(b: &[u8], i: u8) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (p, &x) in b.iter().enumerate() {
        if x == i {
            plus.push(p);
        } else if x == i + 1 && plus.pop().is_none() {
            minus.push(p);
        }
    }
    (minus, plus)
}

fn raise(b: &[u8], i: u8) -> Option<Element> {
    let (minus, _) = signature(b, i);
    let &p = minus.last()?;
    let mut out = b.to_vec();
    out[p] = i;
    Some(out)
}

fn lower(b: &[u8], i: u8) -> Option<Element> {
    let (_, plus) = signature(b, i);
    let &p = plus.first()?;
    let mut out = b.to_vec();
    out[p] = i + 1;
    Some(out)
}

fn crystal(weight: &Weight) -> HashSet<Element> {
    let n = weight.rank() as u8;
    let mut highest = Vec::new();
    for c in (1..=n).rev() {
        for _ in 0..weight.get(c as usize) {
            highest.extend(1..=c);
        }
    }
    let mut seen = HashSet::from([highest.clone()]);
    let mut stack = vec![highest];
    while let Some(b) = stack.pop() {
        for i in 1..=n {
            if let Some(x) = lower(&b, i) {
                if seen.insert(x.clone()) {
                    stack.push(x);
                }
            }
        }
    }
    seen
}

fn string(mut b: Element, word: &ReducedWord) -> Vec<i64> {
    word.letters()
        .iter()
        .map(|&i| {
            let mut a = 0;
            while let Some(up) = raise(&b, i) {
                b = up;
                a += 1;
            }
            a
        })
        .collect()
}

fn compare(word: &ReducedWord, weight: &Weight, elements: &HashSet<Element>) {
    let strings: BTreeSet<Vec<i64>> = elements.iter().map(|b| string(b.clone(), word)).collect();
    assert_eq!(strings.len(), elements.len(), "strings separate elements for {word}");
    let points: BTreeSet<Vec<i64>> = string_polyhedron(word, weight)
        .unwrap()
        .lattice_points(10_000_000)
        .unwrap()
        .into_iter()
        .collect();
    assert_eq!(points, strings, "{word} at ({weight})");
}

#[test]
fn crystal_size_is_weyl_dimension() {
    for lam in ["1,1,1", "2,1,1", "1,2,3", "0,2,0"] {
        let w: Weight = lam.parse().unwrap();
        assert_eq!(num_bigint::BigInt::from(crystal(&w).len()), weyl_dimension(&w));
    }
}

#[test]
fn rank_three_lattice_points_are_strings() {
    for lam in ["1,1,1", "2,1,1", "1,0,2", "0,1,0"] {
        let weight: Weight = lam.parse().unwrap();
        let elements = crystal(&weight);
        for word in enumerate_reduced_words(3).unwrap() {
            compare(&word, &weight, &elements);
        }
    }
}

#[test]
fn rank_four_lattice_points_are_strings() {
    let weight: Weight = "1,0,1,0".parse().unwrap();
    let elements = crystal(&weight);
    // a spread of words across the lexicographic order
    let words = enumerate_reduced_words(4).unwrap();
    for word in words.iter().step_by(7) {
        compare(word, &weight, &elements);
    }
}

#[test]
fn rank_two_small_weights() {
    for a in 0..=3 {
        for b in 0..=3 {
            let weight = Weight::new(vec![a, b]).unwrap();
            let elements = crystal(&weight);
            for word in enumerate_reduced_words(2).unwrap() {
                compare(&word, &weight, &elements);
            }
        }
    }
}
