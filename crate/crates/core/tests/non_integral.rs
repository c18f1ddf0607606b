//! The rank-5 word whose string polytope at ϖ3 is not integral.

use num_bigint::BigInt;
use strpoly::gc::string_polyhedron;
use strpoly::polyhedra::linalg::{is_integral, rank, Q};
use strpoly::rep::weyl_dimension;
use strpoly::{ReducedWord, Weight};

fn word() -> ReducedWord {
    "1,3,2,1,3,2,4,3,2,1,5,4,3,2,1".parse().unwrap()
}

/// Rank of the constraint normals tight at x.
fn tight_rank(p: &strpoly::Polyhedron, x: &[Q]) -> usize {
    let rows: Vec<Vec<Q>> = p
        .constraints()
        .iter()
        .filter(|c| c.is_tight(x))
        .map(|c| c.normal.iter().map(|a| Q::from_integer(a.clone())).collect())
        .collect();
    rank(&rows)
}

#[test]
fn fundamental_weight_has_a_fractional_vertex() {
    let p = string_polyhedron(&word(), &Weight::fundamental(5, 3, 1)).unwrap();
    let v = p.vertices().unwrap();
    let frac: Vec<&Vec<Q>> = v.vertices.iter().filter(|x| !is_integral(x)).collect();
    assert!(!frac.is_empty());
    for x in frac {
        assert!(p.contains(x));
        assert_eq!(tight_rank(&p, x), 15);
    }
    assert_eq!(p.lattice_point_count(1_000_000).unwrap(), 20);
}

#[test]
fn random_probe_finds_it_too() {
    let p = string_polyhedron(&word(), &Weight::fundamental(5, 3, 1)).unwrap();
    let x = p
        .find_fractional_vertex(2000, 7)
        .expect("probe finds a fractional vertex");
    assert_eq!(tight_rank(&p, &x), 15);
}

#[test]
fn doubled_weight_is_integral() {
    let lam = Weight::fundamental(5, 3, 2);
    let p = string_polyhedron(&word(), &lam).unwrap();
    assert!(p.vertices().unwrap().is_integral());
    assert_eq!(
        BigInt::from(p.lattice_point_count(1_000_000).unwrap()),
        weyl_dimension(&lam)
    );
}
