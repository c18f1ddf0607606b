use num_bigint::BigInt;
use proptest::prelude::*;
use strpoly::polyhedra::linalg::{abs, fmt_q, q};
use strpoly::{AffineMap, Constraint, Error, Polyhedron};

/// lo ≤ x_i ≤ hi for each coordinate.
fn boxed(bounds: &[(i64, i64)]) -> Polyhedron {
    let d = bounds.len();
    let mut cs = Vec::new();
    for (i, &(lo, hi)) in bounds.iter().enumerate() {
        let mut e = vec![0; d];
        e[i] = 1;
        cs.push(Constraint::from_i64(&e, -lo));
        e[i] = -1;
        cs.push(Constraint::from_i64(&e, hi));
    }
    Polyhedron::new(d, cs).unwrap()
}

/// x ≥ 0, Σx ≤ m.
fn simplex(d: usize, m: i64) -> Polyhedron {
    let mut cs: Vec<Constraint> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            Constraint::from_i64(&e, 0)
        })
        .collect();
    cs.push(Constraint::from_i64(&vec![-1; d], m));
    Polyhedron::new(d, cs).unwrap()
}

#[test]
fn dimension_mismatch() {
    assert!(matches!(
        Polyhedron::new(2, vec![Constraint::from_i64(&[1, 0, 0], 0)]),
        Err(Error::DimensionMismatch { expected: 2, got: 3 })
    ));
}

#[test]
fn cube_data() {
    let p = boxed(&[(0, 2), (0, 2), (0, 2)]);
    let v = p.vertices().unwrap();
    assert_eq!(v.vertices.len(), 8);
    assert!(v.is_bounded() && v.is_integral());
    assert_eq!(v.volume().unwrap(), q(8));
    assert_eq!(v.facets().unwrap().0.len(), 6);
    assert_eq!(p.lattice_point_count(1000).unwrap(), 27);
    assert_eq!(p.interior_lattice_point(1000).unwrap(), Ok(vec![1, 1, 1]));
    assert_eq!(p.bounding_box().unwrap(), vec![(0, 2); 3]);
}

#[test]
fn simplex_data() {
    let p = simplex(3, 3);
    let v = p.vertices().unwrap();
    assert_eq!(v.vertices.len(), 4);
    assert_eq!(v.volume().unwrap(), q(27) / q(6));
    assert_eq!(p.lattice_point_count(1000).unwrap(), 20);
    assert_eq!(p.interior_lattice_point(1000).unwrap(), Err(0));
}

#[test]
fn lattice_cap_is_enforced() {
    assert!(matches!(
        boxed(&[(0, 99), (0, 99), (0, 99)]).lattice_point_count(1000),
        Err(Error::TooManyPoints(1000))
    ));
}

#[test]
fn redundancy_removal() {
    let mut cs = boxed(&[(0, 1), (0, 1)]).constraints().to_vec();
    cs.push(Constraint::from_i64(&[-1, -1], 5));
    cs.push(Constraint::from_i64(&[2, 0], 0));
    let p = Polyhedron::new(2, cs).unwrap();
    assert_eq!(p.remove_redundant().unwrap().constraints().len(), 4);
}

#[test]
fn degenerate_and_empty() {
    let flat = Polyhedron::new(
        2,
        vec![Constraint::from_i64(&[1, 0], 0), Constraint::from_i64(&[-1, 0], 0)],
    )
    .unwrap();
    assert_eq!(flat.remove_redundant(), Err(Error::NotFullDimensional));
    let empty = Polyhedron::new(1, vec![Constraint::from_i64(&[1], -2), Constraint::from_i64(&[-1], 1)]).unwrap();
    assert!(!empty.is_feasible());
    assert_eq!(empty.vertices(), Err(Error::Infeasible));
    assert_eq!(empty.remove_redundant(), Err(Error::Infeasible));
}

#[test]
fn unbounded_region() {
    let quadrant = Polyhedron::new(
        2,
        vec![Constraint::from_i64(&[1, 0], 0), Constraint::from_i64(&[0, 1], 0)],
    )
    .unwrap();
    let v = quadrant.vertices().unwrap();
    assert_eq!(v.vertices, vec![vec![q(0), q(0)]]);
    assert_eq!(v.rays.len(), 2);
    assert!(!v.is_bounded());
    assert!(quadrant.maximize(&[q(1), q(0)]).value().is_none());
    let strip = Polyhedron::new(
        2,
        vec![Constraint::from_i64(&[1, 0], 0), Constraint::from_i64(&[-1, 0], 1)],
    )
    .unwrap();
    let v = strip.vertices().unwrap();
    assert_eq!(v.lines, vec![vec![BigInt::from(0), BigInt::from(1)]]);
}

#[test]
fn fractional_vertex_probe() {
    // 2x ≤ 1, 2y ≤ 1, x, y ≥ 0
    let p = Polyhedron::new(
        2,
        vec![
            Constraint::from_i64(&[-2, 0], 1),
            Constraint::from_i64(&[0, -2], 1),
            Constraint::from_i64(&[1, 0], 0),
            Constraint::from_i64(&[0, 1], 0),
        ],
    )
    .unwrap();
    let v = p.find_fractional_vertex(50, 1).unwrap();
    assert!(v.iter().any(|x| !x.is_integer()));
    assert!(boxed(&[(0, 1), (0, 1)]).find_fractional_vertex(50, 1).is_none());
    assert!(!p.vertices().unwrap().is_integral());
    assert_eq!(fmt_q(&(q(1) / q(2))), "1/2");
}

#[test]
fn lp_optimum() {
    let p = simplex(2, 4);
    let out = p.maximize(&[q(3), q(1)]);
    assert_eq!(out.value(), Some(&q(12)));
    assert_eq!(p.minimize(&[q(1), q(1)]).value(), Some(&q(0)));
}

#[test]
fn polar_of_a_centred_square() {
    let sq = boxed(&[(-1, 1), (-1, 1)]).vertices().unwrap();
    let dual = sq.polar_dual(&[q(0), q(0)]).unwrap().vertices().unwrap();
    assert_eq!(dual.vertices.len(), 4);
    assert!(dual.is_integral());
}

fn bounds() -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-3i64..3, 0i64..4).prop_map(|(lo, w)| (lo, lo + w + 1)), 1..4)
}

/// Random unimodular matrix as a product of elementary moves.
fn unimodular(d: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec((0..d, 0..d, -2i64..=2), 0..6).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        for (a, b, c) in ops {
            if a != b {
                let src = m[b].clone();
                for (x, y) in m[a].iter_mut().zip(src) {
                    *x += c * y;
                }
            }
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_volume_and_points(b in bounds()) {
        let p = boxed(&b);
        let v = p.vertices().unwrap();
        let vol: i64 = b.iter().map(|(lo, hi)| hi - lo).product();
        let pts: u64 = b.iter().map(|(lo, hi)| (hi - lo + 1) as u64).product();
        prop_assert_eq!(v.volume().unwrap(), q(vol));
        prop_assert_eq!(p.lattice_point_count(100_000).unwrap(), pts);
        prop_assert_eq!(v.vertices.len(), 1 << b.len());
        for x in &v.vertices {
            prop_assert!(p.contains(x));
        }
    }

    #[test]
    fn unimodular_maps_keep_volume(m in unimodular(3), shift in proptest::collection::vec(-3i64..3, 3)) {
        let v = simplex(3, 2).vertices().unwrap();
        let map = AffineMap { matrix: m, shift };
        prop_assert_eq!(abs(&map.determinant()), q(1));
        let image = v.apply_affine(&map);
        prop_assert_eq!(image.volume().unwrap(), v.volume().unwrap());
        let (facets, eqs) = image.facets().unwrap();
        prop_assert_eq!(facets.len(), 4);
        prop_assert!(eqs.is_empty());
    }

    #[test]
    fn facets_rebuild_the_polytope(b in bounds()) {
        let v = boxed(&b).vertices().unwrap();
        let (facets, _) = v.facets().unwrap();
        prop_assert_eq!(facets.len(), 2 * b.len());
        let rebuilt = Polyhedron::new(b.len(), facets).unwrap().vertices().unwrap();
        prop_assert_eq!(rebuilt.sorted_vertices(), v.sorted_vertices());
    }
}
