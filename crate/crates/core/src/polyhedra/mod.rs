//! Exact rational polyhedral kernel.

mod dd;
pub mod linalg;
mod lp;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use dd::{cone_generators, ConeGenerators};
use linalg::{affine_dimension, clear_denominators, determinant, dot_int, factorial, primitive, Q};
pub use lp::LpOutcome;

use crate::error::{Error, Result};

/// The halfspace normal·x + offset ≥ 0 with integer data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Constraint {
    pub fn new(normal: Vec<BigInt>, offset: BigInt) -> Self {
        Constraint { normal, offset }
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Self {
        Constraint::new(normal.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(offset))
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        let s: Q = self
            .normal
            .iter()
            .zip(x)
            .map(|(a, v)| Q::from_integer(a.clone()) * v)
            .sum();
        s + Q::from_integer(self.offset.clone())
    }

    pub fn is_tight(&self, x: &[Q]) -> bool {
        self.eval(x).is_zero()
    }

    /// Same halfspace with the gcd of all entries divided out.
    pub fn primitive(&self) -> Constraint {
        let mut all: Vec<BigInt> = self.normal.iter().cloned().chain([self.offset.clone()]).collect();
        primitive(&mut all);
        let offset = all.pop().expect("offset present");
        Constraint { normal: all, offset }
    }

    fn homogenized(&self) -> Vec<BigInt> {
        self.normal.iter().cloned().chain([self.offset.clone()]).collect()
    }

    fn is_trivial(&self) -> bool {
        self.normal.iter().all(Zero::is_zero)
    }
}

/// An intersection of finitely many halfspaces in ℚ^dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    dim: usize,
    constraints: Vec<Constraint>,
}

/// Vertices, recession rays and lineality of a polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VRep {
    pub vertices: Vec<Vec<Q>>,
    pub rays: Vec<Vec<BigInt>>,
    pub lines: Vec<Vec<BigInt>>,
}

impl VRep {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lines.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| linalg::is_integral(v))
    }

    /// Vertices sorted lexicographically.
    pub fn sorted_vertices(&self) -> Vec<Vec<Q>> {
        let mut v = self.vertices.clone();
        v.sort();
        v
    }

    pub fn dim(&self) -> Option<usize> {
        self.vertices.first().map(Vec::len)
    }

    pub fn apply_affine(&self, map: &AffineMap) -> VRep {
        VRep {
            vertices: self.vertices.iter().map(|v| map.apply(v)).collect(),
            rays: self.rays.iter().map(|r| map.apply_linear_int(r)).collect(),
            lines: self.lines.iter().map(|r| map.apply_linear_int(r)).collect(),
        }
    }

    /// Facet inequalities of the convex hull, with any implicit equalities
    /// returned separately as (normal, offset) pairs holding with equality.
    pub fn facets(&self) -> Result<(Vec<Constraint>, Vec<Constraint>)> {
        let dim = self.vertices.first().map(Vec::len).ok_or(Error::Infeasible)?;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for v in &self.vertices {
            // a·v + b ≥ 0 scaled by the common denominator
            let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let mut row: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
            row.push(den);
            rows.push(row);
        }
        for r in &self.rays {
            rows.push(r.iter().cloned().chain([BigInt::zero()]).collect());
        }
        for l in &self.lines {
            let row: Vec<BigInt> = l.iter().cloned().chain([BigInt::zero()]).collect();
            rows.push(row.iter().map(|x| -x).collect());
            rows.push(row);
        }
        let g = cone_generators(&rows, dim + 1, None)?;
        let split = |mut v: Vec<BigInt>| {
            let offset = v.pop().expect("homogeneous coordinate");
            Constraint { normal: v, offset }
        };
        let facets = g.rays.into_iter().map(split).filter(|c| !c.is_trivial()).collect();
        let eqs = g.lines.into_iter().map(split).collect();
        Ok((facets, eqs))
    }

    /// Euclidean volume of a bounded polytope; zero when it is not
    /// full-dimensional.
    pub fn volume(&self) -> Result<Q> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        let dim = self.vertices.first().map(Vec::len).ok_or(Error::Infeasible)?;
        let (facets, eqs) = self.facets()?;
        if !eqs.is_empty() {
            return Ok(Q::zero());
        }
        let tight: Vec<BTreeSet<usize>> = facets
            .iter()
            .map(|f| {
                (0..self.vertices.len())
                    .filter(|&i| f.is_tight(&self.vertices[i]))
                    .collect()
            })
            .collect();
        let all: BTreeSet<usize> = (0..self.vertices.len()).collect();
        let mut total = Q::zero();
        for simplex in pulling_triangulation(&self.vertices, &tight, &all, dim) {
            let base = &self.vertices[simplex[0]];
            let rows: Vec<Vec<Q>> = simplex[1..]
                .iter()
                .map(|&i| self.vertices[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            total += determinant(&rows).abs();
        }
        Ok(total / Q::from_integer(factorial(dim)))
    }

    /// The polar of (P − center), as an inequality system in dual space.
    pub fn polar_dual(&self, center: &[Q]) -> Result<Polyhedron> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        let dim = center.len();
        let constraints = self
            .vertices
            .iter()
            .map(|v| {
                // 1 − (v − c)·y ≥ 0
                let diff: Vec<Q> = v.iter().zip(center).map(|(a, b)| a - b).collect();
                let den = diff.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                let normal = diff.iter().map(|x| -(x.numer() * (&den / x.denom()))).collect();
                Constraint::new(normal, den)
            })
            .collect();
        Polyhedron::new(dim, constraints)
    }
}

/// Triangulates a face (given by its vertex set) by pulling its smallest vertex.
fn pulling_triangulation(
    vertices: &[Vec<Q>],
    facet_sets: &[BTreeSet<usize>],
    face: &BTreeSet<usize>,
    dim: usize,
) -> Vec<Vec<usize>> {
    let apex = *face.iter().next().expect("faces are nonempty");
    if dim == 0 {
        return vec![vec![apex]];
    }
    let mut subfaces: Vec<BTreeSet<usize>> = Vec::new();
    for fs in facet_sets {
        let sub: BTreeSet<usize> = face.intersection(fs).copied().collect();
        if sub.is_empty() || sub.contains(&apex) || sub.len() == face.len() || subfaces.contains(&sub) {
            continue;
        }
        let pts: Vec<&Vec<Q>> = sub.iter().map(|&i| &vertices[i]).collect();
        if affine_dimension(&pts) == dim - 1 {
            subfaces.push(sub);
        }
    }
    let mut out = Vec::new();
    for sub in subfaces {
        for mut s in pulling_triangulation(vertices, facet_sets, &sub, dim - 1) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

/// x ↦ M·x + v with integer data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: Vec<Vec<i64>>,
    pub shift: Vec<i64>,
}

impl AffineMap {
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        self.matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, s)| row.iter().zip(x).map(|(&a, v)| linalg::q(a) * v).sum::<Q>() + linalg::q(*s))
            .collect()
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, s)| row.iter().zip(x).map(|(a, v)| a * v).sum::<i64>() + s)
            .collect()
    }

    fn apply_linear_int(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(&a, v)| BigInt::from(a) * v).sum())
            .collect();
        primitive(&mut v);
        v
    }

    pub fn determinant(&self) -> Q {
        linalg::determinant_int(&self.matrix)
    }
}

impl Polyhedron {
    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Result<Self> {
        if let Some(bad) = constraints.iter().find(|c| c.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(Polyhedron { dim, constraints })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.constraints.iter().all(|c| !c.eval(x).is_negative())
    }

    fn lp_data(&self, skip: Option<usize>) -> (Vec<Vec<Q>>, Vec<Q>) {
        // normal·x + offset ≥ 0  ⇔  −normal·x ≤ offset
        self.constraints
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .map(|(_, c)| {
                (
                    c.normal.iter().map(|a| Q::from_integer(-a)).collect(),
                    Q::from_integer(c.offset.clone()),
                )
            })
            .unzip()
    }

    pub fn maximize(&self, objective: &[Q]) -> LpOutcome {
        let (a, b) = self.lp_data(None);
        lp::maximize(&a, &b, objective)
    }

    pub fn minimize(&self, objective: &[Q]) -> LpOutcome {
        let neg: Vec<Q> = objective.iter().map(|x| -x).collect();
        match self.maximize(&neg) {
            LpOutcome::Optimal { value, point } => LpOutcome::Optimal { value: -value, point },
            other => other,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self.maximize(&vec![Q::zero(); self.dim]), LpOutcome::Infeasible)
    }

    /// A point satisfying every nontrivial constraint strictly, if any.
    pub fn strict_interior_point(&self) -> Option<Vec<Q>> {
        // max ε subject to normal·x + offset ≥ ε, ε ≤ 1
        let one = Q::one();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for c in self.constraints.iter().filter(|c| !c.is_trivial()) {
            let mut row: Vec<Q> = c.normal.iter().map(|x| Q::from_integer(-x)).collect();
            row.push(one.clone());
            a.push(row);
            b.push(Q::from_integer(c.offset.clone()));
        }
        let mut cap = vec![Q::zero(); self.dim];
        cap.push(one.clone());
        a.push(cap.clone());
        b.push(one);
        match lp::maximize(&a, &b, &cap) {
            LpOutcome::Optimal { value, mut point } if value.is_positive() => {
                point.pop();
                Some(point)
            }
            _ => None,
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.constraints
            .iter()
            .filter(|c| c.is_trivial())
            .all(|c| !c.offset.is_negative())
            && self.strict_interior_point().is_some()
    }

    /// Drops duplicate and redundant constraints. A constraint is redundant
    /// when minimizing its left side over the others stays nonnegative.
    pub fn remove_redundant(&self) -> Result<Polyhedron> {
        if !self.is_full_dimensional() {
            return Err(if self.is_feasible() {
                Error::NotFullDimensional
            } else {
                Error::Infeasible
            });
        }
        let mut seen = BTreeSet::new();
        let mut current: Vec<Constraint> = Vec::new();
        for c in self.constraints.iter().filter(|c| !c.is_trivial()) {
            if seen.insert(c.primitive()) {
                current.push(c.clone());
            }
        }
        let mut i = 0;
        while i < current.len() {
            let rest = Polyhedron {
                dim: self.dim,
                constraints: current.clone(),
            };
            let (a, b) = rest.lp_data(Some(i));
            let obj: Vec<Q> = current[i].normal.iter().map(|x| Q::from_integer(-x)).collect();
            let redundant = match lp::maximize(&a, &b, &obj) {
                LpOutcome::Optimal { value, .. } => !(Q::from_integer(current[i].offset.clone()) - value).is_negative(),
                _ => false,
            };
            if redundant {
                current.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(Polyhedron {
            dim: self.dim,
            constraints: current,
        })
    }

    /// Vertices, rays and lineality by double description.
    pub fn vertices(&self) -> Result<VRep> {
        self.vertices_within(None)
    }

    pub fn vertices_within(&self, deadline: Option<Instant>) -> Result<VRep> {
        let d = self.dim;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.constraints.len() + 1);
        let mut s = vec![BigInt::zero(); d + 1];
        s[d] = BigInt::one();
        rows.push(s);
        rows.extend(self.constraints.iter().map(Constraint::homogenized));
        let g = cone_generators(&rows, d + 1, deadline)?;
        let mut out = VRep {
            lines: g
                .lines
                .into_iter()
                .map(|mut l| {
                    l.pop();
                    l
                })
                .collect(),
            ..VRep::default()
        };
        for mut r in g.rays {
            let s = r.pop().expect("homogeneous coordinate");
            if s.is_zero() {
                out.rays.push(r);
            } else {
                let den = Q::from_integer(s);
                out.vertices
                    .push(r.into_iter().map(|x| Q::from_integer(x) / &den).collect());
            }
        }
        if out.vertices.is_empty() {
            return Err(Error::Infeasible);
        }
        out.vertices.sort();
        Ok(out)
    }

    /// Probes vertices by maximizing random integer objectives until one
    /// with a non-integer coordinate appears.
    pub fn find_fractional_vertex(&self, attempts: usize, seed: u64) -> Option<Vec<Q>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..attempts).find_map(|_| {
            let obj: Vec<Q> = (0..self.dim).map(|_| linalg::q(rng.gen_range(-1000..=1000))).collect();
            match self.maximize(&obj) {
                LpOutcome::Optimal { point, .. } if !linalg::is_integral(&point) => Some(point),
                _ => None,
            }
        })
    }

    /// Integer bounding box from LP bounds per coordinate.
    pub fn bounding_box(&self) -> Result<Vec<(i64, i64)>> {
        (0..self.dim)
            .map(|i| {
                let mut e = vec![Q::zero(); self.dim];
                e[i] = Q::one();
                let hi = match self.maximize(&e) {
                    LpOutcome::Optimal { value, .. } => value.floor(),
                    LpOutcome::Unbounded => return Err(Error::Unbounded),
                    LpOutcome::Infeasible => return Err(Error::Infeasible),
                };
                let lo = match self.minimize(&e) {
                    LpOutcome::Optimal { value, .. } => value.ceil(),
                    LpOutcome::Unbounded => return Err(Error::Unbounded),
                    LpOutcome::Infeasible => return Err(Error::Infeasible),
                };
                let to_i64 = |x: Q| {
                    x.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::OutOfRange("coordinate bound".into()))
                };
                Ok((to_i64(lo)?, to_i64(hi)?))
            })
            .collect()
    }

    /// Every lattice point, visiting coordinates from last to first.
    pub fn lattice_points(&self, cap: u64) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.walk_lattice(cap, |p| out.push(p.to_vec()))?;
        Ok(out)
    }

    pub fn lattice_point_count(&self, cap: u64) -> Result<u64> {
        let mut n = 0u64;
        self.walk_lattice(cap, |_| n += 1)?;
        Ok(n)
    }

    /// Exact LP bounds fix the box; then each coordinate is cut further by
    /// the constraints whose other coordinates are already fixed.
    fn walk_lattice(&self, cap: u64, mut visit: impl FnMut(&[i64])) -> Result<()> {
        if !self.is_feasible() {
            return Ok(());
        }
        let bbox = self.bounding_box()?;
        let d = self.dim;
        let small = |x: &BigInt| {
            x.to_i128()
                .ok_or_else(|| Error::OutOfRange("constraint coefficient".into()))
        };
        let mut normals = Vec::new();
        let mut offsets = Vec::new();
        for c in &self.constraints {
            normals.push(c.normal.iter().map(small).collect::<Result<Vec<i128>>>()?);
            offsets.push(small(&c.offset)?);
        }
        // constraints become decidable once their lowest-index coordinate is set
        let mut activates: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (i, nrm) in normals.iter().enumerate() {
            match nrm.iter().position(|&a| a != 0) {
                Some(first) => activates[first].push(i),
                None if offsets[i] < 0 => return Ok(()),
                None => {}
            }
        }
        struct State<'a, F> {
            normals: &'a [Vec<i128>],
            activates: &'a [Vec<usize>],
            bbox: &'a [(i64, i64)],
            partial: Vec<i128>,
            point: Vec<i64>,
            visited: u64,
            cap: u64,
            visit: F,
        }
        fn descend<F: FnMut(&[i64])>(st: &mut State<'_, F>, coord: usize) -> Result<()> {
            let (mut lo, mut hi) = (st.bbox[coord].0 as i128, st.bbox[coord].1 as i128);
            for &ci in &st.activates[coord] {
                let a = st.normals[ci][coord];
                let rest = st.partial[ci];
                if a > 0 {
                    lo = lo.max(Integer::div_ceil(&-rest, &a));
                } else {
                    hi = hi.min(Integer::div_floor(&rest, &-a));
                }
            }
            let mut x = lo;
            while x <= hi {
                st.visited += 1;
                if st.visited > st.cap {
                    return Err(Error::TooManyPoints(st.cap));
                }
                st.point[coord] = x as i64;
                for (ci, nrm) in st.normals.iter().enumerate() {
                    st.partial[ci] += nrm[coord] * x;
                }
                if coord == 0 {
                    (st.visit)(&st.point);
                } else {
                    descend(st, coord - 1)?;
                }
                for (ci, nrm) in st.normals.iter().enumerate() {
                    st.partial[ci] -= nrm[coord] * x;
                }
                x += 1;
            }
            Ok(())
        }
        if d == 0 {
            visit(&[]);
            return Ok(());
        }
        let mut st = State {
            normals: &normals,
            activates: &activates,
            bbox: &bbox,
            partial: offsets,
            point: vec![0; d],
            visited: 0,
            cap,
            visit: &mut visit,
        };
        descend(&mut st, d - 1)
    }

    /// The unique lattice point strictly inside, if exactly one exists;
    /// otherwise the number found.
    pub fn interior_lattice_point(&self, cap: u64) -> Result<std::result::Result<Vec<i64>, usize>> {
        let strict: Vec<Vec<i64>> = self
            .lattice_points(cap)?
            .into_iter()
            .filter(|p| {
                self.constraints.iter().filter(|c| !c.is_trivial()).all(|c| {
                    let v: BigInt =
                        dot_int(&c.normal, &p.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()) + &c.offset;
                    v.is_positive()
                })
            })
            .collect();
        Ok(match <[Vec<i64>; 1]>::try_from(strict) {
            Ok([p]) => Ok(p),
            Err(v) => Err(v.len()),
        })
    }
}

/// Scales a rational direction to a primitive integer one.
pub fn integer_direction(v: &[Q]) -> Vec<BigInt> {
    clear_denominators(v)
}
