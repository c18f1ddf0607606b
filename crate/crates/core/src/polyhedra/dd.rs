//! Double description method for cones {y : c·y ≥ 0 for all c}.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{dot_int, primitive};
use crate::error::{Error, Result};

/// Generators of a polyhedral cone: extreme rays plus a lineality basis.
#[derive(Debug, Clone, Default)]
pub struct ConeGenerators {
    pub rays: Vec<Vec<BigInt>>,
    pub lines: Vec<Vec<BigInt>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<BigInt>,
    /// Bitset of processed constraints this ray is tight on.
    zero: Vec<u64>,
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

/// Runs the method, inserting constraints in the given order.
pub fn cone_generators(constraints: &[Vec<BigInt>], dim: usize, deadline: Option<Instant>) -> Result<ConeGenerators> {
    let words = constraints.len().div_ceil(64).max(1);
    let mut lines: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, c) in constraints.iter().enumerate() {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::BudgetExceeded);
        }
        if let Some(pos) = lines.iter().position(|l| !dot_int(c, l).is_zero()) {
            let mut l = lines.swap_remove(pos);
            let mut cl = dot_int(c, &l);
            if cl.is_negative() {
                l.iter_mut().for_each(|x| *x = -&*x);
                cl = -cl;
            }
            for other in lines.iter_mut() {
                project(other, &l, &cl, c);
            }
            for r in rays.iter_mut() {
                project(&mut r.v, &l, &cl, c);
                set_bit(&mut r.zero, idx);
            }
            let mut zero = vec![0; words];
            for prev in 0..idx {
                set_bit(&mut zero, prev);
            }
            rays.push(Ray { v: l, zero });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot_int(c, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    set_bit(&mut r.zero, idx);
                }
            }
            continue;
        }
        let pointed_dim = dim - lines.len();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common: Vec<u64> = rays[p].zero.iter().zip(&rays[q].zero).map(|(a, b)| a & b).collect();
                if popcount(&common) + 2 < pointed_dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != q && subset(&common, &r.zero));
                if blocked {
                    continue;
                }
                let mut v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| &vals[p] * x - &vals[q] * y)
                    .collect();
                primitive(&mut v);
                let mut zero = common;
                set_bit(&mut zero, idx);
                fresh.push(Ray { v, zero });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, v) in rays.into_iter().zip(&vals) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                set_bit(&mut r.zero, idx);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }
    Ok(ConeGenerators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lines,
    })
}

/// Makes `v` orthogonal to `c` by subtracting a multiple of `l` (with c·l = cl > 0).
fn project(v: &mut [BigInt], l: &[BigInt], cl: &BigInt, c: &[BigInt]) {
    let cv = dot_int(c, v);
    if cv.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(l) {
        *x = &*x * cl - &cv * y;
    }
    primitive(v);
}
