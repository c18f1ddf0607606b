//! Wiring diagrams, orientations and chamber variables.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Bullet, ReducedWord};

/// One crossing. `j` is 0-based from the top; `wires` is sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Node {
    pub j: usize,
    pub column: usize,
    pub wires: (usize, usize),
}

impl Node {
    pub fn touches(&self, wire: usize) -> bool {
        self.wires.0 == wire || self.wires.1 == wire
    }

    /// The wire crossing `wire` here.
    pub fn other(&self, wire: usize) -> usize {
        if self.wires.0 == wire {
            self.wires.1
        } else {
            self.wires.0
        }
    }
}

/// The pseudoline arrangement of a reduced word. Wires ℓ₁…ℓ_{n+1} enter at
/// the bottom from left to right; node t_j of column c swaps the wires at
/// positions n+1−c and n+2−c, processing t_N first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringDiagram {
    rank: usize,
    nodes: Vec<Node>,
    itinerary: Vec<Vec<usize>>,
    top_order: Vec<usize>,
}

impl WiringDiagram {
    pub fn new(word: &ReducedWord) -> Self {
        let n = word.rank();
        let mut pos: Vec<usize> = (1..=n + 1).collect();
        let mut nodes = vec![
            Node {
                j: 0,
                column: 0,
                wires: (0, 0)
            };
            word.len()
        ];
        let mut itinerary = vec![Vec::new(); n + 2];
        for j in (0..word.len()).rev() {
            let c = word.letter(j);
            let p = n + 1 - c;
            let (a, b) = (pos[p - 1], pos[p]);
            nodes[j] = Node {
                j,
                column: c,
                wires: (a.min(b), a.max(b)),
            };
            itinerary[a].push(j);
            itinerary[b].push(j);
            pos.swap(p - 1, p);
        }
        WiringDiagram {
            rank: n,
            nodes,
            itinerary,
            top_order: pos,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> &Node {
        &self.nodes[j]
    }

    /// Node indices met by wire ℓ_m from its lower end upward.
    pub fn itinerary(&self, m: usize) -> &[usize] {
        &self.itinerary[m]
    }

    pub fn bottom_order(&self) -> Vec<usize> {
        (1..=self.rank + 1).collect()
    }

    pub fn top_order(&self) -> &[usize] {
        &self.top_order
    }

    /// The crossing of ℓ_a and ℓ_b.
    pub fn crossing(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.nodes.iter().position(|nd| nd.wires == key)
    }

    /// Crossings strictly below ℓ₁ or ℓ_{n+1}.
    pub fn nodes_below_wire(&self, wire: usize) -> Result<usize> {
        let bullet = self.boundary_bullet(wire)?;
        Ok(self.sides(bullet).iter().filter(|s| **s == Side::Below).count())
    }

    fn boundary_bullet(&self, wire: usize) -> Result<Bullet> {
        match wire {
            1 => Ok(Bullet::A),
            w if w == self.rank + 1 => Ok(Bullet::D),
            w => Err(Error::OutOfRange(format!("ℓ{w} is not a boundary wire"))),
        }
    }

    /// Position of every node relative to the boundary wire of `bullet`.
    pub fn sides(&self, bullet: Bullet) -> Vec<Side> {
        let n = self.rank;
        let target = match bullet {
            Bullet::D => n + 1,
            Bullet::A => 1,
        };
        let mut pos: Vec<usize> = (1..=n + 1).collect();
        let mut sides = vec![Side::On; self.nodes.len()];
        for j in (0..self.nodes.len()).rev() {
            let p = n + 1 - self.nodes[j].column;
            let tp = pos.iter().position(|&w| w == target).expect("wire present") + 1;
            sides[j] = if self.nodes[j].touches(target) {
                Side::On
            } else {
                let below = match bullet {
                    Bullet::D => p + 1 < tp,
                    Bullet::A => p > tp,
                };
                if below {
                    Side::Below
                } else {
                    Side::Above
                }
            };
            pos.swap(p - 1, p);
        }
        sides
    }
}

impl fmt::Display for WiringDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for nd in &self.nodes {
            writeln!(f, "{} {} {{{},{}}}", nd.j + 1, nd.column, nd.wires.0, nd.wires.1)?;
        }
        Ok(())
    }
}

/// Where a crossing sits relative to a boundary wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Above,
    On,
    Below,
}

pub fn node_sides(word: &ReducedWord, bullet: Bullet) -> Vec<Side> {
    WiringDiagram::new(word).sides(bullet)
}

/// G(i,k): wires ℓ₁…ℓ_k point up, the rest point down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orientation {
    pub k: usize,
}

impl Orientation {
    pub fn is_up(self, wire: usize) -> bool {
        wire <= self.k
    }
}

/// Coefficient of t_k in the λ-inequality of t_j (k > j): −2 in the same
/// column, 1 in an adjacent one, 0 otherwise.
pub fn lambda_coefficient(word: &ReducedWord, j: usize, k: usize) -> i64 {
    match word.letter(j).abs_diff(word.letter(k)) {
        0 => -2,
        1 => 1,
        _ => 0,
    }
}

/// The unimodular change of variables u = F·t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberBasis {
    pub forward: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<i64>>,
}

impl ChamberBasis {
    /// u_j = U_j − U_{j'} with U_j = t_j − Σ_{k>j} a_k t_k and j' the next
    /// node below t_j in its column.
    pub fn new(word: &ReducedWord) -> Self {
        let len = word.len();
        let big_u = |j: usize| -> Vec<i64> {
            let mut row = vec![0; len];
            row[j] = 1;
            for (k, r) in row.iter_mut().enumerate().skip(j + 1) {
                *r -= lambda_coefficient(word, j, k);
            }
            row
        };
        let forward: Vec<Vec<i64>> = (0..len)
            .map(|j| {
                let mut row = big_u(j);
                if let Some(next) = (j + 1..len).find(|&k| word.letter(k) == word.letter(j)) {
                    for (r, x) in row.iter_mut().zip(big_u(next)) {
                        *r -= x;
                    }
                }
                row
            })
            .collect();
        let inverse = unitriangular_inverse(&forward);
        ChamberBasis { forward, inverse }
    }

    /// Rewrites a t-form c·t as a u-form c·F⁻¹·u.
    pub fn to_chamber(&self, coeffs: &[i64]) -> Vec<i64> {
        let len = self.inverse.len();
        (0..len)
            .map(|col| (0..len).map(|r| coeffs[r] * self.inverse[r][col]).sum())
            .collect()
    }
}

/// Inverse of an upper unitriangular integer matrix by back substitution.
#[allow(clippy::needless_range_loop)]
fn unitriangular_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let len = m.len();
    let mut inv = vec![vec![0i64; len]; len];
    for col in 0..len {
        for row in (0..len).rev() {
            let target = i64::from(row == col);
            let acc: i64 = (row + 1..len).map(|k| m[row][k] * inv[k][col]).sum();
            inv[row][col] = target - acc;
        }
    }
    inv
}
