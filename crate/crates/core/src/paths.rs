//! Rigorous (Gleizer–Postnikov) paths on oriented wiring diagrams.

use std::fmt;

use crate::error::{Error, Result};
use crate::wiring::{Orientation, Side, WiringDiagram};
use crate::words::{Bullet, ReducedWord};

/// A change of wire at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Switch {
    pub node: usize,
    pub from: usize,
    pub to: usize,
}

/// A path from L_k to L_{k+1}. Node indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RigorousPath {
    pub k: usize,
    pub switches: Vec<Switch>,
    /// Every crossing met, in travel order, with the wire travelled on.
    pub visited: Vec<(usize, usize)>,
}

impl RigorousPath {
    pub fn switch_nodes(&self) -> Vec<usize> {
        self.switches.iter().map(|s| s.node).collect()
    }

    pub fn wire_sequence(&self) -> Vec<usize> {
        std::iter::once(self.k)
            .chain(self.switches.iter().map(|s| s.to))
            .collect()
    }

    /// +1 at a switch to a higher wire, −1 at a switch to a lower one.
    pub fn coeffs(&self, len: usize) -> Vec<i64> {
        let mut c = vec![0; len];
        for s in &self.switches {
            c[s.node] += if s.from < s.to { 1 } else { -1 };
        }
        c
    }

    /// Switches from an upward wire onto a downward wire.
    pub fn peaks(&self) -> Vec<usize> {
        let o = Orientation { k: self.k };
        self.switches
            .iter()
            .filter(|s| o.is_up(s.from) && !o.is_up(s.to))
            .map(|s| s.node)
            .collect()
    }

    /// `L2 -> t3 -> t4 -> t2 -> L3`
    pub fn node_expression(&self) -> String {
        let mut parts = vec![format!("L{}", self.k)];
        parts.extend(self.switches.iter().map(|s| format!("t{}", s.node + 1)));
        parts.push(format!("L{}", self.k + 1));
        parts.join(" -> ")
    }

    /// `ℓ2 -> ℓ4 -> ℓ1 -> ℓ3`
    pub fn wire_expression(&self) -> String {
        self.wire_sequence()
            .iter()
            .map(|w| format!("ℓ{w}"))
            .collect::<Vec<_>>()
            .join(" -> ")
    }

    /// The image under ℓ_a ↦ ℓ_{n+2−a} with travel reversed: a path of the
    /// reversed-alphabet word at level n+1−k.
    pub fn mirrored(&self, n: usize) -> RigorousPath {
        let m = |w: usize| n + 2 - w;
        let switches = self
            .switches
            .iter()
            .rev()
            .map(|s| Switch {
                node: s.node,
                from: m(s.to),
                to: m(s.from),
            })
            .collect();
        let mut visited = Vec::with_capacity(self.visited.len());
        // the wire travelled at each crossing changes at switches
        let mut wire_after = std::collections::HashMap::new();
        for s in &self.switches {
            wire_after.insert(s.node, s.to);
        }
        for &(node, wire) in self.visited.iter().rev() {
            let on = wire_after.get(&node).copied().unwrap_or(wire);
            visited.push((node, m(on)));
        }
        RigorousPath {
            k: n + 1 - self.k,
            switches,
            visited,
        }
    }
}

impl fmt::Display for RigorousPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.node_expression())
    }
}

/// Passing straight through a crossing of two equally oriented wires is
/// forbidden when both point down and we are on the higher wire, or both
/// point up and we are on the lower wire.
fn pass_forbidden(o: Orientation, current: usize, other: usize) -> bool {
    let up = o.is_up(current);
    up == o.is_up(other) && if up { current < other } else { current > other }
}

/// All rigorous paths of G(word, k), sorted by switch-node sequence.
pub fn enumerate_paths(word: &ReducedWord, k: usize) -> Result<Vec<RigorousPath>> {
    let n = word.rank();
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("level {k} outside 1..={n}")));
    }
    let diagram = WiringDiagram::new(word);
    Ok(paths_on(&diagram, k))
}

pub(crate) fn paths_on(diagram: &WiringDiagram, k: usize) -> Vec<RigorousPath> {
    struct Walk<'a> {
        d: &'a WiringDiagram,
        o: Orientation,
        target: usize,
        out: Vec<RigorousPath>,
        switches: Vec<Switch>,
        visited: Vec<(usize, usize)>,
        seen: Vec<bool>,
    }

    impl Walk<'_> {
        /// Continue on `wire` from itinerary slot `start`.
        fn go(&mut self, wire: usize, start: usize) {
            let it = self.d.itinerary(wire);
            let up = self.o.is_up(wire);
            let slots: Box<dyn Iterator<Item = usize>> = if up {
                Box::new(start..it.len())
            } else {
                Box::new((0..start).rev())
            };
            let mark = self.visited.len();
            let mut completed = true;
            for q in slots {
                let j = it[q];
                if self.seen[j] {
                    completed = false;
                    break;
                }
                self.seen[j] = true;
                self.visited.push((j, wire));
                let other = self.d.node(j).other(wire);
                let oit = self.d.itinerary(other);
                let oq = oit.iter().position(|&x| x == j).expect("crossing on both wires");
                self.switches.push(Switch {
                    node: j,
                    from: wire,
                    to: other,
                });
                let next = if self.o.is_up(other) { oq + 1 } else { oq };
                self.go(other, next);
                self.switches.pop();
                if pass_forbidden(self.o, wire, other) {
                    completed = false;
                    break;
                }
            }
            if completed && !up && wire == self.target {
                self.out.push(RigorousPath {
                    k: self.o.k,
                    switches: self.switches.clone(),
                    visited: self.visited.clone(),
                });
            }
            for &(j, _) in &self.visited[mark..] {
                self.seen[j] = false;
            }
            self.visited.truncate(mark);
        }
    }

    let mut walk = Walk {
        d: diagram,
        o: Orientation { k },
        target: k + 1,
        out: Vec::new(),
        switches: Vec::new(),
        visited: Vec::new(),
        seen: vec![false; diagram.nodes().len()],
    };
    walk.go(k, 0);
    let mut out = walk.out;
    out.sort_by_key(RigorousPath::switch_nodes);
    out
}

/// Every rigorous path, level by level.
pub fn all_paths(word: &ReducedWord) -> Vec<RigorousPath> {
    let diagram = WiringDiagram::new(word);
    (1..=word.rank()).flat_map(|k| paths_on(&diagram, k)).collect()
}

/// ‖i‖, the number of rigorous paths.
pub fn path_count(word: &ReducedWord) -> usize {
    all_paths(word).len()
}

/// A path is •-new when one of its switches lies on ℓ_{n+1} (D) or ℓ₁ (A).
pub fn is_new(path: &RigorousPath, word: &ReducedWord, bullet: Bullet) -> bool {
    let diagram = WiringDiagram::new(word);
    let target = boundary_wire(word.rank(), bullet);
    path.switches.iter().any(|s| diagram.node(s.node).touches(target))
}

fn boundary_wire(n: usize, bullet: Bullet) -> usize {
    match bullet {
        Bullet::D => n + 1,
        Bullet::A => 1,
    }
}

/// The •-canonical path whose peak is the crossing of ℓ_k with ℓ_{n+1}
/// (D) or of ℓ₁ with ℓ_{k+1} (A).
pub fn canonical_path(word: &ReducedWord, k: usize, bullet: Bullet) -> Result<RigorousPath> {
    let n = word.rank();
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..={n}")));
    }
    match bullet {
        Bullet::D => canonical_d(word, k),
        Bullet::A => canonical_d(&word.reversed_alphabet(), n + 1 - k).map(|p| p.mirrored(n)),
    }
}

fn canonical_d(word: &ReducedWord, k: usize) -> Result<RigorousPath> {
    let n = word.rank();
    let top = n + 1;
    let diagram = WiringDiagram::new(word);
    let sides = diagram.sides(Bullet::D);
    let strictly_falling = |ws: &[usize]| ws.windows(2).all(|p| p[0] > p[1]);
    let found: Vec<RigorousPath> = (1..=n)
        .flat_map(|level| paths_on(&diagram, level))
        .filter(|p| {
            let peaks = p.peaks();
            if peaks.len() != 1 {
                return false;
            }
            let Some(peak) = p.switches.iter().find(|s| s.node == peaks[0]) else {
                return false;
            };
            if peak.from != k || peak.to != top {
                return false;
            }
            let wires = p.wire_sequence();
            let split = wires.iter().position(|&w| w == top).expect("peak enters the top wire");
            if !strictly_falling(&wires[..split]) || !strictly_falling(&wires[split..]) {
                return false;
            }
            if p.visited.iter().any(|&(j, _)| sides[j] == Side::Above) {
                return false;
            }
            // Greedy maximality: no larger wire could have been inserted.
            let switched: Vec<usize> = p.switch_nodes();
            let at = p
                .visited
                .iter()
                .position(|&(j, _)| j == peak.node)
                .expect("peak visited");
            let after_top = wires.get(split + 1).copied();
            let passes = |range: &[(usize, usize)], bound: Option<usize>| {
                range.iter().all(|&(j, w)| {
                    if switched.contains(&j) {
                        return true;
                    }
                    let o = diagram.node(j).other(w);
                    o == top || bound.is_none_or(|b| o <= b)
                })
            };
            passes(&p.visited[..at], Some(p.k)) && passes(&p.visited[at + 1..], after_top)
        })
        .collect();
    match <[RigorousPath; 1]>::try_from(found) {
        Ok([p]) => Ok(p),
        Err(v) => Err(Error::Invariant(format!(
            "{} candidate canonical paths for {word}, k = {k}",
            v.len()
        ))),
    }
}
