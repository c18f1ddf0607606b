//! Reduced words of the longest permutation, braid moves, commutation
//! classes, D/A indices and the contraction/extension operators.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::wiring::{node_sides, Side};

/// Which boundary wire an index, contraction or extension refers to:
/// `D` is the last wire ℓ_{n+1}, `A` the first wire ℓ₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bullet {
    A,
    D,
}

impl Bullet {
    pub const BOTH: [Bullet; 2] = [Bullet::D, Bullet::A];

    pub fn other(self) -> Bullet {
        match self {
            Bullet::A => Bullet::D,
            Bullet::D => Bullet::A,
        }
    }
}

impl fmt::Display for Bullet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bullet::A => "A",
            Bullet::D => "D",
        })
    }
}

impl FromStr for Bullet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Bullet::A),
            "D" | "d" => Ok(Bullet::D),
            other => Err(Error::MalformedWord(format!("unknown bullet {other:?}"))),
        }
    }
}

/// A sequence (σ₁,…,σ_n) witnessing Gelfand–Cetlin type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sigma(pub Vec<Bullet>);

impl Sigma {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// All 2^n sequences in lexicographic order with D before A.
    pub fn all(n: usize) -> Vec<Sigma> {
        (0..1usize << n)
            .map(|mask| {
                Sigma(
                    (0..n)
                        .map(|b| {
                            if mask >> (n - 1 - b) & 1 == 0 {
                                Bullet::D
                            } else {
                                Bullet::A
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Sigma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Sigma(Vec::new()));
        }
        s.split(',').map(str::parse).collect::<Result<Vec<_>>>().map(Sigma)
    }
}

/// A reduced word of w₀ in S_{n+1}. The empty word of rank 0 is allowed so
/// that extension towers can start from nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<u8>,
}

/// Length of w₀ in S_{n+1}.
pub fn longest_length(n: usize) -> usize {
    n * (n + 1) / 2
}

/// One-line notation of s_{i_1}···s_{i_N} acting on {1,…,n+1}.
pub fn evaluate_word(rank: usize, letters: &[u8]) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (1..=rank + 1).collect();
    for &c in letters {
        let c = c as usize;
        if c == 0 || c > rank {
            return Err(Error::MalformedWord(format!("letter {c} outside 1..={rank}")));
        }
        perm.swap(c - 1, c);
    }
    Ok(perm)
}

impl ReducedWord {
    pub fn new(rank: usize, letters: Vec<u8>) -> Result<Self> {
        let perm = evaluate_word(rank, &letters)?;
        if letters.len() != longest_length(rank) || perm.iter().rev().copied().ne(1..=rank + 1) {
            return Err(Error::NotLongest(join(&letters)));
        }
        Ok(ReducedWord { rank, letters })
    }

    /// Builds a word without validation; callers guarantee reducedness.
    pub(crate) fn new_unchecked(rank: usize, letters: Vec<u8>) -> Self {
        debug_assert!(ReducedWord::new(rank, letters.clone()).is_ok());
        ReducedWord { rank, letters }
    }

    pub fn empty() -> Self {
        ReducedWord {
            rank: 0,
            letters: Vec::new(),
        }
    }

    /// Parses `"2,1,3,2,3,1"`; the rank is the largest letter unless given.
    pub fn parse(s: &str, rank: Option<usize>) -> Result<Self> {
        let letters = parse_letters(s)?;
        let rank = rank.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(0) as usize);
        ReducedWord::new(rank, letters)
    }

    /// The standard word (1, 2,1, 3,2,1, …).
    pub fn standard(n: usize) -> Self {
        let letters = (1..=n as u8).flat_map(|k| (1..=k).rev()).collect();
        ReducedWord::new_unchecked(n, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Letter at 0-based position `j`.
    pub fn letter(&self, j: usize) -> usize {
        self.letters[j] as usize
    }

    /// The word with every letter c replaced by n+1−c.
    pub fn reversed_alphabet(&self) -> ReducedWord {
        let n = self.rank as u8;
        ReducedWord::new_unchecked(self.rank, self.letters.iter().map(|&c| n + 1 - c).collect())
    }

    pub fn can_two_move(&self, p: usize) -> bool {
        p + 1 < self.len() && self.letters[p].abs_diff(self.letters[p + 1]) > 1
    }

    pub fn can_three_move(&self, p: usize) -> bool {
        p + 2 < self.len()
            && self.letters[p] == self.letters[p + 2]
            && self.letters[p].abs_diff(self.letters[p + 1]) == 1
    }

    /// Swaps the commuting letters at 0-based positions p and p+1.
    pub fn two_move(&self, p: usize) -> Result<ReducedWord> {
        if !self.can_two_move(p) {
            return Err(Error::MoveNotApplicable { pos: p });
        }
        let mut letters = self.letters.clone();
        letters.swap(p, p + 1);
        Ok(ReducedWord {
            rank: self.rank,
            letters,
        })
    }

    /// Rewrites (i,j,i) into (j,i,j) starting at 0-based position p.
    pub fn three_move(&self, p: usize) -> Result<ReducedWord> {
        if !self.can_three_move(p) {
            return Err(Error::MoveNotApplicable { pos: p });
        }
        let mut letters = self.letters.clone();
        let (i, j) = (letters[p], letters[p + 1]);
        letters[p] = j;
        letters[p + 1] = i;
        letters[p + 2] = j;
        Ok(ReducedWord {
            rank: self.rank,
            letters,
        })
    }

    fn two_move_neighbours(&self) -> impl Iterator<Item = (usize, ReducedWord)> + '_ {
        (0..self.len().saturating_sub(1))
            .filter(|&p| self.can_two_move(p))
            .map(|p| (p, self.two_move(p).expect("checked")))
    }

    /// The 2-move class of this word, with its lexicographically least member.
    pub fn commutation_class(&self) -> CommutationClass {
        let members = self.class_members();
        let canonical = members.iter().min().cloned().expect("class contains the word itself");
        CommutationClass {
            canonical,
            size: Some(members.len()),
        }
    }

    /// Breadth-first closure under 2-moves.
    pub fn class_members(&self) -> Vec<ReducedWord> {
        let mut seen = HashSet::from([self.clone()]);
        let mut queue = VecDeque::from([self.clone()]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for (_, v) in w.two_move_neighbours() {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
            out.push(w);
        }
        out
    }

    pub fn is_commutation_equivalent(&self, other: &ReducedWord) -> bool {
        self.rank == other.rank && self.commutation_class().canonical == other.commutation_class().canonical
    }

    /// Positions p with `word' = word · (p p+1)`, chaining 2-moves from self
    /// to `target` along a shortest BFS path.
    pub fn two_move_chain(&self, target: &ReducedWord) -> Result<Vec<usize>> {
        if self.rank != target.rank {
            return Err(Error::ClassMismatch);
        }
        let mut parent: HashMap<ReducedWord, (ReducedWord, usize)> = HashMap::new();
        let mut queue = VecDeque::from([self.clone()]);
        let mut seen = HashSet::from([self.clone()]);
        while let Some(w) = queue.pop_front() {
            if &w == target {
                let mut chain = Vec::new();
                let mut cur = w;
                while let Some((prev, p)) = parent.get(&cur) {
                    chain.push(*p);
                    cur = prev.clone();
                }
                chain.reverse();
                return Ok(chain);
            }
            for (p, v) in w.two_move_neighbours() {
                if seen.insert(v.clone()) {
                    parent.insert(v.clone(), (w.clone(), p));
                    queue.push_back(v);
                }
            }
        }
        Err(Error::ClassMismatch)
    }

    /// Number of crossings strictly below ℓ_{n+1} (D) or ℓ₁ (A).
    pub fn ind(&self, bullet: Bullet) -> usize {
        node_sides(self, bullet).iter().filter(|s| **s == Side::Below).count()
    }

    /// Number of crossings strictly above ℓ_{n+1} (D) or ℓ₁ (A).
    pub fn coind(&self, bullet: Bullet) -> usize {
        node_sides(self, bullet).iter().filter(|s| **s == Side::Above).count()
    }

    /// Splits the word, up to 2-moves, as prefix · D_n · suffix (or with the
    /// ascending block A_n). Crossings above the boundary wire commute past
    /// the crossings on it, so a stable partition by side is a valid sequence
    /// of 2-moves.
    pub fn normal_form(&self, bullet: Bullet) -> NormalForm {
        let sides = node_sides(self, bullet);
        let pick = |side: Side| -> Vec<u8> {
            self.letters
                .iter()
                .zip(&sides)
                .filter(|(_, s)| **s == side)
                .map(|(c, _)| *c)
                .collect()
        };
        let on = pick(Side::On);
        debug_assert_eq!(on, boundary_block(self.rank, bullet));
        NormalForm {
            prefix: pick(Side::Above),
            suffix: pick(Side::Below),
        }
    }

    /// Removes the boundary wire: C_D = prefix · (suffix − 1),
    /// C_A = (prefix − 1) · suffix.
    pub fn contract(&self, bullet: Bullet) -> ReducedWord {
        if self.rank == 0 {
            return self.clone();
        }
        let NormalForm { prefix, suffix } = self.normal_form(bullet);
        let letters = match bullet {
            Bullet::D => prefix.into_iter().chain(suffix.into_iter().map(|c| c - 1)).collect(),
            Bullet::A => prefix.into_iter().map(|c| c - 1).chain(suffix).collect(),
        };
        ReducedWord::new_unchecked(self.rank - 1, letters)
    }

    /// Inserts a new boundary wire with s crossings below it.
    pub fn extend(&self, bullet: Bullet, s: usize) -> Result<ReducedWord> {
        let len = self.len();
        if s > len {
            return Err(Error::OutOfRange(format!(
                "extension point {s} exceeds word length {len}"
            )));
        }
        let (head, tail) = self.letters.split_at(len - s);
        let block = boundary_block(self.rank + 1, bullet);
        let letters: Vec<u8> = match bullet {
            Bullet::D => head
                .iter()
                .copied()
                .chain(block)
                .chain(tail.iter().map(|c| c + 1))
                .collect(),
            Bullet::A => head
                .iter()
                .map(|c| c + 1)
                .chain(block)
                .chain(tail.iter().copied())
                .collect(),
        };
        Ok(ReducedWord::new_unchecked(self.rank + 1, letters))
    }

    /// Some σ with ind_{σ_k}(C_{σ_{k+1}} ∘ ⋯ ∘ C_{σ_n}(w)) = 0 for all k,
    /// searching D before A.
    pub fn gc_type(&self) -> Option<Sigma> {
        let mut memo = HashMap::new();
        gc_search(self, &mut memo).map(Sigma)
    }
}

fn gc_search(w: &ReducedWord, memo: &mut HashMap<ReducedWord, Option<Vec<Bullet>>>) -> Option<Vec<Bullet>> {
    match w.rank {
        0 => return Some(Vec::new()),
        1 => return Some(vec![Bullet::D]),
        _ => {}
    }
    let key = w.commutation_class().canonical;
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let found = Bullet::BOTH.into_iter().find_map(|b| {
        if w.ind(b) != 0 {
            return None;
        }
        gc_search(&w.contract(b), memo).map(|mut s| {
            s.push(b);
            s
        })
    });
    memo.insert(key, found.clone());
    found
}

/// (n, n−1, …, 1) for D and (1, …, n) for A.
pub fn boundary_block(n: usize, bullet: Bullet) -> Vec<u8> {
    let up = 1..=n as u8;
    match bullet {
        Bullet::D => up.rev().collect(),
        Bullet::A => up.collect(),
    }
}

/// (E_{σ_n}(0) ∘ ⋯ ∘ E_{σ_1}(0))(∅).
pub fn sigma_word(sigma: &Sigma) -> ReducedWord {
    sigma.0.iter().fold(ReducedWord::empty(), |w, &b| {
        w.extend(b, 0).expect("s = 0 is always valid")
    })
}

/// The word split around its boundary block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub prefix: Vec<u8>,
    pub suffix: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationClass {
    pub canonical: ReducedWord,
    pub size: Option<usize>,
}

/// All reduced words of w₀ in S_{n+1}, in lexicographic order.
pub fn enumerate_reduced_words(n: usize) -> Result<Vec<ReducedWord>> {
    if n == 0 {
        return Err(Error::OutOfRange("rank must be at least 1".into()));
    }
    fn rec(n: usize, perm: &mut Vec<usize>, prefix: &mut Vec<u8>, out: &mut Vec<ReducedWord>) {
        if prefix.len() == longest_length(n) {
            out.push(ReducedWord::new_unchecked(n, prefix.clone()));
            return;
        }
        for c in 1..=n {
            if perm[c - 1] < perm[c] {
                perm.swap(c - 1, c);
                prefix.push(c as u8);
                rec(n, perm, prefix, out);
                prefix.pop();
                perm.swap(c - 1, c);
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut (1..=n + 1).collect(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Groups words into 2-move classes keyed by canonical representative,
/// sorted by that representative.
pub fn commutation_classes(words: &[ReducedWord]) -> Vec<CommutationClass> {
    let mut seen: HashSet<ReducedWord> = HashSet::new();
    let mut classes = Vec::new();
    for w in words {
        if seen.contains(w) {
            continue;
        }
        let members = w.class_members();
        let canonical = members.iter().min().cloned().expect("nonempty");
        let size = members.len();
        seen.extend(members);
        classes.push(CommutationClass {
            canonical,
            size: Some(size),
        });
    }
    classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    classes
}

pub(crate) fn parse_letters(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    s.trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u8>()
                .ok()
                .filter(|&c| c > 0)
                .ok_or_else(|| Error::MalformedWord(format!("bad letter {:?}", tok.trim())))
        })
        .collect()
}

pub(crate) fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.letters))
    }
}

impl FromStr for ReducedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ReducedWord::parse(s, None)
    }
}
