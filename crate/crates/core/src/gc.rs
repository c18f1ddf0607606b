//! Gelfand–Cetlin polytopes and the explicit unimodular equivalence with
//! string polytopes of GC-type words.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::inequalities::{block_index, lambda_functional, string_polytope, HPolyhedron, LinearForm, Origin, Weight};
use crate::paths::path_count;
use crate::polyhedra::{linalg::Q, AffineMap, Polyhedron, VRep};
use crate::words::{longest_length, sigma_word, Bullet, ReducedWord, Sigma};

/// Symbolic value Σ_{i ≥ from} λ_i over (1, λ₁, …, λ_n).
fn tail_sum(n: usize, from: usize) -> Vec<i64> {
    (0..=n).map(|i| i64::from(i >= from)).collect()
}

/// Interlacing inequalities x_{k+1,j} ≥ x_{k,j} ≥ x_{k+1,j+1} with the top row
/// fixed to x_{n+1,j} = λ_j + ⋯ + λ_n.
pub fn gc_forms(n: usize) -> HPolyhedron {
    let len = longest_length(n);
    let x = |k: usize, j: usize| -> LinearForm {
        if k == n + 1 {
            LinearForm {
                coeffs: vec![0; len],
                constant: tail_sum(n, j),
            }
        } else {
            LinearForm::var(len, n, block_index(k, j))
        }
    };
    let mut h = HPolyhedron::new(len);
    for k in 1..=n {
        for j in 1..=k {
            h.push(x(k + 1, j) - x(k, j), Origin::Other).expect("same length");
            h.push(x(k, j) - x(k + 1, j + 1), Origin::Other).expect("same length");
        }
    }
    h
}

pub fn gc_polytope(n: usize, weight: &Weight) -> Result<Polyhedron> {
    weight.check_rank(n)?;
    Polyhedron::new(longest_length(n), gc_forms(n).constraints(weight))
}

/// The string polytope of `word` at a concrete weight.
pub fn string_polyhedron(word: &ReducedWord, weight: &Weight) -> Result<Polyhedron> {
    weight.check_rank(word.rank())?;
    Polyhedron::new(word.len(), string_polytope(word).constraints(weight))
}

type Rows = Vec<Vec<i64>>;

/// A_k: 1 on the diagonal, −1 just above it.
pub fn block_a(k: usize) -> Vec<Vec<i64>> {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|c| match c as isize - i as isize {
                    0 => 1,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// D_k: −1 on the antidiagonal, +1 just right of it from the second row on.
pub fn block_d(k: usize) -> Vec<Vec<i64>> {
    (1..=k)
        .map(|i| {
            (1..=k)
                .map(|c| {
                    if c == k - i + 1 {
                        -1
                    } else if i >= 2 && c == k - i + 2 {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// M and v with v kept symbolic over (1, λ₁, …, λ_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMap {
    pub sigma: Sigma,
    pub matrix: Vec<Vec<i64>>,
    pub shift: Vec<Vec<i64>>,
}

impl SymbolicMap {
    pub fn rank(&self) -> usize {
        self.sigma.rank()
    }

    /// Rows of M belonging to x_{k,·}.
    pub fn block_rows(&self, k: usize) -> &[Vec<i64>] {
        &self.matrix[block_index(k, 1)..block_index(k, 1) + k]
    }

    /// v_k as symbolic entries.
    pub fn block_shift(&self, k: usize) -> &[Vec<i64>] {
        &self.shift[block_index(k, 1)..block_index(k, 1) + k]
    }

    /// x_{k,j} as a linear form in t with a λ-symbolic constant.
    pub fn image_form(&self, k: usize, j: usize) -> LinearForm {
        let row = block_index(k, j);
        LinearForm {
            coeffs: self.matrix[row].clone(),
            constant: self.shift[row].clone(),
        }
    }

    pub fn instantiate(&self, weight: &Weight) -> AffineMap {
        let shift = self
            .shift
            .iter()
            .map(|c| c[0] + weight.coeffs().iter().zip(&c[1..]).map(|(l, x)| l * x).sum::<i64>())
            .collect();
        AffineMap {
            matrix: self.matrix.clone(),
            shift,
        }
    }
}

/// Assembles M from its block rows M_{n,*} up to M_{1,*}: each block row
/// drops the first (σ_k = A) or last (σ_k = D) row of the one below and puts
/// A_k or D_k on the diagonal.
pub fn build_map(sigma: &Sigma) -> SymbolicMap {
    let n = sigma.rank();
    let len = longest_length(n);
    let mut blocks: Vec<(Rows, Rows)> = vec![Default::default(); n + 1];
    for k in (1..=n).rev() {
        let bullet = sigma.0[k - 1];
        let (mut rows, mut shift) = if k == n {
            let shift = (1..=n)
                .map(|j| match bullet {
                    Bullet::A => tail_sum(n, j + 1),
                    Bullet::D => tail_sum(n, j),
                })
                .collect();
            (vec![vec![0; len]; n], shift)
        } else {
            let (mut rows, mut shift) = blocks[k + 1].clone();
            match bullet {
                Bullet::A => {
                    rows.remove(0);
                    shift.remove(0);
                }
                Bullet::D => {
                    rows.pop();
                    shift.pop();
                }
            }
            (rows, shift)
        };
        let diag = match bullet {
            Bullet::A => block_a(k),
            Bullet::D => block_d(k),
        };
        let c0 = block_index(k, 1);
        for (row, drow) in rows.iter_mut().zip(&diag) {
            row[c0..c0 + k].copy_from_slice(drow);
        }
        blocks[k] = (std::mem::take(&mut rows), std::mem::take(&mut shift));
    }
    let mut matrix = Vec::with_capacity(len);
    let mut shift = Vec::with_capacity(len);
    for (rows, sh) in blocks.into_iter().skip(1) {
        matrix.extend(rows);
        shift.extend(sh);
    }
    SymbolicMap {
        sigma: sigma.clone(),
        matrix,
        shift,
    }
}

/// π with (π·t)_q = t_{π[q]}, transporting coordinates of `from` to those
/// of `to` along a chain of 2-moves.
pub fn two_move_permutation(from: &ReducedWord, to: &ReducedWord) -> Result<Vec<usize>> {
    let chain = from.two_move_chain(to)?;
    let mut src: Vec<usize> = (0..from.len()).collect();
    for p in chain {
        src.swap(p, p + 1);
    }
    Ok(src)
}

/// The affine map onto GC(λ) for a GC-type word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcMap {
    pub sigma: Sigma,
    pub permutation: Vec<usize>,
    pub symbolic: SymbolicMap,
    /// x = M·(π·t) + v at the given weight.
    pub affine: AffineMap,
}

impl GcMap {
    /// Vertices of Δ_word(λ) pushed forward.
    pub fn image(&self, string_vertices: &VRep) -> VRep {
        string_vertices.apply_affine(&self.affine)
    }
}

/// Composes M with the coordinate permutation.
fn compose_permutation(matrix: &[Vec<i64>], perm: &[usize]) -> Vec<Vec<i64>> {
    matrix
        .iter()
        .map(|row| {
            let mut out = vec![0; row.len()];
            for (q, &src) in perm.iter().enumerate() {
                out[src] += row[q];
            }
            out
        })
        .collect()
}

pub fn gc_map(word: &ReducedWord, weight: &Weight) -> Result<Option<GcMap>> {
    weight.check_rank(word.rank())?;
    let Some(sigma) = word.gc_type() else {
        return Ok(None);
    };
    let target = sigma_word(&sigma);
    let permutation = two_move_permutation(word, &target)?;
    let symbolic = build_map(&sigma);
    let base = symbolic.instantiate(weight);
    let affine = AffineMap {
        matrix: compose_permutation(&base.matrix, &permutation),
        shift: base.shift,
    };
    Ok(Some(GcMap {
        sigma,
        permutation,
        symbolic,
        affine,
    }))
}

/// Checks that the map sends the vertex set of Δ_word(λ) exactly onto that
/// of GC(λ).
pub fn verify_gc_map(word: &ReducedWord, weight: &Weight, map: &GcMap) -> Result<bool> {
    let source = string_polyhedron(word, weight)?.vertices()?;
    let mut image = map.image(&source).vertices;
    image.sort();
    image.dedup();
    let target = gc_polytope(word.rank(), weight)?.vertices()?;
    Ok(image == target.sorted_vertices() && map.affine.determinant().abs() == Q::from_integer(1.into()))
}

/// One row of the classification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub canonical: ReducedWord,
    pub class_size: usize,
    pub path_count: usize,
    pub facets: usize,
    pub simplicial: bool,
    pub gc_type: Option<Sigma>,
    pub map_verified: bool,
}

impl ClassRow {
    pub fn is_gc_type(&self) -> bool {
        self.gc_type.is_some()
    }
}

/// Evaluates the four equivalent conditions on one class and insists they
/// agree: n(n+1) facets, ‖i‖ = N, a vanishing nested index sequence, and a
/// verified unimodular map.
pub fn classify_class(canonical: &ReducedWord, class_size: usize, weight: &Weight) -> Result<ClassRow> {
    let n = canonical.rank();
    if !weight.is_regular() {
        return Err(Error::MalformedWeight("classification needs a regular weight".into()));
    }
    let paths = path_count(canonical);
    let facets = string_polyhedron(canonical, weight)?
        .remove_redundant()?
        .constraints()
        .len();
    let simplicial = paths == canonical.len();
    let gc_type = canonical.gc_type();
    let map_verified = match gc_map(canonical, weight)? {
        Some(m) => verify_gc_map(canonical, weight, &m)?,
        None => false,
    };
    let row = ClassRow {
        canonical: canonical.clone(),
        class_size,
        path_count: paths,
        facets,
        simplicial,
        gc_type,
        map_verified,
    };
    let conditions = [facets == n * (n + 1), simplicial, row.is_gc_type(), map_verified];
    if conditions.iter().any(|&c| c != conditions[0]) {
        return Err(Error::Invariant(format!(
            "classification conditions disagree on {canonical}: {conditions:?}"
        )));
    }
    if facets != paths + canonical.len() {
        return Err(Error::Invariant(format!(
            "{canonical}: {facets} facets but {paths} paths"
        )));
    }
    Ok(row)
}

/// Every commutation class of rank n, sorted by canonical word.
pub fn classify(n: usize, weight: &Weight) -> Result<Vec<ClassRow>> {
    weight.check_rank(n)?;
    let words = crate::words::enumerate_reduced_words(n)?;
    crate::words::commutation_classes(&words)
        .iter()
        .map(|c| classify_class(&c.canonical, c.size.unwrap_or(0), weight))
        .collect()
}

/// Letter i_{k,j} of a σ-built word.
fn letter_at(word: &ReducedWord, k: usize, j: usize) -> usize {
    word.letter(block_index(k, j))
}

fn mismatch(what: &str, sigma: &Sigma, k: usize, j: usize) -> Error {
    Error::Invariant(format!("{what} fails for σ = ({sigma}) at (k, j) = ({k}, {j})"))
}

/// v_k(j) − v_k(j+1) equals λ_{i_{k,j+1}} (σ_k = A) or λ_{i_{k,k−j+1}} (σ_k = D).
pub fn check_weight_differences(sigma: &Sigma) -> Result<()> {
    let n = sigma.rank();
    let map = build_map(sigma);
    let word = sigma_word(sigma);
    for k in 1..=n {
        let v = map.block_shift(k);
        for j in 1..k {
            let diff: Vec<i64> = v[j - 1].iter().zip(&v[j]).map(|(a, b)| a - b).collect();
            let i = match sigma.0[k - 1] {
                Bullet::A => letter_at(&word, k, j + 1),
                Bullet::D => letter_at(&word, k, k - j + 1),
            };
            let mut expect = vec![0; n + 1];
            expect[i] = 1;
            if diff != expect {
                return Err(mismatch("weight difference", sigma, k, j));
            }
        }
    }
    Ok(())
}

/// t_{k,j} with the conventions t_{k,k+1} = 0 and t_{n+1,·} = 0.
fn t_var(n: usize, k: usize, j: usize) -> LinearForm {
    let len = longest_length(n);
    if k > n || j > k || j == 0 {
        LinearForm::zero(len, n)
    } else {
        LinearForm::var(len, n, block_index(k, j))
    }
}

fn s_functional(word: &ReducedWord, k: usize, j: usize) -> Result<LinearForm> {
    let n = word.rank();
    if k > n || j > k {
        return Ok(LinearForm::zero(word.len(), n));
    }
    lambda_functional(word, k, j)
}

/// The recursion for S_{k,j} through S_{k+1,·}.
pub fn check_functional_recursion(sigma: &Sigma) -> Result<()> {
    let n = sigma.rank();
    let word = sigma_word(sigma);
    let t = |k, j| t_var(n, k, j);
    for k in 1..=n {
        for j in 1..=k {
            let s = s_functional(&word, k, j)?;
            let expect = if k == n {
                -t(n, j) + t(n, j + 1)
            } else {
                let same = sigma.0[k - 1] == sigma.0[k];
                let base = -t(k, j) + t(k, j + 1);
                if same {
                    base + t(k + 1, j) - t(k + 1, j + 1) + s_functional(&word, k + 1, j + 1)?
                } else {
                    base + t(k + 1, k - j + 1) - t(k + 1, k - j + 2) + s_functional(&word, k + 1, k - j + 2)?
                }
            };
            if s != expect {
                return Err(mismatch("functional recursion", sigma, k, j));
            }
        }
    }
    Ok(())
}

/// x_{k,j} − x_{k,j+1} expressed through t, S and the weight differences.
pub fn check_difference_recursion(sigma: &Sigma) -> Result<()> {
    let n = sigma.rank();
    let len = longest_length(n);
    let word = sigma_word(sigma);
    let map = build_map(sigma);
    let t = |k, j| t_var(n, k, j);
    // λ_{k+1,j} as a constant form
    let weight_diff = |k1: usize, j: usize| -> LinearForm {
        if k1 == n + 1 {
            LinearForm::lambda(len, n, j)
        } else {
            let v = map.block_shift(k1);
            LinearForm {
                coeffs: vec![0; len],
                constant: v[j - 1].iter().zip(&v[j]).map(|(a, b)| a - b).collect(),
            }
        }
    };
    for k in 1..=n {
        for j in 1..k {
            let lhs = map.image_form(k, j) - map.image_form(k, j + 1);
            let rhs = match sigma.0[k - 1] {
                Bullet::A => t(k, j) - t(k, j + 1) + s_functional(&word, k, j + 1)? + weight_diff(k + 1, j + 1),
                Bullet::D => t(k, k - j) - t(k, k - j + 1) + s_functional(&word, k, k - j + 1)? + weight_diff(k + 1, j),
            };
            if lhs != rhs {
                return Err(mismatch("difference recursion", sigma, k, j));
            }
        }
    }
    Ok(())
}

/// Each row x_{k,·} follows from x_{k+1,·} by the one-step rule of the map.
pub fn check_row_recursion(sigma: &Sigma) -> Result<()> {
    let n = sigma.rank();
    let len = longest_length(n);
    let map = build_map(sigma);
    let t = |k, j| t_var(n, k, j);
    let x = |k: usize, j: usize| -> LinearForm {
        if k == n + 1 {
            LinearForm {
                coeffs: vec![0; len],
                constant: tail_sum(n, j),
            }
        } else {
            map.image_form(k, j)
        }
    };
    for k in 1..=n {
        for j in 1..=k {
            let expect = match sigma.0[k - 1] {
                Bullet::A => x(k + 1, j + 1) + t(k, j) - t(k, j + 1),
                Bullet::D => x(k + 1, j) - t(k, k - j + 1) + t(k, k - j + 2),
            };
            if map.image_form(k, j) != expect {
                return Err(mismatch("row recursion", sigma, k, j));
            }
        }
    }
    Ok(())
}

/// Relations between the letters i_{k,·} and i_{k+1,·} of a σ-built word:
/// rows are monotone (increasing after A, decreasing after D) and row k is
/// row k+1 shifted or reflected.
pub fn check_letter_patterns(sigma: &Sigma) -> Result<()> {
    let n = sigma.rank();
    let word = sigma_word(sigma);
    let row = |k: usize| -> Vec<usize> { (1..=k).map(|j| letter_at(&word, k, j)).collect() };
    for k in 1..=n {
        let r = row(k);
        let increasing = r.windows(2).all(|p| p[0] < p[1]);
        let decreasing = r.windows(2).all(|p| p[0] > p[1]);
        // row k follows σ_{k+1} after the extension at level k+1 re-labels it
        let ok = match sigma.0.get(k).copied() {
            None => match sigma.0[k - 1] {
                Bullet::A => increasing,
                Bullet::D => decreasing,
            },
            Some(next) => {
                let up = row(k + 1);
                let same = sigma.0[k - 1] == next;
                let matches = (1..=k).all(|j| {
                    let partner = if same { j + 1 } else { k - j + 2 };
                    r[j - 1] == up[partner - 1]
                });
                let row_order = match (sigma.0[k - 1], next) {
                    (Bullet::A, Bullet::A) | (Bullet::A, Bullet::D) => increasing,
                    (Bullet::D, _) if k == 1 => true,
                    (Bullet::D, Bullet::A) => decreasing,
                    (Bullet::D, Bullet::D) => decreasing,
                };
                let up_order = match next {
                    Bullet::A => up.windows(2).all(|p| p[0] < p[1]),
                    Bullet::D => up.windows(2).all(|p| p[0] > p[1]),
                };
                matches && row_order && up_order
            }
        };
        if !ok {
            return Err(mismatch("letter pattern", sigma, k, 0));
        }
    }
    Ok(())
}
