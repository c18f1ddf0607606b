//! String cones, λ-cones and string polytopes as integer inequality systems.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::paths::all_paths;
use crate::polyhedra::Constraint;
use crate::wiring::{lambda_coefficient, ChamberBasis};
use crate::words::{boundary_block, Bullet, ReducedWord, Sigma};

/// A dominant weight λ = Σ λ_i ϖ_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|&&c| c < 0) {
            return Err(Error::MalformedWeight(format!("coefficient {bad} is not dominant")));
        }
        Ok(Weight(coeffs))
    }

    /// The fundamental weight ϖ_i scaled by m.
    pub fn fundamental(n: usize, i: usize, m: i64) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = m;
        Weight(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// λ_i, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.rank() != n {
            return Err(Error::MalformedWeight(format!(
                "expected {n} coefficients, got {}",
                self.rank()
            )));
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::MalformedWeight(format!("bad entry {:?}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Weight::new(coeffs)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::words::join(&self.0))
    }
}

/// c·t + c₀ + Σ c_i λ_i, read as "≥ 0" when used as an inequality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
    /// Constant part over (1, λ₁, …, λ_n).
    pub constant: Vec<i64>,
}

impl LinearForm {
    pub fn zero(len: usize, n: usize) -> Self {
        LinearForm {
            coeffs: vec![0; len],
            constant: vec![0; n + 1],
        }
    }

    pub fn homogeneous(coeffs: Vec<i64>, n: usize) -> Self {
        LinearForm {
            coeffs,
            constant: vec![0; n + 1],
        }
    }

    /// The single variable t_j (0-based).
    pub fn var(len: usize, n: usize, j: usize) -> Self {
        let mut f = LinearForm::zero(len, n);
        f.coeffs[j] = 1;
        f
    }

    /// The constant λ_i.
    pub fn lambda(len: usize, n: usize, i: usize) -> Self {
        let mut f = LinearForm::zero(len, n);
        f.constant[i] = 1;
        f
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, s: i64) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            constant: self.constant.iter().map(|c| c * s).collect(),
        }
    }

    /// Value of the constant at a concrete weight.
    pub fn constant_at(&self, weight: &Weight) -> i64 {
        self.constant[0]
            + weight
                .coeffs()
                .iter()
                .zip(&self.constant[1..])
                .map(|(l, c)| l * c)
                .sum::<i64>()
    }

    pub fn to_constraint(&self, weight: &Weight) -> Constraint {
        Constraint::new(
            self.coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::from(self.constant_at(weight)),
        )
    }
}

impl std::ops::Add for LinearForm {
    type Output = LinearForm;
    fn add(mut self, rhs: LinearForm) -> LinearForm {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        for (a, b) in self.constant.iter_mut().zip(rhs.constant) {
            *a += b;
        }
        self
    }
}

impl std::ops::Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: LinearForm) -> LinearForm {
        self + rhs.scaled(-1)
    }
}

impl std::ops::Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        self.scaled(-1)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (i64, String)>) -> fmt::Result {
    let mut first = true;
    for (c, name) in terms.filter(|(c, _)| *c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        match (c.abs(), name.is_empty()) {
            (m, true) => write!(f, "{m}")?,
            (1, false) => f.write_str(&name)?,
            (m, false) => write!(f, "{m}{name}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.coeffs.iter().enumerate().map(|(j, &c)| (c, format!("t{}", j + 1)));
        let consts = self
            .constant
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, if i == 0 { String::new() } else { format!("λ{i}") }));
        write_terms(f, vars.chain(consts))
    }
}

/// Where an inequality came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// A rigorous path of G(i, k).
    Path {
        k: usize,
    },
    /// The λ-inequality of node t_j (0-based).
    Lambda {
        j: usize,
    },
    Other,
}

/// A system of inequalities form ≥ 0 over N coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron {
    pub dim: usize,
    pub forms: Vec<(LinearForm, Origin)>,
}

impl HPolyhedron {
    pub fn new(dim: usize) -> Self {
        HPolyhedron { dim, forms: Vec::new() }
    }

    /// Adds a form unless an identical one is already present.
    pub fn push(&mut self, form: LinearForm, origin: Origin) -> Result<()> {
        if form.coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: form.coeffs.len(),
            });
        }
        if !self.forms.iter().any(|(f, _)| *f == form) {
            self.forms.push((form, origin));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn linear_forms(&self) -> impl Iterator<Item = &LinearForm> {
        self.forms.iter().map(|(f, _)| f)
    }

    pub fn constraints(&self, weight: &Weight) -> Vec<Constraint> {
        self.linear_forms().map(|f| f.to_constraint(weight)).collect()
    }

    pub fn extend(&mut self, other: HPolyhedron) -> Result<()> {
        for (f, o) in other.forms {
            self.push(f, o)?;
        }
        Ok(())
    }
}

/// One homogeneous form per rigorous path.
pub fn string_cone(word: &ReducedWord) -> HPolyhedron {
    let n = word.rank();
    let mut h = HPolyhedron::new(word.len());
    for p in all_paths(word) {
        h.push(
            LinearForm::homogeneous(p.coeffs(word.len()), n),
            Origin::Path { k: p.k },
        )
        .expect("path forms have word length");
    }
    h
}

/// The λ-inequality of node t_j: λ_{i_j} − t_j + Σ_{k>j} a_k t_k ≥ 0.
pub fn lambda_form(word: &ReducedWord, j: usize) -> LinearForm {
    let n = word.rank();
    let mut f = lambda_functional_at(word, j);
    f.constant[word.letter(j)] = 1;
    debug_assert_eq!(f.constant.len(), n + 1);
    f
}

/// −t_j + Σ_{k>j} a_k t_k, the λ-inequality without its constant.
fn lambda_functional_at(word: &ReducedWord, j: usize) -> LinearForm {
    let len = word.len();
    let mut f = LinearForm::zero(len, word.rank());
    f.coeffs[j] = -1;
    for k in j + 1..len {
        f.coeffs[k] = lambda_coefficient(word, j, k);
    }
    f
}

pub fn lambda_cone(word: &ReducedWord) -> HPolyhedron {
    let mut h = HPolyhedron::new(word.len());
    for j in 0..word.len() {
        h.push(lambda_form(word, j), Origin::Lambda { j }).expect("same length");
    }
    h
}

/// String cone followed by λ-cone, weight kept symbolic.
pub fn string_polytope(word: &ReducedWord) -> HPolyhedron {
    let mut h = string_cone(word);
    h.extend(lambda_cone(word)).expect("same length");
    h
}

/// Rewrites every form in chamber variables; constants are untouched.
pub fn to_chamber_coordinates(h: &HPolyhedron, basis: &ChamberBasis) -> Result<HPolyhedron> {
    if basis.forward.len() != h.dim {
        return Err(Error::DimensionMismatch {
            expected: h.dim,
            got: basis.forward.len(),
        });
    }
    Ok(HPolyhedron {
        dim: h.dim,
        forms: h
            .forms
            .iter()
            .map(|(f, o)| {
                (
                    LinearForm {
                        coeffs: basis.to_chamber(&f.coeffs),
                        constant: f.constant.clone(),
                    },
                    *o,
                )
            })
            .collect(),
    })
}

/// 0-based position of t_{k,j} in the block layout t_{1,1}, t_{2,1}, t_{2,2}, ….
pub fn block_index(k: usize, j: usize) -> usize {
    k * (k - 1) / 2 + j - 1
}

/// Recovers σ from a word of the form (E_{σ_n}(0) ∘ ⋯ ∘ E_{σ_1}(0))(∅).
/// The first entry is reported as D, since both letters give (1).
pub fn sigma_of(word: &ReducedWord) -> Result<Sigma> {
    let mut letters = word.letters().to_vec();
    let mut rev = Vec::new();
    for n in (1..=word.rank()).rev() {
        let cut = letters.len() - n;
        let block = &letters[cut..];
        if block == boundary_block(n, Bullet::D).as_slice() {
            rev.push(Bullet::D);
            letters.truncate(cut);
        } else if block == boundary_block(n, Bullet::A).as_slice() && letters[..cut].iter().all(|&c| c >= 2) {
            rev.push(Bullet::A);
            letters.truncate(cut);
            letters.iter_mut().for_each(|c| *c -= 1);
        } else {
            return Err(Error::NotExtensionBuilt);
        }
    }
    rev.reverse();
    Ok(Sigma(rev))
}

/// S_{k,j}: the λ-inequality of t_{k,j} minus its constant λ_{i_{k,j}}.
pub fn lambda_functional(word: &ReducedWord, k: usize, j: usize) -> Result<LinearForm> {
    sigma_of(word)?;
    if k == 0 || k > word.rank() || j == 0 || j > k {
        return Err(Error::OutOfRange(format!("(k, j) = ({k}, {j})")));
    }
    Ok(lambda_functional_at(word, block_index(k, j)))
}
