//! Self-verification suite: worked examples reproduced exactly, plus
//! exhaustive small-rank coherence checks.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::error::Error;
use crate::gc::{
    build_map, check_difference_recursion, check_functional_recursion, check_letter_patterns, check_row_recursion,
    check_weight_differences, classify, gc_polytope, string_polyhedron,
};
use crate::inequalities::{lambda_form, string_polytope, LinearForm, Weight};
use crate::paths::{canonical_path, enumerate_paths, path_count};
use crate::polyhedra::linalg::{is_integral, q, Q};
use crate::wiring::ChamberBasis;
use crate::words::{enumerate_reduced_words, longest_length, sigma_word, Bullet, ReducedWord, Sigma};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// A1–A8.
    Quick,
    /// A1–A12.
    Full,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} {} ({:.2?}): {}",
            self.id, self.title, self.elapsed, self.detail
        )
    }
}

type Outcome = std::result::Result<String, String>;

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    run: fn() -> Outcome,
}

impl Criterion {
    pub fn run(&self) -> Report {
        let start = Instant::now();
        let outcome = (self.run)();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Report {
            id: self.id,
            title: self.title,
            passed,
            detail,
            elapsed,
        }
    }
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion {
        id: "A1",
        title: "string cones of two rank-3 words",
        run: a1,
    },
    Criterion {
        id: "A2",
        title: "λ-inequalities of 1,2,1,3,2,1",
        run: a2,
    },
    Criterion {
        id: "A3",
        title: "node and chamber forms agree",
        run: a3,
    },
    Criterion {
        id: "A4",
        title: "contraction chain and indices",
        run: a4,
    },
    Criterion {
        id: "A5",
        title: "D-canonical wire expressions",
        run: a5,
    },
    Criterion {
        id: "A6",
        title: "classification coherence at n = 3",
        run: a6,
    },
    Criterion {
        id: "A7",
        title: "lattice points match Weyl dimension",
        run: a7,
    },
    Criterion {
        id: "A8",
        title: "rank-2 vertex sets, GC map and volumes",
        run: a8,
    },
    Criterion {
        id: "A9",
        title: "volume independent of the word",
        run: a9,
    },
    Criterion {
        id: "A10",
        title: "GC map recursions as exact identities",
        run: a10,
    },
    Criterion {
        id: "A11",
        title: "path count drops by at least n under contraction",
        run: a11,
    },
    Criterion {
        id: "A12",
        title: "non-integral string polytope at n = 5",
        run: a12,
    },
];

pub fn criteria(level: Level) -> &'static [Criterion] {
    match level {
        Level::Quick => &CRITERIA[..8],
        Level::Full => &CRITERIA[..],
    }
}

pub fn run(level: Level) -> Vec<Report> {
    criteria(level).iter().map(Criterion::run).collect()
}

fn err(e: Error) -> String {
    e.to_string()
}

fn word(s: &str) -> ReducedWord {
    s.parse().expect("built-in word is reduced")
}

fn weight(s: &str) -> Weight {
    s.parse().expect("built-in weight is dominant")
}

/// Reports the symmetric difference of two sets.
fn compare_sets<T: Ord + fmt::Debug>(what: &str, got: BTreeSet<T>, want: BTreeSet<T>) -> Outcome {
    if got == want {
        return Ok(format!("{what}: {} match", got.len()));
    }
    let missing: Vec<_> = want.difference(&got).collect();
    let extra: Vec<_> = got.difference(&want).collect();
    Err(format!("{what}: missing {missing:?}, unexpected {extra:?}"))
}

/// Per-level string-cone forms of `w` against expected coefficient rows.
fn cone_levels(w: &str, expected: &[&[&[i64]]]) -> Outcome {
    let w = word(w);
    for (k, rows) in expected.iter().enumerate() {
        let got: BTreeSet<Vec<i64>> = enumerate_paths(&w, k + 1)
            .map_err(err)?
            .iter()
            .map(|p| p.coeffs(w.len()))
            .collect();
        let want: BTreeSet<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        compare_sets(&format!("{w} level {}", k + 1), got, want)?;
    }
    Ok(format!(
        "{w}: {} forms",
        expected.iter().map(|r| r.len()).sum::<usize>()
    ))
}

fn a1() -> Outcome {
    let first = cone_levels(
        "1,2,1,3,2,1",
        &[
            &[&[1, 0, 0, 0, 0, 0], &[0, 1, -1, 0, 0, 0], &[0, 0, 0, 1, -1, 0]],
            &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 1, -1]],
            &[&[0, 0, 0, 0, 0, 1]],
        ],
    )?;
    let second = cone_levels(
        "2,1,3,2,3,1",
        &[
            &[&[0, 0, 0, 0, 1, 0]],
            &[
                &[1, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, -1, 0],
                &[0, 0, 1, 0, 0, -1],
                &[0, 1, 1, -1, 0, 0],
                &[0, 0, 0, 1, -1, -1],
            ],
            &[&[0, 0, 0, 0, 0, 1]],
        ],
    )?;
    Ok(format!("{first}; {second}"))
}

/// λ_i − t_j + Σ c_k t_k from a coefficient row.
fn lambda_ineq(coeffs: &[i64], i: usize) -> LinearForm {
    let n = 3;
    let mut f = LinearForm::homogeneous(coeffs.to_vec(), n);
    f.constant[i] = 1;
    f
}

fn a2() -> Outcome {
    let w = word("1,2,1,3,2,1");
    let want = [
        lambda_ineq(&[-1, 1, -2, 0, 1, -2], 1),
        lambda_ineq(&[0, -1, 1, 1, -2, 1], 2),
        lambda_ineq(&[0, 0, -1, 0, 1, -2], 1),
        lambda_ineq(&[0, 0, 0, -1, 1, 0], 3),
        lambda_ineq(&[0, 0, 0, 0, -1, 1], 2),
        lambda_ineq(&[0, 0, 0, 0, 0, -1], 1),
    ];
    for (j, f) in want.iter().enumerate() {
        let got = lambda_form(&w, j);
        if got != *f {
            return Err(format!("t{}: got {got} ≥ 0, expected {f} ≥ 0", j + 1));
        }
    }
    Ok("6 forms verbatim".into())
}

fn a3() -> Outcome {
    let w = word("2,1,3,2,3,1");
    let basis = ChamberBasis::new(&w);
    let polytope: BTreeSet<LinearForm> = string_polytope(&w).linear_forms().cloned().collect();
    // (node form, chamber coefficients, λ index or 0)
    let cases: [(&[i64], &[i64], usize); 4] = [
        (&[1, 0, 0, 0, 0, 0], &[1, 1, 1, 1, 0, 0], 0),
        (&[0, 1, 1, -1, 0, 0], &[0, 1, 1, 1, 0, 0], 0),
        (&[-1, 1, 1, -2, 1, 1], &[-1, 0, 0, -1, 0, 0], 2),
        (&[0, 0, -1, 1, -2, 0], &[0, 0, -1, 0, -1, 0], 3),
    ];
    for (node, chamber, lam) in cases {
        let mut f = LinearForm::homogeneous(node.to_vec(), 3);
        if lam > 0 {
            f.constant[lam] = 1;
        }
        if !polytope.contains(&f) {
            return Err(format!("{f} ≥ 0 is not an inequality of Δ_{w}"));
        }
        let got = basis.to_chamber(node);
        if got != chamber {
            return Err(format!("{f}: chamber coefficients {got:?}, expected {chamber:?}"));
        }
    }
    Ok("4 identities".into())
}

fn a4() -> Outcome {
    let mut w = word("2,1,4,3,5,4,2,1,3,2,5,4,3,5,1");
    let chain = ["2,1,4,3,2,1,4,3,2,4", "2,1,3,2,1,3", "2,1,2", "1"];
    for (step, want) in chain.iter().enumerate() {
        w = w.contract(Bullet::D);
        if w.to_string() != *want {
            return Err(format!("C_D^{}: got {w}, expected {want}", step + 1));
        }
    }
    for (s, want) in [("2,1,3,2,3,1", (1, 1)), ("4,3,2,1,4,2,3,2,4,3", (2, 6))] {
        let w = word(s);
        let got = (w.ind(Bullet::A), w.ind(Bullet::D));
        if got != want {
            return Err(format!("{s}: (ind_A, ind_D) = {got:?}, expected {want:?}"));
        }
    }
    Ok("4 contractions, 2 index pairs".into())
}

fn a5() -> Outcome {
    let w = word("4,3,2,1,4,2,3,2,4,3");
    let want = ["ℓ4 -> ℓ2 -> ℓ1 -> ℓ5", "ℓ4 -> ℓ2 -> ℓ5", "ℓ4 -> ℓ3 -> ℓ5", "ℓ4 -> ℓ5"];
    for (k, want) in (1..).zip(want) {
        let got = canonical_path(&w, k, Bullet::D).map_err(err)?.wire_expression();
        if got != want {
            return Err(format!("k = {k}: got {got}, expected {want}"));
        }
    }
    Ok("4 paths".into())
}

fn a6() -> Outcome {
    let rows = classify(3, &weight("1,1,1")).map_err(err)?;
    if rows.len() != 8 {
        return Err(format!("{} classes, expected 8", rows.len()));
    }
    for r in &rows {
        if r.facets != r.path_count + 6 {
            return Err(format!(
                "{}: {} facets for {} paths",
                r.canonical, r.facets, r.path_count
            ));
        }
    }
    let gc = rows.iter().filter(|r| r.is_gc_type()).count();
    Ok(format!("8 classes, {gc} of GC type, all four conditions agree"))
}

fn a7() -> Outcome {
    let words = enumerate_reduced_words(3).map_err(err)?;
    let mut summary = Vec::new();
    for lam in ["1,1,1", "2,1,1", "1,2,3"] {
        let lam = weight(lam);
        let want = crate::rep::weyl_dimension(&lam);
        for w in &words {
            let got = string_polyhedron(w, &lam)
                .map_err(err)?
                .lattice_point_count(10_000_000)
                .map_err(err)?;
            if BigInt::from(got) != want {
                return Err(format!("{w} at λ = ({lam}): {got} lattice points, dim V(λ) = {want}"));
            }
        }
        summary.push(format!("({lam}) → {want}"));
    }
    Ok(format!("{} words; {}", words.len(), summary.join(", ")))
}

fn point_set(points: &[[i64; 3]]) -> BTreeSet<Vec<Q>> {
    points.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
}

/// (k, j) of x_{k,j}.
type Entry = (usize, usize);

fn a8() -> Outcome {
    let lam = weight("2,2");
    // coordinates (x11, x21, x22) and (t1, t2, t3)
    let gc_want = point_set(&[
        [4, 4, 2],
        [2, 4, 2],
        [4, 4, 0],
        [0, 4, 0],
        [2, 2, 0],
        [0, 2, 0],
        [2, 2, 2],
    ]);
    let st_want = point_set(&[
        [0, 0, 0],
        [2, 0, 0],
        [4, 2, 0],
        [2, 4, 2],
        [0, 4, 2],
        [0, 2, 2],
        [0, 2, 0],
    ]);
    let gc = gc_polytope(2, &lam).map_err(err)?.vertices().map_err(err)?;
    let st = string_polyhedron(&word("1,2,1"), &lam)
        .map_err(err)?
        .vertices()
        .map_err(err)?;
    compare_sets("GC(2ϖ1+2ϖ2) vertices", gc.vertices.iter().cloned().collect(), gc_want)?;
    compare_sets(
        "Δ_(1,2,1)(2ϖ1+2ϖ2) vertices",
        st.vertices.iter().cloned().collect(),
        st_want,
    )?;
    for (name, v) in [("GC", &gc), ("string", &st)] {
        let vol = v.volume().map_err(err)?;
        if vol != q(8) {
            return Err(format!("{name} volume {vol}, expected 8"));
        }
    }

    let sigma: Sigma = "D,D,A".parse().map_err(err)?;
    let map = build_map(&sigma);
    let m_want: [[i64; 6]; 6] = [
        [-1, 0, -1, 1, -1, 0],
        [0, 0, -1, 1, -1, 0],
        [0, -1, 1, 0, 1, -1],
        [0, 0, 0, 1, -1, 0],
        [0, 0, 0, 0, 1, -1],
        [0, 0, 0, 0, 0, 1],
    ];
    if map.matrix != m_want.map(|r| r.to_vec()) {
        return Err(format!("M for σ = (D,D,A): got {:?}", map.matrix));
    }
    // v over (1, λ1, λ2, λ3)
    let v_want: [[i64; 4]; 6] = [
        [0, 0, 1, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ];
    if map.shift != v_want.map(|r| r.to_vec()) {
        return Err(format!("v for σ = (D,D,A): got {:?}", map.shift));
    }
    let w = sigma_word(&sigma);
    if w.to_string() != "2,3,2,1,2,3" {
        return Err(format!("σ = (D,D,A) builds {w}, expected 2,3,2,1,2,3"));
    }
    // image of each x_{k,j}: t-coefficients in block order and λ-constants
    let images: [(Entry, [i64; 6], [i64; 4]); 6] = [
        ((3, 1), [0, 0, 0, 1, -1, 0], [0, 0, 1, 1]),
        ((3, 2), [0, 0, 0, 0, 1, -1], [0, 0, 0, 1]),
        ((3, 3), [0, 0, 0, 0, 0, 1], [0, 0, 0, 0]),
        ((2, 1), [0, 0, -1, 1, -1, 0], [0, 0, 1, 1]),
        ((2, 2), [0, -1, 1, 0, 1, -1], [0, 0, 0, 1]),
        ((1, 1), [-1, 0, -1, 1, -1, 0], [0, 0, 1, 1]),
    ];
    for ((k, j), t, c) in images {
        let got = map.image_form(k, j);
        let want = LinearForm {
            coeffs: t.to_vec(),
            constant: c.to_vec(),
        };
        if got != want {
            return Err(format!("x_{{{k},{j}}} = {got}, expected {want}"));
        }
    }
    Ok("7 + 7 vertices, volume 8, M, v and six image formulas".into())
}

fn a9() -> Outcome {
    let words = enumerate_reduced_words(3).map_err(err)?;
    let mut out = Vec::new();
    for lam in ["1,1,1", "2,1,1"] {
        let lam = weight(lam);
        let reference = gc_polytope(3, &lam)
            .map_err(err)?
            .vertices()
            .map_err(err)?
            .volume()
            .map_err(err)?;
        for w in &words {
            let vol = string_polyhedron(w, &lam)
                .map_err(err)?
                .vertices()
                .map_err(err)?
                .volume()
                .map_err(err)?;
            if vol != reference {
                return Err(format!("{w} at ({lam}): volume {vol}, GC volume {reference}"));
            }
        }
        out.push(format!("({lam}) → {reference}"));
    }
    Ok(format!("{} words; {}", words.len(), out.join(", ")))
}

fn a10() -> Outcome {
    let mut count = 0;
    for n in 1..=4 {
        for sigma in Sigma::all(n) {
            check_weight_differences(&sigma).map_err(err)?;
            check_functional_recursion(&sigma).map_err(err)?;
            check_difference_recursion(&sigma).map_err(err)?;
            check_row_recursion(&sigma).map_err(err)?;
            check_letter_patterns(&sigma).map_err(err)?;
            count += 1;
        }
    }
    Ok(format!("{count} sequences σ"))
}

fn a11() -> Outcome {
    let mut checked = 0;
    for n in 3..=4 {
        for w in enumerate_reduced_words(n).map_err(err)? {
            let norm = path_count(&w);
            let mut strict = false;
            for b in Bullet::BOTH {
                let c = path_count(&w.contract(b));
                if norm < c + n {
                    return Err(format!("{w}: ‖i‖ = {norm} but ‖C_{b}(i)‖ + n = {}", c + n));
                }
                strict |= norm > c + n;
            }
            if w.ind(Bullet::A) * w.ind(Bullet::D) > 0 && !strict {
                return Err(format!("{w}: both indices positive but no strict drop"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} words"))
}

/// Seconds allowed for vertex enumeration before the randomized fallback.
pub const VERTEX_BUDGET: Duration = Duration::from_secs(600);

fn a12() -> Outcome {
    let w = word("1,3,2,1,3,2,4,3,2,1,5,4,3,2,1");
    let n = 5;
    debug_assert_eq!(w.len(), longest_length(n));
    let deadline = Instant::now() + VERTEX_BUDGET;
    let p1 = string_polyhedron(&w, &Weight::fundamental(n, 3, 1)).map_err(err)?;
    let fractional = match p1.vertices_within(Some(deadline)) {
        Ok(v) => v.vertices.into_iter().find(|x| !is_integral(x)),
        Err(Error::BudgetExceeded) => p1.find_fractional_vertex(2000, 7),
        Err(e) => return Err(err(e)),
    };
    let Some(frac) = fractional else {
        return Err("no fractional vertex of Δ_i(ϖ3) found".into());
    };
    let shown: Vec<String> = frac.iter().map(crate::polyhedra::linalg::fmt_q).collect();
    let p2 = string_polyhedron(&w, &Weight::fundamental(n, 3, 2)).map_err(err)?;
    match p2.vertices_within(Some(deadline)) {
        Ok(v) if v.is_integral() => Ok(format!(
            "fractional vertex ({}) of Δ_i(ϖ3); Δ_i(2ϖ3) integral with {} vertices",
            shown.join(","),
            v.vertices.len()
        )),
        Ok(v) => Err(format!("Δ_i(2ϖ3) has a fractional vertex among {}", v.vertices.len())),
        Err(Error::BudgetExceeded) => Err(format!(
            "fractional vertex ({}) of Δ_i(ϖ3) found, but enumerating Δ_i(2ϖ3) exceeded the budget",
            shown.join(",")
        )),
        Err(e) => Err(err(e)),
    }
}
