use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use strpoly::gc::{classify_class, gc_map, string_polyhedron, verify_gc_map, ClassRow};
use strpoly::inequalities::{string_polytope, to_chamber_coordinates, HPolyhedron, Origin};
use strpoly::paths::{enumerate_paths, path_count};
use strpoly::polyhedra::linalg::fmt_q;
use strpoly::rep::{gt_pattern_count, weyl_dimension};
use strpoly::verify::{criteria, Level};
use strpoly::wiring::{ChamberBasis, WiringDiagram};
use strpoly::words::CommutationClass;
use strpoly::{Bullet, Error, LinearForm, ReducedWord, Weight};

mod cache;

/// Default cap on lattice-point candidates.
const LATTICE_CAP: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "strpoly",
    version,
    about = "String cones and string polytopes of reduced words in type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rigorous paths of G(i, k), one per line.
    Paths {
        word: ReducedWord,
        /// Only this level.
        #[arg(short)]
        k: Option<usize>,
        /// Print wire expressions instead of node expressions.
        #[arg(long)]
        wire_expr: bool,
        /// Dump the wiring diagram first.
        #[arg(long)]
        explain: bool,
    },
    /// String-cone and λ-inequalities.
    Ineq {
        word: ReducedWord,
        /// Instantiate constants at this weight.
        #[arg(long)]
        lambda: Option<Weight>,
        /// Rewrite in chamber variables.
        #[arg(long)]
        chamber: bool,
        #[arg(long)]
        json: bool,
    },
    /// Facets, vertices, integrality, volume and lattice points as JSON.
    Stats {
        word: ReducedWord,
        #[arg(long)]
        lambda: Weight,
        /// Include the sorted vertex list.
        #[arg(long)]
        vertices: bool,
        /// Seconds allowed for vertex enumeration.
        #[arg(long, default_value_t = 600.0)]
        budget: f64,
    },
    /// Indices, co-indices, path count and GC type.
    Index { word: ReducedWord },
    /// Apply C_A or C_D, possibly repeatedly.
    Contract {
        word: ReducedWord,
        #[arg(long)]
        bullet: Bullet,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Apply E_A(s) or E_D(s).
    Extend {
        word: ReducedWord,
        #[arg(long)]
        bullet: Bullet,
        #[arg(long, default_value_t = 0)]
        at: usize,
    },
    /// The unimodular map onto GC(λ) for a GC-type word.
    Gcmap {
        word: ReducedWord,
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        json: bool,
    },
    /// Classify every commutation class of rank N.
    Classify {
        n: usize,
        #[arg(long)]
        lambda: Weight,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        /// Worker threads; 0 lets the pool decide.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Permit rank 6.
        #[arg(long)]
        allow_large: bool,
        /// Directory for enumeration caches.
        #[arg(long, env = "STRPOLY_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Dimension of V(λ) by two independent methods.
    Dim {
        n: usize,
        #[arg(long)]
        lambda: Weight,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

/// Outcome of a subcommand that ran to completion.
enum Done {
    Ok(String),
    /// Printed output, but some check failed.
    Failed(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Done::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Done::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e == Error::BudgetExceeded { 3 } else { 2 })
        }
    }
}

fn run(command: Command) -> strpoly::Result<Done> {
    let out = match command {
        Command::Paths {
            word,
            k,
            wire_expr,
            explain,
        } => paths(&word, k, wire_expr, explain)?,
        Command::Ineq {
            word,
            lambda,
            chamber,
            json,
        } => ineq(&word, lambda.as_ref(), chamber, json)?,
        Command::Stats {
            word,
            lambda,
            vertices,
            budget,
        } => stats(&word, &lambda, vertices, budget)?,
        Command::Index { word } => index(&word),
        Command::Contract { word, bullet, times } => {
            let w = (0..times).fold(word, |w, _| w.contract(bullet));
            format!("{w}\n")
        }
        Command::Extend { word, bullet, at } => format!("{}\n", word.extend(bullet, at)?),
        Command::Gcmap { word, lambda, json } => return gcmap(&word, &lambda, json),
        Command::Classify {
            n,
            lambda,
            csv,
            json,
            workers,
            allow_large,
            cache_dir,
        } => {
            let limit = if allow_large { 6 } else { 5 };
            if n == 0 || n > limit {
                return Err(Error::OutOfRange(format!("rank {n} outside 1..={limit}")));
            }
            let classes = cache::classes(n, cache_dir.as_deref())?;
            let rows = classify_parallel(&classes, &lambda, workers)?;
            render_classes(&rows, csv, json)
        }
        Command::Dim { n, lambda } => {
            lambda.check_rank(n)?;
            format!(
                "weyl {}\npatterns {}\n",
                weyl_dimension(&lambda),
                gt_pattern_count(&lambda)
            )
        }
        Command::Verify { level, json } => return Ok(verify(level, json)),
    };
    Ok(Done::Ok(out))
}

fn paths(word: &ReducedWord, k: Option<usize>, wire_expr: bool, explain: bool) -> strpoly::Result<String> {
    let mut out = String::new();
    if explain {
        write!(out, "{}", WiringDiagram::new(word)).unwrap();
    }
    let levels: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=word.rank()).collect(),
    };
    for k in levels {
        for p in enumerate_paths(word, k)? {
            let line = if wire_expr {
                p.wire_expression()
            } else {
                p.node_expression()
            };
            writeln!(out, "{line}").unwrap();
        }
    }
    Ok(out)
}

fn origin_label(o: &Origin) -> String {
    match o {
        Origin::Path { k } => format!("path k={k}"),
        Origin::Lambda { j } => format!("lambda t{}", j + 1),
        Origin::Other => "other".into(),
    }
}

fn form_json(f: &LinearForm, o: &Origin) -> Value {
    json!({
        "coeffs": f.coeffs,
        "const": { "one": f.constant[0], "lambda": f.constant[1..] },
        "origin": origin_label(o),
    })
}

fn ineq(word: &ReducedWord, lambda: Option<&Weight>, chamber: bool, json: bool) -> strpoly::Result<String> {
    if let Some(l) = lambda {
        l.check_rank(word.rank())?;
    }
    let mut h: HPolyhedron = string_polytope(word);
    if chamber {
        h = to_chamber_coordinates(&h, &ChamberBasis::new(word))?;
    }
    if let Some(l) = lambda {
        for (f, _) in h.forms.iter_mut() {
            let value = f.constant_at(l);
            f.constant.iter_mut().for_each(|c| *c = 0);
            f.constant[0] = value;
        }
    }
    if json {
        let forms: Vec<Value> = h.forms.iter().map(|(f, o)| form_json(f, o)).collect();
        return Ok(format!("{}\n", json!({ "dim": h.dim, "forms": forms })));
    }
    let var = if chamber { "u" } else { "t" };
    let mut out = String::new();
    for (f, o) in &h.forms {
        let text = f.to_string();
        let text = if chamber { text.replace('t', var) } else { text };
        writeln!(out, "{text} >= 0    [{}]", origin_label(o)).unwrap();
    }
    Ok(out)
}

fn stats(word: &ReducedWord, lambda: &Weight, with_vertices: bool, budget: f64) -> strpoly::Result<String> {
    if !(budget > 0.0 && budget.is_finite()) {
        return Err(Error::OutOfRange(format!(
            "budget {budget} must be a positive number of seconds"
        )));
    }
    let deadline = Instant::now() + Duration::from_secs_f64(budget);
    let p = string_polyhedron(word, lambda)?;
    let v = p.vertices_within(Some(deadline))?;
    let (facets, _) = v.facets()?;
    let mut report = json!({
        "facets": facets.len(),
        "vertices": v.vertices.len(),
        "integral": v.is_integral(),
        "volume": fmt_q(&v.volume()?),
        "lattice_points": p.lattice_point_count(LATTICE_CAP)?,
    });
    if with_vertices {
        let list: Vec<Vec<String>> = v
            .sorted_vertices()
            .iter()
            .map(|x| x.iter().map(fmt_q).collect())
            .collect();
        report["vertex_list"] = json!(list);
    }
    Ok(format!("{report}\n"))
}

fn index(word: &ReducedWord) -> String {
    let gc = word.gc_type().map_or_else(|| "none".to_string(), |s| s.to_string());
    format!(
        "ind_A {}\nind_D {}\ncoind_A {}\ncoind_D {}\npaths {}\ngc_type {gc}\n",
        word.ind(Bullet::A),
        word.ind(Bullet::D),
        word.coind(Bullet::A),
        word.coind(Bullet::D),
        path_count(word),
    )
}

fn gcmap(word: &ReducedWord, lambda: &Weight, as_json: bool) -> strpoly::Result<Done> {
    let Some(map) = gc_map(word, lambda)? else {
        return Ok(Done::Failed(format!("{word} is not of GC type\n")));
    };
    let verified = verify_gc_map(word, lambda, &map)?;
    let out = if as_json {
        let forms: Vec<Value> = map
            .affine
            .matrix
            .iter()
            .zip(&map.affine.shift)
            .map(|(row, c)| json!({ "coeffs": row, "const": c }))
            .collect();
        format!(
            "{}\n",
            json!({
                "sigma": map.sigma.to_string(),
                "permutation": map.permutation.iter().map(|p| p + 1).collect::<Vec<_>>(),
                "rows": forms,
                "verified": verified,
            })
        )
    } else {
        let mut out = format!("sigma {}\n", map.sigma);
        let perm: Vec<String> = map.permutation.iter().map(|p| (p + 1).to_string()).collect();
        writeln!(out, "permutation {}", perm.join(",")).unwrap();
        let n = word.rank();
        let mut row = 0;
        for k in 1..=n {
            for j in 1..=k {
                let f = LinearForm {
                    coeffs: map.affine.matrix[row].clone(),
                    constant: vec![map.affine.shift[row]],
                };
                writeln!(out, "x{k},{j} = {f}").unwrap();
                row += 1;
            }
        }
        writeln!(out, "verified {verified}").unwrap();
        out
    };
    Ok(if verified { Done::Ok(out) } else { Done::Failed(out) })
}

fn classify_parallel(classes: &[CommutationClass], lambda: &Weight, workers: usize) -> strpoly::Result<Vec<ClassRow>> {
    let work = || -> strpoly::Result<Vec<ClassRow>> {
        classes
            .par_iter()
            .map(|c| classify_class(&c.canonical, c.size.unwrap_or(0), lambda))
            .collect()
    };
    if workers == 0 {
        return work();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Invariant(e.to_string()))?
        .install(work)
}

fn render_classes(rows: &[ClassRow], csv: bool, as_json: bool) -> String {
    let sigma = |r: &ClassRow| r.gc_type.as_ref().map(|s| s.to_string()).unwrap_or_default();
    if as_json {
        let list: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "canonical_word": r.canonical.to_string(),
                    "class_size": r.class_size,
                    "path_count": r.path_count,
                    "facets": r.facets,
                    "simplicial": r.simplicial,
                    "gc_type": r.is_gc_type(),
                    "sigma": sigma(r),
                })
            })
            .collect();
        return format!("{}\n", Value::Array(list));
    }
    let mut out = String::new();
    if csv {
        out.push_str("canonical_word,class_size,path_count,facets,simplicial,gc_type,sigma\n");
        for r in rows {
            writeln!(
                out,
                "\"{}\",{},{},{},{},{},\"{}\"",
                r.canonical,
                r.class_size,
                r.path_count,
                r.facets,
                r.simplicial,
                r.is_gc_type(),
                sigma(r)
            )
            .unwrap();
        }
        return out;
    }
    for r in rows {
        writeln!(
            out,
            "{:<40} size {:>4}  paths {:>3}  facets {:>3}  {}",
            r.canonical.to_string(),
            r.class_size,
            r.path_count,
            r.facets,
            r.gc_type
                .as_ref()
                .map_or_else(|| "-".to_string(), |s| format!("GC ({s})")),
        )
        .unwrap();
    }
    out
}

fn verify(level: VerifyLevel, as_json: bool) -> Done {
    let level = match level {
        VerifyLevel::Quick => Level::Quick,
        VerifyLevel::Full => Level::Full,
    };
    let reports: Vec<_> = criteria(level).iter().map(|c| c.run()).collect();
    let ok = reports.iter().all(|r| r.passed);
    let out = if as_json {
        let list: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "title": r.title,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": r.elapsed.as_secs_f64(),
                })
            })
            .collect();
        format!("{}\n", Value::Array(list))
    } else {
        reports.iter().map(|r| format!("{r}\n")).collect()
    };
    if ok {
        Done::Ok(out)
    } else {
        Done::Failed(out)
    }
}
