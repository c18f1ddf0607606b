//! Sorted vertex lists stored as exact fractions.

use std::path::Path;

use strpoly::gc::{gc_polytope, string_polyhedron};
use strpoly::polyhedra::linalg::fmt_q;
use strpoly::VRep;

fn render(v: &VRep) -> String {
    v.sorted_vertices()
        .iter()
        .map(|x| x.iter().map(fmt_q).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn check(name: &str, got: String) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if got != want {
        let diff: Vec<String> = want
            .lines()
            .filter(|l| !got.lines().any(|g| g == *l))
            .map(|l| format!("- {l}"))
            .chain(
                got.lines()
                    .filter(|l| !want.lines().any(|g| g == *l))
                    .map(|l| format!("+ {l}")),
            )
            .collect();
        panic!("{name} differs from golden file:\n{}", diff.join("\n"));
    }
}

#[test]
fn gc_rank_two() {
    let v = gc_polytope(2, &"2,2".parse().unwrap()).unwrap().vertices().unwrap();
    check("gc_2_2.txt", render(&v));
}

#[test]
fn string_rank_two() {
    let v = string_polyhedron(&"1,2,1".parse().unwrap(), &"2,2".parse().unwrap())
        .unwrap()
        .vertices()
        .unwrap();
    check("string_121_2_2.txt", render(&v));
}

#[test]
fn rank_five_fundamental_weight() {
    let word = "1,3,2,1,3,2,4,3,2,1,5,4,3,2,1".parse().unwrap();
    let v = string_polyhedron(&word, &strpoly::Weight::fundamental(5, 3, 1))
        .unwrap()
        .vertices()
        .unwrap();
    check("rank5_w3.txt", render(&v));
}
