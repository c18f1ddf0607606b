//! Commutation classes persisted as sorted text, one `word size` pair per line.

use std::fs;
use std::path::Path;

use strpoly::words::{commutation_classes, enumerate_reduced_words, CommutationClass};
use strpoly::{Error, ReducedWord};

fn file_name(n: usize) -> String {
    format!("classes-{n}.txt")
}

fn parse(n: usize, text: &str) -> Option<Vec<CommutationClass>> {
    text.lines()
        .map(|line| {
            let (word, size) = line.split_once(' ')?;
            let canonical = ReducedWord::parse(word, Some(n)).ok()?;
            Some(CommutationClass {
                canonical,
                size: Some(size.parse().ok()?),
            })
        })
        .collect()
}

fn render(classes: &[CommutationClass]) -> String {
    classes
        .iter()
        .map(|c| format!("{} {}\n", c.canonical, c.size.unwrap_or(0)))
        .collect()
}

/// Loads the classes of rank n from `dir`, computing and storing them on a miss.
/// A cache file that fails to parse is recomputed and overwritten.
pub fn classes(n: usize, dir: Option<&Path>) -> strpoly::Result<Vec<CommutationClass>> {
    let path = dir.map(|d| d.join(file_name(n)));
    if let Some(hit) = path
        .as_ref()
        .and_then(|p| fs::read_to_string(p).ok())
        .and_then(|t| parse(n, &t))
    {
        return Ok(hit);
    }
    let classes = commutation_classes(&enumerate_reduced_words(n)?);
    if let (Some(dir), Some(path)) = (dir, path) {
        let io = |e: std::io::Error| Error::Invariant(format!("cache write failed: {e}"));
        fs::create_dir_all(dir).map_err(io)?;
        fs::write(path, render(&classes)).map_err(io)?;
    }
    Ok(classes)
}
