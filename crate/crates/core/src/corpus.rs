//! The built-in corpus. Files are compiled in; `HH_CORPUS_DIR` points at a
//! directory of replacements (same file names) to load instead.

use std::path::PathBuf;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::io::{parse_algebra, parse_input, parse_split, Input};
use crate::split::SplitAlgebra;

const FILES: &[(&str, &str)] = &[
    ("k", include_str!("../corpus/k.json")),
    ("dualnumbers", include_str!("../corpus/dualnumbers.json")),
    ("dualnumbers-f2", include_str!("../corpus/dualnumbers-f2.json")),
    ("a2", include_str!("../corpus/a2.json")),
    ("a3", include_str!("../corpus/a3.json")),
    ("kronecker", include_str!("../corpus/kronecker.json")),
    ("m2", include_str!("../corpus/m2.json")),
    ("x3-split", include_str!("../corpus/x3-split.json")),
    ("twisted-dualnumbers", include_str!("../corpus/twisted-dualnumbers.json")),
    ("t-a2", include_str!("../corpus/t-a2.json")),
    ("kkk", include_str!("../corpus/kkk.json")),
    ("a2-onepoint", include_str!("../corpus/a2-onepoint.json")),
];

/// Plain algebras of the corpus, in suite order.
pub const ALGEBRAS: &[&str] = &["k", "dualnumbers", "dualnumbers-f2", "a2", "a3", "kronecker", "m2"];

/// Split and triangular inputs.
pub const SPLITS: &[&str] = &["x3-split", "twisted-dualnumbers", "t-a2", "kkk", "a2-onepoint"];

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn override_dir() -> Option<PathBuf> {
    std::env::var_os("HH_CORPUS_DIR").map(PathBuf::from)
}

/// JSON text of a corpus entry.
pub fn source(name: &str) -> Result<String> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    if let Some(dir) = override_dir() {
        let path = dir.join(format!("{name}.json"));
        if path.exists() {
            return std::fs::read_to_string(&path).map_err(|e| Error::Input(format!("{}: {e}", path.display())));
        }
    }
    FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.to_string())
        .ok_or_else(|| Error::Input(format!("no corpus entry {name:?}")))
}

pub fn algebra(name: &str) -> Result<Arc<Algebra>> {
    Ok(Arc::new(parse_algebra(&source(name)?, None)?))
}

pub fn algebra_over(name: &str, field: Field) -> Result<Arc<Algebra>> {
    Ok(Arc::new(parse_algebra(&source(name)?, Some(field))?))
}

pub fn split(name: &str) -> Result<SplitAlgebra> {
    parse_split(&source(name)?, None)
}

pub fn input(name: &str) -> Result<Input> {
    parse_input(&source(name)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{kronecker, linear_quiver};

    #[test]
    fn every_entry_loads() {
        for n in names() {
            input(n).unwrap_or_else(|e| panic!("{n}: {e}"));
        }
    }

    #[test]
    fn files_match_constructors() {
        let q = Field::Rationals;
        assert_eq!(*algebra("a2").unwrap(), linear_quiver(q, 2));
        assert_eq!(*algebra("a3").unwrap(), linear_quiver(q, 3));
        assert_eq!(*algebra("kronecker").unwrap(), kronecker(q));
        assert_eq!(algebra("dualnumbers-f2").unwrap().field(), Field::Prime(2));
        assert_eq!(algebra("m2").unwrap().center().dim(), 1);
        assert!(!split("x3-split").unwrap().square_zero());
        assert_eq!(split("a2-onepoint").unwrap().total().dim(), 5);
    }
}
