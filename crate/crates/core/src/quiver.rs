//! Bound quiver algebras `kQ/I` with `I` containing all paths of length ≥ nil bound.
//!
//! The basis is a complement of the ideal inside the span of paths shorter
//! than the nil bound. Paths are ordered by (length, arrow names
//! lexicographically); when a relation involves several paths, the largest
//! one is the one eliminated, so the basis consists of the smallest paths
//! that remain independent.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Echelon, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// `Σ coeffs[i] · paths[i]`, each path a list of arrow names in composition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub coeffs: Vec<Scalar>,
    pub paths: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    // trivial paths carry their vertex index and no arrows
    vertex: Option<usize>,
    arrows: Vec<usize>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::Quiver(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashMap::new();
        for a in &arrows {
            if !seen.contains_key(&a.src) || !seen.contains_key(&a.tgt) {
                return Err(Error::Quiver(format!("arrow {} has an unknown endpoint", a.name)));
            }
            if names.insert(a.name.clone(), ()).is_some() {
                return Err(Error::Quiver(format!("duplicate arrow {}", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    fn vertex_index(&self, name: &str) -> usize {
        self.vertices.iter().position(|v| v == name).unwrap()
    }

    fn src(&self, arrow: usize) -> usize {
        self.vertex_index(&self.arrows[arrow].src)
    }

    fn tgt(&self, arrow: usize) -> usize {
        self.vertex_index(&self.arrows[arrow].tgt)
    }

    fn path_src(&self, p: &Path) -> usize {
        p.vertex.unwrap_or_else(|| self.src(p.arrows[0]))
    }

    fn path_tgt(&self, p: &Path) -> usize {
        p.vertex
            .unwrap_or_else(|| self.tgt(*p.arrows.last().unwrap()))
    }

    /// Concatenation `p` then `q`, or `None` if not composable.
    fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.path_tgt(p) != self.path_src(q) {
            return None;
        }
        Some(match (p.vertex, q.vertex) {
            (Some(_), _) => q.clone(),
            (_, Some(_)) => p.clone(),
            _ => Path {
                vertex: None,
                arrows: p.arrows.iter().chain(q.arrows.iter()).copied().collect(),
            },
        })
    }

    fn sort_key(&self, p: &Path) -> (usize, Vec<String>, usize) {
        (
            p.arrows.len(),
            p.arrows.iter().map(|a| self.arrows[*a].name.clone()).collect(),
            p.vertex.unwrap_or(0),
        )
    }

    /// All paths of length ≤ `max_len`, in basis order.
    fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len())
            .map(|v| Path {
                vertex: Some(v),
                arrows: vec![],
            })
            .collect();
        let mut frontier: Vec<Path> = (0..self.arrows.len())
            .map(|a| Path {
                vertex: None,
                arrows: vec![a],
            })
            .collect();
        for len in 1..=max_len {
            let mut layer = frontier.clone();
            layer.sort_by_key(|p| self.sort_key(p));
            out.extend(layer.iter().cloned());
            if len == max_len {
                break;
            }
            frontier = layer
                .iter()
                .flat_map(|p| {
                    let t = self.path_tgt(p);
                    (0..self.arrows.len())
                        .filter(move |a| self.src(*a) == t)
                        .map(move |a| {
                            let mut arrows = p.arrows.clone();
                            arrows.push(a);
                            Path { vertex: None, arrows }
                        })
                })
                .collect();
        }
        out
    }

    fn label(&self, p: &Path) -> String {
        match p.vertex {
            Some(v) => format!("e_{}", self.vertices[v]),
            None => p
                .arrows
                .iter()
                .map(|a| self.arrows[*a].name.as_str())
                .collect::<Vec<_>>()
                .join("*"),
        }
    }

    fn parse_path(&self, names: &[String]) -> Result<Path> {
        if names.is_empty() {
            return Err(Error::Quiver("empty path in relation".into()));
        }
        let mut arrows = Vec::with_capacity(names.len());
        for n in names {
            let a = self
                .arrows
                .iter()
                .position(|x| &x.name == n)
                .ok_or_else(|| Error::Quiver(format!("unknown arrow {n}")))?;
            if let Some(&prev) = arrows.last() {
                if self.tgt(prev) != self.src(a) {
                    return Err(Error::Quiver(format!("path {names:?} is not composable")));
                }
            }
            arrows.push(a);
        }
        Ok(Path { vertex: None, arrows })
    }
}

/// Builds `kQ / (relations + paths of length ≥ nil_bound)`.
pub fn quiver_algebra(
    field: Field,
    quiver: &Quiver,
    relations: &[Relation],
    nil_bound: usize,
) -> Result<Algebra> {
    if nil_bound == 0 {
        return Err(Error::Quiver("nil bound must be positive".into()));
    }
    let f = field;
    let all = quiver.paths_up_to(nil_bound);
    let n_all = all.len();
    // working indices are reversed so that the echelon's leading entry is
    // the largest path
    let pos: HashMap<Path, usize> = all
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), n_all - 1 - i))
        .collect();

    let mut rels = Vec::new();
    for r in relations {
        if r.coeffs.len() != r.paths.len() {
            return Err(Error::Quiver("relation coefficient/path count mismatch".into()));
        }
        let paths = r
            .paths
            .iter()
            .map(|p| quiver.parse_path(p))
            .collect::<Result<Vec<_>>>()?;
        let (s, t) = (quiver.path_src(&paths[0]), quiver.path_tgt(&paths[0]));
        for p in &paths {
            if p.arrows.len() < 2 {
                return Err(Error::Quiver("relations must involve paths of length ≥ 2".into()));
            }
            if quiver.path_src(p) != s || quiver.path_tgt(p) != t {
                return Err(Error::Quiver("relation paths are not parallel".into()));
            }
        }
        let coeffs = r.coeffs.iter().map(|c| f.embed(c)).collect::<Result<Vec<_>>>()?;
        rels.push((paths, coeffs, s, t));
    }

    let mut ideal = Echelon::new(f);
    for (paths, coeffs, s, t) in &rels {
        for u in all.iter().filter(|u| quiver.path_tgt(u) == *s) {
            for v in all.iter().filter(|v| quiver.path_src(v) == *t) {
                let mut pairs = Vec::new();
                for (p, c) in paths.iter().zip(coeffs) {
                    let w = quiver
                        .concat(u, p)
                        .and_then(|up| quiver.concat(&up, v))
                        .expect("composable by construction");
                    if w.arrows.len() <= nil_bound {
                        pairs.push((pos[&w], c.clone()));
                    }
                }
                ideal.insert(&SparseVec::from_pairs(f, pairs));
            }
        }
    }
    for p in all.iter().filter(|p| p.arrows.len() == nil_bound) {
        if !ideal.contains(&SparseVec::unit(pos[p])) {
            return Err(Error::Quiver(format!(
                "path {} of length {nil_bound} is not in the ideal generated by the relations; \
                 the nil bound is too small",
                quiver.label(p)
            )));
        }
        ideal.insert(&SparseVec::unit(pos[p]));
    }

    let pivots: std::collections::HashSet<usize> = ideal.pivots().collect();
    let basis: Vec<&Path> = all
        .iter()
        .filter(|p| p.arrows.len() < nil_bound && !pivots.contains(&pos[*p]))
        .collect();
    let basis_index: HashMap<usize, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, p)| (pos[*p], i))
        .collect();

    let normal_form = |p: Option<Path>| -> SparseVec {
        match p {
            Some(w) if w.arrows.len() < nil_bound => {
                let red = ideal.reduce(&SparseVec::unit(pos[&w]));
                red.remainder.remap(f, |i| Some(basis_index[&i]))
            }
            _ => SparseVec::new(),
        }
    };

    let table = basis
        .iter()
        .map(|p| basis.iter().map(|q| normal_form(quiver.concat(p, q))).collect())
        .collect();
    let nv = quiver.vertices.len();
    let vertex_elems: Vec<SparseVec> = (0..nv)
        .map(|v| {
            normal_form(Some(Path {
                vertex: Some(v),
                arrows: vec![],
            }))
        })
        .collect();
    let unit = vertex_elems
        .iter()
        .fold(SparseVec::new(), |acc, e| acc.add(f, e));
    let labels = basis.iter().map(|p| quiver.label(p)).collect();
    let mut alg = Algebra::from_sparse(f, labels, unit, table)?;
    alg.set_idempotents_unchecked(vertex_elems);
    Ok(alg)
}

/// The path algebra of `1 → 2 → … → n` (no relations).
pub fn linear_quiver(field: Field, n: usize) -> Algebra {
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (1..n)
        .map(|i| Arrow {
            name: format!("a{i}"),
            src: i.to_string(),
            tgt: (i + 1).to_string(),
        })
        .collect();
    let q = Quiver::new(vertices, arrows).expect("valid quiver");
    quiver_algebra(field, &q, &[], n).expect("hereditary")
}

/// The Kronecker algebra: two arrows `1 ⇉ 2`.
pub fn kronecker(field: Field) -> Algebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![
            Arrow {
                name: "a".into(),
                src: "1".into(),
                tgt: "2".into(),
            },
            Arrow {
                name: "b".into(),
                src: "1".into(),
                tgt: "2".into(),
            },
        ],
    )
    .expect("valid quiver");
    quiver_algebra(field, &q, &[], 2).expect("hereditary")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_quiver() -> Quiver {
        Quiver::new(
            vec!["1".into()],
            vec![Arrow {
                name: "x".into(),
                src: "1".into(),
                tgt: "1".into(),
            }],
        )
        .unwrap()
    }

    #[test]
    fn a2_and_a3_dimensions() {
        let q = Field::Rationals;
        assert_eq!(linear_quiver(q, 2).dim(), 3);
        // 3 vertices + 2 arrows + 1 path of length 2
        assert_eq!(linear_quiver(q, 3).dim(), 6);
        assert_eq!(kronecker(q).dim(), 4);
    }

    #[test]
    fn loop_with_square_relation_is_dual_numbers() {
        let q = Field::Rationals;
        let rel = Relation {
            coeffs: vec![Scalar::one()],
            paths: vec![vec!["x".into(), "x".into()]],
        };
        let a = quiver_algebra(q, &loop_quiver(), &[rel], 2).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert_eq!(a.product(1, 1), &SparseVec::new());
    }

    #[test]
    fn nil_bound_violation_detected() {
        let err = quiver_algebra(Field::Rationals, &loop_quiver(), &[], 2);
        assert!(matches!(err, Err(Error::Quiver(_))));
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let quiver = Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                Arrow { name: "a".into(), src: "1".into(), tgt: "2".into() },
                Arrow { name: "b".into(), src: "2".into(), tgt: "3".into() },
                Arrow { name: "c".into(), src: "2".into(), tgt: "2".into() },
            ],
        )
        .unwrap();
        let rel = Relation {
            coeffs: vec![Scalar::one(), Scalar::one()],
            paths: vec![vec!["a".into(), "b".into()], vec!["a".into(), "c".into()]],
        };
        assert!(quiver_algebra(Field::Rationals, &quiver, &[rel], 3).is_err());
    }

    #[test]
    fn commutative_square_relation() {
        // 1 → 2 → 4, 1 → 3 → 4 with ab = cd
        let quiver = Quiver::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                Arrow { name: "a".into(), src: "1".into(), tgt: "2".into() },
                Arrow { name: "b".into(), src: "2".into(), tgt: "4".into() },
                Arrow { name: "c".into(), src: "1".into(), tgt: "3".into() },
                Arrow { name: "d".into(), src: "3".into(), tgt: "4".into() },
            ],
        )
        .unwrap();
        let rel = Relation {
            coeffs: vec![Scalar::one(), Scalar::from_int(-1)],
            paths: vec![vec!["a".into(), "b".into()], vec!["c".into(), "d".into()]],
        };
        let a = quiver_algebra(Field::Rationals, &quiver, &[rel], 3).unwrap();
        // 4 vertices + 4 arrows + 1 surviving length-2 path
        assert_eq!(a.dim(), 9);
        assert!(a.labels().contains(&"a*b".to_string()));
    }
}
