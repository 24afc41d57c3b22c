//! Incremental row echelon form over sparse vectors.
//!
//! Vectors are inserted one at a time. Each stored row is normalised so that
//! its leading (smallest-index) entry is 1, and no two rows share a leading
//! index. Optionally every row carries a tag: its expression as a combination
//! of the inserted vectors, which is what kernel and preimage computations
//! read back.

use std::collections::{BTreeMap, HashMap};

use super::sparse::SparseVec;
use crate::field::{Field, Scalar};

#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    tags: Option<Vec<SparseVec>>,
}

/// Result of reducing a vector against an [`Echelon`]:
/// `v = Σ coeffs[k].1 * row[coeffs[k].0] + remainder`.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub remainder: SparseVec,
    pub coeffs: Vec<(usize, Scalar)>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
            tags: None,
        }
    }

    pub fn with_tags(field: Field) -> Self {
        Echelon {
            tags: Some(Vec::new()),
            ..Echelon::new(field)
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().unwrap().0)
    }

    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        let f = self.field;
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut remainder = Vec::new();
        let mut coeffs = Vec::new();
        while let Some((col, val)) = work.pop_first() {
            match self.pivot_row.get(&col) {
                Some(&r) => {
                    for (c, x) in &self.rows[r].entries()[1..] {
                        let delta = f.neg(&f.mul(&val, x));
                        match work.get_mut(c) {
                            Some(slot) => {
                                *slot = f.add(slot, &delta);
                                if slot.is_zero() {
                                    work.remove(c);
                                }
                            }
                            None => {
                                work.insert(*c, delta);
                            }
                        }
                    }
                    coeffs.push((r, val));
                }
                None => remainder.push((col, val)),
            }
        }
        Reduction {
            remainder: SparseVec::from_sorted_unchecked(remainder),
            coeffs,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).remainder.is_zero()
    }

    /// Combination of tags described by `coeffs`.
    pub fn combine_tags(&self, coeffs: &[(usize, Scalar)]) -> SparseVec {
        let tags = self.tags.as_ref().expect("echelon built without tags");
        let f = self.field;
        let mut pairs = Vec::new();
        for (r, c) in coeffs {
            for (i, x) in tags[*r].iter() {
                pairs.push((*i, f.mul(c, x)));
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    /// Inserts `v`. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_tagged(v, SparseVec::new()).is_none()
    }

    /// Inserts `v` carrying `tag`. If `v` is already in the span, nothing is
    /// stored and the relation `tag - Σ c_i tag_i` (a vector whose image is
    /// zero) is returned.
    pub fn insert_tagged(&mut self, v: &SparseVec, tag: SparseVec) -> Option<SparseVec> {
        let f = self.field;
        let red = self.reduce(v);
        let combined = if self.tags.is_some() {
            tag.sub(f, &self.combine_tags(&red.coeffs))
        } else {
            SparseVec::new()
        };
        if red.remainder.is_zero() {
            return Some(combined);
        }
        let (lead_col, lead_val) = red.remainder.leading().cloned().unwrap();
        let inv = f.inv(&lead_val).expect("nonzero leading entry");
        let row = red.remainder.scale(f, &inv);
        self.pivot_row.insert(lead_col, self.rows.len());
        self.rows.push(row);
        if let Some(tags) = self.tags.as_mut() {
            tags.push(combined.scale(f, &inv));
        }
        None
    }

    /// Rank of `span(self ∪ extra) − rank(self)` without modifying `self`.
    pub fn rank_extension<'a>(&self, extra: impl IntoIterator<Item = &'a SparseVec>) -> usize {
        let mut local = Echelon::new(self.field);
        for v in extra {
            let r = self.reduce(v).remainder;
            if !r.is_zero() {
                local.insert(&r);
            }
        }
        local.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|x| Scalar::from_int(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn dependent_vector_yields_relation() {
        let q = Field::Rationals;
        let mut e = Echelon::with_tags(q);
        assert!(e.insert_tagged(&v(&[1, 2, 0]), SparseVec::unit(0)).is_none());
        assert!(e.insert_tagged(&v(&[0, 1, 1]), SparseVec::unit(1)).is_none());
        let rel = e.insert_tagged(&v(&[2, 5, 1]), SparseVec::unit(2)).unwrap();
        // 2*(1,2,0) + 1*(0,1,1) = (2,5,1)
        assert_eq!(rel, v(&[-2, -1, 1]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rank_extension_counts_new_directions() {
        let q = Field::Rationals;
        let mut e = Echelon::new(q);
        e.insert(&v(&[1, 0, 0]));
        let extra = [v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 0, 3])];
        assert_eq!(e.rank_extension(extra.iter()), 2);
        assert_eq!(e.rank(), 1);
    }
}
