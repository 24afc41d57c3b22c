use super::echelon::Echelon;
use super::matrix::Matrix;
use super::sparse::SparseVec;
use crate::field::{Field, Scalar};

/// A linear subspace of `k^ambient`, held as a basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    /// Span of `vectors` (a basis is extracted; dependent vectors are dropped).
    pub fn span(field: Field, ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(field);
        let mut basis = Vec::new();
        for v in vectors {
            if e.insert(&v) {
                basis.push(v);
            }
        }
        Subspace {
            field,
            ambient,
            basis,
        }
    }

    pub fn whole(field: Field, ambient: usize) -> Self {
        Self::span(field, ambient, (0..ambient).map(SparseVec::unit))
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn kernel_of(m: &Matrix) -> Self {
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: m.kernel_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn dense_basis(&self) -> Vec<Vec<Scalar>> {
        self.basis.iter().map(|v| v.to_dense(self.ambient)).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field);
        for v in &self.basis {
            e.insert(v);
        }
        e
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let e = self.echelon();
        other.basis.iter().all(|v| e.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // solve Σ a_i u_i = Σ b_j w_j
        let f = self.field;
        let mut cols: Vec<SparseVec> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| w.neg(f)));
        let m = Matrix::from_columns(f, self.ambient, cols);
        let n = self.basis.len();
        let vectors = m.kernel_basis().into_iter().map(|k| {
            let mut acc = SparseVec::new();
            for (i, c) in k.iter() {
                if *i < n {
                    acc = acc.add_scaled(f, c, &self.basis[*i]);
                }
            }
            acc
        });
        Subspace::span(f, self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_of_planes() {
        let q = Field::Rationals;
        let v = |xs: &[i64]| {
            SparseVec::from_dense(&xs.iter().map(|x| Scalar::from_int(*x)).collect::<Vec<_>>())
        };
        let a = Subspace::span(q, 3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(q, 3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 5, 0])));
        assert!(Subspace::whole(q, 3).contains_subspace(&a));
    }
}
