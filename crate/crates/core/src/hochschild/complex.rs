use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix, SparseVec};

/// `C^0 → C^1 → … → C^{N+1}` with differentials `d_0 … d_N`; cohomology is
/// reported in degrees `0 … N`.
#[derive(Debug)]
pub struct CochainComplex {
    field: Field,
    dims: Vec<usize>,
    differentials: Vec<Matrix>,
    ranks: OnceLock<Vec<usize>>,
}

impl Clone for CochainComplex {
    fn clone(&self) -> Self {
        CochainComplex {
            field: self.field,
            dims: self.dims.clone(),
            differentials: self.differentials.clone(),
            ranks: self.ranks.clone(),
        }
    }
}

impl CochainComplex {
    pub fn new(field: Field, dims: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        if differentials.is_empty() || dims.len() != differentials.len() + 1 {
            return Err(Error::DimensionMismatch("complex needs N+2 spaces and N+1 maps".into()));
        }
        for (n, d) in differentials.iter().enumerate() {
            if d.cols() != dims[n] || d.rows() != dims[n + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "d_{n} is {}×{}, spaces are {} → {}",
                    d.rows(),
                    d.cols(),
                    dims[n],
                    dims[n + 1]
                )));
            }
        }
        Ok(CochainComplex {
            field,
            dims,
            differentials,
            ranks: OnceLock::new(),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Highest degree whose cohomology is reported.
    pub fn max_degree(&self) -> usize {
        self.differentials.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, n: usize) -> &Matrix {
        &self.differentials[n]
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// `d_{n+1} ∘ d_n = 0` for every `n`.
    pub fn check_d_squared(&self) -> Result<()> {
        for n in 0..self.max_degree() {
            let dd = self.differentials[n + 1].compose(&self.differentials[n])?;
            if !dd.is_zero() {
                return Err(Error::Consistency(format!("d_{} ∘ d_{n} ≠ 0", n + 1)));
            }
        }
        Ok(())
    }

    pub fn ranks(&self) -> &[usize] {
        self.ranks
            .get_or_init(|| self.differentials.iter().map(|d| d.rank()).collect())
    }

    /// `dim H^n = dim ker d_n − rank d_{n−1}` for `n ≤ N`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let r = self.ranks();
        (0..=self.max_degree())
            .map(|n| self.dims[n] - r[n] - if n > 0 { r[n - 1] } else { 0 })
            .collect()
    }

    /// `Σ (−1)^n dim C^n = Σ (−1)^n dim H^n + (−1)^N rank d_N` over `n ≤ N`.
    pub fn euler_consistent(&self) -> bool {
        let n_max = self.max_degree();
        let h = self.cohomology_dims();
        let sign = |n: usize| if n % 2 == 0 { 1i64 } else { -1 };
        let lhs: i64 = (0..=n_max).map(|n| sign(n) * self.dims[n] as i64).sum();
        let rhs: i64 = (0..=n_max).map(|n| sign(n) * h[n] as i64).sum::<i64>()
            + sign(n_max) * self.ranks()[n_max] as i64;
        lhs == rhs
    }

    /// Cocycle representatives of `H^n` together with coordinate extraction.
    pub fn cohomology_basis(&self, n: usize) -> CohomologyBasis {
        let prev = (n > 0).then(|| &self.differentials[n - 1]);
        CohomologyBasis::new(self.field, self.dims[n], prev, &self.differentials[n])
    }
}

/// A basis of `ker d_n / im d_{n−1}` given by cocycle representatives.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    field: Field,
    ambient: usize,
    boundaries: Echelon,
    // boundaries (zero tags) followed by representatives (unit tags)
    classes: Echelon,
    reps: Vec<SparseVec>,
    next: Matrix,
}

impl CohomologyBasis {
    pub fn new(field: Field, ambient: usize, prev: Option<&Matrix>, next: &Matrix) -> Self {
        let mut boundaries = Echelon::new(field);
        let mut classes = Echelon::with_tags(field);
        if let Some(d) = prev {
            for j in 0..d.cols() {
                let c = d.column(j);
                if boundaries.insert(&c) {
                    classes.insert_tagged(&c, SparseVec::new());
                }
            }
        }
        let mut reps = Vec::new();
        for z in next.kernel_basis() {
            if classes
                .insert_tagged(&z, SparseVec::unit(reps.len()))
                .is_none()
            {
                reps.push(z);
            }
        }
        CohomologyBasis {
            field,
            ambient,
            boundaries,
            classes,
            reps,
            next: next.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reps(&self) -> &[SparseVec] {
        &self.reps
    }

    pub fn is_cocycle(&self, z: &SparseVec) -> bool {
        self.next.apply(z).is_zero()
    }

    pub fn is_coboundary(&self, z: &SparseVec) -> bool {
        self.boundaries.contains(z)
    }

    pub fn boundaries(&self) -> &Echelon {
        &self.boundaries
    }

    /// Coordinates of the class of the cocycle `z` in the representative basis.
    pub fn coordinates(&self, z: &SparseVec) -> Result<SparseVec> {
        if !self.is_cocycle(z) {
            return Err(Error::Consistency("vector is not a cocycle".into()));
        }
        let red = self.classes.reduce(z);
        if !red.remainder.is_zero() {
            return Err(Error::Consistency("cocycle outside the harvested span".into()));
        }
        Ok(self.classes.combine_tags(&red.coeffs))
    }

    /// Rank of the map on cohomology sending the `i`-th class of the source to
    /// the class of `images[i]` (cocycles of this complex).
    pub fn rank_of_images(&self, images: &[SparseVec]) -> usize {
        self.boundaries.rank_extension(images.iter())
    }
}

/// `C_0 ← C_1 ← … ← C_{N+1}` with boundaries `b_1 … b_{N+1}`; homology in
/// degrees `0 … N`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<Matrix>,
}

impl ChainComplex {
    /// `boundaries[i]` is `b_{i+1}: C_{i+1} → C_i`.
    pub fn new(dims: Vec<usize>, boundaries: Vec<Matrix>) -> Result<Self> {
        if boundaries.is_empty() || dims.len() != boundaries.len() + 1 {
            return Err(Error::DimensionMismatch("chain complex needs N+2 spaces and N+1 maps".into()));
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.cols() != dims[i + 1] || b.rows() != dims[i] {
                return Err(Error::DimensionMismatch(format!("b_{} has the wrong shape", i + 1)));
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn boundary(&self, n: usize) -> &Matrix {
        &self.boundaries[n - 1]
    }

    pub fn max_degree(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn check_b_squared(&self) -> Result<()> {
        for i in 1..self.boundaries.len() {
            if !self.boundaries[i - 1].compose(&self.boundaries[i])?.is_zero() {
                return Err(Error::Consistency(format!("b_{} ∘ b_{} ≠ 0", i, i + 1)));
            }
        }
        Ok(())
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        let r: Vec<usize> = self.boundaries.iter().map(|b| b.rank()).collect();
        (0..=self.max_degree())
            .map(|n| self.dims[n] - r[n] - if n > 0 { r[n - 1] } else { 0 })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_complex() {
        let q = Field::Rationals;
        // k → k² → k with d0 = (1,1)ᵀ, d1 = (1,−1)
        let d0 = Matrix::from_int_rows(q, &[vec![1], vec![1]]);
        let d1 = Matrix::from_int_rows(q, &[vec![1, -1]]);
        let c = CochainComplex::new(q, vec![1, 2, 1], vec![d0, d1]).unwrap();
        c.check_d_squared().unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 0]);
        assert!(c.euler_consistent());
        let h1 = c.cohomology_basis(1);
        assert_eq!(h1.dim(), 0);
    }

    #[test]
    fn coordinates_modulo_boundaries() {
        let q = Field::Rationals;
        let d0 = Matrix::from_int_rows(q, &[vec![1], vec![0]]);
        let d1 = Matrix::zeros(q, 1, 2);
        let c = CochainComplex::new(q, vec![1, 2, 1], vec![d0, d1]).unwrap();
        let h = c.cohomology_basis(1);
        assert_eq!(h.dim(), 1);
        let v = SparseVec::from_dense(&[crate::field::Scalar::from_int(5), crate::field::Scalar::from_int(3)]);
        let coords = h.coordinates(&v).unwrap();
        let rep = &h.reps()[0];
        // 5e0 + 3e1 ≡ 3 e1 (mod e0)
        assert_eq!(rep.scale(q, &coords.get(0)).get(1), crate::field::Scalar::from_int(3));
    }
}
