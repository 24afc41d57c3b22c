use super::echelon::Echelon;
use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Matrices whose nonzero density is below this fraction are stored sparse.
pub const SPARSE_DENSITY: f64 = 0.05;

#[derive(Clone, Debug)]
enum Storage {
    /// row-major
    Dense(Vec<Scalar>),
    /// one sparse vector per column
    Sparse(Vec<SparseVec>),
}

/// An exact `rows × cols` matrix over a [`Field`].
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            storage: Storage::Sparse(vec![SparseVec::new(); cols]),
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::from_columns(field, n, (0..n).map(SparseVec::unit).collect())
    }

    /// Builds from column vectors, choosing dense or sparse storage by density.
    pub fn from_columns(field: Field, rows: usize, columns: Vec<SparseVec>) -> Self {
        let cols = columns.len();
        debug_assert!(columns
            .iter()
            .all(|c| c.max_index().map_or(true, |m| m < rows)));
        let nnz: usize = columns.iter().map(|c| c.nnz()).sum();
        let cells = rows * cols;
        let sparse = cells == 0 || (nnz as f64) < SPARSE_DENSITY * cells as f64;
        let storage = if sparse {
            Storage::Sparse(columns)
        } else {
            let mut data = vec![Scalar::zero(); cells];
            for (j, col) in columns.iter().enumerate() {
                for (i, x) in col.iter() {
                    data[i * cols + j] = x.clone();
                }
            }
            Storage::Dense(data)
        };
        Matrix {
            field,
            rows,
            cols,
            storage,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        let mut columns = vec![Vec::new(); cols];
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    columns[j].push((i, x));
                }
            }
        }
        let columns = columns
            .into_iter()
            .map(SparseVec::from_sorted_unchecked)
            .collect();
        Ok(Self::from_columns(field, nrows, columns))
    }

    pub fn from_int_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| field.from_int(*x)).collect())
            .collect();
        Self::from_rows(field, rows, cols).expect("rectangular")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match &self.storage {
            Storage::Dense(d) => d[i * self.cols + j].clone(),
            Storage::Sparse(c) => c[j].get(i),
        }
    }

    pub fn column(&self, j: usize) -> SparseVec {
        match &self.storage {
            Storage::Dense(d) => SparseVec::from_sorted_unchecked(
                (0..self.rows)
                    .filter_map(|i| {
                        let x = &d[i * self.cols + j];
                        (!x.is_zero()).then(|| (i, x.clone()))
                    })
                    .collect(),
            ),
            Storage::Sparse(c) => c[j].clone(),
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        match &self.storage {
            Storage::Sparse(c) => c.clone(),
            Storage::Dense(_) => (0..self.cols).map(|j| self.column(j)).collect(),
        }
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|x| !x.is_zero()).count(),
            Storage::Sparse(c) => c.iter().map(|v| v.nnz()).sum(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// `self · v`
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let f = self.field;
        match &self.storage {
            Storage::Sparse(c) => {
                let mut pairs = Vec::new();
                for (j, x) in v.iter() {
                    for (i, y) in c[*j].iter() {
                        pairs.push((*i, f.mul(x, y)));
                    }
                }
                SparseVec::from_pairs(f, pairs)
            }
            Storage::Dense(d) => {
                let mut out = vec![Scalar::zero(); self.rows];
                for (j, x) in v.iter() {
                    for (i, slot) in out.iter_mut().enumerate() {
                        let y = &d[i * self.cols + j];
                        if !y.is_zero() {
                            f.add_mul_assign(slot, x, y);
                        }
                    }
                }
                SparseVec::from_dense(&out)
            }
        }
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.apply(&SparseVec::from_dense(v)).to_dense(self.rows)
    }

    /// `self · other`
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} · {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols = other.columns().iter().map(|c| self.apply(c)).collect();
        Ok(Matrix::from_columns(self.field, self.rows, cols))
    }

    pub fn transpose(&self) -> Matrix {
        let mut cols = vec![Vec::new(); self.rows];
        for j in 0..self.cols {
            for (i, x) in self.column(j).into_entries() {
                cols[i].push((j, x));
            }
        }
        Matrix::from_columns(
            self.field,
            self.cols,
            cols.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        )
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn add_scaled(&self, c: &Scalar, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let cols = (0..self.cols)
            .map(|j| self.column(j).add_scaled(self.field, c, &other.column(j)))
            .collect();
        Ok(Matrix::from_columns(self.field, self.rows, cols))
    }

    /// Echelon of the column space, with each row tagged by the column
    /// combination producing it.
    pub fn column_echelon(&self) -> (Echelon, Vec<SparseVec>) {
        let mut e = Echelon::with_tags(self.field);
        let mut kernel = Vec::new();
        for j in 0..self.cols {
            if let Some(rel) = e.insert_tagged(&self.column(j), SparseVec::unit(j)) {
                kernel.push(rel);
            }
        }
        (e, kernel)
    }

    pub fn rank(&self) -> usize {
        match &self.storage {
            Storage::Dense(_) => dense::rref(self).pivots.len(),
            Storage::Sparse(c) => {
                let mut e = Echelon::new(self.field);
                for v in c {
                    e.insert(v);
                }
                e.rank()
            }
        }
    }

    /// Basis of the null space; `cols − rank` vectors, each annihilated.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        match &self.storage {
            Storage::Dense(_) => dense::kernel(self),
            Storage::Sparse(_) => self.column_echelon().1,
        }
    }

    /// Some `u` with `self · u = v`, or `None` when `v ∉ im(self)`.
    pub fn member_of_image(&self, v: &SparseVec) -> Result<Option<SparseVec>> {
        if v.max_index().map_or(false, |m| m >= self.rows) {
            return Err(Error::DimensionMismatch(format!(
                "vector index {} out of range for {} rows",
                v.max_index().unwrap(),
                self.rows
            )));
        }
        Ok(match &self.storage {
            Storage::Dense(_) => dense::solve(self, v),
            Storage::Sparse(_) => {
                let (e, _) = self.column_echelon();
                let red = e.reduce(v);
                red.remainder
                    .is_zero()
                    .then(|| e.combine_tags(&red.coeffs))
            }
        })
    }

    /// Basis of the column space (the echelon rows).
    pub fn image_basis(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new(self.field);
        for j in 0..self.cols {
            e.insert(&self.column(j));
        }
        e.rows().to_vec()
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Matrix) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && (0..self.cols).all(|j| self.column(j) == other.column(j))
    }
}

/// Gauss–Jordan elimination for dense storage. Pivots are taken in the
/// leftmost available column, lowest row index first.
mod dense {
    use super::*;

    pub(super) struct Rref {
        pub data: Vec<Vec<Scalar>>,
        pub pivots: Vec<usize>,
    }

    pub(super) fn rref_rows(field: Field, mut data: Vec<Vec<Scalar>>, cols: usize) -> Rref {
        let f = field;
        let nrows = data.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !data[i][c].is_zero()) else {
                continue;
            };
            data.swap(r, p);
            let inv = f.inv(&data[r][c]).unwrap();
            for x in data[r].iter_mut().skip(c) {
                *x = f.mul(x, &inv);
            }
            let pivot_row = data[r].clone();
            for (i, row) in data.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = f.neg(&row[c]);
                for k in c..cols {
                    if !pivot_row[k].is_zero() {
                        let d = f.mul(&factor, &pivot_row[k]);
                        row[k] = f.add(&row[k], &d);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { data, pivots }
    }

    pub(super) fn rref(m: &Matrix) -> Rref {
        rref_rows(m.field, m.dense_rows(), m.cols)
    }

    pub(super) fn kernel(m: &Matrix) -> Vec<SparseVec> {
        let f = m.field;
        let Rref { data, pivots } = rref(m);
        let mut is_pivot = vec![None; m.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        (0..m.cols)
            .filter(|c| is_pivot[*c].is_none())
            .map(|free| {
                let mut pairs = vec![(free, Scalar::one())];
                for (r, &c) in pivots.iter().enumerate() {
                    let x = &data[r][free];
                    if !x.is_zero() {
                        pairs.push((c, f.neg(x)));
                    }
                }
                SparseVec::from_pairs(f, pairs)
            })
            .collect()
    }

    pub(super) fn solve(m: &Matrix, v: &SparseVec) -> Option<SparseVec> {
        let f = m.field;
        let rhs = v.to_dense(m.rows);
        let rows = m
            .dense_rows()
            .into_iter()
            .zip(rhs)
            .map(|(mut row, b)| {
                row.push(b);
                row
            })
            .collect();
        let Rref { data, pivots } = rref_rows(f, rows, m.cols + 1);
        if pivots.last() == Some(&m.cols) {
            return None;
        }
        let pairs = pivots
            .iter()
            .enumerate()
            .map(|(r, &c)| (c, data[r][m.cols].clone()))
            .collect();
        Some(SparseVec::from_pairs(f, pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        let q = Field::Rationals;
        let id = Matrix::identity(q, 4);
        assert_eq!(id.rank(), 4);
        assert!(id.kernel_basis().is_empty());
        let z = Matrix::zeros(q, 3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 3);
        let v = SparseVec::unit(1);
        assert_eq!(id.member_of_image(&v).unwrap(), Some(v.clone()));
        assert_eq!(z.member_of_image(&v).unwrap(), None);
        assert!(z.member_of_image(&SparseVec::unit(5)).is_err());
    }

    #[test]
    fn dense_and_sparse_paths_agree() {
        let q = Field::Rationals;
        let m = Matrix::from_int_rows(q, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert!(!m.is_sparse());
        let sparse = Matrix {
            storage: Storage::Sparse(m.columns()),
            ..m.clone()
        };
        assert_eq!(m.rank(), 2);
        assert_eq!(sparse.rank(), 2);
        for k in m.kernel_basis().iter().chain(sparse.kernel_basis().iter()) {
            assert!(m.apply(k).is_zero());
        }
        let target = m.apply(&SparseVec::unit(2));
        for mm in [&m, &sparse] {
            let u = mm.member_of_image(&target).unwrap().unwrap();
            assert_eq!(m.apply(&u), target);
        }
    }

    #[test]
    fn transpose_preserves_rank() {
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_int_rows(f, &[vec![1, 1, 0, 2], vec![2, 2, 0, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
        // second row is twice the first mod 3
        assert_eq!(m.rank(), 1);
    }
}
