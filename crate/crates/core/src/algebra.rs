//! Finite-dimensional associative unital algebras given by structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, SparseVec, Subspace};

/// An algebra with basis `b_0 … b_{n-1}` and products `b_i b_j = Σ_l c[i][j][l] b_l`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    unit: SparseVec,
    table: Vec<Vec<SparseVec>>,
    // factorizations[l] lists (i, j, c) with c ≠ 0 the b_l-coefficient of b_i b_j
    factorizations: Vec<Vec<(usize, usize, Scalar)>>,
    idempotents: Option<Vec<SparseVec>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field && self.unit == other.unit && self.table == other.table)
    }
}

impl Algebra {
    /// Validated constructor from dense structure constants.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        table: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n || table.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "basis has {n} labels but unit/table sizes are {}/{}",
                unit.len(),
                table.len()
            )));
        }
        let mut sparse = Vec::with_capacity(n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::DimensionMismatch(format!("table row {i} is not {n}×{n}")));
            }
            sparse.push(row.iter().map(|v| SparseVec::from_dense(v)).collect());
        }
        Self::from_sparse(field, labels, SparseVec::from_dense(&unit), sparse)
    }

    pub fn from_sparse(
        field: Field,
        labels: Vec<String>,
        unit: SparseVec,
        table: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let a = Self::from_sparse_unchecked(field, labels, unit, table);
        a.check_unit()?;
        a.check_associative()?;
        Ok(a)
    }

    /// For algebras whose axioms hold by construction.
    pub(crate) fn from_sparse_unchecked(
        field: Field,
        labels: Vec<String>,
        unit: SparseVec,
        table: Vec<Vec<SparseVec>>,
    ) -> Self {
        let n = labels.len();
        let mut factorizations = vec![Vec::new(); n];
        for (i, row) in table.iter().enumerate() {
            for (j, prod) in row.iter().enumerate() {
                for (l, c) in prod.iter() {
                    factorizations[*l].push((i, j, c.clone()));
                }
            }
        }
        Algebra {
            field,
            labels,
            unit,
            table,
            factorizations,
            idempotents: None,
        }
    }

    /// The ground field as a 1-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        Self::from_sparse_unchecked(
            field,
            vec!["1".into()],
            SparseVec::unit(0),
            vec![vec![SparseVec::unit(0)]],
        )
    }

    /// `k[x]/(x^n)` with basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(field: Field, n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i + j < n {
                            SparseVec::unit(i + j)
                        } else {
                            SparseVec::new()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_sparse_unchecked(field, labels, SparseVec::unit(0), table)
    }

    /// The dual numbers `k[ε] = k[x]/(x²)`.
    pub fn dual_numbers(field: Field) -> Self {
        Self::truncated_polynomial(field, 2)
    }

    /// Full matrix algebra `M_n(k)` with basis `e_ij` (row-major).
    pub fn full_matrix(field: Field, n: usize) -> Self {
        let idx = |i: usize, j: usize| i * n + j;
        let mut labels = Vec::new();
        let mut table = vec![vec![SparseVec::new(); n * n]; n * n];
        for i in 0..n {
            for j in 0..n {
                labels.push(format!("e{}{}", i + 1, j + 1));
                for l in 0..n {
                    table[idx(i, j)][idx(j, l)] = SparseVec::unit(idx(i, l));
                }
            }
        }
        let unit = SparseVec::from_pairs(field, (0..n).map(|i| (idx(i, i), Scalar::one())).collect());
        let mut a = Self::from_sparse_unchecked(field, labels, unit, table);
        a.idempotents = Some((0..n).map(|i| SparseVec::unit(idx(i, i))).collect());
        a
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// `b_i b_j`
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.table
    }

    /// All `(i, j, c)` with `c` the `b_l`-coefficient of `b_i b_j`, `c ≠ 0`.
    pub fn factorizations(&self, l: usize) -> &[(usize, usize, Scalar)] {
        &self.factorizations[l]
    }

    pub fn idempotents(&self) -> Option<&[SparseVec]> {
        self.idempotents.as_deref()
    }

    /// Attaches a complete set of orthogonal idempotents (validated).
    pub fn with_idempotents(mut self, idempotents: Vec<SparseVec>) -> Result<Self> {
        crate::idempotent::IdempotentSystem::check(&self, &idempotents)?;
        self.idempotents = Some(idempotents);
        Ok(self)
    }

    pub(crate) fn set_idempotents_unchecked(&mut self, idempotents: Vec<SparseVec>) {
        self.idempotents = Some(idempotents);
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let f = self.field;
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = f.mul(x, y);
                for (l, c) in self.table[*i][*j].iter() {
                    pairs.push((*l, f.mul(&xy, c)));
                }
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    pub fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = SparseVec::unit(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::AlgebraAxiom(format!(
                    "unit does not act as identity on {}",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }

    pub fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i][j];
                for l in 0..n {
                    let left = self.mul(ij, &SparseVec::unit(l));
                    let right = self.mul(&SparseVec::unit(i), &self.table[j][l]);
                    if left != right {
                        return Err(Error::AlgebraAxiom(format!(
                            "({}·{})·{} ≠ {}·({}·{})",
                            self.labels[i],
                            self.labels[j],
                            self.labels[l],
                            self.labels[i],
                            self.labels[j],
                            self.labels[l]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// `A^op`: same basis, `b_i ∘ b_j = b_j b_i`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[j][i].clone()).collect())
            .collect();
        let mut a = Self::from_sparse_unchecked(self.field, self.labels.clone(), self.unit.clone(), table);
        a.idempotents = self.idempotents.clone();
        a
    }

    /// `A ⊗ B` with basis `a_i ⊗ b_j` at index `i·dim B + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = self.field;
        let (n, m) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let kron = |x: &SparseVec, y: &SparseVec| {
            let mut pairs = Vec::new();
            for (i, u) in x.iter() {
                for (j, v) in y.iter() {
                    pairs.push((i * m + j, f.mul(u, v)));
                }
            }
            SparseVec::from_pairs(f, pairs)
        };
        let mut table = vec![vec![SparseVec::new(); n * m]; n * m];
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    for l in 0..m {
                        table[i * m + j][k * m + l] = kron(&self.table[i][k], &other.table[j][l]);
                    }
                }
            }
        }
        Ok(Self::from_sparse_unchecked(f, labels, kron(&self.unit, &other.unit), table))
    }

    /// The product algebra `A × B`, basis of `A` followed by basis of `B`.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (n, m) = (self.dim(), other.dim());
        let shift = |v: &SparseVec| v.remap(self.field, |i| Some(i + n));
        let mut table = vec![vec![SparseVec::new(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = self.table[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                table[n + i][n + j] = shift(&other.table[i][j]);
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(other.labels.iter().map(|l| format!("(0,{l})")))
            .collect();
        let unit = self.unit.add(self.field, &shift(&other.unit));
        let mut a = Self::from_sparse_unchecked(self.field, labels, unit, table);
        match (&self.idempotents, &other.idempotents) {
            (Some(x), Some(y)) => {
                let mut all = x.clone();
                all.extend(y.iter().map(shift));
                a.idempotents = Some(all);
            }
            _ => {
                a.idempotents = Some(vec![self.unit.clone(), shift(&other.unit)]);
            }
        }
        Ok(a)
    }

    /// Matrix of `x ↦ a·x` (left) or `x ↦ x·a` (right multiplication).
    pub fn multiplication_matrix(&self, a: &SparseVec, left: bool) -> Matrix {
        let cols = (0..self.dim())
            .map(|j| {
                let b = SparseVec::unit(j);
                if left {
                    self.mul(a, &b)
                } else {
                    self.mul(&b, a)
                }
            })
            .collect();
        Matrix::from_columns(self.field, self.dim(), cols)
    }

    /// `{a : ab = ba for every basis b}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field;
        // unknown a = Σ x_i b_i; constraint rows for each basis b_j and output l
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut pairs = Vec::new();
            for j in 0..n {
                let comm = self.table[i][j].sub(f, &self.table[j][i]);
                for (l, c) in comm.iter() {
                    pairs.push((j * n + l, c.clone()));
                }
            }
            cols.push(SparseVec::from_pairs(f, pairs));
        }
        Subspace::kernel_of(&Matrix::from_columns(f, n * n, cols))
    }

    pub fn shared(self) -> Arc<Algebra> {
        Arc::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_numbers_are_commutative_with_full_center() {
        let a = Algebra::dual_numbers(Field::Rationals);
        a.check_associative().unwrap();
        assert!(a.is_commutative());
        assert_eq!(a.center().dim(), 2);
    }

    #[test]
    fn full_matrix_center_is_scalars() {
        let a = Algebra::full_matrix(Field::Rationals, 2);
        a.check_associative().unwrap();
        a.check_unit().unwrap();
        assert_eq!(a.center().dim(), 1);
    }

    #[test]
    fn non_associative_table_rejected() {
        let q = Field::Rationals;
        // basis {1, x} with x·x = 1 + x is fine; break it by making 1·x = 0
        let one = Scalar::one();
        let zero = Scalar::zero();
        let table = vec![
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), zero.clone()]],
            vec![vec![zero.clone(), one.clone()], vec![one.clone(), one.clone()]],
        ];
        let err = Algebra::new(q, vec!["1".into(), "x".into()], vec![one, zero], table);
        assert!(matches!(err, Err(Error::AlgebraAxiom(_))));
    }

    #[test]
    fn tensor_dimensions_and_axioms() {
        let q = Field::Rationals;
        let a = Algebra::dual_numbers(q);
        let t = a.tensor(&a).unwrap();
        assert_eq!(t.dim(), 4);
        t.check_associative().unwrap();
        t.check_unit().unwrap();
        let p = a.direct_product(&Algebra::ground(q)).unwrap();
        assert_eq!(p.dim(), 3);
        p.check_associative().unwrap();
        p.check_unit().unwrap();
    }
}
