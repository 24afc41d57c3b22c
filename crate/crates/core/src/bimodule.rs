//! Bimodules given by action tensors, and the operations on them the rest of
//! the crate needs: duals, twists, tensor products over an algebra, invariants
//! and Hom spaces.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Echelon, Matrix, SparseVec, Subspace};

/// A `(C, A)`-bimodule: `C` acts on the left, `A` on the right.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    labels: Vec<String>,
    // left_action[c][m] = b_c · m_m
    left_action: Vec<Vec<SparseVec>>,
    // right_action[m][a] = m_m · b_a
    right_action: Vec<Vec<SparseVec>>,
}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        labels: Vec<String>,
        left_action: Vec<Vec<SparseVec>>,
        right_action: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let n = labels.len();
        if left_action.len() != left.dim()
            || left_action.iter().any(|r| r.len() != n)
            || right_action.len() != n
            || right_action.iter().any(|r| r.len() != right.dim())
        {
            return Err(Error::DimensionMismatch("action tensor shapes".into()));
        }
        if left.field() != right.field() {
            return Err(Error::FieldMismatch);
        }
        let m = Self::from_unchecked(left, right, labels, left_action, right_action);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn from_unchecked(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        labels: Vec<String>,
        left_action: Vec<Vec<SparseVec>>,
        right_action: Vec<Vec<SparseVec>>,
    ) -> Self {
        Bimodule {
            left,
            right,
            labels,
            left_action,
            right_action,
        }
    }

    /// Exhaustive unit and associativity checks on basis elements.
    pub fn check(&self) -> Result<()> {
        let (c, a) = (&self.left, &self.right);
        for m in 0..self.dim() {
            let mv = SparseVec::unit(m);
            if self.act_left(c.unit(), &mv) != mv || self.act_right(&mv, a.unit()) != mv {
                return Err(Error::BimoduleAxiom(format!("unit does not fix {}", self.labels[m])));
            }
            for i in 0..c.dim() {
                for j in 0..c.dim() {
                    let lhs = self.act_left(c.product(i, j), &mv);
                    let rhs = self.act_left(&SparseVec::unit(i), &self.left_action[j][m]);
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("(ab)m ≠ a(bm)".into()));
                    }
                }
            }
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let lhs = self.act_right(&mv, a.product(i, j));
                    let rhs = self.act_right(&self.right_action[m][i], &SparseVec::unit(j));
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("m(ab) ≠ (ma)b".into()));
                    }
                }
            }
            for i in 0..c.dim() {
                for j in 0..a.dim() {
                    let lhs = self.act_right(&self.left_action[i][m], &SparseVec::unit(j));
                    let rhs = self.act_left(&SparseVec::unit(i), &self.right_action[m][j]);
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("(am)b ≠ a(mb)".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn left(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn left_action(&self) -> &[Vec<SparseVec>] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Vec<SparseVec>] {
        &self.right_action
    }

    /// `b_c · m_m`.
    pub fn left_basis(&self, c: usize, m: usize) -> &SparseVec {
        &self.left_action[c][m]
    }

    /// `m_m · b_a`.
    pub fn right_basis(&self, m: usize, a: usize) -> &SparseVec {
        &self.right_action[m][a]
    }

    pub fn act_left(&self, c: &SparseVec, m: &SparseVec) -> SparseVec {
        bilinear(self.field(), c, m, |i, j| &self.left_action[i][j])
    }

    pub fn act_right(&self, m: &SparseVec, a: &SparseVec) -> SparseVec {
        bilinear(self.field(), m, a, |i, j| &self.right_action[i][j])
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `A` as an `A`-bimodule.
    pub fn regular(a: &Arc<Algebra>) -> Self {
        let n = a.dim();
        let table: Vec<Vec<SparseVec>> = (0..n).map(|i| (0..n).map(|j| a.product(i, j).clone()).collect()).collect();
        Self::from_unchecked(a.clone(), a.clone(), a.labels().to_vec(), table.clone(), table)
    }

    pub fn zero(left: &Arc<Algebra>, right: &Arc<Algebra>) -> Self {
        Self::from_unchecked(
            left.clone(),
            right.clone(),
            Vec::new(),
            vec![Vec::new(); left.dim()],
            Vec::new(),
        )
    }

    /// `D N = Hom_k(N, k)` on the dual basis, an `(A, C)`-bimodule with
    /// `(a·φ)(x) = φ(x a)` and `(φ·c)(x) = φ(c x)`.
    pub fn dual(&self) -> Bimodule {
        let f = self.field();
        let n = self.dim();
        let (c_dim, a_dim) = (self.left.dim(), self.right.dim());
        let left_action = (0..a_dim)
            .map(|a| {
                (0..n)
                    .map(|i| {
                        let pairs = (0..n)
                            .map(|j| (j, self.right_action[j][a].get(i)))
                            .collect();
                        SparseVec::from_pairs(f, pairs)
                    })
                    .collect()
            })
            .collect();
        let right_action = (0..n)
            .map(|i| {
                (0..c_dim)
                    .map(|c| {
                        let pairs = (0..n).map(|j| (j, self.left_action[c][j].get(i))).collect();
                        SparseVec::from_pairs(f, pairs)
                    })
                    .collect()
            })
            .collect();
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        Self::from_unchecked(self.right.clone(), self.left.clone(), labels, left_action, right_action)
    }

    /// `^f A`: the regular bimodule with left action twisted by the automorphism `f`
    /// (given by its matrix on the basis of `A`).
    pub fn twisted(a: &Arc<Algebra>, f: &Matrix) -> Result<Self> {
        check_automorphism(a, f)?;
        let reg = Self::regular(a);
        let n = a.dim();
        let left_action = (0..n)
            .map(|i| {
                let fi = f.column(i);
                (0..n).map(|m| a.mul(&fi, &SparseVec::unit(m))).collect()
            })
            .collect();
        Ok(Self::from_unchecked(
            a.clone(),
            a.clone(),
            a.labels().to_vec(),
            left_action,
            reg.right_action,
        ))
    }

    /// Restriction of scalars along algebra maps `C' → C` and `A' → A`,
    /// given by the images of the basis elements of `C'` and `A'`.
    pub fn restrict(
        &self,
        new_left: &Arc<Algebra>,
        left_images: &[SparseVec],
        new_right: &Arc<Algebra>,
        right_images: &[SparseVec],
    ) -> Bimodule {
        let n = self.dim();
        let left_action = left_images
            .iter()
            .map(|c| (0..n).map(|m| self.act_left(c, &SparseVec::unit(m))).collect())
            .collect();
        let right_action = (0..n)
            .map(|m| right_images.iter().map(|a| self.act_right(&SparseVec::unit(m), a)).collect())
            .collect();
        Self::from_unchecked(
            new_left.clone(),
            new_right.clone(),
            self.labels.clone(),
            left_action,
            right_action,
        )
    }

    /// Sub-bimodule spanned by `basis` (a basis of an invariant subspace),
    /// expressed in that basis.
    pub fn subquotient_of(&self, basis: &[SparseVec]) -> Result<Bimodule> {
        let f = self.field();
        let mut e = Echelon::with_tags(f);
        for (i, b) in basis.iter().enumerate() {
            if e.insert_tagged(b, SparseVec::unit(i)).is_some() {
                return Err(Error::Precondition("sub-bimodule basis is dependent".into()));
            }
        }
        let coords = |v: SparseVec| -> Result<SparseVec> {
            let red = e.reduce(&v);
            if !red.remainder.is_zero() {
                return Err(Error::Precondition("subspace is not a sub-bimodule".into()));
            }
            Ok(e.combine_tags(&red.coeffs))
        };
        let mut left_action = Vec::new();
        for c in 0..self.left.dim() {
            let mut row = Vec::new();
            for b in basis {
                row.push(coords(self.act_left(&SparseVec::unit(c), b))?);
            }
            left_action.push(row);
        }
        let mut right_action = Vec::new();
        for b in basis {
            let mut row = Vec::new();
            for a in 0..self.right.dim() {
                row.push(coords(self.act_right(b, &SparseVec::unit(a)))?);
            }
            right_action.push(row);
        }
        let labels = (0..basis.len()).map(|i| format!("s{i}")).collect();
        Ok(Self::from_unchecked(
            self.left.clone(),
            self.right.clone(),
            labels,
            left_action,
            right_action,
        ))
    }

    /// `{m : a m = m a for all a}` (needs `C = A`).
    pub fn invariants(&self) -> Result<Subspace> {
        self.require_same_sides()?;
        let f = self.field();
        let (n, d) = (self.dim(), self.left.dim());
        let cols = (0..n)
            .map(|m| {
                let mut pairs = Vec::new();
                for a in 0..d {
                    let diff = self.left_action[a][m].sub(f, &self.right_action[m][a]);
                    pairs.extend(diff.iter().map(|(l, c)| (a * n + l, c.clone())));
                }
                SparseVec::from_pairs(f, pairs)
            })
            .collect();
        Ok(Subspace::kernel_of(&Matrix::from_columns(f, d * n, cols)))
    }

    /// `{a ∈ A : a m = m a for all m}` (needs `C = A`).
    pub fn symmetric_actors(&self) -> Result<Subspace> {
        self.require_same_sides()?;
        let f = self.field();
        let (n, d) = (self.dim(), self.left.dim());
        let cols = (0..d)
            .map(|a| {
                let mut pairs = Vec::new();
                for m in 0..n {
                    let diff = self.left_action[a][m].sub(f, &self.right_action[m][a]);
                    pairs.extend(diff.iter().map(|(l, c)| (m * n + l, c.clone())));
                }
                SparseVec::from_pairs(f, pairs)
            })
            .collect();
        Ok(Subspace::kernel_of(&Matrix::from_columns(f, n * n, cols)))
    }

    fn require_same_sides(&self) -> Result<()> {
        if *self.left != *self.right {
            return Err(Error::AlgebraMismatch(
                "operation needs a bimodule over a single algebra".into(),
            ));
        }
        Ok(())
    }
}

fn bilinear<'a>(
    f: Field,
    x: &SparseVec,
    y: &SparseVec,
    table: impl Fn(usize, usize) -> &'a SparseVec,
) -> SparseVec {
    let mut pairs = Vec::new();
    for (i, u) in x.iter() {
        for (j, v) in y.iter() {
            let uv = f.mul(u, v);
            for (l, c) in table(*i, *j).iter() {
                pairs.push((*l, f.mul(&uv, c)));
            }
        }
    }
    SparseVec::from_pairs(f, pairs)
}

/// Checks that `f` (columns = images of basis elements) is an algebra automorphism.
pub fn check_automorphism(a: &Algebra, f: &Matrix) -> Result<()> {
    let n = a.dim();
    if f.rows() != n || f.cols() != n {
        return Err(Error::NotAutomorphism(format!("matrix is {}×{}, expected {n}×{n}", f.rows(), f.cols())));
    }
    if f.apply(a.unit()) != *a.unit() {
        return Err(Error::NotAutomorphism("unit not preserved".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if f.apply(a.product(i, j)) != a.mul(&f.column(i), &f.column(j)) {
                return Err(Error::NotAutomorphism(format!(
                    "f({}·{}) ≠ f({})·f({})",
                    a.labels()[i],
                    a.labels()[j],
                    a.labels()[i],
                    a.labels()[j]
                )));
            }
        }
    }
    if f.rank() != n {
        return Err(Error::NotAutomorphism("not invertible".into()));
    }
    Ok(())
}

/// `Hom_{C-A}(X, Y)` as a subspace of `Hom_k(X, Y)`; coordinate `x·dim Y + y`
/// is the `y`-component of `φ(x)`.
pub fn hom_bimodule(x: &Bimodule, y: &Bimodule) -> Result<Subspace> {
    if *x.left != *y.left || *x.right != *y.right {
        return Err(Error::AlgebraMismatch("Hom between bimodules over different algebras".into()));
    }
    let f = x.field();
    let (dx, dy) = (x.dim(), y.dim());
    let (dc, da) = (x.left.dim(), x.right.dim());
    // one unknown per (x, y); constraints φ(c x) − c φ(x) and φ(x a) − φ(x) a
    let rows_left = dc * dx * dy;
    let mut cols = Vec::with_capacity(dx * dy);
    for xi in 0..dx {
        for yi in 0..dy {
            let mut pairs = Vec::new();
            let unit_y = SparseVec::unit(yi);
            for c in 0..dc {
                // φ(c x_j): contributes where c·x_j has an x_xi component
                for xj in 0..dx {
                    let coef = x.left_action[c][xj].get(xi);
                    if !coef.is_zero() {
                        pairs.push(((c * dx + xj) * dy + yi, coef));
                    }
                }
                for (l, v) in y.act_left(&SparseVec::unit(c), &unit_y).iter() {
                    pairs.push(((c * dx + xi) * dy + l, f.neg(v)));
                }
            }
            for a in 0..da {
                for xj in 0..dx {
                    let coef = x.right_action[xj][a].get(xi);
                    if !coef.is_zero() {
                        pairs.push((rows_left + (a * dx + xj) * dy + yi, coef));
                    }
                }
                for (l, v) in y.act_right(&unit_y, &SparseVec::unit(a)).iter() {
                    pairs.push((rows_left + (a * dx + xi) * dy + l, f.neg(v)));
                }
            }
            cols.push(SparseVec::from_pairs(f, pairs));
        }
    }
    let m = Matrix::from_columns(f, rows_left + da * dx * dy, cols);
    Ok(Subspace::kernel_of(&m))
}

/// `X ⊗_A Y` as a quotient of `X ⊗_k Y` (index `x·dim Y + y`).
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: Bimodule,
    /// `X ⊗_k Y → X ⊗_A Y`.
    pub projection: Matrix,
    /// Index in `X ⊗_k Y` of the representative of each quotient basis element.
    pub representatives: Vec<usize>,
    dim_y: usize,
}

impl TensorProduct {
    pub fn dim_y(&self) -> usize {
        self.dim_y
    }

    pub fn project_pure(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = self.module.field();
        let mut pairs = Vec::new();
        for (i, u) in x.iter() {
            for (j, v) in y.iter() {
                pairs.push((i * self.dim_y + j, f.mul(u, v)));
            }
        }
        self.projection.apply(&SparseVec::from_pairs(f, pairs))
    }

    /// The linear map `X ⊗_A Y → Z` induced by a balanced bilinear map given
    /// on basis pairs.
    pub fn induced_map(&self, target_dim: usize, pairing: impl Fn(usize, usize) -> SparseVec) -> Matrix {
        let cols = self
            .representatives
            .iter()
            .map(|&r| pairing(r / self.dim_y, r % self.dim_y))
            .collect();
        Matrix::from_columns(self.module.field(), target_dim, cols)
    }
}

/// `X ⊗_A Y` for a `(C, A)`-bimodule `X` and an `(A, B)`-bimodule `Y`.
///
/// The quotient basis is the set of non-pivot tensors after eliminating the
/// balancing relations `xa ⊗ y − x ⊗ ay` with leading-index pivoting.
pub fn tensor_over(x: &Bimodule, y: &Bimodule) -> Result<TensorProduct> {
    if *x.right != *y.left {
        return Err(Error::AlgebraMismatch("inner algebras of the tensor product differ".into()));
    }
    let f = x.field();
    let (dx, dy, da) = (x.dim(), y.dim(), x.right.dim());
    let pure = |u: &SparseVec, v: &SparseVec| {
        let mut pairs = Vec::new();
        for (i, s) in u.iter() {
            for (j, t) in v.iter() {
                pairs.push((i * dy + j, f.mul(s, t)));
            }
        }
        SparseVec::from_pairs(f, pairs)
    };
    let mut rel = Echelon::new(f);
    for xi in 0..dx {
        for a in 0..da {
            for yi in 0..dy {
                let r = pure(&x.right_action[xi][a], &SparseVec::unit(yi))
                    .sub(f, &pure(&SparseVec::unit(xi), &y.left_action[a][yi]));
                rel.insert(&r);
            }
        }
    }
    let pivots: std::collections::HashSet<usize> = rel.pivots().collect();
    let representatives: Vec<usize> = (0..dx * dy).filter(|i| !pivots.contains(i)).collect();
    let index_of: std::collections::HashMap<usize, usize> =
        representatives.iter().enumerate().map(|(q, &r)| (r, q)).collect();
    let reduce = |v: &SparseVec| rel.reduce(v).remainder.remap(f, |i| Some(index_of[&i]));
    let projection = Matrix::from_columns(
        f,
        representatives.len(),
        (0..dx * dy).map(|i| reduce(&SparseVec::unit(i))).collect(),
    );
    let left_action = (0..x.left.dim())
        .map(|c| {
            representatives
                .iter()
                .map(|&r| reduce(&pure(&x.left_action[c][r / dy], &SparseVec::unit(r % dy))))
                .collect()
        })
        .collect();
    let right_action = representatives
        .iter()
        .map(|&r| {
            (0..y.right.dim())
                .map(|b| reduce(&pure(&SparseVec::unit(r / dy), &y.right_action[r % dy][b])))
                .collect()
        })
        .collect();
    let labels = representatives
        .iter()
        .map(|&r| format!("{}⊗{}", x.labels[r / dy], y.labels[r % dy]))
        .collect();
    Ok(TensorProduct {
        module: Bimodule::from_unchecked(x.left.clone(), y.right.clone(), labels, left_action, right_action),
        projection,
        representatives,
        dim_y: dy,
    })
}

/// `M^{⊗_A p}` (with `M^{⊗0} = A`).
pub fn tensor_power(m: &Bimodule, p: usize) -> Result<Bimodule> {
    let mut acc = Bimodule::regular(m.left());
    for i in 0..p {
        acc = if i == 0 { m.clone() } else { tensor_over(&acc, m)?.module };
    }
    Ok(acc)
}

/// The canonical isomorphism `A ⊗_A M → M`, `a ⊗ m ↦ a m`.
pub fn left_unit_iso(m: &Bimodule) -> Result<(TensorProduct, Matrix)> {
    let t = tensor_over(&Bimodule::regular(m.left()), m)?;
    let iso = t.induced_map(m.dim(), |a, x| m.left_basis(a, x).clone());
    if iso.rank() != m.dim() || t.module.dim() != m.dim() {
        return Err(Error::Consistency("A ⊗_A M → M is not bijective".into()));
    }
    Ok((t, iso))
}

/// The canonical isomorphism `M ⊗_A A → M`, `m ⊗ a ↦ m a`.
pub fn right_unit_iso(m: &Bimodule) -> Result<(TensorProduct, Matrix)> {
    let t = tensor_over(m, &Bimodule::regular(m.right()))?;
    let iso = t.induced_map(m.dim(), |x, a| m.right_basis(x, a).clone());
    if iso.rank() != m.dim() || t.module.dim() != m.dim() {
        return Err(Error::Consistency("M ⊗_A A → M is not bijective".into()));
    }
    Ok((t, iso))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::linear_quiver;

    fn a2() -> Arc<Algebra> {
        linear_quiver(Field::Rationals, 2).shared()
    }

    #[test]
    fn regular_and_dual_satisfy_axioms() {
        let a = a2();
        let r = Bimodule::regular(&a);
        r.check().unwrap();
        let d = r.dual();
        d.check().unwrap();
        let dd = d.dual();
        assert_eq!(dd.left_action, r.left_action);
        assert_eq!(dd.right_action, r.right_action);
    }

    #[test]
    fn dual_left_action_is_transposed_right_action() {
        let a = a2();
        let r = Bimodule::regular(&a);
        let d = r.dual();
        for x in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(d.left_basis(x, i).get(j), r.right_basis(j, x).get(i));
                }
            }
        }
    }

    #[test]
    fn symmetric_actors_of_regular_is_center() {
        for a in [a2(), Algebra::dual_numbers(Field::Rationals).shared()] {
            let r = Bimodule::regular(&a);
            assert!(r.symmetric_actors().unwrap().same_as(&a.center()));
            assert!(r.dual().symmetric_actors().unwrap().same_as(&a.center()));
        }
    }

    #[test]
    fn twist_by_minus_x() {
        let q = Field::Rationals;
        let a = Algebra::dual_numbers(q).shared();
        let f = Matrix::from_int_rows(q, &[vec![1, 0], vec![0, -1]]);
        let m = Bimodule::twisted(&a, &f).unwrap();
        m.check().unwrap();
        assert_eq!(m.symmetric_actors().unwrap().dim(), 1);
        assert_eq!(m.invariants().unwrap().dim(), 1);
        assert!(m.symmetric_actors().unwrap().contains(&SparseVec::unit(0)));
    }

    #[test]
    fn swapping_a2_idempotents_is_not_an_automorphism() {
        let q = Field::Rationals;
        let a = a2();
        // basis e_1, e_2, a1: swap the idempotents, fix the arrow
        let f = Matrix::from_int_rows(q, &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert!(matches!(Bimodule::twisted(&a, &f), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn unit_isomorphisms() {
        let a = a2();
        let d = Bimodule::regular(&a).dual();
        left_unit_iso(&d).unwrap();
        right_unit_iso(&d).unwrap();
    }

    #[test]
    fn dual_numbers_dual_tensor_square() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let d = Bimodule::regular(&a).dual();
        let t = tensor_over(&d, &d).unwrap();
        assert_eq!(t.module.dim(), 2);
        t.module.check().unwrap();
    }

    #[test]
    fn hom_regular_to_regular_is_center() {
        let a = a2();
        let r = Bimodule::regular(&a);
        assert_eq!(hom_bimodule(&r, &r).unwrap().dim(), 1);
        let d = r.dual();
        // one-way: no bimodule maps DA → A
        assert_eq!(hom_bimodule(&d, &r).unwrap().dim(), 0);
    }
}
