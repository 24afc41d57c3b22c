//! Split algebras `Λ = A ⊕ M` and their named specialisations.
//!
//! The basis of `Λ` is the basis of `A` followed by the basis of `M`; every
//! bigraded index downstream relies on this layout.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};

#[derive(Clone, Debug)]
pub struct SplitAlgebra {
    base: Arc<Algebra>,
    ideal: Bimodule,
    // product[i][j] = m_i · m_j ∈ M
    product: Vec<Vec<SparseVec>>,
    total: Arc<Algebra>,
    square_zero: bool,
}

impl SplitAlgebra {
    /// Validates `product` (balanced, `A`-bilinear, associative) and builds `Λ`.
    /// `None` means the zero product.
    pub fn new(base: Arc<Algebra>, ideal: Bimodule, product: Option<Vec<Vec<SparseVec>>>) -> Result<Self> {
        if **ideal.left() != *base || **ideal.right() != *base {
            return Err(Error::InvalidSplit("the ideal must be a bimodule over the base".into()));
        }
        let n = ideal.dim();
        let product = product.unwrap_or_else(|| vec![vec![SparseVec::new(); n]; n]);
        if product.len() != n || product.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSplit("product table has the wrong shape".into()));
        }
        let square_zero = product.iter().all(|r| r.iter().all(|v| v.is_zero()));
        let s = SplitAlgebra {
            total: Arc::new(Algebra::ground(base.field())),
            base,
            ideal,
            product,
            square_zero,
        };
        s.check_product()?;
        let total = s.assemble()?;
        Ok(SplitAlgebra {
            total: Arc::new(total),
            ..s
        })
    }

    fn mul_m(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = self.base.field();
        let mut pairs = Vec::new();
        for (i, u) in x.iter() {
            for (j, v) in y.iter() {
                let uv = f.mul(u, v);
                for (l, c) in self.product[*i][*j].iter() {
                    pairs.push((*l, f.mul(&uv, c)));
                }
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    fn check_product(&self) -> Result<()> {
        if self.square_zero {
            return Ok(());
        }
        let (n, d) = (self.ideal.dim(), self.base.dim());
        let m = &self.ideal;
        for i in 0..n {
            for j in 0..n {
                let (mi, mj) = (SparseVec::unit(i), SparseVec::unit(j));
                for a in 0..d {
                    let av = SparseVec::unit(a);
                    if self.mul_m(&m.act_right(&mi, &av), &mj) != self.mul_m(&mi, &m.act_left(&av, &mj)) {
                        return Err(Error::InvalidSplit("product is not balanced: (ma)n ≠ m(an)".into()));
                    }
                    if self.mul_m(&m.act_left(&av, &mi), &mj) != m.act_left(&av, &self.product[i][j]) {
                        return Err(Error::InvalidSplit("product is not left A-linear".into()));
                    }
                    if self.mul_m(&mi, &m.act_right(&mj, &av)) != m.act_right(&self.product[i][j], &av) {
                        return Err(Error::InvalidSplit("product is not right A-linear".into()));
                    }
                }
                for l in 0..n {
                    let ml = SparseVec::unit(l);
                    if self.mul_m(&self.product[i][j], &ml) != self.mul_m(&mi, &self.product[j][l]) {
                        return Err(Error::InvalidSplit("product is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    fn assemble(&self) -> Result<Algebra> {
        let f = self.base.field();
        let (d, n) = (self.base.dim(), self.ideal.dim());
        let shift = |v: &SparseVec| v.remap(f, |i| Some(i + d));
        let mut table = vec![vec![SparseVec::new(); d + n]; d + n];
        for i in 0..d {
            for j in 0..d {
                table[i][j] = self.base.product(i, j).clone();
            }
            for m in 0..n {
                table[i][d + m] = shift(self.ideal.left_basis(i, m));
                table[d + m][i] = shift(self.ideal.right_basis(m, i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                table[d + i][d + j] = shift(&self.product[i][j]);
            }
        }
        let labels = self
            .base
            .labels()
            .iter()
            .chain(self.ideal.labels().iter())
            .cloned()
            .collect();
        let mut total = Algebra::from_sparse(f, labels, self.base.unit().clone(), table)?;
        if let Some(idem) = self.base.idempotents() {
            total = total.with_idempotents(idem.to_vec())?;
        }
        Ok(total)
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn ideal(&self) -> &Bimodule {
        &self.ideal
    }

    pub fn product(&self) -> &[Vec<SparseVec>] {
        &self.product
    }

    /// `Λ = A ⊕ M`.
    pub fn total(&self) -> &Arc<Algebra> {
        &self.total
    }

    pub fn square_zero(&self) -> bool {
        self.square_zero
    }

    pub fn dim_a(&self) -> usize {
        self.base.dim()
    }

    pub fn dim_m(&self) -> usize {
        self.ideal.dim()
    }

    /// The same `A` and `M` with the product of `M` replaced by zero.
    pub fn with_zero_product(&self) -> SplitAlgebra {
        SplitAlgebra::new(self.base.clone(), self.ideal.clone(), None).expect("zero product is valid")
    }

    /// The regular `Λ`-bimodule.
    pub fn regular(&self) -> Bimodule {
        Bimodule::regular(&self.total)
    }

    /// `M` as a `Λ`-bimodule (a two-sided ideal of `Λ`).
    pub fn ideal_bimodule(&self) -> Bimodule {
        let d = self.dim_a();
        let n = self.dim_m();
        let lam = &self.total;
        let left_action = (0..lam.dim())
            .map(|l| {
                (0..n)
                    .map(|m| if l < d { self.ideal.left_basis(l, m).clone() } else { self.product[l - d][m].clone() })
                    .collect()
            })
            .collect();
        let right_action = (0..n)
            .map(|m| {
                (0..lam.dim())
                    .map(|l| if l < d { self.ideal.right_basis(m, l).clone() } else { self.product[m][l - d].clone() })
                    .collect()
            })
            .collect();
        Bimodule::from_unchecked(lam.clone(), lam.clone(), self.ideal.labels().to_vec(), left_action, right_action)
    }

    /// An `A`-bimodule viewed as a `Λ`-bimodule on which `M` acts by zero.
    pub fn extend_trivially(&self, x: &Bimodule) -> Result<Bimodule> {
        if **x.left() != *self.base || **x.right() != *self.base {
            return Err(Error::AlgebraMismatch("bimodule is not over the base algebra".into()));
        }
        let d = self.dim_a();
        let lam = &self.total;
        let left_action = (0..lam.dim())
            .map(|l| {
                (0..x.dim())
                    .map(|m| if l < d { x.left_basis(l, m).clone() } else { SparseVec::new() })
                    .collect()
            })
            .collect();
        let right_action = (0..x.dim())
            .map(|m| {
                (0..lam.dim())
                    .map(|l| if l < d { x.right_basis(m, l).clone() } else { SparseVec::new() })
                    .collect()
            })
            .collect();
        Ok(Bimodule::from_unchecked(lam.clone(), lam.clone(), x.labels().to_vec(), left_action, right_action))
    }

    /// `Λ/M`: `A` as a `Λ`-bimodule with `M` acting by zero.
    pub fn quotient_bimodule(&self) -> Bimodule {
        self.extend_trivially(&Bimodule::regular(&self.base)).expect("base bimodule")
    }

    /// A `Λ`-bimodule restricted to an `A`-bimodule.
    pub fn restrict_to_base(&self, x: &Bimodule) -> Bimodule {
        let imgs: Vec<SparseVec> = (0..self.dim_a()).map(SparseVec::unit).collect();
        x.restrict(&self.base, &imgs, &self.base, &imgs)
    }

    /// `0 → M → Λ → Λ/M → 0`.
    pub fn ses_bimodules(&self) -> Result<BimoduleSequence> {
        let f = self.field();
        let (d, n) = (self.dim_a(), self.dim_m());
        let sub = self.ideal_bimodule();
        let middle = self.regular();
        let quotient = self.quotient_bimodule();
        let inclusion = Matrix::from_columns(f, d + n, (0..n).map(|m| SparseVec::unit(d + m)).collect());
        let projection = Matrix::from_columns(
            f,
            d,
            (0..d + n).map(|l| if l < d { SparseVec::unit(l) } else { SparseVec::new() }).collect(),
        );
        let seq = BimoduleSequence {
            sub,
            middle,
            quotient,
            inclusion,
            projection,
        };
        seq.check()?;
        Ok(seq)
    }

    /// `TA = A ⊕ DA` with zero product.
    pub fn trivial_extension(a: &Arc<Algebra>) -> SplitAlgebra {
        let da = Bimodule::regular(a).dual();
        SplitAlgebra::new(a.clone(), da, None).expect("trivial extension is valid")
    }

    /// `A[ε] = A ⊕ A` with zero product.
    pub fn dual_numbers_extension(a: &Arc<Algebra>) -> SplitAlgebra {
        let mut reg = Bimodule::regular(a);
        let labels: Vec<String> = a.labels().iter().map(|l| format!("{l}ε")).collect();
        reg = Bimodule::from_unchecked(
            a.clone(),
            a.clone(),
            labels,
            reg.left_action().to_vec(),
            reg.right_action().to_vec(),
        );
        SplitAlgebra::new(a.clone(), reg, None).expect("dual numbers extension is valid")
    }

    /// The triangular matrix algebra `[[A, 0], [M, B]]` as `(A × B) ⊕ M`, for a
    /// `(B, A)`-bimodule `M`, with `(a, b) m = b m` and `m (a, b) = m a`.
    pub fn triangular(a: &Arc<Algebra>, b: &Arc<Algebra>, m: &Bimodule) -> Result<SplitAlgebra> {
        if **m.left() != **b || **m.right() != **a {
            return Err(Error::AlgebraMismatch("triangular: M must be a (B, A)-bimodule".into()));
        }
        let ab = Arc::new(a.direct_product(b)?);
        let (da, db) = (a.dim(), b.dim());
        let left_action = (0..da + db)
            .map(|l| {
                (0..m.dim())
                    .map(|x| if l < da { SparseVec::new() } else { m.left_basis(l - da, x).clone() })
                    .collect()
            })
            .collect();
        let right_action = (0..m.dim())
            .map(|x| {
                (0..da + db)
                    .map(|l| if l < da { m.right_basis(x, l).clone() } else { SparseVec::new() })
                    .collect()
            })
            .collect();
        let ext = Bimodule::new(ab.clone(), ab.clone(), m.labels().to_vec(), left_action, right_action)?;
        SplitAlgebra::new(ab, ext, None)
    }

    /// `[[A, 0], [M, k]]` for a right `A`-module `M` (a `(k, A)`-bimodule).
    pub fn one_point_extension(a: &Arc<Algebra>, m: &Bimodule) -> Result<SplitAlgebra> {
        Self::triangular(a, m.left(), m)
    }

    /// The simple right `A`-module at vertex `v` as a `(k, A)`-bimodule. Needs
    /// idempotents that are basis elements.
    pub fn simple_right(a: &Arc<Algebra>, v: usize) -> Result<Bimodule> {
        let f = a.field();
        let e = a
            .idempotents()
            .and_then(|es| es.get(v))
            .ok_or_else(|| Error::Precondition("no idempotent at that vertex".into()))?;
        let slot = match e.entries() {
            [(i, c)] if c.is_one() => *i,
            _ => return Err(Error::Precondition("vertex idempotent is not a basis element".into())),
        };
        let k = Arc::new(Algebra::ground(f));
        let right = vec![(0..a.dim()).map(|l| if l == slot { SparseVec::unit(0) } else { SparseVec::new() }).collect()];
        Bimodule::new(k, a.clone(), vec![format!("S{v}")], vec![vec![SparseVec::unit(0)]], right)
    }

    /// `A ⊕ ^f A` with zero product.
    pub fn twisted(a: &Arc<Algebra>, f: &Matrix) -> Result<SplitAlgebra> {
        SplitAlgebra::new(a.clone(), Bimodule::twisted(a, f)?, None)
    }

    /// `k[x]/(x^n)` split as `k ⊕ (x)`; the ideal has a nonzero product for `n ≥ 3`.
    pub fn truncated_polynomial(field: Field, n: usize) -> SplitAlgebra {
        assert!(n >= 2);
        let k = Arc::new(Algebra::ground(field));
        let dim = n - 1;
        let scalar = |m: usize| SparseVec::unit(m);
        let left_action = vec![(0..dim).map(scalar).collect()];
        let right_action = (0..dim).map(|m| vec![scalar(m)]).collect();
        let labels = (1..n).map(|i| if i == 1 { "x".to_string() } else { format!("x^{i}") }).collect();
        let ideal = Bimodule::from_unchecked(k.clone(), k.clone(), labels, left_action, right_action);
        // x^i · x^j = x^{i+j}, basis index i-1
        let product = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i + j + 2 < n { SparseVec::unit(i + j + 1) } else { SparseVec::new() })
                    .collect()
            })
            .collect();
        SplitAlgebra::new(k, ideal, Some(product)).expect("truncated polynomial split is valid")
    }
}

/// `0 → M → Λ → Λ/M → 0` as `Λ`-bimodules.
#[derive(Clone, Debug)]
pub struct BimoduleSequence {
    pub sub: Bimodule,
    pub middle: Bimodule,
    pub quotient: Bimodule,
    /// `M → Λ`.
    pub inclusion: Matrix,
    /// `Λ → Λ/M`.
    pub projection: Matrix,
}

impl BimoduleSequence {
    fn check(&self) -> Result<()> {
        is_bimodule_map(&self.sub, &self.middle, &self.inclusion)?;
        is_bimodule_map(&self.middle, &self.quotient, &self.projection)?;
        if !self.projection.compose(&self.inclusion)?.is_zero() {
            return Err(Error::Consistency("projection ∘ inclusion ≠ 0".into()));
        }
        if self.sub.dim() + self.quotient.dim() != self.middle.dim() {
            return Err(Error::Consistency("dimensions do not add up".into()));
        }
        Ok(())
    }
}

/// Verifies that `map` commutes with both actions.
pub fn is_bimodule_map(x: &Bimodule, y: &Bimodule, map: &Matrix) -> Result<()> {
    for c in 0..x.left().dim() {
        for m in 0..x.dim() {
            let cv = SparseVec::unit(c);
            if map.apply(x.left_basis(c, m)) != y.act_left(&cv, &map.column(m)) {
                return Err(Error::Consistency("map does not commute with the left action".into()));
            }
        }
    }
    for m in 0..x.dim() {
        for a in 0..x.right().dim() {
            let av = SparseVec::unit(a);
            if map.apply(x.right_basis(m, a)) != y.act_right(&map.column(m), &av) {
                return Err(Error::Consistency("map does not commute with the right action".into()));
            }
        }
    }
    Ok(())
}

/// Which factor of `A × B` an idempotent corner refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

/// For an `(A×B)`-bimodule `Y`, the corner `e Y f` (with `e, f ∈ {(1,0), (0,1)}`)
/// as a bimodule over the corresponding factors.
pub fn corner(y: &Bimodule, a: &Arc<Algebra>, b: &Arc<Algebra>, left: Factor, right: Factor) -> Result<Bimodule> {
    let f = y.field();
    let (da, db) = (a.dim(), b.dim());
    let ab = y.left();
    if ab.dim() != da + db {
        return Err(Error::AlgebraMismatch("corner: not a bimodule over A × B".into()));
    }
    let idem = |side: Factor| -> SparseVec {
        match side {
            Factor::First => a.unit().clone(),
            Factor::Second => b.unit().remap(f, |i| Some(i + da)),
        }
    };
    let (e, g) = (idem(left), idem(right));
    let vectors = (0..y.dim()).map(|m| y.act_right(&y.act_left(&e, &SparseVec::unit(m)), &g));
    let basis = crate::linalg::Subspace::span(f, y.dim(), vectors).basis().to_vec();
    let sub = y.subquotient_of(&basis)?;
    let images = |side: Factor| -> (Arc<Algebra>, Vec<SparseVec>) {
        match side {
            Factor::First => (a.clone(), (0..da).map(SparseVec::unit).collect()),
            Factor::Second => (b.clone(), (0..db).map(|i| SparseVec::unit(i + da)).collect()),
        }
    };
    let (l_alg, l_img) = images(left);
    let (r_alg, r_img) = images(right);
    let out = sub.restrict(&l_alg, &l_img, &r_alg, &r_img);
    out.check()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::linear_quiver;

    #[test]
    fn trivial_extension_of_k_is_dual_numbers() {
        let q = Field::Rationals;
        let t = SplitAlgebra::trivial_extension(&Arc::new(Algebra::ground(q)));
        assert_eq!(t.total().table(), Algebra::dual_numbers(q).table());
        assert!(t.square_zero());
    }

    #[test]
    fn trivial_extension_of_a2() {
        let t = SplitAlgebra::trivial_extension(&linear_quiver(Field::Rationals, 2).shared());
        assert_eq!(t.total().dim(), 6);
        let seq = t.ses_bimodules().unwrap();
        assert_eq!(seq.sub.dim(), 3);
        assert_eq!(seq.quotient.dim(), 3);
    }

    #[test]
    fn dual_numbers_extension_matches_tensor_product() {
        let q = Field::Rationals;
        let a = linear_quiver(q, 2).shared();
        let s = SplitAlgebra::dual_numbers_extension(&a);
        let t = a.tensor(&Algebra::dual_numbers(q)).unwrap();
        // basis a_i ⊗ 1 at 2i, a_i ⊗ ε at 2i+1 versus A then Aε
        let perm = |l: usize| if l % 2 == 0 { l / 2 } else { 3 + l / 2 };
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(
                    s.total().product(perm(i), perm(j)),
                    &t.product(i, j).remap(q, |x| Some(perm(x)))
                );
            }
        }
    }

    #[test]
    fn one_point_extension_of_a2() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let s = SplitAlgebra::simple_right(&a, 1).unwrap();
        let t = SplitAlgebra::one_point_extension(&a, &s).unwrap();
        assert_eq!(t.total().dim(), 5);
        let zero = SplitAlgebra::triangular(&a, s.left(), &Bimodule::zero(s.left(), &a)).unwrap();
        assert_eq!(zero.total().dim(), 4);
    }

    #[test]
    fn triangular_k_k_k_is_a2() {
        let q = Field::Rationals;
        let k = Arc::new(Algebra::ground(q));
        let m = Bimodule::regular(&k);
        let t = SplitAlgebra::triangular(&k, &k, &m).unwrap();
        assert_eq!(t.total().dim(), 3);
        assert_eq!(t.total().center().dim(), 1);
        let quotient = t.ses_bimodules().unwrap().quotient;
        // M acts by zero on both sides
        assert!(quotient.left_basis(2, 0).is_zero() && quotient.right_basis(1, 2).is_zero());
    }

    #[test]
    fn nonzero_product_split() {
        let s = SplitAlgebra::truncated_polynomial(Field::Rationals, 3);
        assert!(!s.square_zero());
        assert_eq!(s.total().table(), Algebra::truncated_polynomial(Field::Rationals, 3).table());
    }

    #[test]
    fn unbalanced_product_rejected() {
        let q = Field::Rationals;
        let a = Algebra::dual_numbers(q).shared();
        let f = Matrix::from_int_rows(q, &[vec![1, 0], vec![0, -1]]);
        let m = Bimodule::twisted(&a, &f).unwrap();
        // naive product m_i m_j = b_i b_j
        let product = (0..2).map(|i| (0..2).map(|j| a.product(i, j).clone()).collect()).collect();
        assert!(SplitAlgebra::new(a, m, Some(product)).is_err());
    }
}
