use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};

/// A finite-dimensional left module; `action[r][m] = b_r · m`.
#[derive(Clone, Debug)]
pub struct LeftModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Vec<SparseVec>>,
}

impl LeftModule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Vec<SparseVec>>) -> Result<Self> {
        if action.len() != algebra.dim() || action.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("module action shape".into()));
        }
        let m = LeftModule { algebra, dim, action };
        m.check()?;
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn act_basis(&self, r: usize, m: usize) -> &SparseVec {
        &self.action[r][m]
    }

    /// `Σ r_i b_i · v`.
    pub fn act(&self, r: &SparseVec, v: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut pairs = Vec::new();
        for (i, s) in r.iter() {
            for (j, t) in v.iter() {
                let st = f.mul(s, t);
                for (k, c) in self.action[*i][*j].iter() {
                    pairs.push((*k, f.mul(&st, c)));
                }
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    /// Matrix of `m ↦ b_r · m`.
    pub fn action_matrix(&self, r: usize) -> Matrix {
        Matrix::from_columns(self.field(), self.dim, self.action[r].clone())
    }

    pub fn check(&self) -> Result<()> {
        let alg = &self.algebra;
        for m in 0..self.dim {
            let mv = SparseVec::unit(m);
            if self.act(alg.unit(), &mv) != mv {
                return Err(Error::BimoduleAxiom("unit does not act as identity".into()));
            }
            for r in 0..alg.dim() {
                for s in 0..alg.dim() {
                    let lhs = self.act(alg.product(r, s), &mv);
                    let rhs = self.act(&SparseVec::unit(r), &self.action[s][m]);
                    if lhs != rhs {
                        return Err(Error::BimoduleAxiom("module action is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// The regular left module.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        LeftModule {
            algebra: algebra.clone(),
            dim: algebra.dim(),
            action: algebra.table().to_vec(),
        }
    }

    /// A bimodule restricted to its left action.
    pub fn left_of(x: &Bimodule) -> Self {
        LeftModule {
            algebra: x.left().clone(),
            dim: x.dim(),
            action: x.left_action().to_vec(),
        }
    }

    /// A bimodule's right action as a left module over the opposite algebra.
    pub fn right_of(x: &Bimodule) -> Self {
        let op = Arc::new(x.right().opposite());
        let action = (0..op.dim())
            .map(|a| (0..x.dim()).map(|m| x.right_basis(m, a).clone()).collect())
            .collect();
        LeftModule {
            algebra: op,
            dim: x.dim(),
            action,
        }
    }

    /// A `(B, A)`-bimodule as a left module over `B ⊗ A^op`:
    /// `(b ⊗ a) · x = b x a`.
    pub fn from_bimodule(x: &Bimodule) -> Result<Self> {
        let env = Arc::new(enveloping(x.left(), x.right())?);
        Self::over_enveloping(env, x)
    }

    /// As [`LeftModule::from_bimodule`] with a prebuilt enveloping algebra.
    pub fn over_enveloping(env: Arc<Algebra>, x: &Bimodule) -> Result<Self> {
        let f = x.field();
        let da = x.right().dim();
        if env.dim() != x.left().dim() * da {
            return Err(Error::DimensionMismatch("enveloping algebra does not match".into()));
        }
        let action = (0..env.dim())
            .map(|r| {
                let (b, a) = (r / da, r % da);
                (0..x.dim())
                    .map(|m| {
                        let bm = x.left_basis(b, m);
                        let mut acc = SparseVec::new();
                        for (k, c) in bm.iter() {
                            acc = acc.add_scaled(f, c, x.right_basis(*k, a));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(LeftModule {
            algebra: env,
            dim: x.dim(),
            action,
        })
    }
}

/// `B ⊗ A^op`, basis `b_i ⊗ a_j` at `i·dim A + j`.
pub fn enveloping(b: &Algebra, a: &Algebra) -> Result<Algebra> {
    b.tensor(&a.opposite())
}

/// `A ⊗ A^op`.
pub fn enveloping_algebra(a: &Algebra) -> Algebra {
    enveloping(a, a).expect("same field")
}

/// Turns a module over `B ⊗ A^op` back into a `(B, A)`-bimodule.
pub fn to_bimodule(module: &LeftModule, b: &Arc<Algebra>, a: &Arc<Algebra>) -> Result<Bimodule> {
    let da = a.dim();
    let f = module.field();
    if module.algebra().dim() != b.dim() * da {
        return Err(Error::DimensionMismatch("module is not over B ⊗ A^op".into()));
    }
    let pure = |bv: &SparseVec, av: &SparseVec| {
        let mut pairs = Vec::new();
        for (i, s) in bv.iter() {
            for (j, t) in av.iter() {
                pairs.push((i * da + j, f.mul(s, t)));
            }
        }
        SparseVec::from_pairs(f, pairs)
    };
    let left_action = (0..b.dim())
        .map(|i| {
            let r = pure(&SparseVec::unit(i), a.unit());
            (0..module.dim()).map(|m| module.act(&r, &SparseVec::unit(m))).collect()
        })
        .collect();
    let right_action = (0..module.dim())
        .map(|m| {
            (0..da)
                .map(|j| module.act(&pure(b.unit(), &SparseVec::unit(j)), &SparseVec::unit(m)))
                .collect()
        })
        .collect();
    let labels = (0..module.dim()).map(|m| format!("x{m}")).collect();
    Bimodule::new(b.clone(), a.clone(), labels, left_action, right_action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::linear_quiver;

    #[test]
    fn enveloping_dims() {
        assert_eq!(enveloping_algebra(&Algebra::ground(Field::Rationals)).dim(), 1);
        let a2 = linear_quiver(Field::Rationals, 2);
        let env = enveloping_algebra(&a2);
        assert_eq!(env.dim(), 9);
        env.check_associative().unwrap();
    }

    #[test]
    fn regular_bimodule_round_trip() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let x = Bimodule::regular(&a);
        let m = LeftModule::from_bimodule(&x).unwrap();
        m.check().unwrap();
        let back = to_bimodule(&m, &a, &a).unwrap();
        assert_eq!(back.left_action(), x.left_action());
        assert_eq!(back.right_action(), x.right_action());
    }

    #[test]
    fn right_module_over_opposite() {
        let a = Algebra::truncated_polynomial(Field::Rationals, 3).shared();
        LeftModule::right_of(&Bimodule::regular(&a).dual()).check().unwrap();
    }
}
