//! Complete sets of orthogonal idempotents and the one-way condition.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{SparseVec, Subspace};

#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    idempotents: Vec<SparseVec>,
}

/// Outcome of [`IdempotentSystem::is_one_way`]; `violation` names the failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneWayCertificate {
    pub holds: bool,
    pub violation: Option<String>,
}

impl IdempotentSystem {
    pub fn new(algebra: &Algebra, idempotents: Vec<SparseVec>) -> Result<Self> {
        Self::check(algebra, &idempotents)?;
        Ok(IdempotentSystem { idempotents })
    }

    /// The system attached to `algebra` (vertex idempotents for quiver algebras),
    /// or `{1}` if none was attached.
    pub fn of(algebra: &Algebra) -> Self {
        IdempotentSystem {
            idempotents: algebra
                .idempotents()
                .map(|s| s.to_vec())
                .unwrap_or_else(|| vec![algebra.unit().clone()]),
        }
    }

    pub fn idempotents(&self) -> &[SparseVec] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// `e² = e`, `e f = 0` for `e ≠ f`, `Σ e = 1`.
    pub fn check(algebra: &Algebra, idempotents: &[SparseVec]) -> Result<()> {
        let f = algebra.field();
        let mut sum = SparseVec::new();
        for (i, e) in idempotents.iter().enumerate() {
            if e.max_index().map_or(false, |m| m >= algebra.dim()) {
                return Err(Error::DimensionMismatch(format!("idempotent {i} has wrong length")));
            }
            for (j, g) in idempotents.iter().enumerate() {
                let prod = algebra.mul(e, g);
                let expected = if i == j { e.clone() } else { SparseVec::new() };
                if prod != expected {
                    return Err(Error::AlgebraAxiom(format!(
                        "idempotents {i},{j} are not orthogonal idempotents"
                    )));
                }
            }
            sum = sum.add(f, e);
        }
        if &sum != algebra.unit() {
            return Err(Error::AlgebraAxiom("idempotents do not sum to 1".into()));
        }
        Ok(())
    }

    /// The subspace `e A g`.
    pub fn corner(&self, algebra: &Algebra, i: usize, j: usize) -> Subspace {
        let (e, g) = (&self.idempotents[i], &self.idempotents[j]);
        let vectors = (0..algebra.dim())
            .map(|b| algebra.mul(&algebra.mul(e, &SparseVec::unit(b)), g));
        Subspace::span(algebra.field(), algebra.dim(), vectors)
    }

    pub fn is_one_way(&self, algebra: &Algebra) -> OneWayCertificate {
        let n = self.len();
        let fail = |msg: String| OneWayCertificate {
            holds: false,
            violation: Some(msg),
        };
        let dims: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| self.corner(algebra, i, j).dim()).collect())
            .collect();
        for i in 0..n {
            for j in (i + 1)..n {
                if dims[i][j] != 0 && dims[j][i] != 0 {
                    return fail(format!(
                        "condition 1: e{i}Ae{j} and e{j}Ae{i} are both nonzero"
                    ));
                }
            }
        }
        for (i, row) in dims.iter().enumerate() {
            if row[i] != 1 {
                return fail(format!("condition 2: dim e{i}Ae{i} = {} ≠ 1", row[i]));
            }
        }
        if n < 2 {
            return fail("condition 3: the system has a single idempotent (A = k)".into());
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (dims[i][j] != 0 || dims[j][i] != 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return fail("condition 3: the idempotent graph is disconnected".into());
        }
        OneWayCertificate {
            holds: true,
            violation: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::quiver::{kronecker, linear_quiver};

    #[test]
    fn a2_is_one_way() {
        let a = linear_quiver(Field::Rationals, 2);
        let s = IdempotentSystem::of(&a);
        assert!(s.is_one_way(&a).holds);
        assert!(IdempotentSystem::of(&kronecker(Field::Rationals))
            .is_one_way(&kronecker(Field::Rationals))
            .holds);
    }

    #[test]
    fn ground_field_fails_condition_three() {
        let k = Algebra::ground(Field::Rationals);
        let cert = IdempotentSystem::of(&k).is_one_way(&k);
        assert!(!cert.holds);
        assert!(cert.violation.unwrap().starts_with("condition 3"));
    }

    #[test]
    fn matrix_algebra_fails_condition_one() {
        let m = Algebra::full_matrix(Field::Rationals, 2);
        let cert = IdempotentSystem::of(&m).is_one_way(&m);
        assert!(cert.violation.unwrap().starts_with("condition 1"));
    }

    #[test]
    fn bad_system_rejected() {
        let m = Algebra::full_matrix(Field::Rationals, 2);
        let only_one = vec![m.idempotents().unwrap()[0].clone()];
        assert!(IdempotentSystem::check(&m, &only_one).is_err());
    }
}
