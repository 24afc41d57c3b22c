use crate::bimodule::{Bimodule, TensorProduct};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hochschild::pow;
use crate::linalg::{Matrix, SparseVec};

/// A bilinear map `X × Y → Z` given on basis pairs (column `x·dim Y + y`).
#[derive(Clone, Debug)]
pub struct Pairing {
    field: Field,
    dim_x: usize,
    dim_y: usize,
    dim_z: usize,
    columns: Vec<SparseVec>,
}

impl Pairing {
    pub fn from_fn(
        field: Field,
        dim_x: usize,
        dim_y: usize,
        dim_z: usize,
        pair: impl Fn(usize, usize) -> SparseVec,
    ) -> Self {
        let columns = (0..dim_x)
            .flat_map(|x| (0..dim_y).map(move |y| (x, y)))
            .map(|(x, y)| pair(x, y))
            .collect();
        Pairing {
            field,
            dim_x,
            dim_y,
            dim_z,
            columns,
        }
    }

    /// The canonical projection `X ⊗ Y → X ⊗_Λ Y`.
    pub fn tensor(t: &TensorProduct) -> Self {
        let p = &t.projection;
        Pairing {
            field: p.field(),
            dim_x: p.cols() / t.dim_y(),
            dim_y: t.dim_y(),
            dim_z: p.rows(),
            columns: p.columns(),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.dim_x, self.dim_y, self.dim_z)
    }

    pub fn pair(&self, x: usize, y: usize) -> &SparseVec {
        &self.columns[x * self.dim_y + y]
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.dim_z, self.columns.clone())
    }

    /// `μ(xλ, y) = μ(x, λy)` for all basis elements.
    pub fn check_balanced(&self, x: &Bimodule, y: &Bimodule) -> Result<()> {
        let f = self.field;
        let apply = |u: &SparseVec, v: &SparseVec| {
            let mut acc = SparseVec::new();
            for (i, s) in u.iter() {
                for (j, t) in v.iter() {
                    acc = acc.add_scaled(f, &f.mul(s, t), self.pair(*i, *j));
                }
            }
            acc
        };
        for l in 0..x.right().dim() {
            for xi in 0..self.dim_x {
                for yi in 0..self.dim_y {
                    let lhs = apply(x.right_basis(xi, l), &SparseVec::unit(yi));
                    let rhs = apply(&SparseVec::unit(xi), y.left_basis(l, yi));
                    if lhs != rhs {
                        return Err(Error::Consistency("pairing is not balanced".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `f ⌣ g` for a cochain `f` with values in `X` and a cochain `g` of degree
/// `m` with values in `Y`, composed with the pairing into `Z`.
pub fn cup(letters: usize, f: &SparseVec, m: usize, g: &SparseVec, mu: &Pairing) -> SparseVec {
    let fld = mu.field;
    let (dx, dy, dz) = mu.dims();
    let shift = pow(letters, m);
    let mut pairs = Vec::new();
    for (i, a) in f.iter() {
        let (w1, x) = (i / dx, i % dx);
        for (j, b) in g.iter() {
            let (w2, y) = (j / dy, j % dy);
            let ab = fld.mul(a, b);
            let word = w1 * shift + w2;
            for (z, c) in mu.pair(x, y).iter() {
                pairs.push((word * dz + z, fld.mul(&ab, c)));
            }
        }
    }
    SparseVec::from_pairs(fld, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::bimodule::tensor_over;
    use crate::field::Scalar;
    use crate::hochschild::apply_coboundary;
    use crate::quiver::linear_quiver;

    #[test]
    fn unit_cochain_is_neutral() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let x = Bimodule::regular(&a);
        let (_, iso) = crate::bimodule::left_unit_iso(&x).unwrap();
        let t = tensor_over(&x, &x).unwrap();
        let mu = Pairing::tensor(&t);
        let one = a.unit().clone();
        let g = SparseVec::from_pairs(
            Field::Rationals,
            vec![(1, Scalar::from_int(3)), (5, Scalar::from_int(-2)), (7, Scalar::one())],
        );
        let prod = cup(3, &one, 1, &g, &mu);
        // A ⊗_A A ≅ A: compare after the unit isomorphism
        let back: Vec<(usize, Scalar)> = (0..3)
            .flat_map(|w| {
                let slice = SparseVec::from_pairs(
                    Field::Rationals,
                    prod.iter().filter(|(i, _)| i / t.module.dim() == w).map(|(i, c)| (i % t.module.dim(), c.clone())).collect(),
                );
                iso.apply(&slice).into_entries().into_iter().map(move |(k, c)| (w * 3 + k, c))
            })
            .collect();
        assert_eq!(SparseVec::from_pairs(Field::Rationals, back), g);
    }

    #[test]
    fn leibniz_on_dual_numbers() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let x = Bimodule::regular(&a);
        let t = tensor_over(&x, &x).unwrap();
        let mu = Pairing::tensor(&t);
        mu.check_balanced(&x, &x).unwrap();
        let q = Field::Rationals;
        let f = SparseVec::from_pairs(q, vec![(0, Scalar::one()), (3, Scalar::from_int(2))]);
        let g = SparseVec::from_pairs(q, vec![(1, Scalar::from_int(-1)), (6, Scalar::one())]);
        let lhs = apply_coboundary(&a, &t.module, 3, &cup(2, &f, 2, &g, &mu));
        let rhs = cup(2, &apply_coboundary(&a, &x, 1, &f), 2, &g, &mu)
            .sub(q, &cup(2, &f, 3, &apply_coboundary(&a, &x, 2, &g), &mu));
        assert_eq!(lhs, rhs);
    }
}
