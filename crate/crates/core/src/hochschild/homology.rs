//! Hochschild homology `H_*(A, N)` from the chains `N ⊗ A^{⊗n}`.
//!
//! Chain index is `word·dim N + x`, matching the cochain convention.

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::Result;
use crate::field::Scalar;
use crate::linalg::{Matrix, SparseVec};

use super::cochains::{check_coefficients, digits, pow, sign, word_index};
use super::complex::ChainComplex;

/// `b_n : N ⊗ A^{⊗n} → N ⊗ A^{⊗n−1}` for `n ≥ 1`.
pub fn hochschild_boundary(alg: &Algebra, n_mod: &Bimodule, n: usize) -> Matrix {
    let f = alg.field();
    let l = alg.dim();
    let dn = n_mod.dim();
    let mut cols = Vec::with_capacity(pow(l, n) * dn);
    for word in 0..pow(l, n) {
        let a = digits(word, l, n);
        for xi in 0..dn {
            let mut pairs: Vec<(usize, Scalar)> = Vec::new();
            // (x a_1, a_2, …)
            let rest = word_index(&a[1..], l);
            for (y, c) in n_mod.right_basis(xi, a[0]).iter() {
                pairs.push((rest * dn + y, c.clone()));
            }
            // (−1)^i (x, …, a_i a_{i+1}, …)
            for i in 1..n {
                let s = f.from_int(sign(i));
                for (k, c) in alg.product(a[i - 1], a[i]).iter() {
                    let mut w = a[..i - 1].to_vec();
                    w.push(*k);
                    w.extend_from_slice(&a[i + 1..]);
                    pairs.push((word_index(&w, l) * dn + xi, f.mul(&s, c)));
                }
            }
            // (−1)^n (a_n x, a_1, …, a_{n−1})
            let s = f.from_int(sign(n));
            let front = word_index(&a[..n - 1], l);
            for (y, c) in n_mod.left_basis(a[n - 1], xi).iter() {
                pairs.push((front * dn + y, f.mul(&s, c)));
            }
            cols.push(SparseVec::from_pairs(f, pairs));
        }
    }
    Matrix::from_columns(f, pow(l, n - 1) * dn, cols)
}

/// The Hochschild chain complex through `C_{N+1}`.
pub fn hochschild_chain_complex(alg: &Algebra, n_mod: &Bimodule, max_degree: usize) -> Result<ChainComplex> {
    check_coefficients(alg, n_mod)?;
    let dims = (0..=max_degree + 1).map(|n| pow(alg.dim(), n) * n_mod.dim()).collect();
    let bs = (1..=max_degree + 1).map(|n| hochschild_boundary(alg, n_mod, n)).collect();
    ChainComplex::new(dims, bs)
}

/// `dim H_n(A, N)` for `n ≤ N`.
pub fn hochschild_homology_dims(alg: &Algebra, n_mod: &Bimodule, max_degree: usize) -> Result<Vec<usize>> {
    Ok(hochschild_chain_complex(alg, n_mod, max_degree)?.homology_dims())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hochschild::hochschild_complex;
    use crate::quiver::linear_quiver;

    #[test]
    fn a2_homology() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let c = hochschild_chain_complex(&a, &Bimodule::regular(&a), 2).unwrap();
        c.check_b_squared().unwrap();
        assert_eq!(c.homology_dims(), vec![2, 0, 0]);
    }

    #[test]
    fn dual_numbers_h1() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        assert_eq!(hochschild_homology_dims(&a, &Bimodule::regular(&a), 2).unwrap()[1], 1);
    }

    #[test]
    fn duality_with_cohomology() {
        for a in [
            Algebra::truncated_polynomial(Field::Rationals, 3),
            linear_quiver(Field::Rationals, 3),
            Algebra::dual_numbers(Field::prime(2).unwrap()),
        ] {
            let a = a.shared();
            let n = Bimodule::regular(&a);
            let h = hochschild_homology_dims(&a, &n, 2).unwrap();
            let hc = hochschild_complex(&a, &n.dual(), 2).unwrap().cohomology_dims();
            assert_eq!(h, hc);
        }
    }
}
