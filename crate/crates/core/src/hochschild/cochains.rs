//! The standard Hochschild cochain complex `Hom_k(Λ^{⊗n}, X)`.
//!
//! A cochain of degree `n` is stored as the stacked column of its values on
//! basis words, `X`-coordinates fastest: index `word·dim X + x`. Words are
//! base-`dim Λ` numbers with the first letter most significant.

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Matrix, SparseVec};

use super::complex::CochainComplex;

pub(crate) fn pow(base: usize, n: usize) -> usize {
    base.checked_pow(n as u32).expect("word space overflows usize")
}

pub(crate) fn digits(mut word: usize, letters: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = word % letters;
        word /= letters;
    }
    out
}

pub(crate) fn word_index(digits: &[usize], letters: usize) -> usize {
    digits.iter().fold(0, |acc, d| acc * letters + d)
}

pub(crate) fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The terms of `d(e_{u,x})` where `e_{u,x}` sends the word `u` (length `n`) to
/// basis element `x` and every other word to zero. Terms are
/// `(output word, output X index, coefficient)`; repeated positions are summed
/// by the caller.
pub(crate) fn coboundary_terms(
    alg: &Algebra,
    x: &Bimodule,
    u: &[usize],
    xi: usize,
    out: &mut Vec<(usize, usize, Scalar)>,
) {
    let f = alg.field();
    let l = alg.dim();
    let n = u.len();
    let u_index = word_index(u, l);
    let top = pow(l, n);
    // b_w · f(u)
    for w in 0..l {
        for (y, c) in x.left_basis(w, xi).iter() {
            out.push((w * top + u_index, *y, c.clone()));
        }
    }
    // (−1)^i f(…, x_i x_{i+1}, …)
    for i in 1..=n {
        let letter = u[i - 1];
        let prefix = word_index(&u[..i - 1], l);
        let suffix = word_index(&u[i..], l);
        let tail = pow(l, n - i);
        let s = f.from_int(sign(i));
        for (a, b, c) in alg.factorizations(letter) {
            let w = ((prefix * l + a) * l + b) * tail + suffix;
            out.push((w, xi, f.mul(&s, c)));
        }
    }
    // (−1)^{n+1} f(u) · b_w
    let s = f.from_int(sign(n + 1));
    for w in 0..l {
        for (y, c) in x.right_basis(xi, w).iter() {
            out.push((u_index * l + w, *y, f.mul(&s, c)));
        }
    }
}

/// Matrix of `d_n : Hom(Λ^{⊗n}, X) → Hom(Λ^{⊗n+1}, X)`.
pub fn coboundary_matrix(alg: &Algebra, x: &Bimodule, n: usize) -> Matrix {
    let f = alg.field();
    let l = alg.dim();
    let dx = x.dim();
    let mut cols = Vec::with_capacity(pow(l, n) * dx);
    let mut terms = Vec::new();
    for word in 0..pow(l, n) {
        let u = digits(word, l, n);
        for xi in 0..dx {
            terms.clear();
            coboundary_terms(alg, x, &u, xi, &mut terms);
            let pairs = terms.drain(..).map(|(w, y, c)| (w * dx + y, c)).collect();
            cols.push(SparseVec::from_pairs(f, pairs));
        }
    }
    Matrix::from_columns(f, pow(l, n + 1) * dx, cols)
}

pub(crate) fn check_coefficients(alg: &Algebra, x: &Bimodule) -> Result<()> {
    if **x.left() != *alg || **x.right() != *alg {
        return Err(Error::AlgebraMismatch(
            "coefficient bimodule is not over the given algebra".into(),
        ));
    }
    Ok(())
}

/// The Hochschild complex of `alg` with coefficients in `x`, built through
/// `d_N` so that `H^0 … H^N` are available.
pub fn hochschild_complex(alg: &Algebra, x: &Bimodule, max_degree: usize) -> Result<CochainComplex> {
    check_coefficients(alg, x)?;
    let l = alg.dim();
    let dims = (0..=max_degree + 1).map(|n| pow(l, n) * x.dim()).collect();
    let diffs = (0..=max_degree).map(|n| coboundary_matrix(alg, x, n)).collect();
    CochainComplex::new(alg.field(), dims, diffs)
}

/// `d f` for a single cochain `f` of degree `n` (no matrix is formed).
pub fn apply_coboundary(alg: &Algebra, x: &Bimodule, n: usize, cochain: &SparseVec) -> SparseVec {
    let f = alg.field();
    let (l, dx) = (alg.dim(), x.dim());
    let mut pairs = Vec::new();
    let mut terms = Vec::new();
    for (idx, c) in cochain.iter() {
        let u = digits(idx / dx, l, n);
        terms.clear();
        coboundary_terms(alg, x, &u, idx % dx, &mut terms);
        for (w, y, t) in terms.drain(..) {
            pairs.push((w * dx + y, f.mul(c, &t)));
        }
    }
    SparseVec::from_pairs(f, pairs)
}

/// Default degree cap by algebra dimension.
pub fn default_degree_cap(dim: usize) -> usize {
    match dim {
        0..=4 => 4,
        5..=6 => 3,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::quiver::linear_quiver;

    fn dims_self(a: Algebra, n: usize) -> Vec<usize> {
        let a = a.shared();
        let x = Bimodule::regular(&a);
        let c = hochschild_complex(&a, &x, n).unwrap();
        c.check_d_squared().unwrap();
        c.cohomology_dims()
    }

    #[test]
    fn ground_field() {
        assert_eq!(dims_self(Algebra::ground(Field::Rationals), 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn dual_numbers_char_zero_and_two() {
        assert_eq!(dims_self(Algebra::dual_numbers(Field::Rationals), 3), vec![2, 1, 1, 1]);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(dims_self(Algebra::dual_numbers(f2), 3), vec![2, 2, 2, 2]);
    }

    #[test]
    fn a2_is_rigid() {
        assert_eq!(dims_self(linear_quiver(Field::Rationals, 2), 2), vec![1, 0, 0]);
    }

    #[test]
    fn degree_zero_differential_of_dual_numbers_vanishes() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let d0 = coboundary_matrix(&a, &Bimodule::regular(&a), 0);
        assert_eq!((d0.rows(), d0.cols()), (4, 2));
        assert_eq!(d0.rank(), 0);
    }

    #[test]
    fn inner_derivation_preimage() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let d0 = coboundary_matrix(&a, &Bimodule::regular(&a), 0);
        let target = d0.column(0);
        let pre = d0.member_of_image(&target).unwrap().unwrap();
        assert_eq!(d0.apply(&pre), target);
    }

    #[test]
    fn apply_matches_matrix() {
        let a = Algebra::truncated_polynomial(Field::Rationals, 3).shared();
        let x = Bimodule::regular(&a);
        let d2 = coboundary_matrix(&a, &x, 2);
        let v = SparseVec::from_pairs(
            Field::Rationals,
            vec![(3, Scalar::from_int(2)), (10, Scalar::from_int(-1)), (25, Scalar::one())],
        );
        assert_eq!(apply_coboundary(&a, &x, 2, &v), d2.apply(&v));
    }
}
