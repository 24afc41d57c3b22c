//! Explicit formulas for the connecting map of a trivial extension `TA`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bimodule::{hom_bimodule, Bimodule};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hochschild::{apply_coboundary, digits, pow, word_index};
use crate::linalg::{Matrix, SparseVec};
use crate::split::SplitAlgebra;

use super::connecting::connecting_via_cup;

/// Number of `M` letters in a word of `Λ`.
fn m_count(lambda: &SplitAlgebra, word: usize, n: usize) -> usize {
    let l = lambda.total().dim();
    digits(word, l, n).into_iter().filter(|&x| x >= lambda.dim_a()).count()
}

/// The part of a degree-`n` cochain supported on words with `p` letters in `M`.
pub fn spot_part(lambda: &SplitAlgebra, n: usize, dx: usize, v: &SparseVec, p: usize) -> SparseVec {
    SparseVec::from_pairs(
        lambda.field(),
        v.iter()
            .filter(|(i, _)| m_count(lambda, i / dx, n) == p)
            .cloned()
            .collect(),
    )
}

/// An `A`-valued cochain on `A^{⊗q}` as a `Λ/M`-valued cochain on `Λ^{⊗q}`.
pub fn base_cochain(lambda: &SplitAlgebra, q: usize, phi: &SparseVec) -> SparseVec {
    let (da, l) = (lambda.dim_a(), lambda.total().dim());
    phi.remap(lambda.field(), |i| {
        let w = digits(i / da, da, q);
        Some(word_index(&w, l) * da + i % da)
    })
}

fn check_trivial_extension(lambda: &SplitAlgebra) -> Result<()> {
    if !lambda.square_zero() || lambda.dim_a() != lambda.dim_m() {
        return Err(Error::Precondition("expected a trivial extension".into()));
    }
    Ok(())
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ε(n, q)`: `−1` for odd `n`, `(−1)^{q+1}` for even `n`.
pub fn epsilon(n: usize, q: usize) -> i64 {
    if n % 2 == 1 {
        -1
    } else {
        sign(q + 1)
    }
}

/// `φ'(a_1…a_n, f, b_1…b_m)(x) = ε(n,q) f(φ(b_1…b_m, x, a_1…a_n))` for an
/// `A`-valued `q`-cochain `φ` on `A` (with `M = DA` in the dual basis).
pub fn nullhomotopy_delta0q(lambda: &SplitAlgebra, q: usize, phi: &SparseVec) -> Result<SparseVec> {
    check_trivial_extension(lambda)?;
    if q == 0 {
        return Err(Error::Precondition("nullhomotopy needs q ≥ 1".into()));
    }
    let f = lambda.field();
    let (da, dm, l) = (lambda.dim_a(), lambda.dim_m(), lambda.total().dim());
    let values: HashMap<usize, Scalar> = phi.iter().cloned().collect();
    let mut pairs = Vec::new();
    for n in 0..q {
        let m = q - 1 - n;
        let e = f.from_int(epsilon(n, q));
        for aw in 0..pow(da, n) {
            let a = digits(aw, da, n);
            for bw in 0..pow(da, m) {
                let b = digits(bw, da, m);
                for j in 0..dm {
                    let mut word = a.clone();
                    word.push(da + j);
                    word.extend_from_slice(&b);
                    let out = word_index(&word, l);
                    for x in 0..da {
                        let mut inner = b.clone();
                        inner.push(x);
                        inner.extend_from_slice(&a);
                        let key = word_index(&inner, da) * da + j;
                        if let Some(c) = values.get(&key) {
                            pairs.push((out * dm + x, f.mul(&e, c)));
                        }
                    }
                }
            }
        }
    }
    Ok(SparseVec::from_pairs(f, pairs))
}

/// `d_v φ' = δ^{0,q} φ` as cochains.
pub fn check_nullhomotopy(lambda: &SplitAlgebra, q: usize, phi: &SparseVec) -> Result<bool> {
    let prime = nullhomotopy_delta0q(lambda, q, phi)?;
    let dm = lambda.dim_m();
    let d = apply_coboundary(lambda.total(), &lambda.ideal_bimodule(), q, &prime);
    let dv = spot_part(lambda, q + 1, dm, &d, 1);
    let delta = connecting_via_cup(lambda, q, &base_cochain(lambda, q, phi))?;
    Ok(dv == delta)
}

/// Value of an element of `DA` at `1`.
fn at_one(lambda: &SplitAlgebra, h: &[(usize, Scalar)]) -> Scalar {
    let f = lambda.field();
    let unit = lambda.base().unit();
    h.iter().fold(f.zero(), |acc, (x, c)| f.add(&acc, &f.mul(c, &unit.get(*x))))
}

/// Evaluates an `M`-valued cochain of degree `k` on all `M`-words, at `1`.
fn forms_at_one(lambda: &SplitAlgebra, k: usize, v: &SparseVec) -> Vec<Scalar> {
    let (da, dm, l) = (lambda.dim_a(), lambda.dim_m(), lambda.total().dim());
    let mut grouped: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
    for (i, c) in v.iter() {
        grouped.entry(i / dm).or_default().push((i % dm, c.clone()));
    }
    (0..pow(dm, k))
        .map(|w| {
            let word: Vec<usize> = digits(w, dm, k).into_iter().map(|j| da + j).collect();
            grouped
                .get(&word_index(&word, l))
                .map_or(lambda.field().zero(), |h| at_one(lambda, h))
        })
        .collect()
}

/// `δ^{1,0}` on `Hom_{A-A}(DA, A)` through `β(f, g) = g(φ(f))`.
#[derive(Clone, Debug, Serialize)]
pub struct Delta10Report {
    pub hom_dim: usize,
    /// `dim ker(β ↦ β + β^t)`.
    pub alt_dim: usize,
    /// `dim ker δ^{1,0}` from the cup formula.
    pub kernel_dim: usize,
    /// `(δ^{1,0}φ)(f, g)(1) = β(f,g) + β(g,f)` for every basis `φ`.
    pub identity_holds: bool,
}

pub fn delta10_bilinear(lambda: &SplitAlgebra) -> Result<Delta10Report> {
    check_trivial_extension(lambda)?;
    let f = lambda.field();
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    let hom = hom_bimodule(lambda.ideal(), &Bimodule::regular(lambda.base()))?;
    let mut sym_cols = Vec::new();
    let mut delta_cols = Vec::new();
    let mut identity_holds = true;
    for phi in hom.basis() {
        // β(f_i, f_j) = [φ(f_i)]_j sits at i·dA + j, as does φ itself
        let sym: Vec<Scalar> = (0..dm * dm)
            .map(|k| f.add(&phi.get(k), &phi.get((k % da) * da + k / da)))
            .collect();
        let total = phi.remap(f, |i| Some((da + i / da) * da + i % da));
        let delta = connecting_via_cup(lambda, 1, &total)?;
        identity_holds &= forms_at_one(lambda, 2, &delta) == sym;
        sym_cols.push(SparseVec::from_dense(&sym));
        delta_cols.push(delta);
    }
    let l = lambda.total().dim();
    let hom_dim = hom.dim();
    let alt_dim = hom_dim - Matrix::from_columns(f, dm * dm, sym_cols).rank();
    let kernel_dim = hom_dim - Matrix::from_columns(f, l * l * dm, delta_cols).rank();
    Ok(Delta10Report {
        hom_dim,
        alt_dim,
        kernel_dim,
        identity_holds,
    })
}

/// `(tψ + (−1)^{p+1}ψ, δ^{p,0}φ at 1)` as forms on `DA^{p+1}`, where
/// `ψ(f_1…f_{p+1}) = f_{p+1}(φ(f_1…f_p))` and `φ` is a `Λ/M`-valued cochain
/// supported on `M`-words of length `p`.
pub fn cyclic_delta_p0(lambda: &SplitAlgebra, p: usize, phi: &SparseVec) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    check_trivial_extension(lambda)?;
    let f = lambda.field();
    let (da, dm, l) = (lambda.dim_a(), lambda.dim_m(), lambda.total().dim());
    let psi = |w: &[usize]| -> Scalar {
        let (head, last) = w.split_at(p);
        let word: Vec<usize> = head.iter().map(|j| da + j).collect();
        phi.get(word_index(&word, l) * da + last[0])
    };
    let sp = f.from_int(sign(p + 1));
    let expected = (0..pow(dm, p + 1))
        .map(|w| {
            let fs = digits(w, dm, p + 1);
            let mut rotated = fs[1..].to_vec();
            rotated.push(fs[0]);
            f.add(&psi(&rotated), &f.mul(&sp, &psi(&fs)))
        })
        .collect();
    let actual = forms_at_one(lambda, p + 1, &connecting_via_cup(lambda, p, phi)?);
    Ok((expected, actual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::Field;
    use crate::hochschild::coboundary_matrix;
    use crate::quiver::linear_quiver;

    #[test]
    fn nullhomotopy_on_dual_numbers() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let t = SplitAlgebra::trivial_extension(&a);
        let x = Bimodule::regular(&a);
        for q in 1..=2 {
            for z in coboundary_matrix(&a, &x, q).kernel_basis() {
                assert!(check_nullhomotopy(&t, q, &z).unwrap(), "q = {q}");
            }
            assert!(nullhomotopy_delta0q(&t, q, &SparseVec::new()).unwrap().is_zero());
        }
    }

    #[test]
    fn delta10_examples() {
        let q = Field::Rationals;
        let a2 = SplitAlgebra::trivial_extension(&linear_quiver(q, 2).shared());
        let r = delta10_bilinear(&a2).unwrap();
        assert_eq!((r.hom_dim, r.alt_dim), (0, 0));
        let d = SplitAlgebra::trivial_extension(&Algebra::dual_numbers(q).shared());
        let r = delta10_bilinear(&d).unwrap();
        assert!(r.identity_holds);
        assert_eq!((r.hom_dim, r.alt_dim, r.kernel_dim), (2, 0, 0));
        let d2 = SplitAlgebra::trivial_extension(&Algebra::dual_numbers(Field::prime(2).unwrap()).shared());
        let r = delta10_bilinear(&d2).unwrap();
        assert_eq!((r.hom_dim, r.alt_dim, r.kernel_dim), (2, 2, 2));
    }
}
