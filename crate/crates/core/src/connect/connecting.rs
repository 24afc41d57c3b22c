//! The connecting map of `0 → M → Λ → Λ/M → 0` on Hochschild cohomology.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hochschild::{apply_coboundary, BigradedComplex};
use crate::linalg::{Echelon, SparseVec};
use crate::split::SplitAlgebra;

use super::cup::{cup, Pairing};

/// Re-indexes the coefficient part of a cochain: `word·dx + x ↦ word·dy + map(x)`.
pub fn push_coefficients(
    field: Field,
    v: &SparseVec,
    dx: usize,
    dy: usize,
    map: impl Fn(usize) -> Option<usize>,
) -> SparseVec {
    v.remap(field, |i| map(i % dx).map(|y| (i / dx) * dy + y))
}

/// `1_M`: the projection `Λ → M` as an `M`-valued 1-cochain.
pub fn identity_cocycle(lambda: &SplitAlgebra) -> SparseVec {
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    let f = lambda.field();
    SparseVec::from_pairs(f, (0..dm).map(|m| ((da + m) * dm + m, f.one())).collect())
}

/// `Λ/M`-valued cochain to `Λ`-valued via the section `A → Λ`.
pub fn lift(lambda: &SplitAlgebra, phi: &SparseVec) -> SparseVec {
    let da = lambda.dim_a();
    push_coefficients(lambda.field(), phi, da, da + lambda.dim_m(), Some)
}

/// `M`-valued cochain to `Λ`-valued.
pub fn include(lambda: &SplitAlgebra, v: &SparseVec) -> SparseVec {
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    push_coefficients(lambda.field(), v, dm, da + dm, |m| Some(da + m))
}

/// `Λ`-valued cochain to `Λ/M`-valued.
pub fn project(lambda: &SplitAlgebra, v: &SparseVec) -> SparseVec {
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    push_coefficients(lambda.field(), v, da + dm, da, |l| (l < da).then_some(l))
}

/// `δφ` by lifting, applying `d` in the complex of `Λ`, and reading off the
/// `M`-components. Errors if any `A`-component survives.
pub fn connecting_via_snake(lambda: &SplitAlgebra, n: usize, phi: &SparseVec) -> Result<SparseVec> {
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    let dl = da + dm;
    let total = lambda.total();
    let d = apply_coboundary(total, &lambda.regular(), n, &lift(lambda, phi));
    if d.iter().any(|(i, _)| i % dl < da) {
        return Err(Error::Consistency("lifted coboundary has components outside M".into()));
    }
    Ok(push_coefficients(lambda.field(), &d, dl, dm, |l| Some(l - da)))
}

/// `m ⊗ a ↦ m·a` and `a ⊗ m ↦ a·m` (`M ⊗ Λ/M → M` and `Λ/M ⊗ M → M`).
pub fn boundary_pairings(lambda: &SplitAlgebra) -> (Pairing, Pairing) {
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    let ideal = lambda.ideal();
    let f = lambda.field();
    let right = Pairing::from_fn(f, dm, da, dm, |m, a| ideal.right_basis(m, a).clone());
    let left = Pairing::from_fn(f, da, dm, dm, |a, m| ideal.left_basis(a, m).clone());
    (right, left)
}

/// `1_M ⌣ φ + (−1)^{n+1} φ ⌣ 1_M` for a `Λ/M`-valued cochain of degree `n`.
pub fn connecting_via_cup(lambda: &SplitAlgebra, n: usize, phi: &SparseVec) -> Result<SparseVec> {
    if !lambda.square_zero() {
        return Err(Error::Precondition("cup formula needs M² = 0".into()));
    }
    let f = lambda.field();
    let letters = lambda.total().dim();
    let one = identity_cocycle(lambda);
    let (right, left) = boundary_pairings(lambda);
    let first = cup(letters, &one, n, phi, &right);
    let second = cup(letters, phi, 1, &one, &left);
    let s = f.from_int(if n % 2 == 0 { -1 } else { 1 });
    Ok(first.add_scaled(f, &s, &second))
}

/// One block of `δ^n` between column cohomologies.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Block {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub rank: usize,
}

/// `δ^n` split along `H^q(C^p(Λ/M)) → H^{q'}(C^{p'}(M))`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BidegreeBlocks {
    pub degree: usize,
    pub blocks: Vec<Block>,
}

impl BidegreeBlocks {
    /// Blocks that are not of bidegree `(1, 0)` and do not vanish.
    pub fn off_bidegree(&self) -> Vec<&Block> {
        self.blocks
            .iter()
            .filter(|b| b.rank > 0 && b.to != (b.from.0 + 1, b.from.1))
            .collect()
    }

    pub fn diagonal(&self) -> Vec<&Block> {
        self.blocks
            .iter()
            .filter(|b| b.to == (b.from.0 + 1, b.from.1))
            .collect()
    }
}

/// Boundaries `im d_v` into spot `(p, q)` of a column.
pub fn column_boundaries(bc: &BigradedComplex, p: usize, q: usize) -> Echelon {
    let mut e = Echelon::new(bc.field());
    if q > 0 {
        let dv = bc.dv(p, q - 1);
        for j in 0..dv.cols() {
            e.insert(&dv.column(j));
        }
    }
    e
}

/// Block decomposition of `δ^n` from bigraded complexes of `Λ/M` and `M`
/// built through degree `n` at least.
pub fn bidegree_blocks(
    lambda: &SplitAlgebra,
    quot: &BigradedComplex,
    sub: &BigradedComplex,
    n: usize,
) -> Result<BidegreeBlocks> {
    if !lambda.square_zero() {
        return Err(Error::Precondition("bidegree split needs M² = 0".into()));
    }
    let mut blocks = Vec::new();
    let targets: Vec<Echelon> = (0..=n + 1).map(|p| column_boundaries(sub, p, n + 1 - p)).collect();
    for p in 0..=n {
        let q = n - p;
        let basis = quot.column_complex(p)?.cohomology_basis(q);
        let mut images = vec![Vec::new(); n + 2];
        for rep in basis.reps() {
            let total = quot.embed(p, q, rep);
            let d = connecting_via_snake(lambda, n, &total)?;
            for (pp, part) in sub.split_cochain(n + 1, &d).into_iter().enumerate() {
                images[pp].push(part);
            }
        }
        for (pp, imgs) in images.iter().enumerate() {
            blocks.push(Block {
                from: (p, q),
                to: (pp, n + 1 - pp),
                rank: targets[pp].rank_extension(imgs.iter()),
            });
        }
    }
    Ok(BidegreeBlocks { degree: n, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::hochschild::{decompose_bigraded, hochschild_complex};
    use crate::quiver::linear_quiver;

    #[test]
    fn identity_is_nonzero_cocycle() {
        let t = SplitAlgebra::trivial_extension(&Algebra::ground(Field::Rationals).shared());
        let m = t.ideal_bimodule();
        let c = hochschild_complex(t.total(), &m, 1).unwrap();
        let one = identity_cocycle(&t);
        let h1 = c.cohomology_basis(1);
        assert!(h1.is_cocycle(&one));
        assert!(!h1.is_coboundary(&one));
    }

    #[test]
    fn snake_equals_cup_on_t_a2() {
        let t = SplitAlgebra::trivial_extension(&linear_quiver(Field::Rationals, 2).shared());
        let q = hochschild_complex(t.total(), &t.quotient_bimodule(), 2).unwrap();
        for n in 0..=2 {
            for z in q.cohomology_basis(n).reps() {
                assert_eq!(connecting_via_snake(&t, n, z).unwrap(), connecting_via_cup(&t, n, z).unwrap());
            }
        }
    }

    #[test]
    fn blocks_of_dual_numbers() {
        let t = SplitAlgebra::trivial_extension(&Algebra::ground(Field::Rationals).shared());
        let quot = decompose_bigraded(&t, &t.quotient_bimodule(), 2).unwrap();
        let sub = decompose_bigraded(&t, &t.ideal_bimodule(), 2).unwrap();
        for n in 0..=2 {
            let b = bidegree_blocks(&t, &quot, &sub, n).unwrap();
            assert!(b.off_bidegree().is_empty());
        }
    }
}
