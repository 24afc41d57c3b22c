//! The double complex of a split algebra `Λ = A ⊕ M`.
//!
//! Words of length `n` over the basis of `Λ` (A letters first, then M letters)
//! split by the set of positions holding an `M` letter. The spot `(p, q)` holds
//! the words with exactly `p` such positions and `q` positions in `A`. Inside a
//! spot, words are ordered by their mask (position 0 is the most significant
//! bit), then lexicographically with `A` letters in base `dim A` and `M` letters
//! in base `dim M`.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::bimodule::{hom_bimodule, tensor_power, Bimodule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};
use crate::split::SplitAlgebra;

use super::cochains::{check_coefficients, coboundary_matrix, coboundary_terms, digits, pow, word_index};
use super::complex::CochainComplex;

/// Index bookkeeping between total words and spot-local words.
#[derive(Clone, Debug)]
pub struct WordSpace {
    dim_a: usize,
    dim_m: usize,
    // per length n: mask -> offset inside spot (popcount(mask), n - popcount)
    offsets: Vec<Vec<usize>>,
    // per length n, per p: masks in ascending order
    masks: Vec<Vec<Vec<usize>>>,
}

impl WordSpace {
    pub fn new(dim_a: usize, dim_m: usize, max_len: usize) -> Self {
        let mut offsets = Vec::with_capacity(max_len + 1);
        let mut masks = Vec::with_capacity(max_len + 1);
        for n in 0..=max_len {
            let mut off = vec![0; 1 << n];
            let mut by_p = vec![Vec::new(); n + 1];
            let mut running = vec![0usize; n + 1];
            for mask in 0..(1usize << n) {
                let p = mask.count_ones() as usize;
                off[mask] = running[p];
                running[p] += pow(dim_m, p) * pow(dim_a, n - p);
                by_p[p].push(mask);
            }
            offsets.push(off);
            masks.push(by_p);
        }
        WordSpace {
            dim_a,
            dim_m,
            offsets,
            masks,
        }
    }

    pub fn letters(&self) -> usize {
        self.dim_a + self.dim_m
    }

    pub fn max_len(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of words in spot `(p, q)`.
    pub fn spot_words(&self, p: usize, q: usize) -> usize {
        binomial(p + q, p) * pow(self.dim_m, p) * pow(self.dim_a, q)
    }

    /// `(p, index inside the spot)` of a word given by its letters.
    pub fn locate(&self, letters: &[usize]) -> (usize, usize) {
        let n = letters.len();
        let mut mask = 0usize;
        let mut local = 0usize;
        for &l in letters {
            mask <<= 1;
            if l >= self.dim_a {
                mask |= 1;
                local = local * self.dim_m + (l - self.dim_a);
            } else {
                local = local * self.dim_a + l;
            }
        }
        (mask.count_ones() as usize, self.offsets[n][mask] + local)
    }

    /// Letters of the `local`-th word of spot `(p, q)`.
    pub fn word(&self, p: usize, q: usize, local: usize) -> Vec<usize> {
        let n = p + q;
        let list = &self.masks[n][p];
        let k = list.partition_point(|&m| self.offsets[n][m] <= local) - 1;
        let mask = list[k];
        let mut rest = local - self.offsets[n][mask];
        let mut out = vec![0; n];
        for i in (0..n).rev() {
            if mask >> (n - 1 - i) & 1 == 1 {
                out[i] = self.dim_a + rest % self.dim_m;
                rest /= self.dim_m;
            } else {
                out[i] = rest % self.dim_a;
                rest /= self.dim_a;
            }
        }
        out
    }

    /// Total word index to `(p, local)`.
    pub fn split_index(&self, word: usize, n: usize) -> (usize, usize) {
        self.locate(&digits(word, self.letters(), n))
    }

    /// Spot `(p, q)` word to total word index.
    pub fn join_index(&self, p: usize, q: usize, local: usize) -> usize {
        word_index(&self.word(p, q, local), self.letters())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The double complex `Hom_k(M^{p,q}, X)` with `d_v` and `d_h`, for all spots
/// of total degree at most `N + 1` (differentials out of degree `≤ N`).
#[derive(Clone, Debug)]
pub struct BigradedComplex {
    field: Field,
    max_degree: usize,
    dim_x: usize,
    words: WordSpace,
    dv: BTreeMap<(usize, usize), Matrix>,
    dh: BTreeMap<(usize, usize), Matrix>,
}

impl BigradedComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn words(&self) -> &WordSpace {
        &self.words
    }

    pub fn spot_dim(&self, p: usize, q: usize) -> usize {
        self.words.spot_words(p, q) * self.dim_x
    }

    /// `d_v : (p, q) → (p, q+1)`, defined for `p + q ≤ N`.
    pub fn dv(&self, p: usize, q: usize) -> &Matrix {
        &self.dv[&(p, q)]
    }

    /// `d_h : (p, q) → (p+1, q)`, defined for `p + q ≤ N`.
    pub fn dh(&self, p: usize, q: usize) -> &Matrix {
        &self.dh[&(p, q)]
    }

    pub fn dv_all(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.dv
    }

    pub fn dh_all(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.dh
    }

    /// Total cochain index → `(p, index inside the spot)`.
    pub fn to_spot(&self, n: usize, index: usize) -> (usize, usize) {
        let (p, local) = self.words.split_index(index / self.dim_x, n);
        (p, local * self.dim_x + index % self.dim_x)
    }

    /// Spot cochain index → total cochain index.
    pub fn to_total(&self, p: usize, q: usize, index: usize) -> usize {
        self.words.join_index(p, q, index / self.dim_x) * self.dim_x + index % self.dim_x
    }

    /// Components of a total cochain of degree `n`, one per `p = 0 … n`.
    pub fn split_cochain(&self, n: usize, v: &SparseVec) -> Vec<SparseVec> {
        let mut parts = vec![Vec::new(); n + 1];
        for (i, c) in v.iter() {
            let (p, local) = self.to_spot(n, *i);
            parts[p].push((local, c.clone()));
        }
        parts
            .into_iter()
            .map(|pairs| SparseVec::from_pairs(self.field, pairs))
            .collect()
    }

    /// A spot cochain as a total cochain.
    pub fn embed(&self, p: usize, q: usize, v: &SparseVec) -> SparseVec {
        let pairs = v.iter().map(|(i, c)| (self.to_total(p, q, *i), c.clone())).collect();
        SparseVec::from_pairs(self.field, pairs)
    }

    /// Rebuilds the total differential `d_n` from the spot blocks.
    pub fn reassemble(&self, n: usize) -> Matrix {
        let f = self.field;
        let total_cols = pow(self.words.letters(), n) * self.dim_x;
        let mut cols = vec![SparseVec::new(); total_cols];
        for p in 0..=n {
            let q = n - p;
            let (dv, dh) = (self.dv(p, q), self.dh(p, q));
            for j in 0..self.spot_dim(p, q) {
                let col = self.embed(p, q + 1, &dv.column(j)).add(f, &self.embed(p + 1, q, &dh.column(j)));
                cols[self.to_total(p, q, j)] = col;
            }
        }
        Matrix::from_columns(f, pow(self.words.letters(), n + 1) * self.dim_x, cols)
    }

    /// The vertical complex `C^p(X)`: spots `(p, 0), (p, 1), …` with `d_v`.
    pub fn column_complex(&self, p: usize) -> Result<CochainComplex> {
        if p > self.max_degree {
            return Err(Error::Precondition(format!("column {p} exceeds degree cap {}", self.max_degree)));
        }
        let top = self.max_degree - p;
        let dims = (0..=top + 1).map(|q| self.spot_dim(p, q)).collect();
        let diffs = (0..=top).map(|q| self.dv(p, q).clone()).collect();
        CochainComplex::new(self.field, dims, diffs)
    }

    /// `d_v² = 0`, `d_h² = 0` and `d_h d_v + d_v d_h = 0` wherever defined.
    pub fn check_identities(&self) -> Result<()> {
        for n in 0..self.max_degree {
            for p in 0..=n {
                let q = n - p;
                let vv = self.dv(p, q + 1).compose(self.dv(p, q))?;
                let hh = self.dh(p + 1, q).compose(self.dh(p, q))?;
                let hv = self.dh(p, q + 1).compose(self.dv(p, q))?;
                let vh = self.dv(p + 1, q).compose(self.dh(p, q))?;
                if !vv.is_zero() || !hh.is_zero() || !hv.add(&vh)?.is_zero() {
                    return Err(Error::Consistency(format!("double complex identity fails at ({p},{q})")));
                }
            }
        }
        Ok(())
    }

    /// Whether every `d_h` is the zero matrix.
    pub fn horizontal_vanishes(&self) -> bool {
        self.dh.values().all(Matrix::is_zero)
    }
}

/// `(d_v, d_h)` out of spot `(p, q)`.
fn spot_differentials(total: &Algebra, x: &Bimodule, words: &WordSpace, p: usize, q: usize) -> Result<(Matrix, Matrix)> {
    let f = total.field();
    let dx = x.dim();
    let n = p + q;
    let mut terms = Vec::new();
    let mut vcols = Vec::new();
    let mut hcols = Vec::new();
    for local in 0..words.spot_words(p, q) {
        let u = words.word(p, q, local);
        for xi in 0..dx {
            terms.clear();
            coboundary_terms(total, x, &u, xi, &mut terms);
            let (mut vp, mut hp) = (Vec::new(), Vec::new());
            for (w, y, c) in terms.drain(..) {
                let (tp, tl) = words.split_index(w, n + 1);
                if tp == p {
                    vp.push((tl * dx + y, c));
                } else if tp == p + 1 {
                    hp.push((tl * dx + y, c));
                } else {
                    return Err(Error::Consistency(format!("coboundary leaves ({p},{q}) for M-count {tp}")));
                }
            }
            vcols.push(SparseVec::from_pairs(f, vp));
            hcols.push(SparseVec::from_pairs(f, hp));
        }
    }
    Ok((
        Matrix::from_columns(f, words.spot_words(p, q + 1) * dx, vcols),
        Matrix::from_columns(f, words.spot_words(p + 1, q) * dx, hcols),
    ))
}

/// Splits the Hochschild complex of `Λ` with coefficients `X` into spots.
pub fn decompose_bigraded(lambda: &SplitAlgebra, x: &Bimodule, max_degree: usize) -> Result<BigradedComplex> {
    let total = lambda.total();
    check_coefficients(total, x)?;
    let words = WordSpace::new(lambda.dim_a(), lambda.dim_m(), max_degree + 1);
    let mut dv = BTreeMap::new();
    let mut dh = BTreeMap::new();
    for n in 0..=max_degree {
        for p in 0..=n {
            let (v, h) = spot_differentials(total, x, &words, p, n - p)?;
            dv.insert((p, n - p), v);
            dh.insert((p, n - p), h);
        }
    }
    Ok(BigradedComplex {
        field: lambda.field(),
        max_degree,
        dim_x: x.dim(),
        words,
        dv,
        dh,
    })
}

/// The column `C^p(X)` through degree `q_max` alone, without the other spots.
pub fn column_complex_direct(lambda: &SplitAlgebra, x: &Bimodule, p: usize, q_max: usize) -> Result<CochainComplex> {
    let total = lambda.total();
    check_coefficients(total, x)?;
    let words = WordSpace::new(lambda.dim_a(), lambda.dim_m(), p + q_max + 1);
    let dims = (0..=q_max + 1).map(|q| words.spot_words(p, q) * x.dim()).collect();
    let diffs = (0..=q_max)
        .map(|q| spot_differentials(total, x, &words, p, q).map(|(v, _)| v))
        .collect::<Result<Vec<_>>>()?;
    CochainComplex::new(lambda.field(), dims, diffs)
}

/// Reassembled blocks agree with the Hochschild differential entrywise.
pub fn check_reassembly(lambda: &SplitAlgebra, x: &Bimodule, bc: &BigradedComplex) -> Result<()> {
    for n in 0..=bc.max_degree() {
        if bc.reassemble(n) != coboundary_matrix(lambda.total(), x, n) {
            return Err(Error::Consistency(format!("reassembled d_{n} differs")));
        }
    }
    Ok(())
}

/// `d_v` computed with the product on `M` and the `M`-actions on `X` removed.
pub fn vertical_reference(lambda: &SplitAlgebra, x: &Bimodule, max_degree: usize) -> Result<BigradedComplex> {
    let plain = lambda.with_zero_product();
    let xa = lambda.restrict_to_base(x);
    let x0 = plain.extend_trivially(&xa)?;
    decompose_bigraded(&plain, &x0, max_degree)
}

/// `d_v` does not see the product on `M` or how `M` acts on `X`.
pub fn verify_vertical_independence(lambda: &SplitAlgebra, x: &Bimodule, max_degree: usize) -> Result<bool> {
    let given = decompose_bigraded(lambda, x, max_degree)?;
    let plain = vertical_reference(lambda, x, max_degree)?;
    Ok(given.dv_all() == plain.dv_all())
}

/// `dim Hom_{A-A}(M^{⊗_A p}, X)` by solving for balanced maps directly.
pub fn column_h0_direct(lambda: &SplitAlgebra, x: &Bimodule, p: usize) -> Result<usize> {
    let xa = lambda.restrict_to_base(x);
    let mp = tensor_power(lambda.ideal(), p)?;
    Ok(hom_bimodule(&mp, &xa)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::quiver::linear_quiver;

    fn t_a2() -> SplitAlgebra {
        SplitAlgebra::trivial_extension(&linear_quiver(Field::Rationals, 2).shared())
    }

    #[test]
    fn direct_column_matches_decomposition() {
        let t = t_a2();
        let x = t.ideal_bimodule();
        let bc = decompose_bigraded(&t, &x, 3).unwrap();
        for p in 0..=2 {
            let direct = column_complex_direct(&t, &x, p, 3 - p).unwrap();
            assert_eq!(direct.cohomology_dims(), bc.column_complex(p).unwrap().cohomology_dims());
        }
    }

    #[test]
    fn locate_round_trip() {
        let ws = WordSpace::new(2, 3, 4);
        for n in 0..=4 {
            for w in 0..pow(5, n) {
                let (p, local) = ws.split_index(w, n);
                assert!(local < ws.spot_words(p, n - p));
                assert_eq!(ws.join_index(p, n - p, local), w);
            }
        }
    }

    #[test]
    fn spot_dims_of_dual_numbers() {
        let t = SplitAlgebra::trivial_extension(&Algebra::ground(Field::Rationals).shared());
        let bc = decompose_bigraded(&t, &t.regular(), 3).unwrap();
        let row: Vec<usize> = (0..=2).map(|p| bc.spot_dim(p, 2 - p)).collect();
        assert_eq!(row, vec![2, 4, 2]);
        bc.check_identities().unwrap();
    }

    #[test]
    fn reassembly_for_trivial_extension_of_a2() {
        let t = t_a2();
        let x = t.regular();
        let bc = decompose_bigraded(&t, &x, 3).unwrap();
        check_reassembly(&t, &x, &bc).unwrap();
        bc.check_identities().unwrap();
    }

    #[test]
    fn quotient_coefficients_kill_horizontal() {
        let t = t_a2();
        let bc = decompose_bigraded(&t, &t.quotient_bimodule(), 3).unwrap();
        assert!(bc.horizontal_vanishes());
    }

    #[test]
    fn column_zero_is_hochschild_of_base() {
        let t = t_a2();
        let x = t.regular();
        let bc = decompose_bigraded(&t, &x, 2).unwrap();
        let c0 = bc.column_complex(0).unwrap();
        let base = super::super::hochschild_complex(t.base(), &t.restrict_to_base(&x), 2).unwrap();
        assert_eq!(c0.differentials(), base.differentials());
    }

    #[test]
    fn vertical_independence_with_product() {
        let s = SplitAlgebra::truncated_polynomial(Field::Rationals, 3);
        assert!(!s.square_zero());
        assert!(verify_vertical_independence(&s, &s.regular(), 3).unwrap());
    }

    #[test]
    fn column_h0_matches_direct_solve() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let t = SplitAlgebra::trivial_extension(&a);
        let x = t.ideal_bimodule();
        let bc = decompose_bigraded(&t, &x, 2).unwrap();
        for p in 0..=2 {
            let h0 = bc.column_complex(p).unwrap().cohomology_dims()[0];
            assert_eq!(h0, column_h0_direct(&t, &x, p).unwrap(), "p = {p}");
        }
        assert_eq!(column_h0_direct(&t, &x, 1).unwrap(), 2);
    }
}
