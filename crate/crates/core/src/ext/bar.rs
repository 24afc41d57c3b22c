//! Complexes `R_0 ⊗ Z ⊗ R_s` with `Z = R_0^{e_0} X_1 R_1^{e_1} … X_s R_s^{e_s}`
//! in degree `Σ e_t`, and the boundary `b'` that multiplies adjacent factors.
//! Products of two bimodule elements are zero, and so is any term in which an
//! outer algebra factor is absorbed into a bimodule.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::hochschild::ChainComplex;
use crate::linalg::{Matrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Alg { which: usize, outer: bool },
    Mod(usize),
}

/// The chain of algebras `R_0 … R_s` and bimodules `X_1 … X_s`, with `X_t` an
/// `(R_{t−1}, R_t)`-bimodule.
#[derive(Clone, Debug)]
pub struct BarShape {
    algebras: Vec<Arc<Algebra>>,
    modules: Vec<Bimodule>,
}

impl BarShape {
    pub fn new(algebras: Vec<Arc<Algebra>>, modules: Vec<Bimodule>) -> Result<Self> {
        if algebras.len() != modules.len() + 1 {
            return Err(Error::DimensionMismatch("need one more algebra than bimodules".into()));
        }
        for (t, x) in modules.iter().enumerate() {
            if **x.left() != *algebras[t] || **x.right() != *algebras[t + 1] {
                return Err(Error::AlgebraMismatch(format!("bimodule {} sits over the wrong algebras", t + 1)));
            }
        }
        Ok(BarShape { algebras, modules })
    }

    fn kinds(&self, comp: &[usize]) -> Vec<Kind> {
        let s = self.modules.len();
        let mut out = vec![Kind::Alg { which: 0, outer: true }];
        for (t, &e) in comp.iter().enumerate() {
            if t > 0 {
                out.push(Kind::Mod(t));
            }
            out.extend(std::iter::repeat(Kind::Alg { which: t, outer: false }).take(e));
        }
        out.push(Kind::Alg { which: s, outer: true });
        out
    }

    fn factor_dim(&self, k: Kind) -> usize {
        match k {
            Kind::Alg { which, .. } => self.algebras[which].dim(),
            Kind::Mod(t) => self.modules[t - 1].dim(),
        }
    }

    fn compositions(&self, n: usize) -> Vec<Vec<usize>> {
        fn rec(parts: usize, n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if parts == 1 {
                acc.push(n);
                out.push(acc.clone());
                acc.pop();
                return;
            }
            for e in 0..=n {
                acc.push(e);
                rec(parts - 1, n - e, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.algebras.len(), n, &mut Vec::new(), &mut out);
        out
    }

    fn layout(&self, n: usize) -> Layout {
        let mut offsets = HashMap::new();
        let mut blocks = Vec::new();
        let mut total = 0;
        for comp in self.compositions(n) {
            let dims: Vec<usize> = self.kinds(&comp).into_iter().map(|k| self.factor_dim(k)).collect();
            let size = dims.iter().product::<usize>();
            offsets.insert(comp.clone(), total);
            blocks.push((comp, total, dims));
            total += size;
        }
        Layout { offsets, blocks, total }
    }

    /// The chain complex through degree `n_max + 1`.
    pub fn complex(&self, n_max: usize) -> Result<ChainComplex> {
        let f = self.algebras[0].field();
        let layouts: Vec<Layout> = (0..=n_max + 1).map(|n| self.layout(n)).collect();
        let mut bs = Vec::new();
        for n in 1..=n_max + 1 {
            let (src, dst) = (&layouts[n], &layouts[n - 1]);
            let mut cols = Vec::with_capacity(src.total);
            for (comp, _, dims) in &src.blocks {
                let kinds = self.kinds(comp);
                let size: usize = dims.iter().product();
                for local in 0..size {
                    let letters = unrank(local, dims);
                    let mut pairs = Vec::new();
                    for t in 0..kinds.len() - 1 {
                        let Some((slot, merged)) = self.merge(kinds[t], kinds[t + 1], letters[t], letters[t + 1]) else {
                            continue;
                        };
                        let mut c2 = comp.clone();
                        c2[slot] -= 1;
                        let off = dst.offsets[&c2];
                        let dims2: Vec<usize> =
                            self.kinds(&c2).into_iter().map(|k| self.factor_dim(k)).collect();
                        let s = f.from_int(if t % 2 == 0 { 1 } else { -1 });
                        for (k, c) in merged.iter() {
                            let mut w = letters[..t].to_vec();
                            w.push(*k);
                            w.extend_from_slice(&letters[t + 2..]);
                            pairs.push((off + rank(&w, &dims2), f.mul(&s, c)));
                        }
                    }
                    cols.push(SparseVec::from_pairs(f, pairs));
                }
            }
            bs.push(Matrix::from_columns(f, dst.total, cols));
        }
        ChainComplex::new(layouts.iter().map(|l| l.total).collect(), bs)
    }

    /// The product of two adjacent factors and the slot whose count drops.
    fn merge(&self, l: Kind, r: Kind, x: usize, y: usize) -> Option<(usize, SparseVec)> {
        match (l, r) {
            (Kind::Alg { which: a, .. }, Kind::Alg { which: b, .. }) if a == b => {
                Some((a, self.algebras[a].product(x, y).clone()))
            }
            (Kind::Alg { which, outer: false }, Kind::Mod(t)) if which + 1 == t => {
                Some((which, self.modules[t - 1].left_basis(x, y).clone()))
            }
            (Kind::Mod(t), Kind::Alg { which, outer: false }) if which == t => {
                Some((which, self.modules[t - 1].right_basis(x, y).clone()))
            }
            _ => None,
        }
    }
}

struct Layout {
    offsets: HashMap<Vec<usize>, usize>,
    blocks: Vec<(Vec<usize>, usize, Vec<usize>)>,
    total: usize,
}

fn unrank(mut local: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for i in (0..dims.len()).rev() {
        out[i] = local % dims[i];
        local /= dims[i];
    }
    out
}

fn rank(letters: &[usize], dims: &[usize]) -> usize {
    letters.iter().zip(dims).fold(0, |acc, (l, d)| acc * d + l)
}

/// `C ⊗ C^k N B^j M A^i ⊗ A` with the merging boundary.
pub fn prop_tor_complex(
    c: &Arc<Algebra>,
    b: &Arc<Algebra>,
    a: &Arc<Algebra>,
    n: &Bimodule,
    m: &Bimodule,
    n_max: usize,
) -> Result<ChainComplex> {
    BarShape::new(vec![c.clone(), b.clone(), a.clone()], vec![n.clone(), m.clone()])?.complex(n_max)
}

/// `D ⊗ D^l U C^k N B^j M A^i ⊗ A` with the merging boundary.
#[allow(clippy::too_many_arguments)]
pub fn prop_tor2_complex(
    d: &Arc<Algebra>,
    c: &Arc<Algebra>,
    b: &Arc<Algebra>,
    a: &Arc<Algebra>,
    u: &Bimodule,
    n: &Bimodule,
    m: &Bimodule,
    n_max: usize,
) -> Result<ChainComplex> {
    BarShape::new(
        vec![d.clone(), c.clone(), b.clone(), a.clone()],
        vec![u.clone(), n.clone(), m.clone()],
    )?
    .complex(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::tor_dims;
    use crate::field::Field;
    use crate::quiver::linear_quiver;

    #[test]
    fn ground_field_case() {
        let k = Algebra::ground(Field::Rationals).shared();
        let x = Bimodule::regular(&k);
        let c = prop_tor_complex(&k, &k, &k, &x, &x, 2).unwrap();
        c.check_b_squared().unwrap();
        assert_eq!(c.homology_dims(), vec![1, 0, 0]);
        let c2 = prop_tor2_complex(&k, &k, &k, &k, &x, &x, &x, 2).unwrap();
        assert_eq!(c2.homology_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn dual_numbers_matches_tor() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let x = Bimodule::regular(&a);
        let dx = x.dual();
        let c = prop_tor_complex(&a, &a, &a, &dx, &dx, 1).unwrap();
        c.check_b_squared().unwrap();
        assert_eq!(c.homology_dims(), tor_dims(&dx, &dx, 1).unwrap());
    }

    #[test]
    fn a2_dual_matches_tor() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let dx = Bimodule::regular(&a).dual();
        let c = prop_tor_complex(&a, &a, &a, &dx, &dx, 1).unwrap();
        assert_eq!(c.homology_dims(), tor_dims(&dx, &dx, 1).unwrap());
    }
}
