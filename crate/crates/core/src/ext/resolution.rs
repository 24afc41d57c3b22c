use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::hochschild::{ChainComplex, CochainComplex};
use crate::linalg::{Echelon, Matrix, SparseVec};

use super::module::{enveloping, LeftModule};

/// `b_r · v` for `v ∈ R^g` (index `generator·dim R + basis`).
fn act_free(alg: &Algebra, r: usize, v: &SparseVec) -> SparseVec {
    let f = alg.field();
    let d = alg.dim();
    let mut pairs = Vec::new();
    for (idx, c) in v.iter() {
        let (i, s) = (idx / d, idx % d);
        for (k, t) in alg.product(r, s).iter() {
            pairs.push((i * d + k, f.mul(c, t)));
        }
    }
    SparseVec::from_pairs(f, pairs)
}

/// Generators of the submodule spanned by `vectors`, chosen greedily: a vector
/// is kept only if it lies outside the submodule generated so far.
fn pick_generators(
    alg: &Algebra,
    vectors: &[SparseVec],
    act: impl Fn(usize, &SparseVec) -> SparseVec,
) -> Vec<SparseVec> {
    let mut span = Echelon::new(alg.field());
    let mut gens = Vec::new();
    for v in vectors {
        if span.rank() == vectors.len() {
            break;
        }
        if span.contains(v) {
            continue;
        }
        for r in 0..alg.dim() {
            span.insert(&act(r, v));
        }
        gens.push(v.clone());
    }
    gens
}

/// One step `P_q = R^{g_q} → P_{q−1}` (or `→ N` for `q = 0`).
#[derive(Clone, Debug)]
pub struct ResolutionStep {
    /// Images of the free generators.
    pub generators: Vec<SparseVec>,
    /// The map itself, `(dim target) × (g · dim R)`.
    pub map: Matrix,
}

/// A free resolution `… → P_1 → P_0 → N → 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    algebra: Arc<Algebra>,
    steps: Vec<ResolutionStep>,
}

impl FreeResolution {
    /// `P_0 … P_len`.
    pub fn new(module: &LeftModule, len: usize) -> Result<Self> {
        let alg = module.algebra().clone();
        let d = alg.dim();
        let basis: Vec<SparseVec> = (0..module.dim()).map(SparseVec::unit).collect();
        let gens = pick_generators(&alg, &basis, |r, v| module.act(&SparseVec::unit(r), v));
        let map = Self::evaluation(&alg, &gens, module.dim(), |r, v| module.act(&SparseVec::unit(r), v));
        let mut steps = vec![ResolutionStep { generators: gens, map }];
        for _ in 0..len {
            let prev = steps.last().expect("nonempty");
            let kernel = prev.map.kernel_basis();
            let ambient = prev.generators.len() * d;
            let gens = pick_generators(&alg, &kernel, |r, v| act_free(&alg, r, v));
            let map = Self::evaluation(&alg, &gens, ambient, |r, v| act_free(&alg, r, v));
            if map.rank() != kernel.len() {
                return Err(Error::Consistency("syzygy generators miss part of the kernel".into()));
            }
            steps.push(ResolutionStep { generators: gens, map });
        }
        Ok(FreeResolution { algebra: alg, steps })
    }

    fn evaluation(
        alg: &Algebra,
        gens: &[SparseVec],
        target: usize,
        act: impl Fn(usize, &SparseVec) -> SparseVec,
    ) -> Matrix {
        let cols = gens
            .iter()
            .flat_map(|g| (0..alg.dim()).map(|r| act(r, g)).collect::<Vec<_>>())
            .collect();
        Matrix::from_columns(alg.field(), target, cols)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Generator counts `g_0, g_1, …`.
    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.generators.len()).collect()
    }

    pub fn step(&self, q: usize) -> &ResolutionStep {
        &self.steps[q]
    }

    /// `im(P_{q+1} → P_q) = ker(P_q → P_{q−1})` for every stored step.
    pub fn check_exact(&self) -> Result<()> {
        for q in 0..self.steps.len().saturating_sub(1) {
            let cur = &self.steps[q].map;
            let next = &self.steps[q + 1].map;
            if !cur.compose(next)?.is_zero() || next.rank() + cur.rank() != cur.cols() {
                return Err(Error::Consistency(format!("resolution not exact at P_{q}")));
            }
        }
        if self.steps[0].map.rank() != self.steps[0].map.rows() {
            return Err(Error::Consistency("P_0 does not cover the module".into()));
        }
        Ok(())
    }

    /// `Hom_R(P_•, X)` with `Hom_R(P_q, X) ≅ X^{g_q}`.
    pub fn hom_complex(&self, x: &LeftModule) -> Result<CochainComplex> {
        if **x.algebra() != *self.algebra {
            return Err(Error::AlgebraMismatch("Hom target over a different algebra".into()));
        }
        let f = self.algebra.field();
        let d = self.algebra.dim();
        let dx = x.dim();
        let g = self.ranks();
        let mut diffs = Vec::new();
        for q in 0..self.steps.len() - 1 {
            let mut cols = vec![Vec::new(); g[q] * dx];
            for (j, k) in self.steps[q + 1].generators.iter().enumerate() {
                for (idx, c) in k.iter() {
                    let (i, r) = (idx / d, idx % d);
                    for xi in 0..dx {
                        for (y, t) in x.act_basis(r, xi).iter() {
                            cols[i * dx + xi].push((j * dx + y, f.mul(c, t)));
                        }
                    }
                }
            }
            let cols = cols.into_iter().map(|p| SparseVec::from_pairs(f, p)).collect();
            diffs.push(Matrix::from_columns(f, g[q + 1] * dx, cols));
        }
        CochainComplex::new(f, g.iter().map(|n| n * dx).collect(), diffs)
    }

    /// `N ⊗_R P_•` for a right `R`-module given as a left module over `R^op`.
    pub fn tensor_complex(&self, n: &LeftModule) -> Result<ChainComplex> {
        if **n.algebra() != self.algebra.opposite() {
            return Err(Error::AlgebraMismatch("tensor factor over a different algebra".into()));
        }
        let f = self.algebra.field();
        let d = self.algebra.dim();
        let dn = n.dim();
        let g = self.ranks();
        let mut bs = Vec::new();
        for q in 0..self.steps.len() - 1 {
            let mut cols = Vec::with_capacity(g[q + 1] * dn);
            for k in &self.steps[q + 1].generators {
                for ni in 0..dn {
                    let mut pairs = Vec::new();
                    for (idx, c) in k.iter() {
                        let (i, r) = (idx / d, idx % d);
                        for (y, t) in n.act_basis(r, ni).iter() {
                            pairs.push((i * dn + y, f.mul(c, t)));
                        }
                    }
                    cols.push(SparseVec::from_pairs(f, pairs));
                }
            }
            bs.push(Matrix::from_columns(f, g[q] * dn, cols));
        }
        ChainComplex::new(g.iter().map(|m| m * dn).collect(), bs)
    }
}

/// `dim Ext^q_R(N, X)` for `q ≤ q_max`.
pub fn ext_dims(n: &LeftModule, x: &LeftModule, q_max: usize) -> Result<Vec<usize>> {
    let res = FreeResolution::new(n, q_max + 1)?;
    Ok(res.hom_complex(x)?.cohomology_dims())
}

/// `dim Ext^q_{B-A}(N, X)` for `(B, A)`-bimodules.
pub fn ext_bimodule_dims(n: &Bimodule, x: &Bimodule, q_max: usize) -> Result<Vec<usize>> {
    if **n.left() != **x.left() || **n.right() != **x.right() {
        return Err(Error::AlgebraMismatch("Ext between bimodules over different algebras".into()));
    }
    let env = Arc::new(enveloping(n.left(), n.right())?);
    let nm = LeftModule::over_enveloping(env.clone(), n)?;
    let xm = LeftModule::over_enveloping(env, x)?;
    ext_dims(&nm, &xm, q_max)
}

/// `dim Tor^B_q(N, M)` for a `(C, B)`-bimodule `N` and a `(B, A)`-bimodule `M`.
pub fn tor_dims(n: &Bimodule, m: &Bimodule, q_max: usize) -> Result<Vec<usize>> {
    if **n.right() != **m.left() {
        return Err(Error::AlgebraMismatch("Tor over different algebras".into()));
    }
    let res = FreeResolution::new(&LeftModule::left_of(m), q_max + 1)?;
    Ok(res.tensor_complex(&LeftModule::right_of(n))?.homology_dims())
}

/// Whether a module is projective: the evaluation `R^g → M` on a generating
/// set admits an `R`-linear section.
pub fn is_projective(module: &LeftModule) -> Result<bool> {
    let alg = module.algebra();
    let f = alg.field();
    let (d, dm) = (alg.dim(), module.dim());
    let basis: Vec<SparseVec> = (0..dm).map(SparseVec::unit).collect();
    let gens = pick_generators(alg, &basis, |r, v| module.act(&SparseVec::unit(r), v));
    let gd = gens.len() * d;
    let eval = FreeResolution::evaluation(alg, &gens, dm, |r, v| module.act(&SparseVec::unit(r), v));
    let e = eval.dense_rows();
    // unknown S[row][col] at row·dm + col, with S : M → R^g
    let module_rows = dm * dm;
    let block = gd * dm;
    let la: Vec<Vec<Vec<_>>> = (0..d).map(|a| module.action_matrix(a).dense_rows()).collect();
    let mut cols = Vec::with_capacity(gd * dm);
    for row in 0..gd {
        for col in 0..dm {
            let mut pairs = Vec::new();
            // E S = I
            for (i, er) in e.iter().enumerate() {
                if !er[row].is_zero() {
                    pairs.push((i * dm + col, er[row].clone()));
                }
            }
            for a in 0..d {
                let base = module_rows + a * block;
                // (S L_a)[row][c'] = Σ_c S[row][c] L_a[c][c']
                for (cp, v) in la[a][col].iter().enumerate() {
                    if !v.is_zero() {
                        pairs.push((base + row * dm + cp, v.clone()));
                    }
                }
                // −(L'_a S)[r'][col] = −Σ_r L'_a[r'][r] S[r][col]
                for (rp, v) in act_free(alg, a, &SparseVec::unit(row)).iter() {
                    pairs.push((base + rp * dm + col, f.neg(v)));
                }
            }
            cols.push(SparseVec::from_pairs(f, pairs));
        }
    }
    let system = Matrix::from_columns(f, module_rows + d * block, cols);
    let target = SparseVec::from_pairs(f, (0..dm).map(|i| (i * dm + i, f.one())).collect());
    Ok(system.member_of_image(&target)?.is_some())
}

/// Projectivity of a bimodule as a left and as a right module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneSided {
    pub left: bool,
    pub right: bool,
}

impl OneSided {
    pub fn either(&self) -> bool {
        self.left || self.right
    }
}

pub fn is_one_sided_projective(m: &Bimodule) -> Result<OneSided> {
    Ok(OneSided {
        left: is_projective(&LeftModule::left_of(m))?,
        right: is_projective(&LeftModule::right_of(m))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::quiver::linear_quiver;

    #[test]
    fn ext_of_a2_regular() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let x = Bimodule::regular(&a);
        assert_eq!(ext_bimodule_dims(&x, &x, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn ext_of_dual_numbers() {
        let a = Algebra::dual_numbers(Field::Rationals).shared();
        let x = Bimodule::regular(&a);
        assert_eq!(ext_bimodule_dims(&x, &x, 2).unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn resolution_is_exact() {
        let a = Algebra::truncated_polynomial(Field::Rationals, 3).shared();
        let m = LeftModule::from_bimodule(&Bimodule::regular(&a)).unwrap();
        FreeResolution::new(&m, 3).unwrap().check_exact().unwrap();
    }

    #[test]
    fn tor_over_ground_field() {
        let k = Algebra::ground(Field::Rationals).shared();
        let x = Bimodule::regular(&k);
        assert_eq!(tor_dims(&x, &x, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn tor_of_projective_vanishes() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let x = Bimodule::regular(&a);
        assert_eq!(tor_dims(&x.dual(), &x, 2).unwrap(), vec![3, 0, 0]);
    }

    #[test]
    fn projectivity() {
        let a = linear_quiver(Field::Rationals, 2).shared();
        let reg = Bimodule::regular(&a);
        assert_eq!(is_one_sided_projective(&reg).unwrap(), OneSided { left: true, right: true });
        let da = is_one_sided_projective(&reg.dual()).unwrap();
        assert!(!da.either());
        let d = Algebra::dual_numbers(Field::Rationals).shared();
        let simple = LeftModule::new(d, 1, vec![vec![SparseVec::unit(0)], vec![SparseVec::new()]]).unwrap();
        assert!(!is_projective(&simple).unwrap());
    }
}
