//! Property checks shared by the proptest target and the acceptance suite.
#![allow(dead_code)]

use std::sync::Arc;

use hh_core::hochschild::{
    apply_coboundary, check_reassembly, decompose_bigraded, hochschild_chain_complex, hochschild_complex,
    hochschild_homology_dims,
};
use hh_core::linalg::{Matrix, SparseVec};
use hh_core::split::SplitAlgebra;
use hh_core::theorems::{leibniz_holds, verify, SuiteConfig};
use hh_core::{corpus, Algebra, Bimodule, Field};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 2718;

pub fn cochain(field: Field, len: usize, raw: &[(usize, i64)]) -> SparseVec {
    SparseVec::from_pairs(field, raw.iter().map(|&(i, c)| (i % len, field.from_int(c))).collect())
}

/// `d(d f) = 0` for a cochain given by raw `(index, coefficient)` pairs.
pub fn d_squared_zero(alg: &Algebra, x: &Bimodule, n: usize, raw: &[(usize, i64)]) -> bool {
    let len = alg.dim().pow(n as u32) * x.dim();
    let f = cochain(alg.field(), len, raw);
    let df = apply_coboundary(alg, x, n, &f);
    apply_coboundary(alg, x, n + 1, &df).is_zero()
}

pub fn b_squared_zero(alg: &Algebra, x: &Bimodule, n: usize) -> bool {
    hochschild_chain_complex(alg, x, n).and_then(|c| c.check_b_squared()).is_ok()
}

pub fn leibniz(lambda: &SplitAlgebra, n: usize, m: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    leibniz_holds(lambda, n, m, &mut rng).unwrap()
}

pub fn reassembles(lambda: &SplitAlgebra, x: &Bimodule, n: usize) -> bool {
    decompose_bigraded(lambda, x, n).and_then(|bc| check_reassembly(lambda, x, &bc)).is_ok()
}

/// `(dim H_n(A, N), dim H^n(A, DN))`.
pub fn duality(alg: &Arc<Algebra>, n_mod: &Bimodule, n: usize) -> (Vec<usize>, Vec<usize>) {
    let h = hochschild_homology_dims(alg, n_mod, n).unwrap();
    let c = hochschild_complex(alg, &n_mod.dual(), n).unwrap().cohomology_dims();
    (h, c)
}

/// `A` twisted on one side by `x ↦ c·x`, for `A = k[x]/x²`.
pub fn twisted_dual_numbers(c: i64) -> (Arc<Algebra>, Bimodule) {
    let a = corpus::algebra("dualnumbers").unwrap();
    let f = a.field();
    let x = a.labels().iter().position(|l| l == "x").unwrap();
    let rows = (0..2)
        .map(|i| (0..2).map(|j| f.from_int(if i != j { 0 } else if i == x { c } else { 1 })).collect())
        .collect();
    let m = Bimodule::twisted(&a, &Matrix::from_rows(f, rows, 2).unwrap()).unwrap();
    (a, m)
}

/// Two runs of a seeded verifier serialize identically.
pub fn deterministic(id: &str, seed: u64) -> bool {
    let cfg = SuiteConfig { seed };
    let a = serde_json::to_string(&verify(id, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&verify(id, &cfg).unwrap()).unwrap();
    a == b
}

pub fn corpus_pairs() -> Vec<(String, Arc<Algebra>, Bimodule)> {
    let mut out = Vec::new();
    for name in corpus::ALGEBRAS {
        let a = corpus::algebra(name).unwrap();
        out.push((name.to_string(), a.clone(), Bimodule::regular(&a)));
        out.push((format!("{name}, D"), a.clone(), Bimodule::regular(&a).dual()));
    }
    out
}

pub fn small_splits() -> Vec<(String, SplitAlgebra)> {
    let mut out = vec![
        ("T(k)".to_string(), SplitAlgebra::trivial_extension(&corpus::algebra("k").unwrap())),
        ("T(A2)".to_string(), SplitAlgebra::trivial_extension(&corpus::algebra("a2").unwrap())),
        ("A2[e]".to_string(), SplitAlgebra::dual_numbers_extension(&corpus::algebra("a2").unwrap())),
    ];
    for name in corpus::SPLITS {
        out.push((name.to_string(), corpus::split(name).unwrap()));
    }
    out
}
