//! Executable checks, one per result, each returning the integers it compared.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::{hom_bimodule, tensor_power, tensor_over, Bimodule};
use crate::connect::{
    assemble_les, check_nullhomotopy, connecting_via_cup, connecting_via_snake, cup, cyclic_delta_p0,
    delta10_bilinear, triangular_delta_cup, triangular_les, Pairing,
};
use crate::corpus;
use crate::error::{Error, Result};
use crate::ext::{ext_bimodule_dims, is_one_sided_projective, prop_tor2_complex, prop_tor_complex, tor_dims};
use crate::field::Field;
use crate::hochschild::{
    apply_coboundary, coboundary_matrix, column_complex_direct, decompose_bigraded,
    hochschild_complex, hochschild_homology_dims, verify_vertical_independence, WordSpace,
};
use crate::idempotent::IdempotentSystem;
use crate::linalg::{Echelon, Matrix, SparseVec, Subspace};
use crate::split::SplitAlgebra;

pub const THEOREM_IDS: &[&str] = &[
    "prop-2.1",
    "thm-2.2",
    "thm-2.4",
    "prop-2.5",
    "prop-2.7",
    "thm-3.1",
    "cor-3.2",
    "prop-3.3",
    "prop-3.6",
    "thm-4.1",
    "prop-5.4",
    "thm-5.3",
    "cor-5.3",
    "thm-5.6",
    "prop-5.7",
    "thm-5.9",
    "sec5-kunneth",
    "sec5-nonzero-delta",
    "sec6-les",
    "sec6-delta-cup",
];

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub computed: Vec<i64>,
    pub expected: Vec<i64>,
    pub pass: bool,
    /// `false` when the hypothesis could not be established; such an
    /// instance never counts as a pass and does not fail the verdict.
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn ints(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

impl Instance {
    pub fn equal(name: impl Into<String>, computed: &[usize], expected: &[usize]) -> Self {
        Instance {
            name: name.into(),
            computed: ints(computed),
            expected: ints(expected),
            pass: computed == expected,
            applicable: true,
            note: None,
        }
    }

    /// A check whose verdict is not plain equality (inequalities, flags).
    pub fn judged(name: impl Into<String>, computed: &[usize], expected: &[usize], pass: bool) -> Self {
        Instance {
            pass,
            ..Instance::equal(name, computed, expected)
        }
    }

    pub fn flag(name: impl Into<String>, holds: bool) -> Self {
        Instance::equal(name, &[holds as usize], &[1])
    }

    fn not_applicable(name: impl Into<String>, note: String) -> Self {
        Instance {
            name: name.into(),
            computed: vec![],
            expected: vec![],
            pass: false,
            applicable: false,
            note: Some(note),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Verdict {
    pub theorem_id: String,
    pub seed: u64,
    pub instances: Vec<Instance>,
    pub overall: bool,
}

impl Verdict {
    fn new(id: &str, seed: u64, instances: Vec<Instance>) -> Self {
        let overall = instances.iter().all(|i| i.pass || !i.applicable);
        Verdict {
            theorem_id: id.to_string(),
            seed,
            instances,
            overall,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 2718 }
    }
}

pub fn verify(id: &str, cfg: &SuiteConfig) -> Result<Verdict> {
    let instances = match id {
        "prop-2.1" => vertical_independence()?,
        "thm-2.2" => first_column()?,
        "thm-2.4" => column_ext()?,
        "prop-2.5" => tor_complex()?,
        "prop-2.7" => tor2_complex()?,
        "thm-3.1" => horizontal_zero()?,
        "cor-3.2" => ext_sum()?,
        "prop-3.3" => delta_zero_kernel()?,
        "prop-3.6" => bidegree()?,
        "thm-4.1" => cup_formula(cfg.seed)?,
        "prop-5.4" => low_degree_deltas()?,
        "thm-5.3" => h1_trivial_extension()?,
        "cor-5.3" => nonvanishing_h1()?,
        "thm-5.6" => direct_summand()?,
        "prop-5.7" => nullhomotopy()?,
        "thm-5.9" => one_way()?,
        "sec5-kunneth" => dual_numbers_dims()?,
        "sec5-nonzero-delta" => not_all_deltas_zero()?,
        "sec6-les" => triangular_sequence()?,
        "sec6-delta-cup" => triangular_cup()?,
        other => return Err(Error::Input(format!("unknown theorem id {other:?}"))),
    };
    Ok(Verdict::new(id, cfg.seed, instances))
}

pub fn verify_all(cfg: &SuiteConfig) -> Result<Vec<Verdict>> {
    THEOREM_IDS.iter().map(|id| verify(id, cfg)).collect()
}

fn q() -> Field {
    Field::Rationals
}

fn self_cohomology(a: &Algebra, n: usize) -> Result<Vec<usize>> {
    Ok(hochschild_complex(a, &Bimodule::regular(&Arc::new(a.clone())), n)?.cohomology_dims())
}

fn self_homology(a: &Arc<Algebra>, n: usize) -> Result<Vec<usize>> {
    hochschild_homology_dims(a, &Bimodule::regular(a), n)
}

fn te(a: &Arc<Algebra>) -> SplitAlgebra {
    SplitAlgebra::trivial_extension(a)
}

/// `(name, Λ)` for the trivial extensions and `A2[ε]` used by the column checks.
fn square_zero_family() -> Result<Vec<(String, SplitAlgebra)>> {
    Ok(vec![
        ("T(k)".into(), te(&corpus::algebra("k")?)),
        ("T(A2)".into(), te(&corpus::algebra("a2")?)),
        ("T(A3)".into(), te(&corpus::algebra("a3")?)),
        ("A2[e]".into(), SplitAlgebra::dual_numbers_extension(&corpus::algebra("a2")?)),
    ])
}

fn coefficient_pair(lambda: &SplitAlgebra) -> Vec<(&'static str, Bimodule)> {
    vec![("M", lambda.ideal_bimodule()), ("L/M", lambda.quotient_bimodule())]
}

fn vertical_independence() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for name in ["x3-split", "twisted-dualnumbers"] {
        let s = corpus::split(name)?;
        for (xn, x) in [("L", s.regular()), ("L/M", s.quotient_bimodule())] {
            let same = verify_vertical_independence(&s, &x, 3)?;
            let note = if s.square_zero() { "M^2 = 0" } else { "M^2 != 0" };
            out.push(Instance::flag(format!("{name}, X = {xn}"), same).with_note(note));
        }
    }
    Ok(out)
}

/// `Ext^q_{A-A}(M^{⊗p}, X)` for `q ≤ q_max`.
fn column_ext_dims(lambda: &SplitAlgebra, x: &Bimodule, p: usize, q_max: usize) -> Result<Vec<usize>> {
    let mp = tensor_power(lambda.ideal(), p)?;
    let xa = lambda.restrict_to_base(x);
    if mp.dim() == 0 || xa.dim() == 0 {
        return Ok(vec![0; q_max + 1]);
    }
    ext_bimodule_dims(&mp, &xa, q_max)
}

fn column_dims(lambda: &SplitAlgebra, x: &Bimodule, p: usize, q_max: usize) -> Result<Vec<usize>> {
    Ok(column_complex_direct(lambda, x, p, q_max)?.cohomology_dims())
}

fn first_column() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let mut cases = square_zero_family()?;
    cases.retain(|(n, _)| n != "T(A3)");
    cases.push(("k[x]/x^3".into(), corpus::split("x3-split")?));
    for (name, lambda) in &cases {
        let q_max = if lambda.total().dim() <= 4 { 3 } else { 2 };
        let mut xs = coefficient_pair(lambda);
        xs.push(("L", lambda.regular()));
        for (xn, x) in xs {
            let col = column_dims(lambda, &x, 1, q_max)?;
            let ext = column_ext_dims(lambda, &x, 1, q_max)?;
            out.push(Instance::equal(format!("{name}, X = {xn}, p = 1"), &col, &ext));
        }
    }
    Ok(out)
}

/// `Tor^A_{>0}(M^{⊗i}, M) = 0` for `1 ≤ i < p`, checked to degree `q_max + 1`.
fn tor_fallback(m: &Bimodule, p: usize, q_max: usize) -> Result<bool> {
    for i in 1..p {
        let mi = tensor_power(m, i)?;
        if mi.dim() == 0 {
            continue;
        }
        if tor_dims(&mi, m, q_max + 1)?.iter().skip(1).any(|&d| d > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn column_ext() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (name, lambda) in square_zero_family()? {
        if name == "T(k)" {
            continue;
        }
        let bound = 4;
        let sides = is_one_sided_projective(lambda.ideal())?;
        for (xn, x) in coefficient_pair(&lambda) {
            for p in 0..=2usize.min(bound) {
                let q_max = 2.min(bound - p);
                let label = format!("{name}, X = {xn}, p = {p}, q <= {q_max}");
                let hypothesis = if p <= 1 {
                    Some("no hypothesis needed for p <= 1")
                } else if sides.either() {
                    Some("M one-sided projective")
                } else if tor_fallback(lambda.ideal(), p, q_max)? {
                    Some("Tor fallback (checked to q_max + 1)")
                } else {
                    None
                };
                let col = column_dims(&lambda, &x, p, q_max)?;
                let ext = column_ext_dims(&lambda, &x, p, q_max)?;
                out.push(match hypothesis {
                    Some(h) => Instance::equal(label, &col, &ext).with_note(h),
                    // recorded for information only
                    None => Instance {
                        computed: ints(&col),
                        expected: ints(&ext),
                        ..Instance::not_applicable(label, "M is not one-sided projective and Tor does not vanish".into())
                    },
                });
            }
        }
    }
    Ok(out)
}

fn tor_complex() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let k = corpus::algebra("k")?;
    let kk = Bimodule::regular(&k);
    let c = prop_tor_complex(&k, &k, &k, &kk, &kk, 2)?;
    out.push(Instance::equal("C = B = A = k", &c.homology_dims(), &tor_dims(&kk, &kk, 2)?));
    let a2 = corpus::algebra("a2")?;
    let da = Bimodule::regular(&a2).dual();
    let c = prop_tor_complex(&a2, &a2, &a2, &da, &da, 2)?;
    out.push(Instance::equal("A2, N = M = DA2", &c.homology_dims(), &tor_dims(&da, &da, 2)?));
    let reg = Bimodule::regular(&a2);
    let c = prop_tor_complex(&a2, &a2, &a2, &da, &reg, 2)?;
    let h = c.homology_dims();
    out.push(Instance::judged(
        "A2, M = A2 projective",
        &h,
        &tor_dims(&da, &reg, 2)?,
        h[1..].iter().all(|&d| d == 0) && h == tor_dims(&da, &reg, 2)?,
    ));
    let d = corpus::algebra("dualnumbers")?;
    let dd = Bimodule::regular(&d).dual();
    let c = prop_tor_complex(&d, &d, &d, &dd, &dd, 2)?;
    out.push(Instance::equal("k[x]/x^2, N = M = DA", &c.homology_dims(), &tor_dims(&dd, &dd, 2)?));
    Ok(out)
}

fn tor2_complex() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let cases = [("k", 3), ("a2", 2), ("dualnumbers", 2)];
    for (name, n_max) in cases {
        let a = corpus::algebra(name)?;
        let r = Bimodule::regular(&a);
        let pre = tor_dims(&r, &r, n_max)?;
        if pre[1..].iter().any(|&d| d > 0) {
            out.push(Instance::not_applicable(name, "Tor^B(N, M) does not vanish".into()));
            continue;
        }
        let c = prop_tor2_complex(&a, &a, &a, &a, &r, &r, &r, n_max)?;
        let nm = tensor_over(&r, &r)?.module;
        out.push(Instance::equal(
            format!("{name}, U = N = M regular, n <= {n_max}"),
            &c.homology_dims(),
            &tor_dims(&r, &nm, n_max)?,
        ));
    }
    Ok(out)
}

fn horizontal_zero() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (name, lambda) in square_zero_family()? {
        // sparse enough to go past the default cap for T(A3)
        let n = if (5..=6).contains(&lambda.total().dim()) { 3 } else { 4 };
        for (xn, x) in coefficient_pair(&lambda) {
            let bc = decompose_bigraded(&lambda, &x, n)?;
            out.push(
                Instance::flag(format!("{name}, X = {xn}: d_h = 0"), bc.horizontal_vanishes())
                    .with_note(format!("degree cap {n}")),
            );
            let mut sums = vec![0; n + 1];
            for p in 0..=n {
                for (qd, d) in bc.column_complex(p)?.cohomology_dims().into_iter().enumerate() {
                    sums[p + qd] += d;
                }
            }
            let total = hochschild_complex(lambda.total(), &x, n)?.cohomology_dims();
            out.push(Instance::equal(format!("{name}, X = {xn}: column sums"), &sums, &total));
        }
    }
    Ok(out)
}

fn ext_sum() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let lambda = SplitAlgebra::dual_numbers_extension(&corpus::algebra("a2")?);
    let n = 3;
    for (xn, x) in coefficient_pair(&lambda) {
        let mut sums = vec![0; n + 1];
        for p in 0..=n {
            for (qd, d) in column_ext_dims(&lambda, &x, p, n - p)?.into_iter().enumerate() {
                sums[p + qd] += d;
            }
        }
        let total = hochschild_complex(lambda.total(), &x, n)?.cohomology_dims();
        out.push(Instance::equal(format!("A2[e], X = {xn}"), &total, &sums));
    }
    Ok(out)
}

fn boundaries(alg: &Algebra, x: &Bimodule, n: usize) -> Echelon {
    let mut e = Echelon::new(alg.field());
    let d = coboundary_matrix(alg, x, n);
    for j in 0..d.cols() {
        e.insert(&d.column(j));
    }
    e
}

/// `ker δ⁰` as a subspace of `A`.
pub fn delta0_kernel(lambda: &SplitAlgebra) -> Result<Subspace> {
    let f = lambda.field();
    let seq = lambda.ses_bimodules()?;
    let total = lambda.total();
    let reps = hochschild_complex(total, &seq.quotient, 0)?.cohomology_basis(0).reps().to_vec();
    let d0 = coboundary_matrix(total, &seq.sub, 0);
    let mut cols = Vec::new();
    for z in &reps {
        cols.push(connecting_via_snake(lambda, 0, z)?);
    }
    let r = reps.len();
    cols.extend(d0.columns());
    let combos = Matrix::from_columns(f, d0.rows(), cols)
        .kernel_basis()
        .into_iter()
        .map(|k| {
            reps.iter()
                .enumerate()
                .fold(SparseVec::new(), |acc, (i, z)| acc.add_scaled(f, &k.get(i), z))
        })
        .filter(|v| !v.is_zero() || r == 0);
    Ok(Subspace::span(f, lambda.dim_a(), combos))
}

fn delta_zero_kernel() -> Result<Vec<Instance>> {
    let mut cases = vec![
        ("T(k)".to_string(), te(&corpus::algebra("k")?)),
        ("T(A2)".to_string(), te(&corpus::algebra("a2")?)),
        ("T(k[x]/x^2)".to_string(), te(&corpus::algebra("dualnumbers")?)),
        ("A2[e]".to_string(), SplitAlgebra::dual_numbers_extension(&corpus::algebra("a2")?)),
    ];
    for name in corpus::SPLITS {
        cases.push((name.to_string(), corpus::split(name)?));
    }
    let mut out = Vec::new();
    for (name, lambda) in cases {
        let k = delta0_kernel(&lambda)?;
        let expected = lambda.base().center().intersect(&lambda.ideal().symmetric_actors()?);
        out.push(Instance::judged(name, &[k.dim()], &[expected.dim()], k.same_as(&expected)));
    }
    Ok(out)
}

fn bidegree() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let cases = [
        ("T(k)", te(&corpus::algebra("k")?), 3),
        ("T(A2)", te(&corpus::algebra("a2")?), 2),
        ("twisted-dualnumbers", corpus::split("twisted-dualnumbers")?, 3),
        ("kkk", corpus::split("kkk")?, 3),
    ];
    for (name, lambda, n) in cases {
        let les = assemble_les(&lambda, n)?;
        let blocks = les.blocks.as_ref().expect("square zero");
        let off: usize = blocks.iter().map(|b| b.off_bidegree().len()).sum();
        let into_zero: usize = blocks
            .iter()
            .flat_map(|b| &b.blocks)
            .filter(|b| b.to.0 == 0 && b.rank > 0)
            .count();
        out.push(Instance::equal(format!("{name}, n <= {n}: nonzero off-bidegree blocks"), &[off], &[0]));
        out.push(Instance::equal(format!("{name}, n <= {n}: blocks into column 0"), &[into_zero], &[0]));
    }
    Ok(out)
}

fn random_cochain(rng: &mut ChaCha8Rng, field: Field, len: usize) -> SparseVec {
    let mut pairs = Vec::new();
    for i in 0..len {
        if rng.gen_bool(0.3) {
            pairs.push((i, field.from_int(rng.gen_range(-3..=3))));
        }
    }
    SparseVec::from_pairs(field, pairs)
}

/// `d(f ⌣ g) = df ⌣ g + (−1)^n f ⌣ dg` for random `M`- and `Λ/M`-valued
/// cochains paired by `m ⊗ a ↦ m a`.
pub fn leibniz_holds(lambda: &SplitAlgebra, n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<bool> {
    let f = lambda.field();
    let seq = lambda.ses_bimodules()?;
    let total = lambda.total();
    let l = total.dim();
    let (da, dm) = (lambda.dim_a(), lambda.dim_m());
    let mu = Pairing::from_fn(f, dm, da, dm, |x, a| lambda.ideal().right_basis(x, a).clone());
    let a = random_cochain(rng, f, l.pow(n as u32) * dm);
    let b = random_cochain(rng, f, l.pow(m as u32) * da);
    let lhs = apply_coboundary(total, &seq.sub, n + m, &cup(l, &a, m, &b, &mu));
    let da_ = apply_coboundary(total, &seq.sub, n, &a);
    let db_ = apply_coboundary(total, &seq.quotient, m, &b);
    let s = f.from_int(if n % 2 == 0 { 1 } else { -1 });
    let rhs = cup(l, &da_, m, &b, &mu).add_scaled(f, &s, &cup(l, &a, m + 1, &db_, &mu));
    Ok(lhs == rhs)
}

fn cup_formula(seed: u64) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (name, lambda) in [("T(k)", te(&corpus::algebra("k")?)), ("T(A2)", te(&corpus::algebra("a2")?))] {
        let seq = lambda.ses_bimodules()?;
        let quot = decompose_bigraded(&lambda, &seq.quotient, 3)?;
        for n in 0..=3 {
            let bnd = boundaries(lambda.total(), &seq.sub, n);
            let (mut agree, mut reps) = (0, 0);
            for p in 0..=n {
                for rep in quot.column_complex(p)?.cohomology_basis(n - p).reps() {
                    let phi = quot.embed(p, n - p, rep);
                    let snake = connecting_via_snake(&lambda, n, &phi)?;
                    let formula = connecting_via_cup(&lambda, n, &phi)?;
                    agree += bnd.contains(&snake.sub(lambda.field(), &formula)) as usize;
                    reps += 1;
                }
            }
            out.push(Instance::equal(format!("{name}, n = {n}: classes agreeing"), &[agree], &[reps]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = te(&corpus::algebra("k")?);
    let mut ok = 0;
    let mut total = 0;
    for n in 0..=2 {
        for m in 0..=(2 - n) {
            ok += leibniz_holds(&t, n, m, &mut rng)? as usize;
            total += 1;
        }
    }
    out.push(Instance::equal("T(k): Leibniz on random cochains, degrees <= 2", &[ok], &[total]));
    Ok(out)
}

/// Embeds a spot cochain into total indexing without building the bigraded complex.
fn embed_spot(lambda: &SplitAlgebra, dx: usize, p: usize, q: usize, v: &SparseVec) -> SparseVec {
    let ws = WordSpace::new(lambda.dim_a(), lambda.dim_m(), p + q);
    v.remap(lambda.field(), |i| Some(ws.join_index(p, q, i / dx) * dx + i % dx))
}

fn low_degree_deltas() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let cases = [
        ("k", corpus::algebra("k")?, None),
        ("A2", corpus::algebra("a2")?, Some((0, 0))),
        ("k[x]/x^2", corpus::algebra("dualnumbers")?, Some((2, 0))),
        ("F2[x]/x^2", corpus::algebra("dualnumbers-f2")?, Some((2, 2))),
        ("kronecker", corpus::algebra("kronecker")?, None),
    ];
    for (name, a, expected) in cases {
        let r = delta10_bilinear(&te(&a))?;
        out.push(Instance::flag(format!("{name}: (d^(1,0) phi)(f,g)(1) = b + b^t"), r.identity_holds));
        out.push(Instance::equal(format!("{name}: dim Alt = dim ker d^(1,0)"), &[r.alt_dim], &[r.kernel_dim]));
        if let Some((h, alt)) = expected {
            out.push(Instance::equal(format!("{name}: (dim Hom(DA,A), dim Alt)"), &[r.hom_dim, r.alt_dim], &[h, alt]));
        }
    }
    for p in 1..=2 {
        let t = te(&corpus::algebra("dualnumbers")?);
        let quot = t.quotient_bimodule();
        let reps = column_complex_direct(&t, &quot, p, 0)?.cohomology_basis(0).reps().to_vec();
        let mut agree = 0;
        for rep in &reps {
            let phi = embed_spot(&t, quot.dim(), p, 0, rep);
            let (expected, actual) = cyclic_delta_p0(&t, p, &phi)?;
            agree += (expected == actual) as usize;
        }
        out.push(Instance::equal(
            format!("k[x]/x^2: d^({p},0) = t phi + (-1)^(p+1) phi"),
            &[agree],
            &[reps.len()],
        ));
    }
    Ok(out)
}

/// `(dim H¹(TA,TA), [dim A^A, dim H_1(A,A), dim H¹(A,A), dim Alt_A(DA)])`.
pub fn h1_summands(a: &Arc<Algebra>) -> Result<(usize, [usize; 4])> {
    let t = te(a);
    let direct = self_cohomology(t.total(), 1)?[1];
    let center = a.center().dim();
    let h1 = self_homology(a, 1)?[1];
    let hc1 = self_cohomology(a, 1)?[1];
    let alt = delta10_bilinear(&t)?.alt_dim;
    Ok((direct, [center, h1, hc1, alt]))
}

fn h1_trivial_extension() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for name in ["k", "a2", "a3", "kronecker", "dualnumbers", "dualnumbers-f2"] {
        let a = corpus::algebra(name)?;
        let (direct, parts) = h1_summands(&a)?;
        out.push(
            Instance::equal(name, &[direct], &[parts.iter().sum()])
                .with_note(format!("center {} + H_1 {} + H^1 {} + Alt {}", parts[0], parts[1], parts[2], parts[3])),
        );
    }
    // TA ≅ A ⊗ k[ε] for A = k[x]/x²: the Künneth count
    let a = corpus::algebra("dualnumbers")?;
    let ha = self_cohomology(&a, 1)?;
    let he = self_cohomology(&Algebra::dual_numbers(q()), 1)?;
    let kunneth = ha[0] * he[1] + ha[1] * he[0];
    let direct = self_cohomology(te(&a).total(), 1)?[1];
    out.push(Instance::equal("k[x]/x^2 via Kunneth", &[direct, kunneth], &[4, 4]));
    Ok(out)
}

fn nonvanishing_h1() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for name in corpus::ALGEBRAS {
        let a = corpus::algebra(name)?;
        let h1 = self_cohomology(te(&a).total(), 1)?[1];
        let c = a.center().dim();
        out.push(Instance::judged(*name, &[h1, c], &[c, 1], h1 >= c && c >= 1));
    }
    Ok(out)
}

fn direct_summand() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (name, n) in [("a2", 2), ("dualnumbers", 3)] {
        let a = corpus::algebra(name)?;
        let t = te(&a);
        let ht = self_cohomology(t.total(), n)?;
        let ha = self_cohomology(&a, n)?;
        let hh = self_homology(&a, n)?;
        for d in 1..=n {
            out.push(Instance::judged(
                format!("{name}, n = {d}: H^n(TA) >= H^n(A) + H_n(A)"),
                &[ht[d]],
                &[ha[d] + hh[d]],
                ht[d] >= ha[d] + hh[d],
            ));
        }
        let les = assemble_les(&t, n)?;
        let blocks: Vec<_> = les.blocks.unwrap_or_default().into_iter().flat_map(|b| b.blocks).collect();
        let d0q = blocks.iter().filter(|b| b.from.0 == 0 && b.to.0 == 1 && b.rank > 0).count();
        let col0 = blocks.iter().filter(|b| b.to.0 == 0 && b.rank > 0).count();
        out.push(Instance::equal(format!("{name}: nonzero d^(0,q) blocks"), &[d0q], &[0]));
        out.push(Instance::equal(format!("{name}: H^q(A,DA) meets Im d"), &[col0], &[0]));
    }
    Ok(out)
}

fn nullhomotopy() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for name in corpus::ALGEBRAS {
        let a = corpus::algebra(name)?;
        let t = te(&a);
        let reg = Bimodule::regular(&a);
        for qd in 1..=2 {
            let cocycles = coboundary_matrix(&a, &reg, qd).kernel_basis();
            let mut ok = 0;
            for z in &cocycles {
                ok += check_nullhomotopy(&t, qd, z)? as usize;
            }
            out.push(Instance::equal(format!("{name}, q = {qd}"), &[ok], &[cocycles.len()]));
        }
    }
    Ok(out)
}

fn one_way() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (name, h1a) in [("a2", 0), ("a3", 0), ("kronecker", 3)] {
        let a = corpus::algebra(name)?;
        let cert = IdempotentSystem::of(&a).is_one_way(&a);
        let reg = Bimodule::regular(&a);
        let hom = hom_bimodule(&reg.dual(), &reg)?.dim();
        let hh1 = self_homology(&a, 1)?[1];
        let hc1 = self_cohomology(&a, 1)?[1];
        let direct = self_cohomology(te(&a).total(), 1)?[1];
        out.push(Instance::equal(
            name,
            &[cert.holds as usize, hom, hh1, a.center().dim(), hc1, direct],
            &[1, 0, 0, 1, h1a, 1 + h1a],
        ));
    }
    let m2 = corpus::algebra("m2")?;
    let cert = IdempotentSystem::of(&m2).is_one_way(&m2);
    out.push(
        Instance::equal("m2 (control)", &[cert.holds as usize], &[0])
            .with_note(cert.violation.unwrap_or_default()),
    );
    Ok(out)
}

/// `H^n(A[ε])` directly and from the formula in terms of `H^i(A)`.
pub fn dual_numbers_formula(a: &Arc<Algebra>, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let direct = self_cohomology(SplitAlgebra::dual_numbers_extension(a).total(), n)?;
    let h = self_cohomology(a, n)?;
    let formula = (0..=n)
        .map(|d| {
            let prefix: usize = h[..=d].iter().sum();
            if a.field().characteristic() == 2 {
                2 * prefix
            } else {
                h[d] + prefix
            }
        })
        .collect();
    Ok((direct, formula))
}

fn dual_numbers_dims() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let f2 = Field::prime(2)?;
    let cases = [
        ("k over Q", corpus::algebra("k")?, 3, vec![2, 1, 1, 1]),
        ("A2 over Q", corpus::algebra("a2")?, 2, vec![2, 1, 1]),
        ("k over F2", corpus::algebra_over("k", f2)?, 2, vec![2, 2, 2]),
        ("A2 over F2", corpus::algebra_over("a2", f2)?, 2, vec![2, 2, 2]),
    ];
    for (name, a, n, expected) in cases {
        let (direct, formula) = dual_numbers_formula(&a, n)?;
        out.push(Instance::judged(name, &direct, &formula, direct == formula && direct == expected));
    }
    // Künneth against the tensor product k[ε] ⊗ A computed from scratch
    let a2 = corpus::algebra("a2")?;
    let eps = Algebra::dual_numbers(q());
    let tensor = eps.tensor(&a2)?;
    let (ha, he, ht) = (self_cohomology(&a2, 2)?, self_cohomology(&eps, 2)?, self_cohomology(&tensor, 2)?);
    let kunneth: Vec<usize> = (0..=2).map(|n| (0..=n).map(|p| ha[p] * he[n - p]).sum()).collect();
    out.push(Instance::equal("A2 (x) k[e] via Kunneth", &ht, &kunneth));
    Ok(out)
}

/// `(true dims, all-deltas-zero prediction, δ ranks)` for `k[ε] = T(k)`.
pub fn delta_prediction(field: Field, n: usize) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let k = Arc::new(Algebra::ground(field));
    let t = te(&k);
    let actual = self_cohomology(t.total(), n)?;
    let h = self_cohomology(&k, n)?;
    let predicted = (0..=n).map(|d| 2 * h[..=d].iter().sum::<usize>()).collect();
    let deltas = assemble_les(&t, n)?.deltas();
    Ok((actual, predicted, deltas))
}

fn not_all_deltas_zero() -> Result<Vec<Instance>> {
    let (actual, predicted, deltas) = delta_prediction(q(), 3)?;
    let differs = actual.iter().zip(&predicted).any(|(a, p)| a != p);
    let some_delta = deltas.iter().any(|&d| d > 0);
    let mut out = vec![Instance::judged(
        "k[e] over Q: prediction differs",
        &actual,
        &predicted,
        differs && actual[1] == 1 && predicted[1] == 2,
    )
    .with_note("n = 1: predicted 2, actual 1")];
    out.push(Instance::judged("k[e] over Q: delta ranks", &deltas, &[], some_delta && deltas[0] == 0));
    let (actual, predicted, _) = delta_prediction(Field::prime(2)?, 3)?;
    out.push(Instance::equal("k[e] over F2: prediction matches", &actual, &predicted));
    Ok(out)
}

fn triangular_sequence() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let k = corpus::algebra("k")?;
    let a2 = corpus::algebra("a2")?;
    let simple = SplitAlgebra::simple_right(&a2, 1)?;
    let kk = simple.left().clone();
    let cases = [
        ("(k, k, k)", k.clone(), k.clone(), Bimodule::regular(&k), 3),
        ("A2 one-point, simple at sink", a2.clone(), kk.clone(), simple.clone(), 2),
        ("A2 x k, M = 0", a2.clone(), kk.clone(), Bimodule::zero(&kk, &a2), 2),
    ];
    for (name, a, b, m, n) in cases {
        let (r, _) = triangular_les(&a, &b, &m, n)?;
        out.push(
            Instance::judged(
                format!("{name}, n <= {n}"),
                &[r.les_exact, r.identifications, r.dimension_identity, r.vanishing.pass(), r.corners].map(|x| x as usize),
                &[1, 1, 1, 1, 1],
                r.pass(),
            )
            .with_note(format!("H(T,T) {:?}, H(A)+H(B) {:?}, Ext(M,M) {:?}, delta {:?}", r.h_t, r.h_ab, r.ext_mm, r.delta)),
        );
        if name == "(k, k, k)" {
            out.push(Instance::equal("(k, k, k): H^0(T,T), H^1(T,T), rank delta^0", &[r.h_t[0], r.h_t[1], r.delta[0]], &[1, 0, 1]));
        }
        if m.dim() == 0 {
            out.push(Instance::equal("M = 0: H(T,T) = H(A) + H(B)", &r.h_t, &r.h_ab));
        }
    }
    Ok(out)
}

fn triangular_cup() -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let k = corpus::algebra("k")?;
    let kr = corpus::algebra("kronecker")?;
    let a2 = corpus::algebra("a2")?;
    let s_a2 = SplitAlgebra::simple_right(&a2, 1)?;
    let s_kr = SplitAlgebra::simple_right(&kr, 1)?;
    let cases = [
        ("(k, k, k)", k.clone(), k.clone(), Bimodule::regular(&k), 2),
        ("A2 one-point", a2.clone(), s_a2.left().clone(), s_a2.clone(), 1),
        ("Kronecker one-point", kr.clone(), s_kr.left().clone(), s_kr.clone(), 1),
    ];
    for (name, a, b, m, n) in cases {
        let rows = triangular_delta_cup(&a, &b, &m, n)?;
        for r in rows {
            out.push(Instance::judged(
                format!("{name}, n = {}", r.degree),
                &[r.checked_a, r.checked_b],
                &[],
                r.pass,
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_an_input_error() {
        assert!(matches!(verify("bogus-id", &SuiteConfig::default()), Err(Error::Input(_))));
    }

    #[test]
    fn cheap_verdicts_pass() {
        for id in ["prop-2.1", "thm-5.3", "thm-5.9", "sec5-nonzero-delta"] {
            let v = verify(id, &SuiteConfig::default()).unwrap();
            assert!(v.overall, "{v:#?}");
        }
    }

    #[test]
    fn delta0_kernel_of_twisted_dual_numbers() {
        let s = corpus::split("twisted-dualnumbers").unwrap();
        assert_eq!(delta0_kernel(&s).unwrap().dim(), 1);
    }
}
