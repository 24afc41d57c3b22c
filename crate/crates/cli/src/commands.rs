use std::path::Path;
use std::sync::Arc;

use hh_core::connect::{assemble_les, BidegreeBlocks, LesRow};
use hh_core::corpus;
use hh_core::ext::ext_bimodule_dims;
use hh_core::hochschild::{decompose_bigraded, default_degree_cap, hochschild_complex, hochschild_homology_dims};
use hh_core::io::{parse_input, parse_split, BimoduleFile, Input};
use hh_core::split::SplitAlgebra;
use hh_core::theorems::{self, SuiteConfig, Verdict, THEOREM_IDS};
use hh_core::{Algebra, Bimodule, Error, Field, Result};
use serde::Serialize;

use crate::report::{bigraded_table, dims_output, json, Output, Report};
use crate::{AlgebraArgs, Common, ExtArgs, Format, SplitArgs, VerifyArgs};

/// Verification failures exit 1, everything else the caller got wrong exits 2.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Consistency(_) => 1,
        _ => 2,
    }
}

/// A path if one exists, otherwise a corpus entry.
fn read_source(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if p.is_file() {
        return std::fs::read_to_string(p).map_err(|e| Error::Input(format!("{arg}: {e}")));
    }
    corpus::source(arg)
}

fn field_override(c: &Common) -> Result<Option<Field>> {
    c.field.as_deref().map(Field::from_label).transpose()
}

fn load_algebra(algebra: &Option<String>, quiver: &Option<String>, over: Option<Field>) -> Result<(String, Arc<Algebra>)> {
    let name = algebra.as_ref().or(quiver.as_ref()).expect("clap requires one");
    let text = read_source(name)?;
    if quiver.is_some() && !text.contains("\"vertices\"") {
        return Err(Error::Input(format!("{name} is not a quiver file")));
    }
    let alg = match parse_input(&text, over)? {
        Input::Algebra(a) => a,
        Input::Split(s) => s.total().clone(),
        Input::Triangular(a, b, m) => SplitAlgebra::triangular(&a, &b, &m)?.total().clone(),
    };
    Ok((name.clone(), alg))
}

fn bimodule_arg(a: &Arc<Algebra>, spec: &str) -> Result<Bimodule> {
    match spec {
        "self" => Ok(Bimodule::regular(a)),
        "dual" => Ok(Bimodule::regular(a).dual()),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
            let file: BimoduleFile = serde_json::from_str(&text).map_err(|e| Error::Input(format!("{path}: {e}")))?;
            file.build(a, a)
        }
    }
}

fn degree(c: &Common, dim: usize) -> usize {
    c.max_degree.map(|n| n as usize).unwrap_or_else(|| default_degree_cap(dim))
}

fn envelope<T: Serialize>(command: &'static str, input: String, field: Field, c: &Common, n: usize, body: T) -> Report<T> {
    Report {
        command,
        input,
        field: field.label(),
        seed: c.seed,
        max_degree: n,
        body,
    }
}

#[derive(Serialize)]
struct Dims {
    coefficients: String,
    dims: Vec<usize>,
}

pub fn cohomology(args: &AlgebraArgs) -> Result<Output> {
    let (name, a) = load_algebra(&args.algebra, &args.quiver, field_override(&args.common)?)?;
    let x = bimodule_arg(&a, &args.coeff)?;
    let n = degree(&args.common, a.dim());
    let dims = hochschild_complex(&a, &x, n)?.cohomology_dims();
    let body = Dims { coefficients: args.coeff.clone(), dims: dims.clone() };
    let r = envelope("cohomology", name, a.field(), &args.common, n, body);
    Ok(dims_output(&r, &dims, args.common.format))
}

pub fn homology(args: &AlgebraArgs) -> Result<Output> {
    let (name, a) = load_algebra(&args.algebra, &args.quiver, field_override(&args.common)?)?;
    let x = bimodule_arg(&a, &args.coeff)?;
    let n = degree(&args.common, a.dim());
    let dims = hochschild_homology_dims(&a, &x, n)?;
    let body = Dims { coefficients: args.coeff.clone(), dims: dims.clone() };
    let r = envelope("homology", name, a.field(), &args.common, n, body);
    Ok(dims_output(&r, &dims, args.common.format))
}

#[derive(Serialize)]
struct ExtBody {
    module: String,
    coefficients: String,
    dims: Vec<usize>,
}

pub fn ext(args: &ExtArgs) -> Result<Output> {
    let (name, a) = load_algebra(&args.algebra, &args.quiver, field_override(&args.common)?)?;
    let y = bimodule_arg(&a, &args.module)?;
    let x = bimodule_arg(&a, &args.coeff)?;
    let n = degree(&args.common, a.dim());
    let dims = ext_bimodule_dims(&y, &x, n)?;
    let body = ExtBody { module: args.module.clone(), coefficients: args.coeff.clone(), dims: dims.clone() };
    let r = envelope("ext", name, a.field(), &args.common, n, body);
    Ok(dims_output(&r, &dims, args.common.format))
}

fn load_split(args: &SplitArgs) -> Result<SplitAlgebra> {
    parse_split(&read_source(&args.split)?, field_override(&args.common)?)
}

#[derive(Serialize)]
struct DoubleComplexBody {
    coefficients: String,
    square_zero: bool,
    /// `columns[p][q] = dim H^q(C^p(X))`
    columns: Vec<Vec<usize>>,
    /// `None` when the ideal does not square to zero
    horizontal_zero: Option<bool>,
    blocks: Option<Vec<BidegreeBlocks>>,
}

pub fn double_complex(args: &SplitArgs) -> Result<Output> {
    let lambda = load_split(args)?;
    let x = match args.coeff.as_str() {
        "quotient" => lambda.quotient_bimodule(),
        "ideal" => lambda.ideal_bimodule(),
        "self" => lambda.regular(),
        other => return Err(Error::Input(format!("coefficients must be quotient, ideal or self, not {other:?}"))),
    };
    let n = degree(&args.common, lambda.total().dim());
    let bc = decompose_bigraded(&lambda, &x, n)?;
    let columns = (0..=n)
        .map(|p| Ok(bc.column_complex(p)?.cohomology_dims()))
        .collect::<Result<Vec<_>>>()?;
    let sz = lambda.square_zero();
    let horizontal_zero = sz.then(|| bc.horizontal_vanishes());
    let blocks = if sz { assemble_les(&lambda, n)?.blocks } else { None };
    let body = DoubleComplexBody {
        coefficients: args.coeff.clone(),
        square_zero: sz,
        columns,
        horizontal_zero,
        blocks,
    };
    let verified = horizontal_zero != Some(false);
    let text = match args.common.format {
        Format::Json => json(&envelope("double-complex", args.split.clone(), lambda.field(), &args.common, n, &body)),
        Format::Csv => {
            let mut s = String::from("p,q,dim\n");
            for (p, col) in body.columns.iter().enumerate() {
                for (q, d) in col.iter().enumerate() {
                    s += &format!("{p},{q},{d}\n");
                }
            }
            s
        }
        Format::Text => {
            let mut s = bigraded_table(&body.columns);
            s += &match horizontal_zero {
                Some(true) => "d_h = 0: pass\n".to_string(),
                Some(false) => "d_h = 0: FAIL\n".to_string(),
                None => "d_h = 0: not applicable (M^2 != 0)\n".to_string(),
            };
            for b in body.blocks.iter().flatten().flat_map(|b| &b.blocks).filter(|b| b.rank > 0) {
                s += &format!("delta {:?} -> {:?}: rank {}\n", b.from, b.to, b.rank);
            }
            s
        }
    };
    Ok(Output { text, verified })
}

#[derive(Serialize)]
struct LesBody<'a> {
    exact: bool,
    rows: &'a [LesRow],
    blocks: &'a Option<Vec<BidegreeBlocks>>,
}

pub fn les(args: &SplitArgs) -> Result<Output> {
    let lambda = load_split(args)?;
    let n = degree(&args.common, lambda.total().dim());
    let r = assemble_les(&lambda, n)?;
    let exact = r.exact();
    let text = match args.common.format {
        Format::Json => {
            let body = LesBody { exact, rows: &r.rows, blocks: &r.blocks };
            json(&envelope("les", args.split.clone(), lambda.field(), &args.common, n, body))
        }
        Format::Csv | Format::Text => {
            let sep = if args.common.format == Format::Csv { "," } else { " " };
            let mut s = ["n", "H(M)", "H(L)", "H(L/M)", "rank_i", "rank_p", "rank_delta", "exact"].join(sep);
            s.push('\n');
            for row in &r.rows {
                let cells = [row.degree, row.sub, row.middle, row.quotient, row.rank_inclusion, row.rank_projection, row.rank_delta];
                let mut line: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
                line.push(row.exact.iter().all(|&e| e).to_string());
                s += &line.join(sep);
                s.push('\n');
            }
            if args.common.format == Format::Text {
                s += if exact { "exact: pass\n" } else { "exact: FAIL\n" };
            }
            s
        }
    };
    Ok(Output { text, verified: exact })
}

#[derive(Serialize)]
struct SuiteBody<'a> {
    seed: u64,
    overall: bool,
    verdicts: &'a [Verdict],
}

pub fn verify(args: &VerifyArgs) -> Result<Output> {
    let cfg = SuiteConfig { seed: args.seed };
    let verdicts = if args.theorem == "all" {
        THEOREM_IDS.iter().map(|id| theorems::verify(id, &cfg)).collect::<Result<Vec<_>>>()?
    } else {
        vec![theorems::verify(&args.theorem, &cfg)?]
    };
    let overall = verdicts.iter().all(|v| v.overall);
    let as_json = if args.theorem == "all" {
        json(&SuiteBody { seed: args.seed, overall, verdicts: &verdicts })
    } else {
        json(&verdicts[0])
    };
    if let Some(path) = &args.out {
        std::fs::write(path, &as_json).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    let text = match args.format {
        Format::Json => as_json,
        Format::Csv => {
            let mut s = String::from("theorem,instance,computed,expected,pass,applicable\n");
            for v in &verdicts {
                for i in &v.instances {
                    s += &format!(
                        "{},\"{}\",{},{},{},{}\n",
                        v.theorem_id,
                        i.name,
                        joined_i(&i.computed),
                        joined_i(&i.expected),
                        i.pass,
                        i.applicable
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for v in &verdicts {
                s += &format!("{} {}\n", if v.overall { "PASS" } else { "FAIL" }, v.theorem_id);
                for i in &v.instances {
                    let tag = match (i.applicable, i.pass) {
                        (false, _) => "n/a ",
                        (true, true) => "ok  ",
                        (true, false) => "FAIL",
                    };
                    s += &format!("  {tag} {}: [{}] vs [{}]", i.name, joined_i(&i.computed), joined_i(&i.expected));
                    if let Some(n) = &i.note {
                        s += &format!("  ({n})");
                    }
                    s.push('\n');
                }
            }
            s += &format!("seed {}\n", args.seed);
            s
        }
    };
    Ok(Output { text, verified: overall })
}

fn joined_i(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
