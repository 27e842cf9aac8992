//! `oracle-diff`: two methods for one quantity, side by side.

use cylindric::partitions::iter_family;
use cylindric::tableaux::{cylindric_schur, csyt_count, SchurMethod};
use cylindric::walks_matchings::{enumerate_vt, ncnn_bessel_count, ncnn_count, vt_count, Half, VtVariant};
use cylindric::Error;
use num_bigint::BigInt;
use serde_json::Value;

use crate::count::csyt_method;
use cylindric_cli::grid::{parse_list, product, run_cells};
use crate::report::{Report, Row};
use crate::{normalize, row, CliResult, Ctx, OracleArgs};

fn list(v: &Option<String>, flag: &str) -> CliResult<Vec<usize>> {
    parse_list(v.as_deref().ok_or_else(|| format!("--{flag} is required for this quantity"))?)
        .map_err(|e| format!("--{flag}: {e}"))
}

fn pair(methods: &str, allowed: &[&str]) -> CliResult<(String, String)> {
    let parts: Vec<String> = methods.split(',').map(normalize).collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("--methods takes two comma-separated names, got {methods:?}"));
    };
    for m in [a, b] {
        if !allowed.contains(&m.as_str()) {
            return Err(format!("method {m:?} does not apply here; choose from {}", allowed.join(", ")));
        }
    }
    Ok((a.clone(), b.clone()))
}

/// A value for one cell, or `None` when the method does not cover it.
type Outcome = Option<BigInt>;

fn skip_unsupported(r: Result<BigInt, Error>) -> CliResult<Outcome> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Unsupported(_)) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn compare(mut params: Row, a: Outcome, b: Outcome) -> Row {
    match (a, b) {
        (Some(x), Some(y)) => {
            params.insert("diff".into(), Value::from((&x - &y).to_string()));
            params.insert("a".into(), Value::from(x.to_string()));
            params.insert("b".into(), Value::from(y.to_string()));
        }
        _ => {
            params.insert("skipped".into(), Value::Bool(true));
        }
    }
    params
}

fn vt_variants(v: &Option<String>) -> CliResult<Vec<VtVariant>> {
    match v {
        None => Ok(VtVariant::ALL.to_vec()),
        Some(s) => s.split(',').map(|x| x.trim().parse().map_err(|e: Error| e.to_string())).collect(),
    }
}

type Cell = Box<dyn Fn() -> CliResult<Row> + Send + Sync>;

pub fn oracle_diff(a: &OracleArgs, ctx: &Ctx) -> CliResult<Report> {
    let mut cells: Vec<Cell> = Vec::new();
    match normalize(&a.quantity).as_str() {
        "csyt" => {
            let (ma, mb) = pair(&a.methods, &["chain_dp", "brute", "factorial_formula"])?;
            let (ma, mb) = (csyt_method(&ma)?, csyt_method(&mb)?);
            for p in product(&[list(&a.n, "n")?, list(&a.h, "h")?, list(&a.w, "w")?]) {
                cells.push(Box::new(move || {
                    let x = skip_unsupported(csyt_count(p[0], p[1], p[2], ma))?;
                    let y = skip_unsupported(csyt_count(p[0], p[1], p[2], mb))?;
                    Ok(compare(row!("n" => p[0], "h" => p[1], "w" => p[2]), x, y))
                }));
            }
        }
        "ncnn" => {
            let (ma, mb) = pair(&a.methods, &["enumeration", "bessel"])?;
            for p in product(&[list(&a.n, "n")?, list(&a.h, "h")?, list(&a.w, "w")?]) {
                let (ma, mb) = (ma.clone(), mb.clone());
                cells.push(Box::new(move || {
                    let (n, h, w) = (p[0], p[1], p[2]);
                    let by = |m: &str| match m {
                        "bessel" => ncnn_bessel_count(n, h, w),
                        _ => ncnn_count(n, Some(Half::int(h as u32 + 1)), Some(Half::int(w as u32 + 1))),
                    };
                    Ok(compare(row!("n" => n, "h" => h, "w" => w), Some(by(&ma)), Some(by(&mb))))
                }));
            }
        }
        "vt" => {
            let (ma, mb) = pair(&a.methods, &["dp", "enumeration"])?;
            for v in vt_variants(&a.variant)? {
                for p in product(&[list(&a.n, "n")?, list(&a.h, "h")?, list(&a.w, "w")?]) {
                    let (ma, mb) = (ma.clone(), mb.clone());
                    cells.push(Box::new(move || {
                        let (n, h, w) = (p[0], p[1], Some(p[2]));
                        let by = |m: &str| match m {
                            "dp" => vt_count(n, h, w, v),
                            _ => BigInt::from(enumerate_vt(n, h, w, v).len()),
                        };
                        Ok(compare(row!("variant" => v.name(), "n" => n, "h" => h, "w" => p[2]), Some(by(&ma)), Some(by(&mb))))
                    }));
                }
            }
        }
        "schur" => {
            let (ma, mb) = pair(&a.methods, &["tableaux", "jacobi_trudi"])?;
            let method = |m: &str| if m == "tableaux" { SchurMethod::Tableaux } else { SchurMethod::JacobiTrudi };
            let (ma, mb) = (method(&ma), method(&mb));
            for p in product(&[list(&a.h, "h")?, list(&a.w, "w")?, list(&a.vars, "vars")?, list(&a.deg, "deg")?]) {
                for lambda in iter_family(p[0], Some(p[1]), p[3]) {
                    let p = p.clone();
                    cells.push(Box::new(move || {
                        let (h, w, n) = (p[0], p[1], p[2]);
                        let eval = |m| -> CliResult<_> {
                            let v = cylindric_schur(&lambda, h, w, m, n, None).map_err(|e| e.to_string())?;
                            Ok(v.to_monomial(None))
                        };
                        let (x, y) = (eval(ma)?, eval(mb)?);
                        let equal = x == y;
                        Ok(row!("lambda" => lambda.to_string(), "h" => h, "w" => w, "vars" => n,
                            "terms_a" => x.terms().len(), "terms_b" => y.terms().len(), "diff" => if equal { "0" } else { "nonzero" }))
                    }));
                }
            }
        }
        other => return Err(format!("unknown quantity {other:?}; choose csyt, ncnn, vt or schur")),
    }
    if cells.is_empty() {
        return Err("the grid has no cells".into());
    }
    let rows: Vec<Row> = run_cells(&cells, ctx.workers, |c| c()).into_iter().collect::<CliResult<_>>()?;
    let failed = rows.iter().any(|r| r.get("diff").is_some_and(|d| d != "0"));
    let compared = rows.iter().filter(|r| r.contains_key("diff")).count();
    let nonzero = rows.iter().filter(|r| r.get("diff").is_some_and(|d| d != "0")).count();
    let summary = format!("{compared} cells compared, {} skipped, {nonzero} nonzero diffs", rows.len() - compared);
    Ok(Report { rows, text: Some(vec![summary]), failed })
}
