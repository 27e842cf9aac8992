//! `verify`: every checkable identity, evaluated cell by cell.

use cylindric::epoly::{monomial_expand, verify_gordon, verify_minor_summation, GordonVariant, Matrix, Parity};
use cylindric::littlewood::{
    check_framework_conditions, general_pfaffian_sum, lhs_sum, rhs_det, structure_matrix, verify_identity,
    verify_section5, IdentityId, StructureKind,
};
use cylindric::partitions::iter_family;
use cylindric::paths_h1::{h1_sides, H1Check};
use cylindric::tableaux::{crst_generating_function, csyt_count, jacobi_trudi_sum, CsytMethod};
use cylindric::updown::{verify_updown, UpdownCheck};
use cylindric::walks_matchings::{correspondence_sides, Correspondence};
use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use cylindric_cli::grid::{parse_list, product, run_cells};
use crate::report::{Report, Row};
use crate::{normalize, row, CliResult, Ctx, VerifyArgs};

enum Check {
    Littlewood(IdentityId),
    Correspondence(Correspondence),
    Paths(H1Check),
    Updown(UpdownCheck),
    CsytTranspose,
    Schur,
    Degeneration,
    Framework,
    PfaffianSum,
    Section5,
    Gordon,
    MinorSummation,
}

fn parse_check(s: &str) -> CliResult<Check> {
    let key = normalize(s);
    let named = match key.as_str() {
        "csyt_transpose" => Some(Check::CsytTranspose),
        "schur" => Some(Check::Schur),
        "degeneration" => Some(Check::Degeneration),
        "framework" => Some(Check::Framework),
        "pfaffian_sum" => Some(Check::PfaffianSum),
        "section5" => Some(Check::Section5),
        "gordon" => Some(Check::Gordon),
        "minor_summation" => Some(Check::MinorSummation),
        _ => None,
    };
    named
        .or_else(|| key.parse().ok().map(Check::Littlewood))
        .or_else(|| key.parse().ok().map(Check::Correspondence))
        .or_else(|| key.parse().ok().map(Check::Paths))
        .or_else(|| key.parse().ok().map(Check::Updown))
        .ok_or_else(|| format!("unknown identity {s:?}"))
}

fn list(v: &Option<String>, flag: &str) -> CliResult<Vec<usize>> {
    parse_list(v.as_deref().ok_or_else(|| format!("--{flag} is required for this identity"))?)
        .map_err(|e| format!("--{flag}: {e}"))
}

fn kinds(v: &Option<String>) -> CliResult<Vec<StructureKind>> {
    match v {
        None => Ok(StructureKind::ALL.to_vec()),
        Some(s) => s.split(',').map(|k| k.trim().parse().map_err(|e: cylindric::Error| e.to_string())).collect(),
    }
}

type Cell = Box<dyn Fn() -> CliResult<Row> + Send + Sync>;

fn sides_row(name: &str, params: Row, lhs: BigInt, rhs: BigInt) -> Row {
    let mut r = params;
    r.insert("identity".into(), Value::from(name));
    r.insert("equal".into(), Value::from(lhs == rhs));
    r.insert("lhs".into(), Value::from(lhs.to_string()));
    r.insert("rhs".into(), Value::from(rhs.to_string()));
    r
}

fn err(e: cylindric::Error) -> String {
    e.to_string()
}

fn cells(a: &VerifyArgs, check: Check, ctx: &Ctx) -> CliResult<Vec<Cell>> {
    let timings = ctx.timings;
    let mut out: Vec<Cell> = Vec::new();
    match check {
        Check::Littlewood(id) => {
            for p in product(&[list(&a.h, "h")?, list(&a.w, "w")?, list(&a.vars, "vars")?, list(&a.deg, "deg")?]) {
                out.push(Box::new(move || {
                    let mut rep = verify_identity(id, p[0], p[1], p[2], p[3] as u32).map_err(err)?;
                    if !timings {
                        rep.ms = 0;
                    }
                    match serde_json::to_value(&rep).expect("report serializes") {
                        Value::Object(m) => Ok(m),
                        _ => unreachable!("reports are objects"),
                    }
                }));
            }
        }
        Check::Correspondence(c) => {
            for p in product(&[list(&a.n, "n")?, list(&a.h, "h")?, list(&a.w, "w")?]) {
                out.push(Box::new(move || {
                    let (l, r) = correspondence_sides(c, p[0], p[1], p[2]).map_err(err)?;
                    Ok(sides_row(c.name(), row!("n" => p[0], "h" => p[1], "w" => p[2]), l, r))
                }));
            }
        }
        Check::Paths(c) => {
            for p in product(&[list(&a.n, "n")?, list(&a.w, "w")?]) {
                out.push(Box::new(move || {
                    let (l, r) = h1_sides(c, p[0], p[1]);
                    Ok(sides_row(c.name(), row!("n" => p[0], "w" => p[1]), l, r))
                }));
            }
        }
        Check::Updown(c) => {
            for p in product(&[list(&a.h, "h")?, list(&a.w, "w")?, list(&a.vars, "vars")?]) {
                out.push(Box::new(move || {
                    let ok = verify_updown(c, p[0], p[1], p[2]);
                    Ok(row!("identity" => c.name(), "h" => p[0], "w" => p[1], "vars" => p[2], "equal" => ok))
                }));
            }
        }
        Check::CsytTranspose => {
            for p in product(&[list(&a.n, "n")?, list(&a.h, "h")?, list(&a.w, "w")?]) {
                out.push(Box::new(move || {
                    let l = csyt_count(p[0], p[1], p[2], CsytMethod::ChainDp).map_err(err)?;
                    let r = csyt_count(p[0], p[2], p[1], CsytMethod::ChainDp).map_err(err)?;
                    Ok(sides_row("csyt_transpose", row!("n" => p[0], "h" => p[1], "w" => p[2]), l, r))
                }));
            }
        }
        Check::Schur => {
            for p in product(&[list(&a.h, "h")?, list(&a.w, "w")?, list(&a.vars, "vars")?, list(&a.deg, "deg")?]) {
                out.push(Box::new(move || {
                    let (h, w, n, d) = (p[0], p[1], p[2], p[3]);
                    let mut checked = 0usize;
                    let mut failures = Vec::new();
                    for lambda in iter_family(h, Some(w), d) {
                        let jt = jacobi_trudi_sum(&lambda, h, w, n, None).map_err(err)?;
                        let tab = crst_generating_function(&lambda, h, w, n, None).map_err(err)?;
                        checked += 1;
                        if monomial_expand(&jt, None) != tab {
                            failures.push(lambda.to_string());
                        }
                    }
                    Ok(row!("identity" => "schur", "h" => h, "w" => w, "vars" => n, "deg" => d,
                        "partitions" => checked, "failures" => failures.clone(), "equal" => failures.is_empty()))
                }));
            }
        }
        Check::Degeneration => {
            for id in IdentityId::AFFINE {
                for p in product(&[list(&a.h, "h")?, list(&a.vars, "vars")?, list(&a.deg, "deg")?]) {
                    out.push(Box::new(move || {
                        let (h, n, d) = (p[0], p[1], p[2] as u32);
                        let w = degenerate_width(id, h, d);
                        let c = id.classical_limit();
                        let lhs_ok = lhs_sum(id, h, w, n, d).map_err(err)? == lhs_sum(c, h, w, n, d).map_err(err)?;
                        let rhs_ok = rhs_det(id, h, w, n, d).map_err(err)? == rhs_det(c, h, w, n, d).map_err(err)?;
                        Ok(row!("identity" => "degeneration", "affine" => id.name(), "classical" => c.name(),
                            "h" => h, "w" => w, "vars" => n, "deg" => d, "equal" => lhs_ok && rhs_ok))
                    }));
                }
            }
        }
        Check::Framework => {
            for kind in kinds(&a.kind)? {
                for p in product(&[list(&a.m, "m")?, list(&a.w, "w")?]) {
                    let (m, w) = (p[0], p[1]);
                    let Ok(sm) = structure_matrix(kind, m, w) else { continue };
                    let bound = m as i64 + 2 * sm.period() + 2;
                    out.push(Box::new(move || {
                        let c = check_framework_conditions(kind, m, w, bound).map_err(err)?;
                        Ok(row!("identity" => "framework", "kind" => kind.name(), "m" => m, "w" => w,
                            "index_bound" => bound, "weights" => c.weights, "shift" => c.shift,
                            "congruence" => c.congruence, "equal" => c.all()))
                    }));
                }
            }
        }
        Check::PfaffianSum => {
            for kind in kinds(&a.kind)? {
                for p in product(&[list(&a.m, "m")?, list(&a.w, "w")?, list(&a.vars, "vars")?, list(&a.deg, "deg")?]) {
                    let (m, w, n, d) = (p[0], p[1], p[2], p[3] as u32);
                    if structure_matrix(kind, m, w).is_err() || m < 2 || kind.identity().rows(m / 2) != m {
                        continue;
                    }
                    out.push(Box::new(move || {
                        let pf = general_pfaffian_sum(kind, kind.border(), m, w, n, d).map_err(err)?;
                        let lhs = lhs_sum(kind.identity(), m / 2, w, n, d).map_err(err)?;
                        let factor = kind.scalar_factor(m);
                        let ok = pf == lhs.scale(&BigInt::from(factor));
                        Ok(row!("identity" => "pfaffian_sum", "kind" => kind.name(), "m" => m, "w" => w,
                            "vars" => n, "deg" => d, "factor" => factor, "equal" => ok))
                    }));
                }
            }
        }
        Check::Section5 => {
            for p in product(&[list(&a.h, "h")?, list(&a.big_n, "big-n")?, list(&a.vars, "vars")?, list(&a.deg, "deg")?]) {
                out.push(Box::new(move || {
                    let ok = verify_section5(p[0], p[1] as i64, p[2], p[3] as u32).map_err(err)?;
                    Ok(row!("identity" => "section5", "h" => p[0], "big_n" => p[1], "vars" => p[2], "deg" => p[3], "equal" => ok))
                }));
            }
        }
        Check::Gordon => {
            let mut rng = StdRng::seed_from_u64(ctx.seed);
            for trial in 0..a.trials {
                let inst = GordonInstance::random(&mut rng);
                out.push(Box::new(move || {
                    let z = |i: i64| inst.z(i);
                    let ok = verify_gordon(&z, inst.h, inst.variant);
                    Ok(row!("identity" => "gordon", "trial" => trial, "h" => inst.h,
                        "variant" => format!("{:?}", inst.variant), "equal" => ok))
                }));
            }
        }
        Check::MinorSummation => {
            let mut rng = StdRng::seed_from_u64(ctx.seed);
            for trial in 0..a.trials {
                let inst = MinorInstance::random(&mut rng);
                out.push(Box::new(move || {
                    let ok = verify_minor_summation(&inst.m, &inst.a, inst.parity, &BigInt::one()).map_err(err)?;
                    Ok(row!("identity" => "minor_summation", "trial" => trial, "rows" => inst.m.rows(),
                        "cols" => inst.m.cols(), "parity" => format!("{:?}", inst.parity), "equal" => ok))
                }));
            }
        }
    }
    Ok(out)
}

/// A spread bound large enough that the cylinder condition never bites
/// through degree `d`, even when the identity needs `w` even.
pub fn degenerate_width(id: IdentityId, h: usize, d: u32) -> usize {
    let w = d as usize + id.rows(h);
    let needs_even = matches!(id, IdentityId::D1 | IdentityId::D2 | IdentityId::D3 | IdentityId::D4);
    if needs_even && w % 2 == 1 {
        w + 1
    } else {
        w
    }
}

/// An odd integer sequence `z` given by its values at `1..=len`.
struct GordonInstance {
    h: usize,
    variant: GordonVariant,
    values: Vec<i64>,
}

impl GordonInstance {
    fn random(rng: &mut StdRng) -> Self {
        let h = rng.gen_range(1..=4);
        let variant = [GordonVariant::Base, GordonVariant::Var1, GordonVariant::Var2, GordonVariant::Var3][rng.gen_range(0..4)];
        let values = (0..4 * h + 2).map(|_| rng.gen_range(-9..=9)).collect();
        GordonInstance { h, variant, values }
    }

    fn z(&self, i: i64) -> BigInt {
        let v = match i.unsigned_abs() as usize {
            0 => 0,
            k => self.values.get(k - 1).copied().unwrap_or(0),
        };
        BigInt::from(if i < 0 { -v } else { v })
    }
}

struct MinorInstance {
    m: Matrix<BigInt>,
    a: Matrix<BigInt>,
    parity: Parity,
}

impl MinorInstance {
    fn random(rng: &mut StdRng) -> Self {
        let parity = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
        let border = usize::from(parity == Parity::Odd);
        let p = rng.gen_range(1..=5);
        let mut rows = rng.gen_range(1..=p);
        if (rows + border) % 2 == 1 {
            rows -= 1;
        }
        let m = Matrix::from_fn(rows, p, |_, _| BigInt::from(rng.gen_range(-4..=4)));
        let size = p + border;
        let mut upper = vec![vec![0i64; size]; size];
        for (i, r) in upper.iter_mut().enumerate() {
            for x in r.iter_mut().skip(i + 1) {
                *x = rng.gen_range(-3..=3);
            }
        }
        let a = Matrix::from_fn(size, size, |i, j| {
            BigInt::from(match i.cmp(&j) {
                std::cmp::Ordering::Less => upper[i][j],
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => -upper[j][i],
            })
        });
        MinorInstance { m, a, parity }
    }
}

pub fn verify(a: &VerifyArgs, ctx: &Ctx) -> CliResult<Report> {
    let check = parse_check(&a.identity)?;
    let cells = cells(a, check, ctx)?;
    if cells.is_empty() {
        return Err("the grid has no valid cells".into());
    }
    let rows: Vec<Row> = run_cells(&cells, ctx.workers, |c| c()).into_iter().collect::<CliResult<_>>()?;
    let failed = rows.iter().any(|r| r.get("equal") != Some(&Value::Bool(true)));
    let text = rows
        .iter()
        .map(|r| {
            let params: Vec<String> = r
                .iter()
                .filter(|(k, _)| !matches!(k.as_str(), "identity" | "equal" | "discrepancy" | "ms"))
                .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                .collect();
            let verdict = if r.get("equal") == Some(&Value::Bool(true)) { "equal" } else { "NOT EQUAL" };
            format!("{} {}: {verdict}", r["identity"].as_str().unwrap_or("?"), params.join(" "))
        })
        .collect();
    Ok(Report { rows, text: Some(text), failed })
}
