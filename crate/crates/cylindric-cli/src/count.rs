//! `count` and `enumerate`.

use cylindric::partitions::partitions_of;
use cylindric::paths_h1::{
    count_family, enumerate_dyck_prefixes, enumerate_motzkin, enumerate_triangle, enumerate_updown,
    motzkin_signed_sum, Family,
};
use cylindric::tableaux::{csyt_count, family_of_size, is_cylindric, standard_tableaux, CsytMethod, Kind};
use cylindric::walks_matchings::{
    crossing_nesting_profile, enumerate_vt, ncnn_count, ncnn_prime_signed, vt_count, vt_signed_count, Half,
    Matching, VtVariant,
};
use num_bigint::BigInt;

use crate::report::Report;
use crate::{need, normalize, row, CliResult, FamilyArgs};

fn half(s: &Option<String>) -> CliResult<Option<Half>> {
    s.as_deref().map(|v| v.parse::<Half>().map_err(|e| e.to_string())).transpose()
}

fn variant(s: &Option<String>) -> CliResult<VtVariant> {
    s.as_deref().map_or(Ok(VtVariant::Plain), |v| v.parse().map_err(|e: cylindric::Error| e.to_string()))
}

pub fn csyt_method(s: &str) -> CliResult<CsytMethod> {
    match normalize(s).as_str() {
        "chain_dp" => Ok(CsytMethod::ChainDp),
        "brute" => Ok(CsytMethod::Brute),
        "factorial_formula" => Ok(CsytMethod::FactorialFormula),
        other => Err(format!("unknown csyt method {other:?}")),
    }
}

fn path_family(name: &str) -> CliResult<Family> {
    name.parse().map_err(|e: cylindric::Error| e.to_string())
}

fn csyt_list(n: usize, h: usize, w: usize) -> CliResult<Vec<cylindric::tableaux::Tableau>> {
    let mut out = Vec::new();
    for lambda in partitions_of(n, h) {
        for t in standard_tableaux(&lambda) {
            if is_cylindric(&t, h, w, Kind::Ssyt).map_err(|e| e.to_string())? {
                out.push(t);
            }
        }
    }
    Ok(out)
}

fn ncnn_list(a: &FamilyArgs) -> CliResult<Vec<Matching>> {
    let (r, s) = (half(&a.r)?, half(&a.s)?);
    Ok(Matching::all(a.n).into_iter().filter(|m| crossing_nesting_profile(m).in_ncnn(r, s)).collect())
}

fn value_report(a: &FamilyArgs, value: BigInt) -> Report {
    let v = value.to_string();
    Report::new(vec![row!("family" => a.family, "n" => a.n, "h" => a.h, "w" => a.w, "value" => v)]).with_text(vec![v])
}

pub fn count(a: &FamilyArgs) -> CliResult<Report> {
    let fam = normalize(&a.family);
    let value = match fam.as_str() {
        "csyt" => {
            let method = a.method.as_deref().map_or(Ok(CsytMethod::ChainDp), csyt_method)?;
            csyt_count(a.n, need(a.h, "h")?, need(a.w, "w")?, method).map_err(|e| e.to_string())?
        }
        "ncnn" => ncnn_count(a.n, half(&a.r)?, half(&a.s)?),
        "ncnn_prime" => ncnn_prime_signed(a.n, need(a.h, "h")?, need(a.w, "w")?),
        "vt" => {
            let v = variant(&a.variant)?;
            let h = need(a.h, "h")?;
            if a.signed {
                vt_signed_count(a.n, h, a.w, v)
            } else {
                vt_count(a.n, h, a.w, v)
            }
        }
        "matchings" => BigInt::from(Matching::all(a.n).len()),
        "partitions" => BigInt::from(family_of_size(a.n, need(a.h, "h")?, need(a.w, "w")?).len()),
        "mot2_signed" => motzkin_signed_sum(a.n, need(a.w, "w")?),
        _ => count_family(path_family(&a.family)?, a.n, need(a.w, "w")?),
    };
    Ok(value_report(a, value))
}

pub fn enumerate(a: &FamilyArgs) -> CliResult<Report> {
    let fam = normalize(&a.family);
    let items: Vec<String> = match fam.as_str() {
        "csyt" => csyt_list(a.n, need(a.h, "h")?, need(a.w, "w")?)?.iter().map(|t| serde_json::to_string(t).expect("tableau serializes")).collect(),
        "ncnn" => ncnn_list(a)?.iter().map(Matching::to_json).collect(),
        "vt" => enumerate_vt(a.n, need(a.h, "h")?, a.w, variant(&a.variant)?).iter().map(|t| t.to_json()).collect(),
        "matchings" => Matching::all(a.n).iter().map(Matching::to_json).collect(),
        "partitions" => family_of_size(a.n, need(a.h, "h")?, need(a.w, "w")?).iter().map(|p| p.to_json()).collect(),
        _ => {
            let w = need(a.w, "w")?;
            match path_family(&a.family)? {
                Family::Triangle => enumerate_triangle(a.n, w).iter().map(ToString::to_string).collect(),
                Family::Motzkin(v) => enumerate_motzkin(a.n, w, v).iter().map(ToString::to_string).collect(),
                Family::DyckPrefix => enumerate_dyck_prefixes(a.n, w).iter().map(ToString::to_string).collect(),
                Family::UpDown => enumerate_updown(a.n, w).iter().map(ToString::to_string).collect(),
            }
        }
    };
    let rows = items.iter().map(|s| row!("family" => a.family, "n" => a.n, "item" => s)).collect();
    Ok(Report::new(rows).with_text(items))
}

