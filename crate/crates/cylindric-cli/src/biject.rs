//! `biject`: apply one map to one object.

use cylindric::growth::{matching_to_syt, matching_vt, ncnn_symmetry, syt_to_matching, triangle_diagram, vt_matching, Parity};
use cylindric::partitions::{cyl_transpose, Partition};
use cylindric::paths_h1::{
    csyt_to_walk, dershowitz, dershowitz_inverse, matching_to_motzkin, motzkin_to_matching, psi, psi_inverse,
    special_involution, walk_to_csyt, CsytWalk, DyckPrefix, MotzkinPath, TriangleWalk, UpDownPath, WalkTarget,
};
use cylindric::tableaux::{transpose_tableau, Tableau};
use cylindric::walks_matchings::{chen_phi, chen_phi_inverse, Matching, VacillatingTableau, VtVariant};

use crate::report::Report;
use crate::{need, normalize, row, BijectArgs, CliResult};

fn e(err: cylindric::Error) -> String {
    err.to_string()
}

fn parity(a: &BijectArgs) -> CliResult<Parity> {
    a.parity.as_deref().ok_or("--parity is required here")?.parse().map_err(e)
}

fn target(a: &BijectArgs) -> CliResult<WalkTarget> {
    match a.target.as_deref().map(normalize).as_deref() {
        Some("triangle") | None => Ok(WalkTarget::Triangle),
        Some("dyck_prefix") => Ok(WalkTarget::DyckPrefix),
        Some(other) => Err(format!("unknown walk target {other:?}")),
    }
}

fn tableau_json(t: &Tableau) -> String {
    serde_json::to_string(t).expect("tableau serializes")
}

/// The names accepted by `--map`.
pub const MAPS: [&str; 19] = [
    "syt_to_matching",
    "matching_to_syt",
    "matching_vt",
    "vt_matching",
    "chen_phi",
    "chen_phi_inverse",
    "ncnn_symmetry",
    "triangle_diagram",
    "csyt_to_walk",
    "walk_to_csyt",
    "matching_to_motzkin",
    "motzkin_to_matching",
    "special_involution",
    "dershowitz",
    "dershowitz_inverse",
    "psi",
    "psi_inverse",
    "cyl_transpose",
    "transpose_tableau",
];

pub fn apply(a: &BijectArgs) -> CliResult<String> {
    let input = a.input.as_str();
    let matching = || Matching::parse_json(input).map_err(e);
    let tableau = || Tableau::parse_json(input).map_err(e);
    Ok(match normalize(&a.map).as_str() {
        "syt_to_matching" => syt_to_matching(&tableau()?, parity(a)?, need(a.h, "h")?).map_err(e)?.to_json(),
        "matching_to_syt" => tableau_json(&matching_to_syt(&matching()?, parity(a)?, need(a.h, "h")?).map_err(e)?),
        "matching_vt" => matching_vt(&matching()?, parity(a)?, need(a.h, "h")?).map_err(e)?.to_json(),
        "vt_matching" => {
            let p = parity(a)?;
            let v = if p == Parity::Odd { VtVariant::Plain } else { VtVariant::HStar };
            let t = VacillatingTableau::parse_json(input, need(a.h, "h")?, None, v).map_err(e)?;
            vt_matching(&t, p).map_err(e)?.to_json()
        }
        "chen_phi" => chen_phi(&matching()?, need(a.h, "h")?, need(a.w, "w")?).map_err(e)?.to_json(),
        "chen_phi_inverse" => {
            let v = a.variant.as_deref().map_or(Ok(VtVariant::Plain), |s| s.parse().map_err(e))?;
            let t = VacillatingTableau::parse_json(input, need(a.h, "h")?, a.w, v).map_err(e)?;
            chen_phi_inverse(&t).map_err(e)?.to_json()
        }
        "ncnn_symmetry" => ncnn_symmetry(&matching()?).map_err(e)?.to_json(),
        "triangle_diagram" => triangle_diagram(&matching()?, parity(a)? == Parity::Even).map_err(e)?.to_json(),
        "csyt_to_walk" => match csyt_to_walk(&tableau()?, need(a.w, "w")?, target(a)?).map_err(e)? {
            CsytWalk::Triangle(p) => p.to_string(),
            CsytWalk::DyckPrefix(p) => p.to_string(),
        },
        "walk_to_csyt" => {
            let w = need(a.w, "w")?;
            let walk = match target(a)? {
                WalkTarget::Triangle => CsytWalk::Triangle(TriangleWalk::parse(input, w).map_err(e)?),
                WalkTarget::DyckPrefix => CsytWalk::DyckPrefix(DyckPrefix::parse(input, w).map_err(e)?),
            };
            tableau_json(&walk_to_csyt(&walk))
        }
        "matching_to_motzkin" => matching_to_motzkin(&matching()?, need(a.w, "w")?).map_err(e)?.to_string(),
        "motzkin_to_matching" => motzkin_to_matching(&MotzkinPath::parse(input, need(a.w, "w")?).map_err(e)?).to_json(),
        "special_involution" => {
            special_involution(&MotzkinPath::parse(input, need(a.w, "w")?).map_err(e)?).map_err(e)?.to_string()
        }
        "dershowitz" => dershowitz(&DyckPrefix::parse(input, need(a.w, "w")?).map_err(e)?).to_string(),
        "dershowitz_inverse" => {
            dershowitz_inverse(&UpDownPath::parse(input, need(a.w, "w")?).map_err(e)?).map_err(e)?.to_string()
        }
        "psi" => psi(&UpDownPath::parse(input, need(a.w, "w")?).map_err(e)?).map_err(e)?.to_string(),
        "psi_inverse" => {
            let bound = need(a.w, "w")?;
            psi_inverse(&MotzkinPath::parse(input, bound / 2).map_err(e)?, bound).map_err(e)?.to_string()
        }
        "cyl_transpose" => {
            let p = Partition::parse_json(input).map_err(e)?;
            cyl_transpose(&p, need(a.h, "h")?, need(a.w, "w")?).map_err(e)?.to_json()
        }
        "transpose_tableau" => tableau_json(&transpose_tableau(&tableau()?, need(a.h, "h")?, need(a.w, "w")?).map_err(e)?),
        other => return Err(format!("unknown map {other:?}; choose one of {}", MAPS.join(", "))),
    })
}

pub fn biject(a: &BijectArgs) -> CliResult<Report> {
    let out = apply(a)?;
    let value: serde_json::Value = serde_json::from_str(&out).unwrap_or_else(|_| serde_json::Value::from(out.clone()));
    Ok(Report::new(vec![row!("map" => normalize(&a.map), "input" => a.input, "output" => value)]).with_text(vec![out]))
}
