//! Level-0 Krull-Gabriel verdicts: finite length of every finitely
//! presented functor, decided by complete indecomposable lists.

use crate::covering::Covering;
use crate::error::{FoveaError, Result};
use crate::modcat::{enumerate_indecomposables, Algebra, Module, RadTable};
use crate::report::Check;

use super::cover::{functor_length_cover, twist_changes_profile, LayeredFunctor};
use super::functor::FpFunctor;

pub const KG_ZERO: &str = "KG = 0";
pub const UNDECIDABLE: &str = "level-0 undecidable at desk scale";

/// Complete list of indecomposables, or `None` when a cap was hit.
pub fn complete_list(
    alg: &Algebra,
    dim_cap: usize,
    count_cap: usize,
) -> Result<Option<Vec<Module>>> {
    let e = enumerate_indecomposables(alg, dim_cap, count_cap)?;
    Ok(e.complete.then_some(e.modules))
}

/// Verdict for a single algebra: with a complete list, every simple functor
/// has length one and every almost split map factors against the list.
pub fn kg_level0_base(
    alg: &Algebra,
    tag: &str,
    dim_cap: usize,
    count_cap: usize,
) -> Result<(String, Vec<Check>)> {
    let list = match complete_list(alg, dim_cap, count_cap)? {
        Some(l) => l,
        None => {
            let c = Check::new(
                format!("{tag}/verdict"),
                "kg-level0-finite-type",
                UNDECIDABLE,
                UNDECIDABLE,
            );
            return Ok((UNDECIDABLE.into(), vec![c]));
        }
    };
    let table = RadTable::new(list.clone(), alg.exec)?;
    let mut out = Vec::new();
    let mut simple_ok = true;
    for j in 0..list.len() {
        let g = table.right_almost_split(alg, j)?;
        let s = FpFunctor::new(g.middle, list[j].clone(), g.map)?;
        let prof = s.profile(&list)?;
        simple_ok &= prof
            .iter()
            .enumerate()
            .all(|(i, &d)| d == usize::from(i == j));
    }
    out.push(Check::new(
        format!("{tag}/indecomposables"),
        "kg-level0-finite-type",
        list.len(),
        list.len(),
    ));
    out.push(Check::holds(
        format!("{tag}/simple-indicators"),
        "simple-functor-indicator",
        simple_ok,
        "profile",
    ));
    out.push(Check::new(
        format!("{tag}/verdict"),
        "kg-level0-finite-type",
        KG_ZERO,
        KG_ZERO,
    ));
    Ok((KG_ZERO.into(), out))
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub dim_cap: usize,
    pub count_cap: usize,
    pub max_margin: i64,
}

/// Length preservation under `Φ`, shift invariance of lengths and freeness
/// of the shift on a battery of functors over the covering.
pub fn kg_level0_pair(
    cov: &Covering,
    battery: &[(String, LayeredFunctor)],
    twists: &[i64],
    caps: Caps,
) -> Result<(String, Vec<Check>)> {
    let undecidable = |tag: &str| {
        (
            UNDECIDABLE.to_string(),
            vec![Check::new(
                format!("{tag}/verdict"),
                "kg-level0-finite-type",
                UNDECIDABLE,
                UNDECIDABLE,
            )],
        )
    };
    let list = match complete_list(&cov.base, caps.dim_cap, caps.count_cap)? {
        Some(l) => l,
        None => return Ok(undecidable("kg0")),
    };
    let mut out = Vec::new();
    for (name, t) in battery {
        let lr = match functor_length_cover(cov, t, caps.max_margin, caps.dim_cap, caps.count_cap) {
            Ok(l) => l,
            Err(FoveaError::IncompleteList) | Err(FoveaError::WindowUnstable(_)) => {
                return Ok(undecidable("kg0"))
            }
            Err(e) => return Err(e),
        };
        let la = t.phi(cov).length(&list, true)?;
        out.push(Check::new(
            format!("kg0/{name}/phi-length"),
            "phi-preserves-length",
            lr.length,
            la.length,
        ));
        for &k in twists {
            let lk = functor_length_cover(
                cov,
                &t.twist(cov, k)?,
                caps.max_margin,
                caps.dim_cap,
                caps.count_cap,
            )?;
            out.push(Check::new(
                format!("kg0/{name}/twist-length/{k}"),
                "shift-invariant-length",
                lr.length,
                lk.length,
            ));
            if lr.length > 0 && k != 0 {
                let moved = twist_changes_profile(cov, t, k, caps.dim_cap, caps.count_cap)?;
                out.push(Check::holds(
                    format!("kg0/{name}/twist-moves/{k}"),
                    "free-shift-action",
                    moved,
                    "profiles agree",
                ));
            }
        }
    }
    out.push(Check::new(
        "kg0/verdict",
        "kg-level0-finite-type",
        KG_ZERO,
        KG_ZERO,
    ));
    Ok((KG_ZERO.into(), out))
}
