//! Truncated repetitive categories, their graded presentation and the
//! selfinjective orbit algebras.

mod category;

pub use category::LayeredCategory;

use std::collections::HashMap;

use crate::covering::Covering;
use crate::error::{FoveaError, Result};
use crate::modcat::{enumerate_indecomposables, isomorphic_indecomposables, Algebra};
use crate::quiver::{
    lift_cyclic, lift_window, path_basis, BoundQuiver, Relation, VoltageQuiver, Window,
};
use crate::report::Check;

/// `Â_n`: layers `-n..=n`.
pub fn repetitive_truncation(a: &Algebra, n: usize) -> LayeredCategory {
    let n = n as i64;
    LayeredCategory {
        algebra: a.clone(),
        lo: -n,
        hi: n,
        suffix: true,
    }
}

/// `Â` as a graded presentation: the arrows and relations of `Â` leaving
/// layer 0, with degree the layer difference.
pub fn repetitive_voltage(a: &Algebra) -> Result<VoltageQuiver> {
    let c = LayeredCategory {
        algebra: a.clone(),
        lo: 0,
        hi: 2,
        suffix: true,
    };
    let q = c.to_bound_quiver()?;
    let s = a.n();
    let strip = |name: &str| {
        name.rsplit_once('@')
            .map(|(b, _)| b.to_string())
            .unwrap_or_default()
    };
    let mut arrows = Vec::new();
    let mut degree = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for arr in q.arrows.iter().filter(|x| x.source < s) {
        let name = strip(&arr.name);
        index.insert(name.clone(), arrows.len());
        arrows.push(crate::quiver::Arrow {
            name,
            source: arr.source % s,
            target: arr.target % s,
        });
        degree.push((arr.target / s) as i64);
    }
    let relations = q
        .relations
        .iter()
        .filter(|r| q.arrows[r.terms[0].1[0]].source < s)
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(k, p)| {
                    (
                        k.clone(),
                        p.iter()
                            .map(|&x| index[&strip(&q.arrows[x].name)])
                            .collect(),
                    )
                })
                .collect(),
        })
        .collect();
    let base = BoundQuiver {
        field: q.field,
        nilbound: q.nilbound,
        vertices: a.quiver.vertices.clone(),
        arrows,
        relations,
    };
    VoltageQuiver::new(base, degree)
}

/// `Â / (νᵏ)`: the graded presentation with layers taken mod `k`.
pub fn selfinjective_orbit(a: &Algebra, k: usize) -> Result<BoundQuiver> {
    lift_cyclic(&repetitive_voltage(a)?, k)
}

/// Whether every indecomposable projective is injective, with the matching
/// injective vertex for each projective.
pub fn selfinjectivity(alg: &Algebra) -> Result<(bool, Vec<Option<usize>>)> {
    let mut matched = Vec::new();
    for x in 0..alg.n() {
        let p = alg.projective(x);
        let mut hit = None;
        for y in 0..alg.n() {
            if isomorphic_indecomposables(&p, &alg.injective(y))? {
                hit = Some(y);
                break;
            }
        }
        matched.push(hit);
    }
    Ok((matched.iter().all(Option::is_some), matched))
}

/// Canonical presentation: relations re-extracted from the structure
/// constants of the path basis.
pub fn normalize(bq: &BoundQuiver) -> Result<BoundQuiver> {
    let a = Algebra::new(bq)?;
    LayeredCategory {
        algebra: a,
        lo: 0,
        hi: 0,
        suffix: false,
    }
    .to_bound_quiver()
}

/// Drops a trailing `@<layer>` from vertex and arrow names.
pub fn strip_layer(bq: &BoundQuiver, layer: i64) -> BoundQuiver {
    let suffix = format!("@{layer}");
    let strip = |s: &String| s.strip_suffix(&suffix).unwrap_or(s).to_string();
    let mut out = bq.clone();
    out.vertices = bq.vertices.iter().map(strip).collect();
    for a in &mut out.arrows {
        a.name = strip(&a.name);
    }
    out
}

/// Whether window lifts of the graded presentation have the hom dimensions
/// of the truncations over the same layers.
pub fn voltage_matches_truncation(a: &Algebra, vq: &VoltageQuiver, w: Window) -> Result<bool> {
    let c = LayeredCategory {
        algebra: a.clone(),
        lo: w.lo,
        hi: w.hi,
        suffix: true,
    };
    let pb = path_basis(&lift_window(vq, w)?)?;
    Ok((0..c.n()).all(|x| (0..c.n()).all(|y| pb.dim(x, y) == c.dim(x, y))))
}

/// Longest support among indecomposables of `[-r, r]` nonzero at base
/// vertex 0 in layer 0, for `r = 1..=radius`; `None` when a cap was hit.
pub fn support_lengths(
    cov: &Covering,
    radius: i64,
    dim_cap: usize,
    count_cap: usize,
) -> Result<Vec<Option<usize>>> {
    (1..=radius)
        .map(|r| {
            let w = Window { lo: -r, hi: r };
            let e = enumerate_indecomposables(&*cov.window_algebra(w)?, dim_cap, count_cap)?;
            if !e.complete {
                return Ok(None);
            }
            let at = cov.vq.lifted_index(w, 0, 0);
            let mut best = 0;
            for m in e.modules.iter().filter(|m| m.dims[at] > 0) {
                let lm = crate::covering::LayeredModule {
                    window: w,
                    module: m.clone(),
                };
                if let Some(s) = cov.support(&lm) {
                    best = best.max(s.len());
                }
            }
            Ok(Some(best))
        })
        .collect()
}

pub const STABLE: &str = "stable";
pub const NOT_STABLE: &str = "not stabilized";

/// Heuristic local support-finiteness: the longest support through a fixed
/// vertex stops growing before the window edge.
pub fn support_finiteness_probe(
    cov: &Covering,
    radius: i64,
    dim_cap: usize,
    count_cap: usize,
) -> Result<String> {
    if radius < 2 {
        return Err(FoveaError::Invalid(
            "probe radius must be at least 2".into(),
        ));
    }
    let lens = support_lengths(cov, radius, dim_cap, count_cap)?;
    let n = lens.len();
    let stable = match (lens[n - 2], lens[n - 1]) {
        (Some(a), Some(b)) => a == b && (b as i64) < 2 * radius + 1,
        _ => false,
    };
    Ok(if stable { STABLE } else { NOT_STABLE }.into())
}

/// The repetitive checks for one algebra.
pub fn repetitive_checks(a: &Algebra, tag: &str, n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let t = repetitive_truncation(a, n);
    let q = t.to_bound_quiver()?;
    let d = a.dim();
    out.push(Check::new(
        format!("{tag}/truncation-dim"),
        "repetitive-truncation",
        (4 * n + 1) * d,
        t.total_dim(),
    ));
    out.push(Check::new(
        format!("{tag}/truncation-presentation"),
        "repetitive-truncation",
        t.total_dim(),
        path_basis(&q)?.total_dim(),
    ));
    out.push(Check::new(
        format!("{tag}/truncation-admissible"),
        "repetitive-truncation",
        true,
        crate::quiver::check_admissible(&q).admissible,
    ));
    let zero = repetitive_truncation(a, 0).to_bound_quiver()?;
    out.push(Check::new(
        format!("{tag}/layer0-is-base"),
        "repetitive-layer0",
        normalize(&a.quiver)?.to_text(),
        normalize(&strip_layer(&zero, 0))?.to_text(),
    ));
    let vq = repetitive_voltage(a)?;
    for (lo, hi) in [(0, 0), (0, 1), (-1, 1), (-2, 2)] {
        let ok = voltage_matches_truncation(a, &vq, Window { lo, hi })?;
        out.push(Check::holds(
            format!("{tag}/voltage-window/{lo}..{hi}"),
            "repetitive-voltage",
            ok,
            "dims differ",
        ));
    }
    let orbit = Algebra::new(&selfinjective_orbit(a, 1)?)?;
    out.push(Check::new(
        format!("{tag}/orbit-dim"),
        "selfinjective-orbit",
        2 * d,
        orbit.dim(),
    ));
    out.push(Check::new(
        format!("{tag}/orbit-selfinjective"),
        "selfinjective-orbit",
        true,
        selfinjectivity(&orbit)?.0,
    ));
    Ok(out)
}
