//! Numeric checks of the covering identities on finite windows.

use crate::error::{FoveaError, Result};
use crate::modcat::{
    are_isomorphic, enumerate_indecomposables, hom_dim, is_indecomposable, Module,
};
use crate::quiver::{path_basis, Window};
use crate::report::Check;

use super::layered::{Covering, LayeredModule};

pub const DEFAULT_START_RADIUS: i64 = 1;
pub const DEFAULT_MAX_RADIUS: i64 = 256;
/// Shifts tried when searching for `Y ≅ ᵏX` beyond the support bound.
pub const DEFAULT_SEARCH_RADIUS: i64 = 8;

/// Per-pair lifted sums at one radius: `(left, right)` indexed `u * n + v`.
fn sums_at(cov: &Covering, r: i64) -> Result<Vec<(usize, usize)>> {
    let w = Window { lo: -r, hi: r };
    let pb = path_basis(&*cov.lift(w)?)?;
    let nb = cov.vq.n_base();
    let idx = |v, n| cov.vq.lifted_index(w, v, n);
    Ok((0..nb * nb)
        .map(|k| {
            let (u, v) = (k / nb, k % nb);
            let left = w.layers().map(|n| pb.dim(idx(u, n), idx(v, 0))).sum();
            let right = w.layers().map(|n| pb.dim(idx(u, 0), idx(v, n))).sum();
            (left, right)
        })
        .collect())
}

/// Radius at which the lifted hom sums stopped changing over two
/// consecutive doublings, and those sums.
pub fn stable_sums(cov: &Covering, start: i64, max: i64) -> Result<(i64, Vec<(usize, usize)>)> {
    let mut r = start.max(1);
    let mut prev = sums_at(cov, r)?;
    let mut unchanged = 0;
    while unchanged < 2 {
        if r * 2 > max {
            return Err(FoveaError::WindowUnstable(r));
        }
        r *= 2;
        let next = sums_at(cov, r)?;
        unchanged = if next == prev { unchanged + 1 } else { 0 };
        prev = next;
    }
    Ok((r, prev))
}

/// `dim A(u,v) = Σ_k dim R(σᵏx, y) = Σ_k dim R(x, σᵏy)` for all base
/// vertex pairs, plus the structural covering conditions.
pub fn verify_covering_axioms(cov: &Covering, start: i64, max: i64) -> Result<Vec<Check>> {
    let (r, sums) = stable_sums(cov, start, max)?;
    let b = &cov.vq.base;
    let nb = cov.vq.n_base();
    let pb = &cov.base.basis;
    let mut out = Vec::new();
    for (k, (left, right)) in sums.into_iter().enumerate() {
        let (u, v) = (k / nb, k % nb);
        let pair = format!("{}->{}", b.vertices[u], b.vertices[v]);
        let expected = pb.dim(u, v);
        out.push(Check::new(
            format!("cover/hom-sum-left/{pair}"),
            "covering-hom-decomposition",
            expected,
            left,
        ));
        out.push(Check::new(
            format!("cover/hom-sum-right/{pair}"),
            "covering-hom-decomposition",
            expected,
            right,
        ));
    }
    out.push(Check::holds(
        "cover/free-action",
        "covering-free-action",
        true,
        "",
    ));
    out.push(Check::holds(
        "cover/object-surjective",
        "covering-object-surjective",
        true,
        "",
    ));
    out.push(Check::new(
        "cover/stable-radius",
        "covering-window-stability",
        r,
        r,
    ));
    Ok(out)
}

fn hom_sum(cov: &Covering, x: &LayeredModule, y: &LayeredModule) -> Result<usize> {
    Ok(cov.twisted_hom_dims(x, y)?.iter().map(|p| p.1).sum())
}

/// Shift `k` with `ᵏX ≅ Y`, searched over the support bound widened by
/// `radius`.
pub fn twist_iso_search(
    cov: &Covering,
    x: &LayeredModule,
    y: &LayeredModule,
    radius: i64,
) -> Result<Option<i64>> {
    let (sx, sy) = match (cov.support(x), cov.support(y)) {
        (Some(a), Some(b)) => (a, b),
        (None, None) => return Ok(Some(0)),
        _ => return Ok(None),
    };
    let base = sy.lo - sx.lo;
    let mut ks: Vec<i64> = (base - radius..=base + radius).collect();
    ks.sort_by_key(|k| ((k - base).abs(), *k));
    for k in ks {
        let (a, b) = cov.align(&cov.trim(&cov.twist(x, k)?)?, &cov.trim(y)?)?;
        if are_isomorphic(&a.module, &b.module, cov.seed())? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The push-down checks for a pair of layered modules; `tag` prefixes the
/// check ids.
pub fn verify_pushdown(
    cov: &Covering,
    tag: &str,
    x: &LayeredModule,
    y: &LayeredModule,
    twists: &[i64],
    search_radius: i64,
) -> Result<Vec<Check>> {
    let seed = cov.seed();
    let (fx, fy) = (cov.push_down(x), cov.push_down(y));
    let mut out = Vec::new();
    let a_side = hom_dim(&fx, &fy)?;
    out.push(Check::new(
        format!("{tag}/hom-sum"),
        "pushdown-hom-iso",
        hom_sum(cov, x, y)?,
        a_side,
    ));
    let right: usize = cov
        .shift_range(x, y)
        .iter()
        .map(|&k| Ok(cov.hom(x, &cov.twist(y, -k)?)?.1.len()))
        .sum::<Result<usize>>()?;
    out.push(Check::new(
        format!("{tag}/hom-sum-dual"),
        "pushdown-hom-iso",
        right,
        a_side,
    ));
    let invariant = twists.iter().all(|&k| {
        cov.twist(x, k)
            .map(|t| cov.push_down(&t) == fx)
            .unwrap_or(false)
    });
    out.push(Check::holds(
        format!("{tag}/twist-invariance"),
        "pushdown-twist-invariance",
        invariant,
        "push-down changed",
    ));
    for (name, m, fm) in [("x", x, &fx), ("y", y, &fy)] {
        if is_indecomposable(&m.module, seed)? {
            out.push(Check::new(
                format!("{tag}/indecomposable-{name}"),
                "pushdown-preserves-indecomposables",
                true,
                is_indecomposable(fm, seed)?,
            ));
        }
    }
    if is_indecomposable(&x.module, seed)?
        && is_indecomposable(&y.module, seed)?
        && are_isomorphic(&fx, &fy, seed)?
    {
        let k = twist_iso_search(cov, x, y, search_radius)?;
        out.push(Check::holds(
            format!("{tag}/twist-iso"),
            "pushdown-iso-implies-twist",
            k.is_some(),
            format!("no shift within radius {search_radius}"),
        ));
    }
    Ok(out)
}

/// Searches windows `[0, len-1]` of growing length for an indecomposable
/// covering module pushing down to `M`; `None` when `max_len` is reached.
pub fn density_search(
    cov: &Covering,
    m: &Module,
    max_len: usize,
    dim_cap: usize,
    count_cap: usize,
) -> Result<Option<LayeredModule>> {
    for len in 1..=max_len as i64 {
        let w = Window { lo: 0, hi: len - 1 };
        let alg = cov.window_algebra(w)?;
        let e = enumerate_indecomposables(&alg, dim_cap.min(m.total_dim()), count_cap)?;
        for l in e.modules {
            let lm = LayeredModule {
                window: w,
                module: l,
            };
            let pm = cov.push_down(&lm);
            if pm.dims == m.dims && are_isomorphic(&pm, m, cov.seed())? {
                return Ok(Some(lm));
            }
        }
    }
    Ok(None)
}

/// Indecomposables of the window `[-r, r]` up to shift, one representative
/// per class, and whether the window enumeration completed.
pub fn shift_classes(
    cov: &Covering,
    r: i64,
    dim_cap: usize,
    count_cap: usize,
) -> Result<(Vec<LayeredModule>, bool)> {
    let w = Window { lo: -r, hi: r };
    let e = enumerate_indecomposables(&*cov.window_algebra(w)?, dim_cap, count_cap)?;
    let mut reps: Vec<LayeredModule> = Vec::new();
    for m in e.modules {
        let lm = cov.trim(&LayeredModule {
            window: w,
            module: m,
        })?;
        let mut seen = false;
        for p in &reps {
            if twist_iso_search(cov, p, &lm, w.len() as i64)?.is_some() {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(lm);
        }
    }
    Ok((reps, e.complete))
}

/// Push-downs of the shift classes on `[-r, r]` are indecomposable,
/// pairwise non-isomorphic, and meet every indecomposable over the base.
pub fn verify_pushdown_exhaustion(
    cov: &Covering,
    tag: &str,
    r: i64,
    dim_cap: usize,
    count_cap: usize,
) -> Result<Vec<Check>> {
    let seed = cov.seed();
    let (reps, _) = shift_classes(cov, r, dim_cap, count_cap)?;
    let base = enumerate_indecomposables(&cov.base, dim_cap, count_cap)?;
    let pushed: Vec<Module> = reps.iter().map(|m| cov.push_down(m)).collect();
    let mut out = Vec::new();
    let mut indec = true;
    for p in &pushed {
        indec &= is_indecomposable(p, seed)?;
    }
    out.push(Check::holds(
        format!("{tag}/classes-indecomposable"),
        "pushdown-preserves-indecomposables",
        indec,
        "split",
    ));
    let mut distinct = true;
    for i in 0..pushed.len() {
        for j in i + 1..pushed.len() {
            distinct &= !are_isomorphic(&pushed[i], &pushed[j], seed)?;
        }
    }
    out.push(Check::holds(
        format!("{tag}/classes-distinct"),
        "pushdown-iso-implies-twist",
        distinct,
        "repeated class",
    ));
    let mut hit = 0;
    for m in &base.modules {
        let mut found = false;
        for p in &pushed {
            if p.dims == m.dims && are_isomorphic(p, m, seed)? {
                found = true;
                break;
            }
        }
        hit += usize::from(found);
    }
    let anchor = "pushdown-density";
    out.push(Check::new(
        format!("{tag}/classes"),
        anchor,
        base.modules.len(),
        pushed.len(),
    ));
    out.push(Check::new(
        format!("{tag}/classes-exhaust"),
        anchor,
        base.modules.len(),
        hit,
    ));
    out.push(Check::holds(
        format!("{tag}/base-complete"),
        anchor,
        base.complete,
        "base enumeration hit a cap",
    ));
    Ok(out)
}
