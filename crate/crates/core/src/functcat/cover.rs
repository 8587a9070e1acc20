//! Functors over the covering and the push-down functor `Φ` between the
//! functor categories.

use crate::covering::{Covering, LayeredMap, LayeredModule};
use crate::error::{FoveaError, Result};
use crate::modcat::{
    almost_split_sequence, direct_sum, enumerate_indecomposables, projective_vertex, ModMap, Module,
};
use crate::quiver::Window;
use crate::report::Check;

use super::functor::{fp_hom, FpFunctor, FunctorMap};

/// `Coker Hom_R(-, f)` with the presentation stored on one window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredFunctor {
    pub source: LayeredModule,
    pub target: LayeredModule,
    pub map: LayeredMap,
}

/// Length of a functor over the covering with the window it stabilized on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverLength {
    pub window: Window,
    /// `(module label, dim T(X))` for indecomposables with `T(X) != 0`.
    pub profile: Vec<(String, usize)>,
    pub length: usize,
}

/// The functor built from a lift of `α` together with an epimorphism
/// `Φ(T) -> U`.
#[derive(Clone, Debug)]
pub struct EpiCover {
    pub functor: LayeredFunctor,
    pub shifts: Vec<i64>,
    pub phi: FpFunctor,
    pub epi: FunctorMap,
}

impl LayeredFunctor {
    /// Aligns `source`, `target` and `map` on the hull of their windows.
    pub fn new(
        cov: &Covering,
        source: &LayeredModule,
        target: &LayeredModule,
        map: &LayeredMap,
    ) -> Result<Self> {
        let w = source.window.hull(&target.window).hull(&map.window);
        let (source, target, map) = cov.reindex_map(map, source, target, w)?;
        if !map.map.is_natural(&source.module, &target.module) {
            return Err(FoveaError::Invalid(
                "presentation map is not a homomorphism".into(),
            ));
        }
        Ok(LayeredFunctor {
            source,
            target,
            map,
        })
    }

    pub fn representable(n: &LayeredModule) -> Self {
        let z = LayeredModule {
            window: n.window,
            module: Module::zero(n.module.base.clone()),
        };
        let map = LayeredMap {
            window: n.window,
            map: ModMap::zero(&z.module, &n.module),
        };
        LayeredFunctor {
            source: z,
            target: n.clone(),
            map,
        }
    }

    pub fn window(&self) -> Window {
        self.map.window
    }

    /// Hull of the supports of the presentation, if nonzero.
    pub fn support(&self, cov: &Covering) -> Option<Window> {
        match (cov.support(&self.source), cov.support(&self.target)) {
            (Some(a), Some(b)) => Some(a.hull(&b)),
            (a, b) => a.or(b),
        }
    }

    /// The presentation over the lift of a window containing it.
    pub fn on_window(&self, cov: &Covering, w: Window) -> Result<FpFunctor> {
        let (s, t, m) = cov.reindex_map(&self.map, &self.source, &self.target, w)?;
        Ok(FpFunctor {
            source: s.module,
            target: t.module,
            map: m.map,
        })
    }

    pub fn evaluate(&self, cov: &Covering, x: &LayeredModule) -> Result<usize> {
        let w = self.window().hull(&x.window);
        self.on_window(cov, w)?.eval_dim(&cov.reindex(x, w)?.module)
    }

    /// `gT = Coker Hom(-, ᵍf)`.
    pub fn twist(&self, cov: &Covering, k: i64) -> Result<Self> {
        Ok(LayeredFunctor {
            source: cov.twist(&self.source, k)?,
            target: cov.twist(&self.target, k)?,
            map: cov.twist_map(&self.map, k),
        })
    }

    /// `Φ(T) = Coker Hom_A(-, F_λ f)`.
    pub fn phi(&self, cov: &Covering) -> FpFunctor {
        FpFunctor {
            source: cov.push_down(&self.source),
            target: cov.push_down(&self.target),
            map: cov.push_down_map(&self.map),
        }
    }
}

/// `S^N` over the covering, presented by the almost split sequence ending
/// at `N` computed on a window with margin twice the path reach.
pub fn simple_functor_cover(cov: &Covering, n: &LayeredModule) -> Result<LayeredFunctor> {
    let s = cov
        .support(n)
        .ok_or_else(|| FoveaError::Invalid("simple functor of the zero module".into()))?;
    let margin = 2 * cov.reach().max(1);
    let w = Window {
        lo: s.lo - margin,
        hi: s.hi + margin,
    };
    let alg = cov.window_algebra(w)?;
    let nw = cov.reindex(n, w)?;
    let (middle, g) = if projective_vertex(&alg, &nw.module).is_some() {
        nw.module.radical()
    } else {
        let seq = almost_split_sequence(&alg, &nw.module)?;
        (seq.middle, seq.g)
    };
    let e = LayeredModule {
        window: w,
        module: middle,
    };
    let t = LayeredFunctor {
        source: e,
        target: nw,
        map: LayeredMap { window: w, map: g },
    };
    trim_functor(cov, &t)
}

/// The presentation moved to the hull of its supports.
pub fn trim_functor(cov: &Covering, t: &LayeredFunctor) -> Result<LayeredFunctor> {
    let w = match t.support(cov) {
        Some(w) => w,
        None => return Ok(LayeredFunctor::representable(&cov.zero()?)),
    };
    let (source, target, map) = cov.reindex_map(&t.map, &t.source, &t.target, w)?;
    Ok(LayeredFunctor {
        source,
        target,
        map,
    })
}

/// `Ψ(U)(X) = U(F_λ X)`.
pub fn psi_evaluate(cov: &Covering, u: &FpFunctor, x: &LayeredModule) -> Result<usize> {
    u.eval_dim(&cov.push_down(x))
}

/// `Σ_k dim T(ᵏX)` over the shifts where `ᵏX` meets the target support.
pub fn twisted_eval_sum(cov: &Covering, t: &LayeredFunctor, x: &LayeredModule) -> Result<usize> {
    cov.shift_range(x, &t.target)
        .iter()
        .map(|&k| t.evaluate(cov, &cov.twist(x, k)?))
        .sum()
}

/// Natural transformations between functors over the covering.
pub fn fp_hom_cover(cov: &Covering, t1: &LayeredFunctor, t2: &LayeredFunctor) -> Result<usize> {
    let w = t1.window().hull(&t2.window());
    Ok(fp_hom(&t1.on_window(cov, w)?, &t2.on_window(cov, w)?)?.0)
}

/// `dim Hom(ΦT1, ΦT2)` against `Σ_k dim Hom(ᵏT1, T2)`.
pub fn phi_hom_identity(
    cov: &Covering,
    tag: &str,
    t1: &LayeredFunctor,
    t2: &LayeredFunctor,
) -> Result<Check> {
    let lhs = fp_hom(&t1.phi(cov), &t2.phi(cov))?.0;
    let mut rhs = 0;
    for k in cov.shift_range(&t1.target, &t2.target) {
        rhs += fp_hom_cover(cov, &t1.twist(cov, k)?, t2)?;
    }
    Ok(Check::new(
        format!("{tag}/phi-hom"),
        "phi-hom-decomposition",
        rhs,
        lhs,
    ))
}

/// Indecomposables of the window `supp(T)` widened by `margin`, and whether
/// the enumeration completed.
pub fn window_indecomposables(
    cov: &Covering,
    w: Window,
    dim_cap: usize,
    count_cap: usize,
) -> Result<(Vec<LayeredModule>, bool)> {
    let e = enumerate_indecomposables(&*cov.window_algebra(w)?, dim_cap, count_cap)?;
    Ok((
        e.modules
            .into_iter()
            .map(|module| LayeredModule { window: w, module })
            .collect(),
        e.complete,
    ))
}

fn length_on(
    cov: &Covering,
    t: &LayeredFunctor,
    w: Window,
    dim_cap: usize,
    count_cap: usize,
) -> Result<Vec<(String, usize)>> {
    let (list, complete) = window_indecomposables(cov, w, dim_cap, count_cap)?;
    if !complete {
        return Err(FoveaError::IncompleteList);
    }
    let dims = cov.exec().map(&list, |x| t.evaluate(cov, x));
    let mut out = Vec::new();
    for (x, d) in list.iter().zip(dims) {
        let d = d?;
        if d > 0 {
            out.push((cov.label(&cov.trim(x)?), d));
        }
    }
    Ok(out)
}

/// Length of `T` over the covering: total evaluation on the indecomposables
/// of growing windows around its support, until two doublings agree.
pub fn functor_length_cover(
    cov: &Covering,
    t: &LayeredFunctor,
    max_margin: i64,
    dim_cap: usize,
    count_cap: usize,
) -> Result<CoverLength> {
    let s = match t.support(cov) {
        Some(s) => s,
        None => {
            return Ok(CoverLength {
                window: Window { lo: 0, hi: 0 },
                profile: Vec::new(),
                length: 0,
            })
        }
    };
    let mut r = cov.reach().max(1);
    let widen = |r: i64| Window {
        lo: s.lo - r,
        hi: s.hi + r,
    };
    let mut prev = length_on(cov, t, widen(r), dim_cap, count_cap)?;
    let mut unchanged = 0;
    while unchanged < 2 {
        if r * 2 > max_margin {
            return Err(FoveaError::WindowUnstable(r));
        }
        r *= 2;
        let next = length_on(cov, t, widen(r), dim_cap, count_cap)?;
        let same =
            next.iter().map(|p| p.1).sum::<usize>() == prev.iter().map(|p| p.1).sum::<usize>();
        unchanged = if same { unchanged + 1 } else { 0 };
        prev = next;
    }
    Ok(CoverLength {
        window: widen(r),
        length: prev.iter().map(|p| p.1).sum(),
        profile: prev,
    })
}

/// Whether `T` and `ᵏT` have different evaluations on some indecomposable
/// of a window containing both supports.
pub fn twist_changes_profile(
    cov: &Covering,
    t: &LayeredFunctor,
    k: i64,
    dim_cap: usize,
    count_cap: usize,
) -> Result<bool> {
    let s = match t.support(cov) {
        Some(s) => s,
        None => return Ok(false),
    };
    let r = cov.reach().max(1);
    let w = Window {
        lo: s.lo.min(s.lo + k) - r,
        hi: s.hi.max(s.hi + k) + r,
    };
    let tk = t.twist(cov, k)?;
    let (list, _) = window_indecomposables(cov, w, dim_cap, count_cap)?;
    for x in &list {
        if t.evaluate(cov, x)? != tk.evaluate(cov, x)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// For `U = Coker Hom_A(-, α)` with `α: F_λM -> F_λN`: the functor
/// `T = Coker Hom_R(-, [ᵏⁱf_i])` into `⊕ ⁻ᵏⁱN` built from a lift of `α`,
/// with the summation map `[1 ... 1]` as an epimorphism `Φ(T) -> U`.
pub fn phi_epi_cover(
    cov: &Covering,
    u: &FpFunctor,
    m: &LayeredModule,
    n: &LayeredModule,
) -> Result<EpiCover> {
    if u.source != cov.push_down(m) || u.target != cov.push_down(n) {
        return Err(FoveaError::Invalid(
            "presentation is not between the given push-downs".into(),
        ));
    }
    let mut parts = cov.lift_morphism(m, n, &u.map)?;
    if parts.is_empty() {
        let (w, _) = cov.hom(m, n)?;
        let (mm, nn) = (cov.reindex(m, w)?, cov.reindex(n, w)?);
        parts.push((
            0,
            LayeredMap {
                window: w,
                map: ModMap::zero(&mm.module, &nn.module),
            },
        ));
    }
    // f_k: ᵏM -> N becomes M -> ⁻ᵏN
    let cols: Vec<(i64, LayeredMap)> = parts
        .iter()
        .map(|(k, f)| (*k, cov.twist_map(f, -k)))
        .collect();
    let w = cols
        .iter()
        .fold(m.window, |acc, (_, f)| acc.hull(&f.window));
    let src = cov.reindex(m, w)?;
    let targets: Vec<LayeredModule> = cols
        .iter()
        .map(|(k, _)| cov.reindex(&cov.twist(n, -k)?, w))
        .collect::<Result<_>>()?;
    let refs: Vec<&Module> = targets.iter().map(|t| &t.module).collect();
    let (sum, incs, projs) = direct_sum(cov.lift(w)?, &refs);
    let mut fbar = ModMap::zero(&src.module, &sum);
    for ((k, f), inc) in cols.iter().zip(&incs) {
        let (_, _, fw) = cov.reindex_map(f, m, &cov.twist(n, -k)?, w)?;
        fbar = fbar.add(&fw.map.then(inc));
    }
    let target = LayeredModule {
        window: w,
        module: sum,
    };
    let functor = LayeredFunctor {
        source: src,
        target,
        map: LayeredMap {
            window: w,
            map: fbar,
        },
    };
    let phi = functor.phi(cov);
    let h = projs
        .iter()
        .map(|p| {
            cov.push_down_map(&LayeredMap {
                window: w,
                map: p.clone(),
            })
        })
        .reduce(|a, b| a.add(&b))
        .expect("at least one column");
    let epi = FunctorMap {
        h,
        k: ModMap::identity(&u.source),
    };
    if !epi.is_valid(&phi, u) {
        return Err(FoveaError::Invalid("summation map is not natural".into()));
    }
    Ok(EpiCover {
        functor,
        shifts: parts.iter().map(|p| p.0).collect(),
        phi,
        epi,
    })
}

/// Pointwise dominance `dim Φ(T)(X) >= dim U(X)` and surjectivity of the
/// epi at every listed module.
pub fn epi_certificate(cover: &EpiCover, u: &FpFunctor, list: &[Module]) -> Result<(bool, bool)> {
    let mut dominates = true;
    let mut onto = true;
    for x in list {
        dominates &= cover.phi.eval_dim(x)? >= u.eval_dim(x)?;
        onto &= cover.epi.is_epi_at(&cover.phi, u, x)?;
    }
    Ok((dominates, onto))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functcat::kg::{complete_list, kg_level0_pair, Caps, KG_ZERO};
    use crate::modcat::hom_space;
    use crate::quiver::VoltageQuiver;

    fn line() -> Covering {
        Covering::new(
            VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n")
                .unwrap(),
        )
        .unwrap()
    }

    fn battery(c: &Covering) -> Vec<(String, LayeredFunctor)> {
        let m0 = c.projective(0, 1).unwrap();
        let s0 = c.simple(0, 0).unwrap();
        let (w, inc) = c.hom(&s0, &m0).unwrap();
        let socle = LayeredMap {
            window: w,
            map: inc[0].clone(),
        };
        vec![
            ("hom-m0".into(), LayeredFunctor::representable(&m0)),
            ("hom-s0".into(), LayeredFunctor::representable(&s0)),
            ("simple-m0".into(), simple_functor_cover(c, &m0).unwrap()),
            ("simple-s0".into(), simple_functor_cover(c, &s0).unwrap()),
            (
                "coker-socle".into(),
                LayeredFunctor::new(c, &s0, &m0, &socle).unwrap(),
            ),
        ]
    }

    #[test]
    fn phi_of_representable_and_simple() {
        let c = line();
        let m0 = c.projective(0, 1).unwrap();
        let h = LayeredFunctor::representable(&m0).phi(&c);
        assert!(h.source.is_zero());
        assert_eq!(h.target.dims, vec![2]);
        let s = simple_functor_cover(&c, &m0).unwrap();
        assert_eq!(s.source.module.total_dim(), 1);
        let ps = s.phi(&c);
        let a = c.base.projective(0);
        assert_eq!(ps.eval_dim(&a).unwrap(), 1);
        assert_eq!(ps.eval_dim(&c.base.simple(0)).unwrap(), 0);
    }

    #[test]
    fn evaluation_identity() {
        let c = line();
        let mods = [
            c.simple(0, 0).unwrap(),
            c.projective(0, 1).unwrap(),
            c.projective(0, 0).unwrap(),
        ];
        for (_, t) in battery(&c) {
            let p = t.phi(&c);
            for x in &mods {
                assert_eq!(
                    psi_evaluate(&c, &p, x).unwrap(),
                    twisted_eval_sum(&c, &t, x).unwrap()
                );
            }
        }
        let hom_a = FpFunctor::representable(&c.base.projective(0));
        assert_eq!(psi_evaluate(&c, &hom_a, &mods[0]).unwrap(), 1);
    }

    #[test]
    fn phi_hom_on_battery() {
        let c = line();
        let b = battery(&c);
        for (n1, t1) in &b {
            for (n2, t2) in &b {
                let chk = phi_hom_identity(&c, &format!("{n1}-{n2}"), t1, t2).unwrap();
                assert!(chk.pass, "{chk:?}");
            }
        }
        let s = &b[2].1;
        assert_eq!(phi_hom_identity(&c, "x", s, s).unwrap().actual, "1");
        assert_eq!(phi_hom_identity(&c, "x", s, &b[3].1).unwrap().actual, "0");
        let s1 = s.twist(&c, 1).unwrap();
        assert!(phi_hom_identity(&c, "x", s, &s1).unwrap().pass);
    }

    #[test]
    fn twisted_simple_is_simple_of_twist() {
        let c = line();
        let m0 = c.projective(0, 1).unwrap();
        let s1 = simple_functor_cover(&c, &c.twist(&m0, 1).unwrap()).unwrap();
        assert_eq!(
            simple_functor_cover(&c, &m0).unwrap().twist(&c, 1).unwrap(),
            s1
        );
    }

    #[test]
    fn lengths_match() {
        let c = line();
        let list = complete_list(&c.base, 16, 64).unwrap().unwrap();
        for (name, t) in battery(&c) {
            let lr = functor_length_cover(&c, &t, 32, 16, 256).unwrap();
            let la = t.phi(&c).length(&list, true).unwrap();
            assert_eq!(lr.length, la.length, "{name}");
        }
        let lr = functor_length_cover(&c, &battery(&c)[0].1, 32, 16, 256).unwrap();
        assert_eq!(lr.length, 3);
        assert_eq!(
            functor_length_cover(&c, &battery(&c)[2].1, 32, 16, 256)
                .unwrap()
                .length,
            1
        );
    }

    #[test]
    fn kg_pair_on_line() {
        let c = line();
        let caps = Caps {
            dim_cap: 16,
            count_cap: 256,
            max_margin: 32,
        };
        let (v, checks) = kg_level0_pair(&c, &battery(&c), &[-1, 2], caps).unwrap();
        assert_eq!(v, KG_ZERO);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn epi_cover_of_nilpotent_endomorphism() {
        let c = line();
        let m0 = c.projective(0, 1).unwrap();
        let a = c.push_down(&m0);
        let list = complete_list(&c.base, 16, 64).unwrap().unwrap();
        for alpha in hom_space(&a, &a).unwrap() {
            let u = FpFunctor::new(a.clone(), a.clone(), alpha).unwrap();
            let cover = phi_epi_cover(&c, &u, &m0, &m0).unwrap();
            assert_eq!(epi_certificate(&cover, &u, &list).unwrap(), (true, true));
        }
        let z = FpFunctor::new(a.clone(), a.clone(), ModMap::zero(&a, &a)).unwrap();
        let cover = phi_epi_cover(&c, &z, &m0, &m0).unwrap();
        assert_eq!(cover.shifts, vec![0]);
        assert_eq!(cover.phi.profile(&list).unwrap(), z.profile(&list).unwrap());
    }
}
