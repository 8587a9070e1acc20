//! Finite-support modules over the covering, the shift action, and the
//! push-down functor.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{FoveaError, Result};
use crate::exactla::{Matrix, Scalar};
use crate::modcat::{hom_space, Algebra, ModMap, Module};
use crate::par::Exec;
use crate::quiver::{lift_window, window_arrows, BoundQuiver, VoltageQuiver, Window};

/// A graded presentation together with the base algebra and cached window
/// lifts.
#[derive(Debug)]
pub struct Covering {
    pub vq: Arc<VoltageQuiver>,
    pub base: Algebra,
    lifts: Mutex<HashMap<Window, Arc<Algebra>>>,
}

/// A finite-dimensional module over the covering, stored over the lift of
/// a window containing its support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayeredModule {
    pub window: Window,
    pub module: Module,
}

/// A morphism between two layered modules living on the same window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredMap {
    pub window: Window,
    pub map: ModMap,
}

impl Covering {
    pub fn new(vq: VoltageQuiver) -> Result<Self> {
        let base = Algebra::new(&vq.base)?;
        Ok(Covering {
            vq: Arc::new(vq),
            base,
            lifts: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.base = self.base.with_seed(seed);
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.base = self.base.with_exec(exec);
        self
    }

    pub fn seed(&self) -> u64 {
        self.base.seed
    }

    pub fn exec(&self) -> Exec {
        self.base.exec
    }

    /// The algebra of the window lift, cached.
    pub fn window_algebra(&self, w: Window) -> Result<Arc<Algebra>> {
        if let Some(a) = self.lifts.lock().unwrap().get(&w) {
            return Ok(a.clone());
        }
        let q: BoundQuiver = lift_window(&self.vq, w)?;
        let alg = Arc::new(
            Algebra::new(&q)?
                .with_seed(self.seed())
                .with_exec(self.exec()),
        );
        Ok(self.lifts.lock().unwrap().entry(w).or_insert(alg).clone())
    }

    pub fn lift(&self, w: Window) -> Result<Arc<BoundQuiver>> {
        Ok(self.window_algebra(w)?.quiver.clone())
    }

    /// Longest layer span of a nonzero path.
    pub fn reach(&self) -> i64 {
        let maxdeg = self.vq.degree.iter().copied().max().unwrap_or(0);
        maxdeg * (self.vq.base.nilbound as i64 - 1).max(0)
    }

    pub fn layered(&self, window: Window, module: Module) -> Result<LayeredModule> {
        if *module.base != *self.lift(window)? {
            return Err(FoveaError::BaseMismatch);
        }
        Ok(LayeredModule { window, module })
    }

    pub fn zero(&self) -> Result<LayeredModule> {
        let w = Window { lo: 0, hi: 0 };
        Ok(LayeredModule {
            window: w,
            module: Module::zero(self.lift(w)?),
        })
    }

    pub fn simple(&self, v: usize, n: i64) -> Result<LayeredModule> {
        let w = Window { lo: n, hi: n };
        let alg = self.window_algebra(w)?;
        Ok(LayeredModule {
            window: w,
            module: alg.simple(self.vq.lifted_index(w, v, n)),
        })
    }

    /// `R(-, (v,n))`.
    pub fn projective(&self, v: usize, n: i64) -> Result<LayeredModule> {
        let w = Window {
            lo: n - self.reach(),
            hi: n,
        };
        let alg = self.window_algebra(w)?;
        self.trim(&LayeredModule {
            window: w,
            module: alg.projective(self.vq.lifted_index(w, v, n)),
        })
    }

    /// `D R((v,n), -)`.
    pub fn injective(&self, v: usize, n: i64) -> Result<LayeredModule> {
        let w = Window {
            lo: n,
            hi: n + self.reach(),
        };
        let alg = self.window_algebra(w)?;
        self.trim(&LayeredModule {
            window: w,
            module: alg.injective(self.vq.lifted_index(w, v, n)),
        })
    }

    /// Layers carrying a nonzero space, if any.
    pub fn support(&self, m: &LayeredModule) -> Option<Window> {
        let nb = self.vq.n_base();
        let layers: Vec<i64> = m
            .window
            .layers()
            .enumerate()
            .filter(|(i, _)| m.module.dims[i * nb..(i + 1) * nb].iter().any(|&d| d > 0))
            .map(|(_, n)| n)
            .collect();
        Some(Window {
            lo: *layers.first()?,
            hi: *layers.last()?,
        })
    }

    /// Same module over the lift of another window; data outside the
    /// overlap must be zero.
    pub fn reindex(&self, m: &LayeredModule, w: Window) -> Result<LayeredModule> {
        let f = self.vq.base.field;
        let nb = self.vq.n_base();
        let base = self.lift(w)?;
        let dims: Vec<usize> = w
            .layers()
            .flat_map(|n| {
                (0..nb).map(move |v| {
                    if m.window.contains(n) {
                        m.module.dims[self.vq.lifted_index(m.window, v, n)]
                    } else {
                        0
                    }
                })
            })
            .collect();
        for n in m.window.layers().filter(|n| !w.contains(*n)) {
            if (0..nb).any(|v| m.module.dims[self.vq.lifted_index(m.window, v, n)] > 0) {
                return Err(FoveaError::Invalid(format!("support leaves window {w}")));
            }
        }
        let old: HashMap<(usize, i64), usize> = window_arrows(&self.vq, m.window)
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        let mats = window_arrows(&self.vq, w)
            .into_iter()
            .map(|(a, n)| match old.get(&(a, n)) {
                Some(&i) => m.module.mats[i].clone(),
                None => {
                    let arr = &self.vq.base.arrows[a];
                    Matrix::zeros(
                        f,
                        dims[self.vq.lifted_index(w, arr.source, n)],
                        dims[self.vq.lifted_index(w, arr.target, n + self.vq.degree[a])],
                    )
                }
            })
            .collect();
        Ok(LayeredModule {
            window: w,
            module: Module { base, dims, mats },
        })
    }

    /// A map between `src` and `tgt` moved to window `w` alongside them.
    pub fn reindex_map(
        &self,
        f: &LayeredMap,
        src: &LayeredModule,
        tgt: &LayeredModule,
        w: Window,
    ) -> Result<(LayeredModule, LayeredModule, LayeredMap)> {
        let (s, t) = (self.reindex(src, w)?, self.reindex(tgt, w)?);
        let nb = self.vq.n_base();
        let field = self.vq.base.field;
        let comps = (0..s.module.dims.len())
            .map(|i| {
                let (v, n) = (i % nb, w.lo + (i / nb) as i64);
                if f.window.contains(n) {
                    f.map.comps[self.vq.lifted_index(f.window, v, n)].clone()
                } else {
                    Matrix::zeros(field, t.module.dims[i], s.module.dims[i])
                }
            })
            .collect();
        Ok((
            s,
            t,
            LayeredMap {
                window: w,
                map: ModMap { comps },
            },
        ))
    }

    /// Nonzero dimensions as `vertex@layer:dim`, or `0`.
    pub fn label(&self, m: &LayeredModule) -> String {
        let parts: Vec<String> = m
            .module
            .dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, d)| format!("{}:{d}", m.module.base.vertices[i]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }

    /// Shrinks the window to the support (zero modules go to `[0,0]`).
    pub fn trim(&self, m: &LayeredModule) -> Result<LayeredModule> {
        match self.support(m) {
            Some(s) if s == m.window => Ok(m.clone()),
            Some(s) => self.reindex(m, s),
            None => self.zero(),
        }
    }

    /// `ᵏM`, the module `M ∘ σ⁻ᵏ`: the same data `k` layers higher.
    pub fn twist(&self, m: &LayeredModule, k: i64) -> Result<LayeredModule> {
        let w = m.window.shift(k);
        let mut module = m.module.clone();
        module.base = self.lift(w)?;
        Ok(LayeredModule { window: w, module })
    }

    pub fn twist_map(&self, f: &LayeredMap, k: i64) -> LayeredMap {
        LayeredMap {
            window: f.window.shift(k),
            map: f.map.clone(),
        }
    }

    /// Both modules over the lift of the hull of their windows.
    pub fn align(
        &self,
        x: &LayeredModule,
        y: &LayeredModule,
    ) -> Result<(LayeredModule, LayeredModule)> {
        let w = x.window.hull(&y.window);
        Ok((self.reindex(x, w)?, self.reindex(y, w)?))
    }

    /// Basis of `Hom_R(X, Y)` over the hull window.
    pub fn hom(&self, x: &LayeredModule, y: &LayeredModule) -> Result<(Window, Vec<ModMap>)> {
        let (xa, ya) = self.align(x, y)?;
        Ok((xa.window, hom_space(&xa.module, &ya.module)?))
    }

    /// Shifts `k` for which `ᵏX` and `Y` have overlapping supports.
    pub fn shift_range(&self, x: &LayeredModule, y: &LayeredModule) -> Vec<i64> {
        match (self.support(x), self.support(y)) {
            (Some(sx), Some(sy)) => (sy.lo - sx.hi..=sy.hi - sx.lo).collect(),
            _ => Vec::new(),
        }
    }

    /// `Σ_k dim Hom_R(ᵏX, Y)`, with the per-shift dimensions.
    pub fn twisted_hom_dims(
        &self,
        x: &LayeredModule,
        y: &LayeredModule,
    ) -> Result<Vec<(i64, usize)>> {
        let ks = self.shift_range(x, y);
        self.exec()
            .map(&ks, |&k| Ok((k, self.hom(&self.twist(x, k)?, y)?.1.len())))
            .into_iter()
            .collect()
    }

    /// `F_λ M`: at a base vertex `v`, the layers `M(v,n)` stacked by `n`.
    pub fn push_down(&self, m: &LayeredModule) -> Module {
        let f = self.vq.base.field;
        let vq = &self.vq;
        let nb = vq.n_base();
        let w = m.window;
        let layer_dim = |v: usize, n: i64| m.module.dims[vq.lifted_index(w, v, n)];
        let dims: Vec<usize> = (0..nb)
            .map(|v| w.layers().map(|n| layer_dim(v, n)).sum())
            .collect();
        let offset = |v: usize, n: i64| (w.lo..n).map(|k| layer_dim(v, k)).sum::<usize>();
        let mut mats: Vec<Matrix> = vq
            .base
            .arrows
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.source], dims[a.target]))
            .collect();
        for (i, (a, n)) in window_arrows(vq, w).into_iter().enumerate() {
            let arr = &vq.base.arrows[a];
            let blk = &m.module.mats[i];
            if blk.rows() > 0 && blk.cols() > 0 {
                mats[a].set_block(
                    offset(arr.source, n),
                    offset(arr.target, n + vq.degree[a]),
                    blk,
                );
            }
        }
        Module {
            base: self.base.quiver.clone(),
            dims,
            mats,
        }
    }

    /// `F_λ f`: block-diagonal over layers.
    pub fn push_down_map(&self, f: &LayeredMap) -> ModMap {
        let nb = self.vq.n_base();
        let field = self.vq.base.field;
        let comps = (0..nb)
            .map(|v| {
                let blocks: Vec<Matrix> = f
                    .window
                    .layers()
                    .map(|n| f.map.comps[self.vq.lifted_index(f.window, v, n)].clone())
                    .collect();
                Matrix::block_diag(field, &blocks)
            })
            .collect();
        ModMap { comps }
    }

    /// Writes `α: F_λX -> F_λY` as `Σ_k F_λ(f_k)` with `f_k: ᵏX -> Y`;
    /// returns the nonzero components.
    pub fn lift_morphism(
        &self,
        x: &LayeredModule,
        y: &LayeredModule,
        alpha: &ModMap,
    ) -> Result<Vec<(i64, LayeredMap)>> {
        let field = self.vq.base.field;
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        let mut owners: Vec<(i64, Window, ModMap)> = Vec::new();
        for k in self.shift_range(x, y) {
            let (w, basis) = self.hom(&self.twist(x, k)?, y)?;
            for b in basis {
                cols.push(
                    self.push_down_map(&LayeredMap {
                        window: w,
                        map: b.clone(),
                    })
                    .to_vector(),
                );
                owners.push((k, w, b));
            }
        }
        let target = alpha.to_vector();
        let coeffs = if cols.is_empty() {
            target.iter().all(Scalar::is_zero).then(Vec::new)
        } else {
            Matrix::from_columns(field, target.len(), &cols).solve(&target)
        }
        .ok_or(FoveaError::NotLiftable)?;
        let mut out: Vec<(i64, LayeredMap)> = Vec::new();
        for ((k, w, b), c) in owners.into_iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            match out.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, lm)) => lm.map = lm.map.add(&b.scale(&c)),
                None => out.push((
                    k,
                    LayeredMap {
                        window: w,
                        map: b.scale(&c),
                    },
                )),
            }
        }
        out.retain(|(_, lm)| !lm.map.is_zero());
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::{are_isomorphic, hom_dim, is_indecomposable};

    fn line() -> Covering {
        Covering::new(
            VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n")
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn intervals_and_twists() {
        let c = line();
        let m0 = c.projective(0, 1).unwrap();
        assert_eq!(m0.window, Window { lo: 0, hi: 1 });
        assert_eq!(m0.module.dims, vec![1, 1]);
        let m1 = c.twist(&m0, 1).unwrap();
        assert_eq!(m1, c.projective(0, 2).unwrap());
        assert_eq!(c.twist(&m1, -1).unwrap(), m0);
        assert_eq!(c.twist(&m0, 0).unwrap(), m0);
        let s = c.simple(0, 0).unwrap();
        assert_eq!(c.twist(&s, 3).unwrap(), c.simple(0, 3).unwrap());
    }

    #[test]
    fn push_downs_on_the_line() {
        let c = line();
        let s0 = c.simple(0, 0).unwrap();
        let ps = c.push_down(&s0);
        assert_eq!(ps.dims, vec![1]);
        assert!(ps.mats[0].is_zero());
        let m0 = c.projective(0, 1).unwrap();
        let pm = c.push_down(&m0);
        assert_eq!(pm.dims, vec![2]);
        assert_eq!(pm.mats[0].rank(), 1);
        assert!(are_isomorphic(&pm, &c.base.projective(0), 0).unwrap());
        assert!(c.push_down(&c.zero().unwrap()).is_zero());
        assert_eq!(c.push_down(&c.twist(&m0, 5).unwrap()), pm);
        assert!(is_indecomposable(&pm, 0).unwrap());
    }

    #[test]
    fn hom_sums_match_base() {
        let c = line();
        let s0 = c.simple(0, 0).unwrap();
        let m0 = c.projective(0, 1).unwrap();
        let mm1 = c.twist(&m0, -1).unwrap();
        for x in [&s0, &m0, &mm1] {
            for y in [&s0, &m0, &mm1] {
                let sum: usize = c.twisted_hom_dims(x, y).unwrap().iter().map(|p| p.1).sum();
                assert_eq!(sum, hom_dim(&c.push_down(x), &c.push_down(y)).unwrap());
            }
        }
        assert_eq!(c.hom(&mm1, &m0).unwrap().1.len(), 1);
    }

    #[test]
    fn socle_inclusion_pushes_down() {
        let c = line();
        let s1 = c.simple(0, 0).unwrap();
        let m0 = c.projective(0, 1).unwrap();
        let (w, basis) = c.hom(&s1, &m0).unwrap();
        assert_eq!(basis.len(), 1);
        let f = LayeredMap {
            window: w,
            map: basis[0].clone(),
        };
        let pf = c.push_down_map(&f);
        assert_eq!(pf.rank(), 1);
        assert_eq!(c.push_down_map(&c.twist_map(&f, 2)), pf);
    }

    #[test]
    fn lifting_round_trip() {
        let c = line();
        let m0 = c.projective(0, 1).unwrap();
        let a = c.push_down(&m0);
        let end = hom_space(&a, &a).unwrap();
        for alpha in &end {
            let parts = c.lift_morphism(&m0, &m0, alpha).unwrap();
            let back = parts.iter().fold(ModMap::zero(&a, &a), |acc, (_, f)| {
                acc.add(&c.push_down_map(f))
            });
            assert_eq!(&back, alpha);
        }
        let id = c.lift_morphism(&m0, &m0, &ModMap::identity(&a)).unwrap();
        assert_eq!(id.len(), 1);
        assert_eq!(id[0].0, 0);
    }
}
