//! Restriction and extension of functors along a convex full subcategory.

use std::sync::Arc;

use crate::error::{FoveaError, Result};
use crate::exactla::Matrix;
use crate::modcat::{hom_space, Algebra, ModMap, Module};
use crate::quiver::is_convex_indices;

use super::functor::{coords_in, FpFunctor};

/// A convex vertex subset `B` of an algebra `C` with both algebras built.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub ambient: Algebra,
    pub keep: Vec<usize>,
    pub sub: Algebra,
}

impl Restriction {
    pub fn new(ambient: &Algebra, keep: &[usize]) -> Result<Self> {
        if !is_convex_indices(&ambient.basis, keep) {
            return Err(FoveaError::NotConvex);
        }
        let sub = Algebra::new(&ambient.quiver.full_subquiver(keep))?
            .with_seed(ambient.seed)
            .with_exec(ambient.exec);
        Ok(Restriction {
            ambient: ambient.clone(),
            keep: keep.to_vec(),
            sub,
        })
    }

    /// `M ε`.
    pub fn res(&self, m: &Module) -> Module {
        let q = &self.ambient.quiver;
        let mats = q
            .arrows
            .iter()
            .zip(&m.mats)
            .filter(|(a, _)| self.keep.contains(&a.source) && self.keep.contains(&a.target))
            .map(|(_, x)| x.clone())
            .collect();
        Module {
            base: self.sub.quiver.clone(),
            dims: self.keep.iter().map(|&v| m.dims[v]).collect(),
            mats,
        }
    }

    pub fn res_map(&self, f: &ModMap) -> ModMap {
        ModMap {
            comps: self.keep.iter().map(|&v| f.comps[v].clone()).collect(),
        }
    }

    /// `P_z -> P_w`, `u -> u*a`, for an arrow `a: z -> w`.
    fn arrow_map(&self, a: usize) -> ModMap {
        let (pb, arr) = (&self.ambient.basis, &self.ambient.quiver.arrows[a]);
        let el = pb.path_element(arr.source, arr.target, &[a]);
        ModMap {
            comps: (0..self.ambient.n())
                .map(|t| pb.right_mul_matrix(t, arr.source, arr.target, &el))
                .collect(),
        }
    }

    fn coinduce_bases(&self, x: &Module) -> Result<Vec<Vec<ModMap>>> {
        (0..self.ambient.n())
            .map(|z| hom_space(&self.res(&self.ambient.projective(z)), x))
            .collect()
    }

    /// `L_ε X = Hom_B(Rε, X)`: at `z`, the maps `P_z ε -> X`.
    pub fn coinduce(&self, x: &Module) -> Result<Module> {
        let f = x.field();
        let bases = self.coinduce_bases(x)?;
        let q = &self.ambient.quiver;
        let mats = (0..q.arrows.len())
            .map(|a| {
                let (z, w) = (q.arrows[a].source, q.arrows[a].target);
                let rho = self.res_map(&self.arrow_map(a));
                let pulled: Vec<ModMap> = bases[w].iter().map(|h| rho.then(h)).collect();
                let cols = coords_in(f, &bases[z], &pulled)?;
                Ok(Matrix::from_columns(f, bases[z].len(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(
            self.ambient.quiver.clone(),
            bases.iter().map(Vec::len).collect(),
            mats,
        )
    }

    pub fn coinduce_map(&self, g: &ModMap, x: &Module, y: &Module) -> Result<ModMap> {
        let f = x.field();
        let (bx, by) = (self.coinduce_bases(x)?, self.coinduce_bases(y)?);
        let comps = (0..self.ambient.n())
            .map(|z| {
                let pushed: Vec<ModMap> = bx[z].iter().map(|h| h.then(g)).collect();
                Ok(Matrix::from_columns(
                    f,
                    by[z].len(),
                    &coords_in(f, &by[z], &pushed)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModMap { comps })
    }

    /// `T ∘ T_ε = Coker Hom_B(-, f ε)`.
    pub fn restrict_functor(&self, t: &FpFunctor) -> Result<FpFunctor> {
        if !Arc::ptr_eq(&t.target.base, &self.ambient.quiver)
            && *t.target.base != *self.ambient.quiver
        {
            return Err(FoveaError::BaseMismatch);
        }
        FpFunctor::new(
            self.res(&t.source),
            self.res(&t.target),
            self.res_map(&t.map),
        )
    }

    /// `S ∘ res_ε = Coker Hom_C(-, L_ε g)`.
    pub fn extend_functor(&self, s: &FpFunctor) -> Result<FpFunctor> {
        if *s.target.base != *self.sub.quiver {
            return Err(FoveaError::BaseMismatch);
        }
        let m = self.coinduce(&s.source)?;
        let n = self.coinduce(&s.target)?;
        let g = self.coinduce_map(&s.map, &s.source, &s.target)?;
        FpFunctor::new(m, n, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functcat::functor::fp_hom;
    use crate::functcat::functor::simple_functor;
    use crate::modcat::{are_isomorphic, enumerate_indecomposables};
    use crate::quiver::{lift_window, VoltageQuiver, Window};

    fn line3() -> Algebra {
        let vq =
            VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n")
                .unwrap();
        Algebra::new(&lift_window(&vq, Window { lo: 0, hi: 2 }).unwrap()).unwrap()
    }

    #[test]
    fn convexity_required() {
        let c = line3();
        assert!(matches!(
            Restriction::new(&c, &[0, 2]),
            Err(FoveaError::NotConvex)
        ));
        assert!(Restriction::new(&c, &[0, 1]).is_ok());
    }

    #[test]
    fn coinduction_restricts_back() {
        let c = line3();
        let r = Restriction::new(&c, &[0, 1]).unwrap();
        let e = enumerate_indecomposables(&r.sub, 8, 64).unwrap();
        for x in &e.modules {
            let l = r.coinduce(x).unwrap();
            assert!(are_isomorphic(&r.res(&l), x, 0).unwrap());
        }
    }

    #[test]
    fn round_trip_profiles() {
        let c = line3();
        let r = Restriction::new(&c, &[0, 1]).unwrap();
        let list = enumerate_indecomposables(&r.sub, 8, 64).unwrap().modules;
        let mut fs: Vec<FpFunctor> = list.iter().map(FpFunctor::representable).collect();
        fs.extend(
            list.iter()
                .map(|x| simple_functor(&r.sub, x, &list).unwrap()),
        );
        for s in &fs {
            let back = r.restrict_functor(&r.extend_functor(s).unwrap()).unwrap();
            assert_eq!(back.profile(&list).unwrap(), s.profile(&list).unwrap());
        }
        for s in &fs {
            for t in &fs {
                let (es, et) = (r.extend_functor(s).unwrap(), r.extend_functor(t).unwrap());
                assert_eq!(fp_hom(&es, &et).unwrap().0, fp_hom(s, t).unwrap().0);
            }
        }
    }

    #[test]
    fn restriction_of_representable() {
        let c = line3();
        let r = Restriction::new(&c, &[0, 1]).unwrap();
        let m = c.projective(1);
        let t = r.restrict_functor(&FpFunctor::representable(&m)).unwrap();
        assert_eq!(t.target, r.res(&m));
        let full = Restriction::new(&c, &[0, 1, 2]).unwrap();
        let list = enumerate_indecomposables(&c, 8, 64).unwrap().modules;
        let h = FpFunctor::representable(&m);
        let relist: Vec<Module> = list.iter().map(|x| full.res(x)).collect();
        assert_eq!(
            full.restrict_functor(&h).unwrap().profile(&relist).unwrap(),
            h.profile(&list).unwrap()
        );
    }
}
