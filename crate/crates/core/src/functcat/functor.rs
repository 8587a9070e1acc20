//! Finitely presented contravariant functors `Coker Hom(-, f)` over a
//! bound quiver algebra.

use crate::error::{FoveaError, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};
use crate::modcat::{hom_space, right_almost_split, same_base, Algebra, ModMap, Module};

/// `T = Coker Hom(-, map)` for `map: source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFunctor {
    pub source: Module,
    pub target: Module,
    pub map: ModMap,
}

/// A natural transformation `Coker Hom(-,f1) -> Coker Hom(-,f2)` given by
/// `h: N1 -> N2` with witness `k: M1 -> M2`, `h f1 = f2 k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorMap {
    pub h: ModMap,
    pub k: ModMap,
}

/// `T(X)` as the quotient of `Hom(X, N)`, in coordinates of its hom basis.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub dim: usize,
    pub hom_basis: Vec<ModMap>,
    pub image: Subspace,
    /// Hom-basis coordinates spanning a complement of the image.
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthCertificate {
    pub profile: Vec<usize>,
    pub length: usize,
}

/// Coordinates of each map in `maps` with respect to a hom basis.
pub(crate) fn coords_in(
    field: Field,
    basis: &[ModMap],
    maps: &[ModMap],
) -> Result<Vec<Vec<Scalar>>> {
    if basis.is_empty() {
        return Ok(vec![Vec::new(); maps.len()]);
    }
    let len = basis[0].to_vector().len();
    let a = Matrix::from_columns(
        field,
        len,
        &basis.iter().map(ModMap::to_vector).collect::<Vec<_>>(),
    );
    let b = Matrix::from_columns(
        field,
        len,
        &maps.iter().map(ModMap::to_vector).collect::<Vec<_>>(),
    );
    let c = a
        .solve_matrix(&b)
        .ok_or_else(|| FoveaError::Invalid("map outside the hom space".into()))?;
    Ok(c.column_vectors())
}

impl FpFunctor {
    pub fn new(source: Module, target: Module, map: ModMap) -> Result<Self> {
        same_base(&source, &target)?;
        if !map.is_natural(&source, &target) {
            return Err(FoveaError::Invalid(
                "presentation map is not a homomorphism".into(),
            ));
        }
        Ok(FpFunctor {
            source,
            target,
            map,
        })
    }

    /// `Hom(-, N)`.
    pub fn representable(n: &Module) -> Self {
        let z = Module::zero(n.base.clone());
        FpFunctor {
            map: ModMap::zero(&z, n),
            source: z,
            target: n.clone(),
        }
    }

    pub fn zero(base: &Module) -> Self {
        FpFunctor::representable(&Module::zero(base.base.clone()))
    }

    pub fn field(&self) -> Field {
        self.target.field()
    }

    pub fn evaluate(&self, x: &Module) -> Result<Evaluation> {
        same_base(x, &self.target)?;
        let f = self.field();
        let hom_basis = hom_space(x, &self.target)?;
        let images: Vec<ModMap> = hom_space(x, &self.source)?
            .iter()
            .map(|u| u.then(&self.map))
            .collect();
        let image = Subspace::span(f, hom_basis.len(), coords_in(f, &hom_basis, &images)?)?;
        let basis = image.complement_coordinates();
        Ok(Evaluation {
            dim: hom_basis.len() - image.dim(),
            hom_basis,
            image,
            basis,
        })
    }

    pub fn eval_dim(&self, x: &Module) -> Result<usize> {
        Ok(self.evaluate(x)?.dim)
    }

    pub fn profile(&self, list: &[Module]) -> Result<Vec<usize>> {
        list.iter().map(|x| self.eval_dim(x)).collect()
    }

    /// Length as the total evaluation over a complete indecomposable list.
    pub fn length(&self, list: &[Module], complete: bool) -> Result<LengthCertificate> {
        if !complete {
            return Err(FoveaError::IncompleteList);
        }
        let profile = self.profile(list)?;
        Ok(LengthCertificate {
            length: profile.iter().sum(),
            profile,
        })
    }
}

/// Dimension and a basis of the natural transformations `T1 -> T2`:
/// `h: N1 -> N2` with `h f1` in `f2 Hom(M1, M2)`, modulo `f2 Hom(N1, M2)`.
pub fn fp_hom(t1: &FpFunctor, t2: &FpFunctor) -> Result<(usize, Vec<FunctorMap>)> {
    same_base(&t1.target, &t2.target)?;
    let f = t1.field();
    let hn = hom_space(&t1.target, &t2.target)?;
    if hn.is_empty() {
        return Ok((0, Vec::new()));
    }
    let hm = hom_space(&t1.source, &t2.source)?;
    let composed: Vec<Vec<Scalar>> = hn.iter().map(|h| t1.map.then(h).to_vector()).collect();
    let through: Vec<Vec<Scalar>> = hm.iter().map(|k| k.then(&t2.map).to_vector()).collect();
    let len = composed[0].len();
    let mut cols = composed.clone();
    cols.extend(
        through
            .iter()
            .map(|v| v.iter().map(|c| -c).collect::<Vec<_>>()),
    );
    // kernel of [h f1 | -f2 k] gives admissible pairs (h, k)
    let sys = Matrix::from_columns(f, len, &cols);
    let kernel = if len == 0 {
        Matrix::identity(f, cols.len()).row_vectors()
    } else {
        sys.kernel_basis()
    };
    let admissible = Subspace::span(
        f,
        hn.len(),
        kernel.iter().map(|v| v[..hn.len()].to_vec()).collect(),
    )?;
    let trivial_maps: Vec<ModMap> = hom_space(&t1.target, &t2.source)?
        .iter()
        .map(|u| u.then(&t2.map))
        .collect();
    let trivial = Subspace::span(f, hn.len(), coords_in(f, &hn, &trivial_maps)?)?;
    let mut span = trivial.clone();
    let mut out = Vec::new();
    for v in admissible.basis() {
        if span.contains(v) {
            continue;
        }
        span = span.sum(&Subspace::span(f, hn.len(), vec![v.clone()])?)?;
        let h = ModMap::linear_combination(&hn, v, &t1.target, &t2.target);
        let k = witness(&hm, &t1.map.then(&h), &t2.map, &t1.source, &t2.source)?;
        out.push(FunctorMap { h, k });
    }
    Ok((out.len(), out))
}

/// `k` with `f2 k = g`, searched in the span of `hm`.
fn witness(hm: &[ModMap], g: &ModMap, f2: &ModMap, m1: &Module, m2: &Module) -> Result<ModMap> {
    let target = g.to_vector();
    if hm.is_empty() || target.is_empty() {
        return Ok(ModMap::zero(m1, m2));
    }
    let f = m1.field();
    let cols: Vec<Vec<Scalar>> = hm.iter().map(|k| k.then(f2).to_vector()).collect();
    let c = Matrix::from_columns(f, target.len(), &cols)
        .solve(&target)
        .ok_or_else(|| FoveaError::Invalid("transformation has no lift".into()))?;
    Ok(ModMap::linear_combination(hm, &c, m1, m2))
}

impl FunctorMap {
    /// Whether `h f1 = f2 k`.
    pub fn is_valid(&self, t1: &FpFunctor, t2: &FpFunctor) -> bool {
        self.h.is_natural(&t1.target, &t2.target)
            && self.k.is_natural(&t1.source, &t2.source)
            && t1.map.then(&self.h) == self.k.then(&t2.map)
    }

    /// Whether the induced map `T1(X) -> T2(X)` is onto.
    pub fn is_epi_at(&self, t1: &FpFunctor, t2: &FpFunctor, x: &Module) -> Result<bool> {
        let f = t1.field();
        let e1 = t1.evaluate(x)?;
        let e2 = t2.evaluate(x)?;
        let pushed: Vec<ModMap> = e1.hom_basis.iter().map(|u| u.then(&self.h)).collect();
        let img = Subspace::span(f, e2.hom_basis.len(), coords_in(f, &e2.hom_basis, &pushed)?)?;
        Ok(img.sum(&e2.image)?.dim() == e2.hom_basis.len())
    }
}

/// `S^N = Hom(-,N) / rad(-,N)` presented by the right minimal almost split
/// map into `N`, computed against a complete list.
pub fn simple_functor(alg: &Algebra, n: &Module, list: &[Module]) -> Result<FpFunctor> {
    let g = right_almost_split(alg, n, list)?;
    FpFunctor::new(g.middle, n.clone(), g.map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::{enumerate_indecomposables, hom_dim};
    use crate::quiver::parse_bound_quiver;

    fn a2() -> (Algebra, Vec<Module>) {
        let a =
            Algebra::new(&parse_bound_quiver("vertex 1 2\narrow a: 1 -> 2\n").unwrap()).unwrap();
        // S1, S2, P2
        let list = vec![a.simple(0), a.simple(1), a.projective(1)];
        (a, list)
    }

    #[test]
    fn simple_functor_profiles() {
        let (a, l) = a2();
        let expected = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, n) in l.iter().enumerate() {
            let s = simple_functor(&a, n, &l).unwrap();
            assert_eq!(s.profile(&l).unwrap(), expected[i].to_vec());
            assert_eq!(s.length(&l, true).unwrap().length, 1);
        }
        let s2 = simple_functor(&a, &l[1], &l).unwrap();
        assert_eq!(s2.source.dims, vec![1, 1]);
        let s1 = simple_functor(&a, &l[0], &l).unwrap();
        assert!(s1.source.is_zero());
    }

    #[test]
    fn representable_lengths() {
        let (_, l) = a2();
        let hp = FpFunctor::representable(&l[2]);
        assert_eq!(hp.length(&l, true).unwrap().length, 2);
        let hs = FpFunctor::representable(&l[1]);
        assert_eq!(
            hs.length(&l, true).unwrap(),
            LengthCertificate {
                profile: vec![0, 1, 1],
                length: 2
            }
        );
        assert!(hs.length(&l, false).is_err());
        for x in &l {
            assert_eq!(hp.eval_dim(x).unwrap(), hom_dim(x, &l[2]).unwrap());
        }
    }

    #[test]
    fn trivial_presentations() {
        let (_, l) = a2();
        let id = FpFunctor::new(l[2].clone(), l[2].clone(), ModMap::identity(&l[2])).unwrap();
        assert_eq!(id.profile(&l).unwrap(), vec![0, 0, 0]);
        let z = Module::zero(l[2].base.clone());
        let to_zero = FpFunctor::new(l[2].clone(), z.clone(), ModMap::zero(&l[2], &z)).unwrap();
        assert_eq!(to_zero.profile(&l).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn functor_homs() {
        let (a, l) = a2();
        let s: Vec<FpFunctor> = l
            .iter()
            .map(|n| simple_functor(&a, n, &l).unwrap())
            .collect();
        assert_eq!(fp_hom(&s[1], &s[1]).unwrap().0, 1);
        assert_eq!(fp_hom(&s[0], &s[1]).unwrap().0, 0);
        assert_eq!(fp_hom(&s[1], &FpFunctor::zero(&l[0])).unwrap().0, 0);
        for x in &l {
            for y in &l {
                let d = fp_hom(&FpFunctor::representable(x), &FpFunctor::representable(y)).unwrap();
                assert_eq!(d.0, hom_dim(x, y).unwrap());
            }
        }
        let (_, maps) = fp_hom(&s[2], &s[2]).unwrap();
        assert!(maps.iter().all(|m| m.is_valid(&s[2], &s[2])));
    }

    #[test]
    fn quotient_maps_are_epi() {
        // Hom(-,P2) -> S^{P2}
        let (a, l) = a2();
        let s = simple_functor(&a, &l[2], &l).unwrap();
        let hp = FpFunctor::representable(&l[2]);
        let (d, maps) = fp_hom(&hp, &s).unwrap();
        assert_eq!(d, 1);
        assert!(maps[0].is_epi_at(&hp, &s, &l[2]).unwrap());
    }

    #[test]
    fn a3_lengths_sum() {
        let a = Algebra::new(
            &parse_bound_quiver("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap(),
        )
        .unwrap();
        let e = enumerate_indecomposables(&a, 16, 64).unwrap();
        let total: usize = e
            .modules
            .iter()
            .map(|n| {
                simple_functor(&a, n, &e.modules)
                    .unwrap()
                    .length(&e.modules, true)
                    .unwrap()
                    .length
            })
            .sum();
        assert_eq!(total, 6);
    }
}
