//! Radical layers between listed indecomposables and right minimal almost
//! split maps assembled from irreducible maps.

use crate::error::{FoveaError, Result};
use crate::exactla::{Scalar, Subspace};
use crate::par::Exec;

use super::algebra::Algebra;
use super::ar::projective_vertex;
use super::decompose::isomorphic_indecomposables;
use super::hom::{hom_space, radical_from_bases};
use super::module::{direct_sum, same_base, ModMap, Module};

/// Bases of `rad(M_i, M_j)` for every ordered pair of a module list.
#[derive(Clone, Debug)]
pub struct RadTable {
    pub modules: Vec<Module>,
    rad: Vec<Vec<ModMap>>,
}

/// `rad(X,N) / rad²(X,N)`: its dimension and maps lifting a basis.
#[derive(Clone, Debug)]
pub struct IrrSpace {
    pub dim: usize,
    pub basis: Vec<ModMap>,
}

/// A right almost split map `g: E -> N` with `E = ⊕ M_i^{k_i}`.
#[derive(Clone, Debug)]
pub struct RightAlmostSplit {
    pub middle: Module,
    pub map: ModMap,
    /// `(list index, multiplicity)`; empty when `N` is projective.
    pub multiplicities: Vec<(usize, usize)>,
}

fn radical_basis(x: &Module, y: &Module) -> Result<Vec<ModMap>> {
    let hxy = hom_space(x, y)?;
    let hyx = hom_space(y, x)?;
    let rad = radical_from_bases(x, &hxy, &hyx)?;
    Ok(rad
        .basis()
        .iter()
        .map(|c| ModMap::linear_combination(&hxy, c, x, y))
        .collect())
}

impl RadTable {
    pub fn new(modules: Vec<Module>, exec: Exec) -> Result<Self> {
        for m in &modules {
            same_base(&modules[0], m)?;
        }
        let n = modules.len();
        let rad = exec
            .map_range(0..n * n, |k| {
                radical_basis(&modules[k / n], &modules[k % n])
            })
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        Ok(RadTable { modules, rad })
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn rad(&self, i: usize, j: usize) -> &[ModMap] {
        &self.rad[i * self.len() + j]
    }

    /// `rad(M_i, M_j) / rad²`, with `rad²` spanned by composites through
    /// every listed module.
    pub fn irr(&self, i: usize, j: usize) -> IrrSpace {
        let rad = self.rad(i, j);
        if rad.is_empty() {
            return IrrSpace {
                dim: 0,
                basis: Vec::new(),
            };
        }
        let f = self.modules[i].field();
        let ambient = rad[0].to_vector().len();
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for k in 0..self.len() {
            for a in self.rad(i, k) {
                for b in self.rad(k, j) {
                    gens.push(a.then(b).to_vector());
                }
            }
        }
        let mut span =
            Subspace::span(f, ambient, gens).expect("composites share the ambient space");
        let mut basis = Vec::new();
        for r in rad {
            let v = r.to_vector();
            if !span.contains(&v) {
                span =
                    Subspace::span(f, ambient, [span.basis().to_vec(), vec![v]].concat()).unwrap();
                basis.push(r.clone());
            }
        }
        IrrSpace {
            dim: basis.len(),
            basis,
        }
    }

    /// Minimal right almost split map into `M_j`, checked by factorization.
    pub fn right_almost_split(&self, alg: &Algebra, j: usize) -> Result<RightAlmostSplit> {
        let n = &self.modules[j];
        let f = n.field();
        if projective_vertex(alg, n).is_some() {
            let (r, inc) = n.radical();
            return Ok(RightAlmostSplit {
                middle: r,
                map: inc,
                multiplicities: Vec::new(),
            });
        }
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        let mut multiplicities = Vec::new();
        for i in 0..self.len() {
            let irr = self.irr(i, j);
            if irr.dim > 0 {
                multiplicities.push((i, irr.dim));
            }
            for g in irr.basis {
                parts.push(&self.modules[i]);
                maps.push(g);
            }
        }
        let (middle, _, _) = direct_sum(alg.quiver.clone(), &parts);
        let comps = (0..alg.n())
            .map(|z| {
                maps.iter()
                    .fold(crate::exactla::Matrix::zeros(f, n.dims[z], 0), |acc, g| {
                        acc.hstack(&g.comps[z])
                    })
            })
            .collect();
        let map = ModMap { comps };
        self.verify(j, &middle, &map)?;
        Ok(RightAlmostSplit {
            middle,
            map,
            multiplicities,
        })
    }

    /// Every radical map from a listed module into `M_j` factors through
    /// `g`, and `g` is not a split epimorphism.
    pub fn verify(&self, j: usize, e: &Module, g: &ModMap) -> Result<()> {
        let n = &self.modules[j];
        if factors_through(n, e, g, &ModMap::identity(n))? {
            return Err(FoveaError::AlmostSplit("map is a split epimorphism".into()));
        }
        for i in 0..self.len() {
            for h in self.rad(i, j) {
                if !factors_through(&self.modules[i], e, g, h)? {
                    return Err(FoveaError::AlmostSplit(format!(
                        "a radical map from list entry {i} does not factor; the list is incomplete"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Whether `h: X -> N` equals `g ∘ t` for some `t: X -> E`.
pub fn factors_through(x: &Module, e: &Module, g: &ModMap, h: &ModMap) -> Result<bool> {
    let f = x.field();
    let target = h.to_vector();
    if target.iter().all(Scalar::is_zero) {
        return Ok(true);
    }
    let gens: Vec<Vec<Scalar>> = hom_space(x, e)?
        .iter()
        .map(|t| t.then(g).to_vector())
        .collect();
    let s = Subspace::span(f, target.len(), gens)?;
    Ok(s.contains(&target))
}

/// `irr(X, N)` relative to an indecomposable list.
pub fn irr_space(x: &Module, n: &Module, list: &[Module], exec: Exec) -> Result<IrrSpace> {
    let mut mods = vec![x.clone(), n.clone()];
    mods.extend(list.iter().cloned());
    Ok(RadTable::new(mods, exec)?.irr(0, 1))
}

/// Right minimal almost split map into `N`, relative to a complete list.
pub fn right_almost_split(alg: &Algebra, n: &Module, list: &[Module]) -> Result<RightAlmostSplit> {
    let mut mods: Vec<Module> = Vec::new();
    let mut j = None;
    for m in list {
        if j.is_none() && isomorphic_indecomposables(m, n)? {
            j = Some(mods.len());
            mods.push(n.clone());
        } else {
            mods.push(m.clone());
        }
    }
    let j = match j {
        Some(j) => j,
        None => {
            mods.push(n.clone());
            mods.len() - 1
        }
    };
    RadTable::new(mods, alg.exec)?.right_almost_split(alg, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_bound_quiver;

    fn a2() -> (Algebra, Vec<Module>) {
        let a =
            Algebra::new(&parse_bound_quiver("vertex 1 2\narrow a: 1 -> 2\n").unwrap()).unwrap();
        let list = vec![a.simple(0), a.simple(1), a.projective(1)];
        (a, list)
    }

    #[test]
    fn a2_irreducibles() {
        let (_, l) = a2();
        let ex = Exec::Sequential;
        assert_eq!(irr_space(&l[0], &l[2], &l, ex).unwrap().dim, 1);
        assert_eq!(irr_space(&l[2], &l[1], &l, ex).unwrap().dim, 1);
        assert_eq!(irr_space(&l[0], &l[1], &l, ex).unwrap().dim, 0);
    }

    #[test]
    fn a2_right_almost_split() {
        let (a, l) = a2();
        let g = right_almost_split(&a, &l[1], &l).unwrap();
        assert_eq!(g.middle.dims, vec![1, 1]);
        let g = right_almost_split(&a, &l[2], &l).unwrap();
        assert_eq!(g.middle, l[0]);
        let g = right_almost_split(&a, &l[0], &l).unwrap();
        assert!(g.middle.is_zero());
    }

    #[test]
    fn incomplete_list_detected() {
        let (a, l) = a2();
        // the zero map into S2 misses the radical map P2 -> S2
        let full = RadTable::new(l.clone(), Exec::Sequential).unwrap();
        let zero_mid = Module::zero(a.quiver.clone());
        assert!(full
            .verify(1, &zero_mid, &ModMap::zero(&zero_mid, &l[1]))
            .is_err());
    }
}
