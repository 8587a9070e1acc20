//! Krull–Schmidt decomposition by Fitting splitting of random endomorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{FoveaError, Result};
use crate::exactla::{minimal_polynomial, proper_factor, Field, Matrix, Poly, Scalar};

use super::hom::{hom_space, radical_from_bases};
use super::module::{ModMap, Module};

const ATTEMPTS: usize = 48;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: ModMap,
    pub projection: ModMap,
}

/// Indecomposable summands with inclusions and projections witnessing
/// `M ≅ ⊕ summands`; `classes` groups isomorphic summands.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    /// One representative per isomorphism class with its multiplicity.
    pub fn multiplicities(&self) -> Vec<(&Module, usize)> {
        self.classes
            .iter()
            .map(|c| (&self.summands[c[0]].module, c.len()))
            .collect()
    }
}

fn random_scalar<R: Rng>(f: Field, rng: &mut R) -> Scalar {
    match f {
        Field::Prime(p) => f.from_i64(rng.gen_range(0..p) as i64),
        Field::Rational => f.from_i64(rng.gen_range(-64..=64)),
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    a.mul(b).div_rem(&a.gcd(b)).0.monic()
}

/// Proper nonzero submodules `(K, I)` with `M = K ⊕ I`, or `None` when `M`
/// is indecomposable.
fn split<R: Rng>(m: &Module, rng: &mut R) -> Result<Option<(Vec<Matrix>, Vec<Matrix>)>> {
    let f = m.field();
    let end = hom_space(m, m)?;
    if end.len() <= 1 {
        return Ok(None);
    }
    let rad = radical_from_bases(m, &end, &end)?;
    let top = end.len() - rad.dim();
    if top == 1 {
        return Ok(None);
    }
    for attempt in 0..end.len() + ATTEMPTS {
        // canonical basis elements first: they are often idempotents
        let coeffs: Vec<Scalar> = if attempt < end.len() {
            crate::quiver::unit(f, end.len(), attempt)
        } else {
            (0..end.len()).map(|_| random_scalar(f, rng)).collect()
        };
        let phi = ModMap::linear_combination(&end, &coeffs, m, m);
        let mp = phi
            .comps
            .iter()
            .filter(|c| c.rows() > 0)
            .fold(Poly::one(f), |acc, c| lcm(&acc, &minimal_polynomial(c)));
        let r = mp.squarefree_part();
        let deg = r.degree().unwrap_or(0);
        if deg < 2 {
            continue;
        }
        match proper_factor(&r, rng) {
            Some(g) => {
                let n = m.dims.iter().copied().max().unwrap_or(0);
                let mut ker = Vec::new();
                let mut img = Vec::new();
                for (c, &d) in phi.comps.iter().zip(&m.dims) {
                    let psi = g.eval_matrix(c).pow(n);
                    if d == 0 {
                        ker.push(Matrix::zeros(f, 0, 0));
                        img.push(Matrix::zeros(f, 0, 0));
                        continue;
                    }
                    ker.push(Matrix::from_columns(f, d, &psi.kernel_basis()));
                    img.push(psi);
                }
                return Ok(Some((ker, img)));
            }
            None => {
                let certain = matches!(f, Field::Prime(_)) || deg <= 3;
                if deg == top && certain {
                    return Ok(None);
                }
            }
        }
    }
    Err(FoveaError::Decomposition(ATTEMPTS))
}

fn collect<R: Rng>(
    m: &Module,
    inc: ModMap,
    rng: &mut R,
    out: &mut Vec<(Module, ModMap)>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    match split(m, rng)? {
        None => out.push((m.clone(), inc)),
        Some((k, i)) => {
            let (km, kinc) = m.submodule(&k);
            let (im, iinc) = m.submodule(&i);
            collect(&km, kinc.then(&inc), rng, out)?;
            collect(&im, iinc.then(&inc), rng, out)?;
        }
    }
    Ok(())
}

/// Decomposes `M` into indecomposables; deterministic for a given seed.
pub fn decompose(m: &Module, seed: u64) -> Result<Decomposition> {
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pieces = Vec::new();
    collect(m, ModMap::identity(m), &mut rng, &mut pieces)?;

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..pieces.len() {
        let mut placed = false;
        for c in classes.iter_mut() {
            if isomorphic_indecomposables(&pieces[c[0]].0, &pieces[i].0)? {
                c.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    classes.sort_by(|a, b| {
        let (x, y) = (&pieces[a[0]].0, &pieces[b[0]].0);
        (x.total_dim(), &x.dims, x.to_text()).cmp(&(y.total_dim(), &y.dims, y.to_text()))
    });
    let order: Vec<usize> = classes.iter().flatten().copied().collect();
    let mut new_index = vec![0; pieces.len()];
    for (k, &i) in order.iter().enumerate() {
        new_index[i] = k;
    }
    let classes: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| c.iter().map(|&i| new_index[i]).collect())
        .collect();

    let nv = m.dims.len();
    let mut projections: Vec<Vec<Matrix>> = vec![Vec::new(); pieces.len()];
    for x in 0..nv {
        if m.dims[x] == 0 {
            for (k, &i) in order.iter().enumerate() {
                projections[k].push(Matrix::zeros(f, pieces[i].0.dims[x], 0));
            }
            continue;
        }
        let mut b = Matrix::zeros(f, m.dims[x], 0);
        for &i in &order {
            b = b.hstack(&pieces[i].1.comps[x]);
        }
        let binv = b
            .inverse()
            .ok_or_else(|| FoveaError::Invalid("summands do not span".into()))?;
        let mut row = 0;
        for (k, &i) in order.iter().enumerate() {
            let d = pieces[i].0.dims[x];
            projections[k].push(binv.select_rows(&(row..row + d).collect::<Vec<_>>()));
            row += d;
        }
    }
    let summands = order
        .iter()
        .zip(projections)
        .map(|(&i, p)| Summand {
            module: pieces[i].0.clone(),
            inclusion: pieces[i].1.clone(),
            projection: ModMap { comps: p },
        })
        .collect();
    Ok(Decomposition { summands, classes })
}

pub fn is_indecomposable(m: &Module, seed: u64) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(split(m, &mut rng)?.is_none())
}

/// For indecomposable `X`, `Y`: an isomorphism `X -> Y` and its inverse.
pub fn iso_witness(x: &Module, y: &Module) -> Result<Option<(ModMap, ModMap)>> {
    if x.dims != y.dims {
        return Ok(None);
    }
    let hxy = hom_space(x, y)?;
    let hyx = hom_space(y, x)?;
    let rad = radical_from_bases(x, &hxy, &hyx)?;
    if rad.dim() == hxy.len() {
        return Ok(None);
    }
    let d = hxy.len();
    let k = (0..d)
        .find(|&i| !rad.contains(&crate::quiver::unit(x.field(), d, i)))
        .expect("some basis vector lies outside a proper subspace");
    let f = hxy[k].clone();
    let inv = ModMap {
        comps: f
            .comps
            .iter()
            .map(|c| {
                if c.rows() == 0 {
                    c.clone()
                } else {
                    c.inverse().expect("isomorphism")
                }
            })
            .collect(),
    };
    Ok(Some((f, inv)))
}

pub fn isomorphic_indecomposables(x: &Module, y: &Module) -> Result<bool> {
    Ok(iso_witness(x, y)?.is_some())
}

/// Isomorphism of arbitrary modules by comparing decompositions.
pub fn are_isomorphic(m: &Module, n: &Module, seed: u64) -> Result<bool> {
    if m.dims != n.dims {
        return Ok(false);
    }
    let (dm, dn) = (decompose(m, seed)?, decompose(n, seed)?);
    let (mm, mn) = (dm.multiplicities(), dn.multiplicities());
    if mm.len() != mn.len() {
        return Ok(false);
    }
    let mut used = vec![false; mn.len()];
    for (a, k) in &mm {
        let mut found = false;
        for (j, (b, l)) in mn.iter().enumerate() {
            if !used[j] && k == l && isomorphic_indecomposables(a, b)? {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::direct_sum;
    use crate::quiver::parse_bound_quiver;
    use std::sync::Arc;

    fn a2() -> (Arc<crate::quiver::BoundQuiver>, Module, Module, Module) {
        let q = Arc::new(parse_bound_quiver("vertex 1 2\narrow a: 1 -> 2\n").unwrap());
        let f = q.field;
        let p2 = Module::new(q.clone(), vec![1, 1], vec![Matrix::identity(f, 1)]).unwrap();
        (
            q.clone(),
            Module::simple(q.clone(), 0),
            Module::simple(q, 1),
            p2,
        )
    }

    #[test]
    fn p2_plus_s1() {
        let (q, s1, _, p2) = a2();
        let (m, _, _) = direct_sum(q, &[&p2, &s1]);
        let d = decompose(&m, 7).unwrap();
        let mult: Vec<usize> = d.multiplicities().iter().map(|x| x.1).collect();
        assert_eq!(mult, vec![1, 1]);
        for s in &d.summands {
            assert!(s.inclusion.is_natural(&s.module, &m));
            assert!(s.projection.is_natural(&m, &s.module));
            assert_eq!(s.inclusion.then(&s.projection), ModMap::identity(&s.module));
        }
        let total = d.summands.iter().fold(ModMap::zero(&m, &m), |acc, s| {
            acc.add(&s.projection.then(&s.inclusion))
        });
        assert_eq!(total, ModMap::identity(&m));
    }

    #[test]
    fn semisimple_square() {
        let (q, s1, s2, p2) = a2();
        let (m, _, _) = direct_sum(q.clone(), &[&s1, &s1]);
        let d = decompose(&m, 1).unwrap();
        assert_eq!(d.multiplicities().len(), 1);
        assert_eq!(d.multiplicities()[0].1, 2);
        assert!(is_indecomposable(&s1, 0).unwrap());
        assert!(is_indecomposable(&p2, 0).unwrap());
        let (m, _, _) = direct_sum(q, &[&s1, &s2]);
        assert!(!is_indecomposable(&m, 0).unwrap());
    }

    #[test]
    fn decomposition_is_deterministic() {
        let (q, s1, s2, p2) = a2();
        let (m, _, _) = direct_sum(q, &[&s2, &p2, &s1, &p2]);
        let a = decompose(&m, 3).unwrap();
        let b = decompose(&m, 3).unwrap();
        let ta: Vec<String> = a.summands.iter().map(|s| s.module.to_text()).collect();
        let tb: Vec<String> = b.summands.iter().map(|s| s.module.to_text()).collect();
        assert_eq!(ta, tb);
        assert_eq!(a.summands.len(), 4);
    }

    #[test]
    fn rationals_too() {
        let q = Arc::new(parse_bound_quiver("field q\nvertex 1 2\narrow a: 1 -> 2\n").unwrap());
        let s1 = Module::simple(q.clone(), 0);
        let s2 = Module::simple(q.clone(), 1);
        let (m, _, _) = direct_sum(q, &[&s1, &s2, &s1]);
        let d = decompose(&m, 0).unwrap();
        assert_eq!(d.summands.len(), 3);
        assert!(are_isomorphic(&m, &m, 0).unwrap());
    }
}
