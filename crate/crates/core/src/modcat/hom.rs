//! Hom spaces, their radicals, and kernel/image/cokernel of a morphism.

use crate::error::{FoveaError, Result};
use crate::exactla::{Matrix, Scalar, Subspace};

use super::module::{same_base, ModMap, Module};

/// Canonical basis of `Hom(M, N)`: the reduced echelon basis of the
/// solution space of all naturality equations.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<ModMap>> {
    same_base(m, n)?;
    Ok(hom_vectors(m, n)
        .iter()
        .map(|v| ModMap::from_vector(m, n, v))
        .collect())
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    same_base(m, n)?;
    Ok(hom_vectors(m, n).len())
}

fn hom_vectors(m: &Module, n: &Module) -> Vec<Vec<Scalar>> {
    let f = m.field();
    let nv = m.dims.len();
    let mut off = vec![0usize; nv + 1];
    for x in 0..nv {
        off[x + 1] = off[x] + n.dims[x] * m.dims[x];
    }
    let unknowns = off[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in m.base.arrows.iter().enumerate() {
        let (x, y) = (a.source, a.target);
        let (nx, mx, ny, my) = (n.dims[x], m.dims[x], n.dims[y], m.dims[y]);
        let (ma, na) = (&m.mats[ai], &n.mats[ai]);
        // (f_x M(a) - N(a) f_y)[i, j] = 0
        for i in 0..nx {
            for j in 0..my {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..mx {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        let idx = off[x] + i * mx + k;
                        row[idx] = &row[idx] + c;
                    }
                }
                for l in 0..ny {
                    let c = na.get(i, l);
                    if !c.is_zero() {
                        let idx = off[y] + l * my + j;
                        row[idx] = &row[idx] - c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Matrix::identity(f, unknowns).row_vectors();
    }
    Matrix::from_rows(f, unknowns, rows).kernel_basis()
}

/// Coordinates of `g` in a hom basis, if `g` lies in its span.
pub fn hom_coordinates(basis: &[ModMap], g: &ModMap) -> Option<Vec<Scalar>> {
    let target = g.to_vector();
    if basis.is_empty() {
        return target.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let f = target.first().map(Scalar::field)?;
    let cols: Vec<Vec<Scalar>> = basis.iter().map(ModMap::to_vector).collect();
    Matrix::from_columns(f, target.len(), &cols).solve(&target)
}

/// The radical `rad(M, N)` in coordinates of `hom_space(M, N)`: maps `f`
/// with `tr(h f) = 0` for every `h: N -> M`. Exact when the characteristic
/// is zero or exceeds `dim M`.
pub fn radical_hom(m: &Module, n: &Module) -> Result<Subspace> {
    let hom_mn = hom_space(m, n)?;
    let hom_nm = hom_space(n, m)?;
    radical_from_bases(m, &hom_mn, &hom_nm)
}

pub(crate) fn radical_from_bases(
    m: &Module,
    hom_mn: &[ModMap],
    hom_nm: &[ModMap],
) -> Result<Subspace> {
    let f = m.field();
    let p = f.characteristic();
    if p != 0 && p as usize <= m.total_dim() {
        return Err(FoveaError::FieldTooSmall {
            p,
            dim: m.total_dim(),
        });
    }
    let d = hom_mn.len();
    if hom_nm.is_empty() || d == 0 {
        return Ok(Subspace::full(f, d));
    }
    let rows: Vec<Vec<Scalar>> = hom_nm
        .iter()
        .map(|h| hom_mn.iter().map(|g| g.then(h).trace(f)).collect())
        .collect();
    Subspace::span(f, d, Matrix::from_rows(f, d, rows).kernel_basis())
}

/// Kernel, image and cokernel of `g: M -> N`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: Module,
    pub kernel_inclusion: ModMap,
    pub image: Module,
    pub image_inclusion: ModMap,
    pub cokernel: Module,
    pub cokernel_projection: ModMap,
}

pub fn map_factor(m: &Module, n: &Module, g: &ModMap) -> Result<Factorization> {
    same_base(m, n)?;
    let f = m.field();
    let ker_gens: Vec<Matrix> = g
        .comps
        .iter()
        .zip(&m.dims)
        .map(|(c, &d)| {
            let cols = if d == 0 {
                Vec::new()
            } else if c.rows() == 0 {
                Matrix::identity(f, d).column_vectors()
            } else {
                c.kernel_basis()
            };
            Matrix::from_columns(f, d, &cols)
        })
        .collect();
    let (kernel, kernel_inclusion) = m.submodule(&ker_gens);
    let (image, image_inclusion) = n.submodule(&g.comps);
    let (cokernel, cokernel_projection) = n.quotient(&g.comps);
    Ok(Factorization {
        kernel,
        kernel_inclusion,
        image,
        image_inclusion,
        cokernel,
        cokernel_projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_bound_quiver;
    use std::sync::Arc;

    struct A2 {
        s1: Module,
        s2: Module,
        p2: Module,
    }

    fn a2() -> A2 {
        let q = Arc::new(parse_bound_quiver("vertex 1 2\narrow a: 1 -> 2\n").unwrap());
        let f = q.field;
        A2 {
            s1: Module::simple(q.clone(), 0),
            s2: Module::simple(q.clone(), 1),
            p2: Module::new(q, vec![1, 1], vec![Matrix::identity(f, 1)]).unwrap(),
        }
    }

    #[test]
    fn a2_hom_dims() {
        let A2 { s1, s2, p2 } = a2();
        assert_eq!(hom_dim(&p2, &p2).unwrap(), 1);
        assert_eq!(hom_dim(&s1, &p2).unwrap(), 1);
        assert_eq!(hom_dim(&s2, &p2).unwrap(), 0);
        assert_eq!(hom_dim(&p2, &s2).unwrap(), 1);
        let z = Module::zero(p2.base.clone());
        assert_eq!(hom_dim(&p2, &z).unwrap(), 0);
        for g in hom_space(&p2, &s2).unwrap() {
            assert!(g.is_natural(&p2, &s2));
        }
    }

    #[test]
    fn a2_radicals() {
        let A2 { s1, p2, .. } = a2();
        assert_eq!(radical_hom(&p2, &p2).unwrap().dim(), 0);
        assert_eq!(radical_hom(&s1, &p2).unwrap().dim(), 1);
        assert_eq!(radical_hom(&s1, &s1).unwrap().dim(), 0);
    }

    #[test]
    fn factor_epi_onto_simple() {
        let A2 { s2, p2, .. } = a2();
        let g = hom_space(&p2, &s2).unwrap().remove(0);
        let fac = map_factor(&p2, &s2, &g).unwrap();
        assert_eq!(fac.kernel.dims, vec![1, 0]);
        assert_eq!(fac.image.dims, vec![0, 1]);
        assert!(fac.cokernel.is_zero());
        assert!(fac.kernel_inclusion.then(&g).is_zero());
    }

    #[test]
    fn factor_identity_and_zero() {
        let A2 { s1, p2, .. } = a2();
        let fac = map_factor(&p2, &p2, &ModMap::identity(&p2)).unwrap();
        assert!(fac.kernel.is_zero() && fac.cokernel.is_zero());
        assert_eq!(fac.image.dims, p2.dims);
        let z = ModMap::zero(&p2, &s1);
        let fac = map_factor(&p2, &s1, &z).unwrap();
        assert_eq!(fac.kernel.dims, p2.dims);
        assert_eq!(fac.cokernel.dims, s1.dims);
    }

    #[test]
    fn small_field_rejected() {
        let q = Arc::new(parse_bound_quiver("field gf 2\nvertex 1\n").unwrap());
        let s = Module::simple(q.clone(), 0);
        let (d, _, _) = crate::modcat::direct_sum(q, &[&s, &s]);
        assert!(matches!(
            radical_hom(&d, &d),
            Err(FoveaError::FieldTooSmall { .. })
        ));
    }
}
