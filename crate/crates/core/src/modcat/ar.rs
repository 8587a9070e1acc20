//! Projective presentations, the transpose, the translates `τ = D Tr` and
//! `τ⁻¹ = Tr D`, and almost split sequences.

use crate::error::{FoveaError, Result};
use crate::exactla::{Matrix, Scalar, Subspace};
use crate::quiver::unit;

use super::algebra::Algebra;
use super::hom::{hom_coordinates, hom_space, map_factor, radical_from_bases};
use super::module::{direct_sum, ModMap, Module};

/// A projective cover `π: ⊕ P_{x_i} -> M` sending the top of `P_{x_i}` to
/// the generator `gens[i] ∈ M(x_i)`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub proj: Module,
    pub map: ModMap,
    pub gens: Vec<(usize, Vec<Scalar>)>,
}

/// Matrix at vertex `z` of the map `P_x -> Q` sending `e_x` to `v ∈ Q(x)`.
pub fn yoneda_matrix(alg: &Algebra, x: usize, q: &Module, v: &[Scalar], z: usize) -> Matrix {
    let f = alg.quiver.field;
    let cols: Vec<Vec<Scalar>> = alg
        .basis
        .hom(z, x)
        .basis_paths()
        .iter()
        .map(|p| q.path_matrix(z, p).mul_vec(v))
        .collect();
    Matrix::from_columns(f, q.dims[z], &cols)
}

/// The map `⊕ P_{x_i} -> Q` given by elements `v_i ∈ Q(x_i)`.
pub fn yoneda_map(alg: &Algebra, gens: &[(usize, Vec<Scalar>)], q: &Module) -> ModMap {
    let f = alg.quiver.field;
    let comps = (0..alg.n())
        .map(|z| {
            gens.iter()
                .fold(Matrix::zeros(f, q.dims[z], 0), |acc, (x, v)| {
                    acc.hstack(&yoneda_matrix(alg, *x, q, v, z))
                })
        })
        .collect();
    ModMap { comps }
}

/// Top generators: at each vertex, unit vectors completing the radical.
pub fn top_generators(m: &Module) -> Vec<(usize, Vec<Scalar>)> {
    let f = m.field();
    let mut gens = Vec::new();
    for (x, g) in m.radical_gens().iter().enumerate() {
        let d = m.dims[x];
        if d == 0 {
            continue;
        }
        let rad = if g.cols() == 0 {
            Vec::new()
        } else {
            g.column_space_basis()
        };
        let s = Subspace::span(f, d, rad).expect("lengths agree");
        gens.extend(
            s.complement_coordinates()
                .into_iter()
                .map(|c| (x, unit(f, d, c))),
        );
    }
    gens
}

pub fn projective_cover(alg: &Algebra, m: &Module) -> ProjectiveCover {
    let gens = top_generators(m);
    let parts: Vec<Module> = gens.iter().map(|(x, _)| alg.projective(*x)).collect();
    let (proj, _, _) = direct_sum(alg.quiver.clone(), &parts.iter().collect::<Vec<_>>());
    let map = yoneda_map(alg, &gens, m);
    ProjectiveCover { proj, map, gens }
}

/// `M ≅ P_x` for some vertex `x`.
pub fn projective_vertex(alg: &Algebra, m: &Module) -> Option<usize> {
    let (top, _) = m.top();
    if top.total_dim() != 1 {
        return None;
    }
    let x = top.dims.iter().position(|&d| d == 1)?;
    (alg.basis.total_dim() > 0 && m.dims == alg.projective(x).dims).then_some(x)
}

/// `M ≅ I_x` for some vertex `x`.
pub fn injective_vertex(alg: &Algebra, m: &Module) -> Option<usize> {
    let (soc, _) = m.socle();
    if soc.total_dim() != 1 {
        return None;
    }
    let x = soc.dims.iter().position(|&d| d == 1)?;
    (m.dims == alg.injective(x).dims).then_some(x)
}

/// Syzygy: the kernel of the projective cover, with its inclusion.
pub fn syzygy(alg: &Algebra, m: &Module) -> Result<(ProjectiveCover, Module, ModMap)> {
    let pc = projective_cover(alg, m);
    let fac = map_factor(&pc.proj, m, &pc.map)?;
    Ok((pc, fac.kernel, fac.kernel_inclusion))
}

/// Element of `R(y,x)` rewritten in the opposite path basis as an element
/// of `R^op(x,y)`.
fn to_opposite(alg: &Algebra, y: usize, x: usize, r: &[Scalar]) -> Vec<Scalar> {
    let f = alg.quiver.field;
    let mut acc = vec![f.zero(); alg.op_basis.dim(x, y)];
    for (c, p) in r.iter().zip(alg.basis.hom(y, x).basis_paths()) {
        if c.is_zero() {
            continue;
        }
        let rev: Vec<usize> = p.iter().rev().copied().collect();
        let e = alg.op_basis.path_element(x, y, &rev);
        for (a, b) in acc.iter_mut().zip(&e) {
            *a = &*a + &(c * b);
        }
    }
    acc
}

/// Auslander–Bridger transpose, as a module over the opposite algebra.
pub fn transpose(alg: &Algebra, m: &Module) -> Result<Module> {
    let op = alg.opposite();
    let (pc0, omega, iota) = syzygy(alg, m)?;
    let pc1 = projective_cover(alg, &omega);
    let f = alg.quiver.field;
    // presentation entries r_ij ∈ R(y_j, x_i)
    let mut entries: Vec<Vec<Vec<Scalar>>> = Vec::new();
    for (y, w) in &pc1.gens {
        let img = iota.comps[*y].mul_vec(w);
        let mut off = 0;
        let mut col = Vec::new();
        for (x, _) in &pc0.gens {
            let d = alg.basis.dim(*y, *x);
            col.push(img[off..off + d].to_vec());
            off += d;
        }
        entries.push(col);
    }
    let p0: Vec<Module> = pc0.gens.iter().map(|(x, _)| op.projective(*x)).collect();
    let p1: Vec<Module> = pc1.gens.iter().map(|(y, _)| op.projective(*y)).collect();
    let (p1s, _, _) = direct_sum(op.quiver.clone(), &p1.iter().collect::<Vec<_>>());
    let comps: Vec<Matrix> = (0..alg.n())
        .map(|z| {
            let rows: usize = p1.iter().map(|p| p.dims[z]).sum();
            let cols: usize = p0.iter().map(|p| p.dims[z]).sum();
            let mut mat = Matrix::zeros(f, rows, cols);
            let mut r0 = 0;
            for (j, (y, _)) in pc1.gens.iter().enumerate() {
                let mut c0 = 0;
                for (i, (x, _)) in pc0.gens.iter().enumerate() {
                    let rop = to_opposite(alg, *y, *x, &entries[j][i]);
                    let blk = op.basis.right_mul_matrix(z, *x, *y, &rop);
                    mat.set_block(r0, c0, &blk);
                    c0 += p0[i].dims[z];
                }
                r0 += p1[j].dims[z];
            }
            mat
        })
        .collect();
    Ok(p1s.quotient(&comps).0)
}

/// `τ M = D Tr M`.
pub fn tau(alg: &Algebra, m: &Module) -> Result<Module> {
    Ok(transpose(alg, m)?.dual(alg.quiver.clone()))
}

/// `τ⁻¹ M = Tr D M`.
pub fn tau_inverse(alg: &Algebra, m: &Module) -> Result<Module> {
    transpose(&alg.opposite(), &alg.dual(m))
}

/// `0 -> L -f-> E -g-> N -> 0`.
#[derive(Clone, Debug)]
pub struct AlmostSplitSequence {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub f: ModMap,
    pub g: ModMap,
}

/// Lifts an endomorphism `r` of `N` along the cover to `P0`, then restricts
/// to the syzygy.
fn lift_to_syzygy(
    alg: &Algebra,
    pc: &ProjectiveCover,
    iota: &ModMap,
    omega: &Module,
    r: &ModMap,
) -> Result<ModMap> {
    let lifted: Vec<(usize, Vec<Scalar>)> = pc
        .gens
        .iter()
        .map(|(x, m)| {
            let target = r.comps[*x].mul_vec(m);
            pc.map.comps[*x]
                .solve(&target)
                .map(|v| (*x, v))
                .ok_or_else(|| FoveaError::Invalid("cover is not surjective".into()))
        })
        .collect::<Result<_>>()?;
    let r0 = yoneda_map(alg, &lifted, &pc.proj);
    let comps = (0..alg.n())
        .map(|z| {
            let i = &iota.comps[z];
            if omega.dims[z] == 0 {
                return Ok(Matrix::zeros(alg.quiver.field, 0, 0));
            }
            i.solve_matrix(&r0.comps[z].mul(i))
                .ok_or_else(|| FoveaError::Invalid("lift does not preserve the syzygy".into()))
        })
        .collect::<Result<_>>()?;
    Ok(ModMap { comps })
}

/// The almost split sequence ending at an indecomposable non-projective `N`,
/// as the pushout of `Ω -> P0` along a socle element of `Ext¹(N, τN)`.
pub fn almost_split_sequence(alg: &Algebra, n: &Module) -> Result<AlmostSplitSequence> {
    let f = alg.quiver.field;
    let l = tau(alg, n)?;
    if l.is_zero() {
        return Err(FoveaError::AlmostSplit("module is projective".into()));
    }
    let (pc, omega, iota) = syzygy(alg, n)?;
    let h_ol = hom_space(&omega, &l)?;
    let h_pl = hom_space(&pc.proj, &l)?;
    let d = h_ol.len();
    let image: Vec<Vec<Scalar>> = h_pl
        .iter()
        .map(|g| hom_coordinates(&h_ol, &iota.then(g)).expect("restriction lies in the hom space"))
        .collect();
    let image = Subspace::span(f, d, image)?;
    let annihilator = if image.dim() == 0 {
        Matrix::identity(f, d)
    } else {
        Matrix::from_rows(
            f,
            d,
            Matrix::from_rows(f, d, image.basis().to_vec()).kernel_basis(),
        )
    };

    let end = hom_space(n, n)?;
    let rad = radical_from_bases(n, &end, &end)?;
    let mut conditions = Matrix::zeros(f, 0, d);
    for coeffs in rad.basis() {
        let r = ModMap::linear_combination(&end, coeffs, n, n);
        let r_om = lift_to_syzygy(alg, &pc, &iota, &omega, &r)?;
        let cols: Vec<Vec<Scalar>> = h_ol
            .iter()
            .map(|h| hom_coordinates(&h_ol, &r_om.then(h)).expect("composite is a hom"))
            .collect();
        if annihilator.rows() > 0 {
            conditions = conditions.vstack(&annihilator.mul(&Matrix::from_columns(f, d, &cols)));
        }
    }
    let socle = if conditions.rows() == 0 {
        Matrix::identity(f, d).row_vectors()
    } else {
        conditions.kernel_basis()
    };
    let phi_coords = socle
        .into_iter()
        .find(|v| !image.contains(v))
        .ok_or_else(|| FoveaError::AlmostSplit("Ext socle is trivial".into()))?;
    let phi = ModMap::linear_combination(&h_ol, &phi_coords, &omega, &l);

    let (sum, inc, proj) = direct_sum(alg.quiver.clone(), &[&pc.proj, &l]);
    let gens: Vec<Matrix> = (0..alg.n())
        .map(|z| {
            let a = inc[0].comps[z].mul(&iota.comps[z]);
            let b = inc[1].comps[z].mul(&phi.comps[z]).scale(&-f.one());
            a.add(&b)
        })
        .collect();
    let (e, q) = sum.quotient(&gens);
    let pi_sum = proj[0].then(&pc.map);
    let g = ModMap {
        comps: (0..alg.n())
            .map(|z| {
                if e.dims[z] == 0 {
                    return Matrix::zeros(f, n.dims[z], 0);
                }
                q.comps[z]
                    .solve_left(&pi_sum.comps[z])
                    .expect("(π, 0) vanishes on the pushout kernel")
            })
            .collect(),
    };
    let fmap = inc[1].then(&q);
    Ok(AlmostSplitSequence {
        left: l,
        middle: e,
        right: n.clone(),
        f: fmap,
        g,
    })
}
