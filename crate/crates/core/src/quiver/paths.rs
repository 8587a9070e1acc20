//! Bases of the hom spaces `R(x,y) = KQ(x,y) / I` by path enumeration.

use std::collections::HashMap;

use crate::error::{FoveaError, Result};
use crate::exactla::{Matrix, Scalar};

use super::bound::{BoundQuiver, Path};

pub const DEFAULT_PATH_CAP: usize = 200_000;

/// One hom space `R(x,y)`. Columns are all paths `x -> y` shorter than the
/// bound, longest first, so reduction pivots land on long paths and the
/// surviving standard monomials are as short as possible.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: usize,
    pub target: usize,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    reducer: Vec<(usize, Vec<Scalar>)>,
    basis: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The standard monomials, shortest first.
    pub fn basis_paths(&self) -> Vec<&Path> {
        self.basis.iter().map(|&c| &self.paths[c]).collect()
    }

    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (piv, row) in &self.reducer {
            let c = v[*piv].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
        self.basis.iter().map(|&c| v[c].clone()).collect()
    }

    /// Coordinates of a single path; paths at or beyond the bound are zero.
    pub fn path_coords(&self, p: &[usize], zero: &Scalar, one: &Scalar) -> Vec<Scalar> {
        let mut v = vec![zero.clone(); self.paths.len()];
        match self.index.get(p) {
            Some(&i) => v[i] = one.clone(),
            None => return vec![zero.clone(); self.dim()],
        }
        self.reduce(v)
    }

    fn combination_coords(&self, terms: &[(Scalar, Path)], zero: &Scalar) -> Vec<Scalar> {
        let mut v = vec![zero.clone(); self.paths.len()];
        for (c, p) in terms {
            if let Some(&i) = self.index.get(p) {
                v[i] = &v[i] + c;
            }
        }
        self.reduce(v)
    }
}

/// Bases of all hom spaces of a bound quiver category.
#[derive(Clone, Debug)]
pub struct PathBasis {
    pub quiver: BoundQuiver,
    spaces: Vec<HomSpace>,
}

impl PathBasis {
    pub fn n(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn hom(&self, x: usize, y: usize) -> &HomSpace {
        &self.spaces[x * self.n() + y]
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.hom(x, y).dim()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(HomSpace::dim).sum()
    }

    /// Coordinates in `R(x,y)` of the path `p` (empty means the identity).
    pub fn path_element(&self, x: usize, y: usize, p: &[usize]) -> Vec<Scalar> {
        let f = self.quiver.field;
        self.hom(x, y).path_coords(p, &f.zero(), &f.one())
    }

    /// Product `u*v` for `u` in `R(x,y)` and `v` in `R(y,z)` (u traversed first).
    pub fn mul(&self, x: usize, y: usize, z: usize, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.quiver.field;
        let (hu, hv, hw) = (self.hom(x, y), self.hom(y, z), self.hom(x, z));
        let mut terms = Vec::new();
        for (i, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (j, cv) in v.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let mut p = hu.paths[hu.basis[i]].clone();
                p.extend_from_slice(&hv.paths[hv.basis[j]]);
                terms.push((cu * cv, p));
            }
        }
        hw.combination_coords(&terms, &f.zero())
    }

    /// Matrix of `u -> a*u` from `R(w,x)` to `R(z,x)` for a path `a: z -> w`,
    /// acting on column vectors.
    pub fn left_mul_matrix(&self, z: usize, w: usize, x: usize, a: &[Scalar]) -> Matrix {
        let f = self.quiver.field;
        let (dw, dz) = (self.dim(w, x), self.dim(z, x));
        let cols: Vec<Vec<Scalar>> = (0..dw)
            .map(|j| self.mul(z, w, x, a, &unit(f, dw, j)))
            .collect();
        Matrix::from_columns(f, dz, &cols)
    }

    /// Matrix of `u -> u*r` from `R(z,x)` to `R(z,y)` for `r` in `R(x,y)`.
    pub fn right_mul_matrix(&self, z: usize, x: usize, y: usize, r: &[Scalar]) -> Matrix {
        let f = self.quiver.field;
        let (dx, dy) = (self.dim(z, x), self.dim(z, y));
        let cols: Vec<Vec<Scalar>> = (0..dx)
            .map(|j| self.mul(z, x, y, &unit(f, dx, j), r))
            .collect();
        Matrix::from_columns(f, dy, &cols)
    }

    /// Human-readable form of an element of `R(x,y)`.
    pub fn element_name(&self, x: usize, y: usize, u: &[Scalar]) -> String {
        let h = self.hom(x, y);
        let terms: Vec<String> = u
            .iter()
            .zip(h.basis_paths())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, p)| {
                let name = if p.is_empty() {
                    format!("e{}", self.quiver.vertices[x])
                } else {
                    self.quiver.path_name(p)
                };
                if c.is_one() {
                    name
                } else {
                    format!("{c} {name}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub(crate) fn unit(f: crate::exactla::Field, n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|j| if i == j { f.one() } else { f.zero() })
        .collect()
}

/// All paths shorter than `bound`, grouped by (source, target).
fn enumerate_paths(q: &BoundQuiver, bound: usize, cap: usize) -> Result<Vec<Vec<Path>>> {
    let n = q.vertices.len();
    let mut out: Vec<Vec<Path>> = vec![Vec::new(); n * n];
    let mut total = 0usize;
    for x in 0..n {
        let mut frontier: Vec<(usize, Path)> = vec![(x, Vec::new())];
        for len in 0..bound {
            let mut next = Vec::new();
            for (end, p) in frontier {
                total += 1;
                if total > cap {
                    return Err(FoveaError::PathExplosion { cap });
                }
                if len + 1 < bound {
                    for (i, a) in q.arrows.iter().enumerate() {
                        if a.source == end {
                            let mut np = p.clone();
                            np.push(i);
                            next.push((a.target, np));
                        }
                    }
                }
                out[x * n + end].push(p);
            }
            frontier = next;
        }
    }
    for ps in &mut out {
        ps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    }
    Ok(out)
}

fn build_spaces(q: &BoundQuiver, bound: usize, cap: usize) -> Result<Vec<HomSpace>> {
    let n = q.vertices.len();
    let f = q.field;
    let all = enumerate_paths(q, bound, cap)?;
    let mut spaces = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let paths = all[x * n + y].clone();
            let index: HashMap<Path, usize> = paths
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect();
            let mut gens: Vec<Vec<Scalar>> = Vec::new();
            for rel in &q.relations {
                let (s, t) = q.path_ends(&rel.terms[0].1)?;
                let shortest = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
                for u in &all[x * n + s] {
                    for v in &all[t * n + y] {
                        if u.len() + v.len() + shortest >= bound {
                            continue;
                        }
                        let mut g = vec![f.zero(); paths.len()];
                        for (c, p) in &rel.terms {
                            let mut w = u.clone();
                            w.extend_from_slice(p);
                            w.extend_from_slice(v);
                            if let Some(&i) = index.get(&w) {
                                g[i] = &g[i] + c;
                            }
                        }
                        if g.iter().any(|c| !c.is_zero()) {
                            gens.push(g);
                        }
                    }
                }
            }
            let (reducer, basis) = if gens.is_empty() {
                (Vec::new(), (0..paths.len()).collect::<Vec<_>>())
            } else {
                let r = Matrix::from_rows(f, paths.len(), gens).rref();
                let reducer: Vec<(usize, Vec<Scalar>)> = r
                    .pivots
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (c, r.reduced.row(i).to_vec()))
                    .collect();
                let basis = (0..paths.len()).filter(|c| !r.pivots.contains(c)).collect();
                (reducer, basis)
            };
            let mut basis: Vec<usize> = basis;
            basis.sort_by(|&a, &b| {
                paths[a]
                    .len()
                    .cmp(&paths[b].len())
                    .then_with(|| paths[a].cmp(&paths[b]))
            });
            spaces.push(HomSpace {
                source: x,
                target: y,
                paths,
                index,
                reducer,
                basis,
            });
        }
    }
    Ok(spaces)
}

pub fn path_basis(bq: &BoundQuiver) -> Result<PathBasis> {
    path_basis_with_cap(bq, DEFAULT_PATH_CAP)
}

pub fn path_basis_with_cap(bq: &BoundQuiver, cap: usize) -> Result<PathBasis> {
    bq.validate()?;
    Ok(PathBasis {
        quiver: bq.clone(),
        spaces: build_spaces(bq, bq.nilbound, cap)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub violations: Vec<String>,
}

/// Checks that relation terms have length at least 2 and that every path of
/// length `nilbound` lies in the relation ideal (modulo longer paths).
pub fn check_admissible(bq: &BoundQuiver) -> AdmissibilityReport {
    let mut violations = Vec::new();
    if let Err(e) = bq.validate() {
        violations.push(e.to_string());
        return AdmissibilityReport {
            admissible: false,
            violations,
        };
    }
    for r in &bq.relations {
        for (_, p) in &r.terms {
            if p.len() < 2 {
                violations.push(format!(
                    "relation term {} has length {}",
                    bq.path_name(p),
                    p.len()
                ));
            }
        }
    }
    let m = bq.nilbound;
    match build_spaces(bq, m + 1, DEFAULT_PATH_CAP) {
        Err(e) => violations.push(e.to_string()),
        Ok(spaces) => {
            let f = bq.field;
            for h in &spaces {
                for p in h.paths.iter().filter(|p| p.len() == m) {
                    if h.path_coords(p, &f.zero(), &f.one())
                        .iter()
                        .any(|c| !c.is_zero())
                    {
                        let name = if p.is_empty() {
                            "identity".into()
                        } else {
                            bq.path_name(p)
                        };
                        violations.push(format!("path {name} of length {m} is not in the ideal"));
                    }
                }
            }
        }
    }
    AdmissibilityReport {
        admissible: violations.is_empty(),
        violations,
    }
}

/// True iff no chain of nonzero hom spaces leaves `subset` and comes back.
pub fn is_convex(bq: &BoundQuiver, subset: &[&str]) -> Result<bool> {
    let idx: Vec<usize> = subset
        .iter()
        .map(|s| bq.vertex_index(s))
        .collect::<Result<_>>()?;
    let pb = path_basis(bq)?;
    Ok(is_convex_indices(&pb, &idx))
}

pub fn is_convex_indices(pb: &PathBasis, subset: &[usize]) -> bool {
    let n = pb.n();
    let inside: Vec<bool> = (0..n).map(|v| subset.contains(&v)).collect();
    // outside vertices reachable from the subset through nonzero homs
    let mut reached = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    for &x in subset {
        for z in 0..n {
            if !inside[z] && !reached[z] && pb.dim(x, z) > 0 {
                reached[z] = true;
                stack.push(z);
            }
        }
    }
    while let Some(z) = stack.pop() {
        for w in 0..n {
            if pb.dim(z, w) == 0 || w == z {
                continue;
            }
            if inside[w] {
                return false;
            }
            if !reached[w] {
                reached[w] = true;
                stack.push(w);
            }
        }
    }
    true
}
