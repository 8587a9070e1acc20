//! Layered matrix categories built from an algebra and its dual bimodule,
//! given by structure constants, and extraction of a bound quiver from
//! them.

use std::collections::HashMap;

use crate::error::Result;
use crate::exactla::{Field, Matrix, Scalar, Subspace};
use crate::modcat::Algebra;
use crate::quiver::{unit, Arrow, BoundQuiver, Path, Relation};

/// Objects `(m, i)` for layers `lo..=hi`; `(m,i) -> (m,j)` is `A(i,j)`,
/// `(m,i) -> (m+1,j)` is `D A(j,i)` in the dual basis, all else zero.
#[derive(Clone, Debug)]
pub struct LayeredCategory {
    pub algebra: Algebra,
    pub lo: i64,
    pub hi: i64,
    /// Append `@layer` to vertex and arrow names.
    pub suffix: bool,
}

impl LayeredCategory {
    pub fn field(&self) -> Field {
        self.algebra.quiver.field
    }

    fn s(&self) -> usize {
        self.algebra.n()
    }

    pub fn n(&self) -> usize {
        (self.hi - self.lo + 1) as usize * self.s()
    }

    pub fn object(&self, x: usize) -> (i64, usize) {
        (self.lo + (x / self.s()) as i64, x % self.s())
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        let ((m, i), (r, j)) = (self.object(x), self.object(y));
        let pb = &self.algebra.basis;
        match r - m {
            0 => pb.dim(i, j),
            1 => pb.dim(j, i),
            _ => 0,
        }
    }

    pub fn total_dim(&self) -> usize {
        (0..self.n())
            .flat_map(|x| (0..self.n()).map(move |y| (x, y)))
            .map(|(x, y)| self.dim(x, y))
            .sum()
    }

    /// `u*v` for `u: x -> y`, `v: y -> z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let pb = &self.algebra.basis;
        let ((mx, i), (my, j), (mz, k)) = (self.object(x), self.object(y), self.object(z));
        let dot = |a: &[Scalar], b: &[Scalar]| {
            a.iter()
                .zip(b)
                .fold(f.zero(), |acc, (p, q)| &acc + &(p * q))
        };
        match (my - mx, mz - my) {
            (0, 0) => pb.mul(i, j, k, u, v),
            (0, 1) => {
                let d = pb.dim(k, i);
                (0..d)
                    .map(|t| dot(v, &pb.mul(k, i, j, &unit(f, d, t), u)))
                    .collect()
            }
            (1, 0) => {
                let d = pb.dim(k, i);
                (0..d)
                    .map(|t| dot(u, &pb.mul(j, k, i, v, &unit(f, d, t))))
                    .collect()
            }
            _ => vec![f.zero(); self.dim(x, z)],
        }
    }

    /// Coordinates spanning the radical of `(x, y)`.
    fn rad_coords(&self, x: usize, y: usize) -> Vec<usize> {
        if x != y {
            return (0..self.dim(x, y)).collect();
        }
        let (_, i) = self.object(x);
        let h = self.algebra.basis.hom(i, i);
        h.basis_paths()
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty())
            .map(|(c, _)| c)
            .collect()
    }

    pub fn vertex_name(&self, x: usize) -> String {
        let (m, i) = self.object(x);
        let v = &self.algebra.quiver.vertices[i];
        if self.suffix {
            format!("{v}@{m}")
        } else {
            v.clone()
        }
    }

    fn arrow_name(&self, x: usize, y: usize, c: usize) -> String {
        let q = &self.algebra.quiver;
        let ((m, i), (r, j)) = (self.object(x), self.object(y));
        let base = if r == m {
            let p = self.algebra.basis.hom(i, j).basis_paths()[c].clone();
            if p.len() == 1 {
                q.arrows[p[0]].name.clone()
            } else {
                format!("x{c}_{}_{}", q.vertices[i], q.vertices[j])
            }
        } else {
            let p = self.algebra.basis.hom(j, i).basis_paths()[c].clone();
            if p.is_empty() {
                format!("d_{}", q.vertices[i])
            } else {
                format!(
                    "d_{}",
                    p.iter()
                        .map(|&a| q.arrows[a].name.as_str())
                        .collect::<Vec<_>>()
                        .join(".")
                )
            }
        };
        if self.suffix {
            format!("{base}@{m}")
        } else {
            base
        }
    }

    /// Presentation with arrows a basis of `rad/rad²` (unit vectors, first
    /// in coordinate order) and relations generating the kernel of the path
    /// evaluation, pruned of those already implied.
    pub fn to_bound_quiver(&self) -> Result<BoundQuiver> {
        let f = self.field();
        let n = self.n();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let rad: Vec<Subspace> = pairs
            .iter()
            .map(|&(x, y)| {
                let d = self.dim(x, y);
                Subspace::span(
                    f,
                    d,
                    self.rad_coords(x, y)
                        .into_iter()
                        .map(|c| unit(f, d, c))
                        .collect(),
                )
            })
            .collect::<Result<_>>()?;
        let power = |prev: &[Subspace]| -> Result<Vec<Subspace>> {
            pairs
                .iter()
                .map(|&(x, y)| {
                    let mut gens = Vec::new();
                    for z in 0..n {
                        for u in prev[x * n + z].basis() {
                            for v in rad[z * n + y].basis() {
                                gens.push(self.compose(x, z, y, u, v));
                            }
                        }
                    }
                    Subspace::span(f, self.dim(x, y), gens)
                })
                .collect()
        };
        let rad2 = power(&rad)?;
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut elems: Vec<Vec<Scalar>> = Vec::new();
        for &(x, y) in &pairs {
            let mut span = rad2[x * n + y].clone();
            let d = self.dim(x, y);
            for c in self.rad_coords(x, y) {
                let e = unit(f, d, c);
                if !span.contains(&e) {
                    span = span.sum(&Subspace::span(f, d, vec![e.clone()])?)?;
                    arrows.push(Arrow {
                        name: self.arrow_name(x, y, c),
                        source: x,
                        target: y,
                    });
                    elems.push(e);
                }
            }
        }
        let mut nil = 1;
        let mut cur = rad.clone();
        while cur.iter().any(|s| s.dim() > 0) {
            nil += 1;
            cur = power(&cur)?;
        }
        let nilbound = nil.max(1);

        // paths of length 1..=nilbound with their values
        let mut by_pair: HashMap<(usize, usize), Vec<(Path, Vec<Scalar>)>> = HashMap::new();
        let mut frontier: Vec<(usize, Path, Vec<Scalar>)> = (0..arrows.len())
            .map(|a| (arrows[a].source, vec![a], elems[a].clone()))
            .collect();
        for len in 1..=nilbound {
            let mut next = Vec::new();
            for (x, p, val) in frontier {
                let y = arrows[*p.last().unwrap()].target;
                if len >= 2 {
                    by_pair
                        .entry((x, y))
                        .or_default()
                        .push((p.clone(), val.clone()));
                }
                if len < nilbound {
                    for (b, arr) in arrows.iter().enumerate().filter(|(_, a)| a.source == y) {
                        let mut q = p.clone();
                        q.push(b);
                        next.push((x, q, self.compose(x, y, arr.target, &val, &elems[b])));
                    }
                }
            }
            frontier = next;
        }
        let index: HashMap<(usize, usize), HashMap<Path, usize>> = by_pair
            .iter()
            .map(|(k, ps)| {
                (
                    *k,
                    ps.iter()
                        .enumerate()
                        .map(|(i, (p, _))| (p.clone(), i))
                        .collect(),
                )
            })
            .collect();
        let mut ideal: HashMap<(usize, usize), Subspace> = by_pair
            .iter()
            .map(|(k, ps)| (*k, Subspace::zero(f, ps.len())))
            .collect();
        // paths ending at / starting from each vertex, including trivial ones
        let mut ending: Vec<Vec<(usize, Path)>> = (0..n).map(|x| vec![(x, Vec::new())]).collect();
        let mut starting: Vec<Vec<(usize, Path)>> = (0..n).map(|x| vec![(x, Vec::new())]).collect();
        let mut keys: Vec<&(usize, usize)> = by_pair.keys().collect();
        keys.sort();
        for k in &keys {
            for (p, _) in &by_pair[k] {
                ending[k.1].push((k.0, p.clone()));
                starting[k.0].push((k.1, p.clone()));
            }
        }
        for a in 0..arrows.len() {
            ending[arrows[a].target].push((arrows[a].source, vec![a]));
            starting[arrows[a].source].push((arrows[a].target, vec![a]));
        }
        let mut relations = Vec::new();
        for &(x, y) in &pairs {
            let Some(ps) = by_pair.get(&(x, y)) else {
                continue;
            };
            let d = self.dim(x, y);
            let kernel = if d == 0 {
                Matrix::identity(f, ps.len()).row_vectors()
            } else {
                let cols: Vec<Vec<Scalar>> = ps.iter().map(|(_, v)| v.clone()).collect();
                Matrix::from_columns(f, d, &cols).kernel_basis()
            };
            for r in kernel {
                if ideal[&(x, y)].contains(&r) {
                    continue;
                }
                let terms: Vec<(Scalar, Path)> = r
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (c.clone(), ps[i].0.clone()))
                    .collect();
                for (x2, pre) in &ending[x] {
                    for (y2, post) in &starting[y] {
                        let Some(idx) = index.get(&(*x2, *y2)) else {
                            continue;
                        };
                        let mut v = vec![f.zero(); idx.len()];
                        for (c, p) in &terms {
                            let full: Path = pre.iter().chain(p).chain(post).copied().collect();
                            if let Some(&i) = idx.get(&full) {
                                v[i] = &v[i] + c;
                            }
                        }
                        let s = ideal.get_mut(&(*x2, *y2)).unwrap();
                        *s = s.sum(&Subspace::span(f, idx.len(), vec![v])?)?;
                    }
                }
                relations.push(Relation { terms });
            }
        }
        Ok(BoundQuiver {
            field: f,
            nilbound,
            vertices: (0..n).map(|x| self.vertex_name(x)).collect(),
            arrows,
            relations,
        })
    }
}
