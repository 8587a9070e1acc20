//! Finite-dimensional right modules (contravariant representations) and
//! their morphisms.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{FoveaError, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};
use crate::quiver::{BoundQuiver, PathBasis};

/// `mats[a]` for an arrow `a: x -> y` has shape `dims[x] x dims[y]` and maps
/// column vectors of `M(y)` to `M(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Module {
    pub base: Arc<BoundQuiver>,
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix>,
}

/// A morphism `f: M -> N`; `comps[x]` has shape `N.dims[x] x M.dims[x]`.
/// Source and target travel alongside.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMap {
    pub comps: Vec<Matrix>,
}

pub(crate) fn same_base(a: &Module, b: &Module) -> Result<()> {
    if Arc::ptr_eq(&a.base, &b.base) || a.base == b.base {
        Ok(())
    } else {
        Err(FoveaError::BaseMismatch)
    }
}

impl Module {
    pub fn new(base: Arc<BoundQuiver>, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != base.vertices.len() || mats.len() != base.arrows.len() {
            return Err(FoveaError::Dimension(
                "module data does not match the quiver".into(),
            ));
        }
        for (a, m) in base.arrows.iter().zip(&mats) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] || m.field() != base.field {
                return Err(FoveaError::Dimension(format!(
                    "matrix of {} should be {}x{}, got {}x{}",
                    a.name,
                    dims[a.source],
                    dims[a.target],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let m = Module { base, dims, mats };
        for r in &m.base.relations {
            let (s, t) = m.base.path_ends(&r.terms[0].1)?;
            let mut acc = Matrix::zeros(m.field(), m.dims[s], m.dims[t]);
            for (c, p) in &r.terms {
                acc = acc.add(&m.path_matrix(s, p).scale(c));
            }
            if !acc.is_zero() {
                return Err(FoveaError::Invalid(format!(
                    "relation through {} does not vanish",
                    m.base.path_name(&r.terms[0].1)
                )));
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.base.field
    }

    pub fn zero(base: Arc<BoundQuiver>) -> Self {
        let f = base.field;
        let mats = base.arrows.iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module {
            dims: vec![0; base.vertices.len()],
            mats,
            base,
        }
    }

    pub fn simple(base: Arc<BoundQuiver>, x: usize) -> Self {
        let f = base.field;
        let dims: Vec<usize> = (0..base.vertices.len())
            .map(|v| usize::from(v == x))
            .collect();
        let mats = base
            .arrows
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.source], dims[a.target]))
            .collect();
        Module { base, dims, mats }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// `M(p)` for a path starting at `x`; the empty path gives the identity.
    pub fn path_matrix(&self, x: usize, p: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[x]);
        for &a in p {
            acc = acc.mul(&self.mats[a]);
        }
        acc
    }

    /// Action of an element of `R(x,y)` given in path-basis coordinates:
    /// a `dims[x] x dims[y]` matrix.
    pub fn element_matrix(&self, pb: &PathBasis, x: usize, y: usize, u: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.field(), self.dims[x], self.dims[y]);
        for (c, p) in u.iter().zip(pb.hom(x, y).basis_paths()) {
            if !c.is_zero() {
                acc = acc.add(&self.path_matrix(x, p).scale(c));
            }
        }
        acc
    }

    /// Offsets of each vertex space inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut o = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            o.push(acc);
            acc += d;
        }
        o
    }

    /// Vector-space dual over the opposite quiver.
    pub fn dual(&self, op: Arc<BoundQuiver>) -> Module {
        Module {
            base: op,
            dims: self.dims.clone(),
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Submodule spanned at each vertex by the columns of `gens[x]`.
    pub fn submodule(&self, gens: &[Matrix]) -> (Module, ModMap) {
        let f = self.field();
        let bases: Vec<Matrix> = gens
            .iter()
            .enumerate()
            .map(|(x, g)| {
                let cols = if g.cols() == 0 {
                    Vec::new()
                } else {
                    g.column_space_basis()
                };
                Matrix::from_columns(f, self.dims[x], &cols)
            })
            .collect();
        let mats = self
            .base
            .arrows
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| {
                let (bx, by) = (&bases[a.source], &bases[a.target]);
                if bx.cols() == 0 || by.cols() == 0 {
                    return Matrix::zeros(f, bx.cols(), by.cols());
                }
                bx.solve_matrix(&m.mul(by))
                    .expect("generators span a submodule")
            })
            .collect();
        let dims = bases.iter().map(Matrix::cols).collect();
        (
            Module {
                base: self.base.clone(),
                dims,
                mats,
            },
            ModMap { comps: bases },
        )
    }

    /// Quotient by the submodule spanned by the columns of `gens[x]`, with
    /// the projection.
    pub fn quotient(&self, gens: &[Matrix]) -> (Module, ModMap) {
        let f = self.field();
        let mut projs = Vec::new();
        let mut sections = Vec::new();
        for (x, g) in gens.iter().enumerate() {
            let n = self.dims[x];
            let sub = if g.cols() == 0 {
                Vec::new()
            } else {
                g.column_space_basis()
            };
            let s = Subspace::span(f, n, sub.clone()).expect("lengths agree");
            let comp = s.complement_coordinates();
            let mut cols = sub.clone();
            cols.extend(comp.iter().map(|&c| crate::quiver::unit(f, n, c)));
            let t = Matrix::from_columns(f, n, &cols);
            let tinv = if n == 0 {
                t.clone()
            } else {
                t.inverse().expect("complement completes a basis")
            };
            let k = sub.len();
            projs.push(tinv.select_rows(&(k..n).collect::<Vec<_>>()));
            sections.push(Matrix::from_columns(
                f,
                n,
                &comp
                    .iter()
                    .map(|&c| crate::quiver::unit(f, n, c))
                    .collect::<Vec<_>>(),
            ));
        }
        let mats = self
            .base
            .arrows
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| projs[a.source].mul(m).mul(&sections[a.target]))
            .collect();
        let dims = projs.iter().map(Matrix::rows).collect();
        (
            Module {
                base: self.base.clone(),
                dims,
                mats,
            },
            ModMap { comps: projs },
        )
    }

    /// Radical submodule: at `x`, the sum of images of all arrows out of `x`.
    pub fn radical(&self) -> (Module, ModMap) {
        let gens = self.radical_gens();
        self.submodule(&gens)
    }

    /// At each vertex, the images of all arrows leaving it, side by side.
    pub fn radical_gens(&self) -> Vec<Matrix> {
        (0..self.dims.len())
            .map(|x| {
                let mut acc = Matrix::zeros(self.field(), self.dims[x], 0);
                for (a, m) in self.base.arrows.iter().zip(&self.mats) {
                    if a.source == x {
                        acc = acc.hstack(m);
                    }
                }
                acc
            })
            .collect()
    }

    /// Top `M / rad M` with its projection.
    pub fn top(&self) -> (Module, ModMap) {
        self.quotient(&self.radical_gens())
    }

    /// Socle: at `x`, the common kernel of all arrows into `x`.
    pub fn socle(&self) -> (Module, ModMap) {
        let gens = self.socle_gens();
        self.submodule(&gens)
    }

    fn socle_gens(&self) -> Vec<Matrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|x| {
                let mut stacked = Matrix::zeros(f, 0, self.dims[x]);
                for (a, m) in self.base.arrows.iter().zip(&self.mats) {
                    if a.target == x {
                        stacked = stacked.vstack(m);
                    }
                }
                let ker = if stacked.rows() == 0 {
                    Matrix::identity(f, self.dims[x]).column_vectors()
                } else {
                    stacked.kernel_basis()
                };
                Matrix::from_columns(f, self.dims[x], &ker)
            })
            .collect()
    }

    /// `M / soc M` with its projection.
    pub fn mod_socle(&self) -> (Module, ModMap) {
        self.quotient(&self.socle_gens())
    }

    pub fn is_semisimple(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// Serializes in the module file format.
    pub fn to_text(&self) -> String {
        let mut s = String::from("dims");
        for (v, d) in self.base.vertices.iter().zip(&self.dims) {
            write!(s, " {v}={d}").unwrap();
        }
        s.push('\n');
        for (a, m) in self.base.arrows.iter().zip(&self.mats) {
            writeln!(s, "mat {} = {}", a.name, matrix_text(m)).unwrap();
        }
        s
    }

    pub fn parse(base: Arc<BoundQuiver>, text: &str) -> Result<Module> {
        let f = base.field;
        let mut dims: Vec<Option<usize>> = vec![None; base.vertices.len()];
        let mut mats: Vec<Option<(usize, Matrix)>> = vec![None; base.arrows.len()];
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let err = |msg: String| FoveaError::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match kw {
                "dims" => {
                    for tok in rest.split_whitespace() {
                        let (v, d) = tok
                            .split_once('=')
                            .ok_or_else(|| err(format!("bad dims entry `{tok}`")))?;
                        let x = base.vertex_index(v).map_err(|e| err(e.to_string()))?;
                        dims[x] = Some(d.parse().map_err(|_| err(format!("bad dimension `{d}`")))?);
                    }
                }
                "mat" => {
                    let (name, body) = rest
                        .split_once('=')
                        .ok_or_else(|| err("expected `mat <arrow> = [[..]]`".into()))?;
                    let a = base
                        .arrow_index(name.trim())
                        .ok_or_else(|| err(format!("unknown arrow `{}`", name.trim())))?;
                    mats[a] = Some((line_no, parse_matrix(f, body.trim()).map_err(err)?));
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }
        let dims: Vec<usize> = dims.into_iter().map(|d| d.unwrap_or(0)).collect();
        let mut out = Vec::new();
        for (i, a) in base.arrows.iter().enumerate() {
            let (r, c) = (dims[a.source], dims[a.target]);
            match mats[i].take() {
                Some((line, m)) => {
                    let m = if m.rows() == r && (m.cols() == c || r == 0) {
                        Matrix::from_data(f, r, c, m.into_data())
                    } else {
                        return Err(FoveaError::Parse {
                            line,
                            msg: format!("matrix of {} should be {r}x{c}", a.name),
                        });
                    };
                    out.push(m);
                }
                None if r == 0 || c == 0 => out.push(Matrix::zeros(f, r, c)),
                None => {
                    return Err(FoveaError::Parse {
                        line: 0,
                        msg: format!("missing matrix for {}", a.name),
                    })
                }
            }
        }
        Module::new(base, dims, out)
    }
}

pub fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            format!(
                "[{}]",
                m.row(i)
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn parse_matrix(f: Field, s: &str) -> std::result::Result<Matrix, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("bad matrix `{s}`"))?;
    if inner.is_empty() {
        return Ok(Matrix::zeros(f, 0, 0));
    }
    let body = inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("bad matrix `{s}`"))?;
    let mut rows = Vec::new();
    for r in body.split("],[") {
        let row = if r.is_empty() {
            Vec::new()
        } else {
            r.split(',')
                .map(|t| f.parse_scalar(t).map_err(|e| e.to_string()))
                .collect::<std::result::Result<Vec<_>, _>>()?
        };
        rows.push(row);
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err("ragged matrix".into());
    }
    Ok(Matrix::from_rows(f, cols, rows))
}

/// Direct sum with canonical inclusions and projections.
pub fn direct_sum(base: Arc<BoundQuiver>, parts: &[&Module]) -> (Module, Vec<ModMap>, Vec<ModMap>) {
    let f = base.field;
    let n = base.vertices.len();
    let dims: Vec<usize> = (0..n)
        .map(|x| parts.iter().map(|m| m.dims[x]).sum())
        .collect();
    let mats = (0..base.arrows.len())
        .map(|a| {
            Matrix::block_diag(
                f,
                &parts.iter().map(|m| m.mats[a].clone()).collect::<Vec<_>>(),
            )
        })
        .collect();
    let mut incs = Vec::new();
    let mut projs = Vec::new();
    let mut off = vec![0usize; n];
    for m in parts {
        let mut inc = Vec::new();
        let mut proj = Vec::new();
        for x in 0..n {
            let mut i = Matrix::zeros(f, dims[x], m.dims[x]);
            i.set_block(off[x], 0, &Matrix::identity(f, m.dims[x]));
            proj.push(i.transpose());
            inc.push(i);
            off[x] += m.dims[x];
        }
        incs.push(ModMap { comps: inc });
        projs.push(ModMap { comps: proj });
    }
    (Module { base, dims, mats }, incs, projs)
}

impl ModMap {
    pub fn zero(m: &Module, n: &Module) -> ModMap {
        let f = m.field();
        ModMap {
            comps: m
                .dims
                .iter()
                .zip(&n.dims)
                .map(|(&a, &b)| Matrix::zeros(f, b, a))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> ModMap {
        ModMap {
            comps: m
                .dims
                .iter()
                .map(|&d| Matrix::identity(m.field(), d))
                .collect(),
        }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ModMap) -> ModMap {
        ModMap {
            comps: self
                .comps
                .iter()
                .zip(&g.comps)
                .map(|(f, g)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, o: &ModMap) -> ModMap {
        ModMap {
            comps: self
                .comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModMap {
        ModMap {
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn trace(&self, f: Field) -> Scalar {
        self.comps.iter().fold(f.zero(), |acc, c| &acc + &c.trace())
    }

    pub fn rank(&self) -> usize {
        self.comps
            .iter()
            .map(|c| {
                if c.rows() == 0 || c.cols() == 0 {
                    0
                } else {
                    c.rank()
                }
            })
            .sum()
    }

    /// All entries, vertex by vertex, row-major.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.comps
            .iter()
            .flat_map(|c| c.data().iter().cloned())
            .collect()
    }

    pub fn from_vector(m: &Module, n: &Module, v: &[Scalar]) -> ModMap {
        let mut off = 0;
        let comps = m
            .dims
            .iter()
            .zip(&n.dims)
            .map(|(&a, &b)| {
                let c = Matrix::from_data(m.field(), b, a, v[off..off + a * b].to_vec());
                off += a * b;
                c
            })
            .collect();
        ModMap { comps }
    }

    /// Exact naturality check `f_x M(a) = N(a) f_y`.
    pub fn is_natural(&self, m: &Module, n: &Module) -> bool {
        m.base.arrows.iter().enumerate().all(|(i, a)| {
            self.comps[a.source].mul(&m.mats[i]) == n.mats[i].mul(&self.comps[a.target])
        })
    }

    pub fn linear_combination(
        maps: &[ModMap],
        coeffs: &[Scalar],
        m: &Module,
        n: &Module,
    ) -> ModMap {
        let mut acc = ModMap::zero(m, n);
        for (f, c) in maps.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_bound_quiver;

    fn a2() -> Arc<BoundQuiver> {
        Arc::new(parse_bound_quiver("vertex 1 2\narrow a: 1 -> 2\n").unwrap())
    }

    fn p2(q: &Arc<BoundQuiver>) -> Module {
        let f = q.field;
        Module::new(q.clone(), vec![1, 1], vec![Matrix::identity(f, 1)]).unwrap()
    }

    #[test]
    fn radical_and_socle_of_p2() {
        let q = a2();
        let m = p2(&q);
        let (r, _) = m.radical();
        assert_eq!(r.dims, vec![1, 0]);
        let (s, _) = m.socle();
        assert_eq!(s.dims, vec![1, 0]);
        let (t, _) = m.top();
        assert_eq!(t.dims, vec![0, 1]);
    }

    #[test]
    fn relation_is_enforced() {
        let q = Arc::new(
            parse_bound_quiver("nilbound 2\nvertex v\narrow a: v -> v\nrelation a*a\n").unwrap(),
        );
        let f = q.field;
        assert!(Module::new(q.clone(), vec![1], vec![Matrix::identity(f, 1)]).is_err());
        assert!(Module::new(q, vec![2], vec![Matrix::from_i64(f, &[&[0, 1], &[0, 0]])]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let q = a2();
        let s = Module::simple(q.clone(), 0);
        for m in [p2(&q), s] {
            let t = m.to_text();
            let back = Module::parse(q.clone(), &t).unwrap();
            assert_eq!(back, m);
            assert_eq!(back.to_text(), t);
        }
    }

    #[test]
    fn direct_sum_maps() {
        let q = a2();
        let m = p2(&q);
        let s = Module::simple(q.clone(), 0);
        let (d, inc, proj) = direct_sum(q, &[&m, &s]);
        assert_eq!(d.dims, vec![2, 1]);
        assert!(inc[0].is_natural(&m, &d) && proj[1].is_natural(&d, &s));
        assert_eq!(inc[0].then(&proj[0]), ModMap::identity(&m));
    }
}
