//! Z-graded presentations and their finite lifts.

use std::collections::HashMap;

use crate::error::{FoveaError, Result};

use super::bound::{parse_quiver_file, Arrow, BoundQuiver, Relation};

/// A bound quiver with integer arrow degrees. The covering category has
/// vertices `(v, n)` and arrows `(a, n): (s a, n) -> (t a, n + deg a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VoltageQuiver {
    pub base: BoundQuiver,
    pub degree: Vec<i64>,
}

/// A closed interval of layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(FoveaError::Invalid(format!("empty window [{lo},{hi}]")));
        }
        Ok(Window { lo, hi })
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn shift(&self, k: i64) -> Window {
        Window {
            lo: self.lo + k,
            hi: self.hi + k,
        }
    }

    pub fn hull(&self, o: &Window) -> Window {
        Window {
            lo: self.lo.min(o.lo),
            hi: self.hi.max(o.hi),
        }
    }

    pub fn layers(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl VoltageQuiver {
    pub fn new(base: BoundQuiver, degree: Vec<i64>) -> Result<Self> {
        base.validate()?;
        if degree.len() != base.arrows.len() {
            return Err(FoveaError::Presentation(
                "one degree per arrow required".into(),
            ));
        }
        if let Some(i) = degree.iter().position(|&d| d < 0) {
            return Err(FoveaError::Presentation(format!(
                "arrow {} has negative degree; use nonnegative degrees",
                base.arrows[i].name
            )));
        }
        let vq = VoltageQuiver { base, degree };
        for r in &vq.base.relations {
            let d0 = vq.path_degree(&r.terms[0].1);
            if r.terms.iter().any(|(_, p)| vq.path_degree(p) != d0) {
                return Err(FoveaError::Presentation(format!(
                    "relation containing {} is not homogeneous",
                    vq.base.path_name(&r.terms[0].1)
                )));
            }
        }
        Ok(vq)
    }

    /// Parses a quiver file; absent degrees make every arrow degree 0.
    pub fn parse(text: &str) -> Result<Self> {
        let f = parse_quiver_file(text)?;
        let deg = f.degrees.unwrap_or_else(|| vec![0; f.quiver.arrows.len()]);
        VoltageQuiver::new(f.quiver, deg)
    }

    pub fn path_degree(&self, p: &[usize]) -> i64 {
        p.iter().map(|&a| self.degree[a]).sum()
    }

    pub fn n_base(&self) -> usize {
        self.base.vertices.len()
    }

    /// Index of the lifted vertex `(v, n)` in `lift_window(w)`.
    pub fn lifted_index(&self, w: Window, v: usize, n: i64) -> usize {
        (n - w.lo) as usize * self.n_base() + v
    }

    /// Inverse of [`lifted_index`](Self::lifted_index).
    pub fn unlift(&self, w: Window, i: usize) -> (usize, i64) {
        (i % self.n_base(), w.lo + (i / self.n_base()) as i64)
    }

    pub fn to_text(&self) -> String {
        self.base.to_text_with(Some(&self.degree), &[])
    }
}

/// Lifted arrows `(a, n)` of `lift_window(w)`, in arrow-index order.
pub fn window_arrows(vq: &VoltageQuiver, w: Window) -> Vec<(usize, i64)> {
    w.layers()
        .flat_map(|n| {
            (0..vq.degree.len())
                .filter(move |&i| w.contains(n + vq.degree[i]))
                .map(move |i| (i, n))
        })
        .collect()
}

/// The full subcategory of the covering on layers `w`, as a bound quiver
/// with vertices named `v@n`.
pub fn lift_window(vq: &VoltageQuiver, w: Window) -> Result<BoundQuiver> {
    Window::new(w.lo, w.hi)?;
    let b = &vq.base;
    let vertices = w
        .layers()
        .flat_map(|n| b.vertices.iter().map(move |v| format!("{v}@{n}")))
        .collect();
    let mut arrows = Vec::new();
    let mut lifted: HashMap<(usize, i64), usize> = HashMap::new();
    for (i, n) in window_arrows(vq, w) {
        let a = &b.arrows[i];
        lifted.insert((i, n), arrows.len());
        arrows.push(Arrow {
            name: format!("{}@{n}", a.name),
            source: vq.lifted_index(w, a.source, n),
            target: vq.lifted_index(w, a.target, n + vq.degree[i]),
        });
    }
    let mut relations = Vec::new();
    for n in w.layers() {
        for r in &b.relations {
            let mut terms = Vec::new();
            for (c, p) in &r.terms {
                let mut layer = n;
                let mut lp = Vec::with_capacity(p.len());
                for &a in p {
                    match lifted.get(&(a, layer)) {
                        Some(&i) => lp.push(i),
                        None => break,
                    }
                    layer += vq.degree[a];
                }
                if lp.len() == p.len() {
                    terms.push((c.clone(), lp));
                }
            }
            if terms.len() == r.terms.len() {
                relations.push(Relation { terms });
            }
        }
    }
    Ok(BoundQuiver {
        field: b.field,
        nilbound: b.nilbound,
        vertices,
        arrows,
        relations,
    })
}

/// The quotient of the covering by `kZ`: layers taken mod `k`.
pub fn lift_cyclic(vq: &VoltageQuiver, k: usize) -> Result<BoundQuiver> {
    if k == 0 {
        return Err(FoveaError::Invalid("cyclic lift needs k >= 1".into()));
    }
    let b = &vq.base;
    let nv = b.vertices.len();
    let km = k as i64;
    let vertices = (0..k)
        .flat_map(|r| b.vertices.iter().map(move |v| format!("{v}@{r}")))
        .collect();
    let mut arrows = Vec::new();
    let mut lifted = HashMap::new();
    for r in 0..km {
        for (i, a) in b.arrows.iter().enumerate() {
            let m = (r + vq.degree[i]).rem_euclid(km);
            lifted.insert((i, r), arrows.len());
            arrows.push(Arrow {
                name: format!("{}@{r}", a.name),
                source: r as usize * nv + a.source,
                target: m as usize * nv + a.target,
            });
        }
    }
    let mut relations = Vec::new();
    for r in 0..km {
        for rel in &b.relations {
            let terms = rel
                .terms
                .iter()
                .map(|(c, p)| {
                    let mut layer = r;
                    let lp = p
                        .iter()
                        .map(|&a| {
                            let i = lifted[&(a, layer)];
                            layer = (layer + vq.degree[a]).rem_euclid(km);
                            i
                        })
                        .collect();
                    (c.clone(), lp)
                })
                .collect();
            relations.push(Relation { terms });
        }
    }
    Ok(BoundQuiver {
        field: b.field,
        nilbound: b.nilbound,
        vertices,
        arrows,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::paths::{is_convex_indices, path_basis};

    fn line_k2() -> VoltageQuiver {
        VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n").unwrap()
    }

    #[test]
    fn window_0_1_is_a2() {
        let q = lift_window(&line_k2(), Window::new(0, 1).unwrap()).unwrap();
        assert_eq!(q.vertices, vec!["v@0", "v@1"]);
        assert_eq!(q.arrows.len(), 1);
        assert!(q.relations.is_empty());
        assert_eq!(path_basis(&q).unwrap().total_dim(), 3);
    }

    #[test]
    fn window_0_2_is_a_line_with_zero_composite() {
        let q = lift_window(&line_k2(), Window::new(0, 2).unwrap()).unwrap();
        assert_eq!(q.arrows.len(), 2);
        assert_eq!(q.relations.len(), 1);
        assert_eq!(q.relations[0].terms[0].1, vec![0, 1]);
        let pb = path_basis(&q).unwrap();
        assert_eq!(pb.dim(0, 2), 0);
    }

    #[test]
    fn degree_zero_window() {
        let vq = VoltageQuiver::parse("vertex 1 2\narrow a: 1 -> 2 deg 0\narrow b: 2 -> 1 deg 1\nnilbound 2\nrelation a*b\nrelation b*a\n").unwrap();
        let q = lift_window(&vq, Window::new(0, 0).unwrap()).unwrap();
        assert_eq!(q.arrows.len(), 1);
        assert_eq!(q.arrows[0].name, "a@0");
    }

    #[test]
    fn empty_window_and_bad_degrees() {
        assert!(Window::new(1, 0).is_err());
        assert!(VoltageQuiver::parse(
            "vertex v\narrow a: v -> v deg -1\nnilbound 2\nrelation a*a\n"
        )
        .is_err());
        let bad = "vertex 1 2\narrow a: 1 -> 2 deg 0\narrow b: 1 -> 2 deg 1\nnilbound 2\nrelation a - b\n";
        assert!(VoltageQuiver::parse(bad).is_err());
    }

    #[test]
    fn windows_are_convex_and_nested() {
        let vq = line_k2();
        let big = lift_window(&vq, Window::new(-2, 3).unwrap()).unwrap();
        let pb = path_basis(&big).unwrap();
        let w = Window::new(-2, 3).unwrap();
        let sub: Vec<usize> = (0..=1).map(|n| vq.lifted_index(w, 0, n)).collect();
        assert!(is_convex_indices(&pb, &sub));
        let small = lift_window(&vq, Window::new(0, 1).unwrap()).unwrap();
        let spb = path_basis(&small).unwrap();
        assert_eq!(spb.dim(0, 1), pb.dim(sub[0], sub[1]));
    }

    #[test]
    fn cyclic_lift_of_order_one_is_base() {
        let vq = line_k2();
        let q = lift_cyclic(&vq, 1).unwrap();
        assert_eq!(
            path_basis(&q).unwrap().total_dim(),
            path_basis(&vq.base).unwrap().total_dim()
        );
        let q2 = lift_cyclic(&vq, 2).unwrap();
        assert_eq!(path_basis(&q2).unwrap().total_dim(), 4);
    }
}
