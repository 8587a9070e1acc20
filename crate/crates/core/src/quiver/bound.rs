//! Bound quiver presentations and their text format.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{FoveaError, Result};
use crate::exactla::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Arrows in traversal order: in `a*b`, `a` is traversed first.
pub type Path = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

/// A finite quiver with relations over an exact field. Every path of length
/// `nilbound` is declared zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundQuiver {
    pub field: Field,
    pub nilbound: usize,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

/// Everything a quiver file can carry: the presentation, optional arrow
/// degrees (present iff some arrow has `deg`), and named module aliases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: BoundQuiver,
    pub degrees: Option<Vec<i64>>,
    pub aliases: Vec<(String, String)>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || ":*+#=".contains(c))
}

impl BoundQuiver {
    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| FoveaError::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Source and target of a nonempty path, or an error if it does not compose.
    pub fn path_ends(&self, p: &[usize]) -> Result<(usize, usize)> {
        let first = p
            .first()
            .ok_or_else(|| FoveaError::Presentation("empty path".into()))?;
        let mut end = self.arrows[*first].target;
        for w in p.windows(2) {
            let (a, b) = (&self.arrows[w[0]], &self.arrows[w[1]]);
            if a.target != b.source {
                return Err(FoveaError::Presentation(format!(
                    "cannot compose {} then {}: target {} is not source {}",
                    a.name, b.name, self.vertices[a.target], self.vertices[b.source]
                )));
            }
            end = b.target;
        }
        Ok((self.arrows[*first].source, end))
    }

    pub fn path_name(&self, p: &[usize]) -> String {
        p.iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Structural validation: names, arrow endpoints, parallel relation terms.
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashMap::new();
        for v in &self.vertices {
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(FoveaError::Presentation(format!("duplicate vertex {v}")));
            }
        }
        let mut seen = HashMap::new();
        for a in &self.arrows {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(FoveaError::Presentation(format!(
                    "arrow {} has a dangling end",
                    a.name
                )));
            }
            if seen.insert(a.name.as_str(), ()).is_some() {
                return Err(FoveaError::Presentation(format!(
                    "duplicate arrow {}",
                    a.name
                )));
            }
        }
        if self.nilbound == 0 {
            return Err(FoveaError::Presentation("nilbound must be positive".into()));
        }
        for r in &self.relations {
            let mut ends = None;
            for (c, p) in &r.terms {
                if c.field() != self.field {
                    return Err(FoveaError::Presentation(
                        "coefficient from another field".into(),
                    ));
                }
                let e = self.path_ends(p)?;
                if *ends.get_or_insert(e) != e {
                    return Err(FoveaError::Presentation(format!(
                        "relation terms are not parallel: {}",
                        self.path_name(p)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Opposite quiver: arrows reversed, relation paths reversed.
    pub fn opposite(&self) -> BoundQuiver {
        BoundQuiver {
            field: self.field,
            nilbound: self.nilbound,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Full subquiver on the given vertices (in the given order), keeping
    /// the relations whose terms stay inside. Exact for convex subsets.
    pub fn full_subquiver(&self, keep: &[usize]) -> BoundQuiver {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut arrow_map = HashMap::new();
        let mut arrows = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(&s), Some(&t)) = (pos.get(&a.source), pos.get(&a.target)) {
                arrow_map.insert(i, arrows.len());
                arrows.push(Arrow {
                    name: a.name.clone(),
                    source: s,
                    target: t,
                });
            }
        }
        let relations = self
            .relations
            .iter()
            .filter(|r| {
                r.terms
                    .iter()
                    .all(|(_, p)| p.iter().all(|a| arrow_map.contains_key(a)))
            })
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| (c.clone(), p.iter().map(|a| arrow_map[a]).collect()))
                    .collect(),
            })
            .collect();
        BoundQuiver {
            field: self.field,
            nilbound: self.nilbound,
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows,
            relations,
        }
    }

    /// The same presentation over another field (coefficients reinterpreted
    /// through their printed form).
    pub fn with_field(&self, field: Field) -> Result<BoundQuiver> {
        let mut out = self.clone();
        out.field = field;
        for r in &mut out.relations {
            for (c, _) in &mut r.terms {
                *c = field.parse_scalar(&signed_repr(c))?;
            }
        }
        Ok(out)
    }

    /// Serializes in the line-oriented quiver format.
    pub fn to_text(&self) -> String {
        self.to_text_with(None, &[])
    }

    pub fn to_text_with(&self, degrees: Option<&[i64]>, aliases: &[(String, String)]) -> String {
        let mut s = String::new();
        match self.field {
            Field::Prime(p) => writeln!(s, "field gf {p}").unwrap(),
            Field::Rational => writeln!(s, "field q").unwrap(),
        }
        writeln!(s, "nilbound {}", self.nilbound).unwrap();
        writeln!(s, "vertex {}", self.vertices.join(" ")).unwrap();
        for (i, a) in self.arrows.iter().enumerate() {
            write!(
                s,
                "arrow {}: {} -> {}",
                a.name, self.vertices[a.source], self.vertices[a.target]
            )
            .unwrap();
            if let Some(d) = degrees {
                write!(s, " deg {}", d[i]).unwrap();
            }
            s.push('\n');
        }
        for r in &self.relations {
            s.push_str("relation ");
            for (k, (c, p)) in r.terms.iter().enumerate() {
                if k > 0 {
                    s.push_str(" + ");
                }
                if !c.is_one() {
                    write!(s, "{c} ").unwrap();
                }
                s.push_str(&self.path_name(p));
            }
            s.push('\n');
        }
        for (name, label) in aliases {
            writeln!(s, "module {name} = {label}").unwrap();
        }
        s
    }
}

fn signed_repr(c: &Scalar) -> String {
    match c {
        Scalar::Fp { v, p } if *v > p / 2 => format!("-{}", p - v),
        _ => c.to_string(),
    }
}

/// Parses a bound quiver, ignoring arrow degrees.
pub fn parse_bound_quiver(text: &str) -> Result<BoundQuiver> {
    parse_quiver_file(text).map(|f| f.quiver)
}

/// Parses the full quiver file format.
pub fn parse_quiver_file(text: &str) -> Result<QuiverFile> {
    let mut field = Field::default();
    let mut nilbound = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut degrees: Vec<Option<i64>> = Vec::new();
    let mut raw_relations: Vec<(usize, String)> = Vec::new();
    let mut aliases = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let err = |msg: String| FoveaError::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "field" => {
                field = Field::parse(rest).map_err(|e| err(e.to_string()))?;
            }
            "nilbound" => {
                let m: usize = rest
                    .parse()
                    .map_err(|_| err(format!("bad nilbound `{rest}`")))?;
                nilbound = Some(m);
            }
            "vertex" => {
                for v in rest.split_whitespace() {
                    if !valid_name(v) {
                        return Err(err(format!("bad vertex name `{v}`")));
                    }
                    if vertices.iter().any(|w| w == v) {
                        return Err(err(format!("duplicate vertex `{v}`")));
                    }
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                let (name, spec) = rest
                    .split_once(':')
                    .ok_or_else(|| err("expected `arrow <name>: <src> -> <tgt>`".into()))?;
                let name = name.trim();
                if !valid_name(name) || arrows.iter().any(|a| a.name == name) {
                    return Err(err(format!("bad or duplicate arrow name `{name}`")));
                }
                let toks: Vec<&str> = spec.split_whitespace().collect();
                let (src, tgt, deg) = match toks.as_slice() {
                    [s, "->", t] => (*s, *t, None),
                    [s, "->", t, "deg", d] => {
                        let d: i64 = d.parse().map_err(|_| err(format!("bad degree `{d}`")))?;
                        (*s, *t, Some(d))
                    }
                    _ => return Err(err("expected `<src> -> <tgt> [deg <k>]`".into())),
                };
                let find = |v: &str| {
                    vertices
                        .iter()
                        .position(|w| w == v)
                        .ok_or_else(|| err(format!("dangling vertex `{v}`")))
                };
                arrows.push(Arrow {
                    name: name.to_string(),
                    source: find(src)?,
                    target: find(tgt)?,
                });
                degrees.push(deg);
            }
            "relation" => raw_relations.push((line_no, rest.to_string())),
            "module" => {
                let (name, label) = rest
                    .split_once('=')
                    .ok_or_else(|| err("expected `module <name> = <label>`".into()))?;
                aliases.push((name.trim().to_string(), label.trim().to_string()));
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }

    let mut q = BoundQuiver {
        field,
        nilbound: 0,
        vertices,
        arrows,
        relations: Vec::new(),
    };
    for (line, text) in raw_relations {
        let rel = parse_relation(&q, &text).map_err(|e| match e {
            FoveaError::Parse { msg, .. } => FoveaError::Parse { line, msg },
            other => FoveaError::Parse {
                line,
                msg: other.to_string(),
            },
        })?;
        q.relations.push(rel);
    }
    q.nilbound = match nilbound {
        Some(m) => m,
        None => longest_path(&q)
            .map(|l| l + 1)
            .ok_or_else(|| FoveaError::Parse {
                line: 0,
                msg: "cyclic quiver needs `nilbound`".into(),
            })?,
    };
    q.validate()?;
    let degrees = if degrees.iter().any(Option::is_some) {
        Some(degrees.into_iter().map(|d| d.unwrap_or(0)).collect())
    } else {
        None
    };
    Ok(QuiverFile {
        quiver: q,
        degrees,
        aliases,
    })
}

fn parse_relation(q: &BoundQuiver, text: &str) -> Result<Relation> {
    let err = |msg: String| FoveaError::Parse { line: 0, msg };
    let mut terms = Vec::new();
    let mut pending_sign = q.field.one();
    let mut coef: Option<Scalar> = None;
    for tok in text.split_whitespace() {
        match tok {
            "+" => {}
            "-" => pending_sign = -&pending_sign,
            t if t.contains('*') || q.arrow_index(t).is_some() => {
                let path = t
                    .split('*')
                    .map(|a| {
                        q.arrow_index(a)
                            .ok_or_else(|| err(format!("unknown arrow `{a}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                q.path_ends(&path)
                    .map_err(|e| err(format!("composition error: {e}")))?;
                let c = coef.take().unwrap_or_else(|| q.field.one());
                terms.push((&c * &pending_sign, path));
                pending_sign = q.field.one();
            }
            t => {
                if coef.is_some() {
                    return Err(err(format!("two coefficients in a row at `{t}`")));
                }
                coef = Some(q.field.parse_scalar(t).map_err(|e| err(e.to_string()))?);
            }
        }
    }
    if coef.is_some() || terms.is_empty() {
        return Err(err("relation must end with a path".into()));
    }
    Ok(Relation { terms })
}

/// Longest path length in an acyclic quiver; `None` if there is a cycle.
pub fn longest_path(q: &BoundQuiver) -> Option<usize> {
    let n = q.vertices.len();
    let mut indeg = vec![0usize; n];
    for a in &q.arrows {
        indeg[a.target] += 1;
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for a in q.arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                order.push(a.target);
            }
        }
        i += 1;
    }
    if order.len() < n {
        return None;
    }
    let mut longest = vec![0usize; n];
    for &v in &order {
        for a in q.arrows.iter().filter(|a| a.source == v) {
            longest[a.target] = longest[a.target].max(longest[v] + 1);
        }
    }
    Some(longest.into_iter().max().unwrap_or(0))
}
