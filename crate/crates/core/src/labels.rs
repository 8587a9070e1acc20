//! Textual names for modules and functors used by fixtures and the CLI.
//!
//! Modules: `S<v>`, `P<v>`, `I<v>` (with `@<n>` over a covering), `0`,
//! `+`-separated sums, or a `module` alias from the fixture file.
//! Functors: `H@<module>` for `Hom(-, M)`, `S@<module>` for the simple
//! functor at an indecomposable, `C@<module>><module>` for the cokernel of
//! `Hom(-, f)` with `f` the sum of the hom basis, and `0`.

use crate::covering::{Covering, LayeredMap};
use crate::error::{FoveaError, Result};
use crate::functcat::{
    complete_list, simple_functor, simple_functor_cover, trim_functor, FpFunctor, LayeredFunctor,
};
use crate::modcat::{direct_sum, hom_space, Algebra, ModMap, Module};

fn bad(label: &str) -> FoveaError {
    FoveaError::Invalid(format!("bad label `{label}`"))
}

fn resolve<'a>(label: &'a str, aliases: &'a [(String, String)]) -> Option<&'a str> {
    aliases
        .iter()
        .find(|(n, _)| n == label)
        .map(|(_, l)| l.as_str())
}

/// A module over the base algebra.
pub fn base_module(alg: &Algebra, label: &str, aliases: &[(String, String)]) -> Result<Module> {
    let label = label.trim();
    if let Some(l) = resolve(label, aliases) {
        return base_module(alg, l, &[]);
    }
    if label.contains('+') {
        let parts = label
            .split('+')
            .map(|p| base_module(alg, p, aliases))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&Module> = parts.iter().collect();
        return Ok(direct_sum(alg.quiver.clone(), &refs).0);
    }
    if label == "0" {
        return Ok(Module::zero(alg.quiver.clone()));
    }
    let kind = label.chars().next().ok_or_else(|| bad(label))?;
    let v = alg.quiver.vertex_index(label[kind.len_utf8()..].trim())?;
    match kind {
        'S' => Ok(alg.simple(v)),
        'P' => Ok(alg.projective(v)),
        'I' => Ok(alg.injective(v)),
        _ => Err(bad(label)),
    }
}

enum FunctorLabel<'a> {
    Zero,
    Hom(&'a str),
    Simple(&'a str),
    Coker(&'a str, &'a str),
}

fn split_functor(label: &str) -> Result<FunctorLabel<'_>> {
    let label = label.trim();
    if label == "0" {
        return Ok(FunctorLabel::Zero);
    }
    let (kind, rest) = label.split_once('@').ok_or_else(|| bad(label))?;
    match kind.trim() {
        "H" => Ok(FunctorLabel::Hom(rest)),
        "S" => Ok(FunctorLabel::Simple(rest)),
        "C" => {
            let (m, n) = rest.split_once('>').ok_or_else(|| bad(label))?;
            Ok(FunctorLabel::Coker(m, n))
        }
        _ => Err(bad(label)),
    }
}

fn basis_sum(basis: &[ModMap], m: &Module, n: &Module) -> ModMap {
    basis.iter().fold(ModMap::zero(m, n), |acc, h| acc.add(h))
}

/// A functor on `mod A`. Simple functors need a complete indecomposable
/// list within the caps.
pub fn base_functor(
    alg: &Algebra,
    label: &str,
    aliases: &[(String, String)],
    dim_cap: usize,
    count_cap: usize,
) -> Result<FpFunctor> {
    match split_functor(label)? {
        FunctorLabel::Zero => Ok(FpFunctor::zero(&Module::zero(alg.quiver.clone()))),
        FunctorLabel::Hom(m) => Ok(FpFunctor::representable(&base_module(alg, m, aliases)?)),
        FunctorLabel::Simple(m) => {
            let n = base_module(alg, m, aliases)?;
            let list = complete_list(alg, dim_cap, count_cap)?.ok_or(FoveaError::IncompleteList)?;
            simple_functor(alg, &n, &list)
        }
        FunctorLabel::Coker(m, n) => {
            let (m, n) = (base_module(alg, m, aliases)?, base_module(alg, n, aliases)?);
            let f = basis_sum(&hom_space(&m, &n)?, &m, &n);
            FpFunctor::new(m, n, f)
        }
    }
}

/// A functor on finite-dimensional modules over the covering.
pub fn cover_functor(
    cov: &Covering,
    label: &str,
    aliases: &[(String, String)],
) -> Result<LayeredFunctor> {
    match split_functor(label)? {
        FunctorLabel::Zero => Ok(LayeredFunctor::representable(&cov.zero()?)),
        FunctorLabel::Hom(m) => Ok(LayeredFunctor::representable(
            &cov.module_from_label(m, aliases)?,
        )),
        FunctorLabel::Simple(m) => simple_functor_cover(cov, &cov.module_from_label(m, aliases)?),
        FunctorLabel::Coker(m, n) => {
            let (x, y) = (
                cov.module_from_label(m, aliases)?,
                cov.module_from_label(n, aliases)?,
            );
            let (w, basis) = cov.hom(&x, &y)?;
            let (xa, ya) = (cov.reindex(&x, w)?, cov.reindex(&y, w)?);
            let f = basis_sum(&basis, &xa.module, &ya.module);
            let t = LayeredFunctor::new(cov, &xa, &ya, &LayeredMap { window: w, map: f })?;
            trim_functor(cov, &t)
        }
    }
}

/// Whether `label` names a module over the covering rather than the base.
pub fn is_cover_label(label: &str) -> bool {
    label.contains('@') || label.trim() == "0"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{parse_bound_quiver, VoltageQuiver};

    fn a2() -> Algebra {
        Algebra::new(&parse_bound_quiver("vertex 1 2\narrow a: 1 -> 2\n").unwrap()).unwrap()
    }

    #[test]
    fn base_labels() {
        let a = a2();
        assert_eq!(base_module(&a, "P2", &[]).unwrap().dims, vec![1, 1]);
        assert_eq!(base_module(&a, "S1 + S2", &[]).unwrap().dims, vec![1, 1]);
        let al = vec![("X".to_string(), "I1".to_string())];
        assert_eq!(base_module(&a, "X", &al).unwrap().dims, vec![1, 1]);
        assert!(base_module(&a, "Q1", &[]).is_err());
        assert!(base_module(&a, "S3", &[]).is_err());
    }

    #[test]
    fn simple_functor_value() {
        let a = a2();
        let s = base_functor(&a, "S@S2", &[], 8, 64).unwrap();
        assert_eq!(s.eval_dim(&a.simple(1)).unwrap(), 1);
        assert_eq!(s.eval_dim(&a.projective(1)).unwrap(), 0);
        let c = base_functor(&a, "C@S1>P2", &[], 8, 64).unwrap();
        assert_eq!(c.eval_dim(&a.simple(0)).unwrap(), 0);
        assert_eq!(c.eval_dim(&a.simple(1)).unwrap(), 0);
        assert_eq!(c.eval_dim(&a.projective(1)).unwrap(), 1);
        assert!(base_functor(&a, "K@S1", &[], 8, 64).is_err());
    }

    #[test]
    fn cover_labels() {
        let c = Covering::new(
            VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n")
                .unwrap(),
        )
        .unwrap();
        let h = cover_functor(&c, "H@Pv@1", &[]).unwrap();
        assert_eq!(h.evaluate(&c, &c.projective(0, 1).unwrap()).unwrap(), 1);
        let k = cover_functor(&c, "C@Sv@0>Pv@1", &[]).unwrap();
        assert_eq!(k.evaluate(&c, &c.projective(0, 1).unwrap()).unwrap(), 1);
        assert_eq!(k.evaluate(&c, &c.simple(0, 0).unwrap()).unwrap(), 0);
        assert!(is_cover_label("Sv@0") && !is_cover_label("S2"));
    }
}
