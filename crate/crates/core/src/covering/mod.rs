//! Galois coverings presented by gradings: shifts, push-downs and checks of
//! the covering identities.

mod layered;
mod verify;

pub use layered::{Covering, LayeredMap, LayeredModule};
pub use verify::{
    density_search, shift_classes, stable_sums, twist_iso_search, verify_covering_axioms,
    verify_pushdown, verify_pushdown_exhaustion, DEFAULT_MAX_RADIUS, DEFAULT_SEARCH_RADIUS,
    DEFAULT_START_RADIUS,
};

use crate::error::{FoveaError, Result};
use crate::modcat::direct_sum;
use crate::quiver::{BoundQuiver, VoltageQuiver};

/// `R/Z`: the base presentation with degrees forgotten.
pub fn orbit_algebra(vq: &VoltageQuiver) -> BoundQuiver {
    vq.base.clone()
}

impl Covering {
    /// Parses `S<v>@<n>`, `P<v>@<n>`, `I<v>@<n>`, `0`, or a `+`-separated
    /// sum of these; `aliases` map names to labels.
    pub fn module_from_label(
        &self,
        label: &str,
        aliases: &[(String, String)],
    ) -> Result<LayeredModule> {
        let label = label.trim();
        if let Some((_, l)) = aliases.iter().find(|(n, _)| n == label) {
            return self.module_from_label(l, &[]);
        }
        if label.contains('+') {
            let parts = label
                .split('+')
                .map(|p| self.module_from_label(p, aliases))
                .collect::<Result<Vec<_>>>()?;
            let w = parts
                .iter()
                .map(|p| p.window)
                .reduce(|a, b| a.hull(&b))
                .expect("split yields a part");
            let parts = parts
                .iter()
                .map(|p| self.reindex(p, w))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<_> = parts.iter().map(|p| &p.module).collect();
            let (module, _, _) = direct_sum(self.lift(w)?, &refs);
            return self.trim(&LayeredModule { window: w, module });
        }
        if label == "0" {
            return self.zero();
        }
        let bad = || FoveaError::Invalid(format!("bad module label {label}"));
        let kind = label.chars().next().ok_or_else(bad)?;
        let (v, n) = label[kind.len_utf8()..].rsplit_once('@').ok_or_else(bad)?;
        let n: i64 = n.parse().map_err(|_| bad())?;
        let v = self.vq.base.vertex_index(v.trim())?;
        match kind {
            'S' => self.simple(v, n),
            'P' => self.projective(v, n),
            'I' => self.injective(v, n),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let c = Covering::new(
            VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n")
                .unwrap(),
        )
        .unwrap();
        let al = vec![("M0".to_string(), "Pv@1".to_string())];
        assert_eq!(
            c.module_from_label("M0", &al).unwrap(),
            c.projective(0, 1).unwrap()
        );
        assert_eq!(
            c.module_from_label("Iv@0", &al).unwrap().window,
            c.projective(0, 1).unwrap().window
        );
        let s = c.module_from_label("Sv@0 + Sv@2", &al).unwrap();
        assert_eq!(s.module.dims, vec![1, 0, 1]);
        assert!(c.module_from_label("Qv@0", &al).is_err());
        assert!(c.module_from_label("Sw@0", &al).is_err());
        assert!(c.module_from_label("0", &al).unwrap().module.is_zero());
    }

    #[test]
    fn orbit_of_line_is_dual_numbers() {
        let vq =
            VoltageQuiver::parse("nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n")
                .unwrap();
        assert_eq!(
            crate::quiver::path_basis(&orbit_algebra(&vq))
                .unwrap()
                .total_dim(),
            2
        );
    }
}
