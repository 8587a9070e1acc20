//! Indecomposables of a representation-finite algebra by closing the
//! simples, projectives and injectives under AR-quiver neighbours.

use crate::error::Result;

use super::algebra::Algebra;
use super::ar::{almost_split_sequence, injective_vertex, projective_vertex, tau, tau_inverse};
use super::decompose::{decompose, isomorphic_indecomposables};
use super::module::Module;

pub const DEFAULT_DIM_CAP: usize = 16;
pub const DEFAULT_COUNT_CAP: usize = 256;

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub modules: Vec<Module>,
    /// False when a cap stopped the closure before it stabilized.
    pub complete: bool,
}

/// Indecomposable summands of every AR neighbour of `m`: τ, τ⁻¹, middle
/// terms of the sequence ending at `m`, the radical of a projective and the
/// socle quotient of an injective.
fn neighbours(alg: &Algebra, m: &Module) -> Result<Vec<Module>> {
    let mut raw = Vec::new();
    if projective_vertex(alg, m).is_some() {
        raw.push(m.radical().0);
    } else {
        raw.push(tau(alg, m)?);
        raw.push(almost_split_sequence(alg, m)?.middle);
    }
    if injective_vertex(alg, m).is_some() {
        raw.push(m.mod_socle().0);
    } else {
        raw.push(tau_inverse(alg, m)?);
    }
    let mut out = Vec::new();
    for r in raw.iter().filter(|r| !r.is_zero()) {
        for s in decompose(r, alg.seed)?.summands {
            out.push(s.module);
        }
    }
    Ok(out)
}

fn seeds(alg: &Algebra) -> Result<Vec<Module>> {
    let mut raw = Vec::new();
    for x in 0..alg.n() {
        raw.push(alg.simple(x));
        raw.push(alg.projective(x));
        raw.push(alg.injective(x));
    }
    let mut out = Vec::new();
    for r in &raw {
        for s in decompose(r, alg.seed)?.summands {
            out.push(s.module);
        }
    }
    Ok(out)
}

fn known(list: &[Module], m: &Module) -> Result<bool> {
    for k in list {
        if k.dims == m.dims && isomorphic_indecomposables(k, m)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Closes under AR neighbours; modules above `dim_cap` are not explored and
/// the list stops growing at `count_cap`, either of which clears `complete`.
pub fn enumerate_indecomposables(
    alg: &Algebra,
    dim_cap: usize,
    count_cap: usize,
) -> Result<Enumeration> {
    let mut list: Vec<Module> = Vec::new();
    let mut complete = true;
    let mut frontier: Vec<Module> = Vec::new();
    for m in seeds(alg)? {
        if !known(&list, &m)? {
            list.push(m.clone());
            frontier.push(m);
        }
    }
    while !frontier.is_empty() {
        let found = alg.exec.map(&frontier, |m| neighbours(alg, m));
        let mut next = Vec::new();
        for batch in found {
            for m in batch? {
                if known(&list, &m)? {
                    continue;
                }
                if m.total_dim() > dim_cap || list.len() >= count_cap {
                    complete = false;
                    continue;
                }
                list.push(m.clone());
                next.push(m);
            }
        }
        frontier = next;
    }
    list.sort_by(|a, b| {
        (a.total_dim(), &a.dims, a.to_text()).cmp(&(b.total_dim(), &b.dims, b.to_text()))
    });
    Ok(Enumeration {
        modules: list,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcat::RadTable;
    use crate::par::Exec;
    use crate::quiver::parse_bound_quiver;

    fn alg(text: &str) -> Algebra {
        Algebra::new(&parse_bound_quiver(text).unwrap()).unwrap()
    }

    #[test]
    fn a2() {
        let e = enumerate_indecomposables(&alg("vertex 1 2\narrow a: 1 -> 2\n"), 8, 64).unwrap();
        assert!(e.complete);
        let dims: Vec<Vec<usize>> = e.modules.iter().map(|m| m.dims.clone()).collect();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn dual_numbers() {
        let e = enumerate_indecomposables(
            &alg("nilbound 2\nvertex v\narrow a: v -> v\nrelation a*a\n"),
            8,
            64,
        )
        .unwrap();
        assert!(e.complete);
        assert_eq!(e.modules.len(), 2);
    }

    #[test]
    fn kronecker_hits_cap() {
        let e = enumerate_indecomposables(
            &alg("vertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n"),
            2,
            64,
        )
        .unwrap();
        assert!(!e.complete);
    }

    #[test]
    fn line_quivers_give_intervals() {
        for n in 1..=4usize {
            let mut t = String::from("vertex");
            for i in 1..=n {
                t.push_str(&format!(" {i}"));
            }
            t.push('\n');
            for i in 1..n {
                t.push_str(&format!("arrow a{i}: {i} -> {}\n", i + 1));
            }
            let e = enumerate_indecomposables(&alg(&t), 16, 64).unwrap();
            assert!(e.complete);
            assert_eq!(e.modules.len(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn right_almost_split_over_a3_list() {
        let a = alg("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
        let e = enumerate_indecomposables(&a, 16, 64).unwrap();
        let t = RadTable::new(e.modules.clone(), Exec::default()).unwrap();
        for j in 0..t.len() {
            t.right_almost_split(&a, j).unwrap();
        }
    }
}
