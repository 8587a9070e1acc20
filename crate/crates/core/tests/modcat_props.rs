use std::sync::Arc;

use fovea::modcat::{
    decompose, direct_sum, enumerate_indecomposables, factors_through, hom_dim, hom_space,
    radical_hom, right_almost_split, Algebra, ModMap, Module,
};
use fovea::quiver::parse_bound_quiver;
use fovea::Matrix;
use proptest::prelude::*;

const FIXTURES: [&str; 5] = [
    "vertex 1 2\narrow a: 1 -> 2\n",
    "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n",
    "nilbound 2\nvertex v\narrow x: v -> v\nrelation x*x\n",
    "nilbound 2\nvertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a*b\nrelation b*a\n",
    "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 2\n",
];

fn alg(text: &str) -> Algebra {
    Algebra::new(&parse_bound_quiver(text).unwrap()).unwrap()
}

fn a_n(n: usize) -> Algebra {
    let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut t = format!("vertex {}\n", vs.join(" "));
    for i in 1..n {
        t.push_str(&format!("arrow a{i}: {i} -> {}\n", i + 1));
    }
    alg(&t)
}

/// A random representation of the linear A_3 quiver.
fn random_a3() -> impl Strategy<Value = Module> {
    (
        prop::collection::vec(0usize..=2, 3),
        prop::collection::vec(0i64..5, 8),
    )
        .prop_map(|(dims, vals)| {
            let a = a_n(3);
            let f = a.quiver.field;
            let mut it = vals.into_iter().cycle();
            let mats = a
                .quiver
                .arrows
                .iter()
                .map(|arr| {
                    let (r, c) = (dims[arr.source], dims[arr.target]);
                    Matrix::from_data(
                        f,
                        r,
                        c,
                        (0..r * c).map(|_| f.from_i64(it.next().unwrap())).collect(),
                    )
                })
                .collect();
            Module::new(a.quiver.clone(), dims, mats).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_is_additive_over_decompositions(m in random_a3(), n in random_a3()) {
        let seed = fovea::modcat::DEFAULT_SEED;
        let dm = decompose(&m, seed).unwrap();
        let dn = decompose(&n, seed).unwrap();
        let mut sum = 0;
        for x in &dm.summands {
            for y in &dn.summands {
                sum += hom_dim(&x.module, &y.module).unwrap();
            }
        }
        prop_assert_eq!(hom_dim(&m, &n).unwrap(), sum);
        let parts: Vec<&Module> = dm.summands.iter().map(|s| &s.module).collect();
        let rebuilt = direct_sum(Arc::clone(&m.base), &parts).0;
        prop_assert_eq!(rebuilt.dims, m.dims.clone());
    }

    #[test]
    fn hom_basis_is_natural(m in random_a3(), n in random_a3()) {
        for h in hom_space(&m, &n).unwrap() {
            prop_assert!(h.is_natural(&m, &n));
        }
    }

    #[test]
    fn almost_split_factorization(fx in 0..FIXTURES.len(), pick in 0usize..64) {
        let a = alg(FIXTURES[fx]);
        let e = enumerate_indecomposables(&a, 8, 64).unwrap();
        prop_assert!(e.complete);
        let list = e.modules;
        let n = &list[pick % list.len()];
        let ras = right_almost_split(&a, n, &list).unwrap();
        for x in &list {
            let basis = hom_space(x, n).unwrap();
            let rad = radical_hom(x, n).unwrap();
            for c in rad.basis() {
                let h = ModMap::linear_combination(&basis, c, x, n);
                prop_assert!(factors_through(x, &ras.middle, &ras.map, &h).unwrap());
            }
        }
        let id = ModMap::identity(n);
        prop_assert!(!factors_through(n, &ras.middle, &ras.map, &id).unwrap());
    }
}

#[test]
fn line_quivers_have_interval_many_indecomposables() {
    for n in 1..=5 {
        let e = enumerate_indecomposables(&a_n(n), 8, 64).unwrap();
        assert!(e.complete);
        assert_eq!(e.modules.len(), n * (n + 1) / 2, "A_{n}");
    }
}

#[test]
fn a2_sequence_is_almost_split() {
    let a = alg(FIXTURES[0]);
    let list = enumerate_indecomposables(&a, 8, 64).unwrap().modules;
    let ras = right_almost_split(&a, &a.simple(1), &list).unwrap();
    assert_eq!(ras.middle.dims, a.projective(1).dims);
    assert!(fovea::modcat::are_isomorphic(&ras.middle, &a.projective(1), 0).unwrap());
    let (k, _) = ras.middle.submodule(&kernel_gens(&ras.map, &ras.middle));
    assert!(fovea::modcat::are_isomorphic(&k, &a.simple(0), 0).unwrap());
}

fn kernel_gens(g: &ModMap, e: &Module) -> Vec<Matrix> {
    let f = e.field();
    (0..e.dims.len())
        .map(|z| {
            let ker = g.comps[z].kernel_basis();
            Matrix::from_columns(f, e.dims[z], &ker)
        })
        .collect()
}
