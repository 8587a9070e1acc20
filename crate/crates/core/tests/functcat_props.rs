use fovea::covering::{Covering, LayeredMap, LayeredModule};
use fovea::exactla::Matrix;
use fovea::functcat::{
    fp_hom, psi_evaluate, simple_functor_cover, twisted_eval_sum, FpFunctor, LayeredFunctor,
};
use fovea::modcat::{
    direct_sum, enumerate_indecomposables, hom_dim, hom_space, is_indecomposable, Algebra, ModMap,
    Module,
};
use fovea::quiver::{parse_bound_quiver, VoltageQuiver, Window};
use proptest::prelude::*;

const COVERS: [&str; 2] = [
    "nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n",
    "nilbound 2\nvertex 1 2\narrow a: 1 -> 2 deg 0\narrow b: 2 -> 1 deg 1\nrelation a*b\nrelation b*a\n",
];

fn cover(i: usize) -> Covering {
    Covering::new(VoltageQuiver::parse(COVERS[i]).unwrap()).unwrap()
}

fn pool(c: &Covering) -> Vec<LayeredModule> {
    let w = Window { lo: -1, hi: 1 };
    let e = enumerate_indecomposables(&*c.window_algebra(w).unwrap(), 8, 64).unwrap();
    e.modules
        .into_iter()
        .map(|module| c.trim(&LayeredModule { window: w, module }).unwrap())
        .collect()
}

fn combo(basis: &[ModMap], coeffs: &[i64], src: &Module, tgt: &Module) -> ModMap {
    let f = src.field();
    let cs: Vec<_> = (0..basis.len())
        .map(|i| f.from_i64(coeffs[i % coeffs.len()]))
        .collect();
    ModMap::linear_combination(basis, &cs, src, tgt)
}

/// `Coker Hom(-, f)` for a random `f: X -> Y` between pool modules.
fn random_functor(
    c: &Covering,
    p: &[LayeredModule],
    i: usize,
    j: usize,
    coeffs: &[i64],
) -> LayeredFunctor {
    let (x, y) = (&p[i % p.len()], &p[j % p.len()]);
    let (w, basis) = c.hom(x, y).unwrap();
    let (xa, ya) = (c.reindex(x, w).unwrap(), c.reindex(y, w).unwrap());
    let f = combo(&basis, coeffs, &xa.module, &ya.module);
    LayeredFunctor::new(c, &xa, &ya, &LayeredMap { window: w, map: f }).unwrap()
}

/// Rank of `Hom(Z, f): Hom(Z, M) -> Hom(Z, N)`.
fn induced_rank(z: &Module, m: &Module, f: &ModMap) -> usize {
    let src = hom_space(z, m).unwrap();
    if src.is_empty() {
        return 0;
    }
    let cols: Vec<_> = src.iter().map(|u| u.then(f).to_vector()).collect();
    Matrix::from_columns(z.field(), cols[0].len(), &cols).rank()
}

fn base_list(c: &Covering) -> Vec<Module> {
    enumerate_indecomposables(&c.base, 8, 64).unwrap().modules
}

fn sum_functor(t1: &FpFunctor, t2: &FpFunctor) -> FpFunctor {
    let base = t1.target.base.clone();
    let s = direct_sum(base.clone(), &[&t1.source, &t2.source]).0;
    let t = direct_sum(base, &[&t1.target, &t2.target]).0;
    let f = t1.field();
    let comps = (0..s.dims.len())
        .map(|z| Matrix::block_diag(f, &[t1.map.comps[z].clone(), t2.map.comps[z].clone()]))
        .collect();
    FpFunctor::new(s, t, ModMap { comps }).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluation_identity(ci in 0..COVERS.len(), i in 0usize..32, j in 0usize..32, k in 0usize..32, s in -2i64..=2,
                           coeffs in prop::collection::vec(-2i64..=2, 1..4)) {
        let c = cover(ci);
        let p = pool(&c);
        let t = random_functor(&c, &p, i, j, &coeffs);
        let x = c.twist(&p[k % p.len()], s).unwrap();
        prop_assert_eq!(psi_evaluate(&c, &t.phi(&c), &x).unwrap(), twisted_eval_sum(&c, &t, &x).unwrap());
    }

    #[test]
    fn phi_is_the_pushed_cokernel(ci in 0..COVERS.len(), i in 0usize..32, j in 0usize..32,
                                  coeffs in prop::collection::vec(-2i64..=2, 1..4)) {
        let c = cover(ci);
        let p = pool(&c);
        let t = random_functor(&c, &p, i, j, &coeffs);
        let u = t.phi(&c);
        for z in base_list(&c) {
            let whole = hom_dim(&z, &u.target).unwrap();
            prop_assert_eq!(u.eval_dim(&z).unwrap(), whole - induced_rank(&z, &u.source, &u.map));
        }
    }

    #[test]
    fn evaluation_support_is_bounded(ci in 0..COVERS.len(), i in 0usize..32, j in 0usize..32, k in 0usize..32,
                                     coeffs in prop::collection::vec(-2i64..=2, 1..4)) {
        let c = cover(ci);
        let p = pool(&c);
        let t = random_functor(&c, &p, i, j, &coeffs);
        let x = &p[k % p.len()];
        let range = c.shift_range(x, &t.target);
        for s in -6i64..=6 {
            if t.evaluate(&c, &c.twist(x, s).unwrap()).unwrap() != 0 {
                prop_assert!(range.contains(&s), "shift {} outside {:?}", s, range);
            }
        }
    }

    #[test]
    fn proper_monos_stay_proper(ci in 0..COVERS.len(), i in 0usize..32) {
        let c = cover(ci);
        let p = pool(&c);
        let n = &p[i % p.len()];
        let (r, inc) = n.module.radical();
        prop_assume!(!r.is_zero());
        let (fr, fnn) = (c.push_down(&LayeredModule { window: n.window, module: r.clone() }), c.push_down(n));
        let finc = c.push_down_map(&LayeredMap { window: n.window, map: inc });
        for z in base_list(&c) {
            prop_assert_eq!(induced_rank(&z, &fr, &finc), hom_dim(&z, &fr).unwrap());
        }
        prop_assert!(induced_rank(&fnn, &fr, &finc) < hom_dim(&fnn, &fnn).unwrap());
    }

    #[test]
    fn simple_functors_push_to_indicators(ci in 0..COVERS.len(), i in 0usize..32) {
        let c = cover(ci);
        let p = pool(&c);
        let n = &p[i % p.len()];
        let s = simple_functor_cover(&c, n).unwrap();
        let list = base_list(&c);
        let fnn = c.push_down(n);
        let prof = s.phi(&c).profile(&list).unwrap();
        for (m, d) in list.iter().zip(prof) {
            let hit = m.dims == fnn.dims && fovea::modcat::are_isomorphic(m, &fnn, 0).unwrap();
            prop_assert_eq!(d, usize::from(hit));
        }
    }
}

fn a3() -> Algebra {
    Algebra::new(&parse_bound_quiver("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap())
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn yoneda(i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let a = a3();
        let list = enumerate_indecomposables(&a, 8, 64).unwrap().modules;
        let m = direct_sum(a.quiver.clone(), &[&list[i], &list[k]]).0;
        let n = &list[j];
        let h = fp_hom(&FpFunctor::representable(&m), &FpFunctor::representable(n)).unwrap().0;
        prop_assert_eq!(h, hom_dim(&m, n).unwrap());
    }

    #[test]
    fn length_adds_on_sums(i in 0usize..6, j in 0usize..6, k in 0usize..6, l in 0usize..6) {
        let a = a3();
        let list = enumerate_indecomposables(&a, 8, 64).unwrap().modules;
        let make = |x: usize, y: usize| {
            let (m, n) = (&list[x], &list[y]);
            let b = hom_space(m, n).unwrap();
            let f = b.iter().fold(ModMap::zero(m, n), |acc, h| acc.add(h));
            FpFunctor::new(m.clone(), n.clone(), f).unwrap()
        };
        let (t1, t2) = (make(i, j), make(k, l));
        let total = sum_functor(&t1, &t2).length(&list, true).unwrap().length;
        let parts = t1.length(&list, true).unwrap().length + t2.length(&list, true).unwrap().length;
        prop_assert_eq!(total, parts);
        prop_assert!(is_indecomposable(&list[i], 0).unwrap());
    }
}
