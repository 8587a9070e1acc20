use fovea::covering::{Covering, LayeredMap, LayeredModule};
use fovea::modcat::{enumerate_indecomposables, hom_dim, hom_space, ModMap};
use fovea::quiver::{VoltageQuiver, Window};
use proptest::prelude::*;

const COVERS: [&str; 3] = [
    "nilbound 2\nvertex v\narrow a: v -> v deg 1\nrelation a*a\n",
    "nilbound 2\nvertex 1 2\narrow a: 1 -> 2 deg 0\narrow b: 2 -> 1 deg 1\nrelation a*b\nrelation b*a\n",
    "nilbound 3\nvertex 1 2\narrow a: 1 -> 2 deg 1\narrow b: 2 -> 1 deg 0\nrelation a*b*a\nrelation b*a*b\n",
];

fn cover(i: usize) -> Covering {
    Covering::new(VoltageQuiver::parse(COVERS[i]).unwrap()).unwrap()
}

fn pool(c: &Covering) -> Vec<LayeredModule> {
    let w = Window { lo: -2, hi: 2 };
    let e = enumerate_indecomposables(&*c.window_algebra(w).unwrap(), 8, 64).unwrap();
    e.modules
        .into_iter()
        .map(|module| c.trim(&LayeredModule { window: w, module }).unwrap())
        .collect()
}

fn combo(
    basis: &[ModMap],
    coeffs: &[i64],
    src: &fovea::modcat::Module,
    tgt: &fovea::modcat::Module,
) -> ModMap {
    let f = src.field();
    let cs: Vec<_> = basis
        .iter()
        .enumerate()
        .map(|(i, _)| f.from_i64(coeffs[i % coeffs.len()]))
        .collect();
    ModMap::linear_combination(basis, &cs, src, tgt)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn twisted_sums_agree(ci in 0..COVERS.len(), i in 0usize..64, j in 0usize..64, s in -3i64..=3) {
        let c = cover(ci);
        let p = pool(&c);
        let x = c.twist(&p[i % p.len()], s).unwrap();
        let y = p[j % p.len()].clone();
        let left: usize = c.twisted_hom_dims(&x, &y).unwrap().iter().map(|t| t.1).sum();
        let right_sum: usize = c
            .shift_range(&x, &y)
            .iter()
            .map(|&k| c.hom(&x, &c.twist(&y, -k).unwrap()).unwrap().1.len())
            .sum();
        let a_side = hom_dim(&c.push_down(&x), &c.push_down(&y)).unwrap();
        prop_assert_eq!(left, a_side);
        prop_assert_eq!(right_sum, a_side);
    }

    #[test]
    fn homs_vanish_outside_the_overlap(ci in 0..COVERS.len(), i in 0usize..64, j in 0usize..64, far in 1i64..=4) {
        let c = cover(ci);
        let p = pool(&c);
        let (x, y) = (&p[i % p.len()], &p[j % p.len()]);
        let ks = c.shift_range(x, y);
        let (lo, hi) = (ks[0], ks[ks.len() - 1]);
        for k in [lo - far, hi + far] {
            prop_assert_eq!(c.hom(&c.twist(x, k).unwrap(), y).unwrap().1.len(), 0);
        }
    }

    #[test]
    fn lift_then_push_down_is_identity(ci in 0..COVERS.len(), i in 0usize..64, j in 0usize..64,
                                       coeffs in prop::collection::vec(-3i64..=3, 1..6)) {
        let c = cover(ci);
        let p = pool(&c);
        let (x, y) = (&p[i % p.len()], &p[j % p.len()]);
        let (fx, fy) = (c.push_down(x), c.push_down(y));
        let basis = hom_space(&fx, &fy).unwrap();
        let alpha = combo(&basis, &coeffs, &fx, &fy);
        let parts = c.lift_morphism(x, y, &alpha).unwrap();
        let sum = parts.iter().fold(ModMap::zero(&fx, &fy), |acc, (_, lm)| acc.add(&c.push_down_map(lm)));
        prop_assert_eq!(sum, alpha);
    }

    #[test]
    fn push_down_adds_ranks(ci in 0..COVERS.len(), i in 0usize..64, j in 0usize..64,
                            coeffs in prop::collection::vec(-3i64..=3, 1..6)) {
        let c = cover(ci);
        let p = pool(&c);
        let (x, y) = (&p[i % p.len()], &p[j % p.len()]);
        let (w, basis) = c.hom(x, y).unwrap();
        let (xa, ya) = (c.reindex(x, w).unwrap(), c.reindex(y, w).unwrap());
        let f = combo(&basis, &coeffs, &xa.module, &ya.module);
        let pf = c.push_down_map(&LayeredMap { window: w, map: f.clone() });
        for v in 0..c.vq.n_base() {
            let lifted: usize = w.layers().map(|n| f.comps[c.vq.lifted_index(w, v, n)].rank()).sum();
            prop_assert_eq!(pf.comps[v].rank(), lifted);
        }
    }

    #[test]
    fn push_down_forgets_twists(ci in 0..COVERS.len(), i in 0usize..64, k in -5i64..=5) {
        let c = cover(ci);
        let p = pool(&c);
        let x = &p[i % p.len()];
        prop_assert_eq!(c.push_down(&c.twist(x, k).unwrap()), c.push_down(x));
    }
}
