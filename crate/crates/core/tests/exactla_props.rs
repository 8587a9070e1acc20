use std::collections::HashSet;

use fovea::{Field, Matrix};
use proptest::prelude::*;

fn entries(
    max_rows: usize,
    max_cols: usize,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, c)| (Just(r), Just(c), prop::collection::vec(lo..=hi, r * c)))
}

fn build(field: Field, r: usize, c: usize, v: &[i64]) -> Matrix {
    let rows: Vec<&[i64]> = v.chunks(c).collect();
    let m = Matrix::from_i64(field, &rows);
    assert_eq!((m.rows(), m.cols()), (r, c));
    m
}

/// Rank over GF(2) from the size of the image, by enumerating every input.
fn brute_rank_gf2(r: usize, c: usize, v: &[i64]) -> usize {
    let mut image = HashSet::new();
    for mask in 0u32..(1 << c) {
        let out: Vec<i64> = (0..r)
            .map(|i| {
                (0..c)
                    .filter(|&j| mask >> j & 1 == 1)
                    .map(|j| v[i * c + j].rem_euclid(2))
                    .sum::<i64>()
                    % 2
            })
            .collect();
        image.insert(out);
    }
    image.len().trailing_zeros() as usize
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::prime(7).unwrap()),
        Just(Field::prime(32749).unwrap()),
        Just(Field::Rational)
    ]
}

proptest! {
    #[test]
    fn rref_is_idempotent(f in fields(), (r, c, v) in entries(6, 6, -4, 4)) {
        let m = build(f, r, c, &v);
        let once = m.rref();
        prop_assert_eq!(once.reduced.rref(), once.clone());
    }

    #[test]
    fn rank_of_transpose(f in fields(), (r, c, v) in entries(6, 6, -4, 4)) {
        let m = build(f, r, c, &v);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_are_independent_solutions(f in fields(), (r, c, v) in entries(5, 7, -3, 3)) {
        let m = build(f, r, c, &v);
        let ker = m.kernel_basis();
        for k in &ker {
            prop_assert!(m.mul_vec(k).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(ker.len() + m.rank(), c);
        if !ker.is_empty() {
            prop_assert_eq!(Matrix::from_rows(f, c, ker.clone()).rank(), ker.len());
        }
    }

    #[test]
    fn rank_matches_image_count(( r, c, v) in entries(5, 6, 0, 1)) {
        let m = build(Field::prime(2).unwrap(), r, c, &v);
        prop_assert_eq!(m.rank(), brute_rank_gf2(r, c, &v));
    }

    #[test]
    fn solve_round_trip(f in fields(), (r, c, v) in entries(5, 5, -3, 3), x in prop::collection::vec(-3i64..=3, 5)) {
        let m = build(f, r, c, &v);
        let x: Vec<_> = x[..c].iter().map(|&k| f.from_i64(k)).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y), b);
    }
}
