//! Univariate polynomials, used to split modules along the primary
//! decomposition of an endomorphism.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::field::{Field, Scalar};
use super::matrix::Matrix;

/// Coefficients from the constant term upwards, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Poly::new(field, vec![field.one()])
    }

    /// `x + c`.
    pub fn linear(field: Field, c: Scalar) -> Self {
        Poly::new(field, vec![c, field.one()])
    }

    pub fn x(field: Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn lead(&self) -> &Scalar {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv();
        Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let neg = Poly::new(self.field, o.coeffs.iter().map(|c| -c).collect());
        self.add(&neg)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if r.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let inv = d.lead().inv();
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dc);
            }
            q[i] = c;
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Poly::new(self.field, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Poly) -> Poly {
        let mut r = Poly::one(self.field).rem(m);
        let b = self.rem(m);
        for i in (0..e.bits()).rev() {
            r = r.mul(&r).rem(m);
            if e.bit(i) {
                r = r.mul(&b).rem(m);
            }
        }
        r
    }

    /// Evaluates at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a).add(&Matrix::identity(self.field, n).scale(c));
        }
        acc
    }

    /// Squarefree part `f / gcd(f, f')`, valid in characteristic zero or
    /// when the characteristic exceeds the degree.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

/// Minimal polynomial of a square matrix, by linear dependence of powers.
pub fn minimal_polynomial(a: &Matrix) -> Poly {
    let f = a.field();
    let n = a.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(f, n).into_data()];
    let mut cur = Matrix::identity(f, n);
    loop {
        cur = cur.mul(a);
        let target = cur.data().to_vec();
        let basis = Matrix::from_columns(f, n * n, &powers);
        if let Some(x) = basis.solve(&target) {
            let mut c: Vec<Scalar> = x.iter().map(|v| -v).collect();
            c.push(f.one());
            return Poly::new(f, c);
        }
        powers.push(target);
    }
}

/// Finds a proper monic factor of a squarefree polynomial, if one can be
/// found in the ground field machinery: distinct/equal-degree splitting over
/// GF(p), rational roots over Q.
pub fn proper_factor<R: Rng>(r: &Poly, rng: &mut R) -> Option<Poly> {
    let deg = r.degree()?;
    if deg < 2 {
        return None;
    }
    match r.field {
        Field::Prime(p) => prime_field_factor(r, p, rng),
        Field::Rational => rational_root(r).map(|root| Poly::linear(Field::Rational, -root)),
    }
}

fn prime_field_factor<R: Rng>(r: &Poly, p: u64, rng: &mut R) -> Option<Poly> {
    let f = r.field;
    let deg = r.degree()?;
    let x = Poly::x(f);
    let pb = BigUint::from(p);
    let mut h = x.clone();
    let mut rest = r.monic();
    for d in 1..=deg {
        if rest.degree()? < 2 * d {
            break;
        }
        h = h.pow_mod(&pb, r);
        let g = rest.gcd(&h.sub(&x));
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            return Some(g);
        }
        if gd == deg {
            return equal_degree_split(r, d, &pb, rng);
        }
        if gd > 0 {
            rest = rest.div_rem(&g).0;
        }
    }
    None
}

fn equal_degree_split<R: Rng>(r: &Poly, d: usize, p: &BigUint, rng: &mut R) -> Option<Poly> {
    let f = r.field;
    let deg = r.degree()?;
    if deg == d {
        return None;
    }
    let Field::Prime(pu) = f else { return None };
    let e = (p.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    for _ in 0..64 {
        let a = Poly::new(
            f,
            (0..deg)
                .map(|_| f.from_i64(rng.gen_range(0..pu) as i64))
                .collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = r.gcd(&a);
        if g.degree().is_some_and(|gd| gd > 0 && gd < deg) {
            return Some(g);
        }
        let t = a.pow_mod(&e, r).sub(&Poly::one(f));
        let g = r.gcd(&t);
        if g.degree().is_some_and(|gd| gd > 0 && gd < deg) {
            return Some(g);
        }
    }
    None
}

const DIVISOR_CAP: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_CAP {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

fn rational_root(r: &Poly) -> Option<Scalar> {
    let qs: Vec<_> = r
        .coeffs
        .iter()
        .map(|c| c.as_rational().cloned())
        .collect::<Option<_>>()?;
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * &lcm).to_integer()).collect();
    if ints[0].is_zero() {
        return Some(Field::Rational.zero());
    }
    let num = divisors(&ints[0])?;
    let den = divisors(ints.last()?)?;
    let f = Field::Rational;
    for &a in &num {
        for &b in &den {
            for sign in [1i64, -1] {
                let cand = f.parse_scalar(&format!("{}/{}", sign * a as i64, b)).ok()?;
                let val = r
                    .coeffs
                    .iter()
                    .rev()
                    .fold(f.zero(), |acc, c| &(&acc * &cand) + c);
                if val.is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let f = Field::default();
        let a = Matrix::from_i64(f, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 2]]);
        let m = minimal_polynomial(&a);
        assert_eq!(m.degree(), Some(2));
        assert!(m.eval_matrix(&a).is_zero());
    }

    #[test]
    fn splits_product_of_linears_mod_p() {
        let f = Field::default();
        let p = Poly::linear(f, f.from_i64(-2)).mul(&Poly::linear(f, f.from_i64(-5)));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = proper_factor(&p, &mut rng).unwrap();
        assert_eq!(g.degree(), Some(1));
        assert!(p.rem(&g).is_zero());
    }

    #[test]
    fn irreducible_quadratic_does_not_split() {
        // x^2 + 1 is irreducible mod 7
        let f = Field::prime(7).unwrap();
        let p = Poly::new(f, vec![f.one(), f.zero(), f.one()]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(proper_factor(&p, &mut rng).is_none());
    }

    #[test]
    fn rational_roots() {
        let f = Field::Rational;
        let p = Poly::new(f, vec![f.from_i64(-3), f.from_i64(1), f.from_i64(2)]);
        // 2x^2 + x - 3 = (2x + 3)(x - 1)
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = proper_factor(&p, &mut rng).unwrap();
        assert!(p.rem(&g).is_zero());
    }
}
