//! Number fields `Q[x]/(f)` with exact rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// `Q(θ)` with `θ` a root of the monic polynomial `min_poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    /// `c_0, …, c_{d-1}, 1`.
    min_poly: Vec<Q>,
}

/// Coordinates in the power basis `1, θ, …, θ^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coeffs: Vec<Q>,
}

pub fn parse_rational(s: &str) -> Result<Q> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("not a rational number: {:?}", s)))
}

pub fn parse_rationals(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

impl NumberField {
    pub fn new(min_poly: Vec<Q>) -> Result<Self> {
        if min_poly.len() < 2 || !min_poly.last().unwrap().is_one() {
            return Err(Error::Invalid(
                "minimal polynomial must be monic of degree at least 1".into(),
            ));
        }
        Ok(NumberField { min_poly })
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[Q] {
        &self.min_poly
    }

    pub fn element(&self, coeffs: Vec<Q>) -> Result<FieldElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: coeffs.len(),
            });
        }
        Ok(FieldElement { coeffs })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![Q::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Q::one())
    }

    pub fn from_rational(&self, c: Q) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    /// `θ` itself.
    pub fn generator(&self) -> FieldElement {
        let mut e = self.zero();
        if self.degree() > 1 {
            e.coeffs[1] = Q::one();
        } else {
            e.coeffs[0] = -self.min_poly[0].clone();
        }
        e
    }

    /// Reduces an arbitrary polynomial modulo `min_poly`.
    pub fn reduce(&self, mut p: Vec<Q>) -> FieldElement {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (i, c) in self.min_poly[..d].iter().enumerate() {
                p[shift + i] -= &top * c;
            }
        }
        p.resize(d, Q::zero());
        FieldElement { coeffs: p }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, c: &Q, a: &FieldElement) -> FieldElement {
        FieldElement {
            coeffs: a.coeffs.iter().map(|x| c * x).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let d = self.degree();
        let mut p = vec![Q::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        self.reduce(p)
    }

    pub fn pow(&self, a: &FieldElement, k: usize) -> FieldElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `p(a)` for a polynomial with rational coefficients (low degree first).
    pub fn eval(&self, p: &[Q], a: &FieldElement) -> FieldElement {
        p.iter().rev().fold(self.zero(), |acc, c| {
            let mut r = self.mul(&acc, a);
            r.coeffs[0] += c;
            r
        })
    }

    /// Matrix of multiplication by `a` on the power basis (columns are the
    /// images of `θ^j`).
    pub fn multiplication_matrix(&self, a: &FieldElement) -> Vec<Vec<Q>> {
        let d = self.degree();
        let cols: Vec<FieldElement> = (0..d)
            .map(|j| {
                let mut e = self.zero();
                e.coeffs[j] = Q::one();
                self.mul(a, &e)
            })
            .collect();
        (0..d)
            .map(|i| cols.iter().map(|c| c.coeffs[i].clone()).collect())
            .collect()
    }

    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement> {
        let d = self.degree();
        let m = self.multiplication_matrix(a);
        let mut rows = m;
        for (i, row) in rows.iter_mut().enumerate() {
            row.push(if i == 0 { Q::one() } else { Q::zero() });
        }
        let (r, pivots) = linalg::rref(&rows);
        if pivots.len() != d || pivots.iter().any(|&p| p >= d) {
            return Err(Error::Invalid("element is not invertible".into()));
        }
        Ok(FieldElement {
            coeffs: r.iter().map(|row| row[d].clone()).collect(),
        })
    }

    /// Matrix (on the power basis) of the ring endomorphism `θ ↦ image`.
    pub fn automorphism_matrix(&self, image: &FieldElement) -> Vec<Vec<Q>> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.one();
        for _ in 0..d {
            cols.push(cur.clone());
            cur = self.mul(&cur, image);
        }
        (0..d)
            .map(|i| cols.iter().map(|c| c.coeffs[i].clone()).collect())
            .collect()
    }

    /// Whether the minimal polynomial is irreducible over `Q`.
    pub fn is_irreducible(&self) -> Result<bool> {
        is_irreducible(&self.min_poly)
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

fn poly_rem(mut a: Vec<Q>, b: &[Q]) -> Vec<Q> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let top = a.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let f = top / &lead;
        let shift = a.len() - db;
        for (i, c) in b[..db].iter().enumerate() {
            a[shift + i] -= &f * c;
        }
    }
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn poly_eval_int(p: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

const KRONECKER_LIMIT: u64 = 2_000_000;

fn divisors(n: &BigInt) -> Option<Vec<i128>> {
    let n = n.abs().to_i128()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1i128;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            out.push(-i);
            if i * i != n {
                out.push(n / i);
                out.push(-(n / i));
            }
        }
        i += 1;
    }
    Some(out)
}

/// Kronecker's method on the integral monic rescaling of `f`.
pub fn is_irreducible(f: &[Q]) -> Result<bool> {
    let d = f.len() - 1;
    if d <= 1 {
        return Ok(d == 1);
    }
    let den = f
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // F(x) = den^d f(x/den) is monic with integer coefficients
    let big: Vec<BigInt> = f
        .iter()
        .enumerate()
        .map(|(i, c)| (c * BigRational::from_integer(num_traits::pow(den.clone(), d - i))).to_integer())
        .collect();
    let bigq: Vec<Q> = big.iter().cloned().map(BigRational::from_integer).collect();
    let mut points: Vec<(i64, Vec<i128>)> = Vec::new();
    for a in (0i64..61).map(|t| if t % 2 == 1 { (t + 1) / 2 } else { -t / 2 }) {
        let v = poly_eval_int(&big, a);
        if v.is_zero() {
            return Ok(false);
        }
        if let Some(ds) = divisors(&v) {
            points.push((a, ds));
        }
    }
    points.sort_by_key(|(_, ds)| ds.len());
    for k in 1..=d / 2 {
        if points.len() < k {
            return Err(Error::Unsupported("too few evaluation points for irreducibility test".into()));
        }
        let chosen = &points[..k];
        let combos: u64 = chosen.iter().map(|(_, ds)| ds.len() as u64).product();
        if combos > KRONECKER_LIMIT {
            return Err(Error::Unsupported(format!(
                "irreducibility test needs {} candidate factors",
                combos
            )));
        }
        let xs: Vec<Q> = chosen.iter().map(|(a, _)| linalg::q(*a)).collect();
        let mut idx = vec![0usize; k];
        loop {
            // monic g of degree k with g(x_i) = chosen value
            let ys: Vec<Q> = (0..k)
                .map(|i| {
                    let v = BigRational::from_integer(BigInt::from(chosen[i].1[idx[i]]));
                    v - num_traits::pow(xs[i].clone(), k)
                })
                .collect();
            let mut g = lagrange(&xs, &ys);
            g.resize(k, Q::zero());
            if g.iter().all(|c| c.is_integer()) {
                g.push(Q::one());
                if poly_rem(bigq.clone(), &g).is_empty() {
                    return Ok(false);
                }
            }
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                idx[i] += 1;
                if idx[i] < chosen[i].1.len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    Ok(true)
}

/// Interpolating polynomial of degree `< xs.len()` (low degree first).
fn lagrange(xs: &[Q], ys: &[Q]) -> Vec<Q> {
    let k = xs.len();
    let mut out = vec![Q::zero(); k];
    for i in 0..k {
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (t, c) in basis.iter().enumerate() {
                next[t + 1] += c;
                next[t] -= c * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let f = &ys[i] / denom;
        for (t, c) in basis.iter().enumerate() {
            out[t] += c * &f;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn poly(c: &[i64]) -> Vec<Q> {
        c.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn arithmetic_in_gaussian_numbers() {
        let k = NumberField::new(poly(&[1, 0, 1])).unwrap();
        let i = k.generator();
        assert_eq!(k.mul(&i, &i), k.from_rational(q(-1)));
        let a = k.add(&k.one(), &i);
        let inv = k.inverse(&a).unwrap();
        assert_eq!(k.mul(&a, &inv), k.one());
        assert!(k.inverse(&k.zero()).is_err());
    }

    #[test]
    fn conjugation_matrix() {
        let k = NumberField::new(poly(&[-2, 0, 1])).unwrap();
        let m = k.automorphism_matrix(&k.scale(&q(-1), &k.generator()));
        assert_eq!(m, vec![poly(&[1, 0]), poly(&[0, -1])]);
    }

    #[test]
    fn irreducibility() {
        assert!(!is_irreducible(&poly(&[-1, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(&[-2, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(&[-2, 0, 0, 1])).unwrap());
        // (x² + 1)(x² + 2)
        assert!(!is_irreducible(&poly(&[2, 0, 3, 0, 1])).unwrap());
        assert!(is_irreducible(&poly(&[1, 0, -10, 0, 1])).unwrap());
        // (x² + x + 1)(x³ + 2)
        assert!(!is_irreducible(&poly(&[2, 2, 2, 1, 1, 1])).unwrap());
        let half = vec![q(1), BigRational::new(1.into(), 2.into()), q(1)];
        assert!(is_irreducible(&half).unwrap());
    }
}
