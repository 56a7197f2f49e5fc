//! The cyclotomic field Q(xi) with xi a primitive k-th root of unity:
//! elements are rational-coefficient residues mod the k-th cyclotomic
//! polynomial. For k = 2 this degenerates to the rationals.

use crate::numerics::UniPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The k-th cyclotomic polynomial, monic with integer coefficients,
/// computed by dividing x^k - 1 by the product of the cyclotomic
/// polynomials of the proper divisors of k.
pub fn cyclotomic_poly(k: u32) -> UniPoly {
    assert!(k >= 1);
    if k == 1 {
        return UniPoly::from_coeffs(vec![BigInt::from(-1), BigInt::one()]);
    }
    // x^k - 1
    let mut coeffs = vec![BigInt::zero(); k as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[k as usize] = BigInt::one();
    let mut remainder = UniPoly::from_coeffs(coeffs);
    for j in 1..k {
        if k % j == 0 {
            remainder = divide_by_monic(&remainder, &cyclotomic_poly(j));
        }
    }
    remainder
}

// Exact quotient by a monic divisor over the integers; the division is
// exact for every call site here.
fn divide_by_monic(num: &UniPoly, div: &UniPoly) -> UniPoly {
    let dd = div.degree().expect("divisor is nonzero");
    assert!(div.coeff(dd).is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.coeffs().to_vec();
    let nd = num.degree().expect("numerator is nonzero");
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for lead in (dd..=nd).rev() {
        let c = rem[lead].clone();
        if c.is_zero() {
            continue;
        }
        quot[lead - dd] = c.clone();
        for j in 0..=dd {
            let sub = &c * div.coeff(j);
            rem[lead - dd + j] -= sub;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    UniPoly::from_coeffs(quot)
}

/// An element of Q(xi): coefficients of 1, x, ..., x^{phi(k)-1} with x the
/// class of xi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycNumber {
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational part when the element is rational, else `None`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

/// Field context: arithmetic mod the k-th cyclotomic polynomial.
#[derive(Debug, Clone)]
pub struct CycField {
    k: u32,
    modulus: Vec<BigRational>,
    degree: usize,
}

impl CycField {
    pub fn new(k: u32) -> Self {
        assert!(k >= 1);
        let phi = cyclotomic_poly(k);
        let degree = phi.degree().unwrap();
        let modulus = phi.coeffs().iter().map(|c| BigRational::from(c.clone())).collect();
        CycField { k, modulus, degree }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// phi(k), the degree of the extension.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber { coeffs: vec![BigRational::zero(); self.degree] }
    }

    pub fn one(&self) -> CycNumber {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, r: BigRational) -> CycNumber {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        coeffs[0] = r;
        CycNumber { coeffs }
    }

    pub fn from_int(&self, v: i64) -> CycNumber {
        self.from_rational(BigRational::from(BigInt::from(v)))
    }

    pub fn from_bigint(&self, v: BigInt) -> CycNumber {
        self.from_rational(BigRational::from(v))
    }

    /// Reduce an arbitrary coefficient vector mod the cyclotomic polynomial.
    fn reduce(&self, mut poly: Vec<BigRational>) -> CycNumber {
        while poly.len() > self.degree {
            let lead = poly.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let offset = poly.len() - self.degree;
            for j in 0..self.degree {
                let sub = &lead * &self.modulus[j];
                poly[offset + j] -= sub;
            }
        }
        poly.resize(self.degree, BigRational::zero());
        CycNumber { coeffs: poly }
    }

    /// xi^e for any integer exponent, via e mod k.
    pub fn zeta_pow(&self, e: i64) -> CycNumber {
        let e = e.rem_euclid(self.k as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        self.reduce(poly)
    }

    pub fn add(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycNumber { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        CycNumber { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn neg(&self, a: &CycNumber) -> CycNumber {
        CycNumber { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, a: &CycNumber, b: &CycNumber) -> CycNumber {
        let mut conv = vec![BigRational::zero(); 2 * self.degree];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        self.reduce(conv)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// polynomials; defined for every nonzero element since the cyclotomic
    /// polynomial is irreducible over Q.
    pub fn inv(&self, a: &CycNumber) -> Option<CycNumber> {
        if a.is_zero() {
            return None;
        }
        // Bezout: u*a + v*modulus = gcd (a unit); then inverse = u/gcd.
        let mut r0: Vec<BigRational> = self.modulus.clone();
        let mut r1: Vec<BigRational> = a.coeffs.clone();
        trim(&mut r0);
        trim(&mut r1);
        let mut u0: Vec<BigRational> = vec![];
        let mut u1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let u_next = poly_sub(&u0, &poly_mul(&q, &u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u_next;
        }
        // r0 is a nonzero constant gcd
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be coprime to nonzero residues");
        let g = r0[0].clone();
        let inv_coeffs: Vec<BigRational> = u0.iter().map(|c| c / &g).collect();
        Some(self.reduce(inv_coeffs))
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(num: &[BigRational], div: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!div.is_empty());
    let mut rem = num.to_vec();
    if rem.len() < div.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - div.len() + 1];
    let lead_inv = div.last().unwrap().recip();
    for top in (div.len() - 1..rem.len()).rev() {
        let factor = &rem[top] * &lead_inv;
        if factor.is_zero() {
            continue;
        }
        let shift = top + 1 - div.len();
        quot[shift] = factor.clone();
        for (j, dc) in div.iter().enumerate() {
            let sub = &factor * dc;
            rem[shift + j] -= sub;
        }
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}
