//! Arbitrary-precision combinatorial primitives and univariate integer
//! polynomials shared by every other module.
//!
//! All arithmetic is exact. Binomials outside the usual range return zero
//! instead of erroring, so summation loops can run over the natural index
//! ranges and let out-of-range terms vanish.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::RwLock;

// Pascal rows, row a holding C(a,0..=a/2); the upper half is read through
// the symmetry C(a,b) = C(a,a-b). Concurrent readers, serialized fills.
static PASCAL: Lazy<RwLock<Vec<Vec<BigUint>>>> = Lazy::new(|| RwLock::new(vec![vec![BigUint::one()]]));

fn pascal_entry(rows: &[Vec<BigUint>], a: usize, b: usize) -> BigUint {
    let b = b.min(a - b);
    rows[a][b].clone()
}

/// Binomial coefficient with the vanishing convention: zero whenever
/// `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let (a, b) = (a as usize, b as usize);
    {
        let rows = PASCAL.read().unwrap();
        if a < rows.len() {
            return pascal_entry(&rows, a, b);
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= a {
        let r = rows.len();
        let prev = &rows[r - 1];
        let mut row = Vec::with_capacity(r / 2 + 1);
        row.push(BigUint::one());
        for j in 1..=r / 2 {
            let left = &prev[(j - 1).min(r - 1 - (j - 1))];
            let right = &prev[j.min(r - 1 - j)];
            row.push(left + right);
        }
        rows.push(row);
    }
    pascal_entry(&rows, a, b)
}

/// Multinomial coefficient `total! / (parts[0]! * ... * parts[m]!)`.
/// Zero when a part is negative or the parts do not sum to `total`.
pub fn multinomial(total: i64, parts: &[i64]) -> BigUint {
    if total < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != total {
        return BigUint::zero();
    }
    let mut remaining = total;
    let mut acc = BigUint::one();
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Dense univariate polynomial over the integers; index = power of `t`,
/// trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    /// The monomial `c * t^power`.
    pub fn term(c: BigInt, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        UniPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Multiply by `t^m`.
    pub fn shift(&self, m: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at `t = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient by `1 - t`. Requires `eval_at_one() == 0`.
    pub fn div_one_minus_t(&self) -> Option<UniPoly> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        // p = (1-t) q  <=>  q_i = sum_{j<=i} p_j; the top partial sum is p(1) = 0.
        let mut partial = BigInt::zero();
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            partial += c;
            coeffs.push(partial.clone());
        }
        Some(UniPoly::from_coeffs(coeffs))
    }
}

/// `(1 - t)^e` as a polynomial.
pub fn one_minus_t_pow(e: u32) -> UniPoly {
    let base = UniPoly::from_coeffs(vec![BigInt::one(), -BigInt::one()]);
    base.pow(e)
}

/// Coefficients of `numerator / (1 - t)^denom_exponent` through degree `up_to`
/// (inclusive), computed exactly.
pub fn expand_series(numerator: &UniPoly, denom_exponent: u32, up_to: usize) -> Vec<BigInt> {
    assert!(denom_exponent >= 1, "denominator exponent must be >= 1");
    let e = denom_exponent as i64;
    let mut out = Vec::with_capacity(up_to + 1);
    for m in 0..=up_to {
        let mut acc = BigInt::zero();
        // 1/(1-t)^e = sum_i C(e-1+i, e-1) t^i
        for (j, c) in numerator.coeffs().iter().enumerate() {
            if j > m {
                break;
            }
            if c.is_zero() {
                continue;
            }
            let base: BigInt = binomial(e - 1 + (m - j) as i64, e - 1).into();
            acc += c * base;
        }
        out.push(acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(9, 2), BigUint::from(36u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(7, -2), BigUint::zero());
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for a in 0..40i64 {
            for b in 0..=a {
                assert_eq!(binomial(a, b), binomial(a, a - b));
                if a > 0 {
                    assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
                }
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(4, &[3, 1, 0]), BigUint::from(4u32));
        assert_eq!(multinomial(4, &[2, 2, 0]), BigUint::from(6u32));
        assert_eq!(multinomial(5, &[5]), BigUint::one());
        assert_eq!(multinomial(4, &[3, 2]), BigUint::zero());
        assert_eq!(multinomial(4, &[5, -1]), BigUint::zero());
    }

    #[test]
    fn multinomial_matches_iterated_binomials_and_permutation() {
        let m = multinomial(9, &[2, 3, 4]);
        assert_eq!(m, binomial(9, 2) * binomial(7, 3) * binomial(4, 4));
        assert_eq!(m, multinomial(9, &[4, 2, 3]));
    }

    #[test]
    fn poly_mul_add_shift() {
        let a = UniPoly::from_coeffs(vec![big(1), big(-1)]); // 1 - t
        let b = UniPoly::from_coeffs(vec![big(1), big(1)]); // 1 + t
        assert_eq!(a.mul(&b), UniPoly::from_coeffs(vec![big(1), big(0), big(-1)]));
        assert_eq!(a.add(&b), UniPoly::from_coeffs(vec![big(2)]));
        assert_eq!(a.shift(2), UniPoly::from_coeffs(vec![big(0), big(0), big(1), big(-1)]));
    }

    #[test]
    fn geometric_series_inverse_truncation() {
        // (1-t)^2 * sum_{i<=4} C(i+1,1) t^i = 1 + O(t^5)
        let partial = UniPoly::from_coeffs((0..=4).map(|i| big(i + 1)).collect());
        let prod = one_minus_t_pow(2).mul(&partial);
        for m in 0..=2 {
            assert_eq!(prod.coeff(m), if m == 0 { big(1) } else { big(0) });
        }
    }

    #[test]
    fn expand_series_pure_binomials() {
        let ones = expand_series(&UniPoly::one(), 3, 3);
        assert_eq!(ones, vec![big(1), big(3), big(6), big(10)]);
    }

    #[test]
    fn expand_series_complete_intersection_d2() {
        // (1 - 2t^2 + t^4)/(1-t)^2 = 1 + 2t + t^2
        let num = UniPoly::from_coeffs(vec![big(1), big(0), big(-2), big(0), big(1)]);
        assert_eq!(expand_series(&num, 2, 4), vec![big(1), big(2), big(1), big(0), big(0)]);
    }

    #[test]
    fn expand_series_reaches_constant() {
        let num = UniPoly::from_coeffs(vec![big(1), big(0), big(0), big(0), big(-3), big(0), big(2)]);
        let vals = expand_series(&num, 3, 8);
        assert_eq!(vals, vec![big(1), big(3), big(6), big(10), big(12), big(12), big(12), big(12), big(12)]);
    }

    #[test]
    fn div_one_minus_t_exact() {
        let num = UniPoly::from_coeffs(vec![big(1), big(0), big(0), big(0), big(-3), big(0), big(2)]);
        let q1 = num.div_one_minus_t().unwrap();
        assert_eq!(q1, UniPoly::from_coeffs(vec![big(1), big(1), big(1), big(1), big(-2), big(-2)]));
        let q2 = q1.div_one_minus_t().unwrap();
        assert_eq!(q2.eval_at_one(), big(12));
        assert!(q2.div_one_minus_t().is_none());
    }
}
