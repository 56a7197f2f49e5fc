//! Sparse multivariate polynomials over the integers, keyed by exponent
//! vectors. Small and deterministic: terms live in a BTreeMap so iteration
//! order is the lexicographic order on exponent vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseIntPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparseIntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], BigInt::one());
        SparseIntPoly { terms }
    }

    /// The monomial `c * x^exponents`; dropped when c = 0.
    pub fn term(exponents: Vec<u32>, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// All exponent sums equal (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    pub fn add(&self, other: &SparseIntPoly) -> SparseIntPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &SparseIntPoly) -> SparseIntPoly {
        let mut out = SparseIntPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32, nvars: usize) -> SparseIntPoly {
        let mut acc = SparseIntPoly::one(nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply every term by the monomial `x^shift`.
    pub fn shift_exponents(&self, shift: &[u32]) -> SparseIntPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        SparseIntPoly { terms }
    }
}

/// Plain-text form: terms joined by ` + ` / ` - `, each term
/// `c*x0^a0*x1^a1*...` with zero exponents omitted, unit coefficients and
/// first powers left implicit. Terms appear in descending lexicographic
/// exponent order.
impl fmt::Display for SparseIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.sign() == num_bigint::Sign::Minus;
            let mag = coeff.magnitude();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (var, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{var}")),
                    _ => factors.push(format!("x{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Degree-`degree` exponent vectors in `nvars` variables, lexicographically
/// ascending. This is the global monomial order used for matrix indexing.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(pos: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = remaining;
            out.push(cur.clone());
            return;
        }
        for v in 0..=remaining {
            cur[pos] = v;
            rec(pos + 1, remaining - v, cur, out);
        }
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, degree, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let nv = 2;
        // (x0 - x1)^2 = x0^2 - 2 x0 x1 + x1^2
        let p = SparseIntPoly::term(vec![1, 0], BigInt::one())
            .add(&SparseIntPoly::term(vec![0, 1], BigInt::from(-1)));
        let sq = p.pow(2, nv);
        assert_eq!(sq.coeff(&[2, 0]), BigInt::one());
        assert_eq!(sq.coeff(&[1, 1]), BigInt::from(-2));
        assert_eq!(sq.coeff(&[0, 2]), BigInt::one());
        assert_eq!(sq.num_terms(), 3);
        assert!(sq.is_homogeneous());
        assert_eq!(sq.total_degree(), Some(2));
        assert_eq!(sq.to_string(), "x0^2 - 2*x0*x1 + x1^2");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = SparseIntPoly::term(vec![1, 1], BigInt::from(3));
        let q = SparseIntPoly::term(vec![1, 1], BigInt::from(-3));
        assert!(p.add(&q).is_zero());
        assert_eq!(p.add(&q).to_string(), "0");
    }

    #[test]
    fn monomial_enumeration() {
        let mons = monomials_of_degree(3, 2);
        assert_eq!(mons.len(), 6);
        assert_eq!(mons[0], vec![0, 0, 2]);
        assert_eq!(mons[5], vec![2, 0, 0]);
        let mut sorted = mons.clone();
        sorted.sort();
        assert_eq!(mons, sorted);
    }

    #[test]
    fn constant_display() {
        assert_eq!(SparseIntPoly::one(3).to_string(), "1");
        assert_eq!(SparseIntPoly::term(vec![0, 0], BigInt::from(-7)).to_string(), "-7");
    }
}
