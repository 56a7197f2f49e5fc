//! Closed-form engine for the schemes of fat points supported on the k^n
//! roots-of-unity points: Betti numbers, Hilbert series and function,
//! multiplicity, explicit generators, and the duality bridge back to the
//! power-ideal quotient.

use crate::error::{Error, Result};
use crate::grading::Params;
use crate::numerics::{binomial, expand_series, UniPoly};
use crate::sparsepoly::{monomials_of_degree, SparseIntPoly};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

fn check_fat_params(n: u32, k: u32, d: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParams(format!("fat-point schemes need n >= 1, got {n}")));
    }
    if k < 2 {
        return Err(Error::InvalidParams(format!("k must be >= 2, got {k}")));
    }
    if d < 1 {
        return Err(Error::InvalidParams(format!("multiplicity must be >= 1, got {d}")));
    }
    Ok(())
}

/// Graded Betti numbers of the quotient by the fat-point ideal: the
/// resolution is pure with beta_i sitting in internal degree kd + k(i-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: u32,
    k: u32,
    d: u32,
    betti: Vec<BigUint>,
}

impl BettiTable {
    /// beta_i for i = 1..=n.
    pub fn betti(&self) -> &[BigUint] {
        &self.betti
    }

    /// Internal degree of the i-th step, kd + k(i-1).
    pub fn shift(&self, i: u32) -> u32 {
        self.k * self.d + self.k * (i - 1)
    }

    pub fn shifts(&self) -> Vec<u32> {
        (1..=self.n).map(|i| self.shift(i)).collect()
    }
}

/// beta_i = C(d+i-2, i-1) * C(d+n-1, n-i) at shift kd + k(i-1).
pub fn betti(n: u32, k: u32, d: u32) -> Result<BettiTable> {
    check_fat_params(n, k, d)?;
    let betti = (1..=n as i64)
        .map(|i| {
            let b = binomial(d as i64 + i - 2, i - 1) * binomial(d as i64 + n as i64 - 1, n as i64 - i);
            assert!(!b.is_zero(), "Betti number vanished at i={i}");
            b
        })
        .collect();
    Ok(BettiTable { n, k, d, betti })
}

/// Hilbert series of the fat-point quotient:
/// (1 + sum_i (-1)^i beta_i t^{kd+k(i-1)}) / (1-t)^{n+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointSeries {
    n: u32,
    k: u32,
    d: u32,
    pub numerator: UniPoly,
    pub denom_exponent: u32,
}

impl FatPointSeries {
    pub fn expand(&self, up_to: usize) -> Vec<BigInt> {
        expand_series(&self.numerator, self.denom_exponent, up_to)
    }

    /// Order of vanishing of the numerator at t = 1 together with the value
    /// left after dividing out (1-t) that many times. For a one-dimensional
    /// quotient the order is exactly n and the value is the multiplicity.
    pub fn vanishing_order_at_one(&self) -> (u32, BigInt) {
        let mut order = 0;
        let mut current = self.numerator.clone();
        while let Some(q) = current.div_one_minus_t() {
            order += 1;
            current = q;
        }
        (order, current.eval_at_one())
    }

    /// k^n * C(d+n-1, n), the degree of the point scheme.
    pub fn multiplicity(&self) -> BigUint {
        BigUint::from(self.k).pow(self.n) * binomial(self.d as i64 + self.n as i64 - 1, self.n as i64)
    }
}

pub fn fat_series(n: u32, k: u32, d: u32) -> Result<FatPointSeries> {
    let table = betti(n, k, d)?;
    let mut numerator = UniPoly::one();
    for (idx, b) in table.betti().iter().enumerate() {
        let i = idx as u32 + 1;
        let signed = if i % 2 == 1 { -BigInt::from(b.clone()) } else { BigInt::from(b.clone()) };
        numerator = numerator.add(&UniPoly::term(signed, table.shift(i) as usize));
    }
    Ok(FatPointSeries { n, k, d, numerator, denom_exponent: n + 1 })
}

/// HF(S/I_k^{(d)}, m), read off the series expansion.
pub fn fat_hf(n: u32, k: u32, d: u32, m: u32) -> Result<BigUint> {
    let series = fat_series(n, k, d)?;
    let coeff = series.expand(m as usize).pop().expect("expansion is never empty");
    let (sign, mag) = coeff.into_parts();
    assert!(sign != num_bigint::Sign::Minus, "fat-point Hilbert function went negative");
    Ok(mag)
}

/// The piecewise k = 2 values; a test oracle for [`fat_hf`]. Returns `None`
/// for degrees in the transition window the closed table does not cover.
pub fn fat_hf_piecewise_k2(n: u32, d: u32, m: u32) -> Option<BigUint> {
    let (n_, d_, m_) = (n as i64, d as i64, m as i64);
    if m_ <= 2 * d_ - 1 {
        Some(binomial(n_ + m_, n_))
    } else if m_ == 2 * d_ {
        Some(binomial(n_ + 2 * d_, n_) - binomial(d_ + n_ - 1, n_ - 1))
    } else if m_ == 2 * d_ + 1 {
        Some(binomial(n_ + 2 * d_ + 1, n_) - BigUint::from(n + 1) * binomial(d_ + n_ - 1, n_ - 1))
    } else if m_ >= 2 * d_ + n_ - 2 {
        Some(BigUint::from(2u32).pow(n) * binomial(n_ + d_ - 1, n_))
    } else {
        None
    }
}

/// The C(d+n-1, n-1) generators: every product of the n forms
/// Q_j = x_j^k - x_0^k of total multiplicity d, in n+1 variables.
pub fn fat_generators(n: u32, k: u32, d: u32) -> Result<Vec<SparseIntPoly>> {
    check_fat_params(n, k, d)?;
    let nvars = (n + 1) as usize;
    let quadric = |j: usize| {
        let mut e_j = vec![0u32; nvars];
        e_j[j] = k;
        let mut e_0 = vec![0u32; nvars];
        e_0[0] = k;
        SparseIntPoly::term(e_j, BigInt::one()).add(&SparseIntPoly::term(e_0, BigInt::from(-1)))
    };
    let forms: Vec<SparseIntPoly> = (1..=n as usize).map(quadric).collect();
    // exponent tuples (i_1..i_n) with sum d, lexicographic
    let tuples = monomials_of_degree(n as usize, d);
    let mut out = Vec::with_capacity(tuples.len());
    for tuple in tuples {
        let mut g = SparseIntPoly::one(nvars);
        for (j, &e) in tuple.iter().enumerate() {
            g = g.mul(&forms[j].pow(e, nvars));
        }
        debug_assert_eq!(g.total_degree(), Some(k * d));
        debug_assert!(g.is_homogeneous());
        out.push(g);
    }
    debug_assert_eq!(out.len(), binomial(d as i64 + n as i64 - 1, n as i64 - 1).try_into().unwrap_or(usize::MAX));
    Ok(out)
}

fn check_window(p: &Params, j: u32) -> Result<()> {
    if p.d() < 2 || j > p.d() - 2 {
        return Err(Error::InvalidParams(format!(
            "degree offset j = {j} outside the window 0..={} for d = {}",
            p.d().saturating_sub(2),
            p.d()
        )));
    }
    Ok(())
}

/// Macaulay-duality prediction for HF(R_{n,k,d}; i) at i = (k-1)d + j:
/// the dimension of the fat-point ideal of multiplicity j+1 in degree i,
/// i.e. C(n+i,n) - HF(S/I_k^{(j+1)}, i).
pub fn duality_hf(p: &Params, j: u32) -> Result<BigUint> {
    check_window(p, j)?;
    let i = p.gen_degree() + j;
    let full = binomial((p.n() + i) as i64, p.n() as i64);
    let quotient = fat_hf(p.n(), p.k(), j + 1, i)?;
    assert!(full >= quotient);
    Ok(full - quotient)
}

/// The alternating closed form for the same value:
/// sum_{s=1..n, ks <= (k-1)(d-j)} (-1)^{s+1}
///   C(n+(k-1)(d-j)-ks, n) C(j+s-1, s-1) C(j+n, n-s).
pub fn comp_formula(p: &Params, j: u32) -> Result<BigUint> {
    check_window(p, j)?;
    if p.n() < 1 {
        return Err(Error::InvalidParams("closed form needs n >= 1".into()));
    }
    let n = p.n() as i64;
    let k = p.k() as i64;
    let spread = (k - 1) * (p.d() - j) as i64;
    let j = j as i64;
    let mut acc = BigInt::zero();
    for s in 1..=n {
        if k * s > spread {
            continue;
        }
        let term = BigInt::from(
            binomial(n + spread - k * s, n) * binomial(j + s - 1, s - 1) * binomial(j + n, n - s),
        );
        if s % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let (sign, mag) = acc.into_parts();
    assert!(sign != num_bigint::Sign::Minus, "alternating sum went negative");
    Ok(mag)
}
