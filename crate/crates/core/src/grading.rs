//! The Z_k^{n+1} multicyclic grading of the polynomial ring in n+1
//! variables: multicycles, weights, partition vectors, graded-piece
//! dimensions, weight counts and minimal-generator counting.

use crate::error::{Error, Result};
use crate::numerics::{binomial, multinomial, UniPoly};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// The parameter triple. The ideal lives in n+1 variables, is generated by
/// the k^n powers of degree `(k-1)d`, and its quotient vanishes from degree
/// `kd` on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    n: u32,
    k: u32,
    d: u32,
}

impl Params {
    pub fn new(n: u32, k: u32, d: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("k must be >= 2, got {k}")));
        }
        if d < 1 {
            return Err(Error::InvalidParams(format!("d must be >= 1, got {d}")));
        }
        Ok(Params { n, k, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn num_vars(&self) -> u32 {
        self.n + 1
    }

    /// D = (k-1)d, the common degree of the generators. Always recomputed.
    pub fn gen_degree(&self) -> u32 {
        (self.k - 1) * self.d
    }

    /// kd, the degree from which the quotient ring is identically zero.
    pub fn vanishing_degree(&self) -> u32 {
        self.k * self.d
    }

    /// Largest possible multicycle weight, (k-1)(n+1).
    pub fn max_weight(&self) -> u32 {
        (self.k - 1) * (self.n + 1)
    }
}

/// A vector of residues mod k of length n+1, stored as the canonical
/// representatives 0..k-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicycle {
    entries: Vec<u32>,
    k: u32,
}

impl Multicycle {
    pub fn new(entries: Vec<u32>, k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("modulus must be >= 2, got {k}")));
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= k) {
            return Err(Error::InvalidParams(format!("entry {e} out of range mod {k}")));
        }
        Ok(Multicycle { entries, k })
    }

    pub fn zero(n: u32, k: u32) -> Self {
        Multicycle { entries: vec![0; (n + 1) as usize], k }
    }

    /// Residues of an exponent vector: the multicyclic degree of `x^a`.
    pub fn from_exponents(exponents: &[u32], k: u32) -> Self {
        Multicycle { entries: exponents.iter().map(|&a| a % k).collect(), k }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn modulus(&self) -> u32 {
        self.k
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Entry j counts the coordinates equal to j; entries sum to n+1.
    pub fn partition_vector(&self) -> Vec<u32> {
        let mut part = vec![0u32; self.k as usize];
        for &e in &self.entries {
            part[e as usize] += 1;
        }
        part
    }

    /// Componentwise difference mod k.
    pub fn sub(&self, other: &Multicycle) -> Multicycle {
        debug_assert_eq!(self.k, other.k);
        debug_assert_eq!(self.entries.len(), other.entries.len());
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + self.k - b) % self.k)
            .collect();
        Multicycle { entries, k: self.k }
    }

    /// Componentwise sum with the unit vector e_l, mod k.
    pub fn add_unit(&self, l: usize) -> Multicycle {
        let mut entries = self.entries.clone();
        entries[l] = (entries[l] + 1) % self.k;
        Multicycle { entries, k: self.k }
    }

    /// Scalar product using the representatives 0..k-1, as plain integers.
    pub fn dot(&self, other: &Multicycle) -> u64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum()
    }

    /// All of Z_k^{n+1} in lexicographic order.
    pub fn all(n: u32, k: u32) -> Vec<Multicycle> {
        let len = (n + 1) as usize;
        let mut out = Vec::with_capacity((k as usize).pow(len as u32));
        let mut cur = vec![0u32; len];
        loop {
            out.push(Multicycle { entries: cur.clone(), k });
            // lexicographic increment, most significant coordinate first
            let mut pos = len;
            while pos > 0 {
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] < k {
                    break;
                }
                cur[pos] = 0;
                if pos == 0 {
                    return out;
                }
            }
        }
    }
}

/// Counts N_h of multicycles in Z_k^{n+1} by weight h = 0..(k-1)(n+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCounts {
    n: u32,
    k: u32,
    counts: Vec<BigUint>,
}

impl WeightCounts {
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, h: u32) -> BigUint {
        self.counts.get(h as usize).cloned().unwrap_or_else(BigUint::zero)
    }
}

static WEIGHT_COUNTS_CACHE: Lazy<RwLock<HashMap<(u32, u32), Arc<WeightCounts>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// N_h = sum_{s<=h/k} (-1)^s C(n+1,s) C(n+h-ks,n), the number of
/// multicycles of weight h.
pub fn weight_counts(n: u32, k: u32) -> Arc<WeightCounts> {
    if let Some(wc) = WEIGHT_COUNTS_CACHE.read().unwrap().get(&(n, k)) {
        return Arc::clone(wc);
    }
    let max_weight = (k - 1) * (n + 1);
    let mut counts = Vec::with_capacity(max_weight as usize + 1);
    for h in 0..=max_weight as i64 {
        let mut acc = BigInt::zero();
        for s in 0..=h / k as i64 {
            let term = BigInt::from(binomial(n as i64 + 1, s) * binomial(n as i64 + h - k as i64 * s, n as i64));
            if s % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (sign, mag) = acc.into_parts();
        assert!(sign != num_bigint::Sign::Minus, "weight count went negative");
        counts.push(mag);
    }
    let wc = Arc::new(WeightCounts { n, k, counts });
    WEIGHT_COUNTS_CACHE
        .write()
        .unwrap()
        .entry((n, k))
        .or_insert_with(|| Arc::clone(&wc))
        .clone()
}

/// Same counts read off the coefficients of (1 + x + ... + x^{k-1})^{n+1};
/// an independent route kept for cross-checking.
pub fn weight_counts_by_poly_power(n: u32, k: u32) -> Vec<BigUint> {
    let cyc_sum = UniPoly::from_coeffs(vec![BigInt::one(); k as usize]);
    let power = cyc_sum.pow(n + 1);
    (0..=((k - 1) * (n + 1)) as usize)
        .map(|h| {
            let (sign, mag) = power.coeff(h).into_parts();
            assert!(sign != num_bigint::Sign::Minus);
            mag
        })
        .collect()
}

/// dim S_{i,g}: C(n+j,n) when i - wt(g) = jk for some j >= 0, else zero.
pub fn dim_graded_piece(p: &Params, i: u32, g: &Multicycle) -> BigUint {
    let wt = g.weight();
    if i < wt || (i - wt) % p.k() != 0 {
        return BigUint::zero();
    }
    let j = ((i - wt) / p.k()) as i64;
    binomial(p.n() as i64 + j, p.n() as i64)
}

/// Whether g lies in G_{k,n,i}, i.e. i - wt(g) is a nonnegative multiple of k.
pub fn in_g(p: &Params, i: u32, g: &Multicycle) -> bool {
    let wt = g.weight();
    i >= wt && (i - wt) % p.k() == 0
}

/// Number of minimal generators of the power ideal: the cardinality of
/// G_{k,n,D}, computed by summing the weight counts N_h over the weights
/// h <= D congruent to D mod k.
pub fn gens_count(p: &Params) -> BigUint {
    let counts = weight_counts(p.n(), p.k());
    let d_big = p.gen_degree();
    let mut acc = BigUint::zero();
    let mut h = d_big % p.k();
    let top = d_big.min(p.max_weight());
    while h <= top {
        acc += counts.get(h);
        if h + p.k() > top {
            break;
        }
        h += p.k();
    }
    acc
}

/// The same count by the closed double sum over partition vectors:
/// for each i >= 0 and each choice of multiplicities v_2..v_{k-1}, count the
/// multicycles whose partition vector is (v_0, v_1, v_2, ..., v_{k-1}) with
/// v_1 = D - ki - sum_{j>=2} j*v_j and v_0 the remaining coordinates.
/// Verification-only path; must agree with [`gens_count`].
pub fn gens_count_theorem(p: &Params) -> BigUint {
    let n = p.n() as i64;
    let k = p.k() as i64;
    let d_big = p.gen_degree() as i64;
    let mut acc = BigUint::zero();
    let mut i = 0i64;
    while k * i <= d_big {
        let budget = d_big - k * i;
        // enumerate v_2..v_{k-1} with sum_j j*v_j <= budget
        let mut stack: Vec<(usize, i64, Vec<i64>)> = vec![(2, budget, Vec::new())];
        while let Some((j, rem, chosen)) = stack.pop() {
            if j as i64 > k - 1 {
                let v1 = rem;
                let weighted: i64 = chosen.iter().enumerate().map(|(idx, &v)| (idx as i64 + 2 - 1) * v).sum();
                let v0 = n + 1 - d_big + k * i + weighted;
                let mut parts = vec![v0, v1];
                parts.extend_from_slice(&chosen);
                acc += multinomial(n + 1, &parts);
                continue;
            }
            let mut v = 0;
            while (j as i64) * v <= rem {
                let mut next = chosen.clone();
                next.push(v);
                stack.push((j + 1, rem - (j as i64) * v, next));
                v += 1;
            }
        }
        i += 1;
    }
    acc
}

/// k = 2 only: whether the 2^n original power generators are linearly
/// independent. They span a space of dimension [`gens_count`], so
/// independence is exactly gens_count = 2^n, which the parity count gives
/// as d >= n. (The one-sided bound n + 1 <= d sometimes quoted for this
/// criterion misses the boundary d = n, where all 2^n generators survive;
/// the rank oracle confirms d = n is independent.)
pub fn phi_independent_k2(p: &Params) -> Result<bool> {
    if p.k() != 2 {
        return Err(Error::InvalidParams(format!("criterion requires k = 2, got k = {}", p.k())));
    }
    Ok(p.d() >= p.n())
}
