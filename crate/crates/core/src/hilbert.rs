//! Hilbert-function engines for the quotient by the power ideal: the proved
//! k = 2 formula, the conjectured general-k formula, closed-form series for
//! two to four variables, and series-numerator extraction.

use crate::error::{Error, Result};
use crate::grading::{weight_counts, Params};
use crate::numerics::{binomial, expand_series, one_minus_t_pow, UniPoly};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::fmt;

/// Which engine produced a Hilbert-function value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Closed sum proved for k = 2.
    ProvedK2,
    /// General-k sum; proved only for k = 2, conjectural beyond.
    Conjectured,
    /// Brute-force rank of the multiplication maps.
    Oracle,
    /// Fat-point side through Macaulay duality.
    Duality,
    /// The alternating closed form derived from the fat-point resolution.
    Comp,
    /// Expansion of the closed-form series numerator (k = 2, <= 4 variables).
    Series,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::ProvedK2,
        Method::Conjectured,
        Method::Oracle,
        Method::Duality,
        Method::Comp,
        Method::Series,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Method::ProvedK2 => "proved-k2",
            Method::Conjectured => "conjectured",
            Method::Oracle => "oracle",
            Method::Duality => "duality",
            Method::Comp => "comp",
            Method::Series => "series",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Method> {
        Method::ALL.iter().copied().find(|m| m.tag() == tag)
    }

    /// True when the method's correctness for these parameters rests on the
    /// conjecture rather than a proof.
    pub fn is_conjectural_for(&self, p: &Params) -> bool {
        matches!(self, Method::Conjectured) && p.k() > 2
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Hilbert function of the quotient ring, tabulated over degrees 0..kd-1.
/// The function is identically zero from degree kd on, which is reported
/// but never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    params: Params,
    values: Vec<BigUint>,
    method: Method,
}

impl HilbertFunction {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Value at any degree, zero beyond the stored range.
    pub fn get(&self, i: u32) -> BigUint {
        self.values.get(i as usize).cloned().unwrap_or_else(BigUint::zero)
    }
}

/// Hilbert series as numerator / (1-t)^{n+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: UniPoly,
    pub denom_exponent: u32,
}

impl HilbertSeries {
    pub fn expand(&self, up_to: usize) -> Vec<BigInt> {
        expand_series(&self.numerator, self.denom_exponent, up_to)
    }
}

/// HF(R; i) by the proved k = 2 sum: C(n+i,n) below degree d, and for
/// i = d + j the sum over admissible weights h of
/// C(n+1,h) * (C(n+(i-h)/2,n) - C(n+j,n)).
pub fn hf_proved_k2(p: &Params, i: u32) -> Result<BigUint> {
    if p.k() != 2 {
        return Err(Error::InvalidParams(format!("proved formula requires k = 2, got k = {}", p.k())));
    }
    let n = p.n() as i64;
    let d = p.d();
    if i < d {
        return Ok(binomial(n + i as i64, n));
    }
    let j = i - d;
    if j + 1 >= d {
        // empty weight set from degree 2d-1 on
        return Ok(BigUint::zero());
    }
    let mut acc = BigUint::zero();
    for h in 0..d - j {
        if (i - h) % 2 != 0 || h > p.max_weight() {
            continue;
        }
        let count = binomial(n + 1, h as i64);
        if count.is_zero() {
            continue;
        }
        // h < d-j forces (i-h)/2 > j, so the difference is positive for n >= 1
        // and exactly zero in the single-variable case.
        debug_assert!((i - h) / 2 > j);
        let grown = binomial(n + ((i - h) / 2) as i64, n);
        let removed = binomial(n + j as i64, n);
        assert!(grown >= removed, "summand went negative (h={h}, i={i})");
        assert!(grown > removed || p.n() == 0, "summand must be strictly positive (h={h}, i={i})");
        acc += count * (grown - removed);
    }
    Ok(acc)
}

/// One weight block of the general-k sum at degree i: the weight h, the
/// count N_h, and dim S_{i-h,0} - C(n+j,n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightBlock {
    pub weight: u32,
    pub count: BigUint,
    pub block_dim: BigUint,
}

/// The weight blocks contributing to HF(R; i) for i = D + j with
/// 0 <= j <= d-2; empty for every other degree >= D.
pub fn conjectured_blocks(p: &Params, i: u32) -> Vec<WeightBlock> {
    let dd = p.gen_degree();
    if i < dd || i + 1 >= p.vanishing_degree() {
        return Vec::new();
    }
    let j = i - dd;
    let n = p.n() as i64;
    let k = p.k();
    let counts = weight_counts(p.n(), k);
    let bound = (k - 1) * (p.d() - j);
    let removed = binomial(n + j as i64, n);
    let mut blocks = Vec::new();
    for h in 0..bound.min(p.max_weight() + 1) {
        if (i - h) % k != 0 {
            continue;
        }
        debug_assert!((i - h) / k > j);
        let grown = binomial(n + ((i - h) / k) as i64, n);
        assert!(grown >= removed, "block dimension went negative (h={h}, i={i})");
        assert!(grown > removed || p.n() == 0, "block dimension must be strictly positive (h={h}, i={i})");
        blocks.push(WeightBlock {
            weight: h,
            count: counts.get(h),
            block_dim: grown - removed.clone(),
        });
    }
    blocks
}

/// HF(R; i) by the general-k sum over weight counts N_h. Proved for k = 2
/// (where it coincides with [`hf_proved_k2`]); conjectural for k > 2.
pub fn hf_conjectured(p: &Params, i: u32) -> BigUint {
    let dd = p.gen_degree();
    if i < dd {
        return binomial((p.n() + i) as i64, p.n() as i64);
    }
    conjectured_blocks(p, i)
        .into_iter()
        .map(|b| b.count * b.block_dim)
        .sum()
}

/// Full table over degrees 0..kd-1 using the requested engine.
/// The oracle engine lives in [`crate::oracle`]; use
/// [`crate::oracle::hf_table_oracle`] for it.
pub fn hf_table(p: &Params, method: Method) -> Result<HilbertFunction> {
    let len = p.vanishing_degree() as usize;
    let values: Vec<BigUint> = match method {
        Method::ProvedK2 => (0..len as u32).map(|i| hf_proved_k2(p, i)).collect::<Result<_>>()?,
        Method::Conjectured => (0..len as u32).map(|i| hf_conjectured(p, i)).collect(),
        Method::Series => {
            let series = series_closed_form(p)?;
            let expanded = series.expand(len - 1);
            expanded
                .into_iter()
                .map(|c| {
                    let (sign, mag) = c.into_parts();
                    assert!(sign != num_bigint::Sign::Minus, "series expansion went negative");
                    mag
                })
                .collect()
        }
        Method::Duality | Method::Comp => {
            let dd = p.gen_degree();
            let mut values: Vec<BigUint> = (0..dd as i64).map(|i| binomial(p.n() as i64 + i, p.n() as i64)).collect();
            for j in 0..p.d().saturating_sub(1) {
                let v = match method {
                    Method::Duality => crate::fatpoints::duality_hf(p, j)?,
                    _ => crate::fatpoints::comp_formula(p, j)?,
                };
                values.push(v);
            }
            values.push(BigUint::zero()); // degree kd-1
            values
        }
        Method::Oracle => {
            return Err(Error::InvalidParams(
                "oracle tables are built by powideal::oracle::hf_table_oracle".into(),
            ))
        }
    };
    debug_assert_eq!(values.len(), len);
    Ok(HilbertFunction { params: *p, values, method })
}

pub(crate) fn hf_from_values(p: &Params, values: Vec<BigUint>, method: Method) -> HilbertFunction {
    HilbertFunction { params: *p, values, method }
}

/// The closed-form numerators proved for k = 2 in up to four variables.
pub fn series_closed_form(p: &Params) -> Result<HilbertSeries> {
    if p.k() != 2 {
        return Err(Error::InvalidParams(format!("closed-form series requires k = 2, got k = {}", p.k())));
    }
    let d = p.d() as usize;
    let numerator = match p.n() {
        1 => {
            // 1 - 2t^d + t^{2d}
            let mut c = vec![BigInt::zero(); 2 * d + 1];
            c[0] = BigInt::one();
            c[d] = BigInt::from(-2);
            c[2 * d] = BigInt::one();
            UniPoly::from_coeffs(c)
        }
        2 => {
            if p.d() < 2 {
                return Err(Error::InvalidParams("three-variable closed form requires d >= 2".into()));
            }
            // 1 - 4t^d + d t^{2d-1} + 3t^{2d} - d t^{2d+1}
            let mut c = vec![BigInt::zero(); 2 * d + 2];
            c[0] = BigInt::one();
            c[d] = BigInt::from(-4);
            c[2 * d - 1] = BigInt::from(d as i64);
            c[2 * d] = BigInt::from(3);
            c[2 * d + 1] = BigInt::from(-(d as i64));
            UniPoly::from_coeffs(c)
        }
        3 => {
            if p.d() < 3 {
                return Err(Error::InvalidParams("four-variable closed form requires d >= 3".into()));
            }
            // 1 - 8t^d + C(d,2) t^{2d-2} + 4d t^{2d-1} - (d^2-7) t^{2d}
            //   - 4d t^{2d+1} + C(d+1,2) t^{2d+2}
            let di = d as i64;
            let mut c = vec![BigInt::zero(); 2 * d + 3];
            c[0] = BigInt::one();
            c[d] = BigInt::from(-8);
            c[2 * d - 2] = BigInt::from(binomial(di, 2));
            c[2 * d - 1] = BigInt::from(4 * di);
            c[2 * d] = BigInt::from(-(di * di - 7));
            c[2 * d + 1] = BigInt::from(-4 * di);
            c[2 * d + 2] = BigInt::from(binomial(di + 1, 2));
            UniPoly::from_coeffs(c)
        }
        n => {
            return Err(Error::InvalidParams(format!(
                "closed-form series is stated for 2..=4 variables, got {} (n = {n})",
                n + 1
            )))
        }
    };
    Ok(HilbertSeries { numerator, denom_exponent: p.num_vars() })
}

/// Recover the series numerator from a complete table:
/// numerator = (1-t)^{n+1} * sum_i HF(i) t^i. The table must cover every
/// degree with a nonzero value (the function is zero from degree kd on).
pub fn numerator_from_hf(hf: &HilbertFunction) -> Result<HilbertSeries> {
    let p = hf.params();
    if hf.values().len() < p.vanishing_degree() as usize {
        return Err(Error::InvalidParams(
            "table does not reach the vanishing degree; cannot certify it is eventually zero".into(),
        ));
    }
    let poly = UniPoly::from_coeffs(hf.values().iter().map(|v| BigInt::from(v.clone())).collect());
    let numerator = one_minus_t_pow(p.num_vars()).mul(&poly);
    Ok(HilbertSeries { numerator, denom_exponent: p.num_vars() })
}

/// The two top-degree values predicted in the paper's side remark for k = 2:
/// (HF(2d-2), HF(2d-3)) = (C(n+d-2,n-1), (n+1) C(n+d-2,n-1)).
///
/// The proved sum is the normative formula; this is a reporting helper, and
/// [`check_top_socle`] flags where the remark disagrees with it (its second
/// value does, for n >= 2).
pub fn top_socle_predictions(p: &Params) -> Result<(BigUint, BigUint)> {
    if p.k() != 2 {
        return Err(Error::InvalidParams(format!("prediction requires k = 2, got k = {}", p.k())));
    }
    if p.d() < 3 || p.n() < 1 {
        return Err(Error::InvalidParams(format!(
            "prediction requires d >= 3 and n >= 1, got d = {}, n = {}",
            p.d(),
            p.n()
        )));
    }
    let base = binomial((p.n() + p.d() - 2) as i64, p.n() as i64 - 1);
    Ok((base.clone(), BigUint::from(p.n() + 1) * base))
}

/// Whether each component of [`top_socle_predictions`] agrees with the
/// proved formula at degrees 2d-2 and 2d-3.
pub fn check_top_socle(p: &Params) -> Result<(bool, bool)> {
    let (pred_top, pred_below) = top_socle_predictions(p)?;
    let at_top = hf_proved_k2(p, 2 * p.d() - 2)?;
    let at_below = hf_proved_k2(p, 2 * p.d() - 3)?;
    Ok((pred_top == at_top, pred_below == at_below))
}
