//! Independent brute-force verification: exact construction of the graded
//! generator components, rank computation of the multiplication maps over
//! the rationals, fat-point interpolation matrices over Q(xi), socle
//! dimensions and the initial-ideal monomial count.
//!
//! Everything here recomputes dimensions from first principles (matrices
//! and ranks), deliberately sharing no formula with the closed-form
//! engines it cross-checks.

pub mod cyclotomic;
pub mod matrix;

pub use cyclotomic::{cyclotomic_poly, CycField, CycNumber};
pub use matrix::{ExactMatrix, FieldOps, RationalField};

use crate::error::{Error, Result};
use crate::exec::{map_items, ExecMode};
use crate::grading::{in_g, Multicycle, Params};
use crate::hilbert::{hf_from_values, HilbertFunction, Method};
use crate::numerics::{binomial, multinomial};
use crate::sparsepoly::{monomials_of_degree, SparseIntPoly};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Size guard and execution mode for the matrix-based oracles.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Refuse to build any single matrix with more entries than this.
    pub max_block_entries: usize,
    pub mode: ExecMode,
}

pub const DEFAULT_MAX_BLOCK_ENTRIES: usize = 20_000;

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_block_entries: DEFAULT_MAX_BLOCK_ENTRIES, mode: ExecMode::default() }
    }
}

impl OracleConfig {
    fn guard(&self, rows: usize, cols: usize) -> Result<()> {
        if rows.saturating_mul(cols) > self.max_block_entries {
            return Err(Error::ResourceGuard { rows, cols, limit: self.max_block_entries });
        }
        Ok(())
    }
}

/// Exponent vectors of the monomial basis of S_{degree, g}: entries
/// congruent to g mod k summing to `degree`, lexicographically ascending.
/// Empty exactly when the graded piece is zero.
pub fn monomials_in_block(degree: u32, g: &Multicycle) -> Vec<Vec<u32>> {
    let wt = g.weight();
    let k = g.modulus();
    if degree < wt || (degree - wt) % k != 0 {
        return Vec::new();
    }
    let quotient_degree = (degree - wt) / k;
    monomials_of_degree(g.entries().len(), quotient_degree)
        .into_iter()
        .map(|b| b.iter().zip(g.entries()).map(|(&bl, &gl)| k * bl + gl).collect())
        .collect()
}

/// The multicyclic component of (x_0 + ... + x_n)^D in degree g:
/// sum of multinomial(D; e) x^e over the exponent vectors e of the block.
/// Zero exactly when g is outside G_{k,n,D}.
pub fn psi_gen(p: &Params, g: &Multicycle) -> SparseIntPoly {
    let dd = p.gen_degree();
    let mut poly = SparseIntPoly::zero();
    for e in monomials_in_block(dd, g) {
        let parts: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        poly.add_term(e, BigInt::from(multinomial(dd as i64, &parts)));
    }
    poly
}

/// The power generator expressed in the psi basis: pairs (h, xi^{<g,h>})
/// over h in G_{k,n,D} in lexicographic order. Requires g_0 = 0, matching
/// the generators of the ideal.
pub fn phi_gen(p: &Params, g: &Multicycle, field: &CycField) -> Result<Vec<(Multicycle, CycNumber)>> {
    if g.entries().first().copied() != Some(0) {
        return Err(Error::InvalidParams("generator multicycles have first coordinate 0".into()));
    }
    debug_assert_eq!(field.k(), p.k());
    let dd = p.gen_degree();
    Ok(Multicycle::all(p.n(), p.k())
        .into_iter()
        .filter(|h| in_g(p, dd, h))
        .map(|h| {
            let e = field.zeta_pow(g.dot(&h) as i64);
            (h, e)
        })
        .collect())
}

/// Monomial coefficients of phi_g in degree D: for each exponent vector e
/// of S_D (lexicographic), multinomial(D; e) * xi^{<g, e mod k>}.
pub fn phi_monomial_coeffs(p: &Params, g: &Multicycle, field: &CycField) -> Vec<CycNumber> {
    let dd = p.gen_degree();
    monomials_of_degree(p.num_vars() as usize, dd)
        .iter()
        .map(|e| {
            let parts: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            let c = BigInt::from(multinomial(dd as i64, &parts));
            let residues = Multicycle::from_exponents(e, p.k());
            field.mul(&field.from_bigint(c), &field.zeta_pow(g.dot(&residues) as i64))
        })
        .collect()
}

/// Rank over Q(xi) of the k^n x dim(S_D) coefficient matrix of the
/// original power generators. Always equals the minimal-generator count.
pub fn phi_rank(p: &Params, cfg: &OracleConfig) -> Result<BigUint> {
    let field = CycField::new(p.k());
    let points = (p.k() as usize).pow(p.n());
    let cols = monomials_of_degree(p.num_vars() as usize, p.gen_degree()).len();
    cfg.guard(points, cols)?;
    let gens: Vec<Multicycle> = if p.n() == 0 {
        vec![Multicycle::zero(0, p.k())]
    } else {
        Multicycle::all(p.n() - 1, p.k())
            .into_iter()
            .map(|tail| {
                let mut entries = vec![0u32];
                entries.extend_from_slice(tail.entries());
                Multicycle::new(entries, p.k()).unwrap()
            })
            .collect()
    };
    let rows: Vec<Vec<CycNumber>> =
        map_items(cfg.mode, gens, |g| phi_monomial_coeffs(p, &g, &field));
    let m = ExactMatrix::from_rows(rows);
    Ok(BigUint::from(m.rank(&field)))
}

fn row_index(rows: &[Vec<u32>], target: &[u32]) -> usize {
    rows.binary_search_by(|probe| probe.as_slice().cmp(target)).expect("product monomial must lie in the target block")
}

/// Matrix of the multiplication map into the block (i, h): columns are the
/// products (monomial of S_{i-D, h-g}) * psi_g written in the monomial
/// basis of S_{i,h}. For i < D there are no columns.
fn mu_image_matrix(
    p: &Params,
    i: u32,
    h: &Multicycle,
    psis: &[(Multicycle, SparseIntPoly)],
    cfg: &OracleConfig,
) -> Result<ExactMatrix<BigRational>> {
    let field = RationalField;
    let target = monomials_in_block(i, h);
    if i < p.gen_degree() {
        return Ok(ExactMatrix::new(&field, target.len(), 0));
    }
    let j = i - p.gen_degree();
    let mut columns: Vec<(Vec<u32>, &SparseIntPoly)> = Vec::new();
    for (g, psi) in psis {
        let source = monomials_in_block(j, &h.sub(g));
        for m in source {
            columns.push((m, psi));
        }
    }
    cfg.guard(target.len(), columns.len())?;
    let mut mat = ExactMatrix::new(&field, target.len(), columns.len());
    for (c, (m, psi)) in columns.iter().enumerate() {
        for (e, coeff) in psi.terms() {
            let product: Vec<u32> = e.iter().zip(m.iter()).map(|(a, b)| a + b).collect();
            let r = row_index(&target, &product);
            mat.set(r, c, BigRational::from(coeff.clone()));
        }
    }
    Ok(mat)
}

fn psi_family(p: &Params) -> Vec<(Multicycle, SparseIntPoly)> {
    Multicycle::all(p.n(), p.k())
        .into_iter()
        .filter(|g| in_g(p, p.gen_degree(), g))
        .map(|g| {
            let psi = psi_gen(p, &g);
            debug_assert!(!psi.is_zero());
            (g, psi)
        })
        .collect()
}

/// HF(R; i) from first principles: for each multicyclic block, the
/// dimension of the graded piece minus the rank of the multiplication
/// map landing in it, summed over blocks.
pub fn hf_oracle(p: &Params, i: u32, cfg: &OracleConfig) -> Result<BigUint> {
    if i < p.gen_degree() {
        return Ok(binomial((p.n() + i) as i64, p.n() as i64));
    }
    let psis = psi_family(p);
    let blocks: Vec<Multicycle> = Multicycle::all(p.n(), p.k())
        .into_iter()
        .filter(|h| in_g(p, i, h))
        .collect();
    let per_block = map_items(cfg.mode, blocks, |h| -> Result<usize> {
        let mat = mu_image_matrix(p, i, &h, &psis, cfg)?;
        Ok(mat.rows() - mat.rank(&RationalField))
    });
    let mut total = BigUint::zero();
    for r in per_block {
        total += BigUint::from(r?);
    }
    Ok(total)
}

/// Full oracle table over degrees 0..kd-1.
pub fn hf_table_oracle(p: &Params, cfg: &OracleConfig) -> Result<HilbertFunction> {
    let values = (0..p.vanishing_degree())
        .map(|i| hf_oracle(p, i, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(hf_from_values(p, values, Method::Oracle))
}

/// All derivative orders imposed by a fat point of multiplicity d:
/// exponent vectors of total degree 0..=d-1.
fn derivative_orders(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    (0..d).flat_map(|t| monomials_of_degree(nvars, t)).collect()
}

/// d/dx^alpha of x^beta evaluated at the point [1 : xi^{g_1} : ... : xi^{g_n}]:
/// the falling factorial beta!/(beta-alpha)! times the point power, zero
/// unless beta >= alpha componentwise.
pub fn derivative_value_at_point(
    beta: &[u32],
    alpha: &[u32],
    point: &[u32],
    field: &CycField,
) -> CycNumber {
    debug_assert_eq!(beta.len(), alpha.len());
    debug_assert_eq!(beta.len(), point.len() + 1);
    if beta.iter().zip(alpha).any(|(b, a)| b < a) {
        return field.zero();
    }
    let mut falling = BigInt::one();
    for (&b, &a) in beta.iter().zip(alpha) {
        for step in 0..a {
            falling *= BigInt::from(b - step);
        }
    }
    let exponent: i64 = point
        .iter()
        .zip(beta[1..].iter().zip(&alpha[1..]))
        .map(|(&g, (&b, &a))| g as i64 * (b - a) as i64)
        .sum();
    field.mul(&field.from_bigint(falling), &field.zeta_pow(exponent))
}

/// HF(S/I_k^{(d)}, m) as the rank of the interpolation matrix over Q(xi):
/// one row per (point, derivative order up to d-1), one column per
/// degree-m monomial.
pub fn fat_oracle(n: u32, k: u32, d: u32, m: u32, cfg: &OracleConfig) -> Result<BigUint> {
    if n < 1 || k < 2 || d < 1 {
        return Err(Error::InvalidParams(format!("fat-point oracle needs n >= 1, k >= 2, d >= 1; got ({n},{k},{d})")));
    }
    let field = CycField::new(k);
    let nvars = (n + 1) as usize;
    let points: Vec<Vec<u32>> = Multicycle::all(n - 1, k).into_iter().map(|g| g.entries().to_vec()).collect();
    let alphas = derivative_orders(nvars, d);
    let betas = monomials_of_degree(nvars, m);
    cfg.guard(points.len() * alphas.len(), betas.len())?;
    let work: Vec<(Vec<u32>, Vec<u32>)> = points
        .iter()
        .flat_map(|pt| alphas.iter().map(move |a| (pt.clone(), a.clone())))
        .collect();
    let rows: Vec<Vec<CycNumber>> = map_items(cfg.mode, work, |(pt, alpha)| {
        betas.iter().map(|beta| derivative_value_at_point(beta, &alpha, &pt, &field)).collect()
    });
    let mat = ExactMatrix::from_rows(rows);
    Ok(BigUint::from(mat.rank(&field)))
}

/// HF of the quotient by the initial ideal (x_1^k, ..., x_n^k)^d in degree
/// m, by pure monomial counting: a monomial survives exactly when
/// sum_j floor(e_j / k) <= d-1 over the non-base variables.
pub fn initial_ideal_hf(n: u32, k: u32, d: u32, m: u32) -> BigUint {
    fn count(vars_left: u32, degree_left: u32, mult_budget: i64, k: u32) -> u64 {
        if mult_budget < 0 {
            return 0;
        }
        if vars_left == 0 {
            // the remaining degree goes on the unconstrained base variable x_0
            return 1;
        }
        let mut total = 0u64;
        for e in 0..=degree_left {
            total += count(vars_left - 1, degree_left - e, mult_budget - (e / k) as i64, k);
        }
        total
    }
    BigUint::from(count(n, m, d as i64 - 1, k))
}

/// Socle dimension of the quotient ring in each degree 0..kd-1: vectors
/// killed into the ideal by every variable, counted blockwise per
/// multicyclic degree from kernel ranks.
pub fn socle_dims(p: &Params, cfg: &OracleConfig) -> Result<Vec<BigUint>> {
    if p.k() != 2 {
        return Err(Error::InvalidParams(format!("socle computation is defined for k = 2, got k = {}", p.k())));
    }
    let field = RationalField;
    let psis = psi_family(p);
    let nvars = p.num_vars() as usize;
    let degrees: Vec<u32> = (0..p.vanishing_degree()).collect();
    let per_degree = map_items(cfg.mode, degrees, |i| -> Result<BigUint> {
        let mut socle = BigUint::zero();
        for h in Multicycle::all(p.n(), p.k()) {
            let basis = monomials_in_block(i, &h);
            if basis.is_empty() {
                continue;
            }
            let ideal_rank = mu_image_matrix(p, i, &h, &psis, cfg)?.rank(&field);
            // conditions: for each variable, x_l * v must land in the ideal
            // one degree up. Rows of N annihilate the ideal block, so the
            // condition is N * (multiplication-by-x_l matrix) * v = 0.
            let mut stacked: Option<ExactMatrix<BigRational>> = None;
            for l in 0..nvars {
                let h_up = h.add_unit(l);
                let target = monomials_in_block(i + 1, &h_up);
                let ideal_up = mu_image_matrix(p, i + 1, &h_up, &psis, cfg)?;
                let annihilators = ideal_up.left_nullspace(&field);
                if annihilators.rows() == 0 {
                    continue;
                }
                let mut mult = ExactMatrix::new(&field, target.len(), basis.len());
                for (c, m) in basis.iter().enumerate() {
                    let mut shifted = m.clone();
                    shifted[l] += 1;
                    mult.set(row_index(&target, &shifted), c, BigRational::one());
                }
                let conditions = annihilators.matmul(&field, &mult);
                stacked = Some(match stacked {
                    None => conditions,
                    Some(prev) => prev.vstack(&conditions),
                });
            }
            let kernel_dim = match stacked {
                None => basis.len(),
                Some(mat) => {
                    cfg.guard(mat.rows(), mat.cols())?;
                    basis.len() - mat.rank(&field)
                }
            };
            debug_assert!(kernel_dim >= ideal_rank);
            socle += BigUint::from(kernel_dim - ideal_rank);
        }
        Ok(socle)
    });
    per_degree.into_iter().collect()
}
