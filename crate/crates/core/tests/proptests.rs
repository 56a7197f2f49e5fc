use num_bigint::BigInt;
use powideal::hilbert::{hf_table, numerator_from_hf, Method};
use powideal::numerics::{binomial, expand_series, multinomial, one_minus_t_pow, UniPoly};
use powideal::oracle::{ExactMatrix, RationalField};
use powideal::{Params, SparseIntPoly};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..8).prop_map(|cs| UniPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

fn small_sparse(nvars: usize) -> impl Strategy<Value = SparseIntPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5), 0..6).prop_map(move |terms| {
        let mut p = SparseIntPoly::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn binomial_pascal_recurrence(a in 1i64..120, b in -3i64..123) {
        prop_assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
    }

    #[test]
    fn binomial_symmetry(a in 0i64..120, b in 0i64..120) {
        if b <= a {
            prop_assert_eq!(binomial(a, b), binomial(a, a - b));
        }
    }

    #[test]
    fn multinomial_is_iterated_binomial(parts in prop::collection::vec(0i64..8, 1..5)) {
        let total: i64 = parts.iter().sum();
        let mut expected = binomial(total, parts[0]);
        let mut rest = total - parts[0];
        for &p in &parts[1..] {
            expected *= binomial(rest, p);
            rest -= p;
        }
        prop_assert_eq!(multinomial(total, &parts), expected);
    }

    #[test]
    fn multinomial_permutation_invariant(mut parts in prop::collection::vec(0i64..8, 2..5)) {
        let total: i64 = parts.iter().sum();
        let before = multinomial(total, &parts);
        parts.reverse();
        prop_assert_eq!(multinomial(total, &parts), before);
    }

    #[test]
    fn expand_series_absorbs_denominator_factor(p in small_poly(), e in 1u32..4, m in 0usize..12) {
        let shifted = p.mul(&one_minus_t_pow(1));
        prop_assert_eq!(expand_series(&shifted, e + 1, m), expand_series(&p, e, m));
    }

    #[test]
    fn unipoly_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), UniPoly::zero());
    }

    #[test]
    fn sparse_poly_ring_laws(a in small_sparse(3), b in small_sparse(3), c in small_sparse(3)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn numerator_round_trips_through_expansion(n in 0u32..4, k in 2u32..5, d in 1u32..6) {
        let p = Params::new(n, k, d).unwrap();
        let hf = hf_table(&p, Method::Conjectured).unwrap();
        let series = numerator_from_hf(&hf).unwrap();
        let expanded = expand_series(&series.numerator, series.denom_exponent, hf.values().len() + 4);
        for (i, v) in expanded.iter().enumerate() {
            let expected = if i < hf.values().len() {
                BigInt::from(hf.values()[i].clone())
            } else {
                BigInt::from(0)
            };
            prop_assert_eq!(v, &expected, "degree {}", i);
        }
    }

    #[test]
    fn rank_invariant_under_row_permutation(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..5), seed in 0u64..1000) {
        let to_mat = |rs: &[Vec<i64>]| {
            ExactMatrix::from_rows(
                rs.iter()
                    .map(|r| r.iter().map(|&v| num_rational::BigRational::from(BigInt::from(v))).collect())
                    .collect(),
            )
        };
        let base = to_mat(&rows);
        let mut shuffled = rows.clone();
        // cheap deterministic shuffle
        let len = shuffled.len();
        for i in 0..len {
            let j = (seed as usize + i * 7) % len;
            shuffled.swap(i, j);
        }
        prop_assert_eq!(to_mat(&shuffled).rank(&RationalField), base.rank(&RationalField));
    }
}
