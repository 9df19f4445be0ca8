//! Closed-form counts for the growth process: triangle, edge and pool-size
//! formulas, plus the exact big-integer history counts.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::growth::GrowthMode;

/// Arbitrary-precision non-negative count; multiplication never rounds.
pub type BigCount = BigUint;

fn check_seed_order(m: usize) -> Result<()> {
    if m < 4 {
        return Err(Error::InvalidParameter(format!(
            "seed order must be at least 4, got {m}"
        )));
    }
    Ok(())
}

/// Number of triangles after `i` growth steps on a seed of order `m`:
/// `m + 3i` for `m = 4` (the seed K4 has one extra, non-hub triangle),
/// `m - 1 + 3i` otherwise.
pub fn triangle_count_formula(m: usize, i: usize) -> Result<usize> {
    check_seed_order(m)?;
    Ok(if m == 4 { m + 3 * i } else { m - 1 + 3 * i })
}

/// Edge count of an order-`n` graph grown from a seed of order `m`:
/// `3n - m - 2`, which reduces to `2(m-1)` at `n = m`.
pub fn edge_count_formula(m: usize, n: usize) -> Result<usize> {
    check_seed_order(m)?;
    if n < m {
        return Err(Error::InvalidParameter(format!(
            "order {n} below seed order {m}"
        )));
    }
    Ok(3 * n - m - 2)
}

/// Size of the choosable pool after `i` steps: `m - 1 + 2i`, except that in
/// all-3-cycles mode the `m = 4` seed also exposes its rim triangle, giving
/// `m + 2i`.
pub fn choosable_count_formula(m: usize, i: usize, mode: GrowthMode) -> Result<usize> {
    check_seed_order(m)?;
    let base = if m == 4 && mode == GrowthMode::AllThreeCycles {
        m
    } else {
        m - 1
    };
    Ok(base + 2 * i)
}

fn check_strict_pair(m: usize, n: usize) -> Result<()> {
    check_seed_order(m)?;
    if n <= m {
        return Err(Error::InvalidParameter(format!(
            "order {n} must exceed seed order {m}"
        )));
    }
    Ok(())
}

/// The published counting product, reproduced verbatim including its index
/// range: `prod_{i=0}^{n-m} (m - 1 + 2i)`. The range runs one step past the
/// last choice actually made, so this over-counts histories; see
/// [`count_histories`] for the corrected value.
pub fn count_paper_formula(m: usize, n: usize) -> Result<BigCount> {
    check_strict_pair(m, n)?;
    let mut acc = BigCount::one();
    for i in 0..=(n - m) {
        acc *= BigCount::from(m - 1 + 2 * i);
    }
    Ok(acc)
}

/// Number of distinct construction histories reaching order `n`: the product
/// of the pool sizes at the moments a choice is made,
/// `prod_{i=0}^{n-m-1} choosable_count_formula(m, i, mode)`.
/// The empty product gives 1 at `n = m`.
pub fn count_histories(m: usize, n: usize, mode: GrowthMode) -> Result<BigCount> {
    check_seed_order(m)?;
    if n < m {
        return Err(Error::InvalidParameter(format!(
            "order {n} below seed order {m}"
        )));
    }
    let mut acc = BigCount::one();
    for i in 0..(n - m) {
        acc *= BigCount::from(choosable_count_formula(m, i, mode)?);
    }
    Ok(acc)
}

/// Closed form of the published product: `(m-1) * prod_{i=0}^{n-m-1} (m+1+2i)`,
/// the exact-integer expansion of `(m-1) * 2^{n-m} * ((m+1)/2)_{n-m}` with the
/// rising factorial unrolled term by term. Always equals
/// [`count_paper_formula`]; the equivalent Gamma-ratio form is never evaluated
/// in floating point.
pub fn count_closed_form(m: usize, n: usize) -> Result<BigCount> {
    check_strict_pair(m, n)?;
    let mut acc = BigCount::from(m - 1);
    for i in 0..(n - m) {
        acc *= BigCount::from(m + 1 + 2 * i);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_formula_values() {
        assert_eq!(triangle_count_formula(4, 0).unwrap(), 4);
        assert_eq!(triangle_count_formula(4, 5).unwrap(), 19);
        assert_eq!(triangle_count_formula(6, 3).unwrap(), 14);
        assert!(triangle_count_formula(3, 0).is_err());
    }

    #[test]
    fn edge_formula_values() {
        assert_eq!(edge_count_formula(4, 7).unwrap(), 15);
        assert_eq!(edge_count_formula(5, 9).unwrap(), 20);
        for m in 4..=10 {
            assert_eq!(edge_count_formula(m, m).unwrap(), 2 * (m - 1));
        }
        assert!(edge_count_formula(5, 4).is_err());
    }

    #[test]
    fn choosable_formula_values() {
        assert_eq!(
            choosable_count_formula(5, 0, GrowthMode::AllThreeCycles).unwrap(),
            4
        );
        assert_eq!(
            choosable_count_formula(5, 1, GrowthMode::AllThreeCycles).unwrap(),
            6
        );
        assert_eq!(
            choosable_count_formula(4, 0, GrowthMode::AllThreeCycles).unwrap(),
            4
        );
        assert_eq!(
            choosable_count_formula(4, 0, GrowthMode::PlanarFaces).unwrap(),
            3
        );
    }

    #[test]
    fn paper_formula_values() {
        assert_eq!(count_paper_formula(4, 5).unwrap(), BigCount::from(15u32));
        assert_eq!(count_paper_formula(5, 6).unwrap(), BigCount::from(24u32));
        assert_eq!(count_paper_formula(5, 8).unwrap(), BigCount::from(1920u32));
        assert!(count_paper_formula(5, 5).is_err());
    }

    #[test]
    fn history_count_values() {
        let all = GrowthMode::AllThreeCycles;
        assert_eq!(count_histories(5, 6, all).unwrap(), BigCount::from(4u32));
        assert_eq!(count_histories(5, 7, all).unwrap(), BigCount::from(24u32));
        assert_eq!(count_histories(4, 5, all).unwrap(), BigCount::from(4u32));
        assert_eq!(
            count_histories(4, 5, GrowthMode::PlanarFaces).unwrap(),
            BigCount::from(3u32)
        );
        assert_eq!(count_histories(6, 6, all).unwrap(), BigCount::one());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(count_closed_form(4, 5).unwrap(), BigCount::from(15u32));
        assert_eq!(count_closed_form(5, 8).unwrap(), BigCount::from(1920u32));
    }

    #[test]
    fn closed_form_equals_paper_formula() {
        for m in 4..=10 {
            for n in m + 1..=m + 20 {
                assert_eq!(
                    count_closed_form(m, n).unwrap(),
                    count_paper_formula(m, n).unwrap(),
                    "mismatch at m={m} n={n}"
                );
            }
        }
    }
}
