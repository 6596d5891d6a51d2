use num_bigint::BigInt;

use super::{HHProfile, HomologyError, Method};
use crate::families::{an_batches, fibonacci_value, FamilyError};

/// Dimension of `HH^n(A_n(x̄, ȳ))`:
///
/// * even `n`: `F_{n−1}(ȳ, Sx̄) · ∏_{i ≤ n/2} x_i y_i`
/// * odd `n`: `F_{n+1}(x̄, ȳ) · x_{(n+1)/2} · ∏_{i ≤ (n−1)/2} x_i y_i − 2`
pub fn hh_top_formula(n: usize, xs: &[u64], ys: &[u64]) -> Result<BigInt, FormulaError> {
    if n < 2 {
        return Err(HomologyError::DomainError(n).into());
    }
    let (alpha_batches, beta_batches) = an_batches(n);
    if xs.len() < alpha_batches {
        return Err(FamilyError::SequenceTooShort {
            name: "x",
            needed: alpha_batches,
            got: xs.len(),
        }
        .into());
    }
    if ys.len() < beta_batches {
        return Err(FamilyError::SequenceTooShort {
            name: "y",
            needed: beta_batches,
            got: ys.len(),
        }
        .into());
    }
    let m = n / 2;
    let product: BigInt = (0..m)
        .map(|i| BigInt::from(xs[i]) * BigInt::from(ys[i]))
        .product();
    if n.is_multiple_of(2) {
        let shifted: Vec<u64> = xs[1..].to_vec();
        let f = fibonacci_value(ys, &shifted, n - 1)?;
        Ok(BigInt::from(f) * product)
    } else {
        let f = fibonacci_value(xs, ys, n + 1)?;
        Ok(BigInt::from(f) * BigInt::from(xs[n.div_ceil(2) - 1]) * product - 2)
    }
}

/// `dim HH^n(A_n(x̄, ȳ))` with the image of the last Koszul differential counted in full. For odd
/// `n = 2m + 1` every cycle `α_{m+1}β_m⋯β_1` at vertex 2 and every cycle `β_m⋯β_1α_1` at vertex 1
/// contributes its own rank-one piece, so the subtracted term is
/// `∏_{i ≤ m} y_i · (x_{m+1} ∏_{2 ≤ i ≤ m} x_i + ∏_{i ≤ m} x_i)` rather than 2. Both agree when
/// those products are all 1 and for even `n`.
pub fn hh_top_formula_revised(n: usize, xs: &[u64], ys: &[u64]) -> Result<BigInt, FormulaError> {
    let published = hh_top_formula(n, xs, ys)?;
    if n.is_multiple_of(2) {
        return Ok(published);
    }
    let m = (n - 1) / 2;
    let x_all: BigInt = xs[..m].iter().map(|&v| BigInt::from(v)).product();
    let x_inner: BigInt = xs[1..m.max(1)].iter().map(|&v| BigInt::from(v)).product();
    let y_all: BigInt = ys[..m].iter().map(|&v| BigInt::from(v)).product();
    let image = y_all * (BigInt::from(xs[m]) * x_inner + x_all);
    Ok(published + 2 - image)
}

/// Errors of the closed-form evaluations: either the domain check or a sequence problem.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `HH^*(B(x, y))`: `{0: xy + 1, 1: x² + y² − 1, 2: xy}` when `x + y ≥ 1`, and `{0: 2}` for
/// `B(0, 0)`.
pub fn hh_b_formula(x: u64, y: u64) -> HHProfile {
    if x == 0 && y == 0 {
        return HHProfile::from_pairs(Method::Formula, [(0, 2)]);
    }
    HHProfile::from_pairs(
        Method::Formula,
        [(0, x * y + 1), (1, x * x + y * y - 1), (2, x * y)],
    )
}
