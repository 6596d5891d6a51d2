//! Fraction-free rank of integer matrices.
//!
//! Rows are inserted into an echelon basis using only integer row operations
//! (`b * row - a * pivot` with `a`, `b` divided by their gcd), and each row is divided by the gcd
//! of its entries afterwards. The computation runs in `i64` with overflow checks and restarts in
//! [`BigInt`] the first time an operation would overflow, so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::Matrix;

/// Integer types the elimination can run in.
trait ExactInt: Clone + Integer + Signed {
    fn checked_mul_(&self, other: &Self) -> Option<Self>;
    fn checked_sub_(&self, other: &Self) -> Option<Self>;
}

impl ExactInt for i64 {
    fn checked_mul_(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn checked_sub_(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
}

impl ExactInt for BigInt {
    fn checked_mul_(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub_(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
}

type IntRow<I> = Vec<(usize, I)>;

/// Rank over the rationals of a matrix given by sparse integer rows.
pub fn integer_rank(rows: &[Vec<(usize, i64)>], cols: usize) -> usize {
    match rank_with::<i64>(rows.iter().cloned(), cols) {
        Some(r) => r,
        None => {
            let big = rows
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, BigInt::from(*v))).collect());
            rank_with::<BigInt>(big, cols).expect("bigint elimination cannot overflow")
        }
    }
}

/// Rank of a rational matrix: clears denominators row by row, then eliminates over the integers.
pub fn rational_rank(m: &Matrix<BigRational>) -> usize {
    let big_rows: Vec<IntRow<BigInt>> = (0..m.nrows())
        .map(|i| clear_denominators(m.row(i)))
        .collect();
    let small: Option<Vec<IntRow<i64>>> = big_rows
        .iter()
        .map(|r| r.iter().map(|(j, v)| v.to_i64().map(|x| (*j, x))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = rank_with::<i64>(small.into_iter(), m.ncols()) {
            return r;
        }
    }
    rank_with::<BigInt>(big_rows.into_iter(), m.ncols())
        .expect("bigint elimination cannot overflow")
}

fn clear_denominators(row: &[(usize, BigRational)]) -> IntRow<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter()
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect()
}

fn rank_with<I: ExactInt>(rows: impl Iterator<Item = IntRow<I>>, cols: usize) -> Option<usize> {
    let mut rows: Vec<IntRow<I>> = rows.filter(|r| !r.is_empty()).collect();
    // sparse rows with early leading columns first keeps fill-in down
    rows.sort_by_key(|r| (r[0].0, r.len()));
    let mut basis: Vec<Option<IntRow<I>>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        loop {
            let Some((c, a)) = row.first().cloned() else {
                break;
            };
            match &basis[c] {
                Some(pivot) => {
                    let b = pivot[0].1.clone();
                    let g = a.gcd(&b);
                    row = combine(&row, &(b / g.clone()), pivot, &(a / g))?;
                    primitive(&mut row);
                }
                None => {
                    primitive(&mut row);
                    basis[c] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `s * a - t * b`, dropping zeros.
fn combine<I: ExactInt>(a: &[(usize, I)], s: &I, b: &[(usize, I)], t: &I) -> Option<IntRow<I>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, a[i].1.checked_mul_(s)?));
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, I::zero().checked_sub_(&b[j].1.checked_mul_(t)?)?));
            j += 1;
        } else {
            let v = a[i]
                .1
                .checked_mul_(s)?
                .checked_sub_(&b[j].1.checked_mul_(t)?)?;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn primitive<I: ExactInt>(row: &mut IntRow<I>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let negative = first.1.is_negative();
    if !g.is_one() || negative {
        let g = if negative { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}
