use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A finite cochain complex `C^0 → C^1 → ... → C^N` given by its differentials.
///
/// `differentials[p]` is the matrix of `d^p: C^p → C^{p+1}` acting on column vectors, so it has
/// `dims[p+1]` rows and `dims[p]` columns. Complexes may start in any degree: `start` is the
/// degree of `dims[0]`.
#[derive(Clone)]
pub struct CochainComplex<T> {
    start: i64,
    dims: Vec<usize>,
    differentials: Vec<Matrix<T>>,
}

impl<T: Scalar> CochainComplex<T> {
    /// Panics when shapes do not compose; `differentials` must have one entry fewer than `dims`
    /// (or both are empty).
    pub fn new(start: i64, dims: Vec<usize>, differentials: Vec<Matrix<T>>) -> Self {
        assert_eq!(
            differentials.len() + 1,
            dims.len().max(1),
            "need one differential between consecutive spaces"
        );
        for (p, d) in differentials.iter().enumerate() {
            assert_eq!(d.ncols(), dims[p], "d^{p} has the wrong number of columns");
            assert_eq!(d.nrows(), dims[p + 1], "d^{p} has the wrong number of rows");
        }
        CochainComplex {
            start,
            dims,
            differentials,
        }
    }

    pub fn zero() -> Self {
        CochainComplex {
            start: 0,
            dims: Vec::new(),
            differentials: Vec::new(),
        }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Degrees `start..start + len` carrying a (possibly zero) space.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.dims.len()).map(move |i| self.start + i as i64)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, p: i64) -> usize {
        self.slot(p).map_or(0, |i| self.dims[i])
    }

    pub fn differential(&self, p: i64) -> Option<&Matrix<T>> {
        self.slot(p).and_then(|i| self.differentials.get(i))
    }

    fn slot(&self, p: i64) -> Option<usize> {
        let i = p - self.start;
        (i >= 0 && (i as usize) < self.dims.len()).then_some(i as usize)
    }

    /// Rank of `d^p` for each `p`, in order.
    pub fn ranks(&self) -> Vec<usize> {
        self.differentials.iter().map(Matrix::rank).collect()
    }

    /// `dim H^p = dim C^p − rank d^p − rank d^{p−1}` for every degree of the complex.
    pub fn cohomology_dims(&self) -> Vec<(i64, usize)> {
        let ranks = self.ranks();
        (0..self.dims.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i > 0 { ranks[i - 1] } else { 0 };
                (self.start + i as i64, self.dims[i] - out - inc)
            })
            .collect()
    }

    /// Whether every composite `d^{p+1} d^p` is exactly zero.
    pub fn is_complex(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[1].mul(&w[0]).is_zero())
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(self.degrees().zip(self.dims.iter().copied()))
    }
}

impl<T: Scalar> std::fmt::Debug for CochainComplex<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CochainComplex")
            .field("start", &self.start)
            .field("dims", &self.dims)
            .finish()
    }
}

/// `Σ (−1)^p · dims[p]`.
pub fn alternating_sum(entries: impl IntoIterator<Item = (i64, usize)>) -> i64 {
    entries
        .into_iter()
        .map(|(p, d)| {
            if p.rem_euclid(2) == 0 {
                d as i64
            } else {
                -(d as i64)
            }
        })
        .sum()
}

/// Euler characteristic of a complex: the alternating sum of the dimensions of its spaces.
pub fn euler_characteristic<T: Scalar>(complex: &CochainComplex<T>) -> i64 {
    complex.euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn zero_complex() {
        let c = CochainComplex::<Rational>::zero();
        assert_eq!(c.euler_characteristic(), 0);
        assert!(c.cohomology_dims().is_empty());
    }

    #[test]
    fn exact_two_term() {
        let d = Matrix::<Rational>::from_i64_rows(&[vec![1, 2], vec![0, 3]]);
        let c = CochainComplex::new(0, vec![2, 2], vec![d]);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.cohomology_dims(), vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn cohomology_and_euler_agree() {
        let d0 = Matrix::<Rational>::from_i64_rows(&[vec![1], vec![0], vec![0]]);
        let d1 = Matrix::<Rational>::from_i64_rows(&[vec![0, 1, 0]]);
        let c = CochainComplex::new(-1, vec![1, 3, 1], vec![d0, d1]);
        assert!(c.is_complex());
        let h = c.cohomology_dims();
        assert_eq!(h, vec![(-1, 0), (0, 1), (1, 0)]);
        assert_eq!(c.euler_characteristic(), alternating_sum(h));
    }
}
