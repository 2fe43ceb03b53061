use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial in `T` with exact rational coefficients, together
/// with the rank from which it gives the true dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionPolynomial {
    /// Ascending: `coefficients[k]` multiplies `T^k`. No trailing zeros.
    coefficients: Vec<BigRational>,
    threshold: usize,
}

impl DimensionPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>, threshold: usize) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        DimensionPolynomial { coefficients, threshold }
    }

    pub fn zero(threshold: usize) -> Self {
        Self::new(Vec::new(), threshold)
    }

    pub fn constant(c: i64, threshold: usize) -> Self {
        Self::new(vec![BigRational::from_integer(c.into())], threshold)
    }

    /// Builds a polynomial from `(numerator, denominator)` pairs, ascending.
    pub fn from_ratios(coeffs: &[(i64, i64)], threshold: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
            threshold,
        )
    }

    /// The unique polynomial of degree `< xs.len()` through the given points.
    pub fn interpolate(points: &[(i64, BigInt)], threshold: usize) -> Self {
        // Newton divided differences, then expansion into the monomial basis.
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer((*x).into())).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from_integer(y.clone())).collect();
        let m = dd.len();
        for level in 1..m {
            for i in (level..m).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut coeffs = vec![BigRational::zero(); m.max(1)];
        let mut basis = vec![BigRational::one()];
        for (k, a) in dd.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                coeffs[j] += a * b;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] += b;
                next[j] -= b * &xs[k];
            }
            basis = next;
        }
        Self::new(coeffs, threshold)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coefficients.last()
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn with_threshold(mut self, threshold: usize) -> Self {
        self.threshold = threshold;
        self
    }

    pub fn evaluate(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(t.into());
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Value at `t` when it is an integer.
    pub fn evaluate_integer(&self, t: i64) -> Option<BigInt> {
        let v = self.evaluate(t);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn scaled(&self, factor: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect(), self.threshold)
    }
}

impl Add<&DimensionPolynomial> for &DimensionPolynomial {
    type Output = DimensionPolynomial;

    fn add(self, rhs: &DimensionPolynomial) -> DimensionPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coefficients.get(k).cloned().unwrap_or_default();
                let b = rhs.coefficients.get(k).cloned().unwrap_or_default();
                a + b
            })
            .collect();
        DimensionPolynomial::new(coeffs, self.threshold.max(rhs.threshold))
    }
}

impl fmt::Display for DimensionPolynomial {
    /// Highest power first, e.g. `1/2*T^3 - 1/2*T^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("T")?,
                _ => write!(f, "T^{k}")?,
            }
        }
        Ok(())
    }
}
