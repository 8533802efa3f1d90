//! Shapiro-Wilk test with Royston's (1992) approximations for the weights and
//! the p-value (algorithm AS R94).

use serde::{Deserialize, Serialize};

use super::normal;
use super::sorted_finite;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest sample size the p-value approximation was validated for.
pub const SW_MAX_VALIDATED_N: usize = 5000;

const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
const C3: [f64; 4] = [0.5440, -0.39978, 0.025054, -6.714e-4];
const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];
const G: [f64; 2] = [-2.273, 0.459];

/// `c[0] + c[1] x + c[2] x² + ...`
fn poly(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

/// Weights applied to the ascending order statistics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SwCoefficients<T> {
    pub n: usize,
    /// Antisymmetric, unit norm, positive at index 0.
    pub weights: Vec<T>,
}

pub fn sw_coefficients<T: Scalar>(n: usize) -> Result<SwCoefficients<T>> {
    if n < 3 {
        return Err(Error::SampleTooSmall { needed: 3, got: n });
    }
    let half = n / 2;
    let mut a = vec![0.0f64; half];
    if n == 3 {
        a[0] = std::f64::consts::FRAC_1_SQRT_2;
    } else {
        let an = n as f64;
        let an25 = an + 0.25;
        let m: Vec<f64> = (1..=half)
            .map(|i| normal::ppf((i as f64 - 0.375) / an25))
            .collect();
        let summ2 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
        let ssumm2 = summ2.sqrt();
        let rsn = 1.0 / an.sqrt();
        let a1 = poly(&C1, rsn) - m[0] / ssumm2;
        a[0] = a1;
        let (first, fac) = if n > 5 {
            let a2 = -m[1] / ssumm2 + poly(&C2, rsn);
            a[1] = a2;
            let num = summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1];
            let den = 1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2;
            (2, (num / den).sqrt())
        } else {
            let num = summ2 - 2.0 * m[0] * m[0];
            let den = 1.0 - 2.0 * a1 * a1;
            (1, (num / den).sqrt())
        };
        for i in first..half {
            a[i] = -m[i] / fac;
        }
    }
    let mut weights = vec![T::zero(); n];
    for (i, &ai) in a.iter().enumerate() {
        weights[i] = T::lit(ai);
        weights[n - 1 - i] = T::lit(-ai);
    }
    Ok(SwCoefficients { n, weights })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapiroWilk<T> {
    pub statistic: T,
    pub p_value: T,
    pub n: usize,
}

impl<T> ShapiroWilk<T> {
    /// True when the p-value is extrapolated past the validated sample range.
    pub fn beyond_validated_range(&self) -> bool {
        self.n > SW_MAX_VALIDATED_N
    }
}

/// Shapiro-Wilk `W` and its p-value.
pub fn shapiro_wilk<T: Scalar>(sample: &[T]) -> Result<ShapiroWilk<T>> {
    let n = sample.len();
    if n < 3 {
        return Err(Error::SampleTooSmall { needed: 3, got: n });
    }
    let x = sorted_finite(sample)?;
    if x[0] == x[n - 1] {
        return Err(Error::ZeroVariance);
    }
    let mean = x.iter().copied().sum::<T>() / T::from_count(n);
    let ssq: T = x.iter().map(|&v| (v - mean) * (v - mean)).sum();
    if ssq <= T::zero() {
        return Err(Error::ZeroVariance);
    }
    let coef = sw_coefficients::<T>(n)?;
    let num: T = coef
        .weights
        .iter()
        .zip(&x)
        .map(|(&w, &v)| w * (v - mean))
        .sum();
    let statistic = num * num / ssq;
    let p = sw_p_value(statistic.as_f64(), n);
    Ok(ShapiroWilk {
        statistic,
        p_value: T::lit(p),
        n,
    })
}

/// Royston's normalizing transformation of `W`.
fn sw_p_value(w: f64, n: usize) -> f64 {
    if w >= 1.0 {
        return 1.0;
    }
    if n == 3 {
        let p = 6.0 / std::f64::consts::PI * (w.sqrt().asin() - std::f64::consts::FRAC_PI_3);
        return p.clamp(0.0, 1.0);
    }
    let an = n as f64;
    let mut y = (1.0 - w).ln();
    let (m, s) = if n <= 11 {
        let gamma = poly(&G, an);
        if y >= gamma {
            return 1e-99;
        }
        y = -(gamma - y).ln();
        (poly(&C3, an), poly(&C4, an).exp())
    } else {
        let ln_n = an.ln();
        (poly(&C5, ln_n), poly(&C6, ln_n).exp())
    };
    normal::sf((y - m) / s)
}
