//! Normality tests and histogram binning.

mod anderson;
mod histogram;
pub mod normal;
mod shapiro;

pub use anderson::{
    ad_critical, anderson_darling, AndersonDarling, AD_BASE_CRITICAL, AD_FIVE_PERCENT,
    AD_SIGNIFICANCE_LEVELS,
};
pub use histogram::{histogram, Histogram};
pub use shapiro::{shapiro_wilk, sw_coefficients, ShapiroWilk, SwCoefficients, SW_MAX_VALIDATED_N};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const DEFAULT_ALPHA: f64 = 0.05;

/// Copies and sorts the sample, rejecting NaN and infinities.
pub(crate) fn sorted_finite<T: Scalar>(sample: &[T]) -> Result<Vec<T>> {
    if sample.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut x = sample.to_vec();
    x.sort_by(|a, b| a.partial_cmp(b).expect("finite values compare"));
    Ok(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub sw_normal: bool,
    pub ad_normal: bool,
}

/// Shapiro-Wilk accepts normality when `p >= alpha`; Anderson-Darling when
/// `A²` does not exceed the critical value.
pub fn decide<T: Scalar>(sw_p: T, ad_stat: T, ad_crit_5: T, alpha: T) -> Decision {
    Decision {
        sw_normal: sw_p >= alpha,
        ad_normal: ad_stat <= ad_crit_5,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalityReport<T> {
    pub n: usize,
    pub sw_stat: T,
    pub sw_p: T,
    pub sw_normal: bool,
    pub ad_stat: T,
    pub ad_crit_5: T,
    /// At 15, 10, 5, 2.5 and 1 percent.
    pub ad_critical_values: [T; 5],
    pub ad_normal: bool,
    pub alpha: T,
    pub warnings: Vec<String>,
}

/// Runs both tests and applies [`decide`].
pub fn normality_report<T: Scalar>(sample: &[T], alpha: T) -> Result<NormalityReport<T>> {
    let sw = shapiro_wilk(sample)?;
    let ad = anderson_darling(sample)?;
    let decision = decide(sw.p_value, ad.statistic, ad.critical_5(), alpha);
    let mut warnings = Vec::new();
    if sw.beyond_validated_range() {
        warnings.push(format!(
            "Shapiro-Wilk p-value beyond validated range (n = {} > {SW_MAX_VALIDATED_N})",
            sw.n
        ));
    }
    Ok(NormalityReport {
        n: sample.len(),
        sw_stat: sw.statistic,
        sw_p: sw.p_value,
        sw_normal: decision.sw_normal,
        ad_stat: ad.statistic,
        ad_crit_5: ad.critical_5(),
        ad_critical_values: ad.critical_values,
        ad_normal: decision.ad_normal,
        alpha,
        warnings,
    })
}
