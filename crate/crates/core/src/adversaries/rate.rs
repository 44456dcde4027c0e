use crate::error::{Error, Result};

/// `D(a || p)` in bits.
pub fn kl_divergence(a: f64, p: f64) -> Result<f64> {
    let open = |v: f64| v > 0.0 && v < 1.0;
    if !open(a) || !open(p) {
        return Err(Error::DomainError(format!("D({a} || {p}) needs both arguments in (0, 1)")));
    }
    Ok(a * (a / p).log2() + (1.0 - a) * ((1.0 - a) / (1.0 - p)).log2())
}

/// Which constant multiplies `(1 - alpha) / alpha` inside the divergence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RateVariant {
    /// `c = 2`, as in the headline statement.
    Abstract,
    /// `c = 4`, as in the last step of the argument.
    Proof,
}

impl RateVariant {
    pub fn constant(self) -> f64 {
        match self {
            RateVariant::Abstract => 2.0,
            RateVariant::Proof => 4.0,
        }
    }
}

/// `(alpha / 2) D(c (1 - alpha) / alpha || 1/4)`, for `alpha` in `(16/17, 1)`.
pub fn approx_lb_rate(alpha: f64, variant: RateVariant) -> Result<f64> {
    if !(alpha > 16.0 / 17.0 && alpha < 1.0) {
        return Err(Error::DomainError(format!("alpha = {alpha} is outside (16/17, 1)")));
    }
    let inner = variant.constant() * (1.0 - alpha) / alpha;
    if !(inner > 0.0 && inner < 0.25) {
        return Err(Error::DomainError(format!("inner argument {inner} is outside (0, 1/4)")));
    }
    Ok(alpha / 2.0 * kl_divergence(inner, 0.25)?)
}
