//! Link functions mapping constrained parameter domains onto the real line.
//!
//! Three mappings are available: identity, log (half line) and logit
//! (bounded interval). The filter recursion runs in linked space, so every
//! update stays inside the parameter domain by construction.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Jacobian magnitude past which a point is treated as numerically on the
/// domain boundary; the filter reports divergence instead of propagating it.
pub const JACOBIAN_GUARD: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LinkKind {
    /// f~ = f on the whole real line.
    Identity,
    /// f~ = ln(f - lower) for f > lower.
    Log { lower: f64 },
    /// f~ = ln((f - lower) / (upper - f)) for f in (lower, upper).
    Logit { lower: f64, upper: f64 },
}

impl LinkKind {
    /// Forward map h(f) into linked space.
    pub fn link(&self, f: f64) -> Result<f64> {
        match *self {
            LinkKind::Identity => Ok(f),
            LinkKind::Log { lower } => {
                if f > lower {
                    Ok((f - lower).ln())
                } else {
                    Err(Error::Domain(format!("log link needs f > {lower}, got {f}")))
                }
            }
            LinkKind::Logit { lower, upper } => {
                if f > lower && f < upper {
                    Ok(((f - lower) / (upper - f)).ln())
                } else {
                    Err(Error::Domain(format!(
                        "logit link needs f in ({lower}, {upper}), got {f}"
                    )))
                }
            }
        }
    }

    /// Inverse map h^-1; total on finite inputs.
    pub fn unlink(&self, f_tilde: f64) -> f64 {
        match *self {
            LinkKind::Identity => f_tilde,
            LinkKind::Log { lower } => lower + f_tilde.exp(),
            LinkKind::Logit { lower, upper } => {
                // Stable logistic on both tails.
                let s = if f_tilde >= 0.0 {
                    1.0 / (1.0 + (-f_tilde).exp())
                } else {
                    let e = f_tilde.exp();
                    e / (1.0 + e)
                };
                lower + (upper - lower) * s
            }
        }
    }

    /// Diagonal entry of the Jacobian dh/df at f.
    pub fn jacobian(&self, f: f64) -> Result<f64> {
        match *self {
            LinkKind::Identity => Ok(1.0),
            LinkKind::Log { lower } => {
                if f > lower {
                    Ok(1.0 / (f - lower))
                } else {
                    Err(Error::Domain(format!(
                        "log link Jacobian undefined at f = {f} (lower {lower})"
                    )))
                }
            }
            LinkKind::Logit { lower, upper } => {
                if f > lower && f < upper {
                    Ok((upper - lower) / ((f - lower) * (upper - f)))
                } else {
                    Err(Error::Domain(format!(
                        "logit link Jacobian undefined at f = {f} in ({lower}, {upper})"
                    )))
                }
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let LinkKind::Logit { lower, upper } = *self {
            if !(lower < upper) {
                return Err(Error::InvalidSpec(format!(
                    "logit link needs lower < upper, got ({lower}, {upper})"
                )));
            }
        }
        Ok(())
    }
}

/// Applies the componentwise link h to a natural-space parameter vector.
pub fn link(links: &[LinkKind], f: &[f64]) -> Result<Vec<f64>> {
    debug_assert_eq!(links.len(), f.len());
    links.iter().zip(f).map(|(l, &v)| l.link(v)).collect()
}

/// Applies the componentwise inverse h^-1 to a linked vector.
pub fn unlink(links: &[LinkKind], f_tilde: &[f64]) -> Vec<f64> {
    debug_assert_eq!(links.len(), f_tilde.len());
    links.iter().zip(f_tilde).map(|(l, &v)| l.unlink(v)).collect()
}

/// Diagonal of the Jacobian of h at f.
pub fn jacobian_link(links: &[LinkKind], f: &[f64]) -> Result<Vec<f64>> {
    debug_assert_eq!(links.len(), f.len());
    links.iter().zip(f).map(|(l, &v)| l.jacobian(v)).collect()
}
