//! Radial expectation values: closed forms and quadrature cross-checks.
//!
//! Every power moment `⟨r^k⟩` of a bound state reduces to the weighted
//! Laguerre overlap
//!
//! ```text
//! ∫₀^∞ t^{α+s} e^{-t} [L_n^α(t)]² dt = Σ_{i=0}^{n} C(s, n-i)² Γ(α+s+1+i) / i!
//! ```
//!
//! with `α = 2β+1` and `s = k+1` (the density already carries `t^{α+1}`,
//! so the moment of `r^k` shifts the weight exponent by one more than `k`).
//! `C` is the generalized binomial, so non-integer and negative shifts are
//! fine as long as `α + s > -1`. The gamma factors are astronomically large
//! for molecular `β`; the sum is accumulated in the log domain and only the
//! final moment — always of modest size — is collapsed to `f64`.
//!
//! `⟨p²⟩` follows from the radial equation itself:
//! `⟨p²⟩ = 2μ(E - z) - 2μx⟨1/r⟩ - 2μy⟨1/r²⟩`, which is form-invariant
//! (the `z` shift cancels against the energy offset).
//!
//! Each closed form has a quadrature twin (`*_quad`) integrating the
//! defining `∫ψ² r^{2+k} dr` directly; the two paths agree to ~1e-10 and
//! the test suites pin that.

use crate::kratzer::BoundState;
use crate::quadrature::{integrate_semiinf, QuadratureError};
use crate::specfun::{gen_binomial, log_gamma, ScaledValue};

/// The weighted overlap `∫₀^∞ t^{α+s} e^{-t} [L_n^α(t)]² dt`, log-domain
/// (it overflows `f64` whenever `α` is large). Requires `α + s > -1`.
pub fn laguerre_weighted_moment(n: u32, alpha: f64, shift: f64) -> ScaledValue {
    assert!(
        alpha + shift > -1.0,
        "laguerre_weighted_moment: weight exponent {} not integrable",
        alpha + shift
    );
    // all terms are non-negative: squared binomial times Γ of a positive
    // argument; accumulate with a running max-shift
    let mut lns: Vec<f64> = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let c = gen_binomial(shift, n - i);
        if c == 0.0 {
            continue;
        }
        lns.push(
            2.0 * c.abs().ln() + log_gamma(alpha + shift + 1.0 + i as f64)
                - log_gamma(i as f64 + 1.0),
        );
    }
    let max = lns.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = lns.iter().map(|&ln| (ln - max).exp()).sum();
    ScaledValue::new(max + sum.ln(), 1)
}

/// Closed-form `⟨r^k⟩` for real `k` with `2β + 2 + k > -1`.
pub fn expect_r_pow(bs: &BoundState, k: f64) -> f64 {
    let alpha = bs.laguerre_order();
    let lag = laguerre_weighted_moment(bs.state.n, alpha, k + 1.0);
    (bs.ln_norm_sq - (2.0 * bs.beta + 3.0 + k) * bs.xi.ln() + lag.log_magnitude).exp()
}

pub fn expect_inv_r(bs: &BoundState) -> f64 {
    expect_r_pow(bs, -1.0)
}

pub fn expect_inv_r_sq(bs: &BoundState) -> f64 {
    expect_r_pow(bs, -2.0)
}

pub fn expect_r(bs: &BoundState) -> f64 {
    expect_r_pow(bs, 1.0)
}

pub fn expect_r_sq(bs: &BoundState) -> f64 {
    expect_r_pow(bs, 2.0)
}

/// `⟨ξr⟩`, the moment entering the Shannon-entropy decomposition.
pub fn expect_xi_r(bs: &BoundState) -> f64 {
    bs.xi * expect_r(bs)
}

/// The closed-form normalization integral `∫ψ² r² dr`; equals 1 for every
/// state and doubles as a self-test of the normalization constant.
pub fn norm_closed(bs: &BoundState) -> f64 {
    expect_r_pow(bs, 0.0)
}

/// `⟨p²⟩` from the radial equation (no momentum-space grid needed).
pub fn expect_p_sq(bs: &BoundState) -> f64 {
    let p = &bs.params;
    2.0 * p.mu * (bs.energy - p.z) - 2.0 * p.mu * p.x * expect_inv_r(bs)
        - 2.0 * p.mu * p.y * expect_inv_r_sq(bs)
}

/// Quadrature twin of [`expect_r_pow`]: integrates `∫ψ² r^{2+k} dr`
/// directly. `abs_tol` is on the integral itself. Requires `k >= -2`
/// (below that the integrand needs the log-domain treatment the closed
/// form already provides).
pub fn expect_r_pow_quad(bs: &BoundState, k: f64, abs_tol: f64) -> Result<f64, QuadratureError> {
    assert!(k >= -2.0, "expect_r_pow_quad: k = {k} out of range");
    let splits = bs.radial_splits();
    let r = integrate_semiinf(
        |r| {
            if r == 0.0 {
                // r^{2+k} is 1 for k = -2 and 0 for k > -2; density(0) is
                // itself 0 unless β = 0
                if 2.0 + k == 0.0 {
                    bs.density(0.0)
                } else {
                    0.0
                }
            } else {
                bs.density(r) * r.powf(2.0 + k)
            }
        },
        &splits,
        bs.decay_scale(),
        abs_tol,
    )?;
    Ok(r.value)
}

/// Quadrature twin of [`expect_p_sq`], composed from the quadrature moments.
pub fn expect_p_sq_quad(bs: &BoundState, abs_tol: f64) -> Result<f64, QuadratureError> {
    let p = &bs.params;
    let inv_r = expect_r_pow_quad(bs, -1.0, abs_tol)?;
    let inv_r_sq = expect_r_pow_quad(bs, -2.0, abs_tol)?;
    Ok(2.0 * p.mu * (bs.energy - p.z) - 2.0 * p.mu * p.x * inv_r - 2.0 * p.mu * p.y * inv_r_sq)
}
