//! Fisher information, Shannon entropy, Fisher–Shannon complexity, and the
//! uncertainty-type bounds relating them.
//!
//! Conventions for a 3D state `ρ(r⃗) = ψ(r)² |Y_{lm}(θ,φ)|²` and its momentum
//! partner `γ(p⃗) = Ξ(p)² |Y_{lm}|²`:
//!
//! * Fisher information `I_ρ = ∫ |∇ρ|²/ρ`, which for these states collapses
//!   to `4⟨p²⟩ − 2(2l+1)|m|⟨r⁻²⟩` (and the mirror image with `r ↔ p`).
//! * Shannon entropy `S_ρ = −∫ρ ln ρ`, which splits into a radial part plus
//!   an angular part common to both spaces.
//! * Complexity `C = I·e^{bS}` for a shape exponent `b` (the `b = 2/3`
//!   member is dimensionless; `b = 1` weights entropy more heavily).
//!
//! Everything analytic is computed in closed form; quadrature twins exist
//! for cross-checking, and grid-based momentum quantities take a tabulated
//! [`MomentumDensity`].

use crate::kratzer::{BoundState, QuantumState};
use crate::moments::{expect_inv_r_sq, expect_p_sq, expect_r_pow_quad, expect_r_sq, expect_xi_r};
use crate::pspace::{pmoment, MomentumDensity};
use crate::quadrature::{integrate_interval, integrate_semiinf, simpson_uniform, xlnx, QuadratureError};
use crate::specfun::{assoc_laguerre_scaled, assoc_legendre, sph_harm_sq};

use std::f64::consts::PI;

/// Lower bound on the position + momentum entropy sum in 3D,
/// `3(1 + ln π)`.
pub const ENTROPY_SUM_BOUND: f64 = 6.434_189_657_548_200_5;

#[derive(Debug, thiserror::Error)]
pub enum MeasureError {
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error("momentum Fisher information with m != 0 needs a tabulated momentum density (the inverse-square momentum moment has no closed form)")]
    MissingMomentumDensity,
}

/// Position-space Fisher information, fully closed-form:
/// `I_ρ = 4⟨p²⟩ − 2(2l+1)|m|⟨r⁻²⟩`.
pub fn fisher_r_analytic(bs: &BoundState) -> f64 {
    let l = bs.state.l as f64;
    let m_abs = bs.state.m.unsigned_abs() as f64;
    4.0 * expect_p_sq(bs) - 2.0 * (2.0 * l + 1.0) * m_abs * expect_inv_r_sq(bs)
}

/// Momentum-space Fisher information, `I_γ = 4⟨r²⟩ − 2(2l+1)|m|⟨p⁻²⟩`.
///
/// For `m = 0` this is closed-form; otherwise the `⟨p⁻²⟩` moment comes from
/// the tabulated density, and omitting it is an error rather than a silent
/// approximation.
pub fn fisher_p(bs: &BoundState, md: Option<&MomentumDensity>) -> Result<f64, MeasureError> {
    let base = 4.0 * expect_r_sq(bs);
    if bs.state.m == 0 {
        return Ok(base);
    }
    let md = md.ok_or(MeasureError::MissingMomentumDensity)?;
    assert_eq!(
        (md.n, md.l),
        (bs.state.n, bs.state.l),
        "momentum density grid belongs to a different radial state"
    );
    let l = bs.state.l as f64;
    let m_abs = bs.state.m.unsigned_abs() as f64;
    Ok(base - 2.0 * (2.0 * l + 1.0) * m_abs * pmoment(md, -2))
}

/// Quadrature twin of [`fisher_r_analytic`] for `m = 0` states, built from
/// the gradient form `I_ρ = 4[∫ψ'² r² dr + l(l+1)∫ψ² dr]`.
pub fn fisher_r_gradient(bs: &BoundState, abs_tol: f64) -> Result<f64, MeasureError> {
    assert_eq!(
        bs.state.m, 0,
        "the gradient form implemented here is the m = 0 reduction"
    );
    let splits = bs.radial_splits();
    let grad = integrate_semiinf(
        |r| {
            let d = bs.psi_radial_deriv(r).value();
            d * d * r * r
        },
        &splits,
        bs.decay_scale(),
        abs_tol,
    )?;
    let l = bs.state.l as f64;
    let centrifugal = if bs.state.l > 0 {
        l * (l + 1.0) * expect_r_pow_quad(bs, -2.0, abs_tol)?
    } else {
        0.0
    };
    Ok(4.0 * (grad.value + centrifugal))
}

/// Interior zeros of the associated Legendre function `P_l^m` on `(-1, 1)`.
fn legendre_zeros(l: u32, m_abs: u32) -> Vec<f64> {
    let expected = (l - m_abs) as usize;
    if expected == 0 {
        return Vec::new();
    }
    const GRID: usize = 2048;
    let sample = |u: f64| assoc_legendre(l, m_abs, u);
    let mut zeros = Vec::with_capacity(expected);
    let mut u_prev = -1.0 + 2.0 / GRID as f64;
    let mut f_prev = sample(u_prev);
    for i in 2..GRID {
        let u = -1.0 + 2.0 * i as f64 / GRID as f64;
        let f = sample(u);
        if f_prev == 0.0 {
            zeros.push(u_prev);
        } else if f_prev * f < 0.0 {
            let (mut a, mut b) = (u_prev, u);
            let mut fa = f_prev;
            for _ in 0..100 {
                let mid = 0.5 * (a + b);
                let fm = sample(mid);
                if fa * fm <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
                if b - a < 1e-15 {
                    break;
                }
            }
            zeros.push(0.5 * (a + b));
        }
        u_prev = u;
        f_prev = f;
    }
    assert_eq!(
        zeros.len(),
        expected,
        "P_{l}^{m_abs} zero scan found the wrong count"
    );
    zeros
}

/// Angular Shannon entropy `−∮ |Y_{lm}|² ln |Y_{lm}|² dΩ`.
///
/// Quadrature over `u = cos θ` with the partition seeded at the zeros of
/// `P_l^m`, where the log factor has integrable singularities.
pub fn shannon_angular(l: u32, m: i32) -> f64 {
    let m_abs = m.unsigned_abs();
    let zeros = legendre_zeros(l, m_abs);
    integrate_interval(
        |u| -2.0 * PI * xlnx(sph_harm_sq(l, m, u)),
        -1.0,
        1.0,
        &zeros,
        1e-11,
    )
    .expect("angular entropy quadrature is bounded and must converge")
    .value
}

/// Radial part of the position Shannon entropy, `−∫ ψ² ln ψ² r² dr`.
pub fn shannon_r_radial(bs: &BoundState, abs_tol: f64) -> Result<f64, QuadratureError> {
    let splits = bs.radial_splits();
    let q = integrate_semiinf(
        |r| {
            let ln_rho = bs.ln_density(r);
            if !ln_rho.is_finite() {
                return 0.0;
            }
            -ln_rho.exp() * ln_rho * r * r
        },
        &splits,
        bs.decay_scale(),
        abs_tol,
    )?;
    Ok(q.value)
}

/// Full 3D position Shannon entropy: radial part plus angular part.
pub fn shannon_r(bs: &BoundState, abs_tol: f64) -> Result<f64, QuadratureError> {
    Ok(shannon_r_radial(bs, abs_tol)? + shannon_angular(bs.state.l, bs.state.m))
}

/// Radial part of the momentum Shannon entropy from a tabulated density,
/// `−∫ Π ln Π p² dp` by composite Simpson on the grid.
pub fn shannon_p_radial(md: &MomentumDensity) -> f64 {
    let h = md.p[1] - md.p[0];
    let vals: Vec<f64> = md
        .density
        .iter()
        .zip(&md.p)
        .map(|(&d, &p)| -xlnx(d) * p * p)
        .collect();
    simpson_uniform(&vals, h)
}

/// Full 3D momentum Shannon entropy for the magnetic substate `m` (the
/// radial density is `m`-independent, the angular part is not).
pub fn shannon_p(md: &MomentumDensity, m: i32) -> f64 {
    shannon_p_radial(md) + shannon_angular(md.l, m)
}

/// The position entropy split along the factors of the density
/// `ρ = N² e^{-ξr} (r ξ)^{2β} … `: each field is the expectation of the log
/// of one factor, so the radial entropy is minus their sum. Mixing closed
/// forms (norm, exponential) with quadrature (power law, polynomial) makes
/// the sum a sharp end-to-end consistency check against the direct
/// single-integral entropy.
#[derive(Debug, Clone, Copy)]
pub struct ShannonDecomposition {
    /// `ln N²` — normalization contribution (closed form).
    pub norm_log: f64,
    /// `−⟨ξr⟩` — exponential factor (closed form).
    pub exponential: f64,
    /// `2β⟨ln r⟩` — power-law prefactor (quadrature).
    pub power_law: f64,
    /// `⟨ln L²⟩` — Laguerre polynomial factor (quadrature; 0 for n = 0).
    pub polynomial: f64,
    /// `∮|Y|² ln|Y|² dΩ` — orientation factor (= minus the angular entropy).
    pub angular: f64,
}

impl ShannonDecomposition {
    /// Radial entropy implied by the factor sum.
    pub fn radial(&self) -> f64 {
        -(self.norm_log + self.exponential + self.power_law + self.polynomial)
    }

    /// Full 3D entropy implied by the factor sum.
    pub fn total(&self) -> f64 {
        self.radial() - self.angular
    }
}

pub fn shannon_decomposition(
    bs: &BoundState,
    abs_tol: f64,
) -> Result<ShannonDecomposition, QuadratureError> {
    let splits = bs.radial_splits();
    let scale = bs.decay_scale();
    let xi = bs.xi;

    let power_law = if bs.beta == 0.0 {
        0.0
    } else {
        // 2β⟨ln r⟩ = 2β⟨ln(ξr)⟩ − 2β ln ξ, with the dimensionless log under
        // the integral so its magnitude stays O(ln t).
        let mean_ln_t = integrate_semiinf(
            |r| {
                let ln_rho = bs.ln_density(r);
                if !ln_rho.is_finite() {
                    return 0.0;
                }
                ln_rho.exp() * (xi * r).ln() * r * r
            },
            &splits,
            scale,
            abs_tol,
        )?
        .value;
        2.0 * bs.beta * (mean_ln_t - xi.ln())
    };

    let polynomial = if bs.state.n == 0 {
        0.0
    } else {
        let n = bs.state.n;
        let order = bs.laguerre_order();
        integrate_semiinf(
            |r| {
                let lag = assoc_laguerre_scaled(n, order, xi * r);
                if lag.sign == 0 {
                    return 0.0; // ρ ln L² → 0 at the polynomial's nodes
                }
                let ln_rho = bs.ln_density(r);
                if !ln_rho.is_finite() {
                    return 0.0;
                }
                ln_rho.exp() * (2.0 * lag.log_magnitude) * r * r
            },
            &splits,
            scale,
            abs_tol,
        )?
        .value
    };

    Ok(ShannonDecomposition {
        norm_log: bs.ln_norm_sq,
        exponential: -expect_xi_r(bs),
        power_law,
        polynomial,
        angular: -shannon_angular(bs.state.l, bs.state.m),
    })
}

/// Fisher–Shannon style complexity `C = I · e^{bS}`, assembled in the log
/// domain so a large `|bS|` cannot overflow an intermediate even when the
/// product itself is representable.
pub fn complexity(info: f64, entropy: f64, b: f64) -> f64 {
    assert!(
        info > 0.0 && info.is_finite(),
        "complexity needs a positive finite information value, got {info}"
    );
    (info.ln() + b * entropy).exp()
}

/// Lower bound on the Fisher product `I_ρ·I_γ` for a state of fixed `(l, m)`
/// in `dim` spatial dimensions:
/// `16 (1 − 2|m|/(2L+1))² (L + 3/2)²` with `L = l + (dim−3)/2`.
pub fn fisher_bound(l: u32, m: i32, dim: u32) -> f64 {
    assert!(dim >= 2, "fisher_bound: dimension {dim} out of range");
    let big_l = l as f64 + (dim as f64 - 3.0) / 2.0;
    let m_abs = m.unsigned_abs() as f64;
    let aniso = 1.0 - 2.0 * m_abs / (2.0 * big_l + 1.0);
    16.0 * aniso * aniso * (big_l + 1.5) * (big_l + 1.5)
}

/// Lower bound on the uncertainty product `⟨r²⟩⟨p²⟩ ≥ (l + 3/2)²`.
pub fn uncertainty_bound(l: u32) -> f64 {
    (l as f64 + 1.5) * (l as f64 + 1.5)
}

/// Everything this crate can say about one bound state, ready for report
/// generation or bound checking.
#[derive(Debug, Clone)]
pub struct MeasureSet {
    pub state: QuantumState,
    pub energy: f64,
    pub r_sq: f64,
    pub p_sq: f64,
    pub fisher_r: f64,
    pub fisher_p: f64,
    /// `"analytic"` when `⟨p⁻²⟩` was not needed (m = 0), `"grid"` otherwise.
    pub fisher_p_method: &'static str,
    pub shannon_r: f64,
    pub shannon_p: f64,
    pub complexity_r_23: f64,
    pub complexity_p_23: f64,
    pub complexity_r_1: f64,
    pub complexity_p_1: f64,
    /// Carried over from the momentum grid — an end-to-end accuracy witness.
    pub raw_norm_defect: f64,
}

impl MeasureSet {
    pub fn shannon_total(&self) -> f64 {
        self.shannon_r + self.shannon_p
    }
}

/// One verified inequality: `lhs ≥ bound`, `margin = lhs − bound`, and
/// `pass` meaning the margin is no worse than the caller's numerical floor.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
}

/// Check the three uncertainty-type inequalities for a measure set.
pub fn check_bounds(ms: &MeasureSet, eps: f64) -> Vec<BoundCheck> {
    let l = ms.state.l;
    let entries = [
        (
            "fisher-product",
            ms.fisher_r * ms.fisher_p,
            fisher_bound(l, ms.state.m, 3),
        ),
        ("entropy-sum", ms.shannon_total(), ENTROPY_SUM_BOUND),
        (
            "uncertainty-product",
            ms.r_sq * ms.p_sq,
            uncertainty_bound(l),
        ),
    ];
    entries
        .into_iter()
        .map(|(name, lhs, bound)| BoundCheck {
            name,
            lhs,
            bound,
            margin: lhs - bound,
            pass: lhs - bound >= -eps,
        })
        .collect()
}

/// Assemble the full measure set for a state.
///
/// The momentum grid must describe the same `(n, l)`; it may have been built
/// from any magnetic substate since the radial momentum density never sees
/// `m` — all `m` dependence is reattached here from `bs`.
pub fn measure_set(
    bs: &BoundState,
    md: &MomentumDensity,
    abs_tol: f64,
) -> Result<MeasureSet, MeasureError> {
    assert_eq!(
        (md.n, md.l),
        (bs.state.n, bs.state.l),
        "momentum density grid belongs to a different radial state"
    );
    let r_sq = expect_r_sq(bs);
    let p_sq = expect_p_sq(bs);
    let fisher_r = fisher_r_analytic(bs);
    let fisher_p_val = fisher_p(bs, Some(md))?;
    let fisher_p_method = if bs.state.m == 0 { "analytic" } else { "grid" };
    let shannon_r_val = shannon_r(bs, abs_tol)?;
    let shannon_p_val = shannon_p(md, bs.state.m);
    Ok(MeasureSet {
        state: bs.state,
        energy: bs.energy,
        r_sq,
        p_sq,
        fisher_r,
        fisher_p: fisher_p_val,
        fisher_p_method,
        shannon_r: shannon_r_val,
        shannon_p: shannon_p_val,
        complexity_r_23: complexity(fisher_r, shannon_r_val, 2.0 / 3.0),
        complexity_p_23: complexity(fisher_p_val, shannon_p_val, 2.0 / 3.0),
        complexity_r_1: complexity(fisher_r, shannon_r_val, 1.0),
        complexity_p_1: complexity(fisher_p_val, shannon_p_val, 1.0),
        raw_norm_defect: md.raw_norm_defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molparams::{builtin_molecules, find, PotentialForm, PotentialParams};
    use crate::pspace::momentum_density_grid;

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol,
            "got {got:.17e}, want {want:.17e}, diff {:.2e}",
            (got - want).abs()
        );
    }

    fn hydrogen(n: u32, l: u32, m: i32) -> BoundState {
        let h = PotentialParams {
            x: -1.0,
            y: 0.0,
            z: 0.0,
            mu: 1.0,
        };
        BoundState::new(&h, QuantumState::new(n, l, m).unwrap())
    }

    fn molecule_state(name: &str, n: u32, l: u32, m: i32) -> BoundState {
        let mols = builtin_molecules();
        let rec = find(&mols, name).unwrap();
        BoundState::new(
            &rec.potential(PotentialForm::Mie),
            QuantumState::new(n, l, m).unwrap(),
        )
    }

    #[test]
    fn angular_entropy_frozen_values() {
        // s orbital: uniform density, entropy ln 4π exactly
        assert_close(shannon_angular(0, 0), (4.0 * PI).ln(), 1e-10);
        assert_close(shannon_angular(1, 0), 2.099078624967847768, 1e-9);
        assert_close(shannon_angular(1, 1), 2.405931444407902459, 1e-9);
        assert_close(shannon_angular(2, 2), 2.2631601986404688, 1e-9);
        assert_close(shannon_angular(5, 3), 2.1849297205451050, 1e-9);
        assert_close(shannon_angular(5, 5), 1.9691400020996124, 1e-9);
        // sign of m never matters
        assert_eq!(shannon_angular(3, -2), shannon_angular(3, 2));
    }

    #[test]
    fn spherical_harmonic_normalization_on_entropy_partition() {
        let zeros = legendre_zeros(4, 2);
        assert_eq!(zeros.len(), 2);
        let norm = integrate_interval(
            |u| 2.0 * PI * sph_harm_sq(4, 2, u),
            -1.0,
            1.0,
            &zeros,
            1e-12,
        )
        .unwrap()
        .value;
        assert_close(norm, 1.0, 1e-11);
    }

    #[test]
    fn hydrogen_ground_state_entropies_closed_form() {
        let s1 = hydrogen(0, 0, 0);
        // S_ρ(1s) = 3 + ln π
        assert_close(shannon_r(&s1, 1e-10).unwrap(), 3.0 + PI.ln(), 1e-9);

        let d = shannon_decomposition(&s1, 1e-10).unwrap();
        assert_close(d.norm_log, 4.0_f64.ln(), 1e-12);
        assert_close(d.exponential, -3.0, 1e-12);
        assert_eq!(d.power_law, 0.0);
        assert_eq!(d.polynomial, 0.0);
        assert_close(d.radial(), 3.0 - 4.0_f64.ln(), 1e-10);
        assert_close(d.total(), 3.0 + PI.ln(), 1e-9);
    }

    #[test]
    fn molecular_radial_entropy_frozen_and_decomposed() {
        let bs = molecule_state("O2", 0, 0, 0);
        let direct = shannon_r_radial(&bs, 1e-9).unwrap();
        assert_close(direct, 0.994616150699509598, 1e-8);
        let d = shannon_decomposition(&bs, 1e-9).unwrap();
        assert_close(d.radial(), direct, 1e-6);

        let bs = molecule_state("NO+", 5, 5, 5);
        let direct = shannon_r_radial(&bs, 1e-9).unwrap();
        assert_close(direct, 1.342844732218317383, 1e-8);
        let d = shannon_decomposition(&bs, 1e-9).unwrap();
        assert_close(d.radial(), direct, 1e-6);
        // every factor contributes for an excited state
        assert!(d.power_law != 0.0 && d.polynomial != 0.0);
    }

    #[test]
    fn fisher_position_closed_form() {
        // tolerances reflect the f64 cancellation floor of ⟨p²⟩ (~1e-9 rel)
        let bs = molecule_state("O2", 0, 0, 0);
        let want = 4.0 * 16.34193088300372080676;
        assert!((fisher_r_analytic(&bs) - want).abs() <= 1e-9 * want);

        // m ≠ 0 subtracts the anisotropy term
        let bs = molecule_state("NO+", 5, 5, 5);
        let want = 4.0 * 272.3730228187333910394 - 110.0 * 0.2290700894683520876581;
        assert!((fisher_r_analytic(&bs) - want).abs() <= 1e-9 * want);
    }

    #[test]
    fn fisher_gradient_quadrature_matches_closed_form() {
        let bs = molecule_state("O2", 0, 0, 0);
        let grad = fisher_r_gradient(&bs, 1e-8).unwrap();
        let want = fisher_r_analytic(&bs);
        assert!((grad - want).abs() <= 1e-8 * want, "got {grad}, want {want}");

        // l > 0 exercises the centrifugal piece: hydrogen 2p, I_ρ = 4⟨p²⟩ = 1
        let bs = hydrogen(0, 1, 0);
        let grad = fisher_r_gradient(&bs, 1e-10).unwrap();
        assert!((grad - 1.0).abs() <= 1e-9, "got {grad}");
    }

    #[test]
    fn fisher_bound_values() {
        assert_close(fisher_bound(0, 0, 3), 36.0, 1e-12);
        assert_close(fisher_bound(5, 0, 3), 676.0, 1e-12);
        assert_close(fisher_bound(5, 1, 3), 54756.0 / 121.0, 1e-10);
        assert_close(fisher_bound(5, 5, 3), 676.0 / 121.0, 1e-12);
        // higher-dimensional form: D = 5, l = 0 gives L = 1
        assert_close(fisher_bound(0, 0, 5), 100.0, 1e-12);
        assert_close(uncertainty_bound(1), 6.25, 1e-15);
    }

    #[test]
    fn complexity_log_domain_assembly() {
        // b = 0 reduces to the information itself
        assert_close(complexity(65.367653, 3.5256409472, 0.0), 65.367653, 1e-12);
        // identity in the log domain
        let c = complexity(65.367653, 3.5256409472, 1.0);
        assert_close(c.ln(), 65.367653_f64.ln() + 3.5256409472, 1e-13);
        // e^{bS} alone would overflow here; the product must survive
        let c = complexity(1e-100, 800.0, 1.0);
        assert!(c.is_finite() && c > 1e240);
        assert_close(c.ln(), 1e-100_f64.ln() + 800.0, 1e-9);
    }

    #[test]
    fn entropy_sum_bound_constant() {
        assert_close(ENTROPY_SUM_BOUND, 3.0 * (1.0 + PI.ln()), 1e-15);
    }

    #[test]
    fn measure_set_ground_state_and_bound_checks() {
        let bs = molecule_state("O2", 0, 0, 0);
        let md = momentum_density_grid(&bs, 1e-12).unwrap();
        let ms = measure_set(&bs, &md, 1e-9).unwrap();

        assert!((ms.fisher_r - 65.36772353201488).abs() < 1e-6);
        assert_eq!(ms.fisher_p_method, "analytic");
        assert!((ms.fisher_p - 4.0 * 5.309812317779180658446).abs() < 1e-9);
        assert_close(ms.shannon_r, 3.525640397668800391, 1e-7);
        assert_close(ms.shannon_p, 6.0023, 2e-2);
        assert!(ms.complexity_r_1 > ms.complexity_r_23);
        assert!(ms.raw_norm_defect < 1e-8);

        let checks = check_bounds(&ms, 1e-6);
        assert_eq!(checks.len(), 3);
        for c in &checks {
            assert!(c.pass, "{} violated: margin {}", c.name, c.margin);
            assert!(c.margin > 0.0);
        }

        // a corrupted momentum Fisher value must be flagged, and only it
        let mut bad = ms.clone();
        bad.fisher_p *= 1e-3;
        let checks = check_bounds(&bad, 1e-6);
        assert!(!checks.iter().find(|c| c.name == "fisher-product").unwrap().pass);
        assert!(checks.iter().find(|c| c.name == "entropy-sum").unwrap().pass);
        assert!(checks.iter().find(|c| c.name == "uncertainty-product").unwrap().pass);
    }

    #[test]
    fn hydrogen_momentum_entropy_frozen() {
        // 1s momentum density is the heaviest grid in the suite: its slow
        // p⁻⁸ spectral tail pushes p_max out to ~300.
        let s1 = hydrogen(0, 0, 0);
        let md = momentum_density_grid(&s1, 1e-12).unwrap();
        assert!(md.p_max > 100.0, "tail extension under-shot: {}", md.p_max);
        assert!((pmoment(&md, 2) - 1.0).abs() < 1e-6);
        assert_close(shannon_p(&md, 0), 2.421862341165194, 2e-3);
    }
}
