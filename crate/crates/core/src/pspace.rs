//! Momentum-space wavefunctions and densities.
//!
//! The momentum radial factor is the spherical Bessel transform of the
//! position radial factor,
//!
//! ```text
//! Ξ(p) = √(2/π) ∫₀^∞ ψ(r) j_l(pr) r² dr,
//! ```
//!
//! real by convention (the constant `i^{-l}` phase is dropped since every
//! consumer uses `Ξ²`). The transform is unitary, so `∫Ξ² p² dp = 1` up to
//! quadrature error; the residual defect is recorded and divided out.
//!
//! There is no closed form for `Ξ` here (the position-space polynomial has
//! non-integer order `β`), so the density is *tabulated*: a uniform grid on
//! `[0, p_max]` is refined dyadically until the Shannon entropy and second
//! moment of the density stabilize — the entropy is the most grid-sensitive
//! consumer, so its convergence bounds everyone else's.
//!
//! `p_max` starts at `8√⟨p²⟩` and grows geometrically until spectral-tail
//! envelopes on both the discarded probability mass and the discarded
//! `⟨p²⟩` mass are negligible; for the molecular states the start value
//! already passes (their momentum densities fall off super-exponentially),
//! while diffuse hydrogenic states push `p_max` out by an order of
//! magnitude.

use crate::kratzer::BoundState;
use crate::moments::expect_p_sq;
use crate::quadrature::{integrate_semiinf, simpson_uniform, xlnx, QuadratureError};
use crate::specfun::sph_bessel_j;

/// Hard cap on oscillation markers handed to the quadrature per transform.
const MAX_BESSEL_MARKERS: usize = 20_000;
/// Uniform-grid refinement limits (intervals, not points).
const GRID_START: usize = 512;
const GRID_MAX: usize = 32_768;

/// A tabulated momentum density `Π(p) = Ξ(p)²` on a uniform grid, already
/// renormalized to `∫Π p² dp = 1`.
///
/// The density depends on `n` and `l` only — the transform never sees `m` —
/// so one grid serves a whole magnetic multiplet.
#[derive(Debug, Clone)]
pub struct MomentumDensity {
    pub n: u32,
    pub l: u32,
    /// Uniform grid `0 = p_0 < … < p_N = p_max` (odd point count).
    pub p: Vec<f64>,
    /// `Π(p_i)`, renormalized.
    pub density: Vec<f64>,
    pub p_max: f64,
    /// `|∫Π p² dp − 1|` *before* renormalization — a direct end-to-end
    /// accuracy measure of the transform pipeline.
    pub raw_norm_defect: f64,
}

/// The momentum radial wavefunction `Ξ(p)` by direct quadrature.
///
/// The radial partition is seeded with the position-space break points plus
/// one marker per zero of `j_l(pr)` inside the support, so each oscillation
/// lands in its own panel.
pub fn momentum_wavefunction(
    bs: &BoundState,
    p: f64,
    abs_tol: f64,
) -> Result<f64, QuadratureError> {
    assert!(p >= 0.0, "momentum_wavefunction: p = {p} out of domain");
    let mut splits = bs.radial_splits();
    let r_hi = *splits.last().unwrap();
    if p > 0.0 {
        let half_l = 0.5 * bs.state.l as f64;
        let mut k = 1.0;
        while splits.len() < MAX_BESSEL_MARKERS {
            let r = (k + half_l) * std::f64::consts::PI / p;
            if r >= r_hi {
                break;
            }
            splits.push(r);
            k += 1.0;
        }
    }
    let l = bs.state.l;
    let q = integrate_semiinf(
        |r| bs.psi_radial(r).value() * sph_bessel_j(l, p * r) * r * r,
        &splits,
        bs.decay_scale(),
        abs_tol,
    )?;
    Ok((2.0 / std::f64::consts::PI).sqrt() * q.value)
}

/// Build the tabulated momentum density for a state.
///
/// `transform_abs_tol` is the absolute tolerance for each `Ξ(p)` transform
/// integral (1e-12 is comfortable for every state this crate accepts and
/// keeps the grid's `⟨p²⟩` good to ~1e-7 relative even if per-point errors
/// were fully correlated).
pub fn momentum_density_grid(
    bs: &BoundState,
    transform_abs_tol: f64,
) -> Result<MomentumDensity, QuadratureError> {
    let p_sq = expect_p_sq(bs);
    let mut p_max = 8.0 * p_sq.sqrt();

    // Extend p_max until spectral-tail envelopes on probability mass and
    // second-moment mass both pass. The probe is the largest density value
    // near the cut; the envelopes assume no decay at all over one more
    // p_max of tail, which is wildly conservative for these densities.
    let mut extended = false;
    for _ in 0..64 {
        let probe = [0.9, 0.95, 1.0]
            .iter()
            .map(|f| momentum_wavefunction(bs, f * p_max, transform_abs_tol).map(|x| x * x))
            .collect::<Result<Vec<f64>, _>>()?
            .into_iter()
            .fold(0.0_f64, f64::max);
        let mass_tail = probe * p_max.powi(3);
        let psq_tail = probe * p_max.powi(5);
        if mass_tail < 0.5e-8 && psq_tail < 0.5e-6 * p_sq {
            extended = true;
            break;
        }
        p_max *= 1.3;
    }
    if !extended {
        return Err(QuadratureError::UndampedTail { at: p_max });
    }

    // Dyadic refinement of the uniform grid; previously computed transform
    // values land on even indices of the doubled grid and are reused.
    let mut intervals = GRID_START;
    let mut xi: Vec<f64> = Vec::new();
    let mut prev: Option<(f64, f64)> = None; // (entropy, second moment)
    loop {
        let h = p_max / intervals as f64;
        if xi.is_empty() {
            xi = (0..=intervals)
                .map(|i| momentum_wavefunction(bs, i as f64 * h, transform_abs_tol))
                .collect::<Result<_, _>>()?;
        } else {
            let mut next = Vec::with_capacity(intervals + 1);
            for i in 0..=intervals {
                if i % 2 == 0 {
                    next.push(xi[i / 2]);
                } else {
                    next.push(momentum_wavefunction(bs, i as f64 * h, transform_abs_tol)?);
                }
            }
            xi = next;
        }

        let raw: Vec<f64> = xi.iter().map(|&v| v * v).collect();
        let p: Vec<f64> = (0..=intervals).map(|i| i as f64 * h).collect();
        let weighted: Vec<f64> = raw.iter().zip(&p).map(|(&d, &pp)| d * pp * pp).collect();
        let norm = simpson_uniform(&weighted, h);
        let density: Vec<f64> = raw.iter().map(|&d| d / norm).collect();

        let ent_integrand: Vec<f64> = density
            .iter()
            .zip(&p)
            .map(|(&d, &pp)| -xlnx(d) * pp * pp)
            .collect();
        let entropy = simpson_uniform(&ent_integrand, h);
        let psq_integrand: Vec<f64> = density
            .iter()
            .zip(&p)
            .map(|(&d, &pp)| d * pp.powi(4))
            .collect();
        let second = simpson_uniform(&psq_integrand, h);

        let converged = match prev {
            Some((e0, s0)) => {
                (entropy - e0).abs() <= 1e-5 * entropy.abs().max(1.0)
                    && (second - s0).abs() <= 1e-7 * second.abs()
            }
            None => false,
        };
        if converged && intervals >= 2 * GRID_START {
            return Ok(MomentumDensity {
                n: bs.state.n,
                l: bs.state.l,
                p,
                density,
                p_max,
                raw_norm_defect: (norm - 1.0).abs(),
            });
        }
        if intervals >= GRID_MAX {
            return Err(QuadratureError::NonConvergence {
                value: entropy,
                achieved: prev.map_or(f64::INFINITY, |(e0, _)| (entropy - e0).abs()),
                requested: 1e-5 * entropy.abs().max(1.0),
                subdivisions: intervals as u32,
            });
        }
        prev = Some((entropy, second));
        intervals *= 2;
    }
}

/// Grid moment `⟨p^k⟩ = ∫Π p^{2+k} dp` for `k ≥ -2` (the only cases with
/// integrable weight at the origin given `Π(0)` finite).
pub fn pmoment(md: &MomentumDensity, k: i32) -> f64 {
    assert!(k >= -2, "pmoment: k = {k} out of range");
    let h = md.p[1] - md.p[0];
    let vals: Vec<f64> = md
        .density
        .iter()
        .zip(&md.p)
        .map(|(&d, &p)| d * p.powi(2 + k))
        .collect();
    simpson_uniform(&vals, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kratzer::QuantumState;
    use crate::molparams::{builtin_molecules, find, PotentialForm, PotentialParams};

    fn assert_rel(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol * want.abs(),
            "got {got:.17e}, want {want:.17e}, rel {:.2e}",
            (got - want).abs() / want.abs()
        );
    }

    fn hydrogen_state(n: u32, l: u32) -> BoundState {
        let h = PotentialParams {
            x: -1.0,
            y: 0.0,
            z: 0.0,
            mu: 1.0,
        };
        BoundState::new(&h, QuantumState::new(n, l, 0).unwrap())
    }

    #[test]
    fn hydrogen_1s_transform_matches_closed_form() {
        // Ξ_{1s}(p) = √(32/π) / (1 + p²)²
        let s1 = hydrogen_state(0, 0);
        let pref = (32.0 / std::f64::consts::PI).sqrt();
        for p in [0.0, 0.4, 1.3, 3.0] {
            let got = momentum_wavefunction(&s1, p, 1e-12).unwrap();
            let want = pref / (1.0 + p * p).powi(2);
            assert_rel(got, want, 1e-9);
        }
    }

    #[test]
    fn hydrogen_2p_grid_parseval_and_moments() {
        let p2 = hydrogen_state(0, 1);
        let md = momentum_density_grid(&p2, 1e-12).unwrap();
        assert!(md.raw_norm_defect < 1e-6, "defect {}", md.raw_norm_defect);
        // ⟨p²⟩ = 1/4 for the hydrogen n=2 shell
        assert_rel(pmoment(&md, 2), 0.25, 1e-6);
        // density is nonnegative and vanishes at p = 0 for l > 0
        assert_eq!(md.density[0], 0.0);
        assert!(md.density.iter().all(|&d| d >= 0.0));
        assert!(md.p.len() % 2 == 1 && md.p.len() == md.density.len());
    }

    #[test]
    fn molecular_grid_reproduces_analytic_second_moment() {
        let mols = builtin_molecules();
        let rec = find(&mols, "O2").unwrap();
        let bs = BoundState::new(
            &rec.potential(PotentialForm::Mie),
            QuantumState::new(0, 0, 0).unwrap(),
        );
        let md = momentum_density_grid(&bs, 1e-12).unwrap();
        assert!(md.raw_norm_defect < 1e-8, "defect {}", md.raw_norm_defect);
        assert_rel(pmoment(&md, 2), expect_p_sq(&bs), 1e-7);
        // p_max needs no extension for molecular states
        assert_rel(md.p_max, 8.0 * expect_p_sq(&bs).sqrt(), 1e-12);
    }

    #[test]
    fn inverse_p_sq_moment_frozen() {
        // ⟨p⁻²⟩ for the O2 (5,5) state; no closed form exists, value pinned
        // against the m-splitting of the momentum Fisher information
        let mols = builtin_molecules();
        let rec = find(&mols, "O2").unwrap();
        let bs = BoundState::new(
            &rec.potential(PotentialForm::Mie),
            QuantumState::new(5, 5, 0).unwrap(),
        );
        let md = momentum_density_grid(&bs, 1e-12).unwrap();
        let inv = pmoment(&md, -2);
        assert!(
            (inv - 0.0270048).abs() < 2e-6,
            "⟨p⁻²⟩ = {inv}, expected ≈ 0.0270048"
        );
    }
}
