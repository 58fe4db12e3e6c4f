//! Special functions underlying the bound-state pipeline: log-gamma,
//! generalized binomial coefficients, associated Laguerre and Legendre
//! polynomials, spherical Bessel functions, and a log-domain scalar type.
//!
//! The radial wavefunctions involve factors like `Γ(n + 2β + 2)` and
//! `r^β e^{-ξr/2}` with `β` of order 200, far beyond what `f64` can hold
//! directly, so every routine that can leave the representable range has a
//! log-domain path built on [`ScaledValue`].
//!
//! Domain violations (negative gamma argument, `m > l`, `|u| > 1`) are
//! programming errors here, not data errors, and panic via `assert!`.

/// A real number stored as `sign * exp(log_magnitude)`.
///
/// `sign == 0` encodes exact zero (with `log_magnitude = -inf`). The type is
/// deliberately minimal: it exists to move products of huge/tiny factors
/// around safely, not to be a general arithmetic type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };

    /// Build from a log-magnitude and a sign (any nonzero `sign` is
    /// normalized to ±1).
    pub fn new(log_magnitude: f64, sign: i8) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            ScaledValue {
                log_magnitude,
                sign: if sign > 0 { 1 } else { -1 },
            }
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            ScaledValue {
                log_magnitude: v.abs().ln(),
                sign: if v > 0.0 { 1 } else { -1 },
            }
        }
    }

    /// Collapse to `f64`. Values outside the representable range become
    /// `0` or `±inf`; callers that care must stay in the log domain.
    pub fn value(self) -> f64 {
        self.sign as f64 * self.log_magnitude.exp()
    }

    pub fn mul(self, rhs: Self) -> Self {
        Self::new(self.log_magnitude + rhs.log_magnitude, self.sign * rhs.sign)
    }

    /// Multiply by `exp(dln)` without leaving the log domain.
    pub fn scaled_by_log(self, dln: f64) -> Self {
        if self.sign == 0 {
            self
        } else {
            ScaledValue {
                log_magnitude: self.log_magnitude + dln,
                sign: self.sign,
            }
        }
    }
}

/// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const LN_SQRT_2PI: f64 = 0.918938533204672741780329736406;

/// Natural log of the gamma function for `x > 0`.
///
/// Lanczos approximation (g = 7); relative accuracy ~1e-14 over the whole
/// positive axis. Arguments `x < 0.5` are lifted with one recurrence step
/// `ln Γ(x) = ln Γ(x+1) - ln x`, so no reflection formula is needed.
pub fn log_gamma(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "log_gamma: x = {x} out of domain");
    if x < 0.5 {
        return log_gamma(x + 1.0) - x.ln();
    }
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x - 1.0 + i as f64);
    }
    let t = x + 6.5;
    LN_SQRT_2PI + (x - 0.5) * t.ln() - t + acc.ln()
}

/// Generalized binomial coefficient `C(a, k)` for real `a` and integer
/// `k >= 0`, via the product form `prod_{j=1..k} (a - k + j) / j`.
pub fn gen_binomial(a: f64, k: u32) -> f64 {
    let mut prod = 1.0;
    for j in 1..=k {
        prod *= (a - (k - j) as f64) / j as f64;
    }
    prod
}

/// Associated Laguerre polynomial `L_n^alpha(t)` by the three-term
/// recurrence, plain `f64`. Safe for the moderate degrees used here
/// (values stay far below overflow for n <= 10, alpha <= ~1e4, t <= ~1e3);
/// use [`assoc_laguerre_scaled`] when in doubt.
pub fn assoc_laguerre(n: u32, alpha: f64, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + alpha - t;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * curr - (kf + alpha) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// Associated Laguerre polynomial in the log domain: the same recurrence as
/// [`assoc_laguerre`], renormalized whenever the running pair approaches the
/// `f64` range limits, so arbitrarily large `alpha` cannot overflow.
pub fn assoc_laguerre_scaled(n: u32, alpha: f64, t: f64) -> ScaledValue {
    if n == 0 {
        return ScaledValue::from_f64(1.0);
    }
    let mut prev = 1.0_f64;
    let mut curr = 1.0 + alpha - t;
    let mut ln_scale = 0.0_f64;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * curr - (kf + alpha) * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
        let mag = curr.abs().max(prev.abs());
        if mag > 1e250 {
            curr *= 1e-250;
            prev *= 1e-250;
            ln_scale += 250.0 * std::f64::consts::LN_10;
        } else if mag > 0.0 && mag < 1e-250 {
            curr *= 1e250;
            prev *= 1e250;
            ln_scale -= 250.0 * std::f64::consts::LN_10;
        }
    }
    if curr == 0.0 {
        ScaledValue::ZERO
    } else {
        ScaledValue::new(ln_scale + curr.abs().ln(), if curr > 0.0 { 1 } else { -1 })
    }
}

/// All `n` roots of `L_n^alpha`, ascending, to ~1e-14 relative accuracy.
///
/// Sign scan on a uniform grid over `(0, 4n + 2alpha + 2)` (every root lies
/// below that bound) followed by bisection. The grid is fine enough that no
/// interval holds two roots for the degrees used here; the final count is
/// asserted.
pub fn laguerre_roots(n: u32, alpha: f64) -> Vec<f64> {
    assert!(alpha > -1.0, "laguerre_roots: alpha = {alpha} out of domain");
    if n == 0 {
        return Vec::new();
    }
    let upper = 4.0 * n as f64 + 2.0 * alpha + 2.0;
    let steps = 50 * n as usize;
    let h = upper / steps as f64;
    let mut roots = Vec::with_capacity(n as usize);
    let mut a = upper * 1e-12;
    let mut fa = assoc_laguerre_scaled(n, alpha, a);
    for i in 1..=steps {
        let b = h * i as f64;
        let fb = assoc_laguerre_scaled(n, alpha, b);
        if fa.sign != 0 && fb.sign != 0 && fa.sign != fb.sign {
            let (mut lo, mut hi, lo_sign) = (a, b, fa.sign);
            for _ in 0..100 {
                if hi - lo <= 1e-15 * hi.max(1.0) {
                    break;
                }
                let mid = 0.5 * (lo + hi);
                let fm = assoc_laguerre_scaled(n, alpha, mid);
                if fm.sign == 0 {
                    lo = mid;
                    hi = mid;
                } else if fm.sign == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    assert_eq!(
        roots.len(),
        n as usize,
        "laguerre_roots: sign scan found {} of {} roots (alpha = {})",
        roots.len(),
        n,
        alpha
    );
    roots
}

/// Associated Legendre function `P_l^m(u)` for integer `0 <= m <= l` and
/// `|u| <= 1`, Condon-Shortley phase included.
pub fn assoc_legendre(l: u32, m: u32, u: f64) -> f64 {
    assert!(m <= l, "assoc_legendre: m = {m} > l = {l}");
    assert!(u.abs() <= 1.0 + 1e-12, "assoc_legendre: |u| = {} > 1", u.abs());
    let u = u.clamp(-1.0, 1.0);
    // P_m^m = (-1)^m (2m-1)!! (1-u^2)^{m/2}
    let somx2 = ((1.0 - u) * (1.0 + u)).sqrt();
    let mut pmm = 1.0;
    let mut odd = 1.0;
    for _ in 0..m {
        pmm *= -odd * somx2;
        odd += 2.0;
    }
    if l == m {
        return pmm;
    }
    // P_{m+1}^m = u (2m+1) P_m^m
    let mut p_prev = pmm;
    let mut p_curr = u * (2.0 * m as f64 + 1.0) * pmm;
    for k in (m + 2)..=l {
        let kf = k as f64;
        let mf = m as f64;
        let p_next = (u * (2.0 * kf - 1.0) * p_curr - (kf + mf - 1.0) * p_prev) / (kf - mf);
        p_prev = p_curr;
        p_curr = p_next;
    }
    p_curr
}

/// Squared magnitude of the spherical harmonic, `|Y_{l,m}(θ, φ)|²`, as a
/// function of `u = cos θ` (the azimuthal phase drops out):
/// `(2l+1)/(4π) · (l-|m|)!/(l+|m|)! · [P_l^{|m|}(u)]²`.
pub fn sph_harm_sq(l: u32, m: i32, u: f64) -> f64 {
    let ma = m.unsigned_abs();
    assert!(ma <= l, "sph_harm_sq: |m| = {ma} > l = {l}");
    // (l-|m|)!/(l+|m|)! = 1 / prod_{k=l-|m|+1}^{l+|m|} k
    let mut ratio = 1.0;
    for k in (l - ma + 1)..=(l + ma) {
        ratio /= k as f64;
    }
    let p = assoc_legendre(l, ma, u);
    (2.0 * l as f64 + 1.0) / (4.0 * std::f64::consts::PI) * ratio * p * p
}

/// Spherical Bessel function of the first kind, `j_l(x)`, for `x >= 0`.
///
/// Three regimes:
/// * ascending power series when `x² <= 2l + 3` (leading term dominates, no
///   cancellation),
/// * upward recurrence from `j_0`, `j_1` when `x > l + 1.5` (stable there),
/// * Miller downward recurrence with renormalization in the remaining band,
///   anchored on `j_0` — or on `j_1` when `x` sits near a zero of `j_0`.
pub fn sph_bessel_j(l: u32, x: f64) -> f64 {
    assert!(x >= 0.0 && x.is_finite(), "sph_bessel_j: x = {x} out of domain");
    if l == 0 {
        return if x == 0.0 { 1.0 } else { x.sin() / x };
    }
    if x == 0.0 {
        return 0.0;
    }
    let lf = l as f64;
    if x * x <= 2.0 * lf + 3.0 {
        return sph_bessel_series(l, x);
    }
    let j0 = x.sin() / x;
    let j1 = x.sin() / (x * x) - x.cos() / x;
    if x > lf + 1.5 {
        // upward recurrence
        let mut prev = j0;
        let mut curr = j1;
        for k in 1..l {
            let next = (2.0 * k as f64 + 1.0) / x * curr - prev;
            prev = curr;
            curr = next;
        }
        return curr;
    }
    // Miller downward recurrence
    let start = l + 32;
    let mut f_hi = 0.0_f64;
    let mut f_curr = 1e-290_f64;
    let mut f_l = 0.0_f64;
    let mut f1 = 0.0_f64;
    let f0;
    let mut k = start;
    loop {
        let f_lo = (2.0 * k as f64 + 1.0) / x * f_curr - f_hi;
        if k - 1 == l {
            f_l = f_lo;
        }
        if k - 1 == 1 {
            f1 = f_lo;
        }
        if k == 1 {
            f0 = f_lo;
            break;
        }
        f_hi = f_curr;
        f_curr = f_lo;
        if f_curr.abs() > 1e250 {
            f_hi *= 1e-250;
            f_curr *= 1e-250;
            f_l *= 1e-250;
            f1 *= 1e-250;
        }
        k -= 1;
    }
    if j0.abs() > 0.05 {
        f_l * (j0 / f0)
    } else {
        f_l * (j1 / f1)
    }
}

/// Ascending series for `j_l(x)`; used where the leading term dominates.
fn sph_bessel_series(l: u32, x: f64) -> f64 {
    // x^l / (2l+1)!!
    let mut pref = 1.0;
    let mut dfac = 1.0;
    for k in 0..l {
        pref *= x;
        dfac *= 2.0 * k as f64 + 3.0;
    }
    pref /= dfac;
    let half_x2 = 0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..200u32 {
        let kf = k as f64;
        term *= -half_x2 / ((kf + 1.0) * (2.0 * l as f64 + 2.0 * kf + 3.0));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    pref * sum
}
