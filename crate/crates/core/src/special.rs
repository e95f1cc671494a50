//! Scalar kernels for the rate expressions: Γ on the positive real axis,
//! Re ψ on the positive imaginary axis, and a cancellation-safe coth.

use std::f64::consts::PI;

use crate::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Stopping rule for the digamma series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    tolerance: f64,
    max_terms: usize,
}

impl SeriesControl {
    pub fn new(tolerance: f64, max_terms: usize) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance <= 1e-6) {
            return Err(Error::domain("series tolerance", tolerance, "in (0, 1e-6]"));
        }
        if max_terms < 10_000 {
            return Err(Error::domain(
                "series max_terms",
                max_terms as f64,
                ">= 10000",
            ));
        }
        Ok(SeriesControl {
            tolerance,
            max_terms,
        })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            tolerance: 1e-13,
            max_terms: 100_000,
        }
    }
}

/// Γ(x) for x > 0.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("gamma argument", x, "finite and > 0"));
    }
    Ok(gamma_positive(x))
}

fn gamma_positive(x: f64) -> f64 {
    if x < 0.5 {
        // reflection keeps the Lanczos sum in its accurate half-plane
        return PI / ((PI * x).sin() * gamma_positive(1.0 - x));
    }
    let z = x - 1.0;
    let mut sum = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * sum
}

/// Re ψ(iy) for y > 0, with the default series control.
pub fn re_digamma_imaginary(y: f64) -> Result<f64> {
    re_digamma_imaginary_with(y, &SeriesControl::default())
}

/// Above this argument the Stirling-type expansion is used instead of the series.
const ASYMPTOTIC_THRESHOLD: f64 = 8.0;

/// Re ψ(iy) = Re ψ(1+iy) = −γ_E + y²·Σ_{k≥1} 1/(k(k²+y²)).
///
/// The partial sum is accumulated with compensated summation. The remainder
/// past N terms is its Euler–Maclaurin integral plus endpoint corrections;
/// summation stops once the first neglected correction, ≈ y²/(12N⁶), is below
/// the tolerance. For y > 8 the asymptotic expansion
/// ln y + 1/(12y²) + 1/(120y⁴) + 1/(252y⁶) + 1/(240y⁸) is accurate to ~1e-11.
pub fn re_digamma_imaginary_with(y: f64, ctl: &SeriesControl) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("digamma argument y", y, "finite and > 0"));
    }
    if y > ASYMPTOTIC_THRESHOLD {
        let r = 1.0 / (y * y);
        let corr = r * (1.0 / 12.0 + r * (1.0 / 120.0 + r * (1.0 / 252.0 + r / 240.0)));
        return Ok(y.ln() + corr);
    }

    let y2 = y * y;
    let term = |k: f64| y2 / (k * (k * k + y2));
    // The correction bound only holds once k is well past y.
    let min_terms = (4.0 * y).ceil().max(16.0) as usize;

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut n = 0usize;
    loop {
        n += 1;
        let t = term(n as f64) - comp;
        let s = sum + t;
        comp = (s - sum) - t;
        sum = s;

        let nf = n as f64;
        if n >= min_terms && y2 / (12.0 * nf.powi(6)) <= ctl.tolerance {
            break;
        }
        if n >= ctl.max_terms {
            break;
        }
    }

    let nf = n as f64;
    // Σ_{k>N} f(k) ≈ ∫_N^∞ f − f(N)/2 − f'(N)/12
    let integral = 0.5 * (y2 / (nf * nf)).ln_1p();
    let f_n = term(nf);
    let denom = nf * (nf * nf + y2);
    let df_n = -y2 * (3.0 * nf * nf + y2) / (denom * denom);
    let tail = integral - 0.5 * f_n - df_n / 12.0;

    Ok(-EULER_GAMMA + sum + tail)
}

/// coth(x) for x > 0, switching to 1/x + x/3 below 1e-4.
pub fn coth_guarded(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("coth argument", x, "> 0"));
    }
    if x < 1e-4 {
        Ok(1.0 / x + x / 3.0)
    } else if x > 20.0 {
        // tanh rounds to 1 here; keep the exponentially small excess
        Ok(1.0 + 2.0 * (-2.0 * x).exp())
    } else {
        Ok(1.0 / x.tanh())
    }
}

/// coth(x) − 1 = 2/(e^{2x} − 1), without the cancellation of the naive form.
pub(crate) fn coth_minus_one(x: f64) -> f64 {
    2.0 / (2.0 * x).exp_m1()
}
