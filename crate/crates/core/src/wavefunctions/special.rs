//! Generalized Laguerre polynomials and the log-Gamma function.

use crate::error::{domain, Result};

/// Generalized Laguerre polynomial `L_n^a(y)` by the forward three-term
/// recurrence `k L_k = (2k - 1 + a - y) L_{k-1} - (k - 1 + a) L_{k-2}`.
pub fn laguerre(n: u32, a: f64, y: f64) -> Result<f64> {
    if !(a > -1.0) {
        return Err(domain(format!("Laguerre order must exceed -1, got {a}")));
    }
    Ok(laguerre_unchecked(n, a, y))
}

pub(crate) fn laguerre_unchecked(n: u32, a: f64, y: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - y;
    for k in 2..=n {
        let k = k as f64;
        let next = ((2.0 * k - 1.0 + a - y) * cur - (k - 1.0 + a) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

// Lanczos approximation, g = 607/128, 14 terms.
const LANCZOS_G_HALF: f64 = 5.242_187_5;
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("ln_gamma requires finite x > 0, got {x}")));
    }
    Ok(ln_gamma_unchecked(x))
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    let t = x + LANCZOS_G_HALF;
    let head = (x + 0.5) * t.ln() - t;
    let mut series = 0.999_999_999_999_997_092;
    let mut z = x;
    for c in LANCZOS {
        z += 1.0;
        series += c / z;
    }
    head + (SQRT_2PI * series / x).ln()
}

/// `ln n!`.
pub fn ln_factorial(n: u32) -> f64 {
    ln_gamma_unchecked(n as f64 + 1.0)
}
