//! Reference constants computed without any Lambert series.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::ops::Pow;
use rug::Float;

use super::series::lambert_S;
use super::{LambertError, PrecisionCtx};
use crate::exact::{bernoulli, factorial, BigRat};

fn pi_cache() -> &'static Mutex<HashMap<u32, Float>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Float>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn zeta_cache() -> &'static Mutex<HashMap<(u32, u32), Float>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Float>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn bbp_pi(prec: u32) -> Float {
    let work = prec + 16;
    // terms are below 4·16^{−j}; the tail after N is under 2^{−4N}
    let n_max = work / 4 + 3;
    let mut sum = Float::new(work);
    for j in 0..=n_max {
        let j8 = 8 * i64::from(j);
        let bracket = BigRat::from((4, j8 + 1))
            - BigRat::from((2, j8 + 4))
            - BigRat::from((1, j8 + 5))
            - BigRat::from((1, j8 + 6));
        let scale = Float::with_val(work, Float::i_exp(1, -4 * j as i32));
        sum += Float::with_val(work, &bracket) * scale;
    }
    Float::with_val(prec, sum)
}

/// π by direct BBP summation, cached per working precision.
pub fn pi_ref(ctx: &PrecisionCtx) -> Float {
    let prec = ctx.bits();
    let mut cache = pi_cache().lock().expect("pi cache poisoned");
    cache.entry(prec).or_insert_with(|| bbp_pi(prec)).clone()
}

/// `η(k) = Σ_{n≥0} (−1)^n (n+1)^{−k}` by Cohen–Rodriguez Villegas–Zagier
/// acceleration; the error after `N` steps is about `5.8^{−N}`.
fn eta_crvz(k: u32, digits: u32, prec: u32) -> Float {
    let work = prec + 32;
    let n = (1.31 * f64::from(digits)).ceil() as i64 + 8;
    let sqrt8 = Float::with_val(work, 8).sqrt();
    let mut d = Float::with_val(work, 3 + sqrt8).pow(n as u32);
    let inv = Float::with_val(work, 1) / &d;
    d = (d + inv) / 2u32;
    let mut b = Float::with_val(work, -1);
    let mut c = Float::with_val(work, -&d);
    let mut s = Float::new(work);
    for j in 0..n {
        c = Float::with_val(work, &b - &c);
        let a = Float::with_val(work, Float::u_pow_u((j + 1) as u32, k)).recip();
        s += Float::with_val(work, &c * &a);
        let num = (j + n) * (j - n);
        let den = Float::with_val(work, j as f64 + 0.5) * (j + 1);
        b = b * num / den;
    }
    Float::with_val(prec, s / d)
}

/// ζ(k) from the accelerated alternating series, cached per `(k, precision)`.
pub fn zeta_ref(k: u32, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    if k < 2 {
        return Err(LambertError::BadOrder(i64::from(k)));
    }
    let prec = ctx.bits();
    if let Some(v) = zeta_cache().lock().expect("zeta cache poisoned").get(&(k, prec)) {
        return Ok(v.clone());
    }
    let eta = eta_crvz(k, ctx.digits + ctx.guard, prec);
    let factor: Float = 1 - Float::with_val(prec, 2).pow(1 - k as i32);
    let z = eta / factor;
    zeta_cache()
        .lock()
        .expect("zeta cache poisoned")
        .insert((k, prec), z.clone());
    Ok(z)
}

/// ζ(4n−1) from one merit-4 Lambert series and a Bernoulli double sum.
pub fn ramanujan_4nm1(n: u32, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    if n == 0 {
        return Err(LambertError::BadOrder(-1));
    }
    let k = 4 * n - 1;
    let mut sum = BigRat::new();
    for m in 0..=2 * n {
        let term = bernoulli(2 * m) * bernoulli(4 * n - 2 * m)
            / BigRat::from(factorial(2 * m) * factorial(4 * n - 2 * m));
        if m % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let prec = ctx.bits();
    let two_pi_k = Float::with_val(prec, pi_ref(ctx) * 2u32).pow(k);
    let series = lambert_S(k, &BigRat::from(4), ctx)?;
    Ok(-(series * 2u32) - two_pi_k * Float::with_val(prec, &sum) / 2u32)
}
