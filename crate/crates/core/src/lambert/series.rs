use rug::Float;

use super::reference::pi_ref;
use super::{LambertError, MpComplex, PrecisionCtx, UpperHalfPoint};
use crate::exact::BigRat;

/// Smallest `N ≥ 1` with `r^{N+1} / ((N+1)^k (1−r)) < e^{ln_target}`.
fn li_cutoff(k: u32, ln_r: f64, ln_target: f64) -> u64 {
    let ln_one_minus_r = (-ln_r.exp()).ln_1p();
    let mut n: u64 = 1;
    loop {
        let n1 = (n + 1) as f64;
        let ln_tail = n1 * ln_r - f64::from(k) * n1.ln() - ln_one_minus_r;
        if ln_tail < ln_target {
            return n;
        }
        n += 1;
    }
}

/// Smallest `M ≥ 1` with `w·(M+1)^p·r^{M+1} / ((1−r)^{1+p}(1−r^{M+1})) < e^{ln_target}`.
/// `p = 0` is the Lambert tail `Σ_{m>M} r^m/(1−r^m)`, `p = 1` the tail of
/// `Σ m·r^m/(1−r^m)`.
fn outer_cutoff(ln_r: f64, p: u32, ln_w: f64, ln_target: f64) -> u64 {
    let ln_one_minus_r = (-ln_r.exp()).ln_1p();
    let mut m: u64 = 1;
    loop {
        let m1 = (m + 1) as f64;
        let ln_rm = m1 * ln_r;
        let ln_tail = ln_w + f64::from(p) * m1.ln() + ln_rm
            - f64::from(1 + p) * ln_one_minus_r
            - (-ln_rm.exp()).ln_1p();
        if ln_tail < ln_target {
            return m;
        }
        m += 1;
    }
}

fn check_k(k: u32) -> Result<(), LambertError> {
    if k == 0 {
        return Err(LambertError::BadOrder(0));
    }
    Ok(())
}

fn ln_abs_f64(x: &Float) -> f64 {
    Float::with_val(64, x.abs_ref()).ln().to_f64()
}

fn li_real_to(k: u32, x: &Float, prec: u32, ln_target: f64) -> (Float, u64) {
    if x.is_zero() {
        return (Float::new(prec), 0);
    }
    let n_max = li_cutoff(k, ln_abs_f64(x), ln_target);
    let x = Float::with_val(prec, x);
    let mut xn = x.clone();
    let mut sum = x.clone();
    for n in 2..=n_max {
        xn *= &x;
        let nk = Float::with_val(prec, Float::u_pow_u(n as u32, k));
        sum += Float::with_val(prec, &xn / &nk);
    }
    (sum, n_max)
}

fn li_complex_to(k: u32, x: &MpComplex, prec: u32, ln_target: f64) -> (MpComplex, u64) {
    if x.is_zero() {
        return (MpComplex::zero(prec), 0);
    }
    let n_max = li_cutoff(k, ln_abs_f64(&x.abs()), ln_target);
    let mut xn = x.clone();
    let mut sum = x.clone();
    for n in 2..=n_max {
        xn = &xn * x;
        let nk = Float::with_val(prec, Float::u_pow_u(n as u32, k));
        sum = &sum
            + &MpComplex::new(
                Float::with_val(prec, &xn.re / &nk),
                Float::with_val(prec, &xn.im / &nk),
            );
    }
    (sum, n_max)
}

fn check_disk(r: &Float) -> Result<(), LambertError> {
    if *r >= 1 {
        return Err(LambertError::OutsideDisk(r.to_f64()));
    }
    Ok(())
}

/// `Li_k(x) = Σ_{n>0} x^n/n^k` for real `|x| < 1`, by direct summation.
pub fn li_real(k: u32, x: &Float, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    check_k(k)?;
    check_disk(&Float::with_val(64, x.abs_ref()))?;
    Ok(li_real_to(k, x, ctx.bits(), ctx.ln_eps()).0)
}

/// `Li_k(x)` for complex `|x| < 1`.
pub fn li(k: u32, x: &MpComplex, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    check_k(k)?;
    check_disk(&x.abs())?;
    Ok(li_complex_to(k, x, ctx.bits(), ctx.ln_eps()).0)
}

/// The nome `q = e^{−π√a}` of merit `a`.
pub fn nome(a: &BigRat, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    if *a <= 0 {
        return Err(LambertError::NonPositiveMerit(a.to_string()));
    }
    let prec = ctx.bits();
    let root = Float::with_val(prec, a).sqrt();
    Ok((-(root * pi_ref(ctx))).exp())
}

/// Value of a Lambert series together with the work spent on it.
#[derive(Debug, Clone)]
pub struct LambertEval {
    pub value: Float,
    /// Number of polylog summands `Li_k(q^m)`.
    pub outer_terms: u64,
    /// Total number of power-series terms over all summands.
    pub inner_terms: u64,
}

/// `S_k(q) = Σ_m Li_k(q^m)` with `q = e^{−π√a}`, with its term counts.
pub fn lambert_eval(k: u32, a: &BigRat, ctx: &PrecisionCtx) -> Result<LambertEval, LambertError> {
    check_k(k)?;
    let q = nome(a, ctx)?;
    let prec = ctx.bits();
    let ln_q = -std::f64::consts::PI * a.to_f64().sqrt();
    let ln_target = ctx.ln_eps() - std::f64::consts::LN_2;
    let m_max = outer_cutoff(ln_q, 0, 0.0, ln_target);
    let ln_inner = ln_target - ((m_max + 1) as f64).ln();
    let mut qm = q.clone();
    let mut sum = Float::new(prec);
    let mut inner = 0;
    for m in 1..=m_max {
        if m > 1 {
            qm *= &q;
        }
        let (v, n) = li_real_to(k, &qm, prec, ln_inner);
        sum += v;
        inner += n;
    }
    Ok(LambertEval {
        value: sum,
        outer_terms: m_max,
        inner_terms: inner,
    })
}

/// `S_k(e^{−π√a})` to the context's precision.
#[allow(non_snake_case)]
pub fn lambert_S(k: u32, a: &BigRat, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    Ok(lambert_eval(k, a, ctx)?.value)
}

/// The first `count` summands `Li_k(q^m)`, `m = 1..=count`, of `S_k`.
pub fn lambert_summands(
    k: u32,
    a: &BigRat,
    count: usize,
    ctx: &PrecisionCtx,
) -> Result<Vec<Float>, LambertError> {
    check_k(k)?;
    let q = nome(a, ctx)?;
    let prec = ctx.bits();
    let mut qm = q.clone();
    let mut out = Vec::with_capacity(count);
    for m in 1..=count {
        if m > 1 {
            qm *= &q;
        }
        out.push(li_real_to(k, &qm, prec, ctx.ln_eps()).0);
    }
    Ok(out)
}

/// `e^{2πiz}` and `ln|e^{2πiz}| = −2π Im z`.
fn complex_nome(z: &UpperHalfPoint, ctx: &PrecisionCtx) -> (MpComplex, f64) {
    let prec = ctx.bits();
    let z = z.z();
    let two_pi = Float::with_val(prec, pi_ref(ctx) * 2u32);
    let arg = MpComplex::new(Float::with_val(prec, &z.re), Float::with_val(prec, &z.im)).mul_i();
    let q = arg.scale(&two_pi).exp();
    let ln_r = -2.0 * std::f64::consts::PI * z.im.to_f64();
    (q, ln_r)
}

/// `P_k(z) = S_k(e^{2πiz})`.
pub fn p_func(k: u32, z: &UpperHalfPoint, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    check_k(k)?;
    let prec = ctx.bits();
    let (q, ln_r) = complex_nome(z, ctx);
    let ln_target = ctx.ln_eps() - std::f64::consts::LN_2;
    let m_max = outer_cutoff(ln_r, 0, 0.0, ln_target);
    let ln_inner = ln_target - ((m_max + 1) as f64).ln();
    let mut qm = q.clone();
    let mut sum = MpComplex::zero(prec);
    for m in 1..=m_max {
        if m > 1 {
            qm = &qm * &q;
        }
        sum = &sum + &li_complex_to(k, &qm, prec, ln_inner).0;
    }
    Ok(sum)
}

/// `Σ_m m·Li_{k−1}(q^m)`, generic over the nome representation.
fn weighted_sum<T>(
    ln_r: f64,
    ln_target: f64,
    mut step: impl FnMut(u64, f64) -> T,
    mut acc: impl FnMut(T, u64),
) {
    let m_max = outer_cutoff(ln_r, 1, 0.0, ln_target);
    let ln_inner = ln_target - 2.0 * ((m_max + 1) as f64).ln();
    for m in 1..=m_max {
        let v = step(m, ln_inner);
        acc(v, m);
    }
}

/// `P′_k(z) = 2πi Σ_m m·Li_{k−1}(q^m)`, `q = e^{2πiz}`.
pub fn p_prime(k: u32, z: &UpperHalfPoint, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    if k < 2 {
        return Err(LambertError::BadOrder(i64::from(k)));
    }
    let prec = ctx.bits();
    let (q, ln_r) = complex_nome(z, ctx);
    let two_pi = Float::with_val(prec, pi_ref(ctx) * 2u32);
    let ln_target = ctx.ln_eps() - std::f64::consts::LN_2 - two_pi.to_f64().ln();
    let mut qm = q.clone();
    let mut sum = MpComplex::zero(prec);
    weighted_sum(
        ln_r,
        ln_target,
        |m, ln_inner| {
            if m > 1 {
                qm = &qm * &q;
            }
            li_complex_to(k - 1, &qm, prec, ln_inner).0
        },
        |v, m| sum = &sum + &v.scale(&Float::with_val(prec, m)),
    );
    Ok(sum.scale(&two_pi).mul_i())
}

/// `T_k(ix)` for `x = √a/2`, a real number: with `q = e^{−π√a}`,
/// `T_k(ix) = S_k(q) + (4πx/(k−1)) Σ_m m·Li_{k−1}(q^m)`.
pub fn deriv_t_imag(k: u32, a: &BigRat, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    if k < 3 {
        return Err(LambertError::BadOrder(i64::from(k)));
    }
    let prec = ctx.bits();
    let q = nome(a, ctx)?;
    let x = Float::with_val(prec, a).sqrt() / 2u32;
    let coef = Float::with_val(prec, pi_ref(ctx) * 4u32) * &x / (k - 1);
    let ln_r = -std::f64::consts::PI * a.to_f64().sqrt();
    let ln_target = ctx.ln_eps() - std::f64::consts::LN_2 - coef.to_f64().max(1.0).ln();
    let mut qm = q.clone();
    let mut sum = Float::new(prec);
    weighted_sum(
        ln_r,
        ln_target,
        |m, ln_inner| {
            if m > 1 {
                qm *= &q;
            }
            li_real_to(k - 1, &qm, prec, ln_inner).0
        },
        |v, m| sum += v * m,
    );
    Ok(lambert_S(k, a, ctx)? + sum * coef)
}

/// Smallest `N` with `4 r^{N+1}/((1−r)(1−r^{N+1})²) < e^{ln_target}`.
fn sinh_cutoff(ln_r: f64, ln_target: f64) -> u64 {
    let ln_one_minus_r = (-ln_r.exp()).ln_1p();
    let mut n: u64 = 1;
    loop {
        let ln_rn = (n + 1) as f64 * ln_r;
        let ln_tail = 4f64.ln() + ln_rn - ln_one_minus_r - 2.0 * (-ln_rn.exp()).ln_1p();
        if ln_tail < ln_target {
            return n;
        }
        n += 1;
    }
}

/// `𝒮(x) = Σ_{n>0} 1/sinh²(nπx) = Σ 4y^n/(1−y^n)²`, `y = e^{−2πx}`, real `x > 0`.
pub fn sinh_sq_sum(x: &Float, ctx: &PrecisionCtx) -> Result<Float, LambertError> {
    if *x <= 0 {
        return Err(LambertError::NonPositiveArgument);
    }
    let prec = ctx.bits();
    let two_pi = Float::with_val(prec, pi_ref(ctx) * 2u32);
    let y = Float::with_val(prec, -(two_pi * x)).exp();
    let n_max = sinh_cutoff(-2.0 * std::f64::consts::PI * x.to_f64(), ctx.ln_eps());
    let mut yn = y.clone();
    let mut sum = Float::new(prec);
    for n in 1..=n_max {
        if n > 1 {
            yn *= &y;
        }
        let den = Float::with_val(prec, 1 - &yn).square();
        sum += Float::with_val(prec, &yn * 4u32) / den;
    }
    Ok(sum)
}

/// `𝒮(x)` for complex `x` with `Re x > 0`.
pub fn sinh_sq_sum_complex(x: &MpComplex, ctx: &PrecisionCtx) -> Result<MpComplex, LambertError> {
    if x.re <= 0 {
        return Err(LambertError::NonPositiveArgument);
    }
    let prec = ctx.bits();
    let two_pi = Float::with_val(prec, pi_ref(ctx) * 2u32);
    let y = (-&x.scale(&two_pi)).exp();
    let n_max = sinh_cutoff(-2.0 * std::f64::consts::PI * x.re.to_f64(), ctx.ln_eps());
    let one = MpComplex::from_real(Float::with_val(prec, 1));
    let four = Float::with_val(prec, 4);
    let mut yn = y.clone();
    let mut sum = MpComplex::zero(prec);
    for n in 1..=n_max {
        if n > 1 {
            yn = &yn * &y;
        }
        let d = &one - &yn;
        sum = &sum + &yn.scale(&four).div(&(&d * &d));
    }
    Ok(sum)
}
