use rug::ops::Pow;
use rug::Float;

use super::{FamilyError, IdentityRecord, TermKind};
use crate::lambert::{
    deriv_t_imag, lambert_S, pi_ref, sinh_sq_sum, zeta_ref, MpComplex, PrecisionCtx,
};

/// Outcome of one numerical check. `passed` iff `|residual| < threshold`.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub name: String,
    pub digits: u32,
    pub residual: Float,
    pub threshold: Float,
    pub passed: bool,
    /// `|coefficient·value|` per term, in record order.
    pub term_magnitudes: Vec<Float>,
}

impl VerificationReport {
    /// Threshold `10^{−(digits−10)}` times the largest term magnitude.
    pub(crate) fn from_parts(name: &str, ctx: &PrecisionCtx, residual: Float, mags: Vec<Float>) -> Self {
        let prec = ctx.bits();
        let largest = mags
            .iter()
            .fold(Float::new(prec), |m, x| if *x > m { Float::with_val(prec, x) } else { m });
        let slack = Float::with_val(prec, 10).pow(-(ctx.digits as i32 - 10));
        let threshold = largest * slack;
        let passed = Float::with_val(prec, residual.abs_ref()) < threshold;
        VerificationReport {
            name: name.to_string(),
            digits: ctx.digits,
            residual,
            threshold,
            passed,
            term_magnitudes: mags,
        }
    }

    /// Complex relations report `|Σ|` as the residual.
    pub(crate) fn from_complex(name: &str, ctx: &PrecisionCtx, parts: &[MpComplex]) -> Self {
        let prec = ctx.bits();
        let sum = parts.iter().fold(MpComplex::zero(prec), |acc, p| &acc + p);
        let mags = parts.iter().map(MpComplex::abs).collect();
        Self::from_parts(name, ctx, sum.abs(), mags)
    }

    pub fn largest_term(&self) -> f64 {
        self.term_magnitudes.iter().map(Float::to_f64).fold(0.0, f64::max)
    }

    /// `|residual|` divided by the largest term.
    pub fn relative_residual(&self) -> f64 {
        let prec = self.residual.prec();
        let largest = self
            .term_magnitudes
            .iter()
            .fold(Float::new(prec), |m, x| if *x > m { Float::with_val(prec, x) } else { m });
        if largest.is_zero() {
            return 0.0;
        }
        (Float::with_val(prec, self.residual.abs_ref()) / largest).to_f64()
    }
}

/// Numerical value of a single term kind.
pub fn term_value(kind: &TermKind, ctx: &PrecisionCtx) -> Result<Float, FamilyError> {
    let prec = ctx.bits();
    Ok(match kind {
        TermKind::Lambert { k, merit } => lambert_S(*k, merit, ctx)?,
        TermKind::DerivT { k, merit } => deriv_t_imag(*k, merit, ctx)?,
        TermKind::SinhSq { merit } => {
            let x = Float::with_val(prec, merit).sqrt() / 2u32;
            sinh_sq_sum(&x, ctx)?
        }
        TermKind::LogPrime { p } => Float::with_val(prec, *p).ln(),
        TermKind::PiPower { k } => pi_ref(ctx).pow(*k),
        TermKind::ZetaTarget { k } => zeta_ref(*k, ctx)?,
        TermKind::RationalConst => Float::with_val(prec, 1),
    })
}

/// `Σ coefficient·value` over the record at the context's precision.
pub fn eval_identity(rec: &IdentityRecord, ctx: &PrecisionCtx) -> Result<VerificationReport, FamilyError> {
    let prec = ctx.bits();
    let mut residual = Float::new(prec);
    let mut mags = Vec::with_capacity(rec.terms.len());
    for t in &rec.terms {
        let v = term_value(&t.kind, ctx)? * t.coeff.to_float(prec);
        mags.push(Float::with_val(prec, v.abs_ref()));
        residual += v;
    }
    Ok(VerificationReport::from_parts(&rec.name, ctx, residual, mags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::families::record;

    fn ctx(d: u32) -> PrecisionCtx {
        PrecisionCtx::new(d).unwrap()
    }

    #[test]
    fn rz3_passes_at_100_digits() {
        let r = eval_identity(&record("rz3").unwrap(), &ctx(100)).unwrap();
        assert!(r.passed);
        assert!(Float::with_val(64, r.residual.abs_ref()) < Float::with_val(64, 10).pow(-90));
    }

    #[test]
    fn corrupted_b5_fails_linearly() {
        let c = ctx(60);
        let mut rec = record("B5").unwrap();
        let idx = rec
            .terms
            .iter()
            .position(|t| t.kind == TermKind::Lambert { k: 5, merit: rat(8, 1) })
            .unwrap();
        let delta = rat(1, 1) / rug::Rational::from(rug::Integer::from(10).pow(20));
        rec.terms[idx].coeff.rational += &delta;
        let r = eval_identity(&rec, &c).unwrap();
        assert!(!r.passed);
        let s = lambert_S(5, &rat(8, 1), &c).unwrap().to_f64();
        let ratio = r.residual.to_f64().abs() / (1e-20 * s);
        assert!((ratio - 1.0).abs() < 1e-6, "ratio {ratio}");
    }

    #[test]
    fn constant_terms() {
        let c = ctx(30);
        let l2 = term_value(&TermKind::LogPrime { p: 2 }, &c).unwrap();
        assert!((l2.to_f64() - std::f64::consts::LN_2).abs() < 1e-15);
        let ip = term_value(&TermKind::PiPower { k: -1 }, &c).unwrap();
        assert!((ip.to_f64() - std::f64::consts::FRAC_1_PI).abs() < 1e-15);
    }
}
