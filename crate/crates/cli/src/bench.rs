//! Predicted cost against measured work for each way of computing ζ(k).

use std::time::Instant;

use serde_json::{json, Value};
use zetafam_core::coeffs::{family_coeffs, FamilyId};
use zetafam_core::exact::{rat, BigRat, RealSurd};
use zetafam_core::families::{cost_model, zeta_via, ZetaMethod};
use zetafam_core::lambert::{lambert_eval, PrecisionCtx};

#[derive(Debug)]
pub enum BenchError {
    Usage(String),
    Internal(String),
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub k: i64,
    /// Family letter, `R`, or `base` for the two-series merit 4 + 16 baseline.
    pub method: String,
    pub cost_exact: RealSurd,
    pub cost: f64,
    /// Summands `Li_k(q^m)` over all series used.
    pub terms: u64,
    /// `terms` relative to one merit-4 series.
    pub ratio: f64,
    pub median_ms: f64,
    pub preferred: bool,
}

impl BenchRow {
    pub fn results_json(&self) -> Value {
        json!({
            "k": self.k,
            "method": self.method,
            "predicted_cost": self.cost_exact.to_string(),
            "predicted_cost_value": self.cost,
            "terms": self.terms,
            "ratio_to_merit4": self.ratio,
            "median_ms": self.median_ms,
            "preferred": self.preferred,
        })
    }
}

fn internal(e: impl std::fmt::Display) -> BenchError {
    BenchError::Internal(e.to_string())
}

fn series_terms(k: i64, merits: &[BigRat], ctx: &PrecisionCtx) -> Result<u64, BenchError> {
    let mut n = 0;
    for a in merits {
        n += lambert_eval(k as u32, a, ctx).map_err(internal)?.outer_terms;
    }
    Ok(n)
}

fn median_ms<F: FnMut() -> Result<(), BenchError>>(reps: u32, mut f: F) -> Result<f64, BenchError> {
    let mut times = Vec::new();
    for _ in 0..reps.max(1) {
        let t = Instant::now();
        f()?;
        times.push(t.elapsed().as_secs_f64() * 1e3);
    }
    times.sort_by(f64::total_cmp);
    Ok(times[times.len() / 2])
}

fn rows_for(k: i64, ctx: &PrecisionCtx, reps: u32) -> Result<Vec<BenchRow>, BenchError> {
    if k < 3 || k % 2 == 0 {
        return Err(BenchError::Usage(format!("k must be odd and at least 3, got {k}")));
    }
    let unit = series_terms(k, &[rat(4, 1)], ctx)? as f64;
    let mut rows = Vec::new();
    let mut push = |method: String, cost_exact: RealSurd, merits: Vec<BigRat>, time: f64| -> Result<(), BenchError> {
        let terms = series_terms(k, &merits, ctx)?;
        rows.push(BenchRow {
            k,
            method,
            cost: cost_exact.to_float(64).to_f64(),
            cost_exact,
            terms,
            ratio: terms as f64 / unit,
            median_ms: time,
            preferred: false,
        });
        Ok(())
    };

    for fam in FamilyId::ALL {
        let m = ZetaMethod::Family(fam);
        if !m.supports(k) {
            continue;
        }
        let fc = family_coeffs(fam, k).map_err(internal)?;
        let merits = fc.lambert.keys().map(|&d| BigRat::from(fc.merit_of(d))).collect();
        let t = median_ms(reps, || zeta_via(m, k, ctx).map(drop).map_err(internal))?;
        push(fam.to_string(), cost_model(fam).exact, merits, t)?;
    }
    if k % 4 == 3 {
        let m = ZetaMethod::Ramanujan;
        let t = median_ms(reps, || zeta_via(m, k, ctx).map(drop).map_err(internal))?;
        push("R".into(), RealSurd::rational(rat(1, 1)), vec![rat(4, 1)], t)?;
    } else {
        // S(q²) and S(q⁴): cost 1 + 1/2
        let merits = vec![rat(4, 1), rat(16, 1)];
        let t = median_ms(reps, || {
            for a in &merits {
                lambert_eval(k as u32, a, ctx).map_err(internal)?;
            }
            Ok(())
        })?;
        push("base".into(), RealSurd::rational(rat(3, 2)), merits.clone(), t)?;
    }
    let best = rows.iter().map(|r| r.cost).fold(f64::INFINITY, f64::min);
    for r in &mut rows {
        r.preferred = r.cost == best;
    }
    Ok(rows)
}

/// One row per applicable method for every `k`, each timed `reps` times.
pub fn bench_run(ks: &[i64], ctx: &PrecisionCtx, reps: u32) -> Result<Vec<BenchRow>, BenchError> {
    let mut out = Vec::new();
    for &k in ks {
        out.extend(rows_for(k, ctx, reps)?);
    }
    Ok(out)
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut s = format!(
        "{:>4} {:<6} {:<14} {:>8} {:>7} {:>7} {:>11}  pick\n",
        "k", "method", "cost", "≈", "terms", "ratio", "median ms"
    );
    for r in rows {
        s.push_str(&format!(
            "{:>4} {:<6} {:<14} {:>8.4} {:>7} {:>7.3} {:>11.3}  {}\n",
            r.k,
            r.method,
            r.cost_exact.to_string(),
            r.cost,
            r.terms,
            r.ratio,
            r.median_ms,
            if r.preferred { "*" } else { "" }
        ));
    }
    s.trim_end().to_string()
}
