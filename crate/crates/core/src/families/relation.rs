//! Integer relations by exact integral LLL, used once to recover the seven
//! unknown integers of the merit-d²/3 ζ(7) identity.

use std::collections::BTreeMap;

use rug::ops::{DivRounding, Pow};
use rug::{Float, Integer};

use super::corpus::{h84_record, H84_ALL};
use super::{eval_identity, term_value, FamilyError, TermKind};
use crate::exact::{rat, BigInt};
use crate::lambert::PrecisionCtx;

/// Divisors `d` whose `H_d` are not known.
pub const H84_UNKNOWN: [u32; 7] = [9, 14, 18, 21, 28, 36, 42];

/// Integral LLL with `δ = 3/4`: Gram–Schmidt data kept as the integers
/// `d_i` and `λ_{ij}` so no rationals appear.
#[allow(clippy::needless_range_loop)]
fn lll(basis: &mut [Vec<BigInt>]) {
    let n = basis.len();
    if n < 2 {
        return;
    }
    let dot = |a: &[BigInt], b: &[BigInt]| -> BigInt {
        a.iter().zip(b).fold(Integer::new(), |acc, (x, y)| acc + Integer::from(x * y))
    };
    // 1-based d with d[0] = 1
    let mut d = vec![Integer::from(1); n + 1];
    let mut lam = vec![vec![Integer::new(); n]; n];
    let mut k = 1usize;
    let mut kmax = 0usize;
    d[1] = dot(&basis[0], &basis[0]);

    let red = |basis: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize| {
        let twice = Integer::from(&lam[k][l] * 2u32).abs();
        if twice > d[l + 1] {
            // nearest integer to λ/d
            let num = Integer::from(&lam[k][l] * 2u32) + &d[l + 1];
            let q = num.div_floor(Integer::from(&d[l + 1] * 2u32));
            let (lo, hi) = basis.split_at_mut(k);
            for (x, y) in hi[0].iter_mut().zip(&lo[l]) {
                *x -= Integer::from(&q * y);
            }
            lam[k][l] -= Integer::from(&q * &d[l + 1]);
            for i in 0..l {
                let t = Integer::from(&q * &lam[l][i]);
                lam[k][i] -= t;
            }
        }
    };

    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&basis[k], &basis[j]);
                for i in 0..j {
                    u = (Integer::from(&d[i + 1] * &u) - Integer::from(&lam[k][i] * &lam[j][i])) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    d[k + 1] = u;
                }
            }
        }
        red(basis, &mut lam, &d, k, k - 1);
        let lhs = Integer::from(&d[k + 1] * &d[k - 1]) * 4u32;
        let rhs = Integer::from(d[k].square_ref()) * 3u32 - Integer::from(lam[k][k - 1].square_ref()) * 4u32;
        if lhs < rhs {
            basis.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = std::mem::take(&mut lam[k][j]);
                lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
            }
            let l = lam[k][k - 1].clone();
            let b = (Integer::from(&d[k - 1] * &d[k + 1]) + Integer::from(l.square_ref())) / &d[k];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (Integer::from(&d[k + 1] * &lam[i][k - 1]) - Integer::from(&l * &t)) / &d[k];
                lam[i][k - 1] = (Integer::from(&b * &t) + Integer::from(&l * &lam[i][k])) / &d[k + 1];
            }
            d[k] = b;
            if k > 1 {
                k -= 1;
            }
        } else {
            for l in (0..k - 1).rev() {
                red(basis, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
}

/// A short integer vector `c` with `Σ c_i x_i ≈ 0`, from LLL on the lattice
/// `[I | round(10^{scale}·x)]`. Returns `None` when the shortest vector
/// leaves a residual above `10^{−(scale−5)}`; a spurious lattice vector
/// only reaches about `10^{scale/n − scale}`. The values must carry more
/// than `scale` correct digits.
pub fn integer_relation(values: &[Float], scale_digits: u32) -> Option<Vec<BigInt>> {
    let n = values.len();
    let prec = values.first()?.prec();
    let big = Float::with_val(prec, 10).pow(scale_digits);
    let mut basis: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![Integer::new(); n + 1];
            row[i] = Integer::from(1);
            let scaled = Float::with_val(prec, &values[i] * &big).round();
            row[n] = scaled.to_integer().expect("finite value");
            row
        })
        .collect();
    lll(&mut basis);
    let best = basis.into_iter().next()?;
    let coeffs: Vec<BigInt> = best[..n].to_vec();
    if coeffs.iter().all(|c| *c == 0) {
        return None;
    }
    let res = coeffs
        .iter()
        .zip(values)
        .fold(Float::new(prec), |acc, (c, v)| acc + Float::with_val(prec, v * c));
    let tol = Float::with_val(prec, 10).pow(5 - scale_digits as i32);
    (res.abs() < tol).then_some(coeffs)
}

/// Re-derives the seven unknown `H_d` from the known `H_7`, `H_84`, the
/// ζ(7) weight 44071 and the π coefficient, then re-checks the full record.
pub fn h84_regenerate(ctx: &PrecisionCtx) -> Result<BTreeMap<u32, BigInt>, FamilyError> {
    let prec = ctx.bits();
    let value = |kind: TermKind| term_value(&kind, ctx);
    let series = |d: i64| value(TermKind::Lambert { k: 7, merit: rat(d * d, 3) });

    // K = 44071ζ(7) − (5734√3/675)π⁷ − (H_7 S_7 + H_84 S_84)/128, so that
    // 128K = Σ_{unknown} H_d S_d
    let known = h84_record(&[H84_ALL[0], H84_ALL[8]]);
    let mut k_val = Float::new(prec);
    for t in &known.terms {
        k_val += value(t.kind.clone())? * t.coeff.to_float(prec);
    }
    // the stored record is ζ-side minus right side, so K = that sum
    let mut vals = vec![k_val * 128u32];
    for d in H84_UNKNOWN {
        vals.push(series(i64::from(d))?);
    }
    let scale = ctx.digits.saturating_sub(20);
    let rel = integer_relation(&vals, scale).ok_or(FamilyError::NoRelation { digits: ctx.digits })?;
    // 128K·c_0 + Σ c_d S_d = 0 with c_0 = ±1 gives H_d = −c_d / c_0
    let c0 = rel[0].clone();
    if c0.clone().abs() != 1 {
        return Err(FamilyError::NoRelation { digits: ctx.digits });
    }
    let found: BTreeMap<u32, BigInt> = H84_UNKNOWN
        .iter()
        .zip(&rel[1..])
        .map(|(&d, c)| (d, -Integer::from(c * &c0)))
        .collect();

    let mut full = vec![H84_ALL[0]];
    for (&d, h) in &found {
        full.push((i64::from(d), h.to_i64().ok_or(FamilyError::NoRelation { digits: ctx.digits })?));
    }
    full.push(H84_ALL[8]);
    let check = PrecisionCtx::new(ctx.digits.min(120))?;
    if !eval_identity(&h84_record(&full), &check)?.passed {
        return Err(FamilyError::NoRelation { digits: ctx.digits });
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_a_planted_relation() {
        let prec = 400;
        let x = Float::with_val(prec, 2).sqrt();
        let y = Float::with_val(prec, 3).sqrt();
        let z = Float::with_val(prec, &x * 17) - Float::with_val(prec, &y * 5);
        let rel = integer_relation(&[x, y, z], 80).unwrap();
        let norm: Vec<i64> = rel.iter().map(|c| c.to_i64().unwrap()).collect();
        assert!(norm == vec![17, -5, -1] || norm == vec![-17, 5, 1], "{norm:?}");
    }

    #[test]
    fn no_relation_among_independent_constants() {
        let prec = 400;
        let vals = [
            Float::with_val(prec, rug::float::Constant::Pi),
            Float::with_val(prec, 2).ln(),
            Float::with_val(prec, 1),
        ];
        assert!(integer_relation(&vals, 60).is_none());
    }
}
