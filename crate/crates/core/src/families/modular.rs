use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;

use super::{FamilyError, VerificationReport};
use crate::exact::{rat, BigRat};
use crate::lambert::{
    p_func, pi_ref, r_func, sinh_sq_sum_complex, t_func, u_func, MpComplex, PrecisionCtx,
    UpperHalfPoint,
};

/// The quasi-modular transformation, its derivative form, the multisection
/// relations and the cosecant-squared reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModularRelationId {
    Qm,
    Dr,
    Tr,
    Z4,
    Z6,
    Z8,
    Z10,
    Z12,
    Qr,
    Sr,
    Qmd,
    Sx,
}

impl ModularRelationId {
    pub const ALL: [ModularRelationId; 12] = [
        ModularRelationId::Qm,
        ModularRelationId::Dr,
        ModularRelationId::Tr,
        ModularRelationId::Z4,
        ModularRelationId::Z6,
        ModularRelationId::Z8,
        ModularRelationId::Z10,
        ModularRelationId::Z12,
        ModularRelationId::Qr,
        ModularRelationId::Sr,
        ModularRelationId::Qmd,
        ModularRelationId::Sx,
    ];

    pub fn as_str(self) -> &'static str {
        use ModularRelationId::*;
        match self {
            Qm => "qm",
            Dr => "dr",
            Tr => "tr",
            Z4 => "z4",
            Z6 => "z6",
            Z8 => "z8",
            Z10 => "z10",
            Z12 => "z12",
            Qr => "qr",
            Sr => "sr",
            Qmd => "qmd",
            Sx => "Sx",
        }
    }

    /// Orders at which the relation is defined. `Sx` ignores `k`.
    pub fn accepts(self, k: u32) -> bool {
        match self {
            ModularRelationId::Qm => k % 2 == 1,
            ModularRelationId::Qmd => k % 2 == 1 && k >= 3,
            ModularRelationId::Sx => true,
            _ => k >= 1,
        }
    }
}

impl fmt::Display for ModularRelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModularRelationId {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        ModularRelationId::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::UnknownRelation(s.to_string()))
    }
}

/// `b^e` for integer `e` of either sign.
fn pw(b: i64, e: i64) -> BigRat {
    let p = BigRat::from(crate::exact::ipow(b, e.unsigned_abs() as u32));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn r(n: i64) -> BigRat {
    BigRat::from(n)
}

fn sym(den: i64, nums: &[i64]) -> Vec<BigRat> {
    nums.iter().flat_map(|&n| [rat(-n, den), rat(n, den)]).collect()
}

/// `Σ_{r ∈ shifts} P_k(z + r) = Σ c·P_k(m z)` as (shifts, [(c, m)]).
fn multisection(rel: ModularRelationId, k: u32) -> (Vec<BigRat>, Vec<(BigRat, u32)>) {
    use ModularRelationId::*;
    let k = i64::from(k);
    let t = pw(2, 1 - k);
    let th = pw(3, 1 - k);
    let f4 = pw(4, 1 - k);
    let f5 = pw(5, 1 - k);
    let s6 = pw(6, 1 - k);
    let s7 = pw(7, 1 - k);
    let t10 = pw(10, 1 - k);
    let t12 = pw(12, 1 - k);
    let a2 = pw(2, k) + 1u32;
    let a3 = pw(3, k) + 1u32;
    let a5 = pw(5, k) + 1u32;
    let c = |x: &BigRat| x.clone();
    match rel {
        Dr => (vec![rat(-1, 2), r(0)], vec![(r(2) + &t, 2), (-c(&t), 4)]),
        Tr => (
            vec![rat(-1, 3), r(0), rat(1, 3)],
            vec![(r(3) + &th, 3), (-c(&th), 9)],
        ),
        Z4 => {
            let u = r(2) + &t;
            (
                sym(4, &[1]),
                vec![(c(&u) * &u - &t, 4), (-c(&u), 2), (-(u * &t), 8)],
            )
        }
        Z8 => {
            let cc = (r(1) + pw(2, -k) + pw(4, -k)) * 4u32;
            (
                sym(8, &[1, 3]),
                vec![
                    (r(4), 8),
                    (-c(&cc), 4),
                    (c(&cc) * (r(1) + &t), 8),
                    (-(cc * &t), 16),
                ],
            )
        }
        Z6 => (
            sym(6, &[1]),
            vec![
                (r(1), 1),
                (c(&t), 4),
                (c(&th), 9),
                (-(c(&a2) * &t), 2),
                (-(c(&a2) * &s6), 18),
                (-(c(&a3) * &th), 3),
                (-(c(&a3) * &s6), 12),
                (c(&s6) * &a2 * &a3, 6),
                (c(&s6), 36),
            ],
        ),
        Z10 => (
            sym(10, &[1, 3]),
            vec![
                (r(1), 1),
                (c(&t), 4),
                (c(&f5), 25),
                (-(c(&a2) * &t), 2),
                (-(c(&a2) * &t10), 50),
                (-(c(&a5) * &f5), 5),
                (-(c(&a5) * &t10), 20),
                (c(&t10) * &a2 * &a5, 10),
                (c(&t10), 100),
            ],
        ),
        Z12 => {
            let bb = c(&a2) * &a2 - pw(2, k - 1);
            let s6a = c(&s6) * &a2 * &a3;
            (
                sym(12, &[1, 5]),
                vec![
                    (c(&a2) * &t, 2),
                    (c(&a2) * &f4, 8),
                    (c(&a2) * &s6, 18),
                    (c(&a2) * &t12, 72),
                    (-(c(&bb) * &f4), 4),
                    (c(&bb) * &t12 * &a3, 12),
                    (-(c(&bb) * &t12), 36),
                    (-c(&s6a), 6),
                    (-(s6a * &t), 24),
                ],
            )
        }
        Qr => (
            (-2..=2).map(|j| rat(j, 5)).collect(),
            vec![(r(5) + &f5, 5), (-c(&f5), 25)],
        ),
        Sr => (
            (-3..=3).map(|j| rat(j, 7)).collect(),
            vec![(r(7) + &s7, 7), (-c(&s7), 49)],
        ),
        Qm | Qmd | Sx => unreachable!("not a multisection relation"),
    }
}

fn shifted(z: &MpComplex, by: &BigRat) -> Result<UpperHalfPoint, FamilyError> {
    let re = Float::with_val(z.prec(), &z.re + by);
    Ok(UpperHalfPoint::new(MpComplex::new(re, z.im.clone()))?)
}

fn scaled(z: &MpComplex, m: u32) -> Result<UpperHalfPoint, FamilyError> {
    Ok(UpperHalfPoint::new(z.scale(&Float::with_val(z.prec(), m)))?)
}

fn flip(z: &MpComplex) -> Result<UpperHalfPoint, FamilyError> {
    Ok(UpperHalfPoint::new(-&z.inv())?)
}

/// Residual of one relation at `z`, as the sum of its signed parts.
pub fn modular_check(
    rel: ModularRelationId,
    k: u32,
    z: &UpperHalfPoint,
    ctx: &PrecisionCtx,
) -> Result<VerificationReport, FamilyError> {
    if !rel.accepts(k) {
        return Err(FamilyError::BadOrder { rel, k });
    }
    let prec = ctx.bits();
    let zc = MpComplex::new(Float::with_val(prec, &z.z().re), Float::with_val(prec, &z.z().im));
    let zp = UpperHalfPoint::new(zc.clone())?;
    let zk1 = zc.powi(i64::from(k) - 1);
    let parts: Vec<MpComplex> = match rel {
        ModularRelationId::Qm => vec![
            &zk1 * &p_func(k, &flip(&zc)?, ctx)?,
            -&p_func(k, &zp, ctx)?,
            r_func(k, &zc, ctx)?,
        ],
        ModularRelationId::Qmd => vec![
            &zk1 * &t_func(k, &flip(&zc)?, ctx)?,
            -&u_func(k, &zc, ctx)?,
            t_func(k, &zp, ctx)?,
        ],
        ModularRelationId::Sx => {
            // x = −iz has positive real part
            let x = MpComplex::new(zc.im.clone(), Float::with_val(prec, -&zc.re));
            let x2 = &x * &x;
            let one = MpComplex::from_real(Float::with_val(prec, 1));
            let sixth = Float::with_val(prec, 6).recip();
            let inv_pi = pi_ref(ctx).recip();
            vec![
                &x2 * &sinh_sq_sum_complex(&x, ctx)?,
                -&(&one + &x2).scale(&sixth),
                x.scale(&inv_pi),
                sinh_sq_sum_complex(&x.inv(), ctx)?,
            ]
        }
        _ => {
            let (shifts, rhs) = multisection(rel, k);
            let mut parts = Vec::with_capacity(shifts.len() + rhs.len());
            for s in &shifts {
                parts.push(p_func(k, &shifted(&zc, s)?, ctx)?);
            }
            for (c, m) in &rhs {
                let v = p_func(k, &scaled(&zc, *m)?, ctx)?;
                parts.push(-&v.scale(&Float::with_val(prec, c)));
            }
            parts
        }
    };
    let name = format!("{rel} k={k}");
    Ok(VerificationReport::from_complex(&name, ctx, &parts))
}

/// Seed of the reproducible test points.
const POINT_SEED: u64 = 0x5eed_2e7a;

/// Three fixed pseudo-random points with `|Re z| ≤ ½` and `½ ≤ Im z ≤ 3/2`.
pub fn test_points(ctx: &PrecisionCtx) -> Vec<UpperHalfPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(POINT_SEED);
    (0..3)
        .map(|_| {
            let re: f64 = rng.random_range(-0.5..=0.5);
            let im: f64 = rng.random_range(0.5..=1.5);
            UpperHalfPoint::from_f64(re, im, ctx).expect("Im z >= 1/2")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionCtx {
        PrecisionCtx::new(d).unwrap()
    }

    fn pt(re: f64, im: f64, c: &PrecisionCtx) -> UpperHalfPoint {
        UpperHalfPoint::from_f64(re, im, c).unwrap()
    }

    #[test]
    fn doubling_at_sample_point() {
        let c = ctx(40);
        assert!(modular_check(ModularRelationId::Dr, 3, &pt(0.3, 0.9, &c), &c).unwrap().passed);
    }

    #[test]
    fn qm_at_k1() {
        let c = ctx(40);
        let r = modular_check(ModularRelationId::Qm, 1, &pt(0.4, 1.1, &c), &c).unwrap();
        assert!(r.passed, "{}", r.relative_residual());
    }

    #[test]
    fn z6_at_cm_point() {
        let c = ctx(40);
        let im = Float::with_val(c.bits(), 5).sqrt() / 6u32;
        let z = UpperHalfPoint::new(MpComplex::new(Float::new(c.bits()), im)).unwrap();
        assert!(modular_check(ModularRelationId::Z6, 5, &z, &c).unwrap().passed);
    }

    #[test]
    fn every_relation_at_one_point() {
        let c = ctx(30);
        let z = pt(-0.2, 0.8, &c);
        for rel in ModularRelationId::ALL {
            let r = modular_check(rel, 5, &z, &c).unwrap();
            assert!(r.passed, "{rel}: {}", r.relative_residual());
        }
    }

    #[test]
    fn multisections_fail_with_a_wrong_order() {
        // the coefficients depend on k, so using k = 5 tables at k = 3 breaks them
        let c = ctx(30);
        let z = pt(0.1, 0.7, &c);
        let (shifts, rhs) = multisection(ModularRelationId::Z12, 5);
        let prec = c.bits();
        let mut parts = Vec::new();
        for s in &shifts {
            parts.push(p_func(3, &shifted(z.z(), s).unwrap(), &c).unwrap());
        }
        for (co, m) in &rhs {
            let v = p_func(3, &scaled(z.z(), *m).unwrap(), &c).unwrap();
            parts.push(-&v.scale(&Float::with_val(prec, co)));
        }
        assert!(!VerificationReport::from_complex("x", &c, &parts).passed);
    }

    #[test]
    fn rejects_bad_orders_and_names() {
        let c = ctx(20);
        let z = pt(0.0, 1.0, &c);
        assert!(modular_check(ModularRelationId::Qm, 4, &z, &c).is_err());
        assert!(modular_check(ModularRelationId::Qmd, 1, &z, &c).is_err());
        assert!("z9".parse::<ModularRelationId>().is_err());
        assert_eq!("sx".parse::<ModularRelationId>().unwrap(), ModularRelationId::Sx);
    }

    #[test]
    fn points_are_fixed_and_in_range() {
        let c = ctx(20);
        let a = test_points(&c);
        let b = test_points(&c);
        assert_eq!(a.len(), 3);
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.z().to_f64_pair(), q.z().to_f64_pair());
            let (re, im) = p.z().to_f64_pair();
            assert!(re.abs() <= 0.5 && (0.5..=1.5).contains(&im));
        }
    }
}
