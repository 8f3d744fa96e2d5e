use std::collections::BTreeMap;

use serde::Serialize;

use super::{seq_value, CoeffError, FamilyId};
use crate::exact::{bernoulli, binomial, factorial, ipow, BigRat, QuadRat};

/// Exact coefficients of
/// `ζ(k) = pi_coeff·√s·π^k + Σ_d lambert[d]·S_k(q_s^d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCoeffs {
    pub family: FamilyId,
    pub k: u32,
    pub n: u32,
    #[serde(serialize_with = "crate::ser::rat")]
    pub pi_coeff: BigRat,
    #[serde(serialize_with = "crate::ser::rat_map")]
    pub lambert: BTreeMap<u32, BigRat>,
}

impl FamilyCoeffs {
    /// Merit `d²·s` of the series with divisor `d`.
    pub fn merit_of(&self, d: u32) -> u32 {
        d * d * self.family.base()
    }

    pub fn lambert_sum(&self) -> BigRat {
        self.lambert.values().fold(BigRat::new(), |acc, c| acc + c)
    }
}

/// `ℋ_n(z) = (−1)^{n+1} Σ_{m=0}^{n+1} z^{2m−1} C(2n+2, 2m) B_{2m} B_{2n+2−2m}`.
pub fn h_poly(n: u32, z: &QuadRat) -> Result<QuadRat, CoeffError> {
    let mut zp = z.inv()?;
    let z2 = z * z;
    let mut acc = QuadRat::rational(BigRat::new(), z.s().clone())?;
    for m in 0..=n + 1 {
        let c = BigRat::from(binomial(2 * n + 2, 2 * m))
            * bernoulli(2 * m)
            * bernoulli(2 * n + 2 - 2 * m);
        if c != 0 {
            acc = &acc + &zp.scale(&c);
        }
        zp = &zp * &z2;
    }
    if n.is_multiple_of(2) {
        acc = -acc;
    }
    Ok(acc)
}

fn im_h(n: u32, a: i64, b: i64, den: i64, s: i64) -> Result<BigRat, CoeffError> {
    let z = QuadRat::from_ints(a, b, den, s)?;
    Ok(h_poly(n, &z)?.im().clone())
}

/// The rational `A_n`, `B_n`, `C_n`, `D_n` or `E_n`: a scaled imaginary part
/// of ℋ at CM points of the family's field. Dividing `Im ℋ` by `√s` is
/// exactly taking the `√(−s)` coefficient.
pub fn pi_seq(fam: FamilyId, n: u32) -> Result<BigRat, CoeffError> {
    if n == 0 {
        return Err(CoeffError::ZeroIndex);
    }
    let n64 = i64::from(n);
    Ok(match fam {
        FamilyId::A => {
            let scale = BigRat::from((2 * n64 + 3) * ipow(2, 2 * n + 3));
            scale * im_h(n, 1, 1, 4, 7)?
        }
        FamilyId::B => {
            let scale = BigRat::from(4 * (2 * n64 + 3) * ipow(3, 2 * n));
            let im = BigRat::from(2) * im_h(n, 1, 1, 3, 2)? + im_h(n, 0, 1, 3, 2)?;
            scale * im
        }
        FamilyId::C => {
            let scale = BigRat::from((4 * n64 + 3) * ipow(3, 4 * n)) / (4 * n64 + 1);
            let im = BigRat::from(2) * im_h(2 * n, 2, 2, 3, 1)? + im_h(2 * n, 0, 2, 3, 1)?;
            scale * im
        }
        FamilyId::D => {
            let scale = BigRat::from((4 * n64 + 3) * ipow(5, 4 * n)) / (4 * n64 + 1);
            let im = BigRat::from(2) * im_h(2 * n, 2, 2, 5, 1)?
                + BigRat::from(2) * im_h(2 * n, 1, 2, 5, 1)?
                + im_h(2 * n, 0, 2, 5, 1)?;
            scale * im
        }
        FamilyId::E => {
            let num = 48 * (2 * n64 + 1) * (3 * n64 + 2) * ipow(3, 6 * n);
            let scale = BigRat::from(num) / ((3 * n64 + 1) * (6 * n64 + 1));
            let im = BigRat::from(2) * im_h(3 * n, 1, 1, 3, 3)? + im_h(3 * n, 0, 1, 3, 3)?;
            scale * im
        }
    })
}

/// Exact coefficients of family `fam` at odd `k` in its residue class.
pub fn family_coeffs(fam: FamilyId, k: i64) -> Result<FamilyCoeffs, CoeffError> {
    let n = fam.index_for_k(k)?;
    let den = BigRat::from(seq_value(fam.denominator_sequence(), n)?);
    let pn = pi_seq(fam, n)?;
    let pi_coeff = match fam {
        FamilyId::A | FamilyId::B => {
            pn * BigRat::from(ipow(2, 2 * n - 1)) / BigRat::from(factorial(2 * n + 3)) / &den
        }
        FamilyId::C | FamilyId::D => {
            let div = factorial(4 * n) * (2 * n + 1) * (4 * n + 3);
            pn * BigRat::from(ipow(2, 4 * n)) / BigRat::from(div) / &den
        }
        FamilyId::E => {
            let div = factorial(6 * n) * (6 * n + 3) * (6 * n + 4);
            pn * BigRat::from(ipow(2, 6 * n - 4)) / BigRat::from(div) / &den
        }
    };

    let two = BigRat::from(2);
    let mut lambert = BTreeMap::new();
    match fam {
        FamilyId::A => {
            let a1 = BigRat::from(2) + BigRat::from(&two / &den);
            let a4 = BigRat::from(&a1 / ipow(2, 2 * n));
            let a2 = BigRat::from(-2) - &a1 - &a4;
            lambert.extend([(1, a1), (2, a2), (4, a4)]);
        }
        FamilyId::B => {
            let b6 = BigRat::from(&two / &den);
            let b3 = BigRat::from(&b6 * ipow(-2, n));
            let b2 = BigRat::from(-2) - &b3 - &b6;
            lambert.extend([(2, b2), (3, b3), (6, b6)]);
        }
        FamilyId::C | FamilyId::D => {
            // (d1, d2, d3, d4) = (3, 4, 6, 12) for C and (5, 4, 10, 20) for D
            let (small, rest, mid, top) = if fam == FamilyId::C {
                (3, 4, 6, 12)
            } else {
                (5, 4, 10, 20)
            };
            let m4 = BigRat::from(ipow(-4, n));
            let f = BigRat::from(ipow(2, 4 * n + 1) + 1);
            let c_top = (BigRat::from(1) - BigRat::from(&f / &m4)) * &two / &den;
            let c_small = BigRat::from(&c_top * ipow(2, 4 * n));
            let c_mid = -(f + m4) * &c_top;
            let c_rest = BigRat::from(-2) - &c_top - &c_small - &c_mid;
            lambert.extend([(small, c_small), (rest, c_rest), (mid, c_mid), (top, c_top)]);
        }
        FamilyId::E => {
            let f = BigRat::from(ipow(2, 6 * n + 1) + 1);
            let e3 = -BigRat::from(&f / &den);
            let e2 = BigRat::from(&e3 - 2u32);
            let e12 = BigRat::from(&e3 / ipow(2, 6 * n));
            let e6 = -f * &e12;
            lambert.extend([(2, e2), (3, e3), (6, e6), (12, e12)]);
        }
    }
    Ok(FamilyCoeffs {
        family: fam,
        k: fam.k_for_index(n),
        n,
        pi_coeff,
        lambert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn h_poly_small_cases() {
        let i = QuadRat::from_ints(0, 1, 1, 1).unwrap();
        assert!(h_poly(0, &i).unwrap().is_zero());
        let one = QuadRat::from_ints(1, 0, 1, 1).unwrap();
        assert_eq!(h_poly(0, &one).unwrap(), QuadRat::from_ints(-1, 0, 3, 1).unwrap());
        let zero = QuadRat::from_ints(0, 0, 1, 1).unwrap();
        assert!(h_poly(2, &zero).is_err());
    }

    #[test]
    fn known_pi_sequences() {
        let cases: &[(FamilyId, &[(i64, i64)])] = &[
            (FamilyId::A, &[(29, 3), (25, 1), (851, 5), (6451, 3), (1088813, 35), (684521, 1)]),
            (FamilyId::B, &[(51, 1), (382, 1), (28773, 5), (145566, 1), (181903711, 35)]),
            (FamilyId::C, &[(341, 9), (88340, 27), (26827985, 3), (18438055674, 1)]),
            (FamilyId::D, &[(347, 1), (15297320, 27), (5164889285, 1)]),
            (FamilyId::E, &[(3257, 1), (212373152, 3)]),
        ];
        for (fam, want) in cases {
            for (i, &(p, q)) in want.iter().enumerate() {
                assert_eq!(pi_seq(*fam, i as u32 + 1).unwrap(), rat(p, q), "{fam} n={}", i + 1);
            }
        }
        assert_eq!(pi_seq(FamilyId::A, 7).unwrap(), rat(846243643, 45));
        assert_eq!(pi_seq(FamilyId::D, 4).unwrap(), rat(1030773088821534, 7));
        assert_eq!(pi_seq(FamilyId::E, 3).unwrap(), rat(325348272142978, 15));
        assert!(matches!(pi_seq(FamilyId::A, 0), Err(CoeffError::ZeroIndex)));
    }

    fn lam(fc: &FamilyCoeffs) -> Vec<(u32, BigRat)> {
        fc.lambert.iter().map(|(d, c)| (*d, c.clone())).collect()
    }

    #[test]
    fn known_members() {
        let a3 = family_coeffs(FamilyId::A, 3).unwrap();
        assert_eq!(a3.pi_coeff, rat(29, 1980));
        assert_eq!(lam(&a3), [(1, rat(24, 11)), (2, rat(-52, 11)), (4, rat(6, 11))]);

        let a5 = family_coeffs(FamilyId::A, 5).unwrap();
        assert_eq!(a5.pi_coeff, rat(5, 3906));
        assert_eq!(lam(&a5), [(1, rat(64, 31)), (2, rat(-130, 31)), (4, rat(4, 31))]);

        let a7 = family_coeffs(FamilyId::A, 7).unwrap();
        assert_eq!(a7.pi_coeff, rat(851, 6747300));
        assert_eq!(lam(&a7), [(1, rat(240, 119)), (2, rat(-1927, 476)), (4, rat(15, 476))]);

        let b3 = family_coeffs(FamilyId::B, 3).unwrap();
        assert_eq!(b3.pi_coeff, rat(17, 620));
        assert_eq!(lam(&b3), [(2, rat(-60, 31)), (3, rat(-4, 31)), (6, rat(2, 31))]);

        let b5 = family_coeffs(FamilyId::B, 5).unwrap();
        assert_eq!(b5.pi_coeff, rat(191, 79695));
        assert_eq!(lam(&b5), [(2, rat(-516, 253)), (3, rat(8, 253)), (6, rat(2, 253))]);

        let b7 = family_coeffs(FamilyId::B, 7).unwrap();
        assert_eq!(b7.pi_coeff, rat(3197, 13538700));
        assert_eq!(lam(&b7), [(2, rat(-612, 307)), (3, rat(-16, 2149)), (6, rat(2, 2149))]);

        let c5 = family_coeffs(FamilyId::C, 5).unwrap();
        assert_eq!(c5.pi_coeff, rat(682, 201285));
        assert_eq!(
            lam(&c5),
            [(3, rat(296, 355)), (4, rat(-488, 355)), (6, rat(-1073, 710)), (12, rat(37, 710))]
        );

        let c9 = family_coeffs(FamilyId::C, 9).unwrap();
        assert_eq!(c9.pi_coeff, rat(5048, 150155775));
        assert_eq!(
            lam(&c9),
            [
                (3, rat(-2272, 1605)),
                (4, rat(-5624, 1605)),
                (6, rat(37559, 12840)),
                (12, rat(-71, 12840))
            ]
        );

        let d5 = family_coeffs(FamilyId::D, 5).unwrap();
        assert_eq!(d5.pi_coeff, rat(694, 204813));
        assert_eq!(
            lam(&d5),
            [(4, rat(-6280, 3251)), (5, rat(296, 3251)), (10, rat(-1073, 6502)), (20, rat(37, 6502))]
        );

        let e7 = family_coeffs(FamilyId::E, 7).unwrap();
        assert_eq!(e7.pi_coeff, rat(3257, 1043 * 16200));
        assert_eq!(
            lam(&e7),
            [
                (2, rat(-2215, 1043)),
                (3, rat(-129, 1043)),
                (6, rat(129 * 129, 64 * 1043)),
                (12, rat(-129, 64 * 1043))
            ]
        );
    }

    #[test]
    fn singular_and_off_class_requests() {
        assert!(matches!(family_coeffs(FamilyId::A, 1), Err(CoeffError::Singular(_))));
        assert!(matches!(family_coeffs(FamilyId::E, 9), Err(CoeffError::BadResidue { .. })));
    }

    #[test]
    fn a_pi_seq_matches_division_of_known_coefficients() {
        // A_n = (2n+3)!/2^{2n−1}·a_n·A_{2n+1,0}
        for (n, p, q) in [(1u32, 29, 1980), (2, 5, 3906), (3, 851, 6747300)] {
            let a = BigRat::from(seq_value(super::super::SequenceId::A, n).unwrap());
            let via = BigRat::from(factorial(2 * n + 3)) / BigRat::from(ipow(2, 2 * n - 1))
                * a
                * rat(p, q);
            assert_eq!(via, pi_seq(FamilyId::A, n).unwrap());
        }
    }

    fn fam_strategy() -> impl Strategy<Value = FamilyId> {
        prop::sample::select(FamilyId::ALL.to_vec())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn lambert_coefficients_sum_to_minus_two(fam in fam_strategy(), n in 1u32..=25) {
            let fc = family_coeffs(fam, i64::from(fam.k_for_index(n))).unwrap();
            prop_assert_eq!(fc.lambert_sum(), -2);
        }

        #[test]
        fn known_coefficient_ratios(fam in fam_strategy(), n in 1u32..=25) {
            let fc = family_coeffs(fam, i64::from(fam.k_for_index(n))).unwrap();
            let l = &fc.lambert;
            let c = |d: u32| l[&d].clone();
            match fam {
                FamilyId::A => prop_assert_eq!(c(1), c(4) * BigRat::from(ipow(2, 2 * n))),
                FamilyId::B => prop_assert_eq!(c(3), c(6) * BigRat::from(ipow(-2, n))),
                FamilyId::C => prop_assert_eq!(c(3), c(12) * BigRat::from(ipow(2, 4 * n))),
                FamilyId::D => prop_assert_eq!(c(5), c(20) * BigRat::from(ipow(2, 4 * n))),
                FamilyId::E => {
                    prop_assert_eq!(c(3), c(12) * BigRat::from(ipow(2, 6 * n)));
                    prop_assert_eq!(c(2) - c(3), -2);
                }
            }
        }
    }
}
