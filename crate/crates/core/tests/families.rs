use std::collections::BTreeSet;

use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Float, Rational};
use zetafam_core::coeffs::FamilyId;
use zetafam_core::exact::{rat, BigRat, RealSurd};
use zetafam_core::families::{
    corpus, eval_identity, export_document, h84_regenerate, merit_order, modular_check, record,
    zeta_via_family, IdentityRecord, ModularRelationId, Suite, Term, TermKind,
};
use zetafam_core::lambert::{PrecisionCtx, UpperHalfPoint};

fn ctx(d: u32) -> PrecisionCtx {
    PrecisionCtx::new(d).unwrap()
}

#[test]
fn h84_integers_regenerate() {
    let found = h84_regenerate(&ctx(300)).unwrap();
    let got: Vec<(u32, i64)> = found.iter().map(|(d, h)| (*d, h.to_i64().unwrap())).collect();
    assert_eq!(
        got,
        vec![
            (9, 10_545_024),
            (14, -1_542_969),
            (18, -21_254_814),
            (21, -28_352),
            (28, 11_961),
            (36, 164_766),
            (42, 57_147),
        ]
    );
}

#[test]
fn families_against_mpfr_zeta() {
    // MPFR's own zeta is a third, unrelated route
    let c = ctx(100);
    for (fam, k) in [(FamilyId::A, 9), (FamilyId::B, 15), (FamilyId::C, 13), (FamilyId::D, 21), (FamilyId::E, 19)] {
        let v = zeta_via_family(fam, k, &c).unwrap();
        let m = Float::with_val(c.bits(), Float::zeta_u(k as u32));
        let diff = Float::with_val(c.bits(), &v - &m).abs();
        assert!(diff < Float::with_val(64, 10).pow(-100), "{fam}{k}");
    }
}

#[test]
fn dominant_merits_are_the_ordered_list() {
    let dominant: BTreeSet<BigRat> = corpus()
        .iter()
        .filter(|r| matches!(r.suite, Suite::Families | Suite::Fractional))
        .filter_map(|r| r.dominant_series().and_then(|t| t.kind.merit().cloned()))
        .filter(|m| *m > 4)
        .collect();
    let listed: BTreeSet<BigRat> = merit_order().into_iter().collect();
    assert_eq!(dominant, listed);
}

/// Rebuilds records from the export document alone.
fn import(doc: &zetafam_core::families::ExportDocument) -> Vec<IdentityRecord> {
    let q = |n: &str, d: &str| Rational::from((n.parse::<rug::Integer>().unwrap(), d.parse::<rug::Integer>().unwrap()));
    doc.records
        .iter()
        .map(|r| {
            let terms = r
                .terms
                .iter()
                .map(|t| {
                    let c = q(&t.coeff_num, &t.coeff_den);
                    let s: BigRat = t.surd_s.parse().unwrap();
                    let coeff = if s == 1 { RealSurd::rational(c) } else { RealSurd::pure(c, s) };
                    let merit = || q(t.merit_num.as_deref().unwrap(), t.merit_den.as_deref().unwrap());
                    let k = t.k.unwrap_or(0);
                    let kind = match t.kind.as_str() {
                        "lambert" => TermKind::Lambert { k: k as u32, merit: merit() },
                        "deriv_t" => TermKind::DerivT { k: k as u32, merit: merit() },
                        "sinh_sq" => TermKind::SinhSq { merit: merit() },
                        "log_prime" => TermKind::LogPrime { p: merit().to_f64() as u32 },
                        "pi_power" => TermKind::PiPower { k: k as i32 },
                        "zeta" => TermKind::ZetaTarget { k: k as u32 },
                        "const" => TermKind::RationalConst,
                        other => panic!("kind {other}"),
                    };
                    Term { coeff, kind }
                })
                .collect();
            IdentityRecord {
                name: r.name.clone(),
                suite: r.suite.parse().unwrap(),
                terms,
            }
        })
        .collect()
}

#[test]
fn exported_corpus_still_verifies() {
    let doc = export_document(&corpus());
    let back = import(&doc);
    assert_eq!(back.len(), 49);
    let c = ctx(50);
    for r in &back {
        assert!(eval_identity(r, &c).unwrap().passed, "{}", r.name);
    }
}

#[test]
fn e7_at_120_digits() {
    assert!(eval_identity(&record("E7").unwrap(), &ctx(120)).unwrap().passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multisections_hold_anywhere(
        re in -0.5f64..0.5,
        im in 0.5f64..1.5,
        k in 2u32..=8,
        idx in 1usize..10,
    ) {
        let c = ctx(30);
        let z = UpperHalfPoint::from_f64(re, im, &c).unwrap();
        let rel = ModularRelationId::ALL[idx];
        let r = modular_check(rel, k, &z, &c).unwrap();
        prop_assert!(r.passed, "{} k={} rel {:e}", rel, k, r.relative_residual());
    }

    #[test]
    fn any_perturbed_coefficient_is_caught(which in 0usize..49, exp in 20i32..40) {
        let c = ctx(60);
        let mut rec = corpus()[which].clone();
        let t = rec.terms.iter().position(|t| t.kind.merit().is_some()).unwrap();
        let delta = rat(1, 1) / Rational::from(rug::Integer::from(10).pow(exp as u32));
        let coeff = &mut rec.terms[t].coeff;
        if coeff.rational != 0 {
            coeff.rational *= rat(1, 1) + delta;
        } else {
            coeff.surd *= rat(1, 1) + delta;
        }
        prop_assert!(!eval_identity(&rec, &c).unwrap().passed);
    }
}
