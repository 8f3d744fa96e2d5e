//! The identity corpus. Each record is written as `lhs = rhs`; terms after
//! `equals()` are negated so the stored record sums to zero.

use std::sync::OnceLock;

use super::{IdentityRecord, Suite, Term, TermKind};
use crate::exact::{rat, BigRat, RealSurd};

const D36: [i64; 8] = [2, 3, 4, 6, 9, 12, 18, 36];

/// Printed `H_7 = 443·12³` and `H_84 = −443`; the other seven were recovered
/// by integer-relation search (see `relation`).
pub(crate) const H84_ALL: [(i64, i64); 9] = [
    (7, 765_504),
    (9, 10_545_024),
    (14, -1_542_969),
    (18, -21_254_814),
    (21, -28_352),
    (28, 11_961),
    (36, 164_766),
    (42, 57_147),
    (84, -443),
];

fn q(n: i64, d: i64) -> BigRat {
    rat(n, d)
}

fn int(n: i64) -> BigRat {
    BigRat::from(n)
}

fn rs(c: BigRat) -> RealSurd {
    RealSurd::rational(c)
}

/// `c·√s`.
fn rt(c: BigRat, s: i64) -> RealSurd {
    RealSurd::pure(c, int(s))
}

/// `c/√s`.
fn over_rt(c: BigRat, s: i64) -> RealSurd {
    RealSurd::pure(c / int(s), int(s))
}

/// `p + q√s`.
fn qs(p: i64, q: i64, s: i64) -> RealSurd {
    RealSurd::new(int(p), int(q), int(s))
}

struct Builder {
    rec: IdentityRecord,
    negate: bool,
}

fn rec(name: &str, suite: Suite) -> Builder {
    Builder {
        rec: IdentityRecord {
            name: name.to_string(),
            suite,
            terms: Vec::new(),
        },
        negate: false,
    }
}

impl Builder {
    fn push(mut self, coeff: RealSurd, kind: TermKind) -> Self {
        let coeff = if self.negate { coeff.neg() } else { coeff };
        self.rec.terms.push(Term { coeff, kind });
        self
    }

    fn equals(mut self) -> Self {
        self.negate = true;
        self
    }

    fn zeta(self, k: u32, c: BigRat) -> Self {
        self.push(rs(c), TermKind::ZetaTarget { k })
    }

    fn pi(self, k: i32, c: RealSurd) -> Self {
        self.push(c, TermKind::PiPower { k })
    }

    fn konst(self, c: RealSurd) -> Self {
        self.push(c, TermKind::RationalConst)
    }

    fn log(self, p: u32, c: BigRat) -> Self {
        self.push(rs(c), TermKind::LogPrime { p })
    }

    fn s(self, k: u32, merit: BigRat, c: BigRat) -> Self {
        self.push(rs(c), TermKind::Lambert { k, merit })
    }

    fn lams(self, k: u32, items: impl IntoIterator<Item = (BigRat, BigRat)>) -> Self {
        items.into_iter().fold(self, |b, (m, c)| b.s(k, m, c))
    }

    fn t3(self, items: impl IntoIterator<Item = (BigRat, BigRat)>) -> Self {
        items.into_iter().fold(self, |b, (merit, c)| {
            b.push(rs(c), TermKind::DerivT { k: 3, merit })
        })
    }

    fn sinh(self, merit: BigRat, c: RealSurd) -> Self {
        self.push(c, TermKind::SinhSq { merit })
    }

    fn done(self) -> IdentityRecord {
        self.rec
    }
}

/// `[(m_i, c_i)]` from parallel integer merit and rational coefficient lists.
fn pairs(merits: &[i64], coeffs: &[(i64, i64)]) -> Vec<(BigRat, BigRat)> {
    merits
        .iter()
        .zip(coeffs)
        .map(|(&m, &(n, d))| (int(m), q(n, d)))
        .collect()
}

/// `(num·d²/den, c·scale)` over a divisor list.
fn scaled(num: i64, den: i64, ds: &[i64], cs: &[i64], scale: BigRat) -> Vec<(BigRat, BigRat)> {
    ds.iter()
        .zip(cs)
        .map(|(&d, &c)| (q(num * d * d, den), int(c) * scale.clone()))
        .collect()
}

fn integral() -> Vec<IdentityRecord> {
    use Suite::Families as F;
    let fam = |name: &str, k: u32, pi: RealSurd, lam: Vec<(BigRat, BigRat)>| {
        rec(name, F).zeta(k, int(1)).equals().pi(k as i32, pi).lams(k, lam).done()
    };
    vec![
        fam("rz3", 3, rs(q(7, 180)), pairs(&[4], &[(-2, 1)])),
        fam("rz5", 5, rs(q(1, 294)), pairs(&[4, 16], &[(-74, 35), (4, 35)])),
        fam("rz7", 7, rs(q(19, 56700)), pairs(&[4], &[(-2, 1)])),
        fam("A3", 3, rt(q(29, 1980), 7), pairs(&[7, 28, 112], &[(24, 11), (-52, 11), (6, 11)])),
        fam("A5", 5, rt(q(5, 3906), 7), pairs(&[7, 28, 112], &[(64, 31), (-130, 31), (4, 31)])),
        fam(
            "A7",
            7,
            rt(q(851, 6_747_300), 7),
            pairs(&[7, 28, 112], &[(240, 119), (-1927, 476), (15, 476)]),
        ),
        fam("B3", 3, rt(q(17, 620), 2), pairs(&[8, 18, 72], &[(-60, 31), (-4, 31), (2, 31)])),
        fam(
            "B5",
            5,
            rt(q(191, 79695), 2),
            pairs(&[8, 18, 72], &[(-516, 253), (8, 253), (2, 253)]),
        ),
        fam(
            "B7",
            7,
            rt(q(3197, 13_538_700), 2),
            pairs(&[8, 18, 72], &[(-612, 307), (-16, 2149), (2, 2149)]),
        ),
        fam(
            "C5",
            5,
            rs(q(682, 201_285)),
            pairs(&[9, 16, 36, 144], &[(296, 355), (-488, 355), (-1073, 710), (37, 710)]),
        ),
        fam(
            "C9",
            9,
            rs(q(5048, 150_155_775)),
            pairs(
                &[9, 16, 36, 144],
                &[(-2272, 1605), (-5624, 1605), (37559, 12840), (-71, 12840)],
            ),
        ),
        fam(
            "D5",
            5,
            rs(q(694, 204_813)),
            pairs(&[16, 25, 100, 400], &[(-6280, 3251), (296, 3251), (-1073, 6502), (37, 6502)]),
        ),
        fam(
            "E7",
            7,
            rt(q(3257, 16200 * 1043), 3),
            pairs(
                &[12, 27, 108, 432],
                &[(-2215, 1043), (-129, 1043), (129 * 129, 64 * 1043), (-129, 64 * 1043)],
            ),
        ),
    ]
}

fn fractional() -> Vec<IdentityRecord> {
    use Suite::Fractional as F;
    let simple = |name: &str, k: u32, pi: RealSurd, lam: Vec<(BigRat, BigRat)>| {
        rec(name, F).zeta(k, int(1)).equals().pi(k as i32, pi).lams(k, lam).done()
    };
    let m = |n: i64, d: i64, cn: i64, cd: i64| (q(n, d), q(cn, cd));
    let mut out = vec![
        simple(
            "F3",
            3,
            rt(q(10, 999), 15),
            vec![m(20, 3, -3, 37), m(15, 1, 80, 37), m(60, 1, -171, 37), m(240, 1, 20, 37)],
        ),
        simple(
            "F5",
            5,
            rt(q(1327, 1_516_725), 15),
            vec![m(20, 3, -63, 535), m(15, 1, 208, 107), m(60, 1, -2112, 535), m(240, 1, 13, 107)],
        ),
        simple(
            "Fa3",
            3,
            rt(q(16351, 1_633_500), 15),
            vec![
                m(48, 5, 2, 121),
                m(80, 3, -6, 605),
                m(15, 1, 1368, 605),
                m(240, 1, 342, 605),
                m(60, 1, -2924, 605),
            ],
        ),
        simple(
            "H3",
            3,
            rt(q(133, 5940), 3),
            vec![m(16, 3, -6, 11), m(12, 1, -18, 11), m(48, 1, 2, 11)],
        ),
        simple(
            "H5",
            5,
            rt(q(17, 8694), 3),
            vec![m(16, 3, 18, 23), m(12, 1, -66, 23), m(48, 1, 2, 23)],
        ),
        simple(
            "H7",
            7,
            rt(q(10309, 53_468_100), 3),
            vec![m(16, 3, -2322, 6601), m(12, 1, -10966, 6601), m(48, 1, 86, 6601)],
        ),
        simple(
            "G3",
            3,
            rt(q(181, 6600), 2),
            vec![m(9, 2, -16, 55), m(8, 1, -4, 5), m(32, 1, -52, 55), m(288, 1, 2, 55)],
        ),
        simple(
            "G5",
            5,
            rt(q(5171, 2_158_380), 2),
            vec![m(9, 2, 128, 571), m(8, 1, -812, 571), m(32, 1, -460, 571), m(288, 1, 2, 571)],
        ),
        simple(
            "I3",
            3,
            rt(q(13, 750), 5),
            vec![m(5, 1, 2, 5), m(36, 5, -1, 4), m(20, 1, -23, 10), m(80, 1, 1, 10), m(180, 1, 1, 20)],
        ),
        simple(
            "I5",
            5,
            rt(q(809, 533_925), 5),
            vec![
                m(5, 1, 8, 113),
                m(36, 5, 25, 113),
                m(20, 1, -521, 226),
                m(80, 1, 1, 226),
                m(180, 1, 1, 113),
            ],
        ),
    ];

    let mut ia3 = vec![m(36, 5, -10, 79), m(144, 5, -2, 79), m(80, 9, 18, 395)];
    ia3.extend(scaled(5, 1, &[2, 3, 6, 12], &[-384, 4, 5, 1], q(2, 395)));
    out.push(simple("Ia3", 3, rt(q(18491, 1_066_500), 5), ia3));

    let mut f11 = vec![m(144, 11, 22, 45)];
    f11.extend(scaled(11, 9, &D36, &[81, 132, -9, -297, -4, 33, 9, -1], q(2, 45)));
    out.push(simple("F11", 3, over_rt(q(623, 4860), 11), f11));

    let mut alt11 = vec![m(400, 99, -99, 1), m(11, 1, -4 * 635, 1), m(44, 1, 9 * 635, 1), m(176, 1, -635, 1)];
    alt11.extend(scaled(25, 11, &[2, 3, 4, 6, 12], &[-207, -4, 23, 9, -1], int(11)));
    alt11.extend(scaled(11, 25, &[4, 6, 12], &[-23, -9, 1], int(25)));
    alt11.extend(scaled(
        275,
        9,
        &[1, 2, 3, 4, 6, 9, 12, 18, 36],
        &[36, -81, -92, 9, 207, 4, -23, -9, 1],
        int(1),
    ));
    out.push(
        rec("alt11", F)
            .zeta(3, int(131))
            .equals()
            .pi(3, over_rt(q(13 * 3511, 2700), 11))
            .lams(3, alt11)
            .done(),
    );

    let mut got35 = vec![m(144, 35, 35, 24), m(80, 7, -7, 24), m(28, 5, -15, 8), m(112, 5, 5, 24)];
    got35.extend(scaled(35, 9, &D36, &[81, 112, -9, -252, -4, 28, 9, -1], q(1, 24)));
    out.push(simple("got35", 3, over_rt(q(2969, 12960), 35), got35));

    let mut got35a = vec![m(28, 5, -315, 166), m(35, 1, 4, 664), m(140, 1, -9, 664), m(560, 1, 1, 664)];
    for (d, c) in [(3, -4), (4, 28), (6, 9), (12, -1)] {
        got35a.push(m(7 * d * d, 5, 5 * c, 664));
        got35a.push(m(5 * d * d, 7, -7 * c, 664));
    }
    out.push(simple("got35a", 3, over_rt(q(4573, 19920), 35), got35a));

    let mut alt7 = vec![m(36, 7, -175, 1), m(144, 7, 21, 1), m(112, 9, -27, 1)];
    alt7.extend(scaled(7, 1, &[1, 2, 3, 4, 6, 12], &[-12, 40, -12, -3, 25, -3], int(1)));
    out.push(
        rec("alt7", F)
            .zeta(3, int(73))
            .equals()
            .pi(3, over_rt(q(15, 2), 7))
            .lams(3, alt7)
            .done(),
    );

    let mut got23 = vec![m(144, 23, -23, 25)];
    got23.extend(scaled(23, 9, &D36, &[-72, -60, 9, 114, 4, -15, -8, 1], q(1, 25)));
    out.push(simple("got23", 3, over_rt(q(93, 500), 23), got23));

    let mut alt4 = vec![m(144, 25, 625, 1), m(16, 1, -3_050_976, 37), m(36, 1, 32 * 389, 1)];
    alt4.extend(scaled(25, 9, &[2, 4, 6, 9, 18, 36], &[-81 * 37, 81, 16 * 61, 16, -37, 1], int(1)));
    out.push(
        rec("alt4", F)
            .zeta(5, q(2_639_795, 74))
            .equals()
            .pi(5, rs(q(12_075_457, 99900)))
            .lams(5, alt4)
            .done(),
    );

    let mut g12 = vec![m(12, 1, -29 * 449, 7)];
    g12.extend(scaled(25, 3, &[1, 2, 3, 4, 6, 12], &[1728, -27 * 129, -64, 27, 129, -1], q(43, 896)));
    out.push(
        rec("G12", F)
            .zeta(7, int(970))
            .equals()
            .pi(7, rt(q(3029, 16200), 3))
            .lams(7, g12)
            .done(),
    );

    out.push(h84_record(&H84_ALL));
    out
}

/// `44071ζ(7) = (5734√3/675)π⁷ + (1/128)Σ H_d S_7(q_{1/3}^d)`.
pub(crate) fn h84_record(h: &[(i64, i64)]) -> IdentityRecord {
    let lam = h.iter().map(|&(d, c)| (q(d * d, 3), q(c, 128)));
    rec("H84", Suite::Fractional)
        .zeta(7, int(44071))
        .equals()
        .pi(7, rt(q(5734, 675), 3))
        .lams(7, lam)
        .done()
}

fn k1() -> Vec<IdentityRecord> {
    use Suite::K1;
    let lam = |ms: &[i64], cs: &[i64]| -> Vec<(BigRat, BigRat)> {
        ms.iter().zip(cs).map(|(&m, &c)| (int(m), int(c))).collect()
    };
    let mut out = vec![
        rec("K1A", K1)
            .lams(1, lam(&[7, 28, 112], &[1, -2, 1]))
            .equals()
            .pi(1, rt(q(-1, 24), 7))
            .log(2, q(1, 2))
            .done(),
        rec("K1B", K1)
            .lams(1, lam(&[8, 18, 72], &[2, -1, -1]))
            .equals()
            .pi(1, rt(q(5, 24), 2))
            .log(2, q(1, 4))
            .log(3, int(-1))
            .done(),
        rec("K1C", K1)
            .lams(1, lam(&[9, 16, 36, 144], &[1, 2, -4, 1]))
            .equals()
            .pi(1, rs(q(1, 24)))
            .log(2, int(1))
            .log(3, q(-3, 4))
            .done(),
        rec("K1D", K1)
            .lams(1, lam(&[16, 25, 100, 400], &[2, 1, -4, 1]))
            .equals()
            .pi(1, rs(q(7, 24)))
            .log(2, int(1))
            .log(5, int(-1))
            .done(),
        rec("K1E", K1)
            .lams(1, lam(&[12, 27, 108, 432], &[1, 1, -3, 1]))
            .equals()
            .pi(1, rt(q(1, 24), 3))
            .log(2, q(1, 3))
            .log(3, q(-5, 12))
            .done(),
    ];
    // L_d = S_1(q_{1/3}^d) − 3S_1(q_{1/3}^{2d}) + S_1(q_{1/3}^{4d})
    let mut fast = Vec::new();
    for (d, w) in [(7i64, 1i64), (9, -2), (21, 1)] {
        for (j, c) in [(1i64, 1i64), (2, -3), (4, 1)] {
            fast.push((q(j * j * d * d, 3), int(w * c)));
        }
    }
    out.push(
        rec("fast", K1)
            .lams(1, fast)
            .equals()
            .pi(1, rt(q(5, 36), 3))
            .log(3, q(13, 12))
            .log(7, int(-1))
            .done(),
    );
    out
}

fn derivative() -> Vec<IdentityRecord> {
    let der = |name: &str, pi: RealSurd, ts: Vec<(BigRat, BigRat)>| {
        rec(name, Suite::Derivative)
            .zeta(3, int(1))
            .equals()
            .pi(3, pi)
            .t3(ts)
            .done()
    };
    vec![
        der("DA", rt(q(7, 480), 7), pairs(&[7, 28, 112], &[(5, 2), (-41, 8), (5, 8)])),
        der("DB", rt(q(47, 1710), 2), pairs(&[8, 18, 72], &[(-44, 19), (4, 19), (2, 19)])),
        der(
            "DC",
            rs(q(7, 180)),
            pairs(&[9, 16, 36, 144], &[(-4, 1), (-8, 1), (11, 1), (-1, 1)]),
        ),
        der(
            "DD",
            rs(q(221, 5700)),
            pairs(&[16, 25, 100, 400], &[(-232, 95), (-28, 95), (77, 95), (-7, 95)]),
        ),
        der(
            "DE",
            rt(q(43, 1920), 3),
            pairs(&[12, 27, 108, 432], &[(-25, 8), (-9, 8), (81, 32), (-9, 32)]),
        ),
    ]
}

fn pi_suite() -> Vec<IdentityRecord> {
    use Suite::Pi;
    let sums = |b: Builder, num: i64, den: i64, s: i64, ds: &[i64], rat: &[i64], sur: &[i64], sign: i64| {
        ds.iter().zip(rat.iter().zip(sur)).fold(b, |b, (&d, (&x, &y))| {
            b.sinh(q(num * d * d, den), qs(sign * x, sign * y, s))
        })
    };

    let pi12 = rec("pi12", Pi)
        .pi(-1, rt(q(11, 3), 3))
        .konst(rt(q(-7, 6), 3))
        .equals()
        .sinh(int(12), qs(4, 4, 3))
        .sinh(int(27), qs(-18, -3, 3))
        .sinh(int(432), qs(72, 12, 3))
        .sinh(int(48), qs(-40, 16, 3))
        .sinh(int(108), qs(-18, -36, 3))
        .done();

    let f15 = rec("faster15", Pi).pi(-1, rs(int(11))).konst(rs(q(-7, 2))).equals();
    let f15 = sums(f15, 5, 3, 15, &[3, 4, 6, 12], &[-1, -24, 72, -68], &[18, -8, -82, 72], 1).done();

    // β̃ + γ̃√8 = β̃ + 2γ̃√2
    let f8 = rec("faster8", Pi).pi(-1, rs(int(11))).konst(rs(q(-7, 2))).equals();
    let f8 = sums(f8, 2, 1, 2, &[3, 4, 6, 12], &[105, 96, -486, 264], &[78, 0, -366, 288], 1).done();

    let b5 = rec("best5", Pi)
        .pi(-1, rs(int(1511)))
        .equals()
        .konst(rs(int(481)))
        .sinh(q(144, 5), qs(-396, -360, 5));
    let b5 = sums(
        b5,
        5,
        1,
        5,
        &[2, 3, 4, 6, 12],
        &[549, 1368, -4440, -2439, 7452],
        &[4493, -1080, -1280, 27, -2520],
        -1,
    )
    .done();

    let b7 = rec("best7", Pi)
        .pi(-1, rs(q(111, 2)))
        .equals()
        .konst(rs(q(53, 3)))
        .sinh(q(144, 7), qs(-32, -16, 7));
    let b7 = sums(
        b7,
        7,
        1,
        7,
        &[2, 3, 4, 6, 12],
        &[752, -350, -1504, 0, 1176],
        &[147, 35, 180, -630, 252],
        -1,
    )
    .done();

    vec![pi12, f15, f8, b5, b7]
}

fn build() -> Vec<IdentityRecord> {
    let mut all = integral();
    all.extend(fractional());
    all.extend(k1());
    all.extend(derivative());
    all.extend(pi_suite());
    all
}

/// Every explicit identity, in a fixed order.
pub fn corpus() -> Vec<IdentityRecord> {
    static CORPUS: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CORPUS.get_or_init(build).clone()
}

pub fn record(name: &str) -> Option<IdentityRecord> {
    corpus().into_iter().find(|r| r.name == name)
}
