//! Every explicit identity as exact data, numerical verification of those
//! identities and of the quasi-modular relations, evaluation of ζ(k) through
//! the integral families, and the cost model.

mod corpus;
mod eval;
mod export;
mod gen15;
mod modular;
mod relation;
mod zeta;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coeffs::CoeffError;
use crate::exact::{BigRat, RealSurd};
use crate::lambert::LambertError;

pub use corpus::{corpus, record};
pub use eval::{eval_identity, term_value, VerificationReport};
pub use export::{export_document, export_json, ExportDocument, ExportRecord, ExportTerm};
pub use gen15::{gen15_record, rational_reconstruction, solve_pi_coeff};
pub use modular::{modular_check, test_points, ModularRelationId};
pub use relation::{h84_regenerate, integer_relation, H84_UNKNOWN};
pub use zeta::{cost_model, merit_order, zeta_via, zeta_via_family, CostModel, ZetaMethod};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Lambert(#[from] LambertError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("no record named {0:?}")]
    UnknownRecord(String),
    #[error("unknown relation {0:?}")]
    UnknownRelation(String),
    #[error("relation {rel} is not defined for k = {k}")]
    BadOrder { rel: ModularRelationId, k: u32 },
    #[error("no convergent with denominator below 10^{bound_digits} matches; raise the precision")]
    Reconstruction { bound_digits: u32 },
    #[error("reconstructed value {value} fails re-verification at {digits} digits")]
    Reverify { value: String, digits: u32 },
    #[error("no integer relation found at {digits} digits")]
    NoRelation { digits: u32 },
    #[error("k = {0} is not odd and at least 3")]
    BadK(i64),
}

/// What a single term of an identity evaluates.
///
/// Series arguments are all stored as a merit `a > 0`: `Lambert` is
/// `S_k(e^{−π√a})`, `DerivT` is `T_k(i√a/2)` and `SinhSq` is `𝒮(√a/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermKind {
    Lambert { k: u32, merit: BigRat },
    DerivT { k: u32, merit: BigRat },
    SinhSq { merit: BigRat },
    LogPrime { p: u32 },
    /// `π^k`, with `k = −1` allowed.
    PiPower { k: i32 },
    ZetaTarget { k: u32 },
    RationalConst,
}

impl TermKind {
    pub fn tag(&self) -> &'static str {
        match self {
            TermKind::Lambert { .. } => "lambert",
            TermKind::DerivT { .. } => "deriv_t",
            TermKind::SinhSq { .. } => "sinh_sq",
            TermKind::LogPrime { .. } => "log_prime",
            TermKind::PiPower { .. } => "pi_power",
            TermKind::ZetaTarget { .. } => "zeta",
            TermKind::RationalConst => "const",
        }
    }

    pub fn merit(&self) -> Option<&BigRat> {
        match self {
            TermKind::Lambert { merit, .. }
            | TermKind::DerivT { merit, .. }
            | TermKind::SinhSq { merit } => Some(merit),
            _ => None,
        }
    }
}

impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermKind::Lambert { k, merit } => write!(f, "S_{k}[{merit}]"),
            TermKind::DerivT { k, merit } => write!(f, "T_{k}[{merit}]"),
            TermKind::SinhSq { merit } => write!(f, "Sinh[{merit}]"),
            TermKind::LogPrime { p } => write!(f, "log {p}"),
            TermKind::PiPower { k } => write!(f, "pi^{k}"),
            TermKind::ZetaTarget { k } => write!(f, "zeta({k})"),
            TermKind::RationalConst => write!(f, "1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: RealSurd,
    pub kind: TermKind,
}

/// Corpus grouping used by the verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Ramanujan's identities and the five integral families.
    Families,
    Fractional,
    K1,
    Derivative,
    Pi,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Families, Suite::Fractional, Suite::K1, Suite::Derivative, Suite::Pi];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Families => "families",
            Suite::Fractional => "fractional",
            Suite::K1 => "k1",
            Suite::Derivative => "derivative",
            Suite::Pi => "pi",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// An identity `Σ coeff·term = 0` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRecord {
    pub name: String,
    pub suite: Suite,
    pub terms: Vec<Term>,
}

impl IdentityRecord {
    pub fn zeta_order(&self) -> Option<u32> {
        self.terms.iter().find_map(|t| match t.kind {
            TermKind::ZetaTarget { k } => Some(k),
            _ => None,
        })
    }

    pub fn series_terms(&self) -> impl Iterator<Item = &Term> {
        self.terms.iter().filter(|t| t.kind.merit().is_some())
    }

    /// The series term with the smallest merit, which limits convergence.
    pub fn dominant_series(&self) -> Option<&Term> {
        self.series_terms()
            .min_by(|a, b| a.kind.merit().cmp(&b.kind.merit()))
    }

    /// Structural checks: at most one ζ and one π term, positive merits,
    /// no zero coefficients.
    pub fn validate(&self) -> Result<(), String> {
        let count = |tag: &str| self.terms.iter().filter(|t| t.kind.tag() == tag).count();
        if count("zeta") > 1 || count("pi_power") > 1 {
            return Err(format!("{}: repeated zeta or pi term", self.name));
        }
        for t in &self.terms {
            if t.coeff.is_zero() {
                return Err(format!("{}: zero coefficient on {}", self.name, t.kind));
            }
            if let Some(m) = t.kind.merit() {
                if *m <= 0 {
                    return Err(format!("{}: merit {m} is not positive", self.name));
                }
            }
        }
        Ok(())
    }
}
