//! The corpus as one JSON document. Each nonzero part of a `p + q√s`
//! coefficient becomes its own term entry; rationals are strings.

use serde::{Deserialize, Serialize};

use super::{IdentityRecord, TermKind};
use crate::exact::BigRat;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportTerm {
    pub coeff_num: String,
    pub coeff_den: String,
    pub surd_s: String,
    pub kind: String,
    /// Order for series, ζ and π terms; absent otherwise.
    pub k: Option<i64>,
    /// Series merit; for `log_prime` the prime itself.
    pub merit_num: Option<String>,
    pub merit_den: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub name: String,
    pub suite: String,
    pub terms: Vec<ExportTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub schema: u32,
    pub records: Vec<ExportRecord>,
}

fn kind_fields(kind: &TermKind) -> (Option<i64>, Option<BigRat>) {
    match kind {
        TermKind::Lambert { k, merit } | TermKind::DerivT { k, merit } => {
            (Some(i64::from(*k)), Some(merit.clone()))
        }
        TermKind::SinhSq { merit } => (None, Some(merit.clone())),
        TermKind::LogPrime { p } => (None, Some(BigRat::from(*p))),
        TermKind::PiPower { k } => (Some(i64::from(*k)), None),
        TermKind::ZetaTarget { k } => (Some(i64::from(*k)), None),
        TermKind::RationalConst => (None, None),
    }
}

fn export_record(rec: &IdentityRecord) -> ExportRecord {
    let mut terms = Vec::new();
    for t in &rec.terms {
        let (k, merit) = kind_fields(&t.kind);
        let parts = [
            (&t.coeff.rational, BigRat::from(1)),
            (&t.coeff.surd, t.coeff.radicand.clone()),
        ];
        for (c, s) in parts {
            if *c == 0 {
                continue;
            }
            terms.push(ExportTerm {
                coeff_num: c.numer().to_string(),
                coeff_den: c.denom().to_string(),
                surd_s: s.to_string(),
                kind: t.kind.tag().to_string(),
                k,
                merit_num: merit.as_ref().map(|m| m.numer().to_string()),
                merit_den: merit.as_ref().map(|m| m.denom().to_string()),
            });
        }
    }
    ExportRecord {
        name: rec.name.clone(),
        suite: rec.suite.to_string(),
        terms,
    }
}

pub fn export_document(records: &[IdentityRecord]) -> ExportDocument {
    ExportDocument {
        schema: SCHEMA,
        records: records.iter().map(export_record).collect(),
    }
}

/// Pretty-printed JSON of [`export_document`].
pub fn export_json(records: &[IdentityRecord]) -> String {
    serde_json::to_string_pretty(&export_document(records)).expect("plain data serializes")
}
