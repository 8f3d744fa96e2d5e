//! Exact integer sequences, Bernoulli-sum polynomials and the coefficient
//! laws of the five integral families.

mod conjecture;
mod family;
mod sequences;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exact::ExactError;

pub use conjecture::{conjecture_check, ConjReport};
pub use family::{family_coeffs, h_poly, pi_seq, FamilyCoeffs};
pub(crate) use sequences::bfg_integers;
pub use sequences::{recurrence_for, seq_recurrence_check, seq_value, Recurrence, SequenceId};

#[derive(Debug, Error)]
pub enum CoeffError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("closed form for {id} at n = {n} is not an integer: {value}")]
    NonInteger {
        id: SequenceId,
        n: u32,
        value: String,
    },
    #[error("unknown sequence tag {0:?}")]
    UnknownSequence(String),
    #[error("unknown family tag {0:?}")]
    UnknownFamily(String),
    #[error("no recurrence is known for sequence {0}")]
    NoRecurrence(SequenceId),
    #[error("n_max = {n_max} is below the recurrence order {order}")]
    RangeTooShort { n_max: u32, order: usize },
    #[error("k = {k} is not of the form {form} for family {family}")]
    BadResidue {
        family: FamilyId,
        k: i64,
        form: &'static str,
    },
    #[error("k = 1 is singular for family {0}; the k = 1 identities are a fixed corpus")]
    Singular(FamilyId),
    #[error("index n must be at least 1")]
    ZeroIndex,
}

/// One of the five integral families with nome `q_s = exp(−π√s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyId {
    A,
    B,
    C,
    D,
    E,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E];

    /// Square-free part of the merit.
    pub fn base(self) -> u32 {
        match self {
            FamilyId::A => 7,
            FamilyId::B => 2,
            FamilyId::C | FamilyId::D => 1,
            FamilyId::E => 3,
        }
    }

    /// Merit of the slowest series, `min(d)²·s`.
    pub fn merit(self) -> u32 {
        match self {
            FamilyId::A => 7,
            FamilyId::B => 8,
            FamilyId::C => 9,
            FamilyId::D => 16,
            FamilyId::E => 12,
        }
    }

    pub fn divisors(self) -> &'static [u32] {
        match self {
            FamilyId::A => &[1, 2, 4],
            FamilyId::B => &[2, 3, 6],
            FamilyId::C => &[3, 4, 6, 12],
            FamilyId::D => &[4, 5, 10, 20],
            FamilyId::E => &[2, 3, 6, 12],
        }
    }

    /// `k = step·n + 1`.
    pub fn step(self) -> u32 {
        match self {
            FamilyId::A | FamilyId::B => 2,
            FamilyId::C | FamilyId::D => 4,
            FamilyId::E => 6,
        }
    }

    fn form(self) -> &'static str {
        match self.step() {
            2 => "2n+1",
            4 => "4n+1",
            _ => "6n+1",
        }
    }

    /// The index `n` with `k = step·n + 1`, `n ≥ 1`.
    pub fn index_for_k(self, k: i64) -> Result<u32, CoeffError> {
        let step = i64::from(self.step());
        if k == 1 {
            return Err(CoeffError::Singular(self));
        }
        if k < 1 || (k - 1) % step != 0 {
            return Err(CoeffError::BadResidue {
                family: self,
                k,
                form: self.form(),
            });
        }
        Ok(((k - 1) / step) as u32)
    }

    pub fn k_for_index(self, n: u32) -> u32 {
        self.step() * n + 1
    }

    /// Sequence whose `n`th term divides the coefficients at `k = step·n+1`.
    pub fn denominator_sequence(self) -> SequenceId {
        match self {
            FamilyId::A => SequenceId::A,
            FamilyId::B => SequenceId::B,
            FamilyId::C => SequenceId::C,
            FamilyId::D => SequenceId::D,
            FamilyId::E => SequenceId::E,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            FamilyId::A => "A",
            FamilyId::B => "B",
            FamilyId::C => "C",
            FamilyId::D => "D",
            FamilyId::E => "E",
        };
        f.write_str(c)
    }
}

impl FromStr for FamilyId {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(FamilyId::A),
            "B" => Ok(FamilyId::B),
            "C" => Ok(FamilyId::C),
            "D" => Ok(FamilyId::D),
            "E" => Ok(FamilyId::E),
            _ => Err(CoeffError::UnknownFamily(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convergence_condition_on_divisors() {
        for fam in FamilyId::ALL {
            for &d in fam.divisors() {
                assert!(d * d * fam.base() > 4, "{fam} d={d}");
            }
            let d0 = fam.divisors()[0];
            assert_eq!(d0 * d0 * fam.base(), fam.merit());
        }
    }

    #[test]
    fn residue_classes() {
        assert_eq!(FamilyId::A.index_for_k(3).unwrap(), 1);
        assert_eq!(FamilyId::C.index_for_k(9).unwrap(), 2);
        assert_eq!(FamilyId::E.index_for_k(13).unwrap(), 2);
        assert!(matches!(FamilyId::C.index_for_k(7), Err(CoeffError::BadResidue { .. })));
        assert!(matches!(FamilyId::A.index_for_k(1), Err(CoeffError::Singular(_))));
        assert!(matches!(FamilyId::B.index_for_k(4), Err(CoeffError::BadResidue { .. })));
        assert_eq!("d".parse::<FamilyId>().unwrap(), FamilyId::D);
        assert!("F".parse::<FamilyId>().is_err());
    }
}
