//! Benchmarks only; see `benches/`.

use zetafam_core::coeffs::FamilyId;
use zetafam_core::families::ZetaMethod;

/// Every method that covers `k`.
pub fn methods_for(k: i64) -> Vec<ZetaMethod> {
    let mut out: Vec<ZetaMethod> = FamilyId::ALL.into_iter().map(ZetaMethod::Family).collect();
    out.push(ZetaMethod::Ramanujan);
    out.retain(|m| m.supports(k));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coverage() {
        assert_eq!(methods_for(3).len(), 3);
        assert_eq!(methods_for(5).len(), 4);
    }
}
