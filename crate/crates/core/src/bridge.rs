//! Conversion from quasisymmetric coordinates to symmetric ones.
//!
//! Input coefficients in a quasisymmetric basis are pushed forward into the
//! quasisymmetric monomial basis, validated for symmetry by comparing every
//! rearrangement class, aggregated into monomial symmetric coefficients, and
//! carried into the Schur basis by the inverse Kostka matrix.

use crate::composition::{distinct_rearrangements, Partition, StrongComposition};
use crate::error::{Error, Result};
use crate::qsym::{m_coeffs, QsymBasis};
use crate::rational::Rat;
use crate::symfn::inverse_kostka_matrix;
use crate::transition::InvertMode;
use num::Zero;
use std::collections::BTreeMap;

/// Push a coefficient vector in any quasisymmetric basis down to the
/// quasisymmetric monomial basis by forward expansion of each row.
pub fn to_qsym_monomials(
    basis: QsymBasis,
    coeffs: &BTreeMap<StrongComposition, Rat>,
) -> BTreeMap<StrongComposition, Rat> {
    let mut out: BTreeMap<StrongComposition, Rat> = BTreeMap::new();
    for (alpha, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        for (beta, w) in m_coeffs(basis, alpha) {
            let slot = out.entry(beta).or_insert_with(Rat::zero);
            *slot += w * c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// A quasisymmetric-monomial vector is symmetric exactly when the coefficient
/// is constant on every rearrangement class; the witness pair of a violation
/// is reported.
pub fn aggregate_symmetric(
    mono: &BTreeMap<StrongComposition, Rat>,
) -> Result<BTreeMap<Partition, Rat>> {
    let mut out = BTreeMap::new();
    let mut seen: std::collections::BTreeSet<Partition> = std::collections::BTreeSet::new();
    for (alpha, c) in mono {
        let lam = alpha.sort();
        if !seen.insert(lam.clone()) {
            continue;
        }
        let mut witness: Option<(StrongComposition, Rat)> = None;
        for arr in distinct_rearrangements(lam.parts(), lam.len()) {
            let beta = StrongComposition::new(arr).expect("no zero slots");
            let cb = mono.get(&beta).cloned().unwrap_or_else(Rat::zero);
            match &witness {
                None => witness = Some((beta, cb)),
                Some((first, c0)) => {
                    if &cb != c0 {
                        return Err(Error::NotSymmetric(
                            first.to_string(),
                            beta.to_string(),
                        ));
                    }
                }
            }
        }
        if !c.is_zero() {
            out.insert(lam, c.clone());
        }
    }
    Ok(out)
}

/// Full pipeline: quasisymmetric coordinates to Schur coordinates.  The
/// monomial-symmetric vector converts degree by degree through the inverse
/// Kostka matrix.
pub fn schur_from_qsym(
    basis: QsymBasis,
    coeffs: &BTreeMap<StrongComposition, Rat>,
    mode: InvertMode,
) -> Result<BTreeMap<Partition, Rat>> {
    let msym = aggregate_symmetric(&to_qsym_monomials(basis, coeffs))?;
    let mut degrees: BTreeMap<u64, BTreeMap<Partition, Rat>> = BTreeMap::new();
    for (lam, c) in msym {
        degrees.entry(lam.size()).or_default().insert(lam, c);
    }
    let mut out = BTreeMap::new();
    for (deg, slice) in degrees {
        if deg == 0 {
            out.extend(slice);
            continue;
        }
        let kinv = inverse_kostka_matrix(deg as u32, mode);
        for (lam, c) in kinv.convert(&slice)? {
            if !c.is_zero() {
                out.insert(lam, c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{parse_parts, partitions_of};
    use crate::rational::{rat_from_int, rat_int};
    use crate::symfn::{classic_m_entries, littlewood_richardson, ClassicBasis};

    fn sc(s: &str) -> StrongComposition {
        StrongComposition::new(parse_parts(s).unwrap()).unwrap()
    }

    fn pt(s: &str) -> Partition {
        Partition::new(parse_parts(s).unwrap()).unwrap()
    }

    /// m-coefficients of a classic basis element, spread over rearrangement
    /// classes into quasisymmetric monomial coordinates.
    fn classic_to_qsym_m(
        basis: ClassicBasis,
        lam: &Partition,
    ) -> BTreeMap<StrongComposition, Rat> {
        let mut out = BTreeMap::new();
        for (row, col, c) in classic_m_entries(basis, lam.size() as u32) {
            if &row == lam {
                for arr in distinct_rearrangements(col.parts(), col.len()) {
                    out.insert(
                        StrongComposition::new(arr).unwrap(),
                        rat_from_int(&c),
                    );
                }
            }
        }
        out
    }

    #[test]
    fn rejects_lone_quasisymmetric_monomial() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(sc("1,2"), rat_int(1));
        let err = schur_from_qsym(QsymBasis::Monomial, &coeffs, InvertMode::Chains).unwrap_err();
        match err {
            Error::NotSymmetric(a, b) => {
                let mut pair = [a, b];
                pair.sort();
                assert_eq!(pair, ["1,2".to_string(), "2,1".to_string()]);
            }
            other => panic!("wrong error {other:?}"),
        }
    }

    #[test]
    fn schur_round_trips_through_monomial_coordinates() {
        for m in 1..=5u32 {
            for lam in partitions_of(m) {
                let coeffs = classic_to_qsym_m(ClassicBasis::Schur, &lam);
                let back =
                    schur_from_qsym(QsymBasis::Monomial, &coeffs, InvertMode::Chains).unwrap();
                assert_eq!(back.len(), 1, "shape {lam}");
                assert_eq!(back[&lam], rat_int(1), "shape {lam}");
            }
        }
    }

    #[test]
    fn fundamental_coordinates_round_trip() {
        // Schur functions through F coordinates obtained by inverting the
        // fundamental transition matrix at the right degree.
        for m in 1..=4u32 {
            let finv = crate::qsym::qsym_matrix(QsymBasis::Fundamental, m)
                .unwrap()
                .invert(InvertMode::BackSub)
                .unwrap();
            for lam in partitions_of(m) {
                let mono = classic_to_qsym_m(ClassicBasis::Schur, &lam);
                let fcoeffs = finv.convert(&mono).unwrap();
                let back =
                    schur_from_qsym(QsymBasis::Fundamental, &fcoeffs, InvertMode::Chains)
                        .unwrap();
                let nonzero: Vec<_> =
                    back.iter().filter(|(_, c)| !c.is_zero()).collect();
                assert_eq!(nonzero.len(), 1, "shape {lam}");
                assert_eq!(back[&lam], rat_int(1), "shape {lam}");
            }
        }
    }

    #[test]
    fn products_agree_with_littlewood_richardson() {
        // Multiply two Schur functions in quasisymmetric monomial coordinates
        // and bridge back: must match the structure constants.
        let (lam, mu) = (pt("2,1"), pt("2"));
        let a = classic_to_qsym_m(ClassicBasis::Schur, &lam);
        let b = classic_to_qsym_m(ClassicBasis::Schur, &mu);
        let mut prod: BTreeMap<StrongComposition, Rat> = BTreeMap::new();
        for (alpha, ca) in &a {
            for (beta, cb) in &b {
                for (gamma, w) in crate::qsym::m_product_coeffs(alpha, beta) {
                    let slot = prod.entry(gamma).or_insert_with(Rat::zero);
                    *slot += rat_from_int(&w) * ca * cb;
                }
            }
        }
        let back = schur_from_qsym(QsymBasis::Monomial, &prod, InvertMode::Chains).unwrap();
        let lr = littlewood_richardson(&lam, &mu, InvertMode::Chains).unwrap();
        assert_eq!(back.len(), lr.len());
        for (nu, c) in lr {
            assert_eq!(back[&nu], c, "at {nu}");
        }
    }
}
