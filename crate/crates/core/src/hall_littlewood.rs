//! Hall–Littlewood P-polynomials at a fixed rational parameter.
//!
//! The working route expands P_λ in the monomial basis through the
//! horizontal-strip recursion with strip weights
//! ψ_{λ/μ}(t) = ∏_{i ≥ 1, mᵢ(μ) = mᵢ(λ)+1} (1 − t^{mᵢ(μ)}); the independent
//! oracle antisymmetrizes x^λ ∏_{i<j} (xᵢ − t·xⱼ), divides by the
//! Vandermonde determinant exactly, and normalizes by v_λ(t).  At t = 0 both
//! give Schur functions; at t = −1 on strict shapes, the Schur-P family.

use crate::composition::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::poset::partitions_poset;
use crate::rational::{format_rat, rat_from_int, Rat};
use crate::symfn::monomial_structure;
use crate::transition::{InvertMode, TransitionMatrix, Triangularity};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub fn rat_pow(t: &Rat, k: u32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..k {
        out *= t;
    }
    out
}

fn reject_t_one(t: &Rat) -> Result<()> {
    if t.is_one() {
        return Err(Error::DegenerateParameter(
            "t = 1 collapses the Hall-Littlewood normalization".into(),
        ));
    }
    Ok(())
}

/// Strip weight for the horizontal strip λ/μ (μ ⊆ λ): one factor
/// (1 − t^{mᵢ(μ)}) for every part value i whose multiplicity drops by
/// exactly one going up from μ to λ.
pub fn psi_weight(lambda: &[u32], mu: &[u32], t: &Rat) -> Rat {
    let mult = |parts: &[u32], v: u32| parts.iter().filter(|&&p| p == v).count() as u32;
    let mut w = Rat::one();
    let max = lambda.iter().chain(mu).copied().max().unwrap_or(0);
    for i in 1..=max {
        let mi_mu = mult(mu, i);
        if mi_mu == mult(lambda, i) + 1 {
            w *= Rat::one() - rat_pow(t, mi_mu);
        }
    }
    w
}

/// K_{λμ}(t): the coefficient of m_μ in P_λ, summed over tableau chains with
/// ψ strip weights; memoized strip-peeling like the Kostka recursion.
pub fn hl_kostka(lambda: &Partition, mu: &Partition, t: &Rat) -> Rat {
    if lambda.size() != mu.size() {
        return Rat::zero();
    }
    let mut memo: HashMap<(Vec<u32>, usize), Rat> = HashMap::new();
    hl_rec(lambda.parts(), mu.parts(), mu.len(), t, &mut memo)
}

fn hl_rec(
    shape: &[u32],
    mu: &[u32],
    k: usize,
    t: &Rat,
    memo: &mut HashMap<(Vec<u32>, usize), Rat>,
) -> Rat {
    if k == 0 {
        return if shape.iter().all(|&p| p == 0) {
            Rat::one()
        } else {
            Rat::zero()
        };
    }
    let key = (shape.to_vec(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = mu[k - 1];
    let mut total = Rat::zero();
    let mut nu: Vec<u32> = shape.to_vec();
    fn strips(
        shape: &[u32],
        row: usize,
        remaining: u32,
        nu: &mut Vec<u32>,
        mu: &[u32],
        k: usize,
        t: &Rat,
        total: &mut Rat,
        memo: &mut HashMap<(Vec<u32>, usize), Rat>,
    ) {
        if row == shape.len() {
            if remaining == 0 {
                let trimmed: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
                let w = psi_weight(shape, &trimmed, t);
                if !w.is_zero() {
                    *total += w * hl_rec(&trimmed, mu, k - 1, t, memo);
                }
            }
            return;
        }
        let lo = if row + 1 < shape.len() { shape[row + 1] } else { 0 };
        let hi = shape[row];
        for v in lo..=hi {
            let removed = hi - v;
            if removed > remaining {
                continue;
            }
            nu[row] = v;
            strips(shape, row + 1, remaining - removed, nu, mu, k, t, total, memo);
            nu[row] = hi;
        }
    }
    strips(shape, 0, strip, &mut nu, mu, k, t, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

/// Rows λ, columns μ: P_λ = Σ_μ K_{λμ}(t) m_μ.  Unitriangular with support
/// inside the Kostka support, for every t ≠ 1.
pub fn hl_matrix(m: u32, t: &Rat) -> Result<TransitionMatrix<Partition>> {
    reject_t_one(t)?;
    let poset = partitions_poset(m);
    let mut mat = TransitionMatrix::new(poset.clone(), Triangularity::RowLeqCol);
    for lam in poset.elements() {
        for mu in poset.elements() {
            if poset.leq(lam, mu).unwrap() {
                let v = hl_kostka(lam, mu, t);
                if !v.is_zero() {
                    mat.set(lam, mu, v)?;
                }
            }
        }
    }
    Ok(mat)
}

/// P_λ(x₁..xₙ; t) through the tableau expansion.
pub fn hl_expand(lambda: &Partition, t: &Rat, n: usize) -> Result<SparsePoly> {
    reject_t_one(t)?;
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            len: lambda.len(),
            nvars: n,
        });
    }
    let mut out = SparsePoly::zero(n);
    for mu in partitions_of(lambda.size() as u32) {
        if mu.len() > n {
            continue;
        }
        let c = hl_kostka(lambda, &mu, t);
        if !c.is_zero() {
            out = out.try_add(&crate::symfn::monomial_poly(&mu, n)?.scale(&c))?;
        }
    }
    Ok(out)
}

/// Schur-P polynomial: the t = −1 specialization on strict shapes.
pub fn schur_p_expand(lambda: &Partition, n: usize) -> Result<SparsePoly> {
    if !lambda.is_strict() {
        return Err(Error::InvalidIndex(format!(
            "Schur-P needs a strict partition, got {lambda}"
        )));
    }
    hl_expand(lambda, &-Rat::one(), n)
}

/// Normalization constant v_λ(t) = ∏_{i ≥ 0} ∏_{k=1}^{mᵢ} (1 + t + … + t^{k−1}),
/// where m₀ = n − ℓ(λ) counts the zero parts among n variables.
pub fn hl_normalization(lambda: &Partition, t: &Rat, n: usize) -> Result<Rat> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            len: lambda.len(),
            nvars: n,
        });
    }
    let mut v = Rat::one();
    let block = |m: u32| {
        let mut f = Rat::one();
        for k in 1..=m {
            let mut bracket = Rat::zero();
            for j in 0..k {
                bracket += rat_pow(t, j);
            }
            f *= bracket;
        }
        f
    };
    v *= block((n - lambda.len()) as u32);
    let max = lambda.part(0);
    for i in 1..=max {
        v *= block(lambda.multiplicity(i));
    }
    Ok(v)
}

/// Independent oracle: P_λ = (Σ_w sgn(w)·w(x^λ ∏_{i<j}(xᵢ − t·xⱼ))) / (V · v_λ(t))
/// with V the Vandermonde product, all divisions exact.
pub fn hl_symmetrization_oracle(lambda: &Partition, t: &Rat, n: usize) -> Result<SparsePoly> {
    reject_t_one(t)?;
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            len: lambda.len(),
            nvars: n,
        });
    }
    let v = hl_normalization(lambda, t, n)?;
    if v.is_zero() {
        return Err(Error::NormalizationVanishes(
            lambda.to_string(),
            format_rat(t),
        ));
    }
    // Seed: x^λ · ∏_{i<j} (x_i − t x_j).
    let mut seed = SparsePoly::monomial(lambda.padded(n)?, Rat::one());
    for i in 0..n {
        for j in i + 1..n {
            let factor = SparsePoly::var(n, i)
                .try_sub(&SparsePoly::var(n, j).scale(t))
                .expect("same nvars");
            seed = seed.try_mul(&factor)?;
        }
    }
    let mut anti = SparsePoly::zero(n);
    for w in crate::permutation::symmetric_group(n) {
        let image = seed.permute_vars(&w)?;
        anti = if w.sign() == 1 {
            anti.try_add(&image)?
        } else {
            anti.try_sub(&image)?
        };
    }
    let mut vandermonde = SparsePoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let factor = SparsePoly::var(n, i)
                .try_sub(&SparsePoly::var(n, j))
                .expect("same nvars");
            vandermonde = vandermonde.try_mul(&factor)?;
        }
    }
    let quotient = anti.divide_exact(&vandermonde)?;
    Ok(quotient.scale(&(Rat::one() / v)))
}

/// Structure constants f^ν_{λμ}(t) of P_λ·P_μ = Σ_ν f^ν P_ν: both factors are
/// pushed to the monomial basis, multiplied there, and pulled back through
/// the inverse transition matrix at the product degree.
pub fn hl_structure(
    lambda: &Partition,
    mu: &Partition,
    t: &Rat,
    mode: InvertMode,
) -> Result<BTreeMap<Partition, Rat>> {
    reject_t_one(t)?;
    let deg = (lambda.size() + mu.size()) as u32;
    let row = |lam: &Partition| -> Result<BTreeMap<Partition, Rat>> {
        let mut out = BTreeMap::new();
        for mu2 in partitions_of(lam.size() as u32) {
            let c = hl_kostka(lam, &mu2, t);
            if !c.is_zero() {
                out.insert(mu2, c);
            }
        }
        Ok(out)
    };
    let va = row(lambda)?;
    let vb = row(mu)?;
    let mut prod: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (sig, cs) in &va {
        for (tau, ct) in &vb {
            let c = cs * ct;
            for (nu, count) in monomial_structure(sig, tau) {
                let slot = prod.entry(nu).or_insert_with(Rat::zero);
                *slot += &c * rat_from_int(&count);
            }
        }
    }
    prod.retain(|_, v| !v.is_zero());
    let inv = hl_matrix(deg, t)?.invert(mode)?;
    let mut out = inv.convert(&prod)?;
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::parse_parts;
    use crate::rational::{rat, rat_int};

    fn pt(s: &str) -> Partition {
        Partition::new(parse_parts(s).unwrap()).unwrap()
    }

    #[test]
    fn small_tableau_rows() {
        let t = rat(1, 2);
        // P_2 = m_2 + (1−t)·m_{11}.
        assert_eq!(hl_kostka(&pt("2"), &pt("2"), &t), rat_int(1));
        assert_eq!(hl_kostka(&pt("2"), &pt("1,1"), &t), rat(1, 2));
        // Coefficient of m_{111} in P_{21} is 2 − t − t².
        assert_eq!(hl_kostka(&pt("2,1"), &pt("1,1,1"), &t), rat(5, 4));
        // Strictly above in dominance: zero.
        assert_eq!(hl_kostka(&pt("1,1"), &pt("2"), &t), rat_int(0));
    }

    #[test]
    fn t_zero_is_schur() {
        let t = Rat::zero();
        for m in 0..=6u32 {
            for lam in partitions_of(m) {
                for mu in partitions_of(m) {
                    assert_eq!(
                        hl_kostka(&lam, &mu, &t),
                        rat_from_int(&crate::symfn::kostka(&lam, &mu)),
                        "K({lam},{mu}) at t=0"
                    );
                }
            }
        }
    }

    #[test]
    fn matrix_is_unitriangular_and_rejects_t_one() {
        let t = rat(-1, 2);
        let mat = hl_matrix(5, &t).unwrap();
        assert!(mat.is_unitriangular());
        assert!(matches!(
            hl_matrix(4, &Rat::one()),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(matches!(
            hl_expand(&pt("2"), &Rat::one(), 3),
            Err(Error::DegenerateParameter(_))
        ));
    }

    #[test]
    fn oracle_matches_tableaux() {
        for t in [Rat::zero(), rat(1, 2), rat(-1, 2), rat_int(2)] {
            for lam in ["", "1", "2", "1,1", "2,1", "3", "2,2"] {
                let lam = pt(lam);
                for n in lam.len().max(1)..=3 {
                    let a = hl_expand(&lam, &t, n).unwrap();
                    let b = hl_symmetrization_oracle(&lam, &t, n).unwrap();
                    assert_eq!(a, b, "P_{lam} at n={n}, t={}", format_rat(&t));
                }
            }
        }
    }

    #[test]
    fn schur_p_needs_strict_shapes() {
        assert!(schur_p_expand(&pt("2,2"), 3).is_err());
        let p = schur_p_expand(&pt("2,1"), 3).unwrap();
        // P_{21}(x;−1) = m_21 + (2−t−t²)|_{t=−1} m_111 = m_21 + 2·m_111.
        assert_eq!(p.coeff(&[2, 1, 0]), rat_int(1));
        assert_eq!(p.coeff(&[1, 1, 1]), rat_int(2));
        // The symmetrization oracle refuses non-strict shapes at t = −1.
        assert!(matches!(
            hl_symmetrization_oracle(&pt("2,2"), &-Rat::one(), 4),
            Err(Error::NormalizationVanishes(_, _))
        ));
    }

    #[test]
    fn structure_constants_specialize() {
        let t = rat(1, 2);
        let f = hl_structure(&pt("1"), &pt("1"), &t, InvertMode::Chains).unwrap();
        // P_1·P_1 = P_2 + (1+t)·P_{11}.
        assert_eq!(f[&pt("2")], rat_int(1));
        assert_eq!(f[&pt("1,1")], rat(3, 2));
        // At t = 0 the constants are Littlewood–Richardson numbers.
        let f0 = hl_structure(&pt("2,1"), &pt("1"), &Rat::zero(), InvertMode::BackSub).unwrap();
        let lr =
            crate::symfn::littlewood_richardson(&pt("2,1"), &pt("1"), InvertMode::BackSub).unwrap();
        assert_eq!(f0, lr);
    }

    #[test]
    fn normalization_counts_zero_block() {
        // v_∅ at n = 3 is [1][2][3] brackets of the zero multiplicity block.
        let v = hl_normalization(&pt(""), &rat(1, 2), 3).unwrap();
        // v_3(t) = 1·(1+t)·(1+t+t²) = (3/2)·(7/4) = 21/8.
        assert_eq!(v, rat(21, 8));
        let v = hl_normalization(&pt("2,1"), &rat(1, 2), 3).unwrap();
        assert_eq!(v, rat_int(1));
    }
}
