//! Plethysm f_λ[g_μ] as exact polynomial expansion.
//!
//! The base g_μ is expanded into its multiset of monomials Y; f_λ is expanded
//! into monomial symmetric functions through the counting-matrix coefficients
//! and each m_ρ is evaluated on Y by enumerating distinct arrangements of the
//! parts over the multiset slots.  Two independent oracles cross the result:
//! substituting the monomials of Y directly into f_λ written in |Y| variables,
//! and the power-sum route p_k[g] = g(x^k) with complete-homogeneous pieces
//! assembled by cycle types and Schur pieces by the determinant identity.

use crate::composition::{partitions_of, z_of, Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::rational::{rat_from_int, Rat};
use crate::symfn::{
    complete_count, elementary_count, expand_classic, inverse_kostka_matrix, kostka, power_count,
    ClassicBasis,
};
use crate::transition::InvertMode;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

/// The monomials of g_μ at n variables, listed with multiplicity.
pub fn monomial_multiset(
    g: ClassicBasis,
    mu: &Partition,
    n: usize,
) -> Result<Vec<Vec<u32>>> {
    let gp = expand_classic(g, mu, n)?;
    let mut out = Vec::new();
    for (e, c) in gp.terms() {
        assert!(
            c.is_integer() && !c.is_negative(),
            "plethysm base must have nonnegative integer coefficients"
        );
        let m: u64 = c.to_integer().try_into().expect("small multiplicity");
        for _ in 0..m {
            out.push(e.clone());
        }
    }
    Ok(out)
}

/// Coefficient row of f_λ in the monomial basis, by the counting rules.
fn classic_m_row(f: ClassicBasis, lam: &Partition) -> Vec<(Partition, Rat)> {
    if lam.is_empty() {
        return vec![(Partition::empty(), Rat::one())];
    }
    let mut out = Vec::new();
    for rho in partitions_of(lam.size() as u32) {
        let c = match f {
            ClassicBasis::Monomial => {
                if &rho == lam {
                    num::BigInt::one()
                } else {
                    num::BigInt::zero()
                }
            }
            ClassicBasis::PowerSum => power_count(lam, &rho),
            ClassicBasis::Elementary => elementary_count(lam, &rho),
            ClassicBasis::Complete => complete_count(lam, &rho),
            ClassicBasis::Schur => kostka(lam, &rho),
        };
        if !c.is_zero() {
            out.push((rho, rat_from_int(&c)));
        }
    }
    out
}

/// m_ρ evaluated on the monomial multiset: sum over distinct assignments of
/// the parts of ρ to slots of Y of the resulting product monomial.
fn monomial_on_multiset(rho: &Partition, y: &[Vec<u32>], n: usize) -> SparsePoly {
    if rho.len() > y.len() {
        return SparsePoly::zero(n);
    }
    // Group equal parts: choose disjoint slot subsets per distinct part value.
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &p in rho.parts() {
        match groups.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut acc: std::collections::HashMap<Vec<u32>, u64> = std::collections::HashMap::new();
    let mut used = vec![false; y.len()];
    let mut expt = vec![0u32; n];
    fn place(
        groups: &[(u32, usize)],
        gi: usize,
        picked: usize,
        min_slot: usize,
        y: &[Vec<u32>],
        used: &mut [bool],
        expt: &mut [u32],
        acc: &mut std::collections::HashMap<Vec<u32>, u64>,
    ) {
        if gi == groups.len() {
            *acc.entry(expt.to_vec()).or_insert(0) += 1;
            return;
        }
        let (v, m) = groups[gi];
        if picked == m {
            place(groups, gi + 1, 0, 0, y, used, expt, acc);
            return;
        }
        // Slots within a group chosen in increasing order to avoid repeats.
        let remaining_needed = m - picked;
        for s in min_slot..=y.len().saturating_sub(remaining_needed) {
            if used[s] {
                continue;
            }
            used[s] = true;
            for (k, &ek) in y[s].iter().enumerate() {
                expt[k] += v * ek;
            }
            place(groups, gi, picked + 1, s + 1, y, used, expt, acc);
            for (k, &ek) in y[s].iter().enumerate() {
                expt[k] -= v * ek;
            }
            used[s] = false;
        }
    }
    place(&groups, 0, 0, 0, y, &mut used, &mut expt, &mut acc);
    SparsePoly::from_terms(n, acc.into_iter().map(|(e, c)| (e, rat_from_int(&c.into()))))
        .expect("consistent exponent lengths")
}

fn check_ambient(lam: &Partition, mu: &Partition, n: usize) -> Result<()> {
    let need = (lam.size() * mu.size()) as usize;
    if n < need {
        return Err(Error::ResourceBound(format!(
            "plethysm of degrees {} and {} needs at least {} variables, given {}",
            lam.size(),
            mu.size(),
            need,
            n
        )));
    }
    Ok(())
}

/// f_λ[g_μ] at n variables by the counting-matrix route.
pub fn plethysm_poly(
    f: ClassicBasis,
    lam: &Partition,
    g: ClassicBasis,
    mu: &Partition,
    n: usize,
) -> Result<SparsePoly> {
    check_ambient(lam, mu, n)?;
    let y = monomial_multiset(g, mu, n)?;
    let mut out = SparsePoly::zero(n);
    for (rho, c) in classic_m_row(f, lam) {
        out = out.try_add(&monomial_on_multiset(&rho, &y, n).scale(&c))?;
    }
    Ok(out)
}

/// Oracle: write f_λ in |Y| variables and substitute the monomials of Y.
pub fn plethysm_direct_oracle(
    f: ClassicBasis,
    lam: &Partition,
    g: ClassicBasis,
    mu: &Partition,
    n: usize,
) -> Result<SparsePoly> {
    check_ambient(lam, mu, n)?;
    let y = monomial_multiset(g, mu, n)?;
    if lam.len() > y.len() {
        return Ok(SparsePoly::zero(n));
    }
    let fp = expand_classic(f, lam, y.len())?;
    let mut acc: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    for (a, c) in fp.terms() {
        let mut e = vec![0u32; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai > 0 {
                for (k, &ek) in y[i].iter().enumerate() {
                    e[k] += ai * ek;
                }
            }
        }
        let slot = acc.entry(e).or_insert_with(Rat::zero);
        *slot += c.clone();
    }
    SparsePoly::from_terms(n, acc)
}

/// h_k[g] assembled by cycle type: Σ_{ρ ⊢ k} Π_i g(x^{ρ_i}) / z_ρ.
fn complete_pleth(gp: &SparsePoly, k: u32) -> Result<SparsePoly> {
    let n = gp.nvars();
    if k == 0 {
        return Ok(SparsePoly::one(n));
    }
    let mut acc = SparsePoly::zero(n);
    for rho in partitions_of(k) {
        let mut term = SparsePoly::one(n);
        for &r in rho.parts() {
            term = term.try_mul(&gp.power_vars(r))?;
        }
        let z = rat_from_int(&z_of(rho.parts()));
        acc = acc.try_add(&term.scale(&(Rat::one() / z)))?;
    }
    Ok(acc)
}

/// e_k[g]: as h_k[g] with the sign of the cycle type.
fn elementary_pleth(gp: &SparsePoly, k: u32) -> Result<SparsePoly> {
    let n = gp.nvars();
    if k == 0 {
        return Ok(SparsePoly::one(n));
    }
    let mut acc = SparsePoly::zero(n);
    for rho in partitions_of(k) {
        let mut term = SparsePoly::one(n);
        for &r in rho.parts() {
            term = term.try_mul(&gp.power_vars(r))?;
        }
        let mut c = Rat::one() / rat_from_int(&z_of(rho.parts()));
        if (k as usize - rho.len()) % 2 == 1 {
            c = -c;
        }
        acc = acc.try_add(&term.scale(&c))?;
    }
    Ok(acc)
}

/// Oracle: the power-sum route.  p is substitution of powered variables,
/// h and e assemble by cycle type, and Schur entries come from the
/// determinant det(h_{λ_i − i + j}[g]).
pub fn plethysm_power_oracle(
    f: ClassicBasis,
    lam: &Partition,
    g: ClassicBasis,
    mu: &Partition,
    n: usize,
) -> Result<SparsePoly> {
    check_ambient(lam, mu, n)?;
    let gp = expand_classic(g, mu, n)?;
    match f {
        ClassicBasis::PowerSum => {
            let mut out = SparsePoly::one(n);
            for &r in lam.parts() {
                out = out.try_mul(&gp.power_vars(r))?;
            }
            Ok(out)
        }
        ClassicBasis::Complete => {
            let mut out = SparsePoly::one(n);
            for &r in lam.parts() {
                out = out.try_mul(&complete_pleth(&gp, r)?)?;
            }
            Ok(out)
        }
        ClassicBasis::Elementary => {
            let mut out = SparsePoly::one(n);
            for &r in lam.parts() {
                out = out.try_mul(&elementary_pleth(&gp, r)?)?;
            }
            Ok(out)
        }
        ClassicBasis::Schur => {
            // det(h_{λ_i − i + j}[g]) over i, j = 1..ℓ, by permutation sum.
            let l = lam.len();
            let mut rows: Vec<Vec<SparsePoly>> = Vec::with_capacity(l);
            for i in 0..l {
                let mut row = Vec::with_capacity(l);
                for j in 0..l {
                    let d = lam.part(i) as i64 - i as i64 + j as i64;
                    row.push(if d < 0 {
                        SparsePoly::zero(n)
                    } else {
                        complete_pleth(&gp, d as u32)?
                    });
                }
                rows.push(row);
            }
            let mut det = SparsePoly::zero(n);
            for w in crate::permutation::symmetric_group(l) {
                let mut term = SparsePoly::one(n);
                for i in 0..l {
                    term = term.try_mul(&rows[i][(w.word()[i] - 1) as usize])?;
                }
                if w.sign() < 0 {
                    term = term.scale(&(-Rat::one()));
                }
                det = det.try_add(&term)?;
            }
            Ok(det)
        }
        ClassicBasis::Monomial => Err(Error::Parse(
            "the power-sum oracle covers p, e, h, s only".into(),
        )),
    }
}

/// Monomial-basis coefficients of the plethysm, read at |λ|·|μ| variables.
pub fn plethysm_in_monomials(
    f: ClassicBasis,
    lam: &Partition,
    g: ClassicBasis,
    mu: &Partition,
) -> Result<BTreeMap<Partition, Rat>> {
    let n = ((lam.size() * mu.size()) as usize).max(1);
    let p = plethysm_poly(f, lam, g, mu, n)?;
    if let Some((a, b)) = p.find_asymmetry() {
        return Err(Error::NotSymmetric(
            WeakComposition::new(a).to_string(),
            WeakComposition::new(b).to_string(),
        ));
    }
    let mut out = BTreeMap::new();
    for (e, c) in p.terms() {
        let sorted_desc = e.windows(2).all(|w| w[0] >= w[1]);
        if sorted_desc {
            out.insert(Partition::new(e.clone())?, c.clone());
        }
    }
    Ok(out)
}

/// Schur-basis coefficients via the inverse Kostka matrix.
pub fn plethysm_in_schur(
    f: ClassicBasis,
    lam: &Partition,
    g: ClassicBasis,
    mu: &Partition,
    mode: InvertMode,
) -> Result<BTreeMap<Partition, Rat>> {
    let mcoeffs = plethysm_in_monomials(f, lam, g, mu)?;
    let deg = (lam.size() * mu.size()) as u32;
    if deg == 0 {
        return Ok(mcoeffs);
    }
    let kinv = inverse_kostka_matrix(deg, mode);
    let mut out = kinv.convert(&mcoeffs)?;
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}
