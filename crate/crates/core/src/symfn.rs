//! Classic symmetric function bases: monomial, power sum, elementary,
//! complete homogeneous, and Schur.
//!
//! Expansions into the monomial basis come from counting matrices with
//! prescribed row and column sums (0/1 matrices for e, nonnegative integer
//! matrices for h, one-nonzero-per-column assignments for p) and from the
//! horizontal-strip recursion for Kostka numbers.  Schur structure constants
//! run through the monomial basis and back via the inverse Kostka matrix.

use crate::composition::{
    distinct_rearrangements, factorial, partitions_of, Partition,
};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::poset::partitions_poset;
use crate::rational::{rat_from_int, Int, Rat};
use crate::transition::{InvertMode, TransitionMatrix, Triangularity};
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassicBasis {
    Monomial,
    PowerSum,
    Elementary,
    Complete,
    Schur,
}

impl ClassicBasis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(ClassicBasis::Monomial),
            "p" => Ok(ClassicBasis::PowerSum),
            "e" => Ok(ClassicBasis::Elementary),
            "h" => Ok(ClassicBasis::Complete),
            "s" => Ok(ClassicBasis::Schur),
            _ => Err(Error::Parse(format!("unknown symmetric basis {s:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassicBasis::Monomial => "m",
            ClassicBasis::PowerSum => "p",
            ClassicBasis::Elementary => "e",
            ClassicBasis::Complete => "h",
            ClassicBasis::Schur => "s",
        }
    }
}

// ---------------------------------------------------------------------------
// polynomial expansions

pub fn monomial_poly(lambda: &Partition, n: usize) -> Result<SparsePoly> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            len: lambda.len(),
            nvars: n,
        });
    }
    SparsePoly::from_terms(
        n,
        distinct_rearrangements(lambda.parts(), n)
            .into_iter()
            .map(|e| (e, Rat::one())),
    )
}

pub fn power_sum_poly(k: u32, n: usize) -> SparsePoly {
    let mut p = SparsePoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        p = p
            .try_add(&SparsePoly::monomial(e, Rat::one()))
            .expect("same nvars");
    }
    p
}

pub fn elementary_poly(k: u32, n: usize) -> SparsePoly {
    // Sum over k-subsets of the variables.
    let mut out = SparsePoly::zero(n);
    let k = k as usize;
    if k > n {
        return out;
    }
    let mut choice: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; n];
        for &i in &choice {
            e[i] = 1;
        }
        out = out
            .try_add(&SparsePoly::monomial(e, Rat::one()))
            .expect("same nvars");
        // Next k-subset in lex order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if choice[i] != i + n - k {
                break;
            }
        }
        choice[i] += 1;
        for j in i + 1..k {
            choice[j] = choice[j - 1] + 1;
        }
    }
}

pub fn complete_poly(k: u32, n: usize) -> SparsePoly {
    // Sum over all monomials of degree k.
    let mut out = SparsePoly::zero(n);
    for e in crate::composition::weak_compositions(n, k) {
        out = out
            .try_add(&SparsePoly::monomial(e.parts().to_vec(), Rat::one()))
            .expect("same nvars");
    }
    out
}

/// Semistandard tableaux of the given shape with entries in 1..=n, returned
/// as content vectors (entry i counts occurrences of i+1).
pub fn ssyt_contents(shape: &Partition, n: usize) -> Vec<Vec<u32>> {
    let rows = shape.len();
    let mut out = Vec::new();
    if rows > n {
        return out;
    }
    // Fill cells in column-reading order, row by row; tableau[r] holds row r.
    let mut tableau: Vec<Vec<u32>> = (0..rows)
        .map(|r| Vec::with_capacity(shape.part(r) as usize))
        .collect();
    fn rec(
        shape: &Partition,
        n: usize,
        r: usize,
        c: usize,
        tableau: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if r == shape.len() {
            let mut content = vec![0u32; n];
            for row in tableau.iter() {
                for &v in row {
                    content[(v - 1) as usize] += 1;
                }
            }
            out.push(content);
            return;
        }
        if c == shape.part(r) as usize {
            rec(shape, n, r + 1, 0, tableau, out);
            return;
        }
        let min_left = if c > 0 { tableau[r][c - 1] } else { 1 };
        let min_above = if r > 0 { tableau[r - 1][c] + 1 } else { 1 };
        for v in min_left.max(min_above)..=(n as u32) {
            tableau[r].push(v);
            rec(shape, n, r, c + 1, tableau, out);
            tableau[r].pop();
        }
    }
    rec(shape, n, 0, 0, &mut tableau, &mut out);
    out
}

pub fn schur_poly(lambda: &Partition, n: usize) -> Result<SparsePoly> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsVars {
            len: lambda.len(),
            nvars: n,
        });
    }
    SparsePoly::from_terms(
        n,
        ssyt_contents(lambda, n)
            .into_iter()
            .map(|e| (e, Rat::one())),
    )
}

pub fn expand_classic(basis: ClassicBasis, lambda: &Partition, n: usize) -> Result<SparsePoly> {
    match basis {
        ClassicBasis::Monomial => monomial_poly(lambda, n),
        ClassicBasis::Schur => schur_poly(lambda, n),
        ClassicBasis::PowerSum => Ok(product_over_parts(lambda, n, power_sum_poly)),
        ClassicBasis::Elementary => Ok(product_over_parts(lambda, n, elementary_poly)),
        ClassicBasis::Complete => Ok(product_over_parts(lambda, n, complete_poly)),
    }
}

fn product_over_parts(lambda: &Partition, n: usize, f: fn(u32, usize) -> SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::one(n);
    for &k in lambda.parts() {
        out = out.try_mul(&f(k, n)).expect("same nvars");
    }
    out
}

// ---------------------------------------------------------------------------
// Kostka numbers

/// Kostka number K(λ, μ) by peeling the last part of μ off λ as a
/// horizontal strip, memoized.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Int {
    if lambda.size() != mu.size() {
        return Int::zero();
    }
    let mut memo: HashMap<(Vec<u32>, usize), Int> = HashMap::new();
    kostka_rec(lambda.parts(), mu.parts(), mu.len(), &mut memo)
}

fn kostka_rec(
    shape: &[u32],
    mu: &[u32],
    k: usize,
    memo: &mut HashMap<(Vec<u32>, usize), Int>,
) -> Int {
    if k == 0 {
        return if shape.iter().all(|&p| p == 0) {
            Int::one()
        } else {
            Int::zero()
        };
    }
    let key = (shape.to_vec(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = mu[k - 1];
    // Enumerate ν ≤ λ with λ/ν a horizontal strip of size `strip`:
    // λ_{i+1} ≤ ν_i ≤ λ_i for every row.
    let mut total = Int::zero();
    let mut nu: Vec<u32> = shape.to_vec();
    fn strips(
        shape: &[u32],
        row: usize,
        remaining: u32,
        nu: &mut Vec<u32>,
        mu: &[u32],
        k: usize,
        total: &mut Int,
        memo: &mut HashMap<(Vec<u32>, usize), Int>,
    ) {
        if row == shape.len() {
            if remaining == 0 {
                let trimmed: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
                *total += kostka_rec(&trimmed, mu, k - 1, memo);
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
            strips(shape, row + 1, remaining - removed, nu, mu, k, total, memo);
            nu[row] = hi;
        }
    }
    strips(shape, 0, strip, &mut nu, mu, k, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

/// Independent Kostka count: semistandard tableaux of shape λ and content
/// exactly μ, by direct enumeration.
pub fn kostka_by_tableaux(lambda: &Partition, mu: &Partition) -> Int {
    if lambda.size() != mu.size() {
        return Int::zero();
    }
    let n = mu.len().max(1);
    let target = mu.padded(n).unwrap_or_default();
    Int::from(
        ssyt_contents(lambda, n)
            .into_iter()
            .filter(|c| *c == target)
            .count(),
    )
}

/// Rows λ, columns μ: s_λ = Σ_μ K(λ,μ) m_μ; unitriangular with support on
/// row ≤ column.
pub fn kostka_matrix(m: u32) -> TransitionMatrix<Partition> {
    let poset = partitions_poset(m);
    let mut mat = TransitionMatrix::new(poset.clone(), Triangularity::RowLeqCol);
    for lam in poset.elements() {
        for mu in poset.elements() {
            if poset.leq(lam, mu).unwrap() {
                let k = kostka(lam, mu);
                if !k.is_zero() {
                    mat.set(lam, mu, rat_from_int(&k)).unwrap();
                }
            }
        }
    }
    mat
}

pub fn inverse_kostka_matrix(m: u32, mode: InvertMode) -> TransitionMatrix<Partition> {
    kostka_matrix(m)
        .invert(mode)
        .expect("Kostka matrices are unitriangular")
}

pub fn inverse_kostka(sigma: &Partition, mu: &Partition) -> Rat {
    inverse_kostka_matrix(sigma.size() as u32, InvertMode::BackSub)
        .get(sigma, mu)
        .unwrap_or_else(|_| Rat::zero())
}

// ---------------------------------------------------------------------------
// counting matrices for p, e, h

/// Number of ways to assign each part of λ (parts distinguishable) to a row
/// 1..ℓ(μ) so that row i receives total μ_i: the coefficient of m_μ in p_λ.
pub fn power_count(lambda: &Partition, mu: &Partition) -> Int {
    if lambda.size() != mu.size() {
        return Int::zero();
    }
    let rows = mu.len();
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    let mut count = Int::zero();
    fn rec(parts: &[u32], j: usize, remaining: &mut Vec<u32>, count: &mut Int) {
        if j == parts.len() {
            if remaining.iter().all(|&r| r == 0) {
                *count += Int::one();
            }
            return;
        }
        let p = parts[j];
        for i in 0..remaining.len() {
            if remaining[i] >= p {
                remaining[i] -= p;
                rec(parts, j + 1, remaining, count);
                remaining[i] += p;
            }
        }
    }
    if rows == 0 {
        return if lambda.is_empty() { Int::one() } else { Int::zero() };
    }
    rec(lambda.parts(), 0, &mut remaining, &mut count);
    count
}

/// Number of 0/1 matrices with row sums λ and column sums μ: the coefficient
/// of m_μ in e_λ.
pub fn elementary_count(lambda: &Partition, mu: &Partition) -> Int {
    if lambda.size() != mu.size() {
        return Int::zero();
    }
    let cols = mu.len();
    let mut cap: Vec<u32> = mu.parts().to_vec();
    let mut count = Int::zero();
    fn rec(rows: &[u32], r: usize, cap: &mut Vec<u32>, count: &mut Int) {
        if r == rows.len() {
            if cap.iter().all(|&c| c == 0) {
                *count += Int::one();
            }
            return;
        }
        // Choose the subset of columns receiving a 1 in this row.
        let need = rows[r] as usize;
        let mut chosen = Vec::with_capacity(need);
        fn choose(
            rows: &[u32],
            r: usize,
            from: usize,
            need: usize,
            chosen: &mut Vec<usize>,
            cap: &mut Vec<u32>,
            count: &mut Int,
        ) {
            if need == 0 {
                rec(rows, r + 1, cap, count);
                return;
            }
            if from + need > cap.len() {
                return;
            }
            for j in from..=cap.len() - need {
                if cap[j] > 0 {
                    cap[j] -= 1;
                    chosen.push(j);
                    choose(rows, r, j + 1, need - 1, chosen, cap, count);
                    chosen.pop();
                    cap[j] += 1;
                }
            }
        }
        choose(rows, r, 0, need, &mut chosen, cap, count);
    }
    if cols == 0 {
        return if lambda.is_empty() { Int::one() } else { Int::zero() };
    }
    rec(lambda.parts(), 0, &mut cap, &mut count);
    count
}

/// Number of nonnegative integer matrices with row sums λ and column sums μ:
/// the coefficient of m_μ in h_λ.
pub fn complete_count(lambda: &Partition, mu: &Partition) -> Int {
    if lambda.size() != mu.size() {
        return Int::zero();
    }
    let cols = mu.len();
    if cols == 0 {
        return if lambda.is_empty() { Int::one() } else { Int::zero() };
    }
    let mut cap: Vec<u32> = mu.parts().to_vec();
    let mut count = Int::zero();
    fn rec(rows: &[u32], r: usize, cap: &mut Vec<u32>, count: &mut Int) {
        if r == rows.len() {
            if cap.iter().all(|&c| c == 0) {
                *count += Int::one();
            }
            return;
        }
        fn fill(
            rows: &[u32],
            r: usize,
            j: usize,
            left: u32,
            cap: &mut Vec<u32>,
            count: &mut Int,
        ) {
            if j == cap.len() {
                if left == 0 {
                    rec(rows, r + 1, cap, count);
                }
                return;
            }
            for v in 0..=left.min(cap[j]) {
                cap[j] -= v;
                fill(rows, r, j + 1, left - v, cap, count);
                cap[j] += v;
            }
        }
        fill(rows, r, 0, rows[r], cap, count);
    }
    rec(lambda.parts(), 0, &mut cap, &mut count);
    count
}

/// Raw monomial-expansion entries (row λ, column μ, count) for any basis at
/// degree m; the e and h matrices are not dominance-triangular, so this is
/// the lossless form.
pub fn classic_m_entries(basis: ClassicBasis, m: u32) -> Vec<(Partition, Partition, Int)> {
    let parts = partitions_of(m);
    let mut out = Vec::new();
    for lam in &parts {
        for mu in &parts {
            let v = match basis {
                ClassicBasis::Monomial => {
                    if lam == mu {
                        Int::one()
                    } else {
                        Int::zero()
                    }
                }
                ClassicBasis::PowerSum => power_count(lam, mu),
                ClassicBasis::Elementary => elementary_count(lam, mu),
                ClassicBasis::Complete => complete_count(lam, mu),
                ClassicBasis::Schur => kostka(lam, mu),
            };
            if !v.is_zero() {
                out.push((lam.clone(), mu.clone(), v));
            }
        }
    }
    out
}

/// Poset-triangular transition matrix into the monomial basis, where one
/// exists: Schur (unitriangular, row ≤ col), power sum (col ≤ row, diagonal
/// ∏ mᵢ(λ)!), and elementary with rows reindexed by conjugate (the matrix
/// (λ, μ) ↦ E(λ′, μ) is unitriangular with row ≤ col).
pub fn classic_matrix(basis: ClassicBasis, m: u32) -> Result<TransitionMatrix<Partition>> {
    let poset = partitions_poset(m);
    match basis {
        ClassicBasis::Monomial => Ok(TransitionMatrix::identity(
            poset,
            Triangularity::RowLeqCol,
        )),
        ClassicBasis::Schur => Ok(kostka_matrix(m)),
        ClassicBasis::PowerSum => {
            let mut mat = TransitionMatrix::new(poset.clone(), Triangularity::ColLeqRow);
            for lam in poset.elements() {
                for mu in poset.elements() {
                    let v = power_count(lam, mu);
                    if !v.is_zero() {
                        mat.set(lam, mu, rat_from_int(&v))?;
                    }
                }
            }
            Ok(mat)
        }
        ClassicBasis::Elementary => {
            let mut mat = TransitionMatrix::new(poset.clone(), Triangularity::RowLeqCol);
            for lam in poset.elements() {
                let conj = lam.conjugate();
                for mu in poset.elements() {
                    let v = elementary_count(&conj, mu);
                    if !v.is_zero() {
                        mat.set(lam, mu, rat_from_int(&v))?;
                    }
                }
            }
            Ok(mat)
        }
        ClassicBasis::Complete => Err(Error::TriangularityViolation(
            "h".into(),
            "the complete homogeneous expansion has full support; use classic_m_entries".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// structure constants

/// Coefficients of m_λ · m_μ in the monomial basis: counts of pairs of
/// rearrangements (u of λ, w of μ) with u + w = ν, per ν.
pub fn monomial_structure(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, Int> {
    let total = (lambda.size() + mu.size()) as u32;
    let mut out = BTreeMap::new();
    for nu in partitions_of(total) {
        let slots = nu.len();
        if lambda.len() > slots || mu.len() > slots {
            continue;
        }
        let target = nu.padded(slots).unwrap();
        let mut count = Int::zero();
        for u in distinct_rearrangements(lambda.parts(), slots) {
            let w: Vec<u32> = target
                .iter()
                .zip(&u)
                .map(|(&t, &a)| if t >= a { t - a } else { u32::MAX })
                .collect();
            if w.iter().any(|&x| x == u32::MAX) {
                continue;
            }
            // w must be a rearrangement of μ.
            if crate::composition::sort_of(&w) == *mu {
                count += Int::one();
            }
        }
        if !count.is_zero() {
            out.insert(nu, count);
        }
    }
    out
}

/// Littlewood–Richardson coefficients via the monomial pipeline: expand both
/// Schur factors in m, multiply there, convert back with the inverse Kostka
/// matrix.
pub fn littlewood_richardson(
    lambda: &Partition,
    mu: &Partition,
    mode: InvertMode,
) -> Result<BTreeMap<Partition, Rat>> {
    let deg = (lambda.size() + mu.size()) as u32;
    let ka = kostka_matrix(lambda.size() as u32);
    let kb = kostka_matrix(mu.size() as u32);
    let mut va: BTreeMap<Partition, Rat> = BTreeMap::new();
    va.insert(lambda.clone(), Rat::one());
    let va = ka.convert(&va)?;
    let mut vb: BTreeMap<Partition, Rat> = BTreeMap::new();
    vb.insert(mu.clone(), Rat::one());
    let vb = kb.convert(&vb)?;
    // Bilinear product in the m basis.
    let mut prod: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (sig, cs) in &va {
        for (tau, ct) in &vb {
            let c = cs * ct;
            for (nu, t) in monomial_structure(sig, tau) {
                let slot = prod.entry(nu).or_insert_with(Rat::zero);
                *slot += &c * rat_from_int(&t);
            }
        }
    }
    prod.retain(|_, v| !v.is_zero());
    // Back to Schur coordinates.
    let inv = kostka_matrix(deg).invert(mode)?;
    let mut out = inv.convert(&prod)?;
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Structure constants in each classic basis.  Multiplicative bases (p, e, h)
/// concatenate indices; m counts rearrangement overlays; s runs the
/// monomial pipeline.
pub fn structure_constants_classic(
    basis: ClassicBasis,
    lambda: &Partition,
    mu: &Partition,
    mode: InvertMode,
) -> Result<BTreeMap<Partition, Rat>> {
    match basis {
        ClassicBasis::Monomial => Ok(monomial_structure(lambda, mu)
            .into_iter()
            .map(|(nu, c)| (nu, rat_from_int(&c)))
            .collect()),
        ClassicBasis::PowerSum | ClassicBasis::Elementary | ClassicBasis::Complete => {
            let mut parts: Vec<u32> = lambda.parts().to_vec();
            parts.extend_from_slice(mu.parts());
            let mut out = BTreeMap::new();
            out.insert(Partition::from_unsorted(&parts), Rat::one());
            Ok(out)
        }
        ClassicBasis::Schur => littlewood_richardson(lambda, mu, mode),
    }
}

/// The diagonal expected of the power-sum matrix: ∏ mᵢ(λ)! over part values.
pub fn power_diagonal(lambda: &Partition) -> Int {
    let mut d = Int::one();
    let mut i = 0;
    let p = lambda.parts();
    while i < p.len() {
        let mut j = i;
        while j < p.len() && p[j] == p[i] {
            j += 1;
        }
        d *= factorial((j - i) as u32);
        i = j;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::parse_parts;
    use crate::rational::rat_int;

    fn pt(s: &str) -> Partition {
        Partition::new(parse_parts(s).unwrap()).unwrap()
    }

    #[test]
    fn kostka_values() {
        assert_eq!(kostka(&pt("2,1"), &pt("1,1,1")), Int::from(2));
        assert_eq!(kostka(&pt("2,1"), &pt("2,1")), Int::from(1));
        assert_eq!(kostka(&pt("2,1"), &pt("3")), Int::from(0));
        assert_eq!(kostka(&pt("3,2,1"), &pt("1,1,1,1,1,1")), Int::from(16));
        assert_eq!(kostka(&pt(""), &pt("")), Int::from(1));
    }

    #[test]
    fn kostka_routes_agree_through_degree_6() {
        for m in 0..=6u32 {
            for lam in partitions_of(m) {
                for mu in partitions_of(m) {
                    assert_eq!(
                        kostka(&lam, &mu),
                        kostka_by_tableaux(&lam, &mu),
                        "K({lam}, {mu})"
                    );
                }
            }
        }
    }

    #[test]
    fn expansions_match_counting_matrices() {
        // Every basis expansion at n = deg vars has m-coefficients equal to
        // the counting-matrix row.
        for m in 1..=5u32 {
            let n = m as usize;
            for basis in [
                ClassicBasis::PowerSum,
                ClassicBasis::Elementary,
                ClassicBasis::Complete,
                ClassicBasis::Schur,
            ] {
                let entries = classic_m_entries(basis, m);
                for lam in partitions_of(m) {
                    let poly = expand_classic(basis, &lam, n).unwrap();
                    for mu in partitions_of(m) {
                        let expect = entries
                            .iter()
                            .find(|(l, u, _)| *l == lam && *u == mu)
                            .map(|(_, _, v)| v.clone())
                            .unwrap_or_else(Int::zero);
                        if mu.len() <= n {
                            let padded = mu.padded(n).unwrap();
                            assert_eq!(
                                poly.coeff(&padded),
                                rat_from_int(&expect),
                                "{} at ({lam}, {mu})",
                                basis.name()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_pins_the_small_ambiguity() {
        // e_{1,1} = m_{2} + 2 m_{1,1}: the coefficient on m_2 is 1.
        assert_eq!(elementary_count(&pt("1,1"), &pt("2")), Int::one());
        assert_eq!(elementary_count(&pt("1,1"), &pt("1,1")), Int::from(2));
        // e_2 = m_{1,1} only.
        assert_eq!(elementary_count(&pt("2"), &pt("2")), Int::zero());
        assert_eq!(elementary_count(&pt("2"), &pt("1,1")), Int::one());
    }

    #[test]
    fn power_matrix_triangular_with_factorial_diagonal() {
        for m in 1..=6u32 {
            let mat = classic_matrix(ClassicBasis::PowerSum, m).unwrap();
            assert_eq!(mat.triangularity(), Triangularity::ColLeqRow);
            for lam in partitions_of(m) {
                assert_eq!(
                    mat.get(&lam, &lam).unwrap(),
                    rat_from_int(&power_diagonal(&lam)),
                    "diagonal at {lam}"
                );
            }
            // Invertible after diagonal factoring.
            let inv = mat.invert(InvertMode::Chains).unwrap();
            assert!(mat.mul(&inv).unwrap().is_identity());
        }
    }

    #[test]
    fn elementary_matrix_is_conjugate_unitriangular() {
        for m in 1..=6u32 {
            let mat = classic_matrix(ClassicBasis::Elementary, m).unwrap();
            assert!(mat.is_unitriangular());
            let inv = mat.invert(InvertMode::BackSub).unwrap();
            assert!(mat.mul(&inv).unwrap().is_identity());
        }
    }

    #[test]
    fn complete_matrix_is_gram_of_kostka() {
        // RSK: H(λ,μ) = Σ_ν K(ν,λ)·K(ν,μ), so det H = 1 and h is a basis.
        for m in 1..=5u32 {
            for lam in partitions_of(m) {
                for mu in partitions_of(m) {
                    let direct = complete_count(&lam, &mu);
                    let mut gram = Int::zero();
                    for nu in partitions_of(m) {
                        gram += kostka(&nu, &lam) * kostka(&nu, &mu);
                    }
                    assert_eq!(direct, gram, "H({lam},{mu})");
                }
            }
        }
    }

    #[test]
    fn monomial_products() {
        let t = monomial_structure(&pt("1"), &pt("1"));
        assert_eq!(t[&pt("2")], Int::one());
        assert_eq!(t[&pt("1,1")], Int::from(2));
        let t = monomial_structure(&pt("2,1"), &pt("1"));
        assert_eq!(t[&pt("3,1")], Int::one());
        // x1²x2·x2 and x1x2²·x1 both land on x1²x2², and similarly for 211.
        assert_eq!(t[&pt("2,2")], Int::from(2));
        assert_eq!(t[&pt("2,1,1")], Int::from(2));
        // Product of monomial polynomials agrees at n = 6.
        for (lam, mu) in [(pt("2,1"), pt("1,1")), (pt("2"), pt("2")), (pt("1,1"), pt("1,1"))] {
            let n = 6;
            let direct = monomial_poly(&lam, n)
                .unwrap()
                .try_mul(&monomial_poly(&mu, n).unwrap())
                .unwrap();
            let mut rebuilt = SparsePoly::zero(n);
            for (nu, c) in monomial_structure(&lam, &mu) {
                rebuilt = rebuilt
                    .try_add(&monomial_poly(&nu, n).unwrap().scale(&rat_from_int(&c)))
                    .unwrap();
            }
            assert_eq!(direct, rebuilt, "m_{lam} · m_{mu}");
        }
    }

    #[test]
    fn littlewood_richardson_small_cases() {
        let c = littlewood_richardson(&pt("1"), &pt("1"), InvertMode::Chains).unwrap();
        assert_eq!(c[&pt("2")], rat_int(1));
        assert_eq!(c[&pt("1,1")], rat_int(1));
        assert_eq!(c.len(), 2);
        // Pieri: s_2 · s_2 = s_4 + s_31 + s_22.
        let c = littlewood_richardson(&pt("2"), &pt("2"), InvertMode::BackSub).unwrap();
        assert_eq!(c.len(), 3);
        for nu in ["4", "3,1", "2,2"] {
            assert_eq!(c[&pt(nu)], rat_int(1), "coefficient at {nu}");
        }
        // s_21 · s_1 = s_31 + s_22 + s_211.
        let c = littlewood_richardson(&pt("2,1"), &pt("1"), InvertMode::Chains).unwrap();
        assert_eq!(c.len(), 3);
        for nu in ["3,1", "2,2", "2,1,1"] {
            assert_eq!(c[&pt(nu)], rat_int(1), "coefficient at {nu}");
        }
    }

    #[test]
    fn schur_product_matches_polynomial_product() {
        let n = 6;
        for (lam, mu) in [
            (pt("2,1"), pt("1")),
            (pt("2"), pt("2,1")),
            (pt("1,1"), pt("1,1")),
        ] {
            let direct = schur_poly(&lam, n)
                .unwrap()
                .try_mul(&schur_poly(&mu, n).unwrap())
                .unwrap();
            let mut rebuilt = SparsePoly::zero(n);
            for (nu, c) in littlewood_richardson(&lam, &mu, InvertMode::Chains).unwrap() {
                rebuilt = rebuilt
                    .try_add(&schur_poly(&nu, n).unwrap().scale(&c))
                    .unwrap();
            }
            assert_eq!(direct, rebuilt, "s_{lam} · s_{mu}");
        }
    }

    #[test]
    fn multiplicative_bases_concatenate() {
        let c = structure_constants_classic(
            ClassicBasis::PowerSum,
            &pt("2,1"),
            &pt("3,1"),
            InvertMode::Chains,
        )
        .unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&pt("3,2,1,1")], rat_int(1));
    }

    #[test]
    fn rejects_too_many_rows() {
        assert!(monomial_poly(&pt("1,1,1"), 2).is_err());
        assert!(schur_poly(&pt("1,1,1"), 2).is_err());
        // e and h are fine in fewer variables.
        assert!(expand_classic(ClassicBasis::Elementary, &pt("1,1,1"), 2).is_ok());
        assert_eq!(
            expand_classic(ClassicBasis::Elementary, &pt("3"), 2).unwrap(),
            SparsePoly::zero(2)
        );
    }
}
