//! Quasisymmetric bases expanded over the monomial quasisymmetric functions.
//!
//! Every basis here is a row of coefficients against M_β: fundamental (all
//! refinements), dual immaculate and quasi-Schur (tableau counts), the
//! combinatorial power basis (one-nonzero-per-column matrices with a
//! prescribed reading word), and the two power-sum deformations Ψ and Φ
//! (coarsenings weighted by partial-sum or factorial block statistics).
//! Products happen in the M basis through the quasi-shuffle rule and return
//! through the inverse transition matrix over the composition poset — the
//! dominance order for every basis except quasi-Schur, which is triangular
//! for the sorted-first order instead.

use crate::composition::{
    coarsenings_of, factorial, refinements_of, sort_of, strong_compositions_of, z_of,
    StrongComposition,
};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::poset::{strong_poset, strong_prime_poset};
use crate::rational::{rat_from_int, Int, Rat};
use crate::transition::{InvertMode, TransitionMatrix, Triangularity};
use num::{One, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QsymBasis {
    Monomial,
    Fundamental,
    DualImmaculate,
    QuasiSchur,
    PowerComb,
    PsiPower,
    PhiPower,
}

impl QsymBasis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(QsymBasis::Monomial),
            "F" => Ok(QsymBasis::Fundamental),
            "dimm" => Ok(QsymBasis::DualImmaculate),
            "qschur" => Ok(QsymBasis::QuasiSchur),
            "pcomb" => Ok(QsymBasis::PowerComb),
            "psi" => Ok(QsymBasis::PsiPower),
            "phi" => Ok(QsymBasis::PhiPower),
            _ => Err(Error::Parse(format!("unknown quasisymmetric basis {s:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            QsymBasis::Monomial => "M",
            QsymBasis::Fundamental => "F",
            QsymBasis::DualImmaculate => "dimm",
            QsymBasis::QuasiSchur => "qschur",
            QsymBasis::PowerComb => "pcomb",
            QsymBasis::PsiPower => "psi",
            QsymBasis::PhiPower => "phi",
        }
    }

    /// Which side of the poset the M-support lives on: refinement-supported
    /// bases sit above their index, coarsening-supported ones below.
    pub fn triangularity(&self) -> Triangularity {
        match self {
            QsymBasis::Monomial
            | QsymBasis::Fundamental
            | QsymBasis::DualImmaculate
            | QsymBasis::QuasiSchur => Triangularity::RowLeqCol,
            QsymBasis::PowerComb | QsymBasis::PsiPower | QsymBasis::PhiPower => {
                Triangularity::ColLeqRow
            }
        }
    }
}

// ---------------------------------------------------------------------------
// tableau counts

/// Dual immaculate coefficient: fillings of the diagram of α whose rows
/// weakly increase, whose first column strictly increases downward, with
/// content β.
pub fn dual_immaculate_count(alpha: &StrongComposition, beta: &StrongComposition) -> Int {
    if alpha.size() != beta.size() {
        return Int::zero();
    }
    let rows: Vec<u32> = alpha.parts().to_vec();
    let mut budget: Vec<u32> = beta.parts().to_vec();
    let mut filling: Vec<Vec<u32>> = rows.iter().map(|&r| Vec::with_capacity(r as usize)).collect();
    let mut count = Int::zero();
    fn rec(
        rows: &[u32],
        r: usize,
        c: usize,
        budget: &mut Vec<u32>,
        filling: &mut Vec<Vec<u32>>,
        count: &mut Int,
    ) {
        if r == rows.len() {
            *count += Int::one();
            return;
        }
        if c == rows[r] as usize {
            rec(rows, r + 1, 0, budget, filling, count);
            return;
        }
        let lo = if c > 0 {
            filling[r][c - 1]
        } else if r > 0 {
            filling[r - 1][0] + 1
        } else {
            1
        };
        for v in lo..=(budget.len() as u32) {
            let slot = (v - 1) as usize;
            if budget[slot] == 0 {
                continue;
            }
            budget[slot] -= 1;
            filling[r].push(v);
            rec(rows, r, c + 1, budget, filling, count);
            filling[r].pop();
            budget[slot] += 1;
        }
    }
    rec(&rows, 0, 0, &mut budget, &mut filling, &mut count);
    count
}

/// Quasi-Schur coefficient: fillings whose rows weakly decrease, whose first
/// column strictly increases downward, satisfying the triple rule on the
/// zero-padded array (for rows i < j and columns k ≥ 2: if
/// T(i,k) ≤ T(j,k) ≠ 0 then T(i,k−1) < T(j,k)), with content β.
pub fn quasi_schur_count(alpha: &StrongComposition, beta: &StrongComposition) -> Int {
    if alpha.size() != beta.size() {
        return Int::zero();
    }
    let rows: Vec<u32> = alpha.parts().to_vec();
    let width = rows.iter().copied().max().unwrap_or(0) as usize;
    let nrows = rows.len();
    // Zero-padded array, filled cell by cell in row-major order.
    let mut grid = vec![vec![0u32; width]; nrows];
    let mut budget: Vec<u32> = beta.parts().to_vec();
    let mut count = Int::zero();
    fn triple_ok(grid: &[Vec<u32>], rows: &[u32], r: usize, c: usize) -> bool {
        // Check every constraint involving the newly placed cell (r, c).
        let v = grid[r][c];
        // As the lower cell T(j,k) with j = r, k = c+1 ≥ 2.
        if c >= 1 {
            for i in 0..r {
                if grid[i][c] <= v && grid[i][c - 1] >= v {
                    return false;
                }
            }
        }
        // As the upper cell T(i,k): lower rows are not yet filled, and as
        // T(i,k−1): cells (j,k) for j > r are not yet filled either, so the
        // remaining cases are checked when those cells are placed.
        let _ = rows;
        true
    }
    fn rec(
        rows: &[u32],
        width: usize,
        r: usize,
        c: usize,
        grid: &mut Vec<Vec<u32>>,
        budget: &mut Vec<u32>,
        count: &mut Int,
    ) {
        if r == rows.len() {
            *count += Int::one();
            return;
        }
        if c == rows[r] as usize {
            rec(rows, width, r + 1, 0, grid, budget, count);
            return;
        }
        let hi = if c > 0 { grid[r][c - 1] } else { u32::MAX };
        let lo = if c == 0 && r > 0 { grid[r - 1][0] + 1 } else { 1 };
        for v in lo..=(budget.len() as u32).min(hi) {
            let slot = (v - 1) as usize;
            if budget[slot] == 0 {
                continue;
            }
            grid[r][c] = v;
            if triple_ok(grid, rows, r, c) {
                budget[slot] -= 1;
                rec(rows, width, r, c + 1, grid, budget, count);
                budget[slot] += 1;
            }
            grid[r][c] = 0;
        }
    }
    rec(&rows, width, 0, 0, &mut grid, &mut budget, &mut count);
    count
}

/// Combinatorial power coefficient: matrices with ℓ(β) rows and ℓ(α)
/// columns, column j holding a single nonzero equal to the j-th largest part
/// of α, with row sums β and row-by-row left-to-right reading word α.
pub fn power_comb_count(alpha: &StrongComposition, beta: &StrongComposition) -> Int {
    if alpha.size() != beta.size() {
        return Int::zero();
    }
    let values: Vec<u32> = sort_of(alpha.parts()).parts().to_vec();
    let nrows = beta.len();
    if alpha.is_empty() {
        return if beta.is_empty() { Int::one() } else { Int::zero() };
    }
    if nrows == 0 {
        return Int::zero();
    }
    let mut remaining: Vec<u32> = beta.parts().to_vec();
    let mut assign: Vec<usize> = vec![0; values.len()];
    let mut count = Int::zero();
    fn rec(
        values: &[u32],
        j: usize,
        remaining: &mut Vec<u32>,
        assign: &mut Vec<usize>,
        alpha: &[u32],
        count: &mut Int,
    ) {
        if j == values.len() {
            if remaining.iter().any(|&r| r != 0) {
                return;
            }
            // Reading word: rows in order, columns in increasing index.
            let mut word = Vec::with_capacity(values.len());
            for r in 0..remaining.len() {
                for (col, &row) in assign.iter().enumerate() {
                    if row == r {
                        word.push(values[col]);
                    }
                }
            }
            if word == alpha {
                *count += Int::one();
            }
            return;
        }
        for r in 0..remaining.len() {
            if remaining[r] >= values[j] {
                remaining[r] -= values[j];
                assign[j] = r;
                rec(values, j + 1, remaining, assign, alpha, count);
                remaining[r] += values[j];
            }
        }
    }
    rec(
        &values,
        0,
        &mut remaining,
        &mut assign,
        alpha.parts(),
        &mut count,
    );
    count
}

/// Closed form for the same count: α must split into consecutive weakly
/// decreasing blocks with sums β, and then the columns of each part value
/// distribute by a multinomial.
pub fn power_comb_count_closed(alpha: &StrongComposition, beta: &StrongComposition) -> Int {
    let blocks = match crate::composition::refinement_blocks(alpha, beta) {
        Some(b) => b,
        None => return Int::zero(),
    };
    if blocks
        .iter()
        .any(|b| b.windows(2).any(|w| w[0] < w[1]))
    {
        return Int::zero();
    }
    let max = alpha.parts().iter().copied().max().unwrap_or(0);
    let mut total = Int::one();
    for v in 1..=max {
        let m = alpha.parts().iter().filter(|&&p| p == v).count() as u32;
        if m == 0 {
            continue;
        }
        let mut ways = factorial(m);
        for b in &blocks {
            let c = b.iter().filter(|&&p| p == v).count() as u32;
            ways /= factorial(c);
        }
        total *= ways;
    }
    total
}

/// Ψ block weight: the product of partial sums within each merged block.
pub fn psi_block_weight(blocks: &[Vec<u32>]) -> Int {
    let mut w = Int::one();
    for b in blocks {
        let mut partial = 0u64;
        for &p in b {
            partial += p as u64;
            w *= Int::from(partial);
        }
    }
    w
}

/// Φ block weight: ℓ! times the product of the parts, per merged block.
pub fn phi_block_weight(blocks: &[Vec<u32>]) -> Int {
    let mut w = Int::one();
    for b in blocks {
        w *= factorial(b.len() as u32);
        for &p in b {
            w *= Int::from(p);
        }
    }
    w
}

// ---------------------------------------------------------------------------
// rows in the M basis

/// Expansion of one basis element over M: the row of the transition matrix.
pub fn m_coeffs(basis: QsymBasis, alpha: &StrongComposition) -> BTreeMap<StrongComposition, Rat> {
    let mut out = BTreeMap::new();
    match basis {
        QsymBasis::Monomial => {
            out.insert(alpha.clone(), Rat::one());
        }
        QsymBasis::Fundamental => {
            for beta in refinements_of(alpha) {
                out.insert(beta, Rat::one());
            }
        }
        QsymBasis::DualImmaculate => {
            for beta in strong_compositions_of(alpha.size() as u32) {
                let c = dual_immaculate_count(alpha, &beta);
                if !c.is_zero() {
                    out.insert(beta, rat_from_int(&c));
                }
            }
        }
        QsymBasis::QuasiSchur => {
            for beta in strong_compositions_of(alpha.size() as u32) {
                let c = quasi_schur_count(alpha, &beta);
                if !c.is_zero() {
                    out.insert(beta, rat_from_int(&c));
                }
            }
        }
        QsymBasis::PowerComb => {
            for (beta, _) in coarsenings_of(alpha) {
                let c = power_comb_count(alpha, &beta);
                if !c.is_zero() {
                    out.insert(beta, rat_from_int(&c));
                }
            }
        }
        QsymBasis::PsiPower => {
            let z = rat_from_int(&z_of(alpha.parts()));
            for (beta, blocks) in coarsenings_of(alpha) {
                let w = psi_block_weight(&blocks);
                let slot = out.entry(beta).or_insert_with(Rat::zero);
                *slot += &z / rat_from_int(&w);
            }
        }
        QsymBasis::PhiPower => {
            let z = rat_from_int(&z_of(alpha.parts()));
            for (beta, blocks) in coarsenings_of(alpha) {
                let w = phi_block_weight(&blocks);
                let slot = out.entry(beta).or_insert_with(Rat::zero);
                *slot += &z / rat_from_int(&w);
            }
        }
    }
    out
}

/// Coefficient matrix of the basis over M at degree k, on the composition
/// poset (sorted-first order for quasi-Schur, dominance otherwise).
pub fn qsym_matrix(basis: QsymBasis, k: u32) -> Result<TransitionMatrix<StrongComposition>> {
    let n = k as usize;
    let poset = match basis {
        QsymBasis::QuasiSchur => strong_prime_poset(n.max(1), k),
        _ => strong_poset(n.max(1), k),
    };
    let mut mat = TransitionMatrix::new(poset.clone(), basis.triangularity());
    for alpha in poset.elements() {
        for (beta, c) in m_coeffs(basis, alpha) {
            mat.set(alpha, &beta, c)?;
        }
    }
    Ok(mat)
}

// ---------------------------------------------------------------------------
// products

/// Quasi-shuffle coefficients: M_a · M_b = Σ_γ c_γ M_γ, built by repeatedly
/// taking the next part from a, from b, or from both merged.
pub fn m_product_coeffs(
    a: &StrongComposition,
    b: &StrongComposition,
) -> BTreeMap<StrongComposition, Int> {
    fn rec(a: &[u32], b: &[u32]) -> BTreeMap<Vec<u32>, Int> {
        let mut out: BTreeMap<Vec<u32>, Int> = BTreeMap::new();
        if a.is_empty() {
            out.insert(b.to_vec(), Int::one());
            return out;
        }
        if b.is_empty() {
            out.insert(a.to_vec(), Int::one());
            return out;
        }
        let push = |head: u32, tails: BTreeMap<Vec<u32>, Int>, out: &mut BTreeMap<Vec<u32>, Int>| {
            for (tail, c) in tails {
                let mut v = Vec::with_capacity(tail.len() + 1);
                v.push(head);
                v.extend_from_slice(&tail);
                let slot = out.entry(v).or_insert_with(Int::zero);
                *slot += c;
            }
        };
        push(a[0], rec(&a[1..], b), &mut out);
        push(b[0], rec(a, &b[1..]), &mut out);
        push(a[0] + b[0], rec(&a[1..], &b[1..]), &mut out);
        out
    }
    rec(a.parts(), b.parts())
        .into_iter()
        .map(|(parts, c)| (StrongComposition::new(parts).expect("positive parts"), c))
        .collect()
}

/// Structure constants in any quasisymmetric basis: expand both factors over
/// M, quasi-shuffle there, then convert back through the inverse transition
/// matrix at the product degree.
pub fn qsym_structure(
    basis: QsymBasis,
    a: &StrongComposition,
    b: &StrongComposition,
    mode: InvertMode,
) -> Result<BTreeMap<StrongComposition, Rat>> {
    let va = m_coeffs(basis, a);
    let vb = m_coeffs(basis, b);
    let mut prod: BTreeMap<StrongComposition, Rat> = BTreeMap::new();
    for (sa, ca) in &va {
        for (sb, cb) in &vb {
            let c = ca * cb;
            for (gamma, count) in m_product_coeffs(sa, sb) {
                let slot = prod.entry(gamma).or_insert_with(Rat::zero);
                *slot += &c * rat_from_int(&count);
            }
        }
    }
    prod.retain(|_, v| !v.is_zero());
    let deg = (a.size() + b.size()) as u32;
    let inv = qsym_matrix(basis, deg)?.invert(mode)?;
    let mut out = inv.convert(&prod)?;
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

// ---------------------------------------------------------------------------
// polynomial realization

/// M_β(x₁..xₙ): the parts of β placed on strictly increasing variable
/// positions.
pub fn monomial_qsym_poly(beta: &StrongComposition, n: usize) -> Result<SparsePoly> {
    if beta.len() > n {
        return Err(Error::LengthExceedsVars {
            len: beta.len(),
            nvars: n,
        });
    }
    let l = beta.len();
    let mut out = SparsePoly::zero(n);
    let mut pos: Vec<usize> = (0..l).collect();
    loop {
        let mut e = vec![0u32; n];
        for (slot, &p) in pos.iter().enumerate() {
            e[p] = beta.parts()[slot];
        }
        out = out.try_add(&SparsePoly::monomial(e, Rat::one()))?;
        // Next increasing position tuple.
        let mut i = l;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pos[i] != i + n - l {
                break;
            }
        }
        pos[i] += 1;
        for j in i + 1..l {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

/// Polynomial realization of any basis element; M-terms needing more than n
/// positions vanish, matching the stable limit.
pub fn expand_qsym(basis: QsymBasis, alpha: &StrongComposition, n: usize) -> Result<SparsePoly> {
    if alpha.len() > n {
        return Err(Error::LengthExceedsVars {
            len: alpha.len(),
            nvars: n,
        });
    }
    let mut out = SparsePoly::zero(n);
    for (beta, c) in m_coeffs(basis, alpha) {
        if beta.len() > n {
            continue;
        }
        out = out.try_add(&monomial_qsym_poly(&beta, n)?.scale(&c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::parse_parts;
    use crate::rational::{rat, rat_int};

    fn sc(s: &str) -> StrongComposition {
        StrongComposition::new(parse_parts(s).unwrap()).unwrap()
    }

    fn coeffs(basis: QsymBasis, alpha: &str) -> BTreeMap<String, Rat> {
        m_coeffs(basis, &sc(alpha))
            .into_iter()
            .map(|(b, c)| (b.to_string(), c))
            .collect()
    }

    #[test]
    fn fundamental_is_the_refinement_sum() {
        let f = coeffs(QsymBasis::Fundamental, "2,2");
        assert_eq!(f.len(), 4);
        for beta in ["2,2", "1,1,2", "2,1,1", "1,1,1,1"] {
            assert_eq!(f[beta], rat_int(1), "at {beta}");
        }
    }

    #[test]
    fn dual_immaculate_golden_row() {
        let f = coeffs(QsymBasis::DualImmaculate, "2,2");
        assert_eq!(f["1,1,1,1"], rat_int(3));
        assert_eq!(f["1,1,2"], rat_int(2));
        assert_eq!(f["1,2,1"], rat_int(2));
        assert_eq!(f["1,3"], rat_int(1));
        assert_eq!(f["2,1,1"], rat_int(1));
        assert_eq!(f["2,2"], rat_int(1));
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn quasi_schur_golden_row() {
        let f = coeffs(QsymBasis::QuasiSchur, "2,2");
        assert_eq!(f["1,1,1,1"], rat_int(2));
        assert_eq!(f["1,1,2"], rat_int(1));
        assert_eq!(f["1,2,1"], rat_int(1));
        assert_eq!(f["2,1,1"], rat_int(1));
        assert_eq!(f["2,2"], rat_int(1));
        assert_eq!(f.len(), 5);
        // The sorted-first support witness: (1,3) reaches (2,2).
        assert_eq!(
            quasi_schur_count(&sc("1,3"), &sc("2,2")),
            Int::one()
        );
    }

    #[test]
    fn power_comb_golden_row_and_closed_form() {
        let f = coeffs(QsymBasis::PowerComb, "1,1,2");
        assert_eq!(f["1,1,2"], rat_int(2));
        assert_eq!(f["2,2"], rat_int(1));
        assert_eq!(f.len(), 2);
        for k in 1..=6u32 {
            for alpha in strong_compositions_of(k) {
                for (beta, _) in coarsenings_of(&alpha) {
                    assert_eq!(
                        power_comb_count(&alpha, &beta),
                        power_comb_count_closed(&alpha, &beta),
                        "pcomb({alpha}, {beta})"
                    );
                }
            }
        }
    }

    #[test]
    fn psi_and_phi_golden_rows() {
        let f = coeffs(QsymBasis::PsiPower, "1,1,2");
        assert_eq!(f["1,1,2"], rat_int(2));
        assert_eq!(f["2,2"], rat_int(1));
        assert_eq!(f["1,3"], rat(4, 3));
        assert_eq!(f["4"], rat(1, 2));
        let f = coeffs(QsymBasis::PhiPower, "1,1,2");
        assert_eq!(f["1,1,2"], rat_int(2));
        assert_eq!(f["2,2"], rat_int(1));
        assert_eq!(f["1,3"], rat_int(1));
        assert_eq!(f["4"], rat(1, 3));
    }

    #[test]
    fn power_sums_refine_the_symmetric_ones() {
        // Σ_{sort(α)=λ} Ψ_α = p_λ, and likewise for Φ, in M coordinates.
        for k in 1..=5u32 {
            for basis in [QsymBasis::PsiPower, QsymBasis::PhiPower, QsymBasis::PowerComb] {
                for lam in crate::composition::partitions_of(k) {
                    let mut total: BTreeMap<StrongComposition, Rat> = BTreeMap::new();
                    for alpha in strong_compositions_of(k) {
                        if alpha.sort() != lam {
                            continue;
                        }
                        for (beta, c) in m_coeffs(basis, &alpha) {
                            let slot = total.entry(beta).or_insert_with(Rat::zero);
                            *slot += c;
                        }
                    }
                    total.retain(|_, v| !v.is_zero());
                    for (beta, c) in &total {
                        let expect = crate::symfn::power_count(&lam, &beta.sort());
                        assert_eq!(
                            *c,
                            rat_from_int(&expect),
                            "{}: coefficient of M_{beta} in the class of p_{lam}",
                            basis.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_invariants() {
        for k in 1..=5u32 {
            for alpha in strong_compositions_of(k) {
                let zq = rat_from_int(&z_of(alpha.parts()));
                let prod: Rat = alpha
                    .parts()
                    .iter()
                    .fold(Rat::one(), |acc, &p| acc * rat_int(p as i64));
                let expected = &zq / &prod;
                assert_eq!(
                    m_coeffs(QsymBasis::PsiPower, &alpha)[&alpha],
                    expected,
                    "psi diagonal at {alpha}"
                );
                assert_eq!(
                    m_coeffs(QsymBasis::PhiPower, &alpha)[&alpha],
                    expected,
                    "phi diagonal at {alpha}"
                );
                let dm = crate::symfn::power_diagonal(&alpha.sort());
                assert_eq!(
                    m_coeffs(QsymBasis::PowerComb, &alpha)[&alpha],
                    rat_from_int(&dm),
                    "pcomb diagonal at {alpha}"
                );
                assert_eq!(
                    dual_immaculate_count(&alpha, &alpha),
                    Int::one(),
                    "dimm diagonal at {alpha}"
                );
                assert_eq!(
                    quasi_schur_count(&alpha, &alpha),
                    Int::one(),
                    "qschur diagonal at {alpha}"
                );
            }
        }
    }

    #[test]
    fn matrices_are_triangular_and_invertible() {
        for basis in [
            QsymBasis::Fundamental,
            QsymBasis::DualImmaculate,
            QsymBasis::QuasiSchur,
            QsymBasis::PowerComb,
            QsymBasis::PsiPower,
            QsymBasis::PhiPower,
        ] {
            let mat = qsym_matrix(basis, 4).unwrap();
            let inv = mat.invert(InvertMode::Chains).unwrap();
            assert!(mat.mul(&inv).unwrap().is_identity(), "{}", basis.name());
            let inv2 = mat.invert(InvertMode::BackSub).unwrap();
            for (rc, v) in inv.entries() {
                assert_eq!(*v, inv2.get_idx(rc.0, rc.1));
            }
        }
    }

    #[test]
    fn quasi_shuffle_products() {
        let p = m_product_coeffs(&sc("1"), &sc("1"));
        assert_eq!(p[&sc("1,1")], Int::from(2));
        assert_eq!(p[&sc("2")], Int::one());
        assert_eq!(p.len(), 2);
        let p = m_product_coeffs(&sc("1"), &sc("2"));
        assert_eq!(p[&sc("1,2")], Int::one());
        assert_eq!(p[&sc("2,1")], Int::one());
        assert_eq!(p[&sc("3")], Int::one());
        // Against the polynomial product at n large enough.
        let n = 6;
        for (a, b) in [(sc("1,2"), sc("1")), (sc("2"), sc("1,1")), (sc("1,1"), sc("1,1"))] {
            let direct = monomial_qsym_poly(&a, n)
                .unwrap()
                .try_mul(&monomial_qsym_poly(&b, n).unwrap())
                .unwrap();
            let mut rebuilt = SparsePoly::zero(n);
            for (g, c) in m_product_coeffs(&a, &b) {
                rebuilt = rebuilt
                    .try_add(&monomial_qsym_poly(&g, n).unwrap().scale(&rat_from_int(&c)))
                    .unwrap();
            }
            assert_eq!(direct, rebuilt, "M_{a} · M_{b}");
        }
    }

    #[test]
    fn structure_constants_small() {
        let f = qsym_structure(QsymBasis::Fundamental, &sc("1"), &sc("1"), InvertMode::Chains)
            .unwrap();
        assert_eq!(f[&sc("1,1")], rat_int(1));
        assert_eq!(f[&sc("2")], rat_int(1));
        assert_eq!(f.len(), 2);
        let f = qsym_structure(
            QsymBasis::DualImmaculate,
            &sc("1"),
            &sc("1"),
            InvertMode::BackSub,
        )
        .unwrap();
        assert_eq!(f[&sc("1,1")], rat_int(1));
        assert_eq!(f[&sc("2")], rat_int(1));
        assert_eq!(f.len(), 2);
        // M products stay in M.
        let f = qsym_structure(QsymBasis::Monomial, &sc("1"), &sc("1"), InvertMode::Chains)
            .unwrap();
        assert_eq!(f[&sc("1,1")], rat_int(2));
        assert_eq!(f[&sc("2")], rat_int(1));
    }

    #[test]
    fn polynomial_realizations_are_quasisymmetric() {
        for basis in [
            QsymBasis::Fundamental,
            QsymBasis::DualImmaculate,
            QsymBasis::QuasiSchur,
            QsymBasis::PowerComb,
            QsymBasis::PsiPower,
            QsymBasis::PhiPower,
        ] {
            for alpha in ["2,1", "1,2", "1,1,1", "3"] {
                let p = expand_qsym(basis, &sc(alpha), 5).unwrap();
                assert!(p.is_quasisymmetric(), "{} at {alpha}", basis.name());
            }
        }
        assert!(expand_qsym(QsymBasis::Fundamental, &sc("1,1,1"), 2).is_err());
        // F_{2,2} has the four refinement M-terms.
        let f = expand_qsym(QsymBasis::Fundamental, &sc("2,2"), 4).unwrap();
        assert_eq!(f.coeff(&[2, 2, 0, 0]), rat_int(1));
        assert_eq!(f.coeff(&[1, 1, 2, 0]), rat_int(1));
        assert_eq!(f.coeff(&[1, 1, 1, 1]), rat_int(1));
        assert_eq!(f.coeff(&[2, 1, 1, 0]), rat_int(1));
        assert_eq!(f.coeff(&[1, 2, 1, 0]), rat_int(0));
    }
}
