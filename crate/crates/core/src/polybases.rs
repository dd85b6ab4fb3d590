//! Bases of the full polynomial ring indexed by weak compositions.
//!
//! Slide expansions come from dominance-constrained exponent sums; Demazure
//! atoms from augmented skyline fillings; key and Lascoux polynomials from
//! the Kohnert move closure of the composition diagram (with box-keeping
//! moves and a sign by box count for Lascoux); Schubert and Grothendieck
//! polynomials from the ladder move closure inside the minimal staircase.
//! Structure constants multiply the honest polynomials and convert back by
//! unitriangular inversion per degree, peeling lowest degrees first for the
//! inhomogeneous families.

use crate::composition::{refines, weak_compositions, WeakComposition};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::poset::weak_poset;
use crate::rational::Rat;
use crate::transition::{InvertMode, TransitionMatrix, Triangularity};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PolyBasis {
    MonomialSlide,
    FundamentalSlide,
    Atom,
    Key,
    Lascoux,
    Schubert,
    Grothendieck,
}

impl PolyBasis {
    pub const ALL: [PolyBasis; 7] = [
        PolyBasis::MonomialSlide,
        PolyBasis::FundamentalSlide,
        PolyBasis::Atom,
        PolyBasis::Key,
        PolyBasis::Lascoux,
        PolyBasis::Schubert,
        PolyBasis::Grothendieck,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "mslide" => Ok(PolyBasis::MonomialSlide),
            "fslide" => Ok(PolyBasis::FundamentalSlide),
            "atom" => Ok(PolyBasis::Atom),
            "key" => Ok(PolyBasis::Key),
            "lascoux" => Ok(PolyBasis::Lascoux),
            "schubert" => Ok(PolyBasis::Schubert),
            "grothendieck" => Ok(PolyBasis::Grothendieck),
            _ => Err(Error::Parse(format!("unknown polynomial basis {s:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PolyBasis::MonomialSlide => "mslide",
            PolyBasis::FundamentalSlide => "fslide",
            PolyBasis::Atom => "atom",
            PolyBasis::Key => "key",
            PolyBasis::Lascoux => "lascoux",
            PolyBasis::Schubert => "schubert",
            PolyBasis::Grothendieck => "grothendieck",
        }
    }

    /// The degree-graded leading family: what the lowest-degree homogeneous
    /// part of each element is.
    fn graded_leader(&self) -> PolyBasis {
        match self {
            PolyBasis::Lascoux => PolyBasis::Key,
            PolyBasis::Grothendieck => PolyBasis::Schubert,
            b => *b,
        }
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, PolyBasis::Lascoux | PolyBasis::Grothendieck)
    }
}

// ---------------------------------------------------------------------------
// slide bases

/// 𝔐_α: exponents β ⊴ α with the same flattening.
pub fn monomial_slide_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let flat = alpha.flat();
    let mut out = SparsePoly::zero(n);
    for beta in weak_compositions(n, alpha.size() as u32) {
        if beta.flat() == flat
            && crate::composition::dominance_leq(beta.parts(), alpha.parts())
        {
            out = out
                .try_add(&SparsePoly::monomial(beta.parts().to_vec(), Rat::one()))
                .expect("same nvars");
        }
    }
    out
}

/// 𝔉_α: exponents β ⊴ α whose flattening refines flat(α).
pub fn fundamental_slide_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let flat = alpha.flat();
    let mut out = SparsePoly::zero(n);
    for beta in weak_compositions(n, alpha.size() as u32) {
        if refines(&beta.flat(), &flat)
            && crate::composition::dominance_leq(beta.parts(), alpha.parts())
        {
            out = out
                .try_add(&SparsePoly::monomial(beta.parts().to_vec(), Rat::one()))
                .expect("same nvars");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// atoms: augmented skyline fillings

/// Demazure atom by enumerating augmented fillings: row i carries a basement
/// entry i in column 0 and α_i cells; rows weakly decrease from the basement,
/// column entries are pairwise distinct, and every pair of rows satisfies the
/// coinversion triple rule.
pub fn atom_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let shape: Vec<u32> = alpha.parts().to_vec();
    // rows[i][k] with k = 0 the basement entry i+1.
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut r = Vec::with_capacity(shape[i] as usize + 1);
            r.push(i as u32 + 1);
            r
        })
        .collect();
    let mut out = SparsePoly::zero(n);
    fill_atom(&shape, 0, 1, &mut rows, n, &mut out);
    out
}

fn triple_fine(c: u32, a: u32, b: u32) -> bool {
    // One of: c < b < a, a ≤ c < b, b < a ≤ c.
    (c < b && b < a) || (a <= c && c < b) || (b < a && a <= c)
}

fn fill_atom(
    shape: &[u32],
    i: usize,
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    n: usize,
    out: &mut SparsePoly,
) {
    if i == shape.len() {
        let mut e = vec![0u32; n];
        for row in rows.iter() {
            for &v in &row[1..] {
                e[(v - 1) as usize] += 1;
            }
        }
        *out = out
            .try_add(&SparsePoly::monomial(e, Rat::one()))
            .expect("same nvars");
        return;
    }
    if k > shape[i] as usize {
        fill_atom(shape, i + 1, 1, rows, n, out);
        return;
    }
    let hi = rows[i][k - 1];
    'values: for v in 1..=hi {
        // Column entries distinct among filled cells (basements excluded).
        for (j, row) in rows.iter().enumerate() {
            if j != i && row.len() > k && row[k] == v {
                continue 'values;
            }
        }
        rows[i].push(v);
        // Triple rule against every earlier, fully relevant row; later rows
        // are rechecked when they fill.
        let ok = atom_triples_ok(shape, rows, i, k);
        if ok {
            fill_atom(shape, i, k + 1, rows, n, out);
        }
        rows[i].pop();
    }
}

fn atom_triples_ok(shape: &[u32], rows: &[Vec<u32>], i: usize, k: usize) -> bool {
    // Check all triples that become complete once cell (i, k) is placed.
    for j in 0..shape.len() {
        if j == i {
            continue;
        }
        let (top, bot) = if j < i { (j, i) } else { (i, j) };
        let (at, ab) = (shape[top], shape[bot]);
        if at >= ab {
            // c = T(top, k−1), a = T(top, k), b = T(bot, k), k ∈ [1, ab].
            for kk in 1..=ab as usize {
                let need = [(top, kk - 1), (top, kk), (bot, kk)];
                if need.iter().all(|&(r, c)| rows[r].len() > c) {
                    // Only validate triples involving the newly placed cell.
                    if need.contains(&(i, k)) {
                        let c = rows[top][kk - 1];
                        let a = rows[top][kk];
                        let b = rows[bot][kk];
                        if !triple_fine(c, a, b) {
                            return false;
                        }
                    }
                }
            }
        } else {
            // b = T(top, k−1), c = T(bot, k−1), a = T(bot, k),
            // k ∈ [1, min(at+1, ab)].
            for kk in 1..=(at + 1).min(ab) as usize {
                let need = [(top, kk - 1), (bot, kk - 1), (bot, kk)];
                if need.iter().all(|&(r, c)| rows[r].len() > c) && need.contains(&(i, k)) {
                    let b = rows[top][kk - 1];
                    let c = rows[bot][kk - 1];
                    let a = rows[bot][kk];
                    if !triple_fine(c, a, b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Kohnert closure: key and Lascoux

/// A diagram whose boxes are either movable or frozen in place.
type Labeled = BTreeMap<(u32, u32), bool>;

fn kohnert_moves(state: &Labeled, with_k: bool) -> Vec<Labeled> {
    let mut out = Vec::new();
    let rows: BTreeSet<u32> = state.keys().map(|&(r, _)| r).collect();
    for &i in &rows {
        // The rightmost box of the row must be movable.
        let j = state
            .keys()
            .filter(|&&(r, _)| r == i)
            .map(|&(_, c)| c)
            .max()
            .unwrap();
        if !state[&(i, j)] {
            continue;
        }
        // Nearest empty cell above in the column.
        let mut target = None;
        for r in (1..i).rev() {
            if !state.contains_key(&(r, j)) {
                target = Some(r);
                break;
            }
        }
        let Some(ip) = target else { continue };
        // Boxes jumped over must all be movable.
        if (ip + 1..i).any(|r| !state[&(r, j)]) {
            continue;
        }
        let mut plain = state.clone();
        plain.remove(&(i, j));
        plain.insert((ip, j), true);
        out.push(plain);
        if with_k {
            let mut keep = state.clone();
            keep.insert((i, j), false);
            keep.insert((ip, j), true);
            out.push(keep);
        }
    }
    out
}

/// All labeled diagrams reachable by Kohnert moves (box-keeping moves
/// included when `with_k`), starting from the left-justified diagram of α.
pub fn kohnert_closure(alpha: &WeakComposition, with_k: bool) -> Vec<Labeled> {
    let mut start: Labeled = BTreeMap::new();
    for (i, &a) in alpha.parts().iter().enumerate() {
        for j in 1..=a {
            start.insert((i as u32 + 1, j), true);
        }
    }
    let mut seen: BTreeSet<Vec<((u32, u32), bool)>> = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let enc = |s: &Labeled| s.iter().map(|(&c, &m)| (c, m)).collect::<Vec<_>>();
    seen.insert(enc(&start));
    queue.push_back(start.clone());
    order.push(start);
    while let Some(s) = queue.pop_front() {
        for next in kohnert_moves(&s, with_k) {
            if seen.insert(enc(&next)) {
                queue.push_back(next.clone());
                order.push(next);
            }
        }
    }
    order
}

fn weight_of(cells: impl Iterator<Item = (u32, u32)>, n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for (r, _) in cells {
        e[(r - 1) as usize] += 1;
    }
    e
}

/// Key polynomial: the plain Kohnert closure, one monomial per diagram.
pub fn key_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let mut out = SparsePoly::zero(n);
    for d in kohnert_closure(alpha, false) {
        let e = weight_of(d.keys().copied(), n);
        out = out
            .try_add(&SparsePoly::monomial(e, Rat::one()))
            .expect("same nvars");
    }
    out
}

/// Lascoux polynomial: the box-keeping closure with sign (−1)^{boxes − |α|}.
pub fn lascoux_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let base = alpha.size() as usize;
    let mut out = SparsePoly::zero(n);
    for d in kohnert_closure(alpha, true) {
        let e = weight_of(d.keys().copied(), n);
        let sign = if (d.len() - base) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        out = out
            .try_add(&SparsePoly::monomial(e, sign))
            .expect("same nvars");
    }
    out
}

// ---------------------------------------------------------------------------
// ladder closure: Schubert and Grothendieck

type Cells = BTreeSet<(u32, u32)>;

/// The staircase bound: diagrams stay inside i + j ≤ m with m the size of
/// the smallest symmetric group containing the code.
pub fn staircase_bound(alpha: &WeakComposition) -> u32 {
    let len = alpha.len() as u32;
    alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &a)| a + i as u32 + 1)
        .chain([len])
        .max()
        .unwrap_or(0)
}

fn ladder_moves(state: &Cells, with_k: bool, m: u32) -> Vec<Cells> {
    let mut out = Vec::new();
    for &(i, j) in state.iter() {
        if state.contains(&(i, j + 1)) {
            continue;
        }
        // Scan upward: rows with both of columns j, j+1 filled are rungs;
        // the first row with neither is the landing; one-of-two blocks.
        let mut landing = None;
        for r in (1..i).rev() {
            let left = state.contains(&(r, j));
            let right = state.contains(&(r, j + 1));
            match (left, right) {
                (true, true) => continue,
                (false, false) => {
                    landing = Some(r);
                    break;
                }
                _ => break,
            }
        }
        let Some(r) = landing else { continue };
        if r + (j + 1) > m {
            continue;
        }
        let mut plain = state.clone();
        plain.remove(&(i, j));
        plain.insert((r, j + 1));
        out.push(plain);
        if with_k {
            let mut keep = state.clone();
            keep.insert((r, j + 1));
            out.push(keep);
        }
    }
    out
}

/// All diagrams reachable by ladder moves from the left-justified diagram of
/// the code α, inside the minimal staircase.
pub fn ladder_closure(alpha: &WeakComposition, with_k: bool) -> Vec<Cells> {
    let m = staircase_bound(alpha);
    let mut start: Cells = BTreeSet::new();
    for (i, &a) in alpha.parts().iter().enumerate() {
        for j in 1..=a {
            start.insert((i as u32 + 1, j));
        }
    }
    let mut seen: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let enc = |s: &Cells| s.iter().copied().collect::<Vec<_>>();
    seen.insert(enc(&start));
    queue.push_back(start.clone());
    order.push(start);
    while let Some(s) = queue.pop_front() {
        for next in ladder_moves(&s, with_k, m) {
            if seen.insert(enc(&next)) {
                queue.push_back(next.clone());
                order.push(next);
            }
        }
    }
    order
}

/// Schubert polynomial of the code α via the plain ladder closure.
pub fn schubert_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let mut out = SparsePoly::zero(n);
    for d in ladder_closure(alpha, false) {
        let e = weight_of(d.iter().copied(), n);
        out = out
            .try_add(&SparsePoly::monomial(e, Rat::one()))
            .expect("same nvars");
    }
    out
}

/// Grothendieck polynomial: ladder closure with box-keeping moves and sign
/// (−1)^{boxes − |α|}.
pub fn grothendieck_poly(alpha: &WeakComposition) -> SparsePoly {
    let n = alpha.len();
    let base = alpha.size() as usize;
    let mut out = SparsePoly::zero(n);
    for d in ladder_closure(alpha, true) {
        let e = weight_of(d.iter().copied(), n);
        let sign = if (d.len() - base) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        out = out
            .try_add(&SparsePoly::monomial(e, sign))
            .expect("same nvars");
    }
    out
}

pub fn expand_poly(basis: PolyBasis, alpha: &WeakComposition) -> Result<SparsePoly> {
    Ok(match basis {
        PolyBasis::MonomialSlide => monomial_slide_poly(alpha),
        PolyBasis::FundamentalSlide => fundamental_slide_poly(alpha),
        PolyBasis::Atom => atom_poly(alpha),
        PolyBasis::Key => key_poly(alpha),
        PolyBasis::Lascoux => lascoux_poly(alpha),
        PolyBasis::Schubert => schubert_poly(alpha),
        PolyBasis::Grothendieck => grothendieck_poly(alpha),
    })
}

/// Memoized expansion: the closures are pure, so results are shared freely.
pub fn expand_poly_cached(basis: PolyBasis, alpha: &WeakComposition) -> Result<SparsePoly> {
    static CACHE: OnceLock<Mutex<HashMap<(PolyBasis, Vec<u32>), SparsePoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (basis, alpha.parts().to_vec());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let fresh = expand_poly(basis, alpha)?;
    cache.lock().unwrap().insert(key, fresh.clone());
    Ok(fresh)
}

// ---------------------------------------------------------------------------
// transition matrices and structure constants

/// Degree-graded transition matrix at n variables, degree k: entry (γ, ω) is
/// the coefficient of x^ω in the degree-k part of the basis element at γ.
/// Unitriangular with support ω ⊴ γ.
pub fn poly_matrix(basis: PolyBasis, n: usize, k: u32) -> Result<TransitionMatrix<WeakComposition>> {
    let poset = weak_poset(n, k);
    let mut mat = TransitionMatrix::new(poset.clone(), Triangularity::ColLeqRow);
    for gamma in poset.elements() {
        let p = expand_poly_cached(basis, gamma)?;
        for (e, c) in p.terms() {
            if e.iter().map(|&x| x as u64).sum::<u64>() == k as u64 {
                mat.set(gamma, &WeakComposition::new(e.clone()), c.clone())?;
            }
        }
    }
    Ok(mat)
}

/// Memoized inverse of `poly_matrix`, shared across structure-constant calls.
fn poly_matrix_inverse_cached(
    basis: PolyBasis,
    n: usize,
    k: u32,
    mode: InvertMode,
) -> Result<TransitionMatrix<WeakComposition>> {
    type Key = (PolyBasis, usize, u32, bool);
    static CACHE: OnceLock<Mutex<HashMap<Key, TransitionMatrix<WeakComposition>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (basis, n, k, matches!(mode, InvertMode::Chains));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let fresh = poly_matrix(basis, n, k)?.invert(mode)?;
    cache.lock().unwrap().insert(key, fresh.clone());
    Ok(fresh)
}

/// Expands an arbitrary polynomial in a graded basis, peeling lowest total
/// degree first; for the inhomogeneous families each peel subtracts the full
/// inhomogeneous element whose leading part matched.
pub fn expand_in_poly_basis(
    basis: PolyBasis,
    poly: &SparsePoly,
    mode: InvertMode,
) -> Result<BTreeMap<WeakComposition, Rat>> {
    let n = poly.nvars();
    let mut residual = poly.clone();
    let mut out: BTreeMap<WeakComposition, Rat> = BTreeMap::new();
    let leader = basis.graded_leader();
    // Generous cap: the staircase of the largest code this residual can
    // reach bounds every degree that can appear.
    let cap = {
        let top = residual.degree().unwrap_or(0) as u32;
        let m = top + n as u32 + 1;
        (m * (m + 1)) / 2 + top
    };
    let mut guard = 0u32;
    while !residual.is_zero() {
        let dmin = residual
            .terms()
            .map(|(e, _)| e.iter().map(|&x| x as u64).sum::<u64>())
            .min()
            .unwrap() as u32;
        if guard > cap {
            return Err(Error::ResourceBound(format!(
                "basis expansion exceeded degree cap {cap} in {}",
                basis.name()
            )));
        }
        guard = guard.max(dmin) + 1;
        // Degree-dmin part in coefficient form.
        let mut low: BTreeMap<usize, Rat> = BTreeMap::new();
        let poset = weak_poset(n, dmin);
        for (e, c) in residual.terms() {
            if e.iter().map(|&x| x as u64).sum::<u64>() == dmin as u64 {
                low.insert(poset.index_of(&WeakComposition::new(e.clone()))?, c.clone());
            }
        }
        let inv = poly_matrix_inverse_cached(leader, n, dmin, mode)?;
        let coeffs = inv.vec_times(&low);
        for (idx, c) in coeffs {
            let gamma = poset.element(idx).clone();
            let full = expand_poly_cached(basis, &gamma)?;
            residual = residual.try_sub(&full.scale(&c))?;
            let slot = out.entry(gamma).or_insert_with(Rat::zero);
            *slot += c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Structure constants: both factors are padded to a shared variable count,
/// expanded, multiplied as honest polynomials, and expanded back.
pub fn poly_structure(
    basis: PolyBasis,
    a: &WeakComposition,
    b: &WeakComposition,
    mode: InvertMode,
) -> Result<BTreeMap<WeakComposition, Rat>> {
    let n = a.len().max(b.len());
    let pa = expand_poly(basis, &a.padded(n)?)?;
    let pb = expand_poly(basis, &b.padded(n)?)?;
    let prod = pa.try_mul(&pb)?;
    expand_in_poly_basis(basis, &prod, mode)
}
