//! Independent verification layer: greedy coefficient extraction from honest
//! polynomial expansions, and named suites that cross-check every pipeline
//! against these oracles.
//!
//! Extraction never touches the transition-matrix machinery.  It reads a
//! polynomial monomial by monomial and peels basis elements off the leading
//! term, so agreement with the matrix route is a genuine two-route check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use num::{One, Zero};
use rayon::prelude::*;

use crate::composition::{
    factorial, join_parts, partitions_of, strong_compositions_of, weak_compositions, z_of,
    Partition, StrongComposition, WeakComposition,
};
use crate::error::{Error, Result};
use crate::hall_littlewood::{hl_expand, hl_kostka, hl_matrix, hl_structure, schur_p_expand};
use crate::permutation::Permutation;
use crate::poly::SparsePoly;
use crate::polybases::{expand_poly, expand_poly_cached, poly_matrix, poly_structure, PolyBasis};
use crate::poset::{partitions_poset, strong_poset, weak_poset, Poset};
use crate::qsym::{
    dual_immaculate_count, expand_qsym, m_coeffs, monomial_qsym_poly, qsym_matrix, qsym_structure,
    quasi_schur_count, QsymBasis,
};
use crate::rational::{rat, rat_int, Int, Rat};
use crate::symfn::{
    classic_matrix, complete_count, elementary_count, expand_classic, inverse_kostka_matrix,
    kostka, kostka_matrix, littlewood_richardson, power_count, schur_poly, ClassicBasis,
};
use crate::transition::{InvertMode, TransitionMatrix};

// ---------------------------------------------------------------------------
// basis dispatch

/// Any basis the engine knows how to expand, under one parser.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AnyBasis {
    Classic(ClassicBasis),
    HallLittlewood,
    SchurP,
    Qsym(QsymBasis),
    Poly(PolyBasis),
}

impl AnyBasis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hl" => return Ok(AnyBasis::HallLittlewood),
            "schurp" => return Ok(AnyBasis::SchurP),
            _ => {}
        }
        if let Ok(b) = ClassicBasis::parse(s) {
            return Ok(AnyBasis::Classic(b));
        }
        if let Ok(b) = QsymBasis::parse(s) {
            return Ok(AnyBasis::Qsym(b));
        }
        if let Ok(b) = PolyBasis::parse(s) {
            return Ok(AnyBasis::Poly(b));
        }
        Err(Error::Parse(format!("unknown basis {s:?}")))
    }

    pub fn name(&self) -> &'static str {
        match self {
            AnyBasis::Classic(b) => b.name(),
            AnyBasis::HallLittlewood => "hl",
            AnyBasis::SchurP => "schurp",
            AnyBasis::Qsym(b) => b.name(),
            AnyBasis::Poly(b) => b.name(),
        }
    }
}

/// Target family for symmetric-function extraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SymTarget {
    Classic(ClassicBasis),
    HallLittlewood(Rat),
    SchurP,
}

// ---------------------------------------------------------------------------
// greedy elimination core

/// Peel basis rows off a coefficient vector: repeatedly pick a pivot monomial
/// guaranteed to be the leading term of exactly one basis row, divide out,
/// subtract the whole row, and continue until nothing is left.
fn eliminate_rows<K, P, I, R>(
    mut w: BTreeMap<K, Rat>,
    pick: P,
    index_of: I,
    row_of: R,
) -> Result<BTreeMap<K, Rat>>
where
    K: Clone + Ord + Display,
    P: Fn(&BTreeMap<K, Rat>) -> Option<K>,
    I: Fn(&K) -> Result<K>,
    R: Fn(&K) -> Result<BTreeMap<K, Rat>>,
{
    let mut out: BTreeMap<K, Rat> = BTreeMap::new();
    let mut steps = 0usize;
    while let Some(pivot) = pick(&w) {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::ResourceBound(
                "greedy elimination exceeded 100000 pivot steps".into(),
            ));
        }
        let idx = index_of(&pivot)?;
        let row = row_of(&idx)?;
        let d = row.get(&pivot).cloned().unwrap_or_else(Rat::zero);
        if d.is_zero() {
            return Err(Error::EliminationStalled(format!(
                "basis element ({idx}) has no monomial at pivot ({pivot})"
            )));
        }
        let c = w.get(&pivot).cloned().unwrap_or_else(Rat::zero) / d;
        for (k, r) in &row {
            let slot = w.entry(k.clone()).or_insert_with(Rat::zero);
            *slot -= &c * r;
        }
        w.retain(|_, v| !v.is_zero());
        if w.contains_key(&pivot) {
            return Err(Error::EliminationStalled(format!(
                "pivot ({pivot}) survived its own elimination step"
            )));
        }
        out.insert(idx, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// symmetric extraction

/// Read off monomial-basis coefficients of a symmetric polynomial: one term
/// per weakly decreasing exponent.  Rejects asymmetric input with a witness.
pub fn monomial_sym_coeffs(p: &SparsePoly) -> Result<BTreeMap<Partition, Rat>> {
    if let Some((a, b)) = p.find_asymmetry() {
        return Err(Error::NotSymmetric(join_parts(&a), join_parts(&b)));
    }
    let mut out = BTreeMap::new();
    for (e, c) in p.terms() {
        let decreasing = e.windows(2).all(|w| w[0] >= w[1]);
        if decreasing {
            let parts: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
            out.insert(Partition::new(parts)?, c.clone());
        }
    }
    Ok(out)
}

fn max_degree(p: &SparsePoly) -> u64 {
    p.terms()
        .map(|(e, _)| e.iter().map(|&x| x as u64).sum::<u64>())
        .max()
        .unwrap_or(0)
}

fn check_faithful(p: &SparsePoly) -> Result<()> {
    let d = max_degree(p);
    if (p.nvars() as u64) < d {
        return Err(Error::ResourceBound(format!(
            "faithful extraction of a degree-{d} polynomial needs at least {d} variables, got {}",
            p.nvars()
        )));
    }
    Ok(())
}

fn classic_row(basis: ClassicBasis, idx: &Partition) -> BTreeMap<Partition, Rat> {
    let mut row = BTreeMap::new();
    for rho in partitions_of(idx.size() as u32) {
        let c = match basis {
            ClassicBasis::Monomial => {
                if rho == *idx {
                    Int::one()
                } else {
                    Int::zero()
                }
            }
            ClassicBasis::Schur => kostka(idx, &rho),
            ClassicBasis::Elementary => elementary_count(idx, &rho),
            ClassicBasis::Complete => complete_count(idx, &rho),
            ClassicBasis::PowerSum => power_count(idx, &rho),
        };
        if !c.is_zero() {
            row.insert(rho, Rat::from(c));
        }
    }
    row
}

fn hl_row(idx: &Partition, t: &Rat) -> BTreeMap<Partition, Rat> {
    partitions_of(idx.size() as u32)
        .into_iter()
        .filter_map(|rho| {
            let c = hl_kostka(idx, &rho, t);
            if c.is_zero() {
                None
            } else {
                Some((rho, c))
            }
        })
        .collect()
}

/// Complete homogeneous coefficients via the Gram matrix KᵀK: every monomial
/// appears in every h row, so there is no usable pivot and the system is
/// solved per degree with two inverse-Kostka passes instead.
fn complete_via_gram(w: BTreeMap<Partition, Rat>) -> Result<BTreeMap<Partition, Rat>> {
    let mut by_deg: BTreeMap<u64, BTreeMap<Partition, Rat>> = BTreeMap::new();
    for (lam, c) in w {
        by_deg.entry(lam.size()).or_default().insert(lam, c);
    }
    let mut out = BTreeMap::new();
    for (d, wd) in by_deg {
        let kinv = inverse_kostka_matrix(d as u32, InvertMode::Chains);
        let u = kinv.convert(&wd)?;
        let c = kinv.transpose().convert(&u)?;
        out.extend(c.into_iter().filter(|(_, v)| !v.is_zero()));
    }
    Ok(out)
}

/// Extract coefficients over a symmetric basis by greedy elimination against
/// honest expansions.  The polynomial must carry enough variables to be a
/// faithful image of its degree.
pub fn extract_symmetric(p: &SparsePoly, target: &SymTarget) -> Result<BTreeMap<Partition, Rat>> {
    check_faithful(p)?;
    let mut w = monomial_sym_coeffs(p)?;
    let mut out = BTreeMap::new();
    if let Some(c) = w.remove(&Partition::empty()) {
        out.insert(Partition::empty(), c);
    }
    let rest = match target {
        SymTarget::Classic(ClassicBasis::Monomial) => w,
        SymTarget::Classic(ClassicBasis::Complete) => complete_via_gram(w)?,
        SymTarget::Classic(b) => {
            let b = *b;
            let from_top = b == ClassicBasis::PowerSum;
            eliminate_rows(
                w,
                move |w| {
                    if from_top {
                        w.keys().next_back().cloned()
                    } else {
                        w.keys().next().cloned()
                    }
                },
                move |piv| {
                    Ok(if b == ClassicBasis::Elementary {
                        piv.conjugate()
                    } else {
                        piv.clone()
                    })
                },
                move |idx| Ok(classic_row(b, idx)),
            )?
        }
        SymTarget::HallLittlewood(t) => {
            if *t == rat_int(1) {
                return Err(Error::DegenerateParameter(
                    "t = 1 collapses the deformed basis".into(),
                ));
            }
            let t = t.clone();
            eliminate_rows(
                w,
                |w| w.keys().next().cloned(),
                |piv| Ok(piv.clone()),
                move |idx| Ok(hl_row(idx, &t)),
            )?
        }
        SymTarget::SchurP => eliminate_rows(
            w,
            |w| w.keys().next().cloned(),
            |piv| {
                if piv.is_strict() {
                    Ok(piv.clone())
                } else {
                    Err(Error::EliminationStalled(format!(
                        "leading monomial ({piv}) has a repeated part, outside the strict span"
                    )))
                }
            },
            |idx| Ok(hl_row(idx, &rat_int(-1))),
        )?,
    };
    out.extend(rest);
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

// ---------------------------------------------------------------------------
// quasisymmetric extraction

/// Read off quasisymmetric monomial coefficients: one term per packed
/// exponent (positive prefix, zero tail).  The candidate list is validated by
/// reassembling it, so non-quasisymmetric input is rejected with a witness.
pub fn monomial_qsym_coeffs(p: &SparsePoly) -> Result<BTreeMap<StrongComposition, Rat>> {
    check_faithful(p)?;
    let n = p.nvars();
    let mut w = BTreeMap::new();
    for (e, c) in p.terms() {
        let lead = e.iter().take_while(|&&x| x > 0).count();
        if e[lead..].iter().all(|&x| x == 0) {
            w.insert(StrongComposition::new(e[..lead].to_vec())?, c.clone());
        }
    }
    let mut rebuilt = SparsePoly::zero(n);
    for (beta, c) in &w {
        let q = if beta.is_empty() {
            SparsePoly::one(n)
        } else {
            monomial_qsym_poly(beta, n)?
        };
        rebuilt = rebuilt.try_add(&q.scale(c))?;
    }
    let diff = p.try_sub(&rebuilt)?;
    if let Some((e, _)) = diff.terms().next() {
        return Err(Error::EliminationStalled(format!(
            "input is not quasisymmetric in {n} variables: residual at x^({})",
            join_parts(e)
        )));
    }
    Ok(w)
}

/// Compare sorted-first leading terms: coarser sorted shape first, then
/// lexicographically smaller composition within a shape class.
fn quasi_schur_cmp(a: &StrongComposition, b: &StrongComposition) -> std::cmp::Ordering {
    a.sort()
        .cmp(&b.sort())
        .then_with(|| a.parts().cmp(b.parts()))
}

/// Extract coefficients over a quasisymmetric basis by greedy elimination
/// against its monomial rows.
pub fn extract_qsym(
    p: &SparsePoly,
    basis: QsymBasis,
) -> Result<BTreeMap<StrongComposition, Rat>> {
    let mut w = monomial_qsym_coeffs(p)?;
    if basis == QsymBasis::Monomial {
        return Ok(w);
    }
    let mut out = BTreeMap::new();
    if let Some(c) = w.remove(&StrongComposition::empty()) {
        out.insert(StrongComposition::empty(), c);
    }
    let rest = eliminate_rows(
        w,
        move |w| match basis {
            QsymBasis::Fundamental | QsymBasis::DualImmaculate => w.keys().next().cloned(),
            QsymBasis::QuasiSchur => w.keys().min_by(|a, b| quasi_schur_cmp(a, b)).cloned(),
            _ => w.keys().next_back().cloned(),
        },
        |piv| Ok(piv.clone()),
        move |idx| Ok(m_coeffs(basis, idx)),
    )?;
    out.extend(rest);
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

// ---------------------------------------------------------------------------
// full polynomial-ring extraction

/// Extract coefficients over a polynomial-ring basis by peeling the lowest
/// (degree, exponent) term: every basis element owns its own index monomial
/// there, and every move pushes weight strictly upward in that order.
pub fn extract_poly_basis(
    p: &SparsePoly,
    basis: PolyBasis,
) -> Result<BTreeMap<WeakComposition, Rat>> {
    let top = max_degree(p);
    let mut residual = p.clone();
    let mut out: BTreeMap<WeakComposition, Rat> = BTreeMap::new();
    let mut steps = 0usize;
    while !residual.is_zero() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::ResourceBound(
                "polynomial-basis extraction exceeded 100000 pivot steps".into(),
            ));
        }
        let (e, c) = residual
            .terms()
            .min_by(|(ea, _), (eb, _)| {
                let da: u64 = ea.iter().map(|&x| x as u64).sum();
                let db: u64 = eb.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| ea.cmp(eb))
            })
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero residual has terms");
        let deg: u64 = e.iter().map(|&x| x as u64).sum();
        if deg > top {
            return Err(Error::EliminationStalled(format!(
                "residual escaped above degree {top} at x^({}): not in the span",
                join_parts(&e)
            )));
        }
        let gamma = WeakComposition::new(e.clone());
        let expansion = expand_poly_cached(basis, &gamma)?;
        residual = residual.try_sub(&expansion.scale(&c))?;
        if !residual.coeff(&e).is_zero() {
            return Err(Error::EliminationStalled(format!(
                "pivot x^({}) survived its own elimination step",
                join_parts(&e)
            )));
        }
        out.insert(gamma, c);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// reassembly

/// Rebuild the polynomial a symmetric coefficient vector denotes.
pub fn reassemble_symmetric(
    target: &SymTarget,
    coeffs: &BTreeMap<Partition, Rat>,
    n: usize,
) -> Result<SparsePoly> {
    let mut acc = SparsePoly::zero(n);
    for (lam, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let piece = match target {
            SymTarget::Classic(b) => expand_classic(*b, lam, n)?,
            SymTarget::HallLittlewood(t) => hl_expand(lam, t, n)?,
            SymTarget::SchurP => schur_p_expand(lam, n)?,
        };
        acc = acc.try_add(&piece.scale(c))?;
    }
    Ok(acc)
}

/// Rebuild the polynomial a quasisymmetric coefficient vector denotes.
pub fn reassemble_qsym(
    basis: QsymBasis,
    coeffs: &BTreeMap<StrongComposition, Rat>,
    n: usize,
) -> Result<SparsePoly> {
    let mut acc = SparsePoly::zero(n);
    for (alpha, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let piece = if alpha.is_empty() {
            SparsePoly::one(n)
        } else {
            expand_qsym(basis, alpha, n)?
        };
        acc = acc.try_add(&piece.scale(c))?;
    }
    Ok(acc)
}

/// Rebuild the polynomial a polynomial-ring coefficient vector denotes, in a
/// fixed ambient variable count.
pub fn reassemble_poly(
    basis: PolyBasis,
    coeffs: &BTreeMap<WeakComposition, Rat>,
    n: usize,
) -> Result<SparsePoly> {
    let mut acc = SparsePoly::zero(n);
    for (gamma, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let piece = expand_poly_cached(basis, &gamma.padded(n)?)?;
        acc = acc.try_add(&piece.scale(c))?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// verification reports

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<CaseOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn counts(&self) -> (usize, usize) {
        let ok = self.cases.iter().filter(|c| c.pass).count();
        (ok, self.cases.len())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "cases": self.cases.iter().map(|c| serde_json::json!({
                "id": c.id,
                "status": if c.pass { "pass" } else { "fail" },
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            if c.pass {
                out.push_str(&format!("pass  {}\n", c.id));
            } else {
                out.push_str(&format!("FAIL  {}: {}\n", c.id, c.detail));
            }
        }
        let (ok, total) = self.counts();
        out.push_str(&format!("suite {}: {ok}/{total} cases passed\n", self.suite));
        out
    }
}

type CaseResult = std::result::Result<String, String>;
type CaseFn = Box<dyn Fn() -> CaseResult + Send + Sync>;

fn case<F>(id: impl Into<String>, f: F) -> (String, CaseFn)
where
    F: Fn() -> CaseResult + Send + Sync + 'static,
{
    (id.into(), Box::new(f))
}

fn run_cases(suite: &str, cases: Vec<(String, CaseFn)>) -> Report {
    let cases: Vec<CaseOutcome> = cases
        .into_par_iter()
        .map(|(id, f)| match catch_unwind(AssertUnwindSafe(&f)) {
            Ok(Ok(detail)) => CaseOutcome {
                id,
                pass: true,
                detail,
            },
            Ok(Err(detail)) => CaseOutcome {
                id,
                pass: false,
                detail,
            },
            Err(_) => CaseOutcome {
                id,
                pass: false,
                detail: "case panicked".into(),
            },
        })
        .collect();
    Report {
        suite: suite.to_string(),
        cases,
    }
}

pub fn suite_names() -> &'static [&'static str] {
    &[
        "golden",
        "mobius",
        "unitriangular",
        "pipeline-vs-oracle",
        "plethysm",
        "bridge",
    ]
}

/// Run a named verification suite.
pub fn verify_suite(name: &str) -> Result<Report> {
    let cases = match name {
        "golden" => golden_cases(),
        "mobius" => mobius_cases(),
        "unitriangular" => unitriangular_cases(),
        "pipeline-vs-oracle" => pipeline_cases(),
        "plethysm" => plethysm_cases(),
        "bridge" => bridge_cases(),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(run_cases(name, cases))
}

// ---------------------------------------------------------------------------
// suite helpers

fn err_s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn prune<K: Ord + Clone>(m: &BTreeMap<K, Rat>) -> BTreeMap<K, Rat> {
    m.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect()
}

fn maps_match<K: Ord + Clone + Display>(
    got: &BTreeMap<K, Rat>,
    want: &BTreeMap<K, Rat>,
    label: &str,
) -> std::result::Result<(), String> {
    let g = prune(got);
    let w = prune(want);
    if g == w {
        return Ok(());
    }
    for (k, v) in &w {
        match g.get(k) {
            None => return Err(format!("{label}: missing ({k}) = {v}")),
            Some(u) if u != v => return Err(format!("{label}: at ({k}) got {u}, want {v}")),
            _ => {}
        }
    }
    for (k, v) in &g {
        if !w.contains_key(k) {
            return Err(format!("{label}: unexpected ({k}) = {v}"));
        }
    }
    Err(format!("{label}: coefficient maps differ"))
}

fn nonneg_integers<K: Ord + Display>(
    m: &BTreeMap<K, Rat>,
    label: &str,
) -> std::result::Result<(), String> {
    for (k, v) in m {
        if !v.is_integer() || v < &Rat::zero() {
            return Err(format!(
                "{label}: coefficient at ({k}) is {v}, want a nonnegative integer"
            ));
        }
    }
    Ok(())
}

fn sc(s: &str) -> StrongComposition {
    StrongComposition::new(crate::composition::parse_parts(s).expect("parts")).expect("positive")
}

fn pt(s: &str) -> Partition {
    Partition::new(crate::composition::parse_parts(s).expect("parts")).expect("sorted")
}

fn wc(s: &str) -> WeakComposition {
    WeakComposition::new(crate::composition::parse_parts(s).expect("parts"))
}

fn int_map(pairs: &[(&str, i64)]) -> BTreeMap<StrongComposition, Rat> {
    pairs.iter().map(|(k, v)| (sc(k), rat_int(*v))).collect()
}

fn rat_map(pairs: &[(&str, i64, i64)]) -> BTreeMap<StrongComposition, Rat> {
    pairs.iter().map(|(k, n, d)| (sc(k), rat(*n, *d))).collect()
}

fn xp(n: usize, terms: &[(&[u32], i64)]) -> SparsePoly {
    SparsePoly::from_terms(
        n,
        terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
    )
    .expect("well-formed terms")
}

// ---------------------------------------------------------------------------
// golden suite

fn golden_cases() -> Vec<(String, CaseFn)> {
    let mut cases = Vec::new();

    cases.push(case("fundamental-monomial-row-2,2", || {
        let got = m_coeffs(QsymBasis::Fundamental, &sc("2,2"));
        let want = int_map(&[("2,2", 1), ("2,1,1", 1), ("1,1,2", 1), ("1,1,1,1", 1)]);
        maps_match(&got, &want, "F(2,2) over M")?;
        Ok(String::new())
    }));

    cases.push(case("dual-immaculate-monomial-row-2,2", || {
        let got = m_coeffs(QsymBasis::DualImmaculate, &sc("2,2"));
        let want = int_map(&[
            ("1,1,1,1", 3),
            ("1,1,2", 2),
            ("1,2,1", 2),
            ("1,3", 1),
            ("2,1,1", 1),
            ("2,2", 1),
        ]);
        maps_match(&got, &want, "dual immaculate (2,2) over M")?;
        Ok(String::new())
    }));

    cases.push(case("dual-immaculate-count-2,2-vs-1,2,1", || {
        let got = dual_immaculate_count(&sc("2,2"), &sc("1,2,1"));
        if got != Int::from(2) {
            return Err(format!("count = {got}, want 2"));
        }
        Ok(String::new())
    }));

    cases.push(case("quasi-schur-monomial-row-2,2", || {
        let got = m_coeffs(QsymBasis::QuasiSchur, &sc("2,2"));
        let want = int_map(&[
            ("1,1,1,1", 2),
            ("1,1,2", 1),
            ("1,2,1", 1),
            ("2,1,1", 1),
            ("2,2", 1),
        ]);
        maps_match(&got, &want, "quasi-Schur (2,2) over M")?;
        Ok(String::new())
    }));

    cases.push(case("quasi-schur-count-2,2-vs-1,2,1", || {
        let got = quasi_schur_count(&sc("2,2"), &sc("1,2,1"));
        if got != Int::one() {
            return Err(format!("count = {got}, want 1"));
        }
        Ok(String::new())
    }));

    cases.push(case("power-comb-monomial-row-1,1,2", || {
        let got = m_coeffs(QsymBasis::PowerComb, &sc("1,1,2"));
        let want = int_map(&[("1,1,2", 2), ("2,2", 1)]);
        maps_match(&got, &want, "power comb (1,1,2) over M")?;
        Ok(String::new())
    }));

    cases.push(case("power-comb-count-1,1,2-diagonal", || {
        let got = crate::qsym::power_comb_count(&sc("1,1,2"), &sc("1,1,2"));
        if got != Int::from(2) {
            return Err(format!("count = {got}, want 2"));
        }
        Ok(String::new())
    }));

    cases.push(case("psi-monomial-row-1,1,2", || {
        let got = m_coeffs(QsymBasis::PsiPower, &sc("1,1,2"));
        let want = rat_map(&[("1,1,2", 2, 1), ("2,2", 1, 1), ("1,3", 4, 3), ("4", 1, 2)]);
        maps_match(&got, &want, "psi (1,1,2) over M")?;
        Ok(String::new())
    }));

    cases.push(case("phi-monomial-row-1,1,2", || {
        let got = m_coeffs(QsymBasis::PhiPower, &sc("1,1,2"));
        let want = rat_map(&[("1,1,2", 2, 1), ("2,2", 1, 1), ("1,3", 1, 1), ("4", 1, 3)]);
        maps_match(&got, &want, "phi (1,1,2) over M")?;
        Ok(String::new())
    }));

    cases.push(case("atom-0,2,1", || {
        let got = expand_poly(PolyBasis::Atom, &wc("0,2,1")).map_err(|e| e.to_string())?;
        let want = xp(3, &[(&[1, 1, 1], 1), (&[0, 2, 1], 1)]);
        if got != want {
            return Err("atom (0,2,1) expansion differs".into());
        }
        Ok(String::new())
    }));

    cases.push(case("key-0,2,1", || {
        let got = expand_poly(PolyBasis::Key, &wc("0,2,1")).map_err(|e| e.to_string())?;
        let want = xp(
            3,
            &[
                (&[2, 1, 0], 1),
                (&[1, 2, 0], 1),
                (&[2, 0, 1], 1),
                (&[1, 1, 1], 1),
                (&[0, 2, 1], 1),
            ],
        );
        if got != want {
            return Err("key (0,2,1) expansion differs".into());
        }
        Ok(String::new())
    }));

    cases.push(case("lascoux-0,2,1", || {
        let got = expand_poly(PolyBasis::Lascoux, &wc("0,2,1")).map_err(|e| e.to_string())?;
        let want = xp(
            3,
            &[
                (&[2, 1, 0], 1),
                (&[1, 2, 0], 1),
                (&[2, 0, 1], 1),
                (&[1, 1, 1], 1),
                (&[0, 2, 1], 1),
                (&[2, 2, 0], -1),
                (&[2, 1, 1], -2),
                (&[1, 2, 1], -2),
                (&[2, 2, 1], 1),
            ],
        );
        if got != want {
            return Err("Lascoux (0,2,1) expansion differs".into());
        }
        Ok(String::new())
    }));

    cases.push(case("lehmer-code-2143", || {
        let w = Permutation::new(vec![2, 1, 4, 3]).map_err(|e| e.to_string())?;
        let code = w.lehmer_code();
        if code != vec![1, 0, 1, 0] {
            return Err(format!("code = {code:?}, want [1, 0, 1, 0]"));
        }
        if Permutation::from_code(&code) != w {
            return Err("code does not round-trip".into());
        }
        Ok(String::new())
    }));

    cases.push(case("schubert-1,0,1,0", || {
        let got = expand_poly(PolyBasis::Schubert, &wc("1,0,1,0")).map_err(|e| e.to_string())?;
        let want = xp(
            4,
            &[(&[2, 0, 0, 0], 1), (&[1, 1, 0, 0], 1), (&[1, 0, 1, 0], 1)],
        );
        if got != want {
            return Err("Schubert (1,0,1,0) expansion differs".into());
        }
        Ok(String::new())
    }));

    cases.push(case("grothendieck-1,0,1,0", || {
        let got =
            expand_poly(PolyBasis::Grothendieck, &wc("1,0,1,0")).map_err(|e| e.to_string())?;
        let want = xp(
            4,
            &[
                (&[2, 0, 0, 0], 1),
                (&[1, 1, 0, 0], 1),
                (&[1, 0, 1, 0], 1),
                (&[2, 1, 0, 0], -1),
                (&[2, 0, 1, 0], -1),
                (&[1, 1, 1, 0], -1),
                (&[2, 1, 1, 0], 1),
            ],
        );
        if got != want {
            return Err("Grothendieck (1,0,1,0) expansion differs".into());
        }
        Ok(String::new())
    }));

    cases.push(case("monomial-product-2,1-times-1", || {
        let got: BTreeMap<Partition, Rat> = crate::symfn::monomial_structure(&pt("2,1"), &pt("1"))
            .into_iter()
            .map(|(k, v)| (k, Rat::from(v)))
            .collect();
        let want: BTreeMap<Partition, Rat> = [
            (pt("3,1"), rat_int(1)),
            (pt("2,2"), rat_int(2)),
            (pt("2,1,1"), rat_int(2)),
        ]
        .into_iter()
        .collect();
        maps_match(&got, &want, "m(2,1) * m(1)")?;
        Ok(String::new())
    }));

    cases
}

// ---------------------------------------------------------------------------
// mobius suite

fn mobius_delta_check<E>(poset: &Arc<Poset<E>>) -> CaseResult
where
    E: Clone + Ord + Display,
{
    let n = poset.len();
    let mut pairs = 0usize;
    for x in 0..n {
        for y in 0..n {
            if !poset.leq_idx(x, y) {
                continue;
            }
            let mut total = Int::zero();
            for z in poset.interval_idx(x, y) {
                total += poset.mobius_chains_idx(z, y).map_err(|e| e.to_string())?;
            }
            let want = if x == y { Int::one() } else { Int::zero() };
            if total != want {
                return Err(format!(
                    "sum of mu over [{}, {}] = {total}, want {want}",
                    poset.element(x),
                    poset.element(y)
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} intervals"))
}

fn mu_range_check<E>(poset: &Arc<Poset<E>>) -> CaseResult
where
    E: Clone + Ord + Display,
{
    let n = poset.len();
    let mut pairs = 0usize;
    for x in 0..n {
        for y in 0..n {
            if !poset.leq_idx(x, y) {
                continue;
            }
            let mu = poset.mobius_chains_idx(x, y).map_err(|e| e.to_string())?;
            if mu < Int::from(-1) || mu > Int::one() {
                return Err(format!(
                    "mu({}, {}) = {mu}, outside [-1, 1]",
                    poset.element(x),
                    poset.element(y)
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn matrix_entries<E: Clone + Ord + Display>(
    m: &TransitionMatrix<E>,
) -> BTreeMap<(usize, usize), Rat> {
    m.entries().map(|(k, v)| (*k, v.clone())).collect()
}

fn modes_agree_check<E>(mat: &TransitionMatrix<E>) -> CaseResult
where
    E: Clone + Ord + Display,
{
    let a = mat.invert(InvertMode::Chains).map_err(|e| e.to_string())?;
    let b = mat.invert(InvertMode::BackSub).map_err(|e| e.to_string())?;
    if matrix_entries(&a) != matrix_entries(&b) {
        return Err("chain-count and back-substitution inverses differ".into());
    }
    let prod = mat.mul(&a).map_err(|e| e.to_string())?;
    if !prod.is_identity() {
        return Err("matrix times chain-count inverse is not the identity".into());
    }
    Ok(format!("{} inverse entries", a.num_entries()))
}

fn mobius_cases() -> Vec<(String, CaseFn)> {
    let mut cases = Vec::new();
    for m in 1..=7u32 {
        cases.push(case(format!("delta-partitions-{m}"), move || {
            mobius_delta_check(&partitions_poset(m))
        }));
    }
    for k in 1..=6u32 {
        cases.push(case(format!("delta-compositions-{k}"), move || {
            mobius_delta_check(&strong_poset(k as usize, k))
        }));
    }
    for k in 0..=4u32 {
        cases.push(case(format!("delta-weak-3-{k}"), move || {
            mobius_delta_check(&weak_poset(3, k))
        }));
    }
    for m in 1..=8u32 {
        cases.push(case(format!("mu-range-partitions-{m}"), move || {
            mu_range_check(&partitions_poset(m))
        }));
    }
    for m in 1..=6u32 {
        cases.push(case(format!("modes-agree-kostka-{m}"), move || {
            modes_agree_check(&kostka_matrix(m))
        }));
    }
    for m in 1..=6u32 {
        cases.push(case(format!("modes-agree-elementary-{m}"), move || {
            modes_agree_check(&err_s(classic_matrix(ClassicBasis::Elementary, m))?)
        }));
    }
    for m in 1..=6u32 {
        cases.push(case(format!("modes-agree-power-{m}"), move || {
            modes_agree_check(&err_s(classic_matrix(ClassicBasis::PowerSum, m))?)
        }));
    }
    for m in 1..=6u32 {
        cases.push(case(format!("modes-agree-deformed-half-{m}"), move || {
            modes_agree_check(&err_s(hl_matrix(m, &rat(1, 2)))?)
        }));
    }
    for basis in [
        QsymBasis::Fundamental,
        QsymBasis::DualImmaculate,
        QsymBasis::QuasiSchur,
        QsymBasis::PowerComb,
        QsymBasis::PsiPower,
        QsymBasis::PhiPower,
        QsymBasis::Monomial,
    ] {
        for k in 1..=6u32 {
            cases.push(case(
                format!("modes-agree-qsym-{}-{k}", basis.name()),
                move || modes_agree_check(&err_s(qsym_matrix(basis, k))?),
            ));
        }
    }
    for basis in PolyBasis::ALL {
        for k in 1..=4u32 {
            cases.push(case(
                format!("modes-agree-poly-{}-3-{k}", basis.name()),
                move || modes_agree_check(&err_s(poly_matrix(basis, 3, k))?),
            ));
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// unitriangular suite

fn qsym_expected_diagonal(basis: QsymBasis, alpha: &StrongComposition) -> Rat {
    match basis {
        QsymBasis::Monomial
        | QsymBasis::Fundamental
        | QsymBasis::DualImmaculate
        | QsymBasis::QuasiSchur => Rat::one(),
        QsymBasis::PowerComb => {
            let sorted = alpha.sort();
            let mut acc = Int::one();
            let mut seen = BTreeSet::new();
            for &v in sorted.parts() {
                if seen.insert(v) {
                    acc *= factorial(sorted.multiplicity(v));
                }
            }
            Rat::from(acc)
        }
        QsymBasis::PsiPower | QsymBasis::PhiPower => {
            let mut denom = Int::one();
            for &v in alpha.parts() {
                denom *= Int::from(v);
            }
            Rat::new(z_of(alpha.parts()), denom)
        }
    }
}

fn unitriangular_cases() -> Vec<(String, CaseFn)> {
    let mut cases = Vec::new();
    for m in 1..=7u32 {
        cases.push(case(format!("kostka-{m}"), move || {
            let mat = kostka_matrix(m);
            if !mat.is_unitriangular() {
                return Err("Kostka matrix is not unitriangular".into());
            }
            Ok(format!("{} entries", mat.num_entries()))
        }));
    }
    for basis in [
        QsymBasis::Monomial,
        QsymBasis::Fundamental,
        QsymBasis::DualImmaculate,
        QsymBasis::QuasiSchur,
        QsymBasis::PowerComb,
        QsymBasis::PsiPower,
        QsymBasis::PhiPower,
    ] {
        for k in 1..=6u32 {
            cases.push(case(format!("qsym-{}-{k}", basis.name()), move || {
                let mat = err_s(qsym_matrix(basis, k))?;
                for alpha in mat.poset().elements() {
                    let got = mat.get(alpha, alpha).map_err(|e| e.to_string())?;
                    let want = qsym_expected_diagonal(basis, alpha);
                    if got != want {
                        return Err(format!("diagonal at ({alpha}) = {got}, want {want}"));
                    }
                }
                Ok(format!("{} diagonals", mat.poset().len()))
            }));
        }
    }
    for basis in PolyBasis::ALL {
        for n in [3usize, 4] {
            for k in 1..=4u32 {
                cases.push(case(
                    format!("poly-{}-{n}-{k}", basis.name()),
                    move || {
                        let mat = err_s(poly_matrix(basis, n, k))?;
                        if !mat.is_unitriangular() {
                            return Err("graded transition matrix is not unitriangular".into());
                        }
                        Ok(format!("{} entries", mat.num_entries()))
                    },
                ));
            }
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// pipeline-vs-oracle suite

fn classic_pivot_check(m: u32) -> CaseResult {
    let mut checked = 0usize;
    for lam in partitions_of(m) {
        let s_min = classic_row(ClassicBasis::Schur, &lam)
            .keys()
            .next()
            .cloned()
            .expect("nonempty row");
        if s_min != lam {
            return Err(format!("Schur row ({lam}) leads at ({s_min})"));
        }
        let e_row = classic_row(ClassicBasis::Elementary, &lam);
        let e_min = e_row.keys().next().cloned().expect("nonempty row");
        if e_min != lam.conjugate() {
            return Err(format!(
                "elementary row ({lam}) leads at ({e_min}), want the conjugate"
            ));
        }
        let p_max = classic_row(ClassicBasis::PowerSum, &lam)
            .keys()
            .next_back()
            .cloned()
            .expect("nonempty row");
        if p_max != lam {
            return Err(format!("power-sum row ({lam}) tops out at ({p_max})"));
        }
        checked += 1;
    }
    Ok(format!("{checked} indices"))
}

fn qsym_pivot_check(basis: QsymBasis, k: u32) -> CaseResult {
    let mut seen = BTreeSet::new();
    for alpha in strong_compositions_of(k) {
        let row = m_coeffs(basis, &alpha);
        let pivot = match basis {
            QsymBasis::Monomial | QsymBasis::Fundamental | QsymBasis::DualImmaculate => {
                row.keys().next().cloned()
            }
            QsymBasis::QuasiSchur => row.keys().min_by(|a, b| quasi_schur_cmp(a, b)).cloned(),
            _ => row.keys().next_back().cloned(),
        }
        .expect("nonempty row");
        if pivot != alpha {
            return Err(format!("row ({alpha}) leads at ({pivot})"));
        }
        if !seen.insert(pivot) {
            return Err(format!("pivot of ({alpha}) repeats"));
        }
    }
    Ok(format!("{} indices", seen.len()))
}

fn poly_pivot_check(basis: PolyBasis, n: usize, k: u32) -> CaseResult {
    let mut seen = BTreeSet::new();
    for gamma in weak_compositions(n, k) {
        let p = err_s(expand_poly_cached(basis, &gamma))?;
        let (e, _) = p
            .terms()
            .min_by(|(ea, _), (eb, _)| {
                let da: u64 = ea.iter().map(|&x| x as u64).sum();
                let db: u64 = eb.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| ea.cmp(eb))
            })
            .expect("nonempty expansion");
        if e.as_slice() != gamma.parts() {
            return Err(format!(
                "expansion of ({gamma}) leads at x^({})",
                join_parts(e)
            ));
        }
        if !seen.insert(e.clone()) {
            return Err(format!("pivot of ({gamma}) repeats"));
        }
    }
    Ok(format!("{} indices", seen.len()))
}

fn schur_product_block(i: u32, j: u32) -> CaseResult {
    let n = 8;
    let mut count = 0usize;
    for lam in partitions_of(i) {
        for mu in partitions_of(j) {
            let pipeline = err_s(littlewood_richardson(&lam, &mu, InvertMode::Chains))?;
            let prod = err_s(schur_poly(&lam, n))?.try_mul(&err_s(schur_poly(&mu, n))?);
            let prod = err_s(prod)?;
            let oracle = err_s(extract_symmetric(
                &prod,
                &SymTarget::Classic(ClassicBasis::Schur),
            ))?;
            maps_match(&pipeline, &oracle, &format!("s({lam}) * s({mu})"))?;
            nonneg_integers(&pipeline, &format!("s({lam}) * s({mu})"))?;
            count += 1;
        }
    }
    Ok(format!("{count} products"))
}

fn qsym_product_block(basis: QsymBasis, i: u32, j: u32) -> CaseResult {
    let n = 8;
    let mut count = 0usize;
    for a in strong_compositions_of(i) {
        for b in strong_compositions_of(j) {
            let pipeline = err_s(qsym_structure(basis, &a, &b, InvertMode::Chains))?;
            let pa = err_s(expand_qsym(basis, &a, n))?;
            let pb = err_s(expand_qsym(basis, &b, n))?;
            let prod = err_s(pa.try_mul(&pb))?;
            let oracle = err_s(extract_qsym(&prod, basis))?;
            let label = format!("{}({a}) * {}({b})", basis.name(), basis.name());
            maps_match(&pipeline, &oracle, &label)?;
            if basis == QsymBasis::Fundamental {
                nonneg_integers(&pipeline, &label)?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} products"))
}

fn poly_product_block(basis: PolyBasis, i: u32, j: u32) -> CaseResult {
    let n = 4;
    let mut count = 0usize;
    for a in weak_compositions(n, i) {
        for b in weak_compositions(n, j) {
            let pipeline = err_s(poly_structure(basis, &a, &b, InvertMode::Chains))?;
            let pa = err_s(expand_poly_cached(basis, &a))?;
            let pb = err_s(expand_poly_cached(basis, &b))?;
            let prod = err_s(pa.try_mul(&pb))?;
            let oracle = err_s(extract_poly_basis(&prod, basis))?;
            let label = format!("{}({a}) * {}({b})", basis.name(), basis.name());
            maps_match(&pipeline, &oracle, &label)?;
            if matches!(
                basis,
                PolyBasis::Schubert | PolyBasis::MonomialSlide | PolyBasis::FundamentalSlide
            ) {
                nonneg_integers(&pipeline, &label)?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} products"))
}

fn deformed_product_block(t: Rat, i: u32, j: u32) -> CaseResult {
    let n = 6;
    let mut count = 0usize;
    for lam in partitions_of(i) {
        for mu in partitions_of(j) {
            let pipeline = err_s(hl_structure(&lam, &mu, &t, InvertMode::Chains))?;
            let pa = err_s(hl_expand(&lam, &t, n))?;
            let pb = err_s(hl_expand(&mu, &t, n))?;
            let prod = err_s(pa.try_mul(&pb))?;
            let oracle = err_s(extract_symmetric(&prod, &SymTarget::HallLittlewood(t.clone())))?;
            maps_match(&pipeline, &oracle, &format!("b({lam}) * b({mu}) at t={t}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} products"))
}

fn pipeline_cases() -> Vec<(String, CaseFn)> {
    let mut cases = Vec::new();
    for m in 1..=4u32 {
        cases.push(case(format!("pivot-injectivity-classic-{m}"), move || {
            classic_pivot_check(m)
        }));
    }
    for basis in [
        QsymBasis::Monomial,
        QsymBasis::Fundamental,
        QsymBasis::DualImmaculate,
        QsymBasis::QuasiSchur,
        QsymBasis::PowerComb,
        QsymBasis::PsiPower,
        QsymBasis::PhiPower,
    ] {
        for k in 1..=5u32 {
            cases.push(case(
                format!("pivot-injectivity-qsym-{}-{k}", basis.name()),
                move || qsym_pivot_check(basis, k),
            ));
        }
    }
    for basis in PolyBasis::ALL {
        for k in 1..=4u32 {
            cases.push(case(
                format!("pivot-injectivity-poly-{}-{k}", basis.name()),
                move || poly_pivot_check(basis, 4, k),
            ));
        }
    }
    for i in 1..=4u32 {
        for j in 1..=4u32 {
            cases.push(case(format!("schur-products-{i}x{j}"), move || {
                schur_product_block(i, j)
            }));
        }
    }
    for basis in [
        QsymBasis::Monomial,
        QsymBasis::Fundamental,
        QsymBasis::DualImmaculate,
        QsymBasis::QuasiSchur,
        QsymBasis::PowerComb,
        QsymBasis::PsiPower,
        QsymBasis::PhiPower,
    ] {
        for i in 1..=5u32 {
            for j in 1..=(6 - i) {
                cases.push(case(
                    format!("qsym-products-{}-{i}x{j}", basis.name()),
                    move || qsym_product_block(basis, i, j),
                ));
            }
        }
    }
    for basis in PolyBasis::ALL {
        for i in 1..=3u32 {
            for j in 1..=(4 - i) {
                cases.push(case(
                    format!("poly-products-{}-{i}x{j}", basis.name()),
                    move || poly_product_block(basis, i, j),
                ));
            }
        }
    }
    for (label, t) in [("zero", rat_int(0)), ("half", rat(1, 2))] {
        for i in 1..=3u32 {
            for j in 1..=3u32 {
                let t = t.clone();
                cases.push(case(
                    format!("deformed-products-{label}-{i}x{j}"),
                    move || deformed_product_block(t.clone(), i, j),
                ));
            }
        }
    }
    cases
}

// ---------------------------------------------------------------------------
// plethysm suite

fn plethysm_cases() -> Vec<(String, CaseFn)> {
    const BASES: [ClassicBasis; 5] = [
        ClassicBasis::Monomial,
        ClassicBasis::PowerSum,
        ClassicBasis::Elementary,
        ClassicBasis::Complete,
        ClassicBasis::Schur,
    ];
    let mut cases = Vec::new();

    for basis in BASES {
        cases.push(case(
            format!("identity-fixes-{}", basis.name()),
            move || {
                let mut count = 0usize;
                for m in 1..=3u32 {
                    for lam in partitions_of(m) {
                        let inner = err_s(crate::plethysm::plethysm_poly(
                            basis,
                            &lam,
                            ClassicBasis::PowerSum,
                            &pt("1"),
                            4,
                        ))?;
                        let outer = err_s(crate::plethysm::plethysm_poly(
                            ClassicBasis::PowerSum,
                            &pt("1"),
                            basis,
                            &lam,
                            4,
                        ))?;
                        let plain = err_s(expand_classic(basis, &lam, 4))?;
                        if inner != plain {
                            return Err(format!("{}({lam}) composed with p(1) differs", basis.name()));
                        }
                        if outer != plain {
                            return Err(format!("p(1) composed with {}({lam}) differs", basis.name()));
                        }
                        count += 1;
                    }
                }
                Ok(format!("{count} shapes"))
            },
        ));
    }

    cases.push(case("power-inside-power", || {
        let got = err_s(crate::plethysm::plethysm_poly(
            ClassicBasis::PowerSum,
            &pt("2"),
            ClassicBasis::PowerSum,
            &pt("2"),
            4,
        ))?;
        let want = crate::symfn::power_sum_poly(4, 4);
        if got != want {
            return Err("p(2) inside p(2) is not p(4)".into());
        }
        Ok(String::new())
    }));

    cases.push(case("elementary-of-power", || {
        let got = err_s(crate::plethysm::plethysm_poly(
            ClassicBasis::Elementary,
            &pt("2"),
            ClassicBasis::PowerSum,
            &pt("2"),
            4,
        ))?;
        let want = err_s(crate::symfn::monomial_poly(&pt("2,2"), 4))?;
        if got != want {
            return Err("e(2) of p(2) is not m(2,2)".into());
        }
        Ok(String::new())
    }));

    for f in BASES {
        for g in BASES {
            cases.push(case(
                format!("oracle-grid-{}-{}", f.name(), g.name()),
                move || {
                    let shapes = [pt("1"), pt("2"), pt("1,1")];
                    let mut count = 0usize;
                    for lam in &shapes {
                        for mu in &shapes {
                            let main =
                                err_s(crate::plethysm::plethysm_poly(f, lam, g, mu, 4))?;
                            let direct =
                                err_s(crate::plethysm::plethysm_direct_oracle(f, lam, g, mu, 4))?;
                            if main != direct {
                                return Err(format!(
                                    "{}({lam}) of {}({mu}): direct substitution disagrees",
                                    f.name(),
                                    g.name()
                                ));
                            }
                            if f != ClassicBasis::Monomial {
                                let power = err_s(crate::plethysm::plethysm_power_oracle(
                                    f, lam, g, mu, 4,
                                ))?;
                                if main != power {
                                    return Err(format!(
                                        "{}({lam}) of {}({mu}): power route disagrees",
                                        f.name(),
                                        g.name()
                                    ));
                                }
                            }
                            count += 1;
                        }
                    }
                    Ok(format!("{count} pairs"))
                },
            ));
        }
    }

    for f in [ClassicBasis::Schur, ClassicBasis::Complete] {
        for g in [ClassicBasis::Schur, ClassicBasis::Complete] {
            for i in 1..=3u32 {
                for j in 1..=3u32 {
                    cases.push(case(
                        format!("power-route-{}-{}-{i}x{j}", f.name(), g.name()),
                        move || {
                            let n = ((i * j) as usize).max(1);
                            let mut count = 0usize;
                            for lam in partitions_of(i) {
                                for mu in partitions_of(j) {
                                    let main = err_s(crate::plethysm::plethysm_poly(
                                        f, &lam, g, &mu, n,
                                    ))?;
                                    let power = err_s(crate::plethysm::plethysm_power_oracle(
                                        f, &lam, g, &mu, n,
                                    ))?;
                                    if main != power {
                                        return Err(format!(
                                            "{}({lam}) of {}({mu}) at n={n}: power route disagrees",
                                            f.name(),
                                            g.name()
                                        ));
                                    }
                                    count += 1;
                                }
                            }
                            Ok(format!("{count} pairs"))
                        },
                    ));
                }
            }
        }
    }

    cases
}

// ---------------------------------------------------------------------------
// bridge suite

fn bridge_roundtrip_block(basis: ClassicBasis, via_fundamental: bool) -> CaseResult {
    let n = 5;
    let mut count = 0usize;
    for m in 1..=5u32 {
        for lam in partitions_of(m) {
            let poly = err_s(expand_classic(basis, &lam, n))?;
            let schur = if via_fundamental {
                let w = err_s(extract_qsym(&poly, QsymBasis::Fundamental))?;
                err_s(crate::bridge::schur_from_qsym(
                    QsymBasis::Fundamental,
                    &w,
                    InvertMode::Chains,
                ))?
            } else {
                let w = err_s(monomial_qsym_coeffs(&poly))?;
                err_s(crate::bridge::schur_from_qsym(
                    QsymBasis::Monomial,
                    &w,
                    InvertMode::Chains,
                ))?
            };
            let sch_parts: BTreeMap<Partition, Rat> = schur;
            let rebuilt = err_s(reassemble_symmetric(
                &SymTarget::Classic(ClassicBasis::Schur),
                &sch_parts,
                n,
            ))?;
            if rebuilt != poly {
                return Err(format!(
                    "{}({lam}) does not survive the round trip",
                    basis.name()
                ));
            }
            if basis == ClassicBasis::Schur {
                let want: BTreeMap<Partition, Rat> =
                    [(lam.clone(), rat_int(1))].into_iter().collect();
                maps_match(&sch_parts, &want, &format!("s({lam}) recognition"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

fn bridge_cases() -> Vec<(String, CaseFn)> {
    let mut cases = Vec::new();
    for basis in [
        ClassicBasis::Monomial,
        ClassicBasis::PowerSum,
        ClassicBasis::Elementary,
        ClassicBasis::Complete,
        ClassicBasis::Schur,
    ] {
        cases.push(case(
            format!("roundtrip-monomial-route-{}", basis.name()),
            move || bridge_roundtrip_block(basis, false),
        ));
        cases.push(case(
            format!("roundtrip-fundamental-route-{}", basis.name()),
            move || bridge_roundtrip_block(basis, true),
        ));
    }

    cases.push(case("recognize-elementary-example", || {
        let coeffs = int_map(&[("1,1", 1)]);
        let got = err_s(crate::bridge::schur_from_qsym(
            QsymBasis::Monomial,
            &coeffs,
            InvertMode::Chains,
        ))?;
        let want: BTreeMap<Partition, Rat> = [(pt("1,1"), rat_int(1))].into_iter().collect();
        maps_match(&got, &want, "M(1,1) as Schur")?;
        Ok(String::new())
    }));

    cases.push(case("recognize-power-example", || {
        let coeffs = int_map(&[("2", 1)]);
        let got = err_s(crate::bridge::schur_from_qsym(
            QsymBasis::Monomial,
            &coeffs,
            InvertMode::Chains,
        ))?;
        let want: BTreeMap<Partition, Rat> =
            [(pt("2"), rat_int(1)), (pt("1,1"), rat_int(-1))]
                .into_iter()
                .collect();
        maps_match(&got, &want, "M(2) as Schur")?;
        Ok(String::new())
    }));

    cases.push(case("reject-lone-monomial", || {
        let coeffs = int_map(&[("1,2", 1)]);
        match crate::bridge::schur_from_qsym(QsymBasis::Monomial, &coeffs, InvertMode::Chains) {
            Err(Error::NotSymmetric(a, b)) => {
                let pair = [a.as_str(), b.as_str()];
                if pair.contains(&"1,2") && pair.contains(&"2,1") {
                    Ok(format!("witness pair ({a}) vs ({b})"))
                } else {
                    Err(format!("witness pair ({a}) vs ({b}) does not name 1,2 and 2,1"))
                }
            }
            Err(e) => Err(format!("wrong error: {e}")),
            Ok(_) => Err("asymmetric input was accepted".into()),
        }
    }));

    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_map(pairs: &[(&str, Rat)]) -> BTreeMap<Partition, Rat> {
        pairs.iter().map(|(k, v)| (pt(k), v.clone())).collect()
    }

    #[test]
    fn monomial_in_schur_matches_inverse_kostka() {
        let p = crate::symfn::monomial_poly(&pt("2"), 4).unwrap();
        let got = extract_symmetric(&p, &SymTarget::Classic(ClassicBasis::Schur)).unwrap();
        let want = sym_map(&[("2", rat_int(1)), ("1,1", rat_int(-1))]);
        assert_eq!(got, want);
    }

    #[test]
    fn classic_extraction_round_trips() {
        let coeffs = sym_map(&[
            ("2,1", rat_int(2)),
            ("1,1,1", rat(-1, 2)),
            ("3", rat(1, 3)),
            ("1", rat_int(5)),
        ]);
        for basis in [
            ClassicBasis::Monomial,
            ClassicBasis::PowerSum,
            ClassicBasis::Elementary,
            ClassicBasis::Complete,
            ClassicBasis::Schur,
        ] {
            let target = SymTarget::Classic(basis);
            let poly = reassemble_symmetric(&target, &coeffs, 5).unwrap();
            let back = extract_symmetric(&poly, &target).unwrap();
            assert_eq!(back, coeffs, "basis {}", basis.name());
        }
    }

    #[test]
    fn deformed_and_strict_extraction_round_trips() {
        let t = rat(1, 2);
        let coeffs = sym_map(&[("2,1", rat_int(1)), ("1,1,1", rat_int(3))]);
        let target = SymTarget::HallLittlewood(t);
        let poly = reassemble_symmetric(&target, &coeffs, 5).unwrap();
        assert_eq!(extract_symmetric(&poly, &target).unwrap(), coeffs);

        let strict = sym_map(&[("2,1", rat_int(2)), ("3", rat_int(-1))]);
        let poly = reassemble_symmetric(&SymTarget::SchurP, &strict, 5).unwrap();
        assert_eq!(extract_symmetric(&poly, &SymTarget::SchurP).unwrap(), strict);
    }

    #[test]
    fn strict_extraction_rejects_repeated_leading_part() {
        let p = crate::symfn::monomial_poly(&pt("1,1"), 4).unwrap();
        match extract_symmetric(&p, &SymTarget::SchurP) {
            Err(Error::EliminationStalled(_)) => {}
            other => panic!("expected a stall, got {other:?}"),
        }
    }

    #[test]
    fn complete_extraction_uses_every_degree() {
        let coeffs = sym_map(&[("2,1", rat_int(2)), ("3", rat_int(1)), ("1", rat(1, 7))]);
        let target = SymTarget::Classic(ClassicBasis::Complete);
        let poly = reassemble_symmetric(&target, &coeffs, 4).unwrap();
        assert_eq!(extract_symmetric(&poly, &target).unwrap(), coeffs);
    }

    #[test]
    fn asymmetric_input_is_rejected_with_witness() {
        let p = SparsePoly::from_terms(3, [(vec![2, 0, 0], rat_int(1))]).unwrap();
        match extract_symmetric(&p, &SymTarget::Classic(ClassicBasis::Schur)) {
            Err(Error::NotSymmetric(_, _)) => {}
            other => panic!("expected asymmetry rejection, got {other:?}"),
        }
    }

    #[test]
    fn few_variables_are_rejected_for_faithfulness() {
        let p = schur_poly(&pt("2,2"), 2).unwrap();
        match extract_symmetric(&p, &SymTarget::Classic(ClassicBasis::Schur)) {
            Err(Error::ResourceBound(_)) => {}
            other => panic!("expected a variable-count bound, got {other:?}"),
        }
    }

    #[test]
    fn qsym_extraction_round_trips() {
        let coeffs: BTreeMap<StrongComposition, Rat> = [
            (sc("2,1"), rat_int(1)),
            (sc("1,1"), rat_int(-2)),
            (sc("1"), rat(1, 2)),
        ]
        .into_iter()
        .collect();
        for basis in [
            QsymBasis::Monomial,
            QsymBasis::Fundamental,
            QsymBasis::DualImmaculate,
            QsymBasis::QuasiSchur,
            QsymBasis::PowerComb,
            QsymBasis::PsiPower,
            QsymBasis::PhiPower,
        ] {
            let poly = reassemble_qsym(basis, &coeffs, 5).unwrap();
            let back = extract_qsym(&poly, basis).unwrap();
            assert_eq!(back, coeffs, "basis {}", basis.name());
        }
    }

    #[test]
    fn non_quasisymmetric_input_is_rejected() {
        let p = SparsePoly::from_terms(3, [(vec![1, 0, 1], rat_int(1))]).unwrap();
        match monomial_qsym_coeffs(&p) {
            Err(Error::EliminationStalled(msg)) => {
                assert!(msg.contains("not quasisymmetric"), "{msg}");
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn poly_extraction_round_trips() {
        let coeffs: BTreeMap<WeakComposition, Rat> = [
            (wc("0,2,1"), rat_int(2)),
            (wc("1,0,0"), rat_int(-1)),
            (wc("0,0,0"), rat(1, 2)),
        ]
        .into_iter()
        .collect();
        for basis in PolyBasis::ALL {
            let poly = reassemble_poly(basis, &coeffs, 3).unwrap();
            let back = extract_poly_basis(&poly, basis).unwrap();
            assert_eq!(back, coeffs, "basis {}", basis.name());
        }
    }

    #[test]
    fn schubert_product_pipeline_matches_extraction() {
        let a = wc("1,0,1,0");
        let b = wc("1,0,0,0");
        let pipeline = poly_structure(PolyBasis::Schubert, &a, &b, InvertMode::Chains).unwrap();
        let prod = expand_poly(PolyBasis::Schubert, &a)
            .unwrap()
            .try_mul(&expand_poly(PolyBasis::Schubert, &b).unwrap())
            .unwrap();
        let oracle = extract_poly_basis(&prod, PolyBasis::Schubert).unwrap();
        assert_eq!(pipeline, oracle);
        for v in pipeline.values() {
            assert!(v.is_integer() && *v >= Rat::zero());
        }
    }

    #[test]
    fn any_basis_parses_every_token() {
        for token in [
            "m", "p", "e", "h", "s", "hl", "schurp", "M", "F", "dimm", "qschur", "pcomb", "psi",
            "phi", "mslide", "fslide", "atom", "key", "lascoux", "schubert", "grothendieck",
        ] {
            let b = AnyBasis::parse(token).unwrap();
            assert_eq!(b.name(), token);
        }
        assert!(AnyBasis::parse("nope").is_err());
    }

    #[test]
    fn golden_suite_passes_and_serializes() {
        let report = verify_suite("golden").unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let json = report.to_json();
        assert_eq!(json["suite"], "golden");
        let cases = json["cases"].as_array().unwrap();
        assert!(!cases.is_empty());
        for c in cases {
            assert_eq!(c["status"], "pass");
            assert!(c["id"].is_string() && c["detail"].is_string());
        }
        let again = verify_suite("golden").unwrap();
        assert_eq!(
            serde_json::to_string(&report.to_json()).unwrap(),
            serde_json::to_string(&again.to_json()).unwrap()
        );
    }

    #[test]
    fn unknown_suites_are_rejected() {
        for name in ["", "nope", "Golden"] {
            match verify_suite(name) {
                Err(Error::UnknownSuite(s)) => assert_eq!(s, name),
                other => panic!("expected unknown-suite error, got {other:?}"),
            }
        }
    }

    #[test]
    fn extraction_matches_transition_route_on_deformed_rows() {
        let t = rat(1, 2);
        let mat = hl_matrix(4, &t).unwrap();
        let inv = mat.invert(InvertMode::Chains).unwrap();
        let m_row: BTreeMap<Partition, Rat> =
            [(pt("2,1,1"), rat_int(1))].into_iter().collect();
        let pipeline = inv.convert(&m_row).unwrap();
        let poly = crate::symfn::monomial_poly(&pt("2,1,1"), 4).unwrap();
        let oracle = extract_symmetric(&poly, &SymTarget::HallLittlewood(t)).unwrap();
        let pipeline = prune(&pipeline);
        assert_eq!(pipeline, oracle);
    }
}
