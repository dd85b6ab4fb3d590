//! Acceptance checklist: each criterion is one test that prints a single
//! pass/fail line with its runtime and enforces the runtime budget.

use std::time::{Duration, Instant};

use xbasis::composition::partitions_of;
use xbasis::hall_littlewood::{hl_expand, hl_symmetrization_oracle, schur_p_expand};
use xbasis::oracle::{extract_symmetric, verify_suite, SymTarget};
use xbasis::rational::{rat, rat_int};
use xbasis::symfn::schur_poly;

fn run_suite(criterion: &str, suite: &str, budget: Duration) {
    let start = Instant::now();
    let report = verify_suite(suite).expect("known suite");
    let elapsed = start.elapsed();
    let (ok, total) = report.counts();
    let pass = report.passed() && elapsed <= budget;
    println!(
        "{} {criterion}: suite {suite}, {ok}/{total} cases, {:.1}s (budget {:.0}s)",
        if pass { "pass" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    if !report.passed() {
        panic!(
            "criterion {criterion} failed:\n{}",
            report
                .cases
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("  {}: {}", c.id, c.detail))
                .collect::<Vec<_>>()
                .join("\n")
        );
    }
    assert!(
        elapsed <= budget,
        "criterion {criterion} overran its budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_1_golden_corpus() {
    run_suite("1", "golden", Duration::from_secs(5));
}

#[test]
fn criterion_2_mobius_inversion() {
    run_suite("2", "mobius", Duration::from_secs(120));
}

#[test]
fn criterion_3_unitriangularity() {
    run_suite("3", "unitriangular", Duration::from_secs(120));
}

#[test]
fn criterion_4_pipeline_vs_oracle() {
    run_suite("4", "pipeline-vs-oracle", Duration::from_secs(600));
}

#[test]
fn criterion_5_deformed_family_checks() {
    let budget = Duration::from_secs(180);
    let start = Instant::now();

    // Tableau-weight route against the symmetrization oracle.
    let ts = [rat_int(0), rat(1, 2), rat(-1, 2), rat_int(2)];
    let mut compared = 0usize;
    for n in 1..=4usize {
        for m in 1..=5u32 {
            for lam in partitions_of(m) {
                if lam.len() > n {
                    continue;
                }
                for t in &ts {
                    let tableaux = hl_expand(&lam, t, n).expect("expansion");
                    let symmetrized = hl_symmetrization_oracle(&lam, t, n).expect("oracle");
                    assert_eq!(
                        tableaux, symmetrized,
                        "routes differ at lambda = {lam}, t = {t}, n = {n}"
                    );
                    compared += 1;
                }
            }
        }
    }

    // The t = 0 specialization is the Schur expansion.
    for m in 1..=6u32 {
        for lam in partitions_of(m) {
            if lam.len() > 6 {
                continue;
            }
            assert_eq!(
                hl_expand(&lam, &rat_int(0), 6).expect("expansion"),
                schur_poly(&lam, 6).expect("schur"),
                "t = 0 is not Schur at {lam}"
            );
        }
    }

    // Products in the strict (t = -1) family have integral structure constants.
    let strict: Vec<_> = (1..=4u32)
        .flat_map(partitions_of)
        .filter(|lam| lam.is_strict())
        .collect();
    let mut products = 0usize;
    for a in &strict {
        for b in &strict {
            let n = (a.size() + b.size()) as usize;
            let prod = schur_p_expand(a, n)
                .expect("expansion")
                .try_mul(&schur_p_expand(b, n).expect("expansion"))
                .expect("same nvars");
            let coeffs = extract_symmetric(&prod, &SymTarget::SchurP).expect("in the span");
            for (nu, c) in &coeffs {
                assert!(
                    c.is_integer(),
                    "P({a}) * P({b}) has non-integral coefficient {c} at ({nu})"
                );
            }
            products += 1;
        }
    }

    let elapsed = start.elapsed();
    let pass = elapsed <= budget;
    println!(
        "{} 5: deformed-family checks, {compared} route comparisons and {products} strict products, {:.1}s (budget {:.0}s)",
        if pass { "pass" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(pass, "criterion 5 overran its budget: {elapsed:?}");
}

#[test]
fn criterion_6_plethysm() {
    run_suite("6", "plethysm", Duration::from_secs(300));
}

#[test]
fn criterion_7_bridge() {
    run_suite("7", "bridge", Duration::from_secs(60));
}
