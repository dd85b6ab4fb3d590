//! Sparse multivariate polynomials over the rationals with a fixed,
//! explicit variable count.
//!
//! Exponent vectors all have length `nvars` and zero coefficients are never
//! stored, so structural equality is polynomial equality.  Arithmetic between
//! polynomials on different variable counts is rejected rather than coerced.

use crate::composition::{flat_of, StrongComposition, WeakComposition};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rational::{format_rat, rat_from_json, rat_to_json, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rat::one())
    }

    /// The single variable x_{i+1} (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(expt: Vec<u32>, coeff: Rat) -> Self {
        let nvars = expt.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(expt, coeff);
        }
        SparsePoly { nvars, terms }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, iter: I) -> Result<Self> {
        let mut p = SparsePoly::zero(nvars);
        for (e, c) in iter {
            if e.len() != nvars {
                return Err(Error::NvarsMismatch(e.len(), nvars));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, expt: &[u32]) -> Rat {
        self.terms.get(expt).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree of the highest term, None for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
    }

    fn add_term(&mut self, expt: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expt);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = SparsePoly::zero(self.nvars);
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut out = SparsePoly::one(self.nvars);
        for _ in 0..k {
            out = out.try_mul(self).expect("same nvars");
        }
        out
    }

    /// Substitutes x_i ↦ x_i^k in every term.
    pub fn power_vars(&self, k: u32) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|&x| x * k).collect(), c.clone()))
                .collect(),
        }
    }

    /// Applies w to the variables: x_i ↦ x_{w(i)}.
    pub fn permute_vars(&self, w: &Permutation) -> Result<SparsePoly> {
        if w.len() != self.nvars {
            return Err(Error::NvarsMismatch(w.len(), self.nvars));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[(w.word()[i] - 1) as usize] = x;
            }
            terms.insert(ne, c.clone());
        }
        Ok(SparsePoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(point.len(), self.nvars));
        }
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &x) in e.iter().enumerate() {
                for _ in 0..x {
                    term *= &point[i];
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Lex-greatest term (exponent vectors compared entrywise left to right).
    pub fn leading_lex(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Leading term under an arbitrary total order on exponents.
    pub fn leading_by<F>(&self, mut better: F) -> Option<(&Vec<u32>, &Rat)>
    where
        F: FnMut(&[u32], &[u32]) -> std::cmp::Ordering,
    {
        self.terms
            .iter()
            .max_by(|(ea, _), (eb, _)| better(ea, eb))
    }

    /// Exact division in the lex monomial order; errors if any reduction step
    /// fails or a nonzero remainder survives.
    pub fn divide_exact(&self, divisor: &SparsePoly) -> Result<SparsePoly> {
        if self.nvars != divisor.nvars {
            return Err(Error::NvarsMismatch(self.nvars, divisor.nvars));
        }
        let (de, dc) = divisor
            .leading_lex()
            .ok_or_else(|| Error::Parse("division by zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_lex() {
            if re.iter().zip(de).any(|(r, d)| r < d) {
                return Err(Error::Parse(format!(
                    "inexact polynomial division: leading exponent {re:?} not divisible by {de:?}"
                )));
            }
            let qe: Vec<u32> = re.iter().zip(de).map(|(r, d)| r - d).collect();
            let qc = rc / dc;
            let piece = SparsePoly::monomial(qe, qc);
            rem = rem.try_sub(&piece.try_mul(divisor)?)?;
            quot = quot.try_add(&piece)?;
        }
        Ok(quot)
    }

    /// Invariant under every adjacent variable swap.
    pub fn is_symmetric(&self) -> bool {
        self.find_asymmetry().is_none()
    }

    /// A witness pair of exponent vectors related by one adjacent swap whose
    /// coefficients differ, if any.
    pub fn find_asymmetry(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        for (e, c) in &self.terms {
            for i in 0..self.nvars.saturating_sub(1) {
                if e[i] != e[i + 1] {
                    let mut f = e.clone();
                    f.swap(i, i + 1);
                    if self.coeff(&f) != *c {
                        return Some((e.clone(), f));
                    }
                }
            }
        }
        None
    }

    /// Coefficients depend only on the composition of nonzero exponents, and
    /// every placement of that composition appears.
    pub fn is_quasisymmetric(&self) -> bool {
        let mut by_flat: BTreeMap<StrongComposition, (Rat, usize)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let flat = flat_of(e);
            match by_flat.get_mut(&flat) {
                None => {
                    by_flat.insert(flat, (c.clone(), 1));
                }
                Some((c0, count)) => {
                    if c0 != c {
                        return false;
                    }
                    *count += 1;
                }
            }
        }
        by_flat.iter().all(|(flat, (_, count))| {
            *count == binomial(self.nvars, flat.len())
        })
    }

    /// Coefficients of each monomial keyed by weak composition (all terms).
    pub fn monomial_coeffs(&self) -> BTreeMap<WeakComposition, Rat> {
        self.terms
            .iter()
            .map(|(e, c)| (WeakComposition::new(e.clone()), c.clone()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut obj = serde_json::Map::new();
                obj.insert("expt".into(), serde_json::json!(e));
                let coeff = rat_to_json(c);
                if let serde_json::Value::Object(m) = coeff {
                    for (k, v) in m {
                        obj.insert(k, v);
                    }
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::json!({ "nvars": self.nvars, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SparsePoly> {
        let nvars = v["nvars"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing nvars".into()))? as usize;
        let mut p = SparsePoly::zero(nvars);
        for t in v["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing terms".into()))?
        {
            let e: Vec<u32> = t["expt"]
                .as_array()
                .ok_or_else(|| Error::Parse("missing expt".into()))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse("bad exponent".into()))?;
            if e.len() != nvars {
                return Err(Error::NvarsMismatch(e.len(), nvars));
            }
            p.add_term(e, rat_from_json(t)?);
        }
        Ok(p)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut b: u128 = 1;
    for i in 0..k {
        b = b * (n - i) as u128 / (i + 1) as u128;
    }
    b as usize
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest lex term first reads most naturally.
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, x)
                    }
                })
                .collect();
            let cs = format_rat(c);
            let lead = if k == 0 {
                if cs.starts_with('-') { "-".to_string() } else { String::new() }
            } else if cs.starts_with('-') {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            let mag = cs.trim_start_matches('-');
            write!(f, "{lead}")?;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("nvars mismatch in +")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("nvars mismatch in -")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("nvars mismatch in *")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn xp(nvars: usize, pairs: &[(&[u32], i64)]) -> SparsePoly {
        SparsePoly::from_terms(
            nvars,
            pairs.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let a = xp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = xp(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let prod = &a * &b;
        assert_eq!(prod, xp(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert!(a.try_add(&SparsePoly::one(3)).is_err());
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = xp(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 2), (&[0, 0, 1], -1)]);
        let b = xp(3, &[(&[2, 0, 0], 3), (&[0, 0, 2], 1)]);
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&a).unwrap(), b);
        assert_eq!(prod.divide_exact(&b).unwrap(), a);
        let c = xp(3, &[(&[1, 1, 0], 1)]);
        assert!(a.divide_exact(&c).is_err());
    }

    #[test]
    fn symmetry_detection() {
        let sym = xp(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]);
        assert!(sym.is_symmetric());
        assert!(sym.is_quasisymmetric());
        let qsym = xp(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)]);
        assert!(qsym.is_symmetric());
        let not = xp(2, &[(&[2, 1], 1), (&[1, 2], 2)]);
        assert!(!not.is_symmetric());
        let (e, f) = not.find_asymmetry().unwrap();
        assert_eq!((e, f), (vec![1, 2], vec![2, 1]));
    }

    #[test]
    fn quasisymmetry_detection() {
        // M_{2,1} at n = 3: complete set of placements.
        let m21 = xp(3, &[(&[2, 1, 0], 1), (&[2, 0, 1], 1), (&[0, 2, 1], 1)]);
        assert!(m21.is_quasisymmetric());
        assert!(!m21.is_symmetric());
        // Dropping a placement breaks quasisymmetry.
        let partial = xp(3, &[(&[2, 1, 0], 1), (&[2, 0, 1], 1)]);
        assert!(!partial.is_quasisymmetric());
        // All placements of (1,2) form M_{1,2}, also quasisymmetric.
        let m12 = xp(3, &[(&[1, 2, 0], 1), (&[1, 0, 2], 1), (&[0, 1, 2], 1)]);
        assert!(m12.is_quasisymmetric());
        // Unequal coefficients on placements of the same composition fail.
        let wrong = xp(3, &[(&[2, 1, 0], 1), (&[2, 0, 1], 2), (&[0, 2, 1], 1)]);
        assert!(!wrong.is_quasisymmetric());
    }

    #[test]
    fn permute_and_eval() {
        let p = xp(3, &[(&[2, 1, 0], 1)]);
        let w = Permutation::new(vec![2, 3, 1]).unwrap();
        // x1^2 x2 ↦ x2^2 x3.
        assert_eq!(p.permute_vars(&w).unwrap(), xp(3, &[(&[0, 2, 1], 1)]));
        let val = p
            .eval(&[rat_int(2), rat_int(3), rat_int(5)])
            .unwrap();
        assert_eq!(val, rat_int(12));
    }

    #[test]
    fn json_roundtrip_is_stable() {
        let p = xp(2, &[(&[1, 0], 1), (&[0, 2], -3)]);
        let j = p.to_json();
        let q = SparsePoly::from_json(&j).unwrap();
        assert_eq!(p, q);
        assert_eq!(serde_json::to_string(&j).unwrap(), serde_json::to_string(&q.to_json()).unwrap());
    }

    #[test]
    fn display_renders_monomials() {
        let p = xp(2, &[(&[2, 1], 3), (&[0, 0], -1)]);
        let s = p.to_string();
        assert!(s.contains("x1^2*x2"), "{s}");
        assert!(SparsePoly::zero(2).to_string() == "0");
    }
}
