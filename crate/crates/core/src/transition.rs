//! Poset-indexed transition matrices and their exact inverses.
//!
//! A matrix records one basis in terms of another: row r holds the expansion
//! of the r-th element, and a triangularity flag pins which side of the poset
//! order the support may live on.  Inverses are computed two ways — the
//! alternating-chain expansion Σ_ℓ (−1)^ℓ N^ℓ of the strict part N, and plain
//! back-substitution — and both require a unit diagonal; `invert` first
//! factors out a nonsingular diagonal when one is present.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rational::{rat_to_json, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Triangularity {
    /// Entry (r, c) may be nonzero only when r ≤ c in the poset.
    RowLeqCol,
    /// Entry (r, c) may be nonzero only when c ≤ r in the poset.
    ColLeqRow,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvertMode {
    Chains,
    BackSub,
}

/// Index types that expose their parts for serialization.
pub trait IndexVec {
    fn as_parts(&self) -> Vec<u32>;
}

impl IndexVec for crate::composition::Partition {
    fn as_parts(&self) -> Vec<u32> {
        self.parts().to_vec()
    }
}

impl IndexVec for crate::composition::StrongComposition {
    fn as_parts(&self) -> Vec<u32> {
        self.parts().to_vec()
    }
}

impl IndexVec for crate::composition::WeakComposition {
    fn as_parts(&self) -> Vec<u32> {
        self.parts().to_vec()
    }
}

#[derive(Clone)]
pub struct TransitionMatrix<E> {
    poset: Arc<Poset<E>>,
    tri: Triangularity,
    entries: BTreeMap<(usize, usize), Rat>,
}

impl<E: Clone + Ord + fmt::Display> TransitionMatrix<E> {
    pub fn new(poset: Arc<Poset<E>>, tri: Triangularity) -> Self {
        TransitionMatrix {
            poset,
            tri,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(poset: Arc<Poset<E>>, tri: Triangularity) -> Self {
        let entries = (0..poset.len()).map(|i| ((i, i), Rat::one())).collect();
        TransitionMatrix { poset, tri, entries }
    }

    pub fn poset(&self) -> &Arc<Poset<E>> {
        &self.poset
    }

    pub fn triangularity(&self) -> Triangularity {
        self.tri
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    fn allowed(&self, r: usize, c: usize) -> bool {
        match self.tri {
            Triangularity::RowLeqCol => self.poset.leq_idx(r, c),
            Triangularity::ColLeqRow => self.poset.leq_idx(c, r),
        }
    }

    pub fn set_idx(&mut self, r: usize, c: usize, v: Rat) -> Result<()> {
        if v.is_zero() {
            self.entries.remove(&(r, c));
            return Ok(());
        }
        if !self.allowed(r, c) {
            return Err(Error::TriangularityViolation(
                self.poset.element(r).to_string(),
                self.poset.element(c).to_string(),
            ));
        }
        self.entries.insert((r, c), v);
        Ok(())
    }

    pub fn set(&mut self, row: &E, col: &E, v: Rat) -> Result<()> {
        let (r, c) = (self.poset.index_of(row)?, self.poset.index_of(col)?);
        self.set_idx(r, c, v)
    }

    pub fn get_idx(&self, r: usize, c: usize) -> Rat {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn get(&self, row: &E, col: &E) -> Result<Rat> {
        Ok(self.get_idx(self.poset.index_of(row)?, self.poset.index_of(col)?))
    }

    pub fn diagonal_idx(&self, i: usize) -> Rat {
        self.get_idx(i, i)
    }

    pub fn is_unitriangular(&self) -> bool {
        (0..self.poset.len()).all(|i| self.diagonal_idx(i).is_one())
    }

    pub fn is_identity(&self) -> bool {
        self.is_unitriangular() && self.entries.len() == self.poset.len()
    }

    pub fn transpose(&self) -> Self {
        let tri = match self.tri {
            Triangularity::RowLeqCol => Triangularity::ColLeqRow,
            Triangularity::ColLeqRow => Triangularity::RowLeqCol,
        };
        TransitionMatrix {
            poset: Arc::clone(&self.poset),
            tri,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Row-major sparse view.
    fn rows(&self) -> Vec<BTreeMap<usize, Rat>> {
        let mut rows = vec![BTreeMap::new(); self.poset.len()];
        for (&(r, c), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        rows
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.poset, &other.poset) && self.poset.name() != other.poset.name() {
            return Err(Error::Parse(format!(
                "matrix product across posets {} and {}",
                self.poset.name(),
                other.poset.name()
            )));
        }
        if self.tri != other.tri {
            return Err(Error::Parse(
                "matrix product with mixed triangularity flags".into(),
            ));
        }
        let rows_b = other.rows();
        let mut out = TransitionMatrix::new(Arc::clone(&self.poset), self.tri);
        let mut acc: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (&(r, k), va) in &self.entries {
            for (&c, vb) in &rows_b[k] {
                let slot = acc.entry((r, c)).or_insert_with(Rat::zero);
                *slot += va * vb;
            }
        }
        for ((r, c), v) in acc {
            out.set_idx(r, c, v)?;
        }
        Ok(out)
    }

    /// Σ_r v_r · M(r, ·): pushes a coefficient vector through the matrix.
    pub fn vec_times(&self, v: &BTreeMap<usize, Rat>) -> BTreeMap<usize, Rat> {
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        for (&(r, c), m) in &self.entries {
            if let Some(coeff) = v.get(&r) {
                let slot = out.entry(c).or_insert_with(Rat::zero);
                *slot += coeff * m;
            }
        }
        out.retain(|_, val| !val.is_zero());
        out
    }

    /// Element-keyed version of `vec_times`.
    pub fn convert(&self, v: &BTreeMap<E, Rat>) -> Result<BTreeMap<E, Rat>> {
        let mut idx: BTreeMap<usize, Rat> = BTreeMap::new();
        for (e, c) in v {
            idx.insert(self.poset.index_of(e)?, c.clone());
        }
        Ok(self
            .vec_times(&idx)
            .into_iter()
            .map(|(i, c)| (self.poset.element(i).clone(), c))
            .collect())
    }

    fn require_unitriangular(&self, op: &str) -> Result<()> {
        for i in 0..self.poset.len() {
            if !self.diagonal_idx(i).is_one() {
                return Err(Error::NotUnitriangular(
                    op.to_string(),
                    format!(
                        "diagonal at {} is {}",
                        self.poset.element(i),
                        crate::rational::format_rat(&self.diagonal_idx(i))
                    ),
                ));
            }
        }
        Ok(())
    }

    /// Inverse of a unitriangular matrix through the alternating chain
    /// expansion: with N the strict part, the inverse is Σ_ℓ (−1)^ℓ N^ℓ,
    /// a finite sum because N is nilpotent.
    pub fn invert_unitriangular_chains(&self) -> Result<Self> {
        self.require_unitriangular("chain inversion")?;
        let n = self.poset.len();
        // Strict part, row-major.
        let mut strict = vec![BTreeMap::new(); n];
        for (&(r, c), v) in &self.entries {
            if r != c {
                strict[r].insert(c, v.clone());
            }
        }
        let mut acc: BTreeMap<(usize, usize), Rat> =
            (0..n).map(|i| ((i, i), Rat::one())).collect();
        // term starts as N, then N², … with alternating signs.
        let mut term = vec![BTreeMap::new(); n];
        for (r, row) in strict.iter().enumerate() {
            term[r] = row.clone();
        }
        let mut sign_negative = true;
        while term.iter().any(|row| !row.is_empty()) {
            for (r, row) in term.iter().enumerate() {
                for (&c, v) in row {
                    let slot = acc.entry((r, c)).or_insert_with(Rat::zero);
                    if sign_negative {
                        *slot -= v;
                    } else {
                        *slot += v;
                    }
                }
            }
            // term ← term · N.
            let mut next = vec![BTreeMap::new(); n];
            for (r, row) in term.iter().enumerate() {
                for (&k, v) in row {
                    for (&c, w) in &strict[k] {
                        let slot = next[r].entry(c).or_insert_with(Rat::zero);
                        *slot += v * w;
                    }
                }
            }
            for row in &mut next {
                row.retain(|_, v| !v.is_zero());
            }
            term = next;
            sign_negative = !sign_negative;
        }
        let mut out = TransitionMatrix::new(Arc::clone(&self.poset), self.tri);
        for ((r, c), v) in acc {
            out.set_idx(r, c, v)?;
        }
        Ok(out)
    }

    /// Inverse of a unitriangular matrix by back-substitution:
    /// ρ(y,y) = 1 and ρ(x,y) = −Σ_{x<z≤y} η(x,z)ρ(z,y) column by column.
    pub fn invert_unitriangular_backsub(&self) -> Result<Self> {
        self.require_unitriangular("back-substitution")?;
        if self.tri == Triangularity::ColLeqRow {
            return Ok(self.transpose().invert_unitriangular_backsub()?.transpose());
        }
        let n = self.poset.len();
        let rows = self.rows();
        let mut out = TransitionMatrix::new(Arc::clone(&self.poset), self.tri);
        for y in 0..n {
            // Solve for ρ(·, y) from the bottom of the interval upward; any
            // order with all successors first works, so recurse on demand.
            let mut col: BTreeMap<usize, Rat> = BTreeMap::new();
            col.insert(y, Rat::one());
            let mut pending: Vec<usize> = (0..n)
                .filter(|&x| x != y && self.poset.leq_idx(x, y))
                .collect();
            // Repeatedly resolve rows whose strict successors are all known.
            while !pending.is_empty() {
                let mut progressed = false;
                pending.retain(|&x| {
                    let ready = rows[x]
                        .keys()
                        .all(|&z| z == x || !self.poset.leq_idx(z, y) || col.contains_key(&z));
                    if !ready {
                        return true;
                    }
                    let mut s = Rat::zero();
                    for (&z, v) in &rows[x] {
                        if z != x {
                            if let Some(r) = col.get(&z) {
                                s += v * r;
                            }
                        }
                    }
                    col.insert(x, -s);
                    progressed = true;
                    false
                });
                assert!(progressed, "cycle in triangular solve");
            }
            for (x, v) in col {
                out.set_idx(x, y, v)?;
            }
        }
        Ok(out)
    }

    /// General inverse: factors the matrix as D·U with D the diagonal and U
    /// unitriangular, inverts U by the requested mode, and recombines.
    /// Rejects singular diagonals.
    pub fn invert(&self, mode: InvertMode) -> Result<Self> {
        let n = self.poset.len();
        for i in 0..n {
            if self.diagonal_idx(i).is_zero() {
                return Err(Error::SingularDiagonal(self.poset.element(i).to_string()));
            }
        }
        let unit_already = self.is_unitriangular();
        let unit = if unit_already {
            self.clone()
        } else {
            // Scale each row by the reciprocal of its diagonal.
            let mut u = TransitionMatrix::new(Arc::clone(&self.poset), self.tri);
            for (&(r, c), v) in &self.entries {
                u.set_idx(r, c, v / self.diagonal_idx(r))?;
            }
            u
        };
        let inv_u = match mode {
            InvertMode::Chains => unit.invert_unitriangular_chains()?,
            InvertMode::BackSub => unit.invert_unitriangular_backsub()?,
        };
        if unit_already {
            return Ok(inv_u);
        }
        // (D·U)⁻¹ = U⁻¹·D⁻¹: scale each column by the reciprocal diagonal.
        let mut out = TransitionMatrix::new(Arc::clone(&self.poset), self.tri);
        for (&(r, c), v) in &inv_u.entries {
            out.set_idx(r, c, v / self.diagonal_idx(c))?;
        }
        Ok(out)
    }
}

impl<E: Clone + Ord + fmt::Display + IndexVec> TransitionMatrix<E> {
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(r, c), v)| {
                let mut obj = serde_json::Map::new();
                obj.insert(
                    "row".into(),
                    serde_json::json!(self.poset.element(r).as_parts()),
                );
                obj.insert(
                    "col".into(),
                    serde_json::json!(self.poset.element(c).as_parts()),
                );
                if let serde_json::Value::Object(m) = rat_to_json(v) {
                    for (k, val) in m {
                        obj.insert(k, val);
                    }
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::json!({
            "poset": self.poset.name(),
            "triangularity": match self.tri {
                Triangularity::RowLeqCol => "row_leq_col",
                Triangularity::ColLeqRow => "col_leq_row",
            },
            "entries": entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{parse_parts, Partition};
    use crate::poset::partitions_poset;
    use crate::rational::rat_int;

    fn pt(s: &str) -> Partition {
        Partition::new(parse_parts(s).unwrap()).unwrap()
    }

    fn sample_matrix() -> TransitionMatrix<Partition> {
        // Kostka numbers for m = 3 (rows: s_λ in terms of m_μ).
        let p = partitions_poset(3);
        let mut m = TransitionMatrix::new(p, Triangularity::RowLeqCol);
        m.set(&pt("3"), &pt("3"), rat_int(1)).unwrap();
        m.set(&pt("3"), &pt("2,1"), rat_int(1)).unwrap();
        m.set(&pt("3"), &pt("1,1,1"), rat_int(1)).unwrap();
        m.set(&pt("2,1"), &pt("2,1"), rat_int(1)).unwrap();
        m.set(&pt("2,1"), &pt("1,1,1"), rat_int(2)).unwrap();
        m.set(&pt("1,1,1"), &pt("1,1,1"), rat_int(1)).unwrap();
        m
    }

    #[test]
    fn triangularity_is_enforced() {
        let p = partitions_poset(3);
        let mut m = TransitionMatrix::new(Arc::clone(&p), Triangularity::RowLeqCol);
        assert!(m.set(&pt("1,1,1"), &pt("3"), rat_int(5)).is_err());
        assert!(m.set(&pt("3"), &pt("1,1,1"), rat_int(5)).is_ok());
        // Zeroes are allowed anywhere (they just clear).
        assert!(m.set(&pt("1,1,1"), &pt("3"), rat_int(0)).is_ok());
        let mut m = TransitionMatrix::new(p, Triangularity::ColLeqRow);
        assert!(m.set(&pt("3"), &pt("1,1,1"), rat_int(5)).is_err());
        assert!(m.set(&pt("1,1,1"), &pt("3"), rat_int(5)).is_ok());
    }

    #[test]
    fn both_inversions_agree_and_cancel() {
        let m = sample_matrix();
        let inv_a = m.invert(InvertMode::Chains).unwrap();
        let inv_b = m.invert(InvertMode::BackSub).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(inv_a.get_idx(r, c), inv_b.get_idx(r, c));
            }
        }
        assert!(m.mul(&inv_a).unwrap().is_identity());
        assert!(inv_a.mul(&m).unwrap().is_identity());
        // Inverse Kostka for m = 3 has the alternating pattern.
        assert_eq!(inv_a.get(&pt("3"), &pt("2,1")).unwrap(), rat_int(-1));
        assert_eq!(inv_a.get(&pt("3"), &pt("1,1,1")).unwrap(), rat_int(1));
        assert_eq!(inv_a.get(&pt("2,1"), &pt("1,1,1")).unwrap(), rat_int(-2));
    }

    #[test]
    fn nonunit_diagonal_is_factored() {
        let p = partitions_poset(3);
        let mut m = TransitionMatrix::new(p, Triangularity::RowLeqCol);
        m.set(&pt("3"), &pt("3"), rat_int(3)).unwrap();
        m.set(&pt("3"), &pt("2,1"), rat_int(1)).unwrap();
        m.set(&pt("2,1"), &pt("2,1"), rat_int(2)).unwrap();
        m.set(&pt("1,1,1"), &pt("1,1,1"), rat_int(1)).unwrap();
        // Strict unitriangular routes refuse.
        assert!(matches!(
            m.invert_unitriangular_chains(),
            Err(Error::NotUnitriangular(_, _))
        ));
        let inv = m.invert(InvertMode::Chains).unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert_eq!(
            inv.get(&pt("3"), &pt("2,1")).unwrap(),
            crate::rational::rat(-1, 6)
        );
        // Singular diagonal is named.
        let mut s = TransitionMatrix::new(partitions_poset(3), Triangularity::RowLeqCol);
        s.set(&pt("3"), &pt("3"), rat_int(1)).unwrap();
        assert!(matches!(
            s.invert(InvertMode::Chains),
            Err(Error::SingularDiagonal(_))
        ));
    }

    #[test]
    fn transpose_and_convert() {
        let m = sample_matrix();
        let t = m.transpose();
        assert_eq!(t.triangularity(), Triangularity::ColLeqRow);
        assert_eq!(t.get(&pt("2,1"), &pt("3")).unwrap(), rat_int(1));
        // s_{21} + s_3 pushed through the Kostka matrix gives m-coefficients.
        let mut v = BTreeMap::new();
        v.insert(pt("3"), rat_int(1));
        v.insert(pt("2,1"), rat_int(1));
        let w = m.convert(&v).unwrap();
        assert_eq!(w[&pt("3")], rat_int(1));
        assert_eq!(w[&pt("2,1")], rat_int(2));
        assert_eq!(w[&pt("1,1,1")], rat_int(3));
    }

    #[test]
    fn json_shape() {
        let m = sample_matrix();
        let j = m.to_json();
        assert_eq!(j["poset"], "partitions(3)");
        assert_eq!(j["triangularity"], "row_leq_col");
        assert_eq!(j["entries"].as_array().unwrap().len(), 6);
        let first = &j["entries"][0];
        assert!(first["row"].is_array() && first["num"].is_string());
    }
}
