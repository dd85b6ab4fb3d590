//! Ground index types: partitions, weak and strong compositions.
//!
//! Conventions used throughout the crate:
//! - `dominance_leq(a, b)` means every prefix sum of `a` is **at least** the
//!   matching prefix sum of `b` (same total size, zero-padding the shorter).
//!   Under this orientation `(2,1) ⊴ (1,1,1)` holds and vectors of different
//!   total size are incomparable.
//! - the canonical total order on index vectors is graded by size, then
//!   reverse-lexicographic on parts, so partitions of 3 enumerate as
//!   `(3), (2,1), (1,1,1)`.  `Ord` on all three index types realizes it.

use crate::error::{Error, Result};
use crate::rational::Int;
use num::One;
use std::cmp::Ordering;
use std::fmt;

// ---------------------------------------------------------------------------
// comparisons

/// Graded, then reverse-lexicographic; ties broken by length.
pub fn cmp_canonical(a: &[u32], b: &[u32]) -> Ordering {
    let (sa, sb) = (size_of(a), size_of(b));
    if sa != sb {
        return sa.cmp(&sb);
    }
    let len = a.len().max(b.len());
    for i in 0..len {
        let (x, y) = (part_at(a, i), part_at(b, i));
        if x != y {
            // Lexicographically larger vectors come first.
            return y.cmp(&x);
        }
    }
    a.len().cmp(&b.len())
}

fn part_at(a: &[u32], i: usize) -> u32 {
    a.get(i).copied().unwrap_or(0)
}

pub fn size_of(a: &[u32]) -> u64 {
    a.iter().map(|&p| p as u64).sum()
}

/// Prefix-sum dominance: true iff `|a| = |b|` and every prefix sum of `a` is
/// ≥ the matching prefix sum of `b`.  Vectors of different size compare false
/// in both directions (incomparable).
pub fn dominance_leq(a: &[u32], b: &[u32]) -> bool {
    if size_of(a) != size_of(b) {
        return false;
    }
    let mut pa = 0u64;
    let mut pb = 0u64;
    for i in 0..a.len().max(b.len()) {
        pa += part_at(a, i) as u64;
        pb += part_at(b, i) as u64;
        if pa < pb {
            return false;
        }
    }
    true
}

/// The sorted-first order on strong compositions: when the sorted shapes
/// differ, compare them by (strict) dominance; when they agree, compare the
/// raw compositions with the roles swapped.  Mismatched total sizes are
/// rejected rather than treated as incomparable.
pub fn dominance_prime_leq(a: &StrongComposition, b: &StrongComposition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.to_string(), b.to_string()));
    }
    let (sa, sb) = (a.sort(), b.sort());
    if sa != sb {
        Ok(dominance_leq(sa.parts(), sb.parts()))
    } else {
        Ok(dominance_leq(b.parts(), a.parts()))
    }
}

// ---------------------------------------------------------------------------
// shared helpers

pub fn sort_of(parts: &[u32]) -> Partition {
    let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition { parts: v }
}

pub fn flat_of(parts: &[u32]) -> StrongComposition {
    StrongComposition {
        parts: parts.iter().copied().filter(|&p| p > 0).collect(),
    }
}

/// z-statistic of the underlying partition: ∏ iᵐⁱ·mᵢ! over part values i
/// with multiplicity mᵢ (zero parts ignored).
pub fn z_of(parts: &[u32]) -> Int {
    let sorted = sort_of(parts);
    let mut z = Int::one();
    let mut i = 0;
    let p = sorted.parts();
    while i < p.len() {
        let mut j = i;
        while j < p.len() && p[j] == p[i] {
            j += 1;
        }
        let mult = (j - i) as u32;
        for _ in 0..mult {
            z *= Int::from(p[i]);
        }
        z *= factorial(mult);
        i = j;
    }
    z
}

pub fn sort_flat_z(parts: &[u32]) -> (Partition, StrongComposition, Int) {
    (sort_of(parts), flat_of(parts), z_of(parts))
}

pub fn factorial(n: u32) -> Int {
    let mut f = Int::one();
    for i in 2..=n {
        f *= Int::from(i);
    }
    f
}

// ---------------------------------------------------------------------------
// refinement

/// True iff `b` refines `a`: summing consecutive parts of `b` yields `a`.
pub fn refines(b: &StrongComposition, a: &StrongComposition) -> bool {
    refinement_blocks(b, a).is_some()
}

/// The block decomposition witnessing `b` refines `a`: blocks of consecutive
/// parts of `b`, the i-th summing to `a_i`.  Unique when it exists.
pub fn refinement_blocks(b: &StrongComposition, a: &StrongComposition) -> Option<Vec<Vec<u32>>> {
    let mut blocks = Vec::with_capacity(a.len());
    let mut pos = 0;
    for &target in a.parts() {
        let mut acc = 0u32;
        let start = pos;
        while acc < target {
            let &p = b.parts().get(pos)?;
            acc += p;
            pos += 1;
        }
        if acc != target {
            return None;
        }
        blocks.push(b.parts()[start..pos].to_vec());
    }
    (pos == b.len()).then_some(blocks)
}

/// All strong compositions refining `a`, i.e. each part replaced by a
/// composition of itself.
pub fn refinements_of(a: &StrongComposition) -> Vec<StrongComposition> {
    let mut out = vec![Vec::new()];
    for &p in a.parts() {
        let splits = strong_compositions_of(p);
        let mut next = Vec::with_capacity(out.len() * splits.len());
        for prefix in &out {
            for s in &splits {
                let mut v = prefix.clone();
                v.extend_from_slice(s.parts());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(|parts| StrongComposition { parts }).collect()
}

/// All coarsenings of `a` together with the consecutive blocks of `a` that
/// were merged to produce each one.
pub fn coarsenings_of(a: &StrongComposition) -> Vec<(StrongComposition, Vec<Vec<u32>>)> {
    let n = a.len();
    if n == 0 {
        return vec![(a.clone(), Vec::new())];
    }
    let mut out = Vec::new();
    // Choose the set of "cut" positions among the n-1 gaps.
    for mask in 0..(1u64 << (n - 1)) {
        let mut blocks = Vec::new();
        let mut start = 0;
        for gap in 0..n - 1 {
            if mask >> gap & 1 == 1 {
                blocks.push(a.parts()[start..=gap].to_vec());
                start = gap + 1;
            }
        }
        blocks.push(a.parts()[start..].to_vec());
        let parts = blocks.iter().map(|b| b.iter().sum()).collect();
        out.push((StrongComposition { parts }, blocks));
    }
    out
}

// ---------------------------------------------------------------------------
// Partition

/// Weakly decreasing positive parts; the empty partition indexes degree 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts a weakly decreasing list, dropping trailing zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIndex(format!(
                "partition parts must weakly decrease: {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn from_unsorted(parts: &[u32]) -> Self {
        sort_of(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        size_of(&self.parts)
    }

    pub fn part(&self, i: usize) -> u32 {
        part_at(&self.parts, i)
    }

    /// All parts distinct (the strict partitions indexing Schur-P).
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiplicity of the part value `v` (v ≥ 1).
    pub fn multiplicity(&self, v: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == v).count() as u32
    }

    /// Zero-pads to `n` entries; errors when the partition is longer.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::LengthExceedsVars { len: self.len(), nvars: n });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_canonical(&self.parts, &other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

// ---------------------------------------------------------------------------
// StrongComposition

/// Strictly positive parts in a fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StrongComposition {
    parts: Vec<u32>,
}

impl StrongComposition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidIndex(format!(
                "strong composition parts must be positive: {parts:?}"
            )));
        }
        Ok(StrongComposition { parts })
    }

    pub fn empty() -> Self {
        StrongComposition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        size_of(&self.parts)
    }

    pub fn sort(&self) -> Partition {
        sort_of(&self.parts)
    }

    pub fn reversed(&self) -> StrongComposition {
        let mut parts = self.parts.clone();
        parts.reverse();
        StrongComposition { parts }
    }
}

impl Ord for StrongComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_canonical(&self.parts, &other.parts)
    }
}

impl PartialOrd for StrongComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.parts))
    }
}

impl fmt::Debug for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrongComposition({})", self)
    }
}

// ---------------------------------------------------------------------------
// WeakComposition

/// Nonnegative parts with a fixed length (the variable count it indexes).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition { parts }
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        size_of(&self.parts)
    }

    pub fn sort(&self) -> Partition {
        sort_of(&self.parts)
    }

    pub fn flat(&self) -> StrongComposition {
        flat_of(&self.parts)
    }

    pub fn padded(&self, n: usize) -> Result<WeakComposition> {
        if self.len() > n {
            return Err(Error::LengthExceedsVars { len: self.len(), nvars: n });
        }
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Ok(WeakComposition { parts })
    }
}

impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_canonical(&self.parts, &other.parts)
    }
}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.parts))
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeakComposition({})", self)
    }
}

// ---------------------------------------------------------------------------
// parsing / display

pub fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses "2,1,0" into raw parts; the empty string is the empty vector.
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// enumeration

/// Partitions of `k` in canonical order, `(k)` first.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    partitions_bounded(k, k as usize, k)
}

/// Partitions of `k` with at most `max_len` parts, each at most `max_part`.
pub fn partitions_bounded(k: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = rem.min(max_part);
        for p in (1..=hi).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(k, max_part, max_len, &mut cur, &mut out);
    out.sort();
    out
}

/// Strong compositions of `k` (all 2^(k-1) of them for k ≥ 1).
pub fn strong_compositions_of(k: u32) -> Vec<StrongComposition> {
    strong_compositions_bounded(k, k as usize)
}

/// Strong compositions of `k` with at most `max_parts` parts, canonical order.
pub fn strong_compositions_bounded(k: u32, max_parts: usize) -> Vec<StrongComposition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<StrongComposition>) {
        if rem == 0 {
            out.push(StrongComposition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(k, max_parts, &mut cur, &mut out);
    out.sort();
    out
}

/// Weak compositions of `k` into exactly `n` parts, canonical order.
pub fn weak_compositions(n: usize, k: u32) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(WeakComposition { parts: cur.clone() });
            }
            return;
        }
        if slots == 1 {
            cur.push(rem);
            out.push(WeakComposition { parts: cur.clone() });
            cur.pop();
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            rec(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    rec(k, n, &mut cur, &mut out);
    out.sort();
    out
}

/// Distinct rearrangements of the multiset of (positive) parts of `parts`
/// into exactly `slots` positions, padding with zeros.  Empty when the
/// multiset has more than `slots` positive entries.
pub fn distinct_rearrangements(parts: &[u32], slots: usize) -> Vec<Vec<u32>> {
    let positives: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
    if positives.len() > slots {
        return Vec::new();
    }
    // Multiset as (value, count), plus the padding zeros.
    let sorted = sort_of(&positives);
    let mut pool: Vec<(u32, usize)> = Vec::new();
    for &p in sorted.parts() {
        match pool.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => pool.push((p, 1)),
        }
    }
    let zeros = slots - positives.len();
    if zeros > 0 {
        pool.push((0, zeros));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(slots);
    fn rec(pool: &mut Vec<(u32, usize)>, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == slots {
            out.push(cur.clone());
            return;
        }
        for i in 0..pool.len() {
            if pool[i].1 == 0 {
                continue;
            }
            pool[i].1 -= 1;
            cur.push(pool[i].0);
            rec(pool, slots, cur, out);
            cur.pop();
            pool[i].1 += 1;
        }
    }
    rec(&mut pool, slots, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(parts: &[u32]) -> StrongComposition {
        StrongComposition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&[2, 1], &[1, 1, 1]));
        assert!(!dominance_leq(&[1, 1, 1], &[2, 1]));
        // Different sizes are incomparable in both directions.
        assert!(!dominance_leq(&[2], &[1, 1, 1]));
        assert!(!dominance_leq(&[1, 1, 1], &[2]));
        // Weak compositions compare the same way.
        assert!(dominance_leq(&[1, 0, 1], &[0, 1, 1]));
    }

    #[test]
    fn dominance_is_a_partial_order_on_small_partitions() {
        for k in 0..=8u32 {
            let ps = partitions_of(k);
            for a in &ps {
                assert!(dominance_leq(a.parts(), a.parts()));
                for b in &ps {
                    if dominance_leq(a.parts(), b.parts()) && dominance_leq(b.parts(), a.parts()) {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if dominance_leq(a.parts(), b.parts())
                            && dominance_leq(b.parts(), c.parts())
                        {
                            assert!(dominance_leq(a.parts(), c.parts()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_prime_examples() {
        assert!(dominance_prime_leq(&sc(&[2, 2]), &sc(&[1, 2, 1])).unwrap());
        assert!(!dominance_prime_leq(&sc(&[1, 2, 1]), &sc(&[2, 2])).unwrap());
        // Equal sorts fall back to swapped composition dominance.
        assert!(dominance_prime_leq(&sc(&[1, 2]), &sc(&[2, 1])).unwrap());
        assert!(!dominance_prime_leq(&sc(&[2, 1]), &sc(&[1, 2])).unwrap());
        assert!(dominance_prime_leq(&sc(&[2, 2]), &sc(&[2, 2])).unwrap());
        assert!(dominance_prime_leq(&sc(&[2, 1]), &sc(&[2, 1])).unwrap());
        assert!(dominance_prime_leq(&sc(&[1, 3]), &sc(&[2, 2])).unwrap());
        assert!(dominance_prime_leq(&sc(&[2, 2]), &sc(&[3])).is_err());
    }

    #[test]
    fn dominance_prime_is_antisymmetric_up_to_size_5() {
        for k in 1..=5u32 {
            let cs = strong_compositions_of(k);
            for a in &cs {
                assert!(dominance_prime_leq(a, a).unwrap());
                for b in &cs {
                    if a != b
                        && dominance_prime_leq(a, b).unwrap()
                        && dominance_prime_leq(b, a).unwrap()
                    {
                        panic!("antisymmetry violated at {a} / {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn refinement_blocks_example() {
        let b = sc(&[1, 2, 2, 1, 1]);
        let a = sc(&[3, 3, 1]);
        assert_eq!(
            refinement_blocks(&b, &a).unwrap(),
            vec![vec![1, 2], vec![2, 1], vec![1]]
        );
        assert!(refines(&b, &a));
        assert!(!refines(&a, &b));
        assert!(!refines(&sc(&[1, 2, 1]), &sc(&[2, 2])));
    }

    #[test]
    fn refinement_implies_dominance() {
        for k in 1..=7u32 {
            for a in strong_compositions_of(k) {
                for b in refinements_of(&a) {
                    assert!(
                        dominance_leq(a.parts(), b.parts()),
                        "refines({b}, {a}) holds but dominance fails"
                    );
                }
            }
        }
    }

    #[test]
    fn sort_flat_z_examples() {
        let (s, f, z) = sort_flat_z(&[0, 2, 1]);
        assert_eq!(s.parts(), &[2, 1]);
        assert_eq!(f.parts(), &[2, 1]);
        assert_eq!(z, Int::from(2));
        assert_eq!(z_of(&[1, 1, 2]), Int::from(4));
        assert_eq!(z_of(&[]), Int::from(1));
    }

    #[test]
    fn canonical_order_lists_most_concentrated_first() {
        let ps = partitions_of(3);
        let shown: Vec<&[u32]> = ps.iter().map(|p| p.parts()).collect();
        assert_eq!(shown, vec![&[3][..], &[2, 1][..], &[1, 1, 1][..]]);
        let cs = strong_compositions_of(3);
        let shown: Vec<&[u32]> = cs.iter().map(|c| c.parts()).collect();
        assert_eq!(
            shown,
            vec![&[3][..], &[2, 1][..], &[1, 2][..], &[1, 1, 1][..]]
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(strong_compositions_of(6).len(), 32);
        assert_eq!(weak_compositions(3, 4).len(), 15);
        assert_eq!(strong_compositions_bounded(4, 2).len(), 4);
    }

    #[test]
    fn rearrangements_are_distinct_and_complete() {
        let r = distinct_rearrangements(&[2, 1], 3);
        assert_eq!(r.len(), 6);
        let r = distinct_rearrangements(&[1, 1], 3);
        assert_eq!(r.len(), 3);
        assert!(distinct_rearrangements(&[1, 1, 1, 1], 3).is_empty());
    }

    #[test]
    fn coarsenings_carry_their_blocks() {
        let a = sc(&[1, 1, 2]);
        let cs = coarsenings_of(&a);
        assert_eq!(cs.len(), 4);
        let betas: Vec<String> = cs.iter().map(|(b, _)| b.to_string()).collect();
        assert!(betas.contains(&"2,2".to_string()));
        assert!(betas.contains(&"1,3".to_string()));
        assert!(betas.contains(&"4".to_string()));
    }

    #[test]
    fn conjugate_and_strictness() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert!(p.is_strict());
        assert!(!Partition::new(vec![2, 2]).unwrap().is_strict());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_parts("2,x").is_err());
        assert_eq!(parse_parts("2,1,0").unwrap(), vec![2, 1, 0]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrongComposition::new(vec![1, 0, 2]).is_err());
    }
}
