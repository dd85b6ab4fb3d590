//! Permutations in one-line notation and their Lehmer codes.
//!
//! A permutation of {1..n} stands for the element of the infinite symmetric
//! group fixing everything beyond n, so codes may be read back at any length:
//! `from_code` uses the minimal embedding in which every move is legal.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// One-line notation: `word[i]` is the image of i+1; must be a
    /// rearrangement of 1..=n.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len() as u32;
        let mut seen = vec![false; word.len()];
        for &w in &word {
            if w == 0 || w > n || seen[(w - 1) as usize] {
                return Err(Error::InvalidIndex(format!(
                    "not a permutation word: {word:?}"
                )));
            }
            seen[(w - 1) as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Lehmer code: entry i counts the j > i with w(j) < w(i).  Same length
    /// as the word; trailing zeros are kept.
    pub fn lehmer_code(&self) -> Vec<u32> {
        (0..self.word.len())
            .map(|i| {
                self.word[i + 1..]
                    .iter()
                    .filter(|&&wj| wj < self.word[i])
                    .count() as u32
            })
            .collect()
    }

    /// Inverse of `lehmer_code` on the minimal symmetric group containing
    /// the code: the word has length max(len(code), max_i(code_i + i + 1)).
    pub fn from_code(code: &[u32]) -> Self {
        let n = code
            .iter()
            .enumerate()
            .map(|(i, &c)| c as usize + i + 1)
            .chain([code.len()])
            .max()
            .unwrap_or(0);
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let mut word = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0) as usize;
            word.push(remaining.remove(c));
        }
        Permutation { word }
    }

    pub fn inversions(&self) -> u64 {
        self.lehmer_code().iter().map(|&c| c as u64).sum()
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &w) in self.word.iter().enumerate() {
            word[(w - 1) as usize] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// (-1)^inversions.
    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::composition::join_parts(&self.word))
    }
}

/// All of S_n in lexicographic order of one-line words.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, word: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation { word: word.clone() });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                word.push(v as u32 + 1);
                rec(n, word, used, out);
                word.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut word, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_of_2143() {
        let w = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(w.lehmer_code(), vec![1, 0, 1, 0]);
        assert_eq!(w.inversions(), 2);
        assert_eq!(w.sign(), 1);
    }

    #[test]
    fn from_code_minimal_embedding() {
        // A code longer than its support still rebuilds the right word.
        let w = Permutation::from_code(&[1, 0, 1, 0]);
        assert_eq!(w.word(), &[2, 1, 4, 3]);
        // Codes whose entries overflow their suffix force a larger group.
        let w = Permutation::from_code(&[0, 2, 1]);
        assert_eq!(w.word(), &[1, 4, 3, 2]);
        assert_eq!(w.lehmer_code(), vec![0, 2, 1, 0]);
        // Trailing zeros only pad the identity.
        let w = Permutation::from_code(&[0, 0]);
        assert_eq!(w.word(), &[1, 2]);
    }

    #[test]
    fn code_roundtrip_on_s4() {
        for w in symmetric_group(4) {
            let back = Permutation::from_code(&w.lehmer_code());
            assert_eq!(back.word()[..4.min(back.len())], w.word()[..]);
        }
        assert_eq!(symmetric_group(4).len(), 24);
    }

    #[test]
    fn inverse_and_validation() {
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(w.inverse().word(), &[2, 3, 1]);
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
    }
}
