//! Monomials in non-commuting variables `x_1..x_r`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::multinomial;
use crate::{Error, Result};

/// A word over variable indices `1..=r`, e.g. `[1, 2, 1]` for `x_1 x_2 x_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidParameter("monomial must be nonempty"));
        }
        if word.contains(&0) {
            return Err(Error::InvalidParameter("variable indices start at 1"));
        }
        Ok(Monomial(word))
    }

    /// `x_1^k`.
    pub fn power(k: usize) -> Result<Self> {
        Monomial::new(vec![1; k])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Total degree `k`.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Largest variable index occurring.
    pub fn num_vars(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Per-variable degrees `(k_1, ..., k_r)` with `r = num_vars`.
    pub fn multidegree(&self) -> MultiDegree {
        self.multidegree_in(self.num_vars())
    }

    /// Per-variable degrees padded to `r >= num_vars` variables.
    pub fn multidegree_in(&self, r: usize) -> MultiDegree {
        let mut kappa = vec![0; r.max(self.num_vars())];
        for &v in &self.0 {
            kappa[v - 1] += 1;
        }
        MultiDegree(kappa)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Exponent profile `kappa = (k_1, ..., k_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiDegree(Vec<usize>);

impl MultiDegree {
    pub fn new(kappa: Vec<usize>) -> Result<Self> {
        if kappa.is_empty() || kappa.iter().all(|&k| k == 0) {
            return Err(Error::InvalidParameter("multidegree must have positive total"));
        }
        Ok(MultiDegree(kappa))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `|Omega_kappa|`, the multinomial coefficient.
    pub fn word_count(&self) -> Option<u128> {
        multinomial(&self.0)
    }

    /// All words with exactly `k_i` occurrences of `x_i`, in lexicographic
    /// order (distinct multiset permutations).
    pub fn words(&self) -> Vec<Monomial> {
        let mut w: Vec<usize> = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| core::iter::repeat_n(i + 1, k))
            .collect();
        let mut out = vec![Monomial(w.clone())];
        while next_permutation(&mut w) {
            out.push(Monomial(w.clone()));
        }
        out
    }
}

/// Advances to the next lexicographic permutation; `false` after the last.
/// Duplicates are skipped naturally, so multisets yield distinct words.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every word over `x_1..x_r` of length `1..=max_degree`, shorter words
/// first, each length in lexicographic order.
pub fn all_words(r: usize, max_degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    for len in 1..=max_degree {
        let mut w = vec![1; len];
        'words: loop {
            out.push(Monomial(w.clone()));
            let mut i = len;
            loop {
                if i == 0 {
                    break 'words;
                }
                i -= 1;
                if w[i] < r {
                    w[i] += 1;
                    w[i + 1..].fill(1);
                    break;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    #[test]
    fn monomial_degrees() {
        let w = Monomial::new(vec![1, 2, 1]).unwrap();
        assert_eq!(w.degree(), 3);
        assert_eq!(w.num_vars(), 2);
        assert_eq!(w.multidegree().parts(), &[2, 1]);
        assert_eq!(w.multidegree_in(3).parts(), &[2, 1, 0]);
        assert!(Monomial::new(vec![]).is_err());
        assert!(Monomial::new(vec![0, 1]).is_err());
        assert_eq!(w.to_string(), "1,2,1");
    }

    #[test]
    fn omega_kappa_sizes_and_order() {
        let k = MultiDegree::new(vec![1, 1]).unwrap();
        let words: Vec<Vec<usize>> = k.words().iter().map(|w| w.letters().to_vec()).collect();
        assert_eq!(words, vec![vec![1, 2], vec![2, 1]]);
        for kappa in [vec![2, 2], vec![2, 1], vec![1, 1, 1], vec![2, 2, 2], vec![3]] {
            let m = MultiDegree::new(kappa.clone()).unwrap();
            let words = m.words();
            assert_eq!(words.len() as u128, m.word_count().unwrap());
            let set: BTreeSet<_> = words.iter().cloned().collect();
            assert_eq!(set.len(), words.len());
            assert!(words.windows(2).all(|p| p[0] < p[1]));
            assert!(words.iter().all(|w| w.multidegree_in(kappa.len()).parts() == kappa.as_slice()));
        }
        assert_eq!(MultiDegree::new(vec![2, 2, 2]).unwrap().words().len(), 90);
    }

    #[test]
    fn all_words_enumeration() {
        let w = all_words(2, 3);
        assert_eq!(w.len(), 2 + 4 + 8);
        assert_eq!(w[0].letters(), &[1]);
        assert_eq!(w[2].letters(), &[1, 1]);
        assert_eq!(w[13].letters(), &[2, 2, 2]);
        assert_eq!(all_words(2, 4).len(), 30);
        assert_eq!(all_words(1, 3).len(), 3);
    }
}
