use std::fmt;

use num_bigint::BigUint;

use super::catalan::catalan;
use super::tree::{tree_unrank, BinaryTree};
use crate::error::{Error, Result};

/// Default largest `n` for exhaustive 231-avoiding enumeration.
pub const DEFAULT_PERM_CAP: usize = 10;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(values));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sigma_i` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// First 1-based positions `i < j < k` with `s_k < s_i < s_j`, if any.
    pub fn find_231(&self) -> Option<(usize, usize, usize)> {
        let s = &self.0;
        for i in 0..s.len() {
            let Some(j) = (i + 1..s.len()).find(|&j| s[j] > s[i]) else {
                continue;
            };
            if let Some(k) = (j + 1..s.len()).find(|&k| s[k] < s[i]) {
                return Some((i + 1, j + 1, k + 1));
            }
        }
        None
    }

    pub fn is_231_avoiding(&self) -> bool {
        self.find_231().is_none()
    }

    pub fn ensure_231_avoiding(&self) -> Result<()> {
        match self.find_231() {
            Some(w) => Err(Error::Not231Avoiding(w)),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `perm(T) = perm(L), n, perm(R) + |L|`.
pub fn tree_to_perm(t: &BinaryTree) -> Permutation {
    fn go(t: &BinaryTree, offset: usize, out: &mut Vec<usize>) {
        if let BinaryTree::Node(l, r) = t {
            let ls = l.size();
            go(l, offset, out);
            out.push(offset + ls + r.size() + 1);
            go(r, offset + ls, out);
        }
    }
    let mut v = Vec::with_capacity(t.size());
    go(t, 0, &mut v);
    Permutation(v)
}

/// Inverse of [`tree_to_perm`]: split at the maximum, left values are all
/// smaller than right values exactly when no 231 pattern uses the maximum.
pub fn perm_to_tree(s: &Permutation) -> Result<BinaryTree> {
    s.ensure_231_avoiding()?;
    fn go(vals: &[usize]) -> BinaryTree {
        if vals.is_empty() {
            return BinaryTree::Empty;
        }
        let top = vals.iter().enumerate().max_by_key(|(_, &v)| v).unwrap().0;
        BinaryTree::node(go(&vals[..top]), go(&vals[top + 1..]))
    }
    Ok(go(&s.0))
}

/// All 231-avoiding permutations of size `n`, each exactly once, in tree-rank
/// order.
pub fn enumerate_231_avoiding(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    enumerate_231_avoiding_capped(n, DEFAULT_PERM_CAP)
}

pub fn enumerate_231_avoiding_capped(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Permutation>> {
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let total = catalan(n);
    let mut r = BigUint::from(0u32);
    Ok(std::iter::from_fn(move || {
        if r >= total {
            return None;
        }
        let t = tree_unrank(n, &r).expect("rank below C_n");
        r += 1u32;
        Some(tree_to_perm(&t))
    }))
}
