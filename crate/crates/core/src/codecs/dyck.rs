use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Zero;

use super::catalan::catalan;
use super::tree::BinaryTree;
use crate::error::{Error, Result};

/// A balanced word over `{0, 1}`: no prefix has more 1s than 0s.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyckWord(Vec<bool>);

impl DyckWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, &b) in bits.iter().enumerate() {
            height += if b { -1 } else { 1 };
            if height < 0 {
                return Err(Error::InvalidDyck(format!("prefix of length {} has more 1s than 0s", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyck(format!("{height} unmatched 0s")));
        }
        Ok(DyckWord(bits))
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Half the length.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord({self})")
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidDyck(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWord::new(bits)
    }
}

/// Number of ways to finish from height `h` with `len` symbols left.
fn completions(len: usize, h: usize) -> BigUint {
    if h > len || (len - h) % 2 != 0 {
        return BigUint::zero();
    }
    let opens = (len - h) / 2;
    let all = binomial(BigUint::from(len), BigUint::from(opens));
    if opens == 0 {
        all
    } else {
        all - binomial(BigUint::from(len), BigUint::from(opens - 1))
    }
}

/// Lexicographic rank (0 before 1) among Dyck words of the same length.
pub fn dyck_rank(w: &DyckWord) -> BigUint {
    let len = w.0.len();
    let mut rank = BigUint::zero();
    let mut h = 0usize;
    for (i, &b) in w.0.iter().enumerate() {
        if b {
            rank += completions(len - i - 1, h + 1);
            h -= 1;
        } else {
            h += 1;
        }
    }
    rank
}

pub fn dyck_unrank(n: usize, r: &BigUint) -> Result<DyckWord> {
    let total = catalan(n);
    if *r >= total {
        return Err(Error::RankOutOfRange {
            rank: r.to_string(),
            universe: total.to_string(),
        });
    }
    let len = 2 * n;
    let mut r = r.clone();
    let mut h = 0usize;
    let mut bits = Vec::with_capacity(len);
    for i in 0..len {
        let with_zero = completions(len - i - 1, h + 1);
        if r < with_zero {
            bits.push(false);
            h += 1;
        } else {
            r -= with_zero;
            bits.push(true);
            h -= 1;
        }
    }
    Ok(DyckWord(bits))
}

/// All Dyck words of half-length `n` in lexicographic order.
pub fn enumerate_dyck(n: usize) -> Vec<DyckWord> {
    fn go(n: usize, opens: usize, closes: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckWord>) {
        if cur.len() == 2 * n {
            out.push(DyckWord(cur.clone()));
            return;
        }
        if opens < n {
            cur.push(false);
            go(n, opens + 1, closes, cur, out);
            cur.pop();
        }
        if closes < opens {
            cur.push(true);
            go(n, opens, closes + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// `0 D(L) 1 D(R)`.
pub fn tree_to_dyck(t: &BinaryTree) -> DyckWord {
    fn go(t: &BinaryTree, out: &mut Vec<bool>) {
        if let BinaryTree::Node(l, r) = t {
            out.push(false);
            go(l, out);
            out.push(true);
            go(r, out);
        }
    }
    let mut bits = Vec::with_capacity(2 * t.size());
    go(t, &mut bits);
    DyckWord(bits)
}

pub fn dyck_to_tree(w: &DyckWord) -> BinaryTree {
    fn go(bits: &[bool]) -> BinaryTree {
        if bits.is_empty() {
            return BinaryTree::Empty;
        }
        let mut h = 0i64;
        for (i, &b) in bits.iter().enumerate() {
            h += if b { -1 } else { 1 };
            if h == 0 {
                return BinaryTree::node(go(&bits[1..i]), go(&bits[i + 1..]));
            }
        }
        unreachable!("validated Dyck word")
    }
    go(&w.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::enumerate_trees;

    #[test]
    fn small_words() {
        let w: DyckWord = "01".parse().unwrap();
        assert_eq!(dyck_rank(&w), BigUint::zero());
        let a: DyckWord = "0011".parse().unwrap();
        let b: DyckWord = "0101".parse().unwrap();
        assert_eq!(dyck_rank(&a), BigUint::from(0u32));
        assert_eq!(dyck_rank(&b), BigUint::from(1u32));
        assert!("10".parse::<DyckWord>().is_err());
        assert!("001".parse::<DyckWord>().is_err());
    }

    #[test]
    fn ranks_follow_enumeration() {
        for n in 0..=8 {
            let words = enumerate_dyck(n);
            assert_eq!(BigUint::from(words.len()), catalan(n));
            let mut sorted: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            sorted.sort();
            assert_eq!(sorted, words.iter().map(|w| w.to_string()).collect::<Vec<_>>());
            for (i, w) in words.iter().enumerate() {
                assert_eq!(dyck_rank(w), BigUint::from(i));
                assert_eq!(&dyck_unrank(n, &BigUint::from(i)).unwrap(), w);
            }
        }
    }

    #[test]
    fn tree_bijection() {
        for n in 0..=8 {
            let mut seen = std::collections::HashSet::new();
            for t in enumerate_trees(n) {
                let w = tree_to_dyck(&t);
                assert!(DyckWord::new(w.bits().to_vec()).is_ok());
                assert_eq!(dyck_to_tree(&w), t);
                assert!(seen.insert(w));
            }
        }
    }
}
