use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::catalan::catalan_table;
use crate::error::{Error, Result};

/// A rooted ordered binary tree; every node has a left and a right slot.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, _) => Some(l),
        }
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(_, r) => Some(r),
        }
    }
}

/// Parenthesized form: `()` is empty, `(L R)` a node.
impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l:?} {r:?})"),
        }
    }
}

fn rank_with(t: &BinaryTree, cat: &[BigUint]) -> (usize, BigUint) {
    match t {
        BinaryTree::Empty => (0, BigUint::zero()),
        BinaryTree::Node(l, r) => {
            let (ls, lr) = rank_with(l, cat);
            let (rs, rr) = rank_with(r, cat);
            let n = 1 + ls + rs;
            let mut rank: BigUint = (0..ls).map(|k| &cat[k] * &cat[n - 1 - k]).sum();
            rank += lr * &cat[rs] + rr;
            (n, rank)
        }
    }
}

/// Rank of `t` among trees of its size: ordered by left-subtree size, then
/// left rank, then right rank.
pub fn tree_rank(t: &BinaryTree) -> BigUint {
    let cat = catalan_table(t.size());
    rank_with(t, &cat).1
}

fn unrank_with(n: usize, mut r: BigUint, cat: &[BigUint]) -> BinaryTree {
    if n == 0 {
        return BinaryTree::Empty;
    }
    let mut ls = 0;
    loop {
        let block = &cat[ls] * &cat[n - 1 - ls];
        if r < block {
            break;
        }
        r -= block;
        ls += 1;
    }
    let rs = n - 1 - ls;
    let left = unrank_with(ls, &r / &cat[rs], cat);
    let right = unrank_with(rs, r % &cat[rs], cat);
    BinaryTree::node(left, right)
}

pub fn tree_unrank(n: usize, r: &BigUint) -> Result<BinaryTree> {
    let cat = catalan_table(n);
    if *r >= cat[n] {
        return Err(Error::RankOutOfRange {
            rank: r.to_string(),
            universe: cat[n].to_string(),
        });
    }
    Ok(unrank_with(n, r.clone(), &cat))
}

/// All trees with `n` nodes in rank order (built directly, not by unranking).
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
    for m in 1..=n {
        let mut all = Vec::new();
        for ls in 0..m {
            for l in &by_size[ls] {
                for r in &by_size[m - 1 - ls] {
                    all.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(all);
    }
    by_size.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codecs::catalan;

    #[test]
    fn n1_and_n2() {
        assert_eq!(tree_rank(&BinaryTree::leaf()), BigUint::zero());
        let right_child = BinaryTree::node(BinaryTree::Empty, BinaryTree::leaf());
        let left_child = BinaryTree::node(BinaryTree::leaf(), BinaryTree::Empty);
        assert_eq!(tree_rank(&right_child), BigUint::from(0u32));
        assert_eq!(tree_rank(&left_child), BigUint::from(1u32));
    }

    #[test]
    fn rank_is_enumeration_position() {
        for n in 0..=8 {
            let all = enumerate_trees(n);
            assert_eq!(BigUint::from(all.len()), catalan(n));
            for (i, t) in all.iter().enumerate() {
                assert_eq!(t.size(), n);
                assert_eq!(tree_rank(t), BigUint::from(i));
                assert_eq!(&tree_unrank(n, &BigUint::from(i)).unwrap(), t);
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            tree_unrank(3, &BigUint::from(5u32)),
            Err(Error::RankOutOfRange { .. })
        ));
    }
}
