use std::cmp::Ordering;

use super::harness::{Decision, OnlineAlgorithm, Player, StartInfo, TapeReader, View};
use crate::codecs::{catalan, tree_rank, tree_unrank, write_ranked, AdviceTape, BinaryTree};
use crate::error::{Error, Result};
use crate::geometry::{half_plane_side, orientation, Instance, Kind, Matching, Orientation, Side};
use crate::offline::{convex_noncrossing_pm, matching_to_bt};

/// Tree-guided BNM matching for points in convex position.
#[derive(Debug, Clone, Copy, Default)]
pub struct BtMatching;

impl BtMatching {
    /// The tree the oracle encodes for `instance`.
    pub fn advice_tree(instance: &Instance) -> Result<BinaryTree> {
        let m = convex_noncrossing_pm(instance)?;
        matching_to_bt(instance, &m)
    }
}

impl OnlineAlgorithm for BtMatching {
    fn name(&self) -> String {
        "bt".into()
    }

    fn check(&self, instance: &Instance) -> Result<()> {
        if instance.kind() != Kind::Bnm {
            return Err(Error::Precondition("BT matching is for BNM instances".into()));
        }
        if !instance.is_convex_position() {
            return Err(Error::Precondition("BT matching needs points in convex position".into()));
        }
        Ok(())
    }

    fn oracle(&self, instance: &Instance, tape: &mut AdviceTape) -> Result<()> {
        let tree = Self::advice_tree(instance)?;
        write_ranked(tape, &tree_rank(&tree), &catalan(instance.n()))
    }

    fn player(&self) -> Box<dyn Player> {
        Box::new(BtPlayer::default())
    }
}

/// BT matching whose oracle encodes a given perfect non-crossing matching
/// instead of computing its own.
#[derive(Debug, Clone)]
pub struct BtReplay {
    pub matching: Matching,
}

impl OnlineAlgorithm for BtReplay {
    fn name(&self) -> String {
        "bt-replay".into()
    }

    fn check(&self, instance: &Instance) -> Result<()> {
        BtMatching.check(instance)
    }

    fn oracle(&self, instance: &Instance, tape: &mut AdviceTape) -> Result<()> {
        let tree = matching_to_bt(instance, &self.matching)?;
        write_ranked(tape, &tree_rank(&tree), &catalan(instance.n()))
    }

    fn player(&self) -> Box<dyn Player> {
        Box::new(BtPlayer::default())
    }
}

#[derive(Debug, Clone)]
struct Node {
    left: Option<usize>,
    right: Option<usize>,
    left_size: usize,
    /// `(red, blue)` once the node's edge is drawn.
    label: Option<(usize, usize)>,
}

#[derive(Debug, Default)]
struct BtPlayer {
    nodes: Vec<Node>,
}

impl BtPlayer {
    fn load(&mut self, t: &BinaryTree) -> Option<usize> {
        let BinaryTree::Node(l, r) = t else {
            return None;
        };
        let id = self.nodes.len();
        self.nodes.push(Node {
            left: None,
            right: None,
            left_size: l.size(),
            label: None,
        });
        let left = self.load(l);
        let right = self.load(r);
        self.nodes[id].left = left;
        self.nodes[id].right = right;
        Some(id)
    }
}

impl Player for BtPlayer {
    fn start(&mut self, info: &StartInfo, tape: &mut TapeReader<'_>) -> Result<()> {
        let n = info.n.expect("BNM players know n");
        let rank = tape.read_ranked(&catalan(n))?;
        let tree = tree_unrank(n, &rank)?;
        self.nodes.clear();
        self.load(&tree);
        Ok(())
    }

    fn decide(&mut self, view: &View<'_>, _: &mut TapeReader<'_>) -> Result<Decision> {
        let r = view.current();
        let me = view.point(r);
        let inconsistent = || Error::Precondition(format!("advice tree does not fit red point {}", r + 1));
        let mut t = if self.nodes.is_empty() { None } else { Some(0) };
        while let Some(id) = t {
            let Some((lr, lb)) = self.nodes[id].label else {
                break;
            };
            t = match half_plane_side((view.point(lr), view.point(lb)), me)? {
                Side::Left => self.nodes[id].left,
                Side::Right => self.nodes[id].right,
            };
        }
        let id = t.ok_or_else(inconsistent)?;
        let k = self.nodes[id].left_size + 1;

        // clockwise from r: b1 precedes b2 iff b1 lies left of r -> b2
        let mut blues = view.available().to_vec();
        blues.sort_by(|&b1, &b2| {
            if b1 == b2 {
                return Ordering::Equal;
            }
            match orientation(me, view.point(b2), view.point(b1)) {
                Orientation::Left => Ordering::Less,
                _ => Ordering::Greater,
            }
        });
        let b = *blues.get(k - 1).ok_or_else(inconsistent)?;
        self.nodes[id].label = Some((r, b));
        Ok(Decision::Match(b))
    }
}
