use crate::codecs::BinaryTree;
use crate::error::{Error, Result};
use crate::geometry::{Color, Edge, Instance, Kind, Matching, Orientation};

/// The tree of a perfect non-crossing red-blue matching: the root stands for
/// the first red point's edge, and the two subtrees for the edges on its left
/// and right.
pub fn matching_to_bt(inst: &Instance, m: &Matching) -> Result<BinaryTree> {
    if inst.kind() != Kind::Bnm {
        return Err(Error::Precondition("matching_to_bt needs a BNM instance".into()));
    }
    if !inst.is_convex_position() {
        return Err(Error::NotConvex(0));
    }
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m.len());
    for (a, b) in m.edges() {
        let (red, blue) = match (inst.point(a).color, inst.point(b).color) {
            (Some(Color::Red), Some(Color::Blue)) => (a, b),
            (Some(Color::Blue), Some(Color::Red)) => (b, a),
            _ => return Err(Error::NotPerfect(format!("edge {:?} is not red-blue", (a, b)))),
        };
        edges.push((red, blue));
    }
    if edges.len() != inst.n() || m.matched_points() != inst.len() {
        return Err(Error::NotPerfect(format!(
            "{} of {} points matched",
            m.matched_points(),
            inst.len()
        )));
    }
    // reds in arrival order
    edges.sort_unstable();
    build(inst, &edges)
}

fn build(inst: &Instance, edges: &[(usize, usize)]) -> Result<BinaryTree> {
    let Some((&(r1, b), rest)) = edges.split_first() else {
        return Ok(BinaryTree::Empty);
    };
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &(r, bb) in rest {
        let sr = inst.orient(r1, b, r);
        let sb = inst.orient(r1, b, bb);
        if sr != sb || sr == Orientation::Collinear {
            return Err(Error::CrossingDetected(norm(r1, b), norm(r, bb)));
        }
        if sr == Orientation::Left {
            left.push((r, bb));
        } else {
            right.push((r, bb));
        }
    }
    Ok(BinaryTree::node(build(inst, &left)?, build(inst, &right)?))
}

fn norm(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{GeometryClass, Point};
    use crate::Rational;

    fn bnm(blue: &[(i64, i64)], red: &[(i64, i64)]) -> Instance {
        let pts = blue
            .iter()
            .map(|&t| Point::on_circle(Rational::new(t.0, t.1)).with_color(Some(Color::Blue)))
            .chain(red.iter().map(|&t| Point::on_circle(Rational::new(t.0, t.1)).with_color(Some(Color::Red))))
            .collect();
        Instance::new(pts, Kind::Bnm, GeometryClass::Circle).unwrap()
    }

    #[test]
    fn single_node() {
        let inst = bnm(&[(1, 4)], &[(3, 4)]);
        let m = Matching::from_edges_unchecked([(0, 1)]);
        assert_eq!(matching_to_bt(&inst, &m).unwrap(), BinaryTree::leaf());
    }

    #[test]
    fn nested_pair() {
        // clockwise from r1: r1 7/8, r2 5/8, b1 3/8, b2 1/8
        let inst = bnm(&[(3, 8), (1, 8)], &[(7, 8), (5, 8)]);
        // r2-b1 lies clockwise between r1 and b2, i.e. on the left of r1 -> b2
        let m = Matching::from_edges_unchecked([(2, 1), (3, 0)]);
        let t = matching_to_bt(&inst, &m).unwrap();
        assert_eq!(t, BinaryTree::node(BinaryTree::leaf(), BinaryTree::Empty));
        // r1-b1 with r2-b2 on the left: r2 (5/8) lies clockwise between r1 and b1
        let m = Matching::from_edges_unchecked([(2, 0), (3, 1)]);
        assert!(matches!(matching_to_bt(&inst, &m), Err(Error::CrossingDetected(..))));
    }

    #[test]
    fn not_perfect() {
        let inst = bnm(&[(3, 8), (1, 8)], &[(7, 8), (5, 8)]);
        let m = Matching::from_edges_unchecked([(2, 1)]);
        assert!(matches!(matching_to_bt(&inst, &m), Err(Error::NotPerfect(_))));
    }
}
