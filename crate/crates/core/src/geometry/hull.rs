use super::predicates::{orientation, Orientation};
use super::{Instance, Point};
use crate::error::{Error, Result};

/// Clockwise order of `points` along their convex hull, starting at
/// `points[0]`, as positions into the slice.
///
/// Fails with [`Error::NotConvex`] (carrying the offending position) when a
/// point is not a strict hull vertex.
pub fn hull_order_points(points: &[&Point]) -> Result<Vec<usize>> {
    let m = points.len();
    if m <= 2 {
        return Ok((0..m).collect());
    }
    if points.iter().all(|p| p.angle.is_some()) {
        let mut idx: Vec<usize> = (0..m).collect();
        // clockwise = decreasing angle
        idx.sort_by(|&a, &b| points[b].angle.cmp(&points[a].angle));
        for w in idx.windows(2) {
            if points[w[0]].angle == points[w[1]].angle {
                return Err(Error::NotConvex(w[1]));
            }
        }
        let start = idx.iter().position(|&i| i == 0).unwrap();
        idx.rotate_left(start);
        return Ok(idx);
    }

    // Andrew's monotone chain, strict turns only, counter-clockwise.
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&a, &b| (&points[a].x, &points[a].y).cmp(&(&points[b].x, &points[b].y)));
    let turn = |a: usize, b: usize, c: usize| orientation(points[a], points[b], points[c]);
    let mut hull: Vec<usize> = Vec::with_capacity(2 * m);
    for pass in 0..2 {
        let base = hull.len();
        let seq: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in seq {
            while hull.len() >= base + 2
                && turn(hull[hull.len() - 2], hull[hull.len() - 1], i) != Orientation::Left
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    if hull.len() != m {
        let mut on_hull = vec![false; m];
        for &i in &hull {
            on_hull[i] = true;
        }
        let missing = (0..m).find(|&i| !on_hull[i]).unwrap_or(0);
        return Err(Error::NotConvex(missing));
    }
    hull.reverse();
    let start = hull.iter().position(|&i| i == 0).unwrap();
    hull.rotate_left(start);
    Ok(hull)
}

/// Clockwise hull order of all points of `instance`, starting at `p_1`.
pub fn hull_order(instance: &Instance) -> Result<Vec<usize>> {
    if let Some(rank) = instance.hull_rank() {
        let mut order = vec![0; rank.len()];
        for (i, &r) in rank.iter().enumerate() {
            order[r] = i;
        }
        return Ok(order);
    }
    let refs: Vec<&Point> = instance.points().iter().collect();
    hull_order_points(&refs)
}

/// Parity of every point: its clockwise hull rank (from `p_1`) modulo 2.
pub fn parity(instance: &Instance) -> Result<Vec<u8>> {
    let order = hull_order(instance)?;
    let mut bits = vec![0u8; order.len()];
    for (r, &i) in order.iter().enumerate() {
        bits[i] = (r % 2) as u8;
    }
    Ok(bits)
}
