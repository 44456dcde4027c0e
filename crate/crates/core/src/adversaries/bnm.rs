//! Circle instances from permutations.
//!
//! Blue `b_i` sits at turn `(1 - i/(n+1)) / 2`, so blues run left to right
//! along the upper semicircle. Reds live on the lower semicircle, whose arcs
//! are ordered left to right (increasing turn from 1/2 to 1); `r_i` goes to
//! the midpoint of arc number `1 + #{k < i : sigma_k < sigma_i}`, which makes
//! `sigma_i` the final left-to-right rank of `r_i`. On the figure permutation
//! this agrees with `min(i, sigma_i)`; on `(3, 2, 1)` that rule would not.

use super::{AnnotatedInstance, Hidden};
use crate::codecs::Permutation;
use crate::error::Result;
use crate::geometry::{Color, GeometryClass, Instance, Kind, Point};
use crate::rational::Rational;

pub fn bnm_blue_positions(n: usize) -> Vec<Point> {
    (1..=n)
        .map(|i| {
            let turn = Rational::new((n + 1 - i) as i64, 2 * (n + 1) as i64);
            Point::on_circle(turn).with_color(Some(Color::Blue))
        })
        .collect()
}

/// Turns of `r_1, ..., r_n` for any permutation.
pub fn red_turns(sigma: &Permutation) -> Vec<Rational> {
    let mut bounds = vec![Rational::new(1, 2), Rational::one()];
    let mut out = Vec::with_capacity(sigma.len());
    for i in 1..=sigma.len() {
        let j = 1 + (1..i).filter(|&k| sigma.at(k) < sigma.at(i)).count();
        let mid = (&bounds[j - 1] + &bounds[j]).half();
        bounds.insert(j, mid.clone());
        out.push(mid);
    }
    out
}

/// The instance of any permutation, 231-avoiding or not.
pub fn bnm_red_instance_unchecked(sigma: &Permutation) -> Result<AnnotatedInstance> {
    let mut points = bnm_blue_positions(sigma.len());
    points.extend(
        red_turns(sigma)
            .into_iter()
            .map(|t| Point::on_circle(t).with_color(Some(Color::Red))),
    );
    let instance = Instance::new(points, Kind::Bnm, GeometryClass::Circle)?;
    Ok(AnnotatedInstance {
        instance,
        hidden: Hidden::BnmPerm {
            sigma: sigma.values().to_vec(),
        },
    })
}

pub fn bnm_red_instance(sigma: &Permutation) -> Result<AnnotatedInstance> {
    sigma.ensure_231_avoiding()?;
    bnm_red_instance_unchecked(sigma)
}
