//! Lower-bound instance families and the machinery that checks them.
//!
//! - [`bnm`]: blue points on the upper semicircle and red points placed by
//!   arc-midpoint insertion from a permutation.
//! - [`mnm_family`]: the fixed-prefix circle family, its parity fingerprints,
//!   and prior-matching consistency.
//! - [`markov`] and [`coupling`]: the Markov-chain adversary and the per-match
//!   indicator diagnostics computed from a simulation.
//! - [`rate`]: relative entropy and the approximation rate function.
//! - [`cover`]: the minimum number of deterministic strategies that solve a
//!   finite family.

pub mod bnm;
pub mod coupling;
pub mod cover;
pub mod markov;
pub mod mnm_family;
pub mod rate;

use serde::{Deserialize, Serialize};

use crate::codecs::Permutation;
use crate::geometry::Instance;

pub use bnm::{bnm_blue_positions, bnm_red_instance, bnm_red_instance_unchecked, red_turns};
pub use coupling::{coupling_diagnostics, CouplingReport, Occupancy};
pub use cover::{min_strategy_cover, solvable_antichain, DEFAULT_COVER_CAP};
pub use markov::{markov_instance, MarkovTrace, RNG_ID};
pub use mnm_family::{
    consistent, family_members, family_size, has_perfect_completion, mnm_family_instance,
    parity_fingerprint, prefix_priors, ConsistencyReport,
};
pub use rate::{approx_lb_rate, kl_divergence, RateVariant};

/// What a generator knows about its instance beyond the points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Hidden {
    None,
    BnmPerm { sigma: Vec<usize> },
    MnmFamily { k: usize, j: usize, subset: Vec<usize> },
    Markov(MarkovTrace),
}

/// An instance together with its generating data.
#[derive(Debug, Clone)]
pub struct AnnotatedInstance {
    pub instance: Instance,
    pub hidden: Hidden,
}

impl AnnotatedInstance {
    pub fn plain(instance: Instance) -> Self {
        AnnotatedInstance {
            instance,
            hidden: Hidden::None,
        }
    }

    pub fn permutation(&self) -> Option<Permutation> {
        match &self.hidden {
            Hidden::BnmPerm { sigma } => Permutation::new(sigma.clone()).ok(),
            _ => None,
        }
    }

    pub fn markov(&self) -> Option<&MarkovTrace> {
        match &self.hidden {
            Hidden::Markov(t) => Some(t),
            _ => None,
        }
    }
}
