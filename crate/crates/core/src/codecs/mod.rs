//! Catalan objects and advice-tape coding.
//!
//! Binary trees, Dyck words and 231-avoiding permutations are each counted by
//! the Catalan numbers; this module ranks them into `[0, C_n)` and converts
//! between them. The advice tape is a finite bit string with a read cursor.

mod catalan;
mod dyck;
mod elias;
mod perm;
mod tape;
mod tree;

pub use catalan::{catalan, catalan_table, ceil_log2, ranked_width};
pub use dyck::{dyck_rank, dyck_to_tree, dyck_unrank, enumerate_dyck, tree_to_dyck, DyckWord};
pub use elias::{elias_delta_decode, elias_delta_encode, elias_delta_len};
pub use perm::{
    enumerate_231_avoiding, enumerate_231_avoiding_capped, perm_to_tree, tree_to_perm, Permutation,
    DEFAULT_PERM_CAP,
};
pub use tape::{read_ranked, write_ranked, AdviceTape};
pub use tree::{enumerate_trees, tree_rank, tree_unrank, BinaryTree};
