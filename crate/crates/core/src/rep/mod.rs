//! `GL(V)` weight combinatorics: weights, partitions, the raising and
//! lowering operators `E^i_j`, weight-space bases of `S^d(∧²V) ⊗ S^{d²-d}V`,
//! the highest weight vectors `ṽ_j`, plethysm multiplicities, the Pieri
//! components of `S_{(d,d)}V ⊗ S^{d²-d}V` and Weyl dimensions for `GL_3`.

mod hwv;
mod raise;
mod weight;

pub use hwv::{
    curly_weight_space, highest_weight_vectors, hwv_tilde, multiplicity, plethysm_weight_basis,
    weight_basis_curly,
};
pub use raise::Raise;
pub use weight::{weight_of, GLWeight, Partition, Weighted};

use crate::error::{Error, Result};

/// The components `S_{(d²-j,d,j)}V`, `0 ≤ j ≤ min(d, d²-d)`, of
/// `S_{(d,d)}V ⊗ S^{d²-d}V`.
pub fn pieri_components(d: u32) -> Vec<Partition> {
    (0..=d.min(d * d - d))
        .map(|j| Partition::from_parts_unchecked(vec![d * d - j, d, j]))
        .collect()
}

/// Dimension of the irreducible `GL_3`-module `S_λ ℂ³`.
pub fn weyl_dim(lambda: &Partition) -> Result<u128> {
    if lambda.len() > 3 {
        return Err(Error::InvalidArgument(format!(
            "{lambda} has more than 3 parts"
        )));
    }
    let [a, b, c] = lambda.padded::<3>().map(u128::from);
    Ok((a - b + 1) * (b - c + 1) * (a - c + 2) / 2)
}
