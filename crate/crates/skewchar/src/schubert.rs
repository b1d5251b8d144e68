//! Partition complements in a rectangle and the restricted (star) product.
//!
//! Schubert classes are represented purely by their partition labels inside
//! a fixed `cols x rows` rectangle. The star product restricts the ordinary
//! LR product to the partitions fitting the rectangle; the duality check
//! relates the coefficients of a skew character to such a restricted
//! product through rectangle complements.

use crate::error::Error;
use crate::lr::{lr_coefficient, skew_character, Decomposition};
use crate::partition::{partitions_in_box, partitions_of_weight_bounded, Partition};
use crate::skew::SkewDiagram;

/// The rectangle `(cols^rows)`: partitions fit when they have at most
/// `rows` parts, each at most `cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxSpec {
    pub cols: usize,
    pub rows: usize,
}

impl BoxSpec {
    pub fn new(cols: usize, rows: usize) -> Self {
        BoxSpec { cols, rows }
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.rows && p.part_at(0) <= self.cols
    }

    /// The full rectangle as a partition.
    pub fn full(&self) -> Partition {
        Partition::from_valid(vec![self.cols; self.rows])
    }
}

/// The 180-degree rotation of the set difference `(cols^rows)/p`:
/// `result_i = cols - p_{rows+1-i}`. An involution on partitions fitting
/// the box.
pub fn complement_in_box(p: &Partition, bx: &BoxSpec) -> Result<Partition, Error> {
    if !bx.fits(p) {
        return Err(Error::DoesNotFit {
            partition: p.clone(),
            cols: bx.cols,
            rows: bx.rows,
        });
    }
    let parts = (0..bx.rows)
        .map(|i| bx.cols - p.part_at(bx.rows - 1 - i))
        .collect();
    Ok(Partition::from_valid(parts))
}

/// The ordinary LR product of `[mu]` and `[nu]` with the terms outside the
/// box dropped; coefficients of surviving terms are unchanged.
pub fn star_product(mu: &Partition, nu: &Partition, bx: &BoxSpec) -> Decomposition {
    let total = mu.weight() + nu.weight();
    let mut out = Decomposition::new();
    for kappa in partitions_of_weight_bounded(total, bx.cols, bx.rows) {
        out.add(kappa.clone(), lr_coefficient(&kappa, mu, nu));
    }
    out
}

/// Checks, for every partition in the box, that the coefficient of `alpha`
/// in `[lam/mu]` equals the coefficient of the complement of `alpha` in
/// `[mu] star [complement of lam]`.
pub fn duality_check(mu: &Partition, lam: &Partition, bx: &BoxSpec) -> Result<bool, Error> {
    if !bx.fits(lam) {
        return Err(Error::DoesNotFit {
            partition: lam.clone(),
            cols: bx.cols,
            rows: bx.rows,
        });
    }
    let shape = SkewDiagram::new(lam.clone(), mu.clone())?;
    let left = skew_character(&shape);
    let right = star_product(mu, &complement_in_box(lam, bx)?, bx);
    for alpha in partitions_in_box(bx.cols, bx.rows) {
        let alpha_inv = complement_in_box(&alpha, bx)?;
        if left.coeff(&alpha) != right.coeff(&alpha_inv) {
            return Ok(false);
        }
    }
    Ok(true)
}
