//! Structural multiplicity-freeness classification of skew characters.
//!
//! A basic skew diagram that is neither a partition nor a rotated partition
//! has a multiplicity-free character exactly when, in the diagram or its
//! rotation, the inner shape is a rectangle and one of four conditions on
//! the boundary segments and the number of distinct outer parts holds.
//! Partitions and rotated partitions are single irreducibles, hence always
//! multiplicity free. Disconnected diagrams are decided by brute force.

use std::fmt;

use crate::lr::{skew_character_is_mf, Decomposition};
use crate::skew::SkewDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MfReason {
    /// The diagram is a partition; its character is a single irreducible.
    IrreduciblePartition,
    /// The rotated diagram is a partition.
    RotatedPartition,
    /// Inner shape a rectangle and s_in = 1.
    InnerSegmentOne,
    /// Inner shape a rectangle, s_in = 2 and the outer shape has 3 distinct parts.
    InnerSegmentTwoDpThree,
    /// Inner shape a rectangle, 3 distinct outer parts and s_out = 1.
    DpThreeOuterSegmentOne,
    /// Inner shape a rectangle and the outer shape has 2 distinct parts.
    DpTwo,
    /// Disconnected diagram, decided by enumerating the decomposition.
    BruteForce,
    /// No structural case applies.
    NotMf,
}

impl fmt::Display for MfReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            MfReason::IrreduciblePartition => "irreducible partition",
            MfReason::RotatedPartition => "rotated partition",
            MfReason::InnerSegmentOne => "s_in=1",
            MfReason::InnerSegmentTwoDpThree => "s_in=2 and dp=3",
            MfReason::DpThreeOuterSegmentOne => "dp=3 and s_out=1",
            MfReason::DpTwo => "dp=2",
            MfReason::BruteForce => "brute force",
            MfReason::NotMf => "no case applies",
        };
        f.write_str(text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MfVerdict {
    pub multiplicity_free: bool,
    pub reason: MfReason,
}

/// Decides whether `[d]` is multiplicity free. The input is normalized
/// first; connected non-partition diagrams are decided structurally, testing
/// the diagram and its rotation independently.
pub fn classify_mf(d: &SkewDiagram) -> MfVerdict {
    let b = d.normalize_basic();
    if b.inner().is_empty() {
        return MfVerdict {
            multiplicity_free: true,
            reason: MfReason::IrreduciblePartition,
        };
    }
    let rot = b.rotate180();
    if rot.inner().is_empty() {
        return MfVerdict {
            multiplicity_free: true,
            reason: MfReason::RotatedPartition,
        };
    }
    if b.decay_components().len() > 1 {
        return MfVerdict {
            multiplicity_free: skew_character_is_mf(&b),
            reason: MfReason::BruteForce,
        };
    }
    for orientation in [&b, &rot] {
        if orientation.inner().distinct_part_count() != 1 {
            continue; // inner shape must be a rectangle
        }
        let stats = orientation
            .path_stats()
            .expect("connected basic diagram with nonempty inner");
        let s_in = stats.s_in().expect("inner shape is nonempty");
        let s_out = stats.s_out();
        let dp = orientation.outer().distinct_part_count();
        let reason = if s_in == 1 {
            Some(MfReason::InnerSegmentOne)
        } else if s_in == 2 && dp == 3 {
            Some(MfReason::InnerSegmentTwoDpThree)
        } else if dp == 3 && s_out == 1 {
            Some(MfReason::DpThreeOuterSegmentOne)
        } else if dp == 2 {
            Some(MfReason::DpTwo)
        } else {
            None
        };
        if let Some(reason) = reason {
            return MfVerdict {
                multiplicity_free: true,
                reason,
            };
        }
    }
    MfVerdict {
        multiplicity_free: false,
        reason: MfReason::NotMf,
    }
}

/// True when every coefficient of the decomposition equals 1.
pub fn is_multiplicity_free(dec: &Decomposition) -> bool {
    dec.is_multiplicity_free()
}
