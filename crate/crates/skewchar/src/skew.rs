//! Skew diagrams and their structural operations.
//!
//! A skew diagram is an ordered pair of partitions `outer/inner` with
//! `inner` contained in `outer`; its cells are the boxes of `outer` not in
//! `inner`, addressed by matrix-style 1-based `(row, column)` coordinates.
//!
//! A diagram is *basic* when it has no empty rows and no empty columns, i.e.
//! `inner_i < outer_i` and `inner_i <= outer_{i+1}` for every row. Basic form
//! quotients out translation, so structural equality of normalized diagrams
//! is equality up to translation.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

/// Unit-segment lists of the two boundary lattice paths of a basic diagram.
///
/// Both paths run from the lower-left to the upper-right corner of the
/// bounding box. The outer path starts rightward and follows the outer
/// shape; the inner path starts upward, follows the inner shape and ends
/// rightward. `inner_segments` is `None` when the inner shape is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    inner_segments: Option<Vec<usize>>,
    outer_segments: Vec<usize>,
}

impl PathStats {
    /// Shortest straight segment of the inner path, if there is one.
    pub fn s_in(&self) -> Option<usize> {
        self.inner_segments
            .as_ref()
            .map(|s| *s.iter().min().expect("inner path is nonempty"))
    }

    /// Shortest straight segment of the outer path.
    pub fn s_out(&self) -> usize {
        *self
            .outer_segments
            .iter()
            .min()
            .expect("outer path is nonempty")
    }

    pub fn inner_segments(&self) -> Option<&[usize]> {
        self.inner_segments.as_deref()
    }

    pub fn outer_segments(&self) -> &[usize] {
        &self.outer_segments
    }
}

impl SkewDiagram {
    /// Builds `outer/inner`, failing with [`Error::NotContained`] when the
    /// inner shape sticks out of the outer one.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewDiagram { outer, inner })
    }

    /// The full diagram of a partition, `p/()`.
    pub fn from_partition(p: Partition) -> Self {
        SkewDiagram {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Cells as 1-based `(row, column)` pairs, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.cell_count());
        for i in 0..self.outer.len() {
            for j in self.inner.part_at(i)..self.outer.part_at(i) {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    /// Row lengths `outer_i - inner_i` in row order.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.outer.len())
            .map(|i| self.outer.part_at(i) - self.inner.part_at(i))
            .collect()
    }

    /// Column heights in column order.
    pub fn column_heights(&self) -> Vec<usize> {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (0..oc.len())
            .map(|j| oc.part_at(j) - ic.part_at(j))
            .collect()
    }

    /// Multisets of row lengths and column heights of the normalized diagram,
    /// each sorted decreasingly.
    pub fn parts_and_heights(&self) -> (Vec<usize>, Vec<usize>) {
        let b = self.normalize_basic();
        let mut parts = b.row_lengths();
        let mut heights = b.column_heights();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        heights.sort_unstable_by(|a, b| b.cmp(a));
        (parts, heights)
    }

    /// No empty rows and no empty columns. The empty diagram is basic.
    ///
    /// For the last row `outer_{i+1}` is 0, so the column condition forces
    /// the inner shape to be strictly shorter than the outer one.
    pub fn is_basic(&self) -> bool {
        (0..self.outer.len()).all(|i| {
            self.inner.part_at(i) < self.outer.part_at(i)
                && self.inner.part_at(i) <= self.outer.part_at(i + 1)
        })
    }

    /// Deletes empty rows and empty columns. The result is basic; the cell
    /// set is preserved up to translation (componentwise, when deleting an
    /// interior gap slides decay components relative to each other).
    pub fn normalize_basic(&self) -> SkewDiagram {
        let rows: Vec<(usize, usize)> = (0..self.outer.len())
            .filter_map(|i| {
                let (n, o) = (self.inner.part_at(i), self.outer.part_at(i));
                (o > n).then_some((n, o))
            })
            .collect();
        if rows.is_empty() {
            return SkewDiagram::from_partition(Partition::empty());
        }
        let width = rows[0].1;
        let mut occupied = vec![false; width];
        for &(n, o) in &rows {
            for slot in &mut occupied[n..o] {
                *slot = true;
            }
        }
        // cum[x] = number of occupied columns among the first x
        let mut cum = vec![0usize; width + 1];
        for j in 0..width {
            cum[j + 1] = cum[j] + occupied[j] as usize;
        }
        let outer = Partition::from_valid(rows.iter().map(|&(_, o)| cum[o]).collect());
        let inner = Partition::from_valid(rows.iter().map(|&(n, _)| cum[n]).collect());
        let result = SkewDiagram { outer, inner };
        debug_assert!(result.is_basic());
        result
    }

    /// 180-degree rotation within the bounding box, on the normalized
    /// diagram. Involution on basic diagrams.
    pub fn rotate180(&self) -> SkewDiagram {
        let b = self.normalize_basic();
        let l = b.outer.len();
        if l == 0 {
            return b;
        }
        let w = b.outer.part_at(0);
        let outer = Partition::from_valid((0..l).map(|i| w - b.inner.part_at(l - 1 - i)).collect());
        let inner = Partition::from_valid((0..l).map(|i| w - b.outer.part_at(l - 1 - i)).collect());
        let result = SkewDiagram { outer, inner };
        debug_assert!(result.is_basic());
        result
    }

    /// Transposed diagram `outer'/inner'`.
    pub fn conjugate(&self) -> SkewDiagram {
        SkewDiagram {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Maximal groups of cells sharing no row or column, top group first,
    /// each normalized to basic form. A connected diagram yields a single
    /// component; the empty diagram yields none.
    ///
    /// In a basic diagram rows i and i+1 share a column exactly when
    /// `inner_i < outer_{i+1}`, so components are runs of consecutive rows.
    pub fn decay_components(&self) -> Vec<SkewDiagram> {
        let b = self.normalize_basic();
        let l = b.outer.len();
        let mut out = Vec::new();
        let mut start = 0;
        for i in 0..l {
            if i + 1 == l || b.inner.part_at(i) >= b.outer.part_at(i + 1) {
                let outer = Partition::from_valid(b.outer.parts()[start..=i].to_vec());
                let inner = Partition::from_valid(
                    (start..=i).map(|r| b.inner.part_at(r)).collect(),
                );
                out.push(SkewDiagram { outer, inner }.normalize_basic());
                start = i + 1;
            }
        }
        out
    }

    /// Boundary lattice paths of a basic nonempty diagram.
    pub fn path_stats(&self) -> Result<PathStats, Error> {
        if !self.is_basic() {
            return Err(Error::NotBasic);
        }
        let l = self.outer.len();
        if l == 0 {
            return Err(Error::EmptyDiagram);
        }
        let w = self.outer.part_at(0);
        let outer_segments = profile_segments(&self.outer, l, w);
        let inner_segments = (!self.inner.is_empty()).then(|| profile_segments(&self.inner, l, w));
        Ok(PathStats {
            inner_segments,
            outer_segments,
        })
    }

    /// Deletes the leftmost `amount` cells of every row, then normalizes.
    ///
    /// Fails with [`Error::TooShallow`] when some row of the normalized
    /// diagram has fewer than `amount` cells.
    pub fn remove_left(&self, amount: usize) -> Result<SkewDiagram, Error> {
        let b = self.normalize_basic();
        let l = b.outer.len();
        for i in 0..l {
            if b.outer.part_at(i) - b.inner.part_at(i) < amount {
                return Err(Error::TooShallow { amount });
            }
        }
        let inner = Partition::from_valid((0..l).map(|i| b.inner.part_at(i) + amount).collect());
        Ok(SkewDiagram {
            outer: b.outer,
            inner,
        }
        .normalize_basic())
    }

    /// Deletes the top `amount` cells of every column, then normalizes.
    pub fn remove_top(&self, amount: usize) -> Result<SkewDiagram, Error> {
        Ok(self.conjugate().remove_left(amount)?.conjugate())
    }
}

/// Segment lengths of the lattice path that runs from the lower-left to the
/// upper-right corner of a `rows` x `width` box following `profile`.
///
/// From the bottom: up past the rows below the profile, then alternately
/// right along a block of equal parts' lower edge and up its right edge,
/// ending with the top run to the box corner. Zero-length runs are omitted.
fn profile_segments(profile: &Partition, rows: usize, width: usize) -> Vec<usize> {
    let mut segs = Vec::new();
    let free_rows = rows - profile.len();
    if free_rows > 0 {
        segs.push(free_rows);
    }
    let runs = profile.distinct_runs(); // largest value first
    let mut prev_value = 0;
    for &(value, mult) in runs.iter().rev() {
        segs.push(value - prev_value);
        segs.push(mult);
        prev_value = value;
    }
    if width > prev_value {
        segs.push(width - prev_value);
    }
    segs
}

impl FromStr for SkewDiagram {
    type Err = Error;

    /// Parses `"outer/inner"`; the inner part may be omitted (`"outer"` or
    /// `"outer/"`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut pieces = s.splitn(3, '/');
        let outer_text = pieces.next().unwrap_or("");
        let inner_text = pieces.next().unwrap_or("");
        if pieces.next().is_some() {
            return Err(Error::MalformedSkew(format!(
                "expected \"outer/inner\", got {s:?}"
            )));
        }
        let outer = outer_text.parse()?;
        let inner = inner_text.parse()?;
        SkewDiagram::new(outer, inner)
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
