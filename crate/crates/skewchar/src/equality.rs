//! Canonical forms under translation and rotation, the staircase-conjugate
//! predicate, and the exhaustive equality check for multiplicity-free skew
//! characters.
//!
//! The harness enumerates every basic skew diagram within given bounds,
//! groups the multiplicity-free ones by their decomposition, and checks that
//! diagrams sharing a character are equal up to translation or rotation
//! (componentwise for decaying diagrams) or form a conjugate pair under a
//! staircase outer shape. Decompositions are memoized per canonical form, so
//! rotations and translated component arrangements are computed once.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::lr::{skew_character, Decomposition};
use crate::mf::classify_mf;
use crate::partition::Partition;
use crate::skew::SkewDiagram;

/// Representative of a diagram modulo translation and rotation, allowing the
/// components of a decaying diagram to move independently: the sorted list
/// of per-component representatives, each the lexicographic minimum of the
/// normalized component and its rotation (compared as outer parts, then
/// inner parts).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    components: Vec<SkewDiagram>,
}

impl CanonicalForm {
    pub fn components(&self) -> &[SkewDiagram] {
        &self.components
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " (x) ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn canonical_form(d: &SkewDiagram) -> CanonicalForm {
    let mut components: Vec<SkewDiagram> = d
        .normalize_basic()
        .decay_components()
        .into_iter()
        .map(|c| {
            let r = c.rotate180();
            if r < c {
                r
            } else {
                c
            }
        })
        .collect();
    components.sort();
    CanonicalForm { components }
}

/// Equal up to translation or rotation, componentwise for decaying diagrams.
pub fn trivially_equal(a: &SkewDiagram, b: &SkewDiagram) -> bool {
    canonical_form(a) == canonical_form(b)
}

/// After normalization: the outer shapes agree, form a staircase, and `b` is
/// the conjugate of `a`.
pub fn staircase_conjugate_equal(a: &SkewDiagram, b: &SkewDiagram) -> bool {
    let a = a.normalize_basic();
    let b = b.normalize_basic();
    a.outer() == b.outer() && a.outer().is_staircase() && b == a.conjugate()
}

/// Whether the two diagrams have identical skew characters.
pub fn characters_equal(a: &SkewDiagram, b: &SkewDiagram) -> bool {
    skew_character(a) == skew_character(b)
}

/// The prediction for two multiplicity-free diagrams: equal characters only
/// when trivially equal or staircase-conjugate (in either orientation of
/// `b`). Callers are responsible for multiplicity-freeness; see
/// [`predict_equal_mf_checked`].
pub fn predict_equal_mf(a: &SkewDiagram, b: &SkewDiagram) -> bool {
    trivially_equal(a, b)
        || staircase_conjugate_equal(a, b)
        || staircase_conjugate_equal(a, &b.rotate180())
}

/// [`predict_equal_mf`] with the multiplicity-freeness precondition checked.
pub fn predict_equal_mf_checked(a: &SkewDiagram, b: &SkewDiagram) -> Result<bool, Error> {
    if !classify_mf(a).multiplicity_free || !classify_mf(b).multiplicity_free {
        return Err(Error::NotMultiplicityFree);
    }
    Ok(predict_equal_mf(a, b))
}

/// Diagrams with equal characters have equal row-length and column-height
/// multisets; used as a fast necessary filter, never as a decision.
pub fn necessary_conditions_check(a: &SkewDiagram, b: &SkewDiagram) -> bool {
    a.parts_and_heights() == b.parts_and_heights()
}

/// Enumeration bounds for the basic-diagram corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_cells: usize,
    pub max_part: usize,
    pub max_rows: usize,
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "max_cells={} max_part={} max_rows={}",
            self.max_cells, self.max_part, self.max_rows
        )
    }
}

/// Every basic skew diagram (connected or not) with at most `max_cells`
/// cells, first outer part at most `max_part` and at most `max_rows` rows,
/// each exactly once, in a fixed deterministic order.
///
/// Rows are generated bottom-up as column intervals `[s, e]`: the bottom row
/// starts at column 1, the row above starts in `[s, e+1]` and ends at or
/// beyond `e`. That encoding is exactly the basic condition, so every basic
/// diagram arises from one interval sequence.
pub fn enumerate_basic_skew_diagrams(bounds: &Bounds) -> impl Iterator<Item = SkewDiagram> {
    let mut out = Vec::new();
    let mut rows: Vec<(usize, usize)> = Vec::new();
    if bounds.max_rows >= 1 && bounds.max_part >= 1 {
        for e in 1..=bounds.max_part.min(bounds.max_cells) {
            rows.push((1, e));
            extend_rows(bounds, &mut rows, e, &mut out);
            rows.pop();
        }
    }
    out.into_iter()
}

fn extend_rows(
    bounds: &Bounds,
    rows: &mut Vec<(usize, usize)>,
    cells_used: usize,
    out: &mut Vec<SkewDiagram>,
) {
    out.push(build_from_rows(rows));
    if rows.len() == bounds.max_rows {
        return;
    }
    let &(s_below, e_below) = rows.last().expect("at least the bottom row");
    for s in s_below..=e_below + 1 {
        for e in s.max(e_below)..=bounds.max_part {
            let used = cells_used + (e - s + 1);
            if used > bounds.max_cells {
                break;
            }
            rows.push((s, e));
            extend_rows(bounds, rows, used, out);
            rows.pop();
        }
    }
}

fn build_from_rows(rows: &[(usize, usize)]) -> SkewDiagram {
    // rows are bottom-up; the diagram wants them top-down
    let outer = Partition::from_valid(rows.iter().rev().map(|&(_, e)| e).collect());
    let inner = Partition::from_valid(rows.iter().rev().map(|&(s, _)| s - 1).collect());
    SkewDiagram::new(outer, inner).expect("interval encoding is a valid skew diagram")
}

/// A set of canonical forms sharing one multiplicity-free decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityClass {
    pub decomposition: Decomposition,
    pub forms: Vec<CanonicalForm>,
}

/// Outcome of the exhaustive check at the given bounds.
///
/// `violations` lists pairs of canonical forms that share a character but
/// are neither trivially equal nor staircase-conjugate, plus any
/// staircase-conjugate pair whose characters fail to agree; it must be empty
/// for the check to pass. `equality_classes` keeps only the classes with at
/// least two distinct canonical forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub bounds: Bounds,
    pub diagrams_examined: u64,
    pub mf_count: u64,
    pub equality_classes: Vec<EqualityClass>,
    pub violations: Vec<(CanonicalForm, CanonicalForm)>,
    pub staircase_confirmations: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bounds: {}", self.bounds)?;
        writeln!(f, "diagrams examined: {}", self.diagrams_examined)?;
        writeln!(f, "multiplicity-free diagrams: {}", self.mf_count)?;
        writeln!(
            f,
            "equality classes with >=2 canonical forms: {}",
            self.equality_classes.len()
        )?;
        for class in &self.equality_classes {
            let forms: Vec<String> = class.forms.iter().map(|c| format!("[{c}]")).collect();
            writeln!(f, "  {}", forms.join(" = "))?;
        }
        writeln!(
            f,
            "staircase conjugate pairs confirmed: {}",
            self.staircase_confirmations
        )?;
        write!(f, "violations: {}", self.violations.len())?;
        for (a, b) in &self.violations {
            write!(f, "\n  [{a}] vs [{b}]")?;
        }
        Ok(())
    }
}

/// Runs the exhaustive check, fanning decompositions out over a rayon pool
/// when the `parallel` feature is enabled. The report is identical for any
/// worker count.
pub fn verify_main_theorem(bounds: &Bounds) -> VerificationReport {
    verify_impl(bounds, true)
}

/// Single-threaded variant of [`verify_main_theorem`].
pub fn verify_main_theorem_seq(bounds: &Bounds) -> VerificationReport {
    verify_impl(bounds, false)
}

fn decompose_batch(reps: &[&SkewDiagram], parallel: bool) -> Vec<Decomposition> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if parallel {
            return reps.par_iter().map(|d| skew_character(d)).collect();
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    reps.iter().map(|d| skew_character(d)).collect()
}

fn verify_impl(bounds: &Bounds, parallel: bool) -> VerificationReport {
    // one representative diagram and a multiplicity per canonical form
    let mut forms: BTreeMap<CanonicalForm, (SkewDiagram, u64)> = BTreeMap::new();
    let mut diagrams_examined = 0u64;
    for d in enumerate_basic_skew_diagrams(bounds) {
        diagrams_examined += 1;
        let form = canonical_form(&d);
        match forms.get_mut(&form) {
            None => {
                forms.insert(form, (d, 1));
            }
            Some((rep, count)) => {
                *count += 1;
                if d < *rep {
                    *rep = d;
                }
            }
        }
    }

    let reps: Vec<&SkewDiagram> = forms.values().map(|(rep, _)| rep).collect();
    let decs = decompose_batch(&reps, parallel);

    let mut mf_count = 0u64;
    let mut by_char: BTreeMap<&Decomposition, Vec<&CanonicalForm>> = BTreeMap::new();
    let mut dec_of: BTreeMap<&CanonicalForm, &Decomposition> = BTreeMap::new();
    for ((form, (_, count)), dec) in forms.iter().zip(&decs) {
        dec_of.insert(form, dec);
        if dec.is_multiplicity_free() {
            mf_count += count;
            by_char.entry(dec).or_default().push(form);
        }
    }

    let mut violations: BTreeSet<(CanonicalForm, CanonicalForm)> = BTreeSet::new();
    let mut equality_classes = Vec::new();
    for (dec, class_forms) in &by_char {
        if class_forms.len() < 2 {
            continue;
        }
        for (i, fa) in class_forms.iter().enumerate() {
            for fb in &class_forms[i + 1..] {
                let a = &forms[*fa].0;
                let b = &forms[*fb].0;
                if !(predict_equal_mf(a, b) || predict_equal_mf(b, a)) {
                    violations.insert(ordered_pair(fa, fb));
                }
            }
        }
        equality_classes.push(EqualityClass {
            decomposition: (*dec).clone(),
            forms: class_forms.iter().map(|f| (*f).clone()).collect(),
        });
    }
    equality_classes.sort_by(|a, b| a.forms.cmp(&b.forms));

    // converse direction: staircase-conjugate pairs really share a character
    let mut confirmed: BTreeSet<(CanonicalForm, CanonicalForm)> = BTreeSet::new();
    for (form, (rep, _)) in &forms {
        if !dec_of[form].is_multiplicity_free() {
            continue;
        }
        for orientation in [rep.clone(), rep.rotate180()] {
            if !orientation.outer().is_staircase() || orientation.inner().is_empty() {
                continue;
            }
            let conj = orientation.conjugate();
            let conj_form = canonical_form(&conj);
            if conj_form == *form {
                continue;
            }
            let conj_dec = match dec_of.get(&conj_form) {
                Some(dec) => (*dec).clone(),
                None => skew_character(&conj),
            };
            let pair = ordered_pair(form, &conj_form);
            if conj_dec == **dec_of.get(form).expect("decomposed above") {
                confirmed.insert(pair);
            } else {
                violations.insert(pair);
            }
        }
    }

    VerificationReport {
        bounds: *bounds,
        diagrams_examined,
        mf_count,
        equality_classes,
        violations: violations.into_iter().collect(),
        staircase_confirmations: confirmed.len() as u64,
    }
}

fn ordered_pair(a: &CanonicalForm, b: &CanonicalForm) -> (CanonicalForm, CanonicalForm) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}
