//! Littlewood-Richardson coefficients, skew characters and their oracles.
//!
//! The central routine is a backtracking enumeration of LR tableaux: cells
//! are filled in reverse-row-word order (right to left within a row, rows
//! top to bottom) so both the semistandard constraints and the lattice-word
//! condition are checked incrementally and prune immediately. A full skew
//! character `[outer/inner] = sum_nu c(outer; inner, nu) [nu]` is one such
//! enumeration with the contents tallied.
//!
//! Two independent oracles cross-validate the engine: the semistandard
//! monomial expansion of a skew Schur function ([`skew_schur_monomials`],
//! no lattice machinery) and standard-tableau counting ([`syt_count`] by
//! chains in Young's lattice, [`syt_count_partition`] by hook lengths).

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use crate::partition::{partitions_of_weight_bounded, Partition};
use crate::skew::SkewDiagram;

/// A finite map from constituents to positive coefficients,
/// `sum_nu coeff(nu) [nu]`. An absent key means coefficient 0.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    terms: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition::default()
    }

    pub fn coeff(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    pub fn add(&mut self, nu: Partition, c: u64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(nu).or_insert(0);
        *slot = slot.checked_add(c).expect("coefficient overflow");
    }

    /// Terms in descending lexicographic order of the constituent.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(nu, &c)| (nu, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient equals 1.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    /// The lexicographically greatest constituent, if any.
    pub fn max_constituent(&self) -> Option<(&Partition, u64)> {
        self.terms.iter().next_back().map(|(nu, &c)| (nu, c))
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (nu, c)) in self.terms().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{nu}: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// A semistandard filling of a skew shape whose reverse row word is a
/// lattice word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrTableau {
    shape: SkewDiagram,
    rows: Vec<Vec<usize>>,
}

impl LrTableau {
    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    /// Entry at 1-based `(row, col)`, `None` outside the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || row > self.rows.len() {
            return None;
        }
        let lo = self.shape.inner().part_at(row - 1);
        col.checked_sub(lo + 1)
            .and_then(|k| self.rows[row - 1].get(k).copied())
    }

    /// Entries of each row, left to right.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entries read right to left within each row, rows top to bottom.
    pub fn reverse_row_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// The content: part i counts the occurrences of i+1.
    pub fn content(&self) -> Partition {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if v > counts.len() {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Partition::from_valid(counts)
    }
}

/// True when every prefix contains at least as many `i` as `i+1`, for all i.
/// Entries are positive; a zero entry disqualifies the word.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if v > counts.len() {
            counts.resize(v, 0);
        }
        if v > 1 && counts[v - 2] <= counts[v - 1] {
            return false;
        }
        counts[v - 1] += 1;
    }
    true
}

struct WordCell {
    /// 1-based row index; entries in this cell never exceed it.
    row: usize,
    above: Option<usize>,
    right: Option<usize>,
}

fn word_cells(d: &SkewDiagram) -> Vec<WordCell> {
    let mut cells = Vec::with_capacity(d.cell_count());
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 1..=d.outer().len() {
        let (lo, hi) = (d.inner().part_at(i - 1), d.outer().part_at(i - 1));
        for j in ((lo + 1)..=hi).rev() {
            let idx = cells.len();
            pos.insert((i, j), idx);
            cells.push(WordCell {
                row: i,
                above: pos.get(&(i - 1, j)).copied(),
                right: pos.get(&(i, j + 1)).copied(),
            });
        }
    }
    cells
}

struct LrSearch<'a> {
    cells: &'a [WordCell],
    vals: Vec<usize>,
    counts: Vec<usize>,
    cap: Option<&'a [usize]>,
}

impl LrSearch<'_> {
    fn new<'a>(cells: &'a [WordCell], max_entry: usize, cap: Option<&'a [usize]>) -> LrSearch<'a> {
        LrSearch {
            cells,
            vals: Vec::with_capacity(cells.len()),
            counts: vec![0; max_entry + 1],
            cap,
        }
    }

    /// Depth-first over all valid fillings; the visitor sees the word-order
    /// values and the content counts and returns false to abort the search.
    fn run<F: FnMut(&[usize], &[usize]) -> bool>(&mut self, pos: usize, visit: &mut F) -> bool {
        if pos == self.cells.len() {
            return visit(&self.vals, &self.counts[1..]);
        }
        let cell = &self.cells[pos];
        let lo = cell.above.map_or(1, |a| self.vals[a] + 1);
        let mut hi = cell.row;
        if let Some(r) = cell.right {
            hi = hi.min(self.vals[r]);
        }
        for v in lo..=hi {
            // lattice: after placing v there must be strictly more v-1 before it
            if v > 1 && self.counts[v - 1] <= self.counts[v] {
                continue;
            }
            if let Some(cap) = self.cap {
                if v > cap.len() || self.counts[v] >= cap[v - 1] {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.vals.push(v);
            let keep_going = self.run(pos + 1, visit);
            self.vals.pop();
            self.counts[v] -= 1;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn for_each_lr_filling<F: FnMut(&[usize], &[usize]) -> bool>(
    d: &SkewDiagram,
    cap: Option<&[usize]>,
    visit: &mut F,
) {
    let cells = word_cells(d);
    let mut search = LrSearch::new(&cells, d.outer().len(), cap);
    search.run(0, visit);
}

/// The number of LR tableaux of shape `lam/mu` with content `nu`.
/// Returns 0 for incompatible weights or when `mu` is not contained in `lam`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || lam.weight() != mu.weight() + nu.weight() || nu.len() > lam.len() {
        return 0;
    }
    let shape = SkewDiagram::new(lam.clone(), mu.clone()).expect("containment checked");
    let mut count = 0u64;
    for_each_lr_filling(&shape, Some(nu.parts()), &mut |_, _| {
        count = count.checked_add(1).expect("coefficient overflow");
        true
    });
    count
}

/// The decomposition `[d] = sum_nu c(outer; inner, nu) [nu]`, computed by a
/// single enumeration of all LR fillings of the normalized shape. The empty
/// diagram yields `{(): 1}`.
pub fn skew_character(d: &SkewDiagram) -> Decomposition {
    let b = d.normalize_basic();
    let mut dec = Decomposition::new();
    for_each_lr_filling(&b, None, &mut |_, counts| {
        dec.add(Partition::from_valid(counts.to_vec()), 1);
        true
    });
    dec
}

/// Whether `[d]` is multiplicity free, aborting the enumeration as soon as
/// some content repeats. Equivalent to
/// `skew_character(d).is_multiplicity_free()`.
pub fn skew_character_is_mf(d: &SkewDiagram) -> bool {
    let b = d.normalize_basic();
    let mut seen: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut mf = true;
    for_each_lr_filling(&b, None, &mut |_, counts| {
        let c = seen.entry(counts.to_vec()).or_insert(0);
        *c += 1;
        mf = *c == 1;
        mf
    });
    mf
}

/// All LR tableaux of shape `d` (as given, not normalized) and content `nu`,
/// in lexicographic order of their row-major entry sequences.
pub fn enumerate_lr_tableaux(d: &SkewDiagram, nu: &Partition) -> Vec<LrTableau> {
    if nu.weight() != d.cell_count() {
        return Vec::new();
    }
    let mut found: Vec<LrTableau> = Vec::new();
    for_each_lr_filling(d, Some(nu.parts()), &mut |vals, _| {
        let mut rows = Vec::with_capacity(d.outer().len());
        let mut at = 0;
        for i in 0..d.outer().len() {
            let len = d.outer().part_at(i) - d.inner().part_at(i);
            let mut row: Vec<usize> = vals[at..at + len].to_vec();
            row.reverse();
            rows.push(row);
            at += len;
        }
        found.push(LrTableau {
            shape: d.clone(),
            rows,
        });
        true
    });
    found.sort_by(|a, b| {
        let ka: Vec<usize> = a.rows.concat();
        let kb: Vec<usize> = b.rows.concat();
        ka.cmp(&kb)
    });
    found
}

/// Monomial expansion of the skew Schur function of `d` in `nvars`
/// variables: the coefficient of each exponent vector counts the
/// semistandard fillings (no lattice condition) with that content.
pub fn skew_schur_monomials(d: &SkewDiagram, nvars: usize) -> BTreeMap<Vec<usize>, u64> {
    assert!(nvars >= 1, "need at least one variable");
    // row-major cells with left/above neighbors
    let mut cells: Vec<(Option<usize>, Option<usize>)> = Vec::new();
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 1..=d.outer().len() {
        let (lo, hi) = (d.inner().part_at(i - 1), d.outer().part_at(i - 1));
        for j in (lo + 1)..=hi {
            pos.insert((i, j), cells.len());
            cells.push((
                pos.get(&(i, j - 1)).copied(),
                pos.get(&(i - 1, j)).copied(),
            ));
        }
    }
    let mut out: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut vals = vec![0usize; cells.len()];
    let mut content = vec![0usize; nvars];
    fn rec(
        cells: &[(Option<usize>, Option<usize>)],
        nvars: usize,
        pos: usize,
        vals: &mut Vec<usize>,
        content: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, u64>,
    ) {
        if pos == cells.len() {
            let slot = out.entry(content.clone()).or_insert(0);
            *slot = slot.checked_add(1).expect("coefficient overflow");
            return;
        }
        let (left, above) = cells[pos];
        let lo = above.map_or(1, |a| vals[a] + 1).max(left.map_or(1, |l| vals[l]));
        for v in lo..=nvars {
            vals[pos] = v;
            content[v - 1] += 1;
            rec(cells, nvars, pos + 1, vals, content, out);
            content[v - 1] -= 1;
        }
    }
    rec(&cells, nvars, 0, &mut vals, &mut content, &mut out);
    out
}

/// Monomial expansion of the (straight) Schur function of `p`.
pub fn schur_monomials(p: &Partition, nvars: usize) -> BTreeMap<Vec<usize>, u64> {
    skew_schur_monomials(&SkewDiagram::from_partition(p.clone()), nvars)
}

/// Number of standard fillings of `d`, counted as maximal chains in Young's
/// lattice from the inner to the outer shape. The empty diagram counts 1.
pub fn syt_count(d: &SkewDiagram) -> u64 {
    let b = d.normalize_basic();
    let l = b.outer().len();
    if l == 0 {
        return 1;
    }
    let mu: Vec<usize> = (0..l).map(|i| b.inner().part_at(i)).collect();
    let mut kappa: Vec<usize> = (0..l).map(|i| b.outer().part_at(i)).collect();
    let mut memo: HashMap<Vec<usize>, u64> = HashMap::new();
    fn chains(
        kappa: &mut Vec<usize>,
        mu: &[usize],
        memo: &mut HashMap<Vec<usize>, u64>,
    ) -> u64 {
        if kappa.as_slice() == mu {
            return 1;
        }
        if let Some(&v) = memo.get(kappa) {
            return v;
        }
        let mut total: u64 = 0;
        for i in 0..kappa.len() {
            let removable = kappa[i] > mu[i]
                && (i + 1 == kappa.len() || kappa[i] > kappa[i + 1]);
            if removable {
                kappa[i] -= 1;
                total = total
                    .checked_add(chains(kappa, mu, memo))
                    .expect("tableau count overflow");
                kappa[i] += 1;
            }
        }
        memo.insert(kappa.clone(), total);
        total
    }
    chains(&mut kappa, &mu, &mut memo)
}

/// Number of standard Young tableaux of a straight shape, by the hook length
/// formula.
pub fn syt_count_partition(p: &Partition) -> u64 {
    let n = p.weight();
    if n == 0 {
        return 1;
    }
    let conj = p.conjugate();
    let mut denom: u128 = 1;
    for i in 0..p.len() {
        for j in 0..p.part_at(i) {
            let hook = p.part_at(i) - j + conj.part_at(j) - i - 1;
            denom = denom.checked_mul(hook as u128).expect("hook product overflow");
        }
    }
    let mut num: u128 = 1;
    for k in 1..=n {
        num = num.checked_mul(k as u128).expect("factorial overflow");
    }
    u64::try_from(num / denom).expect("tableau count overflow")
}

/// The expansion of the product `[a] x [b]` induced to the full symmetric
/// group: `sum_nu c(nu; a, b) [nu]`.
pub fn lr_product(a: &Partition, b: &Partition) -> Decomposition {
    let total = a.weight() + b.weight();
    let max_part = a.part_at(0) + b.part_at(0);
    let max_len = a.len() + b.len();
    let mut out = Decomposition::new();
    for nu in partitions_of_weight_bounded(total, max_part, max_len) {
        out.add(nu.clone(), lr_coefficient(&nu, a, b));
    }
    out
}

/// Product of two decompositions term by term through [`lr_product`].
pub fn induction_product(x: &Decomposition, y: &Decomposition) -> Decomposition {
    let mut out = Decomposition::new();
    for (g, cg) in x.terms() {
        for (d, cd) in y.terms() {
            let scale = cg.checked_mul(cd).expect("coefficient overflow");
            for (nu, c) in lr_product(g, d).terms() {
                out.add(nu.clone(), scale.checked_mul(c).expect("coefficient overflow"));
            }
        }
    }
    out
}
