//! Randomized structural invariants, plus a few corpus-wide sweeps that are
//! cheap enough to run exhaustively at small size.

use std::collections::BTreeMap;

use proptest::prelude::*;

use skewchar::{
    canonical_form, enumerate_basic_skew_diagrams, is_lattice_word, skew_character,
    trivially_equal, Bounds, CanonicalForm, Decomposition, Partition, SkewDiagram,
};

fn arb_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).expect("sorted")
    })
}

fn arb_skew(max_part: usize, max_len: usize) -> impl Strategy<Value = SkewDiagram> {
    (
        arb_partition(max_part, max_len),
        prop::collection::vec(0..=max_part, max_len),
    )
        .prop_map(|(outer, raw)| {
            let mut inner = Vec::new();
            let mut prev = usize::MAX;
            for (i, &r) in raw.iter().enumerate().take(outer.len()) {
                let v = r.min(outer.part_at(i)).min(prev);
                inner.push(v);
                prev = v;
            }
            SkewDiagram::new(outer, Partition::new(inner).expect("clamped decreasing")).unwrap()
        })
}

proptest! {
    #[test]
    fn conjugate_is_involution(p in arb_partition(9, 9)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn conjugate_weight_and_length_swap(p in arb_partition(9, 9)) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.len(), p.part_at(0));
        prop_assert_eq!(c.part_at(0), p.len());
    }

    #[test]
    fn partition_parse_roundtrip(p in arb_partition(20, 8)) {
        let text = p
            .parts()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn normalize_is_idempotent(d in arb_skew(8, 8)) {
        let n = d.normalize_basic();
        prop_assert!(n.is_basic());
        prop_assert_eq!(n.normalize_basic(), n.clone());
        prop_assert_eq!(n.cell_count(), d.cell_count());
    }

    #[test]
    fn normalize_translates_connected_diagrams(d in arb_skew(8, 8)) {
        let n = d.normalize_basic();
        if n.decay_components().len() == 1 {
            let from = d.cells();
            let to = n.cells();
            prop_assert_eq!(from.len(), to.len());
            if !from.is_empty() {
                let dr = from[0].0 as isize - to[0].0 as isize;
                let dc = from[0].1 as isize - to[0].1 as isize;
                for (a, b) in from.iter().zip(&to) {
                    prop_assert_eq!(a.0 as isize - b.0 as isize, dr);
                    prop_assert_eq!(a.1 as isize - b.1 as isize, dc);
                }
            }
        }
    }

    #[test]
    fn rotation_is_involution_on_basic(d in arb_skew(8, 8)) {
        let n = d.normalize_basic();
        prop_assert_eq!(n.rotate180().rotate180(), n);
    }

    #[test]
    fn skew_conjugation_is_involution(d in arb_skew(8, 8)) {
        prop_assert_eq!(d.conjugate().conjugate(), d.clone());
    }

    #[test]
    fn heights_are_parts_of_conjugate(d in arb_skew(8, 8)) {
        let (_, heights) = d.parts_and_heights();
        let (parts, _) = d.conjugate().parts_and_heights();
        prop_assert_eq!(heights, parts);
    }

    #[test]
    fn decay_matches_union_find(d in arb_skew(7, 7)) {
        let n = d.normalize_basic();
        let mut expected = union_find_components(&n);
        expected.sort();
        let mut got = n.decay_components();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn path_segments_match_unit_walk(d in arb_skew(8, 8)) {
        let n = d.normalize_basic();
        if n.cell_count() == 0 {
            return Ok(());
        }
        let stats = n.path_stats().unwrap();
        let rows = n.outer().len();
        let width = n.outer().part_at(0);
        prop_assert_eq!(stats.outer_segments().to_vec(), walk_segments(n.outer(), rows, width));
        match stats.inner_segments() {
            None => prop_assert!(n.inner().is_empty()),
            Some(segs) => {
                prop_assert_eq!(segs.to_vec(), walk_segments(n.inner(), rows, width));
                // the horizontal runs cross the box, the vertical runs climb it
                prop_assert_eq!(segs.iter().sum::<usize>(), rows + width);
            }
        }
    }

    #[test]
    fn canonical_form_quotients_rotation(d in arb_skew(7, 7)) {
        let n = d.normalize_basic();
        prop_assert_eq!(canonical_form(&n.rotate180()), canonical_form(&n));
        prop_assert!(trivially_equal(&n, &d));
    }

    #[test]
    fn lattice_word_matches_definition(w in prop::collection::vec(1usize..=4, 0..10)) {
        let by_def = (0..=w.len()).all(|n| {
            let prefix = &w[..n];
            (1..=4).all(|i| {
                prefix.iter().filter(|&&x| x == i).count()
                    >= prefix.iter().filter(|&&x| x == i + 1).count()
            })
        });
        prop_assert_eq!(is_lattice_word(&w), by_def);
    }

    #[test]
    fn character_is_rotation_invariant(d in arb_skew(4, 4)) {
        prop_assert_eq!(skew_character(&d.rotate180()), skew_character(&d));
    }
}

#[test]
fn trivial_equality_is_sound_on_the_small_corpus() {
    // diagrams sharing a canonical form (translation, rotation, independent
    // component moves) must share their character
    let corpus: Vec<SkewDiagram> = enumerate_basic_skew_diagrams(&Bounds {
        max_cells: 7,
        max_part: 7,
        max_rows: 7,
    })
    .collect();
    let mut by_form: BTreeMap<CanonicalForm, Decomposition> = BTreeMap::new();
    for d in &corpus {
        let dec = skew_character(d);
        match by_form.get(&canonical_form(d)) {
            None => {
                by_form.insert(canonical_form(d), dec);
            }
            Some(prev) => assert_eq!(*prev, dec, "trivially equal class disagrees at {d}"),
        }
    }
    assert!(by_form.len() < corpus.len(), "corpus should contain nontrivial classes");
}

#[test]
fn diagrams_decaying_into_partitions_have_rigid_characters() {
    // when every component is a straight shape, equal characters force
    // componentwise trivial equality
    let corpus: Vec<SkewDiagram> = enumerate_basic_skew_diagrams(&Bounds {
        max_cells: 7,
        max_part: 7,
        max_rows: 7,
    })
    .collect();
    let mut by_char: BTreeMap<Decomposition, Vec<&SkewDiagram>> = BTreeMap::new();
    for d in &corpus {
        let straight_components = d
            .decay_components()
            .iter()
            .all(|c| c.inner().is_empty() || c.rotate180().inner().is_empty());
        if straight_components {
            by_char.entry(skew_character(d)).or_default().push(d);
        }
    }
    let mut groups = 0;
    for group in by_char.values() {
        groups += (group.len() > 1) as usize;
        for pair in group.windows(2) {
            assert!(
                trivially_equal(pair[0], pair[1]),
                "nontrivial equality among partition unions: {} vs {}",
                pair[0],
                pair[1]
            );
        }
    }
    assert!(groups > 0, "expected some translated/rotated groups");
}

#[test]
fn max_constituent_is_conjugate_of_sorted_heights_on_corpus() {
    let corpus = enumerate_basic_skew_diagrams(&Bounds {
        max_cells: 6,
        max_part: 6,
        max_rows: 6,
    });
    for d in corpus {
        let (_, heights) = d.parts_and_heights();
        let expected = Partition::new(heights).unwrap().conjugate();
        let dec = skew_character(&d);
        let (max, coeff) = dec.max_constituent().unwrap();
        assert_eq!(*max, expected, "max constituent mismatch for {d}");
        assert_eq!(coeff, 1, "max constituent multiplicity for {d}");
    }
}

/// Independent component clustering: grow clusters over cells sharing a row
/// or column, then rebuild each cluster as a normalized diagram.
fn union_find_components(d: &SkewDiagram) -> Vec<SkewDiagram> {
    let cells = d.cells();
    let mut cluster: Vec<usize> = (0..cells.len()).collect();
    loop {
        let mut changed = false;
        for i in 0..cells.len() {
            for j in 0..cells.len() {
                if (cells[i].0 == cells[j].0 || cells[i].1 == cells[j].1)
                    && cluster[i] != cluster[j]
                {
                    let m = cluster[i].min(cluster[j]);
                    cluster[i] = m;
                    cluster[j] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = cluster.clone();
    roots.sort_unstable();
    roots.dedup();
    roots
        .into_iter()
        .map(|root| {
            let members: Vec<(usize, usize)> = cells
                .iter()
                .zip(&cluster)
                .filter(|(_, &c)| c == root)
                .map(|(&cell, _)| cell)
                .collect();
            let rows: Vec<usize> = {
                let mut r: Vec<usize> = members.iter().map(|c| c.0).collect();
                r.sort_unstable();
                r.dedup();
                r
            };
            let outer: Vec<usize> = rows
                .iter()
                .map(|&r| members.iter().filter(|c| c.0 == r).map(|c| c.1).max().unwrap())
                .collect();
            let inner: Vec<usize> = rows
                .iter()
                .map(|&r| members.iter().filter(|c| c.0 == r).map(|c| c.1).min().unwrap() - 1)
                .collect();
            SkewDiagram::new(
                Partition::new(outer).unwrap(),
                Partition::new(inner).unwrap(),
            )
            .unwrap()
            .normalize_basic()
        })
        .collect()
}

/// Unit-step boundary walk: from the lower-left corner of the box, step up
/// exactly when the profile row at the current height does not reach past
/// the current column.
fn walk_segments(profile: &Partition, rows: usize, width: usize) -> Vec<usize> {
    let (mut r, mut c) = (rows, 0usize);
    let mut steps: Vec<char> = Vec::new();
    while !(r == 0 && c == width) {
        if r > 0 && profile.part_at(r - 1) <= c {
            steps.push('U');
            r -= 1;
        } else {
            steps.push('R');
            c += 1;
        }
    }
    let mut segs = Vec::new();
    let mut i = 0;
    while i < steps.len() {
        let mut j = i;
        while j < steps.len() && steps[j] == steps[i] {
            j += 1;
        }
        segs.push(j - i);
        i = j;
    }
    segs
}
