//! Equivalence of tiles under coordinate permutations.
//!
//! Canonical forms are found by brute force over all `r!` permutations: the
//! canonical tile is the least image under the tile order (sorted bitmask
//! sequences compared lexicographically). Permutations are visited in
//! lexicographic order of their image sequences and the first hit wins, so
//! every result here is deterministic.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hamming::weight;
use crate::permutation::{next_permutation, permute_bits, Permutation};
use crate::tiling::{Tile, TILE_SIZE};

/// Largest tile dimension accepted by the brute-force routines (7! images).
pub const MAX_CANON_DIM: u32 = 7;

fn check_canon_dim(t: &Tile) -> Result<()> {
    if t.dim() > MAX_CANON_DIM {
        return Err(Error::dimension(format!(
            "canonical forms are limited to dimension {MAX_CANON_DIM}, got {}",
            t.dim()
        )));
    }
    Ok(())
}

#[inline]
fn image_of(images: &[u8], t: &Tile) -> Tile {
    let mut pts = t.points().map(|p| permute_bits(images, p));
    pts.sort_unstable();
    Tile::from_sorted_unchecked(t.dim(), pts)
}

/// Runs `f` on every permutation of degree `t.dim()` (lexicographic order)
/// together with the image of `t`; stops early when `f` returns `false`.
fn for_each_image(t: &Tile, mut f: impl FnMut(&[u8], &Tile) -> bool) {
    let mut images: Vec<u8> = (0..t.dim() as u8).collect();
    loop {
        if !f(&images, &image_of(&images, t)) {
            return;
        }
        if !next_permutation(&mut images) {
            return;
        }
    }
}

/// `{ pi . v : v in t }`.
pub fn apply_permutation(p: &Permutation, t: &Tile) -> Result<Tile> {
    if p.degree() != t.dim() {
        return Err(Error::dimension(format!(
            "permutation of degree {} applied to a tile of dimension {}",
            p.degree(),
            t.dim()
        )));
    }
    let mut pts = t.points().map(|v| p.apply_bits(v));
    pts.sort_unstable();
    Ok(Tile::from_sorted_unchecked(t.dim(), pts))
}

/// The least image of `t` and the first permutation producing it.
pub fn canonical_form(t: &Tile) -> Result<(Tile, Permutation)> {
    check_canon_dim(t)?;
    let mut best = *t;
    let mut best_perm = Permutation::identity(t.dim());
    for_each_image(t, |images, img| {
        if *img < best {
            best = *img;
            best_perm = Permutation::from_zero_based(images);
        }
        true
    });
    Ok((best, best_perm))
}

/// Number of permutations fixing `t` as a set.
pub fn stabilizer_size(t: &Tile) -> Result<u64> {
    check_canon_dim(t)?;
    let mut count = 0;
    for_each_image(t, |_, img| {
        if img == t {
            count += 1;
        }
        true
    });
    Ok(count)
}

/// All distinct images of `t`, ascending.
pub fn orbit(t: &Tile) -> Result<Vec<Tile>> {
    check_canon_dim(t)?;
    let mut seen = BTreeSet::new();
    for_each_image(t, |_, img| {
        seen.insert(*img);
        true
    });
    Ok(seen.into_iter().collect())
}

/// Some `pi` with `pi . a = b`, the first in lexicographic order.
pub fn find_witness(a: &Tile, b: &Tile) -> Result<Option<Permutation>> {
    if a.dim() != b.dim() {
        return Err(Error::dimension(format!(
            "tiles of dimension {} and {} cannot be equivalent",
            a.dim(),
            b.dim()
        )));
    }
    check_canon_dim(a)?;
    if InvariantSignature::of(a) != InvariantSignature::of(b) {
        return Ok(None);
    }
    let mut found = None;
    for_each_image(a, |images, img| {
        if img == b {
            found = Some(Permutation::from_zero_based(images));
            false
        } else {
            true
        }
    });
    Ok(found)
}

pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Permutation-invariant statistics of a tile. Equal signatures are
/// necessary, not sufficient, for equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvariantSignature {
    /// Sorted weights of the eight points.
    pub weight_histogram: Vec<u32>,
    /// Sorted weights of `p + q` over the 28 unordered pairs.
    pub pair_sum_histogram: Vec<u32>,
}

impl InvariantSignature {
    pub fn of(t: &Tile) -> Self {
        let pts = t.points();
        let mut weights: Vec<u32> = pts.iter().map(|&p| weight(p)).collect();
        weights.sort_unstable();
        let mut pairs = Vec::with_capacity(TILE_SIZE * (TILE_SIZE - 1) / 2);
        for i in 0..TILE_SIZE {
            for j in i + 1..TILE_SIZE {
                pairs.push(weight(pts[i] ^ pts[j]));
            }
        }
        pairs.sort_unstable();
        InvariantSignature {
            weight_histogram: weights,
            pair_sum_histogram: pairs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMember {
    pub tile: Tile,
    /// Maps `tile` onto the class representative.
    pub witness: Permutation,
    /// How many times the tile appeared in the input.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// The canonical form shared by all members.
    pub representative: Tile,
    /// Distinct members in order of first appearance.
    pub members: Vec<ClassMember>,
}

impl EquivalenceClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Groups tiles by canonical form, sorted by representative.
pub fn partition_classes(tiles: &[Tile]) -> Result<Vec<EquivalenceClass>> {
    if let Some(first) = tiles.first() {
        if let Some(other) = tiles.iter().find(|t| t.dim() != first.dim()) {
            return Err(Error::dimension(format!(
                "cannot partition tiles of mixed dimensions {} and {}",
                first.dim(),
                other.dim()
            )));
        }
    }
    let mut classes: BTreeMap<Tile, Vec<ClassMember>> = BTreeMap::new();
    let mut canon_cache: BTreeMap<Tile, Tile> = BTreeMap::new();
    for t in tiles {
        if let Some(rep) = canon_cache.get(t) {
            let members = classes.get_mut(rep).expect("cached class exists");
            let m = members
                .iter_mut()
                .find(|m| m.tile == *t)
                .expect("member recorded");
            m.multiplicity += 1;
            continue;
        }
        let (rep, witness) = canonical_form(t)?;
        canon_cache.insert(*t, rep);
        classes.entry(rep).or_default().push(ClassMember {
            tile: *t,
            witness,
            multiplicity: 1,
        });
    }
    Ok(classes
        .into_iter()
        .map(|(representative, members)| EquivalenceClass {
            representative,
            members,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::{all_permutations, parse_cycles};

    /// Normalized rank-4 tile from its extra vectors given as coordinate lists.
    fn t4(s: &[&[u32]]) -> Tile {
        tile(4, s)
    }

    fn tile(dim: u32, s: &[&[u32]]) -> Tile {
        let extra: Vec<u64> = s
            .iter()
            .map(|coords| coords.iter().fold(0u64, |acc, &i| acc | 1 << (i - 1)))
            .collect();
        Tile::normalized(dim, &extra).unwrap()
    }

    fn intro_d1() -> Tile {
        t4(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])
    }

    fn intro_d2() -> Tile {
        t4(&[&[2, 1, 3], &[2, 1, 4], &[2, 3, 4]])
    }

    fn intro_d3() -> Tile {
        t4(&[&[4, 2, 1], &[4, 3, 1], &[4, 3, 2]])
    }

    fn intro_d4() -> Tile {
        t4(&[&[3, 2, 1], &[3, 1, 4], &[3, 2, 4]])
    }

    #[test]
    fn identity_action() {
        let t = intro_d2();
        assert_eq!(apply_permutation(&Permutation::identity(4), &t).unwrap(), t);
    }

    #[test]
    fn transposition_maps_d2_to_d1() {
        let p = parse_cycles("(12)", 4).unwrap();
        assert_eq!(apply_permutation(&p, &intro_d2()).unwrap(), intro_d1());
    }

    #[test]
    fn three_cycle_maps_peach_member_to_representative() {
        let d16 = t4(&[&[4, 1], &[4, 3], &[4, 3, 1]]);
        let d9 = t4(&[&[1, 2], &[1, 3], &[1, 2, 3]]);
        let p = parse_cycles("(124)", 4).unwrap();
        assert_eq!(apply_permutation(&p, &d16).unwrap(), d9);
    }

    #[test]
    fn degree_mismatch() {
        let p = Permutation::identity(5);
        assert!(matches!(
            apply_permutation(&p, &intro_d1()),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn intro_example_collapses_to_one_canonical_form() {
        let forms: BTreeSet<Tile> = [intro_d1(), intro_d2(), intro_d3(), intro_d4()]
            .iter()
            .map(|t| canonical_form(t).unwrap().0)
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn canonical_permutation_reaches_canonical_tile() {
        let t = intro_d3();
        let (canon, p) = canonical_form(&t).unwrap();
        assert_eq!(apply_permutation(&p, &t).unwrap(), canon);
        assert_eq!(canonical_form(&canon).unwrap().0, canon);
    }

    #[test]
    fn all_ones_rank6_tile_is_fixed_by_everything() {
        let t = tile(6, &[&[1, 2, 3, 4, 5, 6]]);
        // Oracle: apply each of the 720 permutations through the public API.
        let images: BTreeSet<Tile> = all_permutations(6)
            .map(|p| apply_permutation(&p, &t).unwrap())
            .collect();
        assert_eq!(images.len(), 1);
        assert_eq!(orbit(&t).unwrap(), vec![t]);
        assert_eq!(stabilizer_size(&t).unwrap(), 720);
        assert_eq!(canonical_form(&t).unwrap().0, t);
    }

    #[test]
    fn stabilizer_examples() {
        let ball7 = Tile::normalized(7, &[]).unwrap();
        assert_eq!(stabilizer_size(&ball7).unwrap(), 5040);

        // Oracle: count fixing permutations with the public action.
        let count = |t: &Tile| {
            all_permutations(t.dim())
                .filter(|p| apply_permutation(p, t).unwrap() == *t)
                .count() as u64
        };
        let d1 = t4(&[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(count(&d1), 6);
        assert_eq!(stabilizer_size(&d1).unwrap(), 6);

        let d22 = t4(&[&[1, 3], &[1, 2, 3], &[1, 2, 4]]);
        assert_eq!(count(&d22), 1);
        assert_eq!(stabilizer_size(&d22).unwrap(), 1);
        assert_eq!(orbit(&d22).unwrap().len(), 24);
    }

    #[test]
    fn witness_examples() {
        let w = find_witness(&intro_d3(), &intro_d1()).unwrap().unwrap();
        assert_eq!(apply_permutation(&w, &intro_d3()).unwrap(), intro_d1());
        let p14 = parse_cycles("(14)", 4).unwrap();
        assert_eq!(apply_permutation(&p14, &intro_d3()).unwrap(), intro_d1());

        let t = intro_d2();
        assert!(find_witness(&t, &t).unwrap().unwrap().is_identity());

        let star = t4(&[&[1, 2], &[1, 3], &[1, 4]]);
        let triangle = t4(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(all_permutations(4).all(|p| apply_permutation(&p, &star).unwrap() != triangle));
        assert_eq!(find_witness(&star, &triangle).unwrap(), None);

        assert!(find_witness(&star, &Tile::normalized(5, &[3, 5]).unwrap()).is_err());
    }

    #[test]
    fn singleton_partition() {
        let t = intro_d4();
        let classes = partition_classes(&[t]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 1);
        let member = &classes[0].members[0];
        assert_eq!(
            apply_permutation(&member.witness, &t).unwrap(),
            classes[0].representative
        );
    }

    #[test]
    fn partition_collapses_duplicates() {
        let classes = partition_classes(&[intro_d1(), intro_d2(), intro_d1()]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 2);
        assert_eq!(classes[0].members[0].multiplicity, 2);
        assert_eq!(classes[0].members[1].multiplicity, 1);
    }

    #[test]
    fn partition_rejects_mixed_dimensions() {
        let five = Tile::normalized(5, &[3, 5]).unwrap();
        assert!(matches!(
            partition_classes(&[intro_d1(), five]),
            Err(Error::Dimension(_))
        ));
        assert!(partition_classes(&[]).unwrap().is_empty());
    }

    #[test]
    fn signature_has_expected_shape() {
        let sig = InvariantSignature::of(&intro_d1());
        assert_eq!(sig.weight_histogram, vec![0, 1, 1, 1, 1, 3, 3, 3]);
        assert_eq!(sig.pair_sum_histogram.len(), 28);
    }

    #[test]
    fn canonical_form_rejects_large_dimension() {
        let t = Tile::new(8, [0, 1, 2, 4, 8, 16, 32, 64]).unwrap();
        assert!(canonical_form(&t).is_err());
    }
}
