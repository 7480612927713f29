//! Normalized tiles `ball(r) ∪ S`, generated two independent ways.
//!
//! [`enumerate_by_cases`] keeps the sets `S` that satisfy one of the weight
//! conditions in [`family_list`]; [`enumerate_exhaustive`] keeps the sets
//! whose tile admits a complement in F2^r. The two must agree.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hamming::weight;
use crate::tiling::{find_complement, Tile, TILE_SIZE};

pub const MIN_RANK: u32 = 3;
pub const MAX_RANK: u32 = 7;

/// One weight-condition family of extra sets `S` for a given rank.
#[derive(Clone, Copy)]
pub struct FamilySpec {
    pub rank: u32,
    /// `|S| = 7 - rank`.
    pub s_size: usize,
    /// Short label such as `4.iii`.
    pub label: &'static str,
    /// The conditions, written out.
    pub description: &'static str,
    predicate: fn(&[u64]) -> bool,
}

impl fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilySpec")
            .field("rank", &self.rank)
            .field("s_size", &self.s_size)
            .field("label", &self.label)
            .finish()
    }
}

impl FamilySpec {
    /// Whether `s` (in any order) is an admissible extra set of this family.
    ///
    /// Besides the family's weight conditions, `s` must have the right size,
    /// be distinct, fit F2^rank and avoid the ball (weight at least 2).
    pub fn accepts(&self, s: &[u64]) -> bool {
        if s.len() != self.s_size {
            return false;
        }
        let limit = 1u64 << self.rank;
        if s.iter().any(|&v| v >= limit || weight(v) < 2) {
            return false;
        }
        if (0..s.len()).any(|i| s[i + 1..].contains(&s[i])) {
            return false;
        }
        (self.predicate)(s)
    }

    /// Whether a normalized tile of this rank has its `S` in this family.
    pub fn accepts_tile(&self, t: &Tile) -> bool {
        t.dim() == self.rank && t.is_normalized() && self.accepts(&t.extra_points())
    }
}

fn w(v: u64) -> u32 {
    weight(v)
}

/// True if some ordering `(x, y, z)` of the three vectors satisfies `cond`.
fn some_order3(s: &[u64], cond: impl Fn(u64, u64, u64) -> bool) -> bool {
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    ORDERS.iter().any(|o| cond(s[o[0]], s[o[1]], s[o[2]]))
}

fn some_order2(s: &[u64], cond: impl Fn(u64, u64) -> bool) -> bool {
    cond(s[0], s[1]) || cond(s[1], s[0])
}

fn empty(s: &[u64]) -> bool {
    s.is_empty()
}

fn anything(_: &[u64]) -> bool {
    true
}

fn rank4_i(s: &[u64]) -> bool {
    let (x, y, z) = (s[0], s[1], s[2]);
    w(x) == 2 && w(y) == 2 && w(z) == 2 && w(x ^ y) == 2 && w(x ^ z) == 2 && w(y ^ z) == 2
}

fn rank4_ii(s: &[u64]) -> bool {
    some_order3(s, |x, y, z| {
        w(x) == 2 && w(y) == 2 && w(z) == 3 && w(x ^ y) == 2 && w(x ^ z) == 1 && w(y ^ z) == 1
    })
}

fn rank4_iii(s: &[u64]) -> bool {
    some_order3(s, |x, y, z| {
        w(x) == 2 && w(y) == 3 && w(z) == 3 && (w(x ^ y) == 1 || w(x ^ z) == 1)
    })
}

fn rank4_iv(s: &[u64]) -> bool {
    s.iter().all(|&v| w(v) == 3)
}

fn rank5_a(s: &[u64]) -> bool {
    let (x, y) = (s[0], s[1]);
    w(x) == 2 && w(y) == 2 && w(x ^ y) == 2
}

fn rank5_b(s: &[u64]) -> bool {
    some_order2(s, |x, y| {
        w(x) == 3 && w(y) == 2 && (w(x ^ y) == 1 || w(x ^ y) == 5)
    })
}

fn rank5_c(s: &[u64]) -> bool {
    let (x, y) = (s[0], s[1]);
    w(x) == 3 && w(y) == 3 && w(x ^ y) == 2
}

// Weights 0 and 1 are excluded by `accepts`: they would land in the ball.
fn rank6(s: &[u64]) -> bool {
    let x = w(s[0]);
    x != 4 && x != 5
}

const FAMILIES: [FamilySpec; 10] = [
    FamilySpec {
        rank: 3,
        s_size: 4,
        label: "3",
        description: "S = every vector of weight >= 2 (D is all of F2^3)",
        predicate: anything,
    },
    FamilySpec {
        rank: 4,
        s_size: 3,
        label: "4.i",
        description: "w(x)=w(y)=w(z)=2, w(x+y)=w(x+z)=w(y+z)=2",
        predicate: rank4_i,
    },
    FamilySpec {
        rank: 4,
        s_size: 3,
        label: "4.ii",
        description: "w(x)=w(y)=2, w(z)=3, w(x+y)=2, w(x+z)=w(y+z)=1",
        predicate: rank4_ii,
    },
    FamilySpec {
        rank: 4,
        s_size: 3,
        label: "4.iii",
        description: "w(x)=2, w(y)=w(z)=3, w(x+y)=1 or w(x+z)=1",
        predicate: rank4_iii,
    },
    FamilySpec {
        rank: 4,
        s_size: 3,
        label: "4.iv",
        description: "w(x)=w(y)=w(z)=3",
        predicate: rank4_iv,
    },
    FamilySpec {
        rank: 5,
        s_size: 2,
        label: "5.a",
        description: "w(x)=w(y)=2, w(x+y)=2",
        predicate: rank5_a,
    },
    FamilySpec {
        rank: 5,
        s_size: 2,
        label: "5.b",
        description: "w(x)=3, w(y)=2, w(x+y)=1 or w(x+y)=5",
        predicate: rank5_b,
    },
    FamilySpec {
        rank: 5,
        s_size: 2,
        label: "5.c",
        description: "w(x)=w(y)=3, w(x+y)=2",
        predicate: rank5_c,
    },
    FamilySpec {
        rank: 6,
        s_size: 1,
        label: "6",
        description: "w(x) >= 2 and w(x) not in {4, 5}",
        predicate: rank6,
    },
    FamilySpec {
        rank: 7,
        s_size: 0,
        label: "7",
        description: "S empty",
        predicate: empty,
    },
];

/// Every family, ordered by rank and then as listed for that rank.
pub fn family_list() -> Vec<FamilySpec> {
    FAMILIES.to_vec()
}

pub fn family_by_label(label: &str) -> Option<FamilySpec> {
    FAMILIES.iter().copied().find(|f| f.label == label)
}

pub fn families_of_rank(rank: u32) -> impl Iterator<Item = FamilySpec> {
    FAMILIES.into_iter().filter(move |f| f.rank == rank)
}

fn check_rank(rank: u32) -> Result<()> {
    if !(MIN_RANK..=MAX_RANK).contains(&rank) {
        return Err(Error::dimension(format!(
            "normalized tiles have rank {MIN_RANK}..={MAX_RANK}, got {rank}"
        )));
    }
    Ok(())
}

/// All ascending tuples `S` of `7 - rank` distinct vectors of weight >= 2.
pub fn candidates(rank: u32) -> Result<Vec<Vec<u64>>> {
    check_rank(rank)?;
    let size = TILE_SIZE - 1 - rank as usize;
    let pool: Vec<u64> = (0..1u64 << rank).filter(|&v| weight(v) >= 2).collect();
    let mut out = Vec::new();
    if size > pool.len() {
        return Ok(out);
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        let Some(k) = (0..size).rev().find(|&k| idx[k] < pool.len() - size + k) else {
            return Ok(out);
        };
        idx[k] += 1;
        for j in k + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Tiles of one family, ascending.
pub fn family_tiles(family: &FamilySpec) -> Result<Vec<Tile>> {
    candidates(family.rank)?
        .into_iter()
        .filter(|s| family.accepts(s))
        .map(|s| Tile::normalized(family.rank, &s))
        .collect()
}

/// For each tile of the given rank, the labels of the families producing it.
pub fn family_routes(rank: u32) -> Result<BTreeMap<Tile, Vec<&'static str>>> {
    check_rank(rank)?;
    let mut routes: BTreeMap<Tile, Vec<&'static str>> = BTreeMap::new();
    for family in families_of_rank(rank) {
        for t in family_tiles(&family)? {
            routes.entry(t).or_default().push(family.label);
        }
    }
    Ok(routes)
}

/// Tiles produced by more than one family.
pub fn family_overlaps(rank: u32) -> Result<Vec<(Tile, Vec<&'static str>)>> {
    Ok(family_routes(rank)?
        .into_iter()
        .filter(|(_, labels)| labels.len() > 1)
        .collect())
}

/// Normalized tiles of the given rank whose `S` lies in some family, ascending.
pub fn enumerate_by_cases(rank: u32) -> Result<Vec<Tile>> {
    Ok(family_routes(rank)?.into_keys().collect())
}

/// Normalized tiles of the given rank that tile F2^rank, found by running
/// the complement search on every candidate. Ascending.
pub fn enumerate_exhaustive(rank: u32) -> Result<Vec<Tile>> {
    let mut tiles = Vec::new();
    for s in candidates(rank)? {
        let t = Tile::normalized(rank, &s)?;
        if find_complement(&t, rank)?.is_some() {
            tiles.push(t);
        }
    }
    tiles.sort_unstable();
    Ok(tiles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[u32]) -> u64 {
        coords.iter().fold(0, |acc, &i| acc | 1 << (i - 1))
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn family_count_and_order() {
        let fams = family_list();
        assert_eq!(fams.len(), 10);
        let labels: Vec<_> = fams.iter().map(|f| f.label).collect();
        assert_eq!(
            labels,
            ["3", "4.i", "4.ii", "4.iii", "4.iv", "5.a", "5.b", "5.c", "6", "7"]
        );
        assert!(fams.iter().all(|f| f.s_size == 7 - f.rank as usize));
    }

    #[test]
    fn rank6_weights() {
        let f = family_by_label("6").unwrap();
        assert!(f.accepts(&[v(&[1, 2])]));
        assert!(f.accepts(&[v(&[1, 2, 3])]));
        assert!(f.accepts(&[v(&[1, 2, 3, 4, 5, 6])]));
        assert!(!f.accepts(&[v(&[1, 2, 3, 4])]));
        assert!(!f.accepts(&[v(&[1, 2, 3, 4, 5])]));
        assert!(!f.accepts(&[0]));
        assert!(!f.accepts(&[v(&[3])]));
    }

    #[test]
    fn rank4_iv_accepts_weight_three_triple() {
        let f = family_by_label("4.iv").unwrap();
        assert!(f.accepts(&[v(&[1, 2, 3]), v(&[1, 2, 4]), v(&[1, 3, 4])]));
        assert!(f.accepts(&[v(&[1, 3, 4]), v(&[1, 2, 3]), v(&[1, 2, 4])]));
    }

    #[test]
    fn accepts_rejects_malformed_sets() {
        let f = family_by_label("5.a").unwrap();
        assert!(f.accepts(&[v(&[1, 2]), v(&[1, 3])]));
        assert!(!f.accepts(&[v(&[1, 2]), v(&[1, 2])]));
        assert!(!f.accepts(&[v(&[1, 2])]));
        assert!(!f.accepts(&[v(&[1, 6]), v(&[1, 3])]));
    }

    #[test]
    fn rank5_b_includes_disjoint_pairs() {
        let f = family_by_label("5.b").unwrap();
        assert!(f.accepts(&[v(&[4, 5]), v(&[1, 2, 3])]));
        assert!(f.accepts(&[v(&[1, 2]), v(&[1, 2, 3])]));
        assert!(!f.accepts(&[v(&[1, 4]), v(&[1, 2, 3])]));
    }

    #[test]
    fn candidate_counts() {
        assert_eq!(candidates(3).unwrap().len(), 1);
        assert_eq!(candidates(4).unwrap().len(), 165);
        assert_eq!(candidates(5).unwrap().len(), 325);
        assert_eq!(candidates(6).unwrap().len(), 57);
        assert_eq!(candidates(7).unwrap().len(), 1);
        let c4 = candidates(4).unwrap();
        assert!(c4.iter().all(|s| s.windows(2).all(|w| w[0] < w[1])));
        assert!(candidates(2).is_err());
        assert!(candidates(8).is_err());
    }

    #[test]
    fn per_family_counts_match_closed_forms() {
        // Reading 2-sets as edges of the complete graph on the coordinates:
        // 4.i stars plus triangles of K4; 4.ii adjacent edge pairs of K4 (z is
        // their union); 4.iii an edge x and a pair of triples, minus the one
        // pair avoiding x; 4.iv triples of 3-sets; 5.a adjacent edge pairs
        // of K5; 5.b a 3-set with a contained or complementary 2-set; 5.c
        // 3-sets meeting in two points.
        let expected = [
            ("3", 1),
            ("4.i", 4 + 4),
            ("4.ii", 4 * binom(3, 2)),
            ("4.iii", binom(4, 2) * (binom(4, 2) - 1)),
            ("4.iv", binom(4, 3)),
            ("5.a", 5 * binom(4, 2)),
            ("5.b", binom(5, 3) * (3 + 1)),
            ("5.c", binom(5, 3) * 3),
            ("6", binom(6, 2) + binom(6, 3) + 1),
            ("7", 1),
        ];
        for (label, count) in expected {
            let f = family_by_label(label).unwrap();
            assert_eq!(family_tiles(&f).unwrap().len() as u64, count, "{label}");
        }
        assert_eq!(
            ["4.i", "4.ii", "4.iii", "4.iv", "5.a", "5.b", "5.c", "6"].map(|l| family_tiles(
                &family_by_label(l).unwrap()
            )
            .unwrap()
            .len()),
            [8, 12, 30, 4, 30, 40, 30, 36]
        );
    }

    #[test]
    fn by_cases_counts() {
        assert_eq!(
            enumerate_by_cases(3).unwrap(),
            vec![Tile::new(3, 0..8).unwrap()]
        );
        assert_eq!(enumerate_by_cases(4).unwrap().len(), 54);
        assert_eq!(enumerate_by_cases(5).unwrap().len(), 100);
        assert_eq!(enumerate_by_cases(6).unwrap().len(), 36);
        assert_eq!(enumerate_by_cases(7).unwrap().len(), 1);
    }

    #[test]
    fn rank6_split_by_weight() {
        let tiles = enumerate_by_cases(6).unwrap();
        let count = |wt: u32| {
            tiles
                .iter()
                .filter(|t| weight(t.extra_points()[0]) == wt)
                .count()
        };
        assert_eq!((count(2), count(3), count(6)), (15, 20, 1));
    }

    #[test]
    fn families_do_not_overlap() {
        for rank in MIN_RANK..=MAX_RANK {
            assert!(family_overlaps(rank).unwrap().is_empty(), "rank {rank}");
        }
    }

    // A normalized tile of rank r has a complement of size 2^(r-3); for
    // r = 4 that is {0, c} with D and D + c disjoint.
    fn tiles_f2_4(s: &[u64]) -> bool {
        let d: Vec<u64> = [0, 1, 2, 4, 8].iter().chain(s).copied().collect();
        (1..16u64).any(|c| d.iter().all(|&a| !d.contains(&(a ^ c))))
    }

    #[test]
    fn exhaustive_small_ranks() {
        assert_eq!(
            enumerate_exhaustive(7).unwrap(),
            vec![Tile::normalized(7, &[]).unwrap()]
        );
        assert_eq!(
            enumerate_exhaustive(3).unwrap(),
            enumerate_by_cases(3).unwrap()
        );
        let expected: Vec<Tile> = candidates(4)
            .unwrap()
            .into_iter()
            .filter(|s| tiles_f2_4(s))
            .map(|s| Tile::normalized(4, &s).unwrap())
            .collect();
        assert_eq!(enumerate_exhaustive(4).unwrap(), expected);
    }

    #[test]
    fn rank4_gap_between_families_and_tiles_is_inside_4_iii() {
        // Only the sets of 4.iii whose weight-2 vector lies in both weight-3
        // vectors tile; the other 24 have D + D = F2^4.
        let tiles = enumerate_exhaustive(4).unwrap();
        let routes = family_routes(4).unwrap();
        assert!(tiles.iter().all(|t| routes.contains_key(t)));
        let missing: Vec<_> = routes
            .iter()
            .filter(|(t, _)| tiles.binary_search(t).is_err())
            .collect();
        assert_eq!(missing.len(), 24);
        for (t, labels) in missing {
            assert_eq!(labels, &["4.iii"]);
            let s = t.extra_points();
            let x = *s.iter().find(|&&v| weight(v) == 2).unwrap();
            assert!(s.iter().filter(|&&v| weight(v) == 3).any(|&y| y & x != x));
        }
    }

    #[test]
    fn predicates_are_permutation_invariant() {
        use crate::permutation::all_permutations;
        for family in family_list().iter().filter(|f| f.rank <= 5) {
            for s in candidates(family.rank).unwrap() {
                let base = family.accepts(&s);
                for p in all_permutations(family.rank).step_by(7) {
                    let moved: Vec<u64> = s.iter().map(|&x| p.apply_bits(x)).collect();
                    assert_eq!(family.accepts(&moved), base, "{} {s:?} {p}", family.label);
                }
            }
        }
    }

    #[test]
    fn output_is_closed_under_permutation() {
        use crate::equivalence::apply_permutation;
        use crate::permutation::all_permutations;
        for rank in [4, 5] {
            let tiles = enumerate_by_cases(rank).unwrap();
            for t in &tiles {
                for p in all_permutations(rank) {
                    let moved = apply_permutation(&p, t).unwrap();
                    assert!(tiles.binary_search(&moved).is_ok());
                }
            }
        }
    }
}
