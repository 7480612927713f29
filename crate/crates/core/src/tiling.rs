//! Tile-hood by exact cover.
//!
//! A set `D` of eight vectors tiles F2^n when some complement `C` makes every
//! vector of the cube uniquely expressible as `d + c`. The search here covers
//! the cube with translates `D + c`: it always branches on the least
//! uncovered cell `x`, whose only possible covering translates are the eight
//! origins `x + d`. The whole cube state is a bitmap of `2^n` cells.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hamming::{self, full_mask, PointSet};

/// Number of vectors in a tile.
pub const TILE_SIZE: usize = 8;

/// Largest ambient dimension the complement search will attempt.
pub const MAX_SEARCH_DIM: u32 = 20;

/// Eight distinct vectors of F2^dim, stored as sorted bitmasks.
///
/// Ordering compares the sorted bitmask sequences lexicographically, which
/// is the order used for canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    dim: u32,
    points: [u64; TILE_SIZE],
}

impl Tile {
    pub fn new(dim: u32, points: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set = PointSet::new(dim, points)?;
        Tile::from_point_set(&set)
    }

    pub fn from_point_set(set: &PointSet) -> Result<Self> {
        let masks = set.masks();
        let points: [u64; TILE_SIZE] = masks.try_into().map_err(|_| {
            Error::dimension(format!(
                "a tile has {TILE_SIZE} points, got {}",
                masks.len()
            ))
        })?;
        Ok(Tile {
            dim: set.dim(),
            points,
        })
    }

    /// `ball(dim)` together with the extra vectors `s`.
    pub fn normalized(dim: u32, s: &[u64]) -> Result<Self> {
        let ball = hamming::ball(dim)?;
        Tile::new(dim, ball.masks().iter().copied().chain(s.iter().copied()))
    }

    /// Builds a tile from already sorted, distinct, in-range masks.
    pub(crate) fn from_sorted_unchecked(dim: u32, points: [u64; TILE_SIZE]) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Tile { dim, points }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn points(&self) -> &[u64; TILE_SIZE] {
        &self.points
    }

    pub fn contains(&self, bits: u64) -> bool {
        self.points.binary_search(&bits).is_ok()
    }

    pub fn rank(&self) -> u32 {
        hamming::rank(&self.points)
    }

    pub fn to_point_set(&self) -> PointSet {
        PointSet::new(self.dim, self.points).expect("tile invariants hold")
    }

    /// True if the tile contains zero and every unit vector and spans F2^dim.
    pub fn is_normalized(&self) -> bool {
        self.contains(0) && (0..self.dim).all(|i| self.contains(1 << i)) && self.rank() == self.dim
    }

    /// The vectors outside the radius-1 ball, ascending.
    pub fn extra_points(&self) -> Vec<u64> {
        self.points
            .iter()
            .copied()
            .filter(|&p| hamming::weight(p) >= 2)
            .collect()
    }

    /// The translate `D + v`.
    pub fn translate(&self, v: u64) -> Result<Tile> {
        Tile::new(self.dim, self.points.iter().map(|&p| p ^ v))
    }

    /// The same vectors read in a larger space (new coordinates appended, zero).
    pub fn embed(&self, dim: u32) -> Result<Tile> {
        if dim < self.dim {
            let mask = full_mask(dim);
            if self.points.iter().any(|&p| p & !mask != 0) {
                return Err(Error::dimension(format!(
                    "tile of dimension {} does not fit in F2^{dim}",
                    self.dim
                )));
            }
        }
        Tile::new(dim, self.points)
    }
}

/// A complement `C` with `D + C = F2^n`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TilingCertificate {
    pub dim: u32,
    pub complement: Vec<u64>,
}

fn check_search_dim(tile: &Tile, n: u32) -> Result<()> {
    if n > MAX_SEARCH_DIM {
        return Err(Error::SearchRefused {
            n,
            limit: MAX_SEARCH_DIM,
        });
    }
    if n < 3 {
        return Err(Error::dimension(format!(
            "an 8-point tile cannot tile F2^{n}"
        )));
    }
    let mask = full_mask(n);
    if tile.points.iter().any(|&p| p & !mask != 0) {
        return Err(Error::dimension(format!(
            "tile does not fit in F2^{n} (rank {}, dimension {})",
            tile.rank(),
            tile.dim
        )));
    }
    Ok(())
}

/// Finds a complement of `tile` in F2^n, or `None` if the tile does not tile
/// F2^n.
///
/// The tile's vectors are read as length-`n` vectors; coordinates above the
/// tile's dimension are zero. The result is deterministic.
pub fn find_complement(tile: &Tile, n: u32) -> Result<Option<TilingCertificate>> {
    check_search_dim(tile, n)?;
    let mut found = None;
    search(tile, n, |c| {
        found = Some(c.to_vec());
        false
    });
    Ok(found.map(|mut complement| {
        complement.sort_unstable();
        TilingCertificate { dim: n, complement }
    }))
}

/// Counts the complements reachable by the search, stopping at `limit`.
///
/// Each complement is a set of translates reached along one branch order, so
/// this counts every tiling `(D, C)` of F2^n exactly once.
pub fn count_complements(tile: &Tile, n: u32, limit: u64) -> Result<u64> {
    check_search_dim(tile, n)?;
    let mut count = 0u64;
    if limit == 0 {
        return Ok(0);
    }
    search(tile, n, |_| {
        count += 1;
        count < limit
    });
    Ok(count)
}

/// Bitmap of `2^n` cells.
struct Coverage {
    words: Vec<u64>,
    cells: u64,
}

impl Coverage {
    fn new(n: u32) -> Self {
        let cells = 1u64 << n;
        Coverage {
            words: vec![0; cells.div_ceil(64) as usize],
            cells,
        }
    }

    #[inline]
    fn is_set(&self, cell: u64) -> bool {
        self.words[(cell >> 6) as usize] >> (cell & 63) & 1 == 1
    }

    #[inline]
    fn toggle(&mut self, cell: u64) {
        self.words[(cell >> 6) as usize] ^= 1 << (cell & 63);
    }

    /// Least uncovered cell at or after `from`.
    fn first_clear(&self, from: u64) -> Option<u64> {
        let mut w = (from >> 6) as usize;
        let mut word = !self.words.get(w)? & (u64::MAX << (from & 63));
        loop {
            if word != 0 {
                let cell = (w as u64) << 6 | word.trailing_zeros() as u64;
                return (cell < self.cells).then_some(cell);
            }
            w += 1;
            word = !*self.words.get(w)?;
        }
    }
}

struct Frame {
    cell: u64,
    origins: [u64; TILE_SIZE],
    next: usize,
    placed: Option<u64>,
}

/// Depth-first exact cover by translates. `on_solution` receives the chosen
/// origins and returns whether to keep searching.
fn search(tile: &Tile, n: u32, mut on_solution: impl FnMut(&[u64]) -> bool) {
    let mut cover = Coverage::new(n);
    let mut chosen: Vec<u64> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let fits = |cover: &Coverage, c: u64| tile.points.iter().all(|&d| !cover.is_set(d ^ c));
    let flip = |cover: &mut Coverage, c: u64| {
        for &d in &tile.points {
            cover.toggle(d ^ c);
        }
    };

    // Descend from the least uncovered cell, or report a solution.
    let mut descend = true;
    loop {
        if descend {
            let from = stack.last().map_or(0, |f| f.cell);
            match cover.first_clear(from) {
                None => {
                    if !on_solution(&chosen) {
                        return;
                    }
                }
                Some(cell) => {
                    let mut origins = tile.points.map(|d| d ^ cell);
                    origins.sort_unstable();
                    stack.push(Frame {
                        cell,
                        origins,
                        next: 0,
                        placed: None,
                    });
                }
            }
        }

        let Some(frame) = stack.last_mut() else {
            return;
        };
        if let Some(c) = frame.placed.take() {
            flip(&mut cover, c);
            chosen.pop();
        }
        let mut advanced = false;
        while frame.next < TILE_SIZE {
            let c = frame.origins[frame.next];
            frame.next += 1;
            if fits(&cover, c) {
                flip(&mut cover, c);
                chosen.push(c);
                frame.placed = Some(c);
                advanced = true;
                break;
            }
        }
        if advanced {
            descend = true;
        } else {
            stack.pop();
            descend = false;
        }
    }
}

/// True iff `|D| * |C| = 2^n` and all sums `d + c` are distinct vectors of
/// F2^n. Malformed certificates are rejected rather than reported as errors.
pub fn verify_tiling(tile: &Tile, cert: &TilingCertificate, n: u32) -> bool {
    if cert.dim != n || n > MAX_SEARCH_DIM {
        return false;
    }
    let cells = 1u64 << n;
    if (TILE_SIZE as u64) * (cert.complement.len() as u64) != cells {
        return false;
    }
    let mask = full_mask(n);
    if tile
        .points
        .iter()
        .chain(&cert.complement)
        .any(|&p| p & !mask != 0)
    {
        return false;
    }
    let mut cover = Coverage::new(n);
    for &c in &cert.complement {
        for &d in &tile.points {
            let cell = d ^ c;
            if cover.is_set(cell) {
                return false;
            }
            cover.toggle(cell);
        }
    }
    true
}
