//! Vectors of the binary Hamming cube F2^r and sets of them.
//!
//! A vector is a bitmask: bit `i - 1` holds coordinate `i`, so `e1` is the
//! least significant bit. The human-facing text form (coordinate 1 leftmost)
//! lives in [`crate::text`].

use crate::error::{Error, Result};

/// Largest ambient dimension a bitmask can carry.
pub const MAX_DIM: u32 = 64;

/// Largest dimension accepted by [`ball`].
pub const MAX_BALL_DIM: u32 = 7;

/// A vector of F2^dim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    bits: u64,
    dim: u32,
}

impl Point {
    pub fn new(bits: u64, dim: u32) -> Result<Self> {
        check_dim(dim)?;
        if dim < MAX_DIM && bits >> dim != 0 {
            return Err(Error::dimension(format!(
                "bitmask {bits:#x} does not fit in {dim} coordinates"
            )));
        }
        Ok(Point { bits, dim })
    }

    pub fn zero(dim: u32) -> Result<Self> {
        Point::new(0, dim)
    }

    /// The unit vector `e_i`, 1-based.
    pub fn unit(i: u32, dim: u32) -> Result<Self> {
        if i == 0 || i > dim {
            return Err(Error::dimension(format!("e{i} does not exist in F2^{dim}")));
        }
        Point::new(1 << (i - 1), dim)
    }

    /// Builds a point from the 1-based coordinates that are set.
    pub fn from_support(coords: &[u32], dim: u32) -> Result<Self> {
        let mut bits = 0u64;
        for &i in coords {
            bits ^= Point::unit(i, dim)?.bits;
        }
        Point::new(bits, dim)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn dim(self) -> u32 {
        self.dim
    }

    /// Coordinate `i` (1-based).
    pub fn coord(self, i: u32) -> bool {
        i >= 1 && i <= self.dim && self.bits >> (i - 1) & 1 == 1
    }

    pub fn weight(self) -> u32 {
        weight(self.bits)
    }

    /// Coordinatewise sum over GF(2).
    pub fn try_add(self, other: Point) -> Result<Point> {
        if self.dim != other.dim {
            return Err(Error::dimension(format!(
                "cannot add vectors of length {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(Point {
            bits: self.bits ^ other.bits,
            dim: self.dim,
        })
    }

    pub fn distance(self, other: Point) -> Result<u32> {
        Ok(self.try_add(other)?.weight())
    }
}

/// Hamming weight of a bitmask.
#[inline]
pub fn weight(bits: u64) -> u32 {
    bits.count_ones()
}

/// Hamming distance between two bitmasks.
#[inline]
pub fn distance(a: u64, b: u64) -> u32 {
    weight(a ^ b)
}

pub(crate) fn check_dim(dim: u32) -> Result<()> {
    if dim > MAX_DIM {
        return Err(Error::dimension(format!(
            "dimension {dim} exceeds {MAX_DIM}"
        )));
    }
    Ok(())
}

/// Mask with the low `dim` bits set.
#[inline]
pub(crate) fn full_mask(dim: u32) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

/// A finite set of distinct vectors of a common length, kept sorted by bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet {
    dim: u32,
    points: Vec<u64>,
}

impl PointSet {
    /// Builds a set, rejecting duplicates and vectors that do not fit `dim`.
    pub fn new(dim: u32, points: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_dim(dim)?;
        let mut points: Vec<u64> = points.into_iter().collect();
        let mask = full_mask(dim);
        if let Some(bad) = points.iter().find(|&&p| p & !mask != 0) {
            return Err(Error::dimension(format!(
                "bitmask {bad:#x} does not fit in {dim} coordinates"
            )));
        }
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::dimension(format!("duplicate vector {:#x}", w[0])));
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_points(dim: u32, points: &[Point]) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::dimension(format!(
                "vector of length {} in a set of dimension {dim}",
                p.dim()
            )));
        }
        PointSet::new(dim, points.iter().map(|p| p.bits()))
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.points
    }

    pub fn contains(&self, bits: u64) -> bool {
        self.points.binary_search(&bits).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        self.points.iter().map(move |&bits| Point {
            bits,
            dim: self.dim,
        })
    }

    pub fn rank(&self) -> u32 {
        rank(&self.points)
    }
}

/// Dimension over GF(2) of the span of `vectors`.
///
/// Row reduction keeps one basis vector per leading bit; every input is
/// reduced against the basis and either vanishes or contributes a new pivot.
pub fn rank(vectors: &[u64]) -> u32 {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for &v in vectors {
        let mut v = v;
        while v != 0 {
            let lead = 63 - v.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                rank += 1;
                break;
            }
            v ^= basis[lead];
        }
    }
    rank
}

/// The radius-1 Hamming ball around zero: `{0, e1, ..., e_r}`.
pub fn ball(r: u32) -> Result<PointSet> {
    if !(1..=MAX_BALL_DIM).contains(&r) {
        return Err(Error::dimension(format!(
            "ball dimension must be in 1..={MAX_BALL_DIM}, got {r}"
        )));
    }
    PointSet::new(r, std::iter::once(0).chain((0..r).map(|i| 1u64 << i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coords: &[u32], dim: u32) -> Point {
        Point::from_support(coords, dim).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Point::zero(5).unwrap().weight(), 0);
        assert_eq!(p(&[1, 2, 3], 4).weight(), 3);
        assert_eq!(p(&[1, 2, 3, 4, 5, 6], 6).weight(), 6);
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 2], 4).try_add(p(&[2], 4)).unwrap(), p(&[1], 4));
        let s = p(&[1, 2], 4).try_add(p(&[1, 3], 4)).unwrap();
        assert_eq!(s, p(&[2, 3], 4));
        assert_eq!(s.weight(), 2);
        let v = p(&[1, 3, 4], 4);
        assert_eq!(v.try_add(v).unwrap(), Point::zero(4).unwrap());
    }

    #[test]
    fn add_length_mismatch() {
        let err = p(&[1], 4).try_add(p(&[1], 5)).unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(PointSet::new(4, [0]).unwrap().rank(), 0);
        assert_eq!(ball(4).unwrap().rank(), 4);
        assert_eq!(rank(&[]), 0);
        // {0, e1..e4, e1+e2, e1+e3, e1+e4}
        assert_eq!(rank(&[0, 1, 2, 4, 8, 3, 5, 9]), 4);
        assert_eq!(rank(&[3, 5, 6]), 2);
    }

    #[test]
    fn ball_examples() {
        assert_eq!(ball(3).unwrap().masks(), &[0, 1, 2, 4]);
        assert_eq!(ball(7).unwrap().len(), 8);
        assert_eq!(ball(4).unwrap().len(), 5);
        assert!(ball(0).is_err());
        assert!(ball(8).is_err());
    }

    #[test]
    fn point_set_rejects_bad_input() {
        assert!(PointSet::new(3, [1, 1]).is_err());
        assert!(PointSet::new(3, [8]).is_err());
        assert!(Point::new(16, 4).is_err());
        assert!(Point::unit(5, 4).is_err());
    }

    #[test]
    fn coord_is_one_based() {
        let v = p(&[1, 3], 4);
        assert!(v.coord(1) && !v.coord(2) && v.coord(3) && !v.coord(4));
        assert!(!v.coord(0) && !v.coord(5));
    }
}
