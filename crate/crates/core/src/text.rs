//! Plain-text tiles: an optional `r=<dim>;` header followed by eight binary
//! strings separated by whitespace or commas. The leftmost character of each
//! string is coordinate 1.
//!
//! ```
//! use hamming_tiles::text::{format_tile, parse_tile};
//!
//! let t = parse_tile("r=3; 000 100 010 001 110 101 011 111").unwrap();
//! assert_eq!(t.dim(), 3);
//! assert_eq!(parse_tile(&format_tile(&t)).unwrap(), t);
//! ```

use crate::error::{Error, Result};
use crate::hamming::MAX_DIM;
use crate::tiling::{Tile, TILE_SIZE};

/// Binary string of length `dim`, coordinate 1 first.
pub fn format_vector(bits: u64, dim: u32) -> String {
    (0..dim)
        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn parse_vector(text: &str) -> Result<u64> {
    if text.is_empty() || text.len() > MAX_DIM as usize {
        return Err(Error::parse(format!("bad vector length in {text:?}")));
    }
    text.chars()
        .enumerate()
        .try_fold(0u64, |acc, (i, c)| match c {
            '0' => Ok(acc),
            '1' => Ok(acc | 1 << i),
            _ => Err(Error::parse(format!(
                "unexpected character {c:?} in vector {text:?}"
            ))),
        })
}

/// `r=<dim>; v1 v2 ... v8`, vectors in tile order.
pub fn format_tile(t: &Tile) -> String {
    let vectors: Vec<String> = t
        .points()
        .iter()
        .map(|&p| format_vector(p, t.dim()))
        .collect();
    format!("r={}; {}", t.dim(), vectors.join(" "))
}

pub fn parse_tile(text: &str) -> Result<Tile> {
    let text = text.trim();
    let (header, body) = match text.split_once(';') {
        Some((h, b)) => (Some(h.trim()), b),
        None => (None, text),
    };
    let declared = header
        .map(|h| {
            h.strip_prefix("r=")
                .and_then(|d| d.trim().parse::<u32>().ok())
                .ok_or_else(|| Error::parse(format!("bad header {h:?}, expected r=<dim>")))
        })
        .transpose()?;
    let words: Vec<&str> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .collect();
    if words.len() != TILE_SIZE {
        return Err(Error::parse(format!(
            "expected {TILE_SIZE} vectors, found {}",
            words.len()
        )));
    }
    let dim = declared.unwrap_or(words[0].len() as u32);
    if let Some(w) = words.iter().find(|w| w.len() != dim as usize) {
        return Err(Error::parse(format!(
            "vector {w:?} does not have length {dim}"
        )));
    }
    let points = words
        .iter()
        .map(|w| parse_vector(w))
        .collect::<Result<Vec<_>>>()?;
    Tile::new(dim, points).map_err(|e| match e {
        Error::Dimension(m) => Error::Parse(m),
        other => other,
    })
}

/// One tile per non-empty line; lines starting with `#` are skipped.
pub fn parse_tile_list(text: &str) -> Result<Vec<Tile>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(n, l)| parse_tile(l).map_err(|e| Error::parse(format!("line {}: {e}", n + 1))))
        .collect()
}
