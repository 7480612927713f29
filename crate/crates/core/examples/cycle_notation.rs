//! Reading and writing permutations in cycle notation.

use hamming_tiles::permutation::{parse_cycles_with, CompositionOrder};
use hamming_tiles::{format_cycles, parse_cycles, Result};

fn main() -> Result<()> {
    for text in ["()", "(12)", "(1243)", "(12)(34)", "(25)(35)", "(143)(25)"] {
        let p = parse_cycles(text, 6)?;
        let q = parse_cycles_with(text, 6, CompositionOrder::LeftToRight)?;
        println!(
            "{text:<10} right-to-left {:<8} left-to-right {:<8} inverse {:<8} images {:?}",
            format_cycles(&p),
            format_cycles(&q),
            format_cycles(&p.inverse()),
            p.images()
        );
    }
    for bad in ["(18)", "(121)", "(12", "12"] {
        println!("{bad:<10} {}", parse_cycles(bad, 6).unwrap_err());
    }
    Ok(())
}
