//! Partitions the normalized tiles of each rank into permutation classes.
//!
//! Pass a rank to print every member with its witness.

use hamming_tiles::equivalence::{factorial, stabilizer_size};
use hamming_tiles::{enumerate_by_cases, format_tile, partition_classes, Result};

fn main() -> Result<()> {
    let only: Option<u32> = std::env::args().nth(1).and_then(|a| a.parse().ok());
    let mut total = 0;
    for rank in 3..=7 {
        if only.is_some_and(|r| r != rank) {
            continue;
        }
        let classes = partition_classes(&enumerate_by_cases(rank)?)?;
        total += classes.len();
        println!("rank {rank}: {} classes", classes.len());
        for c in &classes {
            let stab = stabilizer_size(&c.representative)?;
            println!(
                "  {}  size {:>2}  ({}!/{stab} = {})",
                format_tile(&c.representative),
                c.len(),
                rank,
                factorial(rank) / stab
            );
            if only.is_some() {
                for m in &c.members {
                    println!("    {}  {}", format_tile(&m.tile), m.witness);
                }
            }
        }
    }
    println!("{total} classes");
    Ok(())
}
