//! Lists the normalized tiles of every rank, by weight conditions and by
//! exhaustive complement search, and shows where the two disagree.

use hamming_tiles::enumerate::{
    candidates, enumerate_by_cases, enumerate_exhaustive, families_of_rank,
};
use hamming_tiles::tiling::Tile;
use hamming_tiles::Result;

fn main() -> Result<()> {
    for rank in 3..=7 {
        let cases = enumerate_by_cases(rank)?;
        let search = enumerate_exhaustive(rank)?;
        println!(
            "rank {rank}: {} candidates, {} from families, {} tile F2^{rank}",
            candidates(rank)?.len(),
            cases.len(),
            search.len()
        );
        for fam in families_of_rank(rank) {
            println!("  {:<6} {}", fam.label, fam.description);
        }
        let gap: Vec<&Tile> = cases
            .iter()
            .filter(|t| search.binary_search(t).is_err())
            .collect();
        if !gap.is_empty() {
            println!(
                "  {} family sets have no complement, e.g. S = {:?}",
                gap.len(),
                gap[0].extra_points()
            );
        }
    }
    Ok(())
}
