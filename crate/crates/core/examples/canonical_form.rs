//! Canonical forms, stabilizers and witnesses for a few rank-4 tiles.

use hamming_tiles::equivalence::{orbit, InvariantSignature};
use hamming_tiles::{
    apply_permutation, canonical_form, find_witness, format_tile, stabilizer_size, Result, Tile,
};

fn main() -> Result<()> {
    // ball(4) plus three vectors of weight 3
    let d1 = Tile::normalized(4, &[0b0111, 0b1011, 0b1101])?;
    let d2 = Tile::normalized(4, &[0b0111, 0b1011, 0b1110])?;

    let (canon, p) = canonical_form(&d2)?;
    println!("D2     {}", format_tile(&d2));
    println!("canon  {}  via {p}", format_tile(&canon));
    assert_eq!(apply_permutation(&p, &d2)?, canon);

    match find_witness(&d2, &d1)? {
        Some(w) => println!("D2 -> D1 by {w}"),
        None => println!("D2 and D1 are inequivalent"),
    }
    println!(
        "stabilizer {}, orbit {}, 4!/stabilizer = {}",
        stabilizer_size(&d1)?,
        orbit(&d1)?.len(),
        24 / stabilizer_size(&d1)?
    );
    println!("signature {:?}", InvariantSignature::of(&d1));
    Ok(())
}
