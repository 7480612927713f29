//! Complements by exact cover: a rank-4 tile, a set that fails, and the
//! radius-1 ball in F2^7, whose complement is the Hamming code.

use hamming_tiles::hamming::distance;
use hamming_tiles::text::format_vector;
use hamming_tiles::tiling::count_complements;
use hamming_tiles::{ball, find_complement, verify_tiling, Result, Tile};

fn main() -> Result<()> {
    let t = Tile::normalized(4, &[0b0011, 0b0101, 0b1001])?;
    let cert = find_complement(&t, 4)?.expect("tiles F2^4");
    println!(
        "C = {:?}, verified: {}",
        cert.complement,
        verify_tiling(&t, &cert, 4)
    );
    println!(
        "embedded in F2^6: {} complements",
        count_complements(&t, 6, u64::MAX)?
    );

    let bad = Tile::normalized(4, &[0b0011, 0b1100, 0b0101])?;
    println!("{{e1+e2, e3+e4, e1+e3}}: {:?}", find_complement(&bad, 4)?);

    let b7 = Tile::from_point_set(&ball(7)?)?;
    let code = find_complement(&b7, 7)?
        .expect("the ball tiles F2^7")
        .complement;
    let min = code
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| code[i + 1..].iter().map(move |&b| distance(a, b)))
        .min()
        .unwrap();
    println!("ball(7): |C| = {}, minimum distance {min}", code.len());
    for c in &code {
        println!("  {}", format_vector(*c, 7));
    }
    Ok(())
}
