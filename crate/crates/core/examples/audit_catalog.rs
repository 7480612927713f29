//! Audits the built-in listing and prints the summary and findings.
//!
//! `cargo run --example audit_catalog -- markdown` prints the full report.

use hamming_tiles::catalog::catalog_checksum;
use hamming_tiles::report::ReportMeta;
use hamming_tiles::{builtin_catalog, export_report, verify_catalog, Result};

fn main() -> Result<()> {
    let catalog = builtin_catalog();
    let report = verify_catalog(catalog);
    if let Some(format) = std::env::args().nth(1) {
        let meta = ReportMeta::new(catalog_checksum(catalog));
        print!("{}", export_report(&report, &format, Some(&meta))?);
        return Ok(());
    }
    let s = &report.summary;
    println!("checksum        {}", catalog_checksum(catalog));
    println!("labeled         {}", s.labeled_entries);
    println!("distinct        {}", s.distinct_tiles);
    println!("classes         {}", s.classes);
    for (rank, classes) in &s.per_rank_class_sizes {
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        println!("  rank {rank}        {sizes:?}");
    }
    println!(
        "witness ok      {}",
        s.witness_primary + s.witness_inverse + s.witness_opposite_composition
    );
    println!("repaired        {}", s.witness_repaired);
    println!("failures        {}", s.failures);
    for f in &s.findings {
        println!("- {f}");
    }
    Ok(())
}
