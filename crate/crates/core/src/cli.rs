//! The `hamming-tiles` command line.
//!
//! [`run`] takes the full argument vector (program name first) and explicit
//! streams, so it can be driven from tests exactly as from a shell. Exit
//! codes: 0 success, 1 a verification disagreement, 2 a usage or input error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{builtin_catalog, catalog_checksum, verify_catalog};
use crate::enumerate::{enumerate_by_cases, enumerate_exhaustive};
use crate::equivalence::{canonical_form, find_witness, partition_classes};
use crate::error::{Error, Result};
use crate::permutation::format_cycles;
use crate::report::{export_report, ReportFormat, ReportMeta};
use crate::text::{format_tile, format_vector, parse_tile, parse_tile_list};
use crate::tiling::{find_complement, verify_tiling, Tile};

#[derive(Debug, Parser)]
#[command(
    name = "hamming-tiles",
    version,
    about = "Tiles of the binary Hamming cube with eight elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Cases,
    Exhaustive,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the normalized tiles of a rank.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=7))]
        rank: u32,
        #[arg(long, value_enum, default_value_t = Method::Cases)]
        method: Method,
    },
    /// Group tiles into permutation classes.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=7), required_unless_present = "input", conflicts_with = "input")]
        rank: Option<u32>,
        /// File with one tile per line (`-` for stdin).
        #[arg(long)]
        input: Option<String>,
    },
    /// Audit the built-in listing.
    VerifyCatalog {
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Omit the version/checksum block from JSON output.
        #[arg(long)]
        no_meta: bool,
    },
    /// Find a complement of a tile.
    Complement {
        #[arg(long)]
        tile: String,
        #[arg(long)]
        dim: Option<u32>,
    },
    /// Canonical form of a tile and the permutation reaching it.
    Canon {
        #[arg(long)]
        tile: String,
    },
    /// A permutation carrying tile A onto tile B.
    Witness {
        #[arg(long)]
        tile_a: String,
        #[arg(long)]
        tile_b: String,
    },
}

/// Runs the command line; returns the process exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match execute(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io_err(what: &str, e: std::io::Error) -> Error {
    Error::Usage(format!("{what}: {e}"))
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| io_err("reading stdin", e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io_err(&format!("reading {path}"), e))
    }
}

fn read_tile(path: &str, stdin: &mut dyn Read) -> Result<Tile> {
    parse_tile(&read_source(path, stdin)?)
}

fn execute(
    cmd: Command,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let w = |e| io_err("writing output", e);
    match cmd {
        Command::Enumerate { rank, method } => {
            let cases = matches!(method, Method::Cases | Method::Both)
                .then(|| enumerate_by_cases(rank))
                .transpose()?;
            let exhaustive = matches!(method, Method::Exhaustive | Method::Both)
                .then(|| enumerate_exhaustive(rank))
                .transpose()?;
            let listed = cases
                .as_ref()
                .or(exhaustive.as_ref())
                .expect("one method runs");
            for t in listed {
                writeln!(out, "{}", format_tile(t)).map_err(w)?;
            }
            if let Some(c) = &cases {
                writeln!(out, "# cases {}", c.len()).map_err(w)?;
            }
            if let Some(x) = &exhaustive {
                writeln!(out, "# exhaustive {}", x.len()).map_err(w)?;
            }
            if let (Some(c), Some(x)) = (&cases, &exhaustive) {
                if c != x {
                    for t in c.iter().filter(|t| x.binary_search(t).is_err()) {
                        writeln!(err, "only by cases: {}", format_tile(t)).map_err(w)?;
                    }
                    for t in x.iter().filter(|t| c.binary_search(t).is_err()) {
                        writeln!(err, "only exhaustive: {}", format_tile(t)).map_err(w)?;
                    }
                    writeln!(out, "# methods disagree").map_err(w)?;
                    return Ok(1);
                }
                writeln!(out, "# methods agree").map_err(w)?;
            }
            Ok(0)
        }
        Command::Classify { rank, input } => {
            let tiles = match (rank, input) {
                (Some(r), _) => enumerate_by_cases(r)?,
                (None, Some(path)) => parse_tile_list(&read_source(&path, stdin)?)?,
                (None, None) => unreachable!("clap requires --rank or --input"),
            };
            let classes = partition_classes(&tiles)?;
            for (i, class) in classes.iter().enumerate() {
                writeln!(out, "class {} size {}", i + 1, class.len()).map_err(w)?;
                writeln!(
                    out,
                    "  representative {}",
                    format_tile(&class.representative)
                )
                .map_err(w)?;
                for m in &class.members {
                    writeln!(
                        out,
                        "  {} {}",
                        format_tile(&m.tile),
                        format_cycles(&m.witness)
                    )
                    .map_err(w)?;
                }
            }
            writeln!(
                out,
                "# classes {} tiles {}",
                classes.len(),
                classes.iter().map(|c| c.len()).sum::<usize>()
            )
            .map_err(w)?;
            Ok(0)
        }
        Command::VerifyCatalog {
            format,
            out: path,
            no_meta,
        } => {
            format.parse::<ReportFormat>()?;
            let catalog = builtin_catalog();
            let report = verify_catalog(catalog);
            let meta = (!no_meta).then(|| ReportMeta::new(catalog_checksum(catalog)));
            let text = export_report(&report, &format, meta.as_ref())?;
            match path {
                Some(p) => fs::write(&p, text)
                    .map_err(|e| io_err(&format!("writing {}", p.display()), e))?,
                None => out.write_all(text.as_bytes()).map_err(w)?,
            }
            let s = &report.summary;
            writeln!(
                err,
                "{} labeled entries, {} distinct tiles, {} classes, {} failures",
                s.labeled_entries, s.distinct_tiles, s.classes, s.failures
            )
            .map_err(w)?;
            Ok(if s.failures > 0 { 1 } else { 0 })
        }
        Command::Complement { tile, dim } => {
            let t = read_tile(&tile, stdin)?;
            let n = dim.unwrap_or(t.dim());
            match find_complement(&t, n)? {
                Some(cert) => {
                    if !verify_tiling(&t, &cert, n) {
                        writeln!(err, "complement failed verification").map_err(w)?;
                        return Ok(1);
                    }
                    for &c in &cert.complement {
                        writeln!(out, "{}", format_vector(c, n)).map_err(w)?;
                    }
                }
                None => writeln!(out, "NONE").map_err(w)?,
            }
            Ok(0)
        }
        Command::Canon { tile } => {
            let (canon, p) = canonical_form(&read_tile(&tile, stdin)?)?;
            writeln!(out, "{}", format_tile(&canon)).map_err(w)?;
            writeln!(out, "{}", format_cycles(&p)).map_err(w)?;
            Ok(0)
        }
        Command::Witness { tile_a, tile_b } => {
            let a = read_tile(&tile_a, stdin)?;
            let b = read_tile(&tile_b, stdin)?;
            match find_witness(&a, &b)? {
                Some(p) => writeln!(out, "{}", format_cycles(&p)).map_err(w)?,
                None => writeln!(out, "NONE").map_err(w)?,
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hamming-tiles").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn complement_of_rank3_tile() {
        let (code, out, _) = call(
            &["complement", "--tile", "-", "--dim", "3"],
            "000 100 010 001 110 101 011 111",
        );
        assert_eq!((code, out.as_str()), (0, "000\n"));
    }

    #[test]
    fn canon_from_stdin() {
        let (code, out, _) = call(
            &["canon", "--tile", "-"],
            "r=4; 0000 1000 0100 0010 0001 0011 0101 1001",
        );
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        let canon = parse_tile(lines[0]).unwrap();
        assert_eq!(canon, canonical_form(&canon).unwrap().0);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&[], "").0, 2);
        assert_eq!(call(&["enumerate", "--rank", "9"], "").0, 2);
        assert_eq!(call(&["classify"], "").0, 2);
        assert_eq!(call(&["canon", "--tile", "-"], "0000 1000").0, 2);
        assert_eq!(call(&["verify-catalog", "--format", "xml"], "").0, 2);
        assert_eq!(
            call(&["complement", "--tile", "/nonexistent/tile"], "").0,
            2
        );
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("verify-catalog"));
    }
}
