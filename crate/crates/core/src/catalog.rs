//! The published listing of 193 labeled tiles and an auditor for its claims.
//!
//! Each entry `D_i^r` names its tile, its family block and, unless it is a
//! class representative, the representative it is claimed to be equivalent
//! to together with a permutation in cycle notation. [`verify_catalog`]
//! re-checks every one of those claims from scratch.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::enumerate::family_by_label;
use crate::equivalence::{apply_permutation, canonical_form, find_witness, partition_classes};
use crate::error::{Error, Result};
use crate::permutation::{format_cycles, parse_cycles_with, CompositionOrder, Permutation};
use crate::tiling::{find_complement, Tile};

const CATALOG_DATA: &str = include_str!("../data/catalog.txt");

/// `D_index^rank`. Displayed as `D<rank>.<index>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntryId {
    pub rank: u32,
    pub index: u32,
}

impl EntryId {
    pub fn new(rank: u32, index: u32) -> Self {
        EntryId { rank, index }
    }
}

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}.{}", self.rank, self.index)
    }
}

impl FromStr for EntryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad entry id {s:?}, expected D<rank>.<index>"));
        let (rank, index) = s
            .strip_prefix('D')
            .and_then(|r| r.split_once('.'))
            .ok_or_else(bad)?;
        Ok(EntryId {
            rank: rank.parse().map_err(|_| bad())?,
            index: index.parse().map_err(|_| bad())?,
        })
    }
}

impl Serialize for EntryId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: EntryId,
    /// Label of the family block the entry is listed under, e.g. `4.iii`.
    pub family: String,
    pub tile: Tile,
    /// `None` for representatives.
    pub claimed_representative: Option<EntryId>,
    /// Cycle notation as printed; `None` for representatives.
    pub claimed_witness: Option<String>,
}

impl CatalogEntry {
    pub fn is_representative(&self) -> bool {
        self.claimed_representative.is_none()
    }
}

fn parse_point(token: &str, rank: u32) -> Result<u64> {
    if token == "0" {
        return Ok(0);
    }
    token.split('+').try_fold(0u64, |acc, e| {
        let i: u32 = e
            .strip_prefix('e')
            .and_then(|i| i.parse().ok())
            .filter(|i| (1..=rank).contains(i))
            .ok_or_else(|| Error::parse(format!("bad point {token:?}")))?;
        if acc >> (i - 1) & 1 == 1 {
            return Err(Error::parse(format!("repeated coordinate in {token:?}")));
        }
        Ok(acc | 1 << (i - 1))
    })
}

/// Parses the listing format of `data/catalog.txt`:
///
/// ```text
/// family 4 iii
/// 4 21 | 0 e1 e2 e3 e4 e1+e2 e1+e2+e3 e1+e2+e4 |
/// 4 23 | 0 e1 e2 e3 e4 e2+e3 e2+e1+e3 e2+e1+e4 | 4 22 (12)
/// ```
///
/// Family blocks are `<rank> <label>` with `-` for the single-family ranks
/// and `x` for rank 6.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut family: Option<(u32, String)> = None;
    let mut entries = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let err = |m: String| Error::parse(format!("catalog line {}: {m}", n + 1));
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("family ") {
            let (rank, label) = rest
                .split_once(' ')
                .ok_or_else(|| err("bad family line".into()))?;
            let rank: u32 = rank.parse().map_err(|_| err("bad family rank".into()))?;
            let label = match label.trim() {
                "-" | "x" => rank.to_string(),
                l => format!("{rank}.{l}"),
            };
            if family_by_label(&label).is_none() {
                return Err(err(format!("unknown family {label}")));
            }
            family = Some((rank, label));
            continue;
        }
        let (fam_rank, fam_label) = family
            .clone()
            .ok_or_else(|| err("entry before family".into()))?;
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [id, points, claim] = fields[..] else {
            return Err(err("expected three |-separated fields".into()));
        };
        let id: Vec<u32> = id
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| err(format!("bad id {id:?}"))))
            .collect::<Result<_>>()?;
        let [rank, index] = id[..] else {
            return Err(err("bad id".into()));
        };
        if rank != fam_rank {
            return Err(err(format!(
                "rank {rank} entry inside a rank {fam_rank} block"
            )));
        }
        let pts = points
            .split_whitespace()
            .map(|p| parse_point(p, rank))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| err(e.to_string()))?;
        let tile = Tile::new(rank, pts).map_err(|e| err(e.to_string()))?;
        let (claimed_representative, claimed_witness) = if claim.is_empty() {
            (None, None)
        } else {
            let mut parts = claim.splitn(3, ' ');
            let (Some(r), Some(i), Some(w)) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(format!("bad claim {claim:?}")));
            };
            let r = r.parse().map_err(|_| err(format!("bad claim {claim:?}")))?;
            let i = i.parse().map_err(|_| err(format!("bad claim {claim:?}")))?;
            (Some(EntryId::new(r, i)), Some(w.trim().to_string()))
        };
        entries.push(CatalogEntry {
            id: EntryId::new(rank, index),
            family: fam_label,
            tile,
            claimed_representative,
            claimed_witness,
        });
    }
    Ok(entries)
}

/// The full listing in published order.
pub fn builtin_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_DATA).expect("embedded catalog parses"))
}

/// SHA-256 (hex) over a canonical serialization of the entries: one line per
/// entry with id, family, sorted point masks, claimed representative and
/// witness.
pub fn catalog_checksum(entries: &[CatalogEntry]) -> String {
    let mut hasher = Sha256::new();
    for e in entries {
        let pts: Vec<String> = e.tile.points().iter().map(u64::to_string).collect();
        let rep = e
            .claimed_representative
            .map_or("-".to_string(), |r| r.to_string());
        let line = format!(
            "{} {} {} {} {}\n",
            e.id,
            e.family,
            pts.join(","),
            rep,
            e.claimed_witness.as_deref().unwrap_or("-")
        );
        hasher.update(line.as_bytes());
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Which reading of a printed witness `P` satisfies `P . entry = representative`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessConvention {
    /// Products read right to left, `e_i -> e_P(i)`.
    Primary,
    /// The inverse of the primary reading.
    Inverse,
    /// Products read left to right.
    OppositeComposition,
    None,
}

impl WitnessConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessConvention::Primary => "primary",
            WitnessConvention::Inverse => "inverse",
            WitnessConvention::OppositeComposition => "opposite_composition",
            WitnessConvention::None => "none",
        }
    }
}

/// The first reading of `witness` under which it maps `entry` onto `target`.
pub fn check_witness(witness: &str, entry: &Tile, target: &Tile) -> WitnessConvention {
    let maps = |p: &Permutation| apply_permutation(p, entry).is_ok_and(|img| img == *target);
    let rank = entry.dim();
    if let Ok(p) = parse_cycles_with(witness, rank, CompositionOrder::RightToLeft) {
        if maps(&p) {
            return WitnessConvention::Primary;
        }
        if maps(&p.inverse()) {
            return WitnessConvention::Inverse;
        }
    }
    match parse_cycles_with(witness, rank, CompositionOrder::LeftToRight) {
        Ok(p) if maps(&p) => WitnessConvention::OppositeComposition,
        _ => WitnessConvention::None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: EntryId,
    pub family: String,
    pub family_ok: bool,
    pub tiles_ok: bool,
    pub witness_claimed: Option<String>,
    /// `None` for representatives.
    pub witness_convention: Option<WitnessConvention>,
    pub witness_repaired: Option<String>,
    pub no_witness_exists: bool,
    /// The claimed representative; representatives claim themselves.
    pub rep_claimed: EntryId,
    /// The listed representative sharing this entry's canonical form.
    pub rep_computed: Option<EntryId>,
    pub duplicate_of: Option<EntryId>,
}

impl EntryReport {
    /// A claim that is wrong beyond a misprinted permutation.
    pub fn is_failure(&self) -> bool {
        !self.family_ok
            || !self.tiles_ok
            || self.no_witness_exists
            || self.rep_computed != Some(self.rep_claimed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    /// The listed representative of the class, if any entry in it is one.
    pub representative: Option<EntryId>,
    /// Distinct tiles in the class.
    pub size: usize,
    /// Labeled entries in the class.
    pub labeled: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub labeled_entries: usize,
    pub representatives: usize,
    pub distinct_tiles: usize,
    pub classes: usize,
    /// Classes per rank, in the order their representatives are listed.
    pub per_rank_class_sizes: BTreeMap<u32, Vec<ClassSummary>>,
    pub family_failures: usize,
    pub tiling_failures: usize,
    pub witness_primary: usize,
    pub witness_inverse: usize,
    pub witness_opposite_composition: usize,
    pub witness_repaired: usize,
    pub no_witness_exists: usize,
    pub representative_mismatches: usize,
    pub duplicate_pairs: usize,
    /// Entries with a failure as defined by [`EntryReport::is_failure`].
    pub failures: usize,
    /// One line per discrepancy, in entry order.
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub summary: ReportSummary,
    pub entries: Vec<EntryReport>,
}

/// Audits every claim of the listing. Never fails: problems are report
/// content.
pub fn verify_catalog(entries: &[CatalogEntry]) -> VerificationReport {
    let by_id: BTreeMap<EntryId, &CatalogEntry> = entries.iter().map(|e| (e.id, e)).collect();

    // Canonical form of every listed representative, first listing wins.
    let mut canon_rep: BTreeMap<Tile, EntryId> = BTreeMap::new();
    let mut canon_of: Vec<Option<Tile>> = Vec::with_capacity(entries.len());
    for e in entries {
        let canon = canonical_form(&e.tile).ok().map(|(c, _)| c);
        if let (Some(c), true) = (canon, e.is_representative()) {
            canon_rep.entry(c).or_insert(e.id);
        }
        canon_of.push(canon);
    }

    let mut first_seen: BTreeMap<Tile, EntryId> = BTreeMap::new();
    let mut twins: BTreeMap<EntryId, EntryId> = BTreeMap::new();
    for e in entries {
        match first_seen.get(&e.tile) {
            Some(&first) => {
                twins.entry(first).or_insert(e.id);
                twins.insert(e.id, first);
            }
            None => {
                first_seen.insert(e.tile, e.id);
            }
        }
    }

    let mut reports = Vec::with_capacity(entries.len());
    let mut findings = Vec::new();
    for (e, canon) in entries.iter().zip(&canon_of) {
        let family_ok = family_by_label(&e.family)
            .is_some_and(|f| f.rank == e.id.rank && f.accepts_tile(&e.tile));
        let tiles_ok = find_complement(&e.tile, e.tile.dim()).is_ok_and(|c| c.is_some());
        let rep_claimed = e.claimed_representative.unwrap_or(e.id);
        let rep_computed = canon.and_then(|c| canon_rep.get(&c).copied());

        let mut witness_convention = None;
        let mut witness_repaired = None;
        let mut no_witness_exists = false;
        if let Some(w) = &e.claimed_witness {
            let target = by_id.get(&rep_claimed).map(|r| r.tile);
            let conv = target.map_or(WitnessConvention::None, |t| check_witness(w, &e.tile, &t));
            witness_convention = Some(conv);
            if conv == WitnessConvention::None {
                match target.and_then(|t| find_witness(&e.tile, &t).ok().flatten()) {
                    Some(p) => witness_repaired = Some(format_cycles(&p)),
                    None => no_witness_exists = true,
                }
            }
        }

        let r = EntryReport {
            id: e.id,
            family: e.family.clone(),
            family_ok,
            tiles_ok,
            witness_claimed: e.claimed_witness.clone(),
            witness_convention,
            witness_repaired,
            no_witness_exists,
            rep_claimed,
            rep_computed,
            duplicate_of: twins.get(&e.id).copied(),
        };
        findings.extend(entry_findings(&r));
        reports.push(r);
    }

    let summary = summarize(entries, &reports, &canon_of, findings);
    VerificationReport {
        summary,
        entries: reports,
    }
}

fn entry_findings(r: &EntryReport) -> Vec<String> {
    let mut out = Vec::new();
    if !r.family_ok {
        out.push(format!(
            "{} fails the conditions of family {}",
            r.id, r.family
        ));
    }
    if !r.tiles_ok {
        out.push(format!("{} has no complement in F2^{}", r.id, r.id.rank));
    }
    if let Some(c) = r
        .witness_convention
        .filter(|c| !matches!(c, WitnessConvention::Primary))
    {
        let w = r.witness_claimed.as_deref().unwrap_or("");
        match (&r.witness_repaired, r.no_witness_exists) {
            (Some(fix), _) => out.push(format!(
                "{} witness {w} invalid for {}; repaired {fix}",
                r.id, r.rep_claimed
            )),
            (None, true) => out.push(format!(
                "{} witness {w}: no witness to {} exists",
                r.id, r.rep_claimed
            )),
            (None, false) => out.push(format!("{} witness {w} valid as {}", r.id, c.as_str())),
        }
    }
    if r.rep_computed != Some(r.rep_claimed) {
        let computed = r
            .rep_computed
            .map_or("no listed representative".to_string(), |c| c.to_string());
        out.push(format!(
            "{} claims representative {} but is equivalent to {computed}",
            r.id, r.rep_claimed
        ));
    }
    if let Some(d) = r.duplicate_of {
        out.push(format!("{} duplicates {d}", r.id));
    }
    out
}

fn summarize(
    entries: &[CatalogEntry],
    reports: &[EntryReport],
    canon_of: &[Option<Tile>],
    findings: Vec<String>,
) -> ReportSummary {
    let count = |f: &dyn Fn(&EntryReport) -> bool| reports.iter().filter(|r| f(r)).count();
    let conv = |c: WitnessConvention| count(&|r| r.witness_convention == Some(c));

    let mut by_rank: BTreeMap<u32, Vec<Tile>> = BTreeMap::new();
    for e in entries {
        by_rank.entry(e.id.rank).or_default().push(e.tile);
    }
    let rep_order: Vec<EntryId> = entries
        .iter()
        .filter(|e| e.is_representative())
        .map(|e| e.id)
        .collect();
    let mut per_rank_class_sizes = BTreeMap::new();
    let mut classes = 0;
    let mut distinct_tiles = 0;
    for (rank, tiles) in by_rank {
        let Ok(parts) = partition_classes(&tiles) else {
            continue;
        };
        let mut rows: Vec<ClassSummary> = parts
            .iter()
            .map(|class| {
                let in_class = |i: usize| canon_of[i] == Some(class.representative);
                let members: Vec<usize> = (0..entries.len()).filter(|&i| in_class(i)).collect();
                let representative = members
                    .iter()
                    .map(|&i| &entries[i])
                    .find(|e| e.is_representative())
                    .map(|e| e.id);
                ClassSummary {
                    representative,
                    size: class.len(),
                    labeled: members.len(),
                }
            })
            .collect();
        rows.sort_by_key(|c| {
            c.representative.map_or(usize::MAX, |r| {
                rep_order.iter().position(|&x| x == r).unwrap()
            })
        });
        classes += rows.len();
        distinct_tiles += rows.iter().map(|c| c.size).sum::<usize>();
        per_rank_class_sizes.insert(rank, rows);
    }

    ReportSummary {
        labeled_entries: entries.len(),
        representatives: rep_order.len(),
        distinct_tiles,
        classes,
        per_rank_class_sizes,
        family_failures: count(&|r| !r.family_ok),
        tiling_failures: count(&|r| !r.tiles_ok),
        witness_primary: conv(WitnessConvention::Primary),
        witness_inverse: conv(WitnessConvention::Inverse),
        witness_opposite_composition: conv(WitnessConvention::OppositeComposition),
        witness_repaired: count(&|r| r.witness_repaired.is_some()),
        no_witness_exists: count(&|r| r.no_witness_exists),
        representative_mismatches: count(&|r| r.rep_computed != Some(r.rep_claimed)),
        duplicate_pairs: count(&|r| r.duplicate_of.is_some_and(|d| d > r.id)),
        failures: count(&EntryReport::is_failure),
        findings,
    }
}
