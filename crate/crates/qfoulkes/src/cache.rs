//! Persistence of the character and Kostka-Foulkes memo tables.
//!
//! The cache is a plain text file:
//!
//! ```text
//! qfoulkes-cache v1
//! C [3,2,1] [2,2,2] 42
//! K [3,1,1] [2,2,1] 0,1
//! ```
//!
//! `C` records hold one character value `chi^lambda(mu)`; `K` records hold
//! one Kostka-Foulkes polynomial as comma-separated integer coefficients of
//! ascending degree (the zero polynomial is `0`). Records are written in
//! sorted order, so store/load round-trips are bit-exact. A version
//! mismatch or any malformed line discards the whole file (returning a
//! warning outcome) rather than loading partial data; caches only ever
//! affect timing, never values.

use std::fmt;
use std::path::Path;

use num::ToPrimitive;

use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::{character, hall_littlewood, Error, Result};

const HEADER: &str = "qfoulkes-cache v1";

/// What happened during a cache load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadOutcome {
    /// Records were seeded into the in-memory tables.
    Loaded { characters: usize, kostkas: usize },
    /// No file at the given path; cold start.
    Missing,
    /// Version header did not match; nothing loaded.
    VersionMismatch { found: String },
    /// A record failed to parse; nothing loaded.
    Corrupt { line: usize, reason: String },
}

impl LoadOutcome {
    pub fn warning(&self) -> Option<String> {
        match self {
            LoadOutcome::Loaded { .. } | LoadOutcome::Missing => None,
            LoadOutcome::VersionMismatch { found } => Some(format!(
                "cache ignored: version header {found:?} does not match {HEADER:?}"
            )),
            LoadOutcome::Corrupt { line, reason } => {
                Some(format!("cache discarded: line {line}: {reason}"))
            }
        }
    }
}

impl fmt::Display for LoadOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadOutcome::Loaded { characters, kostkas } => {
                write!(f, "loaded {characters} character and {kostkas} kostka records")
            }
            LoadOutcome::Missing => write!(f, "no cache file; starting cold"),
            LoadOutcome::VersionMismatch { found } => write!(f, "version mismatch ({found})"),
            LoadOutcome::Corrupt { line, reason } => write!(f, "corrupt at line {line}: {reason}"),
        }
    }
}

/// Loads a cache file into the process-wide memo tables. A missing file is
/// a cold start, not an error; version mismatches and parse failures
/// discard the file and report a warning through the outcome.
pub fn load(path: &Path) -> Result<LoadOutcome> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(LoadOutcome::Missing),
        Err(e) => return Err(Error::Io(e)),
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim() == HEADER => {}
        Some((_, first)) => {
            return Ok(LoadOutcome::VersionMismatch {
                found: first.trim().to_string(),
            })
        }
        None => {
            return Ok(LoadOutcome::VersionMismatch {
                found: String::new(),
            })
        }
    }
    let mut chars = Vec::new();
    let mut kostkas = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_record(line) {
            Ok(Record::Character(l, m, v)) => chars.push((l, m, v)),
            Ok(Record::Kostka(l, m, p)) => kostkas.push((l, m, p)),
            Err(reason) => {
                return Ok(LoadOutcome::Corrupt {
                    line: idx + 1,
                    reason,
                })
            }
        }
    }
    let outcome = LoadOutcome::Loaded {
        characters: chars.len(),
        kostkas: kostkas.len(),
    };
    character::memo_seed(chars);
    hall_littlewood::kf_memo_seed(kostkas);
    Ok(outcome)
}

enum Record {
    Character(Partition, Partition, i64),
    Kostka(Partition, Partition, QPoly),
}

fn parse_record(line: &str) -> std::result::Result<Record, String> {
    let mut fields = line.split_whitespace();
    let tag = fields.next().ok_or("empty record")?;
    let lambda: Partition = fields
        .next()
        .ok_or("missing lambda")?
        .parse()
        .map_err(|e| format!("{e}"))?;
    let mu: Partition = fields
        .next()
        .ok_or("missing mu")?
        .parse()
        .map_err(|e| format!("{e}"))?;
    let payload = fields.next().ok_or("missing value")?;
    if fields.next().is_some() {
        return Err("trailing fields".into());
    }
    if lambda.weight() != mu.weight() {
        return Err(format!("weight mismatch {lambda} vs {mu}"));
    }
    match tag {
        "C" => {
            let v: i64 = payload.parse().map_err(|_| format!("bad value {payload:?}"))?;
            Ok(Record::Character(lambda, mu, v))
        }
        "K" => {
            let coeffs: Vec<i64> = payload
                .split(',')
                .map(|t| t.parse::<i64>().map_err(|_| format!("bad coeff {t:?}")))
                .collect::<std::result::Result<_, _>>()?;
            Ok(Record::Kostka(lambda, mu, QPoly::from_ints(&coeffs)))
        }
        other => Err(format!("unknown record tag {other:?}")),
    }
}

/// Writes the current memo tables to `path` (atomically, via a sibling
/// temporary file). Returns the record counts written.
pub fn store(path: &Path) -> Result<(usize, usize)> {
    let chars = character::memo_snapshot();
    let kostkas = hall_littlewood::kf_memo_snapshot();
    let mut out = String::with_capacity(64 + 32 * (chars.len() + kostkas.len()));
    out.push_str(HEADER);
    out.push('\n');
    for (l, m, v) in &chars {
        out.push_str(&format!("C {l} {m} {v}\n"));
    }
    for (l, m, p) in &kostkas {
        let coeffs = if p.is_zero() {
            "0".to_string()
        } else {
            p.coeffs()
                .iter()
                .map(|c| {
                    c.to_integer()
                        .to_i64()
                        .expect("kostka coefficients are small integers")
                        .to_string()
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        out.push_str(&format!("K {l} {m} {coeffs}\n"));
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, out)?;
    std::fs::rename(&tmp, path)?;
    Ok((chars.len(), kostkas.len()))
}
