//! Append-only result cache for expensive exhaustive proofs. One
//! tab-separated record per proven fact:
//!
//! ```text
//! <pattern-expr>\t<N>\t<classification>\t<nodes>\t<date>
//! ```
//!
//! The cache only ever changes latency: a hit reuses a previously proven
//! classification, a miss falls through to the search. Corrupt lines are
//! skipped with a warning.

use std::fmt;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CachedClass {
    /// Every coloring of `K_N` contains the pattern.
    Arrow,
    /// Some coloring of `K_N` avoids the pattern.
    NoArrow,
    /// `r(pattern) = N` proven exactly.
    Exact,
}

impl CachedClass {
    fn parse(s: &str) -> Option<CachedClass> {
        match s {
            "arrow" => Some(CachedClass::Arrow),
            "no-arrow" => Some(CachedClass::NoArrow),
            "exact" => Some(CachedClass::Exact),
            _ => None,
        }
    }
}

impl fmt::Display for CachedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CachedClass::Arrow => write!(f, "arrow"),
            CachedClass::NoArrow => write!(f, "no-arrow"),
            CachedClass::Exact => write!(f, "exact"),
        }
    }
}

/// Looks up a record by pattern text and order. Later records win, so a
/// re-proven fact simply appends.
pub fn lookup(path: &Path, pattern: &str, n: usize, class: CachedClass) -> bool {
    let Ok(text) = std::fs::read_to_string(path) else {
        return false;
    };
    let mut hit = false;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let parsed = (|| {
            if fields.len() != 5 {
                return None;
            }
            let order: usize = fields[1].parse().ok()?;
            let c = CachedClass::parse(fields[2])?;
            let _nodes: u64 = fields[3].parse().ok()?;
            Some((fields[0], order, c))
        })();
        match parsed {
            Some((p, order, c)) => {
                if p == pattern && order == n && c == class {
                    hit = true;
                }
            }
            None => eprintln!(
                "warning: skipping corrupt cache line {} in {}",
                lineno + 1,
                path.display()
            ),
        }
    }
    hit
}

pub fn append(path: &Path, pattern: &str, n: usize, class: CachedClass, nodes: u64) {
    let date = chrono::Utc::now().format("%Y-%m-%d");
    let record = format!("{pattern}\t{n}\t{class}\t{nodes}\t{date}\n");
    let written = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .and_then(|mut f| f.write_all(record.as_bytes()));
    if let Err(e) = written {
        eprintln!("warning: could not update cache {}: {e}", path.display());
    }
}
