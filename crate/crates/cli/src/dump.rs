//! Flat dump formats for tree nodes: CSV with the fixed header
//! `level,path,m,n,u,v`, and JSON lines with the same fields.
//!
//! Both formats are written in enumeration order and parse back losslessly:
//! re-serializing a parsed dump reproduces the input bytes. The `path`
//! column is the branch word relative to the root (empty for the root row);
//! no field ever needs quoting or escaping.

use std::io::Write;

use anyhow::{bail, Context, Result};
use coprime_forest::forest::TreeNode;
use coprime_forest::Branch;
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "level,path,m,n,u,v";

/// One dump row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub level: u32,
    pub path: String,
    pub m: i64,
    pub n: i64,
    pub u: i64,
    pub v: i64,
}

impl From<&TreeNode> for TreeRecord {
    fn from(node: &TreeNode) -> TreeRecord {
        TreeRecord {
            level: node.level,
            path: node.path.word(),
            m: node.pair.m(),
            n: node.pair.n(),
            u: node.bezout.u,
            v: node.bezout.v,
        }
    }
}

impl TreeRecord {
    /// Internal consistency: the path must be a branch word matching the
    /// level. Applied on parse so damaged dumps are rejected early.
    fn validate(&self) -> Result<()> {
        if self.path.chars().any(|c| Branch::from_label(c).is_none()) {
            bail!("path {:?} contains characters outside A/B/C", self.path);
        }
        if self.path.chars().count() != self.level as usize {
            bail!(
                "level {} does not match path {:?} of length {}",
                self.level,
                self.path,
                self.path.len()
            );
        }
        Ok(())
    }
}

/// Streams records as CSV; the iterator may carry enumeration errors, which
/// abort the dump.
pub fn write_csv<W: Write>(
    mut out: W,
    records: impl IntoIterator<Item = Result<TreeRecord>>,
) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for record in records {
        let r = record?;
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.level, r.path, r.m, r.n, r.u, r.v
        )?;
    }
    Ok(())
}

/// Streams records as JSON lines (one compact object per line).
pub fn write_jsonl<W: Write>(
    mut out: W,
    records: impl IntoIterator<Item = Result<TreeRecord>>,
) -> Result<()> {
    for record in records {
        let r = record?;
        serde_json::to_writer(&mut out, &r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn parse_csv(text: &str) -> Result<Vec<TreeRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(CSV_HEADER) => {}
        other => bail!("bad CSV header {other:?}, want {CSV_HEADER:?}"),
    }
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let &[level, path, m, n, u, v] = fields.as_slice() else {
            bail!("row {}: want 6 fields, got {}", i + 2, fields.len());
        };
        let parse = |what: &str, s: &str| -> Result<i64> {
            s.parse()
                .with_context(|| format!("row {}: bad {what} {s:?}", i + 2))
        };
        let record = TreeRecord {
            level: level
                .parse()
                .with_context(|| format!("row {}: bad level {level:?}", i + 2))?,
            path: path.to_string(),
            m: parse("m", m)?,
            n: parse("n", n)?,
            u: parse("u", u)?,
            v: parse("v", v)?,
        };
        record
            .validate()
            .with_context(|| format!("row {}", i + 2))?;
        records.push(record);
    }
    Ok(records)
}

pub fn parse_jsonl(text: &str) -> Result<Vec<TreeRecord>> {
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let record: TreeRecord = serde_json::from_str(line)
            .with_context(|| format!("line {}: not a tree record", i + 1))?;
        record
            .validate()
            .with_context(|| format!("line {}", i + 1))?;
        records.push(record);
    }
    Ok(records)
}
