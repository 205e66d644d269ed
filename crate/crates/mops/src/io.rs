//! Instance corpus files: one JSON object per line, each
//! `{"n": <int>, "diagonals": [[i, j], ...]}` with pairs sorted on write and
//! accepted in any order on read.

use crate::mop::{Mop, MopViolation};
use serde::Deserialize;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Lines, Write};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReadInstanceError {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("line {line}: invalid instance: {violation}")]
    Invalid { line: usize, violation: MopViolation },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ReadInstanceError {
    /// Line number the error occurred on, if it is line-scoped.
    pub fn line(&self) -> Option<usize> {
        match self {
            ReadInstanceError::Parse { line, .. } | ReadInstanceError::Invalid { line, .. } => {
                Some(*line)
            }
            ReadInstanceError::Io(_) => None,
        }
    }
}

#[derive(Deserialize)]
struct RawInstance {
    n: usize,
    diagonals: Vec<[usize; 2]>,
}

/// Streams instances from a JSONL file, validating each line. Blank lines
/// are skipped; every malformed or invalid line yields an error item and the
/// stream continues.
pub fn read_instances(path: &Path) -> std::io::Result<InstanceReader> {
    let file = File::open(path)?;
    Ok(InstanceReader { lines: BufReader::new(file).lines(), line_no: 0 })
}

pub struct InstanceReader {
    lines: Lines<BufReader<File>>,
    line_no: usize,
}

impl Iterator for InstanceReader {
    type Item = Result<Mop, ReadInstanceError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(e.into())),
            };
            self.line_no += 1;
            if line.trim().is_empty() {
                continue;
            }
            let raw: RawInstance = match serde_json::from_str(&line) {
                Ok(r) => r,
                Err(source) => {
                    return Some(Err(ReadInstanceError::Parse { line: self.line_no, source }))
                }
            };
            return Some(
                Mop::new(raw.n, raw.diagonals.iter().map(|&[a, b]| (a, b)))
                    .map_err(|violation| ReadInstanceError::Invalid { line: self.line_no, violation }),
            );
        }
    }
}

/// Writes instances as JSONL; write-then-read is the identity, order
/// preserved.
pub fn write_instances<'a>(
    path: &Path,
    instances: impl IntoIterator<Item = &'a Mop>,
) -> std::io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for m in instances {
        serde_json::to_writer(&mut out, m)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::enumerate_mops;

    #[test]
    fn round_trip_preserves_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("corpus.jsonl");
        let corpus: Vec<Mop> = enumerate_mops(6).unwrap().collect();
        write_instances(&path, &corpus).unwrap();
        let back: Vec<Mop> = read_instances(&path).unwrap().map(|r| r.unwrap()).collect();
        assert_eq!(back, corpus);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.jsonl");
        let mut f = File::create(&path).unwrap();
        writeln!(f, r#"{{"n":3,"diagonals":[]}}"#).unwrap();
        writeln!(f, "{{").unwrap();
        writeln!(f, r#"{{"n":6,"diagonals":[[0,2],[1,3],[3,5]]}}"#).unwrap();
        drop(f);
        let items: Vec<_> = read_instances(&path).unwrap().collect();
        assert_eq!(items.len(), 3);
        assert!(items[0].is_ok());
        match items[1].as_ref().unwrap_err() {
            ReadInstanceError::Parse { line, .. } => assert_eq!(*line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match items[2].as_ref().unwrap_err() {
            ReadInstanceError::Invalid { line, violation } => {
                assert_eq!(*line, 3);
                assert!(violation.to_string().contains("cross"));
            }
            other => panic!("expected invalid instance, got {other:?}"),
        }
    }
}
