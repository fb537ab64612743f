use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

/// A check result worth keeping: a tolerance violation, a non-terminating run,
/// a missing factor. Findings are data, never errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub check: String,
    pub params: Value,
    pub outcome: Value,
}

impl Finding {
    pub fn new(check: impl Into<String>, params: Value, outcome: Value) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Finding {
            timestamp,
            check: check.into(),
            params,
            outcome,
        }
    }
}

/// Serialized, append-only sink for findings.
///
/// Records are kept in memory and, when a path is given, appended to it as
/// one JSON object per line. Safe to share between worker threads.
#[derive(Debug, Default)]
pub struct FindingsLedger {
    path: Option<PathBuf>,
    inner: Mutex<Inner>,
}

#[derive(Debug, Default)]
struct Inner {
    file: Option<File>,
    records: Vec<Finding>,
}

impl FindingsLedger {
    /// Ledger that only keeps records in memory.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Ledger appending to `path` (created if missing, never truncated).
    pub fn open(path: &Path) -> Result<Self> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(FindingsLedger {
            path: Some(path.to_path_buf()),
            inner: Mutex::new(Inner {
                file: Some(file),
                records: Vec::new(),
            }),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn record(&self, finding: Finding) -> Result<()> {
        let mut inner = self.inner.lock().expect("ledger lock poisoned");
        if let Some(file) = inner.file.as_mut() {
            let mut line = serde_json::to_vec(&finding)?;
            line.push(b'\n');
            file.write_all(&line)?;
            file.flush()?;
        }
        inner.records.push(finding);
        Ok(())
    }

    /// Findings recorded through this handle.
    pub fn records(&self) -> Vec<Finding> {
        self.inner
            .lock()
            .expect("ledger lock poisoned")
            .records
            .clone()
    }

    pub fn len(&self) -> usize {
        self.inner
            .lock()
            .expect("ledger lock poisoned")
            .records
            .len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Reads every record of a ledger file.
pub fn read_findings(path: &Path) -> Result<Vec<Finding>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}
