//! Conjecture sweep: compare the necessary condition's prediction against
//! the brute-force classification over a range of ribbons.
//!
//! Ribbons are visited in canonical order (box count ascending, then row
//! tuple ascending lexicographically); rows are weakly decreasing, one
//! representative per row multiset, since both sides of the comparison are
//! permutation-invariant. Records stream to stdout as JSON lines in
//! canonical order regardless of worker scheduling; the summary goes to
//! stderr. With `--out`, records are also appended to the file, and on
//! restart ribbons already recorded there as checked are emitted as
//! `skipped` instead of being recomputed, so an interrupted sweep resumes
//! where it stopped.

use std::collections::{BTreeMap, HashMap};
use std::fs::OpenOptions;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Duration;

use anyhow::Context;
use serde::{Deserialize, Serialize};

use ribbons::{check_conjecture, ConjectureOutcome, RibbonShape};

pub struct SweepConfig {
    pub rows: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub budget: Duration,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRecord {
    pub ribbon: Vec<usize>,
    pub predicted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(rename = "elapsedMs")]
    pub elapsed_ms: u64,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Timeout,
    Skipped,
}

pub fn run(config: &SweepConfig) -> anyhow::Result<i32> {
    let jobs = enumerate_ribbons(config.rows, config.min_n, config.max_n);
    let resumed = match &config.out {
        Some(path) if path.exists() => load_completed(path)?,
        _ => HashMap::new(),
    };
    let mut writer = match &config.out {
        Some(path) => Some(BufWriter::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .with_context(|| format!("opening {}", path.display()))?,
        )),
        None => None,
    };

    // Dispatch only the ribbons without a stored result.
    let pending: Vec<(usize, RibbonShape)> = jobs
        .iter()
        .enumerate()
        .filter(|(_, r)| !resumed.contains_key(r.rows()))
        .map(|(i, r)| (i, r.clone()))
        .collect();

    let stdout = std::io::stdout();
    let mut summary = Summary::default();
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, SweepRecord)>();
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(pending.len().max(1));

    std::thread::scope(|scope| -> anyhow::Result<()> {
        for _ in 0..workers {
            let tx = tx.clone();
            let next = &next;
            let pending = &pending;
            let budget = config.budget;
            scope.spawn(move || loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some((job, ribbon)) = pending.get(idx) else {
                    break;
                };
                let record = check_one(ribbon, budget);
                if tx.send((*job, record)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // Emit in canonical order, buffering out-of-order worker results.
        let mut buffered: BTreeMap<usize, SweepRecord> = BTreeMap::new();
        let mut out = stdout.lock();
        for (job, ribbon) in jobs.iter().enumerate() {
            let record = if let Some(stored) = resumed.get(ribbon.rows()) {
                SweepRecord {
                    status: Status::Skipped,
                    ..stored.clone()
                }
            } else {
                loop {
                    if let Some(rec) = buffered.remove(&job) {
                        break rec;
                    }
                    let (done, rec) = rx.recv().expect("workers outlive pending jobs");
                    buffered.insert(done, rec);
                }
            };
            let line = serde_json::to_string(&record)?;
            writeln!(out, "{line}")?;
            if record.status != Status::Skipped {
                if let Some(w) = writer.as_mut() {
                    writeln!(w, "{line}")?;
                    w.flush()?;
                }
            }
            summary.add(&record);
        }
        Ok(())
    })?;

    summary.print();
    Ok(summary.exit_code())
}

fn check_one(ribbon: &RibbonShape, budget: Duration) -> SweepRecord {
    let check = check_conjecture(ribbon, budget)
        .expect("generated ribbons satisfy the structural preconditions");
    let (status, actual, agree) = match check.outcome {
        ConjectureOutcome::Checked { actual, agree } => (Status::Ok, Some(actual), Some(agree)),
        ConjectureOutcome::TimedOut => (Status::Timeout, None, None),
    };
    SweepRecord {
        ribbon: ribbon.rows().to_vec(),
        predicted: check.predicted,
        actual,
        agree,
        elapsed_ms: check.elapsed.as_millis() as u64,
        status,
    }
}

/// Weakly decreasing row tuples with exactly `rows` parts, each at least 2,
/// box counts in `min_n..=max_n`; ascending in (box count, row tuple).
fn enumerate_ribbons(rows: usize, min_n: usize, max_n: usize) -> Vec<RibbonShape> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        let mut tuples = Vec::new();
        descending_tuples(n, rows, n, &mut Vec::new(), &mut tuples);
        tuples.sort();
        out.extend(
            tuples
                .into_iter()
                .map(|t| RibbonShape::from_rows(t).expect("parts are positive")),
        );
    }
    out
}

fn descending_tuples(
    remaining: usize,
    parts: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if parts == 0 {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    // Each remaining part is at least 2 and at most `max`.
    let hi = max.min(remaining.saturating_sub(2 * (parts - 1)));
    for part in 2..=hi {
        current.push(part);
        descending_tuples(remaining - part, parts - 1, part, current, out);
        current.pop();
    }
}

/// Records from an earlier run that finished; the latest entry per ribbon
/// wins, unparseable lines (say, from an interrupted write) are skipped
/// with a warning.
fn load_completed(path: &PathBuf) -> anyhow::Result<HashMap<Vec<usize>, SweepRecord>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<SweepRecord>(line) {
            Ok(record) if record.status == Status::Ok => {
                map.insert(record.ribbon.clone(), record);
            }
            Ok(_) => {}
            Err(err) => {
                eprintln!(
                    "warning: {}:{} unreadable record ({err}); recomputing it",
                    path.display(),
                    lineno + 1
                );
            }
        }
    }
    Ok(map)
}

#[derive(Default)]
struct Summary {
    total: usize,
    checked: usize,
    skipped: usize,
    timeouts: usize,
    disagreements: Vec<SweepRecord>,
}

impl Summary {
    fn add(&mut self, record: &SweepRecord) {
        self.total += 1;
        match record.status {
            Status::Ok => self.checked += 1,
            Status::Skipped => self.skipped += 1,
            Status::Timeout => self.timeouts += 1,
        }
        if record.agree == Some(false) {
            self.disagreements.push(record.clone());
        }
    }

    fn print(&self) {
        eprintln!(
            "sweep: {} ribbons, {} checked, {} skipped, {} timed out, {} disagreements",
            self.total,
            self.checked,
            self.skipped,
            self.timeouts,
            self.disagreements.len()
        );
        for record in &self.disagreements {
            eprintln!(
                "disagreement: ribbon {:?} predicted {} actual {}",
                record.ribbon,
                record.predicted,
                record.actual.expect("disagreements carry a verdict")
            );
        }
    }

    fn exit_code(&self) -> i32 {
        if !self.disagreements.is_empty() {
            1
        } else if self.timeouts > 0 {
            3
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_canonical_order() {
        let got: Vec<Vec<usize>> = enumerate_ribbons(3, 6, 8)
            .into_iter()
            .map(|r| r.rows().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![2, 2, 2],
                vec![3, 2, 2],
                vec![3, 3, 2],
                vec![4, 2, 2],
            ]
        );
    }

    #[test]
    fn enumeration_respects_row_minimum() {
        assert!(enumerate_ribbons(3, 2, 5).is_empty());
        assert_eq!(enumerate_ribbons(4, 8, 8).len(), 1);
    }
}
