use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{AttainSet, AttainabilityMap};

/// Counts for one length `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableColumn {
    #[serde(rename = "K")]
    pub k: usize,
    /// Nonempty attainable sets and how many matrices have each.
    #[serde(serialize_with = "serialize_rows")]
    pub rows: BTreeMap<AttainSet, u64>,
    /// Matrices that are not the operator of any `K`-frame.
    pub unattainable: u64,
}

fn serialize_rows<S: serde::Serializer>(
    rows: &BTreeMap<AttainSet, u64>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row<'a> {
        set: &'a AttainSet,
        count: u64,
    }
    serializer.collect_seq(rows.iter().map(|(set, &count)| Row { set, count }))
}

impl TableColumn {
    pub fn from_map(map: &AttainabilityMap) -> Self {
        let mut rows = BTreeMap::new();
        let mut unattainable = 0;
        for set in &map.sets {
            if set.is_empty() {
                unattainable += 1;
            } else {
                *rows.entry(*set).or_insert(0) += 1;
            }
        }
        Self {
            k: map.k,
            rows,
            unattainable,
        }
    }

    pub fn count(&self, set: AttainSet) -> u64 {
        if set.is_empty() {
            self.unattainable
        } else {
            self.rows.get(&set).copied().unwrap_or(0)
        }
    }

    /// Sum over all rows, including the unattainable matrices.
    pub fn total(&self) -> u64 {
        self.rows.values().sum::<u64>() + self.unattainable
    }
}

/// One nonzero cell, in the CSV/JSON record layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub d: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub set: AttainSet,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttainabilityTable {
    pub d: usize,
    pub columns: Vec<TableColumn>,
}

impl AttainabilityTable {
    pub fn column(&self, k: usize) -> Option<&TableColumn> {
        self.columns.iter().find(|c| c.k == k)
    }

    /// Count for `set` at `k`; zero when absent.
    pub fn count(&self, k: usize, set: AttainSet) -> u64 {
        self.column(k).map_or(0, |c| c.count(set))
    }

    /// Every set that is nonzero in some column, in row order.
    pub fn row_sets(&self) -> Vec<AttainSet> {
        let mut sets: Vec<AttainSet> = self
            .columns
            .iter()
            .flat_map(|c| c.rows.keys().copied())
            .collect();
        sets.sort();
        sets.dedup();
        sets
    }

    /// Nonzero cells ordered by `K`, then by row. The unattainable count is
    /// reported with the empty set when requested.
    pub fn cells(&self, unattainable: bool) -> Vec<TableCell> {
        let mut out = Vec::new();
        for c in &self.columns {
            for (&set, &count) in &c.rows {
                out.push(TableCell {
                    d: self.d,
                    k: c.k,
                    set,
                    count,
                });
            }
            if unattainable && c.unattainable > 0 {
                out.push(TableCell {
                    d: self.d,
                    k: c.k,
                    set: AttainSet::empty(),
                    count: c.unattainable,
                });
            }
        }
        out
    }

    /// Aligned grid: one row per attainable set, one column per `K`.
    pub fn to_text(&self, unattainable: bool) -> String {
        let head = "{|alpha|_0}".to_string();
        let mut labels: Vec<String> = self.row_sets().iter().map(|s| s.to_string()).collect();
        let mut grid: Vec<Vec<u64>> = self
            .row_sets()
            .iter()
            .map(|&s| self.columns.iter().map(|c| c.count(s)).collect())
            .collect();
        if unattainable {
            labels.push("{}".into());
            grid.push(self.columns.iter().map(|c| c.unattainable).collect());
        }
        let headers: Vec<String> = self.columns.iter().map(|c| format!("K={}", c.k)).collect();
        let lw = labels.iter().map(String::len).chain([head.len()]).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| {
                grid.iter()
                    .map(|r| r[j].to_string().len())
                    .chain([headers[j].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut s = String::new();
        let _ = write!(s, "{head:<lw$}");
        for (h, w) in headers.iter().zip(&widths) {
            let _ = write!(s, "  {h:>w$}");
        }
        s.push('\n');
        for (label, row) in labels.iter().zip(&grid) {
            let _ = write!(s, "{label:<lw$}");
            for (v, w) in row.iter().zip(&widths) {
                let _ = write!(s, "  {v:>w$}");
            }
            s.push('\n');
        }
        s
    }

    /// `d,K,set,count` with a header line.
    pub fn to_csv(&self, unattainable: bool) -> String {
        let mut s = String::from("d,K,set,count\n");
        for c in self.cells(unattainable) {
            let _ = writeln!(s, "{},{},{},{}", c.d, c.k, c.set.to_csv_label(), c.count);
        }
        s
    }

    pub fn to_json(&self, unattainable: bool) -> String {
        serde_json::to_string_pretty(&self.cells(unattainable)).expect("cells serialize")
    }
}
