use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{mn_char, CharValue, MemoCache};
use crate::error::Result;
use crate::partitions::{partitions_of, Partition};

/// The character table of `S_n`: `values[i][j] = χ^{rows[i]}_{cols[j]}`.
/// Rows and columns both run over the partitions of `n` in decreasing
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharTable {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub values: Vec<Vec<CharValue>>,
}

/// Builds the full table, one row per rayon task.
pub fn char_table(n: usize, cache: &MemoCache) -> Result<CharTable> {
    cache.check_capacity(n)?;
    let parts: Vec<Partition> = partitions_of(n).collect();
    let values = parts
        .par_iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| mn_char(lambda, mu, cache))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharTable {
        n,
        rows: parts.clone(),
        cols: parts,
        values,
    })
}

impl CharTable {
    pub fn column(&self, mu: &Partition) -> Option<Vec<&CharValue>> {
        let j = self.cols.iter().position(|c| c == mu)?;
        Some(self.values.iter().map(|row| &row[j]).collect())
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&CharValue> {
        let i = self.rows.iter().position(|r| r == lambda)?;
        let j = self.cols.iter().position(|c| c == mu)?;
        Some(&self.values[i][j])
    }

    /// CSV with a header of column partitions; each record starts with its row partition.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once(String::new()).chain(self.cols.iter().map(|c| c.to_string()));
        w.write_record(header).expect("writing to memory");
        for (lambda, row) in self.rows.iter().zip(&self.values) {
            let record = std::iter::once(lambda.to_string()).chain(row.iter().map(|v| v.to_string()));
            w.write_record(record).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
    }

    /// `{"n":…, "rows":[…], "cols":[…], "values":[[…]]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("character tables serialize")
    }
}

/// Aligned plain-text grid.
impl fmt::Display for CharTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_labels: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        let col_labels: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        let cells: Vec<Vec<String>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect();
        let label_w = row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..col_labels.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].len())
                    .chain(std::iter::once(col_labels[j].len()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        write!(f, "{:label_w$}", "")?;
        for (label, w) in col_labels.iter().zip(&widths) {
            write!(f, "  {label:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in row_labels.iter().zip(&cells) {
            write!(f, "{label:label_w$}")?;
            for (v, w) in row.iter().zip(&widths) {
                write!(f, "  {v:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn s0_table() {
        let t = char_table(0, &MemoCache::new()).unwrap();
        assert_eq!(t.rows, vec![Partition::empty()]);
        assert_eq!(t.values, vec![vec![CharValue::ONE]]);
    }

    #[test]
    fn s3_table() {
        let t = char_table(3, &MemoCache::new()).unwrap();
        let labels: Vec<String> = t.cols.iter().map(|c| c.to_string()).collect();
        assert_eq!(labels, ["3", "2,1", "1^3"]);
        let vals: Vec<Vec<i64>> = t
            .values
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().unwrap()).collect())
            .collect();
        // rows (3), (2,1), (1^3) against cols (3), (2,1), (1^3)
        assert_eq!(vals, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
    }

    #[test]
    fn capacity_is_enforced() {
        let cache = MemoCache::new().with_capacity_n(5);
        assert!(matches!(char_table(6, &cache), Err(Error::CapacityExceeded { n: 6, capacity: 5 })));
    }

    #[test]
    fn csv_and_json_layout() {
        let t = char_table(3, &MemoCache::new()).unwrap();
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), ",3,\"2,1\",1^3");
        assert_eq!(lines.next().unwrap(), "3,1,1,1");
        assert_eq!(lines.next().unwrap(), "\"2,1\",-1,0,2");
        let json = t.to_json();
        assert_eq!(json["n"], 3);
        assert_eq!(json["cols"][1], "2,1");
        assert_eq!(json["values"][1][2], 2);
    }
}
