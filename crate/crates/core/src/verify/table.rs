//! Structure-constant tables for multiplication.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::check_ceiling;
use crate::error::{nonneg, Error, Result};
use crate::idp::{mult_closed, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
        })
    }
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::Parse(format!("unknown table format `{s}`"))),
        }
    }
}

/// One nonzero coefficient of `B^(m+n-2l)` in `B^(m) B^(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: Parity,
    pub m: u32,
    pub n: u32,
    pub l: u32,
    /// Generic coefficient in the canonical grammar.
    pub coefficient: String,
    /// Whether the coefficient at `v = q^-1` is a Laurent polynomial.
    pub integral: bool,
    /// Whether that Laurent polynomial has nonnegative coefficients.
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantTable {
    pub family: Parity,
    pub rows: Vec<TableRow>,
}

/// All rows with `m + n <= max_total_degree`, ordered by `(m, n, l)`.
pub fn constant_table(family: Parity, max_total_degree: i32) -> Result<ConstantTable> {
    let max = nonneg(max_total_degree)?;
    check_ceiling(max as i64)?;
    let pairs: Vec<(u32, u32)> = (0..=max).flat_map(|m| (0..=max - m).map(move |n| (m, n))).collect();
    let chunks = pairs
        .par_iter()
        .map(|&(m, n)| -> Result<Vec<TableRow>> {
            let coeffs = mult_closed(family, m as i32, n as i32)?;
            let mut rows = Vec::with_capacity(coeffs.len());
            // descending degree is ascending l
            for (d, c) in coeffs.into_iter().rev() {
                let (integral, positive) = match c.specialize_varsigma().and_then(|s| s.to_laurent()) {
                    Ok(lp) => (true, lp.is_nonneg()),
                    Err(_) => (false, false),
                };
                rows.push(TableRow {
                    family,
                    m,
                    n,
                    l: (m + n - d) / 2,
                    coefficient: c.to_string(),
                    integral,
                    positive,
                });
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConstantTable {
        family,
        rows: chunks.into_iter().flatten().collect(),
    })
}

/// The table serialized as CSV (`family,m,n,l,coefficient,integral,positive`) or JSON.
pub fn emit_table(family: Parity, max_total_degree: i32, format: TableFormat) -> Result<String> {
    let table = constant_table(family, max_total_degree)?;
    match format {
        TableFormat::Json => Ok(serde_json::to_string_pretty(&table).expect("table is serializable") + "\n"),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &table.rows {
                w.serialize(row).map_err(|e| Error::Parse(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows() {
        let t = emit_table(Parity::Ev, 3, TableFormat::Csv).unwrap();
        let mut lines = t.lines();
        assert_eq!(lines.next(), Some("family,m,n,l,coefficient,integral,positive"));
        assert!(t.contains("ev,2,1,1,v + q^2*v,true,true"), "{t}");
        assert!(t.contains("ev,1,1,0,q^-1 + q,true,true"));
    }

    #[test]
    fn trivial_table() {
        let t = emit_table(Parity::Odd, 0, TableFormat::Csv).unwrap();
        assert_eq!(t, "family,m,n,l,coefficient,integral,positive\nodd,0,0,0,1,true,true\n");
    }

    #[test]
    fn json_rows() {
        let t = constant_table(Parity::Ev, 2).unwrap();
        let row = t.rows.iter().find(|r| (r.m, r.n, r.l) == (1, 1, 0)).unwrap();
        assert_eq!(row.coefficient, "q^-1 + q");
        let v: serde_json::Value =
            serde_json::from_str(&emit_table(Parity::Ev, 2, TableFormat::Json).unwrap()).unwrap();
        assert_eq!(v["family"], "ev");
        assert!(constant_table(Parity::Ev, -1).is_err());
    }

    #[test]
    fn rows_are_ordered() {
        let t = constant_table(Parity::Odd, 6).unwrap();
        let keys: Vec<_> = t.rows.iter().map(|r| (r.m, r.n, r.l)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
