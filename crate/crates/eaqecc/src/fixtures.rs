//! Reference parameter tables shipped with the crate.
//!
//! The files under `data/` hold known good `[[n, k, >= d; c]]_q` rows for
//! the Hermitian degree-2 family at q = 3, 4, 5, 7, one file per q. The
//! format is plain text: `#` comment lines, one header line naming the
//! columns (`q n k d c t`), then whitespace-separated integer rows. The
//! trailing `t` records which defining-set index reproduces the row, so
//! regressions can check the sweep directly instead of re-searching.

use crate::params::EaqeccParams;
use crate::{Error, Result};

/// One reference row: a code over GF(q) that the q's sweep must contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub q: u64,
    pub n: u64,
    pub k: i64,
    /// Tabulated lower bound; the sweep's bound must be at least this.
    pub d: u64,
    pub c: u64,
    /// Defining-set index whose sweep row realizes these parameters.
    pub t: usize,
}

impl TableRow {
    /// Whether a sweep row realizes this reference row: n, k, c exact,
    /// and the sweep's distance bound at least the tabulated one.
    pub fn matched_by(&self, row: &EaqeccParams) -> bool {
        row.n == self.n && row.k == self.k && row.c == self.c && row.d_lower >= self.d
    }
}

/// The alphabets with a shipped table.
pub const TABLE_QS: [u64; 4] = [3, 4, 5, 7];

const TABLE_Q3: &str = include_str!("../data/table_q3.txt");
const TABLE_Q4: &str = include_str!("../data/table_q4.txt");
const TABLE_Q5: &str = include_str!("../data/table_q5.txt");
const TABLE_Q7: &str = include_str!("../data/table_q7.txt");

/// Parse a fixture file: comments start with `#`, the first remaining line
/// is the `q n k d c t` header, every further line is six integers.
pub fn parse_table(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line.split_whitespace().collect::<Vec<_>>() != ["q", "n", "k", "d", "c", "t"] {
                return Err(Error::Fixture {
                    line: idx + 1,
                    msg: format!("expected header `q n k d c t`, found `{line}`"),
                });
            }
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(Error::Fixture {
                line: idx + 1,
                msg: format!("expected 6 integers, found {}", fields.len()),
            });
        }
        let parse = |s: &str| -> Result<u64> {
            s.parse().map_err(|_| Error::Fixture {
                line: idx + 1,
                msg: format!("`{s}` is not an integer"),
            })
        };
        rows.push(TableRow {
            q: parse(fields[0])?,
            n: parse(fields[1])?,
            k: parse(fields[2])? as i64,
            d: parse(fields[3])?,
            c: parse(fields[4])?,
            t: parse(fields[5])? as usize,
        });
    }
    if !header_seen {
        return Err(Error::Fixture {
            line: 0,
            msg: "missing header line".to_string(),
        });
    }
    Ok(rows)
}

/// The shipped reference rows for alphabet `q`, if a table exists.
pub fn table_rows(q: u64) -> Option<Vec<TableRow>> {
    let text = match q {
        3 => TABLE_Q3,
        4 => TABLE_Q4,
        5 => TABLE_Q5,
        7 => TABLE_Q7,
        _ => return None,
    };
    Some(parse_table(text).expect("shipped fixtures parse"))
}
