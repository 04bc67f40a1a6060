use std::fmt::Write as _;

use serde::Serialize;

use crate::closed::{mobius_even_closed, EvenCaseParams};
use crate::error::Result;
use crate::num::Mu;
use crate::semigroup::Representation;

/// `mu_S([x0, 0, x2])` for `x0 = 0..=x0_max` (rows) and `x2 = 0..q` (columns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuTable {
    pub q: i64,
    pub d: i64,
    pub rows: Vec<Vec<Mu>>,
}

pub fn mu_table(p: &EvenCaseParams, x0_max: i64) -> Result<MuTable> {
    Ok(MuTable {
        q: p.q(),
        d: p.d(),
        rows: mu_table_rows(p, 0, x0_max)?,
    })
}

/// Rows `x0_from..=x0_max` of [`mu_table`]; each row is independent of the others.
pub fn mu_table_rows(p: &EvenCaseParams, x0_from: i64, x0_max: i64) -> Result<Vec<Vec<Mu>>> {
    let arith = p.arithmetic();
    (x0_from..=x0_max)
        .map(|x0| {
            (0..p.q())
                .map(|x2| {
                    let x = arith.compose(&Representation::triple(x0, 0, x2))?;
                    mobius_even_closed(p, x)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

impl MuTable {
    /// Header `x0,0,1,...,q-1`, then one line per row labelled by `x0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x0");
        for x2 in 0..self.q {
            write!(out, ",{x2}").unwrap();
        }
        out.push('\n');
        for (x0, row) in self.rows.iter().enumerate() {
            write!(out, "{x0}").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Right-aligned text grid with an `x0\x2` corner.
    pub fn to_text(&self) -> String {
        let label_w = self.rows.len().saturating_sub(1).to_string().len().max(5);
        let cell_w = 3.max(self.q.saturating_sub(1).to_string().len() + 1);
        let mut out = format!("{:>label_w$} |", "x0\\x2");
        for x2 in 0..self.q {
            write!(out, "{x2:>cell_w$}").unwrap();
        }
        out.push('\n');
        out.push_str(&"-".repeat(label_w + 2 + cell_w * self.q as usize));
        out.push('\n');
        for (x0, row) in self.rows.iter().enumerate() {
            write!(out, "{x0:>label_w$} |").unwrap();
            for v in row {
                write!(out, "{v:>cell_w$}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub const REFERENCE_Q: i64 = 11;
pub const REFERENCE_D: i64 = 5;

/// Reference values of `mu_S([x0, 0, x2])` for `q = 11`, `d = 5`; row index
/// is `x0`, which runs from 0 to `3q + 3d + 4`.
#[rustfmt::skip]
pub const REFERENCE_TABLE: [[i64; 11]; 53] = [
    [ 1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0], // 0
    [-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0], // 1
    [ 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0], // 2
    [ 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0], // 3
    [ 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0], // 4
    [ 0,  0,  0,  0, -1,  2, -1,  0,  0,  0,  0], // 5
    [ 0,  0,  0,  0,  0, -1,  2, -1,  0,  0,  0], // 6
    [ 0,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0], // 7
    [ 0,  0,  0,  0,  0,  0,  0, -1,  2, -1,  0], // 8
    [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  2, -1], // 9
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0, -1,  2], // 10
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -1], // 11
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0], // 12
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0], // 13
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0], // 14
    [ 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0], // 15
    [ 1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0], // 16
    [-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0], // 17
    [ 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0], // 18
    [ 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0], // 19
    [ 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0], // 20
    [ 0,  0,  0,  0, -1,  2, -1,  0,  0,  0,  0], // 21
    [ 0,  0,  0,  0,  0, -1,  2, -1,  0,  0,  0], // 22
    [ 0,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0], // 23
    [ 0,  0,  0,  0,  0,  0,  0, -1,  2, -1,  0], // 24
    [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  2, -1], // 25
    [-1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  2], // 26
    [ 2, -1,  0,  0,  0,  0,  0,  0,  0,  0, -1], // 27
    [-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0], // 28
    [ 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0], // 29
    [ 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0], // 30
    [ 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0], // 31
    [ 1, -1,  0,  0, -1,  2, -1,  0,  0,  0,  0], // 32
    [-1,  2, -1,  0,  0, -1,  2, -1,  0,  0,  0], // 33
    [ 0, -1,  2, -1,  0,  0, -1,  2, -1,  0,  0], // 34
    [ 0,  0, -1,  2, -1,  0,  0, -1,  2, -1,  0], // 35
    [ 0,  0,  0, -1,  2, -1,  0,  0, -1,  2, -1], // 36
    [ 0,  0,  0,  0, -1,  2, -1,  0,  0, -1,  2], // 37
    [ 0,  0,  0,  0,  0, -1,  2, -1,  0,  0, -1], // 38
    [ 0,  0,  0,  0,  0,  0, -1,  2, -1,  0,  0], // 39
    [ 0,  0,  0,  0,  0,  0,  0, -1,  2, -1,  0], // 40
    [ 0,  0,  0,  0,  0,  0,  0,  0, -1,  2, -1], // 41
    [-1,  0,  0,  0,  0,  0,  0,  0,  0, -1,  2], // 42
    [ 2, -1,  0,  0,  0,  0,  0,  0,  0,  0, -1], // 43
    [-1,  2, -1,  0,  0,  0,  0,  0,  0,  0,  0], // 44
    [ 0, -1,  2, -1,  0,  0,  0,  0,  0,  0,  0], // 45
    [ 0,  0, -1,  2, -1,  0,  0,  0,  0,  0,  0], // 46
    [ 0,  0,  0, -1,  2, -1,  0,  0,  0,  0,  0], // 47
    [ 1, -1,  0,  0, -1,  2, -1,  0,  0,  0,  0], // 48
    [-1,  2, -1,  0,  0, -1,  2, -1,  0,  0,  0], // 49
    [ 0, -1,  2, -1,  0,  0, -1,  2, -1,  0,  0], // 50
    [ 0,  0, -1,  2, -1,  0,  0, -1,  2, -1,  0], // 51
    [ 0,  0,  0, -1,  2, -1,  0,  0, -1,  2, -1], // 52
];
