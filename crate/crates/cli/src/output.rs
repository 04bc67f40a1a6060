use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use smobius_core::{Method, Mu, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One computed value as printed by `compute` and `range`.
#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub x: i64,
    pub mu: Mu,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rep: Option<[i64; 3]>,
}

impl OutputRecord {
    pub fn new(x: i64, mu: Mu, method: Method, rep: Option<Representation>) -> Self {
        Self {
            x,
            mu,
            method: method.name(),
            rep: rep.map(|r| [r.x0, r.xi, r.xk]),
        }
    }

    fn rep_text(&self) -> Option<String> {
        self.rep.map(|[a, b, c]| format!("[{a},{b},{c}]"))
    }
}

pub fn render_records(records: &[OutputRecord], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            let with_rep = records.iter().any(|r| r.rep.is_some());
            out.push_str(if with_rep {
                "x,mu,method,x0,x1,x2\n"
            } else {
                "x,mu,method\n"
            });
            for r in records {
                write!(out, "{},{},{}", r.x, r.mu, r.method).unwrap();
                if with_rep {
                    match r.rep {
                        Some([a, b, c]) => write!(out, ",{a},{b},{c}").unwrap(),
                        None => out.push_str(",,,"),
                    }
                }
                out.push('\n');
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(records).expect("records serialize");
            out.push('\n');
        }
        Format::Text => {
            for r in records {
                write!(out, "x={} mu={} method={}", r.x, r.mu, r.method).unwrap();
                if let Some(rep) = r.rep_text() {
                    write!(out, " rep={rep}").unwrap();
                }
                out.push('\n');
            }
        }
    }
    out
}
