//! String renderers for every data subcommand, one per output format.
//!
//! Text formats are pinned (scripts may match on them byte-for-byte), CSV
//! is RFC-4180-style with a header row and LF line endings, and JSON is
//! pretty-printed UTF-8 with the field order fixed by the structs below.
//! None of the emitted fields ever contains a comma or a quote, so CSV
//! needs no escaping.

use serde::Serialize;
use twocoin::diophantine::{self, CoinPair, Representation};
use twocoin::frobenius::MembershipVerdict;
use twocoin::geometry::PickAudit;
use twocoin::inductive::{ChainStep, UnitExpression};

use crate::Format;

fn json<T: Serialize>(value: &T) -> String {
    let mut out =
        serde_json::to_string_pretty(value).expect("serializing plain data cannot fail");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct Point {
    x: i64,
    y: i64,
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

#[derive(Serialize)]
struct FrobeniusReport {
    a: i64,
    b: i64,
    frobenius: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Point>,
}

pub fn frobenius(
    a: i64,
    b: i64,
    number: Option<i64>,
    certificate: Option<(i64, i64)>,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = match number {
                Some(f) => format!("{f}\n"),
                None => "none\n".to_string(),
            };
            if let Some((x, y)) = certificate {
                out.push_str(&format!("certificate: x={x} y={y}\n"));
            }
            out
        }
        Format::Csv => match number {
            Some(f) => format!("frobenius\n{f}\n"),
            None => "frobenius\n\n".to_string(),
        },
        Format::Json => json(&FrobeniusReport {
            a,
            b,
            frobenius: number,
            certificate: certificate.map(Point::from),
        }),
    }
}

#[derive(Serialize)]
struct CheckReport {
    a: i64,
    b: i64,
    d: i64,
    representable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Point>,
}

pub fn check(a: i64, b: i64, verdict: &MembershipVerdict, format: Format) -> String {
    match format {
        Format::Text => match verdict.witness() {
            Some(witness) => {
                let (x, y) = witness.xy();
                format!("representable; witness x={x} y={y}\n")
            }
            None => {
                let (x, y) = verdict.certificate().expect("a verdict carries one or the other");
                format!("not representable; certificate x={x} y={y}\n")
            }
        },
        Format::Csv => {
            let (x, y) = verdict
                .witness()
                .map(|w| w.xy())
                .or(verdict.certificate())
                .expect("always present");
            format!("d,representable,x,y\n{},{},{x},{y}\n", verdict.d(), verdict.is_representable())
        }
        Format::Json => json(&CheckReport {
            a,
            b,
            d: verdict.d(),
            representable: verdict.is_representable(),
            witness: verdict.witness().map(|w| Point::from(w.xy())),
            certificate: verdict.certificate().map(Point::from),
        }),
    }
}

#[derive(Serialize)]
struct CountReport {
    a: i64,
    b: i64,
    d: i64,
    count: u64,
}

pub fn count(a: i64, b: i64, d: i64, count: u64, format: Format) -> String {
    match format {
        Format::Text => format!("{count}\n"),
        Format::Csv => format!("count\n{count}\n"),
        Format::Json => json(&CountReport { a, b, d, count }),
    }
}

pub fn gaps(gaps: &[i64], format: Format) -> String {
    match format {
        Format::Text => gaps.iter().map(|d| format!("{d}\n")).collect(),
        Format::Csv => {
            let mut out = String::from("gap\n");
            for d in gaps {
                out.push_str(&format!("{d}\n"));
            }
            out
        }
        Format::Json => json(&gaps),
    }
}

pub fn solve(solutions: &[Representation], format: Format) -> String {
    match format {
        Format::Text => {
            if solutions.is_empty() {
                return "none\n".to_string();
            }
            solutions.iter().map(|r| format!("{} {}\n", r.x(), r.y())).collect()
        }
        Format::Csv => {
            let mut out = String::from("x,y\n");
            for r in solutions {
                out.push_str(&format!("{},{}\n", r.x(), r.y()));
            }
            out
        }
        Format::Json => {
            let points: Vec<Point> = solutions.iter().map(|r| r.xy().into()).collect();
            json(&points)
        }
    }
}

/// One table line: an amount and either a solution or nothing (a gap).
pub struct TableRowData {
    pub d: i64,
    pub xy: Option<(i64, i64)>,
}

/// Rows for amounts `1..=d_max`: every solution of each amount in ascending
/// x order, or a single impossible row for a gap. Ordered by d, then x.
pub fn table_rows(pair: CoinPair, d_max: i64) -> twocoin::Result<Vec<TableRowData>> {
    let mut rows = Vec::new();
    for d in 1..=d_max {
        let solutions = diophantine::nonneg_solutions(pair, d)?;
        if solutions.is_empty() {
            rows.push(TableRowData { d, xy: None });
        } else {
            rows.extend(solutions.iter().map(|r| TableRowData { d, xy: Some(r.xy()) }));
        }
    }
    Ok(rows)
}

#[derive(Serialize)]
struct TableRowJson {
    x: Option<i64>,
    y: Option<i64>,
    d: i64,
    equation: Option<String>,
    note: String,
}

fn equation(pair: CoinPair, x: i64, y: i64, d: i64) -> String {
    format!("{}·{} + {}·{} = {}", pair.a(), x, pair.b(), y, d)
}

pub fn table(pair: CoinPair, rows: &[TableRowData], format: Format) -> String {
    match format {
        Format::Text => {
            let header = ["x", "y", "d", "equation", "note"];
            let mut cells: Vec<[String; 5]> = Vec::with_capacity(rows.len());
            for row in rows {
                cells.push(match row.xy {
                    Some((x, y)) => [
                        x.to_string(),
                        y.to_string(),
                        row.d.to_string(),
                        equation(pair, x, y, row.d),
                        String::new(),
                    ],
                    None => [
                        "-".to_string(),
                        "-".to_string(),
                        row.d.to_string(),
                        "-".to_string(),
                        "Impossible".to_string(),
                    ],
                });
            }
            let mut widths = header.map(str::len);
            for row in &cells {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            let render_line = |cols: [&str; 5]| {
                let mut line = String::new();
                for (i, (cell, width)) in cols.iter().zip(widths).enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    let pad = width - cell.chars().count();
                    if i < 3 {
                        // numeric columns right-aligned
                        line.push_str(&" ".repeat(pad));
                        line.push_str(cell);
                    } else {
                        line.push_str(cell);
                        line.push_str(&" ".repeat(pad));
                    }
                }
                line.truncate(line.trim_end().len());
                line.push('\n');
                line
            };
            out.push_str(&render_line(header));
            for row in &cells {
                out.push_str(&render_line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("x,y,d,equation,note\n");
            for row in rows {
                match row.xy {
                    Some((x, y)) => {
                        out.push_str(&format!("{x},{y},{},{},\n", row.d, equation(pair, x, y, row.d)))
                    }
                    None => out.push_str(&format!(",,{},,Impossible\n", row.d)),
                }
            }
            out
        }
        Format::Json => {
            let rows: Vec<TableRowJson> = rows
                .iter()
                .map(|row| match row.xy {
                    Some((x, y)) => TableRowJson {
                        x: Some(x),
                        y: Some(y),
                        d: row.d,
                        equation: Some(equation(pair, x, y, row.d)),
                        note: String::new(),
                    },
                    None => TableRowJson {
                        x: None,
                        y: None,
                        d: row.d,
                        equation: None,
                        note: "Impossible".to_string(),
                    },
                })
                .collect();
            json(&rows)
        }
    }
}

#[derive(Serialize)]
struct PickReport {
    a: i64,
    b: i64,
    area_twice: i64,
    boundary_count: i64,
    interior_count: i64,
    pick_holds: bool,
}

pub fn pick(a: i64, b: i64, audit: &PickAudit, format: Format) -> String {
    match format {
        Format::Text => {
            // the audited parallelogram has area a+b, so area_twice is even
            format!(
                "area={} B={} I={} pick={}\n",
                audit.area_twice / 2,
                audit.boundary_count,
                audit.interior_count,
                if audit.pick_holds { "ok" } else { "violated" }
            )
        }
        Format::Csv => format!(
            "area_twice,boundary_count,interior_count,pick_holds\n{},{},{},{}\n",
            audit.area_twice, audit.boundary_count, audit.interior_count, audit.pick_holds
        ),
        Format::Json => json(&PickReport {
            a,
            b,
            area_twice: audit.area_twice,
            boundary_count: audit.boundary_count,
            interior_count: audit.interior_count,
            pick_holds: audit.pick_holds,
        }),
    }
}

#[derive(Serialize)]
struct ChainRowJson {
    d: i64,
    x: i64,
    y: i64,
    added: &'static str,
}

fn added_label(added: UnitExpression) -> &'static str {
    match added {
        UnitExpression::First => "first",
        UnitExpression::Second => "second",
    }
}

pub fn chain(steps: &[ChainStep], format: Format) -> String {
    match format {
        Format::Text => steps
            .iter()
            .map(|s| format!("{} {} {} {}\n", s.d, s.x, s.y, added_label(s.added)))
            .collect(),
        Format::Csv => {
            let mut out = String::from("d,x,y,added\n");
            for s in steps {
                out.push_str(&format!("{},{},{},{}\n", s.d, s.x, s.y, added_label(s.added)));
            }
            out
        }
        Format::Json => {
            let rows: Vec<ChainRowJson> = steps
                .iter()
                .map(|s| ChainRowJson { d: s.d, x: s.x, y: s.y, added: added_label(s.added) })
                .collect();
            json(&rows)
        }
    }
}
