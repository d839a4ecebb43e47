//! Grid evaluation of the two-sided field and deterministic CSV export.
//!
//! Rows are ordered t-major, then by x; the defect point x = 0 is emitted
//! twice (left limit, then right limit) because the field jumps there. CSV
//! values carry 17 significant digits so a rerun with the same config is
//! byte-identical and parses back losslessly.

use crate::config::{RunConfig, RunMode};
use crate::darboux::{DressingChain, HalfLine};
use crate::defect::{build_paired_system, destructive_solution};
use crate::error::{Error, Result};
use crate::linalg::C64;
use rayon::prelude::*;
use std::io::Write;
use std::path::Path;

/// Which side of the defect a row reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    L,
    R,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::L => "L",
            Side::R => "R",
        }
    }
}

/// Row status; overflowed nodes are emitted (with NaN values), not dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFlag {
    Ok,
    Overflow,
}

impl RowFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowFlag::Ok => "ok",
            RowFlag::Overflow => "overflow",
        }
    }
}

/// One evaluated grid node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRow {
    pub t: f64,
    pub x: f64,
    pub side: Side,
    pub value: C64,
    pub flag: RowFlag,
}

/// The evaluated field table, in export order.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldTable {
    pub rows: Vec<GridRow>,
}

/// The exact CSV header.
pub const CSV_HEADER: &str = "t,x,side,re_u,im_u,abs_u,flag";

/// Env var capping grid parallelism; 0 or unset means automatic.
pub const THREADS_ENV: &str = "DEFECT_NLS_THREADS";

enum FieldPair {
    Paired(Box<crate::defect::PairedSystem>),
    Destructive(Box<crate::defect::DestructiveSolution>),
    WholeLine(DressingChain),
}

impl FieldPair {
    fn left(&self, t: f64, x: f64) -> Result<C64> {
        match self {
            FieldPair::Paired(sys) => sys.field_left(t, x),
            FieldPair::Destructive(d) => d.field_left(t, x),
            FieldPair::WholeLine(chain) => chain.field(t, x),
        }
    }

    fn right(&self, t: f64, x: f64) -> Result<C64> {
        match self {
            FieldPair::Paired(sys) => sys.field_right(t, x),
            FieldPair::Destructive(d) => d.field_right(t, x),
            FieldPair::WholeLine(chain) => chain.field(t, x),
        }
    }
}

fn build_fields(cfg: &RunConfig) -> Result<FieldPair> {
    match cfg.mode {
        RunMode::DefectNsoliton => Ok(FieldPair::Paired(Box::new(build_paired_system(
            &cfg.defect,
            &cfg.solitons,
            cfg.psi0_init,
        )?))),
        RunMode::Destructive => {
            let init = cfg.center_init.ok_or_else(|| Error::InvariantViolation {
                field: "center_init".into(),
                message: "required in destructive mode".into(),
            })?;
            Ok(FieldPair::Destructive(Box::new(destructive_solution(
                &cfg.defect,
                init,
            )?)))
        }
        RunMode::WholeLine => Ok(FieldPair::WholeLine(DressingChain::new(
            cfg.solitons.clone(),
            HalfLine::Right,
        )?)),
    }
}

fn eval_node(fields: &FieldPair, t: f64, x: f64, side: Side) -> GridRow {
    let value = match side {
        Side::L => fields.left(t, x),
        Side::R => fields.right(t, x),
    };
    match value {
        Ok(v) => GridRow {
            t,
            x,
            side,
            value: v,
            flag: RowFlag::Ok,
        },
        Err(Error::OverflowRange { .. }) => GridRow {
            t,
            x,
            side,
            value: C64::new(f64::NAN, f64::NAN),
            flag: RowFlag::Overflow,
        },
        // other errors are construction-level and were caught earlier; a
        // degenerate dressing at an isolated node is reported like overflow
        Err(_) => GridRow {
            t,
            x,
            side,
            value: C64::new(f64::NAN, f64::NAN),
            flag: RowFlag::Overflow,
        },
    }
}

/// Evaluates the configured field on the configured grid.
///
/// Nodes are data-parallel over t-rows; `DEFECT_NLS_THREADS` caps the worker
/// count (0 = automatic). Row order in the result is independent of the
/// parallel schedule.
pub fn evaluate_grid(cfg: &RunConfig) -> Result<FieldTable> {
    let fields = build_fields(cfg)?;
    let ts = cfg.grid.t_values();
    let xs = cfg.grid.x_values();

    let eval_row = |&t: &f64| -> Vec<GridRow> {
        let mut rows = Vec::with_capacity(xs.len() + 1);
        for &x in &xs {
            if x == 0.0 {
                rows.push(eval_node(&fields, t, x, Side::L));
                rows.push(eval_node(&fields, t, x, Side::R));
            } else if x < 0.0 {
                rows.push(eval_node(&fields, t, x, Side::L));
            } else {
                rows.push(eval_node(&fields, t, x, Side::R));
            }
        }
        rows
    };

    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0);
    let per_t: Vec<Vec<GridRow>> = if threads == 1 {
        ts.iter().map(eval_row).collect()
    } else if threads == 0 {
        ts.par_iter().map(eval_row).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::SchemaViolation(format!("thread pool: {e}")))?
            .install(|| ts.par_iter().map(eval_row).collect())
    };

    Ok(FieldTable {
        rows: per_t.into_iter().flatten().collect(),
    })
}

/// 17 significant digits, round-trip exact for f64.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the table as CSV with LF line endings.
pub fn write_csv<W: Write>(table: &FieldTable, mut out: W) -> Result<()> {
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for row in &table.rows {
        let abs = row.value.norm();
        let line = format!(
            "{},{},{},{},{},{},{}\n",
            fmt17(row.t),
            fmt17(row.x),
            row.side.as_str(),
            fmt17(row.value.re),
            fmt17(row.value.im),
            fmt17(abs),
            row.flag.as_str()
        );
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

/// Writes the table to a file.
pub fn export_csv(table: &FieldTable, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut buf = std::io::BufWriter::new(file);
    write_csv(table, &mut buf)?;
    buf.flush()?;
    Ok(())
}
