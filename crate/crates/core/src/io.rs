//! JSON file formats.
//!
//! Complex entries are `[re, im]` pairs. All grids are row-major with the
//! first index outermost:
//!
//! - operator: `{"d": 3, "matrix": [[ [re,im], ... ] x d ] x d}` (`matrix[row][col]`)
//! - doubled function: `{"d": 3, "grid": ...}` with a 2d×2d grid (`grid[m1][m2]`)
//! - Wigner grid: `{"d": 3, "grid": ...}` with a d×d grid (`grid[a1][a2]`)
//! - stencil: the doubled-function object plus `"label"` and an optional
//!   `"projected"` grid, which is verified against a recomputed projection
//! - function map: `{"d", "source", "target", "matrix"}` with a d²×d² matrix
//!   over flattened grids (α ↦ α1·d + α2)

use std::fs;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::doubled::DoubledFunction;
use crate::dwf::WignerGrid;
use crate::error::{Error, Result};
use crate::qudit::{Dimension, Operator};
use crate::stencil::Stencil;
use crate::transport::FunctionMap;

type Pair = [f64; 2];

fn to_pairs(values: &[C64], side: usize) -> Vec<Vec<Pair>> {
    values
        .chunks(side)
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

fn from_pairs(rows: &[Vec<Pair>], side: usize, what: &str) -> Result<Vec<C64>> {
    if rows.len() != side {
        return Err(Error::Format(format!(
            "{what}: expected {side} rows, found {}",
            rows.len()
        )));
    }
    let mut values = Vec::with_capacity(side * side);
    for row in rows {
        if row.len() != side {
            return Err(Error::Format(format!(
                "{what}: expected {side} columns, found {}",
                row.len()
            )));
        }
        for pair in row {
            if !pair[0].is_finite() || !pair[1].is_finite() {
                return Err(Error::Format(format!("{what}: non-finite entry")));
            }
            values.push(C64::new(pair[0], pair[1]));
        }
    }
    Ok(values)
}

#[derive(Serialize, Deserialize)]
struct OperatorFile {
    d: usize,
    matrix: Vec<Vec<Pair>>,
}

#[derive(Serialize, Deserialize)]
struct GridFile {
    d: usize,
    grid: Vec<Vec<Pair>>,
}

#[derive(Serialize, Deserialize)]
struct StencilFile {
    d: usize,
    grid: Vec<Vec<Pair>>,
    label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    projected: Option<Vec<Vec<Pair>>>,
}

#[derive(Serialize)]
struct FunctionMapFile {
    d: usize,
    source: String,
    target: String,
    matrix: Vec<Vec<Pair>>,
}

pub fn operator_to_json(op: &Operator) -> String {
    let file = OperatorFile {
        d: op.side(),
        matrix: to_pairs(op.entries(), op.side()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

pub fn operator_from_json(text: &str) -> Result<Operator> {
    let file: OperatorFile = serde_json::from_str(text)?;
    let d = Dimension::new(file.d)?;
    let entries = from_pairs(&file.matrix, d.get(), "operator matrix")?;
    Ok(Operator::from_entries(d, entries))
}

pub fn doubled_to_json(f: &DoubledFunction) -> String {
    let file = GridFile {
        d: f.dimension().get(),
        grid: to_pairs(f.values(), f.side()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

pub fn doubled_from_json(text: &str) -> Result<DoubledFunction> {
    let file: GridFile = serde_json::from_str(text)?;
    let d = Dimension::new(file.d)?;
    let values = from_pairs(&file.grid, d.doubled(), "doubled grid")?;
    Ok(DoubledFunction::from_values(d, values))
}

pub fn wigner_to_json(grid: &WignerGrid) -> String {
    let file = GridFile {
        d: grid.side(),
        grid: to_pairs(grid.values(), grid.side()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

pub fn wigner_from_json(text: &str) -> Result<WignerGrid> {
    let file: GridFile = serde_json::from_str(text)?;
    let d = Dimension::new(file.d)?;
    let values = from_pairs(&file.grid, d.get(), "wigner grid")?;
    Ok(WignerGrid::from_values(d, values))
}

pub fn stencil_to_json(stencil: &Stencil) -> String {
    let side = stencil.raw().side();
    let file = StencilFile {
        d: stencil.dimension().get(),
        grid: to_pairs(stencil.raw().values(), side),
        label: stencil.label().to_string(),
        projected: Some(to_pairs(stencil.projected().values(), side)),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

/// Parse a stencil file. The projection is always recomputed from the raw
/// grid; a stored `projected` grid is cross-checked and rejected if stale.
pub fn stencil_from_json(text: &str) -> Result<Stencil> {
    let file: StencilFile = serde_json::from_str(text)?;
    let d = Dimension::new(file.d)?;
    let values = from_pairs(&file.grid, d.doubled(), "stencil grid")?;
    let stencil = Stencil::new(file.label, DoubledFunction::from_values(d, values));
    if let Some(stored) = file.projected {
        let stored = from_pairs(&stored, d.doubled(), "stencil projected grid")?;
        let stored = DoubledFunction::from_values(d, stored);
        if stencil.projected().max_abs_diff(&stored) > 1e-12 {
            return Err(Error::Format(
                "stencil file: stored projection disagrees with project(grid)".into(),
            ));
        }
    }
    Ok(stencil)
}

pub fn function_map_to_json(map: &FunctionMap) -> String {
    let file = FunctionMapFile {
        d: map.dimension().get(),
        source: map.source_label().to_string(),
        target: map.target_label().to_string(),
        matrix: to_pairs(map.matrix(), map.side()),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

pub fn read_operator(path: impl AsRef<Path>) -> Result<Operator> {
    operator_from_json(&fs::read_to_string(path)?)
}

pub fn write_operator(path: impl AsRef<Path>, op: &Operator) -> Result<()> {
    Ok(fs::write(path, operator_to_json(op))?)
}

pub fn read_stencil(path: impl AsRef<Path>) -> Result<Stencil> {
    stencil_from_json(&fs::read_to_string(path)?)
}

pub fn write_stencil(path: impl AsRef<Path>, stencil: &Stencil) -> Result<()> {
    Ok(fs::write(path, stencil_to_json(stencil))?)
}

pub fn read_wigner(path: impl AsRef<Path>) -> Result<WignerGrid> {
    wigner_from_json(&fs::read_to_string(path)?)
}

pub fn write_wigner(path: impl AsRef<Path>, grid: &WignerGrid) -> Result<()> {
    Ok(fs::write(path, wigner_to_json(grid))?)
}

pub fn read_doubled(path: impl AsRef<Path>) -> Result<DoubledFunction> {
    doubled_from_json(&fs::read_to_string(path)?)
}

pub fn write_doubled(path: impl AsRef<Path>, f: &DoubledFunction) -> Result<()> {
    Ok(fs::write(path, doubled_to_json(f))?)
}

pub fn write_function_map(path: impl AsRef<Path>, map: &FunctionMap) -> Result<()> {
    Ok(fs::write(path, function_map_to_json(map))?)
}
