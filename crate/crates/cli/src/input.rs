//! Input-file handling beyond the core formats: state files that hold either
//! a density matrix or a pure-state vector, and content sniffing for render
//! inputs.

use std::fs;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde::Deserialize;

use dwf_core::io::{doubled_from_json, operator_from_json, stencil_from_json, wigner_from_json};
use dwf_core::{Dimension, DoubledFunction, Error, Operator, Result, Stencil, WignerGrid};

#[derive(Deserialize)]
struct VectorFile {
    d: usize,
    vector: Vec<[f64; 2]>,
}

/// Read a quantum state: either an operator file (`"matrix"`) used as-is, or
/// a pure-state file (`"vector"`) normalized and projected to |ψ⟩⟨ψ|.
pub fn read_state(path: impl AsRef<Path>) -> Result<Operator> {
    let text = fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("matrix").is_some() {
        return operator_from_json(&text);
    }
    if value.get("vector").is_some() {
        let file: VectorFile = serde_json::from_str(&text)?;
        let d = Dimension::new(file.d)?;
        if file.vector.len() != d.get() {
            return Err(Error::Format(format!(
                "state vector: expected {} amplitudes, found {}",
                d.get(),
                file.vector.len()
            )));
        }
        let amplitudes: Vec<C64> = file.vector.iter().map(|p| C64::new(p[0], p[1])).collect();
        let norm_sq: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if !norm_sq.is_finite() || norm_sq <= 0.0 {
            return Err(Error::Format("state vector: zero or non-finite norm".into()));
        }
        return Ok(Operator::from_fn(d, |r, c| {
            amplitudes[r] * amplitudes[c].conj() / norm_sq
        }));
    }
    Err(Error::Format(
        "state file must contain a \"matrix\" or a \"vector\" field".into(),
    ))
}

/// What a render input file turned out to hold.
pub enum GridPayload {
    Stencil(Stencil),
    Doubled(DoubledFunction),
    Wigner(WignerGrid),
}

/// Classify a grid file: a `label` field marks a stencil; otherwise the grid
/// side (2d vs d) separates doubled functions from Wigner grids.
pub fn read_grid_payload(path: impl AsRef<Path>) -> Result<GridPayload> {
    let text = fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("label").is_some() {
        return Ok(GridPayload::Stencil(stencil_from_json(&text)?));
    }
    let d = value
        .get("d")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::Format("grid file: missing \"d\"".into()))? as usize;
    let rows = value
        .get("grid")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Format("grid file: missing \"grid\"".into()))?
        .len();
    if rows == 2 * d {
        Ok(GridPayload::Doubled(doubled_from_json(&text)?))
    } else if rows == d {
        Ok(GridPayload::Wigner(wigner_from_json(&text)?))
    } else {
        Err(Error::Format(format!(
            "grid file: {rows} rows fits neither a {d}×{d} Wigner grid nor a {}×{} doubled grid",
            2 * d,
            2 * d
        )))
    }
}
