//! Stencil-change linear maps: invertible conversion between the DWF
//! representations generated by two valid stencils, on the function side
//! (a materialized d²×d² matrix) and on the operator side (a composition
//! applied on demand).

use num_complex::Complex64 as C64;

use crate::dwf::{m_ppo_frame, weyl, wig, PPOFrame, WignerGrid};
use crate::error::{Error, Result};
use crate::qudit::{c_zero, Dimension, Operator};
use crate::stencil::{validate_stencil, Stencil};

fn require_valid(stencil: &Stencil, tolerance: f64) -> Result<()> {
    let report = validate_stencil(stencil, tolerance);
    if !report.all_ok() {
        return Err(Error::InvalidStencil {
            label: stencil.label().to_string(),
            report,
        });
    }
    Ok(())
}

fn require_same_dimension(a: &Stencil, b: &Stencil) -> Result<()> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension().get(),
            right: b.dimension().get(),
        });
    }
    Ok(())
}

/// Dense d²×d² matrix sending the flattened source-frame Wigner grid of any
/// operator to its target-frame grid. Rows index the target point α, columns
/// the source point β, both flattened as α ↦ α1·d + α2.
#[derive(Clone, Debug)]
pub struct FunctionMap {
    d: Dimension,
    matrix: Vec<C64>, // row-major, side d²
    source_label: String,
    target_label: String,
}

impl FunctionMap {
    pub fn dimension(&self) -> Dimension {
        self.d
    }

    /// Matrix side d².
    pub fn side(&self) -> usize {
        self.d.get() * self.d.get()
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[row * self.side() + col]
    }

    pub fn matrix(&self) -> &[C64] {
        &self.matrix
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    pub fn target_label(&self) -> &str {
        &self.target_label
    }

    pub fn max_abs_diff_from_identity(&self) -> f64 {
        let side = self.side();
        let mut worst: f64 = 0.0;
        for r in 0..side {
            for c in 0..side {
                let target = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((self.entry(r, c) - C64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &FunctionMap) -> Result<FunctionMap> {
        if self.d != rhs.d {
            return Err(Error::DimensionMismatch {
                left: self.d.get(),
                right: rhs.d.get(),
            });
        }
        let side = self.side();
        let mut matrix = vec![c_zero(); side * side];
        for r in 0..side {
            for k in 0..side {
                let factor = self.entry(r, k);
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..side {
                    matrix[r * side + c] += factor * rhs.entry(k, c);
                }
            }
        }
        Ok(FunctionMap {
            d: self.d,
            matrix,
            source_label: rhs.source_label.clone(),
            target_label: self.target_label.clone(),
        })
    }
}

/// Build the function-side conversion map between two valid stencils:
/// E(α, β) = Tr[A^{M2}(α)† A^{M1}(β)] / d. Construction refuses invalid
/// stencils, where the map's existence is not guaranteed.
pub fn build_function_map(from: &Stencil, to: &Stencil, tolerance: f64) -> Result<FunctionMap> {
    require_same_dimension(from, to)?;
    require_valid(from, tolerance)?;
    require_valid(to, tolerance)?;

    let d = from.dimension();
    let n = d.get();
    let source_frame = m_ppo_frame(from);
    let target_frame = m_ppo_frame(to);
    let side = n * n;
    let norm = 1.0 / n as f64;
    let mut matrix = Vec::with_capacity(side * side);
    for row in 0..side {
        let target = target_frame.ppo((row / n) as i64, (row % n) as i64);
        for col in 0..side {
            let source = source_frame.ppo((col / n) as i64, (col % n) as i64);
            let mut overlap = c_zero();
            for r in 0..n {
                for c in 0..n {
                    overlap += target.get(r, c).conj() * source.get(r, c);
                }
            }
            matrix.push(overlap * norm);
        }
    }
    Ok(FunctionMap {
        d,
        matrix,
        source_label: from.label().to_string(),
        target_label: to.label().to_string(),
    })
}

/// Apply a function map: flatten, multiply, unflatten.
pub fn apply_function_map(map: &FunctionMap, grid: &WignerGrid) -> Result<WignerGrid> {
    if map.dimension() != grid.dimension() {
        return Err(Error::DimensionMismatch {
            left: map.dimension().get(),
            right: grid.dimension().get(),
        });
    }
    let side = map.side();
    let flat = grid.values();
    let mut out = vec![c_zero(); side];
    for (r, slot) in out.iter_mut().enumerate() {
        let mut acc = c_zero();
        for (c, value) in flat.iter().enumerate() {
            acc += map.entry(r, c) * value;
        }
        *slot = acc;
    }
    Ok(WignerGrid::from_values(map.dimension(), out))
}

/// Operator-side conversion between two valid frames, kept compositional:
/// the operator is a target-frame reconstruction of its source-frame grid.
#[derive(Clone, Debug)]
pub struct OperatorMap {
    source_frame: PPOFrame,
    target_frame: PPOFrame,
}

impl OperatorMap {
    pub fn new(from: &Stencil, to: &Stencil, tolerance: f64) -> Result<Self> {
        require_same_dimension(from, to)?;
        require_valid(from, tolerance)?;
        require_valid(to, tolerance)?;
        Ok(Self {
            source_frame: m_ppo_frame(from),
            target_frame: m_ppo_frame(to),
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.source_frame.dimension()
    }

    pub fn apply(&self, op: &Operator) -> Result<Operator> {
        let grid = wig(op, &self.source_frame)?;
        weyl(&grid, &self.target_frame)
    }
}

/// One-shot operator-side conversion.
pub fn apply_operator_map(
    from: &Stencil,
    to: &Stencil,
    op: &Operator,
    tolerance: f64,
) -> Result<Operator> {
    OperatorMap::new(from, to, tolerance)?.apply(op)
}
