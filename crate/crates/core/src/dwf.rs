//! M-PPO frames and the discrete Wigner functions they generate: frame
//! construction from a stencil, the Wigner/Weyl transform pair on the d×d
//! phase space, frame validation (Hermiticity, normalisation, orthogonality,
//! covariance), marginal/MUB analysis, and scalar diagnostics.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::doubled::doubled_ppo_table;
use crate::error::{Error, Result};
use crate::qudit::{c_zero, Dimension, Operator, PhasePoint, whdo};
use crate::stencil::Stencil;

/// Provenance of a frame: the generating stencil's label and projected-grid
/// hash. Equal hashes identify equal projections, which generate equal frames.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameSource {
    pub label: String,
    pub projected_hash: u64,
}

/// A family of d² phase-point operators indexed by α ∈ Z_d², flattened as
/// `α1·d + α2`.
#[derive(Clone, Debug)]
pub struct PPOFrame {
    d: Dimension,
    ppos: Vec<Operator>,
    source: FrameSource,
}

impl PPOFrame {
    pub fn dimension(&self) -> Dimension {
        self.d
    }

    /// PPO at phase-space point (a1, a2), indices reduced modulo d.
    pub fn ppo(&self, a1: i64, a2: i64) -> &Operator {
        let n = self.d.get() as i64;
        let r = a1.rem_euclid(n) as usize;
        let c = a2.rem_euclid(n) as usize;
        &self.ppos[r * self.d.get() + c]
    }

    pub fn ppos(&self) -> &[Operator] {
        &self.ppos
    }

    pub fn source(&self) -> &FrameSource {
        &self.source
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        Ok(self
            .ppos
            .iter()
            .zip(other.ppos.iter())
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(0.0, f64::max))
    }

    /// Frame equality with the projected-stencil hash as a short-circuit;
    /// differing hashes fall back to the entrywise comparison.
    pub fn equivalent_to(&self, other: &Self, tolerance: f64) -> Result<bool> {
        if self.d == other.d && self.source.projected_hash == other.source.projected_hash {
            return Ok(true);
        }
        Ok(self.max_abs_diff(other)? <= tolerance)
    }
}

/// Complex d×d grid indexed `values[α1][α2]`; real to tolerance whenever the
/// represented operator is Hermitian and the frame satisfies Hermiticity.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerGrid {
    d: Dimension,
    values: Vec<C64>,
}

impl WignerGrid {
    pub fn zeros(d: Dimension) -> Self {
        Self {
            d,
            values: vec![c_zero(); d.get() * d.get()],
        }
    }

    pub fn from_fn(d: Dimension, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let n = d.get();
        let mut values = Vec::with_capacity(n * n);
        for a1 in 0..n {
            for a2 in 0..n {
                values.push(f(a1, a2));
            }
        }
        Self { d, values }
    }

    /// Build from a flat row-major list of d² values (α ↦ α1·d + α2).
    pub fn from_values(d: Dimension, values: Vec<C64>) -> Self {
        assert_eq!(values.len(), d.get() * d.get(), "value count must be d²");
        Self { d, values }
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    pub fn side(&self) -> usize {
        self.d.get()
    }

    /// Value at (a1, a2) with indices reduced modulo d.
    pub fn get(&self, a1: i64, a2: i64) -> C64 {
        let n = self.d.get() as i64;
        let r = a1.rem_euclid(n) as usize;
        let c = a2.rem_euclid(n) as usize;
        self.values[r * self.d.get() + c]
    }

    pub fn set(&mut self, a1: usize, a2: usize, value: C64) {
        let n = self.d.get();
        self.values[a1 * n + a2] = value;
    }

    /// Row-major values; the flattening α ↦ α1·d + α2 used by conversion maps.
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn sum(&self) -> C64 {
        self.values.iter().sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.d, other.d, "grid dimensions must agree");
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn entries_finite(&self) -> bool {
        self.values.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Build the M-PPO frame generated by a stencil:
///
/// ```text
/// A^M(α) = (1/2) Σ_{m'} M(m') A^{(2d)}(m' + 2α)
/// ```
///
/// Validity of the stencil is not required to build the frame; it is required
/// for the frame to pass [`validate_frame`].
pub fn m_ppo_frame(stencil: &Stencil) -> PPOFrame {
    let d = stencil.dimension();
    let n = d.doubled();
    let table = doubled_ppo_table(d);
    let raw = stencil.raw();
    let mut ppos = Vec::with_capacity(d.get() * d.get());
    for a1 in 0..d.get() {
        for a2 in 0..d.get() {
            let mut acc = Operator::zeros(d);
            for m1 in 0..n {
                for m2 in 0..n {
                    let weight = raw.get_raw(m1, m2) * 0.5;
                    if weight.norm_sqr() == 0.0 {
                        continue;
                    }
                    let idx = ((m1 + 2 * a1) % n) * n + (m2 + 2 * a2) % n;
                    acc.accumulate(&table[idx], weight);
                }
            }
            ppos.push(acc);
        }
    }
    PPOFrame {
        d,
        ppos,
        source: FrameSource {
            label: stencil.label().to_string(),
            projected_hash: stencil.projected_hash(),
        },
    }
}

/// Wigner transform of an operator in a frame: W(α) = Tr[A(α)† O] / d.
pub fn wig(op: &Operator, frame: &PPOFrame) -> Result<WignerGrid> {
    if op.dimension() != frame.dimension() {
        return Err(Error::DimensionMismatch {
            left: op.side(),
            right: frame.dimension().get(),
        });
    }
    let d = frame.dimension();
    let norm = 1.0 / d.get() as f64;
    Ok(WignerGrid::from_fn(d, |a1, a2| {
        let ppo = frame.ppo(a1 as i64, a2 as i64);
        let mut acc = c_zero();
        for r in 0..d.get() {
            for c in 0..d.get() {
                acc += ppo.get(r, c).conj() * op.get(r, c);
            }
        }
        acc * norm
    }))
}

/// Weyl (quantisation) transform: Op = Σ_α W(α) A(α). For valid frames this
/// inverts [`wig`].
pub fn weyl(grid: &WignerGrid, frame: &PPOFrame) -> Result<Operator> {
    if grid.dimension() != frame.dimension() {
        return Err(Error::DimensionMismatch {
            left: grid.side(),
            right: frame.dimension().get(),
        });
    }
    let d = frame.dimension();
    let mut out = Operator::zeros(d);
    for a1 in 0..d.get() {
        for a2 in 0..d.get() {
            let weight = grid.get(a1 as i64, a2 as i64);
            if weight.norm_sqr() == 0.0 {
                continue;
            }
            out.accumulate(frame.ppo(a1 as i64, a2 as i64), weight);
        }
    }
    Ok(out)
}

/// Horizontal and vertical line averages of a frame's PPOs:
/// `horizontal[α2] = (1/d) Σ_{α1} A(α)` and `vertical[α1] = (1/d) Σ_{α2} A(α)`.
#[derive(Clone, Debug)]
pub struct Marginals {
    pub horizontal: Vec<Operator>,
    pub vertical: Vec<Operator>,
}

pub fn marginals(frame: &PPOFrame) -> Marginals {
    let d = frame.dimension();
    let norm = C64::new(1.0 / d.get() as f64, 0.0);
    let mut horizontal = Vec::with_capacity(d.get());
    let mut vertical = Vec::with_capacity(d.get());
    for fixed in 0..d.get() as i64 {
        let mut h = Operator::zeros(d);
        let mut v = Operator::zeros(d);
        for running in 0..d.get() as i64 {
            h.accumulate(frame.ppo(running, fixed), norm);
            v.accumulate(frame.ppo(fixed, running), norm);
        }
        horizontal.push(h);
        vertical.push(v);
    }
    Marginals {
        horizontal,
        vertical,
    }
}

/// MUB analysis of the PPO marginals: each family should consist of rank-1
/// projectors forming an orthonormal basis, and the two bases should be
/// mutually unbiased (all squared cross-overlaps equal to 1/d).
#[derive(Clone, Debug, Serialize)]
pub struct MubReport {
    pub tolerance: f64,
    pub qh_projector_residual: f64,
    pub qv_projector_residual: f64,
    pub qh_projectors_ok: bool,
    pub qv_projectors_ok: bool,
    pub orthonormality_residual: f64,
    pub within_basis_orthonormal: bool,
    pub unbiasedness_residual: f64,
    pub unbiased: bool,
}

impl MubReport {
    pub fn pass(&self) -> bool {
        self.qh_projectors_ok
            && self.qv_projectors_ok
            && self.within_basis_orthonormal
            && self.unbiased
    }
}

/// Worst deviation of one operator from being a rank-1 projector:
/// Hermiticity, idempotency, and unit trace.
fn projector_residual(q: &Operator) -> f64 {
    let herm = q.hermiticity_residual();
    let idem = q.matmul(q).max_abs_diff(q);
    let trace = (q.trace() - C64::new(1.0, 0.0)).norm();
    herm.max(idem).max(trace)
}

/// Unit eigenvector for the largest-magnitude eigenvalue, by power iteration.
/// Exact in one step for genuine rank-1 projectors; for badly conditioned
/// inputs the caller's residuals flag the failure, never a panic.
fn dominant_unit_vector(q: &Operator) -> Vec<C64> {
    let n = q.side();
    for bootstrap in 0..n {
        let mut seed = vec![c_zero(); n];
        seed[bootstrap] = C64::new(1.0, 0.0);
        let mut v = q.apply(&seed);
        let mut norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-9 {
            continue;
        }
        for _ in 0..3 {
            for z in v.iter_mut() {
                *z /= norm;
            }
            v = q.apply(&v);
            norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-9 {
                break;
            }
        }
        if norm >= 1e-9 {
            for z in v.iter_mut() {
                *z /= norm;
            }
            return v;
        }
    }
    // no usable direction (e.g. the zero operator); any unit vector gives the
    // caller a large residual to report
    let mut fallback = vec![c_zero(); n];
    fallback[0] = C64::new(1.0, 0.0);
    fallback
}

/// Orthonormality of a marginal family: pairwise Hilbert-Schmidt overlaps
/// vanish and the family resolves the identity.
fn family_orthonormality_residual(family: &[Operator], d: Dimension) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, qi) in family.iter().enumerate() {
        for qj in family.iter().skip(i + 1) {
            let mut overlap = c_zero();
            for r in 0..d.get() {
                for c in 0..d.get() {
                    overlap += qi.get(r, c).conj() * qj.get(r, c);
                }
            }
            worst = worst.max(overlap.norm());
        }
    }
    let mut total = Operator::zeros(d);
    for q in family {
        total.accumulate(q, C64::new(1.0, 0.0));
    }
    worst.max(total.max_abs_diff(&Operator::identity(d)))
}

pub fn check_marginalisation(frame: &PPOFrame, tolerance: f64) -> MubReport {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let d = frame.dimension();
    let margins = marginals(frame);

    let qh_projector_residual = margins
        .horizontal
        .iter()
        .map(projector_residual)
        .fold(0.0, f64::max);
    let qv_projector_residual = margins
        .vertical
        .iter()
        .map(projector_residual)
        .fold(0.0, f64::max);

    let orthonormality_residual = family_orthonormality_residual(&margins.horizontal, d)
        .max(family_orthonormality_residual(&margins.vertical, d));

    let h_vectors: Vec<Vec<C64>> = margins.horizontal.iter().map(dominant_unit_vector).collect();
    let v_vectors: Vec<Vec<C64>> = margins.vertical.iter().map(dominant_unit_vector).collect();
    let target = 1.0 / d.get() as f64;
    let mut unbiasedness_residual: f64 = 0.0;
    for h in &h_vectors {
        for v in &v_vectors {
            let overlap: C64 = h.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            unbiasedness_residual = unbiasedness_residual.max((overlap.norm_sqr() - target).abs());
        }
    }

    MubReport {
        tolerance,
        qh_projector_residual,
        qv_projector_residual,
        qh_projectors_ok: qh_projector_residual <= tolerance,
        qv_projectors_ok: qv_projector_residual <= tolerance,
        orthonormality_residual,
        within_basis_orthonormal: orthonormality_residual <= tolerance,
        unbiasedness_residual,
        unbiased: unbiasedness_residual <= tolerance,
    }
}

/// Residuals for the four frame criteria plus the marginalisation analysis.
#[derive(Clone, Debug, Serialize)]
pub struct FrameReport {
    pub tolerance: f64,
    pub a1_residual: f64,
    pub a2_residual: f64,
    pub a3_residual: f64,
    pub a4_residual: f64,
    pub a1_ok: bool,
    pub a2_ok: bool,
    pub a3_ok: bool,
    pub a4_ok: bool,
    pub marginalisation: MubReport,
}

impl FrameReport {
    /// True iff the four frame criteria hold (marginalisation is reported but
    /// not required for validity).
    pub fn frame_ok(&self) -> bool {
        self.a1_ok && self.a2_ok && self.a3_ok && self.a4_ok
    }
}

/// Check the four defining frame criteria:
/// Hermiticity (A1), unit trace (A2), orthogonality Tr[A(α)†A(β)] = d·Δ_d[α−β]
/// (A3), and displacement covariance V(k)A(α)V(k)† = A(α+k) (A4).
pub fn validate_frame(frame: &PPOFrame, tolerance: f64) -> FrameReport {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let d = frame.dimension();
    let n = d.get() as i64;

    let a1_residual = frame
        .ppos()
        .iter()
        .map(Operator::hermiticity_residual)
        .fold(0.0, f64::max);

    let a2_residual = frame
        .ppos()
        .iter()
        .map(|a| (a.trace() - C64::new(1.0, 0.0)).norm())
        .fold(0.0, f64::max);

    let mut a3_residual: f64 = 0.0;
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    let mut overlap = c_zero();
                    let pa = frame.ppo(a1, a2);
                    let pb = frame.ppo(b1, b2);
                    for r in 0..d.get() {
                        for c in 0..d.get() {
                            overlap += pa.get(r, c).conj() * pb.get(r, c);
                        }
                    }
                    let target = if a1 == b1 && a2 == b2 {
                        d.get() as f64
                    } else {
                        0.0
                    };
                    a3_residual = a3_residual.max((overlap - C64::new(target, 0.0)).norm());
                }
            }
        }
    }

    let mut a4_residual: f64 = 0.0;
    for k1 in 0..n {
        for k2 in 0..n {
            let v = whdo(d, PhasePoint::unbounded(k1, k2));
            let v_dag = v.dagger();
            for a1 in 0..n {
                for a2 in 0..n {
                    let conjugated = v.matmul(frame.ppo(a1, a2)).matmul(&v_dag);
                    let shifted = frame.ppo(a1 + k1, a2 + k2);
                    a4_residual = a4_residual.max(conjugated.max_abs_diff(shifted));
                }
            }
        }
    }

    FrameReport {
        tolerance,
        a1_residual,
        a2_residual,
        a3_residual,
        a4_residual,
        a1_ok: a1_residual <= tolerance,
        a2_ok: a2_residual <= tolerance,
        a3_ok: a3_residual <= tolerance,
        a4_ok: a4_residual <= tolerance,
        marginalisation: check_marginalisation(frame, tolerance),
    }
}

/// Total weight of the negative part of a real Wigner grid:
/// Σ_α max(0, −Re W(α)). Errors if the grid carries imaginary parts beyond
/// 1e-8, where negativity is not defined.
pub fn negativity(grid: &WignerGrid) -> Result<f64> {
    let imag = grid.max_imag();
    if imag > 1e-8 {
        return Err(Error::NonRealGrid(imag));
    }
    Ok(grid
        .values()
        .iter()
        .map(|z| (-z.re).max(0.0))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubled::{doubled_ppo, DoubledFunction};
    use crate::qudit::c_one;
    use crate::stencil::{builtin_stencil, StencilKind};

    const TOL: f64 = 1e-10;

    fn dim(d: usize) -> Dimension {
        Dimension::new(d).unwrap()
    }

    #[test]
    fn reduction_frame_samples_even_doubled_ppos() {
        let d = dim(3);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, d).unwrap());
        for a1 in 0..3i64 {
            for a2 in 0..3i64 {
                let expected = doubled_ppo(d, PhasePoint::unbounded(2 * a1, 2 * a2));
                assert!(frame.ppo(a1, a2).max_abs_diff(&expected) < TOL);
            }
        }
    }

    #[test]
    fn coarse_grain_frame_averages_four_neighbours() {
        let d = dim(4);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::CoarseGrain, d).unwrap());
        for a1 in 0..4i64 {
            for a2 in 0..4i64 {
                let mut expected = Operator::zeros(d);
                for b1 in 0..2i64 {
                    for b2 in 0..2i64 {
                        expected.accumulate(
                            &doubled_ppo(d, PhasePoint::unbounded(2 * a1 + b1, 2 * a2 + b2)),
                            C64::new(0.5, 0.0),
                        );
                    }
                }
                assert!(frame.ppo(a1, a2).max_abs_diff(&expected) < TOL);
            }
        }
    }

    #[test]
    fn zero_stencil_generates_the_zero_frame() {
        let d = dim(3);
        let frame = m_ppo_frame(&Stencil::new("zero", DoubledFunction::zeros(d)));
        for op in frame.ppos() {
            assert_eq!(op.max_abs(), 0.0);
        }
    }

    #[test]
    fn wigner_of_identity_is_constant() {
        let d = dim(3);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, d).unwrap());
        let grid = wig(&Operator::identity(d), &frame).unwrap();
        for a1 in 0..3i64 {
            for a2 in 0..3i64 {
                assert!((grid.get(a1, a2) - C64::new(1.0 / 3.0, 0.0)).norm() < TOL);
            }
        }
        // maximally mixed state: constant 1/d², summing to 1
        let mixed = Operator::identity(d).scaled(C64::new(1.0 / 3.0, 0.0));
        let grid = wig(&mixed, &frame).unwrap();
        assert!((grid.sum() - c_one()).norm() < TOL);
    }

    #[test]
    fn wigner_of_ground_state_in_reduction_frame() {
        // |0⟩⟨0| at d = 3: 1/3 on the α1 = 0 line, zero elsewhere.
        let d = dim(3);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, d).unwrap());
        let grid = wig(&Operator::ket_bra(d, 0, 0), &frame).unwrap();
        for a1 in 0..3i64 {
            for a2 in 0..3i64 {
                let expected = if a1 == 0 { 1.0 / 3.0 } else { 0.0 };
                assert!(
                    (grid.get(a1, a2) - C64::new(expected, 0.0)).norm() < TOL,
                    "α = ({a1},{a2})"
                );
            }
        }
    }

    #[test]
    fn weyl_round_trips() {
        let d = dim(3);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, d).unwrap());
        let x = crate::qudit::shift_power(d, 1);
        let back = weyl(&wig(&x, &frame).unwrap(), &frame).unwrap();
        assert!(back.max_abs_diff(&x) < TOL);

        let constant = WignerGrid::from_fn(d, |_, _| C64::new(1.0 / 3.0, 0.0));
        let id = weyl(&constant, &frame).unwrap();
        assert!(id.max_abs_diff(&Operator::identity(d)) < TOL);

        let zero = weyl(&WignerGrid::zeros(d), &frame).unwrap();
        assert_eq!(zero.max_abs(), 0.0);
    }

    #[test]
    fn dimension_mismatches_are_rejected() {
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, dim(3)).unwrap());
        assert!(wig(&Operator::identity(dim(2)), &frame).is_err());
        assert!(weyl(&WignerGrid::zeros(dim(2)), &frame).is_err());
    }

    #[test]
    fn builtin_frames_pass_validation() {
        for d in [3usize, 5] {
            let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, dim(d)).unwrap());
            let report = validate_frame(&frame, TOL);
            assert!(report.frame_ok(), "RS d={d}: {report:?}");
        }
        for d in [2usize, 4] {
            let frame = m_ppo_frame(&builtin_stencil(StencilKind::CoarseGrain, dim(d)).unwrap());
            let report = validate_frame(&frame, TOL);
            assert!(report.frame_ok(), "CGS d={d}: {report:?}");
        }
    }

    #[test]
    fn zero_frame_fails_normalisation_and_orthogonality() {
        let d = dim(3);
        let frame = m_ppo_frame(&Stencil::new("zero", DoubledFunction::zeros(d)));
        let report = validate_frame(&frame, TOL);
        assert!(!report.a2_ok);
        assert!((report.a2_residual - 1.0).abs() < 1e-14);
        assert!(!report.a3_ok);
        assert!((report.a3_residual - 3.0).abs() < 1e-14);
    }

    #[test]
    fn coarse_grain_vertical_marginals_are_position_projectors() {
        let d = dim(4);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::CoarseGrain, d).unwrap());
        let margins = marginals(&frame);
        for (a1, q) in margins.vertical.iter().enumerate() {
            assert!(q.max_abs_diff(&Operator::ket_bra(d, a1, a1)) < TOL);
        }
    }

    #[test]
    fn reduction_vertical_marginals_are_position_projectors() {
        let d = dim(3);
        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, d).unwrap());
        let margins = marginals(&frame);
        for (a1, q) in margins.vertical.iter().enumerate() {
            assert!(q.max_abs_diff(&Operator::ket_bra(d, a1, a1)) < TOL);
        }
    }

    #[test]
    fn zero_frame_has_zero_marginals() {
        let frame = m_ppo_frame(&Stencil::new("zero", DoubledFunction::zeros(dim(3))));
        let margins = marginals(&frame);
        for q in margins.horizontal.iter().chain(margins.vertical.iter()) {
            assert_eq!(q.max_abs(), 0.0);
        }
    }

    #[test]
    fn marginalisation_reports() {
        let rs = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, dim(3)).unwrap());
        assert!(check_marginalisation(&rs, 1e-9).pass());

        let cgs = m_ppo_frame(&builtin_stencil(StencilKind::CoarseGrain, dim(4)).unwrap());
        assert!(check_marginalisation(&cgs, 1e-9).pass());

        // DKS: the report is produced and recorded, but pass/fail is left open.
        let dks = m_ppo_frame(&builtin_stencil(StencilKind::DirichletKernel, dim(3)).unwrap());
        let report = check_marginalisation(&dks, 1e-9);
        assert!(report.qh_projector_residual.is_finite());
        assert!(report.unbiasedness_residual.is_finite());
    }

    #[test]
    fn negativity_cases() {
        let d = dim(3);
        let constant = WignerGrid::from_fn(d, |_, _| C64::new(1.0 / 3.0, 0.0));
        assert_eq!(negativity(&constant).unwrap(), 0.0);

        let frame = m_ppo_frame(&builtin_stencil(StencilKind::Reduction, d).unwrap());
        let grid = wig(&Operator::ket_bra(d, 0, 0), &frame).unwrap();
        assert!(negativity(&grid).unwrap() < 1e-12);

        let mut complex_grid = WignerGrid::zeros(d);
        complex_grid.set(0, 0, C64::new(0.0, 0.5));
        assert!(negativity(&complex_grid).is_err());
    }
}
