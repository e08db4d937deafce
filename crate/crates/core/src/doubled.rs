//! The doubled phase space Z_{2d}²: doubled phase-point operators, the
//! doubled Wigner/Weyl transform pair, the stencil projector, cross-correlation,
//! and the symplectic discrete Fourier transform (SDFT).
//!
//! Functions on the doubled space carry a fourfold redundancy; the orthogonal
//! projector [`project`] singles out the subspace that faithfully represents
//! qudit operators. Grids are tiny (at most ~100×100), so every transform is a
//! direct sum — no FFT machinery.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::qudit::{
    c_zero, hs_inner, omega, parity, parity_sign, whdo, Dimension, Operator, PhasePoint,
};

/// Complex-valued function on the doubled phase space Z_{2d}², stored
/// row-major as `values[m1][m2]` with both indices in `[0, 2d)`.
///
/// `m1` is the position-displacement index. The same convention is used in
/// the JSON serialization (`grid[m1][m2]`).
#[derive(Clone, Debug, PartialEq)]
pub struct DoubledFunction {
    d: Dimension,
    values: Vec<C64>, // length (2d)²
}

impl DoubledFunction {
    pub fn zeros(d: Dimension) -> Self {
        let n = d.doubled();
        Self {
            d,
            values: vec![c_zero(); n * n],
        }
    }

    pub fn constant(d: Dimension, value: C64) -> Self {
        let n = d.doubled();
        Self {
            d,
            values: vec![value; n * n],
        }
    }

    pub fn from_fn(d: Dimension, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let n = d.doubled();
        let mut values = Vec::with_capacity(n * n);
        for m1 in 0..n {
            for m2 in 0..n {
                values.push(f(m1, m2));
            }
        }
        Self { d, values }
    }

    /// Build from a row-major value list; length must be (2d)².
    pub fn from_values(d: Dimension, values: Vec<C64>) -> Self {
        let n = d.doubled();
        assert_eq!(values.len(), n * n, "value count must be (2d)²");
        Self { d, values }
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    /// Grid side length 2d.
    pub fn side(&self) -> usize {
        self.d.doubled()
    }

    /// Value at (m1, m2) with both indices reduced modulo 2d.
    pub fn get(&self, m1: i64, m2: i64) -> C64 {
        let n = self.side() as i64;
        let r = m1.rem_euclid(n) as usize;
        let c = m2.rem_euclid(n) as usize;
        self.values[r * self.side() + c]
    }

    /// Value at already-canonical indices in `[0, 2d)`.
    pub fn get_raw(&self, m1: usize, m2: usize) -> C64 {
        self.values[m1 * self.side() + m2]
    }

    pub fn set(&mut self, m1: usize, m2: usize, value: C64) {
        let n = self.side();
        self.values[m1 * n + m2] = value;
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn sum(&self) -> C64 {
        self.values.iter().sum()
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            d: self.d,
            values: self.values.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
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

    /// ⟨f, g⟩ = Σ_m f(m)* g(m).
    pub fn inner(&self, other: &Self) -> C64 {
        assert_eq!(self.d, other.d, "grid dimensions must agree");
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn entries_finite(&self) -> bool {
        self.values.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Doubled phase-point operator A^{(2d)}(m) = V(m)·R. Hermitian, and equal to
/// R·V(m)† by the same token.
pub fn doubled_ppo(d: Dimension, m: PhasePoint) -> Operator {
    whdo(d, m).matmul(&parity(d))
}

/// All 4d² doubled PPOs, indexed `m1·2d + m2`.
pub(crate) fn doubled_ppo_table(d: Dimension) -> Vec<Operator> {
    let n = d.doubled();
    let r = parity(d);
    let mut table = Vec::with_capacity(n * n);
    for m1 in 0..n {
        for m2 in 0..n {
            table.push(whdo(d, PhasePoint::unbounded(m1 as i64, m2 as i64)).matmul(&r));
        }
    }
    table
}

/// Doubled Wigner transform: W^{(2d)}_O(m) = Tr[A^{(2d)}(m)† O] / 2d.
///
/// Real-valued (to rounding) whenever `op` is Hermitian.
pub fn doubled_wigner(op: &Operator) -> DoubledFunction {
    let d = op.dimension();
    let n = d.doubled();
    let table = doubled_ppo_table(d);
    let norm = 1.0 / n as f64;
    DoubledFunction::from_fn(d, |m1, m2| {
        hs_inner(&table[m1 * n + m2], op).expect("table operators share d") * norm
    })
}

/// Doubled Weyl transform: Op^{(2d)}[f] = (1/2) Σ_m f(m) A^{(2d)}(m).
///
/// Left inverse of [`doubled_wigner`]: the round trip reproduces the operator.
pub fn doubled_weyl(f: &DoubledFunction) -> Operator {
    let d = f.dimension();
    let n = f.side();
    let table = doubled_ppo_table(d);
    let mut out = Operator::zeros(d);
    for m1 in 0..n {
        for m2 in 0..n {
            let weight = f.get_raw(m1, m2) * 0.5;
            if weight.norm_sqr() == 0.0 {
                continue;
            }
            out.accumulate(&table[m1 * n + m2], weight);
        }
    }
    out
}

/// Orthogonal stencil projector, as the explicit four-term coset sum
///
/// ```text
/// f̄(m) = (1/4) Σ_{b ∈ Z₂²} (−1)^{b1·m2 − b2·m1 − b1·b2·d} f(m − d·b)
/// ```
///
/// This equals the composition `doubled_wigner(doubled_weyl(f))`, which is
/// kept as an independent test oracle; the four-term sum is the production
/// path (O(d²) per grid instead of O(d⁴)).
pub fn project(f: &DoubledFunction) -> DoubledFunction {
    let dd = f.dimension().get() as i64;
    DoubledFunction::from_fn(f.dimension(), |m1, m2| {
        let (m1, m2) = (m1 as i64, m2 as i64);
        let mut acc = c_zero();
        for b1 in 0..2i64 {
            for b2 in 0..2i64 {
                let sign = parity_sign(b1 * m2 - b2 * m1 - b1 * b2 * dd);
                acc += f.get(m1 - dd * b1, m2 - dd * b2) * sign;
            }
        }
        acc * 0.25
    })
}

/// One matrix element P_{m,m'} of the stencil projector on L₂(Z_{2d}²).
#[derive(Copy, Clone, Debug)]
pub struct ProjectorMatrixElement {
    pub row: PhasePoint,
    pub col: PhasePoint,
    pub value: C64,
}

/// P_{m,m'} = (1/4) Σ_b (−1)^{b1·m2 − b2·m1 − b1·b2·d} Δ_{2d}[m − m' − d·b].
///
/// Satisfies the Hermitian symmetry P_{m,m'} = conj(P_{m',m}).
pub fn projector_matrix_element(
    d: Dimension,
    m: PhasePoint,
    m_prime: PhasePoint,
) -> ProjectorMatrixElement {
    let dd = d.get() as i64;
    let period = d.doubled() as i64;
    let (m1, m2) = m.components();
    let (p1, p2) = m_prime.components();
    let mut acc = 0.0;
    for b1 in 0..2i64 {
        for b2 in 0..2i64 {
            let hit1 = (m1 - p1 - dd * b1).rem_euclid(period) == 0;
            let hit2 = (m2 - p2 - dd * b2).rem_euclid(period) == 0;
            if hit1 && hit2 {
                acc += parity_sign(b1 * m2 - b2 * m1 - b1 * b2 * dd);
            }
        }
    }
    ProjectorMatrixElement {
        row: PhasePoint::modular(m1, m2, d.doubled()),
        col: PhasePoint::modular(p1, p2, d.doubled()),
        value: C64::new(acc * 0.25, 0.0),
    }
}

/// Cross-correlation (f ⋆ g)(m) = Σ_{m'} f(m')* g(m' + m), indices mod 2d.
pub fn cross_correlate(f: &DoubledFunction, g: &DoubledFunction) -> Result<DoubledFunction> {
    if f.dimension() != g.dimension() {
        return Err(Error::DimensionMismatch {
            left: f.dimension().get(),
            right: g.dimension().get(),
        });
    }
    let n = f.side();
    Ok(DoubledFunction::from_fn(f.dimension(), |m1, m2| {
        let mut acc = c_zero();
        for p1 in 0..n {
            for p2 in 0..n {
                acc += f.get_raw(p1, p2).conj()
                    * g.get((p1 + m1) as i64, (p2 + m2) as i64);
            }
        }
        acc
    }))
}

/// Symplectic discrete Fourier transform
///
/// ```text
/// f̌(m) = (1/2d) Σ_{m'} ω_{2d}^{−(m1·m2' − m2·m1')} f(m')
/// ```
///
/// Self-inverse, and commutes with [`project`].
pub fn sdft(f: &DoubledFunction) -> DoubledFunction {
    let n = f.side();
    let roots: Vec<C64> = (0..n).map(|t| omega(n, t as i64)).collect();
    let norm = 1.0 / n as f64;
    let n_i = n as i64;
    DoubledFunction::from_fn(f.dimension(), |m1, m2| {
        let (m1, m2) = (m1 as i64, m2 as i64);
        let mut acc = c_zero();
        for p1 in 0..n_i {
            for p2 in 0..n_i {
                let exponent = (-(m1 * p2 - m2 * p1)).rem_euclid(n_i) as usize;
                acc += roots[exponent] * f.get_raw(p1 as usize, p2 as usize);
            }
        }
        acc * norm
    })
}
