//! Modular arithmetic, roots of unity, and the generating operators of the
//! qudit Weyl-Heisenberg group: clock, shift, displacement, and parity.
//!
//! Everything here is plain dense linear algebra over `Complex64`. Dimensions
//! are small (tens, not thousands), so clarity and exact conventions win over
//! asymptotics. All values are immutable after construction and all functions
//! are pure.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Sub};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Qudit dimension, restricted to d >= 2.
///
/// d = 1 is rejected everywhere: the phase space collapses to a point and the
/// frame conditions degenerate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dimension(usize);

impl Dimension {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        Ok(Self(d))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Side length 2d of the doubled phase space.
    pub fn doubled(self) -> usize {
        2 * self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Modulus tag for a [`PhasePoint`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Modulus {
    Bounded(usize),
    Unbounded,
}

/// An integer pair living on Z², Z_2², Z_d², or Z_{2d}².
///
/// Components are stored canonically reduced into `[0, modulus)` whenever the
/// modulus is bounded, so `-1 mod 6` is stored as `5`. This is the one place
/// where modular sign conventions are decided.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhasePoint {
    v1: i64,
    v2: i64,
    modulus: Modulus,
}

impl PhasePoint {
    pub fn new(v1: i64, v2: i64, modulus: Modulus) -> Self {
        match modulus {
            Modulus::Unbounded => Self { v1, v2, modulus },
            Modulus::Bounded(m) => {
                assert!(m > 0, "phase-point modulus must be positive");
                let m = m as i64;
                Self {
                    v1: v1.rem_euclid(m),
                    v2: v2.rem_euclid(m),
                    modulus,
                }
            }
        }
    }

    /// Point on Z² (no reduction).
    pub fn unbounded(v1: i64, v2: i64) -> Self {
        Self::new(v1, v2, Modulus::Unbounded)
    }

    /// Point reduced modulo `m`.
    pub fn modular(v1: i64, v2: i64, m: usize) -> Self {
        Self::new(v1, v2, Modulus::Bounded(m))
    }

    pub fn v1(self) -> i64 {
        self.v1
    }

    pub fn v2(self) -> i64 {
        self.v2
    }

    pub fn components(self) -> (i64, i64) {
        (self.v1, self.v2)
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }
}

impl fmt::Display for PhasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.v1, self.v2)
    }
}

/// exp(2πi·a/order). Checked front door for [`omega`].
pub fn root_of_unity(order: usize, a: i64) -> Result<C64> {
    if order == 0 {
        return Err(Error::ZeroPeriod);
    }
    Ok(omega(order, a))
}

/// exp(2πi·a/order) with the exponent reduced modulo `order` before any trig,
/// so large integer arguments lose no accuracy. `order` must be positive.
pub(crate) fn omega(order: usize, a: i64) -> C64 {
    debug_assert!(order > 0);
    let reduced = a.rem_euclid(order as i64) as f64;
    let angle = TAU * reduced / order as f64;
    C64::new(angle.cos(), angle.sin())
}

/// (-1)^e as a real factor.
pub(crate) fn parity_sign(e: i64) -> f64 {
    if e.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// T-periodic Kronecker delta on a phase point: 1 iff both components vanish
/// modulo `period`. Factorizes as Δ_T[v1]·Δ_T[v2].
pub fn periodic_delta(period: usize, v: PhasePoint) -> Result<u8> {
    if period == 0 {
        return Err(Error::ZeroPeriod);
    }
    let t = period as i64;
    Ok(u8::from(v.v1.rem_euclid(t) == 0 && v.v2.rem_euclid(t) == 0))
}

pub(crate) fn c_zero() -> C64 {
    C64::new(0.0, 0.0)
}

pub(crate) fn c_one() -> C64 {
    C64::new(1.0, 0.0)
}

/// Dense complex d×d matrix in the computational basis |j⟩. Rows index the
/// output basis state, columns the input.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    d: Dimension,
    entries: Vec<C64>, // row-major, length d²
}

impl Operator {
    pub fn zeros(d: Dimension) -> Self {
        Self {
            d,
            entries: vec![c_zero(); d.get() * d.get()],
        }
    }

    pub fn identity(d: Dimension) -> Self {
        Self::from_fn(d, |r, c| if r == c { c_one() } else { c_zero() })
    }

    pub fn from_fn(d: Dimension, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let n = d.get();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        Self { d, entries }
    }

    /// Build from a row-major entry list; `entries.len()` must equal d².
    pub fn from_entries(d: Dimension, entries: Vec<C64>) -> Self {
        assert_eq!(entries.len(), d.get() * d.get(), "entry count must be d²");
        Self { d, entries }
    }

    /// Rank-one matrix |j⟩⟨k|.
    pub fn ket_bra(d: Dimension, j: usize, k: usize) -> Self {
        Self::from_fn(d, |r, c| {
            if r == j && c == k {
                c_one()
            } else {
                c_zero()
            }
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    pub fn side(&self) -> usize {
        self.d.get()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.d.get() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        let n = self.d.get();
        self.entries[row * n + col] = value;
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.d, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.side()).map(|j| self.get(j, j)).sum()
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            d: self.d,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Matrix product; panics on dimension mismatch (internal contract).
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "operator dimensions must agree");
        let n = self.side();
        Self::from_fn(self.d, |r, c| {
            (0..n).map(|k| self.get(r, k) * rhs.get(k, c)).sum()
        })
    }

    /// self += factor · other (dense axpy).
    pub fn accumulate(&mut self, other: &Self, factor: C64) {
        assert_eq!(self.d, other.d, "operator dimensions must agree");
        for (dst, src) in self.entries.iter_mut().zip(other.entries.iter()) {
            *dst += factor * src;
        }
    }

    /// Matrix–vector product.
    pub fn apply(&self, vec: &[C64]) -> Vec<C64> {
        assert_eq!(vec.len(), self.side());
        let n = self.side();
        (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c) * vec[c]).sum())
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.d, other.d, "operator dimensions must agree");
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// max |A[r][c] − conj(A[c][r])|: zero iff Hermitian.
    pub fn hermiticity_residual(&self) -> f64 {
        let n = self.side();
        let mut worst: f64 = 0.0;
        for r in 0..n {
            for c in 0..n {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn entries_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for &Operator {
    type Output = Operator;

    fn add(self, rhs: &Operator) -> Operator {
        assert_eq!(self.d, rhs.d, "operator dimensions must agree");
        Operator {
            d: self.d,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Operator {
    type Output = Operator;

    fn sub(self, rhs: &Operator) -> Operator {
        assert_eq!(self.d, rhs.d, "operator dimensions must agree");
        Operator {
            d: self.d,
            entries: self
                .entries
                .iter()
                .zip(rhs.entries.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Clock operator power Z^e = Σ_j ω_d^{e·j} |j⟩⟨j|; d-periodic in `e`.
pub fn clock_power(d: Dimension, exponent: i64) -> Operator {
    Operator::from_fn(d, |r, c| {
        if r == c {
            omega(d.get(), exponent * r as i64)
        } else {
            c_zero()
        }
    })
}

/// Shift operator power X^e = Σ_j |j+e mod d⟩⟨j|; d-periodic in `e`.
pub fn shift_power(d: Dimension, exponent: i64) -> Operator {
    let n = d.get() as i64;
    Operator::from_fn(d, |r, c| {
        if (c as i64 + exponent).rem_euclid(n) == r as i64 {
            c_one()
        } else {
            c_zero()
        }
    })
}

/// Weyl-Heisenberg displacement operator (Schwinger phase convention)
///
/// ```text
/// V(k) = ω_{2d}^{-k1·k2} Z^{k2} X^{k1}
/// ```
///
/// The components of `k` are taken as plain integers and reduced modulo 2d
/// first; the whole operator is 2d-periodic in both components.
pub fn whdo(d: Dimension, k: PhasePoint) -> Operator {
    let period = d.doubled() as i64;
    let k1 = k.v1().rem_euclid(period);
    let k2 = k.v2().rem_euclid(period);
    let phase = omega(d.doubled(), -(k1 * k2));
    clock_power(d, k2).matmul(&shift_power(d, k1)).scaled(phase)
}

/// Discrete parity operator R = Σ_j |-j mod d⟩⟨j|: a Hermitian permutation
/// matrix with R² = I.
pub fn parity(d: Dimension) -> Operator {
    let n = d.get() as i64;
    Operator::from_fn(d, |r, c| {
        if (-(c as i64)).rem_euclid(n) == r as i64 {
            c_one()
        } else {
            c_zero()
        }
    })
}

/// Hilbert-Schmidt inner product Tr[A† B].
pub fn hs_inner(a: &Operator, b: &Operator) -> Result<C64> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.side(),
            right: b.side(),
        });
    }
    Ok(a.entries()
        .iter()
        .zip(b.entries().iter())
        .map(|(x, y)| x.conj() * y)
        .sum())
}
