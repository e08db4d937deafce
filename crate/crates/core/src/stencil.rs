//! Stencil construction and validity.
//!
//! A stencil is any complex function on the doubled phase space. Its
//! projection decides everything: two stencils with equal projections generate
//! the same DWF. Validity can be checked in the spatial domain (criteria on
//! the projected stencil: realness, unit sum, delta autocorrelation on even
//! sites) or in the Fourier domain (conjugate symmetry, fixed origin value,
//! constant modulus), which is also what the deterministic sampler uses to
//! construct novel valid stencils.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::doubled::{cross_correlate, project, sdft, DoubledFunction};
use crate::error::{Error, Result};
use crate::qudit::{omega, parity_sign, Dimension};

/// The built-in stencils.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum StencilKind {
    /// Reduction stencil: keeps the even grid sites only. Odd d.
    Reduction,
    /// Coarse-grain stencil: averages four neighbouring sites. Even d.
    CoarseGrain,
    /// Dirichlet-kernel stencil: separable product of 1-d kernels. Odd d.
    DirichletKernel,
}

impl StencilKind {
    pub fn short_name(self) -> &'static str {
        match self {
            StencilKind::Reduction => "RS",
            StencilKind::CoarseGrain => "CGS",
            StencilKind::DirichletKernel => "DKS",
        }
    }
}

impl fmt::Display for StencilKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// A doubled-space function designated as a stencil, with its projection
/// cached at construction.
#[derive(Clone, Debug)]
pub struct Stencil {
    raw: DoubledFunction,
    projected: DoubledFunction,
    label: String,
}

impl Stencil {
    pub fn new(label: impl Into<String>, raw: DoubledFunction) -> Self {
        let projected = project(&raw);
        Self {
            raw,
            projected,
            label: label.into(),
        }
    }

    pub fn dimension(&self) -> Dimension {
        self.raw.dimension()
    }

    pub fn raw(&self) -> &DoubledFunction {
        &self.raw
    }

    pub fn projected(&self) -> &DoubledFunction {
        &self.projected
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// FNV-1a hash of the projected grid, quantized at 1e-12. Used as a cheap
    /// identity for frame provenance; equality of projections implies equality
    /// of hashes, and frame comparison falls back to entrywise checks anyway.
    pub fn projected_hash(&self) -> u64 {
        const FNV_OFFSET: u64 = 0xcbf29ce484222325;
        const FNV_PRIME: u64 = 0x100000001b3;
        let mut hash = FNV_OFFSET;
        let mut feed = |x: i64| {
            for byte in x.to_le_bytes() {
                hash ^= byte as u64;
                hash = hash.wrapping_mul(FNV_PRIME);
            }
        };
        feed(self.dimension().get() as i64);
        for z in self.projected.values() {
            feed((z.re * 1e12).round() as i64);
            feed((z.im * 1e12).round() as i64);
        }
        hash
    }
}

/// 1-d Dirichlet kernel for odd d, evaluated through its root-of-unity sum
///
/// ```text
/// K_d(m) = (1/d) Σ_{t=-(d-1)/2}^{(d-1)/2} ω_{2d}^{t·m}
/// ```
///
/// which is singularity-free; the equivalent sine ratio
/// sin(πm/2) / (d·sin(πm/2d)) is kept as a test cross-check only.
pub fn dirichlet_kernel(d: Dimension, m: i64) -> Result<f64> {
    if d.is_even() {
        return Err(Error::ParityMismatch {
            what: "Dirichlet kernel",
            required: "odd",
            d: d.get(),
        });
    }
    let half = (d.get() as i64 - 1) / 2;
    let order = d.doubled();
    let mut acc = 0.0;
    // imaginary parts cancel pairwise over t ↔ -t
    for t in -half..=half {
        acc += omega(order, t * m).re;
    }
    Ok(acc / d.get() as f64)
}

/// 2d-periodic boxcar: 1 iff Re(ω_{2d}^k) > 0. Odd d only, where the real
/// part never vanishes at integer arguments.
pub fn boxcar(d: Dimension, k: i64) -> Result<u8> {
    if d.is_even() {
        return Err(Error::ParityMismatch {
            what: "boxcar",
            required: "odd",
            d: d.get(),
        });
    }
    Ok(u8::from(omega(d.doubled(), k).re > 0.0))
}

/// Construct one of the built-in stencils, enforcing its parity constraint.
pub fn builtin_stencil(kind: StencilKind, d: Dimension) -> Result<Stencil> {
    match kind {
        StencilKind::Reduction => {
            if d.is_even() {
                return Err(Error::ParityMismatch {
                    what: "RS",
                    required: "odd",
                    d: d.get(),
                });
            }
            let mut raw = DoubledFunction::zeros(d);
            raw.set(0, 0, C64::new(2.0, 0.0));
            Ok(Stencil::new(format!("RS(d={})", d.get()), raw))
        }
        StencilKind::CoarseGrain => {
            if d.is_odd() {
                return Err(Error::ParityMismatch {
                    what: "CGS",
                    required: "even",
                    d: d.get(),
                });
            }
            let mut raw = DoubledFunction::zeros(d);
            for b1 in 0..2 {
                for b2 in 0..2 {
                    raw.set(b1, b2, C64::new(1.0, 0.0));
                }
            }
            Ok(Stencil::new(format!("CGS(d={})", d.get()), raw))
        }
        StencilKind::DirichletKernel => {
            if d.is_even() {
                return Err(Error::ParityMismatch {
                    what: "DKS",
                    required: "odd",
                    d: d.get(),
                });
            }
            let n = d.doubled();
            let kernel: Vec<f64> = (0..n)
                .map(|m| dirichlet_kernel(d, m as i64).expect("parity checked above"))
                .collect();
            let raw = DoubledFunction::from_fn(d, |m1, m2| {
                C64::new(kernel[m1] * kernel[m2], 0.0)
            });
            Ok(Stencil::new(format!("DKS(d={})", d.get()), raw))
        }
    }
}

/// Which domain a [`ValidityReport`] was computed in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionDomain {
    Spatial,
    Fourier,
}

/// Per-criterion residuals for a stencil validity check. The `ok` flags are
/// derived from the residuals against the stored tolerance at construction.
#[derive(Copy, Clone, Debug, Serialize)]
pub struct ValidityReport {
    pub domain: CriterionDomain,
    pub tolerance: f64,
    pub m1_residual: f64,
    pub m2_residual: f64,
    pub m3_residual: f64,
    pub m1_ok: bool,
    pub m2_ok: bool,
    pub m3_ok: bool,
}

impl ValidityReport {
    fn from_residuals(domain: CriterionDomain, tolerance: f64, r1: f64, r2: f64, r3: f64) -> Self {
        Self {
            domain,
            tolerance,
            m1_residual: r1,
            m2_residual: r2,
            m3_residual: r3,
            m1_ok: r1 <= tolerance,
            m2_ok: r2 <= tolerance,
            m3_ok: r3 <= tolerance,
        }
    }

    pub fn all_ok(&self) -> bool {
        self.m1_ok && self.m2_ok && self.m3_ok
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = |ok: bool| if ok { "ok" } else { "FAIL" };
        let (c1, c2, c3) = match self.domain {
            CriterionDomain::Spatial => ("M1", "M2", "M3"),
            CriterionDomain::Fourier => ("F1", "F2", "F3"),
        };
        write!(
            f,
            "{} {} ({:.3e}), {} {} ({:.3e}), {} {} ({:.3e}) at tol {:.1e}",
            c1,
            tag(self.m1_ok),
            self.m1_residual,
            c2,
            tag(self.m2_ok),
            self.m2_residual,
            c3,
            tag(self.m3_ok),
            self.m3_residual,
            self.tolerance,
        )
    }
}

/// Spatial-domain validity check on the projected stencil:
/// realness (M1), unit sum (M2), and delta autocorrelation on even sites (M3).
pub fn validate_stencil(stencil: &Stencil, tolerance: f64) -> ValidityReport {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let projected = stencil.projected();
    let d = stencil.dimension();

    // M1: both the imaginary part and the conjugation defect.
    let mut r1: f64 = 0.0;
    for z in projected.values() {
        r1 = r1.max(z.im.abs()).max((z.conj() - z).norm());
    }

    let r2 = (projected.sum() - C64::new(1.0, 0.0)).norm();

    let corr = cross_correlate(projected, projected).expect("same grid");
    let mut r3: f64 = 0.0;
    for a1 in 0..d.get() {
        for a2 in 0..d.get() {
            let target = if a1 == 0 && a2 == 0 { 1.0 } else { 0.0 };
            let got = corr.get(2 * a1 as i64, 2 * a2 as i64);
            r3 = r3.max((got - C64::new(target, 0.0)).norm());
        }
    }

    ValidityReport::from_residuals(CriterionDomain::Spatial, tolerance, r1, r2, r3)
}

/// Fourier-domain validity check on B = project(sdft(raw)):
/// conjugate symmetry B(-m) = B(m)*, origin value B(0) = 1/2d, and constant
/// modulus |B(m)| = 1/2d. Equivalent to the spatial criteria.
pub fn validate_stencil_fourier(stencil: &Stencil, tolerance: f64) -> ValidityReport {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let transformed = project(&sdft(stencil.raw()));
    let n = stencil.dimension().doubled();
    let target = 1.0 / n as f64;

    let mut r1: f64 = 0.0;
    let mut r3: f64 = 0.0;
    for m1 in 0..n {
        for m2 in 0..n {
            let here = transformed.get_raw(m1, m2);
            let there = transformed.get(-(m1 as i64), -(m2 as i64));
            r1 = r1.max((here.conj() - there).norm());
            r3 = r3.max((here.norm() - target).abs());
        }
    }
    let r2 = (transformed.get_raw(0, 0) - C64::new(target, 0.0)).norm();

    ValidityReport::from_residuals(CriterionDomain::Fourier, tolerance, r1, r2, r3)
}

/// True iff the two stencils generate the same DWF, i.e. their projections
/// agree entrywise within `tolerance`.
pub fn stencils_equivalent(a: &Stencil, b: &Stencil, tolerance: f64) -> Result<bool> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension().get(),
            right: b.dimension().get(),
        });
    }
    Ok(a.projected().max_abs_diff(b.projected()) <= tolerance)
}

// Sampler internals: the Fourier-domain grid is constrained by three
// symmetries. Coset shifts m ↦ m − d·b carry the sign
// (−1)^{m1·b2 − m2·b1 − b1·b2·d} (membership in the projector image),
// negation m ↦ −m carries conjugation, and the origin is pinned to +1/2d.
// Orbits under the generated group are filled from one representative each.

#[derive(Copy, Clone, PartialEq, Eq)]
struct Relation {
    negative: bool,   // value sign relative to the representative
    conjugated: bool, // whether the representative value is conjugated
}

/// Deterministically sample a valid stencil: phases on a fundamental
/// transversal of Z_{2d}² are drawn from the seeded generator, extended to the
/// full grid by the symmetry rules above, and inverse-transformed. The result
/// passes both validity checks at 1e-10 and is its own projection.
pub fn sample_valid_stencil(d: Dimension, seed: u64) -> Result<Stencil> {
    let n = d.doubled();
    let n_i = n as i64;
    let dd = d.get() as i64;
    let radius = 1.0 / n as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fourier: Vec<Option<C64>> = vec![None; n * n];

    let index = |p: (i64, i64)| -> usize {
        (p.0.rem_euclid(n_i) * n_i + p.1.rem_euclid(n_i)) as usize
    };

    for rep1 in 0..n_i {
        for rep2 in 0..n_i {
            if fourier[index((rep1, rep2))].is_some() {
                continue;
            }

            // Close the orbit of (rep1, rep2), tracking each point's relation
            // to the representative value and collecting self-consistency
            // constraints where paths meet.
            let mut seen: HashMap<(i64, i64), Relation> = HashMap::new();
            let mut queue: VecDeque<(i64, i64)> = VecDeque::new();
            let start = (rep1, rep2);
            seen.insert(
                start,
                Relation {
                    negative: false,
                    conjugated: false,
                },
            );
            queue.push_back(start);
            let mut forces_real = false;
            let mut forces_imag = false;

            while let Some(point) = queue.pop_front() {
                let relation = seen[&point];
                let mut images: Vec<((i64, i64), Relation)> = Vec::with_capacity(4);
                for (b1, b2) in [(0i64, 1i64), (1, 0), (1, 1)] {
                    let target = (
                        (point.0 - dd * b1).rem_euclid(n_i),
                        (point.1 - dd * b2).rem_euclid(n_i),
                    );
                    let flip = parity_sign(point.0 * b2 - point.1 * b1 - b1 * b2 * dd) < 0.0;
                    images.push((
                        target,
                        Relation {
                            negative: relation.negative ^ flip,
                            conjugated: relation.conjugated,
                        },
                    ));
                }
                images.push((
                    ((-point.0).rem_euclid(n_i), (-point.1).rem_euclid(n_i)),
                    Relation {
                        negative: relation.negative,
                        conjugated: !relation.conjugated,
                    },
                ));

                for (target, new_relation) in images {
                    match seen.get(&target) {
                        None => {
                            seen.insert(target, new_relation);
                            queue.push_back(target);
                        }
                        Some(existing) => {
                            if existing.conjugated == new_relation.conjugated {
                                if existing.negative != new_relation.negative {
                                    return Err(Error::SamplerConflict(target.0, target.1));
                                }
                            } else if existing.negative == new_relation.negative {
                                // conj(v) = +v
                                forces_real = true;
                            } else {
                                // conj(v) = -v
                                forces_imag = true;
                            }
                        }
                    }
                }
            }

            let value = if rep1 == 0 && rep2 == 0 {
                if forces_imag {
                    return Err(Error::SamplerConflict(0, 0));
                }
                C64::new(radius, 0.0)
            } else {
                match (forces_real, forces_imag) {
                    (true, true) => return Err(Error::SamplerConflict(rep1, rep2)),
                    (true, false) => {
                        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                        C64::new(sign * radius, 0.0)
                    }
                    (false, true) => {
                        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
                        C64::new(0.0, sign * radius)
                    }
                    (false, false) => {
                        let angle = rng.random::<f64>() * TAU;
                        C64::from_polar(radius, angle)
                    }
                }
            };

            for (point, relation) in &seen {
                let mut v = if relation.conjugated { value.conj() } else { value };
                if relation.negative {
                    v = -v;
                }
                fourier[index(*point)] = Some(v);
            }
        }
    }

    let grid = DoubledFunction::from_values(
        d,
        fourier
            .into_iter()
            .map(|v| v.expect("every orbit was filled"))
            .collect(),
    );

    // Consistency of the finished Fourier grid: the symmetries must hold
    // exactly (up to rounding of the phase draws themselves).
    for m1 in 0..n_i {
        for m2 in 0..n_i {
            let here = grid.get(m1, m2);
            if ((here.norm() - radius).abs()) > 1e-12 {
                return Err(Error::SamplerConflict(m1, m2));
            }
            if (here.conj() - grid.get(-m1, -m2)).norm() > 1e-12 {
                return Err(Error::SamplerConflict(m1, m2));
            }
            for (b1, b2) in [(0i64, 1i64), (1, 0), (1, 1)] {
                let linked = grid.get(m1 - dd * b1, m2 - dd * b2);
                let sign = parity_sign(m1 * b2 - m2 * b1 - b1 * b2 * dd);
                if (linked - here * sign).norm() > 1e-12 {
                    return Err(Error::SamplerConflict(m1, m2));
                }
            }
        }
    }

    let raw = sdft(&grid);
    Ok(Stencil::new(
        format!("sampled(d={},seed={})", d.get(), seed),
        raw,
    ))
}
