//! Slice Cauchy kernels `S⁻¹_L`, `S⁻¹_R` (forms I and II), the family
//! `k_λ = (s - x̄)(s² - 2x₀s + |x|²)^{-λ}`, the F_n-kernels and their constants.

use std::f64::consts::PI;
use std::fmt;
use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{blade_label, canonical_blades, CliffordElement, Paravector};
use crate::error::{Error, Result};
use crate::report::csv_number;
use crate::slice::{fractional_power, paravector_part, slice_power};

/// Distance to `[x]` below which a point counts as singular.
pub const SINGULAR_TOLERANCE: f64 = 1e-13;

/// Distance to the exterior-branch chord below which evaluation aborts.
pub const CHORD_TOLERANCE: f64 = 1e-10;

/// Which side the kernel acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn tag(self) -> &'static str {
        match self {
            Side::Left => "L",
            Side::Right => "R",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Form I inverts a paravector in `x`, form II one in `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    I,
    II,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::I => "I",
            Form::II => "II",
        })
    }
}

/// Branch of `Q^{-(n+1)/2}` used by the F_n-kernel.
///
/// `Principal` applies the principal power to `Q = s² - 2x₀s + |x|²`, with a
/// cut where `Q ≤ 0`. `Exterior` writes `Q = (s - x₀)²(1 + |x̲|²(s - x₀)^{-2})`
/// and takes the principal power of the second factor only; its cut is the
/// chord `x₀ + I t`, `|t| ≤ |x̲|`, so circles around `[x] ∩ ℂ_I` avoid it.
/// Both agree for odd `n`, and for even `n` when `Re s > x₀`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    #[default]
    Principal,
    Exterior,
}

/// A pair `(s, x)` of paravectors of the same dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelPoint {
    pub s: Paravector,
    pub x: Paravector,
}

impl KernelPoint {
    pub fn new(s: Paravector, x: Paravector) -> Result<Self> {
        check_dims(&s, &x)?;
        Ok(Self { s, x })
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn distance_to_sphere(&self) -> f64 {
        distance_to_sphere(&self.s, &self.x)
    }
}

fn check_dims(s: &Paravector, x: &Paravector) -> Result<()> {
    if s.n() != x.n() {
        return Err(Error::DimensionMismatch {
            left: s.n(),
            right: x.n(),
        });
    }
    CliffordElement::zero(s.n()).map(|_| ())
}

/// Euclidean distance from `s` to the sphere `[x]`.
pub fn distance_to_sphere(s: &Paravector, x: &Paravector) -> f64 {
    (s.x0 - x.x0).hypot(s.vector_norm() - x.vector_norm())
}

fn check_singular(s: &Paravector, x: &Paravector) -> Result<()> {
    check_dims(s, x)?;
    let d = distance_to_sphere(s, x);
    if d <= SINGULAR_TOLERANCE * s.norm().max(x.norm()).max(1.0) {
        return Err(Error::SingularPoint { distance: d });
    }
    Ok(())
}

/// `s² - 2x₀s + |x|²`, a paravector in the plane of `s`.
pub fn q_s(s: &Paravector, x: &Paravector) -> Paravector {
    let x0 = x.x0;
    Paravector::new(
        s.x0 * s.x0 - s.vector_norm_sq() - 2.0 * x0 * s.x0 + x.norm_sq(),
        s.v.iter().map(|c| 2.0 * (s.x0 - x0) * c).collect(),
    )
}

/// `x² - 2s₀x + |s|²`, a paravector in the plane of `x`.
pub fn q_x(s: &Paravector, x: &Paravector) -> Paravector {
    q_s(x, s)
}

fn ordered(side: Side, outer: &Paravector, factor: &Paravector) -> Result<CliffordElement> {
    match side {
        Side::Left => outer.mul_paravector(factor),
        Side::Right => factor.mul_paravector(outer),
    }
}

/// Left kernel `S⁻¹_L(s, x)`.
pub fn cauchy_kernel_left(s: &Paravector, x: &Paravector, form: Form) -> Result<CliffordElement> {
    cauchy_kernel(s, x, form, Side::Left)
}

/// Right kernel `S⁻¹_R(s, x)`.
pub fn cauchy_kernel_right(s: &Paravector, x: &Paravector, form: Form) -> Result<CliffordElement> {
    cauchy_kernel(s, x, form, Side::Right)
}

/// Left form I: `-(x² - 2Re(s)x + |s|²)⁻¹(x - s̄)`; left form II:
/// `(s - x̄)(s² - 2Re(x)s + |x|²)⁻¹`. The right kernels swap the factors.
pub fn cauchy_kernel(s: &Paravector, x: &Paravector, form: Form, side: Side) -> Result<CliffordElement> {
    check_singular(s, x)?;
    match form {
        Form::I => {
            let inv = q_x(s, x).inverse()?;
            let lin = x - &s.conjugate();
            // the inverted factor sits on the opposite side from form II
            let flipped = match side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            };
            Ok(-&ordered(flipped, &lin, &inv)?)
        }
        Form::II => {
            let inv = q_s(s, x).inverse()?;
            ordered(side, &(s - &x.conjugate()), &inv)
        }
    }
}

/// `Q^{-λ}` with `Q = s² - 2x₀s + |x|²`: integer λ by repeated inversion,
/// otherwise the principal fractional power.
pub fn q_power(s: &Paravector, x: &Paravector, lambda: f64) -> Result<Paravector> {
    check_singular(s, x)?;
    let q = q_s(s, x);
    if lambda.fract() == 0.0 && lambda.abs() < i32::MAX as f64 {
        slice_power(&q, -(lambda as i32))
    } else {
        fractional_power(&q, -lambda)
    }
}

/// `Q^{-λ}` on the exterior branch (see [`Branch::Exterior`]).
pub fn q_power_exterior(s: &Paravector, x: &Paravector, lambda: f64) -> Result<Paravector> {
    check_singular(s, x)?;
    let r = x.vector_norm();
    let t = s.add_real(-x.x0);
    let chord = if s.vector_norm() <= r {
        t.x0.abs()
    } else {
        distance_to_sphere(s, x)
    };
    if chord < CHORD_TOLERANCE {
        return Err(Error::BranchCut {
            re: t.x0,
            im: s.vector_norm(),
        });
    }
    // exponent 2λ of (s - x₀) is an integer when λ is a half-integer
    let twice = 2.0 * lambda;
    let lead = if twice.fract() == 0.0 {
        slice_power(&t, -(twice as i32))?
    } else {
        fractional_power(&t, -twice)?
    };
    let t_inv_sq = slice_power(&t, -2)?;
    let w = t_inv_sq.scale(r * r).add_real(1.0);
    let tail = fractional_power(&w, -lambda)?;
    Ok(paravector_part(&lead.mul_paravector(&tail)?))
}

/// `k_λ(s, x) = (s - x̄) Q^{-λ}` (left) or `Q^{-λ}(s - x̄)` (right).
pub fn k_lambda(s: &Paravector, x: &Paravector, lambda: f64, side: Side) -> Result<CliffordElement> {
    let p = q_power(s, x, lambda)?;
    ordered(side, &(s - &x.conjugate()), &p)
}

fn k_lambda_branch(s: &Paravector, x: &Paravector, lambda: f64, side: Side, branch: Branch) -> Result<CliffordElement> {
    let p = match branch {
        Branch::Principal => q_power(s, x, lambda)?,
        Branch::Exterior => q_power_exterior(s, x, lambda)?,
    };
    ordered(side, &(s - &x.conjugate()), &p)
}

/// `F_n(s, x) = γ_n k_{(n+1)/2}(s, x)` on the principal branch.
pub fn f_kernel(s: &Paravector, x: &Paravector, n: usize, side: Side) -> Result<CliffordElement> {
    f_kernel_branch(s, x, n, side, Branch::Principal)
}

/// F_n-kernel on the chosen branch of the fractional power.
pub fn f_kernel_branch(
    s: &Paravector,
    x: &Paravector,
    n: usize,
    side: Side,
    branch: Branch,
) -> Result<CliffordElement> {
    if s.n() != n {
        return Err(Error::DimensionMismatch { left: s.n(), right: n });
    }
    let gamma = fsq_constants(n)?.gamma;
    Ok(k_lambda_branch(s, x, (n as f64 + 1.0) / 2.0, side, branch)?.scale(gamma))
}

/// `i^k` for an integer exponent, exact.
pub fn i_pow(k: i64) -> Complex64 {
    match k.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// `Γ(x)` for positive arguments.
pub fn gamma_fn(x: f64) -> f64 {
    libm::tgamma(x)
}

/// The constants `γ_n`, `c_n`, `k_n`, with `(-1)^{(n-1)/2}` read as `i^{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FsqConstants {
    pub n: usize,
    pub gamma: Complex64,
    pub c: Complex64,
    pub k: Complex64,
}

pub fn fsq_constants(n: usize) -> Result<FsqConstants> {
    if n == 0 {
        return Err(Error::InvalidDimension(n));
    }
    let half = (n as f64 + 1.0) / 2.0;
    let g = gamma_fn(half);
    let phase = i_pow(n as i64 - 1);
    let gamma = phase * (2f64.powi(n as i32 - 1) * g * g);
    let c = Complex64::new(0.0, 2f64.powi(n as i32) * PI.powf(half) * g);
    Ok(FsqConstants {
        n,
        gamma,
        c,
        k: c * phase,
    })
}

/// Kernel families that can be dumped.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KernelKind {
    Sinv(Form),
    Fn,
    KLambda(f64),
}

impl KernelKind {
    pub fn evaluate(self, s: &Paravector, x: &Paravector, side: Side) -> Result<CliffordElement> {
        match self {
            KernelKind::Sinv(form) => cauchy_kernel(s, x, form, side),
            KernelKind::Fn => f_kernel(s, x, s.n(), side),
            KernelKind::KLambda(l) => k_lambda(s, x, l, side),
        }
    }

    fn form_tag(self) -> String {
        match self {
            KernelKind::Sinv(form) => form.to_string(),
            KernelKind::Fn => "Fn".into(),
            KernelKind::KLambda(l) => format!("k{l}"),
        }
    }
}

/// One row of a kernel dump: `(n, side, form, s₀..s_n, x₀..x_n, blade, re, im)`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelRow {
    pub n: usize,
    pub side: Side,
    pub form: String,
    pub s: Vec<f64>,
    pub x: Vec<f64>,
    pub blade: String,
    pub re: f64,
    pub im: f64,
}

/// Rows for each nonzero blade of the kernel at every point. Failed points
/// yield a single row with `blade = "ERR:<message>"` and NaN values.
pub fn kernel_rows(kind: KernelKind, side: Side, points: &[KernelPoint]) -> Vec<KernelRow> {
    let mut rows = Vec::new();
    for p in points {
        let base = |blade: String, re: f64, im: f64| KernelRow {
            n: p.n(),
            side,
            form: kind.form_tag(),
            s: p.s.coords(),
            x: p.x.coords(),
            blade,
            re,
            im,
        };
        match kind.evaluate(&p.s, &p.x, side) {
            Ok(el) => {
                for mask in canonical_blades(p.n()) {
                    let c = el.coeff(mask);
                    if c.re != 0.0 || c.im != 0.0 {
                        rows.push(base(blade_label(mask), c.re, c.im));
                    }
                }
            }
            Err(e) => rows.push(base(format!("ERR:{e}"), f64::NAN, f64::NAN)),
        }
    }
    rows
}

/// Writes kernel rows as CSV with a header naming every coordinate column.
pub fn write_kernel_csv<W: Write>(out: W, n: usize, rows: &[KernelRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n".to_string(), "side".into(), "form".into()];
    header.extend((0..=n).map(|j| format!("s{j}")));
    header.extend((0..=n).map(|j| format!("x{j}")));
    header.extend(["blade".into(), "re".into(), "im".into()]);
    w.write_record(&header)?;
    for r in rows {
        let mut rec = vec![r.n.to_string(), r.side.to_string(), r.form.clone()];
        rec.extend(r.s.iter().copied().map(csv_number));
        rec.extend(r.x.iter().copied().map(csv_number));
        rec.extend([r.blade.clone(), csv_number(r.re), csv_number(r.im)]);
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}
