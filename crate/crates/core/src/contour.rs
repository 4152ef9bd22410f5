//! Trapezoid quadrature of the slice Cauchy formulas and of the F_n integral
//! representation on circles `s(θ) = c₀ + r cos θ + I r sin θ`.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{blade_label, canonical_blades, CliffordElement, ImaginaryUnit, Paravector};
use crate::diffops::{fd_dirac_left, fd_dirac_right, FdScheme};
use crate::error::{Error, Result};
use crate::report::csv_number;
use crate::kernels::{cauchy_kernel, f_kernel_branch, Branch, Form, Side};
use crate::slice::SliceStem;

pub const DEFAULT_NODES: usize = 256;
pub const MIN_NODES: usize = 16;

/// Circle of radius `radius` about the real point `center` in the plane ℂ_I.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Contour {
    center: f64,
    radius: f64,
    unit: ImaginaryUnit,
    nodes: usize,
}

impl Contour {
    pub fn new(center: f64, radius: f64, unit: ImaginaryUnit, nodes: usize) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!("radius must be positive, got {radius}")));
        }
        if nodes < MIN_NODES {
            return Err(Error::InvalidParameter(format!("need at least {MIN_NODES} nodes, got {nodes}")));
        }
        Ok(Self {
            center,
            radius,
            unit,
            nodes,
        })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn unit(&self) -> &ImaginaryUnit {
        &self.unit
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn n(&self) -> usize {
        self.unit.n()
    }

    /// `(u, v)` with `s_k = u + I v` at `θ_k = 2πk/N`.
    pub fn node(&self, k: usize) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / self.nodes as f64;
        let (sin, cos) = theta.sin_cos();
        (self.center + self.radius * cos, self.radius * sin)
    }

    fn check_inside(&self, x: &Paravector) -> Result<()> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n(),
            });
        }
        let distance = x.add_real(-self.center).norm();
        if distance >= self.radius {
            return Err(Error::OutsideContour {
                distance,
                radius: self.radius,
            });
        }
        Ok(())
    }
}

/// What multiplies `ds_I` in the integrand.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum IntegralKind {
    /// Slice Cauchy formula with `S⁻¹`.
    Cauchy,
    /// Integral form with the F_n-kernel on the given branch.
    Fsq(Branch),
}

/// Default branch for the F_n integral: [`Branch::Exterior`], which is
/// continuous along every circle enclosing `[x] ∩ ℂ_I`.
pub const FSQ_BRANCH: Branch = Branch::Exterior;

/// `(1/2π) ∮ K(s,x) ds_I f(s)` (left) or `(1/2π) ∮ f(s) ds_I K(s,x)` (right)
/// with `ds_I = (s - c₀) dθ`, by the `N`-point trapezoid rule.
pub fn contour_integral(
    stem: &SliceStem,
    x: &Paravector,
    ct: &Contour,
    kind: IntegralKind,
    side: Side,
    parallel: bool,
) -> Result<CliffordElement> {
    ct.check_inside(x)?;
    let n = ct.n();
    if stem.n() != n {
        return Err(Error::DimensionMismatch { left: stem.n(), right: n });
    }
    let term = |k: usize| -> Result<CliffordElement> {
        let (u, v) = ct.node(k);
        let s = Paravector::in_slice(u, v, ct.unit());
        let kernel = match kind {
            IntegralKind::Cauchy => cauchy_kernel(&s, x, Form::II, side)?,
            IntegralKind::Fsq(branch) => f_kernel_branch(&s, x, n, side, branch)?,
        };
        let ds = Paravector::in_slice(u - ct.center, v, ct.unit()).to_element()?;
        let f = stem.evaluate(u, v, ct.unit(), side)?;
        match side {
            Side::Left => kernel.product(&ds)?.product(&f),
            Side::Right => f.product(&ds)?.product(&kernel),
        }
    };
    let terms: Vec<CliffordElement> = if parallel {
        (0..ct.nodes).into_par_iter().map(term).collect::<Result<_>>()?
    } else {
        (0..ct.nodes).map(term).collect::<Result<_>>()?
    };
    // fixed-order reduction keeps parallel and serial runs bit-identical
    let mut acc = CliffordElement::zero(n)?;
    for t in &terms {
        acc += t;
    }
    Ok(acc.scale_real(1.0 / ct.nodes as f64))
}

/// Left slice Cauchy formula.
pub fn cauchy_integral(stem: &SliceStem, x: &Paravector, ct: &Contour) -> Result<CliffordElement> {
    contour_integral(stem, x, ct, IntegralKind::Cauchy, Side::Left, false)
}

/// Right slice Cauchy formula.
pub fn cauchy_integral_right(stem: &SliceStem, x: &Paravector, ct: &Contour) -> Result<CliffordElement> {
    contour_integral(stem, x, ct, IntegralKind::Cauchy, Side::Right, false)
}

/// The F_n integral `(1/2π) ∮ F_n(s,x) ds_I f(s)`; equals `Δ^{(n-1)/2} f(x)`
/// for odd `n`.
pub fn fsq_integral(stem: &SliceStem, x: &Paravector, ct: &Contour, n: usize, side: Side) -> Result<CliffordElement> {
    if n != ct.n() {
        return Err(Error::DimensionMismatch { left: n, right: ct.n() });
    }
    contour_integral(stem, x, ct, IntegralKind::Fsq(FSQ_BRANCH), side, false)
}

/// Values of one integral over a family of contours.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Independence {
    pub values: Vec<(f64, Vec<f64>, CliffordElement)>,
    /// Largest deviation from the first value, relative to `max(‖first‖, 1)`.
    pub max_deviation: f64,
}

impl Independence {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_deviation < tol
    }
}

/// Evaluates the integral for every `(radius, unit)` combination about
/// `center` and reports the spread.
#[allow(clippy::too_many_arguments)]
pub fn independence_sweep(
    stem: &SliceStem,
    x: &Paravector,
    center: f64,
    radii: &[f64],
    units: &[ImaginaryUnit],
    nodes: usize,
    kind: IntegralKind,
    side: Side,
) -> Result<Independence> {
    let mut values = Vec::with_capacity(radii.len() * units.len());
    for &r in radii {
        for unit in units {
            let ct = Contour::new(center, r, unit.clone(), nodes)?;
            let val = contour_integral(stem, x, &ct, kind, side, false)?;
            values.push((r, unit.components().to_vec(), val));
        }
    }
    let reference = values
        .first()
        .map(|v| v.2.clone())
        .ok_or_else(|| Error::InvalidParameter("empty sweep".into()))?;
    let scale = reference.norm().max(1.0);
    let max_deviation = values
        .iter()
        .map(|(_, _, v)| v.distance(&reference) / scale)
        .fold(0.0, f64::max);
    Ok(Independence { values, max_deviation })
}

/// One evaluation of the F_n integral on a sample grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FsqSample {
    pub side: Side,
    pub x: Vec<f64>,
    pub value: std::result::Result<CliffordElement, String>,
    /// `‖D f̆(x)‖ / max(‖f̆(x)‖, 1)` with the Dirac operator of the matching side.
    pub dirac_residual: f64,
}

/// Evaluates the F_n integral of `stem` at every point, with the
/// finite-difference Dirac residual of the output. Errors are kept per point.
pub fn fsq_map(stem: &SliceStem, points: &[Paravector], ct: &Contour, side: Side, parallel: bool) -> Vec<FsqSample> {
    let kind = IntegralKind::Fsq(FSQ_BRANCH);
    let field = |y: &Paravector| contour_integral(stem, y, ct, kind, side, parallel);
    points
        .iter()
        .map(|x| {
            let value = field(x);
            let residual = value.as_ref().ok().and_then(|v| {
                let d = match side {
                    Side::Left => fd_dirac_left(&field, x, FdScheme::default()),
                    Side::Right => fd_dirac_right(&field, x, FdScheme::default()),
                };
                d.ok().map(|d| d.norm() / v.norm().max(1.0))
            });
            FsqSample {
                side,
                x: x.coords(),
                value: value.map_err(|e| e.to_string()),
                dirac_residual: residual.unwrap_or(f64::NAN),
            }
        })
        .collect()
}

/// CSV with columns `n, side, stem, x₀..x_n, blade, re, im, dirac_residual`,
/// one row per nonzero blade; failed points give one `ERR:` row.
pub fn write_fsq_csv<W: Write>(out: W, stem: &SliceStem, samples: &[FsqSample]) -> Result<()> {
    let n = stem.n();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n".to_string(), "side".into(), "stem".into()];
    header.extend((0..=n).map(|j| format!("x{j}")));
    header.extend(["blade".into(), "re".into(), "im".into(), "dirac_residual".into()]);
    w.write_record(&header)?;
    for sample in samples {
        let mut base = vec![n.to_string(), sample.side.to_string(), stem.name().to_string()];
        base.extend(sample.x.iter().copied().map(csv_number));
        let residual = csv_number(sample.dirac_residual);
        match &sample.value {
            Ok(el) => {
                for mask in canonical_blades(n) {
                    let c = el.coeff(mask);
                    if c.re != 0.0 || c.im != 0.0 {
                        let mut rec = base.clone();
                        rec.extend([blade_label(mask), csv_number(c.re), csv_number(c.im), residual.clone()]);
                        w.write_record(&rec)?;
                    }
                }
            }
            Err(msg) => {
                let mut rec = base.clone();
                rec.extend([format!("ERR:{msg}"), "NaN".into(), "NaN".into(), "NaN".into()]);
                w.write_record(&rec)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
