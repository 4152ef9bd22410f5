//! Fourier side: closed-form transforms of `S⁻¹` and `F_n`, the fractional
//! Laplacian multiplier, Plancherel pairing against Gaussians, the radial
//! (Hankel) transform and the scalar integrals behind the closed forms.
//!
//! Convention: `f̂(ξ) = ∫ f(x) e^{-i(x,ξ)} dx` with inverse factor `(2π)^{-(n+1)}`.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{CliffordElement, Paravector};
use crate::error::{Error, Result};
use crate::kernels::{cauchy_kernel, f_kernel, fsq_constants, gamma_fn, i_pow, Form, Side};
use crate::quad::{integrate_oscillatory, integrate_semi_infinite, QuadTolerance};
use crate::slice::slice_exp_minus_is_xi0;
use crate::special::{bessel_j, bessel_zero, BesselOrder};

/// A frequency `ξ = (ξ₀, ξ̲) ∈ ℝ^{n+1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrequencyPoint {
    pub xi0: f64,
    pub xi_vec: Vec<f64>,
}

impl FrequencyPoint {
    pub fn new(xi0: f64, xi_vec: Vec<f64>) -> Self {
        Self { xi0, xi_vec }
    }

    pub fn n(&self) -> usize {
        self.xi_vec.len()
    }

    pub fn vector_norm(&self) -> f64 {
        self.xi_vec.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `|ξ|² = ξ₀² + |ξ̲|²`.
    pub fn norm_sq(&self) -> f64 {
        self.xi0 * self.xi0 + self.xi_vec.iter().map(|c| c * c).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `ξ̄ = ξ₀ - ξ̲` as a paravector.
    pub fn conjugate(&self) -> Paravector {
        Paravector::new(self.xi0, self.xi_vec.iter().map(|c| -c).collect())
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::DimensionMismatch { left: self.n(), right: n });
        }
        if self.norm_sq() == 0.0 {
            return Err(Error::ZeroFrequency);
        }
        Ok(())
    }
}

fn ft_kernel(
    s: &Paravector,
    xi: &FrequencyPoint,
    n: usize,
    side: Side,
    constant: Complex64,
    decay: f64,
) -> Result<CliffordElement> {
    xi.check(n)?;
    if s.n() != n {
        return Err(Error::DimensionMismatch { left: s.n(), right: n });
    }
    let e = slice_exp_minus_is_xi0(s, xi.xi0)?;
    let bar = xi.conjugate().to_element()?;
    let core = match side {
        Side::Left => bar.product(&e)?,
        Side::Right => e.product(&bar)?,
    };
    Ok(core.scale(constant * xi.norm_sq().powf(-decay / 2.0)))
}

/// `c_n ξ̄ |ξ|^{-(n+1)} E` (left) or `c_n E ξ̄ |ξ|^{-(n+1)}` (right), with
/// `E = e^{-isξ₀}` extended slice-wise in `s`.
pub fn analytic_ft_sinv(s: &Paravector, xi: &FrequencyPoint, n: usize, side: Side) -> Result<CliffordElement> {
    let c = fsq_constants(n)?.c;
    ft_kernel(s, xi, n, side, c, n as f64 + 1.0)
}

/// `k_n ξ̄ |ξ|^{-2} E` with the same placement of `E` as [`analytic_ft_sinv`].
pub fn analytic_ft_fn(s: &Paravector, xi: &FrequencyPoint, n: usize, side: Side) -> Result<CliffordElement> {
    let k = fsq_constants(n)?.k;
    ft_kernel(s, xi, n, side, k, 2.0)
}

/// `(i|ξ|)^{n-1}`.
pub fn fractional_laplacian_symbol(xi: &FrequencyPoint, n: usize) -> Complex64 {
    i_pow(n as i64 - 1) * xi.norm().powi(n as i32 - 1)
}

/// `‖(i|ξ|)^{n-1} Ŝ⁻¹ - F̂_n‖ / ‖F̂_n‖`.
pub fn tcr3_symbol_identity(s: &Paravector, xi: &FrequencyPoint, n: usize, side: Side) -> Result<f64> {
    let lhs = analytic_ft_sinv(s, xi, n, side)?.scale(fractional_laplacian_symbol(xi, n));
    let rhs = analytic_ft_fn(s, xi, n, side)?;
    Ok(lhs.distance(&rhs) / rhs.norm())
}

/// Uniform grid with `points` nodes per axis over `[-half_width, half_width)`
/// in each of `dims` coordinates, node `N/2` sitting at the centre.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub half_width: f64,
    pub points: usize,
    pub dims: usize,
}

impl GridSpec {
    pub const MAX_NODES: usize = 1 << 24;

    pub fn new(half_width: f64, points: usize, dims: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidParameter(format!("half width must be positive, got {half_width}")));
        }
        if points < 4 || points % 2 == 1 {
            return Err(Error::InvalidParameter(format!("points per axis must be even and >= 4, got {points}")));
        }
        let total = (points as f64).powi(dims as i32);
        if dims == 0 || total > Self::MAX_NODES as f64 {
            return Err(Error::InvalidParameter(format!(
                "{points}^{dims} nodes exceeds the cap of {}",
                Self::MAX_NODES
            )));
        }
        Ok(Self { half_width, points, dims })
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.points as f64
    }

    pub fn node_count(&self) -> usize {
        self.points.pow(self.dims as u32)
    }

    fn scaled(&self, factor: f64) -> Self {
        Self {
            half_width: self.half_width * factor,
            ..*self
        }
    }
}

/// Gaussian `exp(-|x - c|² / (2w²))` on ℝ^{n+1}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gaussian {
    pub center: Vec<f64>,
    pub width: f64,
}

impl Gaussian {
    pub fn new(center: Vec<f64>, width: f64) -> Result<Self> {
        if !(width > 0.0) {
            return Err(Error::InvalidParameter(format!("width must be positive, got {width}")));
        }
        Ok(Self { center, width })
    }

    pub fn dims(&self) -> usize {
        self.center.len()
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        let d2: f64 = x.iter().zip(&self.center).map(|(a, c)| (a - c) * (a - c)).sum();
        (-d2 / (2.0 * self.width * self.width)).exp()
    }

    /// `(2πw²)^{d/2} e^{-w²|ξ|²/2} e^{-i(c,ξ)}`.
    pub fn transform(&self, xi: &[f64]) -> Complex64 {
        let d = self.dims() as f64;
        let w2 = self.width * self.width;
        let xi2: f64 = xi.iter().map(|c| c * c).sum();
        let phase: f64 = xi.iter().zip(&self.center).map(|(a, c)| a * c).sum();
        Complex64::from_polar((2.0 * PI * w2).powf(d / 2.0) * (-w2 * xi2 / 2.0).exp(), -phase)
    }
}

/// Which kernel is paired.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingKernel {
    Sinv,
    Fn,
}

impl PairingKernel {
    pub fn name(self) -> &'static str {
        match self {
            PairingKernel::Sinv => "Sinv",
            PairingKernel::Fn => "Fn",
        }
    }
}

/// Both sides of the pairing identity and their relative deviation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingResult {
    pub lhs: CliffordElement,
    pub rhs: CliffordElement,
    pub relerr: f64,
}

/// Integrand `K(y) ψ(y)` near a node-centred singularity of
/// `K = A ȳ |y|^{-(m+1)}`, where `ψ(y) = ψ₀ e^{(b,y) - β|y|²/2}`.
struct SingularModel {
    amplitude: Complex64,
    order: f64,
    psi0: Complex64,
    b: Vec<Complex64>,
    beta: f64,
}

impl SingularModel {
    /// `ψ₀ G(y) (1 + (b,y) + (b,y)²/2 + (b,y)³/6)` with `G = e^{-β|y|²/2}`.
    fn local(&self, y: &[f64]) -> Complex64 {
        let by: Complex64 = self.b.iter().zip(y).map(|(b, c)| b * c).sum();
        let r2: f64 = y.iter().map(|c| c * c).sum();
        let poly = Complex64::new(1.0, 0.0) + by + by * by / 2.0 + by * by * by / 6.0;
        self.psi0 * poly * (-self.beta * r2 / 2.0).exp()
    }

    /// `∫ A ȳ |y|^{-(m+1)} ψ₀ G P dy` over ℝ^d, returned as the complex
    /// coefficients of `1, e₁, …, e_n`. Only the odd part of `P` survives.
    fn correction(&self) -> Vec<Complex64> {
        let d = self.b.len() as f64;
        let sphere = 2.0 * PI.powf(d / 2.0) / gamma_fn(d / 2.0);
        let radial = |p: f64| 0.5 * (2.0 / self.beta).powf((p + 1.0) / 2.0) * gamma_fn((p + 1.0) / 2.0);
        let m2 = sphere * radial(d - self.order);
        let m4 = sphere * radial(d + 2.0 - self.order);
        let bb: Complex64 = self.b.iter().map(|b| b * b).sum();
        let factor = self.amplitude * self.psi0 * (m2 / d + bb * m4 / (2.0 * d * (d + 2.0)));
        self.b
            .iter()
            .enumerate()
            .map(|(j, b)| if j == 0 { factor * b } else { -factor * b })
            .collect()
    }
}

fn check_dims(s_dims: usize, g: &Gaussian, grid: &GridSpec) -> Result<()> {
    if g.dims() != s_dims || grid.dims != s_dims {
        return Err(Error::DimensionMismatch {
            left: g.dims(),
            right: grid.dims,
        });
    }
    Ok(())
}

fn element_from_components(n: usize, comps: &[Complex64]) -> Result<CliffordElement> {
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 1 << n];
    coeffs[0] = comps[0];
    for j in 0..n {
        coeffs[1 << j] = comps[j + 1];
    }
    CliffordElement::from_coeffs(n, coeffs)
}

fn paravector_components(el: &CliffordElement) -> Vec<Complex64> {
    let n = el.n();
    std::iter::once(el.coeff(0)).chain((0..n).map(|j| el.coeff(1 << j))).collect()
}

/// Trapezoid sum of `K ψ` on a node-centred grid, minus the local model,
/// plus the model's exact integral.
fn corrected_lattice_sum(
    grid: &GridSpec,
    kernel: &(dyn Fn(&[f64]) -> Result<Vec<Complex64>> + Sync),
    psi: &(dyn Fn(&[f64]) -> Complex64 + Sync),
    model: &SingularModel,
    parallel: bool,
) -> Result<Vec<Complex64>> {
    let d = grid.dims;
    let n_axis = grid.points;
    let h = grid.spacing();
    let slab = |i0: usize| -> Result<Vec<Complex64>> {
        let mut acc = vec![Complex64::new(0.0, 0.0); d];
        let rest = n_axis.pow(d as u32 - 1);
        let mut y = vec![0.0; d];
        y[0] = h * (i0 as f64 - (n_axis / 2) as f64);
        for idx in 0..rest {
            let mut k = idx;
            for c in y.iter_mut().skip(1) {
                *c = h * ((k % n_axis) as f64 - (n_axis / 2) as f64);
                k /= n_axis;
            }
            if y.iter().all(|&c| c == 0.0) {
                continue;
            }
            let weight = psi(&y) - model.local(&y);
            if weight == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (a, kv) in acc.iter_mut().zip(kernel(&y)?) {
                *a += kv * weight;
            }
        }
        Ok(acc)
    };
    let partials: Vec<Vec<Complex64>> = if parallel {
        (0..n_axis).into_par_iter().map(slab).collect::<Result<_>>()?
    } else {
        (0..n_axis).map(slab).collect::<Result<_>>()?
    };
    let vol = h.powi(d as i32);
    let mut total = model.correction();
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t += p * vol;
        }
    }
    Ok(total)
}

/// Checks `∫ K(s,x) g(x) dx = (2π)^{-(n+1)} ∫ K̂(s,ξ) conj(ĝ(ξ)) dξ` for a
/// real `s` and a Gaussian `g` (which is real, so `conj(g) = g`).
///
/// The x-side grid is centred on the singularity `x = s`; the ξ-side grid is
/// the same lattice scaled by `1/w²` and centred at `ξ = 0`. Near each
/// singularity the integrand is replaced by a third-order model whose
/// integral is known in closed form.
pub fn plancherel_pair(
    kernel: PairingKernel,
    s: f64,
    n: usize,
    test: &Gaussian,
    grid: &GridSpec,
    parallel: bool,
) -> Result<PairingResult> {
    let d = n + 1;
    check_dims(d, test, grid)?;
    let consts = fsq_constants(n)?;
    let w = test.width;
    let h = grid.spacing();
    if w < 4.0 * h {
        return Err(Error::UnderResolved(format!("width {w} below 4 x spacing {h}")));
    }
    // offset of the Gaussian centre from the singularity
    let offset: Vec<f64> = test
        .center
        .iter()
        .enumerate()
        .map(|(j, c)| if j == 0 { c - s } else { *c })
        .collect();
    let lo = -grid.half_width;
    let hi = grid.half_width - h;
    let gap = offset
        .iter()
        .map(|c| (c - lo).min(hi - c))
        .fold(f64::INFINITY, f64::min);
    let tail = if gap <= 0.0 { 1.0 } else { (-gap * gap / (2.0 * w * w)).exp() };
    if tail >= 1e-10 {
        return Err(Error::UnderResolved(format!("Gaussian tail {tail:e} at the grid boundary")));
    }
    let xi_grid = grid.scaled(1.0 / (w * w));
    let xi_hi = xi_grid.half_width - xi_grid.spacing();
    let xi_tail = (-w * w * xi_hi * xi_hi / 2.0).exp();
    if xi_tail >= 1e-10 {
        return Err(Error::UnderResolved(format!("transform tail {xi_tail:e} at the grid boundary")));
    }

    let s_para = Paravector::real(n, s);
    let w2 = w * w;

    // x side: y = x - s, ψ(y) = g(s + y)
    let x_kernel = |y: &[f64]| -> Result<Vec<Complex64>> {
        let x = Paravector::new(s + y[0], y[1..].to_vec());
        let k = match kernel {
            PairingKernel::Sinv => cauchy_kernel(&s_para, &x, Form::II, Side::Left)?,
            PairingKernel::Fn => f_kernel(&s_para, &x, n, Side::Left)?,
        };
        Ok(paravector_components(&k))
    };
    let x_psi = |y: &[f64]| -> Complex64 {
        let x: Vec<f64> = y.iter().enumerate().map(|(j, c)| if j == 0 { c + s } else { *c }).collect();
        Complex64::new(test.value(&x), 0.0)
    };
    let (x_amp, x_order) = match kernel {
        PairingKernel::Sinv => (Complex64::new(-1.0, 0.0), 1.0),
        PairingKernel::Fn => (-consts.gamma, n as f64),
    };
    let off2: f64 = offset.iter().map(|c| c * c).sum();
    let x_model = SingularModel {
        amplitude: x_amp,
        order: x_order,
        psi0: Complex64::new((-off2 / (2.0 * w2)).exp(), 0.0),
        b: offset.iter().map(|c| Complex64::new(c / w2, 0.0)).collect(),
        beta: 1.0 / w2,
    };
    let lhs = corrected_lattice_sum(grid, &x_kernel, &x_psi, &x_model, parallel)?;

    // ξ side: the analytic transform carries e^{-isξ₀}; move it into ψ
    let norm = (2.0 * PI).powi(-(d as i32));
    let xi_kernel = |xi: &[f64]| -> Result<Vec<Complex64>> {
        let fp = FrequencyPoint::new(xi[0], xi[1..].to_vec());
        let k = match kernel {
            PairingKernel::Sinv => analytic_ft_sinv(&s_para, &fp, n, Side::Left)?,
            PairingKernel::Fn => analytic_ft_fn(&s_para, &fp, n, Side::Left)?,
        };
        let undo = Complex64::new(0.0, s * xi[0]).exp();
        Ok(paravector_components(&k).into_iter().map(|c| c * undo).collect())
    };
    let xi_psi = |xi: &[f64]| -> Complex64 {
        let shift = Complex64::new(0.0, -s * xi[0]).exp();
        test.transform(xi).conj() * shift * norm
    };
    let (xi_amp, xi_order) = match kernel {
        PairingKernel::Sinv => (consts.c, n as f64),
        PairingKernel::Fn => (consts.k, 1.0),
    };
    let xi_model = SingularModel {
        amplitude: xi_amp,
        order: xi_order,
        psi0: Complex64::new(norm * (2.0 * PI * w2).powf(d as f64 / 2.0), 0.0),
        b: offset.iter().map(|c| Complex64::new(0.0, *c)).collect(),
        beta: w2,
    };
    let rhs = corrected_lattice_sum(&xi_grid, &xi_kernel, &xi_psi, &xi_model, parallel)?;

    let lhs = element_from_components(n, &lhs)?;
    let rhs = element_from_components(n, &rhs)?;
    let relerr = lhs.distance(&rhs) / lhs.norm();
    Ok(PairingResult { lhs, rhs, relerr })
}

/// `(2π)^{n/2} ρ^{-(n-2)/2} ∫₀^∞ J_{(n-2)/2}(ρr) r^{n/2} f(r) dr`, the Fourier
/// transform of the radial function `f(|x̲|)` on ℝⁿ at `|ξ̲| = ρ`.
pub fn hankel_radial_ft(f: &(dyn Fn(f64) -> f64 + Sync), rho: f64, n: usize, tol: QuadTolerance) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("radial transform needs n >= 2, got {n}")));
    }
    if rho < 0.0 {
        return Err(Error::InvalidParameter(format!("|xi| must be nonnegative, got {rho}")));
    }
    let nu = (n as f64 - 2.0) / 2.0;
    let order = BesselOrder::new(nu)?;
    let half_n = n as f64 / 2.0;
    let pre = (2.0 * PI).powf(half_n);
    if rho == 0.0 {
        // ρ^{-ν} J_ν(ρr) → (r/2)^ν / Γ(ν+1)
        let g = |r: f64| (r / 2.0).powf(nu) / gamma_fn(nu + 1.0) * r.powf(half_n) * f(r);
        return Ok(pre * integrate_semi_infinite(&g, 0.0, tol)?.value);
    }
    let g = |r: f64| bessel_j(order, rho * r) * r.powf(half_n) * f(r);
    let mut breaks = std::iter::once(0.0).chain((1..).map(|k| bessel_zero(order, k) / rho));
    let integral = integrate_oscillatory(&g, &mut breaks, tol, 20_000)?;
    Ok(pre * rho.powf(-nu) * integral.value)
}

/// A numerical value next to its closed form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralCheck {
    pub numeric: Complex64,
    pub closed_form: Complex64,
    /// `|numeric - closed| / |closed|`, or the absolute difference when the
    /// closed form vanishes.
    pub relerr: f64,
}

impl IntegralCheck {
    fn new(numeric: Complex64, closed_form: Complex64) -> Self {
        let diff = (numeric - closed_form).norm();
        let scale = closed_form.norm();
        Self {
            numeric,
            closed_form,
            relerr: if scale > 0.0 { diff / scale } else { diff },
        }
    }

    fn real(numeric: f64, closed_form: f64) -> Self {
        Self::new(Complex64::new(numeric, 0.0), Complex64::new(closed_form, 0.0))
    }
}

/// The three Laplace-type Bessel integrals with known closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BesselLaplace {
    /// `∫₀^∞ e^{-at} t^ν J_ν(bt) dt = (2b)^ν Γ(ν+½) / (√π (a²+b²)^{ν+½})`, ν > -½.
    Gr6623_1,
    /// `∫₀^∞ e^{-at} t^{ν+1} J_ν(bt) dt = 2a(2b)^ν Γ(ν+3/2) / (√π (a²+b²)^{ν+3/2})`, ν > -1.
    Gr6623_2,
    /// `∫₀^∞ x^{ν+1} (x²+a²)^{-ν-3/2} J_ν(bx) dx = b^ν √π / (2^{ν+1} |a| e^{|a|b} Γ(ν+3/2))`, ν > -1.
    Gr6565_3,
}

impl BesselLaplace {
    pub const ALL: [BesselLaplace; 3] = [BesselLaplace::Gr6623_1, BesselLaplace::Gr6623_2, BesselLaplace::Gr6565_3];

    pub fn name(self) -> &'static str {
        match self {
            BesselLaplace::Gr6623_1 => "GR6.623(1)",
            BesselLaplace::Gr6623_2 => "GR6.623(2)",
            BesselLaplace::Gr6565_3 => "GR6.565(3)",
        }
    }

    /// Orders at or below this make the integral diverge.
    pub fn min_order(self) -> f64 {
        match self {
            BesselLaplace::Gr6623_1 => -0.5,
            _ => -1.0,
        }
    }

    pub fn closed_form(self, a: f64, b: f64, nu: f64) -> f64 {
        let sqrt_pi = PI.sqrt();
        match self {
            BesselLaplace::Gr6623_1 => {
                (2.0 * b).powf(nu) * gamma_fn(nu + 0.5) / (sqrt_pi * (a * a + b * b).powf(nu + 0.5))
            }
            BesselLaplace::Gr6623_2 => {
                2.0 * a * (2.0 * b).powf(nu) * gamma_fn(nu + 1.5) / (sqrt_pi * (a * a + b * b).powf(nu + 1.5))
            }
            BesselLaplace::Gr6565_3 => {
                b.powf(nu) * sqrt_pi / (2f64.powf(nu + 1.0) * a.abs() * (a.abs() * b).exp() * gamma_fn(nu + 1.5))
            }
        }
    }
}

/// Quadrature of one of the [`BesselLaplace`] integrals against its closed form.
pub fn bessel_laplace_integral(which: BesselLaplace, a: f64, b: f64, nu: f64) -> Result<IntegralCheck> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::InvalidParameter(format!("need a, b > 0, got a={a}, b={b}")));
    }
    if nu <= which.min_order() {
        return Err(Error::InvalidParameter(format!(
            "{} needs nu > {}, got {nu}",
            which.name(),
            which.min_order()
        )));
    }
    let order = BesselOrder::new(nu)?;
    let g = move |t: f64| {
        let j = bessel_j(order, b * t);
        match which {
            BesselLaplace::Gr6623_1 => (-a * t).exp() * t.powf(nu) * j,
            BesselLaplace::Gr6623_2 => (-a * t).exp() * t.powf(nu + 1.0) * j,
            BesselLaplace::Gr6565_3 => t.powf(nu + 1.0) * (t * t + a * a).powf(-nu - 1.5) * j,
        }
    };
    let mut breaks = std::iter::once(0.0).chain((1..).map(|k| bessel_zero(order, k) / b));
    let num = integrate_oscillatory(&g, &mut breaks, QuadTolerance::relative(1e-12), 20_000)?;
    Ok(IntegralCheck::real(num.value, which.closed_form(a, b, nu)))
}

/// The three one-dimensional transforms, each as a numerical value next to
/// its closed form:
///
/// 1. `F[1/(y²+a²)](ξ₀) = (π/a) e^{-a|ξ₀|}`;
/// 2. `F[y/(y²+a²)](ξ₀) = -iπ sign(ξ₀) e^{-a|ξ₀|}`;
/// 3. `F[e^{-a|y|}/|y|](ξ₀) = -log(ξ₀²+a²)`, which diverges as an integral;
///    computed with the reference `e^{-|y|}/|y|` subtracted, i.e.
///    `2∫₀^∞ (cos(yξ₀) e^{-ay} - e^{-y}) / y dy`.
pub fn poisson_ft_1d(a: f64, xi0: f64) -> Result<[IntegralCheck; 3]> {
    if !(a > 0.0) {
        return Err(Error::InvalidParameter(format!("need a > 0, got {a}")));
    }
    let tol = QuadTolerance::relative(1e-12);
    let w = xi0.abs();
    let decay = (-a * w).exp();

    let lorentz = |y: f64| (y * xi0).cos() / (y * y + a * a);
    let first = if w == 0.0 {
        integrate_semi_infinite(&lorentz, 0.0, tol)?.value
    } else {
        let mut breaks = std::iter::once(0.0).chain((0..).map(|k| (k as f64 + 0.5) * PI / w));
        integrate_oscillatory(&lorentz, &mut breaks, tol, 50_000)?.value
    };

    let odd = |y: f64| y * (y * xi0).sin() / (y * y + a * a);
    let second = if w == 0.0 {
        0.0
    } else {
        let mut breaks = (0..).map(|k| k as f64 * PI / w);
        integrate_oscillatory(&odd, &mut breaks, tol, 50_000)?.value
    };

    // (cos(yξ)e^{-ay} - e^{-y}) / y without cancellation near y = 0
    let log_kernel = |y: f64| {
        let half = (y * xi0 / 2.0).sin();
        let cos_m1 = -2.0 * half * half;
        let exp_diff = if a <= 1.0 {
            -(-a * y).exp() * (-(1.0 - a) * y).exp_m1()
        } else {
            (-y).exp() * (-(a - 1.0) * y).exp_m1()
        };
        ((-a * y).exp() * cos_m1 + exp_diff) / y
    };
    let third = integrate_semi_infinite(&log_kernel, 0.0, tol)?.value;

    Ok([
        IntegralCheck::real(2.0 * first, PI / a * decay),
        IntegralCheck::new(
            Complex64::new(0.0, -2.0 * second),
            Complex64::new(0.0, -PI * xi0.signum() * decay * if w == 0.0 { 0.0 } else { 1.0 }),
        ),
        IntegralCheck::real(2.0 * third, -(xi0 * xi0 + a * a).ln()),
    ])
}

/// One line of a pairing or symbol sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub kernel: String,
    pub s: f64,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relerr: f64,
}

impl SweepRow {
    pub fn from_pairing(kernel: PairingKernel, n: usize, s: f64, test: &Gaussian, res: &PairingResult) -> Self {
        let centre: Vec<String> = test.center.iter().map(|c| format!("{c}")).collect();
        Self {
            n,
            kernel: kernel.name().into(),
            s,
            params: format!("w={};c=({})", test.width, centre.join(" ")),
            lhs: res.lhs.norm(),
            rhs: res.rhs.norm(),
            relerr: res.relerr,
        }
    }
}

/// Writes sweep rows as CSV `(n, kernel, s, params, lhs, rhs, relerr)`.
pub fn write_sweep_csv<W: Write>(out: W, rows: &[SweepRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
