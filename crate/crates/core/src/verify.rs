//! Verification suites: each one samples reproducible points, compares an
//! implementation against an independent oracle and records the residuals in
//! a [`VerificationReport`].

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::clifford::{sphere_sample, CliffordElement, ImaginaryUnit, Paravector};
use crate::contour::{contour_integral, independence_sweep, Contour, IntegralKind, FSQ_BRANCH};
use crate::diffops::{
    dirac_residual_closed_form, fd_dirac_left, fd_dirac_right, fd_laplacian, laplacian_coefficient,
    laplacian_sinv_closed_form, FdScheme,
};
use crate::error::{Error, Result};
use crate::fourier::{
    bessel_laplace_integral, hankel_radial_ft, plancherel_pair, poisson_ft_1d, tcr3_symbol_identity, BesselLaplace,
    FrequencyPoint, Gaussian, GridSpec, PairingKernel,
};
use crate::kernels::{cauchy_kernel, f_kernel, fsq_constants, i_pow, k_lambda, Form, Side};
use crate::quad::QuadTolerance;
use crate::report::VerificationReport;
use crate::sampling::{random_admissible_pair, random_in_shell, random_paravector, DEFAULT_TUBE};
use crate::slice::{slice_extend_sided, SliceStem};

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Forms,
    Dirac,
    Laplacian,
    Constants,
    Symbols,
    Plancherel,
    Hankel,
    Scalars,
    Cauchy,
    Fsq,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Algebra,
        Suite::Forms,
        Suite::Dirac,
        Suite::Laplacian,
        Suite::Constants,
        Suite::Symbols,
        Suite::Plancherel,
        Suite::Hankel,
        Suite::Scalars,
        Suite::Cauchy,
        Suite::Fsq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Forms => "forms",
            Suite::Dirac => "dirac",
            Suite::Laplacian => "laplacian",
            Suite::Constants => "constants",
            Suite::Symbols => "symbols",
            Suite::Plancherel => "plancherel",
            Suite::Hankel => "hankel",
            Suite::Scalars => "scalars",
            Suite::Cauchy => "cauchy",
            Suite::Fsq => "fsq",
        }
    }

    /// Dimensions checked when none are configured.
    pub fn default_dims(self) -> Vec<usize> {
        match self {
            Suite::Algebra | Suite::Constants | Suite::Symbols => (1..=8).collect(),
            Suite::Forms => vec![1, 2, 3, 4],
            Suite::Dirac | Suite::Hankel => vec![2, 3, 4],
            Suite::Laplacian => vec![3, 5],
            Suite::Plancherel => vec![1, 2],
            Suite::Scalars => vec![1],
            Suite::Cauchy => vec![1, 2, 3, 4],
            Suite::Fsq => vec![1, 2, 3, 4, 5],
        }
    }

    /// Sample count per dimension when none is configured.
    pub fn default_points(self) -> usize {
        match self {
            Suite::Algebra | Suite::Forms => 1000,
            Suite::Dirac | Suite::Symbols => 100,
            Suite::Laplacian => 50,
            Suite::Plancherel => 5,
            Suite::Cauchy | Suite::Fsq => 5,
            Suite::Constants | Suite::Hankel | Suite::Scalars => 1,
        }
    }

    fn index(self) -> u64 {
        Suite::ALL.iter().position(|s| *s == self).unwrap_or(0) as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite '{s}'")))
    }
}

/// `"all"` or a single suite name.
pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

/// Knobs shared by every suite. `None` means the suite's own default.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub dims: Option<Vec<usize>>,
    pub seed: u64,
    /// Replaces every tolerance.
    pub tol: Option<f64>,
    /// Multiplies every (possibly replaced) tolerance.
    pub tol_scale: f64,
    pub points: Option<usize>,
    pub nodes: Option<usize>,
    pub grid_points: Option<usize>,
    pub grid_half_width: Option<f64>,
    pub parallel: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            dims: None,
            seed: 1,
            tol: None,
            tol_scale: 1.0,
            points: None,
            nodes: None,
            grid_points: None,
            grid_half_width: None,
            parallel: false,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol_scale >= 0.0 && self.tol_scale.is_finite()) {
            return Err(Error::InvalidParameter(format!("tol-scale must be finite and >= 0, got {}", self.tol_scale)));
        }
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(Error::InvalidParameter(format!("tolerance must be positive, got {t}")));
            }
        }
        if let Some(dims) = &self.dims {
            if dims.is_empty() || dims.iter().any(|&n| n == 0 || n > crate::MAX_DIM) {
                return Err(Error::InvalidParameter(format!("dimensions must lie in 1..={}", crate::MAX_DIM)));
            }
        }
        if self.points == Some(0) {
            return Err(Error::InvalidParameter("point count must be positive".into()));
        }
        Ok(())
    }

    fn tol(&self, base: f64) -> f64 {
        self.tol.unwrap_or(base) * self.tol_scale
    }

    fn dims(&self, suite: Suite) -> Vec<usize> {
        self.dims.clone().unwrap_or_else(|| suite.default_dims())
    }

    fn points(&self, suite: Suite) -> usize {
        self.points.unwrap_or_else(|| suite.default_points())
    }

    fn rng(&self, suite: Suite, n: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ (suite.index() << 40) ^ ((n as u64) << 20))
    }
}

/// Tolerances at which the suites pass by default.
pub mod tolerances {
    pub const EXACT: f64 = f64::MIN_POSITIVE;
    pub const ALGEBRA: f64 = 1e-14;
    pub const ASSOCIATIVITY: f64 = 1e-13;
    pub const FORMS: f64 = 1e-12;
    pub const MONOGENIC: f64 = 1e-5;
    pub const DIRAC_CLOSED_FORM: f64 = 1e-4;
    pub const LAPLACIAN: f64 = 1e-4;
    pub const CONSTANTS: f64 = 1e-12;
    pub const COLLAPSE: f64 = 1e-14;
    pub const SYMBOL: f64 = 1e-12;
    pub const PLANCHEREL_N1: f64 = 1e-3;
    pub const PLANCHEREL: f64 = 1e-2;
    pub const HANKEL: f64 = 1e-6;
    pub const BESSEL_LAPLACE: f64 = 1e-7;
    pub const POISSON: f64 = 1e-8;
    pub const CAUCHY: f64 = 1e-9;
    pub const CAUCHY_INDEPENDENCE: f64 = 1e-10;
    pub const FSQ_POLYNOMIAL: f64 = 1e-8;
    pub const FSQ_INDEPENDENCE: f64 = 1e-8;
    pub const FSQ_FD: f64 = 1e-4;
}

use tolerances as tol;

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let mut config = serde_json::to_value(cfg)?;
    config["dims"] = json!(cfg.dims(suite));
    config["points"] = json!(cfg.points(suite));
    let mut report = VerificationReport::new(suite.name(), config);
    for n in cfg.dims(suite) {
        let mut rng = cfg.rng(suite, n);
        match suite {
            Suite::Algebra => algebra(&mut report, cfg, n, &mut rng)?,
            Suite::Forms => forms(&mut report, cfg, n, &mut rng)?,
            Suite::Dirac => dirac(&mut report, cfg, n, &mut rng)?,
            Suite::Laplacian => laplacian(&mut report, cfg, n, &mut rng)?,
            Suite::Constants => constants(&mut report, cfg, n, &mut rng)?,
            Suite::Symbols => symbols(&mut report, cfg, n, &mut rng)?,
            Suite::Plancherel => plancherel(&mut report, cfg, n)?,
            Suite::Hankel => hankel(&mut report, cfg, n)?,
            Suite::Scalars => scalars(&mut report, cfg, n)?,
            Suite::Cauchy => cauchy(&mut report, cfg, n, &mut rng)?,
            Suite::Fsq => fsq(&mut report, cfg, n, &mut rng)?,
        }
    }
    Ok(report)
}

/// Runs several suites into one report named `label`.
pub fn run_suites(label: &str, suites: &[Suite], cfg: &VerifyConfig) -> Result<VerificationReport> {
    if let [single] = suites {
        return run_suite(*single, cfg);
    }
    let mut report = VerificationReport::new(label, serde_json::to_value(cfg)?);
    for &suite in suites {
        report.absorb(run_suite(suite, cfg)?);
    }
    Ok(report)
}

/// Largest residual over a batch together with the point where it occurred.
struct Worst {
    residual: f64,
    point: Vec<f64>,
}

impl Worst {
    fn new() -> Self {
        Self {
            residual: 0.0,
            point: Vec::new(),
        }
    }

    fn update(&mut self, residual: f64, point: impl FnOnce() -> Vec<f64>) {
        // NaN is sticky so that it is reported rather than hidden by max
        if residual.is_nan() || (!self.residual.is_nan() && residual > self.residual) {
            self.residual = residual;
            self.point = point();
        }
    }

    fn record(self, report: &mut VerificationReport, name: String, n: usize, tol: f64) {
        report.check(name, n, self.point, self.residual, tol);
    }
}

fn coords2(a: &Paravector, b: &Paravector) -> Vec<f64> {
    let mut p = a.coords();
    p.extend(b.coords());
    p
}

fn rel(a: &CliffordElement, b: &CliffordElement) -> f64 {
    a.distance(b) / b.norm()
}

fn algebra(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let one = CliffordElement::one(n)?;
    let mut anti = 0.0f64;
    for i in 1..=n {
        let ei = CliffordElement::generator(n, i)?;
        anti = anti.max(ei.product(&ei)?.distance(&one.scale_real(-1.0)));
        for j in (i + 1)..=n {
            let ej = CliffordElement::generator(n, j)?;
            anti = anti.max((&ei.product(&ej)? + &ej.product(&ei)?).norm());
        }
    }
    report.check("anticommutation", n, vec![], anti, cfg.tol(tol::EXACT));

    let dim = 1usize << n;
    let mut blade_assoc = 0.0f64;
    for _ in 0..200 {
        let [a, b, c] = [0; 3].map(|_| CliffordElement::blade(n, rng.random_range(0..dim), Complex64::new(1.0, 0.0)));
        let (a, b, c) = (a?, b?, c?);
        let lhs = a.product(&b)?.product(&c)?;
        let rhs = a.product(&b.product(&c)?)?;
        blade_assoc = blade_assoc.max(lhs.distance(&rhs));
    }
    report.check("associativity/blades", n, vec![], blade_assoc, cfg.tol(tol::EXACT));

    let mut assoc = Worst::new();
    for _ in 0..20 {
        let [a, b, c] = [0; 3].map(|_| {
            let coeffs = (0..dim)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            CliffordElement::from_coeffs(n, coeffs)
        });
        let (a, b, c) = (a?, b?, c?);
        let lhs = a.product(&b)?.product(&c)?;
        let rhs = a.product(&b.product(&c)?)?;
        assoc.update(lhs.distance(&rhs) / (a.norm() * b.norm() * c.norm()), Vec::new);
    }
    assoc.record(report, "associativity/random".into(), n, cfg.tol(tol::ASSOCIATIVITY));

    let mut norm = Worst::new();
    let mut inverse = Worst::new();
    for _ in 0..cfg.points(Suite::Algebra) {
        let x = random_paravector(rng, n, 2.0);
        let sq = x.norm_sq();
        if sq < 1e-6 {
            continue;
        }
        let xc = x.mul_paravector(&x.conjugate())?;
        norm.update(xc.distance(&one.scale_real(sq)) / sq, || x.coords());
        let inv = x.inverse()?;
        let err = x.mul_paravector(&inv)?.distance(&one).max(inv.mul_paravector(&x)?.distance(&one));
        inverse.update(err, || x.coords());
    }
    norm.record(report, "x*conj(x)=|x|^2".into(), n, cfg.tol(tol::ALGEBRA));
    inverse.record(report, "x*x^-1=1".into(), n, cfg.tol(tol::ALGEBRA));
    Ok(())
}

fn forms(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut worst = [Worst::new(), Worst::new()];
    for _ in 0..cfg.points(Suite::Forms) {
        let (s, x) = random_admissible_pair(rng, n, 2.0, DEFAULT_TUBE);
        for (side, w) in Side::BOTH.into_iter().zip(worst.iter_mut()) {
            let first = cauchy_kernel(&s, &x, Form::I, side)?;
            let second = cauchy_kernel(&s, &x, Form::II, side)?;
            w.update(rel(&first, &second), || coords2(&s, &x));
        }
    }
    for (side, w) in Side::BOTH.into_iter().zip(worst) {
        w.record(report, format!("form-I-vs-II/{}", side.tag()), n, cfg.tol(tol::FORMS));
    }
    Ok(())
}

/// `s = u + I v` with `u > 1.2` and `x` in the ball of radius 0.8, so the
/// stencil never meets the cut of `Q^{-λ}` in `x`.
fn dirac_point(rng: &mut ChaCha8Rng, n: usize) -> Result<(f64, f64, ImaginaryUnit, Paravector)> {
    let unit = sphere_sample(n, 1, rng.random())?.remove(0);
    let u = rng.random_range(1.5..2.5);
    let v = rng.random_range(-1.5..1.5);
    let x = random_in_shell(rng, n, 0.0, 0.8);
    Ok((u, v, unit, x))
}

fn dirac(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let scheme = FdScheme::default();
    let critical = (n as f64 + 1.0) / 2.0;
    let points = cfg.points(Suite::Dirac);

    let mut mono = Worst::new();
    for _ in 0..points {
        let (u, v, unit, x) = dirac_point(rng, n)?;
        let s = Paravector::in_slice(u, v, &unit);
        let f = |y: &Paravector| k_lambda(&s, y, critical, Side::Left);
        let d = fd_dirac_left(&f, &x, scheme)?;
        mono.update(d.norm() / f(&x)?.norm(), || coords2(&s, &x));
    }
    mono.record(report, format!("monogenic/lambda={critical}"), n, cfg.tol(tol::MONOGENIC));

    let mut fn_mono = [Worst::new(), Worst::new()];
    for _ in 0..points {
        let (u, v, unit, x) = dirac_point(rng, n)?;
        let s = Paravector::in_slice(u, v, &unit);
        for (side, w) in Side::BOTH.into_iter().zip(fn_mono.iter_mut()) {
            let f = |y: &Paravector| f_kernel(&s, y, n, side);
            let d = match side {
                Side::Left => fd_dirac_left(&f, &x, scheme)?,
                Side::Right => fd_dirac_right(&f, &x, scheme)?,
            };
            w.update(d.norm() / f(&x)?.norm(), || coords2(&s, &x));
        }
    }
    for (side, w) in Side::BOTH.into_iter().zip(fn_mono) {
        w.record(report, format!("monogenic/F_n/{}", side.tag()), n, cfg.tol(tol::MONOGENIC));
    }

    for lambda in [1.0, 2.0, critical - 0.5, critical + 0.5] {
        let mut worst = Worst::new();
        for _ in 0..points.div_ceil(4) {
            let (u, v, unit, x) = dirac_point(rng, n)?;
            let s = Paravector::in_slice(u, v, &unit);
            let f = |y: &Paravector| k_lambda(&s, y, lambda, Side::Left);
            let fd = fd_dirac_left(&f, &x, scheme)?;
            let cf = dirac_residual_closed_form(u, v, &unit, &x, lambda, n)?;
            // at the critical exponent the closed form vanishes
            let r = if cf.norm() == 0.0 { fd.norm() / f(&x)?.norm() } else { rel(&fd, &cf) };
            worst.update(r, || coords2(&s, &x));
        }
        worst.record(report, format!("closed-form/lambda={lambda}"), n, cfg.tol(tol::DIRAC_CLOSED_FORM));
    }
    Ok(())
}

/// Step for `h` nested second-order stencils: larger steps for deeper nesting
/// keep the round-off `ε/step^{2h}` below the truncation error.
fn laplacian_scheme(h: u32) -> Result<FdScheme> {
    match h {
        1 => FdScheme::new(1e-3, 4),
        _ => FdScheme::new(1e-2, 4),
    }
}

fn laplacian(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    for h in [1u32, 2] {
        let scheme = laplacian_scheme(h)?;
        let mut worst = [Worst::new(), Worst::new()];
        for _ in 0..cfg.points(Suite::Laplacian) {
            // at distance ~1 from [x] truncation and round-off of the nested
            // stencils are balanced for both step sizes
            let s = random_in_shell(rng, n, 1.1, 1.4);
            let x = random_in_shell(rng, n, 0.0, 0.3);
            for (side, w) in Side::BOTH.into_iter().zip(worst.iter_mut()) {
                let f = |y: &Paravector| cauchy_kernel(&s, y, Form::II, side);
                let fd = fd_laplacian(&f, &x, scheme, h)?;
                let cf = laplacian_sinv_closed_form(&s, &x, h, n, side)?;
                // C(h, n) vanishes for h > (n-1)/2 with n odd; then measure
                // against the size of k_{h+1}
                let scale = if cf.norm() > 0.0 { cf.norm() } else { k_lambda(&s, &x, f64::from(h) + 1.0, side)?.norm() };
                w.update(fd.distance(&cf) / scale, || coords2(&s, &x));
            }
        }
        for (side, w) in Side::BOTH.into_iter().zip(worst) {
            w.record(report, format!("h={h}/{}", side.tag()), n, cfg.tol(tol::LAPLACIAN));
        }
    }
    Ok(())
}

fn constants(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let c = fsq_constants(n)?;
    if n % 2 == 1 {
        let coefficient = laplacian_coefficient((n as u32 - 1) / 2, n);
        let r = (c.gamma - coefficient).norm() / c.gamma.norm();
        report.check("C((n-1)/2,n)=gamma_n", n, vec![], r, cfg.tol(tol::CONSTANTS));
    }
    let expect = c.c * i_pow(n as i64 - 1);
    report.check("k_n=c_n*i^(n-1)", n, vec![], (c.k - expect).norm() / c.k.norm(), cfg.tol(tol::CONSTANTS));
    if n == 1 {
        report.check("k_1=c_1", n, vec![], (c.k - c.c).norm() / c.c.norm(), cfg.tol(tol::CONSTANTS));
        let mut worst = Worst::new();
        for _ in 0..100 {
            let (s, x) = random_admissible_pair(rng, 1, 2.0, DEFAULT_TUBE);
            for side in Side::BOTH {
                let f = f_kernel(&s, &x, 1, side)?;
                let k = cauchy_kernel(&s, &x, Form::II, side)?;
                worst.update(rel(&f, &k), || coords2(&s, &x));
            }
        }
        worst.record(report, "F_1=S^-1".into(), n, cfg.tol(tol::COLLAPSE));
    }
    Ok(())
}

fn symbols(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let mut worst = [Worst::new(), Worst::new()];
    for _ in 0..cfg.points(Suite::Symbols) {
        let s = Paravector::new(rng.random_range(-2.0..2.0), (0..n).map(|_| rng.random_range(-1.0..1.0)).collect());
        let xi = loop {
            let xi = FrequencyPoint::new(rng.random_range(-3.0..3.0), (0..n).map(|_| rng.random_range(-3.0..3.0)).collect());
            if xi.norm() > 1e-3 {
                break xi;
            }
        };
        for (side, w) in Side::BOTH.into_iter().zip(worst.iter_mut()) {
            let r = tcr3_symbol_identity(&s, &xi, n, side)?;
            w.update(r, || {
                let mut p = s.coords();
                p.push(xi.xi0);
                p.extend(&xi.xi_vec);
                p
            });
        }
    }
    for (side, w) in Side::BOTH.into_iter().zip(worst) {
        w.record(report, format!("symbol-identity/{}", side.tag()), n, cfg.tol(tol::SYMBOL));
    }
    Ok(())
}

/// Default pairing grid per dimension: `(points per axis, half width)`.
pub fn default_grid(n: usize) -> (usize, f64) {
    match n {
        1 => (1024, 20.0),
        2 => (96, 16.0),
        _ => (32, 12.0),
    }
}

/// Five fixed Gaussian test functions on ℝ^{n+1}.
pub fn pairing_gaussians(n: usize) -> Result<Vec<Gaussian>> {
    const SPECS: [(f64, [f64; 3]); 5] = [
        (1.4, [0.3, -0.5, 0.2]),
        (1.5, [0.0, 0.0, 0.0]),
        (1.7, [-0.4, 0.6, -0.3]),
        (1.6, [0.8, 0.1, 0.5]),
        (2.0, [1.0, -0.7, 0.4]),
    ];
    SPECS
        .iter()
        .map(|(w, c)| {
            let center = (0..=n).map(|k| c.get(k).copied().unwrap_or(0.0)).collect();
            Gaussian::new(center, *w)
        })
        .collect()
}

fn plancherel(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize) -> Result<()> {
    let (points, half_width) = default_grid(n);
    let grid = GridSpec::new(cfg.grid_half_width.unwrap_or(half_width), cfg.grid_points.unwrap_or(points), n + 1)?;
    let base = if n == 1 { tol::PLANCHEREL_N1 } else { tol::PLANCHEREL };
    let tests = pairing_gaussians(n)?;
    for kernel in [PairingKernel::Sinv, PairingKernel::Fn] {
        for s in [1.0, 2.0] {
            for (k, g) in tests.iter().take(cfg.points(Suite::Plancherel)).enumerate() {
                let name = format!("{}/s={s}/gaussian{k}", kernel.name());
                let mut point = vec![s, g.width];
                point.extend(&g.center);
                match plancherel_pair(kernel, s, n, g, &grid, cfg.parallel) {
                    Ok(res) => {
                        report.check(name, n, point, res.relerr, cfg.tol(base));
                    }
                    Err(_) => report.failure(name, n, point, cfg.tol(base)),
                }
            }
        }
    }
    Ok(())
}

fn hankel(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize) -> Result<()> {
    if n < 2 {
        return Ok(());
    }
    let gauss = |r: f64| (-r * r / 2.0).exp();
    for rho in [0.0f64, 0.5, 1.0, 2.5, 4.0] {
        let expect = (2.0 * std::f64::consts::PI).powf(n as f64 / 2.0) * (-rho * rho / 2.0).exp();
        let name = format!("gaussian/rho={rho}");
        match hankel_radial_ft(&gauss, rho, n, QuadTolerance::relative(1e-10)) {
            Ok(v) => {
                report.check(name, n, vec![rho], (v - expect).abs() / expect, cfg.tol(tol::HANKEL));
            }
            Err(_) => report.failure(name, n, vec![rho], cfg.tol(tol::HANKEL)),
        }
    }
    Ok(())
}

/// The Bessel–Laplace and 1-D Poisson/log integrals; independent of `n`.
fn scalars(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize) -> Result<()> {
    for which in BesselLaplace::ALL {
        for nu in [-0.5, 0.0, 0.5, 1.0, 1.5] {
            if nu <= which.min_order() {
                continue;
            }
            for (a, b) in [(1.0, 1.0), (0.5, 2.0), (2.0, 0.7)] {
                let name = format!("{}/nu={nu}", which.name());
                match bessel_laplace_integral(which, a, b, nu) {
                    Ok(r) => {
                        report.check(name, n, vec![a, b, nu], r.relerr, cfg.tol(tol::BESSEL_LAPLACE));
                    }
                    Err(_) => report.failure(name, n, vec![a, b, nu], cfg.tol(tol::BESSEL_LAPLACE)),
                }
            }
        }
    }
    const LABELS: [&str; 3] = ["1/(y^2+a^2)", "y/(y^2+a^2)", "exp(-a|y|)/|y|"];
    for a in [0.5, 1.0, 2.0] {
        for xi in [0.0, 0.3, -0.3, 2.0] {
            match poisson_ft_1d(a, xi) {
                Ok(checks) => {
                    for (label, c) in LABELS.iter().zip(checks) {
                        report.check(format!("fourier/{label}"), n, vec![a, xi], c.relerr, cfg.tol(tol::POISSON));
                    }
                }
                Err(_) => {
                    for label in LABELS {
                        report.failure(format!("fourier/{label}"), n, vec![a, xi], cfg.tol(tol::POISSON));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `x^m` by repeated multiplication.
fn paravector_power(x: &Paravector, m: u32) -> Result<CliffordElement> {
    let xe = x.to_element()?;
    let mut acc = CliffordElement::one(x.n())?;
    for _ in 0..m {
        acc = acc.product(&xe)?;
    }
    Ok(acc)
}

const CAUCHY_NODES: usize = 512;

fn cauchy(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let nodes = cfg.nodes.unwrap_or(CAUCHY_NODES);
    let units = sphere_sample(n, 5, rng.random())?;
    for side in Side::BOTH {
        let mut worst = Worst::new();
        for _ in 0..cfg.points(Suite::Cauchy) {
            let x = random_in_shell(rng, n, 0.0, 0.6);
            let ct = Contour::new(0.0, 2.0, units[0].clone(), nodes)?;
            for m in 0..=5 {
                let stem = SliceStem::monomial(n, m)?;
                let got = contour_integral(&stem, &x, &ct, IntegralKind::Cauchy, side, cfg.parallel)?;
                let expect = paravector_power(&x, m)?;
                worst.update(got.distance(&expect) / expect.norm().max(1.0), || x.coords());
            }
        }
        worst.record(report, format!("reproduce-x^m/{}", side.tag()), n, cfg.tol(tol::CAUCHY));

        let x = random_in_shell(rng, n, 0.0, 0.6);
        for m in [2, 5] {
            let stem = SliceStem::monomial(n, m)?;
            let sweep = independence_sweep(&stem, &x, 0.0, &[1.5, 2.0, 3.0], &units, nodes, IntegralKind::Cauchy, side)?;
            report.check(
                format!("independence/z^{m}/{}", side.tag()),
                n,
                x.coords(),
                sweep.max_deviation,
                cfg.tol(tol::CAUCHY_INDEPENDENCE),
            );
        }
    }
    Ok(())
}

fn fsq(report: &mut VerificationReport, cfg: &VerifyConfig, n: usize, rng: &mut ChaCha8Rng) -> Result<()> {
    let nodes = cfg.nodes.unwrap_or(crate::contour::DEFAULT_NODES);
    let units = sphere_sample(n, 5, rng.random())?;
    let kind = IntegralKind::Fsq(FSQ_BRANCH);
    let points: Vec<Paravector> = (0..cfg.points(Suite::Fsq)).map(|_| random_in_shell(rng, n, 0.0, 0.6)).collect();
    let radius = 2.0;

    for side in Side::BOTH {
        let tag = side.tag();
        let ct = Contour::new(0.0, radius, units[0].clone(), nodes)?;
        if n == 1 {
            let stem = SliceStem::exponential(n)?;
            let mut worst = Worst::new();
            for x in &points {
                let a = contour_integral(&stem, x, &ct, kind, side, cfg.parallel)?;
                let b = contour_integral(&stem, x, &ct, IntegralKind::Cauchy, side, cfg.parallel)?;
                worst.update(rel(&a, &b), || x.coords());
            }
            worst.record(report, format!("collapse-to-cauchy/{tag}"), n, cfg.tol(tol::COLLAPSE));
        } else if n == 3 {
            let (mut sq, mut cu) = (Worst::new(), Worst::new());
            let four = CliffordElement::scalar(3, Complex64::new(-4.0, 0.0))?;
            for x in &points {
                let a = contour_integral(&SliceStem::monomial(3, 2)?, x, &ct, kind, side, cfg.parallel)?;
                sq.update(a.distance(&four), || x.coords());
                let b = contour_integral(&SliceStem::monomial(3, 3)?, x, &ct, kind, side, cfg.parallel)?;
                let expect = Paravector::new(-12.0 * x.x0, x.v.iter().map(|c| -4.0 * c).collect()).to_element()?;
                cu.update(b.distance(&expect) / expect.norm().max(1.0), || x.coords());
            }
            sq.record(report, format!("z^2->-4/{tag}"), n, cfg.tol(tol::FSQ_POLYNOMIAL));
            cu.record(report, format!("z^3->-12x0-4x/{tag}"), n, cfg.tol(tol::FSQ_POLYNOMIAL));
        } else if n % 2 == 1 {
            // Δ^{(n-1)/2} of a degree n-1 polynomial by nested differences
            let stem = SliceStem::monomial(n, n as u32 - 1)?;
            let h = (n as u32 - 1) / 2;
            let mut worst = Worst::new();
            for x in points.iter().take(2) {
                let a = contour_integral(&stem, x, &ct, kind, side, cfg.parallel)?;
                let f = |y: &Paravector| slice_extend_sided(&stem, y, side);
                let b = fd_laplacian(&f, x, laplacian_scheme(h)?, h)?;
                worst.update(a.distance(&b) / b.norm().max(1.0), || x.coords());
            }
            worst.record(report, format!("laplacian-power/z^{}/{tag}", n - 1), n, cfg.tol(tol::FSQ_FD));
        }

        let empirical = if n.is_multiple_of(2) { " [empirical]" } else { "" };
        // Δ^{(n-1)/2} annihilates z² for n ≥ 5, so larger n use exp
        let stem = if n <= 3 { SliceStem::monomial(n, 2)? } else { SliceStem::exponential(n)? };
        let mut mono = Worst::new();
        for x in &points {
            let field = |y: &Paravector| contour_integral(&stem, y, &ct, kind, side, cfg.parallel);
            let d = match side {
                Side::Left => fd_dirac_left(&field, x, FdScheme::default())?,
                Side::Right => fd_dirac_right(&field, x, FdScheme::default())?,
            };
            mono.update(d.norm() / field(x)?.norm(), || x.coords());
        }
        mono.record(report, format!("monogenic/{}/{tag}{empirical}", stem.name()), n, cfg.tol(tol::MONOGENIC));

        let sweep = independence_sweep(&stem, &points[0], 0.0, &[1.5, 2.0, 3.0], &units, nodes, kind, side)?;
        report.check(
            format!("independence/{}/{tag}{empirical}", stem.name()),
            n,
            points[0].coords(),
            sweep.max_deviation,
            cfg.tol(tol::FSQ_INDEPENDENCE),
        );
    }
    Ok(())
}
