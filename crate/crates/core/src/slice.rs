//! Slice functions: stems `(f₀, f₁)`, their extension to paravectors, and
//! powers of paravectors computed inside the plane ℂ_{I_y}.
//!
//! A stem is a pair of functions on `(u, v) ∈ ℝ²` with `f₀` even and `f₁` odd
//! in `v`. The left slice function it induces is `f₀(u, v) + I f₁(u, v)` at
//! `u + I v`; the right one puts `I` on the other side.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::clifford::{CliffordElement, ImaginaryUnit, Paravector};
use crate::error::{Error, Result};
use crate::kernels::Side;

/// Default finite-difference step for Cauchy–Riemann residuals.
pub const DEFAULT_CR_STEP: f64 = 1e-5;

/// Tolerance below which `|y̲|` counts as zero when testing the branch cut.
pub const CUT_TOLERANCE: f64 = 1e-14;

pub type StemFn = dyn Fn(f64, f64) -> CliffordElement + Send + Sync;

/// The stem `(f₀, f₁)` of a slice function, stored as callables.
#[derive(Clone)]
pub struct SliceStem {
    name: String,
    n: usize,
    f0: Arc<StemFn>,
    f1: Arc<StemFn>,
}

impl fmt::Debug for SliceStem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SliceStem").field("name", &self.name).field("n", &self.n).finish()
    }
}

impl SliceStem {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        f0: impl Fn(f64, f64) -> CliffordElement + Send + Sync + 'static,
        f1: impl Fn(f64, f64) -> CliffordElement + Send + Sync + 'static,
    ) -> Result<Self> {
        CliffordElement::zero(n)?;
        Ok(Self {
            name: name.into(),
            n,
            f0: Arc::new(f0),
            f1: Arc::new(f1),
        })
    }

    /// Stem of an intrinsic function given by a holomorphic `f` that is real on
    /// the real axis: `f₀ = Re f(u + iv)`, `f₁ = Im f(u + iv)`.
    pub fn from_holomorphic(
        name: impl Into<String>,
        n: usize,
        f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let f = Arc::new(f);
        let g = Arc::clone(&f);
        Self::new(
            name,
            n,
            move |u, v| real_scalar(n, f(Complex64::new(u, v)).re),
            move |u, v| real_scalar(n, g(Complex64::new(u, v)).im),
        )
    }

    /// `z^m`.
    pub fn monomial(n: usize, m: u32) -> Result<Self> {
        Self::from_holomorphic(format!("z^{m}"), n, move |z| z.powu(m))
    }

    pub fn constant(n: usize, value: f64) -> Result<Self> {
        Self::new(format!("const({value})"), n, move |_, _| real_scalar(n, value), move |_, _| {
            real_scalar(n, 0.0)
        })
    }

    /// `e^z`.
    pub fn exponential(n: usize) -> Result<Self> {
        Self::from_holomorphic("exp", n, |z| z.exp())
    }

    /// `f₀ = u`, `f₁ = -v`: parity-compatible but not holomorphic.
    pub fn conjugate_z(n: usize) -> Result<Self> {
        Self::new("conj(z)", n, move |u, _| real_scalar(n, u), move |_, v| real_scalar(n, -v))
    }

    /// Stem of `e^{-i s ξ₀}` where `i` is the scalar unit of the
    /// complexification. With `(iI)² = 1` this gives
    /// `f₀ = e^{-iuξ₀} cosh(vξ₀)` and `f₁ = -i e^{-iuξ₀} sinh(vξ₀)`.
    pub fn exp_minus_i_xi0(n: usize, xi0: f64) -> Result<Self> {
        Self::new(
            format!("exp(-i s {xi0})"),
            n,
            move |u, v| scalar(n, exp_minus_i_stem(u, v, xi0).0),
            move |u, v| scalar(n, exp_minus_i_stem(u, v, xi0).1),
        )
    }

    /// Built-in stems addressable from the command line: `z^m` / `zm`,
    /// `exp`, `one`, `conj`.
    pub fn builtin(id: &str, n: usize) -> Result<Self> {
        let id = id.trim();
        if let Some(m) = id.strip_prefix("z^").or_else(|| id.strip_prefix('z')) {
            let m: u32 = m
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("unknown stem '{id}'")))?;
            return Self::monomial(n, m);
        }
        match id {
            "exp" => Self::exponential(n),
            "one" | "const" | "1" => Self::constant(n, 1.0),
            "conj" => Self::conjugate_z(n),
            _ => Err(Error::InvalidParameter(format!("unknown stem '{id}'"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f0(&self, u: f64, v: f64) -> CliffordElement {
        (self.f0)(u, v)
    }

    pub fn f1(&self, u: f64, v: f64) -> CliffordElement {
        (self.f1)(u, v)
    }

    /// `f₀(u,v) + I f₁(u,v)` (left) or `f₀ + f₁ I` (right) at `u + I v`;
    /// `v` may be negative.
    pub fn evaluate(&self, u: f64, v: f64, unit: &ImaginaryUnit, side: Side) -> Result<CliffordElement> {
        let i = unit.to_element()?;
        let f1 = self.f1(u, v);
        let tail = match side {
            Side::Left => i.product(&f1)?,
            Side::Right => f1.product(&i)?,
        };
        Ok(&self.f0(u, v) + &tail)
    }

    /// Largest parity defect `|f₀(u,-v) - f₀(u,v)|`, `|f₁(u,-v) + f₁(u,v)|`.
    pub fn parity_defect(&self, u: f64, v: f64) -> f64 {
        let even = self.f0(u, -v).distance(&self.f0(u, v));
        let odd = (&self.f1(u, -v) + &self.f1(u, v)).norm();
        even.max(odd)
    }
}

fn real_scalar(n: usize, value: f64) -> CliffordElement {
    scalar(n, Complex64::new(value, 0.0))
}

fn scalar(n: usize, value: Complex64) -> CliffordElement {
    CliffordElement::scalar(n, value).expect("dimension validated at stem construction")
}

fn exp_minus_i_stem(u: f64, v: f64, xi0: f64) -> (Complex64, Complex64) {
    let phase = Complex64::new(0.0, -u * xi0).exp();
    let f0 = phase * (v * xi0).cosh();
    let f1 = phase * Complex64::new(0.0, -(v * xi0).sinh());
    (f0, f1)
}

/// Left slice extension `f₀(x₀,|x̲|) + I_x f₁(x₀,|x̲|)`; at real points the
/// stem's `f₁(x₀, 0)` must vanish and `f₀(x₀, 0)` is returned.
pub fn slice_extend(stem: &SliceStem, x: &Paravector) -> Result<CliffordElement> {
    slice_extend_sided(stem, x, Side::Left)
}

/// Left or right slice extension of `stem` at `x`.
pub fn slice_extend_sided(stem: &SliceStem, x: &Paravector, side: Side) -> Result<CliffordElement> {
    if x.n() != stem.n() {
        return Err(Error::DimensionMismatch {
            left: x.n(),
            right: stem.n(),
        });
    }
    let r = x.vector_norm();
    if r == 0.0 {
        let f0 = stem.f0(x.x0, 0.0);
        let f1 = stem.f1(x.x0, 0.0);
        if f1.norm() > 1e-12 * (1.0 + f0.norm()) {
            return Err(Error::InvalidParameter(format!(
                "stem '{}' has f1({}, 0) != 0",
                stem.name(),
                x.x0
            )));
        }
        return Ok(f0);
    }
    stem.evaluate(x.x0, r, &x.imaginary_unit()?, side)
}

fn check_cut(y: &Paravector) -> Result<()> {
    if y.vector_norm() < CUT_TOLERANCE * y.norm().max(1.0) && y.x0 <= 0.0 {
        return Err(Error::BranchCut {
            re: y.x0,
            im: y.vector_norm(),
        });
    }
    Ok(())
}

/// `y^α = e^{α(ln|y| + I_y arccos(y₀/|y|))}` with `arccos ∈ [0, π]`.
///
/// Points on the closed negative real axis are rejected; positive reals get
/// the real power.
pub fn fractional_power(y: &Paravector, alpha: f64) -> Result<Paravector> {
    check_cut(y)?;
    let r = y.vector_norm();
    let modulus = y.norm();
    if r == 0.0 {
        return Ok(Paravector::real(y.n(), y.x0.powf(alpha)));
    }
    // equals arccos(y₀/|y|) but keeps full accuracy near 0 and π
    let arg = r.atan2(y.x0);
    let m = modulus.powf(alpha);
    let (sin, cos) = (alpha * arg).sin_cos();
    Ok(Paravector::new(
        m * cos,
        y.v.iter().map(|c| c / r * m * sin).collect(),
    ))
}

/// Integer power by repeated Clifford products (inverting first for negative
/// exponents).
pub fn slice_power(y: &Paravector, exponent: i32) -> Result<Paravector> {
    let n = y.n();
    let base = if exponent < 0 { y.inverse()? } else { y.clone() };
    let base = base.to_element()?;
    let mut acc = CliffordElement::one(n)?;
    for _ in 0..exponent.unsigned_abs() {
        acc = acc.product(&base)?;
    }
    Ok(paravector_part(&acc))
}

/// Real scalar and vector parts of an element, dropping everything else.
pub fn paravector_part(el: &CliffordElement) -> Paravector {
    let n = el.n();
    Paravector::new(el.coeff(0).re, (0..n).map(|j| el.coeff(1 << j).re).collect())
}

/// The slice monogenic extension of `e^{-i s ξ₀}` evaluated at `s`.
pub fn slice_exp_minus_is_xi0(s: &Paravector, xi0: f64) -> Result<CliffordElement> {
    let n = s.n();
    let r = s.vector_norm();
    if r == 0.0 {
        return CliffordElement::scalar(n, Complex64::new(0.0, -s.x0 * xi0).exp());
    }
    let (f0, f1) = exp_minus_i_stem(s.x0, r, xi0);
    let unit = s.imaginary_unit()?.to_element()?;
    Ok(&CliffordElement::scalar(n, f0)? + &unit.scale(f1))
}

/// Finite-difference residuals of the Cauchy–Riemann system for a stem.
#[derive(Clone, Debug)]
pub struct CrResidual {
    /// `∂ᵤf₀ − ∂ᵥf₁`
    pub r1: CliffordElement,
    /// `∂ᵥf₀ + ∂ᵤf₁`
    pub r2: CliffordElement,
}

impl CrResidual {
    pub fn max_norm(&self) -> f64 {
        self.r1.norm().max(self.r2.norm())
    }
}

/// Central-difference residuals of the Cauchy–Riemann equations at `(u, v)`.
pub fn cr_residual(stem: &SliceStem, u: f64, v: f64, h: f64) -> Result<CrResidual> {
    if h <= 0.0 || !h.is_finite() {
        return Err(Error::InvalidParameter(format!("step h must be positive, got {h}")));
    }
    let inv = 1.0 / (2.0 * h);
    let du = |f: &dyn Fn(f64, f64) -> CliffordElement| (&f(u + h, v) - &f(u - h, v)).scale_real(inv);
    let dv = |f: &dyn Fn(f64, f64) -> CliffordElement| (&f(u, v + h) - &f(u, v - h)).scale_real(inv);
    let f0 = |a, b| stem.f0(a, b);
    let f1 = |a, b| stem.f1(a, b);
    Ok(CrResidual {
        r1: &du(&f0) - &dv(&f1),
        r2: &dv(&f0) + &du(&f1),
    })
}

/// Residual of the slice Cauchy–Riemann operator for a function of `s`
/// restricted to ℂ_I at `s = u + I v`: `∂ᵤg + I ∂ᵥg` for [`Side::Left`],
/// `∂ᵤg + (∂ᵥg) I` for [`Side::Right`].
pub fn slice_cr_operator(
    g: &dyn Fn(&Paravector) -> Result<CliffordElement>,
    u: f64,
    v: f64,
    unit: &ImaginaryUnit,
    side: Side,
    h: f64,
) -> Result<CliffordElement> {
    if h <= 0.0 {
        return Err(Error::InvalidParameter(format!("step h must be positive, got {h}")));
    }
    let at = |a: f64, b: f64| g(&Paravector::in_slice(a, b, unit));
    let inv = 1.0 / (2.0 * h);
    let du = (&at(u + h, v)? - &at(u - h, v)?).scale_real(inv);
    let dv = (&at(u, v + h)? - &at(u, v - h)?).scale_real(inv);
    let i = unit.to_element()?;
    let tail = match side {
        Side::Left => i.product(&dv)?,
        Side::Right => dv.product(&i)?,
    };
    Ok(&du + &tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::sphere_sample;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_para(rng: &mut ChaCha8Rng, n: usize) -> Paravector {
        Paravector::new(rng.random_range(-2.0..2.0), (0..n).map(|_| rng.random_range(-2.0..2.0)).collect())
    }

    #[test]
    fn identity_stem_extends_to_x() {
        let stem = SliceStem::monomial(3, 1).unwrap();
        let x = Paravector::new(1.0, vec![2.0, 0.0, 0.0]);
        let fx = slice_extend(&stem, &x).unwrap();
        assert!(fx.distance(&x.to_element().unwrap()) < 1e-15);
    }

    #[test]
    fn square_stem_extends_to_clifford_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2, 3, 4] {
            let stem = SliceStem::monomial(n, 2).unwrap();
            for _ in 0..100 {
                let x = rand_para(&mut rng, n);
                let fx = slice_extend(&stem, &x).unwrap();
                let sq = x.mul_paravector(&x).unwrap();
                assert!(fx.distance(&sq) < 1e-12 * (1.0 + sq.norm()));
            }
        }
    }

    #[test]
    fn constant_stem() {
        let stem = SliceStem::constant(2, 1.0).unwrap();
        let x = Paravector::new(-0.3, vec![1.0, 4.0]);
        assert_eq!(slice_extend(&stem, &x).unwrap(), CliffordElement::one(2).unwrap());
        assert_eq!(slice_extend(&stem, &Paravector::real(2, 3.0)).unwrap(), CliffordElement::one(2).unwrap());
    }

    #[test]
    fn fractional_power_examples() {
        let p = fractional_power(&Paravector::real(2, 4.0), 0.5).unwrap();
        assert_eq!(p, Paravector::real(2, 2.0));
        let p = fractional_power(&Paravector::real(2, 1.0), -7.3).unwrap();
        assert_eq!(p, Paravector::real(2, 1.0));

        let e1 = Paravector::new(0.0, vec![1.0, 0.0]);
        let root = fractional_power(&e1, 0.5).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(root.x0, h, epsilon = 1e-15);
        assert_abs_diff_eq!(root.v[0], h, epsilon = 1e-15);
        let sq = root.mul_paravector(&root).unwrap();
        assert!(sq.distance(&e1.to_element().unwrap()) < 1e-14);
    }

    #[test]
    fn fractional_power_rejects_negative_axis() {
        for y0 in [0.0, -1.0, -1e6] {
            let err = fractional_power(&Paravector::real(3, y0), 0.5).unwrap_err();
            assert!(matches!(err, Error::BranchCut { .. }));
        }
        // just off the cut is fine
        assert!(fractional_power(&Paravector::new(-1.0, vec![1e-6, 0.0]), 0.5).is_ok());
    }

    #[test]
    fn slice_power_examples() {
        let y = Paravector::new(1.0, vec![1.0, 0.0]);
        let sq = slice_power(&y, 2).unwrap();
        assert!(sq.to_element().unwrap().distance(&y.mul_paravector(&y).unwrap()) < 1e-15);
        assert_eq!(sq, Paravector::new(0.0, vec![2.0, 0.0]));
        let e1 = Paravector::new(0.0, vec![1.0]);
        assert_eq!(slice_power(&e1, 4).unwrap(), Paravector::real(1, 1.0));
        assert_eq!(slice_power(&Paravector::real(1, 2.0), -1).unwrap(), Paravector::real(1, 0.5));
        assert!(matches!(slice_power(&Paravector::real(2, 0.0), -2), Err(Error::ZeroInverse)));
    }

    #[test]
    fn integer_fractional_power_matches_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let y = rand_para(&mut rng, 3);
            let k: i32 = rng.random_range(-4..=5);
            let a = fractional_power(&y, k as f64).unwrap();
            let b = slice_power(&y, k).unwrap();
            assert!(a.distance(&b) <= 1e-12 * b.norm().max(1e-300));
        }
    }

    #[test]
    fn fractional_power_commutes_with_base() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let y = rand_para(&mut rng, 4);
            let p = fractional_power(&y, rng.random_range(-3.0..3.0)).unwrap();
            let lhs = y.mul_paravector(&p).unwrap();
            let rhs = p.mul_paravector(&y).unwrap();
            assert!(lhs.distance(&rhs) < 1e-12 * (1.0 + lhs.norm()));
        }
    }

    #[test]
    fn exp_stem_examples() {
        let one = slice_exp_minus_is_xi0(&Paravector::real(2, 0.0), 3.0).unwrap();
        assert_eq!(one, CliffordElement::one(2).unwrap());

        let s0 = 0.7;
        let val = slice_exp_minus_is_xi0(&Paravector::real(2, s0), 1.3).unwrap();
        let expect = Complex64::new(0.0, -s0 * 1.3).exp();
        assert!((val.scalar_part() - expect).norm() < 1e-15);

        let val = slice_exp_minus_is_xi0(&Paravector::new(0.0, vec![1.0, 0.0]), 1.0).unwrap();
        assert_abs_diff_eq!(val.coeff(0).re, 1f64.cosh(), epsilon = 1e-15);
        assert_abs_diff_eq!(val.coeff(1).im, -1f64.sinh(), epsilon = 1e-15);
        assert_abs_diff_eq!(val.coeff(1).re, 0.0);

        let stem = SliceStem::exp_minus_i_xi0(2, 1.0).unwrap();
        let res = cr_residual(&stem, 0.0, 1.0, DEFAULT_CR_STEP).unwrap();
        assert!(res.max_norm() < 1e-8, "{}", res.max_norm());
    }

    #[test]
    fn exp_stem_matches_extension_everywhere() {
        let stem = SliceStem::exp_minus_i_xi0(3, 0.8).unwrap();
        let x = Paravector::new(0.4, vec![0.3, -1.2, 0.5]);
        let a = slice_extend(&stem, &x).unwrap();
        let b = slice_exp_minus_is_xi0(&x, 0.8).unwrap();
        assert!(a.distance(&b) < 1e-14);
    }

    #[test]
    fn cr_residual_examples() {
        let stem = SliceStem::monomial(2, 2).unwrap();
        for (u, v) in [(0.3, 0.2), (-1.0, 2.0), (2.5, -0.7)] {
            assert!(cr_residual(&stem, u, v, 1e-5).unwrap().max_norm() < 1e-8);
        }
        let anti = SliceStem::conjugate_z(2).unwrap();
        let r = cr_residual(&anti, 1.0, 1.0, 1e-5).unwrap();
        assert_abs_diff_eq!(r.r1.coeff(0).re, 2.0, epsilon = 1e-9);
        assert!(r.r2.norm() < 1e-12);
        let konst = SliceStem::constant(2, 3.0).unwrap();
        assert_eq!(cr_residual(&konst, 0.1, 0.2, 1e-5).unwrap().max_norm(), 0.0);
        assert!(cr_residual(&konst, 0.1, 0.2, 0.0).is_err());
    }

    #[test]
    fn builtin_stems_have_the_right_parity() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let stems: Vec<SliceStem> = vec![
            SliceStem::monomial(3, 2).unwrap(),
            SliceStem::monomial(3, 5).unwrap(),
            SliceStem::exponential(3).unwrap(),
            SliceStem::constant(3, 2.0).unwrap(),
            SliceStem::exp_minus_i_xi0(3, 1.7).unwrap(),
        ];
        for stem in &stems {
            for _ in 0..200 {
                let (u, v) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
                assert!(stem.parity_defect(u, v) < 1e-12, "{}", stem.name());
            }
        }
    }

    #[test]
    fn extension_restricted_to_a_slice_is_the_stem() {
        let stem = SliceStem::monomial(3, 3).unwrap();
        for unit in sphere_sample(3, 5, 2).unwrap() {
            for (u, v) in [(0.5, 0.7), (-1.0, 0.3)] {
                let x = Paravector::in_slice(u, v, &unit);
                let a = slice_extend(&stem, &x).unwrap();
                let b = stem.evaluate(u, v, &unit, Side::Left).unwrap();
                assert!(a.distance(&b) < 1e-13);
                // the lower half plane uses the parity of the stem
                let xm = Paravector::in_slice(u, -v, &unit);
                let am = slice_extend(&stem, &xm).unwrap();
                let bm = stem.evaluate(u, -v, &unit, Side::Left).unwrap();
                assert!(am.distance(&bm) < 1e-13);
            }
        }
    }

    #[test]
    fn builtin_lookup() {
        assert_eq!(SliceStem::builtin("z^3", 2).unwrap().name(), "z^3");
        assert_eq!(SliceStem::builtin("z2", 2).unwrap().name(), "z^2");
        assert!(SliceStem::builtin("exp", 2).is_ok());
        assert!(SliceStem::builtin("sin", 2).is_err());
    }
}
