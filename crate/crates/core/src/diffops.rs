//! Finite-difference Dirac and Laplace operators in ℝ^{n+1}, the closed form
//! of `Δ^h S⁻¹`, and the closed-form Dirac derivative of `k_λ`.

use num_complex::Complex64;

use crate::clifford::{CliffordElement, ImaginaryUnit, Paravector};
use crate::error::{Error, Result};
use crate::kernels::{k_lambda, Side};

/// A Clifford-valued field on ℝ^{n+1}.
pub type Field<'a> = dyn Fn(&Paravector) -> Result<CliffordElement> + Sync + 'a;

/// Central-difference scheme: step and order (2 or 4).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdScheme {
    step: f64,
    order: u8,
}

impl FdScheme {
    pub const MIN_STEP: f64 = 1e-7;
    pub const MAX_STEP: f64 = 1e-2;

    pub fn new(step: f64, order: u8) -> Result<Self> {
        if !(Self::MIN_STEP..=Self::MAX_STEP).contains(&step) {
            return Err(Error::InvalidParameter(format!(
                "FD step {step} outside [{}, {}]",
                Self::MIN_STEP,
                Self::MAX_STEP
            )));
        }
        if order != 2 && order != 4 {
            return Err(Error::InvalidParameter(format!("FD order must be 2 or 4, got {order}")));
        }
        Ok(Self { step, order })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    fn first(&self) -> &'static [(i32, f64)] {
        match self.order {
            2 => &[(-1, -0.5), (1, 0.5)],
            _ => &[(-2, 1.0 / 12.0), (-1, -8.0 / 12.0), (1, 8.0 / 12.0), (2, -1.0 / 12.0)],
        }
    }

    /// Off-centre weights of the second difference and the centre weight.
    fn second(&self) -> (&'static [(i32, f64)], f64) {
        match self.order {
            2 => (&[(-1, 1.0), (1, 1.0)], -2.0),
            _ => (
                &[(-2, -1.0 / 12.0), (-1, 16.0 / 12.0), (1, 16.0 / 12.0), (2, -1.0 / 12.0)],
                -30.0 / 12.0,
            ),
        }
    }
}

impl Default for FdScheme {
    fn default() -> Self {
        Self { step: 1e-3, order: 4 }
    }
}

fn shifted(x: &Paravector, axis: usize, delta: f64) -> Paravector {
    let mut y = x.clone();
    if axis == 0 {
        y.x0 += delta;
    } else {
        y.v[axis - 1] += delta;
    }
    y
}

/// `∂f/∂x_axis` at `x` (axis 0 is the real coordinate).
pub fn fd_partial(f: &Field<'_>, x: &Paravector, axis: usize, scheme: FdScheme) -> Result<CliffordElement> {
    let mut acc = CliffordElement::zero(x.n())?;
    for &(k, w) in scheme.first() {
        let val = f(&shifted(x, axis, f64::from(k) * scheme.step))?;
        acc += &val.scale_real(w);
    }
    Ok(acc.scale_real(1.0 / scheme.step))
}

fn fd_dirac(f: &Field<'_>, x: &Paravector, scheme: FdScheme, side: Side) -> Result<CliffordElement> {
    let n = x.n();
    let mut acc = fd_partial(f, x, 0, scheme)?;
    for j in 1..=n {
        let d = fd_partial(f, x, j, scheme)?;
        let e = CliffordElement::generator(n, j)?;
        let term = match side {
            Side::Left => e.product(&d)?,
            Side::Right => d.product(&e)?,
        };
        acc += &term;
    }
    Ok(acc)
}

/// `∂₀f + Σ eⱼ ∂ⱼf`.
pub fn fd_dirac_left(f: &Field<'_>, x: &Paravector, scheme: FdScheme) -> Result<CliffordElement> {
    fd_dirac(f, x, scheme, Side::Left)
}

/// `∂₀f + Σ (∂ⱼf) eⱼ`.
pub fn fd_dirac_right(f: &Field<'_>, x: &Paravector, scheme: FdScheme) -> Result<CliffordElement> {
    fd_dirac(f, x, scheme, Side::Right)
}

fn laplacian_once(f: &Field<'_>, x: &Paravector, scheme: FdScheme) -> Result<CliffordElement> {
    let dims = x.n() + 1;
    let (offsets, centre) = scheme.second();
    let mut acc = f(x)?.scale_real(centre * dims as f64);
    for axis in 0..dims {
        for &(k, w) in offsets {
            acc += &f(&shifted(x, axis, f64::from(k) * scheme.step))?.scale_real(w);
        }
    }
    Ok(acc.scale_real(1.0 / (scheme.step * scheme.step)))
}

/// `Δ^iterations f` at `x` by nesting the (n+1)-dimensional stencil.
pub fn fd_laplacian(f: &Field<'_>, x: &Paravector, scheme: FdScheme, iterations: u32) -> Result<CliffordElement> {
    match iterations {
        0 => f(x),
        1 => laplacian_once(f, x, scheme),
        _ => {
            let inner = |y: &Paravector| fd_laplacian(f, y, scheme, iterations - 1);
            laplacian_once(&inner, x, scheme)
        }
    }
}

/// `C(h, n) = (-1)^h ∏_{ℓ=1}^h (2ℓ) ∏_{ℓ=1}^h (n - 2ℓ + 1)`.
pub fn laplacian_coefficient(h: u32, n: usize) -> f64 {
    (1..=h).fold(1.0, |acc, l| {
        let l = f64::from(l);
        -acc * (2.0 * l) * (n as f64 - 2.0 * l + 1.0)
    })
}

/// `Δ^h S⁻¹(s, x) = C(h, n) k_{h+1}(s, x)` on the requested side.
pub fn laplacian_sinv_closed_form(
    s: &Paravector,
    x: &Paravector,
    h: u32,
    n: usize,
    side: Side,
) -> Result<CliffordElement> {
    if s.n() != n {
        return Err(Error::DimensionMismatch { left: s.n(), right: n });
    }
    Ok(k_lambda(s, x, f64::from(h) + 1.0, side)?.scale_real(laplacian_coefficient(h, n)))
}

/// The quantities of the monogenicity computation for `s = u + I v`.
///
/// `gamma_q = a + I b` with `a = u² - v² - 2x₀u + |x|²` and `b = 2uv - 2x₀v`,
/// `beta = a / |gamma_q|`, and `alpha = -(λ/2) ln|gamma_q|² - λ I arccos β`,
/// stored as its scalar part and its `I`-coefficient. The representation of
/// `s` is flipped to `(-I, -v)` when needed so that `b ≥ 0`; then `arccos β`
/// is the principal argument of `gamma_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProofQuantities {
    pub unit: ImaginaryUnit,
    pub u: f64,
    pub v: f64,
    pub a: f64,
    pub b: f64,
    pub beta: f64,
    pub alpha_scalar: f64,
    pub alpha_unit: f64,
}

impl ProofQuantities {
    pub fn new(u: f64, v: f64, unit: &ImaginaryUnit, x: &Paravector, lambda: f64) -> Result<Self> {
        if unit.n() != x.n() {
            return Err(Error::DimensionMismatch {
                left: unit.n(),
                right: x.n(),
            });
        }
        let x0 = x.x0;
        let a = u * u - v * v - 2.0 * x0 * u + x.norm_sq();
        let b = 2.0 * u * v - 2.0 * x0 * v;
        let (unit, v, b) = if b < 0.0 {
            (unit.negated(), -v, -b)
        } else {
            (unit.clone(), v, b)
        };
        let modulus_sq = a * a + b * b;
        if modulus_sq == 0.0 {
            return Err(Error::SingularPoint { distance: 0.0 });
        }
        if b == 0.0 && a <= 0.0 {
            return Err(Error::BranchCut { re: a, im: b });
        }
        let beta = (a / modulus_sq.sqrt()).clamp(-1.0, 1.0);
        Ok(Self {
            unit,
            u,
            v,
            a,
            b,
            beta,
            alpha_scalar: -0.5 * lambda * modulus_sq.ln(),
            alpha_unit: -lambda * beta.acos(),
        })
    }

    /// `gamma_q` as a paravector.
    pub fn gamma_q(&self) -> Paravector {
        Paravector::in_slice(self.a, self.b, &self.unit)
    }

    /// `e^{alpha}` as a paravector in the plane of `I`.
    pub fn exp_alpha(&self) -> Paravector {
        let m = self.alpha_scalar.exp();
        Paravector::in_slice(m * self.alpha_unit.cos(), m * self.alpha_unit.sin(), &self.unit)
    }
}

/// `(2λ - (n+1)) e^{α(u,v)}`, the left Dirac derivative of `k_λ(u + I v, ·)` at `x`.
pub fn dirac_residual_closed_form(
    u: f64,
    v: f64,
    unit: &ImaginaryUnit,
    x: &Paravector,
    lambda: f64,
    n: usize,
) -> Result<CliffordElement> {
    if x.n() != n {
        return Err(Error::DimensionMismatch { left: x.n(), right: n });
    }
    let pq = ProofQuantities::new(u, v, unit, x, lambda)?;
    let factor = 2.0 * lambda - (n as f64 + 1.0);
    Ok(pq.exp_alpha().to_element()?.scale(Complex64::new(factor, 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{cauchy_kernel, f_kernel, fsq_constants, Form};
    use crate::sampling::random_in_shell;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn identity(x: &Paravector) -> Result<CliffordElement> {
        x.to_element()
    }

    fn square(x: &Paravector) -> Result<CliffordElement> {
        x.mul_paravector(x)
    }

    fn cube(x: &Paravector) -> Result<CliffordElement> {
        x.mul_paravector(x)?.product(&x.to_element()?)
    }

    #[test]
    fn scheme_validation() {
        assert!(FdScheme::new(1e-8, 4).is_err());
        assert!(FdScheme::new(0.1, 4).is_err());
        assert!(FdScheme::new(1e-3, 3).is_err());
        assert!(FdScheme::new(1e-3, 2).is_ok());
    }

    #[test]
    fn dirac_examples() {
        let x = Paravector::new(0.3, vec![0.1, -0.4, 0.2]);
        let constant = |_: &Paravector| CliffordElement::one(3);
        let s = FdScheme::default();
        assert!(fd_dirac_left(&constant, &x, s).unwrap().norm() < 1e-12);
        assert!(fd_dirac_right(&constant, &x, s).unwrap().norm() < 1e-12);
        for d in [fd_dirac_left(&identity, &x, s).unwrap(), fd_dirac_right(&identity, &x, s).unwrap()] {
            assert_abs_diff_eq!(d.coeff(0).re, -2.0, epsilon = 1e-10);
            assert!((&d - &CliffordElement::scalar(3, Complex64::new(-2.0, 0.0)).unwrap()).norm() < 1e-10);
        }
    }

    #[test]
    fn f3_is_monogenic() {
        let s = Paravector::real(3, 2.0);
        let x = Paravector::new(0.0, vec![1.0, 0.0, 0.0]);
        let scheme = FdScheme::default();
        let fl = |y: &Paravector| f_kernel(&s, y, 3, Side::Left);
        let fr = |y: &Paravector| f_kernel(&s, y, 3, Side::Right);
        let f = fl(&x).unwrap();
        assert!(fd_dirac_left(&fl, &x, scheme).unwrap().norm() < 1e-5 * f.norm());
        assert!(fd_dirac_right(&fr, &x, scheme).unwrap().norm() < 1e-5 * f.norm());
    }

    #[test]
    fn laplacian_examples() {
        let x = Paravector::new(0.7, vec![-0.2, 0.5, 1.1]);
        let s = FdScheme::default();
        let norm_sq = |y: &Paravector| CliffordElement::scalar(3, Complex64::new(y.norm_sq(), 0.0));
        assert_abs_diff_eq!(fd_laplacian(&norm_sq, &x, s, 1).unwrap().coeff(0).re, 8.0, epsilon = 1e-8);
        let sq = fd_laplacian(&square, &x, s, 1).unwrap();
        assert!((&sq - &CliffordElement::scalar(3, Complex64::new(-4.0, 0.0)).unwrap()).norm() < 1e-8);
        let cu = fd_laplacian(&cube, &x, s, 1).unwrap();
        let expect = Paravector::new(-12.0 * x.x0, x.v.iter().map(|c| -4.0 * c).collect());
        assert!(cu.distance(&expect.to_element().unwrap()) < 1e-8);
    }

    #[test]
    fn coefficients() {
        assert_eq!(laplacian_coefficient(0, 4), 1.0);
        assert_eq!(laplacian_coefficient(1, 3), -4.0);
        assert_eq!(laplacian_coefficient(2, 5), 64.0);
        for n in [1usize, 3, 5, 7] {
            let g = fsq_constants(n).unwrap().gamma;
            let c = laplacian_coefficient((n as u32 - 1) / 2, n);
            assert!((g.re - c).abs() <= 1e-12 * c.abs() && g.im == 0.0);
        }
    }

    #[test]
    fn closed_form_laplacian_h0_is_the_kernel() {
        let s = Paravector::new(1.0, vec![0.5, 0.5, 0.0]);
        let x = Paravector::new(-0.3, vec![0.0, 0.2, 0.4]);
        for side in Side::BOTH {
            let a = laplacian_sinv_closed_form(&s, &x, 0, 3, side).unwrap();
            let b = cauchy_kernel(&s, &x, Form::II, side).unwrap();
            assert!(a.distance(&b) <= 1e-15 * b.norm());
        }
    }

    #[test]
    fn laplacian_of_kernel_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [3usize, 5] {
            for _ in 0..5 {
                let s = random_in_shell(&mut rng, n, 2.5, 3.0);
                let x = random_in_shell(&mut rng, n, 0.0, 0.5);
                for side in Side::BOTH {
                    let f = |y: &Paravector| cauchy_kernel(&s, y, Form::II, side);
                    let fd = fd_laplacian(&f, &x, FdScheme::default(), 1).unwrap();
                    let cf = laplacian_sinv_closed_form(&s, &x, 1, n, side).unwrap();
                    assert!(fd.distance(&cf) < 1e-6 * cf.norm(), "{}", fd.distance(&cf) / cf.norm());
                }
            }
        }
    }

    #[test]
    fn proof_quantities_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let unit = ImaginaryUnit::new(vec![0.0, 1.0, 1.0]).unwrap();
        for _ in 0..100 {
            let x = random_in_shell(&mut rng, 3, 0.0, 1.0);
            let (u, v) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
            let Ok(pq) = ProofQuantities::new(u, v, &unit, &x, 1.5) else { continue };
            assert!((-1.0..=1.0).contains(&pq.beta));
            let g = pq.gamma_q();
            assert_abs_diff_eq!(g.norm_sq(), pq.a * pq.a + pq.b * pq.b, epsilon = 1e-12 * g.norm_sq());
            let unit_mod = g.mul_paravector(&g.conjugate()).unwrap().scale_real(1.0 / g.norm_sq());
            assert!(unit_mod.distance(&CliffordElement::one(3).unwrap()) < 1e-14);
            // s is the same point after the sign normalisation
            let s0 = Paravector::in_slice(u, v, &unit);
            let s1 = Paravector::in_slice(pq.u, pq.v, &pq.unit);
            assert!(s0.distance(&s1) < 1e-15);
        }
    }

    #[test]
    fn dirac_dichotomy_spot_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let scheme = FdScheme::default();
        for n in [2usize, 3, 4] {
            let unit = crate::clifford::sphere_sample(n, 1, n as u64).unwrap().remove(0);
            for lambda in [1.0, 2.0, (n as f64 + 1.0) / 2.0 - 0.5, (n as f64 + 1.0) / 2.0] {
                let (u, v) = (2.0, 0.8);
                let s = Paravector::in_slice(u, v, &unit);
                let x = random_in_shell(&mut rng, n, 0.2, 0.8);
                let f = |y: &Paravector| k_lambda(&s, y, lambda, Side::Left);
                let fd = fd_dirac_left(&f, &x, scheme).unwrap();
                let cf = dirac_residual_closed_form(u, v, &unit, &x, lambda, n).unwrap();
                let scale = f(&x).unwrap().norm();
                assert!(fd.distance(&cf) < 1e-7 * scale.max(cf.norm()), "n={n} lambda={lambda}");
            }
        }
        let x = Paravector::new(0.1, vec![0.2]);
        let unit = ImaginaryUnit::axis(1, 1).unwrap();
        assert_eq!(dirac_residual_closed_form(1.0, 1.0, &unit, &x, 1.0, 1).unwrap().norm(), 0.0);
    }

    #[test]
    fn fd_convergence_order() {
        let x = Paravector::new(0.4, vec![0.3, -0.2]);
        let field = |y: &Paravector| -> Result<CliffordElement> {
            let e = Complex64::new(y.x0.sin() * y.v[0].exp(), (y.v[1] * 2.0).cos());
            CliffordElement::scalar(2, e)
        };
        let exact = Complex64::new(0.4f64.cos() * 0.3f64.exp(), 0.0);
        for order in [2u8, 4] {
            let e1 = (fd_partial(&field, &x, 0, FdScheme::new(1e-2, order).unwrap()).unwrap().coeff(0) - exact).norm();
            let e2 = (fd_partial(&field, &x, 0, FdScheme::new(5e-3, order).unwrap()).unwrap().coeff(0) - exact).norm();
            let ratio = e1 / e2;
            let expect = 2f64.powi(order as i32);
            assert!((ratio / expect - 1.0).abs() < 0.1, "order {order} ratio {ratio}");
        }
    }
}
