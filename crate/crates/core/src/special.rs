//! Bessel functions of integer and half-integer order, and their zeros.
//!
//! Every order that occurs here is `(n - 2) / 2` or a parameter of the same
//! kind, so only orders in `½ℤ`, `≥ -½`, are supported.

use std::f64::consts::{FRAC_2_PI, PI};

use crate::error::{Error, Result};
use crate::kernels::gamma_fn;

/// An order `ν ∈ ½ℤ` with `ν ≥ -½`, stored as `2ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BesselOrder(i32);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        let twice = 2.0 * nu;
        if twice.fract() != 0.0 || !(-1.0..=200.0).contains(&twice) {
            return Err(Error::InvalidParameter(format!(
                "Bessel order {nu} is not a multiple of 1/2 in [-1/2, 100]"
            )));
        }
        Ok(Self(twice as i32))
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

/// Power series `Σ (-1)^k (x/2)^{2k+ν} / (k! Γ(k+ν+1))`.
fn series(nu: f64, x: f64) -> f64 {
    let half = x / 2.0;
    let q = -half * half;
    let mut term = half.powf(nu) / gamma_fn(nu + 1.0);
    let mut sum = term;
    for k in 1..200 {
        let k = k as f64;
        term *= q / (k * (k + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `J_ν(x)` for `x ≥ 0`.
pub fn bessel_j(order: BesselOrder, x: f64) -> f64 {
    let nu = order.value();
    if x == 0.0 {
        return match order.0 {
            0 => 1.0,
            -1 => f64::INFINITY,
            _ => 0.0,
        };
    }
    if order.is_integer() {
        return libm::jn(order.0 / 2, x);
    }
    if x < 2.0 + nu {
        return series(nu, x);
    }
    // spherical closed forms for ±½, then upward recurrence (stable for x > ν)
    let scale = (FRAC_2_PI / x).sqrt();
    let mut prev = scale * x.cos();
    let mut cur = scale * x.sin();
    let mut mu = 0.5;
    if order.0 == -1 {
        return prev;
    }
    while mu < nu {
        let next = 2.0 * mu / x * cur - prev;
        prev = cur;
        cur = next;
        mu += 1.0;
    }
    cur
}

/// `J'_ν(x) = J_{ν-1}(x) - (ν/x) J_ν(x)`.
fn bessel_j_prime(order: BesselOrder, x: f64) -> f64 {
    let nu = order.value();
    let lower = if order.0 >= 1 {
        bessel_j(BesselOrder(order.0 - 2), x)
    } else if order.0 == 0 {
        -libm::j1(x)
    } else {
        // J_{-3/2}(x) = -J_{-1/2}(x)/x - J_{1/2}(x)
        let s = (FRAC_2_PI / x).sqrt();
        -s * x.cos() / x - s * x.sin()
    };
    if order.0 == 0 {
        return lower;
    }
    lower - nu / x * bessel_j(order, x)
}

/// The `m`-th positive zero of `J_ν` (`m ≥ 1`), by McMahon's expansion refined
/// with Newton steps.
pub fn bessel_zero(order: BesselOrder, m: usize) -> f64 {
    let nu = order.value();
    match order.0 {
        -1 => return (m as f64 - 0.5) * PI,
        1 => return m as f64 * PI,
        _ => {}
    }
    let mu = 4.0 * nu * nu;
    let beta = (m as f64 + nu / 2.0 - 0.25) * PI;
    let b8 = 8.0 * beta;
    let mut x = beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3));
    if m == 1 && nu > 1.0 {
        // McMahon is poor for the first zero of higher orders
        x = x.max(nu + 1.8557571 * nu.cbrt());
    }
    for _ in 0..50 {
        let step = bessel_j(order, x) / bessel_j_prime(order, x);
        let step = step.clamp(-1.0, 1.0);
        x -= step;
        if step.abs() < 1e-15 * x {
            break;
        }
    }
    x
}
