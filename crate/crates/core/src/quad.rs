//! Adaptive Gauss–Kronrod quadrature, a semi-infinite map, and segment-wise
//! summation of oscillatory integrals with Wynn's epsilon algorithm.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances for adaptive integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadTolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Default for QuadTolerance {
    fn default() -> Self {
        Self {
            abs: 1e-14,
            rel: 1e-12,
            max_intervals: 2000,
        }
    }
}

impl QuadTolerance {
    pub fn relative(rel: f64) -> Self {
        Self {
            rel,
            ..Self::default()
        }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// An integral estimate with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
}

/// 15-point Kronrod rule on `[a, b]`, error from the embedded 7-point Gauss rule.
pub fn gauss_kronrod(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> QuadResult {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let pair = f(c - h * x) + f(c + h * x);
        kron += w * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    QuadResult {
        value: kron * h,
        error: ((kron - gauss) * h).abs(),
    }
}

struct Interval {
    a: f64,
    b: f64,
    est: QuadResult,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.est.error == other.est.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.est.error.total_cmp(&other.est.error)
    }
}

/// Globally adaptive bisection until the summed error meets the tolerance.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: QuadTolerance) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0 });
    }
    let first = gauss_kronrod(f, a, b);
    let mut total = first;
    let mut heap = BinaryHeap::new();
    heap.push(Interval { a, b, est: first });
    while total.error > tol.target(total.value) {
        if heap.len() >= tol.max_intervals {
            return Err(Error::NoConvergence(format!(
                "{} subintervals on [{a}, {b}], error {:e}",
                heap.len(),
                total.error
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval cannot be split further in double precision
            heap.push(worst);
            break;
        }
        let left = gauss_kronrod(f, worst.a, mid);
        let right = gauss_kronrod(f, mid, worst.b);
        total.value += left.value + right.value - worst.est.value;
        total.error += left.error + right.error - worst.est.error;
        heap.push(Interval { a: worst.a, b: mid, est: left });
        heap.push(Interval { a: mid, b: worst.b, est: right });
    }
    // re-sum to shed accumulated cancellation in the running totals
    let value = heap.iter().map(|i| i.est.value).sum();
    let error = heap.iter().map(|i| i.est.error).sum();
    Ok(QuadResult { value, error })
}

/// `∫_a^∞ f` via `y = a + t/(1-t)`.
pub fn integrate_semi_infinite(f: &dyn Fn(f64) -> f64, a: f64, tol: QuadTolerance) -> Result<QuadResult> {
    let g = |t: f64| {
        let d = 1.0 - t;
        let v = f(a + t / d);
        if v == 0.0 {
            0.0
        } else {
            v / (d * d)
        }
    };
    integrate(&g, 0.0, 1.0, tol)
}

/// Limit of a sequence of partial sums by Wynn's epsilon algorithm.
pub fn wynn_epsilon(sums: &[f64]) -> f64 {
    let m = sums.len();
    if m < 3 {
        return sums.last().copied().unwrap_or(0.0);
    }
    let mut prev = vec![0.0; m + 1];
    let mut cur: Vec<f64> = sums.to_vec();
    let mut best = *sums.last().unwrap();
    let mut col = 0;
    while cur.len() > 1 {
        let next: Vec<f64> = (0..cur.len() - 1)
            .map(|k| {
                let d = cur[k + 1] - cur[k];
                let inv = if d == 0.0 { f64::INFINITY } else { 1.0 / d };
                prev[k + 1] + inv
            })
            .collect();
        col += 1;
        if next.iter().any(|v| !v.is_finite()) {
            break;
        }
        if col % 2 == 0 {
            best = *next.last().unwrap();
        }
        prev = cur;
        cur = next;
    }
    best
}

/// `∫_{b₀}^∞ f` split at consecutive break points `b₀ < b₁ < …`, each segment
/// integrated adaptively and the partial sums accelerated with Wynn's epsilon.
pub fn integrate_oscillatory(
    f: &dyn Fn(f64) -> f64,
    breaks: &mut dyn Iterator<Item = f64>,
    tol: QuadTolerance,
    max_segments: usize,
) -> Result<QuadResult> {
    const WINDOW: usize = 24;
    let seg_tol = QuadTolerance {
        rel: tol.rel * 1e-2,
        abs: tol.abs * 1e-2,
        ..tol
    };
    let mut a = breaks
        .next()
        .ok_or_else(|| Error::InvalidParameter("no break points".into()))?;
    let mut sum = 0.0;
    let mut err = 0.0;
    let mut partials = Vec::new();
    let mut estimates: Vec<f64> = Vec::new();
    let mut small_run = 0;
    for b in breaks.take(max_segments) {
        let seg = integrate(f, a, b, seg_tol)?;
        sum += seg.value;
        err += seg.error;
        partials.push(sum);
        a = b;

        if seg.value.abs() <= tol.target(sum) * 1e-2 {
            small_run += 1;
            if small_run >= 3 {
                return Ok(QuadResult { value: sum, error: err + seg.value.abs() });
            }
        } else {
            small_run = 0;
        }
        let start = partials.len().saturating_sub(WINDOW);
        let est = wynn_epsilon(&partials[start..]);
        estimates.push(est);
        let k = estimates.len();
        if k >= 8 {
            let d1 = (estimates[k - 1] - estimates[k - 2]).abs();
            let d2 = (estimates[k - 2] - estimates[k - 3]).abs();
            if d1.max(d2) <= tol.target(est) {
                return Ok(QuadResult { value: est, error: err + d1.max(d2) });
            }
        }
    }
    Err(Error::NoConvergence(format!(
        "oscillatory tail after {max_segments} segments, last estimate {:e}",
        estimates.last().copied().unwrap_or(sum)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn kronrod_is_exact_on_polynomials() {
        let r = gauss_kronrod(&|x| x.powi(20), -1.0, 1.0);
        assert_abs_diff_eq!(r.value, 2.0 / 21.0, epsilon = 1e-15);
    }

    #[test]
    fn adaptive_handles_endpoint_singularity() {
        let r = integrate(&|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, QuadTolerance::default()).unwrap();
        assert_abs_diff_eq!(r.value, 2.0, epsilon = 1e-10);
    }

    #[test]
    fn semi_infinite_lorentzian() {
        let r = integrate_semi_infinite(&|x| 1.0 / (1.0 + x * x), 0.0, QuadTolerance::default()).unwrap();
        assert_abs_diff_eq!(r.value, PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn wynn_accelerates_alternating_series() {
        // Σ (-1)^k/(k+1) = ln 2
        let mut s = 0.0;
        let sums: Vec<f64> = (0..20)
            .map(|k| {
                s += if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0);
                s
            })
            .collect();
        assert_abs_diff_eq!(wynn_epsilon(&sums), 2f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn dirichlet_integral() {
        // ∫₀^∞ sin x / x = π/2
        let f = |x: f64| if x == 0.0 { 1.0 } else { x.sin() / x };
        let mut breaks = (0..).map(|k| k as f64 * PI);
        let r = integrate_oscillatory(&f, &mut breaks, QuadTolerance::relative(1e-11), 2000).unwrap();
        assert_abs_diff_eq!(r.value, PI / 2.0, epsilon = 1e-10);
    }
}
