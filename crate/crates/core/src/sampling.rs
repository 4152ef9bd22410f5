//! Reproducible random test points.

use rand::Rng;

use crate::clifford::Paravector;
use crate::error::{Error, Result};
use crate::kernels::distance_to_sphere;

/// Tube half-width around `[x]` excluded by default.
pub const DEFAULT_TUBE: f64 = 0.1;

/// Paravector with coordinates uniform in `[-scale, scale]`.
pub fn random_paravector<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: f64) -> Paravector {
    Paravector::new(
        rng.random_range(-scale..=scale),
        (0..n).map(|_| rng.random_range(-scale..=scale)).collect(),
    )
}

/// A pair `(s, x)` with `s` at least `tube` away from the sphere `[x]`.
pub fn random_admissible_pair<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    scale: f64,
    tube: f64,
) -> (Paravector, Paravector) {
    loop {
        let s = random_paravector(rng, n, scale);
        let x = random_paravector(rng, n, scale);
        if distance_to_sphere(&s, &x) >= tube {
            return (s, x);
        }
    }
}

/// Point whose distance from the origin lies in `[r_min, r_max]`, uniform in
/// direction.
pub fn random_in_shell<R: Rng + ?Sized>(rng: &mut R, n: usize, r_min: f64, r_max: f64) -> Paravector {
    loop {
        let p = random_paravector(rng, n, 1.0);
        let norm = p.norm();
        if norm > 1e-3 && norm <= 1.0 {
            let r = rng.random_range(r_min..=r_max);
            return p.scale(r / norm);
        }
    }
}

/// `count` points `base + t e_axis` with `t` evenly spaced over `[lo, hi]`;
/// axis 0 is the real coordinate.
pub fn grid_line(base: &Paravector, axis: usize, lo: f64, hi: f64, count: usize) -> Result<Vec<Paravector>> {
    let n = base.n();
    if axis > n {
        return Err(Error::InvalidParameter(format!("grid axis x{axis} outside x0..x{n}")));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("grid needs at least one point".into()));
    }
    let step = if count > 1 { (hi - lo) / (count - 1) as f64 } else { 0.0 };
    Ok((0..count)
        .map(|k| {
            let mut c = base.coords();
            c[axis] += lo + step * k as f64;
            Paravector::new(c[0], c[1..].to_vec())
        })
        .collect())
}
