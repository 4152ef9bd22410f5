//! Complexified Clifford algebra ℂ⊗ℝ_n with signature (0, n).
//!
//! Elements are stored densely: one complex coefficient per basis blade,
//! indexed by a bitmask where bit `j - 1` marks the presence of `e_j`. The
//! scalar imaginary unit `i` of the complexification commutes with every
//! blade; `e_j² = -1` and distinct generators anticommute.
//!
//! Paravectors `x = x₀ + Σ xⱼeⱼ` have their own compact type since most of the
//! kernels only ever touch the paravector subspace and the planes ℂ_I.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported number of generators (4096 blades).
pub const MAX_DIM: usize = 12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Sign picked up when the blade `a` is multiplied by the blade `b`.
///
/// Counts the transpositions needed to bring `e_A e_B` into increasing order
/// and adds one factor of `-1` per generator contracted with itself.
#[inline]
pub fn blade_sign(a: usize, b: usize) -> f64 {
    let mut shifted = a >> 1;
    let mut swaps = 0u32;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    swaps += (a & b).count_ones();
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Generator indices (1-based, increasing) of a blade bitmask.
pub fn blade_indices(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|bit| mask & (1 << bit) != 0)
        .map(|bit| bit + 1)
        .collect()
}

/// Bitmask of a blade given by increasing 1-based generator indices.
pub fn blade_mask(n: usize, indices: &[usize]) -> Result<usize> {
    let mut mask = 0usize;
    let mut prev = 0usize;
    for &j in indices {
        if j <= prev || j > n {
            return Err(Error::InvalidParameter(format!(
                "blade {indices:?} is not strictly increasing within 1..={n}"
            )));
        }
        mask |= 1 << (j - 1);
        prev = j;
    }
    Ok(mask)
}

/// Blade masks of ℝ_n ordered by grade, then lexicographically by indices.
pub fn canonical_blades(n: usize) -> Vec<usize> {
    let mut masks: Vec<usize> = (0..1usize << n).collect();
    masks.sort_by_cached_key(|&m| (m.count_ones(), blade_indices(m)));
    masks
}

/// Short textual label for a blade: `1` for the scalar, `e1e3` otherwise.
pub fn blade_label(mask: usize) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    blade_indices(mask)
        .into_iter()
        .map(|j| format!("e{j}"))
        .collect()
}

fn check_dim(n: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(n))
    }
}

/// Element of ℂ⊗ℝ_n.
#[derive(Clone, PartialEq)]
pub struct CliffordElement {
    n: usize,
    coeffs: Vec<Complex64>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            n,
            coeffs: vec![ZERO; 1 << n],
        })
    }

    pub fn scalar(n: usize, value: Complex64) -> Result<Self> {
        let mut el = Self::zero(n)?;
        el.coeffs[0] = value;
        Ok(el)
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::scalar(n, Complex64::new(1.0, 0.0))
    }

    /// The generator `e_j` (1-based).
    pub fn generator(n: usize, j: usize) -> Result<Self> {
        let mask = blade_mask(n, &[j])?;
        Self::blade(n, mask, Complex64::new(1.0, 0.0))
    }

    pub fn blade(n: usize, mask: usize, value: Complex64) -> Result<Self> {
        let mut el = Self::zero(n)?;
        if mask >= el.coeffs.len() {
            return Err(Error::InvalidParameter(format!("blade mask {mask} exceeds dimension {n}")));
        }
        el.coeffs[mask] = value;
        Ok(el)
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        check_dim(n)?;
        if coeffs.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                1usize << n,
                coeffs.len()
            )));
        }
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients indexed by blade bitmask.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> Complex64 {
        self.coeffs.get(mask).copied().unwrap_or(ZERO)
    }

    pub fn scalar_part(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Bilinear, associative product. Fails on dimension mismatch.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = vec![ZERO; self.coeffs.len()];
        let nonzero_b: Vec<(usize, Complex64)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(|(m, c)| (m, *c))
            .collect();
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == ZERO {
                continue;
            }
            for &(b, cb) in &nonzero_b {
                out[a ^ b] += ca * cb * blade_sign(a, b);
            }
        }
        Ok(Self {
            n: self.n,
            coeffs: out,
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// ℓ² norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `|self - other| / |other|`, falling back to the absolute distance when
    /// `other` vanishes.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        let d = self.distance(other);
        let scale = other.norm();
        if scale > 0.0 {
            d / scale
        } else {
            d
        }
    }

    /// Non-zero blades in canonical (grade, lexicographic) order.
    pub fn nonzero_blades(&self) -> Vec<(usize, Complex64)> {
        canonical_blades(self.n)
            .into_iter()
            .filter(|&m| self.coeffs[m] != ZERO)
            .map(|m| (m, self.coeffs[m]))
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliffordElement(n={}", self.n)?;
        for (mask, c) in self.nonzero_blades() {
            write!(f, ", {}: {}{:+}i", blade_label(mask), c.re, c.im)?;
        }
        write!(f, ")")
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: Self) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        CliffordElement {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: Self) -> CliffordElement {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        CliffordElement {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl AddAssign<&CliffordElement> for CliffordElement {
    fn add_assign(&mut self, rhs: &CliffordElement) {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.scale_real(-1.0)
    }
}

/// Panics on dimension mismatch; use [`CliffordElement::product`] for the
/// checked version.
impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: Self) -> CliffordElement {
        self.product(rhs).expect("dimension mismatch in Clifford product")
    }
}

#[derive(Serialize, Deserialize)]
struct BladeEntry {
    blade: Vec<usize>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    n: usize,
    coeffs: Vec<BladeEntry>,
}

impl Serialize for CliffordElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            n: self.n,
            coeffs: self
                .nonzero_blades()
                .into_iter()
                .map(|(m, c)| BladeEntry {
                    blade: blade_indices(m),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CliffordElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut el = CliffordElement::zero(repr.n).map_err(D::Error::custom)?;
        for entry in repr.coeffs {
            let mask = blade_mask(repr.n, &entry.blade).map_err(D::Error::custom)?;
            el.coeffs[mask] += Complex64::new(entry.re, entry.im);
        }
        Ok(el)
    }
}

/// A point `x₀ + Σ xⱼeⱼ` of ℝ^{n+1}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Paravector {
    pub x0: f64,
    pub v: Vec<f64>,
}

impl Paravector {
    pub fn new(x0: f64, v: Vec<f64>) -> Self {
        Self { x0, v }
    }

    pub fn real(n: usize, x0: f64) -> Self {
        Self { x0, v: vec![0.0; n] }
    }

    /// From the coordinates `(x₀, x₁, …, x_n)`.
    pub fn from_coords(coords: &[f64]) -> Result<Self> {
        match coords.split_first() {
            Some((&x0, rest)) if !rest.is_empty() => Ok(Self::new(x0, rest.to_vec())),
            _ => Err(Error::InvalidParameter(
                "a paravector needs at least two coordinates".into(),
            )),
        }
    }

    /// `x₀ + r·I`.
    pub fn in_slice(x0: f64, r: f64, unit: &ImaginaryUnit) -> Self {
        Self {
            x0,
            v: unit.components().iter().map(|c| c * r).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn coords(&self) -> Vec<f64> {
        std::iter::once(self.x0).chain(self.v.iter().copied()).collect()
    }

    pub fn norm_sq(&self) -> f64 {
        self.x0 * self.x0 + self.vector_norm_sq()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn vector_norm_sq(&self) -> f64 {
        self.v.iter().map(|c| c * c).sum()
    }

    /// `|x̲|`.
    pub fn vector_norm(&self) -> f64 {
        self.vector_norm_sq().sqrt()
    }

    pub fn is_real(&self) -> bool {
        self.v.iter().all(|&c| c == 0.0)
    }

    pub fn conjugate(&self) -> Self {
        Self {
            x0: self.x0,
            v: self.v.iter().map(|c| -c).collect(),
        }
    }

    /// `conj(x) / |x|²`.
    pub fn inverse(&self) -> Result<Self> {
        let nsq = self.norm_sq();
        if nsq == 0.0 {
            return Err(Error::ZeroInverse);
        }
        let c = self.conjugate();
        Ok(Self {
            x0: c.x0 / nsq,
            v: c.v.iter().map(|x| x / nsq).collect(),
        })
    }

    /// `I_x = x̲ / |x̲|`.
    pub fn imaginary_unit(&self) -> Result<ImaginaryUnit> {
        ImaginaryUnit::new(self.v.clone())
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            x0: self.x0 * factor,
            v: self.v.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add_real(&self, r: f64) -> Self {
        Self {
            x0: self.x0 + r,
            v: self.v.clone(),
        }
    }

    /// Euclidean distance in ℝ^{n+1}.
    pub fn distance(&self, other: &Self) -> f64 {
        (self - other).norm()
    }

    pub fn to_element(&self) -> Result<CliffordElement> {
        let n = self.n();
        let mut el = CliffordElement::zero(n)?;
        el.coeffs[0] = Complex64::new(self.x0, 0.0);
        for (j, &c) in self.v.iter().enumerate() {
            el.coeffs[1 << j] = Complex64::new(c, 0.0);
        }
        Ok(el)
    }

    /// Paravector times paravector, landing in grades 0, 1 and 2.
    pub fn mul_paravector(&self, other: &Self) -> Result<CliffordElement> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let n = self.n();
        let mut el = CliffordElement::zero(n)?;
        let dot: f64 = self.v.iter().zip(&other.v).map(|(a, b)| a * b).sum();
        el.coeffs[0] = Complex64::new(self.x0 * other.x0 - dot, 0.0);
        for j in 0..n {
            el.coeffs[1 << j] = Complex64::new(self.x0 * other.v[j] + other.x0 * self.v[j], 0.0);
        }
        // e_j e_k = e_{jk} for j < k, and e_k e_j = -e_{jk}
        for j in 0..n {
            for k in j + 1..n {
                let wedge = self.v[j] * other.v[k] - self.v[k] * other.v[j];
                el.coeffs[(1 << j) | (1 << k)] = Complex64::new(wedge, 0.0);
            }
        }
        Ok(el)
    }
}

impl Sub for &Paravector {
    type Output = Paravector;
    fn sub(self, rhs: Self) -> Paravector {
        assert_eq!(self.n(), rhs.n(), "dimension mismatch");
        Paravector {
            x0: self.x0 - rhs.x0,
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for &Paravector {
    type Output = Paravector;
    fn add(self, rhs: Self) -> Paravector {
        assert_eq!(self.n(), rhs.n(), "dimension mismatch");
        Paravector {
            x0: self.x0 + rhs.x0,
            v: self.v.iter().zip(&rhs.v).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Unit vector `I ∈ 𝕊`, so that `I² = -1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImaginaryUnit {
    components: Vec<f64>,
}

impl ImaginaryUnit {
    /// Normalizes `v`; fails if it vanishes.
    pub fn new(v: Vec<f64>) -> Result<Self> {
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if v.is_empty() || norm == 0.0 {
            return Err(Error::RealParavector);
        }
        Ok(Self {
            components: v.into_iter().map(|c| c / norm).collect(),
        })
    }

    /// The generator `e_j` itself as an imaginary unit.
    pub fn axis(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::InvalidParameter(format!("axis {j} outside 1..={n}")));
        }
        let mut v = vec![0.0; n];
        v[j - 1] = 1.0;
        Self::new(v)
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn negated(&self) -> Self {
        Self {
            components: self.components.iter().map(|c| -c).collect(),
        }
    }

    pub fn to_paravector(&self) -> Paravector {
        Paravector::new(0.0, self.components.clone())
    }

    pub fn to_element(&self) -> Result<CliffordElement> {
        self.to_paravector().to_element()
    }
}

/// `k` reproducible unit vectors of 𝕊 ⊂ ℝⁿ.
///
/// For `n = 1` the sphere is `{±e₁}` and `+e₁` is returned every time.
pub fn sphere_sample(n: usize, k: usize, seed: u64) -> Result<Vec<ImaginaryUnit>> {
    check_dim(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("sample count must be at least 1".into()));
    }
    if n == 1 {
        return Ok(vec![ImaginaryUnit::axis(1, 1)?; k]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
        if v.iter().map(|c| c * c).sum::<f64>() > 1e-12 {
            out.push(ImaginaryUnit::new(v)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn generator_squares_to_minus_one() {
        for n in 1..=5 {
            for j in 1..=n {
                let e = CliffordElement::generator(n, j).unwrap();
                let sq = &e * &e;
                assert_eq!(sq, CliffordElement::scalar(n, c(-1.0)).unwrap());
            }
        }
    }

    #[test]
    fn generators_anticommute() {
        let n = 4;
        for l in 1..=n {
            for m in 1..=n {
                if l == m {
                    continue;
                }
                let el = CliffordElement::generator(n, l).unwrap();
                let em = CliffordElement::generator(n, m).unwrap();
                let sum = &(&el * &em) + &(&em * &el);
                assert_eq!(sum.norm(), 0.0);
            }
        }
    }

    #[test]
    fn unit_is_neutral() {
        let n = 3;
        let a = CliffordElement::from_coeffs(
            n,
            (0..8).map(|k| Complex64::new(k as f64, -(k as f64) / 3.0)).collect(),
        )
        .unwrap();
        let one = CliffordElement::one(n).unwrap();
        assert_eq!(&one * &a, a);
        assert_eq!(&a * &one, a);
    }

    #[test]
    fn mismatched_dimensions_are_rejected() {
        let a = CliffordElement::one(2).unwrap();
        let b = CliffordElement::one(3).unwrap();
        assert!(matches!(a.product(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn dimension_cap() {
        assert!(CliffordElement::zero(0).is_err());
        assert!(CliffordElement::zero(MAX_DIM + 1).is_err());
        assert!(CliffordElement::zero(MAX_DIM).is_ok());
    }

    #[test]
    fn conjugate_examples() {
        let zero = Paravector::new(0.0, vec![0.0]);
        assert_eq!(zero.conjugate(), zero);
        let x = Paravector::new(1.0, vec![2.0, 3.0]);
        assert_eq!(x.conjugate(), Paravector::new(1.0, vec![-2.0, -3.0]));
        let prod = x.conjugate().to_element().unwrap().product(&x.to_element().unwrap()).unwrap();
        assert_eq!(prod, CliffordElement::scalar(2, c(14.0)).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let two = Paravector::new(2.0, vec![0.0]);
        assert_eq!(two.inverse().unwrap(), Paravector::new(0.5, vec![0.0]));
        let e1 = Paravector::new(0.0, vec![1.0]);
        assert_eq!(e1.inverse().unwrap(), Paravector::new(0.0, vec![-1.0]));
        let x = Paravector::new(1.0, vec![1.0, 0.0]);
        let inv = x.inverse().unwrap();
        assert_eq!(inv, Paravector::new(0.5, vec![-0.5, 0.0]));
        let one = x.mul_paravector(&inv).unwrap();
        assert!(one.distance(&CliffordElement::one(2).unwrap()) < 1e-14);
        assert!(matches!(Paravector::real(3, 0.0).inverse(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn imaginary_unit_examples() {
        let i = Paravector::new(3.0, vec![4.0, 0.0]).imaginary_unit().unwrap();
        assert_eq!(i.components(), &[1.0, 0.0]);
        let i = Paravector::new(0.0, vec![3.0, 4.0]).imaginary_unit().unwrap();
        assert_abs_diff_eq!(i.components()[0], 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(i.components()[1], 0.8, epsilon = 1e-15);
        let err = Paravector::real(2, 5.0).imaginary_unit().unwrap_err();
        assert_eq!(err.to_string(), "real paravector has no canonical unit");
    }

    #[test]
    fn paravector_fast_product_matches_blade_product() {
        let x = Paravector::new(0.3, vec![1.0, -2.0, 0.5]);
        let y = Paravector::new(-1.1, vec![0.2, 0.7, 3.0]);
        let fast = x.mul_paravector(&y).unwrap();
        let slow = x.to_element().unwrap().product(&y.to_element().unwrap()).unwrap();
        assert!(fast.distance(&slow) < 1e-15);
    }

    #[test]
    fn sphere_samples() {
        let one = sphere_sample(1, 1, 99).unwrap();
        assert_eq!(one[0].components(), &[1.0]);
        let units = sphere_sample(2, 3, 7).unwrap();
        assert_eq!(units.len(), 3);
        for u in &units {
            let e = u.to_element().unwrap();
            let sq = &e * &e;
            assert!(sq.distance(&CliffordElement::scalar(2, c(-1.0)).unwrap()) < 1e-14);
        }
        let u = &sphere_sample(3, 1, 1).unwrap()[0];
        let norm: f64 = u.components().iter().map(|c| c * c).sum::<f64>().sqrt();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-14);
        assert_eq!(sphere_sample(3, 4, 5).unwrap(), sphere_sample(3, 4, 5).unwrap());
        assert!(sphere_sample(0, 1, 0).is_err());
    }

    #[test]
    fn canonical_order_is_grade_then_lex() {
        let labels: Vec<String> = canonical_blades(3).into_iter().map(blade_label).collect();
        assert_eq!(labels, ["1", "e1", "e2", "e3", "e1e2", "e1e3", "e2e3", "e1e2e3"]);
    }

    #[test]
    fn json_layout_omits_zero_blades() {
        let mut el = CliffordElement::zero(3).unwrap();
        el.coeffs[0b101] = Complex64::new(1.5, -2.0);
        el.coeffs[0b010] = Complex64::new(0.0, 1.0);
        let json = serde_json::to_value(&el).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"n": 3, "coeffs": [
                {"blade": [2], "re": 0.0, "im": 1.0},
                {"blade": [1, 3], "re": 1.5, "im": -2.0},
            ]})
        );
        let back: CliffordElement = serde_json::from_value(json).unwrap();
        assert_eq!(back, el);
        let bad = serde_json::json!({"n": 2, "coeffs": [{"blade": [2, 1], "re": 1.0, "im": 0.0}]});
        assert!(serde_json::from_value::<CliffordElement>(bad).is_err());
    }
}
