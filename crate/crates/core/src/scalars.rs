//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`CyclotomicScalar`] is a residue modulo the `N`-th cyclotomic
//! polynomial `Φ_N`, stored as `φ(N)` rational coefficients in the power
//! basis `1, ζ, ζ², …`. Since `Φ_N` is the minimal polynomial of `ζ_N`,
//! two scalars at the same level are equal exactly when their coefficient
//! vectors are equal. Scalars at different levels are compared and combined
//! after coercion into `Q(ζ_lcm)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported cyclotomic level.
pub const MAX_LEVEL: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cyclotomic level {0} is outside 1..={MAX_LEVEL}")]
    LevelOutOfRange(u64),
    #[error("coefficient vector has length {got}, level {level} needs {expected}")]
    BadLength { level: u32, expected: usize, got: usize },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("malformed integer literal `{0}`")]
    BadInteger(String),
}

fn check_level(level: u64) -> Result<u32, ScalarError> {
    if level == 0 || level > MAX_LEVEL {
        return Err(ScalarError::LevelOutOfRange(level));
    }
    Ok(level as u32)
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Exact division of `num` by the monic polynomial `den` (coefficients low
/// to high). Panics if the remainder is nonzero; callers only divide by
/// known factors.
fn divide_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quot
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cyclotomic_cached(n: u32) -> Arc<Vec<i64>> {
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut poly = vec![0i128; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d: Vec<i128> = cyclotomic_cached(d).iter().map(|&c| c as i128).collect();
        poly = divide_monic(&poly, &phi_d);
    }
    let poly: Arc<Vec<i64>> = Arc::new(
        poly.into_iter()
            .map(|c| i64::try_from(c).expect("cyclotomic coefficient exceeds i64"))
            .collect(),
    );
    poly_cache().lock().unwrap().insert(n, poly.clone());
    poly
}

/// The `n`-th cyclotomic polynomial, coefficients from degree 0 upwards.
pub fn cyclotomic_polynomial(n: u32) -> Result<Vec<i64>, ScalarError> {
    let n = check_level(n as u64)?;
    Ok(cyclotomic_cached(n).as_ref().clone())
}

/// An exact element of `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct CyclotomicScalar {
    level: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicScalar {
    pub fn zero(level: u32) -> Result<Self, ScalarError> {
        let level = check_level(level as u64)?;
        Ok(Self { level, coeffs: vec![BigRational::zero(); euler_phi(level)] })
    }

    pub fn one(level: u32) -> Result<Self, ScalarError> {
        Self::from_rational(level, BigRational::one())
    }

    pub fn from_rational(level: u32, q: BigRational) -> Result<Self, ScalarError> {
        let mut s = Self::zero(level)?;
        s.coeffs[0] = q;
        Ok(s)
    }

    /// Rational `num/den` at level 1.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self {
            level: 1,
            coeffs: vec![BigRational::new(BigInt::from(num), BigInt::from(den))],
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    /// `ζ_N^k`; `k` is read modulo `N`.
    pub fn root_of_unity(level: u32, k: i64) -> Result<Self, ScalarError> {
        let level = check_level(level as u64)?;
        let e = k.rem_euclid(level as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Ok(Self { level, coeffs: reduce(level, raw) })
    }

    /// Builds a scalar from a raw coefficient vector of any length, reducing
    /// modulo `Φ_N`.
    pub fn from_power_coeffs(level: u32, raw: Vec<BigRational>) -> Result<Self, ScalarError> {
        let level = check_level(level as u64)?;
        Ok(Self { level, coeffs: reduce(level, raw) })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        // The power basis of Q(ζ_N) modulo Φ_N is linearly independent, so a
        // rational element has all higher coefficients zero.
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the scalar in `Q(ζ_target)`; `target` must be a multiple
    /// of the current level.
    pub fn coerce(&self, target: u32) -> Result<Self, ScalarError> {
        let target = check_level(target as u64)?;
        assert!(target % self.level == 0, "coercion target must be a multiple of the level");
        if target == self.level {
            return Ok(self.clone());
        }
        let step = (target / self.level) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Ok(Self { level: target, coeffs: reduce(target, raw) })
    }

    fn common_level(&self, other: &Self) -> Result<(Self, Self), ScalarError> {
        let l = (self.level as u64).lcm(&(other.level as u64));
        let l = check_level(l)?;
        Ok((self.coerce(l)?, other.coerce(l)?))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let (a, b) = self.common_level(other)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(Self { level: a.level, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let (a, b) = self.common_level(other)?;
        let d = a.coeffs.len();
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Ok(Self { level: a.level, coeffs: reduce(a.level, raw) })
    }

    pub fn checked_eq(&self, other: &Self) -> Result<bool, ScalarError> {
        let (a, b) = self.common_level(other)?;
        Ok(a.coeffs == b.coeffs)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { level: self.level, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Lowest level at which this value is representable.
    ///
    /// Tries every divisor of the current level in increasing order and
    /// keeps the first one whose coercion reproduces the value.
    pub fn normalized(&self) -> Self {
        for d in divisors(self.level) {
            if let Some(s) = self.try_descend(d) {
                return s;
            }
        }
        self.clone()
    }

    fn try_descend(&self, d: u32) -> Option<Self> {
        if d == self.level {
            return Some(self.clone());
        }
        let basis: Vec<Self> = (0..euler_phi(d))
            .map(|k| Self::root_of_unity(d, k as i64).unwrap().coerce(self.level).unwrap())
            .collect();
        let sol = solve_rational(&basis, &self.coeffs)?;
        let cand = Self { level: d, coeffs: sol };
        if cand.coerce(self.level).ok()?.coeffs == self.coeffs {
            Some(cand)
        } else {
            None
        }
    }

    /// Floating-point approximation `(re, im)`; display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * k as f64 / self.level as f64;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    /// Decimal rendering for reports. Exact comparisons never use this.
    pub fn decimal(&self) -> String {
        let (re, im) = self.to_complex();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.12}")
        } else {
            format!("{re:.12}{}{:.12}i", if im < 0.0 { "-" } else { "+" }, im.abs())
        }
    }

    pub fn to_record(&self) -> ScalarRecord {
        ScalarRecord {
            level: self.level,
            numerators: self.coeffs.iter().map(|c| IntLiteral::from_bigint(c.numer())).collect(),
            denominators: self.coeffs.iter().map(|c| IntLiteral::from_bigint(c.denom())).collect(),
        }
    }

    pub fn from_record(rec: &ScalarRecord) -> Result<Self, ScalarError> {
        let level = check_level(rec.level as u64)?;
        let expected = euler_phi(level);
        if rec.numerators.len() != expected || rec.denominators.len() != expected {
            return Err(ScalarError::BadLength {
                level,
                expected,
                got: rec.numerators.len().max(rec.denominators.len()),
            });
        }
        let mut coeffs = Vec::with_capacity(expected);
        for (n, d) in rec.numerators.iter().zip(&rec.denominators) {
            let d = d.to_bigint()?;
            if d.is_zero() {
                return Err(ScalarError::ZeroDenominator);
            }
            coeffs.push(BigRational::new(n.to_bigint()?, d));
        }
        Ok(Self { level, coeffs })
    }
}

/// Solves `Σ x_k basis_k = target` for rational `x` by Gaussian elimination
/// on the coefficient vectors; `None` if inconsistent.
fn solve_rational(basis: &[CyclotomicScalar], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let cols = basis.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b.coeffs[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

fn reduce(level: u32, mut raw: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_cached(level);
    let d = phi.len() - 1;
    if raw.len() < d {
        raw.resize(d, BigRational::zero());
        return raw;
    }
    for i in (d..raw.len()).rev() {
        let c = std::mem::replace(&mut raw[i], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, &p) in phi[..d].iter().enumerate() {
            if p != 0 {
                raw[i - d + j] -= &c * BigInt::from(p);
            }
        }
    }
    raw.truncate(d);
    raw
}

impl PartialEq for CyclotomicScalar {
    /// Panics only if the common level exceeds [`MAX_LEVEL`].
    fn eq(&self, other: &Self) -> bool {
        self.checked_eq(other).expect("cyclotomic level overflow in comparison")
    }
}

impl Eq for CyclotomicScalar {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CyclotomicScalar> for &CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
                self.$checked(rhs).expect("cyclotomic level overflow")
            }
        }
        impl $tr for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        -&self
    }
}

impl Sub<&CyclotomicScalar> for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self + &(-rhs)
    }
}

impl Sub for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
        &self - &rhs
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match k {
                0 => format!("{mag}"),
                _ => {
                    let z = if k == 1 { format!("ζ{}", self.level) } else { format!("ζ{}^{k}", self.level) };
                    if mag.is_one() { z } else { format!("{mag}·{z}") }
                }
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

/// An integer that serializes as a JSON number when it fits in `i64` and as
/// a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntLiteral {
    Small(i64),
    Big(String),
}

impl IntLiteral {
    fn from_bigint(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntLiteral::Small(v),
            None => IntLiteral::Big(n.to_string()),
        }
    }

    fn to_bigint(&self) -> Result<BigInt, ScalarError> {
        match self {
            IntLiteral::Small(v) => Ok(BigInt::from(*v)),
            IntLiteral::Big(s) => s.parse().map_err(|_| ScalarError::BadInteger(s.clone())),
        }
    }
}

/// Wire form of a scalar: the level plus parallel numerator and
/// denominator arrays of the power-basis coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRecord {
    pub level: u32,
    pub numerators: Vec<IntLiteral>,
    pub denominators: Vec<IntLiteral>,
}

impl Serialize for CyclotomicScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rec = ScalarRecord::deserialize(deserializer)?;
        CyclotomicScalar::from_record(&rec).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent route: Φ_N = Π_{d|N} (x^d - 1)^{μ(N/d)}.
    fn mobius(mut n: u32) -> i32 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if n > 1 {
            m = -m;
        }
        m
    }

    fn cyclotomic_mobius(n: u32) -> Vec<i64> {
        // Power series mod x^{n+1}; multiply/divide by (x^d - 1) = -(1 - x^d).
        let len = n as usize + 1;
        let mut series = vec![0i64; len];
        series[0] = 1;
        let mut sign = 1i64;
        for d in divisors(n) {
            let mu = mobius(n / d);
            let d = d as usize;
            match mu {
                1 => {
                    // multiply by (1 - x^d)
                    for i in (d..len).rev() {
                        series[i] -= series[i - d];
                    }
                    sign = -sign;
                }
                -1 => {
                    // divide by (1 - x^d)
                    for i in d..len {
                        series[i] += series[i - d];
                    }
                    sign = -sign;
                }
                _ => {}
            }
        }
        let deg = euler_phi(n);
        series.truncate(deg + 1);
        series.iter().map(|c| c * sign).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap(), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn division_route_matches_mobius_route() {
        for n in 1..=240 {
            assert_eq!(cyclotomic_polynomial(n).unwrap(), cyclotomic_mobius(n), "N = {n}");
        }
        // 105 is the first level with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).unwrap().contains(&-2));
    }

    #[test]
    fn level_bounds() {
        assert_eq!(cyclotomic_polynomial(0), Err(ScalarError::LevelOutOfRange(0)));
        assert!(CyclotomicScalar::zero(10_001).is_err());
        let a = CyclotomicScalar::root_of_unity(9_973, 1).unwrap();
        let b = CyclotomicScalar::root_of_unity(2, 1).unwrap();
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn worked_examples() {
        let z2 = CyclotomicScalar::root_of_unity(2, 1).unwrap();
        assert_eq!(&z2 * &z2, CyclotomicScalar::integer(1));

        let z3 = CyclotomicScalar::root_of_unity(3, 1).unwrap();
        let z3sq = CyclotomicScalar::root_of_unity(3, 2).unwrap();
        assert_eq!(&z3 + &z3sq, CyclotomicScalar::integer(-1));

        // ζ_6 = 1 + ζ_3, since ζ_6² - ζ_6 + 1 = 0 and ζ_3 = ζ_6².
        let z6 = CyclotomicScalar::root_of_unity(6, 1).unwrap();
        let rhs = (&CyclotomicScalar::integer(1) + &z3).coerce(6).unwrap();
        assert_eq!(rhs.level(), 6);
        assert_eq!(z6, rhs);
        assert_eq!(z6.coeffs(), rhs.coeffs());
    }

    #[test]
    fn zeta_to_the_level_is_one() {
        for n in 1..=30u32 {
            let z = CyclotomicScalar::root_of_unity(n, 1).unwrap();
            let mut acc = CyclotomicScalar::one(n).unwrap();
            for _ in 0..n {
                acc = &acc * &z;
            }
            assert_eq!(acc, CyclotomicScalar::integer(1), "N = {n}");
        }
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for n in 2..=24u32 {
            let mut acc = CyclotomicScalar::zero(n).unwrap();
            for k in 0..n {
                acc = &acc + &CyclotomicScalar::root_of_unity(n, k as i64).unwrap();
            }
            assert!(acc.is_zero(), "N = {n}");
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for n in 1..=24u32 {
            for j in 0..n as i64 {
                for k in 0..n as i64 {
                    let lhs = CyclotomicScalar::root_of_unity(n, j + k).unwrap();
                    let rhs = &CyclotomicScalar::root_of_unity(n, j).unwrap()
                        * &CyclotomicScalar::root_of_unity(n, k).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn normalization_finds_lowest_level() {
        let z6 = CyclotomicScalar::root_of_unity(6, 2).unwrap(); // = ζ_3
        assert_eq!(z6.normalized().level(), 3);
        let half = CyclotomicScalar::ratio(1, 2).coerce(12).unwrap();
        assert_eq!(half.normalized().level(), 1);
        assert_eq!(half.normalized().as_rational(), Some(BigRational::new(1.into(), 2.into())));
    }

    #[test]
    fn display_and_decimal() {
        let z = CyclotomicScalar::root_of_unity(4, 1).unwrap();
        assert_eq!(z.to_string(), "ζ4");
        assert_eq!(CyclotomicScalar::ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(CyclotomicScalar::ratio(1, 2).decimal(), "0.500000000000");
        assert_eq!(z.decimal(), "0.000000000000+1.000000000000i");
    }

    #[test]
    fn record_rejects_bad_input() {
        let rec = ScalarRecord {
            level: 3,
            numerators: vec![IntLiteral::Small(1)],
            denominators: vec![IntLiteral::Small(1)],
        };
        assert!(matches!(CyclotomicScalar::from_record(&rec), Err(ScalarError::BadLength { .. })));
        let rec = ScalarRecord {
            level: 1,
            numerators: vec![IntLiteral::Small(1)],
            denominators: vec![IntLiteral::Small(0)],
        };
        assert_eq!(CyclotomicScalar::from_record(&rec).unwrap_err(), ScalarError::ZeroDenominator);
    }
}
