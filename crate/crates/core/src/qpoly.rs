//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients, together with the q-analogues and cyclotomic machinery the
//! fake-degree computations are phrased in.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial `Σ coeffs[i] q^i`.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c · q^e`
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::new(coeffs)
    }

    /// Sum of `q^e` over the given exponents, with multiplicity.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exps {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The constant term when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Substitute `q ↦ q^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Gcd of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The polynomial divided by its content, with positive leading
    /// coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut content = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            content = -content;
        }
        Self::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Quotient `h` with `self = divisor · h`.
    ///
    /// Fails with [`Error::Divisibility`] unless the quotient over the
    /// rationals exists, has zero remainder and integer coefficients.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        exact_div(self, divisor)
    }

    /// Remainder of `self` modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        let lead = modulus.leading_coeff().expect("reduction modulo the zero polynomial");
        assert!(lead.is_one(), "rem_monic needs a monic modulus");
        let d = modulus.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let c = r[top].clone();
            if !c.is_zero() {
                for (j, m) in modulus.coeffs.iter().enumerate() {
                    r[top - d + j] -= &c * m;
                }
            }
            r.pop();
        }
        IntPoly::new(r)
    }
}

/// Integer long division. Every quotient coefficient is forced step by step
/// (`lc(divisor)` must divide the running top coefficient), so a failed step
/// means the rational quotient is non-integral or leaves a remainder.
pub fn exact_div(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    let fail = || Error::Divisibility {
        dividend: f.clone(),
        divisor: g.clone(),
    };
    let Some(dg) = g.degree() else {
        return Err(Error::invalid("division by the zero polynomial"));
    };
    let Some(df) = f.degree() else {
        return Ok(IntPoly::zero());
    };
    if df < dg {
        return Err(fail());
    }
    let lc = &g.coeffs[dg];
    let mut r = f.coeffs.clone();
    let mut quot = vec![BigInt::zero(); df - dg + 1];
    for k in (0..=df - dg).rev() {
        let top = &r[k + dg];
        if top.is_zero() {
            continue;
        }
        let (qk, rem) = top.div_rem(lc);
        if !rem.is_zero() {
            return Err(fail());
        }
        for (j, gj) in g.coeffs.iter().enumerate() {
            r[k + j] -= &qk * gj;
        }
        quot[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return Err(fail());
    }
    Ok(IntPoly::new(quot))
}

/// Pseudo-remainder `prem(a, b)` of Knuth's algorithm R.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo-remainder by zero");
    let lc = &b.coeffs[db];
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let top = r.coeffs[dr].clone();
        let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * lc).collect();
        for (j, bj) in b.coeffs.iter().enumerate() {
            next[dr - db + j] -= &top * bj;
        }
        r = IntPoly::new(next);
    }
    r
}

/// Greatest common divisor over the rationals, normalised to a primitive
/// integer polynomial with positive leading coefficient.
pub fn gcd_primitive(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::invalid("gcd of two zero polynomials"));
    }
    let mut a = f.primitive_part();
    let mut b = g.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    Ok(a.primitive_part())
}

/// The q-integer `[n]_q = 1 + q + … + q^{n-1}`.
pub fn q_int(n: i64) -> Result<IntPoly> {
    q_int_scaled(n, 1)
}

/// `[n]_{q^k}`: the q-integer with `q` replaced by `q^k`.
pub fn q_int_scaled(n: i64, k: i64) -> Result<IntPoly> {
    if n < 1 || k < 1 {
        return Err(Error::invalid(format!(
            "q-integer [{n}]_(q^{k}) needs n >= 1 and k >= 1"
        )));
    }
    let (n, k) = (n as usize, k as usize);
    Ok(IntPoly::from_exponents((0..n).map(|i| i * k)))
}

/// `q^n - 1`
pub fn q_pow_minus_one(n: usize) -> IntPoly {
    IntPoly::monomial(1, n) - IntPoly::one()
}

/// The `n`-th cyclotomic polynomial, built from
/// `Φ_n = (q^n − 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::invalid("cyclotomic polynomial index must be >= 1"));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut table: BTreeMap<u64, IntPoly> = BTreeMap::new();
    for &d in &divisors {
        let mut phi = q_pow_minus_one(d as usize);
        for (&e, pe) in table.range(..d) {
            if d % e == 0 {
                phi = exact_div(&phi, pe)?;
            }
        }
        table.insert(d, phi);
    }
    Ok(table.remove(&n).unwrap())
}

/// Exact value of a polynomial at a power of a primitive root of unity,
/// kept as a representative in `ℤ[q]/Φ_n(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootOfUnityValue {
    pub order: u64,
    pub exponent: i64,
    pub representative: IntPoly,
}

impl RootOfUnityValue {
    pub fn is_integer(&self) -> bool {
        self.representative.degree().unwrap_or(0) == 0
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.representative.as_constant()
    }
}

/// `f(ζ_n^m)` for a primitive `n`-th root of unity `ζ_n`.
pub fn eval_at_root_of_unity(f: &IntPoly, n: u64, m: i64) -> Result<RootOfUnityValue> {
    if n == 0 {
        return Err(Error::invalid("root of unity order must be >= 1"));
    }
    let nn = n as i128;
    let mut folded = vec![BigInt::zero(); n as usize];
    for (e, c) in f.coeffs.iter().enumerate() {
        let idx = ((e as i128) * (m as i128)).rem_euclid(nn) as usize;
        folded[idx] += c;
    }
    let representative = IntPoly::new(folded).rem_monic(&cyclotomic(n)?);
    Ok(RootOfUnityValue {
        order: n,
        exponent: m,
        representative,
    })
}

fn binomial_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row
}

/// For palindromic `P` of degree `2d`, the degree-`d` polynomial `ψ` with
/// `P(x) = x^d · ψ(x + 1/x)`.
pub fn palindromic_descend(p: &IntPoly) -> Result<IntPoly> {
    let Some(deg) = p.degree() else {
        return Err(Error::invalid("cannot descend the zero polynomial"));
    };
    if deg % 2 != 0 || !p.is_palindromic() {
        return Err(Error::invalid(format!("{p} is not palindromic of even degree")));
    }
    let d = deg / 2;
    // Laurent polynomial P(x)/x^d; slot i holds the coefficient of x^(i-d).
    let mut laurent = p.coeffs.clone();
    let mut psi = vec![BigInt::zero(); d + 1];
    for k in (0..=d).rev() {
        let c = laurent[d + k].clone();
        if c.is_zero() {
            continue;
        }
        // (x + 1/x)^k = Σ_j C(k, j) x^(k - 2j)
        for (j, b) in binomial_row(k).iter().enumerate() {
            laurent[d + k - 2 * j] -= &c * b;
        }
        psi[k] = c;
    }
    debug_assert!(laurent.iter().all(Zero::is_zero));
    Ok(IntPoly::new(psi))
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::one(), |acc, p| acc * p)
    }
}

impl fmt::Display for IntPoly {
    /// Ascending powers, zero terms omitted: `1 + 2*q - q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// JSON coefficient: a plain number when it fits in `i64`, a decimal string
/// otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct IntPolyRepr {
    coeffs: Vec<CoeffRepr>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IntPolyRepr {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => CoeffRepr::Small(v),
                    None => CoeffRepr::Big(c.to_string()),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IntPolyRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .into_iter()
            .map(|c| match c {
                CoeffRepr::Small(v) => Ok(BigInt::from(v)),
                CoeffRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_ints(c.iter().copied())
    }

    /// Schoolbook convolution on plain integers, independent of `Mul`.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 1]) + p(&[0, 1]), p(&[1, 2]));
        assert_eq!(p(&[3, 0, 2]) + IntPoly::zero(), p(&[3, 0, 2]));
        let sum = p(&[1, -1]) + p(&[0, 1]);
        assert_eq!(sum, IntPoly::one());
        assert_eq!(sum.degree(), Some(0));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 1]) * p(&[1, 0, 1]), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[4, 0, -1]) * IntPoly::one(), p(&[4, 0, -1]));
        let expected = convolve(&[1, 1, 1], &[1, 1]);
        assert_eq!(expected, vec![1, 2, 2, 1]);
        assert_eq!(q_int(3).unwrap() * q_int(2).unwrap(), p(&expected));
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1).unwrap(), IntPoly::one());
        assert_eq!(q_int(2).unwrap(), p(&[1, 1]));
        assert_eq!(q_int(10).unwrap(), p(&[1; 10]));
        assert!(q_int(0).is_err());
        assert!(q_int(-3).is_err());
        assert_eq!(q_int_scaled(3, 2).unwrap(), p(&[1, 0, 1, 0, 1]));
        assert_eq!(q_int_scaled(2, 6).unwrap(), p(&[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(q_int_scaled(7, 1).unwrap(), q_int(7).unwrap());
        assert!(q_int_scaled(3, 0).is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(q_int(4).unwrap().exact_div(&q_int(2).unwrap()).unwrap(), p(&[1, 0, 1]));
        let f = p(&[2, -1, 7]);
        assert_eq!(f.exact_div(&IntPoly::one()).unwrap(), f);
        // [10]_q = [2]_q · [5]_{q^2}, checked by expansion first
        let expanded = convolve(&[1, 1], &[1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(expanded, vec![1; 10]);
        assert_eq!(
            q_int(10).unwrap().exact_div(&q_int(2).unwrap()).unwrap(),
            q_int_scaled(5, 2).unwrap()
        );
    }

    #[test]
    fn exact_division_failures() {
        let err = q_int(3).unwrap().exact_div(&q_int(2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Divisibility { .. }));
        // divisible over Q only: (2 + 2q) / (2 + 4q) has no integral quotient
        assert!(p(&[1, 1]).exact_div(&p(&[2, 2])).is_err());
        assert_eq!(p(&[2, 2]).exact_div(&p(&[1, 1])).unwrap(), IntPoly::constant(2));
        assert!(p(&[1]).exact_div(&IntPoly::zero()).is_err());
        assert!(p(&[1, 1]).exact_div(&p(&[1, 1, 1])).is_err());
        assert_eq!(IntPoly::zero().exact_div(&p(&[1, 1])).unwrap(), IntPoly::zero());
    }

    #[test]
    fn gcd_examples() {
        let f4_codegrees = IntPoly::from_exponents([0, 4, 6, 10]);
        assert_eq!(
            gcd_primitive(&q_int(12).unwrap(), &f4_codegrees).unwrap(),
            q_int_scaled(2, 6).unwrap()
        );
        let h3_codegrees = IntPoly::from_exponents([0, 4, 8]);
        assert_eq!(
            gcd_primitive(&q_int(10).unwrap(), &h3_codegrees).unwrap(),
            IntPoly::one()
        );
        let f = p(&[-6, 0, 4]);
        assert_eq!(gcd_primitive(&f, &f).unwrap(), p(&[-3, 0, 2]));
        assert_eq!(gcd_primitive(&f, &IntPoly::zero()).unwrap(), p(&[-3, 0, 2]));
        assert!(gcd_primitive(&IntPoly::zero(), &IntPoly::zero()).is_err());
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        // (q^12 - 1) / (Φ1 Φ2 Φ3 Φ4 Φ6), with the small factors written out
        let small = [p(&[-1, 1]), p(&[1, 1]), p(&[1, 1, 1]), p(&[1, 0, 1]), p(&[1, -1, 1])];
        let denom: IntPoly = small.into_iter().product();
        let oracle = q_pow_minus_one(12).exact_div(&denom).unwrap();
        assert_eq!(oracle, p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), oracle);
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn root_of_unity_examples() {
        let v = eval_at_root_of_unity(&q_int(2).unwrap(), 2, 1).unwrap();
        assert!(v.is_integer());
        assert_eq!(v.as_integer().unwrap(), BigInt::zero());

        let f = p(&[5, -2, 0, 7]);
        let v = eval_at_root_of_unity(&f, 9, 0).unwrap();
        assert_eq!(v.as_integer().unwrap(), BigInt::from(10));

        // A2: [3]_q[2]_q at a primitive cube root of unity
        let f = q_int(3).unwrap() * q_int(2).unwrap();
        let v = eval_at_root_of_unity(&f, 3, 1).unwrap();
        assert_eq!(v.as_integer().unwrap(), BigInt::zero());

        // q at ζ_4 is not an integer
        let v = eval_at_root_of_unity(&p(&[0, 1]), 4, 1).unwrap();
        assert!(!v.is_integer());
        // negative exponents wrap: ζ_4^{-1} = -ζ_4 = -q
        let v = eval_at_root_of_unity(&p(&[0, 1]), 4, -1).unwrap();
        assert_eq!(v.representative, p(&[0, 0, 0, 1]).rem_monic(&cyclotomic(4).unwrap()));
        assert_eq!(v.representative, p(&[0, -1]));
    }

    /// `x^d ψ(x + 1/x)` computed directly, independent of the descent.
    fn lift(psi: &IntPoly) -> IntPoly {
        let d = psi.degree().unwrap();
        let x_plus_inv = p(&[1, 0, 1]); // x · (x + 1/x) = x^2 + 1
        let mut total = IntPoly::zero();
        for (k, c) in psi.coeffs().iter().enumerate() {
            let mut term = IntPoly::constant(c.clone());
            for _ in 0..k {
                term = term * &x_plus_inv;
            }
            total = total + term.shift(d - k);
        }
        total
    }

    #[test]
    fn palindromic_descent_examples() {
        let phi10 = cyclotomic(10).unwrap();
        assert_eq!(phi10, p(&[1, -1, 1, -1, 1]));
        let golden = palindromic_descend(&phi10).unwrap();
        assert_eq!(golden, p(&[-1, -1, 1]));
        assert_eq!(lift(&golden), phi10);

        let phi8 = cyclotomic(8).unwrap();
        let root2 = palindromic_descend(&phi8).unwrap();
        assert_eq!(root2, p(&[-2, 0, 1]));
        assert_eq!(lift(&root2), phi8);

        assert_eq!(palindromic_descend(&cyclotomic(4).unwrap()).unwrap(), p(&[0, 1]));
        assert!(palindromic_descend(&p(&[1, 2, 3])).is_err());
        assert!(palindromic_descend(&p(&[1, 1])).is_err());
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[1, 2, 0, 1]).to_string(), "1 + 2*q + q^3");
        assert_eq!(p(&[1, 0, -1, 0, 1]).to_string(), "1 - q^2 + q^4");
        assert_eq!(p(&[0, -1, 3]).to_string(), "-q + 3*q^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(
            serde_json::to_string(&p(&[1, 2, 2, 1])).unwrap(),
            r#"{"coeffs":[1,2,2,1]}"#
        );
        let big = IntPoly::constant(BigInt::from(1u8) << 80);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"{"coeffs":["1208925819614629174706176"]}"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&json).unwrap(), big);
        let parsed: IntPoly = serde_json::from_str(r#"{"coeffs":[0,1,0,0]}"#).unwrap();
        assert_eq!(parsed, p(&[0, 1]));
    }
}
