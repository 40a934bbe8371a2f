//! Exact arithmetic in the real field `ℚ(y)`, `y = 2cos(π/M)`.
//!
//! Elements are rational coordinate vectors in the power basis
//! `1, y, …, y^{d-1}` modulo the minimal polynomial of `y`. Signs are decided
//! by isolating `y` with a Sturm sequence and evaluating over shrinking
//! rational enclosures, so no floating point is involved anywhere.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{cyclotomic, palindromic_descend, IntPoly};

/// Dense polynomial over ℚ, lowest degree first, no trailing zeros.
type RatPoly = Vec<BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn rat_derivative(p: &[BigRational]) -> RatPoly {
    let mut d: RatPoly = p.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect();
    trim(&mut d);
    d
}

fn rat_rem(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let top = r.len() - 1;
        let c = &r[top] / lc;
        for (j, bj) in b.iter().enumerate() {
            r[top - db + j] -= &c * bj;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn sturm_sequence(p: &IntPoly) -> Vec<RatPoly> {
    let p0: RatPoly = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let p1 = rat_derivative(&p0);
    let mut seq = vec![p0, p1];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r: RatPoly = rat_rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_variations(seq: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| rat_eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The number field `ℚ(2cos(π/M))` for one bond value `M`.
#[derive(Debug)]
pub struct FieldSpec {
    bond: u32,
    modulus: IntPoly,
    sturm: Vec<RatPoly>,
    isolating: (BigRational, BigRational),
}

/// Width below which the stored isolating interval is considered refined.
const ISOLATION_BITS: usize = 48;

/// Build `ℚ(2cos(π/M))`. The modulus is the descent of `Φ_{2M}`; the
/// generator is identified with its largest real root.
pub fn make_field(bond: u32) -> Result<Arc<FieldSpec>> {
    if bond < 3 {
        return Err(Error::invalid(format!("field bond must be >= 3, got {bond}")));
    }
    let modulus = palindromic_descend(&cyclotomic(2 * bond as u64)?)?;
    let sturm = sturm_sequence(&modulus);
    let mut spec = FieldSpec {
        bond,
        modulus,
        sturm,
        isolating: (rat(-2), rat(2)),
    };
    spec.isolating = spec.isolate_largest_root();
    Ok(Arc::new(spec))
}

impl FieldSpec {
    pub fn bond(&self) -> u32 {
        self.bond
    }

    /// Minimal polynomial `ψ` of the generator.
    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Number of roots of the modulus in the half-open interval `(lo, hi]`.
    pub fn sturm_count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        sign_variations(&self.sturm, lo).saturating_sub(sign_variations(&self.sturm, hi))
    }

    /// Interval `(lo, hi]` containing the generator and no other root.
    pub fn isolating_interval(&self) -> (BigRational, BigRational) {
        self.isolating.clone()
    }

    /// One bisection step on an isolating interval of the generator.
    pub fn refine(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        if lo == hi {
            return (lo.clone(), hi.clone());
        }
        let mid = (lo + hi) / rat(2);
        if self.sturm_count(&mid, hi) == 1 {
            (mid, hi.clone())
        } else {
            (lo.clone(), mid)
        }
    }

    fn isolate_largest_root(&self) -> (BigRational, BigRational) {
        if self.degree() == 1 {
            // ψ = y + c is rational; its root is exact.
            let c = BigRational::from_integer(self.modulus.coeff(0));
            let r = -c;
            return (r.clone(), r);
        }
        let (mut lo, mut hi) = (rat(-2), rat(2));
        while self.sturm_count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / rat(2);
            if self.sturm_count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let eps = BigRational::new(BigInt::one(), BigInt::one() << ISOLATION_BITS);
        while &hi - &lo > eps {
            (lo, hi) = self.refine(&lo, &hi);
        }
        (lo, hi)
    }

    fn reduce(&self, mut coords: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        let m = self.modulus.coeffs();
        while coords.len() > d {
            let top = coords.len() - 1;
            let c = coords.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate().take(d) {
                coords[top - d + j] -= &c * BigRational::from_integer(mj.clone());
            }
        }
        coords.resize(d, BigRational::zero());
        coords
    }
}

/// Element of `ℚ(2cos(π/M))`.
#[derive(Clone)]
pub struct Scalar {
    spec: Arc<FieldSpec>,
    coords: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

impl Scalar {
    pub fn zero(spec: &Arc<FieldSpec>) -> Self {
        Scalar {
            spec: spec.clone(),
            coords: vec![BigRational::zero(); spec.degree()],
        }
    }

    pub fn from_rational(spec: &Arc<FieldSpec>, r: BigRational) -> Self {
        let mut s = Self::zero(spec);
        s.coords[0] = r;
        s
    }

    pub fn from_int(spec: &Arc<FieldSpec>, n: i64) -> Self {
        Self::from_rational(spec, rat(n))
    }

    pub fn one(spec: &Arc<FieldSpec>) -> Self {
        Self::from_int(spec, 1)
    }

    /// The generator `y = 2cos(π/M)`.
    pub fn generator(spec: &Arc<FieldSpec>) -> Self {
        Self::from_coords(spec, vec![rat(0), rat(1)])
    }

    /// Arbitrary-length power-basis coordinates, reduced modulo `ψ`.
    pub fn from_coords(spec: &Arc<FieldSpec>, coords: Vec<BigRational>) -> Self {
        Scalar {
            spec: spec.clone(),
            coords: spec.reduce(coords),
        }
    }

    /// `p(y)` for an integer polynomial `p`.
    pub fn eval_int_poly(spec: &Arc<FieldSpec>, p: &IntPoly) -> Self {
        Self::from_coords(
            spec,
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, when it lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    fn check_same_field(&self, other: &Scalar) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec.bond == other.spec.bond {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.spec.bond,
                right: other.spec.bond,
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(Scalar {
            spec: self.spec.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        Ok(Scalar {
            spec: self.spec.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_field(other)?;
        let d = self.spec.degree();
        if d == 1 {
            return Ok(Scalar {
                spec: self.spec.clone(),
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(Scalar {
            spec: self.spec.clone(),
            coords: self.spec.reduce(prod),
        })
    }

    /// Sign of the real number this element denotes.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else { -1 };
        }
        let (mut lo, mut hi) = self.spec.isolating_interval();
        loop {
            let (vlo, vhi) = self.enclose(&lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            // y is irrational here, so a nonzero element cannot vanish at it
            // and the enclosure eventually separates from zero.
            (lo, hi) = self.spec.refine(&lo, &hi);
        }
    }

    /// Interval enclosure of the value for `y ∈ [lo, hi]`, by Horner's rule
    /// in interval arithmetic.
    fn enclose(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut acc = (BigRational::zero(), BigRational::zero());
        for c in self.coords.iter().rev() {
            let products = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
            let min = products.iter().min().unwrap().clone();
            let max = products.iter().max().unwrap().clone();
            acc = (min + c, max + c);
        }
        acc
    }

    /// Floating point approximation, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let y = 2.0 * (std::f64::consts::PI / self.spec.bond as f64).cos();
        self.coords
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * y + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// Apply a ring operation; `b` is ignored for [`ArithOp::Neg`].
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Neg => Ok(-a),
    }
}

/// `2cos(π/k)` for a bond `k` occurring alongside the field's own bond.
///
/// Only `k ∈ {2, 3, M}` is representable: an irreducible finite Coxeter
/// diagram carries at most one label above 3.
pub fn two_cos(spec: &Arc<FieldSpec>, k: u32) -> Result<Scalar> {
    match k {
        2 => Ok(Scalar::zero(spec)),
        3 => Ok(Scalar::one(spec)),
        k if k == spec.bond => Ok(Scalar::generator(spec)),
        _ => Err(Error::invalid(format!(
            "bond {k} is not representable in Q(2cos(pi/{})): only bonds 2, 3 and {} are \
             (at most one bond above 3 per irreducible diagram)",
            spec.bond, spec.bond
        ))),
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.spec.bond == other.spec.bond && self.coords == other.coords
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec.bond.hash(state);
        self.coords.hash(state);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// Operator forms panic on mixed fields; use `checked_*` when that can occur.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar addition across fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar subtraction across fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar multiplication across fields")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
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
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("y")?,
                _ => write!(f, "y^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar[M={}]({self})", self.spec.bond)
    }
}

/// JSON form `{"coords": ["p/q", ...], "bond": M}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRepr {
    pub coords: Vec<String>,
    pub bond: u32,
}

impl ScalarRepr {
    pub fn to_scalar(&self) -> Result<Scalar> {
        let spec = make_field(self.bond)?;
        let coords = self
            .coords
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|e| Error::invalid(format!("bad rational {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != spec.degree() {
            return Err(Error::invalid(format!(
                "expected {} coordinates for bond {}, got {}",
                spec.degree(),
                self.bond,
                coords.len()
            )));
        }
        Ok(Scalar::from_coords(&spec, coords))
    }
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        ScalarRepr {
            coords: s
                .coords
                .iter()
                .map(|c| format!("{}/{}", c.numer(), c.denom()))
                .collect(),
            bond: s.spec.bond,
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr::from(self).serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn field_moduli() {
        assert_eq!(make_field(5).unwrap().modulus(), &IntPoly::from_ints([-1, -1, 1]));
        assert_eq!(make_field(3).unwrap().modulus(), &IntPoly::from_ints([-1, 1]));
        assert_eq!(make_field(4).unwrap().modulus(), &IntPoly::from_ints([-2, 0, 1]));
        assert!(make_field(2).is_err());
    }

    fn totient(n: u64) -> u64 {
        (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64
    }

    #[test]
    fn field_degree_is_half_totient() {
        for m in 3..=40u32 {
            let spec = make_field(m).unwrap();
            assert_eq!(spec.degree() as u64, totient(2 * m as u64) / 2, "M = {m}");
            assert!(spec.modulus().leading_coeff().unwrap().is_one());
        }
    }

    #[test]
    fn generator_relations() {
        let f5 = make_field(5).unwrap();
        let phi = Scalar::generator(&f5);
        assert_eq!(&phi * &phi, &phi + &Scalar::one(&f5));
        let a = Scalar::from_coords(&f5, vec![q(3, 2), q(-7, 3)]);
        assert_eq!(&a + &Scalar::zero(&f5), a);

        let f4 = make_field(4).unwrap();
        let r2 = Scalar::generator(&f4);
        assert_eq!(&r2 * &r2, Scalar::from_int(&f4, 2));

        for m in [5, 7, 8, 12, 30] {
            let spec = make_field(m).unwrap();
            assert!(Scalar::eval_int_poly(&spec, spec.modulus()).is_zero());
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Scalar::one(&make_field(5).unwrap());
        let b = Scalar::one(&make_field(7).unwrap());
        assert!(matches!(
            arith(&a, &b, ArithOp::Add),
            Err(Error::FieldMismatch { left: 5, right: 7 })
        ));
        assert_eq!(arith(&a, &b, ArithOp::Neg).unwrap(), -&a);
    }

    #[test]
    fn two_cos_values() {
        let spec = make_field(5).unwrap();
        assert!(two_cos(&spec, 2).unwrap().is_zero());
        assert_eq!(two_cos(&spec, 3).unwrap(), Scalar::one(&spec));
        assert_eq!(two_cos(&spec, 5).unwrap(), Scalar::generator(&spec));
        let err = two_cos(&spec, 4).unwrap_err();
        assert!(err.to_string().contains("at most one bond above 3"));
    }

    #[test]
    fn sign_examples() {
        let spec = make_field(5).unwrap();
        assert_eq!(Scalar::zero(&spec).sign(), 0);
        let phi_minus_one = &Scalar::generator(&spec) - &Scalar::one(&spec);
        assert_eq!(phi_minus_one.sign(), 1);
        assert_eq!((-&phi_minus_one).sign(), -1);
        // 2cos(π/12) ≈ 1.9319 sits just below 2 = 2cos(0)
        let spec = make_field(12).unwrap();
        let below_two = &Scalar::from_int(&spec, 2) - &Scalar::generator(&spec);
        assert_eq!(below_two.sign(), 1);
        // (2cos(π/12))^2 = 2 + √3 ≈ 3.732
        let y = Scalar::generator(&spec);
        let y2 = &y * &y;
        assert_eq!((&y2 - &Scalar::from_int(&spec, 4)).sign(), -1);
        assert_eq!((&y2 - &Scalar::from_rational(&spec, q(37, 10))).sign(), 1);
    }

    #[test]
    fn generator_is_largest_root() {
        for m in [4u32, 5, 7, 9, 16, 30, 60] {
            let spec = make_field(m).unwrap();
            let (lo, hi) = spec.isolating_interval();
            assert_eq!(spec.sturm_count(&lo, &hi), 1);
            assert_eq!(spec.sturm_count(&hi, &rat(2)), 0, "no root above y for M = {m}");
            use num_traits::ToPrimitive;
            let y = 2.0 * (std::f64::consts::PI / m as f64).cos();
            assert!(lo.to_f64().unwrap() <= y && y <= hi.to_f64().unwrap());
        }
    }

    #[test]
    fn refinement_keeps_one_root() {
        let spec = make_field(7).unwrap();
        let (mut lo, mut hi) = (rat(1), rat(2));
        assert_eq!(spec.sturm_count(&lo, &hi), 1);
        for _ in 0..60 {
            (lo, hi) = spec.refine(&lo, &hi);
            assert_eq!(spec.sturm_count(&lo, &hi), 1);
        }
    }

    #[test]
    fn json_form() {
        let spec = make_field(5).unwrap();
        let s = Scalar::from_coords(&spec, vec![q(1, 2), q(-3, 1)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"coords":["1/2","-3/1"],"bond":5}"#);
        let repr: ScalarRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(repr.to_scalar().unwrap(), s);
    }

    fn arb_scalar(spec: Arc<FieldSpec>) -> impl Strategy<Value = Scalar> {
        let d = spec.degree();
        prop::collection::vec((-20i64..20, 1i64..6), d)
            .prop_map(move |cs| Scalar::from_coords(&spec, cs.into_iter().map(|(n, den)| q(n, den)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn negation_flips_sign(a in arb_scalar(make_field(5).unwrap())) {
            prop_assert_eq!((-&a).sign(), -a.sign());
        }

        #[test]
        fn squares_are_positive(a in arb_scalar(make_field(9).unwrap())) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!((&a * &a).sign(), 1);
        }

        #[test]
        fn sign_agrees_with_float(a in arb_scalar(make_field(8).unwrap())) {
            let v = a.approx();
            prop_assume!(v.abs() > 1e-9);
            prop_assert_eq!(a.sign(), if v > 0.0 { 1 } else { -1 });
        }
    }
}
