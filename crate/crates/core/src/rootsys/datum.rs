use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::types::GroupType;
use crate::error::{Error, Result};
use crate::scalars::{make_field, two_cos, FieldSpec, Scalar, ScalarRepr};

/// Largest dihedral order accepted by default.
pub const DEFAULT_MAX_DIHEDRAL: u32 = 60;

/// Ring operations shared by integer and number-field coordinates.
pub(crate) trait Ring: Clone + Eq + Hash + Send + Sync {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i8;
}

impl Ring for i64 {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i8 {
        i64::signum(*self) as i8
    }
}

impl Ring for Scalar {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn signum(&self) -> i8 {
        self.sign()
    }
}

/// A root coordinate, Cartan entry or trace: an integer in crystallographic
/// types, an element of `ℚ(2cos(π/M))` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Num {
    Int(i64),
    Field(Scalar),
}

impl Num {
    pub fn is_zero(&self) -> bool {
        match self {
            Num::Int(v) => *v == 0,
            Num::Field(s) => s.is_zero(),
        }
    }

    pub fn sign(&self) -> i8 {
        match self {
            Num::Int(v) => v.cmp(&0) as i8,
            Num::Field(s) => s.sign(),
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Num::Int(v) => Some(*v),
            Num::Field(_) => None,
        }
    }

    /// Floating-point value, for display and numeric cross-checks.
    pub fn approx(&self) -> f64 {
        match self {
            Num::Int(v) => *v as f64,
            Num::Field(s) => s.approx(),
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(v) => write!(f, "{v}"),
            Num::Field(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Num::Int(v) => s.serialize_i64(*v),
            Num::Field(x) => ScalarRepr::from(x).serialize(s),
        }
    }
}

/// Cartan matrix with the convention `s_i(α_j) = α_j − A_{ij} α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanMatrix {
    Int(Vec<Vec<i64>>),
    Field(Vec<Vec<Scalar>>),
}

impl CartanMatrix {
    pub fn entry(&self, i: usize, j: usize) -> Num {
        match self {
            CartanMatrix::Int(a) => Num::Int(a[i][j]),
            CartanMatrix::Field(a) => Num::Field(a[i][j].clone()),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            CartanMatrix::Int(a) => a.len(),
            CartanMatrix::Field(a) => a.len(),
        }
    }
}

/// Numerical data of one irreducible finite Coxeter group.
#[derive(Clone, Debug)]
pub struct CoxeterDatum {
    pub group_type: GroupType,
    pub rank: usize,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub cartan: CartanMatrix,
    /// Simple-root squared lengths; crystallographic types only.
    pub simple_norms: Option<Vec<u8>>,
    pub degrees: Vec<u32>,
    pub exponents: Vec<u32>,
    pub codegrees: Vec<u32>,
    /// Coxeter number, the largest degree.
    pub h: u32,
    pub crystallographic: bool,
    pub simply_laced: bool,
    pub doubly_laced_at_most: bool,
    /// Coordinate field for non-crystallographic types.
    pub field: Option<Arc<FieldSpec>>,
}

impl CoxeterDatum {
    pub fn order(&self) -> u128 {
        self.group_type.order()
    }

    /// `|Φ| = h·ℓ`
    pub fn root_count(&self) -> usize {
        self.h as usize * self.rank
    }

    /// Largest Coxeter matrix entry.
    pub fn max_bond(&self) -> u32 {
        self.coxeter_matrix.iter().flatten().copied().max().unwrap_or(1)
    }

    /// Exponent duality `h − e_i = e_{ℓ+1−i}`.
    pub fn exponent_duality_holds(&self) -> bool {
        let l = self.rank;
        (0..l).all(|i| self.h.checked_sub(self.exponents[i]) == Some(self.exponents[l - 1 - i]))
    }
}

pub fn build_datum(t: GroupType) -> Result<CoxeterDatum> {
    build_datum_with_ceiling(t, DEFAULT_MAX_DIHEDRAL)
}

/// Build the datum, rejecting dihedral types beyond `max_dihedral`.
pub fn build_datum_with_ceiling(t: GroupType, max_dihedral: u32) -> Result<CoxeterDatum> {
    let t = t.checked()?;
    if let GroupType::I2(m) = t {
        if m > max_dihedral {
            return Err(Error::invalid(format!(
                "I2({m}) exceeds the dihedral ceiling {max_dihedral}"
            )));
        }
    }
    let rank = t.rank();
    let coxeter_matrix = t.coxeter_matrix();
    let degrees = t.degrees();
    let exponents: Vec<u32> = degrees.iter().map(|d| d - 1).collect();
    let codegrees: Vec<u32> = exponents.iter().map(|e| e - 1).collect();
    let h = *degrees.last().unwrap();
    let max_bond = coxeter_matrix.iter().flatten().copied().max().unwrap_or(1);
    let simple_norms = t.simple_norms();

    let (cartan, field) = if t.is_crystallographic() {
        let norms = simple_norms.as_ref().unwrap();
        (CartanMatrix::Int(integer_cartan(&coxeter_matrix, norms)?), None)
    } else {
        let spec = make_field(max_bond)?;
        let mut a = vec![vec![Scalar::zero(&spec); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                a[i][j] = if i == j {
                    Scalar::from_int(&spec, 2)
                } else {
                    -two_cos(&spec, coxeter_matrix[i][j])?
                };
            }
        }
        (CartanMatrix::Field(a), Some(spec))
    };

    let datum = CoxeterDatum {
        group_type: t,
        rank,
        coxeter_matrix,
        cartan,
        simple_norms,
        degrees,
        exponents,
        codegrees,
        h,
        crystallographic: t.is_crystallographic(),
        simply_laced: max_bond <= 3,
        doubly_laced_at_most: max_bond <= 4,
        field,
    };
    validate(&datum)?;
    Ok(datum)
}

/// `A_{ij} = 2(α_i, α_j)/(α_i, α_i)` from the Coxeter matrix and the simple
/// root lengths; `2(α_i, α_j) = −√(n_i n_j)·2cos(π/m_{ij})`.
fn integer_cartan(m: &[Vec<u32>], norms: &[u8]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let (ni, nj) = (norms[i] as i64, norms[j] as i64);
            let twice_inner = match m[i][j] {
                1 => 2 * ni,
                2 => 0,
                3 if ni == nj => -ni,
                4 if ni * nj == 2 => -2,
                bond => {
                    return Err(Error::structural(format!(
                        "bond {bond} between simple roots of squared lengths {ni} and {nj} \
                         is not crystallographic"
                    )))
                }
            };
            if twice_inner % ni != 0 {
                return Err(Error::structural("non-integral Cartan entry"));
            }
            a[i][j] = twice_inner / ni;
        }
    }
    Ok(a)
}

fn validate(d: &CoxeterDatum) -> Result<()> {
    if d.degrees.len() != d.rank {
        return Err(Error::structural("degree list length differs from the rank"));
    }
    if !d.exponent_duality_holds() {
        return Err(Error::structural(format!(
            "{}: exponents {:?} violate h - e_i = e_(l+1-i)",
            d.group_type, d.exponents
        )));
    }
    let sum_e: u32 = d.exponents.iter().sum();
    if 2 * sum_e as usize != d.root_count() {
        return Err(Error::structural(format!(
            "{}: sum of exponents {sum_e} is not h*l/2",
            d.group_type
        )));
    }
    for i in 0..d.rank {
        for j in 0..d.rank {
            let (aij, aji) = (d.cartan.entry(i, j), d.cartan.entry(j, i));
            if aij.is_zero() != aji.is_zero() {
                return Err(Error::structural(format!(
                    "A[{i}][{j}] and A[{j}][{i}] disagree on zero"
                )));
            }
            if !d.crystallographic && aij != aji {
                return Err(Error::structural(
                    "non-crystallographic Cartan matrix must be symmetric",
                ));
            }
            if let (Some(norms), Num::Int(x), Num::Int(y)) = (&d.simple_norms, &aij, &aji) {
                if x * norms[i] as i64 != y * norms[j] as i64 {
                    return Err(Error::structural("Cartan matrix is not symmetrised by the norms"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datum_examples() {
        let e8 = build_datum(GroupType::E8).unwrap();
        assert_eq!((e8.h, e8.rank), (30, 8));
        let a1 = build_datum(GroupType::A(1)).unwrap();
        assert_eq!((a1.degrees.clone(), a1.h, a1.exponents.clone()), (vec![2], 2, vec![1]));
        let h4 = build_datum(GroupType::H4).unwrap();
        assert_eq!(h4.h, 30);
        assert_eq!(h4.degrees, vec![2, 12, 20, 30]);
        assert_eq!(h4.root_count(), 120);
        assert_eq!(h4.exponents.iter().sum::<u32>(), 60);
    }

    #[test]
    fn cartan_conventions() {
        let b3 = build_datum(GroupType::B(3)).unwrap();
        let CartanMatrix::Int(a) = &b3.cartan else { panic!() };
        assert_eq!(a, &vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let f4 = build_datum(GroupType::F4).unwrap();
        let CartanMatrix::Int(a) = &f4.cartan else { panic!() };
        assert_eq!(a[1][2], -1);
        assert_eq!(a[2][1], -2);
        let h3 = build_datum(GroupType::H3).unwrap();
        let spec = h3.field.clone().unwrap();
        assert_eq!(h3.cartan.entry(0, 1), Num::Field(-Scalar::generator(&spec)));
        assert_eq!(h3.cartan.entry(1, 2), Num::Field(Scalar::from_int(&spec, -1)));
        assert!(h3.cartan.entry(0, 2).is_zero());
    }

    #[test]
    fn flags_and_limits() {
        let d = build_datum(GroupType::D(5)).unwrap();
        assert!(d.simply_laced && d.doubly_laced_at_most && d.crystallographic);
        let f = build_datum(GroupType::F4).unwrap();
        assert!(!f.simply_laced && f.doubly_laced_at_most);
        let h = build_datum(GroupType::H3).unwrap();
        assert!(!h.doubly_laced_at_most && !h.crystallographic);
        assert!(build_datum(GroupType::I2(61)).is_err());
        assert!(build_datum_with_ceiling(GroupType::I2(61), 61).is_ok());
        assert!(build_datum(GroupType::D(3)).is_err());
        assert_eq!(build_datum(GroupType::I2(4)).unwrap().group_type, GroupType::B(2));
    }

    #[test]
    fn exponent_duality_for_catalog() {
        let mut types = vec![
            GroupType::E6,
            GroupType::E7,
            GroupType::E8,
            GroupType::F4,
            GroupType::H3,
            GroupType::H4,
        ];
        types.extend((1..=12).map(GroupType::A));
        types.extend((2..=12).map(GroupType::B));
        types.extend((4..=12).map(GroupType::D));
        types.extend((5..=30).map(GroupType::I2));
        for t in types {
            assert!(build_datum(t).unwrap().exponent_duality_holds(), "{t}");
        }
    }
}
