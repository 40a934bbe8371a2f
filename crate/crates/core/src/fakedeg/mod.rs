//! Fake degrees of root-orbit permutation representations, computed two
//! independent ways (orbit geometry and degree quotients), and the checks
//! run against them.

mod report;
mod table;

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::{eval_at_root_of_unity, exact_div, gcd_primitive, q_int, IntPoly};
use crate::rootsys::{coxeter_element, coxeter_power_trace, poincare_bfs, GroupType, OrbitLabel, RootSystem};

pub use report::{
    default_types, verify_all, verify_many, Claim, ClaimStatus, VerificationReport, VerifyOptions, Witness,
};
pub use table::{expected_row, ExpectedRow, Recipe, RecipeFactor};

/// Default cap on the group order for Cayley-graph enumeration.
pub const DEFAULT_BFS_BOUND: u128 = 1_000_000;

/// A W-stable set of roots: a nonempty union of orbits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitSelector {
    All,
    Long,
    Short,
    Union(Vec<OrbitLabel>),
}

impl OrbitSelector {
    /// Orbit indices selected in `rs`, ascending.
    pub fn resolve(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        let find = |label: OrbitLabel| {
            rs.orbits()
                .iter()
                .position(|o| o.label == label)
                .ok_or_else(|| Error::invalid(format!("{} has no {label} root orbit", rs.group_type())))
        };
        let mut idx = match self {
            OrbitSelector::All => (0..rs.orbits().len()).collect(),
            OrbitSelector::Long => vec![find(OrbitLabel::Long)?],
            OrbitSelector::Short => vec![find(OrbitLabel::Short)?],
            OrbitSelector::Union(labels) => {
                if labels.is_empty() {
                    return Err(Error::invalid("empty orbit union"));
                }
                labels
                    .iter()
                    .map(|&l| match l {
                        OrbitLabel::All => Ok((0..rs.orbits().len()).collect::<Vec<_>>()),
                        l => find(l).map(|i| vec![i]),
                    })
                    .collect::<Result<Vec<_>>>()?
                    .concat()
            }
        };
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    /// Root indices in the selected orbits, ascending.
    pub fn roots(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = self
            .resolve(rs)?
            .into_iter()
            .flat_map(|k| rs.orbits()[k].members.iter().copied())
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Every nonempty union of orbits of `rs`, as selectors.
    pub fn all_unions(rs: &RootSystem) -> Vec<OrbitSelector> {
        if rs.orbits().len() == 1 {
            vec![OrbitSelector::All]
        } else {
            vec![OrbitSelector::All, OrbitSelector::Long, OrbitSelector::Short]
        }
    }

    /// Selectors for the individual orbits.
    pub fn single_orbits(rs: &RootSystem) -> Vec<OrbitSelector> {
        rs.orbits()
            .iter()
            .map(|o| match o.label {
                OrbitLabel::All => OrbitSelector::All,
                OrbitLabel::Long => OrbitSelector::Long,
                OrbitLabel::Short => OrbitSelector::Short,
            })
            .collect()
    }

    pub fn name(&self) -> String {
        match self {
            OrbitSelector::All => "all".into(),
            OrbitSelector::Long => "long".into(),
            OrbitSelector::Short => "short".into(),
            OrbitSelector::Union(ls) => ls.iter().map(OrbitLabel::as_str).collect::<Vec<_>>().join("+"),
        }
    }
}

impl FromStr for OrbitSelector {
    type Err = Error;

    /// `all`, `long`, `short`, or a `+`-joined union such as `long+short`.
    fn from_str(s: &str) -> Result<Self> {
        let label = |p: &str| match p.trim().to_ascii_lowercase().as_str() {
            "all" => Ok(OrbitLabel::All),
            "long" => Ok(OrbitLabel::Long),
            "short" => Ok(OrbitLabel::Short),
            other => Err(Error::invalid(format!("unknown orbit selector {other:?}"))),
        };
        let parts: Vec<OrbitLabel> = s.split('+').map(label).collect::<Result<_>>()?;
        Ok(match parts.as_slice() {
            [OrbitLabel::All] => OrbitSelector::All,
            [OrbitLabel::Long] => OrbitSelector::Long,
            [OrbitLabel::Short] => OrbitSelector::Short,
            _ => OrbitSelector::Union(parts),
        })
    }
}

/// `Σ_{α ∈ Φ'} q^{d(α₀, α)}` from breadth-first distances in each orbit.
pub fn fakedeg_bfs(rs: &RootSystem, sel: &OrbitSelector) -> Result<IntPoly> {
    Ok(sel
        .resolve(rs)?
        .into_iter()
        .map(|k| IntPoly::from_exponents(rs.orbits()[k].distances.iter().map(|&d| d as usize)))
        .sum())
}

fn poincare_product(types: &[GroupType]) -> IntPoly {
    types
        .iter()
        .flat_map(|t| t.degrees())
        .map(|d| q_int(d as i64).expect("degrees are positive"))
        .product()
}

/// `∏ [d_i]_q`, the length generating function of `W`.
pub fn group_poincare(rs: &RootSystem) -> IntPoly {
    poincare_product(&[rs.group_type()])
}

/// Per orbit, `∏_i [d_i]_q / ∏_j [d'_j]_q` with `d'` the degrees of the
/// dominant root's stabiliser; summed over the selection.
pub fn fakedeg_quotient(rs: &RootSystem, sel: &OrbitSelector) -> Result<IntPoly> {
    let full = group_poincare(rs);
    let mut total = IntPoly::zero();
    for k in sel.resolve(rs)? {
        let parabolic = poincare_product(&rs.orbits()[k].stabilizer_type);
        let part = exact_div(&full, &parabolic).map_err(|_| {
            Error::structural(format!(
                "parabolic Poincare polynomial {parabolic} does not divide {full}"
            ))
        })?;
        total = total + part;
    }
    Ok(total)
}

/// The fake degree itself; the geometric computation is the reference.
pub fn fake_degree(rs: &RootSystem, sel: &OrbitSelector) -> Result<IntPoly> {
    fakedeg_bfs(rs, sel)
}

/// `Σ q^{d*_i}`
pub fn codegree_poly(rs: &RootSystem) -> IntPoly {
    IntPoly::from_exponents(rs.datum().codegrees.iter().map(|&d| d as usize))
}

/// `Σ q^{e_i}`
pub fn exponent_poly(rs: &RootSystem) -> IntPoly {
    IntPoly::from_exponents(rs.datum().exponents.iter().map(|&e| e as usize))
}

/// `[h]_q`
pub fn coxeter_q_int(rs: &RootSystem) -> IntPoly {
    q_int(rs.h() as i64).expect("h >= 2")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub bfs: IntPoly,
    pub quotient: IntPoly,
    /// `poincare_bfs(W) / poincare_bfs(W_J)` summed over orbits, when the
    /// enumeration bound permits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_bfs: Option<IntPoly>,
    pub pass: bool,
}

/// Compare the orbit-distance and degree-quotient fake degrees, and the
/// Cayley-graph enumeration when `|W|` is within `bound`.
pub fn crosscheck(rs: &RootSystem, sel: &OrbitSelector, bound: u128) -> Result<Crosscheck> {
    let everything: Vec<usize> = (0..rs.rank()).collect();
    let full = poincare_bfs(rs, &everything, bound).ok();
    crosscheck_with(rs, sel, full.as_ref(), bound)
}

pub(crate) fn crosscheck_with(
    rs: &RootSystem,
    sel: &OrbitSelector,
    full_bfs: Option<&IntPoly>,
    bound: u128,
) -> Result<Crosscheck> {
    let bfs = fakedeg_bfs(rs, sel)?;
    let quotient = fakedeg_quotient(rs, sel)?;
    let group_bfs = match full_bfs {
        Some(full) => {
            let mut total = IntPoly::zero();
            for k in sel.resolve(rs)? {
                let sub = poincare_bfs(rs, &rs.orbits()[k].stabilizer, bound)?;
                total = total + exact_div(full, &sub)?;
            }
            Some(total)
        }
        None => None,
    };
    let pass = bfs == quotient && group_bfs.as_ref().is_none_or(|g| g == &bfs);
    Ok(Crosscheck {
        bfs,
        quotient,
        group_bfs,
        pass,
    })
}

/// `[h]_q` divides the fake degree; returns the quotient.
pub fn verify_thm_i(rs: &RootSystem, sel: &OrbitSelector) -> Result<IntPoly> {
    exact_div(&fake_degree(rs, sel)?, &coxeter_q_int(rs))
}

/// Both sides of `f^Φ = [h]_q · Σ q^{d*_i}`, without the simply-laced
/// precondition: `(f^Φ, [h]_q · Σ q^{d*_i})`.
pub fn thm_ii_sides(rs: &RootSystem) -> Result<(IntPoly, IntPoly)> {
    let f = fake_degree(rs, &OrbitSelector::All)?;
    Ok((f, coxeter_q_int(rs) * codegree_poly(rs)))
}

/// `f^Φ = [h]_q · Σ q^{d*_i}` for simply-laced types.
pub fn verify_thm_ii(rs: &RootSystem) -> Result<bool> {
    if !rs.datum().simply_laced {
        return Err(Error::NotApplicable(format!("{} is not simply laced", rs.group_type())));
    }
    let (f, rhs) = thm_ii_sides(rs)?;
    Ok(f == rhs)
}

/// One value of `m` in the cyclic-sieving check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CspPoint {
    pub m: u32,
    /// Representative of `f(ζ_h^m)` modulo `Φ_h`.
    pub evaluation: IntPoly,
    pub fixed_points: usize,
    pub pass: bool,
}

/// For each `0 ≤ m < h`: `f(ζ_h^m)` is the integer counting roots of the
/// selection fixed by `c^m`.
pub fn csp_check(rs: &RootSystem, sel: &OrbitSelector) -> Result<Vec<CspPoint>> {
    let f = fake_degree(rs, sel)?;
    let roots = sel.roots(rs)?;
    let c = coxeter_element(rs)?;
    let h = rs.h();
    (0..h)
        .map(|m| {
            let value = eval_at_root_of_unity(&f, h as u64, m as i64)?;
            let fixed_points = c.fixed_points(m as i64, &roots);
            let pass = value.as_integer() == Some(BigInt::from(fixed_points));
            Ok(CspPoint {
                m,
                evaluation: value.representative,
                fixed_points,
                pass,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub group_type: GroupType,
    pub h: u32,
    pub orbit: OrbitLabel,
    pub stabilizer: Vec<GroupType>,
    pub quotient: IntPoly,
    pub gcd: IntPoly,
}

/// Computed `f^{Φ'}/[h]_q` and `gcd([h]_q, Σ q^{d*_i})` for one orbit.
pub fn table_row(rs: &RootSystem, sel: &OrbitSelector) -> Result<TableRow> {
    let orbits = sel.resolve(rs)?;
    let [k] = orbits[..] else {
        return Err(Error::invalid("table rows are per single orbit"));
    };
    let orbit = &rs.orbits()[k];
    Ok(TableRow {
        group_type: rs.group_type(),
        h: rs.h(),
        orbit: orbit.label,
        stabilizer: orbit.stabilizer_type.clone(),
        quotient: verify_thm_i(rs, sel)?,
        gcd: gcd_primitive(&coxeter_q_int(rs), &codegree_poly(rs))?,
    })
}

/// Outcome of the single-orbit gcd claim and its trace reformulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdCheck {
    pub gcd: IntPoly,
    /// Powers `m` in `0..h` for which `tr(c^m)` vanishes on `V`.
    pub zero_traces: Vec<u32>,
}

impl GcdCheck {
    pub fn gcd_is_one(&self) -> bool {
        self.gcd.is_one()
    }

    pub fn traces_nonzero(&self) -> bool {
        self.zero_traces.is_empty()
    }
}

/// `gcd([h]_q, Σ q^{d*_i})` and the vanishing traces of `c^m`, for any type.
pub fn gcd_and_traces(rs: &RootSystem) -> Result<GcdCheck> {
    let gcd = gcd_primitive(&coxeter_q_int(rs), &codegree_poly(rs))?;
    let zero_traces = (0..rs.h())
        .filter(|&m| coxeter_power_trace(rs, m as i64).is_zero())
        .collect();
    Ok(GcdCheck { gcd, zero_traces })
}

/// Single-orbit types: the gcd is 1 and every `c^m` has nonzero trace.
pub fn verify_prop_gcd_one(rs: &RootSystem) -> Result<bool> {
    if rs.orbits().len() != 1 {
        return Err(Error::NotApplicable(format!(
            "{} has {} root orbits",
            rs.group_type(),
            rs.orbits().len()
        )));
    }
    let check = gcd_and_traces(rs)?;
    Ok(check.gcd_is_one() && check.traces_nonzero())
}

/// At most doubly-laced types: `Σ q^{d*_i}` divides the fake degree of every
/// orbit union. Returns the quotient per union.
pub fn verify_prop_doubly_laced(rs: &RootSystem) -> Result<Vec<(OrbitSelector, Result<IntPoly>)>> {
    if !rs.datum().doubly_laced_at_most {
        return Err(Error::NotApplicable(format!("{} has a bond above 4", rs.group_type())));
    }
    let codeg = codegree_poly(rs);
    OrbitSelector::all_unions(rs)
        .into_iter()
        .map(|sel| {
            let f = fake_degree(rs, &sel)?;
            Ok((sel, exact_div(&f, &codeg)))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymAntisym {
    pub f_plus: IntPoly,
    pub f_minus: IntPoly,
}

/// Split a single orbit's fake degree into the parts symmetric and
/// antisymmetric under `α ↦ −α`: `f⁺ = f/(1+q)`, `f⁻ = q·f⁺`.
pub fn sym_antisym(rs: &RootSystem, sel: &OrbitSelector) -> Result<SymAntisym> {
    if sel.resolve(rs)?.len() != 1 {
        return Err(Error::invalid("the symmetric/antisymmetric split is per orbit"));
    }
    let f = fake_degree(rs, sel)?;
    let f_plus = exact_div(&f, &q_int(2)?)?;
    let f_minus = f_plus.shift(1);
    Ok(SymAntisym { f_plus, f_minus })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuCheck {
    /// `f⁻ − Σ q^{e_i}`
    pub f_u: IntPoly,
    /// `[2]_q · f^U`
    pub lhs: IntPoly,
    /// `q² [h−2]_q Σ q^{e_i}`
    pub rhs: IntPoly,
    #[serde(serialize_with = "as_decimal")]
    pub dimension: BigInt,
    #[serde(serialize_with = "as_decimal")]
    pub expected_dimension: BigInt,
}

fn as_decimal<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

impl FuCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs && self.dimension == self.expected_dimension
    }
}

/// The complement `U` of the reflection representation in the
/// antisymmetric part: `[2]_q f^U = q² [h−2]_q Σ q^{e_i}` and
/// `f^U(1) = (h−2)ℓ/2`, simply-laced types only.
pub fn verify_fu(rs: &RootSystem) -> Result<FuCheck> {
    if !rs.datum().simply_laced {
        return Err(Error::NotApplicable(format!("{} is not simply laced", rs.group_type())));
    }
    let split = sym_antisym(rs, &OrbitSelector::All)?;
    let exps = exponent_poly(rs);
    let f_u = &split.f_minus - &exps;
    let h = rs.h() as i64;
    let h_minus_two = if h == 2 { IntPoly::zero() } else { q_int(h - 2)? };
    let lhs = q_int(2)? * &f_u;
    let rhs = (h_minus_two * exps).shift(2);
    let dimension = f_u.eval_at_one();
    let expected_dimension = BigInt::from((h - 2) * rs.rank() as i64 / 2);
    Ok(FuCheck {
        f_u,
        lhs,
        rhs,
        dimension,
        expected_dimension,
    })
}
