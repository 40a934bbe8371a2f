//! The expected table of `f^{Φ'}/[h]_q` and `gcd([h]_q, Σ q^{d*_i})`,
//! stored as products and quotients of `[n]_{q^k}` and expanded on demand.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::qpoly::{exact_div, q_int_scaled, IntPoly};
use crate::rootsys::{GroupType, OrbitLabel};

/// `[n]_{q^k}` raised to `power` (which is `1` or `-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RecipeFactor {
    pub n: u32,
    pub k: u32,
    pub power: i8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Recipe {
    pub factors: Vec<RecipeFactor>,
}

impl Recipe {
    pub fn one() -> Self {
        Recipe::default()
    }

    /// `[n]_{q^k}`; `[1]_{q^k}` is dropped since it equals 1.
    pub fn q(n: u32, k: u32) -> Self {
        Recipe::one().times(n, k)
    }

    pub fn times(mut self, n: u32, k: u32) -> Self {
        if n != 1 {
            self.factors.push(RecipeFactor { n, k, power: 1 });
        }
        self
    }

    pub fn over(mut self, n: u32, k: u32) -> Self {
        if n != 1 {
            self.factors.push(RecipeFactor { n, k, power: -1 });
        }
        self
    }

    fn side(&self, power: i8) -> Result<IntPoly> {
        self.factors
            .iter()
            .filter(|f| f.power == power)
            .map(|f| q_int_scaled(f.n as i64, f.k as i64))
            .product()
    }

    /// Expand to a polynomial; fails if the quotient is not exact.
    pub fn expand(&self) -> Result<IntPoly> {
        exact_div(&self.side(1)?, &self.side(-1)?)
    }

    fn bracket(f: &RecipeFactor, latex: bool) -> String {
        match (f.k, latex) {
            (1, _) => format!("[{}]_q", f.n),
            (k, true) => format!("[{}]_{{q^{{{k}}}}}", f.n),
            (k, false) => format!("[{}]_{{q^{k}}}", f.n),
        }
    }

    fn render(&self, latex: bool) -> String {
        let join = |power: i8| {
            self.factors
                .iter()
                .filter(|f| f.power == power)
                .map(|f| Self::bracket(f, latex))
                .collect::<Vec<_>>()
                .join(if latex { " " } else { "*" })
        };
        let (num, den) = (join(1), join(-1));
        match (num.is_empty(), den.is_empty(), latex) {
            (true, true, _) => "1".into(),
            (_, true, _) => num,
            (true, false, true) => format!("\\frac{{1}}{{{den}}}"),
            (false, false, true) => format!("\\frac{{{num}}}{{{den}}}"),
            (true, false, false) => format!("1/({den})"),
            (false, false, false) => format!("{num}/({den})"),
        }
    }

    /// LaTeX form, e.g. `\frac{[2]_{q^{6}} [7]_{q^{2}}}{[2]_{q^{2}}}`.
    pub fn latex(&self) -> String {
        self.render(true)
    }
}

impl fmt::Display for Recipe {
    /// Plain form, e.g. `[2]_{q^6}*[7]_{q^2}/([2]_{q^2})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// One expected row: an orbit of a type, its stabiliser, and the two
/// tabulated polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRow {
    #[serde(rename = "type")]
    pub group_type: GroupType,
    pub orbit: OrbitLabel,
    pub stabilizer: Vec<GroupType>,
    pub quotient: Recipe,
    pub gcd: Recipe,
}

fn a_parabolic(n: usize) -> Vec<GroupType> {
    if n == 0 {
        vec![]
    } else {
        vec![GroupType::A(n)]
    }
}

fn b_parabolic(n: usize) -> Vec<GroupType> {
    match n {
        0 => vec![],
        1 => vec![GroupType::A(1)],
        n => vec![GroupType::B(n)],
    }
}

fn d_parabolic(n: usize) -> Vec<GroupType> {
    match n {
        2 => vec![GroupType::A(1), GroupType::A(1)],
        3 => vec![GroupType::A(3)],
        n => vec![GroupType::D(n)],
    }
}

fn canonical(mut types: Vec<GroupType>) -> Vec<GroupType> {
    types.sort_by(GroupType::canonical_cmp);
    types
}

/// The expected row for `orbit` of `t`, or `None` if `t` has no such orbit.
pub fn expected_row(t: GroupType, orbit: OrbitLabel) -> Option<ExpectedRow> {
    use GroupType::*;
    use OrbitLabel::{All, Long, Short};
    let row = |stabilizer: Vec<GroupType>, quotient: Recipe, gcd: Recipe| {
        Some(ExpectedRow {
            group_type: t,
            orbit,
            stabilizer: canonical(stabilizer),
            quotient,
            gcd,
        })
    };
    let b_row = |n: usize, label: OrbitLabel| {
        let gcd = Recipe::q(n as u32, 2);
        match label {
            Long => row(
                [vec![A(1)], b_parabolic(n - 2)].concat(),
                Recipe::q(n as u32 - 1, 2),
                gcd,
            ),
            Short => row(b_parabolic(n - 1), Recipe::one(), gcd),
            All => None,
        }
    };
    match (t, orbit) {
        (A(l), All) => {
            let n = l as u32 + 1;
            row(a_parabolic(l.saturating_sub(2)), Recipe::q(n - 1, 1), Recipe::one())
        }
        (B(n), label) => b_row(n, label),
        (C(n), Long) => b_row(n, Short).map(|r| ExpectedRow { orbit: Long, ..r }),
        (C(n), Short) => b_row(n, Long).map(|r| ExpectedRow { orbit: Short, ..r }),
        (D(n), All) => row(
            [vec![A(1)], d_parabolic(n - 2)].concat(),
            Recipe::q(n as u32 - 2, 2).times(n as u32, 1).over(2, 1),
            Recipe::one(),
        ),
        (E6, All) => row(vec![A(5)], Recipe::q(2, 4).times(3, 3), Recipe::one()),
        (E7, All) => row(vec![D(6)], Recipe::q(2, 6).over(2, 2).times(7, 2), Recipe::one()),
        (E8, All) => row(vec![E7], Recipe::q(2, 10).times(4, 6), Recipe::one()),
        (F4, Long | Short) => row(vec![B(3)], Recipe::q(2, 4), Recipe::q(2, 6)),
        (H3, All) => row(vec![A(1), A(1)], Recipe::q(3, 2), Recipe::one()),
        (H4, All) => row(vec![H3], Recipe::q(2, 6).times(2, 10), Recipe::one()),
        (I2(m), Long | Short) if m % 2 == 0 => {
            let gcd = if (m / 2) % 2 == 1 {
                Recipe::one()
            } else {
                Recipe::q(2, 2)
            };
            row(vec![A(1)], Recipe::one(), gcd)
        }
        (I2(m), All) if m % 2 == 1 => row(vec![], Recipe::q(2, 1), Recipe::one()),
        _ => None,
    }
}
