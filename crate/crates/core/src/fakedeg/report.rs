use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::rootsys::{classify_parabolic, coxeter_element, height_poly, mv_formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl ClaimStatus {
    fn from_bool(ok: bool) -> Self {
        if ok {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::NotApplicable => "not-applicable",
        }
    }
}

/// Evidence attached to a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Polynomial {
        value: IntPoly,
    },
    Mismatch {
        expected: IntPoly,
        actual: IntPoly,
    },
    FixedPoints {
        m: u32,
        evaluation: IntPoly,
        fixed_points: usize,
    },
    Detail {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    #[serde(rename = "ref")]
    pub reference: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub group_type: GroupType,
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.group_type)?;
        for c in &self.claims {
            write!(f, "  {:<14} {:<32} {}", c.status.as_str(), c.id, c.reference)?;
            if c.status == ClaimStatus::Fail {
                if let Some(w) = &c.witness {
                    write!(f, "  [{}]", render_witness(w))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn render_witness(w: &Witness) -> String {
    match w {
        Witness::Polynomial { value } => value.to_string(),
        Witness::Mismatch { expected, actual } => format!("expected {expected}, got {actual}"),
        Witness::FixedPoints {
            m,
            evaluation,
            fixed_points,
        } => {
            format!("m = {m}: f(zeta^m) = {evaluation}, fixed points = {fixed_points}")
        }
        Witness::Detail { message } => message.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `|W_J|` enumerated by breadth-first search in the group.
    pub bfs_bound: u128,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bfs_bound: DEFAULT_BFS_BOUND,
        }
    }
}

struct Builder {
    claims: Vec<Claim>,
}

impl Builder {
    fn push(&mut self, id: impl Into<String>, reference: &str, status: ClaimStatus, witness: Option<Witness>) {
        self.claims.push(Claim {
            id: id.into(),
            reference: reference.to_string(),
            status,
            witness,
        });
    }

    fn check(&mut self, id: impl Into<String>, reference: &str, ok: bool, witness: Option<Witness>) {
        self.push(id, reference, ClaimStatus::from_bool(ok), witness);
    }

    fn not_applicable(&mut self, id: impl Into<String>, reference: &str, why: impl Into<String>) {
        self.push(
            id,
            reference,
            ClaimStatus::NotApplicable,
            Some(Witness::Detail { message: why.into() }),
        );
    }

    fn error(&mut self, id: impl Into<String>, reference: &str, e: Error) {
        match e {
            Error::NotApplicable(why) => self.not_applicable(id, reference, why),
            Error::Divisibility { dividend, divisor } => self.push(
                id,
                reference,
                ClaimStatus::Fail,
                Some(Witness::Detail {
                    message: format!("{divisor} does not divide {dividend}"),
                }),
            ),
            e => self.push(
                id,
                reference,
                ClaimStatus::Fail,
                Some(Witness::Detail { message: e.to_string() }),
            ),
        }
    }
}

fn mismatch(expected: IntPoly, actual: IntPoly) -> Option<Witness> {
    Some(Witness::Mismatch { expected, actual })
}

mod refs {
    pub const CARD: &str = "the number of roots is h times the rank";
    pub const DUALITY: &str = "exponents satisfy h - e_i = e_{l+1-i} and sum to the number of positive roots";
    pub const FREE: &str = "a Coxeter element acts freely on the roots with every cycle of length h";
    pub const ORBIT_STAB: &str = "orbit size times parabolic stabiliser order equals |W|";
    pub const HT_HIGHEST: &str = "the highest root has height h - 1";
    pub const ADDITIVITY: &str = "fake degrees add over orbits and evaluate to |Phi'| at q = 1";
    pub const CROSS: &str = "orbit distances, degree quotient and Cayley-graph enumeration agree";
    pub const THM_I: &str = "[h]_q divides the fake degree of every W-stable root subset";
    pub const THM_II: &str = "in simply-laced types f(q) = [h]_q (q^{d*_1} + ... + q^{d*_l})";
    pub const CSP: &str = "f(zeta_h^m) counts the roots fixed by c^m";
    pub const LEMMA_HT: &str = "orbit distance is ht(a0) - ht(a) on positive roots and one more on negative roots";
    pub const EQ_HT: &str = "sum over positive roots of q^ht equals sum_i (q + ... + q^{e_i})";
    pub const TABLE: &str = "f/[h]_q, gcd and stabiliser type match the tabulated row";
    pub const GCD_ONE: &str = "with one root orbit, gcd([h]_q, sum q^{d*_i}) = 1 and every c^m has nonzero trace";
    pub const GCD_EQUIV: &str = "gcd([h]_q, sum q^{d*_i}) = 1 exactly when every c^m has nonzero trace";
    pub const DOUBLY: &str = "at most doubly laced: sum q^{d*_i} divides the fake degree of every W-stable root subset";
    pub const SYM: &str = "(1 + q) divides each orbit's fake degree, with f- = q f+";
    pub const FU: &str = "[2]_q f^U = q^2 [h-2]_q sum q^{e_i} and f^U(1) = (h-2)l/2";
}

/// Run every claim against `t`. Failures are recorded, never returned.
pub fn verify_all(t: GroupType, options: &VerifyOptions) -> VerificationReport {
    let mut b = Builder { claims: Vec::new() };
    match RootSystem::new(t) {
        Ok(rs) => run_claims(&rs, options, &mut b),
        Err(e) => b.error("construct", "the root system can be constructed", e),
    }
    VerificationReport {
        group_type: t,
        claims: b.claims,
    }
}

/// `verify_all` over several types in parallel, returned in input order.
pub fn verify_many(types: &[GroupType], options: &VerifyOptions) -> Vec<VerificationReport> {
    types.par_iter().map(|&t| verify_all(t, options)).collect()
}

fn run_claims(rs: &RootSystem, options: &VerifyOptions, b: &mut Builder) {
    let datum = rs.datum();
    let unions = OrbitSelector::all_unions(rs);
    let singles = OrbitSelector::single_orbits(rs);

    b.check(
        "card",
        refs::CARD,
        rs.len() == rs.h() as usize * rs.rank(),
        Some(Witness::Detail {
            message: format!("|Phi| = {}, h = {}, rank = {}", rs.len(), rs.h(), rs.rank()),
        }),
    );

    let positives = rs.positive_roots().count() as u32;
    let exp_sum: u32 = datum.exponents.iter().sum();
    b.check(
        "duality",
        refs::DUALITY,
        datum.exponent_duality_holds() && exp_sum == positives,
        Some(Witness::Detail {
            message: format!("exponents {:?}, |Phi+| = {positives}", datum.exponents),
        }),
    );

    match coxeter_element(rs) {
        Ok(c) => b.check(
            "free_action",
            refs::FREE,
            true,
            Some(Witness::Detail {
                message: format!("order {}, {} cycles", c.order, c.cycle_lengths.len()),
            }),
        ),
        Err(e) => b.error("free_action", refs::FREE, e),
    }

    let orbit_stab_ok = rs.orbits().iter().all(|o| {
        classify_parabolic(datum, &o.stabilizer)
            .map(|parts| parts.iter().map(GroupType::order).product::<u128>() * o.members.len() as u128)
            .is_ok_and(|n| n == datum.order())
    });
    b.check("orbit_stabilizer", refs::ORBIT_STAB, orbit_stab_ok, None);

    match rs.highest_root() {
        Some(top) => {
            let ht = rs.height(top).unwrap();
            b.check(
                "ht_highest",
                refs::HT_HIGHEST,
                ht == rs.h() as i64 - 1,
                Some(Witness::Detail {
                    message: format!("ht = {ht}"),
                }),
            );
        }
        None => b.not_applicable("ht_highest", refs::HT_HIGHEST, "heights need a crystallographic type"),
    }

    additivity(rs, &singles, b);

    let everything: Vec<usize> = (0..rs.rank()).collect();
    let full_bfs = poincare_bfs(rs, &everything, options.bfs_bound).ok();
    for sel in &singles {
        let id = format!("crosscheck.{}", sel.name());
        match crosscheck_with(rs, sel, full_bfs.as_ref(), options.bfs_bound) {
            Ok(c) if c.pass => b.check(id, refs::CROSS, true, None),
            Ok(c) => {
                let actual = if c.quotient != c.bfs {
                    c.quotient
                } else {
                    c.group_bfs.unwrap()
                };
                b.check(id, refs::CROSS, false, mismatch(c.bfs, actual))
            }
            Err(e) => b.error(id, refs::CROSS, e),
        }
    }

    for sel in &unions {
        let id = format!("thm1i.{}", sel.name());
        match verify_thm_i(rs, sel) {
            Ok(q) => b.check(id, refs::THM_I, true, Some(Witness::Polynomial { value: q })),
            Err(e) => b.error(id, refs::THM_I, e),
        }
    }

    match verify_thm_ii(rs) {
        Ok(_) => {
            let (f, rhs) = thm_ii_sides(rs).expect("computed above");
            b.check(
                "thm1ii",
                refs::THM_II,
                f == rhs,
                (f != rhs).then(|| mismatch(rhs, f)).flatten(),
            );
        }
        Err(e) => b.error("thm1ii", refs::THM_II, e),
    }

    for sel in &unions {
        let id = format!("lemma2.1.{}", sel.name());
        match csp_check(rs, sel) {
            Ok(points) => match points.into_iter().find(|p| !p.pass) {
                None => b.check(id, refs::CSP, true, None),
                Some(p) => b.check(
                    id,
                    refs::CSP,
                    false,
                    Some(Witness::FixedPoints {
                        m: p.m,
                        evaluation: p.evaluation,
                        fixed_points: p.fixed_points,
                    }),
                ),
            },
            Err(e) => b.error(id, refs::CSP, e),
        }
    }

    lemma_heights(rs, b);

    match height_poly(rs) {
        Ok(lhs) => {
            let rhs: IntPoly = datum
                .exponents
                .iter()
                .map(|&e| q_int(e as i64).expect("exponents are positive").shift(1))
                .sum();
            b.check(
                "eq3.2",
                refs::EQ_HT,
                lhs == rhs,
                (lhs != rhs).then(|| mismatch(rhs, lhs)).flatten(),
            );
        }
        Err(e) => b.error("eq3.2", refs::EQ_HT, e),
    }

    for sel in &singles {
        table_claim(rs, sel, b);
    }

    match verify_prop_gcd_one(rs) {
        Ok(ok) => b.check("prop4.1", refs::GCD_ONE, ok, None),
        Err(e) => b.error("prop4.1", refs::GCD_ONE, e),
    }
    match gcd_and_traces(rs) {
        Ok(g) => b.check(
            "prop4.1.trace_equivalence",
            refs::GCD_EQUIV,
            g.gcd_is_one() == g.traces_nonzero(),
            Some(Witness::Detail {
                message: format!("gcd = {}, vanishing traces at m = {:?}", g.gcd, g.zero_traces),
            }),
        ),
        Err(e) => b.error("prop4.1.trace_equivalence", refs::GCD_EQUIV, e),
    }

    match verify_prop_doubly_laced(rs) {
        Ok(results) => {
            for (sel, res) in results {
                let id = format!("prop4.2.{}", sel.name());
                match res {
                    Ok(q) => b.check(id, refs::DOUBLY, true, Some(Witness::Polynomial { value: q })),
                    Err(e) => b.error(id, refs::DOUBLY, e),
                }
            }
        }
        Err(e) => {
            for sel in &unions {
                b.error(format!("prop4.2.{}", sel.name()), refs::DOUBLY, e.clone());
            }
        }
    }

    for sel in &singles {
        let id = format!("prop5.1.{}", sel.name());
        match sym_antisym(rs, sel) {
            Ok(s) => {
                let f = fake_degree(rs, sel).expect("computed above");
                let ok = &s.f_plus + &s.f_minus == f && s.f_minus == s.f_plus.shift(1);
                b.check(id, refs::SYM, ok, Some(Witness::Polynomial { value: s.f_plus }));
            }
            Err(e) => b.error(id, refs::SYM, e),
        }
    }

    match verify_fu(rs) {
        Ok(c) => {
            let ok = c.pass();
            let witness = if c.lhs != c.rhs {
                mismatch(c.rhs, c.lhs)
            } else {
                Some(Witness::Detail {
                    message: format!("f^U(1) = {}, expected {}", c.dimension, c.expected_dimension),
                })
            };
            b.check("fU", refs::FU, ok, witness);
        }
        Err(e) => b.error("fU", refs::FU, e),
    }
}

fn additivity(rs: &RootSystem, singles: &[OrbitSelector], b: &mut Builder) {
    let result = (|| -> Result<bool> {
        let all = fake_degree(rs, &OrbitSelector::All)?;
        let mut sum = IntPoly::zero();
        for sel in singles {
            let f = fake_degree(rs, sel)?;
            if f.eval_at_one() != BigInt::from(sel.roots(rs)?.len()) {
                return Ok(false);
            }
            sum = sum + f;
        }
        Ok(sum == all && all.eval_at_one() == BigInt::from(rs.len()))
    })();
    match result {
        Ok(ok) => b.check("additivity", refs::ADDITIVITY, ok, None),
        Err(e) => b.error("additivity", refs::ADDITIVITY, e),
    }
}

fn lemma_heights(rs: &RootSystem, b: &mut Builder) {
    let mut bad = None;
    for r in 0..rs.len() {
        match mv_formula(rs, r) {
            Ok(predicted) if predicted == rs.distance(r) as i64 => {}
            Ok(predicted) => {
                bad = Some(format!(
                    "root {r}: distance {}, height formula {predicted}",
                    rs.distance(r)
                ));
                break;
            }
            Err(e) => return b.error("lemma3.2", refs::LEMMA_HT, e),
        }
    }
    match bad {
        None => b.check("lemma3.2", refs::LEMMA_HT, true, None),
        Some(message) => b.check("lemma3.2", refs::LEMMA_HT, false, Some(Witness::Detail { message })),
    }
}

fn table_claim(rs: &RootSystem, sel: &OrbitSelector, b: &mut Builder) {
    let id = format!("table.{}", sel.name());
    let computed = match table_row(rs, sel) {
        Ok(r) => r,
        Err(e) => return b.error(id, refs::TABLE, e),
    };
    let Some(expected) = expected_row(rs.group_type(), computed.orbit) else {
        return b.not_applicable(id, refs::TABLE, "no tabulated row for this orbit");
    };
    let expand = |r: &Recipe| {
        r.expand().map_err(|_| Witness::Detail {
            message: format!(
                "expected recipe {r} is not a polynomial; computed {}",
                computed.quotient
            ),
        })
    };
    let (quotient, gcd) = match (expand(&expected.quotient), expand(&expected.gcd)) {
        (Ok(q), Ok(g)) => (q, g),
        (Err(w), _) | (_, Err(w)) => return b.check(id, refs::TABLE, false, Some(w)),
    };
    if quotient != computed.quotient {
        b.check(id, refs::TABLE, false, mismatch(quotient, computed.quotient));
    } else if gcd != computed.gcd {
        b.check(id, refs::TABLE, false, mismatch(gcd, computed.gcd));
    } else if expected.stabilizer != computed.stabilizer {
        b.check(
            id,
            refs::TABLE,
            false,
            Some(Witness::Detail {
                message: format!(
                    "stabiliser {}, expected {}",
                    crate::rootsys::parabolic_label(&computed.stabilizer),
                    crate::rootsys::parabolic_label(&expected.stabilizer)
                ),
            }),
        );
    } else {
        b.check(
            id,
            refs::TABLE,
            true,
            Some(Witness::Polynomial {
                value: computed.quotient,
            }),
        );
    }
}

/// The types covered by `verify --all`: `A1..A_r`, `B2..B_r`, `D4..D_r`,
/// the exceptional types, and `I2(m)` for `5 ≤ m ≤ max_m`, in canonical order.
pub fn default_types(max_rank: usize, max_m: u32) -> Vec<GroupType> {
    use GroupType::*;
    let mut out: Vec<GroupType> = Vec::new();
    out.extend((1..=max_rank).map(A));
    out.extend((2..=max_rank).map(B));
    out.extend((4..=max_rank).map(D));
    out.extend([E6, E7, E8, F4, H3, H4]);
    out.extend((5..=max_m).map(I2));
    out.sort_by(GroupType::canonical_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupType::*;

    fn ids(r: &VerificationReport) -> Vec<&str> {
        r.claims.iter().map(|c| c.id.as_str()).collect()
    }

    #[test]
    fn e8_report_passes() {
        let r = verify_all(E8, &VerifyOptions::default());
        assert!(r.all_pass(), "{r}");
        for id in [
            "thm1i.all",
            "thm1ii",
            "lemma2.1.all",
            "lemma3.2",
            "eq3.2",
            "table.all",
            "prop4.1",
            "prop5.1.all",
            "fU",
        ] {
            assert_eq!(r.claim(id).unwrap().status, ClaimStatus::Pass, "{id}");
        }
    }

    #[test]
    fn b2_report_has_both_orbits() {
        let r = verify_all(B(2), &VerifyOptions::default());
        assert!(r.all_pass(), "{r}");
        let ids = ids(&r);
        for id in [
            "table.long",
            "table.short",
            "thm1i.all",
            "thm1i.long",
            "thm1i.short",
            "prop4.2.all",
        ] {
            assert!(ids.contains(&id), "{id}");
        }
        assert_eq!(r.claim("prop4.1").unwrap().status, ClaimStatus::NotApplicable);
    }

    #[test]
    fn i2_5_applicability() {
        let r = verify_all(I2(5), &VerifyOptions::default());
        assert!(r.all_pass(), "{r}");
        for id in ["thm1ii", "lemma3.2", "eq3.2", "prop4.2.all", "fU"] {
            assert_eq!(r.claim(id).unwrap().status, ClaimStatus::NotApplicable, "{id}");
        }
    }

    #[test]
    fn h4_marks_thm_ii_not_applicable() {
        let r = verify_all(H4, &VerifyOptions::default());
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.claim("thm1ii").unwrap().status, ClaimStatus::NotApplicable);
    }

    #[test]
    fn claim_ids_are_unique() {
        for t in [A(1), C(3), F4, I2(12), D(4)] {
            let r = verify_all(t, &VerifyOptions::default());
            assert!(r.all_pass(), "{r}");
            let mut v = ids(&r);
            let n = v.len();
            v.sort_unstable();
            v.dedup();
            assert_eq!(v.len(), n);
        }
    }

    #[test]
    fn report_json_shape() {
        let r = verify_all(A(2), &VerifyOptions::default());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["type"], "A2");
        assert_eq!(json["claims"][0]["id"], "card");
        assert_eq!(json["claims"][0]["status"], "pass");
        assert!(json["claims"][0]["ref"].is_string());
    }

    #[test]
    fn default_type_list() {
        let types = default_types(4, 8);
        assert_eq!(types.first(), Some(&A(1)));
        assert!(types.contains(&D(4)) && !types.contains(&D(5)));
        assert!(types.contains(&I2(8)) && !types.contains(&I2(4)));
        let many = verify_many(&types[..3], &VerifyOptions::default());
        assert_eq!(many.iter().map(|r| r.group_type).collect::<Vec<_>>(), types[..3]);
    }
}
