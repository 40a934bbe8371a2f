use std::collections::HashSet;

use num_bigint::BigInt;

use super::classify::classify_parabolic;
use super::datum::{CartanMatrix, Num, Ring};
use super::types::GroupType;
use super::RootSystem;
use crate::error::{Error, Result};
use crate::qpoly::IntPoly;
use crate::scalars::Scalar;

/// A Coxeter element acting on root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxPermutation {
    /// `perm[r]` is the index of `c(root r)`.
    pub perm: Vec<usize>,
    pub order: u32,
    /// Cycle lengths, in order of each cycle's smallest root index.
    pub cycle_lengths: Vec<usize>,
}

impl CoxPermutation {
    fn from_perm(perm: Vec<usize>) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut cycle_lengths = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut r = start;
            while !seen[r] {
                seen[r] = true;
                r = perm[r];
                len += 1;
            }
            cycle_lengths.push(len);
        }
        let order = cycle_lengths.iter().fold(1usize, |acc, &l| num_integer::lcm(acc, l)) as u32;
        CoxPermutation {
            perm,
            order,
            cycle_lengths,
        }
    }

    /// `c^m` as a permutation; negative `m` is taken modulo the order.
    pub fn power(&self, m: i64) -> Vec<usize> {
        let m = m.rem_euclid(self.order as i64) as u32;
        let mut out: Vec<usize> = (0..self.perm.len()).collect();
        for _ in 0..m {
            out = out.iter().map(|&r| self.perm[r]).collect();
        }
        out
    }

    /// Number of indices in `subset` fixed by `c^m`.
    pub fn fixed_points(&self, m: i64, subset: &[usize]) -> usize {
        let p = self.power(m);
        subset.iter().filter(|&&r| p[r] == r).count()
    }
}

/// `c = s_1 s_2 ⋯ s_ℓ`, applied to roots right to left.
pub fn coxeter_element(rs: &RootSystem) -> Result<CoxPermutation> {
    let order: Vec<usize> = (0..rs.rank()).collect();
    coxeter_element_in_order(rs, &order)
}

/// The product `s_{o_1} ⋯ s_{o_ℓ}` for a permutation `o` of the simple
/// indices. Fails unless it has order `h` with every cycle of length `h`.
pub fn coxeter_element_in_order(rs: &RootSystem, order: &[usize]) -> Result<CoxPermutation> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..rs.rank()).collect::<Vec<_>>() {
        return Err(Error::invalid("a Coxeter element uses every simple reflection once"));
    }
    let perm: Vec<usize> = (0..rs.len())
        .map(|r| order.iter().rev().fold(r, |acc, &i| rs.reflect(i, acc)))
        .collect();
    let c = CoxPermutation::from_perm(perm);
    let h = rs.h() as usize;
    if c.order as usize != h {
        return Err(Error::structural(format!(
            "Coxeter element of {} has order {}, expected h = {h}",
            rs.group_type(),
            c.order
        )));
    }
    if let Some(bad) = c.cycle_lengths.iter().find(|&&l| l != h) {
        return Err(Error::structural(format!(
            "Coxeter element of {} has a cycle of length {bad} on the roots",
            rs.group_type()
        )));
    }
    Ok(c)
}

fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>], zero: &R) -> Vec<Vec<R>> {
    let n = a.len();
    let mut out = vec![vec![zero.clone(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

fn power_trace<R: Ring>(cartan: &[Vec<R>], m: u32, zero: &R, one: &R) -> R {
    let n = cartan.len();
    let identity: Vec<Vec<R>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    // Column j of s_i is s_i(α_j) = α_j − A_ij α_i.
    let mut c = identity.clone();
    for i in 0..n {
        let mut s = identity.clone();
        for j in 0..n {
            s[i][j] = s[i][j].sub(&cartan[i][j]);
        }
        c = mat_mul(&c, &s, zero);
    }
    let mut p = identity;
    for _ in 0..m {
        p = mat_mul(&p, &c, zero);
    }
    (0..n).fold(zero.clone(), |acc, i| acc.add(&p[i][i]))
}

/// Trace of `c^m` on the reflection representation, computed from the
/// matrices of the simple reflections in the simple-root basis.
pub fn coxeter_power_trace(rs: &RootSystem, m: i64) -> Num {
    let m = m.rem_euclid(rs.h() as i64) as u32;
    match &rs.datum().cartan {
        CartanMatrix::Int(a) => Num::Int(power_trace(a, m, &0, &1)),
        CartanMatrix::Field(a) => {
            let spec = rs.datum().field.as_ref().unwrap();
            Num::Field(power_trace(a, m, &Scalar::zero(spec), &Scalar::one(spec)))
        }
    }
}

/// `Σ_{w ∈ W_J} q^{ℓ(w)}` by breadth-first search in the Cayley graph.
///
/// An element is stored as the tuple of root indices `(w(α_1), …, w(α_ℓ))`,
/// which determines it; multiplying on the left by `s_j` is a table lookup
/// per entry. Lengths change by exactly one along an edge, so only the
/// previous layer is needed to detect revisits.
pub fn poincare_bfs(rs: &RootSystem, subset: &[usize], bound: u128) -> Result<IntPoly> {
    let parts = classify_parabolic(rs.datum(), subset)?;
    let needed: u128 = parts.iter().map(GroupType::order).product();
    if needed > bound {
        return Err(Error::BoundExceeded {
            what: format!("length enumeration of W_J for J = {subset:?} in {}", rs.group_type()),
            needed,
            bound,
        });
    }
    let mut gens: Vec<usize> = subset.to_vec();
    gens.sort_unstable();
    gens.dedup();

    let identity: Vec<u16> = (0..rs.rank() as u16).collect();
    let mut previous: HashSet<Vec<u16>> = HashSet::new();
    let mut current: HashSet<Vec<u16>> = HashSet::from([identity]);
    let mut counts: Vec<BigInt> = Vec::new();
    while !current.is_empty() {
        counts.push(BigInt::from(current.len()));
        let mut next: HashSet<Vec<u16>> = HashSet::new();
        for w in &current {
            for &j in &gens {
                let table = rs.reflection_table(j);
                let sw: Vec<u16> = w.iter().map(|&r| table[r as usize] as u16).collect();
                if !previous.contains(&sw) && !current.contains(&sw) {
                    next.insert(sw);
                }
            }
        }
        previous = std::mem::replace(&mut current, next);
    }
    Ok(IntPoly::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_int;
    use crate::rootsys::GroupType::*;

    #[test]
    fn coxeter_element_examples() {
        let a1 = RootSystem::new(A(1)).unwrap();
        let c = coxeter_element(&a1).unwrap();
        assert_eq!(c.order, 2);
        assert_eq!(c.perm[0], a1.negation(0));

        let a2 = RootSystem::new(A(2)).unwrap();
        let c = coxeter_element(&a2).unwrap();
        assert_eq!((c.order, c.cycle_lengths.clone()), (3, vec![3, 3]));

        let e8 = RootSystem::new(E8).unwrap();
        let c = coxeter_element(&e8).unwrap();
        assert_eq!(c.order, 30);
        assert_eq!(c.cycle_lengths, vec![30; 8]);
        assert_eq!(c.fixed_points(15, &(0..240).collect::<Vec<_>>()), 0);
        assert_eq!(c.fixed_points(0, &(0..240).collect::<Vec<_>>()), 240);
    }

    /// Compose the A2 reflections by hand on explicit coordinates.
    #[test]
    fn a2_coxeter_element_by_hand() {
        let a2 = RootSystem::new(A(2)).unwrap();
        let coords = |r: usize| -> (i64, i64) {
            let c = &a2.roots()[r].coords;
            (c[0].as_int().unwrap(), c[1].as_int().unwrap())
        };
        let s1 = |(a, b): (i64, i64)| (b - a, b); // c1 ↦ c1 − (2c1 − c2)
        let s2 = |(a, b): (i64, i64)| (a, a - b);
        let c = coxeter_element(&a2).unwrap();
        for r in 0..6 {
            assert_eq!(coords(c.perm[r]), s1(s2(coords(r))));
        }
    }

    #[test]
    fn conjugate_ordering_has_same_cycle_type() {
        for t in [A(5), D(6), E7, F4, H4, I2(9)] {
            let rs = RootSystem::new(t).unwrap();
            let c = coxeter_element(&rs).unwrap();
            let mut rotated: Vec<usize> = (1..rs.rank()).collect();
            rotated.push(0);
            let c2 = coxeter_element_in_order(&rs, &rotated).unwrap();
            let mut a = c.cycle_lengths.clone();
            let mut b = c2.cycle_lengths.clone();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "{t}");
        }
        let rs = RootSystem::new(A(3)).unwrap();
        assert!(coxeter_element_in_order(&rs, &[0, 0, 1]).is_err());
    }

    #[test]
    fn trace_examples() {
        let a1 = RootSystem::new(A(1)).unwrap();
        assert_eq!(coxeter_power_trace(&a1, 0), Num::Int(1));
        assert_eq!(coxeter_power_trace(&a1, 1), Num::Int(-1));
        let a2 = RootSystem::new(A(2)).unwrap();
        assert_eq!(coxeter_power_trace(&a2, 0), Num::Int(2));
        // s1 = [[-1, 1], [0, 1]], s2 = [[1, 0], [1, -1]]; s1·s2 = [[0, -1], [1, -1]]
        assert_eq!(coxeter_power_trace(&a2, 1), Num::Int(-1));
        let h3 = RootSystem::new(H3).unwrap();
        assert_eq!(coxeter_power_trace(&h3, 0).to_string(), "3");
    }

    #[test]
    fn poincare_examples() {
        let a2 = RootSystem::new(A(2)).unwrap();
        assert_eq!(poincare_bfs(&a2, &[], 10).unwrap(), IntPoly::one());
        assert_eq!(
            poincare_bfs(&a2, &[0, 1], 10).unwrap(),
            IntPoly::from_ints([1, 2, 2, 1])
        );
        let h3 = RootSystem::new(H3).unwrap();
        let expected = q_int(2).unwrap() * q_int(6).unwrap() * q_int(10).unwrap();
        assert_eq!(poincare_bfs(&h3, &[0, 1, 2], 1000).unwrap(), expected);
        assert!(matches!(
            poincare_bfs(&h3, &[0, 1, 2], 119),
            Err(Error::BoundExceeded { needed: 120, .. })
        ));
    }
}
