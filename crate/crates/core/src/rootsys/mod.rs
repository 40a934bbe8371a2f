//! Root systems of the irreducible finite reflection groups, built in
//! simple-root coordinates by closing the simple roots under the simple
//! reflections, with their orbit and parabolic structure.

mod classify;
mod coxeter;
mod datum;
mod types;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::IntPoly;

pub use classify::{classify_parabolic, parabolic_label};
pub use coxeter::{coxeter_element, coxeter_element_in_order, coxeter_power_trace, poincare_bfs, CoxPermutation};
pub use datum::{build_datum, build_datum_with_ceiling, CartanMatrix, CoxeterDatum, Num, DEFAULT_MAX_DIHEDRAL};
pub use types::GroupType;

use datum::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitLabel {
    /// The whole root system, in single-orbit types.
    All,
    Long,
    Short,
}

impl OrbitLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrbitLabel::All => "all",
            OrbitLabel::Long => "long",
            OrbitLabel::Short => "short",
        }
    }
}

impl std::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub index: usize,
    pub coords: Vec<Num>,
}

/// One W-orbit of roots.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub label: OrbitLabel,
    /// Root indices, ascending.
    pub members: Vec<usize>,
    /// The unique member pairing non-negatively with every simple coroot.
    pub dominant: usize,
    /// Simple reflections fixing the dominant root (0-based).
    pub stabilizer: Vec<usize>,
    pub stabilizer_type: Vec<GroupType>,
    /// `d(α₀, α)` for each entry of `members`.
    pub distances: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    datum: CoxeterDatum,
    roots: Vec<Root>,
    positive: Vec<bool>,
    heights: Option<Vec<i64>>,
    negation: Vec<usize>,
    /// `reflections[i][r]` is the index of `s_i(root r)`.
    reflections: Vec<Vec<usize>>,
    /// Sign of `⟨root r, α_i^∨⟩`, stored as `pairing_signs[r][i]`.
    pairing_signs: Vec<Vec<i8>>,
    orbits: Vec<Orbit>,
    orbit_of: Vec<usize>,
    distance_of: Vec<u32>,
}

struct Generated<R> {
    roots: Vec<Vec<R>>,
    reflections: Vec<Vec<usize>>,
    pairing_signs: Vec<Vec<i8>>,
    negation: Vec<usize>,
}

fn pairing<R: Ring>(cartan: &[Vec<R>], i: usize, c: &[R]) -> R {
    let mut acc = c[0].sub(&c[0]);
    for (a, x) in cartan[i].iter().zip(c) {
        if !a.is_zero() && !x.is_zero() {
            acc = acc.add(&a.mul(x));
        }
    }
    acc
}

/// Breadth-first closure of the unit vectors under `c_i ↦ c_i − Σ_j A_ij c_j`.
fn generate<R: Ring>(cartan: &[Vec<R>], zero: &R, one: &R, expected: usize) -> Result<Generated<R>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<R>> = Vec::with_capacity(expected);
    let mut index: HashMap<Vec<R>, usize> = HashMap::with_capacity(expected);
    for i in 0..n {
        let mut v = vec![zero.clone(); n];
        v[i] = one.clone();
        index.insert(v.clone(), i);
        roots.push(v);
    }
    let mut reflections = vec![Vec::with_capacity(expected); n];
    let mut pairing_signs = Vec::with_capacity(expected);
    let mut next = 0;
    while next < roots.len() {
        let c = roots[next].clone();
        let mut signs = Vec::with_capacity(n);
        for (i, table) in reflections.iter_mut().enumerate() {
            let p = pairing(cartan, i, &c);
            signs.push(p.signum());
            let target = if p.is_zero() {
                next
            } else {
                let mut image = c.clone();
                image[i] = c[i].sub(&p);
                let len = roots.len();
                *index.entry(image.clone()).or_insert_with(|| {
                    roots.push(image);
                    len
                })
            };
            table.push(target);
        }
        pairing_signs.push(signs);
        if roots.len() > expected {
            return Err(Error::structural(format!(
                "reflection closure exceeded the expected {expected} roots"
            )));
        }
        next += 1;
    }
    if roots.len() != expected {
        return Err(Error::structural(format!(
            "reflection closure produced {} roots, expected h*l = {expected}",
            roots.len()
        )));
    }
    let negation = roots
        .iter()
        .map(|c| {
            let neg: Vec<R> = c.iter().map(|x| zero.sub(x)).collect();
            index
                .get(&neg)
                .copied()
                .ok_or_else(|| Error::structural("root system is not closed under negation"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Generated {
        roots,
        reflections,
        pairing_signs,
        negation,
    })
}

/// Common sign of a coordinate vector; errors when signs are mixed.
fn root_sign<R: Ring>(c: &[R]) -> Result<bool> {
    let signs: Vec<i8> = c.iter().map(Ring::signum).filter(|&s| s != 0).collect();
    match signs.first() {
        Some(&s) if signs.iter().all(|&t| t == s) => Ok(s > 0),
        _ => Err(Error::structural("root with mixed-sign coordinates")),
    }
}

impl RootSystem {
    /// Build the datum and the full root system of a type.
    pub fn new(t: GroupType) -> Result<Self> {
        Self::from_datum(build_datum(t)?)
    }

    pub fn from_datum(datum: CoxeterDatum) -> Result<Self> {
        let expected = datum.root_count();
        let (roots, positive, heights, negation, reflections, pairing_signs, norms2) = match &datum.cartan {
            CartanMatrix::Int(a) => {
                let g = generate(a, &0i64, &1i64, expected)?;
                let positive = g.roots.iter().map(|c| root_sign(c)).collect::<Result<Vec<_>>>()?;
                let heights: Vec<i64> = g.roots.iter().map(|c| c.iter().sum()).collect();
                let norms = datum.simple_norms.as_ref().unwrap();
                // 2(α, α) = Σ c_i c_j A_ij n_i
                let norms2: Vec<i64> = g
                    .roots
                    .iter()
                    .map(|c| {
                        (0..c.len())
                            .flat_map(|i| (0..c.len()).map(move |j| (i, j)))
                            .map(|(i, j)| c[i] * c[j] * a[i][j] * norms[i] as i64)
                            .sum()
                    })
                    .collect();
                let roots = g
                    .roots
                    .into_iter()
                    .enumerate()
                    .map(|(index, c)| Root {
                        index,
                        coords: c.into_iter().map(Num::Int).collect(),
                    })
                    .collect();
                (
                    roots,
                    positive,
                    Some(heights),
                    g.negation,
                    g.reflections,
                    g.pairing_signs,
                    Some(norms2),
                )
            }
            CartanMatrix::Field(a) => {
                let spec = datum.field.as_ref().unwrap();
                let zero = crate::scalars::Scalar::zero(spec);
                let one = crate::scalars::Scalar::one(spec);
                let g = generate(a, &zero, &one, expected)?;
                let positive = g.roots.iter().map(|c| root_sign(c)).collect::<Result<Vec<_>>>()?;
                let roots = g
                    .roots
                    .into_iter()
                    .enumerate()
                    .map(|(index, c)| Root {
                        index,
                        coords: c.into_iter().map(Num::Field).collect(),
                    })
                    .collect();
                (roots, positive, None, g.negation, g.reflections, g.pairing_signs, None)
            }
        };

        for (r, &neg) in negation.iter().enumerate() {
            if positive[r] == positive[neg] {
                return Err(Error::structural("a root and its negative share a sign"));
            }
        }

        let mut rs = RootSystem {
            datum,
            roots,
            positive,
            heights,
            negation,
            reflections,
            pairing_signs,
            orbits: Vec::new(),
            orbit_of: Vec::new(),
            distance_of: Vec::new(),
        };
        rs.build_orbits(norms2.as_deref())?;
        Ok(rs)
    }

    fn build_orbits(&mut self, norms2: Option<&[i64]>) -> Result<()> {
        let n = self.roots.len();
        let mut orbit_of = vec![usize::MAX; n];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let r = members[k];
                for table in &self.reflections {
                    let s = table[r];
                    if orbit_of[s] == usize::MAX {
                        orbit_of[s] = id;
                        members.push(s);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            components.push(members);
        }

        let labels = self.orbit_labels(&components, norms2)?;
        let mut orbits = Vec::with_capacity(components.len());
        for (members, label) in components.into_iter().zip(labels) {
            let dominant: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&r| self.pairing_signs[r].iter().all(|&s| s >= 0))
                .collect();
            let [dominant] = dominant[..] else {
                return Err(Error::structural(format!(
                    "orbit of size {} has {} dominant members",
                    members.len(),
                    dominant.len()
                )));
            };
            let stabilizer: Vec<usize> = (0..self.datum.rank)
                .filter(|&i| self.pairing_signs[dominant][i] == 0)
                .collect();
            let stabilizer_type = classify_parabolic(&self.datum, &stabilizer)?;
            let parabolic_order: u128 = stabilizer_type.iter().map(GroupType::order).product();
            if members.len() as u128 * parabolic_order != self.datum.order() {
                return Err(Error::structural(format!(
                    "orbit-stabilizer mismatch: {} * {} != |W| = {}",
                    members.len(),
                    parabolic_order,
                    self.datum.order()
                )));
            }
            let distances = self.orbit_distances(dominant, &members)?;
            orbits.push(Orbit {
                label,
                members,
                dominant,
                stabilizer,
                stabilizer_type,
                distances,
            });
        }
        orbits.sort_by_key(|o| o.label);

        let mut distance_of = vec![0; n];
        let mut orbit_of = vec![0; n];
        for (k, o) in orbits.iter().enumerate() {
            for (&r, &d) in o.members.iter().zip(&o.distances) {
                distance_of[r] = d;
                orbit_of[r] = k;
            }
        }
        self.orbits = orbits;
        self.orbit_of = orbit_of;
        self.distance_of = distance_of;
        Ok(())
    }

    /// Long/short naming. Crystallographic types compare squared lengths
    /// (C swaps the names); in `I2(m)` with `m` even both orbits have equal
    /// length and the orbit of `α₁` is called long by convention.
    fn orbit_labels(&self, components: &[Vec<usize>], norms2: Option<&[i64]>) -> Result<Vec<OrbitLabel>> {
        match components.len() {
            1 => Ok(vec![OrbitLabel::All]),
            2 => {
                let first_is_long = match norms2 {
                    Some(len) => {
                        let (a, b) = (len[components[0][0]], len[components[1][0]]);
                        if a == b {
                            return Err(Error::structural("two orbits of equal root length"));
                        }
                        (a > b) != self.datum.group_type.swaps_orbit_labels()
                    }
                    None => components[0].contains(&0),
                };
                Ok(if first_is_long {
                    vec![OrbitLabel::Long, OrbitLabel::Short]
                } else {
                    vec![OrbitLabel::Short, OrbitLabel::Long]
                })
            }
            k => Err(Error::structural(format!("{k} root orbits in an irreducible type"))),
        }
    }

    /// Breadth-first distance from the dominant root along `α → s_i(α)`,
    /// which is the length of the shortest `w` with `w(α₀) = α`.
    fn orbit_distances(&self, dominant: usize, members: &[usize]) -> Result<Vec<u32>> {
        let mut dist: HashMap<usize, u32> = HashMap::with_capacity(members.len());
        dist.insert(dominant, 0);
        let mut queue = VecDeque::from([dominant]);
        while let Some(r) = queue.pop_front() {
            let d = dist[&r];
            for table in &self.reflections {
                let s = table[r];
                if s != r && !dist.contains_key(&s) {
                    dist.insert(s, d + 1);
                    queue.push_back(s);
                }
            }
        }
        members
            .iter()
            .map(|r| {
                dist.get(r)
                    .copied()
                    .ok_or_else(|| Error::structural(format!("root {r} unreachable from its dominant root")))
            })
            .collect()
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn group_type(&self) -> GroupType {
        self.datum.group_type
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn h(&self) -> u32 {
        self.datum.h
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_positive(&self, r: usize) -> bool {
        self.positive[r]
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&r| self.positive[r])
    }

    /// `ht(α) = Σ c_i`, crystallographic types only.
    pub fn height(&self, r: usize) -> Option<i64> {
        self.heights.as_ref().map(|h| h[r])
    }

    pub fn negation(&self, r: usize) -> usize {
        self.negation[r]
    }

    /// Index of `s_i(root r)`.
    pub fn reflect(&self, i: usize, r: usize) -> usize {
        self.reflections[i][r]
    }

    /// Simple reflection `s_i` as a permutation of root indices.
    pub fn reflection_table(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit(&self, label: OrbitLabel) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.label == label)
    }

    /// Index into [`RootSystem::orbits`] of the orbit containing root `r`.
    pub fn orbit_of(&self, r: usize) -> usize {
        self.orbit_of[r]
    }

    /// `d(α₀, α)` with `α₀` the dominant root of `α`'s orbit.
    pub fn distance(&self, r: usize) -> u32 {
        self.distance_of[r]
    }

    /// Simple reflections fixing the dominant root of an orbit.
    pub fn stabilizer_simples(&self, orbit: usize) -> &[usize] {
        &self.orbits[orbit].stabilizer
    }

    /// Root of maximal height (crystallographic types).
    pub fn highest_root(&self) -> Option<usize> {
        let heights = self.heights.as_ref()?;
        (0..self.roots.len()).max_by_key(|&r| heights[r])
    }
}

/// `Σ_{α ∈ Φ₊} q^{ht(α)}`
pub fn height_poly(rs: &RootSystem) -> Result<IntPoly> {
    if !rs.datum.crystallographic {
        return Err(Error::NotApplicable(format!(
            "{} is not crystallographic; heights are undefined",
            rs.group_type()
        )));
    }
    Ok(IntPoly::from_exponents(
        rs.positive_roots().map(|r| rs.height(r).unwrap() as usize),
    ))
}

/// Predicted `d(α₀, α)` from heights in a simply-laced type:
/// `ht(α₀) − ht(α)`, less one more for negative `α`.
pub fn mv_formula(rs: &RootSystem, r: usize) -> Result<i64> {
    if !rs.datum.simply_laced || !rs.datum.crystallographic {
        return Err(Error::NotApplicable(format!("{} is not simply laced", rs.group_type())));
    }
    let top = rs.highest_root().expect("crystallographic");
    let diff = rs.height(top).unwrap() - rs.height(r).unwrap();
    Ok(if rs.is_positive(r) { diff } else { diff - 1 })
}

#[derive(Serialize)]
struct RootDump<'a> {
    coords: &'a [Num],
    positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    height: Option<i64>,
}

#[derive(Serialize)]
struct OrbitDump<'a> {
    dominant: usize,
    stabilizer: &'a [usize],
    stabilizer_type: &'a [GroupType],
    label: OrbitLabel,
    members: &'a [usize],
    distances: &'a [u32],
}

#[derive(Serialize)]
struct RootSystemDump<'a> {
    #[serde(rename = "type")]
    group_type: GroupType,
    rank: usize,
    h: u32,
    degrees: &'a [u32],
    roots: Vec<RootDump<'a>>,
    orbits: Vec<OrbitDump<'a>>,
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootSystemDump {
            group_type: self.group_type(),
            rank: self.rank(),
            h: self.h(),
            degrees: &self.datum.degrees,
            roots: self
                .roots
                .iter()
                .map(|r| RootDump {
                    coords: &r.coords,
                    positive: self.positive[r.index],
                    height: self.height(r.index),
                })
                .collect(),
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitDump {
                    dominant: o.dominant,
                    stabilizer: &o.stabilizer,
                    stabilizer_type: &o.stabilizer_type,
                    label: o.label,
                    members: &o.members,
                    distances: &o.distances,
                })
                .collect(),
        }
        .serialize(s)
    }
}
