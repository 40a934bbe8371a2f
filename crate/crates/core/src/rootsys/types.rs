use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Irreducible finite Coxeter type.
///
/// `C(n)` is the same Coxeter group as `B(n)`; only the long/short naming of
/// its two root orbits is exchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl GroupType {
    /// Validate rank bounds and canonicalise `I2(3) = A2`, `I2(4) = B2`.
    pub fn checked(self) -> Result<Self> {
        use GroupType::*;
        let bad = |why: &str| Err(Error::invalid(format!("{self}: {why}")));
        match self {
            A(n) if n < 1 => bad("type A needs rank >= 1"),
            B(n) | C(n) if n < 2 => bad("types B and C need rank >= 2"),
            D(n) if n < 4 => bad("type D needs rank >= 4"),
            I2(m) if m < 3 => bad("I2(m) needs m >= 3"),
            I2(3) => Ok(A(2)),
            I2(4) => Ok(B(2)),
            t => Ok(t),
        }
    }

    pub fn rank(&self) -> usize {
        use GroupType::*;
        match *self {
            A(n) | B(n) | C(n) | D(n) => n,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
        }
    }

    /// Degrees of the basic invariants, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        use GroupType::*;
        let mut d: Vec<u32> = match *self {
            A(n) => (2..=n as u32 + 1).collect(),
            B(n) | C(n) => (1..=n as u32).map(|i| 2 * i).collect(),
            D(n) => (1..n as u32).map(|i| 2 * i).chain([n as u32]).collect(),
            E6 => vec![2, 5, 6, 8, 9, 12],
            E7 => vec![2, 6, 8, 10, 12, 14, 18],
            E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            F4 => vec![2, 6, 8, 12],
            H3 => vec![2, 6, 10],
            H4 => vec![2, 12, 20, 30],
            I2(m) => vec![2, m],
        };
        d.sort_unstable();
        d
    }

    /// `|W| = ∏ d_i`.
    pub fn order(&self) -> u128 {
        self.degrees().iter().map(|&d| d as u128).product()
    }

    pub fn is_crystallographic(&self) -> bool {
        !matches!(self, GroupType::H3 | GroupType::H4 | GroupType::I2(_))
    }

    /// Coxeter matrix over the standard labelling of the diagram.
    ///
    /// B/C: the 4-bond joins the last two nodes. D: node `n-2` branches to
    /// `n-1` and `n`. E: Bourbaki numbering (node 2 hangs off node 4).
    /// F4: bonds 3-4-3. H: the 5-bond joins the first two nodes.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        use GroupType::*;
        let n = self.rank();
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, v: u32| {
            m[i - 1][j - 1] = v;
            m[j - 1][i - 1] = v;
        };
        match *self {
            A(n) => (1..n).for_each(|i| bond(i, i + 1, 3)),
            B(n) | C(n) => {
                (1..n - 1).for_each(|i| bond(i, i + 1, 3));
                bond(n - 1, n, 4);
            }
            D(n) => {
                (1..n - 1).for_each(|i| bond(i, i + 1, 3));
                bond(n - 2, n, 3);
            }
            E6 | E7 | E8 => {
                bond(1, 3, 3);
                bond(2, 4, 3);
                (3..n).for_each(|i| bond(i, i + 1, 3));
            }
            F4 => {
                bond(1, 2, 3);
                bond(2, 3, 4);
                bond(3, 4, 3);
            }
            H3 | H4 => {
                bond(1, 2, 5);
                (2..n).for_each(|i| bond(i, i + 1, 3));
            }
            I2(m) => bond(1, 2, m),
        }
        m
    }

    /// Squared lengths of the simple roots (crystallographic types only).
    /// B_n has its short simple root last; F4 is long-long-short-short.
    pub fn simple_norms(&self) -> Option<Vec<u8>> {
        use GroupType::*;
        match *self {
            A(n) | D(n) => Some(vec![2; n]),
            E6 | E7 | E8 => Some(vec![2; self.rank()]),
            B(n) | C(n) => {
                let mut v = vec![2; n];
                v[n - 1] = 1;
                Some(v)
            }
            F4 => Some(vec![2, 2, 1, 1]),
            H3 | H4 | I2(_) => None,
        }
    }

    /// True for the C aliases, whose long/short orbit names are exchanged
    /// relative to B.
    pub fn swaps_orbit_labels(&self) -> bool {
        matches!(self, GroupType::C(_))
    }

    /// Position in the canonical listing order: A, B, C, D, E, F, H, I.
    fn family_key(&self) -> (u8, u32) {
        use GroupType::*;
        match *self {
            A(n) => (0, n as u32),
            B(n) => (1, n as u32),
            C(n) => (2, n as u32),
            D(n) => (3, n as u32),
            E6 => (4, 6),
            E7 => (4, 7),
            E8 => (4, 8),
            F4 => (5, 4),
            H3 => (6, 3),
            H4 => (6, 4),
            I2(m) => (7, m),
        }
    }

    /// Ordering used for listings and parabolic multisets.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.family_key().cmp(&other.family_key())
    }

    /// LaTeX label, e.g. `A_{5}` or `I_2(8)`.
    pub fn latex(&self) -> String {
        use GroupType::*;
        match *self {
            A(n) => format!("A_{{{n}}}"),
            B(n) => format!("B_{{{n}}}"),
            C(n) => format!("C_{{{n}}}"),
            D(n) => format!("D_{{{n}}}"),
            E6 => "E_6".into(),
            E7 => "E_7".into(),
            E8 => "E_8".into(),
            F4 => "F_4".into(),
            H3 => "H_3".into(),
            H4 => "H_4".into(),
            I2(m) => format!("I_2({m})"),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            C(n) => write!(f, "C{n}"),
            D(n) => write!(f, "D{n}"),
            E6 => f.write_str("E6"),
            E7 => f.write_str("E7"),
            E8 => f.write_str("E8"),
            F4 => f.write_str("F4"),
            H3 => f.write_str("H3"),
            H4 => f.write_str("H4"),
            I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl Serialize for GroupType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Grammar: a family letter followed by the rank, or `I2(m)`; case
/// insensitive. The result is validated and canonicalised.
impl FromStr for GroupType {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim().to_ascii_uppercase();
        let parsed = if let Some(rest) = s.strip_prefix("I2") {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| fail("expected I2(m)"))?;
            GroupType::I2(inner.trim().parse().map_err(|_| fail("bad dihedral order"))?)
        } else {
            let mut chars = s.chars();
            let letter = chars.next().ok_or_else(|| fail("empty type"))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| fail("expected a family letter followed by a rank"))?;
            match (letter, rank) {
                ('A', n) => GroupType::A(n),
                ('B', n) => GroupType::B(n),
                ('C', n) => GroupType::C(n),
                ('D', n) => GroupType::D(n),
                ('E', 6) => GroupType::E6,
                ('E', 7) => GroupType::E7,
                ('E', 8) => GroupType::E8,
                ('F', 4) => GroupType::F4,
                ('H', 3) => GroupType::H3,
                ('H', 4) => GroupType::H4,
                ('E' | 'F' | 'H', _) => return Err(fail("no finite type with that rank")),
                _ => return Err(fail("unknown family letter")),
            }
        };
        parsed.checked().map_err(|e| fail(&e.to_string()))
    }
}
