//! Identification of standard parabolic subgroups by their Coxeter diagram.

use super::datum::CoxeterDatum;
use super::types::GroupType;
use crate::error::{Error, Result};

/// Decompose the diagram induced on `subset` into irreducible components
/// and name each one. The empty subset gives the empty multiset.
pub fn classify_parabolic(datum: &CoxeterDatum, subset: &[usize]) -> Result<Vec<GroupType>> {
    classify_diagram(&datum.coxeter_matrix, subset)
}

pub(crate) fn classify_diagram(m: &[Vec<u32>], subset: &[usize]) -> Result<Vec<GroupType>> {
    if let Some(&bad) = subset.iter().find(|&&i| i >= m.len()) {
        return Err(Error::invalid(format!("simple index {bad} out of range")));
    }
    let mut remaining: Vec<usize> = subset.to_vec();
    remaining.sort_unstable();
    remaining.dedup();

    let mut types = Vec::new();
    while let Some(start) = remaining.first().copied() {
        let mut component = vec![start];
        let mut k = 0;
        while k < component.len() {
            let v = component[k];
            for &u in &remaining {
                if m[v][u] >= 3 && !component.contains(&u) {
                    component.push(u);
                }
            }
            k += 1;
        }
        remaining.retain(|u| !component.contains(u));
        types.push(classify_connected(m, &component)?);
    }
    types.sort_by(GroupType::canonical_cmp);
    Ok(types)
}

fn classify_connected(m: &[Vec<u32>], nodes: &[usize]) -> Result<GroupType> {
    let n = nodes.len();
    let unclassifiable = || {
        Error::structural(format!(
            "diagram on nodes {nodes:?} is not a finite irreducible Coxeter diagram"
        ))
    };
    if n == 1 {
        return Ok(GroupType::A(1));
    }
    let neighbours = |v: usize| -> Vec<usize> { nodes.iter().copied().filter(|&u| u != v && m[v][u] >= 3).collect() };
    let edge_count: usize = nodes.iter().map(|&v| neighbours(v).len()).sum::<usize>() / 2;
    if edge_count != n - 1 {
        return Err(unclassifiable());
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| neighbours(v).len() >= 3).collect();

    if branch.is_empty() {
        // Path: walk from an end and read off the bond labels.
        let start = nodes
            .iter()
            .copied()
            .find(|&v| neighbours(v).len() == 1)
            .ok_or_else(unclassifiable)?;
        let mut path = vec![start];
        while path.len() < n {
            let last = *path.last().unwrap();
            let next = neighbours(last)
                .into_iter()
                .find(|u| !path.contains(u))
                .ok_or_else(unclassifiable)?;
            path.push(next);
        }
        let mut bonds: Vec<u32> = path.windows(2).map(|w| m[w[0]][w[1]]).collect();
        if bonds.first() < bonds.last() {
            bonds.reverse();
        }
        // Any special bond now sits at the front when it is at an end.
        let big = bonds.iter().filter(|&&b| b > 3).count();
        return match (n, big, bonds.as_slice()) {
            (_, 0, _) => Ok(GroupType::A(n)),
            (2, 1, [4]) => Ok(GroupType::B(2)),
            (2, 1, [b]) => Ok(GroupType::I2(*b)),
            (_, 1, [4, ..]) => Ok(GroupType::B(n)),
            (4, 1, [3, 4, 3]) => Ok(GroupType::F4),
            (3, 1, [5, 3]) => Ok(GroupType::H3),
            (4, 1, [5, 3, 3]) => Ok(GroupType::H4),
            _ => Err(unclassifiable()),
        };
    }

    if branch.len() != 1 || neighbours(branch[0]).len() != 3 {
        return Err(unclassifiable());
    }
    let centre = branch[0];
    let simply_laced = nodes.iter().all(|&v| neighbours(v).iter().all(|&u| m[v][u] == 3));
    if !simply_laced {
        return Err(unclassifiable());
    }
    let mut arms: Vec<usize> = neighbours(centre)
        .into_iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            loop {
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&u| u != prev).collect();
                match next.as_slice() {
                    [] => return len,
                    [u] => {
                        (prev, cur, len) = (cur, *u, len + 1);
                    }
                    _ => return usize::MAX,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, k] => Ok(GroupType::D(k + 3)),
        [1, 2, 2] => Ok(GroupType::E6),
        [1, 2, 3] => Ok(GroupType::E7),
        [1, 2, 4] => Ok(GroupType::E8),
        _ => Err(unclassifiable()),
    }
}

/// `A1 × B3`, or `1` for the trivial group.
pub fn parabolic_label(types: &[GroupType]) -> String {
    if types.is_empty() {
        "1".to_string()
    } else {
        types.iter().map(ToString::to_string).collect::<Vec<_>>().join(" x ")
    }
}
