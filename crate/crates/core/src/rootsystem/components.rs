//! Classification of the Coxeter sub-diagram on a subset of simple roots.

use super::build::RootSystem;
use super::ctype::CoxeterType;
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::exactfield::{FieldKind, Scalar};

/// Bond order `m` between simple roots `i` and `j`, recovered from
/// `4cos²(π/m) = 4·B(α_i,α_j)² / (B(α_i,α_i)·B(α_j,α_j))`.
pub fn bond_order(rs: &RootSystem, i: usize, j: usize) -> Result<u32> {
    let g = rs.gram();
    if g[i][j].is_zero() {
        return Ok(2);
    }
    let num = &g[i][j] * &g[i][j];
    let num = &(&num + &num) + &(&num + &num);
    let den = &g[i][i] * &g[j][j];
    let c = num.try_div(&den)?;
    let field = rs.field();
    for (value, m) in [(1, 3), (2, 4), (3, 6)] {
        if c == Scalar::from_int(field, value) {
            return Ok(m);
        }
    }
    let gamma = Scalar::generator(field);
    if c == &gamma * &gamma {
        match field.kind() {
            FieldKind::QuadraticSqrt5 => return Ok(5),
            FieldKind::CosExtension(m) => return Ok(m),
            FieldKind::Rational => {}
        }
    }
    Err(Error::Internal(format!(
        "{}: unrecognised bond 4cos² = {c} between {} and {}",
        rs.ctype(),
        i + 1,
        j + 1
    )))
}

/// Connected components of the diagram restricted to `j`, each as a sorted
/// list of simple indices.
pub fn component_subsets(rs: &RootSystem, j: Subset) -> Vec<Subset> {
    let mut seen = Subset::EMPTY;
    let mut out = Vec::new();
    for start in j.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = Subset::EMPTY.with(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in j.iter() {
                if !comp.contains(w) && !rs.gram()[v][w].is_zero() {
                    comp = comp.with(w);
                    stack.push(w);
                }
            }
        }
        seen = Subset::from_bits(seen.bits() | comp.bits());
        out.push(comp);
    }
    out
}

/// The multiset of irreducible types of the parabolic subsystem on `j`,
/// in the order of the components' smallest indices.
pub fn classify_components(rs: &RootSystem, j: Subset) -> Result<Vec<CoxeterType>> {
    component_subsets(rs, j)
        .into_iter()
        .map(|c| classify_connected(rs, c))
        .collect()
}

/// Compares `B(α_a, α_a)` with `B(α_b, α_b)`.
fn length_cmp(rs: &RootSystem, a: usize, b: usize) -> i32 {
    (&rs.gram()[a][a] - &rs.gram()[b][b]).signum()
}

fn classify_connected(rs: &RootSystem, comp: Subset) -> Result<CoxeterType> {
    let verts = comp.indices();
    let n = verts.len();
    let unclassifiable = || {
        Error::Internal(format!("{}: cannot classify component {comp}", rs.ctype()))
    };
    if n == 1 {
        return Ok(CoxeterType::A(1));
    }
    let neighbours = |v: usize| -> Vec<usize> {
        verts
            .iter()
            .copied()
            .filter(|&w| w != v && !rs.gram()[v][w].is_zero())
            .collect()
    };

    if let Some(&branch) = verts.iter().find(|&&v| neighbours(v).len() == 3) {
        let mut legs = Vec::new();
        for start in neighbours(branch) {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                if bond_order(rs, prev, cur)? != 3 {
                    return Err(unclassifiable());
                }
                let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [] => break,
                    [w] => {
                        prev = cur;
                        cur = *w;
                        len += 1;
                    }
                    _ => return Err(unclassifiable()),
                }
            }
            legs.push(len);
        }
        legs.sort_unstable();
        return match legs.as_slice() {
            [1, 1, k] => Ok(CoxeterType::D(k + 3)),
            [1, 2, 2] => Ok(CoxeterType::E(6)),
            [1, 2, 3] => Ok(CoxeterType::E(7)),
            [1, 2, 4] => Ok(CoxeterType::E(8)),
            _ => Err(unclassifiable()),
        };
    }

    // A path: walk it from the end with the smaller index.
    let start = *verts
        .iter()
        .find(|&&v| neighbours(v).len() == 1)
        .ok_or_else(unclassifiable)?;
    let mut path = vec![start];
    while path.len() < n {
        let last = *path.last().unwrap();
        let prev = path.len().checked_sub(2).map(|k| path[k]);
        let next = neighbours(last)
            .into_iter()
            .find(|&w| Some(w) != prev)
            .ok_or_else(unclassifiable)?;
        path.push(next);
    }
    let bonds: Vec<u32> = path
        .windows(2)
        .map(|w| bond_order(rs, w[0], w[1]))
        .collect::<Result<_>>()?;

    if n == 2 {
        let m = bonds[0];
        return Ok(match m {
            3 => CoxeterType::A(2),
            4 => match length_cmp(rs, path[1], path[0]) {
                1 => CoxeterType::C(2),
                -1 => CoxeterType::B(2),
                _ => CoxeterType::I2(4),
            },
            _ => CoxeterType::I2(m),
        });
    }
    let special: Vec<(usize, u32)> = bonds
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, m)| m != 3)
        .collect();
    match special.as_slice() {
        [] => Ok(CoxeterType::A(n)),
        [(k, 4)] if n == 4 && *k == 1 => Ok(CoxeterType::F4),
        [(k, 4)] if *k == 0 || *k == n - 2 => {
            // the end vertex of the double bond decides B (short) or C (long)
            let (end, inner) = if *k == 0 { (path[0], path[1]) } else { (path[n - 1], path[n - 2]) };
            match length_cmp(rs, end, inner) {
                1 => Ok(CoxeterType::C(n)),
                -1 => Ok(CoxeterType::B(n)),
                _ => Err(unclassifiable()),
            }
        }
        [(k, 5)] if (*k == 0 || *k == n - 2) && (3..=4).contains(&n) => Ok(CoxeterType::H(n)),
        _ => Err(unclassifiable()),
    }
}

/// Whether the longest element of the parabolic subsystem is central,
/// judged from its component types alone.
pub fn central_by_type(components: &[CoxeterType]) -> bool {
    components.iter().all(|t| t.longest_is_central())
}

/// Human-readable product of component types, e.g. `D4×A1`, or `∅`.
pub fn format_components(components: &[CoxeterType]) -> String {
    if components.is_empty() {
        return "∅".to_string();
    }
    components
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("×")
}
