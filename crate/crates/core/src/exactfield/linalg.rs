//! Exact linear algebra over a [`Scalar`] field.

use super::field::Field;
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub type Vector = Vec<Scalar>;

/// Row-major square or rectangular matrix.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![Scalar::zero(field); n]
}

pub fn identity(field: &Field, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Scalar::from_int(field, (i == j) as i64))
                .collect()
        })
        .collect()
}

pub fn add(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn neg(u: &[Scalar]) -> Vector {
    u.iter().map(|a| -a).collect()
}

pub fn scale(c: &Scalar, u: &[Scalar]) -> Vector {
    u.iter().map(|a| c * a).collect()
}

pub fn is_zero(u: &[Scalar]) -> bool {
    u.iter().all(Scalar::is_zero)
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Result<Vector> {
    m.iter()
        .map(|row| {
            if row.len() != v.len() {
                return Err(Error::DimensionMismatch {
                    expected: row.len(),
                    found: v.len(),
                });
            }
            let mut acc = Scalar::zero(v[0].field());
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            Ok(acc)
        })
        .collect()
}

/// `M + c·I`.
pub fn shift_diagonal(m: &Matrix, c: &Scalar) -> Matrix {
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, a)| if i == j { a + c } else { a.clone() })
                .collect()
        })
        .collect()
}

/// Basis of the null space `{v : M·v = 0}` by Gauss–Jordan elimination.
/// The basis has one vector per free column, with a `1` in that column.
pub fn kernel(m: &Matrix) -> Result<Vec<Vector>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if let Some(bad) = m.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch {
            expected: cols,
            found: bad.len(),
        });
    }
    if cols == 0 {
        return Ok(vec![]);
    }
    let field = m[0][0].field().clone();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv()?;
        a[r] = scale(&inv, &a[r]);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let scaled = scale(&f, &a[r]);
                a[i] = sub(&a[i], &scaled);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&fc| {
            let mut v = zero_vector(&field, cols);
            v[fc] = Scalar::one(&field);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[row][fc];
            }
            v
        })
        .collect())
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[Vector]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    // rank(A) = cols(A^T) - dim ker(A^T) with the vectors as columns of A^T
    let n = vectors.len();
    Ok(n - kernel(&transpose(vectors))?.len())
}

pub fn transpose(m: &[Vector]) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// `u` and `v` span at most a line: every 2×2 minor of the stack vanishes.
/// The zero vector is proportional to every vector.
pub fn proportional(u: &[Scalar], v: &[Scalar]) -> bool {
    assert_eq!(u.len(), v.len(), "proportional: dimension mismatch");
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            if &u[i] * &v[j] != &u[j] * &v[i] {
                return false;
            }
        }
    }
    true
}

/// Representative of the line through `v`, scaled so that the first
/// nonzero coordinate is `1`; `None` for the zero vector. Two nonzero
/// vectors are proportional iff their directions are equal.
pub fn direction(v: &[Scalar]) -> Option<Vector> {
    let lead = v.iter().find(|a| !a.is_zero())?;
    let inv = lead.inv().expect("nonzero");
    Some(scale(&inv, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldSpec;
    use proptest::prelude::*;

    fn ints(f: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(f, x)).collect()
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = FieldSpec::rational();
        assert!(kernel(&identity(&f, 3)).unwrap().is_empty());
        let z = vec![ints(&f, &[0, 0]), ints(&f, &[0, 0])];
        assert_eq!(kernel(&z).unwrap().len(), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = FieldSpec::sqrt5();
        let g = Scalar::generator(&f);
        let one = Scalar::one(&f);
        let m = vec![
            vec![one.clone(), g.clone(), &g * &g],
            vec![g.clone(), &g * &g, &(&g * &g) * &g],
        ];
        let ker = kernel(&m).unwrap();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(is_zero(&mat_vec(&m, v).unwrap()));
        }
        assert_eq!(rank(&ker).unwrap(), 2);
    }

    #[test]
    fn proportional_examples() {
        let f = FieldSpec::rational();
        assert!(proportional(&ints(&f, &[1, 2]), &ints(&f, &[2, 4])));
        assert!(!proportional(&ints(&f, &[1, 0]), &ints(&f, &[0, 1])));
        assert!(proportional(&ints(&f, &[0, 0]), &ints(&f, &[3, 5])));
    }

    proptest! {
        #[test]
        fn kernel_is_exact(entries in proptest::collection::vec(-3i64..4, 12)) {
            let f = FieldSpec::rational();
            let m: Matrix = entries.chunks(4).map(|r| ints(&f, r)).collect();
            let ker = kernel(&m).unwrap();
            for v in &ker {
                prop_assert!(is_zero(&mat_vec(&m, v).unwrap()));
            }
            prop_assert_eq!(rank(&ker).unwrap(), ker.len());
            prop_assert_eq!(rank(&m).unwrap() + ker.len(), 4);
        }

        #[test]
        fn proportional_relation(
            u in proptest::collection::vec(-5i64..6, 3),
            v in proptest::collection::vec(-5i64..6, 3),
            c in 1i64..5,
        ) {
            let f = FieldSpec::rational();
            let (u, v) = (ints(&f, &u), ints(&f, &v));
            let c = Scalar::from_int(&f, c);
            prop_assert!(proportional(&u, &u));
            prop_assert_eq!(proportional(&u, &v), proportional(&v, &u));
            prop_assert_eq!(proportional(&u, &v), proportional(&scale(&c, &u), &v));
            prop_assert_eq!(proportional(&u, &v), proportional(&u, &neg(&scale(&c, &v))));
            if !is_zero(&u) && !is_zero(&v) {
                prop_assert_eq!(proportional(&u, &v), direction(&u) == direction(&v));
            }
        }
    }
}
