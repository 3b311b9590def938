use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use super::ctype::CoxeterType;
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::exactfield::linalg::{self, mat_vec};
use crate::exactfield::poly::{q, Q};
use crate::exactfield::{Field, FieldSpec, Matrix, Scalar, Vector};

/// Index into the root list of a [`RootSystem`].
pub type RootIdx = u16;

/// A root system with its roots written in simple-root coordinates.
///
/// Roots are indexed so that `0..rank` are the simple roots in Bourbaki
/// order, `0..N` are the positive roots in generation order, and root
/// `i + N` is the negative of root `i`.
#[derive(Debug)]
pub struct RootSystem {
    ctype: CoxeterType,
    field: Field,
    gram: Matrix,
    /// Simple roots in the standard `ε`-basis, for the crystallographic types.
    ambient: Option<Vec<Vec<Q>>>,
    roots: Vec<Vector>,
    n_pos: usize,
    index: HashMap<Vector, usize>,
    simple_perms: Vec<Vec<RootIdx>>,
}

fn eps(dim: usize, entries: &[(usize, i64)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    for &(i, c) in entries {
        v[i - 1] = q(c);
    }
    v
}

fn halves(entries: &[i64]) -> Vec<Q> {
    entries.iter().map(|&c| Q::new(c.into(), 2.into())).collect()
}

/// Bourbaki simple roots in the `ε`-basis.
fn ambient_simple_roots(ctype: CoxeterType) -> Option<Vec<Vec<Q>>> {
    let chain = |dim: usize, n: usize| -> Vec<Vec<Q>> {
        (1..=n).map(|i| eps(dim, &[(i, 1), (i + 1, -1)])).collect()
    };
    Some(match ctype {
        CoxeterType::A(n) => chain(n + 1, n),
        CoxeterType::B(n) => {
            let mut v = chain(n, n - 1);
            v.push(eps(n, &[(n, 1)]));
            v
        }
        CoxeterType::C(n) => {
            let mut v = chain(n, n - 1);
            v.push(eps(n, &[(n, 2)]));
            v
        }
        CoxeterType::D(n) => {
            let mut v = chain(n, n - 1);
            v.push(eps(n, &[(n - 1, 1), (n, 1)]));
            v
        }
        CoxeterType::E(n) => {
            let mut v = vec![
                halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                eps(8, &[(1, 1), (2, 1)]),
            ];
            v.extend((1..=6).map(|i| eps(8, &[(i + 1, 1), (i, -1)])));
            v.truncate(n);
            v
        }
        CoxeterType::F4 => vec![
            eps(4, &[(2, 1), (3, -1)]),
            eps(4, &[(3, 1), (4, -1)]),
            eps(4, &[(4, 1)]),
            halves(&[1, -1, -1, -1]),
        ],
        CoxeterType::H(_) | CoxeterType::I2(_) => return None,
    })
}

/// Coxeter matrix entries `m_ij` for the non-crystallographic types.
fn coxeter_bond(ctype: CoxeterType, i: usize, j: usize) -> u32 {
    let (a, b) = (i.min(j), i.max(j));
    match ctype {
        CoxeterType::I2(m) => m,
        CoxeterType::H(_) if b == a + 1 => {
            if a == 0 {
                5
            } else {
                3
            }
        }
        _ => 2,
    }
}

impl RootSystem {
    pub fn build(ctype: CoxeterType) -> Result<RootSystem> {
        let rank = ctype.rank();
        let ambient = ambient_simple_roots(ctype);
        let (field, gram) = match &ambient {
            Some(simple) => {
                let field = FieldSpec::rational();
                let gram = (0..rank)
                    .map(|i| {
                        (0..rank)
                            .map(|j| {
                                let dot: Q = simple[i].iter().zip(&simple[j]).map(|(a, b)| a * b).sum();
                                Scalar::from_rational(&field, dot)
                            })
                            .collect()
                    })
                    .collect();
                (field, gram)
            }
            None => {
                let field = match ctype {
                    CoxeterType::H(_) | CoxeterType::I2(5) => FieldSpec::sqrt5(),
                    CoxeterType::I2(m) => FieldSpec::cos_extension(m)?,
                    _ => unreachable!(),
                };
                // B(α_i, α_i) = 2 and B(α_i, α_j) = -2cos(π/m_ij) = -γ_m.
                let gamma = Scalar::generator(&field);
                let gram = (0..rank)
                    .map(|i| {
                        (0..rank)
                            .map(|j| {
                                if i == j {
                                    return Scalar::from_int(&field, 2);
                                }
                                match coxeter_bond(ctype, i, j) {
                                    2 => Scalar::zero(&field),
                                    3 => Scalar::from_int(&field, -1),
                                    _ => -&gamma,
                                }
                            })
                            .collect()
                    })
                    .collect();
                (field, gram)
            }
        };

        let mut rs = RootSystem {
            ctype,
            field,
            gram,
            ambient,
            roots: Vec::new(),
            n_pos: 0,
            index: HashMap::new(),
            simple_perms: Vec::new(),
        };
        rs.generate_roots();
        if rs.n_pos != ctype.positive_root_count() {
            return Err(Error::Internal(format!(
                "{ctype}: generated {} positive roots, expected {}",
                rs.n_pos,
                ctype.positive_root_count()
            )));
        }
        rs.simple_perms = (0..rank).map(|i| rs.reflection_perm(i)).collect();
        Ok(rs)
    }

    fn unit(&self, i: usize) -> Vector {
        let mut v = linalg::zero_vector(&self.field, self.rank());
        v[i] = Scalar::one(&self.field);
        v
    }

    /// Breadth-first closure of the simple roots: a simple reflection `s_i`
    /// permutes the positive roots other than `α_i`.
    fn generate_roots(&mut self) {
        let rank = self.rank();
        let mut positive: Vec<Vector> = (0..rank).map(|i| self.unit(i)).collect();
        let mut index: HashMap<Vector, usize> =
            positive.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut queue: VecDeque<usize> = (0..rank).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..rank {
                if k == i {
                    continue;
                }
                let image = self.reflect_simple(&positive[k], i);
                if !index.contains_key(&image) {
                    index.insert(image.clone(), positive.len());
                    queue.push_back(positive.len());
                    positive.push(image);
                }
            }
        }
        let n = positive.len();
        let negative: Vec<Vector> = positive.iter().map(|v| linalg::neg(v)).collect();
        for (i, v) in negative.iter().enumerate() {
            index.insert(v.clone(), n + i);
        }
        positive.extend(negative);
        self.roots = positive;
        self.n_pos = n;
        self.index = index;
    }

    fn reflection_perm(&self, i: usize) -> Vec<RootIdx> {
        self.roots
            .iter()
            .map(|v| {
                let image = self.reflect_simple(v, i);
                self.index[&image] as RootIdx
            })
            .collect()
    }

    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Vector {
        &self.roots[i]
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn index_of(&self, v: &[Scalar]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    /// Index of `-α` for root `α = roots[i]`.
    pub fn negative_of(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// Permutation of root indices induced by the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> &[RootIdx] {
        &self.simple_perms[i]
    }

    pub fn bilinear(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = mat_vec(&self.gram, v).expect("rank-sized vectors");
        u.iter()
            .zip(&gv)
            .fold(Scalar::zero(&self.field), |acc, (a, b)| &acc + &(a * b))
    }

    fn reflect_simple(&self, v: &[Scalar], i: usize) -> Vector {
        // B(v, α_i) is the i-th entry of G·v.
        let bv = self.gram[i]
            .iter()
            .zip(v)
            .fold(Scalar::zero(&self.field), |acc, (a, b)| &acc + &(a * b));
        if bv.is_zero() {
            return v.to_vec();
        }
        let coef = (&bv + &bv).try_div(&self.gram[i][i]).expect("nonzero root length");
        let mut out = v.to_vec();
        out[i] = &out[i] - &coef;
        out
    }

    /// `v − 2·B(v,α)/B(α,α)·α` for `α = roots[root]`.
    pub fn reflect(&self, v: &[Scalar], root: usize) -> Vector {
        let alpha = &self.roots[root];
        let num = self.bilinear(v, alpha);
        let den = self.bilinear(alpha, alpha);
        let coef = (&num + &num).try_div(&den).expect("nonzero root length");
        linalg::sub(v, &linalg::scale(&coef, alpha))
    }

    /// Indices of the roots in `Φ_J`, the roots supported on `J`.
    pub fn parabolic_roots(&self, j: Subset) -> Vec<usize> {
        (0..self.num_roots())
            .filter(|&r| {
                self.roots[r]
                    .iter()
                    .enumerate()
                    .all(|(i, c)| j.contains(i) || c.is_zero())
            })
            .collect()
    }

    /// Simple-root coordinates to the `ε`-basis (crystallographic types).
    pub fn to_ambient(&self, v: &[Scalar]) -> Option<Vec<Q>> {
        let simple = self.ambient.as_ref()?;
        let dim = simple[0].len();
        let mut out = vec![Q::zero(); dim];
        for (c, alpha) in v.iter().zip(simple) {
            let c = c.as_rational()?;
            for (o, a) in out.iter_mut().zip(alpha) {
                *o += c * a;
            }
        }
        Some(out)
    }

    /// Inverse of [`RootSystem::to_ambient`] on the span of the roots.
    pub fn from_ambient(&self, x: &[Q]) -> Option<Vector> {
        let simple = self.ambient.as_ref()?;
        // Solve Σ c_i α_i = x through the Gram system G c = (⟨α_i, x⟩)_i.
        let rhs: Vec<Q> = simple
            .iter()
            .map(|a| a.iter().zip(x).map(|(p, r)| p * r).sum())
            .collect();
        let aug: Matrix = self
            .gram
            .iter()
            .zip(&rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(Scalar::from_rational(&self.field, -b.clone()));
                r
            })
            .collect();
        // G is nonsingular, so the kernel of [G | -b] is the line through (c, 1).
        let ker = linalg::kernel(&aug).ok()?;
        let sol = ker.into_iter().find(|v| v[self.rank()].is_one())?;
        let c: Vector = sol[..self.rank()].to_vec();
        (self.to_ambient(&c)? == x).then_some(c)
    }

    /// Formats a vector for display: `ε`-coordinates when available,
    /// otherwise simple-root coordinates.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        match self.to_ambient(v) {
            Some(x) => format!(
                "({})",
                x.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ),
            None => format!(
                "[{}]",
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}
