//! Root systems of the classical types, weights, the Weyl dimension formula
//! and Casimir eigenvalues.
//!
//! Roots are generated in the usual orthonormal coordinates `e_1, e_2, ...`
//! and then expressed in the basis of simple roots. The inner product on the
//! weight space is rescaled so that the Casimir element built from the
//! Killing form acts by `1` on the adjoint representation.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{dot, rat, Matrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

/// A root system type together with its rank, e.g. `C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub kind: RootType,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        let ok = match kind {
            RootType::A => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 3,
        };
        if ok {
            Ok(Self { kind, rank })
        } else {
            Err(Error::Unsupported(format!("{kind:?}{rank}")))
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::Unsupported(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootType::A,
            Some('B') => RootType::B,
            Some('C') => RootType::C,
            Some('D') => RootType::D,
            _ => return Err(unsupported()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        TypeLabel::new(kind, rank).map_err(|_| unsupported())
    }
}

/// Highest weight given by its coefficients on the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DominantWeight(pub Vec<u32>);

impl DominantWeight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn new(coeffs: &[u32]) -> Self {
        Self(coeffs.to_vec())
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    label: TypeLabel,
    /// simple roots in orthonormal coordinates
    simple_ambient: Vec<Vec<Rational>>,
    /// positive roots in simple-root coordinates, sorted by height
    positive: Vec<Vec<i64>>,
    /// positive roots in orthonormal coordinates, same order
    positive_ambient: Vec<Vec<Rational>>,
    /// Gram matrix of the simple roots under the Killing-normalized product
    gram: Matrix,
    cartan: Vec<Vec<i64>>,
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn combo(n: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for &(i, c) in terms {
        v[i] += rat(c);
    }
    v
}

pub fn build_root_datum(label: TypeLabel) -> RootDatum {
    let l = label.rank;
    let (ambient, simple, positive): (usize, Vec<Vec<Rational>>, Vec<Vec<Rational>>) =
        match label.kind {
            RootType::A => {
                let n = l + 1;
                let simple = (0..l).map(|i| combo(n, &[(i, 1), (i + 1, -1)])).collect();
                let mut pos = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        pos.push(combo(n, &[(i, 1), (j, -1)]));
                    }
                }
                (n, simple, pos)
            }
            RootType::B | RootType::C | RootType::D => {
                let n = l;
                let mut simple: Vec<Vec<Rational>> =
                    (0..l - 1).map(|i| combo(n, &[(i, 1), (i + 1, -1)])).collect();
                simple.push(match label.kind {
                    RootType::B => unit(n, l - 1),
                    RootType::C => combo(n, &[(l - 1, 2)]),
                    _ => combo(n, &[(l - 2, 1), (l - 1, 1)]),
                });
                let mut pos = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        pos.push(combo(n, &[(i, 1), (j, -1)]));
                        pos.push(combo(n, &[(i, 1), (j, 1)]));
                    }
                    match label.kind {
                        RootType::B => pos.push(unit(n, i)),
                        RootType::C => pos.push(combo(n, &[(i, 2)])),
                        _ => {}
                    }
                }
                (n, simple, pos)
            }
        };
    let _ = ambient;

    // express positive roots in the simple-root basis
    let simple_mat = Matrix::from_rows(simple.clone());
    let mut coords: Vec<(Vec<i64>, Vec<Rational>)> = positive
        .into_iter()
        .map(|r| {
            let c = simple_mat
                .solve_left(&r)
                .expect("positive root lies in the span of the simple roots");
            let c: Vec<i64> = c
                .iter()
                .map(|x| {
                    assert!(x.is_integer() && !x.is_negative(), "bad root coordinate");
                    x.to_integer().to_i64().unwrap()
                })
                .collect();
            (c, r)
        })
        .collect();
    coords.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });

    let mut gram = Matrix::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            gram[(i, j)] = dot(&simple[i], &simple[j]);
        }
    }
    let cartan = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = rat(2) * &gram[(i, j)] / &gram[(j, j)];
                    v.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect();

    let mut rd = RootDatum {
        label,
        simple_ambient: simple,
        positive: coords.iter().map(|c| c.0.clone()).collect(),
        positive_ambient: coords.into_iter().map(|c| c.1).collect(),
        gram,
        cartan,
    };
    // Killing normalization: <theta, theta + 2 rho> = 1
    let theta = rd.highest_root();
    let theta_r: Vec<Rational> = theta.iter().map(|&x| rat(x)).collect();
    let two_rho = rd.two_rho_root_coords();
    let sum: Vec<Rational> = theta_r.iter().zip(&two_rho).map(|(a, b)| a + b).collect();
    let s = rd.inner_root_coords(&theta_r, &sum);
    rd.gram = rd.gram.scale(&s.recip());
    rd
}

impl RootDatum {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.num_positive()
    }

    /// Dimension `(g + l) / 2` of a maximal nullspace.
    pub fn d(&self) -> usize {
        (self.dim() + self.rank()) / 2
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn positive_roots_ambient(&self) -> &[Vec<Rational>] {
        &self.positive_ambient
    }

    pub fn simple_roots_ambient(&self) -> &[Vec<Rational>] {
        &self.simple_ambient
    }

    pub fn height(&self, root: usize) -> i64 {
        self.positive[root].iter().sum()
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.positive.iter().position(|r| r == coords)
    }

    pub fn is_simple(&self, root: usize) -> bool {
        self.height(root) == 1
    }

    /// Index of the positive root equal to the `i`-th simple root.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.root_index(&c).expect("simple roots are positive roots")
    }

    /// Cartan matrix with entries `2 (a_i, a_j) / (a_j, a_j)`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn highest_root(&self) -> Vec<i64> {
        self.positive.last().cloned().expect("nonempty root system")
    }

    /// All ways of writing a positive root as a sum of two positive roots,
    /// as unordered pairs `(a, b)` with `a <= b` in the height order.
    pub fn decompositions(&self, root: usize) -> Vec<(usize, usize)> {
        let target = &self.positive[root];
        let mut out = Vec::new();
        for a in 0..self.positive.len() {
            let rest: Vec<i64> = target.iter().zip(&self.positive[a]).map(|(x, y)| x - y).collect();
            if let Some(b) = self.root_index(&rest) {
                if a <= b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn two_rho_root_coords(&self) -> Vec<Rational> {
        let mut s = vec![Rational::zero(); self.rank()];
        for r in &self.positive {
            for (x, c) in s.iter_mut().zip(r) {
                *x += rat(*c);
            }
        }
        s
    }

    pub fn rho_root_coords(&self) -> Vec<Rational> {
        self.two_rho_root_coords()
            .into_iter()
            .map(|x| x / rat(2))
            .collect()
    }

    /// Killing-normalized inner product of two weights written in
    /// simple-root coordinates.
    pub fn inner_root_coords(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, &self.gram.mul_vec(b))
    }

    /// Simple-root coordinates of a weight given on the fundamental weights.
    pub fn weight_root_coords(&self, w: &DominantWeight) -> Vec<Rational> {
        assert_eq!(w.0.len(), self.rank(), "weight has wrong length");
        // (lambda, a_i^vee) = a_i  with  a_i^vee = 2 a_i / (a_i, a_i)
        let l = self.rank();
        let mut m = Matrix::zeros(l, l);
        for i in 0..l {
            for j in 0..l {
                m[(i, j)] = rat(2) * &self.gram[(j, i)] / &self.gram[(i, i)];
            }
        }
        let rhs: Vec<Rational> = w.0.iter().map(|&a| rat(a as i64)).collect();
        m.solve(&rhs).expect("Cartan matrix is invertible")
    }

    /// Coefficients on the fundamental weights of a weight given in the
    /// orthonormal coordinates. Returns `None` if it is not dominant integral.
    pub fn weight_from_ambient(&self, v: &[Rational]) -> Option<DominantWeight> {
        let mut out = Vec::new();
        for a in &self.simple_ambient {
            let c = rat(2) * dot(v, a) / dot(a, a);
            if !c.is_integer() || c.is_negative() {
                return None;
            }
            out.push(c.to_integer().to_u32()?);
        }
        Some(DominantWeight(out))
    }

    /// Highest weight `2 rho`, i.e. `(2, ..., 2)` on the fundamental weights.
    pub fn two_rho(&self) -> DominantWeight {
        DominantWeight(vec![2; self.rank()])
    }

    /// Highest weight of the adjoint representation.
    pub fn adjoint_weight(&self) -> DominantWeight {
        let theta: Vec<Rational> = self.highest_root().iter().map(|&x| rat(x)).collect();
        let l = self.rank();
        let coeffs = (0..l)
            .map(|i| {
                let mut e = vec![Rational::zero(); l];
                e[i] = Rational::one();
                let c = rat(2) * self.inner_root_coords(&theta, &e) / &self.gram[(i, i)];
                c.to_integer().to_u32().unwrap()
            })
            .collect();
        DominantWeight(coeffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.label.to_string(),
            "g": self.dim(),
            "l": self.rank(),
            "d": self.d(),
            "positive_roots": self.positive,
        })
    }
}

/// Weyl dimension formula.
pub fn weyl_dim(rd: &RootDatum, lambda: &DominantWeight) -> u128 {
    let lam = rd.weight_root_coords(lambda);
    let rho = rd.rho_root_coords();
    let shifted: Vec<Rational> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut prod = Rational::one();
    for root in rd.positive_roots() {
        let r: Vec<Rational> = root.iter().map(|&x| rat(x)).collect();
        prod *= rd.inner_root_coords(&shifted, &r) / rd.inner_root_coords(&rho, &r);
    }
    assert!(prod.is_integer(), "Weyl formula produced a non-integer");
    prod.to_integer().to_u128().expect("dimension fits in u128")
}

/// Eigenvalue `<lambda, lambda + 2 rho>` of the Killing-normalized Casimir.
pub fn casimir_eigenvalue(rd: &RootDatum, lambda: &DominantWeight) -> Rational {
    let lam = rd.weight_root_coords(lambda);
    let shifted: Vec<Rational> = lam
        .iter()
        .zip(rd.two_rho_root_coords())
        .map(|(a, b)| a + b)
        .collect();
    rd.inner_root_coords(&lam, &shifted)
}

/// True iff `mu - lambda` is a non-negative integer combination of simple
/// roots.
pub fn dominance_check(rd: &RootDatum, lambda: &DominantWeight, mu: &DominantWeight) -> bool {
    let a = rd.weight_root_coords(lambda);
    let b = rd.weight_root_coords(mu);
    a.iter()
        .zip(&b)
        .all(|(x, y)| {
            let diff = y - x;
            diff.is_integer() && !diff.is_negative()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn rd(s: &str) -> RootDatum {
        build_root_datum(s.parse().unwrap())
    }

    #[test]
    fn a2_roots() {
        let a2 = rd("A2");
        assert_eq!(a2.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.rho_root_coords(), vec![rat(1), rat(1)]);
        assert_eq!((a2.dim(), a2.rank(), a2.d()), (8, 2, 5));
        assert_eq!(a2.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn c2_roots() {
        let c2 = rd("C2");
        assert_eq!(
            c2.positive_roots(),
            &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]
        );
        assert_eq!(c2.dim(), 10);
        assert_eq!(c2.cartan_matrix(), &[vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn a1_roots() {
        let a1 = rd("A1");
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        assert_eq!((a1.dim(), a1.d()), (3, 2));
    }

    #[test]
    fn labels() {
        assert!("Z9".parse::<TypeLabel>().is_err());
        assert!("B1".parse::<TypeLabel>().is_err());
        assert!("D2".parse::<TypeLabel>().is_err());
        assert!("A0".parse::<TypeLabel>().is_err());
        assert_eq!("d4".parse::<TypeLabel>().unwrap().to_string(), "D4");
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = rd("A2");
        assert_eq!(weyl_dim(&a2, &DominantWeight::new(&[2, 2])), 27);
        assert_eq!(weyl_dim(&a2, &DominantWeight::new(&[1, 1])), 8);
        assert_eq!(weyl_dim(&a2, &DominantWeight::new(&[3, 0])), 10);
        let c2 = rd("C2");
        // lambda + rho = 3w1 + 2w2 paired with the coroots of a1, a2, a1+a2
        // (= a1^v + 2 a2^v), 2a1+a2 (= a1^v + a2^v): (3*2*7*5) / (1*1*3*2)
        assert_eq!(weyl_dim(&c2, &DominantWeight::new(&[2, 1])), 35);
        assert_eq!(weyl_dim(&c2, &DominantWeight::new(&[2, 2])), 81);
        assert_eq!(weyl_dim(&c2, &DominantWeight::new(&[1, 0])), 4);
        assert_eq!(weyl_dim(&c2, &DominantWeight::new(&[0, 1])), 5);
    }

    #[test]
    fn casimir_values() {
        let a2 = rd("A2");
        assert_eq!(casimir_eigenvalue(&a2, &DominantWeight::new(&[1, 1])), rat(1));
        assert_eq!(casimir_eigenvalue(&a2, &DominantWeight::new(&[2, 2])), ratio(8, 3));
        assert_eq!(casimir_eigenvalue(&a2, &DominantWeight::zero(2)), rat(0));
    }

    #[test]
    fn dominance() {
        let a2 = rd("A2");
        let two_rho = a2.two_rho();
        assert!(dominance_check(&a2, &DominantWeight::new(&[1, 1]), &two_rho));
        assert!(dominance_check(&a2, &two_rho, &two_rho));
        // (2,2) - (3,0) in root coordinates: (2,2) -> (2,2), (3,0) -> (2,1);
        // difference (0,1) >= 0
        assert!(dominance_check(&a2, &DominantWeight::new(&[3, 0]), &two_rho));
        assert!(!dominance_check(&a2, &DominantWeight::new(&[4, 0]), &two_rho));
        // (1,0) and (2,2) differ by a non-integral root combination
        assert!(!dominance_check(&a2, &DominantWeight::new(&[1, 0]), &two_rho));
    }

    #[test]
    fn structural_invariants_hold_for_classical_types() {
        for s in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "D5"] {
            let r = rd(s);
            let theta: Vec<Rational> = r.highest_root().iter().map(|&x| rat(x)).collect();
            let sum: Vec<Rational> = theta
                .iter()
                .zip(r.two_rho_root_coords())
                .map(|(a, b)| a + b)
                .collect();
            assert_eq!(r.inner_root_coords(&theta, &sum), rat(1), "{s}");
            assert_eq!(casimir_eigenvalue(&r, &r.adjoint_weight()), rat(1), "{s}");
            assert_eq!(weyl_dim(&r, &r.adjoint_weight()), r.dim() as u128, "{s}");
            assert_eq!(weyl_dim(&r, &DominantWeight::zero(r.rank())), 1, "{s}");
            for (i, _) in r.positive_roots().iter().enumerate() {
                assert!(r.is_simple(i) || !r.decompositions(i).is_empty(), "{s}");
            }
        }
    }
}
