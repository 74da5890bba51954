//! Maximal nullspaces of the invariant 3-form: the membership predicate,
//! the chart through nullspaces containing the standard Cartan, parabolic
//! closures and orbit data, degenerations by one-parameter subgroups, the
//! operator `D` on the top exterior cube of a Borel, and the local cubic
//! equations of the variety with their Jacobian.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exterior::subsets;
use crate::linalg::{format_rational, rat, Matrix, Rational};

/// `w` vanishes on all triples of basis rows.
pub fn is_nullspace(alg: &LieAlgebra, s: &Subspace) -> bool {
    first_nonzero_triple(alg, s).is_none()
}

/// First triple of basis rows on which `w` does not vanish.
pub fn first_nonzero_triple(alg: &LieAlgebra, s: &Subspace) -> Option<(usize, usize, usize)> {
    let rows = s.basis().row_vecs();
    let n = rows.len();
    let k = alg.killing();
    for i in 0..n {
        for j in i + 1..n {
            let kb = k.vec_mul(&alg.bracket(&rows[i], &rows[j]));
            for (l, row) in rows.iter().enumerate().skip(j + 1) {
                if !crate::linalg::dot(&kb, row).is_zero() {
                    return Some((i, j, l));
                }
            }
        }
    }
    None
}

/// A point of the chart: one parameter per simple root, the induced
/// parameter on every positive root, and the resulting subspace
/// `h + sum_a C(x_a + t_a x_{-a})`.
#[derive(Debug, Clone)]
pub struct ChartPoint {
    pub simple: Vec<Rational>,
    pub params: Vec<Rational>,
    pub subspace: Subspace,
}

/// Line in `g_c + g_{-c}` killed by `w(u, v, .)`, as the coefficient `t`
/// in `x_c + t x_{-c}`.
fn forced_param(alg: &LieAlgebra, u: &[Rational], v: &[Rational], c: usize) -> Result<Rational> {
    let kb = alg.killing().vec_mul(&alg.bracket(u, v));
    let f_pos = kb[alg.pos_index(c)].clone();
    let f_neg = kb[alg.neg_index(c)].clone();
    if f_neg.is_zero() {
        return Err(Error::DegenerateChart(alg.labels()[alg.pos_index(c)].clone()));
    }
    Ok(-f_pos / f_neg)
}

fn line_vector(alg: &LieAlgebra, root: usize, t: &Rational) -> Vec<Rational> {
    let mut v = alg.unit(alg.pos_index(root));
    v[alg.neg_index(root)] = t.clone();
    v
}

pub fn chart(alg: &LieAlgebra, t: &[Rational]) -> Result<ChartPoint> {
    let rd = alg.root_datum();
    if t.len() != alg.rank() {
        return Err(Error::Dimension(format!(
            "{} chart parameters for rank {}",
            t.len(),
            alg.rank()
        )));
    }
    let np = alg.num_positive();
    let mut params: Vec<Option<Rational>> = vec![None; np];
    for (i, x) in t.iter().enumerate() {
        params[rd.simple_index(i)] = Some(x.clone());
    }
    for r in 0..np {
        if params[r].is_some() {
            continue;
        }
        let (a, b) = rd.decompositions(r)[0];
        let va = line_vector(alg, a, params[a].as_ref().expect("height order"));
        let vb = line_vector(alg, b, params[b].as_ref().expect("height order"));
        params[r] = Some(forced_param(alg, &va, &vb, r)?);
    }
    let params: Vec<Rational> = params.into_iter().map(Option::unwrap).collect();
    let mut rows: Vec<Vec<Rational>> = (0..alg.rank()).map(|i| alg.unit(i)).collect();
    rows.extend(params.iter().enumerate().map(|(r, p)| line_vector(alg, r, p)));
    Ok(ChartPoint {
        simple: t.to_vec(),
        params,
        subspace: Subspace::from_vectors(rows, alg.dim()),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyRecord {
    pub root: String,
    pub decomposition: (String, String),
    pub ok: bool,
}

/// Every decomposition of every non-simple root forces the same line as the
/// one used to build the chart.
pub fn chart_consistency(alg: &LieAlgebra, t: &[Rational]) -> Result<Vec<ConsistencyRecord>> {
    let p = chart(alg, t)?;
    let rd = alg.root_datum();
    let name = |r: usize| alg.labels()[alg.pos_index(r)].clone();
    let mut out = Vec::new();
    for r in 0..alg.num_positive() {
        for (a, b) in rd.decompositions(r) {
            let va = line_vector(alg, a, &p.params[a]);
            let vb = line_vector(alg, b, &p.params[b]);
            let ok = forced_param(alg, &va, &vb, r).is_ok_and(|x| x == p.params[r]);
            out.push(ConsistencyRecord {
                root: name(r),
                decomposition: (name(a), name(b)),
                ok,
            });
        }
    }
    Ok(out)
}

/// `V + [V, V]`, which must be a subalgebra for `V` in the variety.
pub fn parabolic_closure(alg: &LieAlgebra, v: &Subspace) -> Result<Subspace> {
    let p = alg.span_with_brackets(v);
    if alg.is_subalgebra(&p) {
        Ok(p)
    } else {
        Err(Error::NotSubalgebra)
    }
}

/// Simple roots with nonzero chart parameter; the orbit closure has
/// codimension equal to the number of remaining simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitLabel {
    pub subset: Vec<usize>,
    pub codim: usize,
}

pub fn orbit_label(t: &[Rational]) -> OrbitLabel {
    let subset: Vec<usize> = (0..t.len()).filter(|&i| !t[i].is_zero()).collect();
    OrbitLabel {
        codim: t.len() - subset.len(),
        subset,
    }
}

/// Parabolic closure data of a chart point: its dimension and which
/// negative simple root spaces it contains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitProfile {
    pub parabolic_dim: usize,
    pub negative_simple: Vec<bool>,
}

pub fn orbit_profile(alg: &LieAlgebra, v: &Subspace) -> Result<OrbitProfile> {
    let p = parabolic_closure(alg, v)?;
    let rd = alg.root_datum();
    let negative_simple = (0..alg.rank())
        .map(|i| p.contains(&alg.unit(alg.neg_index(rd.simple_index(i)))))
        .collect();
    Ok(OrbitProfile {
        parabolic_dim: p.dim(),
        negative_simple,
    })
}

/// Conjugation-invariant data of an arbitrary point: `dim p_V` and the
/// dimension of the Killing radical of `p_V`.
pub fn fingerprint(alg: &LieAlgebra, v: &Subspace) -> Result<(usize, usize)> {
    let p = parabolic_closure(alg, v)?;
    let perp = alg.orthogonal_complement(&p);
    Ok((p.dim(), p.intersection_dim(&perp)))
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRecord {
    pub pattern: Vec<u8>,
    pub label: OrbitLabel,
    pub profile: OrbitProfile,
    pub fingerprint: (usize, usize),
}

/// One chart point per zero pattern in `{0,1}^l`.
pub fn orbit_table(alg: &LieAlgebra) -> Result<Vec<OrbitRecord>> {
    let l = alg.rank();
    (0..1u32 << l)
        .map(|mask| {
            let pattern: Vec<u8> = (0..l).map(|i| (mask >> i & 1) as u8).collect();
            let t: Vec<Rational> = pattern.iter().map(|&b| rat(b as i64)).collect();
            let p = chart(alg, &t)?;
            Ok(OrbitRecord {
                label: orbit_label(&t),
                profile: orbit_profile(alg, &p.subspace)?,
                fingerprint: fingerprint(alg, &p.subspace)?,
                pattern,
            })
        })
        .collect()
}

/// Integer weight of a one-parameter subgroup of the torus, given by its
/// values on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneParameterWeight(pub Vec<i64>);

impl OneParameterWeight {
    pub fn value(&self, root_coords: &[i64]) -> i64 {
        root_coords.iter().zip(&self.0).map(|(c, l)| c * l).sum()
    }

    pub fn is_regular(&self, alg: &LieAlgebra) -> bool {
        alg.root_datum()
            .positive_roots()
            .iter()
            .all(|r| self.value(r) != 0)
    }
}

/// Limit of `lambda(s) V` in the Grassmannian: the span of the
/// top-weight components of a weight-echelonized basis. A dominant weight
/// sends a generic point to the standard Borel.
pub fn degenerate(alg: &LieAlgebra, v: &Subspace, lambda: &OneParameterWeight) -> Result<Subspace> {
    if lambda.0.len() != alg.rank() {
        return Err(Error::Dimension("weight length differs from the rank".into()));
    }
    if !lambda.is_regular(alg) {
        return Err(Error::NotRegular(format!("{:?}", lambda.0)));
    }
    let g = alg.dim();
    let weight: Vec<i64> = (0..g).map(|i| lambda.value(&alg.basis_weight(i))).collect();
    let mut order: Vec<usize> = (0..g).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(weight[i]), i));
    let (r, pivots) = v.basis().select_columns(&order).rref();
    let mut rows = Vec::new();
    for (row, &p) in pivots.iter().enumerate() {
        let top = weight[order[p]];
        let mut out = vec![Rational::zero(); g];
        for (c, &orig) in order.iter().enumerate() {
            if weight[orig] == top {
                out[orig] = r[(row, c)].clone();
            }
        }
        rows.push(out);
    }
    Ok(Subspace::from_vectors(rows, g))
}

/// Tensor `u (x) v` as a `g x g` coefficient matrix.
fn tensor(u: &[Rational], v: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(u.len(), v.len());
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if !b.is_zero() {
                m[(i, j)] = a * b;
            }
        }
    }
    m
}

/// `D(v1 ^ v2 ^ v3) = v1 (x) [v2,v3] + v2 (x) [v3,v1] + v3 (x) [v1,v2]`.
pub fn d_map(alg: &LieAlgebra, v1: &[Rational], v2: &[Rational], v3: &[Rational]) -> Matrix {
    tensor(v1, &alg.bracket(v2, v3))
        .add(&tensor(v2, &alg.bracket(v3, v1)))
        .add(&tensor(v3, &alg.bracket(v1, v2)))
}

/// Indices of the standard Borel and of its nilradical.
fn borel_indices(alg: &LieAlgebra) -> (Vec<usize>, Vec<usize>) {
    let n: Vec<usize> = (0..alg.num_positive()).map(|r| alg.pos_index(r)).collect();
    let mut b: Vec<usize> = (0..alg.rank()).collect();
    b.extend(&n);
    (b, n)
}

/// Matrix of `D` from the third exterior power of the standard Borel to
/// `b (x) n`, rows indexed by `(i, j)` with `i` in `b` and `j` in `n`.
pub fn d_operator_matrix(alg: &LieAlgebra) -> Matrix {
    let (b, n) = borel_indices(alg);
    let triples = subsets(b.len(), 3);
    let mut m = Matrix::zeros(b.len() * n.len(), triples.len());
    for (c, t) in triples.iter().enumerate() {
        let ix: Vec<usize> = (0..b.len()).filter(|i| t >> i & 1 == 1).map(|i| b[i]).collect();
        let img = d_map(alg, &alg.unit(ix[0]), &alg.unit(ix[1]), &alg.unit(ix[2]));
        for (p, &i) in b.iter().enumerate() {
            for (q, &j) in n.iter().enumerate() {
                m[(p * n.len() + q, c)] = img[(i, j)].clone();
            }
        }
    }
    m
}

/// `dim(b (x) n) - rank D`.
pub fn d_operator_corank(alg: &LieAlgebra) -> usize {
    let m = d_operator_matrix(alg);
    m.rows() - m.rank()
}

/// The relations among values of `D` on Cartan and root vectors used to
/// bound its corank, checked for the given Cartan elements `h`, `k`:
///
/// 1. `a(k) h(x)x_a = D(h^k^x_a) + a(h) k(x)x_a`
/// 2. `b(h) x_a(x)x_b = a(h) x_b(x)x_a + h(x)[x_a,x_b] - D(h^x_a^x_b)`
/// 3. `N x_c(x)x_c = D(x_c^x_a^x_b) - x_a(x)[x_b,x_c] + x_b(x)[x_a,x_c]`
///    where `c = a + b` and `[x_a, x_b] = N x_c`
///
/// Returns the number of instances checked.
pub fn check_d_relations(
    alg: &LieAlgebra,
    h: &[Rational],
    k: &[Rational],
) -> std::result::Result<usize, String> {
    let rd = alg.root_datum();
    let np = alg.num_positive();
    let x = |r: usize| alg.unit(alg.pos_index(r));
    // a(h) read off from [h, x_a] = a(h) x_a
    let val = |r: usize, h: &[Rational]| alg.bracket(h, &x(r))[alg.pos_index(r)].clone();
    let mut count = 0;
    for a in 0..np {
        let lhs = tensor(h, &x(a)).scale(&val(a, k));
        let rhs = d_map(alg, h, k, &x(a)).add(&tensor(k, &x(a)).scale(&val(a, h)));
        if lhs != rhs {
            return Err(format!("first relation fails for {}", alg.labels()[alg.pos_index(a)]));
        }
        count += 1;
        for b in 0..np {
            let lhs = tensor(&x(a), &x(b)).scale(&val(b, h));
            let rhs = tensor(&x(b), &x(a))
                .scale(&val(a, h))
                .add(&tensor(h, &alg.bracket(&x(a), &x(b))))
                .sub(&d_map(alg, h, &x(a), &x(b)));
            if lhs != rhs {
                return Err(format!(
                    "second relation fails for ({}, {})",
                    alg.labels()[alg.pos_index(a)],
                    alg.labels()[alg.pos_index(b)]
                ));
            }
            count += 1;
        }
    }
    for c in 0..np {
        for (a, b) in rd.decompositions(c) {
            let n = alg.bracket(&x(a), &x(b))[alg.pos_index(c)].clone();
            let lhs = tensor(&x(c), &x(c)).scale(&n);
            let rhs = d_map(alg, &x(c), &x(a), &x(b))
                .sub(&tensor(&x(a), &alg.bracket(&x(b), &x(c))))
                .add(&tensor(&x(b), &alg.bracket(&x(a), &x(c))));
            if lhs != rhs {
                return Err(format!("third relation fails for {}", alg.labels()[alg.pos_index(c)]));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// A polynomial with exact coefficients; monomials are sorted lists of
/// variable indices (repetition allowed).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl Polynomial {
    fn add_term(&mut self, mut mono: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        mono.sort_unstable();
        let e = self.terms.entry(mono.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(m, c)| m.iter().fold(c.clone(), |acc, &v| acc * &x[v]))
            .sum()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Partial derivative with respect to variable `v`, evaluated at `x`.
    pub fn partial_at(&self, v: usize, x: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (m, c) in &self.terms {
            for (pos, &var) in m.iter().enumerate() {
                if var != v {
                    continue;
                }
                let mut term = c.clone();
                for (q, &w) in m.iter().enumerate() {
                    if q != pos {
                        term *= &x[w];
                    }
                }
                s += term;
            }
        }
        s
    }

    pub fn to_string_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m.iter().map(|&v| name(v)).collect();
                if vars.is_empty() {
                    format_rational(c)
                } else {
                    format!("({})*{}", format_rational(c), vars.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// The cubic equations of the variety in the affine chart of graphs of maps
/// from `base` to `complement`. Variable `X[i][j]` has index
/// `i * (g - d) + j`.
#[derive(Debug, Clone)]
pub struct LocalEquations {
    pub d: usize,
    pub codim: usize,
    pub triples: Vec<(usize, usize, usize)>,
    pub polys: Vec<Polynomial>,
    /// rows: base basis then complement basis
    frame: Matrix,
}

pub fn local_equations(alg: &LieAlgebra, base: &Subspace, complement: &Subspace) -> Result<LocalEquations> {
    let g = alg.dim();
    let (d, c) = (base.dim(), complement.dim());
    if d + c != g || base.sum(complement).dim() != g {
        return Err(Error::Dimension("base and complement must span the algebra".into()));
    }
    let frame = base.basis().vstack(complement.basis());
    // w in the frame: wf[p][q][r] = w(e_p, e_q, e_r)
    let e = frame.row_vecs();
    let brackets: Vec<Vec<Vec<Rational>>> = (0..g)
        .map(|p| (0..g).map(|q| alg.killing().vec_mul(&alg.bracket(&e[p], &e[q]))).collect())
        .collect();
    let wf = |p: usize, q: usize, r: usize| crate::linalg::dot(&brackets[p][q], &e[r]);
    let mut triples = Vec::new();
    let mut polys = Vec::new();
    for t in subsets(d, 3) {
        let ix: Vec<usize> = (0..d).filter(|i| t >> i & 1 == 1).collect();
        // each slot takes x_i itself or X[i][j] y_j
        let choices = |i: usize| -> Vec<(usize, Option<usize>)> {
            let mut v = vec![(i, None)];
            v.extend((0..c).map(|j| (d + j, Some(i * c + j))));
            v
        };
        let mut poly = Polynomial::default();
        for (p, vp) in choices(ix[0]) {
            for (q, vq) in choices(ix[1]) {
                for (r, vr) in choices(ix[2]) {
                    let coeff = wf(p, q, r);
                    if !coeff.is_zero() {
                        poly.add_term([vp, vq, vr].into_iter().flatten().collect(), coeff);
                    }
                }
            }
        }
        triples.push((ix[0], ix[1], ix[2]));
        polys.push(poly);
    }
    Ok(LocalEquations {
        d,
        codim: c,
        triples,
        polys,
        frame,
    })
}

impl LocalEquations {
    pub fn num_vars(&self) -> usize {
        self.d * self.codim
    }

    pub fn eval(&self, x: &Matrix) -> Vec<Rational> {
        let flat = self.flatten(x);
        self.polys.iter().map(|p| p.eval(&flat)).collect()
    }

    fn flatten(&self, x: &Matrix) -> Vec<Rational> {
        assert_eq!((x.rows(), x.cols()), (self.d, self.codim));
        x.row_vecs().concat()
    }

    pub fn jacobian_at(&self, x: &Matrix) -> Matrix {
        let flat = self.flatten(x);
        let mut j = Matrix::zeros(self.polys.len(), self.num_vars());
        for (r, p) in self.polys.iter().enumerate() {
            for v in 0..self.num_vars() {
                j[(r, v)] = p.partial_at(v, &flat);
            }
        }
        j
    }

    /// Subspace spanned by the rows `x_i + sum_j X[i][j] y_j`.
    pub fn graph(&self, x: &Matrix) -> Subspace {
        let base = self.frame.select_rows(&(0..self.d).collect::<Vec<_>>());
        let comp = self.frame.select_rows(&(self.d..self.d + self.codim).collect::<Vec<_>>());
        Subspace::new(base.add(&x.mul(&comp)))
    }

    /// Chart coordinates of a `d`-dimensional subspace, if it is a graph
    /// over the base.
    pub fn graph_coordinates(&self, v: &Subspace) -> Option<Matrix> {
        if v.dim() != self.d {
            return None;
        }
        let inv = self.frame.inverse()?;
        let coords = v.basis().mul(&inv);
        let p = coords.select_columns(&(0..self.d).collect::<Vec<_>>());
        let q = coords.select_columns(&(self.d..self.d + self.codim).collect::<Vec<_>>());
        Some(p.inverse()?.mul(&q))
    }
}

/// Complement spanned by the coordinate vectors of the non-pivot columns.
pub fn standard_complement(s: &Subspace) -> Subspace {
    let g = s.ambient_dim();
    let (_, pivots) = s.basis().rref();
    let rows: Vec<Vec<Rational>> = (0..g)
        .filter(|c| !pivots.contains(c))
        .map(|c| {
            let mut v = vec![Rational::zero(); g];
            v[c] = Rational::one();
            v
        })
        .collect();
    Subspace::from_vectors(rows, g)
}

/// `d (g - d) - rank` of the Jacobian of the local equations at `base`.
pub fn jacobian_corank_at(alg: &LieAlgebra, base: &Subspace) -> Result<usize> {
    if base.dim() != alg.d() {
        return Err(Error::NotInVariety(format!("dimension {} instead of {}", base.dim(), alg.d())));
    }
    if let Some((i, j, k)) = first_nonzero_triple(alg, base) {
        return Err(Error::NotInVariety(format!("w is nonzero on basis rows {i}, {j}, {k}")));
    }
    let eqs = local_equations(alg, base, &standard_complement(base))?;
    let zero = Matrix::zeros(eqs.d, eqs.codim);
    let jac = eqs.jacobian_at(&zero);
    Ok(eqs.num_vars() - jac.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, build_involution};
    use crate::linalg::rat;

    fn alg(s: &str) -> LieAlgebra {
        build_algebra(s.parse().unwrap())
    }

    fn ts(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn predicate_examples() {
        let a = alg("A2");
        assert!(is_nullspace(&a, &a.borel()));
        assert!(is_nullspace(&a, &a.opposite_borel()));
        assert!(!is_nullspace(&a, &a.whole()));
        let s = build_involution(&a, &[1, -1]).unwrap();
        assert!(is_nullspace(&a, &s.minus_space()));
    }

    #[test]
    fn chart_basics() {
        let a = alg("A2");
        assert_eq!(chart(&a, &ts(&[0, 0])).unwrap().subspace, a.borel());
        let p = chart(&a, &ts(&[1, 1])).unwrap();
        assert_eq!(p.subspace.dim(), 5);
        assert!(is_nullspace(&a, &p.subspace));
        for r in 0..3 {
            let pair = a.subspace_from_indices(&[a.pos_index(r), a.neg_index(r)]);
            assert_eq!(p.subspace.intersection_dim(&pair), 1);
        }
        // the induced parameter is a nonzero multiple of t1 t2
        assert!(!p.params[2].is_zero());
        assert!(chart(&a, &ts(&[1])).is_err());
    }

    #[test]
    fn chart_lines_are_consistent() {
        for (s, t) in [("A2", vec![1, 1]), ("C2", vec![1, 1]), ("C2", vec![2, 3]), ("A3", vec![1, -2, 3]), ("B3", vec![2, 1, -1]), ("C3", vec![1, 3, 2])] {
            let a = alg(s);
            let recs = chart_consistency(&a, &ts(&t)).unwrap();
            assert!(recs.iter().all(|r| r.ok), "{s} {recs:?}");
            assert!(is_nullspace(&a, &chart(&a, &ts(&t)).unwrap().subspace));
        }
    }

    #[test]
    fn parabolic_closures() {
        let a = alg("A2");
        assert_eq!(parabolic_closure(&a, &a.borel()).unwrap(), a.borel());
        let open = chart(&a, &ts(&[1, 1])).unwrap().subspace;
        assert_eq!(parabolic_closure(&a, &open).unwrap().dim(), 8);
        // b plus the negative root space of the first simple root
        let one = chart(&a, &ts(&[1, 0])).unwrap().subspace;
        let p = parabolic_closure(&a, &one).unwrap();
        let expected = a.borel().sum(&a.subspace_from_indices(&[a.neg_index(a.root_datum().simple_index(0))]));
        assert_eq!(p, expected);
        assert_eq!(p.dim(), 6);
        let c = alg("C2");
        let p = parabolic_closure(&c, &chart(&c, &ts(&[1, 0])).unwrap().subspace).unwrap();
        assert_eq!(p.dim(), 7);
    }

    #[test]
    fn orbit_profiles_are_distinct() {
        for s in ["A2", "C2", "B2", "A3"] {
            let a = alg(s);
            let table = orbit_table(&a).unwrap();
            let l = a.rank();
            assert_eq!(table.len(), 1 << l);
            let mut seen = std::collections::HashSet::new();
            for rec in &table {
                assert!(seen.insert(rec.profile.clone()), "{s}");
                assert_eq!(rec.label.codim, rec.pattern.iter().filter(|&&b| b == 0).count());
                // flags record exactly the nonzero parameters
                let flags: Vec<bool> = rec.pattern.iter().map(|&b| b == 1).collect();
                assert_eq!(rec.profile.negative_simple, flags);
            }
        }
    }

    #[test]
    fn orbit_labels() {
        assert_eq!(orbit_label(&ts(&[0, 0])), OrbitLabel { subset: vec![], codim: 2 });
        assert_eq!(orbit_label(&ts(&[1, 0])), OrbitLabel { subset: vec![0], codim: 1 });
        assert_eq!(orbit_label(&ts(&[3, -1])), OrbitLabel { subset: vec![0, 1], codim: 0 });
    }

    #[test]
    fn degenerations() {
        for s in ["A2", "C2"] {
            let a = alg(s);
            let v = chart(&a, &ts(&[1, 1])).unwrap().subspace;
            let dom = OneParameterWeight(vec![2, 1]);
            let b = degenerate(&a, &v, &dom).unwrap();
            assert_eq!(b, a.borel(), "{s}");
            let anti = OneParameterWeight(vec![-2, -1]);
            assert_eq!(degenerate(&a, &v, &anti).unwrap(), a.opposite_borel());
            assert_eq!(degenerate(&a, &a.borel(), &dom).unwrap(), a.borel());
            assert_eq!(degenerate(&a, &b, &dom).unwrap(), b);
        }
        let a = alg("A2");
        let v = chart(&a, &ts(&[1, 1])).unwrap().subspace;
        assert!(matches!(degenerate(&a, &v, &OneParameterWeight(vec![1, -1])), Err(Error::NotRegular(_))));
        // a non-dominant regular weight gives another Borel containing h
        let w = degenerate(&a, &v, &OneParameterWeight(vec![2, -1])).unwrap();
        assert_eq!(w.dim(), 5);
        assert!(is_nullspace(&a, &w) && a.is_subalgebra(&w));
        assert!(w.contains_subspace(&a.cartan_subalgebra()));
    }

    #[test]
    fn d_operator_coranks() {
        assert_eq!(d_operator_corank(&alg("A1")), 2);
        let a = alg("A2");
        let m = d_operator_matrix(&a);
        assert_eq!((m.rows(), m.cols(), m.rank()), (15, 10, 10));
        assert_eq!(d_operator_corank(&a), 5);
        let c = alg("C2");
        let m = d_operator_matrix(&c);
        assert_eq!((m.rows(), m.rank()), (24, 18));
        assert_eq!(d_operator_corank(&c), 6);
    }

    #[test]
    fn d_relations_hold() {
        for s in ["A2", "C2", "B2"] {
            let a = alg(s);
            let h = ts(&[2, -1]).into_iter().chain(vec![rat(0); a.dim() - 2]).collect::<Vec<_>>();
            let k = ts(&[1, 3]).into_iter().chain(vec![rat(0); a.dim() - 2]).collect::<Vec<_>>();
            assert!(check_d_relations(&a, &h, &k).unwrap() > 0);
        }
    }

    #[test]
    fn local_equations_at_the_borel() {
        let a = alg("A2");
        let b = a.borel();
        let eqs = local_equations(&a, &b, &a.negative_nilradical()).unwrap();
        assert_eq!(eqs.polys.len(), 10);
        assert!(eqs.polys.iter().all(|p| p.degree() <= 3));
        let zero = Matrix::zeros(5, 3);
        assert!(eqs.eval(&zero).iter().all(Zero::is_zero));
        // a chart point near the Borel lies in the graph chart
        let v = chart(&a, &ts(&[1, 1])).unwrap().subspace;
        let x = eqs.graph_coordinates(&v).unwrap();
        assert_eq!(eqs.graph(&x), v);
        assert!(eqs.eval(&x).iter().all(Zero::is_zero));
        // a generic graph is not a nullspace
        let mut s = crate::sampling::Sampler::new(5);
        let y = s.matrix(5, 3);
        let vals = eqs.eval(&y);
        assert_eq!(vals.iter().all(Zero::is_zero), is_nullspace(&a, &eqs.graph(&y)));
        assert!(!vals.iter().all(Zero::is_zero));
    }

    #[test]
    fn jacobian_coranks() {
        let a = alg("A2");
        assert_eq!(jacobian_corank_at(&a, &a.borel()).unwrap(), 5);
        assert_eq!(jacobian_corank_at(&a, &chart(&a, &ts(&[1, 1])).unwrap().subspace).unwrap(), 5);
        let c = alg("C2");
        assert_eq!(jacobian_corank_at(&c, &c.borel()).unwrap(), 6);
        assert!(jacobian_corank_at(&a, &a.whole()).is_err());
    }

    #[test]
    fn polynomial_derivatives() {
        let mut p = Polynomial::default();
        p.add_term(vec![0, 0, 1], rat(2));
        p.add_term(vec![1], rat(-1));
        let x = ts(&[3, 5]);
        assert_eq!(p.eval(&x), rat(2 * 9 * 5 - 5));
        assert_eq!(p.partial_at(0, &x), rat(2 * 2 * 3 * 5));
        assert_eq!(p.partial_at(1, &x), rat(2 * 9 - 1));
    }
}
