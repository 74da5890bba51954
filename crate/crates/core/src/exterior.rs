//! The exterior algebra of a Lie algebra and the operators built from the
//! invariant 3-form: `delta` (wedge with w#), `delta_star` (contraction with
//! w), the Lie derivative, the Casimir and `zeta = delta delta* + delta* delta`.
//!
//! Basis k-vectors are indexed by bitmasks over the basis of the algebra,
//! with the wedge of the set bits taken in ascending order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{LieAlgebra, Subspace};
use crate::linalg::{format_rational, rat, Matrix, Rational};
use crate::roots::{casimir_eigenvalue, weyl_dim};
use crate::sampling::Sampler;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector {
    degree: usize,
    terms: BTreeMap<u64, Rational>,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Number of set bits of `mask` strictly below position `i`.
fn below(mask: u64, i: usize) -> u32 {
    (mask & ((1u64 << i) - 1)).count_ones()
}

/// Sign of `e_a ^ e_b = sign * e_{a|b}`, or `None` when they overlap.
pub fn wedge_sign(a: u64, b: u64) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0;
    for j in bits(b) {
        inversions += (a >> j).count_ones();
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

fn signed(c: &Rational, sign: i32) -> Rational {
    if sign > 0 {
        c.clone()
    } else {
        -c.clone()
    }
}

impl MultiVector {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::basis(0, Rational::one())
    }

    pub fn basis(mask: u64, coeff: Rational) -> Self {
        let mut v = Self::zero(mask.count_ones() as usize);
        v.add_term(mask, coeff);
        v
    }

    /// Degree-one element from a coordinate vector.
    pub fn vector(v: &[Rational]) -> Self {
        let mut out = Self::zero(1);
        for (i, c) in v.iter().enumerate() {
            out.add_term(1u64 << i, c.clone());
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<u64, Rational> {
        &self.terms
    }

    pub fn coeff(&self, mask: u64) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u64, coeff: Rational) {
        assert_eq!(mask.count_ones() as usize, self.degree, "term of wrong degree");
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &MultiVector) -> MultiVector {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiVector) -> MultiVector {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, s: &Rational) -> MultiVector {
        let mut out = Self::zero(self.degree);
        if !s.is_zero() {
            for (m, c) in &self.terms {
                out.terms.insert(*m, c * s);
            }
        }
        out
    }

    pub fn wedge(&self, other: &MultiVector) -> MultiVector {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(s) = wedge_sign(*a, *b) {
                    out.add_term(a | b, signed(&(x * y), s));
                }
            }
        }
        out
    }

    /// Coefficients in the ascending list of `degree`-subsets of `0..g`.
    pub fn to_column(&self, g: usize) -> Vec<Rational> {
        let idx = subsets(g, self.degree);
        let mut col = vec![Rational::zero(); idx.len()];
        for (m, c) in &self.terms {
            col[idx.binary_search(m).expect("mask within ambient dimension")] = c.clone();
        }
        col
    }

    pub fn from_column(g: usize, degree: usize, col: &[Rational]) -> MultiVector {
        let idx = subsets(g, degree);
        assert_eq!(idx.len(), col.len());
        let mut out = Self::zero(degree);
        for (m, c) in idx.iter().zip(col) {
            out.add_term(*m, c.clone());
        }
        out
    }
}

/// All `k`-subsets of `0..g` as bitmasks in increasing numeric order.
pub fn subsets(g: usize, k: usize) -> Vec<u64> {
    assert!(g < 64);
    if k > g {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut m: u64 = (1u64 << k) - 1;
    let limit = 1u64 << g;
    while m < limit {
        out.push(m);
        // next mask with the same popcount
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// Exterior power of a square matrix: entry `(I, J)` is the minor on rows
/// `I` and columns `J`.
pub fn exterior_power(m: &Matrix, k: usize) -> Matrix {
    let idx = subsets(m.rows(), k);
    let mut out = Matrix::zeros(idx.len(), idx.len());
    for (a, i) in idx.iter().enumerate() {
        let rows: Vec<usize> = bits(*i).collect();
        for (b, j) in idx.iter().enumerate() {
            let cols: Vec<usize> = bits(*j).collect();
            out[(a, b)] = m.select_rows(&rows).select_columns(&cols).determinant();
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Delta,
    DeltaStar,
    Casimir,
    Zeta,
    LieAction(usize),
}

impl Op {
    fn shift(self) -> isize {
        match self {
            Op::Delta => 3,
            Op::DeltaStar => -3,
            _ => 0,
        }
    }
}

/// Matrix of an operator restricted to one degree; columns are images of
/// source basis vectors.
#[derive(Debug, Clone)]
pub struct GradedOperator {
    pub source: usize,
    pub target: Option<usize>,
    pub matrix: Matrix,
}

/// Operator calculus on the exterior algebra of one Lie algebra.
pub struct Exterior<'a> {
    alg: &'a LieAlgebra,
    g: usize,
    /// `ad[i][p]`: nonzero `(m, c)` with `[b_i, b_p] = sum c b_m`
    ad: Vec<Vec<Vec<(usize, Rational)>>>,
    /// nonzero `(m, i, k^{-1}_{mi})`
    casimir_pairs: Vec<(usize, usize, Rational)>,
    wsharp: MultiVector,
}

impl<'a> Exterior<'a> {
    pub fn new(alg: &'a LieAlgebra) -> Self {
        let g = alg.dim();
        assert!(g < 64, "bitmask keys need g < 64");
        let ad = (0..g)
            .map(|i| {
                (0..g)
                    .map(|p| {
                        alg.bracket_basis(i, p)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(m, c)| (m, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let dual = alg.dual_basis();
        let mut casimir_pairs = Vec::new();
        for m in 0..g {
            for i in 0..g {
                if !dual[(m, i)].is_zero() {
                    casimir_pairs.push((m, i, dual[(m, i)].clone()));
                }
            }
        }
        let duals: Vec<MultiVector> = (0..g).map(|i| MultiVector::vector(&dual.column(i))).collect();
        let mut wsharp = MultiVector::zero(3);
        for t in subsets(g, 3) {
            let ix: Vec<usize> = bits(t).collect();
            let w = alg.w_basis(ix[0], ix[1], ix[2]);
            if w.is_zero() {
                continue;
            }
            let term = duals[ix[0]].wedge(&duals[ix[1]]).wedge(&duals[ix[2]]).scale(w);
            wsharp = wsharp.add(&term);
        }
        Self {
            alg,
            g,
            ad,
            casimir_pairs,
            wsharp,
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.alg
    }

    pub fn dim(&self) -> usize {
        self.g
    }

    /// The invariant 3-form as an element of the third exterior power.
    pub fn wsharp(&self) -> &MultiVector {
        &self.wsharp
    }

    pub fn delta(&self, u: &MultiVector) -> MultiVector {
        if u.degree + 3 > self.g {
            return MultiVector::zero(u.degree + 3);
        }
        self.wsharp.wedge(u)
    }

    pub fn delta_star(&self, u: &MultiVector) -> MultiVector {
        if u.degree < 3 {
            return MultiVector::zero(0);
        }
        let mut out = MultiVector::zero(u.degree - 3);
        for (mask, c) in &u.terms {
            let ix: Vec<usize> = bits(*mask).collect();
            let k = ix.len();
            for a in 0..k {
                for b in a + 1..k {
                    for cc in b + 1..k {
                        let w = self.alg.w_basis(ix[a], ix[b], ix[cc]);
                        if w.is_zero() {
                            continue;
                        }
                        // positions counted from 1 give (-1)^(a+b+c-3)
                        let sign = if (a + b + cc) % 2 == 0 { 1 } else { -1 };
                        let rest = mask & !(1u64 << ix[a]) & !(1u64 << ix[b]) & !(1u64 << ix[cc]);
                        out.add_term(rest, signed(&(w * c), sign));
                    }
                }
            }
        }
        out
    }

    /// Derivation extension of `ad b_i`.
    pub fn lie_action_basis(&self, i: usize, u: &MultiVector) -> MultiVector {
        let mut out = MultiVector::zero(u.degree);
        for (mask, c) in &u.terms {
            for p in bits(*mask) {
                let rest = mask & !(1u64 << p);
                for (m, s) in &self.ad[i][p] {
                    if rest >> m & 1 == 1 {
                        continue;
                    }
                    let parity = below(*mask, p) + below(rest, *m);
                    let sign = if parity.is_multiple_of(2) { 1 } else { -1 };
                    out.add_term(rest | 1u64 << m, signed(&(c * s), sign));
                }
            }
        }
        out
    }

    pub fn lie_action(&self, a: &[Rational], u: &MultiVector) -> MultiVector {
        let mut out = MultiVector::zero(u.degree);
        for (i, x) in a.iter().enumerate() {
            if !x.is_zero() {
                out = out.add(&self.lie_action_basis(i, u).scale(x));
            }
        }
        out
    }

    /// `sum_i L(b_i) L(b^i)` over a Killing-dual pair of bases.
    pub fn casimir(&self, u: &MultiVector) -> MultiVector {
        let mut out = MultiVector::zero(u.degree);
        let mut cache: Option<(usize, MultiVector)> = None;
        for (m, i, c) in &self.casimir_pairs {
            if cache.as_ref().map(|(k, _)| k) != Some(m) {
                cache = Some((*m, self.lie_action_basis(*m, u)));
            }
            let inner = &cache.as_ref().expect("just set").1;
            out = out.add(&self.lie_action_basis(*i, inner).scale(c));
        }
        out
    }

    pub fn zeta(&self, u: &MultiVector) -> MultiVector {
        let a = self.delta(&self.delta_star(u));
        let b = self.delta_star(&self.delta(u));
        match (a.degree == u.degree, b.degree == u.degree) {
            (true, true) => a.add(&b),
            (true, false) => a,
            (false, true) => b,
            (false, false) => MultiVector::zero(u.degree),
        }
    }

    /// The scalar `delta*(w#)`.
    pub fn delta_star_w(&self) -> Rational {
        self.delta_star(&self.wsharp).coeff(0)
    }

    /// `c_{2 rho}` computed from the root datum.
    pub fn c_two_rho(&self) -> Rational {
        let rd = self.alg.root_datum();
        casimir_eigenvalue(rd, &rd.two_rho())
    }

    pub fn apply(&self, op: Op, u: &MultiVector) -> MultiVector {
        match op {
            Op::Delta => self.delta(u),
            Op::DeltaStar => self.delta_star(u),
            Op::Casimir => self.casimir(u),
            Op::Zeta => self.zeta(u),
            Op::LieAction(i) => self.lie_action_basis(i, u),
        }
    }

    /// Exact matrix of `op` on degree `k`. Out-of-range targets give a
    /// matrix with zero rows.
    pub fn graded_matrix(&self, op: Op, k: usize) -> GradedOperator {
        assert!(k <= self.g, "degree beyond the top");
        let t = k as isize + op.shift();
        let target = (0..=self.g as isize).contains(&t).then_some(t as usize);
        let src = subsets(self.g, k);
        let rows = target.map_or(0, |t| binomial(self.g, t));
        let cols: Vec<Vec<Rational>> = src
            .par_iter()
            .map(|m| match target {
                Some(t) => {
                    let img = self.apply(op, &MultiVector::basis(*m, Rational::one()));
                    if img.is_zero() {
                        vec![Rational::zero(); rows]
                    } else {
                        debug_assert_eq!(img.degree, t);
                        img.to_column(self.g)
                    }
                }
                None => Vec::new(),
            })
            .collect();
        let mut matrix = Matrix::zeros(rows, src.len());
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    matrix[(i, j)] = v;
                }
            }
        }
        GradedOperator {
            source: k,
            target,
            matrix,
        }
    }

    /// Top wedge `v_1 ^ ... ^ v_d` of the rows of a subspace basis.
    pub fn top_wedge(&self, s: &Subspace) -> MultiVector {
        let mut out = MultiVector::one();
        for r in s.basis().row_vecs() {
            out = out.wedge(&MultiVector::vector(&r));
        }
        out
    }

    pub fn label(&self, mask: u64) -> String {
        let names: Vec<&str> = bits(mask).map(|i| self.alg.labels()[i].as_str()).collect();
        if names.is_empty() {
            "1".to_string()
        } else {
            names.join("^")
        }
    }

    /// Dimension of the `c`-eigenspace of the Casimir on degree `k`.
    pub fn casimir_eigenspace_dim(&self, k: usize, c: &Rational) -> usize {
        let m = self.graded_matrix(Op::Casimir, k).matrix;
        let n = m.rows();
        n - m.sub(&Matrix::identity(n).scale(c)).rank()
    }

    /// `L(b_a)` commutes with `op` on degree `k`, checked as a matrix
    /// identity for every basis vector `b_a`.
    pub fn check_invariance(&self, op: Op, k: usize) -> Result<(), String> {
        let m = self.graded_matrix(op, k);
        let Some(t) = m.target else { return Ok(()) };
        for a in 0..self.g {
            let l_src = self.graded_matrix(Op::LieAction(a), k).matrix;
            let l_tgt = self.graded_matrix(Op::LieAction(a), t).matrix;
            if m.matrix.mul(&l_src) != l_tgt.mul(&m.matrix) {
                return Err(format!(
                    "{op:?} does not commute with ad {} on degree {k}",
                    self.alg.labels()[a]
                ));
            }
        }
        Ok(())
    }
}

/// One row of the exact-sequence report.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeRecord {
    pub k: usize,
    pub dim: usize,
    pub rank_delta_in: usize,
    pub ker_delta: usize,
    pub gamma_mult: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactSequenceReport {
    pub records: Vec<DegreeRecord>,
    /// `rank(delta)` on each degree
    pub delta_ranks: Vec<usize>,
    pub ok: bool,
}

/// Multiplicity `C(l, k - (g - d)) dim Gamma_{2 rho}` of the `2 rho`
/// isotypic part in degree `k`.
pub fn gamma_multiplicity(alg: &LieAlgebra, k: usize) -> usize {
    let (g, l, d) = (alg.dim(), alg.rank(), alg.d());
    if k < g - d || k > d {
        return 0;
    }
    let rd = alg.root_datum();
    binomial(l, k - (g - d)) * weyl_dim(rd, &rd.two_rho()) as usize
}

/// Checks `dim ker(delta on k) = rank(delta into k) + multiplicity of the
/// 2 rho part` in every degree.
pub fn verify_exact_sequences(ext: &Exterior) -> ExactSequenceReport {
    let g = ext.dim();
    let delta_ranks: Vec<usize> = (0..=g)
        .into_par_iter()
        .map(|k| ext.graded_matrix(Op::Delta, k).matrix.rank())
        .collect();
    let records: Vec<DegreeRecord> = (0..=g)
        .map(|k| {
            let dim = binomial(g, k);
            let ker_delta = dim - delta_ranks[k];
            let rank_delta_in = if k >= 3 { delta_ranks[k - 3] } else { 0 };
            let gamma_mult = gamma_multiplicity(ext.algebra(), k);
            DegreeRecord {
                k,
                dim,
                rank_delta_in,
                ker_delta,
                gamma_mult,
                ok: ker_delta == rank_delta_in + gamma_mult,
            }
        })
        .collect();
    let ok = records.iter().all(|r| r.ok);
    ExactSequenceReport {
        records,
        delta_ranks,
        ok,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaDegreeRecord {
    pub k: usize,
    pub dim: usize,
    pub delta_squared_zero: bool,
    pub delta_star_squared_zero: bool,
    pub zeta_identity: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomZetaRecord {
    pub k: usize,
    pub samples: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaReport {
    pub delta_star_w: String,
    pub c_two_rho: String,
    pub degrees: Vec<ZetaDegreeRecord>,
    pub random: Vec<RandomZetaRecord>,
    pub ok: bool,
}

impl ZetaReport {
    fn finish(mut self) -> Self {
        self.ok = self
            .degrees
            .iter()
            .all(|r| r.delta_squared_zero && r.delta_star_squared_zero && r.zeta_identity)
            && self.random.iter().all(|r| r.failures == 0);
        self
    }
}

fn zeta_degree(
    ext: &Exterior,
    k: usize,
    d: &[Matrix],
    s: &[Matrix],
    scalar: &Rational,
    c2rho: &Rational,
) -> ZetaDegreeRecord {
    let g = ext.dim();
    let dim = binomial(g, k);
    let zero = |r: usize, c: usize| Matrix::zeros(r, c);
    // d[k]: k -> k+3 (zero rows past the top), s[k]: k -> k-3
    let dd = if k + 6 <= g { d[k + 3].mul(&d[k]) } else { zero(0, 0) };
    let ss = if k >= 6 { s[k - 3].mul(&s[k]) } else { zero(0, 0) };
    let mut zeta = zero(dim, dim);
    if k >= 3 {
        zeta = zeta.add(&d[k - 3].mul(&s[k]));
    }
    if k + 3 <= g {
        zeta = zeta.add(&s[k + 3].mul(&d[k]));
    }
    let cas = ext.graded_matrix(Op::Casimir, k).matrix;
    let expected = Matrix::identity(dim)
        .sub(&cas.scale(&c2rho.recip()))
        .scale(scalar);
    let witness = (0..dim).find(|&j| zeta.column(j) != expected.column(j)).map(|j| {
        format!(
            "zeta differs from the closed form on {}",
            ext.label(subsets(g, k)[j])
        )
    });
    ZetaDegreeRecord {
        k,
        dim,
        delta_squared_zero: dd.is_zero(),
        delta_star_squared_zero: ss.is_zero(),
        zeta_identity: witness.is_none(),
        witness,
    }
}

/// Checks `delta^2 = 0`, `(delta*)^2 = 0` and
/// `zeta = delta*(w) (id - c / c_{2 rho})` as matrices in the degrees
/// `0..=max_degree` (all degrees when `None`).
pub fn verify_zeta_identity(ext: &Exterior, max_degree: Option<usize>) -> ZetaReport {
    let g = ext.dim();
    let top = max_degree.unwrap_or(g).min(g);
    // delta matrices are needed up to degree top + 3, delta* up to top + 3
    let need = (top + 3).min(g);
    let d: Vec<Matrix> = (0..=need)
        .into_par_iter()
        .map(|k| ext.graded_matrix(Op::Delta, k).matrix)
        .collect();
    let s: Vec<Matrix> = (0..=need)
        .into_par_iter()
        .map(|k| ext.graded_matrix(Op::DeltaStar, k).matrix)
        .collect();
    let scalar = ext.delta_star_w();
    let c2rho = ext.c_two_rho();
    let degrees = (0..=top)
        .into_par_iter()
        .map(|k| zeta_degree(ext, k, &d, &s, &scalar, &c2rho))
        .collect();
    ZetaReport {
        delta_star_w: format_rational(&scalar),
        c_two_rho: format_rational(&c2rho),
        degrees,
        random: Vec::new(),
        ok: false,
    }
    .finish()
}

/// Random-vector version of the same identities for degrees where full
/// matrices are too large. Each sample is a dense random element.
pub fn verify_zeta_random(
    ext: &Exterior,
    degrees: &[usize],
    samples: usize,
    sampler: &mut Sampler,
) -> Vec<RandomZetaRecord> {
    let g = ext.dim();
    let scalar = ext.delta_star_w();
    let c2rho = ext.c_two_rho();
    let mut out = Vec::new();
    for &k in degrees {
        let inputs: Vec<MultiVector> = (0..samples)
            .map(|_| MultiVector::from_column(g, k, &sampler.vector(binomial(g, k))))
            .collect();
        let results: Vec<Option<String>> = inputs
            .par_iter()
            .map(|u| {
                let lhs = ext.zeta(u);
                let rhs = u.sub(&ext.casimir(u).scale(&c2rho.recip())).scale(&scalar);
                let dd = ext.delta(&ext.delta(u));
                let ss = ext.delta_star(&ext.delta_star(u));
                if lhs != rhs {
                    Some(format!("zeta identity fails on a random element of degree {k}"))
                } else if !dd.is_zero() || !ss.is_zero() {
                    Some(format!("a square of delta or delta* is nonzero in degree {k}"))
                } else {
                    None
                }
            })
            .collect();
        let failures = results.iter().filter(|r| r.is_some()).count();
        out.push(RandomZetaRecord {
            k,
            samples,
            failures,
            witness: results.into_iter().flatten().next(),
        });
    }
    out
}

/// Full matrix check up to `matrix_degree`, random vectors above it.
pub fn verify_zeta_mixed(
    ext: &Exterior,
    matrix_degree: usize,
    samples: usize,
    sampler: &mut Sampler,
) -> ZetaReport {
    let mut report = verify_zeta_identity(ext, Some(matrix_degree));
    let higher: Vec<usize> = (matrix_degree + 1..=ext.dim()).collect();
    if !higher.is_empty() {
        // spread the samples over the remaining degrees
        let per = samples.div_ceil(higher.len());
        report.random = verify_zeta_random(ext, &higher, per, sampler);
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::linalg::ratio;

    fn alg(s: &str) -> LieAlgebra {
        build_algebra(s.parse().unwrap())
    }

    fn e(i: usize) -> MultiVector {
        MultiVector::basis(1 << i, rat(1))
    }

    #[test]
    fn wedge_signs() {
        assert!(e(1).wedge(&e(1)).is_zero());
        assert_eq!(e(1).wedge(&e(2)).coeff(0b110), rat(1));
        assert_eq!(e(2).wedge(&e(1)).coeff(0b110), rat(-1));
        let u = e(0).wedge(&e(2));
        let v = e(1).wedge(&e(3)).wedge(&e(4));
        // graded commutativity: degrees 2 and 3 commute
        assert_eq!(u.wedge(&v), v.wedge(&u));
        assert_eq!(e(0).wedge(&v), v.wedge(&e(0)).scale(&rat(-1)));
        let sum = e(1).add(&e(2));
        let top = sum.wedge(&e(3)).wedge(&e(4));
        assert!(!top.is_zero());
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets(5, 0), vec![0]);
        assert_eq!(subsets(3, 4), Vec::<u64>::new());
        for k in 0..=8 {
            assert_eq!(subsets(8, k).len(), binomial(8, k));
        }
    }

    #[test]
    fn a1_wsharp_by_hand() {
        // k(h,h) = 8, k(x,y) = 4, so the dual basis is h/8, y/4, x/4, and
        // w(h,x,y) = k(2x, y) = 8 gives w# = 8 (h/8)^(y/4)^(x/4) = -(1/16) h^x^y,
        // and contracting a 3-vector carries the sign (-1)^(1+2+3-3) = -1
        let a = alg("A1");
        let ext = Exterior::new(&a);
        let mut expected = MultiVector::zero(3);
        expected.add_term(0b111, ratio(-1, 16));
        assert_eq!(ext.wsharp(), &expected);
        assert_eq!(ext.delta(&MultiVector::one()), expected);
        assert_eq!(ext.delta_star_w(), ratio(1, 2));
    }

    #[test]
    fn delta_star_w_matches_direct_pairing() {
        for s in ["A1", "A2", "C2"] {
            let a = alg(s);
            let ext = Exterior::new(&a);
            let mut direct = rat(0);
            for (mask, c) in ext.wsharp().terms() {
                let ix: Vec<usize> = bits(*mask).collect();
                direct -= c * a.w_basis(ix[0], ix[1], ix[2]);
            }
            assert_eq!(ext.delta_star_w(), direct);
            assert!(!direct.is_zero(), "{s}");
        }
    }

    #[test]
    fn degree_edges() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let top = MultiVector::basis((1 << 8) - 1, rat(1));
        assert!(ext.delta(&top).is_zero());
        assert!(ext.delta_star(&e(0).wedge(&e(3))).is_zero());
        assert!(ext.lie_action(&a.unit(3), &MultiVector::one()).is_zero());
        assert!(ext.casimir(&MultiVector::one()).is_zero());
        assert!(ext.graded_matrix(Op::Delta, 8).matrix.is_zero());
        assert!(ext.graded_matrix(Op::DeltaStar, 2).matrix.is_zero());
    }

    #[test]
    fn lie_action_on_root_vectors() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let h = a.unit(0);
        let (p, q) = (a.pos_index(0), a.pos_index(1));
        // root coordinates against the Cartan row give a(h_1)
        let ah = |r: usize| {
            let root = &a.root_datum().positive_roots()[r];
            let cm = a.root_datum().cartan_matrix();
            rat((0..2).map(|j| root[j] * cm[j][0]).sum::<i64>())
        };
        assert_eq!(ext.lie_action(&h, &e(p)), e(p).scale(&ah(0)));
        let xy = e(p).wedge(&e(q));
        assert_eq!(ext.lie_action(&h, &xy), xy.scale(&(ah(0) + ah(1))));
    }

    #[test]
    fn casimir_is_identity_on_the_adjoint() {
        for s in ["A1", "A2", "C2"] {
            let a = alg(s);
            let ext = Exterior::new(&a);
            let m = ext.graded_matrix(Op::Casimir, 1).matrix;
            assert_eq!(m, Matrix::identity(a.dim()), "{s}");
        }
    }

    #[test]
    fn borel_top_wedge() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let top = ext.top_wedge(&a.borel());
        assert_eq!(top.degree(), 5);
        assert!(ext.delta_star(&top).is_zero());
        // oracle: Casimir eigenvalue of the weight 2 rho
        assert_eq!(ext.casimir(&top), top.scale(&ratio(8, 3)));
        assert!(ext.zeta(&top).is_zero());
    }

    #[test]
    fn zeta_on_one_and_wsharp() {
        for s in ["A1", "A2"] {
            let a = alg(s);
            let ext = Exterior::new(&a);
            let c = ext.delta_star_w();
            assert_eq!(ext.zeta(&MultiVector::one()), MultiVector::one().scale(&c));
            assert_eq!(ext.zeta(ext.wsharp()), ext.wsharp().scale(&c));
        }
    }

    #[test]
    fn wsharp_is_invariant() {
        for s in ["A2", "C2"] {
            let a = alg(s);
            let ext = Exterior::new(&a);
            for i in 0..a.dim() {
                assert!(ext.lie_action_basis(i, ext.wsharp()).is_zero());
            }
        }
    }

    #[test]
    fn a2_delta_rank_on_degree_two() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let m = ext.graded_matrix(Op::Delta, 2).matrix;
        assert_eq!((m.rows(), m.cols()), (56, 28));
        assert_eq!(m.rank(), 28);
    }

    #[test]
    fn exact_sequences_small() {
        let a = alg("A1");
        let r = verify_exact_sequences(&Exterior::new(&a));
        assert!(r.ok, "{r:?}");
        let a = alg("A2");
        let r = verify_exact_sequences(&Exterior::new(&a));
        assert!(r.ok, "{r:?}");
        let k5 = &r.records[5];
        assert_eq!((k5.rank_delta_in, k5.gamma_mult), (28, 27));
        let k2 = &r.records[2];
        assert_eq!((k2.ker_delta, k2.rank_delta_in, k2.gamma_mult), (0, 0, 0));
    }

    #[test]
    fn zeta_identity_small() {
        let a = alg("A1");
        let r = verify_zeta_identity(&Exterior::new(&a), None);
        assert!(r.ok, "{r:?}");
        assert_eq!(r.degrees.len(), 4);
        let a = alg("A2");
        let r = verify_zeta_identity(&Exterior::new(&a), None);
        assert!(r.ok, "{r:?}");
        assert_eq!(r.degrees.len(), 9);
        assert_eq!(r.c_two_rho, "8/3");
    }

    #[test]
    fn delta_star_is_minus_the_killing_adjoint_of_delta() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        for k in 0..=2 {
            let d = ext.graded_matrix(Op::Delta, k).matrix;
            let s = ext.graded_matrix(Op::DeltaStar, k + 3).matrix;
            let gk = exterior_power(a.killing(), k);
            let gk3 = exterior_power(a.killing(), k + 3);
            assert_eq!(gk.mul(&s), d.transpose().mul(&gk3).scale(&rat(-1)), "degree {k}");
        }
    }

    #[test]
    fn operators_commute_with_the_action() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        for k in 0..=3 {
            ext.check_invariance(Op::Delta, k).unwrap();
            ext.check_invariance(Op::DeltaStar, k + 3).unwrap();
            ext.check_invariance(Op::Casimir, k).unwrap();
        }
    }

    #[test]
    fn random_zeta_checks_pass() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let mut s = Sampler::new(3);
        let recs = verify_zeta_random(&ext, &[4, 5], 3, &mut s);
        assert!(recs.iter().all(|r| r.failures == 0));
    }

    #[test]
    fn corrupted_constant_breaks_the_identities() {
        let mut a = alg("A2");
        let (p, q) = (a.pos_index(0), a.pos_index(1));
        let top = a.pos_index(2);
        a.corrupt_constant(p, q, top, rat(1));
        let ext = Exterior::new(&a);
        let z = verify_zeta_identity(&ext, Some(5));
        let e = verify_exact_sequences(&ext);
        assert!(!z.ok || !e.ok);
    }
}
