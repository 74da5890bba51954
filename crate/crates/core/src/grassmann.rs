//! Plücker vectors of subspaces and the linear equations cutting out the
//! variety of maximal nullspaces: a subspace is a nullspace exactly when
//! the contraction `delta*` kills its Plücker vector.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{build_involution, LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exterior::{exterior_power, Exterior, MultiVector, Op};
use crate::linalg::{rat, Matrix, Rational};
use crate::nullspace::{chart, is_nullspace};
use crate::sampling::Sampler;

/// Top wedge of the canonical basis of a `d`-dimensional subspace.
pub fn plucker(ext: &Exterior, s: &Subspace) -> Result<MultiVector> {
    let d = ext.algebra().d();
    if s.dim() != d {
        return Err(Error::Dimension(format!("subspace of dimension {} instead of {d}", s.dim())));
    }
    Ok(ext.top_wedge(s))
}

pub fn linear_membership(ext: &Exterior, p: &MultiVector) -> bool {
    ext.delta_star(p).is_zero()
}

/// Matrix of `delta*` on the `d`-th exterior power; each row is one linear
/// equation on Plücker coordinates.
pub fn equation_matrix(ext: &Exterior) -> Matrix {
    ext.graded_matrix(Op::DeltaStar, ext.algebra().d()).matrix
}

pub fn equation_count(ext: &Exterior) -> usize {
    equation_matrix(ext).rank()
}

/// The equations have the same row space as the functionals
/// `P -> k(delta(u), P)` for `u` of degree `d - 3`, with the Killing form
/// extended to the `d`-th exterior power. Returns the three ranks
/// `(equations, delta image functionals, stacked)`.
pub fn stacked_rank_check(ext: &Exterior) -> (usize, usize, usize) {
    let d = ext.algebra().d();
    let eq = equation_matrix(ext);
    if d < 3 {
        return (eq.rank(), 0, eq.rank());
    }
    let delta = ext.graded_matrix(Op::Delta, d - 3).matrix;
    let gram = exterior_power(ext.algebra().killing(), d);
    let functionals = delta.transpose().mul(&gram);
    let stacked = eq.vstack(&functionals);
    (eq.rank(), functionals.rank(), stacked.rank())
}

/// `exp(s ad x)` applied to a vector, for nilpotent `ad x`.
pub fn exp_ad(alg: &LieAlgebra, x: &[Rational], s: &Rational, v: &[Rational]) -> Vec<Rational> {
    let ad = alg.ad(x).scale(s);
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    let mut n = 1i64;
    loop {
        term = ad.mul_vec(&term).into_iter().map(|c| c / rat(n)).collect();
        if term.iter().all(Zero::is_zero) {
            return out;
        }
        for (o, t) in out.iter_mut().zip(&term) {
            *o += t;
        }
        n += 1;
        assert!(n as usize <= 2 * alg.dim() + 2, "ad x is not nilpotent");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Borel,
    RandomSubspace,
    ChartPoint,
    ConjugatedChartPoint,
    PerturbedNullspace,
    OrthogonalOfRandom,
    InvolutionEigenspace,
}

const KINDS: [SampleKind; 6] = [
    SampleKind::RandomSubspace,
    SampleKind::ChartPoint,
    SampleKind::ConjugatedChartPoint,
    SampleKind::PerturbedNullspace,
    SampleKind::OrthogonalOfRandom,
    SampleKind::InvolutionEigenspace,
];

fn random_chart_params(alg: &LieAlgebra, s: &mut Sampler) -> Vec<Rational> {
    (0..alg.rank()).map(|_| s.small()).collect()
}

fn draw_sample(alg: &LieAlgebra, kind: SampleKind, s: &mut Sampler) -> Subspace {
    let (g, d, l) = (alg.dim(), alg.d(), alg.rank());
    match kind {
        SampleKind::Borel => alg.borel(),
        SampleKind::RandomSubspace => Subspace::new(s.full_rank_matrix(d, g)),
        SampleKind::ChartPoint => chart(alg, &random_chart_params(alg, s))
            .expect("chart lines are well defined")
            .subspace,
        SampleKind::ConjugatedChartPoint => {
            let v = chart(alg, &random_chart_params(alg, s)).expect("chart").subspace;
            let np = alg.num_positive();
            let mut rows = v.basis().row_vecs();
            for _ in 0..2 {
                let r = s.index(np);
                let x = alg.unit(if s.coin() { alg.pos_index(r) } else { alg.neg_index(r) });
                let t = s.small_nonzero();
                rows = rows.iter().map(|row| exp_ad(alg, &x, &t, row)).collect();
            }
            Subspace::from_vectors(rows, g)
        }
        SampleKind::PerturbedNullspace => {
            let v = chart(alg, &random_chart_params(alg, s)).expect("chart").subspace;
            let mut rows = v.basis().row_vecs();
            let i = s.index(d);
            let noise = s.vector(g);
            for (a, b) in rows[i].iter_mut().zip(noise) {
                *a += b;
            }
            let sub = Subspace::from_vectors(rows, g);
            if sub.dim() == d {
                sub
            } else {
                v
            }
        }
        SampleKind::OrthogonalOfRandom => {
            let w = Subspace::new(s.full_rank_matrix((g - l) / 2, g));
            alg.orthogonal_complement(&w)
        }
        SampleKind::InvolutionEigenspace => {
            let signs: Vec<i64> = (0..l).map(|_| if s.coin() { 1 } else { -1 }).collect();
            build_involution(alg, &signs).expect("valid signs").minus_space()
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct KindTally {
    pub samples: usize,
    pub nullspaces: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MembershipReport {
    pub seed: u64,
    pub samples: usize,
    pub nullspaces: usize,
    pub disagreements: usize,
    pub orthogonal_checks_failed: usize,
    pub by_kind: BTreeMap<SampleKind, KindTally>,
    pub first_disagreement: Option<String>,
    pub ok: bool,
}

/// Compares the linear test on Plücker vectors with the direct predicate on
/// seeded samples. The Borel is always the first sample.
pub fn membership_equivalence_suite(ext: &Exterior, samples: usize, seed: u64) -> MembershipReport {
    let alg = ext.algebra();
    let (g, d, l) = (alg.dim(), alg.d(), alg.rank());
    let mut sampler = Sampler::new(seed);
    let drawn: Vec<(SampleKind, Subspace)> = (0..samples)
        .map(|i| {
            let kind = if i == 0 { SampleKind::Borel } else { KINDS[(i - 1) % KINDS.len()] };
            (kind, draw_sample(alg, kind, &mut sampler))
        })
        .collect();
    let results: Vec<(SampleKind, bool, bool, bool)> = drawn
        .par_iter()
        .map(|(kind, v)| {
            let direct = is_nullspace(alg, v);
            let linear = plucker(ext, v).map(|p| linear_membership(ext, &p)).unwrap_or(false);
            let mut orth_ok = true;
            if matches!(kind, SampleKind::ChartPoint | SampleKind::ConjugatedChartPoint) {
                let perp = alg.orthogonal_complement(v);
                let back = alg.orthogonal_complement(&perp);
                orth_ok = perp.dim() == (g - l) / 2
                    && back.dim() == d
                    && plucker(ext, &back).map(|p| linear_membership(ext, &p)).unwrap_or(false);
            }
            (*kind, direct, linear, orth_ok)
        })
        .collect();
    let mut by_kind: BTreeMap<SampleKind, KindTally> = BTreeMap::new();
    let mut first = None;
    let (mut dis, mut nulls, mut orth_fail) = (0, 0, 0);
    for (i, (kind, direct, linear, orth_ok)) in results.iter().enumerate() {
        let t = by_kind.entry(*kind).or_default();
        t.samples += 1;
        if *direct {
            t.nullspaces += 1;
            nulls += 1;
        }
        if direct != linear {
            t.disagreements += 1;
            dis += 1;
            first.get_or_insert_with(|| format!("sample {i} ({kind:?}): direct {direct}, linear {linear}"));
        }
        if !orth_ok {
            orth_fail += 1;
        }
    }
    MembershipReport {
        seed,
        samples,
        nullspaces: nulls,
        disagreements: dis,
        orthogonal_checks_failed: orth_fail,
        by_kind,
        first_disagreement: first,
        ok: dis == 0 && orth_fail == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::exterior::binomial;
    use crate::linalg::rat;

    fn alg(s: &str) -> LieAlgebra {
        build_algebra(s.parse().unwrap())
    }

    #[test]
    fn plucker_of_coordinate_subspaces() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let p = plucker(&ext, &a.borel()).unwrap();
        let mask: u64 = [0, 1, 2, 3, 4].iter().map(|i| 1u64 << i).sum();
        assert_eq!(p, MultiVector::basis(mask, rat(1)));
        let c = chart(&a, &[rat(0), rat(0)]).unwrap().subspace;
        assert_eq!(plucker(&ext, &c).unwrap(), p);
        assert!(plucker(&ext, &a.cartan_subalgebra()).is_err());
    }

    #[test]
    fn plucker_of_open_chart_point_by_expansion() {
        // oracle: expand the wedge of the five chart rows term by term
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let v = chart(&a, &[rat(1), rat(1)]).unwrap();
        let p = plucker(&ext, &v.subspace).unwrap();
        assert!(p.terms().len() > 1);
        let mut expected = MultiVector::one();
        for row in v.subspace.basis().row_vecs() {
            let mut deg1 = MultiVector::zero(1);
            for (i, c) in row.iter().enumerate() {
                deg1.add_term(1 << i, c.clone());
            }
            expected = expected.wedge(&deg1);
        }
        assert_eq!(p, expected);
        // two choices of basis give proportional wedges
        let rows = v.subspace.basis().row_vecs();
        let mut other = MultiVector::vector(&rows[0].iter().zip(&rows[1]).map(|(x, y)| x + y).collect::<Vec<_>>());
        for r in &rows[1..] {
            other = other.wedge(&MultiVector::vector(r));
        }
        assert_eq!(other, p);
    }

    #[test]
    fn membership_examples() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        assert!(linear_membership(&ext, &plucker(&ext, &a.borel()).unwrap()));
        let s = build_involution(&a, &[-1, 1]).unwrap();
        assert!(linear_membership(&ext, &plucker(&ext, &s.minus_space()).unwrap()));
        let mut smp = Sampler::new(11);
        let v = Subspace::new(smp.full_rank_matrix(5, 8));
        assert!(!is_nullspace(&a, &v));
        assert!(!linear_membership(&ext, &plucker(&ext, &v).unwrap()));
    }

    #[test]
    fn equation_counts() {
        let a = alg("A1");
        assert_eq!(equation_count(&Exterior::new(&a)), 0);
        let a = alg("A2");
        let ext = Exterior::new(&a);
        let n = equation_count(&ext);
        assert_eq!(n, 28);
        assert_eq!(binomial(8, 5) - n, 1 + 27);
        let c = alg("C2");
        assert_eq!(equation_count(&Exterior::new(&c)), 119);
    }

    #[test]
    fn equations_match_delta_image() {
        let a = alg("A2");
        let (e, f, s) = stacked_rank_check(&Exterior::new(&a));
        assert_eq!((e, f, s), (28, 28, 28));
    }

    #[test]
    fn equations_are_invariant() {
        let a = alg("A2");
        let ext = Exterior::new(&a);
        ext.check_invariance(Op::DeltaStar, a.d()).unwrap();
    }

    #[test]
    fn conjugation_preserves_nullspaces() {
        let a = alg("C2");
        let v = chart(&a, &[rat(1), rat(2)]).unwrap().subspace;
        let x = a.unit(a.neg_index(1));
        let rows: Vec<_> = v.basis().row_vecs().iter().map(|r| exp_ad(&a, &x, &rat(3), r)).collect();
        let w = Subspace::from_vectors(rows, a.dim());
        assert_eq!(w.dim(), a.d());
        assert!(is_nullspace(&a, &w));
        assert_ne!(w, v);
    }

    #[test]
    fn small_membership_suites_agree() {
        for s in ["A1", "A2"] {
            let a = alg(s);
            let r = membership_equivalence_suite(&Exterior::new(&a), 30, 42);
            assert!(r.ok, "{r:?}");
            assert!(r.nullspaces > 0 && r.nullspaces < 30 || s == "A1");
        }
    }
}
