//! Classical simple Lie algebras with exact structure constants, the Killing
//! form and the invariant alternating trilinear form `w(x, y, z) = k([x, y], z)`.
//!
//! The algebras are realized by matrices: trace-zero matrices for type A,
//! and the algebras preserving the forms with Gram matrices
//! `[[0, I], [I, 0]]` (plus a `1` for type B) or `[[0, I], [-I, 0]]` for types
//! D, B and C. Root vectors are elementary matrices (or differences of two),
//! negative root vectors are their transposes, and the Cartan basis consists
//! of the coroots `h_i = [x_{a_i}, x_{-a_i}]`.
//!
//! Basis order is `h_1..h_l`, then `x_a` for positive roots by height, then
//! `x_{-a}` in the same order.

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::{dot, format_rational, parse_rational, rat, Matrix, Rational};
use crate::roots::{build_root_datum, RootDatum, RootType, TypeLabel};

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    rd: RootDatum,
    labels: Vec<String>,
    /// `sc[(i * g + j) * g + k]` is the coefficient of `b_k` in `[b_i, b_j]`
    sc: Vec<Rational>,
    killing: Matrix,
    /// trace form of the defining matrix realization, when known
    trace_form: Option<Matrix>,
    /// `w(b_i, b_j, b_k)`, derived from `sc` and `killing`
    w_table: Vec<Rational>,
}

/// What kind of basis vector sits at a given index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    Cartan(usize),
    Positive(usize),
    Negative(usize),
}

fn elem(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Rational::one();
    m
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).sub(&b.mul(a))
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> Rational {
    let n = a.rows();
    let mut s = Rational::zero();
    for i in 0..n {
        for k in 0..n {
            let x = &a[(i, k)];
            if !x.is_zero() {
                let y = &b[(k, i)];
                if !y.is_zero() {
                    s += x * y;
                }
            }
        }
    }
    s
}

/// Matrix of the root vector for a positive root given in orthonormal
/// coordinates.
fn root_vector(kind: RootType, l: usize, root: &[Rational]) -> Matrix {
    let nz: Vec<(usize, i64)> = root
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.to_integer().try_into().expect("small root coordinate")))
        .collect();
    match kind {
        RootType::A => {
            let n = l + 1;
            let (i, j) = (nz[0].0, nz[1].0);
            elem(n, i, j)
        }
        RootType::B | RootType::C | RootType::D => {
            let n = l;
            let size = if kind == RootType::B { 2 * n + 1 } else { 2 * n };
            match nz.as_slice() {
                [(i, 1), (j, -1)] => elem(size, *i, *j).sub(&elem(size, n + j, n + i)),
                [(i, 1), (j, 1)] => {
                    if kind == RootType::C {
                        elem(size, *i, n + j).add(&elem(size, *j, n + i))
                    } else {
                        elem(size, *i, n + j).sub(&elem(size, *j, n + i))
                    }
                }
                [(i, 2)] => elem(size, *i, n + i),
                [(i, 1)] => elem(size, *i, 2 * n).sub(&elem(size, 2 * n, n + i)),
                _ => unreachable!("unexpected root shape"),
            }
        }
    }
}

pub fn build_algebra(label: TypeLabel) -> LieAlgebra {
    let rd = build_root_datum(label);
    let l = rd.rank();
    let np = rd.num_positive();
    let g = rd.dim();

    let pos: Vec<Matrix> = rd
        .positive_roots_ambient()
        .iter()
        .map(|r| root_vector(label.kind, l, r))
        .collect();
    let neg: Vec<Matrix> = pos.iter().map(Matrix::transpose).collect();
    let mut basis: Vec<Matrix> = (0..l)
        .map(|i| {
            let s = rd.simple_index(i);
            commutator(&pos[s], &neg[s])
        })
        .collect();
    basis.extend(pos);
    basis.extend(neg);
    assert_eq!(basis.len(), g);

    let mut trace = Matrix::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let t = trace_of_product(&basis[i], &basis[j]);
            trace[(i, j)] = t.clone();
            trace[(j, i)] = t;
        }
    }
    let trace_inv = trace.inverse().expect("trace form is nondegenerate");

    let mut sc = vec![Rational::zero(); g * g * g];
    for i in 0..g {
        for j in i + 1..g {
            let c = commutator(&basis[i], &basis[j]);
            if c.is_zero() {
                continue;
            }
            let pairings: Vec<Rational> = basis.iter().map(|b| trace_of_product(&c, b)).collect();
            let coords = trace_inv.mul_vec(&pairings);
            let mut check = Matrix::zeros(c.rows(), c.cols());
            for (k, x) in coords.iter().enumerate() {
                if !x.is_zero() {
                    check = check.add(&basis[k].scale(x));
                }
            }
            assert_eq!(check, c, "bracket left the span of the basis");
            for (k, x) in coords.into_iter().enumerate() {
                sc[(j * g + i) * g + k] = -x.clone();
                sc[(i * g + j) * g + k] = x;
            }
        }
    }

    let mut labels: Vec<String> = (1..=l).map(|i| format!("h{i}")).collect();
    for sign in ["+", "-"] {
        for r in rd.positive_roots() {
            let c: Vec<String> = r.iter().map(i64::to_string).collect();
            labels.push(format!("x{sign}[{}]", c.join(",")));
        }
    }
    debug_assert_eq!(labels.len(), l + 2 * np);

    let killing = ad_trace_form(g, &sc);
    let w_table = w_from(g, &sc, &killing);
    LieAlgebra {
        rd,
        labels,
        sc,
        killing,
        trace_form: Some(trace),
        w_table,
    }
}

fn ad_trace_form(g: usize, sc: &[Rational]) -> Matrix {
    // k(b_i, b_j) = sum_{m, n} C_{i m}^n C_{j n}^m
    let mut k = Matrix::zeros(g, g);
    for i in 0..g {
        for j in i..g {
            let mut s = Rational::zero();
            for m in 0..g {
                for n in 0..g {
                    let a = &sc[(i * g + m) * g + n];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &sc[(j * g + n) * g + m];
                    if !b.is_zero() {
                        s += a * b;
                    }
                }
            }
            k[(i, j)] = s.clone();
            k[(j, i)] = s;
        }
    }
    k
}

fn w_from(g: usize, sc: &[Rational], killing: &Matrix) -> Vec<Rational> {
    let mut w = vec![Rational::zero(); g * g * g];
    for i in 0..g {
        for j in 0..g {
            let br = &sc[(i * g + j) * g..(i * g + j + 1) * g];
            if br.iter().all(Zero::is_zero) {
                continue;
            }
            let row = killing.vec_mul(br);
            for (k, v) in row.into_iter().enumerate() {
                w[(i * g + j) * g + k] = v;
            }
        }
    }
    w
}

impl LieAlgebra {
    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn dim(&self) -> usize {
        self.rd.dim()
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    /// Dimension `(g + l) / 2` of maximal nullspaces.
    pub fn d(&self) -> usize {
        self.rd.d()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn killing(&self) -> &Matrix {
        &self.killing
    }

    pub fn trace_form(&self) -> Option<&Matrix> {
        self.trace_form.as_ref()
    }

    pub fn num_positive(&self) -> usize {
        self.rd.num_positive()
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        i
    }

    pub fn pos_index(&self, root: usize) -> usize {
        self.rank() + root
    }

    pub fn neg_index(&self, root: usize) -> usize {
        self.rank() + self.num_positive() + root
    }

    pub fn basis_kind(&self, idx: usize) -> BasisKind {
        let (l, np) = (self.rank(), self.num_positive());
        if idx < l {
            BasisKind::Cartan(idx)
        } else if idx < l + np {
            BasisKind::Positive(idx - l)
        } else {
            BasisKind::Negative(idx - l - np)
        }
    }

    /// Weight of a basis vector in simple-root coordinates.
    pub fn basis_weight(&self, idx: usize) -> Vec<i64> {
        match self.basis_kind(idx) {
            BasisKind::Cartan(_) => vec![0; self.rank()],
            BasisKind::Positive(r) => self.rd.positive_roots()[r].clone(),
            BasisKind::Negative(r) => self.rd.positive_roots()[r].iter().map(|x| -x).collect(),
        }
    }

    pub fn unit(&self, idx: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[idx] = Rational::one();
        v
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let g = self.dim();
        &self.sc[(i * g + j) * g..(i * g + j + 1) * g]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let g = self.dim();
        &self.sc[(i * g + j) * g + k]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let g = self.dim();
        assert!(x.len() == g && y.len() == g, "vector length must equal dim");
        let mut out = vec![Rational::zero(); g];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    pub fn killing_eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.killing.mul_vec(y))
    }

    /// `w(b_i, b_j, b_k)`.
    pub fn w_basis(&self, i: usize, j: usize, k: usize) -> &Rational {
        let g = self.dim();
        &self.w_table[(i * g + j) * g + k]
    }

    pub fn w_eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Rational {
        self.killing_eval(&self.bracket(x, y), z)
    }

    /// Matrix of `ad x` acting on coordinate columns.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let g = self.dim();
        let mut m = Matrix::zeros(g, g);
        for j in 0..g {
            let col = self.bracket(x, &self.unit(j));
            for (k, v) in col.into_iter().enumerate() {
                m[(k, j)] = v;
            }
        }
        m
    }

    /// `k`-dual basis: row `i` holds the coordinates of `b^i` with
    /// `k(b_j, b^i) = delta_ij`.
    pub fn dual_basis(&self) -> Matrix {
        self.killing
            .inverse()
            .expect("Killing form of a semisimple algebra is nondegenerate")
    }

    /// Adds `delta` to the single structure constant `C_{ij}^k`, leaving its
    /// antisymmetric partner and the stored Killing form untouched. Used for
    /// fault-injection runs of the verification suites.
    pub fn corrupt_constant(&mut self, i: usize, j: usize, k: usize, delta: Rational) {
        let g = self.dim();
        self.sc[(i * g + j) * g + k] += delta;
        self.w_table = w_from(g, &self.sc, &self.killing);
    }

    // --- canonical subspaces ---

    pub fn subspace_from_indices(&self, idx: &[usize]) -> Subspace {
        Subspace::new(Matrix::from_rows_with_cols(
            idx.iter().map(|&i| self.unit(i)).collect(),
            self.dim(),
        ))
    }

    pub fn cartan_subalgebra(&self) -> Subspace {
        self.subspace_from_indices(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// The standard Borel subalgebra `h + positive root spaces`.
    pub fn borel(&self) -> Subspace {
        let mut idx: Vec<usize> = (0..self.rank()).collect();
        idx.extend((0..self.num_positive()).map(|r| self.pos_index(r)));
        self.subspace_from_indices(&idx)
    }

    pub fn opposite_borel(&self) -> Subspace {
        let mut idx: Vec<usize> = (0..self.rank()).collect();
        idx.extend((0..self.num_positive()).map(|r| self.neg_index(r)));
        self.subspace_from_indices(&idx)
    }

    pub fn nilradical(&self) -> Subspace {
        let idx: Vec<usize> = (0..self.num_positive()).map(|r| self.pos_index(r)).collect();
        self.subspace_from_indices(&idx)
    }

    pub fn negative_nilradical(&self) -> Subspace {
        let idx: Vec<usize> = (0..self.num_positive()).map(|r| self.neg_index(r)).collect();
        self.subspace_from_indices(&idx)
    }

    pub fn whole(&self) -> Subspace {
        Subspace::new(Matrix::identity(self.dim()))
    }

    /// Killing-orthogonal complement.
    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        if s.dim() == 0 {
            return self.whole();
        }
        Subspace::new(s.basis().mul(&self.killing).kernel_basis())
    }

    /// Span of `S + [S, S]`.
    pub fn span_with_brackets(&self, s: &Subspace) -> Subspace {
        let rows = s.basis().row_vecs();
        let mut all = rows.clone();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                all.push(self.bracket(&rows[i], &rows[j]));
            }
        }
        Subspace::new(Matrix::from_rows_with_cols(all, self.dim()))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let rows = s.basis().row_vecs();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if !s.contains(&self.bracket(&rows[i], &rows[j])) {
                    return false;
                }
            }
        }
        true
    }

    // --- structural checks; each returns a witness on failure ---

    pub fn check_antisymmetry(&self) -> std::result::Result<(), String> {
        let g = self.dim();
        for i in 0..g {
            for j in 0..g {
                for k in 0..g {
                    if self.structure_constant(i, j, k) != &-self.structure_constant(j, i, k) {
                        return Err(format!("C[{i},{j}]^{k} != -C[{j},{i}]^{k}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi(&self) -> std::result::Result<(), String> {
        let g = self.dim();
        for i in 0..g {
            for j in i + 1..g {
                for k in j + 1..g {
                    let (x, y, z) = (self.unit(i), self.unit(j), self.unit(k));
                    let a = self.bracket(&x, &self.bracket(&y, &z));
                    let b = self.bracket(&y, &self.bracket(&z, &x));
                    let c = self.bracket(&z, &self.bracket(&x, &y));
                    if a.iter().zip(&b).zip(&c).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        return Err(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Killing form recomputed from the structure constants equals the
    /// stored one.
    pub fn check_killing_recomputed(&self) -> std::result::Result<(), String> {
        let k = ad_trace_form(self.dim(), &self.sc);
        if k == self.killing {
            Ok(())
        } else {
            Err("trace(ad x ad y) differs from the stored Killing form".into())
        }
    }

    /// The Killing form is a nonzero multiple of the trace form of the
    /// matrix realization. Returns the ratio.
    pub fn killing_trace_ratio(&self) -> Option<Rational> {
        let t = self.trace_form.as_ref()?;
        let s = &self.killing[(0, 0)] / &t[(0, 0)];
        (t.scale(&s) == self.killing).then_some(s)
    }

    pub fn check_killing_invariance(&self) -> std::result::Result<(), String> {
        let g = self.dim();
        for i in 0..g {
            for j in 0..g {
                let xy = self.bracket_basis(i, j).to_vec();
                for k in 0..g {
                    let lhs = self.killing_eval(&xy, &self.unit(k));
                    let xz = self.bracket_basis(i, k).to_vec();
                    let rhs = -self.killing_eval(&self.unit(j), &xz);
                    if lhs != rhs {
                        return Err(format!(
                            "k([{a},{b}],{c}) != -k({b},[{a},{c}])",
                            a = self.labels[i],
                            b = self.labels[j],
                            c = self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_w_alternating(&self) -> std::result::Result<(), String> {
        let g = self.dim();
        for i in 0..g {
            for j in 0..g {
                for k in 0..g {
                    let v = self.w_basis(i, j, k);
                    let ok = v == &-self.w_basis(j, i, k)
                        && v == &-self.w_basis(i, k, j)
                        && (i != j || v.is_zero());
                    if !ok {
                        return Err(format!(
                            "w not alternating at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `w([a,x],y,z) + w(x,[a,y],z) + w(x,y,[a,z]) = 0` on basis vectors.
    pub fn check_w_invariance(&self) -> std::result::Result<(), String> {
        let g = self.dim();
        for a in 0..g {
            for x in 0..g {
                let ax = self.bracket_basis(a, x).to_vec();
                for y in x + 1..g {
                    let ay = self.bracket_basis(a, y).to_vec();
                    for z in y + 1..g {
                        let az = self.bracket_basis(a, z).to_vec();
                        let (ux, uy, uz) = (self.unit(x), self.unit(y), self.unit(z));
                        let s = self.w_eval(&ax, &uy, &uz)
                            + self.w_eval(&ux, &ay, &uz)
                            + self.w_eval(&ux, &uy, &az);
                        if !s.is_zero() {
                            return Err(format!(
                                "w not invariant under {} at ({}, {}, {})",
                                self.labels[a], self.labels[x], self.labels[y], self.labels[z]
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Root-space pairing: `k(b_i, b_j) != 0` only for `h`-`h` pairs and for
    /// `x_a`, `x_{-a}` pairs, and every such pair pairs nontrivially.
    pub fn check_root_pairing(&self) -> std::result::Result<(), String> {
        let g = self.dim();
        for i in 0..g {
            for j in 0..g {
                let expected_nonzero = match (self.basis_kind(i), self.basis_kind(j)) {
                    (BasisKind::Cartan(_), BasisKind::Cartan(_)) => None,
                    (BasisKind::Positive(a), BasisKind::Negative(b))
                    | (BasisKind::Negative(a), BasisKind::Positive(b)) => Some(a == b),
                    _ => Some(false),
                };
                let nz = !self.killing[(i, j)].is_zero();
                if let Some(e) = expected_nonzero {
                    if e != nz {
                        return Err(format!(
                            "k({}, {}) has the wrong support",
                            self.labels[i], self.labels[j]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    // --- JSON ---

    pub fn to_json(&self) -> serde_json::Value {
        let g = self.dim();
        let mut consts = Vec::new();
        for i in 0..g {
            for j in 0..g {
                for k in 0..g {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        consts.push(json!({"i": i, "j": j, "k": k, "c": format_rational(c)}));
                    }
                }
            }
        }
        json!({
            "type": self.rd.label().to_string(),
            "basis": self.labels,
            "structure_constants": consts,
            "killing": self.killing.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(m.to_string());
        let label: TypeLabel = v["type"]
            .as_str()
            .ok_or_else(|| bad("missing type"))?
            .parse()?;
        let rd = build_root_datum(label);
        let g = rd.dim();
        let labels: Vec<String> = v["basis"]
            .as_array()
            .ok_or_else(|| bad("missing basis"))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("bad label")))
            .collect::<Result<_>>()?;
        if labels.len() != g {
            return Err(Error::Dimension(format!("{} labels for dimension {g}", labels.len())));
        }
        let mut sc = vec![Rational::zero(); g * g * g];
        for e in v["structure_constants"]
            .as_array()
            .ok_or_else(|| bad("missing structure_constants"))?
        {
            let idx = |key: &str| -> Result<usize> {
                let x = e[key].as_u64().ok_or_else(|| bad("bad index"))? as usize;
                if x >= g {
                    return Err(bad("index out of range"));
                }
                Ok(x)
            };
            let (i, j, k) = (idx("i")?, idx("j")?, idx("k")?);
            let c = parse_rational(e["c"].as_str().ok_or_else(|| bad("bad constant"))?)?;
            sc[(i * g + j) * g + k] = c;
        }
        let killing = Matrix::from_json(&v["killing"])?;
        if killing.rows() != g || killing.cols() != g {
            return Err(Error::Dimension("Killing matrix shape".into()));
        }
        let w_table = w_from(g, &sc, &killing);
        Ok(LieAlgebra {
            rd,
            labels,
            sc,
            killing,
            trace_form: None,
            w_table,
        })
    }
}

/// A linear subspace of the algebra, stored by its canonical reduced row
/// echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    pub fn new(spanning_rows: Matrix) -> Self {
        Self {
            basis: spanning_rows.row_space(),
        }
    }

    pub fn from_vectors(vectors: Vec<Vec<Rational>>, ambient: usize) -> Self {
        Self::new(Matrix::from_rows_with_cols(vectors, ambient))
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let row = Matrix::from_rows(vec![v.to_vec()]);
        self.basis.vstack(&row).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.sum(other).dim() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::new(self.basis.vstack(&other.basis))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = a A = b B  <=>  (a, -b) [A; B] = 0
        let stacked = self.basis.vstack(&other.basis);
        let ker = stacked.transpose().kernel_basis();
        let vectors: Vec<Vec<Rational>> = (0..ker.rows())
            .map(|r| self.basis.vec_mul(&ker.row(r)[..self.dim()]))
            .collect();
        Subspace::from_vectors(vectors, self.ambient_dim())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.basis.to_json();
        v["dim"] = json!(self.dim());
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        Ok(Subspace::new(Matrix::from_json(v)?))
    }
}

/// An involution acting as `-1` on the Cartan subalgebra and sending `x_a`
/// to `t_a x_{-a}`.
#[derive(Debug, Clone)]
pub struct Involution {
    /// acts on coordinate columns
    matrix: Matrix,
    /// `t_a` for every positive root, in height order
    signs: Vec<Rational>,
}

impl Involution {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn signs(&self) -> &[Rational] {
        &self.signs
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    pub fn fixed_space(&self) -> Subspace {
        let g = self.matrix.rows();
        Subspace::new(self.matrix.sub(&Matrix::identity(g)).kernel_basis())
    }

    /// The `-1` eigenspace.
    pub fn minus_space(&self) -> Subspace {
        let g = self.matrix.rows();
        Subspace::new(self.matrix.add(&Matrix::identity(g)).kernel_basis())
    }
}

/// Extends one sign per simple root to an involutive automorphism.
///
/// Signs of non-simple roots are forced by `s[x_a, x_b] = [s x_a, s x_b]`
/// along the lowest-height decomposition; the full automorphism property is
/// then checked on every basis pair.
pub fn build_involution(alg: &LieAlgebra, simple_signs: &[i64]) -> Result<Involution> {
    let rd = alg.root_datum();
    let (l, np, g) = (alg.rank(), alg.num_positive(), alg.dim());
    if simple_signs.len() != l || simple_signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::Involution(format!(
            "expected {l} signs in {{+1, -1}}, got {simple_signs:?}"
        )));
    }
    let mut signs: Vec<Option<Rational>> = vec![None; np];
    for (i, &s) in simple_signs.iter().enumerate() {
        signs[rd.simple_index(i)] = Some(rat(s));
    }
    for r in 0..np {
        if signs[r].is_some() {
            continue;
        }
        let (a, b) = rd.decompositions(r)[0];
        // [x_a, x_b] = n x_r  and  [x_-a, x_-b] = n' x_-r
        let n = alg.bracket_basis(alg.pos_index(a), alg.pos_index(b))[alg.pos_index(r)].clone();
        let n2 = alg.bracket_basis(alg.neg_index(a), alg.neg_index(b))[alg.neg_index(r)].clone();
        let ta = signs[a].clone().expect("lower roots are assigned first");
        let tb = signs[b].clone().expect("lower roots are assigned first");
        signs[r] = Some(ta * tb * n2 / n);
    }
    let signs: Vec<Rational> = signs.into_iter().map(Option::unwrap).collect();

    let mut m = Matrix::zeros(g, g);
    for i in 0..l {
        m[(i, i)] = rat(-1);
    }
    for (r, t) in signs.iter().enumerate() {
        let (p, q) = (alg.pos_index(r), alg.neg_index(r));
        m[(q, p)] = t.clone();
        m[(p, q)] = t.recip();
    }
    let inv = Involution { matrix: m, signs };

    if inv.matrix.mul(&inv.matrix) != Matrix::identity(g) {
        return Err(Error::Involution("square is not the identity".into()));
    }
    for i in 0..g {
        let si = inv.apply(&alg.unit(i));
        for j in i + 1..g {
            let lhs = inv.apply(alg.bracket_basis(i, j));
            let rhs = alg.bracket(&si, &inv.apply(&alg.unit(j)));
            if lhs != rhs {
                return Err(Error::Involution(format!(
                    "not an automorphism on ({}, {})",
                    alg.labels()[i],
                    alg.labels()[j]
                )));
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn alg(s: &str) -> LieAlgebra {
        build_algebra(s.parse().unwrap())
    }

    #[test]
    fn a1_structure() {
        let a = alg("A1");
        assert_eq!(a.dim(), 3);
        let (h, x, y) = (a.unit(0), a.unit(1), a.unit(2));
        assert_eq!(a.bracket(&h, &x), x.iter().map(|c| c * rat(2)).collect::<Vec<_>>());
        assert_eq!(a.bracket(&h, &y), y.iter().map(|c| c * rat(-2)).collect::<Vec<_>>());
        // matrix commutator [E12, E21] = diag(1, -1) = h
        assert_eq!(a.bracket(&x, &y), h);
        // trace of (ad h)^2 = 2^2 + (-2)^2
        assert_eq!(a.killing()[(0, 0)], rat(8));
        assert_eq!(a.w_eval(&x, &y, &h), rat(8));
        assert_eq!(a.w_eval(&x, &x, &h), rat(0));
        assert_eq!(a.bracket(&x, &x), vec![rat(0); 3]);
    }

    #[test]
    fn small_algebras_pass_structure_checks() {
        for s in ["A1", "A2", "C2", "B2", "A3"] {
            let a = alg(s);
            a.check_antisymmetry().unwrap();
            a.check_jacobi().unwrap();
            a.check_killing_recomputed().unwrap();
            a.check_killing_invariance().unwrap();
            a.check_w_alternating().unwrap();
            a.check_root_pairing().unwrap();
            assert!(a.killing_trace_ratio().is_some(), "{s}");
        }
    }

    #[test]
    fn killing_to_trace_ratio_is_the_dual_coxeter_multiple() {
        // k = 2 h^vee tr for sl(n) and sp(2n), (n - 2) tr for so(n)
        assert_eq!(alg("A2").killing_trace_ratio(), Some(rat(6)));
        assert_eq!(alg("C2").killing_trace_ratio(), Some(rat(6)));
        assert_eq!(alg("B2").killing_trace_ratio(), Some(rat(3)));
    }

    #[test]
    fn w_invariance_a2() {
        alg("A2").check_w_invariance().unwrap();
    }

    #[test]
    fn a2_w_nonzero_on_simple_triple() {
        let a = alg("A2");
        let rd = a.root_datum();
        let (s1, s2, top) = (rd.simple_index(0), rd.simple_index(1), 2);
        let v = a.w_basis(a.pos_index(s1), a.pos_index(s2), a.neg_index(top));
        assert!(!v.is_zero());
        for r in 0..3 {
            assert!(!a.killing()[(a.pos_index(r), a.neg_index(r))].is_zero());
        }
    }

    #[test]
    fn cartan_brackets_vanish() {
        let a = alg("C2");
        assert!(a.bracket_basis(0, 1).iter().all(Zero::is_zero));
    }

    #[test]
    fn involution_dimensions() {
        let a = alg("A1");
        let s = build_involution(&a, &[1]).unwrap();
        assert_eq!((s.fixed_space().dim(), s.minus_space().dim()), (1, 2));
        let a = alg("A2");
        let s = build_involution(&a, &[1, 1]).unwrap();
        assert_eq!((s.fixed_space().dim(), s.minus_space().dim()), (3, 5));
        let a = alg("C2");
        for signs in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
            let s = build_involution(&a, &signs).unwrap();
            assert_eq!((s.fixed_space().dim(), s.minus_space().dim()), (4, 6));
            assert!(s.signs().iter().all(|t| t * t == rat(1)));
        }
        assert!(build_involution(&a, &[1]).is_err());
        assert!(build_involution(&a, &[2, 1]).is_err());
    }

    #[test]
    fn minus_space_is_orthogonal_of_fixed_space() {
        for s in ["A2", "C2", "B2", "A3"] {
            let a = alg(s);
            let l = a.rank();
            for mask in 0..(1u32 << l) {
                let signs: Vec<i64> = (0..l).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                let inv = build_involution(&a, &signs).unwrap();
                let fixed = inv.fixed_space();
                let minus = inv.minus_space();
                assert_eq!(a.orthogonal_complement(&fixed), minus);
                assert_eq!(fixed.sum(&minus).dim(), a.dim());
                for x in fixed.basis().row_vecs() {
                    for y in minus.basis().row_vecs() {
                        assert!(a.killing_eval(&x, &y).is_zero());
                    }
                }
                // explicit form h + sum C (x_a - t_a x_-a)
                let mut vecs: Vec<Vec<Rational>> = (0..l).map(|i| a.unit(i)).collect();
                for (r, t) in inv.signs().iter().enumerate() {
                    let mut v = a.unit(a.pos_index(r));
                    v[a.neg_index(r)] = -t.clone();
                    vecs.push(v);
                }
                assert_eq!(Subspace::from_vectors(vecs, a.dim()), minus);
            }
        }
    }

    #[test]
    fn orthogonal_complements() {
        let a = alg("A2");
        assert_eq!(a.orthogonal_complement(&a.whole()).dim(), 0);
        let hperp = a.orthogonal_complement(&a.cartan_subalgebra());
        assert_eq!(hperp, a.nilradical().sum(&a.negative_nilradical()));
        let b = a.borel();
        assert_eq!(a.orthogonal_complement(&a.orthogonal_complement(&b)), b);
        assert_eq!(a.orthogonal_complement(&b), a.nilradical());
    }

    #[test]
    fn subspace_operations() {
        let a = alg("A2");
        let b = a.borel();
        let bm = a.opposite_borel();
        assert_eq!(b.intersection(&bm), a.cartan_subalgebra());
        assert_eq!(b.intersection_dim(&bm), 2);
        assert!(b.contains_subspace(&a.nilradical()));
        assert!(a.is_subalgebra(&b));
        assert!(!a.is_subalgebra(&a.nilradical().sum(&a.negative_nilradical())));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let a = alg("C2");
        let j = a.to_json();
        let back = LieAlgebra::from_json(&j).unwrap();
        assert_eq!(back.to_json(), j);
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), serde_json::to_string(&j).unwrap());
    }

    #[test]
    fn corruption_breaks_antisymmetry() {
        let mut a = alg("A2");
        a.corrupt_constant(2, 3, 4, ratio(1, 1));
        assert!(a.check_antisymmetry().is_err());
    }
}
