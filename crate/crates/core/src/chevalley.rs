//! Lie algebras given by structure constants, and the Chevalley realization
//! of a complex semisimple algebra from its root system.
//!
//! Elements are coefficient vectors over the Gaussian rationals. For a
//! [`ChevalleyAlgebra`] the basis is `h_1..h_r` (simple coroots) followed by
//! one `e_α` per root in the root system's ordering.

use std::collections::HashMap;
use std::ops::Deref;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rootsys::{RootSubset, RootSystem};
use crate::scalar::{Field, Gaussian, Rational};

pub type Element = Vec<Gaussian>;

/// A subalgebra is stored as its canonical echelon subspace.
pub type Subalgebra = Subspace<Gaussian>;

/// A finite-dimensional Lie algebra with rational structure constants.
#[derive(Debug, Clone)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `consts[i][j]` lists `(k, c)` with `[b_i, b_j] = Σ c b_k`.
    consts: Vec<Vec<Vec<(usize, Rational)>>>,
    killing: Matrix<Rational>,
}

impl LieAlgebra {
    pub fn from_structure_constants(
        labels: Vec<String>,
        consts: Vec<Vec<Vec<(usize, Rational)>>>,
    ) -> Self {
        let n = labels.len();
        assert_eq!(consts.len(), n);
        let mut alg = LieAlgebra { labels, consts, killing: Matrix::zeros(0, 0) };
        alg.killing = alg.compute_killing();
        alg
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.consts[i][j]
    }

    pub fn unit(&self, i: usize) -> Element {
        let mut v = vec![Gaussian::zero(); self.dim()];
        v[i] = Gaussian::one();
        v
    }

    pub fn zero_element(&self) -> Element {
        vec![Gaussian::zero(); self.dim()]
    }

    pub fn bracket(&self, x: &[Gaussian], y: &[Gaussian]) -> Element {
        assert!(x.len() == self.dim() && y.len() == self.dim(), "dimension mismatch");
        let mut out = self.zero_element();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.consts[i][j].is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.consts[i][j] {
                    out[*k] += &(&c * &Gaussian::real(s.clone()));
                }
            }
        }
        out
    }

    pub fn checked_bracket(&self, x: &[Gaussian], y: &[Gaussian]) -> Result<Element> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// Matrix of `ad_x`, acting on column vectors.
    pub fn ad(&self, x: &[Gaussian]) -> Matrix<Gaussian> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, s) in &self.consts[i][j] {
                    m[(*k, j)] += &(xi * &Gaussian::real(s.clone()));
                }
            }
        }
        m
    }

    fn ad_basis(&self, i: usize) -> Matrix<Rational> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, s) in &self.consts[i][j] {
                m[(*k, j)] = s.clone();
            }
        }
        m
    }

    fn compute_killing(&self) -> Matrix<Rational> {
        let n = self.dim();
        let ads: Vec<Matrix<Rational>> = (0..n).map(|i| self.ad_basis(i)).collect();
        let rows: Vec<Vec<Rational>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| ads[i].mul_mat(&ads[j]).trace()).collect())
            .collect();
        Matrix::from_rows(n, rows)
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_matrix(&self) -> &Matrix<Rational> {
        &self.killing
    }

    /// `κ(x, y) = tr(ad_x ad_y)`.
    pub fn killing(&self, x: &[Gaussian], y: &[Gaussian]) -> Gaussian {
        let mut acc = Gaussian::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let k = &self.killing[(i, j)];
                if yj.is_zero() || k.is_zero() {
                    continue;
                }
                acc += &(&(xi * yj) * &Gaussian::real(k.clone()));
            }
        }
        acc
    }

    pub fn is_subalgebra(&self, v: &Subspace<Gaussian>) -> bool {
        let b = v.basis_vecs();
        for (a, x) in b.iter().enumerate() {
            for y in &b[a + 1..] {
                if !v.contains(&self.bracket(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Joint kernel of `ad_s` over the given elements.
    pub fn centralizer(&self, elems: &[Element]) -> Subalgebra {
        let n = self.dim();
        if elems.is_empty() {
            return Subspace::full(n);
        }
        let mut rows = Vec::with_capacity(n * elems.len());
        for s in elems {
            rows.extend(self.ad(s).row_vecs());
        }
        Subspace::span(n, Matrix::from_rows(n, rows).kernel())
    }

    /// The smallest subalgebra containing `gens`.
    pub fn generated_subalgebra(&self, gens: &[Element]) -> Subalgebra {
        let n = self.dim();
        let mut span = Subspace::span(n, gens.to_vec());
        let mut frontier = span.basis_vecs();
        while !frontier.is_empty() {
            let basis = span.basis_vecs();
            let mut next = Vec::new();
            for x in &frontier {
                for y in &basis {
                    let z = self.bracket(x, y);
                    if !span.contains(&z) {
                        let mut rows = span.basis_vecs();
                        rows.push(z.clone());
                        span = Subspace::span(n, rows);
                        next.push(z);
                    }
                }
            }
            frontier = next;
        }
        span
    }

    /// Number of basis triples on which the Jacobi identity fails.
    pub fn jacobi_failures(&self) -> usize {
        let n = self.dim();
        let units: Vec<Element> = (0..n).map(|i| self.unit(i)).collect();
        (0..n)
            .into_par_iter()
            .map(|i| {
                let mut bad = 0;
                for j in i + 1..n {
                    for k in j + 1..n {
                        let (x, y, z) = (&units[i], &units[j], &units[k]);
                        let a = self.bracket(x, &self.bracket(y, z));
                        let b = self.bracket(y, &self.bracket(z, x));
                        let c = self.bracket(z, &self.bracket(x, y));
                        if a.iter().zip(&b).zip(&c).any(|((a, b), c)| !(a + b + c.clone()).is_zero()) {
                            bad += 1;
                        }
                    }
                }
                bad
            })
            .sum()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = &self.consts[i][j];
                let mut b: Vec<(usize, Rational)> =
                    self.consts[j][i].iter().map(|(k, c)| (*k, -c.clone())).collect();
                b.sort_by_key(|p| p.0);
                let mut a = a.clone();
                a.sort_by_key(|p| p.0);
                a == b
            })
        })
    }

    /// `κ([x,y],z) = κ(x,[y,z])` on all basis triples.
    pub fn killing_is_invariant(&self) -> bool {
        let n = self.dim();
        let units: Vec<Element> = (0..n).map(|i| self.unit(i)).collect();
        (0..n).into_par_iter().all(|i| {
            (0..n).all(|j| {
                let xy = self.bracket(&units[i], &units[j]);
                (0..n).all(|k| {
                    let yz = self.bracket(&units[j], &units[k]);
                    self.killing(&xy, &units[k]) == self.killing(&units[i], &yz)
                })
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjugationKind {
    Compact,
    Split,
    MatrixEntrywise,
}

impl std::str::FromStr for ConjugationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(ConjugationKind::Compact),
            "split" => Ok(ConjugationKind::Split),
            "matrix_entrywise" | "entrywise" => Ok(ConjugationKind::MatrixEntrywise),
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }
}

/// An antilinear map `v ↦ S·conj(v)`.
#[derive(Debug, Clone)]
pub struct Conjugation {
    pub kind: ConjugationKind,
    matrix: Matrix<Gaussian>,
    root_action: Option<Vec<usize>>,
}

impl Conjugation {
    /// Entrywise conjugation of coefficients in a real basis.
    pub fn entrywise(kind: ConjugationKind, dim: usize) -> Self {
        Conjugation { kind, matrix: Matrix::identity(dim), root_action: None }
    }

    pub fn matrix(&self) -> &Matrix<Gaussian> {
        &self.matrix
    }

    /// Induced involution on root indices, when the map permutes root spaces.
    pub fn root_action(&self) -> Option<&[usize]> {
        self.root_action.as_deref()
    }

    pub fn apply(&self, v: &[Gaussian]) -> Element {
        let c: Vec<Gaussian> = v.iter().map(Gaussian::conj).collect();
        self.matrix.mul_vec(&c)
    }

    pub fn apply_subspace(&self, v: &Subspace<Gaussian>) -> Subspace<Gaussian> {
        let rows = v.basis_vecs().iter().map(|r| self.apply(r)).collect();
        Subspace::span(v.ambient(), rows)
    }

    pub fn is_involution(&self) -> bool {
        let n = self.matrix.rows();
        (0..n).all(|i| {
            let mut e = vec![Gaussian::zero(); n];
            e[i] = Gaussian::i() + Gaussian::one();
            self.apply(&self.apply(&e)) == e
        })
    }

    /// `σ[x,y] = [σx,σy]` on all basis pairs.
    pub fn is_automorphism_of(&self, alg: &LieAlgebra) -> bool {
        let n = alg.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (alg.unit(i), alg.unit(j));
                self.apply(&alg.bracket(&x, &y)) == alg.bracket(&self.apply(&x), &self.apply(&y))
            })
        })
    }
}

/// Which part of the Cartan subalgebra a root-subset subalgebra contains.
#[derive(Debug, Clone)]
pub enum CartanPart {
    Full,
    None,
    /// Span of the coroots of the given roots.
    Coroots(RootSubset),
    /// An explicit subspace of `h`, in simple-coroot coordinates.
    Span(Vec<Vec<Gaussian>>),
}

/// A complex semisimple Lie algebra in a Chevalley basis.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    lie: LieAlgebra,
    n: HashMap<(usize, usize), i64>,
}

impl Deref for ChevalleyAlgebra {
    type Target = LieAlgebra;
    fn deref(&self) -> &LieAlgebra {
        &self.lie
    }
}

impl ChevalleyAlgebra {
    pub fn build(rs: &RootSystem) -> Self {
        let n = structure_constants(rs);
        Self::from_constants(rs, n)
    }

    /// Rebuilds the algebra from a previously computed table `N_{r,s}`.
    pub fn from_constants(rs: &RootSystem, n: HashMap<(usize, usize), i64>) -> Self {
        let r = rs.rank();
        let dim = r + rs.len();
        let mut labels: Vec<String> = (0..r).map(|i| format!("h{}", i + 1)).collect();
        labels.extend((0..rs.len()).map(|i| format!("e[{}]", rs.describe_root(i))));
        let mut consts = vec![vec![Vec::new(); dim]; dim];
        for i in 0..r {
            for s in 0..rs.len() {
                let v = rs.root_on_coroots(s)[i];
                if v != 0 {
                    consts[i][r + s] = vec![(r + s, Rational::from_int(v))];
                    consts[r + s][i] = vec![(r + s, Rational::from_int(-v))];
                }
            }
        }
        for a in 0..rs.len() {
            let c = rs.coroot(a);
            consts[r + a][r + rs.neg(a)] = c
                .vector
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x.clone()))
                .collect();
            for b in 0..rs.len() {
                if let Some(&v) = n.get(&(a, b)) {
                    let s = rs.sum(a, b).expect("constant only for root sums");
                    consts[r + a][r + b] = vec![(r + s, Rational::from_int(v))];
                }
            }
        }
        let lie = LieAlgebra::from_structure_constants(labels, consts);
        ChevalleyAlgebra { rs: rs.clone(), lie, n }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Basis index of `e_α`.
    pub fn e_index(&self, root: usize) -> usize {
        self.rs.rank() + root
    }

    /// Root index of a basis vector, if it is a root vector.
    pub fn root_of(&self, basis: usize) -> Option<usize> {
        basis.checked_sub(self.rs.rank())
    }

    pub fn e(&self, root: usize) -> Element {
        self.unit(self.e_index(root))
    }

    pub fn h(&self, i: usize) -> Element {
        self.unit(i)
    }

    /// `N_{r,s}` with `[e_r, e_s] = N_{r,s} e_{r+s}`; zero when `r+s ∉ Δ`.
    pub fn structure_constant(&self, r: usize, s: usize) -> i64 {
        self.n.get(&(r, s)).copied().unwrap_or(0)
    }

    pub fn structure_constants(&self) -> &HashMap<(usize, usize), i64> {
        &self.n
    }

    /// The coroot `α̌` as an element of `h`.
    pub fn coroot_element(&self, root: usize) -> Element {
        let mut v = self.zero_element();
        for (k, x) in self.rs.coroot(root).vector.into_iter().enumerate() {
            v[k] = Gaussian::real(x);
        }
        v
    }

    pub fn conjugation(&self, kind: ConjugationKind) -> Result<Conjugation> {
        let r = self.rs.rank();
        let dim = self.dim();
        match kind {
            ConjugationKind::Split => Ok(Conjugation {
                kind,
                matrix: Matrix::identity(dim),
                root_action: Some((0..self.rs.len()).collect()),
            }),
            ConjugationKind::Compact => {
                let mut m = Matrix::zeros(dim, dim);
                for i in 0..r {
                    m[(i, i)] = -Gaussian::one();
                }
                for a in 0..self.rs.len() {
                    m[(r + self.rs.neg(a), r + a)] = -Gaussian::one();
                }
                let action = (0..self.rs.len()).map(|a| self.rs.neg(a)).collect();
                Ok(Conjugation { kind, matrix: m, root_action: Some(action) })
            }
            ConjugationKind::MatrixEntrywise => Err(Error::UnsupportedKind(
                "matrix_entrywise applies to matrix algebras only".into(),
            )),
        }
    }

    /// `X_α = e_α` for positive α and `X_{−α} = σ(X_α)` under the compact form.
    pub fn x_vector(&self, root: usize) -> Element {
        let sign = if self.rs.is_positive(root) { 1 } else { -1 };
        let mut v = self.zero_element();
        v[self.e_index(root)] = Gaussian::int(sign, 0);
        v
    }

    /// The dual covector `X*_α`, in the basis dual to the Chevalley basis.
    pub fn x_dual(&self, root: usize) -> Element {
        // X_α = ±e_α, so X*_α = ±e*_α with the same sign.
        self.x_vector(root)
    }

    /// `c` with `[X_α, σ(X_α)] = c·α̌` under the compact form.
    pub fn compact_u_coefficient(&self, root: usize) -> Result<Gaussian> {
        let sigma = self.conjugation(ConjugationKind::Compact)?;
        let x = self.x_vector(root);
        let u = self.bracket(&x, &sigma.apply(&x));
        let c = self.coroot_element(root);
        let k = c.iter().position(|v| !v.is_zero()).expect("nonzero coroot");
        let coef = &u[k] / &c[k];
        debug_assert!(u.iter().zip(&c).all(|(a, b)| *a == &coef * b));
        Ok(coef)
    }

    pub fn cartan_subspace(&self) -> Subalgebra {
        Subspace::coordinate(self.dim(), 0..self.rs.rank())
    }

    /// The subspace `cartan ⊕ ⊕_{α∈A} g_α`. With `certify`, checks that
    /// `A` is closed and the result is a subalgebra.
    pub fn subalgebra_from_subset(
        &self,
        a: RootSubset,
        cartan: &CartanPart,
        certify: bool,
    ) -> Result<Subalgebra> {
        let dim = self.dim();
        let r = self.rs.rank();
        let mut rows: Vec<Element> = a.indices().map(|i| self.e(i)).collect();
        match cartan {
            CartanPart::Full => rows.extend((0..r).map(|i| self.h(i))),
            CartanPart::None => {}
            CartanPart::Coroots(s) => rows.extend(s.indices().map(|i| self.coroot_element(i))),
            CartanPart::Span(vs) => {
                for v in vs {
                    if v.len() != r {
                        return Err(Error::DimensionMismatch { expected: r, found: v.len() });
                    }
                    let mut w = self.zero_element();
                    w[..r].clone_from_slice(v);
                    rows.push(w);
                }
            }
        }
        let sub = Subspace::span(dim, rows);
        if certify {
            if !self.rs.is_closed(a) {
                return Err(Error::NotClosed);
            }
            if !self.is_subalgebra(&sub) {
                return Err(Error::NotSubalgebra);
            }
        }
        Ok(sub)
    }
}

/// Computes `N_{r,s}` for all root pairs with `r + s ∈ Δ`, with signs fixed
/// by setting `N = +(p+1)` on extraspecial pairs.
pub fn structure_constants(rs: &RootSystem) -> HashMap<(usize, usize), i64> {
    let mut solver = Solver { rs, memo: HashMap::new(), extraspecial: HashMap::new() };
    for r in 0..rs.num_positive() {
        for s in r + 1..rs.num_positive() {
            if let Some(x) = rs.sum(r, s) {
                solver.extraspecial.entry(x).or_insert((r, s));
            }
        }
    }
    let mut out = HashMap::new();
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.sum(a, b).is_some() {
                out.insert((a, b), solver.n(a, b));
            }
        }
    }
    out
}

struct Solver<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(usize, usize), i64>,
    /// Sum of a positive pair ↦ its extraspecial pair `(r, s)`, `r` least.
    extraspecial: HashMap<usize, (usize, usize)>,
}

impl Solver<'_> {
    fn len2(&self, a: usize) -> Rational {
        self.rs.inner(a, a)
    }

    /// Largest `p` with `s − p·r` a root.
    fn p(&self, r: usize, s: usize) -> i64 {
        let nr = self.rs.neg(r);
        let mut p = 0;
        let mut cur = s;
        while let Some(next) = self.rs.sum(cur, nr) {
            p += 1;
            cur = next;
        }
        p
    }

    fn n(&mut self, a: usize, b: usize) -> i64 {
        let Some(sum) = self.rs.sum(a, b) else { return 0 };
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v;
        }
        let rs = self.rs;
        let (pa, pb) = (rs.is_positive(a), rs.is_positive(b));
        let v = if pa && pb {
            if a > b {
                -self.n(b, a)
            } else {
                self.positive_pair(a, b, sum)
            }
        } else if !pa && !pb {
            -self.n(rs.neg(a), rs.neg(b))
        } else {
            // a + b + t = 0 with N_{a,b}/(t,t) = N_{b,t}/(a,a) = N_{t,a}/(b,b);
            // rewrite through the same-sign pair among (a, b, t).
            let t = rs.neg(sum);
            let lt = self.len2(t);
            let q = if rs.is_positive(t) == pb {
                &(&lt / &self.len2(a)) * &Rational::from_int(self.n(b, t))
            } else {
                &(&lt / &self.len2(b)) * &Rational::from_int(self.n(t, a))
            };
            q.to_i64().expect("structure constants are integers")
        };
        self.memo.insert((a, b), v);
        v
    }

    fn positive_pair(&mut self, r: usize, s: usize, xi: usize) -> i64 {
        let (a, b) = self.extraspecial[&xi];
        if (a, b) == (r, s) {
            return self.p(r, s) + 1;
        }
        let rs = self.rs;
        let (na, nb) = (rs.neg(a), rs.neg(b));
        let mut acc = Rational::from_int(0);
        if let Some(sa) = rs.sum(s, na) {
            let t = Rational::from_int(self.n(s, na) * self.n(r, nb));
            acc = &acc - &(&t / &self.len2(sa));
        }
        if let Some(ra) = rs.sum(r, na) {
            let t = Rational::from_int(self.n(na, r) * self.n(s, nb));
            acc = &acc - &(&t / &self.len2(ra));
        }
        let v = &(&self.len2(xi) * &acc) / &Rational::from_int(self.n(na, nb));
        v.to_i64().expect("structure constants are integers")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(label: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::build(&RootSystem::build(label).unwrap())
    }

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::int(re, im)
    }

    #[test]
    fn sl2_relations() {
        let a = alg("A1");
        assert_eq!(a.dim(), 3);
        let (h, e, f) = (a.h(0), a.e(0), a.e(1));
        assert_eq!(a.bracket(&e, &f), h);
        let two_e: Element = e.iter().map(|x| x * &g(2, 0)).collect();
        assert_eq!(a.bracket(&h, &e), two_e);
        let m2f: Element = f.iter().map(|x| x * &g(-2, 0)).collect();
        assert_eq!(a.bracket(&h, &f), m2f);
        assert!(a.bracket(&h, &h).iter().all(Gaussian::is_zero));
    }

    #[test]
    fn sl2_killing() {
        let a = alg("A1");
        let (h, e, f) = (a.h(0), a.e(0), a.e(1));
        assert_eq!(a.killing(&h, &h), g(8, 0));
        assert_eq!(a.killing(&e, &e), g(0, 0));
        assert_eq!(a.killing(&e, &f), g(4, 0));
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let a = alg(label);
            assert_eq!(a.jacobi_failures(), 0, "{label}");
            assert!(a.is_antisymmetric(), "{label}");
        }
    }

    #[test]
    fn a2_dimension_and_triples() {
        let a = alg("A2");
        assert_eq!(a.dim(), 8);
        assert_eq!(a.structure_constant(0, 1).abs(), 1);
    }

    #[test]
    fn b2_constants() {
        let a = alg("B2");
        assert_eq!(a.dim(), 10);
        for &v in a.structure_constants().values() {
            assert!([1, 2].contains(&v.abs()), "{v}");
        }
        assert!(a.structure_constants().values().any(|v| v.abs() == 2));
    }

    #[test]
    fn g2_constants_up_to_three() {
        let a = alg("G2");
        let max = a.structure_constants().values().map(|v| v.abs()).max().unwrap();
        assert_eq!(max, 3);
    }

    #[test]
    fn negated_pairs_flip_sign() {
        for label in ["A3", "B3", "G2"] {
            let a = alg(label);
            let rs = a.root_system();
            for (&(r, s), &v) in a.structure_constants() {
                assert_eq!(a.structure_constant(rs.neg(r), rs.neg(s)), -v);
            }
        }
    }

    #[test]
    fn coroot_bracket_and_weights() {
        let a = alg("B2");
        let rs = a.root_system();
        for s in 0..rs.len() {
            let br = a.bracket(&a.e(s), &a.e(rs.neg(s)));
            assert_eq!(br, a.coroot_element(s));
            for i in 0..rs.rank() {
                let w = rs.root_on_coroots(s)[i];
                let want: Element = a.e(s).iter().map(|x| x * &g(w, 0)).collect();
                assert_eq!(a.bracket(&a.h(i), &a.e(s)), want);
            }
        }
    }

    #[test]
    fn conjugations() {
        let a = alg("A1");
        let c = a.conjugation(ConjugationKind::Compact).unwrap();
        let neg_f: Element = a.e(1).iter().map(|x| -x.clone()).collect();
        assert_eq!(c.apply(&a.e(0)), neg_f);
        let neg_h: Element = a.h(0).iter().map(|x| -x.clone()).collect();
        assert_eq!(c.apply(&a.h(0)), neg_h);
        let s = a.conjugation(ConjugationKind::Split).unwrap();
        assert_eq!(s.apply(&a.e(0)), a.e(0));
        assert_eq!(s.apply(&a.h(0)), a.h(0));
        let ie: Element = a.e(0).iter().map(|x| x * &g(0, 1)).collect();
        let mie: Element = a.e(0).iter().map(|x| x * &g(0, -1)).collect();
        assert_eq!(s.apply(&ie), mie);
        assert!(a.conjugation(ConjugationKind::MatrixEntrywise).is_err());
        for label in ["A2", "B2", "G2"] {
            let a = alg(label);
            for kind in [ConjugationKind::Compact, ConjugationKind::Split] {
                let c = a.conjugation(kind).unwrap();
                assert!(c.is_involution());
                assert!(c.is_automorphism_of(&a));
            }
        }
    }

    #[test]
    fn x_basis() {
        let a = alg("A2");
        let rs = a.root_system();
        let sigma = a.conjugation(ConjugationKind::Compact).unwrap();
        for r in 0..rs.num_positive() {
            let x = a.x_vector(r);
            let y = a.x_vector(rs.neg(r));
            assert_eq!(y, sigma.apply(&x));
            let want: Element = a.coroot_element(r).iter().map(|v| -v.clone()).collect();
            assert_eq!(a.bracket(&x, &y), want);
            assert_eq!(a.compact_u_coefficient(r).unwrap(), g(-1, 0));
        }
        for r in 0..rs.len() {
            for s in 0..rs.len() {
                let d = crate::linalg::dot(&a.x_dual(r), &a.x_vector(s));
                assert_eq!(d, g((r == s) as i64, 0));
            }
        }
    }

    #[test]
    fn subalgebras_from_subsets() {
        let a1 = alg("A1");
        let b = a1.subalgebra_from_subset(RootSubset::from_indices([0]), &CartanPart::Full, true).unwrap();
        assert_eq!(b.dim(), 2);
        let a2 = alg("A2");
        let rs = a2.root_system();
        let all = a2.subalgebra_from_subset(rs.all(), &CartanPart::Full, true).unwrap();
        assert_eq!(all.dim(), 8);
        let bad = RootSubset::from_indices([0, 1]);
        assert!(matches!(
            a2.subalgebra_from_subset(bad, &CartanPart::Full, true),
            Err(Error::NotClosed)
        ));
        let raw = a2.subalgebra_from_subset(bad, &CartanPart::Full, false).unwrap();
        assert!(!a2.is_subalgebra(&raw));
    }

    #[test]
    fn sigma_maps_subset_subalgebras() {
        let a = alg("A2");
        let rs = a.root_system();
        let sigma = a.conjugation(ConjugationKind::Compact).unwrap();
        for s in rs.enumerate_closed_subsets(RootSubset::EMPTY, 1 << 24).unwrap() {
            let e = a.subalgebra_from_subset(s, &CartanPart::Full, false).unwrap();
            let img = a.subalgebra_from_subset(rs.negate(s), &CartanPart::Full, false).unwrap();
            assert_eq!(sigma.apply_subspace(&e), img);
        }
    }

    #[test]
    fn centralizers() {
        let a = alg("A1");
        assert_eq!(a.centralizer(&[a.h(0)]), a.cartan_subspace());
        assert_eq!(a.centralizer(&[a.e(0)]), Subspace::span(3, vec![a.e(0)]));
    }

    #[test]
    fn centralizer_matches_naive_kernel() {
        for label in ["A1", "A2"] {
            let a = alg(label);
            let n = a.dim();
            for i in 0..n {
                let z = a.centralizer(&[a.unit(i)]);
                // naive oracle: solve [b_i, x] = 0 coordinatewise
                let mut rows = vec![vec![Gaussian::zero(); n]; n];
                for j in 0..n {
                    for (k, c) in a.basis_bracket(i, j) {
                        rows[*k][j] = Gaussian::real(c.clone());
                    }
                }
                let naive = Subspace::span(n, Matrix::from_rows(n, rows).kernel());
                assert_eq!(z, naive);
            }
        }
    }

    #[test]
    fn generated_subalgebras() {
        let a = alg("A1");
        assert_eq!(a.generated_subalgebra(&[a.e(0), a.e(1)]).dim(), 3);
        assert_eq!(a.generated_subalgebra(&[a.h(0)]), a.cartan_subspace());
        let gen = a.generated_subalgebra(&[a.e(0)]);
        assert_eq!(a.generated_subalgebra(&gen.basis_vecs()), gen);
    }

    #[test]
    fn killing_invariance_and_cartan_nondegenerate() {
        for label in ["A2", "B2", "G2"] {
            let a = alg(label);
            assert!(a.killing_is_invariant(), "{label}");
            let r = a.rank();
            let rows: Vec<Vec<Rational>> =
                (0..r).map(|i| (0..r).map(|j| a.killing_matrix()[(i, j)].clone()).collect()).collect();
            assert_eq!(Matrix::from_rows(r, rows).rank(), r);
        }
    }
}
