//! Linear Dirac structures in the double `g ⊕ g*`.
//!
//! A vector of the double has length `2n`: the `g` coordinates in the
//! algebra's basis, then the `g*` coordinates in the dual basis.

use serde::Serialize;

use crate::chevalley::{Conjugation, Element, LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Gaussian};

/// A maximal isotropic subspace of the double, in canonical echelon form.
pub type LinearDirac = Subspace<Gaussian>;

pub fn split(u: &[Gaussian]) -> (&[Gaussian], &[Gaussian]) {
    u.split_at(u.len() / 2)
}

pub fn join(x: &[Gaussian], xi: &[Gaussian]) -> Element {
    let mut v = x.to_vec();
    v.extend_from_slice(xi);
    v
}

/// `<X + ξ, Y + η> = ξ(Y) + η(X)`.
pub fn pairing(u: &[Gaussian], v: &[Gaussian]) -> Result<Gaussian> {
    if u.len() != v.len() || u.len() % 2 != 0 {
        return Err(Error::DimensionMismatch { expected: u.len(), found: v.len() });
    }
    let (x, xi) = split(u);
    let (y, eta) = split(v);
    let mut acc = Gaussian::zero();
    for k in 0..x.len() {
        acc += &(&xi[k] * &y[k]);
        acc += &(&eta[k] * &x[k]);
    }
    Ok(acc)
}

/// `(ad*_X η)(Z) = −η([X, Z])`.
pub fn coadjoint(alg: &LieAlgebra, x: &[Gaussian], eta: &[Gaussian]) -> Element {
    let a = alg.ad(x);
    (0..alg.dim())
        .map(|k| {
            let mut s = Gaussian::zero();
            for (m, e) in eta.iter().enumerate() {
                if !e.is_zero() && !a[(m, k)].is_zero() {
                    s += &(e * &a[(m, k)]);
                }
            }
            -s
        })
        .collect()
}

/// `[X+ξ, Y+η] = [X,Y] + ad*_X η − ad*_Y ξ`.
pub fn double_bracket(alg: &LieAlgebra, u: &[Gaussian], v: &[Gaussian]) -> Element {
    let (x, xi) = split(u);
    let (y, eta) = split(v);
    let top = alg.bracket(x, y);
    let a = coadjoint(alg, x, eta);
    let b = coadjoint(alg, y, xi);
    let bottom: Vec<Gaussian> = a.iter().zip(&b).map(|(p, q)| p - q).collect();
    join(&top, &bottom)
}

/// `(a ∧ b)(X, Y) = a(X) b(Y) − a(Y) b(X)` as a Gram matrix on the basis.
pub fn wedge(a: &[Gaussian], b: &[Gaussian]) -> Matrix<Gaussian> {
    let n = a.len();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
        }
    }
    m
}

/// The 2-form `(X, Y) ↦ φ([X, Y])` on all of `g`.
pub fn coboundary(alg: &LieAlgebra, phi: &[Gaussian]) -> Matrix<Gaussian> {
    let n = alg.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Gaussian::zero();
            for (k, c) in alg.basis_bracket(i, j) {
                s += &(&phi[*k] * &Gaussian::real(c.clone()));
            }
            m[(i, j)] = s;
        }
    }
    m
}

fn bilinear(m: &Matrix<Gaussian>, x: &[Gaussian], y: &[Gaussian]) -> Gaussian {
    let mut acc = Gaussian::zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() || m[(i, j)].is_zero() {
                continue;
            }
            acc += &(&(xi * yj) * &m[(i, j)]);
        }
    }
    acc
}

/// A 2-form on a subspace `E`, stored on `E`'s echelon basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoForm {
    e: Subalgebra,
    matrix: Matrix<Gaussian>,
}

impl TwoForm {
    pub fn zero(e: Subalgebra) -> Self {
        let k = e.dim();
        TwoForm { e, matrix: Matrix::zeros(k, k) }
    }

    /// Takes a Gram matrix on `E`'s echelon basis; it must be antisymmetric.
    pub fn from_matrix(e: Subalgebra, matrix: Matrix<Gaussian>) -> Result<Self> {
        let k = e.dim();
        if matrix.rows() != k || matrix.cols() != k {
            return Err(Error::DimensionMismatch { expected: k, found: matrix.rows() });
        }
        for i in 0..k {
            for j in 0..k {
                if matrix[(i, j)] != -matrix[(j, i)].clone() {
                    return Err(Error::InvalidInput("2-form is not antisymmetric".into()));
                }
            }
        }
        Ok(TwoForm { e, matrix })
    }

    /// Restricts a form given on the basis of the ambient algebra.
    pub fn restrict(e: Subalgebra, full: &Matrix<Gaussian>) -> Self {
        let b = e.basis_vecs();
        let k = b.len();
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = bilinear(full, &b[i], &b[j]);
            }
        }
        TwoForm { e, matrix: m }
    }

    /// `ε = φ∘[,]` restricted to `E`.
    pub fn from_functional(alg: &LieAlgebra, e: Subalgebra, phi: &[Gaussian]) -> Self {
        Self::restrict(e, &coboundary(alg, phi))
    }

    pub fn subspace(&self) -> &Subalgebra {
        &self.e
    }

    pub fn matrix(&self) -> &Matrix<Gaussian> {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `ε(x, y)` for `x, y ∈ E`.
    pub fn eval(&self, x: &[Gaussian], y: &[Gaussian]) -> Gaussian {
        let cx = self.e.coords(x).expect("argument lies in E");
        let cy = self.e.coords(y).expect("argument lies in E");
        bilinear(&self.matrix, &cx, &cy)
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        TwoForm { e: self.e.clone(), matrix: self.matrix.map(|v| v * c) }
    }

    pub fn add(&self, other: &TwoForm) -> Result<Self> {
        if self.e != other.e {
            return Err(Error::InvalidInput("2-forms live on different subspaces".into()));
        }
        let k = self.e.dim();
        let mut m = self.matrix.clone();
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = &m[(i, j)] + &other.matrix[(i, j)];
            }
        }
        Ok(TwoForm { e: self.e.clone(), matrix: m })
    }

    /// `ε̄(X, Y) = conj(ε(σX, σY))`, a form on `σ(E)`.
    pub fn conjugate(&self, sigma: &Conjugation) -> TwoForm {
        let e_bar = sigma.apply_subspace(&self.e);
        let b = e_bar.basis_vecs();
        let k = b.len();
        let images: Vec<Element> = b.iter().map(|v| sigma.apply(v)).collect();
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self.eval(&images[i], &images[j]).conj();
            }
        }
        TwoForm { e: e_bar, matrix: m }
    }

    /// `{X ∈ E : ε(X, ·) = 0 on E}`.
    pub fn sharp_kernel(&self) -> Subspace<Gaussian> {
        let coeffs = self.matrix.kernel();
        let vecs = coeffs.iter().map(|c| self.e.combine(c)).collect();
        Subspace::span(self.e.ambient(), vecs)
    }

    /// True iff `ι_X ε = 0` on `E` for every `X` in `k`.
    pub fn annihilates(&self, k: &Subspace<Gaussian>) -> bool {
        let b = self.e.basis_vecs();
        k.basis_vecs().iter().all(|x| b.iter().all(|y| self.eval(x, y).is_zero()))
    }

    /// Values of `d_E ε` on the basis triples `i < j < l` of `E`.
    pub fn d_e(&self, alg: &LieAlgebra) -> Result<Vec<Gaussian>> {
        if !alg.is_subalgebra(&self.e) {
            return Err(Error::NotSubalgebra);
        }
        let b = self.e.basis_vecs();
        let k = b.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    let (x, y, z) = (&b[i], &b[j], &b[l]);
                    let v = self.eval(x, &alg.bracket(y, z))
                        + self.eval(y, &alg.bracket(z, x))
                        + self.eval(z, &alg.bracket(x, y));
                    out.push(v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_cocycle(&self, alg: &LieAlgebra) -> Result<bool> {
        Ok(self.d_e(alg)?.iter().all(Gaussian::is_zero))
    }
}

/// A subalgebra `E` with a 2-form on it and an isotropy subalgebra `k`.
#[derive(Debug, Clone)]
pub struct DiracPair {
    pub eps: TwoForm,
    pub k: Subalgebra,
}

impl DiracPair {
    pub fn new(eps: TwoForm, k: Subalgebra) -> Self {
        DiracPair { eps, k }
    }

    pub fn e(&self) -> &Subalgebra {
        self.eps.subspace()
    }
}

/// `L(E, ε) = {X + ξ : X ∈ E, ξ|_E = ι_X ε}`.
pub fn make_l(eps: &TwoForm) -> LinearDirac {
    let e = eps.subspace();
    let n = e.ambient();
    let pivots = e.pivots();
    let mut rows = Vec::with_capacity(n);
    for (i, x) in e.basis_vecs().into_iter().enumerate() {
        let mut xi = vec![Gaussian::zero(); n];
        for (j, &p) in pivots.iter().enumerate() {
            xi[p] = eps.matrix()[(i, j)].clone();
        }
        rows.push(join(&x, &xi));
    }
    let zero = vec![Gaussian::zero(); n];
    for a in e.annihilator().basis_vecs() {
        rows.push(join(&zero, &a));
    }
    Subspace::span(2 * n, rows)
}

pub fn is_isotropic(l: &Subspace<Gaussian>) -> bool {
    let b = l.basis_vecs();
    b.iter().enumerate().all(|(i, u)| b[i..].iter().all(|v| pairing(u, v).unwrap().is_zero()))
}

pub fn is_maximal_isotropic(l: &Subspace<Gaussian>) -> bool {
    2 * l.dim() == l.ambient() && is_isotropic(l)
}

pub fn is_double_subalgebra(alg: &LieAlgebra, l: &Subspace<Gaussian>) -> bool {
    let b = l.basis_vecs();
    for (i, u) in b.iter().enumerate() {
        for v in &b[i + 1..] {
            if !l.contains(&double_bracket(alg, u, v)) {
                return false;
            }
        }
    }
    true
}

/// Applies `σ` to the vector part and `(σ*ξ)(X) = conj(ξ(σX))` to the
/// covector part.
pub fn conj_element(sigma: &Conjugation, u: &[Gaussian]) -> Element {
    let (x, xi) = split(u);
    let s = sigma.matrix();
    let n = x.len();
    let cov: Vec<Gaussian> = (0..n)
        .map(|k| {
            let mut acc = Gaussian::zero();
            for (l, v) in xi.iter().enumerate() {
                if !v.is_zero() && !s[(l, k)].is_zero() {
                    acc += &(&s[(l, k)] * v).conj();
                }
            }
            acc
        })
        .collect();
    join(&sigma.apply(x), &cov)
}

pub fn conj_double(sigma: &Conjugation, l: &Subspace<Gaussian>) -> Subspace<Gaussian> {
    let rows = l.basis_vecs().iter().map(|u| conj_element(sigma, u)).collect();
    Subspace::span(l.ambient(), rows)
}

/// `k ⊕ 0` inside the double.
pub fn lift_vectors(k: &Subspace<Gaussian>) -> Subspace<Gaussian> {
    let n = k.ambient();
    let zero = vec![Gaussian::zero(); n];
    Subspace::span(2 * n, k.basis_vecs().iter().map(|x| join(x, &zero)).collect())
}

/// `L ∩ L̄`.
pub fn gc_defect(sigma: &Conjugation, l: &Subspace<Gaussian>) -> Subspace<Gaussian> {
    l.intersection(&conj_double(sigma, l))
}

/// True iff `L ∩ L̄ = k ⊕ 0`.
pub fn is_gc(sigma: &Conjugation, l: &Subspace<Gaussian>, k: &Subspace<Gaussian>) -> bool {
    gc_defect(sigma, l) == lift_vectors(k)
}

/// `e^B L = {X + ξ + ι_X B : X + ξ ∈ L}`.
pub fn b_transform(l: &Subspace<Gaussian>, b: &Matrix<Gaussian>) -> Subspace<Gaussian> {
    let n = l.ambient() / 2;
    let rows = l
        .basis_vecs()
        .iter()
        .map(|u| {
            let (x, xi) = split(u);
            let cov: Vec<Gaussian> = (0..n)
                .map(|k| {
                    let mut acc = xi[k].clone();
                    for (i, xv) in x.iter().enumerate() {
                        if !xv.is_zero() {
                            acc += &(xv * &b[(i, k)]);
                        }
                    }
                    acc
                })
                .collect();
            join(x, &cov)
        })
        .collect();
    Subspace::span(2 * n, rows)
}

/// Solves for `(X, ξ)` with `phi(X, ξ) ∈ d` and returns the span of
/// `out(X, ξ)`. Both maps are given as matrices on the stacked `(X, ξ)`.
fn transfer(d: &Subspace<Gaussian>, phi: &Matrix<Gaussian>, out: &Matrix<Gaussian>) -> Subspace<Gaussian> {
    let ann = d.annihilator();
    let constraints = if ann.dim() == 0 {
        Matrix::zeros(0, phi.cols())
    } else {
        ann.basis().mul_mat(phi)
    };
    let sols = if constraints.rows() == 0 {
        Matrix::<Gaussian>::identity(phi.cols()).row_vecs()
    } else {
        constraints.kernel()
    };
    Subspace::span(out.rows(), sols.iter().map(|s| out.mul_vec(s)).collect())
}

fn block(top_left: &Matrix<Gaussian>, bottom_right: &Matrix<Gaussian>) -> Matrix<Gaussian> {
    let (r1, c1) = (top_left.rows(), top_left.cols());
    let (r2, c2) = (bottom_right.rows(), bottom_right.cols());
    let mut m = Matrix::zeros(r1 + r2, c1 + c2);
    for i in 0..r1 {
        for j in 0..c1 {
            m[(i, j)] = top_left[(i, j)].clone();
        }
    }
    for i in 0..r2 {
        for j in 0..c2 {
            m[(r1 + i, c1 + j)] = bottom_right[(i, j)].clone();
        }
    }
    m
}

/// `F_⋆D = {FX + ξ : X + F*ξ ∈ D}` for `F : V → W` given as a `dim W × dim V`
/// matrix.
pub fn pushforward(f: &Matrix<Gaussian>, d: &Subspace<Gaussian>) -> Result<Subspace<Gaussian>> {
    let (w, v) = (f.rows(), f.cols());
    if d.ambient() != 2 * v {
        return Err(Error::DimensionMismatch { expected: 2 * v, found: d.ambient() });
    }
    let ft = f.transpose();
    let phi = block(&Matrix::identity(v), &ft);
    let out = block(f, &Matrix::identity(w));
    Ok(transfer(d, &phi, &out))
}

/// `F^⋆D = {X + F*ξ : FX + ξ ∈ D}`.
pub fn pullback(f: &Matrix<Gaussian>, d: &Subspace<Gaussian>) -> Result<Subspace<Gaussian>> {
    let (w, v) = (f.rows(), f.cols());
    if d.ambient() != 2 * w {
        return Err(Error::DimensionMismatch { expected: 2 * w, found: d.ambient() });
    }
    let ft = f.transpose();
    let phi = block(f, &Matrix::identity(w));
    let out = block(&Matrix::identity(v), &ft);
    Ok(transfer(d, &phi, &out))
}

/// The projection `g → g/k`, with `g/k` identified with the span of the
/// coordinate axes that are not pivots of `k`.
pub fn quotient_map(k: &Subspace<Gaussian>) -> Matrix<Gaussian> {
    let n = k.ambient();
    let comp = k.coordinate_complement();
    let mut m = Matrix::zeros(comp.len(), n);
    for j in 0..n {
        let mut e = vec![Gaussian::zero(); n];
        e[j] = Gaussian::one();
        let r = k.reduce(&e);
        for (i, &c) in comp.iter().enumerate() {
            m[(i, j)] = r[c].clone();
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StructureClass {
    Complex,
    Symplectic,
    BTransformOfSymplectic,
    GeneralGC,
    Presymplectic,
    RealDirac,
    NotGC,
}

/// Names the geometric structure `L(E, ε)` defines on `G/K`.
///
/// Among generalized complex pairs the first matching class wins, in the
/// order complex, symplectic, B-transform of symplectic, general. Pairs that
/// are not generalized complex but satisfy `L̄ = L` are real Dirac structures,
/// called presymplectic when `E = g`.
pub fn interpret(alg: &LieAlgebra, pair: &DiracPair, sigma: &Conjugation) -> StructureClass {
    let n = alg.dim();
    let e = pair.e();
    let l = make_l(&pair.eps);
    let full = Subspace::full(n);
    if is_gc(sigma, &l, &pair.k) {
        let e_bar = sigma.apply_subspace(e);
        if pair.eps.is_zero() && e.intersection(&e_bar) == pair.k && e.sum(&e_bar) == full {
            return StructureClass::Complex;
        }
        if *e == full {
            let bar = pair.eps.conjugate(sigma);
            let imaginary = bar.add(&pair.eps).map(|s| s.is_zero()).unwrap_or(false);
            if imaginary && pair.eps.sharp_kernel() == pair.k {
                return StructureClass::Symplectic;
            }
            // Im ε = (ε − ε̄)/2i has the same kernel as ε − ε̄.
            if let Ok(diff) = pair.eps.add(&bar.scale(&-Gaussian::one())) {
                if diff.sharp_kernel() == pair.k {
                    return StructureClass::BTransformOfSymplectic;
                }
            }
        }
        return StructureClass::GeneralGC;
    }
    if conj_double(sigma, &l) == l {
        if *e == full {
            return StructureClass::Presymplectic;
        }
        return StructureClass::RealDirac;
    }
    StructureClass::NotGC
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{CartanPart, ChevalleyAlgebra, ConjugationKind};
    use crate::rootsys::{RootSubset, RootSystem};

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::int(re, im)
    }

    fn sl2() -> ChevalleyAlgebra {
        ChevalleyAlgebra::build(&RootSystem::build("A1").unwrap())
    }

    fn dbl(x: Element, xi: Element) -> Element {
        join(&x, &xi)
    }

    #[test]
    fn pairing_examples() {
        let a = sl2();
        let z = a.zero_element();
        let (e, f) = (a.e(0), a.e(1));
        assert_eq!(pairing(&dbl(e.clone(), z.clone()), &dbl(f.clone(), z.clone())).unwrap(), g(0, 0));
        assert_eq!(pairing(&dbl(e.clone(), z.clone()), &dbl(z.clone(), e.clone())).unwrap(), g(1, 0));
        assert_eq!(pairing(&dbl(e.clone(), f.clone()), &dbl(f, e)).unwrap(), g(2, 0));
        assert!(pairing(&vec![g(1, 0); 2], &vec![g(1, 0); 4]).is_err());
    }

    #[test]
    fn double_bracket_examples() {
        let a = sl2();
        let z = a.zero_element();
        let (h, e, f) = (a.h(0), a.e(0), a.e(1));
        assert_eq!(double_bracket(&a, &dbl(e.clone(), z.clone()), &dbl(f, z.clone())), dbl(h.clone(), z.clone()));
        let want: Element = e.iter().map(|v| v * &g(-2, 0)).collect();
        assert_eq!(double_bracket(&a, &dbl(h, z.clone()), &dbl(z.clone(), e)), dbl(z, want));
    }

    #[test]
    fn pairing_is_ad_invariant_on_basis() {
        let a = ChevalleyAlgebra::build(&RootSystem::build("A2").unwrap());
        let n = 2 * a.dim();
        let unit = |i: usize| {
            let mut v = vec![Gaussian::zero(); n];
            v[i] = Gaussian::one();
            v
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (u, v, w) = (unit(i), unit(j), unit(k));
                    let s = pairing(&double_bracket(&a, &u, &v), &w).unwrap()
                        + pairing(&v, &double_bracket(&a, &u, &w)).unwrap();
                    assert!(s.is_zero());
                }
            }
        }
    }

    #[test]
    fn make_l_examples() {
        let a = sl2();
        let n = a.dim();
        let full = Subspace::full(n);
        let l = make_l(&TwoForm::zero(full.clone()));
        assert_eq!(l, lift_vectors(&full));
        let l0 = make_l(&TwoForm::zero(Subspace::zero(n)));
        let zero = a.zero_element();
        let dual: Vec<Element> = (0..n).map(|i| join(&zero, &a.unit(i))).collect();
        assert_eq!(l0, Subspace::span(2 * n, dual));

        let c = g(2, 3);
        let (xa, xm) = (a.x_vector(0), a.x_vector(1));
        let (da, dm) = (a.x_dual(0), a.x_dual(1));
        let eps = TwoForm::restrict(full.clone(), &wedge(&da, &dm)).scale(&c);
        let l = make_l(&eps);
        let scaled = |v: &Element, s: &Gaussian| -> Element { v.iter().map(|x| x * s).collect() };
        let want = Subspace::span(
            2 * n,
            vec![
                join(&xa, &scaled(&dm, &c)),
                join(&xm, &scaled(&da, &-c.clone())),
                join(&a.h(0), &zero),
            ],
        );
        assert_eq!(l, want);
        assert!(is_maximal_isotropic(&l));
        assert!(is_double_subalgebra(&a, &l));
    }

    #[test]
    fn make_l_is_extension_independent() {
        let a = ChevalleyAlgebra::build(&RootSystem::build("A2").unwrap());
        let n = a.dim();
        let e = a.subalgebra_from_subset(RootSubset::from_indices([0, 1, 2]), &CartanPart::None, true).unwrap();
        let eps = TwoForm::restrict(e.clone(), &wedge(&a.e(0).clone(), &a.e(2)));
        let l = make_l(&eps);
        let ann = e.annihilator().basis_vecs();
        let rows: Vec<Element> = l
            .basis_vecs()
            .into_iter()
            .filter(|r| split(r).0.iter().any(|v| !v.is_zero()))
            .map(|r| {
                let (x, xi) = split(&r);
                let mut xi = xi.to_vec();
                for (k, t) in ann[0].iter().enumerate() {
                    xi[k] += &(t * &g(3, -1));
                }
                join(x, &xi)
            })
            .chain(ann.iter().map(|v| join(&vec![Gaussian::zero(); n], v)))
            .collect();
        assert_eq!(Subspace::span(2 * n, rows), l);
    }

    #[test]
    fn d_e_examples() {
        let a = ChevalleyAlgebra::build(&RootSystem::build("A2").unwrap());
        let heis = a.subalgebra_from_subset(RootSubset::from_indices([0, 1, 2]), &CartanPart::None, true).unwrap();
        let e1 = TwoForm::restrict(heis.clone(), &wedge(&a.e(0), &a.e(1)));
        assert!(e1.is_cocycle(&a).unwrap());
        // Every 2-form on this Heisenberg algebra is closed, since all
        // brackets land in the center.
        let e2 = TwoForm::restrict(heis, &wedge(&a.e(0), &a.e(2)));
        assert!(e2.is_cocycle(&a).unwrap());
        // On the Borel, d(e*_α ∧ e*_β)(h_1, e_α, e_β) = −(α+β)(h_1) = −1.
        let borel = a.subalgebra_from_subset(RootSubset::from_indices([0, 1, 2]), &CartanPart::Full, true).unwrap();
        let e3 = TwoForm::restrict(borel, &wedge(&a.e(0), &a.e(1)));
        assert!(!e3.is_cocycle(&a).unwrap());
        let x = e3.eval(&a.e(0), &a.bracket(&a.e(1), &a.h(0)))
            + e3.eval(&a.e(1), &a.bracket(&a.h(0), &a.e(0)))
            + e3.eval(&a.h(0), &a.bracket(&a.e(0), &a.e(1)));
        assert_eq!(x, g(-1, 0));
        let sl = sl2();
        let full = Subspace::full(3);
        let eps = TwoForm::from_functional(&sl, full.clone(), &sl.h(0));
        assert!(eps.is_cocycle(&sl).unwrap());
        let bad = a.subalgebra_from_subset(RootSubset::from_indices([0, 1]), &CartanPart::Full, false).unwrap();
        assert!(matches!(TwoForm::zero(bad).d_e(&a), Err(Error::NotSubalgebra)));
    }

    #[test]
    fn conjugation_examples() {
        let a = sl2();
        let n = a.dim();
        let sigma = a.conjugation(ConjugationKind::Compact).unwrap();
        let l = make_l(&TwoForm::zero(Subspace::full(n)));
        assert_eq!(conj_double(&sigma, &l), l);
        let bplus = a.subalgebra_from_subset(RootSubset::from_indices([0]), &CartanPart::Full, true).unwrap();
        let bminus = a.subalgebra_from_subset(RootSubset::from_indices([1]), &CartanPart::Full, true).unwrap();
        let lp = make_l(&TwoForm::zero(bplus));
        let lm = make_l(&TwoForm::zero(bminus));
        assert_eq!(conj_double(&sigma, &lp), lm);
        assert_eq!(conj_double(&sigma, &conj_double(&sigma, &lp)), lp);
    }

    #[test]
    fn gc_defect_examples() {
        let a = sl2();
        let n = a.dim();
        let sigma = a.conjugation(ConjugationKind::Compact).unwrap();
        let k = a.cartan_subspace();
        let bplus = a.subalgebra_from_subset(RootSubset::from_indices([0]), &CartanPart::Full, true).unwrap();
        let l = make_l(&TwoForm::zero(bplus));
        assert_eq!(gc_defect(&sigma, &l), lift_vectors(&k));
        let full = Subspace::full(n);
        let form = TwoForm::restrict(full, &wedge(&a.x_dual(0), &a.x_dual(1)));
        let l_im = make_l(&form.scale(&g(0, 1)));
        assert!(gc_defect(&sigma, &l_im).dim() > k.dim());
        let l_re = make_l(&form.scale(&g(1, 1)));
        assert_eq!(gc_defect(&sigma, &l_re), lift_vectors(&k));
    }

    #[test]
    fn b_transform_properties() {
        let a = ChevalleyAlgebra::build(&RootSystem::build("A2").unwrap());
        let n = a.dim();
        let e = a.subalgebra_from_subset(RootSubset::from_indices([0, 3, 1, 2]), &CartanPart::Full, true).unwrap();
        let eps_full = wedge(&a.e(1), &a.e(2));
        let bmat = wedge(&a.e(0), &a.h(1).iter().map(|v| v * &g(1, 2)).collect::<Vec<_>>());
        let l = make_l(&TwoForm::restrict(e.clone(), &eps_full));
        assert_eq!(b_transform(&l, &Matrix::zeros(n, n)), l);
        let mut sum = eps_full.clone();
        for i in 0..n {
            for j in 0..n {
                sum[(i, j)] = &sum[(i, j)] + &bmat[(i, j)];
            }
        }
        assert_eq!(b_transform(&l, &bmat), make_l(&TwoForm::restrict(e, &sum)));
        let neg = bmat.map(|v| -v.clone());
        assert_eq!(b_transform(&b_transform(&l, &bmat), &neg), l);
    }

    #[test]
    fn push_pull_identity_map() {
        let a = sl2();
        let n = a.dim();
        let id = Matrix::identity(n);
        let bplus = a.subalgebra_from_subset(RootSubset::from_indices([0]), &CartanPart::Full, true).unwrap();
        let l = make_l(&TwoForm::zero(bplus));
        assert_eq!(pushforward(&id, &l).unwrap(), l);
        assert_eq!(pullback(&id, &l).unwrap(), l);
        assert!(pushforward(&Matrix::identity(2), &l).is_err());
    }

    #[test]
    fn push_pull_through_quotient() {
        let a = sl2();
        let k = a.cartan_subspace();
        let pi = quotient_map(&k);
        assert_eq!(pi.rows(), 2);
        let bplus = a.subalgebra_from_subset(RootSubset::from_indices([0]), &CartanPart::Full, true).unwrap();
        let l = make_l(&TwoForm::zero(bplus));
        let d = pushforward(&pi, &l).unwrap();
        assert!(is_maximal_isotropic(&d));
        assert_eq!(pullback(&pi, &d).unwrap(), l);
        assert_eq!(pushforward(&pi, &pullback(&pi, &d).unwrap()).unwrap(), d);
    }

    #[test]
    fn interpretation_examples() {
        let a = sl2();
        let n = a.dim();
        let sigma = a.conjugation(ConjugationKind::Compact).unwrap();
        let k = a.cartan_subspace();
        let bplus = a.subalgebra_from_subset(RootSubset::from_indices([0]), &CartanPart::Full, true).unwrap();
        let pair = DiracPair::new(TwoForm::zero(bplus), k.clone());
        assert_eq!(interpret(&a, &pair, &sigma), StructureClass::Complex);
        // ω = φ∘[,] with φ real on the coroot: a real form with kernel k.
        let full = Subspace::full(n);
        let omega = TwoForm::from_functional(&a, full.clone(), &a.h(0));
        assert_eq!(omega.sharp_kernel(), k);
        let bar = omega.conjugate(&sigma);
        assert_eq!(bar, omega.scale(&g(-1, 0)), "φ real on coroots gives ω̄ = −ω here");
        // Under the compact form, ω̄ = −ω, so i·ω is the real-valued one.
        let iw = omega.scale(&g(0, 1));
        let pair = DiracPair::new(omega.clone(), k.clone());
        assert_eq!(interpret(&a, &pair, &sigma), StructureClass::Symplectic);
        let pair = DiracPair::new(omega.scale(&g(1, 1)), k.clone());
        assert_eq!(interpret(&a, &pair, &sigma), StructureClass::BTransformOfSymplectic);
        let pair = DiracPair::new(iw, k.clone());
        assert_eq!(interpret(&a, &pair, &sigma), StructureClass::Presymplectic);
    }
}
