//! Condition checklists and combinatorial classifications of generalized
//! complex and real Dirac pairs.
//!
//! Functionals `φ ∈ h*` are given by their values on the simple coroots
//! `h_1..h_r`, so `φ(α̌)` is the dot product with the coroot's coordinates.

use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{CartanPart, ChevalleyAlgebra, Conjugation, Element, LieAlgebra};
use crate::dirac::{self, DiracPair, TwoForm};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rootsys::{pair, RootSubset, RootSystem};
use crate::scalar::{Field, Gaussian, Rational};

/// Outcome of the five-condition test for a generalized complex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcReport {
    pub e_is_subalgebra: bool,
    /// (1) `k ⊆ E`
    pub k_in_e: bool,
    /// (2) `E + Ē = g`
    pub e_plus_ebar: bool,
    /// (3) `d_E ε = 0`
    pub closed: bool,
    /// (4) `ε♯(k) = 0`
    pub eps_kills_k: bool,
    /// (5) `Ker((ε − ε̄)♯ on E ∩ Ē) = k`
    pub kernel_is_k: bool,
    pub verdict: bool,
}

pub fn check_gc_pair(alg: &LieAlgebra, pair: &DiracPair, sigma: &Conjugation) -> GcReport {
    let e = pair.e();
    let k = &pair.k;
    let e_bar = sigma.apply_subspace(e);
    let e_is_subalgebra = alg.is_subalgebra(e);
    let k_in_e = k.is_subspace_of(e);
    let e_plus_ebar = e.sum(&e_bar).dim() == alg.dim();
    let closed = e_is_subalgebra && pair.eps.is_cocycle(alg).unwrap_or(false);
    let eps_kills_k = k_in_e && pair.eps.annihilates(k);
    let kernel_is_k = condition_five_kernel(pair, sigma) == *k;
    GcReport {
        e_is_subalgebra,
        k_in_e,
        e_plus_ebar,
        closed,
        eps_kills_k,
        kernel_is_k,
        verdict: e_is_subalgebra && k_in_e && e_plus_ebar && closed && eps_kills_k && kernel_is_k,
    }
}

/// The kernel of `W(m, m') = ε(m, m') − conj(ε(σm, σm'))` on `E ∩ Ē`.
pub fn condition_five_kernel(pair: &DiracPair, sigma: &Conjugation) -> Subspace<Gaussian> {
    let e = pair.e();
    let m = e.intersection(&sigma.apply_subspace(e));
    let basis = m.basis_vecs();
    let images: Vec<Element> = basis.iter().map(|v| sigma.apply(v)).collect();
    let d = basis.len();
    if d == 0 {
        return m;
    }
    let mut w = Matrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let a = pair.eps.eval(&basis[i], &basis[j]);
            let b = pair.eps.eval(&images[i], &images[j]).conj();
            w[(i, j)] = a - b;
        }
    }
    let coeffs = w.kernel();
    Subspace::span(m.ambient(), coeffs.iter().map(|c| m.combine(c)).collect())
}

/// The verdict computed directly in the double: `L(E, ε)` is maximal
/// isotropic, bracket-closed, and `L ∩ L̄ = k ⊕ 0`.
pub fn direct_gc_verdict(alg: &LieAlgebra, pair: &DiracPair, sigma: &Conjugation) -> bool {
    let l = dirac::make_l(&pair.eps);
    dirac::is_maximal_isotropic(&l)
        && dirac::is_double_subalgebra(alg, &l)
        && dirac::is_gc(sigma, &l, &pair.k)
}

/// `φ(α̌)` for a functional given on the simple coroots.
pub fn phi_on_coroot(rs: &RootSystem, phi: &[Gaussian], root: usize) -> Gaussian {
    pair(phi, &rs.coroot(root))
}

/// `φ̃ ∈ g*`: `φ` on `h`, zero on every root space.
pub fn extend_phi(alg: &ChevalleyAlgebra, phi: &[Gaussian]) -> Element {
    let mut v = alg.zero_element();
    v[..phi.len()].clone_from_slice(phi);
    v
}

/// The pair `(h ⊕ g_A, φ̃∘[,])` with isotropy `h ⊕ g_{Δ(k)}`.
pub fn realize_pair(
    alg: &ChevalleyAlgebra,
    a: RootSubset,
    delta_k: RootSubset,
    phi: &[Gaussian],
) -> DiracPair {
    let e = alg.subalgebra_from_subset(a, &CartanPart::Full, false).expect("full Cartan part");
    let k = alg.subalgebra_from_subset(delta_k, &CartanPart::Full, false).expect("full Cartan part");
    let eps = TwoForm::from_functional(alg, e, &extend_phi(alg, phi));
    DiracPair::new(eps, k)
}

/// Functionals on `span{α̌ : α ∈ A₀}` vanishing on the coroots of `Δ(k)`,
/// realized inside `h*` as combinations of the roots of `A₀`.
///
/// Its dimension is `rank(A₀) − rank(Δ(k))` when `Δ(k) ⊆ A₀`.
pub fn phi_space(rs: &RootSystem, a0: RootSubset, delta_k: RootSubset) -> Subspace<Rational> {
    let r = rs.rank();
    let roots: Vec<Vec<Rational>> = a0
        .indices()
        .map(|i| rs.root_on_coroots(i).into_iter().map(Rational::from_int).collect())
        .collect();
    let span = Subspace::span(r, roots);
    let coroots: Vec<Vec<Rational>> = delta_k.indices().map(|i| rs.coroot(i).vector).collect();
    let kill = Subspace::span(r, coroots).annihilator();
    span.intersection(&kill)
}

fn in_phi_space(space: &Subspace<Rational>, phi: &[Gaussian]) -> bool {
    let re: Vec<Rational> = phi.iter().map(|z| z.re.clone()).collect();
    let im: Vec<Rational> = phi.iter().map(|z| z.im.clone()).collect();
    space.contains(&re) && space.contains(&im)
}

/// Isotropy roots must form a symmetric closed subset.
pub fn check_isotropy(rs: &RootSystem, delta_k: RootSubset) -> Result<()> {
    if !rs.is_closed(delta_k) || !rs.is_symmetric(delta_k) {
        return Err(Error::InvalidInput(format!(
            "isotropy roots {} are not symmetric and closed",
            rs.describe_subset(delta_k).join(",")
        )));
    }
    Ok(())
}

/// One parabolic subset with its space of admissible functionals.
#[derive(Debug, Clone)]
pub struct CompactFamily {
    pub subset: RootSubset,
    pub a0: RootSubset,
    pub aprime: RootSubset,
    pub phi_space: Subspace<Rational>,
    /// Positive roots `α ∈ A₀ ∖ Δ(k)` on which `Re φ(α̌) ≠ 0` is required.
    pub predicate_roots: RootSubset,
}

impl CompactFamily {
    /// Whether `φ` lies in the family's functional space and satisfies the
    /// open condition.
    pub fn admits(&self, rs: &RootSystem, phi: &[Gaussian]) -> bool {
        in_phi_space(&self.phi_space, phi)
            && self.predicate_roots.indices().all(|a| !phi_on_coroot(rs, phi, a).re.is_zero())
    }
}

/// Parabolic subsets containing `Δ(k)`, each with its functional space and
/// the predicate `Re φ(α̌) ≠ 0` on `A₀ ∖ Δ(k)`.
pub fn gc_pairs_compact(rs: &RootSystem, delta_k: RootSubset, budget: u64) -> Result<Vec<CompactFamily>> {
    check_isotropy(rs, delta_k)?;
    Ok(rs
        .enumerate_closed_subsets(delta_k, budget)?
        .into_iter()
        .filter(|&s| rs.is_parabolic_subset(s))
        .map(|s| {
            let (a0, aprime) = rs.split_subset(s);
            CompactFamily {
                subset: s,
                a0,
                aprime,
                phi_space: phi_space(rs, a0, delta_k),
                predicate_roots: a0.difference(delta_k).intersection(rs.positive()),
            }
        })
        .collect())
}

/// The combinatorial generalized complex test for `(h ⊕ g_A, φ̃∘[,])` under
/// the compact form, with isotropy roots `Δ(k)`.
pub fn compact_gc_predicate(rs: &RootSystem, a: RootSubset, delta_k: RootSubset, phi: &[Gaussian]) -> bool {
    if !rs.is_closed(a) || !delta_k.is_subset_of(a) || !rs.is_parabolic_subset(a) || !rs.is_symmetric(delta_k) {
        return false;
    }
    let (a0, _) = rs.split_subset(a);
    delta_k.indices().all(|b| phi_on_coroot(rs, phi, b).is_zero())
        && a0.difference(delta_k).indices().all(|b| !phi_on_coroot(rs, phi, b).re.is_zero())
}

/// One symmetric subset with the functionals defining real Dirac structures.
#[derive(Debug, Clone)]
pub struct RealFamily {
    pub subset: RootSubset,
    pub phi_space: Subspace<Rational>,
    /// Positive roots on which `φ(α̌)` must be purely imaginary.
    pub imaginary_roots: RootSubset,
}

impl RealFamily {
    pub fn admits(&self, rs: &RootSystem, phi: &[Gaussian]) -> bool {
        // The space is spanned by real vectors, so membership of φ is
        // checked on real and imaginary parts separately.
        in_phi_space(&self.phi_space, phi)
            && self.imaginary_roots.indices().all(|a| phi_on_coroot(rs, phi, a).is_imaginary())
    }
}

/// Symmetric closed subsets `l ⊇ Δ(k)` with their functional spaces.
pub fn real_dirac_pairs_compact(rs: &RootSystem, delta_k: RootSubset, budget: u64) -> Result<Vec<RealFamily>> {
    check_isotropy(rs, delta_k)?;
    Ok(rs
        .enumerate_symmetric_closed(delta_k, budget)?
        .into_iter()
        .map(|s| RealFamily {
            subset: s,
            phi_space: phi_space(rs, s, delta_k),
            imaginary_roots: s.intersection(rs.positive()),
        })
        .collect())
}

pub fn is_gc_subset(rs: &RootSystem, a: RootSubset, sigma_action: &[usize]) -> bool {
    let sa = image(a, sigma_action);
    rs.is_closed(a) && a.union(sa) == rs.all() && a.intersection(sa).is_subset_of(rs.negate(a))
}

fn image(a: RootSubset, action: &[usize]) -> RootSubset {
    RootSubset::from_indices(a.indices().map(|i| action[i]))
}

/// Closed `A ⊇ Λ` with `A ∪ σA = Δ` and `A ∩ σA ⊆ −A`.
pub fn gc_subsets(
    rs: &RootSystem,
    sigma_action: &[usize],
    lambda: RootSubset,
    budget: u64,
) -> Result<Vec<RootSubset>> {
    check_isotropy(rs, lambda)?;
    let all = rs.enumerate_closed_subsets(lambda, budget)?;
    Ok(all.into_par_iter().filter(|&a| is_gc_subset(rs, a, sigma_action)).collect())
}

/// `φ` vanishes on the coroots of `Λ` and `φ(α̌) ≠ conj(φ(σ(α)ˇ))` for
/// every `α ∈ (A ∩ σA) ∖ Λ`.
pub fn check_phi_orbit(
    rs: &RootSystem,
    a: RootSubset,
    phi: &[Gaussian],
    sigma_action: &[usize],
    lambda: RootSubset,
) -> bool {
    if !lambda.indices().all(|b| phi_on_coroot(rs, phi, b).is_zero()) {
        return false;
    }
    let meet = a.intersection(image(a, sigma_action)).difference(lambda);
    meet.indices().all(|b| phi_on_coroot(rs, phi, b) != phi_on_coroot(rs, phi, sigma_action[b]).conj())
}

/// `θ = −σ` on roots.
pub fn theta_action(rs: &RootSystem, sigma_action: &[usize]) -> Vec<usize> {
    sigma_action.iter().map(|&s| rs.neg(s)).collect()
}

/// Connected components of `gamma` under non-orthogonality.
pub fn simple_summands(rs: &RootSystem, gamma: RootSubset) -> Vec<RootSubset> {
    let mut left = gamma;
    let mut out = Vec::new();
    while let Some(start) = left.indices().next() {
        let mut comp = RootSubset::from_indices([start]);
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in left.difference(comp).indices() {
                if !rs.inner(i, j).is_zero() {
                    comp.insert(j);
                    queue.push(j);
                }
            }
        }
        left = left.difference(comp);
        out.push(comp);
    }
    out
}

/// A generalized complex subset as a θ-stable parabolic `Φ`, the partition
/// of its Levi's simple summands, and a reductive piece per summand in `θT`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcSubsetDecomposition {
    pub phi: RootSubset,
    pub psi: RootSubset,
    pub summands: Vec<RootSubset>,
    pub t: Vec<usize>,
    pub theta_t: Vec<usize>,
    pub r: Vec<usize>,
    /// `(summand index, A ∩ Γ_i)` for each summand in `θT`.
    pub a_i: Vec<(usize, RootSubset)>,
}

pub fn decompose_gc_subset(
    rs: &RootSystem,
    a: RootSubset,
    theta: &[usize],
) -> Result<GcSubsetDecomposition> {
    let sigma: Vec<usize> = theta.iter().map(|&t| rs.neg(t)).collect();
    if !is_gc_subset(rs, a, &sigma) {
        return Err(Error::NotGcSubset);
    }
    let phi = a.union(image(a, theta));
    let gamma = phi.intersection(rs.negate(phi));
    let psi = phi.difference(gamma);
    let a0 = a.intersection(rs.negate(a));
    let ta0 = image(a0, theta);
    let summands = simple_summands(rs, gamma);
    let (mut t, mut theta_t, mut r, mut a_i) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (i, &g) in summands.iter().enumerate() {
        match (g.is_subset_of(a0), g.is_subset_of(ta0)) {
            (true, true) => r.push(i),
            (true, false) => t.push(i),
            (false, true) => {
                theta_t.push(i);
                a_i.push((i, a.intersection(g)));
            }
            (false, false) => return Err(Error::NotGcSubset),
        }
    }
    Ok(GcSubsetDecomposition { phi, psi, summands, t, theta_t, r, a_i })
}

/// `A = Ψ ∪ {Γ_i : i ∈ T ∪ R} ∪ {A_i : i ∈ θT}`.
pub fn recompose(d: &GcSubsetDecomposition) -> RootSubset {
    let mut a = d.psi;
    for &i in d.t.iter().chain(&d.r) {
        a = a.union(d.summands[i]);
    }
    for &(_, s) in &d.a_i {
        a = a.union(s);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoverCheck {
    /// Every cover by two symmetric closed subsets uses all of `Δ`.
    Success { pairs_checked: usize },
    Counterexample { x: RootSubset, y: RootSubset },
}

/// Scans pairs of symmetric closed subsets `X, Y` with `X ∪ Y = Δ`.
pub fn verify_symmetric_cover(rs: &RootSystem, budget: u64) -> Result<CoverCheck> {
    let sym = rs.enumerate_symmetric_closed(RootSubset::EMPTY, budget)?;
    let all = rs.all();
    let found = sym.par_iter().enumerate().find_map_first(|(i, &x)| {
        sym[i..]
            .iter()
            .find(|&&y| x.union(y) == all && x != all && y != all)
            .map(|&y| (x, y))
    });
    Ok(match found {
        Some((x, y)) => CoverCheck::Counterexample { x, y },
        None => CoverCheck::Success { pairs_checked: sym.len() * (sym.len() + 1) / 2 },
    })
}

/// Basis of `{ε ∈ ∧²E* : d_E ε = 0, ε♯(k) = 0, ε is k-invariant}`.
pub fn invariant_cocycles(alg: &LieAlgebra, e: &Subspace<Gaussian>, k: &Subspace<Gaussian>) -> Result<Vec<TwoForm>> {
    if !alg.is_subalgebra(e) {
        return Err(Error::NotSubalgebra);
    }
    let b = e.basis_vecs();
    let m = b.len();
    let mut idx = vec![vec![usize::MAX; m]; m];
    let mut n_unknowns = 0;
    for (i, row) in idx.iter_mut().enumerate() {
        for slot in row.iter_mut().skip(i + 1) {
            *slot = n_unknowns;
            n_unknowns += 1;
        }
    }
    // Coefficient row of ε(u, v) for u, v given in E-coordinates.
    let row_of = |cu: &[Gaussian], cv: &[Gaussian]| -> Vec<Gaussian> {
        let mut row = vec![Gaussian::zero(); n_unknowns];
        for i in 0..m {
            if cu[i].is_zero() {
                continue;
            }
            for j in 0..m {
                if i == j || cv[j].is_zero() {
                    continue;
                }
                let c = &cu[i] * &cv[j];
                if i < j {
                    row[idx[i][j]] += &c;
                } else {
                    row[idx[j][i]] -= &c;
                }
            }
        }
        row
    };
    let coords = |v: &[Gaussian]| e.coords(v).expect("bracket stays in E");
    let unit = |i: usize| {
        let mut v = vec![Gaussian::zero(); m];
        v[i] = Gaussian::one();
        v
    };
    let mut rows = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                let terms = [
                    (i, coords(&alg.bracket(&b[j], &b[l]))),
                    (j, coords(&alg.bracket(&b[l], &b[i]))),
                    (l, coords(&alg.bracket(&b[i], &b[j]))),
                ];
                let mut row = vec![Gaussian::zero(); n_unknowns];
                for (p, c) in terms {
                    for (q, v) in row_of(&unit(p), &c).into_iter().enumerate() {
                        row[q] += &v;
                    }
                }
                rows.push(row);
            }
        }
    }
    for x in k.basis_vecs() {
        let Some(cx) = e.coords(&x) else { return Ok(Vec::new()) };
        for q in 0..m {
            rows.push(row_of(&cx, &unit(q)));
            for p in 0..m {
                let a = row_of(&coords(&alg.bracket(&x, &b[p])), &unit(q));
                let c = row_of(&unit(p), &coords(&alg.bracket(&x, &b[q])));
                rows.push(a.iter().zip(&c).map(|(s, t)| s + t).collect());
            }
        }
    }
    let sols = if rows.is_empty() {
        Matrix::<Gaussian>::identity(n_unknowns).row_vecs()
    } else {
        Matrix::from_rows(n_unknowns, rows).kernel()
    };
    Ok(sols
        .into_iter()
        .map(|s| {
            let mut mat = Matrix::zeros(m, m);
            for i in 0..m {
                for j in i + 1..m {
                    mat[(i, j)] = s[idx[i][j]].clone();
                    mat[(j, i)] = -s[idx[i][j]].clone();
                }
            }
            TwoForm::from_matrix(e.clone(), mat).expect("antisymmetric by construction")
        })
        .collect())
}

/// Finds `φ ∈ h*` with `ε = φ̃∘[,]` on `E`, if one exists.
pub fn solve_phi(alg: &ChevalleyAlgebra, eps: &TwoForm) -> Option<Vec<Gaussian>> {
    let r = alg.rank();
    let b = eps.subspace().basis_vecs();
    let m = b.len();
    // Unknowns φ_1..φ_r and a homogenizing slot for the right-hand side.
    let mut rows = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let br = alg.bracket(&b[i], &b[j]);
            let mut row: Vec<Gaussian> = br[..r].to_vec();
            row.push(-eps.matrix()[(i, j)].clone());
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Some(vec![Gaussian::zero(); r]);
    }
    let ker = Matrix::from_rows(r + 1, rows).kernel();
    let v = ker.iter().find(|v| !v[r].is_zero())?;
    let s = v[r].inv();
    let phi: Vec<Gaussian> = v[..r].iter().map(|x| x * &s).collect();
    // The root-space part of [b_i, b_j] must not be needed.
    let rebuilt = TwoForm::from_functional(alg, eps.subspace().clone(), &extend_phi(alg, &phi));
    (rebuilt == *eps).then_some(phi)
}

/// A report row for one admissible subset.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyRow {
    pub subset_mask: String,
    pub roots: Vec<String>,
    pub parabolic: bool,
    pub levi_core: String,
    pub phi_space_dim: usize,
    pub gc_predicate: String,
}

fn root_list(rs: &RootSystem, s: RootSubset) -> String {
    format!("{{{}}}", rs.describe_subset(s).join(", "))
}

/// Human-readable form of `Re φ(α̌) ≠ 0` over the given roots.
pub fn compact_predicate_text(rs: &RootSystem, roots: RootSubset) -> String {
    if roots.is_empty() {
        "true".into()
    } else {
        format!("Re phi(coroot(a)) != 0 for a in {}", root_list(rs, roots))
    }
}

pub fn compact_rows(rs: &RootSystem, families: &[CompactFamily]) -> Vec<ClassifyRow> {
    families
        .iter()
        .map(|f| ClassifyRow {
            subset_mask: f.subset.to_string(),
            roots: rs.describe_subset(f.subset),
            parabolic: true,
            levi_core: f.a0.to_string(),
            phi_space_dim: f.phi_space.dim(),
            gc_predicate: compact_predicate_text(rs, f.predicate_roots),
        })
        .collect()
}

pub fn orbit_rows(rs: &RootSystem, subsets: &[RootSubset], sigma_action: &[usize], lambda: RootSubset) -> Vec<ClassifyRow> {
    subsets
        .iter()
        .map(|&a| {
            let (a0, _) = rs.split_subset(a);
            let meet = a.intersection(image(a, sigma_action)).difference(lambda);
            let mut pred = Vec::new();
            if !lambda.is_empty() {
                pred.push(format!("phi(coroot(a)) = 0 for a in {}", root_list(rs, lambda.intersection(rs.positive()))));
            }
            if !meet.is_empty() {
                pred.push(format!(
                    "phi(coroot(a)) != conj(phi(coroot(sigma a))) for a in {}",
                    root_list(rs, meet)
                ));
            }
            ClassifyRow {
                subset_mask: a.to_string(),
                roots: rs.describe_subset(a),
                parabolic: rs.is_parabolic_subset(a),
                levi_core: a0.to_string(),
                phi_space_dim: phi_space(rs, a0, lambda).dim(),
                gc_predicate: if pred.is_empty() { "true".into() } else { pred.join("; ") },
            }
        })
        .collect()
}
