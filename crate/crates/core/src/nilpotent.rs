//! Nilpotent orbits in `sl_n`: standard triples, centralizers and the
//! certificates behind the rigidity statement for nilpotent orbits.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{Conjugation, ConjugationKind, Element, LieAlgebra, Subalgebra};
use crate::classify::check_gc_pair;
use crate::dirac::{DiracPair, TwoForm};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Gaussian, Rational};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero or no parts")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn regular(n: usize) -> Self {
        Partition(vec![n])
    }

    pub fn is_regular(&self) -> bool {
        self.0.len() == 1
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                go(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(format!("cannot parse `{s}`")))?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

type QMatrix = Matrix<Rational>;

fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = a.mul_mat(b);
    let ba = b.mul_mat(a);
    let mut out = ab;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] = &out[(i, j)] - &ba[(i, j)];
        }
    }
    out
}

fn unit_matrix(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = Rational::one();
    m
}

/// `sl_n(ℂ)` in the real basis `H_1..H_{n−1}` (`H_k = E_kk − E_{k+1,k+1}`)
/// followed by the off-diagonal `E_ij` in row-major order.
#[derive(Debug, Clone)]
pub struct SlN {
    n: usize,
    alg: LieAlgebra,
}

impl SlN {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!("sl_{n} needs n >= 2")));
        }
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        for k in 0..n - 1 {
            let mut m = unit_matrix(n, k, k);
            m[(k + 1, k + 1)] = -Rational::one();
            basis.push(m);
            labels.push(format!("H{}", k + 1));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(unit_matrix(n, i, j));
                    labels.push(format!("E{},{}", i + 1, j + 1));
                }
            }
        }
        let consts: Vec<Vec<Vec<(usize, Rational)>>> = basis
            .par_iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| {
                        Self::coords_of(n, &commutator(a, b))
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(SlN { n, alg: LieAlgebra::from_structure_constants(labels, consts) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    fn coords_of(n: usize, m: &QMatrix) -> Vec<Rational> {
        let mut v = Vec::with_capacity(n * n - 1);
        let mut acc = Rational::zero();
        for k in 0..n - 1 {
            acc += &m[(k, k)];
            v.push(acc.clone());
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    v.push(m[(i, j)].clone());
                }
            }
        }
        v
    }

    /// Coordinates of a trace-free matrix.
    pub fn element(&self, m: &QMatrix) -> Element {
        debug_assert!(m.trace().is_zero());
        Self::coords_of(self.n, m).into_iter().map(Gaussian::from).collect()
    }

    /// The matrix with the given coordinates.
    pub fn matrix(&self, v: &[Gaussian]) -> Matrix<Gaussian> {
        let n = self.n;
        let mut m = Matrix::zeros(n, n);
        for k in 0..n - 1 {
            m[(k, k)] = &m[(k, k)] + &v[k];
            m[(k + 1, k + 1)] = &m[(k + 1, k + 1)] - &v[k];
        }
        let mut idx = n - 1;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[(i, j)] = v[idx].clone();
                    idx += 1;
                }
            }
        }
        m
    }

    pub fn unit(&self, i: usize, j: usize) -> Element {
        self.element(&unit_matrix(self.n, i, j))
    }

    /// Entrywise conjugation, which fixes `sl_n(ℝ)`.
    pub fn split_conjugation(&self) -> Conjugation {
        Conjugation::entrywise(ConjugationKind::MatrixEntrywise, self.alg.dim())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTriple {
    pub e: QMatrix,
    pub h: QMatrix,
    pub f: QMatrix,
}

impl StandardTriple {
    pub fn relations_hold(&self) -> bool {
        let two = Rational::from_int(2);
        let scaled = |m: &QMatrix, c: &Rational| m.map(|x| x * c);
        commutator(&self.e, &self.f) == self.h
            && commutator(&self.h, &self.e) == scaled(&self.e, &two)
            && commutator(&self.h, &self.f) == scaled(&self.f, &-two.clone())
            && self.h.trace().is_zero()
    }

    /// Jordan block sizes of `e`, read from the ranks of its powers.
    pub fn jordan_type(&self) -> Vec<usize> {
        let n = self.e.rows();
        let mut ranks = vec![n];
        let mut p = Matrix::identity(n);
        while *ranks.last().unwrap() > 0 {
            p = p.mul_mat(&self.e);
            ranks.push(p.rank());
        }
        // at_least[k] = number of blocks of size > k
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for k in 0..at_least.len() {
            let exact = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
            parts.extend(std::iter::repeat(k + 1).take(exact));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// `e` is block-Jordan and `h` carries the weights `k−1, k−3, …, 1−k` on a
/// block of size `k`; `f` is a solution of `[e, f] = h` inside the `−2`
/// eigenspace of `ad h`.
pub fn triple_from_partition(n: usize, lambda: &Partition) -> Result<StandardTriple> {
    if lambda.n() != n {
        return Err(Error::InvalidPartition(format!("{lambda} does not partition {n}")));
    }
    let mut e = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    let mut start = 0;
    for &k in lambda.parts() {
        for j in 0..k {
            h[(start + j, start + j)] = Rational::from_int(k as i64 - 1 - 2 * j as i64);
            if j + 1 < k {
                e[(start + j, start + j + 1)] = Rational::one();
            }
        }
        start += k;
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| &h[(i, i)] - &h[(j, j)] == Rational::from_int(-2))
        .collect();
    let columns: Vec<QMatrix> = slots.iter().map(|&(i, j)| commutator(&e, &unit_matrix(n, i, j))).collect();
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            rows.push(columns.iter().map(|c| c[(a, b)].clone()).collect());
            rhs.push(h[(a, b)].clone());
        }
    }
    let sol = Matrix::from_rows(slots.len(), rows)
        .solve(&rhs)
        .ok_or_else(|| Error::InvalidPartition(format!("no triple found for {lambda}")))?;
    let mut f = Matrix::zeros(n, n);
    for (&(i, j), c) in slots.iter().zip(sol) {
        f[(i, j)] = c;
    }
    Ok(StandardTriple { e, h, f })
}

pub fn centralizer_nilpotent(sl: &SlN, triple: &StandardTriple) -> Subalgebra {
    sl.algebra().centralizer(&[sl.element(&triple.e)])
}

/// The joint centralizer of the regular nilpotent and `X_{n,1}` vanishes.
pub fn certify_pair_centralizer_zero(n: usize) -> Result<bool> {
    let sl = SlN::new(n)?;
    let t = triple_from_partition(n, &Partition::regular(n))?;
    let z = sl.algebra().centralizer(&[sl.element(&t.e), sl.unit(n - 1, 0)]);
    Ok(z.dim() == 0)
}

/// `Z(e)` together with the triple generates `sl_n`.
pub fn certify_slice_generation(n: usize, lambda: &Partition) -> Result<bool> {
    let sl = SlN::new(n)?;
    let t = triple_from_partition(n, lambda)?;
    let mut gens = centralizer_nilpotent(&sl, &t).basis_vecs();
    gens.extend([sl.element(&t.e), sl.element(&t.h), sl.element(&t.f)]);
    Ok(sl.algebra().generated_subalgebra(&gens).dim() == sl.algebra().dim())
}

/// The double centralizer `Z(Z(e))` and the open condition on its elements.
///
/// Only the Lie-algebra conditions are checked. Invariance of `t` under the
/// possibly disconnected centralizer group of `e` is not verified.
#[derive(Debug, Clone)]
pub struct NilpotentGcParams {
    pub sl: SlN,
    pub triple: StandardTriple,
    pub z_e: Subalgebra,
    pub zz_e: Subalgebra,
}

impl NilpotentGcParams {
    pub fn basis(&self) -> Vec<Element> {
        self.zz_e.basis_vecs()
    }

    /// `t ∈ Z(Z(e))` and `Z(t_i) = Z(e)` for the imaginary part `t_i`.
    pub fn admits(&self, t: &[Gaussian]) -> bool {
        if !self.zz_e.contains(t) {
            return false;
        }
        let t_i: Element = t.iter().map(|z| Gaussian::real(z.im.clone())).collect();
        self.sl.algebra().centralizer(&[t_i]) == self.z_e
    }

    /// The pair `(g, κ(t, [·,·]))` with isotropy `Z(e)`.
    pub fn realize(&self, t: &[Gaussian]) -> DiracPair {
        let alg = self.sl.algebra();
        let kappa = alg.killing_matrix();
        let phi: Element = (0..alg.dim())
            .map(|j| {
                (0..alg.dim()).fold(Gaussian::zero(), |acc, i| {
                    &acc + &(&t[i] * &Gaussian::real(kappa[(i, j)].clone()))
                })
            })
            .collect();
        let full = Subspace::full(alg.dim());
        DiracPair::new(TwoForm::from_functional(alg, full, &phi), self.z_e.clone())
    }

    /// The five-condition verdict for the realized pair under the split form.
    pub fn checklist_verdict(&self, t: &[Gaussian]) -> bool {
        check_gc_pair(self.sl.algebra(), &self.realize(t), &self.sl.split_conjugation()).verdict
    }
}

pub fn gc_params_nilpotent(n: usize, lambda: &Partition) -> Result<NilpotentGcParams> {
    let sl = SlN::new(n)?;
    let triple = triple_from_partition(n, lambda)?;
    let z_e = centralizer_nilpotent(&sl, &triple);
    let zz_e = sl.algebra().centralizer(&z_e.basis_vecs());
    Ok(NilpotentGcParams { sl, triple, z_e, zz_e })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub trials: usize,
    /// Trials whose subalgebra satisfied `E + Ē = g`.
    pub filtered: usize,
    /// Trials whose subalgebra was proper, before filtering.
    pub proper: usize,
    pub violations: usize,
}

/// Random falsification probe: subalgebras generated by `Z(e)` and a few
/// sparse random elements never satisfy `E + Ē = g` unless `E = g`.
pub fn probe_prop_ij(n: usize, lambda: &Partition, trials: usize, seed: u64) -> Result<ProbeReport> {
    let sl = SlN::new(n)?;
    let triple = triple_from_partition(n, lambda)?;
    let z_e = centralizer_nilpotent(&sl, &triple).basis_vecs();
    let sigma = sl.split_conjugation();
    let alg = sl.algebra();
    let dim = alg.dim();
    let outcomes: Vec<(bool, bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let mut gens = z_e.clone();
            for _ in 0..rng.gen_range(1..=2) {
                let mut x = vec![Gaussian::zero(); dim];
                for _ in 0..rng.gen_range(1..=3) {
                    let k = rng.gen_range(0..dim);
                    x[k] = Gaussian::int(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
                }
                gens.push(x);
            }
            let e = alg.generated_subalgebra(&gens);
            let proper = e.dim() < dim;
            let covers = e.sum(&sigma.apply_subspace(&e)).dim() == dim;
            (proper, covers, covers && proper)
        })
        .collect();
    Ok(ProbeReport {
        trials,
        filtered: outcomes.iter().filter(|o| o.1).count(),
        proper: outcomes.iter().filter(|o| o.0).count(),
        violations: outcomes.iter().filter(|o| o.2).count(),
    })
}
