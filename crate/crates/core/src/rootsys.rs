//! Finite reduced root systems and subset combinatorics.
//!
//! Roots are integer vectors in the simple-root basis. Positive roots are
//! listed first, ordered by height and then lexicographically with larger
//! leading coefficients first (so `α₁` precedes `α₂`); the negative roots
//! follow in the same order. A [`RootSubset`] is a bitmask over that ordering.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::scalar::{Field, Gaussian, Rational};

/// Largest number of roots a [`RootSubset`] mask can index.
pub const MAX_ROOTS: usize = 128;
/// Default cap on the rank accepted by [`CartanType::parse_with_cap`].
pub const DEFAULT_RANK_CAP: usize = 4;
/// Default budget for closed-subset enumeration, compared against `2^|Δ|`.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A simple Cartan type such as `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::UnsupportedType(format!("{}{}", series.letter(), rank)))
        }
    }

    /// Parses labels like `A2`, rejecting ranks above `rank_cap`.
    pub fn parse_with_cap(s: &str, rank_cap: usize) -> Result<Self> {
        let t: CartanType = s.parse()?;
        if t.rank > rank_cap {
            return Err(Error::UnsupportedType(format!("{s} (rank above cap {rank_cap})")));
        }
        Ok(t)
    }

    /// Number of roots, from the classical formulas.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }

    /// Cartan matrix `A_ij = <α_i^∨, α_j>` in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            Series::B => a[n - 1][n - 2] = -2,
            Series::C => a[n - 2][n - 1] = -2,
            Series::F => a[2][1] = -2,
            Series::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.trim().chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(series, rank).map_err(|_| bad())
    }
}

/// A subset of the roots of some [`RootSystem`], as a bitmask over its
/// root ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSubset(pub u128);

impl RootSubset {
    pub const EMPTY: RootSubset = RootSubset(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        RootSubset(indices.into_iter().fold(0u128, |m, i| m | (1u128 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: RootSubset) -> RootSubset {
        RootSubset(self.0 | o.0)
    }

    pub fn intersection(self, o: RootSubset) -> RootSubset {
        RootSubset(self.0 & o.0)
    }

    pub fn difference(self, o: RootSubset) -> RootSubset {
        RootSubset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: RootSubset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (0..MAX_ROOTS).filter(move |&i| m >> i & 1 == 1)
    }
}

impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl serde::Serialize for RootSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RootSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let hex = s.strip_prefix("0x").unwrap_or(&s);
        u128::from_str_radix(hex, 16).map(RootSubset).map_err(serde::de::Error::custom)
    }
}

/// A coroot `α^∨ = 2 t_α / (α, α)`, written in the simple coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coroot {
    pub root_index: usize,
    pub vector: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<CartanType>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_j)`, short roots of every component normalized to length² 2.
    gram: Vec<Vec<Rational>>,
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
    neg: Vec<usize>,
    sums: Vec<Vec<Option<usize>>>,
}

impl RootSystem {
    pub fn new(t: CartanType) -> Result<Self> {
        Self::product(&[t])
    }

    /// `build_root_system`, for a label such as `A2`.
    pub fn build(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    /// The orthogonal direct sum of simple systems (e.g. `A1 x A1`).
    pub fn product(types: &[CartanType]) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::UnsupportedType("empty product".into()));
        }
        let total: usize = types.iter().map(|t| t.root_count()).sum();
        if total > MAX_ROOTS {
            let label: Vec<String> = types.iter().map(|t| t.to_string()).collect();
            return Err(Error::UnsupportedType(format!(
                "{} ({total} roots exceeds the {MAX_ROOTS}-root mask width)",
                label.join("x")
            )));
        }
        let rank: usize = types.iter().map(|t| t.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut off = 0;
        for t in types {
            let block = t.cartan_matrix();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    cartan[off + i][off + j] = block[i][j];
                }
            }
            off += t.rank;
        }
        let mut rs = Self::from_cartan(cartan)?;
        rs.components = types.to_vec();
        Ok(rs)
    }

    fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = cartan.len();
        let d = symmetrizer(&cartan);
        let gram: Vec<Vec<Rational>> = (0..rank)
            .map(|i| (0..rank).map(|j| &d[i] * &Rational::from_int(cartan[i][j])).collect())
            .collect();

        let mut positive: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: HashMap<Vec<i64>, ()> = positive.iter().map(|v| (v.clone(), ())).collect();
        let mut k = 0;
        while k < positive.len() {
            let beta = positive[k].clone();
            for i in 0..rank {
                // p: how far the α_i-string extends below β
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains_key(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone(), ()).is_none() {
                        positive.push(up);
                    }
                }
            }
            k += 1;
        }
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        if roots.len() > MAX_ROOTS {
            return Err(Error::UnsupportedType(format!("{} roots", roots.len())));
        }
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let neg = (0..roots.len()).map(|i| if i < n_pos { i + n_pos } else { i - n_pos }).collect();
        let sums = roots
            .iter()
            .map(|a| {
                roots
                    .iter()
                    .map(|b| {
                        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        index.get(&s).copied()
                    })
                    .collect()
            })
            .collect();
        Ok(RootSystem { components: Vec::new(), rank, cartan, gram, roots, n_pos, index, neg, sums })
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn label(&self) -> String {
        let v: Vec<String> = self.components.iter().map(|t| t.to_string()).collect();
        v.join("x")
    }

    pub fn series(&self) -> Option<Series> {
        match self.components.as_slice() {
            [t] => Some(t.series),
            _ => None,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn simple_index(&self, k: usize) -> usize {
        self.index[&unit(self.rank, k)]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    /// Index of `α_i + α_j` if it is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i][j]
    }

    pub fn all(&self) -> RootSubset {
        if self.len() == 128 {
            RootSubset(u128::MAX)
        } else {
            RootSubset((1u128 << self.len()) - 1)
        }
    }

    pub fn positive(&self) -> RootSubset {
        RootSubset((1u128 << self.n_pos) - 1)
    }

    pub fn negative(&self) -> RootSubset {
        RootSubset(self.all().0 & !self.positive().0)
    }

    /// `(α, β)` for root indices.
    pub fn inner(&self, i: usize, j: usize) -> Rational {
        self.inner_vec(&self.roots[i], &self.roots[j])
    }

    pub fn inner_vec(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut acc = Rational::from_int(0);
        for (p, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (q, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                acc += &(&self.gram[p][q] * &Rational::from_int(x * y));
            }
        }
        acc
    }

    /// `<α, β^∨> = 2 (α, β) / (β, β)`, an integer.
    pub fn pairing(&self, alpha: usize, beta: usize) -> i64 {
        let v = &(&self.inner(alpha, beta) * &Rational::from_int(2)) / &self.inner(beta, beta);
        v.to_i64().expect("root pairing is an integer")
    }

    /// Values `α(h_k)` of a root on the simple coroots.
    pub fn root_on_coroots(&self, i: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|k| (0..self.rank).map(|j| self.roots[i][j] * self.cartan[k][j]).sum())
            .collect()
    }

    /// `coroot(rs, i)`.
    pub fn coroot(&self, i: usize) -> Coroot {
        let len = self.inner(i, i);
        let vector = (0..self.rank)
            .map(|k| {
                let lk = &self.gram[k][k];
                &(&Rational::from_int(self.roots[i][k]) * lk) / &len
            })
            .collect();
        Coroot { root_index: i, vector }
    }

    /// Reflection `s_β(α)` as an index.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let c = self.pairing(alpha, beta);
        let v: Vec<i64> =
            self.roots[alpha].iter().zip(&self.roots[beta]).map(|(a, b)| a - c * b).collect();
        self.index[&v]
    }

    /// Signed simple-root expansion, e.g. `+a1+2a2` or `-a1-a2`.
    pub fn describe_root(&self, i: usize) -> String {
        let mut out = String::new();
        for (k, &c) in self.roots[i].iter().enumerate().filter(|(_, &c)| c != 0) {
            out.push(if c > 0 { '+' } else { '-' });
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("a{}", k + 1));
        }
        out
    }

    /// Parses a root written as signed terms (`+a1`, `a1+2a2`, `-a1-a2`) or
    /// as a bare index.
    pub fn parse_root(&self, s: &str) -> Result<usize> {
        let bad = || Error::InvalidInput(format!("cannot parse root `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Ok(i) = t.parse::<usize>() {
            return if i < self.len() { Ok(i) } else { Err(bad()) };
        }
        let mut v = vec![0i64; self.rank];
        let mut rest = t.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            let (c, k) = term.split_once('a').ok_or_else(bad)?;
            let c: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
            let k: usize = k.parse().map_err(|_| bad())?;
            if k == 0 || k > self.rank {
                return Err(bad());
            }
            v[k - 1] += sign * c;
            rest = tail;
        }
        self.index_of(&v).ok_or_else(bad)
    }

    pub fn describe_subset(&self, s: RootSubset) -> Vec<String> {
        s.indices().map(|i| self.describe_root(i)).collect()
    }

    // ---- subset combinatorics ----

    pub fn negate(&self, s: RootSubset) -> RootSubset {
        RootSubset::from_indices(s.indices().map(|i| self.neg[i]))
    }

    pub fn is_closed(&self, s: RootSubset) -> bool {
        let idx: Vec<usize> = s.indices().collect();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a..] {
                if let Some(k) = self.sums[i][j] {
                    if !s.contains(k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_symmetric(&self, s: RootSubset) -> bool {
        self.negate(s) == s
    }

    pub fn is_parabolic_subset(&self, s: RootSubset) -> bool {
        self.is_closed(s) && s.union(self.negate(s)) == self.all()
    }

    /// `A₀ = S ∩ −S` and `A′ = S ∖ A₀`.
    pub fn split_subset(&self, s: RootSubset) -> (RootSubset, RootSubset) {
        let a0 = s.intersection(self.negate(s));
        (a0, s.difference(a0))
    }

    /// The rational span of a set of roots inside the root lattice.
    pub fn span(&self, s: RootSubset) -> Subspace<Rational> {
        let rows = s
            .indices()
            .map(|i| self.roots[i].iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Subspace::span(self.rank, rows)
    }

    pub fn subset_rank(&self, s: RootSubset) -> usize {
        self.span(s).dim()
    }

    /// True iff `s` is symmetric, closed, and `span(s) ∩ ambient = s`.
    pub fn is_levi_subsystem(&self, s: RootSubset, ambient: RootSubset) -> bool {
        if !s.is_subset_of(ambient) || !self.is_symmetric(s) || !self.is_closed(s) {
            return false;
        }
        let span = self.span(s);
        ambient.difference(s).indices().all(|i| {
            let v: Vec<Rational> = self.roots[i].iter().map(|&x| Rational::from_int(x)).collect();
            !span.contains(&v)
        })
    }

    /// All closed subsets containing `required`, in increasing mask order.
    pub fn enumerate_closed_subsets(
        &self,
        required: RootSubset,
        budget: u64,
    ) -> Result<Vec<RootSubset>> {
        if !self.is_closed(required) {
            return Err(Error::NotClosed);
        }
        self.check_budget(budget)?;
        let checks = self.closure_checks();
        let mut out = Vec::new();
        self.extend_closed(0, RootSubset::EMPTY, required, &checks, &mut out);
        out.sort();
        Ok(out)
    }

    /// All symmetric closed subsets containing `required`.
    ///
    /// Roots are decided in pairs `{α, −α}`, so the search space is
    /// `2^|Δ⁺|` and the budget is compared against that.
    pub fn enumerate_symmetric_closed(
        &self,
        required: RootSubset,
        budget: u64,
    ) -> Result<Vec<RootSubset>> {
        let required = required.union(self.negate(required));
        if !self.is_closed(required) {
            return Err(Error::NotClosed);
        }
        let n = self.n_pos;
        if n >= 64 || (1u64 << n) > budget {
            return Err(Error::CapExceeded { roots: self.len(), budget });
        }
        let mut out = Vec::new();
        self.extend_symmetric(0, RootSubset::EMPTY, required, &mut out);
        out.sort();
        Ok(out)
    }

    fn extend_symmetric(
        &self,
        k: usize,
        s: RootSubset,
        required: RootSubset,
        out: &mut Vec<RootSubset>,
    ) {
        if k == self.n_pos {
            out.push(s);
            return;
        }
        // A sum of two decided roots that is itself decided must be present.
        let decided = |i: usize| i % self.n_pos <= k;
        let ok = |s: RootSubset| {
            s.indices().all(|i| {
                s.indices().all(|j| match self.sums[i][j] {
                    Some(m) if decided(m) => s.contains(m),
                    _ => true,
                })
            })
        };
        let with = s.union(RootSubset::from_indices([k, self.neg[k]]));
        if ok(with) {
            self.extend_symmetric(k + 1, with, required, out);
        }
        if !required.contains(k) && ok(s) {
            self.extend_symmetric(k + 1, s, required, out);
        }
    }

    fn check_budget(&self, budget: u64) -> Result<()> {
        let n = self.len();
        if n >= 64 || (1u64 << n) > budget {
            return Err(Error::CapExceeded { roots: n, budget });
        }
        Ok(())
    }

    /// Closure triples `(i, j, i+j)` grouped by the largest index involved,
    /// so each triple is tested exactly when its last member is decided.
    fn closure_checks(&self) -> Vec<Vec<(usize, usize, usize)>> {
        let n = self.len();
        let mut by_max: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in i..n {
                if let Some(k) = self.sums[i][j] {
                    let m = i.max(j).max(k);
                    by_max[m].push((i, j, k));
                }
            }
        }
        by_max
    }

    fn extend_closed(
        &self,
        i: usize,
        s: RootSubset,
        required: RootSubset,
        checks: &[Vec<(usize, usize, usize)>],
        out: &mut Vec<RootSubset>,
    ) {
        if i == self.len() {
            out.push(s);
            return;
        }
        let ok = |s: RootSubset| {
            checks[i].iter().all(|&(a, b, c)| !(s.contains(a) && s.contains(b)) || s.contains(c))
        };
        let mut with = s;
        with.insert(i);
        if ok(with) {
            self.extend_closed(i + 1, with, required, checks, out);
        }
        if !required.contains(i) && ok(s) {
            self.extend_closed(i + 1, s, required, checks, out);
        }
    }
}

fn unit(n: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[k] = 1;
    v
}

/// Half squared lengths `d_i = (α_i, α_i)/2` with `d_i A_ij = d_j A_ji`,
/// normalized per connected component so the shortest simple root has `d = 1`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::from_int(1));
        let mut comp = vec![start];
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(
                        &(&di * &Rational::from_int(cartan[i][j])) / &Rational::from_int(cartan[j][i]),
                    );
                    comp.push(j);
                    queue.push(j);
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].clone().unwrap()).min().unwrap();
        for &i in &comp {
            d[i] = Some(&d[i].clone().unwrap() / &min);
        }
    }
    d.into_iter().map(Option::unwrap).collect()
}

/// `φ(c)` for a functional given by its values on the simple coroots.
pub fn pair(phi: &[Gaussian], c: &Coroot) -> Gaussian {
    let mut acc = Gaussian::zero();
    for (p, v) in phi.iter().zip(&c.vector) {
        if v.is_zero() {
            continue;
        }
        acc = acc + p * &Gaussian::real(v.clone());
    }
    acc
}
