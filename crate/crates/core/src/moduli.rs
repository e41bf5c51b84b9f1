//! The moduli of invariant Dirac structures as a finite orbit graph.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::ChevalleyAlgebra;
use crate::classify::{self, check_isotropy};
use crate::error::{Error, Result};
use crate::rootsys::{RootSubset, RootSystem};
use crate::scalar::{Field, Gaussian};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitNode {
    pub subset: RootSubset,
    pub a0: RootSubset,
    pub aprime: RootSubset,
    pub dim: usize,
    /// Parabolic subsets are the only ones that can carry GC structures.
    pub gc_capable: bool,
    pub gc_predicate: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuliGraph {
    pub delta_k: RootSubset,
    pub nodes: Vec<OrbitNode>,
    /// `(i, j)` means the orbit of node `j` lies in the closure of node `i`.
    /// Includes `(i, i)` for every node.
    pub closure_edges: Vec<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

pub fn orbit_dimension(rs: &RootSystem, subset: RootSubset, delta_k: RootSubset) -> usize {
    let (a0, _) = rs.split_subset(subset);
    rs.subset_rank(a0) - rs.subset_rank(delta_k)
}

fn make_node(rs: &RootSystem, subset: RootSubset, delta_k: RootSubset) -> OrbitNode {
    let (a0, aprime) = rs.split_subset(subset);
    let gc_capable = rs.is_parabolic_subset(subset);
    OrbitNode {
        subset,
        a0,
        aprime,
        dim: orbit_dimension(rs, subset, delta_k),
        gc_capable,
        gc_predicate: if gc_capable {
            classify::compact_predicate_text(rs, a0.difference(delta_k).intersection(rs.positive()))
        } else {
            "false".into()
        },
    }
}

/// `O_F` meets the closure of `O_E` iff `F' = E'` and `F₀` is a Levi
/// subsystem of `E₀`.
pub fn closure_contains(rs: &RootSystem, e: &OrbitNode, f: &OrbitNode, delta_k: RootSubset) -> bool {
    f.aprime == e.aprime && delta_k.is_subset_of(f.subset) && rs.is_levi_subsystem(f.a0, e.a0)
}

pub fn build_moduli_graph(rs: &RootSystem, delta_k: RootSubset, budget: u64) -> Result<ModuliGraph> {
    check_isotropy(rs, delta_k)?;
    let mut subsets = rs.enumerate_closed_subsets(delta_k, budget)?;
    subsets.sort();
    let nodes: Vec<OrbitNode> = subsets.iter().map(|&s| make_node(rs, s, delta_k)).collect();
    let n = nodes.len();
    let closure_edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let nodes = &nodes;
            (0..n).filter(move |&j| closure_contains(rs, &nodes[i], &nodes[j], delta_k)).map(move |j| (i, j))
        })
        .collect();
    let components = weak_components(n, &closure_edges);
    Ok(ModuliGraph { delta_k, nodes, closure_edges, components })
}

fn weak_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let r = find(&mut parent, i);
        groups[r].push(i);
    }
    groups.retain(|g| !g.is_empty());
    groups
}

impl ModuliGraph {
    /// Component sizes in decreasing order.
    pub fn component_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.components.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn node_index(&self, subset: RootSubset) -> Option<usize> {
        self.nodes.iter().position(|n| n.subset == subset)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .map(|n| {
                serde_json::json!({
                    "mask": n.subset.to_string(),
                    "dim": n.dim,
                    "parabolic": n.gc_capable,
                    "gc_predicate": n.gc_predicate,
                })
            })
            .collect();
        let edges: Vec<[usize; 2]> =
            self.closure_edges.iter().filter(|(a, b)| a != b).map(|&(a, b)| [a, b]).collect();
        serde_json::json!({ "nodes": nodes, "edges": edges, "components": self.components })
    }

    pub fn to_dot(&self, rs: &RootSystem) -> String {
        let mut out = String::from("digraph moduli {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let roots = rs.describe_subset(n.subset).join(" ");
            let shape = if n.gc_capable { "box" } else { "ellipse" };
            let _ = writeln!(out, "  n{i} [label=\"{} dim={}\\n{roots}\", shape={shape}];", n.subset, n.dim);
        }
        for &(a, b) in &self.closure_edges {
            if a != b {
                let _ = writeln!(out, "  n{a} -> n{b};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// A point `[x, y]` of the complex projective line; infinity is `[1, 0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub x: Gaussian,
    pub y: Gaussian,
}

impl ProjPoint {
    pub fn affine(c: Gaussian) -> Self {
        ProjPoint { x: c, y: Gaussian::one() }
    }

    pub fn infinity() -> Self {
        ProjPoint { x: Gaussian::one(), y: Gaussian::zero() }
    }
}

/// Evaluates `vtx + ytu − yvs` at `[x,y] × [u,v] × [s,t]`.
pub fn su3_surface_form(p: &[ProjPoint; 3]) -> Gaussian {
    let [ProjPoint { x, y }, ProjPoint { x: u, y: v }, ProjPoint { x: s, y: t }] = p;
    &(&(&(v * t) * x) + &(&(y * t) * u)) - &(&(y * v) * s)
}

pub fn su3_surface_contains(p: &[ProjPoint; 3]) -> bool {
    su3_surface_form(p).is_zero()
}

pub fn su3_surface_membership(c_alpha: &Gaussian, c_beta: &Gaussian, c_alphabeta: &Gaussian) -> bool {
    su3_surface_contains(&[
        ProjPoint::affine(c_alpha.clone()),
        ProjPoint::affine(c_beta.clone()),
        ProjPoint::affine(c_alphabeta.clone()),
    ])
}

/// Coordinates of `L(h ⊕ g_A, φ̃∘[,])` for a Levi subset `A` of `A₂`:
/// `[c_γ, 1]` when `±γ ⊆ A`, with `c_γ = ε(X_γ, X_{−γ})`, and `[1, 0]`
/// otherwise. Order is `α, β, α+β`.
pub fn su3_coordinates(alg: &ChevalleyAlgebra, subset: RootSubset, phi: &[Gaussian]) -> Result<[ProjPoint; 3]> {
    let rs = alg.root_system();
    if rs.label() != "A2" || !rs.is_symmetric(subset) || !rs.is_closed(subset) {
        return Err(Error::InvalidInput("expected a symmetric closed subset of A2".into()));
    }
    let pair = classify::realize_pair(alg, subset, RootSubset::EMPTY, phi);
    let coord = |name: &str| -> Result<ProjPoint> {
        let g = rs.parse_root(name)?;
        Ok(if subset.contains(g) {
            ProjPoint::affine(pair.eps.eval(&alg.x_vector(g), &alg.x_vector(rs.neg(g))))
        } else {
            ProjPoint::infinity()
        })
    };
    Ok([coord("+a1")?, coord("+a2")?, coord("+a1+a2")?])
}
