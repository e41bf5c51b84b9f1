//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::cell::OnceCell;
use std::time::{Duration, Instant};

use gcstruct::chevalley::{CartanPart, ChevalleyAlgebra, ConjugationKind};
use gcstruct::classify::{
    check_gc_pair, compact_gc_predicate, direct_gc_verdict, gc_subsets, invariant_cocycles, realize_pair, verify_symmetric_cover,
    CoverCheck,
};
use gcstruct::dirac::{self, TwoForm};
use gcstruct::moduli::{build_moduli_graph, su3_coordinates, su3_surface_contains, ProjPoint};
use gcstruct::nilpotent::{certify_pair_centralizer_zero, certify_slice_generation, probe_prop_ij, Partition};
use gcstruct::rootsys::DEFAULT_ENUMERATION_BUDGET as BUDGET;
use gcstruct::{Gaussian, RootSubset, RootSystem};
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn algebra(label: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::build(&RootSystem::build(label).unwrap())
}

fn phi_grid(rank: usize) -> Vec<Vec<Gaussian>> {
    let values = [
        Gaussian::int(0, 0),
        Gaussian::int(1, 0),
        Gaussian::int(-1, 0),
        Gaussian::int(0, 1),
        Gaussian::int(0, -1),
        Gaussian::int(1, 1),
    ];
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out
}

fn su2_moduli() -> Outcome {
    let rs = RootSystem::build("A1").unwrap();
    let m = build_moduli_graph(&rs, RootSubset::EMPTY, BUDGET).unwrap();
    let mut dims: Vec<usize> = m.nodes.iter().map(|n| n.dim).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    let profile = m.component_profile();
    let pair = m.components.iter().find(|c| c.len() == 2);
    let pair_ok = pair.is_some_and(|c| {
        let s: Vec<RootSubset> = c.iter().map(|&i| m.nodes[i].subset).collect();
        s.contains(&rs.all()) && s.contains(&RootSubset::EMPTY)
    });
    outcome(
        m.nodes.len() == 4 && dims == [1, 0, 0, 0] && profile == [2, 1, 1] && pair_ok,
        format!("nodes={} dims={dims:?} components={profile:?}", m.nodes.len()),
    )
}

fn su3_moduli() -> Outcome {
    let rs = RootSystem::build("A2").unwrap();
    let m = build_moduli_graph(&rs, RootSubset::EMPTY, BUDGET).unwrap();
    let profile = m.component_profile();
    let mut want = vec![5];
    want.extend([2; 6]);
    want.extend([1; 12]);
    let big_ok = m.components.iter().find(|c| c.len() == 5).is_some_and(|c| {
        let mut dims: Vec<usize> = c.iter().map(|&i| m.nodes[i].dim).collect();
        dims.sort_unstable();
        dims == [0, 1, 1, 1, 2] && c.iter().all(|&i| rs.is_levi_subsystem(m.nodes[i].subset, rs.all()))
    });
    let pairs_ok = m.components.iter().filter(|c| c.len() == 2).all(|c| {
        let mut d: Vec<(usize, bool)> = c.iter().map(|&i| (m.nodes[i].dim, m.nodes[i].gc_capable)).collect();
        d.sort();
        d == [(0, false), (1, true)]
    });
    outcome(
        m.nodes.len() == 29 && profile == want && big_ok && pairs_ok,
        format!("nodes={} components={profile:?}", m.nodes.len()),
    )
}

fn su3_surface() -> Outcome {
    let alg = algebra("A2");
    let rs = alg.root_system().clone();
    let m = build_moduli_graph(&rs, RootSubset::EMPTY, BUDGET).unwrap();
    let big = m.components.iter().find(|c| c.len() == 5).unwrap();
    let samples: Vec<Vec<Gaussian>> = [(0, 0), (1, 0), (-2, 1), (0, 3), (3, -1)]
        .iter()
        .flat_map(|&(a, b)| {
            [(1, 1), (0, -1), (2, 0), (-1, 4), (5, 2)]
                .iter()
                .map(move |&(c, d)| vec![Gaussian::int(a, b), Gaussian::int(c, d)])
        })
        .collect();
    let mut checked = 0;
    let mut bad = 0;
    for &i in big {
        for phi in &samples {
            let p = su3_coordinates(&alg, m.nodes[i].subset, phi).unwrap();
            checked += 1;
            if !su3_surface_contains(&p) {
                bad += 1;
            }
        }
    }
    // The identification table itself, with c ranging over the samples.
    let inf = ProjPoint::infinity;
    for phi in &samples {
        let c = phi[0].clone();
        for p in [
            [ProjPoint::affine(c.clone()), inf(), inf()],
            [inf(), ProjPoint::affine(c.clone()), inf()],
            [inf(), inf(), ProjPoint::affine(c.clone())],
            [inf(), inf(), inf()],
        ] {
            checked += 1;
            if !su3_surface_contains(&p) {
                bad += 1;
            }
        }
    }
    outcome(bad == 0 && samples.len() >= 20, format!("{checked} points, {} phi samples, {bad} off-surface", samples.len()))
}

struct SweepStats {
    cases: usize,
    gc_true: usize,
    gc_disagree: usize,
    predicate_disagree: usize,
    integrability_disagree: usize,
    elapsed: Duration,
}

fn gc_sweep() -> SweepStats {
    let t = Instant::now();
    let mut stats = SweepStats {
        cases: 0,
        gc_true: 0,
        gc_disagree: 0,
        predicate_disagree: 0,
        integrability_disagree: 0,
        elapsed: Duration::ZERO,
    };
    for label in ["A1", "A2", "B2"] {
        let alg = algebra(label);
        let rs = alg.root_system().clone();
        let sigma = alg.conjugation(ConjugationKind::Compact).unwrap();
        let subsets = rs.enumerate_closed_subsets(RootSubset::EMPTY, BUDGET).unwrap();
        let grid = phi_grid(rs.rank());
        let results: Vec<[bool; 4]> = subsets
            .par_iter()
            .flat_map_iter(|&a| grid.iter().map(move |phi| (a, phi)))
            .map(|(a, phi)| {
                let pair = realize_pair(&alg, a, RootSubset::EMPTY, phi);
                let report = check_gc_pair(&alg, &pair, &sigma);
                let direct = direct_gc_verdict(&alg, &pair, &sigma);
                let l = dirac::make_l(&pair.eps);
                let integrable = alg.is_subalgebra(pair.e()) && pair.eps.is_cocycle(&alg).unwrap_or(false);
                let predicate = compact_gc_predicate(&rs, a, RootSubset::EMPTY, phi);
                [
                    report.verdict != direct,
                    dirac::is_double_subalgebra(&alg, &l) != integrable,
                    predicate != direct,
                    direct,
                ]
            })
            .collect();
        stats.cases += results.len();
        stats.gc_disagree += results.iter().filter(|r| r[0]).count();
        stats.integrability_disagree += results.iter().filter(|r| r[1]).count();
        stats.predicate_disagree += results.iter().filter(|r| r[2]).count();
        stats.gc_true += results.iter().filter(|r| r[3]).count();
    }
    stats.elapsed = t.elapsed();
    stats
}

fn gc_oracle(stats: &SweepStats) -> Outcome {
    outcome(
        stats.gc_disagree == 0 && stats.predicate_disagree == 0 && stats.elapsed < Duration::from_secs(60),
        format!(
            "{} (A, phi) cases, {} generalized complex; checklist vs direct {} disagreements; combinatorial predicate vs direct {} disagreements",
            stats.cases, stats.gc_true, stats.gc_disagree, stats.predicate_disagree
        ),
    )
}

/// Beyond the closed-subset sweep, every subset of A1 and A2 is paired with
/// both exact forms and non-cocycle wedges, so both sides of the
/// equivalence are exercised.
fn integrability(stats: &SweepStats) -> Outcome {
    let mut cases = stats.cases;
    let mut bad = stats.integrability_disagree;
    let mut non_integrable = 0;
    for label in ["A1", "A2"] {
        let alg = algebra(label);
        let rs = alg.root_system().clone();
        let n = rs.len();
        let forms: Vec<Vec<Gaussian>> = phi_grid(rs.rank()).into_iter().step_by(5).collect();
        for mask in 0..1u128 << n {
            let a = RootSubset(mask);
            let e = alg.subalgebra_from_subset(a, &CartanPart::Full, false).unwrap();
            let mut candidates: Vec<TwoForm> =
                forms.iter().map(|phi| realize_pair(&alg, a, RootSubset::EMPTY, phi).eps).collect();
            for x in 0..alg.dim() {
                for y in x + 1..alg.dim() {
                    let w = dirac::wedge(&alg.unit(x), &alg.unit(y));
                    candidates.push(TwoForm::restrict(e.clone(), &w));
                }
            }
            for eps in candidates {
                let l = dirac::make_l(&eps);
                let integrable = alg.is_subalgebra(&e) && eps.is_cocycle(&alg).unwrap_or(false);
                if !integrable {
                    non_integrable += 1;
                }
                cases += 1;
                if dirac::is_double_subalgebra(&alg, &l) != integrable {
                    bad += 1;
                }
            }
        }
    }
    outcome(bad == 0, format!("{cases} cases ({non_integrable} non-integrable), {bad} disagreements"))
}

fn split_rigidity() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for label in ["A2", "B2", "G2"] {
        let alg = algebra(label);
        let rs = alg.root_system().clone();
        let sigma = alg.conjugation(ConjugationKind::Split).unwrap();
        let got = gc_subsets(&rs, sigma.root_action().unwrap(), RootSubset::EMPTY, BUDGET).unwrap();
        pass &= got == [rs.all()];
        details.push(format!("{label}:{}", got.len()));
    }
    outcome(pass, format!("GC subsets per type {}", details.join(" ")))
}

fn symmetric_cover() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for label in ["A2", "B2", "G2", "A3"] {
        let rs = RootSystem::build(label).unwrap();
        let t = Instant::now();
        let r = verify_symmetric_cover(&rs, BUDGET).unwrap();
        let el = t.elapsed();
        pass &= matches!(r, CoverCheck::Success { .. }) && el < Duration::from_secs(60);
        details.push(format!("{label}:{}({:.2}s)", if matches!(r, CoverCheck::Success { .. }) { "ok" } else { "counterexample" }, el.as_secs_f64()));
    }
    outcome(pass, details.join(" "))
}

fn sl_certificates() -> Outcome {
    let pair_ok = (2..=6).into_par_iter().all(|n| certify_pair_centralizer_zero(n).unwrap());
    let slices: Vec<(usize, Partition)> =
        (2..=5).flat_map(|n| Partition::all(n).into_iter().map(move |p| (n, p))).collect();
    let slice_ok = slices.par_iter().all(|(n, p)| certify_slice_generation(*n, p).unwrap());
    let mut violations = 0;
    let mut filtered = 0;
    for (n, p) in [(2, "2"), (3, "3"), (3, "2,1"), (4, "2,2")] {
        let r = probe_prop_ij(n, &p.parse().unwrap(), 100, 20240611).unwrap();
        violations += r.violations;
        filtered += r.filtered;
    }
    outcome(
        pair_ok && slice_ok && violations == 0,
        format!(
            "pair centralizer n=2..6 {pair_ok}, slice generation on {} partitions {slice_ok}, probe 4x100 trials ({filtered} covering) {violations} violations",
            slices.len()
        ),
    )
}

fn push_pull() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for label in ["A1", "A2"] {
        let alg = algebra(label);
        let rs = alg.root_system().clone();
        let k = alg.cartan_subspace();
        let pi = dirac::quotient_map(&k);
        let k_lift = dirac::lift_vectors(&k);
        for a in rs.enumerate_closed_subsets(RootSubset::EMPTY, BUDGET).unwrap() {
            let e = alg.subalgebra_from_subset(a, &CartanPart::Full, true).unwrap();
            let basis = invariant_cocycles(&alg, &e, &k).unwrap();
            let mut forms = vec![TwoForm::zero(e.clone())];
            for (i, f) in basis.iter().enumerate() {
                forms.push(f.clone());
                forms.push(f.scale(&Gaussian::int(i as i64 + 1, -2)));
            }
            if basis.len() > 1 {
                forms.push(basis.iter().skip(1).fold(basis[0].clone(), |acc, f| acc.add(f).unwrap()));
            }
            for eps in forms {
                let l = dirac::make_l(&eps);
                let dirac_sub = dirac::is_maximal_isotropic(&l) && dirac::is_double_subalgebra(&alg, &l);
                if !dirac_sub || !k_lift.is_subspace_of(&l) {
                    bad += 1;
                    continue;
                }
                let d = dirac::pushforward(&pi, &l).unwrap();
                let back = dirac::pullback(&pi, &d).unwrap();
                let again = dirac::pushforward(&pi, &back).unwrap();
                checked += 1;
                if back != l || again != d {
                    bad += 1;
                }
            }
        }
    }
    outcome(bad == 0 && checked > 0, format!("{checked} Dirac subalgebras containing k, {bad} failures"))
}

fn soundness() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for label in ["A1", "A2", "A3", "B2", "G2"] {
        let alg = algebra(label);
        let jac = alg.jacobi_failures();
        let kill = alg.killing_is_invariant();
        let anti = alg.is_antisymmetric();
        let mut sig = true;
        for kind in [ConjugationKind::Compact, ConjugationKind::Split] {
            let s = alg.conjugation(kind).unwrap();
            sig &= s.is_involution() && s.is_automorphism_of(&alg);
        }
        pass &= jac == 0 && kill && anti && sig;
        details.push(format!("{label}:jacobi_failures={jac},killing={kill},sigma={sig}"));
    }
    outcome(pass, details.join(" "))
}

fn main() {
    let start = Instant::now();
    let mut results: Vec<(usize, &str, Outcome, Duration)> = Vec::new();
    let mut run = |id: usize, name: &'static str, limit: Option<Duration>, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let mut o = f();
        let el = t.elapsed();
        if let Some(lim) = limit {
            if el > lim {
                o.pass = false;
                o.detail.push_str(&format!("; exceeded {:.0}s limit", lim.as_secs_f64()));
            }
        }
        results.push((id, name, o, el));
    };
    let secs = |s| Some(Duration::from_secs(s));
    run(1, "SU2/T moduli", secs(1), &su2_moduli);
    run(2, "SU3/T moduli", secs(5), &su3_moduli);
    run(3, "SU3 surface", None, &su3_surface);
    let sweep = OnceCell::new();
    run(4, "GC oracle equivalence", secs(60), &|| gc_oracle(sweep.get_or_init(gc_sweep)));
    run(5, "Integrability equivalence", None, &|| integrability(sweep.get_or_init(gc_sweep)));
    run(6, "Split-form rigidity", None, &split_rigidity);
    run(7, "Symmetric cover lemma", None, &symmetric_cover);
    run(8, "sl_n certificates", secs(120), &sl_certificates);
    run(9, "Push/pull identities", None, &push_pull);
    run(10, "Algebra soundness", None, &soundness);

    let mut failed = 0;
    for (id, name, o, el) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {tag} [{name}] ({:.2}s) {}", el.as_secs_f64(), o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.2}s", results.len() - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
