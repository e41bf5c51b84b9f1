use gcstruct::cache::{build_algebra, ConstantCache};
use gcstruct::chevalley::ConjugationKind;
use gcstruct::classify::{self, check_isotropy, ClassifyRow};
use gcstruct::moduli::build_moduli_graph;
use gcstruct::nilpotent::{
    centralizer_nilpotent, certify_pair_centralizer_zero, certify_slice_generation, gc_params_nilpotent,
    probe_prop_ij, triple_from_partition, Partition,
};
use gcstruct::{CartanType, Error, Matrix, Rational, Result, RootSubset, RootSystem};
use serde_json::{json, Value};

use crate::{Cli, Command, Format, Global, Sigma};

pub struct Output {
    pub text: String,
    /// False when a requested certificate failed.
    pub certified: bool,
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, certified: true })
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Roots { ty } => roots(g, ty),
        Command::Classify { ty, isotropy, sigma, real } => classify(g, ty, isotropy, *sigma, *real),
        Command::Moduli { ty, isotropy } => moduli(g, ty, isotropy),
        Command::Nilpotent { n, partition, probe_trials, seed } => {
            nilpotent(g, *n, partition.as_deref(), *probe_trials, *seed)
        }
    }
}

/// Parses `A2` or a product such as `A1xB2`, enforcing the rank cap per factor.
pub fn parse_type(s: &str, rank_cap: usize) -> Result<RootSystem> {
    let types = s
        .split(['x', 'X'])
        .map(|t| CartanType::parse_with_cap(t.trim(), rank_cap))
        .collect::<Result<Vec<_>>>()?;
    RootSystem::product(&types)
}

pub fn parse_isotropy(rs: &RootSystem, s: &str) -> Result<RootSubset> {
    let s = s.trim();
    let delta = if s.eq_ignore_ascii_case("cartan") || s.is_empty() {
        RootSubset::EMPTY
    } else {
        RootSubset::from_indices(s.split(',').map(|r| rs.parse_root(r.trim())).collect::<Result<Vec<_>>>()?)
    };
    check_isotropy(rs, delta)?;
    Ok(delta)
}

fn json_text(v: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn no_dot(what: &str) -> Error {
    Error::InvalidInput(format!("dot output is only available for moduli, not {what}"))
}

fn roots(g: &Global, ty: &str) -> Result<Output> {
    let rs = parse_type(ty, g.rank_cap)?;
    let closed = rs.enumerate_closed_subsets(RootSubset::EMPTY, g.budget)?;
    let symmetric = closed.iter().filter(|&&s| rs.is_symmetric(s)).count();
    let parabolic = closed.iter().filter(|&&s| rs.is_parabolic_subset(s)).count();
    let cache = ConstantCache::resolve(g.cache_dir.as_deref());
    let alg = build_algebra(&rs, cache.as_ref())?;
    let list: Vec<Value> = (0..rs.len())
        .map(|i| json!({ "index": i, "name": rs.describe_root(i), "coords": rs.root(i), "height": rs.height(i) }))
        .collect();
    match g.format {
        Format::Json => ok(json_text(&json!({
            "type": rs.label(),
            "rank": rs.rank(),
            "cartan_matrix": rs.cartan_matrix(),
            "num_roots": rs.len(),
            "roots": list,
            "closed_subsets": closed.len(),
            "symmetric_closed_subsets": symmetric,
            "parabolic_subsets": parabolic,
            "algebra_dim": alg.dim(),
            "nonzero_structure_constants": alg.structure_constants().len(),
        }))?),
        Format::Csv => ok(csv_text(
            &["index", "name", "coords", "height"],
            (0..rs.len())
                .map(|i| {
                    let c: Vec<String> = rs.root(i).iter().map(i64::to_string).collect();
                    vec![i.to_string(), rs.describe_root(i), c.join(" "), rs.height(i).to_string()]
                })
                .collect(),
        )?),
        Format::Dot => Err(no_dot("roots")),
    }
}

fn real_rows(rs: &RootSystem, families: &[classify::RealFamily]) -> Vec<ClassifyRow> {
    families
        .iter()
        .map(|f| ClassifyRow {
            subset_mask: f.subset.to_string(),
            roots: rs.describe_subset(f.subset),
            parabolic: rs.is_parabolic_subset(f.subset),
            levi_core: f.subset.to_string(),
            phi_space_dim: f.phi_space.dim(),
            gc_predicate: if f.imaginary_roots.is_empty() {
                "true".into()
            } else {
                format!(
                    "phi(coroot(a)) purely imaginary for a in {{{}}}",
                    rs.describe_subset(f.imaginary_roots).join(", ")
                )
            },
        })
        .collect()
}

fn classify(g: &Global, ty: &str, isotropy: &str, sigma: Sigma, real: bool) -> Result<Output> {
    let rs = parse_type(ty, g.rank_cap)?;
    let delta = parse_isotropy(&rs, isotropy)?;
    let rows = match (sigma, real) {
        (Sigma::Compact, false) => {
            classify::compact_rows(&rs, &classify::gc_pairs_compact(&rs, delta, g.budget)?)
        }
        (Sigma::Compact, true) => real_rows(&rs, &classify::real_dirac_pairs_compact(&rs, delta, g.budget)?),
        (Sigma::Split, false) => {
            let cache = ConstantCache::resolve(g.cache_dir.as_deref());
            let alg = build_algebra(&rs, cache.as_ref())?;
            let conj = alg.conjugation(ConjugationKind::Split)?;
            let action = conj.root_action().expect("split form acts on roots");
            let subsets = classify::gc_subsets(&rs, action, delta, g.budget)?;
            classify::orbit_rows(&rs, &subsets, action, delta)
        }
        (Sigma::Split, true) => {
            return Err(Error::InvalidInput("real Dirac families are listed for the compact form only".into()))
        }
    };
    let sigma_name = match sigma {
        Sigma::Compact => "compact",
        Sigma::Split => "split",
    };
    match g.format {
        Format::Json => ok(json_text(&json!({
            "type": rs.label(),
            "sigma": sigma_name,
            "kind": if real { "real_dirac" } else { "generalized_complex" },
            "isotropy": rs.describe_subset(delta),
            "rows": rows,
        }))?),
        Format::Csv => ok(csv_text(
            &["subset_mask", "roots", "parabolic", "levi_core", "phi_space_dim", "gc_predicate"],
            rows.into_iter()
                .map(|r| {
                    vec![
                        r.subset_mask,
                        r.roots.join(" "),
                        r.parabolic.to_string(),
                        r.levi_core,
                        r.phi_space_dim.to_string(),
                        r.gc_predicate,
                    ]
                })
                .collect(),
        )?),
        Format::Dot => Err(no_dot("classify")),
    }
}

fn moduli(g: &Global, ty: &str, isotropy: &str) -> Result<Output> {
    let rs = parse_type(ty, g.rank_cap)?;
    let delta = parse_isotropy(&rs, isotropy)?;
    let m = build_moduli_graph(&rs, delta, g.budget)?;
    match g.format {
        Format::Json => {
            let mut v = m.to_json();
            v["type"] = json!(rs.label());
            v["isotropy"] = json!(rs.describe_subset(delta));
            v["component_sizes"] = json!(m.component_profile());
            ok(json_text(&v)?)
        }
        Format::Dot => ok(m.to_dot(&rs)),
        Format::Csv => {
            let mut component = vec![0; m.nodes.len()];
            for (c, members) in m.components.iter().enumerate() {
                for &i in members {
                    component[i] = c;
                }
            }
            ok(csv_text(
                &["index", "mask", "roots", "dim", "parabolic", "component", "gc_predicate"],
                m.nodes
                    .iter()
                    .enumerate()
                    .map(|(i, n)| {
                        vec![
                            i.to_string(),
                            n.subset.to_string(),
                            rs.describe_subset(n.subset).join(" "),
                            n.dim.to_string(),
                            n.gc_capable.to_string(),
                            component[i].to_string(),
                            n.gc_predicate.clone(),
                        ]
                    })
                    .collect(),
            )?)
        }
    }
}

fn matrix_strings(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(Rational::to_string).collect()).collect()
}

fn nilpotent(g: &Global, n: usize, partition: Option<&str>, trials: usize, seed: u64) -> Result<Output> {
    if n < 2 {
        return Err(Error::InvalidPartition(format!("sl_{n} needs n >= 2")));
    }
    let lambda = match partition {
        Some(p) => p.parse::<Partition>()?,
        None => Partition::regular(n),
    };
    let triple = triple_from_partition(n, &lambda)?;
    let triple_ok = triple.relations_hold() && triple.jordan_type() == lambda.parts();
    let params = gc_params_nilpotent(n, &lambda)?;
    let dim_ze = centralizer_nilpotent(&params.sl, &triple).dim();
    let pair_cert = certify_pair_centralizer_zero(n)?;
    let slice_cert = certify_slice_generation(n, &lambda)?;
    let probe = probe_prop_ij(n, &lambda, trials, seed)?;
    let certified = triple_ok && pair_cert && slice_cert && probe.violations == 0;
    let fields: Vec<(&str, String)> = vec![
        ("n", n.to_string()),
        ("partition", lambda.to_string()),
        ("triple_ok", triple_ok.to_string()),
        ("dim_Ze", dim_ze.to_string()),
        ("pair_cert", pair_cert.to_string()),
        ("slice_cert", slice_cert.to_string()),
        ("zz_dim", params.zz_e.dim().to_string()),
        ("probe_trials", probe.trials.to_string()),
        ("probe_filtered", probe.filtered.to_string()),
        ("probe_violations", probe.violations.to_string()),
    ];
    let text = match g.format {
        Format::Json => json_text(&json!({
            "n": n,
            "partition": lambda.parts(),
            "triple_ok": triple_ok,
            "dim_Ze": dim_ze,
            "pair_cert": pair_cert,
            "slice_cert": slice_cert,
            "zz_dim": params.zz_e.dim(),
            "probe": { "trials": probe.trials, "filtered": probe.filtered, "proper": probe.proper,
                       "violations": probe.violations, "seed": seed },
            "triple": {
                "e": matrix_strings(&triple.e),
                "h": matrix_strings(&triple.h),
                "f": matrix_strings(&triple.f),
            },
        }))?,
        Format::Csv => {
            csv_text(&["key", "value"], fields.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect())?
        }
        Format::Dot => return Err(no_dot("nilpotent")),
    };
    Ok(Output { text, certified })
}
