use std::path::{Path, PathBuf};

use mengerkit_core::error::Result;
use mengerkit_core::forge::{generate_concrete, GeneratorConfig};
use mengerkit_core::format::{
    load_algebra, load_relation, save_algebra, save_relation, save_representation, AlgebraFile,
};
use mengerkit_core::frames::check_representability;
use mengerkit_core::func::concrete_projection_relations;
use mengerkit_core::lab::{closure_chi, ChiKind};
use mengerkit_core::represent::{is_faithful, representation_relations, verify_homomorphism, RepresentationBuilder};
use mengerkit_core::theorem::{
    least_quasiorder_oracle, roundtrip, verify_conditions, word_system_crosscheck, Target, TargetKind,
};
use mengerkit_core::{lab, AbstractAlgebra, BinRelation, Error, Flavor, Outcome};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{condition_lines, outcome_line, to_value, Report, Verdict};
use crate::{Cli, Command, RelationArgs};

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Check { algebra } => check(cli.flavor, algebra),
        Command::Relations { algebra, out_dir } => relations(algebra, out_dir),
        Command::Closure { algebra, pi, kind, out } => {
            closure(cli.flavor, algebra, pi.as_deref(), kind.map(Into::into), out.as_deref())
        }
        Command::Classify {
            algebra,
            target,
            relations,
        } => classify(cli.flavor, algebra, *target, relations),
        Command::Represent {
            algebra,
            chi,
            gamma,
            point_all: _,
            out,
        } => represent(cli.flavor, algebra, chi, gamma.as_deref(), out),
        Command::Verify {
            algebra,
            target,
            relations,
            bounds,
        } => verify(cli.flavor, algebra, *target, relations, *bounds),
        Command::Oracle { algebra, pi, cap } => oracle(cli.flavor, algebra, pi.as_deref(), *cap),
        Command::Generate {
            n,
            base,
            gens,
            seed,
            count,
            out_dir,
            closure_cap,
        } => generate(cli.flavor, *n, *base, *gens, *seed, *count, out_dir, *closure_cap),
    }
}

fn load(path: &Path) -> Result<(AlgebraFile, AbstractAlgebra)> {
    let file = load_algebra(path)?;
    let alg = file.to_abstract()?;
    Ok((file, alg))
}

/// The flavor to work in, rejecting a Menger request on a plain algebra.
fn flavor_for(requested: Option<Flavor>, alg: &AbstractAlgebra) -> Result<Flavor> {
    let flavor = requested.unwrap_or(alg.flavor());
    if flavor == Flavor::Menger && !alg.is_menger() {
        return Err(Error::Input(
            "--flavor menger needs an algebra with a `superposition` table".into(),
        ));
    }
    Ok(flavor)
}

fn view(alg: &AbstractAlgebra, flavor: Flavor) -> AbstractAlgebra {
    match flavor {
        Flavor::Menger => alg.clone(),
        Flavor::Plain => alg.as_plain(),
    }
}

fn load_rel(path: Option<&Path>, size: usize, field: &str) -> Result<Option<BinRelation>> {
    let Some(path) = path else { return Ok(None) };
    let r = load_relation(path)?;
    if r.size() != size {
        return Err(Error::Input(format!(
            "{field} ({}): relation has size {}, the algebra has {size} elements",
            path.display(),
            r.size()
        )));
    }
    Ok(Some(r))
}

fn matrix_lines(r: &BinRelation) -> Vec<String> {
    r.to_string().lines().map(|l| format!("  {l}")).collect()
}

fn check(flavor: Option<Flavor>, path: &Path) -> Result<Report> {
    let (_, alg) = load(path)?;
    let flavor = flavor_for(flavor, &alg)?;
    let alg = view(&alg, flavor);
    let mut checks: Vec<(&str, Outcome)> = vec![("associativity", alg.check_associativity())];
    if flavor == Flavor::Menger {
        checks.push(("Menger identities", alg.check_menger_identities()?));
    }
    checks.push(("representability", check_representability(&alg)?));
    let pass = checks.iter().all(|(_, o)| o.is_pass());
    let mut summary = vec![format!(
        "{flavor} algebra, n = {}, {} elements, zero {}",
        alg.arity(),
        alg.size(),
        alg.zero().map_or("none".to_string(), |z| z.to_string())
    )];
    summary.extend(checks.iter().map(|(name, o)| outcome_line(name, o)));
    let results = json!({
        "flavor": flavor,
        "arity": alg.arity(),
        "size": alg.size(),
        "zero": alg.zero(),
        "checks": checks.iter().map(|(name, o)| json!({ "name": name, "outcome": o })).collect::<Vec<_>>(),
    });
    Ok(Report::new(Verdict::from_pass(pass), results, summary))
}

fn relations(path: &Path, out_dir: &Path) -> Result<Report> {
    let file = load_algebra(path)?;
    let Some(concrete) = file.concrete() else {
        return Err(Error::Input("field `kind`: relations need a concrete algebra".into()));
    };
    let (chi, gamma, pi) = concrete_projection_relations(concrete);
    std::fs::create_dir_all(out_dir).map_err(|e| Error::Input(format!("{}: {e}", out_dir.display())))?;
    let mut summary = Vec::new();
    let mut results = serde_json::Map::new();
    for (name, r) in [("chi", &chi), ("gamma", &gamma), ("pi", &pi)] {
        let target = out_dir.join(format!("{name}.json"));
        save_relation(&target, r)?;
        summary.push(format!("{name} ({} pairs) -> {}", r.len(), target.display()));
        summary.extend(matrix_lines(r));
        results.insert(name.to_string(), json!(r.to_matrix()));
    }
    Ok(Report::new(Verdict::Pass, Value::Object(results), summary))
}

fn closure(
    flavor: Option<Flavor>,
    path: &Path,
    pi_path: Option<&Path>,
    kind: Option<ChiKind>,
    out: Option<&Path>,
) -> Result<Report> {
    let (_, alg) = load(path)?;
    let flavor = match kind {
        // the bullet kinds make sense on any algebra
        Some(k) if k.is_bullet() => flavor.unwrap_or(Flavor::Plain),
        _ => flavor_for(flavor, &alg)?,
    };
    let kind = kind.unwrap_or(ChiKind::for_flavor(pi_path.is_some(), flavor));
    if kind.needs_pi() != pi_path.is_some() {
        let msg = if kind.needs_pi() {
            "needs --pi"
        } else {
            "does not take --pi"
        };
        return Err(Error::Input(format!("kind {kind} {msg}")));
    }
    let pi = load_rel(pi_path, alg.size(), "--pi")?;
    let chi = closure_chi(&view(&alg, flavor), pi.as_ref(), kind)?;
    let mut summary = vec![format!("{kind} closure ({} pairs)", chi.len())];
    summary.extend(matrix_lines(&chi));
    if let Some(out) = out {
        save_relation(out, &chi)?;
        summary.push(format!("written to {}", out.display()));
    }
    let results = json!({ "kind": kind, "matrix": chi.to_matrix() });
    Ok(Report::new(Verdict::Pass, results, summary))
}

fn classify(flavor: Option<Flavor>, path: &Path, kind: TargetKind, rels: &RelationArgs) -> Result<Report> {
    let (_, alg) = load(path)?;
    let flavor = flavor_for(flavor, &alg)?;
    let m = alg.size();
    let target = Target::new(
        kind,
        load_rel(rels.chi.as_deref(), m, "--chi")?,
        load_rel(rels.gamma.as_deref(), m, "--gamma")?,
        load_rel(rels.pi.as_deref(), m, "--pi")?,
    )?;
    let report = verify_conditions(&alg, &target, flavor)?;
    let mut summary = vec![format!("target {kind} ({flavor})")];
    summary.extend(condition_lines(&report.conditions));
    summary.push(if report.passed() {
        "the target is realized by a representation".into()
    } else {
        "the target is not realized by any representation".into()
    });
    Ok(Report::new(
        Verdict::from_pass(report.passed()),
        to_value(&report),
        summary,
    ))
}

fn represent(
    flavor: Option<Flavor>,
    path: &Path,
    chi_path: &Path,
    gamma_path: Option<&Path>,
    out: &Path,
) -> Result<Report> {
    let (_, alg) = load(path)?;
    let flavor = flavor_for(flavor, &alg)?;
    let m = alg.size();
    let chi = load_rel(Some(chi_path), m, "--chi")?.expect("path given");
    let gamma = load_rel(gamma_path, m, "--gamma")?;
    let builder = RepresentationBuilder::new(&alg, &chi, flavor)?;
    let rep = match &gamma {
        Some(g) => builder.sum_over_pairs(g)?,
        None => builder.sum_over_points()?,
    };
    let hom = verify_homomorphism(&rep, &alg)?;
    let faithful = is_faithful(&rep);
    let (chi_p, gamma_p, pi_p) = representation_relations(&rep)?;
    save_representation(out, &rep)?;
    let summary = vec![
        format!(
            "{} summands over {} points -> {}",
            rep.parts().len(),
            builder.universe().len(),
            out.display()
        ),
        outcome_line("homomorphism", &hom),
        outcome_line("faithful", &faithful),
        format!("chi_P = chi: {}", chi_p == chi),
    ];
    let results = json!({
        "parts": rep.parts().len(),
        "points": builder.universe().len(),
        "homomorphism": hom,
        "faithful": faithful,
        "chi": chi_p.to_matrix(),
        "gamma": gamma_p.to_matrix(),
        "pi": pi_p.to_matrix(),
    });
    Ok(Report::new(Verdict::from_pass(hom.is_pass()), results, summary))
}

struct VerifyResult {
    pass: bool,
    results: Value,
    summary: Vec<String>,
}

fn verify_one(
    flavor: Option<Flavor>,
    path: &Path,
    kind: TargetKind,
    rels: &RelationArgs,
    bounds: (usize, usize),
) -> Result<VerifyResult> {
    let (file, alg) = load(path)?;
    let flavor = flavor_for(flavor, &alg)?;
    let m = alg.size();
    let mut chi = load_rel(rels.chi.as_deref(), m, "--chi")?;
    let mut gamma = load_rel(rels.gamma.as_deref(), m, "--gamma")?;
    let mut pi = load_rel(rels.pi.as_deref(), m, "--pi")?;
    if let Some(c) = file.concrete() {
        let (c_chi, c_gamma, c_pi) = concrete_projection_relations(c);
        chi.get_or_insert(c_chi);
        gamma.get_or_insert(c_gamma);
        pi.get_or_insert(c_pi);
    }
    let pick = |r: Option<BinRelation>, used: bool| if used { r } else { None };
    let target = Target::new(
        kind,
        pick(chi, kind.uses_chi()),
        pick(gamma, kind.uses_gamma()),
        pick(pi, kind.uses_pi()),
    )?;
    let verdict = roundtrip(&alg, &target, flavor)?;

    // the bounded systems take π only when it is an l-regular equivalence
    let v = view(&alg, flavor);
    let pi_ok = target
        .pi()
        .filter(|p| lab::require_l_regular_equivalence(p, &v).is_ok());
    let cross = word_system_crosscheck(&alg, pi_ok, target.gamma(), bounds, flavor)?;

    let mut summary = vec![format!("{}: target {kind} ({flavor})", path.display())];
    summary.extend(condition_lines(&verdict.conditions.conditions));
    if let Some(rt) = &verdict.roundtrip {
        summary.push(format!("round trip through {} summands:", rt.parts));
        summary.extend(condition_lines(&rt.checks).into_iter().map(|l| format!("  {l}")));
    }
    for e in &cross.entries {
        summary.push(format!(
            "system {} up to {:?}: exact {}, truncated {}, saturated {}{}",
            e.system,
            bounds,
            e.exact_pass,
            e.truncated_pass,
            e.saturated,
            if e.consistent { "" } else { ", INCONSISTENT" }
        ));
    }
    let pass = verdict.conditions.passed() && verdict.consistent() && cross.consistent();
    if !verdict.consistent() {
        summary.push("the conditions hold but the round trip does not reproduce the target".into());
    }
    let results = json!({
        "algebra": path.display().to_string(),
        "verdict": verdict,
        "consistent": verdict.consistent() && cross.consistent(),
        "crosscheck": cross,
    });
    Ok(VerifyResult { pass, results, summary })
}

fn verify(
    flavor: Option<Flavor>,
    paths: &[PathBuf],
    kind: TargetKind,
    rels: &RelationArgs,
    bounds: (usize, usize),
) -> Result<Report> {
    if paths.len() > 1 && (rels.chi.is_some() || rels.gamma.is_some() || rels.pi.is_some()) {
        return Err(Error::Input("relation files need a single --algebra".into()));
    }
    // collected in argument order
    let all: Vec<Result<VerifyResult>> = paths
        .par_iter()
        .map(|p| verify_one(flavor, p, kind, rels, bounds))
        .collect();
    if paths.len() == 1 {
        let r = all.into_iter().next().expect("one algebra")?;
        return Ok(Report::new(Verdict::from_pass(r.pass), r.results, r.summary));
    }
    let mut worst = Verdict::Pass;
    let mut results = Vec::new();
    let mut summary = Vec::new();
    for (path, r) in paths.iter().zip(all) {
        match r {
            Ok(r) => {
                if !r.pass && worst == Verdict::Pass {
                    worst = Verdict::Fail;
                }
                results.push(r.results);
                summary.extend(r.summary);
            }
            Err(e) => {
                let err = Report::from_error(&e);
                // an unusable input outranks a failed verdict
                if err.exit_code > worst.exit_code() {
                    worst = err.verdict;
                }
                results.push(json!({ "algebra": path.display().to_string(), "error": e.to_string() }));
                summary.push(format!("{}: {e}", path.display()));
            }
        }
    }
    Ok(Report::new(worst, Value::Array(results), summary))
}

fn oracle(flavor: Option<Flavor>, path: &Path, pi_path: Option<&Path>, cap: usize) -> Result<Report> {
    let (_, alg) = load(path)?;
    let flavor = flavor_for(flavor, &alg)?;
    let pi = load_rel(pi_path, alg.size(), "--pi")?;
    let brute = least_quasiorder_oracle(&alg, pi.as_ref(), flavor, cap)?;
    let kind = ChiKind::for_flavor(pi.is_some(), flavor);
    let chi = closure_chi(&view(&alg, flavor), pi.as_ref(), kind)?;
    let agree = brute == chi;
    let mut summary = vec![format!("{kind} closure ({} pairs):", chi.len())];
    summary.extend(matrix_lines(&chi));
    summary.push(format!("least quasi-order by enumeration ({} pairs):", brute.len()));
    summary.extend(matrix_lines(&brute));
    summary.push(
        if agree {
            "PASS closure equals enumeration"
        } else {
            "FAIL closure differs from enumeration"
        }
        .into(),
    );
    let results = json!({
        "kind": kind,
        "closure": chi.to_matrix(),
        "oracle": brute.to_matrix(),
        "agree": agree,
    });
    Ok(Report::new(Verdict::from_pass(agree), results, summary))
}

#[allow(clippy::too_many_arguments)]
fn generate(
    flavor: Option<Flavor>,
    n: usize,
    base: usize,
    gens: usize,
    seed: u64,
    count: u64,
    out_dir: &Path,
    closure_cap: Option<usize>,
) -> Result<Report> {
    std::fs::create_dir_all(out_dir).map_err(|e| Error::Input(format!("{}: {e}", out_dir.display())))?;
    let flavor = flavor.unwrap_or(Flavor::Menger);
    let seeds: Vec<u64> = (seed..seed.saturating_add(count)).collect();
    let generated: Vec<Result<(u64, PathBuf, usize)>> = seeds
        .into_par_iter()
        .map(|s| {
            let mut cfg = GeneratorConfig::new(n, base, gens, s).with_flavor(flavor);
            if let Some(cap) = closure_cap {
                cfg = cfg.with_closure_cap(cap);
            }
            let alg = generate_concrete(&cfg)?;
            let path = out_dir.join(format!("algebra-{s}.json"));
            let size = alg.len();
            save_algebra(&path, &AlgebraFile::Concrete(alg))?;
            Ok((s, path, size))
        })
        .collect();
    let mut worst = Verdict::Pass;
    let mut results = Vec::new();
    let mut summary = Vec::new();
    for (s, r) in (seed..).zip(generated) {
        match r {
            Ok((s, path, size)) => {
                summary.push(format!("seed {s}: {size} functions -> {}", path.display()));
                results.push(json!({ "seed": s, "path": path.display().to_string(), "size": size }));
            }
            Err(e) => {
                // input errors are the same for every seed, so stop at once
                if let Error::Input(_) = e {
                    return Err(e);
                }
                worst = Verdict::CapacityError;
                summary.push(format!("seed {s}: {e}"));
                results.push(json!({ "seed": s, "error": e.to_string() }));
            }
        }
    }
    Ok(Report::new(worst, Value::Array(results), summary))
}
