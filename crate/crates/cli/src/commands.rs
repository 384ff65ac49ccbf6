use std::fs;
use std::path::{Path, PathBuf};

use filiform_core::catalog::{self, Family, FamilySpec, IsoViolation, QuotientMatch};
use filiform_core::exactnum::{format_rational, parse_rational};
use filiform_core::linalg::{unit_vector, vector_to_json};
use filiform_core::tgs::{self, SearchOptions};
use filiform_core::{m01, m03, InnerProduct, LieAlgebra, Matrix, RadNum, Rational, Scalar, Subspace, Verdict};
use log::info;
use serde_json::{json, Value};

use crate::io::{read_json, render, scalar_kind, versioned, write_json};
use crate::{Command, FamilyArgs};

pub struct Context {
    pub out: Option<PathBuf>,
    pub verbose: bool,
}

/// Exit status of a completed run; input errors never reach this type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Verified = 0,
    Refuted = 1,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Verified
        } else {
            Outcome::Refuted
        }
    }
}

type CmdResult = Result<Outcome, String>;

fn core<T>(r: filiform_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn emit(ctx: &Context, report: Value) -> Result<(), String> {
    match &ctx.out {
        Some(path) => write_json(path, &report),
        None => {
            print!("{}", render(&versioned(report)));
            Ok(())
        }
    }
}

fn parse_rat(name: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("--{name}: {e}"))
}

fn family_spec(name: &str, dim: Option<usize>, alpha: Option<&str>) -> Result<FamilySpec, String> {
    let family = if name == "g" {
        let n = dim.ok_or("family g needs --dim")?;
        Family::g(n).ok_or_else(|| format!("g_{{n,α}} exists for n = 7..11, not {n}"))?
    } else {
        core(name.parse::<Family>())?
    };
    let dim = match (dim, family.fixed_dim()) {
        (Some(d), _) => d,
        (None, Some(d)) => d,
        (None, None) => return Err(format!("family {name} needs --dim")),
    };
    let alpha = alpha.map(|a| parse_rat("alpha", a)).transpose()?;
    Ok(FamilySpec { family, dim, alpha })
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, String> {
        family_spec(&self.family, self.dim, self.alpha.as_deref())
    }
}

fn load_algebra<S: Scalar>(value: &Value) -> Result<LieAlgebra<S>, String> {
    core(LieAlgebra::from_json(value))
}

fn load_ip<S: Scalar>(path: Option<&Path>, dim: usize) -> Result<InnerProduct<S>, String> {
    match path {
        None => Ok(InnerProduct::identity(dim)),
        Some(p) => {
            let ip: InnerProduct<S> = core(InnerProduct::from_json(&read_json(p)?))?;
            if ip.dim() != dim {
                return Err(format!("inner product of dimension {} for an algebra of dimension {dim}", ip.dim()));
            }
            Ok(ip)
        }
    }
}

pub fn run(command: Command, ctx: &Context) -> CmdResult {
    match command {
        Command::Build(args) => build(&args, ctx),
        Command::Jacobi { algebra } => dispatch(&algebra, |v| jacobi::<Rational>(v, ctx), |v| jacobi::<RadNum>(v, ctx)),
        Command::Classify { algebra } => classify(&algebra, ctx),
        Command::TgsCheck { algebra, ip, subalgebra } => dispatch(
            &algebra,
            |v| tgs_check::<Rational>(v, &ip, &subalgebra, ctx),
            |v| tgs_check::<RadNum>(v, &ip, &subalgebra, ctx),
        ),
        Command::AdaptedBasis { algebra, ip } => dispatch(
            &algebra,
            |v| adapted::<Rational>(v, ip.as_deref(), ctx),
            |v| adapted::<RadNum>(v, ip.as_deref(), ctx),
        ),
        Command::SearchGraded { algebra, ip, adapted, cap, include_first } => {
            let options = SearchOptions { cap, include_first };
            dispatch(
                &algebra,
                |v| search::<Rational>(v, ip.as_deref(), adapted, options, ctx),
                |v| search::<RadNum>(v, ip.as_deref(), adapted, options, ctx),
            )
        }
        Command::ConstructM01 { k, magnitudes } => construct_m01(k, magnitudes.as_deref(), ctx),
        Command::KernelK { k, a, b, c } => kernel_k(k, [&a, &b, &c], ctx),
        Command::QuotientCheck { source, target, target_dim, target_alpha } => {
            quotient_check(&source, &target, target_dim, target_alpha.as_deref(), ctx)
        }
        Command::IsoCheck { src, dst, map, family, dim, alpha } => match (src, dst, map, family) {
            (Some(s), Some(d), Some(m), None) => iso_files(&s, &d, &m, ctx),
            (None, None, None, Some(f)) => iso_builtin(&family_spec(&f, dim, alpha.as_deref())?, ctx),
            _ => Err("iso-check takes either SRC DST MAP files or --family (with --dim/--alpha)".into()),
        },
    }
}

/// Runs the rational or radical variant according to the algebra file's scalar tag.
fn dispatch(
    path: &Path,
    rational: impl FnOnce(&Value) -> CmdResult,
    radical: impl FnOnce(&Value) -> CmdResult,
) -> CmdResult {
    let value = read_json(path)?;
    match scalar_kind(&value) {
        "rational" => rational(&value),
        "radical" => radical(&value),
        other => Err(format!("unknown scalar kind `{other}`")),
    }
}

fn build(args: &FamilyArgs, ctx: &Context) -> CmdResult {
    let spec = args.spec()?;
    let g = core(catalog::build(&spec))?;
    info!("built {} with {} nonzero brackets", spec.label(), g.nonzero_brackets().count());
    let mut report = g.to_json();
    report["family"] = spec.to_json();
    emit(ctx, report)?;
    Ok(Outcome::Verified)
}

fn jacobi<S: Scalar>(value: &Value, ctx: &Context) -> CmdResult {
    let g: LieAlgebra<S> = load_algebra(value)?;
    let violation_json = |v: &filiform_core::lie::JacobiViolation<S>| json!({ "triple": [v.triple.0, v.triple.1, v.triple.2], "residual": vector_to_json(&v.residual) });
    let verdict = g.jacobi_check();
    let mut report = json!({
        "verdict": verdict.is_ok(),
        "violation": verdict.violation().map(violation_json),
    });
    if ctx.verbose {
        report["violations"] = g.jacobi_violations().iter().map(violation_json).collect();
    }
    emit(ctx, report)?;
    Ok(Outcome::from_bool(verdict.is_ok()))
}

fn classify(path: &Path, ctx: &Context) -> CmdResult {
    let g: LieAlgebra<Rational> = load_algebra(&read_json(path)?)?;
    let membership = core(catalog::classify_families(&g))?;
    let grading = g.grading_check();
    emit(
        ctx,
        json!({
            "dim": g.dim(),
            "graded": grading.is_ok(),
            "nilpotent": g.is_nilpotent(),
            "filiform": g.is_filiform(),
            "o1": membership.o1,
            "o2": membership.o2,
            "basis_relative": true,
        }),
    )?;
    Ok(Outcome::Verified)
}

fn tgs_check<S: Scalar>(value: &Value, ip: &Path, h: &Path, ctx: &Context) -> CmdResult {
    let g: LieAlgebra<S> = load_algebra(value)?;
    let ip: InnerProduct<S> = load_ip(Some(ip), g.dim())?;
    let h: Subspace<S> = core(Subspace::from_json(&read_json(h)?, g.dim()))?;
    let report = core(tgs::is_totally_geodesic(&g, &ip, &h))?;
    let mut body = report.to_json();
    body["dim_h"] = json!(h.dim());
    body["codim"] = json!(g.dim() - h.dim());
    emit(ctx, body)?;
    Ok(Outcome::from_bool(report.verdict))
}

fn adapted<S: Scalar>(value: &Value, ip: Option<&Path>, ctx: &Context) -> CmdResult {
    let g: LieAlgebra<S> = load_algebra(value)?;
    let ip: InnerProduct<S> = load_ip(ip, g.dim())?;
    let basis = core(tgs::adapted_basis(&g, &ip))?;
    emit(ctx, json!({ "basis": basis.iter().map(|v| vector_to_json(v)).collect::<Vec<_>>() }))?;
    Ok(Outcome::Verified)
}

fn search<S: Scalar>(
    value: &Value,
    ip: Option<&Path>,
    adapted: bool,
    options: SearchOptions,
    ctx: &Context,
) -> CmdResult {
    let g: LieAlgebra<S> = load_algebra(value)?;
    let n = g.dim();
    if n > options.cap {
        return Err(filiform_core::Error::SearchTooLarge { n, cap: options.cap }.to_string());
    }
    let ip: InnerProduct<S> = load_ip(ip, n)?;
    let basis = if adapted { core(tgs::adapted_basis(&g, &ip))? } else { (0..n).map(|i| unit_vector(n, i)).collect() };
    info!("searching {} subsets", 1usize << (n - usize::from(!options.include_first)));
    let report = core(tgs::graded_tgs_search(&g, &ip, &basis, options))?;
    let mut body = report.to_json();
    body["dim"] = json!(n);
    body["half_dim"] = json!(n / 2);
    body["basis"] = json!(if adapted { "adapted" } else { "structure" });
    body["best"] = report.best().cloned().collect::<Vec<_>>().into();
    emit(ctx, body)?;
    Ok(Outcome::Verified)
}

fn construct_m01(k: usize, magnitudes: Option<&[String]>, ctx: &Context) -> CmdResult {
    let dir = ctx.out.as_ref().ok_or("construct-m01 needs --out DIR")?;
    let mags = magnitudes
        .map(|ms| ms.iter().map(|m| parse_rat("magnitudes", m.trim())).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    if k < 3 {
        return Err(filiform_core::Error::BadK(k).to_string());
    }
    let c = match m01::construct(k, mags.as_deref()) {
        Ok(c) => c,
        Err(filiform_core::Error::CertificationFailed { stage, detail }) => {
            let body = json!({ "k": k, "certified": false, "stage": stage, "detail": detail });
            print!("{}", render(&versioned(body)));
            return Ok(Outcome::Refuted);
        }
        Err(e) => return Err(e.to_string()),
    };
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let basis = core(m01::presentation_basis(&c))?;
    write_json(&dir.join("algebra.json"), &c.algebra.to_json())?;
    write_json(&dir.join("subalgebra.json"), &c.h.to_json())?;
    write_json(
        &dir.join("witness.json"),
        &json!({
            "basis": basis.iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
            "target": FamilySpec::m01(k).to_json(),
        }),
    )?;
    let report = c.report_json();
    write_json(&dir.join("report.json"), &report)?;
    print!(
        "{}",
        render(&versioned(json!({
            "k": k,
            "certified": c.report.all_passed(),
            "out": dir.display().to_string(),
            "files": ["algebra.json", "subalgebra.json", "witness.json", "report.json"],
        })))
    );
    Ok(Outcome::from_bool(c.report.all_passed()))
}

fn kernel_k(k: usize, abc: [&str; 3], ctx: &Context) -> CmdResult {
    let combo = [parse_rat("a", abc[0])?, parse_rat("b", abc[1])?, parse_rat("c", abc[2])?];
    let mut report = core(m03::kernel_report(k, &combo))?;
    let rank_ok = core(m03::rank_assertion(k, &combo))?.is_ok();
    report["rank_ok"] = json!(rank_ok);
    report["combination"] = json!(combo.iter().map(format_rational).collect::<Vec<_>>());
    let ok = rank_ok && report["formula_in_kernel"] == json!(true) && !report["proportionality"].is_null();
    emit(ctx, report)?;
    Ok(Outcome::from_bool(ok))
}

fn quotient_check(
    source: &FamilyArgs,
    target: &str,
    target_dim: Option<usize>,
    target_alpha: Option<&str>,
    ctx: &Context,
) -> CmdResult {
    let big = source.spec()?;
    let small_dim = target_dim.unwrap_or(big.dim.saturating_sub(1));
    let mut small = family_spec(target, Some(small_dim), target_alpha)?;
    if small.alpha.is_none() && small.family.has_parameter() {
        small.alpha = big.alpha.clone();
    }
    let result = core(catalog::quotient_matches_family(&big, &small))?;
    let (kind, detail) = match &result {
        QuotientMatch::Exact => ("exact", Value::Null),
        QuotientMatch::Rescaled(m) => ("rescaled", json!({ "map": m.to_json() })),
        QuotientMatch::Mismatch { i, j } => ("mismatch", json!({ "pair": [i, j] })),
    };
    emit(ctx, json!({ "source": big.to_json(), "target": small.to_json(), "match": kind, "detail": detail }))?;
    Ok(Outcome::from_bool(!matches!(result, QuotientMatch::Mismatch { .. })))
}

fn iso_json(verdict: &Verdict<IsoViolation>) -> Value {
    match verdict {
        Verdict::Ok => json!({ "verdict": true }),
        Verdict::Violation(IsoViolation::Singular) => json!({ "verdict": false, "reason": "singular" }),
        Verdict::Violation(IsoViolation::Bracket { i, j }) => {
            json!({ "verdict": false, "reason": "bracket", "pair": [i, j] })
        }
    }
}

fn iso_files(src: &Path, dst: &Path, map: &Path, ctx: &Context) -> CmdResult {
    let src_v = read_json(src)?;
    let dst_v = read_json(dst)?;
    let map_v = read_json(map)?;
    let map_v = map_v.get("map").cloned().unwrap_or(map_v);
    let radical = [&src_v, &dst_v].iter().any(|v| scalar_kind(v) == "radical");
    let verdict = if radical {
        let m: Matrix<RadNum> = core(Matrix::from_json(&map_v))?;
        core(catalog::iso_witness_check(&load_algebra::<RadNum>(&src_v)?, &load_algebra::<RadNum>(&dst_v)?, &m))?
    } else {
        let m: Matrix<Rational> = core(Matrix::from_json(&map_v))?;
        core(catalog::iso_witness_check(&load_algebra::<Rational>(&src_v)?, &load_algebra::<Rational>(&dst_v)?, &m))?
    };
    let ok = verdict.is_ok();
    emit(ctx, iso_json(&verdict))?;
    Ok(Outcome::from_bool(ok))
}

fn iso_builtin(spec: &FamilySpec, ctx: &Context) -> CmdResult {
    let Some((dst, map)) = core(catalog::builtin_witness(spec))? else {
        return Err(format!("no built-in witness for {}", spec.label()));
    };
    let src = core(catalog::build_unrestricted(spec))?;
    let verdict = core(catalog::iso_witness_check(&src, &core(catalog::build(&dst))?, &map))?;
    let mut body = iso_json(&verdict);
    body["source"] = spec.to_json();
    body["target"] = dst.to_json();
    body["map"] = map.to_json();
    emit(ctx, body)?;
    Ok(Outcome::from_bool(verdict.is_ok()))
}
