use std::str::FromStr;

use approxsys::analysis::{
    error_bound_starlike, fde_error_bound, is_positive, uniform_bound_identical_step, BoundValue, ErrorBoundReport,
};
use approxsys::catalog::{catalog_get, circle_grid, segment_grid, CatalogEntry, EntryKind, Params};
use approxsys::exec::Execution;
use approxsys::numeric::{numeric_approximate, polyline_partition, straight_partition};
use approxsys::system::{build_approximants, Origin};
use approxsys::verify::{verify as run_suite, Scope};
use approxsys::GaussianRational;
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::output::{complex, exact, float, float_text, header, opt_float, Document};
use crate::EntryArgs;

/// Samples for the boundary estimate of `‖g_n − a_n‖` when the system is
/// not positive.
const BOUNDARY_SAMPLES: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    A,
    B,
    Uniform,
    Fde,
    ClosedForm,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            "uniform" => Ok(Variant::Uniform),
            "fde" => Ok(Variant::Fde),
            "closed-form" => Ok(Variant::ClosedForm),
            other => Err(format!("unknown bound variant `{other}` (expected A, B, uniform, fde or closed-form)")),
        }
    }
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::A => "A",
            Variant::B => "B",
            Variant::Uniform => "uniform",
            Variant::Fde => "fde",
            Variant::ClosedForm => "closed-form",
        }
    }
}

fn lib<T>(r: approxsys::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn load(args: &EntryArgs) -> Result<CatalogEntry, String> {
    let kind: EntryKind = lib(args.entry.parse())?;
    let accepts = kind.parameters();
    for (flag, given) in [("p", args.p.is_some()), ("R", args.radius.is_some()), ("alpha", args.alpha.is_some())] {
        if given && !accepts.contains(&flag) {
            return Err(format!("entry `{kind}` takes no parameter --{flag}"));
        }
    }
    lib(catalog_get(kind, Params { p: args.p, radius: args.radius, alpha: args.alpha }))
}

fn params_json(e: &CatalogEntry) -> Value {
    let mut m = Map::new();
    if let Some(p) = e.params.p.filter(|_| e.kind.parameters().contains(&"p")) {
        m.insert("p".into(), json!(p));
    }
    if e.kind.parameters().contains(&"R") {
        m.insert("R".into(), opt_float(e.params.radius));
    }
    if e.kind.parameters().contains(&"alpha") {
        m.insert("alpha".into(), opt_float(e.params.alpha));
    }
    Value::Object(m)
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let z: GaussianRational = lib(s.parse())?;
    Ok(z.to_complex())
}

fn parse_list(s: &str) -> Result<Vec<Complex64>, String> {
    s.split(',').map(parse_complex).collect()
}

fn parse_pair(s: &str, what: &str) -> Result<(Complex64, Complex64), String> {
    match parse_list(s)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(format!("{what} needs exactly two comma-separated values, got `{s}`")),
    }
}

pub fn list() -> Document {
    let entries: Vec<Value> = EntryKind::ALL
        .into_iter()
        .map(|k| {
            json!({
                "name": k.name(),
                "parameters": k.parameters(),
                "description": k.description(),
            })
        })
        .collect();
    let rows = EntryKind::ALL
        .into_iter()
        .map(|k| vec![k.name().to_string(), k.parameters().join(" "), k.description().to_string()])
        .collect();
    Document { json: json!({ "entries": entries }), header: header(&["name", "parameters", "description"]), rows }
}

pub fn approximate(args: &EntryArgs, all_rows: bool) -> Result<Document, String> {
    let e = load(args)?;
    let table = lib(build_approximants(&e.system, args.n))?;
    let coeffs = |i: usize| -> Vec<Value> { table.rows[i].coeffs().iter().map(exact).collect() };
    let mut doc = Map::new();
    doc.insert("entry".into(), json!(e.name()));
    doc.insert("params".into(), params_json(&e));
    doc.insert("n".into(), json!(args.n));
    doc.insert("basepoint".into(), exact(&table.basepoint));
    doc.insert("truncation".into(), json!(table.truncation));
    doc.insert("coefficients".into(), Value::Array(coeffs(0)));
    if all_rows {
        doc.insert("rows".into(), Value::Array((0..=args.n).map(|i| Value::Array(coeffs(i))).collect()));
    }
    let shown = if all_rows { 0..=args.n } else { 0..=0 };
    let mut rows = Vec::new();
    for i in shown {
        for (j, c) in table.rows[i].coeffs().iter().enumerate() {
            rows.push(vec![i.to_string(), j.to_string(), c.to_string()]);
        }
    }
    Ok(Document { json: Value::Object(doc), header: header(&["row", "degree", "coefficient"]), rows })
}

pub fn eval(args: &EntryArgs, segment: Option<&str>, circle: Option<&str>, points: usize) -> Result<Document, String> {
    let e = load(args)?;
    let x0 = e.system.basepoint.to_complex();
    let grid = match (segment, circle) {
        (Some(s), _) => {
            let (a, b) = parse_pair(s, "--segment")?;
            lib(segment_grid(a, b, points))?
        }
        (None, Some(c)) => {
            let (center, r) = parse_pair(c, "--circle")?;
            if r.im != 0.0 {
                return Err("circle radius must be real".into());
            }
            lib(circle_grid(center, r.re, points))?
        }
        (None, None) => lib(segment_grid(x0, x0 + Complex64::new(e.radius(), 0.0), points))?,
    };
    let table = lib(build_approximants(&e.system, args.n))?;
    let g = table.g_top().to_float();
    let mut rows = Vec::with_capacity(grid.len());
    let mut pts = Vec::with_capacity(grid.len());
    let mut max_err: f64 = 0.0;
    for &x in &grid {
        let approx = g.eval_complex(x);
        let reference = e.reference(x);
        let err = (reference - approx).norm();
        max_err = max_err.max(err);
        rows.push(
            [x.re, x.im, approx.re, approx.im, reference.re, reference.im, err].into_iter().map(float_text).collect(),
        );
        pts.push(json!({ "x": complex(x), "approximant": complex(approx), "reference": complex(reference), "error": float(err) }));
    }
    let json = json!({
        "entry": e.name(),
        "params": params_json(&e),
        "n": args.n,
        "max_error": float(max_err),
        "points": pts,
    });
    let cols = ["x_re", "x_im", "approx_re", "approx_im", "ref_re", "ref_im", "abs_error"];
    Ok(Document { json, header: header(&cols), rows })
}

fn bound_value(b: &Option<BoundValue>, radius: f64) -> Value {
    match b {
        Some(b) => json!({ "coefficient": float(b.coefficient), "exponent": b.exponent, "at_R": float(b.at(radius)) }),
        None => Value::Null,
    }
}

/// `‖g_n − a_n‖` on `U`. For a positive system the sup sits at the real
/// point `x0 + R`; otherwise the boundary is sampled.
fn reference_norm(e: &CatalogEntry, n: usize) -> Result<(f64, &'static str, bool), String> {
    let sys = &e.system;
    let a = sys.value(n).to_complex();
    let positive = lib(is_positive(sys, n + 1, None))?.is_positive();
    if positive {
        let x = sys.domain.center + Complex64::new(sys.domain.radius, 0.0);
        Ok(((e.reference_row(n, x) - a).norm(), "positive-exact", true))
    } else {
        let v = sys.domain.boundary(BOUNDARY_SAMPLES).into_iter().map(|x| (e.reference_row(n, x) - a).norm());
        Ok((v.fold(0.0, f64::max), "boundary-grid", false))
    }
}

pub fn bound(args: &EntryArgs, variant: Variant) -> Result<Document, String> {
    let e = load(args)?;
    let n = args.n;
    let sys = &e.system;
    let mut extra = None;
    let report: ErrorBoundReport = match variant {
        Variant::A => {
            let (norm, method, rigorous) = reference_norm(&e, n)?;
            extra = Some(json!({ "label": format!("‖g_{n} − a_{n}‖ on U"), "value": float(norm), "method": method, "rigorous": rigorous }));
            lib(error_bound_starlike(sys, n, Some(norm), Execution::Parallel))?
        }
        Variant::B => lib(error_bound_starlike(sys, n, None, Execution::Parallel))?,
        Variant::Uniform => {
            let f = match &sys.origin {
                Origin::Ode { f, .. } => f.clone(),
                Origin::Taylor => sys.step(0),
                _ => return Err("bound not applicable: the uniform bound needs one step shared by every index".into()),
            };
            let v = sys.codomain(0).ok_or("bound not applicable: the uniform bound needs a codomain V")?;
            lib(uniform_bound_identical_step(&f, &sys.domain, &v, n))?
        }
        Variant::Fde => lib(fde_error_bound(sys, n, None))?,
        Variant::ClosedForm => {
            let v = e
                .closed_form_bound(n)
                .ok_or_else(|| format!("bound not applicable: entry `{}` has no closed-form bound", e.name()))?;
            ErrorBoundReport::closed(n, e.radius(), v)
        }
    };
    let mut factors: Vec<Value> = report
        .factors
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "value": float(f.estimate.value),
                "method": f.estimate.method.name(),
                "rigorous": f.estimate.rigorous,
            })
        })
        .collect();
    let mut rigorous = report.rigorous();
    if let Some(x) = extra {
        rigorous &= x["rigorous"].as_bool().unwrap_or(false);
        factors.push(x);
    }
    let value = report.value();
    let json = json!({
        "entry": e.name(),
        "params": params_json(&e),
        "n": n,
        "variant": variant.name(),
        "formula": report.formula.name(),
        "radius": float(report.radius),
        "value": opt_float(value),
        "bound_a": bound_value(&report.bound_a, report.radius),
        "bound_b": bound_value(&report.bound_b, report.radius),
        "refined": opt_float(report.refined),
        "closed_form": opt_float(report.closed_form),
        "rigorous": rigorous,
        "factors": factors,
    });
    let rows = vec![vec![
        e.name().to_string(),
        n.to_string(),
        variant.name().to_string(),
        report.formula.name().to_string(),
        float_text(report.radius),
        value.map(float_text).unwrap_or_default(),
        rigorous.to_string(),
    ]];
    Ok(Document { json, header: header(&["entry", "n", "variant", "formula", "radius", "value", "rigorous"]), rows })
}

pub fn numeric(
    args: &EntryArgs,
    segment: Option<&str>,
    polyline: Option<&str>,
    steps: usize,
    all_rows: bool,
) -> Result<Document, String> {
    let e = load(args)?;
    let path = match (segment, polyline) {
        (Some(s), _) => {
            let (a, b) = parse_pair(s, "--segment")?;
            lib(straight_partition(a, b, steps))?
        }
        (None, Some(p)) => lib(polyline_partition(&parse_list(p)?, steps))?,
        (None, None) => return Err("numeric needs a path: --segment a,b or --polyline x0,x1,...".into()),
    };
    let table = lib(numeric_approximate(&e.system, &path, args.n))?;
    let shown = if all_rows { table.n + 1 } else { 1 };
    let mut cols = vec!["k".to_string(), "x_re".into(), "x_im".into()];
    for i in 0..shown {
        if all_rows {
            cols.push(format!("g{i}_re"));
            cols.push(format!("g{i}_im"));
        } else {
            cols.push("g_re".into());
            cols.push("g_im".into());
        }
    }
    let rows = table
        .points
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let mut r = vec![k.to_string(), float_text(x.re), float_text(x.im)];
            for row in &table.values[..shown] {
                r.push(float_text(row[k].re));
                r.push(float_text(row[k].im));
            }
            r
        })
        .collect();
    let values: Vec<Value> =
        table.values[..shown].iter().map(|row| Value::Array(row.iter().map(|&z| complex(z)).collect())).collect();
    let json = json!({
        "entry": e.name(),
        "params": params_json(&e),
        "n": table.n,
        "N": path.steps(),
        "mesh": float(path.mesh()),
        "terminal": complex(table.terminal()),
        "points": table.points.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
        "values": values,
    });
    Ok(Document { json, header: cols, rows })
}

pub fn verify(scope: &str) -> Result<(Document, bool), String> {
    let scope: Scope = lib(scope.parse())?;
    let report = run_suite(scope, Execution::Parallel);
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "scope": c.scope.name(), "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let rows = report
        .checks
        .iter()
        .map(|c| vec![c.scope.name().to_string(), c.name.clone(), c.passed.to_string(), c.detail.clone()])
        .collect();
    let passed = report.passed();
    let json = json!({
        "scope": scope.name(),
        "passed": passed,
        "total": report.checks.len(),
        "failed": report.failures().count(),
        "checks": checks,
    });
    Ok((Document { json, header: header(&["scope", "name", "passed", "detail"]), rows }, passed))
}
