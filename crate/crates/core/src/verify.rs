//! Invariant suites over the catalog, grouped by scope.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;

use crate::analysis::{
    canonical_majorant, dominates, error_bound_starlike, fde_error_bound, is_positive, majorant_tail_bound,
    parity_check, pas_criterion_check, taylor_prefix_check, PositivityVerdict, PrefixOutcome, Site,
};
use crate::catalog::{catalog_get, reference_error_grid, segment_grid, CatalogEntry, EntryKind, Params};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::numeric::{numeric_approximate, numeric_approximate_with, polyline_partition, straight_partition, LoopOrder};
use crate::poly::{chebyshev_t, UniPoly};
use crate::scalar::GaussianRational;
use crate::system::{
    build_approximants, coordinate_transform, linear_transform, properness_audit, s_operator_iterate, AffineMap,
    ApproxSystem, ApproximantTable, Origin,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Prefix,
    Bounds,
    Shifts,
    Positivity,
    Numeric,
}

impl Scope {
    pub const SUITES: [Scope; 5] = [Scope::Prefix, Scope::Bounds, Scope::Shifts, Scope::Positivity, Scope::Numeric];

    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Prefix => "prefix",
            Scope::Bounds => "bounds",
            Scope::Shifts => "shifts",
            Scope::Positivity => "positivity",
            Scope::Numeric => "numeric",
        }
    }

    fn covers(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Scope::All, Scope::Prefix, Scope::Bounds, Scope::Shifts, Scope::Positivity, Scope::Numeric]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown verify scope `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub scope: Scope,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// `Ok(detail)` on success, `Err(detail)` on failure.
type Outcome = std::result::Result<String, String>;
type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Check {
    scope: Scope,
    name: String,
    run: CheckFn,
}

fn check(scope: Scope, name: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Check {
    Check { scope, name: name.into(), run: Box::new(run) }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("error: {e}"))
}

fn entry(kind: EntryKind) -> std::result::Result<CatalogEntry, String> {
    lib(catalog_get(kind, Params::default()))
}

fn table(sys: &ApproxSystem, n: usize) -> std::result::Result<ApproximantTable, String> {
    lib(build_approximants(sys, n))
}

fn q(s: &str) -> GaussianRational {
    s.parse().expect("literal")
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Cut at `T` when the table came from truncated series, where only
/// coefficients through `T` are meaningful.
fn cut(p: &UniPoly, truncation: Option<usize>) -> UniPoly {
    match truncation {
        Some(t) => p.truncate(t),
        None => p.clone(),
    }
}

/// Largest order checked by the exact suites.
const MAX_N: usize = 4;
/// Fixed series truncation so that tables of different orders compare.
const SHIFT_TRUNCATION: usize = 16;

const SYMBOLIC: [EntryKind; 9] = EntryKind::ALL;
const FDE_FIXPOINT: [EntryKind; 5] = [EntryKind::Exp, EntryKind::Sinh, EntryKind::Sin, EntryKind::Cosh, EntryKind::Cos];
const POSITIVE: [EntryKind; 7] = [
    EntryKind::Exp,
    EntryKind::Sinh,
    EntryKind::Cosh,
    EntryKind::Log,
    EntryKind::DdeExp,
    EntryKind::Taylor,
    EntryKind::Picard,
];

fn prefix_checks() -> Vec<Check> {
    let mut out: Vec<Check> = SYMBOLIC
        .into_iter()
        .map(|kind| {
            check(Scope::Prefix, format!("taylor prefix {kind}"), move || {
                let e = entry(kind)?;
                let mut degrees = Vec::new();
                for n in 0..=MAX_N {
                    let t = table(&e.system, n)?;
                    let m = e.prefix_degree(n);
                    if let PrefixOutcome::Mismatch { j, got, want } =
                        taylor_prefix_check(t.g_top(), |k| (e.taylor)(k), m, &e.system.basepoint)
                    {
                        return Err(format!("n={n}: degree {j} has {got}, target {want}"));
                    }
                    degrees.push(m);
                }
                Ok(format!("matched through degrees {degrees:?} for n=0..{MAX_N}"))
            })
        })
        .collect();
    for kind in [EntryKind::Sinh, EntryKind::Sin, EntryKind::Cosh, EntryKind::Cos] {
        out.push(check(Scope::Prefix, format!("parity {kind}"), move || {
            let e = entry(kind)?;
            let parity = e.parity.expect("symmetric entry");
            for n in 0..=MAX_N {
                ensure(lib(parity_check(&table(&e.system, n)?, parity))?, || format!("n={n} has mixed parity"))?;
            }
            Ok(format!("{parity:?} rows for n=0..{MAX_N}"))
        }));
    }
    out.push(check(Scope::Prefix, "worked example tables", || {
        let exp = entry(EntryKind::Exp)?;
        let sinh = entry(EntryKind::Sinh)?;
        let log = entry(EntryKind::Log)?;
        let want = |cs: &[&str]| UniPoly::new(cs.iter().map(|s| q(s)).collect());
        let cases = [
            (&exp, 0, want(&["1"])),
            (&exp, 1, want(&["1", "1"])),
            (&exp, 2, want(&["1", "1", "1/2", "1/12"])),
            (&exp, 3, want(&["1", "1", "1/2", "1/6", "7/192", "1/192", "1/2304", "1/64512"])),
            (&sinh, 3, want(&["0", "1", "0", "1/6", "0", "1/120", "0", "1/8064"])),
            (&log, 1, want(&["0", "1"])),
            (&log, 2, want(&["0", "1", "1/2", "1/12"])),
            (&log, 3, want(&["0", "1", "1/2", "1/3", "9/64", "3/64", "3/256", "9/7168"])),
        ];
        for (e, n, p) in &cases {
            let got = table(&e.system, *n)?;
            ensure(got.g_top() == p, || format!("{} n={n}: got {:?}", e.name(), got.g_top()))?;
        }
        Ok(format!("{} tables reproduced exactly", cases.len()))
    }));
    out.push(check(Scope::Prefix, "degree law exp", || {
        for (p, max_n) in [(2u32, 5usize), (3, 4)] {
            let e = lib(catalog_get(EntryKind::Exp, Params { p: Some(p), ..Params::default() }))?;
            for n in 0..=max_n {
                let d = table(&e.system, n)?.g_top().degree().unwrap_or(0);
                let want = (p.pow(n as u32) as usize - 1) / (p as usize - 1);
                ensure(d == want, || format!("p={p} n={n}: degree {d}, expected {want}"))?;
            }
        }
        Ok("deg g^[n] = (p^n - 1)/(p - 1)".into())
    }));
    out
}

fn grid_for(e: &CatalogEntry) -> Vec<Complex64> {
    let r = if e.radius().is_finite() { e.radius() } else { 1.0 };
    segment_grid(c(0.0), c(0.95 * r), 64).expect("nonempty grid")
}

fn bound_checks(execution: Execution) -> Vec<Check> {
    let kinds = [
        EntryKind::Exp,
        EntryKind::Sinh,
        EntryKind::Sin,
        EntryKind::Cosh,
        EntryKind::Cos,
        EntryKind::Log,
        EntryKind::Taylor,
        EntryKind::Picard,
    ];
    let mut out: Vec<Check> = kinds
        .into_iter()
        .map(|kind| {
            check(Scope::Bounds, format!("bound dominance {kind}"), move || {
                let e = entry(kind)?;
                let grid = grid_for(&e);
                let mut last = String::new();
                for n in 0..=5 {
                    let err = lib(reference_error_grid(&e, n, &grid, execution))?;
                    let mut bounds: Vec<(String, f64)> = Vec::new();
                    if let Some(b) = e.closed_form_bound(n) {
                        bounds.push(("closed-form".into(), b));
                    }
                    if let Ok(r) = fde_error_bound(&e.system, n, None) {
                        bounds.extend(r.value().map(|v| ("fde".to_string(), v)));
                        bounds.extend(r.refined.map(|v| ("fde-refined".to_string(), v)));
                    }
                    if let Ok(r) = error_bound_starlike(&e.system, n, None, execution) {
                        bounds.extend(r.value().map(|v| ("starlike-B".to_string(), v)));
                    }
                    ensure(!bounds.is_empty(), || format!("n={n}: no bound applies"))?;
                    for (name, b) in &bounds {
                        ensure(err <= *b, || format!("n={n}: grid error {err:.6e} exceeds {name} bound {b:.6e}"))?;
                    }
                    let best = bounds.iter().map(|b| b.1).fold(f64::INFINITY, f64::min);
                    last = format!("n=5: grid error {err:.3e} <= smallest bound {best:.3e}");
                }
                Ok(last)
            })
        })
        .collect();

    out.push(check(Scope::Bounds, "exp error at 1", move || {
        let e = entry(EntryKind::Exp)?;
        let err = lib(reference_error_grid(&e, 2, &[c(1.0)], execution))?;
        let bound = e.closed_form_bound(2).expect("closed form");
        ensure((err - 0.13495).abs() <= 1e-4 && err <= bound, || format!("|e - g^[2](1)| = {err}, bound {bound}"))?;
        Ok(format!("|e - 31/12| = {err:.5} <= e/12 = {bound:.5}"))
    }));

    out.push(check(Scope::Bounds, "bound decay", || {
        let mut series: Vec<(String, Vec<f64>)> = Vec::new();
        for kind in [EntryKind::Exp, EntryKind::Sinh, EntryKind::Cosh, EntryKind::Log] {
            let e = entry(kind)?;
            series.push((format!("{kind} closed-form"), (1..=12).map(|n| e.closed_form_bound(n).unwrap()).collect()));
            if kind != EntryKind::Log {
                let refined = (1..=12)
                    .map(|n| lib(fde_error_bound(&e.system, n, None)).map(|r| r.refined.unwrap()))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                series.push((format!("{kind} fde-refined"), refined));
            }
        }
        for (name, v) in &series {
            ensure(v.windows(2).all(|w| w[1] < w[0]), || format!("{name} not strictly decreasing: {v:?}"))?;
            ensure(v.iter().any(|&b| b < 1e-6), || format!("{name} stays above 1e-6 through n=12"))?;
        }
        Ok(format!("{} bound sequences strictly decrease on n=1..12 and fall below 1e-6", series.len()))
    }));

    out.push(check(Scope::Bounds, "majorant tail exp", move || {
        let e = entry(EntryKind::Exp)?;
        let grid = grid_for(&e);
        for n in 0..=5 {
            let err = lib(reference_error_grid(&e, n, &grid, execution))?;
            let tail = majorant_tail_bound(|j| 1.0 / crate::analysis::factorial_f64(j), n, 1.0, 80);
            ensure(err <= tail, || format!("n={n}: error {err:.3e} above tail {tail:.3e}"))?;
        }
        Ok("tail of the e^x majorant bounds the grid error for n=0..5".into())
    }));
    out
}

fn compose_phi(p: &UniPoly, phi: &AffineMap) -> UniPoly {
    p.compose_affine(&phi.scale, &phi.shift)
}

fn shift_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for kind in [EntryKind::Picard, EntryKind::Taylor] {
        out.push(check(Scope::Shifts, format!("identical steps {kind}"), move || {
            let e = entry(kind)?;
            for n in 0..=MAX_N {
                let t = table(&e.system, n)?;
                for i in 0..=n {
                    let lower = table(&e.system, n - i)?;
                    ensure(t.row(i) == lower.g_top(), || format!("g_{i}^[{n}] != g^[{}]", n - i))?;
                }
            }
            Ok(format!("g_i^[n] = g^[n-i] for n <= {MAX_N}"))
        }));
    }
    for kind in FDE_FIXPOINT {
        out.push(check(Scope::Shifts, format!("fde shift {kind}"), move || {
            let e = entry(kind)?;
            let sys = e.system.clone().with_truncation(SHIFT_TRUNCATION);
            let Origin::Fde { phi, .. } = &sys.origin else { return Err("not an FDE system".into()) };
            let tables = (0..=MAX_N + 1).map(|n| table(&sys, n)).collect::<std::result::Result<Vec<_>, _>>()?;
            let tr = tables[0].truncation;
            for n in 0..=MAX_N {
                for i in 0..=n {
                    let lhs = cut(&compose_phi(tables[n].row(i), phi), tr);
                    ensure(lhs == cut(tables[n + 1].row(i + 1), tr), || format!("g_{i}^[{n}]∘φ != g_{}^[{}]", i + 1, n + 1))?;
                    let rhs = cut(&compose_phi(tables[n - i].g_top(), &phi.pow(i)), tr);
                    ensure(cut(tables[n].row(i), tr) == rhs, || format!("g_{i}^[{n}] != g^[{}]∘φ^{i}", n - i))?;
                }
            }
            Ok(format!("g_i^[n]∘φ = g_(i+1)^[n+1] and g_i^[n] = g^[n-i]∘φ^i for n <= {MAX_N}"))
        }));
    }
    for kind in [EntryKind::Exp, EntryKind::Sinh, EntryKind::Sin, EntryKind::Cosh, EntryKind::Cos, EntryKind::Picard] {
        out.push(check(Scope::Shifts, format!("derivative relation and S operator {kind}"), move || {
            let e = entry(kind)?;
            let sys = e.system.clone().with_truncation(SHIFT_TRUNCATION);
            let (f, phi) = match &sys.origin {
                Origin::Fde { f, phi, .. } => (f.clone(), phi.clone()),
                Origin::Ode { f, .. } => (f.clone(), AffineMap::identity()),
                _ => return Err("no underlying equation".into()),
            };
            for n in 0..=MAX_N {
                let t = table(&sys, n)?;
                let tr = t.truncation;
                let s = lib(s_operator_iterate(&sys, n))?;
                ensure(cut(&s, tr) == cut(t.g_top(), tr), || format!("S^{n}(a) != g^[{n}]"))?;
                if n > 0 {
                    let prev = table(&sys, n - 1)?;
                    let inner = compose_phi(prev.g_top(), &phi);
                    let rhs = lib(f.integrand(&inner, SHIFT_TRUNCATION, 0))?;
                    ensure(cut(&t.g_top().derivative(), tr) == cut(&rhs, tr), || format!("(g^[{n}])' != f(g^[{}]∘φ, x)", n - 1))?;
                }
            }
            Ok(format!("(g^[n])' = f(g^[n-1]∘φ, x) and g^[n] = S^n(a) for n <= {MAX_N}"))
        }));
    }
    out.push(check(Scope::Shifts, "dde closed form", || {
        let e = entry(EntryKind::DdeExp)?;
        let alpha = q("1/2");
        for n in 0..=6 {
            let want = UniPoly::new(
                (0..=n).map(|k| &alpha.pow(k as u32) * &crate::scalar::factorial(k as u32).inv().unwrap()).collect(),
            );
            ensure(table(&e.system, n)?.g_top() == &want, || format!("n={n} differs from the Taylor polynomial"))?;
        }
        match s_operator_iterate(&e.system, 2) {
            Err(Error::NoFixpoint) => Ok("g^[n] = Σ α^k x^k/k! for n <= 6; S operator refused (no fixpoint)".into()),
            other => Err(format!("S operator on the delay system gave {other:?}")),
        }
    }));
    out.push(check(Scope::Shifts, "sin from sinh", || {
        let sin = entry(EntryKind::Sin)?;
        let sinh = entry(EntryKind::Sinh)?;
        let i = GaussianRational::i();
        for n in 0..=MAX_N {
            let want = compose_phi(table(&sinh.system, n)?.g_top(), &AffineMap::scaling(i.clone())).scale(&-i.clone());
            ensure(table(&sin.system, n)?.g_top() == &want, || format!("n={n}: sin approximant != -i·sinh^[n](ix)"))?;
        }
        for n in 0..=5 {
            let (a, b) = (sin.closed_form_bound(n).unwrap(), sinh.closed_form_bound(n).unwrap());
            ensure(a == b, || format!("n={n}: closed forms differ"))?;
            let sa = lib(error_bound_starlike(&sin.system, n, None, Execution::Sequential))?.value().unwrap();
            let sb = lib(error_bound_starlike(&sinh.system, n, None, Execution::Sequential))?.value().unwrap();
            ensure((sa - sb).abs() <= 1e-12 * sb, || format!("n={n}: starlike bounds {sa} vs {sb}"))?;
        }
        Ok("sin^[n] = -i·sinh^[n](ix) exactly; bound coefficients agree".into())
    }));
    out.push(check(Scope::Shifts, "cos from cosh", || {
        let cos = entry(EntryKind::Cos)?;
        let cosh = entry(EntryKind::Cosh)?;
        let rot = AffineMap::scaling(GaussianRational::i());
        for n in 0..=MAX_N {
            let t = table(&cos.system, n)?;
            let want = compose_phi(table(&cosh.system, n)?.g_top(), &rot);
            ensure(cut(t.g_top(), t.truncation) == cut(&want, t.truncation), || format!("n={n}: cos^[n] != cosh^[n](ix)"))?;
        }
        Ok("cos^[n] = cosh^[n](ix) through the truncation degree".into())
    }));
    out.push(check(Scope::Shifts, "transform commutation", || {
        let exp = entry(EntryKind::Exp)?.system;
        let dil = AffineMap::scaling(q("1/3"));
        let moved = lib(coordinate_transform(&exp, &dil, GaussianRational::zero()))?;
        let (a, b) = (q("2-1i"), q("3/5"));
        let lin = lib(linear_transform(&exp, &a, &b))?;
        for n in 0..=MAX_N {
            let t = table(&exp, n)?;
            let tm = table(&moved, n)?;
            let tl = table(&lin, n)?;
            for i in 0..=n {
                ensure(tm.row(i) == &compose_phi(t.row(i), &dil), || format!("coordinate: row {i} of order {n}"))?;
                let affine = &t.row(i).scale(&a) + &UniPoly::constant(b.clone());
                ensure(tl.row(i) == &affine, || format!("linear: row {i} of order {n}"))?;
            }
        }
        Ok("approximants transform with the system".into())
    }));
    out
}

fn positivity_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for kind in POSITIVE {
        out.push(check(Scope::Positivity, format!("positive {kind}"), move || {
            let e = entry(kind)?;
            let verdict = lib(is_positive(&e.system, 6, None))?;
            let PositivityVerdict::Positive { up_to_truncation } = verdict else {
                return Err(format!("unexpected {verdict:?}"));
            };
            for n in 0..=5 {
                let t = table(&e.system, n)?;
                let bad = t.g_top().coeffs().iter().position(|c| !c.is_nonnegative_real());
                ensure(bad.is_none(), || format!("g^[{n}] has a negative coefficient at degree {}", bad.unwrap()))?;
            }
            let note = if up_to_truncation { " (series checked to finite depth)" } else { "" };
            Ok(format!("positive{note}; g^[n] coefficients >= 0 for n <= 5"))
        }));
    }
    out.push(check(Scope::Positivity, "sin is not positive", || {
        let e = entry(EntryKind::Sin)?;
        match lib(is_positive(&e.system, 6, None))? {
            PositivityVerdict::Counterexample(cx)
                if cx.index == 0 && cx.site == Site::Derivative { k: 2, l: 0 } && cx.value == q("-4") =>
            {
                Ok(format!("expected counterexample: {cx}"))
            }
            other => Err(format!("unexpected verdict {other:?}")),
        }
    }));
    out.push(check(Scope::Positivity, "cos is not positive", || {
        let e = entry(EntryKind::Cos)?;
        match lib(is_positive(&e.system, 6, None))? {
            PositivityVerdict::Counterexample(cx) => Ok(format!("expected counterexample: {cx}")),
            other => Err(format!("unexpected verdict {other:?}")),
        }
    }));
    out.push(check(Scope::Positivity, "fde bound refuses sin", || {
        match fde_error_bound(&entry(EntryKind::Sin)?.system, 3, None) {
            Err(Error::Inapplicable(msg)) => Ok(msg),
            other => Err(format!("expected inapplicable, got {other:?}")),
        }
    }));
    out.push(check(Scope::Positivity, "domination sin by its majorant", || {
        let sin = entry(EntryKind::Sin)?;
        let sinh = entry(EntryKind::Sinh)?;
        let majorant = lib(canonical_majorant(&sin.system))?;
        ensure(lib(dominates(&majorant, &sin.system, 6, None))?.dominates(), || "majorant does not dominate".into())?;
        ensure(lib(dominates(&sinh.system, &sinh.system, 6, None))?.dominates(), || "sinh does not dominate itself".into())?;
        for n in 0..=5 {
            let t = table(&sin.system, n)?;
            for (j, coef) in t.g_top().coeffs().iter().enumerate() {
                let bound = (sinh.taylor)(j);
                ensure(coef.norm_sqr() <= bound.norm_sqr(), || format!("n={n} j={j}: |{coef}| > {bound}"))?;
            }
        }
        Ok("majorant dominates; |sin^[n] coefficients| <= sinh Taylor coefficients for n <= 5".into())
    }));
    out.push(check(Scope::Positivity, "criterion exp and log", || {
        let exp = entry(EntryKind::Exp)?;
        let r = lib(pas_criterion_check(&exp.system, MAX_N, &[0.0, 0.25, 0.5, 0.99]))?;
        ensure(r.satisfied(), || format!("exp: {:?}", r.entries.iter().find(|e| !(e.disk_ok && e.domination_ok))))?;
        let log = lib(catalog_get(EntryKind::Log, Params { radius: Some(0.9), ..Params::default() }))?;
        let r = lib(pas_criterion_check(&log.system, MAX_N, &[0.3, 0.6, 0.9]))?;
        ensure(r.satisfied(), || format!("log: {:?}", r.entries.iter().find(|e| !(e.disk_ok && e.domination_ok))))?;
        Ok("disk inclusion and g_i^[n] <= g_i hold on the sampled rays".into())
    }));
    out.push(check(Scope::Positivity, "properness audit", || {
        for kind in [EntryKind::Exp, EntryKind::Sinh, EntryKind::Cosh, EntryKind::Log, EntryKind::Sin] {
            let e = entry(kind)?;
            let report = lib(properness_audit(&e.system, MAX_N, 128, Execution::Sequential))?;
            ensure(report.all_satisfied(), || format!("{kind}: {:?}", report.violated().next()))?;
        }
        Ok(format!("g_(i+1)^[n](U) inside V_i for n = {MAX_N}"))
    }));
    out
}

/// Terminal numeric errors against the exact approximant for each `N`.
fn euler_errors(e: &CatalogEntry, n: usize, x1: f64, meshes: &[usize]) -> std::result::Result<Vec<f64>, String> {
    let exact = table(&e.system, n)?.eval(c(x1));
    meshes
        .iter()
        .map(|&big_n| {
            let path = lib(straight_partition(c(0.0), c(x1), big_n))?;
            Ok((lib(numeric_approximate(&e.system, &path, n))?.terminal() - exact).norm())
        })
        .collect()
}

fn ratios(errs: &[f64]) -> Vec<f64> {
    errs.windows(2).map(|w| w[0] / w[1]).collect()
}

/// The cosine approximants for `p = 2` written in powers of
/// `s = sin(x / 2^(n+1))`.
pub fn cos_sin_power_form(n: usize, x: f64) -> Option<f64> {
    let coeffs: &[f64] = match n {
        0 => &[1.0],
        1 => &[1.0, -8.0],
        2 => &[1.0, -32.0, 160.0, -512.0 / 3.0],
        3 => &[
            1.0,
            -128.0,
            2688.0,
            -21504.0,
            245248.0 / 3.0,
            -2326528.0 / 15.0,
            425984.0 / 3.0,
            -1048576.0 / 21.0,
        ],
        _ => return None,
    };
    let s2 = (x / 2f64.powi(n as i32 + 1)).sin().powi(2);
    Some(coeffs.iter().rev().fold(0.0, |acc, c| acc * s2 + c))
}

fn numeric_checks() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(check(Scope::Numeric, "exp euler convergence", || {
        let e = entry(EntryKind::Exp)?;
        let errs = euler_errors(&e, 2, 1.0, &[500, 1000, 2000, 4000])?;
        ensure(errs[1] <= 5e-3, || format!("N=1000 error {:.3e}", errs[1]))?;
        let r = ratios(&errs);
        ensure(r.iter().all(|x| (1.7..=2.3).contains(x)), || format!("ratios {r:?}"))?;
        Ok(format!("errors {:.3e}..{:.3e}, halving ratios {r:.3?}", errs[0], errs[3]))
    }));
    for (kind, n, x1) in [(EntryKind::Sinh, 3, 1.0), (EntryKind::Log, 3, 0.5), (EntryKind::Cosh, 2, 1.0)] {
        out.push(check(Scope::Numeric, format!("{kind} euler convergence"), move || {
            let e = entry(kind)?;
            let errs = euler_errors(&e, n, x1, &[1000, 2000, 4000])?;
            let r = ratios(&errs);
            ensure(r.iter().all(|x| (1.7..=2.3).contains(x)), || format!("ratios {r:?}"))?;
            Ok(format!("halving ratios {r:.3?}"))
        }));
    }
    out.push(check(Scope::Numeric, "loop orders agree", || {
        let e = entry(EntryKind::Cos)?;
        let path = lib(polyline_partition(&[c(0.0), Complex64::new(0.3, 0.2), c(0.8)], 250))?;
        let a = lib(numeric_approximate_with(&e.system, &path, 3, LoopOrder::KOuter))?;
        let b = lib(numeric_approximate_with(&e.system, &path, 3, LoopOrder::IOuter))?;
        ensure(a == b, || "tables differ".into())?;
        Ok("k-outer and i-outer tables are bit-identical".into())
    }));
    out.push(check(Scope::Numeric, "degenerate path", || {
        let e = entry(EntryKind::Exp)?;
        let flat = lib(straight_partition(c(0.0), c(0.0), 3))?;
        let t = lib(numeric_approximate(&e.system, &flat, 3))?;
        for (i, row) in t.values.iter().enumerate() {
            let a = e.system.value(i).to_complex();
            ensure(row.iter().all(|&v| v == a), || format!("row {i} moved"))?;
        }
        let t0 = lib(numeric_approximate(&e.system, &lib(straight_partition(c(0.0), c(1.0), 10))?, 0))?;
        ensure(t0.top().iter().all(|&v| v == c(1.0)), || "order 0 row is not constant".into())?;
        Ok("zero-length path and order 0 keep the start values".into())
    }));
    out.push(check(Scope::Numeric, "cos in powers of sine", || {
        let e = entry(EntryKind::Cos)?;
        let mut worst: f64 = 0.0;
        for n in 0..=3 {
            for x in [0.4, 0.8] {
                let path = lib(straight_partition(c(0.0), c(x), 20000))?;
                let got = lib(numeric_approximate(&e.system, &path, n))?.terminal();
                let want = cos_sin_power_form(n, x).expect("n <= 3");
                let d = (got - c(want)).norm();
                worst = worst.max(d);
                ensure(d <= 1e-4, || format!("n={n} x={x}: numeric {got} vs {want}"))?;
                // For n = 0 the sign (-1)^(2^n) flips and the identity reads -cos x.
                if n > 0 {
                    let t = chebyshev_t(1 << (n + 1)).to_float().eval_complex(c((x / 2f64.powi(n as i32 + 1)).sin()));
                    ensure((t.re - x.cos()).abs() <= 1e-10, || format!("T identity fails at n={n} x={x}"))?;
                }
            }
        }
        Ok(format!("max deviation {worst:.2e}; cos x = T_(2^(n+1))(sin(x/2^(n+1))) within 1e-10 for n >= 1"))
    }));
    out
}

fn checks(scope: Scope, execution: Execution) -> Vec<Check> {
    let mut all = Vec::new();
    for suite in Scope::SUITES {
        if !scope.covers(suite) {
            continue;
        }
        all.extend(match suite {
            Scope::Prefix => prefix_checks(),
            Scope::Bounds => bound_checks(execution),
            Scope::Shifts => shift_checks(),
            Scope::Positivity => positivity_checks(),
            Scope::Numeric => numeric_checks(),
            Scope::All => unreachable!(),
        });
    }
    all
}

/// Runs every check in `scope`; results keep declaration order.
pub fn verify(scope: Scope, execution: Execution) -> VerifyReport {
    let list = checks(scope, execution);
    let results = exec::map(execution, &list, |ch| {
        let outcome = (ch.run)();
        CheckResult {
            scope: ch.scope,
            name: ch.name.clone(),
            passed: outcome.is_ok(),
            detail: outcome.unwrap_or_else(|e| e),
        }
    });
    VerifyReport { checks: results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes_parse() {
        assert_eq!("bounds".parse::<Scope>().unwrap(), Scope::Bounds);
        assert!("xml".parse::<Scope>().is_err());
    }

    #[test]
    fn cos_sin_power_form_matches_oracle() {
        assert!((cos_sin_power_form(1, 0.4).unwrap() - 0.9202663113649664).abs() < 1e-14);
        assert!((cos_sin_power_form(1, 0.8).unwrap() - 0.6842439760115403).abs() < 1e-14);
        assert!((cos_sin_power_form(2, 0.8).unwrap() - 0.69678993027).abs() < 1e-10);
        assert!((cos_sin_power_form(3, 0.4).unwrap() - 0.92106099358895).abs() < 1e-12);
        assert!(cos_sin_power_form(4, 0.4).is_none());
    }

    #[test]
    fn prefix_suite_passes() {
        let r = verify(Scope::Prefix, Execution::Parallel);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
