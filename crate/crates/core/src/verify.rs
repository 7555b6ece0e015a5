//! Checks every closed form against an explicitly materialized product.
//!
//! Each check is either a pass, a fail, or not applicable because its
//! hypotheses do not hold for the given pair; inapplicable checks are
//! listed with the reason rather than dropped.

use std::fmt;

use crate::closed_forms::{
    self, cc_lower_bound, product_local_cc_with, product_triangles, srg_detect, FactorStats,
    SrgParams, TOLERANCE,
};
use crate::error::{Error, Result};
use crate::exact::{fraction_string, Exact};
use crate::graph::Graph;
use crate::product::{tensor_product_with_budget, Budget, PairEncoding};
use crate::triangles::{
    global_cc_exact_from_triangles, oracle_triangles, triangles_per_vertex, CcReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Measured {
    Float(f64),
    Count(u64),
    Text(String),
}

impl fmt::Display for Measured {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measured::Float(x) => write!(f, "{x:?}"),
            Measured::Count(x) => write!(f, "{x}"),
            Measured::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub values: Vec<(&'static str, Measured)>,
    /// Absolute tolerance of a floating comparison; `None` for exact checks.
    pub tolerance: Option<f64>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            status: Status::Pass,
            detail: String::new(),
            values: Vec::new(),
            tolerance: None,
        }
    }

    fn not_applicable(name: &'static str, why: impl Into<String>) -> Self {
        Self {
            status: Status::NotApplicable,
            detail: why.into(),
            ..Self::new(name)
        }
    }

    fn float(mut self, key: &'static str, x: f64) -> Self {
        self.values.push((key, Measured::Float(x)));
        self
    }

    fn count(mut self, key: &'static str, x: u64) -> Self {
        self.values.push((key, Measured::Count(x)));
        self
    }

    fn exact(mut self, key: &'static str, x: &Exact) -> Self {
        self.values.push((key, Measured::Text(fraction_string(x))));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOutcome {
    pub checks: Vec<Check>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{:<15} {:<20} {}",
                c.status.as_str().to_uppercase(),
                c.name,
                c.detail
            )?;
            for (k, v) in &c.values {
                write!(f, " {k}={v}")?;
            }
            if let Some(t) = c.tolerance {
                write!(f, " tol={t:e}")?;
            }
            writeln!(f)?;
        }
        let failed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        write!(
            f,
            "{}: {} checks, {failed} failed",
            if failed == 0 { "OK" } else { "FAILED" },
            self.checks.len()
        )
    }
}

/// Runs every check on the pair `(G, H)` in a fixed order.
pub fn verify(g: &Graph, h: &Graph, budget: Budget) -> Result<VerifyOutcome> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::Input("verification needs nonempty factors".into()));
    }
    let (fg, fh) = (FactorStats::compute(g)?, FactorStats::compute(h)?);
    let product = tensor_product_with_budget(g, h, budget)?;
    let enc = PairEncoding::new(g.n(), h.n());
    let product_triangles_counted = triangles_per_vertex(&product);
    let explicit = CcReport::from_triangles(&product, product_triangles_counted)?;
    let low_degree = g.min_degree()? < 2 || h.min_degree()? < 2;

    let mut checks = Vec::new();

    // Triangle counts, vertex by vertex, against the brute-force counter.
    let mut mismatches = 0u64;
    for x in 0..product.n() {
        let p = enc.decode(x)?;
        let predicted = product_triangles(fg.report.triangles[p.u], fh.report.triangles[p.v]);
        if oracle_triangles(&product, x)? != predicted {
            mismatches += 1;
        }
    }
    let mut c = Check::new("product_triangles")
        .count("vertices", product.n() as u64)
        .count("mismatches", mismatches);
    c.status = Status::from_bool(mismatches == 0);
    c.detail = "2 t_G(u) t_H(v) vs brute-force count".into();
    checks.push(c);

    let mut max_diff = 0.0f64;
    for x in 0..product.n() {
        let p = enc.decode(x)?;
        let implicit = product_local_cc_with(&fg, &fh, p.u, p.v)?;
        max_diff = max_diff.max((implicit - explicit.local_cc[x]).abs());
    }
    let mut c = Check::new("product_local_cc").float("max_abs_diff", max_diff);
    c.status = Status::from_bool(max_diff <= TOLERANCE);
    c.detail = "pointwise vs materialized product".into();
    c.tolerance = Some(TOLERANCE);
    checks.push(c);

    let upper = closed_forms::upper_bound_with(g, h, &fg, &fh)?;
    let implicit = upper.implicit;
    let diff = (implicit - explicit.global_cc).abs();
    let mut c = Check::new("product_global_cc")
        .float("implicit", implicit)
        .float("explicit", explicit.global_cc)
        .float("abs_diff", diff);
    c.status = Status::from_bool(diff <= TOLERANCE);
    c.detail = if low_degree {
        "via low-degree fallback".into()
    } else {
        "minimum degrees >= 2".into()
    };
    c.tolerance = Some(TOLERANCE);
    checks.push(c);

    if upper.applicable {
        let mut c = Check::new("upper_bound")
            .float("implicit", upper.implicit)
            .float("bound", upper.bound)
            .exact("implicit_exact", &upper.implicit_exact)
            .exact("bound_exact", &upper.bound_exact);
        c.status = Status::from_bool(upper.holds && upper.classification_ok());
        c.detail = if upper.equality_expected {
            "equality (triangle-free factor)".into()
        } else {
            "strict (both factors have triangles)".into()
        };
        c.tolerance = Some(TOLERANCE);
        checks.push(c);
    } else {
        checks.push(Check::not_applicable(
            "upper_bound",
            "a factor has minimum degree below 2",
        ));
    }

    match cc_lower_bound(g, h)? {
        Some(lb) => {
            let sharp = upper.implicit_exact == lb.bound_exact;
            let mut c = Check::new("lower_bound")
                .float("implicit", implicit)
                .float("bound", lb.bound)
                .count("sigma_g", lb.sigma_g as u64)
                .count("sigma_h", lb.sigma_h as u64)
                .exact("avg_degree_g", &lb.avg_degree_g)
                .exact("avg_degree_h", &lb.avg_degree_h)
                .exact("bound_exact", &lb.bound_exact);
            c.status = Status::from_bool(
                upper.implicit_exact >= lb.bound_exact && implicit >= lb.bound - TOLERANCE,
            );
            c.detail = if sharp { "sharp (equality)" } else { "strict" }.into();
            c.tolerance = Some(TOLERANCE);
            checks.push(c);
        }
        None => checks.push(Check::not_applicable(
            "lower_bound",
            "a factor has minimum degree below 2",
        )),
    }

    let explicit_exact = global_cc_exact_from_triangles(&product, &explicit.triangles)?;

    match (g.regularity()?, h.regularity()?) {
        (Some(dg), Some(dh)) if dg >= 2 && dh >= 2 => {
            let closed = closed_forms::regular_product_cc_exact(g, h)?;
            let closed_f = closed_forms::regular_product_cc(g, h)?;
            let mut c = Check::new("regular_product_cc")
                .count("d_g", dg as u64)
                .count("d_h", dh as u64)
                .float("closed_form", closed_f)
                .float("explicit", explicit.global_cc)
                .exact("closed_form_exact", &closed)
                .exact("explicit_exact", &explicit_exact);
            c.status = Status::from_bool(
                closed == upper.implicit_exact
                    && closed == explicit_exact
                    && (closed_f - explicit.global_cc).abs() <= TOLERANCE,
            );
            c.detail = "f * Cc(G) * Cc(H), exact".into();
            c.tolerance = Some(TOLERANCE);
            checks.push(c);
        }
        _ => checks.push(Check::not_applicable(
            "regular_product_cc",
            "factors are not both regular of degree >= 2",
        )),
    }

    let srg = |x: &Graph| -> Result<Option<SrgParams>> {
        match srg_detect(x) {
            Ok(p) => Ok(p.filter(|p| p.d >= 2)),
            Err(Error::Capacity { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    match (srg(g)?, srg(h)?) {
        (Some(pg), Some(ph)) => {
            let (cg, ch) = (
                closed_forms::srg_cc_exact(&pg)?,
                closed_forms::srg_cc_exact(&ph)?,
            );
            let (gg, gh) = (
                global_cc_exact_from_triangles(g, &fg.report.triangles)?,
                global_cc_exact_from_triangles(h, &fh.report.triangles)?,
            );
            let mut c = Check::new("srg_cc")
                .exact("closed_form_g", &cg)
                .exact("measured_g", &gg)
                .exact("closed_form_h", &ch)
                .exact("measured_h", &gh);
            c.status = Status::from_bool(cg == gg && ch == gh);
            c.detail = format!("G = {pg}, H = {ph}");
            checks.push(c);

            let closed = closed_forms::srg_product_cc_exact(&pg, &ph)?;
            let lower = cc_lower_bound(g, h)?.map(|l| l.bound_exact);
            let mut c = Check::new("srg_product_cc")
                .exact("closed_form", &closed)
                .exact("implicit", &upper.implicit_exact)
                .exact("explicit", &explicit_exact);
            if let Some(l) = &lower {
                c = c.exact("lower_bound", l);
            }
            c.status = Status::from_bool(
                closed == upper.implicit_exact
                    && closed == explicit_exact
                    && lower.as_ref() == Some(&closed),
            );
            c.detail = "closed form = lower bound = product cc".into();
            checks.push(c);
        }
        _ => {
            let why = "factors are not both strongly regular of degree >= 2";
            checks.push(Check::not_applicable("srg_cc", why));
            checks.push(Check::not_applicable("srg_product_cc", why));
        }
    }

    Ok(VerifyOutcome { checks })
}
