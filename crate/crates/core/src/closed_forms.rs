//! Clustering coefficients of `G × H` computed from the factors alone.
//!
//! A product vertex `(u, v)` lies on `2 t_G(u) t_H(v)` triangles and has
//! degree `deg_G(u) deg_H(v)`, so its local coefficient is
//! `f(u, v) Cc_u(G) Cc_v(H)` with coupling factor
//! `f = (deg_G u - 1)(deg_H v - 1) / (deg_G u deg_H v - 1)` whenever both
//! degrees are at least 2. When a factor degree is below 2 the product vertex
//! is on no triangle and its coefficient is 0, which the general path
//! `2 t_G(u) t_H(v) / C(D, 2)` with `D = deg_G(u) deg_H(v)` reproduces, so
//! every function here is defined for arbitrary simple graphs.
//!
//! Bound checks and sharpness claims are decided on exact rationals; the
//! floating values are derived from them or computed alongside.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{self, Exact};
use crate::graph::Graph;
use crate::product::{tensor_product_with_budget, Budget};
use crate::triangles::{
    global_cc_exact_from_triangles, local_from_counts, triangles_per_vertex, CcReport,
    DegreeProfile,
};

/// Absolute tolerance for comparing implicit and explicit floating values.
pub const TOLERANCE: f64 = 1e-12;

/// Triangles through `(u, v)` in `G × H`.
pub fn product_triangles(t_g: u64, t_h: u64) -> u64 {
    2 * t_g * t_h
}

fn check_coupling_degrees(deg_g: usize, deg_h: usize) -> Result<()> {
    if deg_g < 2 || deg_h < 2 {
        return Err(Error::Domain(format!(
            "coupling factor needs both degrees >= 2, got ({deg_g}, {deg_h})"
        )));
    }
    Ok(())
}

/// `(a - 1)(b - 1) / (ab - 1)`, strictly between 0 and 1 for `a, b >= 2`.
pub fn coupling_factor(deg_g: usize, deg_h: usize) -> Result<f64> {
    check_coupling_degrees(deg_g, deg_h)?;
    let (a, b) = (deg_g as f64, deg_h as f64);
    Ok((a - 1.0) * (b - 1.0) / (a * b - 1.0))
}

pub fn coupling_factor_exact(deg_g: usize, deg_h: usize) -> Result<Exact> {
    check_coupling_degrees(deg_g, deg_h)?;
    let (a, b) = (BigInt::from(deg_g), BigInt::from(deg_h));
    let one = BigInt::from(1);
    Ok(Exact::new((&a - &one) * (&b - &one), &a * &b - one))
}

/// Degree, triangle counts and local coefficients of one factor.
#[derive(Debug, Clone)]
pub struct FactorStats {
    pub degrees: Vec<usize>,
    pub report: CcReport,
    pub profile: DegreeProfile,
}

impl FactorStats {
    pub fn compute(g: &Graph) -> Result<Self> {
        let triangles = triangles_per_vertex(g);
        let profile = DegreeProfile::new(g, &triangles);
        let report = CcReport::from_triangles(g, triangles)?;
        Ok(Self {
            degrees: g.degrees().collect(),
            report,
            profile,
        })
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }
}

fn local_pair(fg: &FactorStats, fh: &FactorStats, u: usize, v: usize) -> f64 {
    let (dg, dh) = (fg.degrees[u], fh.degrees[v]);
    if dg >= 2 && dh >= 2 {
        let f = coupling_factor(dg, dh).expect("degrees checked");
        f * fg.report.local_cc[u] * fh.report.local_cc[v]
    } else {
        let t = product_triangles(fg.report.triangles[u], fh.report.triangles[v]);
        local_from_counts(dg * dh, t)
    }
}

/// Local coefficient of `(u, v)` in `G × H` without building the product.
pub fn product_local_cc(g: &Graph, h: &Graph, u: usize, v: usize) -> Result<f64> {
    g.degree(u)?;
    h.degree(v)?;
    product_local_cc_with(&FactorStats::compute(g)?, &FactorStats::compute(h)?, u, v)
}

pub fn product_local_cc_with(
    fg: &FactorStats,
    fh: &FactorStats,
    u: usize,
    v: usize,
) -> Result<f64> {
    if u >= fg.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: fg.n(),
        });
    }
    if v >= fh.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: fh.n(),
        });
    }
    Ok(local_pair(fg, fh, u, v))
}

fn nonempty(g: &Graph, which: &str) -> Result<()> {
    if g.n() == 0 {
        Err(Error::Input(format!("factor {which} has no vertices")))
    } else {
        Ok(())
    }
}

/// Global coefficient of `G × H` from factor statistics.
///
/// Summing the per-pair coefficients and grouping pairs by their degree
/// classes gives
/// `Cc(G × H) = 1/(n_G n_H) · Σ_{a,b} 4 T_G(a) T_H(b) / (a b (ab - 1))`,
/// where `T_G(a)` is the total triangle count over degree-`a` vertices.
/// The cost after counting factor triangles is one term per pair of degree
/// classes.
pub fn product_global_cc(g: &Graph, h: &Graph) -> Result<f64> {
    nonempty(g, "G")?;
    nonempty(h, "H")?;
    Ok(product_global_cc_with(
        &FactorStats::compute(g)?,
        &FactorStats::compute(h)?,
    ))
}

pub fn product_global_cc_with(fg: &FactorStats, fh: &FactorStats) -> f64 {
    let class_cc =
        |(d, _, t): (usize, usize, u64)| (d, 2.0 * t as f64 / (d as f64 * (d as f64 - 1.0)));
    let mut sum = 0.0;
    for (a, sa) in fg.profile.classes.iter().copied().map(class_cc) {
        if sa == 0.0 {
            continue;
        }
        for (b, sb) in fh.profile.classes.iter().copied().map(class_cc) {
            let f = coupling_factor(a, b).expect("profile classes have degree >= 2");
            sum += f * sa * sb;
        }
    }
    sum / (fg.n() as f64 * fh.n() as f64)
}

/// The double sum over all `n_G · n_H` product vertices, term by term.
///
/// Rows are summed in parallel and combined in row order, so the result does
/// not depend on the number of workers.
pub fn product_global_cc_pointwise(g: &Graph, h: &Graph) -> Result<f64> {
    nonempty(g, "G")?;
    nonempty(h, "H")?;
    let (fg, fh) = (FactorStats::compute(g)?, FactorStats::compute(h)?);
    let rows: Vec<f64> = (0..fg.n())
        .into_par_iter()
        .map(|u| (0..fh.n()).map(|v| local_pair(&fg, &fh, u, v)).sum())
        .collect();
    Ok(rows.iter().sum::<f64>() / (fg.n() as f64 * fh.n() as f64))
}

pub fn product_global_cc_exact(g: &Graph, h: &Graph) -> Result<Exact> {
    nonempty(g, "G")?;
    nonempty(h, "H")?;
    Ok(product_global_cc_exact_with(
        &FactorStats::compute(g)?,
        &FactorStats::compute(h)?,
    ))
}

pub fn product_global_cc_exact_with(fg: &FactorStats, fh: &FactorStats) -> Exact {
    let mut sum = exact::integer(0);
    for &(a, _, ta) in &fg.profile.classes {
        if ta == 0 {
            continue;
        }
        for &(b, _, tb) in &fh.profile.classes {
            let d = BigInt::from(a) * BigInt::from(b);
            let num = BigInt::from(4) * BigInt::from(ta) * BigInt::from(tb);
            sum += Exact::new(num, &d * (&d - 1));
        }
    }
    sum / exact::integer(fg.n() * fh.n())
}

/// Global coefficient of a single graph from its degree profile.
fn global_cc_exact_profile(p: &DegreeProfile) -> Exact {
    let sum = p.classes.iter().fold(exact::integer(0), |acc, &(d, _, t)| {
        acc + Exact::new(BigInt::from(2 * t), BigInt::from(d * (d - 1)))
    });
    sum / exact::integer(p.n)
}

/// How the implicit product coefficient compares with `Cc(G) Cc(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Below,
    Equal,
    Above,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UpperBoundCheck {
    /// Both factors have minimum degree at least 2.
    pub applicable: bool,
    pub bound: f64,
    pub bound_exact: Exact,
    pub implicit: f64,
    pub implicit_exact: Exact,
    /// `implicit <= bound + TOLERANCE`.
    pub holds: bool,
    /// Both factors contain a triangle, so the inequality must be strict.
    pub strict_expected: bool,
    /// At least one factor is triangle-free, so both sides must be 0.
    pub equality_expected: bool,
    pub relation: Relation,
}

impl UpperBoundCheck {
    /// The observed relation is the one the hypotheses predict.
    pub fn classification_ok(&self) -> bool {
        if self.strict_expected {
            self.relation == Relation::Below
        } else if self.equality_expected {
            self.relation == Relation::Equal
        } else {
            self.relation != Relation::Above
        }
    }
}

/// Compares `Cc(G × H)` with `Cc(G) · Cc(H)`.
///
/// The inequality is guaranteed when both minimum degrees are at least 2;
/// otherwise the comparison is still made but `applicable` is false.
pub fn cc_upper_bound_check(g: &Graph, h: &Graph) -> Result<UpperBoundCheck> {
    nonempty(g, "G")?;
    nonempty(h, "H")?;
    let (fg, fh) = (FactorStats::compute(g)?, FactorStats::compute(h)?);
    upper_bound_with(g, h, &fg, &fh)
}

pub fn upper_bound_with(
    g: &Graph,
    h: &Graph,
    fg: &FactorStats,
    fh: &FactorStats,
) -> Result<UpperBoundCheck> {
    let applicable = g.min_degree()? >= 2 && h.min_degree()? >= 2;
    let bound = fg.report.global_cc * fh.report.global_cc;
    let bound_exact = global_cc_exact_profile(&fg.profile) * global_cc_exact_profile(&fh.profile);
    let implicit = product_global_cc_with(fg, fh);
    let implicit_exact = product_global_cc_exact_with(fg, fh);
    let g_free = fg.report.triangle_total == 0;
    let h_free = fh.report.triangle_total == 0;
    let relation = match implicit_exact.cmp(&bound_exact) {
        std::cmp::Ordering::Less => Relation::Below,
        std::cmp::Ordering::Equal => Relation::Equal,
        std::cmp::Ordering::Greater => Relation::Above,
    };
    Ok(UpperBoundCheck {
        applicable,
        bound,
        bound_exact,
        implicit,
        implicit_exact,
        holds: implicit <= bound + TOLERANCE,
        strict_expected: !g_free && !h_free,
        equality_expected: g_free || h_free,
        relation,
    })
}

/// `σ_G σ_H / (d̂_G d̂_H - 1)` and its ingredients.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBound {
    pub sigma_g: usize,
    pub sigma_h: usize,
    pub avg_degree_g: Exact,
    pub avg_degree_h: Exact,
    pub bound_exact: Exact,
    pub bound: f64,
}

/// Lower bound on `Cc(G × H)` from neighborhood minimum degrees and average
/// degrees. `None` unless both minimum degrees are at least 2.
pub fn cc_lower_bound(g: &Graph, h: &Graph) -> Result<Option<LowerBound>> {
    nonempty(g, "G")?;
    nonempty(h, "H")?;
    if g.min_degree()? < 2 || h.min_degree()? < 2 {
        return Ok(None);
    }
    let (sigma_g, sigma_h) = (g.sigma()?, h.sigma()?);
    let (avg_degree_g, avg_degree_h) = (g.average_degree_exact()?, h.average_degree_exact()?);
    let denom = &avg_degree_g * &avg_degree_h - exact::integer(1);
    let bound_exact = exact::integer(sigma_g * sigma_h) / denom;
    Ok(Some(LowerBound {
        sigma_g,
        sigma_h,
        bound: exact::to_f64(&bound_exact),
        avg_degree_g,
        avg_degree_h,
        bound_exact,
    }))
}

fn regular_degrees(g: &Graph, h: &Graph) -> Result<(usize, usize)> {
    let reg = |x: &Graph, which: &str| -> Result<usize> {
        match x.regularity()? {
            Some(d) if d >= 2 => Ok(d),
            Some(d) => Err(Error::Domain(format!(
                "factor {which} is {d}-regular; need degree >= 2"
            ))),
            None => Err(Error::Domain(format!("factor {which} is not regular"))),
        }
    };
    Ok((reg(g, "G")?, reg(h, "H")?))
}

/// `f · Cc(G) · Cc(H)` for a `d_G`-regular `G` and `d_H`-regular `H`.
pub fn regular_product_cc(g: &Graph, h: &Graph) -> Result<f64> {
    let (dg, dh) = regular_degrees(g, h)?;
    Ok(
        coupling_factor(dg, dh)?
            * CcReport::compute(g)?.global_cc
            * CcReport::compute(h)?.global_cc,
    )
}

pub fn regular_product_cc_exact(g: &Graph, h: &Graph) -> Result<Exact> {
    let (dg, dh) = regular_degrees(g, h)?;
    let cc = |x: &Graph| global_cc_exact_from_triangles(x, &triangles_per_vertex(x));
    Ok(coupling_factor_exact(dg, dh)? * cc(g)? * cc(h)?)
}

/// Parameters of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub n: usize,
    pub d: usize,
    /// Common neighbors of every adjacent pair.
    pub mu1: usize,
    /// Common neighbors of every non-adjacent pair; `None` for complete graphs.
    pub mu2: Option<usize>,
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.mu2 {
            Some(m) => write!(f, "srg({}, {}, {}, {})", self.n, self.d, self.mu1, m),
            None => write!(f, "srg({}, {}, {}, -)", self.n, self.d, self.mu1),
        }
    }
}

pub const SRG_DEFAULT_MAX_N: usize = 5000;

pub fn srg_detect(g: &Graph) -> Result<Option<SrgParams>> {
    srg_detect_with_limit(g, SRG_DEFAULT_MAX_N)
}

/// Counts common neighbors of every vertex pair and reports the parameters
/// if the graph is strongly regular. `O(n d^2)` time, `O(n)` extra space.
pub fn srg_detect_with_limit(g: &Graph, max_n: usize) -> Result<Option<SrgParams>> {
    let n = g.n();
    if n > max_n {
        return Err(Error::Capacity {
            what: "srg detection vertex count",
            actual: n as u128,
            budget: max_n as u128,
        });
    }
    if n < 2 {
        return Ok(None);
    }
    let Some(d) = g.regularity()? else {
        return Ok(None);
    };
    let mut common = vec![0usize; n];
    let mut adjacent = vec![false; n];
    let (mut mu1, mut mu2) = (None, None);
    for u in 0..n {
        let nu = g.neighbors_unchecked(u);
        for &x in nu {
            adjacent[x] = true;
            for &w in g.neighbors_unchecked(x) {
                common[w] += 1;
            }
        }
        for w in u + 1..n {
            let slot = if adjacent[w] { &mut mu1 } else { &mut mu2 };
            match *slot {
                None => *slot = Some(common[w]),
                Some(m) if m != common[w] => return Ok(None),
                Some(_) => {}
            }
        }
        for &x in nu {
            adjacent[x] = false;
            for &w in g.neighbors_unchecked(x) {
                common[w] = 0;
            }
        }
    }
    Ok(Some(SrgParams {
        n,
        d,
        // Edgeless graphs have no adjacent pair to constrain it.
        mu1: mu1.unwrap_or(0),
        mu2,
    }))
}

fn srg_degree_ok(p: &SrgParams) -> Result<()> {
    if p.d < 2 {
        return Err(Error::Domain(format!("{p} has degree below 2")));
    }
    Ok(())
}

/// `μ₁ / (d - 1)`.
pub fn srg_cc(p: &SrgParams) -> Result<f64> {
    srg_degree_ok(p)?;
    Ok(p.mu1 as f64 / (p.d as f64 - 1.0))
}

pub fn srg_cc_exact(p: &SrgParams) -> Result<Exact> {
    srg_degree_ok(p)?;
    Ok(exact::ratio(p.mu1, p.d - 1))
}

/// `μ₁^G μ₁^H / (d_G d_H - 1)`.
pub fn srg_product_cc(pg: &SrgParams, ph: &SrgParams) -> Result<f64> {
    Ok(exact::to_f64(&srg_product_cc_exact(pg, ph)?))
}

pub fn srg_product_cc_exact(pg: &SrgParams, ph: &SrgParams) -> Result<Exact> {
    srg_degree_ok(pg)?;
    srg_degree_ok(ph)?;
    Ok(exact::ratio(pg.mu1 * ph.mu1, pg.d * ph.d - 1))
}

/// Which product evaluations to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Implicit,
    Explicit,
    Both,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "implicit" => Ok(Mode::Implicit),
            "explicit" => Ok(Mode::Explicit),
            "both" => Ok(Mode::Both),
            _ => Err(Error::Input(format!(
                "unknown mode {s:?}; expected implicit, explicit or both"
            ))),
        }
    }
}

/// Exact counterparts of the [`ProductCcReport`] values.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCcExact {
    pub implicit_global_cc: Exact,
    pub explicit_global_cc: Option<Exact>,
    pub upper_bound: Exact,
    pub lower_bound: Option<Exact>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductCcReport {
    pub implicit_global_cc: f64,
    pub explicit_global_cc: Option<f64>,
    /// `|implicit - explicit|`, only in [`Mode::Both`].
    pub abs_diff: Option<f64>,
    pub upper_bound: f64,
    /// Both minimum degrees are at least 2, so the upper bound is guaranteed.
    pub upper_applicable: bool,
    pub upper_ok: bool,
    pub lower_bound: Option<f64>,
    pub lower_ok: Option<bool>,
    pub exact: Option<ProductCcExact>,
}

impl ProductCcReport {
    pub fn compute(
        g: &Graph,
        h: &Graph,
        mode: Mode,
        budget: Budget,
        with_exact: bool,
    ) -> Result<Self> {
        nonempty(g, "G")?;
        nonempty(h, "H")?;
        let (fg, fh) = (FactorStats::compute(g)?, FactorStats::compute(h)?);
        let upper = upper_bound_with(g, h, &fg, &fh)?;
        let lower = cc_lower_bound(g, h)?;
        let implicit = upper.implicit;

        let explicit = match mode {
            Mode::Implicit => None,
            Mode::Explicit | Mode::Both => {
                let p = tensor_product_with_budget(g, h, budget)?;
                let triangles = triangles_per_vertex(&p);
                let exact_value = if with_exact {
                    Some(global_cc_exact_from_triangles(&p, &triangles)?)
                } else {
                    None
                };
                Some((
                    CcReport::from_triangles(&p, triangles)?.global_cc,
                    exact_value,
                ))
            }
        };
        let explicit_global_cc = explicit.as_ref().map(|e| e.0);

        Ok(Self {
            implicit_global_cc: implicit,
            explicit_global_cc,
            abs_diff: match mode {
                Mode::Both => explicit_global_cc.map(|e| (implicit - e).abs()),
                _ => None,
            },
            upper_bound: upper.bound,
            upper_applicable: upper.applicable,
            upper_ok: upper.holds,
            lower_bound: lower.as_ref().map(|l| l.bound),
            lower_ok: lower.as_ref().map(|l| implicit >= l.bound - TOLERANCE),
            exact: with_exact.then(|| ProductCcExact {
                implicit_global_cc: upper.implicit_exact.clone(),
                explicit_global_cc: explicit.and_then(|e| e.1),
                upper_bound: upper.bound_exact.clone(),
                lower_bound: lower.map(|l| l.bound_exact),
            }),
        })
    }
}
