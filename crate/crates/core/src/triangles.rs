//! Triangle counts and clustering coefficients of a single graph.
//!
//! The local coefficient of `v` is `t(v) / C(deg v, 2)`, or 0 when
//! `deg v <= 1`. The global coefficient divides the sum of local
//! coefficients by the full vertex count `n`, so vertices of degree 0 or 1
//! lower it. This is not the transitivity ratio.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{self, Exact};
use crate::graph::{intersection_count, Graph};

/// Per-vertex triangle counts and clustering coefficients for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CcReport {
    pub triangles: Vec<u64>,
    pub local_cc: Vec<f64>,
    pub global_cc: f64,
    pub triangle_total: u64,
}

impl CcReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let triangles = triangles_per_vertex(g);
        Self::from_triangles(g, triangles)
    }

    pub(crate) fn from_triangles(g: &Graph, triangles: Vec<u64>) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::Input(
                "clustering coefficient of the empty graph".into(),
            ));
        }
        let local_cc: Vec<f64> = g
            .degrees()
            .zip(&triangles)
            .map(|(d, &t)| local_from_counts(d, t))
            .collect();
        // Fixed summation order keeps the value independent of worker count.
        let global_cc = local_cc.iter().sum::<f64>() / g.n() as f64;
        let sum: u64 = triangles.iter().sum();
        debug_assert_eq!(sum % 3, 0);
        Ok(Self {
            triangles,
            local_cc,
            global_cc,
            triangle_total: sum / 3,
        })
    }

    pub fn n(&self) -> usize {
        self.triangles.len()
    }
}

/// Triangles through `v`: half the sum, over neighbors `u`, of the number
/// of common neighbors of `u` and `v`.
#[inline]
pub(crate) fn vertex_triangles(g: &Graph, v: usize) -> u64 {
    let nv = g.neighbors_unchecked(v);
    let twice: usize = nv
        .iter()
        .map(|&u| intersection_count(nv, g.neighbors_unchecked(u)))
        .sum();
    (twice / 2) as u64
}

/// `t(v)` for every vertex, by sorted-list merge intersection. Runs on the
/// current rayon pool; counts are integers, so the output does not depend on
/// the number of workers.
pub fn triangles_per_vertex(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .into_par_iter()
        .map(|v| vertex_triangles(g, v))
        .collect()
}

#[inline]
pub(crate) fn local_from_counts(degree: usize, triangles: u64) -> f64 {
    if degree <= 1 {
        return 0.0;
    }
    let pairs = (degree as u64) * (degree as u64 - 1) / 2;
    triangles as f64 / pairs as f64
}

pub(crate) fn local_exact_from_counts(degree: usize, triangles: u64) -> Exact {
    if degree <= 1 {
        return exact::integer(0);
    }
    let pairs = BigInt::from(degree) * BigInt::from(degree - 1) / 2;
    Exact::new(BigInt::from(triangles), pairs)
}

pub fn local_cc(g: &Graph, v: usize) -> Result<f64> {
    let d = g.degree(v)?;
    Ok(local_from_counts(d, vertex_triangles(g, v)))
}

pub fn local_cc_exact(g: &Graph, v: usize) -> Result<Exact> {
    let d = g.degree(v)?;
    Ok(local_exact_from_counts(d, vertex_triangles(g, v)))
}

pub fn global_cc(g: &Graph) -> Result<f64> {
    Ok(CcReport::compute(g)?.global_cc)
}

/// The global coefficient as an exact rational, summed vertex by vertex.
pub fn global_cc_exact(g: &Graph) -> Result<Exact> {
    let triangles = triangles_per_vertex(g);
    global_cc_exact_from_triangles(g, &triangles)
}

pub(crate) fn global_cc_exact_from_triangles(g: &Graph, triangles: &[u64]) -> Result<Exact> {
    if g.n() == 0 {
        return Err(Error::Input(
            "clustering coefficient of the empty graph".into(),
        ));
    }
    let sum = g
        .degrees()
        .zip(triangles)
        .fold(exact::integer(0), |acc, (d, &t)| {
            acc + local_exact_from_counts(d, t)
        });
    Ok(sum / exact::integer(g.n()))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    (0..g.n())
        .into_par_iter()
        .all(|v| vertex_triangles(g, v) == 0)
}

/// Reference triangle count for `v`: every unordered neighbor pair is tested
/// for adjacency by binary search. Shares nothing with the merge kernel.
pub fn oracle_triangles(g: &Graph, v: usize) -> Result<u64> {
    let nv = g.neighbors(v)?;
    let mut count = 0;
    for (i, &a) in nv.iter().enumerate() {
        let na = g.neighbors_unchecked(a);
        for &b in &nv[i + 1..] {
            if na.binary_search(&b).is_ok() {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Vertices of degree at least 2 grouped by degree, with the total triangle
/// count of each group. Everything the global coefficient depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub n: usize,
    /// `(degree, vertex count, triangle sum)` in ascending degree order.
    pub classes: Vec<(usize, usize, u64)>,
}

impl DegreeProfile {
    pub fn new(g: &Graph, triangles: &[u64]) -> Self {
        let mut by_degree: BTreeMap<usize, (usize, u64)> = BTreeMap::new();
        for (d, &t) in g.degrees().zip(triangles) {
            if d >= 2 {
                let e = by_degree.entry(d).or_default();
                e.0 += 1;
                e.1 += t;
            }
        }
        Self {
            n: g.n(),
            classes: by_degree.into_iter().map(|(d, (c, t))| (d, c, t)).collect(),
        }
    }
}
