//! Wall-clock comparison of implicit and explicit product evaluation.
//!
//! Measures only; nothing here asserts on timings.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

use crate::closed_forms::product_global_cc;
use crate::error::Result;
use crate::generators::erdos_renyi;
use crate::graph::Graph;
use crate::product::tensor_product_with_budget;
use crate::product::Budget;
use crate::triangles::CcReport;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub seed: u64,
    /// Expected factor degree; edge probability is `mean_degree / (n - 1)`.
    pub mean_degree: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![50, 100, 200, 400],
            repetitions: 5,
            seed: 0,
            mean_degree: 3.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub product_vertices: usize,
    pub product_edges: usize,
    /// Median seconds per implicit evaluation.
    pub implicit_secs: f64,
    /// Median seconds per materialize-and-count evaluation.
    pub explicit_secs: f64,
    pub speedup: f64,
    pub implicit_cc: f64,
    pub explicit_cc: f64,
}

/// The factor pair used for size `n`.
pub fn bench_pair(n: usize, cfg: &BenchConfig) -> Result<(Graph, Graph)> {
    let p = (cfg.mean_degree / (n.max(2) - 1) as f64).min(1.0);
    let base = cfg.seed.wrapping_add(2 * n as u64);
    Ok((erdos_renyi(n, p, base)?, erdos_renyi(n, p, base + 1)?))
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

/// Median per-call time of `f`. Fast calls are batched so each sample spans
/// at least `min_sample`.
fn time_median<T>(repetitions: usize, min_sample: Duration, mut f: impl FnMut() -> T) -> f64 {
    let start = Instant::now();
    black_box(f());
    let once = start.elapsed().max(Duration::from_nanos(1));
    let batch = (min_sample.as_nanos() / once.as_nanos()).clamp(1, 100_000) as u32;
    let samples = (0..repetitions.max(1))
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                black_box(f());
            }
            start.elapsed().as_secs_f64() / batch as f64
        })
        .collect();
    median(samples)
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let (g, h) = bench_pair(n, cfg)?;
        let budget = Budget::default();
        let implicit_cc = product_global_cc(&g, &h)?;
        let product = tensor_product_with_budget(&g, &h, budget)?;
        let explicit_cc = CcReport::compute(&product)?.global_cc;
        let (product_vertices, product_edges) = (product.n(), product.edge_count());
        drop(product);

        let implicit_secs = time_median(cfg.repetitions, Duration::from_millis(2), || {
            product_global_cc(&g, &h).expect("nonempty factors")
        });
        let explicit_secs = time_median(cfg.repetitions, Duration::ZERO, || {
            let p = tensor_product_with_budget(&g, &h, budget).expect("fits budget");
            CcReport::compute(&p).expect("nonempty product").global_cc
        });
        rows.push(BenchRow {
            n,
            product_vertices,
            product_edges,
            implicit_secs,
            explicit_secs,
            speedup: explicit_secs / implicit_secs,
            implicit_cc,
            explicit_cc,
        });
    }
    Ok(rows)
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:>6} {:>12} {:>12} {:>14} {:>14} {:>10} {:>12}\n",
        "n", "prod_verts", "prod_edges", "implicit_s", "explicit_s", "speedup", "cc"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>6} {:>12} {:>12} {:>14.3e} {:>14.3e} {:>10.1} {:>12.6}",
            r.n,
            r.product_vertices,
            r.product_edges,
            r.implicit_secs,
            r.explicit_secs,
            r.speedup,
            r.implicit_cc
        );
    }
    out
}

pub fn bench_json(cfg: &BenchConfig, rows: &[BenchRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("n".into(), json!(r.n));
            m.insert("product_vertices".into(), json!(r.product_vertices));
            m.insert("product_edges".into(), json!(r.product_edges));
            m.insert("implicit_secs".into(), json!(r.implicit_secs));
            m.insert("explicit_secs".into(), json!(r.explicit_secs));
            m.insert("speedup".into(), json!(r.speedup));
            m.insert("implicit_cc".into(), json!(r.implicit_cc));
            m.insert("explicit_cc".into(), json!(r.explicit_cc));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("kind".into(), json!("bench"));
    m.insert("repetitions".into(), json!(cfg.repetitions));
    m.insert("seed".into(), json!(cfg.seed));
    m.insert("mean_degree".into(), json!(cfg.mean_degree));
    m.insert("rows".into(), Value::Array(rows));
    Value::Object(m)
}
