//! Explicit tensor (Kronecker) products.
//!
//! `(u, v)` and `(u', v')` are adjacent in `G × H` iff `uu'` is an edge of
//! `G` and `vv'` is an edge of `H`. Product vertex `(u, v)` is stored at
//! row-major index `u * n_h + v`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairIndex {
    pub u: usize,
    pub v: usize,
    pub encoded: usize,
}

/// Row-major encoding of `V(G) × V(H)` onto `0..n_g * n_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairEncoding {
    pub n_g: usize,
    pub n_h: usize,
}

impl PairEncoding {
    pub fn new(n_g: usize, n_h: usize) -> Self {
        Self { n_g, n_h }
    }

    pub fn encode(&self, u: usize, v: usize) -> Result<PairIndex> {
        if u >= self.n_g {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n_g,
            });
        }
        if v >= self.n_h {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n_h,
            });
        }
        Ok(PairIndex {
            u,
            v,
            encoded: u * self.n_h + v,
        })
    }

    pub fn decode(&self, encoded: usize) -> Result<PairIndex> {
        let total = self.n_g * self.n_h;
        if encoded >= total {
            return Err(Error::VertexOutOfRange {
                vertex: encoded,
                n: total,
            });
        }
        Ok(PairIndex {
            u: encoded / self.n_h,
            v: encoded % self.n_h,
            encoded,
        })
    }
}

/// Size limits for materialized products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_edges: u128,
}

impl Budget {
    pub const DEFAULT_MAX_EDGES: u128 = 100_000_000;

    pub fn edges(max_edges: u128) -> Self {
        Self { max_edges }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_edges: Self::DEFAULT_MAX_EDGES,
        }
    }
}

/// Number of vertices and edges `G × H` would have, with overflow and budget
/// checks. `|E(G × H)| = 2 |E(G)| |E(H)|`.
pub fn product_size(g: &Graph, h: &Graph, budget: Budget) -> Result<(usize, usize)> {
    let vertices = (g.n() as u128) * (h.n() as u128);
    let edges = 2 * (g.edge_count() as u128) * (h.edge_count() as u128);
    if edges > budget.max_edges {
        return Err(Error::Capacity {
            what: "product edge count",
            actual: edges,
            budget: budget.max_edges,
        });
    }
    // Adjacency stores each edge twice.
    let fits = |x: u128| x.checked_mul(2).is_some_and(|y| y <= usize::MAX as u128);
    if !fits(vertices) {
        return Err(Error::Capacity {
            what: "product vertex count",
            actual: vertices,
            budget: usize::MAX as u128 / 2,
        });
    }
    if !fits(edges) {
        return Err(Error::Capacity {
            what: "product edge count",
            actual: edges,
            budget: usize::MAX as u128 / 2,
        });
    }
    Ok((vertices as usize, edges as usize))
}

pub fn tensor_product(g: &Graph, h: &Graph) -> Result<Graph> {
    tensor_product_with_budget(g, h, Budget::default())
}

/// Materializes `G × H`.
///
/// The neighbor list of `(u, v)` is `{u' * n_h + v' : u' ∈ N(u), v' ∈ N(v)}`;
/// walking `u'` then `v'` in ascending order emits it already sorted, so
/// each row is written directly into its slot.
pub fn tensor_product_with_budget(g: &Graph, h: &Graph, budget: Budget) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::Input("tensor product needs nonempty factors".into()));
    }
    let (n, edges) = product_size(g, h, budget)?;
    let n_h = h.n();

    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    for u in 0..g.n() {
        let du = g.degree_unchecked(u);
        for v in 0..n_h {
            let last = *offsets.last().unwrap();
            offsets.push(last + du * h.degree_unchecked(v));
        }
    }
    debug_assert_eq!(offsets[n], 2 * edges);

    let mut adjacency = vec![0usize; 2 * edges];
    let mut rows: Vec<&mut [usize]> = Vec::with_capacity(n);
    let mut rest = adjacency.as_mut_slice();
    for w in offsets.windows(2) {
        let (row, tail) = rest.split_at_mut(w[1] - w[0]);
        rows.push(row);
        rest = tail;
    }
    rows.into_par_iter().enumerate().for_each(|(x, row)| {
        let (u, v) = (x / n_h, x % n_h);
        let hv = h.neighbors_unchecked(v);
        let mut k = 0;
        for &up in g.neighbors_unchecked(u) {
            let base = up * n_h;
            for &vp in hv {
                row[k] = base + vp;
                k += 1;
            }
        }
    });

    Ok(Graph::from_csr_unchecked(offsets, adjacency))
}

/// `deg_{G×H}(u, v) = deg_G(u) · deg_H(v)`.
pub fn product_degree(g: &Graph, h: &Graph, u: usize, v: usize) -> Result<usize> {
    Ok(g.degree(u)? * h.degree(v)?)
}
