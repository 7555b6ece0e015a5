//! Immutable simple undirected graphs in compressed sorted-adjacency form.
//!
//! Every kernel in the crate reads a [`Graph`]. Vertices are the contiguous
//! integers `0..n`, each neighbor list is strictly ascending, and the
//! adjacency is symmetric with no self-loops.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::Exact;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    adjacency: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an unordered edge list.
    ///
    /// Repeated pairs, in either orientation, collapse into a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut arcs = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop {
                    vertex: u,
                    line: None,
                });
            }
            arcs.push((u, v));
            arcs.push((v, u));
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let adjacency = arcs.into_iter().map(|(_, v)| v).collect();
        Ok(Self { offsets, adjacency })
    }

    /// Builds a graph from raw CSR arrays, checking every invariant.
    pub fn from_csr(offsets: Vec<usize>, adjacency: Vec<usize>) -> Result<Self> {
        let g = Self { offsets, adjacency };
        g.validate()?;
        Ok(g)
    }

    /// Caller guarantees the invariants; checked in debug builds.
    pub(crate) fn from_csr_unchecked(offsets: Vec<usize>, adjacency: Vec<usize>) -> Self {
        let g = Self { offsets, adjacency };
        debug_assert!(g.validate().is_ok(), "{:?}", g.validate());
        g
    }

    /// Checks the structural invariants: offsets well formed, lists strictly
    /// ascending, no self-loops, symmetric adjacency.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Input(m));
        if self.offsets.is_empty() || self.offsets[0] != 0 {
            return bad("offsets must start at 0".into());
        }
        if *self.offsets.last().unwrap() != self.adjacency.len() {
            return bad("last offset must equal adjacency length".into());
        }
        if self.offsets.windows(2).any(|w| w[0] > w[1]) {
            return bad("offsets must be nondecreasing".into());
        }
        let n = self.n();
        for v in 0..n {
            let nbrs = self.neighbors_unchecked(v);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("neighbor list of {v} is not strictly ascending"));
            }
            for &u in nbrs {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if u == v {
                    return Err(Error::SelfLoop {
                        vertex: v,
                        line: None,
                    });
                }
                if self.neighbors_unchecked(u).binary_search(&v).is_err() {
                    return bad(format!("edge {v}-{u} is not symmetric"));
                }
            }
        }
        Ok(())
    }

    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            adjacency: Vec::new(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adjacency.len() / 2
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn adjacency(&self) -> &[usize] {
        &self.adjacency
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.degree_unchecked(v))
    }

    #[inline]
    pub(crate) fn degree_unchecked(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check(v)?;
        Ok(self.neighbors_unchecked(v))
    }

    #[inline]
    pub(crate) fn neighbors_unchecked(&self, v: usize) -> &[usize] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    /// Binary search in the shorter of the two lists.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.degree_unchecked(u) <= self.degree_unchecked(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors_unchecked(a).binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors_unchecked(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// Minimum degree δ(G).
    pub fn min_degree(&self) -> Result<usize> {
        self.degrees()
            .min()
            .ok_or_else(|| Error::Input("minimum degree of the empty graph".into()))
    }

    pub fn average_degree(&self) -> Result<f64> {
        self.nonempty()?;
        Ok(self.adjacency.len() as f64 / self.n() as f64)
    }

    /// Average degree `2|E| / n` as an exact rational.
    pub fn average_degree_exact(&self) -> Result<Exact> {
        self.nonempty()?;
        Ok(Exact::new(
            BigInt::from(self.adjacency.len()),
            BigInt::from(self.n()),
        ))
    }

    /// The common degree if the graph is regular.
    pub fn regularity(&self) -> Result<Option<usize>> {
        self.nonempty()?;
        let mut degs = self.degrees();
        let first = degs.next().unwrap();
        Ok(degs.all(|d| d == first).then_some(first))
    }

    /// Minimum degree of the subgraph induced by the open neighborhood of `v`.
    ///
    /// A degree-1 vertex has a single-vertex neighborhood, so the result is 0.
    pub fn neighborhood_min_degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        let nv = self.neighbors_unchecked(v);
        nv.iter()
            .map(|&w| intersection_count(nv, self.neighbors_unchecked(w)))
            .min()
            .ok_or_else(|| {
                Error::Domain(format!(
                    "vertex {v} is isolated; its neighborhood induces an empty graph"
                ))
            })
    }

    /// σ: the minimum over all vertices of [`Graph::neighborhood_min_degree`].
    pub fn sigma(&self) -> Result<usize> {
        if self.min_degree()? == 0 {
            return Err(Error::Domain(
                "sigma is undefined for graphs with isolated vertices".into(),
            ));
        }
        (0..self.n())
            .map(|v| self.neighborhood_min_degree(v))
            .try_fold(usize::MAX, |acc, d| d.map(|d| acc.min(d)))
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::Input(format!(
                "permutation has length {}, graph has {n} vertices",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Input("relabeling is not a permutation".into()));
            }
        }
        Self::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    fn nonempty(&self) -> Result<()> {
        if self.n() == 0 {
            Err(Error::Input("graph has no vertices".into()))
        } else {
            Ok(())
        }
    }
}

/// Size of the intersection of two strictly ascending lists, by merging.
#[inline]
pub(crate) fn intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
