//! Exact stability-type invariants, the α/τ core decomposition and the
//! criticality predicates.
//!
//! Everything bottoms out in [`crate::clique::max_clique_size`]: a stable
//! set of `G` is a clique of its complement, so each invariant is a clique
//! search over either the adjacency rows or the complement rows.

use std::cell::OnceCell;

use serde::Serialize;

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// Every invariant for one graph. Minimums over an empty index set (σ_v and
/// ω_v on the null graph, ω_e without edges, σ_e without non-edges) are
/// `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub alpha: usize,
    pub tau: usize,
    pub omega: usize,
    pub sigma_v: Option<usize>,
    pub omega_v: Option<usize>,
    pub omega_e: Option<usize>,
    pub sigma_e: Option<usize>,
    pub has_isolated_vertex: bool,
}

/// `V = alpha_core ⊔ tau_core ⊔ b_part`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    /// Intersection of all maximum stable sets.
    pub alpha_core: VertexSet,
    /// Intersection of all minimum vertex covers.
    pub tau_core: VertexSet,
    pub b_part: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityProfile {
    pub is_b_graph: bool,
    pub is_tau_critical: bool,
    pub is_alpha_critical: bool,
    /// Every edge is critical or a bridge, as it must be in an edge-minimal
    /// graph for fixed (α, τ, c).
    pub q_minimal_necessary: bool,
    pub critical_edges: Vec<Edge>,
    pub bridge_edges: Vec<Edge>,
}

fn complement_rows(g: &Graph) -> Vec<u64> {
    g.complement().rows().to_vec()
}

/// `min_v (1 + ω(rows restricted to N(v)))`: with complement rows this is
/// σ_v, with adjacency rows it is ω_v.
fn per_vertex_min(rows: &[u64]) -> Option<usize> {
    rows.iter()
        .map(|&nbrs| 1 + clique::max_clique_size(rows, nbrs))
        .min()
}

/// `min_{uv ∈ E} (2 + ω(rows restricted to N(u) ∩ N(v)))`: ω_e on adjacency
/// rows, σ_e on complement rows.
fn per_edge_min(rows: &[u64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, &row) in rows.iter().enumerate() {
        for v in VertexSet::from_bits(row & !((2u64 << u) - 1)) {
            let m = 2 + clique::max_clique_size(rows, rows[u] & rows[v]);
            best = Some(best.map_or(m, |b| b.min(m)));
        }
    }
    best
}

/// Lazily memoized invariants of one graph. Checks share an `Analysis` so a
/// scan computes each quantity at most once per graph.
pub struct Analysis<'g> {
    graph: &'g Graph,
    comp: Vec<u64>,
    alpha: OnceCell<usize>,
    omega: OnceCell<usize>,
    sigma_v: OnceCell<Option<usize>>,
    omega_v: OnceCell<Option<usize>>,
    omega_e: OnceCell<Option<usize>>,
    sigma_e: OnceCell<Option<usize>>,
    components: OnceCell<usize>,
    cores: OnceCell<CoreDecomposition>,
    maximal_stable: OnceCell<Vec<VertexSet>>,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Analysis {
            graph,
            comp: complement_rows(graph),
            alpha: OnceCell::new(),
            omega: OnceCell::new(),
            sigma_v: OnceCell::new(),
            omega_v: OnceCell::new(),
            omega_e: OnceCell::new(),
            sigma_e: OnceCell::new(),
            components: OnceCell::new(),
            cores: OnceCell::new(),
            maximal_stable: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    fn all(&self) -> u64 {
        self.graph.vertices().bits()
    }

    pub fn alpha(&self) -> usize {
        *self
            .alpha
            .get_or_init(|| clique::max_clique_size(&self.comp, self.all()))
    }

    pub fn tau(&self) -> usize {
        self.n() - self.alpha()
    }

    pub fn omega(&self) -> usize {
        *self
            .omega
            .get_or_init(|| clique::max_clique_size(self.graph.rows(), self.all()))
    }

    pub fn sigma_v(&self) -> Option<usize> {
        *self.sigma_v.get_or_init(|| per_vertex_min(&self.comp))
    }

    pub fn omega_v(&self) -> Option<usize> {
        *self
            .omega_v
            .get_or_init(|| per_vertex_min(self.graph.rows()))
    }

    pub fn omega_e(&self) -> Option<usize> {
        *self.omega_e.get_or_init(|| per_edge_min(self.graph.rows()))
    }

    pub fn sigma_e(&self) -> Option<usize> {
        *self.sigma_e.get_or_init(|| per_edge_min(&self.comp))
    }

    pub fn component_count(&self) -> usize {
        *self.components.get_or_init(|| self.graph.component_count())
    }

    /// α(G − v) computed in place, without renumbering.
    pub fn alpha_without(&self, v: usize) -> usize {
        clique::max_clique_size(&self.comp, self.all() & !(1u64 << v))
    }

    /// Largest stable set through `v`: `1 + α(G − N[v])`.
    pub fn max_stable_containing(&self, v: usize) -> usize {
        1 + clique::max_clique_size(&self.comp, self.comp[v])
    }

    pub fn report(&self) -> InvariantReport {
        InvariantReport {
            n: self.n(),
            edge_count: self.graph.edge_count(),
            component_count: self.component_count(),
            alpha: self.alpha(),
            tau: self.tau(),
            omega: self.omega(),
            sigma_v: self.sigma_v(),
            omega_v: self.omega_v(),
            omega_e: self.omega_e(),
            sigma_e: self.sigma_e(),
            has_isolated_vertex: self.graph.has_isolated_vertex(),
        }
    }

    pub fn cores(&self) -> CoreDecomposition {
        *self.cores.get_or_init(|| {
            let alpha = self.alpha();
            let mut alpha_core = VertexSet::EMPTY;
            let mut tau_core = VertexSet::EMPTY;
            for v in self.graph.vertices() {
                if self.alpha_without(v) + 1 == alpha {
                    alpha_core.insert(v);
                }
                if self.max_stable_containing(v) < alpha {
                    tau_core.insert(v);
                }
            }
            CoreDecomposition {
                alpha_core,
                tau_core,
                b_part: self.graph.vertices() - alpha_core - tau_core,
            }
        })
    }

    /// Inclusion-maximal stable sets, ascending by bit pattern.
    pub fn maximal_stable_sets(&self) -> &[VertexSet] {
        self.maximal_stable.get_or_init(|| {
            clique::maximal_cliques(&self.comp, self.all())
                .into_iter()
                .map(VertexSet::from_bits)
                .collect()
        })
    }

    /// Maximum stable sets, ascending by bit pattern.
    pub fn maximum_stable_sets(&self) -> Vec<VertexSet> {
        let alpha = self.alpha();
        self.maximal_stable_sets()
            .iter()
            .copied()
            .filter(|m| m.len() == alpha)
            .collect()
    }

    pub fn is_b_graph(&self) -> bool {
        self.cores().tau_core.is_empty()
    }

    pub fn is_tau_critical(&self) -> bool {
        self.cores().alpha_core.is_empty()
    }

    pub fn criticality(&self) -> CriticalityProfile {
        let g = self.graph;
        let alpha = self.alpha();
        let tau = self.tau();

        let by_deletion = g.vertices().iter().all(|v| {
            let h = g.without_vertex(v).expect("vertex of g");
            h.order() - stability_number(&h) < tau
        });
        assert_eq!(
            by_deletion,
            self.is_tau_critical(),
            "τ-criticality by deletion disagrees with the empty α-core test"
        );

        let edges = g.edges();
        let critical_edges: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|&e| {
                let h = g.without_edge(e).expect("edge of g");
                stability_number(&h) == alpha + 1
            })
            .collect();
        let bridge_edges = g.bridges();
        let q_minimal_necessary = edges
            .iter()
            .all(|e| critical_edges.contains(e) || bridge_edges.contains(e));

        CriticalityProfile {
            is_b_graph: self.is_b_graph(),
            is_tau_critical: by_deletion,
            is_alpha_critical: !edges.is_empty() && critical_edges.len() == edges.len(),
            q_minimal_necessary,
            critical_edges,
            bridge_edges,
        }
    }
}

pub fn stability_number(g: &Graph) -> usize {
    Analysis::new(g).alpha()
}

pub fn clique_number(g: &Graph) -> usize {
    clique::max_clique_size(g.rows(), g.vertices().bits())
}

pub fn invariant_suite(g: &Graph) -> InvariantReport {
    Analysis::new(g).report()
}

/// Size of a largest stable set containing `v`. Such a set is automatically
/// inclusion-maximal.
pub fn max_stable_containing(g: &Graph, v: usize) -> Result<usize> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(Analysis::new(g).max_stable_containing(v))
}

/// Size of a largest clique containing both ends of `e`.
pub fn max_clique_containing_edge(g: &Graph, e: Edge) -> Result<usize> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge { u: e.u, v: e.v });
    }
    let common = g.neighbors(e.u) & g.neighbors(e.v);
    Ok(2 + clique::max_clique_size(g.rows(), common.bits()))
}

pub fn core_decomposition(g: &Graph) -> CoreDecomposition {
    Analysis::new(g).cores()
}

pub fn criticality_profile(g: &Graph) -> CriticalityProfile {
    Analysis::new(g).criticality()
}

pub fn maximal_stable_sets(g: &Graph) -> Vec<VertexSet> {
    Analysis::new(g).maximal_stable_sets().to_vec()
}

pub fn maximum_stable_sets(g: &Graph) -> Vec<VertexSet> {
    Analysis::new(g).maximum_stable_sets()
}

/// Exact search: match the lowest unmatched vertex against each of its
/// unmatched neighbours in turn.
pub fn has_perfect_matching(g: &Graph) -> bool {
    fn pair_off(rows: &[u64], unmatched: u64) -> bool {
        if unmatched == 0 {
            return true;
        }
        let v = unmatched.trailing_zeros() as usize;
        let rest = unmatched & !(1u64 << v);
        VertexSet::from_bits(rows[v] & rest)
            .iter()
            .any(|w| pair_off(rows, rest & !(1u64 << w)))
    }
    g.order().is_multiple_of(2) && pair_off(g.rows(), g.vertices().bits())
}

/// Which parts of the core-decomposition structure theorem fail for `g`;
/// empty when all hold.
pub fn decomposition_failures(g: &Graph, cores: &CoreDecomposition) -> Vec<&'static str> {
    let mut failed = Vec::new();
    let CoreDecomposition {
        alpha_core,
        tau_core,
        b_part,
    } = *cores;
    let disjoint = alpha_core.is_disjoint(tau_core)
        && alpha_core.is_disjoint(b_part)
        && tau_core.is_disjoint(b_part);
    if !disjoint || (alpha_core | tau_core | b_part) != g.vertices() {
        failed.push("partition");
    }
    if !g.neighbor_set(alpha_core).is_subset(tau_core) {
        failed.push("neighbours of the alpha-core lie in the tau-core");
    }
    let core_graph = g.induced_subgraph(alpha_core).expect("subset of V");
    if core_graph.edge_count() != 0 {
        failed.push("alpha-core is edgeless");
    }
    let b = g.induced_subgraph(b_part).expect("subset of V");
    let inner = Analysis::new(&b);
    if !inner.is_tau_critical() {
        failed.push("b-part is tau-critical");
    }
    if !inner.is_b_graph() {
        failed.push("b-part is a B-graph");
    }
    if b.has_isolated_vertex() {
        failed.push("b-part has no isolated vertices");
    }
    failed
}
