//! Hypergraphs over at most 64 vertices, their 2-section, conformality and
//! the checks that reduce hypergraph statements to graphs.

use serde::Serialize;

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::invariants::Analysis;
use crate::verdict::{Verdict, Witness};

pub const HYPER_COR: &str = "hyper-cor";
pub const HYPER_CONFORMAL: &str = "hyper-conformal";
pub const CONJ2: &str = "conj2";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperGraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl HyperGraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        let all = VertexSet::full(n);
        if let Some(bad) = edges.iter().find(|e| !e.is_subset(all)) {
            let vertex = (*bad - all).first().expect("nonempty difference");
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(HyperGraph { n, edges })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// r_max: the largest edge size, 0 without edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// The common edge size when every edge has the same size.
    pub fn uniform_rank(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.covered() != VertexSet::full(self.n)
    }

    /// Distinct inclusion-maximal edges, ascending by bit pattern.
    pub fn maximal_edges(&self) -> Vec<VertexSet> {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        edges
            .iter()
            .copied()
            .filter(|&e| !edges.iter().any(|&f| f != e && e.is_subset(f)))
            .collect()
    }
}

/// `rows[E][v] = 1` iff `v ∈ E`; one row per edge in input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    pub rows: Vec<Vec<u8>>,
}

pub fn incidence_matrix(h: &HyperGraph) -> IncidenceMatrix {
    let rows = h
        .edges
        .iter()
        .map(|e| (0..h.n).map(|v| u8::from(e.contains(v))).collect())
        .collect();
    IncidenceMatrix { rows }
}

/// G(H): two vertices are adjacent iff some edge contains both.
pub fn two_section(h: &HyperGraph) -> Graph {
    let mut rows = vec![0u64; h.n];
    for &e in &h.edges {
        for v in e {
            rows[v] |= e.bits() & !(1u64 << v);
        }
    }
    Graph::from_rows(rows).expect("2-section rows are symmetric and loop-free")
}

/// Every set of at least two vertices that is pairwise covered by edges
/// lies inside a single edge. Decided on the maximal cliques of the
/// 2-section against the inclusion-maximal edges.
pub fn is_conformal(h: &HyperGraph) -> bool {
    conformality_gap(h).is_none()
}

/// A maximal clique of the 2-section (of size ≥ 2) contained in no edge.
fn conformality_gap(h: &HyperGraph) -> Option<VertexSet> {
    let g = two_section(h);
    let edges = h.maximal_edges();
    clique::maximal_cliques(g.rows(), g.vertices().bits())
        .into_iter()
        .map(VertexSet::from_bits)
        .filter(|k| k.len() >= 2)
        .find(|&k| !edges.iter().any(|&e| k.is_subset(e)))
}

/// [`is_conformal`] as a verdict; the note records any reduction to
/// inclusion-maximal edges.
pub fn check_conformal(h: &HyperGraph) -> Verdict {
    let gap = conformality_gap(h);
    let mut verdict = Verdict::predicate("conformal", usize::from(gap.is_some()));
    if let Some(k) = gap {
        verdict = verdict.with_witness(Witness::Vertices { vertices: k });
    }
    let kept = h.maximal_edges().len();
    if kept != h.edges.len() {
        verdict = verdict.with_note(format!(
            "reduced {} edges to {kept} inclusion-maximal edges",
            h.edges.len()
        ));
    }
    verdict
}

/// The hypergraph whose edges are the maximal stable sets of `g`.
pub fn maximal_stable_set_hypergraph(g: &Graph) -> HyperGraph {
    maximal_stable_set_hypergraph_on(&Analysis::new(g))
}

fn maximal_stable_set_hypergraph_on(a: &Analysis) -> HyperGraph {
    HyperGraph {
        n: a.n(),
        edges: a.maximal_stable_sets().to_vec(),
    }
}

/// 2·r_max ≤ |V| for the maximal-stable-set hypergraph H of `g`, where
/// r_max = α(G).
///
/// The hypotheses (empty edge intersection, edges covering V) are taken on
/// the maximum stable sets, whose intersection is α_core and whose union
/// misses exactly τ_core. On all maximal stable sets they are weaker: for
/// P_3 the maximal sets {1}, {0,2} meet in ∅ and cover V while 2·2 > 3.
pub fn check_hyper_corollary(g: &Graph) -> Verdict {
    check_hyper_corollary_on(&Analysis::new(g))
}

pub fn check_hyper_corollary_on(a: &Analysis) -> Verdict {
    let cores = a.cores();
    if !cores.alpha_core.is_empty() || !cores.tau_core.is_empty() {
        let h = maximal_stable_set_hypergraph_on(a);
        let meet = h.edges.iter().fold(a.graph().vertices(), |acc, &e| acc & e);
        let verdict = Verdict::not_applicable(HYPER_COR, "alpha-core or tau-core is nonempty");
        return if meet.is_empty() && !h.has_isolated_vertex() {
            verdict.with_note(
                "alpha-core or tau-core is nonempty, although the maximal stable sets meet in the empty set and cover V",
            )
        } else {
            verdict
        };
    }
    let rank = maximal_stable_set_hypergraph_on(a).rank();
    Verdict::at_most(HYPER_COR, 2 * rank as i64, a.n() as i64)
}

/// The maximal-stable-set hypergraph of `g` is conformal and its rank is
/// α(G).
pub fn check_hyper_conformal(g: &Graph) -> Verdict {
    check_hyper_conformal_on(&Analysis::new(g))
}

pub fn check_hyper_conformal_on(a: &Analysis) -> Verdict {
    let h = maximal_stable_set_hypergraph_on(a);
    let failures = usize::from(!is_conformal(&h)) + usize::from(h.rank() != a.alpha());
    Verdict::predicate(HYPER_CONFORMAL, failures)
}

/// For an r-uniform H without isolated vertices and σ_v = α (both taken on
/// the 2-section): r·σ_v ≤ n.
pub fn check_conjecture2(h: &HyperGraph) -> Verdict {
    if h.edges.is_empty() || h.has_isolated_vertex() {
        return Verdict::not_applicable(CONJ2, "hypergraph has an isolated vertex");
    }
    let Some(rank) = h.uniform_rank() else {
        return Verdict::not_applicable(CONJ2, "hypergraph is not uniform");
    };
    let g = two_section(h);
    let a = Analysis::new(&g);
    let sigma_v = a.sigma_v().expect("nonempty vertex set");
    if sigma_v != a.alpha() {
        return Verdict::not_applicable(CONJ2, "sigma_v differs from alpha");
    }
    Verdict::at_most(CONJ2, (rank * sigma_v) as i64, h.n as i64)
        .with_witness(Witness::Uniformity { rank })
}
