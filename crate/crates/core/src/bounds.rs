//! Checkers for the proven bounds, the equality classification of the
//! stability/cover-number bound, the extremal families and minimum-edge
//! catalogs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::graph::{Graph, MAX_VERTICES};
use crate::invariants::{decomposition_failures, has_perfect_matching, Analysis};
use crate::iso::are_isomorphic;
use crate::verdict::{Verdict, Witness};

/// Largest order the equality classifier decides.
pub const CLASSIFY_MAX_VERTICES: usize = 12;

pub const THEOREM1: &str = "theorem1";
pub const THEOREM1_EQUALITY: &str = "theorem1-equality";
pub const COR1: &str = "cor1";
pub const BERGE: &str = "berge";
pub const EDGE_BOUND: &str = "edge-bound";
pub const GALVIN_GODDARD: &str = "galvin-goddard";
pub const DECOMPOSITION: &str = "decomposition";
pub const MATCHING_REMARK: &str = "matching-remark";

/// α ≤ τ·(1 + α − σ_v) for graphs without isolated vertices.
pub fn check_theorem1(g: &Graph) -> Verdict {
    check_theorem1_on(&Analysis::new(g))
}

pub fn check_theorem1_on(a: &Analysis) -> Verdict {
    if a.graph().has_isolated_vertex() {
        return Verdict::not_applicable(THEOREM1, "graph has an isolated vertex");
    }
    let Some(sigma_v) = a.sigma_v() else {
        return Verdict::not_applicable(THEOREM1, "null graph");
    };
    let (alpha, tau) = (a.alpha() as i64, a.tau() as i64);
    Verdict::at_most(THEOREM1, alpha, tau * (1 + alpha - sigma_v as i64))
}

/// Decides whether an equality case of [`check_theorem1`] with α > σ_v is
/// a clique `K_τ` whose every vertex carries the same number ℓ ≥ 1 of
/// pendant leaves. Holds on a match; violated when the graph is an equality
/// case of some other shape.
pub fn classify_equality_theorem1(g: &Graph) -> Verdict {
    classify_equality_theorem1_on(&Analysis::new(g))
}

pub fn classify_equality_theorem1_on(a: &Analysis) -> Verdict {
    let bound = check_theorem1_on(a);
    if !bound.applicable() || !bound.equality {
        return Verdict::not_applicable(THEOREM1_EQUALITY, "not an equality case of theorem1");
    }
    let (alpha, tau, sigma_v) = (a.alpha(), a.tau(), a.sigma_v().expect("applicable"));
    if alpha <= sigma_v {
        return Verdict::not_applicable(THEOREM1_EQUALITY, "alpha = sigma_v");
    }
    let n = a.n();
    let predicted_leaves = alpha - sigma_v + 1;
    if n > CLASSIFY_MAX_VERTICES {
        return Verdict::unchecked(
            THEOREM1_EQUALITY,
            format!("isomorphism search is capped at {CLASSIFY_MAX_VERTICES} vertices"),
        );
    }
    let fitted = (n.is_multiple_of(tau) && n / tau >= 2).then(|| n / tau - 1);
    let matched = fitted
        .and_then(|leaves| generate_family(&FamilySpec::CliqueOfStars { tau, leaves }).ok())
        .is_some_and(|family| are_isomorphic(a.graph(), &family));
    let verdict = Verdict::predicate(THEOREM1_EQUALITY, usize::from(!matched));
    if matched {
        verdict.with_witness(Witness::CliqueOfStars {
            tau,
            leaves: fitted.expect("matched"),
            predicted_leaves,
        })
    } else {
        verdict.with_note(format!(
            "equality case with alpha={alpha}, tau={tau}, sigma_v={sigma_v} is not a clique of stars"
        ))
    }
}

/// α − |α_core| ≤ τ − |τ_core|.
pub fn check_cor1(g: &Graph) -> Verdict {
    check_cor1_on(&Analysis::new(g))
}

pub fn check_cor1_on(a: &Analysis) -> Verdict {
    let cores = a.cores();
    Verdict::at_most(
        COR1,
        (a.alpha() - cores.alpha_core.len()) as i64,
        (a.tau() - cores.tau_core.len()) as i64,
    )
}

/// A B-graph without isolated vertices is τ-critical. `lhs` counts the
/// vertices whose deletion leaves τ unchanged.
pub fn check_berge(g: &Graph) -> Verdict {
    check_berge_on(&Analysis::new(g))
}

pub fn check_berge_on(a: &Analysis) -> Verdict {
    if a.graph().has_isolated_vertex() {
        return Verdict::not_applicable(BERGE, "graph has an isolated vertex");
    }
    if !a.is_b_graph() {
        return Verdict::not_applicable(BERGE, "not a B-graph");
    }
    let alpha_core = a.cores().alpha_core;
    let verdict = Verdict::predicate(BERGE, alpha_core.len());
    if alpha_core.is_empty() {
        verdict
    } else {
        verdict.with_witness(Witness::Vertices {
            vertices: alpha_core,
        })
    }
}

/// |E| ≥ α − c + Γ(α, τ).
pub fn check_edge_bound(g: &Graph) -> Verdict {
    check_edge_bound_on(&Analysis::new(g))
}

pub fn check_edge_bound_on(a: &Analysis) -> Verdict {
    if a.n() == 0 {
        return Verdict::not_applicable(EDGE_BOUND, "null graph");
    }
    let (alpha, tau) = (a.alpha(), a.tau());
    let g = gamma(alpha as u64, tau as u64).expect("alpha ≥ 1 on a nonempty graph");
    let rhs = alpha as i64 - a.component_count() as i64 + g as i64;
    Verdict::at_least(EDGE_BOUND, a.graph().edge_count() as i64, rhs)
}

/// With p = σ_v − 1 and q = ω_v − 1: n ≥ p + q + √(4pq), evaluated as
/// `4pq ≤ d·|d|` where `d = n − p − q`.
pub fn check_galvin_goddard(g: &Graph) -> Verdict {
    check_galvin_goddard_on(&Analysis::new(g))
}

pub fn check_galvin_goddard_on(a: &Analysis) -> Verdict {
    let (Some(sigma_v), Some(omega_v)) = (a.sigma_v(), a.omega_v()) else {
        return Verdict::not_applicable(GALVIN_GODDARD, "null graph");
    };
    let (p, q) = (sigma_v - 1, omega_v - 1);
    let d = a.n() as i64 - p as i64 - q as i64;
    Verdict::at_most(GALVIN_GODDARD, 4 * (p * q) as i64, d * d.abs())
        .with_witness(Witness::StableCliqueSizes { p, q })
}

/// The structure theorem for the core decomposition: partition,
/// N(α_core) ⊆ τ_core, edgeless α_core, and a B-part that is τ-critical,
/// a B-graph and free of isolated vertices.
pub fn check_decomposition(g: &Graph) -> Verdict {
    check_decomposition_on(&Analysis::new(g))
}

pub fn check_decomposition_on(a: &Analysis) -> Verdict {
    let failures = decomposition_failures(a.graph(), &a.cores());
    let verdict = Verdict::predicate(DECOMPOSITION, failures.len());
    if failures.is_empty() {
        verdict
    } else {
        verdict.with_note(failures.join("; "))
    }
}

/// α = σ_v = τ forces a perfect matching (graphs without isolated
/// vertices).
pub fn check_matching_remark(g: &Graph) -> Verdict {
    check_matching_remark_on(&Analysis::new(g))
}

pub fn check_matching_remark_on(a: &Analysis) -> Verdict {
    if a.graph().has_isolated_vertex() {
        return Verdict::not_applicable(MATCHING_REMARK, "graph has an isolated vertex");
    }
    let applicable = a.sigma_v() == Some(a.alpha()) && a.alpha() == a.tau();
    if !applicable {
        return Verdict::not_applicable(MATCHING_REMARK, "requires alpha = sigma_v = tau");
    }
    Verdict::predicate(
        MATCHING_REMARK,
        usize::from(!has_perfect_matching(a.graph())),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `K_tau` with `leaves` pendant vertices attached to each clique
    /// vertex.
    CliqueOfStars {
        tau: usize,
        leaves: usize,
    },
    Star {
        leaves: usize,
    },
    Complete {
        n: usize,
    },
    OddCycle {
        n: usize,
    },
}

impl FamilySpec {
    /// Vertex count, `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FamilySpec::CliqueOfStars { tau, leaves } => leaves.checked_add(1)?.checked_mul(tau),
            FamilySpec::Star { leaves } => leaves.checked_add(1),
            FamilySpec::Complete { n } | FamilySpec::OddCycle { n } => Some(n),
        }
    }
}

/// Vertex layout: clique (or star centre) first, then the leaves of each
/// centre in turn.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph> {
    let invalid = |msg: &str| Err(Error::InvalidFamily(msg.to_string()));
    match *spec {
        FamilySpec::CliqueOfStars { tau, leaves } if tau == 0 || leaves == 0 => {
            return invalid("clique-of-stars needs tau ≥ 1 and leaves ≥ 1")
        }
        FamilySpec::Star { leaves: 0 } => return invalid("a star needs at least one leaf"),
        FamilySpec::Complete { n: 0 } => return invalid("complete graph needs n ≥ 1"),
        FamilySpec::OddCycle { n } if n < 3 || n % 2 == 0 => {
            return invalid("odd cycle needs odd n ≥ 3")
        }
        _ => {}
    }
    let n = spec
        .order()
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| Error::InvalidFamily(format!("more than {MAX_VERTICES} vertices")))?;
    let edges: Vec<(usize, usize)> = match *spec {
        FamilySpec::CliqueOfStars { tau, leaves } => {
            let clique = (0..tau).flat_map(|i| (i + 1..tau).map(move |j| (i, j)));
            let pendants =
                (0..tau).flat_map(|c| (0..leaves).map(move |k| (c, tau + c * leaves + k)));
            clique.chain(pendants).collect()
        }
        FamilySpec::Star { leaves } => (1..=leaves).map(|l| (0, l)).collect(),
        FamilySpec::Complete { n } => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
        FamilySpec::OddCycle { n } => (0..n).map(|i| (i, (i + 1) % n)).collect(),
    };
    Graph::from_edges(n, edges)
}

/// Fewest edges among the stream graphs with the given (α, τ, c), compared
/// with α − c + Γ(α, τ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogMin {
    pub alpha: usize,
    pub tau: usize,
    pub components: usize,
    pub examined: usize,
    pub matched: usize,
    pub min_edges: Option<usize>,
    /// Number of stream graphs attaining the minimum.
    pub minimizers: usize,
    /// First minimum in stream order.
    pub witness: Option<Graph>,
    /// One minimum per isomorphism class, each the first of its class in
    /// stream order, ordered by stream position.
    pub witness_classes: Vec<Graph>,
    #[serde(skip)]
    class_indices: Vec<usize>,
    pub bound: Option<i64>,
}

impl CatalogMin {
    pub fn new(alpha: usize, tau: usize, components: usize) -> Self {
        let bound = gamma(alpha as u64, tau as u64)
            .ok()
            .map(|g| alpha as i64 - components as i64 + g as i64);
        CatalogMin {
            alpha,
            tau,
            components,
            examined: 0,
            matched: 0,
            min_edges: None,
            minimizers: 0,
            witness: None,
            witness_classes: Vec::new(),
            class_indices: Vec::new(),
            bound,
        }
    }

    /// Folds in the graph at stream position `index`. Positions must be
    /// distinct across everything later merged together.
    pub fn observe(&mut self, index: usize, g: &Graph) {
        self.examined += 1;
        if g.order() != self.alpha + self.tau {
            return;
        }
        let a = Analysis::new(g);
        if a.alpha() != self.alpha || a.component_count() != self.components {
            return;
        }
        self.matched += 1;
        let m = g.edge_count();
        match self.min_edges {
            Some(best) if m > best => return,
            Some(best) if m == best => {}
            _ => {
                self.min_edges = Some(m);
                self.minimizers = 0;
                self.witness_classes.clear();
                self.class_indices.clear();
            }
        }
        self.minimizers += 1;
        self.add_class(index, g.clone());
        self.witness = self.witness_classes.first().cloned();
    }

    fn add_class(&mut self, index: usize, g: Graph) {
        match self
            .witness_classes
            .iter()
            .position(|w| are_isomorphic(w, &g))
        {
            Some(i) if self.class_indices[i] <= index => {}
            Some(i) => {
                self.witness_classes.remove(i);
                self.class_indices.remove(i);
                self.add_class(index, g);
            }
            None => {
                let at = self.class_indices.partition_point(|&j| j < index);
                self.class_indices.insert(at, index);
                self.witness_classes.insert(at, g);
            }
        }
    }

    /// Combines two partial folds over disjoint parts of one stream; the
    /// result does not depend on how the stream was split.
    pub fn merge(mut self, other: CatalogMin) -> CatalogMin {
        self.examined += other.examined;
        self.matched += other.matched;
        let take = match (self.min_edges, other.min_edges) {
            (_, None) => return self,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(&b),
        };
        match take {
            std::cmp::Ordering::Less => {}
            std::cmp::Ordering::Greater => {
                self.min_edges = other.min_edges;
                self.minimizers = other.minimizers;
                self.witness_classes = other.witness_classes;
                self.class_indices = other.class_indices;
            }
            std::cmp::Ordering::Equal => {
                self.minimizers += other.minimizers;
                for (i, g) in other.class_indices.into_iter().zip(other.witness_classes) {
                    self.add_class(i, g);
                }
            }
        }
        self.witness = self.witness_classes.first().cloned();
        self
    }

    /// `min_edges ≥ bound`, or `None` when nothing matched.
    pub fn respects_bound(&self) -> Option<bool> {
        Some(self.min_edges? as i64 >= self.bound?)
    }
}

pub fn catalog_min_edges<I>(alpha: usize, tau: usize, components: usize, stream: I) -> CatalogMin
where
    I: IntoIterator<Item = Graph>,
{
    let mut acc = CatalogMin::new(alpha, tau, components);
    for (i, g) in stream.into_iter().enumerate() {
        acc.observe(i, &g);
    }
    acc
}
