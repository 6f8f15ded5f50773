//! Open conjectures relating ω_e, σ_v and σ_e to the order of a graph.
//! Violations here are findings to report, not failures of the checker.

use serde::Serialize;

use crate::clique;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::Analysis;
use crate::verdict::{Verdict, Witness};

pub const CONJ1: &str = "conj1";
pub const CONJ1_BOUND: &str = "conj1-bound";
pub const CONJ3: &str = "conj3";
pub const OMEGA_V: &str = "omega-v";

/// Pairwise-disjoint cliques, one through each vertex of a maximum stable
/// set `M` and meeting `M` only there. `parts[j]` goes through the j-th
/// smallest vertex of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueSystem {
    pub parts: Vec<VertexSet>,
}

impl CliqueSystem {
    /// Re-checks every structural requirement from scratch.
    pub fn is_valid_for(&self, g: &Graph, stable: VertexSet, size: usize) -> bool {
        if self.parts.len() != stable.len() {
            return false;
        }
        let mut used = VertexSet::EMPTY;
        for (part, x) in self.parts.iter().zip(stable.iter()) {
            let is_clique = part
                .iter()
                .all(|u| (*part - VertexSet::singleton(u)).is_subset(g.neighbors(u)));
            if !is_clique
                || part.len() != size
                || (*part & stable) != VertexSet::singleton(x)
                || !part.is_disjoint(used)
            {
                return false;
            }
            used = used | *part;
        }
        true
    }
}

fn is_stable(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| g.neighbors(v).is_disjoint(set))
}

/// Backtracking search for a [`CliqueSystem`] of `size`-cliques. Candidate
/// cliques for each vertex of `stable` are tried in ascending bit order, so
/// the first system found is deterministic.
pub fn clique_system_search(
    g: &Graph,
    stable: VertexSet,
    size: usize,
) -> Result<Option<CliqueSystem>> {
    if !stable.is_subset(g.vertices())
        || !is_stable(g, stable)
        || stable.len() != Analysis::new(g).alpha()
    {
        return Err(Error::NotMaximumStableSet(stable.to_vec()));
    }
    Ok(search_unchecked(g, stable, size))
}

fn search_unchecked(g: &Graph, stable: VertexSet, size: usize) -> Option<CliqueSystem> {
    if size == 0 {
        return None;
    }
    let candidates: Vec<Vec<u64>> = stable
        .iter()
        .map(|x| {
            let room = (g.neighbors(x) - stable).bits();
            clique::cliques_of_size(g.rows(), room, size - 1)
                .into_iter()
                .map(|k| k | 1u64 << x)
                .collect()
        })
        .collect();

    fn pick(candidates: &[Vec<u64>], used: u64, chosen: &mut Vec<u64>) -> bool {
        let Some(options) = candidates.get(chosen.len()) else {
            return true;
        };
        for &k in options {
            if k & used == 0 {
                chosen.push(k);
                if pick(candidates, used | k, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(candidates.len());
    pick(&candidates, 0, &mut chosen).then(|| CliqueSystem {
        parts: chosen.into_iter().map(VertexSet::from_bits).collect(),
    })
}

fn b_graph_hypothesis(a: &Analysis) -> Option<&'static str> {
    if a.n() == 0 {
        Some("null graph")
    } else if a.graph().has_isolated_vertex() {
        Some("graph has an isolated vertex")
    } else if !a.is_b_graph() {
        Some("not a B-graph")
    } else {
        None
    }
}

/// ω_e·σ_v ≤ n for B-graphs without isolated vertices.
pub fn check_conjecture1_bound(g: &Graph) -> Verdict {
    check_conjecture1_bound_on(&Analysis::new(g))
}

pub fn check_conjecture1_bound_on(a: &Analysis) -> Verdict {
    if let Some(why) = b_graph_hypothesis(a) {
        return Verdict::not_applicable(CONJ1_BOUND, why);
    }
    let omega_e = a
        .omega_e()
        .expect("a graph without isolated vertices has edges");
    let sigma_v = a.sigma_v().expect("nonempty");
    Verdict::at_most(CONJ1_BOUND, (omega_e * sigma_v) as i64, a.n() as i64)
}

/// The bound together with a clique system of ω_e-cliques for every
/// maximum stable set. `lhs` counts failures: one for the bound, one per
/// maximum stable set without a system; the first such set is the witness.
pub fn check_conjecture1_full(g: &Graph) -> Verdict {
    check_conjecture1_full_on(&Analysis::new(g))
}

pub fn check_conjecture1_full_on(a: &Analysis) -> Verdict {
    let bound = check_conjecture1_bound_on(a);
    if !bound.applicable() {
        return Verdict::not_applicable(CONJ1, bound.note.unwrap_or_default());
    }
    let omega_e = a.omega_e().expect("applicable");
    let failing: Vec<VertexSet> = a
        .maximum_stable_sets()
        .into_iter()
        .filter(|&m| search_unchecked(a.graph(), m, omega_e).is_none())
        .collect();
    let failures = usize::from(bound.violated()) + failing.len();
    let verdict = Verdict::predicate(CONJ1, failures).with_note(format!(
        "omega_e*sigma_v = {} vs n = {}; {} maximum stable sets without a clique system",
        bound.lhs,
        bound.rhs,
        failing.len()
    ));
    match failing.first() {
        Some(&m) => verdict.with_witness(Witness::StableSet { vertices: m }),
        None => verdict,
    }
}

/// If α = σ_e and ω = ω_e (no isolated vertices), then ω_e·σ_e ≤ n.
pub fn check_conjecture3(g: &Graph) -> Verdict {
    check_conjecture3_on(&Analysis::new(g))
}

pub fn check_conjecture3_on(a: &Analysis) -> Verdict {
    if a.n() == 0 || a.graph().has_isolated_vertex() {
        return Verdict::not_applicable(CONJ3, "graph has an isolated vertex");
    }
    let (Some(sigma_e), Some(omega_e)) = (a.sigma_e(), a.omega_e()) else {
        return Verdict::not_applicable(CONJ3, "sigma_e undefined on a complete graph");
    };
    if sigma_e != a.alpha() || omega_e != a.omega() {
        return Verdict::not_applicable(CONJ3, "requires alpha = sigma_e and omega = omega_e");
    }
    Verdict::at_most(CONJ3, (omega_e * sigma_e) as i64, a.n() as i64)
}

/// ω_v·σ_v ≤ n on B-graphs without isolated vertices. This substitution is
/// known to fail on some graphs; violations are recorded as observations.
pub fn check_omega_v_substitution(g: &Graph) -> Verdict {
    check_omega_v_substitution_on(&Analysis::new(g))
}

pub fn check_omega_v_substitution_on(a: &Analysis) -> Verdict {
    if let Some(why) = b_graph_hypothesis(a) {
        return Verdict::not_applicable(OMEGA_V, why);
    }
    let omega_v = a.omega_v().expect("nonempty");
    let sigma_v = a.sigma_v().expect("nonempty");
    Verdict::at_most(OMEGA_V, (omega_v * sigma_v) as i64, a.n() as i64)
}
