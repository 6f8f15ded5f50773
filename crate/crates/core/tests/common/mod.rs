//! Brute-force oracles. Each works from the adjacency predicate alone so
//! it shares no search code with the library.
#![allow(dead_code)]

use giwb_core::{Graph, HyperGraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0u64..1 << n
}

fn pairs_all(g: &Graph, s: u64, adjacent: bool) -> bool {
    let n = g.order();
    (0..n).filter(|u| s >> u & 1 == 1).all(|u| {
        (u + 1..n)
            .filter(|w| s >> w & 1 == 1)
            .all(|w| g.has_edge(u, w) == adjacent)
    })
}

pub fn is_stable(g: &Graph, s: u64) -> bool {
    pairs_all(g, s, false)
}

pub fn is_clique(g: &Graph, s: u64) -> bool {
    pairs_all(g, s, true)
}

fn size(s: u64) -> usize {
    s.count_ones() as usize
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|&s| is_stable(g, s))
        .map(size)
        .max()
        .unwrap_or(0)
}

pub fn omega(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|&s| is_clique(g, s))
        .map(size)
        .max()
        .unwrap_or(0)
}

pub fn maximum_stable_sets(g: &Graph) -> Vec<u64> {
    let a = alpha(g);
    subsets(g.order())
        .filter(|&s| size(s) == a && is_stable(g, s))
        .collect()
}

fn maximal_by(g: &Graph, ok: fn(&Graph, u64) -> bool) -> Vec<u64> {
    let n = g.order();
    subsets(n)
        .filter(|&s| ok(g, s) && (0..n).all(|v| s >> v & 1 == 1 || !ok(g, s | 1 << v)))
        .collect()
}

pub fn maximal_stable_sets(g: &Graph) -> Vec<u64> {
    maximal_by(g, is_stable)
}

pub fn maximal_cliques(g: &Graph) -> Vec<u64> {
    maximal_by(g, is_clique)
}

/// min over vertices of the largest maximal stable set through it.
pub fn sigma_v(g: &Graph) -> Option<usize> {
    let sets = maximal_stable_sets(g);
    (0..g.order())
        .map(|v| {
            sets.iter()
                .filter(|&&s| s >> v & 1 == 1)
                .map(|&s| size(s))
                .max()
                .unwrap()
        })
        .min()
}

pub fn omega_v(g: &Graph) -> Option<usize> {
    sigma_v(&g.complement())
}

/// min over edges of the largest clique through it.
pub fn omega_e(g: &Graph) -> Option<usize> {
    let n = g.order();
    let cliques: Vec<u64> = subsets(n).filter(|&s| is_clique(g, s)).collect();
    let mut best = None;
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) {
                let pair = 1u64 << u | 1 << w;
                let m = cliques
                    .iter()
                    .filter(|&&c| c & pair == pair)
                    .map(|&c| size(c))
                    .max()
                    .unwrap();
                best = Some(best.map_or(m, |b: usize| b.min(m)));
            }
        }
    }
    best
}

pub fn sigma_e(g: &Graph) -> Option<usize> {
    omega_e(&g.complement())
}

/// (∩ maximum stable sets, vertices in none of them).
pub fn cores(g: &Graph) -> (VertexSet, VertexSet) {
    let sets = maximum_stable_sets(g);
    let all = (1u64 << g.order()) - 1;
    let meet = sets.iter().fold(all, |acc, s| acc & s);
    let union = sets.iter().fold(0, |acc, s| acc | s);
    (
        VertexSet::from_bits(meet),
        VertexSet::from_bits(all & !union),
    )
}

#[allow(clippy::needless_range_loop)]
pub fn components(g: &Graph) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if g.has_edge(u, w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

pub fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .filter(|&(u, w)| g.has_edge(u, w))
        .collect()
}

/// Edges whose removal raises the component count.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let all = edges(g);
    let before = components(g);
    all.iter()
        .copied()
        .filter(|&e| {
            let rest = all.iter().copied().filter(|&f| f != e);
            components(&Graph::from_edges(g.order(), rest).unwrap()) > before
        })
        .collect()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    fn go(g: &Graph, free: u64) -> bool {
        if free == 0 {
            return true;
        }
        let u = free.trailing_zeros() as usize;
        (u + 1..g.order())
            .filter(|&w| free >> w & 1 == 1 && g.has_edge(u, w))
            .any(|w| go(g, free & !(1 << u) & !(1 << w)))
    }
    g.order().is_multiple_of(2) && go(g, (1u64 << g.order()) - 1)
}

/// Every vertex set of size ≥ 2 whose pairs are each covered by an edge lies
/// in one edge.
pub fn is_conformal(h: &HyperGraph) -> bool {
    let edges: Vec<u64> = h.edges().iter().map(|e| e.bits()).collect();
    let covered = |u: usize, w: usize| edges.iter().any(|&e| e >> u & 1 == 1 && e >> w & 1 == 1);
    subsets(h.order()).filter(|&s| size(s) >= 2).all(|s| {
        let vs: Vec<usize> = (0..h.order()).filter(|v| s >> v & 1 == 1).collect();
        let pairwise = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&w| covered(u, w)));
        !pairwise || edges.iter().any(|&e| e & s == s)
    })
}

/// All families of disjoint `m`-cliques, one per vertex of `stable` and
/// meeting `stable` only there, by trying every vertex subset.
pub fn clique_systems_exist(g: &Graph, stable: u64, m: usize) -> bool {
    let n = g.order();
    let xs: Vec<usize> = (0..n).filter(|v| stable >> v & 1 == 1).collect();
    let options: Vec<Vec<u64>> = xs
        .iter()
        .map(|&x| {
            subsets(n)
                .filter(|&s| size(s) == m && s & stable == 1 << x && is_clique(g, s))
                .collect()
        })
        .collect();
    fn pick(options: &[Vec<u64>], used: u64) -> bool {
        match options.split_first() {
            None => true,
            Some((first, rest)) => first.iter().any(|&s| s & used == 0 && pick(rest, used | s)),
        }
    }
    pick(&options, 0)
}

/// Minimum of Σ C(z_i, 2) over all compositions of a + t into a parts.
pub fn gamma_by_compositions(a: u64, t: u64) -> u64 {
    fn go(parts_left: u64, sum_left: u64, max_part: u64) -> Option<u64> {
        if parts_left == 0 {
            return (sum_left == 0).then_some(0);
        }
        (0..=sum_left.min(max_part))
            .filter_map(|z| {
                go(parts_left - 1, sum_left - z, z).map(|rest| rest + z * z.saturating_sub(1) / 2)
            })
            .min()
    }
    go(a, a + t, a + t).expect("a ≥ 1")
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
