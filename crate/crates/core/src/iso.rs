//! Isomorphism by exhaustive vertex-permutation search, pruned by degree.

use crate::graph::Graph;

/// A map `perm` with `perm[v]` the image in `h` of vertex `v` of `g`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let (gd, hd) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }

    fn extend(
        g: &Graph,
        h: &Graph,
        gd: &[usize],
        hd: &[usize],
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used >> w & 1 == 1 || gd[v] != hd[w] {
                continue;
            }
            let consistent = map
                .iter()
                .enumerate()
                .all(|(u, &x)| g.has_edge(u, v) == h.has_edge(x, w));
            if consistent {
                map.push(w);
                if extend(g, h, gd, hd, map, used | 1u64 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    extend(g, h, &gd, &hd, &mut map, 0).then_some(map)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
