//! Bit-parallel clique kernels shared by every invariant. Stable sets are
//! cliques of the complement rows, so both directions run through here.

/// Size of a largest clique inside `cand`, where `rows[v]` is the
/// neighbourhood of `v`.
///
/// Branch-and-bound in the MCQ style: candidates are greedily coloured
/// (lowest index first inside each colour class) and a branch is cut as
/// soon as its colour count cannot beat the incumbent.
pub(crate) fn max_clique_size(rows: &[u64], cand: u64) -> usize {
    let mut best = 0;
    expand(rows, cand, 0, &mut best);
    best
}

fn expand(rows: &[u64], mut cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    let mut order = [0u8; 64];
    let mut colour = [0u8; 64];
    let len = colour_sort(rows, cand, &mut order, &mut colour);
    for k in (0..len).rev() {
        if size + colour[k] as usize <= *best {
            return;
        }
        let v = order[k] as usize;
        expand(rows, cand & rows[v], size + 1, best);
        cand &= !(1u64 << v);
    }
}

/// Greedy sequential colouring; `order[..len]` is sorted by colour and
/// `colour[k]` is the colour of `order[k]` (1-based).
fn colour_sort(rows: &[u64], cand: u64, order: &mut [u8; 64], colour: &mut [u8; 64]) -> usize {
    let mut uncoloured = cand;
    let mut c = 0u8;
    let mut len = 0;
    while uncoloured != 0 {
        c += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !rows[v] & !(1u64 << v);
            uncoloured &= !(1u64 << v);
            order[len] = v as u8;
            colour[len] = c;
            len += 1;
        }
    }
    len
}

/// All inclusion-maximal cliques inside `within`, sorted by bit pattern.
/// Bron–Kerbosch with Tomita pivoting.
pub(crate) fn maximal_cliques(rows: &[u64], within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    bron_kerbosch(rows, 0, within, 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(rows: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // pivot maximizes |P ∩ N(u)|; lowest index on ties
    let mut pivot = 0;
    let mut best = None;
    let mut px = p | x;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let score = (p & rows[u]).count_ones();
        if best.is_none_or(|b| score > b) {
            best = Some(score);
            pivot = u;
        }
    }
    let mut todo = p & !rows[pivot];
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        let bit = 1u64 << v;
        bron_kerbosch(rows, r | bit, p & rows[v], x & rows[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// All cliques of exactly `size` vertices inside `cand`, ascending by bit
/// pattern.
pub(crate) fn cliques_of_size(rows: &[u64], cand: u64, size: usize) -> Vec<u64> {
    fn go(rows: &[u64], chosen: u64, cand: u64, left: usize, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(chosen);
            return;
        }
        if (cand.count_ones() as usize) < left {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            go(rows, chosen | 1u64 << v, rest & rows[v], left - 1, out);
        }
    }
    let mut out = Vec::new();
    go(rows, 0, cand, size, &mut out);
    out.sort_unstable();
    out
}
