//! Exact colouring: k-colourability with witness, chromatic number,
//! independence number, and a greedy clique bound.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Colour index per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring(pub Vec<usize>);

impl Colouring {
    pub fn colours_used(&self) -> usize {
        self.0.iter().max().map_or(0, |&c| c + 1)
    }

    /// Proper on `g` and uses only colours `0..k`.
    pub fn is_proper(&self, g: &Graph, k: usize) -> bool {
        self.0.len() == g.order()
            && self.0.iter().all(|&c| c < k)
            && g.edges().iter().all(|&(u, v)| self.0[u] != self.0[v])
    }
}

/// A proper `k`-colouring of `g`, or `None` if none exists.
///
/// DSATUR branch and bound. A greedy clique is precoloured with colours
/// `0..q`, and a fresh colour is only opened as the next unused index.
pub fn k_colourable(g: &Graph, k: usize) -> Option<Colouring> {
    let n = g.order();
    if n == 0 {
        return Some(Colouring(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let clique = greedy_clique(g);
    if clique.len() > k {
        return None;
    }
    let mut state = DsaturState {
        g,
        k,
        colour: vec![usize::MAX; n],
        classes: vec![0u64; k],
        uncoloured: g.vertices().bits(),
    };
    for (c, v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    if state.solve(clique.len()) {
        let col = Colouring(state.colour);
        debug_assert!(col.is_proper(g, k));
        Some(col)
    } else {
        None
    }
}

struct DsaturState<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    classes: Vec<u64>,
    uncoloured: u64,
}

impl DsaturState<'_> {
    #[inline]
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.classes[c] |= 1u64 << v;
        self.uncoloured &= !(1u64 << v);
    }

    #[inline]
    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = usize::MAX;
        self.classes[c] &= !(1u64 << v);
        self.uncoloured |= 1u64 << v;
    }

    /// Colours blocked for `v` among the first `used` classes, as a bit mask.
    #[inline]
    fn blocked(&self, v: usize, used: usize) -> u64 {
        let nb = self.g.neighbours(v).bits();
        let mut mask = 0u64;
        for (c, &cls) in self.classes[..used].iter().enumerate() {
            if cls & nb != 0 {
                mask |= 1u64 << c;
            }
        }
        mask
    }

    fn solve(&mut self, used: usize) -> bool {
        if self.uncoloured == 0 {
            return true;
        }
        // Most saturated vertex; ties broken by degree into uncoloured vertices.
        let mut pick = usize::MAX;
        let mut pick_blocked = 0u64;
        let mut best = (-1i64, -1i64);
        for v in VertexSet(self.uncoloured).iter() {
            let b = self.blocked(v, used);
            let sat = b.count_ones() as i64;
            if sat as usize >= used && used >= self.k {
                return false;
            }
            let deg = (self.g.neighbours(v).bits() & self.uncoloured).count_ones() as i64;
            if (sat, deg) > best {
                best = (sat, deg);
                pick = v;
                pick_blocked = b;
            }
        }
        let v = pick;
        for c in 0..used {
            if pick_blocked >> c & 1 == 0 {
                self.assign(v, c);
                if self.solve(used) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        if used < self.k {
            self.assign(v, used);
            if self.solve(used + 1) {
                return true;
            }
            self.unassign(v, used);
        }
        false
    }
}

/// Least `k` with a proper `k`-colouring.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_with_witness(g).0
}

/// Chromatic number together with an optimal colouring.
pub fn chromatic_with_witness(g: &Graph) -> (usize, Colouring) {
    let mut k = clique_lower_bound(g);
    loop {
        if let Some(c) = k_colourable(g, k) {
            return (k, c);
        }
        k += 1;
    }
}

/// Greedy clique: repeatedly add the candidate with most candidate
/// neighbours. Returned as a vertex set.
fn greedy_clique(g: &Graph) -> VertexSet {
    let mut clique = VertexSet::EMPTY;
    let mut cand = g.vertices().bits();
    while cand != 0 {
        let v = VertexSet(cand)
            .iter()
            .max_by_key(|&v| ((g.neighbours(v).bits() & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty");
        clique.insert(v);
        cand &= g.neighbours(v).bits();
    }
    clique
}

/// Size of a greedily found clique; a lower bound on the clique number.
pub fn clique_lower_bound(g: &Graph) -> usize {
    greedy_clique(g).len()
}

/// Exact independence number.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    mis(g, g.vertices().bits(), 0, &mut best);
    best
}

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    mis_set(g, g.vertices().bits(), VertexSet::EMPTY, &mut best);
    best
}

fn mis(g: &Graph, cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // A vertex with at most one candidate neighbour can always be taken.
    let mut v = usize::MAX;
    let mut max_deg = 0u32;
    let mut max_v = 0usize;
    for u in VertexSet(cand).iter() {
        let d = (g.neighbours(u).bits() & cand).count_ones();
        if d <= 1 {
            v = u;
            break;
        }
        if d > max_deg {
            max_deg = d;
            max_v = u;
        }
    }
    if v != usize::MAX {
        let rest = cand & !g.neighbours(v).bits() & !(1u64 << v);
        mis(g, rest, size + 1, best);
        return;
    }
    let v = max_v;
    mis(g, cand & !g.neighbours(v).bits() & !(1u64 << v), size + 1, best);
    mis(g, cand & !(1u64 << v), size, best);
}

fn mis_set(g: &Graph, cand: u64, cur: VertexSet, best: &mut VertexSet) {
    if cand == 0 {
        if cur.len() > best.len() {
            *best = cur;
        }
        return;
    }
    if cur.len() + cand.count_ones() as usize <= best.len() {
        return;
    }
    let v = VertexSet(cand)
        .iter()
        .max_by_key(|&u| (g.neighbours(u).bits() & cand).count_ones())
        .expect("nonempty");
    let mut with = cur;
    with.insert(v);
    mis_set(g, cand & !g.neighbours(v).bits() & !(1u64 << v), with, best);
    if (g.neighbours(v).bits() & cand) != 0 {
        mis_set(g, cand & !(1u64 << v), cur, best);
    }
}
