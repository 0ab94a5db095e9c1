//! Vertex-criticality and the comparable-vertex / comparable-clique test.
//!
//! If a graph has two disjoint `m`-cliques `A`, `B` that can be paired so
//! that `N(a_i) \ A ⊆ N(b_i) \ B` for every `i`, it is not vertex-critical.
//! For `m = 1` this says a vertex-critical graph has no nonadjacent pair
//! `a`, `b` with `N(a) ⊆ N(b)`.

use thiserror::Error;

use crate::coloring::{k_colourable, Colouring};
use crate::graph::{Graph, VertexSet};

/// Outcome of a criticality test, with the reason when it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criticality {
    Critical,
    /// The chromatic number is not `k`. `colourable_with_fewer` says which
    /// side it fell on.
    WrongChromaticNumber { colourable_with_fewer: bool },
    /// Deleting this vertex leaves a graph that still needs `k` colours.
    RemovableVertex(usize),
}

impl Criticality {
    pub fn reason_code(&self) -> &'static str {
        match self {
            Criticality::Critical => "critical",
            Criticality::WrongChromaticNumber {
                colourable_with_fewer: true,
            } => "chi-below-k",
            Criticality::WrongChromaticNumber {
                colourable_with_fewer: false,
            } => "chi-above-k",
            Criticality::RemovableVertex(_) => "non-critical-vertex",
        }
    }
}

/// Classifies `g` against the definition of `k`-vertex-critical.
///
/// `χ(g)` is fixed once, then each deletion only needs a `(k-1)`-colouring.
pub fn classify(g: &Graph, k: usize) -> Criticality {
    assert!(k >= 1, "criticality is defined for k >= 1");
    if k_colourable(g, k - 1).is_some() {
        return Criticality::WrongChromaticNumber {
            colourable_with_fewer: true,
        };
    }
    if k_colourable(g, k).is_none() {
        return Criticality::WrongChromaticNumber {
            colourable_with_fewer: false,
        };
    }
    for v in 0..g.order() {
        let h = g.delete_vertex(v).expect("vertex in range");
        if k_colourable(&h, k - 1).is_none() {
            return Criticality::RemovableVertex(v);
        }
    }
    Criticality::Critical
}

/// True iff `χ(g) = k` and `χ(g - v) = k - 1` for every vertex `v`.
pub fn is_k_vertex_critical(g: &Graph, k: usize) -> bool {
    if g.order() < k {
        return false;
    }
    // Necessary: minimum degree at least k-1.
    if k >= 2 && g.min_degree().is_some_and(|d| d + 1 < k) {
        return false;
    }
    classify(g, k) == Criticality::Critical
}

/// Some nonadjacent pair `(a, b)` with `N(a) ⊆ N(b)`.
pub fn comparable_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    for a in 0..n {
        let na = g.neighbours(a);
        for b in 0..n {
            if a != b && !g.has_edge(a, b) && na.is_subset(g.neighbours(b)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Every comparable pair, `(dominated, dominating)`.
pub fn comparable_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        let na = g.neighbours(a);
        for b in 0..n {
            if a != b && !g.has_edge(a, b) && na.is_subset(g.neighbours(b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Disjoint ordered `m`-cliques `A`, `B` with `N(a_i) \ A ⊆ N(b_i) \ B`.
///
/// Cliques are enumerated explicitly, so this is meant for small `m`.
pub fn comparable_cliques(g: &Graph, m: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    assert!(m >= 1, "clique size must be positive");
    if 2 * m > g.order() {
        return None;
    }
    let cliques = cliques_of_size(g, m);
    for a in &cliques {
        let aset = VertexSet::from_vertices(a.iter().copied());
        for b in &cliques {
            let bset = VertexSet::from_vertices(b.iter().copied());
            if !aset.intersection(bset).is_empty() {
                continue;
            }
            let mut perm = b.clone();
            if let Some(order) = pair_up(g, a, aset, &mut perm, bset, 0) {
                return Some((a.clone(), order));
            }
        }
    }
    None
}

fn pair_up(
    g: &Graph,
    a: &[usize],
    aset: VertexSet,
    b: &mut Vec<usize>,
    bset: VertexSet,
    i: usize,
) -> Option<Vec<usize>> {
    if i == a.len() {
        return Some(b.clone());
    }
    let na = g.neighbours(a[i]).difference(aset);
    for j in i..b.len() {
        b.swap(i, j);
        if na.is_subset(g.neighbours(b[i]).difference(bset)) {
            if let Some(r) = pair_up(g, a, aset, b, bset, i + 1) {
                return Some(r);
            }
        }
        b.swap(i, j);
    }
    None
}

fn cliques_of_size(g: &Graph, m: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, m: usize, cand: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in VertexSet(cand).iter() {
            cur.push(v);
            let above = if v == 63 { 0 } else { !0u64 << (v + 1) };
            let higher = cand & g.neighbours(v).bits() & above;
            rec(g, m, higher, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, m, g.vertices().bits(), &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("graph is not {k}-vertex-critical ({reason})")]
    NotCritical { k: usize, reason: &'static str },
}

/// For each vertex `v`, a `(k-1)`-colouring of `g - v` (relabelled by
/// increasing original index).
pub fn criticality_witnesses(g: &Graph, k: usize) -> Result<Vec<Colouring>, WitnessError> {
    let verdict = classify(g, k);
    if verdict != Criticality::Critical {
        return Err(WitnessError::NotCritical {
            k,
            reason: verdict.reason_code(),
        });
    }
    Ok((0..g.order())
        .map(|v| {
            let h = g.delete_vertex(v).expect("vertex in range");
            k_colourable(&h, k - 1).expect("critical graphs lose a colour on deletion")
        })
        .collect())
}
