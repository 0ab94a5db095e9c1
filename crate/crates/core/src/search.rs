//! Induced subgraph containment by backtracking over pattern vertices.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Injective map from pattern vertices to host vertices preserving both
/// edges and non-edges. `map[p]` is the host image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn image(&self) -> VertexSet {
        VertexSet::from_vertices(self.0.iter().copied())
    }

    /// Checks injectivity, range, and that adjacency is preserved both ways.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.0;
        if m.len() != pattern.order() || m.iter().any(|&x| x >= host.order()) {
            return false;
        }
        if self.image().len() != m.len() {
            return false;
        }
        (0..m.len()).all(|u| {
            (u + 1..m.len()).all(|v| pattern.has_edge(u, v) == host.has_edge(m[u], m[v]))
        })
    }
}

/// A pattern with its search order precomputed, ready to match many hosts.
#[derive(Debug, Clone)]
pub struct CompiledPattern {
    graph: Graph,
    order: Vec<usize>,
    /// `rooted[p]` is a search order that starts at `p`.
    rooted: Vec<Vec<usize>>,
}

impl CompiledPattern {
    pub fn new(graph: Graph) -> CompiledPattern {
        let order = static_order(&graph, None);
        let rooted = (0..graph.order())
            .map(|p| static_order(&graph, Some(p)))
            .collect();
        CompiledPattern {
            graph,
            order,
            rooted,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn find_in(&self, host: &Graph) -> Option<Embedding> {
        if self.graph.order() > host.order() {
            return None;
        }
        let mut map = vec![usize::MAX; self.graph.order()];
        if Matcher::new(host, &self.graph, &self.order).run(0, VertexSet::EMPTY, &mut map) {
            Some(Embedding(map))
        } else {
            None
        }
    }

    /// Finds an embedding whose image contains host vertex `root`.
    pub fn find_through(&self, host: &Graph, root: usize) -> Option<Embedding> {
        let k = self.graph.order();
        if k > host.order() || k == 0 {
            return None;
        }
        let mut tried_shapes: Vec<(usize, usize)> = Vec::new();
        for p in 0..k {
            // Pattern vertices with the same degree and neighbourhood class
            // give the same search; skip exact twins.
            let sig = (self.graph.degree(p), self.graph.neighbours(p).bits() as usize);
            if tried_shapes.contains(&sig) {
                continue;
            }
            tried_shapes.push(sig);
            if !fits(&self.graph, host, p, root) {
                continue;
            }
            let order = &self.rooted[p];
            let mut map = vec![usize::MAX; k];
            map[p] = root;
            let m = Matcher::new(host, &self.graph, order);
            if m.run(1, VertexSet::singleton(root), &mut map) {
                return Some(Embedding(map));
            }
        }
        None
    }

    pub fn contains_through(&self, host: &Graph, root: usize) -> bool {
        self.find_through(host, root).is_some()
    }
}

fn fits(pattern: &Graph, host: &Graph, p: usize, x: usize) -> bool {
    host.degree(x) >= pattern.degree(p)
        && host.order() - 1 - host.degree(x) >= pattern.order() - 1 - pattern.degree(p)
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, order: &'a [usize]) -> Self {
        Matcher {
            host,
            pattern,
            order,
        }
    }

    fn run(&self, depth: usize, used: VertexSet, map: &mut [usize]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.host.vertices().difference(used).bits();
        for &q in &self.order[..depth] {
            let nq = self.host.neighbours(map[q]).bits();
            if self.pattern.has_edge(p, q) {
                cand &= nq;
            } else {
                cand &= !nq;
            }
            if cand == 0 {
                return false;
            }
        }
        for x in VertexSet(cand).iter() {
            if !fits(self.pattern, self.host, p, x) {
                continue;
            }
            map[p] = x;
            let mut next = used;
            next.insert(x);
            if self.run(depth + 1, next, map) {
                return true;
            }
        }
        map[p] = usize::MAX;
        false
    }
}

/// Components largest first; inside a component, each next vertex has the
/// most already-placed neighbours (ties: higher degree, lower index).
fn static_order(g: &Graph, root: Option<usize>) -> Vec<usize> {
    let n = g.order();
    let mut comps: Vec<VertexSet> = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for v in 0..n {
        if seen.contains(v) {
            continue;
        }
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next = next.union(g.neighbours(u));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        comps.push(comp);
    }
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    if let Some(r) = root {
        let i = comps.iter().position(|c| c.contains(r)).expect("root is a vertex");
        let c = comps.remove(i);
        comps.insert(0, c);
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    for comp in comps {
        let start = match root {
            Some(r) if comp.contains(r) => r,
            _ => comp
                .iter()
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                .expect("component nonempty"),
        };
        order.push(start);
        placed.insert(start);
        while !comp.is_subset(placed) {
            let v = comp
                .difference(placed)
                .iter()
                .max_by_key(|&v| {
                    (
                        g.neighbours(v).intersection(placed).len(),
                        g.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex exists");
            order.push(v);
            placed.insert(v);
        }
    }
    order
}

/// Some embedding of `h` as an induced subgraph of `g`, or `None` if `g` is
/// `h`-free.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Embedding> {
    if h.order() > g.order() {
        return None;
    }
    let order = static_order(h, None);
    let mut map = vec![usize::MAX; h.order()];
    if Matcher::new(g, h, &order).run(0, VertexSet::EMPTY, &mut map) {
        Some(Embedding(map))
    } else {
        None
    }
}

/// First forbidden pattern found in a host, with where it sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyViolation {
    pub pattern_index: usize,
    pub embedding: Embedding,
}

/// `Ok(())` when `g` contains none of `forbidden`; otherwise the first
/// violation in list order.
pub fn is_family_member(g: &Graph, forbidden: &[Graph]) -> Result<(), FamilyViolation> {
    for (i, h) in forbidden.iter().enumerate() {
        if let Some(embedding) = find_induced(g, h) {
            return Err(FamilyViolation {
                pattern_index: i,
                embedding,
            });
        }
    }
    Ok(())
}

/// Compiled form of [`is_family_member`] for repeated use.
pub fn first_violation(g: &Graph, forbidden: &[CompiledPattern]) -> Option<FamilyViolation> {
    forbidden.iter().enumerate().find_map(|(i, p)| {
        p.find_in(g).map(|embedding| FamilyViolation {
            pattern_index: i,
            embedding,
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixedError {
    #[error("mixed vertices are undefined for an empty set")]
    EmptySet,
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
}

/// Vertices outside `s` with at least one neighbour and one non-neighbour in `s`.
pub fn mixed_vertices(g: &Graph, s: VertexSet) -> Result<VertexSet, MixedError> {
    if s.is_empty() {
        return Err(MixedError::EmptySet);
    }
    if let Some(v) = s.difference(g.vertices()).first() {
        return Err(MixedError::OutOfRange(v));
    }
    Ok(g.vertices()
        .difference(s)
        .iter()
        .filter(|&v| {
            let t = g.neighbours(v).intersection(s);
            !t.is_empty() && t != s
        })
        .collect())
}
