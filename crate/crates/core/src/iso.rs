//! Canonical labelling, isomorphism testing, and isomorph-free generation.
//!
//! Canonical labels come from an individualisation-refinement search: the
//! ordered partition is refined to an equitable one, a vertex of the first
//! smallest non-singleton cell is individualised, and the process recurses
//! until the partition is discrete. Each discrete leaf gives a relabelled
//! graph; the leaf whose graph6 bit string is lexicographically smallest is
//! the canonical one. Automorphisms found between leaves prune the tree.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::graph6::{self, Graph6Error, MAX_SHORT_ORDER};

/// Largest order [`all_graphs`] will generate.
pub const MAX_ALL_GRAPHS_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("order {0} exceeds the canonical-form limit of {max}", max = MAX_SHORT_ORDER)]
    OrderTooLarge(usize),
    #[error("exhaustive generation is limited to order {max}; asked for {0}", max = MAX_ALL_GRAPHS_ORDER)]
    GenerationLimit(usize),
}

/// graph6 word of the canonically relabelled graph.
///
/// Equal forms mean isomorphic graphs. Byte order sorts by order first
/// because the header byte is `n + 63`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Box<[u8]>);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        (self.0[0] - 63) as usize
    }

    /// Decodes back to the canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        graph6::parse_graph6(self.as_str()).expect("canonical forms are valid graph6")
    }

    /// Wraps a graph6 word after checking that it is already canonical.
    pub fn from_graph6(text: &str) -> Result<CanonicalForm, CanonParseError> {
        let g = graph6::parse_graph6(text)?;
        let cf = canonical_form(&g).map_err(|_| CanonParseError::NotCanonical)?;
        if cf.as_str() != text.trim() {
            return Err(CanonParseError::NotCanonical);
        }
        Ok(cf)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonParseError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("graph6 word is not in canonical form")]
    NotCanonical,
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

/// Returns `lab` with `lab[i]` the vertex placed at canonical position `i`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search::new(g);
    let root = vec![VertexSet::full(n).bits()];
    let mut path = Vec::new();
    search.descend(root, &mut path);
    search.best_lab
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labelling(g);
    relabel(g, &lab)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    if g.order() > MAX_SHORT_ORDER {
        return Err(IsoError::OrderTooLarge(g.order()));
    }
    Ok(form_of_canonical_graph(&canonical_graph(g)))
}

pub(crate) fn form_of_canonical_graph(g: &Graph) -> CanonicalForm {
    CanonicalForm(
        graph6::emit_graph6_bytes(g)
            .expect("order checked by caller")
            .into_boxed_slice(),
    )
}

/// Exact isomorphism test with cheap invariant rejection first.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_graph(g) == canonical_graph(h)
}

/// Vertex `lab[i]` of `g` becomes vertex `i`.
fn relabel(g: &Graph, lab: &[usize]) -> Graph {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    g.permute(&pos)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    best_lab: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

struct Leaf {
    key: Vec<u64>,
    lab: Vec<usize>,
    path: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            first: None,
            best: None,
            best_lab: Vec::new(),
            generators: Vec::new(),
        }
    }

    /// Returns `Some(level)` when the caller should unwind to the node whose
    /// path has length `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].count_ones() > 1)
            .min_by_key(|&i| (cells[i].count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried: Vec<usize> = Vec::new();
        for v in VertexSet(cells[target]).iter() {
            if !tried.is_empty() && self.equivalent_to_tried(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cells[target] & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    /// True when `v` lies in the orbit of an already tried vertex under the
    /// known automorphisms that fix `path` pointwise.
    fn equivalent_to_tried(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if path.iter().any(|&p| gen[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gen.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = leaf_key(self.g, &lab);
        let Some(first) = &self.first else {
            self.best_lab = lab.clone();
            self.first = Some(Leaf {
                key,
                lab,
                path: path.to_vec(),
            });
            return None;
        };
        if key == first.key {
            let gen = perm_between(&first.lab, &lab);
            let level = common_prefix(&first.path, path);
            self.generators.push(gen);
            return Some(level);
        }
        if let Some(best) = &self.best {
            if key == best.key {
                let gen = perm_between(&best.lab, &lab);
                let level = common_prefix(&best.path, path);
                self.generators.push(gen);
                return Some(level);
            }
        }
        let beats = match &self.best {
            Some(best) => key < best.key,
            None => key < first.key,
        };
        if beats {
            self.best_lab = lab.clone();
            self.best = Some(Leaf {
                key,
                lab,
                path: path.to_vec(),
            });
        }
        None
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Automorphism sending `from[i]` to `to[i]`.
fn perm_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut p = vec![0usize; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        p[a] = b;
    }
    p
}

/// Column keys of the relabelled adjacency matrix. Column `j` holds the bits
/// `(0,j), (1,j), ..., (j-1,j)` with `(0,j)` most significant, so comparing
/// key vectors compares graph6 bit strings.
fn leaf_key(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let mut pos = [0u8; 64];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i as u8;
    }
    let mut key = Vec::with_capacity(n);
    for (j, &v) in lab.iter().enumerate() {
        let mut col = 0u64;
        for u in g.neighbours(v).iter() {
            let i = pos[u] as usize;
            if i < j {
                col |= 1u64 << (63 - i);
            }
        }
        key.push(col);
    }
    key
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Split cells keep their position and are ordered by neighbour count.
fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    let rows = g.rows();
    let mut groups = [0u64; 65];
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut changed = false;
            let mut next = Vec::with_capacity(rows.len());
            for &cell in &cells {
                if cell & (cell - 1) == 0 {
                    next.push(cell);
                    continue;
                }
                let (mut lo, mut hi) = (64usize, 0usize);
                for v in VertexSet(cell).iter() {
                    let c = (rows[v] & splitter).count_ones() as usize;
                    groups[c] |= 1u64 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo != hi {
                    changed = true;
                }
                for slot in groups.iter_mut().take(hi + 1).skip(lo) {
                    if *slot != 0 {
                        next.push(*slot);
                        *slot = 0;
                    }
                }
            }
            if changed {
                cells = next;
                continue 'restart;
            }
        }
        return cells;
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// each in canonical labelling, sorted by canonical form.
///
/// Built by canonical augmentation: a child `G + v` is kept only when
/// deleting `v` gives the same class as deleting the canonically last vertex
/// of the child, so each class is produced from exactly one parent class.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, IsoError> {
    if n > MAX_ALL_GRAPHS_ORDER {
        return Err(IsoError::GenerationLimit(n));
    }
    let mut level = vec![Graph::empty(0).expect("order 0")];
    for _ in 0..n {
        let mut next: Vec<(CanonicalForm, Graph)> = Vec::new();
        for parent in &level {
            let parent_form = form_of_canonical_graph(parent);
            let m = parent.order();
            let mut seen = HashSet::new();
            for mask in 0..(1u64 << m) {
                let child = parent.add_vertex_unchecked(VertexSet(mask));
                let lab = canonical_labelling(&child);
                let last = lab[m];
                if last != m {
                    let alt = child.delete_vertex(last).expect("vertex in range");
                    if canonical_form(&alt).expect("small order") != parent_form {
                        continue;
                    }
                }
                let canon = relabel(&child, &lab);
                let form = form_of_canonical_graph(&canon);
                if seen.insert(form.clone()) {
                    next.push((form, canon));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}
