//! Exhaustive generation of k-vertex-critical graphs in an H-free class.
//!
//! The search grows candidate graphs one vertex at a time. Every candidate is
//! a member of the class (the class is hereditary, so a child containing a
//! forbidden pattern can never become a member again) and has chromatic
//! number below `k`. A child that reaches `χ = k` is tested for criticality
//! and never grown further: any proper supergraph of it contains a proper
//! induced subgraph with `χ = k` and so is not critical.
//!
//! Each candidate is extended only in ways some critical supergraph must
//! use. If the candidate has a comparable pair `N(a) ⊆ N(b)` with `a ≁ b`,
//! every critical supergraph has a vertex adjacent to `a` and not to `b`, so
//! only such vertices are added. Otherwise, if a vertex `u` has degree below
//! `k - 1`, only vertices adjacent to `u` are added. Any critical graph
//! containing the candidate as an induced subgraph contains one of the
//! children, which gives completeness by induction from `K1`.
//!
//! Candidates of equal order are deduplicated by canonical form.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use rayon::prelude::*;

use crate::coloring::k_colourable;
use crate::criticality::{comparable_pair, is_k_vertex_critical};
use crate::graph::{Graph, VertexSet};
use crate::graph6::MAX_SHORT_ORDER;
use crate::iso::{all_graphs, canonical_form, CanonicalForm, IsoError};
use crate::search::{first_violation, is_family_member, CompiledPattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("k must be at least 2 (got {0})")]
    KTooSmall(usize),
    #[error("forbidden pattern {0} has no vertices")]
    EmptyPattern(usize),
    #[error("max order {max_order} is below k = {k}")]
    MaxOrderBelowK { max_order: usize, k: usize },
    #[error("max order {0} exceeds the supported limit of {max}", max = MAX_SHORT_ORDER)]
    MaxOrderTooLarge(usize),
    #[error("seed graph {0} contains a forbidden pattern")]
    SeedNotInFamily(usize),
    #[error("seed graph {index} has order {order}, above the max order")]
    SeedTooLarge { index: usize, order: usize },
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error("could not build worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    pub k: usize,
    pub forbidden: Vec<Graph>,
    pub max_order: usize,
    /// Drive extensions by comparable pairs. When off, only the degree rule
    /// restricts extensions.
    pub prune_comparable: bool,
    /// Starting graphs; `None` starts from `K1`. Completeness then only
    /// covers critical graphs containing one of the seeds.
    pub seeds: Option<Vec<Graph>>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl EnumerationConfig {
    pub fn new(k: usize, forbidden: Vec<Graph>, max_order: usize) -> Self {
        EnumerationConfig {
            k,
            forbidden,
            max_order,
            prune_comparable: true,
            seeds: None,
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<(), EnumerateError> {
        if self.k < 2 {
            return Err(EnumerateError::KTooSmall(self.k));
        }
        if let Some(i) = self.forbidden.iter().position(|h| h.order() == 0) {
            return Err(EnumerateError::EmptyPattern(i));
        }
        if self.max_order < self.k {
            return Err(EnumerateError::MaxOrderBelowK {
                max_order: self.max_order,
                k: self.k,
            });
        }
        if self.max_order > MAX_SHORT_ORDER {
            return Err(EnumerateError::MaxOrderTooLarge(self.max_order));
        }
        if let Some(seeds) = &self.seeds {
            for (index, s) in seeds.iter().enumerate() {
                if s.order() > self.max_order {
                    return Err(EnumerateError::SeedTooLarge {
                        index,
                        order: s.order(),
                    });
                }
                if is_family_member(s, &self.forbidden).is_err() {
                    return Err(EnumerateError::SeedNotInFamily(index));
                }
            }
        }
        Ok(())
    }
}

/// Counters for where the search spent and cut work.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Candidates that were extended.
    pub expanded: u64,
    /// Children built (before any filtering).
    pub children: u64,
    /// Children rejected for containing a forbidden pattern.
    pub pruned_family: u64,
    /// Children isomorphic to one already generated at the same order.
    pub pruned_duplicate: u64,
    /// Distinct candidates whose chromatic number reached `k`.
    pub reached_k: u64,
    /// Of those, how many were not critical.
    pub reached_k_not_critical: u64,
    /// Extensions restricted by a comparable pair.
    pub comparable_branchings: u64,
    /// Extensions restricted by a low-degree vertex.
    pub degree_branchings: u64,
    /// Unrestricted extensions.
    pub free_branchings: u64,
    /// Candidates dropped because some vertex cannot reach degree `k - 1`
    /// within the order cap.
    pub pruned_degree_deadline: u64,
    /// Live candidates left at the order cap.
    pub truncated_at_cap: u64,
    /// Distinct candidates per order.
    pub candidates_by_order: BTreeMap<usize, u64>,
}

impl SearchStats {
    fn merge(&mut self, o: SearchStats) {
        self.expanded += o.expanded;
        self.children += o.children;
        self.pruned_family += o.pruned_family;
        self.pruned_duplicate += o.pruned_duplicate;
        self.reached_k += o.reached_k;
        self.reached_k_not_critical += o.reached_k_not_critical;
        self.comparable_branchings += o.comparable_branchings;
        self.degree_branchings += o.degree_branchings;
        self.free_branchings += o.free_branchings;
        self.pruned_degree_deadline += o.pruned_degree_deadline;
        self.truncated_at_cap += o.truncated_at_cap;
        for (k, v) in o.candidates_by_order {
            *self.candidates_by_order.entry(k).or_default() += v;
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub k: usize,
    pub max_order: usize,
    /// Critical graphs in canonical labelling, sorted by canonical form.
    pub found: Vec<Graph>,
    pub forms: Vec<CanonicalForm>,
    /// Count per order for every order in `k..=max_order`.
    pub counts_by_order: BTreeMap<usize, usize>,
    /// True when the search closed with no cut that depends on the order
    /// cap, so `found` is the complete list at every order.
    pub complete: bool,
    pub stats: SearchStats,
}

impl EnumerationReport {
    pub fn found_forms(&self) -> HashSet<CanonicalForm> {
        self.forms.iter().cloned().collect()
    }
}

/// The constraint a new vertex's neighbourhood must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branching {
    Comparable { dominated: usize, dominating: usize },
    LowDegree(usize),
    Free,
}

fn choose_branching(g: &Graph, k: usize, prune_comparable: bool) -> Branching {
    if prune_comparable {
        if let Some((a, b)) = comparable_pair(g) {
            return Branching::Comparable {
                dominated: a,
                dominating: b,
            };
        }
    }
    let low = (0..g.order())
        .filter(|&v| g.degree(v) + 1 < k)
        .min_by_key(|&v| (g.degree(v), v));
    match low {
        Some(u) => Branching::LowDegree(u),
        None => Branching::Free,
    }
}

/// Minimum number of vertices that must still be added before every vertex
/// has degree at least `k - 1`.
fn degree_deficit(g: &Graph, k: usize) -> usize {
    (0..g.order())
        .map(|v| (k - 1).saturating_sub(g.degree(v)))
        .max()
        .unwrap_or(0)
}

struct Engine<'a> {
    k: usize,
    max_order: usize,
    prune_comparable: bool,
    patterns: &'a [CompiledPattern],
}

#[derive(Default)]
struct LevelOutput {
    next: HashSet<CanonicalForm>,
    found: Vec<CanonicalForm>,
    stats: SearchStats,
}

impl Engine<'_> {
    /// Children of a live candidate, deduplicated locally.
    fn children(&self, g: &Graph, stats: &mut SearchStats, out: &mut HashSet<CanonicalForm>) {
        let n = g.order();
        let (must, must_not) = match choose_branching(g, self.k, self.prune_comparable) {
            Branching::Comparable {
                dominated,
                dominating,
            } => {
                stats.comparable_branchings += 1;
                (1u64 << dominated, 1u64 << dominating)
            }
            Branching::LowDegree(u) => {
                stats.degree_branchings += 1;
                (1u64 << u, 0)
            }
            Branching::Free => {
                stats.free_branchings += 1;
                (0, 0)
            }
        };
        stats.expanded += 1;
        let free = g.vertices().bits() & !must & !must_not;
        let mut sub = 0u64;
        loop {
            let nbrs = VertexSet(sub | must);
            let child = g.add_vertex_unchecked(nbrs);
            stats.children += 1;
            if self.patterns.iter().any(|p| p.contains_through(&child, n)) {
                stats.pruned_family += 1;
            } else {
                let form = canonical_form(&child).expect("order within limit");
                if !out.insert(form) {
                    stats.pruned_duplicate += 1;
                }
            }
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
        }
    }

    /// Handles one distinct candidate at its order.
    fn visit(&self, form: &CanonicalForm, acc: &mut LevelOutput) {
        let g = form.to_graph();
        let n = g.order();
        if k_colourable(&g, self.k - 1).is_none() {
            acc.stats.reached_k += 1;
            if self.is_sound_critical(&g) {
                acc.found.push(form.clone());
            } else {
                acc.stats.reached_k_not_critical += 1;
            }
            return;
        }
        if n >= self.max_order {
            acc.stats.truncated_at_cap += 1;
            return;
        }
        if n + degree_deficit(&g, self.k) > self.max_order {
            acc.stats.pruned_degree_deadline += 1;
            return;
        }
        self.children(&g, &mut acc.stats, &mut acc.next);
    }

    /// Full re-verification before a graph is reported.
    fn is_sound_critical(&self, g: &Graph) -> bool {
        is_k_vertex_critical(g, self.k) && first_violation(g, self.patterns).is_none()
    }
}

/// Enumerates the `k`-vertex-critical graphs of order at most `max_order`
/// that contain none of the forbidden patterns as induced subgraphs.
pub fn enumerate_critical(cfg: &EnumerationConfig) -> Result<EnumerationReport, EnumerateError> {
    cfg.validate()?;
    match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| EnumerateError::ThreadPool(e.to_string()))?
            .install(|| run(cfg)),
        None => run(cfg),
    }
}

fn run(cfg: &EnumerationConfig) -> Result<EnumerationReport, EnumerateError> {
    let patterns: Vec<CompiledPattern> =
        cfg.forbidden.iter().cloned().map(CompiledPattern::new).collect();
    let engine = Engine {
        k: cfg.k,
        max_order: cfg.max_order,
        prune_comparable: cfg.prune_comparable,
        patterns: &patterns,
    };

    let mut pending: BTreeMap<usize, HashSet<CanonicalForm>> = BTreeMap::new();
    let seeds = match &cfg.seeds {
        Some(s) => s.clone(),
        None => vec![Graph::empty(1).expect("order 1")],
    };
    for s in &seeds {
        pending
            .entry(s.order())
            .or_default()
            .insert(canonical_form(s)?);
    }

    let mut stats = SearchStats::default();
    let mut found: Vec<CanonicalForm> = Vec::new();
    while let Some((order, level)) = pending.pop_first() {
        let mut level: Vec<CanonicalForm> = level.into_iter().collect();
        level.sort_unstable();
        stats.candidates_by_order.insert(order, level.len() as u64);
        let out = level
            .par_iter()
            .fold(LevelOutput::default, |mut acc, form| {
                engine.visit(form, &mut acc);
                acc
            })
            .reduce(LevelOutput::default, |mut a, b| {
                let (big, small) = if a.next.len() >= b.next.len() {
                    (&mut a, b)
                } else {
                    let mut b = b;
                    std::mem::swap(&mut a, &mut b);
                    (&mut a, b)
                };
                for f in small.next {
                    if !big.next.insert(f) {
                        big.stats.pruned_duplicate += 1;
                    }
                }
                big.found.extend(small.found);
                big.stats.merge(small.stats);
                a
            });
        stats.merge(out.stats);
        found.extend(out.found);
        if !out.next.is_empty() {
            let slot = pending.entry(order + 1).or_default();
            for f in out.next {
                if !slot.insert(f) {
                    stats.pruned_duplicate += 1;
                }
            }
        }
    }

    found.sort_unstable();
    found.dedup();
    let graphs: Vec<Graph> = found.iter().map(CanonicalForm::to_graph).collect();
    let mut counts_by_order: BTreeMap<usize, usize> = (cfg.k..=cfg.max_order).map(|n| (n, 0)).collect();
    for g in &graphs {
        *counts_by_order.entry(g.order()).or_default() += 1;
    }
    let complete = stats.truncated_at_cap == 0 && stats.pruned_degree_deadline == 0;
    Ok(EnumerationReport {
        k: cfg.k,
        max_order: cfg.max_order,
        found: graphs,
        forms: found,
        counts_by_order,
        complete,
        stats,
    })
}

/// One extension step for a single candidate: the canonical children kept
/// after branching restriction and family filtering. Empty when `g` already
/// needs `k` colours, since such graphs are reported, not grown.
pub fn expand(g: &Graph, cfg: &EnumerationConfig) -> Result<Vec<Graph>, EnumerateError> {
    cfg.validate()?;
    if g.order() >= cfg.max_order.min(MAX_SHORT_ORDER) || k_colourable(g, cfg.k - 1).is_none() {
        return Ok(Vec::new());
    }
    let patterns: Vec<CompiledPattern> =
        cfg.forbidden.iter().cloned().map(CompiledPattern::new).collect();
    let engine = Engine {
        k: cfg.k,
        max_order: cfg.max_order,
        prune_comparable: cfg.prune_comparable,
        patterns: &patterns,
    };
    let mut stats = SearchStats::default();
    let mut out = HashSet::new();
    engine.children(g, &mut stats, &mut out);
    let mut forms: Vec<CanonicalForm> = out.into_iter().collect();
    forms.sort_unstable();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}

/// Independent oracle: filter every graph of order at most `n`.
pub fn brute_force_critical(
    k: usize,
    forbidden: &[Graph],
    n: usize,
) -> Result<Vec<CanonicalForm>, EnumerateError> {
    let mut out = Vec::new();
    for m in 0..=n {
        for g in all_graphs(m)? {
            if is_family_member(&g, forbidden).is_ok() && is_k_vertex_critical(&g, k) {
                out.push(canonical_form(&g)?);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}
