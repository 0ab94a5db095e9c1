//! Certifying k-colourability for families whose (k+1)-vertex-critical
//! graphs are known.
//!
//! Every answer carries a witness that can be checked against the input
//! alone: a proper colouring, an induced copy of a (k+1)-critical graph, or an
//! induced copy of a forbidden pattern.

use thiserror::Error;

use crate::coloring::{k_colourable, Colouring};
use crate::criticality::is_k_vertex_critical;
use crate::graph::Graph;
use crate::graph6::{parse_graph6_lines, Graph6Error};
use crate::iso::{canonical_form, canonical_graph, CanonicalForm};
use crate::patterns::realize;
use crate::search::{find_induced, first_violation, CompiledPattern, Embedding, FamilyViolation};

const THREE_CRITICAL_COGEM: &str = include_str!("../data/3critical-cogem.g6");
const FOUR_CRITICAL_COGEM: &str = include_str!("../data/4critical-cogem.g6");

/// Edge lists of the nine 4-vertex-critical co-gem-free graphs, as drawn.
/// The shipped data file holds their canonical forms.
pub const FOUR_CRITICAL_COGEM_EDGES: [(usize, &[(usize, usize)]); 9] = [
    (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    (6, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]),
    (7, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5)]),
    (7, &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5), (4, 6)]),
    (7, &[(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (2, 3), (2, 5), (2, 6), (3, 4), (3, 6), (4, 5), (4, 6)]),
    (7, &[(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 3), (2, 5), (3, 4), (3, 6), (4, 5)]),
    (7, &[(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 3), (2, 5), (2, 6), (3, 4), (3, 6), (4, 5)]),
    (7, &[(0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 5), (1, 6), (2, 3), (2, 6), (3, 4), (3, 6), (4, 5)]),
    (7, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)]),
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("list entry {index} is not {k}-vertex-critical")]
    NotCritical { index: usize, k: usize },
    #[error("list entry {index} contains forbidden pattern {pattern}")]
    EntryNotInFamily { index: usize, pattern: usize },
    #[error("no built-in critical list for this family and k = {0}; supply one")]
    NoKnownList(usize),
    #[error("graph is not {k}-colourable but contains no listed critical graph: the list is incomplete")]
    IncompleteList { k: usize },
    #[error("graph contains forbidden pattern {}", .0.pattern_index)]
    NotInFamily(FamilyViolation),
    #[error("found a (co-gem, K4)-free graph with no 4-colouring")]
    FourColouringMissing,
    #[error("bad list file at line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
}

/// Where a critical list came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Built into the crate.
    Shipped,
    /// Produced by a bounded enumeration; `complete` is copied from its report.
    Enumerated { complete: bool },
    /// Read from a user file.
    Supplied,
}

/// The (k+1)-vertex-critical graphs of a family, used to certify
/// k-colourability.
#[derive(Debug, Clone)]
pub struct CriticalList {
    k: usize,
    forbidden: Vec<Graph>,
    /// Canonical graphs sorted by (order, canonical form).
    graphs: Vec<Graph>,
    provenance: Provenance,
}

impl CriticalList {
    /// Verifies every entry is (k+1)-critical and avoids `forbidden`.
    pub fn new(
        k: usize,
        forbidden: Vec<Graph>,
        graphs: Vec<Graph>,
        provenance: Provenance,
    ) -> Result<CriticalList, CertifyError> {
        let mut keyed: Vec<(CanonicalForm, Graph)> = Vec::with_capacity(graphs.len());
        for (index, g) in graphs.iter().enumerate() {
            if !is_k_vertex_critical(g, k + 1) {
                return Err(CertifyError::NotCritical { index, k: k + 1 });
            }
            if let Err(v) = crate::search::is_family_member(g, &forbidden) {
                return Err(CertifyError::EntryNotInFamily {
                    index,
                    pattern: v.pattern_index,
                });
            }
            let form = canonical_form(g).expect("critical graphs are small");
            keyed.push((form, canonical_graph(g)));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        Ok(CriticalList {
            k,
            forbidden,
            graphs: keyed.into_iter().map(|(_, g)| g).collect(),
            provenance,
        })
    }

    /// Parses graph6 lines and verifies them as in [`CriticalList::new`].
    pub fn from_graph6(
        k: usize,
        forbidden: Vec<Graph>,
        text: &str,
        provenance: Provenance,
    ) -> Result<CriticalList, CertifyError> {
        let graphs = parse_graph6_lines(text)
            .map_err(|(line, source)| CertifyError::Parse { line, source })?;
        CriticalList::new(k, forbidden, graphs, provenance)
    }

    /// The built-in list for `k`-colouring a co-gem-free subfamily, when one
    /// is known.
    ///
    /// For `k <= 1` the lists `{K1}` and `{K2}` hold for every graph. The 3-
    /// and 4-critical co-gem-free lists are shipped. A family inside the
    /// P4-free graphs is perfect, so its only candidate is `K_{k+1}`.
    /// (co-gem, K4)-free graphs are 4-colourable and (co-gem, C5, K5)-free
    /// graphs are 5-colourable, so above those thresholds the list is empty.
    /// Each list is filtered to the family.
    pub fn known(k: usize, forbidden: Vec<Graph>) -> Result<CriticalList, CertifyError> {
        let within = |names: &[&str]| {
            let targets: Vec<Graph> = names.iter().map(|n| realize(n).expect("catalogued")).collect();
            family_within(&forbidden, &targets)
        };
        let candidates: Vec<Graph> = if k <= 1 {
            vec![Graph::complete(k + 1).expect("small")]
        } else if within(&["P4"]) {
            vec![Graph::complete(k + 1).expect("k below max order")]
        } else if (k >= 4 && within(&["co-gem", "K4"])) || (k >= 5 && within(&["co-gem", "C5", "K5"])) {
            Vec::new()
        } else if k == 2 && within(&["co-gem"]) {
            shipped(THREE_CRITICAL_COGEM)
        } else if k == 3 && within(&["co-gem"]) {
            shipped(FOUR_CRITICAL_COGEM)
        } else {
            return Err(CertifyError::NoKnownList(k));
        };
        let kept: Vec<Graph> = candidates
            .into_iter()
            .filter(|g| crate::search::is_family_member(g, &forbidden).is_ok())
            .collect();
        CriticalList::new(k, forbidden, kept, Provenance::Shipped)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn forbidden(&self) -> &[Graph] {
        &self.forbidden
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

fn shipped(text: &str) -> Vec<Graph> {
    parse_graph6_lines(text).expect("shipped data parses")
}

/// True when every graph avoiding `forbidden` also avoids each of `targets`,
/// shown by each target containing some forbidden pattern.
pub fn family_within(forbidden: &[Graph], targets: &[Graph]) -> bool {
    targets
        .iter()
        .all(|t| forbidden.iter().any(|h| find_induced(t, h).is_some()))
}

/// A checkable answer to "is this graph k-colourable?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Colourable(Colouring),
    /// An induced copy of a (k+1)-vertex-critical graph.
    NotColourable { critical: Graph, embedding: Embedding },
    /// An induced copy of a forbidden pattern.
    NotInFamily { pattern: Graph, embedding: Embedding },
}

impl Certificate {
    pub fn verdict(&self) -> &'static str {
        match self {
            Certificate::Colourable(_) => "Colourable",
            Certificate::NotColourable { .. } => "NotColourable",
            Certificate::NotInFamily { .. } => "NotInFamily",
        }
    }
}

/// Decides k-colourability of a family member by searching for listed
/// critical graphs, falling back to the exact solver for the colouring.
///
/// The smallest embedded critical graph is reported, ties broken by
/// canonical form.
pub fn certify_colourable(
    g: &Graph,
    k: usize,
    list: &CriticalList,
) -> Result<Certificate, CertifyError> {
    assert_eq!(k, list.k, "list is for a different k");
    let forbidden: Vec<CompiledPattern> =
        list.forbidden.iter().cloned().map(CompiledPattern::new).collect();
    if let Some(v) = first_violation(g, &forbidden) {
        return Ok(Certificate::NotInFamily {
            pattern: list.forbidden[v.pattern_index].clone(),
            embedding: v.embedding,
        });
    }
    for c in &list.graphs {
        if let Some(embedding) = find_induced(g, c) {
            return Ok(Certificate::NotColourable {
                critical: c.clone(),
                embedding,
            });
        }
    }
    match k_colourable(g, k) {
        Some(c) => Ok(Certificate::Colourable(c)),
        None => Err(CertifyError::IncompleteList { k }),
    }
}

/// Checks a certificate against `g` and `k` alone; the embedded critical
/// graph's criticality is recomputed.
pub fn verify_certificate(g: &Graph, k: usize, cert: &Certificate) -> bool {
    match cert {
        Certificate::Colourable(c) => c.is_proper(g, k),
        Certificate::NotColourable {
            critical,
            embedding,
        } => embedding.is_valid(g, critical) && is_k_vertex_critical(critical, k + 1),
        Certificate::NotInFamily { pattern, embedding } => {
            pattern.order() > 0 && embedding.is_valid(g, pattern)
        }
    }
}

/// A proper 4-colouring of a (co-gem, K4)-free graph.
pub fn colour_cogem_k4free(g: &Graph) -> Result<Colouring, CertifyError> {
    let family = [realize("co-gem").expect("catalogued"), Graph::complete(4).expect("small")];
    crate::search::is_family_member(g, &family).map_err(CertifyError::NotInFamily)?;
    let c = k_colourable(g, 4).ok_or(CertifyError::FourColouringMissing)?;
    debug_assert!(c.is_proper(g, 4));
    Ok(c)
}
