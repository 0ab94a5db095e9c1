//! Executable versions of the structural arguments: Sperner's bound on
//! antichains, the forbidden-subgraph consequences the finiteness proofs
//! establish, bounded conjecture slices, and the mixed-vertex machinery of
//! the (co-gem, P5, P3+cP2) argument.

use thiserror::Error;

use crate::coloring::{chromatic_number, independence_number};
use crate::criticality::is_k_vertex_critical;
use crate::enumerate::{enumerate_critical, EnumerateError, EnumerationConfig, EnumerationReport};
use crate::graph::{Graph, VertexSet};
use crate::iso::CanonicalForm;
use crate::patterns::{antihole, realize, PatternId};
use crate::search::{find_induced, is_family_member, mixed_vertices, MixedError};

/// Largest family `max_antichain` accepts.
pub const MAX_ANTICHAIN_MEMBERS: usize = 20;
/// Largest ground set `sperner_bound` accepts.
pub const MAX_SPERNER_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimsError {
    #[error("family has {0} members; at most {MAX_ANTICHAIN_MEMBERS} are supported")]
    TooManyMembers(usize),
    #[error("member {index} is not a subset of the {n}-element ground set")]
    MemberOutsideGround { index: usize, n: usize },
    #[error("member {0} repeats an earlier member")]
    DuplicateMember(usize),
    #[error("ground set of size {0} is out of range")]
    GroundTooLarge(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Mixed(#[from] MixedError),
}

/// Subsets of `{0, .., n-1}` as bit masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    members: Vec<u64>,
}

impl SetFamily {
    /// Rejects members outside the ground set and repeated members.
    pub fn new(n: usize, members: Vec<u64>) -> Result<SetFamily, ClaimsError> {
        let f = SetFamily::with_duplicates(n, members)?;
        for (i, m) in f.members.iter().enumerate() {
            if f.members[..i].contains(m) {
                return Err(ClaimsError::DuplicateMember(i));
            }
        }
        Ok(f)
    }

    /// As [`SetFamily::new`] but keeps repeats; equal members are comparable,
    /// so at most one of them can sit in an antichain.
    pub fn with_duplicates(n: usize, members: Vec<u64>) -> Result<SetFamily, ClaimsError> {
        if n > 64 {
            return Err(ClaimsError::GroundTooLarge(n));
        }
        let ground = VertexSet::full(n).bits();
        if let Some(index) = members.iter().position(|&m| m & !ground != 0) {
            return Err(ClaimsError::MemberOutsideGround { index, n });
        }
        Ok(SetFamily { n, members })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// No member contains another (and no member repeats).
    pub fn is_antichain(&self) -> bool {
        let m = &self.members;
        (0..m.len()).all(|i| (0..m.len()).all(|j| i == j || m[i] & !m[j] != 0))
    }
}

/// Size of the largest antichain in `f`, as the independence number of its
/// comparability graph.
pub fn max_antichain(f: &SetFamily) -> Result<usize, ClaimsError> {
    let m = &f.members;
    if m.len() > MAX_ANTICHAIN_MEMBERS {
        return Err(ClaimsError::TooManyMembers(m.len()));
    }
    let mut cmp = Graph::empty(m.len()).expect("small");
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if m[i] & !m[j] == 0 || m[j] & !m[i] == 0 {
                cmp.add_edge(i, j).expect("in range");
            }
        }
    }
    Ok(independence_number(&cmp))
}

/// The central binomial coefficient `C(n, n/2)`.
pub fn sperner_bound(n: usize) -> Result<u64, ClaimsError> {
    if n > MAX_SPERNER_N {
        return Err(ClaimsError::GroundTooLarge(n));
    }
    let r = (n / 2) as u64;
    // C(n, i) built up as C(n-r+i, i); each step divides exactly.
    let mut c: u64 = 1;
    for i in 1..=r {
        c = c * (n as u64 - r + i) / i;
    }
    Ok(c)
}

fn require(ok: bool, what: &str) -> Result<(), ClaimsError> {
    if ok {
        Ok(())
    } else {
        Err(ClaimsError::Precondition(what.to_string()))
    }
}

/// For a `k`-critical (co-gem, P5, P3+cP2)-free graph: true iff it has no
/// induced `P3 + c'P1` with `c' = C(kc, kc/2)`.
pub fn check_thm31_consequence(g: &Graph, k: usize, c: usize) -> Result<bool, ClaimsError> {
    require(is_k_vertex_critical(g, k), "graph is not k-vertex-critical")?;
    let family = [
        realize("co-gem").expect("catalogued"),
        realize("P5").expect("catalogued"),
        PatternId::p3_plus_c_p2(c).realize().expect("small c"),
    ];
    require(is_family_member(g, &family).is_ok(), "graph contains co-gem, P5 or P3+cP2")?;
    let c_prime = sperner_bound(k * c)?;
    if 3 + c_prime > g.order() as u64 {
        return Ok(true);
    }
    let pattern = PatternId::p3_plus_l_p1(c_prime as usize)
        .realize()
        .expect("fits in the host");
    Ok(find_induced(g, &pattern).is_none())
}

/// For a vertex-critical (co-gem, paw+P1)-free graph: true iff it has no
/// induced `P3 + 2P1`.
pub fn check_thm41_consequence(g: &Graph) -> Result<bool, ClaimsError> {
    let k = chromatic_number(g);
    require(is_k_vertex_critical(g, k), "graph is not vertex-critical")?;
    let family = [realize("co-gem").expect("catalogued"), realize("paw+P1").expect("catalogued")];
    require(is_family_member(g, &family).is_ok(), "graph contains co-gem or paw+P1")?;
    Ok(find_induced(g, &realize("P3+2P1").expect("catalogued")).is_none())
}

/// The forbidden set `{co-gem, antiholes of odd order 5..=2k-5, K_k}`.
pub fn conjecture_family(k: usize) -> Vec<Graph> {
    let mut f = vec![realize("co-gem").expect("catalogued")];
    let mut m = 5;
    while m + 5 <= 2 * k {
        f.push(antihole(m).expect("small"));
        m += 2;
    }
    f.push(Graph::complete(k).expect("small"));
    f
}

/// Searches for (k+1)-vertex-critical graphs in the family of
/// [`conjecture_family`]. An empty list supports k-colourability of the
/// family on this slice; `complete` is reported unchanged.
pub fn conjecture_slice(k: usize, max_order: usize) -> Result<EnumerationReport, ClaimsError> {
    require(k >= 4, "k must be at least 4")?;
    let cfg = EnumerationConfig::new(k + 1, conjecture_family(k), max_order);
    Ok(enumerate_critical(&cfg)?)
}

/// Whether the k-critical (co-gem, bull)-free and (P3+P1)-free graphs of
/// order at most `max_order` coincide.
pub fn bull_equivalence(k: usize, max_order: usize) -> Result<bool, ClaimsError> {
    require((2..=6).contains(&k), "k must be between 2 and 6")?;
    let run = |forbidden: Vec<Graph>| -> Result<Vec<CanonicalForm>, ClaimsError> {
        Ok(enumerate_critical(&EnumerationConfig::new(k, forbidden, max_order))?.forms)
    };
    let a = run(vec![realize("co-gem").expect("catalogued"), realize("bull").expect("catalogued")])?;
    let b = run(vec![realize("P3+P1").expect("catalogued")])?;
    Ok(a == b)
}

/// Vertices mixed on `s`, grouped by their trace `N(v) ∩ s`. Classes are
/// ordered by lowest member; the representative of each class is its lowest
/// member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedPartition {
    pub classes: Vec<VertexSet>,
    pub representatives: VertexSet,
}

pub fn mixed_partition(g: &Graph, s: VertexSet) -> Result<MixedPartition, ClaimsError> {
    let mixed = mixed_vertices(g, s)?;
    let mut classes: Vec<(VertexSet, VertexSet)> = Vec::new();
    for v in mixed {
        let trace = g.neighbours(v).intersection(s);
        match classes.iter_mut().find(|(t, _)| *t == trace) {
            Some((_, class)) => class.insert(v),
            None => classes.push((trace, VertexSet::singleton(v))),
        }
    }
    let representatives = classes.iter().map(|(_, c)| c.first().expect("nonempty")).collect();
    Ok(MixedPartition {
        classes: classes.into_iter().map(|(_, c)| c).collect(),
        representatives,
    })
}

/// Outcomes of the mixed-set claims for one independent set `S` with
/// `U` the class representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedClaims {
    /// Every vertex of `S` has a neighbour in `U`.
    pub s_dominated_by_u: bool,
    /// `{N(s) ∩ U : s ∈ S}` are pairwise incomparable.
    pub traces_on_u_antichain: bool,
    /// Nonadjacent vertices of `U` have incomparable traces on `S`.
    pub nonadjacent_u_incomparable: bool,
}

impl MixedClaims {
    pub fn all(&self) -> bool {
        self.s_dominated_by_u && self.traces_on_u_antichain && self.nonadjacent_u_incomparable
    }
}

/// Evaluates the mixed-set claims for an independent set `s` of size at
/// least 2. The first two hold whenever `g` has no comparable pair, the
/// third whenever `g` is co-gem-free.
pub fn check_mixed_claims(g: &Graph, s: VertexSet) -> Result<MixedClaims, ClaimsError> {
    require(s.len() >= 2, "S needs at least two vertices")?;
    require(s.is_subset(g.vertices()), "S is not a vertex subset")?;
    require(g.is_independent(s), "S is not independent")?;
    let u = mixed_partition(g, s)?.representatives;

    let s_dominated_by_u = s.iter().all(|x| !g.neighbours(x).intersection(u).is_empty());

    let traces: Vec<u64> = s.iter().map(|x| g.neighbours(x).intersection(u).bits()).collect();
    let traces_on_u_antichain = SetFamily::with_duplicates(64, traces)
        .expect("masks fit")
        .is_antichain();

    let us: Vec<usize> = u.iter().collect();
    let nonadjacent_u_incomparable = us.iter().enumerate().all(|(i, &a)| {
        us[i + 1..].iter().all(|&b| {
            g.has_edge(a, b) || {
                let ta = g.neighbours(a).intersection(s);
                let tb = g.neighbours(b).intersection(s);
                !ta.is_subset(tb) && !tb.is_subset(ta)
            }
        })
    });

    Ok(MixedClaims {
        s_dominated_by_u,
        traces_on_u_antichain,
        nonadjacent_u_incomparable,
    })
}

/// Every independent set of size at least 2 in `g`, as masks.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn rec(g: &Graph, cand: u64, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if cur.len() >= 2 {
            out.push(cur);
        }
        for v in VertexSet(cand).iter() {
            let mut next = cur;
            next.insert(v);
            let above = if v == 63 { 0 } else { !0u64 << (v + 1) };
            rec(g, cand & !g.neighbours(v).bits() & above, next, out);
        }
    }
    let mut out = Vec::new();
    rec(g, g.vertices().bits(), VertexSet::EMPTY, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::find_induced;

    /// Oracle: every sub-collection, checked pairwise.
    fn brute_antichain(f: &SetFamily) -> usize {
        let m = f.members();
        (0u64..1 << m.len())
            .filter(|&sel| {
                let chosen: Vec<u64> = VertexSet(sel).iter().map(|i| m[i]).collect();
                SetFamily::with_duplicates(f.ground_size(), chosen).unwrap().is_antichain()
            })
            .map(|sel| sel.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn binomial(n: u64, r: u64) -> u64 {
        // Pascal's triangle, independent of the multiplicative formula.
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row[r as usize]
    }

    #[test]
    fn antichain_examples() {
        let singletons = SetFamily::new(5, (0..5).map(|i| 1u64 << i).collect()).unwrap();
        assert_eq!(max_antichain(&singletons).unwrap(), 5);
        let chain = SetFamily::new(2, vec![0b00, 0b01, 0b11]).unwrap();
        assert_eq!(max_antichain(&chain).unwrap(), 1);
        let all4 = SetFamily::new(4, (0..16).collect()).unwrap();
        assert_eq!(max_antichain(&all4).unwrap(), brute_antichain(&all4));
        assert_eq!(max_antichain(&all4).unwrap(), 6);
        assert_eq!(
            max_antichain(&SetFamily::new(5, (0..21).collect()).unwrap()),
            Err(ClaimsError::TooManyMembers(21))
        );
        assert_eq!(SetFamily::new(2, vec![4]), Err(ClaimsError::MemberOutsideGround { index: 0, n: 2 }));
        assert_eq!(SetFamily::new(2, vec![1, 1]), Err(ClaimsError::DuplicateMember(1)));
    }

    #[test]
    fn sperner_values() {
        assert_eq!(sperner_bound(4).unwrap(), 6);
        assert_eq!(sperner_bound(5).unwrap(), 10);
        assert_eq!(sperner_bound(0).unwrap(), 1);
        for n in 0..=62u64 {
            assert_eq!(sperner_bound(n as usize).unwrap(), binomial(n, n / 2), "n={n}");
        }
        assert!(sperner_bound(63).is_err());
    }

    #[test]
    fn thm31_examples() {
        assert!(check_thm31_consequence(&Graph::cycle(5).unwrap(), 3, 1).unwrap());
        assert!(check_thm31_consequence(&Graph::complete(5).unwrap(), 5, 1).unwrap());
        assert!(check_thm31_consequence(&Graph::path(4).unwrap(), 2, 1).is_err());
    }

    #[test]
    fn thm41_examples() {
        for k in 1..7 {
            assert!(check_thm41_consequence(&Graph::complete(k).unwrap()).unwrap());
        }
        assert!(check_thm41_consequence(&Graph::cycle(5).unwrap()).unwrap());
        assert!(check_thm41_consequence(&Graph::cycle(7).unwrap()).is_err());
    }

    #[test]
    fn conjecture_families() {
        let f4 = conjecture_family(4);
        assert_eq!(f4.len(), 2);
        assert_eq!(f4[1], Graph::complete(4).unwrap());
        let f5 = conjecture_family(5);
        assert_eq!(f5.len(), 3);
        assert!(crate::iso::is_isomorphic(&f5[1], &Graph::cycle(5).unwrap()));
        assert_eq!(conjecture_family(7).len(), 5);
        assert!(conjecture_slice(4, 5).unwrap().found.is_empty());
        assert!(conjecture_slice(3, 5).is_err());
    }

    #[test]
    fn bull_small() {
        assert!(bull_equivalence(3, 8).unwrap());
        assert!(bull_equivalence(7, 8).is_err());
    }

    #[test]
    fn mixed_partition_example() {
        // C5 with S = {0, 2}: vertex 1 sees both, 3 sees 2, 4 sees 0.
        let c5 = Graph::cycle(5).unwrap();
        let p = mixed_partition(&c5, VertexSet::from_vertices([0, 2])).unwrap();
        assert_eq!(p.representatives, VertexSet::from_vertices([3, 4]));
        assert_eq!(p.classes.len(), 2);
        let claims = check_mixed_claims(&c5, VertexSet::from_vertices([0, 2])).unwrap();
        assert!(claims.all());
        assert!(check_mixed_claims(&c5, VertexSet::from_vertices([0, 1])).is_err());
    }

    #[test]
    fn mixed_claims_fail_without_hypotheses() {
        // In P3 + P1 the ends of the path are comparable and nothing is mixed on them.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let c = check_mixed_claims(&g, VertexSet::from_vertices([0, 2])).unwrap();
        assert!(!c.s_dominated_by_u);
    }

    #[test]
    fn independent_set_listing() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(independent_sets(&c5).len(), 5);
        let e4 = Graph::empty(4).unwrap();
        assert_eq!(independent_sets(&e4).len(), 11);
        assert!(find_induced(&c5, &realize("P3+2P1").unwrap()).is_none());
    }
}
