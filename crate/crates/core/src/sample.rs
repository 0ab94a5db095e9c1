//! Random members of an H-free class.
//!
//! Whole-graph rejection almost never succeeds beyond a dozen vertices, so
//! graphs are grown vertex by vertex: each new vertex draws its
//! neighbourhood with edge probability `p`, and draws that create a forbidden
//! pattern through the new vertex are rejected and redrawn. After too many
//! rejections the graph is restarted from scratch.

use rand::Rng;

use crate::graph::{Graph, VertexSet};
use crate::search::CompiledPattern;

#[derive(Debug, Clone)]
pub struct Sampler {
    patterns: Vec<CompiledPattern>,
    p: f64,
    /// Redraws allowed for one vertex before restarting.
    pub vertex_attempts: usize,
    /// Restarts allowed before giving up.
    pub restarts: usize,
}

impl Sampler {
    pub fn new(forbidden: &[Graph], p: f64) -> Sampler {
        assert!((0.0..=1.0).contains(&p), "edge probability must lie in [0, 1]");
        Sampler {
            patterns: forbidden.iter().cloned().map(CompiledPattern::new).collect(),
            p,
            vertex_attempts: 200,
            restarts: 1000,
        }
    }

    /// A family member of order `n`, or `None` if the retry budget runs out.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Option<Graph> {
        'restart: for _ in 0..=self.restarts {
            let mut g = Graph::empty(0).expect("empty graph");
            for v in 0..n {
                let mut placed = false;
                for _ in 0..self.vertex_attempts {
                    let nbrs: VertexSet = (0..v).filter(|_| rng.gen_bool(self.p)).collect();
                    let child = g.add_vertex(nbrs).expect("order checked by caller");
                    if !self.patterns.iter().any(|p| p.contains_through(&child, v)) {
                        g = child;
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    continue 'restart;
                }
            }
            return Some(g);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::realize;
    use crate::search::is_family_member;
    use rand::SeedableRng;

    #[test]
    fn samples_are_members() {
        let forbidden = vec![realize("co-gem").unwrap(), Graph::complete(4).unwrap()];
        let s = Sampler::new(&forbidden, 0.5);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 0..=16 {
            let g = s.sample(&mut rng, n).unwrap();
            assert_eq!(g.order(), n);
            assert!(is_family_member(&g, &forbidden).is_ok());
        }
    }

    #[test]
    fn impossible_family_gives_up() {
        let mut s = Sampler::new(&[Graph::empty(1).unwrap()], 0.5);
        s.restarts = 3;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        assert!(s.sample(&mut rng, 2).is_none());
        assert_eq!(s.sample(&mut rng, 0), Some(Graph::empty(0).unwrap()));
    }

    #[test]
    fn deterministic_for_a_seed() {
        let s = Sampler::new(&[realize("co-gem").unwrap()], 0.5);
        let a = s.sample(&mut rand_chacha::ChaCha8Rng::seed_from_u64(9), 12);
        let b = s.sample(&mut rand_chacha::ChaCha8Rng::seed_from_u64(9), 12);
        assert_eq!(a, b);
    }
}
