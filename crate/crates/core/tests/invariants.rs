use proptest::prelude::*;

use vcrit::certify::{certify_colourable, verify_certificate, Certificate, CriticalList};
use vcrit::claims::{max_antichain, sperner_bound, SetFamily};
use vcrit::coloring::{chromatic_number, independence_number, k_colourable};
use vcrit::patterns::realize;
use vcrit::{canonical_form, emit_graph6, is_isomorphic, parse_graph6, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(62)) {
        let word = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&word).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in permuted(20)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn complement_changes_form_unless_self_complementary(g in graph_strategy(9)) {
        let c = g.complement();
        let same = canonical_form(&g).unwrap() == canonical_form(&c).unwrap();
        prop_assert_eq!(same, is_isomorphic(&g, &c));
        if g.order() >= 2 && g.edge_count() * 4 != g.order() * (g.order() - 1) {
            prop_assert!(!same);
        }
    }

    #[test]
    fn chromatic_ratio_bound(g in graph_strategy(13)) {
        let chi = chromatic_number(&g);
        prop_assert!(chi * independence_number(&g) >= g.order());
        prop_assert!(k_colourable(&g, chi).unwrap().is_proper(&g, chi));
        if chi > 0 {
            prop_assert!(k_colourable(&g, chi - 1).is_none());
        }
    }

    #[test]
    fn sperner_bounds_random_families(n in 0usize..=10, raw in proptest::collection::vec(any::<u64>(), 0..=20)) {
        let mut members: Vec<u64> = raw.into_iter().map(|m| m & ((1u64 << n) - 1)).collect();
        members.sort_unstable();
        members.dedup();
        let f = SetFamily::new(n, members).unwrap();
        prop_assert!(max_antichain(&f).unwrap() as u64 <= sperner_bound(n).unwrap());
    }

    #[test]
    fn certificates_verify(g in graph_strategy(11)) {
        let list = CriticalList::known(3, vec![realize("co-gem").unwrap()]).unwrap();
        let cert = certify_colourable(&g, 3, &list).unwrap();
        prop_assert!(verify_certificate(&g, 3, &cert));
        let expect_colourable = chromatic_number(&g) <= 3;
        if !matches!(cert, Certificate::NotInFamily { .. }) {
            prop_assert_eq!(matches!(cert, Certificate::Colourable(_)), expect_colourable);
        }
    }
}

#[test]
fn sperner_is_tight_on_all_subsets() {
    for n in 0..=4usize {
        let f = SetFamily::new(n, (0..1u64 << n).collect()).unwrap();
        assert_eq!(max_antichain(&f).unwrap() as u64, sperner_bound(n).unwrap());
    }
}
