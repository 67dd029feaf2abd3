mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tchordal::digraph::Digraph;

use common::*;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_digraph(&mut rng, n, p)
    })
}

proptest! {
    #[test]
    fn clique_number_matches_subset_oracle(d in digraph(12)) {
        prop_assert_eq!(d.underlying_clique_number(), brute_clique_number(&d));
    }

    #[test]
    fn scc_is_mutual_reachability(d in digraph(12)) {
        let reach = reachability(&d);
        let comps = d.strongly_connected_components();
        let mut comp_of = vec![0; d.vertex_count() + 1];
        for (i, comp) in comps.iter().enumerate() {
            prop_assert!(comp.windows(2).all(|w| w[0] < w[1]));
            for &v in comp {
                comp_of[v] = i;
            }
        }
        prop_assert!(comps.windows(2).all(|w| w[0][0] < w[1][0]));
        prop_assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), d.vertex_count());
        for u in d.vertices() {
            for v in d.vertices() {
                prop_assert_eq!(comp_of[u] == comp_of[v], reach[u][v] && reach[v][u]);
            }
        }
    }

    #[test]
    fn induced_subdigraph_is_an_induced_copy(d in digraph(10), mask in any::<u32>()) {
        let chosen = members(mask, d.vertex_count());
        let sub = d.induced_subdigraph(&chosen).unwrap();
        prop_assert_eq!(sub.digraph.vertex_count(), chosen.len());
        prop_assert!(check_simple(&sub.digraph).is_ok());
        prop_assert!(is_induced_embedding(&sub.digraph, &d, sub.embedding.images()));
        prop_assert!(sub.embedding.is_induced_copy(&sub.digraph, &d));
    }

    #[test]
    fn disjoint_union_keeps_parts(a in digraph(6), b in digraph(6)) {
        let (u, offsets) = Digraph::disjoint_union(&[&a, &b]);
        prop_assert!(check_simple(&u).is_ok());
        prop_assert_eq!(u.arc_count(), a.arc_count() + b.arc_count());
        let img_a: Vec<_> = a.vertices().map(|v| v + offsets[0]).collect();
        let img_b: Vec<_> = b.vertices().map(|v| v + offsets[1]).collect();
        prop_assert!(is_induced_embedding(&a, &u, &img_a));
        prop_assert!(is_induced_embedding(&b, &u, &img_b));
    }

    #[test]
    fn dgf_round_trip(d in digraph(15)) {
        prop_assert!(check_simple(&d).is_ok());
        let text = d.to_dgf();
        let back = Digraph::from_dgf(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_dgf(), text);
    }

    #[test]
    fn acyclicity_matches_sink_removal(d in digraph(10)) {
        let all: Vec<_> = d.vertices().collect();
        prop_assert_eq!(d.is_acyclic(), subset_is_acyclic(&d, &all));
        if let Some(cycle) = d.find_cycle() {
            let k = cycle.len();
            prop_assert!(k >= 3);
            prop_assert!((0..k).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % k])));
        }
    }
}

#[test]
fn new_rejects_every_digon_orientation() {
    for (u, v) in [(1, 2), (2, 1)] {
        assert!(Digraph::new(2, [(u, v), (v, u)]).is_err());
    }
}
