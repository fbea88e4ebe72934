use edge_ideals::betti::{self, View};
use edge_ideals::complex::independence_complex;
use edge_ideals::graph::{self, Graph};
use edge_ideals::hilbert::{hilbert, Poly};
use edge_ideals::ideal::{self, Monomial};
use edge_ideals::suite::{self, Settings};
use edge_ideals::{FieldTag, SimplicialComplex};
use proptest::prelude::*;

fn graph_on(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_with_edges(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_on(max_n).prop_filter("needs an edge", |g| !g.is_edgeless())
}

fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e = g.edges().to_vec();
    e.sort();
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_and_union_edge_counts(g in graph_on(5), h in graph_on(5)) {
        let j = graph::join(&g, &h).unwrap();
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
        let u = graph::disjoint_union(&g, &h).unwrap();
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
    }

    #[test]
    fn self_join_edge_count(g in graph_on(4), l in 1usize..4) {
        let s = graph::self_join(&g, l).unwrap();
        let n = g.n();
        prop_assert_eq!(s.edge_count(), l * g.edge_count() + l * (l - 1) / 2 * n * n);
    }

    #[test]
    fn complement_is_an_involution(g in graph_on(7)) {
        let cc = graph::complement(&graph::complement(&g));
        prop_assert_eq!(sorted_edges(&cc), sorted_edges(&g));
        let all: Vec<usize> = (0..g.n()).collect();
        prop_assert_eq!(sorted_edges(&graph::induced_subgraph(&g, &all).unwrap()), sorted_edges(&g));
    }

    #[test]
    fn covers_are_minimal_transversals(g in graph_on(7)) {
        let cs = graph::minimal_vertex_covers(&g);
        for c in cs.masks() {
            prop_assert!(g.is_vertex_cover(c));
            for v in graph::mask_to_vec(c) {
                prop_assert!(!g.is_vertex_cover(c & !(1u64 << v)));
            }
        }
        prop_assert_eq!(cs.minimum_covers().count(), cs.min_count);
        let largest = graph::maximal_independent_sets(&g)
            .into_iter()
            .filter(|s| (s.count_ones() as usize) == g.n() - cs.height)
            .count();
        prop_assert_eq!(graph::multiplicity_by_covers(&g), largest);
    }

    #[test]
    fn euler_poincare(g in graph_on(7)) {
        let d = independence_complex(&g);
        let f = d.f_vector();
        // f[0] counts the empty face
        let chi: i64 = f.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) }).sum();
        for field in [FieldTag::Q, FieldTag::F2] {
            let h = d.reduced_homology_ranks(field).unwrap();
            prop_assert_eq!(h.euler_characteristic(), chi);
        }
    }

    #[test]
    fn cones_are_acyclic(g in graph_on(6)) {
        let n = g.n();
        let faces: Vec<Vec<usize>> = graph::maximal_independent_sets(&g)
            .into_iter()
            .map(|s| {
                let mut f = graph::mask_to_vec(s);
                f.push(n);
                f
            })
            .collect();
        let cone = SimplicialComplex::new(n + 1, &faces).unwrap();
        prop_assert!(cone.is_cone());
        prop_assert!(cone.reduced_homology_ranks(FieldTag::Q).unwrap().is_acyclic());
    }

    #[test]
    fn symbolic_power_routes_agree(g in graph_with_edges(5), s in 1u32..4) {
        let by_primes = ideal::symbolic_power(&g, s).unwrap();
        let by_points = ideal::symbolic_power_enumerated(&g, s).unwrap();
        prop_assert!(by_primes.equals(&by_points).unwrap());
        let ordinary = ideal::power(&ideal::edge_ideal(&g), s).unwrap();
        for m in ordinary.gens() {
            prop_assert!(by_primes.contains(m));
        }
        if s == 1 {
            prop_assert!(by_primes.equals(&ideal::edge_ideal(&g)).unwrap());
        }
    }

    #[test]
    fn intersection_membership(g in graph_with_edges(5), h in graph_with_edges(5), e in proptest::collection::vec(0u32..3, 5)) {
        prop_assume!(g.n() == h.n());
        let (a, b) = (ideal::edge_ideal(&g), ideal::edge_ideal(&h));
        let both = ideal::intersect(&a, &b).unwrap();
        let m = Monomial::new(e[..g.n()].to_vec());
        prop_assert_eq!(both.contains(&m), a.contains(&m) && b.contains(&m));
    }

    #[test]
    fn hochster_matches_koszul(g in graph_with_edges(6)) {
        for field in [FieldTag::Q, FieldTag::F2] {
            let h = betti::betti_hochster(&g, field);
            let k = betti::betti_koszul(&ideal::edge_ideal(&g), field).unwrap();
            prop_assert_eq!(h, k);
        }
    }

    #[test]
    fn hilbert_numerator_invariants(g in graph_with_edges(7)) {
        let cs = graph::minimal_vertex_covers(&g);
        let s = hilbert(&g);
        prop_assert_eq!(s.multiplicity(), cs.min_count as i64);
        prop_assert_eq!(s.coeff(1), cs.height as i64);
        prop_assert_eq!(s.d, g.n() - cs.height);
    }

    #[test]
    fn regularity_bounded_by_dimension(g in graph_with_edges(7)) {
        let t = betti::betti_hochster(&g, FieldTag::F2).graded();
        prop_assert!(t.regularity(View::Quotient) <= graph::krull_dim(&g) as i64);
    }

    #[test]
    fn k_polynomial_matches_series(g in graph_with_edges(7)) {
        let t = betti::betti_hochster(&g, FieldTag::Q).graded();
        let s = hilbert(&g);
        let expected = s.h.mul(&Poly::one_minus_t_pow(g.n() - s.d));
        prop_assert_eq!(t.k_polynomial(), expected);
    }

    #[test]
    fn minh_holds_at_first_power(g in graph_with_edges(5)) {
        let results = suite::check_minh(&g, 1, &Settings::default()).unwrap();
        prop_assert!(results.iter().all(|r| r.pass), "{:?}", results);
    }
}
