use hambypass::conditions::{four_vertex_condition, meyniel_like, min_degree_condition, one_exception_degree};
use hambypass::format;
use hambypass::lemmas::merge_paths;
use hambypass::solvers::{hamiltonian_bypass, hamiltonian_cycle};
use hambypass::{Digraph, SolveBudget, VertexSet, Walk};
use proptest::collection::vec;
use proptest::prelude::*;

const U: SolveBudget = SolveBudget::UNLIMITED;

fn digraph(max_p: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_p).prop_flat_map(|p| {
        vec(any::<bool>(), p * p).prop_map(move |bits| {
            let arcs = (0..p).flat_map(|u| (0..p).map(move |v| (u, v))).filter(|&(u, v)| u != v && bits[u * p + v]);
            Digraph::new(p, arcs).unwrap()
        })
    })
}

fn permutation(p: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..p).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn degree_sum_is_twice_arc_count(d in digraph(10)) {
        let sum: usize = (0..d.order()).map(|v| d.total_degree(v)).sum();
        prop_assert_eq!(sum, 2 * d.arc_count());
    }

    #[test]
    fn converse_preserves_solutions_and_conditions(d in digraph(7)) {
        let c = d.converse();
        prop_assert_eq!(hamiltonian_bypass(&d, U).is_found(), hamiltonian_bypass(&c, U).is_found());
        prop_assert_eq!(hamiltonian_cycle(&d, U).is_found(), hamiltonian_cycle(&c, U).is_found());
        let p = d.order();
        prop_assert_eq!(meyniel_like(&d, 2 * p - 2, None).holds, meyniel_like(&c, 2 * p - 2, None).holds);
        prop_assert_eq!(one_exception_degree(&d).holds, one_exception_degree(&c).holds);
        prop_assert_eq!(d.is_k_strong(2), c.is_k_strong(2));
        prop_assert_eq!(c.converse(), d);
    }

    #[test]
    fn adding_an_arc_is_monotone(d in digraph(7), u in 0usize..7, v in 0usize..7) {
        let p = d.order();
        let (u, v) = (u % p, v % p);
        prop_assume!(u != v);
        let e = d.with_arc(u, v).unwrap();
        if hamiltonian_bypass(&d, U).is_found() {
            prop_assert!(hamiltonian_bypass(&e, U).is_found());
        }
        for k in 1..=3 {
            if d.is_k_strong(k) {
                prop_assert!(e.is_k_strong(k));
            }
        }
        let t = p.saturating_sub(1);
        if min_degree_condition(&d, t).holds {
            prop_assert!(min_degree_condition(&e, t).holds);
        }
        if four_vertex_condition(&d, 4 * p - 4, true).holds {
            // adding an arc raises degrees and removes nonadjacent pairs
            prop_assert!(four_vertex_condition(&e, 4 * p - 4, true).holds);
        }
    }

    #[test]
    fn strong_connectivity_levels_nest(d in digraph(7)) {
        for k in 1..=4 {
            if d.is_k_strong(k + 1) {
                prop_assert!(d.is_k_strong(k));
            }
        }
    }

    #[test]
    fn isomorphism_is_an_arc_bijection((d, perm) in digraph(8).prop_flat_map(|d| { let p = d.order(); (Just(d), permutation(p)) })) {
        let e = d.relabel(&perm).unwrap();
        let f = d.isomorphism(&e).unwrap().expect("relabelling is isomorphic");
        let mut seen = VertexSet::EMPTY;
        for &w in &f { seen.insert(w); }
        prop_assert_eq!(seen.len(), d.order());
        for u in 0..d.order() {
            for v in 0..d.order() {
                prop_assert_eq!(d.has_arc(u, v), e.has_arc(f[u], f[v]));
            }
        }
        prop_assert_eq!(d.canonical_mask().unwrap(), e.canonical_mask().unwrap());
    }

    #[test]
    fn arc_lists_round_trip(d in digraph(12)) {
        let text = format::to_arc_list(&d, None);
        prop_assert_eq!(format::parse(&text).unwrap().digraph, d);
    }

    /// A path `v_0 .. v_{t-1}` and a disjoint path `u_0 .. u_{s-1}` where each
    /// of the first `k` vertices of the second has a planted insertion arc.
    #[test]
    fn merge_absorbs_exactly_k_vertices(
        t in 2usize..6,
        s in 1usize..5,
        k_frac in 0.0f64..=1.0,
        slots in vec(0usize..100, 5),
        extra in vec(any::<bool>(), 100),
    ) {
        let n = t + s;
        let k = ((s as f64 * k_frac).round() as usize).max(1).min(s);
        let v = |i: usize| i;
        let u = |i: usize| t + i;
        let mut arcs: Vec<(usize, usize)> = (0..t - 1).map(|i| (v(i), v(i + 1))).collect();
        arcs.extend((0..s - 1).map(|i| (u(i), u(i + 1))));
        for (i, slot) in slots.iter().enumerate().take(k) {
            let j = slot % (t - 1);
            arcs.push((v(j), u(i)));
            arcs.push((u(i), v(j + 1)));
        }
        for (bit, (a, b)) in (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).enumerate().take(extra.len()) {
            if a != b && extra[bit] && bit % 3 == 0 {
                arcs.push((a, b));
            }
        }
        let d = Digraph::new(n, arcs).unwrap();
        let p: Vec<usize> = (0..s).map(u).collect();
        let q = Walk::path((0..t).map(v).collect());
        let merged = merge_paths(&d, &p, &q, k).unwrap();
        prop_assert_eq!(merged.len(), t + k);
        prop_assert_eq!(merged.length(), t + k - 1);
        prop_assert!(merged.is_valid(&d));
        prop_assert_eq!(merged.vertices[0], v(0));
        prop_assert_eq!(*merged.vertices.last().unwrap(), v(t - 1));
        let expected: VertexSet = (0..t).map(v).chain((0..k).map(u)).collect();
        prop_assert_eq!(merged.vertex_set(), expected);
    }
}
