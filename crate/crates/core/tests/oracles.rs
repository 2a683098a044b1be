//! Solvers and predicates against brute-force oracles written independently
//! of the library code.

use std::collections::HashSet;

use hambypass::conditions::{classify_exception, manoussakis_triple, meyniel_like, ExceptionClass};
use hambypass::families;
use hambypass::harness::{evaluate, EvalOptions, Subject, TheoremId, VerdictStatus};
use hambypass::solvers::{find_spanning_dnq, hamiltonian_bypass, hamiltonian_cycle, is_dnq_ordering, Outcome};
use hambypass::{Digraph, SolveBudget};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const U: SolveBudget = SolveBudget::UNLIMITED;

fn oracle_has_bypass(d: &Digraph) -> bool {
    let p = d.order();
    p >= 3
        && (0..p).permutations(p).any(|s| s.windows(2).all(|w| d.has_arc(w[0], w[1])) && d.has_arc(s[0], s[p - 1]))
}

fn oracle_has_cycle(d: &Digraph) -> bool {
    let p = d.order();
    p >= 2
        && (1..p)
            .permutations(p - 1)
            .any(|rest| {
                let s: Vec<usize> = std::iter::once(0).chain(rest).collect();
                s.windows(2).all(|w| d.has_arc(w[0], w[1])) && d.has_arc(s[p - 1], 0)
            })
}

fn all_digraphs(p: usize) -> impl Iterator<Item = Digraph> {
    (0u64..1 << (p * (p - 1))).map(move |m| Digraph::from_arc_mask(p, m).unwrap())
}

#[test]
fn bypass_and_cycle_solvers_match_permutation_oracle_up_to_order_4() {
    for p in 2..=4 {
        for d in all_digraphs(p) {
            let b = hamiltonian_bypass(&d, U);
            assert_eq!(b.is_found(), oracle_has_bypass(&d), "{:?}", d.arcs().collect::<Vec<_>>());
            if let Outcome::Found(w) = b {
                assert!(w.is_valid(&d) && w.is_hamiltonian(&d));
            }
            let c = hamiltonian_cycle(&d, U);
            assert_eq!(c.is_found(), oracle_has_cycle(&d));
            if let Outcome::Found(w) = c {
                assert!(w.is_valid(&d) && w.is_hamiltonian(&d));
            }
        }
    }
}

#[test]
fn min_degree_scan_at_order_4_matches_oracle_digraph_for_digraph() {
    for d in all_digraphs(4) {
        let v = evaluate(TheoremId::T1_2, Subject::General(&d), EvalOptions::default()).unwrap();
        let hyp = (0..4).all(|u| d.out_degree(u) + d.in_degree(u) >= 4);
        assert_eq!(v.hypothesis_holds, hyp);
        if hyp {
            assert!(oracle_has_bypass(&d));
            assert_eq!(v.status, VerdictStatus::ConclusionHolds);
        }
    }
}

#[test]
fn spanning_d_n_2_is_a_bypass() {
    for p in 3..=4 {
        for d in all_digraphs(p) {
            let dnq = find_spanning_dnq(&d, 2, U).unwrap();
            assert_eq!(dnq.is_found(), oracle_has_bypass(&d));
            if let Outcome::Found(seq) = dnq {
                assert!(is_dnq_ordering(&d, &seq, 2));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let d = Digraph::from_arc_mask(5, rng.gen::<u64>() & ((1 << 20) - 1)).unwrap();
        assert_eq!(find_spanning_dnq(&d, 2, U).unwrap().is_found(), hamiltonian_bypass(&d, U).is_found());
    }
}

/// `D(n, q)` by the definition: the `n`-cycle `s_0 .. s_{n-1}` with its last
/// `q-1` arcs reversed, checked over all orderings.
fn oracle_has_dnq(d: &Digraph, q: usize) -> bool {
    let n = d.order();
    (0..n).permutations(n).any(|s| {
        (0..n).all(|i| {
            let (a, b) = (s[i], s[(i + 1) % n]);
            if i <= n - q { d.has_arc(a, b) } else { d.has_arc(b, a) }
        })
    })
}

#[test]
fn spanning_dnq_matches_definition_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..400 {
        let n = rng.gen_range(3..=6);
        let q = rng.gen_range(2..=n);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(0.45) {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::new(n, arcs).unwrap();
        assert_eq!(find_spanning_dnq(&d, q, U).unwrap().is_found(), oracle_has_dnq(&d, q), "n={n} q={q}");
    }
}

fn naive_degree(d: &Digraph, v: usize) -> usize {
    (0..d.order()).filter(|&w| d.has_arc(v, w)).count() + (0..d.order()).filter(|&w| d.has_arc(w, v)).count()
}

#[test]
fn degree_sum_predicates_match_naive_scans_up_to_order_4() {
    for p in 2..=4 {
        for d in all_digraphs(p) {
            for t in [2 * p - 2, 2 * p - 1] {
                let naive = (0..p).tuple_combinations().all(|(x, y)| {
                    d.has_arc(x, y) || d.has_arc(y, x) || naive_degree(&d, x) + naive_degree(&d, y) >= t
                });
                assert_eq!(meyniel_like(&d, t, None).holds, naive);
            }
        }
    }
    for d in all_digraphs(4) {
        // three distinct vertices, x and y nonadjacent
        let p = 4;
        let dd = |v| naive_degree(&d, v);
        let dplus = |v| (0..p).filter(|&w| d.has_arc(v, w)).count();
        let dminus = |v| (0..p).filter(|&w| d.has_arc(w, v)).count();
        let naive = (0..p).permutations(3).all(|t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            if d.has_arc(x, y) || d.has_arc(y, x) {
                return true;
            }
            let one = d.has_arc(x, z) || dd(x) + dd(y) + dplus(x) + dminus(z) >= 3 * p - 2;
            let two = d.has_arc(z, x) || dd(x) + dd(y) + dminus(x) + dplus(z) >= 3 * p - 2;
            one && two
        });
        assert_eq!(manoussakis_triple(&d).unwrap().holds, naive, "{:?}", d.arcs().collect::<Vec<_>>());
    }
}

/// `H(n)` written out clause by clause on vertex names.
fn h_n_by_names(n: usize) -> HashSet<(String, String)> {
    let x = |i: usize| format!("x{i}");
    let y = |i: usize| format!("y{i}");
    let mut a = HashSet::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                a.insert((y(i), y(j)));
            }
        }
        for j in 1..=n - 6 {
            a.insert((y(i), x(j)));
        }
        a.insert((x(n - 4), y(i)));
        a.insert((x(n - 6), y(i)));
    }
    for i in 0..=n - 5 {
        a.insert((x(i), x(i + 1)));
    }
    for i in 1..=n - 4 {
        for j in 1..i {
            a.insert((x(i), x(j)));
        }
    }
    for i in 1..=n - 7 {
        a.insert((x(i), x(n - 5)));
    }
    for (u, v) in [(0, n - 5), (n - 5, 0), (n - 4, 0), (n - 6, n - 4)] {
        a.insert((x(u), x(v)));
    }
    a
}

#[test]
fn h_n_matches_named_arc_sets_and_degrees() {
    for n in 8..=16 {
        let d = families::h_n(n).unwrap();
        let named: HashSet<(String, String)> = d.arcs().map(|(u, v)| (d.label(u), d.label(v))).collect();
        let expected = h_n_by_names(n);
        assert_eq!(named, expected, "H({n})");
        for v in 0..n {
            let name = d.label(v);
            let deg = expected.iter().filter(|(a, b)| *a == name || *b == name).count();
            assert_eq!(d.total_degree(v), deg, "H({n}) vertex {name}");
        }
        assert_eq!(d.total_degree(0), 4);
    }
}

fn shuffled(d: &Digraph, rng: &mut ChaCha8Rng) -> Digraph {
    let mut perm: Vec<usize> = (0..d.order()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    d.relabel(&perm).unwrap()
}

#[test]
fn relabelled_exceptions_classify_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = vec![(families::t5(), ExceptionClass::T5), (families::cycle(3).unwrap(), ExceptionClass::C3)];
    cases.push((families::b6().unwrap().into_digraph(), ExceptionClass::B6));
    for p in [5, 7, 9] {
        cases.push((families::d0_empty(p).unwrap(), ExceptionClass::D0));
        cases.push((families::d0_complete(p).unwrap(), ExceptionClass::D0));
    }
    for p in 4..=8 {
        for k in 1..=p - 2 {
            let small = k.min(p - k - 1);
            cases.push((families::dpkk(p, k).unwrap(), ExceptionClass::Dpkk(small)));
        }
    }
    for (d, class) in cases {
        for _ in 0..3 {
            assert_eq!(classify_exception(&shuffled(&d, &mut rng)).unwrap(), class);
        }
    }
    assert_eq!(classify_exception(&families::complete(5).unwrap()).unwrap(), ExceptionClass::None);
}
