use hambypass::families::{canonical_cycle, complete};
use hambypass::lemmas::{
    bipartite_bypass_from_chord, chord_scan, construct_bypass_from_cycle, cycles_through, insert_vertex,
    insertion_conditions, ChordConstruction,
};
use hambypass::{BipartiteDigraph, Digraph, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every cycle of length `m <= 5` with every pattern of arcs to an outside
/// vertex: enough arcs force cycles through it of all lengths.
#[test]
fn many_arcs_to_a_cycle_give_every_length() {
    for m in 2..=5usize {
        let x = m;
        let cycle: Vec<usize> = (0..m).collect();
        for mask in 0u64..1 << (2 * m) {
            let mut arcs: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
            arcs.extend((0..m).filter(|&i| mask >> i & 1 == 1).map(|i| (x, i)));
            arcs.extend((0..m).filter(|&i| mask >> (m + i) & 1 == 1).map(|i| (i, x)));
            let d = Digraph::new(m + 1, arcs).unwrap();
            let r = cycles_through(&d, &cycle, x).unwrap();
            if r.hypothesis_holds {
                assert!(r.complete(m), "m={m} mask={mask:#b}");
            }
            for (len, c) in &r.cycles {
                assert_eq!(c.len(), *len);
                assert!(c.is_valid(&d) && c.vertices.contains(&x));
            }
        }
    }
}

#[test]
fn insertion_conditions_are_sharp() {
    // x -> every path vertex except the first, nothing back: degree m-1, no slot
    let m = 5;
    let mut arcs: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    arcs.extend((1..m).map(|i| (m, i)));
    let d = Digraph::new(m + 1, arcs).unwrap();
    let path: Vec<usize> = (0..m).collect();
    assert!(!insertion_conditions(&d, &path, m).unwrap().any());
    assert!(insert_vertex(&d, &path, m).unwrap().is_none());
    assert_eq!(insert_vertex(&d, &[0, 1, 2], 1), Err(Error::XOnPath(1)));
}

#[test]
fn chord_construction_on_random_hamiltonian_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut seen_constructed = false;
    for _ in 0..3000 {
        let a = rng.gen_range(3..=5);
        let b = hambypass::harness::scan::random_bipartite(a, 0.08, true, &mut rng).unwrap();
        let cyc = canonical_cycle(a);
        match construct_bypass_from_cycle(&b, &cyc).unwrap() {
            ChordConstruction::Unit { bypass, .. } => assert!(bypass.is_valid(b.digraph())),
            ChordConstruction::Constructed { chord, j, bypass } => {
                seen_constructed = true;
                assert!(chord.k >= 2 && j > chord.k);
                assert!(bypass.is_valid(b.digraph()) && bypass.is_hamiltonian(b.digraph()));
            }
            ChordConstruction::NoIndex { chord } => {
                // any index fails arc-by-arc
                for j in chord.k + 1..=a {
                    assert!(matches!(
                        bipartite_bypass_from_chord(&b, &cyc, &chord, j),
                        Err(Error::PreconditionFailed(..))
                    ));
                }
            }
            ChordConstruction::NoChord => assert_eq!(b.digraph().arc_count(), 2 * a),
        }
    }
    assert!(seen_constructed);
}

#[test]
fn chord_scan_rejects_non_cycles() {
    let b = BipartiteDigraph::new(complete(4).unwrap(), hambypass::VertexSet(0b11));
    assert!(b.is_err(), "arcs inside partite sets");
    let b = BipartiteDigraph::from_cross_mask(3, hambypass::families::canonical_cycle_mask(3)).unwrap();
    assert!(chord_scan(&b, &[0, 3, 1, 4, 2]).is_err());
    assert_eq!(chord_scan(&b, &canonical_cycle(3)).unwrap(), None);
}
