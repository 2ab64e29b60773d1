//! Cross-module invariants: the predicate hierarchy on every constructed
//! labeling, independent re-checks of reported violations, and the
//! detachment postcondition on a hand-built three-face block.

use std::collections::BTreeSet;

use pdg_core::constructors::{
    existence_cycle, extend_odd_cycle, label_complete, label_even_cycle, label_outerplanar,
    CycleLabelerTable,
};
use pdg_core::corpus::outerplanar_corpus;
use pdg_core::graph::{find_leaf_cycle, weak_dual, Attachment, OuterplanarEmbedding};
use pdg_core::labeling::{
    edge_gap, verify_power, verify_product, verify_strict, ViolationReason,
};
use pdg_core::ntheory::{
    ceil_log2, classify_prime_power, count_prime_factors, strict_kth_power_base,
};
use pdg_core::{Graph, Labeling};

/// strict-k ok implies power-k ok implies the factor-count side of
/// product-k on edges.
fn assert_hierarchy(g: &Graph, l: &Labeling, k: u32) {
    assert!(verify_strict(g, l, k).unwrap().ok);
    assert!(verify_power(g, l, k).unwrap().ok);
    for (u, v) in g.edges() {
        let gap = edge_gap(l, u, v).unwrap();
        assert!(count_prime_factors(gap).unwrap() <= k);
    }
}

#[test]
fn hierarchy_holds_on_constructed_cycles() {
    for half in 2..=6 {
        for k in 1..=3 {
            let l = label_even_cycle(half, k, 2).unwrap();
            assert_hierarchy(&Graph::cycle(2 * half).unwrap(), &l, k);
        }
    }
    let base = Labeling::from_values(&[0, 2, 5]);
    for j in 1..=4 {
        let l = extend_odd_cycle(&base, j, 1).unwrap();
        assert_hierarchy(&Graph::cycle(3 + 2 * j).unwrap(), &l, 1);
    }
    for k in 1..=3 {
        let (n, l) = existence_cycle(k).unwrap();
        assert_hierarchy(&Graph::cycle(n).unwrap(), &l, k);
    }
}

#[test]
fn hierarchy_holds_on_outerplanar_labelings() {
    let table = CycleLabelerTable::default();
    for inst in outerplanar_corpus(5, 9, 12345) {
        let l = label_outerplanar(&inst.graph, &inst.blocks, 1, &table).unwrap();
        assert_hierarchy(&inst.graph, &l, 1);
    }
}

#[test]
fn complete_graph_labelings_meet_the_product_bound() {
    for n in [3usize, 7, 12, 31] {
        let l = label_complete(n).unwrap();
        let g = Graph::complete(n).unwrap();
        let k = ceil_log2(n as u64) - 1;
        assert!(verify_product(&g, &l, k).unwrap().ok);
    }
}

#[test]
fn every_reported_violation_is_genuine() {
    // A deliberately broken labeling of K_4 under each predicate; each
    // violation is recomputed from scratch against the number theory
    // primitives.
    let g = Graph::complete(4).unwrap();
    let l = Labeling::from_values(&[0, 1, 6, 18]);

    let product = verify_product(&g, &l, 1).unwrap();
    assert!(!product.ok);
    for v in &product.violations {
        let gap = edge_gap(&l, v.u, v.v).unwrap();
        assert_eq!(gap, v.gap);
        match &v.reason {
            ViolationReason::GapNotGreaterThanOne => assert!(gap <= 1),
            ViolationReason::TooManyPrimeFactors { omega, max } => {
                assert_eq!(*omega, count_prime_factors(gap).unwrap());
                assert!(*omega > *max);
            }
            ViolationReason::DuplicateLabel => assert_eq!(gap, 0),
            other => panic!("unexpected product violation {other:?}"),
        }
    }

    let power = verify_power(&g, &l, 2).unwrap();
    for v in &power.violations {
        let gap = edge_gap(&l, v.u, v.v).unwrap();
        assert!(gap < 2 || classify_prime_power(gap, 2).unwrap().is_none());
    }

    let strict = verify_strict(&g, &l, 2).unwrap();
    for v in &strict.violations {
        let gap = edge_gap(&l, v.u, v.v).unwrap();
        assert!(gap < 2 || strict_kth_power_base(gap, 2).unwrap().is_none());
    }
}

#[test]
fn three_face_block_detaches_an_end_face() {
    // Eight vertices, dual a path of three faces: the detachable cycle is
    // an end face with the shared chord endpoints as attachment.
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.push((0, 2));
    edges.push((0, 4));
    let g = Graph::new(8, &edges).unwrap();
    let emb = OuterplanarEmbedding {
        outer: (0..8).collect(),
        chords: vec![(0, 2), (0, 4)],
    };
    let wd = weak_dual(&emb).unwrap();
    assert_eq!(wd.faces.len(), 3);
    assert_eq!(wd.leaf_faces().len(), 2);

    let res = find_leaf_cycle(&g, &[emb]).unwrap();
    let verts: BTreeSet<usize> = res.cycle.iter().copied().collect();
    let (x, y) = match res.attachment {
        Attachment::Two(x, y) => (x, y),
        other => panic!("expected a chord attachment, got {other:?}"),
    };
    assert!(
        verts == [0usize, 1, 2].into_iter().collect::<BTreeSet<_>>()
            || verts == [0usize, 4, 5, 6, 7].into_iter().collect::<BTreeSet<_>>(),
        "must be an end face, got {verts:?}"
    );
    assert!(g.has_edge(x, y));

    // Deleting the attachment leaves the face remainder as its own
    // component.
    let keep: BTreeSet<usize> = (0..8).filter(|v| *v != x && *v != y).collect();
    let (sub, ids) = g.induced(&keep);
    let rest: BTreeSet<usize> = verts.iter().copied().filter(|v| *v != x && *v != y).collect();
    let comp = sub
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| ids[i]).collect::<BTreeSet<_>>())
        .find(|c| c.contains(rest.iter().next().unwrap()))
        .unwrap();
    assert_eq!(comp, rest);
}
