//! Closed forms checked against brute-force enumeration on small graphs.

use edgeflip::bits::BitVec;
use edgeflip::corpus::{self, generated_corpus};
use edgeflip::edge_space::{coset_representative, edge_cut, vertex_cut, SimpleBasis};
use edgeflip::flip::{alpha, element_of_word, group_order_bruteforce, subgroup_order, word_for_transposition};
use edgeflip::graph::{all_spanning_trees, has_induced_path_of_k_vertices, has_path_of_k_edges, spanning_tree};
use edgeflip::orbit::{bfs_labels, classification_labels, enumerate_orbit, Puzzle};
use edgeflip::solver::{bfs_distances, solve, verify_sequence, Solution};
use edgeflip::structure::{structure, verify_structure};
use edgeflip::vertex_flip::{
    all_y_specs, build_y, classify_y, path_plus_edge_family, pi1, vertex_group_order_bruteforce, VertexGroupDescriptor,
};
use edgeflip::{EdgeSet, Graph, Permutation, VertexSet};
use num_bigint::BigUint;

fn config(m: usize, mask: u64) -> EdgeSet {
    EdgeSet::from_bits(BitVec::from_u64(m, mask))
}

fn small_graphs() -> Vec<Graph> {
    generated_corpus(5, 7).into_iter().filter(|g| g.n() >= 3).collect()
}

#[test]
fn closed_form_partition_matches_bfs() {
    for g in small_graphs() {
        let p = Puzzle::new(g.clone()).unwrap();
        let all: Vec<usize> = (0..g.m()).collect();
        assert_eq!(classification_labels(&p).unwrap(), bfs_labels(&g, &all).unwrap(), "{:?}", g.edges());
    }
}

#[test]
fn tree_moves_alone_give_the_bond_space_orbits() {
    for g in small_graphs() {
        let p = Puzzle::new(g.clone()).unwrap();
        let tree = p.tree().edges().to_vec();
        let labels = bfs_labels(&g, &tree).unwrap();
        let full = classification_labels(&p).unwrap();
        for x in 0..1u64 << g.m() {
            let cfg = config(g.m(), x);
            if p.basis().contains(&cfg) {
                assert_eq!(labels[x as usize], full[x as usize], "{:?} {x:b}", g.edges());
            }
        }
    }
}

#[test]
fn one_extra_cotree_edge_suffices_on_its_coset() {
    for g in small_graphs() {
        let p = Puzzle::new(g.clone()).unwrap();
        let full = classification_labels(&p).unwrap();
        for &eps in p.cosets().cotree() {
            let mut moves = p.tree().edges().to_vec();
            moves.push(eps);
            let labels = bfs_labels(&g, &moves).unwrap();
            for x in 0..1u64 << g.m() {
                let cfg = config(g.m(), x);
                let rep = coset_representative(&g, p.tree(), &cfg).unwrap();
                if rep.contains(eps) {
                    assert_eq!(labels[x as usize], full[x as usize]);
                }
            }
        }
    }
}

#[test]
fn orbit_sizes_match_enumeration() {
    for g in small_graphs().into_iter().filter(|g| g.m() <= 6) {
        let p = Puzzle::new(g.clone()).unwrap();
        for x in 0..1u64 << g.m() {
            let cfg = config(g.m(), x);
            let desc = p.classify(&cfg).unwrap();
            let orbit = enumerate_orbit(&g, &cfg, 1 << g.m()).unwrap();
            assert_eq!(p.orbit_size(&desc).unwrap(), BigUint::from(orbit.len()));
            assert!(orbit.iter().all(|c| p.classify(c).unwrap() == desc));
        }
    }
}

#[test]
fn same_orbit_does_not_depend_on_the_tree() {
    for g in small_graphs().into_iter().filter(|g| g.m() <= 6) {
        let trees = all_spanning_trees(&g).unwrap();
        if trees.len() < 2 {
            continue;
        }
        let reference = classification_labels(&Puzzle::new(g.clone()).unwrap()).unwrap();
        for t in trees {
            let p = Puzzle::with_tree(g.clone(), t).unwrap();
            assert_eq!(classification_labels(&p).unwrap(), reference);
        }
    }
}

#[test]
fn sw_update_matches_direct_computation() {
    for n in 3..=6 {
        for g in corpus::connected_graphs(n) {
            let p = Puzzle::new(g.clone()).unwrap();
            let b = p.basis();
            for mask in 0u64..1 << (n - 1) {
                let coords = VertexSet::from_members(n, (1..n).filter(|v| mask >> (v - 1) & 1 == 1));
                let bond = b.compose(&coords);
                for e in 0..g.m() {
                    let moved = edgeflip::flip::apply_move(&g, &bond, edgeflip::Move(e)).unwrap();
                    let mut target = edgeflip::edge_space::edge_neighborhood(&g, e).unwrap();
                    target.add_assign(&moved);
                    assert_eq!(p.sw_update_predict(&bond, e).unwrap(), b.simple_weight(&target).unwrap());
                }
            }
        }
    }
}

#[test]
fn cuts_add_up() {
    for g in small_graphs() {
        let mut total = EdgeSet::empty(g.m());
        for v in 0..g.n() {
            total.add_assign(&vertex_cut(&g, v).unwrap());
        }
        assert!(total.is_empty());
        for mask in 0u64..1 << g.n() {
            let u = VertexSet::from_bits(BitVec::from_u64(g.n(), mask));
            let mut sum = EdgeSet::empty(g.m());
            for v in u.members() {
                sum.add_assign(&vertex_cut(&g, v).unwrap());
            }
            assert_eq!(edge_cut(&g, &u).unwrap(), sum);
        }
        assert_eq!(SimpleBasis::new(&g).unwrap().rank(), g.n() - 1);
    }
}

#[test]
fn group_orders_match_formula() {
    for g in small_graphs() {
        let found = group_order_bruteforce(&g, 2_000_000).unwrap();
        assert_eq!(BigUint::from(found), structure(&g).unwrap().order, "{:?}", g.edges());
    }
}

#[test]
fn transposition_words_induce_transpositions() {
    for g in small_graphs() {
        let tree = spanning_tree(&g);
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let w = word_for_transposition(&g, &tree, u, v).unwrap();
                assert!(w.edges().all(|e| tree.contains(e)));
                let elem = element_of_word(&g, &w).unwrap();
                assert_eq!(alpha(&g, &elem).unwrap(), Permutation::transposition(g.n(), u, v));
            }
        }
    }
}

#[test]
fn tree_moves_generate_the_symmetric_group_on_trees() {
    for g in small_graphs().into_iter().filter(Graph::is_tree) {
        let tree = spanning_tree(&g);
        let order = subgroup_order(&g, tree.edges(), 1_000).unwrap();
        assert_eq!(BigUint::from(order), edgeflip::structure::factorial(g.n()));
    }
}

#[test]
fn structure_verification_passes() {
    for g in [corpus::complete(3), corpus::cycle(4), corpus::paw(), corpus::path(4), corpus::star(5)] {
        let report = verify_structure(&g, 10_000).unwrap();
        assert!(report.passed(), "{report:?}");
    }
}

#[test]
fn solver_is_shortest_and_complete() {
    for g in small_graphs().into_iter().filter(|g| g.m() <= 5) {
        let p = Puzzle::new(g.clone()).unwrap();
        for a in 0..1u64 << g.m() {
            let start = config(g.m(), a);
            let dist = bfs_distances(&g, &start).unwrap();
            for b in 0..1u64 << g.m() {
                let target = config(g.m(), b);
                match solve(&p, &start, &target, 1 << 20).unwrap() {
                    Solution::Solved(w) => {
                        assert_eq!(verify_sequence(&g, &start, &w).unwrap(), target);
                        assert_eq!(dist.get(&target), Some(&w.len()));
                    }
                    Solution::Unsolvable { .. } => assert!(!dist.contains_key(&target)),
                    Solution::CapExceeded { .. } => panic!("cap too small"),
                }
            }
        }
    }
}

#[test]
fn path_searches_agree_with_known_graphs() {
    let p5 = corpus::path(5);
    assert!(has_path_of_k_edges(&p5, 4).unwrap());
    assert!(has_induced_path_of_k_vertices(&p5, 5).unwrap());
    let k4 = corpus::complete(4);
    assert!(has_path_of_k_edges(&k4, 3).unwrap());
    assert!(!has_induced_path_of_k_vertices(&k4, 3).unwrap());
    // the five-vertex one-hub example has an induced path on four vertices
    let fig = build_y(&edgeflip::YGraphSpec::new(5, vec![2, 4]).unwrap());
    assert!(has_induced_path_of_k_vertices(&fig, 4).unwrap());
}

#[test]
fn one_hub_orders_follow_the_classification() {
    for m in 3..=6 {
        for spec in all_y_specs(m) {
            let desc = classify_y(&spec).unwrap();
            let found = vertex_group_order_bruteforce(&build_y(&spec), 2_000_000).unwrap();
            if let Some(order) = desc.order() {
                assert_eq!(found, order, "{spec}");
            } else {
                assert!(matches!(desc, VertexGroupDescriptor::UnclassifiedByPi1 { .. }));
            }
        }
    }
}

#[test]
fn path_plus_edge_line_graphs_have_small_invariant() {
    for m in 3..=8 {
        for member in path_plus_edge_family(m).unwrap() {
            assert!(member.verify().unwrap());
            let p = pi1(&member.spec);
            assert!([1, 2, m - 2, m - 1].contains(&p), "{} has {p}", member.spec);
        }
    }
}
