//! Shortest move sequences between configurations.
//!
//! Solvability is decided by orbit classification before any search runs.
//! Solvable pairs are connected by bidirectional breadth-first search; among
//! the shortest words the lexicographically smallest edge-index sequence is
//! returned.

use rustc_hash::FxHashMap;

use crate::bits::BitVec;
use crate::edge_space::EdgeSet;
use crate::error::{Error, Result};
use crate::flip::{apply_move, Move, MoveSequence};
use crate::graph::Graph;
use crate::matrix::FlipGenerator;
use crate::orbit::{OrbitDescriptor, Puzzle};

/// Default budget of stored states for a single search.
pub const DEFAULT_STATE_CAP: usize = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Solved(MoveSequence),
    /// The endpoints lie in different orbits; the descriptors certify it.
    Unsolvable {
        from: OrbitDescriptor,
        to: OrbitDescriptor,
    },
    /// Solvable, but the search ran out of budget before meeting.
    CapExceeded { cap: usize },
}

impl Solution {
    pub fn is_solvable(&self) -> bool {
        !matches!(self, Solution::Unsolvable { .. })
    }
}

pub fn solve(puzzle: &Puzzle, initial: &EdgeSet, target: &EdgeSet, state_cap: usize) -> Result<Solution> {
    let from = puzzle.classify(initial)?;
    let to = puzzle.classify(target)?;
    if from != to {
        return Ok(Solution::Unsolvable { from, to });
    }
    match shortest_word(puzzle.generators(), initial.bits(), target.bits(), state_cap) {
        Some(word) => Ok(Solution::Solved(word)),
        None => Ok(Solution::CapExceeded { cap: state_cap }),
    }
}

/// Replays `word` from `initial`, left to right.
pub fn verify_sequence(g: &Graph, initial: &EdgeSet, word: &MoveSequence) -> Result<EdgeSet> {
    word.0
        .iter()
        .try_fold(initial.clone(), |cfg, &mv| apply_move(g, &cfg, mv))
}

#[inline]
fn step(gen: &FlipGenerator, state: &BitVec) -> Option<BitVec> {
    // a move on a white edge is the identity; never a useful step
    state.get(gen.pivot()).then(|| gen.apply(state))
}

/// `None` when more than `cap` states would have to be stored.
fn shortest_word(gens: &[FlipGenerator], start: &BitVec, goal: &BitVec, cap: usize) -> Option<MoveSequence> {
    if start == goal {
        return Some(MoveSequence::default());
    }
    // forward layers are kept separately so shortest-path membership can be
    // propagated back through them after the searches meet
    let mut fwd_layers: Vec<Vec<BitVec>> = vec![vec![start.clone()]];
    let mut fwd: FxHashMap<BitVec, usize> = FxHashMap::default();
    fwd.insert(start.clone(), 0);
    let mut bwd: FxHashMap<BitVec, usize> = FxHashMap::default();
    bwd.insert(goal.clone(), 0);
    let mut bwd_frontier = vec![goal.clone()];
    let mut bwd_depth = 0;

    let total = loop {
        let fwd_frontier = fwd_layers.last().unwrap();
        if fwd_frontier.is_empty() || bwd_frontier.is_empty() {
            // orbit classification guarantees reachability; unreachable here is a bug
            unreachable!("search exhausted a component without meeting");
        }
        let expand_forward = fwd_frontier.len() <= bwd_frontier.len();
        if expand_forward {
            let depth = fwd_layers.len();
            let mut layer = Vec::new();
            let mut best: Option<usize> = None;
            for s in fwd_frontier {
                for g in gens {
                    let Some(next) = step(g, s) else { continue };
                    if fwd.contains_key(&next) {
                        continue;
                    }
                    if fwd.len() + bwd.len() >= cap {
                        return None;
                    }
                    if let Some(&d) = bwd.get(&next) {
                        best = Some(best.map_or(depth + d, |b: usize| b.min(depth + d)));
                    }
                    fwd.insert(next.clone(), depth);
                    layer.push(next);
                }
            }
            fwd_layers.push(layer);
            if let Some(total) = best {
                break total;
            }
        } else {
            bwd_depth += 1;
            let mut layer = Vec::new();
            let mut best: Option<usize> = None;
            for s in &bwd_frontier {
                for g in gens {
                    let Some(next) = step(g, s) else { continue };
                    if bwd.contains_key(&next) {
                        continue;
                    }
                    if fwd.len() + bwd.len() >= cap {
                        return None;
                    }
                    if let Some(&d) = fwd.get(&next) {
                        best = Some(best.map_or(bwd_depth + d, |b: usize| b.min(bwd_depth + d)));
                    }
                    bwd.insert(next.clone(), bwd_depth);
                    layer.push(next);
                }
            }
            bwd_frontier = layer;
            if let Some(total) = best {
                break total;
            }
        }
    };

    // Forward depth reached is `a`; every shortest path crosses forward layer
    // `a` at a state whose backward distance is `total - a`.
    let a = fwd_layers.len() - 1;
    let mut on_path: Vec<rustc_hash::FxHashSet<BitVec>> = vec![Default::default(); a + 1];
    on_path[a] = fwd_layers[a]
        .iter()
        .filter(|s| bwd.get(*s) == Some(&(total - a)))
        .cloned()
        .collect();
    for k in (0..a).rev() {
        let (lower, upper) = on_path.split_at_mut(k + 1);
        lower[k] = fwd_layers[k]
            .iter()
            .filter(|s| gens.iter().any(|g| step(g, s).is_some_and(|t| upper[0].contains(&t))))
            .cloned()
            .collect();
    }

    let mut word = Vec::with_capacity(total);
    let mut cur = start.clone();
    for k in 1..=a {
        let (e, next) = gens
            .iter()
            .enumerate()
            .find_map(|(e, g)| step(g, &cur).filter(|t| on_path[k].contains(t)).map(|t| (e, t)))
            .expect("shortest path continues through the forward layers");
        word.push(Move(e));
        cur = next;
    }
    for remaining in (0..total - a).rev() {
        let (e, next) = gens
            .iter()
            .enumerate()
            .find_map(|(e, g)| step(g, &cur).filter(|t| bwd.get(t) == Some(&remaining)).map(|t| (e, t)))
            .expect("shortest path continues through the backward layers");
        word.push(Move(e));
        cur = next;
    }
    debug_assert_eq!(&cur, goal);
    Some(MoveSequence(word))
}

/// Distances from `start` to every reachable configuration by plain
/// breadth-first search. A test oracle for the solver; `m <= 20` only.
pub fn bfs_distances(g: &Graph, start: &EdgeSet) -> Result<FxHashMap<EdgeSet, usize>> {
    if g.m() > crate::graph::PATH_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            what: "m",
            value: g.m(),
            limit: crate::graph::PATH_SEARCH_LIMIT,
        });
    }
    let mut dist = FxHashMap::default();
    dist.insert(start.clone(), 0);
    let mut frontier = vec![start.clone()];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for s in &frontier {
            for e in 0..g.m() {
                let t = apply_move(g, s, Move(e))?;
                if !dist.contains_key(&t) {
                    dist.insert(t.clone(), depth);
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn es(m: usize, members: &[usize]) -> EdgeSet {
        EdgeSet::from_members(m, members.iter().copied())
    }

    #[test]
    fn solver_examples() {
        let p = Puzzle::new(corpus::complete(3)).unwrap();
        match solve(&p, &EdgeSet::empty(3), &es(3, &[0]), 100).unwrap() {
            Solution::Unsolvable { from, to } => {
                assert_eq!(from.class.label(), "SW(0)");
                assert_eq!(to.class.label(), "full");
            }
            other => panic!("expected unsolvable, got {other:?}"),
        }
        assert_eq!(
            solve(&p, &es(3, &[0]), &es(3, &[0, 1, 2]), 100).unwrap(),
            Solution::Solved(MoveSequence::new([0]))
        );
        assert_eq!(
            solve(&p, &es(3, &[1]), &es(3, &[1]), 100).unwrap(),
            Solution::Solved(MoveSequence::default())
        );
    }

    #[test]
    fn verify_sequence_examples() {
        let g = corpus::complete(3);
        let start = es(3, &[0, 1]);
        assert_eq!(verify_sequence(&g, &start, &MoveSequence::default()).unwrap(), start);
        assert_eq!(verify_sequence(&g, &start, &MoveSequence::new([1, 1])).unwrap(), start);
        assert!(verify_sequence(&g, &start, &MoveSequence::new([7])).is_err());
    }

    #[test]
    fn tiny_cap_reports_exhaustion() {
        let p = Puzzle::new(corpus::cycle(5)).unwrap();
        let a = es(5, &[0]);
        let orbit = crate::orbit::enumerate_orbit(p.graph(), &a, 1000).unwrap();
        let far = orbit.iter().max_by_key(|c| bfs_distances(p.graph(), &a).unwrap()[*c]).unwrap();
        assert_eq!(solve(&p, &a, far, 2).unwrap(), Solution::CapExceeded { cap: 2 });
    }

    #[test]
    fn lexicographically_smallest_shortest_word() {
        // on K3 from {e0}: both [0] and nothing else reach {e0,e1,e2} in one move,
        // and from {e0,e1,e2} to {e0} the moves 0 and ... are compared
        let g = corpus::complete(3);
        let p = Puzzle::new(g.clone()).unwrap();
        let all = es(3, &[0, 1, 2]);
        for target in crate::orbit::enumerate_orbit(&g, &all, 100).unwrap() {
            let Solution::Solved(w) = solve(&p, &all, &target, 100).unwrap() else { panic!() };
            // brute force every word of the same length
            let len = w.len();
            let mut best: Option<Vec<usize>> = None;
            for code in 0..3usize.pow(len as u32) {
                let word: Vec<usize> = (0..len).map(|i| code / 3usize.pow((len - 1 - i) as u32) % 3).collect();
                let seq = MoveSequence::new(word.clone());
                if verify_sequence(&g, &all, &seq).unwrap() == target {
                    best = Some(best.map_or(word.clone(), |b| b.min(word)));
                }
            }
            assert_eq!(w.edges().collect::<Vec<_>>(), best.unwrap());
        }
    }
}
