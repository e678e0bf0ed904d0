//! Exact maximum clique search: branch and bound over a fixed vertex order
//! (degree descending, index ascending) with a pivot rule that only branches
//! on candidates outside the pivot's neighborhood.

use crate::bitset::BitSet;
use crate::visibility::VisibilityGraph;

struct Search<'a> {
    adjacency: &'a [BitSet],
    best: Vec<usize>,
    cap: Option<usize>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        matches!(self.cap, Some(c) if self.best.len() >= c)
    }

    fn expand(&mut self, chosen: &mut Vec<usize>, mut candidates: BitSet) {
        if candidates.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + candidates.count() <= self.best.len() {
            return;
        }
        let pivot = candidates
            .iter()
            .map(|v| (candidates.intersection_count(&self.adjacency[v]), v))
            .fold(None, |acc: Option<(usize, usize)>, (deg, v)| match acc {
                Some((best, _)) if best >= deg => acc,
                _ => Some((deg, v)),
            })
            .map(|(_, v)| v)
            .expect("non-empty candidates");
        let branch: Vec<usize> = candidates.difference(&self.adjacency[pivot]).iter().collect();
        for v in branch {
            if chosen.len() + candidates.count() <= self.best.len() || self.done() {
                return;
            }
            chosen.push(v);
            self.expand(chosen, candidates.intersection(&self.adjacency[v]));
            chosen.pop();
            candidates.remove(v);
        }
    }
}

/// Vertices of a maximum clique (or of the first clique reaching `cap`), as
/// ascending 1-based indices. Empty only for an empty graph.
pub fn maximum_clique(graph: &VisibilityGraph, cap: Option<usize>) -> Vec<usize> {
    let n = graph.n();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut position = vec![0; n + 1];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    let adjacency: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut row = BitSet::new(n);
            for u in graph.adjacency(v).iter() {
                row.insert(position[u]);
            }
            row
        })
        .collect();

    let mut all = BitSet::new(n);
    for pos in 0..n {
        all.insert(pos);
    }
    let mut search = Search {
        adjacency: &adjacency,
        best: Vec::new(),
        cap,
    };
    search.expand(&mut Vec::with_capacity(n), all);

    let mut clique: Vec<usize> = search.best.into_iter().map(|pos| order[pos]).collect();
    clique.sort_unstable();
    clique
}
