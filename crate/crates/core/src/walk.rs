//! Recursive generator of sesquivalent subgraphs over a bit mask of
//! uncovered vertices.
//!
//! The smallest uncovered vertex `u` is either left isolated, matched to a
//! larger uncovered neighbor, or taken as the minimum vertex of a canonical
//! cycle whose vertices are all uncovered. Each subgraph is produced once.

use crate::graph::{Cycle, Graph};

pub(crate) struct Walker<'g> {
    graph: &'g Graph,
    masks: Vec<u64>,
    cycles: Vec<Cycle>,
    // (cycle mask, index into `cycles`) grouped by minimum vertex
    by_root: Vec<Vec<(u64, usize)>>,
}

#[derive(Default)]
pub(crate) struct WalkState {
    pub isolated: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub cycles: Vec<usize>,
}

impl<'g> Walker<'g> {
    /// `max_cycle` bounds the cycle lengths considered; pass `graph.n()` for
    /// the full set. Requires `graph.n() <= 64`.
    pub fn new(graph: &'g Graph, max_cycle: usize) -> Walker<'g> {
        let cycles = graph.enumerate_cycles(max_cycle);
        let mut by_root = vec![Vec::new(); graph.n()];
        for (i, c) in cycles.iter().enumerate() {
            by_root[c.vertices()[0]].push((c.mask(), i));
        }
        Walker {
            graph,
            masks: graph.neighbor_masks(),
            cycles,
            by_root,
        }
    }

    pub fn cycle(&self, index: usize) -> &Cycle {
        &self.cycles[index]
    }

    pub fn full_mask(&self) -> u64 {
        match self.graph.n() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    /// Visits every sesquivalent subgraph on the vertex set `uncovered`.
    /// With `allow_isolated == false` only subgraphs without isolated
    /// vertices are produced.
    pub fn walk<F: FnMut(&WalkState)>(&self, uncovered: u64, allow_isolated: bool, f: &mut F) {
        let mut state = WalkState::default();
        self.step(uncovered, allow_isolated, &mut state, f);
    }

    fn step<F: FnMut(&WalkState)>(&self, uncovered: u64, allow_isolated: bool, state: &mut WalkState, f: &mut F) {
        if uncovered == 0 {
            f(state);
            return;
        }
        let u = uncovered.trailing_zeros() as usize;
        let rest = uncovered & !(1u64 << u);

        if allow_isolated {
            state.isolated.push(u);
            self.step(rest, allow_isolated, state, f);
            state.isolated.pop();
        }

        let mut partners = self.masks[u] & rest;
        while partners != 0 {
            let w = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            state.edges.push((u, w));
            self.step(rest & !(1u64 << w), allow_isolated, state, f);
            state.edges.pop();
        }

        for &(cmask, idx) in &self.by_root[u] {
            if cmask & !uncovered == 0 {
                state.cycles.push(idx);
                self.step(uncovered & !cmask, allow_isolated, state, f);
                state.cycles.pop();
            }
        }
    }
}
