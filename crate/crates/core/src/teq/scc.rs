//! The TEQ relation graph and its terminal strongly connected components.

use crate::altset::{AltSet, MAX_ORDER};

/// Directed graph on a subset of alternatives, one successor set per vertex.
///
/// For TEQ, `x -> y` iff `y` is in the TEQ of the dominators of `x` within
/// the universe; vertices without dominators have no successors.
#[derive(Clone, PartialEq, Eq)]
pub struct RelationGraph {
    universe: AltSet,
    successors: [AltSet; MAX_ORDER],
}

impl RelationGraph {
    pub fn new(universe: AltSet) -> Self {
        RelationGraph { universe, successors: [AltSet::EMPTY; MAX_ORDER] }
    }

    /// Builds a graph from `(vertex, successors)` pairs. Successors outside
    /// the universe are dropped.
    pub fn from_successors(universe: AltSet, edges: impl IntoIterator<Item = (usize, AltSet)>) -> Self {
        let mut g = RelationGraph::new(universe);
        for (v, s) in edges {
            g.set_successors(v, s);
        }
        g
    }

    #[inline]
    pub fn universe(&self) -> AltSet {
        self.universe
    }

    #[inline]
    pub fn successors(&self, v: usize) -> AltSet {
        self.successors[v]
    }

    pub(crate) fn set_successors(&mut self, v: usize, succ: AltSet) {
        debug_assert!(self.universe.contains(v));
        self.successors[v] = succ & self.universe;
    }
}

impl std::fmt::Debug for RelationGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.universe.iter().map(|v| (v, self.successors[v]))).finish()
    }
}

struct Tarjan<'g> {
    g: &'g RelationGraph,
    index: [u8; MAX_ORDER],
    low: [u8; MAX_ORDER],
    on_stack: AltSet,
    visited: AltSet,
    stack: Vec<usize>,
    next: u8,
    components: Vec<AltSet>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize) {
        self.index[v] = self.next;
        self.low[v] = self.next;
        self.next += 1;
        self.visited = self.visited.insert(v);
        self.on_stack = self.on_stack.insert(v);
        self.stack.push(v);

        for w in self.g.successors(v) {
            if !self.visited.contains(w) {
                self.visit(w);
                self.low[v] = self.low[v].min(self.low[w]);
            } else if self.on_stack.contains(w) {
                self.low[v] = self.low[v].min(self.index[w]);
            }
        }

        if self.low[v] == self.index[v] {
            let mut comp = AltSet::EMPTY;
            loop {
                let w = self.stack.pop().expect("tarjan stack underflow");
                self.on_stack = self.on_stack.remove(w);
                comp = comp.insert(w);
                if w == v {
                    break;
                }
            }
            self.components.push(comp);
        }
    }
}

/// All strongly connected components, sorted by smallest member.
pub fn sccs(g: &RelationGraph) -> Vec<AltSet> {
    let mut t = Tarjan {
        g,
        index: [0; MAX_ORDER],
        low: [0; MAX_ORDER],
        on_stack: AltSet::EMPTY,
        visited: AltSet::EMPTY,
        stack: Vec::with_capacity(g.universe.len()),
        next: 0,
        components: Vec::new(),
    };
    for v in g.universe {
        if !t.visited.contains(v) {
            t.visit(v);
        }
    }
    let mut comps = t.components;
    comps.sort_by_key(|c| c.first());
    comps
}

/// Components with no edge leaving them, sorted by smallest member.
pub fn terminal_sccs(g: &RelationGraph) -> Vec<AltSet> {
    sccs(g)
        .into_iter()
        .filter(|&c| c.iter().all(|v| g.successors(v).is_subset(c)))
        .collect()
}
