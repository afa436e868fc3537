use std::collections::VecDeque;

use super::{DynGraph, NodeId};

/// A partition of the node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub label: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.label {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn largest(&self) -> usize {
        self.sizes().into_iter().max().unwrap_or(0)
    }

    /// Nodes of each component, in ascending node order.
    pub fn members(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.label.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Strongly connected components and their condensation DAG.
///
/// Component ids follow Tarjan completion order, so every DAG edge goes from a
/// higher id to a lower id and ascending id order is a reverse topological
/// order.
#[derive(Debug, Clone)]
pub struct Condensation {
    pub components: Components,
    /// Deduplicated out-edges between components.
    pub dag: Vec<Vec<usize>>,
}

impl Condensation {
    pub fn topological_order(&self) -> Vec<usize> {
        (0..self.components.count).rev().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.dag.iter().map(Vec::len).sum()
    }
}

/// Components of an undirected graph (labels in order of the smallest member).
pub fn connected_components(g: &DynGraph) -> Components {
    debug_assert!(!g.is_directed(), "use weakly_connected_components on directed graphs");
    weakly_connected_components(g)
}

/// Components ignoring edge direction.
pub fn weakly_connected_components(g: &DynGraph) -> Components {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let nbrs = g.out_edges(u).iter().chain(if g.is_directed() {
                g.in_edges(u).iter()
            } else {
                [].iter()
            });
            for &(v, _) in nbrs {
                if label[v] == usize::MAX {
                    label[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    Components { label, count }
}

/// Iterative Tarjan, linear time.
pub fn strongly_connected_components(g: &DynGraph) -> Condensation {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<NodeId> = Vec::new();
    let mut label = vec![UNSEEN; n];
    let mut count = 0;
    let mut next_index = 0;
    // (node, position in its adjacency list)
    let mut call: Vec<(NodeId, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.last_mut() {
            let u = top.0;
            let adj = g.out_edges(u);
            if top.1 < adj.len() {
                let v = adj[top.1].0;
                top.1 += 1;
                if index[v] == UNSEEN {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    label[w] = count;
                    if w == u {
                        break;
                    }
                }
                count += 1;
            }
        }
    }

    let mut dag: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (u, v, _) in g.edges() {
        let (cu, cv) = (label[u], label[v]);
        if cu != cv {
            dag[cu].push(cv);
        }
    }
    for out in &mut dag {
        out.sort_unstable();
        out.dedup();
    }
    Condensation { components: Components { label, count }, dag }
}
