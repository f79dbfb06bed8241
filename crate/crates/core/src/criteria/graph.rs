//! Finite simple graphs with the connectivity notions used by the criteria.
//!
//! Conventions follow the literal definitions: a graph is 2-connected when it is
//! connected and stays connected after deleting any one vertex. The empty graph and
//! the one-vertex graph are connected, so a single vertex is 2-connected, and so is
//! a single edge. Double 2-connectivity with respect to a partition deletes one
//! vertex from each block at once and does not separately require connectivity of
//! the whole graph.

use std::collections::BTreeSet;

use petgraph::algo::articulation_points::articulation_points;
use petgraph::algo::connected_components;
use petgraph::graph::{NodeIndex, UnGraph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertex partition")]
    MissingPartition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriteriaGraph<V> {
    vertices: Vec<V>,
    edges: BTreeSet<(usize, usize)>,
    /// Block of each vertex: `false` for the first (minus) block.
    partition: Option<Vec<bool>>,
}

impl<V: Ord + Clone> CriteriaGraph<V> {
    /// Vertices are deduplicated and sorted.
    pub fn new(vertices: impl IntoIterator<Item = V>) -> Self {
        let set: BTreeSet<V> = vertices.into_iter().collect();
        CriteriaGraph {
            vertices: set.into_iter().collect(),
            edges: BTreeSet::new(),
            partition: None,
        }
    }

    /// Vertices of `minus` form the first block, all others the second.
    pub fn with_partition(mut self, minus: &BTreeSet<V>) -> Self {
        self.partition = Some(self.vertices.iter().map(|v| !minus.contains(v)).collect());
        self
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Adds the edge `{u, w}`. Loops and edges to unknown vertices are ignored;
    /// returns whether an edge was newly inserted.
    pub fn add_edge(&mut self, u: &V, w: &V) -> bool {
        match (self.index_of(u), self.index_of(w)) {
            (Some(i), Some(j)) if i != j => self.edges.insert((i.min(j), i.max(j))),
            _ => false,
        }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (&self.vertices[i], &self.vertices[j]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: &V, w: &V) -> bool {
        match (self.index_of(u), self.index_of(w)) {
            (Some(i), Some(j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    pub fn blocks(&self) -> Option<(Vec<&V>, Vec<&V>)> {
        let p = self.partition.as_ref()?;
        let (mut minus, mut plus) = (Vec::new(), Vec::new());
        for (v, &b) in self.vertices.iter().zip(p) {
            if b {
                plus.push(v);
            } else {
                minus.push(v);
            }
        }
        Some((minus, plus))
    }

    /// Induced subgraph on the vertices not in `removed`, with a map back to
    /// original indices.
    fn induced(&self, removed: &[usize]) -> (UnGraph<(), ()>, Vec<usize>) {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|i| !removed.contains(i))
            .collect();
        let mut pos = vec![usize::MAX; self.vertices.len()];
        let mut g = UnGraph::<(), ()>::with_capacity(keep.len(), self.edges.len());
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
            g.add_node(());
        }
        for &(i, j) in &self.edges {
            if pos[i] != usize::MAX && pos[j] != usize::MAX {
                g.add_edge(NodeIndex::new(pos[i]), NodeIndex::new(pos[j]), ());
            }
        }
        (g, keep)
    }

    pub fn is_connected(&self) -> bool {
        let (g, _) = self.induced(&[]);
        connected_components(&g) <= 1
    }

    /// A vertex whose deletion disconnects the graph, smallest first. `Ok(None)` if
    /// the graph is 2-connected; `Err(())` if the graph is disconnected to begin with.
    pub fn cut_vertex(&self) -> Result<Option<&V>, ()> {
        let (g, keep) = self.induced(&[]);
        if connected_components(&g) > 1 {
            return Err(());
        }
        Ok(articulation_points(&g)
            .into_iter()
            .map(|n| keep[n.index()])
            .min()
            .map(|i| &self.vertices[i]))
    }

    pub fn is_two_connected(&self) -> bool {
        matches!(self.cut_vertex(), Ok(None))
    }

    /// The smallest pair (minus-block vertex, plus-block vertex) whose simultaneous
    /// deletion disconnects the graph, or `None` if the graph is doubly 2-connected.
    pub fn disconnecting_pair(&self) -> Result<Option<(&V, &V)>, GraphError> {
        let part = self.partition.as_ref().ok_or(GraphError::MissingPartition)?;
        let plus: Vec<usize> = (0..self.vertices.len()).filter(|&i| part[i]).collect();
        if plus.is_empty() {
            return Ok(None);
        }
        for a in (0..self.vertices.len()).filter(|&i| !part[i]) {
            let (g, keep) = self.induced(&[a]);
            let bad = bad_second_deletions(&g, &keep);
            if let Some(&b) = plus.iter().find(|b| bad.contains(b)) {
                return Ok(Some((&self.vertices[a], &self.vertices[b])));
            }
        }
        Ok(None)
    }

    pub fn is_doubly_two_connected(&self) -> Result<bool, GraphError> {
        Ok(self.disconnecting_pair()?.is_none())
    }

    /// Vertices in the same component as `start` after deleting `removed`.
    pub fn reachable_without(&self, start: &V, removed: &[&V]) -> BTreeSet<V> {
        let removed: Vec<usize> = removed.iter().filter_map(|v| self.index_of(v)).collect();
        let Some(s) = self.index_of(start) else {
            return BTreeSet::new();
        };
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            for &(x, y) in &self.edges {
                let j = if x == i {
                    y
                } else if y == i {
                    x
                } else {
                    continue;
                };
                if !seen[j] && !removed.contains(&j) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        (0..self.vertices.len())
            .filter(|&i| seen[i])
            .map(|i| self.vertices[i].clone())
            .collect()
    }
}

/// Original indices `b` such that deleting `b` from `g` leaves a disconnected graph.
fn bad_second_deletions(g: &UnGraph<(), ()>, keep: &[usize]) -> BTreeSet<usize> {
    let n = g.node_count();
    let mut comp = petgraph::unionfind::UnionFind::<usize>::new(n);
    for e in g.edge_indices() {
        let (x, y) = g.edge_endpoints(e).expect("edge");
        comp.union(x.index(), y.index());
    }
    let labels = comp.into_labeling();
    let mut sizes = std::collections::BTreeMap::new();
    for &l in &labels {
        *sizes.entry(l).or_insert(0usize) += 1;
    }
    match sizes.len() {
        0 | 1 => articulation_points(g)
            .into_iter()
            .map(|n| keep[n.index()])
            .collect(),
        2 => {
            // only deleting an isolated vertex can reconnect
            let singles: BTreeSet<usize> = (0..n).filter(|&i| sizes[&labels[i]] == 1).collect();
            (0..n)
                .filter(|i| !singles.contains(i))
                .map(|i| keep[i])
                .collect()
        }
        _ => keep.iter().copied().collect(),
    }
}
