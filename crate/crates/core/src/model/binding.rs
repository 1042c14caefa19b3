use std::collections::HashMap;

use super::mincut::{stoer_wagner, MinCut};
use super::{Assembly, Direction, ModelError, Position, TileSet};

/// Weighted bond graph of an assembly. Only positive-strength bonds between
/// lattice-adjacent tiles become edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BindingGraph {
    pub nodes: Vec<Position>,
    /// `(i, j, weight)` with `i < j` indexing into `nodes`.
    pub edges: Vec<(usize, usize, u32)>,
}

impl BindingGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Global minimum cut, or `None` for graphs with fewer than two nodes.
    pub fn min_cut(&self) -> Option<MinCut> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v, w)| (u, v, u64::from(w))).collect();
        stoer_wagner(self.nodes.len(), &edges)
    }
}

pub fn binding_graph(assembly: &Assembly, tileset: &TileSet) -> Result<BindingGraph, ModelError> {
    let nodes: Vec<Position> = assembly.positions().collect();
    let index: HashMap<Position, usize> = nodes.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (i, (p, tile)) in assembly.iter().enumerate() {
        if !tileset.contains(tile) {
            return Err(ModelError::UnknownTile { tile: tile.to_string() });
        }
        // east and north only, so each adjacent pair is seen once
        for side in [Direction::East, Direction::North] {
            let Some(q) = p.checked_step(side) else { continue };
            let Some(other) = assembly.get(q) else { continue };
            if !tileset.contains(other) {
                return Err(ModelError::UnknownTile { tile: other.to_string() });
            }
            let w = tileset.interaction(tile, side, other);
            if w > 0 {
                let j = index[&q];
                edges.push((i.min(j), i.max(j), w));
            }
        }
    }
    Ok(BindingGraph { nodes, edges })
}

/// Whether every way of splitting the assembly in two is held together by at
/// least `temperature` total bond strength.
///
/// Empty and single-tile assemblies are trivially stable.
pub fn is_tau_stable(assembly: &Assembly, tileset: &TileSet, temperature: u32) -> Result<bool, ModelError> {
    Ok(stability_cut(assembly, tileset)?.is_none_or(|w| w >= u64::from(temperature)))
}

/// Minimum cut weight of the binding graph (`0` when disconnected), or
/// `None` for assemblies with fewer than two tiles.
pub(crate) fn stability_cut(assembly: &Assembly, tileset: &TileSet) -> Result<Option<u64>, ModelError> {
    let graph = binding_graph(assembly, tileset)?;
    if graph.node_count() < 2 {
        return Ok(None);
    }
    if !graph.is_connected() {
        return Ok(Some(0));
    }
    Ok(graph.min_cut().map(|c| c.weight))
}
