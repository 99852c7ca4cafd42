//! Cycle matroids of multigraphs.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle;
use crate::subset::MAX_GROUND_SIZE;

/// An undirected multigraph; vertices are `1..=vertex_count`, edges are the
/// matroid elements in input order (1-based). Loops and parallel edges are
/// allowed — they become 1- and 2-circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

impl MultiGraph {
    pub fn new(vertex_count: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if edges.len() > MAX_GROUND_SIZE as usize {
            return Err(Error::GroundSetTooLarge { n: edges.len() as u64 });
        }
        for &(u, v) in &edges {
            for end in [u, v] {
                if end == 0 || end > vertex_count {
                    return Err(Error::ElementOutOfRange {
                        element: u64::from(end),
                        limit: vertex_count,
                    });
                }
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Matroid rank of an edge set: vertices minus connected components of
    /// the spanning subgraph using exactly those edges.
    pub fn rank_of_edge_set(&self, mask: u64) -> u32 {
        let mut parent: Vec<u32> = (0..self.vertex_count).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut components = self.vertex_count;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u - 1), find(&mut parent, v - 1));
            if ru != rv {
                parent[ru as usize] = rv;
                components -= 1;
            }
        }
        self.vertex_count - components
    }
}

/// The cycle matroid: circuits are the edge sets of simple closed walks.
pub fn cycle_matroid(graph: &MultiGraph) -> Result<Matroid> {
    let family = oracle::circuits_from_rank(
        |mask| graph.rank_of_edge_set(mask),
        graph.edge_count() as u32,
    )?;
    Ok(Matroid::new(family))
}
