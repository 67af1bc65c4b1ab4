//! Collapsing the clique complex of a line graph of a wheel-free graph onto
//! a 1-dimensional complex.

use serde::{Deserialize, Serialize};

use super::{multi_block_collapse, CollapseTrace, CollapsiblePair};
use crate::complex::{line_clique_complex, Simplex};
use crate::error::{Error, Result};
use crate::graph::{is_wheel_free, EdgeId, Graph, VertexId};

/// Neighbors of `center` split by the components of `G[N(center)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarPartition {
    pub center: VertexId,
    /// Neighbors isolated in `G[N(center)]`, ascending.
    pub isolated: Vec<VertexId>,
    /// Components with at least two vertices, each sorted, ordered by smallest member.
    pub tree_components: Vec<Vec<VertexId>>,
}

/// Partitions `N(x)`; every nontrivial component must induce a tree.
pub fn star_partition(g: &Graph, x: VertexId) -> Result<StarPartition> {
    g.check_vertex(x)?;
    let (sub, map) = g.induced_subgraph(g.neighbors(x))?;
    let mut isolated = Vec::new();
    let mut tree_components = Vec::new();
    for comp in sub.components() {
        if comp.len() == 1 {
            isolated.push(map[comp[0]]);
            continue;
        }
        let edges = sub
            .edges()
            .iter()
            .filter(|e| comp.binary_search(&e.lo()).is_ok())
            .count();
        if edges != comp.len() - 1 {
            let members: Vec<VertexId> = comp.iter().map(|&v| map[v]).collect();
            return Err(Error::Precondition(format!(
                "neighborhood of {x} has a cycle through {members:?}, so {x} is a wheel center"
            )));
        }
        tree_components.push(comp.iter().map(|&v| map[v]).collect());
    }
    Ok(StarPartition {
        center: x,
        isolated,
        tree_components,
    })
}

fn edge_vertex(g: &Graph, x: VertexId, y: VertexId) -> usize {
    g.edge_index(EdgeId::new(x, y).expect("distinct endpoints"))
        .expect("edge of g")
}

/// Collapses the clique complex of the line graph of a connected wheel-free
/// graph onto a complex of dimension at most one.
///
/// Each star facet with at least three edges is split into the blocks
/// `ℬ_1, …, ℬ_r` (edges to the tree components, by smallest member) and `𝒜`
/// (edges to isolated neighbors, last), and collapsed by
/// [`multi_block_collapse`]. `𝒜` is then collapsed onto the edges through its
/// largest element, and each `ℬ_j` by repeatedly removing the smallest leaf of
/// its tree. Triangles of `g` are collapsed last through their first edge.
pub fn wheelfree_collapse(g: &Graph) -> Result<CollapseTrace> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if !is_wheel_free(g) {
        return Err(Error::Precondition("graph contains a wheel".into()));
    }
    let mut trace = CollapseTrace::identity(line_clique_complex(g));
    for x in 0..g.vertex_count() {
        if g.degree(x) < 3 {
            continue;
        }
        let partition = star_partition(g, x)?;
        let star = Simplex::new(g.neighbors(x).iter().map(|&y| edge_vertex(g, x, y)));
        let to_edges = |vs: &[VertexId]| Simplex::new(vs.iter().map(|&y| edge_vertex(g, x, y)));
        let isolated = to_edges(&partition.isolated);
        let mut parts: Vec<Simplex> = partition
            .tree_components
            .iter()
            .map(|c| to_edges(c))
            .collect();
        if !isolated.is_empty() {
            parts.push(isolated.clone());
        }
        if parts.len() >= 2 {
            let step = multi_block_collapse(&trace.end, &star, &parts, &Simplex::default())?;
            trace.extend(step)?;
        }
        if isolated.len() >= 3 {
            let v = isolated.vertices();
            let (rest, last) = v.split_at(v.len() - 1);
            let singles: Vec<Simplex> = rest.iter().map(|&e| Simplex::new([e])).collect();
            let step = multi_block_collapse(
                &trace.end,
                &isolated,
                &singles,
                &Simplex::new(last.iter().copied()),
            )?;
            trace.extend(step)?;
        }
        for tree in &partition.tree_components {
            collapse_tree_block(g, x, tree, &mut trace)?;
        }
    }
    let triangles: Vec<Simplex> = trace
        .end
        .facets()
        .iter()
        .filter(|f| f.len() >= 3)
        .cloned()
        .collect();
    for tau in triangles {
        if tau.len() != 3 {
            return Err(Error::Inconsistent(format!(
                "facet {tau} survived the star collapses"
            )));
        }
        let v = tau.vertices();
        let free = Simplex::new([v[0], v[1]]);
        trace.push(CollapsiblePair { free, facet: tau })?;
    }
    if trace.end.dim() > 1 {
        return Err(Error::Inconsistent(
            "collapse did not reach dimension one".into(),
        ));
    }
    Ok(trace)
}

/// Removes leaves of the tree `G[tree]` one at a time. For leaf `a_1` with
/// parent `a_2` and the other tree vertices `a_3 < … < a_l`, the pairs are
/// `({e_1, e_i}, ℬ ∖ {e_3, …, e_{i−1}})` for `i = 3..l`, leaving `ℬ ∖ {e_1}`
/// and `{e_1, e_2}`.
fn collapse_tree_block(
    g: &Graph,
    x: VertexId,
    tree: &[VertexId],
    trace: &mut CollapseTrace,
) -> Result<()> {
    let mut remaining = tree.to_vec();
    while remaining.len() >= 3 {
        let in_tree = |v: &VertexId, r: &[VertexId]| r.binary_search(v).is_ok();
        let (leaf, parent) = remaining
            .iter()
            .find_map(|&v| {
                let nbrs: Vec<VertexId> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|w| in_tree(w, &remaining))
                    .collect();
                (nbrs.len() == 1).then(|| (v, nbrs[0]))
            })
            .ok_or_else(|| {
                Error::Inconsistent(format!("no leaf in neighborhood tree {remaining:?} of {x}"))
            })?;
        let others: Vec<VertexId> = remaining
            .iter()
            .copied()
            .filter(|&v| v != leaf && v != parent)
            .collect();
        if let Some(&bad) = others.iter().find(|&&v| g.has_edge(leaf, v)) {
            log::warn!("leaf {leaf} of the tree at {x} is adjacent to non-parent {bad}; the edges lie in a triangle");
            return Err(Error::Inconsistent(format!(
                "leaf {leaf} adjacent to {bad} in the neighborhood of {x}"
            )));
        }
        let block = Simplex::new(remaining.iter().map(|&y| edge_vertex(g, x, y)));
        let e1 = edge_vertex(g, x, leaf);
        for (i, &o) in others.iter().enumerate() {
            let removed = Simplex::new(others[..i].iter().map(|&y| edge_vertex(g, x, y)));
            trace.push(CollapsiblePair {
                free: Simplex::new([e1, edge_vertex(g, x, o)]),
                facet: block.minus(&removed),
            })?;
        }
        remaining.retain(|&v| v != leaf);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::line_clique_complex;
    use crate::graph::{complete, cycle, petersen, star, wheel};
    use crate::homology::reduced_homology;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn partition_examples() {
        let p = star_partition(&bowtie(), 0).unwrap();
        assert!(p.isolated.is_empty());
        assert_eq!(p.tree_components, vec![vec![1, 2], vec![3, 4]]);

        let p = star_partition(&cycle(5).unwrap(), 0).unwrap();
        assert_eq!(p.isolated, vec![1, 4]);
        assert!(p.tree_components.is_empty());

        let p = star_partition(&star(4).unwrap(), 0).unwrap();
        assert_eq!(p.isolated, vec![1, 2, 3, 4]);

        // The hub of W_4 is the apex, vertex 4.
        assert!(matches!(
            star_partition(&wheel(4).unwrap(), 4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn collapse_examples() {
        let t = wheelfree_collapse(&cycle(5).unwrap()).unwrap();
        assert!(t.is_empty());
        assert_eq!(reduced_homology(&t.end).betti(1), 1);

        let t = wheelfree_collapse(&bowtie()).unwrap();
        assert_eq!(t.end.dim(), 1);
        assert_eq!(reduced_homology(&t.end).betti_numbers(), &[0, 0]);
        t.validate().unwrap();

        let t = wheelfree_collapse(&petersen()).unwrap();
        assert_eq!(t.end.dim(), 1);
        assert_eq!(reduced_homology(&t.end).betti(1), 6);
    }

    #[test]
    fn trees_in_neighborhoods_are_peeled() {
        // Vertex 0 sees the path 1-2-3-4 and the isolated vertices 5, 6, 7.
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 2),
                (2, 3),
                (3, 4),
            ],
        )
        .unwrap();
        let t = wheelfree_collapse(&g).unwrap();
        assert!(t.end.dim() <= 1);
        assert_eq!(
            reduced_homology(&t.end),
            reduced_homology(&line_clique_complex(&g))
        );
        t.validate().unwrap();
    }

    #[test]
    fn preconditions() {
        assert!(wheelfree_collapse(&wheel(5).unwrap()).is_err());
        assert!(wheelfree_collapse(&complete(4).unwrap()).is_err());
        assert!(wheelfree_collapse(&Graph::empty(2)).is_err());
    }
}
