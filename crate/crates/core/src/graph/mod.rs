//! Finite simple graphs, the standard constructors, and the line-graph functor.
//!
//! Vertices are dense `0..vertex_count` ids. Constructors normalize their
//! input: loops are dropped and repeated edges collapse to one. Vertices
//! added by [`cone`], [`suspension`], and the gluing operations receive the
//! largest ids; cone and suspension apexes carry labels.

mod circulant;
mod edgelist;
mod predicates;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use circulant::{circulant, classify_circulant, CirculantSpec, ComponentClass};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use predicates::{
    contains_wheel_subgraph, cyclomatic, is_bipartite, is_chordal, is_isomorphic, is_triangle_free,
    is_wheel_free, perfect_elimination_ordering, triangles, MAX_ISOMORPHISM_VERTICES,
};

pub type VertexId = usize;

/// An undirected edge in canonical `(min, max)` form.
///
/// The derived ordering is lexicographic, which fixes the vertex numbering of
/// line graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(VertexId, VertexId);

impl EdgeId {
    /// Canonicalizes the pair. Returns `None` for a loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<EdgeId> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(EdgeId(u, v)),
            std::cmp::Ordering::Greater => Some(EdgeId(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> VertexId {
        self.0
    }

    pub fn hi(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> [VertexId; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The shared endpoint when the two edges meet in exactly one vertex.
    pub fn common_endpoint(self, other: EdgeId) -> Option<VertexId> {
        if self == other {
            return None;
        }
        self.endpoints().into_iter().find(|&v| other.contains(v))
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: VertexId) -> Option<VertexId> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// A finite simple graph on vertices `0..vertex_count`.
///
/// Equality is structural: two graphs are equal when they have the same
/// vertex count and edge set. Labels do not participate.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    edges: Vec<EdgeId>,
    labels: BTreeMap<VertexId, String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count() && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from endpoint pairs, dropping loops and duplicates.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if let Some(e) = EdgeId::new(u, v) {
                canonical.push(e);
            }
        }
        Ok(Graph::from_canonical(vertex_count, canonical))
    }

    fn from_canonical(vertex_count: usize, mut edges: Vec<EdgeId>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for e in &edges {
            adjacency[e.lo()].push(e.hi());
            adjacency[e.hi()].push(e.lo());
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            edges,
            labels: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of `e` in [`Graph::edges`], which is also its vertex id in the line graph.
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<()> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }

    /// Subgraph induced on `vertices`, relabeled densely in increasing id order.
    ///
    /// Returns the subgraph and the map from new ids to original ids.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<(Graph, Vec<VertexId>)> {
        let mut keep: Vec<VertexId> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            self.check_vertex(old)?;
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.lo()] != usize::MAX && index[e.hi()] != usize::MAX)
            .filter_map(|e| EdgeId::new(index[e.lo()], index[e.hi()]))
            .collect();
        let mut sub = Graph::from_canonical(keep.len(), edges);
        for (new, &old) in keep.iter().enumerate() {
            if let Some(l) = self.labels.get(&old) {
                sub.labels.insert(new, l.clone());
            }
        }
        Ok((sub, keep))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A graph with no vertices counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// The cycle `C_n` on `0..n` with edges `(i, i+1)` and `(0, n-1)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path of length `r`: vertices `0..=r`, edges `(i, i+1)`.
pub fn path(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::InvalidArgument("path needs length >= 1".into()));
    }
    Graph::from_edges(r + 1, (0..r).map(|i| (i, i + 1)))
}

/// The star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "star needs at least one leaf".into(),
        ));
    }
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// Complete multipartite graph; part `i` occupies a consecutive id block.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument(
            "multipartite graph needs at least one part".into(),
        ));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidArgument("every part must be nonempty".into()));
    }
    let total: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(total);
    for (i, &m) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, m));
    }
    let edges = (0..total)
        .flat_map(|u| (u + 1..total).map(move |v| (u, v)))
        .filter(|&(u, v)| block[u] != block[v]);
    Graph::from_edges(total, edges)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("petersen edges are in range")
}

/// The prism `C_n x K_2`: two `n`-cycles joined by a perfect matching.
pub fn prism(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("prism needs n >= 3".into()));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    Graph::from_edges(2 * n, edges)
}

/// A graph together with its line graph and the vertex/edge correspondence.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the edge of the source graph represented by vertex `i`.
    pub edges: Vec<EdgeId>,
}

/// The line graph: one vertex per edge (lexicographic order), adjacent when
/// the edges share exactly one endpoint.
pub fn line_graph(g: &Graph) -> LineGraph {
    let mut adjacent = Vec::new();
    for v in 0..g.vertex_count() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| {
                g.edge_index(EdgeId::new(v, w).expect("simple graph"))
                    .expect("edge present")
            })
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                adjacent.push(EdgeId::new(a, b).expect("distinct edges"));
            }
        }
    }
    LineGraph {
        graph: Graph::from_canonical(g.edge_count(), adjacent),
        edges: g.edges().to_vec(),
    }
}

/// Cone with a new apex labeled `w` adjacent to every vertex.
pub fn cone(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut out = with_apexes(g, 1);
    out.labels.insert(n, "w".into());
    out
}

/// Suspension: two new non-adjacent apexes labeled `a` and `b`, each adjacent
/// to every original vertex.
pub fn suspension(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut out = with_apexes(g, 2);
    out.labels.insert(n, "a".into());
    out.labels.insert(n + 1, "b".into());
    out
}

fn with_apexes(g: &Graph, count: usize) -> Graph {
    let n = g.vertex_count();
    let mut edges = g.edges.clone();
    for apex in n..n + count {
        edges.extend((0..n).filter_map(|v| EdgeId::new(v, apex)));
    }
    let mut out = Graph::from_canonical(n + count, edges);
    out.labels = g.labels.clone();
    out
}

/// The wheel `W_n`: cone over `C_n`.
pub fn wheel(n: usize) -> Result<Graph> {
    Ok(cone(&cycle(n)?))
}

/// Disjoint union; the second graph's vertices are shifted past the first's.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let offset = g1.vertex_count();
    let mut edges = g1.edges.clone();
    edges.extend(
        g2.edges
            .iter()
            .map(|e| EdgeId(e.lo() + offset, e.hi() + offset)),
    );
    let mut out = Graph::from_canonical(offset + g2.vertex_count(), edges);
    out.labels = g1.labels.clone();
    out.labels
        .extend(g2.labels.iter().map(|(&v, l)| (v + offset, l.clone())));
    out
}

/// One-point union identifying `v1` of `g1` with `v2` of `g2`.
///
/// `g1` keeps its ids; the remaining vertices of `g2` follow in their original order.
pub fn wedge_at_vertex(g1: &Graph, g2: &Graph, v1: VertexId, v2: VertexId) -> Result<Graph> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let n1 = g1.vertex_count();
    let relabel = |w: VertexId| match w.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let mut edges = g1.edges.clone();
    edges.extend(
        g2.edges
            .iter()
            .filter_map(|e| EdgeId::new(relabel(e.lo()), relabel(e.hi()))),
    );
    let mut out = Graph::from_canonical(n1 + g2.vertex_count() - 1, edges);
    out.labels = g1.labels.clone();
    for (&w, l) in &g2.labels {
        if w != v2 {
            out.labels.insert(relabel(w), l.clone());
        }
    }
    Ok(out)
}

/// Glues `g2` onto `g1` by identifying `overlap` pairs `(vertex of g1, vertex of g2)`.
///
/// The overlap must be injective on both sides and induce the same edges in
/// both graphs. Identified vertices keep their `g1` id; unmatched vertices of
/// `g2` are appended in their original order.
pub fn glue(g1: &Graph, g2: &Graph, overlap: &[(VertexId, VertexId)]) -> Result<Graph> {
    let n1 = g1.vertex_count();
    let mut image: Vec<Option<VertexId>> = vec![None; g2.vertex_count()];
    let mut used = vec![false; n1];
    for &(a, b) in overlap {
        g1.check_vertex(a)?;
        g2.check_vertex(b)?;
        if used[a] || image[b].is_some() {
            return Err(Error::Precondition(format!(
                "gluing map is not injective at ({a}, {b})"
            )));
        }
        used[a] = true;
        image[b] = Some(a);
    }
    for (i, &(a1, b1)) in overlap.iter().enumerate() {
        for &(a2, b2) in &overlap[i + 1..] {
            if g1.has_edge(a1, a2) != g2.has_edge(b1, b2) {
                return Err(Error::Precondition(format!(
                    "overlap subgraphs differ at pairs ({a1},{b1}) and ({a2},{b2})"
                )));
            }
        }
    }
    let mut next = n1;
    let relabel: Vec<VertexId> = image
        .iter()
        .map(|slot| {
            slot.unwrap_or_else(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    let mut edges = g1.edges.clone();
    edges.extend(
        g2.edges
            .iter()
            .filter_map(|e| EdgeId::new(relabel[e.lo()], relabel[e.hi()])),
    );
    let mut out = Graph::from_canonical(next, edges);
    out.labels = g1.labels.clone();
    for (&w, l) in &g2.labels {
        if image[w].is_none() {
            out.labels.insert(relabel[w], l.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        let k1 = complete(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        let k4 = complete(4).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let k5 = complete(5).unwrap();
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert!(complete(0).is_err());
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let p1 = path(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (2, 1));
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn multipartite_edge_counts() {
        for (m, n) in [(1, 1), (2, 3), (3, 5)] {
            assert_eq!(complete_multipartite(&[m, n]).unwrap().edge_count(), m * n);
        }
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 12);
        assert_eq!(
            complete_multipartite(&[1, 1, 1, 1]).unwrap(),
            complete(4).unwrap()
        );
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn constructors_normalize_input() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (2, 2), (1, 2)]).unwrap();
        assert_eq!(
            g.edges(),
            &[EdgeId::new(0, 1).unwrap(), EdgeId::new(1, 2).unwrap()]
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                count: 2
            })
        ));
    }

    #[test]
    fn line_graph_small_cases() {
        let l = line_graph(&path(2).unwrap());
        assert_eq!((l.graph.vertex_count(), l.graph.edge_count()), (2, 1));
        let l = line_graph(&star(3).unwrap());
        assert_eq!(l.graph, complete(3).unwrap());
        let c5 = cycle(5).unwrap();
        let l = line_graph(&c5);
        assert!(is_isomorphic(&l.graph, &c5).unwrap());
        assert_eq!(l.edges, c5.edges());
    }

    #[test]
    fn apex_constructions() {
        let k4 = cone(&complete(3).unwrap());
        assert_eq!(k4, complete(4).unwrap());
        assert_eq!(k4.label(3), Some("w"));
        assert_eq!(wheel(3).unwrap(), complete(4).unwrap());
        let s = suspension(&cycle(4).unwrap());
        assert_eq!((s.vertex_count(), s.edge_count()), (6, 12));
        assert_eq!((s.label(4), s.label(5)), (Some("a"), Some("b")));
        assert!(!s.has_edge(4, 5));
    }

    #[test]
    fn gluing_operations() {
        let c3 = cycle(3).unwrap();
        let two = disjoint_union(&c3, &c3);
        assert_eq!(two.vertex_count(), 6);
        assert_eq!(two.components().len(), 2);

        let bowtie = wedge_at_vertex(&c3, &c3, 0, 0).unwrap();
        assert_eq!((bowtie.vertex_count(), bowtie.edge_count()), (5, 6));
        assert_eq!(bowtie.degree(0), 4);

        let k4 = complete(4).unwrap();
        let glued = glue(&k4, &k4, &[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!((glued.vertex_count(), glued.edge_count()), (5, 9));
    }

    #[test]
    fn glue_rejects_bad_maps() {
        let p = path(2).unwrap();
        let k3 = complete(3).unwrap();
        assert!(matches!(
            glue(&p, &k3, &[(0, 0), (0, 1)]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            glue(&p, &k3, &[(0, 0), (2, 1)]),
            Err(Error::Precondition(_))
        ));
        assert!(glue(&p, &k3, &[(0, 0), (1, 1)]).is_ok());
    }

    #[test]
    fn glue_specializes_to_union_and_wedge() {
        let a = petersen();
        let b = cycle(4).unwrap();
        assert_eq!(glue(&a, &b, &[]).unwrap(), disjoint_union(&a, &b));
        assert_eq!(
            glue(&a, &b, &[(3, 2)]).unwrap(),
            wedge_at_vertex(&a, &b, 3, 2).unwrap()
        );
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = petersen();
        let (sub, map) = g.induced_subgraph(&[9, 0, 5]).unwrap();
        assert_eq!(map, vec![0, 5, 9]);
        assert!(sub.has_edge(0, 1));
        assert!(!sub.has_edge(0, 2));
        assert!(g.induced_subgraph(&[10]).is_err());
    }
}
