use super::{Complex, Simplex};
use crate::graph::{line_graph, triangles, EdgeId, Graph, VertexId};

/// Maximal cliques by Bron–Kerbosch with pivoting on the smallest id in `P ∪ X`.
pub fn maximal_cliques(g: &Graph) -> Vec<Simplex> {
    let mut out = Vec::new();
    let p: Vec<VertexId> = (0..g.vertex_count()).collect();
    let mut r = Vec::new();
    expand(g, &mut r, p, Vec::new(), &mut out);
    out.sort_unstable();
    out
}

fn expand(
    g: &Graph,
    r: &mut Vec<VertexId>,
    p: Vec<VertexId>,
    mut x: Vec<VertexId>,
    out: &mut Vec<Simplex>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(Simplex::new(r.iter().copied()));
        }
        return;
    }
    let pivot = match (p.first(), x.first()) {
        (Some(&a), Some(&b)) => a.min(b),
        (Some(&a), None) => a,
        _ => unreachable!("p is nonempty"),
    };
    let candidates: Vec<VertexId> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    let mut p = p;
    for v in candidates {
        let nbrs = g.neighbors(v);
        let keep = |s: &[VertexId]| -> Vec<VertexId> {
            s.iter()
                .copied()
                .filter(|w| nbrs.binary_search(w).is_ok())
                .collect()
        };
        r.push(v);
        expand(g, r, keep(&p), keep(&x), out);
        r.pop();
        p.retain(|&w| w != v);
        let at = x.binary_search(&v).unwrap_or_else(|i| i);
        x.insert(at, v);
    }
}

/// The clique complex: facets are the maximal cliques.
pub fn clique_complex(g: &Graph) -> Complex {
    Complex::from_simplices_unchecked(g.vertex_count(), maximal_cliques(g))
}

/// The clique complex of the line graph, built from its facet structure.
///
/// A set of pairwise-incident edges either shares a common endpoint or forms
/// a triangle, so the facets are the maximal edge stars and the triangles of
/// `g`. Vertex `i` of the result is edge `g.edges()[i]`.
pub fn line_clique_complex(g: &Graph) -> Complex {
    let index = |u: VertexId, v: VertexId| -> usize {
        g.edge_index(EdgeId::new(u, v).expect("distinct endpoints"))
            .expect("edge of g")
    };
    let mut simplices: Vec<Simplex> = (0..g.vertex_count())
        .filter(|&a| g.degree(a) > 0)
        .map(|a| Simplex::new(g.neighbors(a).iter().map(|&v| index(a, v))))
        .collect();
    simplices.extend(
        triangles(g)
            .into_iter()
            .map(|[a, b, c]| Simplex::new([index(a, b), index(a, c), index(b, c)])),
    );
    let k = Complex::from_simplices_unchecked(g.edge_count(), simplices);
    debug_assert_eq!(k, clique_complex(&line_graph(g).graph));
    k
}
