use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`is_isomorphic`].
pub const MAX_ISOMORPHISM_VERTICES: usize = 8;

/// All 3-cliques as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for e in g.edges() {
        let (u, v) = (e.lo(), e.hi());
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|e| {
        let (a, b) = (g.neighbors(e.lo()), g.neighbors(e.hi()));
        !sorted_intersect(a, b)
    })
}

fn sorted_intersect(a: &[VertexId], b: &[VertexId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Maximum-cardinality search order (ties to the smallest id), reversed, when
/// it is a perfect elimination ordering; `None` when the graph is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unpicked vertex remains");
        picked[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !picked[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let mut position = vec![0; n];
    for (i, &v) in visit.iter().enumerate() {
        position[v] = i;
    }
    for &v in &visit {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return None;
            }
        }
    }
    Some(visit)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Every vertex neighborhood induces a forest.
///
/// A cycle inside `G[N(v)]` together with `v` is a wheel subgraph and a wheel
/// subgraph centered at `v` contains such a cycle, so this is equivalent to
/// having no (not necessarily induced) wheel subgraph.
pub fn is_wheel_free(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| neighborhood_is_forest(g, v))
}

pub(crate) fn neighborhood_is_forest(g: &Graph, v: VertexId) -> bool {
    let nbrs = g.neighbors(v);
    let mut parent: Vec<usize> = (0..nbrs.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &a) in nbrs.iter().enumerate() {
        for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri == rj {
                    return false;
                }
                parent[ri] = rj;
            }
        }
    }
    true
}

/// Exhaustive wheel search: looks for a center `v` and a simple cycle of
/// length at least 3 through its neighbors.
pub fn contains_wheel_subgraph(g: &Graph) -> bool {
    (0..g.vertex_count()).any(|center| {
        let nbrs = g.neighbors(center);
        nbrs.iter().any(|&start| {
            let mut on_path = vec![start];
            cycle_from(g, nbrs, start, &mut on_path)
        })
    })
}

// Simple cycles through `start` whose other vertices all exceed `start`.
fn cycle_from(
    g: &Graph,
    allowed: &[VertexId],
    start: VertexId,
    on_path: &mut Vec<VertexId>,
) -> bool {
    let last = *on_path.last().expect("path is nonempty");
    for &next in g.neighbors(last) {
        if allowed.binary_search(&next).is_err() {
            continue;
        }
        if next == start && on_path.len() >= 3 {
            return true;
        }
        if next > start && !on_path.contains(&next) {
            on_path.push(next);
            if cycle_from(g, allowed, start, on_path) {
                return true;
            }
            on_path.pop();
        }
    }
    false
}

/// Cyclomatic number `e - v + c`.
pub fn cyclomatic(g: &Graph) -> usize {
    g.edge_count() + g.components().len() - g.vertex_count()
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored");
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Brute-force isomorphism test by backtracking over vertex bijections.
///
/// Only intended for the small fixed targets used by circulant
/// classification; graphs above [`MAX_ISOMORPHISM_VERTICES`] are rejected.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > MAX_ISOMORPHISM_VERTICES || h.vertex_count() > MAX_ISOMORPHISM_VERTICES {
        return Err(Error::TooLarge(format!(
            "isomorphism search limited to {MAX_ISOMORPHISM_VERTICES} vertices"
        )));
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.vertex_count()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    Ok(extend_map(g, h, 0, &mut map, &mut taken))
}

fn extend_map(g: &Graph, h: &Graph, v: usize, map: &mut [usize], taken: &mut [bool]) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for image in 0..h.vertex_count() {
        if taken[image] || g.degree(v) != h.degree(image) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], image));
        if !consistent {
            continue;
        }
        map[v] = image;
        taken[image] = true;
        if extend_map(g, h, v + 1, map, taken) {
            return true;
        }
        taken[image] = false;
    }
    map[v] = usize::MAX;
    false
}
