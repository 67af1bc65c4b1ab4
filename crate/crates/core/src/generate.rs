//! Seeded random instances for sweeps and property tests.
//!
//! Every generator draws from a caller-supplied RNG; the suites use
//! `ChaCha8Rng` so that a recorded seed reproduces the instance exactly.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Complex, Simplex};
use crate::graph::{is_triangle_free, is_wheel_free, EdgeId, Graph, VertexId};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

/// A graph on `2..=max_vertices` vertices with a uniformly chosen edge set of
/// size at most `max_edges`.
pub fn graph_with_edge_limit<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> Graph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_edges.min(pairs.len()));
    pairs.truncate(m);
    Graph::from_edges(n, pairs).expect("endpoints are in range")
}

/// A uniformly random labelled tree on `n` vertices by random attachment.
fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(VertexId, VertexId)> {
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(rng);
    (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect()
}

/// Connected graph: a random spanning tree plus extra edges kept while
/// `accept` holds, up to `max_edges` edges in total.
fn grow_connected<R, F>(rng: &mut R, n: usize, max_edges: usize, accept: F) -> Graph
where
    R: Rng + ?Sized,
    F: Fn(&Graph) -> bool,
{
    let mut edges = random_tree(rng, n);
    let target = rng.gen_range(edges.len()..=max_edges.max(edges.len()));
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if edges.len() >= target {
            break;
        }
        if edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == (u, v)) {
            continue;
        }
        edges.push((u, v));
        let g = Graph::from_edges(n, edges.iter().copied()).expect("endpoints are in range");
        if !accept(&g) {
            edges.pop();
        }
    }
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

/// Connected triangle-free graph with at most `max_edges` edges (at least one).
pub fn connected_triangle_free<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=max_edges.max(1) + 1);
    grow_connected(rng, n, max_edges, is_triangle_free)
}

/// Connected chordal graph on `1..=max_vertices` vertices.
///
/// Vertices arrive one at a time and attach to a random clique around a
/// random earlier vertex, so the reverse arrival order is a perfect
/// elimination ordering.
pub fn connected_chordal<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> Graph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut candidates = adjacency[u].clone();
        candidates.shuffle(rng);
        for w in candidates {
            if rng.gen_bool(0.6) && clique.iter().all(|c| adjacency[w].contains(c)) {
                clique.push(w);
            }
        }
        for c in clique {
            adjacency[v].push(c);
            adjacency[c].push(v);
            edges.push((c, v));
        }
    }
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

/// Random `k`-tree on `n ≥ k + 1` vertices: start from `K_{k+1}` and attach
/// each new vertex to a random existing `k`-clique.
pub fn k_tree<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize) -> Graph {
    assert!(k >= 1 && n > k, "a k-tree needs at least k + 1 vertices");
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let base: Vec<VertexId> = (0..=k).collect();
    let mut cliques: Vec<Vec<VertexId>> = Simplex::new(base)
        .subsets_of_size(k)
        .into_iter()
        .map(|s| s.vertices().to_vec())
        .collect();
    for v in k + 1..n {
        let host = cliques.choose(rng).expect("at least one k-clique").clone();
        for &c in &host {
            edges.push((c, v));
        }
        for drop in 0..k {
            let mut next: Vec<VertexId> = host
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != drop)
                .map(|(_, &c)| c)
                .collect();
            next.push(v);
            cliques.push(next);
        }
    }
    Graph::from_edges(n, edges).expect("endpoints are in range")
}

/// Connected wheel-free graph with at most `max_edges` edges, grown by
/// rejecting any extra edge that creates a wheel.
pub fn connected_wheel_free<R: Rng + ?Sized>(rng: &mut R, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=max_edges.max(1) + 1);
    grow_connected(rng, n, max_edges, is_wheel_free)
}

/// Connected graph on `2..=max_vertices` vertices with maximum degree at most
/// three, other than `K_4`.
pub fn connected_subcubic<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_vertices.max(2));
        let mut degree = vec![0usize; n];
        let mut edges = Vec::new();
        for v in 1..n {
            let open: Vec<VertexId> = (0..v).filter(|&u| degree[u] < 3).collect();
            let &u = open
                .choose(rng)
                .expect("a tree on v vertices has a vertex of degree < 3");
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
        let mut pairs: Vec<(VertexId, VertexId)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        pairs.shuffle(rng);
        let extra = rng.gen_range(0..=n);
        for (u, v) in pairs.into_iter().take(extra * 2) {
            if degree[u] < 3 && degree[v] < 3 && !edges.contains(&(u, v)) {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(n, edges).expect("endpoints are in range");
        if !(n == 4 && g.edge_count() == 6) {
            return g;
        }
    }
}

/// Random complex on `vertex_count` vertices with `1..=max_facets` generators.
pub fn random_complex<R: Rng + ?Sized>(
    rng: &mut R,
    vertex_count: usize,
    max_facets: usize,
    max_size: usize,
) -> Complex {
    let count = rng.gen_range(1..=max_facets.max(1));
    let all: Vec<VertexId> = (0..vertex_count).collect();
    let simplices: Vec<Simplex> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(vertex_count).max(1));
            Simplex::new(all.choose_multiple(rng, size).copied())
        })
        .collect();
    Complex::new(vertex_count, simplices).expect("vertices are in range")
}

/// A facet `sigma` split into blocks, inside a complex whose other facets
/// avoid every cross pair of vertices from different blocks.
#[derive(Clone, Debug)]
pub struct BlockInstance {
    pub complex: Complex,
    pub sigma: Simplex,
    pub parts: Vec<Simplex>,
    pub spare: Simplex,
}

/// Engineered instance with `sigma = {0, …, size−1}` split into `parts`
/// nonempty blocks and a spare block that is empty with probability one half.
/// Extra facets meet `sigma` inside a single block plus the spare block, and
/// each uses one or two vertices outside `sigma` so it stays maximal.
pub fn block_instance<R: Rng + ?Sized>(rng: &mut R, size: usize, parts: usize) -> BlockInstance {
    assert!(parts >= 1 && parts <= size, "need 1 <= parts <= size");
    let mut ids: Vec<VertexId> = (0..size).collect();
    ids.shuffle(rng);
    let spare_len = if parts < size && rng.gen_bool(0.5) {
        rng.gen_range(1..=size - parts)
    } else {
        0
    };
    let spare = Simplex::new(ids[..spare_len].iter().copied());
    let rest = &ids[spare_len..];
    // Cut points give nonempty consecutive blocks of the shuffled ids.
    let mut cuts: Vec<usize> = (1..rest.len()).collect();
    cuts.shuffle(rng);
    cuts.truncate(parts - 1);
    cuts.sort_unstable();
    let mut blocks = Vec::with_capacity(parts);
    let mut from = 0;
    for &c in cuts.iter().chain(std::iter::once(&rest.len())) {
        blocks.push(Simplex::new(rest[from..c].iter().copied()));
        from = c;
    }
    let sigma = Simplex::new(0..size);
    let outside = size + 3;
    let mut facets = vec![sigma.clone()];
    for _ in 0..rng.gen_range(0..=3) {
        let block = blocks.choose(rng).expect("at least one block");
        let pool = block.union(&spare);
        let keep = rng.gen_range(1..=pool.len());
        let mut f: Vec<VertexId> = pool
            .vertices()
            .choose_multiple(rng, keep)
            .copied()
            .collect();
        let extra = rng.gen_range(1..=2);
        f.extend(
            (size..outside)
                .collect::<Vec<_>>()
                .choose_multiple(rng, extra)
                .copied(),
        );
        facets.push(Simplex::new(f));
    }
    BlockInstance {
        complex: Complex::new(outside, facets).expect("vertices are in range"),
        sigma,
        parts: blocks,
        spare,
    }
}

/// Edge list of `g` as pairs.
pub fn edge_pairs(g: &Graph) -> Vec<[VertexId; 2]> {
    g.edges().iter().map(|e: &EdgeId| e.endpoints()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_chordal, triangles};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = connected_triangle_free(&mut rng, 12);
            assert!(
                g.is_connected()
                    && is_triangle_free(&g)
                    && g.edge_count() <= 12
                    && g.edge_count() >= 1
            );
            let g = connected_chordal(&mut rng, 9);
            assert!(g.is_connected() && is_chordal(&g) && g.vertex_count() <= 9);
            let g = connected_wheel_free(&mut rng, 12);
            assert!(g.is_connected() && is_wheel_free(&g) && g.edge_count() <= 12);
            let g = graph_with_edge_limit(&mut rng, 7, 9);
            assert!(g.edge_count() <= 9);
        }
    }

    #[test]
    fn k_trees_have_the_right_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = k_tree(&mut rng, 3, 9);
        assert_eq!(g.edge_count(), 6 + 3 * 5);
        assert!(is_chordal(&g));
        assert_eq!(triangles(&g).len(), 4 + 3 * 5);
    }

    #[test]
    fn block_instances_keep_sigma_a_facet() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let size = rng.gen_range(2..=7);
            let parts = rng.gen_range(2..=size);
            let inst = block_instance(&mut rng, size, parts);
            assert!(inst.complex.facets().contains(&inst.sigma));
            let total: usize =
                inst.parts.iter().map(Simplex::len).sum::<usize>() + inst.spare.len();
            assert_eq!(total, size);
        }
    }

    #[test]
    fn seeds_reproduce_instances() {
        let a = connected_chordal(&mut ChaCha8Rng::seed_from_u64(11), 9);
        let b = connected_chordal(&mut ChaCha8Rng::seed_from_u64(11), 9);
        assert_eq!(a, b);
    }
}
