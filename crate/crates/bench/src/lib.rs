//! Input builders shared by the benchmarks.

use cliqueline::complex::line_clique_complex;
use cliqueline::graph::{circulant, complete, complete_multipartite, CirculantSpec};
use cliqueline::homology::{boundary_matrix, IntMatrix};
use cliqueline::{Complex, Graph};

/// Clique complex of the line graph of `K_n`.
pub fn complete_line_complex(n: usize) -> Complex {
    line_clique_complex(&complete(n).expect("n >= 1"))
}

pub fn multipartite(parts: &[usize]) -> Graph {
    complete_multipartite(parts).expect("nonempty parts")
}

/// `C_n(1, 2)`, wheel-free for `n >= 7`.
pub fn circulant_one_two(n: usize) -> Graph {
    circulant(&CirculantSpec::new(n, [1, 2]).expect("n >= 4"))
}

/// Dense form of the boundary map `∂_d` of `k`.
pub fn boundary(k: &Complex, d: usize) -> IntMatrix {
    boundary_matrix(k, d).to_int_matrix()
}
