use super::{Complex, Simplex};

/// Nerve of the facet cover: one vertex per facet (in facet order), and a set
/// of facets spans a simplex when the facets share a vertex.
///
/// A family of facets has nonempty intersection exactly when it lies inside
/// the set of facets through some common vertex, so those sets generate the nerve.
pub fn nerve_of_facets(k: &Complex) -> Complex {
    let mut through = vec![Vec::new(); k.vertex_count()];
    for (i, f) in k.facets().iter().enumerate() {
        for &v in f.vertices() {
            through[v].push(i);
        }
    }
    let simplices = through.into_iter().map(Simplex::new).collect();
    Complex::from_simplices_unchecked(k.facets().len(), simplices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::skeleton;

    // Direct definition: enumerate every subset of facet indices.
    fn nerve_by_intersections(k: &Complex) -> Complex {
        let m = k.facets().len();
        let mut simplices = Vec::new();
        for mask in 1u32..(1 << m) {
            let members: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let common = members
                .iter()
                .skip(1)
                .fold(k.facets()[members[0]].clone(), |acc, &i| {
                    acc.intersection(&k.facets()[i])
                });
            if !common.is_empty() {
                simplices.push(Simplex::new(members));
            }
        }
        Complex::new(m, simplices).unwrap()
    }

    #[test]
    fn single_facet_nerve_is_a_point() {
        let n = nerve_of_facets(&Complex::full_simplex(3));
        assert_eq!(n.facets(), &[Simplex::new([0])]);
    }

    #[test]
    fn boundary_of_tetrahedron_is_self_nerve() {
        let bd = skeleton(&Complex::full_simplex(4), 2);
        let n = nerve_of_facets(&bd);
        assert_eq!(n, nerve_by_intersections(&bd));
        assert_eq!(n, bd);
    }

    #[test]
    fn disjoint_facets_give_isolated_points() {
        let k = Complex::new(4, vec![Simplex::new([0, 1]), Simplex::new([2, 3])]).unwrap();
        let n = nerve_of_facets(&k);
        assert_eq!(n.facets(), &[Simplex::new([0]), Simplex::new([1])]);
        assert_eq!(n, nerve_by_intersections(&k));
    }

    #[test]
    fn empty_complex_has_empty_nerve() {
        assert!(nerve_of_facets(&Complex::empty(3)).is_empty());
    }
}
