//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`Complex`] keeps only its maximal simplices; faces of a given dimension
//! are enumerated on demand. Every constructor normalizes the facet list into
//! a sorted antichain, so two complexes are equal exactly when they have the
//! same faces and the same vertex universe.

mod clique;
mod nerve;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::VertexId;

pub use clique::{clique_complex, line_clique_complex, maximal_cliques};
pub use nerve::nerve_of_facets;

/// A simplex as a strictly increasing list of vertex ids. The empty simplex
/// has dimension −1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts and deduplicates the given ids.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Simplex {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn without(&self, v: VertexId) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn minus(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .copied()
                .filter(|&w| !other.contains(w))
                .collect(),
        )
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(
            self.0
                .iter()
                .copied()
                .filter(|&w| other.contains(w))
                .collect(),
        )
    }

    pub fn with(&self, v: VertexId) -> Simplex {
        Simplex::new(self.0.iter().copied().chain(std::iter::once(v)))
    }

    /// All faces with exactly `size` vertices, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Simplex> {
        let n = self.len();
        if size > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = size;
            while i > 0 && idx[i - 1] == i - 1 + n - size {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl From<Vec<VertexId>> for Simplex {
    fn from(v: Vec<VertexId>) -> Self {
        Simplex::new(v)
    }
}

impl<const N: usize> From<[VertexId; N]> for Simplex {
    fn from(v: [VertexId; N]) -> Self {
        Simplex::new(v)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(VertexId::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Face counts `f_0, f_1, …, f_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    vertex_count: usize,
    facets: Vec<Simplex>,
}

/// A simplicial complex on the vertex universe `0..vertex_count`.
///
/// The complex with no facets is the empty complex, whose only simplex is
/// the empty set. Vertices of the universe need not be used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ComplexRepr", try_from = "ComplexRepr")]
pub struct Complex {
    vertex_count: usize,
    facets: Vec<Simplex>,
}

impl From<Complex> for ComplexRepr {
    fn from(c: Complex) -> Self {
        ComplexRepr {
            vertex_count: c.vertex_count,
            facets: c.facets,
        }
    }
}

impl TryFrom<ComplexRepr> for Complex {
    type Error = Error;

    fn try_from(r: ComplexRepr) -> Result<Complex> {
        Complex::new(r.vertex_count, r.facets)
    }
}

impl Complex {
    /// Builds the complex generated by `simplices`. Dominated and empty
    /// simplices are dropped.
    pub fn new(
        vertex_count: usize,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Result<Complex> {
        let simplices: Vec<Simplex> = simplices.into_iter().collect();
        for s in &simplices {
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
        }
        Ok(Complex {
            vertex_count,
            facets: prune(simplices),
        })
    }

    /// Skips validation; callers guarantee ids are in range.
    pub(crate) fn from_simplices_unchecked(
        vertex_count: usize,
        simplices: Vec<Simplex>,
    ) -> Complex {
        let c = Complex {
            vertex_count,
            facets: prune(simplices),
        };
        debug_assert!(c
            .facets
            .iter()
            .flat_map(|f| f.vertices())
            .all(|&v| v < vertex_count));
        c
    }

    pub fn empty(vertex_count: usize) -> Complex {
        Complex {
            vertex_count,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `0..n`.
    pub fn full_simplex(n: usize) -> Complex {
        Complex::from_simplices_unchecked(n, vec![Simplex::new(0..n)])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, −1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    /// Vertices that lie in some facet, sorted.
    pub fn used_vertices(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self
            .facets
            .iter()
            .flat_map(|f| f.0.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    pub fn facets_containing<'a>(
        &'a self,
        s: &'a Simplex,
    ) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.facets.iter().filter(move |f| s.is_face_of(f))
    }

    /// All faces of dimension `d`, sorted and deduplicated.
    pub fn faces(&self, d: usize) -> Vec<Simplex> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            if f.len() > d {
                set.extend(f.subsets_of_size(d + 1));
            }
        }
        set.into_iter().collect()
    }

    pub fn f_vector(&self) -> FVector {
        let dim = self.dim();
        if dim < 0 {
            return FVector(Vec::new());
        }
        FVector((0..=dim as usize).map(|d| self.faces(d).len()).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Canonical compact JSON, `{"vertex_count":n,"facets":[[...],...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Complex> {
        Ok(serde_json::from_str(text)?)
    }

    /// Hex SHA-256 of [`Complex::to_json`].
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }
}

/// Sorted antichain of the maximal nonempty members of `simplices`.
pub(crate) fn prune(mut simplices: Vec<Simplex>) -> Vec<Simplex> {
    simplices.retain(|s| !s.is_empty());
    simplices.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    simplices.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(simplices.len());
    for s in simplices {
        if !kept.iter().any(|k| k.len() > s.len() && s.is_face_of(k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// The `d`-skeleton: all faces of dimension at most `d`.
pub fn skeleton(k: &Complex, d: usize) -> Complex {
    let mut simplices = Vec::new();
    for f in k.facets() {
        if f.len() <= d + 1 {
            simplices.push(f.clone());
        } else {
            simplices.extend(f.subsets_of_size(d + 1));
        }
    }
    Complex::from_simplices_unchecked(k.vertex_count(), simplices)
}

/// Faces of `k` whose vertices all lie in `vertices`. Keeps the vertex universe.
pub fn induced_subcomplex(k: &Complex, vertices: &[VertexId]) -> Result<Complex> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= k.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            count: k.vertex_count(),
        });
    }
    let keep = Simplex::new(vertices.iter().copied());
    let simplices = k.facets().iter().map(|f| f.intersection(&keep)).collect();
    Ok(Complex::from_simplices_unchecked(
        k.vertex_count(),
        simplices,
    ))
}

/// Cone with apex `vertex_count`.
pub fn cone_complex(k: &Complex) -> Complex {
    let apex = k.vertex_count();
    let simplices = if k.is_empty() {
        vec![Simplex::new([apex])]
    } else {
        k.facets().iter().map(|f| f.with(apex)).collect()
    };
    Complex::from_simplices_unchecked(apex + 1, simplices)
}

/// Union of the cones with apexes `vertex_count` and `vertex_count + 1`.
pub fn suspension_complex(k: &Complex) -> Complex {
    let (a, b) = (k.vertex_count(), k.vertex_count() + 1);
    let simplices = if k.is_empty() {
        vec![Simplex::new([a]), Simplex::new([b])]
    } else {
        k.facets()
            .iter()
            .flat_map(|f| [f.with(a), f.with(b)])
            .collect()
    };
    Complex::from_simplices_unchecked(k.vertex_count() + 2, simplices)
}

/// Disjoint union; the second complex's ids are shifted past the first's universe.
pub fn disjoint_union(k1: &Complex, k2: &Complex) -> Complex {
    let offset = k1.vertex_count();
    let mut simplices = k1.facets().to_vec();
    simplices.extend(
        k2.facets()
            .iter()
            .map(|f| Simplex(f.0.iter().map(|v| v + offset).collect())),
    );
    Complex::from_simplices_unchecked(offset + k2.vertex_count(), simplices)
}

/// One-point union identifying `v1` of `k1` with `v2` of `k2`.
pub fn wedge(k1: &Complex, k2: &Complex, v1: VertexId, v2: VertexId) -> Result<Complex> {
    for (v, k) in [(v1, k1), (v2, k2)] {
        if v >= k.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: k.vertex_count(),
            });
        }
    }
    let n1 = k1.vertex_count();
    let relabel = |w: VertexId| match w.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let mut simplices = k1.facets().to_vec();
    simplices.extend(
        k2.facets()
            .iter()
            .map(|f| Simplex::new(f.0.iter().map(|&w| relabel(w)))),
    );
    Ok(Complex::from_simplices_unchecked(
        n1 + k2.vertex_count() - 1,
        simplices,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_tetrahedron() -> Complex {
        skeleton(&Complex::full_simplex(4), 2)
    }

    #[test]
    fn simplex_basics() {
        let s = Simplex::new([3, 1, 2, 1]);
        assert_eq!(s.vertices(), &[1, 2, 3]);
        assert_eq!(s.dim(), 2);
        assert_eq!(Simplex::default().dim(), -1);
        assert!(Simplex::new([1, 3]).is_face_of(&s));
        assert!(!Simplex::new([0, 3]).is_face_of(&s));
        assert!(Simplex::default().is_face_of(&s));
        assert_eq!(s.subsets_of_size(2).len(), 3);
        assert_eq!(s.subsets_of_size(0), vec![Simplex::default()]);
        assert_eq!(s.subsets_of_size(3), vec![s.clone()]);
        assert!(s.subsets_of_size(4).is_empty());
        assert_eq!(Simplex::new(0..6).subsets_of_size(3).len(), 20);
    }

    #[test]
    fn constructor_prunes_to_antichain() {
        let k = Complex::new(
            4,
            vec![
                Simplex::new([0, 1]),
                Simplex::new([0, 1, 2]),
                Simplex::new([3]),
                Simplex::new([1, 2]),
                Simplex::default(),
            ],
        )
        .unwrap();
        assert_eq!(k.facets(), &[Simplex::new([0, 1, 2]), Simplex::new([3])]);
        assert!(Complex::new(2, vec![Simplex::new([0, 2])]).is_err());
    }

    #[test]
    fn skeleta() {
        let tet = Complex::full_simplex(4);
        let bd = boundary_tetrahedron();
        assert_eq!(bd.facets().len(), 4);
        assert!(bd.facets().iter().all(|f| f.dim() == 2));
        assert_eq!(skeleton(&tet, 3), tet);
        assert_eq!(skeleton(&tet, 10), tet);
        assert_eq!(skeleton(&Complex::full_simplex(5), 2).facets().len(), 10);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(boundary_tetrahedron().f_vector(), FVector(vec![4, 6, 4]));
        assert_eq!(boundary_tetrahedron().euler_characteristic(), 2);
        assert_eq!(Complex::full_simplex(1).euler_characteristic(), 1);
        assert_eq!(Complex::empty(3).euler_characteristic(), 0);
        assert_eq!(Complex::empty(3).dim(), -1);
    }

    #[test]
    fn induced_subcomplexes() {
        let bd = boundary_tetrahedron();
        assert_eq!(induced_subcomplex(&bd, &[0, 1, 2, 3]).unwrap(), bd);
        assert!(induced_subcomplex(&bd, &[]).unwrap().is_empty());
        let tri = induced_subcomplex(&bd, &[0, 2, 3]).unwrap();
        assert_eq!(tri.facets(), &[Simplex::new([0, 2, 3])]);
        assert!(induced_subcomplex(&bd, &[4]).is_err());
    }

    #[test]
    fn cones_and_suspensions() {
        let two_points = Complex::new(2, vec![Simplex::new([0]), Simplex::new([1])]).unwrap();
        let c = cone_complex(&two_points);
        assert_eq!(c.facets(), &[Simplex::new([0, 2]), Simplex::new([1, 2])]);
        let s = suspension_complex(&two_points);
        assert_eq!(s.facets().len(), 4);
        assert!(s.facets().iter().all(|f| f.dim() == 1));
        assert_eq!(s.euler_characteristic(), 0);
        assert_eq!(
            cone_complex(&Complex::empty(0)).facets(),
            &[Simplex::new([0])]
        );
        assert_eq!(suspension_complex(&Complex::empty(0)).facets().len(), 2);
    }

    #[test]
    fn unions_and_wedges() {
        let edge = Complex::full_simplex(2);
        let u = disjoint_union(&edge, &edge);
        assert_eq!(u.facets(), &[Simplex::new([0, 1]), Simplex::new([2, 3])]);
        let w = wedge(&edge, &edge, 1, 0).unwrap();
        assert_eq!(w.facets(), &[Simplex::new([0, 1]), Simplex::new([1, 2])]);
        assert!(wedge(&edge, &edge, 2, 0).is_err());
    }

    #[test]
    fn json_is_canonical() {
        let k = Complex::new(5, vec![Simplex::new([3, 4]), Simplex::new([2, 0, 1])]).unwrap();
        assert_eq!(
            k.to_json(),
            r#"{"vertex_count":5,"facets":[[0,1,2],[3,4]]}"#
        );
        assert_eq!(Complex::from_json(&k.to_json()).unwrap(), k);
        assert!(Complex::from_json(r#"{"vertex_count":2,"facets":[[0,7]]}"#).is_err());
        assert_eq!(k.digest().len(), 64);
    }
}
