//! Reduced integer homology of simplicial complexes.
//!
//! `β̃_d = f_d − rank ∂_d − rank ∂_{d+1}` where `∂_0` is the augmentation, and
//! the torsion in degree `d` is the list of invariant factors of `∂_{d+1}`
//! that exceed one. All arithmetic is exact.

mod boundary;
mod snf;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{induced_subcomplex, Complex};
use crate::error::{Error, Result};
use crate::graph::VertexId;

pub use boundary::{boundary_matrix, BoundaryMatrix};
pub use snf::{smith_normal_form, IntMatrix, SnfResult};

/// Reduced Betti numbers and torsion coefficients per dimension.
///
/// Vectors run over `0..=dim`. The empty complex is the one case with
/// `betti_minus_one = 1`. Equality ignores trailing all-zero dimensions, so
/// profiles of complexes of different dimension compare by their homology.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct HomologyProfile {
    betti: Vec<usize>,
    torsion: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    betti_minus_one: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.significant_len(), other.significant_len());
        a == b
            && self.betti_minus_one == other.betti_minus_one
            && (0..a)
                .all(|i| self.betti(i) == other.betti(i) && self.torsion(i) == other.torsion(i))
    }
}

impl Eq for HomologyProfile {}

impl HomologyProfile {
    /// Profile from explicit vectors; `torsion` is padded to `betti`'s length.
    pub fn from_parts(betti: Vec<usize>, mut torsion: Vec<Vec<u64>>) -> HomologyProfile {
        let len = betti.len().max(torsion.len());
        let mut betti = betti;
        betti.resize(len, 0);
        torsion.resize(len, Vec::new());
        HomologyProfile {
            betti,
            torsion,
            betti_minus_one: 0,
        }
    }

    /// Homology of the empty complex.
    pub fn empty_complex() -> HomologyProfile {
        HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
            betti_minus_one: 1,
        }
    }

    /// Torsion-free homology of a wedge of `count` spheres of dimension `dim`.
    pub fn wedge_of_spheres(dim: usize, count: usize) -> HomologyProfile {
        let mut betti = vec![0; dim + 1];
        betti[dim] = count;
        HomologyProfile::from_parts(betti, Vec::new())
    }

    /// Homology of a point.
    pub fn contractible() -> HomologyProfile {
        HomologyProfile::from_parts(vec![0], Vec::new())
    }

    /// `β̃_i`, zero beyond the stored range.
    pub fn betti(&self, i: usize) -> usize {
        self.betti.get(i).copied().unwrap_or(0)
    }

    pub fn betti_numbers(&self) -> &[usize] {
        &self.betti
    }

    pub fn betti_minus_one(&self) -> usize {
        self.betti_minus_one
    }

    pub fn torsion(&self, i: usize) -> &[u64] {
        self.torsion.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn is_empty_complex(&self) -> bool {
        self.betti_minus_one > 0
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// Dimensions up to the last one carrying homology.
    fn significant_len(&self) -> usize {
        (0..self.betti.len())
            .rev()
            .find(|&i| self.betti[i] != 0 || !self.torsion[i].is_empty())
            .map_or(0, |i| i + 1)
    }

    /// `Σ_{i ≥ −1} (−1)^i β̃_i`, which equals `χ − 1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let positive: i64 = self
            .betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        positive - self.betti_minus_one as i64
    }

    /// Profile shifted up one degree, as for a suspension.
    pub fn suspended(&self) -> HomologyProfile {
        let mut betti = vec![self.betti_minus_one];
        betti.extend(&self.betti);
        let mut torsion = vec![Vec::new()];
        torsion.extend(self.torsion.iter().cloned());
        HomologyProfile {
            betti,
            torsion,
            betti_minus_one: 0,
        }
    }

    /// Degreewise sum of Betti numbers and concatenated torsion.
    pub fn sum(&self, other: &HomologyProfile) -> HomologyProfile {
        let len = self.betti.len().max(other.betti.len());
        let betti = (0..len).map(|i| self.betti(i) + other.betti(i)).collect();
        let torsion = (0..len)
            .map(|i| {
                let mut t: Vec<u64> = self
                    .torsion(i)
                    .iter()
                    .chain(other.torsion(i))
                    .copied()
                    .collect();
                t.sort_unstable();
                t
            })
            .collect();
        HomologyProfile {
            betti,
            torsion,
            betti_minus_one: 0,
        }
    }

    /// Connected, torsion-free, and concentrated in `dims`.
    pub fn is_wedge_of_spheres(&self, dims: &[usize]) -> bool {
        !self.is_empty_complex()
            && self.betti(0) == 0
            && self.is_torsion_free()
            && (0..self.betti.len()).all(|i| dims.contains(&i) || self.betti[i] == 0)
    }
}

pub fn reduced_homology(k: &Complex) -> HomologyProfile {
    if k.is_empty() {
        return HomologyProfile::empty_complex();
    }
    let top = k.dim() as usize;
    let faces: Vec<_> = (0..=top).map(|d| k.faces(d)).collect();
    // snfs[d] belongs to ∂_d, d = 0..=top.
    let snfs: Vec<SnfResult> = (0..=top)
        .into_par_iter()
        .map(|d| {
            let rows = if d == 0 {
                vec![crate::complex::Simplex::default()]
            } else {
                faces[d - 1].clone()
            };
            let m = boundary::boundary_between(rows, faces[d].clone());
            smith_normal_form(&m.to_int_matrix())
        })
        .collect();
    let rank = |d: usize| snfs.get(d).map_or(0, SnfResult::rank);
    let betti: Vec<usize> = (0..=top)
        .map(|d| faces[d].len() - rank(d) - rank(d + 1))
        .collect();
    let torsion: Vec<Vec<u64>> = (0..=top)
        .map(|d| {
            snfs.get(d + 1).map_or_else(Vec::new, |s| {
                s.torsion().iter().map(snf::factor_to_u64).collect()
            })
        })
        .collect();
    debug_assert_eq!(
        betti[0] + 1,
        component_count(k),
        "β̃_0 disagrees with union-find"
    );
    HomologyProfile {
        betti,
        torsion,
        betti_minus_one: 0,
    }
}

/// Connected components among the used vertices, by union-find on facets.
pub fn component_count(k: &Complex) -> usize {
    let mut parent: Vec<usize> = (0..k.vertex_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for f in k.facets() {
        let v = f.vertices();
        for &w in &v[1..] {
            let (a, b) = (find(&mut parent, v[0]), find(&mut parent, w));
            parent[a] = b;
        }
    }
    let used = k.used_vertices();
    let mut roots: Vec<usize> = used.iter().map(|&v| find(&mut parent, v)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Whether `k` has the homology of a wedge of spheres with dimensions in `dims`.
pub fn wedge_profile(k: &Complex, dims: &[usize]) -> bool {
    reduced_homology(k).is_wedge_of_spheres(dims)
}

/// Largest number of used vertices for which all induced subcomplexes are enumerated.
pub const LERAY_EXHAUSTIVE_LIMIT: usize = 14;

/// Random sampling of vertex subsets for complexes too large to enumerate.
#[derive(Clone, Copy, Debug)]
pub struct LerayBudget {
    pub samples: usize,
    pub seed: u64,
}

/// Outcome of a Leray check in degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LerayVerdict {
    /// Every induced subcomplex has vanishing Betti numbers and torsion in
    /// degrees `≥ d`. When `all_fields` holds, torsion also vanishes in
    /// degree `d − 1`, so the vanishing holds over every coefficient field.
    Holds {
        subsets_checked: usize,
        all_fields: bool,
    },
    /// Some induced subcomplex has homology in degree `≥ d`. The witness is
    /// the smallest such vertex set (by size, then lexicographically).
    Refuted {
        witness: Vec<VertexId>,
        profile: HomologyProfile,
    },
    /// Sampling budget spent without finding a counterexample.
    BudgetExhausted {
        subsets_checked: usize,
        all_fields: bool,
    },
}

impl LerayVerdict {
    /// True only for an exhaustive confirmation.
    pub fn holds(&self) -> bool {
        matches!(self, LerayVerdict::Holds { .. })
    }
}

enum SubsetStatus {
    Clean,
    TorsionBelow,
    Violates(HomologyProfile),
}

fn subset_status(k: &Complex, subset: &[VertexId], d: usize) -> SubsetStatus {
    let sub = induced_subcomplex(k, subset).expect("subset of used vertices");
    let h = reduced_homology(&sub);
    let top = h.betti_numbers().len();
    if (d..top).any(|i| h.betti(i) > 0 || !h.torsion(i).is_empty()) {
        SubsetStatus::Violates(h)
    } else if d >= 1 && !h.torsion(d - 1).is_empty() {
        SubsetStatus::TorsionBelow
    } else {
        SubsetStatus::Clean
    }
}

/// Checks that every induced subcomplex has trivial homology in degrees `≥ d`.
///
/// Complexes with at most [`LERAY_EXHAUSTIVE_LIMIT`] used vertices are
/// checked exhaustively; larger ones need a sampling budget.
pub fn leray_bound_check(
    k: &Complex,
    d: usize,
    budget: Option<LerayBudget>,
) -> Result<LerayVerdict> {
    let used = k.used_vertices();
    let subsets: Vec<Vec<VertexId>> = if used.len() <= LERAY_EXHAUSTIVE_LIMIT {
        let mut all: Vec<Vec<VertexId>> = (0u32..1 << used.len())
            .map(|mask| {
                (0..used.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| used[i])
                    .collect()
            })
            .collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    } else {
        let Some(budget) = budget else {
            return Err(Error::TooLarge(format!(
                "{} vertices exceed the exhaustive Leray limit {LERAY_EXHAUSTIVE_LIMIT} and no budget was given",
                used.len()
            )));
        };
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let mut sampled: Vec<Vec<VertexId>> = (0..budget.samples)
            .map(|_| {
                let size = rand::Rng::gen_range(&mut rng, 0..=used.len());
                let mut pick: Vec<VertexId> =
                    used.choose_multiple(&mut rng, size).copied().collect();
                pick.sort_unstable();
                pick
            })
            .collect();
        sampled.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        sampled.dedup();
        sampled
    };
    let statuses: Vec<SubsetStatus> = subsets.par_iter().map(|s| subset_status(k, s, d)).collect();
    let mut all_fields = true;
    for (subset, status) in subsets.iter().zip(statuses) {
        match status {
            SubsetStatus::Violates(profile) => {
                return Ok(LerayVerdict::Refuted {
                    witness: subset.clone(),
                    profile,
                })
            }
            SubsetStatus::TorsionBelow => all_fields = false,
            SubsetStatus::Clean => {}
        }
    }
    let subsets_checked = subsets.len();
    Ok(if used.len() <= LERAY_EXHAUSTIVE_LIMIT {
        LerayVerdict::Holds {
            subsets_checked,
            all_fields,
        }
    } else {
        LerayVerdict::BudgetExhausted {
            subsets_checked,
            all_fields,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        cone_complex, line_clique_complex, skeleton, suspension_complex, Simplex,
    };
    use crate::graph::{complete, complete_multipartite, cycle};

    fn boundary_tetrahedron() -> Complex {
        skeleton(&Complex::full_simplex(4), 2)
    }

    #[test]
    fn basic_spaces() {
        assert_eq!(
            reduced_homology(&Complex::full_simplex(1)),
            HomologyProfile::contractible()
        );
        assert_eq!(
            reduced_homology(&Complex::full_simplex(5)),
            HomologyProfile::contractible()
        );
        assert_eq!(
            reduced_homology(&boundary_tetrahedron()),
            HomologyProfile::wedge_of_spheres(2, 1)
        );
        let two_points = Complex::new(2, vec![Simplex::new([0]), Simplex::new([1])]).unwrap();
        assert_eq!(reduced_homology(&two_points).betti_numbers(), &[1]);
        let empty = reduced_homology(&Complex::empty(0));
        assert!(empty.is_empty_complex());
        assert_eq!(empty.reduced_euler_characteristic(), -1);
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // 6-vertex triangulation of RP^2.
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let k = Complex::new(6, facets.iter().map(|f| Simplex::new(*f))).unwrap();
        let h = reduced_homology(&k);
        assert_eq!(h.betti_numbers(), &[0, 0, 0]);
        assert_eq!(h.torsion(1), &[2]);
        assert!(!h.is_torsion_free());
    }

    #[test]
    fn line_clique_complex_examples() {
        let h = reduced_homology(&line_clique_complex(&complete(4).unwrap()));
        assert_eq!(h, HomologyProfile::wedge_of_spheres(2, 1));
        assert!(h.is_torsion_free());
        let h = reduced_homology(&line_clique_complex(
            &complete_multipartite(&[3, 3]).unwrap(),
        ));
        assert_eq!(h, HomologyProfile::wedge_of_spheres(1, 4));
        let h = reduced_homology(&line_clique_complex(
            &complete_multipartite(&[2, 2, 2]).unwrap(),
        ));
        assert_eq!(h, HomologyProfile::wedge_of_spheres(2, 1));
    }

    #[test]
    fn profile_equality_ignores_trailing_zeros() {
        let a = HomologyProfile::from_parts(vec![0, 0, 1, 0, 0], Vec::new());
        assert_eq!(a, HomologyProfile::wedge_of_spheres(2, 1));
        assert_ne!(a, HomologyProfile::wedge_of_spheres(1, 1));
        assert_ne!(
            HomologyProfile::empty_complex(),
            HomologyProfile::contractible()
        );
    }

    #[test]
    fn wedge_profiles() {
        assert!(wedge_profile(
            &line_clique_complex(&cycle(6).unwrap()),
            &[1]
        ));
        assert!(!wedge_profile(&boundary_tetrahedron(), &[1]));
        assert!(wedge_profile(&boundary_tetrahedron(), &[2]));
        assert!(!wedge_profile(&Complex::empty(0), &[0, 1, 2]));
    }

    #[test]
    fn suspension_and_cone() {
        let bd = boundary_tetrahedron();
        let h = reduced_homology(&bd);
        assert_eq!(reduced_homology(&suspension_complex(&bd)), h.suspended());
        assert_eq!(
            reduced_homology(&cone_complex(&bd)),
            HomologyProfile::contractible()
        );
        assert_eq!(
            reduced_homology(&suspension_complex(&Complex::empty(0))),
            HomologyProfile::empty_complex().suspended()
        );
    }

    #[test]
    fn leray_examples() {
        let k5 = line_clique_complex(&complete(5).unwrap());
        assert!(leray_bound_check(&k5, 3, None).unwrap().holds());

        match leray_bound_check(&boundary_tetrahedron(), 2, None).unwrap() {
            LerayVerdict::Refuted { witness, profile } => {
                assert_eq!(witness, vec![0, 1, 2, 3]);
                assert_eq!(profile.betti(2), 1);
            }
            other => panic!("expected refutation, got {other:?}"),
        }

        assert!(leray_bound_check(&Complex::full_simplex(1), 1, None)
            .unwrap()
            .holds());
    }

    #[test]
    fn leray_budget_paths() {
        let big = skeleton(&Complex::full_simplex(16), 1);
        assert!(matches!(
            leray_bound_check(&big, 1, None),
            Err(Error::TooLarge(_))
        ));
        let v = leray_bound_check(
            &big,
            2,
            Some(LerayBudget {
                samples: 20,
                seed: 3,
            }),
        )
        .unwrap();
        assert!(matches!(v, LerayVerdict::BudgetExhausted { .. }));
        assert!(!v.holds());
    }
}
