//! Elementary simplicial collapses and the schedules built from them.
//!
//! Every step is revalidated against the current complex when applied, so a
//! [`CollapseTrace`] can be replayed from its start complex and checked
//! independently of the code that produced it.

mod blocks;
mod wheelfree;

use serde::{Deserialize, Serialize};

use crate::complex::{prune, Complex, Simplex};
use crate::error::{Error, Result};

pub use blocks::{multi_block_collapse, two_block_collapse};
pub use wheelfree::{star_partition, wheelfree_collapse, StarPartition};

/// A free face together with the unique facet containing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CollapsiblePair {
    pub free: Simplex,
    pub facet: Simplex,
}

impl CollapsiblePair {
    pub fn new(free: impl Into<Simplex>, facet: impl Into<Simplex>) -> CollapsiblePair {
        CollapsiblePair {
            free: free.into(),
            facet: facet.into(),
        }
    }
}

/// Checks that `p` is an elementary collapse of `k` right now.
pub fn validate_pair(k: &Complex, p: &CollapsiblePair) -> Result<()> {
    if p.free.is_empty() {
        return Err(Error::InvalidCollapse("free face is empty".into()));
    }
    if p.free.len() >= p.facet.len() || !p.free.is_face_of(&p.facet) {
        return Err(Error::InvalidCollapse(format!(
            "{} is not a proper face of {}",
            p.free, p.facet
        )));
    }
    if k.facets().binary_search(&p.facet).is_err() {
        return Err(Error::InvalidCollapse(format!(
            "{} is not a facet",
            p.facet
        )));
    }
    if let Some(other) = k.facets_containing(&p.free).find(|f| **f != p.facet) {
        return Err(Error::InvalidCollapse(format!(
            "{} is not free: it also lies in {other}",
            p.free
        )));
    }
    Ok(())
}

/// Removes every face `γ` with `free ⊆ γ ⊆ facet`.
///
/// The faces of the facet that survive are exactly the faces of
/// `facet ∖ {v}` for `v ∈ free`.
pub fn collapse_pair(k: &Complex, p: &CollapsiblePair) -> Result<Complex> {
    validate_pair(k, p)?;
    let mut simplices: Vec<Simplex> = k
        .facets()
        .iter()
        .filter(|f| **f != p.facet)
        .cloned()
        .collect();
    simplices.extend(p.free.vertices().iter().map(|&v| p.facet.without(v)));
    let out = Complex::from_simplices_unchecked(k.vertex_count(), prune(simplices));
    #[cfg(debug_assertions)]
    if k.vertex_count() <= DEBUG_HOMOLOGY_LIMIT {
        debug_assert_eq!(
            crate::homology::reduced_homology(k),
            crate::homology::reduced_homology(&out),
            "collapse {p:?} changed homology"
        );
    }
    Ok(out)
}

/// Complexes above this many vertices skip the per-step homology assertion.
#[cfg(debug_assertions)]
const DEBUG_HOMOLOGY_LIMIT: usize = 24;

/// All collapsible pairs of `k`, sorted by `(free, facet)`.
pub fn free_faces(k: &Complex) -> Vec<CollapsiblePair> {
    let mut out = Vec::new();
    for facet in k.facets() {
        for size in 1..facet.len() {
            for free in facet.subsets_of_size(size) {
                if k.facets_containing(&free).nth(1).is_none() {
                    out.push(CollapsiblePair {
                        free,
                        facet: facet.clone(),
                    });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// A sequence of elementary collapses from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseTrace {
    pub start: Complex,
    pub end: Complex,
    pub steps: Vec<CollapsiblePair>,
}

#[derive(Serialize, Deserialize)]
struct TraceRepr {
    start_digest: String,
    end_digest: String,
    steps: Vec<CollapsiblePair>,
}

impl CollapseTrace {
    /// An empty trace sitting at `k`.
    pub fn identity(k: Complex) -> CollapseTrace {
        CollapseTrace {
            end: k.clone(),
            start: k,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies `p` to the current end complex.
    pub fn push(&mut self, p: CollapsiblePair) -> Result<()> {
        self.end = collapse_pair(&self.end, &p)?;
        self.steps.push(p);
        Ok(())
    }

    /// Appends a trace whose start is this trace's end.
    pub fn extend(&mut self, next: CollapseTrace) -> Result<()> {
        if next.start != self.end {
            return Err(Error::Inconsistent(
                "trace does not continue from this end".into(),
            ));
        }
        self.steps.extend(next.steps);
        self.end = next.end;
        Ok(())
    }

    /// Replays the steps from `start`, validating each one.
    pub fn replay(&self) -> Result<Complex> {
        let mut k = self.start.clone();
        for (i, p) in self.steps.iter().enumerate() {
            k = collapse_pair(&k, p)
                .map_err(|e| Error::InvalidCollapse(format!("step {i}: {e}")))?;
        }
        Ok(k)
    }

    /// Replays and checks the recorded end complex.
    pub fn validate(&self) -> Result<()> {
        if self.replay()? != self.end {
            return Err(Error::Inconsistent(
                "replay does not reach the recorded end".into(),
            ));
        }
        Ok(())
    }

    /// `{"start_digest":…,"end_digest":…,"steps":[{"free":[…],"facet":[…]},…]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&TraceRepr {
            start_digest: self.start.digest(),
            end_digest: self.end.digest(),
            steps: self.steps.clone(),
        })
        .expect("trace serialization is infallible")
    }

    /// Reads serialized steps and replays them from `start`; digests must match.
    pub fn from_json(text: &str, start: &Complex) -> Result<CollapseTrace> {
        let repr: TraceRepr = serde_json::from_str(text)?;
        if repr.start_digest != start.digest() {
            return Err(Error::Inconsistent("start complex digest mismatch".into()));
        }
        let mut trace = CollapseTrace::identity(start.clone());
        for p in repr.steps {
            trace.push(p)?;
        }
        if trace.end.digest() != repr.end_digest {
            return Err(Error::Inconsistent("end complex digest mismatch".into()));
        }
        Ok(trace)
    }
}

/// Lexicographically smallest free face of `facet`, by depth-first search in
/// lexicographic order. Freeness is inherited by larger proper faces, so a
/// prefix is abandoned when its largest proper extensions are all covered by
/// other facets.
fn smallest_free_face(k: &Complex, facet: &Simplex) -> Option<Simplex> {
    let others: Vec<Simplex> = k
        .facets()
        .iter()
        .filter(|f| *f != facet)
        .map(|f| f.intersection(facet))
        .filter(|s| !s.is_empty())
        .collect();
    let free = |s: &Simplex| !others.iter().any(|o| s.is_face_of(o));
    let v = facet.vertices();

    fn search(
        v: &[usize],
        from: usize,
        prefix: &Simplex,
        free: &dyn Fn(&Simplex) -> bool,
    ) -> Option<Simplex> {
        for i in from..v.len() {
            let node = prefix.with(v[i]);
            if node.len() == v.len() {
                continue;
            }
            if free(&node) {
                return Some(node);
            }
            let widest = node.union(&Simplex::new(v[i + 1..].iter().copied()));
            let promising = if widest.len() < v.len() {
                free(&widest)
            } else {
                v[i + 1..].iter().any(|&w| free(&widest.without(w)))
            };
            if promising {
                if let Some(s) = search(v, i + 1, &node, free) {
                    return Some(s);
                }
            }
        }
        None
    }
    search(v, 0, &Simplex::default(), &free)
}

/// Greedy collapsing: always applies the lexicographically smallest valid
/// pair among those whose facet has the largest dimension, and stops when no
/// pair exists or every facet has dimension at most `target_dim`.
pub fn greedy_collapse(k: &Complex, target_dim: Option<usize>) -> CollapseTrace {
    let mut trace = CollapseTrace::identity(k.clone());
    loop {
        if let Some(t) = target_dim {
            if trace.end.dim() <= t as isize {
                break;
            }
        }
        let mut facets: Vec<&Simplex> = trace.end.facets().iter().collect();
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut best: Option<CollapsiblePair> = None;
        let mut best_len = 0;
        for facet in facets {
            if best.is_some() && facet.len() < best_len {
                break;
            }
            if let Some(free) = smallest_free_face(&trace.end, facet) {
                let p = CollapsiblePair {
                    free,
                    facet: facet.clone(),
                };
                if best.as_ref().is_none_or(|b| p < *b) {
                    best_len = facet.len();
                    best = Some(p);
                }
            }
        }
        let Some(p) = best else { break };
        trace
            .push(p)
            .expect("greedy pairs are free by construction");
    }
    trace
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cone_complex, skeleton};
    use crate::homology::{reduced_homology, HomologyProfile};

    fn pairs(k: &Complex) -> Vec<(Vec<usize>, Vec<usize>)> {
        free_faces(k)
            .into_iter()
            .map(|p| (p.free.vertices().to_vec(), p.facet.vertices().to_vec()))
            .collect()
    }

    #[test]
    fn free_face_examples() {
        let edge = Complex::full_simplex(2);
        assert_eq!(
            pairs(&edge),
            vec![(vec![0], vec![0, 1]), (vec![1], vec![0, 1])]
        );
        assert!(free_faces(&skeleton(&Complex::full_simplex(4), 2)).is_empty());
        let tri = Complex::full_simplex(3);
        assert!(pairs(&tri).contains(&(vec![0, 1], vec![0, 1, 2])));
        assert_eq!(free_faces(&tri).len(), 6);
    }

    #[test]
    fn elementary_collapses() {
        let tri = Complex::full_simplex(3);
        let out = collapse_pair(&tri, &CollapsiblePair::new([0, 1], [0, 1, 2])).unwrap();
        assert_eq!(out.facets(), &[Simplex::new([0, 2]), Simplex::new([1, 2])]);
        let out = collapse_pair(
            &Complex::full_simplex(2),
            &CollapsiblePair::new([0], [0, 1]),
        )
        .unwrap();
        assert_eq!(out.facets(), &[Simplex::new([1])]);
        // A vertex free face of the triangle removes four faces.
        let out = collapse_pair(&tri, &CollapsiblePair::new([0], [0, 1, 2])).unwrap();
        assert_eq!(out.facets(), &[Simplex::new([1, 2])]);
    }

    #[test]
    fn stale_and_non_free_pairs_are_rejected() {
        let bd = skeleton(&Complex::full_simplex(4), 2);
        let p = CollapsiblePair::new([0, 1], [0, 1, 2]);
        assert!(matches!(
            collapse_pair(&bd, &p),
            Err(Error::InvalidCollapse(_))
        ));
        let tri = Complex::full_simplex(3);
        let once = collapse_pair(&tri, &p).unwrap();
        assert!(collapse_pair(&once, &p).is_err());
        assert!(collapse_pair(&tri, &CollapsiblePair::new([0, 1, 2], [0, 1, 2])).is_err());
        assert!(collapse_pair(&tri, &CollapsiblePair::new(Vec::new(), [0, 1, 2])).is_err());
    }

    #[test]
    fn greedy_examples() {
        let t = greedy_collapse(&Complex::full_simplex(4), None);
        assert_eq!(t.end.facets().len(), 1);
        assert_eq!(t.end.dim(), 0);
        t.validate().unwrap();

        let bd = skeleton(&Complex::full_simplex(4), 2);
        assert!(greedy_collapse(&bd, None).is_empty());

        let cone = cone_complex(&bd);
        let t = greedy_collapse(&cone, None);
        assert_eq!(t.end.dim(), 0);
        assert_eq!(reduced_homology(&t.end), HomologyProfile::contractible());

        let t = greedy_collapse(&Complex::full_simplex(5), Some(2));
        assert!(t.end.dim() <= 2);
    }

    #[test]
    fn smallest_free_face_matches_enumeration() {
        let k = Complex::new(
            6,
            vec![
                Simplex::new([0, 1, 2, 3]),
                Simplex::new([0, 1, 4]),
                Simplex::new([2, 3, 5]),
            ],
        )
        .unwrap();
        for facet in k.facets() {
            let expected = free_faces(&k)
                .into_iter()
                .find(|p| p.facet == *facet)
                .map(|p| p.free);
            assert_eq!(smallest_free_face(&k, facet), expected, "facet {facet}");
        }
    }

    #[test]
    fn trace_json_round_trip() {
        let t = greedy_collapse(&Complex::full_simplex(3), None);
        let text = t.to_json();
        assert!(text.starts_with("{\"start_digest\":"));
        let back = CollapseTrace::from_json(&text, &t.start).unwrap();
        assert_eq!(back, t);
        assert!(CollapseTrace::from_json(&text, &Complex::full_simplex(2)).is_err());
    }
}
