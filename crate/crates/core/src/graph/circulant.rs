use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::predicates::{is_isomorphic, is_wheel_free};
use super::{complete, cycle, suspension, Graph};
use crate::error::{Error, Result};

/// Generating data of a circulant graph on `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    generators: BTreeSet<usize>,
}

impl CirculantSpec {
    /// `n >= 3`; generators nonempty, each in `1..=n/2`.
    pub fn new(n: usize, generators: impl IntoIterator<Item = usize>) -> Result<CirculantSpec> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("circulant order {n} < 3")));
        }
        let generators: BTreeSet<usize> = generators.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::InvalidArgument("empty generating set".into()));
        }
        if let Some(&bad) = generators.iter().find(|&&s| s == 0 || s > n / 2) {
            return Err(Error::InvalidArgument(format!(
                "generator {bad} outside 1..={}",
                n / 2
            )));
        }
        Ok(CirculantSpec { n, generators })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &BTreeSet<usize> {
        &self.generators
    }

    /// The connection set `S ∪ (−S)` as residues mod `n`.
    pub fn connection_set(&self) -> BTreeSet<usize> {
        self.generators
            .iter()
            .flat_map(|&s| [s, self.n - s])
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.connection_set().len()
    }

    /// Every spec with `|S ∪ (−S)| = 4` of the given order.
    pub fn four_regular(n: usize) -> Vec<CirculantSpec> {
        let half = n / 2;
        let mut out = Vec::new();
        for s in 1..=half {
            for t in s + 1..=half {
                if let Ok(spec) = CirculantSpec::new(n, [s, t]) {
                    if spec.degree() == 4 {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(usize::to_string).collect();
        write!(f, "C_{}({})", self.n, gens.join(","))
    }
}

/// Isomorphism class of a component of a 4-regular circulant graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentClass {
    WheelFree,
    K5,
    SigmaC4,
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentClass::WheelFree => "wheel-free",
            ComponentClass::K5 => "K5",
            ComponentClass::SigmaC4 => "suspension-C4",
        })
    }
}

/// `x ~ y` iff `x − y mod n` lies in `S ∪ (−S)`.
pub fn circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let edges = (0..n).flat_map(|x| spec.generators.iter().map(move |&s| (x, (x + s) % n)));
    Graph::from_edges(n, edges).expect("residues are in range")
}

/// Classifies the component of vertex 0 of a 4-regular circulant graph.
///
/// Rotation is an automorphism, so every component is isomorphic to this one.
/// The three candidate tests are all evaluated and must agree on exactly one class.
pub fn classify_circulant(spec: &CirculantSpec) -> Result<ComponentClass> {
    if spec.degree() != 4 {
        return Err(Error::Precondition(format!(
            "{spec} is {}-regular, not 4-regular",
            spec.degree()
        )));
    }
    let g = circulant(spec);
    let component = g
        .components()
        .into_iter()
        .find(|c| c.contains(&0))
        .expect("vertex 0 has a component");
    let (sub, _) = g.induced_subgraph(&component)?;
    classify_component(&sub)
}

pub(crate) fn classify_component(sub: &Graph) -> Result<ComponentClass> {
    let small = sub.vertex_count() <= super::MAX_ISOMORPHISM_VERTICES;
    let k5 = small && is_isomorphic(sub, &complete(5)?)?;
    let sigma_c4 = small && is_isomorphic(sub, &suspension(&cycle(4)?))?;
    let wheel_free = is_wheel_free(sub);
    match (k5, sigma_c4, wheel_free) {
        (true, false, false) => Ok(ComponentClass::K5),
        (false, true, false) => Ok(ComponentClass::SigmaC4),
        (false, false, true) => Ok(ComponentClass::WheelFree),
        other => Err(Error::Inconsistent(format!(
            "component matches (K5, ΣC4, wheel-free) = {other:?}"
        ))),
    }
}
