//! Checks that compare predicted homology against computed homology and
//! package the outcome as machine-readable [`Report`]s.
//!
//! Each check states where its expected value comes from: a formula stated
//! for the family ([`Provenance::Paper`]), a value derived here from an
//! independent computation such as the Euler characteristic
//! ([`Provenance::Derived`]), or nothing to compare ([`Provenance::Informational`]).

mod suite;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::collapse::{
    multi_block_collapse, two_block_collapse, wheelfree_collapse, CollapseTrace,
};
use crate::complex::{
    clique_complex, line_clique_complex, nerve_of_facets, prune, skeleton, Complex, Simplex,
};
use crate::error::{Error, Result};
use crate::generate::{edge_pairs, BlockInstance};
use crate::graph::{
    circulant, complete, complete_multipartite, cone, contains_wheel_subgraph, cycle, cyclomatic,
    glue, is_bipartite, is_chordal, is_isomorphic, is_triangle_free, suspension, triangles,
    CirculantSpec, ComponentClass, Graph, VertexId, MAX_ISOMORPHISM_VERTICES,
};
use crate::homology::{leray_bound_check, reduced_homology, HomologyProfile, LerayVerdict};

pub use suite::{
    load_config, parse_graph_name, run_suite, thread_limit, CheckEntry, GluingEntry, SuiteConfig,
    SweepEntry, CHECK_NAMES,
};

/// How strongly a passing check pins down the homotopy type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Only the homology agrees with the predicted wedge of spheres.
    HomologyCertified,
    /// A validated collapse onto a 1-dimensional complex backs the claim.
    CollapseCertified,
}

/// Origin of a report's expected value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Paper,
    Derived,
    Informational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub certification: Certification,
}

impl CheckSpec {
    fn new(name: &str, params: BTreeMap<String, Value>, certification: Certification) -> CheckSpec {
        CheckSpec {
            name: name.to_string(),
            params,
            certification,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentObservation {
    pub class: ComponentClass,
    pub profile: HomologyProfile,
}

/// The value a check predicts or measures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Observation {
    Profile(HomologyProfile),
    Scalar(i64),
    Flag(bool),
    Facets(Vec<Simplex>),
    Components(Vec<ComponentObservation>),
    /// The computation could not produce a value.
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub spec: CheckSpec,
    pub provenance: Provenance,
    pub expected: Observation,
    pub computed: Observation,
    /// `expected == computed`.
    pub pass: bool,
    pub runtime_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_digest: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Report {
    fn new(
        spec: CheckSpec,
        provenance: Provenance,
        expected: Observation,
        computed: Observation,
        started: Instant,
    ) -> Report {
        Report {
            pass: expected == computed,
            spec,
            provenance,
            expected,
            computed,
            runtime_ms: started.elapsed().as_millis() as u64,
            trace_digest: None,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Report {
        self.note = Some(note.into());
        self
    }

    fn with_trace(mut self, trace: &CollapseTrace) -> Report {
        self.trace_digest = Some(trace_digest(trace));
        self
    }

    /// A failing report for a check that returned an error.
    pub fn failure(spec: CheckSpec, error: &Error) -> Report {
        Report {
            spec,
            provenance: Provenance::Informational,
            expected: Observation::Error(String::new()),
            computed: Observation::Error(error.to_string()),
            pass: false,
            runtime_ms: 0,
            trace_digest: None,
            note: None,
        }
    }
}

/// Hex SHA-256 of the serialized trace.
pub fn trace_digest(trace: &CollapseTrace) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(trace.to_json().as_bytes()))
}

fn graph_params(g: &Graph) -> BTreeMap<String, Value> {
    BTreeMap::from([
        ("vertices".to_string(), json!(g.vertex_count())),
        ("edges".to_string(), json!(edge_pairs(g))),
    ])
}

fn require(condition: bool, message: &str) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::Precondition(message.to_string()))
    }
}

/// Clique complex of the line graph versus the 2-skeleton of the clique complex.
///
/// Isolated vertices have no edges and so no counterpart in the line graph;
/// they are dropped before forming the clique complex.
pub fn check_skeleton_equivalence(g: &Graph) -> Result<Report> {
    let started = Instant::now();
    let incident: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
    let (core, _) = g.induced_subgraph(&incident)?;
    let expected = reduced_homology(&skeleton(&clique_complex(&core), 2));
    let computed = reduced_homology(&line_clique_complex(g));
    let mut params = graph_params(g);
    params.insert(
        "isolated_dropped".into(),
        json!(g.vertex_count() - incident.len()),
    );
    let spec = CheckSpec::new(
        "skeleton-equivalence",
        params,
        Certification::HomologyCertified,
    );
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

/// Connected triangle-free graphs give a wedge of `e − v + 1` circles.
pub fn check_triangle_free(g: &Graph) -> Result<Report> {
    require(g.edge_count() > 0, "graph has no edges")?;
    require(g.is_connected(), "graph is not connected")?;
    require(is_triangle_free(g), "graph has a triangle")?;
    let started = Instant::now();
    let expected = HomologyProfile::wedge_of_spheres(1, cyclomatic(g));
    let computed = reduced_homology(&line_clique_complex(g));
    let spec = CheckSpec::new(
        "triangle-free",
        graph_params(g),
        Certification::HomologyCertified,
    );
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

/// Connected chordal graphs give a wedge of 2-spheres; the count
/// `v − e + t − 1` comes from the Euler characteristic.
pub fn check_chordal(g: &Graph) -> Result<Report> {
    require(g.edge_count() > 0, "graph has no edges")?;
    require(g.is_connected(), "graph is not connected")?;
    require(is_chordal(g), "graph is not chordal")?;
    let started = Instant::now();
    let count = g.vertex_count() as i64 - g.edge_count() as i64 + triangles(g).len() as i64 - 1;
    let computed = reduced_homology(&line_clique_complex(g));
    let spec = CheckSpec::new("chordal", graph_params(g), Certification::HomologyCertified);
    let expected = if count >= 0 {
        Observation::Profile(HomologyProfile::wedge_of_spheres(2, count as usize))
    } else {
        Observation::Scalar(count)
    };
    Ok(Report::new(
        spec,
        Provenance::Derived,
        expected,
        Observation::Profile(computed),
        started,
    )
    .with_note("sphere count from the Euler characteristic"))
}

/// The cone over `g` gives one 2-sphere per triangle of `g`.
pub fn check_cone(g: &Graph) -> Result<Report> {
    require(g.vertex_count() > 0, "graph has no vertices")?;
    let started = Instant::now();
    let expected = HomologyProfile::wedge_of_spheres(2, triangles(g).len());
    let computed = reduced_homology(&line_clique_complex(&cone(g)));
    let spec = CheckSpec::new("cone", graph_params(g), Certification::HomologyCertified);
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

/// For triangle-free `g`, the suspension of `g` shifts the homology up by one.
pub fn check_suspension(g: &Graph) -> Result<Report> {
    require(g.vertex_count() >= 2, "graph needs at least two vertices")?;
    require(g.is_connected(), "graph is not connected")?;
    require(is_triangle_free(g), "graph has a triangle")?;
    let started = Instant::now();
    let expected = reduced_homology(&line_clique_complex(g)).suspended();
    let computed = reduced_homology(&line_clique_complex(&suspension(g)));
    let spec = CheckSpec::new(
        "suspension",
        graph_params(g),
        Certification::HomologyCertified,
    );
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

/// Complete multipartite graphs: `(m−1)(n−1)` circles for two parts,
/// `(m−1)(n−1)(r−1)` 2-spheres for three, and a wedge of 2-spheres with the
/// count read off the Euler characteristic beyond that.
pub fn check_multipartite(parts: &[usize]) -> Result<Report> {
    require(parts.len() >= 2, "need at least two parts")?;
    require(parts.iter().all(|&p| p > 0), "parts must be nonempty")?;
    let started = Instant::now();
    let g = complete_multipartite(parts)?;
    let k = line_clique_complex(&g);
    let computed = reduced_homology(&k);
    let t = |m: usize, n: usize| m * n - (m + n - 1);
    let (expected, provenance) = match parts {
        [m, n] => (
            HomologyProfile::wedge_of_spheres(1, t(*m, *n)),
            Provenance::Paper,
        ),
        [m, n, r] => (
            HomologyProfile::wedge_of_spheres(2, t(*m, *n) * (r - 1)),
            Provenance::Paper,
        ),
        _ => {
            let count = k.euler_characteristic() - 1;
            if count < 0 {
                return Ok(Report::new(
                    CheckSpec::new(
                        "multipartite",
                        BTreeMap::from([("parts".into(), json!(parts))]),
                        Certification::HomologyCertified,
                    ),
                    Provenance::Derived,
                    Observation::Scalar(count),
                    Observation::Profile(computed),
                    started,
                ));
            }
            (
                HomologyProfile::wedge_of_spheres(2, count as usize),
                Provenance::Derived,
            )
        }
    };
    let spec = CheckSpec::new(
        "multipartite",
        BTreeMap::from([("parts".into(), json!(parts))]),
        Certification::HomologyCertified,
    );
    Ok(Report::new(
        spec,
        provenance,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

fn wedge_of_circles_prediction(k: &Complex) -> Observation {
    let circles = 1 - k.euler_characteristic();
    if circles < 0 {
        Observation::Scalar(circles)
    } else {
        Observation::Profile(HomologyProfile::wedge_of_spheres(1, circles as usize))
    }
}

/// Connected wheel-free graphs: collapse onto a graph and compare its homology
/// with a wedge of `1 − χ` circles.
pub fn check_wheel_free(g: &Graph) -> Result<Report> {
    let started = Instant::now();
    let trace = wheelfree_collapse(g)?;
    require(trace.end.dim() <= 1, "collapse did not reach dimension one")?;
    let expected = wedge_of_circles_prediction(&trace.start);
    let computed = reduced_homology(&trace.end);
    let spec = CheckSpec::new(
        "wheel-free",
        graph_params(g),
        Certification::CollapseCertified,
    );
    Ok(Report::new(
        spec,
        Provenance::Paper,
        expected,
        Observation::Profile(computed),
        started,
    )
    .with_trace(&trace)
    .with_note(format!("{} collapse steps", trace.len())))
}

/// Classification by exhaustive search: isomorphism with `K_5` or the
/// suspension of `C_4`, otherwise a direct search for wheel subgraphs.
fn brute_force_class(component: &Graph) -> Result<Option<ComponentClass>> {
    if component.vertex_count() <= MAX_ISOMORPHISM_VERTICES {
        if is_isomorphic(component, &complete(5)?)? {
            return Ok(Some(ComponentClass::K5));
        }
        if is_isomorphic(component, &suspension(&cycle(4)?))? {
            return Ok(Some(ComponentClass::SigmaC4));
        }
    }
    Ok((!contains_wheel_subgraph(component)).then_some(ComponentClass::WheelFree))
}

/// Every component of a 4-regular circulant graph: the predicted class comes
/// from exhaustive search, the computed class from the classifier; homology is
/// predicted per class and computed (through a collapse for wheel-free components).
pub fn check_circulant(spec: &CirculantSpec) -> Result<Report> {
    require(spec.degree() == 4, "circulant is not 4-regular")?;
    let started = Instant::now();
    let class = crate::graph::classify_circulant(spec)?;
    let g = circulant(spec);
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    let mut steps = 0;
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp)?;
        let brute = brute_force_class(&sub)?
            .ok_or_else(|| Error::Inconsistent(format!("component of {spec} fits no class")))?;
        let k = line_clique_complex(&sub);
        let predicted = match brute {
            ComponentClass::K5 => HomologyProfile::wedge_of_spheres(2, 4),
            ComponentClass::SigmaC4 => HomologyProfile::wedge_of_spheres(2, 1),
            ComponentClass::WheelFree => match wedge_of_circles_prediction(&k) {
                Observation::Profile(p) => p,
                _ => return Err(Error::Inconsistent("negative circle count".into())),
            },
        };
        let profile = if class == ComponentClass::WheelFree {
            let trace = wheelfree_collapse(&sub)?;
            steps += trace.len();
            reduced_homology(&trace.end)
        } else {
            reduced_homology(&k)
        };
        expected.push(ComponentObservation {
            class: brute,
            profile: predicted,
        });
        computed.push(ComponentObservation { class, profile });
    }
    let certification = if class == ComponentClass::WheelFree {
        Certification::CollapseCertified
    } else {
        Certification::HomologyCertified
    };
    let params = BTreeMap::from([
        ("n".to_string(), json!(spec.order())),
        ("generators".to_string(), json!(spec.generators())),
    ]);
    let provenance = if class == ComponentClass::WheelFree {
        Provenance::Paper
    } else {
        Provenance::Derived
    };
    let note = format!("{} components, {steps} collapse steps", expected.len());
    Ok(Report::new(
        CheckSpec::new("circulant", params, certification),
        provenance,
        Observation::Components(expected),
        Observation::Components(computed),
        started,
    )
    .with_note(note))
}

/// Largest edge count for which [`check_leray`] enumerates every subset.
pub const LERAY_MAX_EDGES: usize = crate::homology::LERAY_EXHAUSTIVE_LIMIT;

/// Exhaustive `d`-Leray check of the clique complex of the line graph.
pub fn check_leray(g: &Graph, d: usize) -> Result<Report> {
    if g.edge_count() > LERAY_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges exceed the exhaustive limit {LERAY_MAX_EDGES}",
            g.edge_count()
        )));
    }
    let started = Instant::now();
    let verdict = leray_bound_check(&line_clique_complex(g), d, None)?;
    let note = match &verdict {
        LerayVerdict::Holds {
            subsets_checked,
            all_fields,
        } => {
            format!("{subsets_checked} subsets; vanishing over every field: {all_fields}")
        }
        LerayVerdict::Refuted { witness, .. } => format!("witness edges {witness:?}"),
        LerayVerdict::BudgetExhausted {
            subsets_checked, ..
        } => format!("{subsets_checked} subsets sampled"),
    };
    let mut params = graph_params(g);
    params.insert("d".into(), json!(d));
    params.insert("bipartite".into(), json!(is_bipartite(g)));
    let spec = CheckSpec::new("leray", params, Certification::HomologyCertified);
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Flag(true),
        Observation::Flag(verdict.holds()),
        started,
    )
    .with_note(note))
}

/// Gluing along an empty or one-vertex overlap adds homology: a disjoint
/// union adds one to `β̃_0`, a one-point union adds degreewise. Larger
/// overlaps are recorded without a prediction.
pub fn check_gluing(g1: &Graph, g2: &Graph, overlap: &[(VertexId, VertexId)]) -> Result<Report> {
    require(
        g1.is_connected() && g2.is_connected(),
        "both graphs must be connected",
    )?;
    let started = Instant::now();
    let glued = glue(g1, g2, overlap)?;
    let computed = reduced_homology(&line_clique_complex(&glued));
    let mut params = BTreeMap::from([
        (
            "left".to_string(),
            Value::Object(graph_params(g1).into_iter().collect()),
        ),
        (
            "right".to_string(),
            Value::Object(graph_params(g2).into_iter().collect()),
        ),
        ("overlap".to_string(), json!(overlap)),
    ]);
    let (k1, k2) = (line_clique_complex(g1), line_clique_complex(g2));
    let (h1, h2) = (reduced_homology(&k1), reduced_homology(&k2));
    let expected = match overlap.len() {
        _ if k1.is_empty() && (overlap.len() <= 1) => h2,
        _ if k2.is_empty() && (overlap.len() <= 1) => h1,
        0 => {
            let mut sum = h1.sum(&h2);
            sum = HomologyProfile::from_parts(
                std::iter::once(sum.betti(0) + 1)
                    .chain(sum.betti_numbers().iter().skip(1).copied())
                    .collect(),
                (0..sum.betti_numbers().len())
                    .map(|i| sum.torsion(i).to_vec())
                    .collect(),
            );
            sum
        }
        1 => h1.sum(&h2),
        _ => {
            params.insert("glued_vertices".into(), json!(glued.vertex_count()));
            let spec = CheckSpec::new("gluing", params, Certification::HomologyCertified);
            return Ok(Report::new(
                spec,
                Provenance::Informational,
                Observation::Profile(computed.clone()),
                Observation::Profile(computed),
                started,
            )
            .with_note("overlap has two or more vertices; the pushout is not predicted"));
        }
    };
    let spec = CheckSpec::new("gluing", params, Certification::HomologyCertified);
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

/// The nerve of the facet cover has the homology of the complex.
pub fn check_nerve(k: &Complex) -> Result<Report> {
    require(!k.is_empty(), "complex is empty")?;
    let started = Instant::now();
    let expected = reduced_homology(k);
    let computed = reduced_homology(&nerve_of_facets(k));
    let params = BTreeMap::from([
        ("vertex_count".to_string(), json!(k.vertex_count())),
        ("facets".to_string(), json!(k.facets())),
    ]);
    let spec = CheckSpec::new("nerve", params, Certification::HomologyCertified);
    Ok(Report::new(
        spec,
        Provenance::Paper,
        Observation::Profile(expected),
        Observation::Profile(computed),
        started,
    ))
}

/// End facets promised for a block split of `sigma`, before pruning against
/// the rest of the complex.
pub fn predicted_block_facets(parts: &[Simplex], spare: &Simplex) -> Vec<Simplex> {
    let top = |s: &Simplex| *s.vertices().last().expect("blocks are nonempty");
    if !spare.is_empty() {
        if parts.len() == 1 {
            return vec![parts[0].union(spare)];
        }
        return parts.iter().map(|p| p.union(spare)).collect();
    }
    let last = parts.last().expect("at least one part");
    let mut out: Vec<Simplex> = parts.to_vec();
    for p in &parts[..parts.len() - 1] {
        out.push(Simplex::new([top(p), top(last)]));
    }
    out
}

/// Runs the block collapse on an engineered instance, checks homology after
/// every step, and compares the end facets with the predicted ones.
pub fn check_block_collapse(inst: &BlockInstance) -> Result<Report> {
    let started = Instant::now();
    let trace = if inst.parts.len() == 2 {
        two_block_collapse(
            &inst.complex,
            &inst.sigma,
            &inst.parts[0],
            &inst.parts[1],
            &inst.spare,
        )?
    } else {
        multi_block_collapse(&inst.complex, &inst.sigma, &inst.parts, &inst.spare)?
    };
    let mut rest: Vec<Simplex> = inst
        .complex
        .facets()
        .iter()
        .filter(|f| **f != inst.sigma)
        .cloned()
        .collect();
    rest.extend(predicted_block_facets(&inst.parts, &inst.spare));
    let expected = Observation::Facets(prune(rest));

    let start_homology = reduced_homology(&trace.start);
    let mut k = trace.start.clone();
    let mut computed = Observation::Facets(trace.end.facets().to_vec());
    for (i, p) in trace.steps.iter().enumerate() {
        k = crate::collapse::collapse_pair(&k, p)?;
        if reduced_homology(&k) != start_homology {
            computed = Observation::Error(format!("homology changed at step {i}"));
            break;
        }
    }
    let params = BTreeMap::from([
        ("complex".to_string(), json!(inst.complex.facets())),
        ("sigma".to_string(), json!(inst.sigma)),
        ("parts".to_string(), json!(inst.parts)),
        ("spare".to_string(), json!(inst.spare)),
    ]);
    let spec = CheckSpec::new("block-collapse", params, Certification::CollapseCertified);
    Ok(Report::new(spec, Provenance::Paper, expected, computed, started).with_trace(&trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_multipartite, disjoint_union, is_wheel_free, path, petersen, prism, wheel,
    };

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn betti(r: &Report) -> Vec<usize> {
        match &r.computed {
            Observation::Profile(p) => {
                let mut b = p.betti_numbers().to_vec();
                while b.len() > 1 && b.last() == Some(&0) {
                    b.pop();
                }
                b
            }
            other => panic!("not a profile: {other:?}"),
        }
    }

    #[test]
    fn skeleton_examples() {
        assert!(
            check_skeleton_equivalence(&complete(5).unwrap())
                .unwrap()
                .pass
        );
        assert!(check_skeleton_equivalence(&cycle(7).unwrap()).unwrap().pass);
        let g = Graph::from_edges(5, [(0, 3), (3, 4)]).unwrap();
        let r = check_skeleton_equivalence(&g).unwrap();
        assert!(r.pass);
        assert_eq!(r.spec.params["isolated_dropped"], json!(2));
        assert!(check_skeleton_equivalence(&Graph::empty(3)).unwrap().pass);
    }

    #[test]
    fn triangle_free_examples() {
        let r = check_triangle_free(&complete_multipartite(&[3, 3]).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r), vec![0, 4]);
        assert!(check_triangle_free(&path(4).unwrap()).unwrap().pass);
        let r = check_triangle_free(&petersen()).unwrap();
        assert_eq!(betti(&r), vec![0, 6]);
        assert!(check_triangle_free(&complete(3).unwrap()).is_err());
    }

    #[test]
    fn chordal_examples() {
        let r = check_chordal(&complete(4).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(r.provenance, Provenance::Derived);
        assert_eq!(betti(&r), vec![0, 0, 1]);
        assert!(check_chordal(&complete(7).unwrap()).unwrap().pass);
        assert!(check_chordal(&cycle(4).unwrap()).is_err());
    }

    #[test]
    fn cone_and_suspension_examples() {
        assert!(
            check_cone(&complete_multipartite(&[2, 3]).unwrap())
                .unwrap()
                .pass
        );
        let r = check_cone(&complete(3).unwrap()).unwrap();
        assert_eq!(betti(&r), vec![0, 0, 1]);
        let r = check_cone(&complete_multipartite(&[2, 2, 2]).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r)[2], 8);

        let r = check_suspension(&cycle(4).unwrap()).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r), vec![0, 0, 1]);
        assert!(check_suspension(&path(3).unwrap()).unwrap().pass);
        let r = check_suspension(&complete_multipartite(&[2, 3]).unwrap()).unwrap();
        assert_eq!(betti(&r)[2], 2);
    }

    #[test]
    fn multipartite_examples() {
        let r = check_multipartite(&[3, 3]).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r), vec![0, 4]);
        let r = check_multipartite(&[2, 2, 3]).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r), vec![0, 0, 2]);
        let r = check_multipartite(&[2, 2, 2, 2]).unwrap();
        assert!(r.pass);
        assert_eq!(r.provenance, Provenance::Derived);
    }

    #[test]
    fn wheel_free_examples() {
        let r = check_wheel_free(&bowtie()).unwrap();
        assert!(r.pass);
        assert_eq!(r.spec.certification, Certification::CollapseCertified);
        assert!(r.trace_digest.is_some());
        let spec = CirculantSpec::new(8, [1, 2]).unwrap();
        assert!(check_wheel_free(&circulant(&spec)).unwrap().pass);
        assert!(check_wheel_free(&wheel(5).unwrap()).is_err());
    }

    #[test]
    fn circulant_examples() {
        for (n, s, t) in [
            (5, 1, 2),
            (6, 1, 2),
            (8, 1, 2),
            (10, 2, 4),
            (12, 2, 4),
            (9, 1, 3),
        ] {
            let r = check_circulant(&CirculantSpec::new(n, [s, t]).unwrap()).unwrap();
            assert!(r.pass, "C_{n}({s},{t}): {r:?}");
        }
        let r = check_circulant(&CirculantSpec::new(10, [2, 4]).unwrap()).unwrap();
        match r.computed {
            Observation::Components(c) => {
                assert_eq!(c.len(), 2);
                assert!(c
                    .iter()
                    .all(|o| o.class == ComponentClass::K5 && o.profile.betti(2) == 4));
            }
            other => panic!("{other:?}"),
        }
        assert!(check_circulant(&CirculantSpec::new(8, [1, 4]).unwrap()).is_err());
    }

    #[test]
    fn leray_examples() {
        let r = check_leray(&complete(5).unwrap(), 3).unwrap();
        assert!(r.pass);
        assert!(
            check_leray(&complete_multipartite(&[3, 3]).unwrap(), 2)
                .unwrap()
                .pass
        );
        assert!(check_leray(&wheel(4).unwrap(), 3).unwrap().pass);
        assert!(check_leray(&prism(3).unwrap(), 3).unwrap().pass);
        // The hexagon's clique complex has a 1-cycle, so it is not 1-Leray.
        assert!(!check_leray(&cycle(6).unwrap(), 1).unwrap().pass);
        assert!(check_leray(&complete(6).unwrap(), 3).is_err());
    }

    #[test]
    fn gluing_examples() {
        let tri = complete(3).unwrap();
        let r = check_gluing(&tri, &tri, &[]).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r), vec![1]);
        assert!(check_gluing(&tri, &tri, &[(0, 0)]).unwrap().pass);
        let r = check_gluing(&cycle(4).unwrap(), &complete(4).unwrap(), &[(0, 0)]).unwrap();
        assert!(r.pass);
        assert_eq!(betti(&r), vec![0, 1, 1]);
        let r = check_gluing(&tri, &tri, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(r.provenance, Provenance::Informational);
        assert!(r.pass);
    }

    #[test]
    fn nerve_and_blocks() {
        let k = skeleton(&Complex::full_simplex(4), 2);
        assert!(check_nerve(&k).unwrap().pass);
        let inst = BlockInstance {
            complex: Complex::full_simplex(4),
            sigma: Simplex::new(0..4),
            parts: vec![Simplex::new([0, 1]), Simplex::new([2, 3])],
            spare: Simplex::default(),
        };
        let r = check_block_collapse(&inst).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(
            r.computed,
            Observation::Facets(vec![
                Simplex::new([0, 1]),
                Simplex::new([1, 3]),
                Simplex::new([2, 3])
            ])
        );
    }

    #[test]
    fn disjoint_union_parameters_are_recorded() {
        let g = disjoint_union(&complete(3).unwrap(), &complete(2).unwrap());
        let r = check_skeleton_equivalence(&g).unwrap();
        assert_eq!(r.spec.params["vertices"], json!(5));
        assert!(r.pass);
        assert!(is_wheel_free(&g));
    }
}
