//! Suite configuration, instance expansion and the parallel runner.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{
    check_block_collapse, check_chordal, check_circulant, check_cone, check_gluing, check_leray,
    check_multipartite, check_nerve, check_skeleton_equivalence, check_suspension,
    check_triangle_free, check_wheel_free, Certification, CheckSpec, Report,
};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::generate::{
    block_instance, connected_chordal, connected_subcubic, connected_triangle_free,
    connected_wheel_free, gnp, graph_with_edge_limit, k_tree, random_complex, BlockInstance,
};
use crate::graph::{
    circulant, complete, complete_multipartite, cycle, is_bipartite, path, petersen, prism, star,
    wheel, CirculantSpec, Graph, VertexId,
};

/// Registered check names, in catalog order. The position also selects the
/// RNG stream of the check's random instances.
pub const CHECK_NAMES: [&str; 12] = [
    "skeleton-equivalence",
    "triangle-free",
    "chordal",
    "cone",
    "suspension",
    "multipartite",
    "wheel-free",
    "circulant",
    "leray",
    "gluing",
    "nerve",
    "block-collapse",
];

const DEFAULT_SUITE: &str = include_str!("../../suites/default.toml");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub seed: u64,
    #[serde(default, rename = "check")]
    pub checks: Vec<CheckEntry>,
}

/// One check family and the instances to run it on. Fields that do not apply
/// to the family are ignored.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckEntry {
    pub name: String,
    #[serde(default = "enabled_by_default")]
    pub enabled: bool,
    /// Named graphs, see [`parse_graph_name`].
    #[serde(default)]
    pub graphs: Vec<String>,
    /// Number of random instances.
    #[serde(default)]
    pub fuzz: usize,
    #[serde(default)]
    pub max_edges: Option<usize>,
    #[serde(default)]
    pub max_vertices: Option<usize>,
    /// Draw random graphs from `G(max_vertices, p)` instead of by edge count.
    #[serde(default)]
    pub edge_probability: Option<f64>,
    /// Random `k`-trees with `k ≤ 3` (chordal).
    #[serde(default)]
    pub k_trees: usize,
    /// Random connected graphs of maximum degree at most three (wheel-free).
    #[serde(default)]
    pub subcubic: usize,
    /// Explicit part sizes (multipartite).
    #[serde(default)]
    pub parts: Vec<Vec<usize>>,
    /// Every nondecreasing tuple of part sizes (multipartite).
    #[serde(default)]
    pub sweeps: Vec<SweepEntry>,
    /// Inclusive range of circulant orders; every 4-regular spec is checked.
    #[serde(default)]
    pub orders: Option<[usize; 2]>,
    /// Leray degrees; bipartite graphs are also checked at 2.
    #[serde(default)]
    pub degrees: Vec<usize>,
    #[serde(default)]
    pub gluings: Vec<GluingEntry>,
}

fn enabled_by_default() -> bool {
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepEntry {
    pub count: usize,
    pub max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingEntry {
    pub left: String,
    pub right: String,
    #[serde(default)]
    pub overlap: Vec<(VertexId, VertexId)>,
}

impl Default for SuiteConfig {
    /// The shipped default suite.
    fn default() -> SuiteConfig {
        SuiteConfig::from_toml(DEFAULT_SUITE).expect("the default suite parses")
    }
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<SuiteConfig> {
        let config: SuiteConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_json(text: &str) -> Result<SuiteConfig> {
        let config: SuiteConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    /// Rejects unknown check names.
    pub fn validate(&self) -> Result<()> {
        for entry in &self.checks {
            if !CHECK_NAMES.contains(&entry.name.as_str()) {
                return Err(Error::Config(format!(
                    "unknown check {:?}; known checks: {}",
                    entry.name,
                    CHECK_NAMES.join(", ")
                )));
            }
        }
        Ok(())
    }

    /// Keeps only the entries whose name is in `names`.
    pub fn restrict_to(&mut self, names: &[&str]) -> Result<()> {
        for name in names {
            if !self.checks.iter().any(|c| c.name == *name) {
                return Err(Error::Config(format!(
                    "no check named {name:?} in the configuration"
                )));
            }
        }
        self.checks.retain(|c| names.contains(&c.name.as_str()));
        Ok(())
    }

    pub fn entry_mut(&mut self, name: &str) -> Result<&mut CheckEntry> {
        self.checks
            .iter_mut()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Config(format!("no check named {name:?} in the configuration")))
    }
}

/// Reads a TOML config, or JSON when the file name ends in `.json`.
pub fn load_config(path: &Path) -> Result<SuiteConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "json") {
        SuiteConfig::from_json(&text)
    } else {
        SuiteConfig::from_toml(&text)
    }
}

fn numbers(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|e| Error::Config(format!("bad number {s:?}: {e}")))
        })
        .collect()
}

fn single(text: &str, name: &str) -> Result<usize> {
    match numbers(text)?.as_slice() {
        [n] => Ok(*n),
        _ => Err(Error::Config(format!("{name} takes one number"))),
    }
}

/// Builds a graph from a name such as `complete:5`, `cycle:7`, `path:3`,
/// `star:4`, `wheel:4`, `prism:3`, `multipartite:3,3,2`, `circulant:8:1,2`,
/// `empty:3`, `petersen`, `bowtie` or `octahedron`.
pub fn parse_graph_name(name: &str) -> Result<Graph> {
    let mut fields = name.split(':');
    let kind = fields.next().unwrap_or_default();
    let args: Vec<&str> = fields.collect();
    let arg = |i: usize| {
        args.get(i)
            .copied()
            .ok_or_else(|| Error::Config(format!("{name:?}: missing argument")))
    };
    let built = match (kind, args.len()) {
        ("complete", 1) => complete(single(arg(0)?, kind)?),
        ("cycle", 1) => cycle(single(arg(0)?, kind)?),
        ("path", 1) => path(single(arg(0)?, kind)?),
        ("star", 1) => star(single(arg(0)?, kind)?),
        ("wheel", 1) => wheel(single(arg(0)?, kind)?),
        ("prism", 1) => prism(single(arg(0)?, kind)?),
        ("empty", 1) => Ok(Graph::empty(single(arg(0)?, kind)?)),
        ("multipartite", 1) => complete_multipartite(&numbers(arg(0)?)?),
        ("circulant", 2) => {
            CirculantSpec::new(single(arg(0)?, kind)?, numbers(arg(1)?)?).map(|s| circulant(&s))
        }
        ("petersen", 0) => Ok(petersen()),
        ("bowtie", 0) => Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
        ("octahedron", 0) => complete_multipartite(&[2, 2, 2]),
        _ => return Err(Error::Config(format!("unknown graph {name:?}"))),
    };
    built.map_err(|e| Error::Config(format!("{name:?}: {e}")))
}

/// Reads `CLIQUELINE_THREADS`; unset, empty or zero means no cap.
pub fn thread_limit() -> Option<usize> {
    std::env::var("CLIQUELINE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

enum Task {
    Graph(fn(&Graph) -> Result<Report>, Graph),
    Multipartite(Vec<usize>),
    Circulant(CirculantSpec),
    Leray(Graph, usize),
    Gluing(Graph, Graph, Vec<(VertexId, VertexId)>),
    Nerve(Complex),
    Block(BlockInstance),
}

struct Job {
    name: &'static str,
    instance: String,
    seed: Option<u64>,
    task: Task,
}

impl Job {
    fn run(&self) -> Report {
        let result = match &self.task {
            Task::Graph(check, g) => check(g),
            Task::Multipartite(parts) => check_multipartite(parts),
            Task::Circulant(spec) => check_circulant(spec),
            Task::Leray(g, d) => check_leray(g, *d),
            Task::Gluing(g1, g2, overlap) => check_gluing(g1, g2, overlap),
            Task::Nerve(k) => check_nerve(k),
            Task::Block(inst) => check_block_collapse(inst),
        };
        let mut report = result.unwrap_or_else(|e| {
            log::warn!("{} on {}: {e}", self.name, self.instance);
            let certification = match self.name {
                "wheel-free" | "block-collapse" => Certification::CollapseCertified,
                _ => Certification::HomologyCertified,
            };
            let spec = CheckSpec::new(self.name, Default::default(), certification);
            Report::failure(spec, &e)
        });
        report
            .spec
            .params
            .insert("instance".into(), json!(self.instance));
        if let Some(seed) = self.seed {
            report.spec.params.insert("seed".into(), json!(seed));
        }
        report
    }
}

fn graph_check(name: &str) -> Option<fn(&Graph) -> Result<Report>> {
    Some(match name {
        "skeleton-equivalence" => check_skeleton_equivalence,
        "triangle-free" => check_triangle_free,
        "chordal" => check_chordal,
        "cone" => check_cone,
        "suspension" => check_suspension,
        "wheel-free" => check_wheel_free,
        _ => return None,
    })
}

fn nondecreasing(count: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..count {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                let from = t.last().copied().unwrap_or(1);
                (from..=max).map(move |x| {
                    let mut next = t.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

fn random_graph(entry: &CheckEntry, rng: &mut ChaCha8Rng) -> Graph {
    let max_edges = entry.max_edges.unwrap_or(12);
    match entry.name.as_str() {
        "triangle-free" | "suspension" => connected_triangle_free(rng, max_edges),
        "chordal" => connected_chordal(rng, entry.max_vertices.unwrap_or(9)),
        "wheel-free" => connected_wheel_free(rng, max_edges),
        _ => match entry.edge_probability {
            Some(p) => gnp(rng, entry.max_vertices.unwrap_or(8), p),
            None => graph_with_edge_limit(rng, entry.max_vertices.unwrap_or(8), max_edges),
        },
    }
}

fn expand(entry: &CheckEntry, seed: u64) -> Result<Vec<Job>> {
    let name = *CHECK_NAMES
        .iter()
        .find(|n| **n == entry.name)
        .ok_or_else(|| Error::Config(format!("unknown check {:?}", entry.name)))?;
    let stream = CHECK_NAMES
        .iter()
        .position(|n| *n == name)
        .expect("registered") as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let job = |instance: String, seed: Option<u64>, task: Task| Job {
        name,
        instance,
        seed,
        task,
    };
    let mut jobs = Vec::new();

    if let Some(check) = graph_check(name) {
        for g in &entry.graphs {
            jobs.push(job(
                g.clone(),
                None,
                Task::Graph(check, parse_graph_name(g)?),
            ));
        }
        for i in 0..entry.fuzz {
            jobs.push(job(
                format!("random#{i}"),
                Some(seed),
                Task::Graph(check, random_graph(entry, &mut rng)),
            ));
        }
        for i in 0..entry.k_trees {
            let k = rng.gen_range(1..=3);
            let n = rng.gen_range(k + 1..=entry.max_vertices.unwrap_or(10).max(k + 1));
            jobs.push(job(
                format!("{k}-tree#{i}"),
                Some(seed),
                Task::Graph(check, k_tree(&mut rng, k, n)),
            ));
        }
        for i in 0..entry.subcubic {
            let g = connected_subcubic(&mut rng, entry.max_vertices.unwrap_or(8));
            jobs.push(job(
                format!("subcubic#{i}"),
                Some(seed),
                Task::Graph(check, g),
            ));
        }
        return Ok(jobs);
    }

    match name {
        "multipartite" => {
            let mut all = entry.parts.clone();
            for s in &entry.sweeps {
                all.extend(nondecreasing(s.count, s.max));
            }
            for parts in all {
                let label = parts
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                jobs.push(job(
                    format!("multipartite:{label}"),
                    None,
                    Task::Multipartite(parts),
                ));
            }
        }
        "circulant" => {
            for g in &entry.graphs {
                let spec = parse_circulant_name(g)?;
                jobs.push(job(g.clone(), None, Task::Circulant(spec)));
            }
            if let Some([lo, hi]) = entry.orders {
                for n in lo..=hi {
                    for spec in CirculantSpec::four_regular(n) {
                        let gens: Vec<String> =
                            spec.generators().iter().map(usize::to_string).collect();
                        jobs.push(job(
                            format!("circulant:{n}:{}", gens.join(",")),
                            None,
                            Task::Circulant(spec),
                        ));
                    }
                }
            }
        }
        "leray" => {
            let degrees = if entry.degrees.is_empty() {
                vec![3]
            } else {
                entry.degrees.clone()
            };
            for g_name in &entry.graphs {
                let g = parse_graph_name(g_name)?;
                let mut ds = degrees.clone();
                if is_bipartite(&g) && !ds.contains(&2) {
                    ds.push(2);
                }
                for d in ds {
                    jobs.push(job(
                        format!("{g_name} d={d}"),
                        None,
                        Task::Leray(g.clone(), d),
                    ));
                }
            }
        }
        "gluing" => {
            for gl in &entry.gluings {
                let (g1, g2) = (parse_graph_name(&gl.left)?, parse_graph_name(&gl.right)?);
                let label = format!("{} + {} along {:?}", gl.left, gl.right, gl.overlap);
                jobs.push(job(label, None, Task::Gluing(g1, g2, gl.overlap.clone())));
            }
        }
        "nerve" => {
            let n = entry.max_vertices.unwrap_or(7);
            for i in 0..entry.fuzz {
                let k = random_complex(&mut rng, n, 8, 4);
                jobs.push(job(format!("random#{i}"), Some(seed), Task::Nerve(k)));
            }
        }
        "block-collapse" => {
            let max = entry.max_vertices.unwrap_or(7).max(2);
            for i in 0..entry.fuzz {
                let size = rng.gen_range(2..=max);
                let parts = rng.gen_range(2..=size);
                let inst = block_instance(&mut rng, size, parts);
                jobs.push(job(format!("random#{i}"), Some(seed), Task::Block(inst)));
            }
        }
        _ => unreachable!("every registered name is handled"),
    }
    Ok(jobs)
}

fn parse_circulant_name(name: &str) -> Result<CirculantSpec> {
    let fields: Vec<&str> = name.split(':').collect();
    match fields.as_slice() {
        ["circulant", n, gens] => CirculantSpec::new(single(n, "circulant")?, numbers(gens)?)
            .map_err(|e| Error::Config(format!("{name:?}: {e}"))),
        _ => Err(Error::Config(format!(
            "{name:?} is not of the form circulant:N:s,t"
        ))),
    }
}

/// Runs every enabled check in config order and returns the reports in that
/// order. Configuration problems are errors; failing or erroring checks show
/// up as reports with `pass == false`.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<Report>> {
    config.validate()?;
    let mut jobs = Vec::new();
    for entry in config.checks.iter().filter(|c| c.enabled) {
        jobs.extend(expand(entry, config.seed)?);
    }
    log::info!("running {} check instances", jobs.len());
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_limit() {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(pool.install(|| jobs.par_iter().map(Job::run).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_parses() {
        let config = SuiteConfig::default();
        let names: Vec<&str> = config.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECK_NAMES.to_vec());
    }

    #[test]
    fn unknown_names_are_config_errors() {
        let err = SuiteConfig::from_toml("[[check]]\nname = \"nope\"\n").unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        let err = SuiteConfig::from_toml("[[check]]\nname = \"chordal\"\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        assert!(parse_graph_name("complete").is_err());
        assert!(parse_graph_name("dodecahedron").is_err());
    }

    #[test]
    fn graph_names() {
        assert_eq!(parse_graph_name("complete:5").unwrap().edge_count(), 10);
        assert_eq!(
            parse_graph_name("multipartite:3,3,2").unwrap().edge_count(),
            9 + 6 + 6
        );
        assert_eq!(
            parse_graph_name("circulant:8:1,2").unwrap().edge_count(),
            16
        );
        assert_eq!(parse_graph_name("bowtie").unwrap().edge_count(), 6);
        assert_eq!(parse_graph_name("octahedron").unwrap().edge_count(), 12);
    }

    #[test]
    fn sweeps_are_nondecreasing_tuples() {
        assert_eq!(nondecreasing(2, 3).len(), 6);
        assert_eq!(nondecreasing(3, 3).len(), 10);
    }

    #[test]
    fn small_suite_is_deterministic() {
        let text = r#"
            seed = 42
            [[check]]
            name = "chordal"
            fuzz = 5
            [[check]]
            name = "multipartite"
            parts = [[3, 3, 2]]
        "#;
        let config = SuiteConfig::from_toml(text).unwrap();
        let strip = |mut r: Vec<Report>| {
            r.iter_mut().for_each(|x| x.runtime_ms = 0);
            serde_json::to_string(&r).unwrap()
        };
        let a = run_suite(&config).unwrap();
        assert_eq!(a.len(), 6);
        assert!(a.iter().all(|r| r.pass));
        assert_eq!(a[5].spec.name, "multipartite");
        assert_eq!(strip(a), strip(run_suite(&config).unwrap()));
    }
}
