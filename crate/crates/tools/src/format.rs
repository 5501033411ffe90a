//! Graph files and report serialization.
//!
//! Graphs are read from the edge-list text format or from JSON
//! `{"n": 3, "edges": [[1, 2], [2, 3]]}`; a file whose first non-blank
//! character is `{` is treated as JSON. Exact probabilities are written as
//! `"num/den"` strings.

use std::io::{Read, Write};
use std::path::Path;

use impartial_core::bounds::BoundRow;
use impartial_core::exact::{RatioReport, SelectionDistribution, WorstCase};
use impartial_core::graph::{parse_graph, serialize_graph};
use impartial_core::montecarlo::{McEstimate, RatioEstimate};
use impartial_core::{Graph, Limits, MechanismSpec, Rational};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ToolError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(u, v)| [u.label(), v.label()]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = impartial_core::Error;

    fn try_from(j: GraphJson) -> Result<Graph, Self::Error> {
        Graph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Parses either supported format; `path` is only used in error messages.
pub fn parse_graph_file(text: &str, path: &Path) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let j: GraphJson =
            serde_json::from_str(text).map_err(|source| ToolError::Json { path: path.into(), source })?;
        return Ok(Graph::try_from(j)?);
    }
    parse_graph(text).map_err(|source| ToolError::Parse { path: path.into(), source })
}

/// Reads a graph from `path`, or from stdin when `path` is `-`.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let mut text = String::new();
    let io = |source| ToolError::Io { path: path.into(), source };
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
    } else {
        text = std::fs::read_to_string(path).map_err(io)?;
    }
    parse_graph_file(&text, path)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Text,
    Json,
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Text => serialize_graph(g),
        GraphFormat::Json => serde_json::to_string(&GraphJson::from(g)).expect("plain data") + "\n",
    }
}

/// `"num/den"`, with the denominator written even when it is 1.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitsJson {
    pub partition_assignments: u64,
    pub permutation_n: usize,
    pub impartiality_n: usize,
    pub symmetrize_n: usize,
    pub enumerate_all_n: usize,
    pub enumerate_no_abstention_n: usize,
    pub enumerate_outdegree_one_n: usize,
    pub compositions: u64,
}

impl From<&Limits> for LimitsJson {
    fn from(l: &Limits) -> Self {
        LimitsJson {
            partition_assignments: l.partition_assignments,
            permutation_n: l.permutation_n,
            impartiality_n: l.impartiality_n,
            symmetrize_n: l.symmetrize_n,
            enumerate_all_n: l.enumerate_all_n,
            enumerate_no_abstention_n: l.enumerate_no_abstention_n,
            enumerate_outdegree_one_n: l.enumerate_outdegree_one_n,
            compositions: l.compositions,
        }
    }
}

/// Effective configuration echoed by every command.
#[derive(Debug, Clone, Serialize)]
pub struct Config {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mech: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub limits: LimitsJson,
    /// Environment variables that changed a limit, as `NAME=value`.
    pub env_overrides: Vec<String>,
}

impl Config {
    pub fn new(limits: &Limits, env_overrides: &[String]) -> Self {
        Config { mech: None, k: None, seed: None, limits: limits.into(), env_overrides: env_overrides.to_vec() }
    }

    pub fn with_mech(mut self, m: MechanismSpec) -> Self {
        self.mech = Some(m.kind().to_string());
        self.k = m.k();
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelectJson {
    pub winner: u32,
    pub seed: u64,
    pub mech: String,
    pub config: Config,
}

#[derive(Debug, Clone, Serialize)]
pub struct DistributionJson {
    pub graph: String,
    pub probs: Vec<String>,
    pub expected_degree: String,
    pub config: Config,
}

impl DistributionJson {
    pub fn new(g: &Graph, d: &SelectionDistribution, expected: &Rational, config: Config) -> Self {
        DistributionJson {
            graph: g.id(),
            probs: d.probs().iter().map(rational_string).collect(),
            expected_degree: rational_string(expected),
            config,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioJson {
    pub graph: String,
    pub mechanism: String,
    pub expected_degree: String,
    pub delta: usize,
    pub ratio: Option<String>,
    pub ratio_float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    pub config: Config,
}

impl RatioJson {
    pub fn new(rep: &RatioReport, config: Config) -> Self {
        RatioJson {
            graph: rep.graph_id.clone(),
            mechanism: rep.mechanism.to_string(),
            expected_degree: rational_string(&rep.expected_degree),
            delta: rep.delta,
            ratio: rep.ratio.as_ref().map(rational_string),
            ratio_float: rep.ratio.as_ref().map(rational_f64),
            note: rep.ratio.is_none().then_some("delta zero"),
            config,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub n: usize,
    pub class: String,
    pub mechanism: String,
    pub min_ratio: Option<String>,
    pub min_ratio_float: Option<f64>,
    pub argmin: Option<GraphJson>,
    pub argmin_index: Option<u64>,
    pub graphs_examined: u64,
    pub graphs_with_edges: u64,
    pub config: Config,
}

impl SearchJson {
    pub fn new(w: &WorstCase, config: Config) -> Self {
        SearchJson {
            n: w.n,
            class: w.class.name().to_string(),
            mechanism: w.mechanism.to_string(),
            min_ratio: w.min_ratio.as_ref().map(rational_string),
            min_ratio_float: w.min_ratio.as_ref().map(rational_f64),
            argmin: w.argmin.as_ref().map(GraphJson::from),
            argmin_index: w.argmin_index,
            graphs_examined: w.graphs_examined,
            graphs_with_edges: w.graphs_with_edges,
            config,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct McJson {
    pub trials: u64,
    pub seed: u64,
    pub freq: Vec<f64>,
    pub mean_degree: f64,
    pub delta: usize,
    pub ratio: Option<f64>,
    /// Hoeffding half-width at `confidence_delta`.
    pub band: f64,
    pub confidence_delta: f64,
    pub config: Config,
}

impl McJson {
    pub fn new(est: &McEstimate, confidence_delta: f64, config: Config) -> Self {
        let ratio = RatioEstimate::from_estimate(est, confidence_delta).ok();
        McJson {
            trials: est.trials,
            seed: est.seed,
            freq: est.freq(),
            mean_degree: est.mean_degree(),
            delta: est.delta,
            ratio: ratio.map(|r| r.ratio),
            band: est.hoeffding_eps(confidence_delta),
            confidence_delta,
            config,
        }
    }
}

pub const BOUNDS_HEADER: [&str; 7] = ["bound_id", "k", "delta_or_n", "class", "value_num", "value_den", "value_float"];

pub fn write_bounds_csv<W: Write>(rows: &[BoundRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BOUNDS_HEADER)?;
    for row in rows {
        w.write_record([
            row.bound_id.to_string(),
            row.k.map(|k| k.to_string()).unwrap_or_default(),
            row.param.to_string(),
            row.class.map(|c| c.name().to_string()).unwrap_or_default(),
            row.value.numer().to_string(),
            row.value.denom().to_string(),
            rational_f64(&row.value).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use impartial_core::bounds::alpha2_table;
    use impartial_core::graph::gen_gadget;

    #[test]
    fn json_and_text_read_the_same_graph() {
        let g = gen_gadget("perm_up", None).unwrap();
        let p = Path::new("g");
        assert_eq!(parse_graph_file(&write_graph(&g, GraphFormat::Json), p).unwrap(), g);
        assert_eq!(parse_graph_file(&write_graph(&g, GraphFormat::Text), p).unwrap(), g);
        let j = write_graph(&g, GraphFormat::Json);
        assert!(j.starts_with(r#"{"n":4,"edges":[[1,2],[2,1],[3,2],[3,4],[4,2],[4,3]]}"#), "{j}");
    }

    #[test]
    fn bad_json_graphs() {
        let p = Path::new("g.json");
        assert!(matches!(parse_graph_file("{\"n\": 2}", p), Err(ToolError::Json { .. })));
        assert!(matches!(
            parse_graph_file("{\"n\": 2, \"edges\": [[1, 1]]}", p),
            Err(ToolError::Core(impartial_core::Error::SelfLoop(1)))
        ));
        assert!(matches!(parse_graph_file("2\n1 x\n", p), Err(ToolError::Parse { .. })));
    }

    #[test]
    fn rationals_always_have_a_denominator() {
        let one = Rational::from_integer(1.into());
        assert_eq!(rational_string(&one), "1/1");
        assert_eq!(rational_string(&Rational::new(6.into(), 8.into())), "3/4");
    }

    #[test]
    fn bounds_csv_layout() {
        let mut buf = Vec::new();
        write_bounds_csv(&alpha2_table(1..=2).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "bound_id,k,delta_or_n,class,value_num,value_den,value_float\nalpha2,2,1,,1,4,0.25\nalpha2,2,2,,3,8,0.375\n"
        );
    }
}
