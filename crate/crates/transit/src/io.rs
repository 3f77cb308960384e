//! JSON instance files.
//!
//! Every file is a single JSON object with a `model` tag selecting the
//! schema; unknown fields are rejected. Rationals appear as integers,
//! exact decimals, or `"p/q"` strings, and always serialize back as
//! exact strings, so values like `0.1` never pick up binary rounding
//! error on the way through.
//!
//! The five schemas:
//!
//! ```json
//! {"model": "ptp", "name": "line", "stops": [0, 1, "3/2"],
//!  "agents": [[0, 1], ["1/2", "3/2"]], "alpha": "1/2", "beta": 2}
//!
//! {"model": "ntp", "vertices": ["s", "t"],
//!  "edges": [{"u": "s", "v": "t", "w": 1}],
//!  "agents": [["s", "t"]], "alpha": "1/2", "beta": 1}
//!
//! {"model": "rdp", "vertices": ["s", "t"],
//!  "edges": [{"u": "s", "v": "t", "w": 1}],
//!  "demands": [{"u": "s", "v": "t", "tau": 1}],
//!  "zeta": 2, "budget": 1}
//!
//! {"model": "setcover", "universe": ["a", "b"],
//!  "subsets": [["a"], ["a", "b"]], "rho": 1}
//!
//! {"model": "vertexcover", "vertices": ["a", "b"],
//!  "edges": [["a", "b"]], "rho": 1}
//! ```
//!
//! `zeta` additionally accepts `"inf"`. The `name` field is optional on
//! every model. Emission is deterministic (fixed field order, sorted
//! normalized collections), so parse/emit round trips are byte stable.

use crate::error::{Error, Result};
use crate::model::{Graph, NtpInstance, PtpInstance};
use crate::rational::{fmt_rat, parse_cost, parse_rat, Cost, Rat};
use crate::reductions::{RdpInstance, SetCoverInstance, VertexCoverInstance};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational in a file: integer, exact decimal, or `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RatText(Rat);

impl Serialize for RatText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = rational_text(deserializer)?;
        parse_rat(&text).map(RatText).map_err(D::Error::custom)
    }
}

/// Like [`RatText`] but admitting `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct CostText(Cost);

impl Serialize for CostText {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.finite() {
            Some(x) => serializer.serialize_str(&fmt_rat(x)),
            None => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for CostText {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = rational_text(deserializer)?;
        parse_cost(&text).map(CostText).map_err(D::Error::custom)
    }
}

/// Pulls the literal text out of a JSON number or string; the
/// arbitrary-precision number representation keeps decimals exact.
fn rational_text<'de, D: Deserializer<'de>>(deserializer: D) -> std::result::Result<String, D::Error> {
    match serde_json::Value::deserialize(deserializer)? {
        serde_json::Value::Number(n) => Ok(n.to_string()),
        serde_json::Value::String(s) => Ok(s),
        other => Err(D::Error::custom(format!("expected a number or \"p/q\" string, got {other}"))),
    }
}

#[derive(Deserialize)]
struct Probe {
    model: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PtpFile {
    model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    stops: Vec<RatText>,
    agents: Vec<(RatText, RatText)>,
    alpha: RatText,
    beta: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    u: String,
    v: String,
    w: RatText,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NtpFile {
    model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
    agents: Vec<(String, String)>,
    alpha: RatText,
    beta: usize,
}

#[derive(Serialize, Deserialize)]
struct DemandFile {
    u: String,
    v: String,
    tau: RatText,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RdpFile {
    model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
    demands: Vec<DemandFile>,
    zeta: CostText,
    budget: RatText,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetCoverFile {
    model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    universe: Vec<String>,
    subsets: Vec<Vec<String>>,
    rho: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexCoverFile {
    model: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    rho: usize,
}

/// A parsed instance of any model.
#[derive(Clone, Debug)]
pub enum Instance {
    Ptp(PtpInstance),
    Ntp(NtpInstance),
    Rdp(RdpInstance),
    SetCover(SetCoverInstance),
    VertexCover(VertexCoverInstance),
}

impl Instance {
    pub fn tag(&self) -> &'static str {
        match self {
            Instance::Ptp(_) => "ptp",
            Instance::Ntp(_) => "ntp",
            Instance::Rdp(_) => "rdp",
            Instance::SetCover(_) => "setcover",
            Instance::VertexCover(_) => "vertexcover",
        }
    }

    pub fn expect_ptp(self) -> Result<PtpInstance> {
        match self {
            Instance::Ptp(x) => Ok(x),
            other => Err(wrong_model("ptp", &other)),
        }
    }

    pub fn expect_ntp(self) -> Result<NtpInstance> {
        match self {
            Instance::Ntp(x) => Ok(x),
            other => Err(wrong_model("ntp", &other)),
        }
    }

    pub fn expect_setcover(self) -> Result<SetCoverInstance> {
        match self {
            Instance::SetCover(x) => Ok(x),
            other => Err(wrong_model("setcover", &other)),
        }
    }

    pub fn expect_vertexcover(self) -> Result<VertexCoverInstance> {
        match self {
            Instance::VertexCover(x) => Ok(x),
            other => Err(wrong_model("vertexcover", &other)),
        }
    }
}

fn wrong_model(expected: &str, found: &Instance) -> Error {
    Error::invalid("model", format!("expected a {expected} instance, found {}", found.tag()))
}

/// An [`Instance`] together with the file's optional name.
#[derive(Clone, Debug)]
pub struct ParsedInstance {
    pub name: Option<String>,
    pub instance: Instance,
}

/// Parses a JSON instance file; diagnostics name the offending field.
pub fn parse_instance(bytes: &[u8]) -> Result<ParsedInstance> {
    let probe: Probe = serde_json::from_slice(bytes)?;
    match probe.model.as_str() {
        "ptp" => {
            let file: PtpFile = serde_json::from_slice(bytes)?;
            let stops = file.stops.into_iter().map(|r| r.0).collect();
            let agents = file.agents.into_iter().map(|(s, t)| (s.0, t.0)).collect();
            let instance = PtpInstance::new(stops, agents, file.alpha.0, file.beta)?;
            Ok(ParsedInstance { name: file.name, instance: Instance::Ptp(instance) })
        }
        "ntp" => {
            let file: NtpFile = serde_json::from_slice(bytes)?;
            let graph = graph_from_parts(file.vertices, file.edges)?;
            let agents = file
                .agents
                .iter()
                .map(|(s, t)| Ok((graph.vertex(s)?, graph.vertex(t)?)))
                .collect::<Result<Vec<_>>>()?;
            let instance = NtpInstance::new(graph, agents, file.alpha.0, file.beta)?;
            Ok(ParsedInstance { name: file.name, instance: Instance::Ntp(instance) })
        }
        "rdp" => {
            let file: RdpFile = serde_json::from_slice(bytes)?;
            let graph = graph_from_parts(file.vertices, file.edges)?;
            let demands = file
                .demands
                .iter()
                .map(|d| Ok((graph.vertex(&d.u)?, graph.vertex(&d.v)?, d.tau.0.clone())))
                .collect::<Result<Vec<_>>>()?;
            let instance = RdpInstance::new(graph, demands, file.zeta.0, file.budget.0)?;
            Ok(ParsedInstance { name: file.name, instance: Instance::Rdp(instance) })
        }
        "setcover" => {
            let file: SetCoverFile = serde_json::from_slice(bytes)?;
            let instance = SetCoverInstance::new(file.universe, file.subsets, file.rho)?;
            Ok(ParsedInstance { name: file.name, instance: Instance::SetCover(instance) })
        }
        "vertexcover" => {
            let file: VertexCoverFile = serde_json::from_slice(bytes)?;
            let instance = VertexCoverInstance::new(file.vertices, file.edges, file.rho)?;
            Ok(ParsedInstance { name: file.name, instance: Instance::VertexCover(instance) })
        }
        other => Err(Error::invalid(
            "model",
            format!("unknown model {other:?}; expected ptp, ntp, rdp, setcover, or vertexcover"),
        )),
    }
}

fn graph_from_parts(vertices: Vec<String>, edges: Vec<EdgeFile>) -> Result<Graph> {
    let lookup: std::collections::HashMap<&str, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let resolve = |name: &str| -> Result<usize> {
        lookup.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    };
    let edge_list = edges
        .iter()
        .map(|e| Ok((resolve(&e.u)?, resolve(&e.v)?, e.w.0.clone())))
        .collect::<Result<Vec<_>>>()?;
    Graph::new(vertices, edge_list)
}

/// Serializes `instance` as pretty JSON with a trailing newline.
/// Field order is fixed, so equal instances emit identical bytes.
pub fn emit_instance(instance: &Instance, name: Option<&str>) -> String {
    fn pretty<T: Serialize>(file: &T) -> String {
        let mut out = serde_json::to_string_pretty(file).expect("instance serialization cannot fail");
        out.push('\n');
        out
    }
    let name = name.map(str::to_owned);
    match instance {
        Instance::Ptp(p) => pretty(&PtpFile {
            model: "ptp".into(),
            name,
            stops: p.stops().iter().cloned().map(RatText).collect(),
            agents: p.agents().iter().map(|(s, t)| (RatText(s.clone()), RatText(t.clone()))).collect(),
            alpha: RatText(p.alpha().clone()),
            beta: p.beta(),
        }),
        Instance::Ntp(n) => pretty(&NtpFile {
            model: "ntp".into(),
            name,
            vertices: n.graph().names().to_vec(),
            edges: edge_files(n.graph()),
            agents: n
                .agents()
                .iter()
                .map(|&(s, t)| (n.graph().name(s).to_string(), n.graph().name(t).to_string()))
                .collect(),
            alpha: RatText(n.alpha().clone()),
            beta: n.beta(),
        }),
        Instance::Rdp(r) => pretty(&RdpFile {
            model: "rdp".into(),
            name,
            vertices: r.graph().names().to_vec(),
            edges: edge_files(r.graph()),
            demands: r
                .demands()
                .into_iter()
                .map(|(u, v, tau)| DemandFile {
                    u: r.graph().name(u).to_string(),
                    v: r.graph().name(v).to_string(),
                    tau: RatText(tau),
                })
                .collect(),
            zeta: CostText(r.zeta().clone()),
            budget: RatText(r.budget().clone()),
        }),
        Instance::SetCover(sc) => pretty(&SetCoverFile {
            model: "setcover".into(),
            name,
            universe: sc.universe().to_vec(),
            subsets: sc.subsets().to_vec(),
            rho: sc.rho(),
        }),
        Instance::VertexCover(vc) => pretty(&VertexCoverFile {
            model: "vertexcover".into(),
            name,
            vertices: vc.vertices().to_vec(),
            edges: vc
                .edges()
                .iter()
                .map(|&(u, v)| (vc.vertices()[u].clone(), vc.vertices()[v].clone()))
                .collect(),
            rho: vc.rho(),
        }),
    }
}

fn edge_files(graph: &Graph) -> Vec<EdgeFile> {
    graph
        .edges()
        .iter()
        .map(|e| EdgeFile {
            u: graph.name(e.u).to_string(),
            v: graph.name(e.v).to_string(),
            w: RatText(e.w.clone()),
        })
        .collect()
}
