//! Hardness gadgets and the railway-discount conversion.
//!
//! Two classic covering problems embed into the investment models, which
//! pins down their complexity and provides adversarial test instances:
//!
//! * **Set cover into the network model.** Items and subsets become a
//!   bipartite incidence graph with a shared target `t`; every item wants
//!   to reach `t`. A cover with at most `rho` subsets exists exactly when
//!   budget `|U| + rho` pushes the worst agent cost down to `2 * alpha`
//!   (every item rides two discounted unit edges). Without one, some
//!   agent pays at least `1 + alpha`, so the thresholds are separated.
//! * **Vertex cover into the line model.** Vertices become integer stop
//!   positions; each position gets a detour stop at offset `1/10`, and a
//!   final constraint stop forces `|U| + 1` of the budget to be spent on
//!   detours. The remaining `rho` stops can land on vertex positions, and
//!   an edge agent gets cost at most `1/10` exactly when one of its
//!   endpoints is open. Yes-instances reach worst cost `1/10`; no-instances
//!   cannot beat `1/5`.
//!
//! The third construction turns a unit-weight network instance into a
//! railway discount problem: instead of discounting selected edges, the
//! railway model *penalizes* unselected ones by `zeta = 1/alpha`, which
//! scales every cost by exactly `zeta` and therefore preserves argmin
//! selections. Weights other than 1 change how the two budgets interact,
//! so the conversion rejects them.

use crate::error::{Error, Result};
use crate::model::{Graph, NtpInstance, Objective, PtpInstance};
use crate::rational::{fmt_rat, rat, rat_int, Cost, Rat};
use num::{One, Signed, Zero};
use std::collections::HashMap;

/// A set-cover decision instance: does `subsets` contain `rho` members
/// whose union is `universe`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe: Vec<String>,
    subsets: Vec<Vec<String>>,
    rho: usize,
}

impl SetCoverInstance {
    /// Validates and builds an instance: items distinct, every subset a
    /// duplicate-free collection of items, `rho <= |subsets|`.
    pub fn new(universe: Vec<String>, subsets: Vec<Vec<String>>, rho: usize) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, item) in universe.iter().enumerate() {
            if item.is_empty() {
                return Err(Error::invalid(format!("universe[{i}]"), "empty item name"));
            }
            if seen.insert(item.clone(), i).is_some() {
                return Err(Error::invalid(format!("universe[{i}]"), format!("duplicate item `{item}`")));
            }
        }
        for (j, subset) in subsets.iter().enumerate() {
            let mut members = std::collections::HashSet::new();
            for item in subset {
                if !seen.contains_key(item) {
                    return Err(Error::invalid(
                        format!("subsets[{j}]"),
                        format!("`{item}` is not a universe item"),
                    ));
                }
                if !members.insert(item) {
                    return Err(Error::invalid(format!("subsets[{j}]"), format!("duplicate member `{item}`")));
                }
            }
        }
        if rho > subsets.len() {
            return Err(Error::invalid(
                "rho",
                format!("rho = {rho} exceeds the number of subsets ({})", subsets.len()),
            ));
        }
        Ok(SetCoverInstance { universe, subsets, rho })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn subsets(&self) -> &[Vec<String>] {
        &self.subsets
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    /// True when the chosen subset indices cover the whole universe.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered: std::collections::HashSet<&str> = std::collections::HashSet::new();
        for &j in chosen {
            for item in &self.subsets[j] {
                covered.insert(item);
            }
        }
        self.universe.iter().all(|item| covered.contains(item.as_str()))
    }

    /// Decides by brute force whether some `rho` subsets cover the
    /// universe. Exponential in `|subsets|`; meant for small instances.
    pub fn has_cover(&self) -> bool {
        let m = self.subsets.len();
        let mut chosen = Vec::new();
        self.search_cover(0, m, &mut chosen)
    }

    fn search_cover(&self, from: usize, m: usize, chosen: &mut Vec<usize>) -> bool {
        if self.is_cover(chosen) {
            return true;
        }
        if chosen.len() == self.rho {
            return false;
        }
        for j in from..m {
            chosen.push(j);
            if self.search_cover(j + 1, m, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// A vertex-cover decision instance: do `rho` vertices touch every edge?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCoverInstance {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    rho: usize,
}

impl VertexCoverInstance {
    /// Validates and builds an instance: a simple graph given by vertex
    /// names and name pairs, and `rho <= |vertices|`. Edges are
    /// normalized to index pairs `u < v` and sorted.
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String)>, rho: usize) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, name) in vertices.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::invalid(format!("vertices[{i}]"), "empty vertex name"));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::invalid(format!("vertices[{i}]"), format!("duplicate vertex `{name}`")));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (k, (a, b)) in edges.iter().enumerate() {
            let (Some(&u), Some(&v)) = (index.get(a), index.get(b)) else {
                return Err(Error::invalid(format!("edges[{k}]"), "endpoint is not a vertex"));
            };
            if u == v {
                return Err(Error::invalid(format!("edges[{k}]"), format!("self-loop at `{a}`")));
            }
            idx_edges.push(if u < v { (u, v) } else { (v, u) });
        }
        idx_edges.sort_unstable();
        for w in idx_edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid(
                    "edges",
                    format!("duplicate edge between `{}` and `{}`", vertices[w[0].0], vertices[w[0].1]),
                ));
            }
        }
        if rho > vertices.len() {
            return Err(Error::invalid(
                "rho",
                format!("rho = {rho} exceeds the number of vertices ({})", vertices.len()),
            ));
        }
        Ok(VertexCoverInstance { vertices, edges: idx_edges, rho })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Edges as sorted index pairs `u < v` into [`VertexCoverInstance::vertices`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    /// True when the chosen vertex indices touch every edge.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        self.edges.iter().all(|&(u, v)| chosen.contains(&u) || chosen.contains(&v))
    }

    /// Decides by brute force whether some `rho` vertices cover all
    /// edges. Exponential in `|vertices|`; meant for small instances.
    pub fn has_cover(&self) -> bool {
        let n = self.vertices.len();
        let mut chosen = Vec::new();
        self.search_cover(0, n, &mut chosen)
    }

    fn search_cover(&self, from: usize, n: usize, chosen: &mut Vec<usize>) -> bool {
        if self.is_cover(chosen) {
            return true;
        }
        if chosen.len() == self.rho {
            return false;
        }
        for v in from..n {
            chosen.push(v);
            if self.search_cover(v + 1, n, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// The railway discount problem: pick edges of total weight at most
/// `budget`; travel on a picked edge costs `w(e)`, elsewhere `zeta * w(e)`.
/// Demand `tau(u, v)` weights the shortest-path cost between `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdpInstance {
    graph: Graph,
    tau: Vec<Vec<Rat>>,
    zeta: Cost,
    budget: Rat,
}

impl RdpInstance {
    /// Validates and builds an instance: finite `zeta` must exceed 1,
    /// the budget and all demands must be non-negative, and no demand may
    /// sit on the diagonal. Demands are symmetrized; repeated entries for
    /// the same pair accumulate.
    pub fn new(graph: Graph, demands: Vec<(usize, usize, Rat)>, zeta: Cost, budget: Rat) -> Result<Self> {
        if let Cost::Finite(z) = &zeta {
            if *z <= Rat::one() {
                return Err(Error::invalid("zeta", format!("zeta must exceed 1, got {}", fmt_rat(z))));
            }
        }
        if budget.is_negative() {
            return Err(Error::invalid("budget", "budget must be non-negative"));
        }
        let n = graph.vertex_count();
        let mut tau = vec![vec![Rat::zero(); n]; n];
        for (k, (u, v, d)) in demands.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("demands[{k}]"), "endpoint is not a vertex"));
            }
            if u == v {
                return Err(Error::invalid(
                    format!("demands[{k}]"),
                    format!("demand on the diagonal at `{}`", graph.name(u)),
                ));
            }
            if d.is_negative() {
                return Err(Error::invalid(format!("demands[{k}]"), "negative demand"));
            }
            tau[u][v] += &d;
            tau[v][u] += &d;
        }
        Ok(RdpInstance { graph, tau, zeta, budget })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn zeta(&self) -> &Cost {
        &self.zeta
    }

    pub fn budget(&self) -> &Rat {
        &self.budget
    }

    /// The symmetric demand between two vertices.
    pub fn tau(&self, u: usize, v: usize) -> &Rat {
        &self.tau[u][v]
    }

    /// Demanded unordered pairs `(u, v, tau)` with `u < v` and `tau > 0`,
    /// in lexicographic order.
    pub fn demands(&self) -> Vec<(usize, usize, Rat)> {
        let n = self.graph.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.tau[u][v].is_zero() {
                    out.push((u, v, self.tau[u][v].clone()));
                }
            }
        }
        out
    }
}

/// A set-cover gadget: network instance plus the two decision thresholds.
/// The cover decision is a yes exactly when the egalitarian optimum equals
/// `kappa_eg` (equivalently, the utilitarian optimum equals `kappa_ut`).
#[derive(Clone, Debug)]
pub struct SetCoverReduction {
    pub ntp: NtpInstance,
    pub kappa_eg: Rat,
    pub kappa_ut: Rat,
}

/// Embeds a set-cover instance into the network model.
///
/// Vertices `x_<item>` (one per item, universe order), `y_<j>` (one per
/// subset, input order), and `t`, all joined by unit edges: `x_u - y_j`
/// for `u` in subset `j`, and `y_j - t` per subset. One agent `(x_u, t)`
/// per item; budget `|U| + rho`. Thresholds: `kappa_eg = 2 * alpha`,
/// `kappa_ut = 2 * alpha * |U|`.
///
/// An item no subset contains would leave its vertex disconnected, which
/// the network model rejects; that case is reported as an error here.
pub fn setcover_to_ntp(sc: &SetCoverInstance, alpha: &Rat) -> Result<SetCoverReduction> {
    let items = sc.universe();
    let subsets = sc.subsets();
    let mut names: Vec<String> = Vec::with_capacity(items.len() + subsets.len() + 1);
    let mut item_index = HashMap::new();
    for (i, item) in items.iter().enumerate() {
        item_index.insert(item.as_str(), i);
        names.push(format!("x_{item}"));
    }
    for j in 0..subsets.len() {
        names.push(format!("y_{j}"));
    }
    let t = names.len();
    names.push("t".to_string());

    let mut covered = vec![false; items.len()];
    let mut edges = Vec::new();
    for (j, subset) in subsets.iter().enumerate() {
        let yj = items.len() + j;
        for item in subset {
            let i = item_index[item.as_str()];
            covered[i] = true;
            edges.push((i, yj, Rat::one()));
        }
        edges.push((yj, t, Rat::one()));
    }
    if let Some(i) = covered.iter().position(|c| !c) {
        if !items.is_empty() {
            return Err(Error::invalid(
                "subsets",
                format!("item `{}` is in no subset, so the reduced graph would be disconnected", items[i]),
            ));
        }
    }
    // An empty universe still needs a connected graph: drop the subset
    // vertices (they would hang off t without changing any decision) and
    // keep the lone target.
    let (names, edges) = if items.is_empty() {
        (vec!["t".to_string()], Vec::new())
    } else {
        (names, edges)
    };
    let graph = Graph::new(names, edges)?;
    let t = graph.vertex("t")?;
    let agents = (0..items.len()).map(|i| (i, t)).collect();
    let beta = items.len() + sc.rho();
    let ntp = NtpInstance::new(graph, agents, alpha.clone(), beta)?;
    let two_alpha = rat_int(2) * alpha;
    let kappa_ut = &two_alpha * rat_int(items.len() as i64);
    // With no agents the maximum over agents is 0, so the egalitarian
    // threshold must be 0 as well for the equivalence to stay exact.
    let kappa_eg = if items.is_empty() { Rat::zero() } else { two_alpha };
    Ok(SetCoverReduction { ntp, kappa_eg, kappa_ut })
}

/// A vertex-cover gadget: line instance plus the decision threshold.
/// The cover decision is a yes exactly when the egalitarian optimum is at
/// most `kappa`; no-instances have optimum at least `2 * kappa`.
#[derive(Clone, Debug)]
pub struct VertexCoverReduction {
    pub ptp: PtpInstance,
    pub kappa: Rat,
}

/// Embeds a vertex-cover instance into the line model.
///
/// Vertex `i` (declaration order, 1-based) sits at position `i`; candidate
/// stops are those integer positions, a detour stop `i + 1/10` for each,
/// and a constraint stop `(n+1) + 1/10`. Each graph edge becomes an agent
/// between its endpoint positions; each vertex adds a constraint agent
/// `(i + 1/10, n + 1)` whose cost can never drop below `1/10` and reaches
/// it only when all detour stops and the constraint stop are open. Riding
/// is free (`alpha = 0`) and the budget is `n + 1 + rho`, so a yes answer
/// leaves exactly `rho` stops for vertex positions.
pub fn vertexcover_to_ptp(vc: &VertexCoverInstance) -> Result<VertexCoverReduction> {
    let n = vc.vertices().len() as i64;
    let tenth = rat(1, 10);
    let mut stops = Vec::with_capacity(2 * n as usize + 1);
    for i in 1..=n {
        stops.push(rat_int(i));
        stops.push(rat_int(i) + &tenth);
    }
    stops.push(rat_int(n + 1) + &tenth);

    let mut agents = Vec::new();
    for &(u, v) in vc.edges() {
        agents.push((rat_int(u as i64 + 1), rat_int(v as i64 + 1)));
    }
    for i in 1..=n {
        agents.push((rat_int(i) + &tenth, rat_int(n + 1)));
    }
    let beta = n as usize + 1 + vc.rho();
    let ptp = PtpInstance::new(stops, agents, Rat::zero(), beta)?;
    Ok(VertexCoverReduction { ptp, kappa: tenth })
}

/// Converts a unit-weight network instance into the railway model:
/// same graph, demand = agent multiplicity per unordered terminal pair,
/// penalty `zeta = 1/alpha` (infinite when `alpha = 0`), and weight budget
/// equal to the edge budget. Every selection then costs exactly `zeta`
/// times its network cost, so optimal selections coincide.
///
/// Edge weights other than 1 make the weight budget and the edge-count
/// budget diverge, so they are rejected as inapplicable. Agents already
/// at their destination carry no demand and are dropped.
pub fn ntp_to_rdp(ntp: &NtpInstance) -> Result<RdpInstance> {
    for e in ntp.graph().edges() {
        if !e.w.is_one() {
            return Err(Error::Inapplicable(format!(
                "railway conversion needs unit weights, found {} between `{}` and `{}`",
                fmt_rat(&e.w),
                ntp.graph().name(e.u),
                ntp.graph().name(e.v)
            )));
        }
    }
    let zeta = if ntp.alpha().is_zero() {
        Cost::Infinite
    } else {
        Cost::Finite(crate::rational::recip(ntp.alpha()))
    };
    let mut demand: HashMap<(usize, usize), Rat> = HashMap::new();
    for &(s, t) in ntp.agents() {
        if s == t {
            continue;
        }
        let key = if s < t { (s, t) } else { (t, s) };
        *demand.entry(key).or_insert_with(Rat::zero) += Rat::one();
    }
    let mut demands: Vec<(usize, usize, Rat)> = demand.into_iter().map(|((u, v), d)| (u, v, d)).collect();
    demands.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    RdpInstance::new(ntp.graph().clone(), demands, zeta, rat_int(ntp.beta() as i64))
}

/// Exact cost of a railway selection under one objective.
///
/// Travel costs are `w(e)` on selected edges and `zeta * w(e)` elsewhere
/// (a zero-weight edge stays free even under an infinite penalty).
/// Egalitarian cost is the maximum of `tau(u,v) * dist(u,v)` over
/// demanded pairs, utilitarian cost their sum over unordered pairs; a
/// demanded pair that cannot be connected makes the cost infinite, while
/// pairs with zero demand never contribute.
pub fn rdp_cost(rdp: &RdpInstance, selection: &[usize], objective: Objective) -> Cost {
    let graph = rdp.graph();
    let mut selected = vec![false; graph.edge_count()];
    for &e in selection {
        assert!(e < graph.edge_count(), "edge id {e} out of range");
        selected[e] = true;
    }
    let weights: Vec<Option<Rat>> = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(id, e)| {
            if selected[id] {
                Some(e.w.clone())
            } else {
                match rdp.zeta() {
                    Cost::Finite(z) => Some(z * &e.w),
                    Cost::Infinite if e.w.is_zero() => Some(Rat::zero()),
                    Cost::Infinite => None,
                }
            }
        })
        .collect();

    let mut total = Cost::zero();
    let mut worst = Cost::zero();
    for (u, v, tau) in rdp.demands() {
        let dist = graph.shortest_paths_usable(u, Some(v), &weights)[v].clone();
        let contribution = match dist {
            Some(d) => Cost::Finite(tau * d),
            None => Cost::Infinite,
        };
        if contribution > worst {
            worst = contribution.clone();
        }
        total = total.add(&contribution);
    }
    match objective {
        Objective::Egalitarian => worst,
        Objective::Utilitarian => total,
    }
}

/// Whether a railway selection respects the weight budget:
/// `sum of w(e) over selected e <= budget`.
pub fn rdp_feasible(rdp: &RdpInstance, selection: &[usize]) -> bool {
    let mut sel = selection.to_vec();
    sel.sort_unstable();
    sel.dedup();
    let spent = sel.iter().fold(Rat::zero(), |acc, &e| acc + &rdp.graph().edges()[e].w);
    spent <= *rdp.budget()
}
