//! Instance model and exact cost evaluation for both investment problems.
//!
//! A *line instance* fixes candidate stop positions, agents `(s, t)` with
//! `s <= t`, a discount factor and a stop budget. A *network instance*
//! fixes a connected weighted graph, agents given by terminal vertices, a
//! discount factor and an edge budget. [`Solution`] carries a selection
//! together with the exact per-agent cost vector and both welfare values.

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, Rat};
use num::{Signed, Zero};
use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

/// Which welfare value is the headline cost of a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Maximize fairness: cost of a selection is the worst agent cost.
    Egalitarian,
    /// Minimize the sum of agent costs.
    Utilitarian,
}

impl Objective {
    pub const BOTH: [Objective; 2] = [Objective::Egalitarian, Objective::Utilitarian];

    pub fn short(self) -> &'static str {
        match self {
            Objective::Egalitarian => "eg",
            Objective::Utilitarian => "ut",
        }
    }
}

/// The stops or edges an investment selects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Opened stop positions, sorted ascending.
    Stops(Vec<Rat>),
    /// Discounted edge ids, sorted ascending (ids index [`Graph::edges`]).
    Edges(Vec<usize>),
}

impl Selection {
    pub fn len(&self) -> usize {
        match self {
            Selection::Stops(v) => v.len(),
            Selection::Edges(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A fully evaluated selection.
///
/// `feasible` means the selection respects the instance budget. `total`
/// is the utilitarian cost, `max` the egalitarian cost (0 when there are
/// no agents). `clamped` marks a greedy-deletion run whose budget exceeded
/// the edge count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub selection: Selection,
    pub per_agent_costs: Vec<Rat>,
    pub total: Rat,
    pub max: Rat,
    pub feasible: bool,
    pub clamped: bool,
}

impl Solution {
    pub(crate) fn from_costs(selection: Selection, per_agent_costs: Vec<Rat>, feasible: bool) -> Self {
        let total = per_agent_costs.iter().fold(Rat::zero(), |acc, c| acc + c);
        let max = per_agent_costs.iter().max().cloned().unwrap_or_else(Rat::zero);
        Solution { selection, per_agent_costs, total, max, feasible, clamped: false }
    }

    /// The headline cost under `objective`.
    pub fn cost(&self, objective: Objective) -> &Rat {
        match objective {
            Objective::Egalitarian => &self.max,
            Objective::Utilitarian => &self.total,
        }
    }
}

// ---------------------------------------------------------------------------
// Line model
// ---------------------------------------------------------------------------

/// Bus-stop placement on the rational line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtpInstance {
    stops: Vec<Rat>,
    agents: Vec<(Rat, Rat)>,
    alpha: Rat,
    beta: usize,
}

impl PtpInstance {
    /// Validates and builds an instance. Stops are sorted; duplicates,
    /// agents with `s > t`, and `alpha` outside `[0, 1)` are rejected.
    pub fn new(mut stops: Vec<Rat>, agents: Vec<(Rat, Rat)>, alpha: Rat, beta: usize) -> Result<Self> {
        stops.sort();
        for w in stops.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid("stops", format!("duplicate position {}", fmt_rat(&w[0]))));
            }
        }
        check_alpha(&alpha)?;
        for (i, (s, t)) in agents.iter().enumerate() {
            if s > t {
                return Err(Error::invalid(
                    format!("agents[{i}]"),
                    format!("requires s <= t, got ({}, {})", fmt_rat(s), fmt_rat(t)),
                ));
            }
        }
        Ok(PtpInstance { stops, agents, alpha, beta })
    }

    pub fn stops(&self) -> &[Rat] {
        &self.stops
    }

    pub fn agents(&self) -> &[(Rat, Rat)] {
        &self.agents
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Returns a copy with a different candidate stop set (same agents,
    /// discount factor, and budget).
    pub fn with_stops(&self, stops: Vec<Rat>) -> Result<Self> {
        PtpInstance::new(stops, self.agents.clone(), self.alpha.clone(), self.beta)
    }

    /// The cost of agent `i` with no investment: `t - s`.
    pub fn walking_cost(&self, i: usize) -> Rat {
        let (s, t) = &self.agents[i];
        t - s
    }

    /// Cost of agent `i` when the stops in `selection` are open: the
    /// cheaper of walking and the best board/ride/alight plan
    /// `|s - v1| + alpha * |v2 - v1| + |t - v2|` over open stops `v1, v2`.
    ///
    /// `selection` must be a subset of the candidate stops and is used as
    /// a set (order and duplicates are ignored).
    pub fn agent_cost(&self, selection: &[Rat], i: usize) -> Rat {
        let sel = self.canonical_stops(selection);
        self.agent_cost_canonical(&sel, i)
    }

    /// `agent_cost` for a selection already sorted, deduplicated, and
    /// verified to consist of candidate stops.
    fn agent_cost_canonical(&self, sel: &[Rat], i: usize) -> Rat {
        let (s, t) = &self.agents[i];
        let mut best = t - s; // walking
        // The boarding stop can be restricted to the stops flanking s, and
        // the alighting stop to the stops flanking t: for s <= t, the plan
        // cost is convex piecewise-linear over v1 <= v2, and plans with
        // v1 > v2 cost at least the walk. Pairs with v1 = v2 also cost at
        // least the walk, which covers |selection| < 2 for free.
        for v1 in flanks(sel, s) {
            for v2 in flanks(sel, t) {
                if v1 > v2 {
                    continue;
                }
                let cand = abs_diff(s, v1) + &self.alpha * (v2 - v1) + abs_diff(t, v2);
                if cand < best {
                    best = cand;
                }
            }
        }
        best
    }

    /// Reference implementation of [`PtpInstance::agent_cost`] that
    /// enumerates every ordered stop pair. Used to validate the flank
    /// shortcut; exponentially slower on large selections, never wrong.
    pub fn agent_cost_enumerated(&self, selection: &[Rat], i: usize) -> Rat {
        let sel = self.canonical_stops(selection);
        let (s, t) = &self.agents[i];
        let mut best = t - s;
        for v1 in &sel {
            for v2 in &sel {
                let cand = abs_diff(s, v1) + &self.alpha * abs_diff(v2, v1) + abs_diff(t, v2);
                if cand < best {
                    best = cand;
                }
            }
        }
        best
    }

    /// Evaluates a stop selection exactly: per-agent costs, utilitarian
    /// total, egalitarian max, and the feasibility flag `|S| <= beta`.
    pub fn evaluate(&self, selection: &[Rat]) -> Solution {
        let sel = self.canonical_stops(selection);
        let costs: Vec<Rat> = (0..self.agents.len()).map(|i| self.agent_cost_canonical(&sel, i)).collect();
        let feasible = sel.len() <= self.beta;
        Solution::from_costs(Selection::Stops(sel), costs, feasible)
    }

    /// Sorts, deduplicates, and membership-checks a selection.
    /// Panics if a position is not a candidate stop (caller bug).
    fn canonical_stops(&self, selection: &[Rat]) -> Vec<Rat> {
        let mut sel: Vec<Rat> = selection.to_vec();
        sel.sort();
        sel.dedup();
        for p in &sel {
            assert!(
                self.stops.binary_search(p).is_ok(),
                "selection position {} is not a candidate stop",
                fmt_rat(p)
            );
        }
        sel
    }
}

/// The at-most-two selection entries flanking `x`: the largest stop `<= x`
/// and the smallest stop `>= x`.
fn flanks<'a>(sorted: &'a [Rat], x: &Rat) -> Vec<&'a Rat> {
    let mut out = Vec::with_capacity(2);
    let idx = sorted.partition_point(|v| v < x);
    if idx < sorted.len() {
        out.push(&sorted[idx]); // smallest >= x
    }
    if idx > 0 {
        out.push(&sorted[idx - 1]); // largest < x
    }
    out
}

fn abs_diff(a: &Rat, b: &Rat) -> Rat {
    (a - b).abs()
}

// ---------------------------------------------------------------------------
// Network model
// ---------------------------------------------------------------------------

/// An undirected edge with a non-negative rational weight; `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: Rat,
}

impl Edge {
    /// The endpoint opposite to `x`.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple undirected weighted graph with named vertices.
///
/// Edges are normalized to `u < v` and stored sorted by `(u, v)`, so edge
/// ids follow the lexicographic order on endpoint index pairs; every
/// deterministic tie-break on edges uses this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>, // (edge id, neighbor)
}

impl Graph {
    /// Builds a graph from vertex names and `(u, v, w)` triples over
    /// vertex indices. Rejects duplicate names, self-loops, parallel
    /// edges, negative weights, and out-of-range endpoints.
    pub fn new(names: Vec<String>, edge_list: Vec<(usize, usize, Rat)>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::invalid("vertices", "graph needs at least one vertex"));
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::invalid(format!("vertices[{i}]"), "empty vertex name"));
            }
            match index.entry(name.clone()) {
                Entry::Vacant(e) => {
                    e.insert(i);
                }
                Entry::Occupied(_) => {
                    return Err(Error::invalid(format!("vertices[{i}]"), format!("duplicate vertex name `{name}`")));
                }
            }
        }
        let n = names.len();
        let mut edges = Vec::with_capacity(edge_list.len());
        for (k, (a, b, w)) in edge_list.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::invalid(format!("edges[{k}]"), "endpoint is not a vertex"));
            }
            if a == b {
                return Err(Error::invalid(format!("edges[{k}]"), format!("self-loop at `{}`", names[a])));
            }
            if w.is_negative() {
                return Err(Error::invalid(format!("edges[{k}]"), format!("negative weight {}", fmt_rat(&w))));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { u, v, w });
        }
        edges.sort_by(|x, y| (x.u, x.v).cmp(&(y.u, y.v)));
        for w in edges.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(Error::invalid(
                    "edges",
                    format!("parallel edge between `{}` and `{}`", names[w[0].u], names[w[0].v]),
                ));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            adj[e.u].push((id, e.v));
            adj[e.v].push((id, e.u));
        }
        Ok(Graph { names, index, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Neighbors of `v` as `(edge id, other endpoint)`, in edge-id order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Looks a vertex up by name.
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// The id of the edge between two vertices, if present.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&key)).ok()
    }

    /// True when every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(_, u) in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// Single-source Dijkstra under the given per-edge weights (indexed by
    /// edge id; weights must be non-negative). Stops early once `target`
    /// is settled when one is given. Unreachable vertices stay `None`.
    pub fn shortest_paths(&self, source: usize, target: Option<usize>, weights: &[Rat]) -> Vec<Option<Rat>> {
        assert_eq!(weights.len(), self.edges.len());
        let n = self.vertex_count();
        let mut dist: Vec<Option<Rat>> = vec![None; n];
        let mut settled = vec![false; n];
        let mut heap: BinaryHeap<(Reverse<Rat>, usize)> = BinaryHeap::new();
        dist[source] = Some(Rat::zero());
        heap.push((Reverse(Rat::zero()), source));
        while let Some((Reverse(d), v)) = heap.pop() {
            if settled[v] {
                continue;
            }
            settled[v] = true;
            if target == Some(v) {
                break;
            }
            for &(eid, u) in &self.adj[v] {
                if settled[u] {
                    continue;
                }
                let nd = &d + &weights[eid];
                if dist[u].as_ref().is_none_or(|cur| nd < *cur) {
                    dist[u] = Some(nd.clone());
                    heap.push((Reverse(nd), u));
                }
            }
        }
        dist
    }

    /// [`Graph::shortest_paths`] where an edge may be unusable (`None`
    /// weight). Returns `None` for vertices unreachable over usable edges.
    pub fn shortest_paths_usable(
        &self,
        source: usize,
        target: Option<usize>,
        weights: &[Option<Rat>],
    ) -> Vec<Option<Rat>> {
        assert_eq!(weights.len(), self.edges.len());
        let n = self.vertex_count();
        let mut dist: Vec<Option<Rat>> = vec![None; n];
        let mut settled = vec![false; n];
        let mut heap: BinaryHeap<(Reverse<Rat>, usize)> = BinaryHeap::new();
        dist[source] = Some(Rat::zero());
        heap.push((Reverse(Rat::zero()), source));
        while let Some((Reverse(d), v)) = heap.pop() {
            if settled[v] {
                continue;
            }
            settled[v] = true;
            if target == Some(v) {
                break;
            }
            for &(eid, u) in &self.adj[v] {
                if settled[u] {
                    continue;
                }
                let Some(w) = &weights[eid] else { continue };
                let nd = &d + w;
                if dist[u].as_ref().is_none_or(|cur| nd < *cur) {
                    dist[u] = Some(nd.clone());
                    heap.push((Reverse(nd), u));
                }
            }
        }
        dist
    }
}

/// Edge discounting in a connected weighted network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtpInstance {
    graph: Graph,
    agents: Vec<(usize, usize)>,
    alpha: Rat,
    beta: usize,
}

impl NtpInstance {
    /// Validates and builds an instance. The graph must be connected and
    /// all agent terminals must be vertices.
    pub fn new(graph: Graph, agents: Vec<(usize, usize)>, alpha: Rat, beta: usize) -> Result<Self> {
        check_alpha(&alpha)?;
        if !graph.is_connected() {
            return Err(Error::invalid("graph", "graph must be connected"));
        }
        let n = graph.vertex_count();
        for (i, (s, t)) in agents.iter().enumerate() {
            if *s >= n || *t >= n {
                return Err(Error::invalid(format!("agents[{i}]"), "terminal is not a vertex"));
            }
        }
        Ok(NtpInstance { graph, agents, alpha, beta })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn agents(&self) -> &[(usize, usize)] {
        &self.agents
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Per-edge weights after discounting the selected edge ids.
    pub fn discounted_weights(&self, selection: &[usize]) -> Vec<Rat> {
        let mut w: Vec<Rat> = self.graph.edges().iter().map(|e| e.w.clone()).collect();
        for &e in selection {
            w[e] = &self.alpha * &self.graph.edges()[e].w;
        }
        w
    }

    /// The cost of agent `i` with no investment: the shortest-path
    /// distance under the original weights.
    pub fn walking_cost(&self, i: usize) -> Rat {
        let (s, t) = self.agents[i];
        let w: Vec<Rat> = self.graph.edges().iter().map(|e| e.w.clone()).collect();
        self.graph.shortest_paths(s, Some(t), &w)[t].clone().expect("connected graph")
    }

    /// Cost of agent `i` when the edges in `selection` are discounted:
    /// the shortest-path distance where a selected edge costs
    /// `alpha * w(e)` and every other edge costs `w(e)`.
    pub fn agent_cost(&self, selection: &[usize], i: usize) -> Rat {
        let sel = self.canonical_edges(selection);
        let w = self.discounted_weights(&sel);
        let (s, t) = self.agents[i];
        self.graph.shortest_paths(s, Some(t), &w)[t].clone().expect("connected graph")
    }

    /// Evaluates an edge selection exactly (see [`PtpInstance::evaluate`]).
    pub fn evaluate(&self, selection: &[usize]) -> Solution {
        let sel = self.canonical_edges(selection);
        let w = self.discounted_weights(&sel);
        let costs: Vec<Rat> = self
            .agents
            .iter()
            .map(|&(s, t)| self.graph.shortest_paths(s, Some(t), &w)[t].clone().expect("connected graph"))
            .collect();
        let feasible = sel.len() <= self.beta;
        Solution::from_costs(Selection::Edges(sel), costs, feasible)
    }

    /// Sorts, deduplicates, and range-checks an edge selection.
    /// Panics on an out-of-range edge id (caller bug).
    fn canonical_edges(&self, selection: &[usize]) -> Vec<usize> {
        let mut sel = selection.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if let Some(&e) = sel.last() {
            assert!(e < self.graph.edge_count(), "edge id {e} out of range");
        }
        sel
    }
}

fn check_alpha(alpha: &Rat) -> Result<()> {
    if alpha.is_negative() || *alpha >= Rat::from_integer(1.into()) {
        return Err(Error::invalid("alpha", "alpha must lie in [0,1)"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::samples;

    #[test]
    fn line_walking_costs() {
        let line = samples::four_agent_line();
        let walks: Vec<Rat> = (0..4).map(|i| line.walking_cost(i)).collect();
        assert_eq!(walks, vec![rat_int(6), rat_int(4), rat(7, 2), rat_int(4)]);
    }

    #[test]
    fn zero_length_agent_walks_for_free() {
        let line = PtpInstance::new(
            vec![rat_int(0), rat_int(1)],
            vec![(rat(1, 2), rat(1, 2))],
            rat(1, 4),
            2,
        )
        .unwrap();
        assert_eq!(line.walking_cost(0), rat_int(0));
        assert_eq!(line.agent_cost(&[rat_int(0), rat_int(1)], 0), rat_int(0));
    }

    #[test]
    fn network_walking_cost_matches_plain_shortest_path() {
        let net = samples::six_vertex_network();
        assert_eq!(net.walking_cost(0), rat_int(10));
    }

    #[test]
    fn line_agent_cost_single_segment() {
        let line = samples::four_agent_line();
        // Agent (1, 9/2) with stops {1, 5}: ride 1 -> 5 and walk back.
        let sel = [rat_int(1), rat_int(5)];
        assert_eq!(line.agent_cost(&sel, 2), rat(5, 2));
        // Empty selection: walking.
        assert_eq!(line.agent_cost(&[], 2), rat(7, 2));
    }

    #[test]
    fn line_agent_cost_alpha_zero() {
        let line = PtpInstance::new(
            vec![rat_int(0), rat(3, 2)],
            vec![(rat_int(0), rat_int(2))],
            Rat::zero(),
            2,
        )
        .unwrap();
        assert_eq!(line.agent_cost(&[rat_int(0), rat(3, 2)], 0), rat(1, 2));
    }

    #[test]
    fn network_agent_cost_examples() {
        let net = samples::six_vertex_network();
        // Discount (v1,v2) and (v2,t): ids under (u,v)-sorted order.
        let e_v1v2 = edge_id(&net, "v1", "v2");
        let e_v2t = edge_id(&net, "v2", "t");
        assert_eq!(net.agent_cost(&[e_v1v2, e_v2t], 0), rat(11, 2));
        assert_eq!(net.agent_cost(&[], 0), rat_int(10));

        let path = samples::unit_path4_alpha0();
        assert_eq!(path.agent_cost(&[0], 0), rat_int(2));
    }

    #[test]
    fn evaluate_reports_both_welfare_values() {
        let line = samples::four_agent_line();
        let s1 = line.evaluate(&[rat_int(1), rat_int(5)]);
        assert_eq!(s1.per_agent_costs, vec![rat_int(4), rat_int(3), rat(5, 2), rat_int(2)]);
        assert_eq!(s1.max, rat_int(4));
        assert_eq!(s1.total, rat(23, 2));
        assert!(s1.feasible);

        let s2 = line.evaluate(&[rat_int(0), rat_int(5)]);
        assert!(s2.per_agent_costs.iter().all(|c| *c == rat(7, 2)));
        assert_eq!(s2.max, rat(7, 2));
        assert_eq!(s2.total, rat_int(14));

        let empty = line.evaluate(&[]);
        assert_eq!(empty.max, rat_int(6));
        assert_eq!(empty.total, rat(35, 2));
    }

    #[test]
    fn infeasible_when_selection_exceeds_budget() {
        let line = samples::four_agent_line();
        let sol = line.evaluate(&[rat_int(0), rat_int(1), rat_int(2)]);
        assert!(!sol.feasible);
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(PtpInstance::new(vec![rat_int(0), rat_int(0)], vec![], Rat::zero(), 1).is_err());
        assert!(PtpInstance::new(vec![], vec![(rat_int(1), rat_int(0))], Rat::zero(), 1).is_err());
        assert!(PtpInstance::new(vec![], vec![], rat_int(1), 1).is_err());

        let names = vec!["a".to_string(), "b".to_string()];
        assert!(Graph::new(names.clone(), vec![(0, 0, rat_int(1))]).is_err());
        assert!(Graph::new(names.clone(), vec![(0, 1, rat_int(1)), (1, 0, rat_int(2))]).is_err());
        assert!(Graph::new(names.clone(), vec![(0, 1, rat_int(-1))]).is_err());

        // Disconnected graph.
        let g = Graph::new(vec!["a".into(), "b".into(), "c".into()], vec![(0, 1, rat_int(1))]).unwrap();
        assert!(NtpInstance::new(g, vec![], Rat::zero(), 1).is_err());
    }

    pub(crate) fn edge_id(net: &NtpInstance, a: &str, b: &str) -> usize {
        let (u, v) = (net.graph().vertex(a).unwrap(), net.graph().vertex(b).unwrap());
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        net.graph()
            .edges()
            .iter()
            .position(|e| (e.u, e.v) == (u, v))
            .unwrap_or_else(|| panic!("no edge {a}-{b}"))
    }
}
