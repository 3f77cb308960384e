//! Budgeted single-source shortest paths.
//!
//! One run computes, for every vertex `v` and every budget `b <= beta`,
//! the cheapest source-to-`v` path when at most `b` of its edges are
//! discounted to `alpha` times their weight. States are *routing pairs*
//! `(v, b)` explored Dijkstra-style; settling a pivot `(v, b)` applies
//! three updates:
//!
//! * non-reducing: `D[v,b] + w(e) < D[u,b]` crosses edge `e = (v,u)` at
//!   full price;
//! * reducing: `D[v,b] + alpha * w(e) < D[u,b+1]` crosses it discounted,
//!   consuming one unit of budget (only when `b < beta`);
//! * budget-increasing: `D[v,b] < D[v,b+1]` carries a cheap low-budget
//!   value upward, which enforces that rows are non-increasing in `b`.
//!
//! All comparisons are strict, so the first writer wins on ties. The
//! priority queue is a lazy-deletion binary heap ordered by distance,
//! then budget, then vertex declaration index; that tie-break makes the
//! pivot sequence (and the optional trace) fully deterministic. The pair
//! `(source, b)` for `b >= 1` is never enqueued and neighbor scans skip
//! the source, so the source row is all zeros by convention. Budgets
//! beyond the edge count are vacuous and are clamped internally; a
//! [`BudgetMapping`] pads the clamped tail back out.

use crate::error::{Error, Result};
use crate::model::NtpInstance;
use crate::rational::{Cost, Rat};
use num::Zero;
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write as _;

/// A Dijkstra state: vertex plus discounts spent so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RoutingPair {
    pub vertex: usize,
    pub budget: usize,
}

/// How a routing pair obtained its final distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pred {
    /// Crossed `edge` from `from.vertex`, possibly at the discounted price.
    Move { from: RoutingPair, edge: usize, discounted: bool },
    /// Budget-increasing update: same vertex, one budget level below.
    Lift { from: RoutingPair },
}

/// The full `(vertex, budget)` distance matrix of one run, plus
/// predecessors for path reconstruction.
#[derive(Clone, Debug)]
pub struct BudgetTable {
    source: usize,
    beta: usize,
    beta_eff: usize,
    dist: Vec<Vec<Cost>>,
    pred: Vec<Vec<Option<Pred>>>,
}

/// The per-target view of a [`BudgetTable`]: `mu(b)` is the cheapest way
/// to reach the target spending at most `b` discounts. Values are
/// non-increasing in `b` and bounded below by `alpha * mu(0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BudgetMapping {
    values: Vec<Rat>,
}

impl BudgetMapping {
    /// Wraps explicit values; they must be non-empty and non-increasing.
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("mapping", "a budget mapping needs a value at budget 0"));
        }
        for w in values.windows(2) {
            if w[0] < w[1] {
                return Err(Error::invalid("mapping", "budget mapping values must be non-increasing"));
            }
        }
        Ok(BudgetMapping { values })
    }

    /// The budget bound: values run over `0..=beta()`.
    pub fn beta(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, b: usize) -> &Rat {
        &self.values[b]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// The no-investment value `mu(0)`.
    pub fn walking(&self) -> &Rat {
        &self.values[0]
    }

    /// The fully-invested value `mu(beta)`.
    pub fn best(&self) -> &Rat {
        self.values.last().expect("non-empty")
    }
}

impl BudgetTable {
    pub fn source(&self) -> usize {
        self.source
    }

    /// The budget bound the table was requested with.
    pub fn beta(&self) -> usize {
        self.beta
    }

    /// The effective bound after clamping to the edge count; matrix
    /// columns run over `0..=beta_eff()`.
    pub fn beta_eff(&self) -> usize {
        self.beta_eff
    }

    /// Distance of a routing pair; budgets beyond the clamp read the
    /// clamped column. The source row reads zero at every budget.
    pub fn dist(&self, vertex: usize, budget: usize) -> Cost {
        if vertex == self.source {
            return Cost::zero();
        }
        self.dist[vertex][budget.min(self.beta_eff)].clone()
    }

    pub fn pred(&self, pair: RoutingPair) -> Option<Pred> {
        self.pred[pair.vertex][pair.budget]
    }

    /// Extracts `mu(b) = dist(target, b)` for `b in 0..=beta`. The
    /// source maps to all zeros.
    pub fn budget_mapping(&self, target: usize) -> BudgetMapping {
        let values = (0..=self.beta)
            .map(|b| self.dist(target, b).expect_finite("connected graph has finite distances").clone())
            .collect();
        BudgetMapping { values }
    }
}

/// One applied update, for tracing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpdateRecord {
    pub target: RoutingPair,
    pub kind: UpdateKind,
    pub value: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpdateKind {
    NonReducing,
    Reducing,
    BudgetIncreasing,
}

impl UpdateKind {
    pub fn label(self) -> &'static str {
        match self {
            UpdateKind::NonReducing => "nonreducing",
            UpdateKind::Reducing => "reducing",
            UpdateKind::BudgetIncreasing => "lift",
        }
    }
}

/// One settled pivot: which pair, its distance, the updates it fired,
/// and the full distance matrix after they were applied.
#[derive(Clone, Debug)]
pub struct IterationRecord {
    pub pivot: RoutingPair,
    pub pivot_dist: Rat,
    pub updates: Vec<UpdateRecord>,
    pub snapshot: Vec<Vec<Cost>>,
}

/// The deterministic run log of [`budget_dijkstra_traced`].
#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub iterations: Vec<IterationRecord>,
}

/// Runs the budgeted search from `source` and returns the full table.
pub fn budget_dijkstra(instance: &NtpInstance, source: usize) -> Result<BudgetTable> {
    run(instance, source, None)
}

/// [`budget_dijkstra`] that also records every pivot and update.
pub fn budget_dijkstra_traced(instance: &NtpInstance, source: usize) -> Result<(BudgetTable, Trace)> {
    let mut trace = Trace::default();
    let table = run(instance, source, Some(&mut trace))?;
    Ok((table, trace))
}

fn run(instance: &NtpInstance, source: usize, mut trace: Option<&mut Trace>) -> Result<BudgetTable> {
    let graph = instance.graph();
    let n = graph.vertex_count();
    if source >= n {
        return Err(Error::invalid("source", format!("vertex index {source} out of range")));
    }
    let beta = instance.beta();
    let beta_eff = beta.min(graph.edge_count());
    let alpha = instance.alpha();

    let mut dist: Vec<Vec<Cost>> = vec![vec![Cost::Infinite; beta_eff + 1]; n];
    let mut pred: Vec<Vec<Option<Pred>>> = vec![vec![None; beta_eff + 1]; n];
    let mut settled = vec![vec![false; beta_eff + 1]; n];
    let mut heap: BinaryHeap<Reverse<(Rat, usize, usize)>> = BinaryHeap::new();
    dist[source][0] = Cost::Finite(Rat::zero());
    heap.push(Reverse((Rat::zero(), 0, source)));

    while let Some(Reverse((d, b, v))) = heap.pop() {
        if settled[v][b] || dist[v][b] != Cost::Finite(d.clone()) {
            continue; // stale heap entry
        }
        settled[v][b] = true;
        let pivot = RoutingPair { vertex: v, budget: b };
        let mut updates: Vec<UpdateRecord> = Vec::new();
        let mut apply = |dist: &mut Vec<Vec<Cost>>,
                         pred: &mut Vec<Vec<Option<Pred>>>,
                         heap: &mut BinaryHeap<Reverse<(Rat, usize, usize)>>,
                         target: RoutingPair,
                         value: Rat,
                         p: Pred,
                         kind: UpdateKind| {
            dist[target.vertex][target.budget] = Cost::Finite(value.clone());
            pred[target.vertex][target.budget] = Some(p);
            heap.push(Reverse((value.clone(), target.budget, target.vertex)));
            if trace.is_some() {
                updates.push(UpdateRecord { target, kind, value });
            }
        };

        // Budget-increasing update: carry this value up one budget level.
        if v != source && b < beta_eff && Cost::Finite(d.clone()) < dist[v][b + 1] {
            let target = RoutingPair { vertex: v, budget: b + 1 };
            apply(&mut dist, &mut pred, &mut heap, target, d.clone(), Pred::Lift { from: pivot }, UpdateKind::BudgetIncreasing);
        }

        for &(eid, u) in graph.neighbors(v) {
            if u == source {
                continue;
            }
            let w = &graph.edges()[eid].w;
            let full = &d + w;
            if Cost::Finite(full.clone()) < dist[u][b] {
                let target = RoutingPair { vertex: u, budget: b };
                apply(
                    &mut dist,
                    &mut pred,
                    &mut heap,
                    target,
                    full,
                    Pred::Move { from: pivot, edge: eid, discounted: false },
                    UpdateKind::NonReducing,
                );
            }
            if b < beta_eff {
                let cheap = &d + &(alpha * w);
                if Cost::Finite(cheap.clone()) < dist[u][b + 1] {
                    let target = RoutingPair { vertex: u, budget: b + 1 };
                    apply(
                        &mut dist,
                        &mut pred,
                        &mut heap,
                        target,
                        cheap,
                        Pred::Move { from: pivot, edge: eid, discounted: true },
                        UpdateKind::Reducing,
                    );
                }
            }
        }

        if let Some(t) = trace.as_deref_mut() {
            t.iterations.push(IterationRecord {
                pivot,
                pivot_dist: d,
                updates,
                snapshot: dist.clone(),
            });
        }
    }

    Ok(BudgetTable { source, beta, beta_eff, dist, pred })
}

/// Walks the predecessor chain of `(target, budget)` back to the source.
/// Returns the path's edge ids in travel order and the sorted set of
/// discounted edge ids (at most `budget` of them); re-evaluating the path
/// with exactly those discounts reproduces the table distance.
pub fn reconstruct(table: &BudgetTable, target: usize, budget: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let budget = budget.min(table.beta_eff);
    if !table.dist(target, budget).is_finite() {
        return Err(Error::NoPath);
    }
    let mut path = Vec::new();
    let mut discounted = Vec::new();
    let mut cur = RoutingPair { vertex: target, budget };
    if cur.vertex == table.source {
        return Ok((path, discounted));
    }
    loop {
        match table.pred(cur) {
            Some(Pred::Move { from, edge, discounted: disc }) => {
                path.push(edge);
                if disc {
                    discounted.push(edge);
                }
                cur = from;
            }
            Some(Pred::Lift { from }) => {
                cur = from;
            }
            None => {
                debug_assert!(cur.vertex == table.source && cur.budget == 0, "pred chain must end at the source");
                break;
            }
        }
    }
    path.reverse();
    discounted.sort_unstable();
    discounted.dedup();
    Ok((path, discounted))
}

/// Renders a trace as CSV: one row per iteration with the pivot, the
/// updates it fired (semicolon-separated `vertex:budget=value[kind]`),
/// and the post-iteration snapshot of every `vertex.b<budget>` cell.
pub fn trace_csv(instance: &NtpInstance, trace: &Trace) -> String {
    let graph = instance.graph();
    let width = trace
        .iterations
        .first()
        .map(|it| it.snapshot[0].len())
        .unwrap_or(1);
    let mut out = String::from("iteration,pivot,updates");
    for v in 0..graph.vertex_count() {
        for b in 0..width {
            let _ = write!(out, ",{}.b{}", graph.name(v), b);
        }
    }
    out.push('\n');
    for (i, it) in trace.iterations.iter().enumerate() {
        let _ = write!(out, "{},{}:{}", i + 1, graph.name(it.pivot.vertex), it.pivot.budget);
        let updates = it
            .updates
            .iter()
            .map(|u| {
                format!(
                    "{}:{}={}[{}]",
                    graph.name(u.target.vertex),
                    u.target.budget,
                    u.value,
                    u.kind.label()
                )
            })
            .collect::<Vec<_>>()
            .join(";");
        let _ = write!(out, ",{updates}");
        for row in &it.snapshot {
            for cell in row {
                let _ = write!(out, ",{cell}");
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::samples;

    fn frozen_table() -> (NtpInstance, BudgetTable, Trace) {
        let net = samples::six_vertex_network();
        let (table, trace) = budget_dijkstra_traced(&net, 0).unwrap();
        (net, table, trace)
    }

    #[test]
    fn final_matrix_matches_the_worked_run() {
        let (_, table, _) = frozen_table();
        let expect = [
            ("v1", [rat_int(1), rat(1, 2), rat(1, 2)]),
            ("v2", [rat_int(3), rat_int(2), rat(3, 2)]),
            ("v3", [rat_int(4), rat(5, 2), rat_int(2)]),
            ("v4", [rat_int(5), rat_int(4), rat_int(3)]),
            ("t", [rat_int(10), rat(13, 2), rat(11, 2)]),
        ];
        let net = samples::six_vertex_network();
        for (name, row) in expect {
            let v = net.graph().vertex(name).unwrap();
            for (b, want) in row.into_iter().enumerate() {
                assert_eq!(table.dist(v, b), Cost::Finite(want), "vertex {name} budget {b}");
            }
        }
        // Source row: zero at every budget by convention.
        for b in 0..=2 {
            assert_eq!(table.dist(0, b), Cost::zero());
        }
    }

    #[test]
    fn pivot_sequence_is_the_frozen_one() {
        let (net, _, trace) = frozen_table();
        let got: Vec<(String, usize)> = trace
            .iterations
            .iter()
            .map(|it| (net.graph().name(it.pivot.vertex).to_string(), it.pivot.budget))
            .collect();
        let want = [
            ("s", 0),
            ("v1", 1),
            ("v1", 2),
            ("v1", 0),
            ("v2", 2),
            ("v2", 1),
            ("v3", 2),
            ("v3", 1),
            ("v2", 0),
            ("v4", 2),
            ("v3", 0),
            ("v4", 1),
            ("v4", 0),
            ("t", 2),
            ("t", 1),
            ("t", 0),
        ];
        let want: Vec<(String, usize)> = want.iter().map(|(n, b)| (n.to_string(), *b)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn first_pivot_fires_the_four_source_updates() {
        let (net, _, trace) = frozen_table();
        let first = &trace.iterations[0];
        assert_eq!(first.pivot, RoutingPair { vertex: 0, budget: 0 });
        let name = |v: usize| net.graph().name(v).to_string();
        let got: Vec<(String, usize, UpdateKind, Rat)> = first
            .updates
            .iter()
            .map(|u| (name(u.target.vertex), u.target.budget, u.kind, u.value.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("v1".into(), 0, UpdateKind::NonReducing, rat_int(1)),
                ("v1".into(), 1, UpdateKind::Reducing, rat(1, 2)),
                ("v2".into(), 0, UpdateKind::NonReducing, rat_int(5)),
                ("v2".into(), 1, UpdateKind::Reducing, rat(5, 2)),
            ]
        );
    }

    #[test]
    fn zero_budget_degenerates_to_plain_dijkstra() {
        let net = samples::six_vertex_network();
        let zero = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 0).unwrap();
        let table = budget_dijkstra(&zero, 0).unwrap();
        let weights: Vec<Rat> = net.graph().edges().iter().map(|e| e.w.clone()).collect();
        let plain = net.graph().shortest_paths(0, None, &weights);
        for v in 0..net.graph().vertex_count() {
            assert_eq!(table.dist(v, 0), Cost::Finite(plain[v].clone().unwrap()));
        }
    }

    #[test]
    fn budget_mappings_read_rows() {
        let (net, table, _) = frozen_table();
        let t = net.graph().vertex("t").unwrap();
        let v4 = net.graph().vertex("v4").unwrap();
        assert_eq!(table.budget_mapping(t).values(), &[rat_int(10), rat(13, 2), rat(11, 2)]);
        assert_eq!(table.budget_mapping(v4).values(), &[rat_int(5), rat_int(4), rat_int(3)]);
        assert_eq!(table.budget_mapping(0).values(), &[rat_int(0), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn oversized_budget_is_clamped_and_padded() {
        let net = samples::six_vertex_network();
        let big = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 9).unwrap();
        let table = budget_dijkstra(&big, 0).unwrap();
        assert_eq!(table.beta_eff(), 6);
        let t = net.graph().vertex("t").unwrap();
        let mapping = table.budget_mapping(t);
        assert_eq!(mapping.beta(), 9);
        // Discounting every edge of the best path: (1 + 2 + 7) / 2.
        assert_eq!(*mapping.best(), rat_int(5));
        assert_eq!(mapping.get(7), mapping.get(9));
    }

    #[test]
    fn rows_are_non_increasing_in_budget() {
        let (net, table, _) = frozen_table();
        for v in 0..net.graph().vertex_count() {
            for b in 0..2 {
                assert!(table.dist(v, b + 1) <= table.dist(v, b));
            }
        }
    }

    #[test]
    fn pivot_distances_never_decrease() {
        let (_, _, trace) = frozen_table();
        for pair in trace.iterations.windows(2) {
            assert!(pair[0].pivot_dist <= pair[1].pivot_dist);
        }
    }

    #[test]
    fn reconstruction_replays_the_frozen_route() {
        let (net, table, _) = frozen_table();
        let t = net.graph().vertex("t").unwrap();
        let (path, discounted) = reconstruct(&table, t, 2).unwrap();
        let names: Vec<(&str, &str)> = path
            .iter()
            .map(|&e| {
                let edge = &net.graph().edges()[e];
                (net.graph().name(edge.u), net.graph().name(edge.v))
            })
            .collect();
        assert_eq!(names, vec![("s", "v1"), ("v1", "v2"), ("v2", "t")]);
        let ids: Vec<usize> = discounted.clone();
        assert_eq!(net.agent_cost(&ids, 0), rat(11, 2));
        assert_eq!(discounted.len(), 2);

        let (path0, disc0) = reconstruct(&table, t, 0).unwrap();
        assert_eq!(path0.len(), 3);
        assert!(disc0.is_empty());

        let (empty, none) = reconstruct(&table, 0, 0).unwrap();
        assert!(empty.is_empty() && none.is_empty());
    }

    #[test]
    fn trace_csv_has_one_row_per_pivot() {
        let (net, _, trace) = frozen_table();
        let csv = trace_csv(&net, &trace);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 17);
        assert!(lines[0].starts_with("iteration,pivot,updates,s.b0,s.b1,s.b2,v1.b0"));
        assert!(lines[1].starts_with("1,s:0,v1:0=1[nonreducing];v1:1=1/2[reducing];v2:0=5[nonreducing];v2:1=5/2[reducing]"));
        assert!(lines[16].contains("16,t:0"));
        // Final snapshot cells: t row reads 10, 13/2, 11/2.
        assert!(lines[16].ends_with("10,13/2,11/2"));
    }

    #[test]
    fn rejects_bad_sources_and_mappings() {
        let net = samples::six_vertex_network();
        assert!(budget_dijkstra(&net, 17).is_err());
        assert!(BudgetMapping::new(vec![]).is_err());
        assert!(BudgetMapping::new(vec![rat_int(1), rat_int(2)]).is_err());
        assert!(BudgetMapping::new(vec![rat_int(2), rat_int(1)]).is_ok());
    }
}
