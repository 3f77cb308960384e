//! Exhaustive ground-truth solvers.
//!
//! Every other solver in the crate is tested against these. They
//! enumerate the full feasible space, so they carry explicit size guards:
//! when the subset count `sum of C(l, k) for k <= beta` exceeds the cap,
//! they refuse with a too-large error instead of silently sampling.
//! Within the guard the reported optimum is exact by construction, and
//! `witnesses` lists *every* optimal selection in lexicographic order.

use crate::error::{Error, Result};
use crate::model::{NtpInstance, Objective, PtpInstance};
use crate::rational::Rat;
use num::{BigUint, One, Zero};

/// Default ceiling on the number of subsets an oracle call may visit.
pub const DEFAULT_ORACLE_CAP: usize = 1_000_000;

/// Largest graph `oracle_paths` will enumerate simple paths on.
pub const PATH_ORACLE_VERTEX_LIMIT: usize = 12;

/// The result of an exhaustive search: the exact optimum, every optimal
/// selection (lexicographically ordered), and how many subsets were
/// evaluated (`sum of C(l, k) for k <= beta`, the empty set included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport<S> {
    pub optimum: Rat,
    pub witnesses: Vec<S>,
    pub explored: usize,
}

/// `sum of C(l, k) for k = 0..=min(beta, l)`, exactly.
fn subset_count(l: usize, beta: usize) -> BigUint {
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    total += &binom;
    for k in 1..=beta.min(l) {
        binom = binom * BigUint::from(l - k + 1) / BigUint::from(k);
        total += &binom;
    }
    total
}

fn check_cap(l: usize, beta: usize, cap: usize, what: &str) -> Result<()> {
    let count = subset_count(l, beta);
    if count > BigUint::from(cap) {
        return Err(Error::TooLarge(format!(
            "{what} enumeration would visit {count} subsets, cap is {cap}"
        )));
    }
    Ok(())
}

/// Visits every index subset of `0..l` with at most `beta` elements, in
/// lexicographic order (a prefix before each of its extensions).
fn for_each_subset<F: FnMut(&[usize])>(l: usize, beta: usize, mut f: F) {
    fn rec<F: FnMut(&[usize])>(l: usize, beta: usize, start: usize, cur: &mut Vec<usize>, f: &mut F) {
        f(cur);
        if cur.len() == beta {
            return;
        }
        for i in start..l {
            cur.push(i);
            rec(l, beta, i + 1, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(beta.min(l));
    rec(l, beta, 0, &mut cur, &mut f);
}

/// Exact line-model optimum by enumerating all stop subsets within the
/// budget, with the default cap.
pub fn oracle_ptp(instance: &PtpInstance, objective: Objective) -> Result<OracleReport<Vec<Rat>>> {
    oracle_ptp_capped(instance, objective, DEFAULT_ORACLE_CAP)
}

/// [`oracle_ptp`] with an explicit subset cap.
pub fn oracle_ptp_capped(
    instance: &PtpInstance,
    objective: Objective,
    cap: usize,
) -> Result<OracleReport<Vec<Rat>>> {
    let stops = instance.stops();
    check_cap(stops.len(), instance.beta(), cap, "stop subset")?;
    let mut best: Option<Rat> = None;
    let mut witnesses: Vec<Vec<Rat>> = Vec::new();
    let mut explored = 0usize;
    for_each_subset(stops.len(), instance.beta(), |subset| {
        explored += 1;
        let sel: Vec<Rat> = subset.iter().map(|&i| stops[i].clone()).collect();
        let cost = instance.evaluate(&sel).cost(objective).clone();
        match &best {
            Some(b) if cost > *b => {}
            Some(b) if cost == *b => witnesses.push(sel),
            _ => {
                best = Some(cost);
                witnesses = vec![sel];
            }
        }
    });
    Ok(OracleReport { optimum: best.expect("at least the empty selection"), witnesses, explored })
}

/// Exact network-model optimum by enumerating all edge subsets within
/// the budget, with the default cap.
pub fn oracle_ntp(instance: &NtpInstance, objective: Objective) -> Result<OracleReport<Vec<usize>>> {
    oracle_ntp_capped(instance, objective, DEFAULT_ORACLE_CAP)
}

/// [`oracle_ntp`] with an explicit subset cap.
pub fn oracle_ntp_capped(
    instance: &NtpInstance,
    objective: Objective,
    cap: usize,
) -> Result<OracleReport<Vec<usize>>> {
    let l = instance.graph().edge_count();
    check_cap(l, instance.beta(), cap, "edge subset")?;
    let mut best: Option<Rat> = None;
    let mut witnesses: Vec<Vec<usize>> = Vec::new();
    let mut explored = 0usize;
    for_each_subset(l, instance.beta(), |subset| {
        explored += 1;
        let cost = instance.evaluate(subset).cost(objective).clone();
        match &best {
            Some(b) if cost > *b => {}
            Some(b) if cost == *b => witnesses.push(subset.to_vec()),
            _ => {
                best = Some(cost);
                witnesses = vec![subset.to_vec()];
            }
        }
    });
    Ok(OracleReport { optimum: best.expect("at least the empty selection"), witnesses, explored })
}

/// Reference for the budgeted shortest-path routine: the cheapest way to
/// route one agent using at most `budget` discounted edges, found by
/// enumerating every simple path between its terminals.
///
/// On a fixed path the best discount set is simply its `budget` heaviest
/// edges, and simple paths suffice because edge costs are non-negative
/// either way. Guarded to graphs of at most [`PATH_ORACLE_VERTEX_LIMIT`]
/// vertices; the number of simple paths can grow factorially.
pub fn oracle_paths(instance: &NtpInstance, agent: usize, budget: usize) -> Result<Rat> {
    let graph = instance.graph();
    let n = graph.vertex_count();
    if n > PATH_ORACLE_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!(
            "path enumeration is limited to {PATH_ORACLE_VERTEX_LIMIT} vertices, graph has {n}"
        )));
    }
    let (s, t) = instance.agents()[agent];
    let mut best: Option<Rat> = None;
    let mut visited = vec![false; n];
    let mut path_weights: Vec<Rat> = Vec::new();
    visited[s] = true;
    dfs_paths(instance, s, t, budget, &mut visited, &mut path_weights, &mut best);
    Ok(best.expect("terminals are connected"))
}

fn dfs_paths(
    instance: &NtpInstance,
    v: usize,
    t: usize,
    budget: usize,
    visited: &mut Vec<bool>,
    path_weights: &mut Vec<Rat>,
    best: &mut Option<Rat>,
) {
    if v == t {
        let cost = discounted_path_cost(path_weights, instance.alpha(), budget);
        if best.as_ref().is_none_or(|b| cost < *b) {
            *best = Some(cost);
        }
        return;
    }
    for &(eid, u) in instance.graph().neighbors(v) {
        if visited[u] {
            continue;
        }
        visited[u] = true;
        path_weights.push(instance.graph().edges()[eid].w.clone());
        dfs_paths(instance, u, t, budget, visited, path_weights, best);
        path_weights.pop();
        visited[u] = false;
    }
}

/// Cost of a path when its `budget` heaviest edges are discounted.
fn discounted_path_cost(weights: &[Rat], alpha: &Rat, budget: usize) -> Rat {
    let mut sorted: Vec<&Rat> = weights.iter().collect();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut cost = Rat::zero();
    for (i, w) in sorted.into_iter().enumerate() {
        if i < budget {
            cost += alpha * w;
        } else {
            cost += w;
        }
    }
    cost
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Graph;
    use crate::rational::{one_half, rat, rat_int};
    use crate::reductions::setcover_to_ntp;
    use crate::samples;
    use num::Zero;

    #[test]
    fn network_oracle_finds_the_frozen_optimum() {
        let net = samples::six_vertex_network();
        let report = oracle_ntp(&net, Objective::Egalitarian).unwrap();
        assert_eq!(report.optimum, rat(11, 2));
        // Edge ids in (u,v)-sorted order: 2 = (v1,v2), 5 = (v2,t).
        assert_eq!(report.witnesses, vec![vec![2, 5]]);
        assert_eq!(report.explored, 22); // C(6,0) + C(6,1) + C(6,2)
    }

    #[test]
    fn line_oracle_matches_hand_enumeration() {
        let line = samples::four_agent_line();
        let eg = oracle_ptp(&line, Objective::Egalitarian).unwrap();
        assert_eq!(eg.optimum, rat(7, 2));
        assert_eq!(eg.witnesses, vec![vec![rat_int(0), rat_int(5)]]);
        assert_eq!(eg.explored, 29); // C(7,0) + C(7,1) + C(7,2)

        let ut = oracle_ptp(&line, Objective::Utilitarian).unwrap();
        assert_eq!(ut.optimum, rat(23, 2));
        assert_eq!(
            ut.witnesses,
            vec![vec![rat_int(1), rat_int(4)], vec![rat_int(1), rat_int(5)]]
        );
    }

    #[test]
    fn half_stop_is_the_unique_winner() {
        let line = samples::two_interval_line();
        let report = oracle_ptp(&line, Objective::Egalitarian).unwrap();
        assert_eq!(report.optimum, rat(1, 2));
        assert_eq!(report.witnesses, vec![vec![rat_int(0), rat(3, 2)]]);
        assert_eq!(report.explored, 11);
    }

    #[test]
    fn zero_budget_reports_walking() {
        let line = PtpInstance::new(
            vec![rat_int(0), rat_int(1)],
            vec![(rat_int(0), rat_int(3))],
            one_half(),
            0,
        )
        .unwrap();
        let report = oracle_ptp(&line, Objective::Egalitarian).unwrap();
        assert_eq!(report.optimum, rat_int(3));
        assert_eq!(report.witnesses, vec![Vec::<Rat>::new()]);
        assert_eq!(report.explored, 1);
    }

    #[test]
    fn opening_both_terminals_is_free() {
        let line = PtpInstance::new(
            vec![rat_int(0), rat_int(1)],
            vec![(rat_int(0), rat_int(1))],
            Rat::zero(),
            2,
        )
        .unwrap();
        let report = oracle_ptp(&line, Objective::Utilitarian).unwrap();
        assert_eq!(report.optimum, Rat::zero());
        assert_eq!(report.witnesses[0], vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn cover_gadget_hits_its_threshold() {
        let red = setcover_to_ntp(&samples::chain_cover(), &one_half()).unwrap();
        let eg = oracle_ntp(&red.ntp, Objective::Egalitarian).unwrap();
        assert_eq!(eg.optimum, red.kappa_eg);
        let ut = oracle_ntp(&red.ntp, Objective::Utilitarian).unwrap();
        assert_eq!(ut.optimum, red.kappa_ut);
    }

    #[test]
    fn cap_is_a_hard_error() {
        let net = samples::six_vertex_network();
        let err = oracle_ntp_capped(&net, Objective::Egalitarian, 10).unwrap_err();
        assert!(matches!(err, Error::TooLarge(_)));
        assert!(err.to_string().contains("22"));
    }

    #[test]
    fn path_oracle_matches_frozen_row() {
        let net = samples::six_vertex_network();
        assert_eq!(oracle_paths(&net, 0, 0).unwrap(), rat_int(10));
        assert_eq!(oracle_paths(&net, 0, 1).unwrap(), rat(13, 2));
        assert_eq!(oracle_paths(&net, 0, 2).unwrap(), rat(11, 2));
        assert_eq!(oracle_paths(&net, 0, 3).unwrap(), rat_int(5));
        assert_eq!(oracle_paths(&net, 0, 9).unwrap(), rat_int(5));
    }

    #[test]
    fn path_oracle_guards_large_graphs() {
        let n = 13;
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(usize, usize, Rat)> = (1..n).map(|i| (i - 1, i, Rat::one())).collect();
        let graph = Graph::new(names, edges).unwrap();
        let net = NtpInstance::new(graph, vec![(0, n - 1)], one_half(), 1).unwrap();
        assert!(matches!(oracle_paths(&net, 0, 1), Err(Error::TooLarge(_))));
    }

    #[test]
    fn subset_count_is_exact() {
        assert_eq!(subset_count(6, 2), BigUint::from(22u32));
        assert_eq!(subset_count(4, 9), BigUint::from(16u32));
        assert_eq!(subset_count(0, 3), BigUint::from(1u32));
        // 35 choose 0..=9, checked by summing the rows by hand.
        assert_eq!(subset_count(35, 9), BigUint::from(102_875_128u64));
    }
}
