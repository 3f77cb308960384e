//! Exact network solvers for one and two agents, built on budget mappings.
//!
//! A budget mapping `mu(b)` answers "cheapest route with at most `b`
//! discounts" for one origin/destination pair. Two mappings over segments
//! that share no discounted edge combine by splitting the budget:
//! min-plus for a sum of costs ([`merge_add`]), min-max when only the
//! worse of the two matters ([`merge_max`]). The two-agent solver rests
//! on a structural observation: an optimal discount set is either split
//! between the agents' own routes (the disjoint case) or concentrated
//! along one shared segment between two branch vertices `p` and `q`,
//! entered and left by each agent in one of four order combinations.
//! Minimizing over the disjoint case and all `(p, q)` pairs and orders is
//! therefore exact, which the test suite checks against the enumeration
//! oracle.

use crate::budget_dijkstra::{budget_dijkstra, reconstruct, BudgetMapping, BudgetTable};
use crate::error::{Error, Result};
use crate::model::{NtpInstance, Objective, PtpInstance, Solution};
use crate::rational::{rat_int, Rat};

/// Pointwise min-plus merge: `result(b) = min over b' of
/// `mu1(b') + mu2(b - b')`. The budget bounds must agree.
pub fn merge_add(mu1: &BudgetMapping, mu2: &BudgetMapping) -> Result<BudgetMapping> {
    merged(mu1, mu2, |a, b| a + b)
}

/// Min-max merge: `result(b) = min over b' of max(mu1(b'), mu2(b - b'))`.
/// The budget bounds must agree.
pub fn merge_max(mu1: &BudgetMapping, mu2: &BudgetMapping) -> Result<BudgetMapping> {
    merged(mu1, mu2, |a, b| if a >= b { a.clone() } else { b.clone() })
}

fn merged(mu1: &BudgetMapping, mu2: &BudgetMapping, combine: impl Fn(&Rat, &Rat) -> Rat) -> Result<BudgetMapping> {
    if mu1.beta() != mu2.beta() {
        return Err(Error::BudgetMismatch(mu1.beta(), mu2.beta()));
    }
    let beta = mu1.beta();
    let values: Vec<Rat> = (0..=beta)
        .map(|b| {
            (0..=b)
                .map(|b1| combine(mu1.get(b1), mu2.get(b - b1)))
                .min()
                .expect("at least one split")
        })
        .collect();
    Ok(BudgetMapping::new(values).expect("merges of monotone mappings are monotone"))
}

/// The split `(b', b - b')` realizing `merge(mu1, mu2)` at `b`, preferring
/// the smallest `b'` on ties.
fn best_split(mu1: &BudgetMapping, mu2: &BudgetMapping, b: usize, combine: impl Fn(&Rat, &Rat) -> Rat) -> usize {
    let mut best_b1 = 0;
    let mut best = combine(mu1.get(0), mu2.get(b));
    for b1 in 1..=b {
        let value = combine(mu1.get(b1), mu2.get(b - b1));
        if value < best {
            best = value;
            best_b1 = b1;
        }
    }
    best_b1
}

fn split_add(mu1: &BudgetMapping, mu2: &BudgetMapping, b: usize) -> usize {
    best_split(mu1, mu2, b, |a, c| a + c)
}

fn split_max(mu1: &BudgetMapping, mu2: &BudgetMapping, b: usize) -> usize {
    best_split(mu1, mu2, b, |a, c| if a >= c { a.clone() } else { c.clone() })
}

/// Doubles a mapping pointwise (a segment both agents pay for).
fn doubled(mu: &BudgetMapping) -> BudgetMapping {
    let two = rat_int(2);
    BudgetMapping::new(mu.values().iter().map(|v| &two * v).collect()).expect("doubling preserves monotonicity")
}

/// Which way the second agent traverses the shared segment relative to
/// the first: same direction (`p` to `q`) or opposite (`q` to `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharedOrder {
    Parallel,
    Antiparallel,
}

impl SharedOrder {
    pub const BOTH: [SharedOrder; 2] = [SharedOrder::Parallel, SharedOrder::Antiparallel];
}

/// One candidate two-agent plan: agent 1 rides its own segments `s -> p`
/// and `q -> t` around a shared segment `p -> q`; agent 2 enters the
/// shared segment at `entry2` and leaves it at `exit2` (`p`/`q` when
/// parallel, swapped when antiparallel).
#[derive(Clone, Debug)]
pub struct BranchDecomposition {
    pub p: usize,
    pub q: usize,
    pub order: SharedOrder,
    /// Agent 1, own source to `p`.
    pub mu_sp: BudgetMapping,
    /// Agent 1, `q` to own target.
    pub mu_qt: BudgetMapping,
    /// Agent 2, own source to its entry vertex.
    pub mu_entry2: BudgetMapping,
    /// Agent 2, its exit vertex to own target.
    pub mu_exit2: BudgetMapping,
    /// The shared segment `p` to `q`.
    pub mu_pq: BudgetMapping,
}

impl BranchDecomposition {
    /// The merged mapping of this plan under `objective`: private
    /// segments combine additively per agent; across agents they combine
    /// by max (egalitarian) or sum (utilitarian); the shared segment adds
    /// once, doubled for the utilitarian sum since both agents ride it.
    pub fn combined(&self, objective: Objective) -> BudgetMapping {
        let own1 = merge_add(&self.mu_sp, &self.mu_qt).expect("equal bounds");
        let own2 = merge_add(&self.mu_entry2, &self.mu_exit2).expect("equal bounds");
        match objective {
            Objective::Egalitarian => {
                let worst = merge_max(&own1, &own2).expect("equal bounds");
                merge_add(&worst, &self.mu_pq).expect("equal bounds")
            }
            Objective::Utilitarian => {
                let both = merge_add(&own1, &own2).expect("equal bounds");
                merge_add(&both, &doubled(&self.mu_pq)).expect("equal bounds")
            }
        }
    }
}

/// Exact solver for a single agent: one budgeted-Dijkstra run from its
/// source; the witness comes from path reconstruction. Both objectives
/// coincide for one agent.
pub fn solve_one_agent(instance: &NtpInstance) -> Result<Solution> {
    let [(s, t)] = instance.agents() else {
        return Err(Error::AgentCount { expected: "exactly 1", found: instance.agents().len() });
    };
    let (s, t) = (*s, *t);
    let table = budget_dijkstra(instance, s)?;
    let mapping = table.budget_mapping(t);
    let (_, discounted) = reconstruct(&table, t, instance.beta())?;
    let solution = instance.evaluate(&discounted);
    assert_eq!(
        solution.per_agent_costs[0],
        *mapping.best(),
        "reconstructed witness must reproduce the table distance"
    );
    Ok(solution)
}

/// Exact solver for two agents via the branch decomposition.
///
/// Enumerates the disjoint plan first, then every `(p, q)` pair and
/// traversal order in lexicographic order, keeping the first plan that
/// attains the minimum merged value at the full budget. The witness is
/// the union of the per-segment discount sets at the realizing budget
/// splits; re-evaluating it reproduces the optimum exactly, which is
/// asserted.
pub fn solve_two_agents(instance: &NtpInstance, objective: Objective) -> Result<Solution> {
    let [(s1, t1), (s2, t2)] = instance.agents() else {
        return Err(Error::AgentCount { expected: "exactly 2", found: instance.agents().len() });
    };
    let (s1, t1, s2, t2) = (*s1, *t1, *s2, *t2);
    let n = instance.graph().vertex_count();
    let beta = instance.beta();
    let tables: Vec<BudgetTable> = (0..n).map(|v| budget_dijkstra(instance, v)).collect::<Result<_>>()?;

    let mu_own1 = tables[s1].budget_mapping(t1);
    let mu_own2 = tables[s2].budget_mapping(t2);
    let disjoint = match objective {
        Objective::Egalitarian => merge_max(&mu_own1, &mu_own2)?,
        Objective::Utilitarian => merge_add(&mu_own1, &mu_own2)?,
    };

    let mut best_value = disjoint.best().clone();
    let mut best_plan: Option<BranchDecomposition> = None;
    for p in 0..n {
        for q in 0..n {
            for order in SharedOrder::BOTH {
                let (entry2, exit2) = match order {
                    SharedOrder::Parallel => (p, q),
                    SharedOrder::Antiparallel => (q, p),
                };
                let plan = BranchDecomposition {
                    p,
                    q,
                    order,
                    mu_sp: tables[s1].budget_mapping(p),
                    mu_qt: tables[t1].budget_mapping(q),
                    mu_entry2: tables[s2].budget_mapping(entry2),
                    mu_exit2: tables[t2].budget_mapping(exit2),
                    mu_pq: tables[p].budget_mapping(q),
                };
                let value = plan.combined(objective).best().clone();
                if value < best_value {
                    best_value = value;
                    best_plan = Some(plan);
                }
            }
        }
    }

    let witness = match &best_plan {
        None => {
            let b1 = match objective {
                Objective::Egalitarian => split_max(&mu_own1, &mu_own2, beta),
                Objective::Utilitarian => split_add(&mu_own1, &mu_own2, beta),
            };
            let (_, d1) = reconstruct(&tables[s1], t1, b1)?;
            let (_, d2) = reconstruct(&tables[s2], t2, beta - b1)?;
            union(vec![d1, d2])
        }
        Some(plan) => {
            let own1 = merge_add(&plan.mu_sp, &plan.mu_qt)?;
            let own2 = merge_add(&plan.mu_entry2, &plan.mu_exit2)?;
            let (b_own, b_pq) = match objective {
                Objective::Egalitarian => {
                    let worst = merge_max(&own1, &own2)?;
                    let b = split_add(&worst, &plan.mu_pq, beta);
                    (b, beta - b)
                }
                Objective::Utilitarian => {
                    let both = merge_add(&own1, &own2)?;
                    let b = split_add(&both, &doubled(&plan.mu_pq), beta);
                    (b, beta - b)
                }
            };
            let a1 = match objective {
                Objective::Egalitarian => split_max(&own1, &own2, b_own),
                Objective::Utilitarian => split_add(&own1, &own2, b_own),
            };
            let a2 = b_own - a1;
            let x = split_add(&plan.mu_sp, &plan.mu_qt, a1);
            let y = split_add(&plan.mu_entry2, &plan.mu_exit2, a2);
            let (entry2, exit2) = match plan.order {
                SharedOrder::Parallel => (plan.p, plan.q),
                SharedOrder::Antiparallel => (plan.q, plan.p),
            };
            let (_, d_sp) = reconstruct(&tables[s1], plan.p, x)?;
            let (_, d_qt) = reconstruct(&tables[t1], plan.q, a1 - x)?;
            let (_, d_e2) = reconstruct(&tables[s2], entry2, y)?;
            let (_, d_x2) = reconstruct(&tables[t2], exit2, a2 - y)?;
            let (_, d_pq) = reconstruct(&tables[plan.p], plan.q, b_pq)?;
            union(vec![d_sp, d_qt, d_e2, d_x2, d_pq])
        }
    };
    assert!(witness.len() <= beta, "segment budget splits sum to at most beta");

    let solution = instance.evaluate(&witness);
    assert_eq!(
        *solution.cost(objective),
        best_value,
        "two-agent witness must reproduce the merged optimum"
    );
    Ok(solution)
}

fn union(sets: Vec<Vec<usize>>) -> Vec<usize> {
    let mut all: Vec<usize> = sets.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    all
}

/// The no-investment benchmark: an empty selection, evaluated exactly.
/// With discount factor `alpha > 0` its cost is within `1/alpha` of the
/// optimum under either objective, since every ride still pays an
/// `alpha` fraction of its undiscounted length.
pub fn trivial_baseline_ntp(instance: &NtpInstance) -> Solution {
    instance.evaluate(&[])
}

/// [`trivial_baseline_ntp`] for the line model.
pub fn trivial_baseline_ptp(instance: &PtpInstance) -> Solution {
    instance.evaluate(&[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Graph, Selection};
    use crate::oracles::oracle_ntp;
    use crate::rational::{one_half, rat, rat_int};
    use crate::samples;

    fn mapping(values: &[(i64, i64)]) -> BudgetMapping {
        BudgetMapping::new(values.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn merge_add_matches_hand_checks() {
        let mu_t = mapping(&[(10, 1), (13, 2), (11, 2)]);
        let sum = merge_add(&mu_t, &mu_t).unwrap();
        assert_eq!(sum.values(), &[rat_int(20), rat(33, 2), rat_int(13)]);

        let mu1 = mapping(&[(4, 1), (1, 1), (1, 1)]);
        let mu2 = mapping(&[(3, 1), (2, 1), (0, 1)]);
        assert_eq!(merge_add(&mu1, &mu2).unwrap().values(), &[rat_int(7), rat_int(4), rat_int(3)]);
    }

    #[test]
    fn merge_max_matches_hand_checks() {
        let mu_t = mapping(&[(10, 1), (13, 2), (11, 2)]);
        let worst = merge_max(&mu_t, &mu_t).unwrap();
        assert_eq!(worst.values(), &[rat_int(10), rat_int(10), rat(13, 2)]);

        let mu1 = mapping(&[(4, 1), (1, 1), (1, 1)]);
        let mu2 = mapping(&[(3, 1), (2, 1), (0, 1)]);
        assert_eq!(merge_max(&mu1, &mu2).unwrap().values(), &[rat_int(4), rat_int(3), rat_int(2)]);
    }

    #[test]
    fn zero_mapping_is_the_additive_identity() {
        let mu = mapping(&[(10, 1), (13, 2), (11, 2)]);
        let zero = mapping(&[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(merge_add(&mu, &zero).unwrap(), mu);
        assert_eq!(merge_max(&mu, &zero).unwrap(), mu);
    }

    #[test]
    fn merges_reject_mismatched_bounds() {
        let mu1 = mapping(&[(1, 1)]);
        let mu2 = mapping(&[(1, 1), (0, 1)]);
        assert!(matches!(merge_add(&mu1, &mu2), Err(Error::BudgetMismatch(0, 1))));
    }

    #[test]
    fn one_agent_solver_matches_the_table() {
        let net = samples::six_vertex_network();
        let sol = solve_one_agent(&net).unwrap();
        assert_eq!(sol.max, rat(11, 2));
        assert_eq!(sol.selection, Selection::Edges(vec![2, 5]));
        assert!(sol.feasible);

        let one = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 1).unwrap();
        assert_eq!(solve_one_agent(&one).unwrap().max, rat(13, 2));

        let zero = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 0).unwrap();
        let sol0 = solve_one_agent(&zero).unwrap();
        assert_eq!(sol0.max, rat_int(10));
        assert_eq!(sol0.selection, Selection::Edges(vec![]));
    }

    #[test]
    fn one_agent_solver_rejects_other_counts() {
        let net = samples::six_vertex_network();
        let two = NtpInstance::new(net.graph().clone(), vec![(0, 5), (0, 5)], net.alpha().clone(), 2).unwrap();
        assert!(matches!(solve_one_agent(&two), Err(Error::AgentCount { .. })));
        assert!(matches!(solve_two_agents(&net, Objective::Egalitarian), Err(Error::AgentCount { .. })));
    }

    /// Two three-vertex paths joined by a bridge; each agent lives on its
    /// own path, so the optimal plan splits the budget disjointly.
    fn bridged_paths() -> NtpInstance {
        let names = ["a", "b", "c", "d", "e", "f"].map(String::from).to_vec();
        let edges = vec![
            (0, 1, rat_int(1)),
            (1, 2, rat_int(1)),
            (2, 3, rat_int(1)),
            (3, 4, rat_int(1)),
            (4, 5, rat_int(1)),
        ];
        let graph = Graph::new(names, edges).unwrap();
        NtpInstance::new(graph, vec![(0, 2), (3, 5)], one_half(), 2).unwrap()
    }

    #[test]
    fn two_agents_split_the_budget_when_routes_are_disjoint() {
        let net = bridged_paths();
        for objective in Objective::BOTH {
            let sol = solve_two_agents(&net, objective).unwrap();
            let oracle = oracle_ntp(&net, objective).unwrap();
            assert_eq!(*sol.cost(objective), oracle.optimum);
            assert!(sol.feasible);
        }
        let eg = solve_two_agents(&net, Objective::Egalitarian).unwrap();
        assert_eq!(eg.max, rat(3, 2));
        let ut = solve_two_agents(&net, Objective::Utilitarian).unwrap();
        assert_eq!(ut.total, rat_int(3));
    }

    #[test]
    fn identical_agents_share_everything() {
        let net = samples::six_vertex_network();
        let twin = NtpInstance::new(net.graph().clone(), vec![(0, 5), (0, 5)], net.alpha().clone(), 2).unwrap();
        let single = solve_one_agent(&net).unwrap();
        let eg = solve_two_agents(&twin, Objective::Egalitarian).unwrap();
        assert_eq!(eg.max, single.max);
        let ut = solve_two_agents(&twin, Objective::Utilitarian).unwrap();
        assert_eq!(ut.total, rat_int(2) * &single.max);
        for objective in Objective::BOTH {
            let oracle = oracle_ntp(&twin, objective).unwrap();
            let sol = solve_two_agents(&twin, objective).unwrap();
            assert_eq!(*sol.cost(objective), oracle.optimum);
        }
    }

    #[test]
    fn zero_budget_two_agents_reads_walking_costs() {
        let net = samples::six_vertex_network();
        let twin = NtpInstance::new(net.graph().clone(), vec![(0, 5), (0, 3)], net.alpha().clone(), 0).unwrap();
        let eg = solve_two_agents(&twin, Objective::Egalitarian).unwrap();
        assert_eq!(eg.max, rat_int(10));
        let ut = solve_two_agents(&twin, Objective::Utilitarian).unwrap();
        assert_eq!(ut.total, rat_int(14));
        assert_eq!(ut.selection, Selection::Edges(vec![]));
    }

    #[test]
    fn shared_segment_beats_disjoint_splits() {
        // Both agents must cross the same expensive middle edge; the
        // solver should spend the whole budget there.
        let names = ["s1", "s2", "p", "q", "t1", "t2"].map(String::from).to_vec();
        let edges = vec![
            (0, 2, rat_int(1)),
            (1, 2, rat_int(1)),
            (2, 3, rat_int(8)),
            (3, 4, rat_int(1)),
            (3, 5, rat_int(1)),
        ];
        let graph = Graph::new(names, edges).unwrap();
        let net = NtpInstance::new(graph, vec![(0, 4), (1, 5)], one_half(), 1).unwrap();
        for objective in Objective::BOTH {
            let sol = solve_two_agents(&net, objective).unwrap();
            let oracle = oracle_ntp(&net, objective).unwrap();
            assert_eq!(*sol.cost(objective), oracle.optimum);
        }
        let eg = solve_two_agents(&net, Objective::Egalitarian).unwrap();
        // Discount the middle edge: each agent pays 1 + 4 + 1.
        assert_eq!(eg.max, rat_int(6));
        assert_eq!(eg.selection, Selection::Edges(vec![2]));
    }

    #[test]
    fn baseline_is_the_empty_selection() {
        let line = samples::four_agent_line();
        let base = trivial_baseline_ptp(&line);
        assert_eq!(base.max, rat_int(6));
        assert_eq!(base.selection, Selection::Stops(vec![]));
        // Within 1/alpha of the optimum: 6 <= 2 * 7/2.
        assert!(base.max <= rat_int(2) * rat(7, 2));

        let net = samples::six_vertex_network();
        assert_eq!(trivial_baseline_ntp(&net).max, rat_int(10));
    }
}
