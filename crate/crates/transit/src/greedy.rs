//! Greedy edge-investment heuristics and the family that defeats them.
//!
//! Both heuristics are natural: `greedy_up` starts empty and adds the
//! edge whose discount helps most, `beta` times; `greedy_down` starts
//! with everything discounted and repeatedly gives up the edge whose
//! loss hurts least. Ties break toward the lexicographically smallest
//! edge, so runs are deterministic.
//!
//! Neither is an approximation algorithm, and [`make_adversarial`]
//! constructs the witness family. Each of `beta + 1` agents has a
//! private direct route of `beta + 1` edges whose first edge is slightly
//! heavier (`1 + eps_i`); a shared motorway connects all sources to all
//! targets through hub edges. Greedy chases the slightly-heavy private
//! edges one agent at a time and ends at `S_up` (cost `beta + 1 + eps_0`
//! egalitarian), while spending the same budget on the motorway yields
//! cost at most `3 + alpha * beta`. As `beta` grows the ratio tends to
//! `alpha` times the trivial no-investment baseline, i.e. greedy can be
//! as bad as investing nothing at all.

use crate::error::{Error, Result};
use crate::model::{Graph, NtpInstance, Objective, Solution};
use crate::rational::{rat_int, recip, Rat};
use num::{One, Signed, Zero};

/// Parameters of the adversarial family: discount factor, budget, and
/// the strictly increasing perturbations `eps_0 < ... < eps_beta`.
///
/// Every `eps_i` must be positive and smaller than `min(1, 1/alpha - 1)`
/// (smaller than 1 when `alpha = 0`); the construction's cost ordering
/// arguments need exactly that headroom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdversarialParams {
    alpha: Rat,
    beta: usize,
    epsilons: Vec<Rat>,
}

impl AdversarialParams {
    pub fn new(alpha: Rat, beta: usize, epsilons: Vec<Rat>) -> Result<Self> {
        if alpha.is_negative() || alpha >= Rat::one() {
            return Err(Error::invalid("alpha", "alpha must lie in [0,1)"));
        }
        if beta == 0 {
            return Err(Error::invalid("beta", "the adversarial family needs beta >= 1"));
        }
        if epsilons.len() != beta + 1 {
            return Err(Error::invalid(
                "epsilons",
                format!("need beta + 1 = {} values, got {}", beta + 1, epsilons.len()),
            ));
        }
        if !epsilons[0].is_positive() {
            return Err(Error::invalid("epsilons", "eps_0 must be positive"));
        }
        for w in epsilons.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::invalid("epsilons", "epsilons must be strictly increasing"));
            }
        }
        let bound = Self::epsilon_bound(&alpha);
        if *epsilons.last().expect("non-empty") >= bound {
            return Err(Error::invalid(
                "epsilons",
                "every eps_i must stay below min(1, 1/alpha - 1) (below 1 when alpha = 0)",
            ));
        }
        Ok(AdversarialParams { alpha, beta, epsilons })
    }

    /// The canonical choice `eps_i = (i + 1) * c / (beta + 2)` with `c`
    /// half the allowed bound: strictly increasing, comfortably inside
    /// the constraint, and exactly representable.
    pub fn canonical(alpha: Rat, beta: usize) -> Result<Self> {
        let c = Self::epsilon_bound(&alpha) / rat_int(2);
        let denom = rat_int(beta as i64 + 2);
        let epsilons = (0..=beta).map(|i| rat_int(i as i64 + 1) * &c / &denom).collect();
        AdversarialParams::new(alpha, beta, epsilons)
    }

    fn epsilon_bound(alpha: &Rat) -> Rat {
        if alpha.is_zero() {
            Rat::one()
        } else {
            let inv = recip(alpha) - Rat::one();
            if inv < Rat::one() {
                inv
            } else {
                Rat::one()
            }
        }
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn epsilons(&self) -> &[Rat] {
        &self.epsilons
    }
}

/// An adversarial instance plus its two reference selections: the trap
/// `greedy_target` (the heavy first edges of agents `1..=beta`, exactly
/// what both greedy heuristics return) and the `motorway` selection
/// whose egalitarian cost stays at most `3 + alpha * beta`.
#[derive(Clone, Debug)]
pub struct AdversarialFamily {
    pub instance: NtpInstance,
    pub greedy_target: Vec<usize>,
    pub motorway: Vec<usize>,
}

/// Builds the adversarial instance for `params`.
///
/// Agents `i = 0..=beta` travel `s_i` to `t_i`. The direct route
/// `s_i - v_i_1 - ... - v_i_beta - t_i` has weight `1 + eps_i` on its
/// first edge and 1 elsewhere; hub edges `s_i - q` and `t_i - q'` and the
/// motorway `q - q_1 - ... - q_beta - q'` (all weight 1) offer the
/// alternative. Vertex declaration order is sources/targets, then route
/// vertices, then the hub; the greedy tie-break depends on it.
pub fn make_adversarial(params: &AdversarialParams) -> Result<AdversarialFamily> {
    let beta = params.beta;
    let mut names: Vec<String> = Vec::new();
    for i in 0..=beta {
        names.push(format!("s{i}"));
        names.push(format!("t{i}"));
    }
    let route_base = names.len();
    for i in 0..=beta {
        for j in 1..=beta {
            names.push(format!("v{i}_{j}"));
        }
    }
    let q = names.len();
    names.push("q".into());
    let q_prime = names.len();
    names.push("q'".into());
    let hub_base = names.len();
    for k in 1..=beta {
        names.push(format!("q{k}"));
    }

    let s = |i: usize| 2 * i;
    let t = |i: usize| 2 * i + 1;
    let v = |i: usize, j: usize| route_base + i * beta + (j - 1);
    let qk = |k: usize| hub_base + (k - 1);

    let mut edges: Vec<(usize, usize, Rat)> = Vec::new();
    for i in 0..=beta {
        edges.push((s(i), v(i, 1), Rat::one() + &params.epsilons[i]));
        for j in 1..beta {
            edges.push((v(i, j), v(i, j + 1), Rat::one()));
        }
        edges.push((v(i, beta), t(i), Rat::one()));
        edges.push((s(i), q, Rat::one()));
        edges.push((t(i), q_prime, Rat::one()));
    }
    edges.push((q, qk(1), Rat::one()));
    for k in 1..beta {
        edges.push((qk(k), qk(k + 1), Rat::one()));
    }
    edges.push((qk(beta), q_prime, Rat::one()));

    let graph = Graph::new(names, edges)?;
    let agents = (0..=beta).map(|i| (s(i), t(i))).collect();

    let mut greedy_target: Vec<usize> = (1..=beta)
        .map(|i| graph.edge_between(s(i), v(i, 1)).expect("route edge exists"))
        .collect();
    greedy_target.sort_unstable();
    let mut motorway: Vec<usize> = Vec::with_capacity(beta);
    motorway.push(graph.edge_between(q, qk(1)).expect("motorway edge exists"));
    for k in 1..beta {
        motorway.push(graph.edge_between(qk(k), qk(k + 1)).expect("motorway edge exists"));
    }
    motorway.sort_unstable();

    let instance = NtpInstance::new(graph, agents, params.alpha.clone(), beta)?;
    Ok(AdversarialFamily { instance, greedy_target, motorway })
}

/// Adds the best edge `beta` times (fewer if the graph runs out of
/// edges): each step discounts the edge minimizing the resulting cost,
/// smallest edge id on ties.
pub fn greedy_up(instance: &NtpInstance, objective: Objective) -> Solution {
    greedy_up_traced(instance, objective).0
}

/// [`greedy_up`] plus the cost trajectory, starting at the empty
/// selection's cost; costs never increase along it.
pub fn greedy_up_traced(instance: &NtpInstance, objective: Objective) -> (Solution, Vec<Rat>) {
    let l = instance.graph().edge_count();
    let steps = instance.beta().min(l);
    let mut selected = vec![false; l];
    let mut current: Vec<usize> = Vec::with_capacity(steps);
    let mut trajectory = vec![instance.evaluate(&current).cost(objective).clone()];
    for _ in 0..steps {
        let mut best: Option<(Rat, usize)> = None;
        for e in 0..l {
            if selected[e] {
                continue;
            }
            current.push(e);
            let cost = instance.evaluate(&current).cost(objective).clone();
            current.pop();
            if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                best = Some((cost, e));
            }
        }
        let (cost, e) = best.expect("at least one unselected edge");
        selected[e] = true;
        current.push(e);
        trajectory.push(cost);
    }
    (instance.evaluate(&current), trajectory)
}

/// Discounts everything, then removes the least useful edge until only
/// `beta` remain: each step drops the edge minimizing the resulting
/// cost, smallest edge id on ties. A budget of `beta > l` removes
/// nothing and marks the solution as clamped.
pub fn greedy_down(instance: &NtpInstance, objective: Objective) -> Solution {
    greedy_down_traced(instance, objective).0
}

/// [`greedy_down`] plus the cost trajectory, starting at the full
/// selection's cost; costs never decrease along it.
pub fn greedy_down_traced(instance: &NtpInstance, objective: Objective) -> (Solution, Vec<Rat>) {
    let l = instance.graph().edge_count();
    let beta = instance.beta();
    let mut kept: Vec<bool> = vec![true; l];
    let mut count = l;
    let all: Vec<usize> = (0..l).collect();
    let mut trajectory = vec![instance.evaluate(&all).cost(objective).clone()];
    if beta >= l {
        let mut solution = instance.evaluate(&all);
        solution.clamped = beta > l;
        return (solution, trajectory);
    }
    while count > beta {
        let mut best: Option<(Rat, usize)> = None;
        for e in 0..l {
            if !kept[e] {
                continue;
            }
            kept[e] = false;
            let candidate: Vec<usize> = (0..l).filter(|&x| kept[x]).collect();
            let cost = instance.evaluate(&candidate).cost(objective).clone();
            kept[e] = true;
            if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                best = Some((cost, e));
            }
        }
        let (cost, e) = best.expect("still removable edges");
        kept[e] = false;
        count -= 1;
        trajectory.push(cost);
    }
    let final_sel: Vec<usize> = (0..l).filter(|&x| kept[x]).collect();
    (instance.evaluate(&final_sel), trajectory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Selection;
    use crate::oracles::oracle_ntp;
    use crate::rational::{one_half, rat};
    use crate::samples;

    fn spec_family() -> AdversarialFamily {
        let params =
            AdversarialParams::new(one_half(), 2, vec![rat(1, 10), rat(2, 10), rat(3, 10)]).unwrap();
        make_adversarial(&params).unwrap()
    }

    #[test]
    fn adversarial_shape_and_reference_costs() {
        let family = spec_family();
        let net = &family.instance;
        assert_eq!(net.graph().vertex_count(), 16);
        assert_eq!(net.graph().edge_count(), 18);
        assert_eq!(net.agents().len(), 3);
        // Walking: the direct route, beta + 1 edges, one slightly heavy.
        assert_eq!(net.walking_cost(0), rat(31, 10));
        assert_eq!(net.walking_cost(2), rat(33, 10));

        // The trap: agents 1..=beta discounted on their heavy edge, agent
        // 0 left walking; egalitarian cost beta + 1 + eps_0.
        let trap = net.evaluate(&family.greedy_target);
        assert_eq!(trap.max, rat(31, 10));
        // Utilitarian cost exceeds (1 + beta) * beta = 6.
        assert!(trap.total > rat_int(6));

        // The motorway keeps everyone within 3 + alpha * beta.
        let motorway = net.evaluate(&family.motorway);
        assert!(motorway.max <= rat_int(3) + one_half() * rat_int(2));
    }

    #[test]
    fn both_greedys_fall_into_the_trap() {
        let family = spec_family();
        for objective in Objective::BOTH {
            let up = greedy_up(&family.instance, objective);
            assert_eq!(up.selection, Selection::Edges(family.greedy_target.clone()), "{objective:?} up");
            let down = greedy_down(&family.instance, objective);
            assert_eq!(down.cost(objective), up.cost(objective), "{objective:?} down cost");
            assert_eq!(down.selection, Selection::Edges(family.greedy_target.clone()), "{objective:?} down");
        }
        let up = greedy_up(&family.instance, Objective::Egalitarian);
        assert_eq!(up.max, rat(31, 10));
    }

    #[test]
    fn canonical_epsilons_satisfy_the_constraints() {
        for (num, den, beta) in [(1i64, 2i64, 2usize), (3, 4, 3), (0, 1, 2), (1, 10, 4)] {
            let params = AdversarialParams::canonical(rat(num, den), beta).unwrap();
            assert_eq!(params.epsilons().len(), beta + 1);
        }
        // High alpha shrinks the bound: eps must stay below 1/alpha - 1.
        let tight = AdversarialParams::canonical(rat(4, 5), 2).unwrap();
        assert!(*tight.epsilons().last().unwrap() < rat(1, 4));
    }

    #[test]
    fn bad_params_are_rejected() {
        let eps = |v: &[(i64, i64)]| v.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>();
        assert!(AdversarialParams::new(one_half(), 0, eps(&[(1, 10)])).is_err());
        assert!(AdversarialParams::new(one_half(), 2, eps(&[(1, 10), (2, 10)])).is_err());
        assert!(AdversarialParams::new(one_half(), 1, eps(&[(0, 1), (1, 10)])).is_err());
        assert!(AdversarialParams::new(one_half(), 1, eps(&[(2, 10), (1, 10)])).is_err());
        assert!(AdversarialParams::new(rat(4, 5), 1, eps(&[(1, 10), (1, 4)])).is_err());
        assert!(AdversarialParams::new(rat_int(1), 1, eps(&[(1, 10), (2, 10)])).is_err());
    }

    #[test]
    fn greedy_up_finds_the_obvious_optimum() {
        let net = samples::six_vertex_network();
        let sol = greedy_up(&net, Objective::Egalitarian);
        assert_eq!(sol.selection, Selection::Edges(vec![2, 5]));
        assert_eq!(sol.max, rat(11, 2));
        assert!(sol.feasible);
    }

    #[test]
    fn single_edge_graph_takes_its_edge() {
        let net = samples::unit_path4_alpha0();
        let sol = greedy_up(&net, Objective::Utilitarian);
        assert_eq!(sol.selection.len(), 1);
        let zero = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 0).unwrap();
        assert_eq!(greedy_up(&zero, Objective::Egalitarian).selection, Selection::Edges(vec![]));
    }

    #[test]
    fn trajectories_are_monotone() {
        let net = samples::six_vertex_network();
        let (_, up) = greedy_up_traced(&net, Objective::Egalitarian);
        assert_eq!(up.len(), 3);
        assert!(up.windows(2).all(|w| w[1] <= w[0]));
        let (_, down) = greedy_down_traced(&net, Objective::Egalitarian);
        assert_eq!(down.len(), 5); // full selection plus four removals
        assert!(down.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn greedy_down_clamps_oversized_budgets() {
        let net = samples::six_vertex_network();
        let same = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 6).unwrap();
        let full = greedy_down(&same, Objective::Egalitarian);
        assert_eq!(full.selection.len(), 6);
        assert!(!full.clamped);

        let over = NtpInstance::new(net.graph().clone(), net.agents().to_vec(), net.alpha().clone(), 9).unwrap();
        let clamped = greedy_down(&over, Objective::Egalitarian);
        assert_eq!(clamped.selection.len(), 6);
        assert!(clamped.clamped);
        assert!(clamped.feasible);
    }

    #[test]
    fn greedy_never_beats_the_oracle() {
        let net = samples::six_vertex_network();
        for objective in Objective::BOTH {
            let optimum = oracle_ntp(&net, objective).unwrap().optimum;
            assert!(*greedy_up(&net, objective).cost(objective) >= optimum);
            assert!(*greedy_down(&net, objective).cost(objective) >= optimum);
        }
    }
}
