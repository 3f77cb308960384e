//! Solvers specific to stop placement on a line.
//!
//! The utilitarian objective decomposes over consecutive open stops.
//! For an agent `(s, t)` and consecutive open stops `h < k`, the change
//! in the agent's cost attributable to that pair depends only on `h` and
//! `k`, never on stops further away:
//!
//! * pair outside the trip (`t <= h` or `s >= k`): no change;
//! * pair covers the whole trip (`h <= s`, `t <= k`): ride `h` to `k`
//!   with overshoot on both sides, or ignore the bus;
//! * pair covers `s` only (`h <= s < k < t`): board at `h` or walk
//!   forward to `k`;
//! * pair covers `t` only (`s < h < t <= k`): alight at `h` and walk, or
//!   ride through to `k` and walk back;
//! * pair strictly inside (`s < h`, `k < t`): the agent passes both
//!   stops anyway, so riding the gap always saves `(1 - alpha)(k - h)`.
//!
//! Every combination of these local choices is realizable by a single
//! boarding interval, so summing the per-pair minima is exact. That
//! yields `c(S) = sum of walking costs + sum of pair gains`, and
//! [`ptp_utilitarian_dp`] minimizes the second sum with a suffix dynamic
//! program over (stop, stops used). The result is asserted against a
//! direct evaluation of the returned stop set on every call, and the
//! test suite checks it against the exhaustive oracle.
//!
//! No such decomposition is known for the egalitarian objective; in
//! fact, selecting stops for it is NP-complete (reductions from vertex
//! cover, see the `reductions` module). [`ptp_egalitarian_exact`] falls
//! back to pruned exhaustive search.

use crate::error::{Error, Result};
use crate::model::{PtpInstance, Solution};
use crate::rational::Rat;
use num::{One, Zero};

/// The set of agent terminals, deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalSet {
    positions: Vec<Rat>,
}

impl TerminalSet {
    pub fn positions(&self) -> &[Rat] {
        &self.positions
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.positions.binary_search(x).is_ok()
    }
}

/// Collects every source and target of `instance` into a [`TerminalSet`].
pub fn terminal_set(instance: &PtpInstance) -> TerminalSet {
    let mut positions: Vec<Rat> = Vec::with_capacity(2 * instance.agents().len());
    for (s, t) in instance.agents() {
        positions.push(s.clone());
        positions.push(t.clone());
    }
    positions.sort();
    positions.dedup();
    TerminalSet { positions }
}

/// Replaces the candidate stops by the agents' terminals.
///
/// For the utilitarian objective this loses nothing: some optimal stop
/// set consists of terminals only, so the restricted instance has the
/// same optimum value. The egalitarian objective enjoys no such
/// guarantee and can strictly worsen under restriction (with stops
/// `{0, 1, 3/2, 2}` and unit agents `(0,1)`, `(0,2)` at `alpha = 0`,
/// the egalitarian optimum is `1/2` at `{0, 3/2}` but only `1` over
/// terminals), so apply it to utilitarian runs only.
///
/// Every terminal must already be a candidate stop; otherwise the
/// restriction is undefined and an inapplicable error is returned.
pub fn restrict_to_terminals(instance: &PtpInstance) -> Result<PtpInstance> {
    let terminals = terminal_set(instance);
    for x in terminals.positions() {
        if instance.stops().binary_search(x).is_err() {
            return Err(Error::Inapplicable(format!(
                "terminal {} is not a candidate stop, cannot restrict",
                crate::rational::fmt_rat(x)
            )));
        }
    }
    instance.with_stops(terminals.positions.clone())
}

/// Exact utilitarian solver: dynamic program over the pairwise gain
/// table described in the module docs. Runs in `O(n m^2 + m^2 beta)`
/// for `n` agents and `m` candidate stops.
///
/// Among equal-cost optima the lexicographically smallest stop set is
/// returned; in particular, when opening stops cannot help at all the
/// witness is the empty set.
pub fn ptp_utilitarian_dp(instance: &PtpInstance) -> Solution {
    let stops = instance.stops();
    let m = stops.len();
    let beta = instance.beta().min(m);
    let walking_total: Rat = (0..instance.agents().len()).map(|i| instance.walking_cost(i)).sum();
    if beta < 2 {
        // A lone stop never changes any journey, so the lex-smallest
        // optimum is the empty selection.
        let solution = instance.evaluate(&[]);
        debug_assert_eq!(solution.total, walking_total);
        return solution;
    }

    // gain[j][j'] for j < j': total cost change when j and j' are
    // consecutive open stops. Always <= 0.
    let gain: Vec<Vec<Rat>> = (0..m)
        .map(|j| {
            (0..m)
                .map(|j2| if j < j2 { pair_gain_total(instance, &stops[j], &stops[j2]) } else { Rat::zero() })
                .collect()
        })
        .collect();

    // suffix[j][r]: best achievable gain from the chain continuing past
    // stop j when j is the r-th open stop. Either the chain ends at j
    // (gain 0) or some j' > j comes next.
    let mut suffix = vec![vec![Rat::zero(); beta + 1]; m];
    for r in (1..beta).rev() {
        for j in (0..m).rev() {
            let mut best = Rat::zero();
            for j2 in j + 1..m {
                let candidate = &gain[j][j2] + &suffix[j2][r + 1];
                if candidate < best {
                    best = candidate;
                }
            }
            suffix[j][r] = best;
        }
    }

    let mut total_gain = Rat::zero();
    let mut first = None;
    for j in 0..m {
        if suffix[j][1] < total_gain {
            total_gain = suffix[j][1].clone();
            first = Some(j);
        }
    }

    let mut chosen: Vec<Rat> = Vec::new();
    if let Some(mut j) = first {
        // Walk the argmin chain, preferring to stop as soon as the
        // remaining gain is zero and taking the smallest next stop
        // otherwise; both choices keep the witness lexicographically
        // smallest.
        chosen.push(stops[j].clone());
        let mut r = 1;
        while !suffix[j][r].is_zero() {
            let next = (j + 1..m)
                .find(|&j2| &gain[j][j2] + &suffix[j2][r + 1] == suffix[j][r])
                .expect("suffix value is attained by some continuation");
            chosen.push(stops[next].clone());
            j = next;
            r += 1;
        }
    }

    let solution = instance.evaluate(&chosen);
    assert_eq!(
        solution.total,
        walking_total + total_gain,
        "pairwise decomposition must match direct evaluation"
    );
    solution
}

/// Total cost change across all agents when `h < k` are consecutive
/// open stops.
fn pair_gain_total(instance: &PtpInstance, h: &Rat, k: &Rat) -> Rat {
    instance
        .agents()
        .iter()
        .map(|(s, t)| pair_gain(s, t, instance.alpha(), h, k))
        .sum()
}

/// Cost change for one agent `(s, t)` from the consecutive open pair
/// `h < k`; the five cases from the module docs.
fn pair_gain(s: &Rat, t: &Rat, alpha: &Rat, h: &Rat, k: &Rat) -> Rat {
    if t <= h || s >= k {
        return Rat::zero();
    }
    let span = k - h;
    if h <= s && t <= k {
        let through = (s - h) + alpha * &span + (k - t) - (t - s);
        through.min(Rat::zero())
    } else if h <= s {
        let board = (s - h) + alpha * &span;
        let walk = k - s;
        board.min(walk.clone()) - walk
    } else if t <= k {
        let through = alpha * &span + (k - t);
        let walk = t - h;
        through.min(walk.clone()) - walk
    } else {
        (alpha - Rat::one()) * span
    }
}

/// Exact egalitarian solver: branch-and-bound over stop subsets of size
/// at most `beta`, explored in lexicographic order so the first optimum
/// found is the lexicographically smallest.
///
/// Any journey's cost is at least `alpha` times its walking distance,
/// so `alpha * (max walking cost)` bounds every selection from below;
/// the search stops as soon as the incumbent reaches that bound.
/// Worst-case time is exponential in `beta`, which is expected: the
/// decision version of this problem is NP-complete.
pub fn ptp_egalitarian_exact(instance: &PtpInstance) -> Solution {
    let empty = instance.evaluate(&[]);
    let bound = instance.alpha() * &empty.max;
    let mut best = (empty.max.clone(), Vec::new());
    if best.0 > bound && instance.beta() > 0 {
        let mut current: Vec<Rat> = Vec::new();
        explore(instance, 0, &mut current, instance.beta(), &mut best, &bound);
    }
    instance.evaluate(&best.1)
}

/// Depth-first lexicographic walk over subsets; returns true once the
/// lower bound is attained and the search can stop.
fn explore(
    instance: &PtpInstance,
    start: usize,
    current: &mut Vec<Rat>,
    remaining: usize,
    best: &mut (Rat, Vec<Rat>),
    bound: &Rat,
) -> bool {
    if remaining == 0 {
        return false;
    }
    let stops = instance.stops();
    for j in start..stops.len() {
        current.push(stops[j].clone());
        let max = instance.evaluate(current).max;
        if max < best.0 {
            *best = (max, current.clone());
            if best.0 == *bound {
                current.pop();
                return true;
            }
        }
        if explore(instance, j + 1, current, remaining - 1, best, bound) {
            current.pop();
            return true;
        }
        current.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Selection;
    use crate::oracles::oracle_ptp;
    use crate::rational::{rat, rat_int};
    use crate::samples;
    use crate::Objective;

    fn stops(sol: &Solution) -> Vec<Rat> {
        match &sol.selection {
            Selection::Stops(v) => v.clone(),
            Selection::Edges(_) => panic!("expected stops"),
        }
    }

    #[test]
    fn dp_solves_the_four_agent_line() {
        let line = samples::four_agent_line();
        let sol = ptp_utilitarian_dp(&line);
        assert_eq!(sol.total, rat(23, 2));
        // {1,4} and {1,5} are both optimal; lex tie-break picks {1,4}.
        assert_eq!(stops(&sol), vec![rat_int(1), rat_int(4)]);
        let oracle = oracle_ptp(&line, Objective::Utilitarian).unwrap();
        assert_eq!(oracle.optimum, sol.total);
        assert!(oracle.witnesses.contains(&stops(&sol)));
    }

    #[test]
    fn dp_with_tiny_budget_walks() {
        let line = samples::four_agent_line();
        for beta in [0usize, 1] {
            let small =
                PtpInstance::new(line.stops().to_vec(), line.agents().to_vec(), line.alpha().clone(), beta)
                    .unwrap();
            let sol = ptp_utilitarian_dp(&small);
            assert_eq!(sol.total, rat(35, 2));
            assert_eq!(stops(&sol), Vec::<Rat>::new());
        }
    }

    #[test]
    fn dp_matches_oracle_on_two_interval_line() {
        let line = samples::two_interval_line();
        let sol = ptp_utilitarian_dp(&line);
        assert_eq!(sol.total, rat_int(1));
        assert_eq!(stops(&sol), vec![rat_int(0), rat_int(1)]);
        let oracle = oracle_ptp(&line, Objective::Utilitarian).unwrap();
        assert_eq!(oracle.optimum, sol.total);
    }

    #[test]
    fn exact_egalitarian_on_the_four_agent_line() {
        let line = samples::four_agent_line();
        let sol = ptp_egalitarian_exact(&line);
        assert_eq!(sol.max, rat(7, 2));
        assert_eq!(stops(&sol), vec![rat_int(0), rat_int(5)]);
    }

    #[test]
    fn exact_egalitarian_on_the_two_interval_line() {
        let line = samples::two_interval_line();
        let sol = ptp_egalitarian_exact(&line);
        assert_eq!(sol.max, rat(1, 2));
        assert_eq!(stops(&sol), vec![rat_int(0), rat(3, 2)]);
    }

    #[test]
    fn zero_budget_returns_walking() {
        let line = samples::four_agent_line();
        let zero =
            PtpInstance::new(line.stops().to_vec(), line.agents().to_vec(), line.alpha().clone(), 0).unwrap();
        let sol = ptp_egalitarian_exact(&zero);
        assert_eq!(sol.max, rat_int(6));
        assert_eq!(stops(&sol), Vec::<Rat>::new());
    }

    #[test]
    fn terminal_set_collects_and_sorts() {
        let line = samples::four_agent_line();
        let terminals = terminal_set(&line);
        let expected = vec![rat_int(0), rat(1, 2), rat_int(1), rat(9, 2), rat_int(5), rat_int(6)];
        assert_eq!(terminals.positions(), expected.as_slice());
        assert!(terminals.contains(&rat(9, 2)));
        assert!(!terminals.contains(&rat_int(3)));
    }

    #[test]
    fn restriction_needs_terminals_among_stops() {
        // Agent terminal 1/2 is not a candidate stop here.
        let line = samples::four_agent_line();
        assert!(matches!(restrict_to_terminals(&line), Err(crate::Error::Inapplicable(_))));
    }

    #[test]
    fn restriction_preserves_the_utilitarian_optimum() {
        let line = samples::two_interval_line();
        let restricted = restrict_to_terminals(&line).unwrap();
        assert_eq!(restricted.stops(), &[rat_int(0), rat_int(1), rat_int(2)]);
        assert_eq!(ptp_utilitarian_dp(&restricted).total, ptp_utilitarian_dp(&line).total);
        // Restricting an already-restricted instance changes nothing.
        let again = restrict_to_terminals(&restricted).unwrap();
        assert_eq!(again.stops(), restricted.stops());
    }

    #[test]
    fn restriction_can_worsen_the_egalitarian_optimum() {
        let line = samples::two_interval_line();
        let restricted = restrict_to_terminals(&line).unwrap();
        let before = ptp_egalitarian_exact(&line);
        let after = ptp_egalitarian_exact(&restricted);
        assert_eq!(before.max, rat(1, 2));
        assert_eq!(after.max, rat_int(1));
    }

    #[test]
    fn egalitarian_respects_the_discount_lower_bound() {
        let line = samples::four_agent_line();
        let sol = ptp_egalitarian_exact(&line);
        assert!(sol.max >= line.alpha() * &line.evaluate(&[]).max);
    }
}
