//! Split one budget between two agents.
//!
//! Each agent's options compress into a budget mapping: the cheapest cost
//! reachable with b discounts, for every b. Two mappings combine with
//! merge_add (they pay separately) or merge_max (only the worst matters),
//! each minimizing over all ways to split the budget. The two-agent
//! solver builds on exactly these merges.
//!
//! Run with: cargo run --example two_agents

use transit::budget_dijkstra::BudgetMapping;
use transit::model::{Graph, NtpInstance, Objective, Selection};
use transit::multi_agent::{merge_add, merge_max, solve_two_agents};
use transit::rational::{fmt_rat, rat_int};

fn show(label: &str, mu: &BudgetMapping) {
    let values: Vec<String> = mu.values().iter().map(fmt_rat).collect();
    println!("  {label}: [{}]", values.join(", "));
}

fn main() {
    println!("two budget mappings over budgets 0, 1, 2:");
    let mu1 = BudgetMapping::new(vec![rat_int(4), rat_int(1), rat_int(1)]).unwrap();
    let mu2 = BudgetMapping::new(vec![rat_int(3), rat_int(2), rat_int(0)]).unwrap();
    show("mu1", &mu1);
    show("mu2", &mu2);

    let added = merge_add(&mu1, &mu2).unwrap();
    let maxed = merge_max(&mu1, &mu2).unwrap();
    println!();
    println!("merging minimizes over every split of the shared budget:");
    show("sum ", &added);
    show("max ", &maxed);
    println!("  at budget 2 both merges split evenly: the sum pays 1 + 2 = 3,");
    println!("  the bottleneck pays max(1, 2) = 2.");

    // The same machinery solves a network with two riders.
    let names = ["s", "v1", "v2", "v3", "v4", "t"].map(String::from).to_vec();
    let edges = vec![
        (0, 1, rat_int(1)),
        (0, 2, rat_int(5)),
        (1, 2, rat_int(2)),
        (1, 3, rat_int(3)),
        (2, 4, rat_int(2)),
        (2, 5, rat_int(7)),
    ];
    let graph = Graph::new(names, edges).unwrap();
    let net = NtpInstance::new(graph, vec![(0, 5), (3, 4)], transit::rational::one_half(), 2).unwrap();

    println!();
    println!("six-vertex network, agents s -> t and v3 -> v4, budget 2:");
    for objective in Objective::BOTH {
        let solution = solve_two_agents(&net, objective).unwrap();
        let costs: Vec<String> = solution.per_agent_costs.iter().map(fmt_rat).collect();
        let Selection::Edges(edges) = &solution.selection else {
            unreachable!("network solvers select edges");
        };
        println!(
            "  {} optimum {} with per-agent costs {} (discounting edges {:?})",
            match objective {
                Objective::Egalitarian => "egalitarian",
                Objective::Utilitarian => "utilitarian",
            },
            fmt_rat(solution.cost(objective)),
            costs.join(", "),
            edges,
        );
    }
}
