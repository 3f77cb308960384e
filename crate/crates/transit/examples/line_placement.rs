//! Place bus stops on a line under a budget.
//!
//! Four agents walk along a line with seven candidate stops. Opening a
//! pair of stops lets an agent walk to one stop, ride at a discount, and
//! walk on from the other. This example solves the same instance under
//! both objectives and shows why they pick different stops.
//!
//! Run with: cargo run --example line_placement

use transit::model::Selection;
use transit::ptp::{ptp_egalitarian_exact, ptp_utilitarian_dp};
use transit::rational::fmt_rat;
use transit::samples;

fn stops_of(selection: &Selection) -> String {
    match selection {
        Selection::Stops(stops) => {
            let parts: Vec<String> = stops.iter().map(fmt_rat).collect();
            format!("{{{}}}", parts.join(", "))
        }
        Selection::Edges(_) => unreachable!("line solvers select stops"),
    }
}

fn main() {
    let line = samples::four_agent_line();

    println!("candidate stops: 0..=6 (integers)");
    println!("discount factor: {}, budget: {} stops", fmt_rat(line.alpha()), line.beta());
    println!();
    for (i, (s, t)) in line.agents().iter().enumerate() {
        println!(
            "agent {i} travels {} -> {} (walking alone costs {})",
            fmt_rat(s),
            fmt_rat(t),
            fmt_rat(&line.walking_cost(i)),
        );
    }

    let fair = ptp_egalitarian_exact(&line);
    println!();
    println!("egalitarian optimum (minimize the worst agent):");
    println!("  open {} -> worst agent pays {}", stops_of(&fair.selection), fmt_rat(&fair.max));
    let costs: Vec<String> = fair.per_agent_costs.iter().map(fmt_rat).collect();
    println!("  per agent: {}", costs.join(", "));

    let cheap = ptp_utilitarian_dp(&line);
    println!();
    println!("utilitarian optimum (minimize the sum, via the pairwise dynamic program):");
    println!("  open {} -> total cost {}", stops_of(&cheap.selection), fmt_rat(&cheap.total));
    let costs: Vec<String> = cheap.per_agent_costs.iter().map(fmt_rat).collect();
    println!("  per agent: {}", costs.join(", "));

    println!();
    println!(
        "the fair placement costs {} in total, the cheap one pushes its worst agent to {}:",
        fmt_rat(&fair.total),
        fmt_rat(&cheap.max),
    );
    println!("neither placement wins under the other objective.");
}
