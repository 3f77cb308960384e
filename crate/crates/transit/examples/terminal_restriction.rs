//! When can stop placement ignore positions nobody starts or ends at?
//!
//! Restricting the candidate stops to the agents' own terminals shrinks
//! the search space without changing the utilitarian optimum: any ride
//! interval can be trimmed to start and end at terminals without making
//! the sum worse. The egalitarian objective enjoys no such luxury, and
//! the restriction only applies at all when every terminal is itself a
//! candidate stop.
//!
//! Run with: cargo run --example terminal_restriction

use transit::ptp::{ptp_egalitarian_exact, ptp_utilitarian_dp, restrict_to_terminals, terminal_set};
use transit::rational::fmt_rat;
use transit::samples;

fn main() {
    let line = samples::two_interval_line();
    let stops: Vec<String> = line.stops().iter().map(fmt_rat).collect();
    println!("stops {{{}}}, agents (0,1) and (0,2), free rides, budget 2", stops.join(", "));

    let terminals = terminal_set(&line);
    let positions: Vec<String> = terminals.positions().iter().map(fmt_rat).collect();
    println!("terminals: {{{}}}", positions.join(", "));

    let restricted = restrict_to_terminals(&line).expect("every terminal is a stop here");
    println!();
    println!("utilitarian optima agree:");
    println!("  full line: {}", fmt_rat(&ptp_utilitarian_dp(&line).total));
    println!("  terminals only: {}", fmt_rat(&ptp_utilitarian_dp(&restricted).total));

    println!();
    println!("the egalitarian objective needs the half stop:");
    println!("  full line: {}", fmt_rat(&ptp_egalitarian_exact(&line).max));
    println!("  terminals only: {}", fmt_rat(&ptp_egalitarian_exact(&restricted).max));
    println!("  opening {{0, 3/2}} splits the pain evenly; without 3/2 someone pays double.");

    println!();
    let four = samples::four_agent_line();
    match restrict_to_terminals(&four) {
        Ok(_) => unreachable!("agent terminals at half positions are not candidate stops"),
        Err(e) => println!("on the four-agent line the restriction refuses to run:\n  {e}"),
    }
}
