//! Exhaustive search as a certification tool.
//!
//! The oracles enumerate every feasible selection, so they are slow but
//! beyond doubt: their reports carry the optimum, every witness that
//! attains it, and the number of subsets explored. The fast solvers in
//! this crate are tested against these reports, and a cap keeps an
//! accidental combinatorial explosion from hanging the process.
//!
//! Run with: cargo run --example oracle_reports

use transit::model::Objective;
use transit::oracles::{oracle_ntp_capped, oracle_ptp, DEFAULT_ORACLE_CAP};
use transit::rational::fmt_rat;
use transit::samples;

fn main() {
    let line = samples::four_agent_line();

    let fair = oracle_ptp(&line, Objective::Egalitarian).expect("within the cap");
    println!("four-agent line, egalitarian objective:");
    println!("  optimum {} after exploring {} stop subsets", fmt_rat(&fair.optimum), fair.explored);
    for witness in &fair.witnesses {
        let stops: Vec<String> = witness.iter().map(fmt_rat).collect();
        println!("  witness: {{{}}}", stops.join(", "));
    }
    println!("  a unique witness: only {{0, 5}} treats every agent equally.");

    let cheap = oracle_ptp(&line, Objective::Utilitarian).expect("within the cap");
    println!();
    println!("same line, utilitarian objective:");
    println!("  optimum {} with {} witnesses:", fmt_rat(&cheap.optimum), cheap.witnesses.len());
    for witness in &cheap.witnesses {
        let stops: Vec<String> = witness.iter().map(fmt_rat).collect();
        println!("  witness: {{{}}}", stops.join(", "));
    }
    println!("  ties happen; solvers break them toward the lexicographically smallest witness.");

    println!();
    let net = samples::six_vertex_network();
    let report = oracle_ntp_capped(&net, Objective::Egalitarian, DEFAULT_ORACLE_CAP)
        .expect("within the cap");
    println!(
        "six-vertex network: optimum {} over {} edge subsets, witness edges {:?}",
        fmt_rat(&report.optimum),
        report.explored,
        report.witnesses[0],
    );

    match oracle_ntp_capped(&net, Objective::Egalitarian, 10) {
        Ok(_) => unreachable!("the cap is below the subset count"),
        Err(e) => {
            println!();
            println!("with the cap forced down to 10 the oracle refuses to start:");
            println!("  {e}");
        }
    }
}
