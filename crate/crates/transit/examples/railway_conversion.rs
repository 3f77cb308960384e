//! Reframe edge discounting as railway line selection.
//!
//! On unit-weight networks, discounting an edge is the same as building a
//! railway segment on it: riders pay 1 per built edge and a penalty zeta
//! per unbuilt edge, and zeta = 1 / alpha makes the two cost models agree
//! up to a constant factor. A free ride (alpha = 0) maps to an infinite
//! penalty, where unbuilt edges are simply unusable.
//!
//! Run with: cargo run --example railway_conversion

use transit::model::{Graph, NtpInstance, Objective};
use transit::rational::{fmt_rat, one_half, rat_int, Cost};
use transit::reductions::{ntp_to_rdp, rdp_cost, rdp_feasible};

fn show_cost(cost: &Cost) -> String {
    match cost {
        Cost::Finite(value) => fmt_rat(value),
        Cost::Infinite => "inf".into(),
    }
}

fn main() {
    let names = ["s", "a", "b", "t"].map(String::from).to_vec();
    let edges = vec![(0, 1, rat_int(1)), (1, 2, rat_int(1)), (2, 3, rat_int(1))];
    let graph = Graph::new(names, edges).unwrap();
    let net = NtpInstance::new(graph, vec![(0, 3)], one_half(), 1).unwrap();

    println!("unit path s - a - b - t, one rider s -> t, alpha = 1/2, budget 1");
    let rdp = ntp_to_rdp(&net).expect("unit weights convert cleanly");
    println!(
        "converted railway instance: penalty zeta = {}, weight budget {}",
        show_cost(rdp.zeta()),
        fmt_rat(rdp.budget()),
    );
    for (u, v, tau) in rdp.demands() {
        println!("  demand {} -> {} with intensity {}", rdp.graph().name(u), rdp.graph().name(v), fmt_rat(&tau));
    }

    println!();
    println!("costs double but comparisons survive (zeta = 2 means unbuilt edges cost 2):");
    for selection in [vec![], vec![0], vec![1]] {
        let before = net.evaluate(&selection).max;
        let after = rdp_cost(&rdp, &selection, Objective::Egalitarian);
        println!(
            "  build {:?}: discounted cost {}, railway cost {} (feasible: {})",
            selection,
            fmt_rat(&before),
            show_cost(&after),
            rdp_feasible(&rdp, &selection),
        );
    }
    println!("every selection satisfies railway = 2 x discounted, so optima correspond.");

    println!();
    let free = NtpInstance::new(
        net.graph().clone(),
        net.agents().to_vec(),
        transit::rational::rat(0, 1),
        1,
    )
    .unwrap();
    let rdp = ntp_to_rdp(&free).expect("unit weights convert cleanly");
    println!("with alpha = 0 the penalty becomes {}:", show_cost(rdp.zeta()));
    println!(
        "  build one edge only: railway cost {} (the rider cannot cross unbuilt track)",
        show_cost(&rdp_cost(&rdp, &[0], Objective::Egalitarian)),
    );
    println!(
        "  build the whole path: railway cost {}",
        show_cost(&rdp_cost(&rdp, &[0, 1, 2], Objective::Egalitarian)),
    );
}
